//! Permutation solutions `S(x, y) = (g(y), f(x))`.
//!
//! Non-degenerate iff `f` and `g` are bijective, braided iff `fg = gf`,
//! involutive iff `g = f⁻¹`. A braided but non-involutive one is handled by
//! identifying the orbits of `fg`: the induced solution on the orbits is
//! involutive and has the same structure group.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::presentation::{Pair, TableauPresentation};
use crate::reversing::Word;
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationSolution {
    f: Permutation,
    g: Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermAxioms {
    pub nondegenerate: bool,
    pub braided: bool,
    pub involutive: bool,
}

/// The orbits of `⟨fg⟩`, represented by their least elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    /// Classes sorted by least element; each class sorted.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[x]` is the index of the class containing `x`.
    pub class_of: Vec<usize>,
}

impl QuotientMap {
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// One cancellation `x y = x' y` obtained by applying `S` repeatedly to
/// `(x, y)`. `chain` lists the visited pairs, from `(from, via)` to
/// `(to, via)`; consecutive pairs are related by a defining relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancelLink {
    pub from: usize,
    pub to: usize,
    pub via: usize,
    pub chain: Vec<Pair>,
}

impl PermutationSolution {
    pub fn new(f: Permutation, g: Permutation) -> Result<Self> {
        if f.len() != g.len() {
            return Err(Error::SizeMismatch(format!(
                "f acts on {} points but g on {}",
                f.len(),
                g.len()
            )));
        }
        if f.is_empty() {
            return Err(Error::SizeMismatch("a solution needs n >= 1".into()));
        }
        Ok(PermutationSolution { f, g })
    }

    /// `S(i, j) = (f(j), f⁻¹(i))`.
    pub fn involutive_from(f: Permutation) -> Self {
        let g = f.clone();
        PermutationSolution { f: f.inverse(), g }
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn f(&self) -> &Permutation {
        &self.f
    }

    pub fn g(&self) -> &Permutation {
        &self.g
    }

    pub fn s(&self, x: usize, y: usize) -> Pair {
        (self.g.apply(y), self.f.apply(x))
    }

    pub fn axioms(&self) -> PermAxioms {
        PermAxioms {
            nondegenerate: true,
            braided: self.f.compose(&self.g) == self.g.compose(&self.f),
            involutive: self.g == self.f.inverse(),
        }
    }

    /// The general form: `g_x = g`, `f_y = f` for every `x`, `y`.
    pub fn to_solution(&self) -> Solution {
        let n = self.n();
        Solution::new(vec![self.g.clone(); n], vec![self.f.clone(); n])
            .expect("sizes agree by construction")
    }

    /// `S^k(x, y)` applied literally.
    pub fn iterate(&self, k: usize, x: usize, y: usize) -> Pair {
        (0..k).fold((x, y), |(a, b), _| self.s(a, b))
    }

    /// `S^k(x, y)` from powers of `f` and `g`; requires `fg = gf`.
    pub fn iterate_closed_form(&self, k: usize, x: usize, y: usize) -> Pair {
        let (f, g) = (&self.f, &self.g);
        if k.is_multiple_of(2) {
            let h = f.pow(k / 2).compose(&g.pow(k / 2));
            (h.apply(x), h.apply(y))
        } else {
            let first = f.pow((k - 1) / 2).compose(&g.pow(k.div_ceil(2)));
            let second = f.pow(k.div_ceil(2)).compose(&g.pow((k - 1) / 2));
            (first.apply(y), second.apply(x))
        }
    }

    /// Every non-trivial relation `x y = S(x, y)`, as a presentation. For a
    /// non-involutive solution some words occur in several relations.
    pub fn relations(&self) -> TableauPresentation {
        let rels = crate::presentation::defining_relations(&self.to_solution());
        TableauPresentation::new(self.n(), rels).expect("indices in range")
    }

    pub fn quotient_map(&self) -> QuotientMap {
        let fg = self.f.compose(&self.g);
        let classes = fg.cycles();
        let mut class_of = vec![0; self.n()];
        for (c, members) in classes.iter().enumerate() {
            for &x in members {
                class_of[x] = c;
            }
        }
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        QuotientMap { classes, class_of }
    }

    /// The induced solution `S'([x], [y]) = ([g(y)], [f(x)])` on the orbits of
    /// `fg`, labelled by class index. Requires `fg = gf`.
    pub fn quotient_solution(&self) -> Result<(QuotientMap, Solution)> {
        if !self.axioms().braided {
            return Err(Error::NotGarside("fg != gf, so S is not braided".into()));
        }
        let q = self.quotient_map();
        let induced = |p: &Permutation| {
            let images: Vec<usize> =
                (0..q.len()).map(|c| q.class_of[p.apply(q.representative(c))]).collect();
            Permutation::new(images)
        };
        let f = induced(&self.f)?;
        let g = induced(&self.g)?;
        let m = q.len();
        let sol = Solution::new(vec![g; m], vec![f; m])?;
        Ok((q, sol))
    }

    /// Relation chains showing `x = x2` in the structure group when
    /// `(fg)^k(x) = x2`. Returns `None` if `x` and `x2` lie in different
    /// orbits, and an empty list when they are equal.
    pub fn cancellation_witness(&self, x: usize, x2: usize) -> Option<Vec<CancelLink>> {
        let fg = self.f.compose(&self.g);
        let n = self.n();
        let k = (0..n).scan(x, |cur, step| {
            let here = *cur;
            *cur = fg.apply(*cur);
            Some((step, here))
        })
        .find(|&(_, here)| here == x2)
        .map(|(step, _)| step)?;
        if k == 0 {
            return Some(Vec::new());
        }
        if k % 2 == 1 {
            Some(vec![self.odd_link(x, k)])
        } else {
            let mid = fg.pow(k - 1).apply(x);
            Some(vec![self.odd_link(x, k - 1), self.odd_link(mid, 1)])
        }
    }

    /// For odd `k`, `y = f^{(k+1)/2} g^{(k-1)/2}(x)` satisfies
    /// `S^k(x, y) = ((fg)^k(x), y)`.
    fn odd_link(&self, x: usize, k: usize) -> CancelLink {
        debug_assert!(k % 2 == 1);
        let y = self.f.pow(k.div_ceil(2)).compose(&self.g.pow((k - 1) / 2)).apply(x);
        let mut chain = vec![(x, y)];
        for _ in 0..k {
            let &(a, b) = chain.last().unwrap();
            chain.push(self.s(a, b));
        }
        let to = chain.last().unwrap().0;
        CancelLink { from: x, to, via: y, chain }
    }
}

/// `Δ = x_{t_1}^{m_1} .. x_{t_k}^{m_k} x_{s_1} .. x_{s_l}` for the involutive
/// solution `S(i, j) = (f(j), f⁻¹(i))`: one power per non-trivial cycle of `f`
/// (at its least element, cycles ordered by least element), then the fixed
/// points in increasing order.
pub fn delta_from_cycles(f: &Permutation) -> Word {
    let cycles = f.cycles();
    let mut letters = Vec::with_capacity(f.len());
    for c in cycles.iter().filter(|c| c.len() > 1) {
        letters.extend(std::iter::repeat_n(c[0], c.len()));
    }
    letters.extend(cycles.iter().filter(|c| c.len() == 1).map(|c| c[0]));
    Word::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|i| i - 1).collect()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    fn braided_non_involutive() -> PermutationSolution {
        PermutationSolution::new(cyc(5, &[&[1, 4], &[2, 3]]), cyc(5, &[&[1, 2], &[3, 4]])).unwrap()
    }

    #[test]
    fn axioms() {
        let a = braided_non_involutive().axioms();
        assert!(a.nondegenerate && a.braided && !a.involutive);
        let p = braided_non_involutive();
        assert_eq!(p.f().compose(p.g()), cyc(5, &[&[1, 3], &[2, 4]]));

        let a = PermutationSolution::involutive_from(cyc(3, &[&[1, 2, 3]])).axioms();
        assert!(a.braided && a.involutive);
        let id = Permutation::identity(4);
        let a = PermutationSolution::new(id.clone(), id).unwrap().axioms();
        assert!(a.braided && a.involutive);
    }

    #[test]
    fn closed_form_powers() {
        let p = braided_non_involutive();
        assert_eq!(p.iterate_closed_form(0, 3, 1), (3, 1));
        assert_eq!(p.iterate_closed_form(1, 3, 1), p.s(3, 1));
        // (fg(1), fg(2)) = (3, 4)
        assert_eq!(p.iterate_closed_form(2, 0, 1), (2, 3));
        assert_eq!(p.iterate(2, 0, 1), (2, 3));
    }

    #[test]
    fn quotient_of_example() {
        let p = braided_non_involutive();
        let (q, sol) = p.quotient_solution().unwrap();
        assert_eq!(q.classes, vec![vec![0, 2], vec![1, 3], vec![4]]);
        assert!(sol.is_involutive() && sol.is_braided());
        let pres = TableauPresentation::from_solution(&sol).unwrap();
        assert_eq!(pres.len(), 3);
        assert!(pres.contains((0, 0), (1, 1)));
        assert!(pres.contains((0, 2), (2, 1)));
        assert!(pres.contains((1, 2), (2, 0)));
    }

    #[test]
    fn quotient_of_involutive_is_identity_relabeling() {
        let p = PermutationSolution::involutive_from(cyc(4, &[&[1, 2], &[3, 4]]));
        let (q, sol) = p.quotient_solution().unwrap();
        assert!(q.classes.iter().all(|c| c.len() == 1));
        assert_eq!(sol, p.to_solution());
    }

    #[test]
    fn cancellation_of_x1_and_x3() {
        let p = braided_non_involutive();
        let links = p.cancellation_witness(0, 2).unwrap();
        assert_eq!(links.len(), 1);
        assert_eq!(links[0].via, 3);
        assert_eq!(links[0].chain, vec![(0, 3), (2, 3)]);
        let r = p.relations();
        assert!(r.contains((0, 3), (2, 3)));
        assert_eq!(p.cancellation_witness(1, 1), Some(Vec::new()));
        assert_eq!(p.cancellation_witness(0, 1), None);
    }

    #[test]
    fn even_power_cancellation_uses_two_links() {
        // fg = (1,2,3) with f = fg, g = id: x1 ≡ x3 needs k = 2.
        let f = cyc(3, &[&[1, 2, 3]]);
        let p = PermutationSolution::new(f, Permutation::identity(3)).unwrap();
        let links = p.cancellation_witness(0, 2).unwrap();
        assert_eq!(links.len(), 2);
        assert_eq!((links[0].from, links[0].to), (0, 1));
        assert_eq!((links[1].from, links[1].to), (1, 2));
        let r = p.relations();
        for link in &links {
            for step in link.chain.windows(2) {
                assert!(r.contains(step[0], step[1]));
            }
        }
    }

    #[test]
    fn cycle_deltas() {
        let w = |l: &[usize]| Word::new(l.iter().map(|x| x - 1).collect());
        assert_eq!(delta_from_cycles(&cyc(3, &[&[1, 2, 3]])), w(&[1, 1, 1]));
        assert_eq!(delta_from_cycles(&Permutation::identity(2)), w(&[1, 2]));
        assert_eq!(delta_from_cycles(&cyc(3, &[&[1, 2]])), w(&[1, 1, 3]));
        assert_eq!(delta_from_cycles(&cyc(5, &[&[2, 5], &[1, 3]])), w(&[1, 1, 2, 2, 4]));
    }
}
