//! Garside element, simple elements, exponent, Δ-purity and decomposability
//! for the structure monoid of a non-degenerate involutive braided solution.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::presentation::TableauPresentation;
use crate::reversing::{ComplementTable, RewriteSystem, Word};
use crate::solution::Solution;

/// The simple elements: lcms of non-empty generator subsets, plus `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleSet {
    /// Canonical (lexicographically least) words, sorted by length then word.
    pub elements: Vec<Word>,
    /// For each element, one generator subset whose lcm it is.
    pub generating_subsets: Vec<Vec<usize>>,
}

impl SimpleSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of a canonical word.
    pub fn index_of(&self, canonical: &Word) -> Option<usize> {
        self.elements.iter().position(|w| w == canonical)
    }
}

/// The sets `Y_x = (M \ x) − {ε}` and what they say about Δ-purity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityReport {
    /// `closure_sets[x]`, sorted.
    pub closure_sets: Vec<Vec<usize>>,
    pub delta_pure: bool,
    /// The distinct closure sets, ordered by least element.
    pub partition: Vec<Vec<usize>>,
    /// `Δ_x = ∨ Y_x` as canonical words.
    pub delta_x: Vec<Word>,
    /// Whether `Δ_x = Δ_y` as monoid elements exactly when `Y_x = Y_y`.
    pub elementwise_agrees: bool,
}

impl PurityReport {
    /// Distinct closure sets are equal or disjoint and cover `X`.
    pub fn is_partition(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for block in &self.partition {
            for &x in block {
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// The structure monoid of a non-degenerate, involutive, braided solution,
/// with its complement table and word-equality oracle.
#[derive(Clone, Debug)]
pub struct StructureMonoid {
    solution: Solution,
    table: ComplementTable,
    presentation: TableauPresentation,
    rewrite: RewriteSystem,
}

impl StructureMonoid {
    pub fn new(sol: &Solution) -> Result<Self> {
        sol.require_garside_input()?;
        let presentation = TableauPresentation::from_solution(sol)?;
        Ok(StructureMonoid {
            solution: sol.clone(),
            table: ComplementTable::new(sol),
            rewrite: RewriteSystem::new(&presentation),
            presentation,
        })
    }

    pub fn n(&self) -> usize {
        self.solution.n()
    }

    pub fn solution(&self) -> &Solution {
        &self.solution
    }

    pub fn table(&self) -> &ComplementTable {
        &self.table
    }

    pub fn presentation(&self) -> &TableauPresentation {
        &self.presentation
    }

    pub fn rewrite(&self) -> &RewriteSystem {
        &self.rewrite
    }

    /// `Δ = x_1 ∨ .. ∨ x_n`.
    pub fn garside_element(&self) -> Word {
        let all: Vec<usize> = (0..self.n()).collect();
        self.table.multi_lcm(&all)
    }

    /// Every generator divides `Δ` on both sides.
    pub fn generators_divide_delta(&self, delta: &Word) -> Result<bool> {
        let class = self.rewrite.class(delta)?;
        let n = self.n();
        let mut left = vec![false; n];
        let mut right = vec![false; n];
        for w in &class {
            if let (Some(&a), Some(&b)) = (w.letters().first(), w.letters().last()) {
                left[a] = true;
                right[b] = true;
            }
        }
        Ok(left.into_iter().chain(right).all(|b| b))
    }

    /// Lcms of all `2ⁿ − 1` non-empty generator subsets, deduplicated by
    /// canonical word, plus `ε`.
    pub fn simples(&self) -> Result<SimpleSet> {
        let n = self.n();
        let mut found: BTreeMap<(usize, Word), Vec<usize>> = BTreeMap::new();
        found.insert((0, Word::empty()), Vec::new());
        for mask in 1u32..(1u32 << n) {
            let subset: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
            let canonical = self.rewrite.canonical(&self.table.multi_lcm(&subset))?;
            found.entry((canonical.len(), canonical)).or_insert(subset);
        }
        let (elements, generating_subsets) = found.into_iter().map(|((_, w), s)| (w, s)).unzip();
        Ok(SimpleSet { elements, generating_subsets })
    }

    /// For all simples `u`, `v`, the canonical form of `u \ v` is simple.
    pub fn simples_closed_under_complement(&self, simples: &SimpleSet) -> Result<bool> {
        for u in &simples.elements {
            for v in &simples.elements {
                let (c, _) = self.table.reverse_words(u, v);
                if simples.index_of(&self.rewrite.canonical(&c)?).is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `φ(w) = (w \ Δ) \ Δ`.
    pub fn phi(&self, w: &Word, delta: &Word) -> Word {
        let (c, _) = self.table.reverse_words(w, delta);
        self.table.reverse_words(&c, delta).0
    }

    /// `φ` as a permutation of the simples (indexed as in `simples`).
    pub fn phi_on_simples(&self, simples: &SimpleSet) -> Result<Permutation> {
        let delta = self.garside_element();
        let images = simples
            .elements
            .iter()
            .map(|s| {
                let image = self.rewrite.canonical(&self.phi(s, &delta))?;
                simples.index_of(&image).ok_or_else(|| {
                    Error::Internal(format!("phi({s}) = {image} is not a simple element"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
            .map_err(|_| Error::Internal("phi is not a bijection of the simples".into()))
    }

    /// Order of `φ` on the simples.
    pub fn exponent(&self) -> Result<usize> {
        let simples = self.simples()?;
        Ok(self.phi_on_simples(&simples)?.order())
    }

    /// Least `T ∋ x` with `b \ y ∈ T` for all `y ∈ T`, `b ≠ y`.
    pub fn complement_closure_set(&self, x: usize) -> Vec<usize> {
        let n = self.n();
        let mut member = vec![false; n];
        let mut stack = vec![x];
        member[x] = true;
        while let Some(y) = stack.pop() {
            for b in 0..n {
                if let Some(c) = self.table.right(b, y) {
                    if !member[c] {
                        member[c] = true;
                        stack.push(c);
                    }
                }
            }
        }
        (0..n).filter(|&i| member[i]).collect()
    }

    pub fn purity(&self) -> Result<PurityReport> {
        let n = self.n();
        let closure_sets: Vec<Vec<usize>> = (0..n).map(|x| self.complement_closure_set(x)).collect();
        let mut partition: Vec<Vec<usize>> = closure_sets.clone();
        partition.sort();
        partition.dedup();
        let delta_pure = partition.len() == 1;

        let delta_x = closure_sets
            .iter()
            .map(|ys| self.rewrite.canonical(&self.table.multi_lcm(ys)))
            .collect::<Result<Vec<_>>>()?;
        let elementwise_agrees = (0..n).all(|x| {
            (0..n).all(|y| (delta_x[x] == delta_x[y]) == (closure_sets[x] == closure_sets[y]))
        });
        Ok(PurityReport { closure_sets, delta_pure, partition, delta_x, elementwise_agrees })
    }

    pub fn is_delta_pure(&self) -> Result<bool> {
        Ok(self.purity()?.delta_pure)
    }
}

/// `S(Y × Y) ⊆ Y × Y`.
pub fn invariant_subset_check(sol: &Solution, subset: &[usize]) -> bool {
    let n = sol.n();
    let mut member = vec![false; n];
    for &y in subset {
        if y < n {
            member[y] = true;
        }
    }
    subset.iter().all(|&a| {
        subset.iter().all(|&b| {
            let (p, q) = sol.s(a, b);
            member[p] && member[q]
        })
    })
}

/// A bipartition `X = Y ⊔ Z` into non-empty invariant subsets, found by
/// scanning every subset `Y ∋ x_1`. `None` means indecomposable.
pub fn decomposition(sol: &Solution) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = sol.n();
    if n < 2 {
        return None;
    }
    let full: u32 = (1u32 << n) - 1;
    (1..full).step_by(2).find_map(|mask: u32| {
        let y: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        let z: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) == 0).collect();
        (invariant_subset_check(sol, &y) && invariant_subset_check(sol, &z)).then_some((y, z))
    })
}

pub fn is_indecomposable(sol: &Solution) -> bool {
    decomposition(sol).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::tests::{five_point_solution, three_cycle_solution};

    fn w(letters: &[usize]) -> Word {
        Word::new(letters.iter().map(|x| x - 1).collect())
    }

    #[test]
    fn three_cycle_garside_data() {
        let m = StructureMonoid::new(&three_cycle_solution()).unwrap();
        let delta = m.garside_element();
        assert_eq!(delta.len(), 3);
        for x in 1..=3 {
            assert!(m.rewrite().words_equal(&delta, &w(&[x, x, x])).unwrap());
        }
        let simples = m.simples().unwrap();
        let expected: Vec<Word> = vec![
            Word::empty(),
            w(&[1]),
            w(&[2]),
            w(&[3]),
            m.rewrite().canonical(&w(&[1, 1])).unwrap(),
            m.rewrite().canonical(&w(&[2, 2])).unwrap(),
            m.rewrite().canonical(&w(&[3, 3])).unwrap(),
            m.rewrite().canonical(&w(&[1, 1, 1])).unwrap(),
        ];
        let mut got = simples.elements.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        assert_eq!(m.exponent().unwrap(), 1);
        assert_eq!(m.phi(&w(&[1]), &delta), w(&[1]));
        assert_eq!(m.table().reverse_words(&w(&[1]), &delta).0.len(), 2);
        assert!(m.is_delta_pure().unwrap());
        assert_eq!(m.complement_closure_set(0), vec![0, 1, 2]);
    }

    #[test]
    fn complement_chain_of_three_cycle() {
        let m = StructureMonoid::new(&three_cycle_solution()).unwrap();
        let t = m.table();
        assert_eq!(t.reverse_words(&w(&[2]), &w(&[1])).0, w(&[3]));
        assert_eq!(t.reverse_words(&w(&[2, 1]), &w(&[1])).0, w(&[2]));
        assert_eq!(t.reverse_words(&w(&[2, 1, 3]), &w(&[1])).0, w(&[1]));
    }

    #[test]
    fn trivial_solutions() {
        let m = StructureMonoid::new(&Solution::trivial(1)).unwrap();
        assert_eq!(m.garside_element(), w(&[1]));
        assert_eq!(m.simples().unwrap().elements, vec![Word::empty(), w(&[1])]);
        assert_eq!(m.exponent().unwrap(), 1);
        assert!(m.is_delta_pure().unwrap());
        assert!(is_indecomposable(&Solution::trivial(1)));

        let m = StructureMonoid::new(&Solution::trivial(2)).unwrap();
        let p = m.purity().unwrap();
        assert!(!p.delta_pure);
        assert_eq!(p.closure_sets, vec![vec![0], vec![1]]);
    }

    #[test]
    fn five_point_solution_is_decomposable() {
        let s = five_point_solution();
        assert_eq!(decomposition(&s), Some((vec![0, 1, 2, 3], vec![4])));
        assert!(invariant_subset_check(&s, &[4]));
        assert!(invariant_subset_check(&s, &[0, 1, 2, 3, 4]));
        assert!(!invariant_subset_check(&three_cycle_solution(), &[0]));

        let m = StructureMonoid::new(&s).unwrap();
        let delta = m.garside_element();
        assert_eq!(delta.len(), 5);
        assert!(m.generators_divide_delta(&delta).unwrap());
        let p = m.purity().unwrap();
        assert!(!p.delta_pure && p.elementwise_agrees && p.is_partition(5));
    }

    #[test]
    fn disjoint_union_splits_closure_sets() {
        let u = Solution::disjoint_union(&three_cycle_solution(), &three_cycle_solution());
        let m = StructureMonoid::new(&u).unwrap();
        let p = m.purity().unwrap();
        assert_eq!(p.partition, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(!is_indecomposable(&u));
    }

    #[test]
    fn rejects_non_involutive_input() {
        let f = Permutation::from_cycles(5, &[vec![0, 3], vec![1, 2]]).unwrap();
        let g = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3]]).unwrap();
        let s = Solution::new(vec![g; 5], vec![f; 5]).unwrap();
        assert!(matches!(StructureMonoid::new(&s), Err(Error::Axiom(_))));
    }
}
