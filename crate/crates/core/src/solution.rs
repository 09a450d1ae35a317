//! Finite set-theoretic solutions `S(i, j) = (g_i(j), f_j(i))`.
//!
//! A [`Solution`] stores the two families of permutations `g_0..g_{n-1}` and
//! `f_0..f_{n-1}`; the map `S` itself is never stored. The axiom checks work
//! directly with these families and report the first failing index tuple.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{is_bijection, next_lex, Permutation};

/// Which of the three braid identities on `f`/`g` failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidIdentity {
    /// `g_i g_j = g_{g_i(j)} g_{f_j(i)}`
    GComposition,
    /// `f_j f_i = f_{f_j(i)} f_{g_i(j)}`
    FComposition,
    /// `f_{g_{f_j(i)}(k)} g_i(j) = g_{f_{g_j(k)}(i)} f_k(j)`
    Mixed,
}

/// A witness that some axiom fails. Indices are 0-based; `Display` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `S(S(i, j)) != (i, j)`.
    Involutive { i: usize, j: usize },
    /// One braid identity fails at `(i, j, k)`.
    Braided { identity: BraidIdentity, i: usize, j: usize, k: usize },
    /// `S(i, i) != (i, i)`.
    SquareFree { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Involutive { i, j } => {
                write!(f, "involutive fails: S(S({}, {})) != ({}, {})", i + 1, j + 1, i + 1, j + 1)
            }
            Violation::Braided { identity, i, j, k } => {
                let name = match identity {
                    BraidIdentity::GComposition => "g_i g_j = g_{g_i(j)} g_{f_j(i)}",
                    BraidIdentity::FComposition => "f_j f_i = f_{f_j(i)} f_{g_i(j)}",
                    BraidIdentity::Mixed => "f_{g_{f_j(i)}(k)} g_i(j) = g_{f_{g_j(k)}(i)} f_k(j)",
                };
                write!(f, "braided fails: {name} at (i, j, k) = ({}, {}, {})", i + 1, j + 1, k + 1)
            }
            Violation::SquareFree { i } => {
                write!(f, "square-free fails: S({}, {}) != ({}, {})", i + 1, i + 1, i + 1, i + 1)
            }
        }
    }
}

/// Summary of the solution axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub nondegenerate: bool,
    pub involutive: bool,
    pub braided: bool,
    pub square_free: bool,
    /// Present iff one of the flags is false.
    pub first_violation: Option<Violation>,
}

impl SolutionReport {
    /// Non-degenerate, involutive and braided.
    pub fn is_garside_input(&self) -> bool {
        self.nondegenerate && self.involutive && self.braided
    }
}

/// A non-degenerate set-theoretic solution on `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Solution {
    g: Vec<Permutation>,
    f: Vec<Permutation>,
}

/// True iff every row of `g` and `f` is a bijection of `{0, .., n-1}` and there
/// are exactly `n` rows of each. Used to validate raw input before building a
/// [`Solution`].
pub fn is_nondegenerate(n: usize, g: &[Vec<usize>], f: &[Vec<usize>]) -> bool {
    g.len() == n
        && f.len() == n
        && g.iter().chain(f).all(|row| row.len() == n && is_bijection(row))
}

impl Solution {
    pub fn new(g: Vec<Permutation>, f: Vec<Permutation>) -> Result<Self> {
        let n = g.len();
        if n == 0 {
            return Err(Error::SizeMismatch("a solution needs n >= 1".into()));
        }
        if f.len() != n {
            return Err(Error::SizeMismatch(format!("{} g-maps but {} f-maps", n, f.len())));
        }
        if let Some(p) = g.iter().chain(&f).find(|p| p.len() != n) {
            return Err(Error::SizeMismatch(format!(
                "permutation {p} acts on {} points, expected {n}",
                p.len()
            )));
        }
        Ok(Solution { g, f })
    }

    /// Builds a solution from raw image lists, rejecting degenerate input.
    pub fn from_images(g: Vec<Vec<usize>>, f: Vec<Vec<usize>>) -> Result<Self> {
        let g = g.into_iter().map(Permutation::new).collect::<Result<Vec<_>>>()?;
        let f = f.into_iter().map(Permutation::new).collect::<Result<Vec<_>>>()?;
        Solution::new(g, f)
    }

    /// All maps trivial: `S(i, j) = (j, i)`.
    pub fn trivial(n: usize) -> Self {
        let id = Permutation::identity(n);
        Solution { g: vec![id.clone(); n], f: vec![id; n] }
    }

    /// Builds the solution with the given `g` and `f` derived from it.
    pub fn from_g(g: Vec<Permutation>) -> Result<Self> {
        let f = derive_f_from_g(&g).ok_or_else(|| {
            Error::NotAPermutation("derived f-map is not a bijection".into())
        })?;
        Solution::new(g, f)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn g(&self, i: usize) -> &Permutation {
        &self.g[i]
    }

    pub fn f(&self, j: usize) -> &Permutation {
        &self.f[j]
    }

    pub fn g_maps(&self) -> &[Permutation] {
        &self.g
    }

    pub fn f_maps(&self) -> &[Permutation] {
        &self.f
    }

    /// `S(i, j)` with bounds checking.
    pub fn eval(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        let n = self.n();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if j >= n {
            return Err(Error::IndexOutOfRange { index: j, n });
        }
        Ok(self.s(i, j))
    }

    /// `S(i, j)`; panics on out-of-range input.
    #[inline]
    pub fn s(&self, i: usize, j: usize) -> (usize, usize) {
        (self.g[i].apply(j), self.f[j].apply(i))
    }

    pub fn involutive_violation(&self) -> Option<Violation> {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = self.s(i, j);
                if self.g[a].apply(b) != i || self.f[b].apply(a) != j {
                    return Some(Violation::Involutive { i, j });
                }
            }
        }
        None
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive_violation().is_none()
    }

    /// Checks the three braid identities on all `n³` triples.
    pub fn braided_violation(&self) -> Option<Violation> {
        let n = self.n();
        let (g, f) = (&self.g, &self.f);
        for i in 0..n {
            for j in 0..n {
                let gij = g[i].apply(j);
                let fji = f[j].apply(i);
                for k in 0..n {
                    if g[i].apply(g[j].apply(k)) != g[gij].apply(g[fji].apply(k)) {
                        return Some(Violation::Braided {
                            identity: BraidIdentity::GComposition,
                            i,
                            j,
                            k,
                        });
                    }
                    if f[j].apply(f[i].apply(k)) != f[fji].apply(f[gij].apply(k)) {
                        return Some(Violation::Braided {
                            identity: BraidIdentity::FComposition,
                            i,
                            j,
                            k,
                        });
                    }
                    let lhs = f[g[fji].apply(k)].apply(gij);
                    let rhs = g[f[g[j].apply(k)].apply(i)].apply(f[k].apply(j));
                    if lhs != rhs {
                        return Some(Violation::Braided { identity: BraidIdentity::Mixed, i, j, k });
                    }
                }
            }
        }
        None
    }

    pub fn is_braided(&self) -> bool {
        self.braided_violation().is_none()
    }

    pub fn square_free_violation(&self) -> Option<Violation> {
        (0..self.n()).find(|&i| self.s(i, i) != (i, i)).map(|i| Violation::SquareFree { i })
    }

    pub fn is_square_free(&self) -> bool {
        self.square_free_violation().is_none()
    }

    pub fn report(&self) -> SolutionReport {
        let inv = self.involutive_violation();
        let braid = self.braided_violation();
        let sq = self.square_free_violation();
        SolutionReport {
            nondegenerate: true,
            involutive: inv.is_none(),
            braided: braid.is_none(),
            square_free: sq.is_none(),
            first_violation: inv.or(braid).or(sq),
        }
    }

    /// Fails unless the solution is involutive and braided.
    pub fn require_garside_input(&self) -> Result<()> {
        match self.involutive_violation().or_else(|| self.braided_violation()) {
            Some(v) => Err(Error::Axiom(v)),
            None => Ok(()),
        }
    }

    /// The isomorphic solution `S'(φx, φy) = (φ S₁(x, y), φ S₂(x, y))`.
    pub fn relabel(&self, phi: &Permutation) -> Solution {
        let n = self.n();
        let mut g = vec![Permutation::identity(n); n];
        let mut f = vec![Permutation::identity(n); n];
        for x in 0..n {
            g[phi.apply(x)] = self.g[x].conjugate_by(phi);
            f[phi.apply(x)] = self.f[x].conjugate_by(phi);
        }
        Solution { g, f }
    }

    /// The sub-solution on an invariant subset, relabeled to `0..|subset|` in
    /// increasing order of the original indices.
    pub fn restrict(&self, subset: &[usize]) -> Result<Solution> {
        let n = self.n();
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::SizeMismatch("cannot restrict to the empty set".into()));
        }
        let mut pos = vec![usize::MAX; n];
        for (k, &x) in members.iter().enumerate() {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
            pos[x] = k;
        }
        let m = members.len();
        let mut g = Vec::with_capacity(m);
        let mut f = Vec::with_capacity(m);
        for &x in &members {
            let gi: Vec<usize> = members.iter().map(|&y| pos[self.g[x].apply(y)]).collect();
            let fi: Vec<usize> = members.iter().map(|&y| pos[self.f[x].apply(y)]).collect();
            if gi.iter().chain(&fi).any(|&p| p == usize::MAX) {
                return Err(Error::SizeMismatch("subset is not invariant".into()));
            }
            g.push(Permutation::new(gi)?);
            f.push(Permutation::new(fi)?);
        }
        Solution::new(g, f)
    }

    /// The union of `a` on `0..a.n()` and `b` on `a.n()..a.n()+b.n()`, with
    /// `S(y, z) = (z, y)` across the two blocks.
    pub fn disjoint_union(a: &Solution, b: &Solution) -> Solution {
        let (na, nb) = (a.n(), b.n());
        let n = na + nb;
        let extend = |p: &Permutation, offset: usize| {
            let mut images: Vec<usize> = (0..n).collect();
            for i in 0..p.len() {
                images[offset + i] = offset + p.apply(i);
            }
            Permutation::new(images).expect("block extension is a bijection")
        };
        let g = a.g.iter().map(|p| extend(p, 0)).chain(b.g.iter().map(|p| extend(p, na))).collect();
        let f = a.f.iter().map(|p| extend(p, 0)).chain(b.f.iter().map(|p| extend(p, na))).collect();
        Solution { g, f }
    }

    /// Row-major serialization of the `S`-table after relabeling: the byte `n`
    /// followed by `S₁(a, b), S₂(a, b)` for all `(a, b)`.
    pub fn table_bytes(&self) -> Vec<u8> {
        let n = self.n();
        let mut out = Vec::with_capacity(1 + 2 * n * n);
        out.push(n as u8);
        for a in 0..n {
            for b in 0..n {
                let (p, q) = self.s(a, b);
                out.push(p as u8);
                out.push(q as u8);
            }
        }
        out
    }

    /// Lexicographically least [`table_bytes`](Self::table_bytes) over all
    /// relabelings. Equal canonical forms iff isomorphic solutions.
    pub fn canonical_form(&self) -> Vec<u8> {
        let n = self.n();
        assert!(n < 256, "canonical form is byte-encoded");
        let cells: Vec<(u8, u8)> = (0..n * n)
            .map(|c| {
                let (p, q) = self.s(c / n, c % n);
                (p as u8, q as u8)
            })
            .collect();
        let mut best = self.table_bytes();
        let mut candidate = vec![0u8; best.len()];
        candidate[0] = n as u8;
        let mut phi: Vec<usize> = (0..n).collect();
        let mut inv = vec![0usize; n];
        loop {
            for (x, &y) in phi.iter().enumerate() {
                inv[y] = x;
            }
            // Streaming comparison against the best so far; abandon on the
            // first larger byte.
            let mut less = false;
            let mut abandoned = false;
            let mut idx = 1;
            'cells: for a in 0..n {
                for b in 0..n {
                    let (p, q) = cells[inv[a] * n + inv[b]];
                    for byte in [phi[p as usize] as u8, phi[q as usize] as u8] {
                        if !less {
                            if byte > best[idx] {
                                abandoned = true;
                                break 'cells;
                            }
                            if byte < best[idx] {
                                less = true;
                            }
                        }
                        candidate[idx] = byte;
                        idx += 1;
                    }
                }
            }
            if !abandoned && less {
                best.copy_from_slice(&candidate);
            }
            if !next_lex(&mut phi) {
                break;
            }
        }
        best
    }
}

/// Derives `f_j(i) = g_{g_i(j)}⁻¹(i)`, the unique `f` making the first
/// involutivity identity hold. Returns `None` if some `f_j` is not a bijection.
pub fn derive_f_from_g(g: &[Permutation]) -> Option<Vec<Permutation>> {
    let n = g.len();
    if g.iter().any(|p| p.len() != n) {
        return None;
    }
    let g_inv: Vec<Permutation> = g.iter().map(Permutation::inverse).collect();
    (0..n)
        .map(|j| {
            let images: Vec<usize> = (0..n).map(|i| g_inv[g[i].apply(j)].apply(i)).collect();
            Permutation::new(images).ok()
        })
        .collect()
}

/// Finds `φ` with `S_b(φx, φy) = (φ S_a₁(x, y), φ S_a₂(x, y))`, if any.
pub fn are_isomorphic(a: &Solution, b: &Solution) -> Option<Permutation> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_isomorphism(a, b, 0, &mut phi, &mut used) {
        Some(Permutation::new(phi).expect("search assigns a bijection"))
    } else {
        None
    }
}

fn extend_isomorphism(
    a: &Solution,
    b: &Solution,
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.n();
    if depth == n {
        return true;
    }
    for target in 0..n {
        if used[target] {
            continue;
        }
        phi[depth] = target;
        used[target] = true;
        if partial_isomorphism_holds(a, b, depth, phi) && extend_isomorphism(a, b, depth + 1, phi, used)
        {
            return true;
        }
        used[target] = false;
        phi[depth] = usize::MAX;
    }
    false
}

/// Checks every cell with both arguments among `0..=depth` whose images are
/// already mapped.
fn partial_isomorphism_holds(a: &Solution, b: &Solution, depth: usize, phi: &[usize]) -> bool {
    for x in 0..=depth {
        for y in 0..=depth {
            if x != depth && y != depth {
                continue;
            }
            let (p, q) = a.s(x, y);
            let (bp, bq) = b.s(phi[x], phi[y]);
            if phi[p] != usize::MAX && phi[p] != bp {
                return false;
            }
            if phi[q] != usize::MAX && phi[q] != bq {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|i| i - 1).collect()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    /// f_i = g_i alternating between (1,2,3,4) and (1,4,3,2), f_5 = g_5 = id.
    pub(crate) fn five_point_solution() -> Solution {
        let a = cyc(5, &[&[1, 2, 3, 4]]);
        let b = cyc(5, &[&[1, 4, 3, 2]]);
        let maps = vec![a.clone(), b.clone(), a, b, Permutation::identity(5)];
        Solution::new(maps.clone(), maps).unwrap()
    }

    /// S(i, j) = (φ(j), φ⁻¹(i)) with φ = (1,2,3).
    pub(crate) fn three_cycle_solution() -> Solution {
        let phi = cyc(3, &[&[1, 2, 3]]);
        Solution::new(vec![phi.clone(); 3], vec![phi.inverse(); 3]).unwrap()
    }

    #[test]
    fn eval_matches_worked_examples() {
        let s = five_point_solution();
        // x₁x₁ = x₂x₂
        assert_eq!(s.eval(0, 0).unwrap(), (1, 1));
        // x₂x₅ = x₅x₂
        assert_eq!(s.eval(1, 4).unwrap(), (4, 1));
        assert!(s.eval(5, 0).is_err());
        assert_eq!(Solution::trivial(1).eval(0, 0).unwrap(), (0, 0));
    }

    #[test]
    fn nondegeneracy_of_raw_rows() {
        let id = vec![0, 1, 2];
        assert!(!is_nondegenerate(3, &[vec![0, 0, 1], id.clone(), id.clone()], &[id.clone(), id.clone(), id.clone()]));
        assert!(is_nondegenerate(3, &[id.clone(), id.clone(), id.clone()], &[id.clone(), id.clone(), id]));
        let s = five_point_solution();
        let rows: Vec<Vec<usize>> = s.g_maps().iter().map(|p| p.images().to_vec()).collect();
        assert!(is_nondegenerate(5, &rows, &rows));
    }

    #[test]
    fn axioms_of_worked_examples() {
        let r = five_point_solution().report();
        assert!(r.involutive && r.braided && !r.square_free);
        assert_eq!(r.first_violation, Some(Violation::SquareFree { i: 0 }));

        let r = three_cycle_solution().report();
        assert!(r.involutive && r.braided && !r.square_free);

        let r = Solution::trivial(1).report();
        assert!(r.involutive && r.braided && r.square_free && r.first_violation.is_none());
        assert!(Solution::trivial(4).is_square_free());
    }

    #[test]
    fn non_involutive_permutation_solution() {
        let f = cyc(5, &[&[1, 4], &[2, 3]]);
        let g = cyc(5, &[&[1, 2], &[3, 4]]);
        let s = Solution::new(vec![g; 5], vec![f; 5]).unwrap();
        assert!(matches!(s.involutive_violation(), Some(Violation::Involutive { .. })));
        assert!(s.is_braided());
    }

    #[test]
    fn perturbed_example_is_not_braided() {
        let s = five_point_solution();
        let mut g = s.g_maps().to_vec();
        g[0] = cyc(5, &[&[1, 2]]);
        let s = Solution::new(g.clone(), g).unwrap();
        assert!(matches!(s.braided_violation(), Some(Violation::Braided { .. })));
    }

    #[test]
    fn derive_f_examples() {
        let s = five_point_solution();
        assert_eq!(derive_f_from_g(s.g_maps()).unwrap(), s.f_maps());
        let id = vec![Permutation::identity(3); 3];
        assert_eq!(derive_f_from_g(&id).unwrap(), id);
    }

    #[test]
    fn derive_f_matches_exhaustive_search_for_swaps() {
        let swap = cyc(2, &[&[1, 2]]);
        let g = vec![swap.clone(), swap];
        let derived = derive_f_from_g(&g).unwrap();
        // every f-tuple over S_2 satisfying g_{g_i(j)} f_j(i) = i
        let perms = crate::perm::all_permutations(2);
        let mut matches = Vec::new();
        for f0 in &perms {
            for f1 in &perms {
                let f = [f0, f1];
                let ok = (0..2).all(|i| (0..2).all(|j| g[g[i].apply(j)].apply(f[j].apply(i)) == i));
                if ok {
                    matches.push(vec![f0.clone(), f1.clone()]);
                }
            }
        }
        assert_eq!(matches, vec![derived]);
    }

    #[test]
    fn derive_f_rejects_inconsistent_g() {
        // g_1 = id, g_2 = (1 2): f_1(1) = g_1⁻¹(1) = 1, f_1(2) = g_{g_2(1)}⁻¹(2) = g_2⁻¹(2) = 1.
        let g = vec![Permutation::identity(2), cyc(2, &[&[1, 2]])];
        assert!(derive_f_from_g(&g).is_none());
    }

    #[test]
    fn isomorphism_witnesses() {
        let a = three_cycle_solution();
        assert_eq!(are_isomorphic(&a, &a), Some(Permutation::identity(3)));

        let swap = cyc(3, &[&[1, 2]]);
        let b = a.relabel(&swap);
        let phi = are_isomorphic(&a, &b).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let (p, q) = a.s(x, y);
                assert_eq!(b.s(phi.apply(x), phi.apply(y)), (phi.apply(p), phi.apply(q)));
            }
        }
        assert_eq!(are_isomorphic(&a, &Solution::trivial(3)), None);
        assert_eq!(are_isomorphic(&a, &Solution::trivial(2)), None);
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let s = five_point_solution();
        let c = s.canonical_form();
        for phi in crate::perm::all_permutations(5).iter().step_by(7) {
            assert_eq!(s.relabel(phi).canonical_form(), c);
        }
        assert_ne!(c, Solution::trivial(5).canonical_form());
    }

    #[test]
    fn restrict_and_union() {
        let u = Solution::disjoint_union(&three_cycle_solution(), &three_cycle_solution());
        assert_eq!(u.n(), 6);
        assert!(u.is_involutive() && u.is_braided());
        assert_eq!(u.restrict(&[3, 4, 5]).unwrap(), three_cycle_solution());
        assert!(three_cycle_solution().restrict(&[0]).is_err());
        let s = five_point_solution();
        assert_eq!(s.restrict(&[4]).unwrap(), Solution::trivial(1));
    }

    #[test]
    fn violation_messages_are_one_based() {
        let v = Violation::SquareFree { i: 0 };
        assert_eq!(v.to_string(), "square-free fails: S(1, 1) != (1, 1)");
    }
}
