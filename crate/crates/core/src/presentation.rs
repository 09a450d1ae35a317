//! Tableau presentations: every relation equates two words of length two.
//!
//! A non-degenerate involutive solution gives the presentation
//! `{ x_i x_j = x_k x_l : S(i, j) = (k, l) ≠ (i, j) }` of its structure monoid,
//! with `n(n-1)/2` relations after identifying the pair `S(i, j) = (k, l)`,
//! `S(k, l) = (i, j)`. [`TableauPresentation::to_solution`] reverses this.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::solution::Solution;

/// A length-two word `x_a x_b`, stored as `(a, b)`.
pub type Pair = (usize, usize);

/// `lhs = rhs` with `lhs < rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    lhs: Pair,
    rhs: Pair,
}

impl Relation {
    /// Normalizes the orientation; equal sides are rejected.
    pub fn new(a: Pair, b: Pair) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Relation { lhs: a, rhs: b }),
            std::cmp::Ordering::Greater => Ok(Relation { lhs: b, rhs: a }),
            std::cmp::Ordering::Equal => Err(Error::SizeMismatch(format!(
                "trivial relation x{}x{} = x{}x{}",
                a.0 + 1,
                a.1 + 1,
                b.0 + 1,
                b.1 + 1
            ))),
        }
    }

    pub fn lhs(&self) -> Pair {
        self.lhs
    }

    pub fn rhs(&self) -> Pair {
        self.rhs
    }

    fn map(&self, s: &Permutation) -> Relation {
        let m = |(a, b): Pair| (s.apply(a), s.apply(b));
        Relation::new(m(self.lhs), m(self.rhs)).expect("bijection keeps sides distinct")
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.lhs;
        let (c, d) = self.rhs;
        write!(f, "x{}x{} = x{}x{}", a + 1, b + 1, c + 1, d + 1)
    }
}

/// A monoid presentation on generators `0..n` with length-two relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPresentation {
    n: usize,
    relations: BTreeSet<Relation>,
}

/// Outcome of checking the three tableau conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauReport {
    /// `|R| = n(n-1)/2`.
    pub count_ok: bool,
    pub expected_count: usize,
    pub actual_count: usize,
    /// No length-two word occurs in two relations.
    pub words_unique: bool,
    pub repeated_words: Vec<Pair>,
    /// No word `x_i²` occurs in `R`.
    pub square_free: bool,
    pub square_words: Vec<usize>,
}

impl TableauReport {
    pub fn all_hold(&self) -> bool {
        self.count_ok && self.words_unique && self.square_free
    }
}

impl TableauPresentation {
    pub fn new(n: usize, relations: impl IntoIterator<Item = Relation>) -> Result<Self> {
        let relations: BTreeSet<Relation> = relations.into_iter().collect();
        for r in &relations {
            for x in [r.lhs.0, r.lhs.1, r.rhs.0, r.rhs.1] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
        }
        Ok(TableauPresentation { n, relations })
    }

    /// The presentation of the structure monoid of a non-degenerate involutive
    /// solution.
    pub fn from_solution(sol: &Solution) -> Result<Self> {
        if let Some(v) = sol.involutive_violation() {
            return Err(Error::Axiom(v));
        }
        let n = sol.n();
        let mut relations = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                let image = sol.s(i, j);
                if image != (i, j) {
                    relations.insert(Relation::new((i, j), image)?);
                }
            }
        }
        debug_assert_eq!(relations.len(), n * (n - 1) / 2);
        Ok(TableauPresentation { n, relations })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> impl Iterator<Item = &Relation> + '_ {
        self.relations.iter()
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn contains(&self, a: Pair, b: Pair) -> bool {
        Relation::new(a, b).is_ok_and(|r| self.relations.contains(&r))
    }

    pub fn validate(&self) -> TableauReport {
        let n = self.n;
        let expected = n * n.saturating_sub(1) / 2;
        let mut occurrences: BTreeMap<Pair, usize> = BTreeMap::new();
        for r in &self.relations {
            *occurrences.entry(r.lhs).or_default() += 1;
            *occurrences.entry(r.rhs).or_default() += 1;
        }
        let repeated_words: Vec<Pair> =
            occurrences.iter().filter(|(_, &c)| c > 1).map(|(&w, _)| w).collect();
        let square_words: Vec<usize> = occurrences
            .keys()
            .filter(|(a, b)| a == b)
            .map(|&(a, _)| a)
            .collect();
        TableauReport {
            count_ok: self.relations.len() == expected,
            expected_count: expected,
            actual_count: self.relations.len(),
            words_unique: repeated_words.is_empty(),
            repeated_words,
            square_free: square_words.is_empty(),
            square_words,
        }
    }

    /// Reads off `S(i, j) = (k, l)` and `S(k, l) = (i, j)` from each relation,
    /// fixing every word that occurs in no relation.
    ///
    /// A word occurring twice is a [`Error::RepeatedWord`]; non-bijective
    /// component maps mean the monoid cannot be Garside and give
    /// [`Error::NotGarside`].
    pub fn to_solution(&self) -> Result<Solution> {
        let n = self.n;
        if n == 0 {
            return Err(Error::SizeMismatch("a presentation needs n >= 1".into()));
        }
        let mut table: Vec<Option<Pair>> = vec![None; n * n];
        for r in &self.relations {
            for (from, to) in [(r.lhs, r.rhs), (r.rhs, r.lhs)] {
                let cell = &mut table[from.0 * n + from.1];
                if cell.is_some() {
                    return Err(Error::RepeatedWord(from.0, from.1));
                }
                *cell = Some(to);
            }
        }
        let mut g = vec![vec![0; n]; n];
        let mut f = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (k, l) = table[i * n + j].unwrap_or((i, j));
                g[i][j] = k;
                f[j][i] = l;
            }
        }
        let name = |which: &str, i: usize| format!("{which}_{} is not a bijection", i + 1);
        let g = g
            .into_iter()
            .enumerate()
            .map(|(i, row)| Permutation::new(row).map_err(|_| Error::NotGarside(name("g", i))))
            .collect::<Result<Vec<_>>>()?;
        let f = f
            .into_iter()
            .enumerate()
            .map(|(i, row)| Permutation::new(row).map_err(|_| Error::NotGarside(name("f", i))))
            .collect::<Result<Vec<_>>>()?;
        Solution::new(g, f)
    }

    /// The presentation with every generator renamed by `s`.
    pub fn relabel(&self, s: &Permutation) -> TableauPresentation {
        TableauPresentation {
            n: self.n,
            relations: self.relations.iter().map(|r| r.map(s)).collect(),
        }
    }
}

/// Finds a generator bijection `s` carrying the relations of `p` exactly onto
/// those of `q`.
pub fn are_t_isomorphic(p: &TableauPresentation, q: &TableauPresentation) -> Option<Permutation> {
    if p.n != q.n || p.relations.len() != q.relations.len() {
        return None;
    }
    let n = p.n;
    // Relations grouped by the largest generator they mention, so each one is
    // checked as soon as all of its letters are mapped.
    let mut by_max: Vec<Vec<Relation>> = vec![Vec::new(); n];
    for r in &p.relations {
        let m = [r.lhs.0, r.lhs.1, r.rhs.0, r.rhs.1].into_iter().max().unwrap();
        by_max[m].push(*r);
    }
    let mut s = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if t_iso_search(q, &by_max, 0, &mut s, &mut used) {
        Some(Permutation::new(s).expect("search assigns a bijection"))
    } else {
        None
    }
}

fn t_iso_search(
    q: &TableauPresentation,
    by_max: &[Vec<Relation>],
    depth: usize,
    s: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = s.len();
    if depth == n {
        return true;
    }
    for target in 0..n {
        if used[target] {
            continue;
        }
        s[depth] = target;
        used[target] = true;
        let ok = by_max[depth].iter().all(|r| {
            let m = |(a, b): Pair| (s[a], s[b]);
            q.contains(m(r.lhs), m(r.rhs))
        });
        if ok && t_iso_search(q, by_max, depth + 1, s, used) {
            return true;
        }
        used[target] = false;
    }
    s[depth] = usize::MAX;
    false
}

/// Relations `x_i x_j = S(i, j)` for every non-fixed cell of an arbitrary
/// (possibly non-involutive) solution.
pub fn defining_relations(sol: &Solution) -> BTreeSet<Relation> {
    let n = sol.n();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let image = sol.s(i, j);
            if image != (i, j) {
                out.insert(Relation::new((i, j), image).expect("distinct sides"));
            }
        }
    }
    out
}
