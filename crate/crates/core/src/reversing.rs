//! Complements, word reversing and word equality in the structure monoid.
//!
//! For a non-degenerate involutive solution the right complement of two
//! distinct letters is the single letter `x_i \ x_j = g_i⁻¹(j)`, and the left
//! complement is `x_j \~ x_i = f_i⁻¹(j)`. Reversing two words fills a
//! `|u| × |v|` grid of letter complements and yields `u \ v` and `v \ u` with
//! `u (u \ v) = v (v \ u)` in the monoid.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::TableauPresentation;
use crate::solution::Solution;

/// A word in the free monoid on `x_1..x_n`; the empty word is `ε`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `x^k`.
    pub fn power(x: usize, k: usize) -> Word {
        Word(vec![x; k])
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", x + 1)?;
        }
        Ok(())
    }
}

/// Letter-level right and left complements, `None` standing for `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementTable {
    n: usize,
    right: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
}

impl ComplementTable {
    /// `right[i][j] = g_i⁻¹(j)` and `left[j][i] = f_i⁻¹(j)` off the diagonal.
    pub fn new(sol: &Solution) -> Self {
        let n = sol.n();
        let mut right = vec![None; n * n];
        let mut left = vec![None; n * n];
        for i in 0..n {
            let g_inv = sol.g(i).inverse();
            let f_inv = sol.f(i).inverse();
            for j in 0..n {
                if i != j {
                    right[i * n + j] = Some(g_inv.apply(j));
                    left[j * n + i] = Some(f_inv.apply(j));
                }
            }
        }
        ComplementTable { n, right, left }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x_i \ x_j`.
    #[inline]
    pub fn right(&self, i: usize, j: usize) -> Option<usize> {
        self.right[i * self.n + j]
    }

    /// `x_j \~ x_i`, so that `x_j ∨~ x_i = (x_j \~ x_i) x_i`.
    #[inline]
    pub fn left(&self, j: usize, i: usize) -> Option<usize> {
        self.left[j * self.n + i]
    }

    /// Right complement on `X ∪ {ε}`: `ε \ y = y`, `y \ ε = ε`.
    #[inline]
    fn rc(&self, a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (None, b) => b,
            (_, None) => None,
            (Some(a), Some(b)) => self.right(a, b),
        }
    }

    /// Left complement on `X ∪ {ε}`: `ε \~ y = ε`, `y \~ ε = y`.
    #[inline]
    fn lc(&self, a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (None, _) => None,
            (a, None) => a,
            (Some(a), Some(b)) => self.left(a, b),
        }
    }

    /// Returns `(u \ v, v \ u)` by filling the reversing grid row by row.
    ///
    /// `u` runs down the left edge and `v` along the top. A cell with top
    /// edge `h` and left edge `a` gets bottom edge `a \ h` and right edge
    /// `h \ a`.
    pub fn reverse_words(&self, u: &Word, v: &Word) -> (Word, Word) {
        let mut horizontal: Vec<Option<usize>> = v.letters().iter().map(|&x| Some(x)).collect();
        let mut right_edge = Vec::with_capacity(u.len());
        for &a in u.letters() {
            let mut cur = Some(a);
            for h in horizontal.iter_mut() {
                let bottom = self.rc(cur, *h);
                let across = self.rc(*h, cur);
                *h = bottom;
                cur = across;
            }
            right_edge.push(cur);
        }
        let u_under_v = Word(horizontal.into_iter().flatten().collect());
        let v_under_u = Word(right_edge.into_iter().flatten().collect());
        (u_under_v, v_under_u)
    }

    /// `u ∨ v`, represented by the word `u (u \ v)`.
    pub fn right_lcm(&self, u: &Word, v: &Word) -> Word {
        let (u_under_v, _) = self.reverse_words(u, v);
        u.concat(&u_under_v)
    }

    /// Right lcm of a set of generators, folded in increasing index order.
    /// The empty set gives `ε`.
    pub fn multi_lcm(&self, letters: &[usize]) -> Word {
        let mut sorted = letters.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.fold_lcm(&sorted)
    }

    /// Right lcm folded in the given order.
    pub fn fold_lcm(&self, letters: &[usize]) -> Word {
        letters.iter().fold(Word::empty(), |acc, &x| self.right_lcm(&acc, &Word::letter(x)))
    }

    /// First triple `(i, k, m)` where
    /// `(x_i \ x_k) \ (x_i \ x_m) = (x_k \ x_i) \ (x_k \ x_m)` fails.
    pub fn coherence_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let (i_, k_, m_) = (Some(i), Some(k), Some(m));
                    let lhs = self.rc(self.rc(i_, k_), self.rc(i_, m_));
                    let rhs = self.rc(self.rc(k_, i_), self.rc(k_, m_));
                    if lhs != rhs {
                        return Some((i, k, m));
                    }
                }
            }
        }
        None
    }

    pub fn check_coherence(&self) -> bool {
        self.coherence_violation().is_none()
    }

    /// First triple `(i, j, k)` where
    /// `(x_i \~ x_j) \~ (x_k \~ x_j) = (x_i \~ x_k) \~ (x_j \~ x_k)` fails.
    pub fn left_coherence_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (i_, j_, k_) = (Some(i), Some(j), Some(k));
                    let lhs = self.lc(self.lc(i_, j_), self.lc(k_, j_));
                    let rhs = self.lc(self.lc(i_, k_), self.lc(j_, k_));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn check_left_coherence(&self) -> bool {
        self.left_coherence_violation().is_none()
    }
}

/// Default limit on the size of a word equivalence class explored by BFS.
pub const DEFAULT_BFS_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_BFS_CAP`].
pub const BFS_CAP_ENV: &str = "YBE_GARSIDE_BFS_CAP";

pub fn bfs_cap_from_env() -> usize {
    std::env::var(BFS_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&c: &usize| c > 0)
        .unwrap_or(DEFAULT_BFS_CAP)
}

/// Word equality in `Mon⟨X | R⟩` for length-preserving relations, decided by
/// exploring the equivalence class of a word under single relation rewrites.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    n: usize,
    cap: usize,
    /// For each two-letter word `(a, b)`, the words it may be rewritten to.
    moves: HashMap<(usize, usize), Vec<(usize, usize)>>,
}

impl RewriteSystem {
    pub fn new(pres: &TableauPresentation) -> Self {
        Self::with_cap(pres, bfs_cap_from_env())
    }

    pub fn with_cap(pres: &TableauPresentation, cap: usize) -> Self {
        let mut moves: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for r in pres.relations() {
            moves.entry(r.lhs()).or_default().push(r.rhs());
            moves.entry(r.rhs()).or_default().push(r.lhs());
        }
        RewriteSystem { n: pres.n(), cap, moves }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Every word equal to `w` in the monoid, in BFS order.
    pub fn class(&self, w: &Word) -> Result<Vec<Word>> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            let letters = cur.letters();
            for p in 0..letters.len().saturating_sub(1) {
                if let Some(targets) = self.moves.get(&(letters[p], letters[p + 1])) {
                    for &(a, b) in targets {
                        let mut next = letters.to_vec();
                        next[p] = a;
                        next[p + 1] = b;
                        let next = Word(next);
                        if !seen.contains(&next) {
                            if seen.len() >= self.cap {
                                return Err(Error::ClassTooLarge { cap: self.cap });
                            }
                            seen.insert(next.clone());
                            queue.push_back(next);
                        }
                    }
                }
            }
            order.push(cur);
        }
        Ok(order)
    }

    pub fn words_equal(&self, u: &Word, v: &Word) -> Result<bool> {
        if u.len() != v.len() {
            return Ok(false);
        }
        if u == v {
            return Ok(true);
        }
        Ok(self.class(u)?.contains(v))
    }

    /// Lexicographically least word of the class of `w`.
    pub fn canonical(&self, w: &Word) -> Result<Word> {
        Ok(self.class(w)?.into_iter().min().expect("class contains w"))
    }
}

/// `u = v` in the monoid presented by `pres`.
pub fn words_equal_in_m(pres: &TableauPresentation, u: &Word, v: &Word) -> Result<bool> {
    RewriteSystem::new(pres).words_equal(u, v)
}
