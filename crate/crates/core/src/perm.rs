//! Permutations of `{0, .., n-1}`.
//!
//! Indices are 0-based in memory. [`Display`](std::fmt::Display) renders the
//! permutation in 1-based cycle notation, e.g. `(1,2,3,4)(5)`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image list, `images[i]` being the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if !is_bijection(&images) {
            return Err(Error::NotAPermutation(format!("{:?}", one_based(&images))));
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation of size `n` from disjoint cycles (0-based).
    /// Points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (pos, &point) in cycle.iter().enumerate() {
                if point >= n {
                    return Err(Error::IndexOutOfRange { index: point, n });
                }
                if seen[point] {
                    return Err(Error::NotAPermutation(format!(
                        "point {} occurs twice in cycle notation",
                        point + 1
                    )));
                }
                seen[point] = true;
                images[point] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Permutation::identity(self.len());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// Order in the symmetric group (lcm of the cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, lcm)
    }

    /// Relabels by `phi`: returns `phi ∘ self ∘ phi⁻¹`.
    pub fn conjugate_by(&self, phi: &Permutation) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[phi.apply(i)] = phi.apply(j);
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            let body: Vec<String> = cycle.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// True iff `images` is a bijection of `{0, .., images.len()-1}`.
pub fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &j in images {
        if j >= images.len() || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    true
}

/// Advances `a` to the next permutation in lexicographic order.
/// Returns `false` (leaving `a` sorted descending) when `a` was the last one.
pub fn next_lex(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All permutations of size `n` in lexicographic order of their image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    while next_lex(&mut cur) {
        out.push(Permutation { images: cur.clone() });
    }
    out
}

fn one_based(images: &[usize]) -> Vec<usize> {
    images.iter().map(|i| i + 1).collect()
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
