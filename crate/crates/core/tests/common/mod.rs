//! Reference computations that read nothing but the `S`-table. They share no
//! code with the crate's search, reversing or Garside machinery.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::OnceLock;

use ybe_garside::{CensusEntry, CensusOptions, Solution};

pub type Table = Vec<(usize, usize)>;

pub fn table_of(sol: &Solution) -> Table {
    let n = sol.n();
    (0..n * n).map(|c| sol.s(c / n, c % n)).collect()
}

pub fn involutive(n: usize, t: &Table) -> bool {
    (0..n * n).all(|c| {
        let (a, b) = t[c];
        let (p, q) = t[a * n + b];
        p * n + q == c
    })
}

/// `S¹² S²³ S¹² = S²³ S¹² S²³` on every triple.
pub fn braided(n: usize, t: &Table) -> bool {
    let s12 = |(x, y, z): (usize, usize, usize)| {
        let (a, b) = t[x * n + y];
        (a, b, z)
    };
    let s23 = |(x, y, z): (usize, usize, usize)| {
        let (b, c) = t[y * n + z];
        (x, b, c)
    };
    (0..n * n * n).all(|c| {
        let v = (c / (n * n), (c / n) % n, c % n);
        s12(s23(s12(v))) == s23(s12(s23(v)))
    })
}

pub fn nondegenerate(n: usize, t: &Table) -> bool {
    (0..n).all(|x| {
        let g: BTreeSet<usize> = (0..n).map(|y| t[x * n + y].0).collect();
        let f: BTreeSet<usize> = (0..n).map(|y| t[y * n + x].1).collect();
        g.len() == n && f.len() == n
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Least relabelled table.
pub fn min_relabel(n: usize, t: &Table) -> Table {
    permutations(n)
        .iter()
        .map(|phi| {
            let mut r = vec![(0, 0); n * n];
            for x in 0..n {
                for y in 0..n {
                    let (a, b) = t[x * n + y];
                    r[phi[x] * n + phi[y]] = (phi[a], phi[b]);
                }
            }
            r
        })
        .min()
        .expect("at least one relabelling")
}

/// Isomorphism classes of solutions of size `n`, from every pair of a
/// `g`-tuple and an `f`-tuple. `(n!)^(2n)` tables: only sensible for `n <= 3`.
pub fn brute_force_classes(n: usize) -> BTreeSet<Table> {
    let perms = permutations(n);
    let tuples = tuples_of(&perms, n);
    let mut classes = BTreeSet::new();
    for g in &tuples {
        for f in &tuples {
            let t: Table = (0..n * n).map(|c| (g[c / n][c % n], f[c % n][c / n])).collect();
            if involutive(n, &t) && braided(n, &t) {
                classes.insert(min_relabel(n, &t));
            }
        }
    }
    classes
}

pub fn tuples_of(perms: &[Vec<usize>], n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|pre| {
                perms.iter().map(move |p| {
                    let mut v = pre.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// The table of the unique involutive candidate with the given `g`, if its
/// `f`-maps are bijections: `S(i, j) = (a, b)` forces `g_a(b) = i`.
pub fn involutive_candidate(n: usize, g: &[Vec<usize>]) -> Option<Table> {
    let mut t = vec![(0, 0); n * n];
    for i in 0..n {
        for j in 0..n {
            let a = g[i][j];
            let b = (0..n).find(|&b| g[a][b] == i)?;
            t[i * n + j] = (a, b);
        }
    }
    (nondegenerate(n, &t) && involutive(n, &t)).then_some(t)
}

pub fn solution_from_table(n: usize, t: &Table) -> Solution {
    let g = (0..n).map(|i| (0..n).map(|j| t[i * n + j].0).collect()).collect();
    let f = (0..n).map(|j| (0..n).map(|i| t[i * n + j].1).collect()).collect();
    Solution::from_images(g, f).expect("non-degenerate table")
}

/// Every word reachable from `w` by replacing a factor `xy` with `S(x, y)`
/// or `S⁻¹(x, y)`.
pub fn class(n: usize, t: &Table, w: &[usize]) -> HashSet<Vec<usize>> {
    let mut inverse = vec![(0, 0); n * n];
    for c in 0..n * n {
        let (a, b) = t[c];
        inverse[a * n + b] = (c / n, c % n);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::from([w.to_vec()]);
    seen.insert(w.to_vec());
    while let Some(u) = queue.pop_front() {
        for k in 0..u.len().saturating_sub(1) {
            let c = u[k] * n + u[k + 1];
            for (a, b) in [t[c], inverse[c]] {
                let mut v = u.clone();
                v[k] = a;
                v[k + 1] = b;
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

pub fn equal_in_monoid(n: usize, t: &Table, u: &[usize], v: &[usize]) -> bool {
    u.len() == v.len() && class(n, t, u).contains(v)
}

/// Whether some bipartition into two non-empty `S`-invariant subsets exists.
pub fn decomposable(n: usize, t: &Table) -> bool {
    let invariant = |mask: u32| {
        (0..n * n).all(|c| {
            let (x, y) = (c / n, c % n);
            if mask & (1 << x) == 0 || mask & (1 << y) == 0 {
                return true;
            }
            let (a, b) = t[c];
            mask & (1 << a) != 0 && mask & (1 << b) != 0
        })
    };
    let full = (1u32 << n) - 1;
    (1..full).any(|m| invariant(m) && invariant(full & !m))
}

/// The crate's census for `n <= 4`, computed once per test binary.
pub fn census(n: usize) -> &'static [CensusEntry] {
    static CACHE: [OnceLock<Vec<CensusEntry>>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n].get_or_init(|| {
        ybe_garside::enumerate_solutions(n, &CensusOptions::default()).expect("n <= 4 is supported")
    })
}

pub fn full_census() -> impl Iterator<Item = &'static CensusEntry> {
    (1..=4).flat_map(census)
}

/// Permutation from 1-based cycle lists.
pub fn cycles(n: usize, cs: &[&[usize]]) -> ybe_garside::Permutation {
    let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    ybe_garside::Permutation::from_cycles(n, &cs).unwrap()
}

pub fn five_point_solution() -> Solution {
    let a = cycles(5, &[&[1, 2, 3, 4]]);
    let b = cycles(5, &[&[1, 4, 3, 2]]);
    let id = cycles(5, &[]);
    let maps = vec![a.clone(), b.clone(), a, b, id];
    Solution::new(maps.clone(), maps).unwrap()
}

pub fn three_cycle_solution() -> Solution {
    let phi = cycles(3, &[&[1, 2, 3]]);
    Solution::new(vec![phi.clone(); 3], vec![phi.inverse(); 3]).unwrap()
}

/// `x_a x_b = x_c x_d`, 1-based.
pub fn rel(a: usize, b: usize, c: usize, d: usize) -> ybe_garside::Relation {
    ybe_garside::Relation::new((a - 1, b - 1), (c - 1, d - 1)).unwrap()
}

pub fn word(letters: &[usize]) -> ybe_garside::Word {
    ybe_garside::Word::new(letters.iter().map(|x| x - 1).collect())
}
