//! Isomorphism-free enumeration of non-degenerate involutive braided
//! solutions, and the per-entry Garside verification pipeline.
//!
//! The search fills the table `σ_x = g_x⁻¹` one cell at a time. Every
//! instance of `g_i g_{g_i⁻¹(k)} = g_k g_{g_k⁻¹(i)}`, a consequence of the
//! braid and involutivity identities, is checked as soon as the cells it reads
//! are known. Complete tables have `f` derived from `g` and go through the full
//! axiom checks before canonical deduplication.
//!
//! Symmetry breaking: every isomorphism class has a labelling in which row 0
//! has the least pointed cycle type among all rows, and in which `σ_0` is a
//! fixed representative of that type. Only such tables are searched.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::garside::{decomposition, StructureMonoid};
use crate::perm::{all_permutations, Permutation};
use crate::presentation::TableauPresentation;
use crate::solution::{Solution, SolutionReport};

/// Largest `n` enumerated without the long-running opt-in.
pub const MAX_DEFAULT_N: usize = 4;
/// Largest `n` the enumerator supports at all.
pub const MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    /// The labelling whose table is the canonical form.
    pub solution: Solution,
    pub canonical: Vec<u8>,
    pub report: SolutionReport,
    pub delta_pure: bool,
    pub indecomposable: bool,
    pub square_free: bool,
    pub exponent: usize,
    pub delta_length: usize,
}

impl CensusEntry {
    pub fn canonical_hash(&self) -> String {
        canonical_hash(&self.canonical)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Allows `n > MAX_DEFAULT_N`.
    pub long_running: bool,
}

/// First 16 hex digits of the SHA-256 of a canonical form.
pub fn canonical_hash(canonical: &[u8]) -> String {
    Sha256::digest(canonical).iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn check_size(n: usize, opts: &CensusOptions) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::UnsupportedSize { n, reason: format!("supported range is 1..={MAX_N}") });
    }
    if n > MAX_DEFAULT_N && !opts.long_running {
        return Err(Error::UnsupportedSize {
            n,
            reason: format!("n > {MAX_DEFAULT_N} requires the long-running opt-in"),
        });
    }
    Ok(())
}

fn with_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(work()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(work))
        }
    }
}

/// Canonical forms of all solutions of size `n`, sorted.
pub fn enumerate_canonical_forms(n: usize, opts: &CensusOptions) -> Result<Vec<Vec<u8>>> {
    check_size(n, opts)?;
    let shards = shards(n);
    let found: BTreeSet<Vec<u8>> = with_pool(opts.jobs, || {
        shards
            .par_iter()
            .map(|shard| {
                let mut search = Search::new(n, shard);
                search.run();
                search.found
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    })?;
    Ok(found.into_iter().collect())
}

/// All solutions of size `n` up to isomorphism, with their Garside data,
/// sorted by canonical form.
pub fn enumerate_solutions(n: usize, opts: &CensusOptions) -> Result<Vec<CensusEntry>> {
    let forms = enumerate_canonical_forms(n, opts)?;
    with_pool(opts.jobs, || {
        forms
            .par_iter()
            .map(|c| census_entry(solution_from_table_bytes(c)?))
            .collect::<Result<Vec<_>>>()
    })?
}

/// Computes the flags of one entry. `sol` must be involutive and braided.
pub fn census_entry(sol: Solution) -> Result<CensusEntry> {
    let monoid = StructureMonoid::new(&sol)?;
    let delta = monoid.garside_element();
    Ok(CensusEntry {
        canonical: sol.canonical_form(),
        report: sol.report(),
        delta_pure: monoid.is_delta_pure()?,
        indecomposable: decomposition(&sol).is_none(),
        square_free: sol.is_square_free(),
        exponent: monoid.exponent()?,
        delta_length: delta.len(),
        solution: sol,
    })
}

/// Inverse of [`Solution::table_bytes`].
pub fn solution_from_table_bytes(bytes: &[u8]) -> Result<Solution> {
    let n = *bytes.first().ok_or_else(|| Error::SizeMismatch("empty table".into()))? as usize;
    if bytes.len() != 1 + 2 * n * n {
        return Err(Error::SizeMismatch(format!("table of {} bytes for n = {n}", bytes.len())));
    }
    let mut g = vec![vec![0; n]; n];
    let mut f = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = 1 + 2 * (i * n + j);
            g[i][j] = bytes[c] as usize;
            f[j][i] = bytes[c + 1] as usize;
        }
    }
    Solution::from_images(g, f)
}

/// Cycle type (lengths, descending) and the length of the cycle through `x`.
type PointedType = (Vec<usize>, usize);

fn pointed_type(row: &[u8], x: usize) -> PointedType {
    let n = row.len();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    let mut through_x = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        let mut has_x = false;
        while !seen[cur] {
            seen[cur] = true;
            has_x |= cur == x;
            len += 1;
            cur = row[cur] as usize;
        }
        if has_x {
            through_x = len;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    (lengths, through_x)
}

/// One representative `σ_0` for each pointed type at `0`: the cycle through 0
/// is `(0, 1, .., m-1)`, the other cycles follow on consecutive points.
fn row_zero_representatives(n: usize) -> Vec<Vec<u8>> {
    let mut types: BTreeSet<PointedType> = BTreeSet::new();
    for p in all_permutations(n) {
        let row: Vec<u8> = p.images().iter().map(|&x| x as u8).collect();
        types.insert(pointed_type(&row, 0));
    }
    types
        .into_iter()
        .map(|(lengths, through_zero)| {
            let mut others = lengths.clone();
            let pos = others.iter().position(|&l| l == through_zero).expect("type contains it");
            others.remove(pos);
            let mut row = vec![0u8; n];
            let mut start = 0;
            for len in std::iter::once(through_zero).chain(others) {
                for k in 0..len {
                    row[start + k] = (start + (k + 1) % len) as u8;
                }
                start += len;
            }
            row
        })
        .collect()
}

/// A unit of parallel work: fixed rows 0 and (for `n > 1`) 1.
#[derive(Clone, Debug)]
struct Shard {
    rows: Vec<Vec<u8>>,
}

fn shards(n: usize) -> Vec<Shard> {
    let zero_rows = row_zero_representatives(n);
    if n == 1 {
        return zero_rows.into_iter().map(|r| Shard { rows: vec![r] }).collect();
    }
    let perms = all_permutations(n);
    zero_rows
        .iter()
        .flat_map(|r0| {
            perms.iter().map(move |p| Shard {
                rows: vec![r0.clone(), p.images().iter().map(|&x| x as u8).collect()],
            })
        })
        .collect()
}

const UNSET: u8 = u8::MAX;

struct Search {
    n: usize,
    /// `sigma[x * n + y] = σ_x(y) = g_x⁻¹(y)`.
    sigma: Vec<u8>,
    used: Vec<u32>,
    fixed_rows: usize,
    zero_type: PointedType,
    found: BTreeSet<Vec<u8>>,
}

impl Search {
    fn new(n: usize, shard: &Shard) -> Self {
        let mut sigma = vec![UNSET; n * n];
        let mut used = vec![0u32; n];
        for (x, row) in shard.rows.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                sigma[x * n + y] = v;
                used[x] |= 1 << v;
            }
        }
        Search {
            n,
            zero_type: pointed_type(&shard.rows[0], 0),
            sigma,
            used,
            fixed_rows: shard.rows.len(),
            found: BTreeSet::new(),
        }
    }

    fn run(&mut self) {
        for x in 1..self.fixed_rows {
            if !self.row_type_allowed(x) {
                return;
            }
        }
        if self.consistent() {
            self.fill(self.fixed_rows * self.n);
        }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> u8 {
        self.sigma[x * self.n + y]
    }

    fn row_type_allowed(&self, x: usize) -> bool {
        let row = &self.sigma[x * self.n..(x + 1) * self.n];
        pointed_type(row, x) >= self.zero_type
    }

    /// Every fully determined instance of
    /// `σ_{σ_i(k)}(σ_i(m)) = σ_{σ_k(i)}(σ_k(m))` holds.
    fn consistent(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for k in (i + 1)..n {
                let a = self.get(i, k);
                let c = self.get(k, i);
                if a == UNSET || c == UNSET {
                    continue;
                }
                for m in 0..n {
                    let b = self.get(i, m);
                    let d = self.get(k, m);
                    if b == UNSET || d == UNSET {
                        continue;
                    }
                    let lhs = self.get(a as usize, b as usize);
                    let rhs = self.get(c as usize, d as usize);
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, cell: usize) {
        let n = self.n;
        if cell == n * n {
            self.accept();
            return;
        }
        let (x, y) = (cell / n, cell % n);
        for v in 0..n {
            if self.used[x] & (1 << v) != 0 {
                continue;
            }
            self.sigma[cell] = v as u8;
            self.used[x] |= 1 << v;
            let row_done = y + 1 == n;
            if (!row_done || self.row_type_allowed(x)) && self.consistent() {
                self.fill(cell + 1);
            }
            self.used[x] &= !(1 << v);
        }
        self.sigma[cell] = UNSET;
    }

    fn accept(&mut self) {
        let n = self.n;
        let g: Vec<Permutation> = (0..n)
            .map(|x| {
                let row: Vec<usize> = self.sigma[x * n..(x + 1) * n].iter().map(|&v| v as usize).collect();
                Permutation::new(row).expect("rows are filled as permutations").inverse()
            })
            .collect();
        if let Ok(sol) = Solution::from_g(g) {
            if sol.is_involutive() && sol.is_braided() {
                self.found.insert(sol.canonical_form());
            }
        }
    }
}

/// What went wrong for one census entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckFailure {
    Axioms(String),
    CanonicalMismatch,
    Coherence((usize, usize, usize)),
    LeftCoherence((usize, usize, usize)),
    ComplementClosure((usize, usize)),
    DeltaLength { expected: usize, got: usize },
    DeltaDivisors,
    PurityDecomposability { delta_pure: bool, indecomposable: bool },
    ClosureSetsNotPartition,
    SimplesNotClosed,
    RoundTrip,
    Computation(String),
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFailure::Axioms(v) => write!(f, "axioms: {v}"),
            CheckFailure::CanonicalMismatch => f.write_str("stored canonical form is stale"),
            CheckFailure::Coherence((i, j, k)) => {
                write!(f, "coherence fails at ({}, {}, {})", i + 1, j + 1, k + 1)
            }
            CheckFailure::LeftCoherence((i, j, k)) => {
                write!(f, "left coherence fails at ({}, {}, {})", i + 1, j + 1, k + 1)
            }
            CheckFailure::ComplementClosure((i, j)) => {
                write!(f, "x{0} \\ x{1} and x{1} \\ x{0} do not come from a relation", i + 1, j + 1)
            }
            CheckFailure::DeltaLength { expected, got } => {
                write!(f, "|Δ| = {got}, expected {expected}")
            }
            CheckFailure::DeltaDivisors => f.write_str("some generator does not divide Δ on both sides"),
            CheckFailure::PurityDecomposability { delta_pure, indecomposable } => write!(
                f,
                "delta_pure = {delta_pure} but indecomposable = {indecomposable}"
            ),
            CheckFailure::ClosureSetsNotPartition => f.write_str("closure sets do not partition X"),
            CheckFailure::SimplesNotClosed => f.write_str("simples not closed under right complement"),
            CheckFailure::RoundTrip => f.write_str("presentation round trip changed the solution"),
            CheckFailure::Computation(e) => write!(f, "computation failed: {e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusViolation {
    pub canonical_hash: String,
    pub failure: CheckFailure,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusVerification {
    pub checked: usize,
    pub violations: Vec<CensusViolation>,
}

impl CensusVerification {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs every Garside certificate on every entry.
pub fn verify_census(entries: &[CensusEntry]) -> CensusVerification {
    let violations = entries
        .par_iter()
        .flat_map_iter(|e| {
            let hash = e.canonical_hash();
            verify_entry(e)
                .into_iter()
                .map(move |failure| CensusViolation { canonical_hash: hash.clone(), failure })
        })
        .collect();
    CensusVerification { checked: entries.len(), violations }
}

/// The failed checks for one entry; empty when it passes.
pub fn verify_entry(entry: &CensusEntry) -> Vec<CheckFailure> {
    let sol = &entry.solution;
    let mut out = Vec::new();
    if let Err(e) = sol.require_garside_input() {
        out.push(CheckFailure::Axioms(e.to_string()));
        return out;
    }
    if sol.canonical_form() != entry.canonical {
        out.push(CheckFailure::CanonicalMismatch);
    }
    if let Err(e) = verify_garside(sol, entry, &mut out) {
        out.push(CheckFailure::Computation(e.to_string()));
    }
    out
}

fn verify_garside(sol: &Solution, entry: &CensusEntry, out: &mut Vec<CheckFailure>) -> Result<()> {
    let n = sol.n();
    let monoid = StructureMonoid::new(sol)?;
    let table = monoid.table();
    if let Some(t) = table.coherence_violation() {
        out.push(CheckFailure::Coherence(t));
    }
    if let Some(t) = table.left_coherence_violation() {
        out.push(CheckFailure::LeftCoherence(t));
    }
    // X ∪ {ε} closed under complement: each letter complement is read off a
    // defining relation x_i (x_i \ x_j) = x_j (x_j \ x_i).
    let pres = monoid.presentation();
    'pairs: for i in 0..n {
        for j in (i + 1)..n {
            let ok = match (table.right(i, j), table.right(j, i)) {
                (Some(a), Some(b)) => pres.contains((i, a), (j, b)),
                _ => false,
            };
            if !ok {
                out.push(CheckFailure::ComplementClosure((i, j)));
                break 'pairs;
            }
        }
    }
    let delta = monoid.garside_element();
    if delta.len() != n || entry.delta_length != n {
        out.push(CheckFailure::DeltaLength { expected: n, got: delta.len() });
    }
    if !monoid.generators_divide_delta(&delta)? {
        out.push(CheckFailure::DeltaDivisors);
    }
    let purity = monoid.purity()?;
    let indecomposable = decomposition(sol).is_none();
    if purity.delta_pure != indecomposable
        || entry.delta_pure != purity.delta_pure
        || entry.indecomposable != indecomposable
    {
        out.push(CheckFailure::PurityDecomposability { delta_pure: purity.delta_pure, indecomposable });
    }
    if !purity.is_partition(n) || !purity.elementwise_agrees {
        out.push(CheckFailure::ClosureSetsNotPartition);
    }
    let simples = monoid.simples()?;
    if !monoid.simples_closed_under_complement(&simples)? {
        out.push(CheckFailure::SimplesNotClosed);
    }
    if TableauPresentation::from_solution(sol)?.to_solution()? != *sol {
        out.push(CheckFailure::RoundTrip);
    }
    Ok(())
}

/// Writes one solution file per entry plus `summary.tsv`.
pub fn write_census(dir: &Path, entries: &[CensusEntry]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut summary =
        String::from("canonical-hash\tsquare_free\tdecomposable\tdelta_pure\texponent\tdelta_length\n");
    for (k, e) in entries.iter().enumerate() {
        let hash = e.canonical_hash();
        let name = format!("{:04}-{hash}.sol", k + 1);
        let body = format!(
            "# census entry {} of {}, canonical hash {hash}\n{}",
            k + 1,
            entries.len(),
            crate::format::render_solution(&e.solution)
        );
        fs::write(dir.join(name), body)?;
        summary.push_str(&format!(
            "{hash}\t{}\t{}\t{}\t{}\t{}\n",
            e.square_free, !e.indecomposable, e.delta_pure, e.exponent, e.delta_length
        ));
    }
    fs::write(dir.join("summary.tsv"), summary)?;
    Ok(())
}

/// Reads every `*.sol` file of a directory, in file-name order.
pub fn read_census_dir(dir: &Path) -> Result<Vec<Solution>> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sol"))
        .collect();
    paths.sort();
    paths.iter().map(|p| crate::format::parse_solution(&fs::read_to_string(p)?)).collect()
}
