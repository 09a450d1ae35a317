//! The `ybe` command line. Exit status: 0 on success or a true answer, 1 on
//! a false or negative mathematical answer, 2 on bad input.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{self, CensusEntry, CensusOptions};
use crate::error::{Error, Result};
use crate::format;
use crate::garside::{decomposition, StructureMonoid};
use crate::presentation::{are_t_isomorphic, TableauPresentation};
use crate::permutation_solution::delta_from_cycles;
use crate::reversing::{ComplementTable, Word};
use crate::solution::{are_isomorphic, Solution};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Kv,
}

#[derive(Debug, Parser)]
#[command(name = "ybe", version, about = "Set-theoretic Yang-Baxter solutions and their Garside monoids")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Worker threads for `census` and `verify-census`.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output directory for `census`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Allow census sizes above 4.
    #[arg(long, global = true)]
    pub long_running: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the solution axioms.
    Check { solution: PathBuf },
    /// Print the structure monoid presentation of an involutive solution.
    Present { solution: PathBuf },
    /// Turn a presentation back into a solution.
    ToSolution { presentation: PathBuf },
    /// Reverse the diagram of two words: prints u\v and v\u.
    Reverse { solution: PathBuf, u: String, v: String },
    /// Right lcm of two words.
    Lcm { solution: PathBuf, u: String, v: String },
    /// The Garside element.
    Delta { solution: PathBuf },
    /// The simple elements.
    Simples { solution: PathBuf },
    /// Order of the automorphism s -> (s\Δ)\Δ on simples.
    Exponent { solution: PathBuf },
    /// Δ-purity and the closure sets of the generators.
    Purity { solution: PathBuf },
    /// Split into two invariant subsets; exit 1 when indecomposable.
    Decompose { solution: PathBuf },
    /// Isomorphism of two solutions.
    Iso { a: PathBuf, b: PathBuf },
    /// Generator bijection carrying one presentation onto another.
    TIso { a: PathBuf, b: PathBuf },
    /// Quotient of a permutation solution by the orbits of fg.
    Quotient { perm_solution: PathBuf },
    /// Δ of the involutive permutation solution defined by a permutation.
    PermDelta { n: usize, perm: String },
    /// All solutions of size n up to isomorphism.
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Run the Garside checks on a directory of solutions or a fresh census.
    VerifyCensus {
        dir: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_TRUE };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, code)) => {
            let _ = out.write_all(report.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

/// Prefixes parse errors with the file name.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse { line, msg: format!("{}: {msg}", path.display()) },
        other => other,
    })
}

fn load_solution(path: &Path) -> Result<Solution> {
    in_file(path, format::parse_solution(&read(path)?))
}

fn load_presentation(path: &Path) -> Result<TableauPresentation> {
    in_file(path, format::parse_presentation(&read(path)?))
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn exit_for(b: bool) -> i32 {
    if b {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

/// Space-free rendering for key-value output: `x1.x2`, `e` for ε.
fn kv_word(w: &Word) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.letters().iter().map(|x| format!("x{}", x + 1)).collect::<Vec<_>>().join(".")
}

fn kv_sets(sets: &[Vec<usize>]) -> String {
    sets.iter()
        .map(|s| s.iter().map(|x| format!("x{}", x + 1)).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("|")
}

fn text_set(s: &[usize]) -> String {
    let body: Vec<String> = s.iter().map(|x| format!("x{}", x + 1)).collect();
    format!("{{{}}}", body.join(", "))
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let kv = cli.format == OutputFormat::Kv;
    let mut o = String::new();
    let code = match &cli.command {
        Command::Check { solution } => {
            let raw = in_file(solution, format::parse_raw_solution(&read(solution)?))?;
            if !raw.is_nondegenerate() {
                if kv {
                    o.push_str("nondegenerate=false\n");
                } else {
                    o.push_str("nondegenerate ✗\n");
                }
                EXIT_FALSE
            } else {
                let sol = raw.into_solution()?;
                let r = sol.report();
                if kv {
                    let _ = writeln!(
                        o,
                        "nondegenerate=true\ninvolutive={}\nbraided={}\nsquare_free={}",
                        r.involutive, r.braided, r.square_free
                    );
                } else {
                    let _ = writeln!(
                        o,
                        "nondegenerate ✓ involutive {} braided {} square_free {}",
                        mark(r.involutive),
                        mark(r.braided),
                        mark(r.square_free)
                    );
                }
                if let Some(v) = r.first_violation.as_ref().filter(|_| !r.is_garside_input()) {
                    let _ = writeln!(o, "{}{v}", if kv { "violation=" } else { "first violation: " });
                }
                exit_for(r.is_garside_input())
            }
        }
        Command::Present { solution } => {
            let sol = load_solution(solution)?;
            o.push_str(&format::render_presentation(&TableauPresentation::from_solution(&sol)?));
            EXIT_TRUE
        }
        Command::ToSolution { presentation } => {
            let pres = load_presentation(presentation)?;
            o.push_str(&format::render_solution(&pres.to_solution()?));
            EXIT_TRUE
        }
        Command::Reverse { solution, u, v } => {
            let sol = load_solution(solution)?;
            let table = ComplementTable::new(&sol);
            let (u, v) = (format::parse_word(u, sol.n())?, format::parse_word(v, sol.n())?);
            let (uv, vu) = table.reverse_words(&u, &v);
            if kv {
                let _ = writeln!(o, "u_under_v={}\nv_under_u={}", kv_word(&uv), kv_word(&vu));
            } else {
                let _ = writeln!(o, "u\\v = {uv}, v\\u = {vu}");
            }
            EXIT_TRUE
        }
        Command::Lcm { solution, u, v } => {
            let sol = load_solution(solution)?;
            let table = ComplementTable::new(&sol);
            let (u, v) = (format::parse_word(u, sol.n())?, format::parse_word(v, sol.n())?);
            let l = table.right_lcm(&u, &v);
            if kv {
                let _ = writeln!(o, "lcm={}", kv_word(&l));
            } else {
                let _ = writeln!(o, "lcm = {l}");
            }
            EXIT_TRUE
        }
        Command::Delta { solution } => {
            let m = StructureMonoid::new(&load_solution(solution)?)?;
            let delta = m.rewrite().canonical(&m.garside_element())?;
            if kv {
                let _ = writeln!(o, "delta={}\ndelta_length={}", kv_word(&delta), delta.len());
            } else {
                let _ = writeln!(o, "Δ = {delta} (length {})", delta.len());
            }
            EXIT_TRUE
        }
        Command::Simples { solution } => {
            let m = StructureMonoid::new(&load_solution(solution)?)?;
            let simples = m.simples()?;
            if kv {
                let words: Vec<String> = simples.elements.iter().map(kv_word).collect();
                let _ = writeln!(o, "simples_count={}\nsimples={}", simples.len(), words.join(","));
            } else {
                let _ = writeln!(o, "{} simples", simples.len());
                for w in &simples.elements {
                    let _ = writeln!(o, "{w}");
                }
            }
            EXIT_TRUE
        }
        Command::Exponent { solution } => {
            let m = StructureMonoid::new(&load_solution(solution)?)?;
            let e = m.exponent()?;
            if kv {
                let _ = writeln!(o, "exponent={e}");
            } else {
                let _ = writeln!(o, "exponent = {e}");
            }
            EXIT_TRUE
        }
        Command::Purity { solution } => {
            let sol = load_solution(solution)?;
            let m = StructureMonoid::new(&sol)?;
            let p = m.purity()?;
            if kv {
                let _ = writeln!(
                    o,
                    "delta_pure={}\nindecomposable={}\npartition={}",
                    p.delta_pure,
                    decomposition(&sol).is_none(),
                    kv_sets(&p.partition)
                );
            } else {
                let _ = writeln!(o, "delta_pure {}", mark(p.delta_pure));
                for (x, set) in p.closure_sets.iter().enumerate() {
                    let _ = writeln!(o, "M\\x{} = {}", x + 1, text_set(set));
                }
            }
            exit_for(p.delta_pure)
        }
        Command::Decompose { solution } => {
            let sol = load_solution(solution)?;
            match decomposition(&sol) {
                Some((y, z)) => {
                    if kv {
                        let _ = writeln!(o, "indecomposable=false\npartition={}", kv_sets(&[y, z]));
                    } else {
                        let _ = writeln!(o, "X = {} ⊔ {}", text_set(&y), text_set(&z));
                    }
                    EXIT_TRUE
                }
                None => {
                    o.push_str(if kv { "indecomposable=true\n" } else { "indecomposable\n" });
                    EXIT_FALSE
                }
            }
        }
        Command::Iso { a, b } => {
            let (a, b) = (load_solution(a)?, load_solution(b)?);
            iso_report(&mut o, kv, are_isomorphic(&a, &b).as_ref())
        }
        Command::TIso { a, b } => {
            let (a, b) = (load_presentation(a)?, load_presentation(b)?);
            iso_report(&mut o, kv, are_t_isomorphic(&a, &b).as_ref())
        }
        Command::Quotient { perm_solution } => {
            let ps = in_file(perm_solution, format::parse_permutation_solution(&read(perm_solution)?))?;
            let (q, sol) = ps.quotient_solution()?;
            for (k, class) in q.classes.iter().enumerate() {
                let _ = writeln!(o, "# [x{}] = {}", q.representative(k) + 1, text_set(class));
            }
            o.push_str(&format::render_presentation(&TableauPresentation::from_solution(&sol)?));
            EXIT_TRUE
        }
        Command::PermDelta { n, perm } => {
            let f = format::parse_permutation(*n, perm, 1)?;
            let delta = delta_from_cycles(&f);
            if kv {
                let _ = writeln!(o, "delta={}", kv_word(&delta));
            } else {
                let _ = writeln!(o, "Δ = {delta}");
            }
            EXIT_TRUE
        }
        Command::Census { n } => {
            let opts = CensusOptions { jobs: cli.jobs, long_running: cli.long_running };
            let entries = census::enumerate_solutions(*n, &opts)?;
            if let Some(dir) = &cli.out {
                census::write_census(dir, &entries)?;
            }
            if kv {
                let _ = writeln!(o, "n={n}\ncount={}", entries.len());
            } else {
                let _ = writeln!(o, "{} solutions", entries.len());
            }
            EXIT_TRUE
        }
        Command::VerifyCensus { dir, n } => {
            let entries = match (dir, n) {
                (Some(dir), None) => census::read_census_dir(dir)?
                    .into_iter()
                    .map(census_entry_or_placeholder)
                    .collect::<Vec<_>>(),
                (None, Some(n)) => {
                    let opts = CensusOptions { jobs: cli.jobs, long_running: cli.long_running };
                    census::enumerate_solutions(*n, &opts)?
                }
                _ => {
                    return Err(Error::Usage("give either a directory or --n".into()))
                }
            };
            let report = census::verify_census(&entries);
            if kv {
                let _ = writeln!(o, "checked={}\nviolations={}", report.checked, report.violations.len());
            } else {
                let _ = writeln!(o, "{} entries checked, {} violations", report.checked, report.violations.len());
            }
            for v in &report.violations {
                let _ = writeln!(o, "{}: {}", v.canonical_hash, v.failure);
            }
            exit_for(report.is_clean())
        }
    };
    Ok((o, code))
}

/// Entries read back from disk. Those failing the axioms keep their flags
/// unset so that verification reports them rather than aborting.
fn census_entry_or_placeholder(sol: Solution) -> CensusEntry {
    census::census_entry(sol.clone()).unwrap_or_else(|_| CensusEntry {
        canonical: sol.canonical_form(),
        report: sol.report(),
        delta_pure: false,
        indecomposable: false,
        square_free: sol.is_square_free(),
        exponent: 0,
        delta_length: 0,
        solution: sol,
    })
}

fn iso_report(o: &mut String, kv: bool, witness: Option<&crate::perm::Permutation>) -> i32 {
    match witness {
        Some(phi) => {
            if kv {
                let _ = writeln!(o, "isomorphic=true\nwitness={phi}");
            } else {
                let _ = writeln!(o, "isomorphic via {phi}");
            }
            EXIT_TRUE
        }
        None => {
            o.push_str(if kv { "isomorphic=false\n" } else { "not isomorphic\n" });
            EXIT_FALSE
        }
    }
}
