//! Enumerate all solutions of a given size up to isomorphism and run the
//! Garside checks on each.
//!
//! ```text
//! cargo run --release --example census -- 4 [out-dir]
//! ```

use std::env;
use std::path::Path;
use std::time::Instant;

use ybe_garside::census::write_census;
use ybe_garside::{enumerate_solutions, verify_census, CensusOptions};

fn main() -> ybe_garside::Result<()> {
    let mut args = env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);
    let opts = CensusOptions { jobs: None, long_running: n > 4 };

    let t = Instant::now();
    let entries = enumerate_solutions(n, &opts)?;
    println!("{} solutions of size {n} ({:.2?})", entries.len(), t.elapsed());

    println!("{:<18} {:>11} {:>12} {:>10} {:>8}", "canonical-hash", "square_free", "decomposable", "delta_pure", "exponent");
    for e in &entries {
        println!(
            "{:<18} {:>11} {:>12} {:>10} {:>8}",
            e.canonical_hash(),
            e.square_free,
            !e.indecomposable,
            e.delta_pure,
            e.exponent
        );
    }

    let report = verify_census(&entries);
    println!("{} entries verified, {} violations", report.checked, report.violations.len());
    for v in &report.violations {
        println!("  {}: {}", v.canonical_hash, v.failure);
    }
    if let Some(dir) = args.next() {
        write_census(Path::new(&dir), &entries)?;
        println!("written to {dir}");
    }
    Ok(())
}
