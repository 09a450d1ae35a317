//! Δ-purity through the closure sets Y_x, and the matching decomposition.
//!
//! ```text
//! cargo run --example purity [solution.sol ...]
//! ```

use std::env;
use std::fs;

use ybe_garside::format::parse_solution;
use ybe_garside::{decomposition, StructureMonoid};

fn main() -> ybe_garside::Result<()> {
    let mut paths: Vec<String> = env::args().skip(1).collect();
    if paths.is_empty() {
        paths = vec![
            "crates/core/examples/data/three_cycle.sol".into(),
            "crates/core/examples/data/five_point.sol".into(),
        ];
    }
    for path in paths {
        let sol = parse_solution(&fs::read_to_string(&path)?)?;
        let m = StructureMonoid::new(&sol)?;
        let report = m.purity()?;
        println!("{path}");
        for (x, (set, dx)) in report.closure_sets.iter().zip(&report.delta_x).enumerate() {
            let ys: Vec<String> = set.iter().map(|y| format!("x{}", y + 1)).collect();
            println!("  Y_x{} = {{{}}}, Δ_x{} = {dx}", x + 1, ys.join(", "), x + 1);
        }
        println!("  Δ-pure: {}", report.delta_pure);
        match decomposition(&sol) {
            Some((y, z)) => {
                let show = |s: &[usize]| s.iter().map(|x| format!("x{}", x + 1)).collect::<Vec<_>>().join(", ");
                println!("  decomposes as {{{}}} ⊔ {{{}}}", show(&y), show(&z));
            }
            None => println!("  indecomposable"),
        }
    }
    Ok(())
}
