//! Axiom checks, violation witnesses and isomorphism testing.
//!
//! ```text
//! cargo run --example check_solution [path/to/solution.sol]
//! ```

use std::env;
use std::fs;

use ybe_garside::format::parse_solution;
use ybe_garside::{are_isomorphic, Permutation, Solution};

fn main() -> ybe_garside::Result<()> {
    let path = env::args().nth(1).unwrap_or_else(|| "crates/core/examples/data/five_point.sol".into());
    let sol = parse_solution(&fs::read_to_string(&path)?)?;

    let report = sol.report();
    println!("{path}: n = {}", sol.n());
    println!("  nondegenerate {}", report.nondegenerate);
    println!("  involutive    {}", report.involutive);
    println!("  braided       {}", report.braided);
    println!("  square_free   {}", report.square_free);
    if let Some(v) = &report.first_violation {
        println!("  first violation: {v}");
    }

    // Breaking one component map is caught with a witness.
    let mut g = sol.g_maps().to_vec();
    g[0] = Permutation::identity(sol.n());
    let broken = Solution::new(g, sol.f_maps().to_vec())?;
    if let Some(v) = broken.involutive_violation().or_else(|| broken.braided_violation()) {
        println!("with g_1 replaced by the identity: {v}");
    }

    // Relabelled copies share a canonical form, and the witness maps one onto the other.
    let phi = Permutation::new((0..sol.n()).rev().collect())?;
    let moved = sol.relabel(&phi);
    let witness = are_isomorphic(&sol, &moved).expect("relabelled copies are isomorphic");
    println!("relabelled by {phi}: isomorphic via {witness}");
    assert_eq!(sol.canonical_form(), moved.canonical_form());
    Ok(())
}
