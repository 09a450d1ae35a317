//! Garside element, simple elements and exponent of a structure monoid.
//!
//! ```text
//! cargo run --example garside [solution.sol]
//! ```

use std::env;
use std::fs;

use ybe_garside::format::parse_solution;
use ybe_garside::StructureMonoid;

fn main() -> ybe_garside::Result<()> {
    let path = env::args().nth(1).unwrap_or_else(|| "crates/core/examples/data/three_cycle.sol".into());
    let m = StructureMonoid::new(&parse_solution(&fs::read_to_string(&path)?)?)?;

    let delta = m.garside_element();
    println!("Δ = {delta}, length {}", delta.len());
    println!("every generator divides Δ on both sides: {}", m.generators_divide_delta(&delta)?);

    let simples = m.simples()?;
    println!("{} simple elements:", simples.len());
    for (w, subset) in simples.elements.iter().zip(&simples.generating_subsets) {
        let gens: Vec<String> = subset.iter().map(|x| format!("x{}", x + 1)).collect();
        println!("  {:<10} lcm of {{{}}}", w.to_string(), gens.join(", "));
    }
    println!("closed under right complement: {}", m.simples_closed_under_complement(&simples)?);

    let phi = m.phi_on_simples(&simples)?;
    println!("s -> (s\\Δ)\\Δ permutes the simples as {phi}; exponent {}", m.exponent()?);
    Ok(())
}
