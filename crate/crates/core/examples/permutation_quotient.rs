//! Permutation solutions S(x, y) = (g(y), f(x)): the quotient of a braided
//! non-involutive one, cancellation witnesses, and Δ read off the cycles.
//!
//! ```text
//! cargo run --example permutation_quotient [file.perm]
//! ```

use std::env;
use std::fs;

use ybe_garside::format::{parse_permutation_solution, render_presentation};
use ybe_garside::{delta_from_cycles, PermutationSolution, StructureMonoid, TableauPresentation};

fn main() -> ybe_garside::Result<()> {
    let path = env::args()
        .nth(1)
        .unwrap_or_else(|| "crates/core/examples/data/commuting_involutions.perm".into());
    let ps = parse_permutation_solution(&fs::read_to_string(&path)?)?;
    let axioms = ps.axioms();
    println!("f = {}, g = {}: braided {}, involutive {}", ps.f(), ps.g(), axioms.braided, axioms.involutive);

    let (q, sol) = ps.quotient_solution()?;
    for (k, class) in q.classes.iter().enumerate() {
        let members: Vec<String> = class.iter().map(|x| format!("x{}", x + 1)).collect();
        println!("[x{}] = {{{}}}", q.representative(k) + 1, members.join(", "));
    }
    print!("{}", render_presentation(&TableauPresentation::from_solution(&sol)?));

    for class in q.classes.iter().filter(|c| c.len() > 1) {
        let (x, x2) = (class[0], class[1]);
        for link in ps.cancellation_witness(x, x2).expect("same class") {
            let chain: Vec<String> =
                link.chain.iter().map(|&(a, b)| format!("x{}x{}", a + 1, b + 1)).collect();
            println!("x{} = x{} cancelling x{}: {}", link.from + 1, link.to + 1, link.via + 1, chain.join(" = "));
        }
    }

    // For an involutive permutation solution Δ comes straight from the cycles of f.
    let f = ps.f().compose(ps.g());
    let inv = PermutationSolution::involutive_from(f.clone());
    let m = StructureMonoid::new(&inv.to_solution())?;
    let from_cycles = delta_from_cycles(&f);
    println!(
        "f = {f}: Δ from cycles {from_cycles}, from lcms {}, equal {}",
        m.garside_element(),
        m.rewrite().words_equal(&from_cycles, &m.garside_element())?
    );
    Ok(())
}
