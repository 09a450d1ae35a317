//! Word reversing: complements, right lcms, coherence and word equality.
//!
//! ```text
//! cargo run --example reversing [solution.sol] ["x4 x4"] ["x1 x1"]
//! ```

use std::env;
use std::fs;

use ybe_garside::format::{parse_solution, parse_word};
use ybe_garside::{ComplementTable, RewriteSystem, TableauPresentation};

fn main() -> ybe_garside::Result<()> {
    let mut args = env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "crates/core/examples/data/five_point.sol".into());
    let sol = parse_solution(&fs::read_to_string(&path)?)?;
    let u = parse_word(&args.next().unwrap_or_else(|| "x4 x4".into()), sol.n())?;
    let v = parse_word(&args.next().unwrap_or_else(|| "x1 x1".into()), sol.n())?;

    let table = ComplementTable::new(&sol);
    println!("letter complements x_i \\ x_j:");
    for i in 0..sol.n() {
        let row: Vec<String> = (0..sol.n())
            .map(|j| table.right(i, j).map_or("e".into(), |k| format!("x{}", k + 1)))
            .collect();
        println!("  x{}: {}", i + 1, row.join(" "));
    }
    println!("coherent: {}, left coherent: {}", table.check_coherence(), table.check_left_coherence());

    let (uv, vu) = table.reverse_words(&u, &v);
    println!("u = {u}, v = {v}");
    println!("u\\v = {uv}, v\\u = {vu}");
    let lcm = table.right_lcm(&u, &v);
    println!("u ∨ v = {lcm}");

    let rw = RewriteSystem::new(&TableauPresentation::from_solution(&sol)?);
    assert!(rw.words_equal(&u.concat(&uv), &v.concat(&vu))?);
    let class = rw.class(&lcm)?;
    println!("{} words represent u ∨ v; least is {}", class.len(), rw.canonical(&lcm)?);
    Ok(())
}
