//! From a solution to its monoid presentation and back.
//!
//! ```text
//! cargo run --example presentation
//! ```

use ybe_garside::{are_t_isomorphic, Permutation, Relation, Solution, TableauPresentation};

fn main() -> ybe_garside::Result<()> {
    let phi = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?;
    let sol = Solution::new(vec![phi.clone(); 4], vec![phi.inverse(); 4])?;

    let pres = TableauPresentation::from_solution(&sol)?;
    println!("{} relations on {} generators:", pres.len(), pres.n());
    for r in pres.relations() {
        println!("  {r}");
    }
    let report = pres.validate();
    println!(
        "n(n-1)/2 relations: {}, no repeated word: {}, no square word: {}",
        report.count_ok, report.words_unique, report.square_free
    );

    // The presentation determines the solution exactly.
    assert_eq!(pres.to_solution()?, sol);

    // Renaming generators gives a t-isomorphic presentation.
    let s = Permutation::from_cycles(4, &[vec![0, 2, 1, 3]])?;
    let renamed = pres.relabel(&s);
    let w = are_t_isomorphic(&pres, &renamed).expect("renamed presentations are t-isomorphic");
    println!("renamed by {s}: t-isomorphic via {w}");

    // A word used twice cannot come from a solution.
    let bad = TableauPresentation::new(
        3,
        [Relation::new((0, 0), (1, 1))?, Relation::new((0, 0), (2, 2))?],
    )?;
    println!("repeated word: {}", bad.to_solution().unwrap_err());
    Ok(())
}
