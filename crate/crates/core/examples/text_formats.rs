//! Reading and writing the text formats.
//!
//! ```text
//! cargo run --example text_formats
//! ```

use ybe_garside::format::{
    parse_permutation, parse_presentation, parse_solution, parse_word, render_presentation, render_solution,
};
use ybe_garside::TableauPresentation;

fn main() -> ybe_garside::Result<()> {
    // Cycle notation, image lists, comments and a derived f-block may be mixed.
    let sol = parse_solution(
        "# swap the two points in every g-map
n 2
g 1 (1,2)
g 2 2 1
f derived
",
    )?;
    print!("{}", render_solution(&sol));
    print!("{}", render_presentation(&TableauPresentation::from_solution(&sol)?));

    let pres = parse_presentation("n 3\n1 1 = 2 3\n2 2 = 3 1\n1 2 = 3 3\n")?;
    println!("{} relations, first: {}", pres.len(), pres.relations().next().expect("non-empty"));

    println!("(1,3)(2) on 4 points: {}", parse_permutation(4, "(1,3)(2)", 1)?);
    println!("word: {}", parse_word("x2 3 x1", 3)?);

    // Errors carry the line they occurred on.
    let err = parse_solution("n 2\ng 1 1 2\ng 2 3 1\nf derived\n").unwrap_err();
    println!("error: {err}");
    Ok(())
}
