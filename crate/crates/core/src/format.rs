//! Text formats. All indices are 1-based on the page; `#` starts a comment
//! line.
//!
//! Solution:
//! ```text
//! n 3
//! g 1 2 3 1        # image list of g_1
//! g 2 (1,2,3)      # or cycle notation
//! g 3 2 3 1
//! f derived        # or n lines `f <j> <images>`
//! ```
//!
//! Presentation: `n <int>` then one relation `i j = k l` per line.
//!
//! Permutation solution: `n <int>`, `f <perm>`, `g <perm>`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permutation_solution::PermutationSolution;
use crate::presentation::{Relation, TableauPresentation};
use crate::reversing::Word;
use crate::solution::{derive_f_from_g, Solution};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then_some((k + 1, l))
    })
}

fn strip_trailing_comment(s: &str) -> &str {
    s.split('#').next().unwrap_or("").trim()
}

fn parse_index(tok: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = tok.parse().map_err(|_| parse_err(line, format!("expected an index, got `{tok}`")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("index {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn parse_size<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (line, l) = lines.next().ok_or_else(|| parse_err(1, "missing `n <int>` header"))?;
    let mut toks = strip_trailing_comment(l).split_whitespace();
    match (toks.next(), toks.next(), toks.next()) {
        (Some("n"), Some(v), None) => {
            let n: usize = v.parse().map_err(|_| parse_err(line, format!("bad size `{v}`")))?;
            if n == 0 {
                return Err(parse_err(line, "n must be at least 1"));
            }
            Ok(n)
        }
        _ => Err(parse_err(line, format!("expected `n <int>`, got `{l}`"))),
    }
}

/// Image list of a map on `{1..n}`, given in cycle notation `(1,2,3)(5)` or
/// as a one-line image list `2 3 1`. `()` is the identity. A one-line list is
/// not checked for bijectivity.
fn parse_map(n: usize, text: &str, line: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.starts_with('(') {
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let (inner, tail) = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|e| (&r[..e], &r[e + 1..])))
                .ok_or_else(|| parse_err(line, format!("malformed cycle notation `{text}`")))?;
            let cycle = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| parse_index(t, n, line))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = tail.trim_start();
        }
        let p = Permutation::from_cycles(n, &cycles).map_err(|e| parse_err(line, e.to_string()))?;
        Ok(p.images().to_vec())
    } else {
        let images = text
            .split_whitespace()
            .map(|t| parse_index(t, n, line))
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(parse_err(line, format!("expected {n} images, got {}", images.len())));
        }
        Ok(images)
    }
}

/// Parses a permutation of `{1..n}` in cycle or one-line notation.
pub fn parse_permutation(n: usize, text: &str, line: usize) -> Result<Permutation> {
    Permutation::new(parse_map(n, text, line)?).map_err(|e| parse_err(line, e.to_string()))
}

/// Splits `<tag> <i> <rest>` and checks the tag.
fn tagged_row<'a>(l: &'a str, tag: &str, n: usize, line: usize) -> Result<(usize, &'a str)> {
    let l = strip_trailing_comment(l);
    let rest = l
        .strip_prefix(tag)
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| parse_err(line, format!("expected a `{tag} <i> ...` line, got `{l}`")))?
        .trim_start();
    let (idx, perm) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    Ok((parse_index(idx, n, line)?, perm))
}

fn parse_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    tag: &str,
    n: usize,
    first: Option<(usize, &'a str)>,
    end_line: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut out: Vec<Option<Vec<usize>>> = vec![None; n];
    for k in 0..n {
        let (line, l) = match (k, first) {
            (0, Some(fl)) => fl,
            _ => lines.next().ok_or_else(|| parse_err(end_line, format!("missing `{tag}` line")))?,
        };
        let (i, body) = tagged_row(l, tag, n, line)?;
        if out[i].is_some() {
            return Err(parse_err(line, format!("{tag}_{} given twice", i + 1)));
        }
        out[i] = Some(parse_map(n, body, line)?);
    }
    Ok(out.into_iter().map(|p| p.expect("n distinct rows")).collect())
}

/// A solution file before any bijectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSolution {
    pub n: usize,
    pub g: Vec<Vec<usize>>,
    /// `None` for `f derived`.
    pub f: Option<Vec<Vec<usize>>>,
}

impl RawSolution {
    /// The `f` rows, derived from `g` when the file says so. `None` when some
    /// map is not a bijection.
    pub fn f_rows(&self) -> Option<Vec<Vec<usize>>> {
        match &self.f {
            Some(f) => Some(f.clone()),
            None => {
                let g = self.g.iter().cloned().map(Permutation::new).collect::<Result<Vec<_>>>().ok()?;
                derive_f_from_g(&g).map(|f| f.into_iter().map(|p| p.images().to_vec()).collect())
            }
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.f_rows()
            .is_some_and(|f| crate::solution::is_nondegenerate(self.n, &self.g, &f))
    }

    pub fn into_solution(self) -> Result<Solution> {
        let f = self
            .f_rows()
            .ok_or_else(|| Error::NotAPermutation("some g- or derived f-map is not a bijection".into()))?;
        Solution::from_images(self.g, f)
    }
}

fn end_line(text: &str) -> usize {
    text.lines().count() + 1
}

pub fn parse_raw_solution(text: &str) -> Result<RawSolution> {
    let end = end_line(text);
    let mut lines = content_lines(text);
    let n = parse_size(&mut lines)?;
    let g = parse_block(&mut lines, "g", n, None, end)?;
    let (line, l) = lines.next().ok_or_else(|| parse_err(end, "missing f block or `f derived`"))?;
    let f = if strip_trailing_comment(l) == "f derived" {
        None
    } else {
        Some(parse_block(&mut lines, "f", n, Some((line, l)), end)?)
    };
    if let Some((line, l)) = lines.next() {
        return Err(parse_err(line, format!("unexpected trailing line `{l}`")));
    }
    Ok(RawSolution { n, g, f })
}

/// Parses a solution file; degenerate input is an error.
pub fn parse_solution(text: &str) -> Result<Solution> {
    parse_raw_solution(text)?.into_solution()
}

fn render_images(p: &Permutation) -> String {
    let v: Vec<String> = p.images().iter().map(|x| (x + 1).to_string()).collect();
    v.join(" ")
}

pub fn render_solution(sol: &Solution) -> String {
    let mut out = format!("n {}\n", sol.n());
    for i in 0..sol.n() {
        let _ = writeln!(out, "g {} {}", i + 1, render_images(sol.g(i)));
    }
    for j in 0..sol.n() {
        let _ = writeln!(out, "f {} {}", j + 1, render_images(sol.f(j)));
    }
    out
}

pub fn parse_presentation(text: &str) -> Result<TableauPresentation> {
    let mut lines = content_lines(text);
    let n = parse_size(&mut lines)?;
    let mut rels = Vec::new();
    for (line, l) in lines {
        let l = strip_trailing_comment(l);
        let (lhs, rhs) = l
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("expected `i j = k l`, got `{l}`")))?;
        let side = |s: &str| -> Result<(usize, usize)> {
            let toks: Vec<&str> = s.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_err(line, format!("relation sides must have length 2, got `{}`", s.trim())));
            }
            Ok((parse_word_token(toks[0], n, line)?, parse_word_token(toks[1], n, line)?))
        };
        let rel = Relation::new(side(lhs)?, side(rhs)?).map_err(|e| parse_err(line, e.to_string()))?;
        rels.push(rel);
    }
    TableauPresentation::new(n, rels)
}

pub fn render_presentation(p: &TableauPresentation) -> String {
    let mut out = format!("n {}\n", p.n());
    for r in p.relations() {
        let ((a, b), (c, d)) = (r.lhs(), r.rhs());
        let _ = writeln!(out, "{} {} = {} {}", a + 1, b + 1, c + 1, d + 1);
    }
    out
}

pub fn parse_permutation_solution(text: &str) -> Result<PermutationSolution> {
    let mut lines = content_lines(text);
    let n = parse_size(&mut lines)?;
    let mut f = None;
    let mut g = None;
    for (line, l) in lines {
        let l = strip_trailing_comment(l);
        let (tag, body) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let slot = match tag {
            "f" => &mut f,
            "g" => &mut g,
            _ => return Err(parse_err(line, format!("expected `f <perm>` or `g <perm>`, got `{l}`"))),
        };
        if slot.is_some() {
            return Err(parse_err(line, format!("`{tag}` given twice")));
        }
        *slot = Some(parse_permutation(n, body, line)?);
    }
    match (f, g) {
        (Some(f), Some(g)) => PermutationSolution::new(f, g),
        _ => Err(parse_err(end_line(text), "both `f` and `g` lines are required")),
    }
}

fn parse_word_token(tok: &str, n: usize, line: usize) -> Result<usize> {
    let digits = tok.strip_prefix('x').unwrap_or(tok);
    parse_index(digits, n, line)
}

/// Parses `x4 x4`, `4 4` or `e` (the empty word).
pub fn parse_word(text: &str, n: usize) -> Result<Word> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.is_empty() || toks == ["e"] {
        return Ok(Word::empty());
    }
    toks.iter().map(|t| parse_word_token(t, n, 1)).collect::<Result<Vec<_>>>().map(Word::new)
}
