//! Finite set-theoretic solutions of the Yang–Baxter equation and the Garside
//! structure of their structure monoids.
//!
//! A solution on `X = {0, .., n-1}` is stored through its component maps:
//! `S(i, j) = (g_i(j), f_j(i))`. From an involutive braided solution one gets
//! a presentation with `n(n-1)/2` length-two relations, a complement table for
//! word reversing, the Garside element `Δ`, the simple elements, and the
//! Δ-purity / decomposability dichotomy.
//!
//! ```
//! use ybe_garside::{Permutation, Solution, StructureMonoid};
//!
//! let phi = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
//! let sol = Solution::new(vec![phi.clone(); 3], vec![phi.inverse(); 3]).unwrap();
//! assert!(sol.is_involutive() && sol.is_braided());
//!
//! let m = StructureMonoid::new(&sol).unwrap();
//! assert_eq!(m.garside_element().len(), 3);
//! assert_eq!(m.simples().unwrap().len(), 8);
//! ```

pub mod census;
pub mod cli;
pub mod error;
pub mod format;
pub mod garside;
pub mod perm;
pub mod permutation_solution;
pub mod presentation;
pub mod reversing;
pub mod solution;

pub use census::{enumerate_solutions, verify_census, CensusEntry, CensusOptions};
pub use error::{Error, Result};
pub use garside::{decomposition, is_indecomposable, PurityReport, SimpleSet, StructureMonoid};
pub use perm::Permutation;
pub use permutation_solution::{delta_from_cycles, PermutationSolution, QuotientMap};
pub use presentation::{are_t_isomorphic, Relation, TableauPresentation};
pub use reversing::{words_equal_in_m, ComplementTable, RewriteSystem, Word};
pub use solution::{are_isomorphic, derive_f_from_g, Solution, SolutionReport};
