//! Exact counting of genus-zero branched covers in two guises: closed-form
//! counts of minimal transitive factorizations in the symmetric group, and
//! the truncated generating series those counts assemble into, together with
//! the identities the series satisfy. Everything is exact big-rational
//! arithmetic; brute-force enumeration of factorizations and of plane trees
//! provides independent cross-checks.

pub mod acceptance;
pub mod closed_form;
pub mod error;
pub mod genseries;
pub mod identity;
pub mod lagrange;
pub mod numbers;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod series;
pub mod trees;

pub use closed_form::{balanced_tree_prediction, g_alpha, h_alpha, CountKind, CountResult};
pub use error::{Error, Result};
pub use genseries::{build_series, SeriesTag};
pub use identity::{verify, verify_from_counts, IdentityId, VerifyReport};
pub use lagrange::{branch_poly_exp, branch_poly_power, lagrange_coeff, solve_fixed_point, Kernel};
pub use oracle::{
    census_arbitrary, census_transpositions, count_arbitrary_factorizations,
    count_transposition_factorizations, OracleBudget,
};
pub use partition::{partitions_of, riemann_hurwitz_genus, Partition};
pub use perm::Permutation;
pub use poly::{Monomial, PolyCoeff};
pub use series::{first_discrepancy, Discrepancy, Series, Var};
pub use trees::{
    count_balanced, count_planted, count_pseudo, enumerate_planted, enumerate_pseudo,
    is_balanced, match_leaves, pseudo_census, validate_planted, validate_pseudo, Color,
    LeafMatching, Orientation, PlaneTree, TreeBudget, TreeStats,
};
