//! Monomial ideals of independent sets.
//!
//! For a simple graph `G` on `[n]`, the ideal `I ⊂ K[s_1..s_n, t_1..t_n]` is
//! generated by `prod_{i in S} s_i * prod_{i not in S} t_i` over the
//! independent sets `S`. This crate builds `I`, orders its generators so every
//! prefix colon is generated by variables, and derives its invariants from the
//! independence polynomial. The [`oracle`] module recomputes the same data by
//! brute force so the two routes can be compared.

pub mod bitset;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod indep;
pub mod invariants;
pub mod json;
pub mod monomial;
pub mod oracle;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{build_family, parse_edge_list, FamilySpec, Graph};
pub use ideal::{
    ideal_of_independent_sets, phi, set_sizes, verify_linear_quotients, GeneratorOrder,
    LinearQuotientReport,
};
pub use indep::{
    centipede_coefficients, cycle_power_coefficients, enumerate_independent_sets,
    independence_number, independence_polynomial, path_coefficients, IndependencePolynomial,
};
pub use invariants::{
    alexander_dual, betti_numbers, dual_has_linear_resolution, is_cohen_macaulay,
    krull_dimension, primary_decomposition, projective_dimension, regularity, DualResolution,
    InvariantReport, PrimeComponent, SearchConfig,
};
pub use monomial::{colon_by_monomial, monomial_divides, MonomialIdeal, SquarefreeMonomial, Var};
pub use oracle::{
    betti_table_oracle, colon_membership_check, intersect_ideals, reduced_homology_gf2,
    upper_koszul_complex, BettiTable, SimplicialComplexSmall,
};
