//! The trinomial families, their fractional maps on `mu_(q+1)`, and the
//! algebraic relations satisfied by quadratic factors of the fiber equations.

mod equations;
mod family;
mod lemmas;
mod sweep;
mod uv;

pub use equations::{
    count_all, count_solutions_eq5, count_solutions_eq7, family_one_seventh, fiber_equation,
    fifth_degree, seventh_degree, SolutionCount,
};
pub use family::{
    denominator_nonvanishing, denominator_roots, fractional_map, g_permutes_mu,
    trinomial_criterion, trinomial_decompose, trinomial_family, trinomial_permutes, Family,
    FractionalMap, TrinomialSpec,
};
pub use lemmas::{
    conjugate_condition, discriminant_identity, distinct_root_exclusion, factor_roots,
    fifth_degree_excluded_cases, harvest_witnesses, seventh_degree_excluded_case,
    verify_lemma2_derivation, verify_lemma2_relation, verify_lemma4_derivation,
    verify_lemma4_relation, ExclusionReport, Harvest, Ingredient, LemmaCase, QuadFactorWitness,
};
pub use sweep::{format_histogram, parse_histogram, sweep, SweepReport, SweepRow, CSV_COLUMNS};
pub use uv::{sextic, uv_cubic, uv_identity_check, uv_shifted, UVWitness, UvReport};
