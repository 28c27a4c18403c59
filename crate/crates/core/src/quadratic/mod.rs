//! Quadratic algebras and T*-extensions.
//!
//! A dual cochain `ω: L × L → L*` is stored as a tensor `w(i, j, k) =
//! ω(e_i, e_j)(e_k)`, and `z: L → L*` as a matrix `Z` with
//! `z(x)(y) = yᵀZx`. The T*-extension `L ⊕ L*` uses the basis
//! `(e_1 … e_n, e_1* … e_n*)` and the hyperbolic form `q(x+f, y+g) = f(y) + g(x)`.

mod equivalence;
mod form;
mod reconstruct;
mod series;
mod tstar;

pub use equivalence::{
    equivalence_map_report, tstar_coboundary, tstar_equivalence, EquivalenceMapReport, TstarEquivalence,
};
pub use form::{check_form, form_invariance, is_isotropic, FormReport, QuadraticHjl};
pub use reconstruct::{reconstruct_from_isotropic_ideal, Reconstruction};
pub use series::{check_length_bounds, series, LengthBound, LengthBounds, Series};
pub use tstar::{
    dual_cochain_report, hyperbolic_form, is_jordancyclic, jordancyclic_cocycles, tstar_bracket, tstar_cocycle_report,
    tstar_extension, tstar_preconditions, tstar_split, TstarPreconditions,
};
