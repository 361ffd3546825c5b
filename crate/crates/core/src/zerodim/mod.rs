//! Zero-dimensional system analysis: solution counting with and without
//! multiplicity, exact real-solution counting via trace forms, univariate
//! real-root isolation, and certified real solution boxes.

pub mod hermite;
pub mod linalg;
pub mod solve;
pub mod univariate;

pub use hermite::{count_real_solutions, count_solutions, trace_form, TraceForm};
pub use linalg::{
    multiplication_matrix, multiplication_matrix_for_poly, symmetric_inertia, vector_annihilator,
    QMat,
};
pub use solve::{
    analyze, default_box_width, solve_real, BoxStatus, SolutionBox, SolutionSet,
};
pub use univariate::{
    isolate_univariate_roots, isolate_univariate_roots_to_width, refine_to_width,
    sturm_distinct_real_roots, UPoly,
};
