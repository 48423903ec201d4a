//! Exact classical and six-point Ceva–Menelaus criteria and Routh area
//! ratios, each paired with a projective construction oracle.
//!
//! Everything is exact: ratios are projective pairs of big integers, points
//! and lines are primitive homogeneous integer triples, and areas are big
//! rationals.

mod cleared;
pub mod error;
pub mod number;
pub mod projective;
pub mod registry;
pub mod routh;
pub mod theorems;

pub use error::{Error, Result};
pub use number::{parse_ratio, parse_rational, ProjRatio, RatioValue, Rational};
pub use projective::{
    collinear, concurrent, join, meet, ratio_of_section, section_point, signed_area, AffineMap,
    Line, ProjPoint, Triangle,
};
pub use registry::{AreaFormula, Criterion, Family, Ratios, Registry};
pub use routh::{
    oracle_area_ratio, routh_cevian_triangle_ratio, routh_menelaus_triangle_ratio,
    sixpoint_edge_triangle_ratio, sixpoint_vertex_triangle_ratio, AreaClass, AreaRatio,
    ClearedArea,
};
pub use theorems::{
    ceva_cleared, ceva_holds, classical_embedding, collinearity_cleared, concurrence_cleared,
    menelaus_cleared, menelaus_holds, sixpoint_collinearity_holds, sixpoint_concurrence_holds,
    solve_sixth_ratio, CevianRatios, Component, PartialSixRatios, SixPointMode, SixRatios,
    SixthRatio,
};
