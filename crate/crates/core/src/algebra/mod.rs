//! Exact polynomial algebra over the rationals and the constructibility
//! classifiers built on it.

pub mod constructibility;
pub mod cubic;
pub mod newton;
pub mod polynomial;
pub mod roots;

pub use constructibility::{
    check_cubic_verdict, check_gauss_wantzel_verdict, check_tricuspoid_verdict, cubic_constructibility,
    gauss_wantzel, tricuspoid_division_constructible, ConstructibilityVerdict, Witness,
};
pub use cubic::{build_division_cubic, build_division_cubic_int, first_division_root, normalized_residual};
pub use newton::{irreducible_by_dumas, newton_polygon, DumasCertificate, DumasOutcome, NewtonPolygon, PolygonSegment};
pub use polynomial::RationalPolynomial;
pub use roots::{factor_over_rationals, rational_roots, select_root, Factorization, RootMatch};
