//! Multivariate and univariate polynomial arithmetic: coefficient domains,
//! monomial orders, the shared text grammar, and F_p factorization helpers.

pub mod coeff;
pub mod mono;
pub mod ring;
pub mod text;
pub mod univar;

pub use coeff::{Coeff, Fp, Fq, FqCtx};
pub use mono::{Monomial, Order};
pub use ring::{ring_homomorphism_apply, Poly, Ring};
pub use text::{clear_denominators, parse_poly, print_poly, TextCoeff};
pub use univar::UPoly;
