//! Exact toolkit for the combinatorics, theta-constant relations and ideal
//! theory of the genus-3 Göpel variety: symplectic F₂ machinery, certified
//! high-precision theta evaluation, a polynomial/Gröbner engine, and the
//! verification pipeline tying them together.

pub mod error;
pub mod f2;
pub mod groebner;
pub mod linalg;
pub mod pipeline;
pub mod poly;
pub mod relations;
pub mod theta;

pub use error::{Error, Result};
