//! Exact arithmetic: polynomials in `u` (with `q = u^2`), their quotients,
//! polynomials in `s, t, x` over them, and rational functions in all four.

mod halfint;
mod matrix;
mod mpoly;
mod qrat;
mod ratfn;
mod upoly;

pub use halfint::HalfInt;
pub use matrix::{det_mpoly, det_ratfn};
pub use mpoly::{Exps, LExps, MPoly, Sym};
pub use qrat::QRat;
pub use ratfn::{cyclotomic, Denom, RatFn};
pub use upoly::UPoly;
