#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cheb;
pub mod check;
pub mod conjectures;
pub mod error;
pub mod exactalg;
pub mod hankel;
pub mod limits;
pub mod normalized;
pub mod qfun;
pub mod rogers;
pub mod series;
pub mod suite;

pub use error::{Error, Result};
pub use exactalg::{HalfInt, MPoly, QRat, RatFn, Sym, UPoly};
