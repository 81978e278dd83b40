//! Two sides of an identity, compared exactly.

use crate::exactalg::RatFn;

#[derive(Clone, Debug)]
pub struct Comparison {
    /// The side computed from definitions.
    pub lhs: RatFn,
    /// The side given by the claimed formula.
    pub rhs: RatFn,
}

impl Comparison {
    pub fn new(lhs: RatFn, rhs: RatFn) -> Self {
        Comparison { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}
