//! Exact coefficient arithmetic.

mod bipoly;
mod format;
mod laurent;
pub mod qnum;
mod rational;
mod zpoly;

pub use bipoly::{BiPoly, BiRatio};
pub use laurent::LaurentPoly;
pub use qnum::{b_lambda, bracket, pochhammer, q_binomial, q_factorial, QKind};
pub use rational::RationalFn;
pub use zpoly::ZPoly;

use std::fmt::{Debug, Display};

use num_complex::Complex64;

/// Coefficient rings used by symmetric polynomials.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static + From<LaurentPoly> {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient, if it exists in the ring.
    fn try_div(&self, o: &Self) -> Option<Self>;
    fn eval_complex(&self, t0: Complex64) -> Complex64;
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        self.div_exact(o)
    }
    fn eval_complex(&self, t0: Complex64) -> Complex64 {
        LaurentPoly::eval_complex(self, t0)
    }
}

impl Ring for RationalFn {
    fn zero() -> Self {
        <RationalFn as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <RationalFn as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        RationalFn::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self * &i)
    }
    fn eval_complex(&self, t0: Complex64) -> Complex64 {
        RationalFn::eval_complex(self, t0).unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    }
}
