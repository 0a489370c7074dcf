//! Quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// `num / den` with `den ≠ 0`. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

thread_local! {
    static CYCLOTOMIC: std::cell::RefCell<Vec<LaurentPoly>> = const { std::cell::RefCell::new(Vec::new()) };
}

// Φ_d by exact division of t^d - 1 by the cyclotomics of proper divisors.
fn cyclotomic(d: usize) -> LaurentPoly {
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(d).cloned()) {
        return p;
    }
    let mut p = &LaurentPoly::t_pow(d as i32) - &LaurentPoly::one();
    for e in 1..d {
        if d % e == 0 {
            p = p.div_exact(&cyclotomic(e)).expect("cyclotomic factor");
        }
    }
    CYCLOTOMIC.with(|c| {
        let mut c = c.borrow_mut();
        while c.len() <= d {
            c.push(LaurentPoly::zero());
        }
        c[d] = p.clone();
    });
    p
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RationalFn { num, den };
        r.normalise();
        r
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    fn normalise(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let shift = self.den.low_degree().unwrap();
        self.den = self.den.shift(-shift);
        self.num = self.num.shift(-shift);
        let deg = self.den.degree().unwrap();
        for d in 1..=deg.max(0) as usize {
            let phi = cyclotomic(d);
            while self.den.degree().unwrap() >= phi.degree().unwrap() {
                match (self.den.div_exact(&phi), self.num.div_exact(&phi)) {
                    (Some(a), Some(b)) => {
                        self.den = a;
                        self.num = b;
                    }
                    _ => break,
                }
            }
        }
        let g = self.num.content().gcd(&self.den.content());
        let mut g = if g.is_zero() { BigInt::one() } else { g };
        if self.den.leading_coeff().is_negative() {
            g = -g;
        }
        self.num = self.num.div_scalar_exact(&g).unwrap();
        self.den = self.den.div_scalar_exact(&g).unwrap();
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this equals, when the denominator divides exactly.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RationalFn::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn eval_complex(&self, t0: Complex64) -> Result<Complex64> {
        let d = self.den.eval_complex(t0);
        if d.norm() == 0.0 {
            return Err(Error::Pole);
        }
        Ok(self.num.eval_complex(t0) / d)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl Zero for RationalFn {
    fn zero() -> Self {
        RationalFn::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFn {
    fn one() -> Self {
        RationalFn::from_poly(LaurentPoly::one())
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, o: &RationalFn) -> RationalFn {
        if self.den == o.den {
            return RationalFn::new(&self.num + &o.num, self.den.clone());
        }
        RationalFn::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, o: &RationalFn) -> RationalFn {
        self + &(-o)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, o: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, o: &RationalFn) -> RationalFn {
        self * &o.inv().expect("division by zero rational function")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, o: RationalFn) -> RationalFn { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qnum::{one_minus_t_pow, pochhammer};

    #[test]
    fn cancels_cyclotomic_factors() {
        let r = RationalFn::new(pochhammer(4), &pochhammer(2) * &pochhammer(2));
        assert_eq!(r.to_laurent().unwrap().to_string(), "1 + t + 2*t^2 + t^3 + t^4");
        assert!(r.den().is_one());
    }

    #[test]
    fn arithmetic_and_equality() {
        let a = RationalFn::new(LaurentPoly::one(), one_minus_t_pow(1));
        let b = RationalFn::new(LaurentPoly::t(), one_minus_t_pow(1));
        let s = &a - &b;
        assert_eq!(s, RationalFn::one());
        let c = RationalFn::new(LaurentPoly::constant(2), LaurentPoly::constant(-4));
        assert_eq!(c.num(), &LaurentPoly::constant(-1));
        assert_eq!(c.den(), &LaurentPoly::constant(2));
    }

    #[test]
    fn pole_detection() {
        let r = RationalFn::new(LaurentPoly::one(), one_minus_t_pow(1));
        assert_eq!(r.eval_complex(Complex64::new(1.0, 0.0)), Err(Error::Pole));
        assert!((r.eval_complex(Complex64::new(0.5, 0.0)).unwrap().re - 2.0).abs() < 1e-14);
    }
}
