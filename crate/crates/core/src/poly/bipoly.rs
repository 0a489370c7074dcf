//! Polynomials in two variables `(q, t)`, used by the general weight oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPoly, RationalFn};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c q^a t^b`
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((a, b), BigInt::from(c));
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: (i32, i32), c: BigInt) {
        let e = self.terms.entry(key).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Set `q = 0` and return a polynomial in `t`.
    pub fn at_q_zero(&self) -> LaurentPoly {
        LaurentPoly::from_big_terms(self.terms.iter().filter(|((a, _), _)| *a == 0).map(|((_, b), c)| (*b, c.clone())))
    }

    /// Set `t = 0` and return a polynomial in `q` (written with variable `t`).
    pub fn at_t_zero(&self) -> LaurentPoly {
        LaurentPoly::from_big_terms(self.terms.iter().filter(|((_, b), _)| *b == 0).map(|((a, _), c)| (*a, c.clone())))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.insert(*k, c.clone());
        }
        r
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        self + &(-o)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut r = BiPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                r.insert((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        r
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((a, b), c)| format!("{}*q^{}*t^{}", c, a, b)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A ratio of two [`BiPoly`] values; equality by cross-multiplication.
#[derive(Clone, Debug)]
pub struct BiRatio {
    pub num: BiPoly,
    pub den: BiPoly,
}

impl BiRatio {
    pub fn one() -> Self {
        BiRatio { num: BiPoly::one(), den: BiPoly::one() }
    }

    pub fn zero() -> Self {
        BiRatio { num: BiPoly::zero(), den: BiPoly::one() }
    }

    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        BiRatio { num, den }
    }

    pub fn mul(&self, o: &BiRatio) -> BiRatio {
        BiRatio { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn div(&self, o: &BiRatio) -> BiRatio {
        BiRatio { num: &self.num * &o.den, den: &self.den * &o.num }
    }

    pub fn add(&self, o: &BiRatio) -> BiRatio {
        BiRatio { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    /// Specialise `q = 0`.
    pub fn at_q_zero(&self) -> RationalFn {
        RationalFn::new(self.num.at_q_zero(), self.den.at_q_zero())
    }

    /// Specialise `t = 0`; the remaining variable is `q`.
    pub fn at_t_zero(&self) -> RationalFn {
        RationalFn::new(self.num.at_t_zero(), self.den.at_t_zero())
    }
}

impl PartialEq for BiRatio {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::one()
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, o: BiPoly) -> BiPoly {
        &self * &o
    }
}
