//! Polynomials in the winding variable `z` with Laurent coefficients in `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use super::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct ZPoly {
    terms: BTreeMap<u32, LaurentPoly>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        Self::z_pow(0, LaurentPoly::one())
    }

    /// `c z^d`
    pub fn z_pow(d: u32, c: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(d, c);
        }
        ZPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: u32) -> LaurentPoly {
        self.terms.get(&d).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn add_term(&mut self, d: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d).or_insert_with(LaurentPoly::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    /// Multiply by `z^d`.
    pub fn shift_z(&self, d: u32) -> Self {
        ZPoly { terms: self.terms.iter().map(|(e, c)| (e + d, c.clone())).collect() }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut r = ZPoly::zero();
        for (d, x) in &self.terms {
            r.add_term(*d, &(x * c));
        }
        r
    }

    /// Evaluate at `z = 1`.
    /// Exact division of every `t`-coefficient.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        let mut out = ZPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &c.div_exact(d)?);
        }
        Some(out)
    }

    pub fn at_z_one(&self) -> LaurentPoly {
        self.terms.values().fold(LaurentPoly::zero(), |acc, c| &acc + c)
    }

    /// Degrees in `z` carrying nonzero coefficients.
    pub fn z_degrees(&self) -> Vec<u32> {
        self.terms.keys().copied().collect()
    }

    pub fn eval_complex(&self, z0: Complex64, t0: Complex64) -> Complex64 {
        self.terms.iter().map(|(d, c)| c.eval_complex(t0) * z0.powu(*d)).sum()
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, o: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        for (d, c) in &o.terms {
            r.add_term(*d, c);
        }
        r
    }
}

impl AddAssign<&ZPoly> for ZPoly {
    fn add_assign(&mut self, o: &ZPoly) {
        for (d, c) in &o.terms {
            self.add_term(*d, c);
        }
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, o: &ZPoly) -> ZPoly {
        self + &(-o)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect() }
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, o: &ZPoly) -> ZPoly {
        let mut r = ZPoly::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &o.terms {
                r.add_term(d1 + d2, &(c1 * c2));
            }
        }
        r
    }
}

impl Zero for ZPoly {
    fn zero() -> Self {
        ZPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, o: ZPoly) -> ZPoly {
        &self + &o
    }
}

impl From<LaurentPoly> for ZPoly {
    fn from(c: LaurentPoly) -> Self {
        ZPoly::z_pow(0, c)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| match d {
                0 => format!("({})", c),
                1 => format!("z*({})", c),
                _ => format!("z^{}*({})", d, c),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({})", self)
    }
}
