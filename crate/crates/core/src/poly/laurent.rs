//! Laurent polynomials in `t` with exact integer coefficients.
//!
//! Coefficients live in machine words until an operation overflows, at which
//! point the polynomial is promoted to `BigInt` storage. Canonical form is
//! maintained after every operation, so derived equality is exact.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// Element of ℤ[t, t⁻¹].
///
/// `coeffs[i]` multiplies `t^(low + i)`; both ends are nonzero unless the
/// polynomial is zero, in which case the vector is empty and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i32,
    c: Coeffs,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, c: Coeffs::Small(Vec::new()) }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { low: e, c: Coeffs::Small(vec![c]) }
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `t^e`
    pub fn t_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// Build from a dense slice starting at exponent `low`.
    pub fn from_coeffs(low: i32, coeffs: &[i64]) -> Self {
        Self::from_small(low, coeffs.to_vec())
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc += &Self::monomial(c, e);
        }
        acc
    }

    pub fn from_big_terms<I: IntoIterator<Item = (i32, BigInt)>>(terms: I) -> Self {
        let mut items: Vec<(i32, BigInt)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if items.is_empty() {
            return Self::zero();
        }
        items.sort_by_key(|(e, _)| *e);
        let low = items[0].0;
        let high = items[items.len() - 1].0;
        let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in items {
            v[(e - low) as usize] += c;
        }
        Self::from_big(low, v)
    }

    fn from_small(low: i32, mut v: Vec<i64>) -> Self {
        let lead = v.iter().position(|&x| x != 0);
        match lead {
            None => Self::zero(),
            Some(s) => {
                let end = v.iter().rposition(|&x| x != 0).unwrap();
                v.truncate(end + 1);
                v.drain(..s);
                LaurentPoly { low: low + s as i32, c: Coeffs::Small(v) }
            }
        }
    }

    fn from_big(low: i32, mut v: Vec<BigInt>) -> Self {
        let lead = v.iter().position(|x| !x.is_zero());
        match lead {
            None => Self::zero(),
            Some(s) => {
                let end = v.iter().rposition(|x| !x.is_zero()).unwrap();
                v.truncate(end + 1);
                v.drain(..s);
                let small: Option<Vec<i64>> = v.iter().map(|x| x.to_i64()).collect();
                let c = match small {
                    Some(sv) => Coeffs::Small(sv),
                    None => Coeffs::Big(v),
                };
                LaurentPoly { low: low + s as i32, c }
            }
        }
    }

    fn big_vec(&self) -> Vec<BigInt> {
        match &self.c {
            Coeffs::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            Coeffs::Big(v) => v.clone(),
        }
    }

    fn len(&self) -> usize {
        match &self.c {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && matches!(&self.c, Coeffs::Small(v) if v.len() == 1 && v[0] == 1)
    }

    /// Lowest exponent with nonzero coefficient (`None` for zero).
    pub fn low_degree(&self) -> Option<i32> {
        if self.is_zero() { None } else { Some(self.low) }
    }

    pub fn degree(&self) -> Option<i32> {
        if self.is_zero() { None } else { Some(self.low + self.len() as i32 - 1) }
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let i = e as i64 - self.low as i64;
        if i < 0 || i as usize >= self.len() {
            return BigInt::zero();
        }
        match &self.c {
            Coeffs::Small(v) => BigInt::from(v[i as usize]),
            Coeffs::Big(v) => v[i as usize].clone(),
        }
    }

    /// Coefficient as `i64`, if it fits.
    pub fn coeff_i64(&self, e: i32) -> Option<i64> {
        self.coeff(e).to_i64()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> Vec<(i32, BigInt)> {
        self.big_vec()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i32, c))
            .collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Every coefficient is ≥ 0.
    pub fn is_nonnegative(&self) -> bool {
        match &self.c {
            Coeffs::Small(v) => v.iter().all(|&x| x >= 0),
            Coeffs::Big(v) => v.iter().all(|x| !x.is_negative()),
        }
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + e, c: self.c.clone() }
    }

    pub fn scale(&self, k: i64) -> Self {
        self * &Self::constant(k)
    }

    pub fn scale_big(&self, k: &BigInt) -> Self {
        let v: Vec<BigInt> = self.big_vec().into_iter().map(|x| x * k).collect();
        Self::from_big(self.low, v)
    }

    /// Substitute `t -> t^-1`.
    pub fn invert_var(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let high = self.degree().unwrap();
        match &self.c {
            Coeffs::Small(v) => Self::from_small(-high, v.iter().rev().copied().collect()),
            Coeffs::Big(v) => Self::from_big(-high, v.iter().rev().cloned().collect()),
        }
    }

    /// Substitute `t -> t^m` for `m ≥ 1`.
    pub fn dilate(&self, m: i32) -> Self {
        assert!(m >= 1);
        Self::from_big_terms(self.terms().into_iter().map(|(e, c)| (e * m, c)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `t = 0`; `None` if negative powers are present.
    pub fn at_zero(&self) -> Option<BigInt> {
        if !self.is_polynomial() {
            return None;
        }
        Some(self.coeff(0))
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.big_vec().into_iter().sum()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in self.big_vec() {
            g = g.gcd(&x);
        }
        g
    }

    pub fn leading_coeff(&self) -> BigInt {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => BigInt::zero(),
        }
    }

    /// Divide every coefficient by `k`, requiring exactness.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.len());
        for x in self.big_vec() {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::from_big(self.low, out))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in ℤ[t, t⁻¹].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.len() == 1 {
            let k = d.coeff(d.low);
            return self.div_scalar_exact(&k).map(|q| q.shift(-d.low));
        }
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.c, &d.c) {
            if let Some(res) = div_small(a, b) {
                return res.map(|q| Self::from_small(self.low - d.low, q));
            }
        }
        let a = self.big_vec();
        let b = d.big_vec();
        if a.len() < b.len() {
            return None;
        }
        let mut rem = a;
        let lb = b.len();
        let lead = b[lb - 1].clone();
        let qlen = rem.len() - lb + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + lb - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (qq, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &qq * bj;
            }
            q[i] = qq;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_big(self.low - d.low, q))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let z = self.eval_complex(Complex64::new(x, 0.0));
        z.re
    }

    /// Horner evaluation at a complex point (negative powers via `t0⁻¹`).
    pub fn eval_complex(&self, t0: Complex64) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let coeffs: Vec<f64> = match &self.c {
            Coeffs::Small(v) => v.iter().map(|&x| x as f64).collect(),
            Coeffs::Big(v) => v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect(),
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * t0 + *c;
        }
        acc * t0.powi(self.low)
    }
}

// Exact division with i128 remainders; outer None means overflow (retry in
// BigInt), inner None means not divisible.
fn div_small(a: &[i64], b: &[i64]) -> Option<Option<Vec<i64>>> {
    if a.len() < b.len() {
        return Some(None);
    }
    let mut rem: Vec<i128> = a.iter().map(|&x| x as i128).collect();
    let lb = b.len();
    let lead = b[lb - 1] as i128;
    let qlen = rem.len() - lb + 1;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let top = rem[i + lb - 1];
        if top == 0 {
            continue;
        }
        if top % lead != 0 {
            return Some(None);
        }
        let qq = top / lead;
        let qq64 = i64::try_from(qq).ok()?;
        for (j, &bj) in b.iter().enumerate() {
            let p = qq.checked_mul(bj as i128)?;
            rem[i + j] = rem[i + j].checked_sub(p)?;
        }
        q[i] = qq64;
    }
    if rem.iter().any(|&x| x != 0) {
        return Some(None);
    }
    Some(Some(q))
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.degree().unwrap().max(b.degree().unwrap());
    let len = (high - low + 1) as usize;
    if let (Coeffs::Small(x), Coeffs::Small(y)) = (&a.c, &b.c) {
        let mut out = vec![0i64; len];
        let oa = (a.low - low) as usize;
        let ob = (b.low - low) as usize;
        out[oa..oa + x.len()].copy_from_slice(x);
        let mut ok = true;
        for (i, &v) in y.iter().enumerate() {
            let v = if negate_b { v.checked_neg() } else { Some(v) };
            match v.and_then(|v| out[ob + i].checked_add(v)) {
                Some(s) => out[ob + i] = s,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return LaurentPoly::from_small(low, out);
        }
    }
    let mut out = vec![BigInt::zero(); len];
    for (i, v) in a.big_vec().into_iter().enumerate() {
        out[(a.low - low) as usize + i] += v;
    }
    for (i, v) in b.big_vec().into_iter().enumerate() {
        if negate_b {
            out[(b.low - low) as usize + i] -= v;
        } else {
            out[(b.low - low) as usize + i] += v;
        }
    }
    LaurentPoly::from_big(low, out)
}

fn mul_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let low = a.low + b.low;
    if let (Coeffs::Small(x), Coeffs::Small(y)) = (&a.c, &b.c) {
        let mut acc = vec![0i128; x.len() + y.len() - 1];
        let mut ok = true;
        'outer: for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                match acc[i + j].checked_add(xi as i128 * yj as i128) {
                    Some(s) => acc[i + j] = s,
                    None => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            let small: Option<Vec<i64>> = acc.iter().map(|&v| i64::try_from(v).ok()).collect();
            match small {
                Some(v) => return LaurentPoly::from_small(low, v),
                None => {
                    return LaurentPoly::from_big(low, acc.into_iter().map(BigInt::from).collect());
                }
            }
        }
    }
    let x = a.big_vec();
    let y = b.big_vec();
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            out[i + j] += xi * yj;
        }
    }
    LaurentPoly::from_big(low, out)
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        match &self.c {
            Coeffs::Small(v) => {
                let n: Option<Vec<i64>> = v.iter().map(|x| x.checked_neg()).collect();
                match n {
                    Some(n) => LaurentPoly { low: self.low, c: Coeffs::Small(n) },
                    None => LaurentPoly::from_big(self.low, self.big_vec().into_iter().map(|x| -x).collect()),
                }
            }
            Coeffs::Big(v) => LaurentPoly::from_big(self.low, v.iter().map(|x| -x).collect()),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_impl(self, rhs, false);
    }
}
impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = add_impl(self, &rhs, false);
    }
}
impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_impl(self, rhs, true);
    }
}
impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self = add_impl(self, &rhs, true);
    }
}
impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = mul_impl(self, rhs);
    }
}
impl MulAssign<LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: LaurentPoly) {
        *self = mul_impl(self, &rhs);
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::from_big_terms([(0, c)])
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::one();
        for x in iter {
            acc *= x;
        }
        acc
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}
