//! Yang-Baxter equations for the three R-operators, checked exactly on
//! finite sectors of fixed total occupation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::poly::qnum::{one_minus_t_pow, q_binomial};
use crate::poly::LaurentPoly;

/// Laurent polynomial in the spectral variables `u, v` over `Z[t^±]`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SpectralPoly {
    terms: BTreeMap<(i32, i32), LaurentPoly>,
}

impl SpectralPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(LaurentPoly::one(), 0, 0)
    }

    /// `c u^a v^b`
    pub fn monomial(c: LaurentPoly, a: i32, b: i32) -> Self {
        let mut s = Self::zero();
        s.add_term((a, b), &c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (i32, i32), c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(LaurentPoly::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut s = Self::zero();
        for (k, v) in &self.terms {
            s.add_term(*k, &(v * c));
        }
        s
    }

    /// `(x;t)_r = ∏_{i<r} (1 - x t^i)` with `x = u^a v^b`.
    fn pochhammer_in(a: i32, b: i32, r: usize) -> Self {
        let mut acc = Self::one();
        for i in 0..r {
            let f = &Self::one() - &Self::monomial(LaurentPoly::t_pow(i as i32), a, b);
            acc = &acc * &f;
        }
        acc
    }
}

impl Add for &SpectralPoly {
    type Output = SpectralPoly;
    fn add(self, o: &SpectralPoly) -> SpectralPoly {
        let mut s = self.clone();
        for (k, v) in &o.terms {
            s.add_term(*k, v);
        }
        s
    }
}

impl Sub for &SpectralPoly {
    type Output = SpectralPoly;
    fn sub(self, o: &SpectralPoly) -> SpectralPoly {
        self + &o.scale(&LaurentPoly::constant(-1))
    }
}

impl Mul for &SpectralPoly {
    type Output = SpectralPoly;
    fn mul(self, o: &SpectralPoly) -> SpectralPoly {
        let mut s = SpectralPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                s.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        s
    }
}

impl fmt::Display for SpectralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((a, b), c)| format!("({})u^{}v^{}", c, a, b)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SpectralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A tensor factor: a two-state auxiliary space or a Fock space.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Factor {
    Qubit,
    Fock,
}

/// Basis of a tensor product restricted to total occupation `total`.
struct Sector {
    states: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Sector {
    fn new(factors: &[Factor], total: usize) -> Self {
        let mut states = Vec::new();
        fn rec(factors: &[Factor], rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let i = cur.len();
            if i == factors.len() {
                if rem == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let hi = match factors[i] {
                Factor::Qubit => rem.min(1),
                Factor::Fock => rem,
            };
            for v in 0..=hi {
                cur.push(v);
                rec(factors, rem - v, cur, out);
                cur.pop();
            }
        }
        rec(factors, total, &mut Vec::new(), &mut states);
        let index = states.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Sector { states, index }
    }
}

/// Column-sparse operator on a sector.
#[derive(Clone, PartialEq)]
struct SectorOp {
    cols: Vec<BTreeMap<usize, SpectralPoly>>,
}

type Local = Vec<(usize, usize, SpectralPoly)>;

impl SectorOp {
    /// Acts on factors `(a, b)` by `local(x_a, x_b) -> [(x_a', x_b', coeff)]`.
    fn two_site(sector: &Sector, a: usize, b: usize, local: impl Fn(usize, usize) -> Local) -> Self {
        let mut cols = vec![BTreeMap::new(); sector.states.len()];
        for (j, s) in sector.states.iter().enumerate() {
            for (xa, xb, c) in local(s[a], s[b]) {
                if c.is_zero() {
                    continue;
                }
                let mut s2 = s.clone();
                s2[a] = xa;
                s2[b] = xb;
                let i = sector.index[&s2];
                let e: &mut SpectralPoly = cols[j].entry(i).or_default();
                *e = &*e + &c;
            }
        }
        SectorOp { cols }
    }

    fn identity(sector: &Sector, c: SpectralPoly) -> Self {
        let cols = (0..sector.states.len()).map(|j| BTreeMap::from([(j, c.clone())])).collect();
        SectorOp { cols }
    }

    /// `self ∘ rhs`
    fn compose(&self, rhs: &Self) -> Self {
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut out: BTreeMap<usize, SpectralPoly> = BTreeMap::new();
                for (l, v) in col {
                    for (i, w) in &self.cols[*l] {
                        let e = out.entry(*i).or_default();
                        *e = &*e + &(w * v);
                    }
                }
                out.retain(|_, v| !v.is_zero());
                out
            })
            .collect();
        SectorOp { cols }
    }

    fn difference(&self, o: &Self, sector: &Sector) -> Option<String> {
        for (j, (c1, c2)) in self.cols.iter().zip(&o.cols).enumerate() {
            for i in c1.keys().chain(c2.keys()) {
                let a = c1.get(i).cloned().unwrap_or_default();
                let b = c2.get(i).cloned().unwrap_or_default();
                if a != b {
                    return Some(format!("<{:?}|..|{:?}>: {} vs {}", sector.states[*i], sector.states[j], a, b));
                }
            }
        }
        None
    }
}

fn mono(c: LaurentPoly, a: i32, b: i32) -> SpectralPoly {
    SpectralPoly::monomial(c, a, b)
}

/// `L(x)` on (qubit, Fock); `(a, b)` is the exponent of `x` in `u, v`.
fn l_local(x: (i32, i32)) -> impl Fn(usize, usize) -> Local {
    move |s, m| {
        let mut out = Vec::new();
        match s {
            0 => {
                out.push((0, m, SpectralPoly::one()));
                if m > 0 {
                    out.push((1, m - 1, SpectralPoly::one()));
                }
            }
            _ => {
                out.push((0, m + 1, mono(one_minus_t_pow(m as i32 + 1), x.0, x.1)));
                out.push((1, m, mono(LaurentPoly::one(), x.0, x.1)));
            }
        }
        out
    }
}

/// `L'(x)` on (Fock, Fock): `<e'|L'|e> = x^e (β*)^e β^{e'} / (t)_e`.
fn lprime_local(x: (i32, i32)) -> impl Fn(usize, usize) -> Local {
    move |e, m| {
        (0..=m)
            .map(|e2| {
                let m2 = m - e2 + e;
                (e2, m2, mono(q_binomial(m2 as i64, e as i64), x.0 * e as i32, x.1 * e as i32))
            })
            .collect()
    }
}

/// `(u - v) R(u, v)` on two qubits.
fn r_local(s1: usize, s2: usize) -> Local {
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let u_tv = &mono(one.clone(), 1, 0) - &mono(t.clone(), 0, 1);
    let u_v = &mono(one.clone(), 1, 0) - &mono(one.clone(), 0, 1);
    let omt = &one - &t;
    match (s1, s2) {
        (0, 0) => vec![(0, 0, u_tv)],
        (1, 1) => vec![(1, 1, u_tv)],
        // column |01>: rows <01| and <10|
        (0, 1) => vec![(0, 1, u_v.scale(&t)), (1, 0, mono(omt, 0, 1))],
        _ => vec![(0, 1, mono(omt, 1, 0)), (1, 0, u_v)],
    }
}

/// `R'(x, y)` on two Fock spaces, `x, y` given as `u`/`v` exponents.
fn rprime_local(x: (i32, i32), y: (i32, i32)) -> impl Fn(usize, usize) -> Local {
    move |m1, m2| {
        let ratio = (x.0 - y.0, x.1 - y.1);
        (m1..=m1 + m2)
            .map(|m2p| {
                let m1p = m1 + m2 - m2p;
                let c = &mono(q_binomial(m2p as i64, m1 as i64), ratio.0 * m1 as i32, ratio.1 * m1 as i32)
                    * &SpectralPoly::pochhammer_in(ratio.0, ratio.1, m2p - m1);
                (m1p, m2p, c)
            })
            .collect()
    }
}

/// `R''(u, v)` on (qubit, Fock).
fn rpp_local(s: usize, m: usize) -> Local {
    let one = LaurentPoly::one();
    match s {
        0 => {
            let mut out = vec![(0, m, &SpectralPoly::one() + &mono(LaurentPoly::t_pow(m as i32), 1, -1))];
            if m > 0 {
                out.push((1, m - 1, SpectralPoly::one()));
            }
            out
        }
        _ => vec![(0, m + 1, mono(one_minus_t_pow(m as i32 + 1), 1, -1)), (1, m, mono(one, 1, -1))],
    }
}

/// `(1 + u/v)` times the stated inverse of `R''(u, v)`.
fn rpp_inverse_local(s: usize, m: usize) -> Local {
    let tm = LaurentPoly::t_pow(-(m as i32));
    match s {
        0 => {
            let mut out = vec![(0, m, mono(tm.clone(), 0, 0))];
            if m > 0 {
                out.push((1, m - 1, mono(tm.scale(-1), -1, 1)));
            }
            out
        }
        _ => {
            let raise = &LaurentPoly::t_pow(-(m as i32) - 1) * &one_minus_t_pow(m as i32 + 1);
            vec![
                (0, m + 1, mono(raise.scale(-1), 0, 0)),
                (1, m, &SpectralPoly::one() + &mono(LaurentPoly::t_pow(-(m as i32) - 1), -1, 1)),
            ]
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YbeKind {
    /// `R L L = L L R` for the hard-core boson operator.
    RL,
    /// `R' L' L' = L' L' R'` together with `R'(u,v) P R'(v,u) P = 1`.
    RpLp,
    /// `R'' L L' = L' L R''` together with the inverse of `R''`.
    RppLLp,
}

impl std::str::FromStr for YbeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "RL" => YbeKind::RL,
            "RpLp" | "R'L'" => YbeKind::RpLp,
            "RppLLp" | "R''LL'" => YbeKind::RppLLp,
            other => return Err(Error::Parse(format!("unknown Yang-Baxter check `{}`", other))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeReport {
    pub kind: YbeKind,
    pub sector: usize,
    pub dimension: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl YbeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, what: &str, lhs: &SectorOp, rhs: &SectorOp, sector: &Sector) {
        self.checked += 1;
        if let Some(w) = lhs.difference(rhs, sector) {
            self.failures.push(format!("{}: {}", what, w));
        }
    }
}

impl fmt::Display for YbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{:?} sector {} (dim {}): {}", self.kind, self.sector, self.dimension, status)?;
        for w in &self.failures {
            write!(f, "\n  {}", w)?;
        }
        Ok(())
    }
}

const U: (i32, i32) = (1, 0);
const V: (i32, i32) = (0, 1);

/// Verify one family of identities on the sector of total occupation `total`.
pub fn ybe_check(kind: YbeKind, total: usize) -> YbeReport {
    let mut report = YbeReport { kind, sector: total, dimension: 0, checked: 0, failures: Vec::new() };
    match kind {
        YbeKind::RL => {
            let sector = Sector::new(&[Factor::Qubit, Factor::Qubit, Factor::Fock], total);
            report.dimension = sector.states.len();
            let r = SectorOp::two_site(&sector, 0, 1, r_local);
            let l1 = SectorOp::two_site(&sector, 0, 2, l_local(U));
            let l2 = SectorOp::two_site(&sector, 1, 2, l_local(V));
            report.check("R L1 L2 = L2 L1 R", &r.compose(&l1.compose(&l2)), &l2.compose(&l1.compose(&r)), &sector);
        }
        YbeKind::RpLp => {
            let sector = Sector::new(&[Factor::Fock, Factor::Fock, Factor::Fock], total);
            report.dimension = sector.states.len();
            let r = SectorOp::two_site(&sector, 0, 1, rprime_local(U, V));
            let l1 = SectorOp::two_site(&sector, 0, 2, lprime_local(U));
            let l2 = SectorOp::two_site(&sector, 1, 2, lprime_local(V));
            report.check("R' L'1 L'2 = L'2 L'1 R'", &r.compose(&l1.compose(&l2)), &l2.compose(&l1.compose(&r)), &sector);
            let pair = Sector::new(&[Factor::Fock, Factor::Fock], total);
            let r_uv = SectorOp::two_site(&pair, 0, 1, rprime_local(U, V));
            let flip = SectorOp::two_site(&pair, 0, 1, |a, b| vec![(b, a, SpectralPoly::one())]);
            let r_vu = SectorOp::two_site(&pair, 0, 1, rprime_local(V, U));
            let prod = r_uv.compose(&flip.compose(&r_vu.compose(&flip)));
            report.check("R'(u,v) P R'(v,u) P = 1", &prod, &SectorOp::identity(&pair, SpectralPoly::one()), &pair);
        }
        YbeKind::RppLLp => {
            let sector = Sector::new(&[Factor::Qubit, Factor::Fock, Factor::Fock], total);
            report.dimension = sector.states.len();
            let r = SectorOp::two_site(&sector, 0, 1, rpp_local);
            let l1 = SectorOp::two_site(&sector, 0, 2, l_local(U));
            let l2 = SectorOp::two_site(&sector, 1, 2, lprime_local(V));
            report.check("R'' L1 L'2 = L'2 L1 R''", &r.compose(&l1.compose(&l2)), &l2.compose(&l1.compose(&r)), &sector);
            let pair = Sector::new(&[Factor::Qubit, Factor::Fock], total);
            let prod = SectorOp::two_site(&pair, 0, 1, rpp_local).compose(&SectorOp::two_site(&pair, 0, 1, rpp_inverse_local));
            let scalar = &SpectralPoly::one() + &mono(LaurentPoly::one(), 1, -1);
            report.check("R'' (R'')^-1 = 1", &prod, &SectorOp::identity(&pair, scalar), &pair);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_kinds_small_sectors() {
        for kind in [YbeKind::RL, YbeKind::RpLp, YbeKind::RppLLp] {
            for total in 0..=3 {
                let r = ybe_check(kind, total);
                assert!(r.passed(), "{}", r);
            }
        }
    }

    #[test]
    fn monodromies_do_not_commute_without_r() {
        let sector = Sector::new(&[Factor::Qubit, Factor::Qubit, Factor::Fock], 2);
        let l1 = SectorOp::two_site(&sector, 0, 2, l_local(U));
        let l2 = SectorOp::two_site(&sector, 1, 2, l_local(V));
        assert!(l1.compose(&l2).difference(&l2.compose(&l1), &sector).is_some());
    }
}
