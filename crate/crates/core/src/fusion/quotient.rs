//! Arithmetic in the coordinate ring: Hall-Littlewood `P` functions in `k`
//! variables reduced to the window of partitions with parts below `n`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::qnum::b_lambda_with_zeros;
use crate::poly::{LaurentPoly, ZPoly};
use crate::symfunc::{hl_p, to_basis, SymPoly, TargetBasis};

/// An element of the quotient in the basis `[P_λ̃]`, `λ̃` in the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElement {
    pub n: usize,
    pub k: usize,
    pub coeffs: BTreeMap<Partition, ZPoly>,
}

impl QuotientElement {
    pub fn zero(n: usize, k: usize) -> Self {
        QuotientElement { n, k, coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> ZPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, lambda: Partition, c: &ZPoly) {
        let e = self.coeffs.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    /// The `z = 1` view.
    pub fn at_z_one(&self) -> BTreeMap<Partition, LaurentPoly> {
        self.coeffs
            .iter()
            .map(|(l, c)| (l.clone(), c.at_z_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

/// Sort key: total degree, then the sorted entries, then the number of
/// inversions. Every rewrite strictly lowers it.
type Key = (i64, Vec<i64>, usize, Vec<i64>);

fn key(alpha: Vec<i64>) -> Key {
    let mut sorted = alpha.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut inv = 0;
    for i in 0..alpha.len() {
        for j in i + 1..alpha.len() {
            if alpha[i] < alpha[j] {
                inv += 1;
            }
        }
    }
    (alpha.iter().sum(), sorted, inv, alpha)
}

fn push(work: &mut BTreeMap<Key, ZPoly>, alpha: Vec<i64>, c: &ZPoly) {
    if c.is_zero() {
        return;
    }
    let k = key(alpha);
    let e = work.entry(k.clone()).or_default();
    *e += c;
    if e.is_zero() {
        work.remove(&k);
    }
}

/// Straighten `R_α` for a composition `α` of length `k` into `R_λ̃` with `λ̃`
/// in the window.
pub fn straighten_r(alpha: &[i64], n: usize) -> BTreeMap<Partition, ZPoly> {
    let n = n as i64;
    let t = LaurentPoly::t();
    let mut work = BTreeMap::new();
    push(&mut work, alpha.to_vec(), &ZPoly::one());
    let mut out: BTreeMap<Partition, ZPoly> = BTreeMap::new();
    while let Some(((_, _, _, a), c)) = work.pop_last() {
        let len = a.len();
        match (0..len.saturating_sub(1)).find(|&i| a[i] < a[i + 1]) {
            None => {
                if len > 0 && a[len - 1] < 0 {
                    continue;
                }
                if len > 0 && a[0] >= n {
                    let mut b: Vec<i64> = a[1..].to_vec();
                    b.push(a[0] - n);
                    push(&mut work, b, &c.shift_z(1));
                    continue;
                }
                let parts: Vec<usize> = a.iter().map(|&x| x as usize).collect();
                let lam = Partition::from_sorted(&parts);
                let e = out.entry(lam.clone()).or_default();
                *e += &c;
                if e.is_zero() {
                    out.remove(&lam);
                }
            }
            Some(i) => {
                let (lo, hi) = (a[i], a[i + 1]);
                let mut swapped = a.clone();
                swapped.swap(i, i + 1);
                let tc = c.scale(&t);
                push(&mut work, swapped, &tc);
                if hi - lo == 1 {
                    continue;
                }
                let mut down = a.clone();
                down[i] = hi - 1;
                down[i + 1] = lo + 1;
                push(&mut work, down, &-&c);
                let mut inner = a.clone();
                inner[i] = lo + 1;
                inner[i + 1] = hi - 1;
                push(&mut work, inner, &tc);
            }
        }
    }
    out
}

fn b_tilde(lambda: &Partition, k: usize) -> LaurentPoly {
    b_lambda_with_zeros(&lambda.padded(k))
}

fn reduction_cache() -> &'static Mutex<HashMap<(Partition, usize, usize), Arc<BTreeMap<Partition, ZPoly>>>> {
    static C: OnceLock<Mutex<HashMap<(Partition, usize, usize), Arc<BTreeMap<Partition, ZPoly>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `[P_λ]` in the window basis, for `ℓ(λ) ≤ k`.
pub fn reduce_p(lambda: &Partition, n: usize, k: usize) -> Result<Arc<BTreeMap<Partition, ZPoly>>> {
    if lambda.len() > k {
        return Err(Error::Invalid(format!("P_({}) has more than k={} parts", lambda, k)));
    }
    let ck = (lambda.clone(), n, k);
    if let Some(x) = reduction_cache().lock().unwrap().get(&ck) {
        return Ok(x.clone());
    }
    let alpha: Vec<i64> = lambda.padded(k).iter().map(|&p| p as i64).collect();
    let bl = b_tilde(lambda, k);
    let mut out = BTreeMap::new();
    for (mu, c) in straighten_r(&alpha, n) {
        let scaled = c.scale(&b_tilde(&mu, k));
        let q = scaled.div_exact(&bl).ok_or_else(|| {
            Error::Invalid(format!("reduction of P_({}) onto P_({}) is not integral", lambda, mu))
        })?;
        out.insert(mu, q);
    }
    let out = Arc::new(out);
    reduction_cache().lock().unwrap().insert(ck, out.clone());
    Ok(out)
}

/// Reduce a `P`-basis expansion into the window.
pub fn quotient_reduce(p: &BTreeMap<Partition, ZPoly>, n: usize, k: usize) -> Result<QuotientElement> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2 sites, got {}", n)));
    }
    let mut acc = QuotientElement::zero(n, k);
    for (lambda, c) in p {
        if c.is_zero() {
            continue;
        }
        for (mu, x) in reduce_p(lambda, n, k)?.iter() {
            acc.add_term(mu.clone(), &(c * x));
        }
    }
    Ok(acc)
}

/// `P`-expansion of a symmetric polynomial in `k` variables.
pub fn p_expansion(f: &SymPoly<LaurentPoly>) -> BTreeMap<Partition, ZPoly> {
    to_basis(TargetBasis::P, f).into_iter().filter(|(_, c)| !c.is_zero()).map(|(l, c)| (l, ZPoly::from(c))).collect()
}

/// `[f · P_μ̃]` for `f` symmetric in `k` variables.
pub fn multiply_reduce(f: &SymPoly<LaurentPoly>, mu: &Partition, n: usize, k: usize) -> Result<QuotientElement> {
    let prod = f.mul(&hl_p(mu, k));
    quotient_reduce(&p_expansion(&prod), n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::hl_q;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn worked_reductions() {
        let cases = [
            ("7,5,2", "3,2,1", "t"),
            ("7,4,3", "4,3,3", "1 + t"),
            ("6,6,2", "2,2,2", "1 + t + t^2"),
            ("6,5,3", "3,2,1", "1"),
            ("6,4,4", "4,4,2", "1"),
            ("5,5,4", "4,1,1", "1"),
        ];
        for (from, to, coeff) in cases {
            let red = reduce_p(&p(from), 4, 3).unwrap();
            let to = crate::partition::Alcove { n: 4, k: 3 }.reduce(&p(to)).unwrap();
            assert_eq!(red.len(), 1, "{} -> {:?}", from, red);
            let c = &red[&to];
            assert_eq!(c.at_z_one(), lp(coeff), "{}", from);
            let d = (p(from).size() - to.size()) / 4;
            assert_eq!(c.z_degrees(), vec![d as u32], "{}", from);
        }
    }

    #[test]
    fn gap_one_swap() {
        let r = straighten_r(&[0, 1], 5);
        assert_eq!(r.len(), 1);
        assert_eq!(r[&p("1")].at_z_one(), lp("t"));
    }

    #[test]
    fn window_is_fixed() {
        for lam in ["3,2,1", "3,3", "0", "1,1,1"] {
            let red = reduce_p(&p(lam), 4, 3).unwrap();
            assert_eq!(red.len(), 1);
            assert_eq!(red[&p(lam)], ZPoly::one());
        }
    }

    #[test]
    fn generators_vanish() {
        let (n, k) = (4, 3);
        let qrow = |r: usize| hl_q(&Partition::row(r), k);
        for r in 1..k {
            let mut f = p_expansion(&qrow(n + r));
            let inv = qrow(r).map(|c| c.invert_var());
            for (l, c) in p_expansion(&inv) {
                let e = f.entry(l).or_default();
                *e += &c.scale(&LaurentPoly::t_pow(k as i32)).shift_z(1);
            }
            assert!(quotient_reduce(&f, n, k).unwrap().is_zero(), "r={}", r);
        }
        let mut f = p_expansion(&qrow(n));
        let e = f.entry(Partition::empty()).or_default();
        *e += &ZPoly::z_pow(1, -&lp("1 - t^3"));
        assert!(quotient_reduce(&f, n, k).unwrap().is_zero());
    }
}
