//! Strip enumeration, one-row weight functions and tableau sums.

use std::collections::BTreeMap;

use crate::partition::{partitions_of, Partition};
use crate::poly::qnum::{one_minus_t_pow, pochhammer, q_binomial};
use crate::poly::{BiPoly, BiRatio, LaurentPoly, RationalFn, Ring};

use super::SymPoly;

/// All `λ ⊇ μ` with `λ/μ` a horizontal strip of `size` boxes, `ℓ(λ) ≤ max_len`
/// and `λ ⊆ outer` when given.
pub fn horizontal_strips_into(mu: &Partition, size: usize, outer: Option<&Partition>, max_len: usize) -> Vec<Partition> {
    let len = (mu.len() + 1).min(max_len.max(mu.len()));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(mu: &Partition, outer: Option<&Partition>, len: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == len {
            if rem == 0 {
                out.push(Partition::from_sorted(cur));
            }
            return;
        }
        let lo = mu.part(i);
        let mut hi = if i == 0 { lo + rem } else { mu.part(i - 1).min(lo + rem) };
        if let Some(o) = outer {
            hi = hi.min(o.part(i));
        }
        if hi < lo {
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(mu, outer, len, rem - (v - lo), cur, out);
            cur.pop();
        }
    }
    rec(mu, outer, len, size, &mut cur, &mut out);
    out
}

/// All `λ ⊇ μ` with `λ/μ` a vertical strip of `size` boxes and `ℓ(λ) ≤ max_len`.
pub fn vertical_strips_into(mu: &Partition, size: usize, outer: Option<&Partition>, max_len: usize) -> Vec<Partition> {
    let len = (mu.len() + size).min(max_len.max(mu.len()));
    let base = mu.padded(len);
    let mut out = Vec::new();
    fn rec(base: &[usize], outer: Option<&Partition>, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == base.len() {
            if rem == 0 {
                out.push(Partition::from_sorted(cur));
            }
            return;
        }
        for add in 0..=1usize.min(rem) {
            let v = base[i] + add;
            if i > 0 && v > cur[i - 1] {
                continue;
            }
            if let Some(o) = outer {
                if v > o.part(i) {
                    continue;
                }
            }
            cur.push(v);
            rec(base, outer, rem - add, cur, out);
            cur.pop();
        }
    }
    rec(&base, outer, size, &mut Vec::new(), &mut out);
    out
}

fn theta(lambda: &Partition, mu: &Partition, i: usize) -> i64 {
    lambda.col(i) as i64 - mu.col(i) as i64
}

fn m_of(p: &Partition, i: usize) -> usize {
    p.col(i) - p.col(i + 1)
}

/// Hall-Littlewood `φ_{λ/μ}(t)`.
pub fn phi(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    if !lambda.is_horizontal_strip_over(mu) {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for i in 1..=lambda.first() {
        if theta(lambda, mu, i) == 1 && theta(lambda, mu, i + 1) == 0 {
            acc = &acc * &one_minus_t_pow(m_of(lambda, i) as i32);
        }
    }
    acc
}

/// Hall-Littlewood `ψ_{λ/μ}(t)`.
pub fn psi(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    if !lambda.is_horizontal_strip_over(mu) {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for i in 1..=lambda.first() {
        if theta(lambda, mu, i) == 0 && theta(lambda, mu, i + 1) == 1 {
            acc = &acc * &one_minus_t_pow(m_of(mu, i) as i32);
        }
    }
    acc
}

/// `ψ'_{λ/μ} = ∏_i [λ_i - λ_{i+1} over λ_i - μ_i]_t`.
pub fn psi_prime(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    if !lambda.is_horizontal_strip_over(mu) {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for i in 0..lambda.len() {
        let a = lambda.part(i) as i64 - lambda.part(i + 1) as i64;
        let b = lambda.part(i) as i64 - mu.part(i) as i64;
        acc = &acc * &q_binomial(a, b);
    }
    acc
}

/// `φ'_{λ/μ} = (t)_{λ_1-μ_1}^{-1} ∏_i [μ_i - μ_{i+1} over λ_{i+1} - μ_{i+1}]_t`.
pub fn phi_prime(lambda: &Partition, mu: &Partition) -> RationalFn {
    if !lambda.is_horizontal_strip_over(mu) {
        return RationalFn::from_poly(LaurentPoly::zero());
    }
    let mut acc = LaurentPoly::one();
    for i in 0..lambda.len().max(mu.len()) {
        let a = mu.part(i) as i64 - mu.part(i + 1) as i64;
        let b = lambda.part(i + 1) as i64 - mu.part(i + 1) as i64;
        acc = &acc * &q_binomial(a, b);
    }
    RationalFn::new(acc, pochhammer(lambda.first() - mu.first()))
}

fn box_weight(p: &Partition, i: usize, j: usize) -> BiRatio {
    // b_λ(s;q,t) for s = (i,j) 1-based; 1 if s ∉ λ
    if j > p.part(i - 1) {
        return BiRatio::one();
    }
    let arm = (p.part(i - 1) - j) as i32;
    let leg = (p.col(j) - i) as i32;
    let num = &BiPoly::one() - &BiPoly::monomial(1, arm, leg + 1);
    let den = &BiPoly::one() - &BiPoly::monomial(1, arm + 1, leg);
    BiRatio::new(num, den)
}

fn strip_rows_cols(lambda: &Partition, mu: &Partition) -> (Vec<usize>, Vec<usize>) {
    let mut rows = Vec::new();
    let mut cols = std::collections::BTreeSet::new();
    for i in 0..lambda.len() {
        if lambda.part(i) > mu.part(i) {
            rows.push(i + 1);
            for j in mu.part(i) + 1..=lambda.part(i) {
                cols.insert(j);
            }
        }
    }
    (rows, cols.into_iter().collect())
}

/// General Macdonald `ψ_{λ/μ}(q,t)`.
pub fn qt_psi(lambda: &Partition, mu: &Partition) -> BiRatio {
    if !lambda.is_horizontal_strip_over(mu) {
        return BiRatio::zero();
    }
    let (rows, cols) = strip_rows_cols(lambda, mu);
    let mut acc = BiRatio::one();
    for &i in &rows {
        for j in 1..=lambda.part(i - 1) {
            if cols.contains(&j) {
                continue;
            }
            acc = acc.mul(&box_weight(mu, i, j)).div(&box_weight(lambda, i, j));
        }
    }
    acc
}

/// General Macdonald `φ_{λ/μ}(q,t)`.
pub fn qt_phi(lambda: &Partition, mu: &Partition) -> BiRatio {
    if !lambda.is_horizontal_strip_over(mu) {
        return BiRatio::zero();
    }
    let (_, cols) = strip_rows_cols(lambda, mu);
    let mut acc = BiRatio::one();
    for &j in &cols {
        for i in 1..=lambda.col(j) {
            acc = acc.mul(&box_weight(lambda, i, j)).div(&box_weight(mu, i, j));
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripKind {
    Phi,
    Psi,
    PhiPrime,
    PsiPrime,
}

/// One-row weight as a rational function (exact for every kind).
pub fn strip_weight(kind: StripKind, lambda: &Partition, mu: &Partition) -> RationalFn {
    match kind {
        StripKind::Phi => phi(lambda, mu).into(),
        StripKind::Psi => psi(lambda, mu).into(),
        StripKind::PsiPrime => psi_prime(lambda, mu).into(),
        StripKind::PhiPrime => phi_prime(lambda, mu),
    }
}

/// `Σ_T w(T)` over tableaux of shape `λ/μ` with weight vector `weight`, where
/// each horizontal strip contributes `w(outer, inner)`.
pub fn chain_sum<C: Ring>(lambda: &Partition, mu: &Partition, weight: &[usize], w: &dyn Fn(&Partition, &Partition) -> C) -> C {
    let total: usize = weight.iter().sum();
    if !lambda.contains(mu) || lambda.size() != mu.size() + total {
        return C::zero();
    }
    let mut states: BTreeMap<Partition, C> = BTreeMap::new();
    states.insert(mu.clone(), C::one());
    for &s in weight {
        if s == 0 {
            continue;
        }
        let mut next: BTreeMap<Partition, C> = BTreeMap::new();
        for (kappa, c) in &states {
            for nu in horizontal_strips_into(kappa, s, Some(lambda), lambda.len()) {
                let x = w(&nu, kappa);
                if x.is_zero() {
                    continue;
                }
                let v = c.mul(&x);
                match next.get_mut(&nu) {
                    Some(e) => *e = e.add(&v),
                    None => {
                        next.insert(nu, v);
                    }
                }
            }
        }
        states = next;
    }
    states.remove(lambda).unwrap_or_else(C::zero)
}

/// Coefficient of `m_ν` in the skew tableau sum of the given kind.
pub fn skew_coefficient(kind: StripKind, lambda: &Partition, mu: &Partition, nu: &Partition) -> RationalFn {
    match kind {
        StripKind::PhiPrime => chain_sum(lambda, mu, nu.parts(), &|a, b| phi_prime(a, b)),
        _ => chain_sum::<LaurentPoly>(lambda, mu, nu.parts(), &|a, b| laurent_weight(kind, a, b)).into(),
    }
}

fn laurent_weight(kind: StripKind, a: &Partition, b: &Partition) -> LaurentPoly {
    match kind {
        StripKind::Phi => phi(a, b),
        StripKind::Psi => psi(a, b),
        StripKind::PsiPrime => psi_prime(a, b),
        StripKind::PhiPrime => unreachable!("rational weight"),
    }
}

/// Skew tableau sum `Σ_T w_T x^T` in `v` variables for the polynomial kinds
/// (`Phi`, `Psi`, `PsiPrime`).
pub fn skew_poly(kind: StripKind, lambda: &Partition, mu: &Partition, v: usize) -> SymPoly<LaurentPoly> {
    assert!(kind != StripKind::PhiPrime, "use skew_poly_rational for rational weights");
    let mut out = SymPoly::zero(v);
    if !lambda.contains(mu) {
        return out;
    }
    let size = lambda.size() - mu.size();
    for nu in partitions_of(size, v, size) {
        let c = chain_sum::<LaurentPoly>(lambda, mu, nu.parts(), &|a, b| laurent_weight(kind, a, b));
        out.add_term(nu, &c);
    }
    out
}

/// Skew tableau sum with rational weights in `v` variables.
pub fn skew_poly_rational(kind: StripKind, lambda: &Partition, mu: &Partition, v: usize) -> SymPoly<RationalFn> {
    let mut out = SymPoly::zero(v);
    if !lambda.contains(mu) {
        return out;
    }
    let size = lambda.size() - mu.size();
    for nu in partitions_of(size, v, size) {
        out.add_term(nu.clone(), &skew_coefficient(kind, lambda, mu, &nu));
    }
    out
}
