//! Littlewood-Richardson and Hall algebra structure constants.

use std::collections::BTreeMap;

use crate::partition::{partitions_of, Partition};
use crate::poly::qnum::b_lambda;
use crate::poly::{LaurentPoly, RationalFn};

use super::basis::{hl_p, schur, to_basis, TargetBasis};
use super::tableau::{chain_sum, skew_poly, skew_poly_rational, StripKind};
use super::SymPoly;

/// `s_μ s_ν = Σ_λ c^λ_{μν} s_λ`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, i64> {
    let v = (mu.len() + nu.len()).max(1);
    let prod = schur(mu, v).mul(&schur(nu, v));
    to_basis(TargetBasis::S, &prod)
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, c)| (l, c.coeff_i64(0).unwrap()))
        .collect()
}

/// `c^λ_{μν}` via the skew Schur function `s_{λ/μ}`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if !lambda.contains(mu) || !lambda.contains(nu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let v = nu.len().max(1);
    let size = nu.size();
    let mut skew = SymPoly::<LaurentPoly>::zero(v);
    for rho in partitions_of(size, v, size) {
        let c = chain_sum::<LaurentPoly>(lambda, mu, rho.parts(), &|a, b| {
            if a.is_horizontal_strip_over(b) { LaurentPoly::one() } else { LaurentPoly::zero() }
        });
        skew.add_term(rho, &c);
    }
    to_basis(TargetBasis::S, &skew).get(nu).and_then(|c| c.coeff_i64(0)).unwrap_or(0)
}

/// `f^λ_{μν}(t)`: the coefficient of `Q_ν` in `Q_{λ/μ}`, for every `λ`
/// with `c^λ_{μν} ≠ 0`.
pub fn hall_coeff(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, LaurentPoly> {
    let mut out = BTreeMap::new();
    let bn = b_lambda(nu.parts());
    let v = nu.len().max(1);
    for (lambda, c) in lr_product(mu, nu) {
        if c == 0 {
            continue;
        }
        let skew = skew_poly(StripKind::Phi, &lambda, mu, v);
        let exp = to_basis(TargetBasis::P, &skew);
        let f = exp.get(nu).cloned().unwrap_or_else(LaurentPoly::zero).div_exact(&bn).expect("b_ν divides");
        if !f.is_zero() {
            out.insert(lambda, f);
        }
    }
    out
}

/// `P_μ P_ν` expanded in the `P` basis in `ℓ(μ)+ℓ(ν)` variables.
pub fn hall_coeff_by_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, LaurentPoly> {
    let v = (mu.len() + nu.len()).max(1);
    let prod = hl_p(mu, v).mul(&hl_p(nu, v));
    to_basis(TargetBasis::P, &prod).into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Skew tableau sum of the given kind, expanded in a target basis.
pub fn skew_in_basis(kind: StripKind, lambda: &Partition, mu: &Partition, target: TargetBasis, v: usize) -> BTreeMap<Partition, RationalFn> {
    let poly = if kind == StripKind::PhiPrime {
        skew_poly_rational(kind, lambda, mu, v)
    } else {
        skew_poly(kind, lambda, mu, v).map(|c| RationalFn::from(c.clone()))
    };
    to_basis(target, &poly).into_iter().filter(|(_, c)| !c.is_zero()).collect()
}
