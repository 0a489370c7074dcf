//! `R_μ` for compositions by alternant straightening.

use std::collections::HashMap;

use crate::partition::Partition;
use crate::poly::qnum::pochhammer;
use crate::poly::{LaurentPoly, RationalFn};

use super::basis::schur;
use super::SymPoly;

/// `a_α / a_δ` for an exponent vector `α`: `Some((sign, λ))` with
/// `a_α = sign · a_{λ+δ}`, or `None` when `α` has a repeated entry.
pub fn straighten_alternant(alpha: &[i64]) -> Option<(i32, Partition)> {
    let v = alpha.len();
    let mut a = alpha.to_vec();
    let mut sign = 1;
    // insertion sort, counting swaps
    for i in 1..v {
        let mut j = i;
        while j > 0 && a[j - 1] < a[j] {
            a.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if a.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts: Vec<usize> = a
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (v - 1 - i) as i64)
        .map(|x| usize::try_from(x).ok())
        .collect::<Option<Vec<_>>>()?;
    Some((sign, Partition::from_unsorted(&parts)))
}

/// `R_μ(x_1..x_v) = Σ_w w(x^μ ∏_{i<j} (x_i - t x_j)/(x_i - x_j))` with `v = len(μ)`.
pub fn r_function(mu: &[usize]) -> SymPoly<LaurentPoly> {
    let v = mu.len();
    let mut terms: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
    terms.insert(mu.iter().map(|&x| x as i64).collect(), LaurentPoly::one());
    for i in 0..v {
        for j in i + 1..v {
            let mut next: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
            for (e, c) in terms {
                let mut a = e.clone();
                a[i] += 1;
                *next.entry(a).or_insert_with(LaurentPoly::zero) += &c;
                let mut b = e;
                b[j] += 1;
                *next.entry(b).or_insert_with(LaurentPoly::zero) -= &(&c * &LaurentPoly::t());
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
    }
    let mut schur_coeffs: HashMap<Partition, LaurentPoly> = HashMap::new();
    for (alpha, c) in terms {
        if let Some((sign, lam)) = straighten_alternant(&alpha) {
            let e = schur_coeffs.entry(lam).or_insert_with(LaurentPoly::zero);
            if sign > 0 {
                *e += &c;
            } else {
                *e -= &c;
            }
        }
    }
    let mut out = SymPoly::zero(v);
    for (lam, c) in schur_coeffs {
        if c.is_zero() {
            continue;
        }
        out = out.add(&schur(&lam, v).scale(&c));
    }
    out
}

/// Scalar `r` with `P_λ = r · R_λ` in `v` variables (zero parts counted as `m_0`).
pub fn r_to_p_factor(lambda: &Partition, v: usize) -> RationalFn {
    let mut den = pochhammer(v - lambda.len());
    for m in lambda.multiplicities(lambda.first()).iter() {
        den *= &pochhammer(*m);
    }
    RationalFn::new(LaurentPoly::from_coeffs(0, &[1, -1]).pow(v as u32), den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::symfunc::basis::{hl_p, hl_q};

    #[test]
    fn partitions_give_hall_littlewood() {
        for v in 1..=4 {
            for size in 0..=5 {
                for lam in partitions_of(size, v, size) {
                    let r = r_function(&lam.padded(v)).map(|c| RationalFn::from(c.clone()));
                    let want = hl_p(&lam, v).map(|c| RationalFn::from(c.clone()));
                    assert_eq!(r.scale(&r_to_p_factor(&lam, v)), want, "{} v={}", lam, v);
                }
            }
        }
    }

    #[test]
    fn single_row_at_the_end() {
        // R_{(0,..,0,r)} against g_r with t inverted
        for v in 2..=4 {
            for r in 1..=3 {
                let mut mu = vec![0; v];
                mu[v - 1] = r;
                let got = r_function(&mu).map(|c| RationalFn::from(c.clone()));
                let g = hl_q(&Partition::row(r), v).map(|c| RationalFn::from(c.invert_var()));
                let one_minus_t = LaurentPoly::from_coeffs(0, &[1, -1]);
                let scale = RationalFn::new(-(pochhammer(v - 1) * LaurentPoly::t_pow(v as i32)), one_minus_t.pow(v as u32));
                assert_eq!(got, g.scale(&scale), "v={} r={}", v, r);
            }
        }
    }

    #[test]
    fn alternant_signs() {
        assert_eq!(straighten_alternant(&[0, 2]), Some((-1, Partition::row(1))));
        assert_eq!(straighten_alternant(&[1, 1]), None);
        assert_eq!(straighten_alternant(&[2, 0, 1]), Some((-1, Partition::empty())));
    }
}
