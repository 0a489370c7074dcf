//! q-numbers in the variable `t`.

use super::LaurentPoly;

/// `(t;t)_r = ∏_{s=1..r} (1 - t^s)`
pub fn pochhammer(r: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for s in 1..=r {
        acc = &acc * &one_minus_t_pow(s as i32);
    }
    acc
}

/// `1 - t^e`
pub fn one_minus_t_pow(e: i32) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::t_pow(e)
}

/// `[m]_t = 1 + t + ... + t^{m-1}`
pub fn bracket(m: usize) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, &vec![1; m])
}

/// Gaussian binomial `[a over b]_t`; zero outside `0 ≤ b ≤ a`.
pub fn q_binomial(a: i64, b: i64) -> LaurentPoly {
    if a < 0 || b < 0 || b > a {
        return LaurentPoly::zero();
    }
    let b = b.min(a - b) as usize;
    let a = a as usize;
    let mut num = LaurentPoly::one();
    for s in 0..b {
        num = &num * &one_minus_t_pow((a - s) as i32);
    }
    num.div_exact(&pochhammer(b)).expect("gaussian binomial is a polynomial")
}

/// `[m+n over n]_t`, zero when `m < 0` or `n < 0`.
pub fn q_binomial_sum(m: i64, n: i64) -> LaurentPoly {
    if m < 0 || n < 0 {
        return LaurentPoly::zero();
    }
    q_binomial(m + n, n)
}

/// `b_λ(t) = ∏_{i≥1} (t)_{m_i(λ)}` for the nonzero parts of `parts`.
pub fn b_lambda(parts: &[usize]) -> LaurentPoly {
    let mut counts = std::collections::BTreeMap::new();
    for &p in parts.iter().filter(|&&p| p > 0) {
        *counts.entry(p).or_insert(0usize) += 1;
    }
    counts.values().map(|&m| pochhammer(m)).product()
}

/// `∏_{i≥0} (t)_{m_i}` where zero parts are counted too.
pub fn b_lambda_with_zeros(parts: &[usize]) -> LaurentPoly {
    let zeros = parts.iter().filter(|&&p| p == 0).count();
    &b_lambda(parts) * &pochhammer(zeros)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QKind {
    Pochhammer,
    Binomial,
    Bracket,
}

/// Dispatcher over the three families; `Binomial` takes `[a, b]` and returns
/// `[a over b]_t`.
pub fn q_factorial(kind: QKind, args: &[i64]) -> LaurentPoly {
    match kind {
        QKind::Pochhammer => pochhammer(args[0].max(0) as usize),
        QKind::Bracket => bracket(args[0].max(0) as usize),
        QKind::Binomial => q_binomial(args[0], args[1]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(pochhammer(0), LaurentPoly::one());
        assert_eq!(q_binomial(2, 1).to_string(), "1 + t");
        assert_eq!(q_binomial(4, 2).to_string(), "1 + t + 2*t^2 + t^3 + t^4");
        assert_eq!(q_binomial(3, 5), LaurentPoly::zero());
        assert_eq!(bracket(3).to_string(), "1 + t + t^2");
    }

    #[test]
    fn b_of_partitions() {
        assert_eq!(b_lambda(&[]), LaurentPoly::one());
        assert_eq!(b_lambda(&[2, 2, 1]), &pochhammer(2) * &pochhammer(1));
        assert_eq!(b_lambda(&[3, 3, 3]), pochhammer(3));
    }

    #[test]
    fn pascal_rule() {
        for m in 1..7 {
            for n in 1..7 {
                let lhs = q_binomial_sum(m, n);
                let rhs = &q_binomial_sum(m - 1, n) + &(&LaurentPoly::t_pow(m as i32) * &q_binomial_sum(m, n - 1));
                assert_eq!(lhs, rhs, "m={} n={}", m, n);
            }
        }
    }
}
