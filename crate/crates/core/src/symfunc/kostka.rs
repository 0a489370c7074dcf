//! Kostka numbers and Kostka-Foulkes polynomials by three independent routes.

use std::collections::HashMap;

use crate::partition::Partition;
use crate::poly::LaurentPoly;

use super::basis::{permutations, sign};
use super::tableau::horizontal_strips_into;

/// Semistandard tableaux of shape `λ` and content `μ`, as rows of entries
/// (entries start at 1).
pub fn ssyt(lambda: &Partition, mu: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if lambda.size() != mu.iter().sum::<usize>() {
        return out;
    }
    let mut chain = vec![Partition::empty()];
    grow(lambda, mu, &mut chain, &mut out);
    out
}

fn grow(lambda: &Partition, mu: &[usize], chain: &mut Vec<Partition>, out: &mut Vec<Vec<Vec<usize>>>) {
    let step = chain.len() - 1;
    if step == mu.len() {
        if chain.last().unwrap() == lambda {
            out.push(fill_rows(lambda, chain));
        }
        return;
    }
    let cur = chain.last().unwrap().clone();
    for next in horizontal_strips_into(&cur, mu[step], Some(lambda), lambda.len()) {
        chain.push(next);
        grow(lambda, mu, chain, out);
        chain.pop();
    }
}

fn fill_rows(lambda: &Partition, chain: &[Partition]) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = (0..lambda.len()).map(|i| vec![0; lambda.part(i)]).collect();
    for a in 1..chain.len() {
        for (i, row) in rows.iter_mut().enumerate() {
            for cell in row.iter_mut().take(chain[a].part(i)).skip(chain[a - 1].part(i)) {
                *cell = a;
            }
        }
    }
    rows
}

pub fn kostka_number(lambda: &Partition, mu: &[usize]) -> usize {
    ssyt(lambda, mu).len()
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while letters.iter().any(|x| x.is_some()) {
        let n = letters.len();
        let mut pos = n;
        let mut want = 1;
        let mut index = 0;
        loop {
            // scan leftward cyclically from `pos` for `want`
            let mut found = None;
            let mut wrapped = false;
            for step in 1..=n {
                let p = (pos + n - step) % n;
                if pos < n && p >= pos {
                    wrapped = true;
                }
                if letters[p] == Some(want) {
                    found = Some(p);
                    break;
                }
            }
            let Some(p) = found else { break };
            if want > 1 && wrapped {
                index += 1;
            }
            total += index;
            letters[p] = None;
            pos = p;
            want += 1;
        }
    }
    total
}

/// Row reading word, bottom row first.
pub fn reading_word(t: &[Vec<usize>]) -> Vec<usize> {
    t.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// `Σ_T t^{charge(T)}` over SSYT of shape `λ` and content `μ`.
pub fn charge_kostka(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    ssyt(lambda, mu.parts()).iter().map(|t| LaurentPoly::t_pow(charge(&reading_word(t)) as i32)).sum()
}

/// t-analogue of Kostant's partition function for the positive roots
/// `e_i - e_j` (i < j): `Σ t^{#roots}` over multisets of roots summing to `γ`.
pub fn partition_function_t(gamma: &[i64]) -> LaurentPoly {
    let mut memo = HashMap::new();
    kostant(gamma, &mut memo)
}

fn kostant(gamma: &[i64], memo: &mut HashMap<Vec<i64>, LaurentPoly>) -> LaurentPoly {
    if gamma.iter().sum::<i64>() != 0 {
        return LaurentPoly::zero();
    }
    let mut acc = 0;
    for &x in gamma {
        acc += x;
        if acc < 0 {
            return LaurentPoly::zero();
        }
    }
    if gamma.len() <= 1 || gamma.iter().all(|&x| x == 0) {
        return LaurentPoly::one();
    }
    if let Some(v) = memo.get(gamma) {
        return v.clone();
    }
    let a = gamma[0];
    let mut rest = gamma[1..].to_vec();
    let mut total = LaurentPoly::zero();
    spread(a, 0, &mut rest, memo, &mut total);
    let total = total * LaurentPoly::t_pow(a as i32);
    memo.insert(gamma.to_vec(), total.clone());
    total
}

// Distribute `left` units of e_1 - e_j over j = idx.. of `rest`.
fn spread(left: i64, idx: usize, rest: &mut Vec<i64>, memo: &mut HashMap<Vec<i64>, LaurentPoly>, total: &mut LaurentPoly) {
    if idx == rest.len() - 1 {
        rest[idx] += left;
        *total += &kostant(rest, memo);
        rest[idx] -= left;
        return;
    }
    for c in 0..=left {
        rest[idx] += c;
        spread(left - c, idx + 1, rest, memo, total);
        rest[idx] -= c;
    }
}

/// `sgn(w) 𝒫_t(w(λ+ρ) - (μ+ρ))` with `ρ = (k-1, ..., 1, 0)`.
pub fn lusztig_term(w_lambda_rho: &[i64], mu: &Partition, k: usize) -> LaurentPoly {
    let target: Vec<i64> = (0..k).map(|i| mu.part(i) as i64 + (k - 1 - i) as i64).collect();
    let gamma: Vec<i64> = w_lambda_rho.iter().zip(&target).map(|(a, b)| a - b).collect();
    partition_function_t(&gamma)
}

/// Lusztig's alternating sum over `S_k`.
pub fn lusztig_kostka(lambda: &Partition, mu: &Partition, k: usize) -> LaurentPoly {
    let lr: Vec<i64> = (0..k).map(|i| lambda.part(i) as i64 + (k - 1 - i) as i64).collect();
    let mut memo = HashMap::new();
    let target: Vec<i64> = (0..k).map(|i| mu.part(i) as i64 + (k - 1 - i) as i64).collect();
    let mut total = LaurentPoly::zero();
    for perm in permutations(k) {
        let gamma: Vec<i64> = (0..k).map(|i| lr[perm[i]] - target[i]).collect();
        let term = kostant(&gamma, &mut memo);
        if sign(&perm) < 0 {
            total -= &term;
        } else {
            total += &term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_charges() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge_kostka(&p("2"), &p("1,1")), LaurentPoly::t());
        assert_eq!(charge_kostka(&p("3"), &p("1,1,1")), "t^3".parse().unwrap());
        assert_eq!(charge_kostka(&p("2,1"), &p("1,1,1")), "t + t^2".parse().unwrap());
    }

    #[test]
    fn worked_example() {
        let want: LaurentPoly = "t^3 + t^4 + t^5".parse().unwrap();
        assert_eq!(charge_kostka(&p("3,3,2"), &p("2,2,2,2")), want);
        assert_eq!(lusztig_kostka(&p("3,3,2"), &p("2,2,2,2"), 4), want);
        let term = lusztig_term(&[6, 5, 3, 0], &p("2,2,2,2"), 4);
        assert_eq!(term, "t^2 + 3*t^3 + 2*t^4 + t^5".parse().unwrap());
    }

    #[test]
    fn routes_agree_small() {
        for size in 1..=5 {
            for lam in partitions_of(size, size, size) {
                for mu in partitions_of(size, size, size) {
                    let c = charge_kostka(&lam, &mu);
                    let l = lusztig_kostka(&lam, &mu, size);
                    assert_eq!(c, l, "{} {}", lam, mu);
                    assert_eq!(c.at_one().to_string(), kostka_number(&lam, mu.parts()).to_string());
                }
            }
        }
    }
}
