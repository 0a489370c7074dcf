//! Level-k fusion multiplicities of affine sl(n): Littlewood-Richardson
//! products folded into the alcove by the shifted affine Weyl action.

use std::collections::BTreeMap;

use crate::partition::Partition;
use crate::symfunc::lr_product;

/// Fold a diagram with at most `n` rows into the level-`k` alcove.
/// Returns the sign of the Weyl element and the folded diagram (full
/// columns dropped), or `None` when the weight lies on a wall.
pub fn affine_fold(lambda: &Partition, n: usize, k: usize) -> Option<(i64, Partition)> {
    if lambda.len() > n {
        return None;
    }
    let level = (k + n) as i64;
    let mut x: Vec<i64> = lambda.padded(n).iter().enumerate().map(|(i, &p)| p as i64 + (n - 1 - i) as i64).collect();
    let mut sign = 1i64;
    loop {
        // insertion sort, counting transpositions
        for i in 1..n {
            let mut j = i;
            while j > 0 && x[j - 1] < x[j] {
                x.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if x.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let spread = x[0] - x[n - 1];
        if spread == level {
            return None;
        }
        if spread < level {
            break;
        }
        let (hi, lo) = (x[0], x[n - 1]);
        x[0] = lo + level;
        x[n - 1] = hi - level;
        sign = -sign;
    }
    let shifted: Vec<i64> = x.iter().enumerate().map(|(i, &v)| v - (n - 1 - i) as i64).collect();
    let base = shifted[n - 1];
    let parts: Vec<usize> = shifted.iter().map(|&v| (v - base) as usize).collect();
    Some((sign, Partition::from_sorted(&parts)))
}

/// Kac-Walton fusion of two level-`k` diagrams with fewer than `n` rows.
pub fn kac_walton_fusion(mu: &Partition, nu: &Partition, n: usize, k: usize) -> BTreeMap<Partition, i64> {
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for (lambda, c) in lr_product(mu, nu) {
        if let Some((s, folded)) = affine_fold(&lambda, n, k) {
            *out.entry(folded).or_insert(0) += s * c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn level_one_sl3() {
        let f = kac_walton_fusion(&p("1"), &p("1"), 3, 1);
        assert_eq!(f, BTreeMap::from([(p("1,1"), 1)]));
    }

    #[test]
    fn unit() {
        let f = kac_walton_fusion(&p("2,1"), &Partition::empty(), 4, 3);
        assert_eq!(f, BTreeMap::from([(p("2,1"), 1)]));
    }

    #[test]
    fn sl2_level_two() {
        // spin 1 is a simple current at level 2
        let f = kac_walton_fusion(&p("2"), &p("2"), 2, 2);
        assert_eq!(f, BTreeMap::from([(Partition::empty(), 1)]));
        let g = kac_walton_fusion(&p("1"), &p("1"), 2, 2);
        assert_eq!(g, BTreeMap::from([(Partition::empty(), 1), (p("2"), 1)]));
    }

    #[test]
    fn full_columns_dropped() {
        assert_eq!(affine_fold(&p("2,1,1"), 3, 2), Some((1, p("1"))));
    }
}
