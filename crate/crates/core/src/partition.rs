//! Partitions, the level-k alcove and cylindric skew shapes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers (zeros are trimmed).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates monotonicity; trailing zeros are dropped.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{:?} is not weakly decreasing", parts)));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the input first.
    pub fn from_unsorted(parts: &[usize]) -> Self {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(&v)
    }

    pub(crate) fn from_sorted(parts: &[usize]) -> Self {
        let end = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        Partition(parts[..end].to_vec())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row `(r)`.
    pub fn row(r: usize) -> Self {
        Self::from_sorted(&[r])
    }

    /// Single column `(1^r)`.
    pub fn column(r: usize) -> Self {
        Partition(vec![1; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.first();
        let mut c = vec![0; w];
        for &p in &self.0 {
            for x in c.iter_mut().take(p) {
                *x += 1;
            }
        }
        Partition(c)
    }

    /// Column height `λ'_j` for 1-based `j`.
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return usize::MAX;
        }
        self.0.iter().filter(|&&p| p >= j).count()
    }

    /// `m_i(λ)` for `i = 1..=n`.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for &p in &self.0 {
            if p >= 1 && p <= n {
                m[p - 1] += 1;
            }
        }
        m
    }

    /// Inverse of [`Partition::multiplicities`].
    pub fn from_multiplicities(m: &[usize]) -> Partition {
        let mut v = Vec::new();
        for i in (0..m.len()).rev() {
            v.extend(std::iter::repeat(i + 1).take(m[i]));
        }
        Partition(v)
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance `self ≥ other` (equal sizes assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `self/mu` is a horizontal strip (at most one box per column).
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        if !self.contains(mu) {
            return false;
        }
        (0..self.len()).all(|i| i == 0 || self.part(i) <= mu.part(i - 1))
    }

    /// `self/mu` is a vertical strip (at most one box per row).
    pub fn is_vertical_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (0..self.len()).all(|i| self.part(i) <= mu.part(i) + 1)
    }

    /// Sum of `(i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("bad partition `{}`", s)))?;
        Partition::new(&parts)
    }
}

/// Partitions of `size` with at most `max_len` parts each at most `max_part`,
/// in reverse lexicographic order (largest first).
pub fn partitions_of(size: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            if p * slots < rem {
                break;
            }
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions contained in the `len × width` box, lexicographically ordered
/// by padded parts.
pub fn partitions_in_box(len: usize, width: usize) -> Vec<Partition> {
    fn rec(slots: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            out.push(cur.clone());
            return;
        }
        for p in lo..=hi {
            cur.push(p);
            rec(slots - 1, lo, p, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(len, 0, width, &mut Vec::new(), &mut raw);
    raw.sort();
    raw.into_iter().map(|v| Partition::from_sorted(&v)).collect()
}

/// The alcove `A_{k,n}^+`: partitions with exactly `k` parts in `[1, n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alcove {
    pub n: usize,
    pub k: usize,
}

impl Alcove {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("need n >= 2 sites, got {}", n)));
        }
        Ok(Alcove { n, k })
    }

    /// Lexicographic (increasing) enumeration.
    pub fn enumerate(&self) -> Vec<Partition> {
        fn rec(slots: usize, n: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if slots == 0 {
                out.push(cur.clone());
                return;
            }
            for p in 1..=hi.min(n) {
                cur.push(p);
                rec(slots - 1, n, p, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(self.k, self.n, self.n, &mut Vec::new(), &mut raw);
        raw.sort();
        raw.into_iter().map(Partition).collect()
    }

    /// Reduced labels: at most `k` parts, each in `[0, n-1]`.
    pub fn enumerate_reduced(&self) -> Vec<Partition> {
        partitions_in_box(self.k, self.n - 1)
    }

    pub fn count(&self) -> usize {
        binomial_count(self.n + self.k - 1, self.k)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.len() == self.k && lambda.first() <= self.n
    }

    pub fn contains_reduced(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.k && lambda.first() < self.n
    }

    pub fn check(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::OutOfAlcove { label: lambda.to_string(), n: self.n, k: self.k })
        }
    }

    /// Drop every part equal to `n`.
    pub fn reduce(&self, lambda: &Partition) -> Result<Partition> {
        self.check(lambda)?;
        let v: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p != self.n).collect();
        Ok(Partition(v))
    }

    /// Pad with parts `n` up to length `k`.
    pub fn unreduce(&self, lambda: &Partition) -> Result<Partition> {
        if !self.contains_reduced(lambda) {
            return Err(Error::OutOfAlcove { label: lambda.to_string(), n: self.n, k: self.k });
        }
        let mut v = vec![self.n; self.k - lambda.len()];
        v.extend_from_slice(lambda.parts());
        Ok(Partition(v))
    }

    /// Contragredient label `λ*`.
    pub fn star(&self, lambda: &Partition) -> Result<Partition> {
        self.check(lambda)?;
        let v: Vec<usize> = lambda.parts().iter().rev().map(|&p| if p == self.n { self.n } else { self.n - p }).collect();
        Ok(Partition::from_unsorted(&v))
    }

    /// Rotation of the affine Dynkin diagram: `m_i ↦ m_{i+1}`.
    pub fn rot(&self, lambda: &Partition) -> Result<Partition> {
        self.check(lambda)?;
        let m = lambda.multiplicities(self.n);
        let m2: Vec<usize> = (0..self.n).map(|i| m[(i + 1) % self.n]).collect();
        Ok(Partition::from_multiplicities(&m2))
    }
}

pub fn binomial_count(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    let mut r: usize = 1;
    for i in 0..b {
        r = r * (a - i) / (i + 1);
    }
    r
}

/// Summary of a partition relative to `n` sites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub conjugate: Partition,
    pub multiplicities: Vec<usize>,
    pub weight: usize,
    pub length: usize,
}

pub fn partition_stats(lambda: &Partition, n: usize) -> Result<PartitionStats> {
    if lambda.first() > n {
        return Err(Error::InvalidPartition(format!("part {} exceeds n = {}", lambda.first(), n)));
    }
    Ok(PartitionStats {
        conjugate: lambda.conjugate(),
        multiplicities: lambda.multiplicities(n),
        weight: lambda.size(),
        length: lambda.len(),
    })
}

/// Cylindric skew shape `λ/d/μ` for labels in `A_{k,n}^+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CylShape {
    pub n: usize,
    pub k: usize,
    pub lambda: Partition,
    pub d: usize,
    pub mu: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StripClass {
    Empty,
    Horizontal,
    Vertical,
    /// Both a horizontal and a vertical strip (e.g. a single box).
    Both,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripInfo {
    pub class: StripClass,
    /// `None` when containment fails.
    pub size: Option<usize>,
    pub col_profile: Vec<i64>,
}

impl CylShape {
    pub fn new(n: usize, k: usize, lambda: Partition, d: usize, mu: Partition) -> Result<Self> {
        let a = Alcove { n, k };
        a.check(&lambda)?;
        a.check(&mu)?;
        Ok(CylShape { n, k, lambda, d, mu })
    }

    /// `θ_j = λ'_j + d - μ'_j` for `j = 1..n`.
    pub fn col_profile(&self) -> Vec<i64> {
        (1..=self.n).map(|j| self.lambda.col(j) as i64 + self.d as i64 - self.mu.col(j) as i64).collect()
    }

    /// Row `i` (1-based) of the shifted loop `λ[d]`.
    pub fn shifted_row(&self, i: usize) -> i64 {
        shifted_row(&self.lambda, self.k, self.n, self.d, i)
    }

    pub fn box_count(&self) -> i64 {
        self.lambda.size() as i64 + (self.n * self.d) as i64 - self.mu.size() as i64
    }

    pub fn is_horizontal(&self) -> bool {
        self.col_profile().iter().all(|&x| x == 0 || x == 1)
    }

    pub fn is_vertical(&self) -> bool {
        (1..=self.k).all(|i| {
            let diff = self.shifted_row(i) - self.mu.part(i - 1) as i64;
            diff == 0 || diff == 1
        })
    }

    pub fn classify(&self) -> StripInfo {
        let theta = self.col_profile();
        let rows_ok = (1..=self.k).all(|i| self.shifted_row(i) >= self.mu.part(i - 1) as i64);
        if theta.iter().any(|&x| x < 0) || !rows_ok {
            return StripInfo { class: StripClass::Neither, size: None, col_profile: theta };
        }
        let size = theta.iter().sum::<i64>() as usize;
        let class = if theta.iter().all(|&x| x == 0) {
            StripClass::Empty
        } else {
            match (self.is_horizontal(), self.is_vertical()) {
                (true, true) => StripClass::Both,
                (true, false) => StripClass::Horizontal,
                (false, true) => StripClass::Vertical,
                (false, false) => StripClass::Neither,
            }
        };
        StripInfo { class, size: Some(size), col_profile: theta }
    }
}

/// `λ[d]_i` with `λ[0]_{j - ck} = λ_j + cn` for `j ∈ [1, k]`.
pub fn shifted_row(lambda: &Partition, k: usize, n: usize, d: usize, i: usize) -> i64 {
    let idx = i as i64 - d as i64;
    let c = if idx >= 1 { -((idx - 1) / k as i64) } else { (-idx) / k as i64 + 1 };
    let j = idx + c * k as i64;
    debug_assert!(j >= 1 && j <= k as i64);
    lambda.part(j as usize - 1) as i64 + c * n as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn alcove_enumeration() {
        let a = Alcove::new(3, 1).unwrap();
        assert_eq!(a.enumerate(), vec![p("1"), p("2"), p("3")]);
        assert_eq!(Alcove::new(4, 3).unwrap().enumerate().len(), 20);
        assert_eq!(Alcove::new(3, 0).unwrap().enumerate(), vec![Partition::empty()]);
        for n in 3..6 {
            for k in 0..5 {
                let a = Alcove { n, k };
                assert_eq!(a.enumerate().len(), a.count());
                assert_eq!(a.enumerate_reduced().len(), a.count());
            }
        }
    }

    #[test]
    fn stats() {
        let s = partition_stats(&p("2,1"), 3).unwrap();
        assert_eq!(s.multiplicities, vec![1, 1, 0]);
        assert_eq!(s.conjugate, p("2,1"));
        let s = partition_stats(&p("5,5,4,3"), 6).unwrap();
        assert_eq!(s.multiplicities, vec![0, 0, 1, 1, 2, 0]);
        assert_eq!(s.conjugate, p("4,4,4,3,2"));
        assert_eq!(partition_stats(&Partition::empty(), 4).unwrap().multiplicities, vec![0; 4]);
        assert!(partition_stats(&p("5"), 4).is_err());
    }

    #[test]
    fn bijections() {
        let a = Alcove::new(4, 3).unwrap();
        assert_eq!(a.reduce(&p("4,3,1")).unwrap(), p("3,1"));
        assert_eq!(a.star(&p("3,2,1")).unwrap(), p("3,2,1"));
        assert_eq!(a.rot(&p("4,3,1")).unwrap(), p("4,3,2"));
        assert_eq!(a.unreduce(&p("3,1")).unwrap(), p("4,3,1"));
    }

    #[test]
    fn strip_examples() {
        let s = CylShape::new(4, 3, p("4,4,2"), 0, p("4,3,1")).unwrap();
        let info = s.classify();
        assert_eq!(info.col_profile, vec![0, 1, 0, 1]);
        assert_eq!(info.class, StripClass::Both);
        let s = CylShape::new(4, 3, p("4,4,1"), 0, p("4,3,2")).unwrap();
        assert_eq!(s.classify().class, StripClass::Neither);
        let s = CylShape { n: 2, k: 1, lambda: p("1"), d: 1, mu: p("1") };
        let info = s.classify();
        assert_eq!(info.col_profile, vec![1, 1]);
        assert_eq!(info.class, StripClass::Horizontal);
        assert_eq!(info.size, Some(2));
        let s = CylShape::new(4, 3, p("4,3,1"), 0, p("4,3,1")).unwrap();
        assert_eq!(s.classify().class, StripClass::Empty);
    }

    #[test]
    fn shifted_rows_wrap() {
        let lam = p("3,2,1");
        assert_eq!(shifted_row(&lam, 3, 4, 0, 2), 2);
        assert_eq!(shifted_row(&lam, 3, 4, 1, 1), 1 + 4);
        assert_eq!(shifted_row(&lam, 3, 4, 2, 1), 2 + 4);
        assert_eq!(shifted_row(&lam, 3, 4, 4, 1), 1 + 8);
    }
}
