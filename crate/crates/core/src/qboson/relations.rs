//! Exact checks of the algebraic identities satisfied by the operators.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, ZPoly};

use super::ops::{nc_elementary, nc_gprime, plactic_a, Route};
use super::{fock_basis, OpMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Knuth,
    Commute,
    Tq,
    PieriVsWords,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "knuth" => Suite::Knuth,
            "commute" => Suite::Commute,
            "tq" => Suite::Tq,
            "pieri_vs_words" | "pieri-vs-words" => Suite::PieriVsWords,
            other => return Err(Error::Parse(format!("unknown relation suite `{}`", other))),
        })
    }
}

/// Outcome of one suite: how many identities were checked and a witness
/// entry for each one that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub suite: Suite,
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, what: impl FnOnce() -> String, lhs: &OpMatrix, rhs: &OpMatrix) {
        self.checked += 1;
        if let Some(w) = first_difference(lhs, rhs) {
            self.failures.push(format!("{}: {}", what(), w));
        }
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{:?} n={} k={}: {} ({} identities)", self.suite, self.n, self.k, status, self.checked)?;
        for w in &self.failures {
            write!(f, "\n  {}", w)?;
        }
        Ok(())
    }
}

/// First entry where two operators differ, as `<row|..|col>: lhs vs rhs`.
pub(crate) fn first_difference(a: &OpMatrix, b: &OpMatrix) -> Option<String> {
    let diff = a.sub(b);
    let (i, j, _) = diff.entries().next()?;
    Some(format!(
        "<{}|..|{}>: {} vs {}",
        a.codomain.labels[i],
        a.domain.labels[j],
        a.entry_at(i, j),
        b.entry_at(i, j)
    ))
}

/// Both readings of the `e`/`g'` functional equation at order `u^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TqForm {
    /// `t^c g'_c + z t^{N_tot} g'_{c-n}`
    Printed,
    /// `t^c g'_c + z (-1)^n t^{n-c} t^{N_tot} g'_{c-n}`, the `u^c` coefficient
    /// of the generating-function identity.
    Generating,
}

/// Left and right sides of the functional equation at order `u^c`.
pub fn tq_sides(form: TqForm, c: usize, n: usize, k: usize) -> (OpMatrix, OpMatrix) {
    let basis = fock_basis(n, k);
    let mut lhs = OpMatrix::zero(basis.clone(), basis.clone());
    for a in 0..=c.min(n) {
        let term = nc_elementary(a, n, k, Route::Pieri).compose(&nc_gprime(c - a, n, k, Route::Pieri));
        lhs = if a % 2 == 0 { lhs.add(&term) } else { lhs.sub(&term) };
    }
    let mut rhs = nc_gprime(c, n, k, Route::Pieri).scale(&LaurentPoly::t_pow(c as i32));
    if c >= n {
        let shift = match form {
            TqForm::Printed => LaurentPoly::t_pow(k as i32),
            TqForm::Generating => {
                let sgn = if n % 2 == 0 { 1 } else { -1 };
                LaurentPoly::monomial(sgn, k as i32 + n as i32 - c as i32)
            }
        };
        let tail = nc_gprime(c - n, n, k, Route::Pieri).scale_z(&ZPoly::z_pow(1, shift));
        rhs = rhs.add(&tail);
    }
    (lhs, rhs)
}

fn knuth(report: &mut RelationReport) {
    let (n, k) = (report.n, report.k);
    let a: Vec<OpMatrix> = (1..=n).map(|i| plactic_a(i, n, k)).collect();
    let t = LaurentPoly::t();
    let one_plus_t = &LaurentPoly::one() + &t;
    for i in 0..n {
        let x = &a[i];
        let y = &a[(i + 1) % n];
        let x2 = x.compose(x);
        let y2 = y.compose(y);
        let lhs = y.compose(&x2).add(&x2.compose(y).scale(&t));
        let rhs = x.compose(y).compose(x).scale(&one_plus_t);
        report.check(|| format!("first cubic relation at i={}", i + 1), &lhs, &rhs);
        let lhs = y2.compose(x).add(&x.compose(&y2).scale(&t));
        let rhs = y.compose(x).compose(y).scale(&one_plus_t);
        report.check(|| format!("second cubic relation at i={}", i + 1), &lhs, &rhs);
        for j in 0..n {
            let dist = (i + n - j) % n;
            if dist > 1 && dist < n - 1 {
                report.check(|| format!("a_{} a_{} = a_{} a_{}", i + 1, j + 1, j + 1, i + 1), &a[i].compose(&a[j]), &a[j].compose(&a[i]));
            }
        }
    }
}

fn commute(report: &mut RelationReport) {
    let (n, k) = (report.n, report.k);
    let gmax = n + k;
    let e = |r| nc_elementary(r, n, k, Route::Pieri);
    let g = |r| nc_gprime(r, n, k, Route::Pieri);
    for r in 1..=n {
        for s in r + 1..=n {
            report.check(|| format!("[e_{}, e_{}]", r, s), &e(r).compose(&e(s)), &e(s).compose(&e(r)));
        }
        for s in 1..=gmax {
            report.check(|| format!("[e_{}, g'_{}]", r, s), &e(r).compose(&g(s)), &g(s).compose(&e(r)));
        }
    }
    for r in 1..=gmax {
        for s in r + 1..=gmax {
            report.check(|| format!("[g'_{}, g'_{}]", r, s), &g(r).compose(&g(s)), &g(s).compose(&g(r)));
        }
    }
}

fn tq(report: &mut RelationReport) {
    let (n, k) = (report.n, report.k);
    for c in 0..=2 * n + 1 {
        let (lhs, rhs) = tq_sides(TqForm::Generating, c, n, k);
        report.check(|| format!("functional equation at u^{}", c), &lhs, &rhs);
    }
}

fn pieri_vs_words(report: &mut RelationReport) {
    let (n, k) = (report.n, report.k);
    for r in 0..=n {
        report.check(|| format!("e_{}", r), &nc_elementary(r, n, k, Route::Pieri), &nc_elementary(r, n, k, Route::Words));
    }
    for r in 0..=n + k {
        report.check(|| format!("g'_{}", r), &nc_gprime(r, n, k, Route::Pieri), &nc_gprime(r, n, k, Route::Words));
    }
}

/// Run one suite on the level-`k` Fock space of `n` sites.
pub fn verify_relations(suite: Suite, n: usize, k: usize) -> RelationReport {
    let mut report = RelationReport { suite, n, k, checked: 0, failures: Vec::new() };
    match suite {
        Suite::Knuth => knuth(&mut report),
        Suite::Commute => commute(&mut report),
        Suite::Tq => tq(&mut report),
        Suite::PieriVsWords => pieri_vs_words(&mut report),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_sizes() {
        for (suite, n, k) in [(Suite::Knuth, 4, 2), (Suite::Tq, 3, 2), (Suite::Commute, 4, 3), (Suite::PieriVsWords, 3, 2)] {
            let r = verify_relations(suite, n, k);
            assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn tq_forms() {
        for (n, k) in [(3, 1), (3, 2), (4, 2)] {
            for c in 0..=2 * n {
                let (l, r) = tq_sides(TqForm::Generating, c, n, k);
                assert_eq!(first_difference(&l, &r), None, "n={} k={} c={}", n, k, c);
                if c < n {
                    let (l, r) = tq_sides(TqForm::Printed, c, n, k);
                    assert_eq!(first_difference(&l, &r), None);
                }
            }
        }
        let (l, r) = tq_sides(TqForm::Printed, 3, 3, 2);
        assert!(first_difference(&l, &r).is_some());
    }
}
