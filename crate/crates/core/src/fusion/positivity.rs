//! Scan of the cylindric Kostka-Foulkes matrix elements `⟨λ|S'_{ν̃'}|μ⟩` for
//! negative coefficients.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::partition::{Alcove, Partition};
use crate::qboson::nc_s_prime;

#[derive(Clone, Debug, Serialize)]
pub struct PositivityEntry {
    pub lambda: Partition,
    pub mu: Partition,
    /// Reduced label.
    pub nu: Partition,
    pub d: u32,
    pub value: String,
    pub nonnegative: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityReport {
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    pub negative: usize,
    pub entries: Vec<PositivityEntry>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.negative == 0
    }
}

/// Every nonzero `⟨λ|S'_{ν̃'}|μ⟩` with `ν̃` in the window and `|ν̃| ≤ bound`
/// (all of the window when `bound` is `None`).
pub fn positivity_scan(n: usize, k: usize, bound: Option<usize>) -> Result<PositivityReport> {
    let a = Alcove::new(n, k)?;
    let labels = a.enumerate();
    let nus: Vec<Partition> =
        a.enumerate_reduced().into_iter().filter(|nu| bound.is_none_or(|b| nu.size() <= b)).collect();
    let per_nu: Vec<Result<(usize, Vec<PositivityEntry>)>> = nus
        .par_iter()
        .map(|nu| {
            let op = nc_s_prime(&nu.conjugate(), n, k);
            let mut out = Vec::new();
            let mut checked = 0;
            for mu in &labels {
                for (lambda, v) in op.apply(mu)? {
                    checked += 1;
                    for (d, c) in v.terms() {
                        out.push(PositivityEntry {
                            lambda: lambda.clone(),
                            mu: mu.clone(),
                            nu: nu.clone(),
                            d,
                            value: c.to_string(),
                            nonnegative: c.is_nonnegative(),
                        });
                    }
                }
            }
            Ok((checked, out))
        })
        .collect();
    let mut checked = 0;
    let mut entries = Vec::new();
    for r in per_nu {
        let (c, e) = r?;
        checked += c;
        entries.extend(e);
    }
    let negative = entries.iter().filter(|e| !e.nonnegative).count();
    Ok(PositivityReport { n, k, checked, negative, entries })
}
