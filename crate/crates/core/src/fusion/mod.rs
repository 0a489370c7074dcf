//! The deformed Verlinde algebra on `A_{k,n}^+`: coordinate-ring reduction,
//! fusion coefficients `N_{μν}^λ(t)`, Frobenius checks, the `t = 0` oracle
//! and the positivity scan.

mod frobenius;
mod kacwalton;
mod positivity;
mod quotient;

pub use frobenius::{b_label, frobenius, FrobeniusCheck, FrobeniusReport};
pub use kacwalton::{affine_fold, kac_walton_fusion};
pub use positivity::{positivity_scan, PositivityEntry, PositivityReport};
pub use quotient::{multiply_reduce, p_expansion, quotient_reduce, reduce_p, straighten_r, QuotientElement};

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::partition::{Alcove, Partition};
use crate::poly::LaurentPoly;
use crate::qboson::nc_q_prime;
use crate::symfunc::hl_p;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FusionRoute {
    /// Matrix elements of `Q'_{ν̃'}`.
    Matrix,
    /// `[P_μ̃ P_ν̃]` in the coordinate ring.
    Straighten,
    Both,
}

impl FromStr for FusionRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "matrix" => FusionRoute::Matrix,
            "straighten" => FusionRoute::Straighten,
            "both" => FusionRoute::Both,
            other => return Err(Error::Parse(format!("unknown fusion route `{}`", other))),
        })
    }
}

fn matrix_route(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<BTreeMap<Partition, LaurentPoly>> {
    let a = Alcove::new(n, k)?;
    let nu_r = a.reduce(nu)?;
    let op = nc_q_prime(&nu_r.conjugate(), n, k);
    Ok(op
        .apply(mu)?
        .into_iter()
        .map(|(l, c)| (l, c.at_z_one()))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

fn straighten_route(mu: &Partition, nu: &Partition, n: usize, k: usize) -> Result<BTreeMap<Partition, LaurentPoly>> {
    let a = Alcove::new(n, k)?;
    let (mu_r, nu_r) = (a.reduce(mu)?, a.reduce(nu)?);
    let red = multiply_reduce(&hl_p(&mu_r, k), &nu_r, n, k)?;
    red.at_z_one().into_iter().map(|(l, c)| Ok((a.unreduce(&l)?, c))).collect()
}

/// `N_{μν}^λ(t)` at `z = 1` for every `λ`, keyed by the alcove label.
pub fn fusion_coeffs(mu: &Partition, nu: &Partition, n: usize, k: usize, route: FusionRoute) -> Result<BTreeMap<Partition, LaurentPoly>> {
    match route {
        FusionRoute::Matrix => matrix_route(mu, nu, n, k),
        FusionRoute::Straighten => straighten_route(mu, nu, n, k),
        FusionRoute::Both => {
            let m = matrix_route(mu, nu, n, k)?;
            let s = straighten_route(mu, nu, n, k)?;
            if m != s {
                let lam = m.keys().chain(s.keys()).find(|l| m.get(*l) != s.get(*l)).expect("maps differ");
                let show = |x: Option<&LaurentPoly>| x.map_or("0".to_string(), |c| c.to_string());
                return Err(Error::RouteMismatch(format!(
                    "mu={} nu={} lambda={}: matrix {} vs straighten {}",
                    mu,
                    nu,
                    lam,
                    show(m.get(lam)),
                    show(s.get(lam))
                )));
            }
            Ok(m)
        }
    }
}

/// Winding degree `(|μ̃| + |ν̃| - |λ̃|)/n`, or `None` if not a nonnegative integer.
pub fn winding(mu: &Partition, nu: &Partition, lambda: &Partition, n: usize) -> Option<usize> {
    let red = |p: &Partition| p.parts().iter().filter(|&&x| x != n).sum::<usize>() as i64;
    let diff = red(mu) + red(nu) - red(lambda);
    (diff >= 0 && diff % n as i64 == 0).then(|| (diff / n as i64) as usize)
}

/// All structure constants of the algebra at fixed `n`, `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionTable {
    pub n: usize,
    pub k: usize,
    pub labels: Vec<Partition>,
    pub entries: BTreeMap<(Partition, Partition, Partition), LaurentPoly>,
}

impl FusionTable {
    /// Only the pairs listed are computed.
    pub fn for_pairs(n: usize, k: usize, pairs: &[(Partition, Partition)], route: FusionRoute) -> Result<Self> {
        let labels = Alcove::new(n, k)?.enumerate();
        let rows: Vec<Result<Vec<_>>> = pairs
            .par_iter()
            .map(|(mu, nu)| {
                let f = fusion_coeffs(mu, nu, n, k, route)?;
                Ok(f.into_iter().map(|(l, c)| ((mu.clone(), nu.clone(), l), c)).collect())
            })
            .collect();
        let mut entries = BTreeMap::new();
        for r in rows {
            entries.extend(r?);
        }
        Ok(FusionTable { n, k, labels, entries })
    }

    /// Every pair in `A_{k,n}^+`.
    pub fn build(n: usize, k: usize, route: FusionRoute) -> Result<Self> {
        let labels = Alcove::new(n, k)?.enumerate();
        let pairs: Vec<_> = labels.iter().flat_map(|m| labels.iter().map(move |v| (m.clone(), v.clone()))).collect();
        Self::for_pairs(n, k, &pairs, route)
    }

    pub fn get(&self, mu: &Partition, nu: &Partition, lambda: &Partition) -> LaurentPoly {
        self.entries.get(&(mu.clone(), nu.clone(), lambda.clone())).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Nonzero `(λ, N)` for one pair.
    pub fn row(&self, mu: &Partition, nu: &Partition) -> Vec<(Partition, LaurentPoly)> {
        self.entries
            .iter()
            .filter(|((m, v, _), _)| m == mu && v == nu)
            .map(|((_, _, l), c)| (l.clone(), c.clone()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .entries
            .iter()
            .map(|((mu, nu, l), c)| {
                json!({
                    "mu": mu.to_string(),
                    "nu": nu.to_string(),
                    "lambda": l.to_string(),
                    "N": c.to_string(),
                    "d": winding(mu, nu, l, self.n),
                })
            })
            .collect();
        json!({ "n": self.n, "k": self.k, "entries": entries })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for ((mu, nu, l), c) in &self.entries {
            s.push_str(&format!("mu={}  nu={}  lambda={}  N={}\n", mu, nu, l, c));
        }
        s
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::from("\\begin{tabular}{lll|l}\n$\\mu$ & $\\nu$ & $\\lambda$ & $N_{\\mu\\nu}^{\\lambda}(t)$ \\\\\n\\hline\n");
        for ((mu, nu, l), c) in &self.entries {
            s.push_str(&format!("$({})$ & $({})$ & $({})$ & ${}$ \\\\\n", mu, nu, l, c.to_latex()));
        }
        s.push_str("\\end{tabular}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn worked_fusion_example() {
        let f = fusion_coeffs(&p("4,3,1"), &p("3,2,1"), 4, 3, FusionRoute::Both).unwrap();
        let want = BTreeMap::from([
            (p("3,2,1"), lp("2 + t - t^2")),
            (p("2,2,2"), lp("1 + 2t + 2t^2 + t^3")),
            (p("4,3,3"), lp("1 + t")),
            (p("4,1,1"), lp("1 + t")),
            (p("4,4,2"), lp("1 + t")),
        ]);
        assert_eq!(f, want);
    }

    #[test]
    fn unit_label() {
        for mu in (Alcove { n: 3, k: 2 }).enumerate() {
            let f = fusion_coeffs(&mu, &p("3,3"), 3, 2, FusionRoute::Both).unwrap();
            assert_eq!(f, BTreeMap::from([(mu.clone(), LaurentPoly::one())]));
        }
    }

    #[test]
    fn json_schema() {
        let t = FusionTable::for_pairs(4, 3, &[(p("4,3,1"), p("3,2,1"))], FusionRoute::Matrix).unwrap();
        let v = t.to_json();
        assert_eq!(v["n"], 4);
        let e = v["entries"].as_array().unwrap().iter().find(|e| e["lambda"] == "3,2,1").unwrap();
        assert_eq!(e["N"], "2 + t - t^2");
        assert_eq!(e["d"], 1);
    }
}
