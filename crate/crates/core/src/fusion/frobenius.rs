//! Identities of the Frobenius structure, checked entry by entry on a full
//! fusion table.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::cylfunc::{cyl_function, CylFunction};
use crate::error::{Error, Result};
use crate::partition::{Alcove, CylShape, Partition};
use crate::poly::qnum::b_lambda;
use crate::poly::LaurentPoly;
use crate::symfunc::{to_basis, TargetBasis};

use super::FusionTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrobeniusCheck {
    Assoc,
    Eta,
    Coproduct,
    Symmetries,
}

impl FromStr for FrobeniusCheck {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "assoc" => FrobeniusCheck::Assoc,
            "eta" => FrobeniusCheck::Eta,
            "coproduct" => FrobeniusCheck::Coproduct,
            "symmetries" => FrobeniusCheck::Symmetries,
            other => return Err(Error::Parse(format!("unknown Frobenius check `{}`", other))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct FrobeniusReport {
    pub check: FrobeniusCheck,
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    /// First few witnesses.
    pub failures: Vec<String>,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(witness());
        }
    }
}

impl fmt::Display for FrobeniusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{:?} n={} k={}: {} ({} identities)", self.check, self.n, self.k, status, self.checked)?;
        for w in &self.failures {
            write!(f, "\n  {}", w)?;
        }
        Ok(())
    }
}

/// `b_λ(t) = ∏_{i=1}^{n} (t)_{m_i(λ)}` for an alcove label.
pub fn b_label(lambda: &Partition, _n: usize) -> LaurentPoly {
    b_lambda(lambda.parts())
}

type Rows = HashMap<(Partition, Partition), Vec<(Partition, LaurentPoly)>>;

fn rows(table: &FusionTable) -> Rows {
    let mut r: Rows = HashMap::new();
    for ((mu, nu, l), c) in &table.entries {
        r.entry((mu.clone(), nu.clone())).or_default().push((l.clone(), c.clone()));
    }
    r
}

fn product<'a>(rows: &'a Rows, mu: &Partition, nu: &Partition) -> &'a [(Partition, LaurentPoly)] {
    rows.get(&(mu.clone(), nu.clone())).map_or(&[], |v| v.as_slice())
}

fn add_into(acc: &mut BTreeMap<Partition, LaurentPoly>, l: &Partition, c: &LaurentPoly) {
    let e = acc.entry(l.clone()).or_insert_with(LaurentPoly::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(l);
    }
}

fn check_assoc(table: &FusionTable, rep: &mut FrobeniusReport) {
    let r = rows(table);
    let labels = &table.labels;
    for lam in labels {
        for mu in labels {
            for nu in labels {
                // λ(μν) against (λμ)ν
                let mut left = BTreeMap::new();
                for (rho, c) in product(&r, mu, nu) {
                    for (sigma, x) in product(&r, lam, rho) {
                        add_into(&mut left, sigma, &(c * x));
                    }
                }
                let mut right = BTreeMap::new();
                for (rho, c) in product(&r, lam, mu) {
                    for (sigma, x) in product(&r, nu, rho) {
                        add_into(&mut right, sigma, &(c * x));
                    }
                }
                rep.expect(left == right, || format!("lambda={} mu={} nu={}", lam, mu, nu));
            }
        }
    }
}

fn check_eta(table: &FusionTable, rep: &mut FrobeniusReport) -> Result<()> {
    let a = Alcove::new(table.n, table.k)?;
    let n = table.n;
    for lam in &table.labels {
        for mu in &table.labels {
            for nu in &table.labels {
                // η(λ⊛μ, ν) = η(λ, μ⊛ν) with η(ρ, σ) = δ_{ρσ*}/b_ρ
                let lhs = &table.get(lam, mu, &a.star(nu)?) * &b_label(lam, n);
                let rhs = &table.get(mu, nu, &a.star(lam)?) * &b_label(nu, n);
                rep.expect(lhs == rhs, || format!("lambda={} mu={} nu={}: {} vs {}", lam, mu, nu, lhs, rhs));
            }
        }
    }
    Ok(())
}

fn check_symmetries(table: &FusionTable, rep: &mut FrobeniusReport) -> Result<()> {
    let a = Alcove::new(table.n, table.k)?;
    let n = table.n;
    let unit = Partition::new(&vec![n; table.k])?;
    for lam in &table.labels {
        for mu in &table.labels {
            for nu in &table.labels {
                let x = table.get(mu, nu, lam);
                rep.expect(x == table.get(nu, mu, lam), || format!("commutativity mu={} nu={} lambda={}", mu, nu, lam));
                let starred = table.get(&a.star(mu)?, &a.star(nu)?, &a.star(lam)?);
                rep.expect(x == starred, || format!("star mu={} nu={} lambda={}", mu, nu, lam));
                let cc = &table.get(mu, &a.star(lam)?, &a.star(nu)?) * &b_label(lam, n);
                rep.expect(&x * &b_label(nu, n) == cc, || format!("charge conjugation mu={} nu={} lambda={}", mu, nu, lam));
                let rot = table.get(&a.rot(mu)?, nu, &a.rot(lam)?);
                rep.expect(x == rot, || format!("rotation mu={} nu={} lambda={}", mu, nu, lam));
            }
            let delta = if lam == mu { LaurentPoly::one() } else { LaurentPoly::zero() };
            rep.expect(table.get(mu, &unit, lam) == delta, || format!("unit mu={} lambda={}", mu, lam));
            let delta_star = if *lam == a.star(mu)? { b_label(&unit, n) } else { LaurentPoly::zero() };
            rep.expect(&table.get(lam, mu, &unit) * &b_label(lam, n) == delta_star, || format!("counit lambda={} mu={}", lam, mu));
        }
    }
    Ok(())
}

/// `Σ_d P'_{λ'/d/μ'}` in `n-1` variables expanded in `P'`: the coefficient of
/// `P'_{ν̃'}` must be `N_{μν}^λ` for every alcove label `ν`.
fn check_coproduct(table: &FusionTable, rep: &mut FrobeniusReport) -> Result<()> {
    let (n, k) = (table.n, table.k);
    let a = Alcove::new(n, k)?;
    let vars = n - 1;
    let top = (k * (n - 1)) as i64;
    for lam in &table.labels {
        for mu in &table.labels {
            let mut total = crate::symfunc::SymPoly::zero(vars);
            for d in 0..=(k * n) {
                let shape = CylShape::new(n, k, lam.clone(), d, mu.clone())?;
                let size = shape.box_count();
                if size > top {
                    break;
                }
                if size >= 0 {
                    total = total.add(&cyl_function(CylFunction::PPrimeMac, &shape, vars));
                }
            }
            let exp = to_basis(TargetBasis::PPrime, &total);
            for nu in &table.labels {
                let key = a.reduce(nu)?.conjugate();
                let got = exp.get(&key).cloned().unwrap_or_else(LaurentPoly::zero);
                let want = table.get(mu, nu, lam);
                rep.expect(got == want, || format!("lambda={} mu={} nu={}: skew {} vs N {}", lam, mu, nu, got, want));
            }
        }
    }
    Ok(())
}

/// Run one family of identities against a full table.
pub fn frobenius(check: FrobeniusCheck, table: &FusionTable) -> Result<FrobeniusReport> {
    let mut rep = FrobeniusReport { check, n: table.n, k: table.k, checked: 0, failures: Vec::new() };
    match check {
        FrobeniusCheck::Assoc => check_assoc(table, &mut rep),
        FrobeniusCheck::Eta => check_eta(table, &mut rep)?,
        FrobeniusCheck::Coproduct => check_coproduct(table, &mut rep)?,
        FrobeniusCheck::Symmetries => check_symmetries(table, &mut rep)?,
    }
    Ok(rep)
}
