//! Identities the Bethe solutions must satisfy, and the numeric Verlinde
//! reconstruction of the fusion table.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::fusion::{b_label, FusionRoute, FusionTable};
use crate::partition::{Alcove, Partition};
use crate::qboson::{nc_elementary, Route};

use super::{dense, g_series, hl_values, solve, BetheSet};

type C = Complex64;

pub const RESIDUAL_TOL: f64 = 1e-9;
pub const CHECK_TOL: f64 = 1e-8;
pub const EIGVEC_TOL: f64 = 1e-7;

/// Maximum defects per identity over all solutions.
#[derive(Clone, Debug, Serialize)]
pub struct BetheReport {
    pub n: usize,
    pub k: usize,
    pub t0: [f64; 2],
    pub seed: u64,
    pub count: usize,
    pub expected: usize,
    /// Solutions whose Newton refinement did not settle.
    pub flagged: usize,
    pub max_residual: f64,
    pub gbae: f64,
    pub baecc: f64,
    /// Relative off-diagonal Gram entries.
    pub gram_offdiag: f64,
    pub dual_r: f64,
    /// Distance of the numeric eigenvector from the span of `Q_λ(y⁻¹)`.
    pub eigvec: f64,
    pub transfer: f64,
    pub hamiltonians: f64,
    /// `S S⁻¹ - 1`.
    pub inverse: f64,
    pub unit_row: f64,
    /// Skipped unless `t0` is real.
    pub conjugation: Option<f64>,
}

impl BetheReport {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.count != self.expected {
            out.push(format!("count {} != {}", self.count, self.expected));
        }
        if self.flagged > 0 {
            out.push(format!("{} unconverged solutions", self.flagged));
        }
        let mut check = |name: &str, v: f64, tol: f64| {
            if v.is_nan() || v >= tol {
                out.push(format!("{} {:.3e} >= {:.0e}", name, v, tol));
            }
        };
        check("residual", self.max_residual, RESIDUAL_TOL);
        check("gbae", self.gbae, CHECK_TOL);
        check("baecc", self.baecc, RESIDUAL_TOL);
        check("gram", self.gram_offdiag, CHECK_TOL);
        check("dualR", self.dual_r, CHECK_TOL);
        check("eigenvector", self.eigvec, EIGVEC_TOL);
        check("transfer", self.transfer, CHECK_TOL);
        check("hamiltonians", self.hamiltonians, CHECK_TOL);
        check("inverse", self.inverse, CHECK_TOL);
        check("unit row", self.unit_row, CHECK_TOL);
        if let Some(c) = self.conjugation {
            check("conjugation", c, CHECK_TOL);
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

fn rel(a: C, b: C) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn is_real(t0: C) -> bool {
    t0.im.abs() <= 1e-15 * (1.0 + t0.re.abs())
}

/// Run every check on a full solution set.
pub fn verify_bethe(set: &BetheSet) -> Result<BetheReport> {
    let (n, k, t0) = (set.n, set.k, set.t0);
    let a = Alcove::new(n, k)?;
    let labels = &set.labels;
    let dim = labels.len();
    let sols = &set.solutions;
    let one = C::new(1.0, 0.0);
    let top = Partition::new(&vec![n; k])?;
    let top_idx = labels.iter().position(|l| *l == top).expect("n^k is a label");
    let star_idx: Vec<usize> =
        labels.iter().map(|l| a.star(l).map(|s| labels.iter().position(|x| *x == s).expect("star in alcove"))).collect::<Result<_>>()?;
    let b_vals: Vec<C> = labels.iter().map(|l| b_label(l, n).eval_complex(t0)).collect();
    let elem: Vec<DMatrix<C>> = (0..=n).map(|r| dense(&nc_elementary(r, n, k, Route::Pieri), t0)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(set.seed);
    let us: Vec<C> = (0..5).map(|_| C::from_polar(rng.gen_range(0.1..0.4), rng.gen_range(-3.0..3.0))).collect();

    let mut rep = BetheReport {
        n,
        k,
        t0: [t0.re, t0.im],
        seed: set.seed,
        count: sols.len(),
        expected: binomial(n + k - 1, k),
        flagged: sols.iter().filter(|s| !s.converged).count(),
        max_residual: sols.iter().map(|s| s.max_residual()).fold(0.0, f64::max),
        gbae: 0.0,
        baecc: 0.0,
        gram_offdiag: 0.0,
        dual_r: 0.0,
        eigvec: 0.0,
        transfer: 0.0,
        hamiltonians: 0.0,
        inverse: 0.0,
        unit_row: 0.0,
        conjugation: None,
    };
    let tk = t0.powu(k as u32);
    for s in sols {
        let inv = s.inverse_roots();
        let len = n + k + 1;
        let g = g_series(&s.roots, t0, len);
        let g_inv_t = g_series(&s.roots, t0.inv(), len);
        let g_of_inv = g_series(&inv, t0, len);
        rep.gbae = rep.gbae.max(rel(g[n], one - tk));
        for r in 1..=k {
            rep.gbae = rep.gbae.max((g[n + r] + tk * g_inv_t[r]).norm() / (1.0 + g[n + r].norm()));
        }
        for r in 1..n {
            rep.baecc = rep.baecc.max(rel(g[n - r], g_of_inv[r]));
        }

        // P_λ(y) against P_{λ*}(y⁻¹)
        let (p_inv, _) = hl_values(labels, &inv, t0);
        for (i, &j) in star_idx.iter().enumerate() {
            rep.dual_r = rep.dual_r.max(rel(s.p_values[i], p_inv[j]));
        }

        let v = DVector::from_column_slice(&s.eigvec);
        let w = DVector::from_column_slice(&s.q_values);
        let c = w.dotc(&v) / w.dotc(&w);
        rep.eigvec = rep.eigvec.max((&v - &w * c).norm() / v.norm());

        let vv = v.dotc(&v);
        let ray = |m: &DMatrix<C>| v.dotc(&(m * &v)) / vv;
        for &u in &us {
            let mut eu = DMatrix::<C>::zeros(dim, dim);
            for (r, m) in elem.iter().enumerate() {
                eu += m.map(|x| x * u.powu(r as u32));
            }
            let mut first = one;
            let mut second = one;
            for y in &s.roots {
                first *= (one - u * y * t0) / (one - u * y);
                second *= (one - u * y / t0) / (one - u * y);
            }
            let want = first + tk * u.powu(n as u32) * second;
            rep.transfer = rep.transfer.max(rel(ray(&eu), want));
        }
        for r in 1..=n / 2 {
            let plus = ray(&(&elem[r] + &elem[n - r]));
            let minus = ray(&(&elem[r] - &elem[n - r]));
            rep.hamiltonians = rep.hamiltonians.max(rel(plus, g[r] + g_of_inv[r]));
            rep.hamiltonians = rep.hamiltonians.max(rel(minus, g[r] - g_of_inv[r]));
        }
        rep.unit_row = rep.unit_row.max(rel(s.p_values[top_idx], one));
    }

    for (i, si) in sols.iter().enumerate() {
        for (j, sj) in sols.iter().enumerate() {
            if i != j {
                let gram: C = si.p_values.iter().zip(&sj.q_values).map(|(p, q)| p * q).sum();
                rep.gram_offdiag = rep.gram_offdiag.max(gram.norm() / (si.norm2.norm() * sj.norm2.norm()).sqrt());
            }
        }
    }
    for lam in 0..dim {
        for mu in 0..dim {
            let x: C = sols.iter().map(|s| s.p_values[lam] * s.q_values[mu] / s.norm2).sum();
            let want = if lam == mu { one } else { C::new(0.0, 0.0) };
            rep.inverse = rep.inverse.max((x - want).norm());
        }
    }
    if is_real(t0) {
        let mut worst: f64 = 0.0;
        for s in sols {
            let nb = s.norm2.sqrt();
            for lam in 0..dim {
                let s_inv = s.q_values[lam] / nb;
                let s_fwd = s.p_values[lam] / nb;
                worst = worst.max(rel(s_inv, b_vals[lam] * s_fwd.conj()));
                worst = worst.max(rel(s_inv, b_vals[lam] * s.p_values[star_idx[lam]] / nb));
            }
        }
        rep.conjugation = Some(worst);
    }
    Ok(rep)
}

fn index_of(labels: &[Partition], l: &Partition) -> usize {
    labels.iter().position(|x| x == l).expect("table label in alcove")
}

/// `N[μ][ν][λ]` at `t0`, flattened.
fn table_at(table: &FusionTable, labels: &[Partition], t0: C) -> Vec<C> {
    let dim = labels.len();
    let mut out = vec![C::new(0.0, 0.0); dim * dim * dim];
    for ((mu, nu, l), c) in &table.entries {
        let (i, j, m) = (index_of(labels, mu), index_of(labels, nu), index_of(labels, l));
        out[(i * dim + j) * dim + m] = c.eval_complex(t0);
    }
    out
}

/// Max deviation of `Σ_σ P_μ(y_σ) P_ν(y_σ) Q_λ(y_σ⁻¹)/‖b_σ‖²` from the exact table.
pub fn verlinde_deviation(set: &BetheSet, table: &FusionTable) -> f64 {
    let dim = set.labels.len();
    let exact = table_at(table, &set.labels, set.t0);
    let mut worst: f64 = 0.0;
    for mu in 0..dim {
        for nu in 0..dim {
            for lam in 0..dim {
                let x: C = set
                    .solutions
                    .iter()
                    .map(|s| s.p_values[mu] * s.p_values[nu] * s.q_values[lam] / s.norm2)
                    .sum();
                worst = worst.max((x - exact[(mu * dim + nu) * dim + lam]).norm());
            }
        }
    }
    worst
}

/// Solve, build the exact table and compare.
pub fn numeric_verlinde(n: usize, k: usize, t0: C) -> Result<f64> {
    let set = solve(n, k, t0)?;
    let table = FusionTable::build(n, k, FusionRoute::Matrix)?;
    Ok(verlinde_deviation(&set, &table))
}

/// Max defect of `e_ρ ⊛ e_σ = δ_{ρσ} e_ρ` and `Σ_ρ e_ρ = |n^k⟩` for the
/// normalised Bethe vectors `e_ρ = b(y_ρ)/‖b_ρ‖²`.
pub fn idempotent_defect(set: &BetheSet, table: &FusionTable) -> f64 {
    let dim = set.labels.len();
    let exact = table_at(table, &set.labels, set.t0);
    let idem: Vec<Vec<C>> = set.solutions.iter().map(|s| s.q_values.iter().map(|q| q / s.norm2).collect()).collect();
    let mut worst: f64 = 0.0;
    for (r, er) in idem.iter().enumerate() {
        for (s, es) in idem.iter().enumerate() {
            for lam in 0..dim {
                let mut x = C::new(0.0, 0.0);
                for mu in 0..dim {
                    for nu in 0..dim {
                        x += er[mu] * es[nu] * exact[(mu * dim + nu) * dim + lam];
                    }
                }
                let want = if r == s { er[lam] } else { C::new(0.0, 0.0) };
                worst = worst.max((x - want).norm());
            }
        }
    }
    let top = Partition::new(&vec![set.n; set.k]).expect("n^k");
    for lam in 0..dim {
        let x: C = idem.iter().map(|e| e[lam]).sum();
        let want = if set.labels[lam] == top { 1.0 } else { 0.0 };
        worst = worst.max((x - want).norm());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_two_checks() {
        let set = solve(3, 2, C::new(0.25, 0.0)).unwrap();
        let rep = verify_bethe(&set).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures());
        assert!(rep.conjugation.is_some());
    }

    #[test]
    fn complex_t_skips_conjugation() {
        let set = solve(3, 1, C::new(0.2, 0.1)).unwrap();
        let rep = verify_bethe(&set).unwrap();
        assert!(rep.conjugation.is_none());
        assert!(rep.passed(), "{:?}", rep.failures());
    }
}
