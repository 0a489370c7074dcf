//! Bethe roots of the q-boson model at `z = 1`, recovered numerically from
//! the commuting transfer matrices, and the spectral checks built on them.

mod checks;

pub use checks::{idempotent_defect, numeric_verlinde, verify_bethe, verlinde_deviation, BetheReport};

use std::cmp::Ordering;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::LaurentPoly;
use crate::qboson::{fock_basis, nc_gprime, OpMatrix, Route};
use crate::symfunc::{distinct_permutations, hl_p, hl_q, SymPoly};

type C = Complex64;

/// Seed of the random combination of `g'_r` used by [`solve`].
pub const DEFAULT_SEED: u64 = 20_140_917;
const MAX_RETRIES: u64 = 5;
const NEWTON_STEPS: usize = 100;
const COLLISION_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct BetheSolution {
    pub n: usize,
    pub k: usize,
    pub t0: C,
    /// Sorted by argument, then modulus.
    pub roots: Vec<C>,
    /// Unit eigenvector over the alcove labels, phase fixed at `n^k`.
    pub eigvec: Vec<C>,
    /// Per-root defect of the Bethe equations.
    pub residuals: Vec<f64>,
    /// `Σ_λ P_λ(y) Q_λ(y⁻¹)`.
    pub norm2: C,
    /// `P_λ(y)` per label.
    pub p_values: Vec<C>,
    /// `Q_λ(y⁻¹)` per label, the components of the Bethe vector.
    pub q_values: Vec<C>,
    /// False when Newton refinement ran out of steps.
    pub converged: bool,
}

impl BetheSolution {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn inverse_roots(&self) -> Vec<C> {
        self.roots.iter().map(|y| y.inv()).collect()
    }
}

/// All solutions at fixed `n`, `k`, `t0`.
#[derive(Clone, Debug)]
pub struct BetheSet {
    pub n: usize,
    pub k: usize,
    pub t0: C,
    /// Seed that produced a generic combination.
    pub seed: u64,
    pub labels: Vec<Partition>,
    pub solutions: Vec<BetheSolution>,
}

impl BetheSet {
    pub fn to_json(&self) -> serde_json::Value {
        let c = |x: &C| json!([x.re, x.im]);
        let sols: Vec<_> = self
            .solutions
            .iter()
            .map(|s| {
                json!({
                    "roots": s.roots.iter().map(c).collect::<Vec<_>>(),
                    "residuals": s.residuals,
                    "norm2": c(&s.norm2),
                    "converged": s.converged,
                })
            })
            .collect();
        json!({ "n": self.n, "k": self.k, "t0": c(&self.t0), "seed": self.seed, "solutions": sols })
    }
}

/// Dense evaluation of an operator at `z = 1`, `t = t0`.
pub fn dense(op: &OpMatrix, t0: C) -> DMatrix<C> {
    let one = C::new(1.0, 0.0);
    let mut m = DMatrix::zeros(op.codomain.dim(), op.domain.dim());
    for (i, j, v) in op.entries() {
        m[(i, j)] += v.eval_complex(one, t0);
    }
    m
}

/// A symmetric polynomial in the monomial basis evaluated at `x`.
pub fn eval_sym(f: &SymPoly<LaurentPoly>, x: &[C], t0: C) -> C {
    let mut acc = C::new(0.0, 0.0);
    for (lam, c) in f.terms() {
        let mut m = C::new(0.0, 0.0);
        for alpha in distinct_permutations(&lam.padded(x.len())) {
            m += alpha.iter().zip(x).map(|(&a, xi)| xi.powu(a as u32)).product::<C>();
        }
        acc += c.eval_complex(t0) * m;
    }
    acc
}

/// Coefficients `g_0..g_{len-1}` of `∏_i (1 - u y_i t)/(1 - u y_i)`.
pub fn g_series(y: &[C], t0: C, len: usize) -> Vec<C> {
    let one = C::new(1.0, 0.0);
    let mut acc = vec![C::new(0.0, 0.0); len];
    acc[0] = one;
    for &yi in y {
        let mut factor = vec![C::new(0.0, 0.0); len];
        factor[0] = one;
        let mut pw = one;
        for f in factor.iter_mut().skip(1) {
            pw *= yi;
            *f = (one - t0) * pw;
        }
        let mut next = vec![C::new(0.0, 0.0); len];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in factor.iter().enumerate().take(len - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

/// `|y_i^n ∏_{j≠i} (y_i - y_j t)/(y_i - y_j) - ∏_{j≠i} (y_i t - y_j)/(y_i - y_j)|`.
pub fn bae_residuals(y: &[C], n: usize, t0: C) -> Vec<f64> {
    (0..y.len())
        .map(|i| {
            let mut lhs = y[i].powu(n as u32);
            let mut rhs = C::new(1.0, 0.0);
            for (j, yj) in y.iter().enumerate() {
                if j != i {
                    let d = y[i] - yj;
                    lhs *= (y[i] - yj * t0) / d;
                    rhs *= (y[i] * t0 - yj) / d;
                }
            }
            (lhs - rhs).norm()
        })
        .collect()
}

/// Cleared-denominator form of the Bethe equations and its Jacobian.
fn bae_system(y: &[C], n: usize, t: C) -> (DVector<C>, DMatrix<C>) {
    let k = y.len();
    let mut f = DVector::zeros(k);
    let mut jac = DMatrix::zeros(k, k);
    for i in 0..k {
        let others: Vec<usize> = (0..k).filter(|&j| j != i).collect();
        let a: Vec<C> = others.iter().map(|&j| y[i] - t * y[j]).collect();
        let b: Vec<C> = others.iter().map(|&j| t * y[i] - y[j]).collect();
        let yn = y[i].powu(n as u32);
        f[i] = yn * a.iter().product::<C>() - b.iter().product::<C>();
        let mut diag = C::new(n as f64, 0.0) * y[i].powu(n as u32 - 1) * a.iter().product::<C>();
        for (s, &j) in others.iter().enumerate() {
            let rest_a: C = a.iter().enumerate().filter(|(l, _)| *l != s).map(|(_, v)| v).product();
            let rest_b: C = b.iter().enumerate().filter(|(l, _)| *l != s).map(|(_, v)| v).product();
            diag += yn * rest_a - t * rest_b;
            jac[(i, j)] = -yn * t * rest_a + rest_b;
        }
        jac[(i, i)] = diag;
    }
    (f, jac)
}

fn newton(y: &mut [C], n: usize, t0: C) -> bool {
    for _ in 0..NEWTON_STEPS {
        let (f, jac) = bae_system(y, n, t0);
        let Some(delta) = jac.lu().solve(&(-f)) else {
            return false;
        };
        for (yi, d) in y.iter_mut().zip(delta.iter()) {
            *yi += d;
        }
        let size = 1.0 + y.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if delta.norm() <= 1e-13 * size {
            return true;
        }
    }
    false
}

fn eigenvalues(m: DMatrix<C>) -> Result<Vec<C>> {
    let ev = m.schur().eigenvalues().ok_or_else(|| Error::Numerical("Schur decomposition failed".into()))?;
    Ok(ev.iter().copied().collect())
}

/// Roots of `Σ_r e_r u^r = ∏ (1 + u y_i)` as the `y_i`.
fn roots_from_elementary(e: &[C]) -> Result<Vec<C>> {
    let k = e.len();
    if k == 1 {
        return Ok(vec![e[0]]);
    }
    // monic x^k + a_{k-1} x^{k-1} + ... + a_0 with a_{k-r} = (-1)^r e_r
    let mut comp = DMatrix::<C>::zeros(k, k);
    for i in 1..k {
        comp[(i, i - 1)] = C::new(1.0, 0.0);
    }
    for (r, er) in e.iter().enumerate() {
        let sign = if (r + 1) % 2 == 0 { 1.0 } else { -1.0 };
        comp[(k - 1 - r, k - 1)] = -(er * sign);
    }
    eigenvalues(comp)
}

fn root_key(y: &C) -> (f64, f64) {
    let im = if y.im.abs() < 1e-12 * y.norm() { 0.0 } else { y.im };
    (im.atan2(y.re), y.norm())
}

fn cmp_roots(a: &[C], b: &[C]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let (kx, ky) = (root_key(x), root_key(y));
        let o = kx.0.total_cmp(&ky.0).then(kx.1.total_cmp(&ky.1));
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

fn rayleigh(m: &DMatrix<C>, v: &DVector<C>) -> C {
    v.dotc(&(m * v)) / v.dotc(v)
}

/// `P_λ(y)` and `Q_λ(y⁻¹)` for every label.
pub fn hl_values(labels: &[Partition], roots: &[C], t0: C) -> (Vec<C>, Vec<C>) {
    let k = roots.len();
    let inv: Vec<C> = roots.iter().map(|y| y.inv()).collect();
    let p = labels.iter().map(|l| eval_sym(&hl_p(l, k), roots, t0)).collect();
    let q = labels.iter().map(|l| eval_sym(&hl_q(l, k), &inv, t0)).collect();
    (p, q)
}

fn attempt(n: usize, k: usize, t0: C, seed: u64, gens: &[DMatrix<C>], labels: &[Partition]) -> Result<Vec<BetheSolution>> {
    let dim = labels.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comb = DMatrix::<C>::zeros(dim, dim);
    for g in gens {
        let c = C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        comb += g.map(|x| x * c);
    }
    let eig = eigenvalues(comb.clone())?;
    let scale = 1.0 + eig.iter().map(|x| x.norm()).fold(0.0, f64::max);
    for i in 0..dim {
        for j in 0..i {
            if (eig[i] - eig[j]).norm() < COLLISION_TOL * scale {
                return Err(Error::Numerical(format!("eigenvalue collision at seed {}", seed)));
            }
        }
    }
    let top = Partition::new(&vec![n; k])?;
    let top_idx = labels.iter().position(|l| *l == top).expect("n^k is a label");
    let sols: Vec<Result<BetheSolution>> = eig
        .par_iter()
        .map(|&lam| {
            let shifted = &comb - DMatrix::<C>::identity(dim, dim).map(|x| x * lam);
            let svd = shifted.svd(false, true);
            let vt = svd.v_t.ok_or_else(|| Error::Numerical("SVD failed".into()))?;
            let (idx, _) = svd.singular_values.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).expect("nonempty");
            let mut v: DVector<C> = vt.row(idx).adjoint();
            let e: Vec<C> = gens.iter().map(|g| rayleigh(g, &v)).collect();
            let mut roots = roots_from_elementary(&e)?;
            let converged = newton(&mut roots, n, t0);
            roots.sort_by(|a, b| cmp_roots(std::slice::from_ref(a), std::slice::from_ref(b)));
            if roots.iter().any(|y| y.norm() < 1e-300) {
                return Err(Error::Numerical("vanishing Bethe root".into()));
            }
            let pivot = v[top_idx];
            v *= pivot.conj() / (pivot.norm() * v.norm());
            let (p_values, q_values) = hl_values(labels, &roots, t0);
            let norm2 = p_values.iter().zip(&q_values).map(|(p, q)| p * q).sum();
            Ok(BetheSolution {
                n,
                k,
                t0,
                residuals: bae_residuals(&roots, n, t0),
                roots,
                eigvec: v.iter().copied().collect(),
                norm2,
                p_values,
                q_values,
                converged,
            })
        })
        .collect();
    let mut sols = sols.into_iter().collect::<Result<Vec<_>>>()?;
    sols.sort_by(|a, b| cmp_roots(&a.roots, &b.roots));
    for i in 0..sols.len() {
        for j in 0..i {
            let gap = sols[i].roots.iter().zip(&sols[j].roots).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            if gap < COLLISION_TOL {
                return Err(Error::Numerical(format!("two eigenvectors share Bethe roots at seed {}", seed)));
            }
        }
    }
    Ok(sols)
}

/// Solve with [`DEFAULT_SEED`].
pub fn solve(n: usize, k: usize, t0: C) -> Result<BetheSet> {
    solve_seeded(n, k, t0, DEFAULT_SEED)
}

/// Diagonalize a random combination of `g'_1..g'_k`, read off `e_r(y)` per
/// eigenvector and refine the roots on the Bethe equations. A degenerate
/// combination is retried with the next seed.
pub fn solve_seeded(n: usize, k: usize, t0: C, seed: u64) -> Result<BetheSet> {
    if n < 3 || k < 1 {
        return Err(Error::Invalid(format!("Bethe solver needs n >= 3 and k >= 1, got n={} k={}", n, k)));
    }
    let basis = fock_basis(n, k);
    let gens: Vec<DMatrix<C>> = (1..=k).map(|r| dense(&nc_gprime(r, n, k, Route::Pieri), t0)).collect();
    let mut last = String::new();
    for s in seed..=seed + MAX_RETRIES {
        match attempt(n, k, t0, s, &gens, &basis.labels) {
            Ok(solutions) => return Ok(BetheSet { n, k, t0, seed: s, labels: basis.labels.clone(), solutions }),
            Err(Error::Numerical(m)) => last = m,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Numerical(format!("no generic combination after {} retries: {}", MAX_RETRIES, last)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_roots_of_unity() {
        let set = solve(3, 1, C::new(0.25, 0.0)).unwrap();
        assert_eq!(set.solutions.len(), 3);
        for s in &set.solutions {
            assert_eq!(s.roots.len(), 1);
            assert!((s.roots[0].powu(3) - 1.0).norm() < 1e-12);
        }
        let args: Vec<f64> = set.solutions.iter().map(|s| root_key(&s.roots[0]).0).collect();
        assert!(args.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn residuals_small() {
        let set = solve(3, 2, C::new(0.25, 0.0)).unwrap();
        assert_eq!(set.solutions.len(), 6);
        for s in &set.solutions {
            assert!(s.converged);
            assert!(s.max_residual() < 1e-9, "{:?}", s.residuals);
        }
    }

    #[test]
    fn g_series_single_root() {
        let y = [C::new(0.5, 0.0)];
        let g = g_series(&y, C::new(0.25, 0.0), 4);
        assert!((g[2] - C::new(0.75 * 0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn small_n_rejected() {
        assert!(matches!(solve(2, 1, C::new(0.25, 0.0)), Err(Error::Invalid(_))));
    }
}
