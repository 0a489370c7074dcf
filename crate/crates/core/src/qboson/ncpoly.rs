//! Noncommutative Schur and Macdonald-type polynomials in the plactic
//! generators, realised as operators on a fixed level.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::{Alcove, Partition};
use crate::poly::LaurentPoly;
use crate::symfunc::basis::{permutations, sign};
use crate::symfunc::{kostka_matrices, straighten_alternant};

use super::ops::{nc_elementary, nc_gprime, Route};
use super::{fock_basis, OpMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NcKind {
    /// `det(e_{λ'_i - i + j})`
    S,
    /// `det(g'_{λ_i - i + j})`
    SPrime,
    QPrime,
    PPrime,
}

impl std::str::FromStr for NcKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "s" => NcKind::S,
            "S'" => NcKind::SPrime,
            "Q'" => NcKind::QPrime,
            "P'" => NcKind::PPrime,
            other => return Err(Error::Parse(format!("unknown noncommutative polynomial `{}`", other))),
        })
    }
}

type Key = (NcKind, Partition, usize, usize);

fn cache() -> &'static Mutex<HashMap<Key, Arc<OpMatrix>>> {
    static C: OnceLock<Mutex<HashMap<Key, Arc<OpMatrix>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(key: Key, build: impl FnOnce() -> OpMatrix) -> Arc<OpMatrix> {
    if let Some(x) = cache().lock().unwrap().get(&key) {
        return x.clone();
    }
    let v = Arc::new(build());
    cache().lock().unwrap().insert(key, v.clone());
    v
}

/// Leibniz expansion of `det(entry(rows_i - i + j))`.
fn determinant(rows: &[usize], n: usize, k: usize, entry: &dyn Fn(usize) -> Arc<OpMatrix>) -> OpMatrix {
    let basis = fock_basis(n, k);
    let l = rows.len();
    let mut acc = OpMatrix::zero(basis.clone(), basis.clone());
    for perm in permutations(l) {
        let mut term = OpMatrix::identity(basis.clone());
        let mut vanished = false;
        for (i, &j) in perm.iter().enumerate() {
            let idx = rows[i] as i64 - i as i64 + j as i64;
            if idx < 0 {
                vanished = true;
                break;
            }
            if idx > 0 {
                term = entry(idx as usize).compose(&term);
                if term.is_zero() {
                    vanished = true;
                    break;
                }
            }
        }
        if vanished {
            continue;
        }
        acc = if sign(&perm) > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Noncommutative Schur polynomial `s_λ` on `F_k`.
pub fn nc_s(lambda: &Partition, n: usize, k: usize) -> Arc<OpMatrix> {
    cached((NcKind::S, lambda.clone(), n, k), || {
        determinant(lambda.conjugate().parts(), n, k, &|r| nc_elementary(r, n, k, Route::Pieri))
    })
}

/// `S'_λ = det(g'_{λ_i - i + j})` on `F_k`.
pub fn nc_s_prime(lambda: &Partition, n: usize, k: usize) -> Arc<OpMatrix> {
    cached((NcKind::SPrime, lambda.clone(), n, k), || {
        determinant(lambda.parts(), n, k, &|r| nc_gprime(r, n, k, Route::Pieri))
    })
}

/// `Q'_λ = Σ_μ K^{-1}_{λ'μ'}(t) S'_μ`.
pub fn nc_q_prime(lambda: &Partition, n: usize, k: usize) -> Arc<OpMatrix> {
    cached((NcKind::QPrime, lambda.clone(), n, k), || {
        let size = lambda.size();
        let km = kostka_matrices(size, size);
        let row = km.index(&lambda.conjugate()).expect("label of the right size");
        let basis = fock_basis(n, k);
        let mut acc = OpMatrix::zero(basis.clone(), basis);
        for (j, mu_c) in km.labels.iter().enumerate() {
            let c = &km.kt_inv[row][j];
            if !c.is_zero() {
                acc = acc.add(&nc_s_prime(&mu_c.conjugate(), n, k).scale(c));
            }
        }
        acc
    })
}

/// Coefficients `c_μ` of `P_ν = Σ_μ c_μ s_μ` from the lowering-operator
/// product `∏_{i<j, ν_i>ν_j} (1 - t L_{ij}) s_ν`, where `L_{ij}` moves one box
/// from row `i` to row `j`.
pub fn lowering_coefficients(nu: &Partition) -> BTreeMap<Partition, LaurentPoly> {
    let len = nu.size().max(nu.len());
    let base: Vec<i64> = nu.padded(len).into_iter().map(|x| x as i64).collect();
    let mut comps: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
    comps.insert(base.clone(), LaurentPoly::one());
    for i in 0..len {
        for j in i + 1..len {
            if base[i] <= base[j] {
                continue;
            }
            let mut next: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
            for (alpha, c) in comps {
                let mut moved = alpha.clone();
                moved[i] -= 1;
                moved[j] += 1;
                *next.entry(alpha).or_insert_with(LaurentPoly::zero) += &c;
                *next.entry(moved).or_insert_with(LaurentPoly::zero) -= &(&c * &LaurentPoly::t());
            }
            next.retain(|_, c| !c.is_zero());
            comps = next;
        }
    }
    let mut out: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    for (alpha, c) in comps {
        let shifted: Vec<i64> = alpha.iter().enumerate().map(|(i, &a)| a + (len - 1 - i) as i64).collect();
        if let Some((s, lam)) = straighten_alternant(&shifted) {
            let e = out.entry(lam).or_insert_with(LaurentPoly::zero);
            if s > 0 {
                *e += &c;
            } else {
                *e -= &c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Q'_λ` through the lowering-operator expansion of `K^{-1}(t)`.
pub fn nc_q_prime_by_lowering(lambda: &Partition, n: usize, k: usize) -> OpMatrix {
    let basis = fock_basis(n, k);
    let mut acc = OpMatrix::zero(basis.clone(), basis);
    for (mu_c, c) in lowering_coefficients(&lambda.conjugate()) {
        acc = acc.add(&nc_s_prime(&mu_c.conjugate(), n, k).scale(&c));
    }
    acc
}

/// `P'_ν = Σ_μ K_{μ,ν'}(t) s_{μ'}`.
pub fn nc_p_prime(nu: &Partition, n: usize, k: usize) -> Arc<OpMatrix> {
    cached((NcKind::PPrime, nu.clone(), n, k), || {
        let size = nu.size();
        let km = kostka_matrices(size, size);
        let col = km.index(&nu.conjugate()).expect("label of the right size");
        let basis = fock_basis(n, k);
        let mut acc = OpMatrix::zero(basis.clone(), basis);
        for (i, mu) in km.labels.iter().enumerate() {
            let c = &km.kt[i][col];
            if !c.is_zero() {
                acc = acc.add(&nc_s(&mu.conjugate(), n, k).scale(c));
            }
        }
        acc
    })
}

/// `Q'_{λ'}` for an unreduced label `λ ∈ A_{k,n}^+`, built from the reduced
/// label (parts equal to `n` removed).
pub fn nc_q_prime_unreduced(lambda: &Partition, n: usize, k: usize) -> Result<Arc<OpMatrix>> {
    let reduced = Alcove::new(n, k)?.reduce(lambda)?;
    Ok(nc_q_prime(&reduced.conjugate(), n, k))
}

/// Dispatch on the polynomial family.
pub fn nc_poly(kind: NcKind, lambda: &Partition, n: usize, k: usize) -> Arc<OpMatrix> {
    match kind {
        NcKind::S => nc_s(lambda, n, k),
        NcKind::SPrime => nc_s_prime(lambda, n, k),
        NcKind::QPrime => nc_q_prime(lambda, n, k),
        NcKind::PPrime => nc_p_prime(lambda, n, k),
    }
}
