//! Named bases, basis changes and Kostka matrices.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::qnum::{b_lambda, pochhammer};
use crate::poly::{LaurentPoly, RationalFn, Ring};

use super::tableau::{chain_sum, skew_poly, skew_poly_rational, StripKind};
use super::SymPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    M,
    E,
    H,
    S,
    /// `g_λ = g_{λ_1} g_{λ_2} ...` with `g_r = Q_{(r)}`.
    G,
    /// `g'_λ` with `g'_r = Σ_{μ ⊢ r} m_μ / (t)_μ`.
    GPrime,
    P,
    Q,
    PPrime,
    QPrime,
    /// `det(g_{λ_i - i + j})`
    BigS,
    /// `det(g'_{λ_i - i + j})`
    BigSPrime,
}

impl std::str::FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "m" => BasisKind::M,
            "e" => BasisKind::E,
            "h" => BasisKind::H,
            "s" => BasisKind::S,
            "g" => BasisKind::G,
            "g'" => BasisKind::GPrime,
            "P" => BasisKind::P,
            "Q" => BasisKind::Q,
            "P'" => BasisKind::PPrime,
            "Q'" => BasisKind::QPrime,
            "S" => BasisKind::BigS,
            "S'" => BasisKind::BigSPrime,
            other => return Err(Error::Parse(format!("unknown basis `{}`", other))),
        })
    }
}

type Key = (u8, Partition, usize);

fn cache() -> &'static Mutex<HashMap<Key, Arc<SymPoly<LaurentPoly>>>> {
    static C: OnceLock<Mutex<HashMap<Key, Arc<SymPoly<LaurentPoly>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(tag: u8, lambda: &Partition, v: usize, build: impl FnOnce() -> SymPoly<LaurentPoly>) -> Arc<SymPoly<LaurentPoly>> {
    let key = (tag, lambda.clone(), v);
    if let Some(x) = cache().lock().unwrap().get(&key) {
        return x.clone();
    }
    let val = Arc::new(build());
    cache().lock().unwrap().insert(key, val.clone());
    val
}

/// Schur polynomial via semistandard tableaux.
pub fn schur(lambda: &Partition, v: usize) -> Arc<SymPoly<LaurentPoly>> {
    cached(0, lambda, v, || {
        let mut out = SymPoly::zero(v);
        if lambda.len() > v {
            return out;
        }
        for nu in partitions_of(lambda.size(), v, lambda.size()) {
            let c = chain_sum::<LaurentPoly>(lambda, &Partition::empty(), nu.parts(), &|a, b| {
                if a.is_horizontal_strip_over(b) { LaurentPoly::one() } else { LaurentPoly::zero() }
            });
            out.add_term(nu, &c);
        }
        out
    })
}

/// Hall-Littlewood `P_λ` via ψ-weighted tableaux.
pub fn hl_p(lambda: &Partition, v: usize) -> Arc<SymPoly<LaurentPoly>> {
    cached(1, lambda, v, || {
        if lambda.len() > v {
            return SymPoly::zero(v);
        }
        skew_poly(StripKind::Psi, lambda, &Partition::empty(), v)
    })
}

/// Hall-Littlewood `Q_λ` via φ-weighted tableaux.
pub fn hl_q(lambda: &Partition, v: usize) -> Arc<SymPoly<LaurentPoly>> {
    cached(2, lambda, v, || {
        if lambda.len() > v {
            return SymPoly::zero(v);
        }
        skew_poly(StripKind::Phi, lambda, &Partition::empty(), v)
    })
}

/// `P'_λ` (the `t = 0` Macdonald polynomial in the variable `t`).
pub fn mac_p_prime(lambda: &Partition, v: usize) -> Arc<SymPoly<LaurentPoly>> {
    cached(3, lambda, v, || {
        if lambda.len() > v {
            return SymPoly::zero(v);
        }
        skew_poly(StripKind::PsiPrime, lambda, &Partition::empty(), v)
    })
}

fn e_r(r: usize, v: usize) -> SymPoly<LaurentPoly> {
    SymPoly::monomial(Partition::column(r), v)
}

fn h_r(r: usize, v: usize) -> SymPoly<LaurentPoly> {
    let mut out = SymPoly::zero(v);
    for nu in partitions_of(r, v, r) {
        out.add_term(nu, &LaurentPoly::one());
    }
    out
}

fn g_prime_r(r: usize, v: usize) -> SymPoly<RationalFn> {
    let mut out = SymPoly::zero(v);
    for nu in partitions_of(r, v, r) {
        let den: LaurentPoly = nu.parts().iter().map(|&x| pochhammer(x)).product();
        out.add_term(nu, &RationalFn::new(LaurentPoly::one(), den));
    }
    out
}

fn product_of<C: Ring>(parts: &[usize], v: usize, one_row: &dyn Fn(usize) -> SymPoly<C>) -> SymPoly<C> {
    let mut acc = SymPoly::one(v);
    for &r in parts {
        acc = acc.mul(&one_row(r));
    }
    acc
}

/// Leibniz expansion of `det(f(λ_i - i + j))` with `f(0) = 1`, `f(<0) = 0`.
pub fn jacobi_trudi<C: Ring>(lambda: &Partition, v: usize, one_row: &dyn Fn(usize) -> SymPoly<C>) -> SymPoly<C> {
    let l = lambda.len();
    let mut rows: HashMap<i64, SymPoly<C>> = HashMap::new();
    let mut get = |r: i64| -> Option<SymPoly<C>> {
        if r < 0 {
            return None;
        }
        if r == 0 {
            return Some(SymPoly::one(v));
        }
        Some(rows.entry(r).or_insert_with(|| one_row(r as usize)).clone())
    };
    let mut total = SymPoly::zero(v);
    for perm in permutations(l) {
        let mut term = SymPoly::one(v);
        let mut ok = true;
        for (i, &j) in perm.iter().enumerate() {
            match get(lambda.part(i) as i64 - i as i64 + j as i64) {
                Some(f) => term = term.mul(&f),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            if sign(&perm) < 0 {
                term = term.scale(&C::one().neg());
            }
            total = total.add(&term);
        }
    }
    total
}

pub(crate) fn permutations(l: usize) -> Vec<Vec<usize>> {
    let v: Vec<usize> = (0..l).collect();
    super::distinct_permutations(&v)
}

pub(crate) fn sign(perm: &[usize]) -> i32 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                s = -s;
            }
        }
    }
    s
}

fn to_rational(p: &SymPoly<LaurentPoly>) -> SymPoly<RationalFn> {
    p.map(|c| RationalFn::from(c.clone()))
}

/// Monomial expansion of a basis element in `v` variables.
pub fn basis_poly(kind: BasisKind, lambda: &Partition, v: usize) -> SymPoly<RationalFn> {
    match kind {
        BasisKind::M => SymPoly::monomial(lambda.clone(), v),
        BasisKind::E => to_rational(&product_of(lambda.parts(), v, &|r| e_r(r, v))),
        BasisKind::H => to_rational(&product_of(lambda.parts(), v, &|r| h_r(r, v))),
        BasisKind::S => to_rational(&schur(lambda, v)),
        BasisKind::G => to_rational(&product_of(lambda.parts(), v, &|r| (*hl_q(&Partition::row(r), v)).clone())),
        BasisKind::GPrime => product_of(lambda.parts(), v, &|r| g_prime_r(r, v)),
        BasisKind::P => to_rational(&hl_p(lambda, v)),
        BasisKind::Q => to_rational(&hl_q(lambda, v)),
        BasisKind::PPrime => to_rational(&mac_p_prime(lambda, v)),
        BasisKind::QPrime => {
            if lambda.len() > v {
                return SymPoly::zero(v);
            }
            skew_poly_rational(StripKind::PhiPrime, lambda, &Partition::empty(), v)
        }
        BasisKind::BigS => to_rational(&jacobi_trudi(lambda, v, &|r| (*hl_q(&Partition::row(r), v)).clone())),
        BasisKind::BigSPrime => jacobi_trudi(lambda, v, &|r| g_prime_r(r, v)),
    }
}

/// Targets for [`to_basis`]; each is unitriangular against `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetBasis {
    M,
    S,
    P,
    PPrime,
}

fn target_element(kind: TargetBasis, lambda: &Partition, v: usize) -> Arc<SymPoly<LaurentPoly>> {
    match kind {
        TargetBasis::M => Arc::new(SymPoly::monomial(lambda.clone(), v)),
        TargetBasis::S => schur(lambda, v),
        TargetBasis::P => hl_p(lambda, v),
        TargetBasis::PPrime => mac_p_prime(lambda, v),
    }
}

/// Expand `p` in a unitriangular basis by repeatedly eliminating the
/// lexicographically largest monomial.
pub fn to_basis<C: Ring>(kind: TargetBasis, p: &SymPoly<C>) -> BTreeMap<Partition, C> {
    let v = p.nvars();
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    loop {
        let Some((lead, c)) = rest.terms().next_back().map(|(l, c)| (l.clone(), c.clone())) else { break };
        let elem = target_element(kind, &lead, v);
        debug_assert!(elem.coeff(&lead).is_one());
        let mut sub = SymPoly::<C>::zero(v);
        for (mu, x) in elem.terms() {
            sub.add_term(mu.clone(), &c.mul(&C::from(x.clone())));
        }
        rest = rest.sub(&sub);
        debug_assert!(rest.coeff(&lead).is_zero());
        out.insert(lead, c);
    }
    out
}

/// Transition matrices between Schur and Hall-Littlewood bases for partitions
/// of a fixed size with at most `v` parts, indexed in decreasing lex order.
#[derive(Clone, Debug)]
pub struct KostkaMatrices {
    pub labels: Vec<Partition>,
    /// `K[λ][μ]` classical Kostka numbers.
    pub k: Vec<Vec<i64>>,
    /// `K(t)[λ][μ]`: `s_λ = Σ_μ K_{λμ}(t) P_μ`.
    pub kt: Vec<Vec<LaurentPoly>>,
    pub kt_inv: Vec<Vec<LaurentPoly>>,
    pub k_inv: Vec<Vec<i64>>,
}

impl KostkaMatrices {
    pub fn index(&self, lambda: &Partition) -> Option<usize> {
        self.labels.iter().position(|x| x == lambda)
    }

    pub fn kt_entry(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        match (self.index(lambda), self.index(mu)) {
            (Some(i), Some(j)) => self.kt[i][j].clone(),
            _ => LaurentPoly::zero(),
        }
    }

    pub fn kt_inv_entry(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        match (self.index(lambda), self.index(mu)) {
            (Some(i), Some(j)) => self.kt_inv[i][j].clone(),
            _ => LaurentPoly::zero(),
        }
    }
}

fn unitriangular_inverse(m: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    // upper unitriangular in the given ordering: m[i][j] = 0 for j < i
    let n = m.len();
    let mut inv = vec![vec![LaurentPoly::zero(); n]; n];
    for i in (0..n).rev() {
        inv[i][i] = LaurentPoly::one();
        for j in i + 1..n {
            let mut acc = LaurentPoly::zero();
            for l in i + 1..=j {
                acc += &(&m[i][l] * &inv[l][j]);
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

fn kostka_cache() -> &'static Mutex<HashMap<(usize, usize), Arc<KostkaMatrices>>> {
    static C: OnceLock<Mutex<HashMap<(usize, usize), Arc<KostkaMatrices>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn kostka_matrices(size: usize, v: usize) -> Arc<KostkaMatrices> {
    if let Some(x) = kostka_cache().lock().unwrap().get(&(size, v)) {
        return x.clone();
    }
    let labels = partitions_of(size, v, size);
    let rows: Vec<Vec<LaurentPoly>> = labels
        .par_iter()
        .map(|lam| {
            let exp = to_basis(TargetBasis::P, &*schur(lam, v));
            labels.iter().map(|mu| exp.get(mu).cloned().unwrap_or_else(LaurentPoly::zero)).collect()
        })
        .collect();
    let kt_inv = unitriangular_inverse(&rows);
    let k: Vec<Vec<i64>> = labels
        .iter()
        .map(|lam| {
            let s = schur(lam, v);
            labels.iter().map(|mu| s.coeff(mu).coeff_i64(0).unwrap_or(0)).collect()
        })
        .collect();
    let k_poly: Vec<Vec<LaurentPoly>> = k.iter().map(|r| r.iter().map(|&x| LaurentPoly::constant(x)).collect()).collect();
    let k_inv = unitriangular_inverse(&k_poly).iter().map(|r| r.iter().map(|x| x.coeff_i64(0).unwrap()).collect()).collect();
    let km = Arc::new(KostkaMatrices { labels, k, kt: rows, kt_inv, k_inv });
    kostka_cache().lock().unwrap().insert((size, v), km.clone());
    km
}

/// `Q_λ = b_λ P_λ` check helper.
pub fn b_times_p(lambda: &Partition, v: usize) -> SymPoly<LaurentPoly> {
    hl_p(lambda, v).scale(&b_lambda(lambda.parts()))
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
    fn one_column_p_is_elementary() {
        for r in 1..5 {
            let pr = hl_p(&Partition::column(r), 5);
            assert_eq!(*pr, e_r(r, 5));
        }
    }

    #[test]
    fn small_expansions() {
        let p2 = hl_p(&p("2"), 3);
        assert_eq!(p2.coeff(&p("2")), LaurentPoly::one());
        assert_eq!(p2.coeff(&p("1,1")), lp("1 - t"));
        let g2 = basis_poly(BasisKind::G, &p("2"), 2);
        assert_eq!(g2.coeff(&p("2")), lp("1 - t").into());
        assert_eq!(g2.coeff(&p("1,1")), lp("1 - 2*t + t^2").into());
        let gp1 = basis_poly(BasisKind::GPrime, &p("1"), 3);
        assert_eq!(gp1.coeff(&p("1")), RationalFn::new(LaurentPoly::one(), lp("1 - t")));
        let s2 = to_basis(TargetBasis::P, &*schur(&p("2"), 2));
        assert_eq!(s2[&p("2")], LaurentPoly::one());
        assert_eq!(s2[&p("1,1")], LaurentPoly::t());
        let m1 = to_basis(TargetBasis::S, &SymPoly::<LaurentPoly>::monomial(p("1"), 3));
        assert_eq!(m1.len(), 1);
    }

    #[test]
    fn p1_squared_in_p_basis() {
        let p1 = hl_p(&p("1"), 2);
        let sq = to_basis(TargetBasis::P, &p1.mul(&p1));
        assert_eq!(sq[&p("2")], LaurentPoly::one());
        assert_eq!(sq[&p("1,1")], lp("1 + t"));
    }

    #[test]
    fn kostka_matrix_entries() {
        let km = kostka_matrices(3, 3);
        assert_eq!(km.k[km.index(&p("2,1")).unwrap()][km.index(&p("1,1,1")).unwrap()], 2);
        let km2 = kostka_matrices(2, 2);
        assert_eq!(km2.kt_entry(&p("2"), &p("1,1")), LaurentPoly::t());
        for row in &kostka_matrices(6, 6).kt_inv {
            for x in row {
                assert!(x.is_polynomial());
            }
        }
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        for size in 1..=6 {
            for lam in partitions_of(size, 4, size) {
                let conj = lam.conjugate();
                let jt = jacobi_trudi(&conj, 4, &|r| e_r(r, 4));
                assert_eq!(jt, *schur(&lam, 4), "{:?}", lam);
            }
        }
    }

    #[test]
    fn q_is_b_times_p() {
        for size in 1..=5 {
            for lam in partitions_of(size, 3, size) {
                assert_eq!(*hl_q(&lam, 3), b_times_p(&lam, 3));
            }
        }
    }
}
