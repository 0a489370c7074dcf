//! Symmetric polynomials in a fixed number of variables, stored in the
//! monomial basis.

pub(crate) mod basis;
mod hall;
mod kostka;
mod rfunc;
mod tableau;

pub use basis::{
    b_times_p, basis_poly, hl_p, hl_q, jacobi_trudi, kostka_matrices, mac_p_prime, schur, to_basis, BasisKind, KostkaMatrices,
    TargetBasis,
};
pub use hall::{hall_coeff, hall_coeff_by_product, lr_coeff, lr_product, skew_in_basis};
pub use kostka::{
    charge, charge_kostka, kostka_number, lusztig_kostka, lusztig_term, partition_function_t, reading_word, ssyt,
};
pub use rfunc::{r_function, r_to_p_factor, straighten_alternant};
pub use tableau::{
    chain_sum, horizontal_strips_into, phi, phi_prime, psi, psi_prime, qt_phi, qt_psi, skew_coefficient, skew_poly,
    skew_poly_rational, strip_weight,
    vertical_strips_into, StripKind,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{LaurentPoly, Ring};

/// `Σ c_λ m_λ(x_1..x_v)`.
#[derive(Clone, PartialEq)]
pub struct SymPoly<C: Ring = LaurentPoly> {
    nvars: usize,
    coeffs: BTreeMap<Partition, C>,
}

impl<C: Ring> SymPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, coeffs: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Partition::empty(), nvars)
    }

    /// `m_λ`, or zero if `ℓ(λ) > v`.
    pub fn monomial(lambda: Partition, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(lambda, &C::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.coeffs.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &C)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &C) {
        if c.is_zero() || lambda.len() > self.nvars {
            return;
        }
        match self.coeffs.get_mut(&lambda) {
            Some(x) => {
                *x = x.add(c);
                if x.is_zero() {
                    self.coeffs.remove(&lambda);
                }
            }
            None => {
                self.coeffs.insert(lambda, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = self.clone();
        for (l, c) in &o.coeffs {
            r.add_term(l.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&C::one().neg()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self::zero(self.nvars);
        for (l, x) in &self.coeffs {
            r.add_term(l.clone(), &x.mul(c));
        }
        r
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> SymPoly<D> {
        let mut r = SymPoly::zero(self.nvars);
        for (l, x) in &self.coeffs {
            r.add_term(l.clone(), &f(x));
        }
        r
    }

    /// Exact product in the monomial basis.
    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.nvars != o.nvars {
            return Err(Error::Invalid(format!("nvars mismatch: {} vs {}", self.nvars, o.nvars)));
        }
        let mut r = Self::zero(self.nvars);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &o.coeffs {
                let cab = ca.mul(cb);
                for (nu, k) in monomial_product(a, b, self.nvars).iter() {
                    r.add_term(nu.clone(), &cab.mul(&C::from(LaurentPoly::constant(*k as i64))));
                }
            }
        }
        Ok(r)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("nvars mismatch")
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Same polynomial viewed in `v` variables (drops terms that vanish).
    pub fn restrict(&self, v: usize) -> Self {
        let mut r = Self::zero(v);
        for (l, c) in &self.coeffs {
            r.add_term(l.clone(), c);
        }
        r
    }

    /// Coefficient of the monomial `x^α` for an exponent vector `α`.
    pub fn monomial_coeff(&self, alpha: &[usize]) -> C {
        self.coeff(&Partition::from_unsorted(alpha))
    }
}

impl<C: Ring> fmt::Debug for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[v={}](", self.nvars)?;
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*m[{}]", c, l)?;
        }
        write!(f, ")")
    }
}

type ProductTable = Vec<(Partition, usize)>;

fn product_cache() -> &'static Mutex<HashMap<(Partition, Partition, usize), std::sync::Arc<ProductTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, usize), std::sync::Arc<ProductTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Distinct permutations of a multiset, as exponent vectors.
pub fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut vals: Vec<usize> = v.to_vec();
    vals.sort_unstable();
    let mut out = vec![vals.clone()];
    loop {
        let n = vals.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && vals[i - 1] >= vals[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while vals[j] <= vals[i - 1] {
            j -= 1;
        }
        vals.swap(i - 1, j);
        vals[i..].reverse();
        out.push(vals.clone());
    }
    out
}

/// Structure constants `m_a m_b = Σ c_ν m_ν` in `v` variables.
pub fn monomial_product(a: &Partition, b: &Partition, v: usize) -> std::sync::Arc<ProductTable> {
    let key = if a <= b { (a.clone(), b.clone(), v) } else { (b.clone(), a.clone(), v) };
    if let Some(t) = product_cache().lock().unwrap().get(&key) {
        return t.clone();
    }
    let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
    if a.len() <= v && b.len() <= v {
        let pa = a.padded(v);
        let mut bmult: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in &b.padded(v) {
            *bmult.entry(x).or_insert(0) += 1;
        }
        for alpha in distinct_permutations(&pa) {
            let mut cur = Vec::with_capacity(v);
            fill(&alpha, &mut bmult, &mut cur, &mut counts);
        }
    }
    let table: ProductTable = counts.into_iter().collect();
    let arc = std::sync::Arc::new(table);
    product_cache().lock().unwrap().insert(key, arc.clone());
    arc
}

// Choose β position by position so that α + β stays weakly decreasing.
fn fill(alpha: &[usize], bm: &mut BTreeMap<usize, usize>, cur: &mut Vec<usize>, out: &mut BTreeMap<Partition, usize>) {
    let i = cur.len();
    if i == alpha.len() {
        *out.entry(Partition::from_sorted(cur)).or_insert(0) += 1;
        return;
    }
    let keys: Vec<usize> = bm.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
    for bv in keys {
        let s = alpha[i] + bv;
        if i > 0 && s > cur[i - 1] {
            continue;
        }
        *bm.get_mut(&bv).unwrap() -= 1;
        cur.push(s);
        fill(alpha, bm, cur, out);
        cur.pop();
        *bm.get_mut(&bv).unwrap() += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn m1_squared() {
        let m1: SymPoly = SymPoly::monomial(p("1"), 2);
        let sq = m1.mul(&m1);
        assert_eq!(sq.coeff(&p("2")), LaurentPoly::one());
        assert_eq!(sq.coeff(&p("1,1")), LaurentPoly::constant(2));
        let m1: SymPoly = SymPoly::monomial(p("1"), 1);
        assert_eq!(m1.mul(&m1).coeff(&p("1,1")), LaurentPoly::zero());
    }

    #[test]
    fn product_against_brute_force() {
        // m_{21} m_{1} in 3 variables: brute-force monomial counting.
        let t = monomial_product(&p("2,1"), &p("1"), 3);
        let got: BTreeMap<Partition, usize> = t.iter().cloned().collect();
        assert_eq!(got.get(&p("3,1")), Some(&1));
        assert_eq!(got.get(&p("2,2")), Some(&2));
        assert_eq!(got.get(&p("2,1,1")), Some(&2));
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }
}
