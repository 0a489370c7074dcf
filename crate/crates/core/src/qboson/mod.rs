//! The level-k Fock space of `n` q-bosons and operators on it as sparse
//! matrices with entries in `Z[t^±][z]`.

mod ncpoly;
mod ops;
mod relations;

pub use ncpoly::{
    lowering_coefficients, nc_p_prime, nc_poly, nc_q_prime, nc_q_prime_by_lowering, nc_q_prime_unreduced, nc_s, nc_s_prime,
    NcKind,
};
pub use ops::{
    beta, beta_star, monodromy_op, nc_elementary, nc_gprime, plactic_a, word_commutator, MonodromyKind, Route,
};
pub use relations::{tq_sides, verify_relations, RelationReport, Suite, TqForm};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{Alcove, Partition};
use crate::poly::{LaurentPoly, ZPoly};

/// Ordered labels of `A_{k,n}^+` with their occupation vectors.
#[derive(Debug, PartialEq, Eq)]
pub struct FockBasis {
    pub n: usize,
    pub k: usize,
    pub labels: Vec<Partition>,
    /// `m_1..m_n` for each label.
    pub occupations: Vec<Vec<usize>>,
    index: HashMap<Partition, usize>,
    occ_index: HashMap<Vec<usize>, usize>,
}

impl FockBasis {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn index_of_occupation(&self, m: &[usize]) -> Option<usize> {
        self.occ_index.get(m).copied()
    }

    pub fn label(&self, i: usize) -> &Partition {
        &self.labels[i]
    }

    fn require(&self, lambda: &Partition) -> Result<usize> {
        self.index_of(lambda).ok_or_else(|| Error::OutOfAlcove { label: lambda.to_string(), n: self.n, k: self.k })
    }
}

/// Shared basis of `A_{k,n}^+`.
pub fn fock_basis(n: usize, k: usize) -> Arc<FockBasis> {
    static C: OnceLock<Mutex<HashMap<(usize, usize), Arc<FockBasis>>>> = OnceLock::new();
    let cache = C.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&(n, k)) {
        return b.clone();
    }
    let labels = Alcove { n, k }.enumerate();
    let occupations: Vec<Vec<usize>> = labels.iter().map(|l| l.multiplicities(n)).collect();
    let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let occ_index = occupations.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let b = Arc::new(FockBasis { n, k, labels, occupations, index, occ_index });
    cache.lock().unwrap().insert((n, k), b.clone());
    b
}

/// Column-sparse operator `F_k -> F_k'`.
#[derive(Clone)]
pub struct OpMatrix {
    pub domain: Arc<FockBasis>,
    pub codomain: Arc<FockBasis>,
    cols: Vec<BTreeMap<usize, ZPoly>>,
}

impl PartialEq for OpMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.domain.k == o.domain.k && self.codomain.k == o.codomain.k && self.domain.n == o.domain.n && self.cols == o.cols
    }
}

impl OpMatrix {
    pub fn zero(domain: Arc<FockBasis>, codomain: Arc<FockBasis>) -> Self {
        let cols = vec![BTreeMap::new(); domain.dim()];
        OpMatrix { domain, codomain, cols }
    }

    pub fn identity(basis: Arc<FockBasis>) -> Self {
        let mut m = Self::zero(basis.clone(), basis.clone());
        for j in 0..basis.dim() {
            m.cols[j].insert(j, ZPoly::one());
        }
        m
    }

    /// `z^d` times the identity.
    pub fn z_identity(basis: Arc<FockBasis>, d: u32) -> Self {
        let mut m = Self::zero(basis.clone(), basis.clone());
        for j in 0..basis.dim() {
            m.cols[j].insert(j, ZPoly::z_pow(d, LaurentPoly::one()));
        }
        m
    }

    pub fn add_entry(&mut self, row: usize, col: usize, v: &ZPoly) {
        if v.is_zero() {
            return;
        }
        let e = self.cols[col].entry(row).or_insert_with(ZPoly::zero);
        *e += v;
        if e.is_zero() {
            self.cols[col].remove(&row);
        }
    }

    pub fn entry_at(&self, row: usize, col: usize) -> ZPoly {
        self.cols[col].get(&row).cloned().unwrap_or_else(ZPoly::zero)
    }

    /// `⟨row|op|col⟩`.
    pub fn entry(&self, row: &Partition, col: &Partition) -> Result<ZPoly> {
        let i = self.codomain.require(row)?;
        let j = self.domain.require(col)?;
        Ok(self.entry_at(i, j))
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ZPoly)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, ZPoly> {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    fn same_shape(&self, o: &Self) -> bool {
        self.domain.n == o.domain.n && self.domain.k == o.domain.k && self.codomain.k == o.codomain.k
    }

    pub fn add(&self, o: &Self) -> Self {
        assert!(self.same_shape(o), "operator shapes differ");
        let mut r = self.clone();
        for (i, j, v) in o.entries() {
            r.add_entry(i, j, v);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map(|v| v.scale(c))
    }

    pub fn scale_z(&self, c: &ZPoly) -> Self {
        self.map(|v| v * c)
    }

    fn map(&self, f: impl Fn(&ZPoly) -> ZPoly) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        OpMatrix { domain: self.domain.clone(), codomain: self.codomain.clone(), cols }
    }

    /// Composition `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        assert!(rhs.codomain.k == self.domain.k && rhs.codomain.n == self.domain.n, "composition levels differ");
        let cols: Vec<BTreeMap<usize, ZPoly>> = rhs
            .cols
            .par_iter()
            .map(|col| {
                let mut out: BTreeMap<usize, ZPoly> = BTreeMap::new();
                for (l, v) in col {
                    for (i, w) in &self.cols[*l] {
                        *out.entry(*i).or_insert_with(ZPoly::zero) += &(w * v);
                    }
                }
                out.retain(|_, v| !v.is_zero());
                out
            })
            .collect();
        OpMatrix { domain: rhs.domain.clone(), codomain: self.codomain.clone(), cols }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.domain.clone());
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    /// `[self, o]_t = self o - t o self`.
    pub fn t_commutator(&self, o: &Self) -> Self {
        self.compose(o).sub(&o.compose(self).scale(&LaurentPoly::t()))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.compose(o).sub(&o.compose(self))
    }

    pub fn div_exact(&self, d: &LaurentPoly) -> Result<Self> {
        let mut cols = Vec::with_capacity(self.cols.len());
        for c in &self.cols {
            let mut nc = BTreeMap::new();
            for (i, v) in c {
                let q = v.div_exact(d).ok_or_else(|| Error::Invalid(format!("entry not divisible by {}", d)))?;
                nc.insert(*i, q);
            }
            cols.push(nc);
        }
        Ok(OpMatrix { domain: self.domain.clone(), codomain: self.codomain.clone(), cols })
    }

    /// The `z = 1` view as a dense matrix of Laurent polynomials.
    pub fn at_z_one(&self) -> Vec<Vec<LaurentPoly>> {
        let mut m = vec![vec![LaurentPoly::zero(); self.domain.dim()]; self.codomain.dim()];
        for (i, j, v) in self.entries() {
            m[i][j] = v.at_z_one();
        }
        m
    }

    /// Apply to a basis vector.
    pub fn apply(&self, col: &Partition) -> Result<Vec<(Partition, ZPoly)>> {
        let j = self.domain.require(col)?;
        Ok(self.cols[j].iter().map(|(i, v)| (self.codomain.labels[*i].clone(), v.clone())).collect())
    }
}

impl fmt::Debug for OpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OpMatrix(n={}, {} -> {})", self.domain.n, self.domain.k, self.codomain.k)?;
        for (i, j, v) in self.entries() {
            writeln!(f, "  <{}|op|{}> = {}", self.codomain.labels[i], self.domain.labels[j], v)?;
        }
        Ok(())
    }
}

/// `⟨row|op|col⟩`.
pub fn matrix_element(op: &OpMatrix, row: &Partition, col: &Partition) -> Result<ZPoly> {
    op.entry(row, col)
}
