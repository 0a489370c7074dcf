//! Cylindric tableaux and the cylindric Hall-Littlewood and t=0 Macdonald
//! functions built from them.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Alcove, CylShape, Partition, StripClass};
use crate::poly::qnum::q_binomial;
use crate::poly::LaurentPoly;
use crate::symfunc::SymPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CylWeight {
    Phi,
    Psi,
    PhiPrime,
    PsiPrime,
}

impl std::str::FromStr for CylWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Phi" | "phi" => CylWeight::Phi,
            "Psi" | "psi" => CylWeight::Psi,
            "Phi'" | "phi'" => CylWeight::PhiPrime,
            "Psi'" | "psi'" => CylWeight::PsiPrime,
            other => return Err(Error::Parse(format!("unknown weight `{}`", other))),
        })
    }
}

impl CylWeight {
    /// Primed weights live on vertical strips.
    pub fn is_vertical(self) -> bool {
        matches!(self, CylWeight::PhiPrime | CylWeight::PsiPrime)
    }
}

fn horizontal(class: StripClass) -> bool {
    matches!(class, StripClass::Empty | StripClass::Horizontal | StripClass::Both)
}

fn vertical(class: StripClass) -> bool {
    matches!(class, StripClass::Empty | StripClass::Vertical | StripClass::Both)
}

/// Weight of one cylindric step `λ/d/μ`; zero unless the step is a horizontal
/// strip (unprimed kinds) or a vertical strip (primed kinds).
pub fn cyl_weight(kind: CylWeight, shape: &CylShape) -> LaurentPoly {
    let info = shape.classify();
    let ok = if kind.is_vertical() { vertical(info.class) } else { horizontal(info.class) };
    if !ok {
        return LaurentPoly::zero();
    }
    let n = shape.n;
    let theta = &info.col_profile;
    let th = |j: usize| theta[j % n];
    let ml = shape.lambda.multiplicities(n);
    let mm = shape.mu.multiplicities(n);
    let mut acc = LaurentPoly::one();
    for i in 0..n {
        let f = match kind {
            CylWeight::Phi if th(i) == 1 && th(i + 1) == 0 => LaurentPoly::one() - LaurentPoly::t_pow(ml[i] as i32),
            CylWeight::Psi if th(i) == 0 && th(i + 1) == 1 => LaurentPoly::one() - LaurentPoly::t_pow(mm[i] as i32),
            CylWeight::PsiPrime => q_binomial(ml[i] as i64, th(i)),
            CylWeight::PhiPrime => q_binomial(mm[i] as i64, th(i + 1)),
            _ => continue,
        };
        acc = &acc * &f;
    }
    acc
}

/// A cylindric tableau as its chain of steps `(λ^{(a)}, δ_a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CylTableau {
    pub n: usize,
    pub k: usize,
    pub start: Partition,
    pub strips: Vec<(Partition, usize)>,
}

impl CylTableau {
    /// Strip sizes in the fundamental region.
    pub fn weight(&self) -> Vec<usize> {
        let mut prev = &self.start;
        let mut out = Vec::new();
        for (lam, dl) in &self.strips {
            out.push(lam.size() + self.n * dl - prev.size());
            prev = lam;
        }
        out
    }

    pub fn steps(&self) -> Vec<CylShape> {
        let mut prev = self.start.clone();
        let mut out = Vec::new();
        for (lam, dl) in &self.strips {
            out.push(CylShape { n: self.n, k: self.k, lambda: lam.clone(), d: *dl, mu: prev.clone() });
            prev = lam.clone();
        }
        out
    }

    pub fn total_weight(&self, kind: CylWeight) -> LaurentPoly {
        self.steps().iter().map(|s| cyl_weight(kind, s)).product()
    }
}

/// One admissible step out of a label.
#[derive(Clone, Debug)]
pub struct Step {
    pub to: Partition,
    pub d: usize,
    pub size: usize,
    pub weights: [LaurentPoly; 2],
}

type StepTable = HashMap<Partition, Vec<Step>>;

fn step_cache() -> &'static Mutex<HashMap<(usize, usize, bool), Arc<StepTable>>> {
    static C: OnceLock<Mutex<HashMap<(usize, usize, bool), Arc<StepTable>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Every horizontal (or vertical) cylindric step between labels of `A_{k,n}^+`.
/// Weights are `[Φ, Ψ]` for horizontal steps and `[Φ', Ψ']` for vertical ones.
pub fn step_table(n: usize, k: usize, vertical_steps: bool) -> Arc<StepTable> {
    let key = (n, k, vertical_steps);
    if let Some(t) = step_cache().lock().unwrap().get(&key) {
        return t.clone();
    }
    let labels = Alcove { n, k }.enumerate();
    let dmax = if vertical_steps { k } else { 1 };
    let mut table: StepTable = HashMap::new();
    for mu in &labels {
        let mut steps = Vec::new();
        for lam in &labels {
            for d in 0..=dmax {
                let shape = CylShape { n, k, lambda: lam.clone(), d, mu: mu.clone() };
                let info = shape.classify();
                let ok = if vertical_steps { vertical(info.class) } else { horizontal(info.class) };
                if !ok {
                    continue;
                }
                let weights = if vertical_steps {
                    [cyl_weight(CylWeight::PhiPrime, &shape), cyl_weight(CylWeight::PsiPrime, &shape)]
                } else {
                    [cyl_weight(CylWeight::Phi, &shape), cyl_weight(CylWeight::Psi, &shape)]
                };
                steps.push(Step { to: lam.clone(), d, size: info.size.unwrap(), weights });
            }
        }
        table.insert(mu.clone(), steps);
    }
    let arc = Arc::new(table);
    step_cache().lock().unwrap().insert(key, arc.clone());
    arc
}

fn kind_slot(kind: CylWeight) -> (bool, usize) {
    match kind {
        CylWeight::Phi => (false, 0),
        CylWeight::Psi => (false, 1),
        CylWeight::PhiPrime => (true, 0),
        CylWeight::PsiPrime => (true, 1),
    }
}

/// Sum of `w_T` over cylindric tableaux of the given shape and weight
/// (a composition of strip sizes).
pub fn cyl_tableau_sum(kind: CylWeight, shape: &CylShape, weight: &[usize]) -> LaurentPoly {
    let (vert, slot) = kind_slot(kind);
    let table = step_table(shape.n, shape.k, vert);
    let mut states: BTreeMap<(Partition, usize), LaurentPoly> = BTreeMap::new();
    states.insert((shape.mu.clone(), 0), LaurentPoly::one());
    for &s in weight {
        let mut next: BTreeMap<(Partition, usize), LaurentPoly> = BTreeMap::new();
        for ((kappa, dsum), c) in &states {
            for st in &table[kappa] {
                if st.size != s || dsum + st.d > shape.d || st.weights[slot].is_zero() {
                    continue;
                }
                let v = c * &st.weights[slot];
                *next.entry((st.to.clone(), dsum + st.d)).or_insert_with(LaurentPoly::zero) += &v;
            }
        }
        states = next;
    }
    states.remove(&(shape.lambda.clone(), shape.d)).unwrap_or_else(LaurentPoly::zero)
}

/// All horizontal-strip cylindric tableaux with entries `1..=max_entry`.
pub fn enumerate_cyl_tableaux(shape: &CylShape, max_entry: usize) -> Vec<CylTableau> {
    enumerate_with(shape, max_entry, false)
}

/// All vertical-strip (conjugate) cylindric tableaux with entries `1..=max_entry`.
pub fn enumerate_conjugate_cyl_tableaux(shape: &CylShape, max_entry: usize) -> Vec<CylTableau> {
    enumerate_with(shape, max_entry, true)
}

fn enumerate_with(shape: &CylShape, max_entry: usize, vert: bool) -> Vec<CylTableau> {
    let table = step_table(shape.n, shape.k, vert);
    let mut out = Vec::new();
    let mut path: Vec<(Partition, usize)> = Vec::new();
    walk(shape, &table, max_entry, &shape.mu, 0, &mut path, &mut out);
    out
}

fn walk(
    shape: &CylShape,
    table: &StepTable,
    left: usize,
    cur: &Partition,
    dsum: usize,
    path: &mut Vec<(Partition, usize)>,
    out: &mut Vec<CylTableau>,
) {
    if left == 0 {
        if cur == &shape.lambda && dsum == shape.d {
            out.push(CylTableau { n: shape.n, k: shape.k, start: shape.mu.clone(), strips: path.clone() });
        }
        return;
    }
    for st in &table[cur] {
        if dsum + st.d > shape.d {
            continue;
        }
        path.push((st.to.clone(), st.d));
        walk(shape, table, left - 1, &st.to, dsum + st.d, path, out);
        path.pop();
    }
}

/// Number of cylindric tableaux of the shape with weight `theta`.
pub fn cyl_kostka(shape: &CylShape, theta: &[usize]) -> usize {
    let table = step_table(shape.n, shape.k, false);
    let mut states: BTreeMap<(Partition, usize), usize> = BTreeMap::new();
    states.insert((shape.mu.clone(), 0), 1);
    for &s in theta {
        let mut next: BTreeMap<(Partition, usize), usize> = BTreeMap::new();
        for ((kappa, dsum), c) in &states {
            for st in &table[kappa] {
                if st.size == s && dsum + st.d <= shape.d {
                    *next.entry((st.to.clone(), dsum + st.d)).or_insert(0) += c;
                }
            }
        }
        states = next;
    }
    states.get(&(shape.lambda.clone(), shape.d)).copied().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CylFunction {
    QHl,
    PHl,
    PPrimeMac,
}

impl std::str::FromStr for CylFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Q_HL" | "Q" => CylFunction::QHl,
            "P_HL" | "P" => CylFunction::PHl,
            "P'_Mac" | "P'" => CylFunction::PPrimeMac,
            other => return Err(Error::Parse(format!("unknown cylindric function `{}`", other))),
        })
    }
}

/// Cylindric function of the shape in `nvars` variables, in the monomial basis.
/// Hall-Littlewood kinds vanish for `nvars > k`; the Macdonald kind for `nvars > n-1`.
pub fn cyl_function(kind: CylFunction, shape: &CylShape, nvars: usize) -> SymPoly<LaurentPoly> {
    let mut out = SymPoly::zero(nvars);
    let (limit, w) = match kind {
        CylFunction::QHl => (shape.k, CylWeight::Phi),
        CylFunction::PHl => (shape.k, CylWeight::Psi),
        CylFunction::PPrimeMac => (shape.n - 1, CylWeight::PsiPrime),
    };
    if nvars == 0 || nvars > limit {
        return out;
    }
    let size = shape.box_count();
    if size < 0 {
        return out;
    }
    let size = size as usize;
    for nu in partitions_of(size, nvars, size) {
        let c = cyl_tableau_sum(w, shape, nu.parts());
        out.add_term(nu, &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qnum::b_lambda;
    use crate::symfunc::{skew_poly, to_basis, StripKind, TargetBasis};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn shape(n: usize, k: usize, l: &str, d: usize, m: &str) -> CylShape {
        CylShape::new(n, k, p(l), d, p(m)).unwrap()
    }

    fn b(p: &Partition) -> LaurentPoly {
        b_lambda(p.parts())
    }

    #[test]
    fn empty_step_weights() {
        let s = shape(4, 3, "3,2,1", 0, "3,2,1");
        for kind in [CylWeight::Phi, CylWeight::Psi, CylWeight::PhiPrime, CylWeight::PsiPrime] {
            assert!(cyl_weight(kind, &s).is_one());
        }
        assert_eq!(enumerate_cyl_tableaux(&s, 3).len(), 1);
    }

    #[test]
    fn b_lambda_relations_per_step() {
        for (n, k) in [(3, 2), (4, 2), (3, 3)] {
            let labels = Alcove { n, k }.enumerate();
            for l in &labels {
                for m in &labels {
                    for d in 0..=1 {
                        let s = CylShape { n, k, lambda: l.clone(), d, mu: m.clone() };
                        let lhs = &cyl_weight(CylWeight::Phi, &s) * &b(m);
                        let rhs = &cyl_weight(CylWeight::Psi, &s) * &b(l);
                        assert_eq!(lhs, rhs);
                        let lhs = &cyl_weight(CylWeight::PsiPrime, &s) * &b(m);
                        let rhs = &cyl_weight(CylWeight::PhiPrime, &s) * &b(l);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn degree_zero_is_ordinary_skew() {
        let s = shape(4, 3, "4,3,2", 0, "3,1,1");
        let cyl = cyl_function(CylFunction::PHl, &s, 3);
        assert_eq!(cyl, skew_poly(StripKind::Psi, &p("4,3,2"), &p("3,1,1"), 3));
    }

    #[test]
    fn hall_littlewood_table() {
        let s = shape(4, 3, "3,2,1", 2, "4,3,1");
        let f = cyl_function(CylFunction::PHl, &s, 3);
        assert_eq!(f.coeff(&p("4,2")), lp("1 - t"));
        assert_eq!(f.coeff(&p("2,2,2")), lp("10 - 26*t + 14*t^2 + 16*t^3 - 21*t^4 + 7*t^5 + t^6 - t^7"));
        let sch = to_basis(TargetBasis::S, &f);
        assert_eq!(sch[&p("2,2,2")], lp("1 - 3*t + 4*t^2 - 7*t^4 + 5*t^5 + t^6 - t^7"));
        let hl = to_basis(TargetBasis::P, &f);
        assert_eq!(hl[&p("3,2,1")], lp("2 - 5*t + t^2 + 6*t^3 - 5*t^4 + t^5"));
    }

    #[test]
    fn macdonald_table() {
        let s = shape(5, 5, "5,3,2,1,1", 1, "3,2,2,1,1");
        let f = cyl_function(CylFunction::PPrimeMac, &s, 4);
        assert_eq!(f.coeff(&p("4,2,2")), lp("1 + t"));
        assert_eq!(f.coeff(&p("2,2,2,2")), lp("24 + 52*t + 45*t^2 + 16*t^3 + t^4"));
        let sch = to_basis(TargetBasis::S, &f);
        assert_eq!(sch[&p("2,2,2,2")], lp("1 + 4*t + 6*t^2 + 5*t^3 + t^4"));
    }

    #[test]
    fn kostka_counts() {
        let s = shape(4, 3, "3,2,1", 2, "4,3,1");
        assert_eq!(cyl_kostka(&s, &[4, 2, 0]), 1);
        assert_eq!(cyl_kostka(&s, &[2, 4, 0]), 1);
        // (3,2,1)/(1,1,1) is the shape (2,1) shifted right by one column
        let s0 = shape(4, 3, "3,2,1", 0, "1,1,1");
        assert_eq!(cyl_kostka(&s0, &[1, 1, 1]), 2);
        assert_eq!(cyl_kostka(&shape(4, 3, "3,3,2", 0, "2,2,1"), &[1, 1, 1]), 3);
        let s = shape(4, 3, "3,2,1", 2, "4,3,1");
        let n: usize = enumerate_cyl_tableaux(&s, 3).iter().filter(|t| t.weight() == vec![2, 2, 2]).count();
        assert_eq!(n, cyl_kostka(&s, &[2, 2, 2]));
    }

    #[test]
    fn symmetric_under_permuted_weights() {
        let s = shape(4, 3, "3,2,1", 2, "4,3,1");
        for kind in [CylWeight::Phi, CylWeight::Psi] {
            assert_eq!(cyl_tableau_sum(kind, &s, &[3, 2, 1]), cyl_tableau_sum(kind, &s, &[1, 3, 2]));
        }
        let s = shape(5, 5, "5,3,2,1,1", 1, "3,2,2,1,1");
        assert_eq!(cyl_tableau_sum(CylWeight::PsiPrime, &s, &[3, 2, 2, 1]), cyl_tableau_sum(CylWeight::PsiPrime, &s, &[1, 2, 3, 2]));
    }
}
