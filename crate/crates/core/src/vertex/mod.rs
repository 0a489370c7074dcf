//! Lattice configurations of the two vertex models and their partition
//! functions, computed row by row.

mod ybe;

pub use ybe::{ybe_check, SpectralPoly, YbeKind, YbeReport};

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Alcove, Partition};
use crate::poly::qnum::{one_minus_t_pow, q_binomial};
use crate::poly::LaurentPoly;
use crate::symfunc::SymPoly;

/// `L`: hard-core bosons on horizontal edges; `L'`: unbounded horizontal edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Model {
    L,
    LPrime,
}

impl std::str::FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "L" => Model::L,
            "L'" | "Lprime" => Model::LPrime,
            other => return Err(Error::Parse(format!("unknown vertex model `{}`", other))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    /// Fixed values on the left and right outer horizontal edges of every row.
    Open { left: usize, right: usize },
    /// Cylinder: left and right edges of a row agree.
    Periodic,
}

/// One lattice row: horizontal edges `h_1..h_{n+1}` and the vertical
/// multiplicities above (`top`) and below (`bottom`) it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowConfig {
    pub model: Model,
    pub horizontal: Vec<usize>,
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

/// One full configuration, rows listed from the `μ` side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeConfig {
    pub rows: Vec<RowConfig>,
    pub winding: usize,
    pub weight: String,
}

fn vertex_weight(model: Model, west: usize, north: usize, east: usize, south: usize) -> LaurentPoly {
    if north + west != south + east {
        return LaurentPoly::zero();
    }
    match model {
        Model::L => {
            if west > 1 || east > 1 {
                return LaurentPoly::zero();
            }
            if west == 1 && east == 0 {
                one_minus_t_pow(north as i32 + 1)
            } else {
                LaurentPoly::one()
            }
        }
        Model::LPrime => q_binomial(south as i64, west as i64),
    }
}

/// Weight of a row without its `x` power, and that power (the sum of the
/// horizontal edges entering sites `1..n`). Invalid rows weigh zero.
pub fn row_weight(config: &RowConfig) -> (LaurentPoly, usize) {
    let n = config.top.len();
    let h = &config.horizontal;
    if h.len() != n + 1 || config.bottom.len() != n {
        return (LaurentPoly::zero(), 0);
    }
    let mut w = LaurentPoly::one();
    for j in 0..n {
        w = &w * &vertex_weight(config.model, h[j], config.top[j], h[j + 1], config.bottom[j]);
        if w.is_zero() {
            break;
        }
    }
    (w, h[..n].iter().sum())
}

#[derive(Clone, Debug)]
struct Row {
    horizontal: Vec<usize>,
    bottom: Vec<usize>,
    weight: LaurentPoly,
    x_power: usize,
    winding: usize,
}

/// All rows with nonzero weight below the multiplicities `top`.
fn rows_below(model: Model, boundary: Boundary, top: &[usize]) -> Vec<Row> {
    let n = top.len();
    let total: usize = top.iter().sum();
    let hmax = match model {
        Model::L => 1,
        Model::LPrime => total,
    };
    let starts: Vec<usize> = match boundary {
        Boundary::Open { left, .. } => vec![left],
        Boundary::Periodic => (0..=hmax).collect(),
    };
    let mut out = Vec::new();
    for h1 in starts {
        let mut h = vec![h1];
        let mut bottom = Vec::with_capacity(n);
        rec(model, boundary, top, &mut h, &mut bottom, LaurentPoly::one(), &mut out);
    }
    fn rec(model: Model, boundary: Boundary, top: &[usize], h: &mut Vec<usize>, bottom: &mut Vec<usize>, w: LaurentPoly, out: &mut Vec<Row>) {
        let j = bottom.len();
        let n = top.len();
        if j == n {
            let last = h[n];
            let ok = match boundary {
                Boundary::Open { right, .. } => last == right,
                Boundary::Periodic => last == h[0],
            };
            if ok {
                out.push(Row {
                    horizontal: h.clone(),
                    bottom: bottom.clone(),
                    weight: w,
                    x_power: h[..n].iter().sum(),
                    winding: if boundary == Boundary::Periodic { h[0] } else { 0 },
                });
            }
            return;
        }
        let inflow = top[j] + h[j];
        let emax = match model {
            Model::L => inflow.min(1),
            Model::LPrime => inflow,
        };
        for east in 0..=emax {
            let south = inflow - east;
            let vw = vertex_weight(model, h[j], top[j], east, south);
            if vw.is_zero() {
                continue;
            }
            h.push(east);
            bottom.push(south);
            rec(model, boundary, top, h, bottom, &w * &vw, out);
            h.pop();
            bottom.pop();
        }
    }
    out
}

/// Partition function of one boundary pair, split by winding number and
/// stored per monomial `x^α` (`α` indexed by row variable).
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeZ {
    pub model: Model,
    pub n: usize,
    pub rows: usize,
    components: BTreeMap<usize, BTreeMap<Vec<usize>, LaurentPoly>>,
    counts: BTreeMap<usize, u64>,
}

impl LatticeZ {
    fn empty(model: Model, n: usize, rows: usize) -> Self {
        LatticeZ { model, n, rows, components: BTreeMap::new(), counts: BTreeMap::new() }
    }

    /// Winding numbers with at least one allowed configuration.
    pub fn windings(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    /// Number of allowed configurations with winding `d`.
    pub fn count(&self, d: usize) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn component(&self, d: usize) -> BTreeMap<Vec<usize>, LaurentPoly> {
        self.components.get(&d).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^α` at winding `d`.
    pub fn coeff(&self, d: usize, alpha: &[usize]) -> LaurentPoly {
        self.components.get(&d).and_then(|c| c.get(alpha)).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Invariance of every component under all transpositions of adjacent
    /// variables.
    pub fn is_symmetric(&self) -> bool {
        self.components.values().all(|comp| {
            comp.iter().all(|(alpha, c)| {
                (0..alpha.len().saturating_sub(1)).all(|i| {
                    let mut beta = alpha.clone();
                    beta.swap(i, i + 1);
                    comp.get(&beta) == Some(c)
                })
            })
        })
    }

    /// The winding-`d` component in the monomial basis.
    pub fn sym_component(&self, d: usize) -> Result<SymPoly<LaurentPoly>> {
        if !self.is_symmetric() {
            return Err(Error::Invalid("partition function is not symmetric".into()));
        }
        let mut out = SymPoly::zero(self.rows);
        for (alpha, c) in self.component(d) {
            if alpha.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::from_unsorted(&alpha), &c);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for LatticeZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LatticeZ({:?}, n={}, rows={})", self.model, self.n, self.rows)?;
        for (d, comp) in &self.components {
            for (alpha, c) in comp {
                writeln!(f, "  d={} x^{:?}: {}", d, alpha, c)?;
            }
        }
        Ok(())
    }
}

fn level_change(boundary: Boundary, rows: usize) -> i64 {
    match boundary {
        Boundary::Open { left, right } => rows as i64 * (left as i64 - right as i64),
        Boundary::Periodic => 0,
    }
}

fn check_request(model: Model, boundary: Boundary, n: usize, k: usize, rows: usize) -> Result<usize> {
    Alcove::new(n, k)?;
    if let Boundary::Open { left, right } = boundary {
        if model == Model::L && (left > 1 || right > 1) {
            return Err(Error::Invalid("model L boundary edges take values 0 or 1".into()));
        }
    }
    if boundary == Boundary::Periodic {
        let max_rows = match model {
            Model::L => k,
            Model::LPrime => n - 1,
        };
        if rows == 0 || rows > max_rows {
            return Err(Error::Invalid(format!("periodic {:?} lattice needs 1..={} rows, got {}", model, max_rows, rows)));
        }
    }
    let out = k as i64 + level_change(boundary, rows);
    if out < 0 {
        return Err(Error::LevelMismatch(format!("{} rows lower level {} below zero", rows, k)));
    }
    Ok(out as usize)
}

type DpKey = (Vec<usize>, Vec<usize>, usize);

/// Partition functions from the boundary `μ ∈ A_{k,n}^+` to every reachable
/// `λ`, with `rows` rows; row `i` carries the variable `x_i` and the row next
/// to `μ` is the last one.
pub fn partition_functions(model: Model, boundary: Boundary, mu: &Partition, n: usize, k: usize, rows: usize) -> Result<BTreeMap<Partition, LatticeZ>> {
    check_request(model, boundary, n, k, rows)?;
    Alcove { n, k }.check(mu)?;
    let mut states: BTreeMap<DpKey, (LaurentPoly, u64)> = BTreeMap::new();
    states.insert((mu.multiplicities(n), vec![0; rows], 0), (LaurentPoly::one(), 1));
    for var in (0..rows).rev() {
        let next: Vec<(DpKey, (LaurentPoly, u64))> = states
            .par_iter()
            .flat_map_iter(|((m, alpha, d), (w, c))| {
                rows_below(model, boundary, m).into_iter().map(move |row| {
                    let mut a = alpha.clone();
                    a[var] = row.x_power;
                    ((row.bottom, a, d + row.winding), (w * &row.weight, *c))
                })
            })
            .collect();
        states = BTreeMap::new();
        for (key, (w, c)) in next {
            let e = states.entry(key).or_insert_with(|| (LaurentPoly::zero(), 0));
            e.0 += &w;
            e.1 += c;
        }
    }
    let mut out: BTreeMap<Partition, LatticeZ> = BTreeMap::new();
    for ((m, alpha, d), (w, c)) in states {
        let lam = Partition::from_multiplicities(&m);
        let z = out.entry(lam).or_insert_with(|| LatticeZ::empty(model, n, rows));
        *z.counts.entry(d).or_insert(0) += c;
        if !w.is_zero() {
            let comp = z.components.entry(d).or_default();
            *comp.entry(alpha).or_insert_with(LaurentPoly::zero) += &w;
        }
    }
    Ok(out)
}

/// Partition function for one boundary pair `(λ, μ)`.
pub fn partition_function(model: Model, boundary: Boundary, lambda: &Partition, mu: &Partition, n: usize, k: usize, rows: usize) -> Result<LatticeZ> {
    let out_level = check_request(model, boundary, n, k, rows)?;
    Alcove { n, k: out_level }.check(lambda)?;
    let mut all = partition_functions(model, boundary, mu, n, k, rows)?;
    Ok(all.remove(lambda).unwrap_or_else(|| LatticeZ::empty(model, n, rows)))
}

/// Every allowed configuration for one boundary pair.
pub fn configurations(model: Model, boundary: Boundary, lambda: &Partition, mu: &Partition, n: usize, k: usize, rows: usize) -> Result<Vec<LatticeConfig>> {
    let out_level = check_request(model, boundary, n, k, rows)?;
    Alcove { n, k }.check(mu)?;
    Alcove { n, k: out_level }.check(lambda)?;
    let target = lambda.multiplicities(n);
    let mut partial: Vec<(Vec<RowConfig>, LaurentPoly, usize)> = vec![(Vec::new(), LaurentPoly::one(), 0)];
    for _ in 0..rows {
        let mut next = Vec::new();
        for (cfg, w, d) in partial {
            let top = cfg.last().map(|r| r.bottom.clone()).unwrap_or_else(|| mu.multiplicities(n));
            for row in rows_below(model, boundary, &top) {
                let mut c = cfg.clone();
                c.push(RowConfig { model, horizontal: row.horizontal, top: top.clone(), bottom: row.bottom });
                next.push((c, &w * &row.weight, d + row.winding));
            }
        }
        partial = next;
    }
    Ok(partial
        .into_iter()
        .filter(|(cfg, _, _)| cfg.last().map(|r| r.bottom == target).unwrap_or(target == mu.multiplicities(n)))
        .map(|(rows, w, winding)| LatticeConfig { rows, winding, weight: w.to_string() })
        .collect())
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
    fn row_weight_examples() {
        let flat = RowConfig { model: Model::L, horizontal: vec![0, 0, 0], top: vec![1, 0], bottom: vec![1, 0] };
        assert_eq!(row_weight(&flat), (LaurentPoly::one(), 0));
        let hop = RowConfig { model: Model::L, horizontal: vec![0, 1, 0], top: vec![1, 0], bottom: vec![0, 1] };
        assert_eq!(row_weight(&hop), (lp("1 - t"), 1));
        let v = RowConfig { model: Model::LPrime, horizontal: vec![1, 0], top: vec![0], bottom: vec![1] };
        assert_eq!(row_weight(&v), (LaurentPoly::one(), 1));
        let bad = RowConfig { model: Model::L, horizontal: vec![0, 1, 0], top: vec![0, 0], bottom: vec![0, 1] };
        assert!(row_weight(&bad).0.is_zero());
    }

    #[test]
    fn open_row_n2() {
        let all = partition_functions(Model::L, Boundary::Open { left: 0, right: 0 }, &p("1"), 2, 1, 1).unwrap();
        assert_eq!(all[&p("1")].coeff(0, &[0]), LaurentPoly::one());
        assert_eq!(all[&p("2")].coeff(0, &[1]), lp("1 - t"));
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn periodic_trivial_and_table_entry() {
        let z = partition_function(Model::L, Boundary::Periodic, &p("2,1"), &p("2,1"), 3, 2, 1).unwrap();
        assert_eq!(z.coeff(0, &[0]), LaurentPoly::one());
        let z = partition_function(Model::L, Boundary::Periodic, &p("3,2,1"), &p("4,3,1"), 4, 3, 3).unwrap();
        let m = z.sym_component(2).unwrap();
        assert_eq!(m.coeff(&p("4,2")), lp("1 - t"));
    }

    #[test]
    fn configuration_list_matches_counts() {
        let (lam, mu) = (p("3,2,1"), p("4,3,1"));
        let z = partition_function(Model::L, Boundary::Periodic, &lam, &mu, 4, 3, 2).unwrap();
        let cfgs = configurations(Model::L, Boundary::Periodic, &lam, &mu, 4, 3, 2).unwrap();
        let total: u64 = z.windings().iter().map(|&d| z.count(d)).sum();
        assert_eq!(cfgs.len() as u64, total);
        for c in &cfgs {
            for r in &c.rows {
                assert!(!row_weight(r).0.is_zero());
            }
        }
    }

    #[test]
    fn bad_requests() {
        assert!(partition_functions(Model::L, Boundary::Periodic, &p("2,1"), 3, 2, 3).is_err());
        assert!(partition_functions(Model::L, Boundary::Open { left: 0, right: 1 }, &p("2"), 3, 1, 2).is_err());
        assert!(partition_functions(Model::L, Boundary::Open { left: 0, right: 0 }, &p("4"), 3, 1, 1).is_err());
    }
}
