//! Elementary q-boson operators, Yang-Baxter algebra generators and the two
//! transfer-matrix families.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cylfunc::step_table;
use crate::poly::qnum::{self, pochhammer};
use crate::poly::{LaurentPoly, ZPoly};
use crate::symfunc::{horizontal_strips_into, phi, psi};

use super::{fock_basis, OpMatrix};

fn one_minus_t_pow(e: usize) -> LaurentPoly {
    qnum::one_minus_t_pow(e as i32)
}

/// `β_i : F_k -> F_{k-1}`, `β|m⟩ = |m-1⟩`.
pub fn beta(i: usize, n: usize, k: usize) -> OpMatrix {
    assert!(k >= 1 && (1..=n).contains(&i));
    let dom = fock_basis(n, k);
    let cod = fock_basis(n, k - 1);
    let mut op = OpMatrix::zero(dom.clone(), cod.clone());
    for (j, m) in dom.occupations.iter().enumerate() {
        if m[i - 1] > 0 {
            let mut m2 = m.clone();
            m2[i - 1] -= 1;
            op.add_entry(cod.index_of_occupation(&m2).unwrap(), j, &ZPoly::one());
        }
    }
    op
}

/// `β*_i : F_k -> F_{k+1}`, `β*|m⟩ = (1 - t^{m+1})|m+1⟩`.
pub fn beta_star(i: usize, n: usize, k: usize) -> OpMatrix {
    assert!((1..=n).contains(&i));
    let dom = fock_basis(n, k);
    let cod = fock_basis(n, k + 1);
    let mut op = OpMatrix::zero(dom.clone(), cod.clone());
    for (j, m) in dom.occupations.iter().enumerate() {
        let mut m2 = m.clone();
        m2[i - 1] += 1;
        op.add_entry(cod.index_of_occupation(&m2).unwrap(), j, &ZPoly::from(one_minus_t_pow(m[i - 1] + 1)));
    }
    op
}

/// Plactic generator `a_i = β*_{i+1} β_i` (`a_n = z β*_1 β_n`) on `F_k`.
pub fn plactic_a(i: usize, n: usize, k: usize) -> OpMatrix {
    let basis = fock_basis(n, k);
    let mut op = OpMatrix::zero(basis.clone(), basis.clone());
    let to = if i == n { 1 } else { i + 1 };
    let zdeg = u32::from(i == n);
    for (j, m) in basis.occupations.iter().enumerate() {
        if m[i - 1] == 0 {
            continue;
        }
        let mut m2 = m.clone();
        m2[i - 1] -= 1;
        let c = one_minus_t_pow(m2[to - 1] + 1);
        m2[to - 1] += 1;
        op.add_entry(basis.index_of_occupation(&m2).unwrap(), j, &ZPoly::z_pow(zdeg, c));
    }
    op
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonodromyKind {
    A,
    B,
    C,
    D,
}

/// Coefficient of `u^r` in the monodromy entry, via the Pieri rules.
/// `A_r`, `D_r` preserve the level, `B_r` raises and `C_r` lowers it.
pub fn monodromy_op(kind: MonodromyKind, r: usize, n: usize, k: usize) -> OpMatrix {
    let dom = fock_basis(n, k);
    let out_level = match kind {
        MonodromyKind::A | MonodromyKind::D => k,
        MonodromyKind::B => k + 1,
        MonodromyKind::C => {
            if k == 0 {
                return OpMatrix::zero(dom.clone(), dom);
            }
            k - 1
        }
    };
    let cod = fock_basis(n, out_level);
    let mut op = OpMatrix::zero(dom.clone(), cod.clone());
    if r > n {
        return op;
    }
    for (j, mu) in dom.labels.iter().enumerate() {
        match kind {
            MonodromyKind::A | MonodromyKind::B => {
                for lam in horizontal_strips_into(mu, r, None, out_level) {
                    if lam.len() == out_level && lam.first() <= n {
                        op.add_entry(cod.index_of(&lam).unwrap(), j, &ZPoly::from(phi(&lam, mu)));
                    }
                }
            }
            MonodromyKind::C | MonodromyKind::D => {
                for (i, lam) in cod.labels.iter().enumerate() {
                    if mu.contains(lam) && mu.size() == lam.size() + n - r {
                        let w = psi(mu, lam);
                        op.add_entry(i, j, &ZPoly::from(w));
                    }
                }
            }
        }
    }
    op
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Strip (Pieri) formulas.
    Pieri,
    /// Words in the plactic generators.
    Words,
}

type OpCache = Mutex<HashMap<(u8, usize, usize, usize, Route), Arc<OpMatrix>>>;

fn op_cache() -> &'static OpCache {
    static C: OnceLock<OpCache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(tag: u8, r: usize, n: usize, k: usize, route: Route, build: impl FnOnce() -> OpMatrix) -> Arc<OpMatrix> {
    let key = (tag, r, n, k, route);
    if let Some(x) = op_cache().lock().unwrap().get(&key) {
        return x.clone();
    }
    let v = Arc::new(build());
    op_cache().lock().unwrap().insert(key, v.clone());
    v
}

/// Anti-clockwise ordered word on a proper subset of `1..=n`: each cyclic run
/// `s, s+1, ..., s+l` is written in descending order.
fn ordered_word(set: &[bool]) -> Vec<usize> {
    let n = set.len();
    let mut word = Vec::new();
    for s in 0..n {
        if set[s] && !set[(s + n - 1) % n] {
            let mut run = vec![s];
            let mut x = (s + 1) % n;
            while set[x] {
                run.push(x);
                x = (x + 1) % n;
            }
            word.extend(run.iter().rev().map(|&i| i + 1));
        }
    }
    word
}

/// Nested commutator `[a_{w_1}, [a_{w_2}, ... [a_{w_{r-1}}, a_{w_r}]_t ...]_t]_t`.
pub fn word_commutator(word: &[usize], n: usize, k: usize) -> OpMatrix {
    let gens: Vec<OpMatrix> = (1..=n).map(|i| plactic_a(i, n, k)).collect();
    let mut acc = gens[word[word.len() - 1] - 1].clone();
    for &w in word[..word.len() - 1].iter().rev() {
        acc = gens[w - 1].t_commutator(&acc);
    }
    acc
}

/// Noncommutative elementary polynomial `e_r` on `F_k`.
pub fn nc_elementary(r: usize, n: usize, k: usize, route: Route) -> Arc<OpMatrix> {
    cached(0, r, n, k, route, || {
        let basis = fock_basis(n, k);
        if r == 0 {
            return OpMatrix::identity(basis);
        }
        if r > n {
            return OpMatrix::zero(basis.clone(), basis);
        }
        match route {
            Route::Pieri => {
                let a = monodromy_op(MonodromyKind::A, r, n, k);
                let d = monodromy_op(MonodromyKind::D, r, n, k);
                a.add(&d.scale_z(&ZPoly::z_pow(1, LaurentPoly::one())))
            }
            Route::Words => {
                if r == n {
                    return OpMatrix::z_identity(basis, 1);
                }
                let mut acc = OpMatrix::zero(basis.clone(), basis);
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() as usize != r {
                        continue;
                    }
                    let set: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                    acc = acc.add(&word_commutator(&ordered_word(&set), n, k));
                }
                let norm = LaurentPoly::from_coeffs(0, &[1, -1]).pow(r as u32 - 1);
                acc.div_exact(&norm).expect("commutator sum divisible by (1-t)^(r-1)")
            }
        }
    })
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn divided_power(op: &OpMatrix, c: usize) -> OpMatrix {
    op.pow(c).div_exact(&pochhammer(c)).expect("divided power")
}

/// Noncommutative `g'_r` on `F_k`.
pub fn nc_gprime(r: usize, n: usize, k: usize, route: Route) -> Arc<OpMatrix> {
    cached(1, r, n, k, route, || {
        let basis = fock_basis(n, k);
        if r == 0 {
            return OpMatrix::identity(basis);
        }
        let mut op = OpMatrix::zero(basis.clone(), basis.clone());
        match route {
            Route::Pieri => {
                let table = step_table(n, k, true);
                for (j, mu) in basis.labels.iter().enumerate() {
                    for st in &table[mu] {
                        if st.size == r && !st.weights[1].is_zero() {
                            op.add_entry(basis.index_of(&st.to).unwrap(), j, &ZPoly::z_pow(st.d as u32, st.weights[1].clone()));
                        }
                    }
                }
            }
            Route::Words => {
                for comp in compositions(r, n) {
                    let cn = comp[n - 1];
                    if cn > k {
                        continue;
                    }
                    let inner = k - cn;
                    // β_n^{c_n}
                    let mut acc = OpMatrix::identity(basis.clone());
                    for l in 0..cn {
                        acc = beta(n, n, k - l).compose(&acc);
                    }
                    for i in (1..n).rev() {
                        if comp[i - 1] > 0 {
                            acc = divided_power(&plactic_a(i, n, inner), comp[i - 1]).compose(&acc);
                        }
                    }
                    let mut up = OpMatrix::identity(fock_basis(n, inner));
                    for l in 0..cn {
                        up = beta_star(1, n, inner + l).compose(&up);
                    }
                    let up = up.div_exact(&pochhammer(cn)).expect("divided power").scale_z(&ZPoly::z_pow(cn as u32, LaurentPoly::one()));
                    op = op.add(&up.compose(&acc));
                }
            }
        }
        op
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn plactic_examples() {
        let a1 = plactic_a(1, 3, 2);
        assert_eq!(a1.entry(&p("2,2"), &p("2,1")).unwrap(), ZPoly::from(lp("1 - t^2")));
        let a3 = plactic_a(3, 3, 2);
        assert_eq!(a3.entry(&p("3,1"), &p("3,3")).unwrap(), ZPoly::z_pow(1, lp("1 - t")));
        assert!(a1.apply(&p("3,2")).unwrap().is_empty());
        // a_i = β*_{i+1} β_i
        for i in 1..3 {
            assert_eq!(plactic_a(i, 3, 2), beta_star(i + 1, 3, 1).compose(&beta(i, 3, 2)));
        }
    }

    #[test]
    fn pieri_examples() {
        let a0 = monodromy_op(MonodromyKind::A, 0, 4, 2);
        assert_eq!(a0, OpMatrix::identity(fock_basis(4, 2)));
        let a1 = monodromy_op(MonodromyKind::A, 1, 2, 1);
        assert_eq!(a1.entry(&p("2"), &p("1")).unwrap(), ZPoly::from(lp("1 - t")));
        assert_eq!(*nc_elementary(3, 3, 2, Route::Pieri), OpMatrix::z_identity(fock_basis(3, 2), 1));
    }

    #[test]
    fn words_for_n4_r3() {
        let mut set = vec![true, true, true, false];
        assert_eq!(ordered_word(&set), vec![3, 2, 1]);
        set = vec![true, true, false, true];
        assert_eq!(ordered_word(&set), vec![2, 1, 4]);
        set = vec![true, false, true, true];
        assert_eq!(ordered_word(&set), vec![1, 4, 3]);
    }

    #[test]
    fn routes_agree_small() {
        for (n, k) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            for r in 0..=n {
                assert_eq!(nc_elementary(r, n, k, Route::Pieri), nc_elementary(r, n, k, Route::Words), "e_{} n={} k={}", r, n, k);
            }
            for r in 0..=k + 2 {
                assert_eq!(nc_gprime(r, n, k, Route::Pieri), nc_gprime(r, n, k, Route::Words), "g'_{} n={} k={}", r, n, k);
            }
        }
    }
}
