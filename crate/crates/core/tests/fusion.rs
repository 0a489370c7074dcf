use std::collections::BTreeMap;

use cylfusion_core::fusion::{
    b_label, frobenius, fusion_coeffs, kac_walton_fusion, multiply_reduce, positivity_scan, FrobeniusCheck, FusionRoute,
    FusionTable,
};
use cylfusion_core::qboson::{nc_elementary, nc_gprime, nc_q_prime, nc_s_prime, OpMatrix, Route};
use cylfusion_core::symfunc::{charge_kostka, hl_p, hl_q};
use cylfusion_core::{Alcove, LaurentPoly, Partition, ZPoly};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn sizes() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for n in 2..=4 {
        for k in 1..=3 {
            v.push((n, k));
        }
    }
    v
}

#[test]
fn routes_agree_everywhere_small() {
    for (n, k) in sizes() {
        FusionTable::build(n, k, FusionRoute::Both).unwrap_or_else(|e| panic!("n={} k={}: {}", n, k, e));
    }
}

#[test]
fn routes_agree_on_rank_five_examples() {
    let pairs = [(p("3,2,2,1,1"), p("5,5,4,3,1")), (p("5,3,2,1,1"), p("5,5,2,2,1"))];
    for (mu, nu) in pairs {
        fusion_coeffs(&mu, &nu, 5, 5, FusionRoute::Both).unwrap();
    }
}

#[test]
fn entries_are_polynomials_with_kac_walton_constant_terms() {
    for (n, k) in sizes() {
        let a = Alcove::new(n, k).unwrap();
        let table = FusionTable::build(n, k, FusionRoute::Matrix).unwrap();
        for mu in &table.labels {
            for nu in &table.labels {
                let diagram = |x: &Partition| a.reduce(x).unwrap().conjugate();
                let kw = kac_walton_fusion(&diagram(mu), &diagram(nu), n, k);
                for lam in &table.labels {
                    let c = table.get(mu, nu, lam);
                    assert!(c.is_polynomial(), "n={} k={} {} {} {}", n, k, mu, nu, lam);
                    let at0 = c.at_zero().map_or(0, |x| i64::try_from(x).unwrap());
                    let want = kw.get(&diagram(lam)).copied().unwrap_or(0);
                    assert_eq!(at0, want, "n={} k={} mu={} nu={} lambda={}", n, k, mu, nu, lam);
                }
            }
        }
    }
}

#[test]
fn worked_example_constant_terms() {
    let kw = kac_walton_fusion(&p("3,1").conjugate(), &p("3,2,1"), 4, 3);
    let a = Alcove { n: 4, k: 3 };
    let got: BTreeMap<Partition, i64> =
        kw.into_iter().map(|(l, c)| (a.unreduce(&l.conjugate()).unwrap(), c)).collect();
    let want = BTreeMap::from([(p("3,2,1"), 2), (p("2,2,2"), 1), (p("4,3,3"), 1), (p("4,1,1"), 1), (p("4,4,2"), 1)]);
    assert_eq!(got, want);
}

fn graded_column(f: &cylfusion_core::fusion::QuotientElement, n: usize, mu: &Partition) -> BTreeMap<Partition, ZPoly> {
    let a = Alcove { n, k: f.k };
    let shift = mu.multiplicities(n)[n - 1] as u32;
    f.coeffs
        .iter()
        .map(|(l, c)| {
            let lam = a.unreduce(l).unwrap();
            let m = lam.multiplicities(n)[n - 1] as u32;
            // [P_μ̃] ↔ z^{-m_n(μ)} |μ⟩ on both sides
            let mut out = ZPoly::zero();
            for (d, x) in c.terms() {
                out.add_term(d + shift - m, x);
            }
            (lam, out)
        })
        .collect()
}

fn operator_column(op: &OpMatrix, mu: &Partition) -> BTreeMap<Partition, ZPoly> {
    op.apply(mu).unwrap().into_iter().collect()
}

#[test]
fn modified_pieri_rules() {
    for (n, k) in sizes() {
        let a = Alcove::new(n, k).unwrap();
        for mu in a.enumerate() {
            let mu_r = a.reduce(&mu).unwrap();
            for r in 1..n {
                let g = multiply_reduce(&hl_q(&Partition::row(r), k), &mu_r, n, k).unwrap();
                let want = operator_column(&nc_elementary(r, n, k, Route::Pieri), &mu);
                assert_eq!(graded_column(&g, n, &mu), want, "g_{} n={} k={} mu={}", r, n, k, mu);
                let e = multiply_reduce(&hl_p(&Partition::column(r), k), &mu_r, n, k).unwrap();
                let want = operator_column(&nc_gprime(r, n, k, Route::Pieri), &mu);
                assert_eq!(graded_column(&e, n, &mu), want, "e_{} n={} k={} mu={}", r, n, k, mu);
            }
        }
    }
}

#[test]
fn fusion_matrices_multiply() {
    for (n, k) in [(3, 2), (4, 2), (3, 3)] {
        let a = Alcove::new(n, k).unwrap();
        let table = FusionTable::build(n, k, FusionRoute::Matrix).unwrap();
        let q = |x: &Partition| nc_q_prime(&a.reduce(x).unwrap().conjugate(), n, k);
        for mu in &table.labels {
            for nu in &table.labels {
                let lhs = q(mu).compose(&q(nu)).at_z_one();
                let mut rhs = vec![vec![LaurentPoly::zero(); lhs.len()]; lhs.len()];
                for (lam, c) in table.row(mu, nu) {
                    let m = q(&lam).at_z_one();
                    for (i, row) in m.iter().enumerate() {
                        for (j, x) in row.iter().enumerate() {
                            rhs[i][j] = &rhs[i][j] + &(x * &c);
                        }
                    }
                }
                assert_eq!(lhs, rhs, "n={} k={} mu={} nu={}", n, k, mu, nu);
            }
        }
    }
}

#[test]
fn kostka_foulkes_from_top_state() {
    for (n, k) in sizes() {
        let a = Alcove::new(n, k).unwrap();
        let top = Partition::new(&vec![n; k]).unwrap();
        for lam in a.enumerate() {
            let lam_r = a.reduce(&lam).unwrap();
            for nu in cylfusion_core::partition::partitions_of(lam_r.size(), lam_r.size(), lam_r.size()) {
                let op = nc_s_prime(&nu.conjugate(), n, k);
                let got = op.entry(&lam, &top).unwrap().at_z_one();
                assert_eq!(got, charge_kostka(&nu, &lam_r), "n={} k={} nu={} lambda={}", n, k, nu, lam);
            }
        }
    }
}

#[test]
fn frobenius_identities() {
    for (n, k) in [(3, 2), (4, 3), (3, 3), (4, 2)] {
        let table = FusionTable::build(n, k, FusionRoute::Matrix).unwrap();
        for check in [FrobeniusCheck::Assoc, FrobeniusCheck::Eta, FrobeniusCheck::Symmetries] {
            let rep = frobenius(check, &table).unwrap();
            assert!(rep.passed(), "{}", rep);
        }
    }
}

#[test]
fn coproduct_matches_cylindric_functions() {
    for (n, k) in [(3, 1), (3, 2), (4, 2)] {
        let table = FusionTable::build(n, k, FusionRoute::Matrix).unwrap();
        let rep = frobenius(FrobeniusCheck::Coproduct, &table).unwrap();
        assert!(rep.passed(), "{}", rep);
    }
}

#[test]
fn rotated_worked_example() {
    let a = Alcove { n: 4, k: 3 };
    let mu = a.rot(&p("4,3,1")).unwrap();
    let lam = a.rot(&p("3,2,1")).unwrap();
    let f = fusion_coeffs(&mu, &p("3,2,1"), 4, 3, FusionRoute::Both).unwrap();
    assert_eq!(f[&lam], lp("2 + t - t^2"));
}

#[test]
fn counit_row() {
    let (n, k) = (4, 3);
    let a = Alcove { n, k };
    let top = p("4,4,4");
    let table = FusionTable::build(n, k, FusionRoute::Matrix).unwrap();
    for lam in &table.labels {
        for mu in &table.labels {
            let want = if *mu == a.star(lam).unwrap() { b_label(&top, n) } else { LaurentPoly::zero() };
            assert_eq!(&table.get(lam, mu, &top) * &b_label(lam, n), want);
        }
    }
}

#[test]
fn positivity_small() {
    for (n, k) in [(3, 2), (4, 2), (4, 3)] {
        let rep = positivity_scan(n, k, None).unwrap();
        assert!(rep.passed(), "n={} k={}", n, k);
        assert!(rep.checked > 0);
    }
}

#[test]
fn skew_kostka_example() {
    let op = nc_s_prime(&p("4,3,1").conjugate(), 5, 5);
    let got = op.entry(&p("5,5,3,2,2"), &p("3,2,2,1,1")).unwrap();
    assert_eq!(got.at_z_one(), lp("2 + 8t + 16t^2 + 17t^3 + 10t^4 + 3t^5"));
    assert_eq!(got.z_degrees(), vec![0]);
}
