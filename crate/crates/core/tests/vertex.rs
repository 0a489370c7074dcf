use cylfusion_core::cylfunc::{cyl_function, CylFunction};
use cylfusion_core::qboson::{monodromy_op, nc_elementary, nc_gprime, MonodromyKind, OpMatrix, Route};
use cylfusion_core::symfunc::{skew_poly, StripKind};
use cylfusion_core::vertex::*;
use cylfusion_core::{Alcove, CylShape, LaurentPoly, Partition};
use proptest::prelude::*;

fn chain(ops: &[OpMatrix]) -> OpMatrix {
    let mut acc = ops.last().unwrap().clone();
    for op in ops[..ops.len() - 1].iter().rev() {
        acc = op.compose(&acc);
    }
    acc
}

fn open_kind(left: usize, right: usize) -> MonodromyKind {
    match (left, right) {
        (0, 0) => MonodromyKind::A,
        (1, 0) => MonodromyKind::B,
        (0, 1) => MonodromyKind::C,
        _ => MonodromyKind::D,
    }
}

fn level_after(kind: MonodromyKind, k: usize) -> Option<usize> {
    match kind {
        MonodromyKind::B => Some(k + 1),
        MonodromyKind::C => k.checked_sub(1),
        _ => Some(k),
    }
}

/// Coefficient of `x^α` in `<λ|X(x_1)...X(x_ℓ)|μ>` from the operator side.
fn operator_coeff(kind: MonodromyKind, alpha: &[usize], lam: &Partition, mu: &Partition, n: usize, k: usize) -> Option<LaurentPoly> {
    let mut ops = Vec::new();
    let mut level = k;
    for &r in alpha.iter().rev() {
        if r > n {
            return Some(LaurentPoly::zero());
        }
        ops.push(monodromy_op(kind, r, n, level));
        level = level_after(kind, level)?;
    }
    ops.reverse();
    let op = chain(&ops);
    Some(op.entry(lam, mu).ok()?.at_z_one())
}

#[test]
fn open_boundaries_match_operators_and_skew_functions() {
    for n in 2..=4 {
        for k in 1..=3 {
            for rows in 1..=2 {
                for (left, right) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                    if left < right && rows > k {
                        continue;
                    }
                    let kind = open_kind(left, right);
                    let out_level = (k + rows * left) - rows * right;
                    for mu in (Alcove { n, k }).enumerate() {
                        let all = partition_functions(Model::L, Boundary::Open { left, right }, &mu, n, k, rows).unwrap();
                        for lam in (Alcove { n, k: out_level }).enumerate() {
                            let z = all.get(&lam).cloned();
                            let coeff = |alpha: &[usize]| z.as_ref().map(|z| z.coeff(0, alpha)).unwrap_or_else(LaurentPoly::zero);
                            if let Some(z) = &z {
                                assert!(z.is_symmetric());
                            }
                            let max = n;
                            for a0 in 0..=max {
                                for a1 in 0..=if rows == 2 { max } else { 0 } {
                                    let alpha: Vec<usize> = [a0, a1][..rows].to_vec();
                                    let op = operator_coeff(kind, &alpha, &lam, &mu, n, k).unwrap();
                                    assert_eq!(coeff(&alpha), op, "{:?} {}<-{} α={:?}", kind, lam, mu, alpha);
                                    // skew Hall-Littlewood side
                                    let expect = match kind {
                                        MonodromyKind::A | MonodromyKind::B => {
                                            skew_poly(StripKind::Phi, &lam, &mu, rows).monomial_coeff(&alpha)
                                        }
                                        _ => {
                                            let dual: Vec<usize> = alpha.iter().map(|&a| n - a).collect();
                                            skew_poly(StripKind::Psi, &mu, &lam, rows).monomial_coeff(&dual)
                                        }
                                    };
                                    assert_eq!(op, expect, "{:?} {}<-{} α={:?}", kind, lam, mu, alpha);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn periodic_model_l_is_cylindric_q() {
    for n in 2..=4 {
        for k in 1..=3 {
            for rows in 1..=2.min(k) {
                let labels = (Alcove { n, k }).enumerate();
                for mu in &labels {
                    let all = partition_functions(Model::L, Boundary::Periodic, mu, n, k, rows).unwrap();
                    for lam in &labels {
                        let Some(z) = all.get(lam) else { continue };
                        assert!(z.is_symmetric());
                        for d in z.windings() {
                            let shape = CylShape::new(n, k, lam.clone(), d, mu.clone()).unwrap();
                            let q = cyl_function(CylFunction::QHl, &shape, rows);
                            assert_eq!(z.sym_component(d).unwrap(), q, "{}/{}/{}", lam, d, mu);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn periodic_models_match_transfer_matrices() {
    for n in 2..=4 {
        for k in 1..=3 {
            for rows in 1..=2 {
                for model in [Model::L, Model::LPrime] {
                    if (model == Model::L && rows > k) || (model == Model::LPrime && rows > n - 1) {
                        continue;
                    }
                    let labels = (Alcove { n, k }).enumerate();
                    let maxdeg = if model == Model::L { n } else { n * k };
                    let op = |r: usize| match model {
                        Model::L => nc_elementary(r, n, k, Route::Pieri),
                        Model::LPrime => nc_gprime(r, n, k, Route::Pieri),
                    };
                    for mu in &labels {
                        let all = partition_functions(model, Boundary::Periodic, mu, n, k, rows).unwrap();
                        for a0 in 0..=maxdeg {
                            for a1 in 0..=if rows == 2 { maxdeg } else { 0 } {
                                let alpha: Vec<usize> = [a0, a1][..rows].to_vec();
                                let prod = chain(&alpha.iter().map(|&r| (*op(r)).clone()).collect::<Vec<_>>());
                                for lam in &labels {
                                    let entry = prod.entry(lam, mu).unwrap();
                                    for d in 0..=rows * k {
                                        let z = all.get(lam).map(|z| z.coeff(d, &alpha)).unwrap_or_else(LaurentPoly::zero);
                                        assert_eq!(z, entry.coeff(d as u32), "{:?} {}/{}/{} α={:?}", model, lam, d, mu, alpha);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn periodic_model_l_prime_is_cylindric_macdonald() {
    for n in 2..=4 {
        for k in 1..=3 {
            for rows in 1..=2.min(n - 1) {
                let labels = (Alcove { n, k }).enumerate();
                for mu in &labels {
                    let all = partition_functions(Model::LPrime, Boundary::Periodic, mu, n, k, rows).unwrap();
                    for lam in &labels {
                        let Some(z) = all.get(lam) else { continue };
                        assert!(z.is_symmetric());
                        for d in z.windings() {
                            let shape = CylShape::new(n, k, lam.clone(), d, mu.clone()).unwrap();
                            let p = cyl_function(CylFunction::PPrimeMac, &shape, rows);
                            assert_eq!(z.sym_component(d).unwrap(), p, "{}/{}/{}", lam, d, mu);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn yang_baxter_sectors() {
    for kind in [YbeKind::RL, YbeKind::RpLp, YbeKind::RppLLp] {
        for total in 0..=3 {
            let r = ybe_check(kind, total);
            assert!(r.passed(), "{}", r);
            assert!(r.dimension > 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn periodic_components_are_symmetric(n in 2usize..=4, k in 1usize..=3, idx in 0usize..64, lprime in any::<bool>()) {
        let model = if lprime { Model::LPrime } else { Model::L };
        let rows = if lprime { (n - 1).min(3) } else { k.min(3) };
        let labels = (Alcove { n, k }).enumerate();
        let mu = &labels[idx % labels.len()];
        for z in partition_functions(model, Boundary::Periodic, mu, n, k, rows).unwrap().values() {
            prop_assert!(z.is_symmetric());
        }
    }
}
