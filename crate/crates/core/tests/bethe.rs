use cylfusion_core::bethe::{idempotent_defect, solve, verify_bethe, verlinde_deviation};
use cylfusion_core::fusion::{FusionRoute, FusionTable};
use num_complex::Complex64;

fn t(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn completeness_and_verlinde_grid() {
    for n in 3..=4 {
        for k in 1..=3 {
            let set = solve(n, k, t(0.25)).unwrap();
            let rep = verify_bethe(&set).unwrap();
            let table = FusionTable::build(n, k, FusionRoute::Matrix).unwrap();
            let dev = verlinde_deviation(&set, &table);
            println!("n={} k={} {:?} verlinde={:.2e}", n, k, rep, dev);
            assert!(rep.passed(), "n={} k={}: {:?}", n, k, rep.failures());
            assert_eq!(rep.count, rep.expected);
            assert!(dev < 1e-6, "n={} k={} deviation {}", n, k, dev);
        }
    }
}

#[test]
fn verlinde_three_two_tight() {
    let set = solve(3, 2, t(0.25)).unwrap();
    let table = FusionTable::build(3, 2, FusionRoute::Matrix).unwrap();
    assert!(verlinde_deviation(&set, &table) < 1e-7);
}

#[test]
fn verlinde_four_three_other_t() {
    let set = solve(4, 3, t(0.3)).unwrap();
    let table = FusionTable::build(4, 3, FusionRoute::Matrix).unwrap();
    assert!(verlinde_deviation(&set, &table) < 1e-6);
}

#[test]
fn idempotents() {
    for (n, k) in [(3, 2), (4, 2)] {
        let set = solve(n, k, t(0.25)).unwrap();
        let table = FusionTable::build(n, k, FusionRoute::Matrix).unwrap();
        let d = idempotent_defect(&set, &table);
        assert!(d < 1e-8, "n={} k={} defect {}", n, k, d);
    }
}

#[test]
fn solutions_are_reproducible() {
    let a = solve(4, 2, t(0.25)).unwrap();
    let b = solve(4, 2, t(0.25)).unwrap();
    for (x, y) in a.solutions.iter().zip(&b.solutions) {
        for (p, q) in x.roots.iter().zip(&y.roots) {
            assert!((p - q).norm() < 1e-12);
        }
    }
}

#[test]
fn json_report_fields() {
    let set = solve(3, 2, t(0.25)).unwrap();
    let v = set.to_json();
    assert_eq!(v["solutions"].as_array().unwrap().len(), 6);
    let rep = serde_json::to_value(verify_bethe(&set).unwrap()).unwrap();
    assert!(rep["gram_offdiag"].as_f64().unwrap() < 1e-8);
}
