use cylfusion_core::cylfunc::{cyl_function, CylFunction};
use cylfusion_core::partition::partitions_of;
use cylfusion_core::symfunc::{
    charge_kostka, hall_coeff, kostka_matrices, lusztig_kostka, lusztig_term, skew_poly, to_basis, StripKind, TargetBasis,
};
use cylfusion_core::{CylShape, LaurentPoly, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn check_rows(f: &cylfusion_core::symfunc::SymPoly, rows: &[(&str, &str, &str, Option<&str>)]) {
    let s = to_basis(TargetBasis::S, f);
    let hl = to_basis(TargetBasis::P, f);
    for (lam, m, sc, pc) in rows {
        let l = p(lam);
        assert_eq!(f.coeff(&l), lp(m), "m_{}", lam);
        assert_eq!(s.get(&l).cloned().unwrap_or_else(LaurentPoly::zero), lp(sc), "s_{}", lam);
        if let Some(pc) = pc {
            assert_eq!(hl.get(&l).cloned().unwrap_or_else(LaurentPoly::zero), lp(pc), "P_{}", lam);
        }
    }
}

#[test]
fn cylindric_hall_littlewood_table() {
    let shape = CylShape::new(4, 3, p("3,2,1"), 2, p("4,3,1")).unwrap();
    let f = cyl_function(CylFunction::PHl, &shape, 3);
    check_rows(
        &f,
        &[
            ("4,2", "1 - t", "1 - t", Some("1 - t")),
            ("4,1,1", "2 - 3t + t^3", "1 - 2t + t^3", Some("1 - t - t^2 + t^3")),
            ("3,3", "2 - 3t + t^3", "1 - 2t + t^3", Some("1 - t - t^2 + t^3")),
            ("3,2,1", "6 - 14t + 5t^2 + 9t^3 - 7t^4 + t^5", "2 - 8t + 5t^2 + 7t^3 - 7t^4 + t^5", Some("2 - 5t + t^2 + 6t^3 - 5t^4 + t^5")),
            (
                "2,2,2",
                "10 - 26t + 14t^2 + 16t^3 - 21t^4 + 7t^5 + t^6 - t^7",
                "1 - 3t + 4t^2 - 7t^4 + 5t^5 + t^6 - t^7",
                Some("1 - t - t^2 - t^3 + t^4 + 4t^5 - 3t^6"),
            ),
        ],
    );
    assert_eq!(f.support().len(), 5);
}

#[test]
fn ordinary_skew_comparison_table() {
    let f = skew_poly(StripKind::Psi, &p("4,4,3,2,1"), &p("4,3,1"), 3);
    check_rows(
        &f,
        &[
            ("4,2", "1", "1", Some("1")),
            ("4,1,1", "2 - t - t^2", "1 - t - t^2", Some("1 - t^2")),
            ("3,3", "2 - t - t^2", "1 - t - t^2", Some("1 - t^2")),
            ("3,2,1", "7 - 7t - 4t^2 + 4t^3", "3 - 5t - 2t^2 + 4t^3", Some("3 - 2t - 3t^2 + 2t^3")),
            ("2,2,2", "12 - 15t - 6t^2 + 11t^3 - t^4 - t^5", "1 - 3t + 3t^3 - t^4 - t^5", Some("1 - t^2 - t^3 + t^5")),
        ],
    );
}

#[test]
fn cylindric_macdonald_table() {
    let shape = CylShape::new(5, 5, p("5,3,2,1,1"), 1, p("3,2,2,1,1")).unwrap();
    let f = cyl_function(CylFunction::PPrimeMac, &shape, 4);
    check_rows(
        &f,
        &[
            ("4,2,2", "1 + t", "1 + t", None),
            ("4,2,1,1", "2 + 3t + t^2", "1 + 2t + t^2", None),
            ("3,3,2", "2 + 3t + t^2", "1 + 2t + t^2", None),
            ("3,3,1,1", "4 + 8t + 5t^2 + t^3", "1 + 3t + 3t^2 + t^3", None),
            ("3,2,2,1", "11 + 22t + 16t^2 + 4t^3", "3 + 8t + 9t^2 + 3t^3", None),
            ("2,2,2,2", "24 + 52t + 45t^2 + 16t^3 + t^4", "1 + 4t + 6t^2 + 5t^3 + t^4", None),
        ],
    );
}

#[test]
fn kostka_foulkes_breakdowns() {
    let want = lp("t^3 + t^4 + t^5");
    let lam = p("3,3,2");
    let mu = p("2,2,2,2");
    let km = kostka_matrices(8, 8);
    assert_eq!(km.kt_entry(&lam, &mu), want);
    assert_eq!(charge_kostka(&lam, &mu), want);
    assert_eq!(lusztig_kostka(&lam, &mu, 4), want);

    // signed ψ' sums over tableaux of shape μ' = (4,4)
    let sums = skew_poly(StripKind::PsiPrime, &p("4,4"), &Partition::empty(), 3);
    let psi_rows = [
        (1, "3,3,2", "1 + 2t + 3t^2 + 3t^3 + 2t^4 + t^5"),
        (-1, "4,2,2", "1 + t + 2t^2 + t^3 + t^4"),
        (-1, "4,3,1", "1 + t + t^2 + t^3"),
        (1, "4,4", "1"),
    ];
    let mut total = LaurentPoly::zero();
    for (sign, weight, value) in psi_rows {
        let c = sums.coeff(&p(weight));
        assert_eq!(c, lp(value), "weight {}", weight);
        total = &total + &(&c * &LaurentPoly::from_coeffs(0, &[sign]));
    }
    assert_eq!(total, want);

    let lusztig_rows = [(1, [6, 5, 3, 0], "t^2 + 3t^3 + 2t^4 + t^5"), (-1, [5, 6, 3, 0], "t^2 + t^3 + t^4"), (-1, [6, 3, 5, 0], "t^3")];
    let mut total = LaurentPoly::zero();
    for (sign, w, value) in lusztig_rows {
        let term = lusztig_term(&w, &mu, 4);
        assert_eq!(term, lp(value), "{:?}", w);
        total = &total + &(&term * &LaurentPoly::from_coeffs(0, &[sign]));
    }
    assert_eq!(total, want);
}

#[test]
fn kostka_foulkes_three_routes_exhaustive() {
    for size in 1..=8 {
        let km = kostka_matrices(size, size);
        let labels = partitions_of(size, size, size);
        for lam in &labels {
            for mu in &labels {
                let tri = km.kt_entry(lam, mu);
                assert_eq!(tri, charge_kostka(lam, mu), "{} {}", lam, mu);
                assert_eq!(tri, lusztig_kostka(lam, mu, mu.len().max(lam.len())), "{} {}", lam, mu);
            }
        }
    }
}

#[test]
fn hall_rho_breakdown() {
    let lam = p("5,5,3,2,2");
    let mu = p("3,2,2,1,1");
    let nu = p("4,3,1");
    let rows = [
        ("4,3,1", "2 + 3t + t^2 - t^3 - t^4", "1"),
        ("4,2,2", "1 + t", "t"),
        ("4,2,1,1", "1 + 2t + t^2", "t + t^2"),
        ("4,1,1,1,1", "0", "t^3 + t^4 + t^5"),
        ("3,3,2", "1 + t - t^2 - t^3", "t + t^2"),
        ("3,3,1,1", "2 + 2t - 2t^3 - t^4", "t + 2t^2 + t^3"),
        ("3,2,2,1", "1 + 2t + t^2", "2t^2 + 2t^3 + t^4"),
        ("3,2,1,1,1", "1 + t", "t^2 + 2t^3 + 3t^4 + 2t^5 + t^6"),
        ("2,2,2,2", "0", "t^3 + t^4 + 2t^5 + 2t^6 + t^7"),
        ("2,2,2,1,1", "0", "t^3 + 3t^4 + 3t^5 + 3t^6 + 2t^7 + t^8"),
    ];
    let mut skew = LaurentPoly::zero();
    for (rho, f, k) in rows {
        let rho = p(rho);
        let hall = hall_coeff(&mu, &rho).get(&lam).cloned().unwrap_or_else(LaurentPoly::zero);
        assert_eq!(hall, lp(f), "f rho={}", rho);
        let kf = charge_kostka(&nu, &rho);
        assert_eq!(kf, lp(k), "K rho={}", rho);
        skew = &skew + &(&kf * &hall);
    }
    assert_eq!(skew, lp("2 + 8t + 16t^2 + 17t^3 + 10t^4 + 3t^5"));
}
