use super::*;
use crate::polycore::rational;

fn ring(vars: &[&str]) -> Ring {
    Ring::polynomial(vars).unwrap()
}

fn zt() -> Ring {
    let amb = ring(&["z", "t"]);
    Ring::quotient(&amb, vec![Polynomial::parse(&amb, "z*t").unwrap()]).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> IdealHandle {
    IdealHandle::parse(r, gens).unwrap()
}

fn free(r: &Ring) -> ModulePresentation {
    ModulePresentation::free(r, 1).unwrap()
}

fn sub(r: &Ring, gens: &[&str]) -> ModulePresentation {
    ModulePresentation::from_ideal(&ideal(r, gens))
}

#[test]
fn artin_rees_examples() {
    let r = ring(&["x"]);
    let m = ideal(&r, &["x"]);
    let res = strong_uniform_number(&m, &free(&r), &sub(&r, &["x^2"]), 6).unwrap();
    assert_eq!(res.s, Some(2));
    assert_eq!(res.verified_range, Some((2, 6)));
    assert!(res.weak_ar_holds);
    let res = strong_uniform_number(&m, &free(&r), &sub(&r, &["x"]), 6).unwrap();
    assert_eq!(res.s, Some(1));
    let a = zt();
    let res = strong_uniform_number(&ideal(&a, &["z", "t"]), &free(&a), &sub(&a, &["z"]), 5).unwrap();
    assert_eq!(res.s, Some(1));
    assert!(res.weak_ar_holds);
}

#[test]
fn validity_is_monotone_and_order_independent() {
    let r = ring(&["x", "y"]);
    let m = ideal(&r, &["x", "y"]);
    let a = strong_uniform_number(&m, &free(&r), &sub(&r, &["x^2*y", "y^3"]), 6).unwrap();
    let b = strong_uniform_number(&ideal(&r, &["y", "x"]), &free(&r), &sub(&r, &["y^3", "x^2*y"]), 6).unwrap();
    assert_eq!(a, b);
    let s = a.s.unwrap();
    for row in &a.table {
        if row.n >= s {
            assert_eq!(row.reduced_from_s.as_ref(), Some(&row.intersection));
        }
    }
    for n_gens in [&["x^2*y", "y^3"][..], &["x^3"], &["x*y", "y^2"]] {
        let n = sub(&r, n_gens);
        for s in 1..6 {
            if start_index_valid(&m, &free(&r), &n, s, 6).unwrap() {
                assert!(start_index_valid(&m, &free(&r), &n, s + 1, 6).unwrap());
            }
        }
    }
}

#[test]
fn containment_is_checked() {
    let r = ring(&["x", "y"]);
    let res = strong_uniform_number(&ideal(&r, &["x"]), &sub(&r, &["x"]), &sub(&r, &["y"]), 4);
    assert!(matches!(res, Err(Error::Containment(_))));
}

#[test]
fn not_found_when_the_range_is_too_short() {
    let r = ring(&["x"]);
    let res = strong_uniform_number(&ideal(&r, &["x"]), &free(&r), &sub(&r, &["x^3"]), 3).unwrap();
    assert_eq!(res.s, None);
    assert_eq!(res.describe(), "NOT_FOUND_UP_TO(3)");
}

#[test]
fn sampled_relation_types() {
    let r = ring(&["x", "y"]);
    let pts: Vec<Vec<Rational>> = [(0, 0), (1, 2), (-1, 3)]
        .iter()
        .map(|&(a, b)| vec![rational(a, 1), rational(b, 1)])
        .collect();
    let res = sample_maximal_rt(&r, None, &pts).unwrap();
    assert!(res.points.iter().all(|p| p.rt == 1));
    assert_eq!(res.max, 1);

    let a = zt();
    let res = sample_maximal_rt(&a, None, &[vec![rational(0, 1), rational(0, 1)]]).unwrap();
    assert_eq!(res.max, 2);
    assert!(matches!(
        sample_maximal_rt(&a, None, &[vec![rational(1, 1), rational(1, 1)]]),
        Err(Error::InvalidArgument(_))
    ));

    // rt of (x) on QQ[x]/(x^2): the defining module is (x^2, xT, T^2).
    let r1 = ring(&["x"]);
    let m = ModulePresentation::quotient_by(&ideal(&r1, &["x^2"]));
    let res = sample_maximal_rt(&r1, Some(&m), &[vec![rational(0, 1)]]).unwrap();
    assert_eq!(res.max, 2);
}
