use super::*;

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

fn p(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

#[test]
fn power_examples() {
    let r = ring(&["x", "y"]);
    let sq = ideal_power(&ideal(&r, &["x", "y"]), 2);
    assert!(ideal_equal(&sq, &ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
    assert_eq!(sq.generators().len(), 3);
    let cube = ideal_power(&ideal(&r, &["x"]), 3);
    assert_eq!(cube.generators(), &[p(&r, "x^3")]);
    assert!(ideal_power(&ideal(&r, &["x"]), 0).is_unit());
    let a = zt();
    let zz = ideal_power(&ideal(&a, &["z", "t"]).product(&IdealHandle::unit(&a)).unwrap(), 1);
    assert_eq!(zz.generators().len(), 2);
    let zsq = ideal_power(&ideal(&a, &["z"]), 2);
    assert_eq!(zsq.generators(), &[p(&a, "z^2")]);
    // (z + t)^2 = z^2 + t^2 in A.
    let s = ideal_power(&ideal(&a, &["z + t"]), 2);
    assert_eq!(s.generators(), &[p(&a, "z^2 + t^2")]);
}

#[test]
fn intersection_examples() {
    let r = ring(&["x", "y"]);
    let i = ideal_intersection(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert!(ideal_equal(&i, &ideal(&r, &["x*y"])).unwrap());
    let i = ideal_intersection(&ideal(&r, &["x", "y"]), &ideal(&r, &["x"])).unwrap();
    assert!(ideal_equal(&i, &ideal(&r, &["x"])).unwrap());
    let a = zt();
    let i = ideal_intersection(&ideal(&a, &["z"]), &ideal(&a, &["t"])).unwrap();
    assert!(i.is_zero());
}

#[test]
fn module_intersection_examples() {
    use crate::groebner::FreeModuleElem;
    let r = ring(&["x"]);
    let u = ModulePresentation::from_ideal(&ideal(&r, &["x^3"]));
    let v = ModulePresentation::from_ideal(&ideal(&r, &["x^2"]));
    let w = module_intersection(&u, &v).unwrap();
    assert_eq!(w.generators().len(), 1);
    assert_eq!(w.generators()[0].components()[0], p(&r, "x^3"));

    let r2 = ring(&["x", "y"]);
    let u = ModulePresentation::submodule(
        &r2,
        2,
        vec![FreeModuleElem::new(&r2, vec![p(&r2, "x"), p(&r2, "0")]).unwrap()],
    )
    .unwrap();
    let v = ModulePresentation::submodule(
        &r2,
        2,
        vec![FreeModuleElem::new(&r2, vec![p(&r2, "0"), p(&r2, "y")]).unwrap()],
    )
    .unwrap();
    assert!(module_intersection(&u, &v).unwrap().generators().is_empty());

    for a in 1..=3 {
        for b in 1..=3 {
            let u = ModulePresentation::from_ideal(&ideal(&r2, &[&format!("x^{a}")]));
            let v = ModulePresentation::from_ideal(&ideal(&r2, &[&format!("y^{b}")]));
            let w = module_intersection(&u, &v).unwrap();
            assert_eq!(w.generators().len(), 1);
            assert_eq!(w.generators()[0].components()[0], p(&r2, &format!("x^{a}*y^{b}")));
        }
    }
    let cok = ModulePresentation::quotient_by(&ideal(&r2, &["x"]));
    let sub = ModulePresentation::from_ideal(&ideal(&r2, &["y"]));
    assert!(matches!(module_intersection(&cok, &sub), Err(Error::Unsupported(_))));
    assert!(matches!(module_intersection(&sub, &u), Err(Error::Dimension(_))));
}

#[test]
fn module_intersection_matches_ideal_intersection() {
    let r = ring(&["x", "y", "z"]);
    let cases = [
        (vec!["x^2", "y*z"], vec!["x*y", "z^2"]),
        (vec!["x - y", "z^2"], vec!["x^2", "y"]),
        (vec!["x*y*z"], vec!["x^2", "y^2", "z^2"]),
    ];
    for (a, b) in cases {
        let (i, j) = (ideal(&r, &a), ideal(&r, &b));
        let via_ideal = ideal_intersection(&i, &j).unwrap();
        let m = module_intersection(
            &ModulePresentation::from_ideal(&i),
            &ModulePresentation::from_ideal(&j),
        )
        .unwrap();
        let gens = m.generators().iter().map(|g| g.components()[0].clone()).collect();
        assert!(ideal_equal(&via_ideal, &IdealHandle::new(&r, gens).unwrap()).unwrap());
        let prod = i.product(&j).unwrap();
        assert!(via_ideal.contains_ideal(&prod).unwrap());
        assert!(i.contains_ideal(&via_ideal).unwrap());
        assert!(j.contains_ideal(&via_ideal).unwrap());
    }
}

#[test]
fn colon_examples() {
    let r = ring(&["x", "y"]);
    let c = ideal_colon(&ideal(&r, &["x^2*y"]), &p(&r, "y")).unwrap();
    assert!(ideal_equal(&c, &ideal(&r, &["x^2"])).unwrap());
    let c = ideal_colon(&ideal(&r, &["x"]), &p(&r, "y")).unwrap();
    assert!(ideal_equal(&c, &ideal(&r, &["x"])).unwrap());
    let a = zt();
    let c = ideal_colon(&IdealHandle::zero(&a), &p(&a, "z")).unwrap();
    assert!(ideal_equal(&c, &ideal(&a, &["t"])).unwrap());
    assert!(matches!(
        ideal_colon(&ideal(&r, &["x"]), &Polynomial::zero(&r)),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn equality_and_membership() {
    let r = ring(&["x", "y"]);
    assert!(ideal_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "x + y"])).unwrap());
    assert!(membership(&p(&r, "x^2"), &ideal(&r, &["x"])).unwrap());
    assert!(!membership(&p(&r, "x"), &ideal(&r, &["x^2"])).unwrap());
}

#[test]
fn hilbert_examples() {
    let r = ring(&["x", "y"]);
    let d = hilbert_dims(&ideal(&r, &["x^2", "x*y", "y^2"]), 2).unwrap();
    assert_eq!(d.values(2), vec![1, 2, 0]);
    let d = hilbert_dims(&ideal(&r, &["x^2", "x*y"]), 3).unwrap();
    assert_eq!(d.values(3), vec![1, 2, 1, 1]);
    let d = hilbert_dims(&IdealHandle::zero(&zt()), 3).unwrap();
    assert_eq!(d.values(3), vec![1, 2, 2, 2]);
    assert!(matches!(
        hilbert_dims(&ideal(&r, &["x^2 + y"]), 3),
        Err(Error::NotHomogeneous(_))
    ));
}

#[test]
fn hilbert_additivity() {
    let r = ring(&["x", "y", "z"]);
    for gens in [vec!["x^2", "y*z"], vec!["x*y - z^2", "x^3"], vec!["x", "y^2", "z^3"]] {
        let i = ideal(&r, &gens);
        let quot = hilbert_dims(&i, 6).unwrap();
        let sub = hilbert_dims(&ModulePresentation::from_ideal(&i), 6).unwrap();
        let whole = hilbert_dims(&IdealHandle::zero(&r), 6).unwrap();
        for d in 0..=6 {
            assert_eq!(quot.get(&[d]) + sub.get(&[d]), whole.get(&[d]));
        }
    }
}

#[test]
fn powers_multiply() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2 - y*z", "x*y"]);
    for (a, b) in [(1, 1), (1, 2), (2, 1)] {
        let lhs = ideal_power(&i, a).product(&ideal_power(&i, b)).unwrap();
        assert!(ideal_equal(&lhs, &ideal_power(&i, a + b)).unwrap());
    }
}

#[test]
fn colon_properties() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2*y", "y*z^2", "x*z"]);
    for f in ["x", "y*z", "x + z"] {
        let f = p(&r, f);
        let c = ideal_colon(&i, &f).unwrap();
        for g in c.generators() {
            assert!(membership(&g.checked_mul(&f).unwrap(), &i).unwrap());
        }
        assert!(c.contains_ideal(&i).unwrap());
        // Independent route: (I ∩ (f)) / f.
        let inter = ideal_intersection(&i, &IdealHandle::new(&r, vec![f.clone()]).unwrap()).unwrap();
        let quot: Vec<Polynomial> = inter.generators().iter().map(|g| g.exact_div(&f).unwrap()).collect();
        assert!(ideal_equal(&c, &IdealHandle::new(&r, quot).unwrap()).unwrap());
    }
    // y is regular modulo (x): colon equals the ideal.
    let j = ideal(&r, &["x"]);
    assert!(ideal_equal(&ideal_colon(&j, &p(&r, "y")).unwrap(), &j).unwrap());
}

#[test]
fn relations_must_lie_in_the_span() {
    use crate::groebner::FreeModuleElem;
    let r = ring(&["x", "y"]);
    let g = vec![FreeModuleElem::new(&r, vec![p(&r, "x")]).unwrap()];
    let bad = vec![FreeModuleElem::new(&r, vec![p(&r, "y")]).unwrap()];
    assert!(matches!(ModulePresentation::new(&r, 1, g.clone(), bad), Err(Error::Containment(_))));
    let good = vec![FreeModuleElem::new(&r, vec![p(&r, "x*y")]).unwrap()];
    let m = ModulePresentation::new(&r, 1, g, good).unwrap();
    // (x)/(xy) has dims 0,1,1,1,...
    assert_eq!(hilbert_dims(&m, 3).unwrap().values(3), vec![0, 1, 1, 1]);
}
