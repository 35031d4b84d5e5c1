use super::*;
use crate::idealops::ideal_equal;

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

fn same_ideal(h: &BigradedIdealHandle, gens: &[&str]) -> bool {
    let ext = h.defining_ideal().ring().clone();
    ideal_equal(h.defining_ideal(), &ideal(&ext, gens)).unwrap()
}

#[test]
fn rees_ideal_examples() {
    let r1 = ring(&["x"]);
    assert!(rees_ideal(&ideal(&r1, &["x"])).unwrap().defining_ideal().is_zero());
    let r = ring(&["x", "y"]);
    let h = rees_ideal(&ideal(&r, &["x", "y"])).unwrap();
    assert_eq!(h.t_variables(), &["T1".to_string(), "T2".to_string()]);
    assert!(same_ideal(&h, &["y*T1 - x*T2"]));
    let h = rees_ideal(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap();
    assert!(same_ideal(&h, &["y*T1 - x*T2", "y*T2 - x*T3", "T2^2 - T1*T3"]));
    let h = rees_ideal(&ideal(&zt(), &["z", "t"])).unwrap();
    assert!(same_ideal(&h, &["z*t", "t*T1", "z*T2", "T1*T2"]));
}

#[test]
fn t_names_avoid_base_variables() {
    let r = ring(&["T1", "y"]);
    let h = rees_ideal(&ideal(&r, &["T1", "y"])).unwrap();
    assert_eq!(h.t_variables(), &["T1_".to_string(), "T2".to_string()]);
}

#[test]
fn multi_rees_examples() {
    let r = ring(&["x", "y"]);
    assert!(multi_rees_ideal(&ideal(&r, &["x"]), &ideal(&r, &["y"]))
        .unwrap()
        .defining_ideal()
        .is_zero());
    let a = zt();
    let h = multi_rees_ideal(&ideal(&a, &["z"]), &ideal(&a, &["t"])).unwrap();
    assert!(same_ideal(&h, &["z*t", "t*U1", "z*V1", "U1*V1"]));
    // x, x*u, x*v are algebraically independent, so A[xu, xv] has no relation.
    let r1 = ring(&["x"]);
    let h = multi_rees_ideal(&ideal(&r1, &["x"]), &ideal(&r1, &["x"])).unwrap();
    assert!(h.defining_ideal().is_zero());
}

#[test]
fn relation_type_examples() {
    let r = ring(&["x", "y"]);
    assert_eq!(relation_type(&ideal(&r, &["x", "y"]), None).unwrap().rt, 1);
    let res = relation_type(&ideal(&r, &["x^2", "x*y", "y^2"]), None).unwrap();
    assert_eq!(res.rt, 2);
    assert_eq!(res.minimal_generator_t_degrees, vec![1, 1, 2]);
    assert_eq!(relation_type(&ideal(&zt(), &["z", "t"]), None).unwrap().rt, 2);
    assert_eq!(relation_type(&IdealHandle::zero(&r), None).unwrap().rt, 1);
}

#[test]
fn regular_sequences_have_relation_type_one() {
    let r = ring(&["x", "y", "z"]);
    for gens in [vec!["x"], vec!["x", "y"], vec!["x", "y", "z"]] {
        assert_eq!(relation_type(&ideal(&r, &gens), None).unwrap().rt, 1);
    }
}

#[test]
fn presentation_independence() {
    let r = ring(&["x", "y"]);
    let base = relation_type(&ideal(&r, &["x^2", "x*y", "y^2"]), None).unwrap().rt;
    for gens in [vec!["y^2", "x^2", "x*y"], vec!["x^2", "x*y", "y^2", "x^3"]] {
        assert_eq!(relation_type(&ideal(&r, &gens), None).unwrap().rt, base);
    }
    let a = relation_type(&ideal(&r, &["x", "y"]), None).unwrap().rt;
    let b = relation_type(&ideal(&r, &["x", "y", "x*y"]), None).unwrap().rt;
    assert_eq!(a, b);
}

#[test]
fn effective_relations_examples() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x", "y"]);
    let e1 = effective_relations_dims(&i, None, 1, 4).unwrap();
    assert_eq!(e1.get(&[0]), 0);
    assert_eq!(e1.get(&[1]), 1);
    let e2 = effective_relations_dims(&i, None, 2, 6).unwrap();
    assert!(e2.is_zero());
    let i2 = ideal(&r, &["x^2", "x*y", "y^2"]);
    let e2 = effective_relations_dims(&i2, None, 2, 6).unwrap();
    assert_eq!(e2.get(&[0]), 1);
    assert_eq!(e2.total(), 1);
    for n in 3..=4 {
        assert!(effective_relations_dims(&i2, None, n, 6).unwrap().is_zero());
    }
}

#[test]
fn effective_dims_vanish_above_rt() {
    let r = ring(&["x", "y"]);
    for gens in [vec!["x", "y"], vec!["x^2", "x*y", "y^2"], vec!["x^3", "y^3"], vec!["x^2", "y^3"]] {
        let res = relation_type(&ideal(&r, &gens), None).unwrap();
        for (k, _) in res.effective_dims.entries() {
            assert!(k[0] <= res.rt as i64, "{gens:?}: nonzero E at {k:?}");
        }
        assert!(res.effective_dims.entries().any(|(k, _)| k[0] == res.rt as i64) || res.rt == 1);
    }
}

#[test]
fn rees_module_examples() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x", "y"]);
    let free = ModulePresentation::free(&r, 1).unwrap();
    let rm = rees_module_ideal(&i, &free).unwrap();
    let h = rees_ideal(&i).unwrap();
    let rels: Vec<Polynomial> =
        rm.presentation.relations().iter().map(|v| v.components()[0].clone()).collect();
    assert!(ideal_equal(&IdealHandle::new(h.defining_ideal().ring(), rels).unwrap(), h.defining_ideal()).unwrap());

    // I = (x), M = A/(x): IM = 0, so the module lives in T-degree 0.
    let r1 = ring(&["x"]);
    let m = ModulePresentation::quotient_by(&ideal(&r1, &["x"]));
    let rm = rees_module_ideal(&ideal(&r1, &["x"]), &m).unwrap();
    let dims = rm.hilbert_dims(3, 3).unwrap();
    assert_eq!(dims.get(&[0, 0]), 1);
    assert_eq!(dims.total(), 1);

    // M = A^2: two copies of the Rees ideal.
    let m2 = ModulePresentation::free(&r, 2).unwrap();
    let rm = rees_module_ideal(&i, &m2).unwrap();
    let res = relation_type(&i, Some(&m2)).unwrap();
    assert_eq!(res.rt, 1);
    assert_eq!(res.minimal_generator_t_degrees, vec![1, 1]);
    assert_eq!(rm.presentation.relations().len(), 2);
}

#[test]
fn relation_type_of_truncated_module() {
    // rt((x); ℚ[x]/(x^2)) = 2: the kernel is (x^2, x*T, T^2).
    let r = ring(&["x"]);
    let m = ModulePresentation::quotient_by(&ideal(&r, &["x^2"]));
    let res = relation_type(&ideal(&r, &["x"]), Some(&m)).unwrap();
    assert_eq!(res.rt, 2);
}

#[test]
fn assoc_graded_examples() {
    let r = ring(&["x", "y"]);
    let g = assoc_graded_ideal(&ideal(&r, &["x", "y"])).unwrap();
    assert!(same_ideal(&g, &["x", "y"]));
    let dims = g.hilbert_dims(3, 2).unwrap();
    for n in 0..=3 {
        assert_eq!(dims.get(&[n, 0]), n as u64 + 1);
        assert_eq!(dims.get(&[n, 1]), 0);
    }
    let g = assoc_graded_ideal(&ideal(&zt(), &["z", "t"])).unwrap();
    assert!(same_ideal(&g, &["z", "t", "T1*T2"]));
    let dims = g.hilbert_dims(4, 3).unwrap();
    let by_n: Vec<u64> = (0..=4).map(|n| (0..=3).map(|d| dims.get(&[n, d])).sum()).collect();
    assert_eq!(by_n, vec![1, 2, 2, 2, 2]);
    let r1 = ring(&["x"]);
    let g = assoc_graded_ideal(&ideal(&r1, &["x"])).unwrap();
    assert!(same_ideal(&g, &["x"]));
}

#[test]
fn graded_relation_type_matches_rees() {
    let r = ring(&["x", "y"]);
    let cases: Vec<(Ring, Vec<&str>)> = vec![
        (r.clone(), vec!["x", "y"]),
        (r.clone(), vec!["x^2", "x*y", "y^2"]),
        (r.clone(), vec!["x^3", "x*y^2", "y^3"]),
        (zt(), vec!["z", "t"]),
    ];
    for (ring, gens) in cases {
        let i = ideal(&ring, &gens);
        let rees = relation_type(&i, None).unwrap().rt;
        let gr = relation_type_of_graded(&assoc_graded_presentation(&i, None).unwrap()).rt;
        assert_eq!(rees, gr, "{gens:?}");
    }
}

#[test]
fn tensor_with_base_ideal_does_not_raise_generation_degree() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2", "x*y", "y^2"]);
    let rees = rees_ideal(&i).unwrap();
    let rt = relation_type(&i, None).unwrap().rt;
    let ext = rees.defining_ideal().ring().clone();
    let ord = ModuleOrder::pot(TermOrder::DegRevLex);
    for j in [vec!["z"], vec!["x*z", "y^2"], vec!["x^3", "z^2"]] {
        let mut gens = rees.defining_ideal().generators().to_vec();
        for g in j {
            gens.push(Polynomial::parse(&r, g).unwrap().extend_to(&ext).unwrap());
        }
        let vecs: Vec<Vector> = gens.iter().map(|g| Vector::from_component(g.terms(), 0, &ord)).collect();
        let (d, _) = t_generation_degree(rees.grading(), 1, &vecs);
        assert!(d <= rt);
    }
}
