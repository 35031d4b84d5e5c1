use super::*;
use crate::idealops::ideal_power;
use crate::polycore::{Polynomial, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

fn cyclic(r: &Ring, a: &[&str], b: &[&str], dmax: i64) -> TorResult {
    tor1_cyclic(&ideal(r, a), &ideal(r, b), dmax).unwrap()
}

#[test]
fn tor1_examples() {
    let r = ring(&["x", "y"]);
    assert!(cyclic(&r, &["x"], &["y"], 6).is_zero);

    let a = zt();
    let t = tor1(&ideal(&a, &["z"]), &ModulePresentation::from_ideal(&ideal(&a, &["t"])), 6).unwrap();
    assert!(!t.is_zero);
    assert_eq!(t.graded_dims.values(4), vec![0, 0, 1, 0, 0]);

    let r1 = ring(&["x"]);
    let t = cyclic(&r1, &["x"], &["x"], 5);
    assert_eq!(t.graded_dims.values(3), vec![0, 1, 0, 0]);
    assert_eq!(t.index, 1);
}

#[test]
fn tor2_examples() {
    let r = ring(&["x", "y"]);
    assert!(tor2_cyclic(&ideal(&r, &["x"]), &ideal(&r, &["y"]), 6).unwrap().is_zero);

    let a = zt();
    let t = tor2_cyclic(&ideal(&a, &["z"]), &ideal(&a, &["t"]), 6).unwrap();
    assert_eq!(t.index, 2);
    assert_eq!(t.graded_dims.values(4), vec![0, 0, 1, 0, 0]);

    let t = tor2_cyclic(&ideal(&r, &["x", "y"]), &ideal(&r, &["x", "y"]), 6).unwrap();
    assert_eq!(t.graded_dims.values(4), vec![0, 0, 1, 0, 0]);
}

#[test]
fn shortcut_oracle_examples() {
    let r = ring(&["x", "y"]);
    assert!(tor1_shortcut_oracle(&ideal(&r, &["x"]), &ideal(&r, &["y"]), 6).unwrap().is_zero());
    let r1 = ring(&["x"]);
    let d = tor1_shortcut_oracle(&ideal(&r1, &["x"]), &ideal(&r1, &["x"]), 6).unwrap();
    assert_eq!(d.values(2), vec![0, 1, 0]);
    let a = zt();
    assert!(tor1_shortcut_oracle(&ideal(&a, &["z"]), &ideal(&a, &["t"]), 6).unwrap().is_zero());
}

#[test]
fn tor1_of_quotient_ring_data_is_over_the_quotient() {
    // Over QQ[z,t] the pair (z), (t) is Tor-independent; over QQ[z,t]/(zt)
    // the Tor_1 still vanishes but Tor_2 does not.
    let a = zt();
    for p in 1..=3 {
        for q in 1..=3 {
            let i = ideal_power(&ideal(&a, &["z"]), p);
            let j = ideal_power(&ideal(&a, &["t"]), q);
            assert!(tor1_cyclic(&i, &j, 8).unwrap().is_zero, "p={p} q={q}");
        }
    }
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, r: &Ring) -> IdealHandle {
    let n = r.nvars();
    let count = rng.gen_range(1..=3);
    let gens: Vec<String> = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=3);
            let mut exps = vec![0u32; n];
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            let parts: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| format!("{}^{}", r.variables()[v], e))
                .collect();
            parts.join("*")
        })
        .collect();
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    ideal(r, &refs)
}

#[test]
fn presentation_formula_matches_shortcut_and_is_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let r = ring(&["x", "y", "z"]);
    for _ in 0..12 {
        let i = random_monomial_ideal(&mut rng, &r);
        let j = random_monomial_ideal(&mut rng, &r);
        let a = tor1_cyclic(&i, &j, 8).unwrap();
        let b = tor1_cyclic(&j, &i, 8).unwrap();
        let o = tor1_shortcut_oracle(&i, &j, 8).unwrap();
        assert_eq!(a.graded_dims, o, "{i} {j}");
        assert_eq!(b.graded_dims, o, "{i} {j}");
        assert_eq!(a.is_zero, o.is_zero());
        let a2 = tor2_cyclic(&i, &j, 8).unwrap();
        let b2 = tor2_cyclic(&j, &i, 8).unwrap();
        assert_eq!(a2.graded_dims, b2.graded_dims, "{i} {j}");
    }
}

#[test]
fn disjoint_variables_are_tor_independent() {
    let r = ring(&["x", "y", "u", "v"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    let j = ideal(&r, &["u", "v^2"]);
    for p in 1..=3 {
        for q in 1..=3 {
            let ip = ideal_power(&i, p);
            let jq = ideal_power(&j, q);
            assert!(tor1_cyclic(&ip, &jq, 12).unwrap().is_zero);
            assert!(tor2_cyclic(&ip, &jq, 12).unwrap().is_zero);
        }
    }
}

#[test]
fn ring_mismatch_is_reported() {
    let a = ring(&["x"]);
    let b = ring(&["y"]);
    assert!(matches!(
        tor1_cyclic(&ideal(&a, &["x"]), &ideal(&b, &["y"]), 3),
        Err(Error::RingMismatch(_))
    ));
}
