//! Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if
//! any criterion fails.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::Instant;
use transversal_core::arprobe::{sample_maximal_rt, strong_uniform_number};
use transversal_core::groebner::buchberger;
use transversal_core::idealops::{ideal_power, IdealHandle, ModulePresentation};
use transversal_core::polycore::{rational, Monomial, Polynomial, Rational, Ring, TermOrder};
use transversal_core::reeslab::relation_type;
use transversal_core::torlab::{tor1_cyclic, tor1_shortcut_oracle, tor2_cyclic};
use transversal_core::transcheck::{check_pi_iso, check_sigma_iso, check_theorem1, Status};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ring(vars: &[&str], rels: &[&str]) -> Ring {
    let p = Ring::polynomial(vars).unwrap();
    if rels.is_empty() {
        return p;
    }
    let rels = rels.iter().map(|s| Polynomial::parse(&p, s).unwrap()).collect();
    Ring::quotient(&p, rels).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> IdealHandle {
    IdealHandle::parse(r, gens).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn node() -> (Ring, IdealHandle, IdealHandle) {
    let b = ring(&["z", "t"], &["z*t"]);
    let i = ideal(&b, &["z"]);
    let j = ideal(&b, &["t"]);
    (b, i, j)
}

fn criterion1() -> Outcome {
    let (_, i, j) = node();
    let sigma = check_sigma_iso(&i, &j, None, 6, 10).map_err(|e| e.to_string())?;
    ensure(sigma.status == Status::HoldsUpToBound, || format!("σ̄: {sigma}"))?;
    let pi = check_pi_iso(&i, &j, None, 3, 3, 10).map_err(|e| e.to_string())?;
    let w = pi.witness.clone().ok_or("π̄ has no witness")?;
    ensure(pi.status == Status::Fails && (w.p, w.q) == (Some(1), Some(1)), || format!("π̄: {pi}"))?;
    let t = check_theorem1(&i, &j, None, 3, 3, 10).map_err(|e| e.to_string())?;
    ensure(
        t.agree && t.condition_i.status == Status::Fails && t.condition_ii.status == Status::Fails,
        || format!("transversality sides: {} / {}", t.condition_i, t.condition_ii),
    )?;
    Ok("σ̄ holds (nmax=6, dmax=10), π̄ fails at (1,1), both sides FAILS".into())
}

fn criterion2() -> Outcome {
    let (_, i, j) = node();
    for p in 1..=3 {
        for q in 1..=3 {
            let ip = ideal_power(&i, p);
            let jq = ideal_power(&j, q);
            let t = tor1_cyclic(&ip, &jq, 10).map_err(|e| e.to_string())?;
            ensure(t.is_zero, || format!("Tor_1 nonzero at p={p}, q={q}"))?;
        }
    }
    let t2 = tor2_cyclic(&i, &j, 10).map_err(|e| e.to_string())?;
    ensure(t2.graded_dims.total() == 1, || format!("Tor_2 total dimension {}", t2.graded_dims.total()))?;
    Ok("Tor_1 = 0 for p,q <= 3; Tor_2(A/(z), A/(t)) has dimension 1".into())
}

fn criterion3() -> Outcome {
    let a = ring(&["x", "y"], &[]);
    let (b, _, _) = node();
    let cases = [
        (ideal(&a, &["x", "y"]), 1),
        (ideal(&a, &["x^2", "x*y", "y^2"]), 2),
        (ideal(&b, &["z", "t"]), 2),
    ];
    for (i, want) in &cases {
        let rt = relation_type(i, None).map_err(|e| e.to_string())?.rt;
        ensure(rt == *want, || format!("rt({i}) = {rt}, expected {want}"))?;
    }
    Ok("rt = 1, 2, 2".into())
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, r: &Ring) -> IdealHandle {
    let n = r.nvars();
    let count = rng.gen_range(1..=3);
    let gens: Vec<Polynomial> = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=3);
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            Polynomial::monomial(r, Monomial::from_exponents(e), rational(1, 1))
        })
        .collect();
    IdealHandle::new(r, gens).unwrap()
}

fn monomial_corpus() -> Vec<(IdealHandle, IdealHandle)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let rings = [ring(&["x"], &[]), ring(&["x", "y"], &[]), ring(&["x", "y", "z"], &[])];
    (0..60)
        .map(|k| {
            let r = &rings[if k < 3 { k } else { 1 + k % 2 }];
            (random_monomial_ideal(&mut rng, r), random_monomial_ideal(&mut rng, r))
        })
        .collect()
}

fn criterion4() -> Outcome {
    let corpus = monomial_corpus();
    let mut holds = 0;
    for (i, j) in &corpus {
        let t = check_theorem1(i, j, None, 2, 2, 8).map_err(|e| e.to_string())?;
        ensure(t.agree, || format!("disagreement on I = {i}, J = {j}: {} / {}", t.condition_i, t.condition_ii))?;
        if t.condition_i.status == Status::HoldsUpToBound {
            holds += 1;
        }
    }
    Ok(format!("{} pairs, 0 disagreements ({holds} transversal, {} not)", corpus.len(), corpus.len() - holds))
}

fn criterion5() -> Outcome {
    let mut pairs = monomial_corpus();
    let a = ring(&["x", "y", "z"], &[]);
    pairs.push((ideal(&a, &["x^2 - y*z", "x*y"]), ideal(&a, &["y^2 + x*z", "z^2"])));
    pairs.push((ideal(&a, &["x + y", "z^2"]), ideal(&a, &["x*y - z^2"])));
    let (_, i, j) = node();
    pairs.push((i, j));
    let b = ring(&["x", "y"], &["x^2"]);
    pairs.push((ideal(&b, &["x"]), ideal(&b, &["x*y", "y^2"])));
    for (i, j) in &pairs {
        let formula = tor1_cyclic(i, j, 10).map_err(|e| e.to_string())?.graded_dims;
        let oracle = tor1_shortcut_oracle(i, j, 10).map_err(|e| e.to_string())?;
        ensure(formula.values(10) == oracle.values(10), || {
            format!("I = {i}, J = {j}: {:?} vs {:?}", formula.values(10), oracle.values(10))
        })?;
    }
    Ok(format!("{} pairs agree degreewise up to dmax=10", pairs.len()))
}

fn criterion6() -> Outcome {
    let r = ring(&["x", "y", "z", "w"], &[]);
    // Known relation types: regular sequences have rt 1, the square of a
    // two-generated maximal ideal has rt 2.
    let cases: [(&[&str], u32, &[&str], u32); 10] = [
        (&["x"], 1, &["z"], 1),
        (&["x", "y"], 1, &["z", "w"], 1),
        (&["x^2", "y^2"], 1, &["z"], 1),
        (&["x", "y"], 1, &["z^2", "z*w", "w^2"], 2),
        (&["x^2", "x*y", "y^2"], 2, &["z"], 1),
        (&["x^2", "x*y", "y^2"], 2, &["z^2", "z*w", "w^2"], 2),
        (&["x^3", "y^3"], 1, &["z*w"], 1),
        (&["x*y"], 1, &["z^2", "w^2"], 1),
        (&["x^2", "x*y", "y^2"], 2, &["z", "w"], 1),
        (&["x"], 1, &["z^2", "z*w", "w^2"], 2),
    ];
    let mut equal_at_two = 0;
    for (ig, irt, jg, jrt) in cases {
        let i = ideal(&r, ig);
        let j = ideal(&r, jg);
        let rt_i = relation_type(&i, None).map_err(|e| e.to_string())?.rt;
        let rt_j = relation_type(&j, None).map_err(|e| e.to_string())?.rt;
        ensure(rt_i == irt && rt_j == jrt, || format!("parts of {i} + {j}: rt {rt_i}, {rt_j}"))?;
        let sum = i.sum(&j).map_err(|e| e.to_string())?;
        let rt = relation_type(&sum, None).map_err(|e| e.to_string())?.rt;
        let bound = irt.max(jrt);
        ensure(rt <= bound, || format!("rt({sum}) = {rt} > {bound}"))?;
        if rt == 2 && bound == 2 {
            equal_at_two += 1;
        }
    }
    ensure(equal_at_two > 0, || "no case attains the bound 2".into())?;
    Ok(format!("10 pairs within the bound, {equal_at_two} attain it at 2"))
}

fn criterion7() -> Outcome {
    let r = ring(&["x"], &[]);
    let m = ideal(&r, &["x"]);
    let a = ModulePresentation::free(&r, 1).map_err(|e| e.to_string())?;
    for (gens, want) in [(["x^2"], 2), (["x"], 1)] {
        let n = ModulePresentation::from_ideal(&ideal(&r, &gens));
        let res = strong_uniform_number(&m, &a, &n, 8).map_err(|e| e.to_string())?;
        ensure(res.s == Some(want), || format!("N = ({}): {}", gens[0], res.describe()))?;
        ensure(res.verified_range == Some((want, 8)), || format!("range {:?}", res.verified_range))?;
        ensure(res.weak_ar_holds, || format!("weak containment fails for N = ({})", gens[0]))?;
        let probed = res.table.iter().filter(|row| row.weak_containment.is_some()).count();
        ensure(probed as u32 == 8 - want + 1, || format!("only {probed} rows probed"))?;
    }
    Ok("s = 2 for N = (x^2), s = 1 for N = (x), verified for n <= 8".into())
}

fn criterion8() -> Outcome {
    let a = ring(&["x", "y"], &[]);
    let q = |n, d| -> Rational { rational(n, d) };
    let points = vec![
        vec![q(0, 1), q(0, 1)],
        vec![q(1, 1), q(2, 1)],
        vec![q(-3, 1), q(1, 2)],
        vec![q(5, 1), q(-7, 1)],
        vec![q(2, 3), q(4, 1)],
    ];
    let s = sample_maximal_rt(&a, None, &points).map_err(|e| e.to_string())?;
    ensure(s.points.iter().all(|p| p.rt == 1) && s.max == 1, || format!("ℚ[x,y] sample: {s:?}"))?;
    let (b, _, _) = node();
    let pts = vec![vec![q(0, 1), q(0, 1)], vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(-2, 1)]];
    let s = sample_maximal_rt(&b, None, &pts).map_err(|e| e.to_string())?;
    ensure(s.max == 2 && s.points[0].rt == 2, || format!("ℚ[z,t]/(zt) sample: {s:?}"))?;
    Ok("max 1 over 5 points of ℚ[x,y]; max 2 at the singular point of ℚ[z,t]/(zt)".into())
}

fn random_poly(r: &Ring, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = r.nvars();
    let terms = (0..3).map(|_| {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=3) {
            e[rng.gen_range(0..n)] += 1;
        }
        (Monomial::from_exponents(e), rational(rng.gen_range(-3..=3), 1))
    });
    Polynomial::from_terms(r, terms.collect::<Vec<_>>()).unwrap()
}

/// S-pair check written against the polynomial API only.
fn s_pairs_reduce(basis: &[Polynomial], ord: &TermOrder) -> bool {
    let lead = |p: &Polynomial| p.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let remainder = |mut f: Polynomial| {
        let mut rem = Polynomial::zero(f.ring());
        while !f.is_zero() {
            let (m, c) = lead(&f);
            match basis.iter().find(|g| lead(g).0.divides(&m)) {
                Some(g) => {
                    let (gm, gc) = lead(g);
                    f = f.checked_sub(&g.mul_monomial(&gm.quotient_of(&m).unwrap(), &(c / gc))).unwrap();
                }
                None => {
                    let t = Polynomial::monomial(f.ring(), m, c);
                    rem = rem.checked_add(&t).unwrap();
                    f = f.checked_sub(&t).unwrap();
                }
            }
        }
        rem
    };
    basis.iter().enumerate().all(|(k, f)| {
        basis[k + 1..].iter().all(|g| {
            let (fm, fc) = lead(f);
            let (gm, gc) = lead(g);
            let l = fm.lcm(&gm);
            let one = rational(1, 1);
            let s = f
                .mul_monomial(&fm.quotient_of(&l).unwrap(), &(one.clone() / fc))
                .checked_sub(&g.mul_monomial(&gm.quotient_of(&l).unwrap(), &(one / gc)))
                .unwrap();
            remainder(s).is_zero()
        })
    })
}

fn criterion9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let r3 = ring(&["x", "y", "z"], &[]);
    let r2 = ring(&["x", "y"], &[]);
    for case in 0..50 {
        let (r, ord) = if case % 2 == 0 { (&r3, TermOrder::DegRevLex) } else { (&r2, TermOrder::Lex) };
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| random_poly(r, &mut rng)).collect();
        let gb = buchberger(r, &gens, &ord).map_err(|e| e.to_string())?;
        ensure(s_pairs_reduce(&gb.polynomials(), &ord), || format!("case {case}: an S-pair does not reduce"))?;
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let again = buchberger(r, &shuffled, &ord).map_err(|e| e.to_string())?;
        ensure(gb.polynomials() == again.polynomials(), || format!("case {case}: basis depends on order"))?;
    }
    Ok("50 cases: all S-pairs reduce to 0, reduced bases permutation-invariant".into())
}

fn strip_timing(text: &str) -> String {
    text.lines().filter(|l| !l.contains("\"wall_time_ms\"")).collect::<Vec<_>>().join("\n")
}

fn criterion10() -> Outcome {
    let run = || -> Result<String, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_transversal"))
            .args(["selftest", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("selftest exited with {}", out.status))?;
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.contains("\"wall_time_ms\""), || "no timing field found".into())?;
    ensure(strip_timing(&a) == strip_timing(&b), || "selftest JSON differs between runs".into())?;
    Ok(format!("two runs identical apart from timing ({} bytes)", a.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("node example", criterion1),
        ("Tor_2 carries the failure", criterion2),
        ("relation types", criterion3),
        ("transversality equivalence on random pairs", criterion4),
        ("Tor_1 oracle equivalence", criterion5),
        ("rt tensor bound", criterion6),
        ("Artin-Rees number", criterion7),
        ("uniform bound sampling", criterion8),
        ("Groebner engine soundness", criterion9),
        ("determinism", criterion10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name}: {msg} [{secs:.2}s]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg} [{secs:.2}s]", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
