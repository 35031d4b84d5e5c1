use super::parse::parse_session;
use super::run::{run_session, Report, RunOptions, ENGINE_NAME, ENGINE_VERSION, SCHEMA_VERSION};
use crate::error::Result;
use crate::idealops::IdealHandle;
use crate::polycore::{Polynomial, Ring};
use crate::transcheck::nonzerodivisor_on_rees_and_graded;
use serde_json::{json, Value};

type Check = fn(&[Report]) -> std::result::Result<(), String>;

/// A built-in fixture: a session script and a check on its reports.
pub struct SelftestCase {
    pub name: &'static str,
    pub script: &'static str,
    check: Check,
}

#[derive(Clone, Debug)]
pub struct SelftestOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub message: String,
    pub reports: Vec<Report>,
}

impl SelftestOutcome {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed,
            "message": self.message,
            "reports": self.reports.iter().map(Report::to_json).collect::<Vec<_>>(),
        })
    }
}

fn status(r: &Report, path: &[&str]) -> String {
    let mut v = &r.result;
    for p in path {
        v = &v[*p];
    }
    v.as_str().unwrap_or("").to_string()
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn expect_status(r: &Report, path: &[&str], want: &str) -> std::result::Result<(), String> {
    let got = status(r, path);
    expect(got == want, || format!("[{}] {}: expected {want}, got {got}", r.index, path.join(".")))
}

fn expect_int(r: &Report, key: &str, want: u64) -> std::result::Result<(), String> {
    let got = r.result[key].as_u64();
    expect(got == Some(want), || format!("[{}] {key}: expected {want}, got {got:?}", r.index))
}

fn total_dim(r: &Report) -> u64 {
    r.result["graded_dims"]
        .as_array()
        .map(|a| a.iter().filter_map(|e| e["dim"].as_u64()).sum())
        .unwrap_or(0)
}

fn node(r: &[Report]) -> std::result::Result<(), String> {
    expect_status(&r[0], &["status"], "HOLDS_UP_TO_BOUND")?;
    expect_status(&r[1], &["status"], "FAILS")?;
    let w = &r[1].result["witness"];
    expect(w["p"] == 1 && w["q"] == 1, || format!("π̄ witness expected (1,1), got {w}"))?;
    expect_status(&r[2], &["condition_i", "status"], "FAILS")?;
    expect_status(&r[2], &["condition_ii", "status"], "FAILS")?;
    expect(r[2].result["agree"] == true, || "sides of the transversality check disagree".into())
}

fn tor_carries_failure(r: &[Report]) -> std::result::Result<(), String> {
    expect(r[0].result["is_zero"] == true, || "Tor_1(A/(z), A/(t)) should vanish".into())?;
    expect(r[1].result["is_zero"] == false && total_dim(&r[1]) == 1, || {
        format!("Tor_2(A/(z), A/(t)) should have total dimension 1, got {}", total_dim(&r[1]))
    })?;
    expect_status(&r[2], &["tor_side", "status"], "FAILS")?;
    expect_status(&r[2], &["iso_side", "status"], "FAILS")?;
    expect(r[2].result["agree"] == true, || "tor2 clause sides disagree".into())
}

fn relation_types(r: &[Report]) -> std::result::Result<(), String> {
    expect_int(&r[0], "rt", 1)?;
    expect_int(&r[1], "rt", 2)?;
    expect_int(&r[2], "rt", 2)
}

fn artin_rees(r: &[Report]) -> std::result::Result<(), String> {
    expect_int(&r[0], "s", 2)?;
    expect_int(&r[1], "s", 1)?;
    for x in r {
        expect(x.result["weak_ar_holds"] == true, || format!("[{}] weak containment fails", x.index))?;
        expect(x.result["verified_range"][1] == 8, || format!("[{}] not verified up to 8", x.index))?;
    }
    Ok(())
}

fn sampling(r: &[Report]) -> std::result::Result<(), String> {
    let pts = r[0].result["points"].as_array().map(Vec::len).unwrap_or(0);
    expect(pts == 5, || format!("expected 5 sampled points, got {pts}"))?;
    expect_int(&r[0], "max", 1)?;
    expect_int(&r[1], "max", 2)
}

fn principal_element(r: &[Report]) -> std::result::Result<(), String> {
    // The transversality verdicts must match direct regularity of x on
    // the Rees module and the associated graded module of J.
    let ring = Ring::polynomial(&["x", "y"]).map_err(|e| e.to_string())?;
    let x = Polynomial::parse(&ring, "x").map_err(|e| e.to_string())?;
    let j = IdealHandle::parse(&ring, &["y^2", "x*y"]).map_err(|e| e.to_string())?;
    let j2 = IdealHandle::parse(&ring, &["y"]).map_err(|e| e.to_string())?;
    for (rep, jj) in [(&r[0], &j2), (&r[1], &j)] {
        let regular = nonzerodivisor_on_rees_and_graded(&x, jj, None, 3).map_err(|e| e.to_string())?;
        let holds = status(rep, &["condition_i", "status"]) == "HOLDS_UP_TO_BOUND";
        expect(rep.result["agree"] == true, || format!("[{}] sides disagree", rep.index))?;
        expect(holds == regular, || {
            format!("[{}] isomorphism {holds} but x regular on Rees/gr {regular}", rep.index)
        })?;
    }
    expect_status(&r[0], &["condition_i", "status"], "HOLDS_UP_TO_BOUND")?;
    expect_status(&r[1], &["condition_i", "status"], "FAILS")
}

fn principal_pair(r: &[Report]) -> std::result::Result<(), String> {
    expect_status(&r[0], &["condition_i", "status"], "HOLDS_UP_TO_BOUND")?;
    expect_status(&r[1], &["condition_i", "status"], "FAILS")?;
    for x in r {
        expect(x.result["agree"] == true, || format!("[{}] sides disagree", x.index))?;
    }
    Ok(())
}

fn flatness(r: &[Report]) -> std::result::Result<(), String> {
    expect_status(&r[0], &["status"], "HOLDS_UP_TO_BOUND")
}

fn rt_bound(r: &[Report]) -> std::result::Result<(), String> {
    expect_status(&r[0], &["status"], "HOLDS_UP_TO_BOUND")?;
    let d = &r[0].result["details"];
    expect(d["rt_sum"] == 2 && d["rt_i"] == 1 && d["rt_j"] == 2, || format!("unexpected relation types {d}"))
}

pub fn cases() -> Vec<SelftestCase> {
    vec![
        SelftestCase {
            name: "node_sigma_pi",
            script: "ring B = QQ[z,t] / (z*t);\n\
                     ideal I = (z);\n\
                     ideal J = (t);\n\
                     run sigma_iso I J nmax=6 dmax=10;\n\
                     run pi_iso I J pmax=3 qmax=3 dmax=10;\n\
                     run transversality I J pmax=3 qmax=3 dmax=10;\n",
            check: node,
        },
        SelftestCase {
            name: "node_tor2",
            script: "ring B = QQ[z,t] / (z*t);\n\
                     ideal I = (z);\n\
                     ideal J = (t);\n\
                     run tor I J index=1 dmax=10;\n\
                     run tor I J index=2 dmax=10;\n\
                     run tor2_clause I J pmax=3 qmax=3 dmax=10;\n",
            check: tor_carries_failure,
        },
        SelftestCase {
            name: "relation_types",
            script: "ring A = QQ[x,y];\n\
                     ideal M = (x, y);\n\
                     ideal S = (x^2, x*y, y^2);\n\
                     ring B = QQ[z,t] / (z*t);\n\
                     ideal N = (z, t);\n\
                     run relation_type M;\n\
                     run relation_type S;\n\
                     run relation_type N;\n",
            check: relation_types,
        },
        SelftestCase {
            name: "artin_rees",
            script: "ring R = QQ[x];\n\
                     ideal m = (x);\n\
                     ideal N2 = (x^2);\n\
                     ideal N1 = (x);\n\
                     run artin_rees m R N2 nmax=8;\n\
                     run artin_rees m R N1 nmax=8;\n",
            check: artin_rees,
        },
        SelftestCase {
            name: "maximal_rt_sampling",
            script: "ring A = QQ[x,y];\n\
                     ring B = QQ[z,t] / (z*t);\n\
                     run sample_maximal_rt A (0, 0) (1, 2) (-3, 1/2) (5, -7) (2/3, 4);\n\
                     run sample_maximal_rt B (0, 0) (1, 0) (0, -2);\n",
            check: sampling,
        },
        SelftestCase {
            name: "principal_regular_element",
            script: "ring A = QQ[x,y];\n\
                     ideal I = (x);\n\
                     ideal J = (y);\n\
                     ideal K = (y^2, x*y);\n\
                     run transversality I J pmax=3 qmax=3 dmax=8;\n\
                     run transversality I K pmax=3 qmax=3 dmax=8;\n",
            check: principal_element,
        },
        SelftestCase {
            name: "principal_regular_sequence",
            script: "ring A = QQ[x,y];\n\
                     ideal I = (x);\n\
                     ideal J = (y);\n\
                     run transversality I J pmax=3 qmax=3 dmax=8;\n\
                     ring B = QQ[x,y] / (x*y);\n\
                     ideal X = (x);\n\
                     ideal Y = (y);\n\
                     run transversality X Y pmax=3 qmax=3 dmax=8;\n",
            check: principal_pair,
        },
        SelftestCase {
            name: "flatness_criterion",
            script: "ring A = QQ[x,y,z];\n\
                     ideal P = (y, z);\n\
                     ideal X = (x);\n\
                     run flatness P X pmax=2 qmax=2 dmax=6;\n",
            check: flatness,
        },
        SelftestCase {
            name: "rt_tensor_bound",
            script: "ring A = QQ[x,y,z,w];\n\
                     ideal I = (x, y);\n\
                     ideal J = (z^2, z*w, w^2);\n\
                     run rt_bound I J pmax=2 qmax=2 dmax=6;\n",
            check: rt_bound,
        },
    ]
}

/// Run every built-in fixture. Parse or command errors are reported as
/// failed cases rather than aborting the suite.
pub fn selftest(opts: &RunOptions) -> Vec<SelftestOutcome> {
    cases()
        .into_iter()
        .map(|c| {
            let run: Result<Vec<Report>> = parse_session(c.script).and_then(|s| run_session(&s, opts));
            match run {
                Err(e) => SelftestOutcome { name: c.name, passed: false, message: e.to_string(), reports: vec![] },
                Ok(reports) => {
                    let (passed, message) = match (c.check)(&reports) {
                        Ok(()) => (true, "ok".to_string()),
                        Err(m) => (false, m),
                    };
                    SelftestOutcome { name: c.name, passed, message, reports }
                }
            }
        })
        .collect()
}

pub fn selftest_json(outcomes: &[SelftestOutcome]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "engine": {"name": ENGINE_NAME, "version": ENGINE_VERSION},
        "passed": outcomes.iter().all(|o| o.passed),
        "cases": outcomes.iter().map(SelftestOutcome::to_json).collect::<Vec<_>>(),
    })
}

pub fn selftest_text(outcomes: &[SelftestOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{mark} {}: {}\n", o.name, o.message));
        for r in &o.reports {
            out.push_str(&r.to_text());
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    out.push_str(&format!("{} cases, {} failed\n", outcomes.len(), failed));
    out
}
