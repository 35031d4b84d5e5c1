use super::parse::{Arg, Command, KeyValue, ModuleKind, Script, StmtKind};
use crate::arprobe::{hex, sample_maximal_rt, strong_uniform_number};
use crate::error::{Error, Result};
use crate::groebner::FreeModuleElem;
use crate::idealops::{hilbert_dims, ideal_intersection, module_intersection, IdealHandle, ModulePresentation};
use crate::polycore::{Rational, Ring, TermOrder};
use crate::reeslab::{
    assoc_graded_presentation, effective_relations_dims, multi_rees_ideal, rees_ideal, relation_type,
    AssocGraded, BigradedIdealHandle,
};
use crate::torlab::{tor1, tor1_cyclic, tor2_cyclic};
use crate::transcheck::{
    check_flatness_criterion, check_intersection_condition, check_pi_iso, check_rt_tensor_bound,
    check_sigma_iso, check_theorem1, check_tor2_clause, Bounds, CheckVerdict, DEFAULT_DMAX, DEFAULT_NMAX,
    DEFAULT_PMAX, DEFAULT_QMAX,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::time::Instant;

pub const ENGINE_NAME: &str = "transversal";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const SCHEMA_VERSION: u64 = 1;

/// Bound overrides from the command line; they take precedence over
/// `key=value` arguments in the script.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub overrides: Bounds,
}

/// The outcome of one `run` statement.
#[derive(Clone, Debug)]
pub struct Report {
    /// 1-based position among the `run` statements.
    pub index: usize,
    pub command: String,
    pub inputs_fingerprint: String,
    pub result: Value,
    /// Human-readable lines.
    pub summary: Vec<String>,
    pub wall_time_ms: u64,
    /// Set when two sides of a proved equivalence disagree.
    pub disagreement: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "index": self.index,
            "command": self.command,
            "inputs_fingerprint": self.inputs_fingerprint,
            "result": self.result,
            "summary": self.summary,
            "wall_time_ms": self.wall_time_ms,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("[{}] {}\n", self.index, self.command);
        for line in &self.summary {
            out.push_str("    ");
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

/// The top-level JSON document for a list of reports.
pub fn reports_json(reports: &[Report]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "engine": {"name": ENGINE_NAME, "version": ENGINE_VERSION},
        "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
    })
}

pub fn reports_text(reports: &[Report]) -> String {
    reports.iter().map(Report::to_text).collect()
}

#[derive(Clone)]
enum Value_ {
    Ring(Ring),
    Ideal(IdealHandle),
    Module(ModulePresentation),
}

struct Env {
    values: HashMap<String, Value_>,
    /// Canonical declaration text of every name, for fingerprints.
    decls: HashMap<String, String>,
}

impl Env {
    fn ideal(&self, name: &str) -> &IdealHandle {
        match &self.values[name] {
            Value_::Ideal(i) => i,
            _ => unreachable!("checked by the parser"),
        }
    }

    /// Modules, ideals (as submodules of `A`) and rings (as `A` itself).
    fn module(&self, name: &str) -> ModulePresentation {
        match &self.values[name] {
            Value_::Module(m) => m.clone(),
            Value_::Ideal(i) => ModulePresentation::from_ideal(i),
            Value_::Ring(r) => ModulePresentation::free(r, 1).expect("rank 1"),
        }
    }

    fn ring(&self, name: &str) -> Ring {
        match &self.values[name] {
            Value_::Ring(r) => r.clone(),
            Value_::Ideal(i) => i.ring().clone(),
            Value_::Module(m) => m.ring().clone(),
        }
    }
}

struct Call<'a> {
    names: Vec<&'a str>,
    points: Vec<Vec<Rational>>,
    keys: HashMap<&'a str, &'a KeyValue>,
    overrides: Bounds,
}

impl<'a> Call<'a> {
    fn new(args: &'a [Arg], overrides: Bounds) -> Self {
        let mut c = Call { names: Vec::new(), points: Vec::new(), keys: HashMap::new(), overrides };
        for a in args {
            match a {
                Arg::Name(n) => c.names.push(n),
                Arg::Tuple(p) => c.points.push(p.clone()),
                Arg::Key(k, v) => {
                    c.keys.insert(k, v);
                }
            }
        }
        c
    }

    fn int(&self, key: &str) -> Result<Option<u64>> {
        match self.keys.get(key) {
            None => Ok(None),
            Some(KeyValue::Int(v)) => Ok(Some(*v)),
            Some(KeyValue::Name(n)) => {
                Err(Error::InvalidArgument(format!("parameter '{key}' expects an integer, got '{n}'")))
            }
        }
    }

    fn bound_u32(&self, key: &str, over: Option<u32>, default: u32) -> Result<u32> {
        if let Some(v) = over {
            return Ok(v);
        }
        Ok(self.int(key)?.map(|v| v.min(u32::MAX as u64) as u32).unwrap_or(default))
    }

    fn bounds(&self) -> Result<Bounds> {
        Ok(Bounds {
            pmax: Some(self.bound_u32("pmax", self.overrides.pmax, DEFAULT_PMAX)?),
            qmax: Some(self.bound_u32("qmax", self.overrides.qmax, DEFAULT_QMAX)?),
            nmax: Some(self.bound_u32("nmax", self.overrides.nmax, DEFAULT_NMAX)?),
            dmax: Some(match self.overrides.dmax {
                Some(d) => d,
                None => self.int("dmax")?.map(|v| v.min(i64::MAX as u64) as i64).unwrap_or(DEFAULT_DMAX),
            }),
        })
    }

    fn optional_module(&self, env: &Env, slot: usize) -> Option<ModulePresentation> {
        self.names.get(slot).map(|n| env.module(n))
    }
}

fn verdict_lines(label: &str, v: &CheckVerdict) -> Vec<String> {
    vec![format!("{label}: {v}")]
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn bigraded_json(h: &BigradedIdealHandle) -> Value {
    json!({
        "ring": h.grading().ext_ring().to_string(),
        "t_variables": h.t_variables(),
        "generators": h.generators_by_t_degree().iter()
            .map(|(d, p)| json!({"t_degree": d, "polynomial": p.to_string()}))
            .collect::<Vec<_>>(),
    })
}

fn dims_line(label: &str, dims: &[u64]) -> String {
    let parts: Vec<String> = dims.iter().map(u64::to_string).collect();
    format!("{label}: {}", parts.join(" "))
}

fn execute(command: Command, call: &Call, env: &Env) -> Result<(Value, Vec<String>, Option<String>)> {
    let b = call.bounds()?;
    let (pmax, qmax, nmax, dmax) = (b.pmax.unwrap(), b.qmax.unwrap(), b.nmax.unwrap(), b.dmax.unwrap());
    let n = &call.names;
    let mut disagreement = None;
    let (value, lines) = match command {
        Command::Groebner => {
            let order = match call.keys.get("order") {
                None => TermOrder::DegRevLex,
                Some(KeyValue::Name(o)) if o == "degrevlex" => TermOrder::DegRevLex,
                Some(KeyValue::Name(o)) if o == "lex" => TermOrder::Lex,
                Some(other) => {
                    return Err(Error::InvalidArgument(format!("unknown order {other:?}; use lex or degrevlex")))
                }
            };
            let gb = env.ideal(n[0]).groebner(&order);
            let basis: Vec<String> = gb.polynomials().iter().map(|p| p.to_string()).collect();
            let line = format!("reduced basis ({order}): {}", basis.join(", "));
            (json!({"order": order.to_string(), "basis": basis}), vec![line])
        }
        Command::Intersect => {
            let gens: Vec<String> = match &env.values[n[0]] {
                Value_::Ideal(i) => {
                    ideal_intersection(i, env.ideal(n[1]))?.generators().iter().map(|g| g.to_string()).collect()
                }
                _ => module_intersection(&env.module(n[0]), &env.module(n[1]))?
                    .generators()
                    .iter()
                    .map(FreeModuleElem::to_string)
                    .collect(),
            };
            let line = format!("generators: {}", gens.join(", "));
            (json!({"generators": gens}), vec![line])
        }
        Command::Hilbert => {
            let dims = match &env.values[n[0]] {
                Value_::Ideal(i) => hilbert_dims(i, dmax)?,
                _ => hilbert_dims(&env.module(n[0]), dmax)?,
            };
            (json!({"dmax": dmax, "dims": dims.to_json()}), vec![dims_line("dims", &dims.values(dmax))])
        }
        Command::ReesIdeal => {
            let h = rees_ideal(env.ideal(n[0]))?;
            (bigraded_json(&h), vec![format!("defining ideal: {h}")])
        }
        Command::MultiRees => {
            let h = multi_rees_ideal(env.ideal(n[0]), env.ideal(n[1]))?;
            (bigraded_json(&h), vec![format!("defining ideal: {h}")])
        }
        Command::RelationType => {
            let m = call.optional_module(env, 1);
            let r = relation_type(env.ideal(n[0]), m.as_ref())?;
            let line = format!("rt = {} (minimal generator T-degrees {:?})", r.rt, r.minimal_generator_t_degrees);
            (
                json!({
                    "rt": r.rt,
                    "minimal_generator_t_degrees": r.minimal_generator_t_degrees,
                    "effective_dims": r.effective_dims.to_json(),
                }),
                vec![line],
            )
        }
        Command::AssocGraded => {
            let m = call.optional_module(env, 1);
            let g = assoc_graded_presentation(env.ideal(n[0]), m.as_ref())?;
            let (kind, text, dims) = match &g {
                AssocGraded::Ring(h) => ("ring", h.to_string(), h.hilbert_dims(nmax as i64, dmax)),
                AssocGraded::Module(gm) => ("module", gm.presentation.to_string(), gm.hilbert_dims(nmax as i64, dmax)),
            };
            let mut by_n = vec![0u64; nmax as usize + 1];
            let homogeneous = dims.is_ok();
            if let Ok(d) = &dims {
                for (k, v) in d.entries() {
                    by_n[k[0] as usize] += v;
                }
            }
            let mut lines = vec![format!("presentation: {text}")];
            let mut value = json!({"kind": kind, "presentation": text});
            if homogeneous {
                lines.push(dims_line(&format!("dims by T-degree (internal degree <= {dmax})"), &by_n));
                value["dims_by_t_degree"] = json!(by_n);
            }
            (value, lines)
        }
        Command::Effective => {
            let m = call.optional_module(env, 1);
            let k = call.int("n")?.unwrap_or(1) as u32;
            let dims = effective_relations_dims(env.ideal(n[0]), m.as_ref(), k, dmax)?;
            (json!({"n": k, "dims": dims.to_json()}), vec![dims_line(&format!("E_{k}"), &dims.values(dmax))])
        }
        Command::Tor => {
            let index = call.int("index")?.unwrap_or(1);
            let i = env.ideal(n[0]);
            let t = match (index, &env.values[n[1]]) {
                (1, Value_::Ideal(j)) => tor1_cyclic(i, j, dmax)?,
                (1, _) => tor1(i, &env.module(n[1]), dmax)?,
                (2, Value_::Ideal(j)) => tor2_cyclic(i, j, dmax)?,
                (2, _) => return Err(Error::Unsupported("Tor_2 is computed for two ideals only".into())),
                _ => return Err(Error::InvalidArgument(format!("Tor index {index}; use 1 or 2"))),
            };
            let line = if t.is_zero {
                format!("Tor_{index} = 0")
            } else if t.homogeneous {
                dims_line(&format!("Tor_{index} dims"), &t.graded_dims.values(dmax))
            } else {
                format!("Tor_{index} is nonzero")
            };
            (
                json!({
                    "index": index,
                    "is_zero": t.is_zero,
                    "graded_dims": t.graded_dims.to_json(),
                    "presentation": t.presentation.to_string(),
                }),
                vec![line],
            )
        }
        Command::Tor2Clause => {
            let r = check_tor2_clause(env.ideal(n[0]), env.ideal(n[1]), pmax, qmax, dmax)?;
            if !r.agree {
                disagreement = Some(format!(
                    "Tor side {} but isomorphism side {}\n{}",
                    r.tor_side.status,
                    r.iso_side.status,
                    serde_json::to_string_pretty(&to_value(&r)).expect("json")
                ));
            }
            let mut lines = verdict_lines("Tor_1 = Tor_2 = 0", &r.tor_side);
            lines.extend(verdict_lines("gr_I ⊗ gr_J ≅ gr_(I+J)", &r.iso_side));
            lines.push(format!("agree: {}", r.agree));
            (to_value(&r), lines)
        }
        Command::Transversality => {
            let m = call.optional_module(env, 2);
            let r = check_theorem1(env.ideal(n[0]), env.ideal(n[1]), m.as_ref(), pmax, qmax, dmax)?;
            if !r.agree {
                disagreement = Some(format!(
                    "condition (i) {} but condition (ii) {}\n{}",
                    r.condition_i.status,
                    r.condition_ii.status,
                    serde_json::to_string_pretty(&to_value(&r)).expect("json")
                ));
            }
            let mut lines = verdict_lines("condition (i), φ̄ iso", &r.condition_i);
            lines.extend(verdict_lines("condition (ii), Tor_1 vanishing", &r.condition_ii));
            lines.push(format!("agree: {}", r.agree));
            (to_value(&r), lines)
        }
        Command::SigmaIso => {
            let m = call.optional_module(env, 2);
            let v = check_sigma_iso(env.ideal(n[0]), env.ideal(n[1]), m.as_ref(), nmax, dmax)?;
            (to_value(&v), verdict_lines("σ̄ iso", &v))
        }
        Command::PiIso => {
            let m = call.optional_module(env, 2);
            let v = check_pi_iso(env.ideal(n[0]), env.ideal(n[1]), m.as_ref(), pmax, qmax, dmax)?;
            (to_value(&v), verdict_lines("π̄ iso", &v))
        }
        Command::IntersectionCondition => {
            let m = call.optional_module(env, 2);
            let v = check_intersection_condition(env.ideal(n[0]), env.ideal(n[1]), m.as_ref(), pmax, qmax)?;
            (to_value(&v), verdict_lines("I^pM ∩ J^qM = I^pJ^qM", &v))
        }
        Command::RtBound => {
            let m = call.optional_module(env, 2);
            let v = check_rt_tensor_bound(env.ideal(n[0]), env.ideal(n[1]), m.as_ref(), b)?;
            (to_value(&v), verdict_lines("rt(I+J; M) <= max(rt(I), rt(J; M))", &v))
        }
        Command::Flatness => {
            let m = call.optional_module(env, 2);
            let x = env.ideal(n[1]).generators().to_vec();
            let v = check_flatness_criterion(env.ideal(n[0]), &x, m.as_ref(), b)?;
            (to_value(&v), verdict_lines("flatness criterion", &v))
        }
        Command::ArtinRees => {
            let r = strong_uniform_number(env.ideal(n[0]), &env.module(n[1]), &env.module(n[2]), nmax)?;
            let mut value = to_value(&r);
            value["summary"] = json!(r.describe());
            let mut lines = vec![r.describe()];
            if r.s.is_some() {
                lines.push(format!("weak Artin-Rees containment on [s, nmax]: {}", r.weak_ar_holds));
            }
            (value, lines)
        }
        Command::SampleMaximalRt => {
            let ring = env.ring(n[0]);
            let m = call.optional_module(env, 1);
            let r = sample_maximal_rt(&ring, m.as_ref(), &call.points)?;
            let mut lines: Vec<String> =
                r.points.iter().map(|p| format!("rt at ({}) = {}", p.point.join(", "), p.rt)).collect();
            lines.push(format!("sample max = {}", r.max));
            (to_value(&r), lines)
        }
    };
    Ok((value, lines, disagreement))
}

fn fingerprint(command_text: &str, names: &[&str], env: &Env, bounds: &Bounds) -> String {
    let mut h = Sha256::new();
    h.update(command_text.as_bytes());
    let mut seen: Vec<&str> = Vec::new();
    for n in names {
        if !seen.contains(n) {
            seen.push(n);
            h.update(b"\n");
            h.update(env.decls[*n].as_bytes());
        }
    }
    h.update(format!("\n{bounds}").as_bytes());
    hex(&h.finalize())
}

/// Execute the statements in order, returning one report per `run`.
/// Errors carry the 1-based index of the failing command.
pub fn run_session(script: &Script, opts: &RunOptions) -> Result<Vec<Report>> {
    let mut env = Env { values: HashMap::new(), decls: HashMap::new() };
    let mut reports = Vec::new();
    for st in &script.statements {
        match &st.kind {
            StmtKind::Ring { name, ring } => {
                env.values.insert(name.clone(), Value_::Ring(ring.clone()));
                env.decls.insert(name.clone(), st.to_string());
            }
            StmtKind::Ideal { name, ring, gens } => {
                let r = env.ring(ring);
                let i = IdealHandle::new(&r, gens.clone())?;
                env.values.insert(name.clone(), Value_::Ideal(i));
                env.decls.insert(name.clone(), format!("{}\n{}", env.decls[ring], st));
            }
            StmtKind::Module { name, ring, kind, rank, vectors } => {
                let r = env.ring(ring);
                let elems = vectors
                    .iter()
                    .map(|v| FreeModuleElem::new(&r, v.clone()))
                    .collect::<Result<Vec<_>>>()?;
                let m = match kind {
                    ModuleKind::Submodule => ModulePresentation::submodule(&r, *rank, elems)?,
                    ModuleKind::Cokernel => ModulePresentation::cokernel(&r, *rank, elems)?,
                };
                env.values.insert(name.clone(), Value_::Module(m));
                env.decls.insert(name.clone(), format!("{}\n{}", env.decls[ring], st));
            }
            StmtKind::Run { command, args } => {
                let index = reports.len() + 1;
                let call = Call::new(args, opts.overrides);
                let text = st.to_string();
                let wrap = |e: Error| Error::Command { index, command: text.clone(), source: Box::new(e) };
                let bounds = call.bounds().map_err(wrap)?;
                let start = Instant::now();
                let (result, summary, disagreement) = execute(*command, &call, &env).map_err(wrap)?;
                let wall_time_ms = start.elapsed().as_millis() as u64;
                reports.push(Report {
                    index,
                    inputs_fingerprint: fingerprint(&text, &call.names, &env, &bounds),
                    command: text,
                    result,
                    summary,
                    wall_time_ms,
                    disagreement,
                });
            }
        }
    }
    Ok(reports)
}
