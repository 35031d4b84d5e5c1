//! Session scripts: declarations of rings, ideals and modules followed by
//! `run` commands, with deterministic text and JSON reports.

mod parse;
mod run;
mod selftest;


pub use parse::{parse_session, Arg, Command, KeyValue, ModuleKind, Script, Statement, StmtKind};
pub use run::{
    reports_json, reports_text, run_session, Report, RunOptions, ENGINE_NAME, ENGINE_VERSION, SCHEMA_VERSION,
};
pub use selftest::{cases, selftest, selftest_json, selftest_text, SelftestCase, SelftestOutcome};
