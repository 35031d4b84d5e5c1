use crate::error::Result;
use crate::polycore::lexer::{line_col, tokenize, Token, TokenKind};
use crate::polycore::{parse_expr, Cursor, Polynomial, Rational, Ring};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Submodule,
    Cokernel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KeyValue {
    Int(u64),
    Name(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Name(String),
    /// A rational point `(a_1, ..., a_k)`.
    Tuple(Vec<Rational>),
    Key(String, KeyValue),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Groebner,
    Intersect,
    Hilbert,
    ReesIdeal,
    MultiRees,
    RelationType,
    AssocGraded,
    Effective,
    Tor,
    Tor2Clause,
    Transversality,
    SigmaIso,
    PiIso,
    IntersectionCondition,
    RtBound,
    Flatness,
    ArtinRees,
    SampleMaximalRt,
}

const COMMANDS: &[(&str, Command)] = &[
    ("groebner", Command::Groebner),
    ("intersect", Command::Intersect),
    ("hilbert", Command::Hilbert),
    ("rees_ideal", Command::ReesIdeal),
    ("multi_rees", Command::MultiRees),
    ("relation_type", Command::RelationType),
    ("assoc_graded", Command::AssocGraded),
    ("effective", Command::Effective),
    ("tor", Command::Tor),
    ("tor2_clause", Command::Tor2Clause),
    ("transversality", Command::Transversality),
    ("sigma_iso", Command::SigmaIso),
    ("pi_iso", Command::PiIso),
    ("intersection_condition", Command::IntersectionCondition),
    ("rt_bound", Command::RtBound),
    ("flatness", Command::Flatness),
    ("artin_rees", Command::ArtinRees),
    ("sample_maximal_rt", Command::SampleMaximalRt),
];

impl Command {
    pub fn name(self) -> &'static str {
        COMMANDS.iter().find(|(_, c)| *c == self).map(|(n, _)| *n).expect("listed")
    }

    fn from_name(name: &str) -> Option<Command> {
        COMMANDS.iter().find(|(n, _)| *n == name).map(|(_, c)| *c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kind {
    Ring,
    Ideal,
    Module,
}

impl Kind {
    fn describe(self) -> &'static str {
        match self {
            Kind::Ring => "a ring",
            Kind::Ideal => "an ideal",
            Kind::Module => "a module",
        }
    }
}

struct Signature {
    slots: &'static [(&'static [Kind], bool)],
    keys: &'static [&'static str],
    tuples: bool,
}

const I: &[Kind] = &[Kind::Ideal];
const M: &[Kind] = &[Kind::Module];
const IM: &[Kind] = &[Kind::Ideal, Kind::Module];
const RIM: &[Kind] = &[Kind::Ring, Kind::Ideal, Kind::Module];
const R: &[Kind] = &[Kind::Ring];

fn signature(c: Command) -> Signature {
    let sig = |slots, keys, tuples| Signature { slots, keys, tuples };
    match c {
        Command::Groebner => sig(&[(I, false)], &["order"], false),
        Command::Intersect => sig(&[(IM, false), (IM, false)], &[], false),
        Command::Hilbert => sig(&[(IM, false)], &["dmax"], false),
        Command::ReesIdeal => sig(&[(I, false)], &[], false),
        Command::MultiRees => sig(&[(I, false), (I, false)], &[], false),
        Command::RelationType => sig(&[(I, false), (M, true)], &[], false),
        Command::AssocGraded => sig(&[(I, false), (M, true)], &["nmax", "dmax"], false),
        Command::Effective => sig(&[(I, false), (M, true)], &["n", "dmax"], false),
        Command::Tor => sig(&[(I, false), (IM, false)], &["index", "dmax"], false),
        Command::Tor2Clause => sig(&[(I, false), (I, false)], &["pmax", "qmax", "dmax"], false),
        Command::Transversality
        | Command::PiIso
        | Command::RtBound
        | Command::Flatness => sig(&[(I, false), (I, false), (M, true)], &["pmax", "qmax", "dmax"], false),
        Command::SigmaIso => sig(&[(I, false), (I, false), (M, true)], &["nmax", "dmax"], false),
        Command::IntersectionCondition => sig(&[(I, false), (I, false), (M, true)], &["pmax", "qmax"], false),
        Command::ArtinRees => sig(&[(I, false), (RIM, false), (RIM, false)], &["nmax"], false),
        Command::SampleMaximalRt => sig(&[(R, false), (M, true)], &[], true),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Ring { name: String, ring: Ring },
    Ideal { name: String, ring: String, gens: Vec<Polynomial> },
    Module { name: String, ring: String, kind: ModuleKind, rank: usize, vectors: Vec<Vec<Polynomial>> },
    Run { command: Command, args: Vec<Arg> },
}

/// A statement with its source position; equality ignores the position.
#[derive(Clone, Debug)]
pub struct Statement {
    pub line: usize,
    pub col: usize,
    pub kind: StmtKind,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Statement {}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

struct Parser<'a> {
    cur: Cursor<'a>,
    symbols: HashMap<String, (Kind, String)>,
    rings: HashMap<String, Ring>,
    current_ring: Option<String>,
}

fn ident_of(t: Option<&Token>) -> Option<&str> {
    match t {
        Some(Token { kind: TokenKind::Ident(s), .. }) => Some(s),
        _ => None,
    }
}

impl<'a> Parser<'a> {
    fn ident(&mut self, what: &str) -> Result<(String, usize)> {
        let off = self.cur.offset();
        match ident_of(self.cur.peek()) {
            Some(s) => {
                let s = s.to_string();
                self.cur.next();
                Ok((s, off))
            }
            None => Err(self.cur.error_here(&format!("expected {what}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let (s, off) = self.ident(&format!("'{kw}'"))?;
        if s == kw {
            Ok(())
        } else {
            Err(self.cur.error_at(off, &format!("expected '{kw}'")))
        }
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        let off = self.cur.offset();
        match self.cur.next() {
            Some(Token { kind: TokenKind::Int(s), .. }) => {
                s.parse().map(|v| (v, off)).map_err(|_| self.cur.error_at(off, "integer too large"))
            }
            _ => Err(self.cur.error_at(off, "expected an integer")),
        }
    }

    fn declare(&mut self, name: &str, off: usize, kind: Kind, ring: &str) -> Result<()> {
        if self.symbols.contains_key(name) {
            return Err(self.cur.error_at(off, &format!("'{name}' is already declared")));
        }
        self.symbols.insert(name.to_string(), (kind, ring.to_string()));
        Ok(())
    }

    fn lookup_ring(&self, name: &str, off: usize) -> Result<Ring> {
        match self.rings.get(name) {
            Some(r) => Ok(r.clone()),
            None if self.symbols.contains_key(name) => {
                Err(self.cur.error_at(off, &format!("'{name}' is not a ring")))
            }
            None => Err(self.cur.error_at(off, &format!("undefined name '{name}'"))),
        }
    }

    fn poly_list(&mut self, ring: &Ring, close: char) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        if self.cur.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(parse_expr(&mut self.cur, ring)?);
            if self.cur.eat_sym(close) {
                return Ok(out);
            }
            self.cur.expect_sym(',')?;
        }
    }

    fn statement(&mut self) -> Result<Statement> {
        let off = self.cur.offset();
        let (line, col) = line_col(self.cur.text, off);
        let (kw, kw_off) = self.ident("a statement keyword")?;
        let kind = match kw.as_str() {
            "ring" => self.ring_decl()?,
            "ideal" => self.ideal_decl()?,
            "module" => self.module_decl()?,
            "run" => self.run()?,
            _ => {
                return Err(self.cur.error_at(kw_off, &format!("unknown statement '{kw}'")));
            }
        };
        self.cur.expect_sym(';')?;
        Ok(Statement { line, col, kind })
    }

    fn ring_decl(&mut self) -> Result<StmtKind> {
        let (name, off) = self.ident("a ring name")?;
        self.cur.expect_sym('=')?;
        self.keyword("QQ")?;
        self.cur.expect_sym('[')?;
        let mut vars = Vec::new();
        if !self.cur.eat_sym(']') {
            loop {
                let (v, voff) = self.ident("a variable name")?;
                if vars.contains(&v) {
                    return Err(self.cur.error_at(voff, &format!("duplicate variable '{v}'")));
                }
                vars.push(v);
                if self.cur.eat_sym(']') {
                    break;
                }
                self.cur.expect_sym(',')?;
            }
        }
        let amb = Ring::polynomial(&vars).map_err(|e| self.cur.error_at(off, &e.to_string()))?;
        let ring = if self.cur.eat_sym('/') {
            self.cur.expect_sym('(')?;
            let rels = self.poly_list(&amb, ')')?;
            Ring::quotient(&amb, rels).map_err(|e| self.cur.error_at(off, &e.to_string()))?
        } else {
            amb
        };
        self.declare(&name, off, Kind::Ring, &name)?;
        self.rings.insert(name.clone(), ring.clone());
        self.current_ring = Some(name.clone());
        Ok(StmtKind::Ring { name, ring })
    }

    fn ideal_decl(&mut self) -> Result<StmtKind> {
        let (name, off) = self.ident("an ideal name")?;
        self.cur.expect_sym('=')?;
        let open = self.cur.offset();
        // The ring may be named after the generators (`in RING`), so parse
        // the generator text once the ring is known.
        let start = self.cur.pos;
        self.skip_balanced()?;
        let ring_name = if ident_of(self.cur.peek()) == Some("in") {
            self.cur.next();
            let (r, roff) = self.ident("a ring name")?;
            self.lookup_ring(&r, roff)?;
            r
        } else {
            match &self.current_ring {
                Some(r) => r.clone(),
                None => return Err(self.cur.error_at(open, "no ring declared before this ideal")),
            }
        };
        let ring = self.rings[&ring_name].clone();
        let end = self.cur.pos;
        self.cur.pos = start;
        self.cur.expect_sym('(')?;
        let gens = self.poly_list(&ring, ')')?;
        self.cur.pos = end;
        self.declare(&name, off, Kind::Ideal, &ring_name)?;
        Ok(StmtKind::Ideal { name, ring: ring_name, gens })
    }

    fn skip_balanced(&mut self) -> Result<()> {
        self.cur.expect_sym('(')?;
        let mut depth = 1;
        while depth > 0 {
            match self.cur.next() {
                Some(Token { kind: TokenKind::Sym('('), .. }) => depth += 1,
                Some(Token { kind: TokenKind::Sym(')'), .. }) => depth -= 1,
                Some(_) => {}
                None => return Err(self.cur.error_here("unbalanced '('")),
            }
        }
        Ok(())
    }

    fn module_decl(&mut self) -> Result<StmtKind> {
        let (name, off) = self.ident("a module name")?;
        self.cur.expect_sym('=')?;
        let (k, koff) = self.ident("'submodule' or 'cokernel'")?;
        let kind = match k.as_str() {
            "submodule" => ModuleKind::Submodule,
            "cokernel" => ModuleKind::Cokernel,
            _ => return Err(self.cur.error_at(koff, "expected 'submodule' or 'cokernel'")),
        };
        self.cur.expect_sym('(')?;
        let (ring_name, roff) = self.ident("a ring name")?;
        let ring = self.lookup_ring(&ring_name, roff)?;
        self.cur.expect_sym('^')?;
        let (rank, rank_off) = self.int()?;
        if rank == 0 {
            return Err(self.cur.error_at(rank_off, "rank must be positive"));
        }
        let rank = rank as usize;
        let mut vectors = Vec::new();
        if self.cur.eat_sym(';') && !self.cur.peek_sym(')') {
            loop {
                let voff = self.cur.offset();
                let v = if self.cur.eat_sym('[') {
                    self.poly_list(&ring, ']')?
                } else {
                    vec![parse_expr(&mut self.cur, &ring)?]
                };
                if v.len() != rank {
                    return Err(self.cur.error_at(
                        voff,
                        &format!("vector with {} entries in {ring_name}^{rank}", v.len()),
                    ));
                }
                vectors.push(v);
                if !self.cur.eat_sym(',') {
                    break;
                }
            }
        }
        self.cur.expect_sym(')')?;
        self.declare(&name, off, Kind::Module, &ring_name)?;
        Ok(StmtKind::Module { name, ring: ring_name, kind, rank, vectors })
    }

    fn run(&mut self) -> Result<StmtKind> {
        let (cname, coff) = self.ident("a command name")?;
        let command = Command::from_name(&cname)
            .ok_or_else(|| self.cur.error_at(coff, &format!("unknown command '{cname}'")))?;
        let sig = signature(command);
        let mut args = Vec::new();
        let mut positional: Vec<(Kind, usize)> = Vec::new();
        let mut ring_of_args: Option<String> = None;
        while !self.cur.peek_sym(';') && self.cur.peek().is_some() {
            let off = self.cur.offset();
            if self.cur.peek_sym('(') {
                if !sig.tuples {
                    return Err(self.cur.error_here(&format!("'{cname}' takes no point arguments")));
                }
                let ring = match &ring_of_args {
                    Some(r) => self.rings[r].clone(),
                    None => return Err(self.cur.error_here("a point must follow the ring argument")),
                };
                self.cur.next();
                let vals = self.poly_list(&ring, ')')?;
                let mut point = Vec::new();
                for v in vals {
                    match v.constant_value() {
                        Some(c) => point.push(c),
                        None if v.is_zero() => point.push(Rational::from_integer(0.into())),
                        None => return Err(self.cur.error_at(off, "point coordinates must be rational numbers")),
                    }
                }
                if point.len() != ring.nvars() {
                    return Err(self.cur.error_at(
                        off,
                        &format!("point with {} coordinates in {} variables", point.len(), ring.nvars()),
                    ));
                }
                args.push(Arg::Tuple(point));
                continue;
            }
            let (name, noff) = self.ident("an argument")?;
            if self.cur.eat_sym('=') {
                if !sig.keys.contains(&name.as_str()) {
                    return Err(self.cur.error_at(noff, &format!("'{cname}' has no parameter '{name}'")));
                }
                let value = if let Some(v) = ident_of(self.cur.peek()) {
                    let v = v.to_string();
                    self.cur.next();
                    KeyValue::Name(v)
                } else {
                    KeyValue::Int(self.int()?.0)
                };
                if args.iter().any(|a| matches!(a, Arg::Key(k, _) if *k == name)) {
                    return Err(self.cur.error_at(noff, &format!("parameter '{name}' given twice")));
                }
                args.push(Arg::Key(name, value));
                continue;
            }
            let Some((kind, ring)) = self.symbols.get(&name).cloned() else {
                return Err(self.cur.error_at(noff, &format!("undefined name '{name}'")));
            };
            let slot = positional.len();
            let Some((allowed, _)) = sig.slots.get(slot) else {
                return Err(self.cur.error_at(noff, &format!("too many arguments for '{cname}'")));
            };
            if !allowed.contains(&kind) {
                let want: Vec<&str> = allowed.iter().map(|k| k.describe()).collect();
                return Err(self.cur.error_at(
                    noff,
                    &format!("argument {} of '{cname}' must be {}", slot + 1, want.join(" or ")),
                ));
            }
            match &ring_of_args {
                Some(r) if *r != ring => {
                    return Err(self.cur.error_at(
                        noff,
                        &format!("ring mismatch: '{name}' is over {ring}, earlier operands over {r}"),
                    ));
                }
                _ => ring_of_args = Some(ring),
            }
            positional.push((kind, noff));
            args.push(Arg::Name(name));
        }
        let required = sig.slots.iter().filter(|(_, opt)| !opt).count();
        if positional.len() < required {
            return Err(self.cur.error_here(&format!(
                "'{cname}' needs at least {required} argument{}",
                if required == 1 { "" } else { "s" }
            )));
        }
        if command == Command::Intersect && positional[0].0 != positional[1].0 {
            return Err(self.cur.error_at(positional[1].1, "intersect takes two ideals or two modules"));
        }
        Ok(StmtKind::Run { command, args })
    }
}

/// Parse a session script. Names must be declared before use, and the
/// named operands of a command must share one ring.
pub fn parse_session(text: &str) -> Result<Script> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        cur: Cursor { tokens: &tokens, pos: 0, text },
        symbols: HashMap::new(),
        rings: HashMap::new(),
        current_ring: None,
    };
    let mut statements = Vec::new();
    while p.cur.peek().is_some() {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Name(n) => f.write_str(n),
            Arg::Tuple(v) => write!(f, "({})", join(v)),
            Arg::Key(k, KeyValue::Int(v)) => write!(f, "{k}={v}"),
            Arg::Key(k, KeyValue::Name(v)) => write!(f, "{k}={v}"),
        }
    }
}

impl StmtKind {
    fn write(&self, f: &mut fmt::Formatter<'_>, current_ring: Option<&str>) -> fmt::Result {
        match self {
            StmtKind::Ring { name, ring } => {
                write!(f, "ring {name} = QQ[{}]", ring.variables().join(","))?;
                if ring.is_quotient() {
                    write!(f, " / ({})", join(ring.relations()))?;
                }
            }
            StmtKind::Ideal { name, ring, gens } => {
                write!(f, "ideal {name} = ({})", join(gens))?;
                if current_ring != Some(ring.as_str()) {
                    write!(f, " in {ring}")?;
                }
            }
            StmtKind::Module { name, ring, kind, rank, vectors } => {
                let k = match kind {
                    ModuleKind::Submodule => "submodule",
                    ModuleKind::Cokernel => "cokernel",
                };
                write!(f, "module {name} = {k}({ring}^{rank}")?;
                if !vectors.is_empty() {
                    let vs: Vec<String> = vectors.iter().map(|v| format!("[{}]", join(v))).collect();
                    write!(f, "; {}", vs.join(", "))?;
                }
                f.write_str(")")?;
            }
            StmtKind::Run { command, args } => {
                f.write_str("run ")?;
                f.write_str(command.name())?;
                for a in args {
                    write!(f, " {a}")?;
                }
            }
        }
        f.write_str(";")
    }
}

impl fmt::Display for Statement {
    /// The statement alone; ideals always name their ring.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.write(f, None)
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut current: Option<&str> = None;
        for s in &self.statements {
            s.kind.write(f, current)?;
            f.write_str("\n")?;
            if let StmtKind::Ring { name, .. } = &s.kind {
                current = Some(name);
            }
        }
        Ok(())
    }
}
