use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::lexer::{tokenize, Token, TokenKind};
use super::{Monomial, Rational, Ring, TermOrder};
use crate::error::{Error, Result};

/// Exact polynomial with rational coefficients. No zero coefficient is ever
/// stored.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    /// Scale the first operand by the second, which must be a constant.
    ScalarMul,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        let mut p = Polynomial::zero(ring);
        p.terms.insert(Monomial::var(ring.nvars(), i), Rational::one());
        p
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Build from (monomial, coefficient) pairs, summing repeats.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::Dimension(format!(
                    "monomial with {} exponents in a ring with {} variables",
                    m.nvars(),
                    ring.nvars()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn from_map_unchecked(ring: &Ring, terms: BTreeMap<Monomial, Rational>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self, ord: &TermOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    /// The same terms viewed in another ring with the same variables.
    pub fn in_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.variables() != self.ring.variables() {
            return Err(Error::RingMismatch(format!(
                "cannot move a polynomial from {} to {}",
                self.ring, ring
            )));
        }
        Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() })
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "operands live in {} and {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same ring");
        }
        out
    }

    /// Normal form modulo the Gröbner basis of the ring's quotient relations
    /// (identity on polynomial rings). Idempotent.
    pub fn reduce_mod_ring(&self) -> Polynomial {
        if !self.ring.is_quotient() {
            return self.clone();
        }
        let basis = self.ring.relation_basis();
        let nf = crate::groebner::reduce_poly(
            &self.in_ring(&self.ring.ambient()).expect("same variables"),
            basis,
            self.ring.default_order(),
        );
        Polynomial { ring: self.ring.clone(), terms: nf.terms }
    }

    /// Exact quotient `self / d` in the ambient polynomial ring, if `d`
    /// divides `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let ord = TermOrder::DegRevLex;
        let (lm, lc) = d.leading_term(&ord).map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term(&ord).map(|(m, c)| (m.clone(), c.clone())) {
            let q = lm.quotient_of(&m)?;
            let coef = c / &lc;
            rem = rem
                .checked_sub(&d.mul_monomial(&q, &coef))
                .expect("same ring");
            quot.add_term(q, coef);
        }
        Some(quot)
    }

    /// The same polynomial in a ring whose leading variables are this
    /// ring's variables (extra variables appended).
    pub fn extend_to(&self, ring: &Ring) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if ring.nvars() < n || ring.variables()[..n] != *self.ring.variables() {
            return Err(Error::RingMismatch(format!("{} does not extend {}", ring, self.ring)));
        }
        let terms = self.terms.iter().map(|(m, c)| (m.embed(0, ring.nvars()), c.clone())).collect();
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Substitute `values[i]` for variable `i` (used for translations).
    pub fn substitute(&self, values: &[Polynomial]) -> Result<Polynomial> {
        if values.len() != self.ring.nvars() {
            return Err(Error::Dimension("substitution length".into()));
        }
        let target = values.first().map(|v| v.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.checked_mul(&values[i].pow(e))?;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Parse the text syntax `3/2*x^2*y - z + 1` over `ring`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial> {
        let tokens = tokenize(text)?;
        let mut cur = Cursor { tokens: &tokens, pos: 0, text };
        let p = parse_expr(&mut cur, ring)?;
        if let Some(t) = cur.peek() {
            return Err(cur.error_at(t.offset, "unexpected trailing input"));
        }
        Ok(p)
    }

    /// Terms sorted in decreasing default order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let ord = self.ring.default_order();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }
}

/// `poly_arith` from the operation table: exact arithmetic with a ring check.
pub fn poly_arith(op: PolyOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    match op {
        PolyOp::Add => f.checked_add(g),
        PolyOp::Sub => f.checked_sub(g),
        PolyOp::Mul => f.checked_mul(g),
        PolyOp::ScalarMul => {
            f.check_ring(g)?;
            let c = g
                .constant_value()
                .ok_or_else(|| Error::InvalidArgument("scalar operand is not constant".into()))?;
            Ok(f.scale(&c))
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.variables();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.display_with(names))?;
            } else {
                write!(f, "{a}*{}", m.display_with(names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) struct Cursor<'a> {
    pub tokens: &'a [Token],
    pub pos: usize,
    pub text: &'a str,
}

impl<'a> Cursor<'a> {
    pub fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    pub fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn peek_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { kind: TokenKind::Sym(s), .. }) if *s == c)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.peek_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn offset(&self) -> usize {
        self.peek().map_or(self.text.len(), |t| t.offset)
    }

    pub fn error_at(&self, offset: usize, msg: &str) -> Error {
        let (line, col) = super::lexer::line_col(self.text, offset);
        Error::Parse { line, col, msg: msg.to_string() }
    }

    pub fn error_here(&self, msg: &str) -> Error {
        self.error_at(self.offset(), msg)
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error_here(&format!("expected '{c}'")))
        }
    }
}

pub(crate) fn parse_expr(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial> {
    let mut acc = parse_product(cur, ring)?;
    loop {
        if cur.eat_sym('+') {
            acc = acc.checked_add(&parse_product(cur, ring)?)?;
        } else if cur.eat_sym('-') {
            acc = acc.checked_sub(&parse_product(cur, ring)?)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_product(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial> {
    let mut acc = parse_unary(cur, ring)?;
    loop {
        if cur.eat_sym('*') {
            acc = acc.checked_mul(&parse_unary(cur, ring)?)?;
        } else if cur.peek_sym('/') {
            let off = cur.offset();
            cur.next();
            let d = parse_unary(cur, ring)?;
            match d.constant_value() {
                Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::one() / c)),
                _ => return Err(cur.error_at(off, "division only by a nonzero constant")),
            }
        } else {
            return Ok(acc);
        }
    }
}

fn parse_unary(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial> {
    if cur.eat_sym('-') {
        return Ok(parse_unary(cur, ring)?.neg());
    }
    if cur.eat_sym('+') {
        return parse_unary(cur, ring);
    }
    let base = parse_atom(cur, ring)?;
    if cur.eat_sym('^') {
        match cur.next() {
            Some(Token { kind: TokenKind::Int(s), offset }) => {
                let e: u32 = s
                    .parse()
                    .map_err(|_| cur.error_at(*offset, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(cur.error_here("expected a nonnegative integer exponent")),
        }
    } else {
        Ok(base)
    }
}

fn parse_atom(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial> {
    let off = cur.offset();
    match cur.next() {
        Some(Token { kind: TokenKind::Int(s), .. }) => {
            let n: BigInt = s.parse().expect("lexer yields digits");
            Ok(Polynomial::constant(ring, Rational::from_integer(n)))
        }
        Some(Token { kind: TokenKind::Ident(name), .. }) => match ring.var_index(name) {
            Some(i) => Ok(Polynomial::var(ring, i)),
            None => Err(cur.error_at(off, &format!("unknown variable '{name}'"))),
        },
        Some(Token { kind: TokenKind::Sym('('), .. }) => {
            let p = parse_expr(cur, ring)?;
            cur.expect_sym(')')?;
            Ok(p)
        }
        _ => Err(cur.error_at(off, "expected a number, variable or '('")),
    }
}
