use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::polycore::{Monomial, Rational, TermOrder};

/// A module term `mono * e_pos`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub mono: Monomial,
    pub pos: usize,
}

impl Term {
    pub fn new(mono: Monomial, pos: usize) -> Self {
        Term { mono, pos }
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.pos == other.pos && self.mono.divides(&other.mono)
    }

    pub fn lcm(&self, other: &Term) -> Option<Term> {
        (self.pos == other.pos).then(|| Term::new(self.mono.lcm(&other.mono), self.pos))
    }

    pub fn degree(&self, shifts: &[i64]) -> i64 {
        self.mono.degree() as i64 + shifts.get(self.pos).copied().unwrap_or(0)
    }
}

/// Order on module terms. Positions are grouped into blocks starting at the
/// `block_starts` boundaries; a lower block always dominates. Inside a block
/// the comparison is position-over-term (`pot`) or term-over-position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub mono: TermOrder,
    pub block_starts: Vec<usize>,
    pub pot: bool,
}

impl ModuleOrder {
    pub fn pot(mono: TermOrder) -> Self {
        ModuleOrder { mono, block_starts: Vec::new(), pot: true }
    }

    pub fn top(mono: TermOrder) -> Self {
        ModuleOrder { mono, block_starts: Vec::new(), pot: false }
    }

    pub fn with_blocks(mut self, starts: Vec<usize>) -> Self {
        self.block_starts = starts;
        self
    }

    fn block(&self, pos: usize) -> usize {
        self.block_starts.iter().filter(|&&s| s <= pos).count()
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        if !self.block_starts.is_empty() {
            let (ba, bb) = (self.block(a.pos), self.block(b.pos));
            if ba != bb {
                return bb.cmp(&ba);
            }
        }
        if self.pot {
            b.pos.cmp(&a.pos).then_with(|| self.mono.cmp(&a.mono, &b.mono))
        } else {
            self.mono.cmp(&a.mono, &b.mono).then_with(|| b.pos.cmp(&a.pos))
        }
    }
}

/// Sparse vector in a free module over ℚ[x]; terms kept in increasing order
/// for some [`ModuleOrder`] fixed by the caller, so the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    terms: Vec<(Term, Rational)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_unsorted(mut terms: Vec<(Term, Rational)>, ord: &ModuleOrder) -> Self {
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        let mut out: Vec<(Term, Rational)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((t, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
        Vector { terms: out }
    }

    /// One polynomial (monomial → coefficient) placed at position `pos`.
    pub fn from_component(
        terms: &BTreeMap<Monomial, Rational>,
        pos: usize,
        ord: &ModuleOrder,
    ) -> Self {
        Vector::from_unsorted(
            terms.iter().map(|(m, c)| (Term::new(m.clone(), pos), c.clone())).collect(),
            ord,
        )
    }

    pub fn unit(nvars: usize, pos: usize) -> Self {
        Vector { terms: vec![(Term::new(Monomial::one(nvars), pos), Rational::one())] }
    }

    /// Caller guarantees strictly increasing terms and no zero coefficient.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Term, Rational)>) -> Self {
        Vector { terms }
    }

    pub(crate) fn pop_lead(&mut self) -> Option<(Term, Rational)> {
        self.terms.pop()
    }

    pub fn terms(&self) -> &[(Term, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Term, Rational)> {
        self.terms.last()
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.last().map(|(t, _)| t)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn resort(&self, ord: &ModuleOrder) -> Vector {
        Vector::from_unsorted(self.terms.clone(), ord)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector { terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect() }
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            None => Vector::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    pub fn add(&self, other: &Vector, ord: &ModuleOrder) -> Vector {
        self.merge(other, &Rational::one(), None, ord)
    }

    pub fn sub(&self, other: &Vector, ord: &ModuleOrder) -> Vector {
        self.merge(other, &-Rational::one(), None, ord)
    }

    /// `self - c * m * g`.
    pub fn sub_mul(&self, c: &Rational, m: &Monomial, g: &Vector, ord: &ModuleOrder) -> Vector {
        self.merge(g, &-c, Some(m), ord)
    }

    /// `self + c * m * g`, where multiplication by the monomial `m` keeps
    /// `g` sorted.
    fn merge(&self, g: &Vector, c: &Rational, m: Option<&Monomial>, ord: &ModuleOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(t, k)| {
                let mono = match m {
                    Some(m) => t.mono.mul(m),
                    None => t.mono.clone(),
                };
                (Term::new(mono, t.pos), k * c)
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp(&x.0, &y.0) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (t, k1) = a.next().unwrap();
                        let (_, k2) = b.next().unwrap();
                        let s = k1 + k2;
                        if !s.is_zero() {
                            out.push((t.clone(), s));
                        }
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (Term::new(t.mono.mul(m), t.pos), a * c))
                .collect(),
        }
    }

    /// Multiply by a polynomial given as a term map.
    pub fn mul_poly(&self, p: &BTreeMap<Monomial, Rational>, ord: &ModuleOrder) -> Vector {
        let mut acc: HashMap<Term, Rational> = HashMap::new();
        for (m, c) in p {
            for (t, a) in &self.terms {
                *acc.entry(Term::new(t.mono.mul(m), t.pos)).or_insert_with(Rational::zero) += a * c;
            }
        }
        Vector::from_unsorted(acc.into_iter().collect(), ord)
    }

    /// Relabel positions through `f` (the result is re-sorted).
    pub fn map_positions(&self, f: impl Fn(usize) -> usize, ord: &ModuleOrder) -> Vector {
        Vector::from_unsorted(
            self.terms.iter().map(|(t, c)| (Term::new(t.mono.clone(), f(t.pos)), c.clone())).collect(),
            ord,
        )
    }

    /// Apply a map to every monomial (e.g. embedding into more variables).
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial, ord: &ModuleOrder) -> Vector {
        Vector::from_unsorted(
            self.terms.iter().map(|(t, c)| (Term::new(f(&t.mono), t.pos), c.clone())).collect(),
            ord,
        )
    }

    /// Terms at position `pos` as a polynomial term map.
    pub fn component(&self, pos: usize) -> BTreeMap<Monomial, Rational> {
        self.terms
            .iter()
            .filter(|(t, _)| t.pos == pos)
            .map(|(t, c)| (t.mono.clone(), c.clone()))
            .collect()
    }

    pub fn max_pos(&self) -> Option<usize> {
        self.terms.iter().map(|(t, _)| t.pos).max()
    }

    pub fn min_pos(&self) -> Option<usize> {
        self.terms.iter().map(|(t, _)| t.pos).min()
    }

    /// Largest shifted degree of a term; `None` for zero.
    pub fn degree(&self, shifts: &[i64]) -> Option<i64> {
        self.terms.iter().map(|(t, _)| t.degree(shifts)).max()
    }

    pub fn is_homogeneous(&self, shifts: &[i64]) -> bool {
        let mut degs = self.terms.iter().map(|(t, _)| t.degree(shifts));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous with respect to integer variable weights and position
    /// weights.
    pub fn is_weighted_homogeneous(&self, var_weights: &[i64], pos_weights: &[i64]) -> bool {
        let w = |t: &Term| -> i64 {
            t.mono
                .exponents()
                .iter()
                .zip(var_weights)
                .map(|(&e, &w)| e as i64 * w)
                .sum::<i64>()
                + pos_weights.get(t.pos).copied().unwrap_or(0)
        };
        let mut it = self.terms.iter().map(|(t, _)| w(t));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }
}
