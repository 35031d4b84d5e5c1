use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{Polynomial, TermOrder};
use crate::error::{Error, Result};

struct RingInner {
    variables: Vec<String>,
    relations: Vec<Polynomial>,
    default_order: TermOrder,
    ambient: Option<Ring>,
    relation_gb: OnceLock<Vec<Polynomial>>,
}

/// A polynomial ring over ℚ or a quotient of one by finitely many relations.
///
/// Cheap to clone. Quotient relations are polynomials over the ambient ring;
/// elements of a quotient ring are reduced lazily (see
/// [`Polynomial::reduce_mod_ring`]).
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

pub type RingDescriptor = Ring;

impl Ring {
    pub fn polynomial<S: AsRef<str>>(variables: &[S]) -> Result<Ring> {
        let variables: Vec<String> = variables.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &variables {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate variable '{v}'")));
            }
            if v.is_empty() || !v.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') {
                return Err(Error::InvalidArgument(format!("bad variable name '{v}'")));
            }
        }
        Ok(Ring(Arc::new(RingInner {
            variables,
            relations: Vec::new(),
            default_order: TermOrder::DegRevLex,
            ambient: None,
            relation_gb: OnceLock::new(),
        })))
    }

    /// The quotient of `ambient` (a polynomial ring) by `relations`.
    pub fn quotient(ambient: &Ring, relations: Vec<Polynomial>) -> Result<Ring> {
        if ambient.is_quotient() {
            return Err(Error::Unsupported("quotient of a quotient ring".into()));
        }
        for r in &relations {
            if r.ring() != ambient {
                return Err(Error::RingMismatch(
                    "quotient relation not over the ambient ring".into(),
                ));
            }
        }
        let relations: Vec<Polynomial> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        if relations.is_empty() {
            return Ok(ambient.clone());
        }
        Ok(Ring(Arc::new(RingInner {
            variables: ambient.0.variables.clone(),
            relations,
            default_order: ambient.0.default_order.clone(),
            ambient: Some(ambient.clone()),
            relation_gb: OnceLock::new(),
        })))
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn nvars(&self) -> usize {
        self.0.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }

    /// Quotient relations, as polynomials over [`Ring::ambient`].
    pub fn relations(&self) -> &[Polynomial] {
        &self.0.relations
    }

    pub fn is_quotient(&self) -> bool {
        !self.0.relations.is_empty()
    }

    pub fn default_order(&self) -> &TermOrder {
        &self.0.default_order
    }

    /// The polynomial ring this ring is a quotient of (itself if none).
    pub fn ambient(&self) -> Ring {
        self.0.ambient.clone().unwrap_or_else(|| self.clone())
    }

    /// Reduced Gröbner basis of the quotient relations under the default
    /// order, computed once.
    pub fn relation_basis(&self) -> &[Polynomial] {
        self.0.relation_gb.get_or_init(|| {
            if self.0.relations.is_empty() {
                return Vec::new();
            }
            crate::groebner::ideal_basis(&self.0.relations, &self.0.default_order)
        })
    }

    pub fn same(&self, other: &Ring) -> bool {
        self == other
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.variables == other.0.variables
                && self.0.default_order == other.0.default_order
                && self.0.relations.len() == other.0.relations.len()
                && self
                    .0
                    .relations
                    .iter()
                    .zip(&other.0.relations)
                    .all(|(a, b)| a.terms() == b.terms()))
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.0.variables.join(","))?;
        if self.is_quotient() {
            let rels: Vec<String> = self.0.relations.iter().map(|r| r.to_string()).collect();
            write!(f, " / ({})", rels.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
