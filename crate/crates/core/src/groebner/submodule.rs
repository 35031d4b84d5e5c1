use std::sync::{Arc, OnceLock};

use super::engine::{buchberger, reduce};
use super::hilbert::count_standard;
use super::vector::{ModuleOrder, Term, Vector};
use crate::polycore::{Monomial, Rational, TermOrder};

/// Submodule of the free module `P^rank` over the polynomial ring
/// `P = ℚ[x_1..x_nvars]`, kept with a lazily computed reduced Gröbner basis.
///
/// All generators are sorted for [`Submodule::order`]. Clones share the
/// cached basis.
#[derive(Clone, Debug)]
pub struct Submodule {
    nvars: usize,
    rank: usize,
    order: ModuleOrder,
    gens: Vec<Vector>,
    gb: Arc<OnceLock<Vec<Vector>>>,
}

pub fn default_module_order() -> ModuleOrder {
    ModuleOrder::pot(TermOrder::DegRevLex)
}

impl Submodule {
    pub fn new(nvars: usize, rank: usize, gens: Vec<Vector>) -> Self {
        Submodule::with_order(nvars, rank, default_module_order(), gens)
    }

    pub fn with_order(nvars: usize, rank: usize, order: ModuleOrder, gens: Vec<Vector>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.resort(&order))
            .collect();
        Submodule { nvars, rank, order, gens, gb: Arc::new(OnceLock::new()) }
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        Submodule::new(nvars, rank, Vec::new())
    }

    /// The whole free module.
    pub fn full(nvars: usize, rank: usize) -> Self {
        Submodule::new(nvars, rank, (0..rank).map(|i| Vector::unit(nvars, i)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn gens(&self) -> &[Vector] {
        &self.gens
    }

    pub fn gb(&self) -> &[Vector] {
        self.gb.get_or_init(|| {
            buchberger(&self.gens, &self.order, &[], None).expect("no cancellation token")
        })
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        reduce(&v.resort(&self.order), self.gb(), &self.order)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.is_zero() || self.normal_form(v).is_zero()
    }

    pub fn contains_sub(&self, other: &Submodule) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Submodule) -> bool {
        if self.order == other.order {
            return self.gb() == other.gb();
        }
        self.contains_sub(other) && other.contains_sub(self)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().map(|g| g.resort(&self.order)));
        Submodule::with_order(self.nvars, self.rank, self.order.clone(), gens)
    }

    pub fn add_gens(&self, extra: &[Vector]) -> Submodule {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Submodule::with_order(self.nvars, self.rank, self.order.clone(), gens)
    }

    /// `I * self`, with `ideal` given by generators placed at position 0.
    pub fn times_ideal(&self, ideal: &[Vector]) -> Submodule {
        let mut gens = Vec::new();
        for f in ideal {
            let f = f.component(0);
            for g in &self.gens {
                gens.push(g.mul_poly(&f, &self.order));
            }
        }
        Submodule::with_order(self.nvars, self.rank, self.order.clone(), gens)
    }

    /// `self ∩ other`, through the kernel of `P^r ⊕ P^r` generated by
    /// `(u, u)` and `(v, 0)`.
    pub fn intersect(&self, other: &Submodule) -> Submodule {
        let r = self.rank;
        let ord = &self.order;
        let mut rows = Vec::new();
        for u in &self.gens {
            rows.push((u.clone(), u.clone()));
        }
        for v in &other.gens {
            rows.push((v.clone(), Vector::zero()));
        }
        let gens = eliminate_top(r, &rows, ord);
        Submodule::with_order(self.nvars, r, ord.clone(), gens)
    }

    /// Graded dimensions of `P^r / self` in degrees `0..=maxdeg`, where
    /// basis vector `i` has degree `shifts[i]`. Meaningful for homogeneous
    /// submodules only.
    pub fn quotient_dims(&self, shifts: &[i64], maxdeg: i64) -> Vec<u64> {
        let weights = vec![vec![1i64]; self.nvars];
        (0..=maxdeg)
            .map(|d| self.quotient_dim_weighted(&weights, shifts.iter().map(|&s| vec![s]).collect(), &[d]))
            .collect()
    }

    /// Dimension of `P^r / self` in one multidegree for a multigrading.
    pub fn quotient_dim_weighted(
        &self,
        weights: &[Vec<i64>],
        pos_weights: Vec<Vec<i64>>,
        target: &[i64],
    ) -> u64 {
        let gb = self.gb();
        let mut total = 0;
        for pos in 0..self.rank {
            let leads: Vec<&Monomial> = gb
                .iter()
                .filter_map(|g| g.lead_term())
                .filter(|t| t.pos == pos)
                .map(|t| &t.mono)
                .collect();
            let shift = pos_weights
                .get(pos)
                .cloned()
                .unwrap_or_else(|| vec![0; target.len()]);
            let t: Vec<i64> = target.iter().zip(&shift).map(|(a, b)| a - b).collect();
            total += count_standard(weights, &t, &leads);
        }
        total
    }

    pub fn is_homogeneous(&self, shifts: &[i64]) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous(shifts))
    }
}

/// For rows `(top, bottom)` in `P^top_rank ⊕ P^bottom_rank`, return a
/// Gröbner basis (under `ord`, re-sorted) of
/// `{ b : (0, b) ∈ ⟨rows⟩ }`, computed with an order in which the top block
/// dominates.
pub fn eliminate_top(top_rank: usize, rows: &[(Vector, Vector)], ord: &ModuleOrder) -> Vec<Vector> {
    let aug_ord = ModuleOrder {
        mono: ord.mono.clone(),
        block_starts: vec![top_rank],
        pot: true,
    };
    let gens: Vec<Vector> = rows
        .iter()
        .map(|(t, b)| {
            let mut terms: Vec<(Term, Rational)> = t.terms().to_vec();
            terms.extend(
                b.terms()
                    .iter()
                    .map(|(tm, c)| (Term::new(tm.mono.clone(), tm.pos + top_rank), c.clone())),
            );
            Vector::from_unsorted(terms, &aug_ord)
        })
        .collect();
    let gb = buchberger(&gens, &aug_ord, &[], None).expect("no cancellation token");
    gb.into_iter()
        .filter(|g| g.lead_term().is_some_and(|t| t.pos >= top_rank))
        .map(|g| g.map_positions(|p| p - top_rank, ord))
        .collect()
}
