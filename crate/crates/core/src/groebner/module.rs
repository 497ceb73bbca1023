//! Buchberger's algorithm for submodules of a graded free module R^r.
//!
//! Ideals are the rank-one case. Module terms are ordered position over term:
//! a smaller position index is the larger term, ties broken by the ring's
//! monomial order. Pairs are selected by the normal strategy and pruned with
//! the Gebauer–Möller installation of Buchberger's criteria; the coprime
//! (product) criterion is only sound for rank one and is skipped otherwise.

use std::cmp::Ordering;

use crate::error::Result;
use crate::limits::Budget;
use crate::numeric::Coeff;
use crate::polyring::{Monomial, PolyRing, Polynomial};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: Coeff,
    pub pos: usize,
    pub mono: Monomial,
}

/// An element of a free module, terms strictly descending in the module order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// `f·e_pos`.
    pub fn from_poly(f: &Polynomial, pos: usize) -> Self {
        Vector {
            terms: f.terms().iter().map(|(c, m)| Term { coeff: c.clone(), pos, mono: m.clone() }).collect(),
        }
    }

    /// The coordinate at `pos` as a polynomial.
    pub fn component(&self, pos: usize) -> Polynomial {
        Polynomial::from_sorted_terms(
            self.terms.iter().filter(|t| t.pos == pos).map(|t| (t.coeff.clone(), t.mono.clone())).collect(),
        )
    }

    pub fn components(&self, rank: usize) -> Vec<Polynomial> {
        (0..rank).map(|i| self.component(i)).collect()
    }

    /// Relabels positions `p ↦ p - offset`; all positions must be ≥ offset.
    pub fn shifted_down(&self, offset: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.clone(), pos: t.pos - offset, mono: t.mono.clone() })
                .collect(),
        }
    }

    pub fn max_total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.mono.total_degree()).max().unwrap_or(0)
    }
}

/// R^r with basis degrees `shifts` (deg e_i = shifts[i]).
#[derive(Clone, Debug)]
pub struct FreeModule<'r> {
    ring: &'r PolyRing,
    shifts: Vec<u64>,
}

impl<'r> FreeModule<'r> {
    pub fn new(ring: &'r PolyRing, shifts: Vec<u64>) -> Self {
        FreeModule { ring, shifts }
    }

    pub fn ring(&self) -> &'r PolyRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[u64] {
        &self.shifts
    }

    pub fn cmp_terms(&self, pa: usize, ma: &Monomial, pb: usize, mb: &Monomial) -> Ordering {
        pb.cmp(&pa).then_with(|| self.ring.cmp_monomials(ma, mb))
    }

    pub fn term_degree(&self, pos: usize, m: &Monomial) -> u64 {
        self.ring.degree(m) + self.shifts[pos]
    }

    /// Degree of the leading term (the degree of a homogeneous vector).
    pub fn degree(&self, v: &Vector) -> Option<u64> {
        v.lead().map(|t| self.term_degree(t.pos, &t.mono))
    }

    pub fn is_homogeneous(&self, v: &Vector) -> bool {
        let mut it = v.terms.iter().map(|t| self.term_degree(t.pos, &t.mono));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Canonical vector from arbitrary terms.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| self.cmp_terms(b.pos, &b.mono, a.pos, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => last.coeff = &last.coeff + &t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Vector { terms: out }
    }

    /// Vector with the given coordinates.
    pub fn from_components(&self, comps: &[Polynomial]) -> Vector {
        let mut terms = Vec::new();
        for (pos, f) in comps.iter().enumerate() {
            terms.extend(Vector::from_poly(f, pos).terms);
        }
        // concatenation of descending blocks in increasing position is already sorted
        Vector { terms }
    }

    fn merge(&self, f: &[Term], c: &Coeff, m: &Monomial, g: &[Term]) -> Vec<Term> {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < f.len() && j < g.len() {
            let b_mono = g[j].mono.mul(m);
            match self.cmp_terms(f[i].pos, &f[i].mono, g[j].pos, &b_mono) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: c * &g[j].coeff, pos: g[j].pos, mono: b_mono });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &f[i].coeff + &(c * &g[j].coeff);
                    if !s.is_zero() {
                        out.push(Term { coeff: s, pos: f[i].pos, mono: b_mono });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        out.extend(g[j..].iter().map(|t| Term { coeff: c * &t.coeff, pos: t.pos, mono: t.mono.mul(m) }));
        out
    }

    /// `f + c·m·g`.
    pub fn add_scaled(&self, f: &Vector, c: &Coeff, m: &Monomial, g: &Vector) -> Vector {
        if c.is_zero() {
            return f.clone();
        }
        Vector { terms: self.merge(&f.terms, c, m, &g.terms) }
    }

    pub fn add(&self, f: &Vector, g: &Vector) -> Vector {
        self.add_scaled(f, &self.ring.field().one(), &self.ring.one_monomial(), g)
    }

    /// `c·m·f`.
    pub fn mul_term(&self, f: &Vector, c: &Coeff, m: &Monomial) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: f.terms.iter().map(|t| Term { coeff: c * &t.coeff, pos: t.pos, mono: t.mono.mul(m) }).collect(),
        }
    }

    /// `p·f` for a polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial, f: &Vector) -> Vector {
        p.terms().iter().fold(Vector::zero(), |acc, (c, m)| self.add_scaled(&acc, c, m, f))
    }

    pub fn monic(&self, f: &Vector) -> Vector {
        match f.lead() {
            Some(t) if !t.coeff.is_one() => {
                let inv = t.coeff.inverse().expect("nonzero lead");
                self.mul_term(f, &inv, &self.ring.one_monomial())
            }
            _ => f.clone(),
        }
    }

    /// Fully reduced remainder of `f` modulo `basis` (any generating list; unique when it is a Gröbner basis).
    pub fn normal_form(&self, f: &Vector, basis: &[Vector]) -> Vector {
        let refs: Vec<&Vector> = basis.iter().collect();
        self.normal_form_refs(f, &refs)
    }

    pub(crate) fn normal_form_refs(&self, f: &Vector, basis: &[&Vector]) -> Vector {
        let mut p = f.terms.clone();
        let mut rest: Vec<Term> = Vec::new();
        let mut i = 0;
        while i < p.len() {
            let t = &p[i];
            let reducer = basis.iter().find_map(|g| {
                let l = g.lead()?;
                if l.pos == t.pos {
                    l.mono.quotient_of(&t.mono).map(|q| (g, l, q))
                } else {
                    None
                }
            });
            match reducer {
                Some((g, l, q)) => {
                    let c = -&t.coeff.div(&l.coeff);
                    p = self.merge(&p[i..], &c, &q, &g.terms);
                    i = 0;
                }
                None => {
                    rest.push(p[i].clone());
                    i += 1;
                }
            }
        }
        Vector { terms: rest }
    }

    fn s_vector(&self, f: &Vector, g: &Vector) -> Vector {
        let (lf, lg) = (f.lead().unwrap(), g.lead().unwrap());
        let l = lf.mono.lcm(&lg.mono);
        let a = lf.mono.quotient_of(&l).unwrap();
        let b = lg.mono.quotient_of(&l).unwrap();
        let left = self.mul_term(f, &lf.coeff.inverse().unwrap(), &a);
        self.add_scaled(&left, &-lg.coeff.inverse().unwrap(), &b, g)
    }

    /// The reduced Gröbner basis of the submodule generated by `gens`:
    /// monic, interreduced, sorted ascending by leading term.
    pub fn groebner(&self, gens: &[Vector], budget: &Budget) -> Result<Vec<Vector>> {
        let mut state = State {
            module: self,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            product_criterion: self.rank() == 1,
        };
        let mut inputs: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        inputs.sort_by(|a, b| {
            let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
            self.term_degree(la.pos, &la.mono)
                .cmp(&self.term_degree(lb.pos, &lb.mono))
                .then_with(|| self.cmp_terms(la.pos, &la.mono, lb.pos, &lb.mono))
        });
        for g in inputs {
            budget.check_degree(g.max_total_degree())?;
            let h = self.normal_form_refs(&g, &state.active_polys());
            if !h.is_zero() {
                state.insert(self.monic(&h), budget)?;
            }
        }
        while let Some(pair) = state.select_pair() {
            budget.check_time()?;
            let s = self.s_vector(&state.polys[pair.i], &state.polys[pair.j]);
            let h = self.normal_form_refs(&s, &state.active_polys());
            if !h.is_zero() {
                state.insert(self.monic(&h), budget)?;
            }
        }
        let minimal = state.active_polys();
        let mut reduced: Vec<Vector> = (0..minimal.len())
            .map(|k| {
                let others: Vec<&Vector> =
                    minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| *v).collect();
                self.normal_form_refs(minimal[k], &others)
            })
            .collect();
        reduced.sort_by(|a, b| {
            let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
            self.cmp_terms(la.pos, &la.mono, lb.pos, &lb.mono)
        });
        Ok(reduced)
    }
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    degree: u64,
}

struct State<'m, 'r> {
    module: &'m FreeModule<'r>,
    polys: Vec<Vector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    product_criterion: bool,
}

impl State<'_, '_> {
    fn lead(&self, i: usize) -> (usize, &Monomial) {
        let t = self.polys[i].lead().unwrap();
        (t.pos, &t.mono)
    }

    fn active_polys(&self) -> Vec<&Vector> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p).collect()
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let module = self.module;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.degree
                    .cmp(&b.degree)
                    .then_with(|| module.cmp_terms(a.pos, &a.lcm, b.pos, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    /// Adds a new monic basis element and updates the pair set (Gebauer–Möller).
    fn insert(&mut self, h: Vector, budget: &Budget) -> Result<()> {
        budget.check_degree(h.max_total_degree())?;
        let k = self.polys.len();
        self.polys.push(h);
        self.active.push(true);
        budget.check_basis_size(self.active.iter().filter(|&&a| a).count())?;
        let (hp, hm) = {
            let (p, m) = self.lead(k);
            (p, m.clone())
        };

        let mut cands: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&i| self.active[i] && self.lead(i).0 == hp)
            .map(|i| {
                let gm = self.lead(i).1;
                (i, hm.lcm(gm), self.product_criterion && hm.is_coprime(gm))
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while !cands.is_empty() {
            let (i, l, coprime) = cands.remove(0);
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((i, l, coprime));
            }
        }

        // old pairs whose lcm is divisible by lt(h) in a strictly smaller way
        let leads: Vec<(usize, Monomial)> = (0..k).map(|i| (self.lead(i).0, self.lead(i).1.clone())).collect();
        self.pairs.retain(|p| {
            if p.pos != hp || !hm.divides(&p.lcm) {
                return true;
            }
            hm.lcm(&leads[p.i].1) == p.lcm || hm.lcm(&leads[p.j].1) == p.lcm
        });

        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            let degree = self.module.term_degree(hp, &l);
            self.pairs.push(Pair { i, j: k, pos: hp, lcm: l, degree });
        }

        for i in 0..k {
            if self.active[i] && leads[i].0 == hp && hm.divides(&leads[i].1) {
                self.active[i] = false;
            }
        }
        Ok(())
    }
}
