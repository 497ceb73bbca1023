//! Hilbert series, graded Krull dimension, graded lengths, the characteristic
//! polynomial of an m-primary ideal and rank_k(m/m²).
//!
//! Because A₀ = k, every graded simple A-module is a shift of k, so graded
//! length is k-vector-space dimension throughout.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_power, GroebnerBasis};
use crate::limits::Budget;
use crate::numeric::{Coeff, FieldSpec, Rational};
use crate::polyring::{weighted_degree, GradedRingPresentation, Monomial, PolyRing, Polynomial};

/// Ideal generated by monomials, kept as its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    /// The leading-term ideal of a Gröbner basis.
    pub fn leading_terms(nvars: usize, gb: &GroebnerBasis) -> Self {
        MonomialIdeal::new(nvars, gb.leading_monomials())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    /// `M : u`.
    pub fn quotient(&self, u: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.gcd(u).quotient_of(g).unwrap()).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `M + (u)`.
    pub fn with(&self, u: &Monomial) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = self.gens.iter().filter(|g| !u.divides(g)).cloned().collect();
        gens.push(u.clone());
        MonomialIdeal::new(self.nvars, gens)
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.total_degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// Dense integer polynomial in `t`, ascending powers, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(Vec<i128>);

impl IntPoly {
    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn from_coefficients(mut c: Vec<i128>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.0
    }

    /// `1 − t^d`.
    fn one_minus_power(d: u64) -> Self {
        let mut c = vec![0i128; d as usize + 1];
        c[0] += 1;
        c[d as usize] -= 1;
        IntPoly::from_coefficients(c)
    }

    fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return IntPoly(Vec::new());
        }
        let mut c = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coefficients(c)
    }

    /// `self + t^shift · other`.
    fn add_shifted(&self, other: &IntPoly, shift: u64) -> IntPoly {
        let s = shift as usize;
        let mut c = self.0.clone();
        if c.len() < other.0.len() + s {
            c.resize(other.0.len() + s, 0);
        }
        for (j, b) in other.0.iter().enumerate() {
            c[j + s] += b;
        }
        IntPoly::from_coefficients(c)
    }

    pub fn eval_at_one(&self) -> i128 {
        self.0.iter().sum()
    }

    /// Quotient by `(1 − t)`, assuming exact divisibility.
    fn div_one_minus_t(&self) -> IntPoly {
        // self = (1 − t)·q  ⇒  q_k = Σ_{i ≤ k} self_i
        let mut q = Vec::with_capacity(self.0.len());
        let mut acc = 0i128;
        for &c in &self.0[..self.0.len().saturating_sub(1)] {
            acc += c;
            q.push(acc);
        }
        IntPoly::from_coefficients(q)
    }

    /// Multiplicity of `t = 1` as a root (zero polynomial reports 0).
    pub fn multiplicity_at_one(&self) -> usize {
        let mut p = self.clone();
        let mut k = 0;
        while !p.0.is_empty() && p.eval_at_one() == 0 {
            p = p.div_one_minus_t();
            k += 1;
        }
        k
    }

    pub fn display(&self) -> String {
        let mut s = String::new();
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if s.is_empty() {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(s, "{a}").unwrap(),
                (1, 1) => s.push('t'),
                (1, _) => write!(s, "{a}*t").unwrap(),
                (_, 1) => write!(s, "t^{k}").unwrap(),
                _ => write!(s, "{a}*t^{k}").unwrap(),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// `N(t) / ∏ (1 − t^{wᵢ})`, the Hilbert series of R/M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: IntPoly,
    denominator_weights: Vec<u32>,
}

#[derive(Serialize)]
struct HilbertSeriesJson<'a> {
    numerator: String,
    denominator_weights: &'a [u32],
}

impl Serialize for HilbertSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HilbertSeriesJson { numerator: self.numerator.display(), denominator_weights: &self.denominator_weights }
            .serialize(s)
    }
}

impl HilbertSeries {
    pub fn new(numerator: IntPoly, denominator_weights: Vec<u32>) -> Self {
        HilbertSeries { numerator, denominator_weights }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator_weights(&self) -> &[u32] {
        &self.denominator_weights
    }

    /// `dim_k A_d` for `d = 0..=up_to`.
    pub fn coefficients(&self, up_to: usize) -> Vec<i128> {
        let mut c = vec![0i128; up_to + 1];
        for (i, &a) in self.numerator.0.iter().enumerate().take(up_to + 1) {
            c[i] = a;
        }
        for &w in &self.denominator_weights {
            let w = w as usize;
            for k in w..=up_to {
                c[k] += c[k - w];
            }
        }
        c
    }

    /// Order of the pole at `t = 1`: the Krull dimension.
    pub fn pole_order(&self) -> usize {
        if self.numerator.0.is_empty() {
            return 0;
        }
        self.denominator_weights.len() - self.numerator.multiplicity_at_one()
    }

    /// Total dimension when the series is a polynomial.
    pub fn total_length(&self) -> Option<u64> {
        if self.numerator.0.is_empty() {
            return Some(0);
        }
        if self.pole_order() > 0 {
            return None;
        }
        let coeffs = self.coefficients(self.numerator.0.len());
        Some(coeffs.iter().sum::<i128>() as u64)
    }

    pub fn display(&self) -> String {
        let mut counts: Vec<(u32, usize)> = Vec::new();
        for &w in &self.denominator_weights {
            match counts.iter_mut().find(|(v, _)| *v == w) {
                Some(e) => e.1 += 1,
                None => counts.push((w, 1)),
            }
        }
        counts.sort();
        let den: Vec<String> = counts
            .iter()
            .map(|&(w, k)| {
                let base = if w == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{w})") };
                if k == 1 {
                    base
                } else {
                    format!("{base}^{k}")
                }
            })
            .collect();
        if den.is_empty() {
            self.numerator.display()
        } else {
            format!("({}) / ({})", self.numerator.display(), den.join("*"))
        }
    }
}

/// Numerator of the Hilbert series of R/M over `∏(1 − t^{wᵢ})`, by the pivot
/// recursion `N(M) = N(M + (u)) + t^{deg u}·N(M : u)`.
pub fn hilbert_numerator(m: &MonomialIdeal, weights: &[u32]) -> IntPoly {
    let gens = &m.gens;
    if gens.is_empty() {
        return IntPoly::one();
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens
            .iter()
            .fold(IntPoly::one(), |acc, g| acc.mul(&IntPoly::one_minus_power(weighted_degree(g, weights))));
    }
    // pivot on the variable shared by the most generators
    let n = m.nvars;
    let var = (0..n)
        .max_by_key(|&i| (gens.iter().filter(|g| g.exponents()[i] > 0).count(), std::cmp::Reverse(i)))
        .unwrap();
    let is_pure_power = |g: &Monomial| g.exponents().iter().enumerate().all(|(j, &e)| j == var || e == 0);
    let e = gens
        .iter()
        .filter(|g| g.exponents()[var] > 0 && !is_pure_power(g))
        .map(|g| g.exponents()[var])
        .min()
        .expect("a non-coprime generator set shares a variable");
    let mut u = Monomial::one(n);
    *u.exponent_mut(var) = e;
    let plus = hilbert_numerator(&m.with(&u), weights);
    let colon = hilbert_numerator(&m.quotient(&u), weights);
    plus.add_shifted(&colon, weighted_degree(&u, weights))
}

/// Hilbert series of R/I from a Gröbner basis of I.
pub fn hilbert_series(ring: &PolyRing, gb: &GroebnerBasis) -> HilbertSeries {
    let lt = MonomialIdeal::leading_terms(ring.nvars(), gb);
    HilbertSeries::new(hilbert_numerator(&lt, ring.weights()), ring.weights().to_vec())
}

/// Dimension of R/M via independent sets: the largest set of variables
/// containing the support of no minimal generator. `None` for the unit ideal.
pub fn monomial_krull_dim(m: &MonomialIdeal) -> Option<usize> {
    if m.is_unit() {
        return None;
    }
    let mut edges: Vec<u64> = m.gens.iter().map(|g| g.support()).collect();
    edges.sort_by_key(|e| e.count_ones());
    edges.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for e in edges {
        if !minimal.iter().any(|&f| f & e == f) {
            minimal.push(e);
        }
    }
    let mut best = m.nvars;
    min_hitting_set(&minimal, 0, 0, &mut best);
    Some(m.nvars - best)
}

fn min_hitting_set(edges: &[u64], chosen: u64, size: usize, best: &mut usize) {
    let Some(&open) = edges.iter().find(|&&e| e & chosen == 0) else {
        *best = (*best).min(size);
        return;
    };
    if size + 1 >= *best {
        return;
    }
    let mut bits = open;
    while bits != 0 {
        let v = bits & bits.wrapping_neg();
        min_hitting_set(edges, chosen | v, size + 1, best);
        bits &= bits - 1;
    }
}

/// Krull dimension of R/(gens); `None` when the ideal is the unit ideal.
pub fn krull_dim_of(ring: &PolyRing, gens: &[Polynomial], budget: &Budget) -> Result<Option<usize>> {
    let gb = buchberger(ring, gens, budget)?;
    Ok(monomial_krull_dim(&MonomialIdeal::leading_terms(ring.nvars(), &gb)))
}

/// grKdim A, computed on the leading-term ideal.
pub fn krull_dim(a: &GradedRingPresentation, budget: &Budget) -> Result<usize> {
    krull_dim_of(a.ring(), a.generators(), budget)?
        .ok_or_else(|| Error::InvalidInput("the ideal is the unit ideal".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

/// dim_k R/I, the number of standard monomials.
pub fn vector_space_dimension(ring: &PolyRing, gens: &[Polynomial], budget: &Budget) -> Result<Length> {
    let gb = buchberger(ring, gens, budget)?;
    Ok(length_from_basis(ring, &gb))
}

fn length_from_basis(ring: &PolyRing, gb: &GroebnerBasis) -> Length {
    if gb.is_unit() {
        return Length::Finite(0);
    }
    match hilbert_series(ring, gb).total_length() {
        Some(n) => Length::Finite(n),
        None => Length::Infinite,
    }
}

/// χ(t) with χ(n) = l(A/Qⁿ) for all n ≥ `threshold`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coefficients: Vec<Rational>,
    threshold: u32,
}

#[derive(Serialize)]
struct CharPolyJson {
    polynomial: String,
    degree: usize,
    threshold: u32,
}

impl Serialize for CharPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharPolyJson { polynomial: self.display(), degree: self.degree(), threshold: self.threshold }.serialize(s)
    }
}

impl CharPoly {
    /// Coefficients in ascending powers of t.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn threshold(&self) -> u32 {
        self.threshold
    }

    pub fn degree(&self) -> usize {
        self.coefficients.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coefficients.get(self.degree()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, n: i64) -> Rational {
        let x = Rational::from_integer(n);
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * &x) + c)
    }

    /// Expanded form in the polynomial grammar, e.g. `1/2*t^2 + 1/2*t`.
    pub fn display(&self) -> String {
        let r = PolyRing::standard(FieldSpec::Rational, &["t"]);
        let terms = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| (Coeff::Rational(c.clone()), Monomial::from_exponents(&[k as u32])))
            .collect();
        r.display(&r.from_terms(terms))
    }
}

/// Largest exponent n examined while waiting for χ to stabilize.
pub const CHAR_POLY_MAX_N: u32 = 40;

/// The characteristic (Hilbert–Samuel) polynomial of a graded m-primary ideal Q of A.
///
/// When all weights are 1 and `I + Q̃ = I + mᵏ`, then `gr_m A ≅ A` and the lengths
/// `l(A/Qⁿ) = Σ_{j<kn} dim A_j` follow from the Hilbert series with a provable
/// threshold. Otherwise lengths are `dim_k R/(I + Q̃ⁿ)`, built as
/// `Jₙ = I + J_{n−1}·Q̃`; a polynomial of degree ≤ grKdim A is fitted through d+1
/// consecutive values from n₀ and must predict the next two, else n₀ advances,
/// up to n = 40. That window is evidence, not proof.
pub fn char_poly(a: &GradedRingPresentation, q: &[Polynomial], budget: &Budget) -> Result<CharPoly> {
    let ring = a.ring();
    for g in q {
        match ring.homogeneous_degree(g) {
            None => return Err(Error::InvalidInput(format!("`{}` is not homogeneous", ring.display(g)))),
            Some(0) if !g.is_zero() => {
                return Err(Error::NotPrimary(format!("`{}` is not in the maximal graded ideal", ring.display(g))))
            }
            _ => {}
        }
    }
    let mut base: Vec<Polynomial> = a.generators().to_vec();
    base.extend(q.iter().cloned());
    if krull_dim_of(ring, &base, budget)? != Some(0) {
        return Err(Error::NotPrimary("A/Q does not have finite length".into()));
    }
    let d = krull_dim(a, budget)?;
    let gi = buchberger(ring, a.generators(), budget)?;
    if let Some(k) = maximal_ideal_power(a, q, budget)? {
        return Ok(char_poly_from_hilbert(ring, &gi, d, k));
    }

    let mut lengths: Vec<u64> = Vec::new();
    let mut current = buchberger(ring, &base, budget)?;
    let mut length_at = |n: u32, lengths: &mut Vec<u64>| -> Result<u64> {
        while lengths.len() < n as usize {
            if !lengths.is_empty() {
                let mut gens: Vec<Polynomial> = gi.basis().to_vec();
                for b in current.basis() {
                    for g in q {
                        gens.push(ring.mul(b, g));
                    }
                }
                current = buchberger(ring, &gens, budget)?;
            }
            match length_from_basis(ring, &current) {
                Length::Finite(l) => lengths.push(l),
                Length::Infinite => return Err(Error::Inconsistency("A/Qⁿ has infinite length".into())),
            }
        }
        Ok(lengths[n as usize - 1])
    };

    let mut n0 = 1u32;
    loop {
        if n0 + d as u32 + 2 > CHAR_POLY_MAX_N {
            return Err(Error::ResourceCap(format!(
                "characteristic polynomial did not stabilize by n = {CHAR_POLY_MAX_N}"
            )));
        }
        let mut values = Vec::with_capacity(d + 3);
        for k in 0..(d as u32 + 3) {
            values.push(length_at(n0 + k, &mut lengths)?);
        }
        let coefficients = interpolate(n0, &values[..=d]);
        let chi = CharPoly { coefficients, threshold: n0 };
        let ok = (d + 1..d + 3).all(|k| chi.eval((n0 + k as u32) as i64) == Rational::from_integer(values[k]));
        if ok {
            return Ok(chi);
        }
        n0 += 1;
    }
}

/// `k` when all weights are 1 and Q ≡ mᵏ modulo I.
fn maximal_ideal_power(a: &GradedRingPresentation, q: &[Polynomial], budget: &Budget) -> Result<Option<u64>> {
    let ring = a.ring();
    if ring.weights().iter().any(|&w| w != 1) {
        return Ok(None);
    }
    let mut degrees = q.iter().filter(|g| !g.is_zero()).map(|g| ring.homogeneous_degree(g).unwrap());
    let Some(k) = degrees.next() else { return Ok(None) };
    if degrees.any(|e| e != k) {
        return Ok(None);
    }
    let vars: Vec<Polynomial> = (0..ring.nvars()).map(|j| ring.var(j)).collect();
    let mut with_q = a.generators().to_vec();
    with_q.extend(q.iter().cloned());
    let mut with_m = a.generators().to_vec();
    with_m.extend(ideal_power(ring, &vars, k as u32));
    let same = buchberger(ring, &with_q, budget)? == buchberger(ring, &with_m, budget)?;
    Ok(same.then_some(k))
}

/// Exact χ for Q ≡ mᵏ in the standard grading.
///
/// With HS = P(t)/(1 − t)^d in lowest terms, dim A_j is polynomial in j for
/// j > deg P − d, so S(m) = Σ_{j<m} dim A_j is polynomial for m ≥ j₀ := deg P − d + 1
/// and l(A/Qⁿ) = S(kn) is polynomial for kn ≥ j₀.
fn char_poly_from_hilbert(ring: &PolyRing, gb: &GroebnerBasis, d: usize, k: u64) -> CharPoly {
    let hs = hilbert_series(ring, gb);
    let mut reduced = hs.numerator().clone();
    for _ in 0..ring.nvars() - d {
        reduced = reduced.div_one_minus_t();
    }
    let deg_p = reduced.coefficients().len().saturating_sub(1) as i64;
    let j0 = (deg_p - d as i64 + 1).max(0) as u64;
    let n0 = j0.div_ceil(k).max(1);
    let top = k * (n0 + d as u64);
    let hf = hs.coefficients(top as usize);
    let length = |n: u64| -> u64 { hf[..(k * n) as usize].iter().sum::<i128>() as u64 };
    let values: Vec<u64> = (n0..=n0 + d as u64).map(length).collect();
    let coefficients = interpolate(n0 as u32, &values);
    let mut chi = CharPoly { coefficients, threshold: n0 as u32 };
    while chi.threshold > 1 && chi.eval(chi.threshold as i64 - 1) == Rational::from_integer(length(chi.threshold as u64 - 1)) {
        chi.threshold -= 1;
    }
    chi
}

/// Coefficients (ascending) of the polynomial of degree < len through
/// `(n0 + k, values[k])`, via Newton forward differences in the binomial basis.
fn interpolate(n0: u32, values: &[u64]) -> Vec<Rational> {
    let m = values.len();
    let mut diffs: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
    let mut leading = Vec::with_capacity(m);
    for k in 0..m {
        leading.push(diffs[0].clone());
        diffs = (0..m - k - 1).map(|i| &diffs[i + 1] - &diffs[i]).collect();
    }
    let mut result = vec![Rational::zero(); m];
    // basis polynomial C(t − n0, k) accumulated as a product of (t − n0 − j)/(j + 1)
    let mut basis = vec![Rational::one()];
    for (k, delta) in leading.into_iter().enumerate() {
        let c = Rational::from_integer(delta);
        for (i, b) in basis.iter().enumerate() {
            result[i] = &result[i] + &(&c * b);
        }
        let shift = Rational::from_integer(-(n0 as i64) - k as i64);
        let scale = Rational::normalize(1, k as i64 + 1).unwrap();
        let mut next = vec![Rational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] = &next[i + 1] + &(b * &scale);
            next[i] = &next[i] + &(&(b * &shift) * &scale);
        }
        basis = next;
    }
    result
}

/// Coefficient matrix of the linear parts of the generators (one row per generator).
pub fn linear_part_matrix(a: &GradedRingPresentation) -> Vec<Vec<Coeff>> {
    let ring = a.ring();
    let n = ring.nvars();
    a.generators()
        .iter()
        .map(|g| {
            let mut row = vec![ring.field().zero(); n];
            for (c, m) in g.terms() {
                if m.total_degree() == 1 {
                    let j = m.exponents().iter().position(|&e| e == 1).unwrap();
                    row[j] = c.clone();
                }
            }
            row
        })
        .collect()
}

/// Reduced row echelon form with columns scanned right to left; returns the
/// pivot columns. The pivot set depends only on the row space.
pub fn rref_pivots_from_right(mut rows: Vec<Vec<Coeff>>, ncols: usize) -> (Vec<Vec<Coeff>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in (0..ncols).rev() {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().unwrap();
        rows[r] = rows[r].iter().map(|c| c * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// rank_k(m/m²): n minus the rank of the linear parts of the generators.
/// Only degree-0 multiples of generators contribute linear terms, so the
/// given generators suffice.
pub fn min_gens_rank(a: &GradedRingPresentation) -> usize {
    let (_, pivots) = rref_pivots_from_right(linear_part_matrix(a), a.nvars());
    a.nvars() - pivots.len()
}

/// Whether the cyclic module A/J is torsion (finite length, so π(A/J) = 0 in qgr A).
pub fn is_torsion_cyclic(a: &GradedRingPresentation, j: &[Polynomial], budget: &Budget) -> Result<bool> {
    let mut gens = a.generators().to_vec();
    gens.extend(j.iter().cloned());
    Ok(krull_dim_of(a.ring(), &gens, budget)?.map_or(true, |d| d == 0))
}
