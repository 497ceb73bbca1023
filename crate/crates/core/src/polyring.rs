//! Weighted-graded sparse polynomials over an exact field.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::numeric::{Coeff, FieldSpec};

pub type Exponents = SmallVec<[u32; 8]>;

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sum of exponents, ignoring weights.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Bit set of variables with positive exponent.
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_add(*b)).collect::<Option<_>>().map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent vector with one more (zero) trailing variable.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat(0).take(extra));
        Monomial(e)
    }

    pub fn truncated(&self, nvars: usize) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[..nvars]))
    }

    pub fn exponent_mut(&mut self, i: usize) -> &mut u32 {
        &mut self.0[i]
    }
}

/// Positive degrees of the variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradingSpec {
    weights: Vec<u32>,
}

impl GradingSpec {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidInput(format!("variable {i}: degree must be positive")));
        }
        Ok(GradingSpec { weights })
    }

    pub fn standard(nvars: usize) -> Self {
        GradingSpec { weights: vec![1; nvars] }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u64 {
        weighted_degree(m, &self.weights)
    }
}

pub fn weighted_degree(m: &Monomial, weights: &[u32]) -> u64 {
    m.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrderKind {
    /// Weighted degree first, then reverse lexicographic on raw exponents.
    #[default]
    Grevlex,
    Lex,
}

impl TermOrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            TermOrderKind::Grevlex => "grevlex",
            TermOrderKind::Lex => "lex",
        }
    }
}

/// A monomial order, carrying the weights weighted-grevlex needs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermOrder {
    kind: TermOrderKind,
    weights: Vec<u32>,
}

impl TermOrder {
    pub fn new(kind: TermOrderKind, grading: &GradingSpec) -> Self {
        TermOrder { kind, weights: grading.weights.clone() }
    }

    pub fn kind(&self) -> TermOrderKind {
        self.kind
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            TermOrderKind::Lex => a.0.cmp(&b.0),
            TermOrderKind::Grevlex => {
                let da = weighted_degree(a, &self.weights);
                let db = weighted_degree(b, &self.weights);
                da.cmp(&db).then_with(|| {
                    // rightmost differing exponent: the smaller one is the larger monomial
                    for (x, y) in a.0.iter().zip(&b.0).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// Terms in strictly descending order; no zero coefficients. Empty means zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Wraps terms already in canonical form.
    pub(crate) fn from_sorted_terms(terms: Vec<(Coeff, Monomial)>) -> Self {
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Coeff, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Coeff, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest standard total degree of a term.
    pub fn max_total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.1.total_degree()).max().unwrap_or(0)
    }
}

/// Variables, weights, coefficient field and term order of k[x₁..xₙ].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    field: FieldSpec,
    names: Vec<String>,
    grading: GradingSpec,
    order: TermOrder,
}

impl PolyRing {
    pub fn new(field: FieldSpec, names: Vec<String>, grading: GradingSpec, kind: TermOrderKind) -> Result<Self> {
        if names.len() != grading.weights.len() {
            return Err(Error::InvalidInput("one weight per variable required".into()));
        }
        if names.is_empty() {
            return Err(Error::InvalidInput("at least one variable required".into()));
        }
        if names.len() > 63 {
            return Err(Error::InvalidInput("at most 63 variables are supported".into()));
        }
        field.validate()?;
        let order = TermOrder::new(kind, &grading);
        Ok(PolyRing { field, names, grading, order })
    }

    /// Standard-graded grevlex ring on the given names; convenience for tests and tools.
    pub fn standard(field: FieldSpec, names: &[&str]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let grading = GradingSpec::standard(names.len());
        PolyRing::new(field, names, grading, TermOrderKind::Grevlex).expect("valid ring")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }

    pub fn weights(&self) -> &[u32] {
        &self.grading.weights
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn with_order(&self, kind: TermOrderKind) -> PolyRing {
        PolyRing { order: TermOrder::new(kind, &self.grading), ..self.clone() }
    }

    /// Same ring with one more variable of weight `weight`, placed last.
    pub fn extend_with(&self, name: &str, weight: u32, kind: TermOrderKind) -> PolyRing {
        let mut names = self.names.clone();
        names.push(name.to_string());
        let mut weights = self.grading.weights.clone();
        weights.push(weight);
        let grading = GradingSpec { weights };
        PolyRing { field: self.field, names, order: TermOrder::new(kind, &grading), grading }
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        self.grading.weighted_degree(m)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial { terms: vec![(self.field.one(), Monomial::var(self.nvars(), i))] }
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(c, self.one_monomial())] }
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn monomial(&self, c: Coeff, m: Monomial) -> Polynomial {
        self.from_terms(vec![(c, m)])
    }

    /// Canonical form of an arbitrary list of terms: sort, combine, drop zeros.
    pub fn from_terms(&self, mut terms: Vec<(Coeff, Monomial)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp_monomials(&b.1, &a.1));
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = &last.0 + &c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| !t.0.is_zero());
        Polynomial { terms: out }
    }

    /// `f + c·m·g`, merging two sorted term lists.
    pub fn add_scaled(&self, f: &Polynomial, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let scaled = |t: &(Coeff, Monomial)| (c * &t.0, t.1.mul(m));
        let mut pending = g.terms.get(0).map(scaled);
        while i < f.terms.len() || pending.is_some() {
            match (f.terms.get(i), &pending) {
                (Some(a), Some(b)) => match self.cmp_monomials(&a.1, &b.1) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                        pending = g.terms.get(j).map(scaled);
                    }
                    Ordering::Equal => {
                        let s = &a.0 + &b.0;
                        if !s.is_zero() {
                            out.push((s, a.1.clone()));
                        }
                        i += 1;
                        j += 1;
                        pending = g.terms.get(j).map(scaled);
                    }
                },
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = g.terms.get(j).map(scaled);
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, &self.field.one(), &self.one_monomial(), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, &-self.field.one(), &self.one_monomial(), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial { terms: f.terms.iter().map(|(c, m)| (-c, m.clone())).collect() }
    }

    /// `c·m·f`; the term order is multiplicative so sortedness is kept.
    pub fn mul_term(&self, f: &Polynomial, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|(a, n)| (a * c, n.mul(m))).collect() }
    }

    pub fn scale(&self, f: &Polynomial, c: &Coeff) -> Polynomial {
        self.mul_term(f, c, &self.one_monomial())
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        small
            .terms
            .iter()
            .fold(Polynomial::zero(), |acc, (c, m)| self.add_scaled(&acc, c, m, large))
    }

    pub fn pow(&self, f: &Polynomial, n: u32) -> Polynomial {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, f))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(f, &c.inverse().expect("nonzero leading coefficient")),
            _ => f.clone(),
        }
    }

    /// The common weighted degree of all terms, or `None` if `f` is not homogeneous.
    /// The zero polynomial is homogeneous of degree 0 by convention.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> Option<u64> {
        let mut degrees = f.terms.iter().map(|t| self.degree(&t.1));
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        self.homogeneous_degree(f).is_some()
    }

    /// `S(f,g) = (L/lt(f))·f − (L/lt(g))·g`, `L` the lcm of the leading monomials.
    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (cf, mf) = f.leading_term().expect("nonzero f");
        let (cg, mg) = g.leading_term().expect("nonzero g");
        let l = mf.lcm(mg);
        let a = mf.quotient_of(&l).unwrap();
        let b = mg.quotient_of(&l).unwrap();
        let left = self.mul_term(f, &cf.inverse().unwrap(), &a);
        self.add_scaled(&left, &-cg.inverse().unwrap(), &b, g)
    }

    /// Formal partial derivative in variable `i`.
    pub fn derivative(&self, f: &Polynomial, i: usize) -> Polynomial {
        let terms = f
            .terms
            .iter()
            .filter(|(_, m)| m.0[i] > 0)
            .map(|(c, m)| {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                (c.mul_u64(m.0[i] as u64), m2)
            })
            .filter(|(c, _)| !c.is_zero())
            .collect();
        self.from_terms(terms)
    }

    /// Reinterprets `f` in a ring with more variables appended.
    pub fn embed(&self, f: &Polynomial, target: &PolyRing) -> Polynomial {
        let extra = target.nvars() - self.nvars();
        target.from_terms(f.terms.iter().map(|(c, m)| (c.clone(), m.extended(extra))).collect())
    }

    /// Human and parser friendly rendering, e.g. `x*y - 2/3*z^2`.
    pub fn display(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (c, m)) in f.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = self.display_monomial(m);
            if mono.is_empty() {
                let _ = write!(s, "{a}");
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{a}*{mono}");
            }
        }
        s
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
            .collect();
        parts.join("*")
    }
}

/// A = k[x₁..xₙ]/I with I given by homogeneous generators.
#[derive(Clone, Debug)]
pub struct GradedRingPresentation {
    ring: PolyRing,
    generators: Vec<Polynomial>,
}

impl GradedRingPresentation {
    /// Checks homogeneity of every generator; zero generators are dropped.
    /// Properness of the ideal is certified separately (it needs a Gröbner basis).
    pub fn new(ring: PolyRing, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !ring.is_homogeneous(g) {
                return Err(Error::InvalidInput(format!(
                    "generator `{}` is not homogeneous for weights {:?}",
                    ring.display(g),
                    ring.weights()
                )));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedRingPresentation { ring, generators })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(weighted_degree(&mono(&[1, 1, 0]), &[1, 1, 1]), 2);
        assert_eq!(weighted_degree(&mono(&[2, 0]), &[1, 2]), 2);
        assert_eq!(weighted_degree(&mono(&[0, 0, 0]), &[3, 1, 4]), 0);
    }

    #[test]
    fn homogeneity_examples() {
        let r = PolyRing::standard(q(), &["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let f = r.sub(&r.mul(&x, &y), &r.mul(&z, &z));
        assert_eq!(r.homogeneous_degree(&f), Some(2));

        let w = PolyRing::new(q(), vec!["x".into(), "y".into()], GradingSpec::new(vec![1, 2]).unwrap(), TermOrderKind::Grevlex)
            .unwrap();
        let g = w.sub(&w.var(1), &w.pow(&w.var(0), 2));
        assert_eq!(w.homogeneous_degree(&g), Some(2));

        let u = PolyRing::standard(q(), &["x"]);
        let h = u.add(&u.var(0), &u.pow(&u.var(0), 2));
        assert_eq!(u.homogeneous_degree(&h), None);
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(GradingSpec::new(vec![1, 0]).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let r = PolyRing::standard(q(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let prod = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(r.display(&prod), "x^2 - y^2");
        let f = r.add(&r.mul(&x, &y), &x);
        assert!(r.add(&f, &r.neg(&f)).is_zero());

        let f2 = PolyRing::standard(FieldSpec::prime(2).unwrap(), &["x", "y"]);
        let s = f2.add(&f2.var(0), &f2.var(1));
        assert_eq!(f2.display(&f2.mul(&s, &s)), "x^2 + y^2");
    }

    #[test]
    fn s_polynomial_examples() {
        let r = PolyRing::standard(q(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let x2 = r.mul(&x, &x);
        let xy = r.mul(&x, &y);
        assert!(r.s_polynomial(&x2, &xy).is_zero());
        assert!(r.s_polynomial(&xy, &xy).is_zero());

        // lex x > y: f = x^2 - y, g = xy - 1; y·f − x·g = x − y^2
        let l = r.with_order(TermOrderKind::Lex);
        let f = l.sub(&l.mul(&x, &x), &y);
        let g = l.sub(&l.mul(&x, &y), &l.one());
        let s = l.s_polynomial(&f, &g);
        let expected = l.sub(&l.mul_term(&f, &l.field().one(), &mono(&[0, 1])), &l.mul_term(&g, &l.field().one(), &mono(&[1, 0])));
        assert_eq!(s, expected);
        assert_eq!(l.display(&s), "x - y^2");
    }

    #[test]
    fn derivative_in_char_two() {
        let r = PolyRing::standard(FieldSpec::prime(2).unwrap(), &["x"]);
        let x2 = r.mul(&r.var(0), &r.var(0));
        assert!(r.derivative(&x2, 0).is_zero());
    }

    #[test]
    fn grevlex_tie_break() {
        let o = TermOrder::new(TermOrderKind::Grevlex, &GradingSpec::standard(3));
        // x*z vs y^2: last exponent 1 vs 0, y^2 has the smaller one and wins
        assert_eq!(o.compare(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&mono(&[1, 1, 0]), &mono(&[0, 2, 0])), Ordering::Greater);
        let w = TermOrder::new(TermOrderKind::Grevlex, &GradingSpec::new(vec![1, 2]).unwrap());
        assert_eq!(w.compare(&mono(&[0, 1]), &mono(&[1, 0])), Ordering::Greater);
    }

    fn mono_strategy(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn order_strategy() -> impl Strategy<Value = TermOrder> {
        (prop_oneof![Just(TermOrderKind::Grevlex), Just(TermOrderKind::Lex)], proptest::collection::vec(1u32..4, 4))
            .prop_map(|(k, w)| TermOrder::new(k, &GradingSpec::new(w).unwrap()))
    }

    proptest! {
        #[test]
        fn term_order_laws(o in order_strategy(), a in mono_strategy(4), b in mono_strategy(4), c in mono_strategy(4)) {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less && o.compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.compare(&a, &c), Ordering::Less);
            }
            if ab == Ordering::Less {
                prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), Ordering::Less);
            }
            prop_assert_ne!(o.compare(&Monomial::one(4), &a), Ordering::Greater);
        }

        #[test]
        fn homogeneity_closed_under_ring_ops(a in proptest::collection::vec((-3i64..4, mono_strategy(3)), 1..4),
                                             b in proptest::collection::vec((-3i64..4, mono_strategy(3)), 1..4)) {
            let r = PolyRing::new(q(), vec!["x".into(), "y".into(), "z".into()], GradingSpec::new(vec![1, 2, 3]).unwrap(), TermOrderKind::Grevlex).unwrap();
            // homogenize each random polynomial by keeping only terms of the leading degree
            let hom = |ts: Vec<(i64, Monomial)>| {
                let p = r.from_terms(ts.into_iter().map(|(c, m)| (q().from_i64(c), m)).collect());
                let d = p.leading_monomial().map(|m| r.degree(m));
                r.from_terms(p.terms().iter().filter(|t| Some(r.degree(&t.1)) == d).cloned().collect())
            };
            let (f, g) = (hom(a), hom(b));
            prop_assert!(r.is_homogeneous(&r.mul(&f, &g)));
            if r.homogeneous_degree(&f) == r.homogeneous_degree(&g) {
                prop_assert!(r.is_homogeneous(&r.add(&f, &g)));
            }
        }
    }
}
