//! Reduced Gröbner bases and the ideal operations built on them.

mod module;

pub use module::{FreeModule, Term, Vector};

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::limits::Budget;
use crate::polyring::{GradedRingPresentation, Monomial, PolyRing, Polynomial, TermOrder, TermOrderKind};

/// The unique reduced Gröbner basis of an ideal for a fixed term order:
/// monic, auto-reduced, sorted ascending by leading monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn contains(&self, ring: &PolyRing, f: &Polynomial) -> bool {
        normal_form(ring, f, self).is_zero()
    }

    /// Renders one element per line in ascending order.
    pub fn display(&self, ring: &PolyRing) -> Vec<String> {
        self.basis.iter().map(|g| ring.display(g)).collect()
    }
}

fn rank_one(ring: &PolyRing) -> FreeModule<'_> {
    FreeModule::new(ring, vec![0])
}

/// Reduced Gröbner basis of `(gens)` in `ring` under the ring's term order.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial], budget: &Budget) -> Result<GroebnerBasis> {
    let module = rank_one(ring);
    let vectors: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
    let basis = module.groebner(&vectors, budget)?.iter().map(|v| v.component(0)).collect();
    Ok(GroebnerBasis { order: ring.order().clone(), basis })
}

/// Remainder of `f` modulo a Gröbner basis; zero iff `f` lies in the ideal.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let module = rank_one(ring);
    let basis: Vec<Vector> = gb.basis.iter().map(|g| Vector::from_poly(g, 0)).collect();
    module.normal_form(&Vector::from_poly(f, 0), &basis).component(0)
}

/// Generators of `Iⁿ`: all n-fold products of the generators (`I⁰ = (1)`).
pub fn ideal_power(ring: &PolyRing, gens: &[Polynomial], n: u32) -> Vec<Polynomial> {
    let mut current = vec![ring.one()];
    for _ in 0..n {
        let mut next: Vec<Polynomial> = Vec::new();
        for a in &current {
            for g in gens {
                let p = ring.mul(a, g);
                if !p.is_zero() && !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        current = next;
    }
    current
}

/// `I : f = { g | g·f ∈ I }`, computed as the first syzygy module of `(f)` modulo `I`:
/// in R² the submodule generated by `(f, 1)` and `(g, 0)` for `g ∈ I` meets `0 ⊕ R` exactly
/// in `0 ⊕ (I : f)`, and a position-over-term basis exposes that intersection directly.
pub fn ideal_quotient(ring: &PolyRing, gens: &[Polynomial], f: &Polynomial, budget: &Budget) -> Result<GroebnerBasis> {
    if f.is_zero() {
        return Err(Error::InvalidInput("ideal quotient by the zero polynomial".into()));
    }
    let target = FreeModule::new(ring, vec![0]);
    let syz = syzygy_basis(&target, &[Vector::from_poly(f, 0)], gens, budget)?;
    let basis = syz.iter().map(|v| v.component(0)).collect();
    Ok(GroebnerBasis { order: ring.order().clone(), basis })
}

/// Whether `f ∈ √I`: decided by `1 ∈ I + (1 − y·f)` in `R[y]`, `y` a fresh last
/// variable of weight 1, under lex order. Homogeneity is not required here.
pub fn radical_membership(ring: &PolyRing, f: &Polynomial, gens: &[Polynomial], budget: &Budget) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let ext = ring.extend_with("_rabinowitsch", 1, TermOrderKind::Lex);
    let y = ext.var(ext.nvars() - 1);
    let mut lifted: Vec<Polynomial> = gens.iter().map(|g| ring.embed(g, &ext)).collect();
    let yf = ext.mul(&y, &ring.embed(f, &ext));
    lifted.push(ext.sub(&ext.one(), &yf));
    Ok(buchberger(&ext, &lifted, budget)?.is_unit())
}

/// Reduced Gröbner basis (position over term) of the syzygies of `vectors ⊂ target`
/// modulo `ideal·target`: all `a ∈ R^s` with `Σ aᵢ vᵢ ∈ I·R^r`. The result includes
/// the trivial syzygies `I·R^s`.
pub fn syzygy_basis(
    target: &FreeModule<'_>,
    vectors: &[Vector],
    ideal: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<Vector>> {
    let ring = target.ring();
    let r = target.rank();
    let s = vectors.len();
    let mut shifts = target.shifts().to_vec();
    shifts.extend(vectors.iter().map(|v| target.degree(v).unwrap_or(0)));
    let big = FreeModule::new(ring, shifts);

    let mut gens: Vec<Vector> = Vec::with_capacity(s + r * ideal.len());
    for (j, v) in vectors.iter().enumerate() {
        let tag = Vector::from_poly(&ring.one(), r + j);
        gens.push(big.add(v, &tag));
    }
    for g in ideal {
        for k in 0..r {
            gens.push(Vector::from_poly(g, k));
        }
    }
    let gb = big.groebner(&gens, budget)?;
    Ok(gb.iter().filter(|v| v.lead().map_or(false, |t| t.pos >= r)).map(|v| v.shifted_down(r)).collect())
}

/// A homogeneous generating set of the first syzygy module of `fs` over `R/I`,
/// minimalized (no element is redundant modulo `I` and the others).
pub fn syzygies(ring: &PolyRing, fs: &[Polynomial], modulo: &[Polynomial], budget: &Budget) -> Result<Vec<Vector>> {
    let target = FreeModule::new(ring, vec![0]);
    let vectors: Vec<Vector> = fs.iter().map(|f| Vector::from_poly(f, 0)).collect();
    let syz = syzygy_basis(&target, &vectors, modulo, budget)?;
    let source = FreeModule::new(ring, vectors.iter().map(|v| target.degree(v).unwrap_or(0)).collect());
    minimalize(&source, &syz, modulo, budget)
}

/// Drops generators that lie in the submodule spanned by `ideal·F` and the
/// previously kept ones, scanning by increasing degree. For homogeneous input
/// over a positively graded ring this leaves a minimal generating set.
///
/// One Gröbner basis is computed per degree: a candidate of degree δ is
/// redundant iff its normal form modulo everything of degree < δ lies in the
/// k-span of the normal forms already kept in degree δ.
pub fn minimalize(
    module: &FreeModule<'_>,
    candidates: &[Vector],
    ideal: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<Vector>> {
    let mut sorted: Vec<&Vector> = candidates.iter().filter(|v| !v.is_zero()).collect();
    sorted.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        module
            .degree(a)
            .cmp(&module.degree(b))
            .then_with(|| module.cmp_terms(la.pos, &la.mono, lb.pos, &lb.mono))
    });
    let base: Vec<Vector> =
        ideal.iter().flat_map(|g| (0..module.rank()).map(move |k| Vector::from_poly(g, k))).collect();
    let mut span = module.groebner(&base, budget)?;
    let mut kept: Vec<Vector> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let degree = module.degree(sorted[i]);
        let mut echelon: Vec<Vector> = Vec::new();
        while i < sorted.len() && module.degree(sorted[i]) == degree {
            let mut r = module.normal_form(sorted[i], &span);
            i += 1;
            while let Some(e) = r.lead().and_then(|t| echelon.iter().find(|e| same_position(e.lead().unwrap(), t))) {
                let c = r.lead().unwrap().coeff.div(&e.lead().unwrap().coeff);
                r = module.add_scaled(&r, &-c, &module.ring().one_monomial(), e);
            }
            if !r.is_zero() {
                echelon.push(module.monic(&r));
            }
        }
        if !echelon.is_empty() {
            budget.check_time()?;
            let mut gens = span;
            gens.extend(echelon.iter().cloned());
            span = module.groebner(&gens, budget)?;
            kept.extend(echelon);
        }
    }
    Ok(kept)
}

fn same_position(a: &Term, b: &Term) -> bool {
    a.pos == b.pos && a.mono == b.mono
}

/// Certifies that a presentation's ideal is proper and returns its reduced basis.
pub fn certify_proper(a: &GradedRingPresentation, budget: &Budget) -> Result<GroebnerBasis> {
    let gb = buchberger(a.ring(), a.generators(), budget)?;
    if gb.is_unit() {
        return Err(Error::InvalidInput("the ideal is the unit ideal".into()));
    }
    Ok(gb)
}

/// A graded ideal with a lazily computed reduced Gröbner basis.
#[derive(Debug)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    basis: OnceCell<GroebnerBasis>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>) -> Self {
        Ideal { generators: generators.into_iter().filter(|g| !g.is_zero()).collect(), basis: OnceCell::new() }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self, ring: &PolyRing, budget: &Budget) -> Result<&GroebnerBasis> {
        self.basis.get_or_try_init(|| buchberger(ring, &self.generators, budget))
    }

    pub fn contains(&self, ring: &PolyRing, f: &Polynomial, budget: &Budget) -> Result<bool> {
        Ok(self.basis(ring, budget)?.contains(ring, f))
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal { generators: self.generators.clone(), basis: self.basis.clone() }
    }
}
