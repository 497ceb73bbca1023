//! A combinatorial second opinion for monomial ideals.
//!
//! Coordinate primes do not exhaust the graded primes of a monomial quotient
//! (with equal weights, `(x − y)` is graded too), so the localization test
//! certifies only one direction in general. Full agreement with the Jacobian
//! verdict is claimed only for pure squarefree ideals, whose singular locus
//! is a union of coordinate subspaces.

use crate::error::{Error, Result};
use crate::invariants::MonomialIdeal;
use crate::polyring::Monomial;

/// Subset enumeration ceiling: 2¹⁶ subsets.
pub const MAX_VARIABLES: usize = 16;

/// The prime `(xᵢ : i ∈ S)`, stored as a bitmask over variable indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordinatePrime {
    mask: u64,
}

impl CoordinatePrime {
    pub fn from_variables(vars: &[usize]) -> Self {
        CoordinatePrime { mask: vars.iter().fold(0, |m, &i| m | 1 << i) }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..64).filter(|i| self.mask >> i & 1 == 1).collect()
    }

    pub fn contains(&self, m: &MonomialIdeal) -> bool {
        m.generators().iter().all(|g| g.support() & self.mask != 0)
    }

    pub fn is_maximal(&self, nvars: usize) -> bool {
        self.mask.count_ones() as usize == nvars
    }
}

fn check_size(nvars: usize) -> Result<()> {
    if nvars > MAX_VARIABLES {
        return Err(Error::ResourceCap(format!(
            "subset enumeration is limited to {MAX_VARIABLES} variables, got {nvars}"
        )));
    }
    Ok(())
}

/// Every coordinate prime containing `m`, in increasing bitmask order.
pub fn coordinate_primes_containing(m: &MonomialIdeal) -> Result<Vec<CoordinatePrime>> {
    check_size(m.nvars())?;
    Ok((0..1u64 << m.nvars()).map(|mask| CoordinatePrime { mask }).filter(|p| p.contains(m)).collect())
}

/// Inverts the variables outside `s`: they are stripped from every generator.
pub fn localize_monomial(m: &MonomialIdeal, s: CoordinatePrime) -> Result<MonomialIdeal> {
    if !s.contains(m) {
        return Err(Error::InvalidInput("the coordinate prime does not contain the ideal".into()));
    }
    let gens = m
        .generators()
        .iter()
        .map(|g| {
            let exps: Vec<u32> =
                g.exponents().iter().enumerate().map(|(i, &e)| if s.mask >> i & 1 == 1 { e } else { 0 }).collect();
            Monomial::from_exponents(&exps)
        })
        .collect();
    Ok(MonomialIdeal::new(m.nvars(), gens))
}

/// Regular exactly when the localized ideal is generated by variables.
pub fn is_localization_regular(m: &MonomialIdeal, s: CoordinatePrime) -> Result<bool> {
    let local = localize_monomial(m, s)?;
    Ok(local.generators().iter().all(|g| g.total_degree() == 1))
}

/// Maximal faces of the Stanley–Reisner complex, as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetComplex {
    nvars: usize,
    facets: Vec<u64>,
}

impl FacetComplex {
    pub fn new(nvars: usize, mut facets: Vec<u64>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        FacetComplex { nvars, facets }
    }

    /// Facets are complements of minimal vertex covers.
    pub fn from_squarefree(m: &MonomialIdeal) -> Result<Self> {
        check_size(m.nvars())?;
        if m.generators().iter().any(|g| g.exponents().iter().any(|&e| e > 1)) {
            return Err(Error::InvalidInput("the ideal is not squarefree".into()));
        }
        let covers: Vec<u64> = coordinate_primes_containing(m)?.into_iter().map(|p| p.mask).collect();
        let full = (1u64 << m.nvars()) - 1;
        let facets = covers
            .iter()
            .filter(|&&c| !covers.iter().any(|&d| d != c && d & c == d))
            .map(|&c| full & !c)
            .collect();
        Ok(FacetComplex::new(m.nvars(), facets))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn dimension(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }
}

/// Proj of a pure Stanley–Reisner ring is smooth iff its linear components
/// are pairwise disjoint.
pub fn sr_isolated(complex: &FacetComplex) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NonPureComplex);
    }
    let f = &complex.facets;
    Ok(f.iter().enumerate().all(|(i, a)| f[i + 1..].iter().all(|b| a & b == 0)))
}
