//! Regularity of the graded local ring (A, m), decided three ways: the
//! dimension count rank(m/m²) = grKdim, a capped minimal resolution of k,
//! and certification of a homogeneous regular sequence generating m.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_quotient, minimalize, syzygy_basis, FreeModule, Vector};
use crate::invariants::{krull_dim, linear_part_matrix, rref_pivots_from_right};
use crate::limits::Budget;
use crate::polyring::{GradedRingPresentation, Polynomial};

/// pdim_A k, or `Infinite` once the resolution outlives grKdim + 1 steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectiveDimension {
    Finite(usize),
    Infinite,
}

impl Serialize for ProjectiveDimension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ProjectiveDimension::Finite(n) => s.serialize_u64(*n as u64),
            ProjectiveDimension::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// One free module `F_step = ⊕ A(−shift)` of the resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiStep {
    pub step: usize,
    pub rank: usize,
    pub shifts: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub pdim: ProjectiveDimension,
    pub betti: Vec<BettiStep>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub dimension_count: bool,
    pub capped_resolution: bool,
    pub regular_sequence: bool,
}

impl Verdicts {
    pub fn agree(&self) -> bool {
        self.dimension_count == self.capped_resolution && self.capped_resolution == self.regular_sequence
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub grkdim: usize,
    pub emb_rank: usize,
    pub verdicts: Verdicts,
    pub regular_sequence: Option<Vec<Polynomial>>,
    pub pdim_k: ProjectiveDimension,
    pub betti: Vec<BettiStep>,
}

impl RegularityReport {
    pub fn regular(&self) -> bool {
        self.verdicts.dimension_count
    }
}

/// The variables that survive as minimal generators of m: the non-pivot
/// columns of the linear-part matrix, pivots taken from the right.
pub fn minimal_generators_of_m(a: &GradedRingPresentation) -> Vec<Polynomial> {
    let n = a.nvars();
    let (_, pivots) = rref_pivots_from_right(linear_part_matrix(a), n);
    (0..n).filter(|j| !pivots.contains(j)).map(|j| a.ring().var(j)).collect()
}

/// rank(m/m²) = grKdim A.
pub fn is_regular_dimension_count(a: &GradedRingPresentation, budget: &Budget) -> Result<bool> {
    Ok(crate::invariants::min_gens_rank(a) == krull_dim(a, budget)?)
}

/// Whether each `tᵢ` is a nonzerodivisor modulo `I + (t₁..t_{i−1})` and
/// `I + (seq)` is proper.
pub fn is_regular_sequence(a: &GradedRingPresentation, seq: &[Polynomial], budget: &Budget) -> Result<bool> {
    let ring = a.ring();
    let mut current = a.generators().to_vec();
    for t in seq {
        let gb = buchberger(ring, &current, budget)?;
        if gb.is_unit() || t.is_zero() {
            return Ok(false);
        }
        let colon = ideal_quotient(ring, gb.basis(), t, budget)?;
        if !colon.basis().iter().all(|g| gb.contains(ring, g)) {
            return Ok(false);
        }
        current.push(t.clone());
    }
    Ok(!buchberger(ring, &current, budget)?.is_unit())
}

/// A homogeneous regular sequence generating m, when the dimension count
/// says one exists. A failed certification in that case is a defect.
pub fn regular_sequence_extract(a: &GradedRingPresentation, budget: &Budget) -> Result<Option<Vec<Polynomial>>> {
    if !is_regular_dimension_count(a, budget)? {
        return Ok(None);
    }
    let seq = minimal_generators_of_m(a);
    if !is_regular_sequence(a, &seq, budget)? {
        return Err(Error::Inconsistency(
            "rank(m/m²) = grKdim but the minimal generators of m are not a regular sequence".into(),
        ));
    }
    Ok(Some(seq))
}

/// Minimal graded free resolution of k = A/m, stopped after grKdim + 1 steps.
pub fn resolve_residue_field(a: &GradedRingPresentation, budget: &Budget) -> Result<Resolution> {
    let ring = a.ring();
    let ideal = a.generators();
    let d = krull_dim(a, budget)?;
    let mut betti = vec![BettiStep { step: 0, rank: 1, shifts: vec![0] }];

    let t = minimal_generators_of_m(a);
    if t.is_empty() {
        return Ok(Resolution { pdim: ProjectiveDimension::Finite(0), betti });
    }
    let mut target_shifts = vec![0u64];
    let mut images: Vec<Vector> = t.iter().map(|f| Vector::from_poly(f, 0)).collect();
    let mut source_shifts: Vec<u64> = t.iter().map(|f| ring.homogeneous_degree(f).unwrap()).collect();
    betti.push(BettiStep { step: 1, rank: images.len(), shifts: source_shifts.clone() });

    for step in 2..=d + 1 {
        let target = FreeModule::new(ring, target_shifts.clone());
        let syz = syzygy_basis(&target, &images, ideal, budget)?;
        let source = FreeModule::new(ring, source_shifts.clone());
        let kernel = minimalize(&source, &syz, ideal, budget)?;
        if kernel.is_empty() {
            return Ok(Resolution { pdim: ProjectiveDimension::Finite(step - 1), betti });
        }
        let shifts: Vec<u64> = kernel.iter().map(|v| source.degree(v).unwrap()).collect();
        betti.push(BettiStep { step, rank: kernel.len(), shifts: shifts.clone() });
        target_shifts = source_shifts;
        source_shifts = shifts;
        images = kernel;
    }
    Ok(Resolution { pdim: ProjectiveDimension::Infinite, betti })
}

/// pdim_A k by the capped resolution.
pub fn pdim_residue_field_capped(a: &GradedRingPresentation, budget: &Budget) -> Result<ProjectiveDimension> {
    Ok(resolve_residue_field(a, budget)?.pdim)
}

/// Runs the three criteria independently and refuses to report if they disagree.
pub fn regularity_report(a: &GradedRingPresentation, budget: &Budget) -> Result<RegularityReport> {
    let grkdim = krull_dim(a, budget)?;
    let emb_rank = crate::invariants::min_gens_rank(a);
    let resolution = resolve_residue_field(a, budget)?;
    let candidates = minimal_generators_of_m(a);
    let verdicts = Verdicts {
        dimension_count: emb_rank == grkdim,
        capped_resolution: resolution.pdim != ProjectiveDimension::Infinite,
        regular_sequence: is_regular_sequence(a, &candidates, budget)?,
    };
    if !verdicts.agree() {
        return Err(Error::Inconsistency(format!(
            "regularity criteria disagree: dimension count {}, resolution {}, regular sequence {}",
            verdicts.dimension_count, verdicts.capped_resolution, verdicts.regular_sequence
        )));
    }
    if verdicts.dimension_count && resolution.pdim != ProjectiveDimension::Finite(grkdim) {
        return Err(Error::Inconsistency(format!("regular ring with pdim k ≠ grKdim = {grkdim}")));
    }
    Ok(RegularityReport {
        grkdim,
        emb_rank,
        verdicts,
        regular_sequence: verdicts.regular_sequence.then_some(candidates),
        pdim_k: resolution.pdim,
        betti: resolution.betti,
    })
}
