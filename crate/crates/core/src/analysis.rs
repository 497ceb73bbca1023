//! The full pipeline from a ring-definition document to an [`AnalysisReport`].

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::certify_proper;
use crate::invariants::{char_poly, hilbert_series, CharPoly, HilbertSeries};
use crate::limits::Budget;
use crate::numeric::FieldSpec;
use crate::polyparse::RingDefinitionDocument;
use crate::polyring::{GradedRingPresentation, TermOrderKind};
use crate::regularity::{regularity_report, ProjectiveDimension};
use crate::singularity::{singularity_report_with, QgrGldim};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingEcho {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub field: String,
}

/// Everything the analyzer reports about one ring. Timings are kept out of
/// the serialized body so that reports stay byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub ring: RingEcho,
    #[serde(rename = "grKdim")]
    pub grkdim: usize,
    pub emb_rank: usize,
    pub regular: bool,
    pub regular_sequence: Option<Vec<String>>,
    pub pdim_k: ProjectiveDimension,
    pub hilbert: HilbertSeries,
    pub char_poly: Option<CharPoly>,
    pub isolated: bool,
    pub singular_locus_dim: i64,
    pub qgr_gldim: QgrGldim,
    pub assumptions: Vec<String>,
    #[serde(skip)]
    pub timings: Vec<(&'static str, u128)>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let vars: Vec<String> =
            self.ring.variables.iter().zip(&self.ring.weights).map(|(v, w)| format!("{v}:{w}")).collect();
        writeln!(s, "ring:               {}[{}]", self.ring.field, vars.join(", ")).unwrap();
        writeln!(s, "grKdim:             {}", self.grkdim).unwrap();
        writeln!(s, "rank m/m^2:         {}", self.emb_rank).unwrap();
        writeln!(s, "regular:            {}", self.regular).unwrap();
        if let Some(seq) = &self.regular_sequence {
            writeln!(s, "regular sequence:   ({})", seq.join(", ")).unwrap();
        }
        let pdim = match self.pdim_k {
            ProjectiveDimension::Finite(n) => n.to_string(),
            ProjectiveDimension::Infinite => "infinite".into(),
        };
        writeln!(s, "pdim k:             {pdim}").unwrap();
        writeln!(s, "hilbert series:     {}", self.hilbert.display()).unwrap();
        if let Some(chi) = &self.char_poly {
            writeln!(s, "char poly (m):      {} for n >= {}", chi.display(), chi.threshold()).unwrap();
        }
        writeln!(s, "isolated:           {}", self.isolated).unwrap();
        writeln!(s, "singular locus dim: {}", self.singular_locus_dim).unwrap();
        let q = match self.qgr_gldim {
            QgrGldim::Value(n) => n.to_string(),
            QgrGldim::Unknown => "unknown".into(),
        };
        writeln!(s, "gldim qgr A:        {q}").unwrap();
        for a in &self.assumptions {
            writeln!(s, "assumption:         {a}").unwrap();
        }
        s
    }
}

/// Parses the ideal and checks homogeneity; `field` and `order` override the document.
pub fn load_presentation(
    doc: &RingDefinitionDocument,
    field: Option<FieldSpec>,
    order: Option<TermOrderKind>,
) -> Result<GradedRingPresentation> {
    let ring = doc.ring(field, order)?;
    let gens = doc.parse_ideal(&ring)?;
    GradedRingPresentation::new(ring, gens)
}

/// Gröbner basis, invariants, regularity and singularity, in that order.
pub fn analyze(a: &GradedRingPresentation, assume_equidimensional: bool, budget: &Budget) -> Result<AnalysisReport> {
    if !assume_equidimensional {
        return Err(Error::InvalidInput(
            "the singular-locus test needs an equidimensional ideal; set assume_equidimensional".into(),
        ));
    }
    let ring = a.ring();
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str, timings: &mut Vec<(&'static str, u128)>| {
        timings.push((name, clock.elapsed().as_millis()));
        clock = Instant::now();
    };

    let gb = certify_proper(a, budget)?;
    lap("groebner", &mut timings);

    let hilbert = hilbert_series(ring, &gb);
    let m: Vec<_> = (0..ring.nvars()).map(|j| ring.var(j)).collect();
    let chi = char_poly(a, &m, budget)?;
    lap("invariants", &mut timings);

    let regularity = regularity_report(a, budget)?;
    lap("regularity", &mut timings);

    let singularity = singularity_report_with(a, &regularity, budget)?;
    lap("singularity", &mut timings);

    if chi.degree() != regularity.grkdim || hilbert.pole_order() != regularity.grkdim {
        return Err(Error::Inconsistency(format!(
            "dimension mismatch: char poly degree {}, Hilbert pole order {}, grKdim {}",
            chi.degree(),
            hilbert.pole_order(),
            regularity.grkdim
        )));
    }

    Ok(AnalysisReport {
        ring: RingEcho {
            variables: ring.names().to_vec(),
            weights: ring.weights().to_vec(),
            field: ring.field().to_string(),
        },
        grkdim: regularity.grkdim,
        emb_rank: regularity.emb_rank,
        regular: regularity.regular(),
        regular_sequence: regularity.regular_sequence.as_ref().map(|s| s.iter().map(|f| ring.display(f)).collect()),
        pdim_k: regularity.pdim_k,
        hilbert,
        char_poly: Some(chi),
        isolated: singularity.isolated,
        singular_locus_dim: singularity.singular_locus_dim,
        qgr_gldim: singularity.qgr_gldim,
        assumptions: singularity.assumptions,
        timings,
    })
}

/// Parses a ring file and analyzes it.
pub fn analyze_document(
    doc: &RingDefinitionDocument,
    field: Option<FieldSpec>,
    order: Option<TermOrderKind>,
    budget: &Budget,
) -> Result<AnalysisReport> {
    let a = load_presentation(doc, field, order)?;
    analyze(&a, doc.options.assume_equidimensional.unwrap_or(true), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyparse::parse_ring_file;

    fn run(src: &str) -> Result<AnalysisReport> {
        analyze_document(&parse_ring_file(src)?, None, None, &Budget::default())
    }

    #[test]
    fn cone_report() {
        let r = run(r#"{"field":{"kind":"rational"},
            "variables":[{"name":"x","degree":1},{"name":"y","degree":1},{"name":"z","degree":1}],
            "ideal":["x*y - z^2"]}"#)
        .unwrap();
        assert!(!r.regular && r.isolated);
        assert_eq!(r.qgr_gldim, QgrGldim::Value(1));
        assert_eq!(r.grkdim, 2);
        assert_eq!(r.emb_rank, 3);
        let v = r.to_value();
        assert_eq!(v["grKdim"], 2);
        assert_eq!(v["pdim_k"], "infinite");
        assert_eq!(v["hilbert"]["numerator"], "1 - t^2");
        assert!(v.get("timings").is_none());
    }

    #[test]
    fn polynomial_ring_report() {
        let r = run(r#"{"field":{"kind":"rational"},
            "variables":[{"name":"x","degree":1},{"name":"y","degree":1},{"name":"z","degree":1}],
            "ideal":[]}"#)
        .unwrap();
        assert!(r.regular);
        assert_eq!(r.regular_sequence, Some(vec!["x".into(), "y".into(), "z".into()]));
        assert_eq!(r.pdim_k, ProjectiveDimension::Finite(3));
    }

    #[test]
    fn error_paths() {
        let nonhomog = r#"{"field":{"kind":"rational"},
            "variables":[{"name":"x","degree":1},{"name":"y","degree":1}], "ideal":["x + y^2"]}"#;
        assert_eq!(run(nonhomog).unwrap_err().exit_code(), 3);
        let unit = r#"{"field":{"kind":"rational"},
            "variables":[{"name":"x","degree":1}], "ideal":["x", "x^2"]}"#;
        assert!(run(unit).is_ok());
        let improper = r#"{"field":{"kind":"rational"},
            "variables":[{"name":"x","degree":1}], "ideal":["1"]}"#;
        assert_eq!(run(improper).unwrap_err().exit_code(), 3);
        let not_equidim = r#"{"field":{"kind":"rational"},
            "variables":[{"name":"x","degree":1}], "ideal":[],
            "options":{"assume_equidimensional":false}}"#;
        assert_eq!(run(not_equidim).unwrap_err().exit_code(), 3);
    }
}
