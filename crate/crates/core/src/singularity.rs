//! Graded isolated singularities through the Jacobian criterion: Proj A is
//! smooth exactly when the singular-locus ideal defines at most the vertex.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::radical_membership;
use crate::invariants::{krull_dim, krull_dim_of};
use crate::limits::Budget;
use crate::numeric::FieldSpec;
use crate::polyring::{GradedRingPresentation, PolyRing, Polynomial};
use crate::regularity::{regularity_report, RegularityReport};

/// Upper bound on the number of c×c minors generated.
pub const MAX_MINORS: usize = 20_000;

pub const EQUIDIMENSIONAL_ASSUMPTION: &str = "I is equidimensional (declared, not verified)";
pub const PRIME_FIELD_CAVEAT: &str = "valid for geometrically reduced A over perfect k";
pub const QGR_PROVENANCE: &str = "qgr_gldim reported as grKdim - 1 from the isolated-singularity equivalence, not computed";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianData {
    /// One row per given generator, one column per variable.
    pub matrix: Vec<Vec<Polynomial>>,
    /// c = n − grKdim A.
    pub codim: usize,
}

/// Global dimension of qgr A, or `Unknown` where the equivalence does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QgrGldim {
    Value(usize),
    Unknown,
}

impl Serialize for QgrGldim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            QgrGldim::Value(n) => s.serialize_u64(*n as u64),
            QgrGldim::Unknown => s.serialize_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityReport {
    pub isolated: bool,
    pub regular: bool,
    /// Affine dimension of V(Jac); −1 when Jac is the unit ideal.
    pub singular_locus_dim: i64,
    pub qgr_gldim: QgrGldim,
    pub assumptions: Vec<String>,
    pub field_caveat: Option<String>,
}

pub fn jacobian_matrix(a: &GradedRingPresentation, budget: &Budget) -> Result<JacobianData> {
    let ring = a.ring();
    let matrix = a
        .generators()
        .iter()
        .map(|g| (0..ring.nvars()).map(|j| ring.derivative(g, j)).collect())
        .collect();
    let codim = ring.nvars() - krull_dim(a, budget)?;
    Ok(JacobianData { matrix, codim })
}

fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Laplace expansion along the first selected row.
fn determinant(ring: &PolyRing, m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.is_empty() {
        return ring.one();
    }
    let mut det = Polynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = ring.mul(entry, &determinant(ring, m, &rows[1..], &rest));
        det = if k % 2 == 0 { ring.add(&det, &term) } else { ring.sub(&det, &term) };
    }
    det
}

/// All nonzero c×c minors, rows then columns in lexicographic order.
pub fn minors(ring: &PolyRing, matrix: &[Vec<Polynomial>], c: usize) -> Result<Vec<Polynomial>> {
    if c == 0 {
        return Ok(vec![ring.one()]);
    }
    let count = choose(matrix.len(), c).saturating_mul(choose(ring.nvars(), c));
    if count > MAX_MINORS {
        return Err(Error::ResourceCap(format!("{count} minors of size {c} exceed the cap of {MAX_MINORS}")));
    }
    let mut out = Vec::new();
    for rows in subsets(matrix.len(), c) {
        for cols in subsets(ring.nvars(), c) {
            let det = determinant(ring, matrix, &rows, &cols);
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    Ok(out)
}

/// Jac = I + (c×c minors of the Jacobian matrix), with the 0×0 minor equal to 1.
pub fn singular_locus_ideal(a: &GradedRingPresentation, budget: &Budget) -> Result<Vec<Polynomial>> {
    let jac = jacobian_matrix(a, budget)?;
    let mut gens = a.generators().to_vec();
    gens.extend(minors(a.ring(), &jac.matrix, jac.codim)?);
    Ok(gens)
}

/// Affine dimension of V(Jac), `None` when the locus is empty.
pub fn singular_locus_dim(a: &GradedRingPresentation, budget: &Budget) -> Result<Option<usize>> {
    krull_dim_of(a.ring(), &singular_locus_ideal(a, budget)?, budget)
}

/// The isolated-singularity verdict together with the regularity verdict it must respect.
pub fn is_graded_isolated_singularity(a: &GradedRingPresentation, budget: &Budget) -> Result<SingularityReport> {
    let regularity = regularity_report(a, budget)?;
    singularity_report_with(a, &regularity, budget)
}

/// As [`is_graded_isolated_singularity`], reusing an existing regularity report.
pub fn singularity_report_with(
    a: &GradedRingPresentation,
    regularity: &RegularityReport,
    budget: &Budget,
) -> Result<SingularityReport> {
    let ring = a.ring();
    let d = krull_dim(a, budget)?;
    let jac = singular_locus_ideal(a, budget)?;
    let locus = krull_dim_of(ring, &jac, budget)?;
    let isolated = locus.map_or(true, |k| k == 0);
    if locus == Some(0) {
        for j in 0..ring.nvars() {
            if !radical_membership(ring, &ring.var(j), &jac, budget)? {
                return Err(Error::Inconsistency(format!(
                    "V(Jac) has dimension 0 but {} is not in its radical",
                    ring.names()[j]
                )));
            }
        }
    }
    let regular = regularity.regular();
    if regular && !isolated {
        return Err(Error::Inconsistency("regular ring reported with a non-isolated singularity".into()));
    }
    let mut assumptions = vec![EQUIDIMENSIONAL_ASSUMPTION.to_string()];
    let field_caveat = match ring.field() {
        FieldSpec::Rational => None,
        FieldSpec::Prime { .. } => Some(PRIME_FIELD_CAVEAT.to_string()),
    };
    if let Some(c) = &field_caveat {
        assumptions.push(c.clone());
    }
    let qgr_gldim = if isolated && d >= 1 {
        assumptions.push(QGR_PROVENANCE.to_string());
        QgrGldim::Value(d - 1)
    } else {
        QgrGldim::Unknown
    };
    Ok(SingularityReport {
        isolated,
        regular,
        singular_locus_dim: locus.map_or(-1, |k| k as i64),
        qgr_gldim,
        assumptions,
        field_caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::polyparse::parse_polynomial;

    fn pres(field: FieldSpec, names: &[&str], gens: &[&str]) -> GradedRingPresentation {
        let ring = PolyRing::standard(field, names);
        let g = gens.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect();
        GradedRingPresentation::new(ring, g).unwrap()
    }

    fn rows(a: &GradedRingPresentation, jac: &JacobianData) -> Vec<Vec<String>> {
        jac.matrix.iter().map(|r| r.iter().map(|f| a.ring().display(f)).collect()).collect()
    }

    #[test]
    fn jacobian_examples() {
        let b = Budget::default();
        let cone = pres(FieldSpec::Rational, &["x", "y", "z"], &["x*y - z^2"]);
        let jac = jacobian_matrix(&cone, &b).unwrap();
        assert_eq!(rows(&cone, &jac), vec![vec!["y", "x", "-2*z"]]);
        assert_eq!(jac.codim, 1);

        let free = pres(FieldSpec::Rational, &["x", "y"], &[]);
        assert!(jacobian_matrix(&free, &b).unwrap().matrix.is_empty());

        let f2 = pres(FieldSpec::prime(2).unwrap(), &["x", "y"], &["x^2"]);
        assert_eq!(rows(&f2, &jacobian_matrix(&f2, &b).unwrap()), vec![vec!["0", "0"]]);
    }

    #[test]
    fn singular_locus_examples() {
        let b = Budget::default();
        let cross = pres(FieldSpec::Rational, &["x", "y", "z"], &["x*y"]);
        let gb = buchberger(cross.ring(), &singular_locus_ideal(&cross, &b).unwrap(), &b).unwrap();
        assert_eq!(gb.display(cross.ring()), vec!["y", "x"]);
        let free = pres(FieldSpec::Rational, &["x", "y", "z"], &[]);
        let gb = buchberger(free.ring(), &singular_locus_ideal(&free, &b).unwrap(), &b).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn minor_determinants() {
        let r = PolyRing::standard(FieldSpec::Rational, &["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let m = vec![vec![p("x"), p("y")], vec![p("2"), p("3")]];
        let d = minors(&r, &m, 2).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(r.display(&d[0]), "3*x - 2*y");
        assert_eq!(minors(&r, &m, 1).unwrap().len(), 4);
    }

    #[test]
    fn verdict_examples() {
        let b = Budget::default();
        let cone = is_graded_isolated_singularity(&pres(FieldSpec::Rational, &["x", "y", "z"], &["x*y - z^2"]), &b).unwrap();
        assert!(cone.isolated && !cone.regular);
        assert_eq!(cone.qgr_gldim, QgrGldim::Value(1));
        assert_eq!(cone.singular_locus_dim, 0);

        let cross = is_graded_isolated_singularity(&pres(FieldSpec::Rational, &["x", "y", "z"], &["x*y"]), &b).unwrap();
        assert!(!cross.isolated);
        assert_eq!(cross.singular_locus_dim, 1);
        assert_eq!(cross.qgr_gldim, QgrGldim::Unknown);

        let free = is_graded_isolated_singularity(&pres(FieldSpec::Rational, &["x", "y", "z"], &[]), &b).unwrap();
        assert!(free.isolated && free.regular);
        assert_eq!(free.qgr_gldim, QgrGldim::Value(2));
        assert_eq!(free.singular_locus_dim, -1);
    }

    #[test]
    fn artinian_rings_report_unknown() {
        let b = Budget::default();
        let dual = is_graded_isolated_singularity(&pres(FieldSpec::Rational, &["x"], &["x^2"]), &b).unwrap();
        assert!(dual.isolated);
        assert_eq!(dual.qgr_gldim, QgrGldim::Unknown);
    }

    #[test]
    fn prime_fields_carry_the_caveat() {
        let b = Budget::default();
        let r = is_graded_isolated_singularity(&pres(FieldSpec::prime(7).unwrap(), &["x", "y", "z"], &["x*y - z^2"]), &b)
            .unwrap();
        assert_eq!(r.field_caveat.as_deref(), Some(PRIME_FIELD_CAVEAT));
        assert!(r.assumptions.iter().any(|s| s == PRIME_FIELD_CAVEAT));
    }
}
