//! Hopf braces: two Hopf structures `(·, S)` and `(∘, T)` on one coalgebra with
//! `x∘(yz) = (x₁∘y) S(x₂) (x₃∘z)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{verify_hopf, HopfAlgebraData};
use crate::linalg::SparseMatrix;
use crate::report::{check_identity, AxiomCheck, AxiomReport, Witness};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfBraceData {
    dot: Arc<HopfAlgebraData>,
    circ: Arc<HopfAlgebraData>,
}

impl HopfBraceData {
    /// Pairs two Hopf structures; they must share the coalgebra (checked), the
    /// brace axioms are not checked here.
    pub fn new(dot: Arc<HopfAlgebraData>, circ: Arc<HopfAlgebraData>) -> Result<Self> {
        if dot.field() != circ.field() {
            return Err(Error::FieldMismatch(dot.field(), circ.field()));
        }
        if dot.delta() != circ.delta() || dot.counit() != circ.counit() {
            return Err(Error::shape(
                "Hopf brace",
                "two structures on one coalgebra",
                "different comultiplications or counits",
            ));
        }
        let circ = if dot.labels() != circ.labels() {
            Arc::new(circ.with_labels(dot.labels().to_vec())?)
        } else {
            circ
        };
        Ok(HopfBraceData { dot, circ })
    }

    /// The structure `(H, ·, 1, S)`.
    pub fn dot(&self) -> &Arc<HopfAlgebraData> {
        &self.dot
    }

    /// The structure `(H, ∘, 1∘, T)`.
    pub fn circ(&self) -> &Arc<HopfAlgebraData> {
        &self.circ
    }

    pub fn field(&self) -> Field {
        self.dot.field()
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.dot.labels()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.dot.is_cocommutative()
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        HopfBraceData::new(
            Arc::new(self.dot.with_labels(labels.clone())?),
            Arc::new(self.circ.with_labels(labels)?),
        )
    }
}

/// Both Hopf structures, `1 = 1∘`, and the compatibility
/// `m̄(I⊗m) = m(m⊗I)(m̄⊗S⊗m̄)(I⊗τ⊗I⊗I)(I⊗I⊗τ⊗I)(Δ⊗I⊗I)(Δ⊗I⊗I)` on every basis triple.
pub fn verify_hopf_brace(b: &HopfBraceData) -> AxiomReport {
    let mut r = AxiomReport::new("hopf brace");
    r.absorb("· ", &verify_hopf(&b.dot));
    r.absorb("∘ ", &verify_hopf(&b.circ));
    r.push(if b.dot.unit() == b.circ.unit() {
        AxiomCheck::pass("units coincide")
    } else {
        let residual = b
            .dot
            .unit()
            .sub(b.circ.unit())
            .expect("same shape")
            .triples()
            .into_iter()
            .map(|(row, _, v)| (vec![row], v))
            .collect();
        AxiomCheck::fail("units coincide", Witness { index: vec![], residual })
    });
    r.push(brace_compatibility(b));
    r
}

/// `x∘(yz) = (x₁∘y) S(x₂) (x₃∘z)` on `[x, y, z]`.
pub fn brace_compatibility(b: &HopfBraceData) -> AxiomCheck {
    let (h, hc) = (&b.dot, &b.circ);
    let d = h.dim();
    check_identity(
        "brace compatibility",
        h.field(),
        &[d, d, d],
        |t| hc.mult_at(&h.mult_at(t, 1), 0),
        |t| {
            let t = h.delta_at(&h.delta_at(t, 0), 0).permute(&[0, 3, 1, 2, 4]);
            let t = hc.mult_at(&t, 0);
            let t = h.antipode_at(&t, 1);
            let t = hc.mult_at(&t, 2);
            h.mult_at(&h.mult_at(&t, 0), 0)
        },
    )
}

/// `x∘y = xy`, `T = S`.
pub fn make_trivial_brace(h: &HopfAlgebraData) -> Result<HopfBraceData> {
    let report = verify_hopf(h);
    if !report.all_passed() {
        return Err(Error::Hypothesis {
            name: "H is a Hopf algebra".into(),
            report: Box::new(report.clone()),
        });
    }
    let h = Arc::new(h.clone());
    HopfBraceData::new(h.clone(), h)
}

/// `x∘y = yx`, `T = S`; requires `S² = I`.
pub fn make_opposite_brace(h: &HopfAlgebraData) -> Result<HopfBraceData> {
    let report = verify_hopf(h);
    if !report.all_passed() {
        return Err(Error::Hypothesis {
            name: "H is a Hopf algebra".into(),
            report: Box::new(report.clone()),
        });
    }
    h.antipode_involutive()
        .map_err(|index| Error::AntipodeNotInvolutive { index })?;
    let d = h.dim();
    let op_mult = h.mult().mul(&SparseMatrix::flip(h.field(), d, d))?;
    let circ = h.with_mult(op_mult)?;
    HopfBraceData::new(Arc::new(h.clone()), Arc::new(circ))
}

/// `S²(e_i)` for the witness of a refused opposite brace.
pub fn antipode_square_column(h: &HopfAlgebraData, i: usize) -> Vec<(usize, crate::Scalar)> {
    let s2 = h.antipode().mul(h.antipode()).expect("square");
    s2.column(i).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    const Q: Field = Field::Rational;

    #[test]
    fn trivial_braces() {
        for h in [
            zoo::cyclic_group_algebra(Q, 2).unwrap(),
            zoo::cyclic_group_algebra(Q, 6).unwrap(),
            zoo::sweedler_h4(Q).unwrap(),
        ] {
            let b = make_trivial_brace(&h).unwrap();
            let r = verify_hopf_brace(&b);
            assert!(r.all_passed(), "{}", r.to_text());
        }
        assert!(!make_trivial_brace(&zoo::sweedler_h4(Q).unwrap()).unwrap().is_cocommutative());
    }

    #[test]
    fn corrupted_circ_is_caught() {
        let c2 = zoo::cyclic_group_algebra(Q, 2).unwrap();
        // g∘g = 1 + g instead of 1.
        let mut t = c2.mult().triples();
        t.push((1, 3, Q.one()));
        let bad = c2.with_mult(SparseMatrix::from_triples(Q, 2, 4, t).unwrap()).unwrap();
        let b = HopfBraceData::new(Arc::new(c2), Arc::new(bad)).unwrap();
        let r = verify_hopf_brace(&b);
        assert!(!r.all_passed());
        let c = r.check("brace compatibility").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_ref().unwrap().index.len(), 3);
    }

    #[test]
    fn opposite_braces() {
        let c6 = zoo::cyclic_group_algebra(Q, 6).unwrap();
        let b = make_opposite_brace(&c6).unwrap();
        assert_eq!(b.dot().mult(), b.circ().mult());
        assert!(verify_hopf_brace(&b).all_passed());
        let s3 = zoo::symmetric_group_algebra(Q, 3).unwrap();
        let b = make_opposite_brace(&s3).unwrap();
        assert_ne!(b.dot().mult(), b.circ().mult());
        assert!(verify_hopf_brace(&b).all_passed());
        let h4 = zoo::sweedler_h4(Q).unwrap();
        match make_opposite_brace(&h4) {
            Err(Error::AntipodeNotInvolutive { index }) => {
                assert_eq!(index, 2);
                assert_eq!(antipode_square_column(&h4, index), vec![(2, Q.int(-1))]);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn structures_must_share_the_coalgebra() {
        let c2 = zoo::cyclic_group_algebra(Q, 2).unwrap();
        let c2_cop = c2.with_coalgebra(c2.coalgebra().clone()).unwrap();
        assert!(HopfBraceData::new(Arc::new(c2.clone()), Arc::new(c2_cop)).is_ok());
        let c3 = zoo::cyclic_group_algebra(Q, 3).unwrap();
        assert!(HopfBraceData::new(Arc::new(c2), Arc::new(c3)).is_err());
    }
}
