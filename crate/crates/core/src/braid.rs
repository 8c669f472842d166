//! The braid operator of a cocommutative Hopf brace, closed-form operators of
//! specific braces, and braid / quantum Yang–Baxter checks.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::actions::{verify_action, ActionKind, LinearAction, Side};
use crate::brace::HopfBraceData;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::SparseMatrix;
use crate::report::{check_identity, AxiomCheck, AxiomReport};
use crate::sweedler::{accumulate_tensor, Naive, NaiveAction};
use crate::tensor::{matrix_of, TensorVec};

/// An operator `c` on `V ⊗ V` with `dim V = dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidOperator {
    matrix: SparseMatrix,
    dim: usize,
    source: Option<HopfBraceData>,
}

impl BraidOperator {
    pub fn from_matrix(matrix: SparseMatrix) -> Result<Self> {
        let dim = square_root_dim(&matrix)?;
        Ok(BraidOperator {
            matrix,
            dim,
            source: None,
        })
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn source(&self) -> Option<&HopfBraceData> {
        self.source.as_ref()
    }

    pub fn into_matrix(self) -> SparseMatrix {
        self.matrix
    }
}

fn square_root_dim(c: &SparseMatrix) -> Result<usize> {
    let n = c.rows();
    let d = (0..=n).find(|d| d * d >= n).unwrap_or(0);
    if c.cols() != n || d * d != n {
        return Err(Error::shape(
            "operator on V⊗V",
            "a square d²×d² matrix",
            format!("{}x{}", c.rows(), c.cols()),
        ));
    }
    Ok(d)
}

/// `c(x⊗y) = S(x₁)(x₂∘y₁) ⊗ T(S(x₃)(x₄∘y₂)) ∘ x₅ ∘ y₃`.
pub fn braid_operator(b: &HopfBraceData) -> Result<BraidOperator> {
    if !b.is_cocommutative() {
        return Err(Error::NotCocommutative("Hopf brace".into()));
    }
    let (h, hc) = (b.dot(), b.circ());
    let d = b.dim();
    let delta4 = h.coalgebra().delta_iter(4);
    let delta2 = h.coalgebra().delta_iter(2);
    let matrix = matrix_of(b.field(), &[d, d], d * d, |t| {
        let t = t.apply(0, 1, &delta4, &[d; 5]);
        let t = t.apply(5, 1, &delta2, &[d; 3]);
        // [x1, x2, y1, x3, x4, y2, x5, y3]
        let t = t.permute(&[0, 1, 5, 2, 3, 6, 4, 7]);
        let t = hc.mult_at(&t, 1);
        let t = h.antipode_at(&t, 0);
        let t = h.mult_at(&t, 0);
        // [S(x1)(x2∘y1), x3, x4, y2, x5, y3]
        let t = hc.mult_at(&t, 2);
        let t = h.antipode_at(&t, 1);
        let t = h.mult_at(&t, 1);
        let t = hc.antipode_at(&t, 1);
        let t = hc.mult_at(&t, 1);
        hc.mult_at(&t, 1)
    });
    Ok(BraidOperator {
        matrix,
        dim: d,
        source: Some(b.clone()),
    })
}

/// Closed-form operators of specific braces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraidExample {
    /// Trivial brace `x∘y = xy`: `c(x⊗y) = y₁ ⊗ S(y₂) x y₃`.
    Trivial,
    /// Opposite brace `x∘y = yx`: `c(x⊗y) = S(x₁) y x₂ ⊗ x₃`.
    Opposite,
    /// Smash product with `(a⊗x)∘(b⊗y) = ab⊗yx`, from a left action `▷` of `H` on `A`.
    Gen1,
    /// `(a⊗x)(b⊗y) = ab⊗xy`, `(a⊗x)∘(b⊗y) = a(x₁▶b)⊗yx₂`, from a left action `▶`.
    Gen2,
    /// `(a⊗x)(b⊗y) = ab₁⊗(x◁b₂)y`, `(a⊗x)∘(b⊗y) = ab⊗yx`, from a right action `◁`.
    Gen3,
}

impl BraidExample {
    pub const ALL: [BraidExample; 5] = [
        BraidExample::Trivial,
        BraidExample::Opposite,
        BraidExample::Gen1,
        BraidExample::Gen2,
        BraidExample::Gen3,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            BraidExample::Trivial => "ex1.1-1",
            BraidExample::Opposite => "ex1.1-2",
            BraidExample::Gen1 => "gen-1",
            BraidExample::Gen2 => "gen-2",
            BraidExample::Gen3 => "gen-3",
        }
    }
}

impl fmt::Display for BraidExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BraidExample {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BraidExample::ALL
            .into_iter()
            .find(|e| e.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "braid example",
                id: s.into(),
            })
    }
}

/// Input of [`specialized_braid`]: a Hopf algebra for the two single-algebra
/// examples, an action for the others (which determines `A` and `H`).
#[derive(Clone, Debug)]
pub enum BraidInput {
    Hopf(Arc<HopfAlgebraData>),
    Action(LinearAction),
}

fn require_cocommutative(h: &HopfAlgebraData, name: &str) -> Result<()> {
    if h.is_cocommutative() {
        Ok(())
    } else {
        Err(Error::NotCocommutative(name.into()))
    }
}

fn require_bialgebra_action(act: &LinearAction, side: Side) -> Result<()> {
    if act.side() != side {
        return Err(Error::shape("action", format!("a {side} action"), act.side()));
    }
    let r = verify_action(act, ActionKind::ModuleBialgebra);
    if !r.all_passed() {
        return Err(Error::Hypothesis {
            name: format!("{side} module-bialgebra"),
            report: Box::new(r),
        });
    }
    Ok(())
}

/// The displayed closed-form operator, evaluated with the naive Sweedler evaluator.
///
/// With `T = S` on the cocommutative `H` and `A`:
///
/// * `gen-1`: `c((a⊗x)⊗(b⊗y)) = (S(x₁)▷b₁ ⊗ S(x₂) y x₃) ⊗ (S(S(x₄)▷b₂) a b₃ ⊗ x₅)`
/// * `gen-2`: `c((a⊗x)⊗(b⊗y)) = (x₂▶b₁ ⊗ S(x₁) y₁ x₃) ⊗ ((S(x₆)S(y₂)x₄)▶(S(x₇▶b₂) a (x₈▶b₃)) ⊗ x₅)`
/// * `gen-3`: `c((a⊗x)⊗(b⊗y)) = (b₁ ⊗ S(x₁◁b₂) y x₂) ⊗ (S(b₃) a b₅ ⊗ S(S(x₃)◁b₄))`
pub fn specialized_braid(example: BraidExample, input: &BraidInput) -> Result<BraidOperator> {
    match (example, input) {
        (BraidExample::Trivial | BraidExample::Opposite, BraidInput::Hopf(h)) => {
            require_cocommutative(h, "H")?;
            Ok(single(example, h))
        }
        (BraidExample::Gen1 | BraidExample::Gen2, BraidInput::Action(act)) => {
            if example == BraidExample::Gen2 && act.side() == Side::Left {
                // ▶ acts through the opposite multiplication of H.
                let op = act.with_actor(Arc::new(act.actor().opposite()?))?;
                require_bialgebra_action(&op, Side::Left)?;
            } else {
                require_bialgebra_action(act, Side::Left)?;
            }
            let (h, a) = (act.actor(), act.target());
            require_cocommutative(a, "A")?;
            require_cocommutative(h, "H")?;
            Ok(double(example, a, h, act))
        }
        (BraidExample::Gen3, BraidInput::Action(act)) => {
            require_bialgebra_action(act, Side::Right)?;
            let (a, h) = (act.actor(), act.target());
            require_cocommutative(a, "A")?;
            require_cocommutative(h, "H")?;
            Ok(double(example, a, h, act))
        }
        (e, _) => Err(Error::MissingIngredient(format!(
            "{e} needs {}",
            match e {
                BraidExample::Trivial | BraidExample::Opposite => "a Hopf algebra",
                _ => "an action",
            }
        ))),
    }
}

fn single(example: BraidExample, h: &HopfAlgebraData) -> BraidOperator {
    let n = Naive::new(h);
    let d = n.dim();
    let f = h.field();
    let mut columns = Vec::with_capacity(d * d);
    for x in 0..d {
        for y in 0..d {
            let mut out = vec![f.zero(); d * d];
            match example {
                BraidExample::Trivial => {
                    for (c, ys) in n.sweedler(y, 3) {
                        let right = n.mul_all(&[n.antipode(&n.basis(ys[1])), n.basis(x), n.basis(ys[2])]);
                        accumulate_tensor(&mut out, &c, &[&n.basis(ys[0]), &right]);
                    }
                }
                _ => {
                    for (c, xs) in n.sweedler(x, 3) {
                        let left = n.mul_all(&[n.antipode(&n.basis(xs[0])), n.basis(y), n.basis(xs[1])]);
                        accumulate_tensor(&mut out, &c, &[&left, &n.basis(xs[2])]);
                    }
                }
            }
            columns.push(dense_to_column(&out));
        }
    }
    BraidOperator {
        matrix: SparseMatrix::from_columns(f, d * d, columns).expect("in range"),
        dim: d,
        source: None,
    }
}

fn dense_to_column(v: &[crate::Scalar]) -> Vec<(usize, crate::Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

fn double(example: BraidExample, a: &HopfAlgebraData, h: &HopfAlgebraData, act: &LinearAction) -> BraidOperator {
    let (na, nh, nact) = (Naive::new(a), Naive::new(h), NaiveAction::new(act));
    let (da, dh) = (na.dim(), nh.dim());
    let big = da * dh;
    let f = a.field();
    let (ea, eh) = (|i| na.basis(i), |i| nh.basis(i));
    let mut columns = Vec::with_capacity(big * big);
    for u in 0..big {
        let (ai, xi) = (u / dh, u % dh);
        for v in 0..big {
            let (bi, yi) = (v / dh, v % dh);
            let mut out = vec![f.zero(); big * big];
            match example {
                BraidExample::Gen1 => {
                    for (cx, xs) in nh.sweedler(xi, 5) {
                        for (cb, bs) in na.sweedler(bi, 3) {
                            let c = &cx * &cb;
                            let p = nact.apply(&nh.antipode(&eh(xs[0])), &ea(bs[0]));
                            let q = nh.mul_all(&[nh.antipode(&eh(xs[1])), eh(yi), eh(xs[2])]);
                            let r = na.mul_all(&[
                                na.antipode(&nact.apply(&nh.antipode(&eh(xs[3])), &ea(bs[1]))),
                                ea(ai),
                                ea(bs[2]),
                            ]);
                            accumulate_tensor(&mut out, &c, &[&p, &q, &r, &eh(xs[4])]);
                        }
                    }
                }
                BraidExample::Gen2 => {
                    for (cx, xs) in nh.sweedler(xi, 8) {
                        for (cy, ys) in nh.sweedler(yi, 2) {
                            for (cb, bs) in na.sweedler(bi, 3) {
                                let c = &(&cx * &cy) * &cb;
                                let p = nact.apply(&eh(xs[1]), &ea(bs[0]));
                                let q = nh.mul_all(&[nh.antipode(&eh(xs[0])), eh(ys[0]), eh(xs[2])]);
                                let actor = nh.mul_all(&[
                                    nh.antipode(&eh(xs[5])),
                                    nh.antipode(&eh(ys[1])),
                                    eh(xs[3]),
                                ]);
                                let inner = na.mul_all(&[
                                    na.antipode(&nact.apply(&eh(xs[6]), &ea(bs[1]))),
                                    ea(ai),
                                    nact.apply(&eh(xs[7]), &ea(bs[2])),
                                ]);
                                let r = nact.apply(&actor, &inner);
                                accumulate_tensor(&mut out, &c, &[&p, &q, &r, &eh(xs[4])]);
                            }
                        }
                    }
                }
                BraidExample::Gen3 => {
                    for (cx, xs) in nh.sweedler(xi, 3) {
                        for (cb, bs) in na.sweedler(bi, 5) {
                            let c = &cx * &cb;
                            let q = nh.mul_all(&[
                                nh.antipode(&nact.apply(&ea(bs[1]), &eh(xs[0]))),
                                eh(yi),
                                eh(xs[1]),
                            ]);
                            let r = na.mul_all(&[na.antipode(&ea(bs[2])), ea(ai), ea(bs[4])]);
                            let s = nh.antipode(&nact.apply(&ea(bs[3]), &nh.antipode(&eh(xs[2]))));
                            accumulate_tensor(&mut out, &c, &[&ea(bs[0]), &q, &r, &s]);
                        }
                    }
                }
                _ => unreachable!("single-algebra examples are handled separately"),
            }
            columns.push(dense_to_column(&out));
        }
    }
    BraidOperator {
        matrix: SparseMatrix::from_columns(f, big * big, columns).expect("in range"),
        dim: big,
        source: None,
    }
}

/// `(c⊗I)(I⊗c)(c⊗I) = (I⊗c)(c⊗I)(I⊗c)` on every basis vector of `V^{⊗3}`.
pub fn braid_report(c: &SparseMatrix) -> Result<AxiomReport> {
    let d = square_root_dim(c)?;
    let at = |t: &TensorVec, slot: usize| t.apply(slot, 2, c, &[d, d]);
    let mut r = AxiomReport::new("braid equation");
    r.push(check_identity(
        "braid equation",
        c.field(),
        &[d, d, d],
        |t| at(&at(&at(t, 0), 1), 0),
        |t| at(&at(&at(t, 1), 0), 1),
    ));
    Ok(r)
}

pub fn check_braid(c: &SparseMatrix) -> Result<bool> {
    Ok(braid_report(c)?.all_passed())
}

/// `R¹²R¹³R²³ = R²³R¹³R¹²` on every basis vector of `V^{⊗3}`.
pub fn qybe_report(r_matrix: &SparseMatrix) -> Result<AxiomReport> {
    let d = square_root_dim(r_matrix)?;
    let r12 = |t: &TensorVec| t.apply(0, 2, r_matrix, &[d, d]);
    let r23 = |t: &TensorVec| t.apply(1, 2, r_matrix, &[d, d]);
    let r13 = |t: &TensorVec| t.flip(1).apply(0, 2, r_matrix, &[d, d]).flip(1);
    let mut r = AxiomReport::new("quantum Yang-Baxter equation");
    r.push(check_identity(
        "quantum Yang-Baxter equation",
        r_matrix.field(),
        &[d, d, d],
        |t| r12(&r13(&r23(t))),
        |t| r23(&r13(&r12(t))),
    ));
    Ok(r)
}

pub fn check_qybe(r_matrix: &SparseMatrix) -> Result<bool> {
    Ok(qybe_report(r_matrix)?.all_passed())
}

/// `R = c∘τ`; `R` solves the QYBE iff `c` solves the braid equation.
pub fn braid_to_r_matrix(c: &SparseMatrix) -> Result<SparseMatrix> {
    let d = square_root_dim(c)?;
    c.mul(&SparseMatrix::flip(c.field(), d, d))
}

/// `c = R∘τ`, the inverse of [`braid_to_r_matrix`].
pub fn r_matrix_to_braid(r: &SparseMatrix) -> Result<SparseMatrix> {
    braid_to_r_matrix(r)
}

/// Entrywise comparison of two operators with the first differing column as witness.
pub fn compare_operators(name: &str, lhs: &SparseMatrix, rhs: &SparseMatrix) -> Result<AxiomCheck> {
    if lhs.shape() != rhs.shape() {
        return Err(Error::shape(
            name,
            format!("{}x{}", lhs.rows(), lhs.cols()),
            format!("{}x{}", rhs.rows(), rhs.cols()),
        ));
    }
    let d = square_root_dim(lhs)?;
    Ok(check_identity(
        name,
        lhs.field(),
        &[d, d],
        |t| t.apply(0, 2, lhs, &[d, d]),
        |t| t.apply(0, 2, rhs, &[d, d]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{make_opposite_brace, make_trivial_brace};
    use crate::scalar::Field;
    use crate::zoo;

    const Q: Field = Field::Rational;

    fn tau(d: usize) -> SparseMatrix {
        SparseMatrix::flip(Q, d, d)
    }

    #[test]
    fn flip_and_identity_solve_both_equations() {
        for d in [1, 2, 3] {
            assert!(check_braid(&tau(d)).unwrap());
            assert!(check_braid(&SparseMatrix::identity(Q, d * d)).unwrap());
            assert!(check_qybe(&tau(d)).unwrap());
            assert!(check_qybe(&SparseMatrix::identity(Q, d * d)).unwrap());
        }
        assert!(check_braid(&SparseMatrix::identity(Q, 3)).is_err());
    }

    #[test]
    fn trivial_brace_on_abelian_group_gives_flip() {
        for n in [2, 3, 6] {
            let h = zoo::cyclic_group_algebra(Q, n).unwrap();
            let c = braid_operator(&make_trivial_brace(&h).unwrap()).unwrap();
            assert_eq!(c.matrix(), &tau(n));
            let s = specialized_braid(BraidExample::Trivial, &BraidInput::Hopf(Arc::new(h))).unwrap();
            assert_eq!(s.matrix(), &tau(n));
        }
    }

    #[test]
    fn trivial_brace_on_s3_conjugates() {
        let t = zoo::CayleyTable::symmetric(3).unwrap();
        let h = zoo::group_algebra(Q, &t).unwrap();
        let c = braid_operator(&make_trivial_brace(&h).unwrap()).unwrap();
        for g in 0..6 {
            for k in 0..6 {
                let conj = t.mul(t.mul(t.inverse(k), g), k);
                assert_eq!(c.matrix().column(g * 6 + k), &[(k * 6 + conj, Q.one())]);
            }
        }
        assert!(check_braid(c.matrix()).unwrap());
        assert!(check_qybe(&braid_to_r_matrix(c.matrix()).unwrap()).unwrap());
    }

    #[test]
    fn closed_forms_match_the_general_operator() {
        let h = Arc::new(zoo::symmetric_group_algebra(Q, 3).unwrap());
        let trivial = braid_operator(&make_trivial_brace(&h).unwrap()).unwrap();
        let opposite = braid_operator(&make_opposite_brace(&h).unwrap()).unwrap();
        let input = BraidInput::Hopf(h);
        assert_eq!(specialized_braid(BraidExample::Trivial, &input).unwrap().matrix(), trivial.matrix());
        assert_eq!(specialized_braid(BraidExample::Opposite, &input).unwrap().matrix(), opposite.matrix());
    }

    #[test]
    fn refuses_non_cocommutative() {
        let h4 = zoo::sweedler_h4(Q).unwrap();
        assert!(matches!(
            braid_operator(&make_trivial_brace(&h4).unwrap()),
            Err(Error::NotCocommutative(_))
        ));
        assert!(specialized_braid(BraidExample::Trivial, &BraidInput::Hopf(Arc::new(h4))).is_err());
    }

    #[test]
    fn a_non_solution_is_rejected_with_witness() {
        // c = τ scaled on one basis vector: c(e0⊗e1) = 2 e1⊗e0
        let mut t = tau(2).triples();
        for e in t.iter_mut() {
            if e.1 == 1 {
                e.2 = Q.int(2);
            }
        }
        let c = SparseMatrix::from_triples(Q, 4, 4, t).unwrap();
        let r = braid_report(&c).unwrap();
        // 2-scaled flip still satisfies the braid equation only if the factors balance.
        let r_matrix = braid_to_r_matrix(&c).unwrap();
        assert_eq!(r.all_passed(), check_qybe(&r_matrix).unwrap());
        // identity except e0⊗e0 ↦ e0⊗e1
        let bad = SparseMatrix::from_triples(Q, 4, 4, [(1, 0, Q.one()), (1, 1, Q.one()), (2, 2, Q.one()), (3, 3, Q.one())]).unwrap();
        let r = braid_report(&bad).unwrap();
        assert!(!r.all_passed());
        assert!(r.first_failure().unwrap().witness.is_some());
        assert_eq!(r.all_passed(), check_qybe(&braid_to_r_matrix(&bad).unwrap()).unwrap());
    }
}
