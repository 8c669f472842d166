//! Morphisms, equalizers and products of Hopf braces.

use std::sync::Arc;

use crate::brace::{verify_hopf_brace, HopfBraceData};
use crate::error::{Error, Result};
use crate::hopf::{CoalgebraData, HopfAlgebraData};
use crate::linalg::{kernel, SparseMatrix, Subspace};
use crate::report::{check_identity, AxiomReport};
use crate::scalar::Scalar;
use crate::tensor::{matrix_of, TensorVec};

fn check_shape(f: &SparseMatrix, b1: &HopfBraceData, b2: &HopfBraceData) -> Result<()> {
    if f.field() != b1.field() || b1.field() != b2.field() {
        return Err(Error::FieldMismatch(b1.field(), b2.field()));
    }
    if f.shape() != (b2.dim(), b1.dim()) {
        return Err(Error::shape(
            "brace morphism",
            format!("{}x{}", b2.dim(), b1.dim()),
            format!("{}x{}", f.rows(), f.cols()),
        ));
    }
    Ok(())
}

/// Checks that `f: B1 → B2` is a Hopf algebra map for both structures.
/// Antipode preservation follows from the rest and is reported on its own.
pub fn is_brace_morphism(f: &SparseMatrix, b1: &HopfBraceData, b2: &HopfBraceData) -> Result<AxiomReport> {
    check_shape(f, b1, b2)?;
    let d1 = b1.dim();
    let field = b1.field();
    let ff = |t: &TensorVec, n: usize| (0..n).fold(t.clone(), |t, s| t.apply1(s, f));
    let mut r = AxiomReport::new("brace morphism");
    for (name, h1, h2) in [("·", b1.dot(), b2.dot()), ("∘", b1.circ(), b2.circ())] {
        r.push(check_identity(
            &format!("preserves {name}"),
            field,
            &[d1, d1],
            |t| h1.mult_at(t, 0).apply1(0, f),
            |t| h2.mult_at(&ff(t, 2), 0),
        ));
    }
    let (h1, h2) = (b1.dot(), b2.dot());
    r.push(check_identity(
        "preserves comultiplication",
        field,
        &[d1],
        |t| h2.delta_at(&t.apply1(0, f), 0),
        |t| ff(&h1.delta_at(t, 0), 2),
    ));
    r.push(check_identity(
        "preserves counit",
        field,
        &[d1],
        |t| h2.counit_at(&t.apply1(0, f), 0),
        |t| h1.counit_at(t, 0),
    ));
    for (name, h1, h2) in [("unit", b1.dot(), b2.dot()), ("∘-unit", b1.circ(), b2.circ())] {
        r.push(check_identity(
            &format!("preserves {name}"),
            field,
            &[],
            |t| h1.unit_at(t, 0).apply1(0, f),
            |t| h2.unit_at(t, 0),
        ));
    }
    for (name, h1, h2) in [("S", b1.dot(), b2.dot()), ("T", b1.circ(), b2.circ())] {
        r.push(check_identity(
            &format!("preserves {name} (consequence)"),
            field,
            &[d1],
            |t| h1.antipode_at(t, 0).apply1(0, f),
            |t| h2.antipode_at(&t.apply1(0, f), 0),
        ));
    }
    Ok(r)
}

/// A verified morphism of Hopf braces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceMorphism {
    source: HopfBraceData,
    target: HopfBraceData,
    matrix: SparseMatrix,
}

impl BraceMorphism {
    /// Verifies `matrix` and refuses it, with the report, when any check fails.
    pub fn new(source: HopfBraceData, target: HopfBraceData, matrix: SparseMatrix) -> Result<Self> {
        let r = is_brace_morphism(&matrix, &source, &target)?;
        if !r.all_passed() {
            return Err(Error::Hypothesis {
                name: r.failed_names().join(", "),
                report: Box::new(r),
            });
        }
        Ok(BraceMorphism { source, target, matrix })
    }

    pub fn identity(b: &HopfBraceData) -> Self {
        BraceMorphism {
            source: b.clone(),
            target: b.clone(),
            matrix: SparseMatrix::identity(b.field(), b.dim()),
        }
    }

    pub fn source(&self) -> &HopfBraceData {
        &self.source
    }

    pub fn target(&self) -> &HopfBraceData {
        &self.target
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }
}

/// A morphism as loaded from a file, before verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismData {
    pub source: HopfBraceData,
    pub target: HopfBraceData,
    pub matrix: SparseMatrix,
}

impl MorphismData {
    pub fn report(&self) -> Result<AxiomReport> {
        is_brace_morphism(&self.matrix, &self.source, &self.target)
    }

    pub fn verified(self) -> Result<BraceMorphism> {
        BraceMorphism::new(self.source, self.target, self.matrix)
    }
}

/// Why the equalizer is the largest subcoalgebra inside `{f = g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualizerCertificate {
    /// Dimensions `dim S = dim D₀ > dim D₁ > … = dim D`, strictly decreasing until stable.
    pub chain: Vec<usize>,
    /// Basis vectors of `S` outside `D`; each has `Δ(v) ∉ D⊗D`.
    pub rejected: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct EqualizerResult {
    pub brace: HopfBraceData,
    /// `dim(A) × dim(C)`, columns are the basis of `C` in `A`.
    pub inclusion: SparseMatrix,
    pub subspace: Subspace,
    pub certificate: EqualizerCertificate,
}

/// Rows of the functionals `v ↦ (p⊗e_l)Δv` and `v ↦ (e_l⊗p)Δv` for every
/// annihilator row `p` of `d`, together with `p` itself. The kernel is
/// `{v ∈ D : Δ(v) ∈ D⊗D}`.
fn step_matrix(c: &CoalgebraData, d: &Subspace) -> Result<SparseMatrix> {
    let n = c.dim();
    let field = c.field();
    let ann = d.annihilator();
    let mut rows: Vec<Vec<Scalar>> = ann.basis().to_vec();
    for p in ann.basis() {
        let mut left = vec![vec![field.zero(); n]; n];
        let mut right = vec![vec![field.zero(); n]; n];
        for j in 0..n {
            for (kl, x) in c.delta().column(j) {
                let (k, l) = (kl / n, kl % n);
                if !p[k].is_zero() {
                    left[l][j] += &(&p[k] * x);
                }
                if !p[l].is_zero() {
                    right[k][j] += &(&p[l] * x);
                }
            }
        }
        rows.extend(left.into_iter().chain(right).filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    SparseMatrix::from_dense_rows(field, &rows, n)
}

fn combination_label(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| if x.is_one() { labels[i].clone() } else { format!("{x}*{}", labels[i]) })
        .collect();
    terms.join(" + ")
}

fn restrict_hopf(h: &HopfAlgebraData, coalgebra: &CoalgebraData, d: &Subspace) -> Result<HopfAlgebraData> {
    let (i, c) = (d.inclusion(), d.coordinates());
    let closed = |what: &str, m: &SparseMatrix| -> Result<()> {
        let back = i.mul(&c.mul(m)?)?;
        if &back != m {
            return Err(Error::Closure(format!("subspace not closed under {what}")));
        }
        Ok(())
    };
    let mult = h.mult().mul(&i.kron(&i)?)?;
    closed("multiplication", &mult)?;
    closed("unit", h.unit())?;
    let antipode = h.antipode().mul(&i)?;
    closed("antipode", &antipode)?;
    HopfAlgebraData::new(coalgebra.clone(), c.mul(&mult)?, c.mul(h.unit())?, c.mul(&antipode)?)
}

/// The equalizer of two parallel brace morphisms: the largest subcoalgebra of
/// `{a : f(a) = g(a)}`, with the inherited structure.
pub fn equalizer(f: &BraceMorphism, g: &BraceMorphism) -> Result<EqualizerResult> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::shape("equalizer", "parallel morphisms", "different source or target"));
    }
    let a = &f.source;
    let coalg = a.dot().coalgebra();
    let s = kernel(&f.matrix.sub(&g.matrix)?);
    let mut chain = vec![s.dim()];
    let mut d = s.clone();
    loop {
        let next = kernel(&step_matrix(coalg, &d)?);
        if next.dim() == d.dim() {
            break;
        }
        d = next;
        chain.push(d.dim());
    }
    let test = step_matrix(coalg, &d)?;
    let mut rejected = Vec::new();
    for v in s.basis() {
        if d.contains(v)? {
            continue;
        }
        // The annihilator rows of D alone would already reject v, so only the Δ rows count.
        let ann = d.annihilator().dim();
        let image = test.apply(&crate::linalg::dense_to_sparse(v));
        if image.iter().all(|(r, _)| *r < ann) {
            return Err(Error::Closure("maximality certificate failed".into()));
        }
        rejected.push(v.clone());
    }

    let (i, c) = (d.inclusion(), d.coordinates());
    let delta = c.kron(&c)?.mul(&coalg.delta().mul(&i)?)?;
    if i.kron(&i)?.mul(&delta)? != coalg.delta().mul(&i)? {
        return Err(Error::Closure("fixpoint is not a subcoalgebra".into()));
    }
    let labels = d.basis().iter().map(|v| combination_label(a.labels(), v)).collect();
    let sub_coalg = CoalgebraData::new(labels, delta, coalg.counit().mul(&i)?)?;
    let dot = restrict_hopf(a.dot(), &sub_coalg, &d)?;
    let circ = restrict_hopf(a.circ(), &sub_coalg, &d)?;
    let brace = HopfBraceData::new(Arc::new(dot), Arc::new(circ))?;
    let r = verify_hopf_brace(&brace);
    if !r.all_passed() {
        return Err(Error::Closure(format!("equalizer is not a Hopf brace: {r}")));
    }
    let m = is_brace_morphism(&i, &brace, a)?;
    if !m.all_passed() {
        return Err(Error::Closure(format!("inclusion is not a brace morphism: {m}")));
    }
    if f.matrix.mul(&i)? != g.matrix.mul(&i)? {
        return Err(Error::Closure("f and g differ on the equalizer".into()));
    }
    Ok(EqualizerResult {
        brace,
        inclusion: i,
        subspace: d,
        certificate: EqualizerCertificate { chain, rejected },
    })
}

/// The product of cocommutative braces: the tensor product with componentwise
/// structure, and the projections `π_i = ε⊗…⊗I⊗…⊗ε`.
pub fn product_cocommutative(braces: &[HopfBraceData]) -> Result<(HopfBraceData, Vec<BraceMorphism>)> {
    let (first, rest) = braces
        .split_first()
        .ok_or_else(|| Error::MissingIngredient("at least one brace".into()))?;
    for (k, b) in braces.iter().enumerate() {
        if !b.is_cocommutative() {
            return Err(Error::NotCocommutative(format!(
                "factor {k} (products of non-cocommutative braces need the cofree coalgebra, not supported)"
            )));
        }
        let r = verify_hopf_brace(b);
        if !r.all_passed() {
            return Err(Error::Hypothesis {
                name: format!("factor {k} is a Hopf brace"),
                report: Box::new(r),
            });
        }
    }
    let mut dot = (**first.dot()).clone();
    let mut circ = (**first.circ()).clone();
    for b in rest {
        dot = dot.tensor(b.dot())?;
        circ = circ.tensor(b.circ())?;
    }
    let product = HopfBraceData::new(Arc::new(dot), Arc::new(circ))?;
    let dims: Vec<usize> = braces.iter().map(HopfBraceData::dim).collect();
    let mut projections = Vec::new();
    for (k, b) in braces.iter().enumerate() {
        let m = matrix_of(b.field(), &dims, dims[k], |t| {
            (0..dims.len())
                .rev()
                .filter(|&j| j != k)
                .fold(t, |t, j| braces[j].dot().counit_at(&t, j))
        });
        projections.push(BraceMorphism::new(product.clone(), b.clone(), m).map_err(|e| match e {
            Error::Hypothesis { report, .. } => Error::Closure(format!("projection {k}: {report}")),
            other => other,
        })?);
    }
    Ok((product, projections))
}
