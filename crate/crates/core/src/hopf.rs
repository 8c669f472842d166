//! Coalgebras, bialgebras and Hopf algebras given by structure constants.
//!
//! With `d = dim`, the structure tensors are matrices:
//! `Δ: d²×d` (column `i` holds `Δ(e_i)`), `ε: 1×d`, `m: d×d²`, `η: d×1`, `S: d×d`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::report::{check_identity, AxiomReport};
use crate::scalar::Field;
use crate::tensor::{matrix_of, TensorVec};

#[derive(Clone, PartialEq, Eq)]
pub struct CoalgebraData {
    field: Field,
    labels: Vec<String>,
    delta: SparseMatrix,
    counit: SparseMatrix,
}

fn expect_shape(what: &str, m: &SparseMatrix, rows: usize, cols: usize, field: Field) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch(field, m.field()));
    }
    if m.shape() != (rows, cols) {
        return Err(Error::shape(
            what,
            format!("{rows}x{cols}"),
            format!("{}x{}", m.rows(), m.cols()),
        ));
    }
    Ok(())
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

impl CoalgebraData {
    pub fn new(labels: Vec<String>, delta: SparseMatrix, counit: SparseMatrix) -> Result<Self> {
        let d = labels.len();
        let field = delta.field();
        expect_shape("comultiplication", &delta, d * d, d, field)?;
        expect_shape("counit", &counit, 1, d, field)?;
        Ok(CoalgebraData {
            field,
            labels,
            delta,
            counit,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn delta(&self) -> &SparseMatrix {
        &self.delta
    }

    pub fn counit(&self) -> &SparseMatrix {
        &self.counit
    }

    /// Applies `Δ` to tensor slot `slot`, splitting it in two.
    pub fn delta_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        let d = self.dim();
        t.apply(slot, 1, &self.delta, &[d, d])
    }

    /// Applies `ε` to tensor slot `slot`, removing it.
    pub fn counit_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        t.apply(slot, 1, &self.counit, &[])
    }

    pub fn verify(&self) -> AxiomReport {
        let mut r = AxiomReport::new("coalgebra");
        self.push_checks(&mut r);
        r
    }

    fn push_checks(&self, r: &mut AxiomReport) {
        let d = self.dim();
        let f = self.field;
        r.push(check_identity(
            "coassociativity",
            f,
            &[d],
            |t| self.delta_at(&self.delta_at(t, 0), 0),
            |t| self.delta_at(&self.delta_at(t, 0), 1),
        ));
        r.push(check_identity(
            "left counit",
            f,
            &[d],
            |t| self.counit_at(&self.delta_at(t, 0), 0),
            |t| t.clone(),
        ));
        r.push(check_identity(
            "right counit",
            f,
            &[d],
            |t| self.counit_at(&self.delta_at(t, 0), 1),
            |t| t.clone(),
        ));
    }

    /// `τ∘Δ = Δ`.
    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        SparseMatrix::flip(self.field, d, d)
            .mul(&self.delta)
            .is_ok_and(|m| m == self.delta)
    }

    /// The iterated coproduct `Δ^{(n)}: C → C^{⊗(n+1)}`, nested on the left:
    /// `Δ^{(k)} = (Δ ⊗ I^{⊗(k−1)}) Δ^{(k−1)}`.
    pub fn delta_iter(&self, n: usize) -> SparseMatrix {
        let d = self.dim();
        matrix_of(self.field, &[d], d.pow(n as u32 + 1), |t| {
            (0..n).fold(t, |acc, _| self.delta_at(&acc, 0))
        })
    }

    /// Same as [`delta_iter`](Self::delta_iter) but nested on the right.
    pub fn delta_iter_right(&self, n: usize) -> SparseMatrix {
        let d = self.dim();
        matrix_of(self.field, &[d], d.pow(n as u32 + 1), |t| {
            (0..n).fold(t, |acc, k| self.delta_at(&acc, k))
        })
    }

    /// Tensor product coalgebra: `Δ(c ⊗ d) = c₁ ⊗ d₁ ⊗ c₂ ⊗ d₂`.
    pub fn tensor(&self, other: &CoalgebraData) -> Result<CoalgebraData> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (p, q) = (self.dim(), other.dim());
        let n = p * q;
        let delta = matrix_of(self.field, &[p, q], n * n, |t| {
            let t = self.delta_at(&t, 0);
            let t = other.delta_at(&t, 2);
            t.permute(&[0, 2, 1, 3])
        });
        let counit = self.counit.kron(&other.counit)?;
        Ok(CoalgebraData {
            field: self.field,
            labels: tensor_labels(&self.labels, &other.labels),
            delta,
            counit,
        })
    }

    /// The co-opposite coalgebra (`τ∘Δ`).
    pub fn cop(&self) -> CoalgebraData {
        let d = self.dim();
        CoalgebraData {
            field: self.field,
            labels: self.labels.clone(),
            delta: SparseMatrix::flip(self.field, d, d)
                .mul(&self.delta)
                .expect("square shapes"),
            counit: self.counit.clone(),
        }
    }

    /// Equal comultiplication and counit; labels are ignored.
    pub fn same_structure(&self, other: &CoalgebraData) -> bool {
        self.delta == other.delta && self.counit == other.counit
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::shape("basis labels", self.dim(), labels.len()));
        }
        self.labels = labels;
        Ok(self)
    }
}

impl fmt::Debug for CoalgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coalgebra(dim {} over {}, basis {:?})", self.dim(), self.field, self.labels)
    }
}

pub(crate) fn tensor_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

/// A Hopf algebra `(H, m, η, Δ, ε, S)`. The axiom report is computed on first use.
pub struct HopfAlgebraData {
    coalgebra: CoalgebraData,
    mult: SparseMatrix,
    unit: SparseMatrix,
    antipode: SparseMatrix,
    report: OnceLock<AxiomReport>,
}

impl Clone for HopfAlgebraData {
    fn clone(&self) -> Self {
        HopfAlgebraData {
            coalgebra: self.coalgebra.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            antipode: self.antipode.clone(),
            report: self.report.clone(),
        }
    }
}

impl PartialEq for HopfAlgebraData {
    fn eq(&self, other: &Self) -> bool {
        self.coalgebra == other.coalgebra
            && self.mult == other.mult
            && self.unit == other.unit
            && self.antipode == other.antipode
    }
}

impl Eq for HopfAlgebraData {}

impl fmt::Debug for HopfAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HopfAlgebra(dim {} over {}, basis {:?})",
            self.dim(),
            self.field(),
            self.labels()
        )
    }
}

impl HopfAlgebraData {
    /// Assembles Hopf data after checking shapes and fields. Axioms are not assumed.
    pub fn new(
        coalgebra: CoalgebraData,
        mult: SparseMatrix,
        unit: SparseMatrix,
        antipode: SparseMatrix,
    ) -> Result<Self> {
        let d = coalgebra.dim();
        let f = coalgebra.field();
        expect_shape("multiplication", &mult, d, d * d, f)?;
        expect_shape("unit", &unit, d, 1, f)?;
        expect_shape("antipode", &antipode, d, d, f)?;
        Ok(HopfAlgebraData {
            coalgebra,
            mult,
            unit,
            antipode,
            report: OnceLock::new(),
        })
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.coalgebra.labels()
    }

    pub fn mult(&self) -> &SparseMatrix {
        &self.mult
    }

    pub fn unit(&self) -> &SparseMatrix {
        &self.unit
    }

    pub fn antipode(&self) -> &SparseMatrix {
        &self.antipode
    }

    pub fn delta(&self) -> &SparseMatrix {
        self.coalgebra.delta()
    }

    pub fn counit(&self) -> &SparseMatrix {
        self.coalgebra.counit()
    }

    pub fn delta_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        self.coalgebra.delta_at(t, slot)
    }

    pub fn counit_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        self.coalgebra.counit_at(t, slot)
    }

    /// Multiplies slots `slot` and `slot+1`.
    pub fn mult_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        t.apply2(slot, &self.mult)
    }

    /// Inserts the unit as a new slot at position `slot`.
    pub fn unit_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        t.apply(slot, 0, &self.unit, &[self.dim()])
    }

    pub fn antipode_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        t.apply1(slot, &self.antipode)
    }

    /// The cached axiom report (computed on first call).
    pub fn report(&self) -> &AxiomReport {
        self.report.get_or_init(|| self.compute_report())
    }

    fn compute_report(&self) -> AxiomReport {
        let d = self.dim();
        let f = self.field();
        let mut r = AxiomReport::new("hopf algebra");
        self.coalgebra.push_checks(&mut r);
        r.push(check_identity(
            "associativity",
            f,
            &[d, d, d],
            |t| self.mult_at(&self.mult_at(t, 0), 0),
            |t| self.mult_at(&self.mult_at(t, 1), 0),
        ));
        r.push(check_identity(
            "left unit",
            f,
            &[d],
            |t| self.mult_at(&self.unit_at(t, 0), 0),
            |t| t.clone(),
        ));
        r.push(check_identity(
            "right unit",
            f,
            &[d],
            |t| self.mult_at(&self.unit_at(t, 1), 0),
            |t| t.clone(),
        ));
        r.push(check_identity(
            "comultiplication multiplicative",
            f,
            &[d, d],
            |t| self.delta_at(&self.mult_at(t, 0), 0),
            |t| {
                let t = self.delta_at(&self.delta_at(t, 1), 0);
                let t = t.permute(&[0, 2, 1, 3]);
                self.mult_at(&self.mult_at(&t, 2), 0)
            },
        ));
        r.push(check_identity(
            "counit multiplicative",
            f,
            &[d, d],
            |t| self.counit_at(&self.mult_at(t, 0), 0),
            |t| self.counit_at(&self.counit_at(t, 1), 0),
        ));
        r.push(check_identity(
            "comultiplication of unit",
            f,
            &[],
            |t| self.delta_at(&self.unit_at(t, 0), 0),
            |t| self.unit_at(&self.unit_at(t, 0), 0),
        ));
        r.push(check_identity(
            "counit of unit",
            f,
            &[],
            |t| self.counit_at(&self.unit_at(t, 0), 0),
            |t| t.clone(),
        ));
        r.push(check_identity(
            "left antipode",
            f,
            &[d],
            |t| self.mult_at(&self.antipode_at(&self.delta_at(t, 0), 0), 0),
            |t| self.unit_at(&self.counit_at(t, 0), 0),
        ));
        r.push(check_identity(
            "right antipode",
            f,
            &[d],
            |t| self.mult_at(&self.antipode_at(&self.delta_at(t, 0), 1), 0),
            |t| self.unit_at(&self.counit_at(t, 0), 0),
        ));
        r
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// `m∘τ = m`.
    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        self.mult
            .mul(&SparseMatrix::flip(self.field(), d, d))
            .is_ok_and(|m| m == self.mult)
    }

    /// `S∘S = I`; on failure returns the first basis index where it breaks.
    pub fn antipode_involutive(&self) -> std::result::Result<(), usize> {
        let s2 = self.antipode.mul(&self.antipode).expect("square");
        let id = SparseMatrix::identity(self.field(), self.dim());
        match (0..self.dim()).find(|&i| s2.column(i) != id.column(i)) {
            Some(i) => Err(i),
            None => Ok(()),
        }
    }

    /// `H^op` with the same coalgebra: multiplication `m∘τ`, antipode `S⁻¹`.
    pub fn opposite(&self) -> Result<HopfAlgebraData> {
        let d = self.dim();
        let inv = self
            .antipode
            .inverse()
            .ok_or_else(|| Error::NotInvertible("antipode".into()))?;
        HopfAlgebraData::new(
            self.coalgebra.clone(),
            self.mult.mul(&SparseMatrix::flip(self.field(), d, d))?,
            self.unit.clone(),
            inv,
        )
    }

    /// `H^{op,cop}`: multiplication `m∘τ`, comultiplication `τ∘Δ`, antipode `S`.
    pub fn op_cop(&self) -> Result<HopfAlgebraData> {
        let d = self.dim();
        HopfAlgebraData::new(
            self.coalgebra.cop(),
            self.mult.mul(&SparseMatrix::flip(self.field(), d, d))?,
            self.unit.clone(),
            self.antipode.clone(),
        )
    }

    /// Tensor product Hopf algebra: componentwise multiplication, unit `1⊗1`,
    /// antipode `S_A ⊗ S_H`, tensor coalgebra.
    pub fn tensor(&self, other: &HopfAlgebraData) -> Result<HopfAlgebraData> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        let coalgebra = self.coalgebra.tensor(&other.coalgebra)?;
        let (p, q) = (self.dim(), other.dim());
        let mult = matrix_of(self.field(), &[p, q, p, q], p * q, |t| {
            let t = t.permute(&[0, 2, 1, 3]);
            other.mult_at(&self.mult_at(&t, 0), 1)
        });
        HopfAlgebraData::new(
            coalgebra,
            mult,
            self.unit.kron(&other.unit)?,
            self.antipode.kron(&other.antipode)?,
        )
    }

    pub fn with_antipode(&self, antipode: SparseMatrix) -> Result<HopfAlgebraData> {
        HopfAlgebraData::new(
            self.coalgebra.clone(),
            self.mult.clone(),
            self.unit.clone(),
            antipode,
        )
    }

    pub fn with_mult(&self, mult: SparseMatrix) -> Result<HopfAlgebraData> {
        HopfAlgebraData::new(
            self.coalgebra.clone(),
            mult,
            self.unit.clone(),
            self.antipode.clone(),
        )
    }

    pub fn with_coalgebra(&self, coalgebra: CoalgebraData) -> Result<HopfAlgebraData> {
        HopfAlgebraData::new(
            coalgebra,
            self.mult.clone(),
            self.unit.clone(),
            self.antipode.clone(),
        )
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<HopfAlgebraData> {
        self.with_coalgebra(self.coalgebra.clone().with_labels(labels)?)
    }
}

pub fn verify_coalgebra(c: &CoalgebraData) -> AxiomReport {
    c.verify()
}

pub fn verify_hopf(h: &HopfAlgebraData) -> AxiomReport {
    h.report().clone()
}

pub fn is_cocommutative(c: &CoalgebraData) -> bool {
    c.is_cocommutative()
}

pub fn tensor_hopf(a: &HopfAlgebraData, h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    a.tensor(h)
}

pub fn op_cop(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    h.op_cop()
}

pub fn delta_iter(c: &CoalgebraData, n: usize) -> SparseMatrix {
    c.delta_iter(n)
}

/// Solves `m(T ⊗ I)Δ = ηε` for `T` (the antipode of a bialgebra, when it exists).
///
/// The unknowns are the entries of `T`; the system is linear because `T` enters
/// each equation once. Input columns `j` are grouped with the columns `k` occurring
/// as left Sweedler factors of `Δ(e_j)`, and each group is solved on its own.
/// The solution is unique when it exists, since a one-sided convolution inverse in
/// a finite-dimensional bialgebra is two-sided.
pub fn solve_antipode(
    coalgebra: &CoalgebraData,
    mult: &SparseMatrix,
    unit: &SparseMatrix,
) -> Result<SparseMatrix> {
    let d = coalgebra.dim();
    let f = coalgebra.field();
    let mut parent: Vec<usize> = (0..d).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for j in 0..d {
        for (kl, _) in coalgebra.delta().column(j) {
            let (a, b) = (root(&mut parent, j), root(&mut parent, kl / d));
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for j in 0..d {
        let r = root(&mut parent, j);
        groups.entry(r).or_default().push(j);
    }
    let mut solution = Vec::new();
    for cols in groups.values() {
        let local = |k: usize| cols.binary_search(&k).expect("closed group");
        let n = cols.len();
        // Unknown T[s, k] sits at s·n + local(k); equation (r, j) at r·n + local(j).
        let mut triples = Vec::new();
        let mut rhs = vec![f.zero(); d * n];
        for &j in cols {
            for (kl, c) in coalgebra.delta().column(j) {
                let (k, l) = (kl / d, kl % d);
                for s in 0..d {
                    for (r, mv) in mult.column(s * d + l) {
                        triples.push((r * n + local(j), s * n + local(k), c * mv));
                    }
                }
            }
            let eps = coalgebra.counit().get(0, j);
            for (r, u) in unit.column(0) {
                rhs[r * n + local(j)] = u * &eps;
            }
        }
        let system = SparseMatrix::from_triples(f, d * n, d * n, triples)?;
        let x = system
            .solve(&rhs)
            .ok_or_else(|| Error::NoAntipode("bialgebra".into()))?;
        for s in 0..d {
            for &k in cols {
                solution.push((s, k, x[s * n + local(k)].clone()));
            }
        }
    }
    SparseMatrix::from_triples(f, d, d, solution)
}
