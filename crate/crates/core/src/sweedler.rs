//! A deliberately naive evaluator: dense elements, explicit Sweedler sums over
//! structure constants, nested loops. It shares no code with the tensor pipeline
//! and serves as an independent reference for closed-form operators.

use crate::actions::{LinearAction, Side};
use crate::hopf::HopfAlgebraData;
use crate::scalar::{Field, Scalar};

pub type Elem = Vec<Scalar>;

/// Dense copy of the structure constants of a Hopf algebra.
#[derive(Clone, Debug)]
pub struct Naive {
    field: Field,
    dim: usize,
    /// `mult[i][j]` = `e_i e_j`.
    mult: Vec<Vec<Elem>>,
    /// `delta[i]` = list of `(c, k, l)` with `Δ(e_i) = Σ c e_k ⊗ e_l`.
    delta: Vec<Vec<(Scalar, usize, usize)>>,
    antipode: Vec<Elem>,
    unit: Elem,
}

impl Naive {
    pub fn new(h: &HopfAlgebraData) -> Self {
        let d = h.dim();
        let f = h.field();
        let mut mult = vec![vec![vec![f.zero(); d]; d]; d];
        let mut delta = vec![Vec::new(); d];
        let mut antipode = vec![vec![f.zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                for r in 0..d {
                    mult[i][j][r] = h.mult().get(r, i * d + j);
                }
            }
            for k in 0..d {
                for l in 0..d {
                    let c = h.delta().get(k * d + l, i);
                    if !c.is_zero() {
                        delta[i].push((c, k, l));
                    }
                }
            }
            for r in 0..d {
                antipode[i][r] = h.antipode().get(r, i);
            }
        }
        let unit = (0..d).map(|r| h.unit().get(r, 0)).collect();
        Naive {
            field: f,
            dim: d,
            mult,
            delta,
            antipode,
            unit,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self, i: usize) -> Elem {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Elem {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let c = ui * vj;
                for (o, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    if !m.is_zero() {
                        *o += &(&c * m);
                    }
                }
            }
        }
        out
    }

    pub fn mul_all(&self, factors: &[Elem]) -> Elem {
        factors.iter().fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    pub fn antipode(&self, u: &[Scalar]) -> Elem {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (o, s) in out.iter_mut().zip(&self.antipode[i]) {
                if !s.is_zero() {
                    *o += &(ui * s);
                }
            }
        }
        out
    }

    /// `Δ^{(n−1)}(e_i)` as a list of `(coefficient, [i₁, …, i_n])`.
    pub fn sweedler(&self, i: usize, n: usize) -> Vec<(Scalar, Vec<usize>)> {
        let mut terms = vec![(self.field.one(), vec![i])];
        for _ in 1..n {
            let mut next = Vec::new();
            for (c, idx) in &terms {
                let (last, head) = idx.split_last().expect("nonempty");
                for (dc, k, l) in &self.delta[*last] {
                    let mut v = head.to_vec();
                    v.push(*k);
                    v.push(*l);
                    next.push((c * dc, v));
                }
            }
            terms = next;
        }
        terms
    }
}

/// Dense table of an action: `table[actor][target]` is the image.
#[derive(Clone, Debug)]
pub struct NaiveAction {
    field: Field,
    out_dim: usize,
    table: Vec<Vec<Elem>>,
}

impl NaiveAction {
    pub fn new(act: &LinearAction) -> Self {
        let (p, q) = (act.actor().dim(), act.target().dim());
        let f = act.target().field();
        let mut table = vec![vec![vec![f.zero(); q]; q]; p];
        for (x, row) in table.iter_mut().enumerate() {
            for (a, out) in row.iter_mut().enumerate() {
                let col = match act.side() {
                    Side::Left => x * q + a,
                    Side::Right => a * p + x,
                };
                for (r, v) in out.iter_mut().enumerate() {
                    *v = act.tensor().get(r, col);
                }
            }
        }
        NaiveAction {
            field: f,
            out_dim: q,
            table,
        }
    }

    /// The action of `actor` on `target`, extended bilinearly.
    pub fn apply(&self, actor: &[Scalar], target: &[Scalar]) -> Elem {
        let mut out = vec![self.field.zero(); self.out_dim];
        for (x, cx) in actor.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (a, ca) in target.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = cx * ca;
                for (o, v) in out.iter_mut().zip(&self.table[x][a]) {
                    if !v.is_zero() {
                        *o += &(&c * v);
                    }
                }
            }
        }
        out
    }
}

/// Accumulates `coeff · (v₁ ⊗ … ⊗ v_r)` into a dense vector indexed left-major.
pub fn accumulate_tensor(out: &mut [Scalar], coeff: &Scalar, factors: &[&[Scalar]]) {
    fn rec(out: &mut [Scalar], coeff: &Scalar, factors: &[&[Scalar]], offset: usize) {
        match factors.split_first() {
            None => out[offset] += coeff,
            Some((first, rest)) => {
                let stride: usize = rest.iter().map(|f| f.len()).product();
                for (i, v) in first.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    rec(out, &(coeff * v), rest, offset + i * stride);
                }
            }
        }
    }
    if !coeff.is_zero() {
        rec(out, coeff, factors, 0);
    }
}
