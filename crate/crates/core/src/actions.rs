//! Linear actions between Hopf algebras, matched pairs, and the side conditions
//! required by the brace constructions.
//!
//! A left action `▷: H ⊗ A → A` is stored as a `dim A × (dim H · dim A)` matrix
//! with domain slots `[actor, target]`; a right action `◁: H ⊗ A → H` (target `H`,
//! actor `A`) as `dim H × (dim H · dim A)` with domain slots `[target, actor]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::brace::HopfBraceData;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::SparseMatrix;
use crate::report::{check_identity, AxiomReport};
use crate::tensor::{matrix_of, TensorVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Unknown {
                kind: "action side",
                id: s.into(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActionKind {
    ModuleCoalgebra,
    ModuleAlgebra,
    ModuleBialgebra,
}

impl ActionKind {
    pub const ALL: [ActionKind; 3] = [
        ActionKind::ModuleCoalgebra,
        ActionKind::ModuleAlgebra,
        ActionKind::ModuleBialgebra,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            ActionKind::ModuleCoalgebra => "module-coalgebra",
            ActionKind::ModuleAlgebra => "module-algebra",
            ActionKind::ModuleBialgebra => "module-bialgebra",
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ActionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<ActionKind> {
        ActionKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "action kind",
                id: s.into(),
            })
    }
}

/// A bilinear action of `actor` on `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearAction {
    side: Side,
    actor: Arc<HopfAlgebraData>,
    target: Arc<HopfAlgebraData>,
    tensor: SparseMatrix,
    claimed: BTreeSet<ActionKind>,
}

impl LinearAction {
    pub fn new(
        side: Side,
        actor: Arc<HopfAlgebraData>,
        target: Arc<HopfAlgebraData>,
        tensor: SparseMatrix,
        claimed: impl IntoIterator<Item = ActionKind>,
    ) -> Result<Self> {
        for f in [actor.field(), tensor.field()] {
            if f != target.field() {
                return Err(Error::FieldMismatch(target.field(), f));
            }
        }
        let expected = (target.dim(), actor.dim() * target.dim());
        if tensor.shape() != expected {
            return Err(Error::shape(
                format!("{side} action tensor"),
                format!("{}x{}", expected.0, expected.1),
                format!("{}x{}", tensor.rows(), tensor.cols()),
            ));
        }
        Ok(LinearAction {
            side,
            actor,
            target,
            tensor,
            claimed: claimed.into_iter().collect(),
        })
    }

    /// Builds the action tensor from its values on basis pairs. `f(actor_index, target_index)`
    /// returns the image as a sparse vector of the target.
    pub fn from_fn(
        side: Side,
        actor: Arc<HopfAlgebraData>,
        target: Arc<HopfAlgebraData>,
        claimed: impl IntoIterator<Item = ActionKind>,
        f: impl Fn(usize, usize) -> Vec<(usize, crate::Scalar)>,
    ) -> Result<Self> {
        let (p, q) = (actor.dim(), target.dim());
        let columns = match side {
            Side::Left => (0..p)
                .flat_map(|x| (0..q).map(move |a| (x, a)))
                .map(|(x, a)| f(x, a))
                .collect(),
            Side::Right => (0..q)
                .flat_map(|t| (0..p).map(move |a| (t, a)))
                .map(|(t, a)| f(a, t))
                .collect(),
        };
        let tensor = SparseMatrix::from_columns(target.field(), q, columns)?;
        LinearAction::new(side, actor, target, tensor, claimed)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn actor(&self) -> &Arc<HopfAlgebraData> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<HopfAlgebraData> {
        &self.target
    }

    pub fn tensor(&self) -> &SparseMatrix {
        &self.tensor
    }

    pub fn claimed(&self) -> &BTreeSet<ActionKind> {
        &self.claimed
    }

    /// Applies the action to slots `slot, slot+1` (ordered `[actor, target]` for left
    /// actions, `[target, actor]` for right ones).
    pub fn act_at(&self, t: &TensorVec, slot: usize) -> TensorVec {
        t.apply2(slot, &self.tensor)
    }

    /// The image of a pair of basis vectors.
    pub fn act_basis(&self, actor_index: usize, target_index: usize) -> Vec<(usize, crate::Scalar)> {
        let col = match self.side {
            Side::Left => actor_index * self.target.dim() + target_index,
            Side::Right => target_index * self.actor.dim() + actor_index,
        };
        self.tensor.column(col).to_vec()
    }

    /// The same tensor viewed as an action of a different Hopf structure on the same coalgebra
    /// (e.g. `H∘` instead of `H`).
    pub fn with_actor(&self, actor: Arc<HopfAlgebraData>) -> Result<Self> {
        if !actor.coalgebra().same_structure(self.actor.coalgebra()) {
            return Err(Error::shape(
                "replacement actor",
                "the same coalgebra",
                "a different coalgebra",
            ));
        }
        LinearAction::new(
            self.side,
            actor,
            self.target.clone(),
            self.tensor.clone(),
            self.claimed.iter().copied(),
        )
    }

    pub fn with_target(&self, target: Arc<HopfAlgebraData>) -> Result<Self> {
        if !target.coalgebra().same_structure(self.target.coalgebra()) {
            return Err(Error::shape(
                "replacement target",
                "the same coalgebra",
                "a different coalgebra",
            ));
        }
        LinearAction::new(
            self.side,
            self.actor.clone(),
            target,
            self.tensor.clone(),
            self.claimed.iter().copied(),
        )
    }

    /// Verifies every kind the action claims.
    pub fn verify_claims(&self) -> AxiomReport {
        let mut r = AxiomReport::new(format!("{} action (claimed kinds)", self.side));
        for k in &self.claimed {
            r.absorb(&format!("{k}: "), &verify_action(self, *k));
        }
        r
    }

    fn dims(&self) -> (usize, usize) {
        (self.actor.dim(), self.target.dim())
    }
}

/// The action `x ▷ a = ε(x) a` (left) or `a ◁ x = a ε(x)` (right).
pub fn trivial_action(
    actor: Arc<HopfAlgebraData>,
    target: Arc<HopfAlgebraData>,
    side: Side,
) -> Result<LinearAction> {
    let eps = actor.counit().clone();
    LinearAction::from_fn(side, actor, target, ActionKind::ALL, |x, a| {
        let e = eps.get(0, x);
        if e.is_zero() {
            Vec::new()
        } else {
            vec![(a, e)]
        }
    })
}

fn module_laws(act: &LinearAction, r: &mut AxiomReport) {
    let (p, q) = act.dims();
    let f = act.target.field();
    let h = &act.actor;
    match act.side {
        Side::Left => {
            r.push(check_identity(
                "unital module",
                f,
                &[q],
                |t| act.act_at(&h.unit_at(t, 0), 0),
                |t| t.clone(),
            ));
            r.push(check_identity(
                "associative module",
                f,
                &[p, p, q],
                |t| act.act_at(&h.mult_at(t, 0), 0),
                |t| act.act_at(&act.act_at(t, 1), 0),
            ));
        }
        Side::Right => {
            r.push(check_identity(
                "unital module",
                f,
                &[q],
                |t| act.act_at(&h.unit_at(t, 1), 0),
                |t| t.clone(),
            ));
            r.push(check_identity(
                "associative module",
                f,
                &[q, p, p],
                |t| act.act_at(&h.mult_at(t, 1), 0),
                |t| act.act_at(&act.act_at(t, 0), 0),
            ));
        }
    }
}

fn coalgebra_laws(act: &LinearAction, r: &mut AxiomReport) {
    let (p, q) = act.dims();
    let f = act.target.field();
    let (h, a) = (&act.actor, &act.target);
    let domain = match act.side {
        Side::Left => [p, q],
        Side::Right => [q, p],
    };
    r.push(check_identity(
        "action comultiplicative",
        f,
        &domain,
        |t| a.delta_at(&act.act_at(t, 0), 0),
        |t| {
            let t = match act.side {
                Side::Left => h.delta_at(&a.delta_at(t, 1), 0),
                Side::Right => h.delta_at(&a.delta_at(t, 0), 2),
            };
            let t = t.permute(&[0, 2, 1, 3]);
            act.act_at(&act.act_at(&t, 0), 1)
        },
    ));
    r.push(check_identity(
        "action counital",
        f,
        &domain,
        |t| a.counit_at(&act.act_at(t, 0), 0),
        |t| match act.side {
            Side::Left => a.counit_at(&h.counit_at(t, 0), 0),
            Side::Right => h.counit_at(&a.counit_at(t, 0), 0),
        },
    ));
}

fn algebra_laws(act: &LinearAction, r: &mut AxiomReport) {
    let (p, q) = act.dims();
    let f = act.target.field();
    let (h, a) = (&act.actor, &act.target);
    match act.side {
        Side::Left => {
            r.push(check_identity(
                "action multiplicative",
                f,
                &[p, q, q],
                |t| act.act_at(&a.mult_at(t, 1), 0),
                |t| {
                    let t = h.delta_at(t, 0).permute(&[0, 2, 1, 3]);
                    a.mult_at(&act.act_at(&act.act_at(&t, 0), 1), 0)
                },
            ));
            r.push(check_identity(
                "action preserves unit",
                f,
                &[p],
                |t| act.act_at(&a.unit_at(t, 1), 0),
                |t| a.unit_at(&h.counit_at(t, 0), 0),
            ));
        }
        Side::Right => {
            r.push(check_identity(
                "action multiplicative",
                f,
                &[q, q, p],
                |t| act.act_at(&a.mult_at(t, 0), 0),
                |t| {
                    let t = h.delta_at(t, 2).permute(&[0, 2, 1, 3]);
                    a.mult_at(&act.act_at(&act.act_at(&t, 0), 1), 0)
                },
            ));
            r.push(check_identity(
                "action preserves unit",
                f,
                &[p],
                |t| act.act_at(&a.unit_at(t, 0), 0),
                |t| a.unit_at(&h.counit_at(t, 0), 0),
            ));
        }
    }
}

/// Module laws plus the compatibilities of `kind`.
pub fn verify_action(act: &LinearAction, kind: ActionKind) -> AxiomReport {
    let mut r = AxiomReport::new(format!("{} {kind}", act.side));
    module_laws(act, &mut r);
    if matches!(kind, ActionKind::ModuleCoalgebra | ActionKind::ModuleBialgebra) {
        coalgebra_laws(act, &mut r);
    }
    if matches!(kind, ActionKind::ModuleAlgebra | ActionKind::ModuleBialgebra) {
        algebra_laws(act, &mut r);
    }
    r
}

/// `(A, H, ◁, ▷)`: `▷: H ⊗ A → A` and `◁: H ⊗ A → H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    a: Arc<HopfAlgebraData>,
    h: Arc<HopfAlgebraData>,
    right: LinearAction,
    left: LinearAction,
}

impl MatchedPair {
    pub fn new(right: LinearAction, left: LinearAction) -> Result<Self> {
        if right.side != Side::Right || left.side != Side::Left {
            return Err(Error::shape("matched pair", "(right ◁, left ▷)", "wrong action sides"));
        }
        if left.actor != right.target || left.target != right.actor {
            return Err(Error::shape(
                "matched pair",
                "▷: H⊗A→A and ◁: H⊗A→H over the same A, H",
                "actions over different Hopf algebras",
            ));
        }
        Ok(MatchedPair {
            a: left.target.clone(),
            h: left.actor.clone(),
            right,
            left,
        })
    }

    pub fn a(&self) -> &Arc<HopfAlgebraData> {
        &self.a
    }

    pub fn h(&self) -> &Arc<HopfAlgebraData> {
        &self.h
    }

    /// `◁: H ⊗ A → H`.
    pub fn right(&self) -> &LinearAction {
        &self.right
    }

    /// `▷: H ⊗ A → A`.
    pub fn left(&self) -> &LinearAction {
        &self.left
    }
}

/// Module-coalgebra structure of both actions and the compatibilities (mp1)–(mp4).
pub fn verify_matched_pair(mp: &MatchedPair) -> AxiomReport {
    let mut r = AxiomReport::new("matched pair");
    r.absorb(
        "▷ ",
        &verify_action(&mp.left, ActionKind::ModuleCoalgebra),
    );
    r.absorb(
        "◁ ",
        &verify_action(&mp.right, ActionKind::ModuleCoalgebra),
    );
    for c in matched_pair_compatibilities(mp, true).checks {
        r.push(c);
    }
    r
}

/// (mp1)–(mp3), and (mp4) when `with_mp4`.
pub fn matched_pair_compatibilities(mp: &MatchedPair, with_mp4: bool) -> AxiomReport {
    let (a, h, lt, rt) = (&mp.a, &mp.h, &mp.left, &mp.right);
    let (da, dh) = (a.dim(), h.dim());
    let f = a.field();
    let mut r = AxiomReport::new("matched pair compatibilities");
    r.push(check_identity(
        "mp1 x▷1 = ε(x)1",
        f,
        &[dh],
        |t| lt.act_at(&a.unit_at(t, 1), 0),
        |t| a.unit_at(&h.counit_at(t, 0), 0),
    ));
    r.push(check_identity(
        "mp1 1◁a = ε(a)1",
        f,
        &[da],
        |t| rt.act_at(&h.unit_at(t, 0), 0),
        |t| h.unit_at(&a.counit_at(t, 0), 0),
    ));
    // x ▷ (ab) = (x₁ ▷ a₁)((x₂ ◁ a₂) ▷ b) on [x, a, b].
    r.push(check_identity(
        "mp2",
        f,
        &[dh, da, da],
        |t| lt.act_at(&a.mult_at(t, 1), 0),
        |t| {
            let t = a.delta_at(&h.delta_at(t, 0), 2).permute(&[0, 2, 1, 3, 4]);
            let t = lt.act_at(&t, 0);
            let t = rt.act_at(&t, 1);
            let t = lt.act_at(&t, 1);
            a.mult_at(&t, 0)
        },
    ));
    // (xy) ◁ a = (x ◁ (y₁ ▷ a₁))(y₂ ◁ a₂) on [x, y, a].
    r.push(check_identity(
        "mp3",
        f,
        &[dh, dh, da],
        |t| rt.act_at(&h.mult_at(t, 0), 0),
        |t| {
            let t = a.delta_at(&h.delta_at(t, 1), 3).permute(&[0, 1, 3, 2, 4]);
            let t = lt.act_at(&t, 1);
            let t = rt.act_at(&t, 0);
            let t = rt.act_at(&t, 1);
            h.mult_at(&t, 0)
        },
    ));
    if with_mp4 {
        // x₁ ◁ a₁ ⊗ x₂ ▷ a₂ = x₂ ◁ a₂ ⊗ x₁ ▷ a₁ on [x, a].
        let split = |t: &TensorVec| a.delta_at(&h.delta_at(t, 0), 2);
        r.push(check_identity(
            "mp4",
            f,
            &[dh, da],
            |t| {
                let t = split(t).permute(&[0, 2, 1, 3]);
                lt.act_at(&rt.act_at(&t, 0), 1)
            },
            |t| {
                let t = split(t).permute(&[1, 3, 0, 2]);
                lt.act_at(&rt.act_at(&t, 0), 1)
            },
        ));
    }
    r
}

/// The side conditions of the brace constructions, by their equation labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideCondition {
    /// `x ◀ aa' = (x₁ ◀ a) S(x₂) (x₃ ◀ a')`.
    Cond146,
    /// `x ▶ (x' ▷ a) = [(x₁ ∘ x') S(x₂)] ▷ (x₃ ▶ a)`.
    Cond21,
    /// `x ∘ (x' ◁ a) = [((x₁ ∘ x') S(x₂)) ◁ (x₃ ▶ a)] x₄`.
    Cond22,
    /// `x ▶ (x' ▷ a) = x' ▷ (x ▶ a)`.
    Cond111,
    /// `(x' ◁ a) x = (x' ◁ (x₁ ▶ a)) x₂`.
    Cond222,
    /// `x₁ ⊗ x₂ ▷ a = x₂ ⊗ x₁ ▷ a`.
    Smash1,
}

impl SideCondition {
    pub const ALL: [SideCondition; 6] = [
        SideCondition::Cond146,
        SideCondition::Cond21,
        SideCondition::Cond22,
        SideCondition::Cond111,
        SideCondition::Cond222,
        SideCondition::Smash1,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            SideCondition::Cond146 => "cond-1.4.6",
            SideCondition::Cond21 => "cond-2.1",
            SideCondition::Cond22 => "cond-2.2",
            SideCondition::Cond111 => "cond-1.1.1",
            SideCondition::Cond222 => "cond-2.2.2",
            SideCondition::Smash1 => "cond-smash1",
        }
    }
}

impl FromStr for SideCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SideCondition::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "side condition",
                id: s.into(),
            })
    }
}

/// Ingredients for [`verify_side_condition`]. Which slots are needed depends on the condition:
///
/// | condition    | slots                                                       |
/// |--------------|-------------------------------------------------------------|
/// | `cond-1.4.6` | `right` (◀), optionally `a` (the algebra whose product `aa'` is used) |
/// | `cond-2.1`   | `h_brace`, `left` (▷), `black_left` (▶)                     |
/// | `cond-2.2`   | `h_brace`, `right` (◁), `black_left` (▶)                    |
/// | `cond-1.1.1` | `left` (▷), `black_left` (▶)                                |
/// | `cond-2.2.2` | `right` (◁), `black_left` (▶)                               |
/// | `cond-smash1`| `left` (▷)                                                  |
#[derive(Clone, Debug, Default)]
pub struct ConditionData {
    pub a: Option<Arc<HopfAlgebraData>>,
    pub h_brace: Option<HopfBraceData>,
    pub left: Option<LinearAction>,
    pub right: Option<LinearAction>,
    pub black_left: Option<LinearAction>,
}

fn need<'a, T>(slot: &'a Option<T>, name: &str) -> Result<&'a T> {
    slot.as_ref()
        .ok_or_else(|| Error::MissingIngredient(name.into()))
}

fn need_side(act: &LinearAction, side: Side, name: &str) -> Result<()> {
    if act.side != side {
        return Err(Error::shape(name, format!("a {side} action"), act.side));
    }
    Ok(())
}

/// Exhaustive check of one side condition over all basis tuples.
pub fn verify_side_condition(id: SideCondition, data: &ConditionData) -> Result<AxiomReport> {
    let mut r = AxiomReport::new(id.id());
    match id {
        SideCondition::Cond146 => {
            let rt = need(&data.right, "right action ◀")?;
            need_side(rt, Side::Right, "◀")?;
            let a = data.a.as_ref().unwrap_or(&rt.actor);
            if !a.coalgebra().same_structure(rt.actor.coalgebra()) {
                return Err(Error::shape("cond-1.4.6 algebra A", "the actor's coalgebra", "another coalgebra"));
            }
            let h = &rt.target;
            let (da, dh) = (a.dim(), h.dim());
            r.push(check_identity(
                id.id(),
                h.field(),
                &[dh, da, da],
                |t| rt.act_at(&a.mult_at(t, 1), 0),
                |t| {
                    let t = h.delta_at(&h.delta_at(t, 0), 0).permute(&[0, 3, 1, 2, 4]);
                    let t = rt.act_at(&t, 0);
                    let t = h.antipode_at(&t, 1);
                    let t = rt.act_at(&t, 2);
                    h.mult_at(&h.mult_at(&t, 0), 0)
                },
            ));
        }
        SideCondition::Cond21 => {
            let hb = need(&data.h_brace, "Hopf brace H")?;
            let lt = need(&data.left, "left action ▷")?;
            let bl = need(&data.black_left, "left action ▶")?;
            need_side(lt, Side::Left, "▷")?;
            need_side(bl, Side::Left, "▶")?;
            let (h, hc) = (hb.dot(), hb.circ());
            check_brace_actor(hb, lt)?;
            check_brace_actor(hb, bl)?;
            let (da, dh) = (lt.target.dim(), h.dim());
            r.push(check_identity(
                id.id(),
                h.field(),
                &[dh, dh, da],
                |t| bl.act_at(&lt.act_at(t, 1), 0),
                |t| {
                    let t = h.delta_at(&h.delta_at(t, 0), 0).permute(&[0, 3, 1, 2, 4]);
                    let t = hc.mult_at(&t, 0);
                    let t = h.antipode_at(&t, 1);
                    let t = h.mult_at(&t, 0);
                    let t = bl.act_at(&t, 1);
                    lt.act_at(&t, 0)
                },
            ));
        }
        SideCondition::Cond22 => {
            let hb = need(&data.h_brace, "Hopf brace H")?;
            let rt = need(&data.right, "right action ◁")?;
            let bl = need(&data.black_left, "left action ▶")?;
            need_side(rt, Side::Right, "◁")?;
            need_side(bl, Side::Left, "▶")?;
            let (h, hc) = (hb.dot(), hb.circ());
            check_brace_actor(hb, bl)?;
            if !rt.target.coalgebra().same_structure(h.coalgebra()) {
                return Err(Error::shape("◁ target", "the brace H", "another coalgebra"));
            }
            let (da, dh) = (rt.actor.dim(), h.dim());
            r.push(check_identity(
                id.id(),
                h.field(),
                &[dh, dh, da],
                |t| hc.mult_at(&rt.act_at(t, 1), 0),
                |t| {
                    let t = (0..3).fold(t.clone(), |acc, _| h.delta_at(&acc, 0));
                    let t = t.permute(&[0, 4, 1, 2, 5, 3]);
                    let t = hc.mult_at(&t, 0);
                    let t = h.antipode_at(&t, 1);
                    let t = h.mult_at(&t, 0);
                    let t = bl.act_at(&t, 1);
                    let t = rt.act_at(&t, 0);
                    h.mult_at(&t, 0)
                },
            ));
        }
        SideCondition::Cond111 => {
            let lt = need(&data.left, "left action ▷")?;
            let bl = need(&data.black_left, "left action ▶")?;
            need_side(lt, Side::Left, "▷")?;
            need_side(bl, Side::Left, "▶")?;
            let (da, dh) = (lt.target.dim(), lt.actor.dim());
            if bl.actor.dim() != dh || bl.target.dim() != da {
                return Err(Error::shape("▶", format!("{dh}-dim actor on {da}-dim target"), "other dims"));
            }
            r.push(check_identity(
                id.id(),
                lt.target.field(),
                &[dh, dh, da],
                |t| bl.act_at(&lt.act_at(t, 1), 0),
                |t| lt.act_at(&bl.act_at(&t.permute(&[1, 0, 2]), 1), 0),
            ));
        }
        SideCondition::Cond222 => {
            let rt = need(&data.right, "right action ◁")?;
            let bl = need(&data.black_left, "left action ▶")?;
            need_side(rt, Side::Right, "◁")?;
            need_side(bl, Side::Left, "▶")?;
            let h = &rt.target;
            let (da, dh) = (rt.actor.dim(), h.dim());
            if !bl.actor.coalgebra().same_structure(h.coalgebra()) || bl.target.dim() != da {
                return Err(Error::shape("▶", "an action of H on A", "other algebras"));
            }
            // Domain [x, x', a].
            r.push(check_identity(
                id.id(),
                h.field(),
                &[dh, dh, da],
                |t| h.mult_at(&rt.act_at(&t.permute(&[1, 2, 0]), 0), 0),
                |t| {
                    let t = h.delta_at(t, 0).permute(&[2, 0, 3, 1]);
                    let t = bl.act_at(&t, 1);
                    let t = rt.act_at(&t, 0);
                    h.mult_at(&t, 0)
                },
            ));
        }
        SideCondition::Smash1 => {
            let lt = need(&data.left, "left action ▷")?;
            need_side(lt, Side::Left, "▷")?;
            let h = &lt.actor;
            let (da, dh) = (lt.target.dim(), h.dim());
            r.push(check_identity(
                id.id(),
                h.field(),
                &[dh, da],
                |t| lt.act_at(&h.delta_at(t, 0), 1),
                |t| lt.act_at(&h.delta_at(t, 0).flip(0), 1),
            ));
        }
    }
    Ok(r)
}

fn check_brace_actor(hb: &HopfBraceData, act: &LinearAction) -> Result<()> {
    if !act.actor.coalgebra().same_structure(hb.dot().coalgebra()) {
        return Err(Error::shape("action actor", "the brace H", "another coalgebra"));
    }
    Ok(())
}

/// Matrix of a left action restricted to a fixed actor basis vector `x`: `a ↦ x ▷ a`.
pub fn action_operator(act: &LinearAction, actor_index: usize) -> SparseMatrix {
    let q = act.target.dim();
    let f = act.target.field();
    matrix_of(f, &[q], q, |t| {
        let x = TensorVec::basis(f, vec![act.actor.dim()], &[actor_index]);
        match act.side {
            Side::Left => act.act_at(&x.tensor(&t), 0),
            Side::Right => act.act_at(&t.tensor(&x), 0),
        }
    })
}
