//! Bicrossed and smash products, and Hopf braces built from matched pairs.
//!
//! The cor-* and gen-* recipes are presets of main0 or main with trivial actions
//! filled in.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::actions::{
    trivial_action, verify_action, verify_matched_pair, verify_side_condition, ActionKind,
    ConditionData, LinearAction, MatchedPair, Side, SideCondition,
};
use crate::brace::{make_opposite_brace, verify_hopf_brace, HopfBraceData};
use crate::error::{Error, Result};
use crate::hopf::{solve_antipode, verify_hopf, HopfAlgebraData};
use crate::linalg::SparseMatrix;
use crate::report::{check_identity, AxiomCheck, AxiomReport};
use crate::tensor::matrix_of;

fn require(report: AxiomReport) -> Result<()> {
    if report.all_passed() {
        return Ok(());
    }
    Err(Error::Hypothesis {
        name: report.failed_names().join(", "),
        report: Box::new(report),
    })
}

/// `τ∘Δ = Δ` as a check with witness.
pub fn cocommutativity_check(name: &str, h: &HopfAlgebraData) -> AxiomCheck {
    check_identity(
        name,
        h.field(),
        &[h.dim()],
        |t| h.delta_at(t, 0),
        |t| h.delta_at(t, 0).flip(0),
    )
}

/// `m∘τ = m` as a check with witness.
pub fn commutativity_check(name: &str, h: &HopfAlgebraData) -> AxiomCheck {
    let d = h.dim();
    check_identity(
        name,
        h.field(),
        &[d, d],
        |t| h.mult_at(t, 0),
        |t| h.mult_at(&t.flip(0), 0),
    )
}

/// `(a⊗x)(b⊗y) = a(x₁▷b₁) ⊗ (x₂◁b₂)y` on `A⊗H`.
fn bicrossed_mult(mp: &MatchedPair) -> SparseMatrix {
    let (a, h) = (mp.a(), mp.h());
    let (da, dh) = (a.dim(), h.dim());
    matrix_of(a.field(), &[da, dh, da, dh], da * dh, |t| {
        let t = a.delta_at(&h.delta_at(&t, 1), 3);
        // [a, x1, b1, x2, b2, y]
        let t = t.permute(&[0, 1, 3, 2, 4, 5]);
        let t = mp.left().act_at(&t, 1);
        let t = mp.right().act_at(&t, 2);
        let t = h.mult_at(&a.mult_at(&t, 0), 1);
        t.merge(0, 2)
    })
}

/// `S(a⊗x) = S(x₂)▷S(a₂) ⊗ S(x₁)◁S(a₁)`.
fn bicrossed_antipode(mp: &MatchedPair) -> SparseMatrix {
    let (a, h) = (mp.a(), mp.h());
    let (da, dh) = (a.dim(), h.dim());
    matrix_of(a.field(), &[da, dh], da * dh, |t| {
        let t = h.delta_at(&a.delta_at(&t, 0), 2);
        let t = a.antipode_at(&a.antipode_at(&t, 0), 1);
        let t = h.antipode_at(&h.antipode_at(&t, 2), 3);
        // [x2, a2, x1, a1]
        let t = t.permute(&[3, 1, 2, 0]);
        let t = mp.left().act_at(&t, 0);
        mp.right().act_at(&t, 1).merge(0, 2)
    })
}

fn bicrossed_unchecked(mp: &MatchedPair) -> Result<HopfAlgebraData> {
    let (a, h) = (mp.a(), mp.h());
    HopfAlgebraData::new(
        a.coalgebra().tensor(h.coalgebra())?,
        bicrossed_mult(mp),
        a.unit().kron(h.unit())?,
        bicrossed_antipode(mp),
    )
}

fn validated(h: HopfAlgebraData, what: &str) -> Result<HopfAlgebraData> {
    let r = verify_hopf(&h);
    if !r.all_passed() {
        return Err(Error::Closure(format!("{what} failed verification: {r}")));
    }
    Ok(h)
}

/// The bicrossed product `A ⋈ H`.
pub fn bicrossed_product(mp: &MatchedPair) -> Result<HopfAlgebraData> {
    let mut hyp = AxiomReport::new("bicrossed product hypotheses");
    hyp.absorb("A: ", &verify_hopf(mp.a()));
    hyp.absorb("H: ", &verify_hopf(mp.h()));
    hyp.absorb("", &verify_matched_pair(mp));
    require(hyp)?;
    validated(bicrossed_unchecked(mp)?, "bicrossed product")
}

/// The smash product `A # H` of a left module-bialgebra action `▷` of `H` on `A`.
pub fn smash_product(act: &LinearAction) -> Result<HopfAlgebraData> {
    if act.side() != Side::Left {
        return Err(Error::shape("smash product action", "a left action", act.side()));
    }
    let mut hyp = AxiomReport::new("smash product hypotheses");
    hyp.absorb("▷ ", &verify_action(act, ActionKind::ModuleBialgebra));
    let data = ConditionData {
        left: Some(act.clone()),
        ..Default::default()
    };
    hyp.absorb("", &verify_side_condition(SideCondition::Smash1, &data)?);
    require(hyp)?;
    let right = trivial_action(act.target().clone(), act.actor().clone(), Side::Right)?;
    bicrossed_product(&MatchedPair::new(right, act.clone())?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecipeId {
    Main0,
    Cor1100,
    Cor2200,
    Main,
    Cor1111,
    Cor2222,
    Cor3333,
    Gen1,
    Gen2,
    Gen3,
}

impl RecipeId {
    pub const ALL: [RecipeId; 10] = [
        RecipeId::Main0,
        RecipeId::Cor1100,
        RecipeId::Cor2200,
        RecipeId::Main,
        RecipeId::Cor1111,
        RecipeId::Cor2222,
        RecipeId::Cor3333,
        RecipeId::Gen1,
        RecipeId::Gen2,
        RecipeId::Gen3,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            RecipeId::Main0 => "main0",
            RecipeId::Cor1100 => "cor-11.00",
            RecipeId::Cor2200 => "cor-22.00",
            RecipeId::Main => "main",
            RecipeId::Cor1111 => "cor-11.11",
            RecipeId::Cor2222 => "cor-22.22",
            RecipeId::Cor3333 => "cor-33.33",
            RecipeId::Gen1 => "gen-1",
            RecipeId::Gen2 => "gen-2",
            RecipeId::Gen3 => "gen-3",
        }
    }

    /// Which ingredient slots the recipe reads, in the order the CLI expects them.
    pub fn slots(&self) -> &'static [&'static str] {
        match self {
            RecipeId::Main0 => &["a_brace", "h", "black_left", "black_right"],
            RecipeId::Cor1100 => &["a_brace", "h", "black_left"],
            RecipeId::Cor2200 => &["a_brace", "h", "black_right"],
            RecipeId::Main => &["a", "h_brace", "left", "right", "black_left"],
            RecipeId::Cor1111 => &["left", "right"],
            RecipeId::Cor2222 => &["left", "black_left"],
            RecipeId::Cor3333 => &["right", "black_left"],
            RecipeId::Gen1 => &["left"],
            RecipeId::Gen2 => &["black_left"],
            RecipeId::Gen3 => &["right"],
        }
    }
}

impl fmt::Display for RecipeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for RecipeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RecipeId::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "recipe",
                id: s.into(),
            })
    }
}

/// Ingredients of a brace construction. Actions carry their actor and target, so
/// `A` and `H` are read off the actions when not given.
///
/// * `▷ = left`: left action of `H` on `A`; `◁ = right`: right action of `A` on `H`.
/// * `▶ = black_left`: left action of `H` (through its `∘` product) on `A`.
/// * `◀ = black_right`: right action of `A∘` on `H` (main0 family).
#[derive(Clone, Debug, Default)]
pub struct Ingredients {
    pub a: Option<Arc<HopfAlgebraData>>,
    pub a_brace: Option<HopfBraceData>,
    pub h: Option<Arc<HopfAlgebraData>>,
    pub h_brace: Option<HopfBraceData>,
    pub left: Option<LinearAction>,
    pub right: Option<LinearAction>,
    pub black_left: Option<LinearAction>,
    pub black_right: Option<LinearAction>,
}

#[derive(Clone, Debug)]
pub struct BraceRecipe {
    pub id: RecipeId,
    pub ingredients: Ingredients,
}

impl BraceRecipe {
    pub fn new(id: RecipeId, ingredients: Ingredients) -> Self {
        BraceRecipe { id, ingredients }
    }
}

fn need<T: Clone>(slot: &Option<T>, name: &str) -> Result<T> {
    slot.clone().ok_or_else(|| Error::MissingIngredient(name.into()))
}

fn check_side(act: &LinearAction, side: Side, name: &str) -> Result<()> {
    if act.side() != side {
        return Err(Error::shape(name, format!("a {side} action"), act.side()));
    }
    Ok(())
}

impl Ingredients {
    /// `A`: explicit, else the target of a left action or the actor of a right one.
    fn resolve_a(&self) -> Result<Arc<HopfAlgebraData>> {
        if let Some(a) = &self.a {
            return Ok(a.clone());
        }
        for act in [&self.left, &self.black_left].into_iter().flatten() {
            return Ok(act.target().clone());
        }
        if let Some(r) = &self.right {
            return Ok(r.actor().clone());
        }
        Err(Error::MissingIngredient("A".into()))
    }

    /// `H`: explicit, else the actor of a left action or the target of a right one.
    fn resolve_h(&self) -> Result<Arc<HopfAlgebraData>> {
        if let Some(h) = &self.h {
            return Ok(h.clone());
        }
        for act in [&self.left, &self.black_left].into_iter().flatten() {
            return Ok(act.actor().clone());
        }
        if let Some(r) = &self.right {
            return Ok(r.target().clone());
        }
        Err(Error::MissingIngredient("H".into()))
    }
}

/// Builds the brace prescribed by the recipe after checking every hypothesis.
pub fn build_brace(recipe: &BraceRecipe) -> Result<HopfBraceData> {
    let ing = &recipe.ingredients;
    match recipe.id {
        RecipeId::Main0 => main0(
            &need(&ing.a_brace, "A (Hopf brace)")?,
            &need(&ing.h, "H")?,
            &need(&ing.black_left, "▶")?,
            &need(&ing.black_right, "◀")?,
            false,
        ),
        RecipeId::Cor1100 => {
            let ab = need(&ing.a_brace, "A (Hopf brace)")?;
            let h = need(&ing.h, "H")?;
            let bl = need(&ing.black_left, "▶")?;
            let br = trivial_action(ab.circ().clone(), h.clone(), Side::Right)?;
            main0(&ab, &h, &bl, &br, false)
        }
        RecipeId::Cor2200 => {
            let ab = need(&ing.a_brace, "A (Hopf brace)")?;
            let h = need(&ing.h, "H")?;
            let br = need(&ing.black_right, "◀")?;
            let bl = trivial_action(h.clone(), ab.circ().clone(), Side::Left)?;
            main0(&ab, &h, &bl, &br, true)
        }
        RecipeId::Main => main(
            &need(&ing.a, "A")?,
            &need(&ing.h_brace, "H (Hopf brace)")?,
            &need(&ing.left, "▷")?,
            &need(&ing.right, "◁")?,
            &need(&ing.black_left, "▶")?,
        ),
        id => {
            let a = ing.resolve_a()?;
            let h = ing.resolve_h()?;
            let hb = opposite_brace_of(&h)?;
            let trivial_left = || trivial_action(h.clone(), a.clone(), Side::Left);
            let trivial_right = || trivial_action(a.clone(), h.clone(), Side::Right);
            let (left, right, black) = match id {
                RecipeId::Cor1111 => (need(&ing.left, "▷")?, need(&ing.right, "◁")?, trivial_left()?),
                RecipeId::Cor2222 => (need(&ing.left, "▷")?, trivial_right()?, need(&ing.black_left, "▶")?),
                RecipeId::Cor3333 => (trivial_left()?, need(&ing.right, "◁")?, need(&ing.black_left, "▶")?),
                RecipeId::Gen1 => (need(&ing.left, "▷")?, trivial_right()?, trivial_left()?),
                RecipeId::Gen2 => (trivial_left()?, trivial_right()?, need(&ing.black_left, "▶")?),
                RecipeId::Gen3 => (trivial_left()?, need(&ing.right, "◁")?, trivial_left()?),
                _ => unreachable!("main0 and main are handled above"),
            };
            main(&a, &hb, &left, &right, &black)
        }
    }
}

/// `H` as the brace `x∘y = yx`, refusing (with witness) when `H` is not cocommutative.
fn opposite_brace_of(h: &HopfAlgebraData) -> Result<HopfBraceData> {
    let mut hyp = AxiomReport::new("H hypotheses");
    hyp.push(cocommutativity_check("H cocommutative", h));
    require(hyp)?;
    make_opposite_brace(h)
}

fn finish(dot: HopfAlgebraData, circ_mult: SparseMatrix, what: &str) -> Result<HopfBraceData> {
    let antipode = solve_antipode(dot.coalgebra(), &circ_mult, dot.unit())?;
    let circ = HopfAlgebraData::new(dot.coalgebra().clone(), circ_mult, dot.unit().clone(), antipode)?;
    let brace = HopfBraceData::new(Arc::new(dot), Arc::new(circ))?;
    let r = verify_hopf_brace(&brace);
    if !r.all_passed() {
        return Err(Error::Closure(format!("{what} failed verification: {r}")));
    }
    Ok(brace)
}

/// `A` a brace, `H` commutative and cocommutative, `▶` a left `H`-module algebra on `A`,
/// `(A∘, H, ▶, ◀)` a matched pair with the compatibility `x◀aa' = (x₁◀a)S(x₂)(x₃◀a')`.
/// Result: `(a⊗x)(b⊗y) = ab⊗xy`, `(a⊗x)∘(b⊗y) = a∘(x₁▶b₁) ⊗ (x₂◀b₂)y`.
fn main0(
    ab: &HopfBraceData,
    h: &Arc<HopfAlgebraData>,
    black_left: &LinearAction,
    black_right: &LinearAction,
    a_cocommutative: bool,
) -> Result<HopfBraceData> {
    check_side(black_left, Side::Left, "▶")?;
    check_side(black_right, Side::Right, "◀")?;
    let bl_circ = black_left.with_target(ab.circ().clone())?.with_actor(h.clone())?;
    let bl_dot = black_left.with_target(ab.dot().clone())?.with_actor(h.clone())?;
    let br = black_right.with_actor(ab.circ().clone())?.with_target(h.clone())?;
    let mut hyp = AxiomReport::new("main0 hypotheses");
    hyp.absorb("A: ", &verify_hopf_brace(ab));
    if a_cocommutative {
        hyp.push(cocommutativity_check("A cocommutative", ab.dot()));
    }
    hyp.absorb("H: ", &verify_hopf(h));
    hyp.push(commutativity_check("H commutative", h));
    hyp.push(cocommutativity_check("H cocommutative", h));
    hyp.absorb("▶ on A: ", &verify_action(&bl_dot, ActionKind::ModuleAlgebra));
    let mp = MatchedPair::new(br.clone(), bl_circ)?;
    hyp.absorb("(A∘, H) ", &verify_matched_pair(&mp));
    let data = ConditionData {
        a: Some(ab.dot().clone()),
        right: Some(br),
        ..Default::default()
    };
    hyp.absorb("", &verify_side_condition(SideCondition::Cond146, &data)?);
    require(hyp)?;
    let dot = ab.dot().tensor(h)?;
    finish(dot, bicrossed_mult(&mp), "main0 brace")
}

/// `A` a Hopf algebra, `H` a cocommutative brace, `(A, H, ▷, ◁)` a matched pair,
/// `▶` a left `H∘`-module bialgebra on `A`, with the two compatibilities between
/// `▷`, `◁` and `▶`. Result: `(a⊗x)(b⊗y) = a(x₁▷b₁) ⊗ (x₂◁b₂)y`,
/// `(a⊗x)∘(b⊗y) = a(x₁▶b) ⊗ x₂∘y`.
fn main(
    a: &Arc<HopfAlgebraData>,
    hb: &HopfBraceData,
    left: &LinearAction,
    right: &LinearAction,
    black_left: &LinearAction,
) -> Result<HopfBraceData> {
    check_side(left, Side::Left, "▷")?;
    check_side(right, Side::Right, "◁")?;
    check_side(black_left, Side::Left, "▶")?;
    let h = hb.dot();
    let left = left.with_actor(h.clone())?.with_target(a.clone())?;
    let right = right.with_actor(a.clone())?.with_target(h.clone())?;
    let black = black_left.with_actor(hb.circ().clone())?.with_target(a.clone())?;
    let mut hyp = AxiomReport::new("main hypotheses");
    hyp.absorb("A: ", &verify_hopf(a));
    hyp.absorb("H: ", &verify_hopf_brace(hb));
    hyp.push(cocommutativity_check("H cocommutative", h));
    let mp = MatchedPair::new(right.clone(), left.clone())?;
    hyp.absorb("(A, H) ", &verify_matched_pair(&mp));
    hyp.absorb("▶ ", &verify_action(&black, ActionKind::ModuleBialgebra));
    let data = ConditionData {
        h_brace: Some(hb.clone()),
        left: Some(left),
        right: Some(right),
        black_left: Some(black.clone()),
        ..Default::default()
    };
    hyp.absorb("", &verify_side_condition(SideCondition::Cond21, &data)?);
    hyp.absorb("", &verify_side_condition(SideCondition::Cond22, &data)?);
    require(hyp)?;
    let dot = bicrossed_unchecked(&mp)?;
    let (da, dh) = (a.dim(), h.dim());
    let hc = hb.circ();
    let circ_mult = matrix_of(a.field(), &[da, dh, da, dh], da * dh, |t| {
        // [a, x1, b, x2, y]
        let t = h.delta_at(&t, 1).permute(&[0, 1, 3, 2, 4]);
        let t = black.act_at(&t, 1);
        let t = hc.mult_at(&a.mult_at(&t, 0), 1);
        t.merge(0, 2)
    });
    finish(dot, circ_mult, "main brace")
}
