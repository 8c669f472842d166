use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hopfbrace::actions::{verify_action, verify_matched_pair, verify_side_condition, ConditionData};
use hopfbrace::brace::{antipode_square_column, make_opposite_brace, make_trivial_brace, verify_hopf_brace};
use hopfbrace::braid::{braid_operator, braid_report, braid_to_r_matrix, qybe_report, specialized_braid, BraidExample, BraidInput};
use hopfbrace::catlim::{equalizer, product_cocommutative, MorphismData};
use hopfbrace::constructions::{bicrossed_product, build_brace, smash_product, BraceRecipe, Ingredients, RecipeId};
use hopfbrace::hopf::verify_hopf;
use hopfbrace::io::{self, Loaded};
use hopfbrace::{zoo, ActionKind, AxiomReport, Error, Field, HopfAlgebraData, HopfBraceData, LinearAction, SideCondition};

#[derive(Parser)]
#[command(name = "hopfbrace", version, about = "Verify and build Hopf algebras, Hopf braces and braid operators")]
struct Cli {
    /// Ground field: q or fp:<prime>. Loaded files must match it.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,

    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms of a presentation file.
    #[command(subcommand)]
    Verify(Verify),
    /// Build new objects from presentation files.
    #[command(subcommand)]
    Build(Build),
    #[command(subcommand)]
    Braid(BraidCmd),
    #[command(subcommand)]
    Qybe(QybeCmd),
    /// Equalizers and products of Hopf braces.
    #[command(subcommand)]
    Cat(CatCmd),
    /// Write a built-in example.
    Zoo(ZooArgs),
}

#[derive(Subcommand)]
enum Verify {
    Hopf { file: PathBuf },
    Brace { file: PathBuf },
    MatchedPair { file: PathBuf },
    Action {
        file: PathBuf,
        /// module-coalgebra, module-algebra or module-bialgebra; default: the claimed kinds.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Side conditions. Files, in order: cond-1.4.6 ◀ [A]; cond-2.1 brace ▷ ▶;
    /// cond-2.2 brace ◁ ▶; cond-1.1.1 ▷ ▶; cond-2.2.2 ◁ ▶; cond-smash1 ▷.
    Condition {
        id: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Args)]
struct Out {
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Subcommand)]
enum Build {
    Bicrossed {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    Smash {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Brace from a recipe. Ingredient files follow the order listed by `--recipe`;
    /// a matched-pair file may stand for consecutive ▷ ◁ ingredients.
    Brace {
        /// main0: A-brace H ▶ ◀ | cor-11.00: A-brace H ▶ | cor-22.00: A-brace H ◀ |
        /// main: A H-brace ▷ ◁ ▶ | cor-11.11: ▷ ◁ | cor-22.22: ▷ ▶ | cor-33.33: ◁ ▶ |
        /// gen-1: ▷ | gen-2: ▶ | gen-3: ◁
        #[arg(long)]
        recipe: String,
        files: Vec<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
    /// The brace x∘y = xy on a Hopf algebra.
    TrivialBrace {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// The brace x∘y = yx on a Hopf algebra with S² = id.
    OppositeBrace {
        file: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Pack a matrix between two braces as a morphism file (verified).
    Morphism {
        source: PathBuf,
        target: PathBuf,
        matrix: PathBuf,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// The braid operator of a cocommutative brace, or a closed form with `--example`
    /// (ex1.1-1, ex1.1-2 take a Hopf file; gen-1, gen-2 a left action; gen-3 a right action).
    Make {
        file: PathBuf,
        #[arg(long)]
        example: Option<String>,
        #[command(flatten)]
        out: Out,
    },
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum QybeCmd {
    /// Check a matrix as an R-matrix.
    Check {
        file: PathBuf,
        /// Treat the file as a braid operator c and check R = c∘τ.
        #[arg(long)]
        from_braid: bool,
    },
}

#[derive(Subcommand)]
enum CatCmd {
    Equalize {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ZooName {
    /// k[C_n]
    Cyclic,
    /// k[S_n]
    Symmetric,
    /// Sweedler's four-dimensional Hopf algebra
    H4,
    /// The matched pair of k[C_3] and k[C_6]
    #[value(name = "c3-c6")]
    C3C6,
    /// c^i ▷ x = ω^i x on H4
    CnAction,
    /// The brace on H4 ⊗ k[C_n] from the two actions ω, λ
    H4CnBrace,
    /// The brace (a⊗x)∘(b⊗y) = ab⊗yx on the C3/C6 bicrossed product
    #[value(name = "c3-c6-brace")]
    C3C6Brace,
}

#[derive(Args)]
struct ZooArgs {
    #[arg(value_enum)]
    name: ZooName,
    #[arg(short, default_value_t = 2)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[command(flatten)]
    out: Out,
}

type Res<T> = Result<T, Error>;

struct Ctx {
    field: Option<Field>,
    format: ReportFormat,
}

enum Outcome {
    Report(AxiomReport),
    Wrote { path: PathBuf, obj: Loaded, note: Option<String> },
}

impl Ctx {
    fn load(&self, path: &Path) -> Res<Loaded> {
        let obj = io::load(path).map_err(|e| match e {
            Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
            other => other,
        })?;
        if let Some(f) = self.field {
            if obj.field() != f {
                return Err(Error::FieldMismatch(f, obj.field()));
            }
        }
        Ok(obj)
    }

    fn field(&self) -> Field {
        self.field.unwrap_or(Field::Rational)
    }
}

fn wrong_kind(path: &Path, expected: &str, found: &Loaded) -> Error {
    Error::shape(path.display().to_string(), expected, found.kind())
}

fn as_hopf(path: &Path, obj: Loaded) -> Res<HopfAlgebraData> {
    match obj {
        Loaded::Hopf(h) => Ok(h),
        other => Err(wrong_kind(path, "a hopf file", &other)),
    }
}

fn as_brace(path: &Path, obj: Loaded) -> Res<HopfBraceData> {
    match obj {
        Loaded::Brace(b) => Ok(b),
        other => Err(wrong_kind(path, "a brace file", &other)),
    }
}

fn as_action(path: &Path, obj: Loaded) -> Res<LinearAction> {
    match obj {
        Loaded::Action(a) => Ok(a),
        other => Err(wrong_kind(path, "an action file", &other)),
    }
}

/// An action slot; a matched-pair file supplies its left or right action.
fn action_for(slot: &str, path: &Path, obj: Loaded) -> Res<LinearAction> {
    match obj {
        Loaded::MatchedPair(mp) if slot.ends_with("right") => Ok(mp.right().clone()),
        Loaded::MatchedPair(mp) => Ok(mp.left().clone()),
        other => as_action(path, other),
    }
}

fn as_matrix(path: &Path, obj: Loaded) -> Res<hopfbrace::SparseMatrix> {
    match obj {
        Loaded::Matrix(m) => Ok(m),
        other => Err(wrong_kind(path, "a matrix file", &other)),
    }
}

fn as_morphism(path: &Path, obj: Loaded) -> Res<MorphismData> {
    match obj {
        Loaded::Morphism(m) => Ok(m),
        other => Err(wrong_kind(path, "a morphism file", &other)),
    }
}

fn condition_slots(id: SideCondition) -> &'static [&'static str] {
    match id {
        SideCondition::Cond146 => &["right", "a"],
        SideCondition::Cond21 => &["h_brace", "left", "black_left"],
        SideCondition::Cond22 => &["h_brace", "right", "black_left"],
        SideCondition::Cond111 => &["left", "black_left"],
        SideCondition::Cond222 => &["right", "black_left"],
        SideCondition::Smash1 => &["left"],
    }
}

fn verify(ctx: &Ctx, cmd: Verify) -> Res<Outcome> {
    let report = match cmd {
        Verify::Hopf { file } => verify_hopf(&as_hopf(&file, ctx.load(&file)?)?),
        Verify::Brace { file } => verify_hopf_brace(&as_brace(&file, ctx.load(&file)?)?),
        Verify::MatchedPair { file } => match ctx.load(&file)? {
            Loaded::MatchedPair(mp) => verify_matched_pair(&mp),
            other => return Err(wrong_kind(&file, "a matched-pair file", &other)),
        },
        Verify::Action { file, kind } => {
            let act = as_action(&file, ctx.load(&file)?)?;
            match kind {
                Some(k) => verify_action(&act, k.parse::<ActionKind>()?),
                None => act.verify_claims(),
            }
        }
        Verify::Condition { id, files } => {
            let id: SideCondition = id.parse()?;
            let slots = condition_slots(id);
            if files.len() > slots.len() {
                return Err(Error::shape(id.id(), format!("at most {} files", slots.len()), files.len()));
            }
            let mut data = ConditionData::default();
            for (slot, file) in slots.iter().zip(&files) {
                let obj = ctx.load(file)?;
                match *slot {
                    "a" => data.a = Some(Arc::new(as_hopf(file, obj)?)),
                    "h_brace" => data.h_brace = Some(as_brace(file, obj)?),
                    "left" => data.left = Some(action_for(slot, file, obj)?),
                    "right" => data.right = Some(action_for(slot, file, obj)?),
                    _ => data.black_left = Some(action_for(slot, file, obj)?),
                }
            }
            verify_side_condition(id, &data)?
        }
    };
    Ok(Outcome::Report(report))
}

fn fill_ingredients(ctx: &Ctx, recipe: RecipeId, files: &[PathBuf]) -> Res<Ingredients> {
    let slots = recipe.slots();
    let mut ing = Ingredients::default();
    let mut k = 0;
    for file in files {
        let Some(&slot) = slots.get(k) else {
            return Err(Error::shape(
                format!("recipe {recipe}"),
                format!("ingredients {}", slots.join(" ")),
                format!("{} files", files.len()),
            ));
        };
        let obj = ctx.load(file)?;
        if let Loaded::MatchedPair(mp) = &obj {
            if slot == "left" && slots.get(k + 1) == Some(&"right") {
                ing.left = Some(mp.left().clone());
                ing.right = Some(mp.right().clone());
                k += 2;
                continue;
            }
        }
        match slot {
            "a" => ing.a = Some(Arc::new(as_hopf(file, obj)?)),
            "h" => ing.h = Some(Arc::new(as_hopf(file, obj)?)),
            "a_brace" => ing.a_brace = Some(as_brace(file, obj)?),
            "h_brace" => ing.h_brace = Some(as_brace(file, obj)?),
            "left" => ing.left = Some(action_for(slot, file, obj)?),
            "right" => ing.right = Some(action_for(slot, file, obj)?),
            "black_left" => ing.black_left = Some(action_for(slot, file, obj)?),
            _ => ing.black_right = Some(action_for(slot, file, obj)?),
        }
        k += 1;
    }
    Ok(ing)
}

fn wrote(out: Out, obj: impl Into<Loaded>, note: Option<String>) -> Res<Outcome> {
    Ok(Outcome::Wrote {
        path: out.output,
        obj: obj.into(),
        note,
    })
}

fn build(ctx: &Ctx, cmd: Build) -> Res<Outcome> {
    match cmd {
        Build::Bicrossed { file, out } => match ctx.load(&file)? {
            Loaded::MatchedPair(mp) => wrote(out, bicrossed_product(&mp)?, None),
            other => Err(wrong_kind(&file, "a matched-pair file", &other)),
        },
        Build::Smash { file, out } => wrote(out, smash_product(&as_action(&file, ctx.load(&file)?)?)?, None),
        Build::Brace { recipe, files, out } => {
            let id: RecipeId = recipe.parse()?;
            let ing = fill_ingredients(ctx, id, &files)?;
            wrote(out, build_brace(&BraceRecipe::new(id, ing))?, None)
        }
        Build::TrivialBrace { file, out } => wrote(out, make_trivial_brace(&as_hopf(&file, ctx.load(&file)?)?)?, None),
        Build::OppositeBrace { file, out } => {
            let h = as_hopf(&file, ctx.load(&file)?)?;
            let b = make_opposite_brace(&h).inspect_err(|e| {
                if let Error::AntipodeNotInvolutive { index } = e {
                    let terms: Vec<String> = antipode_square_column(&h, *index)
                        .iter()
                        .map(|(i, c)| format!("{c}*{}", h.labels()[*i]))
                        .collect();
                    eprintln!("witness: S^2({}) = {}", h.labels()[*index], terms.join(" + "));
                }
            })?;
            wrote(out, b, None)
        }
        Build::Morphism { source, target, matrix, out } => {
            let m = MorphismData {
                source: as_brace(&source, ctx.load(&source)?)?,
                target: as_brace(&target, ctx.load(&target)?)?,
                matrix: as_matrix(&matrix, ctx.load(&matrix)?)?,
            };
            let verified = m.clone().verified()?;
            drop(verified);
            wrote(out, m, None)
        }
    }
}

fn braid(ctx: &Ctx, cmd: BraidCmd) -> Res<Outcome> {
    match cmd {
        BraidCmd::Make { file, example, out } => {
            let obj = ctx.load(&file)?;
            let op = match example {
                None => braid_operator(&as_brace(&file, obj)?)?,
                Some(id) => {
                    let ex: BraidExample = id.parse()?;
                    let input = match obj {
                        Loaded::Hopf(h) => BraidInput::Hopf(Arc::new(h)),
                        Loaded::Action(a) => BraidInput::Action(a),
                        other => return Err(wrong_kind(&file, "a hopf or action file", &other)),
                    };
                    specialized_braid(ex, &input)?
                }
            };
            let note = format!("{0}x{0} braid operator", op.matrix().rows());
            wrote(out, op.into_matrix(), Some(note))
        }
        BraidCmd::Check { file } => Ok(Outcome::Report(braid_report(&as_matrix(&file, ctx.load(&file)?)?)?)),
    }
}

fn qybe(ctx: &Ctx, cmd: QybeCmd) -> Res<Outcome> {
    let QybeCmd::Check { file, from_braid } = cmd;
    let m = as_matrix(&file, ctx.load(&file)?)?;
    let r = if from_braid { braid_to_r_matrix(&m)? } else { m };
    Ok(Outcome::Report(qybe_report(&r)?))
}

fn cat(ctx: &Ctx, cmd: CatCmd) -> Res<Outcome> {
    match cmd {
        CatCmd::Equalize { f, g, out } => {
            let fm = as_morphism(&f, ctx.load(&f)?)?.verified()?;
            let gm = as_morphism(&g, ctx.load(&g)?)?.verified()?;
            let e = equalizer(&fm, &gm)?;
            let chain: Vec<String> = e.certificate.chain.iter().map(usize::to_string).collect();
            let note = format!("fixpoint dimensions {}", chain.join(" -> "));
            wrote(out, e.brace, Some(note))
        }
        CatCmd::Product { files, out } => {
            let braces = files
                .iter()
                .map(|f| as_brace(f, ctx.load(f)?))
                .collect::<Res<Vec<_>>>()?;
            let (p, _) = product_cocommutative(&braces)?;
            wrote(out, p, None)
        }
    }
}

fn zoo(ctx: &Ctx, args: ZooArgs) -> Res<Outcome> {
    let f = ctx.field();
    let scalar = |s: &Option<String>, name: &str| -> Res<hopfbrace::Scalar> {
        let s = s.as_deref().ok_or_else(|| Error::MissingIngredient(format!("--{name}")))?;
        f.parse(s).map_err(|_| Error::Parse {
            line: 0,
            column: 0,
            message: format!("--{name}: invalid scalar {s:?} for {f}"),
        })
    };
    let out = args.out;
    match args.name {
        ZooName::Cyclic => wrote(out, zoo::cyclic_group_algebra(f, args.n)?, None),
        ZooName::Symmetric => {
            if args.n > 5 {
                return Err(Error::OutOfScope(format!("S_{} has too many elements for dense tables", args.n)));
            }
            wrote(out, zoo::symmetric_group_algebra(f, args.n)?, None)
        }
        ZooName::H4 => wrote(out, zoo::sweedler_h4(f)?, None),
        ZooName::C3C6 => wrote(out, zoo::c3_c6_matched_pair(f)?, None),
        ZooName::CnAction => {
            let w = scalar(&args.omega, "omega")?;
            let (act, _) = zoo::cn_actions_on_h4(f, args.n, &w, &w)?;
            wrote(out, act, None)
        }
        ZooName::H4CnBrace => {
            let (w, l) = (scalar(&args.omega, "omega")?, scalar(&args.lambda, "lambda")?);
            let (left, black) = zoo::cn_actions_on_h4(f, args.n, &w, &l)?;
            let ing = Ingredients {
                left: Some(left),
                black_left: Some(black),
                ..Default::default()
            };
            wrote(out, build_brace(&BraceRecipe::new(RecipeId::Cor2222, ing))?, None)
        }
        ZooName::C3C6Brace => {
            let mp = zoo::c3_c6_matched_pair(f)?;
            let ing = Ingredients {
                left: Some(mp.left().clone()),
                right: Some(mp.right().clone()),
                ..Default::default()
            };
            wrote(out, build_brace(&BraceRecipe::new(RecipeId::Cor1111, ing))?, None)
        }
    }
}

fn dim_of(obj: &Loaded) -> String {
    match obj {
        Loaded::Hopf(h) => format!("dim {}", h.dim()),
        Loaded::Brace(b) => format!("dim {}", b.dim()),
        Loaded::MatchedPair(mp) => format!("dims {} and {}", mp.a().dim(), mp.h().dim()),
        Loaded::Action(a) => format!("{} action, dims {} on {}", a.side(), a.actor().dim(), a.target().dim()),
        Loaded::Matrix(m) => format!("{}x{}", m.rows(), m.cols()),
        Loaded::Morphism(m) => format!("{}x{}", m.matrix.rows(), m.matrix.cols()),
    }
}

fn print_report(format: ReportFormat, r: &AxiomReport) {
    match format {
        ReportFormat::Text => print!("{}", r.to_text()),
        ReportFormat::Json => println!("{}", r.to_json()),
    }
}

fn run(cli: Cli) -> ExitCode {
    let ctx = Ctx {
        field: cli.field,
        format: cli.report,
    };
    let outcome = match cli.command {
        Command::Verify(c) => verify(&ctx, c),
        Command::Build(c) => build(&ctx, c),
        Command::Braid(c) => braid(&ctx, c),
        Command::Qybe(c) => qybe(&ctx, c),
        Command::Cat(c) => cat(&ctx, c),
        Command::Zoo(a) => zoo(&ctx, a),
    };
    let outcome = outcome.and_then(|o| match o {
        Outcome::Wrote { path, obj, note } => {
            io::save(&obj, &path)?;
            Ok(Outcome::Wrote { path, obj, note })
        }
        o => Ok(o),
    });
    match outcome {
        Ok(Outcome::Report(r)) => {
            print_report(ctx.format, &r);
            if r.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Wrote { path, obj, note }) => {
            match ctx.format {
                ReportFormat::Text => {
                    let extra = note.map(|n| format!(", {n}")).unwrap_or_default();
                    println!("wrote {} ({}, {}{extra})", path.display(), obj.kind(), dim_of(&obj));
                }
                ReportFormat::Json => println!(
                    "{}",
                    json!({"output": path.display().to_string(), "kind": obj.kind(), "size": dim_of(&obj), "note": note})
                ),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = if e.is_input_error() { 2 } else { 1 };
            match (&e, ctx.format) {
                (Error::Hypothesis { name, report }, ReportFormat::Text) => {
                    eprintln!("error: hypothesis `{name}` failed");
                    print!("{}", report.to_text());
                }
                (Error::Hypothesis { name, report }, ReportFormat::Json) => {
                    println!("{}", json!({"error": format!("hypothesis `{name}` failed"), "report": report.to_json()}));
                }
                (_, ReportFormat::Text) => eprintln!("error: {e}"),
                (_, ReportFormat::Json) => println!("{}", json!({"error": e.to_string()})),
            }
            ExitCode::from(code)
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
