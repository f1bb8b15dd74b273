//! Command-line front end for the `face_monoid` library. All machine output
//! is JSON; `--pretty` switches to a human-readable rendering.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use face_monoid::{
    ActionKind, ConeProfile, Element, ElementInput, Error, Face, FaceInput, FacetInput, FacetLabel, Gcm, IndexSet,
    NormalForm, Report, Suite, VerifyParams, WeylGroup, Word, DEFAULT_BUDGET,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
/// A verification suite reported failures.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Bad command line (clap uses the same code).
pub const EXIT_USAGE: i32 = 2;
/// Unreadable or malformed input: files, JSON, element expressions.
pub const EXIT_INPUT: i32 = 3;
/// A computation rejected its arguments (not special, not in the cone, ...).
pub const EXIT_COMPUTE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "fm",
    version,
    about = "Face monoids of Kac-Moody Weyl groups and their actions on the Coxeter complex"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// JSON file holding the Cartan matrix, either {"matrix": [[...]]} or a bare array of rows.
    #[arg(long, global = true)]
    pub gcm: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "max-len", global = true, default_value_t = 6)]
    pub max_len: usize,
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    /// Reflection budget for the numbers game.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connected components of the matrix and their types.
    Classify {
        /// Restrict to a subset, as a JSON list of 1-based indices.
        #[arg(long)]
        subset: Option<String>,
    },
    /// The special subsets.
    Special,
    /// Canonical reduced form of a word (`s1.s2.s1` or `[1,2,1]`).
    Word { word: String },
    #[command(subcommand)]
    Face(FaceCommand),
    #[command(subcommand)]
    Monoid(MonoidCommand),
    /// Act on a coset `{"rep":[..],"jtype":[..]}` or on a cone point.
    Act {
        #[arg(long, value_enum, default_value_t = Kind::Good2)]
        kind: Kind,
        #[arg(long)]
        element: String,
        #[arg(long, conflicts_with = "point", required_unless_present = "point")]
        coset: Option<String>,
        /// A pairing profile, e.g. `["1","1/2","0"]` or `"apex"`.
        #[arg(long)]
        point: Option<String>,
    },
    /// All monoid elements of length at most --max-len.
    Enumerate,
    /// Run a verification suite. Without --gcm, runs on the standard test matrices.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FaceCommand {
    /// Intersection of two faces `{"theta":[..],"rep":[..]}`.
    Meet { a: String, b: String },
    /// Smallest face containing both.
    Join { a: String, b: String },
    /// Intersection of a face with a closed facet `{"rep":[..],"jtype":[..]}`.
    Facet { face: String, facet: String },
}

#[derive(Debug, Subcommand)]
pub enum MonoidCommand {
    Mul {
        x: String,
        y: String,
    },
    Inv {
        x: String,
    },
    Nf {
        x: String,
        #[arg(long, value_enum, default_value_t = Variant::I)]
        variant: Variant,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Bad,
    Good1,
    Good2,
}

impl From<Kind> for ActionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Bad => ActionKind::Bad,
            Kind::Good1 => ActionKind::Good1,
            Kind::Good2 => ActionKind::Good2,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Variant {
    I,
    Ii,
}

/// Failure of a command, with its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub name: String,
    pub detail: String,
}

impl Failure {
    fn usage(detail: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, name: "Usage".into(), detail: detail.into() }
    }

    fn input(name: &str, detail: impl fmt::Display) -> Self {
        Failure { code: EXIT_INPUT, name: name.into(), detail: detail.to_string() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.name, "detail": self.detail })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSquare { .. }
            | Error::EmptyMatrix
            | Error::RankTooLarge(_)
            | Error::BadDiagonal { .. }
            | Error::PositiveOffDiagonal { .. }
            | Error::AsymmetricZero { .. }
            | Error::BadGenerator { .. } => EXIT_INPUT,
            _ => EXIT_COMPUTE,
        };
        Failure { code, name: e.name().into(), detail: e.to_string() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::input("ParseError", e)
    }
}

/// Syntax error in an element expression. `position` is a 0-based byte
/// offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parsed but unvalidated expression `word? e[Θ]? word?`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ElementExpr {
    pub left: Vec<usize>,
    pub theta: Option<Vec<usize>>,
    pub right: Vec<usize>,
}

/// Parses `s3.e[1,2].s1`: dot-separated tokens `s<i>` and at most one
/// `e[i,...]`. Empty input and `1` denote the unit.
pub fn parse_expr(text: &str) -> Result<ElementExpr, ParseError> {
    let mut expr = ElementExpr::default();
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(expr);
    }
    let base = text.len() - text.trim_start().len();
    let mut pos = base;
    for token in trimmed.split('.') {
        let err = |offset: usize, message: String| ParseError { position: pos + offset, message };
        if let Some(digits) = token.strip_prefix('s') {
            let i = parse_index(digits)
                .ok_or_else(|| err(1, format!("expected a generator index after 's', found {digits:?}")))?;
            if expr.theta.is_some() { &mut expr.right } else { &mut expr.left }.push(i);
        } else if let Some(rest) = token.strip_prefix("e[") {
            if expr.theta.is_some() {
                return Err(err(0, "more than one idempotent factor".into()));
            }
            let inner = rest.strip_suffix(']').ok_or_else(|| err(token.len(), "expected ']'".into()))?;
            let mut theta = Vec::new();
            let mut offset = 2;
            if !inner.trim().is_empty() {
                for item in inner.split(',') {
                    let i = parse_index(item.trim())
                        .ok_or_else(|| err(offset, format!("expected an index, found {item:?}")))?;
                    theta.push(i);
                    offset += item.len() + 1;
                }
            }
            expr.theta = Some(theta);
        } else {
            let message = if token.is_empty() { "empty token".into() } else { format!("unexpected token {token:?}") };
            return Err(err(0, message));
        }
        pos += token.len() + 1;
    }
    Ok(expr)
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses an element expression and canonicalizes it in `g`.
pub fn parse_element_expr(g: &WeylGroup, text: &str) -> Result<Element, Failure> {
    let e = parse_expr(text)?;
    let theta = match &e.theta {
        None => IndexSet::EMPTY,
        Some(t) => IndexSet::from_one_based(t, g.rank()).ok_or_else(|| {
            Failure::from(Error::BadGenerator { index: t.iter().copied().max().unwrap_or(0), rank: g.rank() })
        })?,
    };
    Ok(g.element_from_input(&ElementInput {
        left: face_monoid::RawWord(e.left),
        theta,
        right: face_monoid::RawWord(e.right),
    })?)
}

/// Reads an element given either as JSON or as an expression.
pub fn read_element(g: &WeylGroup, text: &str) -> Result<Element, Failure> {
    if text.trim_start().starts_with('{') {
        let input: ElementInput = from_json(text)?;
        Ok(g.element_from_input(&input)?)
    } else {
        parse_element_expr(g, text)
    }
}

/// Reads a word given as `s1.s2` or a JSON list of 1-based letters.
pub fn read_word(g: &WeylGroup, text: &str) -> Result<Word, Failure> {
    let letters: Vec<usize> = if text.trim_start().starts_with('[') {
        from_json(text)?
    } else {
        let e = parse_expr(text)?;
        if e.theta.is_some() {
            return Err(ParseError {
                position: text.find('e').unwrap_or(0),
                message: "a word cannot contain e[...]".into(),
            }
            .into());
        }
        e.left
    };
    Ok(g.normalize(&letters)?)
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::input("InvalidJson", e))
}

pub fn read_gcm(text: &str) -> Result<Gcm, Failure> {
    let value: Value = from_json(text)?;
    let rows = match value.get("matrix") {
        Some(m) => m.clone(),
        None => value,
    };
    let rows: Vec<Vec<i64>> = serde_json::from_value(rows).map_err(|e| Failure::input("InvalidJson", e))?;
    Ok(Gcm::new(rows)?)
}

fn load_group(global: &Global) -> Result<WeylGroup, Failure> {
    let path = global.gcm.as_ref().ok_or_else(|| Failure::usage("this command needs --gcm FILE"))?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input("Io", format!("{}: {e}", path.display())))?;
    Ok(WeylGroup::new(read_gcm(&text)?))
}

/// The matrices `fm verify` runs on when no --gcm is given.
pub fn standard_matrices() -> Vec<(&'static str, Gcm)> {
    let m = |rows: &[&[i64]]| Gcm::new(rows.iter().map(|r| r.to_vec()).collect()).expect("valid");
    vec![
        ("fin", m(&[&[2, -1], &[-1, 2]])),
        ("aff", m(&[&[2, -2], &[-2, 2]])),
        ("ind2", m(&[&[2, -5], &[-1, 2]])),
        ("hyp", m(&[&[2, -2, -1], &[-2, 2, 0], &[-1, 0, 2]])),
        ("dec", m(&[&[2, -2, 0], &[-2, 2, 0], &[0, 0, 2]])),
    ]
}

/// Result of a successful command: JSON, a text rendering, and whether a
/// verification failed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub verify_failed: bool,
}

impl Output {
    fn plain<T: Serialize + fmt::Display>(v: &T) -> Self {
        Output { json: to_value(v), text: v.to_string(), verify_failed: false }
    }

    fn with_text(json: Value, text: String) -> Self {
        Output { json, text, verify_failed: false }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn execute(cli: &Cli) -> Result<Output, Failure> {
    let gl = &cli.global;
    if let Command::Verify { suite } = &cli.command {
        return verify(gl, suite);
    }
    let g = load_group(gl)?;
    Ok(match &cli.command {
        Command::Classify { subset } => {
            let s = match subset {
                Some(t) => {
                    let s: IndexSet = from_json(t)?;
                    if !s.is_subset(g.full()) {
                        return Err(Error::BadGenerator {
                            index: s.to_one_based().last().copied().unwrap_or(0),
                            rank: g.rank(),
                        }
                        .into());
                    }
                    s
                }
                None => g.full(),
            };
            let comps = g.gcm().classified_components(s);
            let text = comps
                .iter()
                .map(|c| format!("{:<12} {:?}", c.indices.to_string(), c.kind))
                .collect::<Vec<_>>()
                .join("\n");
            Output::with_text(json!({ "components": comps }), text)
        }
        Command::Special => {
            let mut s = g.special_subsets().to_vec();
            s.sort();
            let text = s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n");
            Output::with_text(json!({ "special": s }), text)
        }
        Command::Word { word } => {
            let w = read_word(&g, word)?;
            Output::with_text(json!({ "word": w, "length": w.len() }), w.to_string())
        }
        Command::Face(fc) => {
            let face = |t: &str| -> Result<Face, Failure> { Ok(g.face_from_input(&from_json::<FaceInput>(t)?)?) };
            match fc {
                FaceCommand::Meet { a, b } => Output::plain(&g.face_meet(&face(a)?, &face(b)?)),
                FaceCommand::Join { a, b } => Output::plain(&g.face_join(&face(a)?, &face(b)?)),
                FaceCommand::Facet { face: f, facet } => {
                    let c = g.facet_from_input(&from_json::<FacetInput>(facet)?)?;
                    Output::plain(&g.face_meet_facet(&face(f)?, &c))
                }
            }
        }
        Command::Monoid(mc) => match mc {
            MonoidCommand::Mul { x, y } => Output::plain(&g.monoid_mul(&read_element(&g, x)?, &read_element(&g, y)?)),
            MonoidCommand::Inv { x } => Output::plain(&g.monoid_inverse(&read_element(&g, x)?)),
            MonoidCommand::Nf { x, variant } => {
                let nf = match variant {
                    Variant::I => NormalForm::I,
                    Variant::Ii => NormalForm::II,
                };
                let (l, t, r) = g.normal_form(&read_element(&g, x)?, nf);
                Output::with_text(json!({ "left": l, "theta": t, "right": r }), format!("{l}·e{t}·{r}"))
            }
        },
        Command::Act { kind, element, coset, point } => {
            let x = read_element(&g, element)?;
            match (coset, point) {
                (Some(c), _) => {
                    let c: FacetLabel = g.facet_from_input(&from_json::<FacetInput>(c)?)?;
                    Output::plain(&g.act((*kind).into(), &x, &c))
                }
                (None, Some(p)) => {
                    let p: ConeProfile = from_json(p)?;
                    if let ConeProfile::Point(v) = &p {
                        if v.len() != g.rank() {
                            return Err(Failure::input(
                                "BadProfile",
                                format!("expected {} coordinates, got {}", g.rank(), v.len()),
                            ));
                        }
                    }
                    let q = g.act_on_point(&x, &p, gl.budget)?;
                    Output::with_text(to_value(&q), q.to_string())
                }
                (None, None) => return Err(Failure::usage("act needs --coset or --point")),
            }
        }
        Command::Enumerate => {
            let all = g.enumerate(gl.max_len);
            let text = all.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n");
            Output::with_text(json!({ "count": all.len(), "elements": all }), text)
        }
        Command::Verify { .. } => unreachable!("handled above"),
    })
}

fn verify(gl: &Global, suite: &str) -> Result<Output, Failure> {
    let suite: Suite = suite.parse().map_err(Failure::usage)?;
    let params = VerifyParams { seed: gl.seed, samples: gl.samples, max_len: gl.max_len, budget: gl.budget };
    let groups: Vec<(String, WeylGroup)> = match &gl.gcm {
        Some(_) => vec![("gcm".into(), load_group(gl)?)],
        None => standard_matrices().into_iter().map(|(n, m)| (n.to_string(), WeylGroup::new(m))).collect(),
    };
    let mut reports: Vec<(String, Report)> = Vec::new();
    for (name, g) in &groups {
        reports.push((name.clone(), g.run_suite(suite, &params)));
    }
    let report = if reports.len() == 1 {
        reports.pop().expect("one report").1
    } else {
        let mut all = Report::new(suite.name());
        for (name, mut r) in reports {
            r.suite = name;
            all.absorb(r);
        }
        all
    };
    let text = render_report(&report);
    let failed = !report.passed();
    Ok(Output { json: to_value(&report), text, verify_failed: failed })
}

fn render_report(r: &Report) -> String {
    let mut out = format!(
        "suite {}: {} cases, {} failures{}\n",
        r.suite,
        r.cases,
        r.failures.len(),
        if r.expected_violations > 0 {
            format!(", {} expected violations", r.expected_violations)
        } else {
            String::new()
        }
    );
    for f in &r.failures {
        out.push_str(&format!("  {:<28} {}\n", f.case, f.detail));
    }
    out.push_str(if r.passed() { "PASS" } else { "FAIL" });
    out
}

/// Parses arguments, runs the command and renders its output. Returns the
/// exit code and the text for standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let pretty = cli.global.pretty;
    match execute(&cli) {
        Ok(out) => {
            let text = if pretty { out.text } else { out.json.to_string() };
            (if out.verify_failed { EXIT_VERIFY_FAILED } else { EXIT_OK }, text)
        }
        Err(f) => (f.code, f.to_json().to_string()),
    }
}
