//! Command-line front end for `fptkit`.
//!
//! [`run`] parses arguments, builds a [`RunConfig`], runs one subcommand and
//! returns the JSON report with the process exit code:
//!
//! | code | meaning                                        |
//! |------|------------------------------------------------|
//! | 0    | success                                        |
//! | 1    | internal consistency check failed              |
//! | 2    | usage or input error                           |
//! | 3    | resource cap exceeded                          |
//! | 4    | `reproduce` result differs from its golden file |

mod commands;
pub mod report;
pub mod reproduce;

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fptkit::frobenius::NuCaps;
use fptkit::groebner::GbCaps;
use fptkit::{EssConfig, Error, FieldCfg, MonomialOrder, Ring};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "fptkit-report/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "fptkit", version, about = "F-pure thresholds and related invariants of homogeneous ideals")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalArgs {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    p: u32,
    /// Extension degree `S`, optionally with a modulus `S:c0,c1,...,cS`
    /// (coefficients low degree first).
    #[arg(long, global = true)]
    ext: Option<String>,
    /// Comma-separated variable names; inferred from the input when omitted.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Lex)]
    order: OrderArg,
    /// Largest Frobenius level `e` probed.
    #[arg(long = "e-max", global = true, default_value_t = 4)]
    e_max: u32,
    /// Largest extension degree searched by the essential codimension cross-check.
    #[arg(long = "ext-max", global = true, default_value_t = 2)]
    ext_max: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Resource caps, `key=value` pairs separated by commas. Keys:
    /// max-terms, max-points, gb-degree, gb-pairs.
    #[arg(long, global = true)]
    caps: Option<String>,
    /// Frobenius power `q = p^e` for `colon` and `reproduce chsw`.
    #[arg(long, global = true)]
    q: Option<u64>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    output: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact threshold of a monomial ideal.
    FptMonomial { ideal: String },
    /// Integral closure, threshold and (when m-primary) multiplicity of a monomial ideal.
    Closure { ideal: String },
    /// `nu(p^e)` for `e = 1..e-max`.
    Nu { ideal: String },
    /// Certified lower and upper bounds on the threshold.
    FptBounds { ideal: String },
    /// Level-wise sharp splitting test at `c` for `e = 1..e-max`.
    SharpTest {
        ideal: String,
        #[arg(long)]
        c: String,
    },
    /// `(p^[q] : p)` for a prime generated by linear forms; with a second
    /// `--prime`, the intersection of the two colons.
    Colon {
        /// Linear forms generating a prime; give once or twice.
        #[arg(long = "prime", required = true)]
        primes: Vec<String>,
        /// Polynomials to test for membership.
        #[arg(long = "member")]
        members: Vec<String>,
    },
    /// Reduced Gröbner basis.
    Gb { ideal: String },
    /// Initial ideal.
    Ini { ideal: String },
    /// Hilbert function of `R/I` in degrees `0..=t-max`.
    Hilbert {
        ideal: String,
        #[arg(long = "t-max", default_value_t = 10)]
        t_max: u32,
    },
    /// Height of the ideal.
    Height { ideal: String },
    /// Hilbert function of `R/I^s` for a complete intersection of `n` forms of degree `d`.
    CiHilbert {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        s: u32,
        /// Defaults to four past the stable threshold.
        #[arg(long = "t-max")]
        t_max: Option<u64>,
    },
    /// Essential codimension of an ideal of forms.
    Ess { ideal: String },
    /// Compares the threshold with height over degree.
    TheoremA { ideal: String },
    /// Sharp probe and compatible primes at `c`.
    TheoremB {
        ideal: String,
        #[arg(long)]
        c: String,
        /// Candidate prime as comma-separated linear forms; repeatable.
        #[arg(long = "prime")]
        primes: Vec<String>,
    },
    /// Centroid cut of a polytope against the bound `1 - (n/(n+1))^n`.
    Grunbaum {
        /// Dimension of the default simplex when `--points` is omitted.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Points `a,b;c,d;...` whose hull is cut.
        #[arg(long)]
        points: Option<String>,
        /// Normal of the cutting hyperplane; defaults to `(1, ..., 1)`.
        #[arg(long)]
        normal: Option<String>,
    },
    /// Lattice point count against projected volume inside `t Δ_n`.
    Davenport {
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Points in `R^(n+1)`; defaults to the vertices of `t Δ_n`.
        #[arg(long)]
        points: Option<String>,
    },
    /// Restriction of an ideal to the hyperplane `form = 0`.
    Restrict {
        ideal: String,
        #[arg(long)]
        form: String,
    },
    /// Runs a scripted example and compares it with its golden file.
    Reproduce {
        #[arg(value_enum)]
        name: reproduce::Script,
        /// Compare against this file instead of the built-in golden file.
        #[arg(long)]
        golden: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::FptMonomial { .. } => "fpt-monomial",
            Command::Closure { .. } => "closure",
            Command::Nu { .. } => "nu",
            Command::FptBounds { .. } => "fpt-bounds",
            Command::SharpTest { .. } => "sharp-test",
            Command::Colon { .. } => "colon",
            Command::Gb { .. } => "gb",
            Command::Ini { .. } => "ini",
            Command::Hilbert { .. } => "hilbert",
            Command::Height { .. } => "height",
            Command::CiHilbert { .. } => "ci-hilbert",
            Command::Ess { .. } => "ess",
            Command::TheoremA { .. } => "theorem-a",
            Command::TheoremB { .. } => "theorem-b",
            Command::Grunbaum { .. } => "grunbaum",
            Command::Davenport { .. } => "davenport",
            Command::Restrict { .. } => "restrict",
            Command::Reproduce { .. } => "reproduce",
        }
    }

    /// Texts whose identifiers name the ring variables when `--vars` is absent.
    fn inputs(&self) -> Vec<&str> {
        match self {
            Command::FptMonomial { ideal }
            | Command::Closure { ideal }
            | Command::Nu { ideal }
            | Command::FptBounds { ideal }
            | Command::SharpTest { ideal, .. }
            | Command::Gb { ideal }
            | Command::Ini { ideal }
            | Command::Hilbert { ideal, .. }
            | Command::Height { ideal }
            | Command::Ess { ideal }
            | Command::TheoremA { ideal } => vec![ideal],
            Command::TheoremB { ideal, primes, .. } => std::iter::once(ideal).chain(primes).map(String::as_str).collect(),
            Command::Restrict { ideal, form } => vec![ideal, form],
            Command::Colon { primes, members } => primes.iter().chain(members).map(String::as_str).collect(),
            _ => Vec::new(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ExtConfig {
    pub degree: u32,
    pub modulus: Vec<u32>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    pub max_terms: usize,
    pub max_points: u64,
    pub gb_degree: u32,
    pub gb_pairs: usize,
}

impl Default for Caps {
    fn default() -> Self {
        let gb = GbCaps::default();
        Caps {
            max_terms: NuCaps::default().max_terms,
            max_points: EssConfig::default().max_points,
            gb_degree: gb.max_degree,
            gb_pairs: gb.max_pairs,
        }
    }
}

/// Validated options shared by every subcommand; embedded in each report.
#[derive(Serialize, Debug, Clone)]
pub struct RunConfig {
    pub p: u32,
    pub ext: Option<ExtConfig>,
    pub vars: Vec<String>,
    pub order: &'static str,
    pub e_max: u32,
    pub ext_max: u32,
    pub seed: u64,
    pub caps: Caps,
    pub q: Option<u64>,
    pub output: Option<String>,
    #[serde(skip)]
    pub field: FieldCfg,
}

impl RunConfig {
    pub fn ring(&self) -> Result<Arc<Ring>, Failure> {
        if self.vars.is_empty() {
            return Err(Failure::usage("no variables: pass --vars"));
        }
        Ok(Ring::new(self.field.clone(), self.vars.clone())?)
    }

    pub fn order(&self, n: usize) -> MonomialOrder {
        if self.order == "grevlex" {
            MonomialOrder::grevlex(n)
        } else {
            MonomialOrder::lex(n)
        }
    }

    pub fn nu_caps(&self) -> NuCaps {
        NuCaps { max_terms: self.caps.max_terms }
    }

    pub fn gb_caps(&self) -> GbCaps {
        GbCaps { max_degree: self.caps.gb_degree, max_pairs: self.caps.gb_pairs }
    }

    pub fn ess_config(&self) -> EssConfig {
        EssConfig { ext_max: self.ext_max, max_points: self.caps.max_points }
    }
}

/// Why a run did not produce a successful report.
#[derive(Debug, Clone)]
pub enum Failure {
    Usage(String),
    Cap(String),
    Internal(String),
    /// A reproduced result that differs from the golden file.
    Mismatch { result: Value, diff: Vec<Value> },
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    fn code(&self) -> i32 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Mismatch { .. } => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Internal(_) => "internal",
            Failure::Usage(_) => "usage",
            Failure::Cap(_) => "resource-cap",
            Failure::Mismatch { .. } => "verdict-failure",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Cap(m) | Failure::Internal(m) => m.clone(),
            Failure::Mismatch { diff, .. } => format!("{} value(s) differ from the golden file", diff.len()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap(_) => Failure::Cap(e.to_string()),
            Error::Inconsistent(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Exit code and rendered report of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn parse_ext(text: &str, p: u32) -> Result<(FieldCfg, ExtConfig), Failure> {
    let bad = || Failure::usage(format!("--ext expects S or S:c0,...,cS, got `{text}`"));
    let (deg, modulus) = match text.split_once(':') {
        Some((d, m)) => {
            let m: Vec<u32> = m.split(',').map(|c| c.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
            (d, Some(m))
        }
        None => (text, None),
    };
    let s: u32 = deg.trim().parse().map_err(|_| bad())?;
    let field = match modulus {
        Some(m) => {
            if m.len() != s as usize + 1 {
                return Err(bad());
            }
            FieldCfg::extension(p, &m)?
        }
        None => FieldCfg::with_degree(p, s)?,
    };
    if field.degree() != s {
        return Err(bad());
    }
    let ext = ExtConfig { degree: s, modulus: field.modulus().to_vec() };
    Ok((field, ext))
}

fn parse_caps(text: &str) -> Result<Caps, Failure> {
    let mut caps = Caps::default();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("cap `{item}` is not key=value")))?;
        let bad = || Failure::usage(format!("cap `{item}` needs a nonnegative integer"));
        match k.trim().replace('_', "-").as_str() {
            "max-terms" => caps.max_terms = v.trim().parse().map_err(|_| bad())?,
            "max-points" => caps.max_points = v.trim().parse().map_err(|_| bad())?,
            "gb-degree" => caps.gb_degree = v.trim().parse().map_err(|_| bad())?,
            "gb-pairs" => caps.gb_pairs = v.trim().parse().map_err(|_| bad())?,
            other => return Err(Failure::usage(format!("unknown cap `{other}`"))),
        }
    }
    Ok(caps)
}

fn build_config(g: &GlobalArgs, cmd: &Command) -> Result<RunConfig, Failure> {
    let (field, ext) = match &g.ext {
        Some(text) => {
            let (f, e) = parse_ext(text, g.p)?;
            (f, (e.degree > 1).then_some(e))
        }
        None => (FieldCfg::prime(g.p)?, None),
    };
    let vars = match &g.vars {
        Some(v) => v.iter().map(|s| s.trim().to_string()).collect(),
        None => fptkit::parse::collect_variables(&cmd.inputs().join(",")),
    };
    if g.e_max == 0 {
        return Err(Failure::usage("--e-max must be positive"));
    }
    let caps = match &g.caps {
        Some(text) => parse_caps(text)?,
        None => Caps::default(),
    };
    Ok(RunConfig {
        p: g.p,
        ext,
        vars,
        order: match g.order {
            OrderArg::Lex => "lex",
            OrderArg::Grevlex => "grevlex",
        },
        e_max: g.e_max,
        ext_max: g.ext_max,
        seed: g.seed,
        caps,
        q: g.q,
        output: g.output.clone(),
        field,
    })
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            let report = json!({
                "schema": SCHEMA,
                "version": VERSION,
                "status": "error",
                "error": { "kind": "usage", "message": e.kind().to_string() },
            });
            return Outcome { code: 2, stdout: render(&report), stderr: e.to_string() };
        }
    };
    let name = cli.command.name();
    let config = build_config(&cli.global, &cli.command);
    let (config_json, outcome) = match config {
        Ok(cfg) => (serde_json::to_value(&cfg).expect("config serializes"), commands::dispatch(&cli.command, &cfg)),
        Err(f) => (Value::Null, Err(f)),
    };
    let mut report = json!({
        "schema": SCHEMA,
        "version": VERSION,
        "command": name,
        "config": config_json,
    });
    let (code, stderr) = match outcome {
        Ok(result) => {
            report["status"] = json!("ok");
            report["result"] = result;
            (0, String::new())
        }
        Err(f) => {
            report["status"] = json!(if matches!(f, Failure::Mismatch { .. }) { "mismatch" } else { "error" });
            report["error"] = json!({ "kind": f.kind(), "message": f.message() });
            if let Failure::Mismatch { result, diff } = &f {
                report["result"] = result.clone();
                report["diff"] = Value::Array(diff.clone());
            }
            (f.code(), format!("fptkit: {}\n", f.message()))
        }
    };
    let stdout = render(&report);
    if let Some(path) = cli.global.output.as_deref() {
        if let Err(e) = std::fs::write(path, &stdout) {
            return Outcome { code: 2, stdout, stderr: format!("fptkit: cannot write {path}: {e}\n") };
        }
    }
    Outcome { code, stdout, stderr }
}
