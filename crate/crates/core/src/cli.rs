//! Command-line front end. Each subcommand produces a serializable result
//! and a text rendering; the exit code is derived from the verdict.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::expr::{format_polynomial, parse_with_rank};
use crate::families::{family_descent, FamilyReport, FamilySpec};
use crate::gec::{decide, edge_ratio_test, einstein_check, face_descent, EdgeRatios, EinsteinResult, ObstructionReport, Verdict, Witness};
use crate::laurent::{LaurentPolynomial, Rational};
use crate::monge_ampere::{mu, predicted_mu_vertices};
use crate::polytope::{newton_polytope, unimodular_support, LatticePolytope};
use crate::{Error, ExponentVector, Result};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "TORIC_GEC_THREADS";

#[derive(Debug, Parser)]
#[command(name = "toric-gec", version, about = "Monge-Ampère polynomials and Einstein-condition obstructions for toric Fano manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON result to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Exit with code 2 when the verdict is inconclusive.
    #[arg(long, global = true)]
    pub inconclusive_is_error: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute μ(p) and compare its Newton polytope with the prediction.
    Mu(Input),
    /// Decide the generalized Einstein condition for p.
    Gec(Input),
    /// Test whether μ(p) is a monomial multiple of a power of p.
    Einstein {
        #[command(flatten)]
        input: Input,
        /// Fano index λ; without it, tests μ(p) = p^n.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Family members' anticanonical polytopes and their obstructions.
    Family {
        /// Family spec, e.g. `V:k=2`, `S:m=1..3,k=1`, `Prod:P1^2`.
        spec: String,
        /// Run the polytope-only face descent.
        #[arg(long)]
        descend: bool,
        #[arg(long, default_value_t = 2)]
        dmax: usize,
        /// Do not try the known obstructing face first.
        #[arg(long)]
        no_priority: bool,
    },
    /// Vertices, facets, reflexivity, face counts and edge ratios.
    PolytopeInfo(Input),
    /// Face descent on NP(p), or on a polytope in polytope-only mode.
    Descent {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        dmax: usize,
    },
}

/// Exactly one input source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Polynomial expression or alias (`hexagon-q`, `fs:n`, `rem7`).
    #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
    pub expr: Option<String>,
    /// JSON file with a polynomial or polytope; `-` reads stdin.
    #[arg(short = 'i', long = "input", value_name = "FILE")]
    pub file: Option<PathBuf>,
    /// Inline JSON polynomial or polytope.
    #[arg(short = 'd', long = "data", value_name = "JSON")]
    pub data: Option<String>,
    /// Polytope given by its vertices as a JSON list of points.
    #[arg(long, value_name = "JSON")]
    pub vertices: Option<String>,
    /// Anticanonical polytope of a family member.
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
    /// Ambient rank for `-e`.
    #[arg(long, requires = "expr")]
    pub rank: Option<usize>,
}

#[derive(Clone, Debug)]
pub enum Loaded {
    Polynomial(LaurentPolynomial),
    Polytope(LatticePolytope),
}

impl Input {
    pub fn load(&self) -> Result<Loaded> {
        if let Some(e) = &self.expr {
            return Ok(Loaded::Polynomial(parse_with_rank(e, self.rank)?));
        }
        if let Some(f) = &self.family {
            let spec: FamilySpec = f.parse()?;
            return Ok(Loaded::Polytope(spec.anticanonical_polytope()?));
        }
        if let Some(v) = &self.vertices {
            let points: Vec<ExponentVector> =
                serde_json::from_str(v).map_err(|e| Error::Parse(format!("vertex list: {e}")))?;
            return Ok(Loaded::Polytope(LatticePolytope::hull(&points)?));
        }
        let text = match (&self.data, &self.file) {
            (Some(d), _) => d.clone(),
            (None, Some(path)) if path.as_os_str() == "-" => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
                s
            }
            (None, Some(path)) => {
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
            }
            (None, None) => return Err(Error::InvalidArgument("no input given".into())),
        };
        load_json(&text)
    }
}

/// A polynomial (`{"rank", "terms"}`) or polytope (`{"rank", "vertices"}`).
pub fn load_json(text: &str) -> Result<Loaded> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("JSON: {e}")))?;
    let parse_err = |e: serde_json::Error| Error::Parse(format!("JSON: {e}"));
    if value.get("terms").is_some() {
        Ok(Loaded::Polynomial(serde_json::from_value(value).map_err(parse_err)?))
    } else if value.get("vertices").is_some() {
        Ok(Loaded::Polytope(serde_json::from_value(value).map_err(parse_err)?))
    } else {
        Err(Error::Parse("JSON input needs \"terms\" or \"vertices\"".into()))
    }
}

fn polynomial(input: &Input) -> Result<LaurentPolynomial> {
    match input.load()? {
        Loaded::Polynomial(p) => Ok(p),
        Loaded::Polytope(_) => Err(Error::InvalidArgument("this command needs a polynomial".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuOutput {
    pub input: LaurentPolynomial,
    pub mu: LaurentPolynomial,
    pub rank_r: usize,
    /// Vertices of NP(μ(p)).
    pub computed_vertices: Vec<ExponentVector>,
    /// Vertices predicted from NP(p); absent without unimodular support.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_vertices: Option<Vec<ExponentVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prediction_matches: Option<bool>,
}

pub fn mu_output(p: &LaurentPolynomial) -> Result<MuOutput> {
    let result = mu(p)?;
    let computed_vertices = newton_polytope(&result.mu)?.vertices().to_vec();
    let support = unimodular_support(&p.support())?;
    let predicted_vertices = if support.ok { Some(predicted_mu_vertices(&support)?) } else { None };
    let prediction_matches = predicted_vertices.as_ref().map(|v| *v == computed_vertices);
    Ok(MuOutput { input: p.clone(), mu: result.mu, rank_r: result.rank_r, computed_vertices, predicted_vertices, prediction_matches })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeInfo {
    pub polytope: LatticePolytope,
    pub dim: usize,
    pub reflexive: bool,
    /// Number of faces of each dimension `0..=dim`.
    pub face_counts: Vec<usize>,
    pub lattice_points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_ratios: Option<EdgeRatios>,
}

pub fn polytope_info(delta: &LatticePolytope) -> Result<PolytopeInfo> {
    let dim = delta.dim();
    let face_counts = (0..=dim).map(|d| delta.faces(d).map(|f| f.len())).collect::<Result<Vec<_>>>()?;
    let edge_ratios = if dim == 2 { Some(edge_ratio_test(delta)?) } else { None };
    let reflexive = delta.is_full_dimensional() && delta.is_reflexive()?;
    Ok(PolytopeInfo {
        polytope: delta.clone(),
        dim,
        reflexive,
        face_counts,
        lattice_points: delta.lattice_points().len(),
        edge_ratios,
    })
}

/// Result of one command, ready to print.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Output {
    Mu(MuOutput),
    Report(ObstructionReport),
    Einstein(EinsteinResult),
    Families(Vec<FamilyReport>),
    Polytope(Box<PolytopeInfo>),
}

impl Output {
    pub fn exit_code(&self, inconclusive_is_error: bool) -> i32 {
        let verdict = |v: Verdict| match v {
            Verdict::GecHolds => EXIT_HOLDS,
            Verdict::GecFails => EXIT_FAILS,
            Verdict::Inconclusive if inconclusive_is_error => EXIT_ERROR,
            Verdict::Inconclusive => EXIT_HOLDS,
        };
        match self {
            Output::Mu(_) | Output::Polytope(_) => EXIT_HOLDS,
            Output::Report(r) => verdict(r.verdict),
            Output::Einstein(e) => {
                if e.holds {
                    EXIT_HOLDS
                } else {
                    EXIT_FAILS
                }
            }
            Output::Families(list) => list.iter().map(|f| verdict(f.report.verdict)).max().unwrap_or(EXIT_HOLDS),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("results serialize")
    }

    pub fn to_text(&self) -> String {
        match self {
            Output::Mu(m) => mu_text(m),
            Output::Report(r) => report_text(r),
            Output::Einstein(e) => einstein_text(e),
            Output::Families(list) => list.iter().map(family_text).collect::<Vec<_>>().join("\n"),
            Output::Polytope(info) => polytope_text(info),
        }
    }
}

pub fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Mu(input) => Ok(Output::Mu(mu_output(&polynomial(input)?)?)),
        Command::Gec(input) => Ok(Output::Report(decide(&polynomial(input)?)?)),
        Command::Einstein { input, lambda } => {
            let lambda = lambda
                .as_deref()
                .map(|s| s.trim().parse::<Rational>().map_err(|_| Error::InvalidArgument(format!("lambda {s:?}"))))
                .transpose()?;
            Ok(Output::Einstein(einstein_check(&polynomial(input)?, lambda.as_ref())?))
        }
        Command::Family { spec, descend, dmax, no_priority } => {
            let specs = FamilySpec::parse_many(spec)?;
            let mut out = Vec::with_capacity(specs.len());
            for s in specs {
                // without --descend only the cheap priority face is examined
                let d_max = if *descend { *dmax } else { 0 };
                out.push(family_descent(s, d_max, !*no_priority)?);
            }
            Ok(Output::Families(out))
        }
        Command::PolytopeInfo(input) => {
            let delta = match input.load()? {
                Loaded::Polytope(d) => d,
                Loaded::Polynomial(p) => newton_polytope(&p)?,
            };
            Ok(Output::Polytope(Box::new(polytope_info(&delta)?)))
        }
        Command::Descent { input, dmax } => {
            let report = match input.load()? {
                Loaded::Polytope(d) => face_descent(&d, None, *dmax)?,
                Loaded::Polynomial(p) => face_descent(&newton_polytope(&p)?, Some(&p), *dmax)?,
            };
            Ok(Output::Report(report))
        }
    }
}

/// Sizes the global worker pool from [`THREADS_ENV`], if set.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        if n > 0 {
            // fails only if the pool already exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Parses arguments, runs the command and writes to `stdout`/`stderr`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_HOLDS };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    configure_threads();
    let output = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, output.to_json() + "\n") {
            let _ = writeln!(stderr, "error: {}: {e}", path.display());
            return EXIT_ERROR;
        }
    }
    let text = if cli.json { output.to_json() } else { output.to_text() };
    let _ = writeln!(stdout, "{text}");
    output.exit_code(cli.inconclusive_is_error)
}

fn points(v: &[ExponentVector]) -> String {
    v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn mu_text(m: &MuOutput) -> String {
    let mut s = format!("mu = {}\nrank = {}\nNP(mu) vertices: {}\n", format_polynomial(&m.mu), m.rank_r, points(&m.computed_vertices));
    match (&m.predicted_vertices, m.prediction_matches) {
        (Some(v), Some(ok)) => {
            let _ = writeln!(s, "predicted vertices: {}\nprediction matches: {ok}", points(v));
        }
        _ => s.push_str("prediction: support not unimodular\n"),
    }
    s.trim_end().to_string()
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::GecHolds => "gec-holds",
        Verdict::GecFails => "gec-fails",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn witness_text(w: &Witness) -> String {
    let mut s = format!("witness: {}", w.test_name());
    if let Some(face) = w.face() {
        let _ = write!(s, " on {}-face {}", face.dim, points(&face.vertices));
    }
    match w {
        Witness::Divisibility { kappa, mu, polynomial, .. } => {
            let _ = write!(s, "\n  mu = {} does not divide ({})^{kappa}", format_polynomial(mu), format_polynomial(polynomial));
        }
        Witness::OneDim { polynomial, .. } => {
            let _ = write!(s, "\n  {} is not c*x^m*(x+xi)^nu", format_polynomial(polynomial));
        }
        Witness::EdgeShape { polynomial, shape, .. } => {
            let _ = write!(s, "\n  in {}: {}", format_polynomial(polynomial), shape.reason.as_deref().unwrap_or("adjacent segment has the wrong shape"));
        }
        Witness::EdgeRatio { ratios, .. } => {
            for r in &ratios.edges {
                let _ = write!(s, "\n  edge {}: l = {}, l' = {}, l'/l = {}", points(&r.edge), r.length, r.adjacent_length, r.ratio);
            }
            if let Some(v) = &ratios.vertex {
                let at: Vec<String> = ratios.at_vertex(v).iter().map(|r| r.ratio.to_string()).collect();
                let _ = write!(s, "\n  ratios at {v}: {}", at.join(" vs "));
            }
        }
        Witness::Hexagon { certificate, .. } => {
            if let Some(v) = &certificate.violation {
                let _ = write!(
                    s,
                    "\n  overlap {} fails at {}: {} = {} but the coefficient is {}",
                    v.equation, v.point, v.expression, v.value, v.coefficient
                );
            }
            if let Some(f) = &certificate.factor {
                let _ = write!(
                    s,
                    "\n  reduced to {}; factor {} of mu does not divide its {}th power",
                    format_polynomial(&f.reduced),
                    format_polynomial(&f.factor),
                    f.kappa
                );
            }
        }
        Witness::Einstein { result } => {
            let _ = write!(s, "\n  {}", einstein_text(result));
        }
    }
    s
}

pub fn report_text(r: &ObstructionReport) -> String {
    let mut s = verdict_name(r.verdict).to_string();
    if let Some(k) = r.kappa_star {
        let _ = write!(s, " (kappa* = {k})");
    }
    if let Some(w) = &r.witness {
        let _ = write!(s, "\n{}", witness_text(w));
    }
    let _ = write!(s, "\nfaces visited: {}", r.trace.len());
    s
}

fn einstein_text(e: &EinsteinResult) -> String {
    let mut s = format!("einstein: {}", if e.holds { "holds" } else { "fails" });
    let _ = write!(s, " (n = {}", e.n);
    if let Some(l) = &e.lambda {
        let _ = write!(s, ", lambda = {l}");
    }
    if let (Some(c), Some(m)) = (&e.c, &e.m) {
        let _ = write!(s, ", c = {c}, m = {m}");
    }
    s.push(')');
    s
}

fn family_text(f: &FamilyReport) -> String {
    let mut s = format!("{}: dim {}, {} rays, reflexive {}\n{}", f.family, f.dimension, f.rays, f.reflexive, report_text(&f.report));
    if let Some(face) = &f.obstructing_face {
        let plane = f.plane.map(|(a, b)| format!(" in the (x{}, x{}) plane", a + 1, b + 1)).unwrap_or_default();
        let _ = write!(
            s,
            "\nobstructing face{plane}: {}; witness on it: {}",
            points(&face.vertices),
            f.witness_on_obstructing_face
        );
    }
    if let (Some(v), false) = (&f.marked_vertex, f.ratios_at_marked_vertex.is_empty()) {
        let at: Vec<String> = f.ratios_at_marked_vertex.iter().map(|r| r.ratio.to_string()).collect();
        let inv: Vec<String> = f.ratios_at_marked_vertex.iter().map(|r| r.ratio.recip().to_string()).collect();
        let _ = write!(s, "\nl'/l at {v}: {} (l/l': {})", at.join(" vs "), inv.join(" vs "));
    }
    s
}

fn polytope_text(info: &PolytopeInfo) -> String {
    let mut s = format!("dim {} in rank {}\nvertices: {}\nfacets:", info.dim, info.polytope.rank(), points(info.polytope.vertices()));
    for f in info.polytope.facets() {
        let _ = write!(s, "\n  <{}, x> >= {}", f.u, -f.a);
    }
    let _ = write!(s, "\nreflexive: {}\nlattice points: {}\nfaces by dimension: {:?}", info.reflexive, info.lattice_points, info.face_counts);
    if let Some(r) = &info.edge_ratios {
        let all: Vec<String> = r.edges.iter().map(|e| e.ratio.to_string()).collect();
        let _ = write!(s, "\nedge ratios l'/l: {} ({})", all.join(" "), if r.ok { "equal" } else { "unequal" });
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("toric-gec").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn mu_examples() {
        let (code, out, _) = run_args(&["mu", "-e", "1+x+y"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("mu = x*y"), "{out}");
        let (_, out, _) = run_args(&["mu", "-e", "2+3*x+x^2", "--json"]);
        let m: MuOutput = serde_json::from_str(&out).unwrap();
        assert_eq!(m.mu, parse_with_rank("6x+8x^2+3x^3", Some(1)).unwrap());
        assert_eq!(m.prediction_matches, Some(true));
        let (code, _, err) = run_args(&["mu", "-e", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
    }

    #[test]
    fn gec_and_einstein() {
        assert_eq!(run_args(&["gec", "-e", "1+3x+3x^2+x^3"]).0, 0);
        let (code, out, _) = run_args(&["gec", "-e", "hexagon-q"]);
        assert_eq!(code, 1);
        assert!(out.contains("witness: hexagon"), "{out}");
        let (code, out, _) = run_args(&["einstein", "-e", "1+x+y", "--lambda", "3", "--json"]);
        assert_eq!(code, 0);
        let e: EinsteinResult = serde_json::from_str(&out).unwrap();
        assert_eq!(e.m, Some(ExponentVector::from(&[1i64, 1][..])));
        let (code, _, err) = run_args(&["gec", "-e", "1+x^2"]);
        assert_eq!(code, 2);
        assert!(err.contains("unimodular"), "{err}");
    }

    #[test]
    fn family_and_info() {
        let (code, out, _) = run_args(&["family", "V:k=1", "--descend"]);
        assert_eq!(code, 1);
        assert!(out.contains("witness: hexagon"), "{out}");
        let (code, out, _) = run_args(&["family", "S:m=2,k=1", "--descend"]);
        assert_eq!(code, 1);
        assert!(out.contains("(l/l': 4/3 vs 1)"), "{out}");
        assert_eq!(run_args(&["family", "P:n=2", "--descend"]).0, 0);
        assert_eq!(run_args(&["family", "P:n=2", "--descend", "--inconclusive-is-error"]).0, 2);
        let (_, out, _) =
            run_args(&["polytope-info", "--vertices", "[[0,-1],[1,-1],[1,0],[0,1],[-1,1],[-1,0]]", "--json"]);
        let info: PolytopeInfo = serde_json::from_str(&out).unwrap();
        assert!(info.reflexive);
        assert_eq!(info.face_counts, vec![6, 6, 1]);
        assert!(info.edge_ratios.unwrap().edges.iter().all(|e| e.ratio == Rational::from_integer(2.into())));
        let (_, out, _) = run_args(&["polytope-info", "--vertices", "[[0,0],[1,0],[0,1],[1,1]]"]);
        assert!(out.contains("reflexive: false"));
    }

    #[test]
    fn input_sources_are_exclusive() {
        assert_eq!(run_args(&["gec", "-e", "1+x", "--family", "V:k=1"]).0, 2);
        assert_eq!(run_args(&["gec"]).0, 2);
        let (code, out, _) = run_args(&["descent", "-d", r#"{"rank":2,"vertices":[[-1,-1],[2,-1],[-1,2]]}"#]);
        assert_eq!(code, 0);
        assert!(out.starts_with("inconclusive"));
    }
}
