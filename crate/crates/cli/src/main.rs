//! `regmat` — certificates for orientations of regular matroids and for
//! odd dijoins of digraphs, emitted as JSON.
//!
//! Inputs are plain-text files: a totally unimodular matrix
//! (`--format tu-matrix`, the default) or an edge list
//! (`--format digraph`). Digraph inputs are analysed through their
//! graphic matroid except for the cut-side commands (`odd-dijoin`,
//! `minimal-obstruction`), which work on the digraph directly. Every
//! certificate is re-verified before printing; a verification failure is
//! an internal error (exit 3), never silent output.
//!
//! Exit codes: 0 success, 1 parse/usage error, 2 enumeration bound
//! exceeded, 3 internal invariant violation.

use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use regmat::digraph::family::{
    build_d, d_family_clause, d_family_has_odd_dijoin, d_family_odd_dijoin_construct,
    DFamilyClause,
};
use regmat::digraph::{
    directed_bonds, graphic_matroid, is_minimal_obstruction, odd_dijoin, Digraph,
    DEFAULT_VERTEX_BOUND,
};
use regmat::evenness::{
    detect_even_circuit_via_noneven_oracle, directed_basis_and_cover, find_odd_directed_circuit,
    non_even_bruteforce,
};
use regmat::farkas::{farkas_dichotomy, is_totally_cyclic, totally_cyclic_part, FarkasCertificate};
use regmat::matroid::DEFAULT_ENUMERATION_BOUND;
use regmat::{ElemSet, Error, OrientedMatroid, TUMatrix};

#[derive(Parser)]
#[command(
    name = "regmat",
    version,
    about = "Certificates for regular-matroid orientations and odd dijoins",
    disable_help_subcommand = true
)]
struct Cli {
    /// Input file (required by every analysis except `d-family` and
    /// `r10-verify`).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// How to read the input file.
    #[arg(long, value_enum, global = true, default_value_t = Format::TuMatrix)]
    format: Format,

    /// Override the enumeration bound (default 16 matroid elements /
    /// 14 digraph vertices). Raising it may be slow.
    #[arg(long, global = true)]
    bound: Option<usize>,

    /// Largest minor order for the total-unimodularity check of matrix
    /// inputs.
    #[arg(long, global = true, default_value_t = 6)]
    tu_order: usize,

    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Emit JSON (the only output mode; accepted for explicitness).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    TuMatrix,
    Digraph,
}

#[derive(Subcommand)]
enum Command {
    /// The dichotomy for one element: a directed circuit through it, or
    /// the directed cocircuit certifying none exists.
    Farkas {
        /// Element to query: a column label for matrices, an edge id for
        /// digraphs.
        element: String,
    },
    /// The totally cyclic part: every element outside it lies in no
    /// directed circuit.
    Tc,
    /// A directed circuit basis with its parity cover (input must be
    /// totally cyclic).
    Basis,
    /// Is there a set meeting every directed circuit an odd number of
    /// times?
    NonEven,
    /// Is there a directed circuit of even size?
    EvenCircuit,
    /// Find a directed circuit of odd size, if any.
    OddCircuit,
    /// Find a set meeting every directed bond an odd number of times
    /// (digraph input).
    OddDijoin,
    /// Closed-form odd-dijoin answer for the three-layer family.
    DFamily { n1: usize, n2: usize, n3: usize },
    /// Has no odd dijoin, yet every one-step cut minor has one (digraph
    /// input).
    MinimalObstruction,
    /// Sweep all 1024 orientations of the ten-element reference matrix.
    R10Verify,
}

/// A failure plus the exit status it maps to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Lib(e) => match e {
                Error::RepresentationTooLarge { .. }
                | Error::EnumerationBoundExceeded { .. }
                | Error::VertexBoundExceeded { .. } => 2,
                Error::Invariant(_) => 3,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(msg) => msg.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

/// Print to stdout without panicking when the reader has gone away
/// (e.g. when piped into `head`): a broken pipe is a quiet success.
fn emit(text: impl Display) -> ExitCode {
    let mut out = io::stdout().lock();
    match write!(out, "{text}").and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write to standard output: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        // --help / --version
        Err(e) => return emit(e),
    };
    // `--json` is the only output mode; the flag exists for explicitness.
    let _ = cli.json;
    match run(&cli) {
        Ok(json) => {
            if let Some(path) = &cli.output {
                if let Err(io) = fs::write(path, &json) {
                    eprintln!("error: cannot write {}: {io}", path.display());
                    return ExitCode::from(1);
                }
                ExitCode::SUCCESS
            } else {
                emit(format_args!("{json}\n"))
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

/// The loaded input, keeping the digraph around for edge-id rendering.
enum Input {
    Matrix(OrientedMatroid),
    Digraph(Digraph, OrientedMatroid),
}

impl Input {
    fn matroid(&self) -> &OrientedMatroid {
        match self {
            Input::Matrix(m) => m,
            Input::Digraph(_, m) => m,
        }
    }

    /// Render a set of matroid positions in the input's own labels:
    /// column labels for matrices, edge ids for digraphs.
    fn render(&self, set: ElemSet) -> Vec<String> {
        match self {
            Input::Matrix(m) => m.labels_of(set).iter().map(u32::to_string).collect(),
            Input::Digraph(d, m) => m
                .labels_of(set)
                .iter()
                .map(|&l| d.edge(l as usize).id.clone())
                .collect(),
        }
    }

    /// Resolve an element argument to a matroid position.
    fn resolve(&self, element: &str) -> Result<usize, Failure> {
        match self {
            Input::Matrix(m) => {
                let label: u32 = element
                    .parse()
                    .map_err(|_| Failure::usage(format!("`{element}` is not a column label")))?;
                m.position_of(label)
                    .ok_or_else(|| Failure::usage(format!("no column labelled `{element}`")))
            }
            Input::Digraph(d, m) => {
                let idx = d
                    .edges()
                    .iter()
                    .position(|e| e.id == element)
                    .ok_or_else(|| Failure::usage(format!("no edge with id `{element}`")))?;
                m.position_of(idx as u32)
                    .ok_or_else(|| Failure::usage(format!("edge `{element}` left the matroid")))
            }
        }
    }
}

fn warn_if_raised(bound: Option<usize>, default: usize, unit: &str) {
    if let Some(b) = bound {
        if b > default {
            eprintln!("warning: bound {b} exceeds the default of {default} {unit}; this may be slow");
        }
    }
}

fn load_input(cli: &Cli) -> Result<Input, Failure> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Failure::usage("this command needs --input"))?;
    let text = fs::read_to_string(path)
        .map_err(|io| Failure::usage(format!("cannot read {}: {io}", path.display())))?;
    match cli.format {
        Format::TuMatrix => {
            warn_if_raised(cli.bound, DEFAULT_ENUMERATION_BOUND, "elements");
            let rep = TUMatrix::from_text(&text)?;
            if let regmat::TuVerdict::Refuted(r) = rep.verify_tu(cli.tu_order) {
                return Err(Failure::usage(format!(
                    "input is not totally unimodular: rows {:?} and columns {:?} give determinant {}",
                    r.row_indices, r.col_indices, r.determinant
                )));
            }
            let mut m = OrientedMatroid::from_rep(rep)?;
            if let Some(b) = cli.bound {
                m = m.with_enumeration_bound(b);
            }
            Ok(Input::Matrix(m))
        }
        Format::Digraph => {
            warn_if_raised(cli.bound, DEFAULT_VERTEX_BOUND, "vertices");
            let mut d = Digraph::from_text(&text)?;
            if let Some(b) = cli.bound {
                d = d.with_vertex_bound(b);
            }
            let mut m = graphic_matroid(&d)?;
            if let Some(b) = cli.bound {
                m = m.with_enumeration_bound(b);
            }
            Ok(Input::Digraph(d, m))
        }
    }
}

fn load_digraph(cli: &Cli) -> Result<Digraph, Failure> {
    if cli.format != Format::Digraph {
        return Err(Failure::usage("this command needs --format digraph"));
    }
    match load_input(cli)? {
        Input::Digraph(d, _) => Ok(d),
        Input::Matrix(_) => unreachable!("digraph format always loads a digraph"),
    }
}

fn invariant(msg: &str) -> Failure {
    Failure::Lib(Error::invariant(msg.to_string()))
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Farkas { element } => farkas_report(cli, element),
        Command::Tc => tc_report(cli),
        Command::Basis => basis_report(cli),
        Command::NonEven => non_even_report(cli),
        Command::EvenCircuit => even_circuit_report(cli),
        Command::OddCircuit => odd_circuit_report(cli),
        Command::OddDijoin => odd_dijoin_report(cli),
        Command::DFamily { n1, n2, n3 } => d_family_report(*n1, *n2, *n3),
        Command::MinimalObstruction => minimal_obstruction_report(cli),
        Command::R10Verify => r10_report(),
    }
}

#[derive(Serialize)]
struct FarkasReport {
    element: String,
    branch: &'static str,
    support: Vec<String>,
    method: &'static str,
}

fn farkas_report(cli: &Cli, element: &str) -> Result<String, Failure> {
    let input = load_input(cli)?;
    let e = input.resolve(element)?;
    let m = input.matroid();
    let (branch, support) = match farkas_dichotomy(m, e)? {
        FarkasCertificate::DirectedCircuit { circuit, .. } => {
            if !m.verify_directed_circuit(circuit) || !circuit.contains(e) {
                return Err(invariant("emitted circuit failed re-verification"));
            }
            ("directed-circuit", circuit)
        }
        FarkasCertificate::DirectedCocircuit { cocircuit, .. } => {
            if !m.verify_directed_cocircuit(cocircuit) || !cocircuit.contains(e) {
                return Err(invariant("emitted cocircuit failed re-verification"));
            }
            ("directed-cocircuit", cocircuit)
        }
    };
    Ok(to_json(&FarkasReport {
        element: element.to_string(),
        branch,
        support: input.render(support),
        method: "exact-lp",
    }))
}

#[derive(Serialize)]
struct TcReport {
    totally_cyclic: bool,
    elements: Vec<String>,
    removed: Vec<String>,
    method: &'static str,
}

fn tc_report(cli: &Cli) -> Result<String, Failure> {
    let input = load_input(cli)?;
    let m = input.matroid();
    let (tc, map) = totally_cyclic_part(m)?;
    if !is_totally_cyclic(&tc)? {
        return Err(invariant("totally cyclic part failed re-verification"));
    }
    let kept = map.lift_set(tc.ground());
    Ok(to_json(&TcReport {
        totally_cyclic: kept == m.ground(),
        elements: input.render(kept),
        removed: input.render(m.ground() - kept),
        method: "exact-lp",
    }))
}

#[derive(Serialize)]
struct BasisReport {
    members: Vec<Vec<String>>,
    cover: Vec<String>,
    method: &'static str,
}

fn basis_report(cli: &Cli) -> Result<String, Failure> {
    let input = load_input(cli)?;
    let m = input.matroid();
    let (basis, cover) = directed_basis_and_cover(m)?;
    if basis.len() != m.n_elements() - m.rank() {
        return Err(invariant("basis size failed re-verification"));
    }
    for &c in &basis.circuits {
        if !m.verify_directed_circuit(c) || !cover.hits_oddly(c) {
            return Err(invariant("basis member failed re-verification"));
        }
    }
    Ok(to_json(&BasisReport {
        members: basis.circuits.iter().map(|&c| input.render(c)).collect(),
        cover: input.render(cover.elements),
        method: "recursion",
    }))
}

#[derive(Serialize)]
struct NonEvenReport {
    non_even: bool,
    cover: Option<Vec<String>>,
    method: &'static str,
}

fn non_even_report(cli: &Cli) -> Result<String, Failure> {
    let input = load_input(cli)?;
    let m = input.matroid();
    let cover = non_even_bruteforce(m)?;
    if let Some(ref j) = cover {
        let directed: Vec<ElemSet> = m
            .circuits()?
            .iter()
            .filter(|c| c.is_directed())
            .map(|c| c.support())
            .collect();
        if directed.iter().any(|&c| !j.hits_oddly(c)) {
            return Err(invariant("cover failed re-verification"));
        }
    }
    Ok(to_json(&NonEvenReport {
        non_even: cover.is_some(),
        cover: cover.map(|j| input.render(j.elements)),
        method: "brute-force",
    }))
}

#[derive(Serialize)]
struct EvenCircuitReport {
    found: bool,
    method: &'static str,
}

fn even_circuit_report(cli: &Cli) -> Result<String, Failure> {
    let input = load_input(cli)?;
    let m = input.matroid();
    let found = detect_even_circuit_via_noneven_oracle(m, |host| {
        Ok(non_even_bruteforce(host)?.is_some())
    })?;
    let direct = m
        .circuits()?
        .iter()
        .any(|c| c.is_directed() && c.support().len() % 2 == 0);
    if found != direct {
        return Err(invariant("reduction disagreed with enumeration"));
    }
    Ok(to_json(&EvenCircuitReport {
        found,
        method: "reduction",
    }))
}

#[derive(Serialize)]
struct OddCircuitReport {
    found: bool,
    circuit: Option<Vec<String>>,
    method: &'static str,
}

fn odd_circuit_report(cli: &Cli) -> Result<String, Failure> {
    let input = load_input(cli)?;
    let m = input.matroid();
    let circuit = find_odd_directed_circuit(m)?;
    if let Some(c) = circuit {
        if !m.verify_directed_circuit(c) || c.len() % 2 == 0 {
            return Err(invariant("odd circuit failed re-verification"));
        }
    }
    Ok(to_json(&OddCircuitReport {
        found: circuit.is_some(),
        circuit: circuit.map(|c| input.render(c)),
        method: "recursion",
    }))
}

#[derive(Serialize)]
struct OddDijoinReport {
    found: bool,
    join: Option<Vec<String>>,
    method: &'static str,
}

fn render_edges(d: &Digraph, set: ElemSet) -> Vec<String> {
    set.iter().map(|e| d.edge(e).id.clone()).collect()
}

fn verify_join(d: &Digraph, join: ElemSet) -> Result<(), Failure> {
    for bond in directed_bonds(d)? {
        if !join.odd_overlap(bond) {
            return Err(invariant("join failed re-verification"));
        }
    }
    Ok(())
}

fn odd_dijoin_report(cli: &Cli) -> Result<String, Failure> {
    let d = load_digraph(cli)?;
    let join = odd_dijoin(&d)?;
    if let Some(j) = join {
        verify_join(&d, j)?;
    }
    Ok(to_json(&OddDijoinReport {
        found: join.is_some(),
        join: join.map(|j| render_edges(&d, j)),
        method: "brute-force",
    }))
}

#[derive(Serialize)]
struct DFamilyReport {
    n1: usize,
    n2: usize,
    n3: usize,
    clause: &'static str,
    has_odd_dijoin: bool,
    join: Option<Vec<String>>,
    method: &'static str,
}

fn clause_name(clause: DFamilyClause) -> &'static str {
    match clause {
        DFamilyClause::NoEdges => "no-edges",
        DFamilyClause::TwoLayer => "two-layer",
        DFamilyClause::MiddleOne => "middle-one",
        DFamilyClause::MiddleTwo => "middle-two",
        DFamilyClause::MiddleLarge => "middle-large",
    }
}

fn d_family_report(n1: usize, n2: usize, n3: usize) -> Result<String, Failure> {
    let has = d_family_has_odd_dijoin(n1, n2, n3);
    let join = d_family_odd_dijoin_construct(n1, n2, n3)?;
    if has != join.is_some() {
        return Err(invariant("closed form disagreed with construction"));
    }
    let d = build_d(n1, n2, n3);
    if let Some(j) = join {
        verify_join(&d, j)?;
    }
    Ok(to_json(&DFamilyReport {
        n1,
        n2,
        n3,
        clause: clause_name(d_family_clause(n1, n2, n3)),
        has_odd_dijoin: has,
        join: join.map(|j| render_edges(&d, j)),
        method: "closed-form",
    }))
}

#[derive(Serialize)]
struct MinimalObstructionReport {
    minimal_obstruction: bool,
    method: &'static str,
}

fn minimal_obstruction_report(cli: &Cli) -> Result<String, Failure> {
    let d = load_digraph(cli)?;
    Ok(to_json(&MinimalObstructionReport {
        minimal_obstruction: is_minimal_obstruction(&d)?,
        method: "brute-force",
    }))
}

#[derive(Serialize)]
struct R10Report {
    orientations_checked: usize,
    noneven_count: usize,
    forbidden_free_count: usize,
    counterexamples: Vec<u64>,
    method: &'static str,
}

fn r10_report() -> Result<String, Failure> {
    let report = regmat::r10::verify_conjecture_on_r10()?;
    Ok(to_json(&R10Report {
        orientations_checked: report.orientations_checked,
        noneven_count: report.noneven_count,
        forbidden_free_count: report.forbidden_free_count,
        counterexamples: report.counterexamples,
        method: "exhaustive-sweep",
    }))
}
