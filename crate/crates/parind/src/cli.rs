//! Batch front-end: parse problem files, dispatch to the calculus and
//! Weyl operations, and emit text, JSON, or DOT reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse/validation
//! error, 3 semantic rule violation, 4 resource guard.

use std::fs;
use std::io::Read;

use clap::Parser;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::calculus;
use crate::error::Error;
use crate::lattice::{marker_label, SubrepLattice};
use crate::parabolic::ParabolicSet;
use crate::rootsys::{
    build_root_system, CartanDatum, CartanType, RootSystem,
};
use crate::triples::{GTriple, SigmaDescriptor};
use crate::verify;
use crate::weyl::{WeylGroup, DEFAULT_GROUP_BOUND};

const TASKS: &[&str] = &[
    "constituents",
    "lattice",
    "steinberg-lattice",
    "adjoint-left",
    "adjoint-right",
    "cuspidal",
    "irreducible",
    "twist",
    "geometric-lemma",
    "weyl:coset-reps",
    "weyl:double-cosets",
    "verify:lemma55",
    "verify:all",
];

const VERIFY_ALL_TYPES: &[&str] = &[
    "A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2",
];

#[derive(Parser, Debug)]
#[command(
    name = "parind",
    about = "Combinatorics of parabolically induced representations",
    disable_help_subcommand = true
)]
pub struct Cli {
    /// Task name (may also come from the problem file)
    task: Option<String>,

    /// Problem file path, or "-" for stdin
    #[arg(long, short = 'f')]
    file: Option<String>,

    /// Task name, alternative to the positional argument
    #[arg(long = "task")]
    task_flag: Option<String>,

    /// Named Cartan type, e.g. A2, B3, G2, A1xA1
    #[arg(long)]
    cartan_type: Option<String>,

    /// Cartan matrix as a JSON array, e.g. '[[2,-1],[-1,2]]'
    #[arg(long)]
    cartan_matrix: Option<String>,

    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "json", "dot"])]
    format: String,

    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<String>,

    /// Maximum rank for verify:all
    #[arg(long)]
    rank_bound: Option<usize>,

    /// Simple-root labels for P, comma-separated (empty string for the
    /// minimal parabolic)
    #[arg(long = "p")]
    p: Option<String>,

    /// Labels for the triviality set of sigma
    #[arg(long = "trivial-on")]
    trivial_on: Option<String>,

    /// Labels for Q
    #[arg(long = "q")]
    q: Option<String>,

    /// Labels for P1
    #[arg(long = "p1")]
    p1: Option<String>,

    /// Labels for the declared unramified-twist roots
    #[arg(long = "declared-nr")]
    declared_nr: Option<String>,

    /// Comma-separated type list for verify:all
    #[arg(long)]
    types: Option<String>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct CartanSpec {
    #[serde(rename = "type")]
    type_name: Option<String>,
    rank: Option<usize>,
    matrix: Option<Vec<Vec<i64>>>,
    labels: Option<Vec<String>>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct Payload {
    #[serde(rename = "P")]
    p: Option<Vec<String>>,
    trivial_on: Option<Vec<String>>,
    #[serde(rename = "Q")]
    q: Option<Vec<String>>,
    #[serde(rename = "P1")]
    p1: Option<Vec<String>>,
    declared_nr: Option<Vec<String>>,
    supercuspidal: Option<bool>,
    types: Option<Vec<String>>,
    rank_bound: Option<usize>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    cartan: Option<CartanSpec>,
    task: Option<String>,
    #[serde(default)]
    payload: Payload,
}

/// A CLI-level failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &report.text) {
                    eprintln!("error: cannot write {path}: {e}");
                    return 2;
                }
            } else {
                print!("{}", report.text);
            }
            report.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

struct Report {
    text: String,
    /// 0 for ordinary reports; verification tasks may signal 1.
    code: i32,
}

impl Report {
    fn ok(text: String) -> Report {
        Report { text, code: 0 }
    }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let problem = load_problem(cli)?;
    let task = cli
        .task_flag
        .clone()
        .or_else(|| cli.task.clone())
        .or_else(|| problem.as_ref().and_then(|p| p.task.clone()))
        .ok_or_else(|| Failure::parse("no task given (positional, --task, or problem file)"))?;
    if !TASKS.contains(&task.as_str()) {
        return Err(Failure::parse(format!(
            "unknown task '{task}'; expected one of {}",
            TASKS.join(", ")
        )));
    }
    if cli.format == "dot" && !matches!(task.as_str(), "lattice" | "steinberg-lattice") {
        return Err(Failure::parse(format!(
            "dot output is only available for lattice tasks, not '{task}'"
        )));
    }

    if task == "verify:all" {
        return verify_all(cli, problem.as_ref());
    }

    let rs = resolve_cartan(cli, problem.as_ref())?;
    let payload = problem.map(|p| p.payload).unwrap_or_default();
    let ctx = TaskContext {
        rs: &rs,
        payload: &payload,
        cli,
    };

    let report = match task.as_str() {
        "constituents" => task_constituents(&ctx)?,
        "lattice" => task_lattice(&ctx)?,
        "steinberg-lattice" => task_steinberg(&ctx)?,
        "adjoint-left" => task_adjoint(&ctx, true)?,
        "adjoint-right" => task_adjoint(&ctx, false)?,
        "cuspidal" => task_cuspidal(&ctx)?,
        "irreducible" => task_irreducible(&ctx)?,
        "twist" => task_twist(&ctx)?,
        "geometric-lemma" => task_geometric_lemma(&ctx)?,
        "weyl:coset-reps" => task_coset_reps(&ctx)?,
        "weyl:double-cosets" => task_double_cosets(&ctx)?,
        "verify:lemma55" => task_verify_lemma55(&ctx)?,
        _ => unreachable!("task list checked above"),
    };
    Ok(report)
}

fn load_problem(cli: &Cli) -> Result<Option<ProblemFile>, Failure> {
    let Some(path) = &cli.file else {
        return Ok(None);
    };
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::parse(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read {path}: {e}")))?
    };
    let problem: ProblemFile = serde_json::from_str(&text)
        .map_err(|e| Failure::parse(format!("{path}: {e}")))?;
    Ok(Some(problem))
}

fn resolve_cartan(cli: &Cli, problem: Option<&ProblemFile>) -> Result<RootSystem, Failure> {
    let datum = if let Some(t) = &cli.cartan_type {
        CartanDatum::of_type(&CartanType::parse(t)?)
    } else if let Some(m) = &cli.cartan_matrix {
        let matrix: Vec<Vec<i64>> = serde_json::from_str(m)
            .map_err(|e| Failure::parse(format!("--cartan-matrix: {e}")))?;
        CartanDatum::new(matrix)?
    } else if let Some(spec) = problem.and_then(|p| p.cartan.as_ref()) {
        cartan_from_spec(spec)?
    } else {
        return Err(Failure::parse(
            "no Cartan data (--cartan-type, --cartan-matrix, or problem file)",
        ));
    };
    Ok(build_root_system(datum)?)
}

fn cartan_from_spec(spec: &CartanSpec) -> Result<CartanDatum, Failure> {
    let base = match (&spec.type_name, &spec.matrix) {
        (Some(_), Some(_)) => {
            return Err(Failure::parse("cartan spec has both type and matrix"))
        }
        (Some(name), None) => {
            let full = match spec.rank {
                Some(r) => format!("{name}{r}"),
                None => name.clone(),
            };
            CartanDatum::of_type(&CartanType::parse(&full)?)
        }
        (None, Some(matrix)) => CartanDatum::new(matrix.clone())?,
        (None, None) => return Err(Failure::parse("cartan spec needs type or matrix")),
    };
    match &spec.labels {
        Some(labels) => Ok(CartanDatum::with_labels(base.matrix, labels.clone())?),
        None => Ok(base),
    }
}

struct TaskContext<'a> {
    rs: &'a RootSystem,
    payload: &'a Payload,
    cli: &'a Cli,
}

impl<'a> TaskContext<'a> {
    /// Resolves a subset of Delta from a CLI flag (comma-separated) or a
    /// payload label list; errors if neither is present.
    fn mask(&self, name: &str, flag: &Option<String>, field: &Option<Vec<String>>) -> Result<u64, Failure> {
        if let Some(s) = flag {
            let labels: Vec<String> = s
                .split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(String::from)
                .collect();
            return Ok(self.rs.labels_to_mask(&labels)?);
        }
        if let Some(labels) = field {
            return Ok(self.rs.labels_to_mask(labels)?);
        }
        Err(Failure::parse(format!("missing payload field {name}")))
    }

    fn mask_or(&self, flag: &Option<String>, field: &Option<Vec<String>>, default: u64) -> Result<u64, Failure> {
        match (flag, field) {
            (None, None) => Ok(default),
            _ => self.mask("", flag, field),
        }
    }

    fn p(&self) -> Result<u64, Failure> {
        self.mask("P", &self.cli.p, &self.payload.p)
    }

    fn trivial_on(&self) -> Result<u64, Failure> {
        self.mask("trivial_on", &self.cli.trivial_on, &self.payload.trivial_on)
    }

    fn q(&self) -> Result<u64, Failure> {
        self.mask("Q", &self.cli.q, &self.payload.q)
    }

    fn p1(&self) -> Result<u64, Failure> {
        self.mask("P1", &self.cli.p1, &self.payload.p1)
    }

    /// G-level supercuspidal descriptor from P and trivial_on.
    fn sigma(&self) -> Result<SigmaDescriptor, Failure> {
        if self.payload.supercuspidal == Some(false) {
            return Err(Failure::from(Error::NotSupercuspidal));
        }
        Ok(SigmaDescriptor::supercuspidal(
            self.rs,
            self.p()?,
            self.trivial_on()?,
        )?)
    }

    /// G-level triple from P, trivial_on, Q.
    fn triple(&self) -> Result<GTriple, Failure> {
        let sigma = self.sigma()?;
        let q = ParabolicSet::in_group(self.rs, self.q()?)?;
        Ok(GTriple::new(self.rs, sigma, q)?)
    }

    /// Triple living in the Levi of P1, from P, trivial_on, Q.
    fn m1_triple(&self, p1_mask: u64) -> Result<GTriple, Failure> {
        if self.payload.supercuspidal == Some(false) {
            return Err(Failure::from(Error::NotSupercuspidal));
        }
        let support = ParabolicSet::new(self.p()?, p1_mask)
            .map_err(|e| Failure::from(Error::InvalidM1Triple(e.to_string())))?;
        let sigma = SigmaDescriptor::new(self.rs, support, self.trivial_on()?, true, true)?;
        let q = ParabolicSet::new(self.q()?, p1_mask)
            .map_err(|e| Failure::from(Error::InvalidM1Triple(e.to_string())))?;
        Ok(GTriple::new(self.rs, sigma, q)?)
    }

    fn group(&self) -> Result<WeylGroup, Failure> {
        Ok(WeylGroup::generate_bounded(self.rs, weyl_guard())?)
    }

    fn json(&self) -> bool {
        self.cli.format == "json"
    }

    fn labels(&self, mask: u64) -> Vec<String> {
        self.rs.mask_labels(mask)
    }
}

/// Group-size guard, overridable through PARIND_GUARD_WEYL.
fn weyl_guard() -> usize {
    std::env::var("PARIND_GUARD_WEYL")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_GROUP_BOUND)
}

fn set_label(rs: &RootSystem, mask: u64) -> String {
    format!("{{{}}}", rs.mask_labels(mask).join(","))
}

fn triple_json(rs: &RootSystem, t: &GTriple) -> Value {
    let mut v = json!({
        "P": rs.mask_labels(t.p().members()),
        "trivial_on": rs.mask_labels(t.sigma.trivial_on()),
        "Q": rs.mask_labels(t.q.members()),
        "supercuspidal": t.sigma.is_supercuspidal(),
    });
    if let Some(name) = calculus::triple_label(t) {
        v["name"] = json!(name);
    }
    v
}

fn triple_text(rs: &RootSystem, t: &GTriple) -> String {
    let base = format!(
        "I_G({}, sigma, {})",
        set_label(rs, t.p().members()),
        set_label(rs, t.q.members())
    );
    match calculus::triple_label(t) {
        Some(name) => format!("{base}  [{name}]"),
        None => base,
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report is serializable");
    s.push('\n');
    s
}

fn task_constituents(ctx: &TaskContext) -> Result<Report, Failure> {
    let sigma = ctx.sigma()?;
    let cons = calculus::constituents(ctx.rs, &sigma)?;
    if ctx.json() {
        let v = json!({
            "task": "constituents",
            "count": cons.len(),
            "constituents": cons.iter().map(|t| triple_json(ctx.rs, t)).collect::<Vec<_>>(),
        });
        return Ok(Report::ok(render_json(&v)));
    }
    let mut out = format!("constituents of Ind(sigma): {}\n", cons.len());
    for t in &cons {
        out.push_str(&format!("  {}\n", triple_text(ctx.rs, t)));
    }
    Ok(Report::ok(out))
}

fn lattice_report(ctx: &TaskContext, lat: &SubrepLattice, title: &str) -> Report {
    if ctx.cli.format == "dot" {
        return Report::ok(lat.to_dot(ctx.rs, title));
    }
    let (socle, cosocle) = lat.socle_cosocle();
    if ctx.json() {
        let v = json!({
            "task": title,
            "index_set": ctx.labels(lat.index_set),
            "constituents": lat
                .constituents
                .iter()
                .map(|c| {
                    let mut t = triple_json(ctx.rs, &c.triple);
                    t["marker"] = json!(ctx.labels(c.marker));
                    t
                })
                .collect::<Vec<_>>(),
            "elements": lat
                .elements
                .iter()
                .map(|e| e.subsets.iter().map(|&m| ctx.labels(m)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "hasse_edges": lat.hasse_edges,
            "socle_marker": ctx.labels(socle.marker),
            "cosocle_marker": ctx.labels(cosocle.marker),
        });
        return Report::ok(render_json(&v));
    }
    let mut out = format!(
        "index set {} ({} constituents, {} subrepresentations)\n",
        set_label(ctx.rs, lat.index_set),
        lat.constituents.len(),
        lat.size()
    );
    for c in &lat.constituents {
        out.push_str(&format!(
            "  marker {}: {}\n",
            marker_label(ctx.rs, c.marker),
            triple_text(ctx.rs, &c.triple)
        ));
    }
    out.push_str(&format!(
        "socle marker {}, cosocle marker {}\n",
        marker_label(ctx.rs, socle.marker),
        marker_label(ctx.rs, cosocle.marker)
    ));
    Report::ok(out)
}

fn task_lattice(ctx: &TaskContext) -> Result<Report, Failure> {
    let p1 = ParabolicSet::in_group(ctx.rs, ctx.p1()?)?;
    let t = ctx.m1_triple(p1.members())?;
    let lat = calculus::subrep_lattice(ctx.rs, &p1, &t)?;
    Ok(lattice_report(ctx, &lat, "lattice"))
}

fn task_steinberg(ctx: &TaskContext) -> Result<Report, Failure> {
    let p = ParabolicSet::in_group(ctx.rs, ctx.p()?)?;
    let q = ParabolicSet::in_group(ctx.rs, ctx.q()?)?;
    let lat = calculus::steinberg_lattice(ctx.rs, &p, &q)?;
    Ok(lattice_report(ctx, &lat, "steinberg-lattice"))
}

fn task_adjoint(ctx: &TaskContext, left: bool) -> Result<Report, Failure> {
    let p1 = ParabolicSet::in_group(ctx.rs, ctx.p1()?)?;
    let t = ctx.triple()?;
    let res = if left {
        calculus::left_adjoint(ctx.rs, &p1, &t)?
    } else {
        calculus::right_adjoint(ctx.rs, &p1, &t)?
    };
    let task = if left { "adjoint-left" } else { "adjoint-right" };
    if ctx.json() {
        let v = json!({
            "task": task,
            "P1": ctx.labels(p1.members()),
            "vanishes": res.vanishes,
            "result": res.result_triple.as_ref().map(|t| {
                let mut v = triple_json(ctx.rs, t);
                v["ambient"] = json!(ctx.labels(t.q.ambient()));
                v
            }),
        });
        return Ok(Report::ok(render_json(&v)));
    }
    let out = match &res.result_triple {
        None => format!("{task} at P1={}: 0\n", set_label(ctx.rs, p1.members())),
        Some(img) => format!(
            "{task} at P1={}: {} in the Levi {}\n",
            set_label(ctx.rs, p1.members()),
            triple_text(ctx.rs, img),
            set_label(ctx.rs, img.q.ambient())
        ),
    };
    Ok(Report::ok(out))
}

fn task_cuspidal(ctx: &TaskContext) -> Result<Report, Failure> {
    let t = ctx.triple()?;
    let c = calculus::cuspidality(ctx.rs, &t)?;
    if ctx.json() {
        let v = json!({
            "task": "cuspidal",
            "triple": triple_json(ctx.rs, &t),
            "left_cuspidal": c.left_cuspidal,
            "right_cuspidal": c.right_cuspidal,
            "supercuspidal": c.supercuspidal,
        });
        return Ok(Report::ok(render_json(&v)));
    }
    Ok(Report::ok(format!(
        "{}: left cuspidal {}, right cuspidal {}, supercuspidal {}\n",
        triple_text(ctx.rs, &t),
        c.left_cuspidal,
        c.right_cuspidal,
        c.supercuspidal
    )))
}

fn task_irreducible(ctx: &TaskContext) -> Result<Report, Failure> {
    let p1 = ParabolicSet::in_group(ctx.rs, ctx.p1()?)?;
    let t = ctx.m1_triple(p1.members())?;
    let irr = calculus::is_irreducible_induction(ctx.rs, &p1, &t)?;
    if ctx.json() {
        let v = json!({
            "task": "irreducible",
            "P1": ctx.labels(p1.members()),
            "irreducible": irr,
        });
        return Ok(Report::ok(render_json(&v)));
    }
    Ok(Report::ok(format!(
        "Ind from P1={} is {}\n",
        set_label(ctx.rs, p1.members()),
        if irr { "irreducible" } else { "reducible" }
    )))
}

fn task_twist(ctx: &TaskContext) -> Result<Report, Failure> {
    let p1 = ParabolicSet::in_group(ctx.rs, ctx.p1()?)?;
    let t = ctx.m1_triple(p1.members())?;
    let declared = ctx.mask_or(&ctx.cli.declared_nr, &ctx.payload.declared_nr, 0)?;
    let rep = calculus::unramified_twist_conditions(ctx.rs, &p1, &t, declared)?;
    if ctx.json() {
        let v = json!({
            "task": "twist",
            "candidate_roots": ctx.labels(rep.candidate_roots),
            "active_roots": ctx.labels(rep.active_roots),
            "ignored_roots": ctx.labels(rep.ignored_roots),
            "conditions": rep.conditions,
            "always_irreducible": rep.always_irreducible(),
        });
        return Ok(Report::ok(render_json(&v)));
    }
    let mut out = format!(
        "candidate roots {}, active {}, ignored {}\n",
        set_label(ctx.rs, rep.candidate_roots),
        set_label(ctx.rs, rep.active_roots),
        set_label(ctx.rs, rep.ignored_roots)
    );
    if rep.always_irreducible() {
        out.push_str("reducibility locus empty: irreducible for every unramified twist\n");
    } else {
        out.push_str(&format!(
            "irreducible iff all of the {} conditions hold (reducibility locus is the union of the hypersurfaces):\n",
            rep.conditions.len()
        ));
        for c in &rep.conditions {
            out.push_str(&format!("  {c}\n"));
        }
    }
    Ok(Report::ok(out))
}

fn task_geometric_lemma(ctx: &TaskContext) -> Result<Report, Failure> {
    let group = ctx.group()?;
    let delta_m = ctx.p()?;
    let delta_m1 = ctx.p1()?;
    let rep = calculus::geometric_lemma_report(&group, delta_m, delta_m1);
    if ctx.json() {
        let v = json!({
            "task": "geometric-lemma",
            "P": ctx.labels(delta_m),
            "P1": ctx.labels(delta_m1),
            "cells": rep.cells.iter().map(|c| json!({
                "rep": c.word,
                "length": c.length,
                "survivor": c.survivor,
                "witness": c.witness.as_ref().map(|b| b.coords.clone()),
            })).collect::<Vec<_>>(),
        });
        return Ok(Report::ok(render_json(&v)));
    }
    let mut out = format!(
        "{} double-coset cells for (P={}, P1={}), open cells first:\n",
        rep.cells.len(),
        set_label(ctx.rs, delta_m),
        set_label(ctx.rs, delta_m1)
    );
    for c in &rep.cells {
        if c.survivor {
            out.push_str(&format!("  {} (length {}): survives\n", c.word, c.length));
        } else {
            let witness = c
                .witness
                .as_ref()
                .map(|b| b.to_string())
                .unwrap_or_else(|| "?".into());
            out.push_str(&format!(
                "  {} (length {}): vanishes, witness beta = {}\n",
                c.word, c.length, witness
            ));
        }
    }
    Ok(Report::ok(out))
}

fn task_coset_reps(ctx: &TaskContext) -> Result<Report, Failure> {
    let group = ctx.group()?;
    let delta_q = ctx.q()?;
    let reps = group.min_coset_reps(delta_q);
    if ctx.json() {
        let v = json!({
            "task": "weyl:coset-reps",
            "Q": ctx.labels(delta_q),
            "count": reps.reps.len(),
            "reps": reps.reps.iter().map(|&w| group.word_string(w)).collect::<Vec<_>>(),
        });
        return Ok(Report::ok(render_json(&v)));
    }
    let mut out = format!(
        "{} minimal coset representatives for Delta_Q = {}:\n",
        reps.reps.len(),
        set_label(ctx.rs, delta_q)
    );
    for &w in &reps.reps {
        out.push_str(&format!("  {}\n", group.word_string(w)));
    }
    Ok(Report::ok(out))
}

fn task_double_cosets(ctx: &TaskContext) -> Result<Report, Failure> {
    let group = ctx.group()?;
    let delta_i = ctx.p()?;
    let delta_j = ctx.p1()?;
    let reps = group.double_coset_reps(delta_i, delta_j);
    if ctx.json() {
        let v = json!({
            "task": "weyl:double-cosets",
            "P": ctx.labels(delta_i),
            "P1": ctx.labels(delta_j),
            "count": reps.len(),
            "reps": reps.iter().map(|&w| group.word_string(w)).collect::<Vec<_>>(),
        });
        return Ok(Report::ok(render_json(&v)));
    }
    let mut out = format!(
        "{} double-coset representatives for ({}, {}), filtration order:\n",
        reps.len(),
        set_label(ctx.rs, delta_i),
        set_label(ctx.rs, delta_j)
    );
    for &w in &reps {
        out.push_str(&format!(
            "  {} (length {})\n",
            group.word_string(w),
            group.length(w)
        ));
    }
    Ok(Report::ok(out))
}

fn task_verify_lemma55(ctx: &TaskContext) -> Result<Report, Failure> {
    let group = ctx.group()?;
    let check = verify::check_lemma55(&group);
    if ctx.json() {
        let v = json!({
            "task": "verify:lemma55",
            "passed": check.passed,
            "detail": check.detail,
        });
        return Ok(Report {
            text: render_json(&v),
            code: if check.passed { 0 } else { 1 },
        });
    }
    Ok(Report {
        text: format!(
            "{}: {}\n",
            if check.passed { "pass" } else { "FAIL" },
            check.detail
        ),
        code: if check.passed { 0 } else { 1 },
    })
}

fn verify_all(cli: &Cli, problem: Option<&ProblemFile>) -> Result<Report, Failure> {
    let rank_bound = cli
        .rank_bound
        .or_else(|| problem.and_then(|p| p.payload.rank_bound))
        .unwrap_or(3);
    let types: Vec<String> = if let Some(flag) = &cli.types {
        flag.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect()
    } else if let Some(list) = problem.and_then(|p| p.payload.types.clone()) {
        list
    } else {
        VERIFY_ALL_TYPES.iter().map(|s| s.to_string()).collect()
    };

    let mut lines = Vec::new();
    let mut all_pass = true;
    let mut checked_any = false;
    for name in &types {
        let datum = CartanDatum::of_type(&CartanType::parse(name)?);
        if datum.rank > rank_bound {
            lines.push(format!("{name}: skipped (rank {} > bound {rank_bound})", datum.rank));
            continue;
        }
        let rs = build_root_system(datum)?;
        let group = WeylGroup::generate_bounded(&rs, weyl_guard())?;
        checked_any = true;
        for check in verify::verify_system(&rs, &group) {
            if !check.passed {
                all_pass = false;
            }
            lines.push(format!(
                "{name} {}: {} ({})",
                check.name,
                if check.passed { "pass" } else { "FAIL" },
                check.detail
            ));
        }
    }
    if !checked_any {
        lines.push("warning: nothing checked (empty type list)".to_string());
    }
    let code = if all_pass { 0 } else { 1 };
    if cli.format == "json" {
        let v = json!({
            "task": "verify:all",
            "rank_bound": rank_bound,
            "types": types,
            "passed": all_pass,
            "lines": lines,
        });
        return Ok(Report {
            text: render_json(&v),
            code,
        });
    }
    let mut text = lines.join("\n");
    text.push('\n');
    Ok(Report { text, code })
}
