//! Command-line front end: argument parsing, dispatch and report layout.
//!
//! Exit codes: 0 success or "yes", 1 a mathematical "no", 2 errors,
//! 3 undecided.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{CoefficientRing, GradedRingSpec, R0Element, ScalarRing};
use crate::charp::{charp_vanishing_search, frobenius_lift, verify_certificate, CharpOutcome};
use crate::cohomology::{
    component, gap_scan, top_component_iso_check, vanishes, verify_content_in_radical, verify_maximal_rank,
    weak_mc_instance, CokerReport, ComponentPresentation, Verdict,
};
use crate::error::{Error, Result};
use crate::ideal::{content_ideal, is_unit_ideal, Decision, R0Ideal};
use crate::linalg::DEFAULT_MINOR_BUDGET;
use crate::problem::{parse_problem, ProblemFile};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

const DEFAULT_CHARP_BOUND: u32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "topcoh",
    version,
    about = "Graded components and vanishing of top local cohomology"
)]
pub struct Cli {
    /// Emit `key: value` lines instead of prose
    #[arg(long, global = true)]
    pub machine: bool,
    /// Maximum number of submatrices enumerated for a minor ideal
    #[arg(long, global = true, value_name = "N")]
    pub minor_budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Content ideal c(I) and whether it is the unit ideal
    Content { file: PathBuf },
    /// Decide H^s_{R_+}(R) = 0 through the content ideal
    Vanishes { file: PathBuf },
    /// Presentation matrix and cokernel of the degree -d component
    Component {
        file: PathBuf,
        #[arg(long, value_name = "D")]
        degree: u64,
    },
    /// Support of H^s_{R_+}(R) as V(c(I)R + R_+)
    Support { file: PathBuf },
    /// Component-wise vanishing for every supported d up to --dmax
    GapScan {
        file: PathBuf,
        #[arg(long, value_name = "D")]
        dmax: Option<u64>,
    },
    /// Check that each M(f_i; d) has rank |B(d)|
    #[command(name = "maximal-rank", alias = "verify-lemma2")]
    MaximalRank {
        file: PathBuf,
        #[arg(long, value_name = "D")]
        dmax: Option<u64>,
    },
    /// Check that every content generator lies in the radical of I_d
    #[command(name = "content-radical", alias = "verify-lemma3")]
    ContentRadical {
        file: PathBuf,
        /// Defaults to the top degree Δ
        #[arg(long, value_name = "D")]
        degree: Option<u64>,
    },
    /// Compare the degree -Δ component with R_0/c(I)
    TopIso { file: PathBuf },
    /// Search for (α, β) with (f_1⋯f_s)^α in (f_1^{α+β}, ..., f_s^{α+β}) over GF(p)
    Charp {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        alpha_max: Option<u32>,
        #[arg(long, value_name = "N")]
        beta_max: Option<u32>,
        /// Reduce integer coefficients modulo this prime
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
        /// Print and re-verify the cofactors of a certificate
        #[arg(long)]
        witness: bool,
    },
    /// The instance F = (X_1⋯X_s)^t - Σ A_i X_i^{st} over ZZ[A_1..A_s]
    WeakMc {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: u32,
    },
}

/// The text to print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

struct Output {
    machine: Report,
    human: String,
    code: i32,
}

fn load(path: &Path) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_problem(&text)
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn decision_code(d: Decision) -> i32 {
    match d {
        Decision::Yes => EXIT_OK,
        Decision::No => EXIT_NO,
        Decision::Undecided => EXIT_UNDECIDED,
    }
}

fn ring_summary(spec: &GradedRingSpec) -> Report {
    let mut r = Report::new();
    r.value("coefficients", spec.coeff());
    let vars: Vec<String> = spec
        .u_vars()
        .iter()
        .zip(spec.weights())
        .map(|(v, w)| format!("{v}:{w}"))
        .collect();
    r.value("variables", vars.join(", "));
    r.value("delta", spec.delta());
    r
}

fn generators_block(spec: &GradedRingSpec, names: &[String]) -> Report {
    let mut r = Report::new();
    for (name, f) in names.iter().zip(spec.generators()) {
        r.value(name.clone(), spec.display_generator(f));
    }
    r
}

fn header(command: &str, source: &str, spec: &GradedRingSpec, names: &[String]) -> Report {
    let mut r = Report::new();
    r.value("command", command).value("source", source);
    r.block("ring", ring_summary(spec));
    r.block("generators", generators_block(spec, names));
    r
}

fn human_header(source: &str, spec: &GradedRingSpec, names: &[String]) -> String {
    let mut out = format!(
        "{source}: R_0 = {}, graded variables {} (Δ = {})\n",
        spec.coeff(),
        spec.u_vars()
            .iter()
            .zip(spec.weights())
            .map(|(v, w)| format!("{v}:{w}"))
            .collect::<Vec<_>>()
            .join(", "),
        spec.delta()
    );
    if names.is_empty() {
        out.push_str("I = 0\n");
    }
    for (name, f) in names.iter().zip(spec.generators()) {
        out.push_str(&format!("  {name} = {}\n", spec.display_generator(f)));
    }
    out
}

/// Descending by leading monomial, for stable ideal listings.
fn sorted_ideal(ring: &CoefficientRing, gens: &[R0Element]) -> Result<R0Ideal> {
    let mut g = gens.to_vec();
    g.sort_by(|a, b| {
        let la = a.leading_term().map(|(m, _)| m.clone());
        let lb = b.leading_term().map(|(m, _)| m.clone());
        lb.cmp(&la)
    });
    R0Ideal::new(ring.clone(), g)
}

fn coker_text(c: &ComponentPresentation, ring: &CoefficientRing) -> Result<String> {
    Ok(match &c.report {
        CokerReport::ZeroModule => "0".into(),
        CokerReport::FreeOfRank(1) => "R_0".into(),
        CokerReport::FreeOfRank(n) => format!("R_0^{n}"),
        CokerReport::IntegerInvariantFactors { free_rank, torsion } => {
            let mut parts = Vec::new();
            match free_rank {
                0 => {}
                1 => parts.push("ZZ".to_string()),
                n => parts.push(format!("ZZ^{n}")),
            }
            parts.extend(torsion.iter().map(|k| format!("ZZ/({k})")));
            parts.join(" ⊕ ")
        }
        CokerReport::MinorIdeal { .. } if c.matrix.rows() == 1 => {
            format!("R_0/{}", sorted_ideal(ring, c.matrix.entries().row(0))?)
        }
        CokerReport::MinorIdeal { .. } => "nonzero".into(),
        CokerReport::Undecided { reason } => format!("undecided ({reason})"),
    })
}

fn coker_machine(c: &ComponentPresentation, ring: &CoefficientRing) -> Result<Report> {
    let mut r = Report::new();
    match &c.report {
        CokerReport::ZeroModule => {
            r.value("kind", "zero");
        }
        CokerReport::FreeOfRank(n) => {
            r.value("kind", "free").value("rank", n);
        }
        CokerReport::IntegerInvariantFactors { free_rank, torsion } => {
            let t: Vec<String> = torsion.iter().map(|k| k.to_string()).collect();
            r.value("kind", "invariant_factors")
                .value("free_rank", free_rank)
                .value("torsion", t.join(", "));
        }
        CokerReport::MinorIdeal { minors } => {
            r.value("kind", "nonzero");
            match minors {
                Some(m) => {
                    r.value("t", m.t)
                        .value("minor_ideal", sorted_ideal(ring, &m.generators)?);
                }
                None => {
                    r.value("minor_ideal", "over budget");
                }
            }
        }
        CokerReport::Undecided { reason } => {
            r.value("kind", "undecided").value("reason", reason);
        }
    }
    r.value("description", coker_text(c, ring)?);
    Ok(r)
}

fn matrix_machine(c: &ComponentPresentation, spec: &GradedRingSpec) -> Report {
    let m = &c.matrix;
    let mut r = Report::new();
    r.value("rows", m.rows()).value("columns", m.cols());
    let cols: Vec<String> = m
        .columns()
        .iter()
        .map(|l| format!("f{}:{}", l.generator + 1, l.monomial))
        .collect();
    r.value("column_labels", cols.join(" "));
    let mut entries = Report::new();
    for (i, alpha) in m.row_basis().elements().iter().enumerate() {
        let row: Vec<String> = m.entries().row(i).iter().map(|a| spec.display_element(a)).collect();
        entries.value(alpha.to_string(), row.join(", "));
    }
    r.block("entries", entries);
    r
}

struct Ctx {
    budget: u64,
}

impl Ctx {
    fn budget_for(&self, explicit: Option<u64>, p: &ProblemFile) -> u64 {
        explicit.or(p.options.minor_budget).unwrap_or(self.budget)
    }
}

fn cmd_content(source: &str, p: &ProblemFile) -> Result<Output> {
    let spec = p.spec()?;
    let names = generator_names(p);
    let c = content_ideal(&spec);
    let unit = is_unit_ideal(&c);
    let mut m = header("content", source, &spec, &names);
    m.value("content", &c).value("unit_ideal", unit);
    let mut h = human_header(source, &spec, &names);
    h.push_str(&format!("c(I) = {c}\n"));
    h.push_str(match unit {
        Decision::Yes => "c(I) is the unit ideal\n",
        Decision::No => "c(I) is a proper ideal\n",
        Decision::Undecided => "could not decide whether c(I) is the unit ideal\n",
    });
    Ok(Output {
        machine: m,
        human: h,
        code: if unit == Decision::Undecided {
            EXIT_UNDECIDED
        } else {
            EXIT_OK
        },
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Vanishes => EXIT_OK,
        Verdict::NonVanishing => EXIT_NO,
        Verdict::Undecided => EXIT_UNDECIDED,
    }
}

fn cmd_vanishes(source: &str, p: &ProblemFile, support_only: bool) -> Result<Output> {
    let spec = p.spec()?;
    let names = generator_names(p);
    let rep = vanishes(&spec);
    let mut m = header(if support_only { "support" } else { "vanishes" }, source, &spec, &names);
    m.value("content", &rep.content)
        .value("verdict", rep.verdict)
        .value("support", &rep.support);
    let mut h = human_header(source, &spec, &names);
    h.push_str(&format!("c(I) = {}\n", rep.content));
    h.push_str(&match rep.verdict {
        Verdict::Vanishes => "H^s_{R_+}(R) = 0: the content ideal is the unit ideal\n".to_string(),
        Verdict::NonVanishing => format!(
            "H^s_{{R_+}}(R) ≠ 0: the content ideal is proper\nsupport: {}\n",
            rep.support
        ),
        Verdict::Undecided => "undecided: cannot tell whether the content ideal is the unit ideal\n".to_string(),
    });
    let code = match (support_only, rep.verdict) {
        (_, Verdict::Undecided) => EXIT_UNDECIDED,
        (true, _) => EXIT_OK,
        (false, v) => verdict_code(v),
    };
    Ok(Output {
        machine: m,
        human: h,
        code,
    })
}

fn cmd_component(source: &str, p: &ProblemFile, d: u64, budget: u64) -> Result<Output> {
    let spec = p.spec()?;
    let names = generator_names(p);
    let c = component(&spec, d, budget)?;
    let mut m = header("component", source, &spec, &names);
    m.value("degree", d);
    m.block("matrix", matrix_machine(&c, &spec));
    m.block("cokernel", coker_machine(&c, spec.coeff())?);
    let mut h = human_header(source, &spec, &names);
    h.push_str(&format!(
        "M(d = {d}) is {}×{} over {}\n",
        c.matrix.rows(),
        c.matrix.cols(),
        spec.coeff()
    ));
    h.push_str(&c.matrix.to_text(&spec));
    h.push_str(&format!("cokernel ≅ {}\n", coker_text(&c, spec.coeff())?));
    let code = if c.report.is_zero().is_none() {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    };
    Ok(Output {
        machine: m,
        human: h,
        code,
    })
}

fn window_end(explicit: Option<u64>, p: &ProblemFile, spec: &GradedRingSpec) -> u64 {
    explicit.or(p.options.dmax).unwrap_or(spec.default_window().1)
}

fn cmd_gap_scan(source: &str, p: &ProblemFile, dmax: Option<u64>, budget: u64) -> Result<Output> {
    let spec = p.spec()?;
    let names = generator_names(p);
    let dmax = window_end(dmax, p, &spec);
    let scan = gap_scan(&spec, dmax, budget)?;
    let mut m = header("gap-scan", source, &spec, &names);
    m.value("dmax", dmax);
    let mut rows = Report::new();
    let mut h = human_header(source, &spec, &names);
    for e in &scan {
        rows.value(format!("d={}", e.d), e.vanishes);
        h.push_str(&format!(
            "  d = {:>3}: {}\n",
            e.d,
            match e.vanishes {
                Decision::Yes => "zero",
                Decision::No => "nonzero",
                Decision::Undecided => "undecided",
            }
        ));
    }
    m.block("vanishes", rows);
    let decided: Vec<Decision> = scan
        .iter()
        .map(|e| e.vanishes)
        .filter(|v| *v != Decision::Undecided)
        .collect();
    let constant = decided.windows(2).all(|w| w[0] == w[1]);
    let undecided = decided.len() < scan.len();
    m.value("constant", if constant { "yes" } else { "no" });
    h.push_str(if constant {
        "verdicts agree across all scanned degrees\n"
    } else {
        "verdicts differ between degrees\n"
    });
    let code = if !constant {
        EXIT_NO
    } else if undecided {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    };
    Ok(Output {
        machine: m,
        human: h,
        code,
    })
}

fn cmd_maximal_rank(source: &str, p: &ProblemFile, dmax: Option<u64>) -> Result<Output> {
    let spec = p.spec()?;
    let names = generator_names(p);
    let dmax = window_end(dmax, p, &spec);
    let mut m = header("maximal-rank", source, &spec, &names);
    m.value("dmax", dmax);
    let mut h = human_header(source, &spec, &names);
    let mut all = true;
    let mut per_gen = Report::new();
    for (name, f) in names.iter().zip(spec.generators()) {
        let checks = verify_maximal_rank(f, &spec, spec.delta()..=dmax)?;
        let mut block = Report::new();
        for c in &checks {
            all &= c.passed();
            block.value(
                format!("d={}", c.d),
                format!(
                    "{} rank={} rows={} cols={} witness={}",
                    if c.passed() { "pass" } else { "FAIL" },
                    c.rank,
                    c.rows,
                    c.cols,
                    if c.witness_triangular { "triangular" } else { "missing" }
                ),
            );
            h.push_str(&format!(
                "  {name}, d = {:>3}: rank {} of {} rows ({} columns) {}\n",
                c.d,
                c.rank,
                c.rows,
                c.cols,
                if c.passed() { "ok" } else { "FAILED" }
            ));
        }
        per_gen.block(name.clone(), block);
    }
    m.block("checks", per_gen);
    m.value("passed", if all { "yes" } else { "no" });
    h.push_str(if all {
        "every matrix has maximal rank\n"
    } else {
        "some matrix is rank deficient\n"
    });
    Ok(Output {
        machine: m,
        human: h,
        code: if all { EXIT_OK } else { EXIT_NO },
    })
}

fn cmd_content_radical(source: &str, p: &ProblemFile, d: Option<u64>, budget: u64) -> Result<Output> {
    let spec = p.spec()?;
    let names = generator_names(p);
    let d = d.unwrap_or(spec.delta());
    let rep = verify_content_in_radical(&spec, d, budget)?;
    let mut m = header("content-radical", source, &spec, &names);
    m.value("degree", d).value("t", rep.t).value("minor_ideal", &rep.minors);
    let mut checks = Report::new();
    let mut h = human_header(source, &spec, &names);
    h.push_str(&format!("d = {d}, t = {}, I_d = {}\n", rep.t, rep.minors));
    for c in &rep.checks {
        let a = spec.display_element(&c.generator);
        checks.value(a.clone(), c.in_radical);
        h.push_str(&format!("  {a} ∈ √I_d: {}\n", c.in_radical));
    }
    m.block("in_radical", checks);
    let passed = rep.passed();
    m.value("passed", passed);
    Ok(Output {
        machine: m,
        human: h,
        code: decision_code(passed),
    })
}

fn cmd_top_iso(source: &str, p: &ProblemFile) -> Result<Output> {
    let spec = p.spec()?;
    let names = generator_names(p);
    let result = top_component_iso_check(&spec)?;
    let c = content_ideal(&spec);
    let mut m = header("top-iso", source, &spec, &names);
    m.value("degree", spec.delta())
        .value("content", &c)
        .value("isomorphic", result);
    let mut h = human_header(source, &spec, &names);
    h.push_str(&format!(
        "degree -{} component ≅ R_0/c(I) = R_0/{c}: {result}\n",
        spec.delta()
    ));
    Ok(Output {
        machine: m,
        human: h,
        code: decision_code(result),
    })
}

fn charp_ring(p: &ProblemFile, prime: Option<u64>) -> Result<(CoefficientRing, Vec<R0Element>)> {
    let flat = p.flat_ring();
    let field = match (p.coeff.base(), prime) {
        (ScalarRing::PrimeField(q), Some(given)) if q != given => {
            return Err(Error::RingMismatch(format!(
                "file is over GF({q}) but --prime {given} was given"
            )))
        }
        (ScalarRing::PrimeField(q), _) => ScalarRing::PrimeField(q),
        (_, Some(given)) => ScalarRing::prime_field(given)?,
        (other, None) => {
            return Err(Error::RingMismatch(format!(
                "the file is over {other}; pass --prime to reduce it to a prime field"
            )))
        }
    };
    let ring = flat.with_base(field);
    let gens = p
        .generators
        .iter()
        .map(|(_, g)| g.map_base(field))
        .collect::<Result<Vec<_>>>()?;
    Ok((ring, gens))
}

fn cmd_charp(
    source: &str,
    p: &ProblemFile,
    alpha_max: Option<u32>,
    beta_max: Option<u32>,
    prime: Option<u64>,
    witness: bool,
) -> Result<Output> {
    let (ring, gens) = charp_ring(p, prime)?;
    let alpha_max = alpha_max.or(p.options.alpha_max).unwrap_or(DEFAULT_CHARP_BOUND);
    let beta_max = beta_max.or(p.options.beta_max).unwrap_or(DEFAULT_CHARP_BOUND);
    let names = generator_names(p);
    let mut m = Report::new();
    m.value("command", "charp").value("source", source).value("ring", &ring);
    let mut gblock = Report::new();
    let mut h = format!("{source}: over {ring}\n");
    for (name, g) in names.iter().zip(&gens) {
        gblock.value(name.clone(), ring.display(g));
        h.push_str(&format!("  {name} = {}\n", ring.display(g)));
    }
    m.block("generators", gblock);
    m.value("bounds", format!("alpha<={alpha_max}, beta<={beta_max}"));
    let outcome = charp_vanishing_search(&gens, &ring, alpha_max, beta_max, witness)?;
    let code = match &outcome {
        CharpOutcome::Found(cert) => {
            let n = cert.alpha + cert.beta;
            m.value("result", "found")
                .value("alpha", cert.alpha)
                .value("beta", cert.beta);
            h.push_str(&format!(
                "certificate: (α, β) = ({}, {}), (f_1⋯f_s)^{} ∈ (f_1^{n}, ..., f_s^{n})\n",
                cert.alpha, cert.beta, cert.alpha
            ));
            if let Some(w) = &cert.witness {
                let mut wb = Report::new();
                for (name, g) in names.iter().zip(w) {
                    wb.value(format!("g_{name}"), ring.display(g));
                    h.push_str(&format!("  cofactor of {name}^{n}: {}\n", ring.display(g)));
                }
                m.block("witness", wb);
                let ok = verify_certificate(&gens, &ring, cert)?;
                let lifted = frobenius_lift(&ring, cert)?;
                let lifted_ok = verify_certificate(&gens, &ring, &lifted)?;
                m.value("witness_verified", Decision::from_bool(ok));
                m.value(
                    "frobenius_lift",
                    format!("({}, {}) {}", lifted.alpha, lifted.beta, Decision::from_bool(lifted_ok)),
                );
                h.push_str(&format!(
                    "witness re-verified by expansion: {}\nlifted to ({}, {}): {}\n",
                    Decision::from_bool(ok),
                    lifted.alpha,
                    lifted.beta,
                    Decision::from_bool(lifted_ok)
                ));
            }
            h.push_str("H^s_I(R) = 0\n");
            EXIT_OK
        }
        CharpOutcome::NotFound { .. } => {
            m.value("result", "not_found");
            h.push_str("no certificate within the bounds (inconclusive)\n");
            EXIT_NO
        }
    };
    Ok(Output {
        machine: m,
        human: h,
        code,
    })
}

fn cmd_weak_mc(s: usize, t: u32, budget: u64) -> Result<Output> {
    let inst = weak_mc_instance(s, t)?;
    let spec = &inst.spec;
    let f = spec.display_generator(&spec.generators()[0]);
    let rep = vanishes(spec);
    let mut m = Report::new();
    m.value("command", "weak-mc").value("s", s).value("t", t);
    m.block("ring", ring_summary(spec));
    m.value("F", &f).value("degree", spec.degrees()[0]);
    m.value("content", &rep.content).value("verdict", rep.verdict);
    let mut h = format!("R_0 = {}, F = {f} (degree {})\n", spec.coeff(), spec.degrees()[0]);
    h.push_str(&format!("c(F) = {}\n", rep.content));
    let (lo, hi) = spec.default_window();
    let mut comps = Report::new();
    let mut all_zero = true;
    for d in lo..=hi {
        let c = component(spec, d, budget)?;
        let z = c.report.vanishing();
        all_zero &= z == Decision::Yes;
        comps.value(format!("d={d}"), z);
    }
    m.block("components_vanish", comps);
    h.push_str(&match rep.verdict {
        Verdict::Vanishes => "H^s_{R_+}(R) = 0: the content ideal is the unit ideal\n".to_string(),
        v => format!("verdict: {v}\n"),
    });
    h.push_str(&format!(
        "components d = {lo}..{hi}: {}\n",
        if all_zero { "all zero" } else { "not all zero" }
    ));
    let code = match rep.verdict {
        Verdict::Vanishes if !all_zero => EXIT_NO,
        v => verdict_code(v),
    };
    Ok(Output {
        machine: m,
        human: h,
        code,
    })
}

fn generator_names(p: &ProblemFile) -> Vec<String> {
    p.generators.iter().map(|(n, _)| n.clone()).collect()
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let ctx = Ctx {
        budget: cli.minor_budget.unwrap_or(DEFAULT_MINOR_BUDGET),
    };
    let explicit = cli.minor_budget;
    let with_file = |file: &Path| -> Result<(String, ProblemFile)> { Ok((file_name(file), load(file)?)) };
    match &cli.command {
        Command::Content { file } => {
            let (src, p) = with_file(file)?;
            cmd_content(&src, &p)
        }
        Command::Vanishes { file } => {
            let (src, p) = with_file(file)?;
            cmd_vanishes(&src, &p, false)
        }
        Command::Support { file } => {
            let (src, p) = with_file(file)?;
            cmd_vanishes(&src, &p, true)
        }
        Command::Component { file, degree } => {
            let (src, p) = with_file(file)?;
            cmd_component(&src, &p, *degree, ctx.budget_for(explicit, &p))
        }
        Command::GapScan { file, dmax } => {
            let (src, p) = with_file(file)?;
            cmd_gap_scan(&src, &p, *dmax, ctx.budget_for(explicit, &p))
        }
        Command::MaximalRank { file, dmax } => {
            let (src, p) = with_file(file)?;
            cmd_maximal_rank(&src, &p, *dmax)
        }
        Command::ContentRadical { file, degree } => {
            let (src, p) = with_file(file)?;
            cmd_content_radical(&src, &p, *degree, ctx.budget_for(explicit, &p))
        }
        Command::TopIso { file } => {
            let (src, p) = with_file(file)?;
            cmd_top_iso(&src, &p)
        }
        Command::Charp {
            file,
            alpha_max,
            beta_max,
            prime,
            witness,
        } => {
            let (src, p) = with_file(file)?;
            cmd_charp(&src, &p, *alpha_max, *beta_max, *prime, *witness)
        }
        Command::WeakMc { s, t } => cmd_weak_mc(*s, *t, ctx.budget),
    }
}

/// Runs a parsed command line. Errors are reported on stdout-independent
/// terms: the caller prints `Err` messages to stderr with exit code 2.
pub fn run(cli: &Cli) -> std::result::Result<Outcome, Error> {
    let out = dispatch(cli)?;
    Ok(Outcome {
        stdout: if cli.machine { out.machine.render() } else { out.human },
        code: out.code,
    })
}
