//! Graded components of H^s_{R_+}(R) as cokernels, the content criterion
//! for vanishing, and the checks built on top of them.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{CoefficientRing, GradedRingSpec, Monomial, R0Element, SPolynomial, ScalarRing};
use crate::error::{Error, Result};
use crate::ideal::{content_ideal, ideal_member, is_unit_ideal, radical_member, Decision, R0Ideal};
use crate::invpoly::{basis_nonempty, InverseMonomial};
use crate::linalg::{
    cokernel_is_zero_with_candidates, minor_ideal, rank_ff, smith_normal_form, submatrix_count, CokernelVanishing,
    MinorIdealResult,
};
use crate::presentation::{build_multi, build_single, ComponentMatrix};

/// What is known about Coker M(f_1, ..., f_r; d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CokerReport {
    ZeroModule,
    FreeOfRank(usize),
    /// ℤ^free_rank ⊕ ⊕ ℤ/(k) over the listed torsion factors.
    IntegerInvariantFactors {
        free_rank: usize,
        torsion: Vec<BigInt>,
    },
    /// A nonzero cokernel over a polynomial ring. Carries the ideal of
    /// t×t minors, t the rank, when it fits the minor budget.
    MinorIdeal {
        minors: Option<MinorIdealResult>,
    },
    Undecided {
        reason: String,
    },
}

impl CokerReport {
    /// `Some(true)` iff the component vanishes, `None` when undecided.
    pub fn is_zero(&self) -> Option<bool> {
        match self {
            CokerReport::ZeroModule => Some(true),
            CokerReport::FreeOfRank(n) => Some(*n == 0),
            CokerReport::IntegerInvariantFactors { free_rank, torsion } => Some(*free_rank == 0 && torsion.is_empty()),
            CokerReport::MinorIdeal { .. } => Some(false),
            CokerReport::Undecided { .. } => None,
        }
    }

    pub fn vanishing(&self) -> Decision {
        match self.is_zero() {
            Some(b) => Decision::from_bool(b),
            None => Decision::Undecided,
        }
    }
}

/// The degree −d component presented as a cokernel.
#[derive(Clone, Debug)]
pub struct ComponentPresentation {
    pub d: u64,
    pub matrix: ComponentMatrix,
    pub report: CokerReport,
}

fn nonzero_minors(m: &ComponentMatrix, ring: &CoefficientRing, budget: u64) -> Option<MinorIdealResult> {
    let entries = m.entries();
    let rows = entries.rows();
    // Maximal minors first: the rank is usually |B(d)|.
    if submatrix_count(rows, entries.cols(), rows) <= budget as u128 {
        let full = minor_ideal(entries, rows, &ring.one(), budget).ok()?;
        if !full.generators.is_empty() {
            return Some(full);
        }
    }
    if submatrix_count(rows, entries.cols(), 1) > budget as u128 {
        return None;
    }
    let t = rank_ff(entries);
    minor_ideal(entries, t, &ring.one(), budget).ok()
}

/// Columns of U^{ν−λ} for ν running over B(d), for the generator `g`.
fn shift_columns(m: &ComponentMatrix, g: usize, lambda: &Monomial) -> Option<Vec<usize>> {
    m.row_basis()
        .elements()
        .iter()
        .map(|nu| {
            let beta: Vec<i64> = nu
                .exponents()
                .iter()
                .zip(lambda.exponents())
                .map(|(&n, &l)| n - l as i64)
                .collect();
            let beta = InverseMonomial::new(beta)?;
            m.columns().iter().position(|c| c.generator == g && c.monomial == beta)
        })
        .collect()
}

/// Square column sets U^{ν−λ}, one per term λ of each generator: first the
/// lex-extreme terms, whose blocks are triangular, then the rest.
fn shift_candidates(spec: &GradedRingSpec, m: &ComponentMatrix) -> Vec<Vec<usize>> {
    let mut extremes = Vec::new();
    let mut middles = Vec::new();
    for (g, f) in spec.generators().iter().enumerate() {
        let n = f.terms().len();
        for (k, (lambda, _)) in f.terms().iter().enumerate().rev() {
            let Some(cols) = shift_columns(m, g, lambda) else {
                continue;
            };
            if k == 0 || k + 1 == n {
                extremes.push(cols);
            } else {
                middles.push(cols);
            }
        }
    }
    extremes.extend(middles);
    extremes
}

/// Builds M(f_1, ..., f_r; d) and classifies its cokernel.
pub fn component(spec: &GradedRingSpec, d: u64, minor_budget: u64) -> Result<ComponentPresentation> {
    classify(spec, d, minor_budget, true)
}

/// With `describe` unset, nonzero cokernels over polynomial rings skip the
/// minor ideal and carry `minors: None`.
fn classify(spec: &GradedRingSpec, d: u64, minor_budget: u64, describe: bool) -> Result<ComponentPresentation> {
    let matrix = build_multi(spec, d);
    let ring = spec.coeff();
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let report = if rows == 0 {
        CokerReport::ZeroModule
    } else if cols == 0 {
        CokerReport::FreeOfRank(rows)
    } else if !ring.is_polynomial() {
        match ring.base() {
            ScalarRing::Integers => {
                let snf = smith_normal_form(matrix.entries(), false)?;
                let torsion = snf.torsion();
                if snf.coker_is_zero() {
                    CokerReport::ZeroModule
                } else if torsion.is_empty() {
                    CokerReport::FreeOfRank(snf.coker_free_rank())
                } else {
                    CokerReport::IntegerInvariantFactors {
                        free_rank: snf.coker_free_rank(),
                        torsion,
                    }
                }
            }
            _ => match rows - rank_ff(matrix.entries()) {
                0 => CokerReport::ZeroModule,
                n => CokerReport::FreeOfRank(n),
            },
        }
    } else {
        match cokernel_is_zero_with_candidates(matrix.entries(), ring, minor_budget, &shift_candidates(spec, &matrix))?
        {
            CokernelVanishing::Zero => CokerReport::ZeroModule,
            CokernelVanishing::NonZero => CokerReport::MinorIdeal {
                minors: describe.then(|| nonzero_minors(&matrix, ring, minor_budget)).flatten(),
            },
            CokernelVanishing::Undecided { .. } => CokerReport::Undecided {
                reason: format!("unit test for maximal minors over {ring} is inconclusive"),
            },
        }
    };
    Ok(ComponentPresentation { d, matrix, report })
}

/// Outcome of the content criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Vanishes,
    NonVanishing,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Vanishes => "Vanishes",
            Verdict::NonVanishing => "NonVanishing",
            Verdict::Undecided => "Undecided",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub content: R0Ideal,
    pub verdict: Verdict,
    /// `V(c(I)R + R_+)` spelled out, or `empty` when H vanishes.
    pub support: String,
}

/// H^s_{R_+}(R) = 0 iff c(I) = R_0; otherwise its support is
/// V(c(I)R + R_+).
pub fn vanishes(spec: &GradedRingSpec) -> SupportReport {
    let content = content_ideal(spec);
    let verdict = match is_unit_ideal(&content) {
        Decision::Yes => Verdict::Vanishes,
        Decision::No => Verdict::NonVanishing,
        Decision::Undecided => Verdict::Undecided,
    };
    let support = match verdict {
        Verdict::Vanishes => "empty".to_string(),
        _ => format!("V({}R + R_+)", content.display()),
    };
    SupportReport {
        content,
        verdict,
        support,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapScanEntry {
    pub d: u64,
    pub vanishes: Decision,
}

/// Component-level vanishing for every supported d in [Δ, d_max].
pub fn gap_scan(spec: &GradedRingSpec, d_max: u64, minor_budget: u64) -> Result<Vec<GapScanEntry>> {
    if d_max < spec.delta() {
        return Err(Error::InvalidSpec(format!(
            "scan bound {d_max} is below the top degree {}",
            spec.delta()
        )));
    }
    let mut out = Vec::new();
    for d in spec.delta()..=d_max {
        if basis_nonempty(d, spec.weights()) {
            let c = classify(spec, d, minor_budget, false)?;
            out.push(GapScanEntry {
                d,
                vanishes: c.report.vanishing(),
            });
        }
    }
    Ok(out)
}

/// Compares Coker M(...; Δ), a quotient of R_0 by the ideal of its single
/// row, with R_0/c(I): the two ideals must contain each other's generators.
pub fn top_component_iso_check(spec: &GradedRingSpec) -> Result<Decision> {
    let m = build_multi(spec, spec.delta());
    debug_assert_eq!(m.rows(), 1);
    let row = R0Ideal::new(spec.coeff().clone(), m.entries().row(0).to_vec())?;
    let content = content_ideal(spec);
    let mut result = Decision::Yes;
    for (a, j) in content
        .generators()
        .iter()
        .map(|a| (a, &row))
        .chain(row.generators().iter().map(|a| (a, &content)))
    {
        match ideal_member(a, j)? {
            Decision::No => return Ok(Decision::No),
            Decision::Undecided => result = Decision::Undecided,
            Decision::Yes => {}
        }
    }
    Ok(result)
}

/// One degree of the maximal-rank check for a single generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalRankCheck {
    pub d: u64,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Column of U^{ν−λ_0} for each row ν, λ_0 the lex-smallest exponent of f.
    pub witness_columns: Vec<usize>,
    /// The witness columns form a triangular block with diagonal a_{λ_0}.
    pub witness_triangular: bool,
}

impl MaximalRankCheck {
    pub fn passed(&self) -> bool {
        self.rank == self.rows && self.witness_triangular
    }
}

/// Checks rank M(f; d) = |B(d)| for each supported d in `degrees`.
pub fn verify_maximal_rank(
    f: &SPolynomial,
    spec: &GradedRingSpec,
    degrees: impl IntoIterator<Item = u64>,
) -> Result<Vec<MaximalRankCheck>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (lambda0, a0) = f.terms().last().expect("nonzero").clone();
    let mut out = Vec::new();
    for d in degrees {
        if !basis_nonempty(d, spec.weights()) {
            continue;
        }
        let m = build_single(f, d, spec)?;
        let (witness_columns, witness_triangular) = triangular_witness(&m, &lambda0, &a0);
        out.push(MaximalRankCheck {
            d,
            rows: m.rows(),
            cols: m.cols(),
            rank: rank_ff(m.entries()),
            witness_columns,
            witness_triangular,
        });
    }
    Ok(out)
}

fn triangular_witness(m: &ComponentMatrix, lambda0: &Monomial, a0: &R0Element) -> (Vec<usize>, bool) {
    let mut cols = Vec::new();
    let mut ok = true;
    for (i, nu) in m.row_basis().elements().iter().enumerate() {
        let beta: Vec<i64> = nu
            .exponents()
            .iter()
            .zip(lambda0.exponents())
            .map(|(&n, &l)| n - l as i64)
            .collect();
        let beta = InverseMonomial::new(beta).expect("shifting down keeps exponents negative");
        let Some(j) = m.columns().iter().position(|c| c.monomial == beta) else {
            return (cols, false);
        };
        cols.push(j);
        let e = m.entries();
        ok &= e.get(i, j) == a0 && (i + 1..m.rows()).all(|k| e.get(k, j).is_zero());
    }
    (cols, ok)
}

/// Radical test of one content generator against I_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalCheck {
    pub generator: R0Element,
    pub in_radical: Decision,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentRadicalReport {
    pub d: u64,
    pub t: usize,
    pub minors: R0Ideal,
    pub checks: Vec<RadicalCheck>,
}

impl ContentRadicalReport {
    pub fn passed(&self) -> Decision {
        if self.checks.iter().any(|c| c.in_radical == Decision::No) {
            Decision::No
        } else if self.checks.iter().all(|c| c.in_radical == Decision::Yes) {
            Decision::Yes
        } else {
            Decision::Undecided
        }
    }
}

/// Tests every content generator for membership in √I_d, I_d the ideal of
/// t×t minors of M(f_1, ..., f_r; d) with t its rank.
pub fn verify_content_in_radical(spec: &GradedRingSpec, d: u64, minor_budget: u64) -> Result<ContentRadicalReport> {
    let m = build_multi(spec, d);
    let ring = spec.coeff();
    let t = rank_ff(m.entries());
    let minors = if t == 0 {
        R0Ideal::new(ring.clone(), vec![ring.one()])?
    } else {
        R0Ideal::new(
            ring.clone(),
            minor_ideal(m.entries(), t, &ring.one(), minor_budget)?.generators,
        )?
    };
    let mut checks = Vec::new();
    for a in content_ideal(spec).generators() {
        checks.push(RadicalCheck {
            generator: a.clone(),
            in_radical: radical_member(a, &minors)?,
        });
    }
    Ok(ContentRadicalReport { d, t, minors, checks })
}

/// R_0 = ℤ[A_1..A_s], X_1..X_s of weight 1, and the single generator
/// F = (X_1⋯X_s)^t − Σ A_i X_i^{st}.
#[derive(Clone, Debug)]
pub struct WeakMcInstance {
    pub s: usize,
    pub t: u32,
    pub spec: GradedRingSpec,
}

pub fn weak_mc_instance(s: usize, t: u32) -> Result<WeakMcInstance> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidSpec("s and t must be positive".into()));
    }
    let z = ScalarRing::Integers;
    let coeff = CoefficientRing::polynomial(z, (1..=s).map(|i| format!("A{i}")).collect())?;
    let st = s as u32 * t;
    let mut terms = vec![(Monomial::from_exponents(vec![t; s]), coeff.one())];
    for i in 0..s {
        let mut e = vec![0; s];
        e[i] = st;
        terms.push((Monomial::from_exponents(e), coeff.var(i).neg()));
    }
    let f = SPolynomial::from_terms(z, s, s, terms);
    let spec = GradedRingSpec::new(coeff, (1..=s).map(|i| format!("X{i}")).collect(), vec![1; s], vec![f])?;
    debug_assert_eq!(spec.degrees(), &[st as u64]);
    Ok(WeakMcInstance { s, t, spec })
}
