use crate::algebra::{CoefficientRing, R0Element, ScalarRing};
use crate::error::{Error, Result};
use crate::ideal::groebner::ModuleBasis;
use crate::ideal::{is_unit_ideal, Decision, R0Ideal};
use crate::linalg::{determinant, minor_ideal, rank_ff, smith_normal_form, Matrix, MinorIdealResult};

/// Whether Coker(M) = 0 as an R_0-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CokernelVanishing {
    Zero,
    NonZero,
    /// Not decided; carries the maximal minors of the reduced matrix when
    /// they fit the budget.
    Undecided {
        minor_ideal: Option<MinorIdealResult>,
    },
}

/// Repeatedly uses a unit entry to clear its row by column operations and
/// then drops that row and column. The cokernel is unchanged up to
/// isomorphism. Among unit entries the sparsest column is chosen.
pub fn reduce_unit_pivots(m: &Matrix<R0Element>) -> Matrix<R0Element> {
    let mut rows: Vec<Vec<R0Element>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut ncols = m.cols();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for j in 0..ncols {
            let nnz = rows.iter().filter(|r| !r[j].is_zero()).count();
            if best.is_some_and(|(_, _, b)| b <= nnz) {
                continue;
            }
            if let Some(i) = rows.iter().position(|r| r[j].is_unit()) {
                best = Some((i, j, nnz));
            }
        }
        let Some((pi, pj, _)) = best else {
            break;
        };
        let inv = rows[pi][pj]
            .constant_value()
            .and_then(|u| u.inverse())
            .expect("unit entry");
        let pivot_col: Vec<R0Element> = rows.iter().map(|r| r[pj].clone()).collect();
        for k in 0..ncols {
            if k == pj || rows[pi][k].is_zero() {
                continue;
            }
            let factor = rows[pi][k].scale(&inv);
            for (r, p) in rows.iter_mut().zip(&pivot_col) {
                if !p.is_zero() {
                    r[k] = r[k].sub(&p.mul(&factor));
                }
            }
        }
        rows.remove(pi);
        for r in rows.iter_mut() {
            r.remove(pj);
        }
        ncols -= 1;
    }
    let n = rows.len();
    Matrix::from_rows(ncols, rows).unwrap_or_else(|_| unreachable!("{n} rows of equal length"))
}

fn entry_ideal(m: &Matrix<R0Element>, ring: &CoefficientRing) -> Result<R0Ideal> {
    R0Ideal::new(ring.clone(), m.entries().cloned().collect())
}

fn columns(m: &Matrix<R0Element>) -> Vec<Vec<R0Element>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Module Gröbner test over a field: Coker = 0 iff the columns span R_0^n.
fn spans_everything(m: &Matrix<R0Element>, base: ScalarRing, nvars: usize) -> bool {
    ModuleBasis::compute(&columns(m), m.rows(), base, nvars, false).is_everything()
}

/// A nonzero determinant, replaced by its base when it is ±a^n for the
/// common diagonal entry a. Both generate the same radical.
fn minor_root(sub: &Matrix<R0Element>, det: R0Element) -> R0Element {
    let a = sub.get(0, 0);
    let n = sub.rows();
    if (1..n).all(|i| sub.get(i, i) == a) {
        let p = a.pow(n as u32);
        if p == det || p.neg() == det {
            return a.clone();
        }
    }
    det
}

/// Whether the maximal minors on the given column sets generate the unit
/// ideal, which proves Coker(M) = 0. Sets are tried in order and the test
/// stops at the first success.
fn candidate_minors_unit(m: &Matrix<R0Element>, ring: &CoefficientRing, candidates: &[Vec<usize>]) -> Result<bool> {
    let rows: Vec<usize> = (0..m.rows()).collect();
    let mut found = Vec::new();
    for cols in candidates.iter().filter(|c| c.len() == m.rows()) {
        let sub = m.submatrix(&rows, cols);
        let det = determinant(&sub, &ring.one());
        if det.is_zero() {
            continue;
        }
        found.push(minor_root(&sub, det));
        if is_unit_ideal(&R0Ideal::new(ring.clone(), found.clone())?) == Decision::Yes {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decides Coker(M) = 0. Exact over ℤ, fields, and polynomial rings over a
/// field; over ℤ[A] it falls back to maximal minors within `budget`.
pub fn cokernel_is_zero(m: &Matrix<R0Element>, ring: &CoefficientRing, budget: u64) -> Result<CokernelVanishing> {
    cokernel_is_zero_with_candidates(m, ring, budget, &[])
}

/// As [`cokernel_is_zero`], first trying the maximal minors on the given
/// column sets as a certificate of vanishing. Good candidates make the
/// module Gröbner fallback unnecessary.
pub fn cokernel_is_zero_with_candidates(
    m: &Matrix<R0Element>,
    ring: &CoefficientRing,
    budget: u64,
    candidates: &[Vec<usize>],
) -> Result<CokernelVanishing> {
    for a in m.entries() {
        ring.check(a)?;
    }
    if m.rows() == 0 {
        return Ok(CokernelVanishing::Zero);
    }
    let verdict = |b: bool| {
        if b {
            CokernelVanishing::Zero
        } else {
            CokernelVanishing::NonZero
        }
    };
    let base = ring.base();
    if !ring.is_polynomial() {
        return Ok(match base {
            ScalarRing::Integers => verdict(smith_normal_form(m, false)?.coker_is_zero()),
            _ => verdict(rank_ff(m) == m.rows()),
        });
    }
    let reduced = reduce_unit_pivots(m);
    if reduced.rows() == 0 {
        return Ok(CokernelVanishing::Zero);
    }
    // Coker ⊗ R_0/E is free of rank rows' when E contains every entry.
    let entries = entry_ideal(&reduced, ring)?;
    match is_unit_ideal(&entries) {
        Decision::No => return Ok(CokernelVanishing::NonZero),
        Decision::Yes if reduced.rows() == 1 => return Ok(CokernelVanishing::Zero),
        Decision::Undecided if reduced.rows() == 1 => {
            return Ok(CokernelVanishing::Undecided {
                minor_ideal: Some(MinorIdealResult {
                    t: 1,
                    generators: entries.generators().to_vec(),
                }),
            })
        }
        _ => {}
    }
    if candidate_minors_unit(m, ring, candidates)? {
        return Ok(CokernelVanishing::Zero);
    }
    if base.is_field() {
        return Ok(verdict(spans_everything(&reduced, base, ring.nvars())));
    }
    // Over ℤ[A]: refute through ℚ and small primes, then try minors.
    if rank_ff(&reduced) < reduced.rows() {
        return Ok(CokernelVanishing::NonZero);
    }
    for field in [
        ScalarRing::Rationals,
        ScalarRing::PrimeField(2),
        ScalarRing::PrimeField(3),
    ] {
        let mapped = reduced.try_map(|a| a.map_base(field))?;
        if !spans_everything(&mapped, field, ring.nvars()) {
            return Ok(CokernelVanishing::NonZero);
        }
    }
    let t = reduced.rows();
    match minor_ideal(&reduced, t, &ring.one(), budget) {
        Ok(minors) => {
            let ideal = R0Ideal::new(ring.clone(), minors.generators.clone())?;
            Ok(match is_unit_ideal(&ideal) {
                Decision::Yes => CokernelVanishing::Zero,
                Decision::No => CokernelVanishing::NonZero,
                Decision::Undecided => CokernelVanishing::Undecided {
                    minor_ideal: Some(minors),
                },
            })
        }
        Err(Error::BudgetExceeded { .. }) => Ok(CokernelVanishing::Undecided { minor_ideal: None }),
        Err(e) => Err(e),
    }
}
