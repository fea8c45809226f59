use std::collections::HashSet;

use crate::algebra::R0Element;
use crate::error::{Error, Result};
use crate::linalg::{determinant, Matrix};

/// Default cap on the number of t×t submatrices enumerated.
pub const DEFAULT_MINOR_BUDGET: u64 = 20_000;

/// The nonzero t×t minors of a matrix, deduplicated, in enumeration order
/// (row subsets lexicographically, then column subsets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorIdealResult {
    pub t: usize,
    pub generators: Vec<R0Element>,
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Number of t×t submatrices of an n×c matrix.
pub fn submatrix_count(n: usize, c: usize, t: usize) -> u128 {
    binomial(n, t).saturating_mul(binomial(c, t))
}

/// Lexicographic k-subsets of 0..n.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (k <= n).then(|| (0..k).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut c = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                next = Some(c);
                break;
            }
        }
        Some(current)
    })
}

/// All t×t minors, refusing when there are more than `budget` submatrices.
pub fn minor_ideal(m: &Matrix<R0Element>, t: usize, one: &R0Element, budget: u64) -> Result<MinorIdealResult> {
    if t > m.rows().min(m.cols()) {
        return Err(Error::Shape(format!(
            "no {t}×{t} minors in a {}×{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let count = submatrix_count(m.rows(), m.cols(), t);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { count, cap: budget });
    }
    let mut generators: Vec<R0Element> = Vec::new();
    let mut seen = HashSet::new();
    for rows in combinations(m.rows(), t) {
        for cols in combinations(m.cols(), t) {
            let det = determinant(&m.submatrix(&rows, &cols), one);
            if !det.is_zero() && seen.insert(det.clone()) {
                generators.push(det);
            }
        }
    }
    Ok(MinorIdealResult { t, generators })
}
