use crate::algebra::{R0Element, Scalar};
use crate::linalg::Matrix;

/// Fraction-free elimination in place. Returns the pivot positions and the
/// parity of the row swaps. After step k every entry below the pivot rows
/// is a (k+1)×(k+1) minor, so each division by the previous pivot is exact.
fn eliminate(a: &mut Matrix<R0Element>) -> (Vec<(usize, usize)>, bool) {
    let (n, c) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut odd = false;
    let Some(sample) = a.entries().next() else {
        return (pivots, odd);
    };
    let mut prev = R0Element::one(sample.base(), sample.nvars());
    let mut r = 0;
    for col in 0..c {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            odd = !odd;
        }
        let pivot = a.get(r, col).clone();
        for i in r + 1..n {
            let lead = a.get(i, col).clone();
            for j in col + 1..c {
                let x = pivot.mul(a.get(i, j));
                let y = if lead.is_zero() {
                    x
                } else {
                    x.sub(&lead.mul(a.get(r, j)))
                };
                let v = if prev.is_one() {
                    y
                } else {
                    y.exact_div(&prev).expect("Bareiss division is exact")
                };
                a.set(i, j, v);
            }
            a.set(i, col, prev.sub(&prev));
        }
        pivots.push((r, col));
        prev = pivot;
        r += 1;
    }
    (pivots, odd)
}

/// Rank over the fraction field of R_0. Substituting constants for the
/// variables can only lower the rank, so a specialization reaching
/// min(rows, cols) settles it without polynomial elimination.
pub fn rank_ff(m: &Matrix<R0Element>) -> usize {
    let full = m.rows().min(m.cols());
    if let Some(sample) = m.entries().next().filter(|a| a.nvars() > 0 && full > 1) {
        let base = sample.base();
        for k in 0..3i64 {
            let point: Vec<Scalar> = (0..sample.nvars() as i64)
                .map(|j| base.from_i64(((j + 1) * (7 * k + 3) + k) % 97 + 2))
                .collect();
            let mut special = m.map(|a| R0Element::constant(a.evaluate(&point), 0));
            if eliminate(&mut special).0.len() == full {
                return full;
            }
        }
    }
    let mut a = m.clone();
    eliminate(&mut a).0.len()
}

/// Determinant of a square matrix; the empty matrix has determinant 1,
/// which needs the ring to be given explicitly.
pub fn determinant(m: &Matrix<R0Element>, one: &R0Element) -> R0Element {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return one.clone();
    }
    let mut a = m.clone();
    let (pivots, odd) = eliminate(&mut a);
    if pivots.len() < n {
        return one.sub(one);
    }
    let det = a.get(n - 1, n - 1).clone();
    if odd {
        det.neg()
    } else {
        det
    }
}
