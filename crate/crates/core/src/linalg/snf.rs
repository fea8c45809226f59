use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{R0Element, Scalar, ScalarRing};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Smith form of an integer matrix: P·M·Q = diag(f_1, ..., f_rank, 0, ...)
/// with f_i > 0 and f_i | f_{i+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    pub rows: usize,
    pub transforms: Option<(Matrix<BigInt>, Matrix<BigInt>)>,
}

impl SnfResult {
    /// Rank of the free part of the cokernel.
    pub fn coker_free_rank(&self) -> usize {
        self.rows - self.rank
    }

    /// Invariant factors other than 1: the cyclic torsion summands.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }

    pub fn coker_is_zero(&self) -> bool {
        self.coker_free_rank() == 0 && self.torsion().is_empty()
    }
}

/// Reads an R_0 matrix as integers; R_0 must be ℤ itself.
pub fn integer_matrix(m: &Matrix<R0Element>) -> Result<Matrix<BigInt>> {
    m.try_map(|a| {
        if a.base() != ScalarRing::Integers || a.nvars() != 0 {
            return Err(Error::RingMismatch(format!(
                "Smith normal form needs an integer matrix, found an entry of {}",
                if a.nvars() == 0 {
                    a.base().name()
                } else {
                    format!("{}[{} vars]", a.base(), a.nvars())
                }
            )));
        }
        Ok(match a.constant_value() {
            Some(Scalar::Int(v)) => v,
            _ => BigInt::zero(),
        })
    })
}

pub fn smith_normal_form(m: &Matrix<R0Element>, transforms: bool) -> Result<SnfResult> {
    Ok(smith_normal_form_int(&integer_matrix(m)?, transforms))
}

fn identity(n: usize) -> Matrix<BigInt> {
    Matrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
}

struct Work {
    a: Matrix<BigInt>,
    p: Option<Matrix<BigInt>>,
    q: Option<Matrix<BigInt>>,
}

impl Work {
    // row_i -= k·row_src
    fn row_axpy(&mut self, i: usize, src: usize, k: &BigInt) {
        for m in [Some(&mut self.a), self.p.as_mut()].into_iter().flatten() {
            for j in 0..m.cols() {
                let v = m.get(i, j) - k * m.get(src, j);
                m.set(i, j, v);
            }
        }
    }

    // col_j -= k·col_src
    fn col_axpy(&mut self, j: usize, src: usize, k: &BigInt) {
        for m in [Some(&mut self.a), self.q.as_mut()].into_iter().flatten() {
            for i in 0..m.rows() {
                let v = m.get(i, j) - k * m.get(i, src);
                m.set(i, j, v);
            }
        }
    }

    fn swap_rows(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        if let Some(p) = self.p.as_mut() {
            p.swap_rows(x, y);
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        if let Some(q) = self.q.as_mut() {
            q.swap_cols(x, y);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.row_axpy(i, i, &BigInt::from(2));
    }
}

pub fn smith_normal_form_int(m: &Matrix<BigInt>, transforms: bool) -> SnfResult {
    let (n, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        p: transforms.then(|| identity(n)),
        q: transforms.then(|| identity(c)),
    };
    let mut t = 0;
    while t < n.min(c) {
        // smallest nonzero entry of the trailing block
        let best = (t..n)
            .flat_map(|i| (t..c).map(move |j| (i, j)))
            .filter(|&(i, j)| !w.a.get(i, j).is_zero())
            .min_by_key(|&(i, j)| w.a.get(i, j).abs());
        let Some((pi, pj)) = best else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        let mut clean = true;
        for i in t + 1..n {
            let k = w.a.get(i, t).div_floor(w.a.get(t, t));
            if !k.is_zero() {
                w.row_axpy(i, t, &k);
            }
            clean &= w.a.get(i, t).is_zero();
        }
        for j in t + 1..c {
            let k = w.a.get(t, j).div_floor(w.a.get(t, t));
            if !k.is_zero() {
                w.col_axpy(j, t, &k);
            }
            clean &= w.a.get(t, j).is_zero();
        }
        if !clean {
            continue;
        }
        let pivot = w.a.get(t, t).clone();
        let offender = (t + 1..n).find(|&i| (t + 1..c).any(|j| !w.a.get(i, j).is_multiple_of(&pivot)));
        if let Some(i) = offender {
            // row_t += row_i brings a non-multiple into row t
            w.row_axpy(t, i, &BigInt::from(-1));
            continue;
        }
        if pivot.is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..t).map(|i| w.a.get(i, i).clone()).collect();
    SnfResult {
        rank: invariant_factors.len(),
        invariant_factors,
        rows: n,
        transforms: w.p.zip(w.q),
    }
}
