use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use std::collections::HashSet;

use super::*;
use crate::algebra::{CoefficientRing, R0Element, Scalar, ScalarRing};

fn zz() -> CoefficientRing {
    CoefficientRing::scalar(ScalarRing::Integers)
}

fn int_matrix(rows: &[&[i64]]) -> Matrix<R0Element> {
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(
        cols,
        rows.iter()
            .map(|r| r.iter().map(|&v| zz().from_i64(v)).collect())
            .collect(),
    )
    .unwrap()
}

// Largest t with a nonzero t×t minor, by cofactor expansion.
fn oracle_det(m: &Matrix<R0Element>) -> R0Element {
    let n = m.rows();
    if n == 0 {
        return zz().one();
    }
    let mut acc = zz().zero();
    for j in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&k| k != j).collect();
        let term = m.get(0, j).mul(&oracle_det(&m.submatrix(&rows, &cols)));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn oracle_rank(m: &Matrix<R0Element>) -> usize {
    (1..=m.rows().min(m.cols()))
        .rev()
        .find(|&t| {
            combinations(m.rows(), t)
                .any(|r| combinations(m.cols(), t).any(|c| !oracle_det(&m.submatrix(&r, &c)).is_zero()))
        })
        .unwrap_or(0)
}

fn small_int_matrix() -> impl Strategy<Value = Matrix<R0Element>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(n, c)| {
        prop::collection::vec(-3i64..=3, n * c)
            .prop_map(move |v| Matrix::from_fn(n, c, |i, j| zz().from_i64(v[i * c + j])))
    })
}

#[test]
fn rank_examples() {
    assert_eq!(rank_ff(&int_matrix(&[&[3, 2]])), 1);
    assert_eq!(rank_ff(&int_matrix(&[&[0, 0, 0], &[0, 0, 0]])), 0);
    let q = CoefficientRing::polynomial(ScalarRing::Rationals, vec!["x".into(), "y".into()]).unwrap();
    let m = Matrix::from_rows(2, vec![vec![q.var(1), q.var(0)]]).unwrap();
    assert_eq!(rank_ff(&m), 1);
    let sq = Matrix::from_rows(
        2,
        vec![vec![q.var(0), q.var(1)], vec![q.var(0).pow(2), q.var(0).mul(&q.var(1))]],
    )
    .unwrap();
    assert_eq!(rank_ff(&sq), 1);
    assert!(determinant(&sq, &q.one()).is_zero());
}

#[test]
fn snf_examples() {
    let s = smith_normal_form(&int_matrix(&[&[3, 2]]), false).unwrap();
    assert_eq!(s.invariant_factors, vec![BigInt::one()]);
    assert!(s.coker_is_zero());
    let s = smith_normal_form(&int_matrix(&[&[2, 2]]), false).unwrap();
    assert_eq!(s.invariant_factors, vec![BigInt::from(2)]);
    assert_eq!(s.torsion(), vec![BigInt::from(2)]);
    let s = smith_normal_form(&int_matrix(&[&[1, 0], &[0, 1]]), false).unwrap();
    assert_eq!(s.invariant_factors, vec![BigInt::one(), BigInt::one()]);
    let q = CoefficientRing::scalar(ScalarRing::Rationals);
    let m = Matrix::filled(1, 1, q.one());
    assert!(matches!(
        smith_normal_form(&m, false),
        Err(crate::Error::RingMismatch(_))
    ));
}

#[test]
fn minor_examples() {
    let z = zz();
    let r = minor_ideal(&int_matrix(&[&[3, 2]]), 1, &z.one(), DEFAULT_MINOR_BUDGET).unwrap();
    assert_eq!(r.generators, vec![z.from_i64(3), z.from_i64(2)]);
    let r = minor_ideal(&int_matrix(&[&[1, 0], &[0, 1]]), 2, &z.one(), DEFAULT_MINOR_BUDGET).unwrap();
    assert_eq!(r.generators, vec![z.one()]);
    let big = Matrix::filled(10, 30, z.one());
    match minor_ideal(&big, 5, &z.one(), DEFAULT_MINOR_BUDGET) {
        Err(crate::Error::BudgetExceeded { count, cap }) => {
            assert_eq!(count, 252 * 142_506);
            assert_eq!(cap, DEFAULT_MINOR_BUDGET);
        }
        other => panic!("expected a budget error, got {other:?}"),
    }
}

#[test]
fn cokernel_examples() {
    let z = zz();
    let b = DEFAULT_MINOR_BUDGET;
    assert_eq!(
        cokernel_is_zero(&int_matrix(&[&[3, 2]]), &z, b).unwrap(),
        CokernelVanishing::Zero
    );
    assert_eq!(
        cokernel_is_zero(&int_matrix(&[&[2, 2]]), &z, b).unwrap(),
        CokernelVanishing::NonZero
    );
    let q = CoefficientRing::polynomial(ScalarRing::Rationals, vec!["x".into(), "y".into()]).unwrap();
    let (x, y) = (q.var(0), q.var(1));
    let m = Matrix::from_rows(2, vec![vec![y.clone(), x.clone()]]).unwrap();
    assert_eq!(cokernel_is_zero(&m, &q, b).unwrap(), CokernelVanishing::NonZero);
    // [[1+x, x], [y, 1]] has determinant 1 + x - xy, not a unit
    let one = q.one();
    let m = Matrix::from_rows(2, vec![vec![one.add(&x), x.clone()], vec![y.clone(), one.clone()]]).unwrap();
    assert_eq!(cokernel_is_zero(&m, &q, b).unwrap(), CokernelVanishing::NonZero);
    // [[x, 1 - x], [1, -1]] has determinant -1
    let m = Matrix::from_rows(2, vec![vec![x.clone(), one.sub(&x)], vec![one.clone(), one.neg()]]).unwrap();
    assert_eq!(cokernel_is_zero(&m, &q, b).unwrap(), CokernelVanishing::Zero);
    // Over ℤ[a]: [[2, a]] has cokernel ℤ[a]/(2, a) ≠ 0; [[2a+1, 3a+1]] is zero.
    let za = CoefficientRing::polynomial(ScalarRing::Integers, vec!["a".into()]).unwrap();
    let a = za.var(0);
    let m = Matrix::from_rows(2, vec![vec![za.from_i64(2), a.clone()]]).unwrap();
    assert_eq!(cokernel_is_zero(&m, &za, b).unwrap(), CokernelVanishing::NonZero);
    let two = Scalar::Int(2.into());
    let three = Scalar::Int(3.into());
    let m = Matrix::from_rows(
        2,
        vec![vec![a.scale(&two).add(&za.one()), a.scale(&three).add(&za.one())]],
    )
    .unwrap();
    assert_eq!(cokernel_is_zero(&m, &za, b).unwrap(), CokernelVanishing::Zero);
}

#[test]
fn unit_pivots_preserve_shape() {
    let q = CoefficientRing::polynomial(ScalarRing::Rationals, vec!["x".into()]).unwrap();
    let x = q.var(0);
    // [[1, x], [x, x^2 + x]] reduces to the 1×1 matrix [x]
    let m = Matrix::from_rows(2, vec![vec![q.one(), x.clone()], vec![x.clone(), x.pow(2).add(&x)]]).unwrap();
    let r = reduce_unit_pivots(&m);
    assert_eq!((r.rows(), r.cols()), (1, 1));
    assert_eq!(r.get(0, 0), &x);
}

// All images of F_p-combinations of the columns: Coker = 0 iff p^rows of them.
fn fp_brute_zero(m: &Matrix<R0Element>, p: u64) -> bool {
    let mut images = HashSet::new();
    let total = p.pow(m.cols() as u32);
    for code in 0..total {
        let mut c = code;
        let coeffs: Vec<u64> = (0..m.cols())
            .map(|_| {
                let d = c % p;
                c /= p;
                d
            })
            .collect();
        let image: Vec<u64> = (0..m.rows())
            .map(|i| {
                (0..m.cols()).fold(0, |acc, j| {
                    let v = match m.get(i, j).constant_value() {
                        Some(Scalar::Mod { value, .. }) => value,
                        _ => 0,
                    };
                    (acc + v * coeffs[j]) % p
                })
            })
            .collect();
        images.insert(image);
    }
    images.len() as u64 == p.pow(m.rows() as u32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_exhaustive_minors(m in small_int_matrix()) {
        prop_assert_eq!(rank_ff(&m), oracle_rank(&m));
    }

    #[test]
    fn determinant_matches_expansion(n in 1usize..=4, v in prop::collection::vec(-4i64..=4, 16)) {
        let m = Matrix::from_fn(n, n, |i, j| zz().from_i64(v[i * 4 + j]));
        prop_assert_eq!(determinant(&m, &zz().one()), oracle_det(&m));
    }

    #[test]
    fn snf_transforms_diagonalize(m in small_int_matrix()) {
        let a = integer_matrix(&m).unwrap();
        let s = smith_normal_form_int(&a, true);
        let (p, q) = s.transforms.clone().unwrap();
        let mul = |x: &Matrix<BigInt>, y: &Matrix<BigInt>| {
            Matrix::from_fn(x.rows(), y.cols(), |i, j| {
                (0..x.cols()).fold(BigInt::zero(), |acc, k| acc + x.get(i, k) * y.get(k, j))
            })
        };
        let d = mul(&mul(&p, &a), &q);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < s.rank { s.invariant_factors[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j), &want);
            }
        }
        let det = |x: &Matrix<BigInt>| oracle_det(&x.map(|v| zz().from_i64(i64::try_from(v).unwrap())));
        prop_assert!(det(&p).is_unit());
        prop_assert!(det(&q).is_unit());
        for w in s.invariant_factors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(s.invariant_factors.iter().all(|f| f.is_positive()));
        prop_assert_eq!(s.rank, oracle_rank(&m));
    }

    #[test]
    fn snf_factors_are_minor_gcd_quotients(m in small_int_matrix()) {
        let s = smith_normal_form(&m, false).unwrap();
        let mut product = BigInt::one();
        for k in 1..=s.rank {
            product *= &s.invariant_factors[k - 1];
            let minors = minor_ideal(&m, k, &zz().one(), u64::MAX).unwrap();
            let g = minors.generators.iter().fold(BigInt::zero(), |g, d| {
                g.gcd(d.constant_value().unwrap().as_bigint().unwrap())
            });
            prop_assert_eq!(&product, &g);
        }
    }

    #[test]
    fn fp_cokernel_matches_brute_force(
        p in prop::sample::select(vec![2u64, 3]),
        n in 1usize..=3,
        c in 1usize..=4,
        v in prop::collection::vec(0u64..3, 12),
    ) {
        let ring = CoefficientRing::scalar(ScalarRing::PrimeField(p));
        let m = Matrix::from_fn(n, c, |i, j| ring.from_i64(v[i * 4 + j] as i64));
        let fast = cokernel_is_zero(&m, &ring, DEFAULT_MINOR_BUDGET).unwrap();
        prop_assert_eq!(fast == CokernelVanishing::Zero, fp_brute_zero(&m, p));
    }
}
