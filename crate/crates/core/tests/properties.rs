mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topcoh::algebra::{CoefficientRing, GradedRingSpec, Monomial, SPolynomial, ScalarRing};
use topcoh::cohomology::weak_mc_instance;
use topcoh::ideal::{content_ideal, ideal_member, is_unit_ideal, Decision};
use topcoh::invpoly::basis_nonempty;
use topcoh::presentation::build_multi;

fn one_spec(seed: u64) -> common::CorpusEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = common::corpus(6, &mut rng);
    c.swap_remove((seed % 6) as usize)
}

/// f = Σ c_λ U^λ over ZZ[a, b] with c_λ ∈ {1, a, b, a·b − 2, ...}.
fn zab_spec(seed: u64) -> GradedRingSpec {
    let ring = CoefficientRing::polynomial(ScalarRing::Integers, vec!["a".into(), "b".into()]).unwrap();
    let (a, b) = (ring.var(0), ring.var(1));
    let pool = [
        ring.one(),
        a.clone(),
        b.clone(),
        a.mul(&b).sub(&ring.from_i64(2)),
        a.add(&b),
        ring.from_i64(3),
    ];
    let monos = common::monomials_of_degree(2, &[1, 1]);
    let terms: Vec<_> = monos
        .iter()
        .enumerate()
        .filter(|(i, _)| (seed >> i) & 1 == 1 || *i == 0)
        .map(|(i, e)| {
            (
                Monomial::from_exponents(e.clone()),
                pool[(seed as usize + 3 * i) % pool.len()].clone(),
            )
        })
        .collect();
    let f = SPolynomial::from_terms(ScalarRing::Integers, 2, 2, terms);
    GradedRingSpec::new(ring, vec!["U1".into(), "U2".into()], vec![1, 1], vec![f]).unwrap()
}

fn eval_ints(spec: &GradedRingSpec, values: &[BigInt]) -> Vec<topcoh::algebra::Scalar> {
    let z = spec.coeff().base();
    values.iter().map(|v| z.from_bigint(v)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matrix_entries_lie_in_the_content_ideal(seed in any::<u64>()) {
        let e = one_spec(seed);
        let c = content_ideal(&e.spec);
        let d = e.spec.delta() + seed % 3;
        prop_assume!(basis_nonempty(d, e.spec.weights()));
        let m = build_multi(&e.spec, d);
        for a in m.entries().entries().filter(|a| !a.is_zero()) {
            prop_assert_eq!(ideal_member(a, &c).unwrap(), Decision::Yes, "{} ∉ {}", e.spec.display_element(a), c);
        }
    }

    #[test]
    fn building_commutes_with_specialization(seed in 0u64..64, x in -6i64..=6, y in -6i64..=6, extra in 0u64..3) {
        let spec = zab_spec(seed);
        let values = [BigInt::from(x), BigInt::from(y)];
        let point = eval_ints(&spec, &values);
        let special = spec.specialize(&values).unwrap();
        prop_assume!(special.generators().len() == spec.generators().len());
        let d = 2 + extra;
        let generic = build_multi(&spec, d);
        let direct = build_multi(&special, d);
        prop_assert_eq!(generic.rows(), direct.rows());
        prop_assert_eq!(generic.cols(), direct.cols());
        for i in 0..generic.rows() {
            for j in 0..generic.cols() {
                let v = generic.entries().get(i, j).evaluate(&point);
                prop_assert_eq!(direct.entries().get(i, j).constant_value().unwrap(), v);
            }
        }
    }

    #[test]
    fn specialized_content_is_the_evaluated_content(seed in 0u64..64, x in -6i64..=6, y in -6i64..=6) {
        let spec = zab_spec(seed);
        let values = [BigInt::from(x), BigInt::from(y)];
        let point = eval_ints(&spec, &values);
        let special = spec.specialize(&values).unwrap();
        let gcd = |it: &mut dyn Iterator<Item = BigInt>| it.fold(BigInt::zero(), |g, v| g.gcd(&v));
        let evaluated = gcd(&mut content_ideal(&spec)
            .generators()
            .iter()
            .map(|a| a.evaluate(&point).as_bigint().unwrap().clone()));
        let direct = gcd(&mut content_ideal(&special)
            .generators()
            .iter()
            .map(|a| a.constant_value().unwrap().as_bigint().unwrap().clone()));
        prop_assert_eq!(evaluated, direct);
    }
}

#[test]
fn weak_mc_specializations_keep_the_constant_term() {
    let inst = weak_mc_instance(3, 1).unwrap();
    let special = inst
        .spec
        .specialize(&[BigInt::from(0), BigInt::from(5), BigInt::from(-7)])
        .unwrap();
    assert_eq!(
        special.display_generator(&special.generators()[0]),
        "X1*X2*X3 - 5*X2^3 + 7*X3^3"
    );
    let c = content_ideal(&special);
    assert_eq!(c.to_string(), "(1, 5, 7)");
    assert_eq!(is_unit_ideal(&c), Decision::Yes);
}
