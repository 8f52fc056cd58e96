use clsforge::field::{is_prime, Scalar};
use clsforge::pairing::{pairing, Group, GroupElement, HashTag, Suite};
use proptest::prelude::*;

const PRIMES: [u64; 5] = [
    101,
    4_294_967_291,
    1_099_511_627_689,
    4_503_599_627_370_449,
    2_305_843_009_213_693_951,
];

/// Inverse by the extended Euclidean algorithm, kept apart from the
/// library's Fermat inverse so the two can check each other.
fn egcd_inverse(a: u64, q: u64) -> Option<u64> {
    let (mut r0, mut r1) = (q as i128, (a % q) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(q as i128) as u64)
}

fn element(q: u64, group: Group, exp: u64) -> GroupElement {
    Suite::mock(q).unwrap().element(group, exp)
}

#[test]
fn shipped_primes_are_prime() {
    for q in PRIMES {
        assert!(is_prime(q), "{q}");
        assert!(Suite::mock(q).is_ok());
    }
    for composite in [1u64, 4, 100, 561, 4_294_967_297, (1 << 61) + 1] {
        assert!(!is_prime(composite), "{composite}");
    }
}

#[test]
fn inverse_examples_mod_101() {
    for (a, expected) in [(1, 1), (2, 51), (9, 45), (10, 91), (21, 77)] {
        assert_eq!(Scalar::new(101, a).inverse().unwrap().value(), expected);
        assert_eq!(egcd_inverse(a, 101), Some(expected));
    }
    assert!(Scalar::zero(101).inverse().is_err());
}

#[test]
fn generator_pairs_to_the_target_generator() {
    for q in PRIMES {
        let s = Suite::mock(q).unwrap();
        let e = pairing(&s.g1(), &s.g1()).unwrap();
        assert_eq!(e, s.gt());
        assert!(!e.is_identity());
    }
}

#[test]
fn pairing_rejects_target_group_inputs() {
    let s = Suite::fixture();
    assert!(pairing(&s.gt(), &s.g1()).is_err());
    assert!(pairing(&s.g1(), &element(4_294_967_291, Group::G1, 1)).is_err());
}

#[test]
fn hash_outputs_stay_in_range_and_tags_separate() {
    let s = Suite::fixture();
    let mut differing = 0;
    for i in 0..500u32 {
        let data = i.to_be_bytes();
        let h = s.hash_to_scalar(HashTag::H, &data);
        assert!(!h.is_zero() && h.value() < 101);
        if h != s.hash_to_scalar(HashTag::H3, &data) {
            differing += 1;
        }
        assert!(!s.hash_to_group(HashTag::H1, &data).is_identity());
    }
    assert!(
        differing > 400,
        "H and H3 agree on {} of 500 inputs",
        500 - differing
    );
}

#[test]
fn hash_to_scalar_spreads_over_a_large_field() {
    let s = Suite::mock(2_305_843_009_213_693_951).unwrap();
    let mut seen = std::collections::HashSet::new();
    for i in 0..2000u32 {
        assert!(seen.insert(s.hash_to_scalar(HashTag::Msg, &i.to_le_bytes()).value()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fermat_and_euclid_inverses_agree(idx in 0usize..5, a in 1u64..u64::MAX) {
        let q = PRIMES[idx];
        let a = a % q;
        prop_assume!(a != 0);
        prop_assert_eq!(Scalar::new(q, a).inverse().unwrap().value(), egcd_inverse(a, q).unwrap());
    }

    #[test]
    fn bilinear_in_both_arguments(idx in 0usize..5, p in any::<u64>(), r in any::<u64>(), a in any::<u64>(), b in any::<u64>()) {
        let q = PRIMES[idx];
        let (pe, re) = (element(q, Group::G1, p % q), element(q, Group::G1, r % q));
        let (sa, sb) = (Scalar::new(q, a % q), Scalar::new(q, b % q));
        let lhs = pairing(&pe.pow(&sa).unwrap(), &re.pow(&sb).unwrap()).unwrap();
        let rhs = pairing(&pe, &re).unwrap().pow(&(sa * sb)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_distributes_over_the_group_law(idx in 0usize..5, p in any::<u64>(), r in any::<u64>(), t in any::<u64>()) {
        let q = PRIMES[idx];
        let (pe, re, te) = (element(q, Group::G1, p % q), element(q, Group::G1, r % q), element(q, Group::G1, t % q));
        let lhs = pairing(&pe.mul(&re).unwrap(), &te).unwrap();
        let rhs = pairing(&pe, &te).unwrap().mul(&pairing(&re, &te).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_identity_points_pair_nontrivially(idx in 0usize..5, p in any::<u64>()) {
        let q = PRIMES[idx];
        let pe = element(q, Group::G1, p % q);
        prop_assume!(!pe.is_identity());
        let s = Suite::mock(q).unwrap();
        prop_assert!(!pairing(&pe, &s.g1()).unwrap().is_identity());
    }

    #[test]
    fn encodings_round_trip(idx in 0usize..5, v in any::<u64>(), gt in any::<bool>()) {
        let q = PRIMES[idx];
        let group = if gt { Group::GT } else { Group::G1 };
        let e = element(q, group, v % q);
        prop_assert_eq!(GroupElement::decode(&e.encode()).unwrap(), e);
        let s = Scalar::new(q, v % q);
        prop_assert_eq!(Scalar::decode(&s.encode()).unwrap(), s);
    }
}

#[test]
fn malformed_encodings_are_rejected() {
    for bad in [
        "mock101:G1:101",
        "mock101:G1:007",
        "mock101:G2:5",
        "mock100:G1:5",
        "mock101:G1:-1",
        "mock101:G1:",
        "mock101:G1: 5",
        "bn254:G1:5",
        "mock101:S:5",
    ] {
        assert!(GroupElement::decode(bad).is_err(), "{bad}");
    }
    assert!(Scalar::decode("mock101:G1:5").is_err());
    assert!(Suite::fixture()
        .decode_element("mock101:GT:5", Group::G1)
        .is_err());
}
