use clsforge::karati::{self, KaratiSignature};
use clsforge::karati_attack;
use clsforge::kumar::{self, KumarSignature};
use clsforge::kumar_attack;
use clsforge::{Group, Scalar, Suite};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

const LARGE: u64 = 2_305_843_009_213_693_951;

fn ident(rng: &mut ChaCha20Rng, prefix: &str) -> Vec<u8> {
    format!("{prefix}-{:016x}", rng.gen::<u64>()).into_bytes()
}

/// Mod-q inverse by extended Euclid, independent of the library's.
fn inv(a: u64, q: u64) -> u64 {
    let (mut r0, mut r1, mut t0, mut t1) = (q as i128, a as i128, 0i128, 1i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    t0.rem_euclid(q as i128) as u64
}

fn mulq(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

#[test]
fn karati_round_trips_over_large_and_fixture_primes() {
    for q in [101, 1_000_003, LARGE] {
        let suite = Suite::mock(q).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(q);
        for _ in 0..100 {
            let (params, msk) = karati::setup(&suite, &mut rng);
            let id = ident(&mut rng, "user");
            let partial = karati::extract_partial_key(&params, &msk, &id, &mut rng);
            assert!(karati::verify_partial_key(&params, &id, &partial).unwrap());
            let sk = karati::set_private_key(&partial, &mut rng);
            let pk = karati::set_public_key(&params, &partial, &sk).unwrap();
            let m = ident(&mut rng, "message");
            let sig = karati::sign(&params, &id, &sk, &m, &mut rng).unwrap();
            assert!(karati::verify(&params, &id, &pk, &m, &sig)
                .unwrap()
                .is_valid());
        }
    }
}

#[test]
fn kumar_round_trips_over_large_and_fixture_primes() {
    for q in [101, 1_000_003, LARGE] {
        let suite = Suite::mock(q).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(q);
        for _ in 0..100 {
            let (params, msk) = kumar::setup(&suite, &mut rng);
            let id = ident(&mut rng, "user");
            let partial = kumar::extract_partial_key(&params, &msk, &id).unwrap();
            let sk = kumar::set_private_key(&partial, &mut rng);
            let pk = kumar::set_public_key(&params, &sk).unwrap();
            let (m, delta) = (ident(&mut rng, "message"), ident(&mut rng, "state"));
            let sig = kumar::sign(&params, &id, &pk, &sk, &delta, &m, &mut rng).unwrap();
            assert!(kumar::verify(&params, &id, &pk, &delta, &m, &sig)
                .unwrap()
                .is_valid());
        }
    }
}

/// The partial key's share exponent is `y·h/(h+r+y)`; recompute it with
/// plain integer arithmetic.
#[test]
fn karati_share_matches_closed_form() {
    let suite = Suite::mock(LARGE).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    for _ in 0..100 {
        let (params, msk) = karati::setup(&suite, &mut rng);
        let id = ident(&mut rng, "user");
        let r = suite.random_scalar(&mut rng);
        let h = karati::identity_hash(&params, &id).value();
        let y = msk.y.value();
        let denom = ((h as u128 + r.value() as u128 + y as u128) % LARGE as u128) as u64;
        if denom == 0 {
            continue;
        }
        let partial = karati::extract_partial_key_with(&params, &msk, &id, r).unwrap();
        assert_eq!(
            partial.share.exponent(),
            mulq(mulq(y, h, LARGE), inv(denom, LARGE), LARGE)
        );
        assert_eq!(partial.commitment.exponent(), r.value());
    }
}

#[test]
fn exhaustive_karati_tamper_scan() {
    let suite = Suite::fixture();
    let mut rng = ChaCha20Rng::seed_from_u64(3);
    for _ in 0..10 {
        let (params, msk) = karati::setup(&suite, &mut rng);
        let partial = karati::extract_partial_key(&params, &msk, b"alice", &mut rng);
        let sk = karati::set_private_key(&partial, &mut rng);
        let pk = karati::set_public_key(&params, &partial, &sk).unwrap();
        let sig = karati::sign(&params, b"alice", &sk, b"msg", &mut rng).unwrap();
        assert!(karati::verify(&params, b"alice", &pk, b"msg", &sig)
            .unwrap()
            .is_valid());
        for v in 0..101 {
            let commit = KaratiSignature {
                nonce_commitment: suite.element(Group::GT, v),
                ..sig
            };
            let response = KaratiSignature {
                response: suite.element(Group::G1, v),
                ..sig
            };
            for tampered in [commit, response] {
                if tampered != sig {
                    assert!(!karati::verify(&params, b"alice", &pk, b"msg", &tampered)
                        .unwrap()
                        .is_valid());
                }
            }
        }
    }
}

/// Replacing V or Δ never verifies. Replacing R also changes the challenge,
/// so over a 101-element field some substitutes verify by coincidence; each
/// one must satisfy `α·x·(h' − h) ≡ (r − r')·w`, read off the exponents.
#[test]
fn exhaustive_kumar_tamper_scan() {
    let suite = Suite::fixture();
    let q = suite.order();
    let mut rng = ChaCha20Rng::seed_from_u64(3);
    let mut coincidences = 0;
    for _ in 0..10 {
        let (params, msk) = kumar::setup(&suite, &mut rng);
        let partial = kumar::extract_partial_key(&params, &msk, b"alice").unwrap();
        let sk = kumar::set_private_key(&partial, &mut rng);
        let pk = kumar::set_public_key(&params, &sk).unwrap();
        let sig = kumar::sign(&params, b"alice", &pk, &sk, b"d", b"msg", &mut rng).unwrap();
        assert!(kumar::verify(&params, b"alice", &pk, b"d", b"msg", &sig)
            .unwrap()
            .is_valid());
        let mut strict: Vec<KumarSignature> = (0..q)
            .map(|v| KumarSignature {
                response: suite.element(Group::G1, v),
                ..sig.clone()
            })
            .collect();
        strict.push(KumarSignature {
            delta: b"e".to_vec(),
            ..sig.clone()
        });
        strict.push(KumarSignature {
            delta: Vec::new(),
            ..sig.clone()
        });
        for tampered in strict.iter().filter(|t| **t != sig) {
            assert!(
                !kumar::verify(&params, b"alice", &pk, b"d", b"msg", tampered)
                    .unwrap()
                    .is_valid()
            );
        }

        let h = kumar::challenge(&params, b"msg", b"alice", &pk, &sig.commitment).value();
        let w = kumar::state_point(&params, b"d").exponent();
        let ax = mulq(msk.alpha.value(), sk.secret_value.value(), q);
        for v in (0..q).filter(|v| *v != sig.commitment.exponent()) {
            let commitment = suite.element(Group::G1, v);
            let h_new = kumar::challenge(&params, b"msg", b"alice", &pk, &commitment).value();
            let solves = mulq(ax, (h_new + q - h) % q, q)
                == mulq((sig.commitment.exponent() + q - v) % q, w, q);
            let tampered = KumarSignature {
                commitment,
                ..sig.clone()
            };
            let valid = kumar::verify(&params, b"alice", &pk, b"d", b"msg", &tampered)
                .unwrap()
                .is_valid();
            assert_eq!(valid, solves, "R = {v}");
            coincidences += usize::from(valid);
        }
    }
    assert!(
        coincidences <= 40,
        "{coincidences} coincidental R substitutes in 1000"
    );
}

#[test]
fn forged_partial_keys_pass_the_check_for_random_pairs() {
    let suite = Suite::mock(LARGE).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(21);
    let (params, msk) = karati::setup(&suite, &mut rng);
    for _ in 0..100 {
        let (source, target) = (ident(&mut rng, "source"), ident(&mut rng, "target"));
        let known = karati::extract_partial_key(&params, &msk, &source, &mut rng);
        let m = ident(&mut rng, "forged");
        let bundle =
            karati_attack::forge_signature(&params, &source, &known, &target, &m, &mut rng)
                .unwrap();
        assert!(karati::verify_partial_key(&params, &target, &bundle.partial).unwrap());
        assert!(
            karati::verify(&params, &target, &bundle.public, &m, &bundle.signature)
                .unwrap()
                .is_valid()
        );
        // The forged key is exactly what the KGC would issue under nonce r'.
        let reissued = karati::extract_partial_key_with(
            &params,
            &msk,
            &target,
            Scalar::new(LARGE, bundle.partial.commitment.exponent()),
        )
        .unwrap();
        assert_eq!(reissued, bundle.partial);
    }
}

/// Re-signing under a recovered Δ-bound key moves V by `(h' − h)·x·P_pub`.
#[test]
fn type1_forgery_shifts_response_by_challenge_difference() {
    let suite = Suite::mock(LARGE).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for _ in 0..100 {
        let (params, msk) = kumar::setup(&suite, &mut rng);
        let id = ident(&mut rng, "user");
        let partial = kumar::extract_partial_key(&params, &msk, &id).unwrap();
        let sk = kumar::set_private_key(&partial, &mut rng);
        let pk = kumar::set_public_key(&params, &sk).unwrap();
        let (m, m_new, delta) = (
            ident(&mut rng, "m"),
            ident(&mut rng, "m-new"),
            ident(&mut rng, "state"),
        );
        let sig = kumar::sign(&params, &id, &pk, &sk, &delta, &m, &mut rng).unwrap();
        let bound =
            kumar_attack::recover_delta_key(&params, &id, &pk, sk.secret_value, &m, &sig).unwrap();
        assert!(bound.is_consistent(&params, &id).unwrap());
        let forged =
            kumar_attack::forge_type1(&params, &id, &pk, &bound, sk.secret_value, &m_new).unwrap();
        assert!(kumar::verify(&params, &id, &pk, &delta, &m_new, &forged)
            .unwrap()
            .is_valid());
        assert!(!kumar::verify(
            &params,
            &id,
            &pk,
            &ident(&mut rng, "other"),
            &m_new,
            &forged
        )
        .unwrap()
        .is_valid());

        let h = kumar::challenge(&params, &m, &id, &pk, &sig.commitment);
        let h_new = kumar::challenge(&params, &m_new, &id, &pk, &sig.commitment);
        let shift = params
            .kgc_public
            .pow(&((h_new - h) * sk.secret_value))
            .unwrap();
        assert_eq!(forged.response, sig.response.mul(&shift).unwrap());
    }
}

/// The KGC's substitute `h·α·Y` equals the signer's `h·x·P_pub`, so its
/// forgery is the honest signature under the same nonce.
#[test]
fn type2_forgery_matches_honest_signature_under_same_nonce() {
    let suite = Suite::mock(LARGE).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(8);
    for _ in 0..100 {
        let (params, msk) = kumar::setup(&suite, &mut rng);
        let id = ident(&mut rng, "user");
        let partial = kumar::extract_partial_key(&params, &msk, &id).unwrap();
        let sk = kumar::set_private_key(&partial, &mut rng);
        let pk = kumar::set_public_key(&params, &sk).unwrap();
        let (m, delta) = (ident(&mut rng, "m"), ident(&mut rng, "state"));
        let nonce = suite.random_scalar(&mut rng);
        let forged =
            kumar_attack::forge_type2_with(&params, &msk, &id, &pk, &delta, &m, nonce).unwrap();
        let honest = kumar::sign_with(&params, &id, &pk, &sk, &delta, &m, nonce).unwrap();
        assert_eq!(forged, honest);
        let h = kumar::challenge(&params, &m, &id, &pk, &forged.commitment);
        assert_eq!(
            pk.point.pow(&(h * msk.alpha)).unwrap(),
            params.kgc_public.pow(&(h * sk.secret_value)).unwrap()
        );
    }
}
