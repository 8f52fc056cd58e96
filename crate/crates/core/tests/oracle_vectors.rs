//! The fixture vectors are produced by `tests/oracle/fixture_oracle.py`, a
//! standalone modular-arithmetic script; its output is committed next to it.
//! These tests hold the library to every number in that file.

use clsforge::demo::{self, DemoMode, DemoScheme};
use clsforge::fixtures::{f1, f2};
use clsforge::karati::{self, KaratiSignature};
use clsforge::kumar;
use clsforge::pairing::{Group, FIXTURE_PRIME};
use clsforge::Scalar;
use serde_json::Value;

fn oracle() -> Value {
    serde_json::from_str(include_str!("oracle/fixture_oracle.json")).unwrap()
}

fn expect(section: &Value, key: &str) -> u64 {
    section[key]
        .as_u64()
        .unwrap_or_else(|| panic!("oracle has no `{key}`"))
}

#[test]
fn karati_fixture_matches_oracle() {
    let o = oracle();
    let o = &o["f1"];
    assert_eq!(expect(o, "q"), FIXTURE_PRIME);
    let f = f1::scheme().unwrap();
    assert_eq!(f.params.kgc_public.exponent(), expect(o, "y_kgc"));
    assert_eq!(f.params.g2.exponent(), expect(o, "g2"));
    assert_eq!(f.partial.commitment.exponent(), expect(o, "R_s"));
    assert_eq!(f.partial.share.exponent(), expect(o, "y_s"));
    let (lhs, rhs) = karati::partial_key_sides(&f.params, f1::SOURCE_ID, &f.partial).unwrap();
    assert_eq!(
        (lhs.exponent(), rhs.exponent()),
        (expect(o, "eq1_both_sides"), expect(o, "eq1_both_sides"))
    );
    assert_eq!(f.public.blinded_share.exponent(), expect(o, "Y_s1"));
    assert_eq!(f.public.exponent_commitment.exponent(), expect(o, "Y_s2"));
    assert_eq!(f.signature.nonce_commitment.exponent(), expect(o, "sigma1"));
    assert_eq!(f.signature.response.exponent(), expect(o, "sigma2"));
    let (lhs, rhs) = karati::verification_sides(
        &f.params,
        f1::SOURCE_ID,
        &f.public,
        f1::MESSAGE,
        &f.signature,
    )
    .unwrap();
    assert_eq!(lhs.exponent(), expect(o, "verify_both_sides"));
    assert_eq!(rhs.exponent(), expect(o, "verify_both_sides"));
}

#[test]
fn karati_rejections_match_oracle() {
    let o = oracle();
    let o = &o["f1"];
    let f = f1::scheme().unwrap();

    let tampered_share = f.params.suite.element(Group::G1, 72);
    let mut partial = f.partial;
    partial.share = tampered_share;
    let (lhs, rhs) = karati::partial_key_sides(&f.params, f1::SOURCE_ID, &partial).unwrap();
    assert_eq!(rhs.exponent(), expect(o, "eq1_tampered_rhs"));
    assert_ne!(lhs, rhs);

    let (lhs, rhs) = karati::verification_sides(
        &f.params,
        f1::SOURCE_ID,
        &f.public,
        f1::OTHER_MESSAGE,
        &f.signature,
    )
    .unwrap();
    assert_eq!(lhs.exponent(), expect(o, "verify_lhs_message_10"));
    assert_ne!(lhs, rhs);

    let sig = KaratiSignature {
        response: f.params.suite.element(Group::G1, 92),
        ..f.signature
    };
    let (lhs, rhs) =
        karati::verification_sides(&f.params, f1::SOURCE_ID, &f.public, f1::MESSAGE, &sig).unwrap();
    assert_eq!(rhs.exponent(), expect(o, "verify_rhs_sigma2_92"));
    assert_ne!(lhs, rhs);
}

#[test]
fn karati_forgery_matches_oracle() {
    let o = oracle();
    let o = &o["f1"];
    let f = f1::scheme().unwrap();
    let bundle = f1::forgery(&f).unwrap();
    assert_eq!(bundle.alpha.value(), expect(o, "alpha"));
    assert_eq!(bundle.partial.share.exponent(), expect(o, "y_forged"));
    assert_eq!(bundle.partial.commitment.exponent(), expect(o, "R_forged"));
    let (lhs, rhs) = karati::partial_key_sides(&f.params, f1::TARGET_ID, &bundle.partial).unwrap();
    assert_eq!(lhs.exponent(), expect(o, "forged_eq1_both_sides"));
    assert_eq!(rhs.exponent(), expect(o, "forged_eq1_both_sides"));
    assert_eq!(
        bundle.public.blinded_share.exponent(),
        expect(o, "forged_Y_s1")
    );
    assert_eq!(
        bundle.public.exponent_commitment.exponent(),
        expect(o, "forged_Y_s2")
    );
    assert_eq!(
        bundle.signature.nonce_commitment.exponent(),
        expect(o, "forged_sigma1")
    );
    assert_eq!(
        bundle.signature.response.exponent(),
        expect(o, "forged_sigma2")
    );
    let (lhs, rhs) = karati::verification_sides(
        &f.params,
        f1::TARGET_ID,
        &bundle.public,
        &bundle.message,
        &bundle.signature,
    )
    .unwrap();
    assert_eq!(lhs.exponent(), expect(o, "forged_verify_both_sides"));
    assert_eq!(rhs.exponent(), expect(o, "forged_verify_both_sides"));
}

#[test]
fn kumar_fixture_and_forgeries_match_oracle() {
    let o = oracle();
    let o = &o["f2"];
    let f = f2::scheme().unwrap();
    assert_eq!(f.params.kgc_public.exponent(), expect(o, "P_pub"));
    assert_eq!(
        kumar::identity_point(&f.params, f2::ID).exponent(),
        expect(o, "Q_id")
    );
    assert_eq!(f.partial.key.exponent(), expect(o, "D_s"));
    assert_eq!(f.public.point.exponent(), expect(o, "Y_s"));
    assert_eq!(
        kumar::state_point(&f.params, f2::DELTA).exponent(),
        expect(o, "W")
    );
    assert_eq!(f.signature.commitment.exponent(), expect(o, "R"));
    assert_eq!(f.signature.response.exponent(), expect(o, "V"));
    let (lhs, rhs) = kumar::verification_sides(
        &f.params,
        f2::ID,
        &f.public,
        f2::DELTA,
        f2::MESSAGE,
        &f.signature,
    )
    .unwrap();
    assert_eq!(lhs.exponent(), expect(o, "V"));
    assert_eq!(rhs.exponent(), expect(o, "verify_rhs"));

    let bound = clsforge::kumar_attack::recover_delta_key(
        &f.params,
        f2::ID,
        &f.public,
        f.private.secret_value,
        f2::MESSAGE,
        &f.signature,
    )
    .unwrap();
    assert_eq!(bound.key.exponent(), expect(o, "D_s_delta"));
    let type1 = f2::type1_forgery(&f).unwrap();
    assert_eq!(type1.response.exponent(), expect(o, "V_forged"));
    assert_eq!(type1.commitment.exponent(), expect(o, "R"));
    let type2 = f2::type2_forgery(&f).unwrap();
    assert_eq!(type2.commitment.exponent(), expect(o, "R_type2"));
    assert_eq!(type2.response.exponent(), expect(o, "V_type2"));
}

#[test]
fn pinned_demo_reports_carry_oracle_values() {
    let o = oracle();
    let karati = demo::run(DemoScheme::Karati, DemoMode::Pinned, FIXTURE_PRIME).unwrap();
    assert!(karati.all_valid());
    for (step, key) in [
        ("partial_share", "y_s"),
        ("public_blinded_share", "Y_s1"),
        ("public_exponent_commitment", "Y_s2"),
        ("signature_nonce_commitment", "sigma1"),
        ("signature_response", "sigma2"),
        ("verify_lhs", "verify_both_sides"),
        ("verify_rhs", "verify_both_sides"),
        ("forged_share", "y_forged"),
        ("forged_commitment", "R_forged"),
    ] {
        let value = karati.value(step).unwrap();
        assert!(
            value.ends_with(&format!(":{}", expect(&o["f1"], key))),
            "{step} = {value}"
        );
    }
    let kumar = demo::run(DemoScheme::Kumar, DemoMode::Pinned, FIXTURE_PRIME).unwrap();
    assert!(kumar.all_valid());
    for (step, key) in [
        ("partial_key", "D_s"),
        ("signature_response", "V"),
        ("delta_bound_key", "D_s_delta"),
        ("type1_response", "V_forged"),
        ("type2_response", "V_type2"),
    ] {
        let value = kumar.value(step).unwrap();
        assert!(
            value.ends_with(&format!(":{}", expect(&o["f2"], key))),
            "{step} = {value}"
        );
    }
}

#[test]
fn oracle_inverse_table_agrees() {
    let o = oracle();
    for (a, inv) in o["inverses_mod_101"].as_object().unwrap() {
        let a: u64 = a.parse().unwrap();
        assert_eq!(
            Scalar::new(101, a).inverse().unwrap().value(),
            inv.as_u64().unwrap()
        );
    }
}
