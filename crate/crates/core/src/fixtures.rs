//! The F1 (Karati) and F2 (Kumar) golden fixtures over `mock101`.
//!
//! Hash outputs are pinned and every random draw is fixed so each exponent
//! can be checked by hand. The expected values live in
//! `tests/oracle/fixture_oracle.json`, produced by a standalone script.

use crate::pairing::{HashTag, Suite};

pub mod f1 {
    use super::*;
    use crate::error::Result;
    use crate::karati::{
        self, KaratiMasterSecret, KaratiParams, KaratiPartialKey, KaratiPrivateKey,
    };
    use crate::karati::{KaratiPublicKey, KaratiSignature};
    use crate::karati_attack::{self, KaratiForgeryBundle};

    pub const SOURCE_ID: &[u8] = b"alice";
    pub const TARGET_ID: &[u8] = b"bob";
    pub const MESSAGE: &[u8] = b"hello world";
    pub const FORGED_MESSAGE: &[u8] = b"forged message";
    /// A second message with m̄ = 10.
    pub const OTHER_MESSAGE: &[u8] = FORGED_MESSAGE;

    pub const MASTER_SECRET: u64 = 7;
    pub const SOURCE_HASH: u64 = 11;
    pub const TARGET_HASH: u64 = 22;
    pub const MESSAGE_SCALAR: u64 = 9;
    pub const OTHER_MESSAGE_SCALAR: u64 = 10;
    pub const EXTRACTION_NONCE: u64 = 3;
    pub const BLINDING_SECRET: u64 = 2;
    pub const EXPONENT_SECRET: u64 = 5;
    pub const SIGNING_NONCE: u64 = 4;
    pub const FORGED_BLINDING_SECRET: u64 = 3;
    pub const FORGED_EXPONENT_SECRET: u64 = 6;
    pub const FORGED_SIGNING_NONCE: u64 = 2;

    pub fn suite() -> Suite {
        Suite::fixture()
            .with_pin(HashTag::H, SOURCE_ID, SOURCE_HASH)
            .with_pin(HashTag::H, TARGET_ID, TARGET_HASH)
            .with_pin(HashTag::Msg, MESSAGE, MESSAGE_SCALAR)
            .with_pin(HashTag::Msg, OTHER_MESSAGE, OTHER_MESSAGE_SCALAR)
    }

    #[derive(Clone, Debug)]
    pub struct KaratiFixture {
        pub params: KaratiParams,
        pub master: KaratiMasterSecret,
        pub partial: KaratiPartialKey,
        pub private: KaratiPrivateKey,
        pub public: KaratiPublicKey,
        pub signature: KaratiSignature,
    }

    /// Honest chain for `alice`: setup, extraction, keys, one signature.
    pub fn scheme() -> Result<KaratiFixture> {
        let suite = suite();
        let (params, master) = karati::setup_with(&suite, suite.scalar(MASTER_SECRET))?;
        let partial = karati::extract_partial_key_with(
            &params,
            &master,
            SOURCE_ID,
            suite.scalar(EXTRACTION_NONCE),
        )?;
        let private = karati::set_private_key_with(
            &partial,
            suite.scalar(EXPONENT_SECRET),
            suite.scalar(BLINDING_SECRET),
        )?;
        let public = karati::set_public_key(&params, &partial, &private)?;
        let signature = karati::sign_with(
            &params,
            SOURCE_ID,
            &private,
            MESSAGE,
            suite.scalar(SIGNING_NONCE),
        )?;
        Ok(KaratiFixture {
            params,
            master,
            partial,
            private,
            public,
            signature,
        })
    }

    /// Mauls alice's partial key into one for `bob` and signs as bob.
    pub fn forgery(f: &KaratiFixture) -> Result<KaratiForgeryBundle> {
        let suite = &f.params.suite;
        karati_attack::forge_signature_with(
            &f.params,
            SOURCE_ID,
            &f.partial,
            TARGET_ID,
            FORGED_MESSAGE,
            suite.scalar(FORGED_EXPONENT_SECRET),
            suite.scalar(FORGED_BLINDING_SECRET),
            suite.scalar(FORGED_SIGNING_NONCE),
        )
    }
}

pub mod f2 {
    use super::*;
    use crate::error::Result;
    use crate::kumar::{self, KumarMasterSecret, KumarParams, KumarPartialKey, KumarPrivateKey};
    use crate::kumar::{KumarPublicKey, KumarSignature};
    use crate::kumar_attack;
    use crate::pairing::Group;

    pub const ID: &[u8] = b"alice";
    pub const DELTA: &[u8] = b"state-1";
    pub const OTHER_DELTA: &[u8] = b"state-2";
    pub const MESSAGE: &[u8] = b"hello world";
    pub const FORGED_MESSAGE: &[u8] = b"forged message";
    pub const KGC_MESSAGE: &[u8] = b"kgc forged message";

    pub const MASTER_SECRET: u64 = 7;
    pub const IDENTITY_EXPONENT: u64 = 13;
    pub const STATE_EXPONENT: u64 = 9;
    pub const SECRET_VALUE: u64 = 5;
    pub const SIGNING_NONCE: u64 = 4;
    pub const SIGNING_CHALLENGE: u64 = 6;
    pub const FORGED_CHALLENGE: u64 = 2;
    pub const KGC_NONCE: u64 = 10;
    pub const KGC_CHALLENGE: u64 = 8;

    pub fn suite() -> Suite {
        let base = Suite::fixture();
        let pk = KumarPublicKey {
            point: base.element(Group::G1, SECRET_VALUE),
        };
        let r = base.element(Group::G1, SIGNING_NONCE);
        let r_kgc = base.element(Group::G1, KGC_NONCE);
        base.with_pin(HashTag::H1, ID, IDENTITY_EXPONENT)
            .with_pin(HashTag::H2, DELTA, STATE_EXPONENT)
            .with_pin(
                HashTag::H3,
                kumar::challenge_input(MESSAGE, ID, &pk, &r),
                SIGNING_CHALLENGE,
            )
            .with_pin(
                HashTag::H3,
                kumar::challenge_input(FORGED_MESSAGE, ID, &pk, &r),
                FORGED_CHALLENGE,
            )
            .with_pin(
                HashTag::H3,
                kumar::challenge_input(KGC_MESSAGE, ID, &pk, &r_kgc),
                KGC_CHALLENGE,
            )
    }

    #[derive(Clone, Debug)]
    pub struct KumarFixture {
        pub params: KumarParams,
        pub master: KumarMasterSecret,
        pub partial: KumarPartialKey,
        pub private: KumarPrivateKey,
        pub public: KumarPublicKey,
        pub signature: KumarSignature,
    }

    pub fn scheme() -> Result<KumarFixture> {
        let suite = suite();
        let (params, master) = kumar::setup_with(&suite, suite.scalar(MASTER_SECRET))?;
        let partial = kumar::extract_partial_key(&params, &master, ID)?;
        let private = kumar::set_private_key_with(&partial, suite.scalar(SECRET_VALUE))?;
        let public = kumar::set_public_key(&params, &private)?;
        let signature = kumar::sign_with(
            &params,
            ID,
            &public,
            &private,
            DELTA,
            MESSAGE,
            suite.scalar(SIGNING_NONCE),
        )?;
        Ok(KumarFixture {
            params,
            master,
            partial,
            private,
            public,
            signature,
        })
    }

    /// Type-1 forgery on [`FORGED_MESSAGE`] from the fixture signature.
    pub fn type1_forgery(f: &KumarFixture) -> Result<KumarSignature> {
        let x = f.private.secret_value;
        let bound =
            kumar_attack::recover_delta_key(&f.params, ID, &f.public, x, MESSAGE, &f.signature)?;
        kumar_attack::forge_type1(&f.params, ID, &f.public, &bound, x, FORGED_MESSAGE)
    }

    /// KGC forgery on [`KGC_MESSAGE`] under [`DELTA`].
    pub fn type2_forgery(f: &KumarFixture) -> Result<KumarSignature> {
        kumar_attack::forge_type2_with(
            &f.params,
            &f.master,
            ID,
            &f.public,
            DELTA,
            KGC_MESSAGE,
            f.params.suite.scalar(KGC_NONCE),
        )
    }
}
