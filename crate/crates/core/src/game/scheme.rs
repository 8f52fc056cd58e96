use std::fmt::Debug;

use rand::Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::karati::{self, KaratiMasterSecret, KaratiParams, KaratiPartialKey, KaratiPublicKey};
use crate::karati::{KaratiSecretValue, KaratiSignature};
use crate::kumar::{
    self, KumarMasterSecret, KumarParams, KumarPartialKey, KumarPublicKey, KumarSignature,
};
use crate::pairing::Suite;
use crate::Verdict;

/// The six certificateless algorithms, as the challenger drives them.
pub trait ClsScheme {
    const NAME: &'static str;

    type Params: Clone + Debug;
    type MasterSecret: Clone + Debug;
    type PartialKey: Clone + Debug + Serialize + DeserializeOwned;
    type SecretValue: Clone + Debug + Serialize + DeserializeOwned;
    type PublicKey: Clone + Debug + PartialEq + Serialize + DeserializeOwned;
    type Signature: Clone + Debug + PartialEq + Serialize + DeserializeOwned;

    fn setup<R: Rng + ?Sized>(suite: &Suite, rng: &mut R) -> (Self::Params, Self::MasterSecret);

    fn extract_partial_key<R: Rng + ?Sized>(
        params: &Self::Params,
        msk: &Self::MasterSecret,
        id: &[u8],
        rng: &mut R,
    ) -> Result<Self::PartialKey>;

    fn new_secret_value<R: Rng + ?Sized>(params: &Self::Params, rng: &mut R) -> Self::SecretValue;

    fn public_key(
        params: &Self::Params,
        partial: &Self::PartialKey,
        secret: &Self::SecretValue,
    ) -> Result<Self::PublicKey>;

    #[allow(clippy::too_many_arguments)]
    fn sign<R: Rng + ?Sized>(
        params: &Self::Params,
        id: &[u8],
        partial: &Self::PartialKey,
        secret: &Self::SecretValue,
        pk: &Self::PublicKey,
        m: &[u8],
        delta: Option<&[u8]>,
        rng: &mut R,
    ) -> Result<Self::Signature>;

    fn verify(
        params: &Self::Params,
        id: &[u8],
        pk: &Self::PublicKey,
        m: &[u8],
        delta: Option<&[u8]>,
        sig: &Self::Signature,
    ) -> Result<Verdict>;
}

#[derive(Clone, Copy, Debug)]
pub struct Karati;

#[derive(Clone, Copy, Debug)]
pub struct Kumar;

fn no_delta(delta: Option<&[u8]>) -> Result<()> {
    match delta {
        None => Ok(()),
        Some(_) => Err(Error::Payload(
            "karati signatures take no state information".into(),
        )),
    }
}

impl ClsScheme for Karati {
    const NAME: &'static str = "karati";

    type Params = KaratiParams;
    type MasterSecret = KaratiMasterSecret;
    type PartialKey = KaratiPartialKey;
    type SecretValue = KaratiSecretValue;
    type PublicKey = KaratiPublicKey;
    type Signature = KaratiSignature;

    fn setup<R: Rng + ?Sized>(suite: &Suite, rng: &mut R) -> (KaratiParams, KaratiMasterSecret) {
        karati::setup(suite, rng)
    }

    fn extract_partial_key<R: Rng + ?Sized>(
        params: &KaratiParams,
        msk: &KaratiMasterSecret,
        id: &[u8],
        rng: &mut R,
    ) -> Result<KaratiPartialKey> {
        Ok(karati::extract_partial_key(params, msk, id, rng))
    }

    fn new_secret_value<R: Rng + ?Sized>(params: &KaratiParams, rng: &mut R) -> KaratiSecretValue {
        KaratiSecretValue {
            exponent_secret: params.suite.random_scalar(rng),
            blinding_secret: params.suite.random_scalar(rng),
        }
    }

    fn public_key(
        params: &KaratiParams,
        partial: &KaratiPartialKey,
        secret: &KaratiSecretValue,
    ) -> Result<KaratiPublicKey> {
        let sk =
            karati::set_private_key_with(partial, secret.exponent_secret, secret.blinding_secret)?;
        karati::set_public_key(params, partial, &sk)
    }

    fn sign<R: Rng + ?Sized>(
        params: &KaratiParams,
        id: &[u8],
        partial: &KaratiPartialKey,
        secret: &KaratiSecretValue,
        _pk: &KaratiPublicKey,
        m: &[u8],
        delta: Option<&[u8]>,
        rng: &mut R,
    ) -> Result<KaratiSignature> {
        no_delta(delta)?;
        let sk =
            karati::set_private_key_with(partial, secret.exponent_secret, secret.blinding_secret)?;
        karati::sign(params, id, &sk, m, rng)
    }

    fn verify(
        params: &KaratiParams,
        id: &[u8],
        pk: &KaratiPublicKey,
        m: &[u8],
        delta: Option<&[u8]>,
        sig: &KaratiSignature,
    ) -> Result<Verdict> {
        no_delta(delta)?;
        karati::verify(params, id, pk, m, sig)
    }
}

impl ClsScheme for Kumar {
    const NAME: &'static str = "kumar";

    type Params = KumarParams;
    type MasterSecret = KumarMasterSecret;
    type PartialKey = KumarPartialKey;
    type SecretValue = Scalar;
    type PublicKey = KumarPublicKey;
    type Signature = KumarSignature;

    fn setup<R: Rng + ?Sized>(suite: &Suite, rng: &mut R) -> (KumarParams, KumarMasterSecret) {
        kumar::setup(suite, rng)
    }

    fn extract_partial_key<R: Rng + ?Sized>(
        params: &KumarParams,
        msk: &KumarMasterSecret,
        id: &[u8],
        _rng: &mut R,
    ) -> Result<KumarPartialKey> {
        kumar::extract_partial_key(params, msk, id)
    }

    fn new_secret_value<R: Rng + ?Sized>(params: &KumarParams, rng: &mut R) -> Scalar {
        params.suite.random_scalar(rng)
    }

    fn public_key(
        params: &KumarParams,
        partial: &KumarPartialKey,
        secret: &Scalar,
    ) -> Result<KumarPublicKey> {
        kumar::set_public_key(params, &kumar::set_private_key_with(partial, *secret)?)
    }

    fn sign<R: Rng + ?Sized>(
        params: &KumarParams,
        id: &[u8],
        partial: &KumarPartialKey,
        secret: &Scalar,
        pk: &KumarPublicKey,
        m: &[u8],
        delta: Option<&[u8]>,
        rng: &mut R,
    ) -> Result<KumarSignature> {
        let delta = delta.ok_or(Error::MissingDelta)?;
        let sk = kumar::set_private_key_with(partial, *secret)?;
        kumar::sign(params, id, pk, &sk, delta, m, rng)
    }

    fn verify(
        params: &KumarParams,
        id: &[u8],
        pk: &KumarPublicKey,
        m: &[u8],
        delta: Option<&[u8]>,
        sig: &KumarSignature,
    ) -> Result<Verdict> {
        kumar::verify(params, id, pk, delta.ok_or(Error::MissingDelta)?, m, sig)
    }
}
