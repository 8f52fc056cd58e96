//! Forgeries against the Kumar scheme.
//!
//! Type 1 (outsider with the signer's secret value): one signature `(R, V)`
//! under Δ leaks `D + r·W = V − h·x·P_pub`, a key that signs any further
//! message under the same Δ by reusing R.
//!
//! Type 2 (the KGC): `h·x·P_pub = h·α·Y`, so knowing α substitutes for the
//! unknown x and the KGC signs anything for anyone from scratch.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::kumar::{
    self, challenge, KumarMasterSecret, KumarParams, KumarPublicKey, KumarSignature,
};
use crate::pairing::{g1_field, GroupElement};

/// `D_{S,Δ} = D_S + r·H2(Δ)` together with the commitment R it is tied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaBoundKey {
    #[serde(with = "g1_field")]
    pub key: GroupElement,
    #[serde(with = "crate::base64_bytes")]
    pub delta: Vec<u8>,
    #[serde(with = "g1_field")]
    pub commitment: GroupElement,
}

impl DeltaBoundKey {
    /// `e(D_{S,Δ}, P) == e(Q_ID, P_pub) · e(R, W)`.
    pub fn is_consistent(&self, params: &KumarParams, id: &[u8]) -> Result<bool> {
        let lhs = crate::pairing::pairing(&self.key, &params.generator)?;
        let rhs = crate::pairing::pairing(&kumar::identity_point(params, id), &params.kgc_public)?
            .mul(&crate::pairing::pairing(
                &self.commitment,
                &kumar::state_point(params, &self.delta),
            )?)?;
        Ok(lhs == rhs)
    }
}

/// Strips the `h·x·P_pub` term from an observed signature.
pub fn recover_delta_key(
    params: &KumarParams,
    id: &[u8],
    pk: &KumarPublicKey,
    secret_value: Scalar,
    m: &[u8],
    observed: &KumarSignature,
) -> Result<DeltaBoundKey> {
    if !kumar::verify(params, id, pk, &observed.delta, m, observed)?.is_valid() {
        return Err(Error::InvalidObservation);
    }
    Ok(strip_challenge(params, id, pk, secret_value, m, observed))
}

fn strip_challenge(
    params: &KumarParams,
    id: &[u8],
    pk: &KumarPublicKey,
    secret_value: Scalar,
    m: &[u8],
    observed: &KumarSignature,
) -> DeltaBoundKey {
    let h = challenge(params, m, id, pk, &observed.commitment);
    let term = params
        .kgc_public
        .pow(&(secret_value * h))
        .expect("suite checked by verify");
    DeltaBoundKey {
        key: observed
            .response
            .div(&term)
            .expect("suite checked by verify"),
        delta: observed.delta.clone(),
        commitment: observed.commitment,
    }
}

/// Signs `m_new` under the Δ and R captured in `bound`.
pub fn forge_type1(
    params: &KumarParams,
    id: &[u8],
    pk: &KumarPublicKey,
    bound: &DeltaBoundKey,
    secret_value: Scalar,
    m_new: &[u8],
) -> Result<KumarSignature> {
    let h = challenge(params, m_new, id, pk, &bound.commitment);
    let response = bound
        .key
        .mul(&params.kgc_public.pow(&(h * secret_value))?)?;
    Ok(KumarSignature {
        commitment: bound.commitment,
        response,
        delta: bound.delta.clone(),
    })
}

/// KGC forgery with a caller-chosen nonce. Never reads the signer's secret.
pub fn forge_type2_with(
    params: &KumarParams,
    msk: &KumarMasterSecret,
    id: &[u8],
    pk: &KumarPublicKey,
    delta: &[u8],
    m: &[u8],
    nonce: Scalar,
) -> Result<KumarSignature> {
    let partial = kumar::extract_partial_key(params, msk, id)?;
    let commitment = params.generator.pow(&nonce)?;
    let h = challenge(params, m, id, pk, &commitment);
    let response = partial
        .key
        .mul(&kumar::state_point(params, delta).pow(&nonce)?)?
        .mul(&pk.point.pow(&(h * msk.alpha))?)?;
    Ok(KumarSignature {
        commitment,
        response,
        delta: delta.to_vec(),
    })
}

pub fn forge_type2<R: Rng + ?Sized>(
    params: &KumarParams,
    msk: &KumarMasterSecret,
    id: &[u8],
    pk: &KumarPublicKey,
    delta: &[u8],
    m: &[u8],
    rng: &mut R,
) -> Result<KumarSignature> {
    forge_type2_with(
        params,
        msk,
        id,
        pk,
        delta,
        m,
        params.suite.random_scalar(rng),
    )
}
