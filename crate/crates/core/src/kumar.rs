//! The Kumar certificateless signature scheme with state information Δ.
//!
//! Written additively; in this crate's multiplicative element API `a + b` is
//! `a.mul(b)` and `k·P` is `P.pow(k)`.
//!
//! ```text
//! P_pub = α·P          D = α·H1(ID)          Y = x·P
//! R = r·P   W = H2(Δ)   h = H3(m, ID, Y, R)   V = D + r·W + h·x·P_pub
//! check e(V, P) == e(H1(ID) + h·Y, P_pub) · e(R, W)
//! ```

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::pairing::{g1_field, pairing, Group, GroupElement, HashTag, Suite};
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KumarParams {
    pub suite: Suite,
    /// P.
    #[serde(with = "g1_field")]
    pub generator: GroupElement,
    /// P_pub = α·P.
    #[serde(with = "g1_field")]
    pub kgc_public: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KumarMasterSecret {
    pub alpha: Scalar,
}

/// `D_i = α·H1(ID_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KumarPartialKey {
    #[serde(with = "g1_field")]
    pub key: GroupElement,
}

/// `SK_i = (x_i, D_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KumarPrivateKey {
    pub secret_value: Scalar,
    #[serde(with = "g1_field")]
    pub partial_key: GroupElement,
}

/// `Y_i = x_i·P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KumarPublicKey {
    #[serde(with = "g1_field")]
    pub point: GroupElement,
}

/// `σ = (R, V)` plus the state information it was produced under.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KumarSignature {
    #[serde(with = "g1_field")]
    pub commitment: GroupElement,
    #[serde(with = "g1_field")]
    pub response: GroupElement,
    #[serde(with = "crate::base64_bytes")]
    pub delta: Vec<u8>,
}

pub fn setup<R: Rng + ?Sized>(suite: &Suite, rng: &mut R) -> (KumarParams, KumarMasterSecret) {
    setup_with(suite, suite.random_scalar(rng)).expect("random scalars are nonzero")
}

pub fn setup_with(suite: &Suite, alpha: Scalar) -> Result<(KumarParams, KumarMasterSecret)> {
    if alpha.is_zero() {
        return Err(Error::ZeroScalar("master secret"));
    }
    let generator = suite.g1();
    let params = KumarParams {
        suite: suite.clone(),
        generator,
        kgc_public: generator.pow(&alpha)?,
    };
    Ok((params, KumarMasterSecret { alpha }))
}

/// Q_ID = H1(ID).
pub fn identity_point(params: &KumarParams, id: &[u8]) -> GroupElement {
    params.suite.hash_to_group(HashTag::H1, id)
}

/// W = H2(Δ).
pub fn state_point(params: &KumarParams, delta: &[u8]) -> GroupElement {
    params.suite.hash_to_group(HashTag::H2, delta)
}

/// Byte string fed to H3: each of m, ID, Y, R as a big-endian u64 length
/// followed by its bytes. Elements contribute their text encoding.
pub fn challenge_input(
    m: &[u8],
    id: &[u8],
    pk: &KumarPublicKey,
    commitment: &GroupElement,
) -> Vec<u8> {
    let y = pk.point.encode();
    let r = commitment.encode();
    let fields: [&[u8]; 4] = [m, id, y.as_bytes(), r.as_bytes()];
    let mut out = Vec::with_capacity(fields.iter().map(|f| f.len() + 8).sum());
    for field in fields {
        out.extend_from_slice(&(field.len() as u64).to_be_bytes());
        out.extend_from_slice(field);
    }
    out
}

/// h = H3(m, ID, Y, R).
pub fn challenge(
    params: &KumarParams,
    m: &[u8],
    id: &[u8],
    pk: &KumarPublicKey,
    commitment: &GroupElement,
) -> Scalar {
    params
        .suite
        .hash_to_scalar(HashTag::H3, &challenge_input(m, id, pk, commitment))
}

pub fn extract_partial_key(
    params: &KumarParams,
    msk: &KumarMasterSecret,
    id: &[u8],
) -> Result<KumarPartialKey> {
    Ok(KumarPartialKey {
        key: identity_point(params, id).pow(&msk.alpha)?,
    })
}

/// `e(D, P) == e(H1(ID), P_pub)`. The scheme itself defines no such check;
/// CLS verification never calls this.
pub fn verify_partial_key(
    params: &KumarParams,
    id: &[u8],
    partial: &KumarPartialKey,
) -> Result<bool> {
    let lhs = pairing(partial.key.expect(Group::G1)?, &params.generator)?;
    let rhs = pairing(&identity_point(params, id), &params.kgc_public)?;
    Ok(lhs == rhs)
}

pub fn set_private_key_with(
    partial: &KumarPartialKey,
    secret_value: Scalar,
) -> Result<KumarPrivateKey> {
    if secret_value.is_zero() {
        return Err(Error::ZeroScalar("secret value"));
    }
    Ok(KumarPrivateKey {
        secret_value,
        partial_key: partial.key,
    })
}

pub fn set_private_key<R: Rng + ?Sized>(partial: &KumarPartialKey, rng: &mut R) -> KumarPrivateKey {
    let x = Scalar::random_nonzero(partial.key.modulus(), rng);
    set_private_key_with(partial, x).expect("random scalars are nonzero")
}

pub fn set_public_key(params: &KumarParams, sk: &KumarPrivateKey) -> Result<KumarPublicKey> {
    Ok(KumarPublicKey {
        point: params.generator.pow(&sk.secret_value)?,
    })
}

/// Signing with a caller-chosen nonce r.
pub fn sign_with(
    params: &KumarParams,
    id: &[u8],
    pk: &KumarPublicKey,
    sk: &KumarPrivateKey,
    delta: &[u8],
    m: &[u8],
    nonce: Scalar,
) -> Result<KumarSignature> {
    let commitment = params.generator.pow(&nonce)?;
    let w = state_point(params, delta);
    let h = challenge(params, m, id, pk, &commitment);
    let response = sk
        .partial_key
        .mul(&w.pow(&nonce)?)?
        .mul(&params.kgc_public.pow(&(h * sk.secret_value))?)?;
    Ok(KumarSignature {
        commitment,
        response,
        delta: delta.to_vec(),
    })
}

pub fn sign<R: Rng + ?Sized>(
    params: &KumarParams,
    id: &[u8],
    pk: &KumarPublicKey,
    sk: &KumarPrivateKey,
    delta: &[u8],
    m: &[u8],
    rng: &mut R,
) -> Result<KumarSignature> {
    sign_with(
        params,
        id,
        pk,
        sk,
        delta,
        m,
        params.suite.random_scalar(rng),
    )
}

/// `(e(V, P), e(Q_ID + h·Y, P_pub) · e(R, W))`.
pub fn verification_sides(
    params: &KumarParams,
    id: &[u8],
    pk: &KumarPublicKey,
    delta: &[u8],
    m: &[u8],
    sig: &KumarSignature,
) -> Result<(GroupElement, GroupElement)> {
    let commitment = sig.commitment.expect(Group::G1)?;
    let h = challenge(params, m, id, pk, commitment);
    let lhs = pairing(sig.response.expect(Group::G1)?, &params.generator)?;
    let bound = identity_point(params, id).mul(&pk.point.expect(Group::G1)?.pow(&h)?)?;
    let rhs = pairing(&bound, &params.kgc_public)?
        .mul(&pairing(commitment, &state_point(params, delta))?)?;
    Ok((lhs, rhs))
}

/// Verification under the verifier's Δ. A signature carrying a different Δ
/// is rejected before any pairing is computed.
pub fn verify(
    params: &KumarParams,
    id: &[u8],
    pk: &KumarPublicKey,
    delta: &[u8],
    m: &[u8],
    sig: &KumarSignature,
) -> Result<Verdict> {
    if sig.delta != delta {
        return Ok(Verdict::Invalid);
    }
    let (lhs, rhs) = verification_sides(params, id, pk, delta, m, sig)?;
    Ok(Verdict::from(lhs == rhs))
}
