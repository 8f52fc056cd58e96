//! The Karati lightweight certificateless signature scheme.
//!
//! Written multiplicatively over a symmetric pairing `e: G1 × G1 → GT`.
//! With master secret y, identity hash h and extraction nonce r:
//!
//! ```text
//! Y_KGC = g1^y                          g2 = e(g1, g1)^y
//! R     = g1^r                          share = g1^(y·h / (h + r + y))
//! pk    = (share^(1/x), g2^c)
//! sig   = (g2^t, (g1^h · R · Y_KGC)^((c/m̄ − t)·x))
//! check (pk.1^(1/m̄) / sig.1)^h == e(pk.0, sig.2)
//! ```
//!
//! Messages enter the exponent as m̄, by default a hash into Z*_q.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_canonical_decimal, Scalar};
use crate::pairing::{g1_field, gt_field, pairing, Group, GroupElement, HashTag, Suite};
use crate::Verdict;

/// How a message becomes the scalar m̄.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MessageEncoding {
    /// m̄ = hash_to_scalar(MSG, m).
    #[default]
    Hashed,
    /// m is an ASCII decimal and m̄ = m mod q, rejected when zero.
    RawInteger,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KaratiParams {
    pub suite: Suite,
    /// g2 = e(g1, g1)^y.
    #[serde(with = "gt_field")]
    pub g2: GroupElement,
    /// Y_KGC = g1^y.
    #[serde(with = "g1_field")]
    pub kgc_public: GroupElement,
    #[serde(default)]
    pub message_encoding: MessageEncoding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KaratiMasterSecret {
    pub y: Scalar,
}

/// `D_i = (y_i, R_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KaratiPartialKey {
    #[serde(with = "g1_field")]
    pub share: GroupElement,
    #[serde(with = "g1_field")]
    pub commitment: GroupElement,
}

/// The user-chosen secrets `(c_i, x_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KaratiSecretValue {
    pub exponent_secret: Scalar,
    pub blinding_secret: Scalar,
}

/// `SK_i = (c_i, x_i, R_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KaratiPrivateKey {
    pub exponent_secret: Scalar,
    pub blinding_secret: Scalar,
    #[serde(with = "g1_field")]
    pub commitment: GroupElement,
}

impl KaratiPrivateKey {
    pub fn secret_value(&self) -> KaratiSecretValue {
        KaratiSecretValue {
            exponent_secret: self.exponent_secret,
            blinding_secret: self.blinding_secret,
        }
    }
}

/// `Y_i = (y_i^(1/x_i), g2^(c_i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KaratiPublicKey {
    #[serde(with = "g1_field")]
    pub blinded_share: GroupElement,
    #[serde(with = "gt_field")]
    pub exponent_commitment: GroupElement,
}

/// `σ = (σ1, σ2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KaratiSignature {
    #[serde(with = "gt_field")]
    pub nonce_commitment: GroupElement,
    #[serde(with = "g1_field")]
    pub response: GroupElement,
}

pub fn setup<R: Rng + ?Sized>(suite: &Suite, rng: &mut R) -> (KaratiParams, KaratiMasterSecret) {
    setup_with(suite, suite.random_scalar(rng)).expect("random scalars are nonzero")
}

pub fn setup_with(suite: &Suite, y: Scalar) -> Result<(KaratiParams, KaratiMasterSecret)> {
    if y.is_zero() {
        return Err(Error::ZeroScalar("master secret"));
    }
    let g2 = pairing(&suite.g1(), &suite.g1())?.pow(&y)?;
    let kgc_public = suite.g1().pow(&y)?;
    let params = KaratiParams {
        suite: suite.clone(),
        g2,
        kgc_public,
        message_encoding: MessageEncoding::Hashed,
    };
    Ok((params, KaratiMasterSecret { y }))
}

pub fn identity_hash(params: &KaratiParams, id: &[u8]) -> Scalar {
    params.suite.hash_to_scalar(HashTag::H, id)
}

/// m̄ under the params' message encoding.
pub fn encode_message(params: &KaratiParams, m: &[u8]) -> Result<Scalar> {
    let suite = &params.suite;
    match params.message_encoding {
        MessageEncoding::Hashed => Ok(suite.hash_to_scalar(HashTag::Msg, m)),
        MessageEncoding::RawInteger => {
            let text = std::str::from_utf8(m)
                .map_err(|_| Error::InvalidMessage("raw message is not ASCII".into()))?;
            let n = parse_canonical_decimal(text)
                .map_err(|_| Error::InvalidMessage(format!("`{text}` is not a decimal integer")))?;
            let encoded = suite.scalar(n);
            if encoded.is_zero() {
                return Err(Error::InvalidMessage(format!(
                    "{n} is zero mod {}",
                    suite.order()
                )));
            }
            Ok(encoded)
        }
    }
}

/// `g1^h · R · Y_KGC`, the base both the partial-key check and signing raise to a power.
fn signing_base(
    params: &KaratiParams,
    h: &Scalar,
    commitment: &GroupElement,
) -> Result<GroupElement> {
    params
        .suite
        .g1()
        .pow(h)?
        .mul(commitment.expect(Group::G1)?)?
        .mul(&params.kgc_public)
}

/// Extraction with a caller-chosen nonce r. Fails when h + r + y ≡ 0.
pub fn extract_partial_key_with(
    params: &KaratiParams,
    msk: &KaratiMasterSecret,
    id: &[u8],
    nonce: Scalar,
) -> Result<KaratiPartialKey> {
    if nonce.is_zero() {
        return Err(Error::ZeroScalar("extraction nonce"));
    }
    let h = identity_hash(params, id);
    let denominator = h + nonce + msk.y;
    if denominator.is_zero() {
        return Err(Error::DegenerateNonce);
    }
    let g1 = params.suite.g1();
    let exponent = msk.y * h * denominator.inverse()?;
    Ok(KaratiPartialKey {
        share: g1.pow(&exponent)?,
        commitment: g1.pow(&nonce)?,
    })
}

/// Extraction with a fresh nonce, redrawn while h + r + y ≡ 0.
pub fn extract_partial_key<R: Rng + ?Sized>(
    params: &KaratiParams,
    msk: &KaratiMasterSecret,
    id: &[u8],
    rng: &mut R,
) -> KaratiPartialKey {
    loop {
        match extract_partial_key_with(params, msk, id, params.suite.random_scalar(rng)) {
            Ok(key) => return key,
            Err(Error::DegenerateNonce) => continue,
            Err(e) => unreachable!("extraction with matching suite cannot fail: {e}"),
        }
    }
}

/// Both sides of `e(g1, Y_KGC)^h = e(y_i, g1^h · R_i · Y_KGC)`.
pub fn partial_key_sides(
    params: &KaratiParams,
    id: &[u8],
    key: &KaratiPartialKey,
) -> Result<(GroupElement, GroupElement)> {
    let h = identity_hash(params, id);
    let lhs = pairing(&params.suite.g1(), &params.kgc_public)?.pow(&h)?;
    let rhs = pairing(
        key.share.expect(Group::G1)?,
        &signing_base(params, &h, &key.commitment)?,
    )?;
    Ok((lhs, rhs))
}

/// The user-side genuineness check on a partial key. CLS verification never
/// runs it.
pub fn verify_partial_key(
    params: &KaratiParams,
    id: &[u8],
    key: &KaratiPartialKey,
) -> Result<bool> {
    let (lhs, rhs) = partial_key_sides(params, id, key)?;
    Ok(lhs == rhs)
}

pub fn set_private_key_with(
    partial: &KaratiPartialKey,
    exponent_secret: Scalar,
    blinding_secret: Scalar,
) -> Result<KaratiPrivateKey> {
    if exponent_secret.is_zero() {
        return Err(Error::ZeroScalar("c"));
    }
    if blinding_secret.is_zero() {
        return Err(Error::ZeroScalar("x"));
    }
    Ok(KaratiPrivateKey {
        exponent_secret,
        blinding_secret,
        commitment: partial.commitment,
    })
}

pub fn set_private_key<R: Rng + ?Sized>(
    partial: &KaratiPartialKey,
    rng: &mut R,
) -> KaratiPrivateKey {
    let q = partial.share.modulus();
    let c = Scalar::random_nonzero(q, rng);
    let x = Scalar::random_nonzero(q, rng);
    set_private_key_with(partial, c, x).expect("random scalars are nonzero")
}

pub fn set_public_key(
    params: &KaratiParams,
    partial: &KaratiPartialKey,
    sk: &KaratiPrivateKey,
) -> Result<KaratiPublicKey> {
    Ok(KaratiPublicKey {
        blinded_share: partial.share.pow(&sk.blinding_secret.inverse()?)?,
        exponent_commitment: params.g2.pow(&sk.exponent_secret)?,
    })
}

/// Signing with a caller-chosen nonce t.
pub fn sign_with(
    params: &KaratiParams,
    id: &[u8],
    sk: &KaratiPrivateKey,
    m: &[u8],
    nonce: Scalar,
) -> Result<KaratiSignature> {
    let h = identity_hash(params, id);
    let m_bar = encode_message(params, m)?;
    let exponent = (sk.exponent_secret * m_bar.inverse()? - nonce) * sk.blinding_secret;
    Ok(KaratiSignature {
        nonce_commitment: params.g2.pow(&nonce)?,
        response: signing_base(params, &h, &sk.commitment)?.pow(&exponent)?,
    })
}

pub fn sign<R: Rng + ?Sized>(
    params: &KaratiParams,
    id: &[u8],
    sk: &KaratiPrivateKey,
    m: &[u8],
    rng: &mut R,
) -> Result<KaratiSignature> {
    sign_with(params, id, sk, m, params.suite.random_scalar(rng))
}

/// Both sides of the verification equation, in GT.
pub fn verification_sides(
    params: &KaratiParams,
    id: &[u8],
    pk: &KaratiPublicKey,
    m: &[u8],
    sig: &KaratiSignature,
) -> Result<(GroupElement, GroupElement)> {
    let h = identity_hash(params, id);
    let m_bar = encode_message(params, m)?;
    let lhs = pk
        .exponent_commitment
        .expect(Group::GT)?
        .pow(&m_bar.inverse()?)?
        .div(sig.nonce_commitment.expect(Group::GT)?)?
        .pow(&h)?;
    let rhs = pairing(
        pk.blinded_share.expect(Group::G1)?,
        sig.response.expect(Group::G1)?,
    )?;
    Ok((lhs, rhs))
}

pub fn verify(
    params: &KaratiParams,
    id: &[u8],
    pk: &KaratiPublicKey,
    m: &[u8],
    sig: &KaratiSignature,
) -> Result<Verdict> {
    let (lhs, rhs) = verification_sides(params, id, pk, m, sig)?;
    Ok(Verdict::from(lhs == rhs))
}
