//! Partial-key mauling against the Karati scheme.
//!
//! One genuine partial key `(share, R)` for identity S is enough to mint a
//! genuine-looking partial key for any other identity S'. With
//! `α = h_S' / h_S`:
//!
//! ```text
//! share' = share^α
//! R'     = R / g1^((α − 1)·h_S)
//! ```
//!
//! so that `g1^h_S' · R' · Y_KGC = g1^h_S · R · Y_KGC` and the pairing with
//! `share'` picks up exactly the factor α that `e(g1, Y_KGC)^h` needs. The
//! attacker then finishes key generation for S' itself and signs anything.
//! No master secret is involved at any point.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::karati::{
    self, identity_hash, KaratiParams, KaratiPartialKey, KaratiPrivateKey, KaratiPublicKey,
    KaratiSignature,
};

/// Everything the adversary holds after forging for one target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KaratiForgeryBundle {
    pub target_id: Vec<u8>,
    pub alpha: Scalar,
    pub partial: KaratiPartialKey,
    pub private: KaratiPrivateKey,
    /// Must be published through Replace-Public-Key in a game.
    pub public: KaratiPublicKey,
    pub message: Vec<u8>,
    pub signature: KaratiSignature,
}

/// Derives a partial key for `target_id` from a genuine one for `source_id`.
/// Returns the key and the scaling factor α.
pub fn forge_partial_key(
    params: &KaratiParams,
    source_id: &[u8],
    known: &KaratiPartialKey,
    target_id: &[u8],
) -> Result<(KaratiPartialKey, Scalar)> {
    if !karati::verify_partial_key(params, source_id, known)? {
        return Err(Error::InvalidInputKey);
    }
    let source_hash = identity_hash(params, source_id);
    let target_hash = identity_hash(params, target_id);
    let alpha = target_hash * source_hash.inverse()?;
    let q = params.suite.order();
    let shift = params
        .suite
        .g1()
        .pow(&((alpha - Scalar::one(q)) * source_hash))?;
    let forged = KaratiPartialKey {
        share: known.share.pow(&alpha)?,
        commitment: known.commitment.div(&shift)?,
    };
    Ok((forged, alpha))
}

/// Full forgery with caller-chosen key secrets and signing nonce.
#[allow(clippy::too_many_arguments)]
pub fn forge_signature_with(
    params: &KaratiParams,
    source_id: &[u8],
    known: &KaratiPartialKey,
    target_id: &[u8],
    m: &[u8],
    exponent_secret: Scalar,
    blinding_secret: Scalar,
    nonce: Scalar,
) -> Result<KaratiForgeryBundle> {
    let (partial, alpha) = forge_partial_key(params, source_id, known, target_id)?;
    let private = karati::set_private_key_with(&partial, exponent_secret, blinding_secret)?;
    let public = karati::set_public_key(params, &partial, &private)?;
    let signature = karati::sign_with(params, target_id, &private, m, nonce)?;
    Ok(KaratiForgeryBundle {
        target_id: target_id.to_vec(),
        alpha,
        partial,
        private,
        public,
        message: m.to_vec(),
        signature,
    })
}

pub fn forge_signature<R: Rng + ?Sized>(
    params: &KaratiParams,
    source_id: &[u8],
    known: &KaratiPartialKey,
    target_id: &[u8],
    m: &[u8],
    rng: &mut R,
) -> Result<KaratiForgeryBundle> {
    let suite = &params.suite;
    let c = suite.random_scalar(rng);
    let x = suite.random_scalar(rng);
    let t = suite.random_scalar(rng);
    forge_signature_with(params, source_id, known, target_id, m, c, x, t)
}
