//! Two lightweight certificateless signature schemes over a symmetric
//! pairing, the forgeries that break them, and a challenger that plays the
//! Type-1 / Type-2 unforgeability games against scripted adversaries.
//!
//! - [`pairing`], [`field`]: the bilinear group abstraction and its
//!   exponent-transparent mock backend.
//! - [`karati`], [`karati_attack`]: the Karati scheme and partial-key
//!   mauling.
//! - [`kumar`], [`kumar_attack`]: the Kumar scheme, the Δ-replay
//!   forgery and the KGC forgery.
//! - [`game`]: challenger, oracles, judges, transcripts and replay.
//! - [`demo`], [`fixtures`]: end-to-end reports and golden fixtures.
//! - [`keyfile`]: JSON key files.

pub mod demo;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod game;
pub mod karati;
pub mod karati_attack;
pub mod keyfile;
pub mod kumar;
pub mod kumar_attack;
pub mod pairing;

use std::fmt;

pub use error::{Error, Result};
pub use field::Scalar;
pub use pairing::{pairing, Group, GroupElement, HashTag, Suite};

/// Output of CLS-Verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    Invalid,
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Valid
        } else {
            Verdict::Invalid
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "VALID",
            Verdict::Invalid => "INVALID",
        })
    }
}

/// Serde adapter for byte strings carried as standard base64.
pub(crate) mod base64_bytes {
    use base64::engine::general_purpose::STANDARD;
    use base64::Engine;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(bytes: &[u8], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&STANDARD.encode(bytes))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<u8>, D::Error> {
        let s = String::deserialize(deserializer)?;
        STANDARD.decode(s).map_err(serde::de::Error::custom)
    }
}
