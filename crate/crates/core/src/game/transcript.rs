use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Which unforgeability game is being played.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameKind {
    /// Against A1: may replace public keys, never sees the master secret.
    Game1,
    /// Against A2: holds the master secret, may not replace public keys.
    Game2,
}

impl GameKind {
    pub fn adversary(self) -> AdversaryType {
        match self {
            GameKind::Game1 => AdversaryType::A1,
            GameKind::Game2 => AdversaryType::A2,
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GameKind::Game1 => "game1",
            GameKind::Game2 => "game2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AdversaryType {
    A1,
    A2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OracleKind {
    PartialKey,
    SecretValue,
    PublicKey,
    ReplaceKey,
    Sign,
}

/// One answered oracle query. `payload` and `response` hold scheme-specific
/// JSON with elements in the `suite:group:exponent` encoding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleCall {
    pub seq: u64,
    pub kind: OracleKind,
    pub id: String,
    pub payload: Value,
    pub response: Value,
}

impl OracleCall {
    /// The message of a Sign query.
    pub fn signed_message(&self) -> Option<&str> {
        match self.kind {
            OracleKind::Sign => self.payload.get("message").and_then(Value::as_str),
            _ => None,
        }
    }
}

/// The adversary's final claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForgeryRecord {
    pub id: String,
    pub message: String,
    pub signature: Value,
    pub public_key: Value,
    /// Base64 state information, Kumar only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
}

/// A named win-condition clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// The claimed public key is not the one in effect for the identity.
    PublicKey,
    /// CLS-Verify rejected the forgery.
    Verify,
    /// Request-Partial-Private-Key was asked for the target (Game 1).
    PartialKey,
    /// Request-Secret-Value was asked for the target (Game 2).
    SecretValue,
    /// CL-Sign was asked for the forged (identity, message).
    Sign,
    /// The target's key was replaced in Game 2.
    ReplacedKey,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::PublicKey => "public-key",
            Clause::Verify => "verify",
            Clause::PartialKey => "partial-key",
            Clause::SecretValue => "secret-value",
            Clause::Sign => "sign",
            Clause::ReplacedKey => "replaced-key",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Win,
    Lose(Clause),
}

impl Outcome {
    pub fn is_win(self) -> bool {
        self == Outcome::Win
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Win => f.write_str("WIN"),
            Outcome::Lose(clause) => write!(f, "LOSE({clause})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictResult {
    #[serde(rename = "WIN")]
    Win,
    #[serde(rename = "LOSE")]
    Lose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictRecord {
    pub result: VerdictResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<Clause>,
}

impl From<Outcome> for VerdictRecord {
    fn from(outcome: Outcome) -> Self {
        match outcome {
            Outcome::Win => VerdictRecord {
                result: VerdictResult::Win,
                reason: None,
            },
            Outcome::Lose(clause) => VerdictRecord {
                result: VerdictResult::Lose,
                reason: Some(clause),
            },
        }
    }
}

/// A finished game: every oracle call in order, the forgery, the verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameTranscript {
    pub game: GameKind,
    pub scheme: String,
    /// Name of the scripted adversary that produced the transcript.
    pub adversary: String,
    pub seed: u64,
    pub suite: String,
    pub digest: String,
    pub calls: Vec<OracleCall>,
    pub forgery: ForgeryRecord,
    pub verdict: VerdictRecord,
}

impl GameTranscript {
    /// Canonical file form: pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("transcripts always serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn count(&self, kind: OracleKind) -> usize {
        self.calls.iter().filter(|c| c.kind == kind).count()
    }
}
