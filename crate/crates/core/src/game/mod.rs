//! Type-1 / Type-2 unforgeability games for certificateless signatures.
//!
//! A [`Challenger`] owns the scheme state and answers Request-Partial-Private-Key,
//! Request-Secret-Value, Request-Public-Key, Replace-Public-Key and CL-Sign.
//! Every answered query lands in the transcript; the judge then checks the
//! forgery against the game's win conditions.

pub mod adversary;
pub mod challenger;
pub mod replay;
pub mod scheme;
pub mod transcript;

pub use adversary::{run_script, Script};
pub use challenger::{Challenger, Disclosure, Forgery, SignResponse, DEFAULT_QUERY_LIMIT};
pub use replay::{replay, verify_transcript, ReplayError};
pub use scheme::{ClsScheme, Karati, Kumar};
pub use transcript::{
    AdversaryType, Clause, ForgeryRecord, GameKind, GameTranscript, OracleCall, OracleKind,
    Outcome, VerdictRecord, VerdictResult,
};
