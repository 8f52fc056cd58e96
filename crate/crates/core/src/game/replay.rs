//! Independent re-execution of a stored transcript.
//!
//! A fresh challenger is seeded from the transcript and every recorded query
//! is asked again; each answer must match the recorded response. The
//! recorded forgery is judged again and must reach the recorded verdict.
//!
//! [`verify_transcript`] additionally regenerates the game from its named
//! script and compares bytes, so it only accepts transcripts of the shipped
//! adversaries. [`replay`] stops short of that and serves transcripts written
//! by other adversaries, which must then be in canonical form.

use serde_json::Value;

use super::adversary::{run_script, Script};
use super::challenger::{Challenger, Forgery};
use super::scheme::{ClsScheme, Karati, Kumar};
use super::transcript::{GameTranscript, Outcome, VerdictRecord};
use crate::pairing::{Suite, DIGEST_NAME};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("replay mismatch at {at}: {detail}")]
    Mismatch { at: String, detail: String },
}

fn schema(e: impl std::fmt::Display) -> ReplayError {
    ReplayError::Schema(e.to_string())
}

fn parse(text: &str) -> Result<(GameTranscript, Suite), ReplayError> {
    let transcript = GameTranscript::from_json(text).map_err(schema)?;
    if transcript.digest != DIGEST_NAME {
        return Err(schema(format!(
            "unsupported digest `{}`",
            transcript.digest
        )));
    }
    let suite = Suite::from_id(&transcript.suite).map_err(schema)?;
    Ok((transcript, suite))
}

fn rejudge(transcript: &GameTranscript, suite: &Suite) -> Result<Outcome, ReplayError> {
    match transcript.scheme.as_str() {
        "karati" => replay_calls::<Karati>(suite, transcript),
        "kumar" => replay_calls::<Kumar>(suite, transcript),
        other => Err(schema(format!("unknown scheme `{other}`"))),
    }
}

fn check_verdict(transcript: &GameTranscript, outcome: Outcome) -> Result<(), ReplayError> {
    if VerdictRecord::from(outcome) == transcript.verdict {
        return Ok(());
    }
    Err(ReplayError::Mismatch {
        at: "verdict".into(),
        detail: format!(
            "recorded {:?} but re-judging gives {outcome}",
            transcript.verdict.result
        ),
    })
}

fn compare(
    expected: &GameTranscript,
    actual: &GameTranscript,
    text: &str,
) -> Result<(), ReplayError> {
    if expected.to_json() == text {
        Ok(())
    } else {
        Err(first_divergence(expected, actual))
    }
}

/// Replays the calls and re-judges the forgery of a transcript produced by
/// any adversary. Returns the re-derived outcome.
pub fn replay(text: &str) -> Result<Outcome, ReplayError> {
    let (transcript, suite) = parse(text)?;
    let outcome = rejudge(&transcript, &suite)?;
    check_verdict(&transcript, outcome)?;
    compare(&transcript, &transcript, text)?;
    Ok(outcome)
}

/// Checks a transcript of one of the shipped scripts: replay, re-judging,
/// then byte-for-byte regeneration. Returns the re-derived outcome.
pub fn verify_transcript(text: &str) -> Result<Outcome, ReplayError> {
    let (transcript, suite) = parse(text)?;
    let script: Script = transcript.adversary.parse().map_err(|_| {
        schema(format!(
            "unknown adversary `{}` cannot be regenerated",
            transcript.adversary
        ))
    })?;
    if script.scheme() != transcript.scheme || script.game() != transcript.game {
        return Err(schema(format!(
            "adversary `{script}` does not play {} {}",
            transcript.scheme, transcript.game
        )));
    }
    let outcome = rejudge(&transcript, &suite)?;
    let (expected, _) =
        run_script(script, &suite, transcript.seed).map_err(|e| ReplayError::Mismatch {
            at: "script".into(),
            detail: e.to_string(),
        })?;
    compare(&expected, &transcript, text)?;
    check_verdict(&transcript, outcome)?;
    Ok(outcome)
}

fn replay_calls<S: ClsScheme>(suite: &Suite, t: &GameTranscript) -> Result<Outcome, ReplayError> {
    let (mut challenger, _) = Challenger::<S>::new(suite, t.game, t.seed);
    for (index, call) in t.calls.iter().enumerate() {
        let at = format!("call {index}");
        if call.seq != index as u64 {
            return Err(ReplayError::Mismatch {
                at,
                detail: format!("sequence number {}", call.seq),
            });
        }
        let response = challenger
            .query(call.kind, &call.id, &call.payload)
            .map_err(|e| ReplayError::Mismatch {
                at: at.clone(),
                detail: e.to_string(),
            })?;
        if response != call.response {
            return Err(ReplayError::Mismatch {
                at,
                detail: format!(
                    "recorded {} but challenger answers {}",
                    call.response, response
                ),
            });
        }
    }
    let forgery = Forgery::<S>::from_record(&t.forgery).map_err(schema)?;
    Ok(challenger.judge(&forgery))
}

fn first_divergence(expected: &GameTranscript, actual: &GameTranscript) -> ReplayError {
    let mismatch = |at: String, detail: String| ReplayError::Mismatch { at, detail };
    for (index, (e, a)) in expected.calls.iter().zip(&actual.calls).enumerate() {
        if e != a {
            return mismatch(
                format!("call {index}"),
                "differs from the regenerated game".into(),
            );
        }
    }
    if expected.calls.len() != actual.calls.len() {
        return mismatch(
            format!("call {}", expected.calls.len().min(actual.calls.len())),
            format!(
                "{} calls recorded, {} regenerated",
                actual.calls.len(),
                expected.calls.len()
            ),
        );
    }
    let fields: [(&str, Value, Value); 4] = [
        (
            "forgery",
            serde_json::to_value(&expected.forgery).unwrap(),
            serde_json::to_value(&actual.forgery).unwrap(),
        ),
        (
            "verdict",
            serde_json::to_value(expected.verdict).unwrap(),
            serde_json::to_value(actual.verdict).unwrap(),
        ),
        ("seed", expected.seed.into(), actual.seed.into()),
        (
            "adversary",
            expected.adversary.clone().into(),
            actual.adversary.clone().into(),
        ),
    ];
    for (name, e, a) in fields {
        if e != a {
            return mismatch(name.into(), "differs from the regenerated game".into());
        }
    }
    mismatch(
        "layout".into(),
        "bytes differ from the canonical encoding".into(),
    )
}
