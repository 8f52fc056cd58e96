use std::collections::BTreeMap;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::scheme::ClsScheme;
use super::transcript::{
    AdversaryType, Clause, ForgeryRecord, GameKind, GameTranscript, OracleCall, OracleKind, Outcome,
};
use crate::error::{Error, Result};
use crate::pairing::{Suite, DIGEST_NAME};

/// Stand-in for "polynomially many" queries.
pub const DEFAULT_QUERY_LIMIT: usize = 1 << 16;

/// What the challenger hands the adversary at setup.
#[derive(Clone, Debug)]
pub struct Disclosure<S: ClsScheme> {
    pub params: S::Params,
    /// Present only for A2.
    pub master_secret: Option<S::MasterSecret>,
}

/// Answer to CL-Sign: the signature and the honest key it verifies under.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SignResponse<S: ClsScheme> {
    pub signature: S::Signature,
    pub public_key: S::PublicKey,
}

/// The adversary's output.
#[derive(Clone, Debug, PartialEq)]
pub struct Forgery<S: ClsScheme> {
    pub id: String,
    pub message: String,
    pub delta: Option<Vec<u8>>,
    pub signature: S::Signature,
    /// The key the adversary claims is in effect for `id`.
    pub public_key: S::PublicKey,
}

impl<S: ClsScheme> Forgery<S> {
    pub fn record(&self) -> ForgeryRecord {
        ForgeryRecord {
            id: self.id.clone(),
            message: self.message.clone(),
            signature: to_value(&self.signature),
            public_key: to_value(&self.public_key),
            delta: self.delta.as_ref().map(|d| STANDARD.encode(d)),
        }
    }

    pub fn from_record(record: &ForgeryRecord) -> Result<Self> {
        let delta = match &record.delta {
            Some(text) => Some(
                STANDARD
                    .decode(text)
                    .map_err(|e| Error::Payload(format!("delta: {e}")))?,
            ),
            None => None,
        };
        Ok(Self {
            id: record.id.clone(),
            message: record.message.clone(),
            delta,
            signature: from_value(&record.signature)?,
            public_key: from_value(&record.public_key)?,
        })
    }
}

#[derive(Debug)]
struct UserRecord<S: ClsScheme> {
    partial: S::PartialKey,
    secret: S::SecretValue,
    original: S::PublicKey,
    current: S::PublicKey,
    replaced: bool,
}

impl<S: ClsScheme> Clone for UserRecord<S> {
    fn clone(&self) -> Self {
        Self {
            partial: self.partial.clone(),
            secret: self.secret.clone(),
            original: self.original.clone(),
            current: self.current.clone(),
            replaced: self.replaced,
        }
    }
}

/// Holds the scheme state and answers the five oracle queries, logging each.
///
/// Users are created on first mention with challenger randomness, so a game
/// is fully determined by its seed and the sequence of queries.
pub struct Challenger<S: ClsScheme> {
    game: GameKind,
    seed: u64,
    suite: Suite,
    params: S::Params,
    master: S::MasterSecret,
    users: BTreeMap<String, UserRecord<S>>,
    calls: Vec<OracleCall>,
    rng: ChaCha20Rng,
    query_limit: usize,
}

pub(crate) fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("scheme values always serialize")
}

pub(crate) fn from_value<T: serde::de::DeserializeOwned>(value: &Value) -> Result<T> {
    T::deserialize(value).map_err(|e| Error::Payload(e.to_string()))
}

impl<S: ClsScheme> Challenger<S> {
    pub fn new(suite: &Suite, game: GameKind, seed: u64) -> (Self, Disclosure<S>) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let (params, master) = S::setup(suite, &mut rng);
        let disclosure = Disclosure {
            params: params.clone(),
            master_secret: match game.adversary() {
                AdversaryType::A1 => None,
                AdversaryType::A2 => Some(master.clone()),
            },
        };
        let challenger = Self {
            game,
            seed,
            suite: suite.clone(),
            params,
            master,
            users: BTreeMap::new(),
            calls: Vec::new(),
            rng,
            query_limit: DEFAULT_QUERY_LIMIT,
        };
        (challenger, disclosure)
    }

    pub fn with_query_limit(mut self, limit: usize) -> Self {
        self.query_limit = limit;
        self
    }

    pub fn game(&self) -> GameKind {
        self.game
    }

    pub fn params(&self) -> &S::Params {
        &self.params
    }

    pub fn calls(&self) -> &[OracleCall] {
        &self.calls
    }

    fn user(&mut self, id: &str) -> Result<&mut UserRecord<S>> {
        if !self.users.contains_key(id) {
            let partial =
                S::extract_partial_key(&self.params, &self.master, id.as_bytes(), &mut self.rng)?;
            let secret = S::new_secret_value(&self.params, &mut self.rng);
            let pk = S::public_key(&self.params, &partial, &secret)?;
            self.users.insert(
                id.to_string(),
                UserRecord {
                    partial,
                    secret,
                    original: pk.clone(),
                    current: pk,
                    replaced: false,
                },
            );
        }
        Ok(self.users.get_mut(id).expect("inserted above"))
    }

    fn budget(&self) -> Result<()> {
        if self.calls.len() >= self.query_limit {
            return Err(Error::QueryLimit(self.query_limit));
        }
        Ok(())
    }

    fn log(&mut self, kind: OracleKind, id: &str, payload: Value, response: Value) {
        self.calls.push(OracleCall {
            seq: self.calls.len() as u64,
            kind,
            id: id.to_string(),
            payload,
            response,
        });
    }

    pub fn request_partial_key(&mut self, id: &str) -> Result<S::PartialKey> {
        self.budget()?;
        let partial = self.user(id)?.partial.clone();
        self.log(OracleKind::PartialKey, id, Value::Null, to_value(&partial));
        Ok(partial)
    }

    pub fn request_secret_value(&mut self, id: &str) -> Result<S::SecretValue> {
        self.budget()?;
        let secret = self.user(id)?.secret.clone();
        self.log(OracleKind::SecretValue, id, Value::Null, to_value(&secret));
        Ok(secret)
    }

    pub fn request_public_key(&mut self, id: &str) -> Result<S::PublicKey> {
        self.budget()?;
        let pk = self.user(id)?.current.clone();
        self.log(OracleKind::PublicKey, id, Value::Null, to_value(&pk));
        Ok(pk)
    }

    fn check_role(&self, kind: OracleKind) -> Result<()> {
        if kind == OracleKind::ReplaceKey && self.game.adversary() == AdversaryType::A2 {
            return Err(Error::RoleViolation(
                "a Type-2 adversary may not replace public keys".into(),
            ));
        }
        Ok(())
    }

    /// A1 only.
    pub fn replace_public_key(&mut self, id: &str, pk: S::PublicKey) -> Result<()> {
        self.check_role(OracleKind::ReplaceKey)?;
        self.budget()?;
        let payload = json!({ "public_key": to_value(&pk) });
        let user = self.user(id)?;
        user.current = pk;
        user.replaced = true;
        self.log(OracleKind::ReplaceKey, id, payload, Value::Null);
        Ok(())
    }

    /// Signs with the user's honest keys, whatever key is currently published.
    pub fn sign(
        &mut self,
        id: &str,
        message: &str,
        delta: Option<&[u8]>,
    ) -> Result<SignResponse<S>> {
        self.budget()?;
        let mut payload = json!({ "message": message });
        if let Some(d) = delta {
            payload["delta"] = Value::String(STANDARD.encode(d));
        }
        let params = self.params.clone();
        let user = self.user(id)?.clone();
        let signature = S::sign(
            &params,
            id.as_bytes(),
            &user.partial,
            &user.secret,
            &user.original,
            message.as_bytes(),
            delta,
            &mut self.rng,
        )?;
        let response = SignResponse::<S> {
            signature,
            public_key: user.original,
        };
        self.log(OracleKind::Sign, id, payload, to_value(&response));
        Ok(response)
    }

    /// Answers a query given in transcript form.
    pub fn query(&mut self, kind: OracleKind, id: &str, payload: &Value) -> Result<Value> {
        let expect_null = |payload: &Value| {
            if payload.is_null() {
                Ok(())
            } else {
                Err(Error::Payload(format!("{kind:?} takes no payload")))
            }
        };
        match kind {
            OracleKind::PartialKey => {
                expect_null(payload)?;
                self.request_partial_key(id).map(|v| to_value(&v))
            }
            OracleKind::SecretValue => {
                expect_null(payload)?;
                self.request_secret_value(id).map(|v| to_value(&v))
            }
            OracleKind::PublicKey => {
                expect_null(payload)?;
                self.request_public_key(id).map(|v| to_value(&v))
            }
            OracleKind::ReplaceKey => {
                self.check_role(kind)?;
                #[derive(Deserialize)]
                #[serde(deny_unknown_fields)]
                struct Replace {
                    public_key: Value,
                }
                let replace: Replace = from_value(payload)?;
                self.replace_public_key(id, from_value(&replace.public_key)?)?;
                Ok(Value::Null)
            }
            OracleKind::Sign => {
                #[derive(Deserialize)]
                #[serde(deny_unknown_fields)]
                struct SignPayload {
                    message: String,
                    delta: Option<String>,
                }
                let request: SignPayload = from_value(payload)?;
                let delta = request
                    .delta
                    .map(|d| {
                        STANDARD
                            .decode(d)
                            .map_err(|e| Error::Payload(format!("delta: {e}")))
                    })
                    .transpose()?;
                self.sign(id, &request.message, delta.as_deref())
                    .map(|v| to_value(&v))
            }
        }
    }

    fn queried(&self, kind: OracleKind, id: &str) -> bool {
        self.calls.iter().any(|c| c.kind == kind && c.id == id)
    }

    fn signed(&self, id: &str, message: &str) -> bool {
        self.calls
            .iter()
            .any(|c| c.id == id && c.signed_message() == Some(message))
    }

    /// Applies the win conditions of the challenger's game to a forgery.
    ///
    /// Game 1: VALID under the key in effect, no partial-key query on the
    /// target, no sign query on (target, message). Game 2: VALID under the
    /// never-replaced key, no secret-value query on the target, no sign query
    /// on (target, message).
    pub fn judge(&mut self, forgery: &Forgery<S>) -> Outcome {
        let user = match self.user(&forgery.id) {
            Ok(user) => user.clone(),
            Err(_) => return Outcome::Lose(Clause::Verify),
        };
        if forgery.public_key != user.current {
            return Outcome::Lose(Clause::PublicKey);
        }
        if self.game == GameKind::Game2 && user.replaced {
            return Outcome::Lose(Clause::ReplacedKey);
        }
        let verdict = S::verify(
            &self.params,
            forgery.id.as_bytes(),
            &user.current,
            forgery.message.as_bytes(),
            forgery.delta.as_deref(),
            &forgery.signature,
        );
        if !matches!(verdict, Ok(v) if v.is_valid()) {
            return Outcome::Lose(Clause::Verify);
        }
        let forbidden_key_query = match self.game {
            GameKind::Game1 => (OracleKind::PartialKey, Clause::PartialKey),
            GameKind::Game2 => (OracleKind::SecretValue, Clause::SecretValue),
        };
        if self.queried(forbidden_key_query.0, &forgery.id) {
            return Outcome::Lose(forbidden_key_query.1);
        }
        if self.signed(&forgery.id, &forgery.message) {
            return Outcome::Lose(Clause::Sign);
        }
        Outcome::Win
    }

    /// Judges the forgery and seals the transcript.
    pub fn finish(mut self, adversary: &str, forgery: &Forgery<S>) -> (GameTranscript, Outcome) {
        let outcome = self.judge(forgery);
        let transcript = GameTranscript {
            game: self.game,
            scheme: S::NAME.to_string(),
            adversary: adversary.to_string(),
            seed: self.seed,
            suite: self.suite.id(),
            digest: DIGEST_NAME.to_string(),
            calls: self.calls,
            forgery: forgery.record(),
            verdict: outcome.into(),
        };
        (transcript, outcome)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::scheme::{Karati, Kumar};
    use crate::karati;

    fn suite() -> Suite {
        Suite::fixture()
    }

    #[test]
    fn disclosure_follows_role() {
        let (_, d1) = Challenger::<Karati>::new(&suite(), GameKind::Game1, 1);
        assert!(d1.master_secret.is_none());
        let (_, d2) = Challenger::<Kumar>::new(&suite(), GameKind::Game2, 1);
        assert!(d2.master_secret.is_some());
        let (_, again) = Challenger::<Karati>::new(&suite(), GameKind::Game1, 1);
        assert_eq!(d1.params, again.params);
    }

    #[test]
    fn users_are_stable_after_first_touch() {
        let (mut ch, _) = Challenger::<Kumar>::new(&suite(), GameKind::Game1, 9);
        let first = ch.request_public_key("carol").unwrap();
        let partial = ch.request_partial_key("carol").unwrap();
        assert_eq!(ch.request_public_key("carol").unwrap(), first);
        assert_eq!(ch.request_partial_key("carol").unwrap(), partial);
        assert_eq!(
            ch.calls().iter().map(|c| c.seq).collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn replace_then_read_returns_replacement() {
        let (mut ch, disclosure) = Challenger::<Karati>::new(&suite(), GameKind::Game1, 2);
        let original = ch.request_public_key("dave").unwrap();
        let replacement = karati::KaratiPublicKey {
            blinded_share: disclosure.params.suite.g1(),
            exponent_commitment: disclosure.params.suite.gt(),
        };
        assert_ne!(original, replacement);
        ch.replace_public_key("dave", replacement).unwrap();
        assert_eq!(ch.request_public_key("dave").unwrap(), replacement);

        // The sign oracle still answers with the honest key.
        let resp = ch.sign("dave", "hi", None).unwrap();
        assert_eq!(resp.public_key, original);
        assert!(karati::verify(
            &disclosure.params,
            b"dave",
            &original,
            b"hi",
            &resp.signature
        )
        .unwrap()
        .is_valid());
    }

    #[test]
    fn type2_cannot_replace_keys() {
        let (mut ch, d) = Challenger::<Kumar>::new(&suite(), GameKind::Game2, 3);
        let pk = crate::kumar::KumarPublicKey {
            point: d.params.generator,
        };
        assert!(matches!(
            ch.replace_public_key("erin", pk),
            Err(Error::RoleViolation(_))
        ));
        assert!(ch.calls().is_empty());
    }

    #[test]
    fn query_limit_is_enforced() {
        let (ch, _) = Challenger::<Kumar>::new(&suite(), GameKind::Game1, 4);
        let mut ch = ch.with_query_limit(2);
        ch.request_public_key("a").unwrap();
        ch.request_public_key("b").unwrap();
        assert_eq!(ch.request_public_key("c"), Err(Error::QueryLimit(2)));
        assert_eq!(ch.calls().len(), 2);
    }

    #[test]
    fn kumar_sign_requires_delta() {
        let (mut ch, _) = Challenger::<Kumar>::new(&suite(), GameKind::Game1, 5);
        assert_eq!(ch.sign("a", "m", None).unwrap_err(), Error::MissingDelta);
        let (mut ch, _) = Challenger::<Karati>::new(&suite(), GameKind::Game1, 5);
        assert!(matches!(
            ch.sign("a", "m", Some(b"x")),
            Err(Error::Payload(_))
        ));
    }

    #[test]
    fn sign_oracle_responses_verify() {
        let (mut ch, d) = Challenger::<Kumar>::new(&suite(), GameKind::Game1, 6);
        for i in 0..50 {
            let id = format!("user-{}", i % 7);
            let m = format!("m{i}");
            let resp = ch.sign(&id, &m, Some(b"ctx")).unwrap();
            assert!(crate::kumar::verify(
                &d.params,
                id.as_bytes(),
                &resp.public_key,
                b"ctx",
                m.as_bytes(),
                &resp.signature
            )
            .unwrap()
            .is_valid());
        }
    }

    #[test]
    fn claimed_key_must_be_in_effect() {
        let (mut ch, d) = Challenger::<Karati>::new(&suite(), GameKind::Game1, 7);
        let resp = ch.sign("frank", "m", None).unwrap();
        let wrong = karati::KaratiPublicKey {
            blinded_share: d.params.suite.g1(),
            exponent_commitment: d.params.suite.gt(),
        };
        let forgery = Forgery::<Karati> {
            id: "frank".into(),
            message: "m2".into(),
            delta: None,
            signature: resp.signature,
            public_key: wrong,
        };
        assert_eq!(ch.judge(&forgery), Outcome::Lose(Clause::PublicKey));
    }
}
