//! End-to-end runs of each scheme and its attacks, reported step by step.
//!
//! In pinned mode the run reproduces the F1/F2 fixtures exactly; the JSON
//! form of those reports is committed as golden files.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::fixtures::{f1, f2};
use crate::pairing::{Suite, FIXTURE_PRIME};
use crate::{karati, karati_attack, kumar, kumar_attack, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoScheme {
    Karati,
    Kumar,
}

impl std::str::FromStr for DemoScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "karati" => Ok(DemoScheme::Karati),
            "kumar" => Ok(DemoScheme::Kumar),
            other => Err(Error::UnknownScheme(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoMode {
    /// Random keys and nonces from a seed, real hashing.
    Seeded(u64),
    /// Fixture scalars and pinned hashes over `mock101`.
    Pinned,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemoReport {
    pub scheme: String,
    pub suite: String,
    pub digest: String,
    pub pinned_hash: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub steps: Vec<Step>,
    pub checks: Vec<Check>,
}

impl DemoReport {
    fn new(scheme: &str, suite: &Suite, mode: DemoMode) -> Self {
        Self {
            scheme: scheme.into(),
            suite: suite.id(),
            digest: suite.digest_name().into(),
            pinned_hash: mode == DemoMode::Pinned,
            seed: match mode {
                DemoMode::Seeded(seed) => Some(seed),
                DemoMode::Pinned => None,
            },
            steps: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn step(&mut self, name: &str, value: impl ToString) {
        self.steps.push(Step {
            name: name.into(),
            value: value.to_string(),
        });
    }

    fn check(&mut self, name: &str, verdict: Verdict) {
        self.checks.push(Check {
            name: name.into(),
            result: verdict.to_string(),
        });
    }

    pub fn value(&self, name: &str) -> Option<&str> {
        self.steps
            .iter()
            .find(|s| s.name == name)
            .map(|s| s.value.as_str())
    }

    /// Every check came out VALID.
    pub fn all_valid(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.result == Verdict::Valid.to_string())
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports always serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "scheme {} over {} ({})\n",
            self.scheme, self.suite, self.digest
        );
        let width = self.steps.iter().map(|s| s.name.len()).max().unwrap_or(0);
        for step in &self.steps {
            out.push_str(&format!("  {:width$}  {}\n", step.name, step.value));
        }
        for check in &self.checks {
            out.push_str(&format!("{}: {}\n", check.name, check.result));
        }
        let overall = Verdict::from(self.all_valid());
        out.push_str(&format!("{overall}\n"));
        out
    }
}

/// Fixed fixture scalars in pinned mode, uniform draws from Z*_q otherwise.
enum Coins {
    Fixed(Suite),
    Random(Suite, Box<ChaCha20Rng>),
}

impl Coins {
    fn scalar(&mut self, fixed: u64) -> Scalar {
        match self {
            Coins::Fixed(suite) => suite.scalar(fixed),
            Coins::Random(suite, rng) => suite.random_scalar(rng),
        }
    }
}

fn setup(mode: DemoMode, q: u64, pinned_suite: fn() -> Suite) -> Result<(Suite, Coins)> {
    match mode {
        DemoMode::Pinned => {
            if q != FIXTURE_PRIME {
                return Err(Error::UnknownBackend(format!(
                    "pinned hashes exist only for mock{FIXTURE_PRIME}, not mock{q}"
                )));
            }
            let suite = pinned_suite();
            Ok((suite.clone(), Coins::Fixed(suite)))
        }
        DemoMode::Seeded(seed) => {
            let suite = Suite::mock(q)?;
            Ok((
                suite.clone(),
                Coins::Random(suite, Box::new(ChaCha20Rng::seed_from_u64(seed))),
            ))
        }
    }
}

pub fn run(scheme: DemoScheme, mode: DemoMode, q: u64) -> Result<DemoReport> {
    match scheme {
        DemoScheme::Karati => run_karati(mode, q),
        DemoScheme::Kumar => run_kumar(mode, q),
    }
}

fn run_karati(mode: DemoMode, q: u64) -> Result<DemoReport> {
    use f1::*;
    let (suite, mut coins) = setup(mode, q, f1::suite)?;
    let mut report = DemoReport::new("karati", &suite, mode);

    let (params, msk) = karati::setup_with(&suite, coins.scalar(MASTER_SECRET))?;
    report.step("master_secret", msk.y);
    report.step("kgc_public", params.kgc_public);
    report.step("g2", params.g2);

    report.step("source_hash", karati::identity_hash(&params, SOURCE_ID));
    let partial = loop {
        match karati::extract_partial_key_with(
            &params,
            &msk,
            SOURCE_ID,
            coins.scalar(EXTRACTION_NONCE),
        ) {
            Err(Error::DegenerateNonce) => continue,
            other => break other?,
        }
    };
    report.step("partial_share", partial.share);
    report.step("partial_commitment", partial.commitment);
    let (lhs, rhs) = karati::partial_key_sides(&params, SOURCE_ID, &partial)?;
    report.step("partial_check_lhs", lhs);
    report.step("partial_check_rhs", rhs);
    report.check("partial key genuine", Verdict::from(lhs == rhs));

    let private = karati::set_private_key_with(
        &partial,
        coins.scalar(EXPONENT_SECRET),
        coins.scalar(BLINDING_SECRET),
    )?;
    report.step("exponent_secret", private.exponent_secret);
    report.step("blinding_secret", private.blinding_secret);
    let public = karati::set_public_key(&params, &partial, &private)?;
    report.step("public_blinded_share", public.blinded_share);
    report.step("public_exponent_commitment", public.exponent_commitment);

    report.step("message_scalar", karati::encode_message(&params, MESSAGE)?);
    let signature = karati::sign_with(
        &params,
        SOURCE_ID,
        &private,
        MESSAGE,
        coins.scalar(SIGNING_NONCE),
    )?;
    report.step("signature_nonce_commitment", signature.nonce_commitment);
    report.step("signature_response", signature.response);
    let (lhs, rhs) = karati::verification_sides(&params, SOURCE_ID, &public, MESSAGE, &signature)?;
    report.step("verify_lhs", lhs);
    report.step("verify_rhs", rhs);
    report.check(
        "honest signature",
        karati::verify(&params, SOURCE_ID, &public, MESSAGE, &signature)?,
    );

    report.step("target_hash", karati::identity_hash(&params, TARGET_ID));
    let bundle = karati_attack::forge_signature_with(
        &params,
        SOURCE_ID,
        &partial,
        TARGET_ID,
        FORGED_MESSAGE,
        coins.scalar(FORGED_EXPONENT_SECRET),
        coins.scalar(FORGED_BLINDING_SECRET),
        coins.scalar(FORGED_SIGNING_NONCE),
    )?;
    report.step("forged_alpha", bundle.alpha);
    report.step("forged_share", bundle.partial.share);
    report.step("forged_commitment", bundle.partial.commitment);
    let (lhs, rhs) = karati::partial_key_sides(&params, TARGET_ID, &bundle.partial)?;
    report.step("forged_partial_check_lhs", lhs);
    report.step("forged_partial_check_rhs", rhs);
    report.check("forged partial key genuine", Verdict::from(lhs == rhs));
    report.step("forged_public_blinded_share", bundle.public.blinded_share);
    report.step(
        "forged_public_exponent_commitment",
        bundle.public.exponent_commitment,
    );
    report.step(
        "forged_message_scalar",
        karati::encode_message(&params, FORGED_MESSAGE)?,
    );
    report.step(
        "forged_signature_nonce_commitment",
        bundle.signature.nonce_commitment,
    );
    report.step("forged_signature_response", bundle.signature.response);
    let (lhs, rhs) = karati::verification_sides(
        &params,
        TARGET_ID,
        &bundle.public,
        FORGED_MESSAGE,
        &bundle.signature,
    )?;
    report.step("forged_verify_lhs", lhs);
    report.step("forged_verify_rhs", rhs);
    report.check(
        "forged signature",
        karati::verify(
            &params,
            TARGET_ID,
            &bundle.public,
            FORGED_MESSAGE,
            &bundle.signature,
        )?,
    );
    Ok(report)
}

fn run_kumar(mode: DemoMode, q: u64) -> Result<DemoReport> {
    use f2::*;
    let (suite, mut coins) = setup(mode, q, f2::suite)?;
    let mut report = DemoReport::new("kumar", &suite, mode);

    let (params, msk) = kumar::setup_with(&suite, coins.scalar(MASTER_SECRET))?;
    report.step("master_secret", msk.alpha);
    report.step("kgc_public", params.kgc_public);
    report.step("identity_point", kumar::identity_point(&params, ID));
    let partial = kumar::extract_partial_key(&params, &msk, ID)?;
    report.step("partial_key", partial.key);
    report.check(
        "partial key genuine",
        Verdict::from(kumar::verify_partial_key(&params, ID, &partial)?),
    );

    let private = kumar::set_private_key_with(&partial, coins.scalar(SECRET_VALUE))?;
    report.step("secret_value", private.secret_value);
    let public = kumar::set_public_key(&params, &private)?;
    report.step("public_key", public.point);

    report.step("state_point", kumar::state_point(&params, DELTA));
    let signature = kumar::sign_with(
        &params,
        ID,
        &public,
        &private,
        DELTA,
        MESSAGE,
        coins.scalar(SIGNING_NONCE),
    )?;
    report.step("signature_commitment", signature.commitment);
    report.step(
        "challenge",
        kumar::challenge(&params, MESSAGE, ID, &public, &signature.commitment),
    );
    report.step("signature_response", signature.response);
    let (lhs, rhs) = kumar::verification_sides(&params, ID, &public, DELTA, MESSAGE, &signature)?;
    report.step("verify_lhs", lhs);
    report.step("verify_rhs", rhs);
    report.check(
        "honest signature",
        kumar::verify(&params, ID, &public, DELTA, MESSAGE, &signature)?,
    );

    let x = private.secret_value;
    let bound = kumar_attack::recover_delta_key(&params, ID, &public, x, MESSAGE, &signature)?;
    report.step("delta_bound_key", bound.key);
    report.check(
        "delta-bound key consistent",
        Verdict::from(bound.is_consistent(&params, ID)?),
    );
    let forged = kumar_attack::forge_type1(&params, ID, &public, &bound, x, FORGED_MESSAGE)?;
    report.step(
        "type1_challenge",
        kumar::challenge(&params, FORGED_MESSAGE, ID, &public, &forged.commitment),
    );
    report.step("type1_commitment", forged.commitment);
    report.step("type1_response", forged.response);
    report.check(
        "type-1 forgery",
        kumar::verify(&params, ID, &public, DELTA, FORGED_MESSAGE, &forged)?,
    );

    let kgc = kumar_attack::forge_type2_with(
        &params,
        &msk,
        ID,
        &public,
        DELTA,
        KGC_MESSAGE,
        coins.scalar(KGC_NONCE),
    )?;
    report.step("type2_commitment", kgc.commitment);
    report.step(
        "type2_challenge",
        kumar::challenge(&params, KGC_MESSAGE, ID, &public, &kgc.commitment),
    );
    report.step("type2_response", kgc.response);
    report.check(
        "type-2 forgery",
        kumar::verify(&params, ID, &public, DELTA, KGC_MESSAGE, &kgc)?,
    );
    Ok(report)
}
