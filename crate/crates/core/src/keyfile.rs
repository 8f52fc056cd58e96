//! JSON key files: `{scheme, role, id, suite, ...elements}` with every group
//! element and scalar in the `suite:tag:value` text encoding.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::demo::DemoScheme;
use crate::error::{Error, Result};
use crate::game::challenger::{from_value, to_value};
use crate::pairing::Suite;
use crate::{karati, kumar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KeyFile {
    pub scheme: String,
    pub role: String,
    pub id: String,
    pub suite: String,
    #[serde(flatten)]
    pub elements: BTreeMap<String, Value>,
}

impl KeyFile {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("key files always serialize");
        out.push('\n');
        out
    }

    pub fn element<T: serde::de::DeserializeOwned>(&self, name: &str) -> Result<T> {
        let value = self
            .elements
            .get(name)
            .ok_or_else(|| Error::Payload(format!("key file has no `{name}`")))?;
        from_value(value)
    }
}

/// Runs setup, extraction and user key generation for `id`, seeded. The
/// master secret is not written out.
pub fn keygen(scheme: DemoScheme, suite: &Suite, seed: u64, id: &str) -> Result<KeyFile> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut elements = BTreeMap::new();
    let scheme_name = match scheme {
        DemoScheme::Karati => {
            let (params, msk) = karati::setup(suite, &mut rng);
            let partial = karati::extract_partial_key(&params, &msk, id.as_bytes(), &mut rng);
            let private = karati::set_private_key(&partial, &mut rng);
            let public = karati::set_public_key(&params, &partial, &private)?;
            elements.insert("params".into(), to_value(&params));
            elements.insert("partial_key".into(), to_value(&partial));
            elements.insert("private_key".into(), to_value(&private));
            elements.insert("public_key".into(), to_value(&public));
            "karati"
        }
        DemoScheme::Kumar => {
            let (params, msk) = kumar::setup(suite, &mut rng);
            let partial = kumar::extract_partial_key(&params, &msk, id.as_bytes())?;
            let private = kumar::set_private_key(&partial, &mut rng);
            let public = kumar::set_public_key(&params, &private)?;
            elements.insert("params".into(), to_value(&params));
            elements.insert("partial_key".into(), to_value(&partial));
            elements.insert("private_key".into(), to_value(&private));
            elements.insert("public_key".into(), to_value(&public));
            "kumar"
        }
    };
    Ok(KeyFile {
        scheme: scheme_name.into(),
        role: "keypair".into(),
        id: id.into(),
        suite: suite.id(),
        elements,
    })
}
