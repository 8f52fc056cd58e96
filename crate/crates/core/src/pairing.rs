//! Symmetric bilinear groups `e: G1 × G1 → GT` of prime order q.
//!
//! The shipped backend is exponent-transparent: an element is stored as its
//! discrete logarithm relative to the group generator, the group law is
//! addition of exponents and the pairing multiplies them. The discrete log
//! problem is therefore trivial. That is fine here because every scheme and
//! attack in this crate is an algebraic identity over an arbitrary bilinear
//! group, and a transparent payload lets tests recompute each exponent
//! independently. A hardness-bearing curve would slot in behind [`Suite`]
//! with the same element API.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{add_mod, is_prime, mul_mod, parse_canonical_decimal, Scalar};

/// Name of the digest behind every hash function, recorded in transcripts.
pub const DIGEST_NAME: &str = "sha256";

/// Prime used by the golden fixtures.
pub const FIXTURE_PRIME: u64 = 101;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    G1,
    GT,
}

impl Group {
    pub fn tag(self) -> &'static str {
        match self {
            Group::G1 => "G1",
            Group::GT => "GT",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Domain-separation prefixes. Each tag turns the digest into an independent
/// function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HashTag {
    /// Karati identity hash into Z*_q.
    H,
    /// Kumar identity hash into G1.
    H1,
    /// Kumar state-information hash into G1.
    H2,
    /// Kumar challenge hash into Z*_q.
    H3,
    /// Message-to-scalar encoding.
    Msg,
}

impl HashTag {
    pub fn prefix(self) -> u8 {
        match self {
            HashTag::H => 0x00,
            HashTag::H1 => 0x01,
            HashTag::H2 => 0x02,
            HashTag::H3 => 0x03,
            HashTag::Msg => 0x04,
        }
    }
}

/// `mock<q>` → q, checking primality.
pub fn parse_suite_id(id: &str) -> Result<u64> {
    let digits = id
        .strip_prefix("mock")
        .ok_or_else(|| Error::UnknownBackend(id.to_string()))?;
    let q = parse_canonical_decimal(digits).map_err(|_| Error::UnknownBackend(id.to_string()))?;
    check_order(q)?;
    Ok(q)
}

fn check_order(q: u64) -> Result<()> {
    if q < 3 || !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(())
}

/// A group element. Only the mock payload exists today.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    q: u64,
    group: Group,
    exp: u64,
}

impl GroupElement {
    pub fn group(&self) -> Group {
        self.group
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// Discrete log relative to the group's generator.
    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn is_identity(&self) -> bool {
        self.exp == 0
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::GroupMismatch(format!(
                "suite mock{} vs mock{}",
                self.q, other.q
            )));
        }
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!(
                "{} vs {}",
                self.group, other.group
            )));
        }
        Ok(())
    }

    pub fn expect(&self, group: Group) -> Result<&Self> {
        if self.group != group {
            return Err(Error::WrongGroup {
                expected: group,
                found: self.group,
            });
        }
        Ok(self)
    }

    /// The group operation.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(Self {
            exp: add_mod(self.exp, other.exp, self.q),
            ..*self
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            exp: (self.q - self.exp) % self.q,
            ..*self
        }
    }

    /// `self ∘ other⁻¹`
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, s: &Scalar) -> Result<Self> {
        if s.modulus() != self.q {
            return Err(Error::GroupMismatch(format!(
                "scalar mod {} applied to element of mock{}",
                s.modulus(),
                self.q
            )));
        }
        Ok(Self {
            exp: mul_mod(self.exp, s.value(), self.q),
            ..*self
        })
    }

    /// `<suite-id>:<group-tag>:<decimal-exponent>`
    pub fn encode(&self) -> String {
        format!("mock{}:{}:{}", self.q, self.group, self.exp)
    }

    /// Parses any well-formed element; the suite is read from the encoding.
    pub fn decode(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let (Some(suite), Some(tag), Some(exp), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(Error::MalformedEncoding(format!(
                "`{s}` is not suite:group:exponent"
            )));
        };
        let q = parse_suite_id(suite).map_err(|e| Error::MalformedEncoding(e.to_string()))?;
        let group = match tag {
            "G1" => Group::G1,
            "GT" => Group::GT,
            other => {
                return Err(Error::MalformedEncoding(format!(
                    "unknown group tag `{other}`"
                )))
            }
        };
        let exp = parse_canonical_decimal(exp)?;
        if exp >= q {
            return Err(Error::MalformedEncoding(format!(
                "exponent {exp} is not below {q}"
            )));
        }
        Ok(Self { q, group, exp })
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.group {
            Group::G1 => "g1",
            Group::GT => "gt",
        };
        write!(f, "{base}^{}", self.exp)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// The symmetric pairing. Both arguments must lie in G1 of the same suite.
pub fn pairing(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    a.same_group(b)?;
    if a.group != Group::G1 {
        return Err(Error::GroupMismatch("pairing takes two G1 elements".into()));
    }
    Ok(GroupElement {
        q: a.q,
        group: Group::GT,
        exp: mul_mod(a.exp, b.exp, a.q),
    })
}

type PinTable = BTreeMap<(HashTag, Vec<u8>), u64>;

/// Bilinear group description: prime order, generators, pairing and hashes.
///
/// A suite may carry pinned hash outputs. Pinned inputs bypass the digest and
/// return the fixed value; everything else hashes normally. Pins exist so the
/// fixture vectors can be checked by hand.
#[derive(Clone)]
pub struct Suite {
    q: u64,
    pins: Arc<PinTable>,
}

impl Suite {
    pub fn mock(q: u64) -> Result<Self> {
        check_order(q)?;
        Ok(Self {
            q,
            pins: Arc::default(),
        })
    }

    /// The fixture suite, `mock101`.
    pub fn fixture() -> Self {
        Self::mock(FIXTURE_PRIME).expect("101 is prime")
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::mock(parse_suite_id(id)?)
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn id(&self) -> String {
        format!("mock{}", self.q)
    }

    pub fn digest_name(&self) -> &'static str {
        DIGEST_NAME
    }

    pub fn is_pinned(&self) -> bool {
        !self.pins.is_empty()
    }

    /// Returns a copy of the suite with `(tag, data)` fixed to `value mod q`.
    pub fn with_pin(mut self, tag: HashTag, data: impl Into<Vec<u8>>, value: u64) -> Self {
        Arc::make_mut(&mut self.pins).insert((tag, data.into()), value % self.q);
        self
    }

    pub fn scalar(&self, value: u64) -> Scalar {
        Scalar::new(self.q, value)
    }

    pub fn element(&self, group: Group, exp: u64) -> GroupElement {
        GroupElement {
            q: self.q,
            group,
            exp: exp % self.q,
        }
    }

    pub fn identity(&self, group: Group) -> GroupElement {
        self.element(group, 0)
    }

    pub fn g1(&self) -> GroupElement {
        self.element(Group::G1, 1)
    }

    /// `pairing(g1, g1)`.
    pub fn gt(&self) -> GroupElement {
        self.element(Group::GT, 1)
    }

    pub fn random_scalar<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        Scalar::random_nonzero(self.q, rng)
    }

    /// Hash into Z*_q: `(digest mod (q − 1)) + 1`, never zero.
    pub fn hash_to_scalar(&self, tag: HashTag, data: &[u8]) -> Scalar {
        if let Some(&v) = self.pins.get(&(tag, data.to_vec())) {
            return self.scalar(v);
        }
        let mut hasher = Sha256::new();
        hasher.update([tag.prefix()]);
        hasher.update(data);
        let digest = hasher.finalize();
        let m = (self.q - 1) as u128;
        let reduced = digest
            .iter()
            .fold(0u128, |acc, &b| (acc * 256 + b as u128) % m);
        self.scalar(reduced as u64 + 1)
    }

    /// Hash into G1 \ {identity}. The mock exponent is the scalar hash.
    pub fn hash_to_group(&self, tag: HashTag, data: &[u8]) -> GroupElement {
        debug_assert!(matches!(tag, HashTag::H1 | HashTag::H2));
        let s = self.hash_to_scalar(tag, data);
        self.element(Group::G1, s.value())
    }

    /// Decodes an element and checks it belongs to this suite and `group`.
    pub fn decode_element(&self, s: &str, group: Group) -> Result<GroupElement> {
        let el = GroupElement::decode(s)?;
        if el.q != self.q {
            return Err(Error::MalformedEncoding(format!(
                "element from mock{} under suite {}",
                el.q,
                self.id()
            )));
        }
        if el.group != group {
            return Err(Error::MalformedEncoding(format!(
                "expected a {group} element, found {}",
                el.group
            )));
        }
        Ok(el)
    }
}

impl PartialEq for Suite {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for Suite {}

impl fmt::Debug for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Suite")
            .field("id", &self.id())
            .field("pins", &self.pins.len())
            .finish()
    }
}

impl serde::Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.id())
    }
}

impl<'de> serde::Deserialize<'de> for Suite {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Suite::from_id(&s).map_err(serde::de::Error::custom)
    }
}

impl serde::Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.encode())
    }
}

impl<'de> serde::Deserialize<'de> for GroupElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        GroupElement::decode(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! group_field {
    ($name:ident, $group:expr) => {
        /// Serde adapter that pins a field to one group.
        pub mod $name {
            use super::{Group, GroupElement};
            use serde::{Deserialize, Deserializer, Serialize, Serializer};

            pub fn serialize<S: Serializer>(
                el: &GroupElement,
                serializer: S,
            ) -> Result<S::Ok, S::Error> {
                el.serialize(serializer)
            }

            pub fn deserialize<'de, D: Deserializer<'de>>(
                deserializer: D,
            ) -> Result<GroupElement, D::Error> {
                let el = GroupElement::deserialize(deserializer)?;
                let group: Group = $group;
                if el.group() != group {
                    return Err(serde::de::Error::custom(format!(
                        "expected a {group} element, found {}",
                        el.group()
                    )));
                }
                Ok(el)
            }
        }
    };
}

group_field!(g1_field, Group::G1);
group_field!(gt_field, Group::GT);
