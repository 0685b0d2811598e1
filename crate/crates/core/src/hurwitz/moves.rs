//! Elementary braid moves, move logs and the stable tuple hash.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::Reflection;

use super::HurwitzSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Direction {
    Forward,
    Inverse,
}

impl From<Direction> for i8 {
    fn from(d: Direction) -> i8 {
        match d {
            Direction::Forward => 1,
            Direction::Inverse => -1,
        }
    }
}

impl TryFrom<i8> for Direction {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Direction::Forward),
            -1 => Ok(Direction::Inverse),
            _ => Err(format!("direction must be 1 or -1, got {v}")),
        }
    }
}

/// `σ_i` (forward) or `σ_i⁻¹` (inverse). `index` is 1-based: the move acts on
/// entries `i` and `i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidMove {
    #[serde(rename = "i")]
    pub index: usize,
    #[serde(rename = "dir")]
    pub direction: Direction,
}

impl BraidMove {
    pub fn forward(index: usize) -> Self {
        BraidMove { index, direction: Direction::Forward }
    }

    pub fn inverse(index: usize) -> Self {
        BraidMove { index, direction: Direction::Inverse }
    }

    pub fn inverted(self) -> Self {
        BraidMove {
            index: self.index,
            direction: match self.direction {
                Direction::Forward => Direction::Inverse,
                Direction::Inverse => Direction::Forward,
            },
        }
    }
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Forward => write!(f, "{}", self.index),
            Direction::Inverse => write!(f, "-{}", self.index),
        }
    }
}

impl FromStr for BraidMove {
    type Err = Error;

    /// `"3"` is `σ_3`, `"-3"` is `σ_3⁻¹`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (idx, dir) = match s.strip_prefix('-') {
            Some(rest) => (rest, Direction::Inverse),
            None => (s.strip_prefix('+').unwrap_or(s), Direction::Forward),
        };
        let index = idx
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad braid move {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse("braid move indices start at 1".into()));
        }
        Ok(BraidMove { index, direction: dir })
    }
}

/// Applies one move to a raw tuple of reflections.
pub(crate) fn apply_in_place(rs: &RootSystem, entries: &mut [Reflection], m: BraidMove) -> Result<()> {
    if m.index == 0 || m.index >= entries.len() {
        return Err(Error::IndexOutOfRange { index: m.index, len: entries.len() });
    }
    let p = m.index - 1;
    let (a, b) = (entries[p], entries[p + 1]);
    let (x, y) = match m.direction {
        Direction::Forward => (a.conjugate(rs, b), a),
        Direction::Inverse => (b, b.conjugate(rs, a)),
    };
    entries[p] = x;
    entries[p + 1] = y;
    Ok(())
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(mut h: u64, bytes: &[u8]) -> u64 {
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Stable 64-bit hash of an axis tuple.
///
/// FNV-1a (64-bit) over the byte string: tuple length as `u32` LE, rank as
/// `u32` LE, then for each entry the coefficients of its positive axis as
/// `i32` LE. Depends only on the axis vectors, never on table indices.
pub fn stable_hash(rs: &RootSystem, entries: &[Reflection]) -> u64 {
    let mut h = fnv1a(FNV_OFFSET, &(entries.len() as u32).to_le_bytes());
    h = fnv1a(h, &(rs.rank() as u32).to_le_bytes());
    for t in entries {
        for c in t.axis(rs).coeffs() {
            h = fnv1a(h, &c.to_le_bytes());
        }
    }
    h
}

mod hex_u64 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{v:016x}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        let s = String::deserialize(d)?;
        u64::from_str_radix(s.trim_start_matches("0x"), 16).map_err(serde::de::Error::custom)
    }
}

/// A replayable braid word together with the hashes of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveLog {
    pub moves: Vec<BraidMove>,
    #[serde(with = "hex_u64")]
    pub source_hash: u64,
    #[serde(with = "hex_u64")]
    pub target_hash: u64,
}

impl MoveLog {
    pub fn empty(sys: &HurwitzSystem) -> Self {
        let h = sys.canonical_hash();
        MoveLog { moves: Vec::new(), source_hash: h, target_hash: h }
    }

    /// Records `moves` by applying them to `source`.
    pub fn record(source: &HurwitzSystem, moves: Vec<BraidMove>) -> Result<(HurwitzSystem, Self)> {
        let mut entries = source.entries().to_vec();
        for &m in &moves {
            apply_in_place(source.root_system(), &mut entries, m)?;
        }
        let target = source.with_entries(entries);
        let log = MoveLog {
            moves,
            source_hash: source.canonical_hash(),
            target_hash: target.canonical_hash(),
        };
        Ok((target, log))
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Replays `log` from `source`, checking both endpoint hashes.
pub fn replay(source: &HurwitzSystem, log: &MoveLog) -> Result<HurwitzSystem> {
    let found = source.canonical_hash();
    if found != log.source_hash {
        return Err(Error::HashMismatch { stage: "source", expected: log.source_hash, found });
    }
    let mut entries = source.entries().to_vec();
    for &m in &log.moves {
        apply_in_place(source.root_system(), &mut entries, m)?;
    }
    let target = source.with_entries(entries);
    let found = target.canonical_hash();
    if found != log.target_hash {
        return Err(Error::HashMismatch { stage: "target", expected: log.target_hash, found });
    }
    Ok(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_moves() {
        assert_eq!("3".parse::<BraidMove>().unwrap(), BraidMove::forward(3));
        assert_eq!("-2".parse::<BraidMove>().unwrap(), BraidMove::inverse(2));
        assert_eq!("+1".parse::<BraidMove>().unwrap(), BraidMove::forward(1));
        assert!("0".parse::<BraidMove>().is_err());
        assert!("x".parse::<BraidMove>().is_err());
        assert_eq!(BraidMove::inverse(4).to_string(), "-4");
    }

    #[test]
    fn fnv_reference_vector() {
        // Published FNV-1a test vectors.
        assert_eq!(fnv1a(FNV_OFFSET, b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a(FNV_OFFSET, b"a"), 0xaf63dc4c8601ec8c);
        assert_eq!(fnv1a(FNV_OFFSET, b"foobar"), 0x85944171f73967e8);
    }
}
