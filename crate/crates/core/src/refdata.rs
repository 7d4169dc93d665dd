//! Embedded reference prefixes of the two counting sequences.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

/// Multi-edge trees by weight, `z^0` through `z^29`.
const TREES_BY_WEIGHT: [u64; 30] = [
    1,
    1,
    3,
    10,
    36,
    137,
    543,
    2219,
    9285,
    39587,
    171369,
    751236,
    3328218,
    14878455,
    67030785,
    304036170,
    1387247580,
    6363044315,
    29323149825,
    135700543190,
    630375241380,
    2938391049395,
    13739779184085,
    64430797069375,
    302934667061301,
    1427763630578197,
    6744284275226223,
    31923955212096244,
    151403298421257630,
    719341002546735393,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Multi-edge trees by number of edges, offset 0.
    A002212,
    /// 3-coloured Motzkin paths by length, offset 0.
    A091965,
}

impl SequenceId {
    pub const fn as_str(self) -> &'static str {
        match self {
            SequenceId::A002212 => "A002212",
            SequenceId::A091965 => "A091965",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown sequence id {0:?}; known: A002212, A091965")]
pub struct UnknownSequence(pub alloc::string::String);

impl FromStr for SequenceId {
    type Err = UnknownSequence;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A002212" => Ok(SequenceId::A002212),
            "A091965" => Ok(SequenceId::A091965),
            other => Err(UnknownSequence(other.into())),
        }
    }
}

pub fn known_prefix(id: SequenceId) -> Vec<BigUint> {
    let values: &[u64] = match id {
        SequenceId::A002212 => &TREES_BY_WEIGHT,
        // F = 1 + zM: the path counts are the tree counts shifted by one
        SequenceId::A091965 => &TREES_BY_WEIGHT[1..],
    };
    values.iter().copied().map(BigUint::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{f_coeffs, m_coeffs};

    fn head(id: SequenceId, n: usize) -> Vec<u64> {
        known_prefix(id)
            .iter()
            .take(n)
            .map(|b| u64::try_from(b).unwrap())
            .collect()
    }

    #[test]
    fn printed_values() {
        assert_eq!(head(SequenceId::A002212, 7), [1, 1, 3, 10, 36, 137, 543]);
        assert_eq!(head(SequenceId::A091965, 6), [1, 3, 10, 36, 137, 543]);
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            "A000000".parse::<SequenceId>(),
            Err(UnknownSequence("A000000".into()))
        );
        assert_eq!("A002212".parse::<SequenceId>(), Ok(SequenceId::A002212));
    }

    #[test]
    fn agrees_with_series() {
        let f = known_prefix(SequenceId::A002212);
        assert_eq!(f.as_slice(), f_coeffs(f.len() - 1).coeffs());
        let m = known_prefix(SequenceId::A091965);
        assert_eq!(m.as_slice(), m_coeffs(m.len() - 1).coeffs());
    }
}
