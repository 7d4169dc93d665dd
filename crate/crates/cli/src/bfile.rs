//! OEIS b-files: one `index value` pair per line, `#` starts a comment line.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use num_bigint::{BigInt, BigUint};

#[derive(Debug, thiserror::Error)]
pub enum BfileError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: index {index} does not follow {previous}")]
    NotIncreasing {
        line: usize,
        index: i64,
        previous: i64,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_line(line_no: usize, line: &str) -> Result<Option<(i64, BigInt)>, BfileError> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let malformed = |reason: String| BfileError::Malformed {
        line: line_no,
        reason,
    };
    let mut fields = line.split_whitespace();
    let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed(format!("expected \"index value\", got {line:?}")));
    };
    let index: i64 = index
        .parse()
        .map_err(|_| malformed(format!("bad index {index:?}")))?;
    let value: BigInt = value
        .parse()
        .map_err(|_| malformed(format!("bad value {value:?}")))?;
    Ok(Some((index, value)))
}

/// Reads all pairs; indices must be strictly increasing.
pub fn load_bfile<R: BufRead>(reader: R) -> Result<Vec<(i64, BigInt)>, BfileError> {
    let mut out: Vec<(i64, BigInt)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        if let Some((index, value)) = parse_line(line_no, &line?)? {
            if let Some(&(previous, _)) = out.last() {
                if index <= previous {
                    return Err(BfileError::NotIncreasing {
                        line: line_no,
                        index,
                        previous,
                    });
                }
            }
            out.push((index, value));
        }
    }
    Ok(out)
}

pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, BfileError> {
    load_bfile(text.as_bytes())
}

pub fn load_bfile_path(path: impl AsRef<Path>) -> Result<Vec<(i64, BigInt)>, BfileError> {
    load_bfile(BufReader::new(File::open(path)?))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("index {index}: b-file has {found}, expected {expected}")]
pub struct BfileMismatch {
    pub index: i64,
    pub found: BigInt,
    pub expected: BigUint,
}

/// Compares entries whose index falls inside `expected` (offset 0) and
/// returns how many were compared.
pub fn compare_prefix(
    entries: &[(i64, BigInt)],
    expected: &[BigUint],
) -> Result<usize, BfileMismatch> {
    let mut compared = 0;
    for (index, value) in entries {
        let Some(want) = usize::try_from(*index).ok().and_then(|i| expected.get(i)) else {
            continue;
        };
        if value.to_biguint().as_ref() != Some(want) {
            return Err(BfileMismatch {
                index: *index,
                found: value.clone(),
                expected: want.clone(),
            });
        }
        compared += 1;
    }
    Ok(compared)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple() {
        let got = parse_bfile("0 1\n1 1\n2 3").unwrap();
        let want: Vec<(i64, BigInt)> = vec![(0, 1.into()), (1, 1.into()), (2, 3.into())];
        assert_eq!(got, want);
    }

    #[test]
    fn comments_and_blank_lines() {
        let got = parse_bfile("# A002212\n\n0 1\n  # note\n1   1\r\n").unwrap();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn malformed_line_number() {
        match parse_bfile("x y") {
            Err(BfileError::Malformed { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_bfile("0 1\n1\n") {
            Err(BfileError::Malformed { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_bfile("0 1 2") {
            Err(BfileError::Malformed { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn indices_must_increase() {
        match parse_bfile("0 1\n2 3\n2 4") {
            Err(BfileError::NotIncreasing {
                line: 3,
                index: 2,
                previous: 2,
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn big_values() {
        let got = parse_bfile("40 123456789012345678901234567890").unwrap();
        assert_eq!(got[0].1.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn prefix_comparison() {
        let expected: Vec<BigUint> = [1u32, 1, 3, 10].iter().map(|&v| v.into()).collect();
        let entries = parse_bfile("0 1\n1 1\n2 3\n3 10\n4 36").unwrap();
        assert_eq!(compare_prefix(&entries, &expected), Ok(4));
        let entries = parse_bfile("-1 5\n2 4").unwrap();
        let err = compare_prefix(&entries, &expected).unwrap_err();
        assert_eq!(err.index, 2);
    }
}
