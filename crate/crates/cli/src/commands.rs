//! Command implementations. Each returns its output text (or writes it to a
//! sink) so the binary stays a thin argument-parsing shell.

use std::io::{self, Write};
use std::path::PathBuf;

use num_bigint::BigUint;

use motzkin_core::enumerate::{
    count_dyck, count_motzkin2, count_motzkin3, count_trees, gen_dyck, gen_motzkin2, gen_motzkin3,
    gen_trees,
};
use motzkin_core::refdata::SequenceId;
use motzkin_core::series::{f_coeffs, m_coeffs};
use motzkin_core::table::weight_three_rows;
use motzkin_core::verify::{verify as run_checks, Check};
use motzkin_core::{forward, inverse, Motzkin3Path, MultiEdgeTree};

use crate::bfile::{compare_prefix, load_bfile_path};
use crate::render::{render_path, render_tree};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Input did not parse or lies outside the bijection's domain.
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        1
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    TreeToPath,
    PathToTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// Multi-edge trees by total weight.
    Trees,
    /// 3-coloured Motzkin paths by length.
    Motzkin3,
    /// Dyck paths by number of up-steps.
    Dyck,
    /// 2-coloured Motzkin paths by length.
    Motzkin2,
}

/// Tree text to path text or back, canonical output.
pub fn convert(direction: Direction, input: &str) -> Result<String, CliError> {
    let input = input.trim();
    match direction {
        Direction::TreeToPath => {
            let tree = MultiEdgeTree::parse(input).map_err(domain)?;
            Ok(forward(&tree).map_err(domain)?.serialize())
        }
        Direction::PathToTree => {
            let path = Motzkin3Path::parse(input).map_err(domain)?;
            Ok(inverse(&path).serialize())
        }
    }
}

/// One object per line in canonical form, or just the number of objects.
/// The empty path is printed as an empty line.
pub fn enumerate<W: Write>(
    family: Family,
    size: usize,
    count_only: bool,
    out: &mut W,
) -> io::Result<()> {
    fn emit<W: Write, T: ToString>(
        items: impl Iterator<Item = T>,
        count_only: bool,
        out: &mut W,
    ) -> io::Result<()> {
        if count_only {
            return writeln!(out, "{}", items.count());
        }
        for item in items {
            writeln!(out, "{}", item.to_string())?;
        }
        Ok(())
    }
    match family {
        Family::Trees => emit(gen_trees(size).into_iter(), count_only, out),
        Family::Motzkin3 => emit(gen_motzkin3(size), count_only, out),
        Family::Dyck => emit(gen_dyck(size), count_only, out),
        Family::Motzkin2 => emit(gen_motzkin2(size), count_only, out),
    }
}

/// Counts by dynamic programming, without generating objects.
pub fn count(family: Family, size: usize) -> BigUint {
    match family {
        Family::Trees => count_trees(size),
        Family::Motzkin3 => count_motzkin3(size),
        Family::Dyck => count_dyck(size),
        Family::Motzkin2 => count_motzkin2(size),
    }
}

/// Where to find an optional external b-file to cross-check.
#[derive(Clone, Debug)]
pub struct BfileCheck {
    pub path: PathBuf,
    pub sequence: SequenceId,
}

/// Runs the exhaustive checks; the flag is true iff every check passed.
pub fn verify(max_size: usize, bfile: Option<&BfileCheck>) -> Result<(String, bool), CliError> {
    let mut report = run_checks(max_size);
    if let Some(b) = bfile {
        report.checks.push(bfile_check(b)?);
    }
    let passed = report.passed();
    Ok((report.to_string(), passed))
}

fn bfile_check(b: &BfileCheck) -> Result<Check, CliError> {
    let entries =
        load_bfile_path(&b.path).map_err(|e| domain(format!("{}: {e}", b.path.display())))?;
    let top = entries
        .iter()
        .filter_map(|&(i, _)| usize::try_from(i).ok())
        .max()
        .unwrap_or(0);
    let expected = match b.sequence {
        SequenceId::A002212 => f_coeffs(top),
        SequenceId::A091965 => m_coeffs(top),
    };
    let name = "b-file agreement";
    Ok(match compare_prefix(&entries, expected.coeffs()) {
        Ok(n) => Check {
            name,
            passed: true,
            detail: format!("{} matches {} on {n} entries", b.path.display(), b.sequence),
            counterexample: None,
        },
        Err(e) => Check {
            name,
            passed: false,
            detail: format!("{} disagrees with {}", b.path.display(), b.sequence),
            counterexample: Some(e.to_string()),
        },
    })
}

/// The ten weight-3 trees with every stage, tab separated. The header is a
/// `#` comment; an empty path is an empty field.
pub fn table() -> String {
    let mut out = String::from("# tree\tdyck\t2-motzkin\t3-motzkin\n");
    for r in weight_three_rows() {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            r.tree, r.dyck, r.motzkin2, r.motzkin3
        ));
    }
    out
}

/// Text starting with `(` is a tree, anything else a path.
pub fn render(input: &str) -> Result<String, CliError> {
    let input = input.trim();
    if input.starts_with('(') {
        Ok(render_tree(&MultiEdgeTree::parse(input).map_err(domain)?))
    } else {
        Ok(render_path(
            Motzkin3Path::parse(input).map_err(domain)?.steps(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convert_examples() {
        assert_eq!(convert(Direction::TreeToPath, "(2(1()))").unwrap(), "BR");
        assert_eq!(convert(Direction::PathToTree, "BB").unwrap(), "(3())");
        assert_eq!(convert(Direction::PathToTree, "").unwrap(), "(1())");
        let err = convert(Direction::TreeToPath, "()").unwrap_err();
        assert!(err.to_string().contains("N >= 1"), "{err}");
        assert!(convert(Direction::PathToTree, "UDU").is_err());
        assert!(convert(Direction::TreeToPath, "(0())").is_err());
    }

    fn listing(family: Family, size: usize, count_only: bool) -> String {
        let mut buf = Vec::new();
        enumerate(family, size, count_only, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(listing(Family::Trees, 3, true), "10\n");
        assert_eq!(listing(Family::Motzkin3, 2, false).lines().count(), 10);
        assert_eq!(listing(Family::Dyck, 0, false), "\n");
        assert_eq!(listing(Family::Dyck, 0, true), "1\n");
        assert_eq!(listing(Family::Dyck, 2, false), "UDUD\nUUDD\n");
        assert_eq!(listing(Family::Motzkin2, 1, false), "G\nR\n");
    }

    #[test]
    fn count_matches_listing() {
        for family in [
            Family::Trees,
            Family::Motzkin3,
            Family::Dyck,
            Family::Motzkin2,
        ] {
            for size in 0..=5 {
                let listed: usize = listing(family, size, true).trim().parse().unwrap();
                assert_eq!(count(family, size), BigUint::from(listed));
            }
        }
    }

    #[test]
    fn table_has_ten_rows() {
        let t = table();
        assert_eq!(t.lines().filter(|l| !l.starts_with('#')).count(), 10);
        assert!(t.contains("(1(2()))\tUUDD\tR\tRB\n"));
        assert!(t.contains("(3())\tUD\t\tBB\n"));
    }

    #[test]
    fn render_dispatch() {
        assert_eq!(render("(3())").unwrap(), "o\n`-- 3 o\n");
        assert_eq!(render("BR").unwrap(), "0 | BR\n");
        assert!(render("(1(").is_err());
        assert!(render("DU").is_err());
    }

    #[test]
    fn verify_small() {
        let (text, ok) = verify(3, None).unwrap();
        assert!(ok, "{text}");
        assert!(text.contains("10 trees <-> 10 paths"));
    }
}
