//! Exhaustive verification of the bijection and the counting series.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bijection::{forward, inverse};
use crate::enumerate::{count_motzkin3, count_trees, gen_motzkin3, gen_trees};
use crate::path::{Motzkin3Path, Step};
use crate::series::{check_identity, f_coeffs, f_residual, m_coeffs, m_residual};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// The first offending object, when the check failed on one.
    pub counterexample: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n     counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_size: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let verdict = if self.passed() {
            "all checks passed"
        } else {
            "verification FAILED"
        };
        write!(f, "{verdict} (N <= {})", self.max_size)
    }
}

/// First failure seen by a check, if any.
#[derive(Default)]
struct Tally {
    counterexample: Option<String>,
}

impl Tally {
    fn fail(&mut self, what: impl FnOnce() -> String) {
        if self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    fn finish(self, name: &'static str, detail: String) -> Check {
        Check {
            name,
            passed: self.counterexample.is_none(),
            detail,
            counterexample: self.counterexample,
        }
    }
}

/// Runs every check for tree weights `1..=max_size` (paths of length
/// `0..max_size`).
pub fn verify(max_size: usize) -> VerifyReport {
    let mut tree_rt = Tally::default();
    let mut path_rt = Tally::default();
    let mut bij = Tally::default();
    let mut length = Tally::default();
    let mut colours = Tally::default();
    let mut sizes = Vec::new();
    let mut tree_total = 0usize;

    for n in 1..=max_size {
        let trees = gen_trees(n);
        let paths: Vec<Motzkin3Path> = gen_motzkin3(n - 1).collect();
        tree_total += trees.len();

        let mut image = BTreeSet::new();
        for t in &trees {
            let p = match forward(t) {
                Ok(p) => p,
                Err(e) => {
                    tree_rt.fail(|| format!("{t}: {e}"));
                    continue;
                }
            };
            if p.len() as u64 + 1 != t.total_weight() {
                length.fail(|| format!("{t} -> {p} has length {}", p.len()));
            }
            let blues: u64 = t.multiplicities().map(|m| m.surplus()).sum();
            let non_blue = p.len() - p.count(Step::Blue);
            if p.count(Step::Blue) as u64 != blues || non_blue + 1 != t.plain_edge_count() {
                colours.fail(|| format!("{t} -> {p}"));
            }
            let back = inverse(&p);
            if &back != t {
                tree_rt.fail(|| format!("{t} -> {p} -> {back}"));
            }
            if !image.insert(p.clone()) {
                bij.fail(|| format!("two trees of weight {n} map to {p}"));
            }
        }

        let mut all = BTreeSet::new();
        for p in &paths {
            let t = inverse(p);
            match forward(&t) {
                Ok(q) if &q == p => {}
                Ok(q) => path_rt.fail(|| format!("{p} -> {t} -> {q}")),
                Err(e) => path_rt.fail(|| format!("{p} -> {t}: {e}")),
            }
            if t.total_weight() != n as u64 {
                length.fail(|| format!("{p} -> {t} has weight {}", t.total_weight()));
            }
            if !all.insert(p.clone()) {
                bij.fail(|| format!("path {p} generated twice"));
            }
        }
        if let Some(p) = image.symmetric_difference(&all).next() {
            bij.fail(|| {
                let side = if image.contains(p) {
                    "image only"
                } else {
                    "missed by forward"
                };
                format!("{p} ({side}, N = {n})")
            });
        }
        sizes.push(format!(
            "N={n}: {} trees <-> {} paths",
            trees.len(),
            paths.len()
        ));
    }

    let range = format!("N = 1..={max_size}");
    let mut checks = Vec::new();
    checks.push(tree_rt.finish(
        "tree round trip",
        format!("inverse(forward(t)) = t, {range}, {tree_total} trees"),
    ));
    checks.push(path_rt.finish(
        "path round trip",
        format!("forward(inverse(p)) = p, {range}"),
    ));
    checks.push(bij.finish("set bijectivity", sizes.join("; ")));
    checks.push(length.finish("length law", format!("length = weight - 1, {range}")));
    checks.push(colours.finish(
        "colour counts",
        String::from("blue steps = sum(a - 1), other steps = n - 1"),
    ));
    checks.push(series_vs_enumeration(max_size));
    checks.push(identity_check(max_size));
    checks.push(residual_check(max_size));

    VerifyReport { max_size, checks }
}

fn series_vs_enumeration(max_size: usize) -> Check {
    let f = f_coeffs(max_size);
    let m = m_coeffs(max_size.saturating_sub(1));
    let mut tally = Tally::default();
    for n in 1..=max_size {
        let generated = BigUint::from(gen_trees(n).len());
        let dp = count_trees(n);
        if generated != f.coeffs()[n] || dp != f.coeffs()[n] {
            tally.fail(|| {
                format!(
                    "f_{n} = {}, generated {generated}, counted {dp}",
                    f.coeffs()[n]
                )
            });
        }
        let l = n - 1;
        let generated = BigUint::from(gen_motzkin3(l).count());
        let dp = count_motzkin3(l);
        if generated != m.coeffs()[l] || dp != m.coeffs()[l] {
            tally.fail(|| {
                format!(
                    "m_{l} = {}, generated {generated}, counted {dp}",
                    m.coeffs()[l]
                )
            });
        }
    }
    tally.finish(
        "series vs enumeration",
        format!("f_N and m_(N-1) match generators and counters, N = 1..={max_size}"),
    )
}

fn identity_check(max_size: usize) -> Check {
    let mut tally = Tally::default();
    if let Err(e) = check_identity(max_size) {
        tally.fail(|| format!("{e}"));
    }
    tally.finish("identity F = 1 + zM", format!("through z^{max_size}"))
}

fn residual_check(max_size: usize) -> Check {
    let mut tally = Tally::default();
    let rf = f_residual(&f_coeffs(max_size));
    if let Some(i) = rf.iter().position(|r| !r.is_zero()) {
        tally.fail(|| format!("F residual at z^{i} is {}", rf[i]));
    }
    let rm = m_residual(&m_coeffs(max_size));
    if let Some(i) = rm.iter().position(|r| !r.is_zero()) {
        tally.fail(|| format!("M residual at z^{i} is {}", rm[i]));
    }
    tally.finish(
        "functional equations",
        format!("residuals vanish through z^{max_size}"),
    )
}
