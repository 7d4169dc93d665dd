//! Exhaustive generators and counters.
//!
//! Path generators are lazy and emit paths in lexicographic order of their
//! text form. Tree generation materialises all trees of a weight and sorts
//! them by canonical text. Counters use dynamic programming and never build
//! objects; they are deliberately structured differently from the series
//! recurrences so the two can check each other.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::iter::FusedIterator;
use core::marker::PhantomData;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::path::{
    Alphabet, DyckPath, DyckSteps, Motzkin2Path, Motzkin3Path, Path, PathKind, Step,
    ThreeColourSteps, TwoColourSteps,
};
use crate::tree::{Edge, MultiEdgeTree, Multiplicity};

/// Every valid path of a fixed length, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Paths<A: Alphabet> {
    steps: Vec<Step>,
    /// `heights[i]` is the height before step `i`.
    heights: Vec<usize>,
    started: bool,
    done: bool,
    alphabet: PhantomData<A>,
}

fn can_finish(kind: PathKind, height: usize, remaining: usize) -> bool {
    height <= remaining && (kind.has_level_steps() || (remaining - height).is_multiple_of(2))
}

fn apply(height: usize, step: Step) -> Option<usize> {
    match step {
        Step::Up => Some(height + 1),
        Step::Down => height.checked_sub(1),
        _ => Some(height),
    }
}

impl<A: Alphabet> Paths<A> {
    pub fn new(len: usize) -> Self {
        let feasible = can_finish(A::KIND, 0, len);
        let mut gen = Paths {
            steps: vec![Step::Up; len],
            heights: vec![0; len + 1],
            started: false,
            done: !feasible,
            alphabet: PhantomData,
        };
        if feasible {
            gen.fill_from(0);
        }
        gen
    }

    /// Smallest valid completion of `steps[..from]`. The prefix must be
    /// completable.
    fn fill_from(&mut self, from: usize) {
        let len = self.steps.len();
        for i in from..len {
            let h = self.heights[i];
            let (step, next) = A::KIND
                .steps()
                .iter()
                .find_map(|&s| {
                    apply(h, s)
                        .filter(|&n| can_finish(A::KIND, n, len - i - 1))
                        .map(|n| (s, n))
                })
                .expect("completable prefix has a feasible next step");
            self.steps[i] = step;
            self.heights[i + 1] = next;
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.steps.len();
        for i in (0..len).rev() {
            let h = self.heights[i];
            let current = self.steps[i];
            let bigger = A::KIND.steps().iter().find_map(|&s| {
                (s > current)
                    .then(|| apply(h, s))
                    .flatten()
                    .filter(|&n| can_finish(A::KIND, n, len - i - 1))
                    .map(|n| (s, n))
            });
            if let Some((s, n)) = bigger {
                self.steps[i] = s;
                self.heights[i + 1] = n;
                self.fill_from(i + 1);
                return true;
            }
        }
        false
    }
}

impl<A: Alphabet> Iterator for Paths<A> {
    type Item = Path<A>;

    fn next(&mut self) -> Option<Path<A>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Path::new_unchecked(self.steps.clone()))
    }
}

impl<A: Alphabet> FusedIterator for Paths<A> {}

/// Dyck paths with `n` up-steps (length `2n`).
pub fn gen_dyck(n: usize) -> Paths<DyckSteps> {
    Paths::new(2 * n)
}

pub fn gen_motzkin2(len: usize) -> Paths<TwoColourSteps> {
    Paths::new(len)
}

pub fn gen_motzkin3(len: usize) -> Paths<ThreeColourSteps> {
    Paths::new(len)
}

/// Pre-order edge lists of every forest (ordered sequence of multi-edge
/// subtrees hanging from one node) for each weight `0..=max`.
///
/// A nonempty forest of weight `w` is a first link of multiplicity `a`, the
/// subtree below it of weight `s`, and the remaining siblings of weight
/// `w - a - s`.
fn forests(max: usize) -> Vec<Vec<Vec<Edge>>> {
    let mut table: Vec<Vec<Vec<Edge>>> = vec![vec![Vec::new()]];
    for w in 1..=max {
        let mut here = Vec::new();
        for a in 1..=w {
            let m = Multiplicity::new(a as u64).expect("a >= 1");
            for s in 0..=w - a {
                for sub in &table[s] {
                    for rest in &table[w - a - s] {
                        let mut edges = Vec::with_capacity(1 + sub.len() + rest.len());
                        edges.push(Edge::new(1, m));
                        edges.extend(sub.iter().map(|e| Edge::new(e.depth + 1, e.multiplicity)));
                        edges.extend_from_slice(rest);
                        here.push(edges);
                    }
                }
            }
        }
        table.push(here);
    }
    table
}

/// Every multi-edge tree of total weight `weight`, sorted by canonical text.
pub fn gen_trees(weight: usize) -> Vec<MultiEdgeTree> {
    let mut all = forests(weight);
    let mut trees: Vec<(String, MultiEdgeTree)> = all
        .swap_remove(weight)
        .into_iter()
        .map(|edges| {
            let t = MultiEdgeTree::from_edges_unchecked(edges);
            (t.serialize(), t)
        })
        .collect();
    trees.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    trees.into_iter().map(|(_, t)| t).collect()
}

/// Number of multi-edge trees of each weight `0..=max`, by the forest
/// decomposition used in [`gen_trees`].
pub fn tree_counts(max: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = vec![BigUint::one()];
    for w in 1..=max {
        let mut total = BigUint::zero();
        for a in 1..=w {
            for s in 0..=w - a {
                total += &c[s] * &c[w - a - s];
            }
        }
        c.push(total);
    }
    c
}

pub fn count_trees(weight: usize) -> BigUint {
    tree_counts(weight).swap_remove(weight)
}

/// Counts valid paths of length `len` by sweeping a height profile.
pub fn count_paths(kind: PathKind, len: usize) -> BigUint {
    let levels = kind.steps().iter().filter(|s| s.is_level()).count() as u32;
    // heights above len/2 can never return to the axis
    let top = len / 2 + 1;
    let mut ways = vec![BigUint::zero(); top + 1];
    ways[0] = BigUint::one();
    for _ in 0..len {
        let mut next = vec![BigUint::zero(); top + 1];
        for (h, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            if levels > 0 {
                next[h] += w * levels;
            }
            if h < top {
                next[h + 1] += w;
            }
            if h > 0 {
                next[h - 1] += w;
            }
        }
        ways = next;
    }
    ways.swap_remove(0)
}

pub fn count_motzkin3(len: usize) -> BigUint {
    count_paths(PathKind::Motzkin3, len)
}

pub fn count_motzkin2(len: usize) -> BigUint {
    count_paths(PathKind::Motzkin2, len)
}

pub fn count_dyck(n: usize) -> BigUint {
    count_paths(PathKind::Dyck, 2 * n)
}

/// Materialising aliases, handy in tests.
pub fn all_dyck(n: usize) -> Vec<DyckPath> {
    gen_dyck(n).collect()
}

pub fn all_motzkin2(len: usize) -> Vec<Motzkin2Path> {
    gen_motzkin2(len).collect()
}

pub fn all_motzkin3(len: usize) -> Vec<Motzkin3Path> {
    gen_motzkin3(len).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::validate_steps;
    use std::collections::BTreeSet;

    fn texts<A: Alphabet>(it: impl Iterator<Item = Path<A>>) -> Vec<String> {
        it.map(|p| p.serialize()).collect()
    }

    /// Brute force over all words, independent of the successor logic.
    fn brute(kind: PathKind, len: usize) -> Vec<String> {
        let letters = kind.steps();
        let mut out = Vec::new();
        let total = letters.len().pow(len as u32);
        for mut code in 0..total {
            let mut word = vec![Step::Up; len];
            for slot in word.iter_mut().rev() {
                *slot = letters[code % letters.len()];
                code /= letters.len();
            }
            if validate_steps(kind, &word).is_ok() {
                out.push(word.iter().map(|s| s.letter()).collect());
            }
        }
        out
    }

    #[test]
    fn dyck_small() {
        assert_eq!(texts(gen_dyck(0)), vec![""]);
        assert_eq!(texts(gen_dyck(2)), vec!["UDUD", "UUDD"]);
    }

    #[test]
    fn motzkin2_small() {
        assert_eq!(texts(gen_motzkin2(1)), vec!["G", "R"]);
        assert_eq!(texts(gen_motzkin2(2)), vec!["GG", "GR", "RG", "RR", "UD"]);
    }

    #[test]
    fn motzkin3_small() {
        assert_eq!(texts(gen_motzkin3(0)), vec![""]);
        assert_eq!(texts(gen_motzkin3(1)), vec!["B", "G", "R"]);
        let two = texts(gen_motzkin3(2));
        assert_eq!(two.len(), 10);
        let expected: BTreeSet<&str> =
            ["UD", "BR", "RB", "BB", "RG", "BG", "GB", "GR", "GG", "RR"].into();
        assert_eq!(
            two.iter().map(String::as_str).collect::<BTreeSet<_>>(),
            expected
        );
    }

    #[test]
    fn odd_length_dyck_is_empty() {
        assert_eq!(Paths::<DyckSteps>::new(3).count(), 0);
        assert!(Paths::<DyckSteps>::new(3).next().is_none());
    }

    #[test]
    fn generators_match_brute_force_in_order() {
        for len in 0..=7 {
            assert_eq!(
                texts(gen_motzkin3(len)),
                brute(PathKind::Motzkin3, len),
                "len {len}"
            );
            assert_eq!(
                texts(gen_motzkin2(len)),
                brute(PathKind::Motzkin2, len),
                "len {len}"
            );
        }
        for n in 0..=5 {
            assert_eq!(texts(gen_dyck(n)), brute(PathKind::Dyck, 2 * n), "n {n}");
        }
    }

    fn catalan(n: u64) -> u64 {
        (0..n).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn path_counters_match_closed_forms() {
        for n in 0..=12 {
            assert_eq!(count_dyck(n as usize), BigUint::from(catalan(n)));
        }
        for len in 0..=12u64 {
            let expected: u64 = (0..=len / 2)
                .map(|k| binom(len, 2 * k) * catalan(k) * (1 << (len - 2 * k)))
                .sum();
            assert_eq!(count_motzkin2(len as usize), BigUint::from(expected));
            // two-colour paths of length L are counted by Catalan(L + 1)
            assert_eq!(expected, catalan(len + 1));
        }
    }

    #[test]
    fn counters_match_stream_lengths() {
        for size in 0..=9 {
            assert_eq!(
                count_motzkin3(size),
                BigUint::from(gen_motzkin3(size).count())
            );
            assert_eq!(
                count_motzkin2(size),
                BigUint::from(gen_motzkin2(size).count())
            );
            assert_eq!(count_trees(size), BigUint::from(gen_trees(size).len()));
        }
        for n in 0..=7 {
            assert_eq!(count_dyck(n), BigUint::from(gen_dyck(n).count()));
        }
    }

    #[test]
    fn tree_counts_known_values() {
        assert_eq!(count_trees(5), BigUint::from(137u32));
        assert_eq!(count_trees(6), BigUint::from(543u32));
        assert_eq!(count_motzkin3(0), BigUint::from(1u32));
        assert_eq!(count_motzkin3(6), BigUint::from(2219u32));
    }

    #[test]
    fn trees_small() {
        let zero: Vec<String> = gen_trees(0).iter().map(|t| t.serialize()).collect();
        assert_eq!(zero, vec!["()"]);
        let one: Vec<String> = gen_trees(1).iter().map(|t| t.serialize()).collect();
        assert_eq!(one, vec!["(1())"]);
        let two: Vec<String> = gen_trees(2).iter().map(|t| t.serialize()).collect();
        assert_eq!(two, vec!["(1()1())", "(1(1()))", "(2())"]);
    }

    #[test]
    fn trees_weight_three() {
        let three: BTreeSet<String> = gen_trees(3).iter().map(|t| t.serialize()).collect();
        let expected: BTreeSet<String> = [
            "(1(1(1())))",
            "(2(1()))",
            "(1(2()))",
            "(3())",
            "(1(1())1())",
            "(2()1())",
            "(1()2())",
            "(1()1(1()))",
            "(1()1()1())",
            "(1(1()1()))",
        ]
        .iter()
        .map(|s| String::from(*s))
        .collect();
        assert_eq!(three, expected);
    }

    #[test]
    fn trees_are_sorted_distinct_and_weighted() {
        for w in 0..=7 {
            let trees = gen_trees(w);
            let text: Vec<String> = trees.iter().map(|t| t.serialize()).collect();
            assert!(
                text.windows(2).all(|p| p[0] < p[1]),
                "weight {w} not strictly sorted"
            );
            for t in &trees {
                assert_eq!(t.total_weight(), w as u64);
                assert_eq!(&MultiEdgeTree::parse(&t.serialize()).unwrap(), t);
            }
        }
    }

    #[test]
    fn multi_digit_labels_sort_as_text() {
        let text: Vec<String> = gen_trees(10).iter().map(|t| t.serialize()).collect();
        let ten = text.iter().position(|s| s == "(10())").unwrap();
        let two = text.iter().position(|s| s.starts_with("(2")).unwrap();
        assert!(ten < two);
    }
}
