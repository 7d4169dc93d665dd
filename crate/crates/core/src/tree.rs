//! Multi-edge trees and their parenthesised text form.
//!
//! A tree is stored as its edges in pre-order. Each [`Edge`] records the depth
//! of the node it leads to (children of the root sit at depth 1) and its
//! multiplicity. A depth sequence describes a valid plane tree iff it starts
//! at 1 and never climbs by more than one between consecutive edges, so every
//! operation in this module is a single linear pass with no recursion.
//!
//! Text grammar, whitespace allowed between tokens:
//!
//! ```text
//! tree ::= "(" edge* ")"
//! edge ::= INT tree          INT >= 1, decimal
//! ```

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU64;
use core::str::FromStr;

/// Number of parallel edges drawn as one labelled link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiplicity(NonZeroU64);

impl Multiplicity {
    pub const ONE: Multiplicity = Multiplicity(NonZeroU64::MIN);

    /// Returns `None` for zero.
    pub const fn new(value: u64) -> Option<Self> {
        match NonZeroU64::new(value) {
            Some(v) => Some(Multiplicity(v)),
            None => None,
        }
    }

    pub const fn get(self) -> u64 {
        self.0.get()
    }

    /// Number of extra parallel edges, i.e. `a - 1`.
    pub const fn surplus(self) -> u64 {
        self.0.get() - 1
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// One child link, in pre-order position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Depth of the child end of the link; children of the root have depth 1.
    pub depth: usize,
    pub multiplicity: Multiplicity,
}

impl Edge {
    pub const fn new(depth: usize, multiplicity: Multiplicity) -> Self {
        Edge {
            depth,
            multiplicity,
        }
    }
}

/// Reasons a pre-order edge list does not describe a multi-edge tree.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TreeViolation {
    #[error("edge {index} has depth {depth}, expected a depth between 1 and {max}")]
    BadDepth {
        index: usize,
        depth: usize,
        max: usize,
    },
    #[error("total weight does not fit in 64 bits")]
    WeightOverflow,
}

/// Checks the depth-sequence invariant and that the total weight is
/// representable. Multiplicities are nonzero by construction.
pub fn validate_edges(edges: &[Edge]) -> Result<(), TreeViolation> {
    let mut prev = 0usize;
    let mut weight = 0u64;
    for (index, e) in edges.iter().enumerate() {
        if e.depth == 0 || e.depth > prev + 1 {
            return Err(TreeViolation::BadDepth {
                index,
                depth: e.depth,
                max: prev + 1,
            });
        }
        prev = e.depth;
        weight = weight
            .checked_add(e.multiplicity.get())
            .ok_or(TreeViolation::WeightOverflow)?;
    }
    Ok(())
}

/// A rooted plane tree whose child links carry positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiEdgeTree {
    edges: Vec<Edge>,
}

impl MultiEdgeTree {
    /// The single-node tree.
    pub const fn leaf() -> Self {
        MultiEdgeTree { edges: Vec::new() }
    }

    pub fn from_edges(edges: Vec<Edge>) -> Result<Self, TreeViolation> {
        validate_edges(&edges)?;
        Ok(MultiEdgeTree { edges })
    }

    /// Caller guarantees `validate_edges(&edges)` holds.
    pub(crate) fn from_edges_unchecked(edges: Vec<Edge>) -> Self {
        debug_assert!(validate_edges(&edges).is_ok());
        MultiEdgeTree { edges }
    }

    /// Builds a tree whose root has the given `(multiplicity, subtree)` children.
    pub fn from_children<I>(children: I) -> Result<Self, TreeViolation>
    where
        I: IntoIterator<Item = (Multiplicity, MultiEdgeTree)>,
    {
        let mut edges = Vec::new();
        for (m, sub) in children {
            edges.push(Edge::new(1, m));
            edges.extend(
                sub.edges
                    .iter()
                    .map(|e| Edge::new(e.depth + 1, e.multiplicity)),
            );
        }
        Self::from_edges(edges)
    }

    /// Edges in pre-order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }

    pub fn is_leaf(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sum of all multiplicities (the number of edges counted with multiplicity).
    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.multiplicity.get()).sum()
    }

    /// Number of child links, ignoring multiplicities.
    pub fn plain_edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_plain(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.multiplicity == Multiplicity::ONE)
    }

    /// Multiplicities in edge pre-order.
    pub fn multiplicities(&self) -> impl ExactSizeIterator<Item = Multiplicity> + '_ {
        self.edges.iter().map(|e| e.multiplicity)
    }

    /// The same shape with every multiplicity set to one.
    pub fn to_plain(&self) -> MultiEdgeTree {
        MultiEdgeTree {
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(e.depth, Multiplicity::ONE))
                .collect(),
        }
    }

    /// Splits off the root: its children in order, each with its link label.
    pub fn children(&self) -> Vec<(Multiplicity, MultiEdgeTree)> {
        let mut out: Vec<(Multiplicity, MultiEdgeTree)> = Vec::new();
        for e in &self.edges {
            if e.depth == 1 {
                out.push((e.multiplicity, MultiEdgeTree::leaf()));
            } else if let Some((_, sub)) = out.last_mut() {
                sub.edges.push(Edge::new(e.depth - 1, e.multiplicity));
            }
        }
        out
    }

    /// Canonical whitespace-free text.
    pub fn serialize(&self) -> String {
        let mut s = String::with_capacity(self.edges.len() * 4 + 2);
        // Writing to a String cannot fail.
        let _ = self.write_canonical(&mut s);
        s
    }

    fn write_canonical<W: fmt::Write>(&self, out: &mut W) -> fmt::Result {
        out.write_char('(')?;
        let mut open = 0usize;
        for e in &self.edges {
            while open >= e.depth {
                out.write_char(')')?;
                open -= 1;
            }
            write!(out, "{}(", e.multiplicity)?;
            open = e.depth;
        }
        for _ in 0..open {
            out.write_char(')')?;
        }
        out.write_char(')')
    }

    pub fn parse(text: &str) -> Result<Self, TreeParseError> {
        Parser::new(text).run()
    }
}

impl fmt::Display for MultiEdgeTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_canonical(f)
    }
}

impl FromStr for MultiEdgeTree {
    type Err = TreeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// What went wrong while parsing tree text.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TreeParseErrorKind {
    #[error("expected {expected}, found {found:?}")]
    Unexpected { expected: &'static str, found: char },
    #[error("unexpected end of input, {open} parenthes{} still open", if *.open == 1 { "is" } else { "es" })]
    Unclosed { open: usize },
    #[error("empty input")]
    Empty,
    #[error("trailing input after the closing parenthesis")]
    Trailing,
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("multiplicity does not fit in 64 bits")]
    MultiplicityOverflow,
    #[error("total weight does not fit in 64 bits")]
    WeightOverflow,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("tree syntax error at byte {offset}: {kind}")]
pub struct TreeParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: TreeParseErrorKind,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn err(&self, offset: usize, kind: TreeParseErrorKind) -> TreeParseError {
        TreeParseError { offset, kind }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn run(mut self) -> Result<MultiEdgeTree, TreeParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => self.pos += 1,
            Some(c) => {
                return Err(self.err(
                    self.pos,
                    TreeParseErrorKind::Unexpected {
                        expected: "'('",
                        found: c,
                    },
                ))
            }
            None => return Err(self.err(self.pos, TreeParseErrorKind::Empty)),
        }

        let mut edges = Vec::new();
        let mut weight = 0u64;
        // Depth of the node whose child list is being read; the root is 0.
        let mut depth = 0usize;
        loop {
            self.skip_ws();
            let start = self.pos;
            match self.peek() {
                None => {
                    return Err(self.err(start, TreeParseErrorKind::Unclosed { open: depth + 1 }))
                }
                Some(')') => {
                    self.pos += 1;
                    if depth == 0 {
                        break;
                    }
                    depth -= 1;
                }
                Some(c) if c.is_ascii_digit() => {
                    let m = self.multiplicity()?;
                    weight = weight
                        .checked_add(m.get())
                        .ok_or_else(|| self.err(start, TreeParseErrorKind::WeightOverflow))?;
                    self.skip_ws();
                    match self.peek() {
                        Some('(') => self.pos += 1,
                        Some(c) => {
                            return Err(self.err(
                                self.pos,
                                TreeParseErrorKind::Unexpected {
                                    expected: "'(' after multiplicity",
                                    found: c,
                                },
                            ))
                        }
                        None => {
                            return Err(self
                                .err(self.pos, TreeParseErrorKind::Unclosed { open: depth + 1 }))
                        }
                    }
                    depth += 1;
                    edges.push(Edge::new(depth, m));
                }
                Some(c) => {
                    return Err(self.err(
                        start,
                        TreeParseErrorKind::Unexpected {
                            expected: "multiplicity or ')'",
                            found: c,
                        },
                    ))
                }
            }
        }

        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(self.err(self.pos, TreeParseErrorKind::Trailing));
        }
        Ok(MultiEdgeTree::from_edges_unchecked(edges))
    }

    fn multiplicity(&mut self) -> Result<Multiplicity, TreeParseError> {
        let start = self.pos;
        let digits = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        self.pos += digits;
        let mut value = 0u64;
        for b in self.text[start..self.pos].bytes() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
                .ok_or_else(|| self.err(start, TreeParseErrorKind::MultiplicityOverflow))?;
        }
        Multiplicity::new(value)
            .ok_or_else(|| self.err(start, TreeParseErrorKind::ZeroMultiplicity))
    }
}
