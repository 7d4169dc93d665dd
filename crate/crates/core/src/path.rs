//! Dyck paths and 2- and 3-coloured Motzkin paths.
//!
//! All three families share one [`Step`] type and one [`Path`] container; a
//! zero-sized alphabet marker fixes which steps a path may contain. A `Path`
//! value always satisfies its invariants: only letters of its alphabet, no
//! prefix below the axis, and final height zero.
//!
//! Text form is one letter per step: `U` up, `D` down, `R`/`G`/`B` red, green
//! and blue level steps. The empty path is the empty string.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;
use core::str::FromStr;

/// A single path step.
///
/// Variants are declared in the byte order of their letters so that the
/// derived ordering on steps, and on step sequences, is the lexicographic
/// order of the text form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Blue,
    Down,
    Green,
    Red,
    Up,
}

impl Step {
    pub const ALL: [Step; 5] = [Step::Blue, Step::Down, Step::Green, Step::Red, Step::Up];

    pub const fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Red => 'R',
            Step::Green => 'G',
            Step::Blue => 'B',
        }
    }

    pub const fn from_letter(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            'R' => Some(Step::Red),
            'G' => Some(Step::Green),
            'B' => Some(Step::Blue),
            _ => None,
        }
    }

    /// Height change.
    pub const fn delta(self) -> i8 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            _ => 0,
        }
    }

    pub const fn is_level(self) -> bool {
        self.delta() == 0
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use fmt::Write;
        f.write_char(self.letter())
    }
}

/// The three path families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathKind {
    Dyck,
    Motzkin2,
    Motzkin3,
}

impl PathKind {
    /// Permitted steps, in lexicographic order.
    pub const fn steps(self) -> &'static [Step] {
        match self {
            PathKind::Dyck => &[Step::Down, Step::Up],
            PathKind::Motzkin2 => &[Step::Down, Step::Green, Step::Red, Step::Up],
            PathKind::Motzkin3 => &Step::ALL,
        }
    }

    pub fn allows(self, step: Step) -> bool {
        self.steps().contains(&step)
    }

    pub const fn has_level_steps(self) -> bool {
        !matches!(self, PathKind::Dyck)
    }

    pub const fn name(self) -> &'static str {
        match self {
            PathKind::Dyck => "Dyck",
            PathKind::Motzkin2 => "2-Motzkin",
            PathKind::Motzkin3 => "3-Motzkin",
        }
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

mod sealed {
    pub trait Sealed {}
}

/// Marker trait tying a [`Path`] type to its [`PathKind`].
pub trait Alphabet: sealed::Sealed + Copy + Eq + Ord + core::hash::Hash + fmt::Debug {
    const KIND: PathKind;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckSteps;
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoColourSteps;
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThreeColourSteps;

impl sealed::Sealed for DyckSteps {}
impl sealed::Sealed for TwoColourSteps {}
impl sealed::Sealed for ThreeColourSteps {}

impl Alphabet for DyckSteps {
    const KIND: PathKind = PathKind::Dyck;
}
impl Alphabet for TwoColourSteps {
    const KIND: PathKind = PathKind::Motzkin2;
}
impl Alphabet for ThreeColourSteps {
    const KIND: PathKind = PathKind::Motzkin3;
}

pub type DyckPath = Path<DyckSteps>;
pub type Motzkin2Path = Path<TwoColourSteps>;
pub type Motzkin3Path = Path<ThreeColourSteps>;

/// First violated path invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PathViolation {
    #[error("step {position} ({step}) is not allowed in a {kind} path")]
    IllegalStep {
        position: usize,
        step: Step,
        kind: PathKind,
    },
    #[error("prefix ending at step {position} dips below the axis")]
    BelowAxis { position: usize },
    #[error("path ends at height {height}, not on the axis")]
    NonzeroFinalHeight { height: usize },
}

/// Checks a raw step sequence against the invariants of `kind`.
pub fn validate_steps(kind: PathKind, steps: &[Step]) -> Result<(), PathViolation> {
    let mut height = 0usize;
    for (position, &step) in steps.iter().enumerate() {
        if !kind.allows(step) {
            return Err(PathViolation::IllegalStep {
                position,
                step,
                kind,
            });
        }
        match step {
            Step::Up => height += 1,
            Step::Down => {
                height = height
                    .checked_sub(1)
                    .ok_or(PathViolation::BelowAxis { position })?
            }
            _ => {}
        }
    }
    if height != 0 {
        return Err(PathViolation::NonzeroFinalHeight { height });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PathParseError {
    #[error("unknown step letter {letter:?} at byte {offset}")]
    UnknownLetter { offset: usize, letter: char },
    #[error(transparent)]
    Invalid(#[from] PathViolation),
}

/// Decodes letters only; no invariant checks.
pub fn parse_steps(text: &str) -> Result<Vec<Step>, PathParseError> {
    text.char_indices()
        .map(|(offset, letter)| {
            Step::from_letter(letter).ok_or(PathParseError::UnknownLetter { offset, letter })
        })
        .collect()
}

/// A validated path over the alphabet `A`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path<A: Alphabet> {
    steps: Vec<Step>,
    alphabet: PhantomData<A>,
}

impl<A: Alphabet> Path<A> {
    pub const KIND: PathKind = A::KIND;

    pub const fn empty() -> Self {
        Path {
            steps: Vec::new(),
            alphabet: PhantomData,
        }
    }

    pub fn new(steps: Vec<Step>) -> Result<Self, PathViolation> {
        validate_steps(A::KIND, &steps)?;
        Ok(Self::new_unchecked(steps))
    }

    pub(crate) fn new_unchecked(steps: Vec<Step>) -> Self {
        debug_assert_eq!(validate_steps(A::KIND, &steps), Ok(()));
        Path {
            steps,
            alphabet: PhantomData,
        }
    }

    pub fn parse(text: &str) -> Result<Self, PathParseError> {
        Ok(Self::new(parse_steps(text)?)?)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Heights before each step, followed by the final height (always 0).
    pub fn heights(&self) -> impl Iterator<Item = usize> + '_ {
        let mut h = 0usize;
        core::iter::once(0).chain(self.steps.iter().map(move |s| {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
                _ => {}
            }
            h
        }))
    }

    pub fn max_height(&self) -> usize {
        self.heights().max().unwrap_or(0)
    }

    pub fn serialize(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl Motzkin3Path {
    /// Drops every blue step; the rest is always a valid 2-coloured path.
    pub fn erase_blue(&self) -> Motzkin2Path {
        Path::new_unchecked(
            self.steps
                .iter()
                .copied()
                .filter(|&s| s != Step::Blue)
                .collect(),
        )
    }
}

impl From<DyckPath> for Motzkin2Path {
    fn from(p: DyckPath) -> Self {
        Path::new_unchecked(p.steps)
    }
}

impl From<Motzkin2Path> for Motzkin3Path {
    fn from(p: Motzkin2Path) -> Self {
        Path::new_unchecked(p.steps)
    }
}

impl<A: Alphabet> Default for Path<A> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<A: Alphabet> fmt::Display for Path<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| fmt::Display::fmt(s, f))
    }
}

impl<A: Alphabet> fmt::Debug for Path<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({:?})", A::KIND.name(), self.serialize())
    }
}

impl<A: Alphabet> FromStr for Path<A> {
    type Err = PathParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// A path of a kind chosen at run time.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyPath {
    Dyck(DyckPath),
    Motzkin2(Motzkin2Path),
    Motzkin3(Motzkin3Path),
}

impl AnyPath {
    pub fn parse(text: &str, kind: PathKind) -> Result<Self, PathParseError> {
        Ok(match kind {
            PathKind::Dyck => AnyPath::Dyck(Path::parse(text)?),
            PathKind::Motzkin2 => AnyPath::Motzkin2(Path::parse(text)?),
            PathKind::Motzkin3 => AnyPath::Motzkin3(Path::parse(text)?),
        })
    }

    pub fn kind(&self) -> PathKind {
        match self {
            AnyPath::Dyck(_) => PathKind::Dyck,
            AnyPath::Motzkin2(_) => PathKind::Motzkin2,
            AnyPath::Motzkin3(_) => PathKind::Motzkin3,
        }
    }

    pub fn steps(&self) -> &[Step] {
        match self {
            AnyPath::Dyck(p) => p.steps(),
            AnyPath::Motzkin2(p) => p.steps(),
            AnyPath::Motzkin3(p) => p.steps(),
        }
    }
}

impl fmt::Display for AnyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPath::Dyck(p) => p.fmt(f),
            AnyPath::Motzkin2(p) => p.fmt(f),
            AnyPath::Motzkin3(p) => p.fmt(f),
        }
    }
}
