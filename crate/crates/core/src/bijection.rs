//! The tree/path correspondence, stage by stage.
//!
//! Every stage has an explicit inverse. A tree with `n` plain edges and total
//! weight `N` goes to a Dyck path of length `2n`, then to a red/green Motzkin
//! path of length `n - 1`, then to a 3-coloured Motzkin path of length `N - 1`.

use alloc::vec::Vec;

use crate::path::{DyckPath, Motzkin2Path, Motzkin3Path, Path, Step};
use crate::tree::{Edge, MultiEdgeTree, Multiplicity};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("the single-node tree has no edges; the bijection requires N >= 1")]
    EmptyTree,
    #[error("edge {edge} (pre-order) has multiplicity {multiplicity}, expected a plain tree")]
    NonUnitMultiplicity {
        edge: usize,
        multiplicity: Multiplicity,
    },
    #[error("the empty Dyck path does not encode a tree with edges")]
    EmptyDyckPath,
    #[error("a path of length {path_len} needs {} multiplicities, got {multiplicities}", .path_len + 1)]
    LengthMismatch {
        path_len: usize,
        multiplicities: usize,
    },
    #[error("resulting path length does not fit in memory")]
    PathTooLong,
}

/// Separates shape from labels: the plain tree and the multiplicities in edge
/// pre-order.
pub fn strip_multiplicities(
    tree: &MultiEdgeTree,
) -> Result<(MultiEdgeTree, Vec<Multiplicity>), BijectionError> {
    if tree.is_leaf() {
        return Err(BijectionError::EmptyTree);
    }
    Ok((tree.to_plain(), tree.multiplicities().collect()))
}

/// Depth-first walk: `U` descending an edge, `D` climbing back.
pub fn tree_to_dyck(plain: &MultiEdgeTree) -> Result<DyckPath, BijectionError> {
    if plain.is_leaf() {
        return Err(BijectionError::EmptyTree);
    }
    let mut steps = Vec::with_capacity(2 * plain.plain_edge_count());
    let mut depth = 0usize;
    for (index, e) in plain.edges().iter().enumerate() {
        if e.multiplicity != Multiplicity::ONE {
            return Err(BijectionError::NonUnitMultiplicity {
                edge: index,
                multiplicity: e.multiplicity,
            });
        }
        // climb to the parent of this edge's child, then descend
        while depth >= e.depth {
            steps.push(Step::Down);
            depth -= 1;
        }
        steps.push(Step::Up);
        depth = e.depth;
    }
    steps.extend(core::iter::repeat_n(Step::Down, depth));
    Ok(Path::new_unchecked(steps))
}

pub fn dyck_to_tree(dyck: &DyckPath) -> Result<MultiEdgeTree, BijectionError> {
    if dyck.is_empty() {
        return Err(BijectionError::EmptyDyckPath);
    }
    let mut edges = Vec::with_capacity(dyck.len() / 2);
    let mut height = 0usize;
    for &s in dyck.steps() {
        match s {
            Step::Up => {
                height += 1;
                edges.push(Edge::new(height, Multiplicity::ONE));
            }
            _ => height -= 1,
        }
    }
    Ok(MultiEdgeTree::from_edges_unchecked(edges))
}

/// Drops the first and last step and codes the remaining steps pairwise:
/// `UU -> U`, `DD -> D`, `UD -> R`, `DU -> G`.
pub fn dyck_to_motzkin2(dyck: &DyckPath) -> Result<Motzkin2Path, BijectionError> {
    let steps = dyck.steps();
    if steps.is_empty() {
        return Err(BijectionError::EmptyDyckPath);
    }
    let inner = &steps[1..steps.len() - 1];
    let coded = inner
        .chunks_exact(2)
        .map(|pair| match (pair[0], pair[1]) {
            (Step::Up, Step::Up) => Step::Up,
            (Step::Down, Step::Down) => Step::Down,
            (Step::Up, Step::Down) => Step::Red,
            _ => Step::Green,
        })
        .collect();
    Ok(Path::new_unchecked(coded))
}

pub fn motzkin2_to_dyck(motzkin: &Motzkin2Path) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * motzkin.len() + 2);
    steps.push(Step::Up);
    for &s in motzkin.steps() {
        let pair = match s {
            Step::Up => [Step::Up, Step::Up],
            Step::Down => [Step::Down, Step::Down],
            Step::Red => [Step::Up, Step::Down],
            _ => [Step::Down, Step::Up],
        };
        steps.extend_from_slice(&pair);
    }
    steps.push(Step::Down);
    Path::new_unchecked(steps)
}

/// Inserts `a_i - 1` blue steps into gap `i`. Gap `i` sits immediately before
/// symbol `i` of `motzkin` and the last gap follows the final symbol, so a
/// path of length `n - 1` takes exactly `n` multiplicities.
pub fn weave_blue(
    motzkin: &Motzkin2Path,
    multiplicities: &[Multiplicity],
) -> Result<Motzkin3Path, BijectionError> {
    if multiplicities.len() != motzkin.len() + 1 {
        return Err(BijectionError::LengthMismatch {
            path_len: motzkin.len(),
            multiplicities: multiplicities.len(),
        });
    }
    let blues = multiplicities
        .iter()
        .try_fold(0u64, |acc, m| acc.checked_add(m.surplus()))
        .ok_or(BijectionError::PathTooLong)?;
    let total = u64::try_from(motzkin.len())
        .ok()
        .and_then(|n| n.checked_add(blues))
        .and_then(|t| usize::try_from(t).ok())
        .ok_or(BijectionError::PathTooLong)?;
    let mut steps = Vec::new();
    steps
        .try_reserve_exact(total)
        .map_err(|_| BijectionError::PathTooLong)?;

    let symbols = motzkin.steps().iter().copied().map(Some).chain([None]);
    for (m, symbol) in multiplicities.iter().zip(symbols) {
        // `surplus` fits in usize: it is bounded by `total` above.
        steps.extend(core::iter::repeat_n(Step::Blue, m.surplus() as usize));
        steps.extend(symbol);
    }
    Ok(Path::new_unchecked(steps))
}

/// Splits a 3-coloured path into its red/green skeleton and the gap
/// multiplicities. Blue runs before the first non-blue symbol go to gap 1,
/// trailing blues to the last gap.
pub fn unweave_blue(path: &Motzkin3Path) -> (Motzkin2Path, Vec<Multiplicity>) {
    let mut skeleton = Vec::with_capacity(path.len());
    let mut multiplicities = Vec::new();
    let mut run = 1u64;
    for &s in path.steps() {
        if s == Step::Blue {
            run += 1;
        } else {
            skeleton.push(s);
            multiplicities.push(Multiplicity::new(run).expect("run starts at 1"));
            run = 1;
        }
    }
    multiplicities.push(Multiplicity::new(run).expect("run starts at 1"));
    (Path::new_unchecked(skeleton), multiplicities)
}

/// All intermediate objects of one forward evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stages {
    pub plain: MultiEdgeTree,
    pub multiplicities: Vec<Multiplicity>,
    pub dyck: DyckPath,
    pub motzkin2: Motzkin2Path,
    pub motzkin3: Motzkin3Path,
}

pub fn forward_stages(tree: &MultiEdgeTree) -> Result<Stages, BijectionError> {
    let (plain, multiplicities) = strip_multiplicities(tree)?;
    let dyck = tree_to_dyck(&plain)?;
    let motzkin2 = dyck_to_motzkin2(&dyck)?;
    let motzkin3 = weave_blue(&motzkin2, &multiplicities)?;
    Ok(Stages {
        plain,
        multiplicities,
        dyck,
        motzkin2,
        motzkin3,
    })
}

/// Tree of total weight `N >= 1` to a 3-coloured Motzkin path of length `N - 1`.
pub fn forward(tree: &MultiEdgeTree) -> Result<Motzkin3Path, BijectionError> {
    forward_stages(tree).map(|s| s.motzkin3)
}

/// Path of length `L` to the tree of total weight `L + 1` it encodes.
pub fn inverse(path: &Motzkin3Path) -> MultiEdgeTree {
    let (skeleton, multiplicities) = unweave_blue(path);
    let dyck = motzkin2_to_dyck(&skeleton);
    let edges = dyck_to_tree(&dyck)
        .expect("expanded path is nonempty")
        .into_edges()
        .into_iter()
        .zip(multiplicities)
        .map(|(e, m)| Edge::new(e.depth, m))
        .collect();
    MultiEdgeTree::from_edges_unchecked(edges)
}
