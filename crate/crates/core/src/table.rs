//! The ten weight-3 trees with every intermediate stage of the bijection.

use alloc::vec::Vec;

use crate::bijection::forward_stages;
use crate::enumerate::gen_trees;
use crate::path::{DyckPath, Motzkin2Path, Motzkin3Path};
use crate::tree::MultiEdgeTree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub tree: MultiEdgeTree,
    pub dyck: DyckPath,
    pub motzkin2: Motzkin2Path,
    pub motzkin3: Motzkin3Path,
}

/// One row per tree of total weight `weight >= 1`, in canonical tree order.
pub fn stage_rows(weight: usize) -> Vec<TableRow> {
    gen_trees(weight)
        .into_iter()
        .map(|tree| {
            let s = forward_stages(&tree).expect("weight >= 1");
            TableRow {
                tree,
                dyck: s.dyck,
                motzkin2: s.motzkin2,
                motzkin3: s.motzkin3,
            }
        })
        .collect()
}

/// The worked example: all multi-edge trees with three edges.
pub fn weight_three_rows() -> Vec<TableRow> {
    stage_rows(3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_rows() {
        let rows = weight_three_rows();
        assert_eq!(rows.len(), 10);
        let chain = rows
            .iter()
            .find(|r| r.tree.serialize() == "(1(1(1())))")
            .unwrap();
        assert_eq!(chain.dyck.serialize(), "UUUDDD");
        assert_eq!(chain.motzkin2.serialize(), "UD");
        assert_eq!(chain.motzkin3.serialize(), "UD");
    }
}
