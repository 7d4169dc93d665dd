//! ASCII drawings of paths and trees.
//!
//! Paths are drawn on a height grid, highest row first, one column per step:
//! `/` for an up-step, `\` for a down-step, and the colour letter for a level
//! step. Each row is prefixed with its height. Trees are drawn as an indented
//! outline with the multiplicity on each link.

use std::fmt::Write as _;

use motzkin_core::{MultiEdgeTree, Step};

pub fn render_path(steps: &[Step]) -> String {
    let mut height = 0usize;
    let mut cells: Vec<(usize, char)> = Vec::with_capacity(steps.len());
    for &s in steps {
        match s {
            Step::Up => {
                cells.push((height, '/'));
                height += 1;
            }
            Step::Down => {
                height -= 1;
                cells.push((height, '\\'));
            }
            level => cells.push((height, level.letter())),
        }
    }
    let top = cells.iter().map(|&(row, _)| row).max().unwrap_or(0);
    let width = top.to_string().len();
    let mut out = String::new();
    for row in (0..=top).rev() {
        let line: String = cells
            .iter()
            .map(|&(r, c)| if r == row { c } else { ' ' })
            .collect();
        let line = format!("{row:>width$} | {line}");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_tree(tree: &MultiEdgeTree) -> String {
    let edges = tree.edges();
    // last child of its parent iff no later sibling appears before the
    // parent's subtree ends
    let mut last = vec![false; edges.len()];
    let mut sibling_after: Vec<bool> = Vec::new();
    for (i, e) in edges.iter().enumerate().rev() {
        sibling_after.resize(e.depth + 1, false);
        last[i] = !sibling_after[e.depth];
        sibling_after[e.depth] = true;
    }

    let mut out = String::from("o\n");
    let mut open_last: Vec<bool> = Vec::new();
    for (e, &is_last) in edges.iter().zip(&last) {
        open_last.truncate(e.depth - 1);
        for &ancestor_last in &open_last {
            out.push_str(if ancestor_last { "    " } else { "|   " });
        }
        let branch = if is_last { '`' } else { '|' };
        let _ = writeln!(out, "{branch}-- {} o", e.multiplicity);
        open_last.push(is_last);
    }
    out
}
