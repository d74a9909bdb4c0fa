//! Exhaustive enumeration of labeled trees through Prüfer sequences.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 9;

/// Iterator over all labeled trees on `n` vertices, in lexicographic order of
/// their Prüfer sequences.
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

/// All `n^(n-2)` labeled trees on `n` vertices (one tree for `n <= 2`).
pub fn enumerate_trees(n: usize) -> Result<LabeledTrees> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationRange {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(LabeledTrees {
        n,
        next: Some(vec![0; n.saturating_sub(2)]),
    })
}

/// Cayley's count `n^(n-2)`, with the convention of one tree for `n = 1`.
pub fn labeled_tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let seq = self.next.take()?;
        let tree = prufer_decode(self.n, &seq);
        // odometer increment in base n
        let mut succ = seq;
        let mut carried = true;
        for digit in succ.iter_mut().rev() {
            *digit += 1;
            if *digit < self.n {
                carried = false;
                break;
            }
            *digit = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(tree)
    }
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into a tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    if n == 1 {
        return Graph::empty(1).expect("n >= 1");
    }
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple graph")
}
