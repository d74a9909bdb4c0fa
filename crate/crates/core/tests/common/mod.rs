#![allow(dead_code)]

pub mod charpoly;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subspace_angles::trees::{enumerate_trees, prufer_decode};
use subspace_angles::{Graph, NamedFamily};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn named(s: &str) -> Graph {
    s.parse::<NamedFamily>().unwrap().generate().unwrap()
}

/// Every labeled tree on `lo..=hi` vertices.
pub fn all_trees(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| enumerate_trees(n).unwrap())
        .collect()
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    if n == 1 {
        return Graph::empty(1).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &seq)
}

/// Random spanning tree plus each remaining pair with a random density.
pub fn random_connected(rng: &mut impl Rng, n: usize) -> Graph {
    let tree = random_tree(rng, n);
    let p: f64 = rng.gen_range(0.0..0.7);
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for i in 0..n {
        for j in i + 1..n {
            if !tree.has_edge(i, j) && rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// `count` random connected graphs on 2..=max_n vertices.
pub fn random_connected_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(2..=max_n);
            random_connected(&mut r, n)
        })
        .collect()
}

pub fn cycles(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .map(|n| NamedFamily::Cycle(n).generate().unwrap())
        .collect()
}

/// Every labeled graph on `n` vertices (2^(n choose 2) of them).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

pub fn dynkin_families() -> Vec<NamedFamily> {
    let mut v = vec![NamedFamily::E6, NamedFamily::E7, NamedFamily::E8];
    v.extend((1..=20).map(NamedFamily::A));
    v.extend((4..=20).map(NamedFamily::D));
    v
}

pub fn extended_families() -> Vec<NamedFamily> {
    let mut v = vec![
        NamedFamily::E6Tilde,
        NamedFamily::E7Tilde,
        NamedFamily::E8Tilde,
    ];
    v.extend((4..=20).map(NamedFamily::DTilde));
    v.extend((2..=20).map(NamedFamily::ATilde));
    v
}

/// Strict supergraphs of extended Dynkin diagrams: one pendant vertex added
/// at each vertex, or one missing edge added.
pub fn supergraph_probes() -> Vec<Graph> {
    let mut probes = Vec::new();
    let mut bases: Vec<NamedFamily> = vec![
        NamedFamily::E6Tilde,
        NamedFamily::E7Tilde,
        NamedFamily::E8Tilde,
    ];
    bases.extend((4..=8).map(NamedFamily::DTilde));
    bases.extend((2..=8).map(NamedFamily::ATilde));
    for fam in bases {
        let g = fam.generate().unwrap();
        let n = g.vertex_count();
        for v in 0..n {
            probes.push(Graph::new(n + 1, g.edges().chain([(v, n)])).unwrap());
        }
        for i in 0..n {
            for j in i + 1..n {
                if !g.has_edge(i, j) {
                    probes.push(Graph::new(n, g.edges().chain([(i, j)])).unwrap());
                }
            }
        }
    }
    probes
}
