//! Classification of graphs by index relative to 2.
//!
//! Two independent routes: an exact combinatorial recognizer for the Dynkin
//! and extended Dynkin shapes, and a numeric comparison of the computed index
//! against 2. A graph has index below 2 exactly when every component is a
//! Dynkin diagram, and index equal to 2 exactly when no component exceeds the
//! extended Dynkin diagrams and at least one component is one of them.

use std::fmt;

use crate::family::NamedFamily;
use crate::graph::Graph;
use crate::spectra::{self, DEFAULT_TOL};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

/// Extended diagrams. `A(n)` is the cycle on `n + 1` vertices and `D(n)` the
/// double fork on `n + 1` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedDynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentLabel {
    Dynkin(DynkinType),
    ExtendedDynkin(ExtendedDynkinType),
    Supercritical,
}

impl ComponentLabel {
    /// The generator producing this shape, if any.
    pub fn family(&self) -> Option<NamedFamily> {
        Some(match *self {
            ComponentLabel::Dynkin(DynkinType::A(n)) => NamedFamily::A(n),
            ComponentLabel::Dynkin(DynkinType::D(n)) => NamedFamily::D(n),
            ComponentLabel::Dynkin(DynkinType::E6) => NamedFamily::E6,
            ComponentLabel::Dynkin(DynkinType::E7) => NamedFamily::E7,
            ComponentLabel::Dynkin(DynkinType::E8) => NamedFamily::E8,
            ComponentLabel::ExtendedDynkin(ExtendedDynkinType::A(n)) => NamedFamily::ATilde(n),
            ComponentLabel::ExtendedDynkin(ExtendedDynkinType::D(n)) => NamedFamily::DTilde(n),
            ComponentLabel::ExtendedDynkin(ExtendedDynkinType::E6) => NamedFamily::E6Tilde,
            ComponentLabel::ExtendedDynkin(ExtendedDynkinType::E7) => NamedFamily::E7Tilde,
            ComponentLabel::ExtendedDynkin(ExtendedDynkinType::E8) => NamedFamily::E8Tilde,
            ComponentLabel::Supercritical => return None,
        })
    }

    pub fn category(&self) -> IndexCategory {
        match self {
            ComponentLabel::Dynkin(_) => IndexCategory::Subcritical,
            ComponentLabel::ExtendedDynkin(_) => IndexCategory::Critical,
            ComponentLabel::Supercritical => IndexCategory::Supercritical,
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family() {
            Some(fam) => write!(f, "{fam}"),
            None => write!(f, "supercritical"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentClass {
    /// Vertices of the component in the input graph, sorted.
    pub vertices: Vec<usize>,
    pub label: ComponentLabel,
}

/// One label per connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub components: Vec<ComponentClass>,
}

impl GraphClass {
    /// The index category implied by the component shapes: the worst one wins.
    pub fn category(&self) -> IndexCategory {
        self.components
            .iter()
            .map(|c| c.label.category())
            .max()
            .unwrap_or(IndexCategory::Subcritical)
    }

    /// The label when the graph is connected.
    pub fn single(&self) -> Option<ComponentLabel> {
        match self.components.as_slice() {
            [only] => Some(only.label),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexCategory {
    /// r < 2
    Subcritical,
    /// r = 2
    Critical,
    /// r > 2
    Supercritical,
}

impl fmt::Display for IndexCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IndexCategory::Subcritical => "Subcritical",
            IndexCategory::Critical => "Critical",
            IndexCategory::Supercritical => "Supercritical",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexClass {
    pub category: IndexCategory,
    pub index: f64,
}

/// Exact shape recognition, component by component.
pub fn classify_structure(g: &Graph) -> GraphClass {
    let components = g
        .component_vertices()
        .into_iter()
        .map(|vertices| {
            let label = classify_component(&g.induced_subgraph(&vertices));
            ComponentClass { vertices, label }
        })
        .collect();
    GraphClass { components }
}

/// Classification of the computed index against 2 with tolerance `tol`.
pub fn classify_index(g: &Graph, tol: f64) -> Result<IndexClass> {
    let index = spectra::graph_index(g)?;
    let category = if index < 2.0 - tol {
        IndexCategory::Subcritical
    } else if index > 2.0 + tol {
        IndexCategory::Supercritical
    } else {
        IndexCategory::Critical
    };
    Ok(IndexClass { category, index })
}

/// [`classify_index`] at the default tolerance.
pub fn classify_index_default(g: &Graph) -> Result<IndexClass> {
    classify_index(g, DEFAULT_TOL)
}

fn classify_component(c: &Graph) -> ComponentLabel {
    let n = c.vertex_count();
    if n == 1 {
        return ComponentLabel::Dynkin(DynkinType::A(1));
    }
    if c.is_cycle() {
        return ComponentLabel::ExtendedDynkin(ExtendedDynkinType::A(n - 1));
    }
    if !c.is_tree() {
        return ComponentLabel::Supercritical;
    }

    let degrees = c.degrees();
    let adj = c.neighbors();
    let branches: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
    match branches.as_slice() {
        [] => ComponentLabel::Dynkin(DynkinType::A(n)),
        &[b] => {
            let mut legs: Vec<usize> = adj[b].iter().map(|&w| leg_length(&adj, b, w)).collect();
            legs.sort_unstable();
            classify_legs(&legs)
        }
        &[b1, b2] => {
            let forked = |b: usize| {
                degrees[b] == 3 && adj[b].iter().filter(|&&w| degrees[w] == 1).count() == 2
            };
            if forked(b1) && forked(b2) {
                ComponentLabel::ExtendedDynkin(ExtendedDynkinType::D(n - 1))
            } else {
                ComponentLabel::Supercritical
            }
        }
        _ => ComponentLabel::Supercritical,
    }
}

/// Number of vertices on the arm that leaves `branch` through `first`.
/// Only valid when that arm is a path ending in a leaf.
fn leg_length(adj: &[Vec<usize>], branch: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (branch, first, 1);
    while adj[cur].len() == 2 {
        let next = if adj[cur][0] == prev {
            adj[cur][1]
        } else {
            adj[cur][0]
        };
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

fn classify_legs(legs: &[usize]) -> ComponentLabel {
    use ComponentLabel::{Dynkin, ExtendedDynkin};
    match *legs {
        [1, 1, k] => Dynkin(DynkinType::D(k + 3)),
        [1, 2, 2] => Dynkin(DynkinType::E6),
        [1, 2, 3] => Dynkin(DynkinType::E7),
        [1, 2, 4] => Dynkin(DynkinType::E8),
        [2, 2, 2] => ExtendedDynkin(ExtendedDynkinType::E6),
        [1, 3, 3] => ExtendedDynkin(ExtendedDynkinType::E7),
        [1, 2, 5] => ExtendedDynkin(ExtendedDynkinType::E8),
        [1, 1, 1, 1] => ExtendedDynkin(ExtendedDynkinType::D(4)),
        _ => ComponentLabel::Supercritical,
    }
}
