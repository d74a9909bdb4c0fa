//! Existence of configurations and the admissible set of angle parameters.
//!
//! A configuration of lines for the graph `g` and edge weights `τ` exists
//! exactly when the Gram matrix (unit diagonal, `√τ_ij` on edges, zero
//! elsewhere) is positive semidefinite, and its rank is the dimension of the
//! irreducible representation. For constant `τ` on a tree with index `r` the
//! admissible set is `(0, 1/r²]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{self, ComponentLabel, DynkinType, ExtendedDynkinType, IndexCategory};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{self, EigenDecomposition, SymmetricMatrix, DEFAULT_TOL};

/// Tolerance on the smallest Gram eigenvalue. Also the rank threshold.
pub const PSD_TOL: f64 = 1e-9;

/// Edge weights `τ_ij ∈ (0, 1]`. Per-edge keys are 0-based with `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub enum TauWeighting {
    Constant(f64),
    PerEdge(BTreeMap<(usize, usize), f64>),
}

impl TauWeighting {
    /// Per-edge weights from 0-based pairs in either orientation. A pair given
    /// twice with different values is rejected.
    pub fn per_edge<I>(weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), f64)>,
    {
        let mut map = BTreeMap::new();
        for ((i, j), tau) in weights {
            let key = (i.min(j), i.max(j));
            if let Some(old) = map.insert(key, tau) {
                if old != tau {
                    return Err(Error::Weighting(format!(
                        "conflicting values for edge {{{}, {}}}",
                        key.0 + 1,
                        key.1 + 1
                    )));
                }
            }
        }
        Ok(TauWeighting::PerEdge(map))
    }

    /// Checks the range of every value and, for per-edge weights, that the keys
    /// are exactly the edges of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            TauWeighting::Constant(tau) => check_tau(*tau),
            TauWeighting::PerEdge(map) => {
                for (&(i, j), &tau) in map {
                    if !g.has_edge(i, j) {
                        return Err(Error::Weighting(format!(
                            "{{{}, {}}} is not an edge",
                            i + 1,
                            j + 1
                        )));
                    }
                    check_tau(tau)?;
                }
                if let Some((i, j)) = g.edges().find(|e| !map.contains_key(e)) {
                    return Err(Error::Weighting(format!(
                        "edge {{{}, {}}} has no weight",
                        i + 1,
                        j + 1
                    )));
                }
                Ok(())
            }
        }
    }

    /// Weight of edge `{i, j}`; only meaningful for edges of a validated graph.
    pub fn tau(&self, i: usize, j: usize) -> f64 {
        match self {
            TauWeighting::Constant(tau) => *tau,
            TauWeighting::PerEdge(map) => map[&(i.min(j), i.max(j))],
        }
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if tau > 0.0 && tau <= 1.0 {
        Ok(())
    } else {
        Err(Error::TauOutOfRange(tau))
    }
}

/// Symmetric matrix with unit diagonal and `√τ_ij` on edges.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix(SymmetricMatrix);

impl GramMatrix {
    pub fn matrix(&self) -> &SymmetricMatrix {
        &self.0
    }

    pub fn into_inner(self) -> SymmetricMatrix {
        self.0
    }
}

pub fn gram_matrix(g: &Graph, w: &TauWeighting) -> Result<GramMatrix> {
    w.validate(g)?;
    let mut m = SymmetricMatrix::identity(g.vertex_count());
    for (i, j) in g.edges() {
        m.set(i, j, w.tau(i, j).sqrt());
    }
    Ok(GramMatrix(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExistenceVerdict {
    pub exists: bool,
    pub min_eigenvalue: f64,
    /// Number of Gram eigenvalues above the threshold.
    pub rank: usize,
}

/// PSD test of the Gram matrix; also returns the decomposition for reuse.
pub(crate) fn existence_with_decomposition(
    g: &Graph,
    w: &TauWeighting,
    psd_tol: f64,
) -> Result<(ExistenceVerdict, EigenDecomposition)> {
    let gram = gram_matrix(g, w)?;
    let decomposition = spectra::eigen_decompose(gram.matrix(), DEFAULT_TOL)?;
    let s = &decomposition.spectrum;
    let verdict = ExistenceVerdict {
        exists: s.min >= -psd_tol,
        min_eigenvalue: s.min,
        rank: s.eigenvalues.iter().filter(|&&l| l > psd_tol).count(),
    };
    Ok((verdict, decomposition))
}

pub fn existence(g: &Graph, w: &TauWeighting, psd_tol: f64) -> Result<ExistenceVerdict> {
    existence_with_decomposition(g, w, psd_tol).map(|(v, _)| v)
}

/// The interval `(0, upper]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SigmaInterval {
    pub upper: f64,
    pub closed_right: bool,
}

impl SigmaInterval {
    fn new(upper: f64) -> Self {
        Self {
            upper,
            closed_right: true,
        }
    }

    pub fn contains(&self, tau: f64) -> bool {
        tau > 0.0 && tau <= self.upper
    }
}

impl fmt::Display for SigmaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(0, {}]", self.upper)
    }
}

/// `(0, 1/r²]` for a tree on at least two vertices.
pub fn sigma_tree(g: &Graph) -> Result<SigmaInterval> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if g.vertex_count() < 2 {
        return Err(Error::NoFormula(
            "a single vertex has no edges to carry an angle".into(),
        ));
    }
    let r = spectra::graph_index(g)?;
    // r >= 1 for any edge; rounding can put A2 a hair below
    Ok(SigmaInterval::new((1.0 / (r * r)).min(1.0)))
}

/// `(0, 1/(4cos²(π/n))]` for the cycle on `n` vertices.
pub fn sigma_cycle(n: usize) -> Result<SigmaInterval> {
    if n < 3 {
        return Err(Error::CycleSize(n));
    }
    let c = (std::f64::consts::PI / n as f64).cos();
    Ok(SigmaInterval::new((1.0 / (4.0 * c * c)).min(1.0)))
}

/// Bounds on the right endpoint for trees on `n` vertices:
/// `1/(n−1)² ≤ upper ≤ 1/(4cos²(π/(n+1)))`.
pub fn sigma_bounds(n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::NoFormula(format!("bounds need n >= 2, got {n}")));
    }
    let k = (n - 1) as f64;
    let c = (std::f64::consts::PI / (n + 1) as f64).cos();
    Ok(((1.0 / (k * k)).min(1.0), (1.0 / (4.0 * c * c)).min(1.0)))
}

/// Position of `max Σ` relative to 1/4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuarterPosition {
    AboveQuarter,
    EqualQuarter,
    BelowQuarter,
}

impl fmt::Display for QuarterPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Decided from the shape of the tree, then cross-checked against the
/// computed index.
pub fn trichotomy(g: &Graph) -> Result<QuarterPosition> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let label = classify::classify_structure(g)
        .single()
        .expect("a tree is connected");
    let position = match label.category() {
        IndexCategory::Subcritical => QuarterPosition::AboveQuarter,
        IndexCategory::Critical => QuarterPosition::EqualQuarter,
        IndexCategory::Supercritical => QuarterPosition::BelowQuarter,
    };
    let numeric = classify::classify_index(g, DEFAULT_TOL)?;
    if numeric.category != label.category() {
        return Err(Error::Inconsistent(format!(
            "shape {label} but index {} ({})",
            numeric.index, numeric.category
        )));
    }
    Ok(position)
}

/// Closed-form right endpoint of Σ for a recognized diagram, as text.
/// Only tree diagrams (other than `A1`) and cycles have one.
pub fn closed_form(label: &ComponentLabel) -> Option<String> {
    let cos2 = |den: String| format!("1/(4cos^2(pi/{den}))");
    match *label {
        ComponentLabel::Dynkin(DynkinType::A(1)) => None,
        ComponentLabel::Dynkin(DynkinType::A(n)) => Some(cos2((n + 1).to_string())),
        ComponentLabel::Dynkin(DynkinType::D(n)) => Some(cos2((2 * (n - 1)).to_string())),
        ComponentLabel::Dynkin(DynkinType::E6) => Some(cos2("12".into())),
        ComponentLabel::Dynkin(DynkinType::E7) => Some(cos2("18".into())),
        ComponentLabel::Dynkin(DynkinType::E8) => Some(cos2("30".into())),
        // cycle on n + 1 vertices
        ComponentLabel::ExtendedDynkin(ExtendedDynkinType::A(n)) => Some(cos2((n + 1).to_string())),
        ComponentLabel::ExtendedDynkin(_) => Some("1/4".into()),
        ComponentLabel::Supercritical => None,
    }
}

/// Right endpoint of the set where the Gram matrix of the `n`-cycle is PSD,
/// i.e. `1/q²` with `q` the smallest cycle eigenvalue. It coincides with
/// [`sigma_cycle`] for odd `n` and falls to 1/4 for even `n`; the cycle
/// endpoint does not come from the Gram criterion, so the two are reported
/// side by side rather than reconciled.
pub fn cycle_psd_upper(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::CycleSize(n));
    }
    let cycle = crate::family::NamedFamily::Cycle(n).generate()?;
    let q = spectra::min_eigenvalue(&cycle)?;
    Ok((1.0 / (q * q)).min(1.0))
}
