//! Explicit configurations of lines realizing a Gram matrix, and numerical
//! verification of the projection relations
//!
//! ```text
//! P_i² = P_i = P_iᵀ
//! P_i P_j P_i = τ_ij P_i,  P_j P_i P_j = τ_ij P_j   ({i, j} an edge)
//! P_i P_j = P_j P_i = 0                          (otherwise)
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sigma::{self, TauWeighting};

pub const DEFAULT_VERIFY_TOL: f64 = 1e-8;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// `v vᵀ`.
    pub fn outer(v: &[f64]) -> Self {
        let n = v.len();
        let data = v
            .iter()
            .flat_map(|a| v.iter().map(move |b| a * b))
            .collect();
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.data[i * n + j];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// `‖self − other‖_F`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// One line per vertex, given by a unit vector, with its orthogonal projection.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceConfiguration {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<f64>>,
    pub projections: Vec<SquareMatrix>,
}

impl SubspaceConfiguration {
    /// Projections `P_i = v_i v_iᵀ`. All vectors must have length `ambient_dim`.
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension);
        }
        let projections = vectors.iter().map(|v| SquareMatrix::outer(v)).collect();
        Ok(Self {
            ambient_dim,
            vectors,
            projections,
        })
    }
}

/// Largest residual in each relation family, Frobenius norm throughout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// max ‖P_i² − P_i‖
    pub idempotency: f64,
    /// max ‖P_i − P_iᵀ‖
    pub symmetry: f64,
    /// max ‖P_i P_j P_i − τ_ij P_i‖ over ordered adjacent pairs
    pub braid: f64,
    /// max ‖P_i P_j‖ over ordered non-adjacent pairs
    pub orthogonality: f64,
    /// max |⟨v_i, v_j⟩ − G_ij| over all pairs, diagonal included
    pub gram_deviation: f64,
    /// max |∠(v_i, v_j) − arccos √τ_ij| over edges
    pub angle_deviation: f64,
    pub verify_tol: f64,
    pub pass: bool,
}

/// Principal angle in `[0, π/2]` between the lines spanned by `v` and `w`.
pub fn principal_angle(v: &[f64], w: &[f64]) -> f64 {
    let cos: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum::<f64>().abs();
    // |v ∧ w| from the 2x2 minors avoids cancellation near parallel lines
    let mut wedge = 0.0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            let m = v[a] * w[b] - v[b] * w[a];
            wedge += m * m;
        }
    }
    wedge.sqrt().atan2(cos)
}

/// `φ ∈ [0, π/2)` with `cos² φ = τ`.
pub fn angle_of(tau: f64) -> Result<f64> {
    if !(tau > 0.0 && tau <= 1.0) {
        return Err(Error::TauOutOfRange(tau));
    }
    Ok((1.0 - tau).sqrt().atan2(tau.sqrt()))
}

/// Factors the Gram matrix `G = U Λ Uᵀ` and takes `v_i` as the `i`-th column
/// of `Λ₊^{1/2} U₊ᵀ`, keeping eigenvalues above `tol`. The ambient dimension
/// is the rank of `G`.
pub fn construct_configuration(
    g: &Graph,
    w: &TauWeighting,
    tol: f64,
) -> Result<SubspaceConfiguration> {
    let (verdict, decomposition) = sigma::existence_with_decomposition(g, w, tol)?;
    if !verdict.exists {
        return Err(Error::NotPositiveSemidefinite(verdict.min_eigenvalue));
    }
    let kept: Vec<(f64, &Vec<f64>)> = decomposition
        .spectrum
        .eigenvalues
        .iter()
        .zip(&decomposition.vectors)
        .filter(|(&l, _)| l > tol)
        .map(|(&l, u)| (l.sqrt(), u))
        .collect();
    let vectors = (0..g.vertex_count())
        .map(|i| kept.iter().map(|(s, u)| s * u[i]).collect())
        .collect();
    SubspaceConfiguration::from_vectors(kept.len(), vectors)
}

pub fn verify_configuration(
    c: &SubspaceConfiguration,
    g: &Graph,
    w: &TauWeighting,
    verify_tol: f64,
) -> Result<VerificationReport> {
    let n = g.vertex_count();
    let d = c.ambient_dim;
    if c.vectors.len() != n
        || c.projections.len() != n
        || c.vectors.iter().any(|v| v.len() != d)
        || c.projections.iter().any(|p| p.dim() != d)
    {
        return Err(Error::Dimension);
    }
    let gram = sigma::gram_matrix(g, w)?;
    let p = &c.projections;

    let mut idempotency = 0.0f64;
    let mut symmetry = 0.0f64;
    for pi in p {
        idempotency = idempotency.max(pi.matmul(pi).distance(pi));
        symmetry = symmetry.max(pi.distance(&pi.transpose()));
    }

    let mut braid = 0.0f64;
    let mut orthogonality = 0.0f64;
    let mut gram_deviation = 0.0f64;
    let mut angle_deviation = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if j >= i {
                let dot: f64 = c.vectors[i]
                    .iter()
                    .zip(&c.vectors[j])
                    .map(|(a, b)| a * b)
                    .sum();
                gram_deviation = gram_deviation.max((dot - gram.matrix().get(i, j)).abs());
            }
            if i == j {
                continue;
            }
            if g.has_edge(i, j) {
                let tau = w.tau(i, j);
                let lhs = p[i].matmul(&p[j]).matmul(&p[i]);
                braid = braid.max(lhs.distance(&p[i].scaled(tau)));
                if i < j {
                    let phi = principal_angle(&c.vectors[i], &c.vectors[j]);
                    angle_deviation = angle_deviation.max((phi - angle_of(tau)?).abs());
                }
            } else {
                orthogonality = orthogonality.max(p[i].matmul(&p[j]).frobenius_norm());
            }
        }
    }

    let pass = [
        idempotency,
        symmetry,
        braid,
        orthogonality,
        gram_deviation,
        angle_deviation,
    ]
    .iter()
    .all(|&r| r <= verify_tol);
    Ok(VerificationReport {
        idempotency,
        symmetry,
        braid,
        orthogonality,
        gram_deviation,
        angle_deviation,
        verify_tol,
        pass,
    })
}

/// Per-edge weight in a configuration document, 1-based labels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeTau {
    pub i: usize,
    pub j: usize,
    pub tau: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TauDocument {
    Constant(f64),
    PerEdge(Vec<EdgeTau>),
}

/// Edge list with 1-based labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Exported configuration: the JSON consumed by `verify`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationDocument {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<f64>>,
    pub tau: TauDocument,
    pub graph: GraphDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<VerificationReport>,
}

impl ConfigurationDocument {
    pub fn new(
        c: &SubspaceConfiguration,
        g: &Graph,
        w: &TauWeighting,
        report: Option<VerificationReport>,
    ) -> Self {
        let tau = match w {
            TauWeighting::Constant(t) => TauDocument::Constant(*t),
            TauWeighting::PerEdge(map) => TauDocument::PerEdge(
                map.iter()
                    .map(|(&(i, j), &tau)| EdgeTau {
                        i: i + 1,
                        j: j + 1,
                        tau,
                    })
                    .collect(),
            ),
        };
        Self {
            ambient_dim: c.ambient_dim,
            vectors: c.vectors.clone(),
            tau,
            graph: GraphDocument {
                n: g.vertex_count(),
                edges: g.edges().map(|(i, j)| [i + 1, j + 1]).collect(),
            },
            report,
        }
    }

    /// Rebuilds the graph, weighting and configuration (projections are
    /// recomputed from the vectors).
    pub fn decode(&self) -> Result<(Graph, TauWeighting, SubspaceConfiguration)> {
        let to_zero_based = |v: usize| {
            v.checked_sub(1).ok_or(Error::VertexOutOfRange {
                vertex: 0,
                n: self.graph.n,
            })
        };
        let mut edges = Vec::with_capacity(self.graph.edges.len());
        for &[i, j] in &self.graph.edges {
            edges.push((to_zero_based(i)?, to_zero_based(j)?));
        }
        let g = Graph::new(self.graph.n, edges)?;
        let w = match &self.tau {
            TauDocument::Constant(t) => TauWeighting::Constant(*t),
            TauDocument::PerEdge(list) => {
                let mut pairs = Vec::with_capacity(list.len());
                for e in list {
                    pairs.push(((to_zero_based(e.i)?, to_zero_based(e.j)?), e.tau));
                }
                TauWeighting::per_edge(pairs)?
            }
        };
        w.validate(&g)?;
        let c = SubspaceConfiguration::from_vectors(self.ambient_dim, self.vectors.clone())?;
        Ok((g, w, c))
    }
}
