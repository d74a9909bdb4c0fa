//! Dense symmetric eigensolver (cyclic Jacobi) and graph spectra.

use crate::error::{Error, Result};
use crate::graph::{AdjacencyMatrix, Graph};

/// Default absolute tolerance for eigenvalue comparisons on adjacency-scale
/// matrices.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Sweeps stop once the off-diagonal Frobenius norm is at most this fraction
/// of the input's Frobenius norm.
pub const OFF_DIAGONAL_RTOL: f64 = 1e-12;

pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, row-major. Writes go through [`SymmetricMatrix::set`],
/// which mirrors across the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Builds from rows; fails unless square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension);
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::Dimension);
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        self.data
            .chunks(self.n)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl From<&AdjacencyMatrix> for SymmetricMatrix {
    fn from(a: &AdjacencyMatrix) -> Self {
        let n = a.dim();
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f64::from(a.get(i, j));
            }
        }
        m
    }
}

/// Eigenvalues sorted descending, with the index `r` (largest) and minimum `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub index: f64,
    pub min: f64,
    /// Largest eigenpair residual `‖M v − λ v‖₂` observed.
    pub residual_bound: f64,
}

/// Spectrum plus orthonormal eigenvectors; `vectors[k]` belongs to
/// `spectrum.eigenvalues[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// Eigenvalues of a symmetric matrix.
pub fn eigen_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    eigen_decompose(m, tol).map(|d| d.spectrum)
}

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Fails if the sweep limit is reached, or if some eigenpair has residual
/// above `tol · ‖m‖_F`.
pub fn eigen_decompose(m: &SymmetricMatrix, tol: f64) -> Result<EigenDecomposition> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::Dimension);
    }
    let norm = m.frobenius_norm();
    let threshold = OFF_DIAGONAL_RTOL * norm;

    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += a[p * n + q] * a[p * n + q];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + theta.hypot(1.0))
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
        off = off_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|r| v[r * n + k]).collect())
        .collect();

    let residual_bound = eigenvalues
        .iter()
        .zip(&vectors)
        .map(|(&lambda, x)| {
            m.mul_vec(x)
                .iter()
                .zip(x)
                .map(|(mx, xi)| (mx - lambda * xi).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    let bound = tol * norm;
    if residual_bound > bound {
        return Err(Error::Residual {
            residual: residual_bound,
            bound,
        });
    }

    Ok(EigenDecomposition {
        spectrum: Spectrum {
            index: eigenvalues[0],
            min: eigenvalues[n - 1],
            eigenvalues,
            residual_bound,
        },
        vectors,
        sweeps,
    })
}

/// Adjacency spectrum of `g`.
pub fn graph_spectrum(g: &Graph) -> Result<Spectrum> {
    eigen_symmetric(&SymmetricMatrix::from(&g.adjacency_matrix()), DEFAULT_TOL)
}

/// The index `r`, the largest adjacency eigenvalue (0 for a single vertex).
pub fn graph_index(g: &Graph) -> Result<f64> {
    graph_spectrum(g).map(|s| s.index)
}

/// The smallest adjacency eigenvalue `q`.
pub fn min_eigenvalue(g: &Graph) -> Result<f64> {
    graph_spectrum(g).map(|s| s.min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::NamedFamily;
    use std::f64::consts::PI;

    fn named(s: &str) -> Graph {
        s.parse::<NamedFamily>().unwrap().generate().unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "got {got:?}, want {want:?}");
        }
    }

    /// Bisection on a sign change of `p` inside `[lo, hi]`.
    fn bisect(p: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        assert!(p(lo) * p(hi) < 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if p(lo) * p(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn single_edge() {
        let s = graph_spectrum(&named("A2")).unwrap();
        assert_close(&s.eigenvalues, &[1.0, -1.0], 1e-12);
    }

    #[test]
    fn four_cycle() {
        let s = graph_spectrum(&named("C4")).unwrap();
        let want: Vec<f64> = {
            let mut w: Vec<f64> = (1..=4)
                .map(|j| 2.0 * (2.0 * PI * j as f64 / 4.0).cos())
                .collect();
            w.sort_by(|a, b| b.total_cmp(a));
            w
        };
        assert_close(&s.eigenvalues, &want, 1e-12);
        assert_close(&s.eigenvalues, &[2.0, 0.0, 0.0, -2.0], 1e-12);
    }

    #[test]
    fn star_k14_matches_characteristic_polynomial() {
        // det(λI − A) = λ³(λ² − 4) = λ⁵ − 4λ³
        let p = |x: f64| x.powi(5) - 4.0 * x.powi(3);
        let top = bisect(p, 1.5, 2.5);
        let bottom = bisect(p, -2.5, -1.5);
        let zero = bisect(p, -0.5, 0.7);
        let s = graph_spectrum(&named("K1,4")).unwrap();
        assert_close(&s.eigenvalues, &[top, zero, zero, zero, bottom], 1e-9);
        assert_close(&s.eigenvalues, &[2.0, 0.0, 0.0, 0.0, -2.0], 1e-12);
    }

    #[test]
    fn dynkin_indices() {
        assert!((graph_index(&named("A3")).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!((graph_index(&named("D4")).unwrap() - 3f64.sqrt()).abs() < 1e-12);
        assert!((graph_index(&named("E~8")).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn minimum_eigenvalues() {
        let e7 = named("E7");
        let s = graph_spectrum(&e7).unwrap();
        assert!((s.index + s.min).abs() <= 2.0 * DEFAULT_TOL);
        assert!((min_eigenvalue(&named("A~2")).unwrap() + 1.0).abs() < 1e-12);
        assert!((min_eigenvalue(&named("A2")).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_vertex() {
        let s = graph_spectrum(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0]);
        assert_eq!(s.index, 0.0);
        assert_eq!(s.min, 0.0);
    }

    #[test]
    fn eigenvectors_are_orthonormal_with_small_residual() {
        let m = SymmetricMatrix::from_rows(&[
            vec![4.0, 1.0, -2.0, 2.0],
            vec![1.0, 2.0, 0.0, 1.0],
            vec![-2.0, 0.0, 3.0, -2.0],
            vec![2.0, 1.0, -2.0, -1.0],
        ])
        .unwrap();
        let d = eigen_decompose(&m, 1e-12).unwrap();
        for (i, a) in d.vectors.iter().enumerate() {
            for (j, b) in d.vectors.iter().enumerate() {
                let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
        let sum: f64 = d.spectrum.eigenvalues.iter().sum();
        assert!((sum - m.trace()).abs() < 1e-12);
        assert!(d.spectrum.residual_bound <= 1e-12 * m.frobenius_norm());
        assert!(d.spectrum.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn rejects_asymmetric_rows() {
        assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let mut m = SymmetricMatrix::identity(3);
        m.set(1, 1, -5.0);
        let d = eigen_decompose(&m, DEFAULT_TOL).unwrap();
        assert_eq!(d.sweeps, 0);
        assert_eq!(d.spectrum.eigenvalues, vec![1.0, 1.0, -5.0]);
    }
}
