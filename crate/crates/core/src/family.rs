//! Named graph families: Dynkin diagrams, extended Dynkin diagrams, paths,
//! cycles and stars.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A member of one of the named families. Tilde families carry the subscript
/// of the diagram, so `ATilde(n)` and `DTilde(n)` have `n + 1` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    ATilde(usize),
    DTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
    Path(usize),
    Cycle(usize),
    /// `K_{1,m}`.
    Star(usize),
}

impl NamedFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::FamilySize(format!("{self}: {msg}")));
        match *self {
            NamedFamily::A(n) | NamedFamily::Path(n) if n < 1 => bad("needs n >= 1"),
            NamedFamily::D(n) | NamedFamily::DTilde(n) if n < 4 => bad("needs n >= 4"),
            NamedFamily::ATilde(n) if n < 2 => bad("needs n >= 2"),
            NamedFamily::Cycle(n) if n < 3 => bad("needs n >= 3"),
            NamedFamily::Star(m) if m < 1 => bad("needs m >= 1"),
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            NamedFamily::A(n)
            | NamedFamily::D(n)
            | NamedFamily::Path(n)
            | NamedFamily::Cycle(n) => n,
            NamedFamily::ATilde(n) | NamedFamily::DTilde(n) => n + 1,
            NamedFamily::E6 => 6,
            NamedFamily::E7 => 7,
            NamedFamily::E8 => 8,
            NamedFamily::E6Tilde => 7,
            NamedFamily::E7Tilde => 8,
            NamedFamily::E8Tilde => 9,
            NamedFamily::Star(m) => m + 1,
        }
    }

    /// Builds the diagram. Vertex numbering follows the drawings left to
    /// right along the main path, with branch vertices appended.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.vertex_count();
        let edges = match *self {
            NamedFamily::A(n) | NamedFamily::Path(n) => path_edges(0, n),
            NamedFamily::D(n) => {
                // two leaves 0,1 on vertex 2, then the tail 2..n
                let mut e = vec![(0, 2), (1, 2)];
                e.extend(path_edges(2, n - 2));
                e
            }
            NamedFamily::E6 => branched_path(5, 2),
            NamedFamily::E7 => branched_path(6, 2),
            NamedFamily::E8 => branched_path(7, 2),
            NamedFamily::ATilde(_) | NamedFamily::Cycle(_) => {
                (0..n).map(|i| (i, (i + 1) % n)).collect()
            }
            NamedFamily::DTilde(k) => {
                // leaves 0,1 on vertex 2; path 2..=k-2; leaves k-1,k on vertex k-2
                let mut e = vec![(0, 2), (1, 2)];
                e.extend(path_edges(2, k - 3));
                e.push((k - 2, k - 1));
                e.push((k - 2, k));
                e
            }
            NamedFamily::E6Tilde => {
                let mut e = path_edges(0, 5);
                e.push((2, 5));
                e.push((5, 6));
                e
            }
            NamedFamily::E7Tilde => branched_path(7, 3),
            NamedFamily::E8Tilde => branched_path(8, 2),
            NamedFamily::Star(m) => (1..=m).map(|leaf| (0, leaf)).collect(),
        };
        Graph::new(n, edges)
    }
}

/// Path on `len` vertices starting at `first`.
fn path_edges(first: usize, len: usize) -> Vec<(usize, usize)> {
    (first..first + len.saturating_sub(1))
        .map(|i| (i, i + 1))
        .collect()
}

/// Path on `len` vertices with one extra vertex hanging off `branch`.
fn branched_path(len: usize, branch: usize) -> Vec<(usize, usize)> {
    let mut e = path_edges(0, len);
    e.push((branch, len));
    e
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedFamily::A(n) => write!(f, "A{n}"),
            NamedFamily::D(n) => write!(f, "D{n}"),
            NamedFamily::E6 => write!(f, "E6"),
            NamedFamily::E7 => write!(f, "E7"),
            NamedFamily::E8 => write!(f, "E8"),
            NamedFamily::ATilde(n) => write!(f, "A~{n}"),
            NamedFamily::DTilde(n) => write!(f, "D~{n}"),
            NamedFamily::E6Tilde => write!(f, "E~6"),
            NamedFamily::E7Tilde => write!(f, "E~7"),
            NamedFamily::E8Tilde => write!(f, "E~8"),
            NamedFamily::Path(n) => write!(f, "P{n}"),
            NamedFamily::Cycle(n) => write!(f, "C{n}"),
            NamedFamily::Star(m) => write!(f, "K1,{m}"),
        }
    }
}

impl FromStr for NamedFamily {
    type Err = Error;

    /// Accepts `A<n>`, `D<n>`, `E6|E7|E8`, `A~<n>`, `D~<n>`, `E~6|E~7|E~8`,
    /// `C<n>`, `P<n>` and `K1,<m>`. The result is validated.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        let s = s.trim();
        let fam = match s {
            "E6" => NamedFamily::E6,
            "E7" => NamedFamily::E7,
            "E8" => NamedFamily::E8,
            "E~6" => NamedFamily::E6Tilde,
            "E~7" => NamedFamily::E7Tilde,
            "E~8" => NamedFamily::E8Tilde,
            _ => {
                if let Some(rest) = s.strip_prefix("K1,") {
                    NamedFamily::Star(num(rest)?)
                } else if let Some(rest) = s.strip_prefix("A~") {
                    NamedFamily::ATilde(num(rest)?)
                } else if let Some(rest) = s.strip_prefix("D~") {
                    NamedFamily::DTilde(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('A') {
                    NamedFamily::A(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('D') {
                    NamedFamily::D(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('C') {
                    NamedFamily::Cycle(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('P') {
                    NamedFamily::Path(num(rest)?)
                } else {
                    return Err(unknown());
                }
            }
        };
        fam.validate()?;
        Ok(fam)
    }
}
