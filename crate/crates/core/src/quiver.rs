use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are addressed by index; names are kept
/// for parsing and reporting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Parse(format!("arrow {} has an endpoint out of range", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// One vertex with `k` loops, used to present modules over structure-constant
    /// algebras (one loop per basis element or generator).
    pub fn loops(k: usize) -> Self {
        let arrows = (0..k).map(|i| Arrow { name: format!("b{i}"), source: 0, target: 0 }).collect();
        Quiver { vertices: vec!["*".into()], arrows }
    }

    /// `Q x A_len`: `len` copies of `Q` joined by one arrow per vertex from
    /// copy `i` to copy `i + 1`. Representations are complexes of representations
    /// of `Q` (ignoring the `d^2 = 0` and commutativity relations).
    pub fn linear_extension(&self, len: usize) -> Self {
        let n = self.vertices.len();
        let mut vertices = Vec::with_capacity(n * len);
        for c in 0..len {
            for v in &self.vertices {
                vertices.push(format!("{v}@{c}"));
            }
        }
        let mut arrows = Vec::new();
        for c in 0..len {
            for a in &self.arrows {
                arrows.push(Arrow { name: format!("{}@{c}", a.name), source: c * n + a.source, target: c * n + a.target });
            }
        }
        for c in 0..len.saturating_sub(1) {
            for v in 0..n {
                arrows.push(Arrow { name: format!("d{v}@{c}"), source: c * n + v, target: (c + 1) * n + v });
            }
        }
        Quiver { vertices, arrows }
    }

    pub fn opposite(&self) -> Self {
        let arrows = self.arrows.iter().map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source }).collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    #[inline]
    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownName(name.into()))
    }

    /// Vertices reachable from each other through arrows in either direction.
    pub fn is_connected_on(&self, support: &[bool]) -> bool {
        let Some(start) = support.iter().position(|&s| s) else { return true };
        let mut seen = vec![false; support.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && support[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        support.iter().zip(&seen).all(|(&s, &k)| !s || k)
    }
}
