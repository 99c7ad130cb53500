//! Quivers and dimension vectors.
//!
//! Vertices are 0-indexed internally. Everything that crosses a file or
//! command-line boundary uses 1-indexed vertices; the conversion happens in
//! [`crate::repfile`] and the CLI.

use std::fmt;
use std::ops::{Add, Index, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite quiver without oriented cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
    topo: Vec<usize>,
}

impl Quiver {
    /// Builds a quiver from 0-indexed `(source, target)` pairs.
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Input("quiver needs at least one vertex".into()));
        }
        for &(s, t) in &arrows {
            if s >= vertex_count || t >= vertex_count {
                return Err(Error::Input(format!(
                    "arrow ({}, {}) out of range for {} vertices",
                    s + 1,
                    t + 1,
                    vertex_count
                )));
            }
            if s == t {
                return Err(Error::Input(format!("loop at vertex {}", s + 1)));
            }
        }
        let topo = topological_order(vertex_count, &arrows)
            .ok_or_else(|| Error::Input("quiver has an oriented cycle".into()))?;
        Ok(Quiver {
            vertex_count,
            arrows,
            topo,
        })
    }

    /// Equioriented A_n: arrows i -> i+1.
    pub fn equioriented_a(n: usize) -> Self {
        let arrows = (1..n).map(|i| (i - 1, i)).collect();
        Quiver::new(n, arrows).expect("A_n is acyclic")
    }

    /// The D4 orientation 1 -> 2, 2 -> 3, 2 -> 4.
    pub fn d4() -> Self {
        Quiver::new(4, vec![(0, 1), (1, 2), (1, 3)]).expect("D4 is acyclic")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices in a topological order (sources of arrows before targets).
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// True when the underlying graph is a tree (connected, no cycles, no
    /// parallel arrows).
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count;
        if self.arrows.len() + 1 != n {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(s, t) in &self.arrows {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    pub fn check_dims(&self, d: &DimVector) -> Result<()> {
        if d.len() != self.vertex_count {
            return Err(Error::Dimension(format!(
                "dimension vector {} has length {}, quiver has {} vertices",
                d,
                d.len(),
                self.vertex_count
            )));
        }
        Ok(())
    }

    /// Σ_i d_i e_i − Σ_{i→j} d_i e_j.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        self.check_dims(d)?;
        self.check_dims(e)?;
        let diag: i64 = d.iter().zip(e.iter()).map(|(&x, &y)| (x * y) as i64).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|&(s, t)| (d[s] * e[t]) as i64)
            .sum();
        Ok(diag - off)
    }

    /// Dimension ⟨e, d−e⟩ of Gr_e(M) for a generic M of dimension vector d.
    pub fn generic_grass_dim(&self, e: &DimVector, d: &DimVector) -> Result<i64> {
        let rest = d.checked_sub(e).ok_or_else(|| {
            Error::Dimension(format!("{} is not componentwise below {}", e, d))
        })?;
        self.euler_form(e, &rest)
    }
}

fn topological_order(n: usize, arrows: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for &(_, t) in arrows {
        indeg[t] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).rev().collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        let mut next = Vec::new();
        for &(s, t) in arrows {
            if s == v {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    next.push(t);
                }
            }
        }
        next.sort_unstable_by(|a, b| b.cmp(a));
        ready.extend(next);
        ready.sort_unstable_by(|a, b| b.cmp(a));
    }
    (order.len() == n).then_some(order)
}

/// Non-negative integer vector indexed by vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zeros(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self − other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }
}

impl Index<usize> for DimVector {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl From<Vec<usize>> for DimVector {
    fn from(v: Vec<usize>) -> Self {
        DimVector(v)
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.len(), rhs.len(), "dimension vector length mismatch");
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVector {
    type Output = DimVector;
    fn sub(self, rhs: &DimVector) -> DimVector {
        self.checked_sub(rhs)
            .expect("dimension vector subtraction went negative")
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}
