//! Equioriented type A: interval modules, P ⊕ I in the w-basis, and the
//! dictionary with degenerate flag varieties.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cells::DegreeAssignment;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{Rep, Summand};

/// The interval module S_{left,right} on A_n (1-indexed, inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub left: usize,
    pub right: usize,
}

impl Interval {
    pub fn new(left: usize, right: usize, n: usize) -> Result<Self> {
        if left == 0 || left > right || right > n {
            return Err(Error::Dimension(format!(
                "interval [{}, {}] is not inside 1..={}",
                left, right, n
            )));
        }
        Ok(Interval { left, right })
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.left <= vertex && vertex <= self.right
    }

    pub fn dim_vector(&self, n: usize) -> DimVector {
        DimVector((1..=n).map(|v| self.contains(v) as usize).collect())
    }

    /// Image under the vertex reversal i ↦ n + 1 − i.
    pub fn reversed(&self, n: usize) -> Interval {
        Interval {
            left: n + 1 - self.right,
            right: n + 1 - self.left,
        }
    }

    /// All intervals of A_n.
    pub fn all(n: usize) -> impl Iterator<Item = Interval> {
        (1..=n).flat_map(move |i| (i..=n).map(move |j| Interval { left: i, right: j }))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S[{},{}]", self.left, self.right)
    }
}

fn one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

/// Thin representation with identity maps along the interval.
pub fn interval_module(iv: Interval, n: usize) -> Result<Rep> {
    Interval::new(iv.left, iv.right, n)?;
    let q = Quiver::equioriented_a(n);
    let dims = iv.dim_vector(n);
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            let mut m = Matrix::zeros(dims[t], dims[s]);
            if dims[s] == 1 && dims[t] == 1 {
                m.set(0, 0, one());
            }
            m
        })
        .collect();
    Rep::new(q, Field::Rational, dims, maps)
}

/// dim Hom(S_{a,b}, S_{c,d}) = 1 iff c ≤ a ≤ d ≤ b.
pub fn interval_hom_dim(src: Interval, tgt: Interval) -> usize {
    (tgt.left <= src.left && src.left <= tgt.right && tgt.right <= src.right) as usize
}

/// P = ⊕ P_i^{a_i}, I = ⊕ I_i^{b_i} on equioriented A_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PIConfig {
    pub n: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl PIConfig {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::Input(format!(
                "multiplicity vectors must be non-empty and of equal length (got {} and {})",
                a.len(),
                b.len()
            )));
        }
        if a.iter().chain(&b).all(|&x| x == 0) {
            return Err(Error::Input("all multiplicities are zero".into()));
        }
        Ok(PIConfig { n: a.len(), a, b })
    }

    /// A(F^a_{n+1}) ⊕ A*: every P_i and I_i once.
    pub fn complete_flag(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("complete flag needs n ≥ 1".into()));
        }
        PIConfig::new(vec![1; n], vec![1; n])
    }

    pub fn quiver(&self) -> Quiver {
        Quiver::equioriented_a(self.n)
    }

    /// dim P: Σ_{i ≤ k} a_i at vertex k.
    pub fn dim_p(&self) -> DimVector {
        DimVector(
            self.a
                .iter()
                .scan(0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect(),
        )
    }

    /// dim I: Σ_{j ≥ k} b_j at vertex k.
    pub fn dim_i(&self) -> DimVector {
        let mut v: Vec<usize> = self
            .b
            .iter()
            .rev()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        v.reverse();
        DimVector(v)
    }

    pub fn dim_m(&self) -> DimVector {
        &self.dim_p() + &self.dim_i()
    }

    pub fn is_complete_flag(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 1)
    }
}

impl fmt::Display for PIConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{} a={:?} b={:?}", self.n, self.a, self.b)
    }
}

/// Kind, vertex (1-indexed) and copy number of every summand of
/// [`build_pi`], in summand order: all P-blocks, then all I-blocks.
pub fn pi_layout(cfg: &PIConfig) -> Vec<(crate::rep::Side, usize, usize)> {
    use crate::rep::Side;
    let mut out = Vec::new();
    for (i, &m) in cfg.a.iter().enumerate() {
        out.extend((0..m).map(|c| (Side::Projective, i + 1, c)));
    }
    for (j, &m) in cfg.b.iter().enumerate() {
        out.extend((0..m).map(|c| (Side::Injective, j + 1, c)));
    }
    out
}

/// P ⊕ I in the w-basis: every summand is thin, every arrow acts by 0/1
/// matrices, and I_i's basis vector at vertex i maps to zero.
pub fn build_pi(cfg: &PIConfig) -> Result<Rep> {
    use crate::rep::Side;
    let cfg = PIConfig::new(cfg.a.clone(), cfg.b.clone())?;
    let n = cfg.n;
    let q = cfg.quiver();
    let layout = pi_layout(&cfg);
    let mut next = vec![0usize; n];
    let mut summands = Vec::with_capacity(layout.len());
    for &(side, k, copy) in &layout {
        let (support, name, mult) = match side {
            Side::Projective => (Interval { left: k, right: n }, "P", cfg.a[k - 1]),
            Side::Injective => (Interval { left: 1, right: k }, "I", cfg.b[k - 1]),
        };
        let label = if mult > 1 {
            format!("{}{}.{}", name, k, copy + 1)
        } else {
            format!("{}{}", name, k)
        };
        let basis = (1..=n)
            .map(|v| {
                if support.contains(v) {
                    next[v - 1] += 1;
                    vec![next[v - 1] - 1]
                } else {
                    Vec::new()
                }
            })
            .collect();
        summands.push(Summand { label, basis });
    }
    let dims = DimVector(next);
    debug_assert_eq!(dims, cfg.dim_m());
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for sm in &summands {
                if let (Some(&c), Some(&r)) = (sm.basis[s].first(), sm.basis[t].first()) {
                    m.set(r, c, one());
                }
            }
            m
        })
        .collect();
    Rep::new(q, Field::Rational, dims, maps)?.with_summands(summands)
}

/// Increasing steps 0 < d_1 < … < d_s < ambient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagSpec {
    pub ambient: usize,
    pub steps: Vec<usize>,
}

impl FlagSpec {
    pub fn new(ambient: usize, steps: Vec<usize>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Input("flag needs at least one step".into()));
        }
        if steps[0] == 0 || *steps.last().unwrap() >= ambient {
            return Err(Error::Input(format!(
                "flag steps {:?} must lie strictly between 0 and {}",
                steps, ambient
            )));
        }
        if steps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input(format!(
                "flag steps {:?} must be strictly increasing",
                steps
            )));
        }
        Ok(FlagSpec { ambient, steps })
    }

    pub fn complete(n_plus_1: usize) -> Result<Self> {
        FlagSpec::new(n_plus_1, (1..n_plus_1).collect())
    }
}

/// a_i = d_i − d_{i−1}, b_i = d_{i+1} − d_i on A_s.
pub fn flag_to_pi(spec: &FlagSpec) -> PIConfig {
    let mut d = vec![0];
    d.extend(&spec.steps);
    d.push(spec.ambient);
    let s = spec.steps.len();
    let a = (1..=s).map(|i| d[i] - d[i - 1]).collect();
    let b = (1..=s).map(|i| d[i + 1] - d[i]).collect();
    PIConfig::new(a, b).expect("a valid flag gives a valid configuration")
}

/// Explicit torus weights of the w-basis: I_k ↦ k − 1 and P_j ↦ j + n − 1.
/// Repeated copies are spread out as `base · K + copy`, K the largest
/// multiplicity, which keeps the block order and reproduces the weights
/// exactly when every multiplicity is at most one.
pub fn type_a_gt_degrees(cfg: &PIConfig) -> DegreeAssignment {
    use crate::rep::Side;
    let n = cfg.n as i64;
    let k = cfg.a.iter().chain(&cfg.b).copied().max().unwrap_or(1).max(1) as i64;
    let degrees = pi_layout(cfg)
        .into_iter()
        .map(|(side, v, copy)| {
            let base = match side {
                Side::Injective => v as i64 - 1,
                Side::Projective => v as i64 + n - 1,
            };
            base * k + copy as i64
        })
        .collect();
    DegreeAssignment::new(degrees).expect("GT degrees are distinct")
}

/// Negated GT weights. These satisfy d(L) < d(L') whenever Hom(L, L') ≠ 0.
pub fn type_a_reversed_degrees(cfg: &PIConfig) -> DegreeAssignment {
    let gt = type_a_gt_degrees(cfg);
    let max = gt.iter().max().unwrap_or(0);
    DegreeAssignment::new(gt.iter().map(|d| max - d).collect()).expect("distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{hom_ext_dims, Side};

    #[test]
    fn interval_module_examples() {
        let full = interval_module(Interval::new(1, 3, 3).unwrap(), 3).unwrap();
        assert_eq!(full.dims(), &DimVector(vec![1, 1, 1]));
        assert!(full.maps().iter().all(|m| m.get(0, 0) == &one()));
        let simple = interval_module(Interval::new(2, 2, 3).unwrap(), 3).unwrap();
        assert_eq!(simple.dims(), &DimVector(vec![0, 1, 0]));
        let s12 = interval_module(Interval::new(1, 2, 3).unwrap(), 3).unwrap();
        assert_eq!(s12.dims(), &DimVector(vec![1, 1, 0]));
        assert_eq!(s12.map(0).get(0, 0), &one());
        assert_eq!(s12.map(1).rows(), 0);
        assert!(Interval::new(2, 1, 3).is_err());
        assert!(Interval::new(1, 4, 3).is_err());
    }

    #[test]
    fn interval_hom_examples() {
        let iv = |i, j| Interval { left: i, right: j };
        assert_eq!(interval_hom_dim(iv(1, 2), iv(1, 1)), 1);
        assert_eq!(interval_hom_dim(iv(1, 1), iv(1, 2)), 0);
        assert_eq!(interval_hom_dim(iv(2, 3), iv(1, 2)), 1);
    }

    #[test]
    fn interval_hom_rule_matches_linear_algebra() {
        for n in 1..=6 {
            let ivs: Vec<Interval> = Interval::all(n).collect();
            let mods: Vec<Rep> = ivs.iter().map(|&iv| interval_module(iv, n).unwrap()).collect();
            for (x, mx) in ivs.iter().zip(&mods) {
                for (y, my) in ivs.iter().zip(&mods) {
                    assert_eq!(
                        interval_hom_dim(*x, *y),
                        hom_ext_dims(mx, my).unwrap().hom,
                        "n={} {} -> {}",
                        n,
                        x,
                        y
                    );
                }
            }
        }
    }

    #[test]
    fn complete_flag_model_for_n4() {
        let m = build_pi(&PIConfig::complete_flag(4).unwrap()).unwrap();
        assert_eq!(m.dims(), &DimVector(vec![5, 5, 5, 5]));
        let s = m.summands().unwrap();
        assert_eq!(s.len(), 8);
        let labels: Vec<&str> = s.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, ["P1", "P2", "P3", "P4", "I1", "I2", "I3", "I4"]);
        // every arrow matrix is 0/1 with one entry per surviving basis vector
        for (k, mat) in m.maps().iter().enumerate() {
            let ones = mat.entries().filter(|x| **x == one()).count();
            // P_1..P_{k+1} continue, I_{k+2}..I_4 continue
            assert_eq!(ones, (k + 1) + (4 - (k + 1)), "arrow {}", k);
        }
    }

    #[test]
    fn single_projective() {
        let m = build_pi(&PIConfig::new(vec![1, 0, 0], vec![0, 0, 0]).unwrap()).unwrap();
        assert_eq!(m.dims(), &DimVector(vec![1, 1, 1]));
        assert!(m.maps().iter().all(|x| x.get(0, 0) == &one()));
    }

    #[test]
    fn summand_homs_follow_the_interval_rules() {
        let n = 4;
        let cfg = PIConfig::complete_flag(n).unwrap();
        let m = build_pi(&cfg).unwrap();
        let layout = pi_layout(&cfg);
        let reps: Vec<Rep> = (0..layout.len()).map(|i| m.summand_rep(i).unwrap()).collect();
        for (x, rx) in layout.iter().zip(&reps) {
            for (y, ry) in layout.iter().zip(&reps) {
                let h = hom_ext_dims(rx, ry).unwrap().hom;
                let (i, j) = (x.1, y.1);
                let expect = match (x.0, y.0) {
                    // Hom(P_i, P_j) = (P_j)_i
                    (Side::Projective, Side::Projective) => (j <= i) as usize,
                    (Side::Injective, Side::Injective) => (j <= i) as usize,
                    (Side::Projective, Side::Injective) => (i <= j) as usize,
                    (Side::Injective, Side::Projective) => (i == n && j == 1) as usize,
                };
                assert_eq!(h, expect, "{:?} -> {:?}", x, y);
            }
        }
    }

    #[test]
    fn flag_dictionary() {
        let c = flag_to_pi(&FlagSpec::new(5, vec![1, 2, 3, 4]).unwrap());
        assert_eq!((c.a.clone(), c.b.clone()), (vec![1, 1, 1, 1], vec![1, 1, 1, 1]));
        let g = flag_to_pi(&FlagSpec::new(6, vec![2]).unwrap());
        assert_eq!((g.a, g.b), (vec![2], vec![4]));
        let p = flag_to_pi(&FlagSpec::new(5, vec![1, 3, 4]).unwrap());
        assert_eq!((p.a.clone(), p.b.clone()), (vec![1, 2, 1], vec![2, 1, 1]));
        assert_eq!(p.dim_m(), DimVector(vec![5, 5, 5]));
        assert_eq!(p.dim_p(), DimVector(vec![1, 3, 4]));
        assert!(FlagSpec::new(5, vec![1, 1]).is_err());
        assert!(FlagSpec::new(5, vec![0, 2]).is_err());
        assert!(FlagSpec::new(5, vec![2, 5]).is_err());
    }

    #[test]
    fn complete_flags_have_constant_dimension() {
        for n in 1..=7 {
            let c = PIConfig::complete_flag(n).unwrap();
            assert_eq!(c.dim_m(), DimVector(vec![n + 1; n]));
        }
    }

    #[test]
    fn gt_degrees() {
        let d = type_a_gt_degrees(&PIConfig::complete_flag(4).unwrap());
        // P1..P4 then I1..I4
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![4, 5, 6, 7, 0, 1, 2, 3]);
        let d1 = type_a_gt_degrees(&PIConfig::complete_flag(1).unwrap());
        assert_eq!(d1.iter().collect::<Vec<_>>(), vec![1, 0]);
        let dup = type_a_gt_degrees(&PIConfig::new(vec![0, 2, 0, 0], vec![0; 4]).unwrap());
        let v: Vec<i64> = dup.iter().collect();
        assert_eq!(v.len(), 2);
        assert!(v[0] < v[1]);
        assert_eq!(v[0], 5 * 2);
    }
}
