//! Thin modules over tree quivers: projectives, injectives and P ⊕ I for any
//! orientation.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{Rep, Summand};

fn reach(q: &Quiver, v: usize, forward: bool) -> Vec<usize> {
    let mut seen = vec![false; q.vertex_count()];
    let mut stack = vec![v];
    seen[v] = true;
    while let Some(x) = stack.pop() {
        for &(s, t) in q.arrows() {
            let (from, to) = if forward { (s, t) } else { (t, s) };
            if from == x && !seen[to] {
                seen[to] = true;
                stack.push(to);
            }
        }
    }
    (0..q.vertex_count()).filter(|&w| seen[w]).collect()
}

/// Support of P_v (0-indexed): the vertices reachable from v.
pub fn projective_support(q: &Quiver, v: usize) -> Vec<usize> {
    reach(q, v, true)
}

/// Support of I_v (0-indexed): the vertices from which v is reachable.
pub fn injective_support(q: &Quiver, v: usize) -> Vec<usize> {
    reach(q, v, false)
}

/// Direct sum of thin modules, one per `(label, support)`, each acting by 1 on
/// the arrows inside its support. Supports are 0-indexed vertex lists.
pub fn thin_sum(q: &Quiver, parts: &[(String, Vec<usize>)]) -> Result<Rep> {
    let n = q.vertex_count();
    let mut dims = vec![0usize; n];
    let mut summands = Vec::with_capacity(parts.len());
    for (label, support) in parts {
        let mut basis = vec![Vec::new(); n];
        for &v in support {
            if v >= n {
                return Err(Error::Input(format!("vertex {} out of range in {}", v + 1, label)));
            }
            if !basis[v].is_empty() {
                return Err(Error::Input(format!("vertex {} repeated in {}", v + 1, label)));
            }
            basis[v].push(dims[v]);
            dims[v] += 1;
        }
        summands.push(Summand {
            label: label.clone(),
            basis,
        });
    }
    let one = BigRational::from_integer(BigInt::from(1));
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for sm in &summands {
                if let (Some(&c), Some(&r)) = (sm.basis[s].first(), sm.basis[t].first()) {
                    m.set(r, c, one.clone());
                }
            }
            m
        })
        .collect();
    Rep::new(q.clone(), Field::Rational, DimVector(dims), maps)?.with_summands(summands)
}

/// ⊕_i P_i^{a_i} ⊕ ⊕_j I_j^{b_j} over a tree quiver, projective blocks
/// first, labelled like the type A construction.
pub fn pi_rep(q: &Quiver, a: &[usize], b: &[usize]) -> Result<Rep> {
    let n = q.vertex_count();
    if a.len() != n || b.len() != n {
        return Err(Error::Dimension(format!(
            "multiplicities of length {} and {} for {} vertices",
            a.len(),
            b.len(),
            n
        )));
    }
    if !q.is_tree() {
        return Err(Error::Unsupported("P ⊕ I is built for tree quivers only".into()));
    }
    let mut parts = Vec::new();
    for (name, mult, support) in [
        ("P", a, projective_support as fn(&Quiver, usize) -> Vec<usize>),
        ("I", b, injective_support),
    ] {
        for (v, &m) in mult.iter().enumerate() {
            for c in 0..m {
                let label = if m > 1 {
                    format!("{}{}.{}", name, v + 1, c + 1)
                } else {
                    format!("{}{}", name, v + 1)
                };
                parts.push((label, support(q, v)));
            }
        }
    }
    thin_sum(q, &parts)
}
