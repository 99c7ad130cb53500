#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use qgdf::linalg::{Field, Matrix};
use qgdf::rep::{Rep, SubrepBasis};
use qgdf::thin::{injective_support, projective_support, thin_sum};
use qgdf::typea::PIConfig;
use qgdf::{DimVector, Quiver};
use rand::Rng;

pub fn dv(v: &[usize]) -> DimVector {
    DimVector(v.to_vec())
}

/// Every (a, b) on A_n, n ≥ 1, with dim(P ⊕ I) summed over vertices at most
/// `max_dim`.
pub fn type_a_configs(max_dim: usize) -> Vec<PIConfig> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        // weights: P_i has dimension n − i + 1, I_j has dimension j
        let mut weights = Vec::new();
        for i in 1..=n {
            weights.push(n - i + 1);
        }
        for j in 1..=n {
            weights.push(j);
        }
        let mut mult = vec![0usize; 2 * n];
        fn rec(
            k: usize,
            left: usize,
            n: usize,
            weights: &[usize],
            mult: &mut Vec<usize>,
            out: &mut Vec<PIConfig>,
        ) {
            if k == weights.len() {
                if mult.iter().any(|&m| m > 0) {
                    out.push(PIConfig::new(mult[..n].to_vec(), mult[n..].to_vec()).unwrap());
                }
                return;
            }
            let mut m = 0;
            while m * weights[k] <= left {
                mult[k] = m;
                rec(k + 1, left - m * weights[k], n, weights, mult, out);
                m += 1;
            }
            mult[k] = 0;
        }
        rec(0, max_dim, n, &weights, &mut mult, &mut out);
    }
    out
}

pub fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
    let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(lo..=hi)).collect();
    Matrix::from_i64(rows, cols, &entries)
}

pub fn random_rep(rng: &mut impl Rng, q: &Quiver, max_dim: usize) -> Rep {
    let dims = DimVector((0..q.vertex_count()).map(|_| rng.gen_range(0..=max_dim)).collect());
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| random_matrix(rng, dims[t], dims[s], -2, 2))
        .collect();
    Rep::new(q.clone(), Field::Rational, dims, maps).unwrap()
}

pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n, -2, 2);
        if qgdf::linalg::rank(Field::Rational, &m).unwrap() == n {
            return m;
        }
    }
}

/// D4 with arrows 1 → 2, 2 → 3, 2 → 4.
pub fn d4() -> Quiver {
    Quiver::d4()
}

pub fn d4_i3_i4() -> Rep {
    let q = d4();
    thin_sum(
        &q,
        &[
            ("I3".to_string(), injective_support(&q, 2)),
            ("I4".to_string(), injective_support(&q, 3)),
        ],
    )
    .unwrap()
}

pub fn d4_all_injectives() -> Rep {
    let q = d4();
    let parts: Vec<(String, Vec<usize>)> =
        (0..4).map(|v| (format!("I{}", v + 1), injective_support(&q, v))).collect();
    thin_sum(&q, &parts).unwrap()
}

pub fn d4_all_projectives() -> Rep {
    let q = d4();
    let parts: Vec<(String, Vec<usize>)> =
        (0..4).map(|v| (format!("P{}", v + 1), projective_support(&q, v))).collect();
    thin_sum(&q, &parts).unwrap()
}

fn columns(rows: usize, cols: &[&[i64]]) -> Matrix {
    let c: Vec<Vec<BigRational>> = cols.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
    Matrix::from_columns(rows, &c)
}

pub fn d4_i2_i3_i4() -> Rep {
    let q = d4();
    let parts: Vec<(String, Vec<usize>)> =
        (1..4).map(|v| (format!("I{}", v + 1), injective_support(&q, v))).collect();
    thin_sum(&q, &parts).unwrap()
}

/// The indecomposable N_I of dimension (1,2,1,1) inside I3 ⊕ I4: the diagonal
/// line at vertex 1, everything elsewhere. `skip` is the number of summands
/// listed before I3 at vertex 1 (2 inside I1..I4, 1 inside I2..I4). Vertex 2
/// always carries I2, I3, I4.
pub fn d4_n_i(skip: usize) -> SubrepBasis {
    let mut v1 = vec![0; skip + 2];
    v1[skip] = 1;
    v1[skip + 1] = 1;
    SubrepBasis {
        vectors: vec![
            columns(skip + 2, &[&v1]),
            columns(3, &[&[0, 1, 0], &[0, 0, 1]]),
            columns(1, &[&[1]]),
            columns(1, &[&[1]]),
        ],
    }
}

/// L_I = I4 ⊕ (0110 inside I3), same `skip` convention as [`d4_n_i`].
pub fn d4_l_i(i: &Rep, skip: usize) -> SubrepBasis {
    SubrepBasis::coordinate(i, &[vec![skip + 1], vec![1, 2], vec![0], vec![0]])
}

/// Coordinates of L_P = P3² ⊕ P4² inside P = P1 ⊕ P2 ⊕ P3 ⊕ P4: (P1)_3, (P3)_3,
/// (P1)_4, (P2)_4. Basis order at vertex 3 is P1, P2, P3, at vertex 4 P1, P2, P4.
pub fn d4_l_p_coords() -> Vec<Vec<usize>> {
    vec![vec![], vec![], vec![0, 2], vec![0, 1]]
}

pub fn complement(dims: &DimVector, coords: &[Vec<usize>]) -> Vec<Vec<usize>> {
    coords
        .iter()
        .enumerate()
        .map(|(v, c)| (0..dims[v]).filter(|i| !c.contains(i)).collect())
        .collect()
}
