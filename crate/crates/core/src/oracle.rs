//! Brute-force counting of subrepresentations over a prime field F_q.
//!
//! Vertices are visited in topological order. At vertex t every incoming
//! arrow has already been fixed, so U_t must contain the span W of their
//! images; the candidates are W plus a subspace of a coordinate complement of
//! W, listed once each in reduced echelon form. Sinks constrain nothing after
//! them and are counted in closed form unless strata or tuples are wanted.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{inv_mod, is_prime, reduce_mod, Field};
use crate::qpoly::q_binomial_at;
use crate::quiver::DimVector;
use crate::rep::{Rep, Side};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest field size accepted.
pub const MAX_Q: u32 = 97;

trait Arith: Sync {
    type V: Clone + Send + Sync;
    fn q(&self) -> u64;
    fn zero(&self, n: usize) -> Self::V;
    fn get(&self, v: &Self::V, i: usize) -> u64;
    fn set(&self, v: &mut Self::V, i: usize, x: u64);
    /// y += a·x
    fn axpy(&self, y: &mut Self::V, a: u64, x: &Self::V);
    fn scale(&self, v: &mut Self::V, a: u64);
}

/// F_2 with vectors packed into one machine word.
struct F2;

impl Arith for F2 {
    type V = u64;
    fn q(&self) -> u64 {
        2
    }
    fn zero(&self, _n: usize) -> u64 {
        0
    }
    fn get(&self, v: &u64, i: usize) -> u64 {
        v >> i & 1
    }
    fn set(&self, v: &mut u64, i: usize, x: u64) {
        *v = (*v & !(1 << i)) | (x & 1) << i;
    }
    fn axpy(&self, y: &mut u64, a: u64, x: &u64) {
        if a & 1 == 1 {
            *y ^= x;
        }
    }
    fn scale(&self, v: &mut u64, a: u64) {
        if a & 1 == 0 {
            *v = 0;
        }
    }
}

/// F_p with one byte per coordinate.
struct Fp {
    p: u64,
}

impl Arith for Fp {
    type V = Vec<u8>;
    fn q(&self) -> u64 {
        self.p
    }
    fn zero(&self, n: usize) -> Vec<u8> {
        vec![0; n]
    }
    fn get(&self, v: &Vec<u8>, i: usize) -> u64 {
        v[i] as u64
    }
    fn set(&self, v: &mut Vec<u8>, i: usize, x: u64) {
        v[i] = x as u8;
    }
    fn axpy(&self, y: &mut Vec<u8>, a: u64, x: &Vec<u8>) {
        if a == 0 {
            return;
        }
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi = ((*yi as u64 + a * xi as u64) % self.p) as u8;
        }
    }
    fn scale(&self, v: &mut Vec<u8>, a: u64) {
        for x in v.iter_mut() {
            *x = (*x as u64 * a % self.p) as u8;
        }
    }
}

/// Reduced row echelon form of the span of `rows`; returns the nonzero rows
/// and their pivot columns.
fn rref<A: Arith>(a: &A, mut rows: Vec<A::V>, ncols: usize) -> (Vec<A::V>, Vec<usize>) {
    let q = a.q();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| a.get(&rows[k], c) != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(a.get(&rows[r], c), q);
        a.scale(&mut rows[r], inv);
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r {
                let x = a.get(row, c);
                if x != 0 {
                    a.axpy(row, q - x, &pivot_row);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Calls `f` with the echelon basis of every k-dimensional subspace of F_q^m.
fn for_each_subspace<A: Arith>(
    a: &A,
    m: usize,
    k: usize,
    f: &mut dyn FnMut(&[A::V], &[usize]),
) {
    if k > m {
        return;
    }
    let q = a.q();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..m)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut rows: Vec<A::V> = (0..k)
            .map(|r| {
                let mut v = a.zero(m);
                a.set(&mut v, pivots[r], 1);
                v
            })
            .collect();
        let mut digits = vec![0u64; free.len()];
        loop {
            f(&rows, &pivots);
            // odometer over the free entries
            let mut i = 0;
            while i < free.len() {
                let (r, c) = free[i];
                digits[i] += 1;
                if digits[i] < q {
                    a.set(&mut rows[r], c, digits[i]);
                    break;
                }
                digits[i] = 0;
                a.set(&mut rows[r], c, 0);
                i += 1;
            }
            if i == free.len() {
                break;
            }
        }
        // next k-subset of 0..m in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| pivots[i] < m - k + i) else {
            return;
        };
        pivots[i] += 1;
        for j in i + 1..k {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
}

/// A subspace in reduced row echelon form over F_q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EchelonSubspace {
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
}

fn check_q(q: u32) -> Result<()> {
    if !is_prime(q) || q > MAX_Q {
        return Err(Error::Config(format!(
            "field size must be a prime at most {}, got {}",
            MAX_Q, q
        )));
    }
    Ok(())
}

/// Every k-dimensional subspace of F_q^n, each exactly once.
pub fn enumerate_subspaces_fq(n: usize, k: usize, q: u32) -> Result<Vec<EchelonSubspace>> {
    check_q(q)?;
    if k > n {
        return Err(Error::Dimension(format!("no {}-dimensional subspaces of F^{}", k, n)));
    }
    let a = Fp { p: q as u64 };
    let mut out = Vec::new();
    for_each_subspace(&a, n, k, &mut |rows, pivots| {
        out.push(EchelonSubspace {
            rows: rows.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect(),
            pivots: pivots.to_vec(),
        });
    });
    Ok(out)
}

/// Options for [`count_subreps_fq_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub q: u32,
    pub budget: u64,
    pub per_stratum: bool,
}

impl OracleOptions {
    pub fn new(q: u32) -> Self {
        OracleOptions {
            q,
            budget: DEFAULT_BUDGET,
            per_stratum: false,
        }
    }
}

/// Total count, and counts per stratum f = dim(U ∩ I) when requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCount {
    pub total: BigInt,
    pub strata: Option<BTreeMap<DimVector, BigInt>>,
}

/// One subrepresentation over F_q: the echelon basis of U_v at each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FqSubrep {
    pub bases: Vec<Vec<Vec<u64>>>,
    pub stratum: Option<DimVector>,
}

/// Π_v #Gr(e_v, d_v)(F_q), the size of the unpruned search space.
pub fn search_space(m: &Rep, e: &DimVector, q: u32) -> Result<BigInt> {
    m.quiver().check_dims(e)?;
    let d = m.dims();
    if !e.le(d) {
        return Ok(BigInt::zero());
    }
    Ok(d.iter()
        .zip(e.iter())
        .map(|(&dv, &ev)| q_binomial_at(dv as i64, ev as i64, q as u64))
        .product())
}

pub fn count_subreps_fq(m: &Rep, e: &DimVector, q: u32) -> Result<BigInt> {
    Ok(count_subreps_fq_with(m, e, &OracleOptions::new(q))?.total)
}

pub fn count_subreps_fq_with(m: &Rep, e: &DimVector, opts: &OracleOptions) -> Result<OracleCount> {
    let mode = if opts.per_stratum { Mode::Strata } else { Mode::Count };
    let acc = run(m, e, opts.q, opts.budget, mode)?;
    Ok(OracleCount {
        total: BigInt::from(acc.total),
        strata: opts.per_stratum.then(|| {
            acc.strata
                .into_iter()
                .map(|(f, c)| (DimVector(f), BigInt::from(c)))
                .collect()
        }),
    })
}

/// Every subrepresentation of dimension vector e, tagged with its stratum
/// when M has P/I labelled summands.
pub fn list_subreps_fq(m: &Rep, e: &DimVector, q: u32, budget: u64) -> Result<Vec<FqSubrep>> {
    Ok(run(m, e, q, budget, Mode::List)?.list)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Count,
    Strata,
    List,
}

#[derive(Default)]
struct Acc {
    total: u128,
    strata: HashMap<Vec<usize>, u128>,
    list: Vec<FqSubrep>,
}

impl Acc {
    fn merge(mut self, other: Acc) -> Acc {
        self.total += other.total;
        for (k, v) in other.strata {
            *self.strata.entry(k).or_default() += v;
        }
        self.list.extend(other.list);
        self
    }
}

struct Ctx<'a, A: Arith> {
    a: &'a A,
    dims: &'a [usize],
    e: &'a [usize],
    order: Vec<usize>,
    sinks: Vec<usize>,
    /// (source, arrow) for each target
    incoming: Vec<Vec<(usize, usize)>>,
    /// columns of each arrow's matrix
    columns: Vec<Vec<A::V>>,
    /// projective coordinates per vertex, when strata are available
    p_coords: Option<Vec<Vec<bool>>>,
    mode: Mode,
}

fn run(m: &Rep, e: &DimVector, q: u32, budget: u64, mode: Mode) -> Result<Acc> {
    check_q(q)?;
    let m = match m.field() {
        Field::Rational => m.over(Field::Prime(q))?,
        Field::Prime(p) if p == q => m.clone(),
        Field::Prime(p) => {
            return Err(Error::Config(format!(
                "representation is over F_{}, asked to count over F_{}",
                p, q
            )))
        }
    };
    let needed = search_space(&m, e, q)?;
    if needed > BigInt::from(budget) {
        return Err(Error::Budget {
            needed: needed.to_string(),
            budget,
        });
    }
    if !e.le(m.dims()) {
        return Ok(Acc::default());
    }
    let p_coords = side_coords(&m);
    if mode == Mode::Strata && p_coords.is_none() {
        return Err(Error::Input(
            "per-stratum counts need every summand labelled P… or I…".into(),
        ));
    }
    if q == 2 && m.dims().iter().all(|&d| d <= 64) {
        run_with(&F2, &m, e, p_coords, mode)
    } else {
        run_with(&Fp { p: q as u64 }, &m, e, p_coords, mode)
    }
}

fn side_coords(m: &Rep) -> Option<Vec<Vec<bool>>> {
    let sums = m.summands()?;
    let mut p = m.dims().iter().map(|&d| vec![false; d]).collect::<Vec<_>>();
    for s in sums {
        match s.side()? {
            Side::Projective => {
                for (v, idx) in s.basis.iter().enumerate() {
                    for &i in idx {
                        p[v][i] = true;
                    }
                }
            }
            Side::Injective => {}
        }
    }
    Some(p)
}

fn run_with<A: Arith>(
    a: &A,
    m: &Rep,
    e: &DimVector,
    p_coords: Option<Vec<Vec<bool>>>,
    mode: Mode,
) -> Result<Acc> {
    let quiver = m.quiver();
    let n = quiver.vertex_count();
    let p = a.q() as u32;
    let mut incoming = vec![Vec::new(); n];
    let mut has_out = vec![false; n];
    for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
        incoming[t].push((s, k));
        has_out[s] = true;
    }
    let mut columns = Vec::with_capacity(quiver.arrows().len());
    for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
        let mat = m.map(k);
        let mut cols = Vec::with_capacity(m.dims()[s]);
        for c in 0..m.dims()[s] {
            let mut v = a.zero(m.dims()[t]);
            for r in 0..m.dims()[t] {
                a.set(&mut v, r, reduce_mod(mat.get(r, c), p)?);
            }
            cols.push(v);
        }
        columns.push(cols);
    }
    let topo = quiver.topological_order();
    let closed_form_sinks = mode == Mode::Count;
    let (order, sinks): (Vec<usize>, Vec<usize>) = if closed_form_sinks {
        topo.iter().partition(|&&v| has_out[v])
    } else {
        (topo.to_vec(), Vec::new())
    };
    let ctx = Ctx {
        a,
        dims: &m.dims().0,
        e: &e.0,
        order,
        sinks,
        incoming,
        columns,
        p_coords,
        mode,
    };
    let mut u: Vec<Vec<A::V>> = vec![Vec::new(); n];
    if ctx.order.is_empty() {
        let mut acc = Acc::default();
        leaf(&ctx, &u, &mut acc);
        return Ok(acc);
    }
    // split the work over the choices at the first vertex, a source
    let first = ctx.order[0];
    let mut starts: Vec<Vec<A::V>> = Vec::new();
    for_each_subspace(a, ctx.dims[first], ctx.e[first], &mut |rows, _| starts.push(rows.to_vec()));
    let parts: Vec<Acc> = starts
        .into_par_iter()
        .map(|rows| {
            let mut u = vec![Vec::new(); n];
            u[first] = rows;
            let mut acc = Acc::default();
            descend(&ctx, 1, &mut u, &mut acc);
            acc
        })
        .collect();
    u.clear();
    Ok(parts.into_iter().fold(Acc::default(), Acc::merge))
}

/// Echelon basis of the span of all images arriving at t.
fn incoming_span<A: Arith>(ctx: &Ctx<A>, t: usize, u: &[Vec<A::V>]) -> (Vec<A::V>, Vec<usize>) {
    let a = ctx.a;
    let mut images = Vec::new();
    for &(s, k) in &ctx.incoming[t] {
        for x in &u[s] {
            let mut y = a.zero(ctx.dims[t]);
            for (j, col) in ctx.columns[k].iter().enumerate() {
                a.axpy(&mut y, a.get(x, j), col);
            }
            images.push(y);
        }
    }
    rref(a, images, ctx.dims[t])
}

fn descend<A: Arith>(ctx: &Ctx<A>, level: usize, u: &mut Vec<Vec<A::V>>, acc: &mut Acc) {
    if level == ctx.order.len() {
        leaf(ctx, u, acc);
        return;
    }
    let a = ctx.a;
    let t = ctx.order[level];
    let (w, pivots) = incoming_span(ctx, t, u);
    if w.len() > ctx.e[t] {
        return;
    }
    let complement: Vec<usize> = (0..ctx.dims[t]).filter(|c| !pivots.contains(c)).collect();
    let extra = ctx.e[t] - w.len();
    for_each_subspace(a, complement.len(), extra, &mut |rows, _| {
        let mut basis = w.clone();
        for r in rows {
            let mut v = a.zero(ctx.dims[t]);
            for (i, &c) in complement.iter().enumerate() {
                a.set(&mut v, c, a.get(r, i));
            }
            basis.push(v);
        }
        u[t] = basis;
        descend(ctx, level + 1, u, acc);
    });
    u[t].clear();
}

fn leaf<A: Arith>(ctx: &Ctx<A>, u: &[Vec<A::V>], acc: &mut Acc) {
    let a = ctx.a;
    match ctx.mode {
        Mode::Count => {
            let mut count: u128 = 1;
            for &t in &ctx.sinks {
                let (w, _) = incoming_span(ctx, t, u);
                if w.len() > ctx.e[t] {
                    return;
                }
                let free = (ctx.dims[t] - w.len()) as i64;
                let c = q_binomial_at(free, (ctx.e[t] - w.len()) as i64, a.q())
                    .to_u128()
                    .expect("count fits the budget");
                count *= c;
            }
            acc.total += count;
        }
        Mode::Strata => {
            acc.total += 1;
            *acc.strata.entry(stratum(ctx, u)).or_default() += 1;
        }
        Mode::List => {
            acc.total += 1;
            let bases = u
                .iter()
                .enumerate()
                .map(|(v, b)| {
                    let (rows, _) = rref(a, b.clone(), ctx.dims[v]);
                    rows.iter()
                        .map(|r| (0..ctx.dims[v]).map(|i| a.get(r, i)).collect())
                        .collect()
                })
                .collect();
            let stratum = ctx.p_coords.as_ref().map(|_| DimVector(stratum(ctx, u)));
            acc.list.push(FqSubrep { bases, stratum });
        }
    }
}

/// f_v = dim U_v − rank of the projection of U_v onto the P coordinates.
fn stratum<A: Arith>(ctx: &Ctx<A>, u: &[Vec<A::V>]) -> Vec<usize> {
    let a = ctx.a;
    let p_coords = ctx.p_coords.as_ref().expect("strata need sides");
    u.iter()
        .enumerate()
        .map(|(v, basis)| {
            let projected: Vec<A::V> = basis
                .iter()
                .map(|x| {
                    let mut y = x.clone();
                    for (i, &is_p) in p_coords[v].iter().enumerate() {
                        if !is_p {
                            a.set(&mut y, i, 0);
                        }
                    }
                    y
                })
                .collect();
            basis.len() - rref(a, projected, ctx.dims[v]).0.len()
        })
        .collect()
}
