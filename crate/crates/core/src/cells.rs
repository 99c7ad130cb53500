//! Torus fixed points of Gr_e(M) for M a direct sum of thin modules over a
//! tree quiver, their attracting cells, and the λ → 0 limit of a point.
//!
//! A fixed point is a coordinate subrepresentation: in every summand a set of
//! support vertices closed under the arrows of the coefficient quiver. The
//! attracting cell of L is an affine space of dimension dim Hom_Q(L, M/L)^+,
//! the part of degree > 0 for the grading given by a [`DegreeAssignment`].

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Field, Matrix};
use crate::qpoly::IntPoly;
use crate::quiver::{DimVector, Quiver};
use crate::rep::{self, check_subrep, hom_ext_dims, HomExt, Rep, Side, SubrepBasis};

/// Integer weight of each summand of M, indexed like `M.summands()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DegreeAssignment {
    degrees: Vec<i64>,
}

impl DegreeAssignment {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input(format!(
                "summand degrees must be pairwise distinct: {:?}",
                degrees
            )));
        }
        Ok(DegreeAssignment { degrees })
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn get(&self, summand: usize) -> i64 {
        self.degrees[summand]
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.degrees.iter().copied()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.degrees
    }

    /// Label → degree, in summand order.
    pub fn labelled(&self, m: &Rep) -> Vec<(String, i64)> {
        m.summands()
            .unwrap_or(&[])
            .iter()
            .zip(&self.degrees)
            .map(|(s, &d)| (s.label.clone(), d))
            .collect()
    }

    /// Pairs (L, L') of non-isomorphic summands with Hom(L, L') ≠ 0 but
    /// d(L) ≥ d(L').
    pub fn hom_rule_violations(&self, m: &Rep) -> Result<Vec<(String, String)>> {
        let shapes = ThinShapes::of(m)?;
        self.check_len(shapes.summands.len())?;
        let cache = HomCache::new(m.quiver().clone());
        let mut bad = Vec::new();
        for (i, si) in shapes.summands.iter().enumerate() {
            for (j, sj) in shapes.summands.iter().enumerate() {
                if i == j || si.whole == sj.whole {
                    continue;
                }
                if cache.get(si.whole, sj.whole)?.hom > 0 && self.degrees[i] >= self.degrees[j] {
                    bad.push((shapes.labels[i].clone(), shapes.labels[j].clone()));
                }
            }
        }
        Ok(bad)
    }

    fn check_len(&self, summands: usize) -> Result<()> {
        if self.degrees.len() != summands {
            return Err(Error::Dimension(format!(
                "{} degrees for {} summands",
                self.degrees.len(),
                summands
            )));
        }
        Ok(())
    }
}

/// A thin piece: a vertex set and the arrows acting by a nonzero scalar
/// between two of its vertices. Over a tree this determines the module up to
/// isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    vertices: u64,
    arrows: u64,
}

impl Shape {
    fn restrict(self, vertices: u64, quiver: &Quiver) -> Shape {
        let mut arrows = 0u64;
        for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
            if self.arrows >> k & 1 == 1 && vertices >> s & 1 == 1 && vertices >> t & 1 == 1 {
                arrows |= 1 << k;
            }
        }
        Shape { vertices, arrows }
    }

    /// Connected components of the underlying graph.
    fn components(self, quiver: &Quiver) -> Vec<Shape> {
        let mut left = self.vertices;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let mut grown = comp;
                for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
                    if self.arrows >> k & 1 == 1 {
                        if comp >> s & 1 == 1 {
                            grown |= 1 << t;
                        }
                        if comp >> t & 1 == 1 {
                            grown |= 1 << s;
                        }
                    }
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            out.push(self.restrict(comp, quiver));
        }
        out
    }

    fn is_successor_closed(self, sub: u64, quiver: &Quiver) -> bool {
        quiver.arrows().iter().enumerate().all(|(k, &(s, t))| {
            self.arrows >> k & 1 == 0 || sub >> s & 1 == 0 || sub >> t & 1 == 1
        })
    }

    fn rep(self, quiver: &Quiver) -> Result<Rep> {
        let n = quiver.vertex_count();
        let dims = DimVector((0..n).map(|v| (self.vertices >> v & 1) as usize).collect());
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                if self.arrows >> k & 1 == 1 {
                    Matrix::from_i64(1, 1, &[1])
                } else {
                    Matrix::zeros(dims[t], dims[s])
                }
            })
            .collect();
        Rep::new(quiver.clone(), Field::Rational, dims, maps)
    }
}

/// Hom/Ext dimensions between thin pieces over one quiver, memoized by shape.
#[derive(Debug)]
pub struct HomCache {
    quiver: Quiver,
    table: RwLock<HashMap<(Shape, Shape), HomExt>>,
}

impl HomCache {
    pub fn new(quiver: Quiver) -> Self {
        HomCache {
            quiver,
            table: RwLock::new(HashMap::new()),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    fn get(&self, x: Shape, y: Shape) -> Result<HomExt> {
        if let Some(v) = self.table.read().unwrap().get(&(x, y)) {
            return Ok(*v);
        }
        let v = hom_ext_dims(&x.rep(&self.quiver)?, &y.rep(&self.quiver)?)?;
        self.table.write().unwrap().insert((x, y), v);
        Ok(v)
    }
}

#[derive(Clone, Debug)]
struct SummandShape {
    whole: Shape,
    /// basis index at each support vertex
    coord: Vec<Option<usize>>,
    side: Option<Side>,
}

/// Summand data of M checked for thinness over a tree.
#[derive(Clone, Debug)]
struct ThinShapes {
    summands: Vec<SummandShape>,
    labels: Vec<String>,
}

impl ThinShapes {
    fn of(m: &Rep) -> Result<Self> {
        let q = m.quiver();
        if !q.is_tree() {
            return Err(Error::Unsupported("fixed points need a tree quiver".into()));
        }
        if q.vertex_count() > 64 || q.arrows().len() > 64 {
            return Err(Error::Unsupported("at most 64 vertices and arrows".into()));
        }
        let sums = m
            .summands()
            .ok_or_else(|| Error::Unsupported("representation has no summand decomposition".into()))?;
        let mut summands = Vec::with_capacity(sums.len());
        for s in sums {
            if !s.is_thin() {
                return Err(Error::Unsupported(format!("summand {} is not thin", s.label)));
            }
            let coord: Vec<Option<usize>> = s.basis.iter().map(|b| b.first().copied()).collect();
            let mut vertices = 0u64;
            for (v, c) in coord.iter().enumerate() {
                if c.is_some() {
                    vertices |= 1 << v;
                }
            }
            let mut arrows = 0u64;
            for (k, &(a, b)) in q.arrows().iter().enumerate() {
                if let (Some(i), Some(j)) = (coord[a], coord[b]) {
                    if !num_traits::Zero::is_zero(m.map(k).get(j, i)) {
                        arrows |= 1 << k;
                    }
                }
            }
            summands.push(SummandShape {
                whole: Shape { vertices, arrows },
                coord,
                side: s.side(),
            });
        }
        Ok(ThinShapes {
            summands,
            labels: sums.iter().map(|s| s.label.clone()).collect(),
        })
    }
}

/// A coordinate subrepresentation: for each summand of M, the set of support
/// vertices (0-indexed) it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPoint {
    pub parts: Vec<Vec<usize>>,
}

impl FixedPoint {
    fn masks(&self) -> Vec<u64> {
        self.parts
            .iter()
            .map(|p| p.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect()
    }

    fn from_masks(masks: &[u64]) -> Self {
        FixedPoint {
            parts: masks
                .iter()
                .map(|&m| (0..64).filter(|v| m >> v & 1 == 1).collect())
                .collect(),
        }
    }

    pub fn dim_vector(&self, n: usize) -> DimVector {
        let mut d = vec![0; n];
        for p in &self.parts {
            for &v in p {
                d[v] += 1;
            }
        }
        DimVector(d)
    }

    /// Basis indices of M at each vertex that span the subrepresentation.
    pub fn coords(&self, m: &Rep) -> Result<Vec<Vec<usize>>> {
        let sums = m
            .summands()
            .ok_or_else(|| Error::Unsupported("representation has no summand decomposition".into()))?;
        let mut out = vec![Vec::new(); m.quiver().vertex_count()];
        for (s, part) in sums.iter().zip(&self.parts) {
            for &v in part {
                out[v].push(s.basis[v][0]);
            }
        }
        for c in &mut out {
            c.sort_unstable();
        }
        Ok(out)
    }

    pub fn subrep_basis(&self, m: &Rep) -> Result<SubrepBasis> {
        Ok(SubrepBasis::coordinate(m, &self.coords(m)?))
    }

    /// Label → 1-indexed vertices, skipping summands that meet L trivially.
    pub fn labelled(&self, m: &Rep) -> BTreeMap<String, Vec<usize>> {
        m.summands()
            .unwrap_or(&[])
            .iter()
            .zip(&self.parts)
            .filter(|(_, p)| !p.is_empty())
            .map(|(s, p)| (s.label.clone(), p.iter().map(|v| v + 1).collect()))
            .collect()
    }
}

/// Direction of the one-parameter flow whose limits define the cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flow {
    /// λ → 0: cells are Hom(L, M/L) in positive degree, limits keep the
    /// lowest-degree terms.
    #[default]
    Zero,
    /// λ → ∞: negative degree and highest-degree terms. Equivalent to
    /// negating every degree.
    Infinity,
}

impl Flow {
    fn attracts(self, from: i64, to: i64) -> bool {
        match self {
            Flow::Zero => to > from,
            Flow::Infinity => to < from,
        }
    }
}

/// Data attached to one fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellInfo {
    pub fixed_point: FixedPoint,
    pub cell_dim: usize,
    pub stratum: DimVector,
    pub tangent_dim: usize,
    pub singular: bool,
    /// Ext¹(L_I, P/L_P) ≠ 0, when M is a P ⊕ I with e = dim P.
    pub ext_singular: Option<bool>,
}

/// Fixed points, cells and limits for one M and one grading.
#[derive(Debug, Clone)]
pub struct Cells<'a> {
    m: &'a Rep,
    degrees: DegreeAssignment,
    flow: Flow,
    shapes: ThinShapes,
    cache: Arc<HomCache>,
}

impl<'a> Cells<'a> {
    pub fn new(m: &'a Rep, degrees: DegreeAssignment) -> Result<Self> {
        let cache = Arc::new(HomCache::new(m.quiver().clone()));
        Cells::with_cache(m, degrees, cache)
    }

    /// Shares Hom computations across representations over the same quiver.
    pub fn with_cache(m: &'a Rep, degrees: DegreeAssignment, cache: Arc<HomCache>) -> Result<Self> {
        if cache.quiver() != m.quiver() {
            return Err(Error::Config("Hom cache belongs to another quiver".into()));
        }
        let shapes = ThinShapes::of(m)?;
        degrees.check_len(shapes.summands.len())?;
        Ok(Cells {
            m,
            degrees,
            flow: Flow::Zero,
            shapes,
            cache,
        })
    }

    pub fn with_flow(mut self, flow: Flow) -> Self {
        self.flow = flow;
        self
    }

    pub fn flow(&self) -> Flow {
        self.flow
    }

    pub fn rep(&self) -> &Rep {
        self.m
    }

    pub fn degrees(&self) -> &DegreeAssignment {
        &self.degrees
    }

    /// All fixed points of dimension vector e, lexicographic in the
    /// per-summand vertex lists.
    pub fn fixed_points(&self, e: &DimVector) -> Result<Vec<FixedPoint>> {
        let q = self.m.quiver();
        q.check_dims(e)?;
        let n = q.vertex_count();
        let options: Vec<Vec<(Vec<usize>, u64)>> = self
            .shapes
            .summands
            .iter()
            .map(|s| {
                let support: Vec<usize> = (0..n).filter(|v| s.whole.vertices >> v & 1 == 1).collect();
                let mut subs: Vec<(Vec<usize>, u64)> = (0u64..1 << support.len())
                    .filter_map(|bits| {
                        let mask = support
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| bits >> i & 1 == 1)
                            .fold(0u64, |acc, (_, &v)| acc | 1 << v);
                        s.whole
                            .is_successor_closed(mask, q)
                            .then(|| ((0..n).filter(|v| mask >> v & 1 == 1).collect(), mask))
                    })
                    .collect();
                subs.sort();
                subs
            })
            .collect();
        // remaining[i][v]: largest contribution summands i.. can make at v
        let k = options.len();
        let mut remaining = vec![vec![0usize; n]; k + 1];
        for i in (0..k).rev() {
            for v in 0..n {
                remaining[i][v] = remaining[i + 1][v]
                    + (self.shapes.summands[i].whole.vertices >> v & 1) as usize;
            }
        }
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        let mut have = vec![0usize; n];
        fn rec(
            i: usize,
            options: &[Vec<(Vec<usize>, u64)>],
            remaining: &[Vec<usize>],
            e: &DimVector,
            have: &mut Vec<usize>,
            chosen: &mut Vec<u64>,
            out: &mut Vec<FixedPoint>,
        ) {
            let n = have.len();
            if (0..n).any(|v| have[v] > e[v] || have[v] + remaining[i][v] < e[v]) {
                return;
            }
            if i == options.len() {
                out.push(FixedPoint::from_masks(chosen));
                return;
            }
            for (verts, mask) in &options[i] {
                for &v in verts {
                    have[v] += 1;
                }
                chosen.push(*mask);
                rec(i + 1, options, remaining, e, have, chosen, out);
                chosen.pop();
                for &v in verts {
                    have[v] -= 1;
                }
            }
        }
        rec(0, &options, &remaining, e, &mut have, &mut chosen, &mut out);
        Ok(out)
    }

    fn check_fixed_point(&self, l: &FixedPoint) -> Result<Vec<u64>> {
        if l.parts.len() != self.shapes.summands.len() {
            return Err(Error::Dimension(format!(
                "fixed point has {} parts for {} summands",
                l.parts.len(),
                self.shapes.summands.len()
            )));
        }
        let masks = l.masks();
        for ((mask, s), label) in masks.iter().zip(&self.shapes.summands).zip(&self.shapes.labels) {
            if mask & !s.whole.vertices != 0 || !s.whole.is_successor_closed(*mask, self.m.quiver()) {
                return Err(Error::Input(format!(
                    "part of summand {} is not an arrow-closed subset of its support",
                    label
                )));
            }
        }
        Ok(masks)
    }

    /// Connected pieces of L and of M/L with the summand they come from.
    fn pieces(&self, masks: &[u64]) -> (Vec<(usize, Shape)>, Vec<(usize, Shape)>) {
        let q = self.m.quiver();
        let mut sub = Vec::new();
        let mut quo = Vec::new();
        for (i, (s, &mask)) in self.shapes.summands.iter().zip(masks).enumerate() {
            for p in s.whole.restrict(mask, q).components(q) {
                sub.push((i, p));
            }
            for p in s.whole.restrict(s.whole.vertices & !mask, q).components(q) {
                quo.push((i, p));
            }
        }
        (sub, quo)
    }

    /// dim Hom_Q(L, M/L)^+ (or ^− for [`Flow::Infinity`]).
    pub fn cell_dim(&self, l: &FixedPoint) -> Result<usize> {
        let masks = self.check_fixed_point(l)?;
        self.cell_dim_masks(&masks)
    }

    fn cell_dim_masks(&self, masks: &[u64]) -> Result<usize> {
        let (sub, quo) = self.pieces(masks);
        let mut total = 0;
        for &(i, x) in &sub {
            for &(j, y) in &quo {
                if self.flow.attracts(self.degrees.get(i), self.degrees.get(j)) {
                    total += self.cache.get(x, y)?.hom;
                }
            }
        }
        Ok(total)
    }

    /// Σ_L q^{dim C(L)} over the fixed points of dimension vector e.
    pub fn cell_polynomial(&self, e: &DimVector) -> Result<IntPoly> {
        let points = self.fixed_points(e)?;
        let dims = points
            .par_iter()
            .map(|l| self.cell_dim_masks(&l.masks()))
            .collect::<Result<Vec<usize>>>()?;
        let top = dims.iter().copied().max().unwrap_or(0);
        let mut counts = vec![BigInt::from(0); top + 1];
        for d in dims {
            counts[d] += 1;
        }
        Ok(IntPoly::from_coeffs(counts))
    }

    /// Stratum f: the dimension vector of L inside the injective summands.
    pub fn stratum(&self, l: &FixedPoint) -> DimVector {
        let n = self.m.quiver().vertex_count();
        let mut f = vec![0; n];
        for (s, part) in self.shapes.summands.iter().zip(&l.parts) {
            if s.side == Some(Side::Injective) {
                for &v in part {
                    f[v] += 1;
                }
            }
        }
        DimVector(f)
    }

    /// Cell dimension, tangent dimension and smoothness of a fixed point.
    /// A point is singular when its tangent space exceeds ⟨e, dim M − e⟩.
    pub fn classify(&self, l: &FixedPoint) -> Result<CellInfo> {
        let masks = self.check_fixed_point(l)?;
        let q = self.m.quiver();
        let e = l.dim_vector(q.vertex_count());
        let (sub, quo) = self.pieces(&masks);
        let mut cell_dim = 0;
        let mut tangent_dim = 0;
        let mut ext_iq = 0;
        for &(i, x) in &sub {
            for &(j, y) in &quo {
                let he = self.cache.get(x, y)?;
                tangent_dim += he.hom;
                if self.flow.attracts(self.degrees.get(i), self.degrees.get(j)) {
                    cell_dim += he.hom;
                }
                if self.shapes.summands[i].side == Some(Side::Injective)
                    && self.shapes.summands[j].side == Some(Side::Projective)
                {
                    ext_iq += he.ext;
                }
            }
        }
        let dim = q.generic_grass_dim(&e, self.m.dims())?;
        let singular = tangent_dim as i64 > dim;
        let ext_singular = self.is_p_plus_i(&e).then_some(ext_iq != 0);
        if ext_singular.is_some_and(|s| s != singular) {
            return Err(Error::Invariant(format!(
                "tangent test and Ext¹(L_I, P/L_P) disagree on smoothness of {:?}",
                l.labelled(self.m)
            )));
        }
        Ok(CellInfo {
            fixed_point: l.clone(),
            cell_dim,
            stratum: self.stratum(l),
            tangent_dim,
            singular,
            ext_singular,
        })
    }

    /// Classifies every fixed point of dimension vector e, in enumeration order.
    pub fn classify_all(&self, e: &DimVector) -> Result<Vec<CellInfo>> {
        self.fixed_points(e)?
            .par_iter()
            .map(|l| self.classify(l))
            .collect()
    }

    fn is_p_plus_i(&self, e: &DimVector) -> bool {
        let n = self.m.quiver().vertex_count();
        let mut dim_p = vec![0; n];
        for s in &self.shapes.summands {
            match s.side {
                Some(Side::Projective) => {
                    for (v, c) in s.coord.iter().enumerate() {
                        dim_p[v] += c.is_some() as usize;
                    }
                }
                Some(Side::Injective) => {}
                None => return false,
            }
        }
        dim_p == e.0
    }

    /// The λ → 0 limit of U under λ·w = λ^{d(w)} w: at every vertex, row-reduce
    /// a basis of U with coordinates ordered by increasing degree and keep the
    /// leading coordinates. Decreasing degree for [`Flow::Infinity`].
    pub fn attracting_fixed_point(&self, u: &SubrepBasis) -> Result<FixedPoint> {
        check_subrep(self.m, u)?;
        let n = self.m.quiver().vertex_count();
        let field = self.m.field();
        let mut masks = vec![0u64; self.shapes.summands.len()];
        for v in 0..n {
            // (degree, summand) of every basis vector at v
            let mut owners: Vec<(i64, usize, usize)> = self
                .shapes
                .summands
                .iter()
                .enumerate()
                .filter_map(|(i, s)| s.coord[v].map(|c| (self.degrees.get(i), i, c)))
                .collect();
            owners.sort_unstable();
            if self.flow == Flow::Infinity {
                owners.reverse();
            }
            let order: Vec<usize> = owners.iter().map(|o| o.2).collect();
            let rows: Vec<usize> = (0..u.vectors[v].cols()).collect();
            let reordered = u.vectors[v].transpose().select(&rows, &order);
            let (_, pivots) = linalg::rref(field, &reordered)?;
            for p in pivots {
                masks[owners[p].1] |= 1 << v;
            }
        }
        let l = FixedPoint::from_masks(&masks);
        self.check_fixed_point(&l).map_err(|_| {
            Error::Invariant("limit of a subrepresentation is not arrow-closed".into())
        })?;
        Ok(l)
    }
}

/// Degrees satisfying d(L) < d(L') whenever Hom(L, L') ≠ 0 for non-isomorphic
/// L, L': a topological order of the Hom digraph on isomorphism classes.
/// Copies of one class get consecutive degrees, projective labels first.
pub fn generic_degrees(m: &Rep) -> Result<DegreeAssignment> {
    let shapes = ThinShapes::of(m)?;
    let cache = HomCache::new(m.quiver().clone());
    let mut classes: Vec<Shape> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (i, s) in shapes.summands.iter().enumerate() {
        match classes.iter().position(|&c| c == s.whole) {
            Some(c) => members[c].push(i),
            None => {
                classes.push(s.whole);
                members.push(vec![i]);
            }
        }
    }
    let k = classes.len();
    let mut indegree = vec![0usize; k];
    let mut edges = vec![Vec::new(); k];
    for a in 0..k {
        for b in 0..k {
            if a != b && cache.get(classes[a], classes[b])?.hom > 0 {
                edges[a].push(b);
                indegree[b] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(k);
    let mut done = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .find(|&c| !done[c] && indegree[c] == 0)
            .ok_or_else(|| Error::Unsupported("Hom digraph of the summands has a cycle".into()))?;
        done[next] = true;
        order.push(next);
        for &b in &edges[next] {
            indegree[b] -= 1;
        }
    }
    let side_rank = |s: Option<Side>| match s {
        Some(Side::Projective) => 0,
        None => 1,
        Some(Side::Injective) => 2,
    };
    let mut degrees = vec![0i64; shapes.summands.len()];
    let mut next = 0i64;
    for c in order {
        let mut group = members[c].clone();
        group.sort_by_key(|&i| (side_rank(shapes.summands[i].side), i));
        for i in group {
            degrees[i] = next;
            next += 1;
        }
    }
    DegreeAssignment::new(degrees)
}

/// Fixed points of Gr_e(M) in enumeration order.
pub fn enumerate_fixed_points(m: &Rep, e: &DimVector) -> Result<Vec<FixedPoint>> {
    let k = m.summands().map_or(0, <[_]>::len);
    Cells::new(m, DegreeAssignment::new((0..k as i64).collect())?)?.fixed_points(e)
}

pub fn cell_dim(m: &Rep, degrees: &DegreeAssignment, l: &FixedPoint) -> Result<usize> {
    Cells::new(m, degrees.clone())?.cell_dim(l)
}

pub fn cell_polynomial(m: &Rep, degrees: &DegreeAssignment, e: &DimVector) -> Result<IntPoly> {
    Cells::new(m, degrees.clone())?.cell_polynomial(e)
}

pub fn attracting_fixed_point(
    m: &Rep,
    degrees: &DegreeAssignment,
    u: &SubrepBasis,
) -> Result<FixedPoint> {
    Cells::new(m, degrees.clone())?.attracting_fixed_point(u)
}

pub fn classify_fixed_point(
    m: &Rep,
    degrees: &DegreeAssignment,
    l: &FixedPoint,
) -> Result<CellInfo> {
    Cells::new(m, degrees.clone())?.classify(l)
}

/// Tangent dimension at an arbitrary point, for comparison with
/// [`CellInfo::tangent_dim`].
pub fn tangent_dim_at(m: &Rep, u: &SubrepBasis) -> Result<usize> {
    rep::tangent_dim(m, u)
}
