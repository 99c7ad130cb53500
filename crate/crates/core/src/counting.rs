//! Normalized median Genocchi numbers h_n computed by independent routes,
//! Motzkin paths, and the G-orbit parametrization of Gr_{dim P}(P ⊕ I).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::DimVector;
use crate::typea::{Interval, PIConfig};

/// h_n as the number of chains (S_1, …, S_{n−1}) with S_i ⊂ {1..n},
/// #S_i = i and S_i ⊂ S_{i+1} ∪ {i+1}.
pub fn genocchi_sets(n: usize) -> BigInt {
    assert!(n >= 1, "h_n needs n ≥ 1");
    assert!(n < 64, "subset masks are 64-bit");
    if n == 1 {
        return BigInt::one();
    }
    let subsets_of = |k: u32| -> Vec<u64> {
        (0u64..1 << n).filter(|m| m.count_ones() == k).collect()
    };
    let mut ways: HashMap<u64, BigInt> = subsets_of(1).into_iter().map(|m| (m, BigInt::one())).collect();
    for i in 1..n - 1 {
        // S_i ⊂ S_{i+1} ∪ {i+1}, element i+1 is bit i
        let extra = 1u64 << i;
        let mut next: HashMap<u64, BigInt> = HashMap::new();
        for t in subsets_of(i as u32 + 1) {
            let cover = t | extra;
            let total: BigInt = ways
                .iter()
                .filter(|(s, _)| *s & !cover == 0)
                .map(|(_, w)| w.clone())
                .sum();
            if !total.is_zero() {
                next.insert(t, total);
            }
        }
        ways = next;
    }
    ways.into_values().sum()
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// h_{n+1} = Σ_{f ≥ 0} Π_k C(1 + f_{k−1}, f_k) · C(1 + f_{k+1}, f_k),
/// f_0 = f_{n+1} = 0.
pub fn genocchi_formula(n_plus_1: usize) -> BigInt {
    assert!(n_plus_1 >= 1, "h_n needs n ≥ 1");
    let n = n_plus_1 - 1;
    fn rec(k: usize, n: usize, f: &mut Vec<i64>, out: &mut BigInt) {
        if k > n {
            let mut term = BigInt::one();
            for j in 1..=n {
                term *= binomial(1 + f[j - 1], f[j]) * binomial(1 + f[j + 1], f[j]);
                if term.is_zero() {
                    return;
                }
            }
            assert!(
                f.windows(2).all(|w| (w[0] - w[1]).abs() <= 1),
                "nonzero term off Motzkin support: {:?}",
                f
            );
            *out += term;
            return;
        }
        // C(1 + f_{k−1}, f_k) vanishes beyond 1 + f_{k−1}; scan one step past it
        // so the support assertion sees every candidate.
        for x in 0..=(2 + f[k - 1]) {
            f[k] = x;
            rec(k + 1, n, f, out);
        }
        f[k] = 0;
    }
    let mut f = vec![0i64; n + 2];
    let mut out = BigInt::zero();
    rec(1, n, &mut f, &mut out);
    out
}

/// Heights f_0, …, f_L of a lattice path with steps in {−1, 0, +1} that
/// stays non-negative and starts and ends at 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MotzkinPath {
    pub heights: Vec<usize>,
}

impl MotzkinPath {
    pub fn len(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of rises plus number of falls.
    pub fn non_flat_steps(&self) -> usize {
        self.heights.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn is_valid(&self) -> bool {
        self.heights.first() == Some(&0)
            && self.heights.last() == Some(&0)
            && self
                .heights
                .windows(2)
                .all(|w| w[0].abs_diff(w[1]) <= 1)
    }
}

/// All Motzkin paths with `length` steps, in lexicographic order.
pub fn motzkin_paths(length: usize) -> Vec<MotzkinPath> {
    fn rec(h: &mut Vec<usize>, length: usize, out: &mut Vec<MotzkinPath>) {
        let pos = h.len() - 1;
        let cur = h[pos];
        if pos == length {
            if cur == 0 {
                out.push(MotzkinPath { heights: h.clone() });
            }
            return;
        }
        let remaining = length - pos - 1;
        let lo = cur.saturating_sub(1);
        for next in lo..=cur + 1 {
            if next <= remaining {
                h.push(next);
                rec(h, length, out);
                h.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], length, &mut out);
    out
}

/// h_{n+1} = Σ_{f ∈ M_{n+1}} Π_{k=1..n} (1 + f_k)² / 2^{l(f)}, summed exactly.
pub fn genocchi_motzkin(n_plus_1: usize) -> Result<BigInt> {
    assert!(n_plus_1 >= 1, "h_n needs n ≥ 1");
    let mut total = BigRational::zero();
    for path in motzkin_paths(n_plus_1) {
        let num: BigInt = path.heights[1..n_plus_1]
            .iter()
            .map(|&f| BigInt::from((1 + f) * (1 + f)))
            .product();
        let den = BigInt::one() << path.non_flat_steps();
        total += BigRational::new(num, den);
    }
    if !total.is_integer() {
        return Err(Error::Invariant(format!(
            "Motzkin sum for h_{} is not an integer: {}",
            n_plus_1, total
        )));
    }
    Ok(total.to_integer())
}

/// The five independent routes to h_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenocchiMethod {
    Sets,
    Formula,
    Motzkin,
    Poincare,
    Orbits,
}

impl GenocchiMethod {
    pub const ALL: [GenocchiMethod; 5] = [
        GenocchiMethod::Sets,
        GenocchiMethod::Formula,
        GenocchiMethod::Motzkin,
        GenocchiMethod::Poincare,
        GenocchiMethod::Orbits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenocchiMethod::Sets => "sets",
            GenocchiMethod::Formula => "formula",
            GenocchiMethod::Motzkin => "motzkin",
            GenocchiMethod::Poincare => "poincare",
            GenocchiMethod::Orbits => "orbits",
        }
    }
}

impl std::str::FromStr for GenocchiMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GenocchiMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown Genocchi method {:?}", s)))
    }
}

/// h_n by the chosen method. The geometric methods use F^a_n, the complete
/// flag configuration on A_{n−1}; for n = 1 that variety is a point.
pub fn genocchi(n: usize, method: GenocchiMethod) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Input("h_n is defined for n ≥ 1".into()));
    }
    Ok(match method {
        GenocchiMethod::Sets => genocchi_sets(n),
        GenocchiMethod::Formula => genocchi_formula(n),
        GenocchiMethod::Motzkin => genocchi_motzkin(n)?,
        GenocchiMethod::Poincare => crate::poincare::poincare_complete_flag(n - 1).eval_int(1),
        GenocchiMethod::Orbits if n == 1 => BigInt::one(),
        GenocchiMethod::Orbits => orbit_count(&PIConfig::complete_flag(n - 1)?),
    })
}

/// Multiset of intervals, sorted by interval.
pub type IntervalMultiset = Vec<(Interval, usize)>;

/// An orbit of G on Gr_{dim P}(P ⊕ I): the isoclasses of the quotient Q_P of
/// P and the subrepresentation N_I of I.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitLabel {
    pub qp: IntervalMultiset,
    pub ni: IntervalMultiset,
}

pub fn multiset_dim(ms: &IntervalMultiset, n: usize) -> DimVector {
    let mut d = vec![0usize; n];
    for (iv, m) in ms {
        for v in iv.left..=iv.right {
            d[v - 1] += m;
        }
    }
    DimVector(d)
}

impl OrbitLabel {
    pub fn dim_vector(&self, n: usize) -> DimVector {
        multiset_dim(&self.ni, n)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |ms: &IntervalMultiset| {
            ms.iter()
                .map(|(iv, m)| if *m == 1 { iv.to_string() } else { format!("{}^{}", iv, m) })
                .collect::<Vec<_>>()
                .join("+")
        };
        write!(f, "Q_P=[{}] N_I=[{}]", show(&self.qp), show(&self.ni))
    }
}

/// Which endpoint the multiplicity bounds constrain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OrbitConvention {
    /// N_I: at most b_j intervals ending at j (socle); Q_P: at most a_i
    /// intervals starting at i (top).
    #[default]
    SocleTop,
    /// The transposed indexing: N_I bounded by left endpoints via b, Q_P by
    /// right endpoints via a.
    Transposed,
}

/// Every multiset with, for each vertex v, at most `caps[v]` intervals drawn
/// from `options(v)`.
fn bounded_multisets(
    n: usize,
    caps: &[usize],
    options: impl Fn(usize) -> Vec<Interval>,
) -> Vec<IntervalMultiset> {
    let mut per_vertex: Vec<Vec<IntervalMultiset>> = Vec::with_capacity(n);
    for v in 1..=n {
        let opts = options(v);
        let mut found = Vec::new();
        fn rec(
            opts: &[Interval],
            idx: usize,
            left: usize,
            cur: &mut IntervalMultiset,
            out: &mut Vec<IntervalMultiset>,
        ) {
            if idx == opts.len() {
                out.push(cur.clone());
                return;
            }
            for m in 0..=left {
                if m > 0 {
                    cur.push((opts[idx], m));
                }
                rec(opts, idx + 1, left - m, cur, out);
                if m > 0 {
                    cur.pop();
                }
            }
        }
        rec(&opts, 0, caps[v - 1], &mut Vec::new(), &mut found);
        per_vertex.push(found);
    }
    let mut all: Vec<IntervalMultiset> = vec![Vec::new()];
    for choices in per_vertex {
        let mut next = Vec::with_capacity(all.len() * choices.len());
        for base in &all {
            for c in &choices {
                let mut ms = base.clone();
                ms.extend(c.iter().copied());
                next.push(ms);
            }
        }
        all = next;
    }
    for ms in &mut all {
        ms.sort();
    }
    all
}

fn candidates(cfg: &PIConfig, conv: OrbitConvention) -> (Vec<IntervalMultiset>, Vec<IntervalMultiset>) {
    let n = cfg.n;
    let ending_at = |v: usize| (1..=v).map(|i| Interval { left: i, right: v }).collect();
    let starting_at = |v: usize| (v..=n).map(|j| Interval { left: v, right: j }).collect();
    match conv {
        OrbitConvention::SocleTop => (
            bounded_multisets(n, &cfg.b, ending_at),
            bounded_multisets(n, &cfg.a, starting_at),
        ),
        OrbitConvention::Transposed => (
            bounded_multisets(n, &cfg.b, starting_at),
            bounded_multisets(n, &cfg.a, ending_at),
        ),
    }
}

/// All orbit labels, grouped by N_I in generation order.
pub fn orbit_enumerate(cfg: &PIConfig) -> Vec<OrbitLabel> {
    orbit_enumerate_with(cfg, OrbitConvention::SocleTop)
}

pub fn orbit_enumerate_with(cfg: &PIConfig, conv: OrbitConvention) -> Vec<OrbitLabel> {
    let n = cfg.n;
    let (nis, qps) = candidates(cfg, conv);
    let mut by_dim: BTreeMap<DimVector, Vec<&IntervalMultiset>> = BTreeMap::new();
    for qp in &qps {
        by_dim.entry(multiset_dim(qp, n)).or_default().push(qp);
    }
    let mut out = Vec::new();
    for ni in &nis {
        if let Some(matches) = by_dim.get(&multiset_dim(ni, n)) {
            for qp in matches {
                out.push(OrbitLabel {
                    qp: (*qp).clone(),
                    ni: ni.clone(),
                });
            }
        }
    }
    out
}

/// Number of orbit labels, without materializing them.
pub fn orbit_count(cfg: &PIConfig) -> BigInt {
    orbit_count_with(cfg, OrbitConvention::SocleTop)
}

pub fn orbit_count_with(cfg: &PIConfig, conv: OrbitConvention) -> BigInt {
    let n = cfg.n;
    let (nis, qps) = candidates(cfg, conv);
    let mut qp_count: HashMap<DimVector, u64> = HashMap::new();
    for qp in &qps {
        *qp_count.entry(multiset_dim(qp, n)).or_default() += 1;
    }
    nis.iter()
        .map(|ni| BigInt::from(qp_count.get(&multiset_dim(ni, n)).copied().unwrap_or(0)))
        .sum()
}
