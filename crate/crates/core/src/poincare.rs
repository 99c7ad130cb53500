//! Closed-form Poincaré polynomials for Gr_g(P), Gr_f(I) and
//! Gr_{dim P}(P ⊕ I) on equioriented A_n.
//!
//! Gr_{dim P}(P ⊕ I) is stratified by f = dim(N ∩ I). Each stratum is a
//! vector bundle over Gr_{e−f}(P) × Gr_f(I) with fibre Hom_Q(N_P, I/N_I), so
//! its contribution is q^{⟨e−f, dim I − f⟩} · P_{Gr(P)} · P_{Gr(I)}.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qpoly::{q_binomial, IntPoly};
use crate::quiver::DimVector;
use crate::typea::PIConfig;

/// How the fibre exponent of a stratum is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExponentConvention {
    /// ⟨g, dim I − f⟩ = Σ g_i (b_i − f_i + f_{i+1}).
    #[default]
    Euler,
    /// Σ g_i (a_i − f_i + f_{i+1}); coincides with `Euler` when a = b.
    Printed,
}

impl FromStr for ExponentConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler" => Ok(ExponentConvention::Euler),
            "printed" => Ok(ExponentConvention::Printed),
            other => Err(Error::Input(format!("unknown exponent convention {:?}", other))),
        }
    }
}

impl fmt::Display for ExponentConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExponentConvention::Euler => "euler",
            ExponentConvention::Printed => "printed",
        })
    }
}

fn check_len(what: &str, v: &[usize], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::Dimension(format!(
            "{} has length {}, expected {}",
            what,
            v.len(),
            n
        )));
    }
    Ok(())
}

/// Poincaré polynomial of Gr_g(⊕ P_i^{a_i}):
/// Π_k [a_1+…+a_k − g_{k−1} choose g_k − g_{k−1}]_q, g_0 = 0.
pub fn poincare_proj(a: &[usize], g: &DimVector) -> Result<IntPoly> {
    check_len("g", &g.0, a.len())?;
    let mut acc = 0i64;
    let mut prev = 0i64;
    let mut out = IntPoly::one();
    for (k, &ak) in a.iter().enumerate() {
        acc += ak as i64;
        let gk = g[k] as i64;
        out = &out * &q_binomial(acc - prev, gk - prev);
        if out.is_zero() {
            break;
        }
        prev = gk;
    }
    Ok(out)
}

/// Poincaré polynomial of Gr_f(⊕ I_i^{b_i}):
/// Π_k [b_{n+1−k} + f_{n+2−k} choose f_{n+1−k}]_q, f_{n+1} = 0.
pub fn poincare_inj(b: &[usize], f: &DimVector) -> Result<IntPoly> {
    let n = b.len();
    check_len("f", &f.0, n)?;
    let mut out = IntPoly::one();
    for v in (0..n).rev() {
        let next = if v + 1 < n { f[v + 1] } else { 0 } as i64;
        out = &out * &q_binomial(b[v] as i64 + next, f[v] as i64);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// Rank of the bundle over the stratum f: ⟨e − f, dim I − f⟩.
pub fn strata_fiber_dim(cfg: &PIConfig, f: &DimVector) -> Result<i64> {
    let e = cfg.dim_p();
    let di = cfg.dim_i();
    let g = e.checked_sub(f).ok_or_else(|| {
        Error::Dimension(format!("stratum {} exceeds dim P = {}", f, e))
    })?;
    let rest = di.checked_sub(f).ok_or_else(|| {
        Error::Dimension(format!("stratum {} exceeds dim I = {}", f, di))
    })?;
    cfg.quiver().euler_form(&g, &rest)
}

fn stratum_exponent(cfg: &PIConfig, f: &DimVector, conv: ExponentConvention) -> Result<i64> {
    match conv {
        ExponentConvention::Euler => strata_fiber_dim(cfg, f),
        ExponentConvention::Printed => {
            let e = cfg.dim_p();
            let n = cfg.n;
            Ok((0..n)
                .map(|i| {
                    let g = e[i] as i64 - f[i] as i64;
                    let next = if i + 1 < n { f[i + 1] as i64 } else { 0 };
                    g * (cfg.a[i] as i64 - f[i] as i64 + next)
                })
                .sum())
        }
    }
}

/// Every f with 0 ≤ f ≤ dim P and f ≤ dim I, in lexicographic order.
pub fn strata(cfg: &PIConfig) -> Vec<DimVector> {
    let e = cfg.dim_p();
    let di = cfg.dim_i();
    let bounds: Vec<usize> = e.iter().zip(di.iter()).map(|(a, b)| *a.min(b)).collect();
    let mut out = Vec::new();
    let mut cur = vec![0usize; cfg.n];
    fn rec(k: usize, bounds: &[usize], cur: &mut Vec<usize>, out: &mut Vec<DimVector>) {
        if k == bounds.len() {
            out.push(DimVector(cur.clone()));
            return;
        }
        for x in 0..=bounds[k] {
            cur[k] = x;
            rec(k + 1, bounds, cur, out);
        }
    }
    rec(0, &bounds, &mut cur, &mut out);
    out
}

/// Contribution q^{fibre} · P_{Gr_{e−f}(P)} · P_{Gr_f(I)} of one stratum.
pub fn stratum_polynomial(
    cfg: &PIConfig,
    f: &DimVector,
    conv: ExponentConvention,
) -> Result<IntPoly> {
    let g = cfg.dim_p().checked_sub(f).ok_or_else(|| {
        Error::Dimension(format!("stratum {} exceeds dim P", f))
    })?;
    let base = &poincare_proj(&cfg.a, &g)? * &poincare_inj(&cfg.b, f)?;
    if base.is_zero() {
        return Ok(base);
    }
    let exp = stratum_exponent(cfg, f, conv)?;
    if exp < 0 {
        return Err(Error::Invariant(format!(
            "stratum {} of {} gets negative exponent {} under the {} convention",
            f, cfg, exp, conv
        )));
    }
    Ok(base.shift(exp as usize))
}

/// Poincaré polynomial of Gr_{dim P}(P ⊕ I).
pub fn poincare_x(cfg: &PIConfig) -> IntPoly {
    poincare_x_with(cfg, ExponentConvention::Euler).expect("fibre dimensions are non-negative")
}

pub fn poincare_x_with(cfg: &PIConfig, conv: ExponentConvention) -> Result<IntPoly> {
    let mut total = IntPoly::zero();
    for f in strata(cfg) {
        total = &total + &stratum_polynomial(cfg, &f, conv)?;
    }
    Ok(total)
}

/// Poincaré polynomial of the complete degenerate flag variety F^a_{n+1},
/// summed directly over f_1..f_n with g_k = k − f_k.
pub fn poincare_complete_flag(n: usize) -> IntPoly {
    fn rec(k: usize, n: usize, f: &mut Vec<i64>, out: &mut IntPoly) {
        if k > n {
            let mut term = IntPoly::one();
            let mut exp = 0i64;
            for j in 1..=n {
                let (prev, cur, next) = (f[j - 1], f[j], f[j + 1]);
                term = &term * &q_binomial(1 + prev, cur);
                term = &term * &q_binomial(1 + next, cur);
                if term.is_zero() {
                    return;
                }
                exp += (j as i64 - cur) * (1 - cur + next);
            }
            debug_assert!(exp >= 0);
            *out = &*out + &term.shift(exp as usize);
            return;
        }
        for x in 0..=(1 + f[k - 1]).min(k as i64) {
            f[k] = x;
            rec(k + 1, n, f, out);
        }
        f[k] = 0;
    }
    let mut f = vec![0i64; n + 2];
    let mut out = IntPoly::zero();
    rec(1, n, &mut f, &mut out);
    out
}

pub fn euler_characteristic(cfg: &PIConfig) -> BigInt {
    poincare_x(cfg).eval_int(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typea::{flag_to_pi, FlagSpec};

    fn dv(v: &[usize]) -> DimVector {
        DimVector(v.to_vec())
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn projective_grassmannians() {
        assert_eq!(poincare_proj(&[1, 1], &dv(&[1, 2])).unwrap(), IntPoly::one());
        assert_eq!(poincare_proj(&[5], &dv(&[2])).unwrap(), q_binomial(5, 2));
        assert_eq!(poincare_proj(&[1, 1], &dv(&[0, 1])).unwrap(), p(&[1, 1]));
        assert!(poincare_proj(&[1, 1], &dv(&[2, 2])).unwrap().is_zero());
    }

    #[test]
    fn injective_grassmannians() {
        assert_eq!(poincare_inj(&[1, 1], &dv(&[0, 0])).unwrap(), IntPoly::one());
        assert_eq!(poincare_inj(&[1, 1], &dv(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(poincare_inj(&[4], &dv(&[3])).unwrap(), q_binomial(4, 3));
    }

    // Gr_f(I) ≅ Gr_{ω(dim I − f)}(⊕ P_i^{b_{n+1−i}}) under i ↦ n+1−i.
    #[test]
    fn injective_formula_is_the_dual_projective_formula() {
        let bs: [&[usize]; 4] = [&[1, 1, 1], &[2, 0, 1], &[0, 3, 1], &[1, 2, 2]];
        for b in bs {
            let cfg = PIConfig::new(vec![0; b.len()], b.to_vec()).unwrap();
            let di = cfg.dim_i();
            let rev_b: Vec<usize> = b.iter().rev().copied().collect();
            let mut f = vec![0usize; b.len()];
            loop {
                let fv = DimVector(f.clone());
                if let Some(co) = di.checked_sub(&fv) {
                    let w = DimVector(co.0.iter().rev().copied().collect());
                    assert_eq!(
                        poincare_inj(b, &fv).unwrap(),
                        poincare_proj(&rev_b, &w).unwrap(),
                        "b={:?} f={}",
                        b,
                        fv
                    );
                }
                let mut i = 0;
                while i < f.len() && f[i] == di[i] {
                    f[i] = 0;
                    i += 1;
                }
                if i == f.len() {
                    break;
                }
                f[i] += 1;
            }
        }
    }

    #[test]
    fn fiber_dimensions() {
        let c2 = PIConfig::complete_flag(2).unwrap();
        assert_eq!(strata_fiber_dim(&c2, &dv(&[0, 0])).unwrap(), 3);
        let small_p = PIConfig::new(vec![0, 1], vec![1, 1]).unwrap();
        assert_eq!(strata_fiber_dim(&small_p, &small_p.dim_p()).unwrap(), 0);
        assert_eq!(strata_fiber_dim(&c2, &dv(&[1, 1])).unwrap(), 0);
        assert!(matches!(
            strata_fiber_dim(&c2, &dv(&[2, 0])),
            Err(Error::Dimension(_))
        ));
    }

    // Strata of F^a_3: f=(0,0) gives q^3, f=(0,1) and f=(1,0) give q^2 each,
    // f=(1,1) gives (1+q)^2.
    #[test]
    fn small_complete_flags() {
        assert_eq!(poincare_x(&PIConfig::complete_flag(1).unwrap()), p(&[1, 1]));
        assert_eq!(poincare_x(&PIConfig::complete_flag(2).unwrap()), p(&[1, 2, 3, 1]));
        assert_eq!(poincare_complete_flag(1), p(&[1, 1]));
        assert_eq!(poincare_complete_flag(2), p(&[1, 2, 3, 1]));
        assert_eq!(poincare_complete_flag(4).eval_int(1), BigInt::from(295));
        assert_eq!(poincare_complete_flag(0), IntPoly::one());
    }

    #[test]
    fn complete_flag_sum_matches_stratum_sum() {
        for n in 1..=6 {
            assert_eq!(
                poincare_complete_flag(n),
                poincare_x(&PIConfig::complete_flag(n).unwrap()),
                "n={}",
                n
            );
        }
    }

    #[test]
    fn single_step_flags_are_grassmannians() {
        for n in 1..=5usize {
            for d in 1..=n {
                let cfg = flag_to_pi(&FlagSpec::new(n + 1, vec![d]).unwrap());
                assert_eq!(poincare_x(&cfg), q_binomial(n as i64 + 1, d as i64));
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(&PIConfig::complete_flag(4).unwrap()), BigInt::from(295));
        let g24 = flag_to_pi(&FlagSpec::new(4, vec![2]).unwrap());
        assert_eq!(euler_characteristic(&g24), BigInt::from(6));
    }

    #[test]
    fn conventions_agree_when_a_equals_b() {
        let cfg = PIConfig::new(vec![2, 1, 1], vec![2, 1, 1]).unwrap();
        assert_eq!(
            poincare_x_with(&cfg, ExponentConvention::Printed).unwrap(),
            poincare_x(&cfg)
        );
    }

    #[test]
    fn structural_invariants_on_small_configs() {
        for a0 in 0..3 {
            for a1 in 0..3 {
                for b0 in 0..3 {
                    for b1 in 0..3 {
                        let Ok(cfg) = PIConfig::new(vec![a0, a1], vec![b0, b1]) else {
                            continue;
                        };
                        let px = poincare_x(&cfg);
                        let e = cfg.dim_p();
                        let d = cfg.dim_m();
                        let dim = cfg.quiver().generic_grass_dim(&e, &d).unwrap();
                        assert_eq!(px.degree(), Some(dim as usize), "{}", cfg);
                        assert_eq!(px.leading_coeff(), Some(&BigInt::from(1)), "{}", cfg);
                        assert_eq!(px.coeff(0), BigInt::from(1), "{}", cfg);
                    }
                }
            }
        }
    }
}
