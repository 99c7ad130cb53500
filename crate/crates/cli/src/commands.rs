use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use qgdf::cells::{generic_degrees, CellInfo, Cells, DegreeAssignment, Flow};
use qgdf::counting::{genocchi as genocchi_value, orbit_enumerate_with, GenocchiMethod, OrbitConvention};
use qgdf::oracle::{count_subreps_fq_with, OracleOptions, DEFAULT_BUDGET};
use qgdf::poincare::{poincare_x, poincare_x_with, ExponentConvention};
use qgdf::repfile::{RepFile, SubspaceFile};
use qgdf::rep::{hom_ext_dims, split};
use qgdf::typea::{type_a_gt_degrees, PIConfig};
use qgdf::Rep;
use serde_json::{json, Map, Value};

use crate::input::{AnyInput, Resolved, TypeAInput};
use crate::output::{dims, joined, num, nums, poly, Out};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Euler,
    Printed,
}

impl From<Convention> for ExponentConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Euler => ExponentConvention::Euler,
            Convention::Printed => ExponentConvention::Printed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Degrees {
    /// d(L) < d(L') whenever Hom(L, L') ≠ 0, cells flowing to λ → 0
    HomRule,
    /// Explicit type-A weights, cells flowing to λ → ∞
    Gt,
    /// The `degrees` field of the rep file
    File,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrbitIndexing {
    SocleTop,
    Transposed,
}

#[derive(Args, Debug)]
pub struct PoincareArgs {
    #[command(flatten)]
    input: TypeAInput,
    /// Exponent of the stratum terms
    #[arg(long, value_enum, default_value = "euler")]
    exponent_convention: Convention,
}

#[derive(Args, Debug)]
pub struct GenocchiArgs {
    /// Index n of h_n
    #[arg(long)]
    n: usize,
    /// sets, formula, motzkin, poincare, orbits or all
    #[arg(long, default_value = "all")]
    method: String,
}

#[derive(Args, Debug)]
pub struct CellsArgs {
    #[command(flatten)]
    input: AnyInput,
    /// One record per fixed point before the summary
    #[arg(long)]
    list: bool,
    /// Torus weights (default: the rep file's degrees if present, else hom-rule)
    #[arg(long, value_enum)]
    degrees: Option<Degrees>,
}

#[derive(Args, Debug)]
pub struct OrbitsArgs {
    #[command(flatten)]
    input: TypeAInput,
    /// One record per orbit before the count
    #[arg(long)]
    list: bool,
    /// Which interval endpoints the multiplicities bound
    #[arg(long, value_enum, default_value = "socle-top")]
    indexing: OrbitIndexing,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    input: AnyInput,
    /// Prime field size
    #[arg(long)]
    q: u32,
    /// Split the count by f = dim(U ∩ I)
    #[arg(long)]
    per_stratum: bool,
    /// Maximum number of candidate tuples
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
pub struct EmitArgs {
    #[command(flatten)]
    input: TypeAInput,
    /// Torus weights written into the file
    #[arg(long, value_enum, default_value = "hom-rule")]
    degrees: Degrees,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    input: AnyInput,
    /// Field size for the point count
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Maximum number of candidate tuples for the point count
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
pub struct TangentArgs {
    /// Representation file (JSON)
    #[arg(long, value_name = "FILE")]
    rep: PathBuf,
    /// Subspace file (JSON) with a basis of U at every vertex
    #[arg(long, value_name = "FILE")]
    subrep: PathBuf,
}

pub fn poincare(args: &PoincareArgs, out: &mut Out) -> Result<(), CliError> {
    let cfg = args.input.resolve()?;
    let p = poincare_x_with(&cfg, args.exponent_convention.into())?;
    let dim = p.degree().unwrap_or(0);
    let euler = p.eval_int(1);
    out.header(&["degree", "coefficient"])?;
    for (k, c) in p.coeffs().iter().enumerate() {
        out.row(&[k.to_string(), c.to_string()])?;
    }
    let conv = ExponentConvention::from(args.exponent_convention);
    out.summary(
        &json!({
            "config": cfg.to_string(),
            "coeffs": poly(&p),
            "dim": num(dim),
            "euler": num(&euler),
            "convention": conv.to_string(),
        }),
        format!("{}\ndim {}, euler characteristic {}", p, dim, euler),
    )?;
    Ok(())
}

pub fn genocchi(args: &GenocchiArgs, out: &mut Out) -> Result<(), CliError> {
    let methods: Vec<GenocchiMethod> = if args.method == "all" {
        GenocchiMethod::ALL.to_vec()
    } else {
        vec![args.method.parse().map_err(|e: qgdf::Error| CliError::Usage(e.to_string()))?]
    };
    let values = methods
        .iter()
        .map(|&m| genocchi_value(args.n, m).map(|v| (m, v)))
        .collect::<qgdf::Result<Vec<(GenocchiMethod, BigInt)>>>()?;
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    out.header(&["n", "method", "value"])?;
    let mut map = Map::new();
    for (m, v) in &values {
        map.insert(m.name().to_string(), num(v));
        out.row(&[args.n.to_string(), m.name().to_string(), v.to_string()])?;
    }
    let text = values
        .iter()
        .map(|(m, v)| format!("h_{} = {} ({})", args.n, v, m.name()))
        .chain([format!("agree: {}", agree)])
        .collect::<Vec<_>>()
        .join("\n");
    out.summary(&json!({"n": num(args.n), "values": map, "agree": agree}), text)?;
    if !agree {
        return Err(CliError::Mismatch(format!("methods disagree on h_{}", args.n)));
    }
    Ok(())
}

fn choose_degrees(
    input: &Resolved,
    rep: &Rep,
    choice: Option<Degrees>,
) -> Result<(DegreeAssignment, Flow, &'static str), CliError> {
    let file_degrees = match input {
        Resolved::File { file, .. } => file.degree_assignment()?,
        Resolved::TypeA(_) => None,
    };
    let choice = choice.unwrap_or(if file_degrees.is_some() { Degrees::File } else { Degrees::HomRule });
    match (choice, input) {
        (Degrees::HomRule, _) => Ok((generic_degrees(rep)?, Flow::Zero, "hom-rule")),
        (Degrees::Gt, Resolved::TypeA(cfg)) => Ok((type_a_gt_degrees(cfg), Flow::Infinity, "gt")),
        (Degrees::Gt, _) => Err(CliError::Usage("--degrees gt needs a type-A input".into())),
        (Degrees::File, _) => file_degrees
            .map(|d| (d, Flow::Zero, "file"))
            .ok_or_else(|| CliError::Usage("--degrees file needs a rep file with degrees".into())),
    }
}

fn fixed_point_json(info: &CellInfo, rep: &Rep) -> Value {
    let parts: Map<String, Value> = info
        .fixed_point
        .labelled(rep)
        .into_iter()
        .map(|(label, verts)| (label, nums(verts)))
        .collect();
    json!({
        "fixedPoint": parts,
        "cellDim": num(info.cell_dim),
        "stratum": dims(&info.stratum),
        "tangentDim": num(info.tangent_dim),
        "singular": info.singular,
    })
}

fn fixed_point_text(info: &CellInfo, rep: &Rep) -> String {
    info.fixed_point
        .labelled(rep)
        .into_iter()
        .map(|(label, verts)| {
            let vs: Vec<String> = verts.iter().map(|v| v.to_string()).collect();
            format!("{}:{}", label, vs.join(" "))
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn cells(args: &CellsArgs, out: &mut Out) -> Result<(), CliError> {
    let input = args.input.resolve()?;
    let rep = input.rep()?;
    let e = input.e();
    let (degrees, flow, name) = choose_degrees(&input, &rep, args.degrees)?;
    let cells = Cells::new(&rep, degrees)?.with_flow(flow);
    let infos = cells.classify_all(&e)?;
    let mut counts: Vec<u64> = Vec::new();
    for info in &infos {
        if counts.len() <= info.cell_dim {
            counts.resize(info.cell_dim + 1, 0);
        }
        counts[info.cell_dim] += 1;
    }
    out.header(&["fixed_point", "cell_dim", "stratum", "tangent_dim", "singular"])?;
    if args.list {
        for info in &infos {
            let fp = fixed_point_text(info, &rep);
            out.emit(
                &fixed_point_json(info, &rep),
                format!(
                    "{}  cell {}  stratum {}  tangent {}  {}",
                    fp,
                    info.cell_dim,
                    info.stratum,
                    info.tangent_dim,
                    if info.singular { "singular" } else { "smooth" }
                ),
                &[
                    fp.clone(),
                    info.cell_dim.to_string(),
                    joined(&info.stratum),
                    info.tangent_dim.to_string(),
                    info.singular.to_string(),
                ],
            )?;
        }
    }
    let p = qgdf::IntPoly::from_coeffs(counts.iter().copied());
    let singular = infos.iter().filter(|i| i.singular).count();
    out.summary(
        &json!({
            "cellPoly": poly(&p),
            "count": num(infos.len()),
            "singular": num(singular),
            "degrees": name,
        }),
        format!("cell polynomial {}\n{} fixed points, {} singular", p, infos.len(), singular),
    )?;
    Ok(())
}

pub fn orbits(args: &OrbitsArgs, out: &mut Out) -> Result<(), CliError> {
    let cfg: PIConfig = args.input.resolve()?;
    let conv = match args.indexing {
        OrbitIndexing::SocleTop => OrbitConvention::SocleTop,
        OrbitIndexing::Transposed => OrbitConvention::Transposed,
    };
    let labels = orbit_enumerate_with(&cfg, conv);
    out.header(&["q_p", "n_i", "dim"])?;
    if args.list {
        let show = |ms: &qgdf::counting::IntervalMultiset| -> Vec<String> {
            ms.iter()
                .flat_map(|(iv, m)| std::iter::repeat_n(iv.to_string(), *m))
                .collect()
        };
        for label in &labels {
            let d = label.dim_vector(cfg.n);
            let (qp, ni) = (show(&label.qp), show(&label.ni));
            out.emit(
                &json!({"qp": qp, "ni": ni, "dim": dims(&d)}),
                label,
                &[qp.join("+"), ni.join("+"), joined(&d)],
            )?;
        }
    }
    out.summary(
        &json!({"count": num(labels.len())}),
        format!("{} orbits", labels.len()),
    )?;
    Ok(())
}

pub fn oracle_count(args: &OracleArgs, out: &mut Out) -> Result<(), CliError> {
    let input = args.input.resolve()?;
    let rep = input.rep()?;
    let e = input.e();
    if args.budget == 0 {
        return Err(CliError::Usage("--budget must be positive".into()));
    }
    let opts = OracleOptions {
        q: args.q,
        budget: args.budget,
        per_stratum: args.per_stratum,
    };
    let count = count_subreps_fq_with(&rep, &e, &opts)?;
    out.header(&["stratum", "count"])?;
    let mut strata = Map::new();
    let mut text = vec![format!("{} points over F_{}", count.total, args.q)];
    for (f, c) in count.strata.iter().flatten() {
        strata.insert(joined(f), num(c));
        text.push(format!("stratum {}: {}", f, c));
        out.row(&[joined(f), c.to_string()])?;
    }
    let mut summary = json!({"count": num(&count.total), "q": num(args.q)});
    if count.strata.is_some() {
        summary["strata"] = Value::Object(strata);
    }
    out.summary(&summary, text.join("\n"))?;
    Ok(())
}

pub fn emit_rep(args: &EmitArgs, out: &mut Out) -> Result<(), CliError> {
    let cfg = args.input.resolve()?;
    let input = Resolved::TypeA(cfg);
    let rep = input.rep()?;
    let (degrees, _, _) = choose_degrees(&input, &rep, Some(args.degrees))?;
    let file = RepFile::from_rep(&rep, Some(&degrees));
    let value = serde_json::to_value(&file).map_err(|e| CliError::Internal(e.to_string()))?;
    out.summary(&value, file.to_json())?;
    Ok(())
}

struct Check {
    name: &'static str,
    status: &'static str,
    detail: String,
}

impl Check {
    fn compare<T: PartialEq + std::fmt::Display>(name: &'static str, left: T, right: T) -> Self {
        let ok = left == right;
        Check {
            name,
            status: if ok { "ok" } else { "mismatch" },
            detail: format!("{} vs {}", left, right),
        }
    }
}

pub fn verify(args: &VerifyArgs, out: &mut Out) -> Result<(), CliError> {
    let input = args.input.resolve()?;
    let rep = input.rep()?;
    let e = input.e();
    let mut checks = Vec::new();
    let cells = Cells::new(&rep, generic_degrees(&rep)?)?;
    let fixed = cells.fixed_points(&e)?.len();
    let cell_poly = cells.cell_polynomial(&e)?;
    let mut opts = OracleOptions::new(args.q);
    opts.budget = args.budget;
    let count = count_subreps_fq_with(&rep, &e, &opts)?.total;
    checks.push(Check::compare("fixed points vs cells at q=1", BigInt::from(fixed), cell_poly.eval_int(1)));
    checks.push(Check::compare(
        "cells vs point count",
        cell_poly.eval_int(args.q as i64),
        count.clone(),
    ));
    if let Resolved::TypeA(cfg) = &input {
        let formula = poincare_x(cfg);
        checks.push(Check::compare("formula vs cells", formula.clone(), cell_poly.clone()));
        let gt = Cells::new(&rep, type_a_gt_degrees(cfg))?
            .with_flow(Flow::Infinity)
            .cell_polynomial(&e)?;
        checks.push(Check::compare("formula vs opposite cells of the explicit weights", formula.clone(), gt));
        checks.push(Check::compare(
            "formula vs point count",
            formula.eval_int(args.q as i64),
            count,
        ));
        let orbits = qgdf::counting::orbit_count(cfg);
        if cfg.a.iter().chain(&cfg.b).all(|&x| x <= 1) {
            checks.push(Check::compare("formula vs orbits", formula.eval_int(1), orbits));
        } else {
            checks.push(Check {
                name: "formula vs orbits",
                status: "skipped",
                detail: format!(
                    "orbits are not cells when a multiplicity exceeds 1 ({} orbits, {} fixed points)",
                    orbits, fixed
                ),
            });
        }
    }
    let ok = checks.iter().all(|c| c.status != "mismatch");
    out.header(&["check", "status", "detail"])?;
    let mut list = Vec::new();
    for c in &checks {
        let v = json!({"check": c.name, "status": c.status, "detail": c.detail});
        out.row(&[c.name.to_string(), c.status.to_string(), c.detail.clone()])?;
        list.push(v);
    }
    let text = checks
        .iter()
        .map(|c| format!("{:<8} {} ({})", c.status, c.name, c.detail))
        .collect::<Vec<_>>()
        .join("\n");
    out.summary(&json!({"checks": list, "ok": ok}), text)?;
    if !ok {
        return Err(CliError::Mismatch("verification failed".into()));
    }
    Ok(())
}

pub fn tangent(args: &TangentArgs, out: &mut Out) -> Result<(), CliError> {
    let read = |p: &PathBuf| {
        fs::read_to_string(p).map_err(|err| CliError::Input(format!("{}: {}", p.display(), err)))
    };
    let rep = RepFile::from_json(&read(&args.rep)?)?.to_rep()?;
    let u = SubspaceFile::from_json(&read(&args.subrep)?)?.to_basis(&rep)?;
    let (sub, quo) = split(&rep, &u)?;
    let he = hom_ext_dims(&sub, &quo)?;
    let e = u.dim_vector();
    let generic = rep.quiver().generic_grass_dim(&e, rep.dims())?;
    out.header(&["tangent_dim", "ext_dim", "expected_dim", "exceeds"])?;
    let exceeds = he.hom as i64 > generic;
    out.emit(
        &json!({
            "tangentDim": num(he.hom),
            "extDim": num(he.ext),
            "e": dims(&e),
            "expectedDim": num(generic),
            "exceedsExpected": exceeds,
        }),
        format!(
            "tangent dim {} (Ext {}), expected dim {}{}",
            he.hom,
            he.ext,
            generic,
            if exceeds { ", exceeds" } else { "" }
        ),
        &[he.hom.to_string(), he.ext.to_string(), generic.to_string(), exceeds.to_string()],
    )?;
    Ok(())
}
