//! JSON files for representations and subspaces. Vertices, arrows and basis
//! indices are 1-based; matrix entries are integers or `"p/q"` strings.
//!
//! ```json
//! {
//!   "vertices": 2,
//!   "arrows": [[1, 2]],
//!   "field": "Q",
//!   "dims": [1, 1],
//!   "matrices": [[[1]]],
//!   "summands": [{"label": "P1", "basis": {"1": [1], "2": [1]}}],
//!   "degrees": {"P1": 0}
//! }
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cells::DegreeAssignment;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{Rep, Summand, SubrepBasis};

/// A matrix entry as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn parse(&self) -> Result<BigRational> {
        match self {
            Scalar::Int(x) => Ok(BigRational::from_integer(BigInt::from(*x))),
            Scalar::Text(s) => {
                let s = s.trim();
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (s, "1"),
                };
                let num = BigInt::from_str(num)
                    .map_err(|_| Error::Input(format!("bad matrix entry {:?}", s)))?;
                let den = BigInt::from_str(den)
                    .map_err(|_| Error::Input(format!("bad matrix entry {:?}", s)))?;
                if den == BigInt::from(0) {
                    return Err(Error::Input(format!("zero denominator in {:?}", s)));
                }
                Ok(BigRational::new(num, den))
            }
        }
    }

    pub fn from_rational(x: &BigRational) -> Scalar {
        if x.is_integer() {
            if let Ok(v) = i64::try_from(x.to_integer()) {
                return Scalar::Int(v);
            }
        }
        Scalar::Text(x.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandFile {
    pub label: String,
    /// vertex (1-based, as a string key) → basis indices (1-based)
    pub basis: BTreeMap<String, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub dims: Vec<usize>,
    /// one `dims[target] × dims[source]` matrix per arrow, as rows
    pub matrices: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summands: Option<Vec<SummandFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<BTreeMap<String, i64>>,
}

pub fn parse_field(s: &str) -> Result<Field> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let digits = t
        .trim_start_matches(['F', 'f'])
        .trim_start_matches('_');
    let p: u32 = digits
        .parse()
        .map_err(|_| Error::Input(format!("unknown field {:?}; use \"Q\" or \"F<p>\"", s)))?;
    Field::prime(p)
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("F{}", p),
    }
}

fn one_based(x: usize, what: &str, bound: usize) -> Result<usize> {
    if x == 0 || x > bound {
        return Err(Error::Input(format!("{} {} out of range 1..={}", what, x, bound)));
    }
    Ok(x - 1)
}

impl RepFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("rep file: {}", e)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rep files serialize")
    }

    pub fn to_rep(&self) -> Result<Rep> {
        let n = self.vertices;
        let arrows = self
            .arrows
            .iter()
            .map(|&[s, t]| Ok((one_based(s, "arrow source", n)?, one_based(t, "arrow target", n)?)))
            .collect::<Result<Vec<_>>>()?;
        let quiver = Quiver::new(n, arrows)?;
        let field = match &self.field {
            Some(f) => parse_field(f)?,
            None => Field::Rational,
        };
        let dims = DimVector(self.dims.clone());
        quiver.check_dims(&dims)?;
        if self.matrices.len() != quiver.arrows().len() {
            return Err(Error::Dimension(format!(
                "{} matrices for {} arrows",
                self.matrices.len(),
                quiver.arrows().len()
            )));
        }
        let mut maps = Vec::with_capacity(self.matrices.len());
        for (k, (rows, &(s, t))) in self.matrices.iter().zip(quiver.arrows()).enumerate() {
            let (r, c) = (dims[t], dims[s]);
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::Dimension(format!(
                    "matrix of arrow {} must be {}x{}",
                    k + 1,
                    r,
                    c
                )));
            }
            let entries = rows
                .iter()
                .map(|row| row.iter().map(Scalar::parse).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            maps.push(Matrix::from_rows(r, c, entries)?);
        }
        let rep = Rep::new(quiver, field, dims.clone(), maps)?;
        let Some(summands) = &self.summands else {
            return Ok(rep);
        };
        let mut parsed = Vec::with_capacity(summands.len());
        for s in summands {
            let mut basis = vec![Vec::new(); n];
            for (v, idx) in &s.basis {
                let v: usize = v
                    .parse()
                    .map_err(|_| Error::Input(format!("vertex key {:?} in {}", v, s.label)))?;
                let v = one_based(v, "vertex", n)?;
                basis[v] = idx
                    .iter()
                    .map(|&i| one_based(i, "basis index", dims[v]))
                    .collect::<Result<_>>()?;
            }
            parsed.push(Summand {
                label: s.label.clone(),
                basis,
            });
        }
        rep.with_summands(parsed)
    }

    /// Degrees listed in the file, in summand order.
    pub fn degree_assignment(&self) -> Result<Option<DegreeAssignment>> {
        let Some(map) = &self.degrees else {
            return Ok(None);
        };
        let summands = self
            .summands
            .as_ref()
            .ok_or_else(|| Error::Input("degrees given without summands".into()))?;
        if map.len() != summands.len() {
            return Err(Error::Input(format!(
                "{} degrees for {} summands",
                map.len(),
                summands.len()
            )));
        }
        let degrees = summands
            .iter()
            .map(|s| {
                map.get(&s.label)
                    .copied()
                    .ok_or_else(|| Error::Input(format!("no degree for summand {}", s.label)))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeAssignment::new(degrees).map(Some)
    }

    pub fn from_rep(m: &Rep, degrees: Option<&DegreeAssignment>) -> Self {
        let q = m.quiver();
        let summands = m.summands().map(|sums| {
            sums.iter()
                .map(|s| SummandFile {
                    label: s.label.clone(),
                    basis: s
                        .basis
                        .iter()
                        .enumerate()
                        .filter(|(_, idx)| !idx.is_empty())
                        .map(|(v, idx)| ((v + 1).to_string(), idx.iter().map(|i| i + 1).collect()))
                        .collect(),
                })
                .collect::<Vec<_>>()
        });
        let degrees = degrees.map(|d| d.labelled(m).into_iter().collect());
        RepFile {
            vertices: q.vertex_count(),
            arrows: q.arrows().iter().map(|&(s, t)| [s + 1, t + 1]).collect(),
            field: Some(field_name(m.field())),
            dims: m.dims().0.clone(),
            matrices: m
                .maps()
                .iter()
                .map(|mat| {
                    (0..mat.rows())
                        .map(|r| mat.row(r).iter().map(Scalar::from_rational).collect())
                        .collect()
                })
                .collect(),
            summands,
            degrees,
        }
    }
}

/// Subspace file: for each vertex, a list of basis vectors of length dims[v].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub basis: Vec<Vec<Vec<Scalar>>>,
}

impl SubspaceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("subspace file: {}", e)))
    }

    pub fn to_basis(&self, m: &Rep) -> Result<SubrepBasis> {
        let n = m.quiver().vertex_count();
        if self.basis.len() != n {
            return Err(Error::Dimension(format!(
                "subspace lists {} vertices, quiver has {}",
                self.basis.len(),
                n
            )));
        }
        let vectors = self
            .basis
            .iter()
            .enumerate()
            .map(|(v, vecs)| {
                let cols = vecs
                    .iter()
                    .map(|x| {
                        if x.len() != m.dims()[v] {
                            return Err(Error::Dimension(format!(
                                "vector of length {} at vertex {}, dimension is {}",
                                x.len(),
                                v + 1,
                                m.dims()[v]
                            )));
                        }
                        x.iter().map(Scalar::parse).collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(m.dims()[v], &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubrepBasis { vectors })
    }
}

/// Reads a dimension vector written as `1,2,1,1`.
pub fn parse_dim_vector(s: &str) -> Result<DimVector> {
    if s.trim().is_empty() {
        return Ok(DimVector(Vec::new()));
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad dimension vector entry {:?}", x)))
        })
        .collect::<Result<Vec<_>>>()
        .map(DimVector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thin::pi_rep;

    #[test]
    fn round_trip() {
        let m = pi_rep(&Quiver::d4(), &[1, 0, 0, 0], &[0, 0, 1, 1]).unwrap();
        let text = RepFile::from_rep(&m, None).to_json();
        let back = RepFile::from_json(&text).unwrap().to_rep().unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn fractions_and_fields() {
        assert_eq!(
            Scalar::Text("-3/6".into()).parse().unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(Scalar::Text("1/0".into()).parse().is_err());
        assert_eq!(parse_field("F3").unwrap(), Field::Prime(3));
        assert_eq!(parse_field("q").unwrap(), Field::Rational);
        assert!(parse_field("F4").is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        let text = r#"{"vertices":2,"arrows":[[1,2]],"dims":[1,1],"matrices":[[[1,2]]]}"#;
        assert!(matches!(
            RepFile::from_json(text).unwrap().to_rep(),
            Err(Error::Dimension(_))
        ));
        let text = r#"{"vertices":2,"arrows":[[1,3]],"dims":[1,1],"matrices":[[[1]]]}"#;
        assert!(RepFile::from_json(text).unwrap().to_rep().is_err());
        assert!(RepFile::from_json("{\"vertices\": 1}").is_err());
    }

    #[test]
    fn dim_vectors() {
        assert_eq!(parse_dim_vector("1, 2,1").unwrap(), DimVector(vec![1, 2, 1]));
        assert!(parse_dim_vector("1,x").is_err());
    }
}
