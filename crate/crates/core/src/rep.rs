//! Explicit quiver representations and the Hom/Ext computations on them.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Field, Matrix};
use crate::quiver::{DimVector, Quiver};

/// Which half of P ⊕ I a summand belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Projective,
    Injective,
}

/// A labelled direct summand: for each vertex, the basis indices it owns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub label: String,
    pub basis: Vec<Vec<usize>>,
}

impl Summand {
    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.basis.iter().map(Vec::len).collect())
    }

    /// At most one basis vector per vertex.
    pub fn is_thin(&self) -> bool {
        self.basis.iter().all(|b| b.len() <= 1)
    }

    /// `P…` labels are projective, `I…` labels injective.
    pub fn side(&self) -> Option<Side> {
        match self.label.chars().next() {
            Some('P') => Some(Side::Projective),
            Some('I') => Some(Side::Injective),
            _ => None,
        }
    }
}

/// A representation with explicit matrices. `maps[k]` is the
/// `dims[target] × dims[source]` matrix of arrow `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    quiver: Quiver,
    field: Field,
    dims: DimVector,
    maps: Vec<Matrix>,
    summands: Option<Vec<Summand>>,
}

impl Rep {
    pub fn new(quiver: Quiver, field: Field, dims: DimVector, maps: Vec<Matrix>) -> Result<Self> {
        quiver.check_dims(&dims)?;
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Dimension(format!(
                "{} matrices given for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        let mut normalized = Vec::with_capacity(maps.len());
        for (k, (m, &(s, t))) in maps.iter().zip(quiver.arrows()).enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::Dimension(format!(
                    "matrix of arrow {} is {}x{}, expected {}x{}",
                    k + 1,
                    m.rows(),
                    m.cols(),
                    dims[t],
                    dims[s]
                )));
            }
            normalized.push(m.normalized(field)?);
        }
        Ok(Rep {
            quiver,
            field,
            dims,
            maps: normalized,
            summands: None,
        })
    }

    pub fn zero(quiver: Quiver, field: Field) -> Self {
        let n = quiver.vertex_count();
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Rep {
            quiver,
            field,
            dims: DimVector::zeros(n),
            maps,
            summands: None,
        }
    }

    /// Attaches a direct-sum decomposition after checking that it partitions
    /// every vertex basis and that every matrix is block diagonal for it.
    pub fn with_summands(mut self, summands: Vec<Summand>) -> Result<Self> {
        let n = self.quiver.vertex_count();
        let mut owner: Vec<Vec<Option<usize>>> = (0..n).map(|v| vec![None; self.dims[v]]).collect();
        for (si, s) in summands.iter().enumerate() {
            if s.basis.len() != n {
                return Err(Error::Input(format!(
                    "summand {} lists {} vertices, quiver has {}",
                    s.label,
                    s.basis.len(),
                    n
                )));
            }
            for (v, idx) in s.basis.iter().enumerate() {
                for &b in idx {
                    let slot = owner[v].get_mut(b).ok_or_else(|| {
                        Error::Input(format!(
                            "summand {} uses basis index {} at vertex {} (dimension {})",
                            s.label,
                            b + 1,
                            v + 1,
                            self.dims[v]
                        ))
                    })?;
                    if slot.replace(si).is_some() {
                        return Err(Error::Input(format!(
                            "basis index {} at vertex {} claimed twice",
                            b + 1,
                            v + 1
                        )));
                    }
                }
            }
        }
        for (v, row) in owner.iter().enumerate() {
            if let Some(b) = row.iter().position(Option::is_none) {
                return Err(Error::Input(format!(
                    "basis index {} at vertex {} belongs to no summand",
                    b + 1,
                    v + 1
                )));
            }
        }
        for (k, &(s, t)) in self.quiver.arrows().iter().enumerate() {
            let m = &self.maps[k];
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if !m.get(r, c).is_zero() && owner[t][r] != owner[s][c] {
                        return Err(Error::Input(format!(
                            "matrix of arrow {} is not block diagonal for the summands",
                            k + 1
                        )));
                    }
                }
            }
        }
        self.summands = Some(summands);
        Ok(self)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn summands(&self) -> Option<&[Summand]> {
        self.summands.as_deref()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    /// Same representation over another field (entries reduced).
    pub fn over(&self, field: Field) -> Result<Rep> {
        let mut r = Rep::new(self.quiver.clone(), field, self.dims.clone(), self.maps.clone())?;
        r.summands = self.summands.clone();
        Ok(r)
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        same_setting(self, other)?;
        let n = self.quiver.vertex_count();
        let dims = &self.dims + &other.dims;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zeros(dims[t], dims[s]);
                let (a, b) = (&self.maps[k], &other.maps[k]);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c).clone());
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(self.dims[t] + r, self.dims[s] + c, b.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        let summands = match (&self.summands, &other.summands) {
            (Some(x), Some(y)) => {
                let mut all = x.clone();
                all.extend(y.iter().map(|s| Summand {
                    label: s.label.clone(),
                    basis: (0..n)
                        .map(|v| s.basis[v].iter().map(|b| b + self.dims[v]).collect())
                        .collect(),
                }));
                Some(all)
            }
            _ => None,
        };
        Ok(Rep {
            quiver: self.quiver.clone(),
            field: self.field,
            dims,
            maps,
            summands,
        })
    }

    /// Restriction to a set of coordinates per vertex: the submatrices of every
    /// arrow on those coordinates. For an arrow-closed coordinate set this is
    /// the coordinate subrepresentation; for the complement of one it is the
    /// coordinate quotient.
    pub fn restrict(&self, coords: &[Vec<usize>]) -> Rep {
        let dims = DimVector(coords.iter().map(Vec::len).collect());
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| self.maps[k].select(&coords[t], &coords[s]))
            .collect();
        Rep {
            quiver: self.quiver.clone(),
            field: self.field,
            dims,
            maps,
            summands: None,
        }
    }

    /// The representation carried by summand `i`.
    pub fn summand_rep(&self, i: usize) -> Option<Rep> {
        self.summands
            .as_ref()
            .and_then(|s| s.get(i))
            .map(|s| self.restrict(&s.basis))
    }
}

fn same_setting(x: &Rep, y: &Rep) -> Result<()> {
    if x.quiver != y.quiver {
        return Err(Error::Config("representations over different quivers".into()));
    }
    if x.field != y.field {
        return Err(Error::Config(format!(
            "field mismatch: {} vs {}",
            x.field, y.field
        )));
    }
    Ok(())
}

/// Dimensions of Hom_Q(X, Y) and Ext¹_Q(X, Y).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomExt {
    pub hom: usize,
    pub ext: usize,
}

/// Kernel and cokernel dimension of
/// ⊕_i Hom(X_i, Y_i) → ⊕_{α:i→j} Hom(X_i, Y_j), (f_i) ↦ (f_j X_α − Y_α f_i).
pub fn hom_ext_dims(x: &Rep, y: &Rep) -> Result<HomExt> {
    same_setting(x, y)?;
    let sys = HomSystem::new(x, y)?;
    if sys.nvars() == 0 || sys.neqs == 0 {
        return Ok(HomExt {
            hom: sys.nvars(),
            ext: sys.neqs,
        });
    }
    let r = linalg::rank(x.field, &sys.matrix)?;
    Ok(HomExt {
        hom: sys.nvars() - r,
        ext: sys.neqs - r,
    })
}

/// A basis of Hom_Q(X, Y): each element is one `dims_y[i] × dims_x[i]` matrix
/// per vertex.
pub fn hom_basis(x: &Rep, y: &Rep) -> Result<Vec<Vec<Matrix>>> {
    same_setting(x, y)?;
    let sys = HomSystem::new(x, y)?;
    let n = x.quiver.vertex_count();
    let kernel = if sys.neqs == 0 {
        (0..sys.nvars())
            .map(|i| {
                let mut v = vec![BigRational::zero(); sys.nvars()];
                v[i] = BigRational::from_integer(1.into());
                v
            })
            .collect()
    } else {
        linalg::kernel(x.field, &sys.matrix)?
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|i| {
                    let entries = (0..y.dims[i])
                        .map(|r| {
                            (0..x.dims[i])
                                .map(|c| v[sys.var_off[i] + r * x.dims[i] + c].clone())
                                .collect()
                        })
                        .collect();
                    Matrix::from_rows(y.dims[i], x.dims[i], entries).expect("shape")
                })
                .collect()
        })
        .collect())
}

/// The linear map (f_i) ↦ (f_t X_α − Y_α f_s) as a matrix; f_i is stored
/// row-major at `var_off[i]`.
struct HomSystem {
    matrix: Matrix,
    var_off: Vec<usize>,
    neqs: usize,
}

impl HomSystem {
    fn new(x: &Rep, y: &Rep) -> Result<Self> {
        let q = &x.quiver;
        let n = q.vertex_count();
        let mut var_off = vec![0usize; n + 1];
        for i in 0..n {
            var_off[i + 1] = var_off[i] + y.dims[i] * x.dims[i];
        }
        let nvars = var_off[n];
        let neqs: usize = q.arrows().iter().map(|&(s, t)| y.dims[t] * x.dims[s]).sum();
        let mut m = Matrix::zeros(neqs, nvars);
        let mut row = 0;
        for (k, &(s, t)) in q.arrows().iter().enumerate() {
            let (xa, ya) = (&x.maps[k], &y.maps[k]);
            for r in 0..y.dims[t] {
                for c in 0..x.dims[s] {
                    // (f_t X_α)[r][c] = Σ_l f_t[r][l] X_α[l][c]
                    for l in 0..x.dims[t] {
                        let a = xa.get(l, c);
                        if !a.is_zero() {
                            let col = var_off[t] + r * x.dims[t] + l;
                            let v = m.get(row, col) + a;
                            m.set(row, col, v);
                        }
                    }
                    // (Y_α f_s)[r][c] = Σ_l Y_α[r][l] f_s[l][c]
                    for l in 0..y.dims[s] {
                        let b = ya.get(r, l);
                        if !b.is_zero() {
                            let col = var_off[s] + l * x.dims[s] + c;
                            let v = m.get(row, col) - b;
                            m.set(row, col, v);
                        }
                    }
                    row += 1;
                }
            }
        }
        Ok(HomSystem {
            matrix: m.normalized(x.field)?,
            var_off,
            neqs,
        })
    }

    fn nvars(&self) -> usize {
        self.var_off[self.var_off.len() - 1]
    }
}

/// Basis of a subspace U_i ⊂ M_i at every vertex, as column matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubrepBasis {
    pub vectors: Vec<Matrix>,
}

impl SubrepBasis {
    /// Span of the given coordinate vectors at each vertex.
    pub fn coordinate(m: &Rep, coords: &[Vec<usize>]) -> Self {
        let vectors = coords
            .iter()
            .enumerate()
            .map(|(v, idx)| {
                let mut b = Matrix::zeros(m.dims[v], idx.len());
                for (j, &i) in idx.iter().enumerate() {
                    b.set(i, j, BigRational::from_integer(1.into()));
                }
                b
            })
            .collect();
        SubrepBasis { vectors }
    }

    pub fn zero(m: &Rep) -> Self {
        SubrepBasis::coordinate(m, &vec![Vec::new(); m.quiver.vertex_count()])
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.vectors.iter().map(Matrix::cols).collect())
    }
}

/// Checks independence of every basis and arrow-stability.
pub fn check_subrep(m: &Rep, u: &SubrepBasis) -> Result<()> {
    let n = m.quiver.vertex_count();
    if u.vectors.len() != n {
        return Err(Error::Dimension(format!(
            "subspace data for {} vertices, quiver has {}",
            u.vectors.len(),
            n
        )));
    }
    for (v, b) in u.vectors.iter().enumerate() {
        if b.rows() != m.dims[v] {
            return Err(Error::Dimension(format!(
                "subspace vectors at vertex {} have length {}, expected {}",
                v + 1,
                b.rows(),
                m.dims[v]
            )));
        }
        if linalg::rank(m.field, b)? != b.cols() {
            return Err(Error::Input(format!(
                "subspace basis at vertex {} is linearly dependent",
                v + 1
            )));
        }
    }
    for (k, &(s, t)) in m.quiver.arrows().iter().enumerate() {
        let img = m.maps[k].mul(m.field, &u.vectors[s])?;
        let both = u.vectors[t].hstack(&img);
        if linalg::rank(m.field, &both)? != u.vectors[t].cols() {
            return Err(Error::Stability(format!(
                "arrow {} -> {} maps U_{} outside U_{}",
                s + 1,
                t + 1,
                s + 1,
                t + 1
            )));
        }
    }
    Ok(())
}

/// Coordinate complement of the column space of `u`: the coordinates that are
/// not pivots of the row-reduced basis.
fn coordinate_complement(field: Field, u: &Matrix) -> Result<Matrix> {
    let (_, pivots) = linalg::rref(field, &u.transpose())?;
    let free: Vec<usize> = (0..u.rows()).filter(|i| !pivots.contains(i)).collect();
    let mut c = Matrix::zeros(u.rows(), free.len());
    for (j, &i) in free.iter().enumerate() {
        c.set(i, j, BigRational::from_integer(1.into()));
    }
    Ok(c)
}

/// The subrepresentation U and the quotient M/U, computed in the basis
/// (columns of U_i, columns of the complement C_i) at every vertex.
pub fn split_with_complement(
    m: &Rep,
    u: &SubrepBasis,
    complements: &[Matrix],
) -> Result<(Rep, Rep)> {
    check_subrep(m, u)?;
    let n = m.quiver.vertex_count();
    let field = m.field;
    let mut inverses = Vec::with_capacity(n);
    for v in 0..n {
        let c = &complements[v];
        if c.rows() != m.dims[v] || c.cols() + u.vectors[v].cols() != m.dims[v] {
            return Err(Error::Dimension(format!(
                "complement at vertex {} has the wrong shape",
                v + 1
            )));
        }
        let basis = u.vectors[v].hstack(c);
        let inv = linalg::inverse(field, &basis)?.ok_or_else(|| {
            Error::Input(format!("complement at vertex {} meets the subspace", v + 1))
        })?;
        inverses.push(inv);
    }
    let sub_dims = u.dim_vector();
    let quo_dims = &m.dims - &sub_dims;
    let mut sub_maps = Vec::new();
    let mut quo_maps = Vec::new();
    for (k, &(s, t)) in m.quiver.arrows().iter().enumerate() {
        let ks = sub_dims[s];
        let kt = sub_dims[t];
        let top: Vec<usize> = (0..kt).collect();
        let bottom: Vec<usize> = (kt..m.dims[t]).collect();
        let img_u = inverses[t].mul(field, &m.maps[k].mul(field, &u.vectors[s])?)?;
        sub_maps.push(img_u.select(&top, &(0..ks).collect::<Vec<_>>()));
        let img_c = inverses[t].mul(field, &m.maps[k].mul(field, &complements[s])?)?;
        quo_maps.push(img_c.select(&bottom, &(0..quo_dims[s]).collect::<Vec<_>>()));
    }
    let sub = Rep::new(m.quiver.clone(), field, sub_dims, sub_maps)?;
    let quo = Rep::new(m.quiver.clone(), field, quo_dims, quo_maps)?;
    Ok((sub, quo))
}

/// Subrepresentation and quotient using coordinate complements.
pub fn split(m: &Rep, u: &SubrepBasis) -> Result<(Rep, Rep)> {
    check_subrep(m, u)?;
    let complements = u
        .vectors
        .iter()
        .map(|b| coordinate_complement(m.field, b))
        .collect::<Result<Vec<_>>>()?;
    split_with_complement(m, u, &complements)
}

pub fn quotient_rep(m: &Rep, u: &SubrepBasis) -> Result<Rep> {
    split(m, u).map(|(_, q)| q)
}

/// dim T_U Gr_e(M) = dim Hom_Q(U, M/U).
pub fn tangent_dim(m: &Rep, u: &SubrepBasis) -> Result<usize> {
    let (sub, quo) = split(m, u)?;
    Ok(hom_ext_dims(&sub, &quo)?.hom)
}

/// dim Hom_Q(N, M) − dim End_Q(N). Negative values mean N cannot embed in M
/// and are returned unchanged.
pub fn stratum_dim_of_class(n: &Rep, m: &Rep) -> Result<i64> {
    let hom = hom_ext_dims(n, m)?.hom as i64;
    let end = hom_ext_dims(n, n)?.hom as i64;
    Ok(hom - end)
}
