use std::fs;
use std::path::PathBuf;

use clap::Args;
use qgdf::repfile::{parse_dim_vector, RepFile};
use qgdf::typea::{build_pi, flag_to_pi, FlagSpec, PIConfig};
use qgdf::{DimVector, Rep};

use crate::CliError;

/// Type-A input: a complete flag, a partial flag, or explicit multiplicities.
#[derive(Args, Debug, Clone)]
pub struct TypeAInput {
    /// Complete flag on A_N
    #[arg(long, value_name = "N")]
    pub type_a: Option<usize>,
    /// Flag steps d1,...,ds (with --ambient)
    #[arg(long, value_name = "D1,D2,...", requires = "ambient")]
    pub flag: Option<String>,
    /// Ambient dimension n+1 of a partial flag
    #[arg(long, value_name = "N+1", requires = "flag")]
    pub ambient: Option<usize>,
    /// Multiplicities a_1,...,a_n of the projectives (with --b)
    #[arg(long, value_name = "A1,...", requires = "b")]
    pub a: Option<String>,
    /// Multiplicities b_1,...,b_n of the injectives (with --a)
    #[arg(long, value_name = "B1,...", requires = "a")]
    pub b: Option<String>,
}

/// Any input: type A as above, or a representation file with a dimension vector.
#[derive(Args, Debug, Clone)]
pub struct AnyInput {
    #[command(flatten)]
    pub type_a: TypeAInput,
    /// Representation file (JSON)
    #[arg(long, value_name = "FILE", requires = "e")]
    pub rep: Option<PathBuf>,
    /// Dimension vector of the subrepresentations, e.g. 1,2,1,1
    #[arg(long, value_name = "E1,...")]
    pub e: Option<String>,
}

pub enum Resolved {
    TypeA(PIConfig),
    File {
        rep: Rep,
        e: DimVector,
        file: Box<RepFile>,
    },
}

impl Resolved {
    pub fn rep(&self) -> Result<Rep, CliError> {
        match self {
            Resolved::TypeA(cfg) => Ok(build_pi(cfg)?),
            Resolved::File { rep, .. } => Ok(rep.clone()),
        }
    }

    pub fn e(&self) -> DimVector {
        match self {
            Resolved::TypeA(cfg) => cfg.dim_p(),
            Resolved::File { e, .. } => e.clone(),
        }
    }
}

fn list(s: &str) -> Result<Vec<usize>, CliError> {
    Ok(parse_dim_vector(s)?.0)
}

impl TypeAInput {
    fn given(&self) -> usize {
        self.type_a.is_some() as usize + self.flag.is_some() as usize + self.a.is_some() as usize
    }

    pub fn resolve(&self) -> Result<PIConfig, CliError> {
        match self.given() {
            0 => return Err(CliError::Usage("give one of --type-a, --flag/--ambient, --a/--b".into())),
            1 => {}
            _ => return Err(CliError::Usage("give exactly one input".into())),
        }
        if let Some(n) = self.type_a {
            return Ok(PIConfig::complete_flag(n)?);
        }
        if let (Some(flag), Some(ambient)) = (&self.flag, self.ambient) {
            return Ok(flag_to_pi(&FlagSpec::new(ambient, list(flag)?)?));
        }
        let (a, b) = (self.a.as_deref().unwrap_or(""), self.b.as_deref().unwrap_or(""));
        Ok(PIConfig::new(list(a)?, list(b)?)?)
    }
}

impl AnyInput {
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        match (&self.rep, self.type_a.given()) {
            (Some(_), n) if n > 0 => Err(CliError::Usage("give exactly one input".into())),
            (Some(path), _) => {
                let text = fs::read_to_string(path)
                    .map_err(|err| CliError::Input(format!("{}: {}", path.display(), err)))?;
                let file = RepFile::from_json(&text)?;
                let rep = file.to_rep()?;
                let e = parse_dim_vector(self.e.as_deref().unwrap_or(""))?;
                rep.quiver().check_dims(&e)?;
                Ok(Resolved::File {
                    rep,
                    e,
                    file: Box::new(file),
                })
            }
            (None, _) => {
                if self.e.is_some() {
                    return Err(CliError::Usage("--e goes with --rep".into()));
                }
                self.type_a.resolve().map(Resolved::TypeA)
            }
        }
    }
}
