//! `--rep` values and the on-disk representation cache.

use std::env;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use hamlie_core::reps::{fundamental_rep, Representation};
use hamlie_core::SpAlgebra;

use crate::formats::{self, FormatError};

/// Environment variable naming the representation cache directory.
pub const CACHE_ENV: &str = "HAMLIE_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepSpec {
    Trivial,
    Natural,
    /// `V(δ_k)`, realized inside `Λ^k` for `k ≥ 2`
    Fundamental(usize),
    /// `Sym^k` of the natural module
    Sym(usize),
    /// `Λ^k` of the natural module
    Exterior(usize),
    File(PathBuf),
}

impl FromStr for RepSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let degree = |k: &str| {
            k.parse::<usize>()
                .map_err(|_| format!("`{s}`: expected a non-negative integer after `:`"))
        };
        match s.split_once(':') {
            None if s == "trivial" => Ok(Self::Trivial),
            None if s == "natural" => Ok(Self::Natural),
            Some(("fundamental", k)) => degree(k).map(Self::Fundamental),
            Some(("sym", k)) => degree(k).map(Self::Sym),
            Some(("exterior", k)) => degree(k).map(Self::Exterior),
            Some(("file", p)) if !p.is_empty() => Ok(Self::File(PathBuf::from(p))),
            _ => Err(format!(
                "unknown representation `{s}` (expected natural, trivial, fundamental:k, sym:k, exterior:k or file:path)"
            )),
        }
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trivial => f.write_str("trivial"),
            Self::Natural => f.write_str("natural"),
            Self::Fundamental(k) => write!(f, "fundamental:{k}"),
            Self::Sym(k) => write!(f, "sym:{k}"),
            Self::Exterior(k) => write!(f, "exterior:{k}"),
            Self::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl RepSpec {
    /// Builds the representation from scratch.
    pub fn build(&self, alg: &Arc<SpAlgebra>) -> Result<Representation, FormatError> {
        let natural = || Representation::natural(alg.clone());
        Ok(match self {
            Self::Trivial => Representation::trivial(alg.clone()),
            Self::Natural => natural(),
            Self::Fundamental(k) => fundamental_rep(alg, *k)?,
            Self::Sym(k) => natural().symmetric_power(*k)?,
            Self::Exterior(k) => natural().exterior_power(*k)?,
            Self::File(p) => formats::deserialize_rep(p, Some(alg.clone()))?,
        })
    }

    fn cache_name(&self, n: usize) -> Option<String> {
        let key = match self {
            Self::File(_) => return None,
            other => other.to_string().replace(':', "-"),
        };
        Some(format!("rep-n{n}-{key}.json"))
    }

    /// Like [`RepSpec::build`], going through `$HAMLIE_CACHE_DIR` when set.
    /// Unreadable cache entries are rebuilt and overwritten.
    pub fn resolve(&self, alg: &Arc<SpAlgebra>) -> Result<Representation, FormatError> {
        let dir = env::var_os(CACHE_ENV).filter(|d| !d.is_empty());
        let (Some(dir), Some(name)) = (dir, self.cache_name(alg.rank())) else {
            return self.build(alg);
        };
        let path = PathBuf::from(dir).join(name);
        if path.exists() {
            if let Ok(rep) = formats::deserialize_rep(&path, Some(alg.clone())) {
                return Ok(rep);
            }
        }
        let rep = self.build(alg)?;
        formats::serialize_rep(&rep, &path)?;
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["trivial", "natural", "fundamental:2", "sym:2", "exterior:3", "file:/tmp/x.json"] {
            assert_eq!(s.parse::<RepSpec>().unwrap().to_string(), s);
        }
        for s in ["", "sym", "sym:x", "adjoint", "file:"] {
            assert!(s.parse::<RepSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn builds_expected_dims() {
        let alg = Arc::new(SpAlgebra::new(2).unwrap());
        let dim = |s: &str| s.parse::<RepSpec>().unwrap().build(&alg).unwrap().dim();
        assert_eq!(dim("trivial"), 1);
        assert_eq!(dim("natural"), 4);
        assert_eq!(dim("fundamental:2"), 5);
        assert_eq!(dim("sym:2"), 10);
        assert_eq!(dim("exterior:2"), 6);
    }
}
