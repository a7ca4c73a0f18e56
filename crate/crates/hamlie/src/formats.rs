//! JSON formats for matrices, algebras, representations and truncated
//! families. Rationals are strings `"p/q"` (`"p"` when `q = 1`).

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use hamlie_core::reps::Representation;
use hamlie_core::submodules::{LatticeBox, TruncatedModule};
use hamlie_core::{Generator, ModuleParams, Scalar, SparseMatrix, SpAlgebra, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Core(#[from] hamlie_core::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn field(name: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Field {
        field: name.into(),
        message: message.to_string(),
    }
}

fn parse_scalar(name: &str, s: &str) -> Result<Scalar> {
    s.parse().map_err(|e| field(name, e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl From<&SparseMatrix> for MatrixJson {
    fn from(m: &SparseMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().map(|(i, j, x)| (i, j, x.to_string())).collect(),
        }
    }
}

impl MatrixJson {
    /// `name` prefixes error messages.
    pub fn to_matrix(&self, name: &str) -> Result<SparseMatrix> {
        let mut triplets = Vec::with_capacity(self.entries.len());
        for (k, (i, j, x)) in self.entries.iter().enumerate() {
            let at = format!("{name}.entries[{k}]");
            if *i >= self.rows || *j >= self.cols {
                return Err(field(at, format!("({i}, {j}) outside {}x{}", self.rows, self.cols)));
            }
            let x = parse_scalar(&at, x)?;
            if x.is_zero() {
                return Err(field(at, "explicit zero entry"));
            }
            triplets.push((*i, *j, x));
        }
        SparseMatrix::from_triplets(self.rows, self.cols, triplets).map_err(|e| field(name, e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub n: usize,
    pub labels: Vec<String>,
    pub matrices: Vec<MatrixJson>,
}

impl From<&SpAlgebra> for AlgebraJson {
    fn from(alg: &SpAlgebra) -> Self {
        Self {
            n: alg.rank(),
            labels: alg.labels().iter().map(ToString::to_string).collect(),
            matrices: alg.matrices().iter().map(MatrixJson::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepJson {
    pub n: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    /// keyed by generator label (`h_1`, `X_{e1-e2}`, ...)
    pub action: BTreeMap<String, MatrixJson>,
}

impl From<&Representation> for RepJson {
    fn from(rep: &Representation) -> Self {
        let alg = rep.algebra();
        Self {
            n: alg.rank(),
            dim: rep.dim(),
            labels: rep.labels().to_vec(),
            weights: rep.weights().to_vec(),
            action: alg
                .labels()
                .iter()
                .zip(rep.action())
                .map(|(g, m)| (g.to_string(), MatrixJson::from(m)))
                .collect(),
        }
    }
}

impl RepJson {
    /// Rebuilds the representation on `alg` (built when `None`).
    pub fn to_rep(&self, alg: Option<Arc<SpAlgebra>>) -> Result<Representation> {
        let alg = match alg {
            Some(a) if a.rank() == self.n => a,
            Some(a) => return Err(field("n", format!("expected {}, found {}", a.rank(), self.n))),
            None => Arc::new(SpAlgebra::new(self.n).map_err(|e| field("n", e))?),
        };
        if self.labels.len() != self.dim {
            return Err(field("labels", format!("{} labels for dim {}", self.labels.len(), self.dim)));
        }
        if self.weights.len() != self.dim {
            return Err(field("weights", format!("{} weights for dim {}", self.weights.len(), self.dim)));
        }
        if self.action.len() != alg.dim() {
            return Err(field(
                "action",
                format!("{} matrices, sp(2n) has {} basis elements", self.action.len(), alg.dim()),
            ));
        }
        let mut action = Vec::with_capacity(alg.dim());
        for g in alg.labels() {
            let key = g.to_string();
            let m = self
                .action
                .get(&key)
                .ok_or_else(|| field("action", format!("missing generator {key}")))?;
            let at = format!("action.{key}");
            if m.rows != self.dim || m.cols != self.dim {
                return Err(field(at, format!("shape {}x{}, expected {d}x{d}", m.rows, m.cols, d = self.dim)));
            }
            action.push(m.to_matrix(&at)?);
        }
        for key in self.action.keys() {
            key.parse::<Generator>().map_err(|e| field(format!("action.{key}"), e))?;
        }
        let rep = Representation::new(alg, self.labels.clone(), action, self.weights.clone())?;
        if let Some((a, b)) = rep.bracket_violations().first() {
            return Err(field("action", format!("bracket of {a} and {b} is not preserved")));
        }
        Ok(rep)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes `contents` through a temporary file and a rename, so readers
/// never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, contents).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn rep_to_string(rep: &Representation) -> String {
    to_json(&RepJson::from(rep))
}

pub fn rep_from_str(s: &str, alg: Option<Arc<SpAlgebra>>) -> Result<Representation> {
    serde_json::from_str::<RepJson>(s)?.to_rep(alg)
}

pub fn serialize_rep(rep: &Representation, path: &Path) -> Result<()> {
    write_atomic(path, &rep_to_string(rep))
}

pub fn deserialize_rep(path: &Path, alg: Option<Arc<SpAlgebra>>) -> Result<Representation> {
    rep_from_str(&read(path)?, alg)
}

/// Grade-indexed family. Grades whose space is zero are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncatedModuleJson {
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    pub rep_ref: String,
    pub box_radius: i64,
    /// `"a,b,..."` to RREF basis rows
    pub spaces: BTreeMap<String, Vec<Vec<String>>>,
}

impl TruncatedModuleJson {
    pub fn new(family: &TruncatedModule, rep_ref: &str) -> Self {
        let strings = |v: &[Scalar]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let lattice = family.lattice();
        let spaces = lattice
            .grades()
            .zip(family.spaces())
            .filter(|(_, s)| !s.is_zero())
            .map(|(g, s)| (hamlie_core::report::join(&g), s.basis().iter().map(|b| strings(b)).collect()))
            .collect();
        Self {
            alpha: strings(family.params().alpha()),
            beta: strings(family.params().beta()),
            rep_ref: rep_ref.to_string(),
            box_radius: lattice.radius(),
            spaces,
        }
    }

    /// Rebuilds the family over `rep`, which the caller resolves from
    /// `rep_ref`.
    pub fn to_family(&self, rep: Arc<Representation>) -> Result<TruncatedModule> {
        let vector = |name: &str, v: &[String]| -> Result<Vec<Scalar>> {
            v.iter().map(|x| parse_scalar(name, x)).collect()
        };
        let params = ModuleParams::new(rep, vector("alpha", &self.alpha)?, vector("beta", &self.beta)?)
            .map_err(|e| field("alpha", e))?;
        let dim = params.rep().dim();
        let lattice = LatticeBox::new(params.lattice_dim(), self.box_radius).map_err(|e| field("box_radius", e))?;
        let mut family = TruncatedModule::zero(params, lattice);
        for (key, rows) in &self.spaces {
            let at = format!("spaces.{key}");
            let grade = key
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| field(&at, e))?;
            let vectors = rows
                .iter()
                .map(|r| {
                    if r.len() == dim {
                        vector(&at, r)
                    } else {
                        Err(field(&at, format!("row of length {}, expected {dim}", r.len())))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let space = Subspace::from_vectors(dim, vectors).map_err(|e| field(&at, e))?;
            if space.basis() != &rows.iter().map(|r| vector(&at, r)).collect::<Result<Vec<_>>>()?[..] {
                return Err(field(&at, "basis rows are not in canonical reduced echelon form"));
            }
            family.set_space(&grade, space).map_err(|e| field(&at, e))?;
        }
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hamlie_core::reps::fundamental_rep;
    use hamlie_core::scalar::q;

    #[test]
    fn matrix_format() {
        let m = SparseMatrix::from_triplets(2, 3, vec![(0, 2, q(-1, 2)), (1, 0, Scalar::from_int(3))]).unwrap();
        let j = MatrixJson::from(&m);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"rows":2,"cols":3,"entries":[[0,2,"-1/2"],[1,0,"3"]]}"#
        );
        assert_eq!(j.to_matrix("m").unwrap(), m);
        let bad = MatrixJson {
            rows: 1,
            cols: 1,
            entries: vec![(0, 1, "1".into())],
        };
        assert!(bad.to_matrix("m").unwrap_err().to_string().contains("m.entries[0]"));
    }

    #[test]
    fn rep_round_trip() {
        let alg = Arc::new(SpAlgebra::new(2).unwrap());
        for k in [1, 2] {
            let rep = fundamental_rep(&alg, k).unwrap();
            let s = rep_to_string(&rep);
            let back = rep_from_str(&s, None).unwrap();
            assert_eq!(back, rep);
            assert_eq!(rep_to_string(&back), s);
        }
    }

    #[test]
    fn corrupted_rep_names_field() {
        let alg = Arc::new(SpAlgebra::new(1).unwrap());
        let mut j = RepJson::from(&Representation::natural(alg));
        j.weights.pop();
        let err = j.to_rep(None).unwrap_err().to_string();
        assert!(err.contains("weights"), "{err}");
        let s = rep_to_string(&j.to_rep(None).unwrap_or_else(|_| {
            Representation::natural(Arc::new(SpAlgebra::new(1).unwrap()))
        }));
        let err = rep_from_str(&s[..s.len() / 2], None).unwrap_err();
        assert!(matches!(err, FormatError::Json(_)));
    }
}
