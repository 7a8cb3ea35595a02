//! JSON wire formats: groups, cocycles, Bisch–Haagerup setups and
//! representations.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{Label, StarAlgebra};
use crate::coho::BHSetup;
use crate::error::{Error, Result};
use crate::grp::{group_from_permutations, group_from_table, GroupTable};
use crate::phase::{Cocycle3, Phase};
use crate::rep::{CMatrix, Representation};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupFile {
    Table {
        order: usize,
        mult: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Perm {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupFile {
    pub fn build(&self) -> Result<GroupTable> {
        match self {
            GroupFile::Table { order, mult, names } => {
                let g = group_from_table(*order, mult)?;
                match names {
                    Some(n) => g.with_names(n.clone()),
                    None => Ok(g),
                }
            }
            GroupFile::Perm { degree, generators } => group_from_permutations(*degree, generators),
        }
    }

    pub fn from_group(g: &GroupTable) -> GroupFile {
        GroupFile::Table { order: g.order(), mult: g.table(), names: g.names().map(<[String]>::to_vec) }
    }
}

/// `{"modulus": N, "values": [k, …]}`, entry `k` meaning the phase `k/N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub modulus: i64,
    pub values: Vec<i64>,
}

impl CocycleFile {
    /// The table for a group of order `n`.
    pub fn build(&self, n: usize) -> Result<Cocycle3> {
        if self.modulus <= 0 {
            return Err(Error::format("cocycle modulus must be positive"));
        }
        let values = self.values.iter().map(|&k| Phase::new(k, self.modulus)).collect();
        Cocycle3::from_values(n, values)
    }

    pub fn from_cocycle(w: &Cocycle3) -> CocycleFile {
        let m = w.modulus();
        CocycleFile { modulus: m, values: w.values().iter().map(|p| p.numer() * (m / p.denom())).collect() }
    }
}

/// Either an inline payload or a path relative to the referring file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Inline<T> {
    Path(String),
    Value(T),
}

impl<T: for<'de> Deserialize<'de> + Clone> Inline<T> {
    fn resolve(&self, base: Option<&Path>) -> Result<T> {
        match self {
            Inline::Value(v) => Ok(v.clone()),
            Inline::Path(p) => {
                let path = base.map_or_else(|| Path::new(p).to_path_buf(), |b| b.join(p));
                read_json(&path)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BHFile {
    pub group: Inline<GroupFile>,
    #[serde(rename = "H")]
    pub h: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub cocycle: Inline<CocycleFile>,
}

impl BHFile {
    /// `base` resolves relative paths of referenced files.
    pub fn build(&self, base: Option<&Path>) -> Result<BHSetup> {
        let g = self.group.resolve(base)?.build()?;
        let n = g.order();
        if let Some(&x) = self.h.iter().chain(&self.k).find(|&&x| x >= n) {
            return Err(Error::format(format!("subgroup element {x} out of range")));
        }
        let w = self.cocycle.resolve(base)?.build(n)?;
        BHSetup::new(g, self.h.clone(), self.k.clone(), w)
    }

    pub fn from_setup(s: &BHSetup) -> BHFile {
        BHFile {
            group: Inline::Value(GroupFile::from_group(&s.group)),
            h: s.h.clone(),
            k: s.k.clone(),
            cocycle: Inline::Value(CocycleFile::from_cocycle(&s.omega)),
        }
    }
}

/// `{"dimension": d, "matrices": {"(…)": [[[re, im], …], …]}}`, rows first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub dimension: usize,
    pub matrices: BTreeMap<String, Vec<Vec<[f64; 2]>>>,
}

impl RepFile {
    pub fn from_rep<A: StarAlgebra>(alg: &A, rep: &Representation) -> RepFile {
        let matrices = alg
            .basis()
            .iter()
            .zip(&rep.matrices)
            .map(|(l, m)| {
                let rows = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect();
                (l.tuple(), rows)
            })
            .collect();
        RepFile { dimension: rep.dimension, matrices }
    }

    /// Every basis label must be present; absent labels are an error rather
    /// than an implicit zero.
    pub fn build<A: StarAlgebra>(&self, alg: &A) -> Result<Representation> {
        let d = self.dimension;
        let known: std::collections::HashSet<String> = alg.basis().iter().map(Label::tuple).collect();
        if let Some(k) = self.matrices.keys().find(|k| !known.contains(*k)) {
            return Err(Error::format(format!("unknown basis label {k}")));
        }
        let matrices = alg
            .basis()
            .iter()
            .map(|l| {
                let rows = self.matrices.get(&l.tuple()).ok_or_else(|| Error::format(format!("missing label {}", l.tuple())))?;
                if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                    return Err(Error::format(format!("matrix for {} is not {d}×{d}", l.tuple())));
                }
                Ok(CMatrix::from_fn(d, d, |i, j| Complex64::new(rows[i][j][0], rows[i][j][1])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { dimension: d, matrices })
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::format(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::format(format!("{}: {e}", path.display())))
}
