//! On-disk JSON formats: algebra files, involution sidecars, and twisting
//! matrix blocks.
//!
//! Serialization is deterministic: sparse entries are emitted in row-major
//! (i, j) order with coefficient lists sorted by target index and zeros
//! omitted, so identical algebras produce byte-identical files.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linmap::LinearMap;
use crate::scalar::Field;

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    name: String,
    scalars: Field,
    dim: usize,
    labels: Vec<String>,
    table: TableFile,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
    /// Entries [i, j, [[k, "coef"], ...]]; omitted (i, j) pairs are zero
    /// products.
    sparse: Vec<(usize, usize, Vec<(usize, String)>)>,
}

/// Renders an algebra to the canonical JSON file format.
pub fn algebra_to_json(alg: &Algebra) -> String {
    let mut sparse = Vec::new();
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            let coefs: Vec<(usize, String)> = (0..alg.dim)
                .filter(|&k| !alg.c(i, j, k).is_zero())
                .map(|k| (k, alg.c(i, j, k).render()))
                .collect();
            if !coefs.is_empty() {
                sparse.push((i, j, coefs));
            }
        }
    }
    let file = AlgebraFile {
        name: alg.name.clone(),
        scalars: alg.field,
        dim: alg.dim,
        labels: alg.labels.clone(),
        table: TableFile { sparse },
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

/// Parses and validates an algebra file.
pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::BadFile(e.to_string()))?;
    if file.dim == 0 {
        return Err(Error::BadFile("dim must be positive".into()));
    }
    if file.labels.len() != file.dim {
        return Err(Error::BadFile(format!(
            "expected {} labels, found {}",
            file.dim,
            file.labels.len()
        )));
    }
    if let Field::Gfp { p } = file.scalars {
        Field::prime(p)?;
    }
    let field = file.scalars;
    let n = file.dim;
    let mut table = vec![field.zero(); n * n * n];
    let mut seen = vec![false; n * n];
    for (i, j, coefs) in &file.table.sparse {
        if *i >= n || *j >= n {
            return Err(Error::BadFile(format!(
                "table entry ({i}, {j}) out of range for dim {n}"
            )));
        }
        if std::mem::replace(&mut seen[i * n + j], true) {
            return Err(Error::BadFile(format!("duplicate table entry ({i}, {j})")));
        }
        for (k, coef) in coefs {
            if *k >= n {
                return Err(Error::BadFile(format!(
                    "target index {k} out of range for dim {n}"
                )));
            }
            let c = field
                .parse(coef)
                .map_err(|e| Error::BadFile(format!("bad coefficient {coef:?}: {e}")))?;
            table[(i * n + j) * n + k] = c;
        }
    }
    Algebra::new(file.name, field, n, file.labels, table)
}

#[derive(Debug, Serialize, Deserialize)]
struct SigmaFile {
    /// Row-major matrix of scalar strings; column j is sigma(e_j).
    sigma: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TwistFile {
    /// Row-major matrix of the twisting map, domain index j*dim(A)+i.
    #[serde(rename = "R")]
    r: Vec<Vec<String>>,
}

fn matrix_rows(m: &LinearMap) -> Vec<Vec<String>> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.get(i, j).render()).collect())
        .collect()
}

fn matrix_from_rows(field: Field, rows: &[Vec<String>]) -> Result<LinearMap> {
    let nrows = rows.len();
    if nrows == 0 {
        return Err(Error::BadFile("empty matrix".into()));
    }
    let ncols = rows[0].len();
    let mut m = LinearMap::zero(field, nrows, ncols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(Error::BadFile("ragged matrix rows".into()));
        }
        for (j, cell) in row.iter().enumerate() {
            let s = field
                .parse(cell)
                .map_err(|e| Error::BadFile(format!("bad matrix entry {cell:?}: {e}")))?;
            m.set(i, j, s);
        }
    }
    Ok(m)
}

/// Renders an involution (or any square map) as the sigma sidecar block.
pub fn sigma_to_json(m: &LinearMap) -> String {
    let mut out = serde_json::to_string_pretty(&SigmaFile {
        sigma: matrix_rows(m),
    })
    .expect("serializable");
    out.push('\n');
    out
}

pub fn sigma_from_json(field: Field, text: &str) -> Result<LinearMap> {
    let file: SigmaFile =
        serde_json::from_str(text).map_err(|e| Error::BadFile(e.to_string()))?;
    matrix_from_rows(field, &file.sigma)
}

/// Renders a twisting map matrix as the `{"R": [[...]]}` block.
pub fn twist_to_json(m: &LinearMap) -> String {
    let mut out = serde_json::to_string_pretty(&TwistFile {
        r: matrix_rows(m),
    })
    .expect("serializable");
    out.push('\n');
    out
}

pub fn twist_from_json(field: Field, text: &str) -> Result<LinearMap> {
    let file: TwistFile =
        serde_json::from_str(text).map_err(|e| Error::BadFile(e.to_string()))?;
    matrix_from_rows(field, &file.r)
}

/// Sidecar path convention: `foo.json` -> `foo.sigma.json` (a missing
/// `.json` suffix just appends).
pub fn sidecar_path(path: &std::path::Path) -> std::path::PathBuf {
    let stem = path
        .to_str()
        .map(|s| s.strip_suffix(".json").unwrap_or(s).to_string())
        .unwrap_or_else(|| path.display().to_string());
    std::path::PathBuf::from(format!("{stem}.sigma.json"))
}
