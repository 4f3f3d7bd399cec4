//! Structure-constant algebras with the fixed decomposition K.1 (+) A0.
//!
//! An algebra is a dense table c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.
//! Basis index 0 is always the unit; A0 is the span of the remaining basis
//! vectors. Everything is immutable after construction.

use crate::error::{Error, Result};
use crate::linmap::{vec_is_zero, vec_unit, vec_zero, LinearMap};
use crate::report::{CheckReport, Witness};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub labels: Vec<String>,
    table: Vec<Scalar>, // dim^3, index (i * dim + j) * dim + k
}

/// An element is its coordinate vector in the algebra's basis.
pub type Element = Vec<Scalar>;

impl Algebra {
    /// Builds an algebra from a dense table, verifying the unit convention
    /// c[0][j][k] = delta_jk, c[i][0][k] = delta_ik.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        labels: Vec<String>,
        table: Vec<Scalar>,
    ) -> Result<Algebra> {
        assert!(dim >= 1);
        assert_eq!(labels.len(), dim);
        assert_eq!(table.len(), dim * dim * dim);
        let alg = Algebra {
            name: name.into(),
            field,
            dim,
            labels,
            table,
        };
        for j in 0..dim {
            if !vec_is_zero(&crate::linmap::vec_sub(
                &alg.basis_product(0, j),
                &vec_unit(field, dim, j),
            )) {
                return Err(Error::UnitConventionViolated { i: 0, j });
            }
            if !vec_is_zero(&crate::linmap::vec_sub(
                &alg.basis_product(j, 0),
                &vec_unit(field, dim, j),
            )) {
                return Err(Error::UnitConventionViolated { i: j, j: 0 });
            }
        }
        Ok(alg)
    }

    /// Convenience constructor from integer structure constants given as a
    /// sparse list of (i, j, k, value).
    pub fn from_sparse_int(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        labels: Vec<String>,
        entries: &[(usize, usize, usize, i64)],
    ) -> Result<Algebra> {
        let mut table = vec![field.zero(); dim * dim * dim];
        for &(i, j, k, v) in entries {
            table[(i * dim + j) * dim + k] = field.int(v);
        }
        Algebra::new(name, field, dim, labels, table)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let base = (i * self.dim + j) * self.dim;
        self.table[base..base + self.dim].to_vec()
    }

    pub fn zero(&self) -> Element {
        vec_zero(self.field, self.dim)
    }

    pub fn unit(&self) -> Element {
        vec_unit(self.field, self.dim, 0)
    }

    pub fn basis(&self, i: usize) -> Element {
        vec_unit(self.field, self.dim, i)
    }

    /// Table-contraction product z_k = sum_ij x_i y_j c[i][j][k].
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi.mul(yj);
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].add(&f.mul(c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise equality of structure constants, ignoring names and labels.
    pub fn table_eq(&self, other: &Algebra) -> bool {
        self.dim == other.dim && self.table == other.table
    }

    /// Membership in the distinguished complement A0 = span(e_1..e_{n-1}).
    pub fn in_a0(&self, x: &[Scalar]) -> bool {
        x[0].is_zero()
    }

    pub fn render_element(&self, x: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.labels[i];
            if i == 0 {
                parts.push(c.render());
            } else if c.is_one() {
                parts.push(label.clone());
            } else {
                parts.push(format!("{}*{}", c.render(), label));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// A verified algebra involution: a unital antiautomorphism with square id.
#[derive(Debug, Clone)]
pub struct Involution {
    pub map: LinearMap,
}

impl Involution {
    /// Verifies the involution axioms and wraps the map; fails with the
    /// check report's detail otherwise.
    pub fn verify(alg: &Algebra, map: LinearMap) -> Result<Involution> {
        let report = check_involution(alg, &map)?;
        if !report.passed() {
            return Err(Error::InvolutionNotVerified(report.detail));
        }
        Ok(Involution { map })
    }

    pub fn identity(alg: &Algebra) -> Involution {
        Involution {
            map: LinearMap::identity(alg.field, alg.dim),
        }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(x).expect("involution dimension")
    }
}

/// Checks sigma^2 = id, sigma(e_0) = e_0 and antimultiplicativity on all
/// basis pairs (sufficient by bilinearity).
pub fn check_involution(alg: &Algebra, m: &LinearMap) -> Result<CheckReport> {
    if m.rows != alg.dim || m.cols != alg.dim {
        return Err(Error::DimensionMismatch {
            expected: alg.dim,
            got: m.rows,
        });
    }
    let prop = "involution";
    if !m.compose(m)?.is_identity() {
        return Ok(CheckReport::fail(
            prop,
            Witness::Indices(vec![]),
            "sigma^2 != id",
        ));
    }
    if m.col(0) != alg.unit() {
        return Ok(CheckReport::fail(
            prop,
            Witness::Indices(vec![0]),
            "sigma(e0) != e0",
        ));
    }
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            let lhs = m.apply(&alg.basis_product(i, j))?;
            let rhs = alg.mul(&m.col(j), &m.col(i))?;
            if lhs != rhs {
                return Ok(CheckReport::fail(
                    prop,
                    Witness::Indices(vec![i, j]),
                    format!(
                        "sigma(e{i}*e{j}) = {} but sigma(e{j})*sigma(e{i}) = {}",
                        alg.render_element(&lhs),
                        alg.render_element(&rhs)
                    ),
                ));
            }
        }
    }
    Ok(CheckReport::pass(
        prop,
        "unital antiautomorphism with square id",
    ))
}

/// Checks that a map is an involutive algebra *automorphism* (the Clifford
/// process wants this rather than an antiautomorphism).
pub fn check_involutive_automorphism(alg: &Algebra, m: &LinearMap) -> Result<CheckReport> {
    if m.rows != alg.dim || m.cols != alg.dim {
        return Err(Error::DimensionMismatch {
            expected: alg.dim,
            got: m.rows,
        });
    }
    let prop = "involutive-automorphism";
    if !m.compose(m)?.is_identity() {
        return Ok(CheckReport::fail(
            prop,
            Witness::Indices(vec![]),
            "sigma^2 != id",
        ));
    }
    if m.col(0) != alg.unit() {
        return Ok(CheckReport::fail(
            prop,
            Witness::Indices(vec![0]),
            "sigma(e0) != e0",
        ));
    }
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            let lhs = m.apply(&alg.basis_product(i, j))?;
            let rhs = alg.mul(&m.col(i), &m.col(j))?;
            if lhs != rhs {
                return Ok(CheckReport::fail(
                    prop,
                    Witness::Indices(vec![i, j]),
                    "sigma is not multiplicative at this basis pair",
                ));
            }
        }
    }
    Ok(CheckReport::pass(prop, "unital automorphism with square id"))
}

/// Trace and norm data of a strong involution: x + sigma(x) = t(x) 1 and
/// x sigma(x) = sigma(x) x = n(x) 1.
#[derive(Debug, Clone)]
pub struct StrongInvolutionData {
    pub involution: Involution,
    /// t(e_i) for each basis vector; t is linear.
    pub trace: Vec<Scalar>,
    /// Gram matrix of the polar form (e_i, e_j) = 1/2 (n(e_i+e_j) - n(e_i) - n(e_j)).
    pub gram: LinearMap,
}

impl StrongInvolutionData {
    pub fn trace_of(&self, x: &[Scalar]) -> Scalar {
        let mut t = self.trace[0].field().zero();
        for (xi, ti) in x.iter().zip(&self.trace) {
            t = t.add(&xi.mul(ti));
        }
        t
    }

    /// n(x) = x^T G x.
    pub fn norm_of(&self, x: &[Scalar]) -> Scalar {
        let gx = self.gram.apply(x).expect("gram dimension");
        let mut n = self.trace[0].field().zero();
        for (xi, gi) in x.iter().zip(&gx) {
            n = n.add(&xi.mul(gi));
        }
        n
    }
}

/// Extracts trace and norm from a verified involution, failing with the
/// offending basis index if the involution is not strong.
///
/// Scalarity of x sigma(x) for *all* x is certified by polarization:
/// e_i sigma(e_j) + e_j sigma(e_i) must be scalar for every basis pair, and
/// must agree with the same expression multiplied in the opposite order.
pub fn strong_involution_data(alg: &Algebra, s: &Involution) -> Result<StrongInvolutionData> {
    let field = alg.field;
    let mut trace = Vec::with_capacity(alg.dim);
    for i in 0..alg.dim {
        let v = crate::linmap::vec_add(&alg.basis(i), &s.map.col(i));
        if !v[1..].iter().all(|c| c.is_zero()) {
            return Err(Error::NotStrong(i));
        }
        trace.push(v[0].clone());
    }
    let mut gram = LinearMap::zero(field, alg.dim, alg.dim);
    for i in 0..alg.dim {
        for j in i..alg.dim {
            let polarized = crate::linmap::vec_add(
                &alg.mul(&alg.basis(i), &s.map.col(j))?,
                &alg.mul(&alg.basis(j), &s.map.col(i))?,
            );
            let flipped = crate::linmap::vec_add(
                &alg.mul(&s.map.col(j), &alg.basis(i))?,
                &alg.mul(&s.map.col(i), &alg.basis(j))?,
            );
            if !polarized[1..].iter().all(|c| c.is_zero()) || polarized != flipped {
                return Err(Error::NotStrong(i.max(j)));
            }
            let entry = polarized[0].half();
            gram.set(i, j, entry.clone());
            gram.set(j, i, entry);
        }
    }
    Ok(StrongInvolutionData {
        involution: s.clone(),
        trace,
        gram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn base_field_algebra() -> Algebra {
        Algebra::from_sparse_int("K", Field::rationals(), 1, vec!["1".into()], &[(0, 0, 0, 1)])
            .unwrap()
    }

    fn complex_algebra() -> Algebra {
        // C(K,-1): e1*e1 = -e0
        Algebra::from_sparse_int(
            "C(K,-1)",
            Field::rationals(),
            2,
            vec!["1".into(), "v".into()],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1)],
        )
        .unwrap()
    }

    #[test]
    fn one_dimensional_base_field() {
        let k = base_field_algebra();
        assert_eq!(k.mul(&k.unit(), &k.unit()).unwrap(), k.unit());
    }

    #[test]
    fn complex_square() {
        let c = complex_algebra();
        let v = c.basis(1);
        let vv = c.mul(&v, &v).unwrap();
        assert_eq!(vv, vec![c.field.int(-1), c.field.zero()]);
    }

    #[test]
    fn unit_convention_violation() {
        let field = Field::rationals();
        // c[0][1][1] = 0: e0 * e1 = 0.
        let err = Algebra::from_sparse_int(
            "bad",
            field,
            2,
            vec!["1".into(), "v".into()],
            &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnitConventionViolated { i: 0, j: 1 }));
    }

    #[test]
    fn unit_multiplies_trivially() {
        let c = complex_algebra();
        let x = vec![c.field.int(3), c.field.parse("-1/2").unwrap()];
        assert_eq!(c.mul(&c.unit(), &x).unwrap(), x);
        assert_eq!(c.mul(&x, &c.unit()).unwrap(), x);
    }

    #[test]
    fn identity_involution_on_commutative() {
        let c = complex_algebra();
        let id = LinearMap::identity(c.field, 2);
        assert!(check_involution(&c, &id).unwrap().passed());
    }

    #[test]
    fn conjugation_on_complex() {
        let c = complex_algebra();
        let conj = LinearMap::from_rows(
            c.field,
            vec![
                vec![c.field.int(1), c.field.int(0)],
                vec![c.field.int(0), c.field.int(-1)],
            ],
        );
        let inv = Involution::verify(&c, conj).unwrap();
        let data = strong_involution_data(&c, &inv).unwrap();
        // t(v) = 0, n(v) = -q = 1 for q = -1.
        assert!(data.trace[1].is_zero());
        assert!(data.norm_of(&c.basis(1)).is_one());
        assert_eq!(data.trace[0], c.field.int(2));
    }

    #[test]
    fn identity_not_strong_on_complex() {
        // x + x = t(x) 1 fails at v for sigma = id.
        let c = complex_algebra();
        let id = Involution::identity(&c);
        assert!(matches!(
            strong_involution_data(&c, &id),
            Err(Error::NotStrong(1))
        ));
    }

    #[test]
    fn base_field_strong_data() {
        let k = base_field_algebra();
        let id = Involution::identity(&k);
        let data = strong_involution_data(&k, &id).unwrap();
        assert_eq!(data.trace[0], k.field.int(2));
        assert!(data.norm_of(&k.unit()).is_one());
    }

    #[test]
    fn mul_is_bilinear_spot_check() {
        let c = complex_algebra();
        let f = c.field;
        let x = vec![f.int(2), f.int(-1)];
        let xp = vec![f.parse("1/3").unwrap(), f.int(5)];
        let y = vec![f.int(-2), f.parse("7/2").unwrap()];
        let alpha = f.parse("-3/5").unwrap();
        let lhs = c
            .mul(
                &crate::linmap::vec_add(&crate::linmap::vec_scale(&alpha, &x), &xp),
                &y,
            )
            .unwrap();
        let rhs = crate::linmap::vec_add(
            &crate::linmap::vec_scale(&alpha, &c.mul(&x, &y).unwrap()),
            &c.mul(&xp, &y).unwrap(),
        );
        assert_eq!(lhs, rhs);
    }
}
