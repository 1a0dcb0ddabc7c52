//! The reduced transfer matrix `M(t)`.
//!
//! `M` stores the four blocks of the Riemann-Hilbert solution in a
//! conjugated form with all `2 pi i` factors removed: the top block row
//! holds the type II polynomial rows and their Cauchy transforms, the
//! bottom block row the type I rows and theirs. Every quantity consumed
//! downstream (`det M_{1,1}`, `det M_{2,2}`, the two-point matrices and
//! the kernel) is invariant under that conjugation, so the whole
//! calculus runs in exact rational arithmetic. `det M(t) = 1` at every
//! point off the support.
//!
//! Rows whose multi-index component is zero degenerate: the type I row
//! is the zero vector and the corresponding Cauchy row is the identity
//! row, matching the constant asymptotics and the empty orthogonality
//! set.

use crate::ensemble::EnsembleSpec;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::vector_op::{vector_op_type1, vector_op_type2, PolyVector};

pub struct RhBlocks<F: Scalar> {
    spec: EnsembleSpec<F>,
    /// Row `k` of the polynomial block `M_{1,1}`.
    type2_rows: Vec<PolyVector<F>>,
    /// Row `l` of the polynomial block `M_{2,1}`; None when `m_l = 0`.
    type1_rows: Vec<Option<PolyVector<F>>>,
    /// Per-node weighted row values feeding the Cauchy blocks:
    /// `table[k][node][l] = sum_j P_j(node) W_{j,l}(node)`.
    cauchy2: Vec<Vec<Vec<F>>>,
    cauchy1: Vec<Option<Vec<Vec<F>>>>,
}

impl<F: Scalar> RhBlocks<F> {
    pub fn build(spec: &EnsembleSpec<F>) -> Result<Self> {
        spec.require_normal(spec.pair())?;
        let p = spec.p();
        let q = spec.q();
        let mut type2_rows = Vec::with_capacity(p);
        for k in 0..p {
            let pair = spec.pair().bump_n(k);
            type2_rows.push(vector_op_type2(spec, &pair, k)?);
        }
        let mut type1_rows = Vec::with_capacity(q);
        for l in 0..q {
            match spec.pair().drop_m(l) {
                Some(pair) => type1_rows.push(Some(vector_op_type1(spec, &pair, l)?)),
                None => type1_rows.push(None),
            }
        }
        let cauchy2 = type2_rows
            .iter()
            .map(|row| weighted_row_table(spec, row))
            .collect::<Result<Vec<_>>>()?;
        let cauchy1 = type1_rows
            .iter()
            .map(|row| {
                row.as_ref()
                    .map(|r| weighted_row_table(spec, r))
                    .transpose()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RhBlocks {
            spec: spec.clone(),
            type2_rows,
            type1_rows,
            cauchy2,
            cauchy1,
        })
    }

    pub fn spec(&self) -> &EnsembleSpec<F> {
        &self.spec
    }

    pub fn type2_row(&self, k: usize) -> &PolyVector<F> {
        &self.type2_rows[k]
    }

    pub fn type1_row(&self, l: usize) -> Option<&PolyVector<F>> {
        self.type1_rows[l].as_ref()
    }

    /// Polynomial block `M_{1,1}(t)`, `p x p`; row `k` is monic of
    /// degree `n_k` in its `k`-th entry.
    pub fn m11(&self, t: &F) -> Mat<F> {
        let p = self.spec.p();
        Mat::from_fn(p, p, |k, j| self.type2_rows[k].components()[j].eval(t))
    }

    /// Polynomial block `M_{2,1}(t)`, `q x p`.
    pub fn m21(&self, t: &F) -> Mat<F> {
        let q = self.spec.q();
        let p = self.spec.p();
        Mat::from_fn(q, p, |l, j| match &self.type1_rows[l] {
            Some(row) => row.components()[j].eval(t),
            None => F::zero(),
        })
    }

    /// Cauchy block `M_{1,2}(t)`, `p x q`; needs `t` off the support.
    pub fn m12(&self, t: &F) -> Result<Mat<F>> {
        let p = self.spec.p();
        let q = self.spec.q();
        let mut out = Mat::zeros(p, q);
        for k in 0..p {
            let row = self.cauchy_row(&self.cauchy2[k], t)?;
            for l in 0..q {
                out[(k, l)] = row[l].clone();
            }
        }
        Ok(out)
    }

    /// Cauchy block `M_{2,2}(t)`, `q x q`; degenerate rows are identity
    /// rows.
    pub fn m22(&self, t: &F) -> Result<Mat<F>> {
        let q = self.spec.q();
        let mut out = Mat::zeros(q, q);
        for l in 0..q {
            match &self.cauchy1[l] {
                Some(table) => {
                    let row = self.cauchy_row(table, t)?;
                    for j in 0..q {
                        out[(l, j)] = row[j].clone();
                    }
                }
                None => out[(l, l)] = F::one(),
            }
        }
        Ok(out)
    }

    /// The full `(p+q) x (p+q)` reduced matrix `M(t)`.
    pub fn evaluate(&self, t: &F) -> Result<Mat<F>> {
        let m12 = self.m12(t)?;
        let m22 = self.m22(t)?;
        Ok(Mat::from_blocks(&[
            vec![self.m11(t), m12],
            vec![self.m21(t), m22],
        ]))
    }

    /// `M^{-1}(x) M(y)`; needs both points off the support.
    pub fn transfer(&self, x: &F, y: &F) -> Result<Mat<F>> {
        self.evaluate(x)?.solve(&self.evaluate(y)?)
    }

    /// `det M_{1,1}` as a polynomial, recovered by exact interpolation
    /// at `|n| + 1` integer points. Monic of degree `|n|`.
    pub fn m11_det_poly(&self) -> Polynomial<F> {
        let n = self.spec.pair().total_n();
        let pts: Vec<(F, F)> = (0..=n as i64)
            .map(|v| {
                let x = F::from_int(v);
                let y = self.m11(&x).det();
                (x, y)
            })
            .collect();
        Polynomial::interpolate(&pts)
    }

    fn cauchy_row(&self, table: &[Vec<F>], t: &F) -> Result<Vec<F>> {
        let q = self.spec.q();
        let mut acc = vec![F::zero(); q];
        for (i, node) in self.spec.measure().nodes().iter().enumerate() {
            let d = t.clone() - node.clone();
            if d.is_zero() {
                return Err(Error::PoleOnSupport { point: t.render() });
            }
            let mass = self.spec.measure().masses()[i].clone();
            for l in 0..q {
                acc[l] = acc[l].clone() + mass.clone() * table[i][l].clone() / d.clone();
            }
        }
        Ok(acc)
    }
}

fn weighted_row_table<F: Scalar>(
    spec: &EnsembleSpec<F>,
    row: &PolyVector<F>,
) -> Result<Vec<Vec<F>>> {
    let q = spec.q();
    let p = spec.p();
    let mut table = Vec::with_capacity(spec.measure().len());
    for node in spec.measure().nodes() {
        let vals = row.eval(node);
        let mut weighted = vec![F::zero(); q];
        for l in 0..q {
            for j in 0..p {
                weighted[l] = weighted[l].clone()
                    + vals[j].clone() * spec.weights().entry(j, l).eval(node)?;
            }
        }
        table.push(weighted);
    }
    Ok(table)
}

/// The block-rearranged inverse transpose that carries a transfer matrix
/// to the one of the dual ensemble:
/// `[[M22, -M21], [-M12, M11]]^{-T}`.
pub fn dual_partition_transform<F: Scalar>(m: &Mat<F>, p: usize, q: usize) -> Result<Mat<F>> {
    assert_eq!(m.rows(), p + q);
    assert_eq!(m.cols(), p + q);
    let m11 = m.block(0, p, 0, p);
    let m12 = m.block(0, p, p, p + q);
    let m21 = m.block(p, p + q, 0, p);
    let m22 = m.block(p, p + q, p, p + q);
    let neg_one = -F::one();
    let phi = Mat::from_blocks(&[
        vec![m22, m21.scale(&neg_one)],
        vec![m12.scale(&neg_one), m11],
    ]);
    Ok(phi.solve(&Mat::identity(p + q))?.transpose())
}
