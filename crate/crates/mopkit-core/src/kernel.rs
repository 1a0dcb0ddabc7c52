//! The matrix Christoffel-Darboux kernel and the two-point matrices.
//!
//! The kernel has two independent routes. The primary one is the Schur
//! complement of a bordered, negated moment matrix; it needs no Cauchy
//! transforms and is defined for all arguments, support nodes included.
//! The second route assembles `M^{-1}(x) M(y)` from the transfer matrix
//! and exists to exercise the Riemann-Hilbert identity. The two-point
//! matrices default to the integral (finite-sum) form so that
//! on-support arguments work; their transfer-matrix forms serve as
//! cross-check routes.

use crate::ensemble::EnsembleSpec;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rh::RhBlocks;
use crate::scalar::Scalar;
use crate::vector_op::basis_eval_columns;

/// Kernel `K(x, y)` via the bordered Schur complement: the `q x p`
/// Schur complement of
/// `-[[H, A(y)], [B(x)^T, 0]]`
/// with respect to its trailing block, where `A(y)` stacks the
/// standard-basis columns in `y` and `B(x)^T` the rows in `x`.
pub fn kernel_schur<F: Scalar>(spec: &EnsembleSpec<F>, x: &F, y: &F) -> Result<Mat<F>> {
    spec.require_normal(spec.pair())?;
    let n = spec.n();
    let h = spec.hankel()?;
    let a_cols = basis_eval_columns(spec.pair().nvec(), y); // n x p
    let b_cols = basis_eval_columns(spec.pair().mvec(), x); // n x q
    let b_rows = b_cols.transpose(); // q x n
    let zero = Mat::zeros(spec.q(), spec.p());
    let neg = -F::one();
    let bordered = Mat::from_blocks(&[
        vec![h.scale(&neg), a_cols.scale(&neg)],
        vec![b_rows.scale(&neg), zero],
    ]);
    bordered.schur_complement(n).map_err(|e| match e {
        Error::SingularPivot => Error::NonNormal {
            nvec: spec.pair().nvec().to_vec(),
            mvec: spec.pair().mvec().to_vec(),
        },
        other => other,
    })
}

/// Kernel via the transfer matrix:
/// `[0 I_q] M^{-1}(x) M(y) [I_p; 0] / (x - y)`.
/// Needs `x` off the support and `x != y`; agrees with
/// [`kernel_schur`] wherever both are defined.
pub fn kernel_rh<F: Scalar>(rh: &RhBlocks<F>, x: &F, y: &F) -> Result<Mat<F>> {
    if x == y {
        return Err(Error::EqualArguments);
    }
    let p = rh.spec().p();
    let q = rh.spec().q();
    let mx = rh.evaluate(x)?;
    let poly_col = Mat::from_blocks(&[vec![rh.m11(y)], vec![rh.m21(y)]]); // (p+q) x p
    let sol = mx.solve(&poly_col)?;
    let denom = x.clone() - y.clone();
    Ok(Mat::from_fn(q, p, |l, j| {
        sol[(p + l, j)].clone() / denom.clone()
    }))
}

/// Scalar kernel `w2-row(x) . K(x, y) . w1-column(y)`; rank-one weight
/// systems only.
pub fn kernel_scalar<F: Scalar>(spec: &EnsembleSpec<F>, x: &F, y: &F) -> Result<F> {
    let (w1, w2) = spec.weights().rank_one_parts()?;
    let k = kernel_schur(spec, x, y)?;
    let mut acc = F::zero();
    for l in 0..spec.q() {
        let w2x = w2[l].eval(x)?;
        for j in 0..spec.p() {
            acc = acc + w2x.clone() * k[(l, j)].clone() * w1[j].eval(y)?;
        }
    }
    Ok(acc)
}

/// Weight matrix evaluated at a point, `p x q`.
pub fn weight_matrix_at<F: Scalar>(spec: &EnsembleSpec<F>, x: &F) -> Result<Mat<F>> {
    let p = spec.p();
    let q = spec.q();
    let mut out = Mat::zeros(p, q);
    for k in 0..p {
        for l in 0..q {
            out[(k, l)] = spec.weights().entry(k, l).eval(x)?;
        }
    }
    Ok(out)
}

/// Two-point matrix
/// `L(y, z) = I_q - (z - y) * int K(y, x) W(x) / (z - x) dmu(x)`,
/// computed as a finite sum. Valid for every `y`, support nodes
/// included; `z` must stay off the support.
pub fn matrix_l<F: Scalar>(spec: &EnsembleSpec<F>, y: &F, z: &F) -> Result<Mat<F>> {
    let q = spec.q();
    let mut integral = Mat::zeros(q, q);
    for (node, mass) in spec
        .measure()
        .nodes()
        .iter()
        .zip(spec.measure().masses())
    {
        let d = z.clone() - node.clone();
        if d.is_zero() {
            return Err(Error::PoleOnSupport { point: z.render() });
        }
        let k = kernel_schur(spec, y, node)?;
        let w = weight_matrix_at(spec, node)?;
        let term = k.matmul(&w).scale(&(mass.clone() / d));
        integral = integral.add(&term);
    }
    let prefactor = z.clone() - y.clone();
    Ok(Mat::identity(q).sub(&integral.scale(&prefactor)))
}

/// Transfer-matrix route for `L`: `[0 I_q] M^{-1}(y) M(z) [0; I_q]`.
/// Needs both arguments off the support.
pub fn matrix_l_rh<F: Scalar>(rh: &RhBlocks<F>, y: &F, z: &F) -> Result<Mat<F>> {
    let p = rh.spec().p();
    let q = rh.spec().q();
    let t = rh.transfer(y, z)?;
    Ok(t.block(p, p + q, p, p + q))
}

/// Two-point matrix
/// `R(z, y) = I_p - (z - y) * int W(x) K(x, y) / (z - x) dmu(x)`.
pub fn matrix_r<F: Scalar>(spec: &EnsembleSpec<F>, z: &F, y: &F) -> Result<Mat<F>> {
    let p = spec.p();
    let mut integral = Mat::zeros(p, p);
    for (node, mass) in spec
        .measure()
        .nodes()
        .iter()
        .zip(spec.measure().masses())
    {
        let d = z.clone() - node.clone();
        if d.is_zero() {
            return Err(Error::PoleOnSupport { point: z.render() });
        }
        let k = kernel_schur(spec, node, y)?;
        let w = weight_matrix_at(spec, node)?;
        let term = w.matmul(&k).scale(&(mass.clone() / d));
        integral = integral.add(&term);
    }
    let prefactor = z.clone() - y.clone();
    Ok(Mat::identity(p).sub(&integral.scale(&prefactor)))
}

/// Transfer-matrix route for `R`: `[I_p 0] M^{-1}(z) M(y) [I_p; 0]`.
pub fn matrix_r_rh<F: Scalar>(rh: &RhBlocks<F>, z: &F, y: &F) -> Result<Mat<F>> {
    let p = rh.spec().p();
    let t = rh.transfer(z, y)?;
    Ok(t.block(0, p, 0, p))
}
