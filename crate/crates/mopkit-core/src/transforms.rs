//! Weight-modification formulas: the transfer-matrix blocks of an
//! ensemble with weight `prod(x - y_k) / prod(x - z_l) * W(x)` expressed
//! through blocks of the original ensemble as Schur complements.
//!
//! Each operation returns the Schur-complement route. The semantic
//! ground truth is the direct route: rebuild the ensemble with the
//! modified weight and read off the same block. [`TransformReport`]
//! pairs the two and records whether they agree.

use crate::ensemble::EnsembleSpec;
use crate::error::{Error, Result};
use crate::kernel::{kernel_schur, matrix_l, matrix_r};
use crate::linalg::Mat;
use crate::rh::RhBlocks;
use crate::scalar::Scalar;

fn check_distinct<F: Scalar>(points: &[&F]) -> Result<()> {
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a == b {
                return Err(Error::DuplicatePoint { point: a.render() });
            }
        }
    }
    Ok(())
}

fn chain_blocks_up<F: Scalar>(spec: &EnsembleSpec<F>, count: usize) -> Result<Vec<RhBlocks<F>>> {
    (0..count)
        .map(|t| {
            let pair = spec.chain_pair(t as i64)?;
            RhBlocks::build(&spec.at_pair(pair)?)
        })
        .collect()
}

fn chain_blocks_down<F: Scalar>(spec: &EnsembleSpec<F>, count: usize) -> Result<Vec<RhBlocks<F>>> {
    let max = 1 + spec.pair().min_m();
    if count > max {
        return Err(Error::ChainDepthExceeded {
            requested: count,
            max,
        });
    }
    (0..count)
        .map(|t| {
            let pair = spec.chain_pair(-(t as i64))?;
            RhBlocks::build(&spec.at_pair(pair)?)
        })
        .collect()
}

/// `M_{1,1}` of the ensemble with weight `prod_k (x - y_k) * W(x)`:
/// the Schur complement of the `(K+1) x (K+1)` block matrix of
/// `M_{1,1}` chain blocks at the points `(y_1 .. y_K, y)`, scaled by
/// `1 / prod_k (y - y_k)`.
pub fn christoffel_y11<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], y: &F) -> Result<Mat<F>> {
    let pts: Vec<&F> = ys.iter().chain(std::iter::once(y)).collect();
    check_distinct(&pts)?;
    let k = ys.len();
    let blocks = chain_blocks_up(spec, k + 1)?;
    let grid: Vec<Vec<Mat<F>>> = blocks
        .iter()
        .map(|rh| pts.iter().map(|pt| rh.m11(pt)).collect())
        .collect();
    let schur = Mat::from_blocks(&grid).schur_complement(k * spec.p())?;
    let mut denom = F::one();
    for yk in ys {
        denom = denom * (y.clone() - yk.clone());
    }
    Ok(schur.scale(&(F::one() / denom)))
}

/// `M_{2,1}` and `M_{2,2}` of the ensemble with weight
/// `W(x) / prod_l (x - z_l)`, via Schur complements over the downward
/// chain. Needs `L <= min_l m_l`; the deepest pair may carry zero
/// components, handled by the degenerate-row convention.
pub fn uvarov_y21<F: Scalar>(spec: &EnsembleSpec<F>, zs: &[F], z: &F) -> Result<Mat<F>> {
    uvarov_blocks(spec, zs, z).map(|(y21, _)| y21)
}

pub fn uvarov_y22<F: Scalar>(spec: &EnsembleSpec<F>, zs: &[F], z: &F) -> Result<Mat<F>> {
    uvarov_blocks(spec, zs, z).map(|(_, y22)| y22)
}

pub fn uvarov_blocks<F: Scalar>(
    spec: &EnsembleSpec<F>,
    zs: &[F],
    z: &F,
) -> Result<(Mat<F>, Mat<F>)> {
    let pts: Vec<&F> = zs.iter().chain(std::iter::once(z)).collect();
    check_distinct(&pts)?;
    let l = zs.len();
    let blocks = chain_blocks_down(spec, l + 1)?;
    let mut grid21 = Vec::with_capacity(l + 1);
    let mut grid22 = Vec::with_capacity(l + 1);
    for rh in &blocks {
        let mut row21 = Vec::with_capacity(l + 1);
        let mut row22 = Vec::with_capacity(l + 1);
        for zl in zs {
            let m22 = rh.m22(zl)?;
            row21.push(m22.clone());
            row22.push(m22);
        }
        row21.push(rh.m21(z));
        row22.push(rh.m22(z)?);
        grid21.push(row21);
        grid22.push(row22);
    }
    let y21 = Mat::from_blocks(&grid21).schur_complement(l * spec.q())?;
    let schur22 = Mat::from_blocks(&grid22).schur_complement(l * spec.q())?;
    let mut denom = F::one();
    for zl in zs {
        denom = denom * (z.clone() - zl.clone());
    }
    Ok((y21, schur22.scale(&(F::one() / denom))))
}

/// `M_{1,1}` of the ensemble with weight
/// `prod_k (x - y_k) / prod_l (x - z_l) * W(x)` for `K >= L`: Schur
/// complement of the grid whose first `L` block rows are
/// `R(z_i, .)/(z_i - .)` and whose remaining rows are `M_{1,1}` chain
/// blocks, scaled by `prod_l (y - z_l) / prod_k (y - y_k)`.
pub fn mixed_christoffel_y11<F: Scalar>(
    spec: &EnsembleSpec<F>,
    ys: &[F],
    zs: &[F],
    y: &F,
) -> Result<Mat<F>> {
    let k = ys.len();
    let l = zs.len();
    if l > k {
        return Err(Error::Shape("mixed Christoffel needs K >= L".into()));
    }
    let pts: Vec<&F> = ys.iter().chain(zs).chain(std::iter::once(y)).collect();
    check_distinct(&pts)?;
    let eval_pts: Vec<&F> = ys.iter().chain(std::iter::once(y)).collect();
    let mut grid: Vec<Vec<Mat<F>>> = Vec::with_capacity(k + 1);
    for zi in zs {
        let mut row = Vec::with_capacity(k + 1);
        for pt in &eval_pts {
            let d = zi.clone() - (*pt).clone();
            row.push(matrix_r(spec, zi, pt)?.scale(&(F::one() / d)));
        }
        grid.push(row);
    }
    for rh in &chain_blocks_up(spec, k - l + 1)? {
        grid.push(eval_pts.iter().map(|pt| rh.m11(pt)).collect());
    }
    let schur = Mat::from_blocks(&grid).schur_complement(k * spec.p())?;
    let mut factor = F::one();
    for zl in zs {
        factor = factor * (y.clone() - zl.clone());
    }
    for yk in ys {
        factor = factor / (y.clone() - yk.clone());
    }
    Ok(schur.scale(&factor))
}

/// `(M_{2,1}, M_{2,2})` of the mixed modification for `L >= K`. The
/// `M_{2,1}` grid carries the kernel column `-K(y_i, z)`, which is the
/// conjugation-invariant form of the original kernel column; the
/// `M_{2,2}` grid carries `L(y_i, .)/(. - y_i)` columns and the
/// prefactor `prod_k (z - y_k) / prod_l (z - z_l)`.
pub fn mixed_uvarov_blocks<F: Scalar>(
    spec: &EnsembleSpec<F>,
    ys: &[F],
    zs: &[F],
    z: &F,
) -> Result<(Mat<F>, Mat<F>)> {
    let k = ys.len();
    let l = zs.len();
    if k > l {
        return Err(Error::Shape("mixed Uvarov needs L >= K".into()));
    }
    let pts: Vec<&F> = ys.iter().chain(zs).chain(std::iter::once(z)).collect();
    check_distinct(&pts)?;
    let mut grid21: Vec<Vec<Mat<F>>> = Vec::with_capacity(l + 1);
    let mut grid22: Vec<Vec<Mat<F>>> = Vec::with_capacity(l + 1);
    for yi in ys {
        let mut row21 = Vec::with_capacity(l + 1);
        let mut row22 = Vec::with_capacity(l + 1);
        for zj in zs {
            let d = zj.clone() - yi.clone();
            let block = matrix_l(spec, yi, zj)?.scale(&(F::one() / d));
            row21.push(block.clone());
            row22.push(block);
        }
        row21.push(kernel_schur(spec, yi, z)?.scale(&(-F::one())));
        let d = z.clone() - yi.clone();
        row22.push(matrix_l(spec, yi, z)?.scale(&(F::one() / d)));
        grid21.push(row21);
        grid22.push(row22);
    }
    for rh in &chain_blocks_down(spec, l - k + 1)? {
        let mut row21 = Vec::with_capacity(l + 1);
        let mut row22 = Vec::with_capacity(l + 1);
        for zj in zs {
            let m22 = rh.m22(zj)?;
            row21.push(m22.clone());
            row22.push(m22);
        }
        row21.push(rh.m21(z));
        row22.push(rh.m22(z)?);
        grid21.push(row21);
        grid22.push(row22);
    }
    let y21 = Mat::from_blocks(&grid21).schur_complement(l * spec.q())?;
    let schur22 = Mat::from_blocks(&grid22).schur_complement(l * spec.q())?;
    let mut factor = F::one();
    for yk in ys {
        factor = factor * (z.clone() - yk.clone());
    }
    for zl in zs {
        factor = factor / (z.clone() - zl.clone());
    }
    Ok((y21, schur22.scale(&factor)))
}

/// Coefficients `(c_1 .. c_L, c)` of the partial fraction identity
/// `sum_l c_l/(x - z_l) + 1/(x - z)
///   = c * prod_k (x - y_k) / ((x - z) prod_l (x - z_l))`,
/// valid for `K <= L`. The result is verified by evaluation at
/// `L + K + 2` fresh points before being returned.
pub fn partial_fractions<F: Scalar>(zs: &[F], z: &F, ys: &[F]) -> Result<(Vec<F>, F)> {
    if ys.len() > zs.len() {
        return Err(Error::Shape(
            "partial fractions need K <= L".into(),
        ));
    }
    let pts: Vec<&F> = zs.iter().chain(std::iter::once(z)).chain(ys).collect();
    check_distinct(&pts)?;
    let mut c = F::one();
    for zl in zs {
        c = c * (z.clone() - zl.clone());
    }
    for yk in ys {
        c = c / (z.clone() - yk.clone());
    }
    let mut cs = Vec::with_capacity(zs.len());
    for (l, zl) in zs.iter().enumerate() {
        let mut v = c.clone();
        for yk in ys {
            v = v * (zl.clone() - yk.clone());
        }
        v = v / (zl.clone() - z.clone());
        for (j, other) in zs.iter().enumerate() {
            if j != l {
                v = v / (zl.clone() - other.clone());
            }
        }
        cs.push(v);
    }
    verify_partial_fractions(zs, z, ys, &cs, &c)?;
    Ok((cs, c))
}

fn verify_partial_fractions<F: Scalar>(
    zs: &[F],
    z: &F,
    ys: &[F],
    cs: &[F],
    c: &F,
) -> Result<()> {
    let needed = zs.len() + ys.len() + 2;
    let mut fresh = Vec::with_capacity(needed);
    let mut candidate = 1i64;
    while fresh.len() < needed {
        let t = F::from_int(candidate);
        candidate += 1;
        if zs.contains(&t) || ys.contains(&t) || &t == z {
            continue;
        }
        fresh.push(t);
    }
    for t in &fresh {
        let mut lhs = F::one() / (t.clone() - z.clone());
        for (cl, zl) in cs.iter().zip(zs) {
            lhs = lhs + cl.clone() / (t.clone() - zl.clone());
        }
        let mut rhs = c.clone() / (t.clone() - z.clone());
        for yk in ys {
            rhs = rhs * (t.clone() - yk.clone());
        }
        for zl in zs {
            rhs = rhs / (t.clone() - zl.clone());
        }
        let ok = if F::EXACT {
            lhs == rhs
        } else {
            lhs.approx_eq(&rhs, 1e-9)
        };
        if !ok {
            return Err(Error::RouteMismatch {
                context: format!("partial fraction identity at {}", t.render()),
                lhs: lhs.render(),
                rhs: rhs.render(),
            });
        }
    }
    Ok(())
}

/// Route-equality record for one transform query.
#[derive(Clone, Debug)]
pub struct TransformReport<F: Scalar> {
    pub ys: Vec<F>,
    pub zs: Vec<F>,
    pub point: F,
    pub schur_route: Mat<F>,
    pub direct_route: Mat<F>,
    pub equal: bool,
}

impl<F: Scalar> TransformReport<F> {
    fn new(ys: &[F], zs: &[F], point: &F, schur: Mat<F>, direct: Mat<F>, tol: f64) -> Self {
        let equal = if F::EXACT {
            schur == direct
        } else {
            schur.approx_eq(&direct, tol)
        };
        TransformReport {
            ys: ys.to_vec(),
            zs: zs.to_vec(),
            point: point.clone(),
            schur_route: schur,
            direct_route: direct,
            equal,
        }
    }
}

/// Which block of the modified ensemble a transform report compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    Christoffel,
    UvarovY21,
    UvarovY22,
    MixedChristoffel,
    MixedUvarovY21,
    MixedUvarovY22,
}

/// Compute one transform by both routes and report equality.
pub fn transform_report<F: Scalar>(
    kind: TransformKind,
    spec: &EnsembleSpec<F>,
    ys: &[F],
    zs: &[F],
    point: &F,
    tol: f64,
) -> Result<TransformReport<F>> {
    let modified = spec.modified(ys, zs)?;
    let direct_rh = RhBlocks::build(&modified)?;
    let (schur, direct) = match kind {
        TransformKind::Christoffel => {
            if !zs.is_empty() {
                return Err(Error::Shape("Christoffel takes no z points".into()));
            }
            (christoffel_y11(spec, ys, point)?, direct_rh.m11(point))
        }
        TransformKind::UvarovY21 => {
            if !ys.is_empty() {
                return Err(Error::Shape("Uvarov takes no y points".into()));
            }
            (uvarov_y21(spec, zs, point)?, direct_rh.m21(point))
        }
        TransformKind::UvarovY22 => {
            if !ys.is_empty() {
                return Err(Error::Shape("Uvarov takes no y points".into()));
            }
            (uvarov_y22(spec, zs, point)?, direct_rh.m22(point)?)
        }
        TransformKind::MixedChristoffel => (
            mixed_christoffel_y11(spec, ys, zs, point)?,
            direct_rh.m11(point),
        ),
        TransformKind::MixedUvarovY21 => (
            mixed_uvarov_blocks(spec, ys, zs, point)?.0,
            direct_rh.m21(point),
        ),
        TransformKind::MixedUvarovY22 => (
            mixed_uvarov_blocks(spec, ys, zs, point)?.1,
            direct_rh.m22(point)?,
        ),
    };
    Ok(TransformReport::new(ys, zs, point, schur, direct, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::DiscreteMeasure;
    use crate::multi_index::MultiIndexPair;
    use crate::poly::Polynomial;
    use crate::scalar::Rat;
    use crate::weights::{WeightExpr, Weights};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_fraction(n, d)
    }

    fn e1(n: usize) -> EnsembleSpec<Rat> {
        let measure = DiscreteMeasure::new(
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(1, 2), rat(1, 2)],
        )
        .unwrap();
        let pair = MultiIndexPair::new(vec![n], vec![n]).unwrap();
        EnsembleSpec::new(Weights::units(1, 1), measure, pair).unwrap()
    }

    fn e1_wide(n: usize) -> EnsembleSpec<Rat> {
        let measure = DiscreteMeasure::uniform(vec![
            rat(-2, 1),
            rat(-1, 1),
            rat(0, 1),
            rat(1, 1),
            rat(2, 1),
        ])
        .unwrap();
        let pair = MultiIndexPair::new(vec![n], vec![n]).unwrap();
        EnsembleSpec::new(Weights::units(1, 1), measure, pair).unwrap()
    }

    fn e2() -> EnsembleSpec<Rat> {
        let measure =
            DiscreteMeasure::uniform(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]).unwrap();
        let w1 = vec![
            WeightExpr::one(),
            WeightExpr::from_poly(Polynomial::monomial(1)),
        ];
        let w2 = vec![WeightExpr::one()];
        let pair = MultiIndexPair::new(vec![1, 1], vec![2]).unwrap();
        // The default downward chain lands on (0,1),(1), whose only
        // moment vanishes on this symmetric measure; steer the chain to
        // the normal branch (1,0),(1).
        EnsembleSpec::new(Weights::rank_one(w1, w2).unwrap(), measure, pair)
            .unwrap()
            .with_chain_policy(crate::multi_index::ChainPolicy {
                up_mvecs: vec![],
                down_nvecs: vec![vec![1, 0]],
            })
    }

    /// p = 2 ensemble whose upward chain stays normal: w1 = (1, x^2)
    /// keeps the function systems independent at every chain depth, and
    /// the skewed masses keep the odd moments nonzero.
    fn p2_chainable() -> EnsembleSpec<Rat> {
        let nodes = vec![rat(-2, 1), rat(-1, 1), rat(0, 1), rat(1, 1), rat(2, 1)];
        let masses = vec![rat(1, 8), rat(1, 8), rat(2, 8), rat(1, 8), rat(3, 8)];
        let measure = DiscreteMeasure::new(nodes, masses).unwrap();
        let w1 = vec![
            WeightExpr::one(),
            WeightExpr::from_poly(Polynomial::monomial(2)),
        ];
        let w2 = vec![WeightExpr::one()];
        let pair = MultiIndexPair::new(vec![1, 1], vec![2]).unwrap();
        EnsembleSpec::new(Weights::rank_one(w1, w2).unwrap(), measure, pair).unwrap()
    }

    #[test]
    fn christoffel_scalar_example() {
        // E1, (1),(1), ys = (2): modified masses (-1, -1/2), monic OP
        // x - mu1/mu0 -> y - 1/3.
        let spec = e1(1);
        let got = christoffel_y11(&spec, &[rat(2, 1)], &rat(5, 1)).unwrap();
        assert_eq!(got[(0, 0)], rat(5, 1) - rat(1, 3));
        // K = 0 leaves the block unchanged.
        let got = christoffel_y11(&spec, &[], &rat(5, 1)).unwrap();
        assert_eq!(got[(0, 0)], rat(9, 2));
    }

    #[test]
    fn christoffel_route_equality() {
        for (spec, ys) in [
            (e1(1), vec![rat(2, 1)]),
            (e1_wide(2), vec![rat(3, 1)]),
            (e1_wide(2), vec![rat(3, 1), rat(4, 1)]),
            (p2_chainable(), vec![rat(3, 1)]),
        ] {
            let report = transform_report(
                TransformKind::Christoffel,
                &spec,
                &ys,
                &[],
                &rat(7, 1),
                0.0,
            )
            .unwrap();
            assert!(report.equal, "ys = {:?}", ys);
        }
    }

    #[test]
    fn christoffel_rows_are_monic_polynomials() {
        // Interpolating each entry of the Schur route in y recovers a
        // polynomial matrix whose diagonal entry k is monic of degree
        // n_k and whose off-diagonal column c stays below degree n_c.
        let spec = p2_chainable();
        let ys = [rat(3, 1)];
        let samples: Vec<Rat> = (4..9).map(|v| rat(v, 1)).collect();
        for r in 0..spec.p() {
            for c in 0..spec.p() {
                let pts: Vec<(Rat, Rat)> = samples
                    .iter()
                    .map(|y| {
                        let m = christoffel_y11(&spec, &ys, y).unwrap();
                        (y.clone(), m[(r, c)].clone())
                    })
                    .collect();
                let poly = Polynomial::interpolate(&pts);
                if r == c {
                    assert_eq!(poly.degree(), Some(spec.pair().nvec()[r]));
                    assert_eq!(poly.leading().unwrap(), &rat(1, 1));
                } else {
                    let bound = spec.pair().nvec()[c];
                    assert!(poly.degree().is_none_or(|d| d < bound.max(1)));
                }
            }
        }
    }

    #[test]
    fn christoffel_determinant_matches_product_recursion() {
        // det of the transformed block is the ratio of consecutive
        // product averages: the step that builds the stacked product
        // formula one point at a time.
        use crate::averages::avg_products;
        let spec = e1_wide(1);
        let y = rat(9, 2);
        for ys in [vec![rat(5, 2)], vec![rat(5, 2), rat(7, 2)]] {
            let det = christoffel_y11(&spec, &ys, &y).unwrap().det();
            let mut extended = ys.clone();
            extended.push(y.clone());
            let want =
                avg_products(&spec, &extended).unwrap() / avg_products(&spec, &ys).unwrap();
            assert_eq!(det, want, "K = {}", ys.len());
        }
    }

    #[test]
    fn uvarov_scalar_example_with_zero_component_convention() {
        // E1, (1),(1), zs = (2): Y22(z) = (z - 1/3)/(z (z - 1)).
        let spec = e1(1);
        for z in [rat(3, 1), rat(5, 1), rat(-7, 2)] {
            let got = uvarov_y22(&spec, &[rat(2, 1)], &z).unwrap();
            let want = (z.clone() - rat(1, 3)) / (z.clone() * (z.clone() - rat(1, 1)));
            assert_eq!(got[(0, 0)], want, "z = {}", z);
        }
        // L = 0 leaves the blocks unmodified.
        let rh = RhBlocks::build(&spec).unwrap();
        let got = uvarov_y22(&spec, &[], &rat(2, 1)).unwrap();
        assert_eq!(got, rh.m22(&rat(2, 1)).unwrap());
    }

    #[test]
    fn uvarov_route_equality() {
        for (spec, zs) in [
            (e1(1), vec![rat(2, 1)]),
            (e1(2), vec![rat(3, 1)]),
            (e1(2), vec![rat(3, 1), rat(-2, 1)]),
            (e2(), vec![rat(3, 1)]),
        ] {
            for kind in [TransformKind::UvarovY21, TransformKind::UvarovY22] {
                let report =
                    transform_report(kind, &spec, &[], &zs, &rat(5, 1), 0.0).unwrap();
                assert!(report.equal, "kind = {:?}, zs = {:?}", kind, zs);
            }
        }
    }

    #[test]
    fn uvarov_depth_bound() {
        // E1 (1),(1): min m = 1, so two z points need depth 2.
        let spec = e1(1);
        assert!(matches!(
            uvarov_y22(&spec, &[rat(2, 1), rat(3, 1)], &rat(5, 1)),
            Err(Error::ChainDepthExceeded { .. })
        ));
    }

    #[test]
    fn mixed_christoffel_reduces_and_matches() {
        let spec = e1(1);
        // L = 0 reduction.
        let a = mixed_christoffel_y11(&spec, &[rat(3, 1)], &[], &rat(5, 1)).unwrap();
        let b = christoffel_y11(&spec, &[rat(3, 1)], &rat(5, 1)).unwrap();
        assert_eq!(a, b);
        // K = L = 1 route equality at y = 5.
        let report = transform_report(
            TransformKind::MixedChristoffel,
            &spec,
            &[rat(3, 1)],
            &[rat(2, 1)],
            &rat(5, 1),
            0.0,
        )
        .unwrap();
        assert!(report.equal);
    }

    #[test]
    fn mixed_christoffel_route_equality() {
        for (spec, ys, zs) in [
            (e1(2), vec![rat(3, 1)], vec![rat(2, 1)]),
            (e1_wide(2), vec![rat(3, 1), rat(4, 1)], vec![rat(5, 2)]),
            (e2(), vec![rat(3, 1)], vec![rat(2, 1)]),
        ] {
            let report = transform_report(
                TransformKind::MixedChristoffel,
                &spec,
                &ys,
                &zs,
                &rat(7, 1),
                0.0,
            )
            .unwrap();
            assert!(report.equal, "ys = {:?}, zs = {:?}", ys, zs);
        }
    }

    #[test]
    fn mixed_uvarov_reduces_and_matches() {
        let spec = e1(1);
        // K = 0 reduction to the plain inverse modification.
        let (a21, a22) = mixed_uvarov_blocks(&spec, &[], &[rat(2, 1)], &rat(7, 1)).unwrap();
        let (b21, b22) = uvarov_blocks(&spec, &[rat(2, 1)], &rat(7, 1)).unwrap();
        assert_eq!(a21, b21);
        assert_eq!(a22, b22);
    }

    #[test]
    fn mixed_uvarov_route_equality() {
        for (spec, ys, zs) in [
            (e1(1), vec![rat(3, 1)], vec![rat(2, 1)]),
            (e1(2), vec![rat(3, 1)], vec![rat(2, 1), rat(5, 1)]),
            (e2(), vec![rat(3, 1)], vec![rat(2, 1)]),
            (e2(), vec![], vec![rat(2, 1), rat(3, 1)]),
        ] {
            for kind in [TransformKind::MixedUvarovY21, TransformKind::MixedUvarovY22] {
                let report =
                    transform_report(kind, &spec, &ys, &zs, &rat(7, 1), 0.0).unwrap();
                assert!(
                    report.equal,
                    "kind = {:?}, ys = {:?}, zs = {:?}\nschur = {}\ndirect = {}",
                    kind,
                    ys,
                    zs,
                    report.schur_route.render(),
                    report.direct_route.render()
                );
            }
        }
    }

    #[test]
    fn partial_fraction_examples() {
        // L = 1, K = 0: c1 = -1, c = z - z1.
        let (cs, c) = partial_fractions(&[rat(3, 1)], &rat(5, 1), &[]).unwrap();
        assert_eq!(cs, vec![rat(-1, 1)]);
        assert_eq!(c, rat(2, 1));
        // L = 1, K = 1: c = (z - z1)/(z - y1).
        let (_, c) = partial_fractions(&[rat(3, 1)], &rat(5, 1), &[rat(4, 1)]).unwrap();
        assert_eq!(c, rat(2, 1));
        // L = 2, K = 0: verified internally at fresh points.
        let (cs, _) = partial_fractions(&[rat(3, 1), rat(-2, 1)], &rat(5, 1), &[]).unwrap();
        assert_eq!(cs.len(), 2);
    }

    #[test]
    fn partial_fraction_duplicate_rejected() {
        assert!(matches!(
            partial_fractions(&[rat(3, 1), rat(3, 1)], &rat(5, 1), &[]),
            Err(Error::DuplicatePoint { .. })
        ));
    }
}
