//! Average characteristic-polynomial formulas.
//!
//! Every function here evaluates the averaged ratio of products of
//! characteristic polynomials through determinants of transfer-matrix
//! blocks and two-point matrices. Block grids over several points reuse
//! one set of transfer blocks per chain pair. Prefactors are evaluated
//! as exact products after the determinant; for distinct admissible
//! points the removable singularities never arise.

use crate::ensemble::EnsembleSpec;
use crate::error::{Error, Result};
use crate::kernel::{kernel_scalar, matrix_l, matrix_r};
use crate::linalg::Mat;
use crate::poly::Polynomial;
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

fn check_off_support<F: Scalar>(spec: &EnsembleSpec<F>, zs: &[F]) -> Result<()> {
    for z in zs {
        if spec.measure().contains_node(z) {
            return Err(Error::PoleOnSupport { point: z.render() });
        }
    }
    Ok(())
}

/// Guard for the internal dual-route assertions: exact fields require
/// equality, the float field a loose relative agreement.
fn routes_must_agree<F: Scalar>(context: &str, a: &F, b: &F) -> Result<()> {
    let ok = if F::EXACT {
        a == b
    } else {
        a.approx_eq(b, 1e-6)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::RouteMismatch {
            context: context.to_string(),
            lhs: a.render(),
            rhs: b.render(),
        })
    }
}

/// Transfer blocks along the upward chain, depths `0..count`.
fn chain_blocks_up<F: Scalar>(spec: &EnsembleSpec<F>, count: usize) -> Result<Vec<RhBlocks<F>>> {
    (0..count)
        .map(|t| {
            let pair = spec.chain_pair(t as i64)?;
            RhBlocks::build(&spec.at_pair(pair)?)
        })
        .collect()
}

/// Transfer blocks along the downward chain, depths `0..count`, under
/// the bound `count - 1 <= min_l m_l`.
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

/// Average characteristic polynomial at `y`: `det M_{1,1}(y)`.
pub fn avg_char<F: Scalar>(spec: &EnsembleSpec<F>, y: &F) -> Result<F> {
    Ok(RhBlocks::build(spec)?.m11(y).det())
}

/// The average characteristic polynomial itself; monic of degree `|n|`.
pub fn avg_char_poly<F: Scalar>(spec: &EnsembleSpec<F>) -> Result<Polynomial<F>> {
    Ok(RhBlocks::build(spec)?.m11_det_poly())
}

/// Average inverse characteristic polynomial at `z` off the support:
/// `det M_{2,2}(z)`.
pub fn avg_inv_char<F: Scalar>(spec: &EnsembleSpec<F>, z: &F) -> Result<F> {
    RhBlocks::build(spec)?.m22(z).map(|m| m.det())
}

/// Average ratio of characteristic polynomials: `det L(y, z)`, with
/// `det R(z, y)` computed as well and asserted equal.
pub fn avg_ratio<F: Scalar>(spec: &EnsembleSpec<F>, y: &F, z: &F) -> Result<F> {
    spec.require_normal(spec.pair())?;
    let l = matrix_l(spec, y, z)?.det();
    let r = matrix_r(spec, z, y)?.det();
    routes_must_agree("det L vs det R", &l, &r)?;
    Ok(l)
}

fn vandermonde_power<F: Scalar>(points: &[F], power: usize, reversed: bool) -> F {
    let mut v = F::one();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = if reversed {
                points[i].clone() - points[j].clone()
            } else {
                points[j].clone() - points[i].clone()
            };
            v = v * d;
        }
    }
    v.powi(power)
}

/// Average of a product of `K` characteristic polynomials: the stacked
/// `Kp x Kp` block determinant over the upward chain divided by
/// `prod_{i<j} (y_j - y_i)^p`.
pub fn avg_products<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F]) -> Result<F> {
    if ys.is_empty() {
        return Err(Error::Shape("avg_products needs at least one point".into()));
    }
    check_distinct(&ys.iter().collect::<Vec<_>>())?;
    let k = ys.len();
    let blocks = chain_blocks_up(spec, k)?;
    let grid: Vec<Vec<Mat<F>>> = blocks
        .iter()
        .map(|rh| ys.iter().map(|y| rh.m11(y)).collect())
        .collect();
    let det = Mat::from_blocks(&grid).det();
    Ok(det / vandermonde_power(ys, spec.p(), false))
}

/// Average of an inverse product of `L` characteristic polynomials:
/// the stacked block determinant over the downward chain divided by
/// `prod_{i<j} (z_j - z_i)^q`. Requires `L <= 1 + min_l m_l`.
pub fn avg_inv_products<F: Scalar>(spec: &EnsembleSpec<F>, zs: &[F]) -> Result<F> {
    if zs.is_empty() {
        return Err(Error::Shape(
            "avg_inv_products needs at least one point".into(),
        ));
    }
    check_distinct(&zs.iter().collect::<Vec<_>>())?;
    check_off_support(spec, zs)?;
    let l = zs.len();
    let blocks = chain_blocks_down(spec, l)?;
    let mut grid = Vec::with_capacity(l);
    for rh in &blocks {
        let mut row = Vec::with_capacity(l);
        for z in zs {
            row.push(rh.m22(z)?);
        }
        grid.push(row);
    }
    let det = Mat::from_blocks(&grid).det();
    Ok(det / vandermonde_power(zs, spec.q(), false))
}

fn cross_product<F: Scalar>(ys: &[F], zs: &[F]) -> F {
    let mut v = F::one();
    for y in ys {
        for z in zs {
            v = v * (z.clone() - y.clone());
        }
    }
    v
}

/// The two-point grid determinant of the balanced case, with
/// `R(z_i, y_j) / (z_i - y_j)` blocks and the stated prefactor.
fn balanced_r_route<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<F> {
    let k = ys.len();
    let mut grid = Vec::with_capacity(k);
    for z in zs {
        let mut row = Vec::with_capacity(k);
        for y in ys {
            let d = z.clone() - y.clone();
            row.push(matrix_r(spec, z, y)?.scale(&(F::one() / d)));
        }
        grid.push(row);
    }
    let det = Mat::from_blocks(&grid).det();
    let prefactor = (cross_product(ys, zs)
        / (vandermonde_power(ys, 1, false) * vandermonde_power(zs, 1, true)))
    .powi(spec.p());
    Ok(prefactor * det)
}

/// The dual grid with `L(y_i, z_j) / (z_j - y_i)` blocks.
fn balanced_l_route<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<F> {
    let k = ys.len();
    let mut grid = Vec::with_capacity(k);
    for y in ys {
        let mut row = Vec::with_capacity(k);
        for z in zs {
            let d = z.clone() - y.clone();
            row.push(matrix_l(spec, y, z)?.scale(&(F::one() / d)));
        }
        grid.push(row);
    }
    let det = Mat::from_blocks(&grid).det();
    let prefactor = (cross_product(ys, zs)
        / (vandermonde_power(ys, 1, true) * vandermonde_power(zs, 1, false)))
    .powi(spec.q());
    Ok(prefactor * det)
}

/// Balanced average with `K` numerator and `K` denominator points; the
/// `R`-grid is the primary route, the `L`-grid its asserted dual.
pub fn avg_balanced<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<F> {
    if ys.len() != zs.len() || ys.is_empty() {
        return Err(Error::Shape(
            "avg_balanced needs K = L with K >= 1".into(),
        ));
    }
    let all: Vec<&F> = ys.iter().chain(zs).collect();
    check_distinct(&all)?;
    check_off_support(spec, zs)?;
    spec.require_normal(spec.pair())?;
    let r = balanced_r_route(spec, ys, zs)?;
    let l = balanced_l_route(spec, ys, zs)?;
    routes_must_agree("balanced R-grid vs L-grid", &r, &l)?;
    Ok(r)
}

/// General average with `K >= L`: `L` rows of the `R`-grid stacked over
/// `K - L` chain rows of `M_{1,1}` blocks.
fn general_k_ge_l<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<F> {
    let k = ys.len();
    let l = zs.len();
    debug_assert!(k >= l && k >= 1);
    let mut grid = Vec::with_capacity(k);
    for z in zs {
        let mut row = Vec::with_capacity(k);
        for y in ys {
            let d = z.clone() - y.clone();
            row.push(matrix_r(spec, z, y)?.scale(&(F::one() / d)));
        }
        grid.push(row);
    }
    for rh in &chain_blocks_up(spec, k - l)? {
        grid.push(ys.iter().map(|y| rh.m11(y)).collect());
    }
    let det = Mat::from_blocks(&grid).det();
    let sign = if (l * (k - l)) % 2 == 1 {
        -F::one()
    } else {
        F::one()
    };
    let prefactor = (sign * cross_product(ys, zs)
        / (vandermonde_power(ys, 1, false) * vandermonde_power(zs, 1, true)))
    .powi(spec.p());
    Ok(prefactor * det)
}

/// General average with `L >= K`: `K` rows of the `L`-grid stacked over
/// `L - K` chain rows of `M_{2,2}` blocks along the downward chain.
fn general_l_ge_k<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<F> {
    let k = ys.len();
    let l = zs.len();
    debug_assert!(l >= k && l >= 1);
    if l - k > 0 {
        let max = 1 + spec.pair().min_m();
        if l - k > max {
            return Err(Error::ChainDepthExceeded {
                requested: l - k,
                max,
            });
        }
    }
    let mut grid = Vec::with_capacity(l);
    for y in ys {
        let mut row = Vec::with_capacity(l);
        for z in zs {
            let d = z.clone() - y.clone();
            row.push(matrix_l(spec, y, z)?.scale(&(F::one() / d)));
        }
        grid.push(row);
    }
    for rh in &chain_blocks_down(spec, l - k)? {
        let mut row = Vec::with_capacity(l);
        for z in zs {
            row.push(rh.m22(z)?);
        }
        grid.push(row);
    }
    let det = Mat::from_blocks(&grid).det();
    let prefactor = (cross_product(ys, zs)
        / (vandermonde_power(ys, 1, true) * vandermonde_power(zs, 1, false)))
    .powi(spec.q());
    Ok(prefactor * det)
}

/// Averaged ratio of products for arbitrary `K, L >= 0` (not both
/// zero). At `K = L` the balanced grid is preferred and the stacked
/// form is cross-checked against it.
pub fn avg_general<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<F> {
    let all: Vec<&F> = ys.iter().chain(zs).collect();
    if all.is_empty() {
        return Err(Error::Shape("avg_general needs at least one point".into()));
    }
    check_distinct(&all)?;
    check_off_support(spec, zs)?;
    spec.require_normal(spec.pair())?;
    let k = ys.len();
    let l = zs.len();
    if k == l {
        let balanced = avg_balanced(spec, ys, zs)?;
        let stacked = general_k_ge_l(spec, ys, zs)?;
        routes_must_agree("balanced grid vs stacked form", &balanced, &stacked)?;
        Ok(balanced)
    } else if k > l {
        general_k_ge_l(spec, ys, zs)
    } else {
        general_l_ge_k(spec, ys, zs)
    }
}

/// Both sides of the scalar-kernel identity available when `q = 1` and
/// the second weight is the constant 1: the balanced average on one
/// side, `1 - (z - y) int K-hat(y, x)/(z - x) dmu(x)` on the other.
pub fn corollary_scalar_relation<F: Scalar>(
    spec: &EnsembleSpec<F>,
    y: &F,
    z: &F,
) -> Result<(F, F)> {
    let (_, w2) = spec.weights().rank_one_parts()?;
    if spec.q() != 1 || !w2[0].is_unit() {
        return Err(Error::RequiresRankOne);
    }
    let lhs = avg_ratio(spec, y, z)?;
    let mut integral = F::zero();
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
        integral = integral + mass.clone() * kernel_scalar(spec, y, node)? / d;
    }
    let rhs = F::one() - (z.clone() - y.clone()) * integral;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::DiscreteMeasure;
    use crate::multi_index::MultiIndexPair;
    use crate::oracles::oracle_enumerate_default_cap;
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

    fn e2() -> EnsembleSpec<Rat> {
        let measure =
            DiscreteMeasure::uniform(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]).unwrap();
        let w1 = vec![
            WeightExpr::one(),
            WeightExpr::from_poly(crate::poly::Polynomial::monomial(1)),
        ];
        let w2 = vec![WeightExpr::one()];
        let pair = MultiIndexPair::new(vec![1, 1], vec![2]).unwrap();
        EnsembleSpec::new(Weights::rank_one(w1, w2).unwrap(), measure, pair).unwrap()
    }

    #[test]
    fn avg_char_examples() {
        assert_eq!(avg_char(&e1(1), &rat(0, 1)).unwrap(), rat(-1, 2));
        assert_eq!(avg_char(&e2(), &rat(1, 1)).unwrap(), rat(1, 3));
        assert_eq!(avg_char(&e1(2), &rat(0, 1)).unwrap(), rat(0, 1));
    }

    #[test]
    fn avg_char_poly_is_monic() {
        let p = avg_char_poly(&e2()).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.leading().unwrap(), &rat(1, 1));
    }

    #[test]
    fn avg_inv_char_examples() {
        assert_eq!(avg_inv_char(&e1(1), &rat(2, 1)).unwrap(), rat(3, 4));
        assert_eq!(avg_inv_char(&e1(2), &rat(2, 1)).unwrap(), rat(1, 2));
    }

    #[test]
    fn avg_inv_char_large_argument_decays_like_inverse() {
        use crate::scalar::Cf64;
        let spec = e1(1).to_complex();
        let z = Cf64::new(1.0e6, 0.0);
        let got = avg_inv_char(&spec, &z).unwrap();
        assert!((got * z - Cf64::new(1.0, 0.0)).norm() < 1e-5);
    }

    #[test]
    fn avg_ratio_examples() {
        assert_eq!(
            avg_ratio(&e1(1), &rat(0, 1), &rat(2, 1)).unwrap(),
            rat(-1, 2)
        );
        // y = z off support is trivially 1
        assert_eq!(
            avg_ratio(&e1(1), &rat(7, 1), &rat(7, 1)).unwrap(),
            rat(1, 1)
        );
    }

    #[test]
    fn avg_products_examples() {
        // K = 1 reduces to the characteristic polynomial.
        assert_eq!(
            avg_products(&e1(1), &[rat(0, 1)]).unwrap(),
            avg_char(&e1(1), &rat(0, 1)).unwrap()
        );
        assert_eq!(
            avg_products(&e1(1), &[rat(2, 1), rat(3, 1)]).unwrap(),
            rat(4, 1)
        );
        assert!(matches!(
            avg_products(&e1(1), &[rat(2, 1), rat(2, 1)]),
            Err(Error::DuplicatePoint { .. })
        ));
    }

    #[test]
    fn avg_inv_products_examples() {
        assert_eq!(
            avg_inv_products(&e1(1), &[rat(2, 1)]).unwrap(),
            avg_inv_char(&e1(1), &rat(2, 1)).unwrap()
        );
        let zs = [rat(2, 1), rat(3, 1)];
        let want = oracle_enumerate_default_cap(&e1(1), &[], &zs).unwrap();
        assert_eq!(avg_inv_products(&e1(1), &zs).unwrap(), want);
        // Depth bound: min m = 1, so L = 3 exceeds 1 + 1.
        assert!(matches!(
            avg_inv_products(&e1(1), &[rat(2, 1), rat(3, 1), rat(5, 1)]),
            Err(Error::ChainDepthExceeded { .. })
        ));
    }

    #[test]
    fn avg_balanced_matches_enumeration() {
        let ys = [rat(0, 1), rat(3, 1)];
        let zs = [rat(2, 1), rat(5, 1)];
        let want = oracle_enumerate_default_cap(&e1(1), &ys, &zs).unwrap();
        assert_eq!(avg_balanced(&e1(1), &ys, &zs).unwrap(), want);

        let ys = [rat(0, 1), rat(2, 1)];
        let zs = [rat(3, 1), rat(5, 1)];
        let want = oracle_enumerate_default_cap(&e2(), &ys, &zs).unwrap();
        assert_eq!(avg_balanced(&e2(), &ys, &zs).unwrap(), want);
    }

    #[test]
    fn avg_balanced_k1_is_avg_ratio() {
        let got = avg_balanced(&e1(2), &[rat(0, 1)], &[rat(2, 1)]).unwrap();
        assert_eq!(got, avg_ratio(&e1(2), &rat(0, 1), &rat(2, 1)).unwrap());
    }

    #[test]
    fn avg_general_examples() {
        // K = 2, L = 1 on E1 (1),(1)
        let ys = [rat(3, 1), rat(5, 1)];
        let zs = [rat(2, 1)];
        let want = oracle_enumerate_default_cap(&e1(1), &ys, &zs).unwrap();
        assert_eq!(want, rat(31, 4));
        assert_eq!(avg_general(&e1(1), &ys, &zs).unwrap(), want);

        // L > K branch on E1 (2),(2)
        let ys = [rat(3, 1)];
        let zs = [rat(2, 1), rat(5, 1)];
        let want = oracle_enumerate_default_cap(&e1(2), &ys, &zs).unwrap();
        assert_eq!(avg_general(&e1(2), &ys, &zs).unwrap(), want);

        // K = L goes through the balanced grid and the stacked check.
        let ys = [rat(0, 1)];
        let zs = [rat(2, 1)];
        assert_eq!(
            avg_general(&e1(1), &ys, &zs).unwrap(),
            avg_balanced(&e1(1), &ys, &zs).unwrap()
        );
    }

    #[test]
    fn avg_general_e2_mixed() {
        let spec = e2();
        for (ys, zs) in [
            (vec![rat(2, 1), rat(3, 1)], vec![rat(5, 1)]),
            (vec![rat(2, 1)], vec![rat(5, 1), rat(7, 1)]),
        ] {
            let want = oracle_enumerate_default_cap(&spec, &ys, &zs).unwrap();
            let got = avg_general(&spec, &ys, &zs).unwrap();
            assert_eq!(got, want, "ys = {:?}, zs = {:?}", ys, zs);
        }
    }

    #[test]
    fn e2_upward_chain_is_structurally_non_normal() {
        // With w1 = (1, x) the function system of the chain pair
        // (2,2),(4) contains x twice, so the pair is never normal and
        // K = 2 products are inadmissible for this family.
        assert!(matches!(
            avg_products(&e2(), &[rat(2, 1), rat(3, 1)]),
            Err(Error::NonNormal { .. })
        ));
    }

    #[test]
    fn avg_products_depth_three() {
        let measure =
            DiscreteMeasure::uniform(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]).unwrap();
        let spec = EnsembleSpec::new(
            Weights::units(1, 1),
            measure,
            MultiIndexPair::new(vec![1], vec![1]).unwrap(),
        )
        .unwrap();
        let ys = [rat(2, 1), rat(3, 1), rat(4, 1)];
        let want = oracle_enumerate_default_cap(&spec, &ys, &[]).unwrap();
        assert_eq!(avg_products(&spec, &ys).unwrap(), want);
    }

    #[test]
    fn corollary_both_sides_agree() {
        let (lhs, rhs) = corollary_scalar_relation(&e1(1), &rat(0, 1), &rat(2, 1)).unwrap();
        assert_eq!(lhs, rat(-1, 2));
        assert_eq!(rhs, rat(-1, 2));
        let (lhs, rhs) = corollary_scalar_relation(&e1(1), &rat(4, 1), &rat(4, 1)).unwrap();
        assert_eq!(lhs, rat(1, 1));
        assert_eq!(rhs, rat(1, 1));
        let (lhs, rhs) = corollary_scalar_relation(&e2(), &rat(1, 1), &rat(3, 1)).unwrap();
        assert_eq!(lhs, rhs);
        let want = oracle_enumerate_default_cap(&e2(), &[rat(1, 1)], &[rat(3, 1)]).unwrap();
        assert_eq!(lhs, want);
    }

    #[test]
    fn dual_symmetry_of_averages() {
        let spec = e2();
        let dual = spec.dual();
        let (y, z) = (rat(2, 1), rat(5, 1));
        assert_eq!(
            avg_char(&spec, &y).unwrap(),
            avg_char(&dual, &y).unwrap()
        );
        assert_eq!(
            avg_inv_char(&spec, &z).unwrap(),
            avg_inv_char(&dual, &z).unwrap()
        );
        assert_eq!(
            avg_ratio(&spec, &y, &z).unwrap(),
            avg_ratio(&dual, &y, &z).unwrap()
        );
    }

    #[test]
    fn permutation_invariance() {
        let spec = e1(1);
        let a = avg_products(&spec, &[rat(2, 1), rat(3, 1)]).unwrap();
        let b = avg_products(&spec, &[rat(3, 1), rat(2, 1)]).unwrap();
        assert_eq!(a, b);
        let a = avg_balanced(&spec, &[rat(0, 1), rat(3, 1)], &[rat(2, 1), rat(5, 1)]).unwrap();
        let b = avg_balanced(&spec, &[rat(3, 1), rat(0, 1)], &[rat(5, 1), rat(2, 1)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn chain_choice_independence() {
        // The downward chain of a p = 2 ensemble has two admissible
        // branches; the averaged ratio must not depend on the choice.
        let measure = DiscreteMeasure::new(
            vec![rat(-2, 1), rat(-1, 1), rat(0, 1), rat(1, 1), rat(2, 1)],
            vec![rat(1, 8), rat(1, 8), rat(2, 8), rat(1, 8), rat(3, 8)],
        )
        .unwrap();
        let w1 = vec![
            WeightExpr::one(),
            WeightExpr::from_poly(crate::poly::Polynomial::monomial(2)),
        ];
        let base = EnsembleSpec::new(
            Weights::rank_one(w1, vec![WeightExpr::one()]).unwrap(),
            measure,
            MultiIndexPair::new(vec![1, 1], vec![2]).unwrap(),
        )
        .unwrap();
        let zs = [rat(5, 2), rat(7, 2)];
        let via_first = base
            .clone()
            .with_chain_policy(crate::multi_index::ChainPolicy {
                up_mvecs: vec![],
                down_nvecs: vec![vec![0, 1]],
            });
        let via_second = base
            .clone()
            .with_chain_policy(crate::multi_index::ChainPolicy {
                up_mvecs: vec![],
                down_nvecs: vec![vec![1, 0]],
            });
        let a = avg_inv_products(&via_first, &zs).unwrap();
        let b = avg_inv_products(&via_second, &zs).unwrap();
        assert_eq!(a, b);
        let want = oracle_enumerate_default_cap(&base, &[], &zs).unwrap();
        assert_eq!(a, want);
    }

    #[test]
    fn non_normal_reported_with_chain_pair() {
        // E1 on two atoms: the chain pair (2),(2) is fine but (3),(3)
        // is not; avg_products with K = 3 must name the failing pair.
        let got = avg_products(&e1(1), &[rat(2, 1), rat(3, 1), rat(5, 1)]);
        match got {
            Err(Error::NonNormal { nvec, mvec }) => {
                assert_eq!(nvec, vec![3]);
                assert_eq!(mvec, vec![3]);
            }
            other => panic!("expected NonNormal, got {:?}", other),
        }
    }
}
