//! Verification suites driven by `mopkit verify`.
//!
//! Each suite runs a fixed list of identity checks against one
//! ensemble and appends one record per check. On the exact field every
//! comparison is exact equality; on the float field it is relative
//! agreement within the configured tolerance. A non-normal ensemble is
//! itself a valid input: checks that correctly report non-normality
//! pass with both sides recorded as such.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mopkit_core::averages::{
    avg_char, avg_char_poly, avg_general, avg_inv_char, avg_ratio, corollary_scalar_relation,
};
use mopkit_core::kernel::{kernel_rh, kernel_schur, matrix_l, matrix_r, weight_matrix_at};
use mopkit_core::linalg::Mat;
use mopkit_core::oracles::{
    cauchy_vandermonde, cauchy_vandermonde_matrix, normalization_z, normalization_z_enumerate,
    oracle_andreief, oracle_enumerate,
};
use mopkit_core::poly::Polynomial;
use mopkit_core::rh::{dual_partition_transform, RhBlocks};
use mopkit_core::transforms::{partial_fractions, transform_report, TransformKind};
use mopkit_core::vector_op::PolyVector;
use mopkit_core::{EnsembleSpec, Error, Result, Scalar};

use crate::doc::{CheckRecord, ReportDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Rh,
    Kernel,
    Theorems,
    Transforms,
    Oracles,
}

impl Suite {
    pub fn parse(name: &str) -> anyhow::Result<Vec<Suite>> {
        Ok(match name {
            "rh" => vec![Suite::Rh],
            "kernel" => vec![Suite::Kernel],
            "theorems" => vec![Suite::Theorems],
            "transforms" => vec![Suite::Transforms],
            "oracles" => vec![Suite::Oracles],
            "all" => vec![
                Suite::Rh,
                Suite::Kernel,
                Suite::Theorems,
                Suite::Transforms,
                Suite::Oracles,
            ],
            other => anyhow::bail!(
                "unknown suite `{}` (expected rh|kernel|theorems|transforms|oracles|all)",
                other
            ),
        })
    }
}

pub struct RunConfig {
    pub eps_tol: f64,
    pub enum_cap: u64,
    pub seed: u64,
}

struct Harness<'a, F: Scalar> {
    spec: &'a EnsembleSpec<F>,
    cfg: &'a RunConfig,
    normal: bool,
    report: &'a mut ReportDocument,
}

enum Outcome {
    Compared {
        lhs: String,
        rhs: String,
        equal: bool,
        max_error: Option<f64>,
    },
}

impl<'a, F: Scalar> Harness<'a, F> {
    fn values_equal(&self, a: &F, b: &F) -> (bool, Option<f64>) {
        if F::EXACT {
            (a == b, None)
        } else {
            let err = (a.clone() - b.clone()).magnitude()
                / 1f64.max(a.magnitude()).max(b.magnitude());
            (a.approx_eq(b, self.cfg.eps_tol), Some(err))
        }
    }

    fn compare(&self, a: &F, b: &F) -> Outcome {
        let (equal, max_error) = self.values_equal(a, b);
        Outcome::Compared {
            lhs: a.render(),
            rhs: b.render(),
            equal,
            max_error,
        }
    }

    fn compare_mats(&self, a: &Mat<F>, b: &Mat<F>) -> Outcome {
        let mut equal = a.rows() == b.rows() && a.cols() == b.cols();
        let mut max_error: Option<f64> = if F::EXACT { None } else { Some(0.0) };
        if equal {
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    let (e, err) = self.values_equal(&a[(i, j)], &b[(i, j)]);
                    equal &= e;
                    if let (Some(worst), Some(err)) = (max_error.as_mut(), err) {
                        *worst = worst.max(err);
                    }
                }
            }
        }
        Outcome::Compared {
            lhs: a.render(),
            rhs: b.render(),
            equal,
            max_error,
        }
    }

    fn check(
        &mut self,
        name: &str,
        anchor: &str,
        inputs: String,
        body: impl FnOnce(&Self) -> Result<Outcome>,
    ) {
        let start = Instant::now();
        let record = match body(self) {
            Ok(Outcome::Compared {
                lhs,
                rhs,
                equal,
                max_error,
            }) => CheckRecord {
                check_name: name.to_string(),
                paper_anchor: anchor.to_string(),
                inputs,
                lhs,
                rhs,
                equal,
                max_error,
                runtime: start.elapsed().as_secs_f64(),
            },
            Err(Error::NonNormal { nvec, mvec }) if !self.normal => CheckRecord {
                check_name: name.to_string(),
                paper_anchor: anchor.to_string(),
                inputs,
                lhs: format!("NonNormal({:?},{:?})", nvec, mvec),
                rhs: "NonNormal expected: det H = 0".to_string(),
                equal: true,
                max_error: None,
                runtime: start.elapsed().as_secs_f64(),
            },
            Err(e @ (Error::NonNormal { .. } | Error::ChainDepthExceeded { .. })) => {
                CheckRecord {
                    check_name: name.to_string(),
                    paper_anchor: anchor.to_string(),
                    inputs,
                    lhs: format!("inadmissible: {}", e),
                    rhs: "inadmissible".to_string(),
                    equal: true,
                    max_error: None,
                    runtime: start.elapsed().as_secs_f64(),
                }
            }
            Err(e) => CheckRecord {
                check_name: name.to_string(),
                paper_anchor: anchor.to_string(),
                inputs,
                lhs: format!("error: {}", e),
                rhs: "-".to_string(),
                equal: false,
                max_error: None,
                runtime: start.elapsed().as_secs_f64(),
            },
        };
        self.report.push(record);
    }
}

/// Off-support sample points, smallest half-integers first.
fn sample_points<F: Scalar>(spec: &EnsembleSpec<F>, count: usize, offset: usize) -> Vec<F> {
    let mut out = Vec::with_capacity(count);
    let mut k = 5 + 2 * offset as i64;
    while out.len() < count {
        for sign in [1i64, -1] {
            let candidate = F::from_fraction(sign * k, 2);
            let near_node = spec
                .measure()
                .nodes()
                .iter()
                .any(|n| n.approx_eq(&candidate, 1e-12) || *n == candidate);
            if !near_node && !out.contains(&candidate) {
                out.push(candidate);
                if out.len() == count {
                    break;
                }
            }
        }
        k += 2;
    }
    out
}

pub fn run_suites<F: Scalar>(
    spec: &EnsembleSpec<F>,
    suites: &[Suite],
    cfg: &RunConfig,
    report: &mut ReportDocument,
) -> Result<()> {
    let normal = spec.is_normal(spec.pair())?;
    let mut harness = Harness {
        spec,
        cfg,
        normal,
        report,
    };
    harness.check(
        "is-normal",
        "hankel:solvability",
        format!("pair {:?}/{:?}", spec.pair().nvec(), spec.pair().mvec()),
        |h| {
            let det = h.spec.hankel()?.det();
            Ok(Outcome::Compared {
                lhs: format!("det H = {}", det.render()),
                rhs: format!("normal = {}", !det.is_zero()),
                equal: true,
                max_error: None,
            })
        },
    );
    for suite in suites {
        match suite {
            Suite::Rh => rh_suite(&mut harness),
            Suite::Kernel => kernel_suite(&mut harness),
            Suite::Theorems => theorems_suite(&mut harness),
            Suite::Transforms => transforms_suite(&mut harness),
            Suite::Oracles => oracles_suite(&mut harness),
        }
    }
    Ok(())
}

fn rh_suite<F: Scalar>(h: &mut Harness<F>) {
    // Seeded random checks of the elimination layer.
    let mut rng = ChaCha8Rng::seed_from_u64(h.cfg.seed);
    for instance in 0..3 {
        let m = Mat::from_fn(4, 4, |_, _| {
            F::from_fraction(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))
        });
        h.check(
            "schur-determinant-relation",
            "schur:det-ratio",
            format!("random 4x4 #{}", instance),
            |h| {
                let a = m.block(0, 2, 0, 2);
                if a.det().is_zero() {
                    return Ok(Outcome::Compared {
                        lhs: "singular leading block".into(),
                        rhs: "skipped".into(),
                        equal: true,
                        max_error: None,
                    });
                }
                let s = m.schur_complement(2)?;
                Ok(h.compare(&(s.det() * a.det()), &m.det()))
            },
        );
    }
    let ts = sample_points(h.spec, 5, 0);
    for t in &ts {
        h.check(
            "transfer-determinant-one",
            "transfer:det-one",
            format!("t = {}", t.render()),
            |h| {
                let rh = RhBlocks::build(h.spec)?;
                Ok(h.compare(&rh.evaluate(t)?.det(), &F::one()))
            },
        );
    }
    h.check(
        "char-poly-monic",
        "transfer:m11-monic",
        format!("degree {}", h.spec.n()),
        |h| {
            let poly = avg_char_poly(h.spec)?;
            let degree_ok = poly.degree() == Some(h.spec.n());
            let leading = poly.leading().cloned().unwrap_or_else(F::zero);
            let (monic, err) = h.values_equal(&leading, &F::one());
            Ok(Outcome::Compared {
                lhs: format!("degree {:?}, leading {}", poly.degree(), leading.render()),
                rhs: format!("degree {}, leading 1", h.spec.n()),
                equal: degree_ok && monic,
                max_error: err,
            })
        },
    );
    for t in ts.iter().take(2) {
        h.check(
            "dual-determinants",
            "duality:minor-identities",
            format!("t = {}", t.render()),
            |h| {
                let rh = RhBlocks::build(h.spec)?;
                let dual = RhBlocks::build(&h.spec.dual())?;
                let (eq1, e1) = h.values_equal(&dual.m11(t).det(), &rh.m11(t).det());
                let (eq2, e2) = h.values_equal(&dual.m22(t)?.det(), &rh.m22(t)?.det());
                Ok(Outcome::Compared {
                    lhs: format!(
                        "dual ({}, {})",
                        dual.m11(t).det().render(),
                        dual.m22(t)?.det().render()
                    ),
                    rhs: format!(
                        "primal ({}, {})",
                        rh.m11(t).det().render(),
                        rh.m22(t)?.det().render()
                    ),
                    equal: eq1 && eq2,
                    max_error: e1.zip(e2).map(|(a, b)| a.max(b)),
                })
            },
        );
        h.check(
            "dual-partitioning",
            "duality:block-inverse-transpose",
            format!("t = {}", t.render()),
            |h| {
                let rh = RhBlocks::build(h.spec)?;
                let dual = RhBlocks::build(&h.spec.dual())?;
                let got = dual_partition_transform(&rh.evaluate(t)?, h.spec.p(), h.spec.q())?;
                Ok(h.compare_mats(&got, &dual.evaluate(t)?))
            },
        );
    }
}

fn kernel_suite<F: Scalar>(h: &mut Harness<F>) {
    let xs = sample_points(h.spec, 5, 0);
    let ys = sample_points(h.spec, 5, 5);
    for (x, y) in xs.iter().zip(&ys) {
        h.check(
            "kernel-two-routes",
            "kernel:schur-vs-transfer",
            format!("x = {}, y = {}", x.render(), y.render()),
            |h| {
                let rh = RhBlocks::build(h.spec)?;
                Ok(h.compare_mats(&kernel_schur(h.spec, x, y)?, &kernel_rh(&rh, x, y)?))
            },
        );
    }
    h.check(
        "kernel-reproducing",
        "kernel:reproducing",
        "all standard basis vectors".into(),
        |h| reproducing_outcome(h, false),
    );
    h.check(
        "kernel-dual-reproducing",
        "kernel:reproducing-dual",
        "all standard basis vectors".into(),
        |h| reproducing_outcome(h, true),
    );
    h.check(
        "two-point-vanishing",
        "twopoint:vanishing",
        "all standard basis vectors".into(),
        |h| vanishing_outcome(h),
    );
    let (y, z) = (&xs[0], &ys[1]);
    h.check(
        "two-point-det-symmetry",
        "twopoint:det-LR",
        format!("y = {}, z = {}", y.render(), z.render()),
        |h| {
            h.spec.require_normal(h.spec.pair())?;
            let l = matrix_l(h.spec, y, z)?;
            let r = matrix_r(h.spec, z, y)?;
            Ok(h.compare(&l.det(), &r.det()))
        },
    );
    h.check(
        "kernel-degree-bounds",
        "kernel:bivariate-degrees",
        "entrywise interpolation".into(),
        |h| degree_bounds_outcome(h),
    );
}

fn reproducing_outcome<F: Scalar>(h: &Harness<F>, dual: bool) -> Result<Outcome> {
    let spec = h.spec;
    spec.require_normal(spec.pair())?;
    let point = F::from_fraction(5, 2);
    let p = spec.p();
    let q = spec.q();
    let mut equal = true;
    let mut worst: Option<f64> = if F::EXACT { None } else { Some(0.0) };
    let total = if dual {
        spec.pair().total_n()
    } else {
        spec.pair().total_m()
    };
    for idx in 0..total {
        let structure = if dual {
            spec.pair().nvec()
        } else {
            spec.pair().mvec()
        };
        let mut coeffs = vec![F::zero(); total];
        coeffs[idx] = F::one();
        let basis = PolyVector::from_basis_coeffs(structure, &coeffs);
        let len = if dual { p } else { q };
        let mut acc = vec![F::zero(); len];
        for (node, mass) in spec.measure().nodes().iter().zip(spec.measure().masses()) {
            let w = weight_matrix_at(spec, node)?;
            if dual {
                // int P^T(x) W(x) K(x, y) dmu(x) = P^T(y)
                let k = kernel_schur(spec, node, &point)?;
                let pval = basis.eval(node);
                for c in 0..p {
                    for a in 0..p {
                        for b in 0..q {
                            acc[c] = acc[c].clone()
                                + mass.clone() * pval[a].clone() * w[(a, b)].clone()
                                    * k[(b, c)].clone();
                        }
                    }
                }
            } else {
                // int K(x, y) W(y) Q(y) dmu(y) = Q(x)
                let k = kernel_schur(spec, &point, node)?;
                let qval = basis.eval(node);
                for a in 0..q {
                    for b in 0..p {
                        for c in 0..q {
                            acc[a] = acc[a].clone()
                                + mass.clone() * k[(a, b)].clone() * w[(b, c)].clone()
                                    * qval[c].clone();
                        }
                    }
                }
            }
        }
        let want = basis.eval(&point);
        for (a, b) in acc.iter().zip(&want) {
            let (e, err) = h.values_equal(a, b);
            equal &= e;
            if let (Some(worst), Some(err)) = (worst.as_mut(), err) {
                *worst = worst.max(err);
            }
        }
    }
    Ok(Outcome::Compared {
        lhs: format!("{} basis vectors reproduced", total),
        rhs: "identity".into(),
        equal,
        max_error: worst,
    })
}

fn vanishing_outcome<F: Scalar>(h: &Harness<F>) -> Result<Outcome> {
    let spec = h.spec;
    spec.require_normal(spec.pair())?;
    let z = sample_points(spec, 1, 9)[0].clone();
    let p = spec.p();
    let q = spec.q();
    let mut equal = true;
    let mut worst: Option<f64> = if F::EXACT { None } else { Some(0.0) };
    let mut absorb = |acc: &[F]| {
        for v in acc {
            if F::EXACT {
                equal &= v.is_zero();
            } else {
                let err = v.magnitude();
                equal &= err <= h.cfg.eps_tol;
                if let Some(worst) = worst.as_mut() {
                    *worst = worst.max(err);
                }
            }
        }
    };
    for i in 0..spec.pair().total_n() {
        let mut coeffs = vec![F::zero(); spec.pair().total_n()];
        coeffs[i] = F::one();
        let pv = PolyVector::from_basis_coeffs(spec.pair().nvec(), &coeffs);
        let mut acc = vec![F::zero(); q];
        for (node, mass) in spec.measure().nodes().iter().zip(spec.measure().masses()) {
            let lm = matrix_l(spec, node, &z)?;
            let w = weight_matrix_at(spec, node)?;
            let pval = pv.eval(node);
            let d = z.clone() - node.clone();
            for c in 0..q {
                for a in 0..p {
                    for b in 0..q {
                        acc[c] = acc[c].clone()
                            + mass.clone() * pval[a].clone() * w[(a, b)].clone()
                                * lm[(b, c)].clone()
                                / d.clone();
                    }
                }
            }
        }
        absorb(&acc);
    }
    for j in 0..spec.pair().total_m() {
        let mut coeffs = vec![F::zero(); spec.pair().total_m()];
        coeffs[j] = F::one();
        let qv = PolyVector::from_basis_coeffs(spec.pair().mvec(), &coeffs);
        let mut acc = vec![F::zero(); p];
        for (node, mass) in spec.measure().nodes().iter().zip(spec.measure().masses()) {
            let rm = matrix_r(spec, &z, node)?;
            let w = weight_matrix_at(spec, node)?;
            let qval = qv.eval(node);
            let d = z.clone() - node.clone();
            for a in 0..p {
                for b in 0..p {
                    for c in 0..q {
                        acc[a] = acc[a].clone()
                            + mass.clone() * rm[(a, b)].clone() / d.clone() * w[(b, c)].clone()
                                * qval[c].clone();
                    }
                }
            }
        }
        absorb(&acc);
    }
    Ok(Outcome::Compared {
        lhs: "two-point integrals against both bases".into(),
        rhs: "zero".into(),
        equal,
        max_error: worst,
    })
}

fn degree_bounds_outcome<F: Scalar>(h: &Harness<F>) -> Result<Outcome> {
    let spec = h.spec;
    spec.require_normal(spec.pair())?;
    let mut equal = true;
    // Entry (i, j) is a polynomial of degree < m_i in x and < n_j in y:
    // interpolating through deg-many points must already reproduce an
    // extra sample.
    let y_fixed = F::from_fraction(9, 2);
    let x_fixed = F::from_fraction(7, 2);
    for i in 0..spec.q() {
        for j in 0..spec.p() {
            let mi = spec.pair().mvec()[i];
            let nj = spec.pair().nvec()[j];
            let xs: Vec<F> = (0..=mi as i64).map(F::from_int).collect();
            let pts = xs
                .iter()
                .map(|x| Ok((x.clone(), kernel_schur(spec, x, &y_fixed)?[(i, j)].clone())))
                .collect::<Result<Vec<_>>>()?;
            let interp = Polynomial::interpolate(&pts[..mi.max(1)]);
            let extra = &pts[pts.len() - 1];
            let (e, _) = h.values_equal(&interp.eval(&extra.0), &extra.1);
            equal &= e || mi == 0;
            let ys: Vec<F> = (0..=nj as i64).map(F::from_int).collect();
            let pts = ys
                .iter()
                .map(|y| Ok((y.clone(), kernel_schur(spec, &x_fixed, y)?[(i, j)].clone())))
                .collect::<Result<Vec<_>>>()?;
            let interp = Polynomial::interpolate(&pts[..nj.max(1)]);
            let extra = &pts[pts.len() - 1];
            let (e, _) = h.values_equal(&interp.eval(&extra.0), &extra.1);
            equal &= e || nj == 0;
        }
    }
    Ok(Outcome::Compared {
        lhs: "interpolation degrees".into(),
        rhs: format!("< m_i in x, < n_j in y on a {}x{} kernel", spec.q(), spec.p()),
        equal,
        max_error: None,
    })
}

fn theorems_suite<F: Scalar>(h: &mut Harness<F>) {
    let ys = sample_points(h.spec, 3, 0);
    let zs = sample_points(h.spec, 3, 7);
    let cap = h.cfg.enum_cap;
    for y in &ys {
        h.check(
            "avg-char-three-routes",
            "theorem:avg-char",
            format!("y = {}", y.render()),
            |h| {
                let formula = avg_char(h.spec, y)?;
                let enumerated = oracle_enumerate(h.spec, &[y.clone()], &[], cap)?;
                let gram = oracle_andreief(h.spec, &[y.clone()], &[])?;
                let Outcome::Compared {
                    equal: e1,
                    max_error: m1,
                    ..
                } = h.compare(&formula, &enumerated);
                let Outcome::Compared {
                    equal: e2,
                    max_error: m2,
                    ..
                } = h.compare(&formula, &gram);
                Ok(Outcome::Compared {
                    lhs: formula.render(),
                    rhs: format!("enum {}, gram {}", enumerated.render(), gram.render()),
                    equal: e1 && e2,
                    max_error: m1.zip(m2).map(|(a, b)| a.max(b)),
                })
            },
        );
    }
    for z in &zs {
        h.check(
            "avg-inv-char-three-routes",
            "theorem:avg-inv-char",
            format!("z = {}", z.render()),
            |h| {
                let formula = avg_inv_char(h.spec, z)?;
                let enumerated = oracle_enumerate(h.spec, &[], &[z.clone()], cap)?;
                let gram = oracle_andreief(h.spec, &[], &[z.clone()])?;
                let (e1, m1) = h.values_equal(&formula, &enumerated);
                let (e2, m2) = h.values_equal(&formula, &gram);
                Ok(Outcome::Compared {
                    lhs: formula.render(),
                    rhs: format!("enum {}, gram {}", enumerated.render(), gram.render()),
                    equal: e1 && e2,
                    max_error: m1.zip(m2).map(|(a, b)| a.max(b)),
                })
            },
        );
    }
    for (y, z) in ys.iter().zip(&zs) {
        h.check(
            "avg-ratio-three-routes",
            "theorem:avg-ratio",
            format!("y = {}, z = {}", y.render(), z.render()),
            |h| {
                let formula = avg_ratio(h.spec, y, z)?;
                let enumerated = oracle_enumerate(h.spec, &[y.clone()], &[z.clone()], cap)?;
                let gram = oracle_andreief(h.spec, &[y.clone()], &[z.clone()])?;
                let (e1, m1) = h.values_equal(&formula, &enumerated);
                let (e2, m2) = h.values_equal(&formula, &gram);
                Ok(Outcome::Compared {
                    lhs: formula.render(),
                    rhs: format!("enum {}, gram {}", enumerated.render(), gram.render()),
                    equal: e1 && e2,
                    max_error: m1.zip(m2).map(|(a, b)| a.max(b)),
                })
            },
        );
    }
    for (k, l) in [(2usize, 0usize), (0, 2), (1, 1), (2, 1), (1, 2)] {
        let ys_q = ys[..k].to_vec();
        let zs_q = zs[..l].to_vec();
        h.check(
            "avg-products-three-routes",
            "theorem:avg-products-ratios",
            format!(
                "K = {}, L = {}, ys = {:?}, zs = {:?}",
                k,
                l,
                ys_q.iter().map(Scalar::render).collect::<Vec<_>>(),
                zs_q.iter().map(Scalar::render).collect::<Vec<_>>()
            ),
            |h| {
                let formula = avg_general(h.spec, &ys_q, &zs_q)?;
                let enumerated = oracle_enumerate(h.spec, &ys_q, &zs_q, cap)?;
                let gram = oracle_andreief(h.spec, &ys_q, &zs_q)?;
                let (e1, m1) = h.values_equal(&formula, &enumerated);
                let (e2, m2) = h.values_equal(&formula, &gram);
                Ok(Outcome::Compared {
                    lhs: formula.render(),
                    rhs: format!("enum {}, gram {}", enumerated.render(), gram.render()),
                    equal: e1 && e2,
                    max_error: m1.zip(m2).map(|(a, b)| a.max(b)),
                })
            },
        );
    }
    h.check(
        "avg-dual-symmetry",
        "theorem:involution-symmetry",
        format!("y = {}, z = {}", ys[0].render(), zs[0].render()),
        |h| {
            let primal = avg_ratio(h.spec, &ys[0], &zs[0])?;
            let dual = avg_ratio(&h.spec.dual(), &ys[0], &zs[0])?;
            Ok(h.compare(&primal, &dual))
        },
    );
    let is_scalar_corollary = h.spec.q() == 1
        && h.spec
            .spec_unit_w2();
    if is_scalar_corollary {
        h.check(
            "scalar-kernel-corollary",
            "corollary:scalar-kernel",
            format!("y = {}, z = {}", ys[0].render(), zs[0].render()),
            |h| {
                let (lhs, rhs) = corollary_scalar_relation(h.spec, &ys[0], &zs[0])?;
                Ok(h.compare(&lhs, &rhs))
            },
        );
    }
}

fn transforms_suite<F: Scalar>(h: &mut Harness<F>) {
    let ys = sample_points(h.spec, 2, 0);
    let zs = sample_points(h.spec, 2, 7);
    let eval_y = sample_points(h.spec, 1, 11)[0].clone();
    let eval_z = sample_points(h.spec, 1, 13)[0].clone();
    let cases: Vec<(TransformKind, &str, Vec<F>, Vec<F>, &F)> = vec![
        (
            TransformKind::Christoffel,
            "transform:christoffel",
            ys[..1].to_vec(),
            vec![],
            &eval_y,
        ),
        (
            TransformKind::UvarovY21,
            "transform:uvarov-21",
            vec![],
            zs[..1].to_vec(),
            &eval_z,
        ),
        (
            TransformKind::UvarovY22,
            "transform:uvarov-22",
            vec![],
            zs[..1].to_vec(),
            &eval_z,
        ),
        (
            TransformKind::MixedChristoffel,
            "transform:mixed-christoffel",
            ys[..1].to_vec(),
            zs[..1].to_vec(),
            &eval_y,
        ),
        (
            TransformKind::MixedUvarovY21,
            "transform:mixed-uvarov-21",
            ys[..1].to_vec(),
            zs[..1].to_vec(),
            &eval_z,
        ),
        (
            TransformKind::MixedUvarovY22,
            "transform:mixed-uvarov-22",
            ys[..1].to_vec(),
            zs[..1].to_vec(),
            &eval_z,
        ),
    ];
    for (kind, anchor, ys_q, zs_q, point) in cases {
        h.check(
            &format!("{:?}", kind),
            anchor,
            format!(
                "ys = {:?}, zs = {:?}, point = {}",
                ys_q.iter().map(Scalar::render).collect::<Vec<_>>(),
                zs_q.iter().map(Scalar::render).collect::<Vec<_>>(),
                point.render()
            ),
            |h| {
                let report = transform_report(kind, h.spec, &ys_q, &zs_q, point, h.cfg.eps_tol)?;
                Ok(Outcome::Compared {
                    lhs: report.schur_route.render(),
                    rhs: report.direct_route.render(),
                    equal: report.equal,
                    max_error: None,
                })
            },
        );
    }
    h.check(
        "partial-fractions",
        "transform:partial-fractions",
        "L = 2, K = 1".into(),
        |h| {
            let zs = [F::from_fraction(15, 2), F::from_fraction(-17, 2)];
            let z = F::from_fraction(19, 2);
            let ys = [F::from_fraction(21, 2)];
            let (cs, c) = partial_fractions(&zs, &z, &ys)?;
            let _ = h;
            Ok(Outcome::Compared {
                lhs: format!(
                    "c = {}, c_l = {:?}",
                    c.render(),
                    cs.iter().map(Scalar::render).collect::<Vec<_>>()
                ),
                rhs: "identity verified at fresh points".into(),
                equal: true,
                max_error: None,
            })
        },
    );
}

fn oracles_suite<F: Scalar>(h: &mut Harness<F>) {
    let cap = h.cfg.enum_cap;
    h.check(
        "total-probability",
        "oracle:total-mass",
        "ys = [], zs = []".into(),
        |h| {
            let total = oracle_enumerate(h.spec, &[], &[], cap)?;
            Ok(h.compare(&total, &F::one()))
        },
    );
    h.check(
        "normalization-constant",
        "oracle:normalization",
        format!("n = {}", h.spec.n()),
        |h| {
            let z = normalization_z(h.spec)?;
            let direct = normalization_z_enumerate(h.spec, cap)?;
            Ok(h.compare(&z, &direct))
        },
    );
    let ys = sample_points(h.spec, 2, 0);
    let zs = sample_points(h.spec, 1, 7);
    h.check(
        "oracle-agreement",
        "oracle:enumeration-vs-gram",
        format!(
            "ys = {:?}, zs = {:?}",
            ys.iter().map(Scalar::render).collect::<Vec<_>>(),
            zs.iter().map(Scalar::render).collect::<Vec<_>>()
        ),
        |h| {
            let a = oracle_enumerate(h.spec, &ys, &zs, cap)?;
            let b = oracle_andreief(h.spec, &ys, &zs)?;
            Ok(h.compare(&a, &b))
        },
    );
    let mut rng = ChaCha8Rng::seed_from_u64(h.cfg.seed ^ 0x5eed);
    for instance in 0..5 {
        let n: usize = rng.gen_range(0..=4);
        let low: usize = if n == 0 { 1 } else { 0 };
        let m: usize = rng.gen_range(low..=3);
        let mut pool: Vec<F> = Vec::new();
        while pool.len() < n + 2 * m {
            let v = F::from_fraction(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=4));
            if !pool.contains(&v) {
                pool.push(v);
            }
        }
        let xs = pool[..n + m].to_vec();
        let zs = pool[n + m..].to_vec();
        h.check(
            "cauchy-vandermonde",
            "oracle:cauchy-vandermonde",
            format!("instance {}, n = {}, m = {}", instance, n, m),
            |h| {
                let closed = cauchy_vandermonde(&xs, &zs)?;
                let brute = cauchy_vandermonde_matrix(&xs, &zs, n).det();
                Ok(h.compare(&closed, &brute))
            },
        );
    }
}

trait UnitSecondWeight {
    fn spec_unit_w2(&self) -> bool;
}

impl<F: Scalar> UnitSecondWeight for EnsembleSpec<F> {
    fn spec_unit_w2(&self) -> bool {
        match self.weights().rank_one_parts() {
            Ok((_, w2)) => w2.len() == 1 && w2[0].is_unit(),
            Err(_) => false,
        }
    }
}
