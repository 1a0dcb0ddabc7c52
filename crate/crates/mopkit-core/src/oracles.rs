//! Independent ground-truth computations.
//!
//! Two oracles evaluate the averaged ratio of characteristic
//! polynomials without ever touching the transfer matrix: a brute-force
//! sum over all ordered node configurations, and the Gram-determinant
//! route that trades the n-fold sum for a single n x n determinant.
//! They must agree exactly with each other and with every formula in
//! [`crate::averages`].

use crate::ensemble::EnsembleSpec;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::DEFAULT_ENUM_CAP;

/// The ensemble's two function systems evaluated on the support:
/// `tables.0[i][node]` is `f_i`, `tables.1[i][node]` is `g_i`, where
/// `f_i` runs over weighted monomials of the first system and `g_i`
/// over the second. Rank-one weight systems only.
fn function_tables<F: Scalar>(spec: &EnsembleSpec<F>) -> Result<(Vec<Vec<F>>, Vec<Vec<F>>)> {
    let (w1, w2) = spec.weights().rank_one_parts()?;
    let nodes = spec.measure().nodes();
    let mut f = Vec::with_capacity(spec.n());
    for (k, &nk) in spec.pair().nvec().iter().enumerate() {
        for d in 0..nk {
            let mut row = Vec::with_capacity(nodes.len());
            for node in nodes {
                row.push(node.powi(d) * w1[k].eval(node)?);
            }
            f.push(row);
        }
    }
    let mut g = Vec::with_capacity(spec.n());
    for (l, &ml) in spec.pair().mvec().iter().enumerate() {
        for d in 0..ml {
            let mut row = Vec::with_capacity(nodes.len());
            for node in nodes {
                row.push(node.powi(d) * w2[l].eval(node)?);
            }
            g.push(row);
        }
    }
    Ok((f, g))
}

fn check_query_points<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<()> {
    let mut seen: Vec<&F> = Vec::new();
    for pt in ys.iter().chain(zs) {
        if seen.contains(&pt) {
            return Err(Error::DuplicatePoint { point: pt.render() });
        }
        seen.push(pt);
    }
    for z in zs {
        if spec.measure().contains_node(z) {
            return Err(Error::PoleOnSupport { point: z.render() });
        }
    }
    Ok(())
}

/// Normalization constant `Z_n = n! * det H`.
pub fn normalization_z<F: Scalar>(spec: &EnsembleSpec<F>) -> Result<F> {
    let det = spec.hankel()?.det();
    if det.is_zero() {
        return Err(Error::NonNormal {
            nvec: spec.pair().nvec().to_vec(),
            mvec: spec.pair().mvec().to_vec(),
        });
    }
    let mut fact = F::one();
    for k in 2..=spec.n() as i64 {
        fact = fact * F::from_int(k);
    }
    Ok(fact * det)
}

/// Unnormalized enumeration
/// `sum over node tuples of prod_k prod_j (y_k - x_j) / prod_l prod_j
/// (z_l - x_j) * det(f_i(x_j)) * det(g_i(x_j)) * prod_j mass(x_j)`,
/// over ordered tuples; tuples with a repeated node contribute zero and
/// are skipped.
fn enumerate_sum<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F], cap: u64) -> Result<F> {
    let n = spec.n();
    let nodes = spec.measure().nodes();
    let masses = spec.measure().masses();
    let count = nodes.len();
    let terms = (count as u128).pow(n as u32);
    if terms > cap as u128 {
        return Err(Error::EnumerationCapExceeded { terms, cap });
    }
    let (f_table, g_table) = function_tables(spec)?;
    // Per-node value of the ratio prefactor and the mass.
    let mut node_factor = Vec::with_capacity(count);
    for (i, node) in nodes.iter().enumerate() {
        let mut v = masses[i].clone();
        for y in ys {
            v = v * (y.clone() - node.clone());
        }
        for z in zs {
            v = v / (z.clone() - node.clone());
        }
        node_factor.push(v);
    }

    let mut acc = F::zero();
    let mut idx = vec![0usize; n];
    loop {
        // Ordered tuples with distinct entries; a repeated node makes
        // both determinants vanish.
        let distinct = (0..n).all(|a| (a + 1..n).all(|b| idx[a] != idx[b]));
        if distinct {
            let fm = Mat::from_fn(n, n, |i, j| f_table[i][idx[j]].clone());
            let gm = Mat::from_fn(n, n, |i, j| g_table[i][idx[j]].clone());
            let mut term = fm.det() * gm.det();
            for &j in &idx {
                term = term * node_factor[j].clone();
            }
            acc = acc + term;
        }
        // Advance the mixed-radix counter.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(acc);
            }
            idx[pos] += 1;
            if idx[pos] < count {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Brute-force configuration-sum oracle for the averaged ratio of
/// characteristic polynomials.
pub fn oracle_enumerate<F: Scalar>(
    spec: &EnsembleSpec<F>,
    ys: &[F],
    zs: &[F],
    cap: u64,
) -> Result<F> {
    check_query_points(spec, ys, zs)?;
    let z_n = normalization_z(spec)?;
    let sum = enumerate_sum(spec, ys, zs, cap)?;
    Ok(sum / z_n)
}

pub fn oracle_enumerate_default_cap<F: Scalar>(
    spec: &EnsembleSpec<F>,
    ys: &[F],
    zs: &[F],
) -> Result<F> {
    oracle_enumerate(spec, ys, zs, DEFAULT_ENUM_CAP)
}

/// Unnormalized total mass `sum det f * det g * prod masses`, the
/// enumeration route to `Z_n`.
pub fn normalization_z_enumerate<F: Scalar>(spec: &EnsembleSpec<F>, cap: u64) -> Result<F> {
    enumerate_sum(spec, &[], &[], cap)
}

/// Gram-determinant oracle: the ratio of the modified and unmodified
/// Gram determinants,
/// `det( int f_i g_j prod(y_k - x)/prod(z_l - x) dmu ) / det H`.
pub fn oracle_andreief<F: Scalar>(spec: &EnsembleSpec<F>, ys: &[F], zs: &[F]) -> Result<F> {
    check_query_points(spec, ys, zs)?;
    let kappa = spec.hankel()?.det();
    if kappa.is_zero() {
        return Err(Error::NonNormal {
            nvec: spec.pair().nvec().to_vec(),
            mvec: spec.pair().mvec().to_vec(),
        });
    }
    let n = spec.n();
    let nodes = spec.measure().nodes();
    let masses = spec.measure().masses();
    let (f_table, g_table) = function_tables(spec)?;
    let mut node_factor = Vec::with_capacity(nodes.len());
    for (i, node) in nodes.iter().enumerate() {
        let mut v = masses[i].clone();
        for y in ys {
            v = v * (y.clone() - node.clone());
        }
        for z in zs {
            v = v / (z.clone() - node.clone());
        }
        node_factor.push(v);
    }
    let gram = Mat::from_fn(n, n, |i, j| {
        let mut acc = F::zero();
        for t in 0..nodes.len() {
            acc = acc + f_table[i][t].clone() * g_table[j][t].clone() * node_factor[t].clone();
        }
        acc
    });
    Ok(gram.det() / kappa)
}

/// Closed form of the Cauchy-Vandermonde determinant with monomial rows
/// `x^0 .. x^{n-1}` and Cauchy rows `1/(z_i - x)`:
/// `prod_{i<j}(z_i - z_j) * prod_{i<j}(x_j - x_i) / prod_{i,j}(z_i - x_j)`.
pub fn cauchy_vandermonde<F: Scalar>(xs: &[F], zs: &[F]) -> Result<F> {
    for (i, a) in xs.iter().enumerate() {
        for b in &xs[i + 1..] {
            if a == b {
                return Err(Error::DuplicatePoint { point: a.render() });
            }
        }
    }
    for (i, a) in zs.iter().enumerate() {
        for b in &zs[i + 1..] {
            if a == b {
                return Err(Error::DuplicatePoint { point: a.render() });
            }
        }
    }
    for z in zs {
        if xs.contains(z) {
            return Err(Error::DuplicatePoint { point: z.render() });
        }
    }
    let mut value = F::one();
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            value = value * (zs[i].clone() - zs[j].clone());
        }
    }
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            value = value * (xs[j].clone() - xs[i].clone());
        }
    }
    for z in zs {
        for x in xs {
            value = value / (z.clone() - x.clone());
        }
    }
    Ok(value)
}

/// The matrix whose determinant [`cauchy_vandermonde`] computes:
/// `n` monomial rows followed by `m` Cauchy rows, evaluated at the
/// `n + m` points `xs`.
pub fn cauchy_vandermonde_matrix<F: Scalar>(xs: &[F], zs: &[F], n: usize) -> Mat<F> {
    debug_assert_eq!(xs.len(), n + zs.len());
    Mat::from_fn(xs.len(), xs.len(), |i, j| {
        if i < n {
            xs[j].powi(i)
        } else {
            F::one() / (zs[i - n].clone() - xs[j].clone())
        }
    })
}
