//! Vector orthogonal polynomials of type I and type II, standard bases
//! of the polynomial vector spaces, and biorthogonal bases.
//!
//! A polynomial vector for a multi-index `n` has component `k` of degree
//! at most `n_k - 1`. The standard basis enumerates the monomials
//! component by component; the coefficients of a vector orthogonal
//! polynomial solve a bordered linear system whose first rows are
//! orthogonality conditions (columns of the moment matrix) and whose
//! last row is the chosen normalization. Exact singularity of that
//! system is reported as `NonNormal`, with no perturbation fallback.

use crate::ensemble::EnsembleSpec;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::multi_index::MultiIndexPair;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// A polynomial vector; component `k` is bounded by the degree budget of
/// the multi-index it was built for.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVector<F> {
    components: Vec<Polynomial<F>>,
}

impl<F: Scalar> PolyVector<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Self {
        PolyVector { components }
    }

    pub fn zero(len: usize) -> Self {
        PolyVector {
            components: vec![Polynomial::zero(); len],
        }
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn eval(&self, x: &F) -> Vec<F> {
        self.components.iter().map(|p| p.eval(x)).collect()
    }

    /// Assemble from coefficients in the standard basis of the space
    /// with the given degree structure.
    pub fn from_basis_coeffs(structure: &[usize], coeffs: &[F]) -> Self {
        assert_eq!(coeffs.len(), structure.iter().sum::<usize>());
        let mut components = Vec::with_capacity(structure.len());
        let mut off = 0;
        for &budget in structure {
            components.push(Polynomial::new(coeffs[off..off + budget].to_vec()));
            off += budget;
        }
        PolyVector { components }
    }
}

/// Flat standard-basis index -> (component, local degree).
pub fn decode_basis_index(structure: &[usize], i: usize) -> (usize, usize) {
    let mut off = 0;
    for (k, &budget) in structure.iter().enumerate() {
        if i < off + budget {
            return (k, i - off);
        }
        off += budget;
    }
    panic!("basis index {} out of range", i);
}

/// Evaluations of the standard basis vectors as the columns of a
/// `total x len(structure)` matrix: entry `(i, k)` is the `k`-th
/// component of the `i`-th basis vector at `point`.
pub fn basis_eval_columns<F: Scalar>(structure: &[usize], point: &F) -> Mat<F> {
    let total: usize = structure.iter().sum();
    let mut out = Mat::zeros(total, structure.len());
    let mut i = 0;
    for (k, &budget) in structure.iter().enumerate() {
        let mut power = F::one();
        for _ in 0..budget {
            out[(i, k)] = power.clone();
            power = power * point.clone();
            i += 1;
        }
    }
    out
}

fn non_normal(pair: &MultiIndexPair) -> Error {
    Error::NonNormal {
        nvec: pair.nvec().to_vec(),
        mvec: pair.mvec().to_vec(),
    }
}

/// Solve the bordered system shared by both normalizations: the first
/// `|m|` rows impose orthogonality to the standard basis of the dual
/// space, the last row is supplied by the caller.
fn solve_bordered<F: Scalar>(
    spec: &EnsembleSpec<F>,
    pair: &MultiIndexPair,
    last_row: Vec<F>,
) -> Result<PolyVector<F>> {
    let unknowns = pair.total_n();
    let conditions = pair.total_m();
    debug_assert_eq!(unknowns, conditions + 1);
    let gram = spec.moment_matrix(pair)?;
    let mut system = Mat::zeros(unknowns, unknowns);
    for j in 0..conditions {
        for i in 0..unknowns {
            system[(j, i)] = gram[(i, j)].clone();
        }
    }
    for (i, v) in last_row.into_iter().enumerate() {
        system[(conditions, i)] = v;
    }
    let mut rhs = Mat::zeros(unknowns, 1);
    rhs[(conditions, 0)] = F::one();
    let coeffs = system.solve(&rhs).map_err(|e| match e {
        Error::SingularMatrix => non_normal(pair),
        other => other,
    })?;
    let flat: Vec<F> = (0..unknowns).map(|i| coeffs[(i, 0)].clone()).collect();
    Ok(PolyVector::from_basis_coeffs(pair.nvec(), &flat))
}

/// Type II vector orthogonal polynomial: component `k` is monic of
/// degree `n_k - 1`. Needs `|n| = |m| + 1` and `n_k >= 1`.
pub fn vector_op_type2<F: Scalar>(
    spec: &EnsembleSpec<F>,
    pair: &MultiIndexPair,
    k: usize,
) -> Result<PolyVector<F>> {
    if pair.total_n() != pair.total_m() + 1 {
        return Err(Error::Shape("type II needs |n| = |m| + 1".into()));
    }
    if k >= pair.p() || pair.nvec()[k] == 0 {
        return Err(Error::Shape(format!(
            "type II normalization index {} has empty degree budget",
            k
        )));
    }
    let offset: usize = pair.nvec()[..k].iter().sum();
    let mut last_row = vec![F::zero(); pair.total_n()];
    last_row[offset + pair.nvec()[k] - 1] = F::one();
    solve_bordered(spec, pair, last_row)
}

/// Type I vector orthogonal polynomial: the pairing against
/// `e_l x^{m_l}` equals one. Needs `|n| = |m| + 1`.
pub fn vector_op_type1<F: Scalar>(
    spec: &EnsembleSpec<F>,
    pair: &MultiIndexPair,
    l: usize,
) -> Result<PolyVector<F>> {
    if pair.total_n() != pair.total_m() + 1 {
        return Err(Error::Shape("type I needs |n| = |m| + 1".into()));
    }
    if l >= pair.q() {
        return Err(Error::Shape(format!("type I index {} out of range", l)));
    }
    let ml = pair.mvec()[l];
    let unknowns = pair.total_n();
    let mut last_row = Vec::with_capacity(unknowns);
    for i in 0..unknowns {
        let (k, d) = decode_basis_index(pair.nvec(), i);
        last_row.push(spec.entry_moment(k, l, d + ml)?);
    }
    solve_bordered(spec, pair, last_row)
}

/// Biorthogonal bases of the two polynomial vector spaces, built from a
/// row-pivoted triangular factorization of the block Hankel matrix. The
/// Gram matrix of the returned bases is the identity.
pub fn biorthogonal_bases<F: Scalar>(
    spec: &EnsembleSpec<F>,
) -> Result<(Vec<PolyVector<F>>, Vec<PolyVector<F>>)> {
    let pair = spec.pair();
    spec.require_normal(pair)?;
    let h = spec.hankel()?;
    let n = h.rows();
    let (perm, l, u) = h.lu().map_err(|e| match e {
        Error::SingularMatrix => non_normal(pair),
        other => other,
    })?;
    // H = PM^T L U with PM the row permutation; take S^T = L^{-1} PM and
    // T = U^{-1} so that S^T H T = I.
    let pm = Mat::from_fn(n, n, |i, j| {
        if perm[i] == j {
            F::one()
        } else {
            F::zero()
        }
    });
    let s_t = l.solve(&pm)?;
    let s = s_t.transpose();
    let t = u.solve(&Mat::identity(n))?;
    let ps = (0..n)
        .map(|i| {
            let coeffs: Vec<F> = (0..n).map(|r| s[(r, i)].clone()).collect();
            PolyVector::from_basis_coeffs(pair.nvec(), &coeffs)
        })
        .collect();
    let qs = (0..n)
        .map(|j| {
            let coeffs: Vec<F> = (0..n).map(|r| t[(r, j)].clone()).collect();
            PolyVector::from_basis_coeffs(pair.mvec(), &coeffs)
        })
        .collect();
    Ok((ps, qs))
}

/// Pairing `int P^T(x) W(x) Q(x) dmu(x)` of two polynomial vectors.
pub fn pairing<F: Scalar>(
    spec: &EnsembleSpec<F>,
    pv: &PolyVector<F>,
    qv: &PolyVector<F>,
) -> Result<F> {
    let mut acc = F::zero();
    for (node, mass) in spec
        .measure()
        .nodes()
        .iter()
        .zip(spec.measure().masses())
    {
        let pvals = pv.eval(node);
        let qvals = qv.eval(node);
        let mut term = F::zero();
        for k in 0..pvals.len() {
            for l in 0..qvals.len() {
                term = term
                    + pvals[k].clone()
                        * spec.weights().entry(k, l).eval(node)?
                        * qvals[l].clone();
            }
        }
        acc = acc + mass.clone() * term;
    }
    Ok(acc)
}
