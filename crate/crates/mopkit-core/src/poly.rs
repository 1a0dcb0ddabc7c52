//! Univariate polynomials with ascending coefficients.

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<F> {
    /// Ascending coefficients; no trailing zero unless empty.
    coeffs: Vec<F>,
}

impl<F: Scalar> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![F::one()],
        }
    }

    pub fn constant(c: F) -> Self {
        Polynomial::new(vec![c])
    }

    /// `x^deg`.
    pub fn monomial(deg: usize) -> Self {
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = F::one();
        Polynomial { coeffs }
    }

    /// `x - root`.
    pub fn linear_from_root(root: &F) -> Self {
        Polynomial {
            coeffs: vec![-root.clone(), F::one()],
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Lagrange interpolation through distinct sample points.
    pub fn interpolate(points: &[(F, F)]) -> Self {
        let mut acc = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::one();
            let mut denom = F::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Polynomial::linear_from_root(xj));
                    denom = denom * (xi.clone() - xj.clone());
                }
            }
            acc = acc.add(&basis.scale(&(yi.clone() / denom)));
        }
        acc
    }
}
