//! Discrete measures and Gaussian quadrature presets.
//!
//! A finite signed measure with exact nodes and masses is the single
//! integration backend of the crate: every integral is a finite sum, so
//! every identity holds in exact arithmetic. Continuous weights enter
//! only through quadrature rules on the float field.

use crate::error::{Error, Result};
use crate::scalar::{Cf64, Scalar};

/// Finite signed measure `sum_i masses[i] * delta(nodes[i])`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteMeasure<F> {
    nodes: Vec<F>,
    masses: Vec<F>,
}

impl<F: Scalar> DiscreteMeasure<F> {
    pub fn new(nodes: Vec<F>, masses: Vec<F>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Shape("measure needs at least one node".into()));
        }
        if nodes.len() != masses.len() {
            return Err(Error::Shape(format!(
                "{} nodes vs {} masses",
                nodes.len(),
                masses.len()
            )));
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if nodes[i] == nodes[j] {
                    return Err(Error::DuplicatePoint {
                        point: nodes[i].render(),
                    });
                }
            }
        }
        Ok(DiscreteMeasure { nodes, masses })
    }

    pub fn nodes(&self) -> &[F] {
        &self.nodes
    }

    pub fn masses(&self) -> &[F] {
        &self.masses
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains_node(&self, x: &F) -> bool {
        self.nodes.iter().any(|n| n == x)
    }

    /// Uniform unit-mass measure on the given nodes.
    pub fn uniform(nodes: Vec<F>) -> Result<Self> {
        let count = nodes.len() as i64;
        if count == 0 {
            return Err(Error::Shape("measure needs at least one node".into()));
        }
        let mass = F::from_fraction(1, count);
        let masses = vec![mass; nodes.len()];
        DiscreteMeasure::new(nodes, masses)
    }

    pub fn to_complex(&self) -> DiscreteMeasure<Cf64> {
        DiscreteMeasure {
            nodes: self.nodes.iter().map(Scalar::to_complex).collect(),
            masses: self.masses.iter().map(Scalar::to_complex).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureFamily {
    /// Weight `e^{-x^2}` on the real line.
    GaussHermite,
    /// Weight `1` on `[-1, 1]`.
    GaussLegendre,
}

impl QuadratureFamily {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "gauss-hermite" => Ok(QuadratureFamily::GaussHermite),
            "gauss-legendre" => Ok(QuadratureFamily::GaussLegendre),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

/// N-point Gaussian quadrature rule as a measure over the float field.
/// Exact for polynomial integrands of degree `<= 2N - 1` against the
/// family weight.
pub fn quadrature_preset(family: QuadratureFamily, n: usize) -> Result<DiscreteMeasure<Cf64>> {
    if n == 0 {
        return Err(Error::Shape("quadrature rule needs at least one point".into()));
    }
    let (nodes, weights) = match family {
        QuadratureFamily::GaussHermite => gauss_hermite(n),
        QuadratureFamily::GaussLegendre => gauss_legendre(n),
    };
    DiscreteMeasure::new(
        nodes.into_iter().map(|x| Cf64::new(x, 0.0)).collect(),
        weights.into_iter().map(|w| Cf64::new(w, 0.0)).collect(),
    )
}

/// Nodes and weights for the physicists' Hermite weight `e^{-x^2}`.
/// Newton iteration on the orthonormal recurrence.
fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    const EPS: f64 = 1e-14;
    const PIM4: f64 = 0.751_125_544_464_942_5; // pi^{-1/4}
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..200 {
            let mut p1 = PIM4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() <= EPS {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    // Descending guesses produce descending positive nodes; report ascending.
    x.reverse();
    w.reverse();
    (x, w)
}

/// Nodes and weights for the Legendre weight `1` on `[-1, 1]`.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    const EPS: f64 = 1e-14;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..200 {
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
            }
            pp = nf * (z * p1 - p2) / (z * z - 1.0);
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() <= EPS {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}
