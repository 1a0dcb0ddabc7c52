//! Weight functions, weight systems and moments.

use crate::error::{Error, Result};
use crate::measure::DiscreteMeasure;
use crate::poly::Polynomial;
use crate::scalar::{Cf64, Scalar};

/// A single weight function: polynomial part, optional exponential
/// factor `e^{rate * x}` (float field only), and a rational factor
/// `prod (x - y_k) / prod (x - z_l)` coming from weight modifications.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightExpr<F> {
    poly: Polynomial<F>,
    exp_rate: Option<F>,
    num_roots: Vec<F>,
    den_roots: Vec<F>,
}

impl<F: Scalar> WeightExpr<F> {
    pub fn from_poly(poly: Polynomial<F>) -> Self {
        WeightExpr {
            poly,
            exp_rate: None,
            num_roots: vec![],
            den_roots: vec![],
        }
    }

    pub fn one() -> Self {
        WeightExpr::from_poly(Polynomial::one())
    }

    pub fn with_exp_rate(mut self, rate: F) -> Self {
        self.exp_rate = Some(rate);
        self
    }

    pub fn den_roots(&self) -> &[F] {
        &self.den_roots
    }

    /// True for the constant weight 1.
    pub fn is_unit(&self) -> bool {
        self.exp_rate.is_none()
            && self.num_roots.is_empty()
            && self.den_roots.is_empty()
            && self.poly == Polynomial::one()
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let mut v = self.poly.eval(x);
        if let Some(rate) = &self.exp_rate {
            let e = (rate.clone() * x.clone())
                .try_exp()
                .ok_or(Error::UnsupportedWeight)?;
            v = v * e;
        }
        for y in &self.num_roots {
            v = v * (x.clone() - y.clone());
        }
        for z in &self.den_roots {
            let d = x.clone() - z.clone();
            if d.is_zero() {
                return Err(Error::PoleOnSupport { point: x.render() });
            }
            v = v / d;
        }
        Ok(v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let exp_rate = match (&self.exp_rate, &other.exp_rate) {
            (None, None) => None,
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (Some(a), Some(b)) => Some(a.clone() + b.clone()),
        };
        let mut out = WeightExpr {
            poly: self.poly.mul(&other.poly),
            exp_rate,
            num_roots: [self.num_roots.clone(), other.num_roots.clone()].concat(),
            den_roots: [self.den_roots.clone(), other.den_roots.clone()].concat(),
        };
        out.cancel_common_roots();
        out
    }

    /// Multiply by `prod (x - y_k) / prod (x - z_l)`.
    pub fn modified(&self, ys: &[F], zs: &[F]) -> Self {
        let mut out = self.clone();
        out.num_roots.extend(ys.iter().cloned());
        out.den_roots.extend(zs.iter().cloned());
        out.cancel_common_roots();
        out
    }

    /// Remove matching numerator/denominator roots pairwise, so that
    /// e.g. modifying with `ys = zs = [a]` is the identity.
    fn cancel_common_roots(&mut self) {
        let mut i = 0;
        while i < self.num_roots.len() {
            if let Some(j) = self.den_roots.iter().position(|z| *z == self.num_roots[i]) {
                self.num_roots.remove(i);
                self.den_roots.remove(j);
            } else {
                i += 1;
            }
        }
    }

    pub fn to_complex(&self) -> WeightExpr<Cf64> {
        WeightExpr {
            poly: Polynomial::new(self.poly.coeffs().iter().map(Scalar::to_complex).collect()),
            exp_rate: self.exp_rate.as_ref().map(Scalar::to_complex),
            num_roots: self.num_roots.iter().map(Scalar::to_complex).collect(),
            den_roots: self.den_roots.iter().map(Scalar::to_complex).collect(),
        }
    }
}

/// A `p x q` weight matrix, either in rank-one form `w1(x) w2(x)^T` or
/// as a general grid of entries.
#[derive(Clone, Debug, PartialEq)]
pub enum Weights<F> {
    RankOne {
        w1: Vec<WeightExpr<F>>,
        w2: Vec<WeightExpr<F>>,
    },
    General {
        p: usize,
        q: usize,
        /// Row-major `p x q` entries.
        entries: Vec<WeightExpr<F>>,
    },
}

impl<F: Scalar> Weights<F> {
    pub fn rank_one(w1: Vec<WeightExpr<F>>, w2: Vec<WeightExpr<F>>) -> Result<Self> {
        if w1.is_empty() || w2.is_empty() {
            return Err(Error::Shape("weight system needs p >= 1 and q >= 1".into()));
        }
        Ok(Weights::RankOne { w1, w2 })
    }

    /// Rank-one system with all weights equal to 1.
    pub fn units(p: usize, q: usize) -> Self {
        Weights::RankOne {
            w1: vec![WeightExpr::one(); p],
            w2: vec![WeightExpr::one(); q],
        }
    }

    pub fn general(p: usize, q: usize, entries: Vec<WeightExpr<F>>) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Shape("weight grid needs p >= 1 and q >= 1".into()));
        }
        if entries.len() != p * q {
            return Err(Error::Shape(format!(
                "weight grid has {} entries, expected {}",
                entries.len(),
                p * q
            )));
        }
        Ok(Weights::General { p, q, entries })
    }

    pub fn p(&self) -> usize {
        match self {
            Weights::RankOne { w1, .. } => w1.len(),
            Weights::General { p, .. } => *p,
        }
    }

    pub fn q(&self) -> usize {
        match self {
            Weights::RankOne { w2, .. } => w2.len(),
            Weights::General { q, .. } => *q,
        }
    }

    pub fn is_rank_one(&self) -> bool {
        matches!(self, Weights::RankOne { .. })
    }

    /// Entry `W_{k,l}` as a standalone weight function.
    pub fn entry(&self, k: usize, l: usize) -> WeightExpr<F> {
        match self {
            Weights::RankOne { w1, w2 } => w1[k].mul(&w2[l]),
            Weights::General { q, entries, .. } => entries[k * q + l].clone(),
        }
    }

    pub fn rank_one_parts(&self) -> Result<(&[WeightExpr<F>], &[WeightExpr<F>])> {
        match self {
            Weights::RankOne { w1, w2 } => Ok((w1, w2)),
            Weights::General { .. } => Err(Error::RequiresRankOne),
        }
    }

    pub fn transpose(&self) -> Self {
        match self {
            Weights::RankOne { w1, w2 } => Weights::RankOne {
                w1: w2.clone(),
                w2: w1.clone(),
            },
            Weights::General { p, q, entries } => {
                let mut t = Vec::with_capacity(entries.len());
                for l in 0..*q {
                    for k in 0..*p {
                        t.push(entries[k * q + l].clone());
                    }
                }
                Weights::General {
                    p: *q,
                    q: *p,
                    entries: t,
                }
            }
        }
    }

    fn map_entries(&self, f: impl Fn(&WeightExpr<F>) -> WeightExpr<F>) -> Self {
        match self {
            Weights::RankOne { w1, w2 } => Weights::RankOne {
                w1: w1.iter().map(&f).collect(),
                w2: w2.clone(),
            },
            Weights::General { p, q, entries } => Weights::General {
                p: *p,
                q: *q,
                entries: entries.iter().map(&f).collect(),
            },
        }
    }

    pub fn to_complex(&self) -> Weights<Cf64> {
        match self {
            Weights::RankOne { w1, w2 } => Weights::RankOne {
                w1: w1.iter().map(WeightExpr::to_complex).collect(),
                w2: w2.iter().map(WeightExpr::to_complex).collect(),
            },
            Weights::General { p, q, entries } => Weights::General {
                p: *p,
                q: *q,
                entries: entries.iter().map(WeightExpr::to_complex).collect(),
            },
        }
    }
}

/// `j`-th moment of a weight entry against the measure:
/// `sum_i masses[i] * nodes[i]^j * w(nodes[i])`.
pub fn moment<F: Scalar>(
    measure: &DiscreteMeasure<F>,
    w: &WeightExpr<F>,
    j: usize,
) -> Result<F> {
    let mut acc = F::zero();
    for (node, mass) in measure.nodes().iter().zip(measure.masses()) {
        acc = acc + mass.clone() * node.powi(j) * w.eval(node)?;
    }
    Ok(acc)
}

/// Multiply every entry of the weight matrix by
/// `prod (x - y_k) / prod (x - z_l)`, validating the points against the
/// measure support.
pub fn modified_weight<F: Scalar>(
    weights: &Weights<F>,
    measure: &DiscreteMeasure<F>,
    ys: &[F],
    zs: &[F],
) -> Result<Weights<F>> {
    let mut seen: Vec<&F> = Vec::new();
    for pt in ys.iter().chain(zs) {
        if seen.contains(&pt) {
            return Err(Error::DuplicatePoint { point: pt.render() });
        }
        seen.push(pt);
        if measure.contains_node(pt) {
            return Err(Error::PoleOnSupport { point: pt.render() });
        }
    }
    Ok(weights.map_entries(|w| w.modified(ys, zs)))
}
