//! Ensemble data model: weights + measure + multi-index pair, the block
//! Hankel moment matrix, normality and duality.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::measure::DiscreteMeasure;
use crate::multi_index::{ChainPolicy, MultiIndexPair};
use crate::scalar::{Cf64, Scalar};
use crate::weights::{modified_weight, moment, Weights};

/// One multiple orthogonal polynomial ensemble: a `p x q` weight matrix,
/// a discrete measure and a balanced multi-index pair.
#[derive(Clone, Debug)]
pub struct EnsembleSpec<F: Scalar> {
    weights: Weights<F>,
    measure: DiscreteMeasure<F>,
    pair: MultiIndexPair,
    chain: ChainPolicy,
}

impl<F: Scalar> EnsembleSpec<F> {
    pub fn new(
        weights: Weights<F>,
        measure: DiscreteMeasure<F>,
        pair: MultiIndexPair,
    ) -> Result<Self> {
        if !pair.is_balanced() {
            return Err(Error::Shape(
                "ensemble pair must satisfy |n| = |m|".into(),
            ));
        }
        if pair.total_n() == 0 {
            return Err(Error::Shape("ensemble needs |n| >= 1".into()));
        }
        Self::with_any_pair(weights, measure, pair)
    }

    /// Internal constructor that also admits the empty pair reached by
    /// downward chains.
    fn with_any_pair(
        weights: Weights<F>,
        measure: DiscreteMeasure<F>,
        pair: MultiIndexPair,
    ) -> Result<Self> {
        if weights.p() != pair.p() || weights.q() != pair.q() {
            return Err(Error::Shape(format!(
                "weight grid is {}x{}, pair is {}x{}",
                weights.p(),
                weights.q(),
                pair.p(),
                pair.q()
            )));
        }
        // Every entry must be pole-free on the support.
        for k in 0..weights.p() {
            for l in 0..weights.q() {
                for z in weights.entry(k, l).den_roots() {
                    if measure.contains_node(z) {
                        return Err(Error::PoleOnSupport { point: z.render() });
                    }
                }
            }
        }
        Ok(EnsembleSpec {
            weights,
            measure,
            pair,
            chain: ChainPolicy::default(),
        })
    }

    pub fn with_chain_policy(mut self, chain: ChainPolicy) -> Self {
        self.chain = chain;
        self
    }

    pub fn weights(&self) -> &Weights<F> {
        &self.weights
    }

    pub fn measure(&self) -> &DiscreteMeasure<F> {
        &self.measure
    }

    pub fn pair(&self) -> &MultiIndexPair {
        &self.pair
    }

    pub fn chain_policy(&self) -> &ChainPolicy {
        &self.chain
    }

    pub fn p(&self) -> usize {
        self.pair.p()
    }

    pub fn q(&self) -> usize {
        self.pair.q()
    }

    /// Number of points in the ensemble.
    pub fn n(&self) -> usize {
        self.pair.total_n()
    }

    /// Same weights and measure at a different (possibly empty) pair.
    pub fn at_pair(&self, pair: MultiIndexPair) -> Result<Self> {
        let mut spec = Self::with_any_pair(self.weights.clone(), self.measure.clone(), pair)?;
        spec.chain = self.chain.clone();
        Ok(spec)
    }

    /// Chain pair at signed depth `k` under this spec's chain policy.
    pub fn chain_pair(&self, k: i64) -> Result<MultiIndexPair> {
        crate::multi_index::chain_indices(&self.pair, k, &self.chain)
    }

    /// `j`-th moment of entry `(k, l)`.
    pub fn entry_moment(&self, k: usize, l: usize, j: usize) -> Result<F> {
        moment(&self.measure, &self.weights.entry(k, l), j)
    }

    /// Moment matrix of an arbitrary pair over the same weights: rows
    /// follow the `n`-structure, columns the `m`-structure, block
    /// `(k, l)` is the `n_k x m_l` Hankel slice of moments of
    /// `W_{k,l}`.
    pub fn moment_matrix(&self, pair: &MultiIndexPair) -> Result<Mat<F>> {
        if pair.p() != self.p() || pair.q() != self.q() {
            return Err(Error::Shape("pair shape mismatch".into()));
        }
        let rows = pair.total_n();
        let cols = pair.total_m();
        let mut out = Mat::zeros(rows, cols);
        let mut roff = 0;
        for (k, &nk) in pair.nvec().iter().enumerate() {
            let mut coff = 0;
            for (l, &ml) in pair.mvec().iter().enumerate() {
                if nk > 0 && ml > 0 {
                    // One moment list per block, reused along anti-diagonals.
                    let w = self.weights.entry(k, l);
                    let mut moments = Vec::with_capacity(nk + ml - 1);
                    for j in 0..nk + ml - 1 {
                        moments.push(moment(&self.measure, &w, j)?);
                    }
                    for i in 0..nk {
                        for j in 0..ml {
                            out[(roff + i, coff + j)] = moments[i + j].clone();
                        }
                    }
                }
                coff += ml;
            }
            roff += nk;
        }
        Ok(out)
    }

    /// Block Hankel matrix of a balanced pair.
    pub fn block_hankel(&self, pair: &MultiIndexPair) -> Result<Mat<F>> {
        if !pair.is_balanced() {
            return Err(Error::Shape(
                "block Hankel matrix needs |n| = |m|".into(),
            ));
        }
        self.moment_matrix(pair)
    }

    /// Block Hankel matrix of this spec's own pair.
    pub fn hankel(&self) -> Result<Mat<F>> {
        self.block_hankel(&self.pair)
    }

    /// A balanced pair is normal iff its block Hankel determinant is
    /// nonzero. Over the float field, "nonzero" is exact.
    pub fn is_normal(&self, pair: &MultiIndexPair) -> Result<bool> {
        Ok(!self.block_hankel(pair)?.det().is_zero())
    }

    pub fn require_normal(&self, pair: &MultiIndexPair) -> Result<()> {
        if self.is_normal(pair)? {
            Ok(())
        } else {
            Err(Error::NonNormal {
                nvec: pair.nvec().to_vec(),
                mvec: pair.mvec().to_vec(),
            })
        }
    }

    /// Dual ensemble: swapped multi-indices and transposed weights.
    pub fn dual(&self) -> Self {
        EnsembleSpec {
            weights: self.weights.transpose(),
            measure: self.measure.clone(),
            pair: self.pair.swapped(),
            chain: ChainPolicy::default(),
        }
    }

    /// Same ensemble with the weight matrix multiplied by
    /// `prod (x - y_k) / prod (x - z_l)`.
    pub fn modified(&self, ys: &[F], zs: &[F]) -> Result<Self> {
        let weights = modified_weight(&self.weights, &self.measure, ys, zs)?;
        let mut spec = Self::with_any_pair(weights, self.measure.clone(), self.pair.clone())?;
        spec.chain = self.chain.clone();
        Ok(spec)
    }

    pub fn to_complex(&self) -> EnsembleSpec<Cf64> {
        EnsembleSpec {
            weights: self.weights.to_complex(),
            measure: self.measure.to_complex(),
            pair: self.pair.clone(),
            chain: self.chain.clone(),
        }
    }
}
