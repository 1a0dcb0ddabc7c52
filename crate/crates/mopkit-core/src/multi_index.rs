//! Multi-index pairs and the chain of shifted pairs used by the
//! product/ratio formulas.

use crate::error::{Error, Result};

/// A pair of multi-indices with `|n| - |m|` equal to 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndexPair {
    nvec: Vec<usize>,
    mvec: Vec<usize>,
}

impl MultiIndexPair {
    pub fn new(nvec: Vec<usize>, mvec: Vec<usize>) -> Result<Self> {
        if nvec.is_empty() || mvec.is_empty() {
            return Err(Error::Shape("multi-indices must be non-empty".into()));
        }
        let n: usize = nvec.iter().sum();
        let m: usize = mvec.iter().sum();
        if n != m && n != m + 1 {
            return Err(Error::Shape(format!(
                "|n| = {} and |m| = {} must differ by 0 or 1",
                n, m
            )));
        }
        Ok(MultiIndexPair { nvec, mvec })
    }

    pub fn nvec(&self) -> &[usize] {
        &self.nvec
    }

    pub fn mvec(&self) -> &[usize] {
        &self.mvec
    }

    pub fn p(&self) -> usize {
        self.nvec.len()
    }

    pub fn q(&self) -> usize {
        self.mvec.len()
    }

    pub fn total_n(&self) -> usize {
        self.nvec.iter().sum()
    }

    pub fn total_m(&self) -> usize {
        self.mvec.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.total_n() == self.total_m()
    }

    pub fn min_m(&self) -> usize {
        *self.mvec.iter().min().expect("q >= 1")
    }

    /// `(n + e_k, m)`.
    pub fn bump_n(&self, k: usize) -> Self {
        let mut nvec = self.nvec.clone();
        nvec[k] += 1;
        MultiIndexPair {
            nvec,
            mvec: self.mvec.clone(),
        }
    }

    /// `(n, m - e_l)`, or None when `m_l = 0`.
    pub fn drop_m(&self, l: usize) -> Option<Self> {
        if self.mvec[l] == 0 {
            return None;
        }
        let mut mvec = self.mvec.clone();
        mvec[l] -= 1;
        Some(MultiIndexPair {
            nvec: self.nvec.clone(),
            mvec,
        })
    }

    pub fn swapped(&self) -> Self {
        MultiIndexPair {
            nvec: self.mvec.clone(),
            mvec: self.nvec.clone(),
        }
    }
}

/// Explicit overrides for the otherwise deterministic chain rule. The
/// `k`-th entry of `up_mvecs` fixes `m_k`, the `k`-th entry of
/// `down_nvecs` fixes `n_{-(k+1)}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainPolicy {
    pub up_mvecs: Vec<Vec<usize>>,
    pub down_nvecs: Vec<Vec<usize>>,
}

/// Step the chain of multi-index pairs by `k`.
///
/// Upward steps add `(1,...,1)` to `n` and distribute `p` unit
/// increments over the components of `m` round-robin, continuing at
/// index `(k-1)*p mod q`. Downward steps subtract `(1,...,1)` from `m`
/// and remove `q` units from `n` round-robin, skipping components that
/// are already zero. Downward steps are only meaningful while
/// `|k| <= min_l m_l`.
pub fn chain_indices(
    pair: &MultiIndexPair,
    k: i64,
    policy: &ChainPolicy,
) -> Result<MultiIndexPair> {
    let mut current = pair.clone();
    if k >= 0 {
        for step in 1..=k {
            current = chain_up(&current, step as usize, policy)?;
        }
    } else {
        for step in 1..=(-k) {
            current = chain_down(&current, step as usize, policy)?;
        }
    }
    Ok(current)
}

fn chain_up(prev: &MultiIndexPair, step: usize, policy: &ChainPolicy) -> Result<MultiIndexPair> {
    let p = prev.p();
    let q = prev.q();
    let nvec: Vec<usize> = prev.nvec.iter().map(|v| v + 1).collect();
    let mvec = if let Some(over) = policy.up_mvecs.get(step - 1) {
        validate_up_override(prev, over, p)?;
        over.clone()
    } else {
        let mut mvec = prev.mvec.clone();
        for j in 0..p {
            mvec[((step - 1) * p + j) % q] += 1;
        }
        mvec
    };
    Ok(MultiIndexPair { nvec, mvec })
}

fn chain_down(prev: &MultiIndexPair, step: usize, policy: &ChainPolicy) -> Result<MultiIndexPair> {
    let p = prev.p();
    let q = prev.q();
    if prev.mvec.contains(&0) {
        return Err(Error::NegativeComponent);
    }
    let mvec: Vec<usize> = prev.mvec.iter().map(|v| v - 1).collect();
    let nvec = if let Some(over) = policy.down_nvecs.get(step - 1) {
        validate_down_override(prev, over, q)?;
        over.clone()
    } else {
        let mut nvec = prev.nvec.clone();
        for j in 0..q {
            let start = ((step - 1) * q + j) % p;
            let idx = (0..p)
                .map(|off| (start + off) % p)
                .find(|&i| nvec[i] > 0)
                .ok_or(Error::NegativeComponent)?;
            nvec[idx] -= 1;
        }
        nvec
    };
    Ok(MultiIndexPair { nvec, mvec })
}

fn validate_up_override(prev: &MultiIndexPair, over: &[usize], p: usize) -> Result<()> {
    if over.len() != prev.q() {
        return Err(Error::Shape("chain override has wrong length".into()));
    }
    if over.iter().zip(&prev.mvec).any(|(a, b)| a < b) {
        return Err(Error::Shape(
            "chain override must grow componentwise".into(),
        ));
    }
    let grown: usize = over.iter().sum::<usize>() - prev.total_m();
    if grown != p {
        return Err(Error::Shape(format!(
            "chain override must add exactly p = {} units",
            p
        )));
    }
    Ok(())
}

fn validate_down_override(prev: &MultiIndexPair, over: &[usize], q: usize) -> Result<()> {
    if over.len() != prev.p() {
        return Err(Error::Shape("chain override has wrong length".into()));
    }
    if over.iter().zip(&prev.nvec).any(|(a, b)| a > b) {
        return Err(Error::Shape(
            "chain override must shrink componentwise".into(),
        ));
    }
    let dropped: usize = prev.total_n() - over.iter().sum::<usize>();
    if dropped != q {
        return Err(Error::Shape(format!(
            "chain override must remove exactly q = {} units",
            q
        )));
    }
    Ok(())
}
