//! Deterministic floating-point reductions.
//!
//! All accumulation here uses a fixed pairwise tree, within and across
//! chunks, so a sum depends only on the term sequence — never on thread
//! count or scheduling. Parallel callers split work over independent
//! outputs and keep each output's reduction sequential.

/// Pairwise (tree) sum of a buffer. The buffer is consumed as scratch.
pub fn pairwise_sum_in_place(buf: &mut Vec<f64>) -> f64 {
    let mut len = buf.len();
    if len == 0 {
        return 0.0;
    }
    while len > 1 {
        let half = len / 2;
        for i in 0..half {
            buf[i] = buf[2 * i] + buf[2 * i + 1];
        }
        if len % 2 == 1 {
            buf[half] = buf[len - 1];
            len = half + 1;
        } else {
            len = half;
        }
    }
    buf[0]
}

/// Pairwise sum of a slice (allocating a scratch copy).
pub fn pairwise_sum(terms: &[f64]) -> f64 {
    let mut buf = terms.to_vec();
    pairwise_sum_in_place(&mut buf)
}

/// Accumulator that reduces blockwise: terms are pairwise-summed inside
/// fixed-size chunks and the chunk totals are pairwise-summed at the end.
pub struct BlockedSum {
    chunk: Vec<f64>,
    blocks: Vec<f64>,
    chunk_size: usize,
}

impl BlockedSum {
    pub const DEFAULT_CHUNK: usize = 128;

    pub fn new() -> Self {
        Self::with_chunk_size(Self::DEFAULT_CHUNK)
    }

    pub fn with_chunk_size(chunk_size: usize) -> Self {
        assert!(chunk_size > 0);
        BlockedSum {
            chunk: Vec::with_capacity(chunk_size),
            blocks: Vec::new(),
            chunk_size,
        }
    }

    #[inline]
    pub fn push(&mut self, term: f64) {
        self.chunk.push(term);
        if self.chunk.len() == self.chunk_size {
            let s = pairwise_sum_in_place(&mut self.chunk);
            self.blocks.push(s);
            self.chunk.clear();
        }
    }

    pub fn finish(mut self) -> f64 {
        if !self.chunk.is_empty() {
            let s = pairwise_sum_in_place(&mut self.chunk);
            self.blocks.push(s);
        }
        pairwise_sum_in_place(&mut self.blocks)
    }
}

impl Default for BlockedSum {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_sum_on_integers() {
        let terms: Vec<f64> = (1..=1000).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&terms), 500500.0);
        let mut acc = BlockedSum::new();
        for &t in &terms {
            acc.push(t);
        }
        assert_eq!(acc.finish(), 500500.0);
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(pairwise_sum(&[]), 0.0);
        assert_eq!(pairwise_sum(&[3.5]), 3.5);
        assert_eq!(BlockedSum::new().finish(), 0.0);
    }

    #[test]
    fn reversal_stays_within_tolerance() {
        // ill-conditioned alternating series
        let terms: Vec<f64> = (1..=4096)
            .map(|i| {
                let s = if i % 2 == 0 { 1.0 } else { -1.0 };
                s * (i as f64).sqrt() * 1e3
            })
            .collect();
        let fwd = pairwise_sum(&terms);
        let rev: Vec<f64> = terms.iter().rev().copied().collect();
        let bwd = pairwise_sum(&rev);
        let scale = terms.iter().map(|t| t.abs()).sum::<f64>();
        assert!((fwd - bwd).abs() <= 1e-13 * scale, "{fwd} vs {bwd}");
    }

    #[test]
    fn chunk_size_changes_tree_but_not_value_much() {
        let terms: Vec<f64> = (0..1537).map(|i| ((i * 37) % 101) as f64 * 0.013).collect();
        let a = BlockedSum::with_chunk_size(64);
        let b = BlockedSum::with_chunk_size(128);
        let (mut a, mut b) = (a, b);
        for &t in &terms {
            a.push(t);
            b.push(t);
        }
        let (sa, sb) = (a.finish(), b.finish());
        assert!((sa - sb).abs() <= 1e-12 * sa.abs().max(1.0));
    }
}
