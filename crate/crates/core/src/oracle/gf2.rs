//! Gaussian elimination over GF(2) on edge sets.

use std::collections::BTreeMap;

use crate::graph::{EdgeId, EdgeSet};

fn words(bits: usize) -> usize {
    bits.div_ceil(64)
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn test_bit(v: &[u64], i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(v: &mut [u64], i: usize) {
    v[i / 64] |= 1 << (i % 64);
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// An echelon basis of the span of a list of edge sets, remembering which
/// inputs combine to each basis row.
#[derive(Debug, Clone)]
pub struct Gf2Span {
    index: BTreeMap<EdgeId, usize>,
    inputs: usize,
    rows: Vec<Row>,
}

#[derive(Debug, Clone)]
struct Row {
    pivot: usize,
    bits: Vec<u64>,
    combo: Vec<u64>,
}

impl Gf2Span {
    pub fn new(vectors: &[EdgeSet]) -> Gf2Span {
        let index: BTreeMap<EdgeId, usize> = vectors
            .iter()
            .flat_map(|v| v.iter())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut span = Gf2Span {
            index,
            inputs: vectors.len(),
            rows: Vec::new(),
        };
        for (i, v) in vectors.iter().enumerate() {
            let mut bits = span.encode(v).expect("edges indexed");
            let mut combo = vec![0u64; words(span.inputs)];
            set_bit(&mut combo, i);
            span.reduce(&mut bits, &mut combo);
            if let Some(pivot) = lowest_bit(&bits) {
                span.rows.push(Row { pivot, bits, combo });
            }
        }
        span
    }

    fn encode(&self, v: &EdgeSet) -> Option<Vec<u64>> {
        let mut bits = vec![0u64; words(self.index.len())];
        for e in v.iter() {
            set_bit(&mut bits, *self.index.get(&e)?);
        }
        Some(bits)
    }

    fn reduce(&self, bits: &mut [u64], combo: &mut [u64]) {
        for row in &self.rows {
            if test_bit(bits, row.pivot) {
                xor_into(bits, &row.bits);
                xor_into(combo, &row.combo);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Indices of inputs summing to `target`, if it lies in the span.
    pub fn certificate(&self, target: &EdgeSet) -> Option<Vec<usize>> {
        let mut bits = self.encode(target)?;
        let mut combo = vec![0u64; words(self.inputs)];
        self.reduce(&mut bits, &mut combo);
        if bits.iter().any(|&w| w != 0) {
            return None;
        }
        Some((0..self.inputs).filter(|&i| test_bit(&combo, i)).collect())
    }

    pub fn contains(&self, target: &EdgeSet) -> bool {
        self.certificate(target).is_some()
    }
}

pub fn gf2_rank(vectors: &[EdgeSet]) -> usize {
    Gf2Span::new(vectors).rank()
}

/// Whether `target` is a sum of some of `vectors`; the certificate is
/// re-summed before it is returned.
pub fn in_span(vectors: &[EdgeSet], target: &EdgeSet) -> Option<Vec<usize>> {
    let cert = Gf2Span::new(vectors).certificate(target)?;
    let sum = cert.iter().fold(EdgeSet::new(), |acc, &i| acc.sum(&vectors[i]));
    assert_eq!(&sum, target, "GF(2) certificate does not re-sum to its target");
    Some(cert)
}
