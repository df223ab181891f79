//! Characters-distance sampling with the first symbol as the only pivot.
//!
//! A text `x` of length `m` is reduced to the positions of its pivot
//! occurrences and to the distances between consecutive ones:
//!
//! ```text
//! x         = a g a a c g c a g t a t a
//! positions = 0,  2,3,      7,    10, 12
//! distances =   2, 1,  4,     3,    2
//! ```
//!
//! plus `k`, the length of the pivot-free tail after the last pivot.

use memchr::memchr_iter;

use crate::error::{Error, Result};
use crate::text::Text;

/// Sampled view of a text. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdsView {
    pivot: u8,
    positions: Vec<usize>,
    distances: Vec<usize>,
    k: usize,
    m: usize,
}

impl CdsView {
    pub fn pivot(&self) -> u8 {
        self.pivot
    }

    /// Pivot positions, starting with 0.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Gaps between consecutive pivots; one shorter than `positions`.
    pub fn distances(&self) -> &[usize] {
        &self.distances
    }

    /// Cumulative sums of the distances. Since the first pivot sits at 0,
    /// `prefix_sums()[i] == positions()[i + 1]`.
    pub fn prefix_sums(&self) -> &[usize] {
        &self.positions[1..]
    }

    /// Length of the longest pivot-free suffix.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Original text length.
    pub fn text_len(&self) -> usize {
        self.m
    }

    /// Number of distance entries, `m̄`.
    pub fn sample_len(&self) -> usize {
        self.distances.len()
    }

    /// Rebuilds the text from the view, writing `filler` at every non-pivot
    /// position. For a two-letter text this is the exact inverse of
    /// [`build_cds`].
    pub fn reconstruct_with(&self, filler: u8) -> Text {
        let mut out = vec![filler; self.m];
        for &p in &self.positions {
            out[p] = self.pivot;
        }
        Text::new(out)
    }

    /// Errors unless `x` is the text this view was built from (length and
    /// pivot are checked; the scan itself is not repeated).
    pub fn check_matches(&self, x: &[u8]) -> Result<()> {
        if x.len() != self.m || x.first() != Some(&self.pivot) {
            return Err(Error::invalid(format!(
                "view of a length-{} text does not match a length-{} text",
                self.m,
                x.len()
            )));
        }
        Ok(())
    }
}

/// Builds the sampled view in one left-to-right pass, pivot = `x[0]`.
pub fn build_cds(x: &[u8]) -> Result<CdsView> {
    let &pivot = x.first().ok_or(Error::EmptyInput)?;
    let m = x.len();
    let positions: Vec<usize> = memchr_iter(pivot, x).collect();
    let distances = positions.windows(2).map(|w| w[1] - w[0]).collect();
    let last = *positions.last().expect("x[0] is the pivot");
    Ok(CdsView {
        pivot,
        positions,
        distances,
        k: m - 1 - last,
        m,
    })
}

/// Size of the sampled representation relative to the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingStats {
    /// `m̄`, the number of distance entries.
    pub entries: usize,
    /// `m`.
    pub text_len: usize,
}

impl SamplingStats {
    /// `m̄ / m`.
    pub fn ratio(&self) -> f64 {
        self.entries as f64 / self.text_len as f64
    }

    /// Overhead if every entry took `bytes_per_entry` bytes.
    pub fn byte_ratio(&self, bytes_per_entry: usize) -> f64 {
        self.ratio() * bytes_per_entry as f64
    }
}

pub fn sampling_stats(v: &CdsView) -> SamplingStats {
    SamplingStats {
        entries: v.sample_len(),
        text_len: v.text_len(),
    }
}
