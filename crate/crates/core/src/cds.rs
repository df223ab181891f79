//! Period, borders and shortest cover computed from a [`CdsView`].
//!
//! Every nonempty border of `x` starts with the pivot `x[0]`, so it begins at
//! some pivot position and its own pivot layout must repeat a prefix of the
//! distance sequence. Border candidates of `x` are therefore exactly the
//! borders `i` of the distance sequence whose next gap `distances[i]` is
//! longer than the pivot-free tail `k`. Walking the border chain of the
//! distance sequence from longest to shortest visits the candidates in
//! decreasing order of length; each is confirmed by a direct comparison
//! unless the text has at most two distinct symbols, where the pivot layout
//! determines the text.

use crate::classical::{border_array, covers_sorted, reduce_border, BorderChain};
use crate::error::{Error, Result};
use crate::sampling::CdsView;

/// Longest border of `x` and the border of the distance sequence it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CdsBorderResult {
    /// Border length in `x`, 0 when `x` is borderless.
    pub border: usize,
    /// Index into the distance border chain that produced `border`.
    pub sample_border: Option<usize>,
}

impl CdsBorderResult {
    const NONE: CdsBorderResult = CdsBorderResult {
        border: 0,
        sample_border: None,
    };
}

/// Whether candidates are compared character by character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verification {
    /// Verify unless the text has at most two distinct symbols.
    #[default]
    Auto,
    Always,
    /// Trust the pivot layout. Only sound for texts over two symbols.
    Skip,
}

/// What happened at one index of the distance border chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkOutcome {
    /// `distances[i] <= k`: the candidate would contain a pivot inside the tail.
    ShortGap,
    Rejected,
    Accepted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStep {
    pub index: usize,
    pub outcome: WalkOutcome,
}

/// Lazily decided verification policy, shared across the walks of one query.
struct Verifier {
    mode: Verification,
    binary: Option<bool>,
}

impl Verifier {
    fn new(mode: Verification) -> Self {
        Verifier { mode, binary: None }
    }

    fn accepts(&mut self, x: &[u8], n: usize, b: usize) -> bool {
        let check = match self.mode {
            Verification::Always => true,
            Verification::Skip => false,
            Verification::Auto => !*self.binary.get_or_insert_with(|| at_most_two_symbols(x)),
        };
        !check || x[..b] == x[n - b..n]
    }
}

fn at_most_two_symbols(x: &[u8]) -> bool {
    let first = x[0];
    let mut second = None;
    for &c in x {
        if c == first {
            continue;
        }
        match second {
            None => second = Some(c),
            Some(s) if s == c => {}
            Some(_) => return false,
        }
    }
    true
}

/// Border array of the distance sequence; `[-1]` when it is empty.
fn sample_border_values(v: &CdsView) -> Vec<i32> {
    match border_array(v.distances()) {
        Ok(ba) => ba.values().to_vec(),
        Err(_) => vec![-1],
    }
}

/// Longest border of the prefix `x[..n]`, using the full view and the full
/// distance border array (whose leading entries serve every prefix).
fn longest_border_of_prefix(
    x: &[u8],
    v: &CdsView,
    bor: &[i32],
    n: usize,
    verifier: &mut Verifier,
    mut trace: Option<&mut Vec<WalkStep>>,
) -> CdsBorderResult {
    let positions = v.positions();
    let distances = v.distances();
    let pivots = positions.partition_point(|&p| p < n);
    let sample_len = pivots - 1;
    let k = n - 1 - positions[sample_len];

    let mut i = bor[sample_len];
    while i >= 0 {
        let iu = i as usize;
        if distances[iu] <= k {
            if let Some(t) = trace.as_deref_mut() {
                t.push(WalkStep {
                    index: iu,
                    outcome: WalkOutcome::ShortGap,
                });
            }
            i = bor[iu];
            continue;
        }
        let b = n - positions[sample_len - iu];
        debug_assert!(
            b >= 1 && b < n,
            "candidate {b} is not a proper border of {n}"
        );
        let ok = verifier.accepts(x, n, b);
        if let Some(t) = trace.as_deref_mut() {
            t.push(WalkStep {
                index: iu,
                outcome: if ok {
                    WalkOutcome::Accepted
                } else {
                    WalkOutcome::Rejected
                },
            });
        }
        if ok {
            return CdsBorderResult {
                border: b,
                sample_border: Some(iu),
            };
        }
        i = bor[iu];
    }
    CdsBorderResult::NONE
}

/// Longest border of `x` from its sampled view.
pub fn border_cds(v: &CdsView, x: &[u8]) -> Result<CdsBorderResult> {
    border_cds_with(v, x, Verification::Auto)
}

pub fn border_cds_with(v: &CdsView, x: &[u8], mode: Verification) -> Result<CdsBorderResult> {
    v.check_matches(x)?;
    let bor = sample_border_values(v);
    let mut verifier = Verifier::new(mode);
    Ok(longest_border_of_prefix(
        x,
        v,
        &bor,
        x.len(),
        &mut verifier,
        None,
    ))
}

/// Like [`border_cds_with`], also returning every index the walk visited.
pub fn border_cds_traced(
    v: &CdsView,
    x: &[u8],
    mode: Verification,
) -> Result<(CdsBorderResult, Vec<WalkStep>)> {
    v.check_matches(x)?;
    let bor = sample_border_values(v);
    let mut verifier = Verifier::new(mode);
    let mut steps = Vec::new();
    let r = longest_border_of_prefix(x, v, &bor, x.len(), &mut verifier, Some(&mut steps));
    Ok((r, steps))
}

/// Smallest period of `x`, `m - border`.
pub fn period_cds(v: &CdsView, x: &[u8]) -> Result<usize> {
    Ok(x.len() - border_cds(v, x)?.border)
}

fn chain_with(x: &[u8], v: &CdsView, bor: &[i32], verifier: &mut Verifier) -> BorderChain {
    let mut lengths = Vec::new();
    let mut n = x.len();
    loop {
        let r = longest_border_of_prefix(x, v, bor, n, verifier, None);
        if r.border == 0 {
            break;
        }
        let b = reduce_border(n, r.border);
        lengths.push(b);
        n = b;
    }
    BorderChain { lengths }
}

/// Non-empty non-periodic borders in decreasing length, each found by
/// rerunning the border walk on the previous border as a prefix of `x`.
pub fn borders_cds(v: &CdsView, x: &[u8]) -> Result<BorderChain> {
    v.check_matches(x)?;
    let bor = sample_border_values(v);
    Ok(chain_with(
        x,
        v,
        &bor,
        &mut Verifier::new(Verification::Auto),
    ))
}

fn prefix_occurrences(v: &CdsView, x: &[u8], b: usize) -> Vec<usize> {
    let m = x.len();
    if b == m {
        return vec![0];
    }
    let pattern = &x[..b];
    let last_start = m - b;
    let positions = v.positions();
    let end = positions.partition_point(|&p| p <= last_start);
    positions[..end]
        .iter()
        .copied()
        .filter(|&p| &x[p..p + b] == pattern)
        .collect()
}

/// Positions of `x[..b]` in `x`. The prefix starts with the pivot, so only
/// pivot positions are tried.
pub fn occurrences_via_cds(v: &CdsView, x: &[u8], b: usize) -> Result<Vec<usize>> {
    v.check_matches(x)?;
    if b == 0 || b > x.len() {
        return Err(Error::invalid(format!(
            "prefix length {b} outside 1..={}",
            x.len()
        )));
    }
    Ok(prefix_occurrences(v, x, b))
}

/// Shortest cover length: the first chain border, shortest first, that
/// covers `x`, or `m`.
pub fn shortest_cover_cds(v: &CdsView, x: &[u8]) -> Result<usize> {
    v.check_matches(x)?;
    let m = x.len();
    let bor = sample_border_values(v);
    let chain = chain_with(x, v, &bor, &mut Verifier::new(Verification::Auto));
    for &b in chain.lengths.iter().rev() {
        if covers_sorted(&prefix_occurrences(v, x, b), b, m) {
            return Ok(b);
        }
    }
    Ok(m)
}
