//! Classical (non-sampled) regularities built on the border array, together
//! with the quadratic brute-force routines used as ground truth.

use crate::error::{Error, Result};

/// Longest-proper-border lengths of every prefix of a sequence.
///
/// For a sequence `s` of length `n`, `values[i]` is the length of the
/// longest proper border of `s[..i]` for `1 <= i <= n`, and `values[0] = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderArray {
    values: Vec<i32>,
}

impl BorderArray {
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// Length of the subject sequence.
    pub fn subject_len(&self) -> usize {
        self.values.len() - 1
    }

    /// Longest proper border of the prefix of length `i`; `None` for `i = 0`.
    pub fn border(&self, i: usize) -> Option<usize> {
        usize::try_from(self.values[i]).ok()
    }

    /// Longest proper border of the whole subject.
    pub fn full_border(&self) -> usize {
        self.values[self.subject_len()] as usize
    }
}

/// Computes the border array in `O(|s|)` symbol comparisons. Works over any
/// symbol type, so it applies both to texts and to distance sequences.
/// Entries are 32-bit, which caps `|s|` below `i32::MAX`.
pub fn border_array<T: PartialEq>(s: &[T]) -> Result<BorderArray> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = s.len();
    if n >= i32::MAX as usize {
        return Err(Error::invalid(format!(
            "sequence of length {n} is too long"
        )));
    }
    let mut values = vec![0i32; n + 1];
    values[0] = -1;
    let mut i: i32 = 0;
    for j in 1..n {
        values[j] = i;
        while i >= 0 && s[i as usize] != s[j] {
            i = values[i as usize];
        }
        i += 1;
    }
    values[n] = i;
    Ok(BorderArray { values })
}

/// Smallest period, `m - border[m]`.
pub fn period_classical(x: &[u8]) -> Result<usize> {
    let ba = border_array(x)?;
    Ok(x.len() - ba.full_border())
}

/// Smallest `p` with `x[i] = x[i + p]` for every valid `i`, by direct check.
pub fn naive_period(x: &[u8]) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let m = x.len();
    Ok((1..=m).find(|&p| x[..m - p] == x[p..]).unwrap_or(m))
}

/// All starting positions of `pattern` in `x`, ascending. Naive scan.
pub fn occurrences(pattern: &[u8], x: &[u8]) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::invalid("pattern must be nonempty"));
    }
    if pattern.len() > x.len() {
        return Ok(Vec::new());
    }
    Ok(x.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect())
}

/// Whether occurrences `occ` of a length-`b` string cover a text of length
/// `m`: the first is at 0, the last at `m - b`, and no gap exceeds `b`.
pub fn is_covering(occ: &[usize], b: usize, m: usize) -> Result<bool> {
    if b == 0 || b > m {
        return Err(Error::invalid(format!("cover length {b} outside 1..={m}")));
    }
    if occ.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("occurrence list is not strictly ascending"));
    }
    Ok(covers_sorted(occ, b, m))
}

pub(crate) fn covers_sorted(occ: &[usize], b: usize, m: usize) -> bool {
    match (occ.first(), occ.last()) {
        (Some(&0), Some(&last)) => last == m - b && occ.windows(2).all(|w| w[1] - w[0] <= b),
        _ => false,
    }
}

/// Periodicity reduction: a border `l > n/2` of a length-`n` subject is
/// `u^r u'` with `|u| = n - l`; it is replaced by `uu'`.
#[inline]
pub(crate) fn reduce_border(n: usize, l: usize) -> usize {
    if 2 * l > n {
        let p = n - l;
        p + n % p
    } else {
        l
    }
}

/// Non-empty, non-periodic borders of `x` in decreasing length.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BorderChain {
    pub lengths: Vec<usize>,
}

impl BorderChain {
    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }
}

fn chain_from_border_array(ba: &BorderArray) -> BorderChain {
    let mut lengths = Vec::new();
    let mut n = ba.subject_len();
    loop {
        let l = ba.values[n] as usize;
        if l == 0 {
            break;
        }
        let l = reduce_border(n, l);
        lengths.push(l);
        n = l;
    }
    BorderChain { lengths }
}

/// Iterates the border function from `x`, reducing periodic borders.
pub fn border_chain(x: &[u8]) -> Result<BorderChain> {
    Ok(chain_from_border_array(&border_array(x)?))
}

/// Occurrences of `x[..b]` in `x` by KMP, reusing `x`'s border array: its
/// first `b + 1` entries are the border array of the pattern.
fn prefix_occurrences_kmp(x: &[u8], ba: &BorderArray, b: usize) -> Vec<usize> {
    let bor = &ba.values;
    let mut occ = Vec::new();
    let mut i: i32 = 0;
    for (j, &c) in x.iter().enumerate() {
        while i >= 0 && x[i as usize] != c {
            i = bor[i as usize];
        }
        i += 1;
        if i as usize == b {
            occ.push(j + 1 - b);
            i = bor[b];
        }
    }
    occ
}

/// Length of the shortest cover; equals `m` exactly when `x` is superprimitive.
pub fn shortest_cover_classical(x: &[u8]) -> Result<usize> {
    let ba = border_array(x)?;
    let m = x.len();
    let chain = chain_from_border_array(&ba);
    for &b in chain.lengths.iter().rev() {
        let occ = prefix_occurrences_kmp(x, &ba, b);
        if covers_sorted(&occ, b, m) {
            return Ok(b);
        }
    }
    Ok(m)
}

/// Smallest `b` whose prefix covers `x`, trying every length.
pub fn naive_shortest_cover(x: &[u8]) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let m = x.len();
    for b in 1..m {
        let occ = occurrences(&x[..b], x)?;
        if is_covering(&occ, b, m)? {
            return Ok(b);
        }
    }
    Ok(m)
}

/// Longest proper border by direct prefix/suffix comparison.
pub fn naive_longest_border(x: &[u8]) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let m = x.len();
    Ok((1..m).rev().find(|&b| x[..b] == x[m - b..]).unwrap_or(0))
}
