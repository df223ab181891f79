//! Byte texts: loading, prefixing and deterministic generation.

use std::fs;
use std::ops::Deref;
use std::path::Path;

use crate::error::{Error, Result};

/// An immutable byte string. Symbols are raw bytes with no encoding attached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Text {
    bytes: Box<[u8]>,
}

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Text {
            bytes: bytes.into().into_boxed_slice(),
        }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Text length `m`.
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Number of distinct bytes.
    pub fn alphabet_size(&self) -> usize {
        let mut seen = [false; 256];
        for &c in self.bytes.iter() {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// The first `len` bytes, or the whole text if it is shorter.
    pub fn prefix(&self, len: usize) -> Text {
        Text::new(&self.bytes[..len.min(self.len())])
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.bytes
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.bytes
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::new(s.as_bytes())
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Self {
        Text::new(s)
    }
}

impl From<Vec<u8>> for Text {
    fn from(v: Vec<u8>) -> Self {
        Text::new(v)
    }
}

impl std::fmt::Debug for Text {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        const SHOWN: usize = 64;
        let head = &self.bytes[..self.len().min(SHOWN)];
        write!(f, "Text({:?}", String::from_utf8_lossy(head))?;
        if self.len() > SHOWN {
            write!(f, "..; m = {}", self.len())?;
        }
        write!(f, ")")
    }
}

/// Reads a file as raw bytes, keeping at most `prefix_len` of them.
pub fn load_text(path: impl AsRef<Path>, prefix_len: Option<usize>) -> Result<Text> {
    let path = path.as_ref();
    if prefix_len == Some(0) {
        return Err(Error::invalid("prefix length must be at least 1"));
    }
    let mut bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    if bytes.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(n) = prefix_len {
        bytes.truncate(n);
    }
    Ok(Text::new(bytes))
}

const LCG_MUL: u64 = 6364136223846793005;
const LCG_INC: u64 = 1442695040888963407;

/// Largest alphabet whose symbols `'a' + j` still fit in a byte.
pub const MAX_GEN_ALPHABET: usize = (u8::MAX - b'a') as usize + 1;

/// Parameters of a synthetic text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub alphabet_size: usize,
    pub length: usize,
    pub seed: u64,
    /// When set, the text repeats its first `p` symbols.
    pub forced_period: Option<usize>,
}

impl GenSpec {
    pub fn new(alphabet_size: usize, length: usize, seed: u64) -> Self {
        GenSpec {
            alphabet_size,
            length,
            seed,
            forced_period: None,
        }
    }

    pub fn with_period(mut self, p: usize) -> Self {
        self.forced_period = Some(p);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.alphabet_size == 0 || self.alphabet_size > MAX_GEN_ALPHABET {
            return Err(Error::invalid(format!(
                "alphabet size must be in 1..={MAX_GEN_ALPHABET}, got {}",
                self.alphabet_size
            )));
        }
        if self.length == 0 {
            return Err(Error::invalid("length must be at least 1"));
        }
        if let Some(p) = self.forced_period {
            if p == 0 || p > self.length {
                return Err(Error::invalid(format!(
                    "forced period must be in 1..={}, got {p}",
                    self.length
                )));
            }
        }
        Ok(())
    }
}

/// A 64-bit LCG (Knuth's MMIX constants). The state is advanced before each
/// draw and the top 32 bits are used.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(LCG_MUL).wrapping_add(LCG_INC);
        (self.state >> 32) as u32
    }

    /// Draw in `0..bound`; `bound` must be nonzero.
    pub fn below(&mut self, bound: u32) -> u32 {
        self.next_u32() % bound
    }
}

/// Deterministic synthetic text over `'a'..'a' + alphabet_size`.
pub fn gen_text(spec: &GenSpec) -> Result<Text> {
    spec.validate()?;
    let mut rng = Lcg::new(spec.seed);
    let fresh = spec.forced_period.unwrap_or(spec.length);
    let sigma = spec.alphabet_size as u32;
    let mut out = Vec::with_capacity(spec.length);
    for _ in 0..fresh {
        out.push(b'a' + rng.below(sigma) as u8);
    }
    for i in fresh..spec.length {
        out.push(out[i - fresh]);
    }
    Ok(Text::new(out))
}
