//! Core value types: the sentinel-terminated input text, suffix type
//! classification, bucket cursors, and the output array wrappers.
//!
//! Positions are 1-based everywhere in this module's API. Internally the
//! algorithms translate to 0-based offsets; the wrappers here hold the
//! externally visible 1-based values.

use thiserror::Error;

/// Index word. Every array entry (suffix position, Lyndon length, bucket
/// cursor) fits in one of these; with the default `u32` the maximum text
/// length including sentinel is 2^31 - 2.
#[cfg(not(feature = "wide-index"))]
pub type Index = u32;
/// Index word (wide build).
#[cfg(feature = "wide-index")]
pub type Index = u64;

/// Sentinel symbol appended to every text, smaller than all other bytes.
pub const SENTINEL: u8 = 0;

/// Nominal alphabet size at the byte level (255 byte values + sentinel).
/// Fixed regardless of how many distinct symbols actually occur, so the
/// bucket array size is input-independent.
pub(crate) const SIGMA: usize = 256;

/// Largest supported raw input length for the current index width. One
/// word is reserved for the sentinel and the topmost bit is used as an
/// in-buffer marker by the suffix sorter.
pub fn max_input_len() -> usize {
    ((Index::MAX >> 1) - 2) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    /// The input contains byte 0, which is reserved for the sentinel.
    #[error("input contains sentinel byte 0x00 at offset {0}")]
    SentinelInInput(usize),
    /// Empty input while the caller disallowed it.
    #[error("empty input is not allowed")]
    EmptyInput,
    /// Input too long for the configured index width.
    #[error("input length {len} exceeds the maximum {max} for this index width")]
    TooLarge { len: usize, max: usize },
}

/// A byte string with the sentinel appended; the universe all positions
/// refer to. Position `i` (1-based) holds `bytes[i-1]`; position `n` is
/// always the sentinel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
    sigma: usize,
}

impl Text {
    /// Builds a text from raw bytes, appending the sentinel. Empty input
    /// is accepted and yields the sentinel-only text of length 1.
    pub fn from_bytes(raw: &[u8]) -> Result<Self, TextError> {
        Self::with_options(raw, true)
    }

    /// As [`Text::from_bytes`] but empty input can be rejected.
    pub fn with_options(raw: &[u8], allow_empty: bool) -> Result<Self, TextError> {
        if raw.is_empty() && !allow_empty {
            return Err(TextError::EmptyInput);
        }
        if raw.len() > max_input_len() {
            return Err(TextError::TooLarge {
                len: raw.len(),
                max: max_input_len(),
            });
        }
        if let Some(at) = raw.iter().position(|&b| b == SENTINEL) {
            return Err(TextError::SentinelInInput(at));
        }
        let mut bytes = Vec::with_capacity(raw.len() + 1);
        bytes.extend_from_slice(raw);
        bytes.push(SENTINEL);
        Ok(Text {
            bytes,
            sigma: SIGMA,
        })
    }

    /// Length including the sentinel (n >= 1).
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    /// A text always contains at least the sentinel.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Nominal alphabet size (256 at the byte level).
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Symbol at 1-based position `pos`.
    pub fn symbol(&self, pos: usize) -> u8 {
        self.bytes[pos - 1]
    }

    /// All symbols including the trailing sentinel.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// Suffix type: `S` when the suffix is smaller than its right neighbour,
/// `L` when larger. The sentinel suffix is S by definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuffixKind {
    L,
    S,
}

/// S/L classification of every suffix, with the derived LMS predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeMap {
    kinds: Vec<SuffixKind>,
}

impl TypeMap {
    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Kind of the suffix at 1-based position `pos`.
    pub fn kind(&self, pos: usize) -> SuffixKind {
        self.kinds[pos - 1]
    }

    /// All kinds; slot `k` holds position `k + 1`.
    pub fn kinds(&self) -> &[SuffixKind] {
        &self.kinds
    }

    /// Leftmost-S predicate: S-type with an L-type left neighbour.
    /// Never true for position 1.
    pub fn is_lms(&self, pos: usize) -> bool {
        pos >= 2 && self.kind(pos) == SuffixKind::S && self.kind(pos - 1) == SuffixKind::L
    }
}

/// Classifies every suffix by the right-to-left propagation rule:
/// position n is S; before that, S iff the symbol is smaller than its
/// right neighbour, L iff larger, and ties inherit from the right.
pub fn classify(text: &Text) -> TypeMap {
    let bytes = text.as_bytes();
    let n = bytes.len();
    let mut kinds = vec![SuffixKind::S; n];
    for i in (0..n - 1).rev() {
        kinds[i] = match bytes[i].cmp(&bytes[i + 1]) {
            std::cmp::Ordering::Less => SuffixKind::S,
            std::cmp::Ordering::Greater => SuffixKind::L,
            std::cmp::Ordering::Equal => kinds[i + 1],
        };
    }
    TypeMap { kinds }
}

/// Which end of each bucket the cursors point at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BucketMode {
    Head,
    Tail,
}

/// Per-symbol insertion cursors delimiting the c-buckets of the suffix
/// array. In `Head` mode `cursor(c)` is the first slot of the c-bucket
/// (1-based); in `Tail` mode the last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketArray {
    cursors: Vec<Index>,
    mode: BucketMode,
}

impl BucketArray {
    pub fn mode(&self) -> BucketMode {
        self.mode
    }

    /// 1-based cursor for symbol `c`. Meaningful only for symbols that
    /// occur in the text.
    pub fn cursor(&self, c: u8) -> Index {
        self.cursors[c as usize]
    }

    pub fn cursors(&self) -> &[Index] {
        &self.cursors
    }
}

/// Computes the head or tail cursor of every symbol bucket by counting
/// sort prefix sums.
pub fn bucket_bounds(text: &Text, mode: BucketMode) -> BucketArray {
    let mut cursors = vec![0 as Index; SIGMA];
    for &b in text.as_bytes() {
        cursors[b as usize] += 1;
    }
    let mut sum: Index = 0;
    for c in cursors.iter_mut() {
        let count = *c;
        sum += count;
        *c = match mode {
            BucketMode::Head => sum - count + 1,
            BucketMode::Tail => sum,
        };
    }
    BucketArray { cursors, mode }
}

/// Lexicographic order of all suffixes: `as_slice()[k]` is the 1-based
/// start of the (k+1)-smallest suffix. Entry 0 is always the sentinel
/// position n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArray {
    entries: Vec<Index>,
}

impl SuffixArray {
    pub(crate) fn from_entries(entries: Vec<Index>) -> Self {
        SuffixArray { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[Index] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<Index> {
        self.entries
    }
}

/// Rank of each suffix: `as_slice()[p-1]` is the position of suffix p in
/// the suffix array, so `isa[sa[i]] = i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSuffixArray {
    entries: Vec<Index>,
}

impl InverseSuffixArray {
    pub(crate) fn from_entries(entries: Vec<Index>) -> Self {
        InverseSuffixArray { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[Index] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<Index> {
        self.entries
    }
}

/// Length of the longest Lyndon factor starting at each position:
/// `as_slice()[p-1]` is that length for position p. The entry for the
/// sentinel position is always 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonArray {
    entries: Vec<Index>,
}

impl LyndonArray {
    pub(crate) fn from_entries(entries: Vec<Index>) -> Self {
        LyndonArray { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[Index] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<Index> {
        self.entries
    }

    /// Average Lyndon factor length, sum(LA) / n. Governs the running
    /// time of the naive in-induction strategy.
    pub fn avelyn(&self) -> f64 {
        let sum: u64 = self.entries.iter().map(|&v| v as u64).sum();
        sum as f64 / self.entries.len() as f64
    }
}
