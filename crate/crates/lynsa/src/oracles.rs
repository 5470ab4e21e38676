//! Slow, obviously-correct reference implementations. They back the test
//! suites and the CLI `--check` mode and deliberately share no code with
//! the production path.

use crate::types::{Index, InverseSuffixArray, LyndonArray, SuffixArray, Text};
use thiserror::Error;

/// True iff `factor` is a Lyndon word: primitive and strictly smaller
/// than every proper rotation. Checked by direct rotation comparison in
/// O(k^2); a repetition compares equal to one of its rotations and is
/// rejected by the strictness.
pub fn is_lyndon(factor: &[u8]) -> bool {
    let k = factor.len();
    if k == 0 {
        return false;
    }
    (1..k).all(|r| {
        let rotation = factor[r..].iter().chain(factor[..r].iter());
        rotation.cmp(factor.iter()) == std::cmp::Ordering::Greater
    })
}

/// Lyndon array straight from the definition: for each position, the
/// largest factor length that passes [`is_lyndon`]. Cubic-ish; tests cap
/// the input size.
pub fn la_bruteforce(text: &Text) -> LyndonArray {
    let bytes = text.as_bytes();
    let n = bytes.len();
    let mut entries = vec![0 as Index; n];
    for i in 0..n {
        for len in 1..=n - i {
            if is_lyndon(&bytes[i..i + len]) {
                entries[i] = len as Index;
            }
        }
    }
    LyndonArray::from_entries(entries)
}

/// Suffix array by comparison sort of all suffixes.
pub fn sa_naive(text: &Text) -> SuffixArray {
    let bytes = text.as_bytes();
    let mut positions: Vec<Index> = (1..=bytes.len() as Index).collect();
    positions.sort_by(|&a, &b| bytes[a as usize - 1..].cmp(&bytes[b as usize - 1..]));
    SuffixArray::from_entries(positions)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("entries are not a permutation of 1..=n")]
pub struct MalformedPermutation;

/// Inverts a suffix array, verifying it is a permutation of 1..=n.
pub fn isa_from_sa(sa: &SuffixArray) -> Result<InverseSuffixArray, MalformedPermutation> {
    let n = sa.len();
    let mut entries = vec![0 as Index; n];
    for (rank0, &pos) in sa.as_slice().iter().enumerate() {
        if pos == 0 || pos as usize > n || entries[pos as usize - 1] != 0 {
            return Err(MalformedPermutation);
        }
        entries[pos as usize - 1] = rank0 as Index + 1;
    }
    Ok(InverseSuffixArray::from_entries(entries))
}

/// Next-smaller-value array plus the high-water mark of the auxiliary
/// stack used to compute it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsvResult {
    /// 1-based: `nsv[i-1]` is the smallest j > i with `values[j-1] <
    /// values[i-1]`, or n+1 when none exists.
    pub nsv: Vec<Index>,
    pub max_stack_depth: usize,
}

/// Right-to-left scan with a stack of candidate positions. On an input
/// sorted in decreasing order the scan never pops and the stack grows to
/// n entries.
pub fn nsv(values: &[Index]) -> NsvResult {
    let n = values.len();
    let mut out = vec![0 as Index; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut max_depth = 0;
    for i in (0..n).rev() {
        while let Some(&top) = stack.last() {
            if values[top] >= values[i] {
                stack.pop();
            } else {
                break;
            }
        }
        out[i] = match stack.last() {
            Some(&top) => (top + 1) as Index,
            None => (n + 1) as Index,
        };
        stack.push(i);
        max_depth = max_depth.max(stack.len());
    }
    NsvResult {
        nsv: out,
        max_stack_depth: max_depth,
    }
}

/// Lyndon array from the inverse suffix array: the longest Lyndon factor
/// at i ends just before the next position whose suffix rank is smaller,
/// so LA[i] = NSV_ISA[i] - i.
pub fn la_from_nsv(isa: &InverseSuffixArray) -> LyndonArray {
    let result = nsv(isa.as_slice());
    let entries = result
        .nsv
        .iter()
        .enumerate()
        .map(|(i, &v)| v - (i as Index + 1))
        .collect();
    LyndonArray::from_entries(entries)
}
