//! Lyndon array computation attached to the suffix sorter.
//!
//! The longest Lyndon factor at position j ends right before the first
//! later position whose suffix is smaller than suffix j. The final
//! right-to-left induction sweep reads suffixes in decreasing order, so
//! when suffix j is read, exactly the positions with larger suffixes are
//! already resolved: the factor ends at the nearest unresolved position
//! after j. The four strategies below differ only in how they find that
//! position; all subscribe to the same [`InduceHook`] so the suffix
//! sorting code exists once.

use crate::sacak::{sacak_bytes, InduceHook};
use crate::types::{Index, LyndonArray, SuffixArray, Text};

/// Strategy for resolving Lyndon factor lengths during the final sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LyndonVariant {
    /// Scan the output array right until the first unresolved entry.
    /// No extra space, O(n * avelyn) time.
    Naive,
    /// Doubly linked list of unresolved positions in two arrays.
    /// 2n extra words, O(n) time.
    NextPrev,
    /// Single auxiliary array serving as NEXT until a position resolves
    /// and as storage for its right neighbour's PREV afterwards.
    /// n extra words, O(n) time.
    SingleAux,
    /// The auxiliary array of `SingleAux` fused into the output buffer
    /// itself, decoded by one final pass. No extra space, O(n) time.
    Inplace,
}

impl LyndonVariant {
    pub const ALL: [LyndonVariant; 4] = [
        LyndonVariant::Naive,
        LyndonVariant::NextPrev,
        LyndonVariant::SingleAux,
        LyndonVariant::Inplace,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LyndonVariant::Naive => "naive",
            LyndonVariant::NextPrev => "nextprev",
            LyndonVariant::SingleAux => "singleaux",
            LyndonVariant::Inplace => "inplace",
        }
    }
}

impl std::str::FromStr for LyndonVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(LyndonVariant::Naive),
            "nextprev" => Ok(LyndonVariant::NextPrev),
            "singleaux" => Ok(LyndonVariant::SingleAux),
            "inplace" => Ok(LyndonVariant::Inplace),
            other => Err(format!("unknown variant: {other}")),
        }
    }
}

impl std::fmt::Display for LyndonVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Computes the suffix array and Lyndon array into caller-provided
/// buffers of length n. `sa_out` receives 1-based suffix positions,
/// `la_out` factor lengths. Working space beyond the two buffers is the
/// 256-word bucket array plus whatever the chosen variant needs.
pub fn lyndon_into(
    text: &Text,
    variant: LyndonVariant,
    sa_out: &mut [Index],
    la_out: &mut [Index],
) {
    let n = text.len();
    assert_eq!(sa_out.len(), n, "suffix array buffer must have length n");
    assert_eq!(la_out.len(), n, "Lyndon array buffer must have length n");
    let bytes = text.as_bytes();
    match variant {
        LyndonVariant::Naive => {
            la_out.fill(0);
            let mut hook = NaiveHook { la: la_out };
            sacak_bytes(bytes, sa_out, &mut hook);
        }
        LyndonVariant::NextPrev => {
            let mut hook = NextPrevHook::new(la_out);
            sacak_bytes(bytes, sa_out, &mut hook);
        }
        LyndonVariant::SingleAux => {
            la_out.fill(0);
            let mut hook = SingleAuxHook::new(la_out);
            sacak_bytes(bytes, sa_out, &mut hook);
        }
        LyndonVariant::Inplace => {
            for (k, slot) in la_out.iter_mut().enumerate() {
                *slot = k as Index + 1;
            }
            {
                let mut hook = InplaceHook { fused: la_out };
                sacak_bytes(bytes, sa_out, &mut hook);
            }
            finalize_inplace(la_out);
        }
    }
    for slot in sa_out.iter_mut() {
        *slot += 1;
    }
}

/// Convenience wrapper returning fresh arrays.
pub fn suffix_and_lyndon(text: &Text, variant: LyndonVariant) -> (SuffixArray, LyndonArray) {
    let n = text.len();
    let mut sa = vec![0 as Index; n];
    let mut la = vec![0 as Index; n];
    lyndon_into(text, variant, &mut sa, &mut la);
    (
        SuffixArray::from_entries(sa),
        LyndonArray::from_entries(la),
    )
}

pub fn lyndon_array(text: &Text, variant: LyndonVariant) -> LyndonArray {
    suffix_and_lyndon(text, variant).1
}

/// Unresolved entries are zero; the factor at j ends at the first zero
/// after j (or at n).
struct NaiveHook<'a> {
    la: &'a mut [Index],
}

impl InduceHook for NaiveHook<'_> {
    fn on_read(&mut self, _slot: usize, j: usize) {
        let n = self.la.len();
        let mut len = 1usize;
        while j + len < n && self.la[j + len] != 0 {
            len += 1;
        }
        self.la[j] = len as Index;
    }
}

/// NEXT links each position to the nearest unresolved position after
/// it; PREV is the inverse. PREV values are stored shifted by one so
/// that 0 means "none".
struct NextPrevHook<'a> {
    next: Vec<Index>,
    prev: Vec<Index>,
    la: &'a mut [Index],
}

impl<'a> NextPrevHook<'a> {
    fn new(la: &'a mut [Index]) -> Self {
        let n = la.len();
        NextPrevHook {
            next: (1..=n as Index).collect(),
            prev: (0..n as Index).collect(),
            la,
        }
    }
}

impl InduceHook for NextPrevHook<'_> {
    fn on_read(&mut self, _slot: usize, j: usize) {
        let n = self.la.len();
        let nj = self.next[j];
        self.la[j] = nj - j as Index;
        let ps = self.prev[j];
        if ps > 0 {
            self.next[ps as usize - 1] = nj;
        }
        if (nj as usize) < n {
            self.prev[nj as usize] = ps;
        }
    }
}

/// One array does both jobs: `aux[j]` is NEXT while j is unresolved;
/// once j resolves the slot is reused to hold PREV of j+1. PREV of a
/// position whose left neighbour is still unresolved is just that
/// neighbour, recognized by its zero LA entry.
struct SingleAuxHook<'a> {
    aux: Vec<Index>,
    la: &'a mut [Index],
}

impl<'a> SingleAuxHook<'a> {
    fn new(la: &'a mut [Index]) -> Self {
        let n = la.len();
        SingleAuxHook {
            aux: (1..=n as Index).collect(),
            la,
        }
    }
}

impl InduceHook for SingleAuxHook<'_> {
    fn on_read(&mut self, _slot: usize, j: usize) {
        let n = self.la.len();
        let nj = self.aux[j];
        self.la[j] = nj - j as Index;
        let ps = if j == 0 {
            0
        } else if self.la[j - 1] == 0 {
            j as Index
        } else {
            self.aux[j - 1]
        };
        if ps > 0 {
            self.aux[ps as usize - 1] = nj;
        }
        if (nj as usize) < n {
            self.aux[nj as usize - 1] = ps;
        }
    }
}

/// As `SingleAux`, but the auxiliary array lives in the Lyndon array
/// output buffer itself. A slot holds its NEXT value (> position) while
/// unresolved; resolved slots at a block's right edge hold the PREV of
/// the position one past the block (<= position). The left neighbour of
/// a position being resolved is always readable: if it is unresolved
/// its NEXT is exactly j, which coincides with the shifted encoding of
/// "PREV is j-1", so no case split is needed.
struct InplaceHook<'a> {
    fused: &'a mut [Index],
}

impl InduceHook for InplaceHook<'_> {
    fn on_read(&mut self, _slot: usize, j: usize) {
        let a = &mut *self.fused;
        let n = a.len();
        debug_assert!(a[j] > j as Index, "read a resolved slot as NEXT");
        let nj = a[j];
        let ps = if j == 0 {
            0
        } else {
            debug_assert!(a[j - 1] <= j as Index, "consulted a stale interior slot");
            a[j - 1]
        };
        if ps > 0 {
            a[ps as usize - 1] = nj;
        }
        if (nj as usize) < n {
            a[nj as usize - 1] = ps;
        }
    }
}

/// Decodes the fused buffer into Lyndon lengths: a slot still holding
/// its NEXT value (> position) yields NEXT - position; a slot holding a
/// PREV value (<= position) marks an L-type suffix, whose factor length
/// is always 1.
pub(crate) fn finalize_inplace(fused: &mut [Index]) {
    for (k, slot) in fused.iter_mut().enumerate() {
        let v = *slot;
        *slot = if v <= k as Index { 1 } else { v - k as Index };
    }
}
