//! Linear-time suffix array construction by induced sorting.
//!
//! The byte level keeps one 256-entry bucket-cursor array; that is the
//! only allocation beyond the caller's output buffer. All recursion
//! levels work entirely inside the output buffer: the reduced string is
//! renamed so that each symbol is the head (L-type occurrences) or tail
//! (S-type occurrences) slot of its bucket, and bucket cursors are
//! embedded in the buffer itself as counter cells that displace their
//! bucket's items by one slot until the bucket fills up.
//!
//! Each level runs the same two-round pipeline:
//!
//! 1. place the LMS positions at their bucket tails, induce L-suffixes
//!    left-to-right and S-suffixes right-to-left, pruning so that only
//!    the LMS positions survive, now ordered by their LMS factors;
//! 2. name consecutive equal factors, solve the reduced string (directly
//!    when all names are distinct, recursively otherwise), scatter the
//!    now fully sorted LMS suffixes back to their bucket tails, and
//!    induce both types again without pruning.
//!
//! During the second round's right-to-left sweep every slot already
//! holds its final value when the scan visits it; the sweep reports each
//! (slot, suffix) pair to an [`InduceHook`], which is where the Lyndon
//! array strategies attach.

use crate::types::{Index, SuffixArray, Text, TypeMap, SENTINEL, SIGMA};

/// Marker for an unfilled work-buffer slot. Valid positions stay below
/// it; counter cells at recursion levels are encoded above it.
pub(crate) const EMPTY: Index = 1 << (Index::BITS - 1);

/// Observer of the final right-to-left induction sweep. `on_read` fires
/// exactly once per slot, in decreasing slot order, with the slot's
/// final suffix value.
pub(crate) trait InduceHook {
    fn on_read(&mut self, slot: usize, suffix: usize);
}

pub(crate) struct NoopHook;

impl InduceHook for NoopHook {
    fn on_read(&mut self, _slot: usize, _suffix: usize) {}
}

/// Sorts all suffixes of `text` into a fresh suffix array.
pub fn sort_suffixes(text: &Text) -> SuffixArray {
    let mut entries = vec![0 as Index; text.len()];
    sort_into(text, &mut entries);
    SuffixArray::from_entries(entries)
}

/// Sorts all suffixes into a caller-provided buffer of length n, written
/// as 1-based positions. Allocates one bucket array of 256 words and
/// nothing else.
pub fn sort_into(text: &Text, sa_out: &mut [Index]) {
    assert_eq!(sa_out.len(), text.len(), "output buffer must have length n");
    sacak_bytes(text.as_bytes(), sa_out, &mut NoopHook);
    for slot in sa_out.iter_mut() {
        *slot += 1;
    }
}

/// 1-based LMS positions in increasing text order. Position n is always
/// included for n >= 2; a sentinel-only text has none.
pub fn lms_positions(types: &TypeMap) -> Vec<Index> {
    (2..=types.len())
        .filter(|&p| types.is_lms(p))
        .map(|p| p as Index)
        .collect()
}

/// Symbols an induction level can run over: bytes at level zero, bucket
/// slot indices at recursion levels.
trait Sym: Copy + Ord {
    fn as_cell(self) -> usize;
}

impl Sym for u8 {
    #[inline]
    fn as_cell(self) -> usize {
        self as usize
    }
}

impl Sym for Index {
    #[inline]
    fn as_cell(self) -> usize {
        self as usize
    }
}

/// Visits the LMS positions of `t` in decreasing text order, excluding
/// the sentinel position n-1 (callers seat that one themselves), with
/// the position's first symbol.
fn for_each_lms_rev<S: Sym>(t: &[S], mut f: impl FnMut(usize, S)) {
    let n = t.len();
    if n < 2 {
        return;
    }
    let mut ch = t[n - 2];
    let mut is_s = false; // position n-2 is always L-type
    for i in (1..=n - 2).rev() {
        let ch_prev = t[i - 1];
        let s_prev = ch_prev < ch || (ch_prev == ch && is_s);
        if is_s && !s_prev {
            f(i, ch);
        }
        ch = ch_prev;
        is_s = s_prev;
    }
}

/// Length of the LMS factor starting at LMS position `i`, including the
/// terminating LMS symbol: skip the non-descending run, then extend
/// through the descending run; the factor ends at the last strict
/// descent before the first strict ascent.
fn lms_factor_len<S: Sym>(t: &[S], i: usize) -> usize {
    let n = t.len();
    let mut end = n - 1;
    let mut descended = false;
    for k in i + 1..n {
        if t[k] < t[k - 1] {
            descended = true;
            end = k;
        } else if descended && t[k] > t[k - 1] {
            break;
        }
    }
    end - i + 1
}

fn factors_equal<S: Sym>(t: &[S], a: usize, b: usize) -> bool {
    let la = lms_factor_len(t, a);
    la == lms_factor_len(t, b) && t[a..a + la] == t[b..b + la]
}

// --- byte level: cursors live in the 256-word bucket array ------------

fn fill_heads(t: &[u8], bkt: &mut [Index]) {
    bkt.fill(0);
    for &b in t {
        bkt[b as usize] += 1;
    }
    let mut sum: Index = 0;
    for slot in bkt.iter_mut() {
        let count = *slot;
        *slot = sum;
        sum += count;
    }
}

fn fill_tails(t: &[u8], bkt: &mut [Index]) {
    bkt.fill(0);
    for &b in t {
        bkt[b as usize] += 1;
    }
    let mut sum: Index = 0;
    for slot in bkt.iter_mut() {
        sum += *slot;
        *slot = sum.wrapping_sub(1);
    }
}

/// Round-one seeding: every LMS position goes to the tail of its bucket,
/// in text order; the sentinel takes slot 0.
fn place_lms_bytes(t: &[u8], sa: &mut [Index], bkt: &mut [Index]) {
    sa.fill(EMPTY);
    fill_tails(t, bkt);
    for_each_lms_rev(t, |i, ch| {
        let c = ch as usize;
        sa[bkt[c] as usize] = i as Index;
        bkt[c] -= 1;
    });
    sa[0] = (t.len() - 1) as Index;
}

/// Left-to-right pass placing every L-type suffix at its bucket head.
/// With `suffix` false (round one) consumed slots are cleared so that
/// only the leftmost-L entries survive into the S pass.
fn induce_l_bytes(t: &[u8], sa: &mut [Index], bkt: &mut [Index], suffix: bool) {
    fill_heads(t, bkt);
    for i in 0..sa.len() {
        let v = sa[i];
        if v == EMPTY || v == 0 {
            continue;
        }
        let j = v as usize - 1;
        if t[j] >= t[j + 1] {
            let c = t[j] as usize;
            sa[bkt[c] as usize] = j as Index;
            bkt[c] += 1;
            if !suffix && i > 0 {
                sa[i] = EMPTY;
            }
        }
    }
}

/// Right-to-left pass placing every S-type suffix at its bucket tail.
/// When `suffix` is false only the LMS entries survive. When true this
/// is the final sweep: every slot is read in its final state and
/// reported to `hook` in decreasing slot order.
fn induce_s_bytes(
    t: &[u8],
    sa: &mut [Index],
    bkt: &mut [Index],
    suffix: bool,
    hook: &mut dyn InduceHook,
) {
    fill_tails(t, bkt);
    for i in (0..sa.len()).rev() {
        let v = sa[i];
        if suffix {
            debug_assert!(v != EMPTY, "final sweep read an unfilled slot");
            hook.on_read(i, v as usize);
        }
        if v == EMPTY || v == 0 {
            continue;
        }
        let j = v as usize - 1;
        let c = t[j] as usize;
        // An equal symbol means the types of j and j+1 agree; j+1 sits at
        // slot i, so comparing the tail cursor against i resolves the tie.
        if t[j] < t[j + 1] || (t[j] == t[j + 1] && bkt[c] < i as Index) {
            sa[bkt[c] as usize] = j as Index;
            bkt[c] = bkt[c].wrapping_sub(1);
            if !suffix {
                sa[i] = EMPTY;
            }
        }
    }
}

/// Round-two seeding: the fully sorted LMS suffixes in `sa[..n1]` move
/// to their bucket tails, largest first.
fn scatter_lms_bytes(t: &[u8], sa: &mut [Index], n1: usize, bkt: &mut [Index]) {
    fill_tails(t, bkt);
    for k in (1..n1).rev() {
        let j = sa[k];
        sa[k] = EMPTY;
        let c = t[j as usize] as usize;
        sa[bkt[c] as usize] = j;
        bkt[c] = bkt[c].wrapping_sub(1);
    }
    debug_assert_eq!(sa[0], (t.len() - 1) as Index);
}

// --- shared between levels ---------------------------------------------

/// Moves the surviving entries (the LMS positions, now in factor order)
/// to the front; returns how many there are.
fn compact_sorted_lms(sa: &mut [Index]) -> usize {
    let mut w = 0;
    for r in 0..sa.len() {
        let v = sa[r];
        // position 0 is never LMS; counters and EMPTY are not positions
        if v < EMPTY && v != 0 {
            sa[w] = v;
            w += 1;
        }
    }
    w
}

/// Names the sorted LMS factors in `buf[..n1]`. Equal consecutive
/// factors share a name; a factor's name is the front index of its
/// group, which is also the head slot of its bucket in the reduced
/// problem, and the group size is kept at `buf[name]`. The interim
/// reduced string is written sparsely at `buf[n1 + pos/2]` (LMS
/// positions are at least two apart) and then compacted into the far
/// end of the buffer. Returns the number of distinct factors.
fn name_lms_factors<S: Sym>(t: &[S], buf: &mut [Index], n1: usize) -> usize {
    let n = t.len();
    for slot in &mut buf[n1..n] {
        *slot = EMPTY;
    }
    let mut distinct = 0usize;
    let mut name = 0usize;
    let mut prev: Option<usize> = None;
    for k in 0..n1 {
        let pos = buf[k] as usize;
        let is_new = match prev {
            None => true,
            Some(p) => !factors_equal(t, p, pos),
        };
        if is_new {
            name = k;
            distinct += 1;
            buf[name] = 1;
            prev = Some(pos);
        } else {
            buf[name] += 1;
        }
        buf[n1 + pos / 2] = name as Index;
    }
    let m = buf.len();
    let mut w = m;
    for r in (n1..n).rev() {
        if buf[r] != EMPTY {
            let v = buf[r];
            buf[r] = EMPTY;
            w -= 1;
            buf[w] = v;
        }
    }
    debug_assert_eq!(w, m - n1);
    distinct
}

/// Renames the reduced string in place for the next level: names are
/// already bucket heads, so L-type occurrences stay as they are while
/// S-type occurrences become their bucket tail, head + group size - 1.
/// The group sizes are still parked at `buf[name]` from the naming pass.
fn rename_reduced(buf: &mut [Index], n1: usize) {
    let m = buf.len();
    let s1 = m - n1;
    let mut next_s = true; // the sentinel name is S-type
    for i in (1..n1).rev() {
        let ch = buf[s1 + i];
        let ch1 = buf[s1 + i - 1];
        let cur_s = ch1 < ch || (ch1 == ch && next_s);
        if cur_s {
            let head = ch1;
            buf[s1 + i - 1] = head + buf[head as usize] - 1;
        }
        next_s = cur_s;
    }
}

/// Sorts the reduced string sitting at the far end of `buf` into
/// `buf[..n1]`, then translates those reduced-string indices back into
/// LMS positions of `t`.
fn solve_reduced<S: Sym>(t: &[S], buf: &mut [Index], n1: usize, distinct: usize) {
    let m = buf.len();
    let s1 = m - n1;
    if distinct < n1 {
        rename_reduced(buf, n1);
        let (work, t1) = buf.split_at_mut(s1);
        sacak_inner(t1, work);
    } else {
        // all names distinct: the reduced string is its own inverse order
        for k in 0..n1 {
            let name = buf[s1 + k] as usize;
            buf[name] = k as Index;
        }
    }
    unmap_lms(t, buf, n1);
}

/// Rebuilds the table of LMS positions (ascending) over the dead reduced
/// string and maps `buf[..n1]` through it.
fn unmap_lms<S: Sym>(t: &[S], buf: &mut [Index], n1: usize) {
    let m = buf.len();
    let table = m - n1;
    buf[m - 1] = (t.len() - 1) as Index;
    let mut w = n1 - 1;
    for_each_lms_rev(t, |i, _| {
        w -= 1;
        buf[table + w] = i as Index;
    });
    debug_assert_eq!(w, 0);
    for k in 0..n1 {
        let v = buf[k] as usize;
        buf[k] = buf[table + v];
    }
}

pub(crate) fn sacak_bytes(t: &[u8], sa: &mut [Index], hook: &mut dyn InduceHook) {
    let n = t.len();
    debug_assert!(n >= 1 && t[n - 1] == SENTINEL);
    debug_assert_eq!(sa.len(), n);
    if n == 1 {
        sa[0] = 0;
        hook.on_read(0, 0);
        return;
    }
    let mut bkt = vec![0 as Index; SIGMA];

    place_lms_bytes(t, sa, &mut bkt);
    induce_l_bytes(t, sa, &mut bkt, false);
    induce_s_bytes(t, sa, &mut bkt, false, &mut NoopHook);

    let n1 = compact_sorted_lms(sa);
    debug_assert!(n1 <= n / 2, "reduced length must be at most n/2");
    let distinct = name_lms_factors(t, sa, n1);
    solve_reduced(t, sa, n1, distinct);

    for slot in &mut sa[n1..] {
        *slot = EMPTY;
    }
    scatter_lms_bytes(t, sa, n1, &mut bkt);
    induce_l_bytes(t, sa, &mut bkt, true);
    induce_s_bytes(t, sa, &mut bkt, true, hook);
}

// --- recursion levels: bucket cursors live inside the buffer -----------
//
// A bucket's counter sits at the bucket's insertion-end slot, encoded as
// EMPTY + count, while the counted items sit displaced by one slot. Once
// a bucket fills up (or a neighbour reclaims a borrowed slot) its items
// shift back onto their real slots and the counter disappears. The logic
// below follows Nong's reference induction for the inner levels.

/// Tail-side insertion used while seeding round one at a recursion
/// level (no scan cursor to maintain).
fn tail_insert_inner(sa: &mut [Index], cell: usize, item: Index) {
    let mut d = sa[cell];
    if d < EMPTY {
        // the slot holds an item the right-hand bucket parked here;
        // walk right to its counter, shifting that bucket back in place
        let mut carried = sa[cell];
        let mut h = cell + 1;
        while sa[h] <= EMPTY {
            std::mem::swap(&mut sa[h], &mut carried);
            h += 1;
        }
        sa[h] = carried;
        d = EMPTY;
    }
    if d == EMPTY {
        if cell > 0 && sa[cell - 1] == EMPTY {
            sa[cell] = EMPTY + 1;
            sa[cell - 1] = item;
        } else {
            sa[cell] = item;
        }
    } else {
        let k = (d - EMPTY) as usize;
        if cell < k + 1 || sa[cell - k - 1] != EMPTY {
            // bucket full: shift the items onto their real slots
            for h in 0..k {
                sa[cell - h] = sa[cell - h - 1];
            }
            sa[cell - k] = item;
        } else {
            sa[cell] += 1;
            sa[cell - k - 1] = item;
        }
    }
}

/// Shifts every bucket still trailed by a tail counter back onto its
/// real slots.
fn cleanup_tail_counters(sa: &mut [Index]) {
    for i in (0..sa.len()).rev() {
        if sa[i] > EMPTY {
            let k = (sa[i] - EMPTY) as usize;
            for h in 0..k {
                sa[i - h] = sa[i - h - 1];
            }
            sa[i - k] = EMPTY;
        }
    }
}

fn cleanup_head_counters(sa: &mut [Index]) {
    for i in 0..sa.len() {
        if sa[i] > EMPTY {
            let k = (sa[i] - EMPTY) as usize;
            for h in 0..k {
                sa[i + h] = sa[i + h + 1];
            }
            sa[i + k] = EMPTY;
        }
    }
}

fn place_lms_inner(t: &[Index], sa: &mut [Index]) {
    let n = t.len();
    sa.fill(EMPTY);
    for_each_lms_rev(t, |i, ch| {
        tail_insert_inner(sa, ch.as_cell(), i as Index);
    });
    cleanup_tail_counters(sa);
    sa[0] = (n - 1) as Index;
}

fn induce_l_inner(t: &[Index], sa: &mut [Index], suffix: bool) {
    let n = t.len();
    let mut i = 0usize;
    while i < n {
        let mut moved = false; // current slot's content was shifted left
        let v = sa[i];
        if v > 0 && v < EMPTY {
            let j = v as usize - 1;
            let c = t[j];
            let c1 = t[j + 1];
            if c >= c1 {
                // t1[j] is L-type; insert j at the head of its bucket
                let cell = c.as_cell();
                let mut d = sa[cell];
                if d < EMPTY {
                    // head slot borrowed by the left-hand bucket
                    let mut carried = sa[cell];
                    let mut h = cell - 1;
                    while sa[h] <= EMPTY {
                        std::mem::swap(&mut sa[h], &mut carried);
                        h -= 1;
                    }
                    sa[h] = carried;
                    if h < i {
                        moved = true;
                    }
                    d = EMPTY;
                }
                if d == EMPTY {
                    if cell + 1 < n && sa[cell + 1] == EMPTY {
                        sa[cell] = EMPTY + 1;
                        sa[cell + 1] = j as Index;
                    } else {
                        sa[cell] = j as Index;
                    }
                } else {
                    let k = (d - EMPTY) as usize;
                    let pos = cell + k + 1;
                    if pos > n - 1 || sa[pos] != EMPTY {
                        for h in 0..k {
                            sa[cell + h] = sa[cell + h + 1];
                        }
                        sa[pos - 1] = j as Index;
                        if cell < i {
                            moved = true;
                        }
                    } else {
                        sa[cell] += 1;
                        sa[pos] = j as Index;
                    }
                }
                // Drop the consumed entry. In the final round, L-type
                // entries stay (the S pass reads them); anything else
                // left at a bucket tail would be mistaken for a parked
                // item by the S pass counters.
                let keep = suffix
                    && j + 1 < n - 1
                    && {
                        let c2 = t[j + 2];
                        c1 > c2 || (c1 == c2 && c1.as_cell() < i)
                    };
                if !keep && i > 0 {
                    let at = if moved { i - 1 } else { i };
                    sa[at] = EMPTY;
                }
            }
        }
        if !moved {
            i += 1;
        }
    }
    cleanup_head_counters(&mut sa[..n]);
}

fn induce_s_inner(t: &[Index], sa: &mut [Index], suffix: bool) {
    let n = t.len();
    let mut i = n - 1;
    loop {
        let mut moved = false; // current slot's content was shifted right
        let v = sa[i];
        if v > 0 && v < EMPTY {
            let j = v as usize - 1;
            let c = t[j];
            let c1 = t[j + 1];
            // equal symbols share a type; j+1 sits at slot i, and an
            // S-type occurrence's symbol is its bucket tail, above i
            if c < c1 || (c == c1 && c.as_cell() > i) {
                let cell = c.as_cell();
                let mut d = sa[cell];
                if d < EMPTY {
                    // tail slot borrowed by the right-hand bucket
                    let mut carried = sa[cell];
                    let mut h = cell + 1;
                    while sa[h] <= EMPTY {
                        std::mem::swap(&mut sa[h], &mut carried);
                        h += 1;
                    }
                    sa[h] = carried;
                    if h > i {
                        moved = true;
                    }
                    d = EMPTY;
                }
                if d == EMPTY {
                    if cell > 0 && sa[cell - 1] == EMPTY {
                        sa[cell] = EMPTY + 1;
                        sa[cell - 1] = j as Index;
                    } else {
                        sa[cell] = j as Index;
                    }
                } else {
                    let k = (d - EMPTY) as usize;
                    if cell < k + 1 || sa[cell - k - 1] != EMPTY {
                        for h in 0..k {
                            sa[cell - h] = sa[cell - h - 1];
                        }
                        sa[cell - k] = j as Index;
                        if cell > i {
                            moved = true;
                        }
                    } else {
                        sa[cell] += 1;
                        sa[cell - k - 1] = j as Index;
                    }
                }
                if !suffix {
                    let at = if moved { i + 1 } else { i };
                    sa[at] = EMPTY;
                }
            }
        }
        if !moved {
            if i == 0 {
                break;
            }
            i -= 1;
        }
    }
    if !suffix {
        cleanup_tail_counters(&mut sa[..n]);
    }
}

/// Round-two seeding at a recursion level. The sorted LMS suffixes in
/// `sa[..n1]` walk to their bucket tails largest-first; since an LMS
/// symbol is its bucket's tail slot, consecutive entries of one bucket
/// go to `cell`, `cell - 1`, ... with no counters needed.
fn scatter_lms_inner(t: &[Index], sa: &mut [Index], n1: usize) {
    let mut prev_cell = usize::MAX;
    let mut pos = 0usize;
    for k in (1..n1).rev() {
        let j = sa[k];
        sa[k] = EMPTY;
        let cell = t[j as usize].as_cell();
        if cell != prev_cell {
            prev_cell = cell;
            pos = cell;
        }
        sa[pos] = j;
        pos = pos.wrapping_sub(1);
    }
    debug_assert_eq!(sa[0], (t.len() - 1) as Index);
}

/// One recursion level: `t` is the renamed reduced string, `buf` the
/// remaining workspace (at least as long as `t`; the far end is where
/// the next reduced string will be parked).
fn sacak_inner(t: &[Index], buf: &mut [Index]) {
    let n = t.len();
    if n == 1 {
        buf[0] = 0;
        return;
    }
    place_lms_inner(t, &mut buf[..n]);
    induce_l_inner(t, &mut buf[..n], false);
    induce_s_inner(t, &mut buf[..n], false);

    let n1 = compact_sorted_lms(&mut buf[..n]);
    debug_assert!(n1 <= n / 2);
    let distinct = name_lms_factors(t, buf, n1);
    solve_reduced(t, buf, n1, distinct);

    for slot in &mut buf[n1..n] {
        *slot = EMPTY;
    }
    scatter_lms_inner(t, &mut buf[..n], n1);
    induce_l_inner(t, &mut buf[..n], true);
    induce_s_inner(t, &mut buf[..n], true);
}
