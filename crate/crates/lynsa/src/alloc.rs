//! Heap accounting for working-space measurements.
//!
//! [`CountingAlloc`] is registered as the global allocator by the
//! binaries that report working-space numbers (the CLI and the
//! workspace acceptance tests); the library itself never registers it.
//! When it is not registered the counters stay at zero and
//! [`measure_extra_words`] reports zero growth.

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicUsize, Ordering};

static LIVE: AtomicUsize = AtomicUsize::new(0);
static PEAK: AtomicUsize = AtomicUsize::new(0);

/// Global allocator wrapper tracking live heap bytes and their peak.
pub struct CountingAlloc;

unsafe impl GlobalAlloc for CountingAlloc {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let ptr = unsafe { System.alloc(layout) };
        if !ptr.is_null() {
            let live = LIVE.fetch_add(layout.size(), Ordering::Relaxed) + layout.size();
            PEAK.fetch_max(live, Ordering::Relaxed);
        }
        ptr
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        unsafe { System.dealloc(ptr, layout) };
        LIVE.fetch_sub(layout.size(), Ordering::Relaxed);
    }
}

/// Bytes per index word; working-space figures are quoted in words.
pub const WORD_BYTES: usize = std::mem::size_of::<crate::types::Index>();

pub fn live_bytes() -> usize {
    LIVE.load(Ordering::Relaxed)
}

pub fn peak_bytes() -> usize {
    PEAK.load(Ordering::Relaxed)
}

pub fn reset_peak() {
    PEAK.store(LIVE.load(Ordering::Relaxed), Ordering::Relaxed);
}

/// Runs `f` and reports how far the live heap grew above its level at
/// entry, in index words. Only meaningful in single-threaded sections
/// of a binary that registered [`CountingAlloc`].
pub fn measure_extra_words<R>(f: impl FnOnce() -> R) -> (R, usize) {
    let base = live_bytes();
    reset_peak();
    let out = f();
    let extra = peak_bytes().saturating_sub(base);
    (out, extra / WORD_BYTES)
}
