//! Run execution, correctness checking and report formatting.

use std::time::Instant;

use lynsa::alloc::measure_extra_words;
use lynsa::oracles::{isa_from_sa, la_bruteforce, la_from_nsv, nsv, sa_naive};
use lynsa::types::{classify, Index, SuffixKind, Text};
use lynsa::{lyndon_into, sort_into};

use crate::Variant;

/// Inputs small enough for the full comparison-sort oracle.
const NAIVE_CAP: usize = 100_000;
/// Inputs small enough for the cubic definitional oracle.
const BRUTE_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIPPED",
        }
    }
}

pub struct RunOutput {
    pub sa: Vec<Index>,
    pub la: Vec<Index>,
    pub elapsed_secs: f64,
    pub peak_extra_words: usize,
    pub nsv_max_stack_depth: Option<usize>,
}

/// Computes both arrays with the selected algorithm. The output buffers
/// are allocated up front so the measured peak covers working space
/// only; the figure is meaningful when the counting allocator is
/// registered (it is, in the CLI binary).
pub fn compute(text: &Text, variant: Variant) -> RunOutput {
    let n = text.len();
    let mut sa = vec![0 as Index; n];
    let mut la = vec![0 as Index; n];
    let start = Instant::now();
    let (depth, peak) = match variant {
        Variant::La(v) => {
            let ((), peak) = measure_extra_words(|| lyndon_into(text, v, &mut sa, &mut la));
            (None, peak)
        }
        Variant::NsvIsa => {
            let (depth, peak) = measure_extra_words(|| {
                sort_into(text, &mut sa);
                let mut isa = vec![0 as Index; n];
                for (rank0, &pos) in sa.iter().enumerate() {
                    isa[pos as usize - 1] = rank0 as Index + 1;
                }
                let result = nsv(&isa);
                for (k, slot) in la.iter_mut().enumerate() {
                    *slot = result.nsv[k] - (k as Index + 1);
                }
                result.max_stack_depth
            });
            (Some(depth), peak)
        }
    };
    RunOutput {
        sa,
        la,
        elapsed_secs: start.elapsed().as_secs_f64(),
        peak_extra_words: peak,
        nsv_max_stack_depth: depth,
    }
}

/// Compares a run against the reference implementations. Small inputs
/// get the full independent oracles; larger ones fall back to the
/// linear-time cross-checks (permutation shape, the next-smaller-value
/// route over the computed suffix array, and the unit-factor/L-type
/// correspondence).
pub fn check(text: &Text, sa: &[Index], la: &[Index]) -> CheckStatus {
    let n = text.len();

    let mut seen = vec![false; n];
    for &p in sa {
        if p == 0 || p as usize > n || seen[p as usize - 1] {
            return CheckStatus::Fail;
        }
        seen[p as usize - 1] = true;
    }

    let mut isa = vec![0 as Index; n];
    for (rank0, &pos) in sa.iter().enumerate() {
        isa[pos as usize - 1] = rank0 as Index + 1;
    }
    let result = nsv(&isa);
    for (k, (&len, &next_smaller)) in la.iter().zip(&result.nsv).enumerate() {
        if len != next_smaller - (k as Index + 1) {
            return CheckStatus::Fail;
        }
    }

    let types = classify(text);
    for (k, &len) in la.iter().enumerate() {
        let pos = k + 1;
        if (len == 1) != (pos == n || types.kind(pos) == SuffixKind::L) {
            return CheckStatus::Fail;
        }
    }

    if n <= NAIVE_CAP {
        let reference_sa = sa_naive(text);
        if reference_sa.as_slice() != sa {
            return CheckStatus::Fail;
        }
        let reference_la = la_from_nsv(&isa_from_sa(&reference_sa).expect("naive sa"));
        if reference_la.as_slice() != la {
            return CheckStatus::Fail;
        }
    }
    if n <= BRUTE_CAP && la_bruteforce(text).as_slice() != la {
        return CheckStatus::Fail;
    }
    CheckStatus::Pass
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub input: String,
    pub n: usize,
    pub sigma_effective: usize,
    pub variant: String,
    pub elapsed_secs: f64,
    pub avelyn: f64,
    pub peak_extra_words: usize,
    pub nsv_max_stack_depth: Option<usize>,
    pub check: CheckStatus,
}

impl RunReport {
    pub fn build(
        input: &str,
        text: &Text,
        sigma_effective: usize,
        variant: Variant,
        out: &RunOutput,
        check: CheckStatus,
    ) -> Self {
        let n = text.len();
        let sum: u64 = out.la.iter().map(|&v| v as u64).sum();
        let avelyn = sum as f64 / n as f64;
        debug_assert!(avelyn >= 1.0 && avelyn <= (n as f64 + 1.0) / 2.0);
        RunReport {
            input: input.to_string(),
            n,
            sigma_effective,
            variant: variant.as_str().to_string(),
            elapsed_secs: out.elapsed_secs,
            avelyn,
            peak_extra_words: out.peak_extra_words,
            nsv_max_stack_depth: out.nsv_max_stack_depth,
            check,
        }
    }

    pub fn tsv_header() -> &'static str {
        "#input\tn\tsigma_eff\tvariant\telapsed_s\tavelyn\tpeak_extra_words\tnsv_max_stack_depth\tcheck"
    }

    fn depth_field(&self) -> String {
        self.nsv_max_stack_depth
            .map(|d| d.to_string())
            .unwrap_or_else(|| "-".to_string())
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{:.6}\t{:.4}\t{}\t{}\t{}",
            self.input,
            self.n,
            self.sigma_effective,
            self.variant,
            self.elapsed_secs,
            self.avelyn,
            self.peak_extra_words,
            self.depth_field(),
            self.check.as_str()
        )
    }

    pub fn to_kv(&self) -> String {
        format!(
            "input={} n={} sigma_eff={} variant={} elapsed_s={:.6} avelyn={:.4} \
             peak_extra_words={} nsv_max_stack_depth={} check={}",
            self.input,
            self.n,
            self.sigma_effective,
            self.variant,
            self.elapsed_secs,
            self.avelyn,
            self.peak_extra_words,
            self.depth_field(),
            self.check.as_str()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lynsa::LyndonVariant;

    fn text(raw: &[u8]) -> Text {
        Text::from_bytes(raw).unwrap()
    }

    #[test]
    fn compute_and_check_banana() {
        let t = text(b"banana");
        for variant in [
            Variant::La(LyndonVariant::Naive),
            Variant::La(LyndonVariant::NextPrev),
            Variant::La(LyndonVariant::SingleAux),
            Variant::La(LyndonVariant::Inplace),
            Variant::NsvIsa,
        ] {
            let out = compute(&t, variant);
            assert_eq!(out.sa, vec![7, 6, 4, 2, 1, 5, 3], "{variant}");
            assert_eq!(out.la, vec![1, 2, 1, 2, 1, 1, 1], "{variant}");
            assert_eq!(check(&t, &out.sa, &out.la), CheckStatus::Pass);
        }
    }

    #[test]
    fn nsv_isa_reports_stack_depth() {
        let mut raw = vec![b'b'; 999];
        raw[998] = b'a';
        let t = text(&raw);
        let out = compute(&t, Variant::NsvIsa);
        assert_eq!(out.nsv_max_stack_depth, Some(1000));
    }

    #[test]
    fn check_rejects_corrupted_outputs() {
        let t = text(b"banana");
        let out = compute(&t, Variant::La(LyndonVariant::Inplace));

        let mut bad_sa = out.sa.clone();
        bad_sa.swap(1, 2);
        assert_eq!(check(&t, &bad_sa, &out.la), CheckStatus::Fail);

        let mut bad_la = out.la.clone();
        bad_la[1] = 3;
        assert_eq!(check(&t, &out.sa, &bad_la), CheckStatus::Fail);

        let dup: Vec<Index> = vec![7, 7, 4, 2, 1, 5, 3];
        assert_eq!(check(&t, &dup, &out.la), CheckStatus::Fail);
    }
}
