//! Acceptance suite. Each numbered criterion runs in sequence and prints
//! one PASS/FAIL line; the test fails if any criterion does.
//!
//! Run with: cargo test -p lynsa --test acceptance -- --nocapture

use std::time::{Duration, Instant};

use lynsa::alloc::{measure_extra_words, CountingAlloc};
use lynsa::oracles::{isa_from_sa, la_bruteforce, la_from_nsv, nsv, sa_naive};
use lynsa::types::{classify, Index, LyndonArray, SuffixKind, Text};
use lynsa::{lyndon_into, sort_into, sort_suffixes, suffix_and_lyndon, LyndonVariant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[global_allocator]
static ALLOC: CountingAlloc = CountingAlloc;

struct Outcome {
    id: usize,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn record(results: &mut Vec<Outcome>, id: usize, name: &'static str, pass: bool, detail: String) {
    results.push(Outcome {
        id,
        name,
        pass,
        detail,
    });
}

fn text(raw: &[u8]) -> Text {
    Text::from_bytes(raw).unwrap()
}

fn rand_text(rng: &mut ChaCha8Rng, sigma: u8, len: usize) -> Text {
    let raw: Vec<u8> = (0..len).map(|_| rng.random_range(1..=sigma)).collect();
    text(&raw)
}

/// b^(k-1) a, the all-L worst case for stack-based methods.
fn bbba_text(raw_len: usize) -> Text {
    let mut raw = vec![b'b'; raw_len];
    raw[raw_len - 1] = b'a';
    text(&raw)
}

/// a^(k-1) b, whose average Lyndon factor length is about k/2.
fn aab_text(raw_len: usize) -> Text {
    let mut raw = vec![b'a'; raw_len];
    raw[raw_len - 1] = b'b';
    text(&raw)
}

fn next_string(raw: &mut [u8], sigma: u8) -> bool {
    for b in raw.iter_mut().rev() {
        if *b - b'a' + 1 < sigma {
            *b += 1;
            return true;
        }
        *b = b'a';
    }
    false
}

/// Lemma-3 shape: a factor has length 1 exactly at L-type positions and
/// at the sentinel.
fn lemma3_holds(t: &Text, la: &LyndonArray) -> bool {
    let types = classify(t);
    la.as_slice().iter().enumerate().all(|(k, &len)| {
        let pos = k + 1;
        (len == 1) == (pos == t.len() || types.kind(pos) == SuffixKind::L)
    })
}

fn best_secs(reps: usize, mut f: impl FnMut()) -> f64 {
    let mut best = Duration::MAX;
    for _ in 0..reps {
        let start = Instant::now();
        f();
        best = best.min(start.elapsed());
    }
    best.as_secs_f64()
}

/// Criteria 1 and 4 (exhaustive half): every string over {a,b} up to
/// length 12 and over {a,b,c} up to length 8.
fn criterion_exhaustive(results: &mut Vec<Outcome>) -> usize {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    let mut lemma3_failures = 0usize;
    for (sigma, max_len) in [(2u8, 12usize), (3, 8)] {
        for len in 1..=max_len {
            let mut raw = vec![b'a'; len];
            loop {
                let t = text(&raw);
                let reference_la = la_bruteforce(&t);
                let reference_sa = sa_naive(&t);
                if sort_suffixes(&t) != reference_sa {
                    mismatches += 1;
                }
                for v in LyndonVariant::ALL {
                    let (sa, la) = suffix_and_lyndon(&t, v);
                    if sa != reference_sa || la != reference_la {
                        mismatches += 1;
                    }
                }
                if !lemma3_holds(&t, &reference_la) {
                    lemma3_failures += 1;
                }
                checked += 1;
                if !next_string(&mut raw, sigma) {
                    break;
                }
            }
        }
    }
    let pass = mismatches == 0;
    record(
        results,
        1,
        "exhaustive oracle equivalence",
        pass,
        format!(
            "{checked} strings, {mismatches} mismatches, {:.1}s",
            start.elapsed().as_secs_f64()
        ),
    );
    lemma3_failures
}

/// Criteria 2 and 4 (randomized half): 1000 seeded texts across four
/// alphabet sizes.
fn criterion_randomized(results: &mut Vec<Outcome>) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1317_ac5e);
    let mut mismatches = 0usize;
    let mut lemma3_failures = 0usize;
    let mut checked = 0usize;
    for sigma in [2u8, 4, 16, 128] {
        for _ in 0..250 {
            let len = rng.random_range(1..=2000);
            let t = rand_text(&mut rng, sigma, len);
            let sa = sort_suffixes(&t);
            let reference_la = la_from_nsv(&isa_from_sa(&sa).expect("sacak output"));
            for v in LyndonVariant::ALL {
                let (vsa, vla) = suffix_and_lyndon(&t, v);
                if vsa != sa || vla != reference_la {
                    mismatches += 1;
                }
            }
            if !lemma3_holds(&t, &reference_la) {
                lemma3_failures += 1;
            }
            checked += 1;
        }
    }
    record(
        results,
        2,
        "randomized equivalence",
        mismatches == 0,
        format!("{checked} texts, lengths <= 2000, sigma in {{2,4,16,128}}, {mismatches} mismatches"),
    );
    lemma3_failures
}

fn criterion_paper_anchor(results: &mut Vec<Outcome>) {
    let t = text(b"banaananaanana");
    let mut pass = true;
    let mut detail = String::new();
    for v in LyndonVariant::ALL {
        let (sa, la) = suffix_and_lyndon(&t, v);
        let sa9 = sa.as_slice()[8];
        let la5 = la.as_slice()[4];
        if sa9 != 5 || la5 != 2 {
            pass = false;
            detail = format!("{v}: SA[9]={sa9}, LA[5]={la5}");
        }
    }
    if pass {
        detail = "SA[9]=5 and LA[5]=2 for all variants".to_string();
    }
    record(results, 3, "paper anchor banaananaanana$", pass, detail);
}

fn criterion_lemma3(results: &mut Vec<Outcome>, failures: usize, extra_inputs: usize) {
    // The sweeps of criteria 1 and 2 already checked the shape on every
    // input; a few structured inputs are added here.
    let mut local_failures = 0usize;
    for t in [
        bbba_text(4096),
        aab_text(4096),
        text(b"banaananaanana"),
        text(b""),
    ] {
        let la = lynsa::lyndon_array(&t, LyndonVariant::Inplace);
        if !lemma3_holds(&t, &la) {
            local_failures += 1;
        }
    }
    let total = failures + local_failures;
    record(
        results,
        4,
        "LA[i]=1 iff L-type or sentinel",
        total == 0,
        format!("checked on all sweep inputs + {extra_inputs} structured inputs, {total} violations"),
    );
}

fn criterion_stack_contrast(results: &mut Vec<Outcome>) {
    let n = 1_000_000usize;
    let t = bbba_text(n - 1); // text length including sentinel is 10^6
    assert_eq!(t.len(), n);

    let sa = sort_suffixes(&t);
    let isa = isa_from_sa(&sa).expect("sacak output");
    let stack_depth = nsv(isa.as_slice()).max_stack_depth;
    let stack_ok = stack_depth + 2 >= n;

    let mut sa_buf = vec![0 as Index; n];
    let mut la_buf = vec![0 as Index; n];
    let (_, inplace_words) = measure_extra_words(|| {
        lyndon_into(&t, LyndonVariant::Inplace, &mut sa_buf, &mut la_buf)
    });
    let inplace_ok = inplace_words <= 256 + 64;

    let (_, sort_words) = measure_extra_words(|| sort_into(&t, &mut sa_buf));
    let sort_ok = (256..=256 + 64).contains(&sort_words);

    record(
        results,
        5,
        "stack contrast on bbba 10^6",
        stack_ok && inplace_ok && sort_ok,
        format!(
            "nsv stack depth {stack_depth}/{n}, inplace extra {inplace_words} words, \
             plain sort extra {sort_words} words"
        ),
    );
}

fn criterion_workspace_ladder(results: &mut Vec<Outcome>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1_ab1e);
    let t = rand_text(&mut rng, 16, 1 << 20); // 1 MiB
    let n = t.len();
    let slack = 1024usize;
    let mut sa_buf = vec![0 as Index; n];
    let mut la_buf = vec![0 as Index; n];

    let mut measured = Vec::new();
    for v in LyndonVariant::ALL {
        let (_, words) =
            measure_extra_words(|| lyndon_into(&t, v, &mut sa_buf, &mut la_buf));
        measured.push((v, words));
    }
    let expect = |v: LyndonVariant| match v {
        LyndonVariant::Naive | LyndonVariant::Inplace => 256,
        LyndonVariant::SingleAux => n + 256,
        LyndonVariant::NextPrev => 2 * n + 256,
    };
    let pass = measured
        .iter()
        .all(|&(v, words)| words >= expect(v) && words <= expect(v) + slack);
    let detail = measured
        .iter()
        .map(|&(v, w)| format!("{v}={w}"))
        .collect::<Vec<_>>()
        .join(", ");
    record(
        results,
        6,
        "workspace ladder on 1 MiB sigma=16",
        pass,
        format!("{detail} (n={n}, slack {slack})"),
    );
}

fn criterion_linearity(results: &mut Vec<Outcome>) {
    let series_start = Instant::now();
    let mut per_byte = Vec::new();
    for (k, exp) in (16..=22).enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xd0b1 + k as u64);
        let t = rand_text(&mut rng, 4, 1usize << exp);
        let n = t.len();
        let mut sa_buf = vec![0 as Index; n];
        let mut la_buf = vec![0 as Index; n];
        let secs = best_secs(3, || {
            lyndon_into(&t, LyndonVariant::Inplace, &mut sa_buf, &mut la_buf)
        });
        per_byte.push(secs / n as f64);
    }
    let total = series_start.elapsed();
    let ratio = per_byte.last().unwrap() / per_byte.first().unwrap();
    let pass = ratio <= 2.5 && total < Duration::from_secs(120);
    record(
        results,
        7,
        "linearity over doubling series",
        pass,
        format!(
            "time/n ratio 2^22 vs 2^16 = {ratio:.2} (limit 2.5), series took {:.1}s",
            total.as_secs_f64()
        ),
    );
}

fn criterion_naive_degradation(results: &mut Vec<Outcome>) {
    let sizes = [1usize << 13, 1 << 14, 1 << 15, 1 << 16];
    let mut naive_pb = Vec::new();
    let mut nextprev_pb = Vec::new();
    for &len in &sizes {
        let t = aab_text(len);
        let n = t.len();
        let mut sa_buf = vec![0 as Index; n];
        let mut la_buf = vec![0 as Index; n];
        let naive = best_secs(5, || {
            lyndon_into(&t, LyndonVariant::Naive, &mut sa_buf, &mut la_buf)
        });
        let nextprev = best_secs(5, || {
            lyndon_into(&t, LyndonVariant::NextPrev, &mut sa_buf, &mut la_buf)
        });
        naive_pb.push(naive / n as f64);
        nextprev_pb.push(nextprev / n as f64);
    }
    let naive_growth = naive_pb.last().unwrap() / naive_pb.first().unwrap();
    let nextprev_growth = nextprev_pb.last().unwrap() / nextprev_pb.first().unwrap();
    let pass = naive_growth >= 2.0 && nextprev_growth <= 2.5 && naive_growth > nextprev_growth;
    record(
        results,
        8,
        "naive degradation on high-avelyn text",
        pass,
        format!(
            "time/n growth over 8x sizes: naive {naive_growth:.1}x, nextprev {nextprev_growth:.2}x"
        ),
    );
}

#[test]
fn acceptance_criteria() {
    let mut results = Vec::new();

    let lemma3_a = criterion_exhaustive(&mut results);
    let lemma3_b = criterion_randomized(&mut results);
    criterion_paper_anchor(&mut results);
    criterion_lemma3(&mut results, lemma3_a + lemma3_b, 4);
    criterion_stack_contrast(&mut results);
    criterion_workspace_ladder(&mut results);
    criterion_linearity(&mut results);
    criterion_naive_degradation(&mut results);

    results.sort_by_key(|r| r.id);
    println!();
    for r in &results {
        println!(
            "criterion {}: {} - {} ({})",
            r.id,
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.pass).collect();
    assert!(
        failed.is_empty(),
        "{} acceptance criteria failed",
        failed.len()
    );
}
