//! Cross-module integration checks at sizes beyond the unit tests.

use lynsa::oracles::{isa_from_sa, la_from_nsv};
use lynsa::types::Text;
use lynsa::{sort_suffixes, suffix_and_lyndon, LyndonVariant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rand_text(seed: u64, sigma: u8, len: usize) -> Text {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw: Vec<u8> = (0..len).map(|_| rng.random_range(1..=sigma)).collect();
    Text::from_bytes(&raw).unwrap()
}

// The next-smaller-value route over the inverse suffix array agrees with
// every in-induction variant on a 10^5-symbol random text.
#[test]
fn eq1_route_agrees_at_scale() {
    let t = rand_text(0xfeed, 16, 100_000);
    let sa = sort_suffixes(&t);
    let reference = la_from_nsv(&isa_from_sa(&sa).unwrap());
    for v in LyndonVariant::ALL {
        let (vsa, vla) = suffix_and_lyndon(&t, v);
        assert_eq!(vsa, sa, "{v}");
        assert_eq!(vla, reference, "{v}");
    }
}

// Highly repetitive input drives the recursion deep; the reduced string
// keeps halving instead of bottoming out early.
#[test]
fn deeply_repetitive_input() {
    let mut prev = b"b".to_vec();
    let mut cur = b"a".to_vec();
    while cur.len() < 200_000 {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = std::mem::replace(&mut cur, next);
    }
    cur.truncate(200_000);
    let t = Text::from_bytes(&cur).unwrap();
    let (sa, la) = suffix_and_lyndon(&t, LyndonVariant::Inplace);
    let reference = la_from_nsv(&isa_from_sa(&sa).unwrap());
    assert_eq!(la, reference);
}

// Construction is a pure function of the text; independent inputs can be
// processed from many threads at once.
#[test]
fn parallel_runs_are_independent() {
    let handles: Vec<_> = (0..8u64)
        .map(|seed| {
            std::thread::spawn(move || {
                let t = rand_text(seed, 4, 20_000);
                let (sa, la) = suffix_and_lyndon(&t, LyndonVariant::Inplace);
                let reference = la_from_nsv(&isa_from_sa(&sa).unwrap());
                assert_eq!(la, reference);
                (seed, sa.as_slice()[0])
            })
        })
        .collect();
    for handle in handles {
        let (_, first) = handle.join().unwrap();
        assert_eq!(first as usize, 20_001); // sentinel position leads every SA
    }
}
