//! Synthetic input generators, selected as `KIND:SIZE[:SEED]`.
//!
//! `bbba:k` is k-1 copies of `b` followed by one `a` (the worst case for
//! stack-based next-smaller-value scans), `fib:k` the length-k prefix of
//! the Fibonacci word, `aab:k` is k-1 copies of `a` followed by one `b`
//! (average Lyndon factor length about k/2, the worst case for the naive
//! strategy), and `rand<S>:k` is k symbols drawn uniformly from an
//! alphabet of size S, deterministically seeded.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Bbba,
    Fib,
    Aab,
    Rand(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub size: usize,
    pub seed: u64,
}

impl std::str::FromStr for GenSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let kind_str = parts.next().unwrap_or("");
        let kind = match kind_str {
            "bbba" => GenKind::Bbba,
            "fib" => GenKind::Fib,
            "aab" => GenKind::Aab,
            _ => match kind_str.strip_prefix("rand") {
                Some(digits) => {
                    let sigma: u16 = digits
                        .parse()
                        .map_err(|_| format!("bad generator spec `{s}`: expected rand<SIGMA>"))?;
                    if !(2..=255).contains(&sigma) {
                        return Err(format!(
                            "bad generator spec `{s}`: alphabet size must be in 2..=255"
                        ));
                    }
                    GenKind::Rand(sigma as u8)
                }
                None => {
                    return Err(format!(
                        "bad generator spec `{s}`: kind must be bbba, fib, aab or rand<SIGMA>"
                    ))
                }
            },
        };
        let size: usize = parts
            .next()
            .ok_or_else(|| format!("bad generator spec `{s}`: missing size"))?
            .parse()
            .map_err(|_| format!("bad generator spec `{s}`: size is not a number"))?;
        if size == 0 {
            return Err(format!("bad generator spec `{s}`: size must be at least 1"));
        }
        let seed: u64 = match parts.next() {
            Some(v) => v
                .parse()
                .map_err(|_| format!("bad generator spec `{s}`: seed is not a number"))?,
            None => 0,
        };
        if parts.next().is_some() {
            return Err(format!("bad generator spec `{s}`: too many fields"));
        }
        Ok(GenSpec { kind, size, seed })
    }
}

/// Produces the raw symbols (without sentinel).
pub fn generate(spec: &GenSpec) -> Vec<u8> {
    match spec.kind {
        GenKind::Bbba => {
            let mut raw = vec![b'b'; spec.size];
            raw[spec.size - 1] = b'a';
            raw
        }
        GenKind::Aab => {
            let mut raw = vec![b'a'; spec.size];
            raw[spec.size - 1] = b'b';
            raw
        }
        GenKind::Fib => {
            // s1 = "b", s2 = "a", s_k = s_{k-1} s_{k-2}; grown to at
            // least the requested size, then cut.
            let mut prev = b"b".to_vec();
            let mut cur = b"a".to_vec();
            while cur.len() < spec.size {
                let next = [cur.as_slice(), prev.as_slice()].concat();
                prev = std::mem::replace(&mut cur, next);
            }
            cur.truncate(spec.size);
            cur
        }
        GenKind::Rand(sigma) => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            (0..spec.size).map(|_| rng.random_range(1..=sigma)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!(
            "bbba:100".parse::<GenSpec>().unwrap(),
            GenSpec {
                kind: GenKind::Bbba,
                size: 100,
                seed: 0
            }
        );
        assert_eq!(
            "rand16:4096:42".parse::<GenSpec>().unwrap(),
            GenSpec {
                kind: GenKind::Rand(16),
                size: 4096,
                seed: 42
            }
        );
        assert!("rand1:10".parse::<GenSpec>().is_err());
        assert!("rand300:10".parse::<GenSpec>().is_err());
        assert!("bbba".parse::<GenSpec>().is_err());
        assert!("bbba:0".parse::<GenSpec>().is_err());
        assert!("nope:5".parse::<GenSpec>().is_err());
        assert!("fib:5:1:2".parse::<GenSpec>().is_err());
    }

    #[test]
    fn bbba_shape() {
        let raw = generate(&"bbba:5".parse().unwrap());
        assert_eq!(raw, b"bbbba");
    }

    #[test]
    fn fib_prefix() {
        // s5 = "abaab", s6 = "abaababa", ...
        let raw = generate(&"fib:8".parse().unwrap());
        assert_eq!(raw, b"abaababa");
        let raw = generate(&"fib:1".parse().unwrap());
        assert_eq!(raw, b"a");
    }

    #[test]
    fn rand_is_seed_deterministic() {
        let a = generate(&"rand4:128:7".parse().unwrap());
        let b = generate(&"rand4:128:7".parse().unwrap());
        let c = generate(&"rand4:128:8".parse().unwrap());
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().all(|&x| (1..=4).contains(&x)));
    }
}
