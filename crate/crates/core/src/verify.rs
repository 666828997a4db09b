//! Deciding whether a network sorts.
//!
//! [`check_sorting_exhaustive`] runs all `2^width` boolean inputs through the
//! network; by the zero-one principle this settles the question for every
//! totally ordered domain. [`check_sorting_oracle`] is the empirical
//! counterpart over integers, for widths too large to enumerate.

use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{Connector, Error, Network, Result};

/// Widest network [`check_sorting_exhaustive`] will enumerate.
pub const ENUMERATION_LIMIT: usize = 24;

/// Widest network for which the oracle also tries every permutation.
pub const PERMUTATION_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Ascending,
    Descending,
}

/// Every adjacent pair respects `order`.
pub fn is_sorted<T: Ord>(s: &[T], order: Order) -> bool {
    s.windows(2).all(|w| match order {
        Order::Ascending => w[0] <= w[1],
        Order::Descending => w[0] >= w[1],
    })
}

/// Multiset equality.
pub fn is_perm_of<T: Ord + Clone>(s1: &[T], s2: &[T]) -> bool {
    if s1.len() != s2.len() {
        return false;
    }
    let (mut a, mut b) = (s1.to_vec(), s2.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// All boolean tuples of the given width in lexicographic order
/// (`false < true`, line 0 most significant).
pub fn bool_tuples(width: usize) -> impl Iterator<Item = Vec<bool>> {
    assert!(width < 64, "cannot enumerate 2^{width} tuples");
    (0..1u64 << width).map(move |code| decode(code, width))
}

fn decode(code: u64, width: usize) -> Vec<bool> {
    (0..width)
        .map(|i| code >> (width - 1 - i) & 1 == 1)
        .collect()
}

/// A tuple stored in a report.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Values {
    Bool(Vec<bool>),
    Int(Vec<i64>),
}

impl fmt::Display for Values {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Values::Bool(v) => write!(f, "{}", v.iter().map(|&b| u8::from(b)).join(",")),
            Values::Int(v) => write!(f, "{}", v.iter().join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sorting,
    Counterexample { input: Values, output: Values },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, trials: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub width: usize,
    pub inputs_checked: u64,
    pub outcome: Outcome,
    pub mode: Mode,
}

impl VerificationReport {
    pub fn is_sorting(&self) -> bool {
        self.outcome == Outcome::Sorting
    }

    /// Re-runs a stored counterexample and confirms the stored output, which
    /// must be unsorted. Always true for a `Sorting` report.
    pub fn reproduces(&self, network: &Network) -> bool {
        match &self.outcome {
            Outcome::Sorting => true,
            Outcome::Counterexample { input, output } => match (input, output) {
                (Values::Bool(i), Values::Bool(o)) => {
                    network.apply(i).ok().as_ref() == Some(o) && !is_sorted(o, Order::Ascending)
                }
                (Values::Int(i), Values::Int(o)) => {
                    network.apply(i).ok().as_ref() == Some(o) && !is_sorted(o, Order::Ascending)
                }
                _ => false,
            },
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Exhaustive => "exhaustive".to_string(),
            Mode::Sampled { seed, trials } => format!("oracle, {trials} trials, seed {seed}"),
        };
        match &self.outcome {
            Outcome::Sorting => write!(
                f,
                "sorting: width {}, {} inputs checked ({mode})",
                self.width, self.inputs_checked
            ),
            Outcome::Counterexample { input, output } => write!(
                f,
                "counterexample: input {input} -> output {output} (width {}, {} inputs checked, {mode})",
                self.width, self.inputs_checked
            ),
        }
    }
}

/// A network lowered to per-layer comparator lists acting on bitmasks,
/// bit `i` holding line `i`.
struct BitNetwork {
    layers: Vec<Vec<(u32, u32, bool)>>,
}

impl BitNetwork {
    fn new(n: &Network) -> Self {
        let layers = n
            .layers()
            .iter()
            .map(|c| {
                c.pairs()
                    .map(|(lo, hi, f)| (lo as u32, hi as u32, f))
                    .collect()
            })
            .collect();
        BitNetwork { layers }
    }

    fn eval(&self, mut x: u64) -> u64 {
        for layer in &self.layers {
            let mut y = x;
            for &(lo, hi, flipped) in layer {
                let a = x >> lo & 1;
                let b = x >> hi & 1;
                let (to_lo, to_hi) = if flipped {
                    (a | b, a & b)
                } else {
                    (a & b, a | b)
                };
                y = (y & !(1 << lo) & !(1 << hi)) | to_lo << lo | to_hi << hi;
            }
            x = y;
        }
        x
    }
}

/// Ascending boolean tuple as a mask: zero or a block of ones ending at the
/// top line.
fn mask_is_sorted(x: u64, width: usize) -> bool {
    x == 0 || x + (1 << x.trailing_zeros()) == 1 << width
}

fn code_to_mask(code: u64, width: usize) -> u64 {
    if width == 0 {
        0
    } else {
        code.reverse_bits() >> (64 - width)
    }
}

/// Decides the sorting property by enumerating every boolean input.
///
/// On failure the report carries the lexicographically smallest failing
/// input, independent of how the work was split across threads.
pub fn check_sorting_exhaustive(n: &Network) -> Result<VerificationReport> {
    let width = n.width();
    if width > ENUMERATION_LIMIT {
        return Err(Error::WidthTooLarge {
            width,
            limit: ENUMERATION_LIMIT,
        });
    }
    let bits = BitNetwork::new(n);
    let total = 1u64 << width;
    let first_bad = (0..total)
        .into_par_iter()
        .find_first(|&code| !mask_is_sorted(bits.eval(code_to_mask(code, width)), width));
    let report = match first_bad {
        None => VerificationReport {
            width,
            inputs_checked: total,
            outcome: Outcome::Sorting,
            mode: Mode::Exhaustive,
        },
        Some(code) => {
            let input = decode(code, width);
            let output = n.apply(&input)?;
            VerificationReport {
                width,
                inputs_checked: code + 1,
                outcome: Outcome::Counterexample {
                    input: Values::Bool(input),
                    output: Values::Bool(output),
                },
                mode: Mode::Exhaustive,
            }
        }
    };
    Ok(report)
}

/// Checks the network on integer tuples: every permutation of
/// `0..width` when `width <= PERMUTATION_LIMIT`, then `trials` seeded random
/// tuples. An input fails when its output is unsorted or not a permutation
/// of it.
pub fn check_sorting_oracle(n: &Network, trials: usize, seed: u64) -> VerificationReport {
    let width = n.width();
    let mode = Mode::Sampled { seed, trials };
    let perms = (width <= PERMUTATION_LIMIT)
        .then(|| (0..width as i64).permutations(width))
        .into_iter()
        .flatten();
    let span = 4 * width.max(1) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = (0..trials).map(move |_| {
        (0..width)
            .map(|_| rng.gen_range(-span..=span))
            .collect::<Vec<i64>>()
    });

    let mut checked = 0u64;
    for input in perms.chain(random) {
        checked += 1;
        let output = n.apply(&input).expect("tuple built at network width");
        if !is_sorted(&output, Order::Ascending) || !is_perm_of(&input, &output) {
            return VerificationReport {
                width,
                inputs_checked: checked,
                outcome: Outcome::Counterexample {
                    input: Values::Int(input),
                    output: Values::Int(output),
                },
                mode,
            };
        }
    }
    VerificationReport {
        width,
        inputs_checked: checked,
        outcome: Outcome::Sorting,
        mode,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetworkStats {
    pub layers: usize,
    pub comparators: usize,
}

pub fn network_stats(n: &Network) -> NetworkStats {
    NetworkStats {
        layers: n.size(),
        comparators: n.comparators(),
    }
}

/// A random connector: a uniformly shuffled set of lines paired off into a
/// random number of comparators, each flipped with `flip_probability`.
pub fn random_connector<R: Rng>(width: usize, flip_probability: f64, rng: &mut R) -> Connector {
    let mut lines: Vec<usize> = (0..width).collect();
    lines.shuffle(rng);
    let count = rng.gen_range(0..=width / 2);
    let pairs: Vec<_> = lines
        .chunks_exact(2)
        .take(count)
        .map(|p| (p[0], p[1], rng.gen_bool(flip_probability)))
        .collect();
    Connector::new(width, &pairs).expect("shuffled lines are disjoint")
}

pub fn random_network<R: Rng>(
    width: usize,
    layers: usize,
    flip_probability: f64,
    rng: &mut R,
) -> Network {
    let layers = (0..layers)
        .map(|_| random_connector(width, flip_probability, rng))
        .collect();
    Network::from_layers(width, layers).expect("layers built at network width")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::cswap;
    use crate::{batcher, bitonic};

    #[test]
    fn sortedness() {
        assert!(is_sorted(&[1, 2, 2, 5], Order::Ascending));
        assert!(is_sorted::<i32>(&[], Order::Ascending));
        assert!(!is_sorted(&[2, 1], Order::Ascending));
        assert!(is_sorted(&[2, 1], Order::Descending));
    }

    #[test]
    fn permutations() {
        assert!(is_perm_of(&[1, 2, 2], &[2, 1, 2]));
        assert!(!is_perm_of(&[1], &[1, 1]));
        assert!(is_perm_of::<i32>(&[], &[]));
        assert!(!is_perm_of(&[1, 2], &[1, 1]));
    }

    #[test]
    fn bool_tuples_are_lexicographic() {
        let all: Vec<_> = bool_tuples(2).collect();
        assert_eq!(
            all,
            vec![
                vec![false, false],
                vec![false, true],
                vec![true, false],
                vec![true, true]
            ]
        );
        assert_eq!(bool_tuples(0).collect::<Vec<_>>(), vec![Vec::<bool>::new()]);
    }

    #[test]
    fn mask_sortedness_matches_slices() {
        for width in 0..=10 {
            for code in 0..1u64 << width {
                let t = decode(code, width);
                let mask = code_to_mask(code, width);
                for (i, &b) in t.iter().enumerate() {
                    assert_eq!(mask >> i & 1 == 1, b);
                }
                assert_eq!(mask_is_sorted(mask, width), is_sorted(&t, Order::Ascending));
            }
        }
    }

    #[test]
    fn bitmask_evaluation_matches_apply() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for width in 1..=8 {
            for _ in 0..20 {
                let n = random_network(width, 6, 0.3, &mut rng);
                let bits = BitNetwork::new(&n);
                for code in 0..1u64 << width {
                    let t = decode(code, width);
                    let out = n.apply(&t).unwrap();
                    let mask = bits.eval(code_to_mask(code, width));
                    let expected: Vec<bool> = (0..width).map(|i| mask >> i & 1 == 1).collect();
                    assert_eq!(out, expected);
                }
            }
        }
    }

    #[test]
    fn exhaustive_examples() {
        let r = check_sorting_exhaustive(&Network::empty(2)).unwrap();
        assert_eq!(
            r.outcome,
            Outcome::Counterexample {
                input: Values::Bool(vec![true, false]),
                output: Values::Bool(vec![true, false]),
            }
        );
        assert!(r.reproduces(&Network::empty(2)));

        let swap = Network::from_layers(2, vec![cswap(0, 1, 2).unwrap()]).unwrap();
        let r = check_sorting_exhaustive(&swap).unwrap();
        assert!(r.is_sorting());
        assert_eq!(r.inputs_checked, 4);

        let r = check_sorting_exhaustive(&bitonic::bsort(3).unwrap()).unwrap();
        assert!(r.is_sorting());
        assert_eq!(r.inputs_checked, 256);

        assert!(check_sorting_exhaustive(&Network::empty(0))
            .unwrap()
            .is_sorting());
        assert_eq!(
            check_sorting_exhaustive(&Network::empty(25)),
            Err(Error::WidthTooLarge {
                width: 25,
                limit: 24
            })
        );
    }

    #[test]
    fn oracle_examples() {
        let r = check_sorting_oracle(&batcher::batcher(2).unwrap(), 0, 0);
        assert!(r.is_sorting());
        assert_eq!(r.inputs_checked, 24);

        let id = Network::empty(3);
        let r = check_sorting_oracle(&id, 0, 0);
        assert_eq!(
            r.outcome,
            Outcome::Counterexample {
                input: Values::Int(vec![0, 2, 1]),
                output: Values::Int(vec![0, 2, 1]),
            }
        );
        assert!(r.reproduces(&id));

        let r = check_sorting_oracle(&Network::empty(9), 0, 3);
        assert!(r.is_sorting());
        assert_eq!(r.inputs_checked, 0);
    }

    #[test]
    fn oracle_is_deterministic() {
        let n = Network::empty(12);
        assert_eq!(
            check_sorting_oracle(&n, 50, 11),
            check_sorting_oracle(&n, 50, 11)
        );
        let k = crate::knuth::knuth_exchange(5).unwrap();
        let r = check_sorting_oracle(&k, 200, 1);
        assert!(r.is_sorting());
        assert_eq!(r.inputs_checked, 200);
    }

    #[test]
    fn stats() {
        let s = network_stats(&bitonic::bsort(3).unwrap());
        assert_eq!(
            s,
            NetworkStats {
                layers: 6,
                comparators: 24
            }
        );
        assert_eq!(
            network_stats(&Network::empty(4)),
            NetworkStats {
                layers: 0,
                comparators: 0
            }
        );
    }

    #[test]
    fn random_connectors_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for width in 0..=16 {
            for _ in 0..50 {
                let c = random_connector(width, 0.5, &mut rng);
                for i in 0..width {
                    assert_eq!(c.link(c.link(i)), i);
                    assert_eq!(c.is_flipped(c.link(i)), c.is_flipped(i));
                }
            }
        }
    }
}
