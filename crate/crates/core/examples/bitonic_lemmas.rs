//! Bitonic sequences: the predicate, the boolean decomposition, and the
//! half-cleaner's effect on them.
//!
//!     cargo run -p sortnet --example bitonic_lemmas

use sortnet::bitonic::{bitonic_bool_decomp, half_cleaner, is_bitonic};
use sortnet::verify::bool_tuples;

fn show(s: &[bool]) -> String {
    s.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn main() {
    for s in [
        vec![false, false, true, true, false],
        vec![true, false, true, false],
        vec![true, true, true],
    ] {
        println!(
            "{}: bitonic={} decomposition={:?}",
            show(&s),
            is_bitonic(&s),
            bitonic_bool_decomp(&s)
        );
    }

    let m = 4;
    let hc = half_cleaner(m, false);
    let bitonic: Vec<_> = bool_tuples(2 * m).filter(|t| is_bitonic(t)).collect();
    println!(
        "{} bitonic tuples on {} lines; a few through the half-cleaner:",
        bitonic.len(),
        2 * m
    );
    for t in bitonic.iter().step_by(17) {
        let out = hc.apply(t).unwrap();
        println!("  {} -> {} | {}", show(t), show(&out[..m]), show(&out[m..]));
    }
}
