//! Tracks the false-count gap between even and odd lines through the final
//! layers of the Knuth exchange sorter.
//!
//!     cargo run -p sortnet --example knuth_lemmas

use sortnet::knuth::{ceswap, etake, knuth_jump_rec, no_f, otake};

fn main() -> sortnet::Result<()> {
    let width = 16;
    // Even and odd slices each sorted, with the even slice holding more falses.
    let t: Vec<bool> = (0..width)
        .map(|i| if i % 2 == 0 { i >= 12 } else { i >= 3 })
        .collect();
    let report = |label: &str, s: &[bool]| {
        let (e, o) = (etake(s), otake(s));
        println!("{label:>10}: noF(even)={} noF(odd)={}", no_f(&e), no_f(&o));
    };
    report("input", &t);
    let t = ceswap(width)?.apply(&t)?;
    report("eswap", &t);
    let jumps = knuth_jump_rec(width, 3, 7)?;
    let mut cur = t;
    for (i, layer) in jumps.layers().iter().enumerate() {
        cur = layer.apply(&cur)?;
        report(&format!("jump {i}"), &cur);
    }
    println!("sorted: {}", cur.windows(2).all(|w| w[0] <= w[1]));
    Ok(())
}
