//! Runs integers, strings and booleans through a Batcher network.
//!
//!     cargo run -p sortnet --example apply_network

use sortnet::batcher::batcher;
use sortnet::tmap;

fn main() -> sortnet::Result<()> {
    let net = batcher(3)?;

    let ints = [42, -7, 19, 0, 3, 3, 100, -50];
    println!("{ints:?} -> {:?}", net.apply(&ints)?);

    let words = [
        "pear", "fig", "apple", "kiwi", "date", "plum", "lime", "cherry",
    ];
    println!("{words:?} -> {:?}", net.apply(&words)?);

    let bits = [true, false, true, true, false, false, true, false];
    println!("{bits:?} -> {:?}", net.apply(&bits)?);

    // Monotone maps commute with the network.
    let doubled = tmap(|x: &i32| 2 * x, &ints);
    assert_eq!(
        net.apply(&doubled)?,
        tmap(|x: &i32| 2 * x, &net.apply(&ints)?)
    );
    println!("tmap(2x) commutes with the network");
    Ok(())
}
