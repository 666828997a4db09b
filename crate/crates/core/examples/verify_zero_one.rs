//! Exhaustive boolean verification, the integer oracle, and a broken network
//! with its counterexample.
//!
//!     cargo run -p sortnet --example verify_zero_one

use sortnet::verify::{check_sorting_exhaustive, check_sorting_oracle};
use sortnet::{Algorithm, Network};

fn main() -> sortnet::Result<()> {
    for algo in Algorithm::ALL {
        for m in 1..=4 {
            let report = check_sorting_exhaustive(&algo.build(m, false)?)?;
            println!("{algo} {m}: {report}");
        }
    }

    let wide = Algorithm::Knuth.build(5, false)?;
    println!("knuth 5: {}", check_sorting_oracle(&wide, 1000, 7));

    // Drop the last layer of bsort 3: no longer a sorter.
    let full = Algorithm::Bsort.build(3, false)?;
    let mut layers = full.into_layers();
    layers.pop();
    let broken = Network::from_layers(8, layers)?;
    let report = check_sorting_exhaustive(&broken)?;
    println!("bsort 3 without its last layer: {report}");
    assert!(report.reproduces(&broken));
    Ok(())
}
