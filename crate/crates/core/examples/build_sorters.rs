//! Builds each sorter family on 8 lines and prints its layers.
//!
//!     cargo run -p sortnet --example build_sorters

use sortnet::{sorter_size, Algorithm};

fn main() -> sortnet::Result<()> {
    for algo in Algorithm::ALL {
        let net = algo.build(3, false)?;
        println!(
            "{algo}: {} lines, {} layers (m(m+1)/2 = {}), {} comparators",
            net.width(),
            net.size(),
            sorter_size(3),
            net.comparators()
        );
        for (i, layer) in net.layers().iter().enumerate() {
            let pairs: Vec<String> = layer
                .pairs()
                .map(|(lo, hi, f)| format!("{lo}-{hi}{}", if f { "!" } else { "" }))
                .collect();
            println!("  layer {i}: {}", pairs.join(" "));
        }
    }
    Ok(())
}
