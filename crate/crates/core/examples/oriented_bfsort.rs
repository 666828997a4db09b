//! Oriented comparators: bfsort sorts ascending or descending using
//! half-cleaners only.
//!
//!     cargo run -p sortnet --example oriented_bfsort

use sortnet::bitonic::bfsort;
use sortnet::cli::render_text;

fn main() -> sortnet::Result<()> {
    let input = [5, 2, 7, 1, 8, 3, 6, 4];
    let up = bfsort(false, 3)?;
    let down = bfsort(true, 3)?;
    println!("ascending:  {:?}", up.apply(&input)?);
    println!("descending: {:?}", down.apply(&input)?);
    print!("{}", render_text(&up));
    Ok(())
}
