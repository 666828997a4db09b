//! Writes Knuth-style diagrams of the 8-line sorters to the system temp
//! directory, or to the directory given as the first argument.
//!
//!     cargo run -p sortnet --example render_svg -- /tmp/diagrams

use std::path::PathBuf;

use sortnet::cli::render_svg;
use sortnet::Algorithm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    for algo in Algorithm::ALL {
        let path = dir.join(format!("{algo}-3.svg"));
        std::fs::write(&path, render_svg(&algo.build(3, false)?))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
