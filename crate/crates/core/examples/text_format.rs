//! Renders a network to the text format, parses it back, and shows the
//! errors reported for malformed files.
//!
//!     cargo run -p sortnet --example text_format

use sortnet::cli::{parse_text, render_text};
use sortnet::Algorithm;

fn main() -> sortnet::Result<()> {
    let net = Algorithm::Knuth.build(2, false)?;
    let text = render_text(&net);
    print!("{text}");
    assert_eq!(parse_text(&text)?, net);

    for bad in [
        "snet 1 4\nlayer: 0-1 1-2\n",
        "snet 1 4\nlayer: 0-9\n",
        "net 4\n",
    ] {
        println!("{:?}: {}", bad, parse_text(bad).unwrap_err());
    }
    Ok(())
}
