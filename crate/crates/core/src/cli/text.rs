//! Plain-text network files.
//!
//! ```text
//! snet 1 4
//! layer: 0-1 2-3
//! layer: 0-3! 1-2!
//! ```
//!
//! The header gives the format version and the line count. Each `layer:`
//! line is one connector, listing its comparators in ascending order of the
//! lower line; `!` marks a flipped comparator. A `layer:` line with no pairs
//! is an identity layer.

use std::fmt::Write;

use crate::{Connector, Error, Network, Result};

const MAGIC: &str = "snet";
const VERSION: &str = "1";

pub fn render_text(n: &Network) -> String {
    let mut out = format!("{MAGIC} {VERSION} {}\n", n.width());
    for layer in n.layers() {
        out.push_str("layer:");
        for (lo, hi, flipped) in layer.pairs() {
            write!(out, " {lo}-{hi}{}", if flipped { "!" } else { "" }).unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(token: &str, line: usize) -> Result<(usize, usize, bool)> {
    let (body, flipped) = match token.strip_suffix('!') {
        Some(body) => (body, true),
        None => (token, false),
    };
    let (lo, hi) = body
        .split_once('-')
        .ok_or_else(|| parse_error(line, format!("expected `<low>-<high>`, found `{token}`")))?;
    let index = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_error(line, format!("bad line index `{s}` in `{token}`")))
    };
    let (lo, hi) = (index(lo)?, index(hi)?);
    if lo > hi {
        return Err(parse_error(
            line,
            format!("pair `{token}` must list the lower line first"),
        ));
    }
    Ok((lo, hi, flipped))
}

/// Parses a network file. Blank lines are ignored; anything else that is
/// not a well-formed header or layer is rejected with its line number.
pub fn parse_text(src: &str) -> Result<Network> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let width = match fields.as_slice() {
        [MAGIC, VERSION, w] => w
            .parse::<usize>()
            .map_err(|_| parse_error(header_line, format!("bad width `{w}`")))?,
        [MAGIC, v, _] => {
            return Err(parse_error(
                header_line,
                format!("unsupported version `{v}`"),
            ))
        }
        _ => {
            return Err(parse_error(
                header_line,
                format!("expected header `{MAGIC} {VERSION} <width>`"),
            ))
        }
    };

    let mut layers = Vec::new();
    for (line, text) in lines {
        let rest = text
            .strip_prefix("layer:")
            .ok_or_else(|| parse_error(line, "expected `layer:`"))?;
        let pairs = rest
            .split_whitespace()
            .map(|tok| parse_pair(tok, line))
            .collect::<Result<Vec<_>>>()?;
        let connector =
            Connector::new(width, &pairs).map_err(|e| parse_error(line, e.to_string()))?;
        layers.push(connector);
    }
    Network::from_layers(width, layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitonic::{bfsort, bsort};
    use proptest::prelude::*;

    #[test]
    fn render_examples() {
        assert_eq!(render_text(&bsort(1).unwrap()), "snet 1 2\nlayer: 0-1\n");
        assert_eq!(render_text(&Network::empty(4)), "snet 1 4\n");
        assert_eq!(
            render_text(&bfsort(true, 1).unwrap()),
            "snet 1 2\nlayer: 0-1!\n"
        );
        let id = Network::from_layers(3, vec![Connector::identity(3)]).unwrap();
        assert_eq!(render_text(&id), "snet 1 3\nlayer:\n");
    }

    #[test]
    fn parse_accepts_rendered_form() {
        let n = parse_text("snet 1 4\nlayer: 0-3! 1-2!\n\nlayer:\n").unwrap();
        assert_eq!(n.width(), 4);
        assert_eq!(n.size(), 2);
        assert!(n.layers()[0].is_flipped(0));
        assert!(n.layers()[1].is_identity());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("net 1 4\n", 1),
            ("snet 2 4\n", 1),
            ("snet 1 x\n", 1),
            ("snet 1 4\nlayer: 0-1\nlayer: 0-4\n", 3),
            ("snet 1 4\nlayer: 0-1 1-2\n", 2),
            ("snet 1 4\nlayer: 2-2\n", 2),
            ("snet 1 4\nlayer: 2-1\n", 2),
            ("snet 1 4\nlayer: 0_1\n", 2),
            ("snet 1 4\nlayer: a-1\n", 2),
            ("snet 1 4\nlayer: 0-1\nstage: 0-1\n", 3),
        ];
        for (src, line) in cases {
            match parse_text(src) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{src:?}"),
                other => panic!("{src:?} gave {other:?}"),
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip(
            width in 1usize..10,
            seed in any::<u64>(),
            layers in 0usize..6,
        ) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = crate::verify::random_network(width, layers, 0.4, &mut rng);
            prop_assert_eq!(parse_text(&render_text(&n)).unwrap(), n);
        }
    }
}
