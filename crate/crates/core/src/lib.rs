//! Sorting networks built from layers of comparators.
//!
//! A [`Connector`] is one parallel layer: an involutive map pairing lines,
//! plus a per-line flip bit that reverses which line of a pair receives the
//! maximum. A [`Network`] is an ordered sequence of connectors over a fixed
//! number of lines.
//!
//! Three sorter families are provided, all on `2^m` lines:
//!
//! - [`bitonic::bsort`] and its oriented variant [`bitonic::bfsort`],
//! - [`knuth::knuth_exchange`],
//! - [`batcher::batcher`] (odd-even merge).
//!
//! Every sorter, and the intermediate building blocks, can be checked with
//! [`verify::check_sorting_exhaustive`], which decides the sorting property
//! by running every boolean input through the network.
//!
//! ```
//! use sortnet::{bitonic, verify};
//!
//! let net = bitonic::bsort(3).unwrap();
//! assert_eq!(net.size(), 6);
//! assert_eq!(net.apply(&[5, 1, 4, 1, 7, 0, 2, 9]).unwrap(), vec![0, 1, 1, 2, 4, 5, 7, 9]);
//! assert!(verify::check_sorting_exhaustive(&net).unwrap().is_sorting());
//! ```

pub mod batcher;
pub mod bitonic;
pub mod cli;
pub mod combinators;
mod error;
pub mod index;
pub mod knuth;
pub mod network;
pub mod verify;

pub use error::{Error, Result};
pub use network::{tmap, Connector, Network};

/// Largest exponent accepted by the `2^m`-wide generators.
pub const MAX_EXPONENT: u32 = 30;

/// The four sorter families, addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Bsort,
    Bfsort,
    Knuth,
    Batcher,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Bsort,
        Algorithm::Bfsort,
        Algorithm::Knuth,
        Algorithm::Batcher,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bsort => "bsort",
            Algorithm::Bfsort => "bfsort",
            Algorithm::Knuth => "knuth",
            Algorithm::Batcher => "batcher",
        }
    }

    /// Builds the sorter on `2^m` lines. `flip` only affects `bfsort`,
    /// where it selects descending output.
    pub fn build(self, m: u32, flip: bool) -> Result<Network> {
        match self {
            Algorithm::Bsort => bitonic::bsort(m),
            Algorithm::Bfsort => bitonic::bfsort(flip, m),
            Algorithm::Knuth => knuth::knuth_exchange(m),
            Algorithm::Batcher => batcher::batcher(m),
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Layer count shared by all four sorters on `2^m` lines: `m(m+1)/2`.
pub fn sorter_size(m: u32) -> usize {
    let m = m as usize;
    m * (m + 1) / 2
}
