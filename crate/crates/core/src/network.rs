//! Connectors, networks and how they act on tuples.

use std::collections::HashSet;

use crate::{Error, Result};

/// One parallel layer of comparators.
///
/// `link[i]` is the partner of line `i` (`link[i] == i` leaves the line
/// unconnected) and `flip[i]` reverses the orientation of the comparator on
/// line `i`. The link is always an involution and flips agree across a pair;
/// every constructor checks both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Connector {
    link: Vec<usize>,
    flip: Vec<bool>,
}

impl Connector {
    /// Builds a connector from disjoint `(low, high, flipped)` pairs.
    /// Pairs given as `(high, low)` are accepted and normalised.
    pub fn new(width: usize, pairs: &[(usize, usize, bool)]) -> Result<Self> {
        let mut link: Vec<usize> = (0..width).collect();
        let mut flip = vec![false; width];
        let mut used = HashSet::with_capacity(pairs.len() * 2);
        for &(a, b, flipped) in pairs {
            for index in [a, b] {
                if index >= width {
                    return Err(Error::IndexOutOfRange { index, width });
                }
            }
            if a == b {
                return Err(Error::DegeneratePair(a));
            }
            for index in [a, b] {
                if !used.insert(index) {
                    return Err(Error::DuplicateLine(index));
                }
            }
            link[a] = b;
            link[b] = a;
            flip[a] = flipped;
            flip[b] = flipped;
        }
        Ok(Connector { link, flip })
    }

    /// Builds a connector from an explicit link map and flip vector,
    /// rejecting anything that is not an involution with symmetric flips.
    pub fn from_link(link: Vec<usize>, flip: Vec<bool>) -> Result<Self> {
        let width = link.len();
        if flip.len() != width {
            return Err(Error::WidthMismatch {
                expected: width,
                found: flip.len(),
            });
        }
        for (i, &j) in link.iter().enumerate() {
            if j >= width {
                return Err(Error::IndexOutOfRange { index: j, width });
            }
            if link[j] != i {
                return Err(Error::NotInvolution(i));
            }
            if flip[j] != flip[i] {
                return Err(Error::FlipAsymmetry(i));
            }
        }
        Ok(Connector { link, flip })
    }

    /// The connector that leaves every line alone.
    pub fn identity(width: usize) -> Self {
        Connector {
            link: (0..width).collect(),
            flip: vec![false; width],
        }
    }

    pub fn width(&self) -> usize {
        self.link.len()
    }

    /// Partner of line `i`.
    pub fn link(&self, i: usize) -> usize {
        self.link[i]
    }

    pub fn links(&self) -> &[usize] {
        &self.link
    }

    pub fn is_flipped(&self, i: usize) -> bool {
        self.flip[i]
    }

    pub fn flips(&self) -> &[bool] {
        &self.flip
    }

    /// Same links, every flip bit set to `flip`.
    pub fn with_flip(mut self, flip: bool) -> Self {
        self.flip.iter_mut().for_each(|f| *f = flip);
        self
    }

    /// Comparators as `(low, high, flipped)` in ascending `low` order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        self.link
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j, self.flip[i]))
    }

    pub fn comparators(&self) -> usize {
        self.pairs().count()
    }

    pub fn is_identity(&self) -> bool {
        self.link.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Applies the layer. The lower line of an unflipped pair receives the
    /// minimum and the upper line the maximum; a flipped pair does the
    /// opposite. Unconnected lines pass through.
    pub fn apply<T: Ord + Clone>(&self, t: &[T]) -> Result<Vec<T>> {
        if t.len() != self.width() {
            return Err(Error::WidthMismatch {
                expected: self.width(),
                found: t.len(),
            });
        }
        Ok(self.apply_unchecked(t))
    }

    fn apply_unchecked<T: Ord + Clone>(&self, t: &[T]) -> Vec<T> {
        self.link
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let (a, b) = (&t[i], &t[j]);
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                let take_min = (i <= j) != self.flip[i];
                if take_min {
                    lo.clone()
                } else {
                    hi.clone()
                }
            })
            .collect()
    }
}

/// An ordered sequence of connectors over `width` lines.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Network {
    width: usize,
    layers: Vec<Connector>,
}

impl Network {
    pub fn empty(width: usize) -> Self {
        Network {
            width,
            layers: Vec::new(),
        }
    }

    pub fn from_layers(width: usize, layers: Vec<Connector>) -> Result<Self> {
        if let Some(bad) = layers.iter().find(|c| c.width() != width) {
            return Err(Error::WidthMismatch {
                expected: width,
                found: bad.width(),
            });
        }
        Ok(Network { width, layers })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of layers.
    pub fn size(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn layers(&self) -> &[Connector] {
        &self.layers
    }

    pub fn into_layers(self) -> Vec<Connector> {
        self.layers
    }

    /// Total comparator count over all layers.
    pub fn comparators(&self) -> usize {
        self.layers.iter().map(Connector::comparators).sum()
    }

    pub fn push(&mut self, layer: Connector) -> Result<()> {
        if layer.width() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: layer.width(),
            });
        }
        self.layers.push(layer);
        Ok(())
    }

    /// Appends the layers of `other` after those of `self`.
    pub fn append(&mut self, other: Network) -> Result<()> {
        if other.width != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        self.layers.extend(other.layers);
        Ok(())
    }

    /// Runs `t` through every layer in order.
    pub fn apply<T: Ord + Clone>(&self, t: &[T]) -> Result<Vec<T>> {
        if t.len() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: t.len(),
            });
        }
        Ok(self
            .layers
            .iter()
            .fold(t.to_vec(), |acc, c| c.apply_unchecked(&acc)))
    }
}

/// Elementwise image of a tuple. Networks commute with `tmap` whenever `f`
/// is monotone.
pub fn tmap<A, B, F>(f: F, t: &[A]) -> Vec<B>
where
    F: Fn(&A) -> B,
{
    t.iter().map(f).collect()
}
