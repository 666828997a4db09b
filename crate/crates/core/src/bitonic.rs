//! Bitonic sequences, half-cleaners and the bitonic sorters.

use crate::combinators::{ndup, nmerge};
use crate::index::{pow2_width, LineIndex};
use crate::verify::{is_sorted, Order};
use crate::{Connector, Network, Result};

/// Witness that a boolean sequence has the shape
/// `value^head ++ (!value)^middle ++ value^tail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitonicDecomposition {
    pub value: bool,
    pub head: usize,
    pub middle: usize,
    pub tail: usize,
}

impl BitonicDecomposition {
    pub fn len(&self) -> usize {
        self.head + self.middle + self.tail
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rebuilds the sequence this decomposition describes.
    pub fn to_vec(&self) -> Vec<bool> {
        let mut out = vec![self.value; self.head];
        out.extend(std::iter::repeat_n(!self.value, self.middle));
        out.extend(std::iter::repeat_n(self.value, self.tail));
        out
    }
}

/// True when some rotation of `s` is ascending up to a point and descending
/// after it. Decided by trying every rotation and every split point.
pub fn is_bitonic<T: Ord + Clone>(s: &[T]) -> bool {
    let len = s.len();
    (0..=len).any(|r| {
        let mut rotated = s[r..].to_vec();
        rotated.extend_from_slice(&s[..r]);
        (0..=len).any(|n| {
            is_sorted(&rotated[..n], Order::Ascending)
                && is_sorted(&rotated[n..], Order::Descending)
        })
    })
}

/// Finds a decomposition of a boolean sequence, if one exists.
///
/// The representative returned maximises `head`, then `middle`, preferring
/// `value == false` on ties, so a constant sequence reports everything in
/// `head`.
pub fn bitonic_bool_decomp(s: &[bool]) -> Option<BitonicDecomposition> {
    let len = s.len();
    for head in (0..=len).rev() {
        for middle in (0..=len - head).rev() {
            for value in [false, true] {
                let d = BitonicDecomposition {
                    value,
                    head,
                    middle,
                    tail: len - head - middle,
                };
                let matches = s.iter().enumerate().all(|(p, &x)| {
                    let inside = p >= head && p < head + middle;
                    x == (value != inside)
                });
                if matches {
                    return Some(d);
                }
            }
        }
    }
    None
}

/// Links line `i` to line `i + m` on `2m` lines, every comparator flipped
/// when `flip` is set.
pub fn half_cleaner(m: usize, flip: bool) -> Connector {
    let pairs: Vec<_> = (0..m).map(|i| (i, i + m, flip)).collect();
    Connector::new(2 * m, &pairs).expect("half-cleaner pairs are disjoint")
}

/// Links line `i` to line `width - 1 - i`.
pub fn rhalf_cleaner(width: usize) -> Connector {
    let link = (0..width)
        .map(|i| LineIndex::new(i, width).map(|ix| ix.rev().value()))
        .collect::<Result<Vec<_>>>()
        .expect("index below width");
    Connector::from_link(link, vec![false; width]).expect("reversal is an involution")
}

/// Half-cleaner on `2^m` lines followed by two recursive copies on each half.
/// Sorts bitonic inputs (descending when `flip` is set).
pub fn half_cleaner_rec(m: u32, flip: bool) -> Result<Network> {
    let width = pow2_width(m)?;
    if m == 0 {
        return Ok(Network::empty(width));
    }
    let mut net = Network::empty(width);
    net.push(half_cleaner(width / 2, flip))?;
    net.append(ndup(&half_cleaner_rec(m - 1, flip)?))?;
    Ok(net)
}

/// Like [`half_cleaner_rec`] but the first layer mirrors the bottom half,
/// so two ascending halves are merged into one ascending sequence.
pub fn rhalf_cleaner_rec(m: u32) -> Result<Network> {
    let width = pow2_width(m)?;
    if m == 0 {
        return Ok(Network::empty(width));
    }
    let mut net = Network::empty(width);
    net.push(rhalf_cleaner(width))?;
    net.append(ndup(&half_cleaner_rec(m - 1, false)?))?;
    Ok(net)
}

/// Bitonic sorter on `2^m` lines with `m(m+1)/2` layers.
pub fn bsort(m: u32) -> Result<Network> {
    let width = pow2_width(m)?;
    if m == 0 {
        return Ok(Network::empty(width));
    }
    let mut net = ndup(&bsort(m - 1)?);
    net.append(rhalf_cleaner_rec(m)?)?;
    Ok(net)
}

/// Bitonic sorter built from oriented half-cleaners only. The top half is
/// sorted in the requested direction, the bottom half in the opposite one,
/// and the merged bitonic result is cleaned. `descending == false` sorts
/// ascending.
pub fn bfsort(descending: bool, m: u32) -> Result<Network> {
    let width = pow2_width(m)?;
    if m == 0 {
        return Ok(Network::empty(width));
    }
    let mut net = nmerge(&bfsort(descending, m - 1)?, &bfsort(!descending, m - 1)?);
    net.append(half_cleaner_rec(m, descending)?)?;
    Ok(net)
}
