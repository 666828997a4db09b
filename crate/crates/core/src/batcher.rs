//! Batcher's odd-even merge sorter.

use crate::combinators::{cswap, ndup, neodup};
use crate::index::pow2_width;
use crate::knuth::codd_jump;
use crate::{Connector, Network, Result};

/// Final merge layer: odd line `i` against even line `i + 1`.
pub fn batcher_merge(width: usize) -> Result<Connector> {
    codd_jump(1, width)
}

/// Merge network on `2^(t+1)` lines: the merge of `2^t` lines applied to
/// the even and odd lines, then one [`batcher_merge`] layer. At `t = 0` it is
/// a single comparator.
pub fn batcher_merge_rec_aux(t: u32) -> Result<Network> {
    let width = pow2_width(t + 1)?;
    if t == 0 {
        return Network::from_layers(width, vec![cswap(0, width - 1, width)?]);
    }
    let mut net = neodup(&batcher_merge_rec_aux(t - 1)?);
    net.push(batcher_merge(width)?)?;
    Ok(net)
}

/// Merges two sorted halves of `2^m` lines; `m` layers.
pub fn batcher_merge_rec(m: u32) -> Result<Network> {
    let width = pow2_width(m)?;
    if m == 0 {
        return Ok(Network::empty(width));
    }
    batcher_merge_rec_aux(m - 1)
}

/// Batcher odd-even sorter on `2^m` lines with `m(m+1)/2` layers.
pub fn batcher(m: u32) -> Result<Network> {
    let width = pow2_width(m)?;
    if m == 0 {
        return Ok(Network::empty(width));
    }
    let mut net = ndup(&batcher(m - 1)?);
    net.append(batcher_merge_rec(m)?)?;
    Ok(net)
}
