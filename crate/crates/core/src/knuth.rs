//! Knuth's merge-exchange sorter: sort the even and odd lines separately,
//! then close the gap between them with an even swap and a sequence of odd
//! jumps of shrinking length.

use crate::combinators::neodup;
use crate::index::{pow2_width, uphalf, LineIndex};
use crate::{Connector, Error, Network, Result};

/// Elements at even positions.
pub fn etake<T: Clone>(s: &[T]) -> Vec<T> {
    s.iter().step_by(2).cloned().collect()
}

/// Elements at odd positions.
pub fn otake<T: Clone>(s: &[T]) -> Vec<T> {
    s.iter().skip(1).step_by(2).cloned().collect()
}

/// Number of `false` entries.
pub fn no_f(s: &[bool]) -> usize {
    s.iter().filter(|b| !**b).count()
}

fn connector_from_map(width: usize, f: impl Fn(LineIndex) -> LineIndex) -> Result<Connector> {
    if width == 0 {
        return Err(Error::ZeroWidth);
    }
    let link = (0..width)
        .map(|i| LineIndex::new(i, width).map(&f).map(LineIndex::value))
        .collect::<Result<Vec<_>>>()?;
    Connector::from_link(link, vec![false; width])
}

/// Pairs each even line with the next one; a trailing even line stays put.
pub fn ceswap(width: usize) -> Result<Connector> {
    connector_from_map(width, |i| {
        if i.value() % 2 == 1 {
            i.ipred()
        } else {
            i.inext()
        }
    })
}

/// For odd `k`, pairs each odd line `i` with the even line `i + k` where that
/// exists. For even `k` this is the identity.
pub fn codd_jump(k: usize, width: usize) -> Result<Connector> {
    if k.is_multiple_of(2) {
        return connector_from_map(width, |i| i);
    }
    connector_from_map(width, |i| {
        if i.value() % 2 == 1 {
            i.iadd(k)
        } else {
            i.isub(k)
        }
    })
}

/// `k` odd-jump layers starting at jump `r`, each following jump being
/// `uphalf(r) - 1` of the previous one.
pub fn knuth_jump_rec(width: usize, k: usize, r: usize) -> Result<Network> {
    if width == 0 {
        return Err(Error::ZeroWidth);
    }
    let mut net = Network::empty(width);
    let mut jump = r;
    for _ in 0..k {
        net.push(codd_jump(jump, width)?)?;
        jump = uphalf(jump).saturating_sub(1);
    }
    Ok(net)
}

/// Knuth exchange sorter on `2^m` lines with `m(m+1)/2` layers.
pub fn knuth_exchange(m: u32) -> Result<Network> {
    let width = pow2_width(m)?;
    if m == 0 {
        return Ok(Network::empty(width));
    }
    let mut net = neodup(&knuth_exchange(m - 1)?);
    net.push(ceswap(width)?)?;
    net.append(knuth_jump_rec(width, (m - 1) as usize, width / 2 - 1)?)?;
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sorter_size;
    use crate::verify::{is_sorted, Order};

    const F: bool = false;
    const T: bool = true;

    #[test]
    fn parity_slices() {
        assert_eq!(etake(&['a', 'b', 'c', 'd', 'e']), vec!['a', 'c', 'e']);
        assert_eq!(otake(&['a', 'b', 'c', 'd']), vec!['b', 'd']);
        assert!(etake::<u8>(&[]).is_empty());
        assert!(otake(&[1]).is_empty());
    }

    #[test]
    fn false_count() {
        assert_eq!(no_f(&[F, F, T]), 2);
        assert_eq!(no_f(&[]), 0);
        assert_eq!(no_f(&[T, T]), 0);
    }

    #[test]
    fn ceswap_examples() {
        assert_eq!(ceswap(4).unwrap().links(), &[1, 0, 3, 2]);
        assert_eq!(ceswap(5).unwrap().links(), &[1, 0, 3, 2, 4]);
        assert_eq!(ceswap(2).unwrap().links(), &[1, 0]);
        assert_eq!(ceswap(1).unwrap().links(), &[0]);
        assert_eq!(ceswap(0), Err(Error::ZeroWidth));
    }

    #[test]
    fn codd_jump_examples() {
        assert!(codd_jump(4, 8).unwrap().is_identity());
        assert!(codd_jump(0, 8).unwrap().is_identity());
        assert_eq!(codd_jump(3, 8).unwrap().links(), &[0, 4, 2, 6, 1, 5, 3, 7]);
        assert_eq!(codd_jump(1, 4).unwrap().links(), &[0, 2, 1, 3]);
        assert_eq!(codd_jump(1, 0), Err(Error::ZeroWidth));
    }

    #[test]
    fn codd_jump_always_builds() {
        for width in 1..=64 {
            for k in 0..=64 {
                let c = codd_jump(k, width).unwrap();
                for i in 0..width {
                    assert_eq!(c.link(c.link(i)), i);
                }
            }
        }
    }

    #[test]
    fn jump_recursion() {
        assert!(knuth_jump_rec(8, 0, 7).unwrap().is_empty());
        let n = knuth_jump_rec(16, 3, 7).unwrap();
        assert_eq!(n.size(), 3);
        let expected: Vec<_> = [7, 3, 1]
            .iter()
            .map(|&k| codd_jump(k, 16).unwrap())
            .collect();
        assert_eq!(n.layers(), &expected[..]);
        assert_eq!(knuth_jump_rec(0, 1, 1), Err(Error::ZeroWidth));
    }

    #[test]
    fn knuth_exchange_structure() {
        let one = knuth_exchange(1).unwrap();
        assert_eq!(one.layers(), &[ceswap(2).unwrap()]);
        for m in 0..=10 {
            assert_eq!(knuth_exchange(m).unwrap().size(), sorter_size(m));
        }
    }

    #[test]
    fn knuth_exchange_sorts_small_integers() {
        let n = knuth_exchange(3).unwrap();
        let out = n.apply(&[5, -1, 5, 3, 9, 0, 2, 2]).unwrap();
        assert!(is_sorted(&out, Order::Ascending));
        assert_eq!(out, vec![-1, 0, 2, 2, 3, 5, 5, 9]);
    }
}
