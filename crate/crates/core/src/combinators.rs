//! Building blocks for composing networks: the single swap, side-by-side
//! merging, and even/odd interleaving.

use crate::index::{LineIndex, Split};
use crate::{Connector, Error, Network, Result};

/// Connector holding one unflipped comparator between lines `i` and `j`.
pub fn cswap(i: usize, j: usize, width: usize) -> Result<Connector> {
    Connector::new(width, &[(i, j, false)])
}

/// Places `c1` on the first `c1.width()` lines and `c2` on the rest.
/// Each line keeps the flip bit of the connector it came from.
pub fn cmerge(c1: &Connector, c2: &Connector) -> Connector {
    let (m1, m2) = (c1.width(), c2.width());
    let width = m1 + m2;
    let mut link = Vec::with_capacity(width);
    let mut flip = Vec::with_capacity(width);
    for i in 0..width {
        let split = LineIndex::new(i, width)
            .and_then(|ix| ix.split(m1))
            .expect("index below width");
        match split {
            Split::Left(l) => {
                link.push(c1.link(l.value()));
                flip.push(c1.is_flipped(l.value()));
            }
            Split::Right(r) => {
                link.push(c2.link(r.value()) + m1);
                flip.push(c2.is_flipped(r.value()));
            }
        }
    }
    Connector::from_link(link, flip).expect("merge of valid connectors is valid")
}

/// Layerwise [`cmerge`]. The result is as long as the shorter operand;
/// surplus layers of the longer one are dropped.
pub fn nmerge(n1: &Network, n2: &Network) -> Network {
    let layers = n1
        .layers()
        .iter()
        .zip(n2.layers())
        .map(|(a, b)| cmerge(a, b))
        .collect();
    Network::from_layers(n1.width() + n2.width(), layers).expect("merged widths agree")
}

/// Two copies of `n` side by side.
pub fn ndup(n: &Network) -> Network {
    nmerge(n, n)
}

/// Interleaves two connectors: `c1` acts on the even lines, `c2` on the odd.
pub fn ceomerge(c1: &Connector, c2: &Connector) -> Result<Connector> {
    if c1.width() != c2.width() {
        return Err(Error::WidthMismatch {
            expected: c1.width(),
            found: c2.width(),
        });
    }
    let m = c1.width();
    let mut link = Vec::with_capacity(2 * m);
    let mut flip = Vec::with_capacity(2 * m);
    for i in 0..2 * m {
        let half = LineIndex::new(i, 2 * m)?.idiv2()?;
        let x = half.value();
        if i % 2 == 1 {
            link.push(LineIndex::new(c2.link(x), m)?.olift().value());
            flip.push(c2.is_flipped(x));
        } else {
            link.push(LineIndex::new(c1.link(x), m)?.elift().value());
            flip.push(c1.is_flipped(x));
        }
    }
    Connector::from_link(link, flip)
}

/// Layerwise [`ceomerge`], truncating to the shorter operand like [`nmerge`].
pub fn neomerge(n1: &Network, n2: &Network) -> Result<Network> {
    if n1.width() != n2.width() {
        return Err(Error::WidthMismatch {
            expected: n1.width(),
            found: n2.width(),
        });
    }
    let layers = n1
        .layers()
        .iter()
        .zip(n2.layers())
        .map(|(a, b)| ceomerge(a, b))
        .collect::<Result<Vec<_>>>()?;
    Network::from_layers(2 * n1.width(), layers)
}

/// `n` on the even lines and again on the odd lines.
pub fn neodup(n: &Network) -> Network {
    neomerge(n, n).expect("equal widths")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knuth::{etake, otake};

    fn bools(width: usize, bits: u32) -> Vec<bool> {
        (0..width).map(|i| bits >> i & 1 == 1).collect()
    }

    fn net(width: usize, layers: &[&[(usize, usize)]]) -> Network {
        Network::from_layers(
            width,
            layers
                .iter()
                .map(|ps| {
                    let pairs: Vec<_> = ps.iter().map(|&(a, b)| (a, b, false)).collect();
                    Connector::new(width, &pairs).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn cswap_examples() {
        assert_eq!(cswap(0, 1, 2).unwrap().links(), &[1, 0]);
        assert_eq!(cswap(0, 2, 3).unwrap().links(), &[2, 1, 0]);
        assert_eq!(
            cswap(0, 1, 2).unwrap().apply(&[true, false]).unwrap(),
            vec![false, true]
        );
        assert_eq!(cswap(1, 1, 3), Err(Error::DegeneratePair(1)));
        assert!(matches!(cswap(0, 3, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn cmerge_examples() {
        let s = cswap(0, 1, 2).unwrap();
        let id = Connector::identity(2);
        assert_eq!(cmerge(&s, &id).links(), &[1, 0, 2, 3]);
        assert_eq!(cmerge(&id, &s).links(), &[0, 1, 3, 2]);
        assert_eq!(cmerge(&s, &s).links(), &[1, 0, 3, 2]);

        let f = Connector::new(2, &[(0, 1, true)]).unwrap();
        assert_eq!(cmerge(&s, &f).flips(), &[false, false, true, true]);
    }

    #[test]
    fn nmerge_truncates() {
        let a = net(2, &[&[(0, 1)], &[(0, 1)]]);
        let b = net(2, &[&[(0, 1)], &[], &[(0, 1)]]);
        assert_eq!(nmerge(&a, &b).size(), 2);
        assert_eq!(nmerge(&Network::empty(3), &b).size(), 0);
        assert_eq!(nmerge(&Network::empty(3), &b).width(), 5);
        assert_eq!(nmerge(&b, &b).size(), b.size());
    }

    #[test]
    fn ndup_acts_on_both_halves() {
        assert!(ndup(&Network::empty(3)).is_empty());
        let n = net(4, &[&[(0, 3), (1, 2)], &[(0, 1)], &[(2, 3), (0, 1)]]);
        let d = ndup(&n);
        assert_eq!(d.size(), n.size());
        for bits in 0..1u32 << 8 {
            let t = bools(8, bits);
            let out = d.apply(&t).unwrap();
            assert_eq!(out[..4], n.apply(&t[..4]).unwrap()[..]);
            assert_eq!(out[4..], n.apply(&t[4..]).unwrap()[..]);
        }
    }

    #[test]
    fn ceomerge_examples() {
        let s = cswap(0, 1, 2).unwrap();
        let id = Connector::identity(2);
        assert_eq!(ceomerge(&s, &id).unwrap().links(), &[2, 1, 0, 3]);
        assert_eq!(ceomerge(&id, &id).unwrap(), Connector::identity(4));
        assert!(matches!(
            ceomerge(&s, &Connector::identity(3)),
            Err(Error::WidthMismatch { .. })
        ));

        let c = Connector::new(4, &[(0, 3, false), (1, 2, true)]).unwrap();
        let e = ceomerge(&c, &c).unwrap();
        for i in 0..8 {
            assert_eq!(e.link(i) % 2, i % 2);
        }
    }

    #[test]
    fn neodup_acts_on_parity_slices() {
        assert!(neodup(&Network::empty(2)).is_empty());
        let n = net(4, &[&[(0, 3), (1, 2)], &[(0, 1)], &[(2, 3), (0, 1)]]);
        let d = neodup(&n);
        assert_eq!(d.size(), n.size());
        for bits in 0..1u32 << 8 {
            let t = bools(8, bits);
            let out = d.apply(&t).unwrap();
            assert_eq!(etake(&out), n.apply(&etake(&t)).unwrap());
            assert_eq!(otake(&out), n.apply(&otake(&t)).unwrap());
        }
        assert!(neomerge(&n, &Network::empty(2)).is_err());
    }
}
