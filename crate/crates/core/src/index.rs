//! Bounded line indices and the clamped arithmetic the generators use.
//!
//! The clamping rules matter: `inext`, `iadd` and `isub` leave an index in
//! place rather than wrapping when the step would leave the range, and the
//! involution property of the even-swap and odd-jump connectors depends on
//! exactly that behaviour.

use crate::{Error, Result};

/// `2^m`, computed by repeated doubling so that `pow2(m + 1) == pow2(m) + pow2(m)`.
pub fn pow2(m: u32) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..m {
        acc = acc.checked_add(acc).ok_or(Error::Overflow {
            exponent: m,
            limit: usize::BITS - 1,
        })?;
    }
    Ok(acc)
}

/// `2^m` for the sorter generators, which refuse exponents above
/// [`MAX_EXPONENT`](crate::MAX_EXPONENT).
pub fn pow2_width(m: u32) -> Result<usize> {
    if m > crate::MAX_EXPONENT {
        return Err(Error::Overflow {
            exponent: m,
            limit: crate::MAX_EXPONENT,
        });
    }
    pow2(m)
}

/// Ceiling half: half of `n + 1`.
pub fn uphalf(n: usize) -> usize {
    n.div_ceil(2)
}

/// A natural number strictly below `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineIndex {
    value: usize,
    bound: usize,
}

/// Result of splitting an index over `m1 + m2` lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    Left(LineIndex),
    Right(LineIndex),
}

impl LineIndex {
    pub fn new(value: usize, bound: usize) -> Result<Self> {
        if bound == 0 {
            return Err(Error::ZeroWidth);
        }
        if value >= bound {
            return Err(Error::IndexOutOfRange {
                index: value,
                width: bound,
            });
        }
        Ok(LineIndex { value, bound })
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn bound(self) -> usize {
        self.bound
    }

    /// `floor(i / 2)`, moving from `m + m` lines to `m`.
    pub fn idiv2(self) -> Result<Self> {
        if !self.bound.is_multiple_of(2) {
            return Err(Error::OddWidth(self.bound));
        }
        Ok(LineIndex {
            value: self.value / 2,
            bound: self.bound / 2,
        })
    }

    /// `2i` on `m + m` lines.
    pub fn elift(self) -> Self {
        LineIndex {
            value: 2 * self.value,
            bound: 2 * self.bound,
        }
    }

    /// `2i + 1` on `m + m` lines.
    pub fn olift(self) -> Self {
        LineIndex {
            value: 2 * self.value + 1,
            bound: 2 * self.bound,
        }
    }

    /// Successor, except the last line maps to itself.
    pub fn inext(self) -> Self {
        let value = if self.value + 1 == self.bound {
            self.value
        } else {
            self.value + 1
        };
        LineIndex { value, ..self }
    }

    /// Predecessor, saturating at 0.
    pub fn ipred(self) -> Self {
        LineIndex {
            value: self.value.saturating_sub(1),
            ..self
        }
    }

    /// `i + k` when that stays in range, otherwise `i`.
    pub fn iadd(self, k: usize) -> Self {
        let value = match self.value.checked_add(k) {
            Some(v) if v < self.bound => v,
            _ => self.value,
        };
        LineIndex { value, ..self }
    }

    /// `i - k` when `k <= i`, otherwise `i`.
    pub fn isub(self, k: usize) -> Self {
        LineIndex {
            value: self.value.checked_sub(k).unwrap_or(self.value),
            ..self
        }
    }

    /// `m - 1 - i`.
    pub fn rev(self) -> Self {
        LineIndex {
            value: self.bound - 1 - self.value,
            ..self
        }
    }

    /// Splits an index over `left + (bound - left)` lines.
    pub fn split(self, left: usize) -> Result<Split> {
        if left > self.bound {
            return Err(Error::WidthMismatch {
                expected: self.bound,
                found: left,
            });
        }
        Ok(if self.value < left {
            Split::Left(LineIndex {
                value: self.value,
                bound: left,
            })
        } else {
            Split::Right(LineIndex {
                value: self.value - left,
                bound: self.bound - left,
            })
        })
    }

    /// Embeds into the first block of `bound + right` lines.
    pub fn lshift(self, right: usize) -> Self {
        LineIndex {
            value: self.value,
            bound: self.bound + right,
        }
    }

    /// Embeds into the second block of `left + bound` lines.
    pub fn rshift(self, left: usize) -> Self {
        LineIndex {
            value: self.value + left,
            bound: self.bound + left,
        }
    }
}
