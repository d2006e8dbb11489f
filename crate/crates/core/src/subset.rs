//! Ground sets and their nonempty proper subsets, encoded as bitmasks.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Smallest supported ground set.
pub const MIN_N: usize = 2;
/// Largest supported ground set; `2^16 - 2` vertices.
pub const MAX_N: usize = 16;

/// The ground set `{1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if !(MIN_N..=MAX_N).contains(&n) {
            return Err(Error::OutOfRange {
                n,
                min: MIN_N,
                max: MAX_N,
            });
        }
        Ok(GroundSet { n })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask of the whole ground set.
    #[inline]
    pub fn full_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    /// Number of nonempty proper subsets, `2^n - 2`.
    #[inline]
    pub fn proper_subset_count(&self) -> usize {
        (1usize << self.n) - 2
    }

    pub fn contains(&self, v: SubsetVertex) -> bool {
        v.mask != 0 && v.mask < self.full_mask()
    }
}

/// A nonempty proper subset of a ground set.
///
/// Bit `i - 1` of the mask is set exactly when element `i` is a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SubsetVertex {
    mask: u32,
}

impl SubsetVertex {
    pub fn new(ground: GroundSet, mask: u32) -> Result<Self> {
        let v = SubsetVertex { mask };
        if ground.contains(v) {
            Ok(v)
        } else {
            Err(Error::InvalidSubset {
                mask,
                n: ground.n(),
            })
        }
    }

    /// Builds a subset from 1-based element labels.
    ///
    /// ```
    /// use topograph::{GroundSet, SubsetVertex};
    ///
    /// let ground = GroundSet::new(4).unwrap();
    /// let v = SubsetVertex::from_elements(ground, &[1, 3]).unwrap();
    /// assert_eq!(v.mask(), 0b0101);
    /// assert_eq!(v.to_string(), "{1,3}");
    /// ```
    pub fn from_elements(ground: GroundSet, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &e in elements {
            if e == 0 || e > ground.n() {
                return Err(Error::InvalidElement {
                    element: e,
                    n: ground.n(),
                });
            }
            mask |= 1 << (e - 1);
        }
        Self::new(ground, mask)
    }

    /// Wraps a mask without checking it against a ground set.
    #[inline]
    pub(crate) fn from_mask_unchecked(mask: u32) -> Self {
        SubsetVertex { mask }
    }

    #[inline]
    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// Cardinality of the subset.
    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_disjoint(&self, other: SubsetVertex) -> bool {
        self.mask & other.mask == 0
    }

    /// Member elements, ascending and 1-based.
    pub fn elements(&self) -> Vec<usize> {
        (0..32)
            .filter(|b| self.mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }
}

impl fmt::Display for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Set notation for a mask, e.g. `{1,3}`.
pub fn mask_label(mask: u32) -> String {
    SubsetVertex::from_mask_unchecked(mask).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_set_range() {
        assert!(GroundSet::new(1).is_err());
        assert!(GroundSet::new(2).is_ok());
        assert!(GroundSet::new(16).is_ok());
        assert_eq!(
            GroundSet::new(17),
            Err(Error::OutOfRange {
                n: 17,
                min: 2,
                max: 16
            })
        );
    }

    #[test]
    fn empty_and_full_are_not_vertices() {
        let g = GroundSet::new(3).unwrap();
        assert!(SubsetVertex::new(g, 0).is_err());
        assert!(SubsetVertex::new(g, 0b111).is_err());
        assert!(SubsetVertex::new(g, 0b1000).is_err());
        assert!(SubsetVertex::new(g, 0b110).is_ok());
    }

    #[test]
    fn labels_use_one_based_elements() {
        let g = GroundSet::new(5).unwrap();
        let v = SubsetVertex::from_elements(g, &[5, 2]).unwrap();
        assert_eq!(v.elements(), vec![2, 5]);
        assert_eq!(v.to_string(), "{2,5}");
        assert!(SubsetVertex::from_elements(g, &[6]).is_err());
        assert!(SubsetVertex::from_elements(g, &[0]).is_err());
        assert!(SubsetVertex::from_elements(g, &[1, 2, 3, 4, 5]).is_err());
    }
}
