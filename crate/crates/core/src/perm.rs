//! Vertex permutations.

use alloc::vec::Vec;
use core::fmt;

/// A bijection on vertex ids `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermutationError {
    NotABijection,
}

impl fmt::Display for PermutationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermutationError::NotABijection => write!(f, "image array is not a bijection"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PermutationError {}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(PermutationError::NotABijection);
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self` after `other`: `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.images.len()];
        for (v, &img) in self.images.iter().enumerate() {
            inv[img] = v;
        }
        Permutation { images: inv }
    }

    /// Image of the unordered edge `{u, v}`, normalized to `u < v`.
    pub fn apply_edge(&self, (u, v): (usize, usize)) -> (usize, usize) {
        let (a, b) = (self.images[u], self.images[v]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.images)
    }
}
