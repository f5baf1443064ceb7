//! Permutations of `{0, …, n-1}`, stored as image vectors.
//!
//! Positions are zero-based internally; [`fmt::Display`] prints cycle
//! notation with one-based points, which is how the rest of the crate
//! talks about columns and sheets.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).collect(),
        }
    }

    /// Builds a permutation from zero-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from one-based images, as users write them.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?}")));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// The `shift`-th power of the cycle `(0 1 … n-1)`.
    pub fn cycle_power(size: usize, shift: usize) -> Self {
        Self {
            images: (0..size).map(|i| (i + shift) % size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self` followed by `other`: the point `x` goes to `other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Self {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    /// Swaps the images of two positions, i.e. post-composes with the
    /// transposition of the two target points currently at `a` and `b`.
    pub(crate) fn swap_targets(&mut self, a: usize, b: usize) {
        for x in self.images.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }

    /// Disjoint cycles, fixed points included, each starting at its
    /// smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return f.write_str("()");
        }
        for cycle in nontrivial {
            let points: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", points.join(" "))?;
        }
        Ok(())
    }
}
