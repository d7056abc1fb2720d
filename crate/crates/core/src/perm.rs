//! Permutations of `{1, ..., m}`.

use std::fmt;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A permutation of `1..=m`, stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m as u32).collect() }
    }

    /// `images[i - 1]` is the image of `i`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > m || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `1..=m` from disjoint cycles.
    pub fn from_cycles(m: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=m as u32).collect();
        let mut touched = vec![false; m + 1];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let xi = x as usize;
                if xi == 0 || xi > m || touched[xi] {
                    return Err(Error::NotAPermutation(format!("{cycles:?}")));
                }
                touched[xi] = true;
                images[xi - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn transposition(m: usize, a: u32, b: u32) -> Result<Self> {
        Permutation::from_cycles(m, &[&[a, b]])
    }

    /// The standard representative of a cycle type: cycles on consecutive
    /// integers, longest first.
    pub fn with_cycle_type(cycle_type: &Partition) -> Self {
        let mut images = Vec::with_capacity(cycle_type.size());
        let mut start = 1u32;
        for &len in cycle_type.parts() {
            let len = len as u32;
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut lens = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize - 1;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i32 {
        let ct = self.cycle_type();
        if (self.degree() - ct.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut wrote = false;
        for start in 0..m {
            if seen[start] || self.images[start] as usize == start + 1 {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.images[x] as usize - 1;
            }
            write!(f, "({})", cycle.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Sign of the permutation that sorts `keys` ascending. Keys must be distinct.
pub fn sort_sign<T: Ord>(keys: &[T]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
