//! Permutations on a finite index set `0..n`, stored densely together with
//! their inverse.

use crate::map::MapError;

/// A bijection on `0..n`.
///
/// Both the forward and the inverse mapping are kept, so applying either
/// direction is O(1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    forward: Vec<u32>,
    inverse: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        let forward: Vec<u32> = (0..n as u32).collect();
        Permutation {
            inverse: forward.clone(),
            forward,
        }
    }

    /// Builds a permutation from its image table: `images[i]` is the image of `i`.
    pub fn from_images(images: Vec<u32>) -> Result<Self, MapError> {
        let n = images.len();
        let mut inverse = vec![u32::MAX; n];
        for (i, &img) in images.iter().enumerate() {
            if img as usize >= n || inverse[img as usize] != u32::MAX {
                return Err(MapError::NotBijective);
            }
            inverse[img as usize] = i as u32;
        }
        Ok(Permutation {
            forward: images,
            inverse,
        })
    }

    /// Builds a permutation on `0..n` from a list of cycles that must cover
    /// every index exactly once (fixed points appear as singleton cycles).
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self, MapError> {
        let mut forward = vec![u32::MAX; n];
        let mut seen = 0usize;
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                let y = cycle[(pos + 1) % cycle.len()];
                if x as usize >= n || forward[x as usize] != u32::MAX {
                    return Err(MapError::CyclesNotPartition);
                }
                forward[x as usize] = y;
                seen += 1;
            }
        }
        if seen != n {
            return Err(MapError::CyclesNotPartition);
        }
        Self::from_images(forward)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.forward[i as usize]
    }

    #[inline]
    pub fn apply_inv(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// Composition `self ∘ other`: the result maps `i` to `self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of unequal degree");
        let forward: Vec<u32> = (0..self.len() as u32)
            .map(|i| self.apply(other.apply(i)))
            .collect();
        Self::from_images(forward).expect("composite of bijections is a bijection")
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    pub fn is_involution(&self) -> bool {
        (0..self.len() as u32).all(|i| self.apply(self.apply(i)) == i)
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (0..self.len() as u32).filter(|&i| self.apply(i) == i).collect()
    }

    /// Cycle decomposition in canonical form: each cycle starts at its
    /// smallest element, cycles sorted by that element, fixed points included
    /// as singletons.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur as usize] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}
