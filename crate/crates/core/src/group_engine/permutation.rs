use std::fmt;

use super::GroupError;

/// A bijection on `{0..degree-1}`; `image[i]` is where point `i` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (0..degree as u32).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self, GroupError> {
        let mut seen = vec![false; image.len()];
        for &p in &image {
            if p >= image.len() || std::mem::replace(&mut seen[p], true) {
                return Err(GroupError::NotAPermutation(image));
            }
        }
        Ok(Permutation {
            image: image.into_iter().map(|p| p as u32).collect(),
        })
    }

    /// Builds from disjoint cycles, e.g. `&[&[0, 1], &[2, 3]]` for (0 1)(2 3).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut image: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(GroupError::NotAPermutation(cycle.to_vec()));
                }
                image[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_image(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.image[point] as usize
    }

    /// `self` first, then `other`: `(self.then(other))(i) = other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            image: self.image.iter().map(|&p| other.image[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u32; self.image.len()];
        for (i, &p) in self.image.iter().enumerate() {
            image[p as usize] = i as u32;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// Places `self` on points `0..d` and `other` on `d..d+d'`.
    pub fn disjoint_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.image.len() as u32;
        Permutation {
            image: self
                .image
                .iter()
                .copied()
                .chain(other.image.iter().map(|&p| p + shift))
                .collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.image.len()];
        let mut wrote = false;
        for start in 0..self.image.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            f.write_str("(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.apply(p);
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}
