//! Permutations on `{0, …, degree-1}` in image-array form.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, …, degree-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Build from an image array, checking that it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Descriptor {
                    descriptor: format!("{images:?}"),
                    reason: "image array is not a permutation".into(),
                });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles over zero-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree || moved[pt] {
                    return Err(Error::Descriptor {
                        descriptor: format!("{cycles:?}"),
                        reason: "cycles overlap or point out of range".into(),
                    });
                }
                moved[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: (0..self.degree())
                .map(|i| self.images[other.images[i]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut pt = self.images[start];
            while pt != start {
                seen[pt] = true;
                cycle.push(pt);
                pt = self.images[pt];
            }
            out.push(cycle);
        }
        out
    }

    /// Extend to a larger degree, fixing the new points (shifted by `offset`).
    pub(crate) fn embed(&self, degree: usize, offset: usize) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = offset + j;
        }
        Permutation { images }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let r = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let s = Permutation::from_cycles(4, &[vec![1, 3]]).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(s.order(), 2);
        assert!(r.compose(&r.inverse()).is_identity());
        // srs = r^{-1} in the dihedral group
        let srs = s.compose(&r).compose(&s);
        assert_eq!(srs, r.inverse());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn cycle_display() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
