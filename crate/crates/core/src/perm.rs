//! Permutations on finite point sets.
//!
//! Points are 1-indexed in all external formats (cycle notation, group
//! files); internally images are stored 0-indexed in a flat vector.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., degree}`, stored as the image vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl Permutation {
    /// Identity permutation of the given degree. Degree 0 is forbidden.
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree-0 permutations are forbidden");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-indexed images, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n || seen[im as usize] {
                return Err(Error::InvalidPermutation(
                    "image vector is not a bijection".into(),
                ));
            }
            seen[im as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds the product of the given disjoint cycles (1-indexed points).
    /// Points not mentioned are fixed. Repeated points are rejected.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range 1..{degree}"
                    )));
                }
                if used[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears twice"
                    )));
                }
                used[p - 1] = true;
            }
            if cycle.len() < 2 {
                continue;
            }
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                images[from] = to as u16;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-indexed point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&im| other.images[im as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Conjugate `self^h = h^-1 * self * h`.
    pub fn conjugate(&self, h: &Permutation) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[h.images[i] as usize] = h.images[im as usize];
        }
        Permutation { images }
    }

    /// Commutator `[self, other] = self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// Decomposition into disjoint cycles of length >= 2, 1-indexed,
    /// each cycle starting at its minimal point, cycles sorted by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parses disjoint-cycle notation, e.g. `(1,2,3)(4,5)`; `()` is the
    /// identity. The permutation gets the given degree, which must cover
    /// every mentioned point.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        if rest.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "empty permutation".into(),
            });
        }
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("expected '(' in {text:?}"),
            })?;
            let close = rest[open..].find(')').ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("unbalanced parentheses in {text:?}"),
            })? + open;
            let inner = rest[open + 1..close].trim();
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|tok| {
                        tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                            line: 0,
                            message: format!("bad point {tok:?} in {text:?}"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_cycles(&cycles, degree)
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
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_from_no_cycles() {
        let p = Permutation::from_cycles(&[], 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn three_cycle_cubed_is_identity() {
        let p = Permutation::from_cycles(&[vec![1, 2, 3]], 3).unwrap();
        assert!(p.pow(3).is_identity());
        assert_eq!(p.order(), 3);
    }

    #[test]
    fn involution_squares_to_identity() {
        let p = Permutation::from_cycles(&[vec![1, 2]], 2).unwrap();
        assert!(p.compose(&p).is_identity());
    }

    #[test]
    fn rejects_repeated_and_out_of_range_points() {
        assert!(Permutation::from_cycles(&[vec![1, 2, 1]], 3).is_err());
        assert!(Permutation::from_cycles(&[vec![1, 2], vec![2, 3]], 3).is_err());
        assert!(Permutation::from_cycles(&[vec![1, 5]], 3).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = Permutation::parse("(1,2,3)(4,5)", 6).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        let id = Permutation::parse("()", 3).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn conjugate_matches_definition() {
        let g = Permutation::parse("(1,2,3)", 4).unwrap();
        let h = Permutation::parse("(3,4)", 4).unwrap();
        let expected = h.inverse().compose(&g).compose(&h);
        assert_eq!(g.conjugate(&h), expected);
    }
}
