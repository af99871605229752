//! Permutations of `{1, ..., n}` with the composition convention used
//! throughout the crate: `compose(p, q)` applies `q` first, so
//! `(p * q)(x) = p(q(x))`.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("permutations act on different sets ({0} vs {1} points)")]
    SizeMismatch(usize, usize),
    #[error("images {0:?} are not a bijection of 1..={1}")]
    NotABijection(Vec<u8>, usize),
    #[error("index {0} out of range for n = {1}")]
    IndexError(usize, usize),
}

/// A permutation of `{1, ..., n}`, stored by its table of images:
/// `images[i - 1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(PermError::NotABijection(images.clone(), n));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// The transposition `(i j)`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self, PermError> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(PermError::IndexError(i.max(j), n));
        }
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    /// The adjacent transposition `s_i = (i, i+1)`, `1 <= i <= n-1`.
    pub fn adjacent(n: usize, i: usize) -> Result<Self, PermError> {
        if i == 0 || i >= n {
            return Err(PermError::IndexError(i, n));
        }
        Self::transposition(n, i, i + 1)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `(self * other)(x) = self(other(x))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch(self.n(), other.n()));
        }
        let images = (1..=self.n()).map(|x| self.apply(other.apply(x)) as u8).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for x in 1..=self.n() {
            images[self.apply(x) - 1] = x as u8;
        }
        Permutation { images }
    }

    /// All permutations of `{1, ..., n}` in lexicographic order of their
    /// image tables. This order is pinned: matrix layouts depend on it.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { images: images.clone() });
            if !next_permutation(&mut images) {
                break;
            }
        }
        out
    }

    /// Position of `self` in the `Permutation::all` ordering.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        let mut factorial = 1usize;
        for k in 2..=n {
            factorial *= k;
        }
        let mut remaining: Vec<u8> = (1..=n as u8).collect();
        for i in 0..n {
            factorial /= n - i;
            let pos = remaining.iter().position(|&x| x == self.images[i]).unwrap();
            rank += pos * factorial;
            remaining.remove(pos);
        }
        rank
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_of_adjacent_transpositions_are_trivial() {
        for n in 2..=6 {
            for i in 1..n {
                let s = Permutation::adjacent(n, i).unwrap();
                assert!(s.compose(&s).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn braid_relation() {
        let n = 3;
        let s1 = Permutation::adjacent(n, 1).unwrap();
        let s2 = Permutation::adjacent(n, 2).unwrap();
        let lhs = s1.compose(&s2).unwrap().compose(&s1).unwrap();
        let rhs = s2.compose(&s1).unwrap().compose(&s2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn distant_generators_commute() {
        let n = 4;
        let s1 = Permutation::adjacent(n, 1).unwrap();
        let s3 = Permutation::adjacent(n, 3).unwrap();
        assert_eq!(s1.compose(&s3).unwrap(), s3.compose(&s1).unwrap());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // p = (1 2), q = (2 3); (p*q)(3) = p(2) = 1.
        let p = Permutation::transposition(3, 1, 2).unwrap();
        let q = Permutation::transposition(3, 2, 3).unwrap();
        assert_eq!(p.compose(&q).unwrap().apply(3), 1);
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 1..=5 {
            for (k, p) in Permutation::all(n).iter().enumerate() {
                assert_eq!(p.lex_rank(), k);
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).unwrap().is_identity());
        }
    }
}
