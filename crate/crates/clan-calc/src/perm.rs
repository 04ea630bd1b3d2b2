//! Permutations of `{1..n}` in one-line notation, with the Coxeter-theoretic
//! operations the Schubert calculus engines rely on: length, reduced words,
//! Bruhat order, and multiplication by simple transpositions on either side.
//!
//! Conventions used throughout the crate:
//!
//! * values and positions are 1-indexed;
//! * composition is `(u * v)(i) = u(v(i))`;
//! * `s_i` is the simple transposition swapping `i` and `i+1`, so `w * s_i`
//!   swaps the entries in positions `i, i+1` and `s_i * w` swaps the values
//!   `i, i+1`.

use std::fmt;

use serde::Serialize;

/// Errors from parsing a permutation out of user input.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PermError {
    #[error("empty permutation")]
    Empty,
    #[error("invalid permutation entry `{0}`: expected a positive integer")]
    BadToken(String),
    #[error("permutation entry {0} out of range 1..={1}")]
    OutOfRange(usize, usize),
    #[error("duplicate permutation entry {0}")]
    Duplicate(usize),
}

/// A permutation of `{1..n}` stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, validating bijectivity.
    pub fn from_one_line(word: Vec<usize>) -> Result<Permutation, PermError> {
        if word.is_empty() {
            return Err(PermError::Empty);
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v < 1 || v > n {
                return Err(PermError::OutOfRange(v, n));
            }
            if seen[v] {
                return Err(PermError::Duplicate(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Parses comma-separated one-line notation such as `2,1,3`.
    pub fn parse(text: &str) -> Result<Permutation, PermError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(PermError::Empty);
        }
        let mut word = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let value: usize = token
                .parse()
                .map_err(|_| PermError::BadToken(token.to_string()))?;
            word.push(value);
        }
        Permutation::from_one_line(word)
    }

    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Permutation {
        assert!(n >= 1, "permutations need n >= 1");
        Permutation { word: (1..=n).collect() }
    }

    /// The longest element `w0 = n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Permutation {
        assert!(n >= 1, "permutations need n >= 1");
        Permutation { word: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Permutation {
        assert!(i >= 1 && i < n, "simple transposition index out of range");
        let mut w = Permutation::identity(n);
        w.word.swap(i - 1, i);
        w
    }

    /// The transposition exchanging `a` and `b` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n && a != b);
        let mut w = Permutation::identity(n);
        w.word.swap(a - 1, b - 1);
        w
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// The image `w(i)` (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The underlying one-line word.
    pub fn one_line(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(idx, &v)| v == idx + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (idx, &v) in self.word.iter().enumerate() {
            word[v - 1] = idx + 1;
        }
        Permutation { word }
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composition size mismatch");
        Permutation {
            word: other.word.iter().map(|&v| self.word[v - 1]).collect(),
        }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.word[i] > self.word[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `w * s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n());
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// `s_i * w`: swaps the values `i` and `i+1` wherever they occur.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n());
        let mut word = self.word.clone();
        for v in &mut word {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { word }
    }

    /// True when position `i` is an ascent (`w(i) < w(i+1)`).
    pub fn is_ascent(&self, i: usize) -> bool {
        self.word[i - 1] < self.word[i]
    }

    /// Smallest ascent position, or `None` for the longest element.
    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.is_ascent(i))
    }

    /// Bruhat order via rank-matrix dominance: `u <= v` iff every prefix
    /// count `#{k <= i : u(k) <= j}` weakly dominates the one for `v`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n(), "Bruhat comparison size mismatch");
        let n = self.n();
        // Incrementally maintain the row i of both rank matrices.
        let mut ranks_self = vec![0usize; n + 1];
        let mut ranks_other = vec![0usize; n + 1];
        for i in 0..n {
            for rank in &mut ranks_self[self.word[i]..=n] {
                *rank += 1;
            }
            for rank in &mut ranks_other[other.word[i]..=n] {
                *rank += 1;
            }
            for j in 1..=n {
                if ranks_self[j] < ranks_other[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Lexicographically smallest reduced word, as a list of simple-reflection
    /// indices with the leftmost factor first: `w = s_{i1} * s_{i2} * ...`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut current = self.clone();
        loop {
            // Smallest i whose left multiplication shortens the permutation,
            // i.e. the value i occurs to the right of i+1.
            let mut position = vec![0; current.n() + 1];
            for (idx, &v) in current.word.iter().enumerate() {
                position[v] = idx;
            }
            match (1..current.n()).find(|&i| position[i] > position[i + 1]) {
                Some(i) => {
                    word.push(i);
                    current = current.left_mul_simple(i);
                }
                None => break,
            }
        }
        debug_assert!(current.is_identity());
        debug_assert_eq!(word.len(), self.length());
        word
    }

    /// True when the positions of `1..p` increase and the positions of
    /// `p+1..n` increase; equivalently the inverse has at most one descent,
    /// located at `p`.
    pub fn is_inverse_grassmannian(&self, p: usize) -> bool {
        let n = self.n();
        assert!(p <= n);
        let inv = self.inverse();
        let low_ok = (1..p).all(|v| inv.apply(v) < inv.apply(v + 1));
        let high_ok = (p + 1..n).all(|v| inv.apply(v) < inv.apply(v + 1));
        low_ok && high_ok
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n >= 1);
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // Standard next-permutation step.
            let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_one_line(word.to_vec()).unwrap()
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(Permutation::parse("2, 1, 3").unwrap(), p(&[2, 1, 3]));
        assert_eq!(Permutation::parse(""), Err(PermError::Empty));
        assert_eq!(
            Permutation::parse("1,x,3"),
            Err(PermError::BadToken("x".into()))
        );
        assert_eq!(Permutation::parse("1,4,2"), Err(PermError::OutOfRange(4, 3)));
        assert_eq!(Permutation::parse("1,1,2"), Err(PermError::Duplicate(1)));
    }

    #[test]
    fn composition_and_inverse() {
        let u = p(&[2, 3, 1]);
        let v = p(&[1, 3, 2]);
        // (u * v)(2) = u(3) = 1.
        assert_eq!(u.compose(&v), p(&[2, 1, 3]));
        assert_eq!(v.compose(&u), p(&[3, 2, 1]));
        assert!(u.compose(&u.inverse()).is_identity());
        // s3 * s2 in S5 (applied right to left) sends 2 -> 4.
        let s2 = Permutation::simple(5, 2);
        let s3 = Permutation::simple(5, 3);
        assert_eq!(s3.compose(&s2), p(&[1, 4, 2, 3, 5]));
    }

    #[test]
    fn lengths_and_simple_multiplications() {
        let w = p(&[3, 1, 2]);
        assert_eq!(w.length(), 2);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(w.right_mul_simple(1), p(&[1, 3, 2]));
        assert_eq!(w.left_mul_simple(1), p(&[3, 2, 1]));
        assert_eq!(w.first_ascent(), Some(2));
        assert_eq!(Permutation::longest(3).first_ascent(), None);
    }

    #[test]
    fn bruhat_order_small_cases() {
        let id = Permutation::identity(3);
        let w0 = Permutation::longest(3);
        for w in Permutation::all(3) {
            assert!(id.bruhat_leq(&w));
            assert!(w.bruhat_leq(&w0));
            assert!(w.bruhat_leq(&w));
        }
        assert!(p(&[2, 1, 3]).bruhat_leq(&p(&[3, 1, 2])));
        assert!(!p(&[3, 1, 2]).bruhat_leq(&p(&[1, 3, 2])));
        // Incomparable pair in S4.
        assert!(!p(&[2, 1, 4, 3]).bruhat_leq(&p(&[3, 1, 2, 4])));
        assert!(!p(&[3, 1, 2, 4]).bruhat_leq(&p(&[2, 1, 4, 3])));
    }

    #[test]
    fn reduced_words_are_lex_smallest_and_reduced() {
        assert_eq!(p(&[3, 2, 1]).reduced_word(), vec![1, 2, 1]);
        assert_eq!(p(&[1, 3, 2]).reduced_word(), vec![2]);
        assert!(Permutation::identity(4).reduced_word().is_empty());
        // Rebuild each permutation from its word, multiplying left to right.
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut rebuilt = Permutation::identity(4);
            for &i in word.iter().rev() {
                rebuilt = rebuilt.left_mul_simple(i);
            }
            assert_eq!(rebuilt, w);
        }
    }

    #[test]
    fn inverse_grassmannian_detection() {
        // Positions of 1..2 and of 3..4 must both increase.
        assert!(p(&[1, 3, 2, 4]).is_inverse_grassmannian(2));
        assert!(p(&[3, 1, 4, 2]).is_inverse_grassmannian(2));
        assert!(!p(&[2, 1, 3, 4]).is_inverse_grassmannian(2));
        assert!(Permutation::identity(4).is_inverse_grassmannian(2));
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Permutation::identity(4));
        assert_eq!(all[23], Permutation::longest(4));
    }
}
