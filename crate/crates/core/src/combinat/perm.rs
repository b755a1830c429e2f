use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{1..n}` in one-line notation.
///
/// Products follow the right-action convention used for tableaux: `x * y`
/// applies `x` first. With that convention `w * s_i` swaps the *values*
/// `i, i+1` in the one-line word, and `s_i * w` swaps the *positions*
/// `i, i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// Builds a permutation from its one-line word; `None` unless the word is
    /// a rearrangement of `1..=n`.
    pub fn from_word(word: Vec<u8>) -> Option<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
        }
        Some(Permutation { word })
    }

    /// The product `s_{i1} s_{i2} ... s_{ik}` of adjacent transpositions.
    pub fn from_reduced_word(n: usize, letters: &[usize]) -> Self {
        let mut p = Permutation::identity(n);
        for &i in letters {
            p = p.right_mul_simple(i);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Image of `j` (1-based).
    pub fn apply(&self, j: usize) -> usize {
        self.word[j - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inv = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.word.len()];
        for (k, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        Permutation { word: inv }
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation {
            word: self.word.iter().map(|&v| other.word[v as usize - 1]).collect(),
        }
    }

    /// `s_i * self`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// `self * s_i`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        Permutation {
            word: self
                .word
                .iter()
                .map(|&v| match v as usize {
                    x if x == i => (i + 1) as u8,
                    x if x == i + 1 => i as u8,
                    _ => v,
                })
                .collect(),
        }
    }

    /// True when `l(s_i * self) > l(self)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.word[i - 1] < self.word[i]
    }

    /// True when `l(self * s_i) > l(self)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        let pos = |v: usize| self.word.iter().position(|&x| x as usize == v).unwrap();
        pos(i) < pos(i + 1)
    }

    /// A reduced expression `[i1, ..., ik]` with `self = s_{i1} ... s_{ik}`.
    /// The lexicographically first left-descent is peeled off at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        'outer: loop {
            for i in 1..w.n() {
                if !w.left_ascent(i) {
                    letters.push(i);
                    w = w.left_mul_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        letters
    }

    /// All permutations of `{1..n}`, in lexicographic order of their words.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation {
                    word: prefix.clone(),
                });
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v as u8 + 1);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_reproduces_permutation() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let rw = w.reduced_word();
                assert_eq!(rw.len(), w.length());
                assert_eq!(Permutation::from_reduced_word(n, &rw), w);
            }
        }
    }

    #[test]
    fn ascent_tests_match_lengths() {
        for w in Permutation::all(4) {
            for i in 1..4 {
                assert_eq!(w.left_ascent(i), w.left_mul_simple(i).length() > w.length());
                assert_eq!(w.right_ascent(i), w.right_mul_simple(i).length() > w.length());
            }
        }
    }

    #[test]
    fn inverse_and_then() {
        for w in Permutation::all(4) {
            assert!(w.then(&w.inverse()).is_identity());
            let rw = w.reduced_word();
            let rev: Vec<usize> = rw.iter().rev().copied().collect();
            assert_eq!(Permutation::from_reduced_word(4, &rev), w.inverse());
        }
    }
}
