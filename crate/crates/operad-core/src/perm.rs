//! Permutations in one-line notation, together with the two inflation
//! operations that appear in the operadic equivariance axioms.

use crate::OperadError;

/// A permutation of {1, …, n} stored as its one-line word: `word[k]` is the
/// image of k+1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    word: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            word: (1..=n).collect(),
        }
    }

    /// Build from a one-line word, validating that it is a bijection.
    pub fn from_one_line(word: Vec<usize>) -> Result<Self, OperadError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(OperadError::Unsupported(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm { word })
    }

    /// The transposition swapping i and j in Sₙ (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, j - 1);
        Perm { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.word
    }

    /// σ(i), 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n(), other.n());
        Perm {
            word: other.word.iter().map(|&i| self.word[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut word = vec![0usize; self.n()];
        for (k, &v) in self.word.iter().enumerate() {
            word[v - 1] = k + 1;
        }
        Perm { word }
    }

    /// Right action on a positional structure: `result[k] = xs[σ(k+1) − 1]`.
    pub fn apply_slice<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        debug_assert_eq!(self.n(), xs.len());
        self.word.iter().map(|&v| xs[v - 1].clone()).collect()
    }

    /// The direct sum 1^{i−1} ⊕ τ ⊕ 1^{m−i} ∈ S_{m+n−1} for τ = self ∈ Sₙ:
    /// τ acts on the block of positions i … i+n−1, everything else is fixed.
    pub fn block_embed(&self, i: usize, m: usize) -> Perm {
        let n = self.n();
        let mut word = Vec::with_capacity(m + n - 1);
        word.extend(1..i);
        word.extend(self.word.iter().map(|&v| v + i - 1));
        word.extend(i + n..m + n);
        Perm { word }
    }

    /// Inflation of σ = self ∈ Sₘ at slot i by a block of size n: slot i of
    /// the domain becomes an n-wide block that travels to where σ sends i,
    /// while the remaining slots follow σ with the induced shifts.
    pub fn inflate(&self, i: usize, n: usize) -> Perm {
        let m = self.n();
        let inv = self.inverse();
        let weight = |j: usize| if j == i { n } else { 1 };
        // cstart[v] = total weight of the slots carrying values < v.
        let mut cstart = vec![0usize; m + 1];
        for v in 1..m {
            cstart[v + 1] = cstart[v] + weight(inv.image(v));
        }
        let mut word = Vec::with_capacity(m + n - 1);
        for j in 1..=m {
            let base = cstart[self.image(j)];
            for t in 1..=weight(j) {
                word.push(base + t);
            }
        }
        Perm { word }
    }

    /// All permutations of Sₙ in lexicographic order of one-line words.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm { word: word.clone() });
            // Next lexicographic word, if any.
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| word[k] < word[k + 1])
            else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| word[l] > word[k]).unwrap();
            word.swap(k, l);
            word[k + 1..].reverse();
            if n == 0 {
                break;
            }
        }
        out
    }

    /// The adjacent transpositions (k, k+1), a generating set of Sₙ.
    pub fn adjacent_transpositions(n: usize) -> Vec<Perm> {
        (1..n).map(|k| Perm::transposition(n, k, k + 1)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let s = Perm::from_one_line(vec![2, 3, 1]).unwrap();
        assert_eq!(s.compose(&s.inverse()), Perm::identity(3));
        assert_eq!(s.inverse().compose(&s), Perm::identity(3));
        let t = Perm::transposition(3, 1, 2);
        // (s ∘ t)(1) = s(2) = 3.
        assert_eq!(s.compose(&t).image(1), 3);
    }

    #[test]
    fn right_action_is_contravariant_free() {
        // (x·σ)·τ = x·(σ∘τ) for the slice action.
        let x = vec!['a', 'b', 'c', 'd'];
        for s in Perm::all(4) {
            for t in Perm::all(4) {
                let lhs = t.apply_slice(&s.apply_slice(&x));
                let rhs = s.compose(&t).apply_slice(&x);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn all_has_factorial_size_and_is_sorted() {
        let all4 = Perm::all(4);
        assert_eq!(all4.len(), 24);
        let mut sorted = all4.clone();
        sorted.sort();
        assert_eq!(all4, sorted);
        assert_eq!(all4[0], Perm::identity(4));
    }

    #[test]
    fn block_embed_example() {
        let t = Perm::from_one_line(vec![2, 1]).unwrap();
        assert_eq!(t.block_embed(1, 2).one_line(), &[2, 1, 3]);
        assert_eq!(t.block_embed(2, 2).one_line(), &[1, 3, 2]);
    }

    #[test]
    fn inflate_example() {
        let s = Perm::from_one_line(vec![2, 1]).unwrap();
        // Slot 1 doubled: the two-wide block moves past the singleton.
        assert_eq!(s.inflate(1, 2).one_line(), &[2, 3, 1]);
        assert_eq!(s.inflate(2, 2).one_line(), &[3, 1, 2]);
        assert_eq!(
            Perm::identity(3).inflate(2, 3).one_line(),
            &[1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_one_line(vec![1, 1, 3]).is_err());
        assert!(Perm::from_one_line(vec![0, 2]).is_err());
        assert!(Perm::from_one_line(vec![1, 4, 2]).is_err());
    }
}
