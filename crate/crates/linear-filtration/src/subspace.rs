//! Subspaces of ℚ^N in canonical reduced row-echelon form. Equality of
//! subspaces is literal equality of their matrices, so the type can sit
//! inside sets and maps; meets are intersections (via the Zassenhaus
//! block trick) and joins are sums.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Shorthand for the scalar field.
pub type Q = BigRational;

/// The rational n/1.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// A subspace of ℚ^ambient: the rows span it and form a canonical RREF
/// basis, so equal subspaces compare equal as values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    pub ambient: usize,
    rows: Vec<Vec<Q>>,
}

/// Reduce in place to RREF and drop zero rows.
fn rref(mut rows: Vec<Vec<Q>>, width: usize) -> Vec<Vec<Q>> {
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone().recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..width {
                    let sub = &rows[rank][c] * &factor;
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                let mut row = vec![Q::zero(); ambient];
                row[i] = Q::one();
                row
            })
            .collect();
        Subspace { ambient, rows }
    }

    /// Span of the given vectors (each of length `ambient`).
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Q>>) -> Subspace {
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        Subspace {
            ambient,
            rows: rref(rows, ambient),
        }
    }

    /// Span of a single coordinate axis.
    pub fn axis(ambient: usize, i: usize) -> Subspace {
        let mut row = vec![Q::zero(); ambient];
        row[i] = Q::one();
        Subspace {
            ambient,
            rows: vec![row],
        }
    }

    /// Span of a set of coordinate axes.
    pub fn axes(ambient: usize, coords: &[usize]) -> Subspace {
        let mut sorted: Vec<usize> = coords.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let rows = sorted
            .into_iter()
            .map(|i| {
                let mut row = vec![Q::zero(); ambient];
                row[i] = Q::one();
                row
            })
            .collect();
        Subspace { ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Reduce `v` against the basis; the remainder is zero exactly when
    /// `v` lies in the subspace.
    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        for row in &self.rows {
            let col = row.iter().position(|x| !x.is_zero()).expect("no zero rows");
            if !v[col].is_zero() {
                let factor = v[col].clone();
                for c in 0..self.ambient {
                    let sub = &row[c] * &factor;
                    v[c] -= sub;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    pub fn leq(&self, other: &Subspace) -> bool {
        debug_assert_eq!(self.ambient, other.ambient);
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Sum of subspaces — the lattice join.
    pub fn join(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.ambient, other.ambient);
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Subspace {
            ambient: self.ambient,
            rows: rref(rows, self.ambient),
        }
    }

    /// Intersection — the lattice meet, by the Zassenhaus block trick:
    /// reduce [A|A; B|0] and read the right half of rows whose left half
    /// has vanished.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let mut block: Vec<Vec<Q>> = Vec::new();
        for r in &self.rows {
            let mut row = r.clone();
            row.extend(r.iter().cloned());
            block.push(row);
        }
        for r in &other.rows {
            let mut row = r.clone();
            row.extend(std::iter::repeat(Q::zero()).take(n));
            block.push(row);
        }
        let reduced = rref(block, 2 * n);
        let rows = reduced
            .into_iter()
            .filter(|row| row[..n].iter().all(|x| x.is_zero()))
            .map(|row| row[n..].to_vec())
            .collect();
        Subspace {
            ambient: n,
            rows: rref(rows, n),
        }
    }

    /// Extend this subspace's basis to a basis of `bigger`; the returned
    /// vectors are coset representatives for `bigger / self`.
    pub fn complement_in(&self, bigger: &Subspace) -> Vec<Vec<Q>> {
        debug_assert!(self.leq(bigger));
        let mut acc = self.clone();
        let mut reps = Vec::new();
        for row in &bigger.rows {
            if !acc.contains(row) {
                reps.push(row.clone());
                acc = acc.join(&Subspace::from_rows(self.ambient, vec![row.clone()]));
            }
        }
        reps
    }
}
