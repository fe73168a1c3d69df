//! Two families of operads built from a set of letters: word operads over a
//! finite semigroup (arity n = words of length n, composition multiplies
//! into the chosen letter) and gap-insertion operads (arity n = words of
//! length n−1, composition splices the inner word into a gap).

use itertools::Itertools;
use lattice_core::{ExplicitLattice, Lattice};

use crate::perm::Perm;
use crate::{LatticeOperad, Operad, OperadError};

/// A finite semigroup given by its multiplication table, optionally a
/// monoid, optionally lattice-ordered.
#[derive(Debug, Clone)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<Vec<u8>>,
    unit: Option<u8>,
    order: Option<ExplicitLattice>,
}

impl FiniteSemigroup {
    /// Build and verify associativity of the table; verify the unit laws
    /// when a unit is declared.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<u8>>,
        unit: Option<u8>,
    ) -> Result<Self, OperadError> {
        let k = names.len();
        if table.len() != k || table.iter().any(|row| row.len() != k) {
            return Err(OperadError::Unsupported(
                "multiplication table shape does not match the letter count".into(),
            ));
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let left = table[table[a][b] as usize][c];
                    let right = table[a][table[b][c] as usize];
                    if left != right {
                        return Err(OperadError::NonAssociative(format!(
                            "({}·{})·{} = {} but {}·({}·{}) = {}",
                            names[a],
                            names[b],
                            names[c],
                            names[left as usize],
                            names[a],
                            names[b],
                            names[c],
                            names[right as usize],
                        )));
                    }
                }
            }
        }
        if let Some(e) = unit {
            for a in 0..k {
                if table[e as usize][a] != a as u8 || table[a][e as usize] != a as u8 {
                    return Err(OperadError::Unsupported(format!(
                        "declared unit {} does not satisfy the unit laws",
                        names[e as usize]
                    )));
                }
            }
        }
        Ok(FiniteSemigroup {
            names,
            table,
            unit,
            order: None,
        })
    }

    /// Declare a lattice order on the letters (indices must agree with the
    /// letter indices of this semigroup).
    pub fn with_order(mut self, order: ExplicitLattice) -> Result<Self, OperadError> {
        if order.len() != self.names.len() {
            return Err(OperadError::Unsupported(
                "order carrier size differs from the letter count".into(),
            ));
        }
        self.order = Some(order);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.table[a as usize][b as usize]
    }

    pub fn name(&self, a: u8) -> &str {
        &self.names[a as usize]
    }

    pub fn is_lattice_ordered(&self) -> bool {
        self.order.is_some()
    }
}

/// The word operad of a finite semigroup M: arity n is Mⁿ with the
/// letter-permuting symmetric action, and a ∘ᵢ b multiplies the slot letter
/// aᵢ onto every letter of b and splices the result in place of aᵢ.
#[derive(Debug, Clone)]
pub struct WordOperad {
    pub letters: FiniteSemigroup,
}

impl WordOperad {
    pub fn new(letters: FiniteSemigroup) -> Self {
        WordOperad { letters }
    }
}

impl Operad for WordOperad {
    type Elem = Vec<u8>;

    fn arity(&self, e: &Vec<u8>) -> usize {
        e.len()
    }

    fn compose(&self, a: &Vec<u8>, i: usize, b: &Vec<u8>) -> Result<Vec<u8>, OperadError> {
        let m = a.len();
        if i == 0 || i > m {
            return Err(OperadError::IndexOutOfRange { index: i, arity: m });
        }
        let mut out = Vec::with_capacity(m + b.len() - 1);
        out.extend_from_slice(&a[..i - 1]);
        out.extend(b.iter().map(|&q| self.letters.mul(a[i - 1], q)));
        out.extend_from_slice(&a[i..]);
        Ok(out)
    }

    fn unit(&self) -> Option<Vec<u8>> {
        self.letters.unit.map(|e| vec![e])
    }

    fn is_symmetric(&self) -> bool {
        true
    }

    fn act(&self, e: &Vec<u8>, sigma: &Perm) -> Vec<u8> {
        sigma.apply_slice(e)
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Vec<u8>>, OperadError> {
        let k = self.letters.size() as u8;
        Ok((0..n)
            .map(|_| 0..k)
            .multi_cartesian_product()
            .collect())
    }

    fn elem_string(&self, e: &Vec<u8>) -> String {
        e.iter().map(|&a| self.letters.name(a)).join("")
    }
}

impl LatticeOperad for WordOperad {
    fn meet(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
        let order = self.letters.order.as_ref().expect("lattice-ordered letters");
        debug_assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .map(|(&x, &y)| order.meet(&(x as usize), &(y as usize)) as u8)
            .collect()
    }

    fn join(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
        let order = self.letters.order.as_ref().expect("lattice-ordered letters");
        debug_assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .map(|(&x, &y)| order.join(&(x as usize), &(y as usize)) as u8)
            .collect()
    }
}

/// The gap-insertion operad over a lattice of letters: arity n is words of
/// length n−1 (the empty word is the unit), and a ∘ᵢ b inserts the inner
/// word into the i-th gap of the outer one. Components carry the product
/// order; reversal is an arity-preserving involution that reindexes slots
/// by i ↦ m − i + 1.
#[derive(Debug, Clone)]
pub struct GapOperad {
    pub letters: ExplicitLattice,
}

impl GapOperad {
    pub fn new(letters: ExplicitLattice) -> Self {
        GapOperad { letters }
    }

    /// Word reversal, the `#` involution.
    pub fn reverse(&self, e: &Vec<usize>) -> Vec<usize> {
        e.iter().rev().cloned().collect()
    }
}

/// Splice `inner` into the i-th gap of `outer` (1-based; a word of length
/// l has l + 1 gaps, so 1 ≤ i ≤ l + 1).
pub fn gap_insert<T: Clone>(outer: &[T], i: usize, inner: &[T]) -> Result<Vec<T>, OperadError> {
    if i == 0 || i > outer.len() + 1 {
        return Err(OperadError::IndexOutOfRange {
            index: i,
            arity: outer.len() + 1,
        });
    }
    let mut out = Vec::with_capacity(outer.len() + inner.len());
    out.extend_from_slice(&outer[..i - 1]);
    out.extend_from_slice(inner);
    out.extend_from_slice(&outer[i - 1..]);
    Ok(out)
}

impl Operad for GapOperad {
    type Elem = Vec<usize>;

    fn arity(&self, e: &Vec<usize>) -> usize {
        e.len() + 1
    }

    fn compose(
        &self,
        a: &Vec<usize>,
        i: usize,
        b: &Vec<usize>,
    ) -> Result<Vec<usize>, OperadError> {
        gap_insert(a, i, b)
    }

    fn unit(&self) -> Option<Vec<usize>> {
        Some(Vec::new())
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Vec<usize>>, OperadError> {
        match n {
            0 => Ok(Vec::new()),
            // multi_cartesian_product of zero factors is empty, but the
            // arity-1 component is the singleton empty word.
            1 => Ok(vec![Vec::new()]),
            _ => {
                let k = self.letters.len();
                Ok((0..n - 1)
                    .map(|_| 0..k)
                    .multi_cartesian_product()
                    .collect())
            }
        }
    }

    fn elem_string(&self, e: &Vec<usize>) -> String {
        if e.is_empty() {
            "e".to_string()
        } else {
            e.iter().map(|&a| self.letters.name(a).to_string()).join("")
        }
    }
}

impl LatticeOperad for GapOperad {
    fn meet(&self, a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| self.letters.meet(x, y)).collect()
    }

    fn join(&self, a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| self.letters.join(x, y)).collect()
    }

    fn rank(&self, e: &Vec<usize>) -> Option<u64> {
        e.iter().map(|x| self.letters.rank(x)).sum()
    }
}

/// The sign multiplication table on {0, +, −}: 0 is absorbing, and the
/// signs multiply by the rule of signs.
pub fn sign_semigroup() -> FiniteSemigroup {
    FiniteSemigroup::new(
        vec!["0".into(), "+".into(), "-".into()],
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]],
        None,
    )
    .expect("sign table is associative")
}
