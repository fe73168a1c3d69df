//! Shift operads on integers: one copy of ℤ in every arity with composition
//! adding the two values, the k-fold variant, and the multi-index operad,
//! whose arity-m component is ℤ^m ordered componentwise and whose
//! composition splices the inner vector into slot i, shifted by the entry it
//! replaces.

use itertools::Itertools;
use operad_core::perm::Perm;
use operad_core::{LatticeOperad, Operad, OperadError, Window};

/// An integer shift together with the arity of the component it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shift {
    pub arity: usize,
    pub value: i64,
}

pub fn shift(arity: usize, value: i64) -> Shift {
    Shift { arity, value }
}

/// The operad with one copy of ℤ in every arity; `a ∘ᵢ b` adds the values,
/// for any slot. Every component is the chain lattice (min/max), and the
/// symmetric action is trivial.
pub struct IntegerShifts;

impl Operad for IntegerShifts {
    type Elem = Shift;

    fn arity(&self, e: &Shift) -> usize {
        e.arity
    }

    fn compose(&self, a: &Shift, i: usize, b: &Shift) -> Result<Shift, OperadError> {
        if i == 0 || i > a.arity {
            return Err(OperadError::IndexOutOfRange { index: i, arity: a.arity });
        }
        Ok(shift(a.arity + b.arity - 1, a.value + b.value))
    }

    fn unit(&self) -> Option<Shift> {
        Some(shift(1, 0))
    }

    fn is_symmetric(&self) -> bool {
        true
    }

    fn act(&self, e: &Shift, _sigma: &Perm) -> Shift {
        *e
    }

    fn elem_string(&self, e: &Shift) -> String {
        format!("{}:{}", e.arity, e.value)
    }
}

impl LatticeOperad for IntegerShifts {
    fn meet(&self, a: &Shift, b: &Shift) -> Shift {
        debug_assert_eq!(a.arity, b.arity);
        shift(a.arity, a.value.min(b.value))
    }

    fn join(&self, a: &Shift, b: &Shift) -> Shift {
        debug_assert_eq!(a.arity, b.arity);
        shift(a.arity, a.value.max(b.value))
    }
}

/// All shifts with values in `[lo, hi]`, for arities `1..=nmax`.
pub fn shift_window(nmax: usize, lo: i64, hi: i64) -> Window<Shift> {
    (1..=nmax)
        .map(|n| (n, (lo..=hi).map(|v| shift(n, v)).collect()))
        .collect()
}

/// A vector of k independent shifts, tagged with its arity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KShift {
    pub arity: usize,
    pub values: Vec<i64>,
}

pub fn k_shift(arity: usize, values: Vec<i64>) -> KShift {
    KShift { arity, values }
}

/// The k-fold product of [`IntegerShifts`]: components ℤ^k in every arity,
/// composition adding componentwise, lattice structure componentwise.
pub struct KFoldShifts {
    pub k: usize,
}

impl Operad for KFoldShifts {
    type Elem = KShift;

    fn arity(&self, e: &KShift) -> usize {
        e.arity
    }

    fn compose(&self, a: &KShift, i: usize, b: &KShift) -> Result<KShift, OperadError> {
        if i == 0 || i > a.arity {
            return Err(OperadError::IndexOutOfRange { index: i, arity: a.arity });
        }
        if a.values.len() != self.k || b.values.len() != self.k {
            return Err(OperadError::TagMismatch(format!(
                "expected {} components, got {} and {}",
                self.k,
                a.values.len(),
                b.values.len()
            )));
        }
        let values = a.values.iter().zip(&b.values).map(|(x, y)| x + y).collect();
        Ok(k_shift(a.arity + b.arity - 1, values))
    }

    fn unit(&self) -> Option<KShift> {
        Some(k_shift(1, vec![0; self.k]))
    }

    fn is_symmetric(&self) -> bool {
        true
    }

    fn act(&self, e: &KShift, _sigma: &Perm) -> KShift {
        e.clone()
    }

    fn elem_string(&self, e: &KShift) -> String {
        format!("{}:{}", e.arity, e.values.iter().join(","))
    }
}

impl LatticeOperad for KFoldShifts {
    fn meet(&self, a: &KShift, b: &KShift) -> KShift {
        debug_assert_eq!(a.arity, b.arity);
        let values = a.values.iter().zip(&b.values).map(|(x, y)| *x.min(y)).collect();
        k_shift(a.arity, values)
    }

    fn join(&self, a: &KShift, b: &KShift) -> KShift {
        debug_assert_eq!(a.arity, b.arity);
        let values = a.values.iter().zip(&b.values).map(|(x, y)| *x.max(y)).collect();
        k_shift(a.arity, values)
    }
}

/// The multi-index operad: the arity-m component is ℤ^m with the
/// componentwise lattice structure and the place-permutation action;
/// composition at slot i splices the inner vector in, shifted by the entry
/// it replaces:
///
/// (a₁,…,a_m) ∘ᵢ (b₁,…,b_n) = (a₁,…,a_{i−1}, b₁+aᵢ,…,b_n+aᵢ, a_{i+1},…,a_m).
pub struct MultiIndexShifts;

impl Operad for MultiIndexShifts {
    type Elem = Vec<i64>;

    fn arity(&self, e: &Vec<i64>) -> usize {
        e.len()
    }

    fn compose(&self, a: &Vec<i64>, i: usize, b: &Vec<i64>) -> Result<Vec<i64>, OperadError> {
        let m = a.len();
        if i == 0 || i > m {
            return Err(OperadError::IndexOutOfRange { index: i, arity: m });
        }
        let shift_by = a[i - 1];
        let mut out = Vec::with_capacity(m + b.len() - 1);
        out.extend_from_slice(&a[..i - 1]);
        out.extend(b.iter().map(|x| x + shift_by));
        out.extend_from_slice(&a[i..]);
        Ok(out)
    }

    fn unit(&self) -> Option<Vec<i64>> {
        Some(vec![0])
    }

    fn is_symmetric(&self) -> bool {
        true
    }

    fn act(&self, e: &Vec<i64>, sigma: &Perm) -> Vec<i64> {
        (1..=e.len()).map(|k| e[sigma.image(k) - 1]).collect()
    }

    fn elem_string(&self, e: &Vec<i64>) -> String {
        e.iter().join(",")
    }
}

impl LatticeOperad for MultiIndexShifts {
    fn meet(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
    }

    fn join(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
    }
}

/// All vectors in the box `[lo, hi]^n`, for arities `1..=nmax`. Sizes grow
/// as (hi−lo+1)^n; keep the box tight.
pub fn multi_index_window(nmax: usize, lo: i64, hi: i64) -> Window<Vec<i64>> {
    (1..=nmax)
        .map(|n| {
            let vecs = (0..n)
                .map(|_| lo..=hi)
                .multi_cartesian_product()
                .collect::<Vec<_>>();
            (n, vecs)
        })
        .collect()
}

/// The diagonal map sending an arity-n shift k to the constant vector
/// (k,…,k) of length n. A lax morphism on nonnegative shifts; the lax
/// inequality fails as soon as a negative value is composed into a slot of
/// an element of arity ≥ 2 (the untouched entries stay too large).
pub fn diagonal(e: &Shift) -> Vec<i64> {
    vec![e.value; e.arity]
}
