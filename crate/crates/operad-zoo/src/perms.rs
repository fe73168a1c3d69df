//! Symmetric groups under the right weak Bruhat order. Composition splices
//! the inner one-line word into a slot of the outer one, shifting larger
//! outer values out of the way; the order is containment of inversion sets,
//! joins close up the union of inversions transitively, and meets come from
//! joins through the word-reversal involution.

use std::collections::BTreeSet;

use itertools::Itertools;
use operad_core::perm::Perm;
use operad_core::{LatticeOperad, Operad, OperadError};

use crate::ZooError;

/// Inversions by value: pairs (p, q) with p > q and p standing before q in
/// the one-line word.
pub fn inversion_set(u: &Perm) -> BTreeSet<(usize, usize)> {
    let w = u.one_line();
    let mut inv = BTreeSet::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv.insert((w[i], w[j]));
            }
        }
    }
    inv
}

/// Transitive closure of a set of pairs regarded as a relation:
/// (p, q) and (q, r) force (p, r).
pub fn transitive_closure(rel: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut out = rel.clone();
    loop {
        let snapshot: Vec<(usize, usize)> = out.iter().copied().collect();
        let mut grew = false;
        for &(p, q) in &snapshot {
            for &(q2, r) in &snapshot {
                if q == q2 && out.insert((p, r)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return out;
        }
    }
}

/// Recover the permutation with the given inversion set. Value x stands
/// before value y exactly when x > y with (x, y) inverted, or x < y with
/// (y, x) not inverted; if no word realizes the set this way we report it
/// as an internal bug, since closures of unions of inversion sets are
/// always inversion sets.
pub fn perm_from_inversions(
    n: usize,
    inv: &BTreeSet<(usize, usize)>,
) -> Result<Perm, ZooError> {
    let precedes = |x: usize, y: usize| {
        if x > y {
            inv.contains(&(x, y))
        } else {
            !inv.contains(&(y, x))
        }
    };
    let mut word = vec![0usize; n];
    for x in 1..=n {
        let pos = (1..=n).filter(|&y| y != x && precedes(y, x)).count();
        if word[pos] != 0 {
            return Err(ZooError::NoPermutationForClosure);
        }
        word[pos] = x;
    }
    let u = Perm::from_one_line(word).map_err(|_| ZooError::NoPermutationForClosure)?;
    if inversion_set(&u) == *inv {
        Ok(u)
    } else {
        Err(ZooError::NoPermutationForClosure)
    }
}

/// The word-reversal involution a₁…aₙ ↦ aₙ…a₁, a lattice
/// anti-automorphism of the weak order.
pub fn reversal(u: &Perm) -> Perm {
    let mut w = u.one_line().to_vec();
    w.reverse();
    Perm::from_one_line(w).expect("reversal of a permutation")
}

/// Weak-order comparison by inversion-set containment.
pub fn weak_leq(a: &Perm, b: &Perm) -> bool {
    inversion_set(a).is_subset(&inversion_set(b))
}

/// Join in the weak order: the unique permutation whose inversion set is
/// the transitive closure of the union of the two inversion sets.
pub fn perm_join(a: &Perm, b: &Perm) -> Result<Perm, ZooError> {
    if a.n() != b.n() {
        return Err(ZooError::LengthMismatch(a.n(), b.n()));
    }
    let union: BTreeSet<(usize, usize)> = inversion_set(a)
        .union(&inversion_set(b))
        .copied()
        .collect();
    perm_from_inversions(a.n(), &transitive_closure(&union))
}

/// Meet in the weak order, as the reversal of the join of the reversals.
pub fn perm_meet(a: &Perm, b: &Perm) -> Result<Perm, ZooError> {
    if a.n() != b.n() {
        return Err(ZooError::LengthMismatch(a.n(), b.n()));
    }
    Ok(reversal(&perm_join(&reversal(a), &reversal(b))?))
}

/// Splice b into the i-th slot of a: replace aᵢ by the block
/// (b₁+aᵢ−1, …, bₙ+aᵢ−1) and shift every outer value above aᵢ up by n−1.
pub fn perm_compose(a: &Perm, i: usize, b: &Perm) -> Result<Perm, OperadError> {
    let m = a.n();
    if i == 0 || i > m {
        return Err(OperadError::IndexOutOfRange { index: i, arity: m });
    }
    let n = b.n();
    let ai = a.image(i);
    let mut word = Vec::with_capacity(m + n - 1);
    for (k, &ak) in a.one_line().iter().enumerate() {
        if k + 1 == i {
            word.extend(b.one_line().iter().map(|&bj| bj + ai - 1));
        } else {
            word.push(if ak > ai { ak + n - 1 } else { ak });
        }
    }
    Perm::from_one_line(word)
}

/// The four disjoint pieces of Inv(a ∘ᵢ b): outer inversions avoiding aᵢ
/// (relabeled), outer inversions with aᵢ on the right resp. left (each
/// blown up into n inversions against the inner batch), and the inner
/// inversions shifted by aᵢ − 1.
pub fn inversion_image_parts(
    a: &Perm,
    i: usize,
    b: &Perm,
) -> [BTreeSet<(usize, usize)>; 4] {
    let n = b.n();
    let ai = a.image(i);
    let relabel = |t: usize| if t > ai { t + n - 1 } else { t };
    let mut avoiding = BTreeSet::new();
    let mut right_of = BTreeSet::new();
    let mut left_of = BTreeSet::new();
    for (p, q) in inversion_set(a) {
        if p != ai && q != ai {
            avoiding.insert((relabel(p), relabel(q)));
        } else if q == ai {
            for k in 1..=n {
                right_of.insert((p + n - 1, k + ai - 1));
            }
        } else {
            for k in 1..=n {
                left_of.insert((k + ai - 1, q));
            }
        }
    }
    let inner: BTreeSet<(usize, usize)> = inversion_set(b)
        .into_iter()
        .map(|(p, q)| (p + ai - 1, q + ai - 1))
        .collect();
    [avoiding, right_of, left_of, inner]
}

/// One-line serialization: digits run together while every value is a
/// single digit, space-separated beyond that.
pub fn perm_string(u: &Perm) -> String {
    if u.n() <= 9 {
        u.one_line().iter().map(|v| v.to_string()).collect()
    } else {
        u.one_line().iter().join(" ")
    }
}

/// Parse either serialization accepted by [`perm_string`].
pub fn parse_perm(s: &str) -> Result<Perm, OperadError> {
    let word: Vec<usize> = if s.contains(char::is_whitespace) {
        s.split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| OperadError::Unsupported(format!("bad one-line entry {t:?}")))
            })
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| OperadError::Unsupported(format!("bad one-line digit {c:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    Perm::from_one_line(word)
}

/// Symmetric groups with splice composition and the weak order. The order
/// is respected in the inner argument only, so only the monotonicity and
/// distributivity laws for that argument hold; components are graded by
/// inversion count.
pub struct WeakOrderOperad;

impl Operad for WeakOrderOperad {
    type Elem = Perm;

    fn arity(&self, e: &Perm) -> usize {
        e.n()
    }

    fn compose(&self, a: &Perm, i: usize, b: &Perm) -> Result<Perm, OperadError> {
        perm_compose(a, i, b)
    }

    fn unit(&self) -> Option<Perm> {
        Some(Perm::identity(1))
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Perm>, OperadError> {
        let mut all = Perm::all(n);
        all.sort();
        Ok(all)
    }

    fn elem_string(&self, e: &Perm) -> String {
        perm_string(e)
    }
}

impl LatticeOperad for WeakOrderOperad {
    fn meet(&self, a: &Perm, b: &Perm) -> Perm {
        perm_meet(a, b).expect("equal arities")
    }

    fn join(&self, a: &Perm, b: &Perm) -> Perm {
        perm_join(a, b).expect("equal arities")
    }

    fn leq(&self, a: &Perm, b: &Perm) -> bool {
        weak_leq(a, b)
    }

    fn rank(&self, e: &Perm) -> Option<u64> {
        Some(inversion_set(e).len() as u64)
    }
}
