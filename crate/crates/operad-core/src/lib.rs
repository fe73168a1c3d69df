//! Operads with lattice-ordered components: core traits, exhaustive law
//! checkers over finite windows, and generic constructions (word operads,
//! gap-insertion operads, interval/ideal/dual lifts, suboperad generation).

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub mod laws;
pub mod lift;
pub mod perm;
pub mod subgen;
pub mod word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("slot {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("element belongs to a different operad: {0}")]
    TagMismatch(String),
    #[error("carrier is not enumerable; provide a finite window")]
    InfiniteCarrier,
    #[error("multiplication table is not associative: {0}")]
    NonAssociative(String),
    #[error("arity {arity} exceeds the supported bound {max}")]
    ArityTooLarge { arity: usize, max: usize },
    #[error("operation budget of {0} elementary steps exceeded")]
    BudgetExceeded(u64),
    #[error("{0}")]
    Unsupported(String),
}

/// An operad whose elements carry their arity. Partial composition `a ∘ᵢ b`
/// plugs `b` into the i-th input of `a` (slots are 1-based), producing an
/// element of arity `arity(a) + arity(b) − 1`.
pub trait Operad {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn arity(&self, e: &Self::Elem) -> usize;

    fn compose(
        &self,
        a: &Self::Elem,
        i: usize,
        b: &Self::Elem,
    ) -> Result<Self::Elem, OperadError>;

    /// The arity-1 unit, when one exists.
    fn unit(&self) -> Option<Self::Elem> {
        None
    }

    /// Smallest arity with a nonempty component.
    fn min_arity(&self) -> usize {
        1
    }

    /// Whether the components carry a symmetric-group action.
    fn is_symmetric(&self) -> bool {
        false
    }

    /// Right action of σ ∈ Sₙ on an arity-n element, `(e·σ)ₖ = e_{σ(k)}`
    /// for positional structures. Only meaningful when `is_symmetric()`.
    fn act(&self, e: &Self::Elem, sigma: &perm::Perm) -> Self::Elem {
        let _ = sigma;
        e.clone()
    }

    /// All elements of the arity-n component, when finite.
    fn enumerate(&self, n: usize) -> Result<Vec<Self::Elem>, OperadError> {
        let _ = n;
        Err(OperadError::InfiniteCarrier)
    }

    fn elem_string(&self, e: &Self::Elem) -> String;
}

/// An operad whose every component is a lattice.
///
/// Compatibility of the compositions with meets and joins is a property to
/// be checked (see [`laws::check_lattice_compatibility`]), not a trait
/// obligation: several interesting examples fail it in one argument.
pub trait LatticeOperad: Operad {
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        &self.meet(a, b) == a
    }

    /// Rank function, when the component lattices are graded.
    fn rank(&self, e: &Self::Elem) -> Option<u64> {
        let _ = e;
        None
    }
}

/// A finite slice of an operad: for each arity in the map, a list of
/// elements to quantify over. Law checkers run exhaustively over windows.
pub type Window<E> = BTreeMap<usize, Vec<E>>;

/// Build a window from the operad's own enumeration for arities
/// `min_arity() ..= nmax`; skips arities with empty components.
pub fn enumerated_window<O: Operad>(op: &O, nmax: usize) -> Result<Window<O::Elem>, OperadError> {
    let mut w = Window::new();
    for n in op.min_arity()..=nmax {
        let elems = op.enumerate(n)?;
        if !elems.is_empty() {
            w.insert(n, elems);
        }
    }
    Ok(w)
}
