//! Lifting a lattice operad to derived carriers: intervals of each
//! component, order ideals of each component, and the order-theoretic dual.

use std::collections::BTreeSet;

use crate::{LatticeOperad, Operad, OperadError, Window};

/// An interval of an arity-n component, or the adjoined empty interval of
/// that arity (the bottom element, absorbing for meets and compositions).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IntervalElem<E> {
    Empty(usize),
    Proper(E, E),
}

/// Componentwise intervals of a lattice operad, composed endpoint-by-
/// endpoint: [p, r] ∘ᵢ [q, s] = [p∘ᵢq, r∘ᵢs].
#[derive(Debug, Clone)]
pub struct IntervalOperad<O> {
    pub base: O,
}

impl<O: LatticeOperad> IntervalOperad<O> {
    pub fn new(base: O) -> Self {
        IntervalOperad { base }
    }

    /// The proper interval [lo, hi]; `None` when lo ≰ hi.
    pub fn interval(&self, lo: O::Elem, hi: O::Elem) -> Option<IntervalElem<O::Elem>> {
        if self.base.leq(&lo, &hi) {
            Some(IntervalElem::Proper(lo, hi))
        } else {
            None
        }
    }
}

impl<O: LatticeOperad> Operad for IntervalOperad<O> {
    type Elem = IntervalElem<O::Elem>;

    fn arity(&self, e: &Self::Elem) -> usize {
        match e {
            IntervalElem::Empty(n) => *n,
            IntervalElem::Proper(lo, _) => self.base.arity(lo),
        }
    }

    fn compose(
        &self,
        a: &Self::Elem,
        i: usize,
        b: &Self::Elem,
    ) -> Result<Self::Elem, OperadError> {
        let result_arity = self.arity(a) + self.arity(b) - 1;
        match (a, b) {
            (IntervalElem::Empty(_), _) | (_, IntervalElem::Empty(_)) => {
                Ok(IntervalElem::Empty(result_arity))
            }
            (IntervalElem::Proper(p, r), IntervalElem::Proper(q, s)) => {
                Ok(IntervalElem::Proper(
                    self.base.compose(p, i, q)?,
                    self.base.compose(r, i, s)?,
                ))
            }
        }
    }

    fn unit(&self) -> Option<Self::Elem> {
        let e = self.base.unit()?;
        Some(IntervalElem::Proper(e.clone(), e))
    }

    fn min_arity(&self) -> usize {
        self.base.min_arity()
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Self::Elem>, OperadError> {
        let elems = self.base.enumerate(n)?;
        let mut out = vec![IntervalElem::Empty(n)];
        for lo in &elems {
            for hi in &elems {
                if self.base.leq(lo, hi) {
                    out.push(IntervalElem::Proper(lo.clone(), hi.clone()));
                }
            }
        }
        Ok(out)
    }

    fn elem_string(&self, e: &Self::Elem) -> String {
        match e {
            IntervalElem::Empty(_) => "[]".to_string(),
            IntervalElem::Proper(lo, hi) => format!(
                "[{},{}]",
                self.base.elem_string(lo),
                self.base.elem_string(hi)
            ),
        }
    }
}

impl<O: LatticeOperad> LatticeOperad for IntervalOperad<O> {
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = self.arity(a);
        match (a, b) {
            (IntervalElem::Empty(_), _) | (_, IntervalElem::Empty(_)) => IntervalElem::Empty(n),
            (IntervalElem::Proper(p, r), IntervalElem::Proper(q, s)) => {
                let lo = self.base.join(p, q);
                let hi = self.base.meet(r, s);
                if self.base.leq(&lo, &hi) {
                    IntervalElem::Proper(lo, hi)
                } else {
                    IntervalElem::Empty(n)
                }
            }
        }
    }

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match (a, b) {
            (IntervalElem::Empty(_), x) | (x, IntervalElem::Empty(_)) => x.clone(),
            (IntervalElem::Proper(p, r), IntervalElem::Proper(q, s)) => {
                IntervalElem::Proper(self.base.meet(p, q), self.base.join(r, s))
            }
        }
    }
}

/// An order ideal (down-closed subset) of an arity-n component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdealElem<E> {
    pub arity: usize,
    pub elems: BTreeSet<E>,
}

/// Order ideals of a lattice operad with composition
/// I ∘ᵢ J = ↓{p ∘ᵢ q : p ∈ I, q ∈ J}.
///
/// Down-closure needs the full carrier of the result arity, so the operad is
/// constructed with a precomputed window of components.
#[derive(Debug, Clone)]
pub struct IdealOperad<O: LatticeOperad> {
    pub base: O,
    components: Window<O::Elem>,
}

impl<O: LatticeOperad> IdealOperad<O> {
    /// Precompute base components for arities up to `max_arity` (compositions
    /// of window elements land inside it only while m + n − 1 ≤ max_arity).
    pub fn new(base: O, max_arity: usize) -> Result<Self, OperadError> {
        let mut components = Window::new();
        for n in base.min_arity()..=max_arity {
            components.insert(n, base.enumerate(n)?);
        }
        Ok(IdealOperad { base, components })
    }

    /// The principal ideal ↓x.
    pub fn principal(&self, x: &O::Elem) -> Result<IdealElem<O::Elem>, OperadError> {
        let n = self.base.arity(x);
        let carrier = self
            .components
            .get(&n)
            .ok_or(OperadError::InfiniteCarrier)?;
        Ok(IdealElem {
            arity: n,
            elems: carrier
                .iter()
                .filter(|e| self.base.leq(e, x))
                .cloned()
                .collect(),
        })
    }

    fn down_closure(
        &self,
        arity: usize,
        seeds: &BTreeSet<O::Elem>,
    ) -> Result<BTreeSet<O::Elem>, OperadError> {
        let carrier = self
            .components
            .get(&arity)
            .ok_or(OperadError::InfiniteCarrier)?;
        Ok(carrier
            .iter()
            .filter(|x| seeds.iter().any(|s| self.base.leq(x, s)))
            .cloned()
            .collect())
    }
}

impl<O: LatticeOperad> Operad for IdealOperad<O> {
    type Elem = IdealElem<O::Elem>;

    fn arity(&self, e: &Self::Elem) -> usize {
        e.arity
    }

    fn compose(
        &self,
        a: &Self::Elem,
        i: usize,
        b: &Self::Elem,
    ) -> Result<Self::Elem, OperadError> {
        if i == 0 || i > a.arity {
            return Err(OperadError::IndexOutOfRange {
                index: i,
                arity: a.arity,
            });
        }
        let arity = a.arity + b.arity - 1;
        let mut seeds = BTreeSet::new();
        for p in &a.elems {
            for q in &b.elems {
                seeds.insert(self.base.compose(p, i, q)?);
            }
        }
        Ok(IdealElem {
            arity,
            elems: self.down_closure(arity, &seeds)?,
        })
    }

    fn unit(&self) -> Option<Self::Elem> {
        let e = self.base.unit()?;
        self.principal(&e).ok()
    }

    fn min_arity(&self) -> usize {
        self.base.min_arity()
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Self::Elem>, OperadError> {
        let carrier = self
            .components
            .get(&n)
            .ok_or(OperadError::InfiniteCarrier)?;
        // Grow ideals one maximal-new element at a time.
        let mut seen: BTreeSet<BTreeSet<O::Elem>> = BTreeSet::new();
        let mut queue: Vec<BTreeSet<O::Elem>> = vec![BTreeSet::new()];
        seen.insert(BTreeSet::new());
        while let Some(ideal) = queue.pop() {
            for x in carrier {
                if ideal.contains(x) {
                    continue;
                }
                let addable = carrier
                    .iter()
                    .filter(|y| *y != x && self.base.leq(y, x))
                    .all(|y| ideal.contains(y));
                if addable {
                    let mut next = ideal.clone();
                    next.insert(x.clone());
                    if seen.insert(next.clone()) {
                        queue.push(next);
                    }
                }
            }
        }
        Ok(seen
            .into_iter()
            .map(|elems| IdealElem { arity: n, elems })
            .collect())
    }

    fn elem_string(&self, e: &Self::Elem) -> String {
        let inner: Vec<String> = e
            .elems
            .iter()
            .map(|x| self.base.elem_string(x))
            .collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl<O: LatticeOperad> LatticeOperad for IdealOperad<O> {
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        IdealElem {
            arity: a.arity,
            elems: a.elems.intersection(&b.elems).cloned().collect(),
        }
    }

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        IdealElem {
            arity: a.arity,
            elems: a.elems.union(&b.elems).cloned().collect(),
        }
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.elems.is_subset(&b.elems)
    }

    fn rank(&self, e: &Self::Elem) -> Option<u64> {
        Some(e.elems.len() as u64)
    }
}

/// The same compositions on the duals of all component lattices.
#[derive(Debug, Clone)]
pub struct DualOperad<O> {
    pub base: O,
}

impl<O: LatticeOperad> DualOperad<O> {
    pub fn new(base: O) -> Self {
        DualOperad { base }
    }
}

impl<O: LatticeOperad> Operad for DualOperad<O> {
    type Elem = O::Elem;

    fn arity(&self, e: &Self::Elem) -> usize {
        self.base.arity(e)
    }

    fn compose(
        &self,
        a: &Self::Elem,
        i: usize,
        b: &Self::Elem,
    ) -> Result<Self::Elem, OperadError> {
        self.base.compose(a, i, b)
    }

    fn unit(&self) -> Option<Self::Elem> {
        self.base.unit()
    }

    fn min_arity(&self) -> usize {
        self.base.min_arity()
    }

    fn is_symmetric(&self) -> bool {
        self.base.is_symmetric()
    }

    fn act(&self, e: &Self::Elem, sigma: &crate::perm::Perm) -> Self::Elem {
        self.base.act(e, sigma)
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Self::Elem>, OperadError> {
        self.base.enumerate(n)
    }

    fn elem_string(&self, e: &Self::Elem) -> String {
        self.base.elem_string(e)
    }
}

impl<O: LatticeOperad> LatticeOperad for DualOperad<O> {
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.base.join(a, b)
    }

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.base.meet(a, b)
    }
}
