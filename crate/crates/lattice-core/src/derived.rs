//! Lattices derived from a given one: intervals, order ideals, and the
//! order-theoretic dual.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::{Lattice, LatticeError};

/// The lattice of closed intervals [a, b] of `L`, ordered by containment,
/// with an adjoined empty interval as bottom.
///
/// The meet [a∨c, b∧d] of two proper intervals can have crossed endpoints;
/// that is exactly an empty intersection, so it collapses to the adjoined
/// bottom, which keeps both operations total.
#[derive(Debug, Clone)]
pub struct IntervalLattice<L> {
    pub base: L,
}

impl<L: Lattice> IntervalLattice<L> {
    pub fn new(base: L) -> Self {
        IntervalLattice { base }
    }

    /// The proper interval [a, b]; `None` if a ≰ b.
    pub fn interval(&self, a: &L::Elem, b: &L::Elem) -> Option<(L::Elem, L::Elem)> {
        if self.base.leq(a, b) {
            Some((a.clone(), b.clone()))
        } else {
            None
        }
    }
}

impl<L: Lattice> Lattice for IntervalLattice<L> {
    /// `None` is the empty interval; `Some((a, b))` is [a, b] with a ≤ b.
    type Elem = Option<(L::Elem, L::Elem)>;

    fn meet(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (None, _) | (_, None) => None,
            (Some((a, b)), Some((c, d))) => {
                let lo = self.base.join(a, c);
                let hi = self.base.meet(b, d);
                if self.base.leq(&lo, &hi) {
                    Some((lo, hi))
                } else {
                    None
                }
            }
        }
    }

    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (None, z) | (z, None) => z.clone(),
            (Some((a, b)), Some((c, d))) => {
                Some((self.base.meet(a, c), self.base.join(b, d)))
            }
        }
    }

    fn bottom(&self) -> Option<Self::Elem> {
        Some(None)
    }

    fn top(&self) -> Option<Self::Elem> {
        Some(Some((self.base.bottom()?, self.base.top()?)))
    }

    fn elements(&self) -> Result<Vec<Self::Elem>, LatticeError> {
        let elems = self.base.elements()?;
        let mut out = vec![None];
        for a in &elems {
            for b in &elems {
                if self.base.leq(a, b) {
                    out.push(Some((a.clone(), b.clone())));
                }
            }
        }
        Ok(out)
    }

    fn elem_string(&self, e: &Self::Elem) -> String {
        match e {
            None => "[]".to_string(),
            Some((a, b)) => format!(
                "[{},{}]",
                self.base.elem_string(a),
                self.base.elem_string(b)
            ),
        }
    }
}

/// The lattice of order ideals (down-closed subsets) of `L`, ordered by
/// inclusion, with intersection as meet and union as join.
#[derive(Debug, Clone)]
pub struct IdealLattice<L> {
    pub base: L,
}

impl<L: Lattice> IdealLattice<L> {
    pub fn new(base: L) -> Self {
        IdealLattice { base }
    }

    /// The principal ideal ↓x.
    pub fn principal(&self, x: &L::Elem) -> Result<BTreeSet<L::Elem>, LatticeError> {
        let elems = self.base.elements()?;
        Ok(elems
            .into_iter()
            .filter(|e| self.base.leq(e, x))
            .collect())
    }
}

impl<L: Lattice> Lattice for IdealLattice<L> {
    type Elem = BTreeSet<L::Elem>;

    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.intersection(b).cloned().collect()
    }

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.union(b).cloned().collect()
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.is_subset(b)
    }

    fn bottom(&self) -> Option<Self::Elem> {
        Some(BTreeSet::new())
    }

    fn top(&self) -> Option<Self::Elem> {
        self.base.elements().ok().map(|v| v.into_iter().collect())
    }

    /// Ideal lattices are graded by cardinality: each cover adds one element.
    fn rank(&self, e: &Self::Elem) -> Option<u64> {
        Some(e.len() as u64)
    }

    fn elements(&self) -> Result<Vec<Self::Elem>, LatticeError> {
        let elems = self.base.elements()?;
        // Breadth-first closure from the empty ideal: extend an ideal by any
        // missing element whose strict down-set is already inside.
        let mut seen: HashSet<BTreeSet<L::Elem>> = HashSet::new();
        let mut queue: VecDeque<BTreeSet<L::Elem>> = VecDeque::new();
        let empty = BTreeSet::new();
        seen.insert(empty.clone());
        queue.push_back(empty);
        while let Some(ideal) = queue.pop_front() {
            for x in &elems {
                if ideal.contains(x) {
                    continue;
                }
                let addable = elems
                    .iter()
                    .filter(|y| *y != x && self.base.leq(y, x))
                    .all(|y| ideal.contains(y));
                if addable {
                    let mut next = ideal.clone();
                    next.insert(x.clone());
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by_key(|i| (i.len(), i.iter().cloned().collect::<Vec<_>>()));
        Ok(out)
    }

    fn elem_string(&self, e: &Self::Elem) -> String {
        let mut labels: Vec<String> =
            e.iter().map(|x| self.base.elem_string(x)).collect();
        labels.sort();
        format!("{{{}}}", labels.join(","))
    }
}

/// The same carrier with the order reversed: meet and join swap, as do the
/// extremes. When the base is graded with top of rank h, the dual is graded
/// by rank ↦ h − rank.
#[derive(Debug, Clone)]
pub struct DualLattice<L> {
    pub base: L,
}

impl<L: Lattice> DualLattice<L> {
    pub fn new(base: L) -> Self {
        DualLattice { base }
    }
}

impl<L: Lattice> Lattice for DualLattice<L> {
    type Elem = L::Elem;

    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.base.join(a, b)
    }

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.base.meet(a, b)
    }

    fn bottom(&self) -> Option<Self::Elem> {
        self.base.top()
    }

    fn top(&self) -> Option<Self::Elem> {
        self.base.bottom()
    }

    fn rank(&self, e: &Self::Elem) -> Option<u64> {
        let height = self.base.rank(&self.base.top()?)?;
        Some(height - self.base.rank(e)?)
    }

    fn elements(&self) -> Result<Vec<Self::Elem>, LatticeError> {
        self.base.elements()
    }

    fn elem_string(&self, e: &Self::Elem) -> String {
        self.base.elem_string(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{chain, diamond, verify_lattice_laws, Lattice};

    #[test]
    fn intervals_of_a_two_chain() {
        let int = IntervalLattice::new(chain(2));
        let elems = int.elements().unwrap();
        // Three proper intervals plus the adjoined empty one.
        assert_eq!(elems.len(), 4);
        assert_eq!(elems.iter().filter(|e| e.is_some()).count(), 3);
        verify_lattice_laws(&int).unwrap();
    }

    #[test]
    fn interval_meet_collapses_on_crossed_endpoints() {
        let int = IntervalLattice::new(chain(2));
        let a = Some((0, 0));
        let b = Some((1, 1));
        assert_eq!(int.meet(&a, &b), None);
        assert_eq!(int.join(&a, &b), Some((0, 1)));
    }

    #[test]
    fn interval_lattices_of_small_lattices() {
        verify_lattice_laws(&IntervalLattice::new(chain(4))).unwrap();
        verify_lattice_laws(&IntervalLattice::new(diamond())).unwrap();
    }

    #[test]
    fn ideals_of_the_diamond() {
        let ideals = IdealLattice::new(diamond());
        let elems = ideals.elements().unwrap();
        assert_eq!(elems.len(), 6);
        verify_lattice_laws(&ideals).unwrap();
    }

    #[test]
    fn principal_ideals() {
        let d = diamond();
        let ideals = IdealLattice::new(d);
        // ↓a = {0, a} in the diamond 0 < a,b < 1.
        let p = ideals.principal(&1).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.contains(&0) && p.contains(&1));
    }

    #[test]
    fn dual_swaps_and_is_involutive() {
        let d = diamond();
        let dd = DualLattice::new(d.clone());
        verify_lattice_laws(&dd).unwrap();
        assert_eq!(dd.bottom(), d.top());
        assert_eq!(dd.top(), d.bottom());
        let ddd = DualLattice::new(dd.clone());
        let elems = d.elements().unwrap();
        for a in &elems {
            for b in &elems {
                assert_eq!(ddd.meet(a, b), d.meet(a, b));
                assert_eq!(ddd.join(a, b), d.join(a, b));
                assert_eq!(ddd.leq(a, b), d.leq(a, b));
            }
        }
    }

    #[test]
    fn dual_rank_reflects() {
        let c = chain(4);
        let dc = DualLattice::new(c.clone());
        for e in c.elements().unwrap() {
            assert_eq!(dc.rank(&e), Some(3 - c.rank(&e).unwrap()));
        }
    }
}
