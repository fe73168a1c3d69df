//! Boolean lattices of subsets of [n] = {1,…,n}, composing like faces of
//! standard simplices: the inner subset replaces a chosen point when that
//! point is present and evaporates when it is not. Comes in two flavors —
//! plain, and with an absorbing empty set — and restricts to the
//! three-generator suboperad of nonempty subsets whose quadratic relations
//! are the triassociative ones.

use std::collections::BTreeSet;

use itertools::Itertools;
use operad_core::perm::Perm;
use operad_core::{LatticeOperad, Operad, OperadError};

/// A subset of [n] tagged with its ambient arity n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    pub arity: usize,
    pub members: BTreeSet<usize>,
}

pub fn subset(arity: usize, members: &[usize]) -> Subset {
    let members: BTreeSet<usize> = members.iter().copied().collect();
    debug_assert!(members.iter().all(|&x| 1 <= x && x <= arity));
    Subset { arity, members }
}

/// Subset operads; `absorbing` switches on the extra rule P ∘ᵢ ∅ = ∅.
pub struct SubsetOperad {
    pub absorbing: bool,
}

/// All subsets with the plain composition.
pub fn subsets() -> SubsetOperad {
    SubsetOperad { absorbing: false }
}

/// The variant where an empty inner subset wipes out the whole composite.
pub fn absorbing_subsets() -> SubsetOperad {
    SubsetOperad { absorbing: true }
}

impl Operad for SubsetOperad {
    type Elem = Subset;

    fn arity(&self, e: &Subset) -> usize {
        e.arity
    }

    fn compose(&self, p: &Subset, i: usize, q: &Subset) -> Result<Subset, OperadError> {
        if i == 0 || i > p.arity {
            return Err(OperadError::IndexOutOfRange {
                index: i,
                arity: p.arity,
            });
        }
        let m = q.arity;
        let arity = p.arity + m - 1;
        if self.absorbing && q.members.is_empty() {
            return Ok(Subset {
                arity,
                members: BTreeSet::new(),
            });
        }
        let mut members = BTreeSet::new();
        for &x in &p.members {
            if x < i {
                members.insert(x);
            } else if x > i {
                members.insert(x + m - 1);
            }
        }
        if p.members.contains(&i) {
            for &y in &q.members {
                members.insert(y + i - 1);
            }
        }
        Ok(Subset { arity, members })
    }

    fn unit(&self) -> Option<Subset> {
        Some(subset(1, &[1]))
    }

    fn is_symmetric(&self) -> bool {
        true
    }

    fn act(&self, e: &Subset, sigma: &Perm) -> Subset {
        // Right action by relabeling: k lands in P·σ when σ(k) is in P.
        let members = (1..=e.arity)
            .filter(|&k| e.members.contains(&sigma.image(k)))
            .collect();
        Subset {
            arity: e.arity,
            members,
        }
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Subset>, OperadError> {
        let mut out: Vec<Subset> = (1..=n)
            .powerset()
            .map(|xs| subset(n, &xs))
            .collect();
        out.sort();
        Ok(out)
    }

    fn elem_string(&self, e: &Subset) -> String {
        if e.members.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", e.members.iter().join(","))
        }
    }
}

impl LatticeOperad for SubsetOperad {
    fn meet(&self, a: &Subset, b: &Subset) -> Subset {
        debug_assert_eq!(a.arity, b.arity);
        Subset {
            arity: a.arity,
            members: a.members.intersection(&b.members).copied().collect(),
        }
    }

    fn join(&self, a: &Subset, b: &Subset) -> Subset {
        debug_assert_eq!(a.arity, b.arity);
        Subset {
            arity: a.arity,
            members: a.members.union(&b.members).copied().collect(),
        }
    }

    fn leq(&self, a: &Subset, b: &Subset) -> bool {
        a.members.is_subset(&b.members)
    }

    fn rank(&self, e: &Subset) -> Option<u64> {
        Some(e.members.len() as u64)
    }
}

/// Parse "{2,3}", "{}" or "∅" against a declared arity.
pub fn parse_subset(arity: usize, s: &str) -> Result<Subset, OperadError> {
    let bad = || OperadError::Unsupported(format!("expected a subset of [{arity}], got {s:?}"));
    let t = s.trim();
    if t == "∅" || t == "{}" {
        return Ok(Subset {
            arity,
            members: BTreeSet::new(),
        });
    }
    let inner = t
        .strip_prefix('{')
        .and_then(|u| u.strip_suffix('}'))
        .ok_or_else(bad)?;
    let mut members = BTreeSet::new();
    for piece in inner.split(',') {
        let x: usize = piece.trim().parse().map_err(|_| bad())?;
        if x == 0 || x > arity || !members.insert(x) {
            return Err(bad());
        }
    }
    Ok(Subset { arity, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use operad_core::enumerated_window;
    use operad_core::laws::{
        all_pass, check_lattice_compatibility, check_operad_laws, CompatibilityMode,
    };

    #[test]
    fn simplex_face_goldens() {
        let op = subsets();
        let p = subset(3, &[2, 3]);
        let q = subset(2, &[1, 2]);
        assert_eq!(op.compose(&p, 1, &q).unwrap(), subset(4, &[3, 4]));
        assert_eq!(op.compose(&p, 2, &q).unwrap(), subset(4, &[2, 3, 4]));
        assert_eq!(op.elem_string(&op.compose(&p, 1, &q).unwrap()), "{3,4}");
        assert!(matches!(
            op.compose(&p, 4, &q),
            Err(OperadError::IndexOutOfRange { index: 4, arity: 3 })
        ));
    }

    #[test]
    fn absorbing_flavor_wipes_out_on_empty_inner() {
        let plain = subsets();
        let dia = absorbing_subsets();
        let p = subset(2, &[1, 2]);
        let empty2 = subset(2, &[]);
        assert_eq!(plain.compose(&p, 1, &empty2).unwrap(), subset(3, &[3]));
        assert_eq!(dia.compose(&p, 1, &empty2).unwrap(), subset(3, &[]));
        assert_eq!(dia.elem_string(&subset(3, &[])), "∅");
        // Outer ∅ already evaporates everything in both flavors.
        let empty = subset(2, &[]);
        let q = subset(2, &[1]);
        assert_eq!(plain.compose(&empty, 1, &q).unwrap(), subset(3, &[]));
        assert_eq!(dia.compose(&empty, 1, &q).unwrap(), subset(3, &[]));
    }

    #[test]
    fn both_flavors_satisfy_the_operad_laws() {
        for op in [subsets(), absorbing_subsets()] {
            let window = enumerated_window(&op, 3).unwrap();
            assert!(all_pass(&check_operad_laws(&op, &window).unwrap()));
        }
    }

    #[test]
    fn plain_flavor_distributes_per_argument_but_not_jointly() {
        let op = subsets();
        let window = enumerated_window(&op, 3).unwrap();
        assert!(all_pass(
            &check_lattice_compatibility(&op, &window, CompatibilityMode::Full).unwrap()
        ));
        let reports =
            check_lattice_compatibility(&op, &window, CompatibilityMode::Joint).unwrap();
        for report in reports {
            match report.law {
                "joint-meet-distributivity" => assert!(report.pass),
                "joint-join-distributivity" => assert!(!report.pass),
                other => panic!("unexpected law {other}"),
            }
        }
    }

    #[test]
    fn absorbing_flavor_breaks_inner_meet_distributivity() {
        let op = absorbing_subsets();
        let p = subset(2, &[1, 2]);
        let q = subset(2, &[1]);
        let r = subset(2, &[2]);
        let lhs = op.compose(&p, 1, &op.meet(&q, &r)).unwrap();
        let rhs = op.meet(
            &op.compose(&p, 1, &q).unwrap(),
            &op.compose(&p, 1, &r).unwrap(),
        );
        assert_eq!(lhs, subset(3, &[]));
        assert_eq!(rhs, subset(3, &[3]));
        assert_ne!(lhs, rhs);
        // Everything else in the per-argument suite still holds.
        let window = enumerated_window(&op, 3).unwrap();
        let reports =
            check_lattice_compatibility(&op, &window, CompatibilityMode::Full).unwrap();
        for report in reports {
            if report.law == "meet-distributivity-inner" {
                assert!(!report.pass);
            } else {
                assert!(report.pass, "{} failed", report.law);
            }
        }
    }

    #[test]
    fn relabeling_action_permutes_members() {
        let op = subsets();
        let p = subset(3, &[1, 3]);
        let sigma = Perm::from_one_line(vec![2, 3, 1]).unwrap();
        // k ∈ P·σ iff σ(k) ∈ P: σ(1)=2 ∉ P, σ(2)=3 ∈ P, σ(3)=1 ∈ P.
        assert_eq!(op.act(&p, &sigma), subset(3, &[2, 3]));
        for e in op.enumerate(3).unwrap() {
            assert_eq!(op.act(&e, &Perm::identity(3)), e);
            for s in Perm::all(3) {
                for t in Perm::all(3) {
                    assert_eq!(
                        op.act(&op.act(&e, &s), &t),
                        op.act(&e, &s.compose(&t))
                    );
                }
            }
        }
    }

    #[test]
    fn nonempty_binary_generators_realize_the_triassociative_relations() {
        let op = subsets();
        let generators = [subset(2, &[1]), subset(2, &[2]), subset(2, &[1, 2])];
        let mut composites = Vec::new();
        for a in &generators {
            for b in &generators {
                for i in 1..=2 {
                    composites.push(op.compose(a, i, b).unwrap());
                }
            }
        }
        assert_eq!(composites.len(), 18);
        let distinct: BTreeSet<&Subset> = composites.iter().collect();
        assert_eq!(distinct.len(), 7, "all nonempty subsets of [3]");
        assert!(distinct.iter().all(|s| !s.members.is_empty()));
        assert_eq!(composites.len() - distinct.len(), 11, "quadratic relations");
    }

    #[test]
    fn boolean_lattice_structure_and_serialization() {
        let op = subsets();
        assert_eq!(op.enumerate(3).unwrap().len(), 8);
        let a = subset(3, &[1, 2]);
        let b = subset(3, &[2, 3]);
        assert_eq!(op.meet(&a, &b), subset(3, &[2]));
        assert_eq!(op.join(&a, &b), subset(3, &[1, 2, 3]));
        assert!(op.leq(&subset(3, &[2]), &a));
        assert_eq!(op.rank(&a), Some(2));
        assert_eq!(parse_subset(3, "{2,3}").unwrap(), b);
        assert_eq!(parse_subset(4, "∅").unwrap(), subset(4, &[]));
        assert!(parse_subset(2, "{3}").is_err());
        assert!(parse_subset(2, "{1,1}").is_err());
    }
}
