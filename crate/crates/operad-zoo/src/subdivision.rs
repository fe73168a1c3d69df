//! Reduced planar rooted trees with grafting, viewed through their polygon
//! pictures: a tree with n leaves is a subdivision of an (n+1)-gon (leaf i
//! is the edge (i−1,i), the marked root edge is (0,n), and an internal node
//! spanning leaves i..j contributes the diagonal (i−1,j)). Each component
//! carries a lattice whose order is reverse containment of diagonal sets,
//! with a designated absorbing bottom ∅ under every triangulation: joins
//! intersect the diagonal sets, and meets take the union when it is free of
//! crossings and collapse to ∅ otherwise.

use std::collections::BTreeSet;

use itertools::Itertools;
use operad_core::perm::Perm;
use operad_core::{LatticeOperad, Operad, OperadError};

use crate::ZooError;

/// A planar rooted tree in which every internal node has at least two
/// children (guaranteed by the enumerator and preserved by grafting; hand
/// construction is expected to respect it).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

impl PlanarTree {
    pub fn node(children: Vec<PlanarTree>) -> PlanarTree {
        debug_assert!(children.len() >= 2);
        PlanarTree::Node(children)
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(children) => children.iter().map(|c| c.leaves()).sum(),
        }
    }

    /// Replace the i-th leaf (numbered from 1, left to right) by `other`.
    pub fn graft(&self, i: usize, other: &PlanarTree) -> PlanarTree {
        fn rec(t: &PlanarTree, i: &mut usize, other: &PlanarTree) -> Option<PlanarTree> {
            match t {
                PlanarTree::Leaf => {
                    *i -= 1;
                    (*i == 0).then(|| other.clone())
                }
                PlanarTree::Node(children) => {
                    let mut out = None;
                    for (j, c) in children.iter().enumerate() {
                        if let Some(replaced) = rec(c, i, other) {
                            let mut kids = children.clone();
                            kids[j] = replaced;
                            out = Some(PlanarTree::Node(kids));
                            break;
                        }
                    }
                    out
                }
            }
        }
        let mut counter = i;
        rec(self, &mut counter, other).expect("leaf index within range")
    }

    /// Every tree with n leaves whose internal nodes all have at least two
    /// children, in a canonical order.
    pub fn all(n: usize) -> Vec<PlanarTree> {
        fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
            if parts == 1 {
                return vec![vec![n]];
            }
            let mut out = Vec::new();
            for first in 1..=n - parts + 1 {
                for mut rest in compositions(n - first, parts - 1) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![PlanarTree::Leaf];
        }
        let mut out = Vec::new();
        for parts in 2..=n {
            for shape in compositions(n, parts) {
                let choices: Vec<Vec<PlanarTree>> =
                    shape.iter().map(|&k| PlanarTree::all(k)).collect();
                for kids in choices.into_iter().multi_cartesian_product() {
                    out.push(PlanarTree::Node(kids));
                }
            }
        }
        out.sort();
        out
    }
}

/// A subdivision of the (n+1)-gon for a component of arity n: a crossing-free
/// set of diagonals, or the designated bottom element of that arity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subdiv {
    Special(usize),
    Diagonals(usize, BTreeSet<(usize, usize)>),
}

impl Subdiv {
    pub fn is_special(&self) -> bool {
        matches!(self, Subdiv::Special(_))
    }
}

/// Whether (a,b) is a diagonal of the polygon with vertices 0..=n: a chord
/// that is neither a boundary edge (i,i+1) nor the marked edge (0,n).
pub fn is_diagonal(n: usize, (a, b): (usize, usize)) -> bool {
    a < b && b <= n && b - a >= 2 && !(a == 0 && b == n)
}

/// Whether two chords cross in the interior (sharing an endpoint is fine).
pub fn crossing((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn validate_diagonals(n: usize, diags: &BTreeSet<(usize, usize)>) -> Result<(), ZooError> {
    for &d in diags {
        if !is_diagonal(n, d) {
            return Err(ZooError::PolygonMismatch(format!(
                "({},{}) is not a diagonal of the {}-gon",
                d.0,
                d.1,
                n + 1
            )));
        }
    }
    for pair in diags.iter().combinations(2) {
        if crossing(*pair[0], *pair[1]) {
            return Err(ZooError::PolygonMismatch(format!(
                "diagonals ({},{}) and ({},{}) cross",
                pair[0].0, pair[0].1, pair[1].0, pair[1].1
            )));
        }
    }
    Ok(())
}

/// Construct a subdivision from its diagonal list, validating it.
pub fn subdivision(arity: usize, diags: &[(usize, usize)]) -> Result<Subdiv, ZooError> {
    let set: BTreeSet<(usize, usize)> = diags.iter().copied().collect();
    validate_diagonals(arity, &set)?;
    Ok(Subdiv::Diagonals(arity, set))
}

/// Read off the diagonals of a tree: every non-root internal node spanning
/// leaves i..j contributes (i−1, j).
pub fn tree_to_subdivision(t: &PlanarTree) -> Subdiv {
    fn rec(t: &PlanarTree, offset: usize, root: bool, out: &mut BTreeSet<(usize, usize)>) {
        if let PlanarTree::Node(children) = t {
            let span = t.leaves();
            if !root {
                out.insert((offset, offset + span));
            }
            let mut at = offset;
            for c in children {
                rec(c, at, false, out);
                at += c.leaves();
            }
        }
    }
    let mut diags = BTreeSet::new();
    rec(t, 0, true, &mut diags);
    Subdiv::Diagonals(t.leaves(), diags)
}

/// Rebuild the tree: the children of the node bounded by the chord
/// (lo, hi) are the maximal diagonals and bare edges partitioning the arc.
pub fn subdivision_to_tree(d: &Subdiv) -> Result<PlanarTree, ZooError> {
    let (n, diags) = match d {
        Subdiv::Special(_) => {
            return Err(ZooError::PolygonMismatch(
                "the bottom element is not a tree".into(),
            ))
        }
        Subdiv::Diagonals(n, diags) => (*n, diags),
    };
    validate_diagonals(n, diags)?;
    fn build(lo: usize, hi: usize, diags: &BTreeSet<(usize, usize)>) -> PlanarTree {
        if hi == lo + 1 {
            return PlanarTree::Leaf;
        }
        let mut children = Vec::new();
        let mut at = lo;
        while at < hi {
            let next = diags
                .iter()
                .filter(|&&(a, b)| a == at && b <= hi && (at, b) != (lo, hi))
                .map(|&(_, b)| b)
                .max()
                .unwrap_or(at + 1);
            children.push(build(at, next, diags));
            at = next;
        }
        if children.len() == 1 {
            children.pop().unwrap()
        } else {
            PlanarTree::Node(children)
        }
    }
    Ok(build(0, n, diags))
}

/// Grafting of reduced planar rooted trees, with an absorbing bottom per
/// arity, carried on polygon subdivisions.
pub struct SubdivisionOperad;

impl Operad for SubdivisionOperad {
    type Elem = Subdiv;

    fn arity(&self, e: &Subdiv) -> usize {
        match e {
            Subdiv::Special(n) => *n,
            Subdiv::Diagonals(n, _) => *n,
        }
    }

    fn compose(&self, a: &Subdiv, i: usize, b: &Subdiv) -> Result<Subdiv, OperadError> {
        let n = self.arity(a);
        if i == 0 || i > n {
            return Err(OperadError::IndexOutOfRange { index: i, arity: n });
        }
        let m = self.arity(b);
        match (a, b) {
            (Subdiv::Diagonals(..), Subdiv::Diagonals(..)) => {
                let s = subdivision_to_tree(a).map_err(|e| OperadError::Unsupported(e.to_string()))?;
                let t = subdivision_to_tree(b).map_err(|e| OperadError::Unsupported(e.to_string()))?;
                Ok(tree_to_subdivision(&s.graft(i, &t)))
            }
            _ => Ok(Subdiv::Special(n + m - 1)),
        }
    }

    fn unit(&self) -> Option<Subdiv> {
        None
    }

    fn min_arity(&self) -> usize {
        2
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Subdiv>, OperadError> {
        if n < 2 {
            return Ok(Vec::new());
        }
        let mut out: Vec<Subdiv> = PlanarTree::all(n)
            .iter()
            .map(tree_to_subdivision)
            .collect();
        out.push(Subdiv::Special(n));
        out.sort();
        Ok(out)
    }

    fn elem_string(&self, e: &Subdiv) -> String {
        subdivision_string(e)
    }

    fn act(&self, e: &Subdiv, _sigma: &Perm) -> Subdiv {
        e.clone()
    }
}

impl LatticeOperad for SubdivisionOperad {
    fn meet(&self, a: &Subdiv, b: &Subdiv) -> Subdiv {
        let n = self.arity(a);
        debug_assert_eq!(n, self.arity(b));
        match (a, b) {
            (Subdiv::Diagonals(_, d), Subdiv::Diagonals(_, e)) => {
                let union: BTreeSet<(usize, usize)> = d.union(e).copied().collect();
                if union
                    .iter()
                    .combinations(2)
                    .any(|pair| crossing(*pair[0], *pair[1]))
                {
                    Subdiv::Special(n)
                } else {
                    Subdiv::Diagonals(n, union)
                }
            }
            _ => Subdiv::Special(n),
        }
    }

    fn join(&self, a: &Subdiv, b: &Subdiv) -> Subdiv {
        debug_assert_eq!(self.arity(a), self.arity(b));
        match (a, b) {
            (Subdiv::Diagonals(n, d), Subdiv::Diagonals(_, e)) => {
                Subdiv::Diagonals(*n, d.intersection(e).copied().collect())
            }
            (Subdiv::Special(_), other) | (other, Subdiv::Special(_)) => other.clone(),
        }
    }

    fn leq(&self, a: &Subdiv, b: &Subdiv) -> bool {
        match (a, b) {
            (Subdiv::Special(_), _) => true,
            (Subdiv::Diagonals(..), Subdiv::Special(_)) => false,
            (Subdiv::Diagonals(_, d), Subdiv::Diagonals(_, e)) => e.is_subset(d),
        }
    }

    /// Height above the bottom: ∅ has rank 0, a subdivision with k
    /// diagonals has rank n−1−k (triangulations are the atoms).
    fn rank(&self, e: &Subdiv) -> Option<u64> {
        match e {
            Subdiv::Special(_) => Some(0),
            Subdiv::Diagonals(n, d) => Some((n - 1 - d.len()) as u64),
        }
    }
}

/// Render as "[0-2,2-4]" (sorted pairs), "[]" for the undivided polygon,
/// "E" for the bottom element.
pub fn subdivision_string(e: &Subdiv) -> String {
    match e {
        Subdiv::Special(_) => "E".to_string(),
        Subdiv::Diagonals(_, d) => {
            format!("[{}]", d.iter().map(|(a, b)| format!("{a}-{b}")).join(","))
        }
    }
}

/// Parse the output of [`subdivision_string`] against a declared arity.
pub fn parse_subdivision(arity: usize, s: &str) -> Result<Subdiv, ZooError> {
    let t = s.trim();
    if t == "E" || t == "∅" {
        return Ok(Subdiv::Special(arity));
    }
    let bad = || ZooError::PolygonMismatch(format!("cannot read {s:?} as a subdivision"));
    let inner = t
        .strip_prefix('[')
        .and_then(|u| u.strip_suffix(']'))
        .ok_or_else(bad)?;
    let mut diags = Vec::new();
    for piece in inner.split(',').filter(|p| !p.trim().is_empty()) {
        let (a, b) = piece.trim().split_once('-').ok_or_else(bad)?;
        diags.push((
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ));
    }
    subdivision(arity, &diags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tamari::{self, TamariOperad};
    use operad_core::enumerated_window;
    use operad_core::laws::{
        all_pass, check_lattice_compatibility, check_operad_laws, CompatibilityMode,
    };

    #[test]
    fn tree_counts_follow_the_small_schroeder_numbers() {
        let counts: Vec<usize> = (1..=7).map(|n| PlanarTree::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 11, 45, 197, 903]);
    }

    #[test]
    fn tree_codec_round_trips() {
        for n in 2..=6 {
            let mut seen = BTreeSet::new();
            for t in PlanarTree::all(n) {
                let d = tree_to_subdivision(&t);
                if let Subdiv::Diagonals(k, diags) = &d {
                    assert_eq!(*k, n);
                    validate_diagonals(*k, diags).unwrap();
                } else {
                    panic!("trees never encode to the bottom element");
                }
                assert_eq!(subdivision_to_tree(&d).unwrap(), t);
                assert!(seen.insert(d));
            }
        }
    }

    #[test]
    fn grafting_matches_the_diagonal_level_splice() {
        // Independent oracle: relabel the outer diagonals around the gap,
        // shift the inner ones, and add the chord that seals the graft.
        fn direct(op: &SubdivisionOperad, a: &Subdiv, i: usize, b: &Subdiv) -> Subdiv {
            let (n, d) = match a {
                Subdiv::Diagonals(n, d) => (*n, d),
                _ => unreachable!(),
            };
            let (m, e) = match b {
                Subdiv::Diagonals(m, e) => (*m, e),
                _ => unreachable!(),
            };
            let _ = op;
            let move_v = |v: usize| if v <= i - 1 { v } else { v + m - 1 };
            let mut out: BTreeSet<(usize, usize)> =
                d.iter().map(|&(x, y)| (move_v(x), move_v(y))).collect();
            out.extend(e.iter().map(|&(x, y)| (x + i - 1, y + i - 1)));
            out.insert((i - 1, i + m - 1));
            Subdiv::Diagonals(n + m - 1, out)
        }
        let op = SubdivisionOperad;
        for n in 2..=4 {
            for m in 2..=4 {
                for a in op.enumerate(n).unwrap() {
                    for b in op.enumerate(m).unwrap() {
                        if a.is_special() || b.is_special() {
                            continue;
                        }
                        for i in 1..=n {
                            assert_eq!(
                                op.compose(&a, i, &b).unwrap(),
                                direct(&op, &a, i, &b)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn binary_corollas_compose_to_the_square_triangulations() {
        let op = SubdivisionOperad;
        let corolla = tree_to_subdivision(&PlanarTree::node(vec![
            PlanarTree::Leaf,
            PlanarTree::Leaf,
        ]));
        assert_eq!(subdivision_string(&corolla), "[]");
        let left = op.compose(&corolla, 1, &corolla).unwrap();
        let right = op.compose(&corolla, 2, &corolla).unwrap();
        assert_eq!(subdivision_string(&left), "[0-2]");
        assert_eq!(subdivision_string(&right), "[1-3]");
        assert_eq!(
            op.enumerate(3).unwrap(),
            vec![
                Subdiv::Special(3),
                Subdiv::Diagonals(3, BTreeSet::new()),
                subdivision(3, &[(0, 2)]).unwrap(),
                subdivision(3, &[(1, 3)]).unwrap(),
            ]
        );
        // The bottom element absorbs on both sides.
        let bot = Subdiv::Special(2);
        assert_eq!(op.compose(&corolla, 1, &bot).unwrap(), Subdiv::Special(3));
        assert_eq!(op.compose(&bot, 2, &corolla).unwrap(), Subdiv::Special(3));
        assert!(op.compose(&corolla, 3, &corolla).is_err());
    }

    #[test]
    fn the_pentagon_subdivision_lattice() {
        let op = SubdivisionOperad;
        let all = op.enumerate(4).unwrap();
        assert_eq!(all.len(), 12);
        let by_rank = |r: u64| all.iter().filter(|e| op.rank(e) == Some(r)).count();
        assert_eq!(
            (by_rank(3), by_rank(2), by_rank(1), by_rank(0)),
            (1, 5, 2 + 2 + 1, 1)
        );
        // Covering pairs: 5 under the top, two triangulations under each
        // diagonal, and the bottom under each triangulation.
        let mut covers = Vec::new();
        for a in &all {
            for b in &all {
                if a != b && op.leq(a, b) {
                    let between = all
                        .iter()
                        .any(|c| c != a && c != b && op.leq(a, c) && op.leq(c, b));
                    if !between {
                        covers.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        assert_eq!(covers.len(), 20);
        for (a, b) in &covers {
            assert_eq!(op.rank(a).unwrap() + 1, op.rank(b).unwrap());
        }
    }

    #[test]
    fn meets_union_unless_a_crossing_forces_the_bottom() {
        let op = SubdivisionOperad;
        let d1 = subdivision(4, &[(1, 3)]).unwrap();
        let fan = subdivision(4, &[(1, 3), (1, 4)]).unwrap();
        // A shared diagonal does not collapse the meet: the union rule is
        // governed by crossings alone.
        assert_eq!(op.meet(&d1, &fan), fan);
        assert!(op.leq(&fan, &d1));
        let d2 = subdivision(4, &[(0, 2)]).unwrap();
        assert!(crossing((0, 2), (1, 3)));
        assert_eq!(op.meet(&d1, &d2), Subdiv::Special(4));
        assert_eq!(op.join(&d1, &fan), d1);
        assert_eq!(op.join(&d1, &d2), Subdiv::Diagonals(4, BTreeSet::new()));
        assert_eq!(op.join(&Subdiv::Special(4), &d1), d1);
    }

    #[test]
    fn each_component_is_a_lattice() {
        let op = SubdivisionOperad;
        for n in 2..=5 {
            let elems = op.enumerate(n).unwrap();
            for a in &elems {
                assert_eq!(op.meet(a, a), *a);
                assert_eq!(op.join(a, a), *a);
                for b in &elems {
                    assert_eq!(op.meet(a, b), op.meet(b, a));
                    assert_eq!(op.join(a, b), op.join(b, a));
                    assert_eq!(op.join(a, &op.meet(a, b)), *a);
                    assert_eq!(op.meet(a, &op.join(a, b)), *a);
                    assert_eq!(op.leq(a, b), op.meet(a, b) == *a);
                    for c in &elems {
                        assert_eq!(op.meet(&op.meet(a, b), c), op.meet(a, &op.meet(b, c)));
                        assert_eq!(op.join(&op.join(a, b), c), op.join(a, &op.join(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn operad_laws_and_per_argument_compatibility_hold() {
        let op = SubdivisionOperad;
        let window = enumerated_window(&op, 4).unwrap();
        assert!(all_pass(&check_operad_laws(&op, &window).unwrap()));
        assert!(all_pass(
            &check_lattice_compatibility(&op, &window, CompatibilityMode::Full).unwrap()
        ));
    }

    #[test]
    fn atoms_are_triangulations_counted_by_catalan() {
        let op = SubdivisionOperad;
        let catalan = [1usize, 2, 5, 14, 42, 132];
        for (n, &cat) in (2..=7).zip(&catalan) {
            let atoms = op
                .enumerate(n)
                .unwrap()
                .iter()
                .filter(|e| op.rank(e) == Some(1))
                .count();
            assert_eq!(atoms, cat);
            let triangulated = op
                .enumerate(n)
                .unwrap()
                .iter()
                .filter(|e| matches!(e, Subdiv::Diagonals(_, d) if d.len() == n - 2))
                .count();
            assert_eq!(triangulated, cat);
        }
    }

    #[test]
    fn contracting_a_tree_edge_removes_one_diagonal() {
        // Every way of contracting an internal edge of a tree erases exactly
        // the diagonal of the contracted child node.
        for n in 2..=5 {
            for t in PlanarTree::all(n) {
                let d_t = match tree_to_subdivision(&t) {
                    Subdiv::Diagonals(_, d) => d,
                    _ => unreachable!(),
                };
                // Contract every internal non-root node by splicing its
                // children into its parent, tracked via leaf offsets.
                fn walk(
                    t: &PlanarTree,
                    path: Vec<usize>,
                    offset: usize,
                    root: bool,
                    found: &mut Vec<(Vec<usize>, (usize, usize))>,
                ) {
                    if let PlanarTree::Node(children) = t {
                        if !root {
                            found.push((path.clone(), (offset, offset + t.leaves())));
                        }
                        let mut at = offset;
                        for (j, c) in children.iter().enumerate() {
                            let mut p = path.clone();
                            p.push(j);
                            walk(c, p, at, false, found);
                            at += c.leaves();
                        }
                    }
                }
                fn contract_at(t: &PlanarTree, path: &[usize]) -> PlanarTree {
                    match t {
                        PlanarTree::Node(children) => {
                            let j = path[0];
                            let mut kids = children.clone();
                            if path.len() == 1 {
                                let grandkids = match &children[j] {
                                    PlanarTree::Node(g) => g.clone(),
                                    PlanarTree::Leaf => unreachable!(),
                                };
                                kids.splice(j..=j, grandkids);
                            } else {
                                kids[j] = contract_at(&children[j], &path[1..]);
                            }
                            PlanarTree::Node(kids)
                        }
                        PlanarTree::Leaf => unreachable!(),
                    }
                }
                let mut nodes = Vec::new();
                walk(&t, Vec::new(), 0, true, &mut nodes);
                assert_eq!(nodes.len(), d_t.len());
                for (path, diag) in nodes {
                    let contracted = contract_at(&t, &path);
                    let d_c = match tree_to_subdivision(&contracted) {
                        Subdiv::Diagonals(_, d) => d,
                        _ => unreachable!(),
                    };
                    let mut expected = d_t.clone();
                    assert!(expected.remove(&diag));
                    assert_eq!(d_c, expected);
                }
            }
        }
    }

    #[test]
    fn covers_are_single_diagonal_removals_or_bottom_to_atom() {
        let op = SubdivisionOperad;
        for n in 2..=5 {
            let all = op.enumerate(n).unwrap();
            for a in &all {
                for b in &all {
                    if a == b || !op.leq(a, b) {
                        continue;
                    }
                    let between = all
                        .iter()
                        .any(|c| c != a && c != b && op.leq(a, c) && op.leq(c, b));
                    if between {
                        continue;
                    }
                    match (a, b) {
                        (Subdiv::Special(_), Subdiv::Diagonals(_, d)) => {
                            assert_eq!(d.len(), n - 2, "bottom is covered by triangulations");
                        }
                        (Subdiv::Diagonals(_, d), Subdiv::Diagonals(_, e)) => {
                            assert!(e.is_subset(d) && d.len() == e.len() + 1);
                        }
                        _ => panic!("nothing lies above a non-bottom with the bottom on top"),
                    }
                }
            }
        }
    }

    #[test]
    fn tamari_rotations_are_single_diagonal_flips() {
        fn binary_to_planar(t: &tamari::Tree) -> PlanarTree {
            match t {
                tamari::Tree::Leaf => PlanarTree::Leaf,
                tamari::Tree::Node(l, r) => {
                    PlanarTree::node(vec![binary_to_planar(l), binary_to_planar(r)])
                }
            }
        }
        let tam = TamariOperad;
        for n in 2..=6 {
            let ws = tam.enumerate(n).unwrap();
            let mut checked = 0;
            for a in &ws {
                for b in &ws {
                    use operad_core::LatticeOperad as _;
                    if a == b || !tam.leq(a, b) {
                        continue;
                    }
                    let between = ws
                        .iter()
                        .any(|c| c != a && c != b && tam.leq(a, c) && tam.leq(c, b));
                    if between {
                        continue;
                    }
                    let da = match tree_to_subdivision(&binary_to_planar(
                        &tamari::weights_to_tree(a).unwrap(),
                    )) {
                        Subdiv::Diagonals(_, d) => d,
                        _ => unreachable!(),
                    };
                    let db = match tree_to_subdivision(&binary_to_planar(
                        &tamari::weights_to_tree(b).unwrap(),
                    )) {
                        Subdiv::Diagonals(_, d) => d,
                        _ => unreachable!(),
                    };
                    assert_eq!(da.symmetric_difference(&db).count(), 2);
                    checked += 1;
                }
            }
            if n >= 3 {
                assert!(checked > 0);
            }
        }
    }

    #[test]
    fn serialization_round_trips_and_rejects_junk() {
        let op = SubdivisionOperad;
        for n in 2..=5 {
            for e in op.enumerate(n).unwrap() {
                assert_eq!(parse_subdivision(n, &subdivision_string(&e)).unwrap(), e);
            }
        }
        assert_eq!(
            subdivision_string(&subdivision(4, &[(0, 2), (2, 4)]).unwrap()),
            "[0-2,2-4]"
        );
        assert!(parse_subdivision(4, "[0-1]").is_err()); // boundary edge
        assert!(parse_subdivision(4, "[0-4]").is_err()); // marked edge
        assert!(parse_subdivision(4, "[0-2,1-3]").is_err()); // crossing
        assert!(parse_subdivision(4, "0-2").is_err());
    }
}
