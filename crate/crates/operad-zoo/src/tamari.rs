//! The Tamari lattices presented by weight sequences: planar binary trees
//! encode as integer vectors via in-order left-subtree leaf counts, grafting
//! becomes a closed-form splice-and-shift, meets are coordinatewise minima,
//! and joins normalize the coordinatewise maximum through the closure `h`.

use itertools::Itertools;
use operad_core::{LatticeOperad, Operad, OperadError};

use crate::ZooError;

/// A planar rooted binary tree; arities count leaves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// All planar binary trees with n leaves (Catalan(n−1) of them), in a
    /// deterministic order by left-subtree size.
    pub fn all(n: usize) -> Vec<Tree> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![Tree::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            for l in Tree::all(k) {
                for r in Tree::all(n - k) {
                    out.push(Tree::node(l.clone(), r));
                }
            }
        }
        out
    }

    /// Replace the i-th leaf (1-based, left to right) by the given tree.
    pub fn graft(&self, i: usize, other: &Tree) -> Result<Tree, ZooError> {
        match self {
            Tree::Leaf if i == 1 => Ok(other.clone()),
            Tree::Leaf => Err(ZooError::LengthMismatch(i, 1)),
            Tree::Node(l, r) => {
                let nl = l.leaves();
                if i <= nl {
                    Ok(Tree::node(l.graft(i, other)?, (**r).clone()))
                } else {
                    Ok(Tree::node((**l).clone(), r.graft(i - nl, other)?))
                }
            }
        }
    }
}

/// The weight sequence of a tree: the left subtree's weights, then the
/// right subtree's weights with the final entry replaced by the total leaf
/// count.
pub fn tree_to_weights(t: &Tree) -> Vec<u64> {
    match t {
        Tree::Leaf => vec![1],
        Tree::Node(l, r) => {
            let mut w = tree_to_weights(l);
            let mut rest = tree_to_weights(r);
            *rest.last_mut().expect("nonempty weights") = t.leaves() as u64;
            w.extend(rest);
            w
        }
    }
}

/// Check w₁ = 1, wₙ = n, wⱼ ≤ j, and the slope condition
/// i − j ≤ wᵢ − wⱼ for all i < n and i − wᵢ + 1 ≤ j < i.
pub fn is_weight_sequence(w: &[u64]) -> bool {
    let n = w.len();
    if n == 0 || w[0] != 1 || w[n - 1] != n as u64 {
        return false;
    }
    for (idx, &wi) in w.iter().enumerate() {
        let i = idx + 1;
        if wi < 1 || wi > i as u64 {
            return false;
        }
    }
    for i in 1..n {
        let wi = w[i - 1];
        let lo = (i as i64 - wi as i64 + 1).max(1) as usize;
        for j in lo..i {
            if wi < w[j - 1] + (i - j) as u64 {
                return false;
            }
        }
    }
    true
}

fn validate_weights(w: &[u64]) -> Result<(), ZooError> {
    if is_weight_sequence(w) {
        Ok(())
    } else {
        Err(ZooError::NotAWeightSequence(format!("{w:?}")))
    }
}

/// Parse a comma-separated weight sequence such as "1,1,3", rejecting
/// inputs that break the slope condition.
pub fn parse_weights(s: &str) -> Result<Vec<u64>, ZooError> {
    let w: Vec<u64> = s
        .trim()
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| ZooError::NotAWeightSequence(s.to_string()))
        })
        .collect::<Result<_, _>>()?;
    validate_weights(&w)?;
    Ok(w)
}

/// Rebuild the tree from its weight sequence. The split point of the root
/// is the largest index r < n with w_r = r — the longest proper prefix that
/// is itself a weight sequence.
pub fn weights_to_tree(w: &[u64]) -> Result<Tree, ZooError> {
    validate_weights(w)?;
    fn rebuild(w: &[u64]) -> Tree {
        let n = w.len();
        if n == 1 {
            return Tree::Leaf;
        }
        let r = (1..n)
            .rev()
            .find(|&r| w[r - 1] == r as u64)
            .expect("w₁ = 1 always splits");
        let left = rebuild(&w[..r]);
        let mut right_w = w[r..].to_vec();
        *right_w.last_mut().expect("nonempty") = (n - r) as u64;
        Tree::node(left, rebuild(&right_w))
    }
    Ok(rebuild(w))
}

/// Grafting in closed form on weight sequences:
/// u ∘ᵢ v = (u₁,…,u_{i−1}, v₁,…,v_{n−1}, u′ᵢ,…,u′_m) with
/// u′ⱼ = uⱼ + n − 1 when uⱼ ≥ j − i + 1, and u′ⱼ = uⱼ otherwise.
pub fn tamari_compose(u: &[u64], i: usize, v: &[u64]) -> Result<Vec<u64>, OperadError> {
    let m = u.len();
    if i == 0 || i > m {
        return Err(OperadError::IndexOutOfRange { index: i, arity: m });
    }
    let n = v.len();
    let mut out = Vec::with_capacity(m + n - 1);
    out.extend_from_slice(&u[..i - 1]);
    out.extend_from_slice(&v[..n - 1]);
    for j in i..=m {
        let uj = u[j - 1];
        if uj >= (j - i + 1) as u64 {
            out.push(uj + n as u64 - 1);
        } else {
            out.push(uj);
        }
    }
    Ok(out)
}

/// Membership in the normalization domain L(n): first entry 1, last entry
/// n, and 1 ≤ uᵢ ≤ i in between.
pub fn in_normalization_domain(u: &[u64]) -> bool {
    let n = u.len();
    n >= 1
        && u[0] == 1
        && u[n - 1] == n as u64
        && u.iter().enumerate().all(|(idx, &x)| x >= 1 && x <= (idx + 1) as u64)
}

/// The closure h: the least weight sequence above u in the product order.
/// zᵢ is the maximum of uᵢ and zⱼ + i − j over the window i − uᵢ < j < i.
pub fn normalize_h(u: &[u64]) -> Result<Vec<u64>, ZooError> {
    if !in_normalization_domain(u) {
        return Err(ZooError::NotInL(format!("{u:?}")));
    }
    let n = u.len();
    let mut z = vec![0u64; n];
    for i in 1..=n {
        let ui = u[i - 1];
        let mut best = ui;
        let lo = (i as i64 - ui as i64 + 1).max(1) as usize;
        for j in lo..i {
            best = best.max(z[j - 1] + (i - j) as u64);
        }
        z[i - 1] = best;
    }
    debug_assert!(is_weight_sequence(&z), "h left the weight sequences: {z:?}");
    Ok(z)
}

/// Coordinatewise minimum; weight sequences are closed under it.
pub fn weight_meet(u: &[u64], v: &[u64]) -> Result<Vec<u64>, ZooError> {
    if u.len() != v.len() {
        return Err(ZooError::LengthMismatch(u.len(), v.len()));
    }
    Ok(u.iter().zip(v).map(|(&x, &y)| x.min(y)).collect())
}

/// h applied to the coordinatewise maximum.
pub fn weight_join(u: &[u64], v: &[u64]) -> Result<Vec<u64>, ZooError> {
    if u.len() != v.len() {
        return Err(ZooError::LengthMismatch(u.len(), v.len()));
    }
    let top: Vec<u64> = u.iter().zip(v).map(|(&x, &y)| x.max(y)).collect();
    normalize_h(&top)
}

/// The Tamari operad: arity-n component W(n), the weight sequences of
/// planar binary trees, composing by [`tamari_compose`]. Non-symmetric;
/// the components are unranked lattices.
pub struct TamariOperad;

impl Operad for TamariOperad {
    type Elem = Vec<u64>;

    fn arity(&self, e: &Vec<u64>) -> usize {
        e.len()
    }

    fn compose(&self, a: &Vec<u64>, i: usize, b: &Vec<u64>) -> Result<Vec<u64>, OperadError> {
        tamari_compose(a, i, b)
    }

    fn unit(&self) -> Option<Vec<u64>> {
        Some(vec![1])
    }

    fn enumerate(&self, n: usize) -> Result<Vec<Vec<u64>>, OperadError> {
        let mut all: Vec<Vec<u64>> = Tree::all(n).iter().map(tree_to_weights).collect();
        all.sort();
        Ok(all)
    }

    fn elem_string(&self, e: &Vec<u64>) -> String {
        e.iter().join(",")
    }
}

impl LatticeOperad for TamariOperad {
    fn meet(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        weight_meet(a, b).expect("equal arities")
    }

    fn join(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        weight_join(a, b).expect("equal arities")
    }

    fn leq(&self, a: &Vec<u64>, b: &Vec<u64>) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }
}
