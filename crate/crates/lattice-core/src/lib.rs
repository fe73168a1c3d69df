//! Finite and symbolically-presented lattices, monoidal products of lattices,
//! derived lattices (intervals, order ideals, duals), and Hasse-diagram
//! extraction.
//!
//! Everything here is exact: elements are discrete values, order is decided by
//! `meet`, and no floating point appears anywhere.

pub mod derived;
pub mod hasse;
pub mod product;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// The carrier is symbolic (infinite or not enumerable); the requested
    /// operation needs an explicit element list.
    #[error("carrier is not enumerable")]
    InfiniteCarrier,
    /// A construction required a bottom or top element the input lacks.
    #[error("missing {0} element")]
    MissingExtremum(&'static str),
    /// The supplied order is not a lattice (some pair lacks a unique
    /// greatest lower / least upper bound).
    #[error("not a lattice: {0}")]
    NotALattice(String),
}

/// A lattice: a set with binary `meet` and `join`.
///
/// The order is derived from the operations (`a ≤ b ⇔ a ∧ b = a`); `bottom`,
/// `top` and `rank` are optional extras. `elements` enumerates the carrier for
/// finite lattices and reports [`LatticeError::InfiniteCarrier`] for symbolic
/// ones, so law checkers can reject what they cannot sweep.
pub trait Lattice {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        &self.meet(a, b) == a
    }

    fn bottom(&self) -> Option<Self::Elem> {
        None
    }

    fn top(&self) -> Option<Self::Elem> {
        None
    }

    /// Rank of `e` when the lattice is graded; `None` where no grading is
    /// declared.
    fn rank(&self, _e: &Self::Elem) -> Option<u64> {
        None
    }

    /// The full carrier in canonical order, or `InfiniteCarrier`.
    fn elements(&self) -> Result<Vec<Self::Elem>, LatticeError> {
        Err(LatticeError::InfiniteCarrier)
    }

    /// Canonical textual form of an element, used for DOT labels and
    /// deterministic ordering of emitted artifacts.
    fn elem_string(&self, e: &Self::Elem) -> String;
}

/// A finite lattice given by an explicit carrier and a `leq` table.
///
/// Meet and join tables are computed (and validated to exist uniquely) at
/// construction time. If every covering step raises the longest-chain length
/// by exactly one, the induced grading is stored and served via `rank`.
#[derive(Debug, Clone)]
pub struct ExplicitLattice {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    rank: Option<Vec<u64>>,
}

impl ExplicitLattice {
    /// Build from element names and an order predicate. Fails if `leq` is not
    /// a partial order or if some pair lacks a unique meet or join.
    pub fn from_leq<F>(names: Vec<String>, leq: F) -> Result<Self, LatticeError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = names.len();
        let mut table = vec![vec![false; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = leq(i, j);
            }
        }
        // Partial-order sanity.
        for i in 0..n {
            if !table[i][i] {
                return Err(LatticeError::NotALattice(format!(
                    "leq not reflexive at {}",
                    names[i]
                )));
            }
            for j in 0..n {
                if i != j && table[i][j] && table[j][i] {
                    return Err(LatticeError::NotALattice(format!(
                        "leq not antisymmetric on {}, {}",
                        names[i], names[j]
                    )));
                }
                for k in 0..n {
                    if table[i][j] && table[j][k] && !table[i][k] {
                        return Err(LatticeError::NotALattice(format!(
                            "leq not transitive on {}, {}, {}",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }
        let meet = Self::bound_table(&table, n, true, &names)?;
        let join = Self::bound_table(&table, n, false, &names)?;
        let rank = Self::grading(&table, n);
        Ok(ExplicitLattice {
            names,
            leq: table,
            meet,
            join,
            rank,
        })
    }

    /// Unique greatest lower bounds (`lower = true`) or least upper bounds.
    fn bound_table(
        leq: &[Vec<bool>],
        n: usize,
        lower: bool,
        names: &[String],
    ) -> Result<Vec<Vec<usize>>, LatticeError> {
        let below = |x: usize, y: usize| if lower { leq[x][y] } else { leq[y][x] };
        let mut out = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let bounds: Vec<usize> =
                    (0..n).filter(|&c| below(c, i) && below(c, j)).collect();
                let best: Vec<usize> = bounds
                    .iter()
                    .copied()
                    .filter(|&c| bounds.iter().all(|&d| below(d, c)))
                    .collect();
                match best.as_slice() {
                    [b] => out[i][j] = *b,
                    _ => {
                        let kind = if lower { "meet" } else { "join" };
                        return Err(LatticeError::NotALattice(format!(
                            "no unique {kind} for {}, {}",
                            names[i], names[j]
                        )));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Longest-chain ranks when they grade the covers, else `None`.
    fn grading(leq: &[Vec<bool>], n: usize) -> Option<Vec<u64>> {
        let lt = |a: usize, b: usize| a != b && leq[a][b];
        let mut rank = vec![0u64; n];
        // Longest chain from below, computed by relaxation (n is tiny).
        for _ in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if lt(a, b) && rank[b] < rank[a] + 1 {
                        rank[b] = rank[a] + 1;
                    }
                }
            }
        }
        let covers = |a: usize, b: usize| lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b));
        for a in 0..n {
            for b in 0..n {
                if covers(a, b) && rank[b] != rank[a] + 1 {
                    return None;
                }
            }
        }
        Some(rank)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl Lattice for ExplicitLattice {
    type Elem = usize;

    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.meet[*a][*b]
    }

    fn join(&self, a: &usize, b: &usize) -> usize {
        self.join[*a][*b]
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.leq[*a][*b]
    }

    fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&b| (0..self.len()).all(|x| self.leq[b][x]))
    }

    fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|x| self.leq[x][t]))
    }

    fn rank(&self, e: &usize) -> Option<u64> {
        self.rank.as_ref().map(|r| r[*e])
    }

    fn elements(&self) -> Result<Vec<usize>, LatticeError> {
        Ok((0..self.len()).collect())
    }

    fn elem_string(&self, e: &usize) -> String {
        self.names[*e].clone()
    }
}

/// The chain 0 < 1 < … < n−1.
pub fn chain(n: usize) -> ExplicitLattice {
    let names = (0..n).map(|i| i.to_string()).collect();
    ExplicitLattice::from_leq(names, |a, b| a <= b).expect("a chain is a lattice")
}

/// The two-element lattice 𝟎 < 𝟏 (unit of the lower truncated product).
pub fn b1() -> ExplicitLattice {
    chain(2)
}

/// The one-element lattice (unit of the cartesian product).
pub fn singleton() -> ExplicitLattice {
    chain(1)
}

/// The four-element diamond: bottom, two incomparable middles, top.
pub fn diamond() -> ExplicitLattice {
    let names = ["0", "a", "b", "1"].map(String::from).to_vec();
    ExplicitLattice::from_leq(names, |x, y| x == y || x == 0 || y == 3)
        .expect("the diamond is a lattice")
}

/// First violated lattice law among idempotency, commutativity,
/// associativity, absorption, `leq`-vs-`meet` consistency, and (when a
/// grading is declared) rank increments along covers.
pub fn verify_lattice_laws<L: Lattice>(l: &L) -> Result<(), String> {
    let elems = l.elements().map_err(|e| e.to_string())?;
    let s = |e: &L::Elem| l.elem_string(e);
    for a in &elems {
        if &l.meet(a, a) != a || &l.join(a, a) != a {
            return Err(format!("idempotency fails at {}", s(a)));
        }
    }
    for a in &elems {
        for b in &elems {
            if l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a) {
                return Err(format!("commutativity fails at {}, {}", s(a), s(b)));
            }
            if l.join(a, &l.meet(a, b)) != *a || l.meet(a, &l.join(a, b)) != *a {
                return Err(format!("absorption fails at {}, {}", s(a), s(b)));
            }
            if l.leq(a, b) != (&l.meet(a, b) == a) {
                return Err(format!("leq inconsistent with meet at {}, {}", s(a), s(b)));
            }
        }
    }
    for a in &elems {
        for b in &elems {
            for c in &elems {
                if l.meet(&l.meet(a, b), c) != l.meet(a, &l.meet(b, c))
                    || l.join(&l.join(a, b), c) != l.join(a, &l.join(b, c))
                {
                    return Err(format!(
                        "associativity fails at {}, {}, {}",
                        s(a),
                        s(b),
                        s(c)
                    ));
                }
            }
        }
    }
    if elems.iter().any(|e| l.rank(e).is_some()) {
        for (a, b) in hasse::covering_pairs(l, &elems) {
            match (l.rank(&a), l.rank(&b)) {
                (Some(ra), Some(rb)) if rb == ra + 1 => {}
                _ => {
                    return Err(format!(
                        "rank does not step by one on cover {} ⋖ {}",
                        s(&a),
                        s(&b)
                    ))
                }
            }
        }
    }
    Ok(())
}

/// Search for a lattice isomorphism between two finite lattices; returns the
/// element mapping (indices into the canonical carriers) if one exists.
///
/// Backtracking over degree/rank-compatible candidates; meant for the small
/// instances used in unit-object tests, not for large lattices.
pub fn find_isomorphism<A: Lattice, B: Lattice>(
    a: &A,
    b: &B,
) -> Result<Option<Vec<usize>>, LatticeError> {
    let ea = a.elements()?;
    let eb = b.elements()?;
    if ea.len() != eb.len() {
        return Ok(None);
    }
    let n = ea.len();
    let fingerprint = |leq: &dyn Fn(usize, usize) -> bool| -> Vec<(usize, usize)> {
        (0..n)
            .map(|i| {
                let down = (0..n).filter(|&j| leq(j, i)).count();
                let up = (0..n).filter(|&j| leq(i, j)).count();
                (down, up)
            })
            .collect()
    };
    let leq_a = |i: usize, j: usize| a.leq(&ea[i], &ea[j]);
    let leq_b = |i: usize, j: usize| b.leq(&eb[i], &eb[j]);
    let fa = fingerprint(&leq_a);
    let fb = fingerprint(&leq_b);
    {
        let mut sa = fa.clone();
        let mut sb = fb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
    }

    // Index lookup for B's meet/join so the hom condition is checked on
    // indices.
    let mut pos_b: HashMap<&B::Elem, usize> = HashMap::new();
    for (j, e) in eb.iter().enumerate() {
        pos_b.insert(e, j);
    }
    let meet_b = |i: usize, j: usize| pos_b[&b.meet(&eb[i], &eb[j])];
    let join_b = |i: usize, j: usize| pos_b[&b.join(&eb[i], &eb[j])];
    let mut pos_a: HashMap<&A::Elem, usize> = HashMap::new();
    for (i, e) in ea.iter().enumerate() {
        pos_a.insert(e, i);
    }
    let meet_a = |i: usize, j: usize| pos_a[&a.meet(&ea[i], &ea[j])];
    let join_a = |i: usize, j: usize| pos_a[&a.join(&ea[i], &ea[j])];

    fn backtrack(
        i: usize,
        n: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        fa: &[(usize, usize)],
        fb: &[(usize, usize)],
        meet_a: &dyn Fn(usize, usize) -> usize,
        join_a: &dyn Fn(usize, usize) -> usize,
        meet_b: &dyn Fn(usize, usize) -> usize,
        join_b: &dyn Fn(usize, usize) -> usize,
    ) -> bool {
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || fa[i] != fb[cand] {
                continue;
            }
            map.push(cand);
            used[cand] = true;
            // Hom condition against all previously assigned elements
            // (including i itself; meets/joins of assigned pairs must land
            // on assigned images consistently whenever they are assigned).
            let ok = (0..=i).all(|j| {
                let (mi, ji) = (meet_a(i, j), join_a(i, j));
                let (mb, jb) = (meet_b(map[i], map[j]), join_b(map[i], map[j]));
                (mi > i || map[mi] == mb) && (ji > i || map[ji] == jb)
            });
            if ok
                && backtrack(
                    i + 1,
                    n,
                    map,
                    used,
                    fa,
                    fb,
                    meet_a,
                    join_a,
                    meet_b,
                    join_b,
                )
            {
                return true;
            }
            map.pop();
            used[cand] = false;
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if backtrack(
        0, n, &mut map, &mut used, &fa, &fb, &meet_a, &join_a, &meet_b, &join_b,
    ) {
        // The backtracking defers meet/join targets not yet assigned; confirm
        // the finished map is a genuine isomorphism.
        let full = (0..n).all(|i| {
            (0..n).all(|j| {
                map[meet_a(i, j)] == meet_b(map[i], map[j])
                    && map[join_a(i, j)] == join_b(map[i], map[j])
            })
        });
        if full {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_a_lattice() {
        let c = chain(5);
        verify_lattice_laws(&c).unwrap();
        assert_eq!(c.bottom(), Some(0));
        assert_eq!(c.top(), Some(4));
        assert_eq!(c.rank(&3), Some(3));
    }

    #[test]
    fn diamond_is_a_lattice() {
        let d = diamond();
        verify_lattice_laws(&d).unwrap();
        let (a, b) = (d.index_of("a").unwrap(), d.index_of("b").unwrap());
        assert_eq!(d.meet(&a, &b), d.index_of("0").unwrap());
        assert_eq!(d.join(&a, &b), d.index_of("1").unwrap());
    }

    #[test]
    fn non_lattice_rejected() {
        // Two maximal elements over two minimal ones: no unique joins.
        let names = ["a", "b", "c", "d"].map(String::from).to_vec();
        let err = ExplicitLattice::from_leq(names, |x, y| x == y || (x < 2 && y >= 2));
        assert!(matches!(err, Err(LatticeError::NotALattice(_))));
    }

    #[test]
    fn isomorphism_detects_chains_and_rejects_diamond() {
        let c = chain(4);
        let c2 = chain(4);
        assert!(find_isomorphism(&c, &c2).unwrap().is_some());
        let d = diamond();
        assert!(find_isomorphism(&c, &d).unwrap().is_none());
    }
}
