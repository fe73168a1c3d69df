//! Grid walks from the origin with a declared finite step set S ⊂ ℤ^d,
//! composing by inserting one walk at a node of another (an n-step walk
//! has n+1 nodes and sits in arity n+1). Includes the boundary-walk codec
//! for integer partitions (trace the Young diagram from bottom-left to
//! top-right counterclockwise) and the hook-shaped generators J_{a,b} of
//! a horizontal steps followed by b vertical ones.

use itertools::Itertools;
use operad_core::perm::Perm;
use operad_core::word::gap_insert;
use operad_core::{Operad, OperadError};

use crate::ZooError;

/// A walk: its step sequence, each step a point of ℤ^d.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridWalk {
    pub steps: Vec<Vec<i64>>,
}

/// Walks with steps drawn from a fixed finite S ⊂ ℤ^d.
#[derive(Debug, Clone)]
pub struct WalkOperad {
    pub dim: usize,
    step_set: Vec<Vec<i64>>,
}

impl WalkOperad {
    pub fn new(steps: &[Vec<i64>]) -> Result<WalkOperad, ZooError> {
        let dim = match steps.first() {
            Some(s) => s.len(),
            None => {
                return Err(ZooError::StepNotInS(
                    "the step set must be non-empty".into(),
                ))
            }
        };
        if steps.iter().any(|s| s.len() != dim) {
            return Err(ZooError::StepNotInS(
                "all steps must share one dimension".into(),
            ));
        }
        let mut step_set = steps.to_vec();
        step_set.sort();
        step_set.dedup();
        Ok(WalkOperad { dim, step_set })
    }

    pub fn step_set(&self) -> &[Vec<i64>] {
        &self.step_set
    }

    /// Build a walk after checking every step against the step set.
    pub fn walk(&self, steps: &[Vec<i64>]) -> Result<GridWalk, ZooError> {
        for s in steps {
            if !self.step_set.contains(s) {
                return Err(ZooError::StepNotInS(format!(
                    "step ({}) is not available",
                    s.iter().join(",")
                )));
            }
        }
        Ok(GridWalk {
            steps: steps.to_vec(),
        })
    }
}

/// North-east walks: S = {(1,0), (0,1)}.
pub fn ne_walks() -> WalkOperad {
    WalkOperad::new(&[vec![1, 0], vec![0, 1]]).unwrap()
}

/// Delannoy walks: S = {(1,0), (0,1), (1,1)}.
pub fn delannoy_walks() -> WalkOperad {
    WalkOperad::new(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
}

impl Operad for WalkOperad {
    type Elem = GridWalk;

    fn arity(&self, e: &GridWalk) -> usize {
        e.steps.len() + 1
    }

    fn compose(&self, p: &GridWalk, i: usize, q: &GridWalk) -> Result<GridWalk, OperadError> {
        debug_assert!(p.steps.iter().chain(&q.steps).all(|s| self.step_set.contains(s)));
        Ok(GridWalk {
            steps: gap_insert(&p.steps, i, &q.steps)?,
        })
    }

    fn unit(&self) -> Option<GridWalk> {
        Some(GridWalk { steps: Vec::new() })
    }

    fn enumerate(&self, n: usize) -> Result<Vec<GridWalk>, OperadError> {
        if n == 0 {
            return Ok(Vec::new());
        }
        Ok((0..n - 1)
            .map(|_| self.step_set.iter().cloned())
            .multi_cartesian_product()
            .map(|steps| GridWalk { steps })
            .chain((n == 1).then(|| GridWalk { steps: Vec::new() }))
            .sorted()
            .collect())
    }

    fn act(&self, e: &GridWalk, _sigma: &Perm) -> GridWalk {
        e.clone()
    }

    fn elem_string(&self, e: &GridWalk) -> String {
        walk_string(e)
    }
}

/// Render as "1,0;0,1;1,1" (steps joined by ';'), or "e" for the empty walk.
pub fn walk_string(w: &GridWalk) -> String {
    if w.steps.is_empty() {
        "e".to_string()
    } else {
        w.steps.iter().map(|s| s.iter().join(",")).join(";")
    }
}

/// Parse the output of [`walk_string`], validating steps against `op`.
pub fn parse_walk(op: &WalkOperad, s: &str) -> Result<GridWalk, ZooError> {
    let t = s.trim();
    if t == "e" {
        return Ok(GridWalk { steps: Vec::new() });
    }
    let mut steps = Vec::new();
    for piece in t.split(';') {
        let step: Vec<i64> = piece
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| ZooError::StepNotInS(format!("cannot read step {piece:?}")))
            })
            .collect::<Result<_, _>>()?;
        steps.push(step);
    }
    op.walk(&steps)
}

/// The hook J_{a,b}: a right steps then b up steps (a, b ≥ 1), an
/// (a+b)-step NE walk of arity a+b+1.
pub fn hook(a: usize, b: usize) -> GridWalk {
    debug_assert!(a >= 1 && b >= 1);
    let mut steps = vec![vec![1, 0]; a];
    steps.extend(vec![vec![0, 1]; b]);
    GridWalk { steps }
}

/// Trace the boundary of the Young diagram of a partition (weakly
/// decreasing positive parts) from the bottom-left corner to the top-right
/// one: λ_k right steps, then for each higher row an up step followed by
/// the row's overhang, and a final up step along the top row.
pub fn partition_to_walk(parts: &[u64]) -> Result<GridWalk, ZooError> {
    if parts.is_empty()
        || parts.iter().any(|&p| p == 0)
        || parts.windows(2).any(|w| w[0] < w[1])
    {
        return Err(ZooError::InvalidPartitionShape(format!(
            "({}) is not a partition with positive weakly decreasing parts",
            parts.iter().join(",")
        )));
    }
    let mut steps = Vec::new();
    for j in (0..parts.len()).rev() {
        let overhang = parts[j] - parts.get(j + 1).copied().unwrap_or(0);
        steps.extend(vec![vec![1, 0]; overhang as usize]);
        if j > 0 {
            steps.push(vec![0, 1]);
        }
    }
    steps.push(vec![0, 1]);
    Ok(GridWalk { steps })
}

/// Inverse of [`partition_to_walk`]: an NE walk ending in an up step whose
/// initial run has at least one right step.
pub fn walk_to_partition(w: &GridWalk) -> Result<Vec<u64>, ZooError> {
    let bad = |msg: &str| ZooError::InvalidPartitionShape(format!("{msg}: {}", walk_string(w)));
    let mut runs = vec![0u64];
    for s in &w.steps {
        match s.as_slice() {
            [1, 0] => *runs.last_mut().unwrap() += 1,
            [0, 1] => runs.push(0),
            _ => return Err(bad("not a north-east walk")),
        }
    }
    if runs.last() != Some(&0) {
        return Err(bad("a boundary walk ends with an up step"));
    }
    runs.pop();
    if runs.first() == Some(&0) || runs.is_empty() {
        return Err(bad("a boundary walk starts along the smallest part"));
    }
    // Partial sums of the runs, largest part last; report top row first.
    let mut parts: Vec<u64> = runs
        .iter()
        .scan(0u64, |acc, &r| {
            *acc += r;
            Some(*acc)
        })
        .collect();
    parts.reverse();
    Ok(parts)
}
