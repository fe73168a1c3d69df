//! Closing a set of generators into a suboperad: compositions within an
//! arity bound, optionally meets/joins within each arity, optionally the
//! symmetric-group action.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::perm::Perm;
use crate::{LatticeOperad, OperadError};

#[derive(Debug, Clone)]
pub struct GenerationConfig {
    /// Discard composition results above this arity.
    pub nmax: usize,
    /// Close each arity under meets and joins.
    pub close_meet_join: bool,
    /// Close each arity under the symmetric-group action.
    pub close_symmetric: bool,
    /// Abort with `BudgetExceeded` after this many elementary operations;
    /// guards against generating sets that are infinite within an arity.
    pub budget: Option<u64>,
}

impl GenerationConfig {
    pub fn new(nmax: usize) -> Self {
        GenerationConfig {
            nmax,
            close_meet_join: true,
            close_symmetric: false,
            budget: None,
        }
    }
}

/// The per-arity carriers of the suboperad generated by `generators`.
///
/// Worklist closure: every new element is paired for composition with
/// everything already present (both orders, every slot), meet/joined with
/// its arity-mates, and hit with adjacent transpositions; anything unseen
/// joins the queue.
pub fn generate_suboperad<O: LatticeOperad>(
    op: &O,
    generators: &[O::Elem],
    cfg: &GenerationConfig,
) -> Result<BTreeMap<usize, BTreeSet<O::Elem>>, OperadError> {
    let mut sets: BTreeMap<usize, BTreeSet<O::Elem>> = BTreeMap::new();
    let mut queue: VecDeque<O::Elem> = VecDeque::new();
    let mut ops_left = cfg.budget.unwrap_or(u64::MAX);

    let admit = |sets: &mut BTreeMap<usize, BTreeSet<O::Elem>>,
                     queue: &mut VecDeque<O::Elem>,
                     arity: usize,
                     e: O::Elem| {
        if arity <= cfg.nmax && sets.entry(arity).or_default().insert(e.clone()) {
            queue.push_back(e);
        }
    };

    for g in generators {
        admit(&mut sets, &mut queue, op.arity(g), g.clone());
    }

    let spend = |ops_left: &mut u64, cost: u64| -> Result<(), OperadError> {
        if *ops_left < cost {
            return Err(OperadError::BudgetExceeded(cfg.budget.unwrap_or(0)));
        }
        *ops_left -= cost;
        Ok(())
    };

    while let Some(x) = queue.pop_front() {
        let mx = op.arity(&x);

        let partners: Vec<O::Elem> = sets
            .values()
            .flat_map(|s| s.iter().cloned())
            .collect();
        for y in &partners {
            let my = op.arity(y);
            if mx + my - 1 <= cfg.nmax {
                for i in 1..=mx {
                    spend(&mut ops_left, 1)?;
                    let z = op.compose(&x, i, y)?;
                    admit(&mut sets, &mut queue, mx + my - 1, z);
                }
                for j in 1..=my {
                    spend(&mut ops_left, 1)?;
                    let z = op.compose(y, j, &x)?;
                    admit(&mut sets, &mut queue, mx + my - 1, z);
                }
            }
            if cfg.close_meet_join && my == mx {
                spend(&mut ops_left, 2)?;
                let lo = op.meet(&x, y);
                let hi = op.join(&x, y);
                admit(&mut sets, &mut queue, mx, lo);
                admit(&mut sets, &mut queue, mx, hi);
            }
        }

        if cfg.close_symmetric {
            for t in Perm::adjacent_transpositions(mx) {
                spend(&mut ops_left, 1)?;
                let z = op.act(&x, &t);
                admit(&mut sets, &mut queue, mx, z);
            }
        }
    }

    Ok(sets)
}
