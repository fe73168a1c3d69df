//! Integer partitions as a non-unital suboperad of gap insertion over ℕ₀.
//! A tuple (d₁,…,d_{k−1}) with d_{k−1} > 0 encodes the partition with parts
//! λⱼ = dⱼ + … + d_{k−1}; composition inserts the inner tuple between two
//! outer gaps, the order is the product order on tuples, and two companion
//! presentations ride along: the conjugate form 1^{d₁}2^{d₂}⋯ and the
//! distinct-parts suboperad with its box-complement anti-automorphism.

use itertools::Itertools;
use operad_core::word::gap_insert;
use operad_core::{LatticeOperad, Operad, OperadError, Window};

use crate::ZooError;

/// Partition from its difference tuple: λⱼ = dⱼ + … + d_{k−1}.
pub fn tuple_to_partition(d: &[u64]) -> Vec<u64> {
    let mut lambda = vec![0u64; d.len()];
    let mut acc = 0;
    for j in (0..d.len()).rev() {
        acc += d[j];
        lambda[j] = acc;
    }
    lambda
}

/// Difference tuple of a partition with all parts positive.
pub fn partition_to_tuple(lambda: &[u64]) -> Result<Vec<u64>, ZooError> {
    let bad = || ZooError::InvalidPartitionShape(format!("{lambda:?}"));
    if lambda.is_empty() || *lambda.last().unwrap() == 0 {
        return Err(bad());
    }
    let mut d = Vec::with_capacity(lambda.len());
    for j in 0..lambda.len() {
        let next = lambda.get(j + 1).copied().unwrap_or(0);
        if lambda[j] < next {
            return Err(bad());
        }
        d.push(lambda[j] - next);
    }
    Ok(d)
}

/// Whether the tuple is a carrier element: nonempty with positive last
/// entry (equivalently, its partition has exactly k−1 positive parts).
pub fn is_partition_tuple(d: &[u64]) -> bool {
    d.last().is_some_and(|&last| last > 0)
}

/// Composition written on the partitions themselves: add μ₁ to the first
/// i parts, then splice in λᵢ + μ₂, …, λᵢ + μ_{l−1}, then keep λᵢ, …
/// (for i = k, add μ₁ everywhere and append all of μ). Agrees with gap
/// insertion of the difference tuples.
pub fn partition_compose(
    lambda: &[u64],
    i: usize,
    mu: &[u64],
) -> Result<Vec<u64>, OperadError> {
    let k = lambda.len() + 1;
    if i == 0 || i > k {
        return Err(OperadError::IndexOutOfRange { index: i, arity: k });
    }
    let mut out = Vec::with_capacity(lambda.len() + mu.len());
    if i == k {
        out.extend(lambda.iter().map(|&x| x + mu[0]));
        out.extend_from_slice(mu);
    } else {
        out.extend(lambda[..i].iter().map(|&x| x + mu[0]));
        out.extend(mu[1..].iter().map(|&y| lambda[i - 1] + y));
        out.extend_from_slice(&lambda[i - 1..]);
    }
    Ok(out)
}

/// Conjugate partition (transpose of the Young diagram).
pub fn conjugate(lambda: &[u64]) -> Vec<u64> {
    let cols = lambda.first().copied().unwrap_or(0);
    (1..=cols)
        .map(|c| lambda.iter().filter(|&&x| x >= c).count() as u64)
        .collect()
}

/// Box complement of a distinct-parts partition: reverse the difference
/// tuple, i.e. λ^#ⱼ = λ₁ − λ_{k−j+1} with λ_k = 0.
pub fn box_complement(d: &[u64]) -> Result<Vec<u64>, ZooError> {
    if !d.iter().all(|&x| x > 0) {
        return Err(ZooError::NotDistinctParts(format!(
            "{:?}",
            tuple_to_partition(d)
        )));
    }
    let mut rev = d.to_vec();
    rev.reverse();
    Ok(rev)
}

/// Parenthesized weakly-decreasing rendering, e.g. "(5,4,4,2,1,1)".
pub fn partition_string(d: &[u64]) -> String {
    format!("({})", tuple_to_partition(d).iter().join(","))
}

/// Parse "(5,4,4,2,1,1)" back to a difference tuple.
pub fn parse_partition(s: &str) -> Result<Vec<u64>, ZooError> {
    let bad = || ZooError::InvalidPartitionShape(s.to_string());
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(bad)?;
    let lambda: Vec<u64> = inner
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    partition_to_tuple(&lambda)
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

/// Multiplicative rendering 1^{d₁}2^{d₂}⋯ with superscript exponents and
/// zero exponents skipped, e.g. "1¹3²4¹6¹".
pub fn multiplicative_string(d: &[u64]) -> String {
    let mut out = String::new();
    for (idx, &mult) in d.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        out.push_str(&(idx + 1).to_string());
        for c in mult.to_string().chars() {
            out.push(SUPERSCRIPTS[c.to_digit(10).unwrap() as usize]);
        }
    }
    out
}

/// Parse the multiplicative rendering back to a difference tuple.
pub fn parse_multiplicative(s: &str) -> Result<Vec<u64>, ZooError> {
    let bad = || ZooError::InvalidPartitionShape(s.to_string());
    let mut pairs: Vec<(usize, u64)> = Vec::new();
    let mut chars = s.trim().chars().peekable();
    while chars.peek().is_some() {
        let mut part = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_ascii_digit() {
                part.push(c);
                chars.next();
            } else {
                break;
            }
        }
        let mut exp = String::new();
        while let Some(&c) = chars.peek() {
            if let Some(v) = SUPERSCRIPTS.iter().position(|&s| s == c) {
                exp.push(char::from_digit(v as u32, 10).unwrap());
                chars.next();
            } else {
                break;
            }
        }
        if part.is_empty() || exp.is_empty() {
            return Err(bad());
        }
        pairs.push((part.parse().map_err(|_| bad())?, exp.parse().map_err(|_| bad())?));
    }
    let largest = pairs.iter().map(|&(p, _)| p).max().ok_or_else(bad)?;
    let mut d = vec![0u64; largest];
    for (part, mult) in pairs {
        if part == 0 || mult == 0 || d[part - 1] != 0 {
            return Err(bad());
        }
        d[part - 1] = mult;
    }
    Ok(d)
}

fn tuple_compose(a: &[u64], i: usize, b: &[u64]) -> Result<Vec<u64>, OperadError> {
    if i == 0 || i > a.len() + 1 {
        return Err(OperadError::IndexOutOfRange {
            index: i,
            arity: a.len() + 1,
        });
    }
    gap_insert(a, i, b)
}

fn tuple_meet(a: &[u64], b: &[u64]) -> Vec<u64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect()
}

fn tuple_join(a: &[u64], b: &[u64]) -> Vec<u64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn tuple_leq(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Height above the component's least tuple (0,…,0,1): Σdⱼ − 1. Covers in
/// the product order bump one coordinate, so this grades every component.
fn tuple_rank(e: &[u64]) -> Option<u64> {
    Some(e.iter().sum::<u64>() - 1)
}

macro_rules! partition_operad_core {
    () => {
        type Elem = Vec<u64>;

        fn arity(&self, e: &Vec<u64>) -> usize {
            e.len() + 1
        }

        fn compose(&self, a: &Vec<u64>, i: usize, b: &Vec<u64>) -> Result<Vec<u64>, OperadError> {
            tuple_compose(a, i, b)
        }

        fn min_arity(&self) -> usize {
            2
        }
    };
}

/// Partitions of length k−1 in arity k, product order on difference
/// tuples, displayed in weakly-decreasing form.
pub struct YoungOperad;

impl Operad for YoungOperad {
    partition_operad_core!();

    fn elem_string(&self, e: &Vec<u64>) -> String {
        partition_string(e)
    }
}

/// The same carrier displayed through partition conjugation: the tuple d
/// names the partition with dⱼ parts equal to j.
pub struct ConjugateYoungOperad;

impl Operad for ConjugateYoungOperad {
    partition_operad_core!();

    fn elem_string(&self, e: &Vec<u64>) -> String {
        multiplicative_string(e)
    }
}

/// Distinct-parts partitions: every tuple entry positive. Closed under
/// composition and under the componentwise lattice operations, and carries
/// the box-complement anti-automorphism.
pub struct DistinctYoungOperad;

impl Operad for DistinctYoungOperad {
    partition_operad_core!();

    fn elem_string(&self, e: &Vec<u64>) -> String {
        partition_string(e)
    }
}

macro_rules! partition_lattice_core {
    () => {
        fn meet(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
            tuple_meet(a, b)
        }

        fn join(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
            tuple_join(a, b)
        }

        fn leq(&self, a: &Vec<u64>, b: &Vec<u64>) -> bool {
            tuple_leq(a, b)
        }

        fn rank(&self, e: &Vec<u64>) -> Option<u64> {
            tuple_rank(e)
        }
    };
}

impl LatticeOperad for YoungOperad {
    partition_lattice_core!();
}

impl LatticeOperad for ConjugateYoungOperad {
    partition_lattice_core!();
}

impl LatticeOperad for DistinctYoungOperad {
    partition_lattice_core!();
}

/// All carrier tuples of the given arity with entries ≤ bound.
pub fn partition_tuples(arity: usize, bound: u64) -> Vec<Vec<u64>> {
    if arity < 2 {
        return Vec::new();
    }
    (1..arity)
        .map(|j| {
            if j == arity - 1 {
                (1..=bound).collect::<Vec<u64>>()
            } else {
                (0..=bound).collect()
            }
        })
        .multi_cartesian_product()
        .collect()
}

/// A finite window of the partition operad for the law checkers.
pub fn partition_window(nmax: usize, bound: u64) -> Window<Vec<u64>> {
    (2..=nmax)
        .map(|n| (n, partition_tuples(n, bound)))
        .collect()
}

/// Distinct-parts tuples of the given arity with entries ≤ bound.
pub fn distinct_tuples(arity: usize, bound: u64) -> Vec<Vec<u64>> {
    partition_tuples(arity, bound)
        .into_iter()
        .filter(|d| d.iter().all(|&x| x > 0))
        .collect()
}
