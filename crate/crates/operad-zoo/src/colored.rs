//! Codecs between three pictures of the same objects: ternary words of
//! length n−1 (the signed-composition operad of [`crate::words`]),
//! 2-colored integer compositions of n whose first part is colored 1, and
//! set partitions of {±1,…,±n} that are closed under negation with at most
//! one self-negated block and at most one pair of other blocks. The sign
//! flip on words translates to flipping the color of every part except the
//! first, and is a lattice automorphism in every arity.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::words::{flip_signs, Sign, TWord};
use crate::ZooError;

/// A composition n = n₁+…+n_k with each part colored 1 or 2; the first
/// part is always colored 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredComposition {
    /// (length, color) pairs; lengths positive, colors in {1,2}.
    pub parts: Vec<(u64, u8)>,
}

impl ColoredComposition {
    pub fn new(parts: &[(u64, u8)]) -> Result<ColoredComposition, ZooError> {
        let c = ColoredComposition {
            parts: parts.to_vec(),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), ZooError> {
        if self.parts.is_empty() {
            return Err(ZooError::InvalidPartitionShape(
                "a colored composition needs at least one part".into(),
            ));
        }
        if self.parts[0].1 != 1 {
            return Err(ZooError::InvalidPartitionShape(
                "the first part must be colored 1".into(),
            ));
        }
        for &(len, color) in &self.parts {
            if len == 0 {
                return Err(ZooError::InvalidPartitionShape(
                    "parts must be positive".into(),
                ));
            }
            if color != 1 && color != 2 {
                return Err(ZooError::InvalidPartitionShape(format!(
                    "color {color} is not 1 or 2"
                )));
            }
        }
        Ok(())
    }

    /// The composed number n = Σ nᵢ.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&(len, _)| len).sum()
    }

    /// Flip the color of every part except the first.
    pub fn color_flip(&self) -> ColoredComposition {
        let parts = self
            .parts
            .iter()
            .enumerate()
            .map(|(j, &(len, color))| if j == 0 { (len, color) } else { (len, 3 - color) })
            .collect();
        ColoredComposition { parts }
    }
}

/// Read the inner grid lines of the tiling diagram: a tile separator is +
/// or − according to the color of the tile to its right, a line inside a
/// tile is 0.
pub fn colored_to_word(c: &ColoredComposition) -> Result<TWord, ZooError> {
    c.validate()?;
    let mut letters = Vec::new();
    for (j, &(len, color)) in c.parts.iter().enumerate() {
        if j > 0 {
            letters.push(if color == 1 { Sign::Plus } else { Sign::Minus });
        }
        for _ in 1..len {
            letters.push(Sign::Zero);
        }
    }
    Ok(TWord::Word(letters))
}

/// Cut the word at its nonzero letters; each + starts a color-1 tile, each
/// − a color-2 tile, and the first tile is colored 1.
pub fn word_to_colored(w: &TWord) -> Result<ColoredComposition, ZooError> {
    let letters = match w {
        TWord::Special(_) => {
            return Err(ZooError::InvalidPartitionShape(
                "the special word is not a colored composition".into(),
            ))
        }
        TWord::Word(letters) => letters,
    };
    let mut parts = vec![(1u64, 1u8)];
    for &t in letters {
        match t {
            Sign::Zero => parts.last_mut().unwrap().0 += 1,
            Sign::Plus => parts.push((1, 1)),
            Sign::Minus => parts.push((1, 2)),
        }
    }
    Ok(ColoredComposition { parts })
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

/// Render as "1₁+2₂+1₂+2₁".
pub fn colored_string(c: &ColoredComposition) -> String {
    c.parts
        .iter()
        .map(|&(len, color)| format!("{len}{}", SUBSCRIPTS[color as usize]))
        .join("+")
}

/// Parse "1₁+2₂+1₂+2₁"; plain trailing digits also name the color, so
/// "1_1" may be written when subscripts are awkward to type.
pub fn parse_colored(s: &str) -> Result<ColoredComposition, ZooError> {
    let bad = |piece: &str| {
        ZooError::InvalidPartitionShape(format!("cannot read {piece:?} as a colored part"))
    };
    let mut parts = Vec::new();
    for piece in s.split('+') {
        let piece = piece.trim();
        let mut chars = piece.chars().collect::<Vec<_>>();
        let color = match chars.pop() {
            Some('₁') | Some('1') if chars.last() == Some(&'_') || !chars.is_empty() => 1,
            Some('₂') | Some('2') if chars.last() == Some(&'_') || !chars.is_empty() => 2,
            _ => return Err(bad(piece)),
        };
        if chars.last() == Some(&'_') {
            chars.pop();
        }
        let len: u64 = chars
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| bad(piece))?;
        parts.push((len, color));
    }
    ColoredComposition::new(&parts)
}

/// A partition of {±1,…,±n} closed under negation, with at most one
/// self-negated block and at most one pair of other blocks; when the
/// self-negated block contains n it must be all of {±1,…,±n}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSetPartitionB {
    pub n: usize,
    /// Canonical order: the block avoiding n first, then the self-negated
    /// block if present, then the block containing n; or the single block
    /// {±1,…,±n} alone.
    pub blocks: Vec<BTreeSet<i64>>,
}

impl SignedSetPartitionB {
    /// Validate and canonicalize a list of blocks.
    pub fn new(n: usize, blocks: &[BTreeSet<i64>]) -> Result<SignedSetPartitionB, ZooError> {
        let bad = |msg: String| Err(ZooError::InvalidPartitionShape(msg));
        if n == 0 {
            return bad("the ground set {±1,…,±n} needs n ≥ 1".into());
        }
        let mut seen: BTreeSet<i64> = BTreeSet::new();
        for block in blocks {
            if block.is_empty() {
                return bad("blocks must be nonempty".into());
            }
            for &x in block {
                if x == 0 || x.unsigned_abs() as usize > n {
                    return bad(format!("element {x} is outside {{±1,…,±{n}}}"));
                }
                if !seen.insert(x) {
                    return bad(format!("element {x} appears in two blocks"));
                }
            }
        }
        if seen.len() != 2 * n {
            return bad(format!("the blocks do not cover {{±1,…,±{n}}}"));
        }
        let negate = |b: &BTreeSet<i64>| b.iter().map(|&x| -x).collect::<BTreeSet<i64>>();
        let mut zero_blocks = Vec::new();
        let mut nonzero = Vec::new();
        for block in blocks {
            if negate(block) == *block {
                zero_blocks.push(block.clone());
            } else {
                if !blocks.contains(&negate(block)) {
                    return bad("blocks must be closed under negation".into());
                }
                nonzero.push(block.clone());
            }
        }
        if zero_blocks.len() > 1 {
            return bad("at most one self-negated block is allowed".into());
        }
        if nonzero.len() > 2 {
            return bad("at most one pair of non-self-negated blocks is allowed".into());
        }
        if let Some(zero) = zero_blocks.first() {
            if zero.contains(&(n as i64)) && zero.len() != 2 * n {
                return bad(format!(
                    "a self-negated block containing {n} must be all of {{±1,…,±{n}}}"
                ));
            }
        }
        let blocks = if nonzero.is_empty() {
            vec![zero_blocks.pop().unwrap()]
        } else {
            let (with_n, avoiding): (Vec<_>, Vec<_>) = nonzero
                .into_iter()
                .partition(|b| b.contains(&(n as i64)));
            let mut out = avoiding;
            out.extend(zero_blocks);
            out.extend(with_n);
            out
        };
        Ok(SignedSetPartitionB { n, blocks })
    }
}

/// A word t₁…t_{n−1} names the block avoiding n: k for each +, −k for
/// each −, and −n; the 0 positions pair up into the self-negated block.
/// The special word names the one-block partition.
pub fn word_to_typeb(n: usize, w: &TWord) -> Result<SignedSetPartitionB, ZooError> {
    let letters = match w {
        TWord::Special(m) => {
            let all: BTreeSet<i64> = (1..=*m as i64).flat_map(|k| [k, -k]).collect();
            return SignedSetPartitionB::new(*m, &[all]);
        }
        TWord::Word(letters) => letters,
    };
    if letters.len() + 1 != n {
        return Err(ZooError::LengthMismatch(letters.len() + 1, n));
    }
    let mut avoiding: BTreeSet<i64> = BTreeSet::new();
    let mut zero: BTreeSet<i64> = BTreeSet::new();
    avoiding.insert(-(n as i64));
    for (k, &t) in (1..).zip(letters) {
        match t {
            Sign::Plus => {
                avoiding.insert(k);
            }
            Sign::Minus => {
                avoiding.insert(-k);
            }
            Sign::Zero => {
                zero.insert(k);
                zero.insert(-k);
            }
        }
    }
    let with_n: BTreeSet<i64> = avoiding.iter().map(|&x| -x).collect();
    let mut blocks = vec![avoiding];
    if !zero.is_empty() {
        blocks.push(zero);
    }
    blocks.push(with_n);
    SignedSetPartitionB::new(n, &blocks)
}

/// Inverse of [`word_to_typeb`].
pub fn typeb_to_word(p: &SignedSetPartitionB) -> TWord {
    if p.blocks.len() == 1 {
        return TWord::Special(p.n);
    }
    let avoiding = &p.blocks[0];
    let letters = (1..p.n as i64)
        .map(|k| {
            if avoiding.contains(&k) {
                Sign::Plus
            } else if avoiding.contains(&-k) {
                Sign::Minus
            } else {
                Sign::Zero
            }
        })
        .collect();
    TWord::Word(letters)
}

/// Render as "{{−1,3,−4,−5},{−2,2},{1,−3,4,5}}": blocks in canonical
/// order, elements by absolute value with the negative of a pair first.
pub fn typeb_string(p: &SignedSetPartitionB) -> String {
    let block_string = |b: &BTreeSet<i64>| {
        let elems = b
            .iter()
            .sorted_by_key(|&&x| (x.abs(), x))
            .map(|&x| {
                if x < 0 {
                    format!("−{}", -x)
                } else {
                    x.to_string()
                }
            })
            .join(",");
        format!("{{{elems}}}")
    };
    format!("{{{}}}", p.blocks.iter().map(block_string).join(","))
}

/// Parse the output format of [`typeb_string`]; any block order is
/// accepted and canonicalized, and ASCII '-' may stand for −.
pub fn parse_typeb(s: &str) -> Result<SignedSetPartitionB, ZooError> {
    let bad = || ZooError::InvalidPartitionShape(format!("cannot read {s:?} as a type-B partition"));
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|u| u.strip_suffix('}'))
        .ok_or_else(bad)?;
    let mut blocks = Vec::new();
    let mut rest = inner.trim_start_matches(',');
    while !rest.is_empty() {
        let open = rest.find('{').ok_or_else(bad)?;
        let close = rest.find('}').ok_or_else(bad)?;
        if open != 0 || close < open {
            return Err(bad());
        }
        let mut block = BTreeSet::new();
        for piece in rest[open + 1..close].split(',') {
            let piece = piece.trim().replace('−', "-");
            let x: i64 = piece.parse().map_err(|_| bad())?;
            block.insert(x);
        }
        blocks.push(block);
        rest = rest[close + 1..].trim_start_matches(',');
    }
    let n = blocks
        .iter()
        .flatten()
        .map(|x| x.unsigned_abs() as usize)
        .max()
        .ok_or_else(bad)?;
    SignedSetPartitionB::new(n, &blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_signs, signed_compositions, signs_string};
    use operad_core::laws::{all_pass, check_operad_laws};
    use operad_core::{enumerated_window, LatticeOperad, Operad};

    fn word(s: &str) -> TWord {
        TWord::Word(parse_signs(s).unwrap())
    }

    #[test]
    fn tiling_diagram_golden_of_six() {
        let c = ColoredComposition::new(&[(1, 1), (2, 2), (1, 2), (2, 1)]).unwrap();
        assert_eq!(colored_string(&c), "1₁+2₂+1₂+2₁");
        assert_eq!(c.total(), 6);
        assert_eq!(colored_to_word(&c).unwrap(), word("−0−+0"));
        assert_eq!(word_to_colored(&word("−0−+0")).unwrap(), c);
        assert_eq!(parse_colored("1₁+2₂+1₂+2₁").unwrap(), c);
        assert_eq!(parse_colored("1_1+2_2+1_2+2_1").unwrap(), c);
    }

    #[test]
    fn composition_golden_through_the_word_operad() {
        let op = signed_compositions();
        let v = parse_colored("2₁+1₂+1₁").unwrap();
        let w = parse_colored("2₁+1₂").unwrap();
        assert_eq!(signs_string_of(&colored_to_word(&v).unwrap()), "0−+");
        assert_eq!(signs_string_of(&colored_to_word(&w).unwrap()), "0−");
        let composed = op
            .compose(&colored_to_word(&v).unwrap(), 3, &colored_to_word(&w).unwrap())
            .unwrap();
        assert_eq!(
            colored_string(&word_to_colored(&composed).unwrap()),
            "2₁+2₂+1₂+1₁"
        );
    }

    fn signs_string_of(w: &TWord) -> String {
        match w {
            TWord::Word(letters) => signs_string(letters),
            TWord::Special(_) => unreachable!(),
        }
    }

    #[test]
    fn colored_codec_is_a_bijection() {
        let op = signed_compositions();
        for n in 1..=5 {
            let mut seen = BTreeSet::new();
            for e in op.enumerate(n).unwrap() {
                if e.is_special() {
                    assert!(word_to_colored(&e).is_err());
                    continue;
                }
                let c = word_to_colored(&e).unwrap();
                c.validate().unwrap();
                assert_eq!(c.total(), n as u64);
                assert_eq!(colored_to_word(&c).unwrap(), e);
                assert!(seen.insert(c));
            }
            assert_eq!(seen.len(), 3usize.pow(n as u32 - 1));
        }
    }

    #[test]
    fn type_b_partition_golden() {
        let w = word("−0+−");
        let p = word_to_typeb(5, &w).unwrap();
        assert_eq!(
            typeb_string(&p),
            "{{−1,3,−4,−5},{−2,2},{1,−3,4,5}}"
        );
        assert_eq!(typeb_to_word(&p), w);
        assert_eq!(parse_typeb("{{−1,3,−4,−5},{−2,2},{1,−3,4,5}}").unwrap(), p);
        assert_eq!(parse_typeb("{{1,-3,4,5},{-1,3,-4,-5},{-2,2}}").unwrap(), p);
        // The word block of −0+− is the one avoiding 5.
        assert_eq!(
            p.blocks[0],
            [-1, 3, -4, -5].into_iter().collect::<BTreeSet<i64>>()
        );
        // Its colored composition is the n = 5 diagram from the same figure.
        assert_eq!(
            colored_string(&word_to_colored(&w).unwrap()),
            "1₁+2₂+1₁+1₂"
        );
    }

    #[test]
    fn trivial_partition_is_the_special_word() {
        let p = word_to_typeb(3, &TWord::Special(3)).unwrap();
        assert_eq!(p.blocks.len(), 1);
        assert_eq!(typeb_string(&p), "{{−1,1,−2,2,−3,3}}");
        assert_eq!(typeb_to_word(&p), TWord::Special(3));
    }

    #[test]
    fn type_b_codec_is_a_bijection() {
        let op = signed_compositions();
        for n in 2..=5 {
            let mut seen = BTreeSet::new();
            for e in op.enumerate(n).unwrap() {
                let p = word_to_typeb(n, &e).unwrap();
                assert_eq!(typeb_to_word(&p), e);
                assert!(seen.insert(typeb_string(&p)));
            }
            assert_eq!(seen.len(), 3usize.pow(n as u32 - 1) + 1);
        }
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(ColoredComposition::new(&[(1, 2), (1, 1)]).is_err());
        assert!(ColoredComposition::new(&[(0, 1)]).is_err());
        assert!(ColoredComposition::new(&[(1, 1), (2, 3)]).is_err());
        assert!(parse_colored("").is_err());
        // Not closed under negation.
        assert!(parse_typeb("{{1,2},{−1,−3},{3,−2}}").is_err());
        // Three block-pairs need three colors.
        assert!(parse_typeb("{{1},{−1},{2},{−2},{3},{−3}}").is_err());
        // A self-negated block with n inside must be everything.
        assert!(parse_typeb("{{−2,2},{1},{−1}}").is_err());
        // Two self-negated blocks.
        assert!(parse_typeb("{{−1,1},{−2,2,−3,3}}").is_err());
        // Overlap and gaps.
        assert!(parse_typeb("{{1,−1,2},{2,−2},{−1}}").is_err());
        assert!(parse_typeb("{{2},{−2}}").is_err());
    }

    #[test]
    fn color_flip_matches_the_sign_flip_and_preserves_the_lattices() {
        let op = signed_compositions();
        let c = parse_colored("1₁+2₂+1₁+1₂").unwrap();
        assert_eq!(colored_string(&c.color_flip()), "1₁+2₁+1₂+1₁");
        for n in 1..=4 {
            let elems = op.enumerate(n).unwrap();
            for e in &elems {
                let f = flip_signs(e);
                assert_eq!(flip_signs(&f), *e);
                if !e.is_special() {
                    assert_eq!(
                        word_to_colored(&f).unwrap(),
                        word_to_colored(e).unwrap().color_flip()
                    );
                }
                for b in &elems {
                    assert_eq!(op.leq(e, b), op.leq(&flip_signs(e), &flip_signs(b)));
                    assert_eq!(flip_signs(&op.meet(e, b)), op.meet(&flip_signs(e), &flip_signs(b)));
                    assert_eq!(flip_signs(&op.join(e, b)), op.join(&flip_signs(e), &flip_signs(b)));
                }
            }
        }
        let window = enumerated_window(&op, 4).unwrap();
        assert!(all_pass(&check_operad_laws(&op, &window).unwrap()));
    }
}
