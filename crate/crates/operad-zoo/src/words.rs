//! Word operads on the letters {0, +, −} with an absorbing special element:
//! the faces of cubes and cross-polytopes (multiplication style, one letter
//! per input) and signed compositions and their duals (insertion style, one
//! letter per gap). Includes the signed-permutation action, the sign-flip
//! involutions, and the even-signed suboperad.
//!
//! Binary-letter compositions are the gap operad over the two-element
//! chain; see [`binary_compositions`].

use itertools::Itertools;
use lattice_core::chain;
use operad_core::laws::{LawReport, Recorder};
use operad_core::perm::Perm;
use operad_core::word::{gap_insert, GapOperad};
use operad_core::{LatticeOperad, Operad, OperadError, Window};

use crate::ZooError;

/// A ternary letter. The multiplication is the rule of signs with 0
/// absorbing; the lattice order is set per operad (0 on top or 0 at the
/// bottom, with + and − incomparable).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

pub const SIGNS: [Sign; 3] = [Sign::Zero, Sign::Plus, Sign::Minus];

impl Sign {
    pub fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (Sign::Plus, x) => x,
            (Sign::Minus, Sign::Plus) => Sign::Minus,
            (Sign::Minus, Sign::Minus) => Sign::Plus,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Zero => '0',
            Sign::Plus => '+',
            Sign::Minus => '−',
        }
    }

    pub fn from_char(c: char) -> Result<Sign, ZooError> {
        match c {
            '0' => Ok(Sign::Zero),
            '+' => Ok(Sign::Plus),
            '-' | '−' => Ok(Sign::Minus),
            other => Err(ZooError::AlphabetMismatch(format!(
                "letter {other:?} is not one of 0, +, −"
            ))),
        }
    }
}

/// Parse a ternary word; both the ASCII hyphen and the minus sign are
/// accepted for −.
pub fn parse_signs(s: &str) -> Result<Vec<Sign>, ZooError> {
    s.chars().map(Sign::from_char).collect()
}

pub fn signs_string(w: &[Sign]) -> String {
    w.iter().map(|s| s.to_char()).collect()
}

/// A ternary word or the absorbing special element of its arity (the empty
/// face ∅ when the special sits at the bottom, the full polytope 𝟙 when it
/// sits on top).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TWord {
    Special(usize),
    Word(Vec<Sign>),
}

impl TWord {
    pub fn word(letters: &[Sign]) -> TWord {
        TWord::Word(letters.to_vec())
    }

    pub fn is_special(&self) -> bool {
        matches!(self, TWord::Special(_))
    }
}

/// How a ternary-word operad composes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionStyle {
    /// One letter per input (arity = length); slot i multiplies its letter
    /// onto every letter of the inner word and splices the result in.
    Multiply,
    /// One letter per gap (arity = length + 1); slot i splices the inner
    /// word into the i-th gap, letters untouched.
    Insert,
}

/// Where the letter 0 sits in the three-letter order. This fixes the whole
/// lattice: with 0 on top the special element is an absorbing bottom ∅
/// (meets of incomparable letters collapse onto it); with 0 at the bottom
/// the special element is an absorbing top 𝟙 (joins collapse).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    ZeroTop,
    ZeroBottom,
}

/// A family of operads on ternary words with one absorbing special element
/// per arity. See the constructors [`cube_faces`], [`cross_polytope_faces`],
/// [`signed_compositions`], and [`signed_compositions_dual`].
#[derive(Debug, Clone, Copy)]
pub struct TernaryOperad {
    pub style: CompositionStyle,
    pub orientation: Orientation,
}

/// Faces of the n-cube as ternary words of length n: letters ± pick a
/// facet pair coordinate value, 0 leaves the coordinate free. Composition
/// multiplies letters into the chosen slot; ∅ is an absorbing bottom.
pub fn cube_faces() -> TernaryOperad {
    TernaryOperad {
        style: CompositionStyle::Multiply,
        orientation: Orientation::ZeroTop,
    }
}

/// Faces of the n-dimensional cross-polytope: the lattice dual of
/// [`cube_faces`] with the same set-level compositions; 𝟙 is an absorbing
/// top.
pub fn cross_polytope_faces() -> TernaryOperad {
    TernaryOperad {
        style: CompositionStyle::Multiply,
        orientation: Orientation::ZeroBottom,
    }
}

/// Signed compositions: ternary words of length n−1 composing by gap
/// insertion, with an absorbing bottom ∅ per arity.
pub fn signed_compositions() -> TernaryOperad {
    TernaryOperad {
        style: CompositionStyle::Insert,
        orientation: Orientation::ZeroTop,
    }
}

/// The lattice dual of [`signed_compositions`], with an absorbing top 𝟙.
pub fn signed_compositions_dual() -> TernaryOperad {
    TernaryOperad {
        style: CompositionStyle::Insert,
        orientation: Orientation::ZeroBottom,
    }
}

impl TernaryOperad {
    pub fn special_symbol(&self) -> char {
        match self.orientation {
            Orientation::ZeroTop => 'E',
            Orientation::ZeroBottom => 'U',
        }
    }

    fn word_arity(&self, len: usize) -> usize {
        match self.style {
            CompositionStyle::Multiply => len,
            CompositionStyle::Insert => len + 1,
        }
    }

    /// x ≤ y on letters.
    fn letter_leq(&self, x: Sign, y: Sign) -> bool {
        x == y
            || match self.orientation {
                Orientation::ZeroTop => y == Sign::Zero,
                Orientation::ZeroBottom => x == Sign::Zero,
            }
    }

    /// Letterwise meet; `None` when the meet collapses to the special
    /// element (only possible with 0 on top, where + ∧ − does not exist
    /// among letters).
    fn letter_meet(&self, x: Sign, y: Sign) -> Option<Sign> {
        if x == y {
            return Some(x);
        }
        match self.orientation {
            Orientation::ZeroTop => match (x, y) {
                (Sign::Zero, other) | (other, Sign::Zero) => Some(other),
                _ => None,
            },
            Orientation::ZeroBottom => Some(Sign::Zero),
        }
    }

    fn letter_join(&self, x: Sign, y: Sign) -> Option<Sign> {
        if x == y {
            return Some(x);
        }
        match self.orientation {
            Orientation::ZeroTop => Some(Sign::Zero),
            Orientation::ZeroBottom => match (x, y) {
                (Sign::Zero, other) | (other, Sign::Zero) => Some(other),
                _ => None,
            },
        }
    }

    /// Parse "E"/"U" (needs the arity hint) or a ternary word.
    pub fn parse(&self, payload: &str, arity_hint: Option<usize>) -> Result<TWord, ZooError> {
        if payload == "e" && self.style == CompositionStyle::Insert {
            return Ok(TWord::Word(Vec::new()));
        }
        if payload.len() == 1 && payload.chars().next() == Some(self.special_symbol()) {
            return match arity_hint {
                Some(n) if n >= 1 => Ok(TWord::Special(n)),
                _ => Err(ZooError::AlphabetMismatch(format!(
                    "the special word {payload} needs an explicit arity prefix"
                ))),
            };
        }
        let letters = parse_signs(payload)?;
        if let Some(n) = arity_hint {
            if self.word_arity(letters.len()) != n {
                return Err(ZooError::LengthMismatch(self.word_arity(letters.len()), n));
            }
        }
        Ok(TWord::Word(letters))
    }
}

impl Operad for TernaryOperad {
    type Elem = TWord;

    fn arity(&self, e: &TWord) -> usize {
        match e {
            TWord::Special(n) => *n,
            TWord::Word(w) => self.word_arity(w.len()),
        }
    }

    fn compose(&self, a: &TWord, i: usize, b: &TWord) -> Result<TWord, OperadError> {
        let m = self.arity(a);
        if i == 0 || i > m {
            return Err(OperadError::IndexOutOfRange { index: i, arity: m });
        }
        let n = self.arity(b);
        match (a, b) {
            (TWord::Word(p), TWord::Word(q)) => match self.style {
                CompositionStyle::Multiply => {
                    let mut out = Vec::with_capacity(p.len() + q.len() - 1);
                    out.extend_from_slice(&p[..i - 1]);
                    out.extend(q.iter().map(|&t| p[i - 1].mul(t)));
                    out.extend_from_slice(&p[i..]);
                    Ok(TWord::Word(out))
                }
                CompositionStyle::Insert => Ok(TWord::Word(gap_insert(p, i, q)?)),
            },
            _ => Ok(TWord::Special(m + n - 1)),
        }
    }

    fn unit(&self) -> Option<TWord> {
        match self.style {
            CompositionStyle::Multiply => Some(TWord::Word(vec![Sign::Plus])),
            CompositionStyle::Insert => Some(TWord::Word(Vec::new())),
        }
    }

    fn is_symmetric(&self) -> bool {
        self.style == CompositionStyle::Multiply
    }

    fn act(&self, e: &TWord, sigma: &Perm) -> TWord {
        match e {
            TWord::Special(_) => e.clone(),
            TWord::Word(w) => TWord::Word(sigma.apply_slice(w)),
        }
    }

    fn enumerate(&self, n: usize) -> Result<Vec<TWord>, OperadError> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let len = match self.style {
            CompositionStyle::Multiply => n,
            CompositionStyle::Insert => n - 1,
        };
        let mut out: Vec<TWord> = if len == 0 {
            vec![TWord::Word(Vec::new())]
        } else {
            (0..len)
                .map(|_| SIGNS.iter().copied())
                .multi_cartesian_product()
                .map(TWord::Word)
                .collect()
        };
        out.push(TWord::Special(n));
        Ok(out)
    }

    fn elem_string(&self, e: &TWord) -> String {
        match e {
            TWord::Special(_) => self.special_symbol().to_string(),
            TWord::Word(w) if w.is_empty() => "e".to_string(),
            TWord::Word(w) => signs_string(w),
        }
    }
}

impl LatticeOperad for TernaryOperad {
    fn meet(&self, a: &TWord, b: &TWord) -> TWord {
        debug_assert_eq!(self.arity(a), self.arity(b));
        match (a, b) {
            (TWord::Special(n), other) | (other, TWord::Special(n)) => {
                match self.orientation {
                    Orientation::ZeroTop => TWord::Special(*n),
                    Orientation::ZeroBottom => other.clone(),
                }
            }
            (TWord::Word(p), TWord::Word(q)) => {
                let letters: Option<Vec<Sign>> = p
                    .iter()
                    .zip(q)
                    .map(|(&x, &y)| self.letter_meet(x, y))
                    .collect();
                match letters {
                    Some(w) => TWord::Word(w),
                    None => TWord::Special(self.arity(a)),
                }
            }
        }
    }

    fn join(&self, a: &TWord, b: &TWord) -> TWord {
        debug_assert_eq!(self.arity(a), self.arity(b));
        match (a, b) {
            (TWord::Special(n), other) | (other, TWord::Special(n)) => {
                match self.orientation {
                    Orientation::ZeroTop => other.clone(),
                    Orientation::ZeroBottom => TWord::Special(*n),
                }
            }
            (TWord::Word(p), TWord::Word(q)) => {
                let letters: Option<Vec<Sign>> = p
                    .iter()
                    .zip(q)
                    .map(|(&x, &y)| self.letter_join(x, y))
                    .collect();
                match letters {
                    Some(w) => TWord::Word(w),
                    None => TWord::Special(self.arity(a)),
                }
            }
        }
    }

    fn leq(&self, a: &TWord, b: &TWord) -> bool {
        match (a, b) {
            (TWord::Special(_), TWord::Special(_)) => true,
            (TWord::Special(_), TWord::Word(_)) => self.orientation == Orientation::ZeroTop,
            (TWord::Word(_), TWord::Special(_)) => self.orientation == Orientation::ZeroBottom,
            (TWord::Word(p), TWord::Word(q)) => {
                p.iter().zip(q).all(|(&x, &y)| self.letter_leq(x, y))
            }
        }
    }

    /// Words are graded by the number of letters equal to 0 when 0 is the
    /// top of the letter order, and by the number of nonzero letters when
    /// it is the bottom. The special elements are off the grading.
    fn rank(&self, e: &TWord) -> Option<u64> {
        match e {
            TWord::Special(_) => None,
            TWord::Word(w) => Some(match self.orientation {
                Orientation::ZeroTop => w.iter().filter(|&&t| t == Sign::Zero).count() as u64,
                Orientation::ZeroBottom => {
                    w.iter().filter(|&&t| t != Sign::Zero).count() as u64
                }
            }),
        }
    }
}

/// Flip the sign of every ± letter. An automorphism of the insertion-style
/// operads (a lattice automorphism in every arity that commutes with the
/// compositions); on the multiplication-style operads it is a lattice
/// automorphism but breaks the compositions (two flips cancel through the
/// rule of signs).
pub fn flip_signs(e: &TWord) -> TWord {
    match e {
        TWord::Special(n) => TWord::Special(*n),
        TWord::Word(w) => TWord::Word(w.iter().map(|t| t.flip()).collect()),
    }
}

/// An element of the signed-permutation group: a permutation together with
/// one sign bit per position. Acts on ternary words on the right by
/// `(w·(σ,g))ₖ = flipᵍᵏ(w_{σ(k)})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPerm {
    pub sigma: Perm,
    pub flips: Vec<bool>,
}

impl SignedPerm {
    pub fn new(sigma: Perm, flips: Vec<bool>) -> SignedPerm {
        debug_assert_eq!(sigma.n(), flips.len());
        SignedPerm { sigma, flips }
    }

    /// All 2ⁿ·n! elements of the group on n positions.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut out = Vec::new();
        for sigma in Perm::all(n) {
            for flips in (0..n).map(|_| [false, true]).multi_cartesian_product() {
                out.push(SignedPerm::new(sigma.clone(), flips));
            }
            if n == 0 {
                out.push(SignedPerm::new(sigma.clone(), Vec::new()));
            }
        }
        out
    }

    /// Group law matching the right action: (σ,g)(τ,h) = (στ, (g∘τ)⊕h).
    pub fn multiply(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.sigma.n();
        debug_assert_eq!(n, other.sigma.n());
        let sigma = Perm::from_one_line(
            (1..=n).map(|k| self.sigma.image(other.sigma.image(k))).collect(),
        )
        .expect("composite of permutations");
        let flips = (1..=n)
            .map(|k| self.flips[other.sigma.image(k) - 1] ^ other.flips[k - 1])
            .collect();
        SignedPerm::new(sigma, flips)
    }

    /// Embed into arity m + n − 1 by placing the action on the block of n
    /// positions starting at slot i, identity elsewhere.
    pub fn block_embed(&self, i: usize, m: usize) -> SignedPerm {
        let mut flips = vec![false; i - 1];
        flips.extend_from_slice(&self.flips);
        flips.extend(std::iter::repeat(false).take(m - i));
        SignedPerm::new(self.sigma.block_embed(i, m), flips)
    }

    /// Inflate slot i to weight n: the permutation moves the inner block as
    /// one letter, and the slot's sign bit spreads over the whole block.
    pub fn inflate(&self, i: usize, n: usize) -> SignedPerm {
        let m = self.sigma.n();
        let mut flips = Vec::with_capacity(m + n - 1);
        flips.extend_from_slice(&self.flips[..i - 1]);
        flips.extend(std::iter::repeat(self.flips[i - 1]).take(n));
        flips.extend_from_slice(&self.flips[i..]);
        debug_assert_eq!(flips.len(), m + n - 1);
        SignedPerm::new(self.sigma.inflate(i, n), flips)
    }
}

/// The right action of a signed permutation on a ternary word; special
/// elements are fixed.
pub fn signed_act(e: &TWord, sp: &SignedPerm) -> TWord {
    match e {
        TWord::Special(n) => TWord::Special(*n),
        TWord::Word(w) => TWord::Word(
            (1..=w.len())
                .map(|k| {
                    let t = w[sp.sigma.image(k) - 1];
                    if sp.flips[k - 1] {
                        t.flip()
                    } else {
                        t
                    }
                })
                .collect(),
        ),
    }
}

/// Exhaustively verify the two signed-equivariance identities on a
/// multiplication-style ternary operad:
///
///   v ∘ᵢ (w·(σ,g)) = (v ∘ᵢ w) · ((σ,g) embedded at the block i..i+n−1),
///   (v·(σ,g)) ∘ᵢ w = (v ∘_{σ(i)} w) · ((σ,g) inflated at slot i).
pub fn check_signed_equivariance(
    op: &TernaryOperad,
    nmax: usize,
) -> Result<Vec<LawReport<TWord>>, OperadError> {
    let window: Window<TWord> = operad_core::enumerated_window(op, nmax)?;
    let mut inner = Recorder::new("signed-equivariance-inner", &window);
    let mut outer = Recorder::new("signed-equivariance-outer", &window);
    for (&m, ws_v) in &window {
        for (&n, ws_w) in &window {
            let inner_group = SignedPerm::all(n);
            let outer_group = SignedPerm::all(m);
            for v in ws_v {
                for w in ws_w {
                    for i in 1..=m {
                        let vw = op.compose(v, i, w)?;
                        for sp in &inner_group {
                            let lhs = op.compose(v, i, &signed_act(w, sp))?;
                            let rhs = signed_act(&vw, &sp.block_embed(i, m));
                            if lhs != rhs {
                                inner.record(&[v, w], &[i], &lhs, &rhs);
                            }
                        }
                        for sp in &outer_group {
                            let lhs = op.compose(&signed_act(v, sp), i, w)?;
                            let rhs = signed_act(
                                &op.compose(v, sp.sigma.image(i), w)?,
                                &sp.inflate(i, n),
                            );
                            if lhs != rhs {
                                outer.record(&[v, w], &[i], &lhs, &rhs);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(vec![inner.report(), outer.report()])
}

/// Binary-letter compositions: words over {0, 1} with gap insertion, the
/// componentwise order of the two-element chain, and rank = number of 1s.
pub fn binary_compositions() -> GapOperad {
    GapOperad::new(chain(2))
}

/// The letter-flip involution 0 ↔ 1 on binary compositions: an operad
/// automorphism that reverses the order in every arity.
pub fn flip_binary(e: &[usize]) -> Vec<usize> {
    e.iter().map(|&x| 1 - x).collect()
}

/// Membership in the even-signed suboperad: the letter 0 appears at least
/// twice or not at all, and 0-free words carry an even number of − signs.
/// Special elements belong.
pub fn is_even_signed(e: &TWord) -> bool {
    match e {
        TWord::Special(_) => true,
        TWord::Word(w) => {
            let zeros = w.iter().filter(|&&t| t == Sign::Zero).count();
            let minuses = w.iter().filter(|&&t| t == Sign::Minus).count();
            (zeros == 0 || zeros >= 2) && (zeros > 0 || minuses % 2 == 0)
        }
    }
}

/// The even-signed compositions: the sub-operad of [`signed_compositions`]
/// cut out by [`is_even_signed`]. Closed under composition; each component
/// is a lattice in the induced order, but not a sublattice (meets can fall
/// outside and get recomputed inside).
#[derive(Debug, Clone, Copy)]
pub struct EvenSignedCompositions {
    inner: TernaryOperad,
}

pub fn even_signed_compositions() -> EvenSignedCompositions {
    EvenSignedCompositions {
        inner: signed_compositions(),
    }
}

impl EvenSignedCompositions {
    pub fn ambient(&self) -> &TernaryOperad {
        &self.inner
    }

    /// Meet in the induced order: the greatest member below both, when it
    /// exists. The ambient meet may leave the subset.
    pub fn induced_meet(&self, n: usize, a: &TWord, b: &TWord) -> Option<TWord> {
        let below: Vec<TWord> = self
            .enumerate(n)
            .ok()?
            .into_iter()
            .filter(|c| self.inner.leq(c, a) && self.inner.leq(c, b))
            .collect();
        below
            .iter()
            .find(|m| below.iter().all(|c| self.inner.leq(c, m)))
            .cloned()
    }

    pub fn induced_join(&self, n: usize, a: &TWord, b: &TWord) -> Option<TWord> {
        let above: Vec<TWord> = self
            .enumerate(n)
            .ok()?
            .into_iter()
            .filter(|c| self.inner.leq(a, c) && self.inner.leq(b, c))
            .collect();
        above
            .iter()
            .find(|m| above.iter().all(|c| self.inner.leq(m, c)))
            .cloned()
    }
}

impl Operad for EvenSignedCompositions {
    type Elem = TWord;

    fn arity(&self, e: &TWord) -> usize {
        self.inner.arity(e)
    }

    fn compose(&self, a: &TWord, i: usize, b: &TWord) -> Result<TWord, OperadError> {
        let out = self.inner.compose(a, i, b)?;
        debug_assert!(is_even_signed(&out), "composition left the suboperad");
        Ok(out)
    }

    fn min_arity(&self) -> usize {
        1
    }

    fn enumerate(&self, n: usize) -> Result<Vec<TWord>, OperadError> {
        Ok(self
            .inner
            .enumerate(n)?
            .into_iter()
            .filter(is_even_signed)
            .collect())
    }

    fn elem_string(&self, e: &TWord) -> String {
        self.inner.elem_string(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use operad_core::laws::{
        all_pass, check_automorphism, check_lattice_compatibility, check_operad_laws,
        CompatibilityMode,
    };
    use operad_core::lift::DualOperad;
    use operad_core::enumerated_window;

    fn w(s: &str) -> TWord {
        TWord::Word(parse_signs(s).unwrap())
    }

    #[test]
    fn cube_face_golden_compositions() {
        let t = cube_faces();
        let got = t.compose(&w("0+"), 2, &w("0")).unwrap();
        assert_eq!(t.elem_string(&got), "00");
        let got = t.compose(&w("0-"), 2, &w("-0")).unwrap();
        assert_eq!(t.elem_string(&got), "0+0");
        // Any composition with the empty face is the empty face.
        let got = t.compose(&w("0+"), 1, &TWord::Special(2)).unwrap();
        assert_eq!(got, TWord::Special(3));
        let got = t.compose(&TWord::Special(2), 2, &w("+-")).unwrap();
        assert_eq!(got, TWord::Special(3));
    }

    #[test]
    fn cross_polytope_golden_compositions() {
        let tv = cross_polytope_faces();
        let got = tv.compose(&w("-"), 1, &w("-+")).unwrap();
        assert_eq!(tv.elem_string(&got), "+−");
        let got = tv.compose(&w("-+"), 2, &w("++")).unwrap();
        assert_eq!(tv.elem_string(&got), "−++");
    }

    #[test]
    fn signed_composition_golden_insertions() {
        let cb = signed_compositions();
        let got = cb.compose(&w("+0"), 3, &w("0")).unwrap();
        assert_eq!(cb.elem_string(&got), "+00");
        let got = cb.compose(&w("-"), 1, &w("00")).unwrap();
        assert_eq!(cb.elem_string(&got), "00−");
        let got = cb.compose(&w("+0"), 1, &TWord::Special(4)).unwrap();
        assert_eq!(got, TWord::Special(6));

        let cbv = signed_compositions_dual();
        let got = cbv.compose(&w("-"), 2, &w("+0")).unwrap();
        assert_eq!(cbv.elem_string(&got), "−+0");
        let got = cbv.compose(&w("+-"), 3, &w("+")).unwrap();
        assert_eq!(cbv.elem_string(&got), "+−+");
    }

    #[test]
    fn component_sizes_count_words_plus_special() {
        let t = cube_faces();
        for n in 1..=4 {
            assert_eq!(t.enumerate(n).unwrap().len(), 3usize.pow(n as u32) + 1);
        }
        let cb = signed_compositions();
        for n in 1..=4 {
            assert_eq!(cb.enumerate(n).unwrap().len(), 3usize.pow(n as u32 - 1) + 1);
        }
    }

    #[test]
    fn cube_face_operad_laws_hold() {
        let t = cube_faces();
        let window = enumerated_window(&t, 3).unwrap();
        assert!(all_pass(&check_operad_laws(&t, &window).unwrap()));
        let tv = cross_polytope_faces();
        assert!(all_pass(
            &check_operad_laws(&tv, &enumerated_window(&tv, 3).unwrap()).unwrap()
        ));
    }

    #[test]
    fn signed_composition_operad_laws_hold() {
        for op in [signed_compositions(), signed_compositions_dual()] {
            let window = enumerated_window(&op, 4).unwrap();
            assert!(all_pass(&check_operad_laws(&op, &window).unwrap()));
            assert!(all_pass(
                &check_lattice_compatibility(&op, &window, CompatibilityMode::Full).unwrap()
            ));
        }
    }

    #[test]
    fn absorbing_special_breaks_only_the_opposite_joint_law() {
        // Insertion never mixes letters, so on plain words even the joint
        // quadruple forms hold. The special element is absorbing for the
        // compositions but neutral on its opposite side of the lattice:
        // (E ∨ +) ∘₁ (+ ∨ −) = + ∘₁ 0 = 0+, while (E∘₁+) ∨ (+∘₁−) = −+.
        let cb = signed_compositions();
        let window = enumerated_window(&cb, 3).unwrap();
        let reports =
            check_lattice_compatibility(&cb, &window, CompatibilityMode::Joint).unwrap();
        assert!(reports.iter().find(|r| r.law == "joint-meet-distributivity").unwrap().pass);
        assert!(!reports.iter().find(|r| r.law == "joint-join-distributivity").unwrap().pass);

        let lhs = cb
            .compose(&cb.join(&TWord::Special(2), &w("+")), 1, &cb.join(&w("+"), &w("-")))
            .unwrap();
        assert_eq!(lhs, w("0+"));
        let rhs = cb.join(
            &cb.compose(&TWord::Special(2), 1, &w("+")).unwrap(),
            &cb.compose(&w("+"), 1, &w("-")).unwrap(),
        );
        assert_eq!(rhs, w("-+"));

        // Dually for the absorbing top.
        let cbv = signed_compositions_dual();
        let window = enumerated_window(&cbv, 3).unwrap();
        let reports =
            check_lattice_compatibility(&cbv, &window, CompatibilityMode::Joint).unwrap();
        assert!(!reports.iter().find(|r| r.law == "joint-meet-distributivity").unwrap().pass);
        assert!(reports.iter().find(|r| r.law == "joint-join-distributivity").unwrap().pass);
    }

    #[test]
    fn cube_faces_distribute_over_joins_but_not_meets() {
        // (+ ∧ −) ∘₁ 0 = ∅ ∘₁ 0 = ∅, while (+∘₁0) ∧ (−∘₁0) = 0 ∧ 0 = 0:
        // the meet collapse is absorbing on the left side only.
        let t = cube_faces();
        let lhs = t.compose(&t.meet(&w("+"), &w("-")), 1, &w("0")).unwrap();
        assert_eq!(lhs, TWord::Special(1));
        let rhs = t.meet(
            &t.compose(&w("+"), 1, &w("0")).unwrap(),
            &t.compose(&w("-"), 1, &w("0")).unwrap(),
        );
        assert_eq!(rhs, w("0"));

        let window = enumerated_window(&t, 3).unwrap();
        let reports =
            check_lattice_compatibility(&t, &window, CompatibilityMode::Full).unwrap();
        for r in &reports {
            match r.law {
                "join-distributivity-outer" | "join-distributivity-inner" => {
                    assert!(r.pass, "{}", r.law)
                }
                "meet-distributivity-outer" | "meet-distributivity-inner" => {
                    assert!(!r.pass, "{}", r.law)
                }
                other => panic!("unexpected law {other}"),
            }
        }
        // Monotonicity still holds in both arguments.
        let weak = check_lattice_compatibility(&t, &window, CompatibilityMode::Weak).unwrap();
        assert!(weak
            .iter()
            .filter(|r| r.law.starts_with("monotonicity"))
            .all(|r| r.pass));
    }

    #[test]
    fn cross_polytope_faces_distribute_over_meets_but_not_joins() {
        let tv = cross_polytope_faces();
        let window = enumerated_window(&tv, 3).unwrap();
        let reports =
            check_lattice_compatibility(&tv, &window, CompatibilityMode::Full).unwrap();
        for r in &reports {
            match r.law {
                "meet-distributivity-outer" | "meet-distributivity-inner" => {
                    assert!(r.pass, "{}", r.law)
                }
                "join-distributivity-outer" | "join-distributivity-inner" => {
                    assert!(!r.pass, "{}", r.law)
                }
                other => panic!("unexpected law {other}"),
            }
        }
    }

    #[test]
    fn cross_polytope_is_the_lattice_dual_with_the_same_compositions() {
        let t = cube_faces();
        let tv = cross_polytope_faces();
        let dual = DualOperad::new(cube_faces());
        for n in 1..=3 {
            let elems = t.enumerate(n).unwrap();
            for a in &elems {
                for b in &elems {
                    assert_eq!(tv.leq(a, b), t.leq(b, a));
                    assert_eq!(tv.meet(a, b), dual.meet(a, b));
                    assert_eq!(tv.join(a, b), dual.join(a, b));
                }
            }
        }
        for m in 1..=3usize {
            for n in 1..=3usize {
                for a in t.enumerate(m).unwrap() {
                    for b in t.enumerate(n).unwrap() {
                        for i in 1..=m {
                            assert_eq!(
                                t.compose(&a, i, &b).unwrap(),
                                tv.compose(&a, i, &b).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn signed_equivariance_holds_exhaustively() {
        let t = cube_faces();
        let reports = check_signed_equivariance(&t, 3).unwrap();
        assert!(all_pass(&reports), "{:?}", reports);
        let tv = cross_polytope_faces();
        assert!(all_pass(&check_signed_equivariance(&tv, 3).unwrap()));
    }

    #[test]
    fn signed_perms_form_a_group_acting_on_words() {
        let word = w("0+-");
        for a in SignedPerm::all(3) {
            for b in SignedPerm::all(3) {
                assert_eq!(
                    signed_act(&signed_act(&word, &a), &b),
                    signed_act(&word, &a.multiply(&b))
                );
            }
        }
        assert_eq!(signed_act(&TWord::Special(3), &SignedPerm::all(3)[5]), TWord::Special(3));
    }

    #[test]
    fn sign_flip_is_an_automorphism_of_signed_compositions_only() {
        let cb = signed_compositions();
        let window = enumerated_window(&cb, 4).unwrap();
        let reports = check_automorphism(&cb, flip_signs, &window, true).unwrap();
        assert!(all_pass(&reports), "{:?}", reports);

        // On cube faces two flips cancel through the rule of signs:
        // flip(+)∘₁flip(+) = −·− = + but flip(+∘₁+) = −.
        let t = cube_faces();
        let lhs = t
            .compose(&flip_signs(&w("+")), 1, &flip_signs(&w("+")))
            .unwrap();
        assert_eq!(lhs, w("+"));
        assert_eq!(flip_signs(&t.compose(&w("+"), 1, &w("+")).unwrap()), w("-"));
    }

    #[test]
    fn even_signed_membership_and_components() {
        let d = even_signed_compositions();
        let threes: Vec<String> = d
            .enumerate(3)
            .unwrap()
            .iter()
            .map(|e| d.elem_string(e))
            .collect();
        assert_eq!(threes, vec!["00", "++", "−−", "E"]);
        assert_eq!(d.enumerate(4).unwrap().len(), 12);
    }

    #[test]
    fn even_signed_words_are_closed_under_composition() {
        let d = even_signed_compositions();
        for m in 1..=4usize {
            for n in 1..=4usize {
                if m + n - 1 > 6 {
                    continue;
                }
                for a in d.enumerate(m).unwrap() {
                    for b in d.enumerate(n).unwrap() {
                        for i in 1..=m {
                            let c = d.compose(&a, i, &b).unwrap();
                            assert!(
                                is_even_signed(&c),
                                "{} ∘{} {} = {} escapes",
                                d.elem_string(&a),
                                i,
                                d.elem_string(&b),
                                d.elem_string(&c)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn even_signed_components_are_lattices_but_not_sublattices() {
        let d = even_signed_compositions();
        let cb = signed_compositions();
        // The ambient meet of 00+ and 0+0 is 0++, which is not even-signed;
        // the induced meet exists anyway (it is +++).
        let a = w("00+");
        let b = w("0+0");
        let ambient = cb.meet(&a, &b);
        assert_eq!(ambient, w("0++"));
        assert!(!is_even_signed(&ambient));
        assert_eq!(d.induced_meet(4, &a, &b), Some(w("+++")));
        // Every pair in every component up to arity 6 has an induced meet
        // and join.
        for n in 1..=6usize {
            let elems = d.enumerate(n).unwrap();
            for a in &elems {
                for b in &elems {
                    assert!(d.induced_meet(n, a, b).is_some(), "meet {a:?} {b:?}");
                    assert!(d.induced_join(n, a, b).is_some(), "join {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn binary_composition_flip_reverses_the_order() {
        let comp = binary_compositions();
        let window = enumerated_window(&comp, 4).unwrap();
        let reports =
            check_automorphism(&comp, |e| flip_binary(e), &window, false).unwrap();
        assert!(all_pass(&reports), "{:?}", reports);
        for ws in window.values() {
            for a in ws {
                for b in ws {
                    assert_eq!(
                        comp.leq(a, b),
                        comp.leq(&flip_binary(b), &flip_binary(a))
                    );
                }
            }
        }
    }

    #[test]
    fn ternary_parsing_round_trips() {
        let cb = signed_compositions();
        assert_eq!(cb.parse("E", Some(4)).unwrap(), TWord::Special(4));
        assert!(cb.parse("E", None).is_err());
        assert_eq!(cb.parse("+0-", None).unwrap(), w("+0-"));
        assert_eq!(cb.parse("+0−", Some(4)).unwrap(), w("+0-"));
        assert!(matches!(
            cb.parse("+0-", Some(3)),
            Err(ZooError::LengthMismatch(4, 3))
        ));
        assert!(matches!(
            cb.parse("x", None),
            Err(ZooError::AlphabetMismatch(_))
        ));
        let tv = cross_polytope_faces();
        assert_eq!(tv.parse("U", Some(2)).unwrap(), TWord::Special(2));
        assert_eq!(tv.elem_string(&TWord::Special(2)), "U");
    }
}
