//! The four monoidal products of lattices and the coherence map µ relating
//! the cartesian and truncated structures.

use crate::{Lattice, LatticeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    /// P × Q with componentwise order.
    Cartesian,
    /// (P∖{𝟎}) × (Q∖{𝟎}) with one adjoined bottom.
    LowerTruncated,
    /// (P∖{𝟏}) × (Q∖{𝟏}) with one adjoined top.
    UpperTruncated,
    /// (P∖{𝟎,𝟏}) ⊔ (Q∖{𝟎,𝟏}) with shared bottom and top.
    DisjointUnion,
}

/// Element of a product lattice. Which variants are inhabited depends on the
/// [`ProductKind`]: pairs for the cartesian and truncated products, one-sided
/// elements for the disjoint union, `Zero`/`One` for the adjoined extremes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProdElem<A, B> {
    Zero,
    Pair(A, B),
    Left(A),
    Right(B),
    One,
}

/// A product of two lattices under one of the four monoidal structures.
#[derive(Debug, Clone)]
pub struct ProductLattice<P: Lattice, Q: Lattice> {
    pub kind: ProductKind,
    pub left: P,
    pub right: Q,
    p_bottom: Option<<P as Lattice>::Elem>,
    p_top: Option<<P as Lattice>::Elem>,
    q_bottom: Option<<Q as Lattice>::Elem>,
    q_top: Option<<Q as Lattice>::Elem>,
}

impl<P: Lattice, Q: Lattice> ProductLattice<P, Q> {
    pub fn new(kind: ProductKind, left: P, right: Q) -> Result<Self, LatticeError> {
        let p_bottom = left.bottom();
        let p_top = left.top();
        let q_bottom = right.bottom();
        let q_top = right.top();
        match kind {
            ProductKind::Cartesian => {}
            ProductKind::LowerTruncated => {
                if p_bottom.is_none() || q_bottom.is_none() {
                    return Err(LatticeError::MissingExtremum("bottom"));
                }
            }
            ProductKind::UpperTruncated => {
                if p_top.is_none() || q_top.is_none() {
                    return Err(LatticeError::MissingExtremum("top"));
                }
            }
            ProductKind::DisjointUnion => {
                if p_bottom.is_none() || q_bottom.is_none() {
                    return Err(LatticeError::MissingExtremum("bottom"));
                }
                if p_top.is_none() || q_top.is_none() {
                    return Err(LatticeError::MissingExtremum("top"));
                }
            }
        }
        Ok(ProductLattice {
            kind,
            left,
            right,
            p_bottom,
            p_top,
            q_bottom,
            q_top,
        })
    }

    fn is_p_bottom(&self, a: &P::Elem) -> bool {
        self.p_bottom.as_ref() == Some(a)
    }

    fn is_p_top(&self, a: &P::Elem) -> bool {
        self.p_top.as_ref() == Some(a)
    }

    fn is_q_bottom(&self, b: &Q::Elem) -> bool {
        self.q_bottom.as_ref() == Some(b)
    }

    fn is_q_top(&self, b: &Q::Elem) -> bool {
        self.q_top.as_ref() == Some(b)
    }

    /// A pair meet that fell out of the truncated carrier collapses to the
    /// adjoined extreme.
    fn pair(&self, a: P::Elem, b: Q::Elem) -> ProdElem<P::Elem, Q::Elem> {
        match self.kind {
            ProductKind::Cartesian => ProdElem::Pair(a, b),
            ProductKind::LowerTruncated => {
                if self.is_p_bottom(&a) || self.is_q_bottom(&b) {
                    ProdElem::Zero
                } else {
                    ProdElem::Pair(a, b)
                }
            }
            ProductKind::UpperTruncated => {
                if self.is_p_top(&a) || self.is_q_top(&b) {
                    ProdElem::One
                } else {
                    ProdElem::Pair(a, b)
                }
            }
            ProductKind::DisjointUnion => unreachable!("disjoint union has no pairs"),
        }
    }

    fn interior_left(&self, a: P::Elem) -> ProdElem<P::Elem, Q::Elem> {
        if self.is_p_bottom(&a) {
            ProdElem::Zero
        } else if self.is_p_top(&a) {
            ProdElem::One
        } else {
            ProdElem::Left(a)
        }
    }

    fn interior_right(&self, b: Q::Elem) -> ProdElem<P::Elem, Q::Elem> {
        if self.is_q_bottom(&b) {
            ProdElem::Zero
        } else if self.is_q_top(&b) {
            ProdElem::One
        } else {
            ProdElem::Right(b)
        }
    }
}

impl<P: Lattice, Q: Lattice> Lattice for ProductLattice<P, Q> {
    type Elem = ProdElem<P::Elem, Q::Elem>;

    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        use ProdElem::*;
        match (a, b) {
            (Zero, _) | (_, Zero) => Zero,
            (One, x) | (x, One) => x.clone(),
            (Pair(a1, a2), Pair(b1, b2)) => {
                self.pair(self.left.meet(a1, b1), self.right.meet(a2, b2))
            }
            (Left(x), Left(y)) => self.interior_left(self.left.meet(x, y)),
            (Right(x), Right(y)) => self.interior_right(self.right.meet(x, y)),
            (Left(_), Right(_)) | (Right(_), Left(_)) => Zero,
            _ => unreachable!("mixed product element shapes"),
        }
    }

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        use ProdElem::*;
        match (a, b) {
            (One, _) | (_, One) => One,
            (Zero, x) | (x, Zero) => x.clone(),
            (Pair(a1, a2), Pair(b1, b2)) => {
                // Joins of carrier pairs stay in the carrier for the lower
                // truncated product; for the upper truncated one they may hit
                // the removed top and collapse.
                self.pair(self.left.join(a1, b1), self.right.join(a2, b2))
            }
            (Left(x), Left(y)) => self.interior_left(self.left.join(x, y)),
            (Right(x), Right(y)) => self.interior_right(self.right.join(x, y)),
            (Left(_), Right(_)) | (Right(_), Left(_)) => One,
            _ => unreachable!("mixed product element shapes"),
        }
    }

    fn bottom(&self) -> Option<Self::Elem> {
        match self.kind {
            ProductKind::Cartesian => Some(ProdElem::Pair(
                self.p_bottom.clone()?,
                self.q_bottom.clone()?,
            )),
            ProductKind::LowerTruncated | ProductKind::DisjointUnion => Some(ProdElem::Zero),
            ProductKind::UpperTruncated => {
                let b = ProdElem::Pair(self.p_bottom.clone()?, self.q_bottom.clone()?);
                // Degenerate inputs (bottom = top) collapse to the adjoined 𝟏.
                Some(match b {
                    ProdElem::Pair(a, c) => self.pair(a, c),
                    other => other,
                })
            }
        }
    }

    fn top(&self) -> Option<Self::Elem> {
        match self.kind {
            ProductKind::Cartesian => {
                Some(ProdElem::Pair(self.p_top.clone()?, self.q_top.clone()?))
            }
            ProductKind::UpperTruncated | ProductKind::DisjointUnion => Some(ProdElem::One),
            ProductKind::LowerTruncated => {
                let t = ProdElem::Pair(self.p_top.clone()?, self.q_top.clone()?);
                Some(match t {
                    ProdElem::Pair(a, c) => self.pair(a, c),
                    other => other,
                })
            }
        }
    }

    fn rank(&self, e: &Self::Elem) -> Option<u64> {
        use ProdElem::*;
        match (self.kind, e) {
            (ProductKind::Cartesian, Pair(a, b)) => {
                Some(self.left.rank(a)? + self.right.rank(b)?)
            }
            (ProductKind::LowerTruncated, Zero) => Some(0),
            (ProductKind::LowerTruncated, Pair(a, b)) => {
                Some(self.left.rank(a)? + self.right.rank(b)? - 1)
            }
            _ => None,
        }
    }

    fn elements(&self) -> Result<Vec<Self::Elem>, LatticeError> {
        let ps = self.left.elements()?;
        let qs = self.right.elements()?;
        let mut out = Vec::new();
        match self.kind {
            ProductKind::Cartesian => {
                for p in &ps {
                    for q in &qs {
                        out.push(ProdElem::Pair(p.clone(), q.clone()));
                    }
                }
            }
            ProductKind::LowerTruncated => {
                out.push(ProdElem::Zero);
                for p in ps.iter().filter(|p| !self.is_p_bottom(p)) {
                    for q in qs.iter().filter(|q| !self.is_q_bottom(q)) {
                        out.push(ProdElem::Pair(p.clone(), q.clone()));
                    }
                }
            }
            ProductKind::UpperTruncated => {
                out.push(ProdElem::One);
                for p in ps.iter().filter(|p| !self.is_p_top(p)) {
                    for q in qs.iter().filter(|q| !self.is_q_top(q)) {
                        out.push(ProdElem::Pair(p.clone(), q.clone()));
                    }
                }
            }
            ProductKind::DisjointUnion => {
                out.push(ProdElem::Zero);
                out.push(ProdElem::One);
                for p in ps
                    .iter()
                    .filter(|p| !self.is_p_bottom(p) && !self.is_p_top(p))
                {
                    out.push(ProdElem::Left(p.clone()));
                }
                for q in qs
                    .iter()
                    .filter(|q| !self.is_q_bottom(q) && !self.is_q_top(q))
                {
                    out.push(ProdElem::Right(q.clone()));
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn elem_string(&self, e: &Self::Elem) -> String {
        use ProdElem::*;
        match e {
            Zero => "0".to_string(),
            One => "1".to_string(),
            Pair(a, b) => format!(
                "({},{})",
                self.left.elem_string(a),
                self.right.elem_string(b)
            ),
            Left(a) => format!("L({})", self.left.elem_string(a)),
            Right(b) => format!("R({})", self.right.elem_string(b)),
        }
    }
}

/// Coherence map µ : P × Q → P ⋄ Q, sending a pair to itself when both
/// coordinates are nonzero and to 𝟎 otherwise.
pub fn coherence_mu<P: Lattice, Q: Lattice>(
    target: &ProductLattice<P, Q>,
    p: &P::Elem,
    q: &Q::Elem,
) -> ProdElem<P::Elem, Q::Elem> {
    debug_assert_eq!(target.kind, ProductKind::LowerTruncated);
    target.pair(p.clone(), q.clone())
}

/// Coherence map µ : P × Q → P ⊔ Q for the disjoint union: (p, 𝟏) ↦ p,
/// (𝟏, q) ↦ q (interior images), everything else ↦ 𝟎.
pub fn coherence_mu_disjoint<P: Lattice, Q: Lattice>(
    target: &ProductLattice<P, Q>,
    p: &P::Elem,
    q: &Q::Elem,
) -> ProdElem<P::Elem, Q::Elem> {
    debug_assert_eq!(target.kind, ProductKind::DisjointUnion);
    let p_is_one = target.is_p_top(p);
    let q_is_one = target.is_q_top(q);
    let p_is_zero = target.is_p_bottom(p);
    let q_is_zero = target.is_q_bottom(q);
    if q_is_one && !p_is_zero {
        target.interior_left(p.clone())
    } else if p_is_one && !q_is_zero {
        target.interior_right(q.clone())
    } else {
        ProdElem::Zero
    }
}

/// Associator (P ⋄ Q) ⋄ R → P ⋄ (Q ⋄ R): ((p,q),r) ↦ (p,(q,r)), 𝟎 ↦ 𝟎.
#[allow(clippy::type_complexity)]
pub fn diamond_associator<A, B, C>(
    e: &ProdElem<ProdElem<A, B>, C>,
) -> ProdElem<A, ProdElem<B, C>>
where
    A: Clone,
    B: Clone,
    C: Clone,
{
    match e {
        ProdElem::Zero => ProdElem::Zero,
        ProdElem::Pair(ProdElem::Pair(p, q), r) => ProdElem::Pair(
            p.clone(),
            ProdElem::Pair(q.clone(), r.clone()),
        ),
        _ => unreachable!("nonzero ⋄-product elements are nested pairs"),
    }
}

/// Left unitor B₁ ⋄ P → P (B₁ = {𝟎 < 𝟏}); the adjoined zero goes to P's
/// bottom, which the lower truncated product guarantees to exist.
pub fn diamond_left_unitor<P: Lattice>(
    p: &P,
    e: &ProdElem<usize, P::Elem>,
) -> P::Elem {
    match e {
        ProdElem::Zero => p.bottom().expect("⋄ operand has a bottom"),
        ProdElem::Pair(_, x) => x.clone(),
        _ => unreachable!(),
    }
}

/// Right unitor P ⋄ B₁ → P.
pub fn diamond_right_unitor<P: Lattice>(
    p: &P,
    e: &ProdElem<P::Elem, usize>,
) -> P::Elem {
    match e {
        ProdElem::Zero => p.bottom().expect("⋄ operand has a bottom"),
        ProdElem::Pair(x, _) => x.clone(),
        _ => unreachable!(),
    }
}

/// Symmetry P ⋄ Q → Q ⋄ P by swapping the factors.
pub fn diamond_symmetry<A: Clone, B: Clone>(e: &ProdElem<A, B>) -> ProdElem<B, A> {
    match e {
        ProdElem::Zero => ProdElem::Zero,
        ProdElem::Pair(a, b) => ProdElem::Pair(b.clone(), a.clone()),
        _ => unreachable!(),
    }
}
