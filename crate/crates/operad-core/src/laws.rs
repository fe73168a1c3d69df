//! Exhaustive law checkers over finite windows: operad axioms, lattice
//! compatibility of the partial compositions, and lax morphisms.

use serde_json::json;

use crate::perm::Perm;
use crate::{LatticeOperad, Operad, OperadError, Window};

/// Inputs and both sides of a failed identity, kept as typed elements so the
/// failure can be re-checked directly.
#[derive(Debug, Clone)]
pub struct Counterexample<E> {
    pub elements: Vec<E>,
    pub slots: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct LawReport<E> {
    pub law: &'static str,
    pub window: String,
    pub pass: bool,
    pub counterexample: Option<Counterexample<E>>,
}

impl<E> LawReport<E> {
    fn pass(law: &'static str, window: &str) -> Self {
        LawReport {
            law,
            window: window.to_string(),
            pass: true,
            counterexample: None,
        }
    }

    fn fail(law: &'static str, window: &str, cex: Counterexample<E>) -> Self {
        LawReport {
            law,
            window: window.to_string(),
            pass: false,
            counterexample: Some(cex),
        }
    }

    /// One JSON object per report; `show` renders the stored elements.
    pub fn to_json(&self, show: impl Fn(&E) -> String) -> serde_json::Value {
        let mut v = json!({
            "law": self.law,
            "window": self.window,
            "status": if self.pass { "pass" } else { "fail" },
        });
        if let Some(cex) = &self.counterexample {
            v["counterexample"] = json!({
                "elements": cex.elements.iter().map(&show).collect::<Vec<_>>(),
                "slots": cex.slots,
                "lhs": cex.lhs,
                "rhs": cex.rhs,
            });
        }
        v
    }
}

/// Render a window bound like "arities {2, 3, 4}, sizes {1, 2, 5}".
fn window_label<E>(window: &Window<E>) -> String {
    let arities: Vec<String> = window.keys().map(|k| k.to_string()).collect();
    format!("arities {{{}}}", arities.join(","))
}

/// Accumulates the first counterexample to a law while scanning a window;
/// public so that operad-specific checkers elsewhere can produce the same
/// report shape.
pub struct Recorder<E> {
    law: &'static str,
    window: String,
    failure: Option<Counterexample<E>>,
}

impl<E: Clone + std::fmt::Debug> Recorder<E> {
    pub fn new<W>(law: &'static str, window: &Window<W>) -> Recorder<E> {
        Recorder {
            law,
            window: window_label(window),
            failure: None,
        }
    }

    pub fn record(&mut self, elements: &[&E], slots: &[usize], lhs: &dyn std::fmt::Debug, rhs: &dyn std::fmt::Debug) {
        if self.failure.is_none() {
            self.failure = Some(Counterexample {
                elements: elements.iter().map(|e| (*e).clone()).collect(),
                slots: slots.to_vec(),
                lhs: format!("{lhs:?}"),
                rhs: format!("{rhs:?}"),
            });
        }
    }

    pub fn report(self) -> LawReport<E> {
        match self.failure {
            None => LawReport::pass(self.law, &self.window),
            Some(cex) => LawReport::fail(self.law, &self.window, cex),
        }
    }
}

/// Check sequential and parallel associativity, the unit laws (when a unit
/// exists), and equivariance (when the operad is symmetric) over all tuples
/// drawn from the window. Cost is cubic in the total window size.
pub fn check_operad_laws<O: Operad>(
    op: &O,
    window: &Window<O::Elem>,
) -> Result<Vec<LawReport<O::Elem>>, OperadError> {
    if window.is_empty() {
        return Err(OperadError::InfiniteCarrier);
    }
    let mut reports = Vec::new();

    let mut seq = Recorder::new("sequential-associativity", window);
    let mut par = Recorder::new("parallel-associativity", window);
    for (&l, ws_a) in window {
        for (&m, ws_b) in window {
            for (_, ws_c) in window {
                for a in ws_a {
                    for b in ws_b {
                        for c in ws_c {
                            // (a ∘ᵢ b) ∘_{i+j−1} c = a ∘ᵢ (b ∘ⱼ c)
                            for i in 1..=l {
                                for j in 1..=m {
                                    let lhs =
                                        op.compose(&op.compose(a, i, b)?, i + j - 1, c)?;
                                    let rhs = op.compose(a, i, &op.compose(b, j, c)?)?;
                                    if lhs != rhs {
                                        seq.record(&[a, b, c], &[i, j], &lhs, &rhs);
                                    }
                                }
                            }
                            // (a ∘ᵢ b) ∘_{k+m−1} c = (a ∘ₖ c) ∘ᵢ b for i < k
                            for i in 1..=l {
                                for k in (i + 1)..=l {
                                    let lhs =
                                        op.compose(&op.compose(a, i, b)?, k + m - 1, c)?;
                                    let rhs = op.compose(&op.compose(a, k, c)?, i, b)?;
                                    if lhs != rhs {
                                        par.record(&[a, b, c], &[i, k], &lhs, &rhs);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    reports.push(seq.report());
    reports.push(par.report());

    if let Some(e) = op.unit() {
        let mut left = Recorder::new("left-unit", window);
        let mut right = Recorder::new("right-unit", window);
        for (&m, ws) in window {
            for a in ws {
                let lu = op.compose(&e, 1, a)?;
                if &lu != a {
                    left.record(&[&e, a], &[1], &lu, a);
                }
                for i in 1..=m {
                    let ru = op.compose(a, i, &e)?;
                    if &ru != a {
                        right.record(&[a, &e], &[i], &ru, a);
                    }
                }
            }
        }
        reports.push(left.report());
        reports.push(right.report());
    }

    if op.is_symmetric() {
        let mut inner = Recorder::new("equivariance-inner", window);
        let mut outer = Recorder::new("equivariance-outer", window);
        for (&m, ws_a) in window {
            for (&n, ws_b) in window {
                let sigmas = Perm::all(m);
                let taus = Perm::all(n);
                for a in ws_a {
                    for b in ws_b {
                        for i in 1..=m {
                            let ab = op.compose(a, i, b)?;
                            // a ∘ᵢ (b·τ) = (a ∘ᵢ b) · (1 ⊕ τ ⊕ 1)
                            for tau in &taus {
                                let lhs = op.compose(a, i, &op.act(b, tau))?;
                                let rhs = op.act(&ab, &tau.block_embed(i, m));
                                if lhs != rhs {
                                    inner.record(&[a, b], &[i], &lhs, &rhs);
                                }
                            }
                        }
                        // (a·σ) ∘ᵢ b = (a ∘_{σ(i)} b) · inflate(σ, i, n)
                        for sigma in &sigmas {
                            let a_sigma = op.act(a, sigma);
                            for i in 1..=m {
                                let lhs = op.compose(&a_sigma, i, b)?;
                                let rhs = op.act(
                                    &op.compose(a, sigma.image(i), b)?,
                                    &sigma.inflate(i, n),
                                );
                                if lhs != rhs {
                                    outer.record(&[a, b], &[i], &lhs, &rhs);
                                }
                            }
                        }
                    }
                }
            }
        }
        reports.push(inner.report());
        reports.push(outer.report());
    }

    Ok(reports)
}

/// Which flavor of lattice compatibility to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatibilityMode {
    /// Distributivity over meet and join in each argument separately:
    /// (p∧r)∘ᵢq = (p∘ᵢq)∧(r∘ᵢq), p∘ᵢ(q∧s) = (p∘ᵢq)∧(p∘ᵢs), and the two
    /// join counterparts. This is the operative compatibility notion; every
    /// additive structure (integer shifts, multi-index shifts) satisfies it
    /// while failing the stronger `Joint` form below.
    Full,
    /// The compositions as single maps out of the product lattice:
    /// (p∧r)∘ᵢ(q∧s) = (p∘ᵢq)∧(r∘ᵢs) and the join counterpart, quantified
    /// over quadruples. Strictly stronger than `Full` (specialize p = r);
    /// it holds exactly when the two arguments never interact, e.g. for
    /// splicing-style compositions, and fails already for integers under
    /// addition: min(0,1)+min(1,0) = 0 ≠ 1 = min(0+1, 1+0).
    Joint,
    /// Monotonicity in each argument together with the two quadruple
    /// inequalities (≥ for meets, ≤ for joins); by monotonicity these
    /// inequalities are equivalent to the `Joint` equalities.
    Weak,
}

/// Check compatibility of the partial compositions with meets and joins over
/// the window, in the requested mode. Reports are split per law and per
/// argument side, so a structure that satisfies only part of the suite
/// (e.g. joins but not meets, or the inner argument but not the outer) is
/// visible as such.
pub fn check_lattice_compatibility<O: LatticeOperad>(
    op: &O,
    window: &Window<O::Elem>,
    mode: CompatibilityMode,
) -> Result<Vec<LawReport<O::Elem>>, OperadError> {
    if window.is_empty() {
        return Err(OperadError::InfiniteCarrier);
    }
    let mut reports = Vec::new();
    match mode {
        CompatibilityMode::Full => {
            let mut meet_outer = Recorder::new("meet-distributivity-outer", window);
            let mut join_outer = Recorder::new("join-distributivity-outer", window);
            let mut meet_inner = Recorder::new("meet-distributivity-inner", window);
            let mut join_inner = Recorder::new("join-distributivity-inner", window);
            for (&m, ws_m) in window {
                for (_, ws_n) in window {
                    for p in ws_m {
                        for q in ws_n {
                            for i in 1..=m {
                                let pq = op.compose(p, i, q)?;
                                // (p∧r)∘ᵢq = (p∘ᵢq)∧(r∘ᵢq), same for ∨.
                                for r in ws_m {
                                    let rq = op.compose(r, i, q)?;
                                    let lhs = op.compose(&op.meet(p, r), i, q)?;
                                    let rhs = op.meet(&pq, &rq);
                                    if lhs != rhs {
                                        meet_outer.record(&[p, r, q], &[i], &lhs, &rhs);
                                    }
                                    let lhs = op.compose(&op.join(p, r), i, q)?;
                                    let rhs = op.join(&pq, &rq);
                                    if lhs != rhs {
                                        join_outer.record(&[p, r, q], &[i], &lhs, &rhs);
                                    }
                                }
                                // p∘ᵢ(q∧s) = (p∘ᵢq)∧(p∘ᵢs), same for ∨.
                                for s in ws_n {
                                    let ps = op.compose(p, i, s)?;
                                    let lhs = op.compose(p, i, &op.meet(q, s))?;
                                    let rhs = op.meet(&pq, &ps);
                                    if lhs != rhs {
                                        meet_inner.record(&[p, q, s], &[i], &lhs, &rhs);
                                    }
                                    let lhs = op.compose(p, i, &op.join(q, s))?;
                                    let rhs = op.join(&pq, &ps);
                                    if lhs != rhs {
                                        join_inner.record(&[p, q, s], &[i], &lhs, &rhs);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            reports.push(meet_outer.report());
            reports.push(join_outer.report());
            reports.push(meet_inner.report());
            reports.push(join_inner.report());
        }
        CompatibilityMode::Joint => {
            let mut meet = Recorder::new("joint-meet-distributivity", window);
            let mut join = Recorder::new("joint-join-distributivity", window);
            for (&m, ws_m) in window {
                for (_, ws_n) in window {
                    for p in ws_m {
                        for r in ws_m {
                            for q in ws_n {
                                for s in ws_n {
                                    for i in 1..=m {
                                        let lhs = op
                                            .compose(&op.meet(p, r), i, &op.meet(q, s))?;
                                        let rhs =
                                            op.meet(&op.compose(p, i, q)?, &op.compose(r, i, s)?);
                                        if lhs != rhs {
                                            meet.record(&[p, r, q, s], &[i], &lhs, &rhs);
                                        }
                                        let lhs = op
                                            .compose(&op.join(p, r), i, &op.join(q, s))?;
                                        let rhs =
                                            op.join(&op.compose(p, i, q)?, &op.compose(r, i, s)?);
                                        if lhs != rhs {
                                            join.record(&[p, r, q, s], &[i], &lhs, &rhs);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            reports.push(meet.report());
            reports.push(join.report());
        }
        CompatibilityMode::Weak => {
            let mut mono_outer = Recorder::new("monotonicity-outer", window);
            let mut mono_inner = Recorder::new("monotonicity-inner", window);
            let mut meet_ineq = Recorder::new("meet-inequality", window);
            let mut join_ineq = Recorder::new("join-inequality", window);
            for (&m, ws_m) in window {
                for (_, ws_n) in window {
                    for p in ws_m {
                        for r in ws_m {
                            for q in ws_n {
                                for i in 1..=m {
                                    if op.leq(p, r) {
                                        let lo = op.compose(p, i, q)?;
                                        let hi = op.compose(r, i, q)?;
                                        if !op.leq(&lo, &hi) {
                                            mono_outer.record(&[p, r, q], &[i], &lo, &hi);
                                        }
                                    }
                                }
                                for s in ws_n {
                                    for i in 1..=m {
                                        if op.leq(q, s) {
                                            let lo = op.compose(p, i, q)?;
                                            let hi = op.compose(p, i, s)?;
                                            if !op.leq(&lo, &hi) {
                                                mono_inner.record(&[p, q, s], &[i], &lo, &hi);
                                            }
                                        }
                                        let lhs =
                                            op.compose(&op.meet(p, r), i, &op.meet(q, s))?;
                                        let rhs =
                                            op.meet(&op.compose(p, i, q)?, &op.compose(r, i, s)?);
                                        if !op.leq(&rhs, &lhs) {
                                            meet_ineq.record(&[p, r, q, s], &[i], &lhs, &rhs);
                                        }
                                        let lhs =
                                            op.compose(&op.join(p, r), i, &op.join(q, s))?;
                                        let rhs =
                                            op.join(&op.compose(p, i, q)?, &op.compose(r, i, s)?);
                                        if !op.leq(&lhs, &rhs) {
                                            join_ineq.record(&[p, r, q, s], &[i], &lhs, &rhs);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            reports.push(mono_outer.report());
            reports.push(mono_inner.report());
            reports.push(meet_ineq.report());
            reports.push(join_ineq.report());
        }
    }
    Ok(reports)
}

/// Check that a per-arity map f: K → L is a lax morphism: each component is
/// a lattice homomorphism, f is equivariant when both sides are symmetric,
/// and f(a)∘ᵢf(b) ≤ f(a∘ᵢb). A final informational report records whether
/// the inequality is an equality throughout the window (a strict morphism).
pub fn check_lax<K, L, F>(
    f: F,
    source: &K,
    target: &L,
    window: &Window<K::Elem>,
) -> Result<Vec<LawReport<K::Elem>>, OperadError>
where
    K: LatticeOperad,
    L: LatticeOperad,
    F: Fn(&K::Elem) -> L::Elem,
{
    if window.is_empty() {
        return Err(OperadError::InfiniteCarrier);
    }
    let mut reports = Vec::new();

    let mut arity = Recorder::new("lax-arity", window);
    for ws in window.values() {
        for a in ws {
            let fa = f(a);
            if target.arity(&fa) != source.arity(a) {
                arity.record(&[a], &[], &source.arity(a), &target.arity(&fa));
            }
        }
    }
    reports.push(arity.report());

    let mut hom = Recorder::new("lax-lattice-homomorphism", window);
    for ws in window.values() {
        for a in ws {
            for b in ws {
                let meet_img = f(&source.meet(a, b));
                let img_meet = target.meet(&f(a), &f(b));
                if meet_img != img_meet {
                    hom.record(&[a, b], &[], &meet_img, &img_meet);
                }
                let join_img = f(&source.join(a, b));
                let img_join = target.join(&f(a), &f(b));
                if join_img != img_join {
                    hom.record(&[a, b], &[], &join_img, &img_join);
                }
            }
        }
    }
    reports.push(hom.report());

    if source.is_symmetric() && target.is_symmetric() {
        let mut equi = Recorder::new("lax-equivariance", window);
        for (&n, ws) in window {
            for sigma in Perm::all(n) {
                for a in ws {
                    let lhs = f(&source.act(a, &sigma));
                    let rhs = target.act(&f(a), &sigma);
                    if lhs != rhs {
                        equi.record(&[a], &[], &lhs, &rhs);
                    }
                }
            }
        }
        reports.push(equi.report());
    }

    let mut lax = Recorder::new("lax-inequality", window);
    let mut strict = Recorder::new("lax-strictness", window);
    for (&m, ws_a) in window {
        for (_, ws_b) in window {
            for a in ws_a {
                for b in ws_b {
                    for i in 1..=m {
                        let composed_then_mapped = f(&source.compose(a, i, b)?);
                        let mapped_then_composed = target.compose(&f(a), i, &f(b))?;
                        if !target.leq(&mapped_then_composed, &composed_then_mapped) {
                            lax.record(&[a, b], &[i], &mapped_then_composed, &composed_then_mapped);
                        }
                        if mapped_then_composed != composed_then_mapped {
                            strict.record(&[a, b], &[i], &mapped_then_composed, &composed_then_mapped);
                        }
                    }
                }
            }
        }
    }
    reports.push(lax.report());
    reports.push(strict.report());

    Ok(reports)
}

/// Check that φ is an operad map compatible with the compositions slotwise:
/// φ(a) ∘ᵢ φ(b) = φ(a ∘ᵢ b), and a lattice isomorphism per arity when
/// `lattice` is set.
pub fn check_automorphism<O, F>(
    op: &O,
    phi: F,
    window: &Window<O::Elem>,
    lattice: bool,
) -> Result<Vec<LawReport<O::Elem>>, OperadError>
where
    O: LatticeOperad,
    F: Fn(&O::Elem) -> O::Elem,
{
    check_structure_map(op, phi, window, lattice, false)
}

/// Check that φ reverses the compositions: φ(a) ∘_{m−i+1} φ(b) = φ(a ∘ᵢ b),
/// the shape of word-reversal involutions.
pub fn check_anti_automorphism<O, F>(
    op: &O,
    phi: F,
    window: &Window<O::Elem>,
    lattice: bool,
) -> Result<Vec<LawReport<O::Elem>>, OperadError>
where
    O: LatticeOperad,
    F: Fn(&O::Elem) -> O::Elem,
{
    check_structure_map(op, phi, window, lattice, true)
}

fn check_structure_map<O, F>(
    op: &O,
    phi: F,
    window: &Window<O::Elem>,
    lattice: bool,
    reverse_slots: bool,
) -> Result<Vec<LawReport<O::Elem>>, OperadError>
where
    O: LatticeOperad,
    F: Fn(&O::Elem) -> O::Elem,
{
    if window.is_empty() {
        return Err(OperadError::InfiniteCarrier);
    }
    let mut reports = Vec::new();
    let law = if reverse_slots {
        "composition-anti-compatibility"
    } else {
        "composition-compatibility"
    };
    let mut comp = Recorder::new(law, window);
    for (&m, ws_a) in window {
        for (_, ws_b) in window {
            for a in ws_a {
                for b in ws_b {
                    for i in 1..=m {
                        let target_slot = if reverse_slots { m - i + 1 } else { i };
                        let lhs = op.compose(&phi(a), target_slot, &phi(b))?;
                        let rhs = phi(&op.compose(a, i, b)?);
                        if lhs != rhs {
                            comp.record(&[a, b], &[i], &lhs, &rhs);
                        }
                    }
                }
            }
        }
    }
    reports.push(comp.report());

    if lattice {
        let mut hom = Recorder::new("image-lattice-map", window);
        for ws in window.values() {
            for a in ws {
                for b in ws {
                    let lhs = phi(&op.meet(a, b));
                    let rhs = op.meet(&phi(a), &phi(b));
                    if lhs != rhs {
                        hom.record(&[a, b], &[], &lhs, &rhs);
                    }
                    let lhs = phi(&op.join(a, b));
                    let rhs = op.join(&phi(a), &phi(b));
                    if lhs != rhs {
                        hom.record(&[a, b], &[], &lhs, &rhs);
                    }
                }
            }
        }
        reports.push(hom.report());
    }
    Ok(reports)
}

/// True when every report passed; handy for asserting whole suites.
pub fn all_pass<E>(reports: &[LawReport<E>]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// The first failing report, if any.
pub fn first_failure<E>(reports: &[LawReport<E>]) -> Option<&LawReport<E>> {
    reports.iter().find(|r| !r.pass)
}
