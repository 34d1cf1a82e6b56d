//! Sig-polynomials, leading pairs, the orders that drive signature-based
//! reduction, and single-step / closure top-reduction.
//!
//! A sig-polynomial is a pair (u, p) with u·f = p for the bound generator
//! vector f. Fast mode stores only the signature lm(u); verification mode
//! carries the full module vector u and re-checks the identity after
//! every reduction step. Top-reduction never changes the signature: a
//! reducer qualifies only when its scaled signature is strictly below the
//! target's.

use std::cmp::Ordering;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::sigmodule::{ModuleOrder, Signature};

/// A sig-polynomial. `poly` is zero exactly for syzygies. `module_vec`
/// is the full vector u, present only in verification mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigPoly {
    pub sig: Signature,
    pub poly: Polynomial,
    pub module_vec: Option<Vec<Polynomial>>,
}

impl SigPoly {
    pub fn new(sig: Signature, poly: Polynomial) -> SigPoly {
        SigPoly {
            sig,
            poly,
            module_vec: None,
        }
    }

    pub fn with_vec(sig: Signature, poly: Polynomial, module_vec: Vec<Polynomial>) -> SigPoly {
        SigPoly {
            sig,
            poly,
            module_vec: Some(module_vec),
        }
    }

    pub fn is_syzygy(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn lead(&self) -> Option<&Monomial> {
        self.poly.lm()
    }

    /// The image (lm(u), lm(p)); `lead` is `None` for syzygies.
    pub fn lm_pair(&self) -> LeadingPair {
        LeadingPair {
            sig: self.sig.clone(),
            lead: self.poly.lm().cloned(),
        }
    }
}

/// The leading pair (s, m) of a sig-polynomial; `lead = None` is the
/// ZERO marker of a syzygy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingPair {
    pub sig: Signature,
    pub lead: Option<Monomial>,
}

impl LeadingPair {
    pub fn new(sig: Signature, lead: Option<Monomial>) -> LeadingPair {
        LeadingPair { sig, lead }
    }

    pub fn is_syzygy(&self) -> bool {
        self.lead.is_none()
    }
}

/// `a` tm-reduces `b`: some multiplier carries a's lead onto b's lead
/// while keeping the scaled signature strictly below b's. Both pairs must
/// be non-syzygy.
pub fn cmp_ms(a: &LeadingPair, b: &LeadingPair, mo: &ModuleOrder) -> bool {
    let a_lead = a.lead.as_ref().expect("cmp_ms needs non-syzygy operands");
    let b_lead = b.lead.as_ref().expect("cmp_ms needs non-syzygy operands");
    match b_lead.try_div(a_lead) {
        None => false,
        Some(lambda) => mo.cmp(&a.sig.scale(&lambda), &b.sig) == Ordering::Less,
    }
}

/// `a` ts-rewrites `b`: some multiplier carries a's signature onto b's
/// signature with a strictly smaller lead; a syzygy rewrites via plain
/// signature divisibility. `b` must be non-syzygy.
pub fn cmp_sm(a: &LeadingPair, b: &LeadingPair, mo: &ModuleOrder) -> bool {
    let b_lead = match &b.lead {
        Some(m) => m,
        None => return false,
    };
    match &a.lead {
        None => a.sig.divides(&b.sig),
        Some(a_lead) => {
            if a.sig.index != b.sig.index {
                return false;
            }
            match b.sig.mono.try_div(&a.sig.mono) {
                None => false,
                Some(lambda) => {
                    mo.base().cmp(&a_lead.mul(&lambda), b_lead) == Ordering::Less
                }
            }
        }
    }
}

/// One multiplier scales both the signature and the lead of `a` onto
/// `b`; for two syzygies this degenerates to signature divisibility.
pub fn divides_super(a: &LeadingPair, b: &LeadingPair) -> bool {
    match (&a.lead, &b.lead) {
        (None, None) => a.sig.divides(&b.sig),
        (Some(a_lead), Some(b_lead)) => {
            if a.sig.index != b.sig.index {
                return false;
            }
            match (b.sig.mono.try_div(&a.sig.mono), b_lead.try_div(a_lead)) {
                (Some(ls), Some(lm)) => ls == lm,
                _ => false,
            }
        }
        _ => false,
    }
}

/// The ratio order on same-index pairs: compares `a.lead * b.sig.mono`
/// against `b.lead * a.sig.mono` under the base order. `None` when the
/// signature indices differ (the order is not defined there).
pub fn cmp_l(a: &LeadingPair, b: &LeadingPair, base: MonomialOrder) -> Option<Ordering> {
    if a.sig.index != b.sig.index {
        return None;
    }
    let a_lead = a.lead.as_ref().expect("cmp_l needs non-syzygy operands");
    let b_lead = b.lead.as_ref().expect("cmp_l needs non-syzygy operands");
    Some(base.cmp(&a_lead.mul(&b.sig.mono), &b_lead.mul(&a.sig.mono)))
}

/// True when some candidate ts-rewrites the target (syzygy candidates via
/// the signature-divides rule).
pub fn is_ts_rewritable<'a, I>(target: &LeadingPair, candidates: I, mo: &ModuleOrder) -> bool
where
    I: IntoIterator<Item = &'a LeadingPair>,
{
    candidates.into_iter().any(|b| cmp_sm(b, target, mo))
}

/// True when some candidate super top-reduces the target. Callers must
/// not pass the target element itself: two distinct elements with equal
/// leading pairs do count.
pub fn is_super_reducible<'a, I>(target: &LeadingPair, candidates: I) -> bool
where
    I: IntoIterator<Item = &'a LeadingPair>,
{
    candidates.into_iter().any(|b| divides_super(b, target))
}

/// A basis element as seen by reduction: the sig-polynomial, its cached
/// leading pair, and a creation stamp (insertion order, used for
/// tie-breaking and stable references while positions shift).
#[derive(Debug, Clone)]
pub struct BasisEntry {
    pub sp: SigPoly,
    pub pair: LeadingPair,
    pub stamp: u64,
}

impl BasisEntry {
    pub fn new(sp: SigPoly, stamp: u64) -> BasisEntry {
        let pair = sp.lm_pair();
        BasisEntry { sp, pair, stamp }
    }
}

/// Picks the qualifying tm-reducer with the smallest scaled signature,
/// ties broken by earliest insertion. Returns `None` when the target is
/// top-irreducible.
pub fn find_tm_reducer<'a>(
    target: &LeadingPair,
    reducers: &'a [BasisEntry],
    mo: &ModuleOrder,
) -> Option<&'a BasisEntry> {
    let lead = target.lead.as_ref().expect("cannot tm-reduce a syzygy");
    let mut best: Option<(&BasisEntry, Signature)> = None;
    for r in reducers {
        let r_lead = match &r.pair.lead {
            Some(m) => m,
            None => continue,
        };
        let lambda = match lead.try_div(r_lead) {
            Some(l) => l,
            None => continue,
        };
        let scaled = r.pair.sig.scale(&lambda);
        if mo.cmp(&scaled, &target.sig) != Ordering::Less {
            continue;
        }
        match &best {
            None => best = Some((r, scaled)),
            Some((cur, cur_scaled)) => match mo.cmp(&scaled, cur_scaled) {
                Ordering::Less => best = Some((r, scaled)),
                Ordering::Equal if r.stamp < cur.stamp => best = Some((r, scaled)),
                _ => {}
            },
        }
    }
    best.map(|(r, _)| r)
}

/// One top-reduction step; `None` when no reducer qualifies. The
/// signature of the result equals the signature of the target.
pub fn tm_reduce_step(
    ring: &Ring,
    mo: &ModuleOrder,
    target: &SigPoly,
    reducers: &[BasisEntry],
) -> Option<SigPoly> {
    let pair = target.lm_pair();
    let r = find_tm_reducer(&pair, reducers, mo)?;
    Some(apply_reduction(ring, target, &r.sp))
}

fn apply_reduction(ring: &Ring, target: &SigPoly, reducer: &SigPoly) -> SigPoly {
    let lead = target.poly.lm().expect("non-syzygy target");
    let r_lead = reducer.poly.lm().expect("non-syzygy reducer");
    let lambda = lead.try_div(r_lead).expect("reducer lead divides");
    let c = -(target.poly.lc().unwrap() / reducer.poly.lc().unwrap());
    let poly = ring.addmul(&target.poly, c, &lambda, &reducer.poly);
    let module_vec = match (&target.module_vec, &reducer.module_vec) {
        (Some(tu), Some(ru)) => Some(
            tu.iter()
                .zip(ru.iter())
                .map(|(a, b)| ring.addmul(a, c, &lambda, b))
                .collect(),
        ),
        _ => None,
    };
    SigPoly {
        sig: target.sig.clone(),
        poly,
        module_vec,
    }
}

/// Result of reducing to a fixpoint.
#[derive(Debug)]
pub struct TmReduction {
    pub result: SigPoly,
    pub steps: u64,
    /// Verification-mode failures of u·f = p (always 0 for a correct run).
    pub identity_violations: u64,
}

/// The reflexive-transitive closure of top-reduction: iterates until the
/// polynomial is zero or top-irreducible. Terminates because the leading
/// monomial strictly decreases under the well-order. When `verify_inputs`
/// is given, the identity u·f = p is checked before the first and after
/// every step.
pub fn tm_reduce_full(
    ring: &Ring,
    mo: &ModuleOrder,
    target: SigPoly,
    reducers: &[BasisEntry],
    verify_inputs: Option<&[Polynomial]>,
) -> TmReduction {
    let mut current = target;
    let mut steps = 0;
    let mut identity_violations = 0;
    if let Some(f) = verify_inputs {
        if !holds_identity(ring, &current, f) {
            identity_violations += 1;
        }
    }
    while !current.poly.is_zero() {
        match tm_reduce_step(ring, mo, &current, reducers) {
            None => break,
            Some(next) => {
                debug_assert_eq!(next.sig, current.sig, "reduction must preserve the signature");
                current = next;
                steps += 1;
                if let Some(f) = verify_inputs {
                    if !holds_identity(ring, &current, f) {
                        identity_violations += 1;
                    }
                }
            }
        }
    }
    TmReduction {
        result: current,
        steps,
        identity_violations,
    }
}

/// u·f = p, exactly.
pub fn holds_identity(ring: &Ring, sp: &SigPoly, inputs: &[Polynomial]) -> bool {
    match &sp.module_vec {
        None => true,
        Some(u) => dot(ring, u, inputs) == sp.poly,
    }
}

/// The dot product u·f.
pub fn dot(ring: &Ring, u: &[Polynomial], f: &[Polynomial]) -> Polynomial {
    assert_eq!(u.len(), f.len(), "module vector length mismatch");
    let mut acc = Polynomial::zero();
    for (ui, fi) in u.iter().zip(f.iter()) {
        acc = ring.add(&acc, &ring.mul(ui, fi));
    }
    acc
}

/// The module leading monomial of a nonzero vector: the largest
/// `mono*e_i` over all terms of all components.
pub fn module_lm(mo: &ModuleOrder, u: &[Polynomial]) -> Option<Signature> {
    let mut best: Option<Signature> = None;
    for (i, ui) in u.iter().enumerate() {
        for term in ui.terms() {
            let cand = Signature::new(term.mono.clone(), (i + 1) as u32);
            match &best {
                None => best = Some(cand),
                Some(b) => {
                    if mo.cmp(&cand, b) == Ordering::Greater {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Monomial;

    fn mono(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps)
    }

    fn sig(exps: &[u16], index: u32) -> Signature {
        Signature::new(mono(exps), index)
    }

    fn pair(sig_exps: &[u16], index: u32, lead: Option<&[u16]>) -> LeadingPair {
        LeadingPair::new(sig(sig_exps, index), lead.map(mono))
    }

    fn pot_lex() -> ModuleOrder {
        ModuleOrder::pot(MonomialOrder::Lex)
    }

    fn pot_grevlex() -> ModuleOrder {
        ModuleOrder::pot(MonomialOrder::Grevlex)
    }

    #[test]
    fn lm_pair_examples() {
        let f = PrimeField::new(7).unwrap();
        let ring = Ring::new(f, 2, MonomialOrder::Lex);
        // (x*e2, x^2*y - x) has leading pair (x*e2, x^2*y)
        let p = ring.poly_from_terms(vec![
            (f.element(1), mono(&[2, 1])),
            (f.element(-1), mono(&[1, 0])),
        ]);
        let sp = SigPoly::new(sig(&[1, 0], 2), p);
        assert_eq!(sp.lm_pair(), pair(&[1, 0], 2, Some(&[2, 1])));

        // a syzygy maps to the ZERO marker
        let syz = SigPoly::new(sig(&[0, 0], 1), Polynomial::zero());
        assert!(syz.lm_pair().is_syzygy());

        // a nonzero constant has leading monomial 1
        let c = ring.poly_from_terms(vec![(f.element(5), mono(&[0, 0]))]);
        let sp = SigPoly::new(sig(&[0, 0], 1), c);
        assert_eq!(sp.lm_pair().lead, Some(mono(&[0, 0])));
    }

    #[test]
    fn cmp_ms_examples() {
        let mo = pot_lex();
        // a = (y*e1, x^2), b = (x*e2, x^2*y): lambda = y, y^2*e1 < x*e2
        let a = pair(&[0, 1], 1, Some(&[2, 0]));
        let b = pair(&[1, 0], 2, Some(&[2, 1]));
        assert!(cmp_ms(&a, &b, &mo));
        // strict: never reflexive
        assert!(!cmp_ms(&a, &a, &mo));
        // lead not divisible
        let c = pair(&[0, 0], 1, Some(&[0, 3]));
        assert!(!cmp_ms(&c, &b, &mo));
    }

    #[test]
    fn cmp_sm_examples() {
        let mo = pot_grevlex();
        // a = (e1, x), b = (y*e1, x^2*y^2): lambda = y, x*y < x^2*y^2
        let a = pair(&[0, 0], 1, Some(&[1, 0]));
        let b = pair(&[0, 1], 1, Some(&[2, 2]));
        assert!(cmp_sm(&a, &b, &mo));
        // syzygy rule: (e2, 0) rewrites anything with signature x*e2
        let syz = pair(&[0, 0], 2, None);
        let t = pair(&[1, 0], 2, Some(&[3, 3]));
        assert!(cmp_sm(&syz, &t, &mo));
        // signature not divisible
        let c = pair(&[2, 0], 1, Some(&[0, 1]));
        assert!(!cmp_sm(&c, &b, &mo));
    }

    #[test]
    fn divides_super_examples() {
        // (e1, x) onto (y*e1, x*y): lambda = y on both legs
        let a = pair(&[0, 0], 1, Some(&[1, 0]));
        let b = pair(&[0, 1], 1, Some(&[1, 1]));
        assert!(divides_super(&a, &b));
        // multiplier mismatch: sig leg needs y, lead leg needs x
        let c = pair(&[0, 1], 1, Some(&[2, 0]));
        assert!(!divides_super(&a, &c));
        // syzygy divisibility
        let s1 = pair(&[0, 0], 1, None);
        let s2 = pair(&[1, 0], 1, None);
        assert!(divides_super(&s1, &s2));
        // mixed syzygy / non-syzygy is false by definition
        assert!(!divides_super(&s1, &b));
        assert!(!divides_super(&b, &s2));
    }

    #[test]
    fn cmp_l_examples() {
        let base = MonomialOrder::Lex;
        // (e1, x) vs (y*e1, x*y): x*y = x*y
        let a = pair(&[0, 0], 1, Some(&[1, 0]));
        let b = pair(&[0, 1], 1, Some(&[1, 1]));
        assert_eq!(cmp_l(&a, &b, base), Some(Ordering::Equal));
        // same signature, larger lead is larger
        let c = pair(&[0, 0], 1, Some(&[2, 0]));
        assert_eq!(cmp_l(&c, &a, base), Some(Ordering::Greater));
        assert_eq!(cmp_l(&a, &c, base), Some(Ordering::Less));
        // different indices are incomparable
        let d = pair(&[0, 1], 2, Some(&[1, 0]));
        assert_eq!(cmp_l(&a, &d, base), None);
    }

    #[test]
    fn cmp_l_agrees_with_sm_and_ms() {
        // whenever a strictly rewrites or is reduced on the same index,
        // the ratio order points the same way
        use rand::{Rng, SeedableRng};
        let mo = pot_grevlex();
        let mut rng = rand::rngs::StdRng::seed_from_u64(23);
        let mut seen = 0;
        while seen < 200 {
            let rand_mono = |rng: &mut rand::rngs::StdRng| {
                Monomial::from_exps(&[rng.gen_range(0..4u16), rng.gen_range(0..4u16)])
            };
            let a = LeadingPair::new(
                Signature::new(rand_mono(&mut rng), 1),
                Some(rand_mono(&mut rng)),
            );
            let b = LeadingPair::new(
                Signature::new(rand_mono(&mut rng), 1),
                Some(rand_mono(&mut rng)),
            );
            if cmp_sm(&a, &b, &mo) || cmp_ms(&b, &a, &mo) {
                assert_eq!(cmp_l(&a, &b, mo.base()), Some(Ordering::Less));
                seen += 1;
            }
        }
    }

    fn entry(sp: SigPoly, stamp: u64) -> BasisEntry {
        BasisEntry::new(sp, stamp)
    }

    #[test]
    fn tm_reduce_step_example_with_verification() {
        // target (x*e2, x^2*y - x), reducer (e1, x^2 - 1) over GF(7), lex,
        // POT; f = (x^2 - 1, x*y - 1)
        let f = PrimeField::new(7).unwrap();
        let ring = Ring::new(f, 2, MonomialOrder::Lex);
        let mo = pot_lex();
        let f1 = ring.poly_from_terms(vec![
            (f.element(1), mono(&[2, 0])),
            (f.element(-1), mono(&[0, 0])),
        ]);
        let f2 = ring.poly_from_terms(vec![
            (f.element(1), mono(&[1, 1])),
            (f.element(-1), mono(&[0, 0])),
        ]);
        let inputs = vec![f1.clone(), f2.clone()];
        let x = ring.poly_from_terms(vec![(f.element(1), mono(&[1, 0]))]);
        let target = SigPoly::with_vec(
            sig(&[1, 0], 2),
            ring.mul(&x, &f2),
            vec![Polynomial::zero(), x],
        );
        let reducer = SigPoly::with_vec(
            sig(&[0, 0], 1),
            f1,
            vec![
                ring.poly_from_terms(vec![(f.element(1), mono(&[0, 0]))]),
                Polynomial::zero(),
            ],
        );
        let reducers = vec![entry(reducer, 0)];
        let stepped = tm_reduce_step(&ring, &mo, &target, &reducers).expect("reducible");
        // result is (x*e2, y - x), i.e. 6x + y
        assert_eq!(stepped.sig, sig(&[1, 0], 2));
        let expected = ring.poly_from_terms(vec![
            (f.element(6), mono(&[1, 0])),
            (f.element(1), mono(&[0, 1])),
        ]);
        assert_eq!(stepped.poly, expected);
        assert!(holds_identity(&ring, &stepped, &inputs));

        // full reduction stops there: y - x has no reducer
        let full = tm_reduce_full(&ring, &mo, target, &reducers, Some(&inputs));
        assert_eq!(full.result.poly, expected);
        assert_eq!(full.steps, 1);
        assert_eq!(full.identity_violations, 0);
    }

    #[test]
    fn tm_reduce_to_zero_keeps_signature() {
        let f = PrimeField::new(7).unwrap();
        let ring = Ring::new(f, 2, MonomialOrder::Lex);
        let mo = pot_lex();
        let p = ring.poly_from_terms(vec![
            (f.element(1), mono(&[1, 0])),
            (f.element(-1), mono(&[0, 1])),
        ]);
        let reducers = vec![entry(SigPoly::new(sig(&[0, 0], 1), p.clone()), 0)];
        let target = SigPoly::new(sig(&[0, 0], 2), p);
        let full = tm_reduce_full(&ring, &mo, target, &reducers, None);
        assert!(full.result.poly.is_zero());
        assert_eq!(full.result.sig, sig(&[0, 0], 2));
        assert_eq!(full.steps, 1);
    }

    #[test]
    fn tm_reduce_irreducible_is_fixpoint() {
        let f = PrimeField::new(7).unwrap();
        let ring = Ring::new(f, 2, MonomialOrder::Lex);
        let mo = pot_lex();
        let p = ring.poly_from_terms(vec![(f.element(1), mono(&[1, 0]))]);
        let target = SigPoly::new(sig(&[0, 0], 1), p.clone());
        let full = tm_reduce_full(&ring, &mo, target, &[], None);
        assert_eq!(full.result.poly, p);
        assert_eq!(full.steps, 0);
    }

    #[test]
    fn reducer_with_larger_scaled_signature_is_skipped() {
        // the only lead-dividing candidate scales its signature above the
        // target's, so the target is top-irreducible
        let f = PrimeField::new(7).unwrap();
        let ring = Ring::new(f, 2, MonomialOrder::Lex);
        let mo = pot_lex();
        let p = ring.poly_from_terms(vec![(f.element(1), mono(&[1, 0]))]);
        let reducers = vec![entry(SigPoly::new(sig(&[0, 0], 2), p.clone()), 0)];
        let target = SigPoly::new(sig(&[0, 0], 1), ring.mul_mono(&p, &mono(&[1, 0])));
        assert!(tm_reduce_step(&ring, &mo, &target, &reducers).is_none());
    }

    #[test]
    fn ts_rewritable_examples() {
        let mo = pot_grevlex();
        // a syzygy with signature e2 rewrites a target with signature x*e2
        let syz = pair(&[0, 0], 2, None);
        let target = pair(&[1, 0], 2, Some(&[2, 1]));
        assert!(is_ts_rewritable(&target, [&syz], &mo));
        // strictness: an element never rewrites itself
        assert!(!is_ts_rewritable(&target, [&target], &mo));
        // same scaled signature but equal lead fails the strict leg
        let same = pair(&[0, 0], 2, Some(&[1, 1]));
        let scaled_target = pair(&[1, 0], 2, Some(&[2, 1]));
        assert!(!is_ts_rewritable(&scaled_target, [&same], &mo));
    }

    #[test]
    fn super_reducible_examples() {
        let s1 = pair(&[0, 0], 1, None);
        let s2 = pair(&[1, 0], 1, None);
        assert!(is_super_reducible(&s2, [&s1]));
        // equivalent (equal) leading pairs super-reduce each other
        let a = pair(&[1, 0], 1, Some(&[2, 0]));
        let b = pair(&[1, 0], 1, Some(&[2, 0]));
        assert!(is_super_reducible(&a, [&b]));
        // disjoint indices never
        let c = pair(&[1, 0], 2, Some(&[2, 0]));
        assert!(!is_super_reducible(&a, [&c]));
    }

    #[test]
    fn reduction_orders_are_strict_partial_orders() {
        // irreflexive, antisymmetric, transitive on sampled leading pairs
        use rand::{Rng, SeedableRng};
        let mo = pot_grevlex();
        let mut rng = rand::rngs::StdRng::seed_from_u64(41);
        let sample = |rng: &mut rand::rngs::StdRng| {
            let m = |rng: &mut rand::rngs::StdRng| {
                Monomial::from_exps(&[rng.gen_range(0..3u16), rng.gen_range(0..3u16)])
            };
            let syz = rng.gen_range(0..8) == 0;
            LeadingPair::new(
                Signature::new(m(rng), rng.gen_range(1..=2u32)),
                (!syz).then(|| m(rng)),
            )
        };
        for _ in 0..2000 {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            let c = sample(&mut rng);
            if !a.is_syzygy() {
                assert!(!cmp_ms(&a, &a, &mo));
                assert!(!cmp_sm(&a, &a, &mo));
            }
            if a.is_syzygy() || b.is_syzygy() || c.is_syzygy() {
                // cmp_ms is defined on non-syzygy pairs only
                if !b.is_syzygy() {
                    if cmp_sm(&a, &b, &mo) {
                        assert!(!cmp_sm(&b, &a, &mo));
                    }
                    if !c.is_syzygy() && cmp_sm(&a, &b, &mo) && cmp_sm(&b, &c, &mo) {
                        assert!(cmp_sm(&a, &c, &mo));
                    }
                }
                continue;
            }
            if cmp_ms(&a, &b, &mo) {
                assert!(!cmp_ms(&b, &a, &mo));
            }
            if cmp_sm(&a, &b, &mo) {
                assert!(!cmp_sm(&b, &a, &mo));
            }
            if cmp_ms(&a, &b, &mo) && cmp_ms(&b, &c, &mo) {
                assert!(cmp_ms(&a, &c, &mo));
            }
            if cmp_sm(&a, &b, &mo) && cmp_sm(&b, &c, &mo) {
                assert!(cmp_sm(&a, &c, &mo));
            }
        }
    }

    #[test]
    fn module_lm_scans_all_components() {
        let f = PrimeField::new(7).unwrap();
        let ring = Ring::new(f, 2, MonomialOrder::Grevlex);
        let mo = pot_grevlex();
        let u = vec![
            ring.poly_from_terms(vec![(f.element(1), mono(&[3, 0]))]),
            ring.poly_from_terms(vec![(f.element(1), mono(&[0, 1]))]),
        ];
        // POT: anything in component 2 beats component 1
        assert_eq!(module_lm(&mo, &u), Some(sig(&[0, 1], 2)));
        assert_eq!(module_lm(&mo, &[Polynomial::zero()]), None);
    }
}
