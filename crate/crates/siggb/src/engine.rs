//! The four signature-based engine variants and their shared machinery:
//! J-pairs, the pair queue, the principal-syzygy set, the F5-rewritable
//! check, and the three insertion strategies.
//!
//! All variants share one skeleton: pop the J-pair with the smallest
//! signature, discard it if a criterion rewrites it, top-reduce the rest,
//! insert the result, and emit new J-pairs and principal syzygies. They
//! differ only in
//!   - which criteria run (GVWHS: one ts-rewritable check against the
//!     whole basis including syzygies; the F5 family: ts-rewritable
//!     against the principal syzygies plus the positional F5-rewritable
//!     scan),
//!   - where a new element lands in the basis (append, block end,
//!     descending ratio order, or anywhere after the first component),
//!   - which J-pair survives per signature in the queue (minimal lead vs
//!     latest first component).
//!
//! Reduced-to-zero results are syzygies with a known signature; they are
//! recorded in the principal-syzygy set rather than the basis, so the
//! basis holds non-syzygy elements only.

use std::cmp::Ordering;

use thiserror::Error;

use crate::poly::{default_names, Monomial, Polynomial, Ring};
use crate::sigmodule::{ModuleOrder, ModuleOrderKind, OrderError, Signature};
use crate::sigpoly::{
    cmp_l, dot, is_ts_rewritable, module_lm, tm_reduce_full, BasisEntry, LeadingPair, SigPoly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Gvwhs,
    F5g,
    F5b,
    F5gen,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Gvwhs => "gvwhs",
            Variant::F5g => "f5g",
            Variant::F5b => "f5b",
            Variant::F5gen => "f5gen",
        }
    }
}

/// Insertion policy for F5GEN. `BlockEnd` coincides with the F5B
/// strategy; `AfterFirstComponent` places the result directly behind the
/// J-pair's first component. Both satisfy the constraint that the result
/// appears later than its first component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertPolicy {
    BlockEnd,
    AfterFirstComponent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Store only (signature, polynomial) per element.
    Fast,
    /// Carry full module vectors and check u·f = p after every step.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleOrderSpec {
    Pot,
    Gw,
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub variant: Variant,
    pub module_order: ModuleOrderSpec,
    pub insert_policy: InsertPolicy,
    pub mode: Mode,
    /// With criteria off every popped J-pair is reduced; outputs must not
    /// change, only the amount of work.
    pub criteria: bool,
    pub trace: bool,
    /// Variable names for trace rendering; `x1..xn` when absent.
    pub var_names: Option<Vec<String>>,
}

impl EngineConfig {
    pub fn new(variant: Variant) -> EngineConfig {
        EngineConfig {
            variant,
            module_order: ModuleOrderSpec::Pot,
            insert_policy: InsertPolicy::BlockEnd,
            mode: Mode::Fast,
            criteria: true,
            trace: false,
            var_names: None,
        }
    }

    pub fn with_module_order(mut self, spec: ModuleOrderSpec) -> Self {
        self.module_order = spec;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_insert_policy(mut self, policy: InsertPolicy) -> Self {
        self.insert_policy = policy;
        self
    }

    pub fn with_criteria(mut self, on: bool) -> Self {
        self.criteria = on;
        self
    }

    pub fn with_trace(mut self, on: bool) -> Self {
        self.trace = on;
        self
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// Run counters, emitted as a flat key=value block.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub jpairs_created: u64,
    pub jpairs_discarded_ts: u64,
    pub jpairs_discarded_f5: u64,
    pub reductions: u64,
    pub zero_reductions: u64,
    pub basis_size: u64,
    pub psyz_size: u64,
    pub loop_iterations: u64,
}

impl Stats {
    pub fn render(&self) -> String {
        format!(
            "jpairs_created={}\njpairs_discarded_ts={}\njpairs_discarded_f5={}\nreductions={}\nzero_reductions={}\nbasis_size={}\npsyz_size={}\nloop_iterations={}\n",
            self.jpairs_created,
            self.jpairs_discarded_ts,
            self.jpairs_discarded_f5,
            self.reductions,
            self.zero_reductions,
            self.basis_size,
            self.psyz_size,
            self.loop_iterations,
        )
    }
}

/// Where a J-pair's component lives: an original generator (GVWHS feeds
/// those through the queue) or a basis element identified by its stamp.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSource {
    Input(usize),
    Basis(u64),
}

/// The signature-larger scaled half of a critical pair.
#[derive(Debug, Clone)]
pub struct JPair {
    /// `multiplier * sig(first)`.
    pub sig: Signature,
    pub multiplier: Monomial,
    pub first: PairSource,
    pub second: Option<PairSource>,
    /// `multiplier * lm(first.poly)`, the lcm of the two leads.
    pub lead: Monomial,
    /// Cached g-weighted degree of `sig` on GW runs.
    pub gw_deg: Option<u32>,
}

/// Forms the J-pair of two non-syzygy basis elements, oriented so the
/// strictly larger scaled signature is kept. `None` when the two scaled
/// signatures collide (no strict larger side exists).
pub fn make_jpair(
    a: &BasisEntry,
    b: &BasisEntry,
    mo: &ModuleOrder,
) -> Option<JPair> {
    let la = a.sp.lead().expect("J-pairs need non-syzygy components");
    let lb = b.sp.lead().expect("J-pairs need non-syzygy components");
    let lcm = la.lcm(lb);
    let m1 = lcm.try_div(la).unwrap();
    let m2 = lcm.try_div(lb).unwrap();
    let s1 = a.sp.sig.scale(&m1);
    let s2 = b.sp.sig.scale(&m2);
    let (sig, multiplier, first, second) = match mo.cmp(&s1, &s2) {
        Ordering::Greater => (s1, m1, a.stamp, b.stamp),
        Ordering::Less => (s2, m2, b.stamp, a.stamp),
        Ordering::Equal => return None,
    };
    let gw_deg = match mo.kind() {
        ModuleOrderKind::Gw => Some(mo.gw_degree(&sig)),
        ModuleOrderKind::Pot => None,
    };
    Some(JPair {
        sig,
        multiplier,
        first: PairSource::Basis(first),
        second: Some(PairSource::Basis(second)),
        lead: lcm,
        gw_deg,
    })
}

/// Result of an engine run.
#[derive(Debug)]
pub struct GbResult {
    /// The nonzero polynomials of the final basis, in basis order; a
    /// Gröbner basis of the input ideal.
    pub basis: Vec<Polynomial>,
    /// The full signature basis, for diagnostics.
    pub sig_basis: Vec<SigPoly>,
    /// Retained principal syzygies (poly = 0; module vectors in
    /// verification mode).
    pub psyz: Vec<SigPoly>,
    /// Signatures in pop order, for the monotonicity contract.
    pub popped_signatures: Vec<Signature>,
    /// The interreduced, sorted generators the run was bound to.
    pub inputs: Vec<Polynomial>,
    pub module_order: ModuleOrder,
    pub stats: Stats,
    pub trace: Option<String>,
    /// All inputs were zero; the basis is empty.
    pub zero_ideal: bool,
    /// Verification-mode identity failures (0 on a correct run).
    pub identity_violations: u64,
}

struct PsyzEntry {
    pair: LeadingPair,
    vec: Option<Vec<Polynomial>>,
}

struct EngineState<'a> {
    ring: Ring,
    mo: ModuleOrder,
    cfg: &'a EngineConfig,
    names: Vec<String>,
    inputs: Vec<Polynomial>,
    basis: Vec<BasisEntry>,
    psyz: Vec<PsyzEntry>,
    queue: Vec<JPair>,
    next_stamp: u64,
    last_popped: Option<Signature>,
    popped: Vec<Signature>,
    stats: Stats,
    trace: String,
    violations: u64,
}

/// Runs the selected variant on the given generators. The inputs are
/// interreduced and sorted by ascending leading monomial first; the
/// module structure is bound to that list.
pub fn run(ring: &Ring, polys: &[Polynomial], cfg: &EngineConfig) -> Result<GbResult, EngineError> {
    let nonzero: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let names = cfg
        .var_names
        .clone()
        .unwrap_or_else(|| default_names(ring.nvars));
    if nonzero.is_empty() {
        return Ok(GbResult {
            basis: Vec::new(),
            sig_basis: Vec::new(),
            psyz: Vec::new(),
            popped_signatures: Vec::new(),
            inputs: Vec::new(),
            module_order: ModuleOrder::pot(ring.order),
            stats: Stats::default(),
            trace: cfg.trace.then(String::new),
            zero_ideal: true,
            identity_violations: 0,
        });
    }
    let inputs = ring.interreduce(nonzero);
    let mo = match cfg.module_order {
        ModuleOrderSpec::Pot => ModuleOrder::pot(ring.order),
        ModuleOrderSpec::Gw => ModuleOrder::gw(
            ring.order,
            inputs.iter().map(|p| p.lm().unwrap().degree()).collect(),
        ),
    };
    mo.validate()?;
    let mut st = EngineState {
        ring: *ring,
        mo,
        cfg,
        names,
        inputs,
        basis: Vec::new(),
        psyz: Vec::new(),
        queue: Vec::new(),
        next_stamp: 0,
        last_popped: None,
        popped: Vec::new(),
        stats: Stats::default(),
        trace: String::new(),
        violations: 0,
    };
    st.init();
    st.main_loop();
    Ok(st.finish())
}

impl<'a> EngineState<'a> {
    fn verify(&self) -> bool {
        self.cfg.mode == Mode::Verify
    }

    fn d(&self) -> usize {
        self.inputs.len()
    }

    fn trace_event(&mut self, kind: &str, sig: &Signature, lead: Option<&Monomial>) {
        if !self.cfg.trace {
            return;
        }
        let lead_s = match lead {
            Some(m) => m.render(&self.names),
            None => "0".to_string(),
        };
        self.trace.push_str(&format!(
            "EVENT kind={} sig={} lead={}\n",
            kind,
            sig.render(&self.names),
            lead_s
        ));
    }

    fn unit_vector(&self, i: usize) -> Vec<Polynomial> {
        let mut u = vec![Polynomial::zero(); self.d()];
        u[i] = self.ring.poly_from_terms(vec![(
            self.ring.field.one(),
            Monomial::one(self.ring.nvars),
        )]);
        u
    }

    fn init(&mut self) {
        self.init_psyz();
        match self.cfg.variant {
            Variant::Gvwhs => {
                // original generators go through the queue
                for i in 0..self.d() {
                    let sig = Signature::unit(self.ring.nvars, (i + 1) as u32);
                    let gw_deg = match self.mo.kind() {
                        ModuleOrderKind::Gw => Some(self.mo.gw_degree(&sig)),
                        ModuleOrderKind::Pot => None,
                    };
                    let jp = JPair {
                        sig,
                        multiplier: Monomial::one(self.ring.nvars),
                        first: PairSource::Input(i),
                        second: None,
                        lead: self.inputs[i].lm().unwrap().clone(),
                        gw_deg,
                    };
                    self.queue_store(jp);
                }
            }
            _ => {
                // original generators enter the basis directly
                for i in 0..self.d() {
                    let sig = Signature::unit(self.ring.nvars, (i + 1) as u32);
                    let vec = self.verify().then(|| self.unit_vector(i));
                    let sp = SigPoly {
                        sig,
                        poly: self.inputs[i].clone(),
                        module_vec: vec,
                    };
                    let stamp = self.next_stamp;
                    self.next_stamp += 1;
                    let entry = BasisEntry::new(sp, stamp);
                    self.trace_event("insert", &entry.pair.sig, entry.pair.lead.as_ref());
                    self.basis.push(entry);
                }
                let mut fresh = Vec::new();
                for i in 0..self.d() {
                    for j in (i + 1)..self.d() {
                        if let Some(jp) = make_jpair(&self.basis[i], &self.basis[j], &self.mo) {
                            fresh.push(jp);
                        }
                    }
                }
                for jp in fresh {
                    self.stats.jpairs_created += 1;
                    self.trace_event("jpair", &jp.sig, Some(&jp.lead));
                    self.queue_store(jp);
                }
            }
        }
    }

    fn init_psyz(&mut self) {
        for i in 0..self.d() {
            for j in (i + 1)..self.d() {
                if self.verify() {
                    // f_i e_j - f_j e_i, exactly
                    let mut w = vec![Polynomial::zero(); self.d()];
                    w[j] = self.inputs[i].clone();
                    w[i] = self.ring.sub(&Polynomial::zero(), &self.inputs[j]);
                    let sig = module_lm(&self.mo, &w).expect("nonzero syzygy");
                    if !dot(&self.ring, &w, &self.inputs).is_zero() {
                        self.violations += 1;
                    }
                    self.add_psyz(sig, Some(w));
                } else {
                    let sig = Signature::new(
                        self.inputs[i].lm().unwrap().clone(),
                        (j + 1) as u32,
                    );
                    self.add_psyz(sig, None);
                }
            }
        }
    }

    /// Keeps the retained set minimal under signature divisibility:
    /// dominated newcomers are skipped, dominated incumbents removed.
    fn add_psyz(&mut self, sig: Signature, vec: Option<Vec<Polynomial>>) {
        if self.psyz.iter().any(|e| e.pair.sig.divides(&sig)) {
            return;
        }
        self.psyz.retain(|e| !sig.divides(&e.pair.sig));
        self.psyz.push(PsyzEntry {
            pair: LeadingPair::new(sig, None),
            vec,
        });
    }

    fn position_of(&self, stamp: u64) -> usize {
        self.basis
            .iter()
            .position(|e| e.stamp == stamp)
            .expect("stale basis stamp")
    }

    fn source_pos(&self, src: &PairSource) -> usize {
        match src {
            PairSource::Basis(s) => self.position_of(*s),
            PairSource::Input(_) => unreachable!("positional rules never see input sources"),
        }
    }

    /// The contiguous block of basis positions whose signature index
    /// equals `index`; `Err(pos)` gives the insertion point of a new
    /// block when none exists.
    fn block(&self, index: u32) -> Result<(usize, usize), usize> {
        let mut jb = None;
        let mut je = None;
        for (i, e) in self.basis.iter().enumerate() {
            if e.sp.sig.index == index {
                if jb.is_none() {
                    jb = Some(i);
                }
                je = Some(i);
            }
        }
        match (jb, je) {
            (Some(a), Some(b)) => {
                debug_assert!(
                    (a..=b).all(|i| self.basis[i].sp.sig.index == index),
                    "index block must be contiguous"
                );
                Ok((a, b))
            }
            _ => Err(self
                .basis
                .iter()
                .position(|e| e.sp.sig.index > index)
                .unwrap_or(self.basis.len())),
        }
    }

    fn block_end(&self, index: u32) -> usize {
        match self.block(index) {
            Ok((_, je)) => je + 1,
            Err(pos) => pos,
        }
    }

    /// Queue merge: drops pairs at or below the processing front and
    /// keeps one pair per distinct signature, chosen by the variant rule
    /// (ties keep the incumbent).
    fn queue_store(&mut self, jp: JPair) {
        if let Some(front) = &self.last_popped {
            match self.mo.cmp(&jp.sig, front) {
                Ordering::Less => {
                    debug_assert!(false, "J-pair signature below the processing front");
                    return;
                }
                Ordering::Equal => return,
                Ordering::Greater => {}
            }
        }
        let mo = &self.mo;
        match self.queue.binary_search_by(|e| mo.cmp(&e.sig, &jp.sig)) {
            Ok(i) => {
                let keep_new = match self.cfg.variant {
                    Variant::Gvwhs => {
                        self.ring.cmp_mono(&jp.lead, &self.queue[i].lead) == Ordering::Less
                    }
                    _ => self.source_pos(&jp.first) > self.source_pos(&self.queue[i].first),
                };
                if keep_new {
                    self.queue[i] = jp;
                }
            }
            Err(i) => self.queue.insert(i, jp),
        }
    }

    fn pop_min(&mut self) -> Option<JPair> {
        if self.queue.is_empty() {
            None
        } else {
            Some(self.queue.remove(0))
        }
    }

    /// Scans the signature-index block from its end; at the first
    /// element whose signature divides the pair's, the pair is
    /// rewritable unless that element is the first component itself.
    fn f5_rewritable(&self, jp: &JPair) -> bool {
        let k = self.source_pos(&jp.first);
        let (jb, je) = self
            .block(jp.sig.index)
            .expect("block contains the first component");
        for i in (jb..=je).rev() {
            if self.basis[i].sp.sig.divides(&jp.sig) {
                return i != k;
            }
        }
        false
    }

    /// True when the pair fails the variant's criteria (and is traced
    /// and counted as discarded).
    fn discard_by_criteria(&mut self, jp: &JPair) -> bool {
        let pair = LeadingPair::new(jp.sig.clone(), Some(jp.lead.clone()));
        match self.cfg.variant {
            Variant::Gvwhs => {
                let rewritten = is_ts_rewritable(
                    &pair,
                    self.psyz
                        .iter()
                        .map(|e| &e.pair)
                        .chain(self.basis.iter().map(|e| &e.pair)),
                    &self.mo,
                );
                if rewritten {
                    self.stats.jpairs_discarded_ts += 1;
                    self.trace_event("discard-ts", &jp.sig, Some(&jp.lead));
                }
                rewritten
            }
            _ => {
                if is_ts_rewritable(&pair, self.psyz.iter().map(|e| &e.pair), &self.mo) {
                    self.stats.jpairs_discarded_ts += 1;
                    self.trace_event("discard-ts", &jp.sig, Some(&jp.lead));
                    true
                } else if self.f5_rewritable(jp) {
                    self.stats.jpairs_discarded_f5 += 1;
                    self.trace_event("discard-f5", &jp.sig, Some(&jp.lead));
                    true
                } else {
                    false
                }
            }
        }
    }

    /// The sig-polynomial `multiplier * first`.
    fn product_of(&self, jp: &JPair) -> SigPoly {
        let (poly, vec) = match jp.first {
            PairSource::Input(i) => (
                self.inputs[i].clone(),
                self.verify().then(|| self.unit_vector(i)),
            ),
            PairSource::Basis(s) => {
                let e = &self.basis[self.position_of(s)];
                (e.sp.poly.clone(), e.sp.module_vec.clone())
            }
        };
        SigPoly {
            sig: jp.sig.clone(),
            poly: self.ring.mul_mono(&poly, &jp.multiplier),
            module_vec: vec.map(|u| {
                u.iter()
                    .map(|ui| self.ring.mul_mono(ui, &jp.multiplier))
                    .collect()
            }),
        }
    }

    fn make_monic(&self, sp: SigPoly) -> SigPoly {
        let lc = sp.poly.lc().expect("nonzero");
        if lc == self.ring.field.one() {
            return sp;
        }
        let inv = lc.inverse().unwrap();
        let one = Monomial::one(self.ring.nvars);
        SigPoly {
            sig: sp.sig,
            poly: self.ring.mul_term(&sp.poly, inv, &one),
            module_vec: sp
                .module_vec
                .map(|u| u.iter().map(|ui| self.ring.mul_term(ui, inv, &one)).collect()),
        }
    }

    /// Places a nonzero reduction result per the variant's strategy and
    /// returns its stamp.
    fn insert_basis(&mut self, sp: SigPoly, jp: &JPair) -> u64 {
        assert!(!sp.is_syzygy(), "syzygies belong to the principal-syzygy set");
        let stamp = self.next_stamp;
        self.next_stamp += 1;
        let entry = BasisEntry::new(sp, stamp);
        let pos = match self.cfg.variant {
            Variant::Gvwhs => self.basis.len(),
            Variant::F5b => self.block_end(entry.sp.sig.index),
            Variant::F5g => self.decreasing_l_pos(&entry),
            Variant::F5gen => match self.cfg.insert_policy {
                InsertPolicy::BlockEnd => self.block_end(entry.sp.sig.index),
                InsertPolicy::AfterFirstComponent => match jp.first {
                    PairSource::Basis(s) => {
                        let k = self.position_of(s);
                        k + 1
                    }
                    PairSource::Input(_) => self.block_end(entry.sp.sig.index),
                },
            },
        };
        if self.cfg.variant == Variant::F5gen {
            if let PairSource::Basis(s) = jp.first {
                assert!(pos > self.position_of(s), "result must follow its first component");
            }
        }
        self.trace_event("insert", &entry.pair.sig, entry.pair.lead.as_ref());
        self.basis.insert(pos, entry);
        stamp
    }

    /// Scan the block from its end; insert after the first element whose
    /// leading pair is at or above the newcomer's, else at the block
    /// start. Keeps blocks descending under the ratio order.
    fn decreasing_l_pos(&self, entry: &BasisEntry) -> usize {
        match self.block(entry.sp.sig.index) {
            Err(pos) => pos,
            Ok((jb, je)) => {
                for i in (jb..=je).rev() {
                    if matches!(
                        cmp_l(&self.basis[i].pair, &entry.pair, self.mo.base()),
                        Some(Ordering::Greater | Ordering::Equal)
                    ) {
                        return i + 1;
                    }
                }
                jb
            }
        }
    }

    /// New J-pairs against every other basis element, then principal
    /// syzygies against the same.
    fn emit_pairs_and_syzygies(&mut self, new_stamp: u64) {
        let new_pos = self.position_of(new_stamp);
        let mut fresh = Vec::new();
        for pos in 0..self.basis.len() {
            if pos == new_pos {
                continue;
            }
            if let Some(jp) = make_jpair(&self.basis[new_pos], &self.basis[pos], &self.mo) {
                fresh.push(jp);
            }
        }
        for jp in fresh {
            self.stats.jpairs_created += 1;
            self.trace_event("jpair", &jp.sig, Some(&jp.lead));
            self.queue_store(jp);
        }

        let mut syz: Vec<(Signature, Option<Vec<Polynomial>>)> = Vec::new();
        let new = &self.basis[new_pos];
        for (pos, b) in self.basis.iter().enumerate() {
            if pos == new_pos {
                continue;
            }
            if self.verify() {
                // g·u_b − g_b·u, exactly
                let nu = new.sp.module_vec.as_ref().unwrap();
                let bu = b.sp.module_vec.as_ref().unwrap();
                let w: Vec<Polynomial> = nu
                    .iter()
                    .zip(bu.iter())
                    .map(|(nui, bui)| {
                        self.ring.sub(
                            &self.ring.mul(&new.sp.poly, bui),
                            &self.ring.mul(&b.sp.poly, nui),
                        )
                    })
                    .collect();
                if w.iter().all(|p| p.is_zero()) {
                    continue;
                }
                let sig = module_lm(&self.mo, &w).unwrap();
                syz.push((sig, Some(w)));
            } else {
                // approximate from leading data; an equal pair of
                // candidates hides the true signature, so skip it
                let cand1 = b.sp.sig.scale(new.sp.lead().unwrap());
                let cand2 = new.sp.sig.scale(b.sp.lead().unwrap());
                match self.mo.cmp(&cand1, &cand2) {
                    Ordering::Equal => continue,
                    Ordering::Greater => syz.push((cand1, None)),
                    Ordering::Less => syz.push((cand2, None)),
                }
            }
        }
        for (sig, vec) in syz {
            if let Some(w) = &vec {
                if !dot(&self.ring, w, &self.inputs).is_zero() {
                    self.violations += 1;
                }
            }
            self.add_psyz(sig, vec);
        }
    }

    fn main_loop(&mut self) {
        while let Some(jp) = self.pop_min() {
            self.stats.loop_iterations += 1;
            self.popped.push(jp.sig.clone());
            self.last_popped = Some(jp.sig.clone());
            if self.cfg.criteria && self.discard_by_criteria(&jp) {
                continue;
            }
            let target = self.product_of(&jp);
            let verify_inputs = self.verify().then_some(());
            let reduction = tm_reduce_full(
                &self.ring,
                &self.mo,
                target,
                &self.basis,
                verify_inputs.map(|_| self.inputs.as_slice()),
            );
            self.stats.reductions += 1;
            self.violations += reduction.identity_violations;
            let sp = reduction.result;
            if sp.poly.is_zero() {
                self.stats.zero_reductions += 1;
                self.trace_event("reduce", &sp.sig, None);
                self.add_psyz(sp.sig, sp.module_vec);
            } else {
                let sp = self.make_monic(sp);
                self.trace_event("reduce", &sp.sig, sp.poly.lm());
                let stamp = self.insert_basis(sp, &jp);
                self.emit_pairs_and_syzygies(stamp);
            }
        }
    }

    fn finish(mut self) -> GbResult {
        self.stats.basis_size = self.basis.len() as u64;
        self.stats.psyz_size = self.psyz.len() as u64;
        GbResult {
            basis: self.basis.iter().map(|e| e.sp.poly.clone()).collect(),
            sig_basis: self.basis.into_iter().map(|e| e.sp).collect(),
            psyz: self
                .psyz
                .into_iter()
                .map(|e| SigPoly {
                    sig: e.pair.sig,
                    poly: Polynomial::zero(),
                    module_vec: e.vec,
                })
                .collect(),
            popped_signatures: self.popped,
            inputs: self.inputs,
            module_order: self.mo,
            stats: self.stats,
            trace: self.cfg.trace.then_some(self.trace),
            zero_ideal: false,
            identity_violations: self.violations,
        }
    }
}
