//! Signatures (module monomials m·e_i), admissible module orders, and the
//! compatibility property linking a module order to the base monomial
//! order.
//!
//! Two order kinds are provided: position-over-term (POT, smaller index =
//! smaller signature) and the g-weighted order (GW), which refines the
//! within-index comparison by the g-weighted degree
//! `deg(mono) + deg(lm(f_index))`. GW is only compatible with a graded
//! base order, so configurations over lex are rejected before a run.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::poly::{Monomial, MonomialOrder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("gw module order requires a graded base order, got {0}")]
    UngradedGwBase(&'static str),
    #[error("signature index {index} out of range [1, {d}]")]
    IndexOutOfRange { index: u32, d: usize },
}

/// A module monomial `mono * e_index` with `index` in `[1, d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub mono: Monomial,
    pub index: u32,
}

impl Signature {
    pub fn new(mono: Monomial, index: u32) -> Signature {
        Signature { mono, index }
    }

    /// The unit signature `e_index`.
    pub fn unit(nvars: usize, index: u32) -> Signature {
        Signature {
            mono: Monomial::one(nvars),
            index,
        }
    }

    /// `t * self`.
    pub fn scale(&self, t: &Monomial) -> Signature {
        Signature {
            mono: self.mono.mul(t),
            index: self.index,
        }
    }

    /// Divisibility on module monomials: same index and dividing monomial.
    pub fn divides(&self, other: &Signature) -> bool {
        self.index == other.index && self.mono.divides(&other.mono)
    }

    /// Trace rendering, e.g. `x^2*y*e2` or `1*e1`.
    pub fn render(&self, names: &[String]) -> String {
        format!("{}*e{}", self.mono.render(names), self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleOrderKind {
    Pot,
    Gw,
}

/// An admissible module order over a base monomial order.
#[derive(Debug, Clone)]
pub struct ModuleOrder {
    kind: ModuleOrderKind,
    base: MonomialOrder,
    /// `deg(lm(f_i))` for the d bound generators; used only by GW.
    lead_degrees: Vec<u32>,
}

/// Outcome of the randomized compatibility check.
#[derive(Debug, Clone)]
pub struct CompatReport {
    pub passed: bool,
    pub samples: usize,
    /// `(sigma, tau, index)` witnessing incompatibility, when found.
    pub counterexample: Option<(Monomial, Monomial, u32)>,
}

impl ModuleOrder {
    pub fn pot(base: MonomialOrder) -> ModuleOrder {
        ModuleOrder {
            kind: ModuleOrderKind::Pot,
            base,
            lead_degrees: Vec::new(),
        }
    }

    /// GW needs the leading degrees of the bound generators. The value is
    /// constructible over any base so that the compatibility check can
    /// exhibit counterexamples; `validate` gates actual runs.
    pub fn gw(base: MonomialOrder, lead_degrees: Vec<u32>) -> ModuleOrder {
        ModuleOrder {
            kind: ModuleOrderKind::Gw,
            base,
            lead_degrees,
        }
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn base(&self) -> MonomialOrder {
        self.base
    }

    /// Engines refuse to run on orders that fail this: GW over a
    /// non-graded base is not compatible with the base order.
    pub fn validate(&self) -> Result<(), OrderError> {
        if self.kind == ModuleOrderKind::Gw && !self.base.is_graded() {
            return Err(OrderError::UngradedGwBase(self.base.name()));
        }
        Ok(())
    }

    /// `deg(mono) + deg(lm(f_index))`; meaningful for GW.
    pub fn gw_degree(&self, s: &Signature) -> u32 {
        s.mono.degree() + self.lead_degrees[(s.index - 1) as usize]
    }

    pub fn cmp(&self, a: &Signature, b: &Signature) -> Ordering {
        match self.kind {
            ModuleOrderKind::Pot => a
                .index
                .cmp(&b.index)
                .then_with(|| self.base.cmp(&a.mono, &b.mono)),
            ModuleOrderKind::Gw => a.index.cmp(&b.index).then_with(|| {
                self.gw_degree(a)
                    .cmp(&self.gw_degree(b))
                    .then_with(|| self.base.cmp(&a.mono, &b.mono))
            }),
        }
    }

    /// Randomized verification of the compatibility property
    /// `sigma*e_j <= tau*e_j  iff  sigma <= tau` over `samples` monomial
    /// pairs and all indices. Deterministic for a fixed seed.
    pub fn check_compatibility(&self, nvars: usize, samples: usize, seed: u64) -> CompatReport {
        let d = self.lead_degrees.len().max(1);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        for i in 0..samples {
            let sigma = random_monomial(&mut rng, nvars);
            let tau = random_monomial(&mut rng, nvars);
            let j = (i % d) as u32 + 1;
            let module_cmp = self.cmp(
                &Signature::new(sigma.clone(), j),
                &Signature::new(tau.clone(), j),
            );
            let base_cmp = self.base.cmp(&sigma, &tau);
            if module_cmp != base_cmp {
                return CompatReport {
                    passed: false,
                    samples: i + 1,
                    counterexample: Some((sigma, tau, j)),
                };
            }
        }
        CompatReport {
            passed: true,
            samples,
            counterexample: None,
        }
    }
}

fn random_monomial<R: Rng>(rng: &mut R, nvars: usize) -> Monomial {
    let exps: Vec<u16> = (0..nvars).map(|_| rng.gen_range(0..5)).collect();
    Monomial::from_exps(&exps)
}
