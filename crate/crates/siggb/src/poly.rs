//! Monomials, admissible monomial orders, and sparse multivariate
//! polynomial arithmetic over GF(p).
//!
//! Polynomials are canonical on construction: terms strictly descending
//! under the active order, no zero coefficients, no duplicate monomials.
//! All arithmetic is merge-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::field::{FieldElement, PrimeField};

/// Exponents are 16-bit with checked overflow; desk-scale ideals never
/// exceed this.
pub type Exponent = u16;

/// A power product over n variables; the all-zeros vector is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exps(exps: &[Exponent]) -> Monomial {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    /// The monomial `x_i^power` (variables indexed from 0).
    pub fn var(nvars: usize, i: usize, power: Exponent) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = power;
        m.degree = power as u32;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn exps(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        let exps: SmallVec<[Exponent; 8]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a <= b)
    }

    /// `self / other` when `other` divides `self`, else `None`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        if !other.divides(self) {
            return None;
        }
        let exps: SmallVec<[Exponent; 8]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    /// Componentwise max of exponents.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        let exps: SmallVec<[Exponent; 8]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// Canonical text: `x^2*y`, `1` for the unit monomial.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(names[i].clone());
            } else {
                parts.push(format!("{}^{}", names[i], e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", self.exps.as_slice())
    }
}

/// Default variable names `x1..xn`, used when no problem file supplies them.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

/// The three supported admissible monomial orders. In all of them the
/// first declared variable is the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    Grlex,
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "monomial dimension mismatch");
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Grlex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| lex_cmp(a, b)),
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for i in (0..a.nvars()).rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        // smaller exponent in the rightmost differing
                        // position means the larger monomial
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Graded orders compare total degree first; required by the
    /// gw-weighted module order.
    pub fn is_graded(self) -> bool {
        matches!(self, MonomialOrder::Grlex | MonomialOrder::Grevlex)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
            MonomialOrder::Grevlex => "grevlex",
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::Grlex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for i in 0..a.nvars() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// One term of a polynomial; the coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldElement,
    pub mono: Monomial,
}

/// A sparse polynomial in canonical form. The empty term list is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading monomial under the order the polynomial was built with.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lc(&self) -> Option<FieldElement> {
        self.terms.first().map(|t| t.coeff)
    }
}

/// The ring context: coefficient field, variable count and active order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring {
    pub field: PrimeField,
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(field: PrimeField, nvars: usize, order: MonomialOrder) -> Ring {
        Ring { field, nvars, order }
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Builds a canonical polynomial from arbitrary (coeff, monomial)
    /// pairs: sorts descending, merges duplicates, drops zeros.
    pub fn poly_from_terms(&self, terms: Vec<(FieldElement, Monomial)>) -> Polynomial {
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, mono)| {
                assert_eq!(mono.nvars(), self.nvars, "monomial dimension mismatch");
                Term { coeff, mono }
            })
            .collect();
        terms.sort_by(|s, t| self.order.cmp(&t.mono, &s.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = last.coeff + t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t);
                    }
                }
            }
        }
        let p = Polynomial { terms: out };
        debug_assert!(self.is_canonical(&p));
        p
    }

    /// `p + c·(t·q)` as one merge of the two sorted term sequences.
    pub fn addmul(
        &self,
        p: &Polynomial,
        c: FieldElement,
        t: &Monomial,
        q: &Polynomial,
    ) -> Polynomial {
        if c.is_zero() || q.is_zero() {
            return p.clone();
        }
        let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < p.terms.len() && j < q.terms.len() {
            let qm = q.terms[j].mono.mul(t);
            match self.order.cmp(&p.terms[i].mono, &qm) {
                Ordering::Greater => {
                    out.push(p.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: c * q.terms[j].coeff,
                        mono: qm,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = p.terms[i].coeff + c * q.terms[j].coeff;
                    if !coeff.is_zero() {
                        out.push(Term { coeff, mono: qm });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&p.terms[i..]);
        for term in &q.terms[j..] {
            out.push(Term {
                coeff: c * term.coeff,
                mono: term.mono.mul(t),
            });
        }
        let r = Polynomial { terms: out };
        debug_assert!(self.is_canonical(&r));
        r
    }

    /// `c·t·p`.
    pub fn mul_term(&self, p: &Polynomial, c: FieldElement, t: &Monomial) -> Polynomial {
        self.addmul(&Polynomial::zero(), c, t, p)
    }

    /// `t·p`.
    pub fn mul_mono(&self, p: &Polynomial, t: &Monomial) -> Polynomial {
        self.mul_term(p, self.field.one(), t)
    }

    pub fn add(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.addmul(p, self.field.one(), &Monomial::one(self.nvars), q)
    }

    pub fn sub(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.addmul(p, -self.field.one(), &Monomial::one(self.nvars), q)
    }

    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &p.terms {
            acc = self.addmul(&acc, t.coeff, &t.mono, q);
        }
        acc
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        match p.lc() {
            None => Polynomial::zero(),
            Some(c) if c == self.field.one() => p.clone(),
            Some(c) => {
                let inv = c.inverse().expect("leading coefficient is nonzero");
                Polynomial {
                    terms: p
                        .terms
                        .iter()
                        .map(|t| Term {
                            coeff: inv * t.coeff,
                            mono: t.mono.clone(),
                        })
                        .collect(),
                }
            }
        }
    }

    /// Full multivariate division remainder: no term of the result is
    /// divisible by the leading monomial of any element of `g`.
    /// Deterministic: always reduces the largest term by the first
    /// divisor in `g` order.
    pub fn reduce_full(&self, p: &Polynomial, g: &[Polynomial]) -> Polynomial {
        let mut out: Vec<Term> = Vec::new();
        let mut work = p.clone();
        'outer: while let Some(lt) = work.terms.first().cloned() {
            for r in g {
                if let Some(rlm) = r.lm() {
                    if let Some(quot) = lt.mono.try_div(rlm) {
                        let c = -(lt.coeff / r.lc().unwrap());
                        work = self.addmul(&work, c, &quot, r);
                        continue 'outer;
                    }
                }
            }
            out.push(lt);
            work.terms.remove(0);
        }
        let r = Polynomial { terms: out };
        debug_assert!(self.is_canonical(&r));
        r
    }

    /// Interreduces a set: afterwards no term of any element is divisible
    /// by the leading monomial of another, all monic, sorted by ascending
    /// leading monomial. Zero polynomials (and all-zero inputs) drop out.
    pub fn interreduce(&self, polys: Vec<Polynomial>) -> Vec<Polynomial> {
        let mut set: Vec<Polynomial> = polys
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| self.monic(&p))
            .collect();
        // ascending lm; stable, so the first occurrence wins among equal lm
        set.sort_by(|a, b| self.order.cmp(a.lm().unwrap(), b.lm().unwrap()));
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < set.len() {
                let rest: Vec<Polynomial> = set
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, q)| q.clone())
                    .collect();
                let r = self.reduce_full(&set[i], &rest);
                if r != set[i] {
                    changed = true;
                    if r.is_zero() {
                        set.remove(i);
                        continue;
                    }
                    set[i] = self.monic(&r);
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        set.sort_by(|a, b| self.order.cmp(a.lm().unwrap(), b.lm().unwrap()));
        set
    }

    /// Canonical text rendering: terms descending, coefficient in [1, p),
    /// `^1` and `*1` elided, e.g. `x^2*y + 6*x`.
    pub fn render(&self, p: &Polynomial, names: &[String]) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = p
            .terms
            .iter()
            .map(|t| {
                if t.mono.is_one() {
                    format!("{}", t.coeff)
                } else if t.coeff.value() == 1 {
                    t.mono.render(names)
                } else {
                    format!("{}*{}", t.coeff, t.mono.render(names))
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Canonicality validator used in debug assertions after every
    /// construction.
    pub fn is_canonical(&self, p: &Polynomial) -> bool {
        p.terms.iter().all(|t| !t.coeff.is_zero() && t.mono.nvars() == self.nvars)
            && p.terms
                .windows(2)
                .all(|w| self.order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }
}
