//! Classical Buchberger algorithm, reduced Gröbner bases, normal forms,
//! Gröbner-basis verification and misplaced-pair diagnostics.
//!
//! This is the independent ground truth against which every signature
//! engine is checked, so it is kept deliberately simple: plain S-pair
//! processing with only the coprime-lead criterion, normal selection
//! strategy (minimal lcm degree first).

use std::cmp::Ordering;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::sigpoly::{cmp_l, SigPoly};

/// Outcome of checking a candidate basis.
#[derive(Debug, Clone)]
pub struct GBReport {
    pub is_gb: bool,
    /// Positions in the candidate whose S-polynomial failed to reduce to
    /// zero, when any.
    pub failing_spair: Option<(usize, usize)>,
    pub reduced_basis: Vec<Polynomial>,
    pub misplaced_pairs: Vec<(usize, usize)>,
}

/// Full division remainder of `p` modulo `g`.
pub fn normal_form(ring: &Ring, p: &Polynomial, g: &[Polynomial]) -> Polynomial {
    ring.reduce_full(p, g)
}

/// The S-polynomial of `f` and `g` (both nonzero).
pub fn spoly(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fl = f.lm().expect("nonzero");
    let gl = g.lm().expect("nonzero");
    let lcm = fl.lcm(gl);
    let a = ring.mul_term(
        f,
        f.lc().unwrap().inverse().unwrap(),
        &lcm.try_div(fl).unwrap(),
    );
    let b = ring.mul_term(
        g,
        g.lc().unwrap().inverse().unwrap(),
        &lcm.try_div(gl).unwrap(),
    );
    ring.sub(&a, &b)
}

/// Computes the reduced Gröbner basis of the ideal generated by `f`
/// (unique for a fixed order), sorted by ascending leading monomial.
pub fn buchberger(ring: &Ring, f: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis = ring.interreduce(f.to_vec());
    if basis.is_empty() {
        return basis;
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: minimal lcm degree, ties by lcm under the
        // order, then by position
        let mut best = 0;
        let mut best_key = pair_lcm(&basis, pairs[0]);
        for (idx, &pr) in pairs.iter().enumerate().skip(1) {
            let key = pair_lcm(&basis, pr);
            if pair_key_less(ring, &key, pairs[idx], &best_key, pairs[best]) {
                best = idx;
                best_key = key;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        let li = basis[i].lm().unwrap();
        let lj = basis[j].lm().unwrap();
        // first Buchberger criterion: coprime leads reduce to zero
        if li.lcm(lj).degree() == li.degree() + lj.degree() {
            continue;
        }
        let s = spoly(ring, &basis[i], &basis[j]);
        let r = ring.reduce_full(&s, &basis);
        if !r.is_zero() {
            let r = ring.monic(&r);
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(r);
        }
    }
    ring.interreduce(basis)
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize)) -> Monomial {
    basis[i].lm().unwrap().lcm(basis[j].lm().unwrap())
}

fn pair_key_less(
    ring: &Ring,
    a: &Monomial,
    a_pos: (usize, usize),
    b: &Monomial,
    b_pos: (usize, usize),
) -> bool {
    match a.degree().cmp(&b.degree()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match ring.cmp_mono(a, b) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => a_pos < b_pos,
        },
    }
}

/// Definition-level check: `g` is a Gröbner basis iff every S-polynomial
/// has normal form zero.
pub fn verify_gb(ring: &Ring, g: &[Polynomial]) -> GBReport {
    let nonzero: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut failing = None;
    'search: for i in 0..nonzero.len() {
        for j in (i + 1)..nonzero.len() {
            let s = spoly(ring, &nonzero[i], &nonzero[j]);
            if !ring.reduce_full(&s, &nonzero).is_zero() {
                failing = Some((i, j));
                break 'search;
            }
        }
    }
    GBReport {
        is_gb: failing.is_none(),
        failing_spair: failing,
        reduced_basis: ring.interreduce(nonzero),
        misplaced_pairs: Vec::new(),
    }
}

/// All same-index position pairs (i, j), i < j, whose leading pairs are
/// ordered the wrong way round: LM(basis[i]) strictly below LM(basis[j]).
pub fn find_misplaced_pairs(basis: &[SigPoly], base: MonomialOrder) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if basis[i].sig.index != basis[j].sig.index {
                continue;
            }
            if basis[i].is_syzygy() || basis[j].is_syzygy() {
                continue;
            }
            let a = basis[i].lm_pair();
            let b = basis[j].lm_pair();
            if cmp_l(&a, &b, base) == Some(Ordering::Less) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Sorts polynomials by ascending leading monomial (zeros first).
pub fn sort_by_lm(ring: &Ring, mut polys: Vec<Polynomial>) -> Vec<Polynomial> {
    polys.sort_by(|a, b| match (a.lm(), b.lm()) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => ring.cmp_mono(x, y),
    });
    polys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Monomial;

    fn lex_ring_2v(p: u64) -> Ring {
        Ring::new(PrimeField::new(p).unwrap(), 2, MonomialOrder::Lex)
    }

    fn poly(ring: &Ring, terms: &[(i64, &[u16])]) -> Polynomial {
        ring.poly_from_terms(
            terms
                .iter()
                .map(|&(c, e)| (ring.field.element(c), Monomial::from_exps(e)))
                .collect(),
        )
    }

    #[test]
    fn buchberger_two_generator_example() {
        // <x^2 - 1, xy - 1> over GF(7), lex x>y has reduced GB {x - y, y^2 - 1}
        let ring = lex_ring_2v(7);
        let f1 = poly(&ring, &[(1, &[2, 0]), (-1, &[0, 0])]);
        let f2 = poly(&ring, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let gb = buchberger(&ring, &[f1, f2]);
        let expected = vec![
            poly(&ring, &[(1, &[0, 2]), (-1, &[0, 0])]), // y^2 - 1
            poly(&ring, &[(1, &[1, 0]), (-1, &[0, 1])]), // x - y
        ];
        assert_eq!(gb, expected);
    }

    #[test]
    fn buchberger_monomial_ideal_is_fixed_point() {
        let ring = lex_ring_2v(7);
        let x = poly(&ring, &[(1, &[1, 0])]);
        let y = poly(&ring, &[(1, &[0, 1])]);
        let gb = buchberger(&ring, &[x.clone(), y.clone()]);
        assert_eq!(gb, vec![y, x]);
    }

    #[test]
    fn normal_form_examples() {
        let ring = lex_ring_2v(7);
        let g = vec![
            poly(&ring, &[(1, &[1, 0]), (-1, &[0, 1])]), // x - y
            poly(&ring, &[(1, &[0, 2]), (-1, &[0, 0])]), // y^2 - 1
        ];
        let x2 = poly(&ring, &[(1, &[2, 0])]);
        assert_eq!(normal_form(&ring, &x2, &g), poly(&ring, &[(1, &[0, 0])]));
        assert!(normal_form(&ring, &Polynomial::zero(), &g).is_zero());

        // generators of the ideal reduce to zero modulo its GB
        let f1 = poly(&ring, &[(1, &[2, 0]), (-1, &[0, 0])]);
        let f2 = poly(&ring, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let gb = buchberger(&ring, &[f1.clone(), f2.clone()]);
        assert!(normal_form(&ring, &f1, &gb).is_zero());
        assert!(normal_form(&ring, &f2, &gb).is_zero());
    }

    #[test]
    fn misplaced_pairs_on_hand_built_blocks() {
        use crate::sigmodule::Signature;
        let ring = Ring::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Grevlex);
        // same index, ratio order ascending by position: one pair
        let a = SigPoly::new(
            Signature::new(Monomial::from_exps(&[1, 0]), 1),
            poly(&ring, &[(1, &[1, 0])]), // (x*e1, x)
        );
        let b = SigPoly::new(
            Signature::new(Monomial::from_exps(&[1, 0]), 1),
            poly(&ring, &[(1, &[2, 0])]), // (x*e1, x^2)
        );
        assert_eq!(
            find_misplaced_pairs(&[a.clone(), b.clone()], ring.order),
            vec![(0, 1)]
        );
        // properly descending: none
        assert!(find_misplaced_pairs(&[b.clone(), a.clone()], ring.order).is_empty());
        // different indices are never reported
        let c = SigPoly::new(
            Signature::new(Monomial::from_exps(&[1, 0]), 2),
            poly(&ring, &[(1, &[2, 0])]),
        );
        assert!(find_misplaced_pairs(&[a, c], ring.order).is_empty());
    }

    #[test]
    fn verify_gb_passes_and_fails_as_expected() {
        let ring = lex_ring_2v(7);
        // {x^2, xy} is a GB of its own ideal
        let g = vec![poly(&ring, &[(1, &[2, 0])]), poly(&ring, &[(1, &[1, 1])])];
        assert!(verify_gb(&ring, &g).is_gb);

        // the raw input {x^2 - 1, xy - 1} is not: S-poly x - y is irreducible
        let f1 = poly(&ring, &[(1, &[2, 0]), (-1, &[0, 0])]);
        let f2 = poly(&ring, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let report = verify_gb(&ring, &[f1, f2]);
        assert!(!report.is_gb);
        assert_eq!(report.failing_spair, Some((0, 1)));
    }
}
