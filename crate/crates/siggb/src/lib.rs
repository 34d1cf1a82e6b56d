//! Gröbner bases of polynomial ideals over prime fields, computed by four
//! signature-based engine variants (GVWHS, F5G, F5B, F5GEN) that differ
//! only in their insertion and rewriting strategy, plus a classical
//! Buchberger oracle for independent verification.
//!
//! ```
//! use siggb::engine::{self, EngineConfig, Variant};
//! use siggb::poly::{Monomial, MonomialOrder, Ring};
//! use siggb::{oracle, PrimeField};
//!
//! let field = PrimeField::new(7).unwrap();
//! let ring = Ring::new(field, 2, MonomialOrder::Lex);
//! // x^2 - 1 and x*y - 1
//! let f1 = ring.poly_from_terms(vec![
//!     (field.one(), Monomial::from_exps(&[2, 0])),
//!     (field.element(-1), Monomial::one(2)),
//! ]);
//! let f2 = ring.poly_from_terms(vec![
//!     (field.one(), Monomial::from_exps(&[1, 1])),
//!     (field.element(-1), Monomial::one(2)),
//! ]);
//!
//! let result = engine::run(&ring, &[f1.clone(), f2.clone()], &EngineConfig::new(Variant::F5b)).unwrap();
//! assert!(oracle::verify_gb(&ring, &result.basis).is_gb);
//! assert_eq!(
//!     ring.interreduce(result.basis),
//!     oracle::buchberger(&ring, &[f1, f2]),
//! );
//! ```

pub mod engine;
pub mod field;
pub mod oracle;
pub mod poly;
pub mod problem;
pub mod sigmodule;
pub mod sigpoly;

pub use engine::{EngineConfig, GbResult, InsertPolicy, Mode, ModuleOrderSpec, Variant};
pub use field::{FieldElement, PrimeField};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
pub use sigmodule::{ModuleOrder, ModuleOrderKind, Signature};
pub use sigpoly::{LeadingPair, SigPoly};
