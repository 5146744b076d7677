//! Exact arithmetic for the adele class group of Q (the solenoid) and for
//! extensions of Q by Z rigidified by a splitting at the real place.
//!
//! The library realizes, with decidable equality and no floating point:
//!
//! - p-adic valuations and fractional parts of rationals, with the global
//!   residue identity `q = sum_p {q}_p mod 1` ([`padic`]);
//! - rational-entry finite adeles and canonical representatives of solenoid
//!   elements ([`adele`]);
//! - solenoid elements as characters of Q ([`character`]);
//! - extensions of Q by Z presented by finite adeles, their Baer sum,
//!   congruence witnesses, the slope action, and the isomorphism onto the
//!   solenoid ([`extension`]);
//! - quadratic fields with the discriminant / Haar-mass normalization and
//!   the rank-2 extension data with its ring-of-integers action
//!   ([`numberfield`]);
//! - a text/JSON codec for the CLI ([`parse`]) and seeded deterministic
//!   property suites ([`selftest`]).
//!
//! ```
//! use solenoid::{chi, frac_p, parse_ext_spec, Prime, Rat};
//!
//! let p = Prime::new(5)?;
//! let q: Rat = "3/10".parse()?;
//! assert_eq!(frac_p(&q, p).value().to_string(), "4/5");
//!
//! // the extension presented by {5: 1} with splitting slope 1/3
//! let e = parse_ext_spec("sigma=1/3; 5:1")?.into_rigid();
//! assert_eq!(e.delta_bar(&q)?.to_string(), "7/10");
//!
//! // its character is the character of its solenoid element
//! assert_eq!(chi(&e.to_solenoid(), &q), e.delta_bar(&q)?);
//! # Ok::<(), solenoid::Error>(())
//! ```

pub mod adele;
pub mod character;
pub mod error;
pub mod extension;
pub mod numberfield;
pub mod padic;
pub mod parse;
pub mod primes;
pub mod rat;
pub mod selftest;
pub mod torus;

pub use adele::{is_diagonal, AdeleClass, FiniteAdele};
pub use character::{chi, chi_is_trivial, chi_raw, separating_probe};
pub use error::{Error, Result};
pub use extension::{
    apply_congruence, baer_pullback, baer_quotient, congruent_z, congruent_z0, exactness_witness,
    lift_phi, splitting_defect, BaerElement, CongruenceWitness, ExtElement, ExtPresentation,
    RigidExt,
};
pub use numberfield::{ok_action, BasisKind, OkExt, QuadraticField, Radical};
pub use padic::{bezout, decompose, frac_p, global_frac_parts, valuation, PAdicFrac};
pub use parse::{parse_adele_class, parse_ext_spec, ExtSpec};
pub use primes::Prime;
pub use rat::Rat;
pub use torus::TorusPoint;
