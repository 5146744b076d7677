//! Solenoid elements as characters of Q.
//!
//! The identification sends the class of `(x_real, x_fin)` to the character
//!
//! ```text
//! chi(q) = sum_p {x_p q}_p - x_real q   mod 1,
//! ```
//!
//! a finite sum because only override primes and primes of `den(tail q)`
//! contribute. Adding a diagonal rational to the pair leaves the value
//! unchanged (the global residue identity), which is exactly
//! well-definedness on classes. The sign is the one fixed convention used
//! everywhere in this crate; it makes a rigidified extension `(a, sigma)`
//! act as the same character via `delta_bar`.

use crate::adele::{AdeleClass, FiniteAdele};
use crate::error::Result;
use crate::extension::lift_phi;
use crate::padic::valuation;
use crate::primes::{is_prime_u64, Prime};
use crate::rat::Rat;
use crate::torus::TorusPoint;

/// Evaluate the character of a raw (not necessarily canonical) pair at `q`.
pub fn chi_raw(real: &Rat, fin: &FiniteAdele, q: &Rat) -> Result<TorusPoint> {
    let lift = lift_phi(fin, q)?;
    Ok(TorusPoint::from_rat(&(lift - real * q)))
}

/// Evaluate a solenoid element as a character of Q.
pub fn chi(x: &AdeleClass, q: &Rat) -> TorusPoint {
    chi_raw(x.real(), x.fin(), q).expect("canonical classes have zero tail")
}

/// True iff the character is identically zero; decided structurally, since
/// only the zero class pairs trivially with all of Q.
pub fn chi_is_trivial(x: &AdeleClass) -> bool {
    x.is_zero()
}

/// A rational `q` with `chi(x, q) != 0`, if `x` is nonzero.
///
/// The probe is constructed, not searched for. If the real part is nonzero,
/// take `1/l` for the smallest prime `l` dividing neither the numerator nor
/// the denominator of the real part and outside the finite support: every
/// fractional-part term is l-integral while `real/l` is not, so the sum
/// cannot be an integer. If the real part is zero, some override `x_p` is
/// nonzero (canonical form), and `1/p^k` with `k = max(v_p(x_p), 0) + 1`
/// makes the p-term the unique one with negative p-valuation.
pub fn separating_probe(x: &AdeleClass) -> Option<Rat> {
    if x.is_zero() {
        return None;
    }
    if !x.real().is_zero() {
        let mut l: u64 = 2;
        loop {
            if is_prime_u64(l) {
                let p = Prime::new(l).expect("just checked");
                let divides_real = valuation(x.real(), p).expect("real is nonzero") != 0;
                if !divides_real && !x.fin().overrides().contains_key(&p) {
                    return Some(Rat::from_big(1.into(), l.into()));
                }
            }
            l += 1;
        }
    }
    // canonical form: every override is nonzero
    let (p, v) = x
        .fin()
        .overrides()
        .iter()
        .next()
        .expect("nonzero class with zero real part has overrides");
    let vp = valuation(v, *p).expect("override is nonzero");
    let k = if vp >= 0 { vp as u32 + 1 } else { 1 };
    Some(Rat::from_big(1.into(), p.pow(k)))
}
