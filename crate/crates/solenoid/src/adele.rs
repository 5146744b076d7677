//! Finite adeles with rational entries and the adele class group of Q.
//!
//! A `FiniteAdele` stores one `tail` rational (the component at every prime
//! not listed) plus finitely many overrides. This is the subgroup of
//! `Zhat (x) Q` generated by all the data the presentations here can
//! produce, and it is dense in the full group. An `AdeleClass` is the
//! canonical representative of a solenoid element: the diagonal quotient is
//! spent entirely on making the tail zero, which makes representatives
//! unique and equality literal. Note the real part of a canonical class is
//! deliberately NOT reduced mod 1.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::primes::Prime;
use crate::rat::Rat;

/// A rational-entry finite adele in normal form: no override ever equals
/// the tail.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAdele {
    tail: Rat,
    overrides: BTreeMap<Prime, Rat>,
}

impl FiniteAdele {
    /// Build from raw `(prime, value)` entries, validating primality and
    /// rejecting duplicates. Entries equal to the tail are dropped.
    pub fn new(tail: Rat, entries: impl IntoIterator<Item = (u64, Rat)>) -> Result<FiniteAdele> {
        let mut overrides = BTreeMap::new();
        for (key, value) in entries {
            let p = Prime::new(key)?;
            if overrides.insert(p, value).is_some() {
                return Err(crate::error::Error::DuplicateKey(key.to_string()));
            }
        }
        Ok(FiniteAdele::from_parts(tail, overrides))
    }

    /// Normalize a tail plus an override map (keys already validated).
    pub fn from_parts(tail: Rat, overrides: BTreeMap<Prime, Rat>) -> FiniteAdele {
        let overrides = overrides.into_iter().filter(|(_, v)| *v != tail).collect();
        FiniteAdele { tail, overrides }
    }

    pub fn zero() -> FiniteAdele {
        FiniteAdele {
            tail: Rat::zero(),
            overrides: BTreeMap::new(),
        }
    }

    /// The image of a rational under the diagonal embedding.
    pub fn diagonal(q: Rat) -> FiniteAdele {
        FiniteAdele {
            tail: q,
            overrides: BTreeMap::new(),
        }
    }

    pub fn tail(&self) -> &Rat {
        &self.tail
    }

    pub fn overrides(&self) -> &BTreeMap<Prime, Rat> {
        &self.overrides
    }

    /// The component at `p`: the override if present, the tail otherwise.
    pub fn component(&self, p: Prime) -> &Rat {
        self.overrides.get(&p).unwrap_or(&self.tail)
    }

    pub fn is_zero(&self) -> bool {
        self.tail.is_zero() && self.overrides.is_empty()
    }

    /// `Some(tail)` iff this adele is a diagonal rational.
    pub fn diagonal_part(&self) -> Option<&Rat> {
        if self.overrides.is_empty() {
            Some(&self.tail)
        } else {
            None
        }
    }

    /// Multiply every component by `c`.
    pub fn scale(&self, c: &Rat) -> FiniteAdele {
        let overrides = self
            .overrides
            .iter()
            .map(|(p, v)| (*p, c * v))
            .collect();
        FiniteAdele::from_parts(c * &self.tail, overrides)
    }

    /// Canonical representative mod the diagonal: subtract the tail from
    /// every component. Equal outputs decide congruence of the underlying
    /// Z-module extensions.
    pub fn ext_class(&self) -> FiniteAdele {
        let overrides = self
            .overrides
            .iter()
            .map(|(p, v)| (*p, v - &self.tail))
            .collect();
        FiniteAdele::from_parts(Rat::zero(), overrides)
    }
}

impl Add for &FiniteAdele {
    type Output = FiniteAdele;
    fn add(self, rhs: &FiniteAdele) -> FiniteAdele {
        let tail = &self.tail + &rhs.tail;
        let mut overrides = BTreeMap::new();
        for p in self.overrides.keys().chain(rhs.overrides.keys()) {
            overrides
                .entry(*p)
                .or_insert_with(|| self.component(*p) + rhs.component(*p));
        }
        FiniteAdele::from_parts(tail, overrides)
    }
}

impl Add for FiniteAdele {
    type Output = FiniteAdele;
    fn add(self, rhs: FiniteAdele) -> FiniteAdele {
        &self + &rhs
    }
}

impl Neg for &FiniteAdele {
    type Output = FiniteAdele;
    fn neg(self) -> FiniteAdele {
        self.scale(&Rat::from_int(-1))
    }
}

impl Neg for FiniteAdele {
    type Output = FiniteAdele;
    fn neg(self) -> FiniteAdele {
        -&self
    }
}

impl Sub for &FiniteAdele {
    type Output = FiniteAdele;
    fn sub(self, rhs: &FiniteAdele) -> FiniteAdele {
        self + &(-rhs)
    }
}

impl fmt::Display for FiniteAdele {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tail={}", self.tail)?;
        for (p, v) in &self.overrides {
            write!(f, "; {p}:{v}")?;
        }
        Ok(())
    }
}

/// A canonical solenoid element: real part plus a tail-zero finite adele
/// with no zero overrides. Literal equality of fields is equality of
/// classes in `A_Q / Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdeleClass {
    real: Rat,
    fin: FiniteAdele,
}

impl AdeleClass {
    /// Reduce `(real, fin)` mod the diagonal copy of Q. The tail is a
    /// diagonal rational, so subtracting it from the real part and from
    /// every finite component lands on the unique canonical representative.
    pub fn canonicalize(real: Rat, fin: FiniteAdele) -> AdeleClass {
        AdeleClass {
            real: real - &fin.tail,
            fin: fin.ext_class(),
        }
    }

    pub fn zero() -> AdeleClass {
        AdeleClass {
            real: Rat::zero(),
            fin: FiniteAdele::zero(),
        }
    }

    /// The inclusion of the identity path-component: `r` maps to the class
    /// with real part `r` and zero finite part. Injective.
    pub fn real_inject(r: Rat) -> AdeleClass {
        AdeleClass {
            real: r,
            fin: FiniteAdele::zero(),
        }
    }

    pub fn real(&self) -> &Rat {
        &self.real
    }

    pub fn fin(&self) -> &FiniteAdele {
        &self.fin
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.fin.is_zero()
    }
}

impl Add for &AdeleClass {
    type Output = AdeleClass;
    fn add(self, rhs: &AdeleClass) -> AdeleClass {
        AdeleClass::canonicalize(&self.real + &rhs.real, &self.fin + &rhs.fin)
    }
}

impl Add for AdeleClass {
    type Output = AdeleClass;
    fn add(self, rhs: AdeleClass) -> AdeleClass {
        &self + &rhs
    }
}

impl Neg for &AdeleClass {
    type Output = AdeleClass;
    fn neg(self) -> AdeleClass {
        AdeleClass::canonicalize(-&self.real, -&self.fin)
    }
}

impl Neg for AdeleClass {
    type Output = AdeleClass;
    fn neg(self) -> AdeleClass {
        -&self
    }
}

impl Sub for &AdeleClass {
    type Output = AdeleClass;
    fn sub(self, rhs: &AdeleClass) -> AdeleClass {
        self + &(-rhs)
    }
}

impl fmt::Display for AdeleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "real={}; {}", self.real, self.fin)
    }
}

/// Membership test for the diagonal image of Q inside `R x A_f`:
/// returns `q` when the pair is exactly the diagonal of `q`.
pub fn is_diagonal(real: &Rat, fin: &FiniteAdele) -> Option<Rat> {
    match fin.diagonal_part() {
        Some(tail) if tail == real => Some(real.clone()),
        _ => None,
    }
}
