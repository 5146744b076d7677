//! Quadratic fields: ring of integers, discriminant, the Haar-mass
//! normalization, and rank-2 rigidified extension data with its
//! ring-of-integers action.
//!
//! For squarefree `d` the ring of integers of `Q(sqrt(d))` has integral
//! basis `{1, omega}` with `omega = sqrt(d)` when `d = 2, 3 mod 4` and
//! `omega = (1 + sqrt(d))/2` when `d = 1 mod 4`. The discriminant is the
//! determinant of the trace Gram matrix of that basis, and the canonical
//! Haar mass of the adele class group of the field is `sqrt(|disc|)`,
//! reported exactly as a radical, never as a float.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::adele::{AdeleClass, FiniteAdele};
use crate::error::{Error, Result};
use crate::rat::Rat;

/// Which integral basis a quadratic field uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum BasisKind {
    /// `omega = sqrt(d)`, for `d = 2, 3 mod 4`.
    Sqrt,
    /// `omega = (1 + sqrt(d))/2`, for `d = 1 mod 4`.
    Half,
}

/// `K = Q(sqrt(d))` for squarefree `d`, with its derived basis kind and
/// discriminant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadraticField {
    d: i64,
    kind: BasisKind,
    disc: i64,
}

/// Largest |d| accepted; keeps the squarefree check a cheap trial division.
const MAX_ABS_D: i64 = 1_000_000_000_000;

fn is_squarefree(n: i64) -> bool {
    let mut m = n.unsigned_abs();
    let mut f: u64 = 2;
    while f * f <= m {
        if m.is_multiple_of(f) {
            m /= f;
            if m.is_multiple_of(f) {
                return false;
            }
        }
        f += 1;
    }
    true
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<QuadraticField> {
        if d == 0 || d == 1 {
            return Err(Error::DegenerateField(d));
        }
        if d.saturating_abs() > MAX_ABS_D {
            return Err(Error::FieldTooLarge(d));
        }
        if !is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        let (kind, disc) = if d.rem_euclid(4) == 1 {
            (BasisKind::Half, d)
        } else {
            (BasisKind::Sqrt, 4 * d)
        };
        Ok(QuadraticField { d, kind, disc })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn basis_kind(&self) -> BasisKind {
        self.kind
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// The Gram matrix `[Tr(w_i w_j)]` of the integral basis `{1, omega}`
    /// and its determinant. An independent route to the discriminant:
    /// the determinant always equals `disc`.
    pub fn trace_gram(&self) -> ([[i64; 2]; 2], i64) {
        let m = match self.kind {
            // Tr(1) = 2, Tr(sqrt d) = 0, Tr(d) = 2d
            BasisKind::Sqrt => [[2, 0], [0, 2 * self.d]],
            // Tr(1) = 2, Tr(omega) = 1, Tr(omega^2) = (d + 1)/2
            BasisKind::Half => [[2, 1], [1, (self.d + 1) / 2]],
        };
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        (m, det)
    }

    /// `|disc|`: the square of the canonical Haar mass of the adele class
    /// group of `K`.
    pub fn haar_mass_squared(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    /// The Haar mass itself as an exact radical `c * sqrt(r)`.
    pub fn haar_mass(&self) -> Radical {
        Radical::sqrt_of(self.haar_mass_squared())
    }

    /// The matrix of multiplication by `x + y omega` in the basis
    /// `{1, omega}`.
    fn mult_matrix(&self, x: i64, y: i64) -> [[i64; 2]; 2] {
        match self.kind {
            // omega^2 = d
            BasisKind::Sqrt => [[x, y * self.d], [y, x]],
            // omega^2 = omega + (d - 1)/4
            BasisKind::Half => [[x, y * (self.d - 1) / 4], [y, x + y]],
        }
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// An exact radical `coeff * sqrt(radicand)` with squarefree radicand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Radical {
    coeff: u64,
    radicand: u64,
}

impl Radical {
    /// Write `sqrt(n)` as `c * sqrt(r)` with `r` squarefree.
    pub fn sqrt_of(n: u64) -> Radical {
        let mut coeff: u64 = 1;
        let mut rad = n;
        let mut f: u64 = 2;
        while f * f <= rad {
            while rad.is_multiple_of(f * f) {
                rad /= f * f;
                coeff *= f;
            }
            f += 1;
        }
        Radical {
            coeff,
            radicand: rad,
        }
    }

    pub fn coeff(&self) -> u64 {
        self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    /// Decimal approximation, for display only; everything exact stays in
    /// `coeff`/`radicand`.
    pub fn approx(&self) -> f64 {
        self.coeff as f64 * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.radicand) {
            (c, 1) => write!(f, "{c}"),
            (1, r) => write!(f, "sqrt({r})"),
            (c, r) => write!(f, "{c}*sqrt({r})"),
        }
    }
}

/// Rigidified extension data of Q by the ring of integers of a quadratic
/// field, in coordinates with respect to the integral basis `{1, omega}`:
/// one finite adele and one slope per basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OkExt {
    fins: [FiniteAdele; 2],
    sigmas: [Rat; 2],
}

impl OkExt {
    pub fn new(fins: [FiniteAdele; 2], sigmas: [Rat; 2]) -> OkExt {
        OkExt { fins, sigmas }
    }

    pub fn zero() -> OkExt {
        OkExt {
            fins: [FiniteAdele::zero(), FiniteAdele::zero()],
            sigmas: [Rat::zero(), Rat::zero()],
        }
    }

    pub fn fins(&self) -> &[FiniteAdele; 2] {
        &self.fins
    }

    pub fn sigmas(&self) -> &[Rat; 2] {
        &self.sigmas
    }

    pub fn add(&self, rhs: &OkExt) -> OkExt {
        OkExt {
            fins: [&self.fins[0] + &rhs.fins[0], &self.fins[1] + &rhs.fins[1]],
            sigmas: [
                &self.sigmas[0] + &rhs.sigmas[0],
                &self.sigmas[1] + &rhs.sigmas[1],
            ],
        }
    }

    pub fn neg(&self) -> OkExt {
        OkExt {
            fins: [-&self.fins[0], -&self.fins[1]],
            sigmas: [-&self.sigmas[0], -&self.sigmas[1]],
        }
    }

    /// Coordinatewise image in the product of two solenoids.
    pub fn to_solenoid_vector(&self) -> [AdeleClass; 2] {
        [
            AdeleClass::canonicalize(self.sigmas[0].clone(), self.fins[0].clone()),
            AdeleClass::canonicalize(self.sigmas[1].clone(), self.fins[1].clone()),
        ]
    }

    /// Equality as classes: compare canonical solenoid vectors.
    pub fn eq_class(&self, rhs: &OkExt) -> bool {
        self.to_solenoid_vector() == rhs.to_solenoid_vector()
    }
}

/// The action of `x + y omega` on rank-2 extension data: apply the
/// multiplication matrix to the adele vector and the slope vector alike.
pub fn ok_action(k: &QuadraticField, mult: (i64, i64), e: &OkExt) -> OkExt {
    let m = k.mult_matrix(mult.0, mult.1);
    let row = |c0: i64, c1: i64| -> (FiniteAdele, Rat) {
        let r0 = Rat::from_int(c0);
        let r1 = Rat::from_int(c1);
        (
            &e.fins[0].scale(&r0) + &e.fins[1].scale(&r1),
            &(&r0 * &e.sigmas[0]) + &(&r1 * &e.sigmas[1]),
        )
    };
    let (f0, s0) = row(m[0][0], m[0][1]);
    let (f1, s1) = row(m[1][0], m[1][1]);
    OkExt {
        fins: [f0, f1],
        sigmas: [s0, s1],
    }
}
