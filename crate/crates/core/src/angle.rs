//! Rotation angles.
//!
//! Every angle the gate library produces is a rational multiple of π, so the
//! common case is stored exactly and merged exactly. Arbitrary decimal radians
//! are kept as a fallback for hand-written circuits.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg};

use num_rational::Ratio;

/// Angle in radians, normalized to the half-open window (−2π, 2π].
///
/// The window is 4π wide, which is the period of `RZ(θ)` and `RY(θ)`, so
/// normalization never changes a gate matrix (not even its global phase).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    /// `ratio · π`.
    PiMultiple(Ratio<i64>),
    Radians(f64),
}

impl Angle {
    /// `num/den · π`. Panics on a zero denominator.
    pub fn pi_frac(num: i64, den: i64) -> Self {
        Angle::PiMultiple(Ratio::new(num, den)).normalized()
    }

    pub fn pi() -> Self {
        Angle::pi_frac(1, 1)
    }

    pub fn zero() -> Self {
        Angle::pi_frac(0, 1)
    }

    pub fn radians(value: f64) -> Self {
        // Never snapped to a π multiple, so emit/parse round-trips bit-exactly.
        Angle::Radians(value).normalized()
    }

    pub fn to_radians(self) -> f64 {
        match self {
            Angle::PiMultiple(r) => PI * (*r.numer() as f64) / (*r.denom() as f64),
            Angle::Radians(v) => v,
        }
    }

    fn normalized(self) -> Self {
        match self {
            Angle::PiMultiple(r) => {
                let four = Ratio::from_integer(4);
                let two = Ratio::from_integer(2);
                let mut r = r % four;
                if r <= -two {
                    r += four;
                } else if r > two {
                    r -= four;
                }
                Angle::PiMultiple(r)
            }
            Angle::Radians(v) => {
                let period = 4.0 * PI;
                let mut v = v % period;
                if v <= -2.0 * PI {
                    v += period;
                } else if v > 2.0 * PI {
                    v -= period;
                }
                Angle::Radians(v)
            }
        }
    }

    /// True when the angle is a multiple of 2π, i.e. `RZ(θ)` is ±I.
    pub fn is_identity_rotation(self) -> bool {
        match self {
            Angle::PiMultiple(r) => r.is_integer() && r.to_integer() % 2 == 0,
            Angle::Radians(v) => {
                let m = v.rem_euclid(2.0 * PI);
                m < 1e-12 || (2.0 * PI - m) < 1e-12
            }
        }
    }
}

impl Add for Angle {
    type Output = Angle;

    fn add(self, rhs: Angle) -> Angle {
        match (self, rhs) {
            (Angle::PiMultiple(a), Angle::PiMultiple(b)) => Angle::PiMultiple(a + b).normalized(),
            (a, b) => Angle::Radians(a.to_radians() + b.to_radians()).normalized(),
        }
    }
}

impl Neg for Angle {
    type Output = Angle;

    fn neg(self) -> Angle {
        match self {
            Angle::PiMultiple(r) => Angle::PiMultiple(-r).normalized(),
            Angle::Radians(v) => Angle::Radians(-v).normalized(),
        }
    }
}

impl fmt::Display for Angle {
    /// `pi`, `-pi/4`, `3*pi/4`, `2*pi`, `0`, or a decimal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::PiMultiple(r) => {
                let (n, d) = (*r.numer(), *r.denom());
                if n == 0 {
                    return write!(f, "0");
                }
                let sign = if n < 0 { "-" } else { "" };
                let k = n.abs();
                let head = if k == 1 { format!("{sign}pi") } else { format!("{sign}{k}*pi") };
                if d == 1 {
                    write!(f, "{head}")
                } else {
                    write!(f, "{head}/{d}")
                }
            }
            Angle::Radians(v) => write!(f, "{v:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid angle expression `{0}`")]
pub struct AngleParseError(pub String);

impl std::str::FromStr for Angle {
    type Err = AngleParseError;

    /// Accepts `pi`, `k*pi`, `pi/m`, `k*pi/m` (optionally signed) or a decimal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || AngleParseError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        if !t.contains("pi") {
            return t.parse::<f64>().ok().filter(|v| v.is_finite()).map(Angle::radians).ok_or_else(err);
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        let (numer_part, denom) = match body.split_once('/') {
            Some((a, b)) => (a, b.parse::<i64>().map_err(|_| err())?),
            None => (body, 1),
        };
        if denom <= 0 {
            return Err(err());
        }
        let k = if numer_part == "pi" {
            1
        } else if let Some(k) = numer_part.strip_suffix("*pi") {
            k.parse::<i64>().map_err(|_| err())?
        } else if let Some(k) = numer_part.strip_suffix("pi") {
            k.parse::<i64>().map_err(|_| err())?
        } else {
            return Err(err());
        };
        Ok(Angle::pi_frac(if neg { -k } else { k }, denom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_into_window() {
        assert_eq!(Angle::pi_frac(-2, 1), Angle::pi_frac(2, 1));
        assert_eq!(Angle::pi_frac(9, 4), Angle::pi_frac(-7, 4));
        assert_eq!(Angle::pi_frac(2, 1).to_string(), "2*pi");
        assert_eq!(Angle::pi_frac(-1, 4).to_string(), "-pi/4");
    }

    #[test]
    fn exact_sum() {
        let s = Angle::pi_frac(1, 4) + Angle::pi();
        assert_eq!(s, Angle::pi_frac(5, 4));
        assert!((Angle::pi_frac(1, 4) + Angle::pi_frac(-1, 4)).is_identity_rotation());
        assert!((Angle::pi() + Angle::pi()).is_identity_rotation());
        assert!(!Angle::pi().is_identity_rotation());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("pi".parse::<Angle>().unwrap(), Angle::pi());
        assert_eq!("-pi/4".parse::<Angle>().unwrap(), Angle::pi_frac(-1, 4));
        assert_eq!("3*pi/4".parse::<Angle>().unwrap(), Angle::pi_frac(3, 4));
        assert_eq!("0.5".parse::<Angle>().unwrap(), Angle::Radians(0.5));
        assert!("pie".parse::<Angle>().is_err());
        assert!("pi/0".parse::<Angle>().is_err());
    }
}
