//! Exact scalars over ℚ or a prime field GF(p).
//!
//! The field is a runtime descriptor so that files can pick it. Every
//! container carries a [`Field`] and all of its scalars must belong to it;
//! mixing scalars from different fields is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Largest modulus accepted for GF(p); keeps products inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, Error> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { value: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// `num / den` as a field element; `den` must be invertible in the field.
    pub fn ratio(self, num: i64, den: i64) -> Scalar {
        self.int(num).div(&self.int(den))
    }

    pub fn sign(self, negative: bool) -> Scalar {
        if negative {
            self.int(-1)
        } else {
            self.one()
        }
    }

    /// Parses "a", "-a" or "a/b". Over GF(p) a fraction is read as a·b⁻¹.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| {
                    let m = BigInt::from(p);
                    (((x % &m) + &m) % &m).to_u64().expect("residue fits")
                };
                let d = Scalar::Fp { value: reduce(&den), p };
                if d.is_zero() {
                    return Err(Error::Parse(format!(
                        "denominator of {text:?} vanishes in GF({p})"
                    )));
                }
                Ok(Scalar::Fp { value: reduce(&num), p }.div(&d))
            }
        }
    }

    pub fn contains(self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Q(_)) => true,
            (Field::Prime(p), Scalar::Fp { p: q, .. }) => p == *q,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad prime in {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!(
            "expected \"Q\" or \"Fp:<p>\", got {s:?}"
        )))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv().expect("division by zero")
    }

    fn mismatch(a: &Scalar, b: &Scalar) -> ! {
        panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: (a + b) % p,
                p: *p,
            },
            _ => Scalar::mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: (a + p - b) % p,
                p: *p,
            },
            _ => Scalar::mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: a * b % p,
                p: *p,
            },
            _ => Scalar::mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// Integer value when the scalar is an integer of ℚ that fits in `i64`,
    /// or the canonical representative in `[0, p)` for GF(p).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.denom().is_one() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { value, .. } => Some(*value as i64),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rational;
        let a = f.ratio(1, 3);
        let b = f.ratio(1, 6);
        assert_eq!(&a + &b, f.ratio(1, 2));
        assert_eq!((&a - &b).to_string(), "1/6");
        assert_eq!(&a * &f.int(3), f.one());
        assert_eq!(a.inv().unwrap(), f.int(3));
    }

    #[test]
    fn prime_field_wraps() {
        let f = Field::prime(5).unwrap();
        assert_eq!(&f.int(3) + &f.int(4), f.int(2));
        assert_eq!(-&f.int(1), f.int(4));
        assert_eq!(f.int(2).inv().unwrap(), f.int(3));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.int(3));
        assert!(f.parse_scalar("1/5").is_err());
    }

    #[test]
    fn field_descriptor_round_trips() {
        for text in ["Q", "Fp:2", "Fp:7"] {
            let f: Field = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
        }
        assert!("Fp:4".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn parse_rational_forms() {
        let f = Field::Rational;
        assert_eq!(f.parse_scalar("-4/6").unwrap().to_string(), "-2/3");
        assert_eq!(f.parse_scalar(" 7 ").unwrap(), f.int(7));
        assert!(f.parse_scalar("1/0").is_err());
        assert!(f.parse_scalar("x").is_err());
    }
}
