use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field: the rationals or a small prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

/// A field element; the variant always matches the field it was made in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    P(u32),
}

impl Field {
    /// `F_p` for a prime `p <= 97`.
    pub fn prime(p: u32) -> Result<Field> {
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p > 97 {
            return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::zero()),
            Field::Prime(_) => Coeff::P(0),
        }
    }

    pub fn one(self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(self, x: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::from_integer(BigInt::from(x))),
            Field::Prime(p) => Coeff::P(x.rem_euclid(i64::from(p)) as u32),
        }
    }

    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        match self {
            Field::Rationals => Ok(Coeff::Q(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u32().expect("reduced");
                let d = den.mod_floor(&pb).to_u32().expect("reduced");
                if d == 0 {
                    return Err(Error::InvalidInput(format!("denominator divisible by {p}")));
                }
                Ok(self.mul(&Coeff::P(n), &self.inv(&Coeff::P(d))))
            }
        }
    }

    /// Reads a coefficient of another field into this one (integers and
    /// fractions reduce modulo `p`; residues lift to their representative).
    pub fn convert(self, c: &Coeff) -> Result<Coeff> {
        match c {
            Coeff::Q(q) => self.from_ratio(q.numer(), q.denom()),
            Coeff::P(r) => Ok(self.from_i64(i64::from(*r))),
        }
    }

    pub fn add(self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            (Coeff::P(x), Coeff::P(y)) => Coeff::P(((u64::from(*x) + u64::from(*y)) % u64::from(self.p())) as u32),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn neg(self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Q(x) => Coeff::Q(-x),
            Coeff::P(x) => Coeff::P((self.p() - x) % self.p()),
        }
    }

    pub fn sub(self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            (Coeff::P(x), Coeff::P(y)) => Coeff::P(((u64::from(*x) * u64::from(*y)) % u64::from(self.p())) as u32),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn inv(self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Q(x) => {
                assert!(!x.is_zero(), "inverse of zero");
                Coeff::Q(x.recip())
            }
            Coeff::P(x) => {
                assert!(*x != 0, "inverse of zero");
                let p = u64::from(self.p());
                // Fermat: x^(p-2)
                let (mut base, mut e, mut acc) = (u64::from(*x), p - 2, 1u64);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                Coeff::P(acc as u32)
            }
        }
    }

    pub fn pow(self, a: &Coeff, e: u32) -> Coeff {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn p(self) -> u32 {
        match self {
            Field::Prime(p) => p,
            Field::Rationals => panic!("rationals have no residue arithmetic"),
        }
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(x) => x.is_zero(),
            Coeff::P(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(x) => x.is_one(),
            Coeff::P(x) => *x == 1,
        }
    }

    /// Whether the coefficient prints with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Coeff::Q(x) if x.is_negative())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(x) if x.is_integer() => write!(f, "{}", x.numer()),
            Coeff::Q(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Coeff::P(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    /// Accepts `QQ`, `Q`, `GF(p)`, `GFp` and `Fp`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("qq") || t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix('F'))
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
            .and_then(|r| r.parse::<u32>().ok())
            .ok_or_else(|| Error::InvalidInput(format!("unknown field \"{s}\"; use QQ or GF(p)")))?;
        Field::prime(digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(f.mul(&three, &f.inv(&three)), f.one());
        assert_eq!(f.from_i64(-1), Coeff::P(6));
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), Coeff::P(4));
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(101).is_err());
    }

    #[test]
    fn parse_fields() {
        for (s, f) in [("QQ", Field::Rationals), ("GF(2)", Field::Prime(2)), ("F7", Field::Prime(7)), ("GF97", Field::Prime(97))] {
            assert_eq!(s.parse::<Field>().unwrap(), f);
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
        assert!("GF(4)".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }
}
