//! Exact field elements: arbitrary-precision rationals or residues modulo an odd prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The ground field of a computation. Every scalar in one computation lives in
/// the same field; mixing is a logic error and panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { r: u64, p: u64 },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
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

impl Field {
    /// An odd prime field F_p with p < 2³¹.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 || !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Field(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                r: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// `num/den`; panics on a zero denominator (or one divisible by p).
    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        let d = self.int(den).inv().expect("non-invertible denominator");
        &self.int(num) * &d
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Mod { p: q, .. }) => p == q,
            _ => false,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Smallest primitive n-th root of unity in the field, if one exists.
    /// Over ℚ only n = 1, 2 have one.
    pub fn primitive_root_of_unity(&self, n: u64) -> Option<Scalar> {
        if n == 0 {
            return None;
        }
        match *self {
            Field::Rational => match n {
                1 => Some(self.one()),
                2 => Some(self.int(-1)),
                _ => None,
            },
            Field::Prime(p) => {
                if (p - 1) % n != 0 {
                    return None;
                }
                (1..p).find_map(|x| {
                    if pow_mod(x, n, p) != 1 {
                        return None;
                    }
                    let primitive = (1..n).all(|k| pow_mod(x, k, p) != 1);
                    primitive.then_some(Scalar::Mod { r: x, p })
                })
            }
        }
    }

    /// All elements of a prime field, in increasing residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|r| Scalar::Mod { r, p }).collect()),
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let x: Scalar = s.parse()?;
        match (self, &x) {
            (Field::Rational, Scalar::Rational(_)) => Ok(x),
            (Field::Prime(p), Scalar::Mod { p: q, .. }) if p == q => Ok(x),
            // integers written without a modulus are accepted in prime fields
            (Field::Prime(_), Scalar::Rational(q)) => {
                let n = self.bigint(q.numer());
                let d = self.bigint(q.denom());
                let dinv = d.inv().ok_or_else(|| {
                    Error::Field(format!("denominator of {s} vanishes in {self}"))
                })?;
                Ok(&n * &dinv)
            }
            _ => Err(Error::Field(format!("scalar {s} is not in field {self}"))),
        }
    }

    fn bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let r = ((n % &m) + &m) % &m;
                let r: u64 = r.try_into().expect("residue fits");
                Scalar::Mod { r, p }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `rational`, `Q`, `prime:7`, `prime 7`, `F7`, or a bare prime.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("rational") || t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("prime:")
            .or_else(|| t.strip_prefix("prime "))
            .or_else(|| t.strip_prefix('F'))
            .unwrap_or(t)
            .trim();
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Field(format!("cannot parse field spec '{s}'")))?;
        Field::prime(p)
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { r, .. } => *r == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Mod { r, p } => Scalar::Mod {
                r: pow_mod(*r, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = self.field().one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub(crate) fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { r, .. } => Some(*r),
            Scalar::Rational(_) => None,
        }
    }
}

fn mixed() -> ! {
    panic!("scalars from different fields were mixed")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, p: q }) if p == q => Scalar::Mod {
                r: (a + b) % p,
                p: *p,
            },
            _ => mixed(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, p: q }) if p == q => Scalar::Mod {
                r: (a + p - b) % p,
                p: *p,
            },
            _ => mixed(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, p: q }) if p == q => Scalar::Mod {
                r: a * b % p,
                p: *p,
            },
            _ => mixed(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { r, p } => Scalar::Mod {
                r: (p - r) % p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Mod { r, p } => write!(f, "{r} mod {p}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p/q`, a bare integer, or `r mod p`.
    fn from_str(s: &str) -> Result<Scalar> {
        let bad = || Error::Parse {
            line: 0,
            column: 0,
            message: format!("malformed scalar '{s}'"),
        };
        let t = s.trim();
        if let Some((r, p)) = t.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let field = Field::prime(p)?;
            let r: i64 = r.trim().parse().map_err(|_| bad())?;
            return Ok(field.int(r));
        }
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        let q = BigRational::new(n, d);
        debug_assert!(q.denom().is_positive());
        Ok(Scalar::Rational(q))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normalization_and_format() {
        let q: Scalar = "6/-4".parse().unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!("5".parse::<Scalar>().unwrap().to_string(), "5/1");
    }

    #[test]
    fn prime_format_round_trip() {
        let f = Field::prime(7).unwrap();
        let x = f.int(-1);
        assert_eq!(x.to_string(), "6 mod 7");
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn cube_roots_of_unity() {
        let f7 = Field::prime(7).unwrap();
        let z = f7.primitive_root_of_unity(3).unwrap();
        assert_eq!(z, f7.int(2));
        assert_eq!(z.pow(3), f7.one());
        assert_eq!(z.inv().unwrap(), f7.int(4));
        let f13 = Field::prime(13).unwrap();
        assert_eq!(f13.primitive_root_of_unity(3).unwrap(), f13.int(3));
        assert!(Field::Rational.primitive_root_of_unity(3).is_none());
        assert!(Field::prime(11)
            .unwrap()
            .primitive_root_of_unity(3)
            .is_none());
    }

    #[test]
    fn field_specs() {
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("prime:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("F13".parse::<Field>().unwrap(), Field::Prime(13));
        assert!("prime:2".parse::<Field>().is_err());
        assert!("prime:9".parse::<Field>().is_err());
    }

    #[test]
    fn integers_embed_into_prime_fields() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.parse_scalar("-1").unwrap(), f.int(6));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.int(4));
        assert!(f.parse_scalar("1 mod 13").is_err());
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(7).one();
    }
}
