use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field: the rationals or a prime field of odd characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Validated constructor for `F_p`. Characteristic 2 is rejected, as is
    /// anything that is not a prime below 2^32.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField(
                "characteristic 2 is not supported".into(),
            ));
        }
        if p >= 1 << 32 {
            return Err(Error::InvalidField(format!("{p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar(Repr::Q(BigRational::zero())),
            Field::Prime(p) => Scalar(Repr::Fp { v: 0, p }),
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar(Repr::Q(BigRational::from_integer(n.into()))),
            Field::Prime(p) => Scalar(Repr::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    /// `num / den` in this field.
    pub fn frac(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(Scalar(Repr::Q(BigRational::new(num.into(), den.into())))),
            Field::Prime(_) => self.int(num).div(&self.int(den)),
        }
    }

    /// Parse a scalar literal: `"n"` or `"p/q"` for the rationals, an
    /// integer (reduced mod p) for prime fields.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match self {
            Field::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num = BigInt::from_str(num)
                    .map_err(|_| Error::InvalidField(format!("bad rational literal {text:?}")))?;
                let den = BigInt::from_str(den)
                    .map_err(|_| Error::InvalidField(format!("bad rational literal {text:?}")))?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar(Repr::Q(BigRational::new(num, den))))
            }
            Field::Prime(p) => {
                let n = BigInt::from_str(text)
                    .map_err(|_| Error::InvalidField(format!("bad F_{p} literal {text:?}")))?;
                let v = n.mod_floor(&BigInt::from(p)).to_u64().unwrap_or(0);
                Ok(Scalar(Repr::Fp { v, p }))
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

/// An exact element of a [`Field`]. Rationals are kept in lowest terms with
/// a positive denominator (guaranteed by `BigRational`).
///
/// Binary operators panic when the operands belong to different fields;
/// the matrix and polynomial layers check field agreement up front.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Q(_) => Field::Rationals,
            Repr::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_zero(),
            Repr::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_one(),
            Repr::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Q(q) => Scalar(Repr::Q(q.recip())),
            Repr::Fp { v, p } => Scalar(Repr::Fp {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            }),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, when this scalar lives in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Q(q) => Some(q),
            Repr::Fp { .. } => None,
        }
    }

    /// The canonical residue in `0..p`, when this scalar lives in `F_p`.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Q(_) => None,
            Repr::Fp { v, .. } => Some(*v),
        }
    }

    /// Size of the numerator/denominator in bits (0 for prime fields); used
    /// to keep random fixtures small.
    pub fn height(&self) -> u64 {
        match &self.0 {
            Repr::Q(q) => q.numer().bits().max(q.denom().bits()),
            Repr::Fp { .. } => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(&self.0, Repr::Q(q) if q.is_negative())
    }

    fn same_field(&self, other: &Scalar) {
        assert!(
            self.field() == other.field(),
            "scalar arithmetic across fields: {} vs {}",
            self.field(),
            other.field()
        );
    }
}

/// Field inverse, the free-function form used throughout the docs.
pub fn field_inv(x: &Scalar) -> Result<Scalar> {
    x.inv()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a + b)),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, .. }) => Scalar(Repr::Fp {
                v: (a + b) % p,
                p: *p,
            }),
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a - b)),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, .. }) => Scalar(Repr::Fp {
                v: (a + p - b) % p,
                p: *p,
            }),
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a * b)),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, .. }) => Scalar(Repr::Fp {
                v: mul_mod(*a, *b, *p),
                p: *p,
            }),
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Q(a) => Scalar(Repr::Q(-a)),
            Repr::Fp { v, p } => Scalar(Repr::Fp { v: (p - v) % p, p: *p }),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
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
