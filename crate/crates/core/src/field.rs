//! Exact scalar fields: the rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Which field a session works over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("fp:")
            .ok_or_else(|| format!("unknown field `{s}`, expected `q` or `fp:<prime>`"))?;
        let p: u64 = p.parse().map_err(|_| format!("bad prime in `{s}`"))?;
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(FieldSpec::Prime(p))
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact field arithmetic. Every value is canonical, so `==` is equality in the field.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    fn spec() -> FieldSpec;

    /// Parses `"a"` or `"a/b"`; prime fields reduce modulo p.
    fn parse_scalar(s: &str) -> Result<Self, String>;

    /// Canonical string form used in JSON.
    fn render(&self) -> String {
        self.to_string()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

fn parse_fraction(s: &str) -> Result<(BigInt, BigInt), String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| format!("bad numerator in `{s}`"))?;
    let d = BigInt::from_str(d).map_err(|_| format!("bad denominator in `{s}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok((n, d))
}

/// The rationals.
pub type Q = BigRational;

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn spec() -> FieldSpec {
        FieldSpec::Rational
    }
    fn parse_scalar(s: &str) -> Result<Self, String> {
        let (n, d) = parse_fraction(s)?;
        Ok(BigRational::new(n, d))
    }
}

/// The prime field with `P` elements. `P` must be prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc = 1u128;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
    fn times(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
    fn negate(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn spec() -> FieldSpec {
        FieldSpec::Prime(P)
    }
    fn parse_scalar(s: &str) -> Result<Self, String> {
        let (n, d) = parse_fraction(s)?;
        let p = BigInt::from(P);
        let reduce = |x: &BigInt| -> u64 { x.mod_floor(&p).to_u64().expect("reduced below p") };
        let d = Fp::<P>(reduce(&d));
        let d = d
            .inverse()
            .ok_or_else(|| format!("denominator of `{s}` vanishes mod {P}"))?;
        Ok(Fp::<P>(reduce(&n)).times(&d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_render() {
        let q = Q::parse_scalar("-6/4").unwrap();
        assert_eq!(q.render(), "-3/2");
        assert_eq!(Q::parse_scalar("7").unwrap().render(), "7");
        assert!(Q::parse_scalar("1/0").is_err());
        assert!(Q::parse_scalar("x").is_err());
    }

    #[test]
    fn prime_field_reduces() {
        type F5 = Fp<5>;
        assert_eq!(F5::parse_scalar("7").unwrap(), F5::new(2));
        assert_eq!(F5::parse_scalar("-1").unwrap(), F5::new(4));
        assert_eq!(F5::parse_scalar("1/2").unwrap(), F5::new(3));
        assert!(F5::parse_scalar("1/5").is_err());
        for v in 1..5 {
            let x = F5::new(v);
            assert!(x.times(&x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn field_spec_round_trip() {
        for s in ["q", "fp:5", "fp:101"] {
            let f: FieldSpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("fp:6".parse::<FieldSpec>().is_err());
    }
}
