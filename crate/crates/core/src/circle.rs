//! Exact arithmetic on the circle `R/Z`.
//!
//! Every point of the circle handled by this crate is a reduced fraction
//! `p/q` with `0 <= p < q`. The tripling map `t -> 3t mod 1` and the half
//! rotation `t -> t + 1/2` act on these values without ever leaving the
//! rationals, so all predicates downstream (linking, arc membership, strip
//! membership) are decided exactly.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational point of the circle `R/Z`, stored as a reduced fraction in `[0, 1)`.
///
/// The ordering is the ordering of the rational values in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Angle {
    num: BigUint,
    den: BigUint,
}

fn cmp_fractions(an: &BigUint, ad: &BigUint, bn: &BigUint, bd: &BigUint) -> Ordering {
    if ad == bd {
        return an.cmp(bn);
    }
    if let (Some(a), Some(b), Some(c), Some(d)) = (an.to_u64(), ad.to_u64(), bn.to_u64(), bd.to_u64()) {
        return (u128::from(a) * u128::from(d)).cmp(&(u128::from(c) * u128::from(b)));
    }
    (an * bd).cmp(&(bn * ad))
}

impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_fractions(&self.num, &self.den, &other.num, &other.den)
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Angle {
    /// The angle `0/1`.
    pub fn zero() -> Self {
        Angle {
            num: BigUint::zero(),
            den: BigUint::one(),
        }
    }

    /// Builds `num/den mod 1` in reduced form.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "angle denominator must be positive");
        let num = num.into() % &den;
        Self::reduce(num, den)
    }

    /// Builds `num/den mod 1` from a signed numerator. Convenient in tests and tables.
    pub fn ratio(num: i64, den: u64) -> Self {
        assert!(den > 0, "angle denominator must be positive");
        let den_i = BigInt::from(den);
        let num = BigInt::from(num).mod_floor(&den_i);
        Self::new(num.to_biguint().expect("mod_floor is non-negative"), BigUint::from(den))
    }

    /// Converts a rational value to its class modulo 1.
    pub fn from_rational(r: &BigRational) -> Self {
        let den = r.denom().abs();
        let num = r.numer().mod_floor(&den);
        Self::new(
            num.to_biguint().expect("mod_floor is non-negative"),
            den.to_biguint().expect("positive denominator"),
        )
    }

    fn reduce(num: BigUint, den: BigUint) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Angle { num, den }
        } else {
            Angle {
                num: num / &g,
                den: den / g,
            }
        }
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value of the angle as an element of `[0, 1)`.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new_raw(BigInt::from(self.num.clone()), BigInt::from(self.den.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        match (self.num.to_u64(), self.den.to_u64()) {
            (Some(n), Some(d)) => n as f64 / d as f64,
            _ => self.to_rational().to_f64().unwrap_or(0.0),
        }
    }

    /// `self + other mod 1`.
    pub fn add(&self, other: &Angle) -> Angle {
        if self.den == other.den {
            return Angle::new(&self.num + &other.num, self.den.clone());
        }
        Angle::new(&self.num * &other.den + &other.num * &self.den, &self.den * &other.den)
    }

    /// `self - other mod 1`.
    pub fn sub(&self, other: &Angle) -> Angle {
        if self.den == other.den {
            return Angle::new(&self.num + &self.den - &other.num, self.den.clone());
        }
        let lhs = &self.num * &other.den + &self.den * &other.den;
        Angle::new(lhs - &other.num * &self.den, &self.den * &other.den)
    }

    /// `k * self mod 1`.
    pub fn scale(&self, k: u32) -> Angle {
        Angle::new(&self.num * k, self.den.clone())
    }

    /// Strict parser for the textual form `p/q`: the fraction must be
    /// reduced and lie in `[0, 1)`; zero is written `0/1`.
    pub fn parse(token: &str) -> Result<Angle> {
        let err = |reason| Error::ParseAngle {
            token: token.to_string(),
            reason,
        };
        let (p, q) = token.split_once('/').ok_or_else(|| err("expected `p/q`"))?;
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(p) || !digits(q) {
            return Err(err("numerator and denominator must be unsigned integers"));
        }
        let p: BigUint = p.parse().map_err(|_| err("bad numerator"))?;
        let q: BigUint = q.parse().map_err(|_| err("bad denominator"))?;
        if q.is_zero() {
            return Err(err("zero denominator"));
        }
        if p >= q {
            return Err(err("angle must lie in [0, 1)"));
        }
        if !p.gcd(&q).is_one() {
            return Err(err("fraction is not reduced"));
        }
        Ok(Angle { num: p, den: q })
    }
}

impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Angle::parse(s)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The tripling map `t -> 3t mod 1`.
pub fn sigma3(a: &Angle) -> Angle {
    a.scale(3)
}

/// The half rotation `t -> t + 1/2 mod 1`.
pub fn tau(a: &Angle) -> Angle {
    if a.den.is_even() {
        let half = &a.den >> 1u32;
        Angle::new(&a.num + half, a.den.clone())
    } else {
        Angle::new((&a.num << 1u32) + &a.den, &a.den << 1u32)
    }
}

/// Length of the positively oriented arc from `a` to `b`, as an angle in `[0, 1)`.
pub fn forward_arc(a: &Angle, b: &Angle) -> Angle {
    b.sub(a)
}

/// True iff `x` lies strictly inside the positively oriented arc from `a` to `b`.
///
/// When `a == b` the arc is empty and the answer is `false`.
pub fn in_open_arc(a: &Angle, b: &Angle, x: &Angle) -> bool {
    match a.cmp(b) {
        Ordering::Less => a < x && x < b,
        Ordering::Greater => x > a || x < b,
        Ordering::Equal => false,
    }
}

/// True iff `x` lies in the closed positively oriented arc from `a` to `b`.
pub fn in_closed_arc(a: &Angle, b: &Angle, x: &Angle) -> bool {
    x == a || x == b || in_open_arc(a, b, x)
}

/// Distance between two circle points: the length of the shorter arc joining them.
pub fn circle_dist(a: &Angle, b: &Angle) -> BigRational {
    let d = forward_arc(a, b).to_rational();
    let other = BigRational::one() - &d;
    d.min(other)
}

/// Forward-orbit data of a rational angle under the tripling map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    pub preperiod: usize,
    pub period: usize,
    /// `x, 3x, 9x, ...` through the first return: `preperiod + period` distinct angles.
    pub orbit: Vec<Angle>,
}

impl OrbitInfo {
    pub fn is_periodic(&self) -> bool {
        self.preperiod == 0
    }
}

/// Exact preperiod and period of `a` under the tripling map, by direct iteration.
pub fn orbit_info(a: &Angle) -> OrbitInfo {
    let mut seen: HashMap<Angle, usize> = HashMap::new();
    let mut orbit = Vec::new();
    let mut x = a.clone();
    loop {
        if let Some(&first) = seen.get(&x) {
            return OrbitInfo {
                preperiod: first,
                period: orbit.len() - first,
                orbit,
            };
        }
        seen.insert(x.clone(), orbit.len());
        let next = sigma3(&x);
        orbit.push(x);
        x = next;
    }
}

/// The three preimages of `a` under the tripling map, in increasing order.
pub fn preimages(a: &Angle) -> [Angle; 3] {
    let den3 = &a.den * 3u32;
    [
        Angle::new(a.num.clone(), den3.clone()),
        Angle::new(&a.num + &a.den, den3.clone()),
        Angle::new(&a.num + (&a.den << 1u32), den3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: u64) -> Angle {
        Angle::ratio(p, d)
    }

    #[test]
    fn sigma3_examples() {
        assert_eq!(sigma3(&Angle::zero()), Angle::zero());
        assert_eq!(sigma3(&q(1, 8)), q(3, 8));
        assert_eq!(sigma3(&q(1, 6)), q(1, 2));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&Angle::zero()), q(1, 2));
        assert_eq!(tau(&q(1, 4)), q(3, 4));
        assert_eq!(tau(&q(5, 6)), q(1, 3));
        assert_eq!(tau(&q(1, 3)), q(5, 6));
        assert_eq!(tau(&tau(&q(2, 7))), q(2, 7));
    }

    #[test]
    fn orbit_examples() {
        let o = orbit_info(&q(1, 2));
        assert_eq!((o.preperiod, o.period), (0, 1));
        let o = orbit_info(&q(1, 8));
        assert_eq!((o.preperiod, o.period), (0, 2));
        assert_eq!(o.orbit, vec![q(1, 8), q(3, 8)]);
        let o = orbit_info(&q(1, 6));
        assert_eq!((o.preperiod, o.period), (1, 1));
        assert_eq!(o.orbit, vec![q(1, 6), q(1, 2)]);
    }

    #[test]
    fn arcs() {
        assert!(in_open_arc(&Angle::zero(), &q(1, 2), &q(1, 4)));
        assert!(!in_open_arc(&q(1, 2), &Angle::zero(), &q(1, 4)));
        assert!(!in_open_arc(&Angle::zero(), &q(1, 2), &q(1, 2)));
        assert!(in_open_arc(&q(3, 4), &q(1, 4), &Angle::zero()));
        assert!(!in_open_arc(&q(1, 3), &q(1, 3), &q(1, 2)));
    }

    #[test]
    fn distances() {
        let r = |p: i64, d: i64| BigRational::new(p.into(), d.into());
        assert_eq!(circle_dist(&Angle::zero(), &q(1, 2)), r(1, 2));
        assert_eq!(circle_dist(&q(1, 8), &q(3, 8)), r(1, 4));
        assert_eq!(circle_dist(&q(11, 12), &q(1, 12)), r(1, 6));
        assert_eq!(circle_dist(&q(1, 12), &q(11, 12)), r(1, 6));
    }

    #[test]
    fn arithmetic_wraps() {
        assert_eq!(q(3, 4).add(&q(1, 2)), q(1, 4));
        assert_eq!(q(1, 12).sub(&q(1, 3)), q(3, 4));
        assert_eq!(q(-1, 6), q(5, 6));
        assert_eq!(q(7, 3), q(1, 3));
        assert_eq!(preimages(&q(1, 2)), [q(1, 6), q(1, 2), q(5, 6)]);
    }

    #[test]
    fn parse_is_strict() {
        assert_eq!(Angle::parse("3/8").unwrap(), q(3, 8));
        assert_eq!(Angle::parse("0/1").unwrap(), Angle::zero());
        for bad in ["2/4", "0/5", "1/1", "5/3", "1/0", "-1/3", "1/3 ", "a/b", "13", "/3", "1/"] {
            assert!(Angle::parse(bad).is_err(), "{bad} should be rejected");
        }
        assert_eq!(Angle::zero().to_string(), "0/1");
    }

    #[test]
    fn ordering_matches_values() {
        let mut v = vec![q(1, 2), q(1, 3), Angle::zero(), q(2, 3), q(1, 6)];
        v.sort();
        assert_eq!(v, vec![Angle::zero(), q(1, 6), q(1, 3), q(1, 2), q(2, 3)]);
    }
}
