//! Exact scalars: Gaussian rationals `a + b·i` with `a, b ∈ ℚ`, plus the
//! rational helpers used by root isolation and serialization.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. `num_rational` keeps it reduced with a
/// positive denominator, which is the canonical form we serialize.
pub type Rat = BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes as `"num/den"`; integers keep the explicit `/1`.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer `"num"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Exact conversion of a finite double.
pub fn rat_from_f64(x: f64) -> Rat {
    Rat::from_float(x).unwrap_or_else(Rat::zero)
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: scale through bit lengths.
        let nb = r.numer().bits() as i64;
        let db = r.denom().bits() as i64;
        let shift = nb.max(db) - 60;
        let n = (r.numer() >> shift.max(0) as usize).to_f64().unwrap_or(0.0);
        let d = (r.denom() >> shift.max(0) as usize).to_f64().unwrap_or(1.0);
        n / d
    })
}

/// Nearest multiple of `2^-bits` (ties toward +∞).
pub fn round_to_bits(r: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits as usize;
    let scaled = r * Rat::from_integer(scale.clone()) + ratio(1, 2);
    Rat::new(scaled.floor().to_integer(), scale)
}

/// Rational upper bound on `sqrt(x)` with relative slack about `2^-bits`.
/// Exact: the returned `u` always satisfies `u² ≥ x`.
pub fn sqrt_upper(x: &Rat, bits: u32) -> Rat {
    assert!(!x.is_negative(), "sqrt of a negative rational");
    if x.is_zero() {
        return Rat::zero();
    }
    // sqrt(n/d) = sqrt(n·d)/d, and scaling by 4^bits keeps `bits` fractional bits.
    let nd = x.numer() * x.denom();
    let scale = BigInt::one() << bits as usize;
    let s = (nd * &scale * &scale).sqrt() + BigInt::one();
    Rat::new(s, x.denom() * scale)
}

/// The rational with the smallest denominator strictly inside `(lo, hi)`.
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return Rat::zero();
    }
    if !lo.is_negative() {
        simplest_positive(lo, hi)
    } else {
        -simplest_positive(&-hi, &-lo)
    }
}

// Stern–Brocot descent on continued fractions, for 0 ≤ lo < hi.
fn simplest_positive(lo: &Rat, hi: &Rat) -> Rat {
    let fl = lo.floor();
    if &(fl.clone() + Rat::one()) < hi {
        return fl + Rat::one();
    }
    if &fl == lo {
        // lo is an integer and hi ≤ lo + 1: descend on the fractional part.
        let hi_frac = hi - &fl;
        // Smallest denominator in (0, hi_frac): 1/k with k = floor(1/hi_frac)+1.
        let k = (hi_frac.recip()).floor() + Rat::one();
        return fl + k.recip();
    }
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    // 1/hi_frac < x < 1/lo_frac, hi_frac ≤ 1 here.
    let inner = simplest_positive(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}

/// Best rational approximation of `x` with denominator at most `max_den`.
pub fn approx_rat(x: f64, max_den: i64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1, mut k0, mut k1) = (0i128, 1i128, 1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a;
        if frac.abs() < 1e-18 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(Rat::new(BigInt::from(h1), BigInt::from(k1)))
}

/// Exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::real(rat(n))
    }

    pub fn ints(re: i64, im: i64) -> Self {
        GaussRat::new(rat(re), rat(im))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::real(ratio(n, d))
    }

    pub fn zero() -> Self {
        Self::default_zero()
    }

    fn default_zero() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        Self::ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`, exact.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussRat::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    pub fn from_complex(z: num_complex::Complex64) -> Self {
        GaussRat::new(rat_from_f64(z.re), rat_from_f64(z.im))
    }

    /// Rounds both parts to the grid `2^-bits`.
    pub fn round_to_bits(&self, bits: u32) -> Self {
        GaussRat::new(round_to_bits(&self.re, bits), round_to_bits(&self.im, bits))
    }

    /// Bigger of the numerator/denominator bit lengths of either part.
    pub fn height_bits(&self) -> u64 {
        [self.re.numer(), self.re.denom(), self.im.numer(), self.im.denom()]
            .iter()
            .map(|b| b.bits())
            .max()
            .unwrap_or(0)
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::one()
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::int(n)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -&self.im),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    /// Accepts `a`, `bi`, `i`, `-i`, `a+bi`, `a-bi` with `a`, `b` of the
    /// form `n` or `n/d`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if let Some(body) = t.strip_suffix('i') {
            // Split at the last sign that is not the leading one.
            let split = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .last();
            let (re_s, im_s) = match split {
                Some(i) => (&body[..i], &body[i..]),
                None => ("0", body),
            };
            let im = match im_s {
                "" | "+" => rat(1),
                "-" => rat(-1),
                other => parse_rat(other.trim_start_matches('+'))?,
            };
            Ok(GaussRat::new(parse_rat(re_s)?, im))
        } else {
            Ok(GaussRat::real(parse_rat(&t)?))
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $m(self, o: &'a GaussRat) -> GaussRat {
                let f: fn(&GaussRat, &GaussRat) -> GaussRat = $body;
                f(self, o)
            }
        }
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: GaussRat) -> GaussRat {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: &'a GaussRat) -> GaussRat {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $m(self, o: GaussRat) -> GaussRat {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussRat::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GaussRat::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussRat::real(&a.re * &b.re);
    }
    GaussRat::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
});
forward_binop!(Div, div, |a, b| a * &b.inv().expect("division by zero"));

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, o: &GaussRat) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, o: &GaussRat) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussRat> for GaussRat {
    fn mul_assign(&mut self, o: &GaussRat) {
        *self = &*self * o;
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `binom(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Least common multiple of the denominators of both parts.
pub fn denom_lcm<'a>(it: impl IntoIterator<Item = &'a GaussRat>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, z| {
        acc.lcm(z.re.denom()).lcm(z.im.denom())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "0/1", "5/1"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(format_rat(&parse_rat("6/8").unwrap()), "3/4");
        assert_eq!(format_rat(&parse_rat("-4").unwrap()), "-4/1");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn gaussian_literals() {
        assert_eq!("i".parse::<GaussRat>().unwrap(), GaussRat::i());
        assert_eq!("-i".parse::<GaussRat>().unwrap(), -GaussRat::i());
        assert_eq!("1/2-3i".parse::<GaussRat>().unwrap(), GaussRat::new(ratio(1, 2), rat(-3)));
        assert_eq!("-2+1/3i".parse::<GaussRat>().unwrap(), GaussRat::new(rat(-2), ratio(1, 3)));
        assert_eq!("-5".parse::<GaussRat>().unwrap(), GaussRat::int(-5));
        assert_eq!("2/3i".parse::<GaussRat>().unwrap(), GaussRat::new(rat(0), ratio(2, 3)));
    }

    #[test]
    fn field_ops() {
        let a = GaussRat::new(ratio(1, 2), rat(3));
        let b = GaussRat::new(rat(-2), ratio(5, 7));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), GaussRat::one());
        assert_eq!(GaussRat::i().pow(2), GaussRat::int(-1));
        assert!(GaussRat::zero().inv().is_none());
    }

    #[test]
    fn simplest_rational_between() {
        assert_eq!(simplest_between(&rat(0), &rat(2)), rat(1));
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(1, 2)), ratio(2, 5));
        assert_eq!(simplest_between(&rat(1), &ratio(3, 2)), ratio(4, 3));
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(1, 2)), rat(0));
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(-1, 3)), ratio(-2, 5));
        assert_eq!(simplest_between(&rat(2), &rat(5)), rat(3));
    }

    #[test]
    fn sqrt_bound_is_upper_and_tight() {
        for x in [ratio(2, 1), ratio(1, 9), ratio(10, 3), ratio(1, 1 << 40)] {
            let u = sqrt_upper(&x, 40);
            assert!(&u * &u >= x);
            let slack = &u * &u - &x;
            assert!(rat_to_f64(&slack) < 1e-9 * rat_to_f64(&x).max(1e-12) + 1e-20);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
