//! Certified ball arithmetic over dyadic arbitrary-precision floats.
//!
//! A `Ball` is the closed interval [center - radius, center + radius]; every
//! operation returns an enclosure of the exact image. Transcendental functions
//! (exp, log, rational powers) are evaluated by series with explicit tail
//! bounds at a caller-supplied working precision.

use crate::error::{Error, Result};
use crate::rat::{ilog2_abs, Int, Rat};
use num_bigint::Sign;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Default starting precision for adaptive refinement loops.
pub const START_BITS: u32 = 64;
/// Default precision cap; exceeding it is a reported error.
pub const DEFAULT_CAP_BITS: u32 = 1_048_576;

/// Dyadic number mant * 2^exp with arbitrary-precision mantissa.
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    mant: Int,
    exp: i64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
    Nearest,
}

impl Dyadic {
    pub fn new(mant: Int, exp: i64) -> Self {
        Dyadic { mant, exp }
    }

    pub fn zero() -> Self {
        Dyadic { mant: Int::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: Int::one(), exp: 0 }
    }

    pub fn from_int(n: &Int) -> Self {
        Dyadic { mant: n.clone(), exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn sign_num(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn to_rational(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_integer(&self.mant * Int::from(2u8).pow(self.exp as u32))
        } else {
            Rat::new(self.mant.clone(), Int::from(2u8).pow((-self.exp) as u32))
        }
    }

    /// Round a rational to a dyadic with `prec` significant bits.
    /// Exact when the rational is already dyadic and fits.
    pub fn from_rational(q: &Rat, prec: u32, dir: Round) -> Self {
        if q.is_zero() {
            return Dyadic::zero();
        }
        // target exponent so that mantissa has about prec bits
        let mag = ilog2_abs(q);
        let exp = mag - prec as i64;
        // mant = q / 2^exp, rounded per dir
        let num = q.numer().clone();
        let den = q.denom().clone();
        let (num, den) = if exp >= 0 {
            (num, den * Int::from(2u8).pow(exp as u32))
        } else {
            (num * Int::from(2u8).pow((-exp) as u32), den)
        };
        let (quot, rem) = num_integer::Integer::div_mod_floor(&num, &den);
        let mant = if rem.is_zero() {
            quot
        } else {
            match dir {
                Round::Down => quot,
                Round::Up => quot + 1,
                Round::Nearest => {
                    if &rem * 2 >= den {
                        quot + 1
                    } else {
                        quot
                    }
                }
            }
        };
        Dyadic { mant, exp }
    }

    /// Round to at most `prec` mantissa bits with directed rounding.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.mant.magnitude().bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as u32;
        let (quot, rem) = num_integer::Integer::div_mod_floor(&self.mant, &Int::from(2u8).pow(shift));
        let mant = if rem.is_zero() {
            quot
        } else {
            match dir {
                Round::Down => quot,
                Round::Up => quot + 1,
                Round::Nearest => {
                    if &rem * 2 >= Int::from(2u8).pow(shift) {
                        quot + 1
                    } else {
                        quot
                    }
                }
            }
        };
        Dyadic { mant, exp: self.exp + shift as i64 }
    }

    fn align(a: &Dyadic, b: &Dyadic) -> (Int, Int, i64) {
        let exp = a.exp.min(b.exp);
        let am = &a.mant * Int::from(2u8).pow((a.exp - exp) as u32);
        let bm = &b.mant * Int::from(2u8).pow((b.exp - exp) as u32);
        (am, bm, exp)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, exp) = Dyadic::align(self, other);
        Dyadic { mant: a + b, exp }
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { mant: -self.mant.clone(), exp: self.exp }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic { mant: &self.mant * &other.mant, exp: self.exp + other.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    pub fn cmp(&self, other: &Dyadic) -> Ordering {
        if self.mant.is_zero() && other.mant.is_zero() {
            return Ordering::Equal;
        }
        let (a, b, _) = Dyadic::align(self, other);
        a.cmp(&b)
    }

    /// floor(log2 |x|), or None for zero.
    pub fn ilog2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mant.magnitude().bits() as i64 - 1 + self.exp)
        }
    }

    pub fn floor(&self) -> Int {
        if self.exp >= 0 {
            &self.mant * Int::from(2u8).pow(self.exp as u32)
        } else {
            num_integer::Integer::div_floor(&self.mant, &Int::from(2u8).pow((-self.exp) as u32))
        }
    }

    /// Decimal string with `digits` significant digits, rounded in `dir`.
    pub fn to_decimal(&self, digits: u32, dir: Round) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let q = self.to_rational();
        let neg = q.is_negative();
        let a = q.abs();
        // scale: find e with 10^(e-1) <= a < 10^e
        let mut e: i64 = 0;
        let ten = Rat::from_integer(Int::from(10u8));
        let mut probe = a.clone();
        while probe >= ten {
            probe /= &ten;
            e += 1;
        }
        while probe < Rat::one() {
            probe *= &ten;
            e -= 1;
        }
        // digits significant digits: value = d / 10^(digits-1-e)
        let shift = digits as i64 - 1 - e;
        let scaled = if shift >= 0 {
            a * Rat::from_integer(Int::from(10u8).pow(shift as u32))
        } else {
            a / Rat::from_integer(Int::from(10u8).pow((-shift) as u32))
        };
        let (quot, rem) = num_integer::Integer::div_mod_floor(scaled.numer(), scaled.denom());
        let round_up_mag = match (dir, neg) {
            (Round::Up, false) | (Round::Down, true) => !rem.is_zero(),
            (Round::Nearest, _) => &rem * 2 >= *scaled.denom(),
            _ => false,
        };
        let d = if round_up_mag { quot + 1 } else { quot };
        let sign = if neg { "-" } else { "" };
        // value = d * 10^(e - digits + 1); format as <mantissa>e<exp>
        format!("{}{}e{}", sign, d, e - digits as i64 + 1)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(17, Round::Nearest))
    }
}

/// Closed interval represented as center +/- radius.
#[derive(Clone)]
pub struct Ball {
    center: Dyadic,
    radius: Dyadic, // >= 0
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} +/- {}]",
            self.center.to_decimal(17, Round::Nearest),
            self.radius.to_decimal(3, Round::Up)
        )
    }
}

impl Ball {
    pub fn new(center: Dyadic, radius: Dyadic) -> Self {
        debug_assert!(radius.sign_num() >= 0);
        Ball { center, radius }
    }

    pub fn exact_dyadic(d: Dyadic) -> Self {
        Ball { center: d, radius: Dyadic::zero() }
    }

    pub fn exact_int(n: &Int) -> Self {
        Ball::exact_dyadic(Dyadic::from_int(n))
    }

    pub fn zero() -> Self {
        Ball::exact_dyadic(Dyadic::zero())
    }

    pub fn from_rational(q: &Rat, prec: u32) -> Self {
        let lo = Dyadic::from_rational(q, prec, Round::Down);
        let hi = Dyadic::from_rational(q, prec, Round::Up);
        Ball::from_endpoints(&lo, &hi)
    }

    pub fn from_endpoints(lo: &Dyadic, hi: &Dyadic) -> Self {
        debug_assert!(lo.cmp(hi) != Ordering::Greater);
        let two_center = lo.add(hi);
        let center = Dyadic::new(two_center.mant, two_center.exp - 1);
        let two_radius = hi.sub(lo);
        let radius = Dyadic::new(two_radius.mant, two_radius.exp - 1);
        Ball { center, radius }
    }

    pub fn center(&self) -> &Dyadic {
        &self.center
    }

    pub fn radius(&self) -> &Dyadic {
        &self.radius
    }

    pub fn lower(&self) -> Dyadic {
        self.center.sub(&self.radius)
    }

    pub fn upper(&self) -> Dyadic {
        self.center.add(&self.radius)
    }

    pub fn is_exact(&self) -> bool {
        self.radius.is_zero()
    }

    /// Round both components to keep mantissas near `prec` bits (enclosure preserved).
    pub fn compress(&self, prec: u32) -> Ball {
        let c = self.center.round(prec, Round::Nearest);
        // center rounding error <= ulp; add it to the radius
        let err = ulp_bound(&self.center, prec);
        let r = self.radius.add(&err).round(32, Round::Up);
        Ball { center: c, radius: r }
    }

    pub fn add(&self, other: &Ball, prec: u32) -> Ball {
        Ball {
            center: self.center.add(&other.center),
            radius: self.radius.add(&other.radius),
        }
        .compress(prec)
    }

    pub fn sub(&self, other: &Ball, prec: u32) -> Ball {
        self.add(&other.neg(), prec)
    }

    pub fn neg(&self) -> Ball {
        Ball { center: self.center.neg(), radius: self.radius.clone() }
    }

    pub fn abs(&self) -> Ball {
        if self.contains_zero() {
            let hi = self.center.abs().add(&self.radius);
            Ball::from_endpoints(&Dyadic::zero(), &hi)
        } else {
            Ball { center: self.center.abs(), radius: self.radius.clone() }
        }
    }

    pub fn mul(&self, other: &Ball, prec: u32) -> Ball {
        // |x*y - cx*cy| <= |cx|*ry + |cy|*rx + rx*ry
        let center = self.center.mul(&other.center);
        let r = self
            .center
            .abs()
            .mul(&other.radius)
            .add(&other.center.abs().mul(&self.radius))
            .add(&self.radius.mul(&other.radius));
        Ball { center, radius: r }.compress(prec)
    }

    pub fn mul_int(&self, n: &Int, prec: u32) -> Ball {
        let d = Dyadic::from_int(n);
        Ball { center: self.center.mul(&d), radius: self.radius.mul(&d.abs()) }.compress(prec)
    }

    pub fn mul_rat(&self, q: &Rat, prec: u32) -> Ball {
        self.mul(&Ball::from_rational(q, prec + 8), prec)
    }

    pub fn inv(&self, prec: u32) -> Result<Ball> {
        if self.contains_zero() {
            return Err(Error::Internal("ball inversion through zero".into()));
        }
        // endpoints are monotone for 1/x on an interval not containing 0
        let lo = self.lower();
        let hi = self.upper();
        let inv_lo = dyadic_inv(&hi, prec + 8, Round::Down);
        let inv_hi = dyadic_inv(&lo, prec + 8, Round::Up);
        Ok(Ball::from_endpoints(&inv_lo, &inv_hi).compress(prec))
    }

    pub fn div(&self, other: &Ball, prec: u32) -> Result<Ball> {
        Ok(self.mul(&other.inv(prec + 8)?, prec))
    }

    pub fn pow_i64(&self, e: i64, prec: u32) -> Result<Ball> {
        if e == 0 {
            return Ok(Ball::exact_dyadic(Dyadic::one()));
        }
        let base = if e < 0 { self.inv(prec + 8)? } else { self.clone() };
        let mut acc = Ball::exact_dyadic(Dyadic::one());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b, prec + 8);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b, prec + 8);
            }
        }
        Ok(acc.compress(prec))
    }

    pub fn contains_zero(&self) -> bool {
        self.lower().sign_num() <= 0 && self.upper().sign_num() >= 0
    }

    pub fn contains_rational(&self, q: &Rat) -> bool {
        let v = q.clone();
        self.lower().to_rational() <= v && v <= self.upper().to_rational()
    }

    pub fn is_positive(&self) -> bool {
        self.lower().sign_num() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.upper().sign_num() < 0
    }

    /// Certified comparison: Some(ordering) when the balls are disjoint.
    pub fn cmp_certain(&self, other: &Ball) -> Option<Ordering> {
        if self.upper().cmp(&other.lower()) == Ordering::Less {
            Some(Ordering::Less)
        } else if self.lower().cmp(&other.upper()) == Ordering::Greater {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Smallest ball containing both.
    pub fn hull(&self, other: &Ball) -> Ball {
        let lo = if self.lower().cmp(&other.lower()) == Ordering::Less {
            self.lower()
        } else {
            other.lower()
        };
        let hi = if self.upper().cmp(&other.upper()) == Ordering::Greater {
            self.upper()
        } else {
            other.upper()
        };
        Ball::from_endpoints(&lo, &hi)
    }

    /// exp of the ball; monotone endpoint evaluation.
    pub fn exp(&self, prec: u32) -> Ball {
        let lo = exp_point(&self.lower(), prec);
        let hi = exp_point(&self.upper(), prec);
        Ball::from_endpoints(&lo.lower(), &hi.upper()).compress(prec)
    }

    /// Natural log; requires a strictly positive ball.
    pub fn ln(&self, prec: u32) -> Result<Ball> {
        if !self.is_positive() {
            return Err(Error::Internal("log of non-positive ball".into()));
        }
        let lo = ln_point(&self.lower(), prec)?;
        let hi = ln_point(&self.upper(), prec)?;
        Ok(Ball::from_endpoints(&lo.lower(), &hi.upper()).compress(prec))
    }

    /// x^(num/den) for positive x via exp((num/den) * ln x).
    pub fn pow_rat(&self, num: i64, den: i64, prec: u32) -> Result<Ball> {
        assert!(den > 0);
        if den == 1 {
            return self.pow_i64(num, prec);
        }
        if !self.is_positive() {
            return Err(Error::Internal("rational power of non-positive ball".into()));
        }
        let l = self.ln(prec + 16)?;
        let scaled = l.mul_rat(&Rat::new(Int::from(num), Int::from(den)), prec + 16);
        Ok(scaled.exp(prec))
    }

    /// Positive k-th root.
    pub fn root(&self, k: u32, prec: u32) -> Result<Ball> {
        self.pow_rat(1, k as i64, prec)
    }
}

fn ulp_bound(d: &Dyadic, prec: u32) -> Dyadic {
    match d.ilog2() {
        None => Dyadic::zero(),
        Some(m) => Dyadic::new(Int::one(), m - prec as i64 + 1),
    }
}

fn dyadic_inv(d: &Dyadic, prec: u32, dir: Round) -> Dyadic {
    assert!(!d.is_zero());
    let q = d.to_rational().recip();
    Dyadic::from_rational(&q, prec, dir)
}

/// exp at a dyadic point, with rigorous tail bound: ball output.
fn exp_point(d: &Dyadic, prec: u32) -> Ball {
    if d.is_zero() {
        return Ball::exact_dyadic(Dyadic::one());
    }
    // scale so |z| <= 1/2: z = d / 2^j
    let mag = d.ilog2().unwrap();
    let j = (mag + 1).max(0) as u32;
    let work = prec + j + 32;
    let z = Ball::exact_dyadic(d.mul_pow2(-(j as i64)));
    // Taylor series sum z^i / i!
    let mut sum = Ball::exact_dyadic(Dyadic::one());
    let mut term = Ball::exact_dyadic(Dyadic::one());
    let mut i: u64 = 1;
    loop {
        term = term.mul(&z, work);
        term = term
            .mul_rat(&Rat::new(Int::one(), Int::from(i)), work);
        sum = sum.add(&term, work);
        // |z| <= 1/2 so the tail after term i is bounded by |term| * sum_{k>=1} 2^-k = |term|
        let tail_ub = term.abs().upper();
        if tail_ub.ilog2().map_or(true, |m| m < -((work - 8) as i64)) {
            // absorb the tail into the radius
            let tail = Ball::new(Dyadic::zero(), tail_ub);
            sum = sum.add(&tail, work);
            break;
        }
        i += 1;
        if i > 10_000 {
            // series for |z| <= 1/2 converges long before this
            panic!("exp series failed to converge");
        }
    }
    // square j times
    for _ in 0..j {
        sum = sum.mul(&sum, work);
    }
    sum.compress(prec)
}

/// ln at a positive dyadic point via atanh series, with rigorous tail bound.
fn ln_point(d: &Dyadic, prec: u32) -> Result<Ball> {
    if d.sign_num() <= 0 {
        return Err(Error::Internal("log of non-positive value".into()));
    }
    let work = prec + 48;
    // d = m * 2^k with m in [1, 2)
    let k = d.ilog2().unwrap();
    let m = d.mul_pow2(-k);
    // if m >= 4/3 use m/2 and k+1 so that m in [2/3, 4/3]
    let (m, k) = if m.to_rational() >= Rat::new(Int::from(4), Int::from(3)) {
        (m.mul_pow2(-1), k + 1)
    } else {
        (m, k)
    };
    let ln_m = atanh_based_ln(&m, work);
    let ln2 = ln2_ball(work);
    let out = ln_m.add(&ln2.mul_int(&Int::from(k), work), work);
    Ok(out.compress(prec))
}

/// ln(m) = 2 atanh((m-1)/(m+1)) for m in [2/3, 4/3].
fn atanh_based_ln(m: &Dyadic, work: u32) -> Ball {
    let mb = Ball::exact_dyadic(m.clone());
    let one = Ball::exact_dyadic(Dyadic::one());
    let z = mb
        .sub(&one, work)
        .div(&mb.add(&one, work), work)
        .expect("m+1 > 0");
    atanh_series(&z, work)
}

fn atanh_series(z: &Ball, work: u32) -> Ball {
    // |z| <= 1/2 assumed; 2 * sum z^(2i+1)/(2i+1), tail <= 2|z|^(2N+3)/(1-z^2)/(2N+3) <= 2 * |term|
    let z2 = z.mul(z, work);
    let mut power = z.clone();
    let mut sum = Ball::zero();
    let mut i: u64 = 0;
    loop {
        let term = power.mul_rat(&Rat::new(Int::one(), Int::from(2 * i + 1)), work);
        sum = sum.add(&term, work);
        let tail_ub = term.abs().upper();
        if tail_ub.ilog2().map_or(true, |m| m < -((work - 8) as i64)) {
            let tail = Ball::new(Dyadic::zero(), tail_ub.mul_pow2(1));
            sum = sum.add(&tail, work);
            break;
        }
        power = power.mul(&z2, work);
        i += 1;
        if i > 10_000 {
            panic!("atanh series failed to converge");
        }
    }
    sum.mul_int(&Int::from(2), work)
}

/// Enclosure of ln 2 = 2 atanh(1/3).
pub fn ln2_ball(prec: u32) -> Ball {
    let third = Ball::from_rational(&Rat::new(Int::one(), Int::from(3)), prec + 16);
    atanh_series(&third, prec + 16).compress(prec)
}

/// Enclosure of e^q for an exact rational exponent.
pub fn exp_rational(q: &Rat, prec: u32) -> Ball {
    Ball::from_rational(q, prec + 16).exp(prec)
}

/// Adaptive refinement loop: calls `f` with doubling precision until it
/// returns Some, or the cap is exhausted.
pub fn adaptive<T>(
    start: u32,
    cap: u32,
    context: &str,
    mut f: impl FnMut(u32) -> Option<T>,
) -> Result<T> {
    let mut prec = start.max(8);
    loop {
        if let Some(v) = f(prec) {
            return Ok(v);
        }
        if prec >= cap {
            return Err(Error::PrecisionExhausted { cap, context: context.to_string() });
        }
        prec = (prec * 2).min(cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn assert_contains(b: &Ball, q: &Rat) {
        assert!(
            b.contains_rational(q),
            "ball {:?} should contain {}",
            b,
            q
        );
    }

    fn assert_close(b: &Ball, q: &Rat, tol: &Rat) {
        let gap = (b.center().to_rational() - q).abs();
        assert!(gap <= *tol, "ball {:?} not within {} of {}", b, tol, q);
        assert!(b.radius().to_rational() <= *tol);
    }

    #[test]
    fn dyadic_rounding_directions() {
        let q = rat(1, 3);
        let lo = Dyadic::from_rational(&q, 20, Round::Down);
        let hi = Dyadic::from_rational(&q, 20, Round::Up);
        assert!(lo.to_rational() < q && q < hi.to_rational());
        let exact = rat(5, 8);
        let d = Dyadic::from_rational(&exact, 20, Round::Down);
        assert_eq!(d.to_rational(), exact);
    }

    #[test]
    fn arithmetic_soundness_spot() {
        let a = Ball::from_rational(&rat(1, 3), 64);
        let b = Ball::from_rational(&rat(2, 7), 64);
        assert_contains(&a.add(&b, 64), &rat(13, 21));
        assert_contains(&a.mul(&b, 64), &rat(2, 21));
        assert_contains(&a.sub(&b, 64), &rat(1, 21));
        assert_contains(&a.div(&b, 64).unwrap(), &rat(7, 6));
    }

    #[test]
    fn exp_matches_known_digits() {
        let e1 = exp_rational(&rat(1, 1), 128);
        // e = 2.718281828459045235360287...
        let approx = rat(2718281828459045235, 1000000000000000000);
        let gap = e1.sub(&Ball::from_rational(&approx, 160), 128).abs();
        assert!(gap.upper().to_rational() < rat(1, 1_000_000_000_000_000));
        let em = exp_rational(&rat(-3, 1), 96);
        // e^-3 = 0.049787068367863943...
        assert_close(&em, &rat(49787068367863943, 1_000_000_000_000_000_000), &rat(1, 10_000_000_000_000_000));
    }

    #[test]
    fn ln_matches_known_digits() {
        let l2 = ln2_ball(128);
        // ln 2 = 0.693147180559945309...
        assert_close(&l2, &rat(693147180559945309, 1_000_000_000_000_000_000), &rat(1, 10_000_000_000_000_000));
        let l10 = Ball::from_rational(&rat(10, 1), 160).ln(128).unwrap();
        // ln 10 = 2.302585092994045684...
        assert_close(&l10, &rat(2302585092994045684, 1_000_000_000_000_000_000), &rat(1, 10_000_000_000_000_000));
    }

    #[test]
    fn exp_ln_inverse() {
        let x = Ball::from_rational(&rat(7, 2), 160);
        let back = x.ln(150).unwrap().exp(128);
        assert_contains(&back, &rat(7, 2));
        assert!(back.radius().ilog2().unwrap() < -64);
    }

    #[test]
    fn rational_powers() {
        let x = Ball::from_rational(&rat(2, 1), 192);
        let s = x.pow_rat(1, 2, 128).unwrap();
        // sqrt2 = 1.41421356237309504880...
        assert_close(&s, &rat(141421356237309504, 100000000000000000), &rat(1, 10_000_000_000_000_000));
        let c = x.pow_rat(-2, 3, 128).unwrap();
        // 2^(-2/3) = 0.62996052494743658...
        assert_close(&c, &rat(62996052494743658, 100_000_000_000_000_000), &rat(1, 10_000_000_000_000_000));
        let p = x.pow_i64(10, 64).unwrap();
        assert_contains(&p, &rat(1024, 1));
    }

    #[test]
    fn certified_comparison() {
        let a = Ball::from_rational(&rat(1, 3), 64);
        let b = Ball::from_rational(&rat(1, 2), 64);
        assert_eq!(a.cmp_certain(&b), Some(Ordering::Less));
        let c = Ball::new(Dyadic::one(), Dyadic::one());
        assert_eq!(c.cmp_certain(&c), None);
    }

    #[test]
    fn floor_of_dyadic() {
        assert_eq!(Dyadic::from_rational(&rat(7, 2), 30, Round::Down).floor(), crate::rat::int(3));
        assert_eq!(Dyadic::from_rational(&rat(-7, 2), 30, Round::Down).floor(), crate::rat::int(-4));
    }

    #[test]
    fn adaptive_cap_reports_error() {
        let r: Result<()> = adaptive(8, 16, "testing", |_| None);
        assert!(matches!(r, Err(Error::PrecisionExhausted { .. })));
    }
}
