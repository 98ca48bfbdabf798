//! Helpers for arbitrary-precision rationals and integers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// x^e for a possibly negative exponent. Panics on 0^negative.
pub fn rat_pow(x: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut base = if e < 0 {
        assert!(!x.is_zero(), "zero to a negative power");
        x.recip()
    } else {
        x.clone()
    };
    let mut k = e.unsigned_abs();
    let mut acc = Rat::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn int_pow(x: &Int, e: u64) -> Int {
    let mut acc = Int::one();
    let mut base = x.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn rat_floor(x: &Rat) -> Int {
    x.numer().div_floor(x.denom())
}

pub fn rat_ceil(x: &Rat) -> Int {
    x.numer().div_ceil(x.denom())
}

/// floor(log2(|x|)) for x != 0, i.e. the unique k with 2^k <= |x| < 2^(k+1).
pub fn ilog2_abs(x: &Rat) -> i64 {
    assert!(!x.is_zero());
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let mut k = n.bits() as i64 - d.bits() as i64;
    // n.bits() - d.bits() is within 1 of the truth; fix up.
    let two = BigUint::from(2u32);
    let pow_cmp = |k: i64| -> std::cmp::Ordering {
        // compare |x| with 2^k exactly
        if k >= 0 {
            n.cmp(&(d * two.pow(k as u32)))
        } else {
            (n * two.pow((-k) as u32)).cmp(d)
        }
    };
    while pow_cmp(k) == std::cmp::Ordering::Less {
        k -= 1;
    }
    while pow_cmp(k + 1) != std::cmp::Ordering::Less {
        k += 1;
    }
    k
}

/// Miller-Rabin primality test, deterministic for inputs below 3.3 * 10^24.
pub fn is_prime(n: &Int) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    let n = n.magnitude().clone();
    let small: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &small {
        let p = BigUint::from(p);
        if n == p {
            return true;
        }
        if (&n % &p).is_zero() {
            return false;
        }
    }
    if n < BigUint::from(2u32) {
        return false;
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n_minus_1 = &n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &small {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, &n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, &n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: &Int) -> Int {
    let mut c = n + 1;
    if (&c % 2) == Int::zero() {
        c += 1;
    }
    if c < int(3) {
        return int(2).max(c);
    }
    loop {
        if is_prime(&c) {
            return c;
        }
        c += 2;
    }
}

/// Prime factorization of a nonzero integer magnitude by trial division
/// followed by Pollard rho for any large cofactor.
pub fn factorize(n: &Int) -> Vec<(Int, u32)> {
    let mut m = n.magnitude().clone();
    let mut out: Vec<(Int, u32)> = Vec::new();
    if m.is_zero() {
        return out;
    }
    let push = |p: BigUint, e: u32, out: &mut Vec<(Int, u32)>| {
        out.push((Int::from(p), e));
    };
    let mut d = BigUint::from(2u32);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let mut e = 0u32;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            push(d.clone(), e, &mut out);
        }
        if d == BigUint::from(2u32) {
            d = BigUint::from(3u32);
        } else {
            d += 2u32;
        }
        // give up on trial division for large remaining cofactors
        if d.bits() > 21 {
            break;
        }
    }
    if !m.is_one() {
        if is_prime(&Int::from(m.clone())) {
            push(m, 1, &mut out);
        } else {
            let f = pollard_rho(&m);
            let rest = &m / &f;
            for (p, e) in factorize(&Int::from(f)) {
                merge_factor(&mut out, p, e);
            }
            for (p, e) in factorize(&Int::from(rest)) {
                merge_factor(&mut out, p, e);
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn merge_factor(out: &mut Vec<(Int, u32)>, p: Int, e: u32) {
    for entry in out.iter_mut() {
        if entry.0 == p {
            entry.1 += e;
            return;
        }
    }
    out.push((p, e));
}

fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::from(1u32);
    loop {
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        let mut d = one.clone();
        while d == one {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d != one && &d != n {
            return d;
        }
        c += 1u32;
    }
}

/// Divisors of a positive integer (sorted ascending).
pub fn divisors(n: &Int) -> Vec<Int> {
    let mut divs = vec![Int::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = Int::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(rat_pow(&rat(3, 2), -2), rat(4, 9));
        assert_eq!(rat_pow(&rat(5, 1), 0), rat(1, 1));
        assert_eq!(rat_pow(&rat(2, 1), 10), rat(1024, 1));
    }

    #[test]
    fn ilog2_matches_definition() {
        assert_eq!(ilog2_abs(&rat(1, 1)), 0);
        assert_eq!(ilog2_abs(&rat(3, 1)), 1);
        assert_eq!(ilog2_abs(&rat(4, 1)), 2);
        assert_eq!(ilog2_abs(&rat(1, 3)), -2);
        assert_eq!(ilog2_abs(&rat(-9, 2)), 2);
    }

    #[test]
    fn primality_small_cases() {
        assert!(is_prime(&int(2)));
        assert!(is_prime(&int(1009)));
        assert!(!is_prime(&int(1)));
        assert!(!is_prime(&int(561))); // Carmichael
        assert!(is_prime(&next_prime(&int(1_000_000))));
    }

    #[test]
    fn factorization_roundtrip() {
        let n = int(2 * 2 * 3 * 17 * 97);
        let f = factorize(&n);
        let mut prod = Int::one();
        for (p, e) in &f {
            assert!(is_prime(p));
            prod *= int_pow(p, *e as u64);
        }
        assert_eq!(prod, n);
        assert_eq!(divisors(&int(12)), vec![int(1), int(2), int(3), int(4), int(6), int(12)]);
    }
}
