//! Factorization of univariate polynomials over the rationals.
//!
//! Strategy: squarefree decomposition (Yun), then for each squarefree part a
//! big-prime Cantor-Zassenhaus factorization modulo a single prime exceeding
//! twice the Mignotte bound, followed by subset recombination. The prime is
//! large enough that every true factor appears directly from a subset of the
//! modular factors.

use crate::poly::UniPoly;
use crate::rat::{int, next_prime, Int, Rat};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Monic irreducible factors of `p` over Q with multiplicities, plus the
/// leading rational unit: p = unit * prod f_i^{e_i}.
pub fn factor_over_q(p: &UniPoly<Rat>) -> (Rat, Vec<(UniPoly<Rat>, u32)>) {
    assert!(!p.is_zero(), "factorization of the zero polynomial");
    let unit = p.leading();
    let monic = p.monic();
    if monic.degree() == Some(0) {
        return (unit, vec![]);
    }
    let mut out: Vec<(UniPoly<Rat>, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(&monic) {
        for f in factor_squarefree(&part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg0()
            .cmp(&b.0.deg0())
            .then_with(|| format!("{:?}", a.0).cmp(&format!("{:?}", b.0)))
    });
    (unit, out)
}

pub fn is_irreducible_q(p: &UniPoly<Rat>) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let (_, f) = factor_over_q(p);
            f.len() == 1 && f[0].1 == 1
        }
    }
}

/// All rational roots of `p` with multiplicity collapsed away.
pub fn rational_roots(p: &UniPoly<Rat>) -> Vec<Rat> {
    let (_, factors) = factor_over_q(p);
    let mut roots: Vec<Rat> = factors
        .iter()
        .filter(|(f, _)| f.degree() == Some(1))
        .map(|(f, _)| -f.coeff(0))
        .collect();
    roots.sort();
    roots.dedup();
    roots
}

/// Yun's squarefree decomposition of a monic polynomial: returns (part, multiplicity)
/// with p = prod part^multiplicity and all parts squarefree, pairwise coprime.
fn yun_squarefree(p: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, u32)> {
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    if a0.degree() == Some(0) {
        return vec![(p.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut b = p.divmod(&a0).0;
    let mut c = dp.divmod(&a0).0;
    let mut i = 1u32;
    loop {
        let d = c.sub(&b.derivative());
        let a = b.gcd(&d);
        if a.deg0() > 0 {
            out.push((a.monic(), i));
        }
        b = b.divmod(&a).0;
        c = d.divmod(&a).0;
        i += 1;
        if b.degree() == Some(0) {
            break;
        }
    }
    out
}

/// Factor a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree(p: &UniPoly<Rat>) -> Vec<UniPoly<Rat>> {
    let deg = p.deg0();
    if deg <= 1 {
        return vec![p.clone()];
    }
    // work with the primitive integer model
    let zp = p.primitive_integer();
    let int_coeffs: Vec<Int> = zp.coeffs().iter().map(|c| c.numer().clone()).collect();

    // strip a power of x
    if int_coeffs[0].is_zero() {
        let shifted = UniPoly::new(p.coeffs()[1..].to_vec());
        let mut out = vec![UniPoly::<Rat>::x()];
        out.extend(factor_squarefree(&shifted.monic()));
        return out;
    }

    let bound = mignotte_bound(&int_coeffs);
    let min_prime = int(1 << 20);
    let mut prime = next_prime(&bound.max(min_prime));
    let f = loop {
        let f = ModPoly::from_int_coeffs(&int_coeffs, &prime);
        if f.coeffs.len() == int_coeffs.len() && f.is_squarefree() {
            break f;
        }
        prime = next_prime(&prime);
    };

    let modular = f.factor();
    // symmetric lift and recombine
    recombine(&int_coeffs, &modular, &prime)
        .into_iter()
        .map(|g| {
            UniPoly::new(g.into_iter().map(Rat::from_integer).collect::<Vec<Rat>>()).monic()
        })
        .collect()
}

/// Mignotte-style bound: coefficients of any factor of f (times lc f) are
/// bounded by 2^deg * sqrt(deg+1) * max|f_i| * |lc f|.
fn mignotte_bound(coeffs: &[Int]) -> Int {
    let deg = coeffs.len() - 1;
    let maxc = coeffs.iter().map(|c| c.abs()).max().unwrap();
    let lc = coeffs.last().unwrap().abs();
    let sqrt_term = int((deg as i64) + 2); // over sqrt(deg+1)
    (Int::one() << (deg as u32 + 1)) * sqrt_term * maxc * lc
}

/// Dense polynomial over Z/p with coefficients in [0, p).
#[derive(Clone, PartialEq, Debug)]
struct ModPoly {
    coeffs: Vec<Int>,
    p: Int,
}

impl ModPoly {
    fn from_int_coeffs(coeffs: &[Int], p: &Int) -> ModPoly {
        let mut c: Vec<Int> = coeffs.iter().map(|x| x.mod_floor(p)).collect();
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        ModPoly { coeffs: c, p: p.clone() }
    }

    fn zero(p: &Int) -> ModPoly {
        ModPoly { coeffs: vec![], p: p.clone() }
    }

    fn one(p: &Int) -> ModPoly {
        ModPoly { coeffs: vec![Int::one()], p: p.clone() }
    }

    fn x(p: &Int) -> ModPoly {
        ModPoly { coeffs: vec![Int::zero(), Int::one()], p: p.clone() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().map_or(false, |x| x.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn sub(&self, o: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut c = vec![Int::zero(); n];
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Int::zero);
            let b = o.coeffs.get(i).cloned().unwrap_or_else(Int::zero);
            c[i] = (a - b).mod_floor(&self.p);
        }
        ModPoly { coeffs: c, p: self.p.clone() }.normalize()
    }

    fn mul(&self, o: &ModPoly) -> ModPoly {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(&self.p);
        }
        let mut c = vec![Int::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        for x in c.iter_mut() {
            *x = x.mod_floor(&self.p);
        }
        ModPoly { coeffs: c, p: self.p.clone() }.normalize()
    }

    fn scale(&self, k: &Int) -> ModPoly {
        let k = k.mod_floor(&self.p);
        ModPoly {
            coeffs: self.coeffs.iter().map(|c| (c * &k).mod_floor(&self.p)).collect(),
            p: self.p.clone(),
        }
        .normalize()
    }

    fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.coeffs.last().unwrap();
        let inv = mod_inv(lc, &self.p);
        self.scale(&inv)
    }

    fn divmod(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!d.is_zero());
        let dd = d.deg();
        let lc_inv = mod_inv(d.coeffs.last().unwrap(), &self.p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = (rem.last().unwrap() * &lc_inv).mod_floor(&self.p);
            if !factor.is_zero() {
                quot[k] = factor.clone();
                for i in 0..=dd {
                    rem[k + i] = (&rem[k + i] - &d.coeffs[i] * &factor).mod_floor(&self.p);
                }
            }
            rem.pop();
            while rem.last().map_or(false, |x| x.is_zero()) {
                rem.pop();
            }
        }
        (
            ModPoly { coeffs: quot, p: self.p.clone() }.normalize(),
            ModPoly { coeffs: rem, p: self.p.clone() }.normalize(),
        )
    }

    fn rem(&self, d: &ModPoly) -> ModPoly {
        self.divmod(d).1
    }

    fn gcd(&self, o: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(&self.p);
        }
        let c: Vec<Int> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| (x * int(i as i64)).mod_floor(&self.p))
            .collect();
        ModPoly { coeffs: c, p: self.p.clone() }.normalize()
    }

    fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).deg() == 0
    }

    /// self^e mod m, with a big-integer exponent.
    fn powmod(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(&self.p);
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Full factorization of a monic squarefree polynomial mod p into monic
    /// irreducibles, deterministic via a seeded generator.
    fn factor(&self) -> Vec<ModPoly> {
        let f = self.monic();
        let mut seed = [0u8; 32];
        for (i, c) in f.coeffs.iter().enumerate() {
            let h = c.iter_u64_digits().next().unwrap_or(0) ^ (i as u64).wrapping_mul(0x9e3779b9);
            let b = h.to_le_bytes();
            for (j, v) in b.iter().enumerate() {
                seed[(i * 8 + j) % 32] ^= v;
            }
        }
        let mut rng = ChaCha8Rng::from_seed(seed);
        let mut out = Vec::new();
        for (g, d) in f.distinct_degree() {
            equal_degree(&g, d, &mut rng, &mut out);
        }
        out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        out
    }

    /// Distinct-degree decomposition: list of (product of irreducibles of degree d, d).
    fn distinct_degree(&self) -> Vec<(ModPoly, usize)> {
        let mut f = self.clone();
        let mut out = Vec::new();
        let p_uint = self.p.to_biguint().unwrap();
        let mut h = ModPoly::x(&self.p);
        let mut d = 0usize;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.powmod(&p_uint, &f);
            let g = f.gcd(&h.sub(&ModPoly::x(&self.p)));
            if g.deg() > 0 {
                out.push((g.clone(), d));
                f = f.divmod(&g).0;
                h = h.rem(&f);
            }
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }
}

/// Cantor-Zassenhaus equal-degree splitting (p odd).
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    let p_uint = f.p.to_biguint().unwrap();
    let e = (p_uint.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        // random polynomial of degree < deg f
        let coeffs: Vec<Int> = (0..f.deg())
            .map(|_| {
                let limbs: [u64; 4] = rng.gen();
                let v = Int::from(limbs[0]) ^ (Int::from(limbs[1]) << 64u32);
                v.mod_floor(&f.p)
            })
            .collect();
        let r = ModPoly { coeffs, p: f.p.clone() }.normalize();
        if r.deg() == 0 && r.coeffs.len() <= 1 {
            continue;
        }
        let s = r.powmod(&e, f).sub(&ModPoly::one(&f.p));
        let g = f.gcd(&s);
        if g.deg() > 0 && g.deg() < f.deg() {
            let rest = f.divmod(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&rest, d, rng, out);
            return;
        }
    }
}

fn mod_inv(a: &Int, p: &Int) -> Int {
    let e = a.extended_gcd(p);
    assert!(e.gcd.is_one(), "inverse does not exist");
    e.x.mod_floor(p)
}

/// Symmetric representative in (-p/2, p/2].
fn sym(a: &Int, p: &Int) -> Int {
    let m = a.mod_floor(p);
    if &m * 2 > *p {
        m - p
    } else {
        m
    }
}

/// Recombine modular factors into true integer factors.
/// `coeffs` is a primitive squarefree integer polynomial, `modular` its monic
/// irreducible factors mod `prime` (prime exceeding twice the factor bound).
fn recombine(coeffs: &[Int], modular: &[ModPoly], prime: &Int) -> Vec<Vec<Int>> {
    let lc = coeffs.last().unwrap().clone();
    let mut remaining: Vec<ModPoly> = modular.to_vec();
    let mut current: Vec<Int> = coeffs.to_vec();
    let mut out: Vec<Vec<Int>> = Vec::new();

    'outer: loop {
        if remaining.is_empty() {
            break;
        }
        if remaining.len() == 1 {
            out.push(primitive(&current));
            break;
        }
        let r = remaining.len();
        // subsets by increasing cardinality; complement handled implicitly
        for size in 1..=r / 2 {
            let mut subset: Vec<usize> = (0..size).collect();
            loop {
                // candidate = lc * prod(subset) symmetrically lifted
                let mut prod = ModPoly::one(prime).scale(&lc);
                for &i in &subset {
                    prod = prod.mul(&remaining[i]);
                }
                let cand: Vec<Int> = prod.coeffs.iter().map(|c| sym(c, prime)).collect();
                let cand = primitive(&cand);
                if let Some(quot) = exact_div_int(&current, &cand) {
                    out.push(cand);
                    // remove used modular factors
                    let mut keep = Vec::new();
                    for (i, m) in remaining.iter().enumerate() {
                        if !subset.contains(&i) {
                            keep.push(m.clone());
                        }
                    }
                    remaining = keep;
                    current = quot;
                    continue 'outer;
                }
                // next subset of this size
                if !next_subset(&mut subset, r) {
                    break;
                }
            }
        }
        // no proper subset works: current is irreducible
        out.push(primitive(&current));
        break;
    }
    out
}

fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn primitive(coeffs: &[Int]) -> Vec<Int> {
    let mut c = coeffs.to_vec();
    while c.last().map_or(false, |x| x.is_zero()) {
        c.pop();
    }
    let mut g = Int::zero();
    for x in &c {
        g = g.gcd(x);
    }
    if c.last().map_or(false, |x| x.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for x in c.iter_mut() {
            *x = &*x / &g;
        }
    }
    c
}

/// Exact division of integer polynomials; None when not divisible.
fn exact_div_int(num: &[Int], den: &[Int]) -> Option<Vec<Int>> {
    if den.is_empty() || den.len() > num.len() {
        return None;
    }
    let mut rem: Vec<Rat> = num.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let dd = den.len() - 1;
    let lc = Rat::from_integer(den.last().unwrap().clone());
    let mut quot = vec![Rat::zero(); num.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let factor = rem.last().unwrap() / &lc;
        quot[k] = factor.clone();
        for i in 0..=dd {
            let t = Rat::from_integer(den[i].clone()) * &factor;
            rem[k + i] = &rem[k + i] - t;
        }
        rem.pop();
        while rem.last().map_or(false, |x| x.is_zero()) {
            rem.pop();
        }
        if rem.len() <= dd {
            break;
        }
    }
    if !rem.is_empty() {
        return None;
    }
    let mut out = Vec::with_capacity(quot.len());
    for q in quot {
        if !q.denom().is_one() {
            return None;
        }
        out.push(q.numer().clone());
    }
    while out.last().map_or(false, |x| x.is_zero()) {
        out.pop();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{is_prime, rat};

    fn poly(c: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_i64(c)
    }

    #[test]
    fn irreducibility_known_cases() {
        assert!(is_irreducible_q(&poly(&[-2, 0, 1]))); // x^2 - 2
        assert!(is_irreducible_q(&poly(&[1, 0, -10, 0, 1]))); // x^4 - 10x^2 + 1
        assert!(is_irreducible_q(&poly(&[-2, 0, 0, 1]))); // x^3 - 2
        assert!(!is_irreducible_q(&poly(&[-1, 0, 1]))); // (x-1)(x+1)
        assert!(!is_irreducible_q(&poly(&[2, 3, 1]))); // (x+1)(x+2)
        assert!(is_irreducible_q(&poly(&[1, 1, 1, 1, 1]))); // cyclotomic Phi_5
        assert!(is_irreducible_q(&poly(&[7, -3, 0, 0, 0, 2]))); // random quintic
    }

    #[test]
    fn factorization_reassembles() {
        let f = poly(&[-2, 0, 1]).mul(&poly(&[-3, 0, 1])).mul(&poly(&[5, 1]).pow(2));
        let (unit, factors) = factor_over_q(&f);
        let mut prod = UniPoly::constant(unit);
        for (g, e) in &factors {
            assert!(is_irreducible_q(g));
            prod = prod.mul(&g.pow(*e as u64));
        }
        assert_eq!(prod, f);
        assert_eq!(factors.iter().map(|(_, e)| *e).max(), Some(2));
    }

    #[test]
    fn rational_roots_found_exactly() {
        // (2x - 3)(3x + 1)(x^2 + 1)
        let f = poly(&[-3, 2]).mul(&poly(&[1, 3])).mul(&poly(&[1, 0, 1]));
        let roots = rational_roots(&f);
        assert_eq!(roots, vec![rat(-1, 3), rat(3, 2)]);
    }

    #[test]
    fn big_coefficient_factorization() {
        // (x^2 - 2)(x^3 + 99991 x - 7)
        let a = poly(&[-2, 0, 1]);
        let b = poly(&[-7, 99991, 0, 1]);
        let (_, factors) = factor_over_q(&a.mul(&b));
        assert_eq!(factors.len(), 2);
        let degs: Vec<usize> = factors.iter().map(|(g, _)| g.deg0()).collect();
        assert_eq!(degs, vec![2, 3]);
    }

    #[test]
    fn power_of_x_handled() {
        let f = poly(&[0, 0, -4, 0, 1]); // x^2 (x^2 - 4)
        let (_, factors) = factor_over_q(&f);
        let total: u32 = factors.iter().map(|(g, e)| g.deg0() as u32 * e).sum();
        assert_eq!(total, 4);
        assert!(factors.iter().any(|(g, e)| *e == 2 && g.deg0() == 1));
    }

    #[test]
    fn primes_for_factoring_are_prime() {
        assert!(is_prime(&next_prime(&int(1 << 20))));
    }
}
