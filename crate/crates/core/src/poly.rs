//! Dense univariate polynomials over an exact field.
//!
//! `UniPoly<T>` stores coefficients in ascending degree order; the vector is
//! empty for the zero polynomial and the last element is nonzero otherwise.

use crate::rat::{rat_int, Rat};
use num_integer::Integer;
use num_traits::Signed;
use std::fmt;

/// Exact field operations required of polynomial coefficients.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    fn from_rat(q: &Rat) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        assert!(!num_traits::Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
}

#[derive(Clone, PartialEq)]
pub struct UniPoly<T: Coeff> {
    coeffs: Vec<T>,
}

impl<T: Coeff> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({:?})*y^{}", c, i))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<T: Coeff> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![T::one()])
    }

    pub fn constant(c: T) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![T::zero(), T::one()])
    }

    pub fn monomial(c: T, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree treating zero as 0 (convenience for bounds).
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut d = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut k = T::zero();
            let one = T::one();
            // small-integer multiple via repeated addition is wasteful; build i as field element
            let mut m = i;
            let mut base = one.clone();
            while m > 0 {
                if m & 1 == 1 {
                    k = k.add(&base);
                }
                m >>= 1;
                base = base.add(&base);
            }
            d.push(c.mul(&k));
        }
        UniPoly::new(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Euclidean division: self = q*div + r with deg r < deg div.
    pub fn divmod(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let lc_inv = div.leading().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().mul(&lc_inv);
            if !factor.is_zero() {
                quot[k] = factor.clone();
                for i in 0..=dd {
                    let t = div.coeffs[i].mul(&factor);
                    rem[k + i] = rem[k + i].sub(&t);
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divmod(div).1
    }

    /// Monic gcd via the Euclidean algorithm over the coefficient field.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv();
        self.scale(&inv)
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.divmod(&g).0.monic()
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Composition self(g(x)) by Horner's scheme.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Rat> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Clears denominators and divides by the integer content.
    /// Returns the primitive integer polynomial with positive leading coefficient,
    /// as rational coefficients.
    pub fn primitive_integer(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den: crate::rat::Int = num_traits::One::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<crate::rat::Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content: crate::rat::Int = num_traits::Zero::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
        UniPoly::new(ints.into_iter().map(Rat::from_integer).collect())
    }

    /// Resultant of two rational polynomials via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> Rat {
        fn go(f: &UniPoly<Rat>, g: &UniPoly<Rat>) -> Rat {
            if g.is_zero() {
                return if f.degree() == Some(0) { rat_int(1) } else { rat_int(0) };
            }
            if f.is_zero() {
                return if g.degree() == Some(0) { rat_int(1) } else { rat_int(0) };
            }
            let df = f.degree().unwrap();
            let dg = g.degree().unwrap();
            if dg == 0 {
                return crate::rat::rat_pow(&g.leading(), df as i64);
            }
            if df < dg {
                let sign = if (df * dg) % 2 == 1 { rat_int(-1) } else { rat_int(1) };
                return sign * go(g, f);
            }
            let r = f.rem(g);
            if r.is_zero() {
                return rat_int(0);
            }
            let dr = r.degree().unwrap();
            let sign = if (df * dg) % 2 == 1 { rat_int(-1) } else { rat_int(1) };
            sign * crate::rat::rat_pow(&g.leading(), (df - dr) as i64) * go(g, &r)
        }
        go(self, other)
    }
}

/// Lagrange interpolation through exact rational points.
pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly<Rat> {
    let mut acc = UniPoly::<Rat>::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UniPoly::<Rat>::one();
        let mut denom = rat_int(1);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPoly::new(vec![-xj.clone(), rat_int(1)]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn divmod_roundtrip() {
        let f = UniPoly::from_i64(&[2, 0, -3, 1, 4]);
        let g = UniPoly::from_i64(&[1, 2, 1]);
        let (q, r) = f.divmod(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.deg0() < g.deg0());
    }

    #[test]
    fn gcd_of_product() {
        let a = UniPoly::from_i64(&[-2, 0, 1]); // x^2 - 2
        let b = UniPoly::from_i64(&[1, 1]); // x + 1
        let f = a.mul(&b);
        let g = a.mul(&UniPoly::from_i64(&[3, 1]));
        assert_eq!(f.gcd(&g), a.monic());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let a = UniPoly::from_i64(&[-1, 1]); // x - 1
        let f = a.pow(3).mul(&UniPoly::from_i64(&[2, 1]));
        let sf = f.squarefree_part();
        assert_eq!(sf, a.mul(&UniPoly::from_i64(&[2, 1])).monic());
    }

    #[test]
    fn resultant_known_values() {
        let f = UniPoly::from_i64(&[-2, 0, 1]);
        let g = UniPoly::from_i64(&[-3, 0, 1]);
        assert_eq!(f.resultant(&g), rat(1, 1));
        // res(x^2-2, x-1) = 1 - 2 = -1
        let h = UniPoly::from_i64(&[-1, 1]);
        assert_eq!(f.resultant(&h), rat(-1, 1));
        let shared = f.mul(&h);
        assert_eq!(f.resultant(&shared), rat(0, 1));
    }

    #[test]
    fn interpolation_recovers_poly() {
        let f = UniPoly::from_i64(&[1, -2, 0, 5]);
        let pts: Vec<(Rat, Rat)> = (0..4)
            .map(|i| {
                let x = rat(i as i64, 1);
                let y = f.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(interpolate(&pts), f);
    }

    #[test]
    fn primitive_integer_normalizes() {
        let f = UniPoly::new(vec![rat(1, 2), rat(-3, 4), rat(1, 1)]);
        let p = f.primitive_integer();
        assert_eq!(p, UniPoly::from_i64(&[2, -3, 4]));
        let g = UniPoly::new(vec![rat(-2, 1), rat(-4, 1)]);
        assert_eq!(g.primitive_integer(), UniPoly::from_i64(&[1, 2]));
    }
}
