//! Real root isolation (Sturm sequences) and certified refinement
//! (interval Newton with bisection fallback).

use crate::ball::{Ball, Dyadic, Round};
use crate::error::{Error, Result};
use crate::poly::{Coeff, UniPoly};
use crate::rat::{rat_int, Rat};
use num_traits::Signed;

/// Coefficients with an exactly decidable sign. Rationals decide directly;
/// number-field elements decide by embedding refinement.
pub trait RealCoeff: Coeff {
    /// -1, 0, or +1.
    fn sign(&self) -> i32;
    /// Certified enclosure at roughly `prec` bits.
    fn to_ball(&self, prec: u32) -> Ball;
}

impl RealCoeff for Rat {
    fn sign(&self) -> i32 {
        if num_traits::Zero::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
    fn to_ball(&self, prec: u32) -> Ball {
        Ball::from_rational(self, prec)
    }
}

/// Open isolating interval with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi);
        Interval { lo, hi }
    }
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / rat_int(2)
    }
    pub fn contains(&self, x: &Rat) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain<T: RealCoeff> {
    chain: Vec<UniPoly<T>>,
}

impl<T: RealCoeff> SturmChain<T> {
    pub fn new(p: &UniPoly<T>) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            chain.push(r);
        }
        SturmChain { chain }
    }

    /// Number of sign variations of the chain at `x`.
    fn variations_at(&self, x: &Rat) -> usize {
        let xt = T::from_rat(x);
        let mut last = 0i32;
        let mut count = 0usize;
        for p in &self.chain {
            let s = p.eval(&xt).sign();
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of real roots in the half-open interval (a, b].
    pub fn count_roots(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a <= b);
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

/// Cauchy-style bound: all real roots lie in (-B, B).
pub fn root_bound<T: RealCoeff>(p: &UniPoly<T>) -> Rat {
    let deg = p.deg0();
    if deg == 0 {
        return rat_int(1);
    }
    // |root| <= 1 + max |a_i / a_n|; bound |a_i| via balls
    let prec = 64;
    let mut max_ratio = rat_int(0);
    for i in 0..deg {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let num = c.to_ball(prec).abs().upper().to_rational();
        // lower bound of |lc| by refining until positive
        let mut lp = prec;
        let lo = loop {
            let b = p.leading().to_ball(lp).abs();
            let l = b.lower().to_rational();
            if l > rat_int(0) {
                break l;
            }
            lp *= 2;
            assert!(lp < 1 << 22, "leading coefficient sign refinement diverged");
        };
        let ratio = num / lo;
        if ratio > max_ratio {
            max_ratio = ratio;
        }
    }
    rat_int(1) + max_ratio
}

/// Isolate all real roots of `p` (counted without multiplicity) into
/// pairwise disjoint open intervals with rational endpoints where the
/// squarefree part changes sign.
pub fn isolate_real_roots<T: RealCoeff>(p: &UniPoly<T>) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf);
    let bound = root_bound(&sf);
    let lo = -bound.clone();
    let hi = bound;
    // make sure the endpoints are not roots (they cannot be: strict bound)
    let total = chain.count_roots(&lo, &hi);
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => {
                // shrink until the endpoints are certainly not roots and keep the interval open
                out.push(Interval::new(a, b));
            }
            _ => {
                let mut m = (&a + &b) / rat_int(2);
                // nudge the midpoint off a root
                let mt = T::from_rat(&m);
                if sf.eval(&mt).sign() == 0 {
                    // m is an exact root: split around it with a gap that
                    // isolates m from everything else
                    let width = &b - &a;
                    let mut delta = width / rat_int(4);
                    loop {
                        let l = &m - &delta;
                        let r = &m + &delta;
                        if chain.count_roots(&l, &r) == 1 {
                            out.push(Interval::new(l.clone(), r.clone()));
                            let left_count = chain.count_roots(&a, &l);
                            let right_count = chain.count_roots(&r, &b);
                            if left_count > 0 {
                                stack.push((a.clone(), l, left_count));
                            }
                            if right_count > 0 {
                                stack.push((r, b.clone(), right_count));
                            }
                            break;
                        }
                        delta /= rat_int(2);
                    }
                    continue;
                }
                let left = chain.count_roots(&a, &m);
                let right = count - left;
                if left > 0 {
                    stack.push((a, m.clone(), left));
                }
                if right > 0 {
                    stack.push((m, b, right));
                }
            }
        }
    }
    // sort intervals by midpoint
    out.sort_by(|x, y| x.mid().partial_cmp(&y.mid()).unwrap());
    Ok(out)
}

/// Certified refinement of a simple real root of a rational polynomial.
///
/// Returns a ball containing the root with radius <= 2^-bits * max(1, |center|).
/// The interval must bracket a sign change of the squarefree part.
pub fn refine_root(p: &UniPoly<Rat>, iv: &Interval, bits: u32) -> Result<Ball> {
    let sf = p.squarefree_part();
    refine_root_sf(&sf, iv, bits)
}

fn refine_root_sf(sf: &UniPoly<Rat>, iv: &Interval, bits: u32) -> Result<Ball> {
    // exact rational root shortcut
    if sf.degree() == Some(1) {
        let root = -sf.coeff(0) / sf.coeff(1);
        if iv.contains(&root) {
            return Ok(Ball::from_rational(&root, bits + 32));
        }
        return Err(Error::AmbiguousRefinement);
    }
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let s_lo = sf.eval(&lo).sign();
    let s_hi = sf.eval(&hi).sign();
    if s_lo == 0 {
        return Ok(Ball::from_rational(&lo, bits + 32));
    }
    if s_hi == 0 {
        return Ok(Ball::from_rational(&hi, bits + 32));
    }
    if s_lo == s_hi {
        // no sign change: either no root or a non-simple situation
        return Err(Error::AmbiguousRefinement);
    }
    let dsf = sf.derivative();
    let target = |l: &Rat, h: &Rat| -> bool {
        let width = h - l;
        let mag = l.abs().max(h.abs()).max(rat_int(1));
        width * crate::rat::rat_pow(&rat_int(2), bits as i64) <= mag * rat_int(2)
    };
    let mut newton_ok = true;
    while !target(&lo, &hi) {
        // dyadic midpoint keeps denominators as powers of two
        let mid_exact = (&lo + &hi) / rat_int(2);
        let m = Dyadic::from_rational(&mid_exact, bits + 64, Round::Nearest).to_rational();
        let m = if m <= lo || m >= hi { mid_exact } else { m };
        if newton_ok {
            // interval Newton: N = m - p(m) / p'([lo,hi])
            let dlo = interval_eval_min(&dsf, &lo, &hi);
            let dhi = interval_eval_max(&dsf, &lo, &hi);
            if dlo.is_positive() == dhi.is_positive()
                && !num_traits::Zero::is_zero(&dlo)
                && !num_traits::Zero::is_zero(&dhi)
            {
                let pm = sf.eval(&m);
                let q1 = &m - &pm / &dlo;
                let q2 = &m - &pm / &dhi;
                let (nl, nh) = if q1 <= q2 { (q1, q2) } else { (q2, q1) };
                let il = if nl > lo { nl } else { lo.clone() };
                let ih = if nh < hi { nh } else { hi.clone() };
                if il <= ih && (&ih - &il) * rat_int(3) <= (&hi - &lo) * rat_int(2) {
                    // keep endpoint bit-size bounded: round outward to dyadics
                    let il = Dyadic::from_rational(&il, bits + 64, Round::Down).to_rational();
                    let ih = Dyadic::from_rational(&ih, bits + 64, Round::Up).to_rational();
                    let il = if il > lo { il } else { lo.clone() };
                    let ih = if ih < hi { ih } else { hi.clone() };
                    // genuine contraction; verify the bracket is preserved
                    let sl = sf.eval(&il).sign();
                    let sh = sf.eval(&ih).sign();
                    if sl != 0 && sh != 0 && sl != sh {
                        lo = il;
                        hi = ih;
                        continue;
                    }
                    if sl == 0 {
                        return Ok(Ball::from_rational(&il, bits + 32));
                    }
                    if sh == 0 {
                        return Ok(Ball::from_rational(&ih, bits + 32));
                    }
                }
            } else {
                newton_ok = false;
            }
        }
        // bisection step
        let sm = sf.eval(&m).sign();
        if sm == 0 {
            return Ok(Ball::from_rational(&m, bits + 32));
        }
        if sm == s_lo {
            lo = m;
        } else {
            hi = m;
        }
        newton_ok = true;
    }
    let lo_d = Dyadic::from_rational(&lo, bits + 64, Round::Down);
    let hi_d = Dyadic::from_rational(&hi, bits + 64, Round::Up);
    Ok(Ball::from_endpoints(&lo_d, &hi_d))
}

/// Lower bound of p over [lo, hi] coordinatewise (crude interval Horner).
fn interval_eval_min(p: &UniPoly<Rat>, lo: &Rat, hi: &Rat) -> Rat {
    interval_eval(p, lo, hi).0
}

fn interval_eval_max(p: &UniPoly<Rat>, lo: &Rat, hi: &Rat) -> Rat {
    interval_eval(p, lo, hi).1
}

fn interval_eval(p: &UniPoly<Rat>, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut acc_lo = rat_int(0);
    let mut acc_hi = rat_int(0);
    for c in p.coeffs().iter().rev() {
        // multiply [acc_lo, acc_hi] by [lo, hi]
        let candidates = [
            &acc_lo * lo,
            &acc_lo * hi,
            &acc_hi * lo,
            &acc_hi * hi,
        ];
        let mut nl = candidates[0].clone();
        let mut nh = candidates[0].clone();
        for c in &candidates[1..] {
            if *c < nl {
                nl = c.clone();
            }
            if *c > nh {
                nh = c.clone();
            }
        }
        acc_lo = nl + c;
        acc_hi = nh + c;
    }
    (acc_lo, acc_hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn poly(c: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_i64(c)
    }

    #[test]
    fn isolates_sqrt2_roots() {
        let p = poly(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 2);
        // one root in (-2,-1), one in (1,2)
        assert!(ivs[0].lo < rat(-14142, 10000) && rat(-14143, 10000) < ivs[0].hi);
        assert!(ivs[1].contains(&rat(14142, 10000)) || (ivs[1].lo < rat(141422, 100000)));
    }

    #[test]
    fn no_real_roots() {
        let p = poly(&[1, 0, 1]);
        assert!(isolate_real_roots(&p).unwrap().is_empty());
    }

    #[test]
    fn cbrt2_isolated() {
        let p = poly(&[-2, 0, 0, 1]);
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 1);
        // 2^(1/3) = 1.25992104989...
        let r = rat(125992104989, 100000000000);
        assert!(ivs[0].contains(&r));
    }

    #[test]
    fn zero_poly_is_an_error() {
        assert!(matches!(
            isolate_real_roots(&UniPoly::<Rat>::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn exact_rational_roots_with_multiplicity() {
        // (x-1)^2 (2x+3)
        let p = poly(&[-1, 1]).pow(2).mul(&poly(&[3, 2]));
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rat(-3, 2)));
        assert!(ivs[1].contains(&rat(1, 1)));
    }

    #[test]
    fn refine_sqrt2_to_high_precision() {
        let p = poly(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&p).unwrap();
        let b = refine_root(&p, &ivs[1], 128).unwrap();
        // radius <= 2^-128 * max(1, center)
        let max_rad = rat(2, 1) * crate::rat::rat_pow(&rat(2, 1), -128);
        assert!(b.radius().to_rational() <= max_rad);
        // verify by squaring
        let sq = b.mul(&b, 256);
        assert!(sq.contains_rational(&rat(2, 1)));
    }

    #[test]
    fn refine_exact_linear_root() {
        let p = poly(&[-3, 1]);
        let b = refine_root(&p, &Interval::new(rat(2, 1), rat(4, 1)), 10).unwrap();
        assert!(b.is_exact());
        assert_eq!(b.center().to_rational(), rat(3, 1));
    }

    #[test]
    fn refine_negative_branch() {
        let p = poly(&[-2, 0, 1]);
        let b = refine_root(&p, &Interval::new(rat(-2, 1), rat(-1, 1)), 32).unwrap();
        assert!(b.upper().to_rational() < rat(-14142, 10001));
    }

    #[test]
    fn refinement_radius_monotone_in_bits() {
        let p = poly(&[-5, 0, 0, 1, 1]);
        let ivs = isolate_real_roots(&p).unwrap();
        for iv in &ivs {
            let mut prev: Option<Rat> = None;
            for bits in [16u32, 32, 64, 128] {
                let b = refine_root(&p, iv, bits).unwrap();
                let r = b.radius().to_rational();
                if let Some(pr) = prev {
                    assert!(r <= pr, "radius grew when bits doubled");
                }
                prev = Some(r);
            }
        }
    }

    #[test]
    fn ambiguous_refinement_detected() {
        let p = poly(&[-2, 0, 1]);
        // interval containing no root
        assert!(matches!(
            refine_root(&p, &Interval::new(rat(3, 1), rat(4, 1)), 16),
            Err(Error::AmbiguousRefinement)
        ));
    }
}
