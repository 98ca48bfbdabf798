//! Real algebraic number fields Q(theta) with certified embeddings.
//!
//! A field is a monic irreducible minimal polynomial together with an
//! isolating interval selecting one real root. Elements are coordinate
//! vectors in the power basis; equality and sign tests are exact.

use crate::ball::{Ball, Dyadic, Round};
use crate::error::{Error, Result};
use crate::factor::{factor_over_q, is_irreducible_q};
use crate::poly::{interpolate, Coeff, UniPoly};
use crate::rat::{rat_int, rat_pow, Rat};
use crate::roots::{isolate_real_roots, refine_root, Interval, RealCoeff, SturmChain};
use num_traits::Signed;
use std::fmt;
use std::sync::{Arc, Mutex};

pub struct NumberField {
    minpoly: UniPoly<Rat>,
    degree: usize,
    interval: Interval,
    emb_cache: Mutex<(u32, Ball)>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q(theta), theta root of {:?} in ({}, {})",
            self.minpoly, self.interval.lo, self.interval.hi
        )
    }
}

pub type FieldRef = Arc<NumberField>;

impl NumberField {
    /// Build a field from a monic irreducible polynomial and an interval
    /// isolating exactly one real root.
    pub fn new(minpoly: UniPoly<Rat>, interval: Interval) -> Result<FieldRef> {
        let minpoly = minpoly.monic();
        let degree = minpoly
            .degree()
            .ok_or_else(|| Error::Input("zero minimal polynomial".into()))?;
        if degree < 2 {
            return Err(Error::Input(
                "degree-one minimal polynomial: use a plain rational".into(),
            ));
        }
        if !is_irreducible_q(&minpoly) {
            return Err(Error::Input("minimal polynomial is reducible over Q".into()));
        }
        let chain = SturmChain::new(&minpoly);
        if chain.count_roots(&interval.lo, &interval.hi) != 1 {
            return Err(Error::Input(
                "interval does not isolate exactly one root of the minimal polynomial".into(),
            ));
        }
        let start = refine_root(&minpoly, &interval, 64)?;
        Ok(Arc::new(NumberField {
            minpoly,
            degree,
            interval,
            emb_cache: Mutex::new((64, start)),
        }))
    }

    pub fn minpoly(&self) -> &UniPoly<Rat> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// Certified enclosure of theta to at least `bits` relative precision.
    pub fn theta_ball(&self, bits: u32) -> Ball {
        {
            let cache = self.emb_cache.lock().unwrap();
            if cache.0 >= bits {
                return cache.1.clone();
            }
        }
        let refined = refine_root(&self.minpoly, &self.interval, bits)
            .expect("isolating interval refinement cannot fail");
        let mut cache = self.emb_cache.lock().unwrap();
        if bits > cache.0 {
            *cache = (bits, refined.clone());
        }
        refined
    }

    pub fn theta(self: &FieldRef) -> NfElem {
        let mut coords = vec![rat_int(0); self.degree];
        coords[1] = rat_int(1);
        NfElem { field: Some(self.clone()), coords }
    }

    /// Same underlying real number: equal minimal polynomials and a shared root.
    pub fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
        if Arc::ptr_eq(a, b) {
            return true;
        }
        if a.minpoly != b.minpoly {
            return false;
        }
        let lo = if a.interval.lo > b.interval.lo { a.interval.lo.clone() } else { b.interval.lo.clone() };
        let hi = if a.interval.hi < b.interval.hi { a.interval.hi.clone() } else { b.interval.hi.clone() };
        if lo >= hi {
            return false;
        }
        SturmChain::new(&a.minpoly).count_roots(&lo, &hi) == 1
    }
}

/// Element of a real algebraic number field, or a plain rational when `field`
/// is None. Arithmetic coerces rationals into the partner's field.
#[derive(Clone)]
pub struct NfElem {
    field: Option<FieldRef>,
    coords: Vec<Rat>,
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            None => write!(f, "{}", self.coords[0]),
            Some(_) => {
                let terms: Vec<String> = self
                    .coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(i, c)| {
                        if i == 0 {
                            format!("{}", c)
                        } else if i == 1 {
                            format!("{}*t", c)
                        } else {
                            format!("{}*t^{}", c, i)
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join(" + "))
                }
            }
        }
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        match (&self.field, &other.field) {
            (None, None) => self.coords[0] == other.coords[0],
            (Some(_), None) => self.is_rational() && self.coords[0] == other.coords[0],
            (None, Some(_)) => other.is_rational() && self.coords[0] == other.coords[0],
            (Some(a), Some(b)) => {
                assert!(
                    NumberField::same_field(a, b),
                    "comparison of elements from different number fields"
                );
                self.coords == other.coords
            }
        }
    }
}

impl NfElem {
    pub fn from_rational(q: Rat) -> NfElem {
        NfElem { field: None, coords: vec![q] }
    }

    pub fn from_i64(n: i64) -> NfElem {
        NfElem::from_rational(rat_int(n))
    }

    pub fn rational_in(field: &FieldRef, q: Rat) -> NfElem {
        let mut coords = vec![rat_int(0); field.degree()];
        coords[0] = q;
        NfElem { field: Some(field.clone()), coords }
    }

    pub fn new_in(field: &FieldRef, mut coords: Vec<Rat>) -> NfElem {
        assert!(coords.len() <= field.degree());
        coords.resize(field.degree(), rat_int(0));
        NfElem { field: Some(field.clone()), coords }
    }

    pub fn field(&self) -> Option<&FieldRef> {
        self.field.as_ref()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| num_traits::Zero::is_zero(c))
    }

    pub fn to_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn unify<'a>(a: &'a NfElem, b: &'a NfElem) -> (NfElem, NfElem) {
        match (&a.field, &b.field) {
            (None, None) => (a.clone(), b.clone()),
            (Some(f), None) => (a.clone(), NfElem::rational_in(f, b.coords[0].clone())),
            (None, Some(f)) => (NfElem::rational_in(f, a.coords[0].clone()), b.clone()),
            (Some(fa), Some(fb)) => {
                assert!(
                    NumberField::same_field(fa, fb),
                    "arithmetic across distinct number fields requires an explicit join"
                );
                (a.clone(), b.clone())
            }
        }
    }

    pub fn add(&self, other: &NfElem) -> NfElem {
        let (a, b) = NfElem::unify(self, other);
        let coords = a
            .coords
            .iter()
            .zip(b.coords.iter())
            .map(|(x, y)| x + y)
            .collect();
        NfElem { field: a.field, coords }
    }

    pub fn sub(&self, other: &NfElem) -> NfElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NfElem {
        NfElem {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &NfElem) -> NfElem {
        let (a, b) = NfElem::unify(self, other);
        match &a.field {
            None => NfElem::from_rational(&a.coords[0] * &b.coords[0]),
            Some(f) => {
                let d = f.degree();
                let mut prod = vec![rat_int(0); 2 * d - 1];
                for (i, x) in a.coords.iter().enumerate() {
                    if num_traits::Zero::is_zero(x) {
                        continue;
                    }
                    for (j, y) in b.coords.iter().enumerate() {
                        if num_traits::Zero::is_zero(y) {
                            continue;
                        }
                        prod[i + j] += x * y;
                    }
                }
                // reduce modulo the minimal polynomial
                let mp = f.minpoly();
                for k in (d..prod.len()).rev() {
                    let c = prod[k].clone();
                    if num_traits::Zero::is_zero(&c) {
                        continue;
                    }
                    prod[k] = rat_int(0);
                    for i in 0..d {
                        let m = mp.coeff(i);
                        if !num_traits::Zero::is_zero(&m) {
                            prod[k - d + i] -= &c * m;
                        }
                    }
                }
                prod.truncate(d);
                NfElem { field: a.field.clone(), coords: prod }
            }
        }
    }

    pub fn scale(&self, q: &Rat) -> NfElem {
        NfElem {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn is_zero_elem(&self) -> bool {
        self.coords.iter().all(|c| num_traits::Zero::is_zero(c))
    }

    pub fn inv(&self) -> NfElem {
        assert!(!self.is_zero_elem(), "inverse of zero");
        match &self.field {
            None => NfElem::from_rational(self.coords[0].recip()),
            Some(f) => {
                if self.is_rational() {
                    return NfElem::rational_in(f, self.coords[0].recip());
                }
                // extended Euclid in Q[t]: u * self + v * minpoly = 1
                let a = UniPoly::new(self.coords.clone());
                let m = f.minpoly().clone();
                let (g, u, _) = ext_gcd_rat(&a, &m);
                assert!(g.degree() == Some(0), "element not invertible: minpoly not irreducible?");
                let ginv = g.coeff(0).recip();
                let u = u.scale(&ginv);
                let red = u.rem(&m);
                NfElem::new_in(f, red.coeffs().to_vec())
            }
        }
    }

    pub fn div(&self, other: &NfElem) -> NfElem {
        self.mul(&other.inv())
    }

    pub fn pow_i64(&self, e: i64) -> NfElem {
        if e == 0 {
            return match &self.field {
                None => NfElem::from_i64(1),
                Some(f) => NfElem::rational_in(f, rat_int(1)),
            };
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = match &self.field {
            None => NfElem::from_i64(1),
            Some(f) => NfElem::rational_in(f, rat_int(1)),
        };
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Certified enclosure at roughly `prec` relative bits.
    pub fn ball(&self, prec: u32) -> Ball {
        match &self.field {
            None => Ball::from_rational(&self.coords[0], prec),
            Some(f) => {
                let mut theta_bits = prec + 16;
                loop {
                    let tb = f.theta_ball(theta_bits);
                    let mut acc = Ball::zero();
                    for c in self.coords.iter().rev() {
                        acc = acc.mul(&tb, theta_bits + 16);
                        acc = acc.add(&Ball::from_rational(c, theta_bits + 16), theta_bits + 16);
                    }
                    // accept once the radius is small in absolute or relative terms
                    let rad = acc.radius();
                    let ok = if rad.is_zero() {
                        true
                    } else {
                        match acc.center().ilog2() {
                            None => rad.ilog2().map_or(true, |r| r < -(prec as i64)),
                            Some(c) => rad
                                .ilog2()
                                .map_or(true, |r| r <= c - prec as i64 || r < -(prec as i64)),
                        }
                    };
                    if ok {
                        return acc;
                    }
                    theta_bits *= 2;
                    assert!(theta_bits < (1 << 26), "embedding refinement diverged");
                }
            }
        }
    }

    /// Exact sign (refines embedding until decided; exact zero test first).
    pub fn sign(&self) -> i32 {
        if self.is_zero_elem() {
            return 0;
        }
        match &self.field {
            None => {
                if self.coords[0].is_positive() {
                    1
                } else {
                    -1
                }
            }
            Some(_) => {
                let mut prec = 32;
                loop {
                    let b = self.ball(prec);
                    if b.is_positive() {
                        return 1;
                    }
                    if b.is_negative() {
                        return -1;
                    }
                    prec *= 2;
                    assert!(prec < (1 << 26), "sign refinement diverged for nonzero element");
                }
            }
        }
    }

    pub fn abs(&self) -> NfElem {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl Coeff for NfElem {
    fn zero() -> Self {
        NfElem::from_i64(0)
    }
    fn one() -> Self {
        NfElem::from_i64(1)
    }
    fn is_zero(&self) -> bool {
        self.is_zero_elem()
    }
    fn add(&self, other: &Self) -> Self {
        NfElem::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        NfElem::sub(self, other)
    }
    fn neg(&self) -> Self {
        NfElem::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        NfElem::mul(self, other)
    }
    fn inv(&self) -> Self {
        NfElem::inv(self)
    }
    fn from_rat(q: &Rat) -> Self {
        NfElem::from_rational(q.clone())
    }
}

impl RealCoeff for NfElem {
    fn sign(&self) -> i32 {
        NfElem::sign(self)
    }
    fn to_ball(&self, prec: u32) -> Ball {
        self.ball(prec)
    }
}

/// Extended gcd over Q[t]: returns (g, u, v) with u*a + v*b = g.
fn ext_gcd_rat(
    a: &UniPoly<Rat>,
    b: &UniPoly<Rat>,
) -> (UniPoly<Rat>, UniPoly<Rat>, UniPoly<Rat>) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = UniPoly::<Rat>::one();
    let mut s1 = UniPoly::<Rat>::zero();
    let mut t0 = UniPoly::<Rat>::zero();
    let mut t1 = UniPoly::<Rat>::one();
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    (r0, s0, t0)
}

/// Resultant in z of A(z) and a parametric polynomial P_x(z), where the
/// parameter enters polynomially with total x-degree <= deg_bound / deg(A).
/// Computed by evaluation at rational points and interpolation; degree drops
/// at specializations are compensated by powers of lc(A) (A monic here).
fn eliminate(
    a: &UniPoly<Rat>,
    nominal_deg_z: usize,
    p_at: impl Fn(&Rat) -> UniPoly<Rat>,
    deg_bound: usize,
) -> UniPoly<Rat> {
    let mut points = Vec::with_capacity(deg_bound + 1);
    let mut k: i64 = 0;
    while points.len() < deg_bound + 1 {
        let x = rat_int(k);
        let pz = p_at(&x);
        // res with nominal degree: A monic, lc(A) = 1, so drops need no factor
        let r = a.resultant(&pz);
        let _ = nominal_deg_z;
        points.push((x, r));
        k = if k > 0 { -k } else { -k + 1 };
    }
    interpolate(&points)
}

/// Map from a source field into a target field by the image of the generator.
#[derive(Clone, Debug)]
pub struct FieldEmbed {
    source: Option<FieldRef>,
    target: Option<FieldRef>,
    theta_image: Option<NfElem>,
}

impl FieldEmbed {
    pub fn identity(field: Option<FieldRef>) -> FieldEmbed {
        let theta_image = field.as_ref().map(|f| f.theta());
        FieldEmbed { source: field.clone(), target: field, theta_image }
    }

    pub fn target(&self) -> Option<&FieldRef> {
        self.target.as_ref()
    }

    pub fn apply(&self, x: &NfElem) -> NfElem {
        match (&x.field, &self.target) {
            (None, None) => x.clone(),
            (None, Some(t)) => NfElem::rational_in(t, x.coords[0].clone()),
            (Some(xf), _) => {
                let sf = self
                    .source
                    .as_ref()
                    .expect("embedding source is rational but element has a field");
                assert!(
                    NumberField::same_field(xf, sf),
                    "element does not belong to the embedding's source field"
                );
                let img = self.theta_image.as_ref().unwrap();
                let mut acc = match &self.target {
                    None => NfElem::from_i64(0),
                    Some(t) => NfElem::rational_in(t, rat_int(0)),
                };
                for c in x.coords.iter().rev() {
                    acc = acc.mul(img).add(&match &self.target {
                        None => NfElem::from_rational(c.clone()),
                        Some(t) => NfElem::rational_in(t, c.clone()),
                    });
                }
                acc
            }
        }
    }
}

/// Join two real algebraic number fields inside R via a primitive element.
/// Returns the joined field and embeddings for both sources.
pub fn join_fields(
    ka: &Option<FieldRef>,
    kb: &Option<FieldRef>,
) -> Result<(Option<FieldRef>, FieldEmbed, FieldEmbed)> {
    match (ka, kb) {
        (None, _) => Ok((
            kb.clone(),
            FieldEmbed { source: None, target: kb.clone(), theta_image: None },
            FieldEmbed::identity(kb.clone()),
        )),
        (_, None) => Ok((
            ka.clone(),
            FieldEmbed::identity(ka.clone()),
            FieldEmbed { source: None, target: ka.clone(), theta_image: None },
        )),
        (Some(fa), Some(fb)) => {
            if NumberField::same_field(fa, fb) {
                let mut id_b = FieldEmbed::identity(Some(fa.clone()));
                id_b.source = Some(fb.clone());
                return Ok((
                    Some(fa.clone()),
                    FieldEmbed::identity(Some(fa.clone())),
                    id_b,
                ));
            }
            join_distinct(fa, fb)
        }
    }
}

fn join_distinct(fa: &FieldRef, fb: &FieldRef) -> Result<(Option<FieldRef>, FieldEmbed, FieldEmbed)> {
    let a_poly = fa.minpoly().clone();
    let b_poly = fb.minpoly().clone();
    let db = b_poly.deg0();
    for tb in 1..=32i64 {
        for t in [tb, -tb] {
            // gamma = theta_a + t * theta_b; M(x) = Res_z(A(z), t^db * B((x - z)/t))
            let tq = rat_int(t);
            let p_at = |x: &Rat| -> UniPoly<Rat> {
                // B((x - z)/t) * t^db as polynomial in z
                let lin = UniPoly::new(vec![x / &tq, -tq.recip()]);
                b_poly.compose(&lin).scale(&rat_pow(&tq, db as i64))
            };
            let deg_bound = a_poly.deg0() * db;
            let m = eliminate(&a_poly, a_poly.deg0().saturating_sub(1), p_at, deg_bound);
            if m.is_zero() {
                continue;
            }
            let m = m.squarefree_part();
            let (_, factors) = factor_over_q(&m);
            let cands: Vec<UniPoly<Rat>> = factors.into_iter().map(|(f, _)| f).collect();
            // identify the factor vanishing at gamma by refinement
            let winner = match identify_vanishing_factor(&cands, |prec| {
                let ab = fa.theta_ball(prec);
                let bb = fb.theta_ball(prec);
                ab.add(&bb.mul_rat(&tq, prec), prec)
            }) {
                Some(w) => w,
                None => continue,
            };
            let p_star = cands[winner].clone();
            if p_star.deg0() < 2 {
                // gamma rational: only possible when both fields are degree one
                continue;
            }
            // isolating interval for gamma as a root of p_star
            let gamma_iv = match isolate_for_factor(&p_star, |prec| {
                let ab = fa.theta_ball(prec);
                let bb = fb.theta_ball(prec);
                ab.add(&bb.mul_rat(&tq, prec), prec)
            }) {
                Some(iv) => iv,
                None => continue,
            };
            let kj = NumberField::new(p_star, gamma_iv)?;
            let gamma = kj.theta();
            // express theta_b: gcd(B(T), A(gamma - t T)) over the joined field
            let b_lift = b_poly.map(|c| NfElem::rational_in(&kj, c.clone()));
            let comp = {
                // A(gamma - t*T) as UniPoly<NfElem>
                let lin = UniPoly::new(vec![gamma.clone(), NfElem::rational_in(&kj, -tq.clone())]);
                a_poly
                    .map(|c| NfElem::rational_in(&kj, c.clone()))
                    .compose(&lin)
            };
            let g = b_lift.gcd(&comp);
            if g.degree() != Some(1) {
                continue; // non-separating t
            }
            let theta_b_img = g.coeff(0).neg().div(&g.coeff(1));
            let theta_a_img = gamma.sub(&theta_b_img.mul(&NfElem::rational_in(&kj, tq.clone())));
            // exactness checks
            let bv = b_poly.map(|c| NfElem::rational_in(&kj, c.clone())).eval(&theta_b_img);
            let av = a_poly.map(|c| NfElem::rational_in(&kj, c.clone())).eval(&theta_a_img);
            if !bv.is_zero_elem() || !av.is_zero_elem() {
                continue;
            }
            let embed_a = FieldEmbed {
                source: Some(fa.clone()),
                target: Some(kj.clone()),
                theta_image: Some(theta_a_img),
            };
            let embed_b = FieldEmbed {
                source: Some(fb.clone()),
                target: Some(kj.clone()),
                theta_image: Some(theta_b_img),
            };
            return Ok((Some(kj), embed_a, embed_b));
        }
    }
    Err(Error::EmbeddingAmbiguity)
}

/// Among candidate irreducible factors, find the unique one vanishing at the
/// point enclosed by `enclose(prec)`; None if refinement stalls.
fn identify_vanishing_factor(
    cands: &[UniPoly<Rat>],
    enclose: impl Fn(u32) -> Ball,
) -> Option<usize> {
    let mut alive: Vec<usize> = (0..cands.len()).collect();
    let mut prec = 64u32;
    while alive.len() > 1 {
        let b = enclose(prec);
        alive.retain(|&i| ball_eval_rat_poly(&cands[i], &b, prec).contains_zero());
        prec *= 2;
        if prec > (1 << 22) {
            return None;
        }
    }
    alive.first().copied()
}

/// Horner evaluation of a rational polynomial on a ball.
pub fn ball_eval_rat_poly(p: &UniPoly<Rat>, x: &Ball, prec: u32) -> Ball {
    let mut acc = Ball::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x, prec).add(&Ball::from_rational(c, prec), prec);
    }
    acc
}

/// Shrink the enclosure until it isolates exactly one root of `p`.
fn isolate_for_factor(p: &UniPoly<Rat>, enclose: impl Fn(u32) -> Ball) -> Option<Interval> {
    let chain = SturmChain::new(p);
    let mut prec = 64u32;
    loop {
        let b = enclose(prec);
        let lo = b.lower().to_rational();
        let hi = b.upper().to_rational();
        if lo < hi && chain.count_roots(&lo, &hi) == 1 {
            // widen slightly to an open interval avoiding endpoint roots
            if !num_traits::Zero::is_zero(&p.eval(&lo)) && !num_traits::Zero::is_zero(&p.eval(&hi)) {
                return Some(Interval::new(lo, hi));
            }
        }
        if lo == hi {
            // exact point: the value is rational; not a proper field generator
            return None;
        }
        prec *= 2;
        if prec > (1 << 22) {
            return None;
        }
    }
}

/// Spec operation: join the fields of two elements and return the common
/// field together with the images of both elements.
pub fn field_join(a: &NfElem, b: &NfElem) -> Result<(Option<FieldRef>, NfElem, NfElem)> {
    let (k, ea, eb) = join_fields(&a.field, &b.field)?;
    Ok((k, ea.apply(a), eb.apply(b)))
}

/// Adjoin the real root of a rational polynomial isolated by `iv`.
/// Returns a rational element when the root is rational.
pub fn adjoin_real_root(p: &UniPoly<Rat>, iv: &Interval) -> Result<NfElem> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf);
    if chain.count_roots(&iv.lo, &iv.hi) != 1 {
        return Err(Error::Input("interval does not isolate one root".into()));
    }
    let (_, factors) = factor_over_q(&sf);
    let cands: Vec<UniPoly<Rat>> = factors.into_iter().map(|(f, _)| f).collect();
    // the factor with a root in iv (refine until unique)
    let mut iv = iv.clone();
    loop {
        let holders: Vec<usize> = cands
            .iter()
            .enumerate()
            .filter(|(_, f)| SturmChain::new(f).count_roots(&iv.lo, &iv.hi) >= 1)
            .map(|(i, _)| i)
            .collect();
        if holders.len() == 1 {
            let f = &cands[holders[0]];
            if f.degree() == Some(1) {
                return Ok(NfElem::from_rational(-f.coeff(0)));
            }
            // shrink to an isolating interval for this factor
            let fchain = SturmChain::new(f);
            let mut fiv = iv.clone();
            while fchain.count_roots(&fiv.lo, &fiv.hi) != 1
                || num_traits::Zero::is_zero(&f.eval(&fiv.lo))
                || num_traits::Zero::is_zero(&f.eval(&fiv.hi))
            {
                fiv = halve_toward_root(&sf, &fiv);
            }
            let field = NumberField::new(f.clone(), fiv)?;
            return Ok(field.theta());
        }
        iv = halve_toward_root(&sf, &iv);
    }
}

/// One bisection step keeping the (unique) root of `sf` in the interval.
fn halve_toward_root(sf: &UniPoly<Rat>, iv: &Interval) -> Interval {
    let m = iv.mid();
    let sm = sf.eval(&m);
    if num_traits::Zero::is_zero(&sm) {
        // rational root at midpoint: shrink symmetrically around it
        let w = iv.width() / rat_int(4);
        return Interval::new(&m - &w, &m + &w);
    }
    let s_lo = sf.eval(&iv.lo).sign_rat();
    if s_lo != 0 && s_lo != sm.sign_rat() {
        Interval::new(iv.lo.clone(), m)
    } else {
        Interval::new(m, iv.hi.clone())
    }
}

trait SignRat {
    fn sign_rat(&self) -> i32;
}

impl SignRat for Rat {
    fn sign_rat(&self) -> i32 {
        if num_traits::Zero::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Minimal polynomial over Q of a root of a polynomial with number-field
/// coefficients, located by the caller's enclosure.
pub fn minpoly_of_k_root(
    phi: &UniPoly<NfElem>,
    field: &FieldRef,
    enclose: impl Fn(u32) -> Ball,
) -> Result<UniPoly<Rat>> {
    let a_poly = field.minpoly().clone();
    // Phi(z, T) where coefficients of phi are polynomials in z
    let coord_polys: Vec<UniPoly<Rat>> = phi
        .coeffs()
        .iter()
        .map(|c| UniPoly::new(c.coords().to_vec()))
        .collect();
    let deg_t = phi.deg0();
    let p_at = |tau: &Rat| -> UniPoly<Rat> {
        // sum_j coord_j(z) * tau^j as polynomial in z
        let mut acc = UniPoly::<Rat>::zero();
        let mut tp = rat_int(1);
        for cp in &coord_polys {
            acc = acc.add(&cp.scale(&tp));
            tp *= tau;
        }
        acc
    };
    let deg_bound = a_poly.deg0() * deg_t;
    let m = eliminate(&a_poly, a_poly.deg0().saturating_sub(1), p_at, deg_bound);
    if m.is_zero() {
        return Err(Error::Internal("vanishing elimination resultant".into()));
    }
    let m = m.squarefree_part();
    let (_, factors) = factor_over_q(&m);
    let cands: Vec<UniPoly<Rat>> = factors.into_iter().map(|(f, _)| f).collect();
    let idx = identify_vanishing_factor(&cands, enclose).ok_or(Error::EmbeddingAmbiguity)?;
    Ok(cands[idx].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn sqrt2_field() -> FieldRef {
        NumberField::new(
            UniPoly::from_i64(&[-2, 0, 1]),
            Interval::new(rat(1, 1), rat(2, 1)),
        )
        .unwrap()
    }

    fn sqrt3_field() -> FieldRef {
        NumberField::new(
            UniPoly::from_i64(&[-3, 0, 1]),
            Interval::new(rat(1, 1), rat(2, 1)),
        )
        .unwrap()
    }

    #[test]
    fn basic_arithmetic_in_sqrt2() {
        let f = sqrt2_field();
        let s = f.theta();
        let two = s.mul(&s);
        assert_eq!(two.to_rational(), Some(rat(2, 1)));
        let inv = s.inv();
        // 1/sqrt2 = sqrt2/2
        assert_eq!(inv, s.scale(&rat(1, 2)));
        assert_eq!(s.mul(&inv).to_rational(), Some(rat(1, 1)));
        assert_eq!(s.sign(), 1);
        assert_eq!(s.neg().sign(), -1);
        let b = s.ball(80);
        assert!(b.contains_rational(&rat(1414213562373095048, 1000000000000000000)) || b.contains_rational(&rat(1414213562373095049, 1000000000000000000)));
    }

    #[test]
    fn negative_embedding_selected_by_interval() {
        let f = NumberField::new(
            UniPoly::from_i64(&[-2, 0, 1]),
            Interval::new(rat(-2, 1), rat(-1, 1)),
        )
        .unwrap();
        assert_eq!(f.theta().sign(), -1);
    }

    #[test]
    fn join_sqrt2_sqrt3_gives_degree_four() {
        let a = sqrt2_field().theta();
        let b = sqrt3_field().theta();
        let (k, ai, bi) = field_join(&a, &b).unwrap();
        let k = k.unwrap();
        assert_eq!(k.degree(), 4);
        assert_eq!(k.minpoly(), &UniPoly::from_i64(&[1, 0, -10, 0, 1]).monic());
        assert_eq!(ai.mul(&ai).to_rational(), Some(rat(2, 1)));
        assert_eq!(bi.mul(&bi).to_rational(), Some(rat(3, 1)));
        assert_eq!(ai.sign(), 1);
        assert_eq!(bi.sign(), 1);
        // sqrt6 = sqrt2 * sqrt3
        let s6 = ai.mul(&bi);
        let sq = s6.mul(&s6);
        assert_eq!(sq.to_rational(), Some(rat(6, 1)));
        assert_eq!(s6.sign(), 1);
    }

    #[test]
    fn join_same_field_is_identity() {
        let a = sqrt2_field().theta();
        let b = sqrt2_field().theta();
        let (k, ai, bi) = field_join(&a, &b).unwrap();
        assert_eq!(k.unwrap().degree(), 2);
        assert_eq!(ai, bi);
    }

    #[test]
    fn join_rational_absorbed() {
        let a = NfElem::from_rational(rat(5, 3));
        let b = sqrt2_field().theta();
        let (k, ai, bi) = field_join(&a, &b).unwrap();
        assert_eq!(k.unwrap().degree(), 2);
        assert_eq!(ai.to_rational(), Some(rat(5, 3)));
        assert_eq!(bi.mul(&bi).to_rational(), Some(rat(2, 1)));
    }

    #[test]
    fn adjoin_root_rational_shortcut() {
        let p = UniPoly::from_i64(&[-6, 0, 0, 0, 0, 2]); // 2y^5 = 6 -> irrational
        let iv = isolate_real_roots(&p).unwrap()[0].clone();
        let r = adjoin_real_root(&p, &iv).unwrap();
        assert!(!r.is_rational());
        let five = r.pow_i64(5);
        assert_eq!(five.to_rational(), Some(rat(3, 1)));

        let q = UniPoly::from_i64(&[-9, 0, 1]); // (y-3)(y+3)
        let iv = Interval::new(rat(2, 1), rat(4, 1));
        let r = adjoin_real_root(&q, &iv).unwrap();
        assert_eq!(r.to_rational(), Some(rat(3, 1)));
    }

    #[test]
    fn sturm_isolation_over_number_field() {
        // roots of T^2 - sqrt2 over Q(sqrt2): +- 2^(1/4)
        let f = sqrt2_field();
        let s = f.theta();
        let p = UniPoly::new(vec![s.neg(), NfElem::zero(), NfElem::one()]);
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 2);
        // 2^(1/4) = 1.18920711...
        assert!(ivs[1].contains(&rat(118920711, 100000000)) || ivs[1].lo < rat(11893, 10000));
    }

    #[test]
    fn minpoly_of_root_over_extension() {
        // T^2 - sqrt2 has minimal polynomial T^4 - 2 over Q
        let f = sqrt2_field();
        let s = f.theta();
        let p = UniPoly::new(vec![s.neg(), NfElem::zero(), NfElem::one()]);
        let ivs = isolate_real_roots(&p).unwrap();
        let iv = ivs[1].clone();
        let sf = p.clone();
        let m = minpoly_of_k_root(&p, &f, move |prec| {
            // bisect the Sturm interval to requested precision
            let mut lo = iv.lo.clone();
            let mut hi = iv.hi.clone();
            for _ in 0..prec.min(256) {
                let mid = (&lo + &hi) / rat(2, 1);
                let s_lo = sf.eval(&NfElem::from_rational(lo.clone())).sign();
                let s_m = sf.eval(&NfElem::from_rational(mid.clone())).sign();
                if s_m == 0 {
                    lo = &mid - (&hi - &mid) / rat(1000, 1);
                    hi = &mid + (&hi - &mid) / rat(1000, 1);
                    break;
                }
                if s_lo == s_m {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let lo_d = Dyadic::from_rational(&lo, 256, Round::Down);
            let hi_d = Dyadic::from_rational(&hi, 256, Round::Up);
            Ball::from_endpoints(&lo_d, &hi_d)
        })
        .unwrap();
        assert_eq!(m, UniPoly::from_i64(&[-2, 0, 0, 0, 1]).monic());
    }
}
