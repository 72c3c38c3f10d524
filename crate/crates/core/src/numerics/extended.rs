//! Double-word ("double-double") arithmetic.
//!
//! An [`ExtendedValue`] represents `hi + lo` with `|lo| <= ulp(hi)/2`, giving
//! roughly 32 significant decimal digits. Products use an FMA-based
//! error-free transformation when the target has hardware FMA and Dekker
//! splitting otherwise; both satisfy `p + e == a * b` exactly.
//!
//! | op               | relative error (approx.) |
//! |------------------|--------------------------|
//! | `+ - *`          | 4 · 2^-106               |
//! | `/`, `sqrt`      | 8 · 2^-106               |
//! | `exp`, `ln`      | 2^-100                   |
//! | `sin_cos`, `atan2` | 2^-100 for \|x\| < 1e6 |

use core::cmp::Ordering;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `s + e == a + b` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// `s + e == a + b` exactly, provided `|a| >= |b|` or `a == 0`.
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// FMA-based `p + e == a * b`.
#[inline]
pub fn two_prod_fma(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Dekker `p + e == a * b`; exact while `|a|, |b| < 2^996`.
#[inline]
pub fn two_prod_dekker(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

/// Error-free product, FMA when the target provides it.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    #[cfg(target_feature = "fma")]
    {
        two_prod_fma(a, b)
    }
    #[cfg(not(target_feature = "fma"))]
    {
        two_prod_dekker(a, b)
    }
}

/// Unevaluated sum `hi + lo`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ExtendedValue {
    pub hi: f64,
    pub lo: f64,
}

impl ExtendedValue {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };
    pub const PI: Self = Self { hi: core::f64::consts::PI, lo: 1.224_646_799_147_353_2e-16 };
    pub const FRAC_PI_2: Self = Self { hi: core::f64::consts::FRAC_PI_2, lo: 6.123_233_995_736_766e-17 };
    pub const TAU: Self = Self { hi: core::f64::consts::TAU, lo: 2.449_293_598_294_706_4e-16 };
    pub const LN_2: Self = Self { hi: core::f64::consts::LN_2, lo: 2.319_046_813_846_299_6e-17 };

    #[inline]
    pub const fn new(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Normalises an arbitrary pair so that `|lo| <= ulp(hi)/2`.
    #[inline]
    pub fn from_parts(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    /// Exact sum of two binary64 values.
    #[inline]
    pub fn sum_of(a: f64, b: f64) -> Self {
        Self::from_parts(a, b)
    }

    /// Exact product of two binary64 values.
    #[inline]
    pub fn product_of(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Self { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Self { hi, lo }
    }

    /// Multiplication by `2^k`, exact barring over/underflow.
    #[inline]
    pub fn ldexp(self, k: i32) -> Self {
        Self { hi: libm::ldexp(self.hi, k), lo: libm::ldexp(self.lo, k) }
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    #[inline]
    pub fn sqr(self) -> Self {
        let (p, e) = two_prod(self.hi, self.hi);
        let (hi, lo) = quick_two_sum(p, e + 2.0 * self.hi * self.lo);
        Self { hi, lo }
    }

    pub fn powi(self, mut n: i32) -> Self {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut base = self;
        let mut acc = Self::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            n >>= 1;
        }
        acc
    }

    pub fn sqrt(self) -> Result<Self> {
        if self.hi < 0.0 {
            return Err(Error::Domain("square root of a negative double-word value".into()));
        }
        if self.hi == 0.0 {
            return Ok(Self::ZERO);
        }
        let s = libm::sqrt(self.hi);
        let r = self - Self::product_of(s, s);
        Ok(Self::new(s).add_f64(r.hi / (2.0 * s)))
    }

    /// `e^x`; overflow beyond `x > 709.7`.
    pub fn exp(self) -> Result<Self> {
        if self.hi > 709.7 {
            return Err(Error::Overflow);
        }
        if self.hi < -745.0 {
            return Ok(Self::ZERO);
        }
        let k = libm::round(self.hi / Self::LN_2.hi);
        let r = (self - Self::LN_2.mul_f64(k)).ldexp(-10);
        // e^r - 1 by Taylor, |r| < 3.4e-4
        let mut term = r;
        let mut s = r;
        let mut n = 2.0;
        while term.hi.abs() > 1e-36 * s.hi.abs().max(1e-300) {
            term = term * r / Self::new(n);
            s += term;
            n += 1.0;
        }
        // e^{2r} - 1 = (e^r - 1)(e^r + 1)
        for _ in 0..10 {
            s = s * s.add_f64(2.0);
        }
        Ok(s.add_f64(1.0).ldexp(k as i32))
    }

    /// Natural logarithm by Newton refinement of the binary64 guess.
    pub fn ln(self) -> Result<Self> {
        if !(self.hi > 0.0) {
            return Err(Error::Domain("logarithm of a non-positive double-word value".into()));
        }
        let mut y = Self::new(libm::log(self.hi));
        for _ in 0..2 {
            y = y + self * (-y).exp()? - Self::ONE;
        }
        Ok(y)
    }

    /// `(sin x, cos x)`, reduced modulo π/2 with a double-word constant.
    pub fn sin_cos(self) -> (Self, Self) {
        let q = libm::round(self.hi / Self::FRAC_PI_2.hi);
        let r = self - Self::FRAC_PI_2.mul_f64(q);
        let r2 = r.sqr();
        let mut sin = r;
        let mut cos = Self::ONE;
        let mut ts = r;
        let mut tc = Self::ONE;
        let mut k = 1.0;
        loop {
            ts = -(ts * r2) / Self::new((2.0 * k) * (2.0 * k + 1.0));
            tc = -(tc * r2) / Self::new((2.0 * k - 1.0) * (2.0 * k));
            sin += ts;
            cos += tc;
            if tc.hi.abs() < 1e-36 && ts.hi.abs() < 1e-36 {
                break;
            }
            k += 1.0;
        }
        match (q as i64).rem_euclid(4) {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }

    /// Principal `atan2(y, x)` by one Newton step on the binary64 angle.
    pub fn atan2(y: Self, x: Self) -> Self {
        let theta = Self::new(libm::atan2(y.to_f64(), x.to_f64()));
        let (s, c) = theta.sin_cos();
        // d/dθ of (y cos θ - x sin θ) is -(x cos θ + y sin θ)
        let num = y * c - x * s;
        let den = x * c + y * s;
        if den.hi == 0.0 {
            return theta;
        }
        theta + num / den
    }

    pub fn sinh_cosh(self) -> Result<(Self, Self)> {
        let e = self.exp()?;
        let ei = e.recip();
        Ok(((e - ei).ldexp(-1), (e + ei).ldexp(-1)))
    }
}

impl From<f64> for ExtendedValue {
    fn from(x: f64) -> Self {
        Self::new(x)
    }
}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

impl Neg for ExtendedValue {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for ExtendedValue {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Sub for ExtendedValue {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for ExtendedValue {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        Self { hi, lo }
    }
}

impl Div for ExtendedValue {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }.add_f64(q3)
    }
}

impl AddAssign for ExtendedValue {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for ExtendedValue {
    #[inline]
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for ExtendedValue {
    #[inline]
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

/// Complex number with double-word parts.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ExtendedComplex {
    pub re: ExtendedValue,
    pub im: ExtendedValue,
}

impl ExtendedComplex {
    pub const ZERO: Self = Self { re: ExtendedValue::ZERO, im: ExtendedValue::ZERO };
    pub const ONE: Self = Self { re: ExtendedValue::ONE, im: ExtendedValue::ZERO };

    #[inline]
    pub const fn new(re: ExtendedValue, im: ExtendedValue) -> Self {
        Self { re, im }
    }

    #[inline]
    pub fn real(re: ExtendedValue) -> Self {
        Self { re, im: ExtendedValue::ZERO }
    }

    #[inline]
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    #[inline]
    pub fn norm_sqr(self) -> ExtendedValue {
        self.re.sqr() + self.im.sqr()
    }

    /// Modulus, as a binary64 estimate.
    #[inline]
    pub fn norm_f64(self) -> f64 {
        libm::hypot(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn scale(self, k: ExtendedValue) -> Self {
        Self { re: self.re * k, im: self.im * k }
    }

    #[inline]
    pub fn scale_f64(self, k: f64) -> Self {
        Self { re: self.re.mul_f64(k), im: self.im.mul_f64(k) }
    }

    pub fn recip(self) -> Self {
        let d = self.norm_sqr();
        Self { re: self.re / d, im: -(self.im / d) }
    }

    pub fn exp(self) -> Result<Self> {
        let m = self.re.exp()?;
        let (s, c) = self.im.sin_cos();
        Ok(Self { re: m * c, im: m * s })
    }

    /// Principal logarithm.
    pub fn ln(self) -> Result<Self> {
        if self.re.hi == 0.0 && self.im.hi == 0.0 {
            return Err(Error::Domain("logarithm of zero".into()));
        }
        // scale to keep |z|^2 representable
        let big = self.re.hi.abs().max(self.im.hi.abs());
        let e = libm::ilogb(big);
        let scaled = Self { re: self.re.ldexp(-e), im: self.im.ldexp(-e) };
        let modulus = scaled.norm_sqr().ln()?.ldexp(-1) + ExtendedValue::LN_2.mul_f64(e as f64);
        Ok(Self { re: modulus, im: ExtendedValue::atan2(self.im, self.re) })
    }

    /// Principal power `self^w`.
    pub fn powc(self, w: Self) -> Result<Self> {
        (self.ln()? * w).exp()
    }

    pub fn cosh(self) -> Result<Self> {
        let e = self.exp()?;
        Ok((e + e.recip()).scale_f64(0.5))
    }

    pub fn sinh(self) -> Result<Self> {
        let e = self.exp()?;
        Ok((e - e.recip()).scale_f64(0.5))
    }
}

impl From<Complex64> for ExtendedComplex {
    fn from(z: Complex64) -> Self {
        Self { re: ExtendedValue::new(z.re), im: ExtendedValue::new(z.im) }
    }
}

impl From<ExtendedValue> for ExtendedComplex {
    fn from(x: ExtendedValue) -> Self {
        Self::real(x)
    }
}

impl Neg for ExtendedComplex {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Add for ExtendedComplex {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        Self { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Sub for ExtendedComplex {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        Self { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Mul for ExtendedComplex {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        Self { re: self.re * b.re - self.im * b.im, im: self.re * b.im + self.im * b.re }
    }
}

impl Div for ExtendedComplex {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let d = b.norm_sqr();
        let n = self * b.conj();
        Self { re: n.re / d, im: n.im / d }
    }
}

impl AddAssign for ExtendedComplex {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for ExtendedComplex {
    #[inline]
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for ExtendedComplex {
    #[inline]
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}
