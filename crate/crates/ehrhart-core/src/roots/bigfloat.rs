//! Arbitrary-precision real and complex helpers over astro-float.
//!
//! A [`FloatCtx`] pins the working precision; every operation rounds to that
//! precision with round-to-even, so a computation is a pure function of its
//! inputs and the precision — runs are bit-reproducible.

use astro_float::{BigFloat, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::cmp::Ordering;

const RM: RoundingMode = RoundingMode::ToEven;

/// Complex number at the context precision.
#[derive(Debug, Clone)]
pub struct Cx {
    pub re: BigFloat,
    pub im: BigFloat,
}

/// Fixed-precision arithmetic context.
#[derive(Debug, Clone, Copy)]
pub struct FloatCtx {
    pub precision_bits: usize,
}

impl FloatCtx {
    pub fn new(precision_bits: usize) -> Self {
        FloatCtx {
            precision_bits: precision_bits.max(64),
        }
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::new(self.precision_bits)
    }

    pub fn from_f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.precision_bits)
    }

    /// Exact big-integer ingestion, rounded once to the context precision.
    pub fn from_bigint(&self, x: &BigInt) -> BigFloat {
        let (sign, mag) = (x.sign(), x.magnitude());
        let digits = mag.to_u64_digits();
        let shift = BigFloat::from_u128(1u128 << 64, 128);
        let mut acc = BigFloat::new(64);
        for word in digits.iter().rev() {
            acc = acc.mul_full_prec(&shift);
            acc = acc.add_full_prec(&BigFloat::from_u64(*word, 64));
        }
        if sign == num_bigint::Sign::Minus {
            acc.inv_sign();
        }
        acc.set_precision(self.precision_bits, RM)
            .expect("precision is positive");
        acc
    }

    pub fn from_ratio(&self, x: &BigRational) -> BigFloat {
        let wide = FloatCtx::new(self.precision_bits + 64);
        let num = wide.from_bigint(x.numer());
        let den = wide.from_bigint(x.denom());
        num.div(&den, self.precision_bits, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.precision_bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.precision_bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.precision_bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.precision_bits, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.precision_bits, RM)
    }

    /// `a · 2^k`, exact.
    pub fn ldexp(&self, a: &BigFloat, k: i32) -> BigFloat {
        if a.is_zero() {
            return a.clone();
        }
        let mut out = a.clone();
        let e = out.exponent().expect("finite value");
        out.set_exponent(e + k);
        out
    }

    pub fn cmp(&self, a: &BigFloat, b: &BigFloat) -> Ordering {
        a.partial_cmp(b).expect("no NaNs in root arithmetic")
    }

    // Complex helpers.

    pub fn c_zero(&self) -> Cx {
        Cx {
            re: self.zero(),
            im: self.zero(),
        }
    }

    pub fn c_from_f64(&self, re: f64, im: f64) -> Cx {
        Cx {
            re: self.from_f64(re),
            im: self.from_f64(im),
        }
    }

    pub fn c_real(&self, re: BigFloat) -> Cx {
        Cx {
            re,
            im: self.zero(),
        }
    }

    pub fn c_conj(&self, a: &Cx) -> Cx {
        Cx {
            re: a.re.clone(),
            im: a.im.neg(),
        }
    }

    pub fn c_neg(&self, a: &Cx) -> Cx {
        Cx {
            re: a.re.neg(),
            im: a.im.neg(),
        }
    }

    pub fn c_add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: self.add(&a.re, &b.re),
            im: self.add(&a.im, &b.im),
        }
    }

    pub fn c_sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: self.sub(&a.re, &b.re),
            im: self.sub(&a.im, &b.im),
        }
    }

    pub fn c_mul(&self, a: &Cx, b: &Cx) -> Cx {
        let re = self.sub(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im));
        let im = self.add(&self.mul(&a.re, &b.im), &self.mul(&a.im, &b.re));
        Cx { re, im }
    }

    pub fn c_div(&self, a: &Cx, b: &Cx) -> Cx {
        let denom = self.c_abs2(b);
        let re = self.div(
            &self.add(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im)),
            &denom,
        );
        let im = self.div(
            &self.sub(&self.mul(&a.im, &b.re), &self.mul(&a.re, &b.im)),
            &denom,
        );
        Cx { re, im }
    }

    pub fn c_abs2(&self, a: &Cx) -> BigFloat {
        self.add(&self.mul(&a.re, &a.re), &self.mul(&a.im, &a.im))
    }

    pub fn c_abs(&self, a: &Cx) -> BigFloat {
        self.sqrt(&self.c_abs2(a))
    }

    pub fn c_is_zero(&self, a: &Cx) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }
}

/// Nearest `f64`, good to the last bit or two — used for reports only.
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    let (words, _n, sign, exponent, _inexact) = x.as_raw_parts().expect("finite nonzero value");
    // value = sign · (words as little-endian integer / 2^(64·len)) · 2^exponent
    let mut frac = 0.0f64;
    let top = words.len().saturating_sub(2);
    for (i, w) in words.iter().enumerate().skip(top) {
        let weight = 64.0 * (words.len() - i) as f64;
        frac += (*w as f64) * (-weight).exp2();
    }
    let mag = frac * (exponent as f64).exp2();
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

/// Exact rational → f64 via a 128-bit float intermediate.
pub fn ratio_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let ctx = FloatCtx::new(128);
        to_f64(&ctx.from_ratio(x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn bigint_ingestion_is_exact() {
        let ctx = FloatCtx::new(256);
        let x: BigInt = "123456789012345678901234567890123456789".parse().unwrap();
        let f = ctx.from_bigint(&x);
        // round-trip through a wide difference: f - x == 0
        let back = ctx.sub(&f, &FloatCtx::new(512).from_bigint(&x));
        assert!(back.is_zero(), "conversion of a 130-bit integer is exact");
        assert_eq!(to_f64(&ctx.from_bigint(&BigInt::from(-42))), -42.0);
    }

    #[test]
    fn f64_round_trip() {
        let ctx = FloatCtx::new(192);
        for v in [0.0, 1.0, -2.5, 14.37537447, 1e-12, -3.052e11, 0.1] {
            assert_eq!(to_f64(&ctx.from_f64(v)), v);
        }
    }

    #[test]
    fn ratio_conversion() {
        let ctx = FloatCtx::new(128);
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        let f = to_f64(&ctx.from_ratio(&r));
        assert!((f - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(ratio_to_f64(&BigRational::one()), 1.0);
    }

    #[test]
    fn complex_division() {
        let ctx = FloatCtx::new(128);
        let a = ctx.c_from_f64(1.0, 2.0);
        let b = ctx.c_from_f64(3.0, -4.0);
        let q = ctx.c_div(&a, &b);
        let back = ctx.c_mul(&q, &b);
        assert!((to_f64(&back.re) - 1.0).abs() < 1e-30);
        assert!((to_f64(&back.im) - 2.0).abs() < 1e-30);
    }

    #[test]
    fn ldexp_scales_exactly() {
        let ctx = FloatCtx::new(128);
        let x = ctx.from_f64(3.0);
        assert_eq!(to_f64(&ctx.ldexp(&x, 5)), 96.0);
        assert_eq!(to_f64(&ctx.ldexp(&x, -2)), 0.75);
    }
}
