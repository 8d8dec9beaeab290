//! Exact univariate polynomials over arbitrary-precision rationals.
//!
//! The indeterminate is always the dilation variable `n`. Coefficients are
//! stored in ascending degree with no trailing zeros; the zero polynomial has
//! an empty coefficient list. All arithmetic is exact; no floating point
//! enters this module.

mod ehrhart;

pub use ehrhart::{
    discriminant_quadratic, ehrhart_from_delta, factor_check, g_polynomial,
    generating_function_check, k2_complex_real_part, IdentityMismatch,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial with exact rational coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    /// The zero polynomial (degree `None`).
    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// The monomial `n^k` scaled by `c`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        RationalPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending-degree coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_int(&self, x: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(BigInt::from(x)))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by the monic linear factor `n + a`.
    pub fn mul_linear(&self, a: &BigRational) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + 1] += c;
            coeffs[k] += c * a;
        }
        Self::from_coeffs(coeffs)
    }

    /// Taylor shift: the polynomial `q` with `q(n) = p(n + s)`, exactly.
    ///
    /// Synthetic-division (Horner) scheme, `O(deg²)` exact rational ops.
    pub fn shift(&self, s: &BigRational) -> Self {
        if self.is_zero() || s.is_zero() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        let deg = c.len() - 1;
        for j in (0..deg).rev() {
            for i in j..deg {
                let add = s * &c[i + 1];
                c[i] += add;
            }
        }
        Self::from_coeffs(c)
    }

    /// Variable negation: the polynomial `q` with `q(n) = p(-n)`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `q` with `q(n) = p(-n - s)`.
    pub fn compose_neg_shift(&self, s: &BigRational) -> Self {
        self.negate_variable().shift(s)
    }

    /// Clears denominators: returns `(c, q)` with integer content `q` and
    /// positive integer `c` such that `self = q / c` coefficientwise.
    pub fn to_integer_scaled(&self) -> (BigInt, Vec<BigInt>) {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (lcm, ints)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}·")?;
                    }
                    if k == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Canonical `"numerator/denominator"` rendering used in the JSON format.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"` into a reduced rational.
pub fn rational_from_string(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|e| format!("bad numerator: {e}"))?;
    let den: BigInt = den.parse().map_err(|e| format!("bad denominator: {e}"))?;
    if den.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(BigRational::new(num, den))
}

/// Parses a decimal literal such as `0.1` or `-14.375` into an exact rational.
pub fn rational_from_decimal(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.contains('/') {
        return rational_from_string(s);
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("empty numeric literal {s:?}"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(format!("invalid numeric literal {s:?}"));
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|e| format!("{e}"))?
    };
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(BigInt::from(sign) * num, den))
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            coeffs: Vec<&'a str>,
        }
        let strings: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        let repr = Repr {
            coeffs: strings.iter().map(|s| s.as_str()).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| rational_from_string(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = RationalPolynomial::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(RationalPolynomial::from_coeffs(vec![rat(0, 1)]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn shift_matches_direct_expansion() {
        // (n + s)^2 = n^2 + 2sn + s^2 for p = n^2, s = 3/2.
        let p = RationalPolynomial::from_integers(&[0, 0, 1]);
        let s = rat(3, 2);
        let q = p.shift(&s);
        assert_eq!(q.coeff(0), rat(9, 4));
        assert_eq!(q.coeff(1), rat(3, 1));
        assert_eq!(q.coeff(2), rat(1, 1));
    }

    #[test]
    fn shift_evaluates_consistently() {
        let p = RationalPolynomial::from_integers(&[3, -2, 0, 7, 1]);
        let s = rat(-5, 3);
        let q = p.shift(&s);
        for x in -4..=4 {
            let x = rat(x, 1);
            assert_eq!(q.evaluate(&x), p.evaluate(&(&x + &s)));
        }
    }

    #[test]
    fn negate_variable_evaluates_consistently() {
        let p = RationalPolynomial::from_integers(&[1, 4, -2, 9]);
        let q = p.negate_variable();
        for x in -4..=4 {
            assert_eq!(q.evaluate_int(x), p.evaluate_int(-x));
        }
    }

    #[test]
    fn mul_linear_agrees_with_mul() {
        let p = RationalPolynomial::from_integers(&[2, 0, 5]);
        let a = rat(7, 2);
        let lin = RationalPolynomial::from_coeffs(vec![a.clone(), rat(1, 1)]);
        assert_eq!(p.mul_linear(&a), &p * &lin);
    }

    #[test]
    fn integer_scaling_clears_denominators() {
        let p = RationalPolynomial::from_coeffs(vec![rat(1, 2), rat(-2, 3), rat(1, 1)]);
        let (den, ints) = p.to_integer_scaled();
        assert_eq!(den, BigInt::from(6));
        assert_eq!(
            ints,
            vec![BigInt::from(3), BigInt::from(-4), BigInt::from(6)]
        );
    }

    #[test]
    fn rational_string_round_trip() {
        let r = rat(-22, 8);
        let s = rational_to_string(&r);
        assert_eq!(s, "-11/4");
        assert_eq!(rational_from_string(&s).unwrap(), r);
        assert_eq!(rational_from_string("5").unwrap(), rat(5, 1));
    }

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(rational_from_decimal("0.1").unwrap(), rat(1, 10));
        assert_eq!(rational_from_decimal("-14.375").unwrap(), rat(-115, 8));
        assert_eq!(rational_from_decimal("3").unwrap(), rat(3, 1));
        assert_eq!(rational_from_decimal("1/3").unwrap(), rat(1, 3));
        assert!(rational_from_decimal("1.2.3").is_err());
        assert!(rational_from_decimal("").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = RationalPolynomial::from_coeffs(vec![rat(15, 1), rat(-7, 3), rat(10, 1)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"coeffs":["15/1","-7/3","10/1"]}"#);
        let q: RationalPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn display_is_readable() {
        let p = RationalPolynomial::from_integers(&[6, -4, 1]);
        assert_eq!(p.to_string(), "n^2 - 4·n + 6");
    }
}
