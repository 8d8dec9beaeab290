//! Simultaneous Aberth–Ehrlich root finding at configurable precision.
//!
//! The iteration runs on big-float complex numbers from a fixed circular
//! initial configuration (deterministic angles and radii), sweeps roots in
//! index order (Gauss–Seidel style), polishes with Newton steps, and then
//! enforces conjugate symmetry by pairing. Residuals are reported relative
//! to the coefficient scale `Σ |a_k| |z|^k`.

use super::bigfloat::{to_f64, Cx, FloatCtx};
use super::RootError;
use crate::poly::RationalPolynomial;
use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Working-precision and acceptance settings for numeric root finding.
#[derive(Debug, Clone)]
pub struct RootFindSettings {
    /// Mantissa bits carried through the iteration.
    pub precision_bits: usize,
    /// Largest acceptable relative residual `|p(z)| / Σ|a_k||z|^k` per root.
    pub tolerance: f64,
    pub max_iterations: u32,
}

impl Default for RootFindSettings {
    fn default() -> Self {
        RootFindSettings {
            precision_bits: 256,
            tolerance: 1e-12,
            max_iterations: 400,
        }
    }
}

/// All complex roots of a real polynomial, with residual metadata.
///
/// Roots are sorted by (real, imaginary) part; non-real roots occur in
/// exactly conjugate pairs.
#[derive(Debug, Clone)]
pub struct ComplexRootSet {
    pub(crate) roots: Vec<Cx>,
    residuals: Vec<f64>,
    precision_bits: usize,
}

impl ComplexRootSet {
    /// Assembles a root set from `(root, residual)` pairs, sorting into the
    /// canonical `(re, im)` order.
    pub(crate) fn from_parts(mut items: Vec<(Cx, f64)>, precision_bits: usize) -> Self {
        let ctx = FloatCtx::new(precision_bits);
        items.sort_by(|a, b| {
            ctx.cmp(&a.0.re, &b.0.re)
                .then_with(|| ctx.cmp(&a.0.im, &b.0.im))
        });
        let (roots, residuals) = items.into_iter().unzip();
        ComplexRootSet {
            roots,
            residuals,
            precision_bits,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn precision_bits(&self) -> usize {
        self.precision_bits
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// Roots as `(re, im)` doubles, in the canonical order.
    pub fn roots_f64(&self) -> Vec<(f64, f64)> {
        self.roots
            .iter()
            .map(|z| (to_f64(&z.re), to_f64(&z.im)))
            .collect()
    }

    /// Full-precision roots, in the canonical order.
    pub fn roots_big(&self) -> &[Cx] {
        &self.roots
    }

    pub fn max_real_part(&self) -> f64 {
        self.roots
            .iter()
            .map(|z| to_f64(&z.re))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_real_part(&self) -> f64 {
        self.roots
            .iter()
            .map(|z| to_f64(&z.re))
            .fold(f64::INFINITY, f64::min)
    }
}

impl serde::Serialize for ComplexRootSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(serde::Serialize)]
        struct RootRepr {
            re: f64,
            im: f64,
            residual: f64,
        }
        let roots: Vec<RootRepr> = self
            .roots
            .iter()
            .zip(&self.residuals)
            .map(|(z, &residual)| RootRepr {
                re: to_f64(&z.re),
                im: to_f64(&z.im),
                residual,
            })
            .collect();
        let mut s = serializer.serialize_struct("ComplexRootSet", 2)?;
        s.serialize_field("roots", &roots)?;
        s.serialize_field("precision_bits", &self.precision_bits)?;
        s.end()
    }
}

/// Finds all complex roots of `p` (degree ≥ 1) at the requested precision.
///
/// Deterministic for fixed settings: the initial configuration, sweep order,
/// pairing, and final sort are all fixed.
pub fn find_roots(
    p: &RationalPolynomial,
    settings: &RootFindSettings,
) -> Result<ComplexRootSet, RootError> {
    let Some(degree) = p.degree() else {
        return Err(RootError::DegreeTooSmall);
    };
    if degree < 1 {
        return Err(RootError::DegreeTooSmall);
    }
    let ctx = FloatCtx::new(settings.precision_bits);
    let (_den, int_coeffs) = p.to_integer_scaled();

    // Factor out monomial roots exactly.
    let zero_roots = int_coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let work_ints = &int_coeffs[zero_roots..];
    let work_deg = work_ints.len() - 1;

    let coeffs: Vec<Cx> = work_ints
        .iter()
        .map(|c| ctx.c_real(ctx.from_bigint(c)))
        .collect();
    // Exact integer derivative, converted once.
    let deriv: Vec<Cx> = work_ints
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| ctx.c_real(ctx.from_bigint(&(c * BigInt::from(k)))))
        .collect();

    let mut zs = if work_deg > 0 {
        initial_guesses(&ctx, work_ints, work_deg)
    } else {
        Vec::new()
    };

    let mut iterations = 0;
    if work_deg > 0 {
        let stop = ctx.ldexp(
            &ctx.from_f64(1.0),
            -(settings.precision_bits as i32) + 16,
        );
        let stop_sq = ctx.mul(&stop, &stop);
        let one = ctx.c_from_f64(1.0, 0.0);
        loop {
            iterations += 1;
            let mut all_small = true;
            for i in 0..zs.len() {
                let (pv, dv) = (
                    horner(&ctx, &coeffs, &zs[i]),
                    horner(&ctx, &deriv, &zs[i]),
                );
                if ctx.c_is_zero(&pv) {
                    continue;
                }
                let newton = if ctx.c_is_zero(&dv) {
                    // Derivative vanished at the iterate: nudge instead.
                    let mag = ctx.add(&ctx.from_f64(1.0), &ctx.c_abs(&zs[i]));
                    let tiny = ctx.ldexp(&mag, -(settings.precision_bits as i32) / 3);
                    Cx {
                        re: tiny.clone(),
                        im: tiny,
                    }
                } else {
                    ctx.c_div(&pv, &dv)
                };
                let mut sum = ctx.c_zero();
                for (j, zj) in zs.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    let diff = ctx.c_sub(&zs[i], zj);
                    if ctx.c_is_zero(&diff) {
                        continue; // coincident iterates: treat as no repulsion
                    }
                    sum = ctx.c_add(&sum, &ctx.c_div(&one, &diff));
                }
                let denom = ctx.c_sub(&one, &ctx.c_mul(&newton, &sum));
                let step = if ctx.c_is_zero(&denom) {
                    newton
                } else {
                    ctx.c_div(&newton, &denom)
                };
                zs[i] = ctx.c_sub(&zs[i], &step);

                let scale = ctx.add(&ctx.from_f64(1.0), &ctx.c_abs2(&zs[i]));
                if ctx.cmp(&ctx.c_abs2(&step), &ctx.mul(&stop_sq, &scale)).is_gt() {
                    all_small = false;
                }
            }
            if all_small || iterations >= settings.max_iterations {
                break;
            }
        }

        let pairing = enforce_conjugate_pairs(&ctx, &mut zs, settings.precision_bits);
        newton_polish(&ctx, &coeffs, &deriv, &mut zs, &pairing);
    }

    // Reassemble: exact zero roots first, then the iterated ones.
    let mut roots: Vec<Cx> = (0..zero_roots).map(|_| ctx.c_zero()).collect();
    roots.extend(zs);
    roots.sort_by(|a, b| ctx.cmp(&a.re, &b.re).then_with(|| ctx.cmp(&a.im, &b.im)));

    let full_coeffs: Vec<Cx> = int_coeffs
        .iter()
        .map(|c| ctx.c_real(ctx.from_bigint(c)))
        .collect();
    let abs_coeffs: Vec<BigFloat> = int_coeffs
        .iter()
        .map(|c| ctx.from_bigint(&c.abs()))
        .collect();
    let residuals: Vec<f64> = roots
        .iter()
        .map(|z| relative_residual(&ctx, &full_coeffs, &abs_coeffs, z))
        .collect();
    let worst = residuals.iter().cloned().fold(0.0f64, f64::max);
    let set = ComplexRootSet {
        roots,
        residuals,
        precision_bits: settings.precision_bits,
    };
    if worst > settings.tolerance || !worst.is_finite() {
        return Err(RootError::NonConvergence {
            iterations,
            worst_residual: worst,
            best: Box::new(set),
        });
    }
    Ok(set)
}

/// Circular initial configuration: radius from the geometric mean
/// `|a_0/a_deg|^(1/deg)` with a deterministic stagger, angles offset so the
/// set is not conjugation-symmetric.
fn initial_guesses(ctx: &FloatCtx, ints: &[BigInt], deg: usize) -> Vec<Cx> {
    let log_lo = log2_bigint(&ints[0]);
    let log_hi = log2_bigint(&ints[deg]);
    let radius = ((log_lo - log_hi) / deg as f64).exp2();
    let radius = radius.clamp(1e-6, 1e12);
    const STAGGER: [f64; 5] = [1.0, 1.09, 0.93, 1.15, 0.88];
    (0..deg)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (deg as f64) + 0.7;
            let r = radius * STAGGER[j % STAGGER.len()];
            ctx.c_from_f64(r * theta.cos(), r * theta.sin())
        })
        .collect()
}

fn log2_bigint(x: &BigInt) -> f64 {
    let mag = x.magnitude();
    if mag.is_zero() {
        return -1e9;
    }
    let bits = mag.bits();
    if bits <= 53 {
        return (x.abs().to_string().parse::<f64>()).unwrap_or(1.0).log2();
    }
    let top = mag >> (bits - 53);
    let top_f = top.to_string().parse::<f64>().unwrap_or(1.0);
    (bits - 53) as f64 + top_f.log2()
}

fn horner(ctx: &FloatCtx, coeffs: &[Cx], z: &Cx) -> Cx {
    let mut acc = ctx.c_zero();
    for c in coeffs.iter().rev() {
        acc = ctx.c_add(&ctx.c_mul(&acc, z), c);
    }
    acc
}

struct Pairing {
    reals: Vec<usize>,
    /// `(positive-imaginary slot, mirrored slot)`.
    pairs: Vec<(usize, usize)>,
}

/// Snaps near-real iterates onto the axis and replaces the rest by exactly
/// conjugate pairs, matching each positive-imaginary root to its closest
/// mirror candidate. Returns the pairing so later polish steps can keep the
/// multiset conjugation-closed.
fn enforce_conjugate_pairs(ctx: &FloatCtx, zs: &mut [Cx], precision_bits: usize) -> Pairing {
    let shift = -(2 * precision_bits as i32) / 3;
    let mut reals = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, z) in zs.iter_mut().enumerate() {
        let tol = ctx.ldexp(&ctx.add(&ctx.from_f64(1.0), &z.re.abs()), shift);
        if ctx.cmp(&z.im.abs(), &tol).is_le() {
            z.im = ctx.zero();
            reals.push(i);
        } else if z.im.is_positive() {
            pos.push(i);
        } else {
            neg.push(i);
        }
    }
    // Deterministic matching order: process positives sorted by (re, im).
    pos.sort_by(|&a, &b| {
        ctx.cmp(&zs[a].re, &zs[b].re)
            .then_with(|| ctx.cmp(&zs[a].im, &zs[b].im))
    });
    let mut pairs = Vec::new();
    let mut used = vec![false; neg.len()];
    for &pi in &pos {
        let conj = ctx.c_conj(&zs[pi]);
        let mut best: Option<(usize, BigFloat)> = None;
        for (t, &ni) in neg.iter().enumerate() {
            if used[t] {
                continue;
            }
            let dist = ctx.c_abs2(&ctx.c_sub(&zs[ni], &conj));
            if best
                .as_ref()
                .is_none_or(|(_, bd)| ctx.cmp(&dist, bd).is_lt())
            {
                best = Some((t, dist));
            }
        }
        let Some((t, _)) = best else {
            // Unbalanced classification: fall back to the real axis.
            zs[pi].im = ctx.zero();
            reals.push(pi);
            continue;
        };
        used[t] = true;
        let ni = neg[t];
        let re = ctx.ldexp(&ctx.add(&zs[pi].re, &zs[ni].re), -1);
        let im = ctx.ldexp(&ctx.sub(&zs[pi].im, &zs[ni].im), -1);
        zs[pi] = Cx {
            re: re.clone(),
            im: im.clone(),
        };
        zs[ni] = Cx { re, im: im.neg() };
        pairs.push((pi, ni));
    }
    for (t, &ni) in neg.iter().enumerate() {
        if !used[t] {
            zs[ni].im = ctx.zero();
            reals.push(ni);
        }
    }
    Pairing { reals, pairs }
}

/// Two Newton steps per root. Real roots stay exactly real (the arithmetic
/// keeps a zero imaginary part bit-exact for real coefficients); each pair's
/// mirror slot is rewritten as the exact conjugate of the polished root.
fn newton_polish(ctx: &FloatCtx, coeffs: &[Cx], deriv: &[Cx], zs: &mut [Cx], pairing: &Pairing) {
    for &i in &pairing.reals {
        polish_one(ctx, coeffs, deriv, &mut zs[i]);
        debug_assert!(zs[i].im.is_zero());
    }
    for &(pi, ni) in &pairing.pairs {
        polish_one(ctx, coeffs, deriv, &mut zs[pi]);
        zs[ni] = ctx.c_conj(&zs[pi]);
    }
}

fn polish_one(ctx: &FloatCtx, coeffs: &[Cx], deriv: &[Cx], z: &mut Cx) {
    for _ in 0..2 {
        let pv = horner(ctx, coeffs, z);
        if ctx.c_is_zero(&pv) {
            break;
        }
        let dv = horner(ctx, deriv, z);
        if ctx.c_is_zero(&dv) {
            break;
        }
        let step = ctx.c_div(&pv, &dv);
        *z = ctx.c_sub(z, &step);
    }
}

/// `|p(z)| / Σ |a_k| |z|^k` as an `f64`; zero numerator gives zero.
fn relative_residual(ctx: &FloatCtx, coeffs: &[Cx], abs_coeffs: &[BigFloat], z: &Cx) -> f64 {
    let num = ctx.c_abs(&horner(ctx, coeffs, z));
    if num.is_zero() {
        return 0.0;
    }
    let zabs = ctx.c_abs(z);
    let mut scale = ctx.zero();
    for a in abs_coeffs.iter().rev() {
        scale = ctx.add(&ctx.mul(&scale, &zabs), a);
    }
    if scale.is_zero() {
        return f64::INFINITY;
    }
    to_f64(&ctx.div(&num, &scale))
}
