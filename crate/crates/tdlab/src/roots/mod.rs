//! Complex root extraction for exact integer polynomials.
//!
//! Pipeline: deflate the `x^k` factor exactly; scale the remaining
//! coefficients to unit max magnitude; run Aberth–Ehrlich simultaneous
//! iteration from Newton-polygon initial guesses; group the iterates into
//! multiplicity clusters; refine each cluster center by Newton's method on
//! the exact (m−1)-th derivative, where the center is a simple root; snap
//! and symmetrize against the real axis.
//!
//! Residuals are relative backward errors: `|p(z)| / Σ|a_k||z|^k`, the
//! smallest relative coefficient perturbation making `z` an exact root.
//! This is the quantity double precision can actually certify for the
//! binomial-scale coefficients these polynomials have; an absolute bound
//! `|p(z)| ≤ t·(1+max|a|)` holds as a consequence at desk scale but is
//! unattainable in doubles for the large sweep polynomials.

mod checks;

pub use checks::{
    certify_real_root_interval, check_integer_roots, check_nonreal_count, check_root_bound,
    check_three_root_theorem, limit_sequence, limit_sequence_log, rational_above,
    IntervalCertificate,
};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Poly;

/// Tuning knobs for [`find_roots`]. All tolerances are relative; see the
/// field docs for the scaling applied.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub max_iterations: u32,
    /// Stop when every Aberth step is below this, scaled by `1 + |z|`.
    pub step_tolerance: f64,
    /// Accept a solve only if every relative backward-error residual is
    /// below this.
    pub residual_threshold: f64,
    /// Cluster grouping distance, scaled by `max(1, |z|)`.
    pub cluster_radius: f64,
    /// Imaginary parts below this (scaled by `1 + |z|`) snap to the axis.
    pub real_axis_tolerance: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_iterations: 500,
            step_tolerance: 1e-13,
            residual_threshold: 1e-9,
            cluster_radius: 1e-6,
            real_axis_tolerance: 1e-8,
        }
    }
}

/// One converged iterate of the deflated polynomial.
#[derive(Debug, Clone, Copy)]
pub struct RootEstimate {
    pub value: Complex64,
    /// Relative backward error at `value`.
    pub residual: f64,
}

/// A group of iterates representing one root of multiplicity ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    pub center: Complex64,
    pub multiplicity: usize,
}

/// Roots of a polynomial: exact zero multiplicity, raw iterates, and
/// refined multiplicity clusters. Cluster multiplicities plus the zero
/// multiplicity always sum to the source degree.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<RootEstimate>,
    pub clusters: Vec<Cluster>,
    pub source_degree: usize,
    pub zero_multiplicity: usize,
}

impl RootSet {
    /// Number of distinct roots: clusters plus the zero root if present.
    pub fn distinct_count(&self) -> usize {
        self.clusters.len() + usize::from(self.zero_multiplicity > 0)
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    /// Total root count including multiplicity and the deflated zeros.
    pub fn total_multiplicity(&self) -> usize {
        self.zero_multiplicity + self.clusters.iter().map(|c| c.multiplicity).sum::<usize>()
    }

    /// Sum of cluster multiplicities whose centers sit off the real axis.
    pub fn nonreal_count(&self) -> usize {
        self.clusters
            .iter()
            .filter(|c| c.center.im != 0.0)
            .map(|c| c.multiplicity)
            .sum()
    }
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error(
        "root iteration did not converge within {iterations} iterations \
         (worst relative residual {worst_residual:.3e})"
    )]
    NonConvergence {
        iterations: u32,
        worst_residual: f64,
        /// Best iterates at abort time, for diagnostics.
        best: Vec<RootEstimate>,
    },
}

/// Natural log of `|c|`, exact enough for scaling; −∞ for zero.
fn ln_abs_bigint(c: &BigInt) -> f64 {
    if c.is_zero() {
        return f64::NEG_INFINITY;
    }
    match c.abs().to_f64() {
        Some(v) if v.is_finite() => v.ln(),
        _ => {
            // Too large for f64: split off the top 64 bits.
            let bits = c.magnitude().bits();
            let shift = bits - 64;
            let top = (c.magnitude() >> shift).to_f64().unwrap_or(f64::MAX);
            top.ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

/// Upper bound on the modulus of every root:
/// `2 · max_k |a_{d−k}/a_d|^{1/k}`. Computed in log space so coefficients
/// beyond f64 range are handled. Panics on the zero polynomial.
pub fn fujiwara_radius(p: &Poly) -> f64 {
    let d = p.degree().expect("radius of the zero polynomial");
    if d == 0 {
        return 0.0;
    }
    let coeffs = p.coeffs();
    let ln_lead = ln_abs_bigint(&coeffs[d]);
    let mut worst = f64::NEG_INFINITY;
    for k in 1..=d {
        let c = &coeffs[d - k];
        if c.is_zero() {
            continue;
        }
        worst = worst.max((ln_abs_bigint(c) - ln_lead) / k as f64);
    }
    if worst == f64::NEG_INFINITY {
        0.0 // monomial: all roots at the origin
    } else {
        2.0 * worst.exp()
    }
}

/// Exactly 2^e for e in the normal exponent range.
fn pow2(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((1023 + e) as u64) << 52)
}

/// Coefficients scaled into [1/2, 1) at the largest magnitude (roots
/// unchanged), each carried to double-double precision. The scale is an
/// exact power of two and the high/low split is an exact integer
/// remainder, so the only representation error is the ~2^-106 cutoff —
/// coefficient rounding at plain f64 level (ln/exp or a single division)
/// already moves the ill-conditioned roots of the heavy families by ~0.1.
fn scaled_coeffs(p: &Poly) -> Vec<Dd> {
    let bits = p
        .coeffs()
        .iter()
        .map(|c| c.magnitude().bits())
        .max()
        .unwrap_or(1)
        .max(1);
    assert!(bits <= 1000, "coefficients beyond 2^1000 are unsupported");
    let f = pow2(-(bits as i32));
    p.coeffs()
        .iter()
        .map(|a| {
            if a.is_zero() {
                return Dd::ZERO;
            }
            let hi = a.to_f64().expect("coefficient within f64 range");
            let rest = a - BigInt::from_f64(hi).expect("leading part is integral");
            let lo = rest.to_f64().unwrap_or(0.0);
            // scaling by a power of two is exact on both components
            Dd {
                hi: hi * f,
                lo: lo * f,
            }
        })
        .collect()
}

/// Unevaluated double-double value `hi + lo`. Horner loops on the
/// binomial-scale coefficients here lose ~16 digits to cancellation near
/// the far roots; carrying the rounding error explicitly recovers them.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

/// Error-free sum: `hi + lo == a + b` exactly.
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

/// Error-free product via fused multiply-add: `hi + lo == a·b` exactly.
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = s.lo + self.lo + o.lo;
        let r = s.hi + t;
        Dd {
            hi: r,
            lo: t - (r - s.hi),
        }
    }

    fn sub(self, o: Dd) -> Dd {
        self.add(Dd {
            hi: -o.hi,
            lo: -o.lo,
        })
    }

    fn mul_f64(self, b: f64) -> Dd {
        let p = two_prod(self.hi, b);
        let t = self.lo.mul_add(b, p.lo);
        let r = p.hi + t;
        Dd {
            hi: r,
            lo: t - (r - p.hi),
        }
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Complex value with double-double components.
#[derive(Debug, Clone, Copy)]
struct CDd {
    re: Dd,
    im: Dd,
}

impl CDd {
    const ZERO: CDd = CDd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    fn mul_z(self, z: Complex64) -> CDd {
        CDd {
            re: self.re.mul_f64(z.re).sub(self.im.mul_f64(z.im)),
            im: self.re.mul_f64(z.im).add(self.im.mul_f64(z.re)),
        }
    }

    fn add(self, o: CDd) -> CDd {
        CDd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    fn add_re(self, ck: Dd) -> CDd {
        CDd {
            re: self.re.add(ck),
            im: self.im,
        }
    }

    fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Effective unit roundoff of the compensated Horner loop: ~d·2^-104 with
/// room to spare for the degrees handled here.
const EVAL_NOISE: f64 = 1e-29;

/// Compensated Horner evaluation returning the Newton ratio `p/p'`, the
/// relative backward error at `z`, and the noise-clamped Newton magnitude
/// `max(|p|, u·Σ|a_k||z|^k) / |p'|`. The clamp keeps the magnitude honest
/// where cancellation rounds |p| below its own evaluation noise (at an
/// m-fold root's stall ring it comes out near ring-radius/m no matter how
/// the rounding falls). Double-double accumulation keeps that noise near
/// `u ≈ 10^-29` of the coefficient scale — plain doubles leave binomial
/// coefficients with position noise up to ~10^-1 near the far roots,
/// wide enough to lose a root or fake a real one. Beyond the overflow-safe
/// radius the reversed polynomial in plain doubles takes over: with
/// `w = 1/z`, `p/p' = z·q(w)/(d·q(w) − w·q'(w))` and the `|z|^d` factors
/// cancel throughout.
fn newton_ratio(c: &[Dd], z: Complex64) -> (Complex64, f64, f64) {
    let d = c.len() - 1;
    let az = z.norm();
    // max |c| is below 1.0 after scaling, so intermediates stay below
    // e^600·(d+1)
    if (d as f64) * az.max(1.0).ln() <= 600.0 {
        let mut p = CDd {
            re: c[d],
            im: Dd::ZERO,
        };
        let mut dp = CDd::ZERO;
        let mut s = c[d].hi.abs();
        for k in (0..d).rev() {
            dp = dp.mul_z(z).add(p);
            p = p.mul_z(z).add_re(c[k]);
            s = s * az + c[k].hi.abs();
        }
        let s = s.max(f64::MIN_POSITIVE);
        let (p, dp) = (p.to_c64(), dp.to_c64());
        let clamped = p.norm().max(EVAL_NOISE * s) / dp.norm();
        // scale the division by |p'| by hand: norms here can pass 1e154,
        // where the plain complex division overflows its denominator
        let m = dp.norm();
        let ratio = if m == 0.0 {
            Complex64::new(f64::INFINITY, 0.0)
        } else {
            (p / m) / (dp / m)
        };
        (ratio, p.norm() / s, clamped)
    } else {
        let w = z.inv();
        let aw = w.norm();
        // reversed polynomial r(w) = Σ c_{d−j} w^j, evaluated by Horner
        let mut q = Complex64::new(c[0].hi, 0.0);
        let mut dq = Complex64::new(0.0, 0.0);
        let mut s = c[0].hi.abs();
        for ck in c.iter().take(d + 1).skip(1) {
            dq = dq * w + q;
            q = q * w + ck.hi;
            s = s * aw + ck.hi.abs();
        }
        let s = s.max(f64::MIN_POSITIVE);
        let den = q * d as f64 - w * dq;
        let clamped = z.norm() * q.norm().max(f64::EPSILON * s) / den.norm();
        (z * q / den, q.norm() / s, clamped)
    }
}

/// Initial guesses from the Newton polygon: for each segment of the upper
/// convex hull of `(i, ln|a_i|)`, place points on the circle whose radius
/// is the segment's root-magnitude estimate, with a fixed angular offset
/// to break symmetry. Deterministic by construction.
fn initial_guesses(c: &[Dd], lns: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let pts: Vec<(usize, f64)> = lns
        .iter()
        .enumerate()
        .filter(|(_, &y)| y.is_finite())
        .map(|(i, &y)| (i, y))
        .collect();
    // Upper convex hull, left to right.
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(x, y) in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // pop if (x2,y2) is below the segment (x1,y1)-(x,y)
            let cross = (x2 - x1) as f64 * (y - y1) - (x - x1) as f64 * (y2 - y1);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    let mut guesses = Vec::with_capacity(d);
    let sigma = 0.7;
    for (seg, win) in hull.windows(2).enumerate() {
        let (i, yi) = win[0];
        let (j, yj) = win[1];
        let count = j - i;
        let radius = ((yi - yj) / count as f64).exp();
        for s in 0..count {
            let theta = std::f64::consts::TAU * (s as f64 / count as f64 + seg as f64 / d as f64)
                + sigma;
            guesses.push(Complex64::from_polar(radius, theta));
        }
    }
    debug_assert_eq!(guesses.len(), d);
    guesses
}

/// Aberth–Ehrlich simultaneous iteration on the scaled coefficients.
/// Returns the iterates and their residuals, or the best effort on
/// non-convergence.
fn aberth(c: &[Dd], cfg: &SolverConfig) -> Result<Vec<RootEstimate>, SolverError> {
    let d = c.len() - 1;
    let lns: Vec<f64> = c.iter().map(|v| v.hi.abs().ln()).collect();
    // Root-modulus bound from the coefficients; a near-collision can fling
    // an iterate outward, and anything past the bound holds no roots.
    let mut ln_bound = f64::NEG_INFINITY;
    for k in 1..=d {
        if lns[d - k].is_finite() {
            ln_bound = ln_bound.max((lns[d - k] - lns[d]) / k as f64);
        }
    }
    let bound = 2.0 * ln_bound.exp().max(1.0);
    let mut z = initial_guesses(c, &lns);
    let mut done = vec![false; d];
    // Residual floor near compensated-evaluation noise: below it, stepping
    // a stationary iterate only thrashes. It must sit close to that noise:
    // the heavy families have wide annuli of 1e-16-scale backward error
    // far from every root, and a floor f64 could reach would freeze
    // iterates inside them. The sweep stops early when all are done or
    // steps are uniformly tiny.
    let floor = 1e3 * EVAL_NOISE;
    let mut iterations = 0;
    for iter in 0..cfg.max_iterations {
        iterations = iter + 1;
        let mut max_rel_step = 0.0f64;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let scale = 1.0 + z[i].norm();
            // Index-dependent escape direction: coincident iterates pushed
            // by one shared vector would stay coincident forever.
            let nudge = -Complex64::new(1e-6, 2e-6) * scale * (1.0 + 0.37 * i as f64);
            let (ratio, residual, _) = newton_ratio(c, z[i]);
            let mut forced = false;
            let step = if !ratio.is_finite() {
                forced = true;
                nudge
            } else {
                let mut collision = false;
                let mut sum_inv = Complex64::new(0.0, 0.0);
                for j in 0..d {
                    if j != i {
                        let diff = z[i] - z[j];
                        if diff.norm_sqr() == 0.0 {
                            collision = true;
                            break;
                        }
                        sum_inv += diff.inv();
                    }
                }
                if collision {
                    forced = true;
                    nudge
                } else {
                    let denom = Complex64::new(1.0, 0.0) - ratio * sum_inv;
                    let aberth_step = if denom.norm_sqr() == 0.0 {
                        ratio // degenerate correction: plain Newton
                    } else {
                        ratio / denom
                    };
                    if aberth_step.is_finite() {
                        aberth_step
                    } else {
                        forced = true;
                        nudge
                    }
                }
            };
            // Cap the correction at half the local scale: repulsion between
            // near-colliding iterates can otherwise fling one outside every
            // root's basin in a single blow.
            let cap = 0.5 * scale;
            let step = if step.norm() > cap {
                step * (cap / step.norm())
            } else {
                step
            };
            z[i] -= step;
            let mut rel = step.norm() / (1.0 + z[i].norm());
            let r = z[i].norm();
            if r > bound {
                // No roots out here; reel the iterate back to the boundary.
                z[i] *= bound / r;
                rel = 1.0;
            }
            if forced {
                rel = 1.0;
            }
            max_rel_step = max_rel_step.max(rel);
            // Settled means backward error at noise level AND the full
            // correction (repulsion included) no longer moves the iterate.
            // Either test alone misfires: heavy-coefficient polynomials have
            // wide regions of tiny relative backward error far from every
            // root, and an iterate passing through one must keep moving.
            if !forced && residual <= floor && rel <= cfg.step_tolerance {
                done[i] = true;
            }
        }
        if std::env::var_os("ABERTH_TRACE").is_some() && (iter % 25 == 0 || iter + 1 == cfg.max_iterations) {
            let live = done.iter().filter(|&&f| !f).count();
            let mut worst = (0usize, 0.0f64);
            for (i, &zi) in z.iter().enumerate() {
                let (_, res, _) = newton_ratio(c, zi);
                if res > worst.1 {
                    worst = (i, res);
                }
            }
            eprintln!(
                "TRACE iter {iter:3}: live {live:2} max_rel_step {max_rel_step:.3e} worst it{} res {:.3e} at {:+.6}{:+.6}i |z|={:.3}",
                worst.0, worst.1, z[worst.0].re, z[worst.0].im, z[worst.0].norm()
            );
        }
        if done.iter().all(|&f| f) || max_rel_step <= cfg.step_tolerance {
            break;
        }
    }
    let estimates: Vec<RootEstimate> = z
        .iter()
        .map(|&zi| {
            let (_, residual, _) = newton_ratio(c, zi);
            RootEstimate {
                value: zi,
                residual,
            }
        })
        .collect();
    let worst = estimates.iter().map(|e| e.residual).fold(0.0, f64::max);
    if worst <= cfg.residual_threshold && estimates.iter().all(|e| e.value.is_finite()) {
        Ok(estimates)
    } else {
        Err(SolverError::NonConvergence {
            iterations,
            worst_residual: worst,
            best: estimates,
        })
    }
}

/// Position-noise scale of a center taken as an m-fold root: with
/// `t_k = q^{(k)}(z)/k!` from a Taylor shift, solves
/// `|t_m| κ^m = max(|t_0|, ε·Σ|c_k||z|^k)` — the radius below which the
/// evaluation cannot distinguish z from an m-fold root. For m = 1 this is
/// the clamped Newton magnitude; at a multiple root it stays honest where
/// the first-order ratio degenerates to 0/0 noise.
fn taylor_noise_scale(c: &[Dd], z: Complex64, m: usize) -> f64 {
    let d = c.len() - 1;
    if m == 0 || m > d {
        return 0.0;
    }
    let mut t: Vec<Complex64> = c.iter().map(|x| Complex64::new(x.hi, 0.0)).collect();
    for k in 0..=m {
        for j in (k..d).rev() {
            let step = z * t[j + 1];
            t[j] += step;
        }
    }
    let az = z.norm();
    let mut s = 0.0f64;
    for ck in c.iter().rev() {
        s = s * az + ck.hi.abs();
    }
    let tm = t[m].norm();
    if tm == 0.0 {
        return 0.0;
    }
    let kappa = (t[0].norm().max(f64::EPSILON * s) / tm).powf(1.0 / m as f64);
    if kappa.is_finite() {
        kappa
    } else {
        0.0
    }
}

/// Union-find with path compression; used to group iterates into clusters.
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let root = self.find(self.0[i]);
            self.0[i] = root;
        }
        self.0[i]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Groups iterates whose mutual distance is within either the configured
/// cluster radius or a multiple of their Newton corrections — the latter
/// captures the `ε^{1/m}` ring an m-fold root scatters its iterates on.
fn cluster_indices(c: &[Dd], z: &[RootEstimate], cfg: &SolverConfig) -> Vec<Vec<usize>> {
    let d = z.len();
    let nw: Vec<f64> = z
        .iter()
        .map(|e| {
            let (_, _, clamped) = newton_ratio(c, e.value);
            if clamped.is_finite() {
                clamped
            } else {
                0.0
            }
        })
        .collect();
    let mut uf = UnionFind::new(d);
    for i in 0..d {
        for j in i + 1..d {
            let dist = (z[i].value - z[j].value).norm();
            let scale = 1f64.max(z[i].value.norm()).max(z[j].value.norm());
            // Noise-widened link, capped: a stalled iterate deep inside a
            // multiple-root basin has |p'| at noise level too, so its nw is
            // garbage of order one and must not bridge distinct roots.
            let link = (cfg.cluster_radius * scale).max((10.0 * (nw[i] + nw[j])).min(1e-2 * scale));
            if dist <= link {
                uf.union(i, j);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); d];
    for i in 0..d {
        let r = uf.find(i);
        groups[r].push(i);
    }
    groups.retain(|g| !g.is_empty());
    groups
}

/// Newton polish on an arbitrary coefficient vector; returns the improved
/// point or the start on breakdown.
fn newton_polish(c: &[Dd], start: Complex64) -> Complex64 {
    let mut z = start;
    for _ in 0..60 {
        let (ratio, _, _) = newton_ratio(c, z);
        if !ratio.is_finite() {
            return z;
        }
        z -= ratio;
        if ratio.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    if z.is_finite() {
        z
    } else {
        start
    }
}

/// Refines a size-m cluster's center: Newton on the exact (m−1)-th
/// derivative, where an m-fold root of `q` is a simple root. Falls back to
/// the cluster mean if the refinement wanders off.
fn refine_center(q: &Poly, members: &[Complex64], _cfg: &SolverConfig) -> Complex64 {
    let m = members.len();
    let mean = members.iter().sum::<Complex64>() / m as f64;
    let der = q.derivative(m - 1);
    if der.degree().unwrap_or(0) == 0 {
        return mean;
    }
    let c = scaled_coeffs(&der);
    let refined = newton_polish(&c, mean);
    // Reject refinements that left the cluster's neighborhood.
    let spread = members
        .iter()
        .map(|&w| (w - mean).norm())
        .fold(0.0, f64::max);
    if (refined - mean).norm() <= 4.0 * spread + 1e-6 {
        refined
    } else {
        mean
    }
}

/// Snaps near-real centers onto the axis and averages conjugate pairs so
/// the published clusters are exactly symmetric.
///
/// Pairing widens with each center's position-noise scale: mates of an
/// ill-conditioned pair err independently, beyond the fixed tolerance.
/// Centers the snap and the pairing both leave alone stay as computed — a
/// complex center without a mate is a solver failure the checks downstream
/// must see, not something to flatten onto the axis.
fn symmetrize(clusters: &mut [Cluster], c: &[Dd], cfg: &SolverConfig) {
    let noise: Vec<f64> = clusters
        .iter()
        .map(|cl| taylor_noise_scale(c, cl.center, cl.multiplicity))
        .collect();
    for cl in clusters.iter_mut() {
        if cl.center.im.abs() <= cfg.real_axis_tolerance * (1.0 + cl.center.norm()) {
            cl.center.im = 0.0;
        }
    }
    let n = clusters.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || clusters[i].center.im <= 0.0 {
            continue;
        }
        // best conjugate partner below the axis
        let mut best: Option<(usize, f64)> = None;
        for (j, cl) in clusters.iter().enumerate() {
            if used[j] || cl.center.im >= 0.0 || clusters[j].multiplicity != clusters[i].multiplicity {
                continue;
            }
            let dist = (cl.center.conj() - clusters[i].center).norm();
            if best.is_none_or(|(_, d)| dist < d) {
                best = Some((j, dist));
            }
        }
        if let Some((j, dist)) = best {
            let scale = 1.0 + clusters[i].center.norm();
            if dist <= (1e-6 * scale).max(4.0 * (noise[i] + noise[j])) {
                let avg = (clusters[i].center + clusters[j].center.conj()) / 2.0;
                clusters[i].center = avg;
                clusters[j].center = avg.conj();
                used[i] = true;
                used[j] = true;
            }
        }
    }
}

/// Finds all roots of `p`: exact zero deflation, Aberth–Ehrlich on the
/// rest, multiplicity clustering with refined centers.
/// Relative backward error `|p(z)| / Σ|a_k||z|^k` at an arbitrary point —
/// the same residual the solver enforces on its estimates. Exactly 0.0 at
/// z = 0 when the polynomial has a zero constant term.
pub fn residual_at(p: &Poly, z: Complex64) -> f64 {
    if p.is_zero() {
        return 0.0;
    }
    newton_ratio(&scaled_coeffs(p), z).1
}

pub fn find_roots(p: &Poly, cfg: &SolverConfig) -> Result<RootSet, SolverError> {
    if p.is_zero() {
        return Err(SolverError::ZeroPolynomial);
    }
    let source_degree = p.degree().expect("nonzero");
    let zero_multiplicity = p.trailing_zero_order();
    let mut q = p.shift_down(zero_multiplicity);
    let d = q.degree().expect("nonzero");
    if d == 0 {
        return Ok(RootSet {
            roots: Vec::new(),
            clusters: Vec::new(),
            source_degree,
            zero_multiplicity,
        });
    }
    let mut c = scaled_coeffs(&q);
    let mut roots = aberth(&c, cfg)?;
    // Let the iterates nominate integer candidates, verify each by exact
    // division and deflate the hits. A multiple root's iterates stall on a
    // ring double precision cannot shrink, and every high-multiplicity
    // root these counting polynomials produce is an integer — taking them
    // out exactly spares the clustering from resolving those rings.
    let mut exact: Vec<(i64, usize)> = Vec::new();
    let mut cand: Vec<i64> = roots
        .iter()
        .filter(|e| e.value.im.abs() <= 1.0 && e.value.re.abs() < 1e15)
        .flat_map(|e| {
            let r = e.value.re.round() as i64;
            [r - 1, r, r + 1]
        })
        .collect();
    cand.sort_unstable();
    cand.dedup();
    for a in cand {
        if a == 0 {
            continue; // the origin is already deflated exactly
        }
        let (m, rest) = q.deflate_integer_root(a);
        if m > 0 {
            exact.push((a, m));
            q = rest;
        }
    }
    if !exact.is_empty() {
        if q.degree().unwrap_or(0) == 0 {
            c = Vec::new();
            roots = Vec::new();
        } else {
            c = scaled_coeffs(&q);
            roots = aberth(&c, cfg)?;
        }
    }
    let mut merged: Vec<Cluster> = Vec::new();
    if !roots.is_empty() {
        let groups = cluster_indices(&c, &roots, cfg);
        let mut clusters: Vec<Cluster> = groups
            .iter()
            .map(|g| {
                let members: Vec<Complex64> = g.iter().map(|&i| roots[i].value).collect();
                let center = if members.len() == 1 {
                    newton_polish(&c, members[0])
                } else {
                    refine_center(&q, &members, cfg)
                };
                Cluster {
                    center,
                    multiplicity: members.len(),
                }
            })
            .collect();
        // Refined centers of an over-split multiple root coincide; merge by
        // the configured cluster radius.
        for cl in clusters.drain(..) {
            let hit = merged.iter_mut().find(|m| {
                let scale = 1f64.max(m.center.norm()).max(cl.center.norm());
                (m.center - cl.center).norm() <= cfg.cluster_radius * scale
            });
            match hit {
                Some(m) => {
                    // weight by multiplicity to keep the center stable
                    let wm = m.multiplicity as f64;
                    let wc = cl.multiplicity as f64;
                    m.center = (m.center * wm + cl.center * wc) / (wm + wc);
                    m.multiplicity += cl.multiplicity;
                }
                None => merged.push(cl),
            }
        }
        symmetrize(&mut merged, &c, cfg);
    }
    for &(a, m) in &exact {
        let center = Complex64::new(a as f64, 0.0);
        merged.push(Cluster {
            center,
            multiplicity: m,
        });
        // Exact roots enter the raw estimates once per multiplicity so the
        // estimate count and residual summaries stay faithful.
        for _ in 0..m {
            roots.push(RootEstimate {
                value: center,
                residual: 0.0,
            });
        }
    }
    merged.sort_by(|a, b| {
        (a.center.re, a.center.im)
            .partial_cmp(&(b.center.re, b.center.im))
            .expect("finite centers")
    });
    debug_assert_eq!(
        zero_multiplicity + merged.iter().map(|c| c.multiplicity).sum::<usize>(),
        source_degree
    );
    Ok(RootSet {
        roots,
        clusters: merged,
        source_degree,
        zero_multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn assert_close(z: Complex64, w: Complex64, tol: f64) {
        assert!(
            (z - w).norm() <= tol,
            "expected {w}, got {z} (dist {})",
            (z - w).norm()
        );
    }

    fn solve(coeffs: &[i64]) -> RootSet {
        find_roots(&Poly::from_i64(coeffs), &SolverConfig::default()).unwrap()
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(
            find_roots(&Poly::zero(), &SolverConfig::default()),
            Err(SolverError::ZeroPolynomial)
        ));
    }

    #[test]
    fn pure_monomial_deflates_completely() {
        let rs = solve(&[0, 0, 0, 5]);
        assert_eq!(rs.zero_multiplicity, 3);
        assert!(rs.clusters.is_empty());
        assert_eq!(rs.total_multiplicity(), 3);
    }

    #[test]
    fn quadratic_with_known_complex_pair() {
        // x² + 4x + 6 = 0 at −2 ± √2 i
        let rs = solve(&[6, 4, 1]);
        assert_eq!(rs.clusters.len(), 2);
        let target = Complex64::new(-2.0, 2f64.sqrt());
        assert_close(rs.clusters[0].center, target.conj(), 1e-12);
        assert_close(rs.clusters[1].center, target, 1e-12);
        // symmetrization makes the pair exactly conjugate
        assert_eq!(rs.clusters[0].center.re, rs.clusters[1].center.re);
        assert_eq!(rs.clusters[0].center.im, -rs.clusters[1].center.im);
    }

    #[test]
    fn total_domination_of_k3_has_roots_zero_and_minus_three() {
        // x³ + 3x² = x²(x + 3)
        let rs = solve(&[0, 0, 3, 1]);
        assert_eq!(rs.zero_multiplicity, 2);
        assert_eq!(rs.clusters.len(), 1);
        assert_close(rs.clusters[0].center, Complex64::new(-3.0, 0.0), 1e-12);
        assert_eq!(rs.clusters[0].center.im, 0.0);
    }

    #[test]
    fn helm_shape_fixture() {
        // x³(x+1)⁴: zero multiplicity 3, one cluster at −1 of multiplicity 4
        let p = Poly::binomial_pow(4).shift_up(3);
        let rs = find_roots(&p, &SolverConfig::default()).unwrap();
        assert_eq!(rs.zero_multiplicity, 3);
        assert_eq!(rs.clusters.len(), 1);
        assert_eq!(rs.clusters[0].multiplicity, 4);
        assert_close(rs.clusters[0].center, Complex64::new(-1.0, 0.0), 1e-9);
    }

    #[test]
    fn high_multiplicity_fixtures_recover_exactly() {
        for a in [0usize, 1, 7, 10] {
            for b in [1usize, 2, 5, 10] {
                let p = Poly::binomial_pow(b).shift_up(a);
                let rs = find_roots(&p, &SolverConfig::default()).unwrap();
                assert_eq!(rs.zero_multiplicity, a, "a={a} b={b}");
                assert_eq!(rs.clusters.len(), 1, "a={a} b={b}");
                assert_eq!(rs.clusters[0].multiplicity, b, "a={a} b={b}");
                assert_close(
                    rs.clusters[0].center,
                    Complex64::new(-1.0, 0.0),
                    1e-6,
                );
                assert!(rs.max_residual() <= 1e-9);
            }
        }
    }

    #[test]
    fn distinct_real_roots_stay_separate() {
        // (x+1)(x+2)(x+3) = x³ + 6x² + 11x + 6
        let rs = solve(&[6, 11, 6, 1]);
        assert_eq!(rs.clusters.len(), 3);
        for (cl, expect) in rs.clusters.iter().zip([-3.0, -2.0, -1.0]) {
            assert_close(cl.center, Complex64::new(expect, 0.0), 1e-10);
            assert_eq!(cl.multiplicity, 1);
        }
    }

    #[test]
    fn root_sum_matches_coefficient_ratio() {
        // Σ roots = −a_{d−1}/a_d for the deflated part plus the zeros.
        for coeffs in [
            vec![0i64, 0, 6, 4, 1],
            vec![3, 14, 10, 2],
            vec![0, 2, 3, 1],
        ] {
            let p = Poly::from_i64(&coeffs);
            let rs = find_roots(&p, &SolverConfig::default()).unwrap();
            let sum: Complex64 = rs.roots.iter().map(|r| r.value).sum();
            let d = p.degree().unwrap();
            let expect = -p.coeff(d - 1).to_f64().unwrap() / p.coeff(d).to_f64().unwrap();
            assert!(
                (sum.re - expect).abs() <= 1e-6 * (1.0 + expect.abs()),
                "re {} vs {}",
                sum.re,
                expect
            );
            assert!(sum.im.abs() <= 1e-6);
        }
    }

    #[test]
    fn large_binomial_coefficients_converge() {
        // (1+x)^{60} − 60x − 1: degree 60, coefficients ~10^17.
        let p = Poly::binomial_pow(60).sub(&Poly::from_i64(&[1, 60]));
        let rs = find_roots(&p, &SolverConfig::default()).unwrap();
        assert!(rs.max_residual() <= 1e-9, "residual {}", rs.max_residual());
        assert_eq!(rs.zero_multiplicity, 2);
        assert_eq!(rs.total_multiplicity(), 60);
    }

    #[test]
    fn absolute_residual_bound_holds_at_desk_scale() {
        // For small-coefficient polynomials the absolute form of the
        // residual bound is also attainable, and asserted here.
        for coeffs in [vec![0i64, 0, 6, 4, 1], vec![0, 0, 4, 4, 1], vec![0, 0, 2, 1]] {
            let p = Poly::from_i64(&coeffs);
            let rs = find_roots(&p, &SolverConfig::default()).unwrap();
            let max_coeff = p
                .coeffs()
                .iter()
                .map(|c| c.abs().to_f64().unwrap())
                .fold(0.0, f64::max);
            for r in &rs.roots {
                let value = p.eval_complex(r.value).norm();
                assert!(value <= 1e-9 * (1.0 + max_coeff));
            }
        }
    }

    #[test]
    fn nonconvergence_carries_diagnostics() {
        let p = Poly::binomial_pow(8);
        let cfg = SolverConfig {
            max_iterations: 1,
            residual_threshold: 1e-30,
            ..SolverConfig::default()
        };
        match find_roots(&p, &cfg) {
            Err(SolverError::NonConvergence { best, .. }) => {
                assert_eq!(best.len(), 8);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn one_is_never_a_root_of_a_counting_polynomial() {
        // sanity guard for the scaled evaluator: D_t(K_4) at 1 is 11
        let p = Poly::from_i64(&[0, 0, 6, 4, 1]);
        assert_eq!(p.eval_int(&BigInt::one()), BigInt::from(11));
    }

    #[test]
    fn probe_nc() {
        let p = crate::closed::dt_lex_star_complete(11, 7);
        let cfg = SolverConfig::default();
        let q = p.shift_down(p.trailing_zero_order());
        let c = scaled_coeffs(&q);
        match aberth(&c, &cfg) {
            Ok(_) => eprintln!("converged"),
            Err(SolverError::NonConvergence { best, .. }) => {
                let mut v: Vec<_> = best.iter().collect();
                v.sort_by(|a, b| a.residual.partial_cmp(&b.residual).unwrap());
                for r in v.iter().rev().take(6) {
                    eprintln!(
                        "NC: z={:+.9} {:+.9}i res={:.3e}",
                        r.value.re, r.value.im, r.residual
                    );
                }
            }
            Err(e) => panic!("{e}"),
        }
        panic!("probe");
    }

    #[test]
    fn heavy_star_resolves_the_near_axis_pair() {
        // ((1+x)^35 − 1)/x has all roots on |1+z| = 1 and none real; the
        // pair nearest the axis (±0.0896i) needs compensated evaluation —
        // plain doubles leave ~0.1 of position noise at this scale.
        let p = crate::closed::dt_lex_star_complete(35, 1);
        let rs = find_roots(&p, &SolverConfig::default()).unwrap();
        assert_eq!(rs.clusters.len(), 34);
        assert!(rs.clusters.iter().all(|cl| cl.center.im != 0.0));
        for cl in &rs.clusters {
            let shifted = cl.center + Complex64::new(1.0, 0.0);
            assert!((shifted.norm() - 1.0).abs() <= 1e-9);
        }
    }
}
