//! Root-location checks: non-real counts, the containment disk, integer
//! roots, the three-distinct-roots classification, and exact
//! interval certificates by rational sign evaluation.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{RootSet, SolverConfig};
use crate::poly::Poly;
use crate::report::CheckRecord;

/// Lower bound on non-real roots from the minimum degree: a connected
/// graph of minimum degree δ has at least δ−2 non-real total domination
/// roots, and an all-real root set forces δ ≤ 2.
pub fn check_nonreal_count(rs: &RootSet, delta: usize) -> CheckRecord {
    let name = "nonreal_root_count";
    let nonreal = rs.nonreal_count();
    let required = delta.saturating_sub(2);
    if nonreal < required {
        return CheckRecord::fail(
            name,
            format!("{nonreal} non-real roots, need at least {required} (delta {delta})"),
        );
    }
    if nonreal == 0 && delta > 2 {
        return CheckRecord::fail(
            name,
            format!("all roots real but delta {delta} > 2"),
        );
    }
    CheckRecord::pass(
        name,
        format!("{nonreal} non-real roots >= {required} (delta {delta})"),
    )
}

/// Radius of the containment disk centered at −1: `(2^n − 1)^{1/δ}`.
pub fn containment_radius(n: usize, delta: usize) -> f64 {
    (2f64.powi(n as i32) - 1.0).powf(1.0 / delta as f64)
}

/// Every root lies in the disk `|z + 1| ≤ (2^n − 1)^{1/δ}`, up to relative
/// numeric slack of 1e−9·radius.
pub fn check_root_bound(rs: &RootSet, n: usize, delta: usize) -> CheckRecord {
    let name = "root_disk_bound";
    let radius = containment_radius(n, delta);
    let slack = 1e-9 * radius;
    let center = Complex64::new(-1.0, 0.0);
    let mut worst = 0.0f64;
    // the deflated zero root has |0 + 1| = 1 ≤ radius (radius ≥ 1 always)
    if rs.zero_multiplicity > 0 {
        worst = 1.0;
    }
    for r in &rs.roots {
        worst = worst.max((r.value - center).norm());
    }
    CheckRecord::verdict(
        name,
        worst <= radius + slack,
        format!("max |z+1| = {worst:.6} vs radius {radius:.6} (n={n}, delta={delta})"),
    )
}

/// When `3δ ≥ 2n`, every integer root lies in {−3, −2, −1, 0}. Integer
/// roots are found exactly: the containment disk confines them to
/// `[−(n+1), 0]`, and each candidate is tested by exact evaluation.
pub fn check_integer_roots(p: &Poly, n: usize, delta: usize) -> CheckRecord {
    let name = "integer_roots";
    if 3 * delta < 2 * n {
        return CheckRecord::not_applicable(
            name,
            format!("hypothesis 3*delta >= 2n fails (delta={delta}, n={n})"),
        );
    }
    let mut found: Vec<i64> = Vec::new();
    for t in -(n as i64 + 1)..=0 {
        if p.eval_int(&BigInt::from(t)).is_zero() {
            found.push(t);
        }
    }
    let ok = found.iter().all(|&t| (-3..=0).contains(&t));
    CheckRecord::verdict(name, ok, format!("integer roots {found:?}"))
}

/// The five admissible values when a min-degree ≥ 3 graph has exactly
/// three distinct total domination roots.
fn three_root_targets() -> [Complex64; 5] {
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    [
        Complex64::new(0.0, 0.0),
        Complex64::new(-2.0, s2),
        Complex64::new(-2.0, -s2),
        Complex64::new(-1.5, s3 / 2.0),
        Complex64::new(-1.5, -s3 / 2.0),
    ]
}

/// If δ ≥ 3 and the root set has exactly three distinct members, each must
/// be one of {0, −2±√2 i, (−3±√3 i)/2}, within the cluster radius.
pub fn check_three_root_theorem(rs: &RootSet, delta: usize, cfg: &SolverConfig) -> CheckRecord {
    let name = "three_distinct_roots";
    if delta < 3 {
        return CheckRecord::not_applicable(name, format!("delta {delta} < 3"));
    }
    if rs.distinct_count() != 3 {
        return CheckRecord::not_applicable(
            name,
            format!("{} distinct roots, not 3", rs.distinct_count()),
        );
    }
    let targets = three_root_targets();
    let mut centers: Vec<Complex64> = rs.clusters.iter().map(|c| c.center).collect();
    if rs.zero_multiplicity > 0 {
        centers.push(Complex64::new(0.0, 0.0));
    }
    let mut worst = 0.0f64;
    for &z in &centers {
        let dist = targets
            .iter()
            .map(|t| (z - t).norm())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(dist);
        let tol = cfg.cluster_radius * 1f64.max(z.norm());
        if dist > tol {
            return CheckRecord::fail(
                name,
                format!("root {z} is {dist:.3e} from the nearest admissible value (tol {tol:.3e})"),
            );
        }
    }
    CheckRecord::pass(
        name,
        format!("all 3 distinct roots admissible (worst distance {worst:.3e})"),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

/// An exact intermediate-value certificate: opposite signs at two rational
/// points prove a real root strictly between them.
#[derive(Debug, Clone)]
pub struct IntervalCertificate {
    pub lower: BigRational,
    pub upper: BigRational,
    pub sign_lower: i8,
    pub sign_upper: i8,
    pub certified: bool,
    /// Set when the polynomial vanishes exactly at an endpoint.
    pub endpoint_root: Option<Endpoint>,
}

impl IntervalCertificate {
    pub fn to_check_record(&self, name: &str) -> CheckRecord {
        let span = format!("({}, {})", self.lower, self.upper);
        if let Some(e) = self.endpoint_root {
            return CheckRecord::fail(
                name,
                format!(
                    "root at {} endpoint of {span}; open-interval certificate unavailable",
                    match e {
                        Endpoint::Lower => "lower",
                        Endpoint::Upper => "upper",
                    }
                ),
            );
        }
        CheckRecord::verdict(
            name,
            self.certified,
            format!(
                "signs at {span}: {} / {}",
                self.sign_lower, self.sign_upper
            ),
        )
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact IVT certificate for a real root of `p` in the open interval
/// `(a, b)`. Requires `a < b`.
pub fn certify_real_root_interval(p: &Poly, a: &BigRational, b: &BigRational) -> IntervalCertificate {
    assert!(a < b, "interval endpoints out of order");
    let sign_lower = sign_of(&p.eval_exact(a));
    let sign_upper = sign_of(&p.eval_exact(b));
    let endpoint_root = if sign_lower == 0 {
        Some(Endpoint::Lower)
    } else if sign_upper == 0 {
        Some(Endpoint::Upper)
    } else {
        None
    };
    IntervalCertificate {
        lower: a.clone(),
        upper: b.clone(),
        sign_lower,
        sign_upper,
        certified: endpoint_root.is_none() && sign_lower != sign_upper,
        endpoint_root,
    }
}

/// Smallest dyadic rational with denominator `2^bits` strictly above `x`.
/// Used to replace irrational interval endpoints from inside: the result
/// exceeds `x` by at most `2^{−bits}`.
pub fn rational_above(x: f64, bits: u32) -> BigRational {
    let scale = 2f64.powi(bits as i32);
    let scaled = x * scale;
    assert!(
        scaled.abs() < 2f64.powi(52),
        "dyadic approximation would lose integrality"
    );
    let mut num = scaled.ceil();
    if num == scaled {
        num += 1.0;
    }
    BigRational::new(
        BigInt::from(num as i64),
        BigInt::one() << bits,
    )
}

/// `ln(n)·((ln n − 1)/ln n)^n` — the sequence whose decay to zero drives
/// the large-n interval root argument.
pub fn limit_sequence(n: u64) -> f64 {
    assert!(n >= 2);
    let ln = (n as f64).ln();
    ln * ((ln - 1.0) / ln).powi(n as i32)
}

/// Natural log of [`limit_sequence`], valid for n ≥ 3 (where the sequence
/// is positive). Monotonicity of the sequence is decided here: the direct
/// values underflow to 0 in doubles near n ≈ 6·10³, the logs never do.
pub fn limit_sequence_log(n: u64) -> f64 {
    assert!(n >= 3);
    let ln = (n as f64).ln();
    ln.ln() + n as f64 * ((ln - 1.0) / ln).ln()
}
