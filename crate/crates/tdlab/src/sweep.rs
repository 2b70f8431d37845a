//! Root sweeps over the two plotted families, exact interval certificates
//! for the friendship-family real roots, and the real-roots conjecture
//! explorer for `K_{1,n}[K_m]`.
//!
//! Everything here works from closed-form polynomials, so parameter ranges
//! are not limited by the 64-vertex graph construction cap.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::closed::{dt_friendship4, dt_lex_star_complete, ClosedFormError};
use crate::poly::Poly;
use crate::report::CheckRecord;
use crate::roots::{
    certify_real_root_interval, check_root_bound, find_roots, fujiwara_radius, rational_above,
    IntervalCertificate, RootSet, SolverConfig, SolverError,
};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error("root extraction failed for {context}: {source}")]
    Solver {
        context: String,
        source: SolverError,
    },
    #[error("cell m={m} n={n} has degree {degree}, above the budget {budget}")]
    Budget {
        m: usize,
        n: usize,
        degree: usize,
        budget: usize,
    },
    #[error("{0}")]
    InvalidRange(String),
}

/// The two families whose root constellations get plotted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFamily {
    /// `F_{n,4}`: n four-cycles sharing one vertex.
    Friendship4,
    /// `K_{1,n}[K_m]`: a star with every vertex blown up to a clique.
    StarLex { m: usize },
}

impl SweepFamily {
    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::Friendship4 => "friendship4",
            SweepFamily::StarLex { .. } => "star_lex",
        }
    }

    /// The family's second parameter (cycle length 4, or the clique order
    /// m) — the `m` column of sweep output.
    pub fn parameter(self) -> usize {
        match self {
            SweepFamily::Friendship4 => 4,
            SweepFamily::StarLex { m } => m,
        }
    }

    pub fn polynomial(self, n: usize) -> Result<Poly, ClosedFormError> {
        match self {
            SweepFamily::Friendship4 => dt_friendship4(n),
            SweepFamily::StarLex { m } => {
                if m < 1 {
                    return Err(ClosedFormError::InvalidParameter(
                        "clique order must be at least 1".into(),
                    ));
                }
                Ok(dt_lex_star_complete(n, m))
            }
        }
    }

    /// Order of the underlying graph (also the polynomial degree).
    pub fn order(self, n: usize) -> usize {
        match self {
            SweepFamily::Friendship4 => 3 * n + 1,
            SweepFamily::StarLex { m } => m * (n + 1),
        }
    }

    /// Minimum degree: cycle interiors give 2; in `K_{1,n}[K_m]` a leaf
    /// clique vertex has m−1 in-copy plus m center neighbors.
    pub fn min_degree(self, n: usize) -> usize {
        let _ = n;
        match self {
            SweepFamily::Friendship4 => 2,
            SweepFamily::StarLex { m } => 2 * m - 1,
        }
    }
}

/// Solved roots of one family member.
#[derive(Debug, Clone)]
pub struct SweepSeries {
    pub family: SweepFamily,
    pub n: usize,
    pub degree: usize,
    pub roots: RootSet,
}

/// One plotted/exported point: a distinct root with its multiplicity.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub family: &'static str,
    pub n: usize,
    pub m: usize,
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

/// Solves every member of the range in parallel; output in `n` order.
pub fn sweep_family(
    family: SweepFamily,
    n_lo: usize,
    n_hi: usize,
    cfg: &SolverConfig,
) -> Result<Vec<SweepSeries>, SweepError> {
    if n_lo < 1 || n_lo > n_hi {
        return Err(SweepError::InvalidRange(format!(
            "need 1 <= lo <= hi, got {n_lo}..{n_hi}"
        )));
    }
    (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let p = family.polynomial(n)?;
            let degree = p.degree().expect("family polynomials are nonzero");
            let roots = find_roots(&p, cfg).map_err(|source| SweepError::Solver {
                context: format!("{} n={n}", family.name()),
                source,
            })?;
            Ok(SweepSeries {
                family,
                n,
                degree,
                roots,
            })
        })
        .collect()
}

/// Flattens series into rows: per series the zero root first (exact
/// multiplicity from deflation), then the nonzero clusters in (re, im)
/// order.
pub fn sweep_rows(series: &[SweepSeries]) -> Vec<SweepRow> {
    let mut rows = Vec::new();
    for s in series {
        let (family, n, m) = (s.family.name(), s.n, s.family.parameter());
        if s.roots.zero_multiplicity > 0 {
            rows.push(SweepRow {
                family,
                n,
                m,
                re: 0.0,
                im: 0.0,
                multiplicity: s.roots.zero_multiplicity,
            });
        }
        for c in &s.roots.clusters {
            rows.push(SweepRow {
                family,
                n,
                m,
                re: c.center.re,
                im: c.center.im,
                multiplicity: c.multiplicity,
            });
        }
    }
    rows
}

/// Per-member data checks on a solved series: multiplicities sum to the
/// degree, nonreal roots pair up conjugate within 1e−8, and every root
/// obeys the disk bound for the member's (order, δ).
pub fn series_checks(s: &SweepSeries) -> Vec<CheckRecord> {
    let label = format!("{} n={}", s.family.name(), s.n);
    let mut out = Vec::with_capacity(3);

    let total = s.roots.total_multiplicity();
    out.push(CheckRecord::verdict(
        "root_count_equals_degree",
        total == s.degree,
        format!("{label}: multiplicities sum to {total}, degree {}", s.degree),
    ));

    let mut sym_ok = true;
    let mut sym_detail = format!("{label}: conjugate pairs within 1e-8");
    for c in &s.roots.clusters {
        if c.center.im == 0.0 {
            continue;
        }
        let mate = s.roots.clusters.iter().any(|d| {
            d.multiplicity == c.multiplicity
                && (d.center.re - c.center.re).abs() <= 1e-8
                && (d.center.im + c.center.im).abs() <= 1e-8
        });
        if !mate {
            sym_ok = false;
            sym_detail = format!(
                "{label}: no conjugate mate for {} + {}i (multiplicity {})",
                c.center.re, c.center.im, c.multiplicity
            );
            break;
        }
    }
    out.push(CheckRecord::verdict("conjugate_symmetry", sym_ok, sym_detail));

    let mut disk = check_root_bound(
        &s.roots,
        s.family.order(s.n),
        s.family.min_degree(s.n),
    );
    disk.details = format!("{label}: {}", disk.details);
    out.push(disk);
    out
}

/// Exact sign-change certificates for the friendship family's real roots,
/// evaluated on the zero-deflated polynomial (the x^{n+1} factor has
/// constant sign on both intervals, so deflation preserves sign changes
/// and keeps the origin root from masking them).
#[derive(Debug, Clone)]
pub struct FriendshipCertificates {
    pub n: usize,
    /// Root in (−1, 0); the sign change exists for even n.
    pub unit: Option<IntervalCertificate>,
    /// Root in (−n, −ln n), with the irrational endpoint replaced by a
    /// dyadic rational within 2^{−20} on the interior side.
    pub large: IntervalCertificate,
}

pub fn friendship4_certificates(n: usize) -> Result<FriendshipCertificates, SweepError> {
    if n < 2 {
        return Err(SweepError::InvalidRange(
            "certificates need n >= 2 so that -n < -ln n".into(),
        ));
    }
    let p = dt_friendship4(n)?;
    let h = p.shift_down(p.trailing_zero_order());
    let unit = (n % 2 == 0).then(|| {
        certify_real_root_interval(
            &h,
            &BigRational::from_integer(BigInt::from(-1)),
            &BigRational::zero(),
        )
    });
    let lower = BigRational::from_integer(-BigInt::from(n));
    let upper = -rational_above((n as f64).ln(), 20);
    let large = certify_real_root_interval(&h, &lower, &upper);
    Ok(FriendshipCertificates { n, unit, large })
}

/// Least `n0` such that the (−n, −ln n) certificate holds for *every*
/// `n0 ≤ n ≤ max_n`, with the per-n outcomes alongside. Small n behave
/// irregularly (the −2 root enters and leaves the interval), so the
/// stable threshold is reported rather than the first sporadic success.
pub fn stable_large_certificate_threshold(
    max_n: usize,
) -> Result<(Option<usize>, Vec<(usize, bool)>), SweepError> {
    let flags: Vec<(usize, bool)> = (2..=max_n)
        .map(|n| Ok((n, friendship4_certificates(n)?.large.certified)))
        .collect::<Result<_, SweepError>>()?;
    let mut threshold = None;
    for &(n, ok) in flags.iter().rev() {
        if ok {
            threshold = Some(n);
        } else {
            break;
        }
    }
    Ok((threshold, flags))
}

/// Parity classes of the no-real-roots conjecture for `K_{1,n}[K_m]`:
/// claimed for odd n and for even n with even m; even n with odd m is
/// outside the claim (and K_{1,2} really has the real root −2).
pub fn conjectured_class(m: usize, n: usize) -> bool {
    n % 2 == 1 || m % 2 == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellVerdict {
    Supported,
    Counterexample,
    OutOfClass,
}

impl std::fmt::Display for CellVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CellVerdict::Supported => "SUPPORTED",
            CellVerdict::Counterexample => "COUNTEREXAMPLE",
            CellVerdict::OutOfClass => "out-of-class",
        })
    }
}

/// One (m, n) cell of the conjecture scan. Real-root evidence comes from
/// two independent directions: distinct nonzero real solver clusters, and
/// an exact integer sweep (roots hit exactly, plus sign changes between
/// consecutive integers) over a window that certainly contains every real
/// root.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureCell {
    pub m: usize,
    pub n: usize,
    pub degree: usize,
    pub conjectured_class: bool,
    pub nonzero_real_distinct: usize,
    pub integer_roots: Vec<i64>,
    pub sign_changes: Vec<(i64, i64)>,
    pub max_residual: f64,
    pub verdict: CellVerdict,
    /// Coefficient text, recorded when the cell refutes the conjecture.
    pub polynomial: Option<String>,
}

/// Scans the (m, n) grid; every cell's polynomial degree m(n+1) must stay
/// within `budget`. Cells are solved in parallel, output in (m, n) order.
pub fn conjecture_scan(
    m_range: (usize, usize),
    n_range: (usize, usize),
    budget: usize,
    cfg: &SolverConfig,
) -> Result<Vec<ConjectureCell>, SweepError> {
    let (m_lo, m_hi) = m_range;
    let (n_lo, n_hi) = n_range;
    if m_lo < 1 || m_lo > m_hi || n_lo < 1 || n_lo > n_hi {
        return Err(SweepError::InvalidRange(format!(
            "need 1 <= lo <= hi in both ranges, got m {m_lo}..{m_hi}, n {n_lo}..{n_hi}"
        )));
    }
    let worst = m_hi * (n_hi + 1);
    if worst > budget {
        return Err(SweepError::Budget {
            m: m_hi,
            n: n_hi,
            degree: worst,
            budget,
        });
    }
    let grid: Vec<(usize, usize)> = (m_lo..=m_hi)
        .flat_map(|m| (n_lo..=n_hi).map(move |n| (m, n)))
        .collect();
    grid.into_par_iter()
        .map(|(m, n)| conjecture_cell(m, n, cfg))
        .collect()
}

fn conjecture_cell(m: usize, n: usize, cfg: &SolverConfig) -> Result<ConjectureCell, SweepError> {
    let p = dt_lex_star_complete(n, m);
    let degree = p.degree().expect("star lexicographic polynomial is nonzero");
    let roots = find_roots(&p, cfg).map_err(|source| SweepError::Solver {
        context: format!("star_lex m={m} n={n}"),
        source,
    })?;
    let nonzero_real_distinct = roots
        .clusters
        .iter()
        .filter(|c| c.center.im == 0.0)
        .count();

    // Exact integer sweep on the deflated polynomial (h(0) > 0, so the
    // origin root cannot mask a sign change near zero). Window: the root
    // disk |z+1| <= (2^N − 1)^{1/δ} intersected with the coefficient-based
    // modulus bound — the former explodes at δ = 1, the latter stays tame.
    let h = p.shift_down(p.trailing_zero_order());
    let order = m * (n + 1);
    let delta = 2 * m - 1;
    let disk_reach = 1.0 + ((2f64.powi(order as i32) - 1.0).powf(1.0 / delta as f64)).min(1e15);
    let reach = disk_reach.min(fujiwara_radius(&h)).min(1e6);
    let lo = -(reach.ceil() as i64) - 1;
    let mut integer_roots = Vec::new();
    let mut sign_changes = Vec::new();
    let mut prev: Option<(i64, i8)> = None;
    for k in lo..=0 {
        let v = h.eval_int(&BigInt::from(k));
        let s: i8 = if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        };
        if s == 0 {
            integer_roots.push(k);
        }
        if let Some((pk, ps)) = prev {
            if ps != 0 && s != 0 && ps != s {
                sign_changes.push((pk, k));
            }
        }
        prev = Some((k, s));
    }

    let real_evidence =
        nonzero_real_distinct > 0 || !integer_roots.is_empty() || !sign_changes.is_empty();
    let verdict = if !conjectured_class(m, n) {
        CellVerdict::OutOfClass
    } else if real_evidence {
        CellVerdict::Counterexample
    } else {
        CellVerdict::Supported
    };
    let polynomial = (verdict == CellVerdict::Counterexample).then(|| p.to_text());
    Ok(ConjectureCell {
        m,
        n,
        degree,
        conjectured_class: conjectured_class(m, n),
        nonzero_real_distinct,
        integer_roots,
        sign_changes,
        max_residual: roots.max_residual(),
        verdict,
        polynomial,
    })
}
