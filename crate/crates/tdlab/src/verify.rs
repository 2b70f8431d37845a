//! Theorem verification: per-graph check batteries, family verification
//! with closed-form cross-checks, and exhaustive small-graph corpus scans.
//!
//! Corpus scans deduplicate by *signature* — the tuple (order, minimum
//! degree, support count, coefficient vector). Every check in the battery
//! depends only on that tuple, so one exemplar per signature certifies the
//! whole class; the record keeps the class size and the smallest adjacency
//! mask so any exemplar can be rebuilt.

use std::collections::HashMap;

use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use num_bigint::BigInt;

use crate::closed::{closed_form, ClosedFormError};
use crate::graph::{
    gadget_outer_mask, graph_from_edge_mask, FamilySpec, Graph, GraphMetrics, SmallGraphs,
};
use crate::poly::Poly;
use crate::report::{CheckRecord, CheckStatus};
use crate::roots::{
    check_integer_roots, check_nonreal_count, check_root_bound, check_three_root_theorem,
    find_roots, SolverConfig,
};
use crate::tds::{dt_partial_mask_with_cap, dt_polynomial_with_cap, TdsError, DEFAULT_ENUM_CAP};

/// All checks run on one graph (or one corpus signature class).
#[derive(Debug, Clone, Serialize)]
pub struct GraphRecord {
    /// Human-readable identity; corpus records use `n=<order> mask=<hex>`
    /// so the exemplar can be rebuilt with [`graph_from_edge_mask`].
    pub descriptor: String,
    pub metrics: GraphMetrics,
    /// Labeled graphs sharing this record's signature (1 outside corpus
    /// scans).
    pub graph_count: u64,
    /// Coefficient text of the total domination polynomial.
    pub polynomial: String,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Copy, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    /// Labeled graphs covered (including signature-class members).
    pub graphs: u64,
    pub records: usize,
    pub checks_pass: usize,
    pub checks_fail: usize,
    pub checks_not_applicable: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub target: String,
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_records(target: String, records: Vec<GraphRecord>) -> Self {
        let mut summary = Summary::default();
        summary.records = records.len();
        for r in &records {
            summary.graphs += r.graph_count;
            for c in &r.checks {
                match c.status {
                    CheckStatus::Pass => summary.checks_pass += 1,
                    CheckStatus::Fail => summary.checks_fail += 1,
                    CheckStatus::NotApplicable => summary.checks_not_applicable += 1,
                }
            }
        }
        VerificationReport {
            target,
            records,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.checks_fail == 0
    }

    /// Records containing at least one failing check.
    pub fn failing_records(&self) -> impl Iterator<Item = &GraphRecord> {
        self.records
            .iter()
            .filter(|r| r.checks.iter().any(|c| c.status.is_fail()))
    }
}

/// Coefficient-level consequences of the structure theorems, for a
/// connected graph of order ≥ 2 and its exact polynomial:
///
/// * the coefficient of `x^{n−1}` equals `n − r` (r = support vertices);
/// * coefficients equal `C(n,i)` for `i ≥ n−δ+1`;
/// * coefficients are strictly below `C(n,i)` for `2 ≤ i ≤ n−δ`;
/// * `(1+x)^n − p` has nonnegative coefficients and degree exactly `n−δ`;
/// * supersets of total dominating sets totally dominate.
pub fn coefficient_checks(g: &Graph, p: &Poly) -> Result<Vec<CheckRecord>, TdsError> {
    let m = g.metrics();
    let n = m.order;
    if !m.connected || n < 2 {
        return Err(TdsError::RequiresConnected);
    }
    if p.degree() != Some(n) || !p.coeff(0).is_zero() || !p.coeff(n).is_one() {
        return Err(TdsError::PolynomialMismatch(format!(
            "expected a degree-{n} polynomial with zero constant term and unit leading \
             coefficient, got {p}"
        )));
    }
    let delta = m.min_degree;
    let r = m.support_count;
    let mut out = Vec::with_capacity(5);

    let penultimate = p.coeff(n - 1);
    out.push(CheckRecord::verdict(
        "penultimate_coefficient",
        penultimate == BigInt::from(n - r),
        format!("d_t(n-1) = {penultimate}, n - r = {}", n - r),
    ));

    let mut tail_ok = true;
    let mut tail_detail = String::new();
    for i in (n - delta + 1)..=n {
        let expect = binomial(BigInt::from(n), BigInt::from(i));
        if p.coeff(i) != expect {
            tail_ok = false;
            tail_detail = format!("d_t({i}) = {} but C({n},{i}) = {expect}", p.coeff(i));
            break;
        }
    }
    out.push(CheckRecord::verdict(
        "binomial_tail",
        tail_ok,
        if tail_ok {
            format!("d_t(i) = C(n,i) for {} <= i <= {n}", n - delta + 1)
        } else {
            tail_detail
        },
    ));

    let mut strict_ok = true;
    let mut strict_detail = format!("d_t(i) < C(n,i) for 2 <= i <= {}", n - delta);
    for i in 2..=n.saturating_sub(delta) {
        let bound = binomial(BigInt::from(n), BigInt::from(i));
        if p.coeff(i) >= bound {
            strict_ok = false;
            strict_detail = format!("d_t({i}) = {} not below C({n},{i}) = {bound}", p.coeff(i));
            break;
        }
    }
    if n.saturating_sub(delta) < 2 {
        strict_detail = "no indices in range (delta > n - 2)".to_string();
    }
    out.push(CheckRecord::verdict(
        "strict_below_binomial",
        strict_ok,
        strict_detail,
    ));

    let f = p.tail_decompose(n).map_err(|e| {
        TdsError::PolynomialMismatch(format!("tail decomposition failed: {e}"))
    })?;
    let nonneg = f.coeffs().iter().all(|c| !c.is_negative());
    let degree_ok = f.degree() == Some(n - delta);
    out.push(CheckRecord::verdict(
        "tail_remainder",
        nonneg && degree_ok,
        format!(
            "(1+x)^n - p has degree {:?} (want {}), nonnegative coefficients: {nonneg}",
            f.degree().map(|d| d as isize).unwrap_or(-1),
            n - delta
        ),
    ));

    let mut closure_ok = true;
    let mut closure_detail = "positive coefficients form a suffix".to_string();
    for i in 1..n {
        if p.coeff(i) > BigInt::zero() && p.coeff(i + 1).is_zero() {
            closure_ok = false;
            closure_detail = format!("d_t({i}) = {} > 0 but d_t({}) = 0", p.coeff(i), i + 1);
            break;
        }
    }
    out.push(CheckRecord::verdict(
        "superset_closure",
        closure_ok,
        closure_detail,
    ));
    Ok(out)
}

/// Full battery for one graph: coefficient checks, the γ_t ≤ n/2 bound for
/// δ ≥ 3, and the root-location checks.
pub fn verify_graph(
    descriptor: String,
    g: &Graph,
    cfg: &SolverConfig,
    cap: usize,
) -> Result<GraphRecord, TdsError> {
    let metrics = g.metrics();
    let p = dt_polynomial_with_cap(g, cap)?;
    let mut checks = Vec::new();

    if p.is_zero() {
        checks.push(CheckRecord::not_applicable(
            "total_domination",
            "graph has an isolated vertex: no total dominating set of any size",
        ));
        return Ok(GraphRecord {
            descriptor,
            metrics,
            graph_count: 1,
            polynomial: p.to_text(),
            checks,
        });
    }

    if metrics.connected && metrics.order >= 2 {
        checks.extend(coefficient_checks(g, &p)?);
    } else {
        checks.push(CheckRecord::not_applicable(
            "coefficient_battery",
            "requires a connected graph of order at least 2",
        ));
    }

    let gamma = p.trailing_zero_order();
    if metrics.min_degree >= 3 {
        checks.push(CheckRecord::verdict(
            "gamma_t_half_order",
            2 * gamma <= metrics.order,
            format!("gamma_t = {gamma}, order = {}", metrics.order),
        ));
    } else {
        checks.push(CheckRecord::not_applicable(
            "gamma_t_half_order",
            format!("delta {} < 3", metrics.min_degree),
        ));
    }

    match find_roots(&p, cfg) {
        Ok(rs) => {
            if metrics.connected && metrics.order >= 2 {
                checks.push(check_nonreal_count(&rs, metrics.min_degree));
            } else {
                checks.push(CheckRecord::not_applicable(
                    "nonreal_root_count",
                    "requires a connected graph of order at least 2",
                ));
            }
            checks.push(check_root_bound(&rs, metrics.order, metrics.min_degree));
            checks.push(check_three_root_theorem(&rs, metrics.min_degree, cfg));
        }
        Err(e) => checks.push(CheckRecord::fail(
            "root_solver",
            format!("root extraction failed: {e}"),
        )),
    }
    checks.push(check_integer_roots(&p, metrics.order, metrics.min_degree));

    Ok(GraphRecord {
        descriptor,
        metrics,
        graph_count: 1,
        polynomial: p.to_text(),
        checks,
    })
}

fn closed_form_checks(spec: &FamilySpec, g: &Graph, cfg: &SolverConfig, cap: usize) -> Vec<CheckRecord> {
    let _ = cfg;
    let mut out = Vec::new();
    match closed_form(spec) {
        Ok(cf) => {
            if let FamilySpec::GadgetG { n } = *spec {
                let partial = dt_partial_mask_with_cap(g, gadget_outer_mask(n), cap);
                match partial {
                    Ok(partial) => out.push(CheckRecord::verdict(
                        "partial_product_form",
                        partial == cf,
                        format!(
                            "partial-target polynomial (targets = outer vertices) {} vs \
                             (x(x+1)(x+2))^n = {}",
                            partial.to_text(),
                            cf.to_text()
                        ),
                    )),
                    Err(e) => out.push(CheckRecord::not_applicable(
                        "partial_product_form",
                        format!("{e}"),
                    )),
                }
                // The product form counts sets that totally dominate the
                // outer vertices only; at n=1 the gadget is a triangle and
                // the full-target polynomial x^3+3x^2 differs from the
                // product x^3+3x^2+2x. Recorded so nobody reconciles the
                // two readings silently.
                let note = match dt_polynomial_with_cap(g, cap) {
                    Ok(full) if full == cf => {
                        format!("full-target polynomial coincides with the product form: {full}")
                    }
                    Ok(full) => format!(
                        "full-target polynomial {} differs from the product form {} — the \
                         verified identity reads the product as the partial-target count",
                        full.to_text(),
                        cf.to_text()
                    ),
                    Err(e) => format!("full-target polynomial unavailable: {e}"),
                };
                out.push(CheckRecord::not_applicable("gadget_reading_note", note));
            } else {
                match dt_polynomial_with_cap(g, cap) {
                    Ok(oracle) => out.push(CheckRecord::verdict(
                        "closed_form_match",
                        oracle == cf,
                        format!("enumeration {} vs closed form {}", oracle.to_text(), cf.to_text()),
                    )),
                    Err(e) => out.push(CheckRecord::not_applicable(
                        "closed_form_match",
                        format!("enumeration unavailable: {e}"),
                    )),
                }
                // The helm polynomials factor as x^n (x+1)^{mn+1}; recover
                // the multiplicities symbolically by exact division rather
                // than trusting the float solver.
                if let Some((zero_want, one_want)) = match *spec {
                    FamilySpec::Helm { n } => Some((n, n + 1)),
                    FamilySpec::GeneralizedHelm { n, m } => Some((n, m * n + 1)),
                    _ => None,
                } {
                    let zeros = cf.integer_root_multiplicity(0);
                    let ones = cf.integer_root_multiplicity(-1);
                    out.push(CheckRecord::verdict(
                        "exact_linear_factors",
                        zeros == zero_want
                            && ones == one_want
                            && cf.degree() == Some(zero_want + one_want),
                        format!(
                            "exact division finds x^{zeros} (x+1)^{ones}; \
                             expected x^{zero_want} (x+1)^{one_want} with nothing left over"
                        ),
                    ));
                }
            }
        }
        Err(ClosedFormError::NoClosedForm { kind }) => out.push(CheckRecord::not_applicable(
            "closed_form_match",
            format!("no closed form for {kind}"),
        )),
        Err(e) => out.push(CheckRecord::fail(
            "closed_form_match",
            format!("closed form construction failed: {e}"),
        )),
    }
    out
}

/// Verifies one family instance: the standard battery plus closed-form
/// cross-checks where a closed form exists.
pub fn verify_family(
    spec: &FamilySpec,
    cfg: &SolverConfig,
    cap: usize,
) -> Result<VerificationReport, TdsError> {
    let g = spec
        .build()
        .map_err(|e| TdsError::PolynomialMismatch(format!("cannot build {spec}: {e}")))?;
    let mut record = verify_graph(spec.to_string(), &g, cfg, cap)?;
    record.checks.extend(closed_form_checks(spec, &g, cfg, cap));
    Ok(VerificationReport::from_records(
        spec.to_string(),
        vec![record],
    ))
}

/// Signature of a corpus graph: everything the check battery depends on.
#[derive(PartialEq, Eq, Hash, Clone)]
struct Signature {
    delta: u8,
    support: u8,
    counts: [u64; 8],
}

/// Exhaustive verification of every labeled graph of the given orders.
/// Graphs are grouped by signature; one exemplar per class runs the full
/// battery. `connected_only=false` also scans disconnected graphs (their
/// connectivity-dependent checks report not-applicable).
pub fn verify_corpus(
    orders: &[usize],
    connected_only: bool,
    min_degree: usize,
    cfg: &SolverConfig,
) -> Result<VerificationReport, TdsError> {
    let mut records: Vec<GraphRecord> = Vec::new();
    for &n in orders {
        // Scan all adjacency masks in parallel chunks, aggregating
        // signature -> (class size, smallest mask).
        let total = SmallGraphs::mask_count(n);
        let chunk: u64 = 1 << 14;
        let chunks = total.div_ceil(chunk);
        let maps: Vec<HashMap<Signature, (u64, u64)>> = (0..chunks)
            .into_par_iter()
            .map(|ci| {
                let lo = ci * chunk;
                let hi = (lo + chunk).min(total);
                let mut local: HashMap<Signature, (u64, u64)> = HashMap::new();
                let stream = SmallGraphs::new(n, connected_only, min_degree)
                    .expect("order validated above")
                    .mask_range(lo, hi);
                for g in stream {
                    let mut counts = [0u64; 8];
                    for mask in 0..(1u64 << n) {
                        if is_tds_mask(&g, mask) {
                            counts[mask.count_ones() as usize] += 1;
                        }
                    }
                    let sig = Signature {
                        delta: g.min_degree() as u8,
                        support: g.support_count() as u8,
                        counts,
                    };
                    let mask = encode_mask(&g);
                    let entry = local.entry(sig).or_insert((0, u64::MAX));
                    entry.0 += 1;
                    entry.1 = entry.1.min(mask);
                }
                local
            })
            .collect();
        let mut merged: HashMap<Signature, (u64, u64)> = HashMap::new();
        for m in maps {
            for (sig, (count, mask)) in m {
                let e = merged.entry(sig).or_insert((0, u64::MAX));
                e.0 += count;
                e.1 = e.1.min(mask);
            }
        }
        let mut classes: Vec<(Signature, (u64, u64))> = merged.into_iter().collect();
        classes.sort_by_key(|(_, (_, mask))| *mask);
        let mut order_records: Vec<GraphRecord> = classes
            .into_par_iter()
            .map(|(_, (count, mask))| {
                let g = graph_from_edge_mask(n, mask);
                let mut rec = verify_graph(
                    format!("n={n} mask={mask:#x}"),
                    &g,
                    cfg,
                    DEFAULT_ENUM_CAP,
                )?;
                rec.graph_count = count;
                Ok(rec)
            })
            .collect::<Result<_, TdsError>>()?;
        records.append(&mut order_records);
    }
    let target = format!(
        "corpus orders {orders:?}{}{}",
        if connected_only { " connected" } else { "" },
        if min_degree > 0 {
            format!(" min_degree={min_degree}")
        } else {
            String::new()
        }
    );
    Ok(VerificationReport::from_records(target, records))
}

/// Inline total-domination test used by the corpus scan's hot loop.
fn is_tds_mask(g: &Graph, d: u64) -> bool {
    let mut nbhd = 0u64;
    let mut rest = d;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        nbhd |= g.neighbors(v);
    }
    nbhd == g.full_mask()
}

/// Re-encodes a graph as its adjacency mask (inverse of
/// [`graph_from_edge_mask`]).
fn encode_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    let mut bit = 0;
    for v in 1..g.order() {
        for u in 0..v {
            if g.has_edge(u, v) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}
