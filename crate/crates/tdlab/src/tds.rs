//! Ground-truth total domination polynomials by exhaustive subset sweep.
//!
//! The sweep visits all `2^n` vertex subsets in increasing mask order. For
//! each subset it ORs the precomputed neighborhood bitsets and compares
//! against the target set — branch-free except for the accept test. Counts
//! accumulate into a popcount-indexed `u64` array (safe: the largest count
//! at the order cap is C(28,14) < 2^63) and widen to big integers at the
//! end.

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::Poly;

/// Default ceiling on the order accepted by the enumeration sweep; keeps a
/// worst-case run at ~2^28 masks. Overridable per call.
pub const DEFAULT_ENUM_CAP: usize = 28;

/// Orders at and above this run the sweep on the global thread pool.
const PARALLEL_THRESHOLD: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdsError {
    #[error("order {order} exceeds the enumeration cap {cap}; use a closed form or raise the cap")]
    CapExceeded { order: usize, cap: usize },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph has an isolated vertex, so no total dominating set exists")]
    NoTotalDominatingSet,
    #[error("polynomial does not match the graph: {0}")]
    PolynomialMismatch(String),
    #[error("check requires a connected graph of order at least 2")]
    RequiresConnected,
}

fn vertex_set_mask(g: &Graph, verts: &[usize]) -> Result<u64, TdsError> {
    let mut mask = 0u64;
    for &v in verts {
        if v >= g.order() {
            return Err(TdsError::VertexOutOfRange { v, n: g.order() });
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

/// True iff every vertex of `g` has a neighbor in `d`.
pub fn is_total_dominating(g: &Graph, d: &[usize]) -> Result<bool, TdsError> {
    let mask = vertex_set_mask(g, d)?;
    Ok(is_total_dominating_mask(g, mask))
}

/// Bitmask variant of [`is_total_dominating`]; bits outside the graph are
/// ignored.
pub fn is_total_dominating_mask(g: &Graph, d: u64) -> bool {
    g.neighborhood_of_set(d & g.full_mask()) == g.full_mask()
}

/// Counts of accepted subsets by size over `[lo, hi)`, where a subset `D`
/// is accepted iff `targets ⊆ N(D)`.
fn sweep_counts(adj: &[u64], targets: u64, lo: u64, hi: u64) -> [u64; 65] {
    let mut counts = [0u64; 65];
    for mask in lo..hi {
        let mut rest = mask;
        let mut nbhd = 0u64;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nbhd |= adj[v];
        }
        if nbhd & targets == targets {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

fn counts_to_poly(counts: &[u64; 65], n: usize) -> Poly {
    Poly::from_coeffs(
        counts
            .iter()
            .take(n + 1)
            .map(|&c| BigInt::from(c))
            .collect(),
    )
}

fn sweep(g: &Graph, targets: u64, cap: usize) -> Result<Poly, TdsError> {
    let n = g.order();
    if n > cap {
        return Err(TdsError::CapExceeded { order: n, cap });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
    let end = if n == 64 { u64::MAX } else { 1u64 << n };
    let counts = if n >= PARALLEL_THRESHOLD {
        // Partition the mask space into contiguous ranges; each worker owns
        // a private count array, merged by addition — deterministic
        // regardless of schedule.
        let chunk = 1u64 << 18;
        let chunks = end.div_ceil(chunk);
        (0..chunks)
            .into_par_iter()
            .map(|i| {
                let lo = i * chunk;
                let hi = (lo + chunk).min(end);
                sweep_counts(&adj, targets, lo, hi)
            })
            .reduce(
                || [0u64; 65],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b.iter()) {
                        *x += y;
                    }
                    a
                },
            )
    } else {
        sweep_counts(&adj, targets, 0, end)
    };
    Ok(counts_to_poly(&counts, n))
}

/// The total domination polynomial, exactly. Graphs with an isolated
/// vertex yield the zero polynomial (no total dominating set of any size).
pub fn dt_polynomial(g: &Graph) -> Result<Poly, TdsError> {
    dt_polynomial_with_cap(g, DEFAULT_ENUM_CAP)
}

pub fn dt_polynomial_with_cap(g: &Graph, cap: usize) -> Result<Poly, TdsError> {
    if g.has_isolated_vertex() {
        if g.order() > cap {
            return Err(TdsError::CapExceeded { order: g.order(), cap });
        }
        return Ok(Poly::zero());
    }
    sweep(g, g.full_mask(), cap)
}

/// Partial-target polynomial: the coefficient of `x^k` counts `k`-subsets
/// `D` with `targets ⊆ N(D)`. With `targets = V` this is the total
/// domination polynomial; with an empty target set every subset counts.
pub fn dt_partial(g: &Graph, targets: &[usize]) -> Result<Poly, TdsError> {
    let mask = vertex_set_mask(g, targets)?;
    dt_partial_mask(g, mask)
}

pub fn dt_partial_mask(g: &Graph, targets: u64) -> Result<Poly, TdsError> {
    dt_partial_mask_with_cap(g, targets, DEFAULT_ENUM_CAP)
}

pub fn dt_partial_mask_with_cap(g: &Graph, targets: u64, cap: usize) -> Result<Poly, TdsError> {
    sweep(g, targets & g.full_mask(), cap)
}

/// Total domination number: the least `k` with `d_t(G, k) > 0`.
pub fn gamma_t(g: &Graph) -> Result<usize, TdsError> {
    gamma_t_with_cap(g, DEFAULT_ENUM_CAP)
}

pub fn gamma_t_with_cap(g: &Graph, cap: usize) -> Result<usize, TdsError> {
    if g.has_isolated_vertex() {
        return Err(TdsError::NoTotalDominatingSet);
    }
    let p = dt_polynomial_with_cap(g, cap)?;
    Ok(p.trailing_zero_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, FamilySpec, SmallGraphs};
    use num_traits::{One, Zero};

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn dt(s: &str) -> Poly {
        dt_polynomial(&fam(s)).unwrap()
    }

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_i64(coeffs)
    }

    #[test]
    fn membership_checks() {
        let k2 = fam("complete:2");
        assert!(is_total_dominating(&k2, &[0, 1]).unwrap());
        // A vertex does not dominate itself through an open neighborhood.
        assert!(!is_total_dominating(&k2, &[0]).unwrap());
        let c4 = fam("cycle:4");
        // {0,2} is independent in C_4: N({0,2}) = {1,3} ≠ V.
        assert!(!is_total_dominating(&c4, &[0, 2]).unwrap());
        assert!(is_total_dominating(&c4, &[0, 1]).unwrap());
        assert_eq!(
            is_total_dominating(&c4, &[4]).unwrap_err(),
            TdsError::VertexOutOfRange { v: 4, n: 4 }
        );
    }

    #[test]
    fn known_polynomials() {
        // D_t(K_n) = (x+1)^n − nx − 1
        assert_eq!(dt("complete:4"), p(&[0, 0, 6, 4, 1]));
        assert_eq!(dt("complete:3"), p(&[0, 0, 3, 1]));
        // D_t(K_{1,3}) = x((x+1)^3 − 1)
        assert_eq!(dt("star:3"), p(&[0, 0, 3, 3, 1]));
        // C_4: the four edges are the only 2-element total dominating sets.
        assert_eq!(dt("cycle:4"), p(&[0, 0, 4, 4, 1]));
        // P_3: both TDSs of size 2 contain the middle vertex.
        assert_eq!(dt("path:3"), p(&[0, 0, 2, 1]));
    }

    #[test]
    fn isolated_vertices_zero_the_polynomial_and_fail_gamma() {
        let g = fam("empty:3");
        assert!(dt_polynomial(&g).unwrap().is_zero());
        assert_eq!(gamma_t(&g).unwrap_err(), TdsError::NoTotalDominatingSet);
    }

    #[test]
    fn gamma_t_values() {
        assert_eq!(gamma_t(&fam("complete:5")).unwrap(), 2);
        assert_eq!(gamma_t(&fam("cycle:4")).unwrap(), 2);
        assert_eq!(gamma_t(&fam("path:6")).unwrap(), 4);
        assert_eq!(gamma_t(&fam("helm:3")).unwrap(), 3);
    }

    #[test]
    fn partial_targets() {
        let g = fam("gadget_g:1"); // triangle with outer vertex 2
        assert_eq!(dt_partial(&g, &[2]).unwrap(), p(&[0, 2, 3, 1]));
        // Full target set reproduces the plain polynomial.
        assert_eq!(
            dt_partial(&g, &[0, 1, 2]).unwrap(),
            dt_polynomial(&g).unwrap()
        );
        // Empty target set counts every subset: (1+x)^n.
        let k2 = fam("complete:2");
        assert_eq!(dt_partial(&k2, &[]).unwrap(), p(&[1, 2, 1]));
    }

    #[test]
    fn cap_is_enforced() {
        let g = fam("complete:6");
        assert_eq!(
            dt_polynomial_with_cap(&g, 5).unwrap_err(),
            TdsError::CapExceeded { order: 6, cap: 5 }
        );
    }

    #[test]
    fn disjoint_union_multiplies() {
        let pairs = [("complete:2", "complete:2"), ("path:3", "cycle:3"), ("cycle:4", "star:2")];
        for (a, b) in pairs {
            let u = disjoint_union(&fam(a), &fam(b)).unwrap();
            assert_eq!(
                dt_polynomial(&u).unwrap(),
                dt(a).mul(&dt(b)),
                "{a} + {b}"
            );
        }
    }

    #[test]
    fn total_count_matches_independent_loop() {
        // Independent re-count: per-vertex domination test instead of the
        // accumulated neighborhood union.
        for s in ["complete:4", "cycle:5", "helm:3", "star:4", "path:5"] {
            let g = fam(s);
            let n = g.order();
            let mut count = 0u64;
            for mask in 0..(1u64 << n) {
                let ok = (0..n).all(|v| g.neighbors(v) & mask != 0);
                count += ok as u64;
            }
            let total = dt_polynomial(&g)
                .unwrap()
                .eval_int(&num_bigint::BigInt::one());
            assert_eq!(total, num_bigint::BigInt::from(count), "{s}");
        }
    }

    #[test]
    fn full_set_dominates_iff_no_isolated_vertex() {
        for g in SmallGraphs::new(4, false, 0).unwrap() {
            let d = dt_polynomial(&g).unwrap();
            let full_coeff = d.coeff(4);
            if g.has_isolated_vertex() {
                assert!(full_coeff.is_zero());
            } else {
                assert!(full_coeff.is_one());
            }
        }
    }

    #[test]
    fn partial_is_monotone_in_the_target_set() {
        let g = fam("gadget_g:2");
        let small = dt_partial(&g, &[4]).unwrap();
        let large = dt_partial(&g, &[4, 5]).unwrap();
        // Fewer targets ⇒ coefficientwise at least as many accepted sets.
        for i in 0..=g.order() {
            assert!(small.coeff(i) >= large.coeff(i));
        }
    }

    #[test]
    fn parallel_sweep_agrees_with_serial() {
        // An order-20 instance crosses the parallel threshold; its closed
        // form is known: corona of C_10 with K_1 has D_t = x^10 (1+x)^10.
        let c10 = fam("cycle:10");
        let g = crate::graph::corona(&c10, &fam("complete:1")).unwrap();
        let dt = dt_polynomial(&g).unwrap();
        let expect = Poly::binomial_pow(10).shift_up(10);
        assert_eq!(dt, expect);
    }
}
