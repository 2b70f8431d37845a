//! Closed-form total domination polynomials for the supported families,
//! plus the product/join identities. Everything is expanded to exact
//! coefficient form immediately; identity checks downstream compare
//! coefficients, never floats.

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{FamilySpec, GraphError};
use crate::poly::Poly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error(
        "no closed form for {kind}; supported: complete, star, helm, generalized_helm, \
         gadget_g, friendship with q=4"
    )]
    NoClosedForm { kind: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(1+x)^k − 1`: the domination polynomial of K_k (every nonempty subset
/// dominates), a building block of the lexicographic formulas.
fn dom_complete(k: usize) -> Poly {
    Poly::binomial_pow(k).sub(&Poly::one())
}

/// `D_t(K_n) = (1+x)^n − nx − 1`.
pub fn dt_complete(n: usize) -> Poly {
    Poly::binomial_pow(n)
        .sub(&Poly::from_coeffs(vec![BigInt::from(1), BigInt::from(n)]))
}

/// `D_t(K_{1,n}) = x((1+x)^n − 1)`.
pub fn dt_star(n: usize) -> Poly {
    dom_complete(n).shift_up(1)
}

/// The closed-form polynomial for a supported family instance.
///
/// For `gadget_g:n` the value is `(x(x+1)(x+2))^n`, which equals the
/// partial-target polynomial with the outer vertices as targets (see
/// [`crate::tds::dt_partial`]); the plain total domination polynomial of
/// the gadget differs at `n = 1`.
pub fn closed_form(spec: &FamilySpec) -> Result<Poly, ClosedFormError> {
    spec.validate()?;
    match *spec {
        FamilySpec::Complete { n } => Ok(dt_complete(n)),
        FamilySpec::Star { n } => Ok(dt_star(n)),
        // x^n (1+x)^{n+1}
        FamilySpec::Helm { n } => Ok(Poly::binomial_pow(n + 1).shift_up(n)),
        // x^n (1+x)^{mn+1}
        FamilySpec::GeneralizedHelm { n, m } => Ok(Poly::binomial_pow(m * n + 1).shift_up(n)),
        // (x(x+1)(x+2))^n
        FamilySpec::GadgetG { n } => Ok(Poly::from_i64(&[0, 2, 3, 1]).pow(n)),
        FamilySpec::Friendship { n, q: 4 } => dt_friendship4(n),
        ref other => Err(ClosedFormError::NoClosedForm {
            kind: other.kind_name().to_string(),
        }),
    }
}

/// `D_t(F_{n,4}) = x^{n+1} (x+2)^n ((1+x)^n + x^{n−1})`: `n` four-cycles
/// sharing one vertex. Works directly on the polynomial, so `n` is not
/// limited by the 64-vertex graph construction cap — sweeps rely on this.
pub fn dt_friendship4(n: usize) -> Result<Poly, ClosedFormError> {
    if n < 1 {
        return Err(ClosedFormError::InvalidParameter(
            "friendship family needs at least one cycle".into(),
        ));
    }
    let inner = Poly::binomial_pow(n).add(&Poly::monomial(n - 1));
    Ok(Poly::from_i64(&[2, 1]).pow(n).mul(&inner).shift_up(n + 1))
}

/// `D_t(G ∘ K̄_m) = x^n (1+x)^{mn}` for any graph `G` of order `n ≥ 2` —
/// the corona with an edgeless graph depends only on the order of `G`.
pub fn dt_corona_empty(n: usize, m: usize) -> Result<Poly, ClosedFormError> {
    if n < 2 {
        return Err(ClosedFormError::InvalidParameter(format!(
            "corona formula requires base order at least 2, got {n}"
        )));
    }
    if m < 1 {
        return Err(ClosedFormError::InvalidParameter(
            "corona formula requires at least one pendant copy".into(),
        ));
    }
    Ok(Poly::binomial_pow(m * n).shift_up(n))
}

/// `D_t(G ∨ H) = ((1+x)^m − 1)((1+x)^n − 1) + D_t(G) + D_t(H)` where `m`,
/// `n` are the orders. Operands with isolated vertices contribute the zero
/// polynomial, which the formula handles as-is.
pub fn dt_join(p_g: &Poly, p_h: &Poly, m: usize, n: usize) -> Poly {
    debug_assert!(p_g.degree().is_none_or(|d| d <= m));
    debug_assert!(p_h.degree().is_none_or(|d| d <= n));
    dom_complete(m).mul(&dom_complete(n)).add(p_g).add(p_h)
}

/// `D_t(K_m[K_n])` by substitution: `D_t(K_m, y)` at `y = (1+x)^n − 1`,
/// plus `m·D_t(K_n, x)`. Algebraically equal to `D_t(K_{mn})`.
pub fn dt_lex_complete(m: usize, n: usize) -> Poly {
    dt_complete(m)
        .compose(&dom_complete(n))
        .add(&dt_complete(n).scale(&BigInt::from(m)))
}

/// `D_t(K_{1,n}[K_m]) = (1+x)^{mn}((1+x)^m − 1) + ((1+x)^m − mx − 1)^n − mx`.
pub fn dt_lex_star_complete(n: usize, m: usize) -> Poly {
    let mx = Poly::from_coeffs(vec![BigInt::from(0), BigInt::from(m)]);
    Poly::binomial_pow(m * n)
        .mul(&dom_complete(m))
        .add(&dt_complete(m).pow(n))
        .sub(&mx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, corona, gadget_outer_mask, join, lexicographic, Graph};
    use crate::tds::{dt_partial_mask, dt_polynomial};

    fn fam(s: &str) -> Graph {
        build_family(&s.parse().unwrap()).unwrap()
    }

    fn cf(s: &str) -> Poly {
        closed_form(&s.parse().unwrap()).unwrap()
    }

    fn dt(s: &str) -> Poly {
        dt_polynomial(&fam(s)).unwrap()
    }

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_i64(coeffs)
    }

    #[test]
    fn closed_form_fixed_points() {
        // helm:3 → x³(x+1)⁴
        assert_eq!(cf("helm:3").to_text(), "0 0 0 1 4 6 4 1");
        // friendship:1,4 → x²(x+2)² (the 4-cycle)
        assert_eq!(cf("friendship:1,4"), p(&[0, 0, 4, 4, 1]));
        assert_eq!(cf("complete:2"), p(&[0, 0, 1]));
        assert_eq!(cf("gadget_g:1"), p(&[0, 2, 3, 1]));
    }

    #[test]
    fn unsupported_kinds_are_refused() {
        for s in ["cycle:5", "wheel:4", "path:5", "empty:3", "friendship:2,3"] {
            let err = closed_form(&s.parse().unwrap()).unwrap_err();
            assert!(matches!(err, ClosedFormError::NoClosedForm { .. }), "{s}");
        }
        // Invalid parameters surface as parameter errors, not missing forms.
        assert!(matches!(
            closed_form(&FamilySpec::Helm { n: 2 }),
            Err(ClosedFormError::Graph(GraphError::InvalidParameter(_)))
        ));
    }

    #[test]
    fn oracle_equality_small_orders() {
        // Enumeration agrees exactly with every closed form at desk scale.
        for s in [
            "complete:2",
            "complete:5",
            "star:1",
            "star:4",
            "helm:3",
            "helm:4",
            "generalized_helm:3,2",
            "friendship:1,4",
            "friendship:2,4",
        ] {
            assert_eq!(cf(s), dt_polynomial(&fam(s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn gadget_closed_form_matches_partial_polynomial() {
        for n in 1..=3usize {
            let s = format!("gadget_g:{n}");
            let g = fam(&s);
            let partial = dt_partial_mask(&g, gadget_outer_mask(n)).unwrap();
            assert_eq!(partial, cf(&s), "{s}");
        }
        // The full-target polynomial differs at n=1 (the gadget is a
        // triangle): x³+3x² vs x³+3x²+2x.
        let g1 = fam("gadget_g:1");
        assert_eq!(dt_polynomial(&g1).unwrap(), p(&[0, 0, 3, 1]));
        assert_ne!(dt_polynomial(&g1).unwrap(), cf("gadget_g:1"));
    }

    #[test]
    fn corona_formula_is_base_graph_independent() {
        let k1 = fam("complete:1");
        let via_c3 = dt_polynomial(&corona(&fam("cycle:3"), &k1).unwrap()).unwrap();
        let via_p3 = dt_polynomial(&corona(&fam("path:3"), &k1).unwrap()).unwrap();
        let formula = dt_corona_empty(3, 1).unwrap();
        assert_eq!(via_c3, formula);
        assert_eq!(via_p3, formula);
        // x²(1+x)⁴
        assert_eq!(dt_corona_empty(2, 2).unwrap(), p(&[0, 0, 1, 4, 6, 4, 1]));
        assert!(dt_corona_empty(1, 1).is_err());
        assert!(dt_corona_empty(3, 0).is_err());
    }

    #[test]
    fn join_formula_against_oracles() {
        // K_2 ∨ K_2 = K_4
        let k2 = dt("complete:2");
        assert_eq!(dt_join(&k2, &k2, 2, 2), p(&[0, 0, 6, 4, 1]));
        // K_1 ∨ C_4 = W_4; D_t(K_1) is the zero polynomial.
        let w4 = dt_join(&Poly::zero(), &dt("cycle:4"), 1, 4);
        assert_eq!(w4, dt_polynomial(&join(&fam("complete:1"), &fam("cycle:4")).unwrap()).unwrap());
        // Symmetry of the formula.
        let (pg, ph) = (dt("path:3"), dt("cycle:5"));
        assert_eq!(dt_join(&pg, &ph, 3, 5), dt_join(&ph, &pg, 5, 3));
    }

    #[test]
    fn lexicographic_complete_collapses_to_a_complete_graph() {
        for m in 1..=4usize {
            for n in 1..=4usize {
                assert_eq!(dt_lex_complete(m, n), dt_complete(m * n), "m={m} n={n}");
            }
        }
        // and K_2[K_2] ≅ K_4 through the actual product construction
        let k2 = fam("complete:2");
        let prod = lexicographic(&k2, &k2).unwrap();
        assert_eq!(dt_lex_complete(2, 2), dt_polynomial(&prod).unwrap());
    }

    #[test]
    fn lexicographic_star_complete_cases() {
        // m=1 collapses to the star formula.
        for n in 1..=5 {
            assert_eq!(dt_lex_star_complete(n, 1), dt_star(n), "n={n}");
        }
        // K_{1,1}[K_2] ≅ K_4.
        assert_eq!(dt_lex_star_complete(1, 2), p(&[0, 0, 6, 4, 1]));
        // Order-6 brute force for (n,m) = (2,2).
        let prod = lexicographic(&fam("star:2"), &fam("complete:2")).unwrap();
        assert_eq!(dt_lex_star_complete(2, 2), dt_polynomial(&prod).unwrap());
    }

    #[test]
    fn star_lex_reduces_to_a_join_of_clique_and_copies() {
        // K_{1,n}[K_m] ≅ K_m ∨ nK_m: the formula must agree with the join
        // identity fed by the product of n copies of D_t(K_m).
        for n in 1..=4usize {
            for m in 1..=3usize {
                let copies = dt_complete(m).pow(n);
                let via_join = dt_join(&dt_complete(m), &copies, m, m * n);
                assert_eq!(dt_lex_star_complete(n, m), via_join, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn friendship_recurrence() {
        // closed_form(F_{n,4}) = D_t(P_3)^n + x·(x(x+1)(x+2))^n
        let p3 = dt("path:3");
        for n in 1..=5usize {
            let gadget = Poly::from_i64(&[0, 2, 3, 1]).pow(n);
            let rhs = p3.pow(n).add(&gadget.shift_up(1));
            assert_eq!(cf(&format!("friendship:{n},4")), rhs, "n={n}");
        }
    }
}
