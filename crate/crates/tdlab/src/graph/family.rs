//! Named graph families with fixed vertex numbering.
//!
//! The numbering is part of the contract (golden files and targeted checks
//! depend on it):
//!
//! * `star:n` — center `0`, leaves `1..=n`.
//! * `path:n` / `cycle:n` — vertices in walk order `0..n`.
//! * `wheel:n` — hub `0`, rim cycle `1..=n`.
//! * `helm:n` — wheel numbering, then the leaf of rim vertex `i` is `n + i`.
//! * `generalized_helm:n,m` — wheel numbering, then the `m` leaves of rim
//!   vertex `i` occupy `n + (i-1)m + 1 ..= n + i*m`.
//! * `friendship:n,q` — shared vertex `0`; cycle `i` has internal vertices
//!   `1 + (i-1)(q-1) ..= i(q-1)` in walk order, closed through `0`.
//! * `gadget_g:n` — clique vertices `v_1..v_{2n}` are `0..2n-1`; outer
//!   vertex `u_i` is `2n + i - 1`, adjacent to `v_{2i-1}` and `v_{2i}`
//!   (indices `2i-2` and `2i-1`).

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{Graph, GraphError};

/// Symbolic description of a named family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete { n: usize },
    Empty { n: usize },
    Star { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Wheel { n: usize },
    Helm { n: usize },
    GeneralizedHelm { n: usize, m: usize },
    Friendship { n: usize, q: usize },
    GadgetG { n: usize },
    FromFile { path: PathBuf },
}

/// Bitmask of the outer vertices `u_1..u_n` of `gadget_g:n` — the target
/// set for the partial-domination identity the gadget exists for.
pub fn gadget_outer_mask(n: usize) -> u64 {
    ((1u64 << n) - 1) << (2 * n)
}

impl FamilySpec {
    /// Checks the parameter ranges; every constructor goes through this.
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidParameter(msg));
        match *self {
            FamilySpec::Complete { n } | FamilySpec::Empty { n } | FamilySpec::Path { n } => {
                if n < 1 {
                    return bad(format!("{}: order must be at least 1", self.kind_name()));
                }
            }
            FamilySpec::Star { n } => {
                if n < 1 {
                    return bad("star: need at least 1 leaf".into());
                }
            }
            FamilySpec::Cycle { n } | FamilySpec::Wheel { n } | FamilySpec::Helm { n } => {
                if n < 3 {
                    return bad(format!("{}: cycle length must be at least 3", self.kind_name()));
                }
            }
            FamilySpec::GeneralizedHelm { n, m } => {
                if n < 3 {
                    return bad("generalized_helm: cycle length must be at least 3".into());
                }
                if m < 1 {
                    return bad("generalized_helm: need at least 1 leaf per rim vertex".into());
                }
            }
            FamilySpec::Friendship { n, q } => {
                if n < 1 {
                    return bad("friendship: need at least 1 cycle".into());
                }
                if q < 3 {
                    return bad("friendship: cycle length must be at least 3".into());
                }
            }
            FamilySpec::GadgetG { n } => {
                if n < 1 {
                    return bad("gadget_g: parameter must be at least 1".into());
                }
            }
            FamilySpec::FromFile { .. } => {}
        }
        // Order overflow is a capacity limit, not a malformed spec; callers
        // distinguish the two (usage error vs resource cap).
        if let Some(order) = self.order() {
            if order > super::MAX_ORDER {
                return Err(GraphError::TooLarge { n: order });
            }
        }
        Ok(())
    }

    /// Order of the instance, when it is determined by the parameters.
    pub fn order(&self) -> Option<usize> {
        match *self {
            FamilySpec::Complete { n } | FamilySpec::Empty { n } | FamilySpec::Path { n } | FamilySpec::Cycle { n } => Some(n),
            FamilySpec::Star { n } | FamilySpec::Wheel { n } => Some(n + 1),
            FamilySpec::Helm { n } => Some(2 * n + 1),
            FamilySpec::GeneralizedHelm { n, m } => Some(n * (m + 1) + 1),
            FamilySpec::Friendship { n, q } => Some(n * (q - 1) + 1),
            FamilySpec::GadgetG { n } => Some(3 * n),
            FamilySpec::FromFile { .. } => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Empty { .. } => "empty",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Helm { .. } => "helm",
            FamilySpec::GeneralizedHelm { .. } => "generalized_helm",
            FamilySpec::Friendship { .. } => "friendship",
            FamilySpec::GadgetG { .. } => "gadget_g",
            FamilySpec::FromFile { .. } => "from_file",
        }
    }

    /// Builds the canonical instance with the numbering documented above.
    pub fn build(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        match *self {
            FamilySpec::Complete { n } => {
                let mut g = Graph::new(n)?;
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
            FamilySpec::Empty { n } => Graph::new(n),
            FamilySpec::Star { n } => {
                let mut g = Graph::new(n + 1)?;
                for leaf in 1..=n {
                    g.add_edge(0, leaf)?;
                }
                Ok(g)
            }
            FamilySpec::Path { n } => {
                let mut g = Graph::new(n)?;
                for v in 1..n {
                    g.add_edge(v - 1, v)?;
                }
                Ok(g)
            }
            FamilySpec::Cycle { n } => {
                let mut g = Graph::new(n)?;
                for v in 1..n {
                    g.add_edge(v - 1, v)?;
                }
                g.add_edge(n - 1, 0)?;
                Ok(g)
            }
            FamilySpec::Wheel { n } => {
                let mut g = Graph::new(n + 1)?;
                for rim in 1..=n {
                    g.add_edge(0, rim)?;
                    if rim < n {
                        g.add_edge(rim, rim + 1)?;
                    }
                }
                g.add_edge(n, 1)?;
                Ok(g)
            }
            FamilySpec::Helm { n } => {
                let wheel = FamilySpec::Wheel { n }.build()?;
                let mut g = Graph::new(2 * n + 1)?;
                for (u, v) in wheel.edges() {
                    g.add_edge(u, v)?;
                }
                for rim in 1..=n {
                    g.add_edge(rim, n + rim)?;
                }
                Ok(g)
            }
            FamilySpec::GeneralizedHelm { n, m } => {
                let wheel = FamilySpec::Wheel { n }.build()?;
                let mut g = Graph::new(n * (m + 1) + 1)?;
                for (u, v) in wheel.edges() {
                    g.add_edge(u, v)?;
                }
                for rim in 1..=n {
                    for j in 1..=m {
                        g.add_edge(rim, n + (rim - 1) * m + j)?;
                    }
                }
                Ok(g)
            }
            FamilySpec::Friendship { n, q } => {
                let mut g = Graph::new(n * (q - 1) + 1)?;
                for cyc in 0..n {
                    let base = 1 + cyc * (q - 1);
                    let last = base + q - 2;
                    g.add_edge(0, base)?;
                    for v in base..last {
                        g.add_edge(v, v + 1)?;
                    }
                    g.add_edge(last, 0)?;
                }
                Ok(g)
            }
            FamilySpec::GadgetG { n } => {
                let mut g = Graph::new(3 * n)?;
                for u in 0..2 * n {
                    for v in u + 1..2 * n {
                        g.add_edge(u, v)?;
                    }
                }
                for i in 1..=n {
                    let outer = 2 * n + i - 1;
                    g.add_edge(outer, 2 * i - 2)?;
                    g.add_edge(outer, 2 * i - 1)?;
                }
                Ok(g)
            }
            FamilySpec::FromFile { ref path } => {
                let text = std::fs::read_to_string(path).map_err(|e| GraphError::Parse {
                    line: 0,
                    reason: format!("cannot read {}: {e}", path.display()),
                })?;
                Graph::parse_edge_list(&text)
            }
        }
    }
}

/// Builds the canonical instance of a family; see [`FamilySpec::build`].
pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.build()
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses the shell-friendly form `kind:p1[,p2]`, e.g. `helm:5`,
    /// `friendship:3,4`, `generalized_helm:4,2`, or `from_file:PATH`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| GraphError::InvalidParameter(msg);
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("family {s:?} must look like kind:p1[,p2]")))?;
        if kind == "from_file" {
            return Ok(FamilySpec::FromFile {
                path: PathBuf::from(rest),
            });
        }
        let params: Vec<usize> = rest
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| bad(format!("family parameter {t:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        let one = |params: &[usize]| -> Result<usize, GraphError> {
            match params {
                [p] => Ok(*p),
                _ => Err(bad(format!("{kind} takes exactly one parameter"))),
            }
        };
        let two = |params: &[usize]| -> Result<(usize, usize), GraphError> {
            match params {
                [a, b] => Ok((*a, *b)),
                _ => Err(bad(format!("{kind} takes exactly two parameters"))),
            }
        };
        let spec = match kind {
            "complete" => FamilySpec::Complete { n: one(&params)? },
            "empty" => FamilySpec::Empty { n: one(&params)? },
            "star" => FamilySpec::Star { n: one(&params)? },
            "path" => FamilySpec::Path { n: one(&params)? },
            "cycle" => FamilySpec::Cycle { n: one(&params)? },
            "wheel" => FamilySpec::Wheel { n: one(&params)? },
            "helm" => FamilySpec::Helm { n: one(&params)? },
            "generalized_helm" => {
                let (n, m) = two(&params)?;
                FamilySpec::GeneralizedHelm { n, m }
            }
            "friendship" => {
                let (n, q) = two(&params)?;
                FamilySpec::Friendship { n, q }
            }
            "gadget_g" => FamilySpec::GadgetG { n: one(&params)? },
            other => {
                return Err(bad(format!(
                    "unknown family kind {other:?} (expected one of complete, empty, star, \
                     path, cycle, wheel, helm, generalized_helm, friendship, gadget_g, from_file)"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Empty { n } => write!(f, "empty:{n}"),
            FamilySpec::Star { n } => write!(f, "star:{n}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Wheel { n } => write!(f, "wheel:{n}"),
            FamilySpec::Helm { n } => write!(f, "helm:{n}"),
            FamilySpec::GeneralizedHelm { n, m } => write!(f, "generalized_helm:{n},{m}"),
            FamilySpec::Friendship { n, q } => write!(f, "friendship:{n},{q}"),
            FamilySpec::GadgetG { n } => write!(f, "gadget_g:{n}"),
            FamilySpec::FromFile { path } => write!(f, "from_file:{}", path.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn orders_match_the_family_formulas() {
        let cases = [
            ("complete:5", 5),
            ("empty:4", 4),
            ("star:6", 7),
            ("path:6", 6),
            ("cycle:7", 7),
            ("wheel:5", 6),
            ("helm:3", 7),
            ("generalized_helm:3,2", 10),
            ("friendship:3,4", 10),
            ("gadget_g:2", 6),
        ];
        for (s, order) in cases {
            let spec = s.parse::<FamilySpec>().unwrap();
            assert_eq!(spec.order(), Some(order), "{s}");
            assert_eq!(spec.build().unwrap().order(), order, "{s}");
        }
    }

    #[test]
    fn helm_structure() {
        // helm:3 → hub adjacent to a 3-cycle, one pendant per rim vertex.
        let g = build("helm:3");
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(0), 3); // hub
        for rim in 1..=3 {
            assert_eq!(g.degree(rim), 4); // hub + two rim neighbors + leaf
            assert!(g.has_edge(rim, 3 + rim));
            assert_eq!(g.degree(3 + rim), 1);
        }
        let m = g.metrics();
        assert_eq!((m.min_degree, m.support_count, m.leaf_count), (1, 3, 3));
        assert!(m.connected);
    }

    #[test]
    fn generalized_helm_leaf_blocks() {
        let g = build("generalized_helm:3,2");
        assert_eq!(g.order(), 10);
        for rim in 1..=3 {
            assert_eq!(g.degree(rim), 5); // hub + 2 rim + 2 leaves
            for j in 1..=2 {
                let leaf = 3 + (rim - 1) * 2 + j;
                assert!(g.has_edge(rim, leaf));
                assert_eq!(g.degree(leaf), 1);
            }
        }
    }

    #[test]
    fn friendship_one_cycle_is_the_cycle() {
        // friendship:1,4 is C_4 on vertices 0-1-2-3-0.
        let g = build("friendship:1,4");
        let c4 = build("cycle:4");
        assert_eq!(g, c4);
    }

    #[test]
    fn friendship_cycles_share_only_the_center() {
        let g = build("friendship:3,4");
        assert_eq!(g.order(), 10);
        assert_eq!(g.degree(0), 6); // two edges into each of 3 cycles
        for v in 1..10 {
            assert_eq!(g.degree(v), 2);
        }
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 12); // 3 cycles of length 4
    }

    #[test]
    fn friendship_triangles() {
        // friendship:2,3 — the classic two-triangle friendship graph.
        let g = build("friendship:2,3");
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree(0), 4);
        assert!(g.has_edge(1, 2) && g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn gadget_wiring() {
        // gadget_g:1 is a triangle: clique {0,1} plus u adjacent to both.
        let g1 = build("gadget_g:1");
        assert_eq!(g1, build("complete:3"));
        assert_eq!(gadget_outer_mask(1), 0b100);

        let g = build("gadget_g:2");
        assert_eq!(g.order(), 6);
        // clique part
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(g.has_edge(u, v));
            }
        }
        // u_1 = 4 ~ {0,1}, u_2 = 5 ~ {2,3}; outer vertices independent
        assert!(g.has_edge(4, 0) && g.has_edge(4, 1));
        assert!(g.has_edge(5, 2) && g.has_edge(5, 3));
        assert!(!g.has_edge(4, 5) && !g.has_edge(4, 2));
        assert_eq!(gadget_outer_mask(2), 0b110000);
    }

    #[test]
    fn wheel_is_hub_plus_rim_cycle() {
        let g = build("wheel:5");
        assert_eq!(g.degree(0), 5);
        for rim in 1..=5 {
            assert_eq!(g.degree(rim), 3);
        }
        assert!(g.has_edge(5, 1));
    }

    #[test]
    fn parameter_validation() {
        for s in [
            "cycle:2",
            "wheel:2",
            "helm:2",
            "generalized_helm:2,1",
            "generalized_helm:3,0",
            "friendship:0,4",
            "friendship:2,2",
            "gadget_g:0",
            "star:0",
            "complete:0",
        ] {
            assert!(
                matches!(s.parse::<FamilySpec>(), Err(GraphError::InvalidParameter(_))),
                "{s} should be rejected"
            );
        }
        // order cap: helm:40 would have 81 vertices
        assert!(matches!(
            "helm:40".parse::<FamilySpec>(),
            Err(GraphError::TooLarge { n: 81 })
        ));
    }

    #[test]
    fn grammar_round_trip_and_errors() {
        for s in [
            "complete:6",
            "star:5",
            "helm:4",
            "generalized_helm:4,2",
            "friendship:3,4",
            "gadget_g:3",
        ] {
            let spec = s.parse::<FamilySpec>().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("helm".parse::<FamilySpec>().is_err());
        assert!("helm:3,4".parse::<FamilySpec>().is_err());
        assert!("friendship:3".parse::<FamilySpec>().is_err());
        assert!("torus:3".parse::<FamilySpec>().is_err());
        assert!("helm:x".parse::<FamilySpec>().is_err());
    }
}
