//! Graph products and sums: corona, join, lexicographic product, disjoint
//! union. Vertex numbering is fixed by construction so the results are
//! reproducible: the left operand always occupies the low indices.

use super::{Graph, GraphError};

fn combined_order(parts: &[usize]) -> Result<usize, GraphError> {
    let total: usize = parts.iter().sum();
    if total > super::MAX_ORDER {
        Err(GraphError::TooLarge { n: total })
    } else {
        Ok(total)
    }
}

/// Disjoint union; vertices of `h` are shifted up by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = combined_order(&[g.order(), h.order()])?;
    let mut out = Graph::new(n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    let shift = g.order();
    for (u, v) in h.edges() {
        out.add_edge(u + shift, v + shift)?;
    }
    Ok(out)
}

/// Join: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let mut out = disjoint_union(g, h)?;
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.add_edge(u, g.order() + v)?;
        }
    }
    Ok(out)
}

/// Corona `G ∘ H`: one copy of `G` on `0..|G|`, then copy `i` of `H` on
/// `|G| + i·|H| ..`, with vertex `i` of `G` joined to all of copy `i`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let gn = g.order();
    let hn = h.order();
    let n = combined_order(&[gn, gn * hn])?;
    let mut out = Graph::new(n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for i in 0..gn {
        let base = gn + i * hn;
        for (u, v) in h.edges() {
            out.add_edge(base + u, base + v)?;
        }
        for a in 0..hn {
            out.add_edge(i, base + a)?;
        }
    }
    Ok(out)
}

/// Lexicographic product `G[H]`: vertex `(u, a)` is numbered `u·|H| + a`;
/// `(u,a) ~ (v,b)` iff `u ~ v` in `G`, or `u = v` and `a ~ b` in `H`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let gn = g.order();
    let hn = h.order();
    let n = combined_order(&[gn * hn])?;
    let mut out = Graph::new(n)?;
    for u in 0..gn {
        for (a, b) in h.edges() {
            out.add_edge(u * hn + a, u * hn + b)?;
        }
    }
    for (u, v) in g.edges() {
        for a in 0..hn {
            for b in 0..hn {
                out.add_edge(u * hn + a, v * hn + b)?;
            }
        }
    }
    Ok(out)
}
