//! Covering relations and Graphviz output for finite lattices.

use crate::{Lattice, LatticeError};

/// All covering pairs (a, b) with a ⋖ b: a < b with nothing strictly between.
///
/// Runs a triple scan over the supplied elements, so it is cubic in the
/// carrier size — fine for the diagram sizes we draw.
pub fn covering_pairs<L: Lattice>(l: &L, elems: &[L::Elem]) -> Vec<(L::Elem, L::Elem)> {
    let mut covers = Vec::new();
    for a in elems {
        for b in elems {
            if a == b || !l.leq(a, b) {
                continue;
            }
            let strictly_between = elems.iter().any(|c| {
                c != a && c != b && l.leq(a, c) && l.leq(c, b)
            });
            if !strictly_between {
                covers.push((a.clone(), b.clone()));
            }
        }
    }
    covers
}

/// Covering pairs of a lattice with an enumerable carrier.
pub fn covering_edges<L: Lattice>(l: &L) -> Result<Vec<(L::Elem, L::Elem)>, LatticeError> {
    let elems = l.elements()?;
    Ok(covering_pairs(l, &elems))
}

/// Render the Hasse diagram as a Graphviz `graph`, one `a -- b` line per
/// covering pair, ordered lexicographically by the printed labels so the
/// output is byte-stable.
pub fn hasse_dot<L: Lattice>(l: &L, name: &str) -> Result<String, LatticeError> {
    let elems = l.elements()?;
    let mut labels: Vec<String> = elems.iter().map(|e| l.elem_string(e)).collect();
    let mut edges: Vec<(String, String)> = covering_pairs(l, &elems)
        .iter()
        .map(|(a, b)| (l.elem_string(a), l.elem_string(b)))
        .collect();
    labels.sort();
    edges.sort();

    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", name));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=plaintext];\n");
    for label in &labels {
        out.push_str(&format!("  \"{}\";\n", label));
    }
    for (a, b) in &edges {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", a, b));
    }
    out.push_str("}\n");
    Ok(out)
}
