//! Face lattices of regular polygons and the edge-gluing maps between
//! them. P(n) has a bottom 𝟎, vertices v₀,…,v_{n−1}, edges e₀,…,e_{n−1}
//! (eⱼ runs from v_{j−1} to vⱼ, indices cyclic), and a top 𝟏. Gluing edge
//! a of an n-gon onto edge b of an m-gon yields a monotone map
//! P(n) ⊔ P(m) → P(n+m−2) that sends both glued edges to 𝟏 — deliberately
//! not a lattice homomorphism. Each P(n) also carries the dihedral action
//! by rotations and reflections.

use lattice_core::{Lattice, LatticeError};
use operad_core::OperadError;

use crate::ZooError;

/// A face of P(n): the empty face, a vertex, an edge, or the whole polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolygonFace {
    Bottom,
    Vertex(usize),
    Edge(usize),
    Top,
}

use PolygonFace::{Bottom, Edge, Top, Vertex};

/// The face lattice of a regular n-gon, n ≥ 3: height four, 2n+2 elements.
#[derive(Debug, Clone, Copy)]
pub struct Polygon {
    pub n: usize,
}

impl Polygon {
    pub fn new(n: usize) -> Result<Polygon, ZooError> {
        if n < 3 {
            return Err(ZooError::PolygonMismatch(format!(
                "the face lattice needs n ≥ 3 sides, got {n}"
            )));
        }
        Ok(Polygon { n })
    }

    fn reduce(&self, f: &PolygonFace) -> PolygonFace {
        match *f {
            Vertex(i) => Vertex(i % self.n),
            Edge(j) => Edge(j % self.n),
            other => other,
        }
    }

    /// Whether vertex i is an endpoint of edge j (eⱼ runs v_{j−1} → vⱼ).
    fn incident(&self, i: usize, j: usize) -> bool {
        i % self.n == j % self.n || (i + 1) % self.n == j % self.n
    }
}

impl Lattice for Polygon {
    type Elem = PolygonFace;

    fn leq(&self, a: &PolygonFace, b: &PolygonFace) -> bool {
        match (self.reduce(a), self.reduce(b)) {
            (Bottom, _) | (_, Top) => true,
            (x, y) if x == y => true,
            (Vertex(i), Edge(j)) => self.incident(i, j),
            _ => false,
        }
    }

    fn meet(&self, a: &PolygonFace, b: &PolygonFace) -> PolygonFace {
        let (x, y) = (self.reduce(a), self.reduce(b));
        if self.leq(&x, &y) {
            return x;
        }
        if self.leq(&y, &x) {
            return y;
        }
        if let (Edge(i), Edge(j)) = (x, y) {
            // Adjacent edges share one vertex; n ≥ 3 keeps it unique.
            if (j + 1) % self.n == i % self.n {
                return Vertex(j % self.n);
            }
            if (i + 1) % self.n == j % self.n {
                return Vertex(i % self.n);
            }
        }
        Bottom
    }

    fn join(&self, a: &PolygonFace, b: &PolygonFace) -> PolygonFace {
        let (x, y) = (self.reduce(a), self.reduce(b));
        if self.leq(&x, &y) {
            return y;
        }
        if self.leq(&y, &x) {
            return x;
        }
        if let (Vertex(i), Vertex(j)) = (x, y) {
            // Consecutive vertices span one edge; n ≥ 3 keeps it unique.
            if (i + 1) % self.n == j % self.n {
                return Edge(j % self.n);
            }
            if (j + 1) % self.n == i % self.n {
                return Edge(i % self.n);
            }
        }
        Top
    }

    fn bottom(&self) -> Option<PolygonFace> {
        Some(Bottom)
    }

    fn top(&self) -> Option<PolygonFace> {
        Some(Top)
    }

    fn rank(&self, e: &PolygonFace) -> Option<u64> {
        Some(match e {
            Bottom => 0,
            Vertex(_) => 1,
            Edge(_) => 2,
            Top => 3,
        })
    }

    fn elements(&self) -> Result<Vec<PolygonFace>, LatticeError> {
        let mut out = vec![Bottom];
        out.extend((0..self.n).map(Vertex));
        out.extend((0..self.n).map(Edge));
        out.push(Top);
        Ok(out)
    }

    fn elem_string(&self, e: &PolygonFace) -> String {
        face_string(e)
    }
}

/// Which summand of P(n) ⊔ P(m) a face lives in: the n-gon being glued
/// along its edge a (outer) or the m-gon glued along its edge b (inner).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Outer,
    Inner,
}

/// Glue edge a of the n-gon to edge b of the m-gon and push the face `t`
/// through to P(n+m−2). Both glued edges land on 𝟏; their endpoints merge
/// in reverse pairs (v_b′ with v_{a−1}, v_{b−1}′ with v_a); the remaining
/// faces slide into the cyclic order of the big polygon, the inner ones
/// filling the positions a, a+1, … left of the removed edges.
pub fn polygon_compose(
    n: usize,
    a: usize,
    m: usize,
    b: usize,
    side: Side,
    t: &PolygonFace,
) -> Result<PolygonFace, OperadError> {
    if n < 2 || a == 0 || a > n {
        return Err(OperadError::IndexOutOfRange { index: a, arity: n });
    }
    if m < 2 || b == 0 || b > m {
        return Err(OperadError::IndexOutOfRange { index: b, arity: m });
    }
    let big = n + m - 2;
    Ok(match (side, *t) {
        (_, Bottom) => Bottom,
        (_, Top) => Top,
        (Side::Outer, Edge(j)) => {
            if j % n == a % n {
                Top
            } else {
                let k = (j + n - a % n) % n;
                Edge((a + m - 2 + k) % big)
            }
        }
        (Side::Outer, Vertex(i)) => {
            if (i + 1) % n == a % n {
                Vertex((a - 1) % big)
            } else {
                let k = (i + n - a % n) % n;
                Vertex((a + m - 2 + k) % big)
            }
        }
        (Side::Inner, Edge(j)) => {
            if j % m == b % m {
                Top
            } else {
                let k = (j + m - b % m) % m;
                Edge((a + k - 1) % big)
            }
        }
        (Side::Inner, Vertex(i)) => {
            if i % m == b % m {
                Vertex((a - 1) % big)
            } else {
                let k = (i + m - b % m) % m;
                Vertex((a + k - 1) % big)
            }
        }
    })
}

/// The rotation generator of the dihedral action: every index advances by
/// one step around the polygon.
pub fn act_rotation(n: usize, t: &PolygonFace) -> PolygonFace {
    match *t {
        Vertex(i) => Vertex((i + 1) % n),
        Edge(j) => Edge((j + 1) % n),
        other => other,
    }
}

/// The reflection generator: edges reverse as eⱼ ↦ e_{n−1−j}, and the
/// vertex between eᵢ and e_{i+1} follows its flanking edges to land
/// between e_{n−2−i} and e_{n−1−i}, i.e. vᵢ ↦ v_{n−2−i}.
pub fn act_reflection(n: usize, t: &PolygonFace) -> PolygonFace {
    match *t {
        Vertex(i) => Vertex((2 * n - 2 - i) % n),
        Edge(j) => Edge((n - 1 - j % n) % n),
        other => other,
    }
}

/// Render as "0", "1", "v3", or "e2".
pub fn face_string(t: &PolygonFace) -> String {
    match *t {
        Bottom => "0".to_string(),
        Top => "1".to_string(),
        Vertex(i) => format!("v{i}"),
        Edge(j) => format!("e{j}"),
    }
}

/// Parse the output of [`face_string`].
pub fn parse_face(s: &str) -> Result<PolygonFace, ZooError> {
    let bad = || ZooError::PolygonMismatch(format!("cannot read {s:?} as a polygon face"));
    let t = s.trim();
    match t {
        "0" | "𝟎" => return Ok(Bottom),
        "1" | "𝟏" => return Ok(Top),
        _ => {}
    }
    let index = t[1..].parse().map_err(|_| bad())?;
    match t.chars().next() {
        Some('v') => Ok(Vertex(index)),
        Some('e') => Ok(Edge(index)),
        _ => Err(bad()),
    }
}
