//! Vertex typing relative to a singular s-space, Godsil–McKay validation
//! and switching, and the direct construction of the switched graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::gf2geom::{ProjPoint, Subspace};
use crate::graph::Graph;
use crate::quadric::Quadric;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexType {
    /// On the s-space.
    I,
    /// Spans a singular (s+1)-space with it.
    II,
    /// Everything else.
    III,
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexType::I => "I",
            VertexType::II => "II",
            VertexType::III => "III",
        })
    }
}

/// Per-vertex type labels. The switching set is the type II vertices; its
/// complement holds types I and III.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexTyping {
    types: Vec<VertexType>,
}

impl VertexTyping {
    pub fn new(types: Vec<VertexType>) -> Self {
        VertexTyping { types }
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    #[inline]
    pub fn of(&self, v: usize) -> VertexType {
        self.types[v]
    }

    pub fn types(&self) -> &[VertexType] {
        &self.types
    }

    pub fn vertices_of(&self, t: VertexType) -> BitSet {
        BitSet::from_indices(
            self.types.len(),
            self.types.iter().enumerate().filter(|(_, &x)| x == t).map(|(i, _)| i),
        )
    }

    pub fn count(&self, t: VertexType) -> usize {
        self.types.iter().filter(|&&x| x == t).count()
    }

    /// The switching set (type II).
    pub fn x_set(&self) -> BitSet {
        self.vertices_of(VertexType::II)
    }

    /// Types I and III.
    pub fn y_set(&self) -> BitSet {
        let mut y = BitSet::full(self.types.len());
        y.difference_with(&self.x_set());
        y
    }
}

/// A typing together with the singular s-space that produced it.
#[derive(Debug, Clone)]
pub struct TypedPartition {
    pub alpha: Subspace,
    pub typing: VertexTyping,
}

impl TypedPartition {
    pub fn s(&self) -> i32 {
        self.alpha.dim()
    }
}

/// Labels every quadric point I, II or III relative to `alpha`.
///
/// A point off `alpha` is type II exactly when it is orthogonal to every
/// basis vector of `alpha` under the bilinear form: then every line
/// joining it to `alpha` lies on the quadric.
pub fn classify_vertices(q: &Quadric, alpha: &Subspace) -> Result<TypedPartition> {
    let s = alpha.dim();
    let g = q.g();
    if s < 0 || s >= g {
        return Err(Error::SwitchIndexOutOfRange { s, g });
    }
    if !q.is_singular(alpha) {
        return Err(Error::NotSingular);
    }
    let basis: Vec<u16> = alpha.basis().map(ProjPoint::bits).collect();
    let types = q
        .points()
        .iter()
        .map(|&p| {
            if alpha.contains(p) {
                VertexType::I
            } else if basis.iter().all(|&b| !q.form().bilinear(b, p.bits())) {
                VertexType::II
            } else {
                VertexType::III
            }
        })
        .collect();
    Ok(TypedPartition {
        alpha: alpha.clone(),
        typing: VertexTyping::new(types),
    })
}

/// Observed Godsil–McKay quantities for a graph and typing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub x_size: usize,
    /// Common degree of the subgraph induced on the switching set.
    pub induced_degree: usize,
    /// Neighbours in the switching set of each type I / type III vertex
    /// (`None` when that type is absent).
    pub type_i_neighbours: Option<usize>,
    pub type_iii_neighbours: Option<usize>,
    pub type_counts: [usize; 3],
}

/// Checks the two Godsil–McKay conditions on `g` for the partition
/// (type II | types I and III), with the stronger per-type requirement that
/// type I vertices see all of the switching set and type III vertices
/// exactly half of it. The first violation is returned as an error.
pub fn gm_validate(g: &Graph, typing: &VertexTyping) -> Result<ValidationReport> {
    if typing.len() != g.v() {
        return Err(Error::SizeMismatch {
            typing: typing.len(),
            graph: g.v(),
        });
    }
    let x = typing.x_set();
    let x_size = x.count();
    let mut induced = None;
    for v in x.iter() {
        let d = g.neighbors(v).intersection_count(&x);
        match induced {
            None => induced = Some(d),
            Some(k) if k != d => {
                return Err(Error::GmViolation {
                    vertex: v,
                    reason: format!("induced degree {d} on the switching set, expected {k}"),
                })
            }
            _ => {}
        }
    }
    let mut seen_i = None;
    let mut seen_iii = None;
    for v in 0..g.v() {
        let t = typing.of(v);
        if t == VertexType::II {
            continue;
        }
        let c = g.neighbors(v).intersection_count(&x);
        let (want, slot) = match t {
            VertexType::I => (Some(x_size), &mut seen_i),
            _ => (x_size.is_multiple_of(2).then_some(x_size / 2), &mut seen_iii),
        };
        if want != Some(c) {
            let expected = match want {
                Some(w) => w.to_string(),
                None => format!("half of odd {x_size}"),
            };
            return Err(Error::GmViolation {
                vertex: v,
                reason: format!("type {t} vertex has {c} neighbours in the switching set, expected {expected}"),
            });
        }
        *slot = Some(c);
    }
    Ok(ValidationReport {
        x_size,
        induced_degree: induced.unwrap_or(0),
        type_i_neighbours: seen_i,
        type_iii_neighbours: seen_iii,
        type_counts: [
            typing.count(VertexType::I),
            typing.count(VertexType::II),
            typing.count(VertexType::III),
        ],
    })
}

/// Godsil–McKay switching: every vertex outside the switching set that sees
/// exactly half of it has its neighbourhood inside the set complemented.
/// Validation always runs first. Vertex order and labels are kept.
pub fn gm_switch(g: &Graph, typing: &VertexTyping) -> Result<Graph> {
    let report = gm_validate(g, typing)?;
    let x = typing.x_set();
    let half = report.x_size / 2;
    let mut rows: Vec<BitSet> = g.rows().to_vec();
    for v in typing.y_set().iter() {
        if report.x_size > 0 && g.neighbors(v).intersection_count(&x) == half {
            for u in x.iter() {
                if rows[v].contains(u) {
                    rows[v].remove(u);
                    rows[u].remove(v);
                } else {
                    rows[v].insert(u);
                    rows[u].insert(v);
                }
            }
        }
    }
    let out = Graph::from_rows(rows);
    Ok(match g.labels() {
        Some(l) => out.with_labels(l.to_vec()),
        None => out,
    })
}

/// The switched graph built straight from the geometry: pairs keep their
/// point-graph adjacency, except type II / type III pairs, which are joined
/// exactly when their line is a 2-secant.
pub fn build_direct(q: &Quadric, part: &TypedPartition) -> Graph {
    let t = &part.typing;
    Graph::from_fn(q.num_points(), |i, j| {
        let line = q.is_line(q.point(i), q.point(j));
        match (t.of(i), t.of(j)) {
            (VertexType::II, VertexType::III) | (VertexType::III, VertexType::II) => !line,
            _ => line,
        }
    })
    .with_labels(q.points().to_vec())
}

/// The involution exchanging each type II vertex `Q` with the third point
/// of the line through `p` and `Q`, fixing everything else.
pub fn gamma0_involution(q: &Quadric, p: ProjPoint) -> Result<Vec<usize>> {
    let pi = q.index_of(p).ok_or(Error::PointNotOnQuadric(p.bits()))?;
    let perp = q.collinear_with(pi);
    Ok((0..q.num_points())
        .map(|v| {
            if perp.contains(v) {
                let third = ProjPoint::new(p.bits() ^ q.point(v).bits()).unwrap();
                q.index_of(third).expect("collinear third point lies on the quadric")
            } else {
                v
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas;
    use crate::gf2geom::span;
    use crate::graph::{point_graph, srg_check};
    use crate::quadric::{standard_quadric, subspaces_in_quadric, Family};

    fn setup(f: Family, n: usize, s: i32) -> (Quadric, Graph, TypedPartition) {
        let q = standard_quadric(f, n).unwrap();
        let g = point_graph(&q);
        let alpha = q.default_alpha(s).unwrap();
        let part = classify_vertices(&q, &alpha).unwrap();
        (q, g, part)
    }

    /// Oracle: type II points are the points off alpha lying in one of the
    /// singular (s+1)-spaces through alpha, found by enumeration.
    fn type_ii_by_enumeration(q: &Quadric, alpha: &Subspace) -> BitSet {
        let mut out = BitSet::new(q.num_points());
        for sp in subspaces_in_quadric(q, alpha.dim() + 1).unwrap() {
            if sp.contains_subspace(alpha) {
                for p in sp.points() {
                    if !alpha.contains(p) {
                        out.insert(q.index_of(p).unwrap());
                    }
                }
            }
        }
        out
    }

    #[test]
    fn type_sizes() {
        let (q, _, part) = setup(Family::Hyperbolic, 5, 0);
        assert_eq!(part.typing.count(VertexType::II), 18);
        assert_eq!(part.typing.x_set(), type_ii_by_enumeration(&q, &part.alpha));

        let (q, _, part) = setup(Family::Elliptic, 7, 1);
        assert_eq!(part.typing.count(VertexType::I), 3);
        assert_eq!(part.typing.count(VertexType::II), 20);
        assert_eq!(part.typing.count(VertexType::III), 96);
        assert_eq!(part.typing.x_set(), type_ii_by_enumeration(&q, &part.alpha));
    }

    #[test]
    fn classify_rejects_bad_alpha() {
        let q = standard_quadric(Family::Hyperbolic, 5).unwrap();
        let gen = q.default_alpha(2).unwrap();
        assert!(matches!(
            classify_vertices(&q, &gen),
            Err(Error::SwitchIndexOutOfRange { s: 2, g: 2 })
        ));
        let off = (1u16..64)
            .filter_map(ProjPoint::new)
            .find(|&p| !q.contains(p))
            .unwrap();
        assert_eq!(classify_vertices(&q, &span([off])).unwrap_err(), Error::NotSingular);
        assert!(classify_vertices(&q, &Subspace::empty()).is_err());
    }

    #[test]
    fn validation_values() {
        let (_, g, part) = setup(Family::Hyperbolic, 5, 0);
        let rep = gm_validate(&g, &part.typing).unwrap();
        assert_eq!(rep.induced_degree, 9);

        let (_, g, part) = setup(Family::Elliptic, 7, 1);
        let rep = gm_validate(&g, &part.typing).unwrap();
        assert_eq!(rep.induced_degree, 3);
        assert_eq!(rep.type_iii_neighbours, Some(10));
        assert_eq!(rep.type_i_neighbours, Some(20));
    }

    #[test]
    fn validation_fails_loudly() {
        let (_, g, part) = setup(Family::Hyperbolic, 5, 1);
        let mut types = part.typing.types().to_vec();
        let v = types.iter().position(|&t| t == VertexType::III).unwrap();
        types[v] = VertexType::I;
        let err = gm_validate(&g, &VertexTyping::new(types)).unwrap_err();
        assert!(matches!(err, Error::GmViolation { vertex, .. } if vertex == v));
        assert!(gm_switch(&g, &VertexTyping::new(vec![VertexType::I; 3])).is_err());
    }

    #[test]
    fn switch_matches_direct_and_closed_form_parameters() {
        for (f, n) in [
            (Family::Hyperbolic, 3),
            (Family::Hyperbolic, 5),
            (Family::Parabolic, 6),
            (Family::Elliptic, 7),
        ] {
            let q = standard_quadric(f, n).unwrap();
            let g = point_graph(&q);
            let want = formulas::srg_params(f, q.r() as u32).unwrap();
            for s in 0..q.g() {
                let part = classify_vertices(&q, &q.default_alpha(s).unwrap()).unwrap();
                let rep = gm_validate(&g, &part.typing).unwrap();
                let r = q.r() as u32;
                assert_eq!(
                    num_bigint::BigUint::from(rep.induced_degree),
                    formulas::induced_degree(f, 2, r, s as u32)
                );
                assert_eq!(
                    num_bigint::BigUint::from(rep.x_size),
                    formulas::x_size(f, 2, r, s as u32)
                );
                let switched = gm_switch(&g, &part.typing).unwrap();
                assert_eq!(srg_check(&switched).unwrap(), want, "{f}{n} s={s}");
                assert_eq!(switched, build_direct(&q, &part), "{f}{n} s={s}");
                // switching twice is the identity
                assert_eq!(gm_switch(&switched, &part.typing).unwrap(), g);
            }
        }
    }

    #[test]
    fn type_i_keeps_and_type_iii_complements() {
        let (_, g, part) = setup(Family::Parabolic, 6, 1);
        let sw = gm_switch(&g, &part.typing).unwrap();
        let x = part.typing.x_set();
        for v in 0..g.v() {
            let before = g.neighbors(v).and(&x);
            let after = sw.neighbors(v).and(&x);
            match part.typing.of(v) {
                VertexType::I => assert_eq!(before, after),
                VertexType::III => assert_eq!(after, x.and_not(&before)),
                VertexType::II => {
                    let t1 = part.typing.vertices_of(VertexType::I);
                    assert_eq!(g.neighbors(v).and(&t1), sw.neighbors(v).and(&t1));
                    assert_eq!(before, after);
                }
            }
        }
    }

    #[test]
    fn type_i_ii_pairs_always_adjacent() {
        let (q, _, part) = setup(Family::Hyperbolic, 5, 1);
        let direct = build_direct(&q, &part);
        for a in part.typing.vertices_of(VertexType::I).iter() {
            for b in part.typing.x_set().iter() {
                assert!(direct.has_edge(a, b));
            }
        }
    }

    #[test]
    fn involution_maps_gamma_onto_gamma0() {
        for (f, n) in [(Family::Hyperbolic, 3), (Family::Hyperbolic, 5), (Family::Elliptic, 5)] {
            let q = standard_quadric(f, n).unwrap();
            let g = point_graph(&q);
            for pi in [0, q.num_points() / 2, q.num_points() - 1] {
                let p = q.point(pi);
                let phi = gamma0_involution(&q, p).unwrap();
                assert_eq!(phi[pi], pi);
                for (v, &w) in phi.iter().enumerate() {
                    assert_eq!(phi[w], v);
                }
                let part = classify_vertices(&q, &span([p])).unwrap();
                let g0 = gm_switch(&g, &part.typing).unwrap();
                assert_eq!(g.relabel(&phi), g0);
            }
        }
        let q = standard_quadric(Family::Hyperbolic, 5).unwrap();
        let off = (1u16..64).filter_map(ProjPoint::new).find(|&p| !q.contains(p)).unwrap();
        assert!(gamma0_involution(&q, off).is_err());
    }
}
