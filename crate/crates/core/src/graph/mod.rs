//! Immutable simple graphs with bit-vector adjacency.

mod graph6;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::gf2geom::ProjPoint;
use crate::quadric::Quadric;

pub use graph6::{decode_graph6, encode_graph6};

/// Undirected, loop-free graph on vertices `0..v`.
///
/// Equality compares adjacency only; labels are informational.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<BitSet>,
    labels: Option<Vec<ProjPoint>>,
}

impl Graph {
    /// Builds a graph from a symmetric predicate evaluated on pairs `i < j`.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(v: usize, mut f: F) -> Graph {
        let mut adj = vec![BitSet::new(v); v];
        for i in 0..v {
            for j in (i + 1)..v {
                if f(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { adj, labels: None }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(v: usize, edges: I) -> Graph {
        let mut adj = vec![BitSet::new(v); v];
        for (a, b) in edges {
            assert!(a != b, "loop at vertex {a}");
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Graph { adj, labels: None }
    }

    /// Wraps neighbour rows; panics if they are not symmetric and loop-free.
    pub fn from_rows(adj: Vec<BitSet>) -> Graph {
        let v = adj.len();
        for (i, row) in adj.iter().enumerate() {
            assert_eq!(row.capacity(), v, "row {i} has wrong width");
            assert!(!row.contains(i), "loop at vertex {i}");
            for j in row {
                assert!(adj[j].contains(i), "asymmetric pair ({i}, {j})");
            }
        }
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<ProjPoint>) -> Graph {
        assert_eq!(labels.len(), self.v());
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    #[inline]
    pub fn v(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, i: usize) -> &BitSet {
        &self.adj[i]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count()
    }

    pub fn labels(&self) -> Option<&[ProjPoint]> {
        self.labels.as_deref()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// The image graph under `perm`: vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.v());
        let mut adj = vec![BitSet::new(self.v()); self.v()];
        for (i, j) in self.edges() {
            adj[perm[i]].insert(perm[j]);
            adj[perm[j]].insert(perm[i]);
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = l.clone();
            for (i, &p) in l.iter().enumerate() {
                out[perm[i]] = p;
            }
            out
        });
        Graph { adj, labels }
    }

    /// Whether `perm` maps every edge to an edge and every non-edge to a
    /// non-edge of `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, perm: &[usize]) -> bool {
        if self.v() != other.v() || perm.len() != self.v() {
            return false;
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        self.edge_count() == other.edge_count()
            && self.edges().all(|(i, j)| other.has_edge(perm[i], perm[j]))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(v={}, e={})", self.v(), self.edge_count())
    }
}

/// Vertices are the quadric's points; adjacent when the joining line lies
/// on the quadric.
pub fn point_graph(q: &Quadric) -> Graph {
    let adj = (0..q.num_points())
        .map(|i| q.collinear_with(i).clone())
        .collect();
    Graph {
        adj,
        labels: Some(q.points().to_vec()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// `k(k - lambda - 1) = (v - k - 1) mu`.
    pub fn is_feasible(&self) -> bool {
        let (v, k, l, m) = (
            self.v as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        );
        k * (k - l - 1) == (v - k - 1) * m
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Why a graph failed the strong-regularity scan, with the first witness
/// in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NotSrg {
    TooSmall { v: usize },
    Degree { vertex: usize, degree: usize, expected: usize },
    Lambda { pair: (usize, usize), common: usize, expected: usize },
    Mu { pair: (usize, usize), common: usize, expected: usize },
}

impl fmt::Display for NotSrg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSrg::TooSmall { v } => write!(f, "{v} vertices is too few"),
            NotSrg::Degree { vertex, degree, expected } => {
                write!(f, "vertex {vertex} has degree {degree}, expected {expected}")
            }
            NotSrg::Lambda { pair, common, expected } => write!(
                f,
                "adjacent pair {pair:?} has {common} common neighbours, expected {expected}"
            ),
            NotSrg::Mu { pair, common, expected } => write!(
                f,
                "non-adjacent pair {pair:?} has {common} common neighbours, expected {expected}"
            ),
        }
    }
}

/// Exhaustive pair scan for strong regularity.
///
/// Reference values come from vertex 0 and the first adjacent and first
/// non-adjacent pair; rows are scanned in parallel and the earliest
/// violation wins.
pub fn srg_check(g: &Graph) -> Result<SrgParams, NotSrg> {
    let v = g.v();
    if v < 2 {
        return Err(NotSrg::TooSmall { v });
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..v).find(|&i| g.degree(i) != k) {
        return Err(NotSrg::Degree {
            vertex,
            degree: g.degree(vertex),
            expected: k,
        });
    }
    let common = |i: usize, j: usize| g.neighbors(i).intersection_count(g.neighbors(j));
    let first_pair = |adjacent: bool| {
        (0..v).find_map(|i| {
            ((i + 1)..v)
                .find(|&j| g.has_edge(i, j) == adjacent)
                .map(|j| common(i, j))
        })
    };
    let lambda = first_pair(true).unwrap_or(0);
    let mu = first_pair(false).unwrap_or(0);

    let violation = (0..v)
        .into_par_iter()
        .filter_map(|i| {
            ((i + 1)..v).find_map(|j| {
                let c = common(i, j);
                if g.has_edge(i, j) {
                    (c != lambda).then_some(NotSrg::Lambda {
                        pair: (i, j),
                        common: c,
                        expected: lambda,
                    })
                } else {
                    (c != mu).then_some(NotSrg::Mu {
                        pair: (i, j),
                        common: c,
                        expected: mu,
                    })
                }
            })
        })
        .min_by_key(|e| match e {
            NotSrg::Lambda { pair, .. } | NotSrg::Mu { pair, .. } => *pair,
            _ => (usize::MAX, usize::MAX),
        });
    match violation {
        Some(e) => Err(e),
        None => Ok(SrgParams {
            v: v as u64,
            k: k as u64,
            lambda: lambda as u64,
            mu: mu as u64,
        }),
    }
}
