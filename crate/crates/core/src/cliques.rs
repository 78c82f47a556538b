//! Maximal-clique enumeration, Class A/B classification of the cliques of a
//! switched graph, census against closed forms, and clique partitions.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::formulas::{self, PerType};
use crate::gf2geom::{span, Subspace};
use crate::graph::Graph;
use crate::quadric::Quadric;
use crate::switching::{TypedPartition, VertexType};

/// Default node budget for exact-cover and automorphism searches.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// All maximal cliques, each as an ascending vertex list; the list is
/// sorted lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting on bitsets. The top level splits on
/// each vertex `v` (candidates: later neighbours, excluded: earlier ones), and
/// those branches run in parallel.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.v();
    let mut out: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut p = g.neighbors(v).clone();
            let mut x = g.neighbors(v).clone();
            for u in 0..=v {
                p.remove(u);
            }
            for u in v..n {
                x.remove(u);
            }
            let mut found = Vec::new();
            let mut r = vec![v];
            expand(g, &mut r, p, x, &mut found);
            found
        })
        .collect();
    out.sort_unstable();
    out
}

fn expand(g: &Graph, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (g.neighbors(u).intersection_count(&p), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in p.and_not(g.neighbors(pivot)).iter() {
        r.push(v);
        expand(g, r, p.and(g.neighbors(v)), x.and(g.neighbors(v)), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All cliques of the largest size, each sorted, in lexicographic order.
///
/// The same search as [`maximal_cliques`] with branch-and-bound: a branch
/// is cut when it cannot reach the best size found so far by any worker.
/// A greedy clique seeds the bound.
pub fn maximum_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.v();
    if n == 0 {
        return Vec::new();
    }
    let best = AtomicUsize::new(greedy_clique_size(g));
    let mut out: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut p = g.neighbors(v).clone();
            let mut x = g.neighbors(v).clone();
            for u in 0..=v {
                p.remove(u);
            }
            for u in v..n {
                x.remove(u);
            }
            let mut found = Vec::new();
            let mut r = vec![v];
            expand_bounded(g, &mut r, p, x, &best, &mut found);
            found
        })
        .collect();
    let top = best.load(Ordering::Relaxed);
    out.retain(|c| c.len() == top);
    out.sort_unstable();
    out
}

fn greedy_clique_size(g: &Graph) -> usize {
    let start = (0..g.v()).max_by_key(|&u| (g.degree(u), std::cmp::Reverse(u))).expect("nonempty");
    let mut cand = g.neighbors(start).clone();
    let mut size = 1;
    while let Some(u) = cand.iter().max_by_key(|&u| (g.neighbors(u).intersection_count(&cand), std::cmp::Reverse(u))) {
        cand.intersect_with(g.neighbors(u));
        size += 1;
    }
    size
}

fn expand_bounded(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    best: &AtomicUsize,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && r.len() >= best.load(Ordering::Relaxed) {
            best.fetch_max(r.len(), Ordering::Relaxed);
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let need = best.load(Ordering::Relaxed);
    if r.len() + p.count() < need || r.len() + colour_bound(g, &p, need - r.len().min(need)) < need {
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (g.neighbors(u).intersection_count(&p), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in p.and_not(g.neighbors(pivot)).iter() {
        if r.len() + p.count() < best.load(Ordering::Relaxed) {
            return;
        }
        r.push(v);
        expand_bounded(g, r, p.and(g.neighbors(v)), x.and(g.neighbors(v)), best, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Number of colour classes in a greedy colouring of `p`, stopping early
/// once `enough` classes are used; an upper bound on any clique inside `p`.
fn colour_bound(g: &Graph, p: &BitSet, enough: usize) -> usize {
    let mut left = p.clone();
    let mut colours = 0;
    while !left.is_empty() {
        colours += 1;
        if colours >= enough {
            return p.count();
        }
        let mut avail = left.clone();
        while let Some(u) = avail.first() {
            left.remove(u);
            avail.remove(u);
            avail.difference_with(g.neighbors(u));
        }
    }
    colours
}

pub fn max_clique_size(g: &Graph) -> usize {
    maximum_cliques(g).first().map_or(0, Vec::len)
}

/// Number of listed cliques through each vertex.
pub fn cliques_per_vertex(v: usize, cliques: &[Vec<usize>]) -> Vec<u64> {
    let mut out = vec![0u64; v];
    for c in cliques {
        for &u in c {
            out[u] += 1;
        }
    }
    out
}

pub fn is_maximal_clique(g: &Graph, c: &[usize]) -> bool {
    let mut common = BitSet::full(g.v());
    for (k, &u) in c.iter().enumerate() {
        if u >= g.v() || c[..k].iter().any(|&w| w == u || !g.has_edge(w, u)) {
            return false;
        }
        common.intersect_with(g.neighbors(u));
    }
    common.is_empty()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliqueClass {
    A,
    B,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    pub vertices: Vec<usize>,
    pub size: usize,
    pub clique_class: CliqueClass,
    /// Class A: the generator itself. Class B: the generator through the
    /// s-space spanned with the type II members.
    pub witness_sigma: Option<Subspace>,
    /// Class B only: the generator spanned by the type I and III members.
    pub witness_pi: Option<Subspace>,
    pub composition: PerType<u64>,
}

fn composition_of(part: &TypedPartition, c: &[usize]) -> PerType<u64> {
    let mut comp = PerType { i: 0, ii: 0, iii: 0 };
    for &u in c {
        match part.typing.of(u) {
            VertexType::I => comp.i += 1,
            VertexType::II => comp.ii += 1,
            VertexType::III => comp.iii += 1,
        }
    }
    comp
}

fn point_set(q: &Quadric, c: &[usize], t: Option<&dyn Fn(usize) -> bool>) -> BitSet {
    BitSet::from_indices(q.num_points(), c.iter().copied().filter(|&u| t.is_none_or(|f| f(u))))
}

fn is_generator(q: &Quadric, s: &Subspace) -> bool {
    s.dim() == q.g() && q.is_singular(s)
}

/// Identifies a maximum clique (a g-clique, of size 2^(g+1) − 1) of the switched graph as Class A (the points
/// of a generator through the s-space) or Class B (built from a generator
/// pair Σ ⊇ α, Π meeting in a (g−1)-space not containing α), with
/// witnesses. Any other outcome is an error.
pub fn classify_clique(q: &Quadric, part: &TypedPartition, g: &Graph, c: &[usize]) -> Result<CliqueReport> {
    if !is_maximal_clique(g, c) {
        return Err(Error::NotMaximalClique(c.to_vec()));
    }
    let g_size = (1usize << (q.g() + 1)) - 1;
    if c.len() != g_size {
        return Err(Error::Classification(format!(
            "maximal clique {c:?} has {} vertices, not {g_size}",
            c.len()
        )));
    }
    let mut vertices = c.to_vec();
    vertices.sort_unstable();
    let composition = composition_of(part, &vertices);
    let alpha = &part.alpha;
    let members = point_set(q, &vertices, None);
    let fail = |why: &str| Error::Classification(format!("clique {vertices:?}: {why}"));

    if composition.iii == 0 {
        let sigma = span(vertices.iter().map(|&u| q.point(u)));
        if !is_generator(q, &sigma) || !sigma.contains_subspace(alpha) {
            return Err(fail("no type III members but not a generator through the s-space"));
        }
        if BitSet::from_indices(q.num_points(), q.indices_of(&sigma)) != members {
            return Err(fail("not the full point set of its generator"));
        }
        return Ok(CliqueReport {
            size: vertices.len(),
            vertices,
            clique_class: CliqueClass::A,
            witness_sigma: Some(sigma),
            witness_pi: None,
            composition,
        });
    }

    let ty = |t: VertexType| move |u: usize| part.typing.of(u) == t;
    let sigma = span(
        alpha
            .points()
            .into_iter()
            .chain(vertices.iter().filter(|&&u| ty(VertexType::II)(u)).map(|&u| q.point(u))),
    );
    let pi = span(
        vertices
            .iter()
            .filter(|&&u| part.typing.of(u) != VertexType::II)
            .map(|&u| q.point(u)),
    );
    if !is_generator(q, &sigma) || !is_generator(q, &pi) {
        return Err(fail("member spans are not generators"));
    }
    let h = sigma.meet(&pi);
    if h.dim() != q.g() - 1 || h.contains_subspace(alpha) {
        return Err(fail("generators do not meet in a (g-1)-space avoiding the s-space"));
    }
    let n = q.num_points();
    let on = |s: &Subspace| BitSet::from_indices(n, q.indices_of(s));
    let (a_pts, s_pts, p_pts) = (on(alpha), on(&sigma), on(&pi));
    let want_i = a_pts.and(&p_pts);
    let want_ii = s_pts.and_not(&a_pts).and_not(&p_pts);
    let want_iii = p_pts.and_not(&s_pts);
    let got = |t: VertexType| point_set(q, &vertices, Some(&ty(t)));
    if got(VertexType::I) != want_i || got(VertexType::II) != want_ii || got(VertexType::III) != want_iii {
        return Err(fail("members do not match the generator-pair description"));
    }
    Ok(CliqueReport {
        size: vertices.len(),
        vertices,
        clique_class: CliqueClass::B,
        witness_sigma: Some(sigma),
        witness_pi: Some(pi),
        composition,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusExpected {
    pub total: u64,
    #[serde(rename = "n_A")]
    pub n_a: u64,
    #[serde(rename = "n_B")]
    pub n_b: u64,
    pub per_type: PerType<u64>,
    pub max_clique_size: u64,
    pub composition_a: PerType<u64>,
    pub composition_b: PerType<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub graph_id: String,
    pub v: usize,
    pub total: u64,
    #[serde(rename = "n_A")]
    pub n_a: Option<u64>,
    #[serde(rename = "n_B")]
    pub n_b: Option<u64>,
    /// Cliques through a vertex of each type (taken from the first vertex
    /// of the type; non-uniform counts are reported as mismatches).
    pub per_type: Option<PerType<u64>>,
    pub max_clique_size: usize,
    /// Cliques through a vertex → number of such vertices.
    pub cliques_per_vertex_histogram: BTreeMap<u64, u64>,
    pub expected: Option<CensusExpected>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub mismatches: Vec<String>,
}

fn histogram<T: Ord + Copy, I: IntoIterator<Item = T>>(it: I) -> BTreeMap<T, u64> {
    let mut h = BTreeMap::new();
    for x in it {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

fn small(b: BigUint) -> u64 {
    u64::try_from(&b).expect("clique counts fit in 64 bits for n <= 15")
}

/// Census of the maximum cliques of an arbitrary graph, with no closed
/// forms to compare against.
pub fn graph_census(g: &Graph, graph_id: impl Into<String>) -> CensusReport {
    let cliques = maximum_cliques(g);
    let per_vertex = cliques_per_vertex(g.v(), &cliques);
    CensusReport {
        graph_id: graph_id.into(),
        v: g.v(),
        total: cliques.len() as u64,
        n_a: None,
        n_b: None,
        per_type: None,
        max_clique_size: cliques.iter().map(Vec::len).max().unwrap_or(0),
        cliques_per_vertex_histogram: histogram(per_vertex.iter().copied()),
        expected: None,
        matches: true,
        mismatches: Vec::new(),
    }
}

/// Expected census values of the graph switched at an s-space.
pub fn expected_census(q: &Quadric, s: u32) -> CensusExpected {
    let (f, r) = (q.family(), q.r() as u32);
    let g = q.g() as u32;
    let per = formulas::cliques_per_type(f, r, s);
    let (composition_a, composition_b) = formulas::clique_composition(g, s);
    CensusExpected {
        total: small(formulas::total_cliques(f, r, s)),
        n_a: small(formulas::n_a(f, r, s)),
        n_b: small(formulas::n_b(f, r, s)),
        per_type: PerType {
            i: small(per.i),
            ii: small(per.ii),
            iii: small(per.iii),
        },
        max_clique_size: (1u64 << (g + 1)) - 1,
        composition_a,
        composition_b,
    }
}

/// Full census of a switched graph: every maximal clique is classified, and
/// all counts are compared with the closed forms. Disagreements are listed
/// in the report rather than raised.
pub fn clique_census(q: &Quadric, part: &TypedPartition, g: &Graph) -> Result<CensusReport> {
    if part.typing.len() != g.v() {
        return Err(Error::SizeMismatch {
            typing: part.typing.len(),
            graph: g.v(),
        });
    }
    let s = part.s() as u32;
    let id = format!("{}{}_s{}", q.family().letter(), q.n(), s);
    let cliques = maximum_cliques(g);
    let per_vertex = cliques_per_vertex(g.v(), &cliques);
    let mut rep = graph_census(g, id);
    let expected = expected_census(q, s);
    let mut mismatches = Vec::new();

    let reports: Vec<Result<CliqueReport>> =
        cliques.par_iter().map(|c| classify_clique(q, part, g, c)).collect();
    let (mut n_a, mut n_b) = (0u64, 0u64);
    for r in reports {
        match r {
            Ok(r) => {
                let want = match r.clique_class {
                    CliqueClass::A => {
                        n_a += 1;
                        &expected.composition_a
                    }
                    _ => {
                        n_b += 1;
                        &expected.composition_b
                    }
                };
                if &r.composition != want {
                    mismatches.push(format!(
                        "clique {:?} of class {:?} has composition {:?}, expected {:?}",
                        r.vertices, r.clique_class, r.composition, want
                    ));
                }
            }
            Err(e) => mismatches.push(e.to_string()),
        }
    }

    let mut per_type: [Option<(usize, u64)>; 3] = [None; 3];
    for (u, &cnt) in per_vertex.iter().enumerate() {
        let slot = &mut per_type[part.typing.of(u) as usize];
        match *slot {
            None => *slot = Some((u, cnt)),
            Some((w, c)) if c != cnt => mismatches.push(format!(
                "type {} vertices {w} and {u} lie in {c} and {cnt} cliques",
                part.typing.of(u)
            )),
            _ => {}
        }
    }
    let pick = |k: usize| per_type[k].map_or(0, |(_, c)| c);
    let observed_per_type = PerType {
        i: pick(0),
        ii: pick(1),
        iii: pick(2),
    };

    let mut check = |what: &str, got: u64, want: u64| {
        if got != want {
            mismatches.push(format!("{what}: enumerated {got}, closed form {want}"));
        }
    };
    check("total", rep.total, expected.total);
    check("n_A", n_a, expected.n_a);
    check("n_B", n_b, expected.n_b);
    check("cliques through type I", observed_per_type.i, expected.per_type.i);
    check("cliques through type II", observed_per_type.ii, expected.per_type.ii);
    check("cliques through type III", observed_per_type.iii, expected.per_type.iii);
    check("max clique size", rep.max_clique_size as u64, expected.max_clique_size);

    rep.n_a = Some(n_a);
    rep.n_b = Some(n_b);
    rep.per_type = Some(observed_per_type);
    rep.expected = Some(expected);
    rep.matches = mismatches.is_empty();
    rep.mismatches = mismatches;
    Ok(rep)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PartitionOutcome {
    /// A partition of the vertex set into maximal cliques.
    Exists { cliques: Vec<Vec<usize>> },
    NoPartition { nodes: u64, by_divisibility: bool },
    Undecided { nodes: u64 },
}

impl PartitionOutcome {
    /// `Some(true/false)` when decided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            PartitionOutcome::Exists { .. } => Some(true),
            PartitionOutcome::NoPartition { .. } => Some(false),
            PartitionOutcome::Undecided { .. } => None,
        }
    }
}

/// Whether the vertices split into pairwise disjoint maximum cliques.
///
/// Exact cover over the maximum-clique list, branching on the uncovered
/// vertex with the fewest usable cliques. When the clique size does not
/// divide `v` the answer is immediate.
pub fn clique_partition_exists(g: &Graph, budget: u64) -> PartitionOutcome {
    let cliques = maximum_cliques(g);
    let n = g.v();
    if n == 0 {
        return PartitionOutcome::Exists { cliques: Vec::new() };
    }
    if !n.is_multiple_of(cliques[0].len()) {
        return PartitionOutcome::NoPartition {
            nodes: 0,
            by_divisibility: true,
        };
    }
    let sets: Vec<BitSet> = cliques.iter().map(|c| BitSet::from_indices(n, c.iter().copied())).collect();
    let mut through = vec![Vec::new(); n];
    for (k, c) in cliques.iter().enumerate() {
        for &u in c {
            through[u].push(k);
        }
    }
    let mut search = Cover {
        sets: &sets,
        through: &through,
        nodes: 0,
        budget,
        chosen: Vec::new(),
    };
    match search.run(&BitSet::new(n)) {
        Some(true) => PartitionOutcome::Exists {
            cliques: search.chosen.iter().map(|&k| cliques[k].clone()).collect(),
        },
        Some(false) => PartitionOutcome::NoPartition {
            nodes: search.nodes,
            by_divisibility: false,
        },
        None => PartitionOutcome::Undecided { nodes: search.nodes },
    }
}

struct Cover<'a> {
    sets: &'a [BitSet],
    through: &'a [Vec<usize>],
    nodes: u64,
    budget: u64,
    chosen: Vec<usize>,
}

impl Cover<'_> {
    /// `None` when the budget runs out.
    fn run(&mut self, covered: &BitSet) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for u in (0..covered.capacity()).filter(|&u| !covered.contains(u)) {
            let opts: Vec<usize> = self.through[u]
                .iter()
                .copied()
                .filter(|&k| !self.sets[k].intersects(covered))
                .collect();
            if opts.is_empty() {
                return Some(false);
            }
            if best.as_ref().is_none_or(|(_, b)| opts.len() < b.len()) {
                best = Some((u, opts));
            }
        }
        let Some((_, opts)) = best else {
            return Some(true);
        };
        for k in opts {
            let mut next = covered.clone();
            next.union_with(&self.sets[k]);
            self.chosen.push(k);
            match self.run(&next) {
                Some(false) => {
                    self.chosen.pop();
                }
                other => return other,
            }
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::point_graph;
    use crate::quadric::{generators, standard_quadric, Family};
    use crate::switching::{classify_vertices, gm_switch};
    use proptest::prelude::*;

    fn switched(f: Family, n: usize, s: i32) -> (Quadric, TypedPartition, Graph) {
        let q = standard_quadric(f, n).unwrap();
        let part = classify_vertices(&q, &q.default_alpha(s).unwrap()).unwrap();
        let g = gm_switch(&point_graph(&q), &part.typing).unwrap();
        (q, part, g)
    }

    /// Oracle: maximal cliques by checking every vertex subset.
    fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.v();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let c: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if is_maximal_clique(g, &c) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..13).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn enumeration_matches_brute_force(g in arb_graph()) {
            let all = brute_maximal_cliques(&g);
            prop_assert_eq!(maximal_cliques(&g), all.clone());
            let top = all.iter().map(Vec::len).max().unwrap();
            let maxi: Vec<_> = all.into_iter().filter(|c| c.len() == top).collect();
            prop_assert_eq!(maximum_cliques(&g), maxi);
        }

        #[test]
        fn partition_witness_is_a_partition(g in arb_graph()) {
            if let PartitionOutcome::Exists { cliques } = clique_partition_exists(&g, 1_000_000) {
                let mut all: Vec<usize> = cliques.iter().flatten().copied().collect();
                all.sort_unstable();
                prop_assert_eq!(all, (0..g.v()).collect::<Vec<_>>());
                for c in &cliques {
                    prop_assert!(is_maximal_clique(&g, c));
                }
            }
        }
    }

    #[test]
    fn point_graph_cliques_are_generators() {
        for (f, n, want) in [(Family::Hyperbolic, 3, 6), (Family::Elliptic, 5, 45), (Family::Parabolic, 4, 15)] {
            let q = standard_quadric(f, n).unwrap();
            let cl = maximal_cliques(&point_graph(&q));
            assert_eq!(cl.len(), want);
            let mut gens: Vec<Vec<usize>> = generators(&q).iter().map(|s| q.indices_of(s)).collect();
            for c in &mut gens {
                c.sort_unstable();
            }
            gens.sort();
            assert_eq!(cl, gens);
        }
    }

    #[test]
    fn small_cases() {
        let (_, _, g) = switched(Family::Hyperbolic, 5, 1);
        assert_eq!(maximal_cliques(&g).len(), 142);
        let cl = maximum_cliques(&g);
        assert_eq!(cl.len(), 14);
        assert!(cl.iter().all(|c| c.len() == 7));
        assert_eq!(max_clique_size(&g), 7);
        let q = standard_quadric(Family::Parabolic, 4).unwrap();
        assert_eq!(max_clique_size(&point_graph(&q)), 3);
        assert_eq!(max_clique_size(&Graph::from_edges(0, [])), 0);
        assert_eq!(max_clique_size(&Graph::from_edges(3, [])), 1);
    }

    #[test]
    fn classification_h5() {
        let (q, part, g) = switched(Family::Hyperbolic, 5, 1);
        let mut seen_a = 0;
        for c in maximum_cliques(&g) {
            let r = classify_clique(&q, &part, &g, &c).unwrap();
            match r.clique_class {
                CliqueClass::A => {
                    seen_a += 1;
                    assert_eq!(r.composition, PerType { i: 3, ii: 4, iii: 0 });
                    assert!(r.witness_sigma.unwrap().contains_subspace(&part.alpha));
                }
                CliqueClass::B => assert_eq!(r.composition, PerType { i: 1, ii: 2, iii: 4 }),
                CliqueClass::Unclassified => unreachable!(),
            }
        }
        assert_eq!(seen_a, 2);
        let c = maximum_cliques(&g)[0].clone();
        assert!(matches!(
            classify_clique(&q, &part, &g, &c[1..]),
            Err(Error::NotMaximalClique(_))
        ));
    }

    #[test]
    fn census_e7_and_h5() {
        let (q, part, g) = switched(Family::Elliptic, 7, 1);
        let rep = clique_census(&q, &part, &g).unwrap();
        assert!(rep.matches, "{:?}", rep.mismatches);
        assert_eq!((rep.total, rep.n_a, rep.n_b), (125, Some(5), Some(120)));
        assert_eq!(rep.per_type, Some(PerType { i: 45, ii: 13, iii: 5 }));
        assert_eq!(rep.cliques_per_vertex_histogram, BTreeMap::from([(5, 96), (13, 20), (45, 3)]));

        let (q, part, g) = switched(Family::Hyperbolic, 5, 1);
        let rep = clique_census(&q, &part, &g).unwrap();
        assert!(rep.matches);
        assert_eq!(rep.per_type, Some(PerType { i: 6, ii: 4, iii: 2 }));
        let weighted: u64 = rep.cliques_per_vertex_histogram.iter().map(|(c, n)| c * n).sum();
        assert_eq!(weighted, 98);
        assert_eq!(weighted, rep.total * 7);

        let json = serde_json::to_value(&rep).unwrap();
        for key in ["graph_id", "total", "n_A", "n_B", "per_type", "expected", "match"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["per_type"]["II"], 4);
    }

    #[test]
    fn census_reports_mismatch() {
        // the unswitched graph with a typing does not satisfy the switched counts
        let q = standard_quadric(Family::Hyperbolic, 5).unwrap();
        let part = classify_vertices(&q, &q.default_alpha(1).unwrap()).unwrap();
        let rep = clique_census(&q, &part, &point_graph(&q)).unwrap();
        assert!(!rep.matches);
        assert!(rep.mismatches.iter().any(|m| m.starts_with("total")));
    }

    #[test]
    fn partitions() {
        let q = standard_quadric(Family::Hyperbolic, 3).unwrap();
        match clique_partition_exists(&point_graph(&q), 1000) {
            PartitionOutcome::Exists { cliques } => assert_eq!(cliques.len(), 3),
            other => panic!("{other:?}"),
        }
        for (f, n) in [(Family::Hyperbolic, 5), (Family::Parabolic, 6), (Family::Elliptic, 7)] {
            let (_, _, g) = switched(f, n, 1);
            assert_eq!(clique_partition_exists(&g, DEFAULT_NODE_BUDGET).decided(), Some(false));
        }
        // two triangles sharing a vertex plus two more vertices: 6 = 2 * 3, search runs
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (5, 0)]);
        assert!(matches!(
            clique_partition_exists(&g, 100),
            PartitionOutcome::NoPartition { by_divisibility: false, .. }
        ));
        let (_, _, g) = switched(Family::Elliptic, 7, 1);
        assert!(matches!(clique_partition_exists(&g, 1), PartitionOutcome::Undecided { .. }));
    }

    #[test]
    fn divisibility_shortcut() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            clique_partition_exists(&g, 100),
            PartitionOutcome::NoPartition { nodes: 0, by_divisibility: true }
        );
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]);
        assert_eq!(clique_partition_exists(&g, 100).decided(), Some(true));
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(
            clique_partition_exists(&c5, 100),
            PartitionOutcome::NoPartition { nodes: 0, by_divisibility: true }
        );
    }
}
