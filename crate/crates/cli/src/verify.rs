//! The full check battery for one quadric: every switched graph is built,
//! validated and compared with the closed forms and with each other.

use qsrg::cliques::{expected_census, graph_census, PartitionOutcome};
use qsrg::formulas;
use qsrg::iso::{automorphisms_with, SearchLimits};
use qsrg::switching::gamma0_involution;
use qsrg::{
    build_direct, classify_vertices, clique_census, clique_partition_exists, gm_switch, gm_validate, is_isomorphic,
    point_graph, reconstruct_point_graph, srg_check, CensusReport, Family, Graph, Quadric, SrgParams, VertexType,
};
use serde::Serialize;

use crate::report::Check;

#[derive(Debug, Serialize)]
pub struct SwitchSummary {
    pub s: i32,
    pub x_size: usize,
    pub induced_degree: usize,
    pub type_counts: [usize; 3],
    pub census: CensusReport,
    pub isomorphic_to_point_graph: Option<bool>,
    pub partition: Option<PartitionOutcome>,
    pub aut_order: Option<String>,
    pub aut_orbit_sizes: Option<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct VerifyResults {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub g: i32,
    pub srg: SrgParams,
    pub point_graph_cliques: u64,
    pub point_graph_aut_order: Option<String>,
    pub switched: Vec<SwitchSummary>,
    pub checks: Vec<Check>,
}

fn err_check(name: &str, e: impl std::fmt::Display) -> Check {
    Check::fail(name, e.to_string())
}

pub fn run(q: &Quadric, limits: SearchLimits) -> VerifyResults {
    let (f, r) = (q.family(), q.r() as u32);
    let mut checks = Vec::new();
    let gamma = point_graph(q);
    let want = formulas::srg_params(f, r).expect("standard quadrics are in range");

    match srg_check(&gamma) {
        Ok(p) => checks.push(Check::from_bool("point-graph SRG parameters", p == want, || format!("{p} != {want}"))),
        Err(e) => checks.push(Check::fail("point-graph SRG parameters", format!("{e:?}"))),
    }
    let pg_census = graph_census(&gamma, format!("{}{}", f.letter(), q.n()));
    let pg_want = u64::try_from(&formulas::point_graph_cliques(f, r)).expect("fits");
    checks.push(Check::from_bool("point-graph clique count", pg_census.total == pg_want, || {
        format!("{} != {pg_want}", pg_census.total)
    }));

    let aut_gamma = if q.num_points() <= limits.max_vertices {
        match automorphisms_with(&gamma, None, limits) {
            Ok(a) => Some(a),
            Err(e) => {
                checks.push(err_check("point-graph automorphisms", e));
                None
            }
        }
    } else {
        None
    };

    let mut switched_graphs = Vec::new();
    let mut summaries = Vec::new();
    for s in 0..q.g() {
        let tag = |what: &str| format!("s={s}: {what}");
        let part = match q.default_alpha(s).and_then(|a| classify_vertices(q, &a)) {
            Ok(p) => p,
            Err(e) => {
                checks.push(err_check(&tag("typing"), e));
                continue;
            }
        };
        let rep = match gm_validate(&gamma, &part.typing) {
            Ok(r) => r,
            Err(e) => {
                checks.push(err_check(&tag("Godsil-McKay conditions"), e));
                continue;
            }
        };
        let su = s as u32;
        let k_want = formulas::induced_degree(f, 2, r, su);
        checks.push(Check::from_bool(tag("induced degree"), k_want == rep.induced_degree.into(), || {
            format!("{} != {k_want}", rep.induced_degree)
        }));
        let x_want = formulas::x_size(f, 2, r, su);
        checks.push(Check::from_bool(tag("switching set size"), x_want == rep.x_size.into(), || {
            format!("{} != {x_want}", rep.x_size)
        }));
        let gs = gm_switch(&gamma, &part.typing).expect("validated");
        match srg_check(&gs) {
            Ok(p) => checks.push(Check::from_bool(tag("SRG parameters"), p == want, || format!("{p} != {want}"))),
            Err(e) => checks.push(Check::fail(tag("SRG parameters"), format!("{e:?}"))),
        }
        checks.push(Check::from_bool(tag("direct construction"), build_direct(q, &part) == gs, || {
            "edge sets differ".into()
        }));

        let census = match clique_census(q, &part, &gs) {
            Ok(c) => c,
            Err(e) => {
                checks.push(err_check(&tag("clique census"), e));
                continue;
            }
        };
        checks.push(Check::from_bool(tag("clique census"), census.matches, || census.mismatches.join("; ")));
        debug_assert_eq!(census.expected, Some(expected_census(q, su)));

        let iso = match is_isomorphic(&gamma, &gs) {
            Ok(v) => Some(v),
            Err(e) => {
                checks.push(err_check(&tag("isomorphism with the point-graph"), e));
                None
            }
        };
        if let Some(v) = &iso {
            if s == 0 {
                let ok = v.as_ref().is_some_and(|phi| gamma.is_isomorphism_to(&gs, phi));
                checks.push(Check::from_bool(tag("isomorphic to the point-graph"), ok, || "no bijection".into()));
                let p = q.point(q.indices_of(&part.alpha)[0]);
                let inv = gamma0_involution(q, p).expect("alpha lies on the quadric");
                checks.push(Check::from_bool(tag("involution is an isomorphism"), gamma.is_isomorphism_to(&gs, &inv), || {
                    "involution does not preserve edges".into()
                }));
            } else {
                checks.push(Check::from_bool(tag("not isomorphic to the point-graph"), v.is_none(), || {
                    "found a bijection".into()
                }));
            }
        }

        let partition = (s >= 1).then(|| clique_partition_exists(&gs, limits.node_budget));
        if let Some(p) = &partition {
            checks.push(Check::from_bool(tag("no partition into maximum cliques"), p.decided() == Some(false), || {
                format!("{p:?}")
            }));
        }

        let (mut aut_order, mut aut_orbit_sizes) = (None, None);
        if let Some(full) = &aut_gamma {
            match automorphisms_with(&gs, None, limits) {
                Ok(a) => {
                    if s == 0 {
                        checks.push(Check::from_bool(tag("same group order as the point-graph"), full.order() == a.order(), || {
                            format!("{} != {}", a.order(), full.order())
                        }));
                    } else {
                        let type_i = part.typing.vertices_of(VertexType::I);
                        let stab = full.setwise_stabilizer_order(&type_i);
                        checks.push(Check::from_bool(tag("automorphisms fix the s-space"), stab == a.order(), || {
                            format!("stabilizer {stab} != {}", a.order())
                        }));
                    }
                    let orbits = a.orbits();
                    let mut want_orbits: Vec<Vec<usize>> = if s == 0 {
                        vec![(0..gs.v()).collect()]
                    } else {
                        [VertexType::I, VertexType::II, VertexType::III]
                            .iter()
                            .map(|&t| part.typing.vertices_of(t).iter().collect())
                            .collect()
                    };
                    want_orbits.sort();
                    let mut got = orbits.clone();
                    got.sort();
                    checks.push(Check::from_bool(tag("vertex orbits"), got == want_orbits, || {
                        format!("{} orbits", got.len())
                    }));
                    aut_order = Some(a.order().to_string());
                    aut_orbit_sizes = Some(orbits.iter().map(Vec::len).collect());
                }
                Err(e) => checks.push(err_check(&tag("automorphisms"), e)),
            }
        }

        if s >= 1 {
            let bare = gs.clone().without_labels();
            match reconstruct_point_graph(&bare).and_then(|h| is_isomorphic(&h, &gamma)) {
                Ok(v) => checks.push(Check::from_bool(tag("point-graph reconstruction"), v.is_some(), || {
                    "reconstruction is not the point-graph".into()
                })),
                Err(e) => checks.push(err_check(&tag("point-graph reconstruction"), e)),
            }
        }

        summaries.push(SwitchSummary {
            s,
            x_size: rep.x_size,
            induced_degree: rep.induced_degree,
            type_counts: rep.type_counts,
            census,
            isomorphic_to_point_graph: iso.map(|v| v.is_some()),
            partition,
            aut_order,
            aut_orbit_sizes,
        });
        switched_graphs.push((s, gs));
    }

    let nontrivial: Vec<&(i32, Graph)> = switched_graphs.iter().filter(|(s, _)| *s >= 1).collect();
    for (i, (s1, g1)) in nontrivial.iter().enumerate() {
        for (s2, g2) in &nontrivial[i + 1..] {
            let name = format!("s={s1} and s={s2} not isomorphic");
            match is_isomorphic(g1, g2) {
                Ok(v) => checks.push(Check::from_bool(name, v.is_none(), || "found a bijection".into())),
                Err(e) => checks.push(err_check(&name, e)),
            }
        }
    }

    VerifyResults {
        family: f,
        n: q.n(),
        r: q.r(),
        g: q.g(),
        srg: want,
        point_graph_cliques: pg_census.total,
        point_graph_aut_order: aut_gamma.map(|a| a.order().to_string()),
        switched: summaries,
        checks,
    }
}
