use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qsrg::cliques::maximum_cliques;
use qsrg::{automorphisms, classify_vertices, clique_census, gm_switch, point_graph, standard_quadric, Family, Graph, Quadric, TypedPartition};

fn setup(f: Family, n: usize, s: i32) -> (Quadric, TypedPartition, Graph, Graph) {
    let q = standard_quadric(f, n).unwrap();
    let gamma = point_graph(&q);
    let part = classify_vertices(&q, &q.default_alpha(s).unwrap()).unwrap();
    let gs = gm_switch(&gamma, &part.typing).unwrap();
    (q, part, gamma, gs)
}

const CASES: [(Family, usize, i32); 3] = [
    (Family::Hyperbolic, 5, 1),
    (Family::Elliptic, 7, 1),
    (Family::Hyperbolic, 7, 2),
];

fn construct(c: &mut Criterion) {
    let mut grp = c.benchmark_group("construct");
    for (f, n, s) in CASES {
        let id = format!("{}{n}_s{s}", f.letter());
        grp.bench_function(BenchmarkId::new("point_graph", &id), |b| {
            let q = standard_quadric(f, n).unwrap();
            b.iter(|| point_graph(&q))
        });
        let (_, part, gamma, _) = setup(f, n, s);
        grp.bench_function(BenchmarkId::new("switch", &id), |b| b.iter(|| gm_switch(&gamma, &part.typing).unwrap()));
    }
    grp.finish();
}

fn cliques(c: &mut Criterion) {
    let mut grp = c.benchmark_group("cliques");
    grp.sample_size(10);
    for (f, n, s) in CASES {
        let id = format!("{}{n}_s{s}", f.letter());
        let (q, part, _, gs) = setup(f, n, s);
        grp.bench_function(BenchmarkId::new("maximum_cliques", &id), |b| b.iter(|| maximum_cliques(&gs)));
        grp.bench_function(BenchmarkId::new("census", &id), |b| b.iter(|| clique_census(&q, &part, &gs).unwrap()));
    }
    grp.finish();
}

fn automorphism_groups(c: &mut Criterion) {
    let mut grp = c.benchmark_group("automorphisms");
    grp.sample_size(10);
    for (f, n, s) in CASES {
        let id = format!("{}{n}_s{s}", f.letter());
        let (_, _, gamma, gs) = setup(f, n, s);
        grp.bench_function(BenchmarkId::new("point_graph", &id), |b| b.iter(|| automorphisms(&gamma).unwrap()));
        grp.bench_function(BenchmarkId::new("switched", &id), |b| b.iter(|| automorphisms(&gs).unwrap()));
    }
    grp.finish();
}

criterion_group!(benches, construct, cliques, automorphism_groups);
criterion_main!(benches);
