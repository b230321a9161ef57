use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hypercell::circuits::find_circuits;
use hypercell::generator::{canonical_codes, SearchParams};
use hypercell::lattice::canonical_24cell;
use hypercell::octahedrites::enumerate_octahedrites;
use hypercell::oracle;
use hypercell::patterns::verify_non_embedding_claims;
use hypercell::planar::antiprism_graph;

fn octahedrites(c: &mut Criterion) {
    let mut g = c.benchmark_group("octahedrites");
    g.sample_size(10);
    for n in [12, 14, 16] {
        g.bench_with_input(BenchmarkId::new("generator", n), &n, |b, &n| {
            b.iter(|| canonical_codes(SearchParams::octahedrites(black_box(n))))
        });
    }
    g.bench_function("oracle/10", |b| b.iter(|| oracle::octahedrites(black_box(10))));
    g.finish();
}

fn quartic(c: &mut Criterion) {
    let mut g = c.benchmark_group("quartic_polyhedra");
    g.sample_size(10);
    for n in [10, 12] {
        g.bench_with_input(BenchmarkId::new("generator", n), &n, |b, &n| {
            b.iter(|| canonical_codes(SearchParams::all_quartic(black_box(n))))
        });
    }
    g.finish();
}

fn canonical_code(c: &mut Criterion) {
    let g = antiprism_graph(24).unwrap();
    c.bench_function("canonical_code/antiprism24", |b| b.iter(|| black_box(&g).canonical_code()));
}

fn checks(c: &mut Criterion) {
    let cat = enumerate_octahedrites(10).unwrap();
    c.bench_function("pattern_claims/n10", |b| b.iter(|| verify_non_embedding_claims(black_box(&cat)).unwrap()));
    let cell = canonical_24cell();
    c.bench_function("circuits_24cell/4_0", |b| b.iter(|| find_circuits(black_box(&cell), 4, 0).unwrap()));
    c.bench_function("lattice/24cell", |b| b.iter(canonical_24cell));
}

criterion_group!(benches, octahedrites, quartic, canonical_code, checks);
criterion_main!(benches);
