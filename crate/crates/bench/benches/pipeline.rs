use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use unicyclic_bench::{cases, label};
use unicyclic_core::approx::{comonad_approximation, equivariant_t};
use unicyclic_core::homology::{cocyclic_cohomology, cyclic_homology, hopf_cyclic_module};
use unicyclic_core::paracyclic::Orientation;

fn build_t(c: &mut Criterion) {
    let mut g = c.benchmark_group("build T");
    for (f, top) in cases() {
        g.bench_with_input(BenchmarkId::from_parameter(label(&f, top)), &f, |b, f| {
            b.iter(|| equivariant_t(&f.bialgebra, &f.carrier, &f.coefficient, top).unwrap())
        });
    }
    g.finish();
}

fn comonad(c: &mut Criterion) {
    let mut g = c.benchmark_group("comonad approximation");
    g.sample_size(10);
    for (f, top) in cases() {
        let t = equivariant_t(&f.bialgebra, &f.carrier, &f.coefficient, top).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(label(&f, top)), &t, |b, t| {
            b.iter(|| comonad_approximation(t).unwrap())
        });
    }
    g.finish();
}

fn cyclic(c: &mut Criterion) {
    let mut g = c.benchmark_group("cyclic homology");
    g.sample_size(10);
    for (f, top) in cases() {
        let fam = hopf_cyclic_module(&f.bialgebra, &f.carrier, &f.coefficient, top)
            .unwrap()
            .family;
        g.bench_with_input(
            BenchmarkId::from_parameter(label(&f, top)),
            &fam,
            |b, fam| {
                b.iter(|| match fam.orientation {
                    Orientation::Cyclic => cyclic_homology(fam).unwrap(),
                    Orientation::Cocyclic => cocyclic_cohomology(fam).unwrap(),
                })
            },
        );
    }
    g.finish();
}

criterion_group!(benches, build_t, comonad, cyclic);
criterion_main!(benches);
