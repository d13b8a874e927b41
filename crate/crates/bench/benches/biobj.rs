use bitrans_bench::bi_instances;
use bitrans_core::{bi_transversals, brute_force_btr, minimal_bsets};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn biobj(c: &mut Criterion) {
    let mut group = c.benchmark_group("bi_transversals");
    for n in [8, 12, 16] {
        let corpus = bi_instances(n);
        group.bench_with_input(BenchmarkId::new("two_phase", n), &corpus, |b, corpus| {
            b.iter(|| {
                for inst in corpus {
                    black_box(bi_transversals(inst).unwrap());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("brute_force", n), &corpus, |b, corpus| {
            b.iter(|| {
                for inst in corpus {
                    black_box(brute_force_btr(inst).unwrap());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("minimal_bsets", n), &corpus, |b, corpus| {
            b.iter(|| {
                for inst in corpus {
                    black_box(minimal_bsets(inst).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, biobj);
criterion_main!(benches);
