use std::hint::black_box;

use avoidkit::perm::{all_permutations, enumerate_avoiders, perm, pset, AvoiderCache};
use avoidkit::wilf::{partition, PairPopulation};
use avoidkit_bench::singleton_workload;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn containment(c: &mut Criterion) {
    let hosts = all_permutations(8);
    let tau = perm("3412");
    c.bench_function("contains 3412 in S8", |b| {
        b.iter(|| hosts.iter().filter(|h| h.contains(black_box(&tau))).count())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_avoiders");
    for (set, n) in [("123", 9), ("123,132", 12), ("132,213", 12)] {
        let t = pset(set);
        group.bench_with_input(BenchmarkId::new(set, n), &n, |b, &n| {
            b.iter(|| enumerate_avoiders(n, black_box(&t)).unwrap().len())
        });
    }
    group.finish();
}

fn table_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_sweep");
    group.sample_size(10);
    group.bench_function("singletons x S4 on 5:8", |b| {
        b.iter(|| {
            let cache = AvoiderCache::new();
            singleton_workload()
                .into_iter()
                .map(|(set, taus)| {
                    let population = PairPopulation {
                        pairs: taus
                            .into_iter()
                            .map(|t| avoidkit::Pair::new(set.clone(), t))
                            .collect(),
                        descriptor: set.to_string(),
                    };
                    partition(&population, (5, 8), &cache)
                        .unwrap()
                        .classes
                        .len()
                })
                .sum::<usize>()
        })
    });
    group.finish();
}

criterion_group!(benches, containment, enumeration, table_sweep);
criterion_main!(benches);
