//! Sequential vs parallel execution on the two hot paths: a single large
//! Hurwitz orbit (parallel frontier expansion) and a batch of per-element
//! checks (parallel across elements).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hurwitz_core::hurwitz::{hurwitz_orbit, Factorization, ReducedEnumerator, DEFAULT_CAP};
use hurwitz_core::par::Execution;
use hurwitz_core::verify::{verify, Scope, Theorem, VerifyOptions};
use hurwitz_core::{CoxeterGroup, CoxeterType};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn coxeter_orbit(c: &mut Criterion) {
    let g = CoxeterGroup::new(CoxeterType::E, 6).unwrap();
    let w = g.element_from_word(g.simple_root_ids()).unwrap();
    let f = Factorization::reduced(&g, ReducedEnumerator::new(&g).first(&w)).unwrap();
    let mut group = c.benchmark_group("E6 Coxeter orbit");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| hurwitz_orbit(&g, &f, DEFAULT_CAP, exec).len())
        });
    }
    group.finish();
}

fn transitivity_batch(c: &mut Criterion) {
    let g = CoxeterGroup::new(CoxeterType::D, 4).unwrap();
    let mut group = c.benchmark_group("D4 transitivity, all elements");
    group.sample_size(10);
    for (name, exec) in MODES {
        let opts = VerifyOptions { exec, ..VerifyOptions::with_scope(Scope::Exhaustive) };
        group.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, opts| {
            b.iter(|| verify(&g, Theorem::Transitivity, opts).unwrap().success)
        });
    }
    group.finish();
}

criterion_group!(benches, coxeter_orbit, transitivity_batch);
criterion_main!(benches);
