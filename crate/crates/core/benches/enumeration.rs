use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cyclestat::enumerate::{ClassSpec, Enumerator};
use cyclestat::exec::with_workers;
use cyclestat::formulas::{verify_batch, Claim};
use cyclestat::perm::CycleType;
use cyclestat::Execution;

/// On a single-core host `Parallel` falls back to the sequential path, so
/// the two lines only separate with more than one rayon worker.
fn strategies() -> [(&'static str, Enumerator); 2] {
    [
        (
            "sequential",
            Enumerator::default().with_execution(Execution::Sequential),
        ),
        (
            "parallel",
            Enumerator::default().with_execution(Execution::Parallel),
        ),
    ]
}

fn class_fold(c: &mut Criterion) {
    let mut group = c.benchmark_group("dist_joint");
    group.sample_size(10);
    for lambda in ["2,3,4", "1,2,3,4"] {
        let spec = ClassSpec::cycle_type(CycleType::parse(lambda).unwrap());
        for (name, en) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, lambda), &spec, |b, spec| {
                b.iter(|| black_box(en.dist_joint(spec).unwrap()))
            });
        }
        let en = Enumerator::default().with_execution(Execution::Parallel);
        group.bench_with_input(
            BenchmarkId::new("parallel-4-workers", lambda),
            &spec,
            |b, spec| b.iter(|| with_workers(4, || black_box(en.dist_joint(spec).unwrap()))),
        );
    }
    group.finish();
}

fn batch_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_theorem5");
    group.sample_size(10);
    for (name, en) in strategies() {
        group.bench_function(name, |b| {
            b.iter(|| black_box(verify_batch(&en, Claim::Theorem5, 7, None).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, class_fold, batch_verify);
criterion_main!(benches);
