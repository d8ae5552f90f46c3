use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use geomseq_bench::long_sequence;
use geomseq_core::lincomp::{berlekamp_massey, minimal_poly_gcd};

fn lincomp(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear_complexity");
    group.sample_size(10);
    for (p, m) in [(11u64, 3usize), (23, 3), (29, 3)] {
        let seq = long_sequence(p, m, 1);
        let n = seq.period();
        group.bench_with_input(BenchmarkId::new("gcd", n), &seq, |b, s| {
            b.iter(|| minimal_poly_gcd(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("berlekamp_massey", n), &seq, |b, s| {
            b.iter(|| berlekamp_massey(black_box(s)))
        });
    }
    group.finish();
}

criterion_group!(benches, lincomp);
criterion_main!(benches);
