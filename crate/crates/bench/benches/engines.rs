use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;
use z2z4_core::oracle::{brute_kernel, brute_span_dim};
use z2z4_core::random::{random_code, RandomCodeSpec};
use z2z4_core::*;

fn constructed() -> Vec<(&'static str, AdditiveCode)> {
    let t9 = TypeParams::new(1, 9, 2, 5, 1);
    let t18 = TypeParams::new(1, 18, 2, 6, 1);
    let t40 = TypeParams::new(8, 40, 4, 12, 2);
    vec![
        ("(1,9;2,5;1)", construct_pair(&t9, 15, 7, FreeBlocks::Random(1)).unwrap()),
        ("(1,18;2,6;1)", construct_pair(&t18, 25, 8, FreeBlocks::Random(2)).unwrap()),
        ("(8,40;4,12;2)", construct_kernel(&t40, 16, FreeBlocks::Random(3)).unwrap()),
    ]
}

fn engines(c: &mut Criterion) {
    let mut g = c.benchmark_group("engines");
    for (name, code) in constructed() {
        g.bench_with_input(BenchmarkId::new("rank", name), &code, |b, code| b.iter(|| rank(black_box(code)).rank));
        g.bench_with_input(BenchmarkId::new("kernel", name), &code, |b, code| b.iter(|| kernel(black_box(code)).ker_dim));
        g.bench_with_input(BenchmarkId::new("kernel_via_chi", name), &code, |b, code| {
            b.iter(|| kernel_via_chi(black_box(code)).log_size())
        });
        g.bench_with_input(BenchmarkId::new("dual", name), &code, |b, code| b.iter(|| black_box(code).dual().log_size()));
        // Rebuilding from rows skips the cached standard form.
        let rows: Vec<MixedVector> = code.gen().rows().cloned().collect();
        g.bench_with_input(BenchmarkId::new("standard_form", name), &rows, |b, rows| {
            b.iter(|| {
                let code = AdditiveCode::from_rows(code.alpha(), code.beta(), black_box(rows)).unwrap();
                code.standard_form().matrix().rows().count()
            })
        });
    }
    g.finish();
}

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracles");
    g.sample_size(10);
    let guard = SizeGuard::default();
    let (name, code) = constructed().swap_remove(0);
    g.bench_function(BenchmarkId::new("brute_span_dim", name), |b| b.iter(|| brute_span_dim(black_box(&code), &guard).unwrap()));
    g.bench_function(BenchmarkId::new("brute_kernel", name), |b| b.iter(|| brute_kernel(black_box(&code), &guard).unwrap().len()));
    g.finish();
}

fn random_batch(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let codes: Vec<AdditiveCode> = (0..100).map(|_| random_code(&mut rng, &RandomCodeSpec::default())).collect();
    c.bench_function("rank_and_kernel/100_random_codes", |b| {
        b.iter(|| codes.iter().map(|code| rank(code).rank + kernel(code).ker_dim).sum::<usize>())
    });
}

criterion_group!(benches, engines, oracles, random_batch);
criterion_main!(benches);
