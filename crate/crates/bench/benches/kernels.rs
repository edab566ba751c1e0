use std::hint::black_box;

use covrough::gen::random_covering;
use covrough::{parse_covering, verify_identities, CharacteristicMatrices};
use covrough_bench::{naive_bool_product, naive_impl_product, random_matrix};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("products");
    for n in [16usize, 64, 256] {
        let a = random_matrix(n, n, 0.3, 1);
        let b = random_matrix(n, n, 0.7, 2);
        group.bench_with_input(BenchmarkId::new("bool/packed", n), &n, |bch, _| {
            bch.iter(|| black_box(&a).bool_product(black_box(&b)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("impl/packed", n), &n, |bch, _| {
            bch.iter(|| black_box(&a).impl_product(black_box(&b)).unwrap())
        });
        if n <= 64 {
            group.bench_with_input(BenchmarkId::new("bool/naive", n), &n, |bch, _| {
                bch.iter(|| naive_bool_product(black_box(&a), black_box(&b)))
            });
            group.bench_with_input(BenchmarkId::new("impl/naive", n), &n, |bch, _| {
                bch.iter(|| naive_impl_product(black_box(&a), black_box(&b)))
            });
        }
    }
    group.finish();
}

fn characteristic(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cov = random_covering(200, 40, &mut rng);
    c.bench_function("characteristic_matrices/200x40", |b| {
        b.iter(|| {
            let cm = CharacteristicMatrices::new(black_box(&cov));
            black_box(cm.pi_t_bool_pi().rows())
        })
    });
}

fn verify(c: &mut Criterion) {
    let cov = parse_covering("a b c d e f\na b\na c d\na b c d\nd e f\n").unwrap();
    c.bench_function("verify/worked_example_exhaustive", |b| {
        b.iter(|| verify_identities(black_box(&cov), true).unwrap().all_passed())
    });
}

criterion_group!(benches, products, characteristic, verify);
criterion_main!(benches);
