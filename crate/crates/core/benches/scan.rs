use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use knotcert::irred::{decide_irreducible, IrredConfig};
use knotcert::par::Exec;
use knotcert::pipeline::scan_family;
use knotcert::IntPoly;

fn modes() -> [(&'static str, Exec); 2] {
    [
        ("sequential", Exec::Sequential),
        ("parallel", Exec::Parallel),
    ]
}

fn family_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan_family");
    g.sample_size(10);
    for n_max in [8, 16] {
        for (name, exec) in modes() {
            g.bench_with_input(BenchmarkId::new(name, n_max), &n_max, |b, &n| {
                b.iter(|| scan_family(black_box(n), exec).unwrap())
            });
        }
    }
    g.finish();
}

fn single_decision(c: &mut Criterion) {
    // n = 6: settled by the sieve, which batches primes across threads
    let mut coeffs = vec![0i64; 27];
    coeffs[0] = 1;
    coeffs[13] = -3;
    coeffs[26] = 1;
    let f = IntPoly::from_i64(&coeffs);
    let mut g = c.benchmark_group("decide_irreducible");
    g.sample_size(10);
    for (name, exec) in modes() {
        let cfg = IrredConfig {
            exec,
            ..IrredConfig::default()
        };
        g.bench_function(name, |b| {
            b.iter(|| decide_irreducible(black_box(&f), &cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, family_scan, single_decision);
criterion_main!(benches);
