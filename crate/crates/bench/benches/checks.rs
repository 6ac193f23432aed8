use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use semihopf::automata::verify_language_convolution;
use semihopf::hopf_analysis::{search_integrals_on, Side, DEFAULT_SEARCH_BUDGET};
use semihopf::structures::check_structure;
use semihopf::{example, Example, Semiring};
use semihopf_bench::{automata, words};

fn gallery(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_structure");
    group.sample_size(10);
    // gallery entries can share a name and semiring, so the index keeps ids unique
    for (i, (ex, s)) in Example::gallery().into_iter().enumerate() {
        let desc = example(&ex, &s).unwrap();
        group.bench_function(format!("{i:02}_{}/{}", ex.name(), s.name()), |b| {
            b.iter(|| check_structure(black_box(&desc), 2).unwrap())
        });
    }
    group.finish();
}

fn integrals(c: &mut Criterion) {
    let b = example(&Example::PolyGrouplike, &Semiring::boolean()).unwrap().into_bisemialgebra().unwrap();
    c.bench_function("search_integrals_on/poly_grouplike/5", |bench| {
        bench.iter(|| search_integrals_on(black_box(&b), Side::Left, 5, DEFAULT_SEARCH_BUDGET).unwrap())
    });
}

fn convolution(c: &mut Criterion) {
    for (label, unshuffle, len) in [("grouplike", false, 5), ("unshuffle", true, 4)] {
        let (a1, a2) = automata(&words(unshuffle));
        c.bench_function(&format!("language_convolution/{label}/{len}"), |b| {
            b.iter(|| verify_language_convolution(black_box(&a1), black_box(&a2), len).unwrap())
        });
    }
}

criterion_group!(benches, gallery, integrals, convolution);
criterion_main!(benches);
