//! Sequential vs rayon execution for the two data-parallel sweeps: batch
//! classification of a corpus and the orbit scan along a fixed curve.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use revsym_core::classifier::{analyze, ConditionId};
use revsym_core::corpus::small_corpus;
use revsym_core::dynamics::{find_symmetric_orbits, NumericMap, SearchOptions};
use revsym_core::map_algebra::GeneralisedStandardMap;
use revsym_core::par::Execution;
use revsym_core::poly::UniPoly;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn classify(c: &mut Criterion) {
    let maps: Vec<_> = small_corpus().into_iter().step_by(8).collect();
    let mut group = c.benchmark_group("analyze_corpus");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &maps, |b, maps| {
            b.iter(|| mode.map(maps, |l| analyze(black_box(l)).map(|r| r.reversible()).unwrap_or(false)))
        });
    }
    group.finish();
}

fn orbit_scan(c: &mut Criterion) {
    let l = GeneralisedStandardMap::new(UniPoly::from_ints(&[0, -1]), UniPoly::from_ints(&[0, 2, -2]));
    let r = analyze(&l).unwrap().witness(ConditionId::T2_R2).unwrap().map.forward().clone();
    let nm = NumericMap::new(&l);
    let mut group = c.benchmark_group("orbit_scan_period9");
    for (name, execution) in MODES {
        let opts = SearchOptions {
            samples: 20_000,
            execution,
            ..SearchOptions::default()
        };
        group.bench_function(name, |b| b.iter(|| find_symmetric_orbits(&nm, black_box(&r), 9, &opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, classify, orbit_scan);
criterion_main!(benches);
