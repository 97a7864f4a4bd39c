use copula_design::optimizer::{fedorov_wynn, OptimizerConfig};
use copula_design::{BinaryLogisticProblem, CopulaSpec, GaussianMarginProblem, Model, Problem, QuadratureRule};
use criterion::{criterion_group, criterion_main, Criterion};

fn optimize(c: &mut Criterion) {
    let quad = QuadratureRule::graded(64, 3);
    let config = OptimizerConfig::default();
    let mut group = c.benchmark_group("fedorov_wynn");
    group.sample_size(10);

    let linear = Problem::Continuous(GaussianMarginProblem::fedorov(CopulaSpec::product(), false));
    let linear = Model::new(&linear, &quad).unwrap();
    group.bench_function("linear_independent", |b| {
        b.iter(|| fedorov_wynn(&linear, &config).unwrap())
    });

    let fgm = Problem::Continuous(GaussianMarginProblem::fedorov(CopulaSpec::fgm(0.45).unwrap(), true));
    let fgm = Model::new(&fgm, &quad).unwrap();
    group.bench_function("linear_fgm", |b| b.iter(|| fedorov_wynn(&fgm, &config).unwrap()));

    for (name, spec) in [
        ("binary_frank", CopulaSpec::frank(15.0).unwrap()),
        ("binary_clayton", CopulaSpec::clayton(6.42).unwrap()),
    ] {
        let p = BinaryLogisticProblem::standard(spec, true);
        group.bench_function(name, |b| b.iter(|| fedorov_wynn(&p, &config).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, optimize);
criterion_main!(benches);
