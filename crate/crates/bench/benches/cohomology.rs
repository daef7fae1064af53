use criterion::{black_box, criterion_group, criterion_main, Criterion};
use quatcohom::arith::rational;
use quatcohom::cohomology::compute_table;
use quatcohom::metric::{hkt_existence, SearchBounds};
use quatcohom::report::build_report;
use quatcohom::sl::jbar_decomposition;
use quatcohom::{corpus, Bindings, Session};

fn example2_half() -> Session {
    let t: Bindings = [("t".to_string(), rational(1, 2))].into_iter().collect();
    Session::new(&corpus::example2(), &t).unwrap()
}

fn sessions(c: &mut Criterion) {
    c.bench_function("session example1", |b| b.iter(|| Session::new(black_box(&corpus::example1()), &Bindings::new())));
    c.bench_function("session example3", |b| b.iter(|| Session::new(black_box(&corpus::example3()), &Bindings::new())));
}

fn tables(c: &mut Criterion) {
    let e1 = Session::new(&corpus::example1(), &Bindings::new()).unwrap();
    let e3 = Session::new(&corpus::example3(), &Bindings::new()).unwrap();
    c.bench_function("table example1", |b| b.iter(|| compute_table(black_box(&e1.double_complex()))));
    c.bench_function("table example3", |b| b.iter(|| compute_table(black_box(&e3.double_complex()))));
    c.bench_function("decomposition example3", |b| b.iter(|| jbar_decomposition(black_box(&e3))));
}

fn metrics(c: &mut Criterion) {
    let s = example2_half();
    let table = compute_table(&s.double_complex()).unwrap();
    c.bench_function("hkt search example2 t=1/2", |b| b.iter(|| hkt_existence(black_box(&s), &table, &SearchBounds::default())));
}

fn reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("full report");
    group.sample_size(10);
    let e1 = Session::new(&corpus::example1(), &Bindings::new()).unwrap();
    let e3 = Session::new(&corpus::example3(), &Bindings::new()).unwrap();
    group.bench_function("example1", |b| b.iter(|| build_report(black_box(&e1), &SearchBounds::default())));
    group.bench_function("example3", |b| b.iter(|| build_report(black_box(&e3), &SearchBounds::default())));
    group.finish();
}

criterion_group!(benches, sessions, tables, metrics, reports);
criterion_main!(benches);
