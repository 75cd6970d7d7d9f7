//! Lists the benchmark suite and evaluates each function at its optimum and
//! at a random point.

use vigpso::benchmarks::{evaluate, LOWER_BOUND, UPPER_BOUND};
use vigpso::{BenchmarkKind, RngStream};

fn main() {
    let dim = 10;
    let mut rng = RngStream::new(1);
    let x: Vec<f64> = (0..dim).map(|_| rng.uniform(LOWER_BOUND, UPPER_BOUND).unwrap()).collect();
    println!("{:<14} {:<20} {:>12} {:>14}", "function", "class", "f(optimum)", "f(random)");
    for kind in BenchmarkKind::ALL {
        let at_opt = evaluate(kind.name(), &kind.optimum_point(dim)).unwrap();
        let at_x = evaluate(kind.name(), &x).unwrap();
        println!(
            "{:<14} {:<20} {:>12.3e} {:>14.6}",
            kind.name(),
            kind.separability().to_string(),
            at_opt,
            at_x
        );
    }
}
