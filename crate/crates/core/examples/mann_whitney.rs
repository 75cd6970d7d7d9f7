//! Mann-Whitney U on small samples (exact p) and larger ones (normal
//! approximation).

use vigpso::stats::{mann_whitney_u, summarize};
use vigpso::RngStream;

fn main() -> vigpso::Result<()> {
    let a = [1.1, 2.3, 0.7, 1.9, 1.4];
    let b = [3.2, 2.8, 4.1, 3.9, 2.2];
    let r = mann_whitney_u(&a, &b)?;
    println!("small: U={} p={:.5} ({:?}) lower={:?}", r.u_statistic, r.p_value, r.method, r.lower);

    let mut rng = RngStream::new(8);
    let x: Vec<f64> = (0..30).map(|_| rng.uniform(0.0, 1.0).unwrap()).collect();
    let y: Vec<f64> = (0..30).map(|_| rng.uniform(0.2, 1.2).unwrap()).collect();
    let r = mann_whitney_u(&x, &y)?;
    let (sx, sy) = (summarize(&x)?, summarize(&y)?);
    println!(
        "large: medians {:.3} vs {:.3}, U={} p={:.5} ({:?}) significant={}",
        sx.median, sy.median, r.u_statistic, r.p_value, r.method, r.significant
    );
    Ok(())
}
