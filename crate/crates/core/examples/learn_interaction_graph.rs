//! Learns an interaction graph from synthetic movements where dimensions 0
//! and 1 move together and dimension 2 moves against them.

use vigpso::{update_graph, InteractionGraph, Matrix, RngStream, VigLearnConfig};

fn main() -> vigpso::Result<()> {
    let mut rng = RngStream::new(3);
    let rows: Vec<Vec<f64>> = (0..40)
        .map(|_| {
            let common = rng.uniform(-1.0, 1.0).unwrap();
            let noise = |rng: &mut RngStream| rng.uniform(-0.2, 0.2).unwrap();
            vec![
                common + noise(&mut rng),
                common + noise(&mut rng),
                -common + noise(&mut rng),
                rng.uniform(-1.0, 1.0).unwrap(),
            ]
        })
        .collect();
    let movements = Matrix::from_rows(&rows)?;
    let mut graph = InteractionGraph::empty(4);
    update_graph(&mut graph, &movements, &VigLearnConfig::default())?;
    for (i, j, w) in graph.edges() {
        println!("{i} -- {j}  weight {w:.3}");
    }
    for d in 0..4 {
        println!("neighbors of {d}: {:?}", graph.neighbors(d)?);
    }
    Ok(())
}
