//! Minors as weighted sums over vertex-disjoint path families.

use tpkit::determinant::minor;
use tpkit::matrix::IndexSet;
use tpkit::netfact::{assemble, lindstrom_path_sum, random_tp_params, PlanarNetwork};

fn main() -> tpkit::error::Result<()> {
    let params = random_tp_params(4, 3, 5);
    let a = assemble(&params)?;
    let net = PlanarNetwork::from_params(&params)?;
    println!("network: {} layers, {} edges", net.layers, net.edges.len());
    for (rows, cols) in [(vec![3], vec![3]), (vec![2, 3], vec![2, 3]), (vec![1, 3], vec![2, 4])] {
        let (r, c) = (IndexSet::new(rows.clone(), 4)?, IndexSet::new(cols.clone(), 4)?);
        let paths = lindstrom_path_sum(&net, &r, &c)?;
        println!(
            "{rows:?} -> {cols:?}: {} families, path sum {}, minor {}",
            paths.families,
            paths.value,
            minor(&a, &r, &c)?
        );
    }
    Ok(())
}
