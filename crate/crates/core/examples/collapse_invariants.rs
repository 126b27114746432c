// Free-vertex collapse: ell equals the vertex bound n exactly for trees,
// and on connected non-trees every branch ends in the same (ell, A, W).

use herzog::collapse::{collapse, collapse_all_branches, Graph, DEFAULT_BRANCH_BOUND};
use herzog::Result;

pub fn run_example() -> Result<()> {
    let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (4, 5)])?;
    let c = collapse(&g);
    println!("triangle with two tails: ell = {}, removed {:?}, core {:?}", c.ell, c.removed, c.core);

    for nverts in 1..=5 {
        let (mut trees, mut others) = (0, 0);
        for g in Graph::all_graphs(nverts).filter(Graph::is_connected) {
            let ell = collapse(&g).ell;
            assert_eq!(ell == nverts - 1, g.is_tree());
            if g.is_tree() {
                trees += 1;
            } else {
                assert_eq!(collapse_all_branches(&g, DEFAULT_BRANCH_BOUND)?.len(), 1);
                others += 1;
            }
        }
        println!("{nverts} vertices: {trees} labelled trees, {others} connected non-trees, all consistent");
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
