// Orbit digraph, its short-edge restriction, and the spanning chain that
// shows both have the cosets of H0 as strongly connected components.
//
//     cargo run --example orbit_digraphs

use creach::orbit::{orbit_data, orbit_digraph, restricted_orbit_digraph, spanning_gamma};
use creach::{builtin_example, Example};

fn main() {
    let e48 = builtin_example(Example::E48);
    let od = orbit_data(&e48).expect("built-ins are standardized");
    println!("orbit {:?}, gcd chain {:?}", od.orbit, od.gcds);

    let full = orbit_digraph(&e48).unwrap();
    let short = restricted_orbit_digraph(&e48).unwrap();
    let dropped: Vec<_> = full
        .edge_pairs()
        .into_iter()
        .filter(|&(s, t)| !short.has_edge(s, t))
        .collect();
    println!("{} orbit edges, long ones dropped: {dropped:?}", full.edge_count());

    for s in 0..od.ell {
        let g = spanning_gamma(&e48, s).unwrap();
        println!(
            "spanning step {s}: {} edges, {} components, all short: {}",
            g.edge_count(),
            g.sccs().len(),
            g.is_subgraph_of(&short)
        );
    }
    assert_eq!(short.sccs(), od.h0_cosets());
    for comp in short.sccs() {
        println!("component {comp:?}");
    }
}
