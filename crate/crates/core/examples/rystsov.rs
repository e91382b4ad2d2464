// Edges forced by defect-1 words: the restricted digraph, the full one via
// Cayley closure, and the perfect-reachability verdict.
//
//     cargo run --example rystsov

use creach::dot::{export_dot, DotStyle};
use creach::rystsov::{
    cayley_generators, forced_edge, is_perfectly_reachable, restricted_rystsov_digraph,
    rystsov_digraph, RystsovMethod,
};
use creach::{builtin_example, parse_word, Example};

fn main() {
    let e12 = builtin_example(Example::E12);

    let short = restricted_rystsov_digraph(&e12);
    println!("words of length <= 12 force {} edges:", short.edge_count());
    print!("{}", export_dot(&short, &DotStyle::default()));
    println!("strongly connected: {}", short.is_strongly_connected());

    let long = parse_word("(ab^10)^4a").unwrap();
    let edge = forced_edge(&e12, &long).expect("defect 1");
    println!("{} ({} letters) forces {} -> {}", long, long.len(), edge.source, edge.target);

    let gens = cayley_generators(&e12).unwrap();
    println!("Cayley generators: {gens}");
    let full = rystsov_digraph(&e12, RystsovMethod::CayleyClosure).unwrap();
    println!(
        "full digraph: {} edges, strongly connected: {}",
        full.edge_count(),
        full.is_strongly_connected()
    );
    assert!(is_perfectly_reachable(&e12));
}
