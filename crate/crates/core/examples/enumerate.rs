// Walking through standardized automata with filters.
//
//     cargo run --release --example enumerate

use creach::enumerate::{enumerate_standardized, EnumerationConfig, Filter, Mode};
use creach::{builtin_example, Example};

fn main() {
    for n in 2..=6 {
        let count = |filters: Vec<Filter>| {
            let config = EnumerationConfig { n, filters, mode: Mode::Exhaustive { budget: 1_000_000 } };
            enumerate_standardized(&config).unwrap().filter(|r| r.is_ok()).count()
        };
        println!(
            "n = {n}: {} automata, {} with H0 = Z_n, {} perfectly reachable, {} with a non-n-expandable subset",
            count(vec![]),
            count(vec![Filter::H0Full]),
            count(vec![Filter::PerfectlyReachable]),
            count(vec![Filter::HasNonNExpandableSubset]),
        );
    }

    let config = EnumerationConfig {
        n: 21,
        filters: vec![Filter::HasNonNExpandableSubset],
        mode: Mode::Sampled { count: 200, seed: 2024, include: vec![builtin_example(Example::E21)] },
    };
    let hits: Vec<_> = enumerate_standardized(&config).unwrap().collect::<Result<_, _>>().unwrap();
    println!("n = 21 sample: {} hits (E21 pinned first)", hits.len());
}
