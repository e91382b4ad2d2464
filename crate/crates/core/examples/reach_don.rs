// Reaching subsets: the exact lattice search, the expansion recursion and
// the n(n - k) bound over every subset.
//
//     cargo run --release --example reach_don

use creach::reach::{reach_via_expansion, shortest_reaching_word, verify_don};
use creach::{builtin_example, parse_word, Example, StateSet};

fn main() {
    let e21 = builtin_example(Example::E21);
    let s = StateSet::from_states(21, [3, 10, 17]).unwrap();

    let long = parse_word(
        "(ab^15ab^3ab^4)^2ab^4(ab^3(ab^4)^2)^2ab^3ab^4ab^7(ab^4)^2ab^14ab^6",
    )
    .unwrap();
    println!("{} letters, image {}", long.len(), e21.image(&e21.all_states(), &long).unwrap());

    let shortest = shortest_reaching_word(&e21, &s).unwrap().expect("reachable");
    println!("shortest: {shortest} ({} letters, bound {})", shortest.len(), 21 * 18);

    let trace = reach_via_expansion(&e21, &s, 21).unwrap();
    for step in &trace.steps {
        println!("  {} <- {} via {}{}", step.set, step.expanded, step.word, if step.escalated { " (escalated)" } else { "" });
    }
    println!("expansion word: {} letters", trace.final_word.len());

    let report = verify_don(&e21).unwrap();
    for size in report.per_size.iter().filter(|s| s.k % 5 == 1) {
        println!("k = {:>2}: longest {:?} of bound {}", size.k, size.worst_length, size.bound);
    }
    println!("violations: {}, unreachable: {}", report.violations.len(), report.unreachable.len());
}
