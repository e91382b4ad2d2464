// Reset words: exact within the lattice limit, greedy pair merging above.
//
//     cargo run --example sync

use creach::reach::{is_completely_reachable, shortest_reset_word};
use creach::{builtin_example, parse_word, Dfa, Example};

fn main() {
    let fig7 = builtin_example(Example::Fig7);
    let known = parse_word("ab^4ab(ab^2)^2aba").unwrap();
    println!("{known} maps Q onto {}", fig7.image(&fig7.all_states(), &known).unwrap());
    let r = shortest_reset_word(&fig7).expect("synchronizing");
    println!("shortest reset word: {} ({} letters)", r.word, r.word.len());
    println!("completely reachable: {}", is_completely_reachable(&fig7).unwrap());

    let e48 = builtin_example(Example::E48);
    let r = shortest_reset_word(&e48).expect("synchronizing");
    println!("E48 reset word: {} letters, shortest: {}", r.word.len(), r.minimal);

    let rotation = Dfa::circular(&[0, 1, 2, 3, 4]).unwrap();
    println!("permutation automaton synchronizing: {}", shortest_reset_word(&rotation).is_some());
}
