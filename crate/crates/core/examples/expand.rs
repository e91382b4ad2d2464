// Expanding and extending words for a subset that no short word expands.
//
//     cargo run --example expand

use creach::expand::{
    expands, is_n_extensible, orbit_expanding_word, shortest_expanding_word,
};
use creach::orbit::is_union_of_h0_cosets;
use creach::{builtin_example, parse_word, Example, StateSet};

fn main() {
    let e21 = builtin_example(Example::E21);
    let s = StateSet::from_states(21, [3, 10, 17]).unwrap();

    println!("{s} is a union of H0-cosets: {}", is_union_of_h0_cosets(&e21, &s).unwrap());
    println!("orbit word: {:?}", orbit_expanding_word(&e21, &s).unwrap());
    println!("expanding word of length <= 21: {:?}", shortest_expanding_word(&e21, &s, 21).unwrap());

    let w = shortest_expanding_word(&e21, &s, 22).unwrap().expect("exists at 22");
    let r = expands(&e21, &w, &s).unwrap().unwrap();
    println!("shortlex-least expander: {w} ({} letters), preimage {}", w.len(), r.preimage_witness);
    let known = parse_word("ab^14ab^6").unwrap();
    assert!(expands(&e21, &known, &s).unwrap().is_some());
    println!("21-extensible: {}", is_n_extensible(&e21, &s).unwrap());

    // A set that cuts a coset gets its word straight from an orbit edge.
    let cut = StateSet::from_states(21, [3, 10]).unwrap();
    let ow = orbit_expanding_word(&e21, &cut).unwrap().unwrap();
    println!("orbit word for {cut}: {ow}");
}
