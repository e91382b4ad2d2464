// Bring a circular automaton into standardized form and read off its
// orbit data.
//
//     cargo run --example standardize

use creach::orbit::orbit_data;
use creach::standardize::{is_standardized, standardize};
use creach::Dfa;

fn main() {
    // `a` is the cycle here and `b` has defect 1, with its excluded state
    // far from 0: nothing is in standard position yet.
    let a = [1, 2, 3, 4, 5, 0];
    let b = [4, 0, 4, 5, 1, 2];
    let dfa = Dfa::new(&a, &b).expect("valid tables");
    assert!(!is_standardized(&dfa));

    let report = standardize(&dfa).expect("circular with a defect-1 letter");
    println!("cyclic letter: {}", report.circular_letter.as_char());
    println!("rotation {}, shift k = {}", report.rotation, report.shift_k);
    println!("relabeling old -> new: {:?}", report.relabeling);

    let std_dfa = &report.result;
    assert!(is_standardized(std_dfa));
    println!("standardized a: {}", std_dfa.action(creach::Letter::A));

    let od = orbit_data(std_dfa).expect("standardized");
    println!("d = {}, r = {}, orbit {:?}, gcds {:?}", od.d, od.r, od.orbit, od.gcds);
    println!("H0 generated by {} (full group: {})", od.h0_generator, od.h0_is_full);
}
