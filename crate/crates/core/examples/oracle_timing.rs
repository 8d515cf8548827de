use std::time::Instant;

use powerlap::{make_group, oracle::brute_spectrum};

fn main() {
    for factors in [vec![5u64, 5, 5], vec![2, 2, 4, 4, 4], vec![4, 4, 4, 4], vec![2; 8]] {
        let g = make_group(&factors).unwrap();
        let t = Instant::now();
        let s = brute_spectrum(&g, 300).unwrap();
        println!("{g}: {s} in {:?}", t.elapsed());
    }
}
