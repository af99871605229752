use specht_lab::linalg::{solve, smith, IntMatrix};
use num_bigint::BigInt;
use std::time::Instant;

// reconstruct a 150x37-ish system resembling the witness solve shape:
// random small entries, unsolvable rhs
fn main() {
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move |bound: i64| {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        (state % (2*bound as u64 +1)) as i64 - bound
    };
    let rows = 150; let cols = 36;
    let mut a = IntMatrix::zero(rows, cols);
    for i in 0..rows { for j in 0..cols { if next(10) > 6 { a.set(i, j, BigInt::from(next(3))); } } }
    let b: Vec<BigInt> = (0..rows).map(|_| BigInt::from(next(5))).collect();
    let t = Instant::now();
    let s = solve(&a, &b, None);
    eprintln!("solve: {} [{:?}]", s.is_some(), t.elapsed());
    let t = Instant::now();
    let sm = smith(&a);
    eprintln!("smith: {} divisors [{:?}]", sm.divisors.len(), t.elapsed());
}
