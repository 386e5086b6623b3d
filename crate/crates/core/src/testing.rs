//! Test-only oracles.

pub fn levi_civita3(a: usize, b: usize, c: usize) -> f64 {
    let p = [a, b, c];
    if p.iter().any(|&x| !(1..=3).contains(&x)) || a == b || b == c || a == c {
        return 0.0;
    }
    // sign of the permutation by counting inversions
    let inv = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inv % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}
