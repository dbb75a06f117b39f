//! The iterated Tor towers starting from F_p[x] and from F_p[x]/x^m.

use hochschild::gca::{b_double_prime, b_prime, poincare, tor_step, FreeGCA, Generator};

fn main() {
    for n in 1..=4 {
        let b = b_prime(2, n, 24).unwrap();
        println!("B'_{n}(2) = {b}");
    }
    let b2 = b_double_prime(3, 2, 3, 30).unwrap();
    println!("B''_2 at p = 3, m = 3: {b2}");
    println!("  series {}", poincare(&b2, 30).unwrap());

    let base = FreeGCA::new(2, vec![Generator::truncated("x", 2, 4)]).unwrap();
    let once = tor_step(&base, 20).unwrap();
    println!("Tor over F2[x]/x^4, |x| = 2: {once}");
}
