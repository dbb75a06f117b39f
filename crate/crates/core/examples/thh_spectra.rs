//! Higher THH of ko, tmf, ku and ℓ with coefficients in F_p[μ_2].

use hochschild::gca::{e2_page, poincare, thh_with_coefficients, Spectrum};

fn main() {
    for e in [Spectrum::Ko, Spectrum::Tmf, Spectrum::Ku, Spectrum::Ell(3)] {
        let answer = thh_with_coefficients(e, 40).unwrap();
        println!("{e}: {answer}");
        println!("  series {}", poincare(&answer, 20).unwrap());
        println!("  E² of order 2: {}", e2_page(e, 2, 40).unwrap());
    }
}
