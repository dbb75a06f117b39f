//! Relative homology of (Δ_2, ∂Δ_2), compared with the quotient Δ_2/∂Δ_2 = S^2.
//! The first two tables agree.

use hochschild::algebra::{AlgebraMap, FinAlgebra};
use hochschild::exact::Coefficients;
use hochschild::loday::LodayInput;
use hochschild::simplicial::SimplicialPair;
use std::sync::Arc;

fn main() {
    let f2 = Coefficients::prime_field(2).unwrap();
    let a = Arc::new(FinAlgebra::truncated_polynomial(f2, 2, 1).unwrap());
    let eps = AlgebraMap::augmentation(a.clone()).unwrap();
    let k = eps.target().clone();
    let pair = SimplicialPair::delta_boundary(2).unwrap();

    let relative = LodayInput::relative(pair.clone(), eps.clone(), AlgebraMap::identity(k), 4).unwrap();
    println!("L over (Δ_2, ∂Δ_2) with B = C = F2");
    print!("{}", relative.hh().unwrap());

    let quotient = Arc::new(pair.quotient());
    println!("L over Δ_2/∂Δ_2 with F2 at the basepoint");
    print!("{}", LodayInput::with_coefficients(quotient.clone(), eps, 4).hh().unwrap());
    println!("L over Δ_2/∂Δ_2 with A everywhere");
    print!("{}", LodayInput::absolute(quotient, a, 4).hh().unwrap());
}
