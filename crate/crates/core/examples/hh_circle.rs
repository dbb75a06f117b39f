//! Hochschild homology of small algebras over the circle and the 2-sphere.

use hochschild::algebra::FinAlgebra;
use hochschild::exact::Coefficients;
use hochschild::loday::LodayInput;
use hochschild::simplicial::FinSimplicialSet;
use std::sync::Arc;

fn main() {
    let f2 = Coefficients::prime_field(2).unwrap();
    let circle = Arc::new(FinSimplicialSet::circle());
    let sphere = Arc::new(FinSimplicialSet::sphere_minimal(2).unwrap());
    let dual = Arc::new(FinAlgebra::truncated_polynomial(f2, 2, 1).unwrap());

    println!("F2[x]/x^2 over S^1");
    print!("{}", LodayInput::absolute(circle.clone(), dual.clone(), 6).hh().unwrap());
    println!("F2[x]/x^2 over S^2");
    print!("{}", LodayInput::absolute(sphere, dual, 5).hh().unwrap());
    println!("Z[i] over S^1");
    print!("{}", LodayInput::absolute(circle, Arc::new(FinAlgebra::gaussian_integers()), 5).hh().unwrap());
}
