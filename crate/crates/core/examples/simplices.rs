//! Levels of a few finite simplicial sets, with faces of the top simplex of Δ_2.

use hochschild::simplicial::FinSimplicialSet;

fn main() {
    let models = [
        ("Δ_2", FinSimplicialSet::delta(2).unwrap()),
        ("∂Δ_2", FinSimplicialSet::boundary_delta(2).unwrap()),
        ("S^2", FinSimplicialSet::sphere_minimal(2).unwrap()),
        ("T^2", FinSimplicialSet::torus()),
    ];
    for (name, x) in &models {
        let sizes: Vec<String> = (0..=5).map(|n| x.level(n).len().to_string()).collect();
        println!("{name:<5} {}", sizes.join(" "));
    }

    let delta = &models[0].1;
    let top = delta.simplices_at(2).into_iter().find(|s| !s.is_degenerate()).unwrap();
    for i in 0..=2 {
        println!("d_{i} {} = {}", delta.display(&top), delta.display(&delta.face(&top, i)));
    }
    let s = delta.degeneracy(&top, 1);
    for i in 0..=3 {
        println!("d_{i} {} = {}", delta.display(&s), delta.display(&delta.face(&s, i)));
    }
}
