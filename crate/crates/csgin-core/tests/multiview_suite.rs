//! Randomized checks for multiview ideals: the linear-closure route and
//! the Segre-embedding route compute the same ideal, and the result is
//! Cartwright-Sturmfels with a Cohen-Macaulay initial complex.

use csgin_core::field::PrimeField;
use csgin_core::gin::{gin, DEFAULT_SEEDS};
use csgin_core::homology::reisner_cm;
use csgin_core::multiview::CameraSystem;
use csgin_core::order::TermOrder;

#[test]
fn routes_agree_across_shapes() {
    let f = PrimeField::default_prime();
    let configs: [(&[usize], usize); 10] = [
        (&[2, 2], 3),
        (&[2, 2], 4),
        (&[1, 2], 3),
        (&[3, 3], 4),
        (&[2, 3], 5),
        (&[2, 2, 2], 4),
        (&[1, 1, 2], 3),
        (&[3, 3, 3], 5),
        (&[2, 2, 3], 5),
        (&[1, 3], 4),
    ];
    for (i, &(dims, n)) in configs.iter().enumerate() {
        let system = CameraSystem::random(f, n, dims, 7000 + i as u64);
        let star = system.star_route();
        let segre = system.segre_route();
        assert!(star.equals(&segre), "config {i}: {dims:?} from dim {n}");
    }
}

#[test]
fn multiview_ideals_are_cartwright_sturmfels() {
    let f = PrimeField::default_prime();
    let configs: [(&[usize], usize); 4] = [
        (&[2, 2], 3),
        (&[2, 3], 4),
        (&[1, 2, 2], 3),
        (&[2, 2, 2], 4),
    ];
    for (i, &(dims, n)) in configs.iter().enumerate() {
        let system = CameraSystem::random(f, n, dims, 9000 + i as u64);
        let j = system.star_route();
        let vars: usize = dims.iter().sum();
        let g = gin(&j, &TermOrder::ambient(vars), &DEFAULT_SEEDS).unwrap();
        assert!(g.borel_certified, "config {i}");
        assert!(g.gin.is_squarefree(), "config {i}");
        assert!(reisner_cm(&f, &g.gin), "config {i}");
    }
}
