use super::residual::SolitonData;
use crate::contact::{ContactStructure, Epsilon};
use crate::symbolic::{rat, Rational};
use crate::tensor::{Chart, TensorField, Variance};

/// The Sasakian structure on `ℝ³` with `ξ = 2∂z`, `η = ½(dz - y dx)`,
/// `g = εη⊗η + ¼(dx² + dy²)`, together with the linear potential
/// `V = (2 - 6ε + (ε-1)λ + (1-2ε)μ) x ∂x + (2ε - λ) y ∂y - (2 + ελ + μ) z ∂z`.
pub fn builtin_example(
    epsilon: Epsilon,
    lambda: &Rational,
    mu: &Rational,
) -> (ContactStructure, SolitonData) {
    let chart = Chart::new(["x", "y", "z"]).expect("valid coordinates");
    let (x, y, z) = (
        chart.coordinate(0),
        chart.coordinate(1),
        chart.coordinate(2),
    );
    let zero = chart.zero();
    let c = |v: Rational| chart.constant(v);
    let e = epsilon.rational();

    let eta = TensorField::covector(
        &chart,
        vec![y.scale(&rat(-1, 2)), zero.clone(), c(rat(1, 2))],
    )
    .expect("three components");
    let xi = TensorField::vector(&chart, vec![zero.clone(), zero.clone(), chart.int(2)])
        .expect("three components");
    let phi = TensorField::endomorphism(
        &chart,
        vec![
            vec![zero.clone(), chart.one(), zero.clone()],
            vec![-&chart.one(), zero.clone(), zero.clone()],
            vec![zero.clone(), y.clone(), zero.clone()],
        ],
    )
    .expect("3×3");
    let flat = TensorField::from_fn(&chart, &[Variance::Down, Variance::Down], |i| {
        if i[0] == i[1] && i[0] < 2 {
            c(rat(1, 4))
        } else {
            zero.clone()
        }
    });
    let g = eta
        .outer(&eta)
        .expect("same chart")
        .scale(&e)
        .try_add(&flat)
        .expect("same slots");
    let s = ContactStructure::new(phi, xi, eta, g, epsilon).expect("the example is well formed");

    let two = rat(2, 1);
    let one = rat(1, 1);
    let vx = &(&(&two - &(rat(6, 1) * &e)) + &((&e - &one) * lambda)) + &((&one - &two * &e) * mu);
    let vy = &two * &e - lambda;
    let vz = -(&(&two + &(&e * lambda)) + mu);
    let v = TensorField::vector(&chart, vec![x.scale(&vx), y.scale(&vy), z.scale(&vz)])
        .expect("three components");
    (s, SolitonData::vector(v, lambda.clone(), mu.clone()))
}
