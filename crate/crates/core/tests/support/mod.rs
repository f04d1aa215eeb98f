#![allow(dead_code)]

use contactgeom::contact::{ContactStructure, Epsilon};
use contactgeom::symbolic::{rat, Rational, RationalFunction};
use contactgeom::tensor::{Chart, TensorField, Variance};

pub const BOTH: [Epsilon; 2] = [Epsilon::Spacelike, Epsilon::Timelike];

pub fn q(n: i64) -> Rational {
    rat(n, 1)
}

pub fn parse(chart: &Chart, src: &str) -> RationalFunction {
    chart.parse(src).unwrap()
}

pub fn matrix(chart: &Chart, rows: &[&[&str]]) -> Vec<Vec<RationalFunction>> {
    rows.iter()
        .map(|r| r.iter().map(|e| parse(chart, e)).collect())
        .collect()
}

pub fn list(chart: &Chart, items: &[&str]) -> Vec<RationalFunction> {
    items.iter().map(|e| parse(chart, e)).collect()
}

/// The worked example, written out component by component from its
/// definition rather than through the library constructor.
pub struct ExampleData {
    pub chart: Chart,
    pub g: TensorField,
    pub eta: TensorField,
    pub xi: TensorField,
    pub phi: TensorField,
}

pub fn example_data(eps: Epsilon) -> ExampleData {
    let chart = Chart::new(["x", "y", "z"]).unwrap();
    let e = eps.sign();
    let g = TensorField::bilinear(
        &chart,
        matrix(
            &chart,
            &[
                &[&format!("{e}*y^2/4 + 1/4"), "0", &format!("-{e}*y/4")],
                &["0", "1/4", "0"],
                &[&format!("-{e}*y/4"), "0", &format!("{e}/4")],
            ],
        ),
    )
    .unwrap();
    let eta = TensorField::covector(&chart, list(&chart, &["-y/2", "0", "1/2"])).unwrap();
    let xi = TensorField::vector(&chart, list(&chart, &["0", "0", "2"])).unwrap();
    let phi = TensorField::endomorphism(
        &chart,
        matrix(
            &chart,
            &[&["0", "1", "0"], &["-1", "0", "0"], &["0", "y", "0"]],
        ),
    )
    .unwrap();
    ExampleData {
        chart,
        g,
        eta,
        xi,
        phi,
    }
}

pub fn example(eps: Epsilon) -> ContactStructure {
    let d = example_data(eps);
    ContactStructure::new(d.phi, d.xi, d.eta, d.g, eps).unwrap()
}

/// Printed potential `V` of the example, coefficients expanded by hand.
pub fn example_potential(eps: Epsilon, lambda: i64, mu: i64) -> (i64, i64, i64) {
    let e = eps.sign();
    (
        2 - 6 * e + (e - 1) * lambda + (1 - 2 * e) * mu,
        2 * e - lambda,
        -(2 + e * lambda + mu),
    )
}

/// A contact structure on `ℝ³` with `h ≠ 0`, in coordinates `(x, y, t)`.
/// With `c = (1-t²)/(1+t²)`, `s = 2t/(1+t²)`: `η = ½(c dx + s dy)`, the
/// orthogonal coframe `w₂ = -s dx + c dy`, `w₃ = 2dt/(1+t²)`, and
/// `g = εη⊗η + ¼(w₂⊗w₂ + w₃⊗w₃)`. Flat for `ε = 1`; for `ε = -1`
/// it satisfies the nullity condition with `κ = 0`, `μ = 4`.
pub fn rotating_contact(eps: Epsilon) -> ContactStructure {
    let chart = Chart::new(["x", "y", "t"]).unwrap();
    let c = parse(&chart, "(1 - t^2)/(1 + t^2)");
    let s = parse(&chart, "2*t/(1 + t^2)");
    let zero = chart.zero();
    let half = rat(1, 2);
    let eta =
        TensorField::covector(&chart, vec![c.scale(&half), s.scale(&half), zero.clone()]).unwrap();
    let w2 = TensorField::covector(&chart, vec![-&s, c.clone(), zero.clone()]).unwrap();
    let w3 = TensorField::covector(
        &chart,
        vec![zero.clone(), zero.clone(), parse(&chart, "2/(1 + t^2)")],
    )
    .unwrap();
    let sq = |w: &TensorField| w.outer(w).unwrap();
    let g = sq(&eta)
        .scale(&eps.rational())
        .try_add(&sq(&w2).try_add(&sq(&w3)).unwrap().scale(&rat(1, 4)))
        .unwrap();
    let ginv = contactgeom::tensor::metric_inverse(&g).unwrap();
    let xi = ginv
        .contract_with(1, &eta, 0)
        .unwrap()
        .scale(&eps.rational());
    // φ = g⁻¹ dη as a (1,1) tensor: g_{ik} φ^k_j = dη_{ij}
    let deta = TensorField::from_fn(&chart, &[Variance::Down, Variance::Down], |idx| {
        let (i, j) = (idx[0], idx[1]);
        (&eta.get(&[j]).partial(i) - &eta.get(&[i]).partial(j)).scale(&half)
    });
    let phi = ginv.contract_with(1, &deta, 0).unwrap();
    ContactStructure::new(phi, xi, eta, g, eps).unwrap()
}

/// `g = δ`, `ξ = ∂z`, `η = dz`, `φ = 0`: almost contact axioms fail.
pub fn flat_r3() -> ContactStructure {
    let chart = Chart::new(["x", "y", "z"]).unwrap();
    let g = TensorField::bilinear(
        &chart,
        matrix(
            &chart,
            &[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]],
        ),
    )
    .unwrap();
    let xi = TensorField::vector(&chart, list(&chart, &["0", "0", "1"])).unwrap();
    let eta = TensorField::covector(&chart, list(&chart, &["0", "0", "1"])).unwrap();
    let phi = TensorField::zeros(&chart, &[Variance::Up, Variance::Down]);
    ContactStructure::new(phi, xi, eta, g, Epsilon::Spacelike).unwrap()
}

pub mod oracle {
    use contactgeom::symbolic::{rat, RationalFunction};
    use contactgeom::tensor::{Chart, Geometry, TensorField, Variance};
    use nalgebra::DMatrix;
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    /// Random polynomial of total degree ≤ `deg` with small integer
    /// coefficients.
    pub fn random_polynomial(chart: &Chart, rng: &mut ChaCha8Rng, deg: u32) -> RationalFunction {
        let n = chart.dim();
        let mut acc = chart.zero();
        for _ in 0..4 {
            let mut term = chart.int(rng.gen_range(-3..=3));
            for _ in 0..rng.gen_range(0..=deg) {
                term = &term * &chart.coordinate(rng.gen_range(0..n));
            }
            acc = &acc + &term;
        }
        acc
    }

    pub fn random_vector_field(chart: &Chart, rng: &mut ChaCha8Rng) -> TensorField {
        let comps = (0..chart.dim())
            .map(|_| random_polynomial(chart, rng, 2))
            .collect();
        TensorField::vector(chart, comps).unwrap()
    }

    /// Random rational coordinate in `[-2, 2]` with denominator up to 7.
    pub fn random_coordinate(rng: &mut ChaCha8Rng) -> contactgeom::symbolic::Rational {
        let den = rng.gen_range(1..=7);
        rat(rng.gen_range(-2 * den..=2 * den), den)
    }

    type MetricFn<'a> = dyn Fn(&[f64]) -> DMatrix<f64> + 'a;

    fn christoffel_numeric(g: &MetricFn, p: &[f64], h: f64) -> Vec<f64> {
        let n = p.len();
        let ginv = g(p).try_inverse().expect("invertible metric sample");
        // dg[k][(i, j)] = ∂_k g_ij
        let dg: Vec<DMatrix<f64>> = (0..n)
            .map(|k| {
                let mut plus = p.to_vec();
                let mut minus = p.to_vec();
                plus[k] += h;
                minus[k] -= h;
                (g(&plus) - g(&minus)) / (2.0 * h)
            })
            .collect();
        let mut gamma = vec![0.0; n * n * n];
        for a in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let mut s = 0.0;
                    for t in 0..n {
                        s += ginv[(a, t)] * (dg[i][(t, j)] + dg[j][(t, i)] - dg[t][(i, j)]);
                    }
                    gamma[(a * n + i) * n + j] = 0.5 * s;
                }
            }
        }
        gamma
    }

    /// Riemann tensor `R^h_{kji}` (row-major over `[h, k, j, i]`) from metric
    /// samples by nested second-order central differences.
    pub fn riemann_numeric(g: &MetricFn, p: &[f64], h: f64) -> Vec<f64> {
        let n = p.len();
        let gam = christoffel_numeric(g, p, h);
        let dgam: Vec<Vec<f64>> = (0..n)
            .map(|k| {
                let mut plus = p.to_vec();
                let mut minus = p.to_vec();
                plus[k] += h;
                minus[k] -= h;
                let a = christoffel_numeric(g, &plus, h);
                let b = christoffel_numeric(g, &minus, h);
                a.iter().zip(&b).map(|(x, y)| (x - y) / (2.0 * h)).collect()
            })
            .collect();
        let gi = |a: usize, b: usize, c: usize| gam[(a * n + b) * n + c];
        let mut out = vec![0.0; n * n * n * n];
        for hh in 0..n {
            for k in 0..n {
                for j in 0..n {
                    for i in 0..n {
                        let mut v = dgam[k][(hh * n + j) * n + i] - dgam[j][(hh * n + k) * n + i];
                        for l in 0..n {
                            v += gi(hh, k, l) * gi(l, j, i) - gi(hh, j, l) * gi(l, k, i);
                        }
                        out[((hh * n + k) * n + j) * n + i] = v;
                    }
                }
            }
        }
        out
    }

    /// Metric sampler from exact components.
    pub fn sampler(g: &TensorField) -> impl Fn(&[f64]) -> DMatrix<f64> + '_ {
        let n = g.dim();
        move |p: &[f64]| DMatrix::from_fn(n, n, |i, j| g.get(&[i, j]).eval_f64(p))
    }

    /// `𝔏_VΓ^h_{ij} = ∂_i∂_jV^h + V^k∂_kΓ^h_{ij} - Γ^k_{ij}∂_kV^h + Γ^h_{kj}∂_iV^k + Γ^h_{ik}∂_jV^k`.
    pub fn lie_connection_by_coordinates(v: &TensorField, geo: &Geometry) -> TensorField {
        let chart = geo.chart();
        let n = chart.dim();
        let gam = &geo.connection;
        TensorField::from_fn(
            chart,
            &[Variance::Up, Variance::Down, Variance::Down],
            |idx| {
                let (h, i, j) = (idx[0], idx[1], idx[2]);
                let mut acc = v.get(&[h]).partial(j).partial(i);
                for k in 0..n {
                    let vk = v.get(&[k]);
                    acc = &acc + &(vk * &gam.get(h, i, j).partial(k));
                    acc = &acc - &(gam.get(k, i, j) * &v.get(&[h]).partial(k));
                    acc = &acc + &(gam.get(h, k, j) * &vk.partial(i));
                    acc = &acc + &(gam.get(h, i, k) * &vk.partial(j));
                }
                acc
            },
        )
    }
}
