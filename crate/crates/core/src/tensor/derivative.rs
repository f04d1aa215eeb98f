//! Covariant and Lie derivatives, gradient, Hessian and the Lie variation of
//! the connection.

use super::field::{multi_indices, TensorField, Variance};
use super::metric::{ConnectionCoefficients, Geometry};
use crate::error::{Error, Result};
use crate::symbolic::{rat, RationalFunction};

use Variance::{Down, Up};

fn require_vector(v: &TensorField) -> Result<()> {
    if v.slots() == [Up] {
        Ok(())
    } else {
        Err(Error::SlotMismatch(format!(
            "expected a vector field, got slots {:?}",
            v.slots()
        )))
    }
}

/// Levi-Civita covariant derivative. The new lower slot, appended last, is
/// the direction: `(∇T)[.., k] = (∇_k T)[..]`.
pub fn covariant_derivative(t: &TensorField, conn: &ConnectionCoefficients) -> Result<TensorField> {
    if t.chart() != conn.chart() {
        return Err(Error::ChartMismatch(
            "tensor and connection on different charts".into(),
        ));
    }
    let chart = t.chart();
    let n = chart.dim();
    let rank = t.rank();
    let dt = t.partials();
    let mut slots = t.slots().to_vec();
    slots.push(Down);
    let mut comps = Vec::with_capacity(dt.components().len());
    let mut shifted = vec![0; rank];
    for idx in multi_indices(n, rank + 1) {
        let k = idx[rank];
        let base = &idx[..rank];
        let mut acc = dt.get(&idx).clone();
        for (s, variance) in t.slots().iter().enumerate() {
            shifted.copy_from_slice(base);
            for l in 0..n {
                shifted[s] = l;
                let comp = t.get(&shifted);
                if comp.is_zero() {
                    continue;
                }
                match variance {
                    Up => {
                        let g = conn.get(base[s], k, l);
                        if !g.is_zero() {
                            acc = &acc + &(g * comp);
                        }
                    }
                    Down => {
                        let g = conn.get(l, k, base[s]);
                        if !g.is_zero() {
                            acc = &acc - &(g * comp);
                        }
                    }
                }
            }
        }
        comps.push(acc);
    }
    TensorField::from_components(chart, &slots, comps)
}

/// Covariant derivative of `t` along the vector field `x`: `∇_X T`.
pub fn covariant_derivative_along(
    t: &TensorField,
    x: &TensorField,
    conn: &ConnectionCoefficients,
) -> Result<TensorField> {
    require_vector(x)?;
    let dt = covariant_derivative(t, conn)?;
    dt.contract_with(t.rank(), x, 0)
}

/// `V(f)`.
pub fn directional_derivative(f: &RationalFunction, v: &TensorField) -> Result<RationalFunction> {
    require_vector(v)?;
    if f.vars() != v.chart().vars() {
        return Err(Error::ChartMismatch(
            "function and vector field on different charts".into(),
        ));
    }
    let mut acc = v.chart().zero();
    for (k, vk) in v.components().iter().enumerate() {
        if !vk.is_zero() {
            acc = &acc + &(vk * &f.partial(k));
        }
    }
    Ok(acc)
}

/// Lie derivative `𝔏_V T` for a tensor of arbitrary valence:
/// `V^k ∂_k T - Σ_upper T^{..k..} ∂_k V^a + Σ_lower T_{..k..} ∂_b V^k`.
pub fn lie_derivative(t: &TensorField, v: &TensorField) -> Result<TensorField> {
    require_vector(v)?;
    if t.chart() != v.chart() {
        return Err(Error::ChartMismatch(
            "tensor and vector field on different charts".into(),
        ));
    }
    let chart = t.chart();
    let n = chart.dim();
    let rank = t.rank();
    let dt = t.partials();
    let dv = v.partials(); // dv[a, k] = ∂_k V^a
    let mut full = vec![0; rank + 1];
    let mut shifted = vec![0; rank];
    Ok(TensorField::from_fn(chart, t.slots(), |idx| {
        let mut acc = chart.zero();
        full[..rank].copy_from_slice(idx);
        for k in 0..n {
            let vk = v.get(&[k]);
            if vk.is_zero() {
                continue;
            }
            full[rank] = k;
            let d = dt.get(&full);
            if !d.is_zero() {
                acc = &acc + &(vk * d);
            }
        }
        for (s, variance) in t.slots().iter().enumerate() {
            shifted.copy_from_slice(idx);
            for k in 0..n {
                shifted[s] = k;
                let comp = t.get(&shifted);
                if comp.is_zero() {
                    continue;
                }
                match variance {
                    Up => {
                        let d = dv.get(&[idx[s], k]);
                        if !d.is_zero() {
                            acc = &acc - &(comp * d);
                        }
                    }
                    Down => {
                        let d = dv.get(&[k, idx[s]]);
                        if !d.is_zero() {
                            acc = &acc + &(comp * d);
                        }
                    }
                }
            }
        }
        acc
    }))
}

/// Lie derivative of the Levi-Civita connection along `V`, a `(1,2)` tensor
/// symmetric in its lower slots:
/// `(𝔏_V Γ)^h_{ij} = ½ g^{ht} (∇_j L_{it} + ∇_i L_{jt} - ∇_t L_{ij})` with
/// `L = 𝔏_V g`.
pub fn lie_connection_variation(v: &TensorField, geometry: &Geometry) -> Result<TensorField> {
    let lg = lie_derivative(&geometry.metric, v)?;
    let dl = covariant_derivative(&lg, &geometry.connection)?; // dl[a, b, c] = ∇_c L_ab
    let chart = geometry.chart();
    let lowered = TensorField::from_fn(chart, &[Down, Down, Down], |idx| {
        let (t, i, j) = (idx[0], idx[1], idx[2]);
        let s = &(dl.get(&[i, t, j]) + dl.get(&[j, t, i])) - dl.get(&[i, j, t]);
        s.scale(&rat(1, 2))
    });
    geometry.inverse.contract_with(1, &lowered, 0)
}

/// Gradient `Df` with `g(Df, X) = X(f)`.
pub fn gradient(f: &RationalFunction, geometry: &Geometry) -> Result<TensorField> {
    let chart = geometry.chart();
    if f.vars() != chart.vars() {
        return Err(Error::ChartMismatch("function on a different chart".into()));
    }
    let df = TensorField::covector(chart, (0..chart.dim()).map(|k| f.partial(k)).collect())?;
    geometry.inverse.contract_with(1, &df, 0)
}

/// Hessian `∇²f`, `(Hess f)_{ij} = ∂_i ∂_j f - Γ^k_{ij} ∂_k f`.
pub fn hessian(f: &RationalFunction, conn: &ConnectionCoefficients) -> Result<TensorField> {
    let chart = conn.chart();
    if f.vars() != chart.vars() {
        return Err(Error::ChartMismatch("function on a different chart".into()));
    }
    let n = chart.dim();
    let first: Vec<RationalFunction> = (0..n).map(|k| f.partial(k)).collect();
    Ok(TensorField::from_fn(chart, &[Down, Down], |idx| {
        let (i, j) = (idx[0], idx[1]);
        let mut acc = first[j].partial(i);
        for (k, fk) in first.iter().enumerate() {
            let g = conn.get(k, i, j);
            if !g.is_zero() && !fk.is_zero() {
                acc = &acc - &(g * fk);
            }
        }
        acc
    }))
}
