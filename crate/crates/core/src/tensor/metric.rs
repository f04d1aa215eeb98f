//! Metric inversion, Levi-Civita connection and curvature.
//!
//! Curvature convention: `R(X,Y) = [∇_X, ∇_Y] - ∇_[X,Y]`, stored as a tensor
//! with slots `[h, k, j, i]` so that `R(∂_k, ∂_j)∂_i = R^h_{kji} ∂_h`. The
//! Ricci tensor is `Ric(X,Y) = tr(Z ↦ R(Z,X)Y)`, i.e. `Ric_{ji} = R^h_{hji}`.

use super::chart::Chart;
use super::field::{TensorField, Variance};
use crate::error::{Error, Result};
use crate::symbolic::RationalFunction;

use Variance::{Down, Up};

fn require_metric(g: &TensorField) -> Result<()> {
    if g.slots() != [Down, Down] {
        return Err(Error::SlotMismatch(format!(
            "metric must be a (0,2) tensor, got slots {:?}",
            g.slots()
        )));
    }
    let n = g.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            if g.get(&[i, j]) != g.get(&[j, i]) {
                return Err(Error::InvariantViolation(format!(
                    "metric is not symmetric: g[{i}][{j}] != g[{j}][{i}]"
                )));
            }
        }
    }
    Ok(())
}

/// Gauss-Jordan elimination on a square matrix of rational functions.
/// Returns the determinant and, when it is not identically zero, the inverse.
pub fn invert_matrix(
    rows: &[Vec<RationalFunction>],
) -> (RationalFunction, Option<Vec<Vec<RationalFunction>>>) {
    let n = rows.len();
    let vars = rows[0][0].vars().clone();
    let mut a: Vec<Vec<RationalFunction>> = rows.to_vec();
    let mut inv: Vec<Vec<RationalFunction>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        RationalFunction::one(&vars)
                    } else {
                        RationalFunction::zero(&vars)
                    }
                })
                .collect()
        })
        .collect();
    let mut det = RationalFunction::one(&vars);
    for col in 0..n {
        // Prefer constant pivots: they keep the intermediate expressions small.
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| (!a[r][col].is_constant(), r));
        let Some(p) = pivot else {
            return (RationalFunction::zero(&vars), None);
        };
        if p != col {
            a.swap(p, col);
            inv.swap(p, col);
            det = -&det;
        }
        let pv = a[col][col].clone();
        det = &det * &pv;
        let pinv = pv.recip().expect("nonzero pivot");
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                }
                if !inv[col][j].is_zero() {
                    inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
                }
            }
        }
    }
    (det, Some(inv))
}

fn matrix_of(t: &TensorField) -> Vec<Vec<RationalFunction>> {
    let n = t.dim();
    (0..n)
        .map(|i| (0..n).map(|j| t.get(&[i, j]).clone()).collect())
        .collect()
}

pub fn metric_determinant(g: &TensorField) -> Result<RationalFunction> {
    require_metric(g)?;
    Ok(invert_matrix(&matrix_of(g)).0)
}

/// The inverse metric `g^{ij}` as a `(2,0)` tensor.
pub fn metric_inverse(g: &TensorField) -> Result<TensorField> {
    require_metric(g)?;
    let (_, inv) = invert_matrix(&matrix_of(g));
    let inv = inv.ok_or(Error::DegenerateMetric)?;
    TensorField::from_components(g.chart(), &[Up, Up], inv.into_iter().flatten().collect())
}

/// Christoffel symbols of the Levi-Civita connection, indexed `(h, i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionCoefficients {
    chart: Chart,
    gamma: Vec<RationalFunction>,
}

impl ConnectionCoefficients {
    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    /// `Γ^h_{ij}`.
    pub fn get(&self, h: usize, i: usize, j: usize) -> &RationalFunction {
        let n = self.chart.dim();
        &self.gamma[(h * n + i) * n + j]
    }

    /// The symbols as a (non-tensorial) array with slots `[h, i, j]`.
    pub fn as_array(&self) -> TensorField {
        TensorField::from_components(&self.chart, &[Up, Down, Down], self.gamma.clone())
            .expect("shape")
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(RationalFunction::is_zero)
    }
}

fn christoffel_with(g: &TensorField, ginv: &TensorField) -> ConnectionCoefficients {
    let chart = g.chart().clone();
    let n = chart.dim();
    let dg = g.partials(); // dg[a, b, c] = ∂_c g_ab
                           // First kind: [ij, l] = ½(∂_i g_lj + ∂_j g_li - ∂_l g_ij)
    let first = TensorField::from_fn(&chart, &[Down, Down, Down], |idx| {
        let (l, i, j) = (idx[0], idx[1], idx[2]);
        if i > j {
            return chart.zero();
        }
        let s = &(dg.get(&[l, j, i]) + dg.get(&[l, i, j])) - dg.get(&[i, j, l]);
        s.scale(&crate::symbolic::rat(1, 2))
    });
    let mut gamma = vec![chart.zero(); n * n * n];
    for h in 0..n {
        for i in 0..n {
            for j in i..n {
                let mut acc = chart.zero();
                for l in 0..n {
                    let a = ginv.get(&[h, l]);
                    let b = first.get(&[l, i, j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                gamma[(h * n + j) * n + i] = acc.clone();
                gamma[(h * n + i) * n + j] = acc;
            }
        }
    }
    ConnectionCoefficients { chart, gamma }
}

pub fn christoffel(g: &TensorField) -> Result<ConnectionCoefficients> {
    let ginv = metric_inverse(g)?;
    Ok(christoffel_with(g, &ginv))
}

/// `R^h_{kji} = ∂_k Γ^h_{ji} - ∂_j Γ^h_{ki} + Γ^h_{kl} Γ^l_{ji} - Γ^h_{jl} Γ^l_{ki}`.
pub fn riemann_from(conn: &ConnectionCoefficients) -> TensorField {
    let chart = conn.chart().clone();
    let n = chart.dim();
    let dgamma = conn.as_array().partials(); // [h, i, j, k] = ∂_k Γ^h_ij
    let mut comps = vec![chart.zero(); n * n * n * n];
    let at = |h: usize, k: usize, j: usize, i: usize| ((h * n + k) * n + j) * n + i;
    for h in 0..n {
        for k in 0..n {
            for j in (k + 1)..n {
                for i in 0..n {
                    let mut acc = dgamma.get(&[h, j, i, k]) - dgamma.get(&[h, k, i, j]);
                    for l in 0..n {
                        let a = conn.get(h, k, l);
                        let b = conn.get(l, j, i);
                        if !a.is_zero() && !b.is_zero() {
                            acc = &acc + &(a * b);
                        }
                        let c = conn.get(h, j, l);
                        let d = conn.get(l, k, i);
                        if !c.is_zero() && !d.is_zero() {
                            acc = &acc - &(c * d);
                        }
                    }
                    comps[at(h, j, k, i)] = -&acc;
                    comps[at(h, k, j, i)] = acc;
                }
            }
        }
    }
    TensorField::from_components(&chart, &[Up, Down, Down, Down], comps).expect("shape")
}

pub fn riemann(g: &TensorField) -> Result<TensorField> {
    Ok(riemann_from(&christoffel(g)?))
}

/// `Ric_{ji} = R^h_{hji}`.
pub fn ricci_from(riem: &TensorField) -> TensorField {
    riem.contract(0, 1)
        .expect("riemann has slots [Up, Down, Down, Down]")
}

pub fn ricci(g: &TensorField) -> Result<TensorField> {
    Ok(ricci_from(&riemann(g)?))
}

fn full_trace(ginv: &TensorField, t: &TensorField) -> RationalFunction {
    let n = t.dim();
    let mut acc = t.chart().zero();
    for i in 0..n {
        for j in 0..n {
            let a = ginv.get(&[i, j]);
            let b = t.get(&[i, j]);
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(a * b);
            }
        }
    }
    acc
}

pub fn scalar_curvature(g: &TensorField) -> Result<RationalFunction> {
    let ginv = metric_inverse(g)?;
    let ric = ricci_from(&riemann_from(&christoffel_with(g, &ginv)));
    Ok(full_trace(&ginv, &ric))
}

/// Direction for [`raise_lower`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexMove {
    Raise,
    Lower,
}

/// Raises or lowers one slot in place using `g` or its inverse. The slot keeps
/// its position.
pub fn raise_lower(
    t: &TensorField,
    slot: usize,
    direction: IndexMove,
    geometry: &Geometry,
) -> Result<TensorField> {
    if slot >= t.rank() {
        return Err(Error::SlotMismatch(format!("slot {slot} out of range")));
    }
    let (want, metric) = match direction {
        IndexMove::Raise => (Down, &geometry.inverse),
        IndexMove::Lower => (Up, &geometry.metric),
    };
    if t.slots()[slot] != want {
        return Err(Error::SlotMismatch(format!(
            "slot {slot} is {:?}; cannot {:?} it",
            t.slots()[slot],
            direction
        )));
    }
    // Contract, which moves the new index to the end, then move it back.
    let moved = t.contract_with(slot, metric, 0)?;
    let rank = t.rank();
    let perm: Vec<usize> = (0..rank)
        .map(|k| match k.cmp(&slot) {
            std::cmp::Ordering::Less => k,
            std::cmp::Ordering::Equal => rank - 1,
            std::cmp::Ordering::Greater => k - 1,
        })
        .collect();
    moved.permute(&perm)
}

/// Metric together with everything derived from it.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub metric: TensorField,
    pub inverse: TensorField,
    pub connection: ConnectionCoefficients,
    pub riemann: TensorField,
    pub ricci: TensorField,
    pub scalar: RationalFunction,
}

impl Geometry {
    pub fn new(g: &TensorField) -> Result<Self> {
        let inverse = metric_inverse(g)?;
        let connection = christoffel_with(g, &inverse);
        let riemann = riemann_from(&connection);
        let ricci = ricci_from(&riemann);
        let scalar = full_trace(&inverse, &ricci);
        Ok(Geometry {
            metric: g.clone(),
            inverse,
            connection,
            riemann,
            ricci,
            scalar,
        })
    }

    pub fn chart(&self) -> &Chart {
        self.metric.chart()
    }

    /// The Ricci operator `Q`, defined by `g(QX, Y) = Ric(X, Y)`.
    pub fn ricci_operator(&self) -> TensorField {
        // Q^i_j = g^{ik} Ric_kj
        self.inverse
            .contract_with(1, &self.ricci, 0)
            .expect("inverse metric has slots [Up, Up]")
    }

    /// `g^{ij} T_ij` for a `(0,2)` tensor.
    pub fn metric_trace(&self, t: &TensorField) -> Result<RationalFunction> {
        if t.slots() != [Down, Down] {
            return Err(Error::SlotMismatch(
                "metric trace needs a (0,2) tensor".into(),
            ));
        }
        Ok(full_trace(&self.inverse, t))
    }

    /// Full contraction `A^{ij} B_{ij}` of two `(0,2)` tensors with both
    /// indices of `A` raised.
    pub fn inner_product_02(&self, a: &TensorField, b: &TensorField) -> Result<RationalFunction> {
        let a_up = raise_lower(a, 0, IndexMove::Raise, self)?;
        let a_up = raise_lower(&a_up, 1, IndexMove::Raise, self)?;
        let n = a.dim();
        let mut acc = a.chart().zero();
        for i in 0..n {
            for j in 0..n {
                acc = &acc + &(a_up.get(&[i, j]) * b.get(&[i, j]));
            }
        }
        Ok(acc)
    }
}
