use std::sync::Arc;

use crate::error::{Error, Result};
use crate::symbolic::{Rational, RationalFunction};
use crate::tensor::{covariant_derivative, Chart, Geometry, TensorField, Variance};

use Variance::{Down, Up};

/// Causal character of the Reeb field, `ε = g(ξ, ξ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Epsilon {
    /// `ε = +1`.
    Spacelike,
    /// `ε = -1`.
    Timelike,
}

impl Epsilon {
    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Epsilon::Spacelike),
            -1 => Ok(Epsilon::Timelike),
            other => Err(Error::InvariantViolation(format!(
                "epsilon must be +1 or -1, got {other}"
            ))),
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Epsilon::Spacelike => 1,
            Epsilon::Timelike => -1,
        }
    }

    pub fn rational(self) -> Rational {
        Rational::from_integer(self.sign().into())
    }
}

/// An almost contact pseudo-metric structure `(φ, ξ, η, g, ε)` on one chart.
///
/// Construction checks shapes, that `g` is a symmetric nondegenerate metric
/// and that `g(ξ, ξ) = ε`. Everything else is reported by the verification
/// functions, so structures violating the remaining axioms can still be
/// loaded and diagnosed.
#[derive(Clone, Debug)]
pub struct ContactStructure {
    phi: TensorField,
    xi: TensorField,
    eta: TensorField,
    epsilon: Epsilon,
    n: usize,
    geometry: Arc<Geometry>,
}

impl PartialEq for ContactStructure {
    fn eq(&self, other: &Self) -> bool {
        self.epsilon == other.epsilon
            && self.phi == other.phi
            && self.xi == other.xi
            && self.eta == other.eta
            && self.geometry.metric == other.geometry.metric
    }
}

impl Eq for ContactStructure {}

fn require_slots(name: &str, t: &TensorField, chart: &Chart, slots: &[Variance]) -> Result<()> {
    if t.chart() != chart {
        return Err(Error::ChartMismatch(format!(
            "{name} lives on a different chart"
        )));
    }
    if t.slots() != slots {
        return Err(Error::SlotMismatch(format!(
            "{name} must have slots {slots:?}, got {:?}",
            t.slots()
        )));
    }
    Ok(())
}

impl ContactStructure {
    pub fn new(
        phi: TensorField,
        xi: TensorField,
        eta: TensorField,
        g: TensorField,
        epsilon: Epsilon,
    ) -> Result<Self> {
        let s = Self::from_parts_unchecked(phi, xi, eta, g, epsilon)?;
        let gxx = s.g_apply(&s.xi, &s.xi);
        if gxx != s.chart().constant(epsilon.rational()) {
            return Err(Error::InvariantViolation(format!(
                "g(ξ, ξ) = {gxx}, expected ε = {}",
                epsilon.sign()
            )));
        }
        Ok(s)
    }

    /// Like [`ContactStructure::new`] but skips the `g(ξ, ξ) = ε` check.
    pub fn from_parts_unchecked(
        phi: TensorField,
        xi: TensorField,
        eta: TensorField,
        g: TensorField,
        epsilon: Epsilon,
    ) -> Result<Self> {
        let chart = g.chart().clone();
        let n = chart.contact_n()?;
        require_slots("metric", &g, &chart, &[Down, Down])?;
        require_slots("φ", &phi, &chart, &[Up, Down])?;
        require_slots("ξ", &xi, &chart, &[Up])?;
        require_slots("η", &eta, &chart, &[Down])?;
        let geometry = Arc::new(Geometry::new(&g)?);
        Ok(ContactStructure {
            phi,
            xi,
            eta,
            epsilon,
            n,
            geometry,
        })
    }

    pub fn chart(&self) -> &Chart {
        self.geometry.chart()
    }

    pub fn phi(&self) -> &TensorField {
        &self.phi
    }

    pub fn xi(&self) -> &TensorField {
        &self.xi
    }

    pub fn eta(&self) -> &TensorField {
        &self.eta
    }

    pub fn metric(&self) -> &TensorField {
        &self.geometry.metric
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    /// `n` where the dimension is `2n+1`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn ricci(&self) -> &TensorField {
        &self.geometry.ricci
    }

    pub fn ricci_operator(&self) -> TensorField {
        self.geometry.ricci_operator()
    }

    pub fn scalar_curvature(&self) -> &RationalFunction {
        &self.geometry.scalar
    }

    /// `ε` as a constant function.
    pub fn eps_fn(&self) -> RationalFunction {
        self.chart().constant(self.epsilon.rational())
    }

    /// `g(X, Y)` for vector fields.
    pub fn g_apply(&self, x: &TensorField, y: &TensorField) -> RationalFunction {
        let n = self.chart().dim();
        let g = self.metric();
        let mut acc = self.chart().zero();
        for i in 0..n {
            for j in 0..n {
                let gij = g.get(&[i, j]);
                if !gij.is_zero() {
                    acc = &acc + &(&(gij * x.get(&[i])) * y.get(&[j]));
                }
            }
        }
        acc
    }

    /// The tensor `η ⊗ η`.
    pub fn eta_eta(&self) -> TensorField {
        self.eta.outer(&self.eta).expect("same chart")
    }

    /// The endomorphism `X ↦ η(X) ξ`, components `ξ^i η_j`.
    pub fn xi_eta(&self) -> TensorField {
        self.xi.outer(&self.eta).expect("same chart")
    }

    /// `dη(X,Y) = ½(X η(Y) - Y η(X) - η([X,Y]))`, components `½(∂_i η_j - ∂_j η_i)`.
    pub fn d_eta(&self) -> TensorField {
        let half = Rational::new(1.into(), 2.into());
        let d = self.eta.partials(); // d[j, i] = ∂_i η_j
        TensorField::from_fn(self.chart(), &[Down, Down], |idx| {
            let (i, j) = (idx[0], idx[1]);
            (d.get(&[j, i]) - d.get(&[i, j])).scale(&half)
        })
    }

    /// `Φ(X, Y) = g(X, φY)`, components `g_ik φ^k_j`.
    pub fn fundamental_two_form(&self) -> TensorField {
        self.metric()
            .contract_with(1, &self.phi, 0)
            .expect("slot layout")
    }

    /// Lowers the upper slot of a `(1,1)` tensor: `g(TX, Y)` with components
    /// `[j, i] = g_{ik} T^k_j`.
    pub fn lower_endomorphism(&self, t: &TensorField) -> Result<TensorField> {
        // contract_with gives [j, i] ordering directly from T^k_j g_{ki}
        t.contract_with(0, self.metric(), 0)
    }

    /// `∇ξ` as the endomorphism `X ↦ ∇_X ξ`.
    pub fn nabla_xi(&self) -> TensorField {
        covariant_derivative(&self.xi, &self.geometry.connection).expect("same chart")
    }

    pub fn with_metric(&self, g: TensorField) -> Result<Self> {
        Self::from_parts_unchecked(
            self.phi.clone(),
            self.xi.clone(),
            self.eta.clone(),
            g,
            self.epsilon,
        )
    }
}
