//! Tensor fields on a single chart: metric inversion, Levi-Civita connection,
//! curvature, covariant and Lie derivatives, and index gymnastics.

mod chart;
mod derivative;
mod field;
mod metric;

pub use chart::Chart;
pub use derivative::{
    covariant_derivative, covariant_derivative_along, directional_derivative, gradient, hessian,
    lie_connection_variation, lie_derivative,
};
pub use field::{TensorField, Variance};
pub use metric::{
    christoffel, invert_matrix, metric_determinant, metric_inverse, raise_lower, ricci, ricci_from,
    riemann, riemann_from, scalar_curvature, ConnectionCoefficients, Geometry, IndexMove,
};
