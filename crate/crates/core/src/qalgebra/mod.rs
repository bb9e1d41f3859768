//! Exact arithmetic in Q(q^{1/2}) and the truncated quantum affine space.

mod coeff;
mod poly;
mod series;

pub use coeff::QCoefficient;
pub use poly::Poly;
pub use series::{
    dilog_coefficient, dilog_series, lambda_of, Difference, Exponent, Lambda, QuantumSeries,
    SeriesTerm,
};
