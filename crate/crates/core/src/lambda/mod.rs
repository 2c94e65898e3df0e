//! Exterior-power generating series of Lagrangian-cycle Chern-Mather data.

mod coefficients;
mod series;

pub use coefficients::{c2_gap, e_coefficient};
pub use series::{
    alt_class, alt_via_newton, e_lambda, one_plus_x_pow, series_exp, series_log, series_mul,
    LagrangianChernData, ThetaSeries,
};
