// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic kernel: y-polynomials, α-series and graded Chern series.

mod graded;
mod poly;
mod series;

pub use graded::{multiplicative_sequence, partitions_of, power_sums, GradedSeries, Partition};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{Poly, QPolynomial, YPolynomial};
pub use series::{qy_series, todd_series, AlphaSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("series is not normalized (constant term must be 1)")]
    NotNormalized,
    #[error("series order {order} is below the requested degree {needed}")]
    OrderTooSmall { order: usize, needed: usize },
    #[error("exponential of a graded series with a constant term")]
    ConstantTermInExp,
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("malformed partition key {0:?}")]
    BadPartition(String),
}
