//! Monte Carlo validation: tridiagonal beta-ensemble samplers, smallest
//! eigenvalue extraction and Kolmogorov-Smirnov comparison.

pub mod ks;
pub mod sample;
pub mod tridiag;

pub use ks::{
    batch_to_real, cdf_plot_data, ks_critical_value, ks_distance, ks_statistic, ks_two_sample, matching_cdf,
    plot_data_csv,
};
pub use sample::{sample_jbe, sample_lbe, SampleBatch, CHUNK};
pub use tridiag::{smallest_eigenvalue, TridiagonalMatrix};
