//! Instance generators and the runtime scaling harness.

mod generate;
mod hard;
mod scaling;

pub use generate::{
    alphabet, gen_containing, gen_random_regex, pair_shapes, primitive_root_len, random_pair,
    random_word, size_range, GenError,
};
pub use hard::{gen_hard_family, HardInstance, TooSmall, HARD_DIMENSION};
pub use scaling::{
    fit_slope, geometric_sizes, route_instance, run_scaling, write_csv, BenchRecord, BenchRoute,
    ScalingReport, CSV_HEADER,
};
