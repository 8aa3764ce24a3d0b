pub mod bits;
pub mod completions;
pub mod dlat;
pub mod dot;
pub mod error;
pub mod gallery;
pub mod matrix;
pub mod poset;
pub mod report;
pub mod run;
pub mod separations;
pub mod space;
pub mod symset;
