pub mod error;
pub mod examples;
pub mod fusion;
pub mod hopf;
pub mod io;
pub mod matrix;
pub mod reconstruct;
pub mod repcat;
pub mod report;
pub mod scalar;
