//! Experiment statistics, published reference tables, result export and the
//! command-line front end.

pub mod cli;
pub mod export;
pub mod reference;
pub mod reproduce;
pub mod stats;
