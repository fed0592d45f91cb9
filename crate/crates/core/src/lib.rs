pub mod cli;
pub mod compound;
pub mod condensation;
pub mod corpus;
pub mod determinant;
pub mod error;
pub mod fixtures;
pub mod hankel;
pub mod io;
pub mod matrix;
pub mod netfact;
pub mod positivity;
pub mod rational;
pub mod report;
pub mod reproduce;
pub mod rng;
