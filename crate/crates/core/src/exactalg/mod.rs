//! Exact arithmetic: rationals, sparse polynomials, rational functions,
//! linear forms, and Gaussian elimination.

pub mod linform;
pub mod linsolve;
pub mod modular;
mod packed;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod rational;

pub use linform::LinForm;
pub use linsolve::{LinearSystem, Solution};
pub use poly::{Monomial, Poly, VarTable, WeightedDegree};
pub use ratfun::RatFun;
pub use rational::Rational;
