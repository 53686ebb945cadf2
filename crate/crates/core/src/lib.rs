//! Sharp Bohr radii for three classes of harmonic mappings.
//!
//! Each radius is the unique zero of an explicit strictly increasing
//! function of r built from the class's coefficient, growth, and area
//! bounds. The crate evaluates the underlying series with rigorous
//! truncation bounds, solves the radius equations by bracketed bisection,
//! cross-validates dilogarithm closed forms against direct summation, and
//! recomputes every printed numeric radius, flagging the ones that cannot
//! be reproduced from their own displayed equations.

pub mod cli;
pub mod equations;
pub mod error;
pub mod series;
pub mod solver;
pub mod specfun;
pub mod verify;

pub use equations::{
    BohrPolynomial, ClassSpec, ProblemVariant, RadiusProblem,
};
pub use error::Error;
pub use series::{Alpha, SeriesEval, DEFAULT_EPS, R_MAX};
pub use solver::{Bracket, RadiusResult, DEFAULT_TOL};
pub use verify::{ComparisonRow, RowStatus, Verdict, VerificationReport};
