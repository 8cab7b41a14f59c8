//! Degree reduction of overlapped polynomials, exact quadratic-surd arithmetic and
//! closed-form solvers, applied to an ellipse inscribed in a right triangle together with
//! three equal tangent circles.

pub mod asym;
pub mod closed_form;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod poly;
pub mod quintic;
pub mod svg;
pub mod sym;
pub mod top;

pub use asym::{solve_asymmetric, SolveReport, TriangleConfig};
pub use error::{Error, Result};
pub use numeric::{rat, BigReal, Complex, ExactField, Field, Rational, Real, Scalar, Surd2};
pub use poly::Polynomial;
pub use sym::{solve_symmetric, SymmetricSolution};
pub use top::{reduce_chain, shared_root, OverlapSpec};

pub type RationalPoly = Polynomial<Rational>;
pub type SurdPoly = Polynomial<Surd2>;
pub type RealPoly = Polynomial<BigReal>;
pub type F64Poly = Polynomial<f64>;
pub type F32Poly = Polynomial<f32>;
