//! Exact finite fibonomial operator calculus.
//!
//! The crate covers the Fibonacci-number analogue of Rota's finite operator
//! calculus: fibonomial coefficients, the F-derivative `∂F x^n = F_n x^{n-1}`
//! and the algebra of shift-invariant operators built from it, basic and
//! Sheffer polynomial sequences of delta operators, and the Fibonacci cobweb
//! poset together with its two-chain realizer.
//!
//! All arithmetic is exact (`num_rational::BigRational`).


pub mod cobweb;
pub mod error;
pub mod operator;
pub mod poly;
pub mod rational;
pub mod sequence;
pub mod umbral;


pub use error::{Error, Result};
pub use operator::{f_shift_value, xhat_apply, xhat_inverse_apply, DeltaOperator, OperatorSeries};
pub use poly::Polynomial;
pub use rational::{parse_rational, Rational};
pub use sequence::SequenceSpec;
