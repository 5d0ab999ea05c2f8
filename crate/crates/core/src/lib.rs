//! Exact truncated q-series arithmetic with the theta, Appell-Lerch and
//! indefinite theta machinery needed to verify class-number generating functions.

pub mod class_numbers;
pub mod combinatorics;
pub mod error;
pub mod eval;
pub mod jet;
pub mod mock_theta;
pub mod monomial;
pub mod products;
pub mod ring;
pub mod series;
pub mod theta;

pub use error::{Result, SeriesError};
pub use eval::{with_order, AtGaussian, AtRational, Formal, Integral, JetAtOne, PointEval, SeriesValue, ZEval};
pub use jet::Jet1;
pub use monomial::Monomial;
pub use ring::{Coeff, Gaussian, LaurentPoly};
pub use series::{Comparison, QSeries};
