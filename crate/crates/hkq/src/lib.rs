//! Exact and numerical engines for quantising Sp(1)-symmetric hyper-Kähler
//! spaces.
//!
//! The crate is organised around two kinds of computation:
//!
//! * **Exact algebra** — integer-coefficient Laurent polynomials in torus
//!   variables ([`charring`]), truncated Laurent series in a grading variable
//!   with character coefficients, and a fixed-point localisation engine
//!   ([`genseries`]). Cohomological dimension bookkeeping over the twistor
//!   sphere lives in [`cp1rep`].
//! * **Numerics** — complete elliptic integrals by AGM, the Atiyah–Hitchin
//!   metric coefficients, and adaptive quadrature ([`specfun`]), driving the
//!   integrability checks of the worked geometries in [`models`].
//!
//! The [`models`] module reduces four example geometries (flat quaternionic
//! space, Taub–NUT, the Atiyah–Hitchin manifold, ADHM instanton data) to
//! inputs for the engines above, together with their verification routines.
//!
//! Every exact operation is deterministic and pure; numerical routines take
//! explicit tolerances and report convergence. A thin command-line front end
//! over the library is provided by the `hkq` binary (see [`cli`]), and the
//! `examples/` directory contains one runnable example per capability.

pub mod charring;
pub mod cli;
pub mod cp1rep;
pub mod error;
pub mod genseries;
pub mod models;
pub mod specfun;

pub use error::{Error, Result};
