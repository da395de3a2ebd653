//! Exact traces of Hecke operators `T(l)` (square-free `l`) on spaces of
//! newforms `S_k^0(N)` for `Gamma_0(N)`, dimensions of those spaces, and their
//! refinement by the signs `a_p = ±p^(k/2-1)` at primes exactly dividing `N`.
//!
//! Everything is computed with exact rationals. Traces are assembled from the
//! Eichler-Selberg trace formula, specialised to square-free `l`, and pushed
//! down to newforms with the Möbius-type convolution `mu * mu[l]`.
//!
//! Module map:
//!
//! * [`arith`]: factorizations, Kronecker symbols, Dirichlet convolution.
//! * [`quadratic`]: fundamental discriminants and imaginary quadratic class numbers.
//! * [`hecke_trace`]: local densities, the `Lambda` functions and the trace formulas.
//! * [`dimension`]: `dim S_k(N)` and `dim S_k^0(N)`.
//! * [`eigensplit`]: traces and dimensions on the sign subspaces `S_k^0(N; i)`.
//! * [`qexpansion`]: truncated q-series and the level 14 primitive forms.

pub mod arith;
pub mod dimension;
pub mod eigensplit;
mod error;
pub mod hecke_trace;
pub mod qexpansion;
pub mod quadratic;

pub use arith::{factor, Factored, Rat};
pub use error::{Error, Result};
pub use hecke_trace::TraceQuery;
