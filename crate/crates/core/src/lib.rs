//! Cyclically presented groups `G_n(w)` and the dynamics of their shift.
//!
//! * [`words`]: free-group words over `x_0, ..., x_{n-1}` and the shift `θ`.
//! * [`cyclic`]: cyclic presentations, orientability, the `G_n(k,l)` family.
//! * [`relative`]: relative presentations `(C_n, x : W)`, retractions and the
//!   rewriting `ρ^f` that yields cyclic presentations of retraction kernels.
//! * [`taxonomy`]: finiteness / asphericity / shift verdicts for `G_n(k,l)`.
//! * [`enumerate`]: Todd–Coxeter coset enumeration.
//! * [`dynamics`]: shift orbits on `G_n(w)` via cosets of `<a>` in `G_n(w) ⋊ C_n`.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod cyclic;
pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod perm;
pub mod relative;
pub mod taxonomy;
pub mod words;

pub use error::{Error, Result};
