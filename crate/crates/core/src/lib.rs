//! Exact total stability conditions for type A quivers.
//!
//! A central charge `Z(x) = w . x + i (r . x)` with `r > 0` is *totally
//! stable* for a quiver `Q` when every indecomposable representation of `Q`
//! is `Z`-stable. For type A quivers this is decided by `n - 1` slope
//! inequalities between level sets of the staircase embedding of `Q`
//! ([`is_totally_stable_fast`]); the crate also ships a brute-force oracle
//! over all subrepresentations ([`is_totally_stable_oracle`]) and exact
//! constructions inside the stability cone ([`construct_total`],
//! [`minimality_witness`], [`lineality_check`]).
//!
//! ```
//! use typea_ts::{construct_total, is_totally_stable_oracle, CentralCharge, Rational, TypeAQuiver};
//!
//! let q: TypeAQuiver = "RRLRRLR".parse().unwrap();
//! let r = vec![Rational::one(); q.n()];
//! let w = construct_total(&q, &r).unwrap();
//! let z = CentralCharge::new(w, r).unwrap();
//! assert!(is_totally_stable_oracle(&q, &z).unwrap());
//! ```

pub mod cone;
pub mod error;
pub mod linalg;
pub mod quiver;
pub mod rational;
pub mod rep;
pub mod sampling;
pub mod stability;

pub use cone::{
    construct_total, inequality_matrix, lineality_check, minimality_witness, FiberReport, LinearFormSystem,
};
pub use error::{Error, Result};
pub use quiver::{all_orientations, Arrow, EmbeddingMap, LevelDecomposition, TypeAQuiver, VertexSet};
pub use rational::Rational;
pub use rep::{
    all_indecomposables, indecomposable_subreps, interval_module, subrepresentations, supports_containing_n,
    IntervalModule, SubrepSet,
};
pub use stability::{
    check_chains, dual_charge, is_stable, is_theta_stable, is_totally_stable_fast, is_totally_stable_oracle, slope,
    theta_weight, total_stability_inequalities, CentralCharge, Inequality, InequalitySystem, StabilityMode, Verdict,
};
