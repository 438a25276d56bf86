//! Executable checks for the sign-regularity results on truncations:
//! hypotheses of the main theorem, the explicit `n0` bound for
//! `exp(a z^2) P`, the counterexample construction, and the even/odd corollary.

pub mod cor1;
pub mod thm1;
pub mod thm2;
pub mod thm3;

pub use cor1::{corollary1_verify, Cor1Report};
pub use thm1::{thm1_hypothesis_check, Thm1Report, Thm1Verdict};
pub use thm2::{thm2_n0_bound, thm2_polynomials, Thm2Report};
pub use thm3::{thm3_construct, thm3_violations, Thm3Base, Thm3Construction, Thm3Outcome};
