//! Exact real-rootedness: Sturm counts, root isolation, certificates,
//! Hermite-Biehler interlacing, even/odd imaginary-zero checks and
//! multiplier sequences. Every verdict is decided over exact rationals.

pub mod certify;
pub mod interlace;
pub mod lemma2;
pub mod multiplier;
pub mod poly;
pub mod random;
pub mod sturm;

pub use certify::{is_hyperbolic, real_roots, CertifiedRoot, HyperbolicPolynomial, Hyperbolicity, Refutation};
pub use interlace::{from_complex_roots, hermite_biehler_check, InterlaceVerdict};
pub use lemma2::{even_odd_imaginary_check, Lemma2Report, PartCheck};
pub use multiplier::{
    apply_multiplier, multiplier_sequence_test, test_series, MultiplierReport, MultiplierSequence,
    MultiplierVerdict,
};
pub use poly::{ExactPolynomial, Field, Polynomial};
pub use sturm::{isolate_roots, sturm_count, sturm_sequence, Bound, RootInterval};
