//! Exact odd-degree character correspondences for `S_n`, `GL_n(q)` and
//! `GU_n(q)`, with the brute-force oracles used to check them.

pub mod error;
pub mod glu;
pub mod json;
pub mod omega;
pub mod oracle;
pub mod partition;
pub mod sym;
pub mod two_adic;
pub mod verify;

pub use error::{Error, Result};
pub use glu::{
    canonical_order, count_odd_irr_gl, is_odd_label, levi_star, odd_labels, parabolic_star, sl_census,
    sl_correspondence_data, GLabel, GPair, Kappa, ParabolicCorrespondent, SlCorrespondence,
};
pub use omega::{
    count_real_odd, galois_act, local_to_omega, omega_size, omega_to_local, outer_act, real_odd_closed_form, sharp_glu,
    sharp_glu_inverse, GaloisElement, NormalizerLocalLabel, OmegaBlock, OmegaLabel, OuterElement, OuterGenerator,
    ResidueLabel,
};
pub use partition::{HookPartition, Partition, RimHook, RimHookRemoval};
pub use sym::{
    alpha_sn, alpha_sn_inverse, clifford_labels, count_odd_irr_sn, sharp_sn, sharp_sn_inverse, star_sn, wreath_star,
    young_star, SylowLinearLabel, ThetaLabel, WreathBase, WreathOddLabel,
};
pub use two_adic::{binom_is_odd, two_adic, TwoAdicDecomposition, TwoPart};
pub use verify::{run_suite, Counterexample, Suite, VerifyParams, VerifyReport};
