//! Odd-degree character correspondences for symmetric groups and their
//! odd-index subgroups.

pub mod sharp;
pub mod theta;
pub mod wreath;

pub use sharp::{
    hook_signs, sharp_sn, sharp_sn_inverse, signs_hook, sylow_to_theta, theta_to_sylow, young_star, SylowLinearLabel,
};
pub use theta::{alpha_sn, alpha_sn_inverse, count_odd_irr_sn, star_sn, ThetaLabel};
pub use wreath::{clifford_labels, wreath_has_odd_index, wreath_star, WreathBase, WreathOddLabel};
