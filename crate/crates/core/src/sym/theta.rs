use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::degree::{branch_restrict, is_odd_partition};
use crate::partition::{attach_unique_gamma, rim_hooks_of_length, HookPartition, Partition};
use crate::two_adic::two_adic;

/// One hook per 2-adic block of `n`, largest block first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<HookPartition>", into = "Vec<HookPartition>")]
pub struct ThetaLabel {
    hooks: Vec<HookPartition>,
}

impl ThetaLabel {
    /// Checks that the hook sizes are distinct powers of two in
    /// decreasing order.
    pub fn new(hooks: Vec<HookPartition>) -> Result<Self> {
        for h in &hooks {
            if !h.m().is_power_of_two() {
                return Err(Error::domain(format!("hook {h} does not have 2-power size")));
            }
        }
        if hooks.windows(2).any(|w| w[0].m() <= w[1].m()) {
            return Err(Error::domain("theta label blocks must strictly decrease in size"));
        }
        Ok(ThetaLabel { hooks })
    }

    pub fn hooks(&self) -> &[HookPartition] {
        &self.hooks
    }

    pub fn size(&self) -> usize {
        self.hooks.iter().map(HookPartition::m).sum()
    }

    /// Every label for `n`, in lexicographic order of legs.
    pub fn all(n: usize) -> Vec<ThetaLabel> {
        let mut labels = vec![Vec::new()];
        for m in two_adic(n).block_sizes() {
            labels = labels
                .into_iter()
                .flat_map(|prefix: Vec<HookPartition>| {
                    HookPartition::all(m).map(move |h| {
                        let mut next = prefix.clone();
                        next.push(h);
                        next
                    })
                })
                .collect();
        }
        labels.into_iter().map(|hooks| ThetaLabel { hooks }).collect()
    }
}

impl TryFrom<Vec<HookPartition>> for ThetaLabel {
    type Error = Error;

    fn try_from(hooks: Vec<HookPartition>) -> Result<Self> {
        ThetaLabel::new(hooks)
    }
}

impl From<ThetaLabel> for Vec<HookPartition> {
    fn from(t: ThetaLabel) -> Self {
        t.hooks
    }
}

pub(crate) fn require_odd(lambda: &Partition) -> Result<()> {
    if is_odd_partition(lambda) {
        Ok(())
    } else {
        Err(Error::domain(format!("{lambda} is not an odd partition")))
    }
}

/// The unique odd partition obtained from `lambda` by removing one cell.
pub fn star_sn(lambda: &Partition) -> Result<Partition> {
    if lambda.size() < 2 {
        return Err(Error::domain(format!("{lambda} needs at least two cells")));
    }
    require_odd(lambda)?;
    let mut odd = branch_restrict(lambda).into_iter().filter(is_odd_partition);
    match (odd.next(), odd.next()) {
        (Some(mu), None) => Ok(mu),
        (None, _) => Err(Error::violation(format!("{lambda} has no odd branch"))),
        (Some(_), Some(_)) => Err(Error::violation(format!("{lambda} has several odd branches"))),
    }
}

/// Strips the rim hooks of the 2-adic block sizes of `n`, largest first.
pub fn alpha_sn(lambda: &Partition) -> Result<ThetaLabel> {
    require_odd(lambda)?;
    let mut current = lambda.clone();
    let mut hooks = Vec::new();
    for m in two_adic(lambda.size()).block_sizes() {
        let mut removals = rim_hooks_of_length(&current, m);
        if removals.len() != 1 {
            return Err(Error::violation(format!("{current} has {} rim hooks of length {m}", removals.len())));
        }
        let removal = removals.pop().expect("one removal");
        hooks.push(removal.hook_type);
        current = removal.remainder;
    }
    if !current.is_empty() {
        return Err(Error::violation(format!("stripping {lambda} left {current}")));
    }
    ThetaLabel::new(hooks)
}

/// Rebuilds the odd partition from its hooks, smallest block first.
pub fn alpha_sn_inverse(theta: &ThetaLabel) -> Result<Partition> {
    let mut current = Partition::empty();
    for &hook in theta.hooks().iter().rev() {
        let n = current.size() + hook.m();
        current = attach_unique_gamma(&current, hook, n)?;
    }
    Ok(current)
}

/// `|Irr_{2'}(S_n)| = 2^{n_1 + ... + n_r}`.
pub fn count_odd_irr_sn(n: usize) -> BigUint {
    BigUint::from(1u32) << two_adic(n).exponent_sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::degree::odd_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn h(m: usize, leg: usize) -> HookPartition {
        HookPartition::new(m, leg).unwrap()
    }

    #[test]
    fn star_examples() {
        for n in 2..10 {
            assert_eq!(star_sn(&Partition::row(n)).unwrap(), Partition::row(n - 1));
        }
        assert_eq!(star_sn(&p(&[2, 2, 1])).unwrap(), p(&[2, 1, 1]));
        assert_eq!(star_sn(&p(&[1, 1, 1])).unwrap(), p(&[1, 1]));
        assert!(matches!(star_sn(&p(&[2, 2])), Err(Error::Domain(_))));
        assert!(matches!(star_sn(&p(&[1])), Err(Error::Domain(_))));
    }

    #[test]
    fn alpha_examples() {
        for leg in 0..8 {
            let hook = h(8, leg);
            assert_eq!(alpha_sn(&hook.to_partition()).unwrap().hooks(), &[hook]);
        }
        assert_eq!(alpha_sn(&p(&[2, 2, 1])).unwrap().hooks(), &[h(4, 2), h(1, 0)]);
        assert_eq!(alpha_sn(&p(&[5])).unwrap().hooks(), &[h(4, 0), h(1, 0)]);
        assert_eq!(alpha_sn(&Partition::column(5)).unwrap().hooks(), &[h(4, 3), h(1, 0)]);
        // degree 4
        assert!(matches!(alpha_sn(&p(&[4, 1])), Err(Error::Domain(_))));
        assert!(alpha_sn(&p(&[2, 2])).is_err());
    }

    #[test]
    fn alpha_inverse_examples() {
        let theta = ThetaLabel::new(vec![h(4, 2), h(1, 0)]).unwrap();
        assert_eq!(alpha_sn_inverse(&theta).unwrap(), p(&[2, 2, 1]));
        let theta = ThetaLabel::new(vec![h(8, 0)]).unwrap();
        assert_eq!(alpha_sn_inverse(&theta).unwrap(), Partition::row(8));

        let mut images: Vec<Partition> = ThetaLabel::all(6).iter().map(|t| alpha_sn_inverse(t).unwrap()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 8);
        let mut census = odd_partitions(6);
        census.sort();
        assert_eq!(images, census);
    }

    #[test]
    fn counts() {
        assert_eq!(count_odd_irr_sn(1), BigUint::from(1u32));
        assert_eq!(count_odd_irr_sn(4), BigUint::from(4u32));
        assert_eq!(count_odd_irr_sn(6), BigUint::from(8u32));
        for n in 1..=14 {
            assert_eq!(count_odd_irr_sn(n), BigUint::from(odd_partitions(n).len()), "n={n}");
        }
    }

    #[test]
    fn theta_json_is_a_hook_list() {
        let theta = alpha_sn(&p(&[2, 2, 1])).unwrap();
        let json = serde_json::to_string(&theta).unwrap();
        assert_eq!(json, r#"[{"m":4,"leg":2},{"m":1,"leg":0}]"#);
        let back: ThetaLabel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, theta);
        assert!(serde_json::from_str::<ThetaLabel>(r#"[{"m":1,"leg":0},{"m":4,"leg":2}]"#).is_err());
        assert!(serde_json::from_str::<ThetaLabel>(r#"[{"m":3,"leg":0}]"#).is_err());
    }
}
