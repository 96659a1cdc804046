use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::perm_group::LinearCharacter;
use crate::partition::{HookPartition, Partition};
use crate::sym::theta::{alpha_sn, alpha_sn_inverse, ThetaLabel};
use crate::two_adic::{odd_multinomial_order, two_adic};

/// A linear character of the Sylow 2-subgroup of `S_n`, as sign bits on
/// the generators of each 2-adic block (largest block first). A block of
/// size `2^e` carries `e` bits, bit `j` being the sign on the swap of the
/// two halves of its leading sub-block of size `2^{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")]
pub struct SylowLinearLabel {
    blocks: Vec<Vec<u8>>,
}

impl SylowLinearLabel {
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<Self> {
        if blocks.iter().flatten().any(|&b| b > 1) {
            return Err(Error::domain("sign bits must be 0 or 1"));
        }
        if blocks.windows(2).any(|w| w[0].len() <= w[1].len()) {
            return Err(Error::domain("blocks must strictly decrease in bit length"));
        }
        Ok(SylowLinearLabel { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    /// Degree of the symmetric group the label belongs to.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| 1usize << b.len()).sum()
    }

    /// All bits in the generator order of [`crate::oracle::sylow2_subgroup`].
    pub fn bits(&self) -> Vec<u8> {
        self.blocks.iter().flatten().copied().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().flatten().all(|&b| b == 0)
    }

    /// Reads a `{+1, -1}`-valued character of `sylow2_subgroup(n)`.
    pub fn from_linear_character(n: usize, phi: &LinearCharacter) -> Result<Self> {
        let bits = phi.sign_bits().ok_or_else(|| Error::domain("linear character is not sign valued"))?;
        let mut rest = bits.as_slice();
        let mut blocks = Vec::new();
        for &e in two_adic(n).exponents() {
            if rest.len() < e as usize {
                return Err(Error::domain("too few generator values for n"));
            }
            let (head, tail) = rest.split_at(e as usize);
            blocks.push(head.iter().map(|&b| b as u8).collect());
            rest = tail;
        }
        if !rest.is_empty() {
            return Err(Error::domain("too many generator values for n"));
        }
        SylowLinearLabel::new(blocks)
    }
}

impl TryFrom<Vec<Vec<u8>>> for SylowLinearLabel {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<u8>>) -> Result<Self> {
        SylowLinearLabel::new(blocks)
    }
}

impl From<SylowLinearLabel> for Vec<Vec<u8>> {
    fn from(l: SylowLinearLabel) -> Self {
        l.blocks
    }
}

/// Sign bits of the linear constituent of odd multiplicity in the hook
/// character. Reading `s_0, ..., s_{e-1}` as a binary number (most
/// significant first) gives the reflected Gray code of the leg.
pub fn hook_signs(hook: HookPartition) -> Result<Vec<u8>> {
    let m = hook.m();
    if !m.is_power_of_two() {
        return Err(Error::domain(format!("hook {hook} does not have 2-power size")));
    }
    let e = m.trailing_zeros() as usize;
    let gray = hook.leg() ^ (hook.leg() >> 1);
    Ok((0..e).map(|j| ((gray >> (e - 1 - j)) & 1) as u8).collect())
}

/// Inverse of [`hook_signs`].
pub fn signs_hook(bits: &[u8]) -> Result<HookPartition> {
    let e = bits.len();
    if e >= usize::BITS as usize {
        return Err(Error::Unsupported(format!("block of 2^{e} points")));
    }
    let gray = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
    let mut leg = gray;
    let mut shift = gray >> 1;
    while shift > 0 {
        leg ^= shift;
        shift >>= 1;
    }
    HookPartition::new(1 << e, leg)
}

/// The linear character of the Sylow 2-subgroup that corresponds to
/// `lambda`: the block-wise hook labels of `alpha_sn(lambda)`.
pub fn sharp_sn(lambda: &Partition) -> Result<SylowLinearLabel> {
    theta_to_sylow(&alpha_sn(lambda)?)
}

pub fn sharp_sn_inverse(label: &SylowLinearLabel) -> Result<Partition> {
    alpha_sn_inverse(&sylow_to_theta(label)?)
}

pub fn theta_to_sylow(theta: &ThetaLabel) -> Result<SylowLinearLabel> {
    let blocks = theta.hooks().iter().map(|&h| hook_signs(h)).collect::<Result<_>>()?;
    SylowLinearLabel::new(blocks)
}

pub fn sylow_to_theta(label: &SylowLinearLabel) -> Result<ThetaLabel> {
    let hooks = label.blocks().iter().map(|b| signs_hook(b)).collect::<Result<_>>()?;
    ThetaLabel::new(hooks)
}

/// Assigns each 2-adic block of `n = sum k_i` to the unique `k_i` whose
/// binary expansion contains it. Errors if the multinomial is even.
pub(crate) fn split_blocks(blocks: &[usize]) -> Result<Vec<usize>> {
    if odd_multinomial_order(blocks).is_none() {
        return Err(Error::domain(format!("{blocks:?} does not have an odd multinomial coefficient")));
    }
    let n: usize = blocks.iter().sum();
    two_adic(n)
        .block_sizes()
        .map(|size| {
            let mut owners = blocks.iter().enumerate().filter(|(_, &k)| k & size != 0);
            match (owners.next(), owners.next()) {
                (Some((i, _)), None) => Ok(i),
                _ => Err(Error::violation(format!("block {size} of {n} is not owned by exactly one of {blocks:?}"))),
            }
        })
        .collect()
}

/// The odd characters `psi_i` of `S_{k_i}`, in the order of `blocks`,
/// obtained by splitting `sharp_sn(lambda)` along the Young subgroup.
pub fn young_star(lambda: &Partition, blocks: &[usize]) -> Result<Vec<Partition>> {
    let n: usize = blocks.iter().sum();
    if n != lambda.size() {
        return Err(Error::domain(format!("blocks {blocks:?} do not sum to |{lambda}| = {}", lambda.size())));
    }
    let owner = split_blocks(blocks)?;
    let sharp = sharp_sn(lambda)?;
    let mut factors = vec![Vec::new(); blocks.len()];
    for (bits, &i) in sharp.blocks().iter().zip(&owner) {
        factors[i].push(bits.clone());
    }
    factors.into_iter().map(|f| sharp_sn_inverse(&SylowLinearLabel::new(f)?)).collect()
}
