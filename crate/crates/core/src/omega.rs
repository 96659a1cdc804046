//! Odd-degree characters of the Sylow 2-normalizer `N_G(P) = Z_1 x P` in
//! `GL_n(q)` or `GU_n(q)`, and the Galois and outer automorphism actions.
//!
//! A point of `Omega(n)` is one `(residue, hook)` pair per 2-adic block of
//! `n`. Residues are stored raw; the split into a 2-part and an odd part only
//! exists inside [`NormalizerLocalLabel`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glu::{canonical_order, check_q, prime_of, GLabel, GPair, Kappa};
use crate::partition::HookPartition;
use crate::sym::theta::{alpha_sn, alpha_sn_inverse, ThetaLabel};
use crate::two_adic::two_adic;

/// One 2-adic block of `n`: its size, a residue and a hook of that size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OmegaBlock {
    pub size: usize,
    pub s: u64,
    pub hook: HookPartition,
}

impl OmegaBlock {
    pub fn new(s: u64, hook: HookPartition) -> Self {
        OmegaBlock { size: hook.m(), s, hook }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawOmegaLabel")]
pub struct OmegaLabel {
    kappa: Kappa,
    q: u64,
    blocks: Vec<OmegaBlock>,
}

#[derive(Deserialize)]
struct RawOmegaLabel {
    kappa: Kappa,
    q: u64,
    blocks: Vec<OmegaBlock>,
}

impl TryFrom<RawOmegaLabel> for OmegaLabel {
    type Error = Error;

    fn try_from(raw: RawOmegaLabel) -> Result<Self> {
        OmegaLabel::new(raw.kappa, raw.q, raw.blocks)
    }
}

impl OmegaLabel {
    /// Blocks must have strictly decreasing 2-power sizes.
    pub fn new(kappa: Kappa, q: u64, blocks: Vec<OmegaBlock>) -> Result<Self> {
        check_q(q)?;
        let modulus = kappa.modulus(q);
        if blocks.is_empty() {
            return Err(Error::domain("an Omega label needs at least one block"));
        }
        for b in &blocks {
            if b.size != b.hook.m() || !b.size.is_power_of_two() {
                return Err(Error::domain(format!("block of size {} carries hook {}", b.size, b.hook)));
            }
            if b.s >= modulus {
                return Err(Error::domain(format!("residue {} is not below {modulus}", b.s)));
            }
        }
        if blocks.windows(2).any(|w| w[0].size <= w[1].size) {
            return Err(Error::domain("Omega blocks must strictly decrease in size"));
        }
        Ok(OmegaLabel { kappa, q, blocks })
    }

    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> u64 {
        self.kappa.modulus(self.q)
    }

    pub fn blocks(&self) -> &[OmegaBlock] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.size).sum()
    }

    pub fn map_residues(&self, f: impl Fn(u64) -> u64) -> Result<Self> {
        let blocks = self.blocks.iter().map(|b| OmegaBlock::new(f(b.s), b.hook)).collect();
        OmegaLabel::new(self.kappa, self.q, blocks)
    }

    /// Every point of `Omega(n)`, sorted.
    pub fn all(n: usize, q: u64, kappa: Kappa) -> Result<Vec<OmegaLabel>> {
        check_q(q)?;
        let modulus = kappa.modulus(q);
        let mut labels = vec![Vec::new()];
        for size in two_adic(n).block_sizes() {
            let mut next = Vec::new();
            for prefix in &labels {
                for s in 0..modulus {
                    for hook in HookPartition::all(size) {
                        let mut blocks: Vec<OmegaBlock> = prefix.clone();
                        blocks.push(OmegaBlock::new(s, hook));
                        next.push(blocks);
                    }
                }
            }
            labels = next;
        }
        let mut out: Vec<OmegaLabel> = labels.into_iter().map(|blocks| OmegaLabel { kappa, q, blocks }).collect();
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for OmegaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {})", b.s, b.hook)?;
        }
        f.write_str("]")
    }
}

/// `|Omega(n)| = prod (q - kappa 1) 2^{n_i}`.
pub fn omega_size(n: usize, q: u64, kappa: Kappa) -> Result<BigUint> {
    check_q(q)?;
    let d = two_adic(n);
    Ok(BigUint::from(kappa.modulus(q)).pow(d.len() as u32) << d.exponent_sum())
}

/// A character of `N_G(P)` for a single block of `2^m` points: `gamma`
/// and `delta` name characters of the 2-part and the odd part of the cyclic
/// group of order `q - kappa 1`, and `(j, k)` pick the hook
/// `(2^m - 2k - j, 1^{2k + j})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalizerLocalLabel {
    pub kappa: Kappa,
    pub q: u64,
    pub m: u32,
    pub gamma: u64,
    pub delta: u64,
    pub j: u8,
    pub k: usize,
}

/// `q - kappa 1 = 2^e * o` with `o` odd.
fn split_modulus(kappa: Kappa, q: u64) -> (u64, u64) {
    let n = kappa.modulus(q);
    let two = 1u64 << n.trailing_zeros();
    (two, n / two)
}

impl NormalizerLocalLabel {
    pub fn validate(&self) -> Result<()> {
        check_q(self.q)?;
        let (two, odd) = split_modulus(self.kappa, self.q);
        if self.gamma >= two || self.delta >= odd {
            return Err(Error::domain(format!(
                "gamma must be below {two} and delta below {odd}, got {} and {}",
                self.gamma, self.delta
            )));
        }
        if self.j > 1 {
            return Err(Error::domain("j is a bit"));
        }
        if self.m >= usize::BITS - 1 {
            return Err(Error::Unsupported(format!("block of 2^{} points", self.m)));
        }
        let ok = if self.m == 0 { self.j == 0 && self.k == 0 } else { self.k < 1 << (self.m - 1) };
        if !ok {
            return Err(Error::domain(format!("k = {} out of range for m = {}", self.k, self.m)));
        }
        Ok(())
    }
}

/// Fuses `(gamma, delta)` by the Chinese remainder theorem and builds the hook.
pub fn local_to_omega(loc: &NormalizerLocalLabel) -> Result<OmegaBlock> {
    loc.validate()?;
    let (two, odd) = split_modulus(loc.kappa, loc.q);
    // s = gamma + two * t with two * t = delta - gamma mod odd
    let inv = (two as i128).extended_gcd(&(odd as i128)).x.rem_euclid(odd as i128);
    let t = ((loc.delta as i128 - loc.gamma as i128) * inv).rem_euclid(odd as i128);
    let s = loc.gamma + two * t as u64;
    let hook = HookPartition::new(1 << loc.m, 2 * loc.k + loc.j as usize)?;
    Ok(OmegaBlock::new(s, hook))
}

pub fn omega_to_local(kappa: Kappa, q: u64, block: &OmegaBlock) -> Result<NormalizerLocalLabel> {
    check_q(q)?;
    if block.size != block.hook.m() || !block.size.is_power_of_two() {
        return Err(Error::domain(format!("block of size {} carries hook {}", block.size, block.hook)));
    }
    if block.s >= kappa.modulus(q) {
        return Err(Error::domain(format!("residue {} out of range", block.s)));
    }
    let (two, odd) = split_modulus(kappa, q);
    let leg = block.hook.leg();
    Ok(NormalizerLocalLabel {
        kappa,
        q,
        m: block.size.trailing_zeros(),
        gamma: block.s % two,
        delta: block.s % odd,
        j: (leg % 2) as u8,
        k: leg / 2,
    })
}

/// The Omega label of an odd label: each pair spreads the hooks of
/// `alpha_sn(lambda_i)` over the 2-adic blocks of `|lambda_i|`.
pub fn sharp_glu(label: &GLabel) -> Result<OmegaLabel> {
    let mut blocks = Vec::new();
    for pair in canonical_order(label)? {
        for &hook in alpha_sn(&pair.lambda)?.hooks() {
            blocks.push(OmegaBlock::new(pair.s, hook));
        }
    }
    blocks.sort_by_key(|b| std::cmp::Reverse(b.size));
    let sizes: Vec<usize> = blocks.iter().map(|b| b.size).collect();
    if sizes != two_adic(label.rank()).block_sizes().collect::<Vec<_>>() {
        return Err(Error::violation(format!("{label} does not cover each block of n once: {sizes:?}")));
    }
    OmegaLabel::new(label.kappa(), label.q(), blocks)
}

pub fn sharp_glu_inverse(omega: &OmegaLabel) -> Result<GLabel> {
    let mut by_residue: BTreeMap<u64, Vec<HookPartition>> = BTreeMap::new();
    for b in omega.blocks() {
        by_residue.entry(b.s).or_default().push(b.hook);
    }
    let pairs = by_residue
        .into_iter()
        .map(|(s, hooks)| Ok(GPair::new(s, alpha_sn_inverse(&ThetaLabel::new(hooks)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let label = GLabel::new(omega.kappa(), omega.q(), pairs)?;
    if !crate::glu::is_odd_label(&label) {
        return Err(Error::violation(format!("{omega} inverts to {label}, which is not odd")));
    }
    Ok(label)
}

/// Labels whose residues can be moved by automorphisms of the cyclic group.
pub trait ResidueLabel: Sized {
    fn kappa(&self) -> Kappa;
    fn q(&self) -> u64;
    fn map_residues(&self, f: impl Fn(u64) -> u64) -> Result<Self>;
}

impl ResidueLabel for GLabel {
    fn kappa(&self) -> Kappa {
        GLabel::kappa(self)
    }
    fn q(&self) -> u64 {
        GLabel::q(self)
    }
    fn map_residues(&self, f: impl Fn(u64) -> u64) -> Result<Self> {
        GLabel::map_residues(self, f)
    }
}

impl ResidueLabel for OmegaLabel {
    fn kappa(&self) -> Kappa {
        OmegaLabel::kappa(self)
    }
    fn q(&self) -> u64 {
        OmegaLabel::q(self)
    }
    fn map_residues(&self, f: impl Fn(u64) -> u64) -> Result<Self> {
        OmegaLabel::map_residues(self, f)
    }
}

/// `epsilon -> epsilon^i`, acting on residues by multiplication by `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaloisElement {
    pub i: i64,
}

impl GaloisElement {
    pub fn new(i: i64) -> Self {
        GaloisElement { i }
    }

    pub fn conjugation() -> Self {
        GaloisElement { i: -1 }
    }

    /// Representatives `1 <= i < modulus` coprime to the modulus.
    pub fn units(modulus: u64) -> Vec<GaloisElement> {
        (1..modulus.max(2)).filter(|i| i.gcd(&modulus) == 1).map(|i| GaloisElement { i: i as i64 }).collect()
    }

    fn reduce(self, modulus: u64) -> Result<u64> {
        let i = self.i.rem_euclid(modulus as i64) as u64;
        if i.gcd(&modulus) != 1 {
            return Err(Error::domain(format!("{} is not coprime to {modulus}", self.i)));
        }
        Ok(i)
    }
}

pub fn galois_act<L: ResidueLabel>(sigma: GaloisElement, x: &L) -> Result<L> {
    let modulus = x.kappa().modulus(x.q());
    let i = sigma.reduce(modulus)?;
    x.map_residues(|s| mul_mod(s, i, modulus))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OuterGenerator {
    #[serde(rename = "F_p")]
    Frobenius,
    #[serde(rename = "tau")]
    Tau,
}

/// A word in `F_p` and `tau`; the rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OuterElement {
    pub word: Vec<OuterGenerator>,
}

impl OuterElement {
    pub fn frobenius() -> Self {
        OuterElement { word: vec![OuterGenerator::Frobenius] }
    }

    pub fn tau() -> Self {
        OuterElement { word: vec![OuterGenerator::Tau] }
    }

    pub fn then(mut self, other: OuterElement) -> Self {
        let mut word = other.word;
        word.append(&mut self.word);
        OuterElement { word }
    }
}

impl FromStr for OuterElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split([',', '*', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "F" | "Fp" | "F_p" | "frobenius" => Ok(OuterGenerator::Frobenius),
                "t" | "tau" => Ok(OuterGenerator::Tau),
                other => Err(Error::domain(format!("unknown outer generator {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(OuterElement { word })
    }
}

pub fn outer_act<L: ResidueLabel>(d: &OuterElement, x: &L) -> Result<L> {
    let modulus = x.kappa().modulus(x.q());
    let p = prime_of(x.q()).ok_or_else(|| Error::domain("q is not a prime power"))?;
    let mut factor = 1u64 % modulus;
    for g in d.word.iter().rev() {
        match g {
            OuterGenerator::Frobenius => factor = mul_mod(factor, p % modulus, modulus),
            OuterGenerator::Tau if x.kappa() == Kappa::Minus => {
                return Err(Error::Unsupported("tau acts on GL labels only".into()));
            }
            OuterGenerator::Tau => factor = (modulus - factor) % modulus,
        }
    }
    x.map_residues(|s| mul_mod(s, factor, modulus))
}

/// Omega labels fixed by `s -> -s`, counted block by block.
pub fn count_real_odd(n: usize, q: u64, kappa: Kappa) -> Result<BigUint> {
    check_q(q)?;
    let modulus = kappa.modulus(q);
    let fixed_residues = (0..modulus).filter(|&s| (2 * s) % modulus == 0).count();
    Ok(two_adic(n).block_sizes().map(|size| BigUint::from(fixed_residues * HookPartition::all(size).count())).product())
}

/// `2^{n_1 + ... + n_r + r}`.
pub fn real_odd_closed_form(n: usize) -> BigUint {
    let d = two_adic(n);
    BigUint::from(1u32) << (d.exponent_sum() + d.len() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn h(m: usize, leg: usize) -> HookPartition {
        HookPartition::new(m, leg).unwrap()
    }

    fn glabel(kappa: Kappa, q: u64, pairs: &[(u64, &[usize])]) -> GLabel {
        GLabel::new(kappa, q, pairs.iter().map(|&(s, l)| GPair::new(s, Partition::new(l.to_vec()).unwrap())).collect())
            .unwrap()
    }

    fn local(m: u32, j: u8, k: usize) -> NormalizerLocalLabel {
        NormalizerLocalLabel { kappa: Kappa::Plus, q: 7, m, gamma: 1, delta: 2, j, k }
    }

    #[test]
    fn local_examples() {
        assert_eq!(local_to_omega(&local(1, 0, 0)).unwrap().hook.to_partition(), Partition::row(2));
        assert_eq!(local_to_omega(&local(1, 1, 0)).unwrap().hook.to_partition(), Partition::column(2));
        let b = local_to_omega(&local(3, 1, 2)).unwrap();
        assert_eq!(b.hook.to_partition(), Partition::new(vec![3, 1, 1, 1, 1, 1]).unwrap());
        // q - 1 = 6: s = 1 mod 2, s = 2 mod 3
        assert_eq!(b.s, 5);
        for m in [1, 3] {
            for (j, k) in [(0, 0), (1, 0), (1, 2)] {
                if m == 1 && k > 0 {
                    continue;
                }
                let loc = local(m, j, k);
                assert_eq!(omega_to_local(Kappa::Plus, 7, &local_to_omega(&loc).unwrap()).unwrap(), loc);
            }
        }
        assert!(local_to_omega(&local(0, 1, 0)).is_err());
        assert!(local_to_omega(&local(2, 0, 2)).is_err());
    }

    #[test]
    fn local_round_trips() {
        for q in [3, 5, 7, 9, 11] {
            for kappa in Kappa::BOTH {
                for m in 0..=4usize {
                    for s in 0..kappa.modulus(q) {
                        for hook in HookPartition::all(1 << m) {
                            let block = OmegaBlock::new(s, hook);
                            let loc = omega_to_local(kappa, q, &block).unwrap();
                            assert_eq!(local_to_omega(&loc).unwrap(), block);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sharp_examples() {
        let l = glabel(Kappa::Plus, 5, &[(3, &[1])]);
        assert_eq!(sharp_glu(&l).unwrap().blocks(), &[OmegaBlock::new(3, h(1, 0))]);
        let l = glabel(Kappa::Plus, 5, &[(3, &[2])]);
        assert_eq!(sharp_glu(&l).unwrap().blocks(), &[OmegaBlock::new(3, h(2, 0))]);
        let l = glabel(Kappa::Minus, 3, &[(1, &[1]), (2, &[2])]);
        let omega = sharp_glu(&l).unwrap();
        assert_eq!(omega.blocks(), &[OmegaBlock::new(2, h(2, 0)), OmegaBlock::new(1, h(1, 0))]);
        assert_eq!(sharp_glu_inverse(&omega).unwrap(), l);

        let same = OmegaLabel::new(Kappa::Plus, 5, vec![OmegaBlock::new(1, h(2, 0)), OmegaBlock::new(1, h(1, 0))]);
        assert_eq!(sharp_glu_inverse(&same.unwrap()).unwrap(), glabel(Kappa::Plus, 5, &[(1, &[3])]));
    }

    #[test]
    fn omega_json_shape() {
        let omega = sharp_glu(&glabel(Kappa::Plus, 3, &[(1, &[2])])).unwrap();
        assert_eq!(
            serde_json::to_string(&omega).unwrap(),
            r#"{"kappa":"+","q":3,"blocks":[{"size":2,"s":1,"hook":{"m":2,"leg":0}}]}"#
        );
        let bad = r#"{"kappa":"+","q":3,"blocks":[{"size":4,"s":1,"hook":{"m":2,"leg":0}}]}"#;
        assert!(serde_json::from_str::<OmegaLabel>(bad).is_err());
    }

    #[test]
    fn actions() {
        let l = glabel(Kappa::Plus, 9, &[(1, &[1]), (3, &[2])]);
        assert_eq!(galois_act(GaloisElement::new(1), &l).unwrap(), l);
        assert_eq!(
            galois_act(GaloisElement::conjugation(), &l).unwrap(),
            glabel(Kappa::Plus, 9, &[(7, &[1]), (5, &[2])])
        );
        assert!(matches!(galois_act(GaloisElement::new(2), &l), Err(Error::Domain(_))));

        let f2: OuterElement = "F_p,F_p".parse().unwrap();
        assert_eq!(outer_act(&f2, &l).unwrap(), galois_act(GaloisElement::new(9), &l).unwrap());
        let tt: OuterElement = "tau,tau".parse().unwrap();
        assert_eq!(outer_act(&tt, &l).unwrap(), l);
        let ft = OuterElement::frobenius().then(OuterElement::tau());
        let tf = OuterElement::tau().then(OuterElement::frobenius());
        assert_eq!(outer_act(&ft, &l).unwrap(), outer_act(&tf, &l).unwrap());

        let gu = glabel(Kappa::Minus, 3, &[(1, &[1])]);
        assert!(matches!(outer_act(&OuterElement::tau(), &gu), Err(Error::Unsupported(_))));
        assert_eq!(outer_act(&OuterElement::frobenius(), &gu).unwrap(), glabel(Kappa::Minus, 3, &[(3, &[1])]));
    }

    #[test]
    fn real_counts() {
        for q in [3, 5, 7, 9, 11] {
            for kappa in Kappa::BOTH {
                assert_eq!(count_real_odd(1, q, kappa).unwrap(), BigUint::from(2u32));
                assert_eq!(count_real_odd(2, q, kappa).unwrap(), BigUint::from(4u32));
                assert_eq!(count_real_odd(3, q, kappa).unwrap(), BigUint::from(8u32));
            }
        }
        assert_eq!(real_odd_closed_form(7), BigUint::from(1u32 << 6));
    }

    #[test]
    fn omega_census() {
        for n in 1..=4 {
            assert_eq!(
                BigUint::from(OmegaLabel::all(n, 5, Kappa::Minus).unwrap().len()),
                omega_size(n, 5, Kappa::Minus).unwrap()
            );
        }
    }
}
