//! Dipper-James labels of odd-degree characters of `GL_n(q)` and `GU_n(q)`.
//!
//! A semisimple parameter `s` is stored as an exponent of a fixed generator
//! of the cyclic group of order `q - kappa 1`, i.e. as a residue.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::omega::{sharp_glu, sharp_glu_inverse, OmegaLabel};
use crate::oracle::degree::{is_odd_partition, odd_partitions};
use crate::partition::Partition;
use crate::sym::sharp::split_blocks;
use crate::sym::theta::star_sn;
use crate::two_adic::{nu2, odd_multinomial_order, two_adic};

/// `+` for `GL`, `-` for `GU`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kappa {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Kappa {
    /// Order `q - kappa 1` of the group the residues live in.
    pub fn modulus(self, q: u64) -> u64 {
        match self {
            Kappa::Plus => q - 1,
            Kappa::Minus => q + 1,
        }
    }

    pub const BOTH: [Kappa; 2] = [Kappa::Plus, Kappa::Minus];
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kappa::Plus => "+",
            Kappa::Minus => "-",
        })
    }
}

impl FromStr for Kappa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "+" | "plus" | "gl" => Ok(Kappa::Plus),
            "-" | "minus" | "gu" => Ok(Kappa::Minus),
            other => Err(Error::domain(format!("unknown kappa {other:?}, expected + or -"))),
        }
    }
}

/// The prime `p` with `q = p^f`, if `q` is a prime power.
pub fn prime_of(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

pub(crate) fn check_q(q: u64) -> Result<()> {
    match prime_of(q) {
        Some(p) if p != 2 => Ok(()),
        _ => Err(Error::domain(format!("q = {q} is not an odd prime power"))),
    }
}

/// One `(s, lambda)` entry of a label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GPair {
    pub s: u64,
    pub lambda: Partition,
}

impl GPair {
    pub fn new(s: u64, lambda: Partition) -> Self {
        GPair { s, lambda }
    }

    fn size(&self) -> usize {
        self.lambda.size()
    }
}

/// A label `S(s_1, lambda_1) o ... o S(s_m, lambda_m)` with pairwise distinct
/// residues. Pairs are kept sorted by residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGLabel")]
pub struct GLabel {
    kappa: Kappa,
    q: u64,
    pairs: Vec<GPair>,
}

#[derive(Deserialize)]
struct RawGLabel {
    kappa: Kappa,
    q: u64,
    pairs: Vec<GPair>,
}

impl TryFrom<RawGLabel> for GLabel {
    type Error = Error;

    fn try_from(raw: RawGLabel) -> Result<Self> {
        GLabel::new(raw.kappa, raw.q, raw.pairs)
    }
}

impl GLabel {
    pub fn new(kappa: Kappa, q: u64, mut pairs: Vec<GPair>) -> Result<Self> {
        check_q(q)?;
        let modulus = kappa.modulus(q);
        if pairs.is_empty() {
            return Err(Error::domain("a label needs at least one pair"));
        }
        for pair in &pairs {
            if pair.s >= modulus {
                return Err(Error::domain(format!("residue {} is not below {modulus}", pair.s)));
            }
            if pair.lambda.is_empty() {
                return Err(Error::domain("partitions in a label must be non-empty"));
            }
        }
        pairs.sort();
        if pairs.windows(2).any(|w| w[0].s == w[1].s) {
            return Err(Error::domain("residues in a label must be pairwise distinct"));
        }
        Ok(GLabel { kappa, q, pairs })
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

    pub fn pairs(&self) -> &[GPair] {
        &self.pairs
    }

    /// `n = sum |lambda_i|`.
    pub fn rank(&self) -> usize {
        self.pairs.iter().map(GPair::size).sum()
    }

    /// Applies `s -> f(s)` to every residue.
    pub fn map_residues(&self, f: impl Fn(u64) -> u64) -> Result<Self> {
        let pairs = self.pairs.iter().map(|p| GPair::new(f(p.s), p.lambda.clone())).collect();
        GLabel::new(self.kappa, self.q, pairs)
    }
}

impl fmt::Display for GLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", if self.kappa == Kappa::Plus { "GL" } else { "GU" })?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {})", p.s, p.lambda)?;
        }
        write!(f, "}} over q={}", self.q)
    }
}

/// Every partition odd and the sizes admit an odd multinomial.
pub fn is_odd_label(label: &GLabel) -> bool {
    let sizes: Vec<usize> = label.pairs.iter().map(GPair::size).collect();
    label.pairs.iter().all(|p| is_odd_partition(&p.lambda)) && odd_multinomial_order(&sizes).is_some()
}

fn require_odd_label(label: &GLabel) -> Result<()> {
    if is_odd_label(label) {
        Ok(())
    } else {
        Err(Error::domain(format!("{label} is not an odd-degree label")))
    }
}

/// Pairs ordered by strictly increasing 2-part of `|lambda_i|`.
pub fn canonical_order(label: &GLabel) -> Result<Vec<GPair>> {
    require_odd_label(label)?;
    let mut pairs = label.pairs.clone();
    pairs.sort_by_key(|p| nu2(p.size() as u64));
    Ok(pairs)
}

/// The character of the maximal parabolic `q^{n-1} : (GL_1 x GL_{n-1})`
/// attached to an odd label: a line character and a label of rank `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParabolicCorrespondent {
    pub line: GPair,
    pub rest: GLabel,
}

pub fn parabolic_star(label: &GLabel) -> Result<ParabolicCorrespondent> {
    if label.kappa == Kappa::Minus {
        return Err(Error::Unsupported("the parabolic correspondent is defined for GL only".into()));
    }
    if label.rank() < 2 {
        return Err(Error::domain("the parabolic correspondent needs n >= 2"));
    }
    let mut pairs = canonical_order(label)?;
    let first = pairs.remove(0);
    let line = GPair::new(first.s, Partition::row(1));
    if first.size() > 1 {
        pairs.push(GPair::new(first.s, star_sn(&first.lambda)?));
    }
    let rest = GLabel::new(label.kappa, label.q, pairs)?;
    if !is_odd_label(&rest) {
        return Err(Error::violation(format!("parabolic correspondent of {label} is {rest}, not odd")));
    }
    Ok(ParabolicCorrespondent { line, rest })
}

/// Canonical size sequences: ordered set partitions of the 2-adic blocks of
/// `n`, each part summed, listed by increasing 2-part.
pub(crate) fn canonical_sizes(n: usize) -> Vec<Vec<usize>> {
    let blocks: Vec<usize> = two_adic(n).block_sizes().collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    fn go(i: usize, blocks: &[usize], groups: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<usize>>) {
        if i == blocks.len() {
            let mut sizes: Vec<usize> = groups.iter().map(|g| g.iter().sum()).collect();
            sizes.sort_by_key(|&k| nu2(k as u64));
            out.push(sizes);
            return;
        }
        for g in 0..groups.len() {
            groups[g].push(blocks[i]);
            go(i + 1, blocks, groups, out);
            groups[g].pop();
        }
        groups.push(vec![blocks[i]]);
        go(i + 1, blocks, groups, out);
        groups.pop();
    }
    if n > 0 {
        go(0, &blocks, &mut groups, &mut out);
    }
    out.sort();
    out
}

fn cached_odd_partitions(k: usize) -> Vec<Partition> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Partition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&k) {
        return v.clone();
    }
    let v = odd_partitions(k);
    cache.lock().expect("cache lock").insert(k, v.clone());
    v
}

/// Every odd label of rank `n`, sorted.
pub fn odd_labels(n: usize, q: u64, kappa: Kappa) -> Result<Vec<GLabel>> {
    check_q(q)?;
    let modulus = kappa.modulus(q);
    let mut out = Vec::new();
    for sizes in canonical_sizes(n) {
        let choices: Vec<Vec<Partition>> = sizes.iter().map(|&k| cached_odd_partitions(k)).collect();
        let mut residues = vec![0u64; sizes.len()];
        let mut lambdas = vec![0usize; sizes.len()];
        assign_residues(0, modulus, &mut residues, &mut |res| {
            lambdas.iter_mut().for_each(|l| *l = 0);
            loop {
                let pairs =
                    res.iter().zip(&lambdas).zip(&choices).map(|((&s, &li), c)| GPair::new(s, c[li].clone())).collect();
                out.push(GLabel::new(kappa, q, pairs).expect("distinct residues"));
                if !advance(&mut lambdas, &choices) {
                    break;
                }
            }
        });
    }
    out.sort();
    Ok(out)
}

fn assign_residues(i: usize, modulus: u64, residues: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if i == residues.len() {
        visit(residues);
        return;
    }
    for s in 0..modulus {
        if residues[..i].contains(&s) {
            continue;
        }
        residues[i] = s;
        assign_residues(i + 1, modulus, residues, visit);
    }
}

fn advance(counters: &mut [usize], choices: &[Vec<Partition>]) -> bool {
    for (c, options) in counters.iter_mut().zip(choices) {
        *c += 1;
        if *c < options.len() {
            return true;
        }
        *c = 0;
    }
    false
}

/// Number of odd labels of rank `n`, counted by label shape: canonical size
/// sequences, odd partitions of each size (degree census) and injective
/// residue choices.
pub fn count_odd_irr_gl(n: usize, q: u64, kappa: Kappa) -> Result<BigUint> {
    check_q(q)?;
    let modulus = kappa.modulus(q);
    let mut total = BigUint::from(0u32);
    for sizes in canonical_sizes(n) {
        let mut term = BigUint::from(1u32);
        for (i, &k) in sizes.iter().enumerate() {
            term *= cached_odd_partitions(k).len();
            term *= modulus.saturating_sub(i as u64);
        }
        total += term;
    }
    Ok(total)
}

/// Data of the `SL_n(q)` correspondence for `n` odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlCorrespondence {
    /// `(k_1 - 1, k_2, ..., k_m)` with a zero first entry dropped.
    pub sizes: Vec<usize>,
    /// Whether the sizes are pairwise different, which makes the
    /// restriction to `SL_{n-1}(q)` irreducible.
    pub restriction_irreducible: bool,
    /// Label of the restriction of the parabolic correspondent to the Levi
    /// factor `GL_{n-1}(q)`.
    pub correspondent: GLabel,
}

pub fn sl_correspondence_data(label: &GLabel) -> Result<SlCorrespondence> {
    if label.kappa != Kappa::Plus {
        return Err(Error::Unsupported("the SL correspondence is defined for GL only".into()));
    }
    if label.rank().is_multiple_of(2) {
        return Err(Error::domain("the SL correspondence needs n odd"));
    }
    let pairs = canonical_order(label)?;
    let mut sizes: Vec<usize> = pairs.iter().map(GPair::size).collect();
    sizes[0] -= 1;
    if sizes[0] == 0 {
        sizes.remove(0);
    }
    let distinct: BTreeSet<usize> = sizes.iter().copied().collect();
    let restriction_irreducible = distinct.len() == sizes.len();
    if !restriction_irreducible {
        return Err(Error::violation(format!("{label}: sizes {sizes:?} repeat")));
    }
    let correspondent = if label.rank() == 1 { label.clone() } else { parabolic_star(label)?.rest };
    Ok(SlCorrespondence { sizes, restriction_irreducible, correspondent })
}

/// Odd-degree characters of `SL_n(q)`, `n` odd, counted as orbits of odd
/// `GL_n(q)` labels under tensoring with linear characters (`s -> s + t`).
pub fn sl_census(n: usize, q: u64) -> Result<usize> {
    if n.is_multiple_of(2) {
        return Err(Error::domain("the SL census is implemented for n odd"));
    }
    let labels = odd_labels(n, q, Kappa::Plus)?;
    let modulus = Kappa::Plus.modulus(q);
    let mut orbits = BTreeSet::new();
    for label in &labels {
        let shifts: Vec<GLabel> =
            (0..modulus).map(|t| label.map_residues(|s| (s + t) % modulus)).collect::<Result<_>>()?;
        let distinct: BTreeSet<&GLabel> = shifts.iter().collect();
        if distinct.len() as u64 != modulus {
            return Err(Error::violation(format!("{label} has a non-trivial stabilizer under shifts")));
        }
        orbits.insert(shifts.into_iter().min().expect("non-empty orbit"));
    }
    Ok(orbits.len())
}

/// The odd characters of the Levi subgroup `prod GL_{k_i}(q)` (or `GU`)
/// attached to an odd label, in the order of `blocks`.
pub fn levi_star(label: &GLabel, blocks: &[usize]) -> Result<Vec<GLabel>> {
    if blocks.iter().sum::<usize>() != label.rank() {
        return Err(Error::domain(format!("blocks {blocks:?} do not sum to n = {}", label.rank())));
    }
    let owner = split_blocks(blocks)?;
    let omega = sharp_glu(label)?;
    let mut factors = vec![Vec::new(); blocks.len()];
    for (block, &i) in omega.blocks().iter().zip(&owner) {
        factors[i].push(block.clone());
    }
    factors.into_iter().map(|f| sharp_glu_inverse(&OmegaLabel::new(label.kappa, label.q, f)?)).collect()
}
