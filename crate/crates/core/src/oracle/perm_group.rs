//! Explicit permutation groups at desk scale, used as an independent check
//! on the label-level maps.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::murnaghan::{CycleType, MnOracle};
use crate::partition::Partition;
use crate::two_adic::two_adic;

/// Default enumeration cap.
pub const DEFAULT_ELEMENT_CAP: usize = 1 << 17;

/// A permutation of `{0, ..., n-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize).ok_or_else(|| Error::domain(format!("image {x} out of range")))?;
            if *slot {
                return Err(Error::domain(format!("{images:?} is not a bijection")));
            }
            *slot = true;
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(Partition::from_parts_unchecked(lengths))
    }

    /// Swaps `x` and `x + half` for `x` in `offset..offset + half`.
    fn block_swap(n: usize, offset: usize, half: usize) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for x in offset..offset + half {
            images.swap(x, x + half);
        }
        Permutation(images)
    }
}

/// A permutation group given by generators, with its elements enumerated on
/// first use.
#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    elements: OnceLock<Vec<Permutation>>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::domain(format!("generator {g:?} does not act on {degree} points")));
        }
        Ok(PermutationGroup { degree, generators, cap: DEFAULT_ELEMENT_CAP, elements: OnceLock::new() })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.elements = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, identity first. Exceeding the cap is an error.
    pub fn elements(&self) -> Result<&[Permutation]> {
        if let Some(elems) = self.elements.get() {
            return Ok(elems);
        }
        let elems = closure(self.degree, &self.generators, self.cap)?;
        Ok(self.elements.get_or_init(|| elems))
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    /// The commutator subgroup, as the normal closure of the generator
    /// commutators.
    pub fn derived_subgroup(&self) -> Result<HashSet<Permutation>> {
        let mut normal_gens = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let comm = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !comm.is_identity() {
                    normal_gens.push(comm);
                }
            }
        }
        loop {
            let sub: HashSet<_> = closure(self.degree, &normal_gens, self.cap)?.into_iter().collect();
            let mut grew = false;
            for t in normal_gens.clone() {
                for g in &self.generators {
                    let conj = g.compose(&t).compose(&g.inverse());
                    if !sub.contains(&conj) {
                        normal_gens.push(conj);
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(sub);
            }
        }
    }

    /// Linear characters of the group, labelled by their values on the
    /// generators as powers of a primitive root of unity of order
    /// `exp(H/H')`. Only 2-power exponents are supported.
    pub fn linear_characters(&self) -> Result<Vec<LinearCharacter>> {
        Ok(self.abelian_data()?.characters)
    }

    fn abelian_data(&self) -> Result<AbelianData> {
        let elements = self.elements()?;
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let derived = self.derived_subgroup()?;
        if elements.len() % derived.len() != 0 {
            return Err(Error::Consistency("derived subgroup order does not divide group order".into()));
        }
        let quotient_order = elements.len() / derived.len();
        // exponent of H/H'
        let mut exponent = 1usize;
        for g in elements {
            let mut order = 1;
            let mut power = g.clone();
            while !derived.contains(&power) {
                power = power.compose(g);
                order += 1;
            }
            exponent = num_integer::lcm(exponent, order);
        }
        if !exponent.is_power_of_two() {
            return Err(Error::Unsupported(format!("abelianization exponent {exponent} is not a power of two")));
        }
        // Cayley graph, then a BFS tree from the identity.
        let k = self.generators.len();
        let step: Vec<Vec<usize>> =
            elements.iter().map(|h| self.generators.iter().map(|g| index[&h.compose(g)]).collect()).collect();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; elements.len()];
        let mut order_seen = vec![false; elements.len()];
        let mut bfs = Vec::with_capacity(elements.len());
        let mut queue = VecDeque::from([0usize]);
        order_seen[0] = true;
        while let Some(h) = queue.pop_front() {
            bfs.push(h);
            for (gi, &next) in step[h].iter().enumerate() {
                if !order_seen[next] {
                    order_seen[next] = true;
                    parent[next] = Some((h, gi));
                    queue.push_back(next);
                }
            }
        }

        let mut characters = Vec::new();
        let mut exps = vec![0u32; k];
        'assign: loop {
            let mut value = vec![0u32; elements.len()];
            for &h in &bfs[1..] {
                let (p, gi) = parent[h].expect("non-identity has a parent");
                value[h] = (value[p] + exps[gi]) % exponent as u32;
            }
            let consistent = (0..elements.len())
                .all(|h| (0..k).all(|gi| value[step[h][gi]] == (value[h] + exps[gi]) % exponent as u32));
            if consistent {
                characters.push(LinearCharacter { order: exponent as u32, exponents: exps.clone(), values: value });
            }
            // next assignment, odometer style
            for slot in exps.iter_mut() {
                *slot += 1;
                if (*slot as usize) < exponent {
                    continue 'assign;
                }
                *slot = 0;
            }
            break;
        }
        if characters.len() != quotient_order {
            return Err(Error::Consistency(format!(
                "found {} linear characters but |H/H'| = {quotient_order}",
                characters.len()
            )));
        }
        Ok(AbelianData { characters })
    }
}

struct AbelianData {
    characters: Vec<LinearCharacter>,
}

/// A linear character, given by `zeta^{exponents[i]}` on generator `i`
/// where `zeta` is a primitive `order`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearCharacter {
    pub order: u32,
    pub exponents: Vec<u32>,
    #[serde(skip)]
    values: Vec<u32>,
}

impl LinearCharacter {
    /// Generator signs as bits (`true` for -1), when the character is
    /// `{+1, -1}`-valued.
    pub fn sign_bits(&self) -> Option<Vec<bool>> {
        match self.order {
            1 => Some(vec![false; self.exponents.len()]),
            2 => Some(self.exponents.iter().map(|&e| e == 1).collect()),
            _ => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let next = out[i].compose(g);
            if seen.insert(next.clone()) {
                if out.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                out.push(next);
            }
        }
        i += 1;
    }
    Ok(out)
}

/// A Sylow 2-subgroup of `S_n`: for each 2-adic block of `n` (largest first,
/// placed on consecutive points) the iterated wreath product
/// `C_2 wr ... wr C_2`, generated by the swaps of the two halves of the
/// leading sub-block of size `2^{j+1}`, `j = 0, 1, ...`.
pub fn sylow2_subgroup(n: usize) -> PermutationGroup {
    let mut generators = Vec::new();
    let mut offset = 0;
    for size in two_adic(n).block_sizes() {
        let mut half = 1;
        while half < size {
            generators.push(Permutation::block_swap(n, offset, half));
            half *= 2;
        }
        offset += size;
    }
    PermutationGroup::new(n, generators).expect("generators act on n points")
}

/// Multiplicity of every linear character of `group` in the restriction of
/// `chi^lambda`, as exact inner products.
pub fn restriction_multiplicities(
    lambda: &Partition,
    group: &PermutationGroup,
) -> Result<Vec<(LinearCharacter, BigInt)>> {
    if lambda.size() != group.degree() {
        return Err(Error::domain(format!("{lambda} is not a partition of the group degree {}", group.degree())));
    }
    let elements = group.elements()?;
    let data = group.abelian_data()?;
    let mut oracle = MnOracle::new();
    let classes: Vec<CycleType> = elements.iter().map(Permutation::cycle_type).collect();
    let mut chi: BTreeMap<&CycleType, BigInt> = BTreeMap::new();
    for c in &classes {
        if !chi.contains_key(c) {
            chi.insert(c, oracle.value(lambda, c)?);
        }
    }
    let order = BigInt::from(elements.len());
    data.characters
        .into_iter()
        .map(|phi| {
            let e = phi.order as usize;
            let mut sum = Cyclotomic2::zero(e);
            for (h, class) in classes.iter().enumerate() {
                // chi(h) * conj(phi(h)) = chi(h) * zeta^{-value}
                let power = (e - phi.values[h] as usize % e) % e;
                sum.add_term(power, &chi[class]);
            }
            let scalar = sum.as_integer().ok_or_else(|| Error::Consistency("inner product is not rational".into()))?;
            if !(&scalar % &order).is_zero() {
                return Err(Error::Consistency(format!("inner product {scalar}/{order} is not integral")));
            }
            Ok((phi, scalar / &order))
        })
        .collect()
}

/// Elements of `Z[zeta]` for `zeta` a primitive `2^a`-th root of unity, in
/// the power basis `1, zeta, ..., zeta^{d-1}` with `zeta^d = -1`.
struct Cyclotomic2 {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl Cyclotomic2 {
    fn zero(order: usize) -> Self {
        let d = (order / 2).max(1);
        Cyclotomic2 { order, coeffs: vec![BigInt::zero(); d] }
    }

    fn add_term(&mut self, power: usize, coeff: &BigInt) {
        let power = power % self.order;
        let d = self.coeffs.len();
        if self.order >= 2 && power >= self.order / 2 {
            self.coeffs[power - self.order / 2] -= coeff;
        } else {
            self.coeffs[power % d] += coeff;
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::degree::factorial;
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(sylow2_subgroup(2).order().unwrap(), 2);
        assert_eq!(sylow2_subgroup(4).order().unwrap(), 8);
        assert_eq!(sylow2_subgroup(6).order().unwrap(), 16);
        for n in 1..=12 {
            let two_part = 1usize << factorial(n).trailing_zeros().unwrap_or(0);
            assert_eq!(sylow2_subgroup(n).order().unwrap(), two_part, "n={n}");
        }
    }

    #[test]
    fn sylow4_is_dihedral() {
        let g = sylow2_subgroup(4);
        let elems = g.elements().unwrap();
        let order_of = |x: &Permutation| {
            let mut k = 1;
            let mut y = x.clone();
            while !y.is_identity() {
                y = y.compose(x);
                k += 1;
            }
            k
        };
        let mut orders: Vec<usize> = elems.iter().map(order_of).collect();
        orders.sort();
        // D_8: identity, five involutions, two elements of order 4
        assert_eq!(orders, vec![1, 2, 2, 2, 2, 2, 4, 4]);
    }

    #[test]
    fn linear_character_counts() {
        for n in 1..=12 {
            let expected = 1usize << two_adic(n).exponent_sum();
            let chars = sylow2_subgroup(n).linear_characters().unwrap();
            assert_eq!(chars.len(), expected, "n={n}");
            assert!(chars.iter().all(|c| c.sign_bits().is_some()));
        }
    }

    #[test]
    fn cyclic_four_has_order_four_characters() {
        let c4 = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        let g = PermutationGroup::new(4, vec![c4]).unwrap();
        let chars = g.linear_characters().unwrap();
        assert_eq!(chars.len(), 4);
        assert!(chars.iter().all(|c| c.order == 4));
        // permutation character of C_4 on 4 points is the regular one
        let mults = restriction_multiplicities(&p(&[3, 1]), &g).unwrap();
        let total: BigInt = mults.iter().map(|(_, m)| m.clone()).sum();
        assert_eq!(total, BigInt::from(3));
        for (phi, m) in &mults {
            let expected = if phi.is_trivial() { 0 } else { 1 };
            assert_eq!(*m, BigInt::from(expected));
        }
    }

    #[test]
    fn restriction_examples() {
        let s2 = sylow2_subgroup(2);
        let mults = restriction_multiplicities(&p(&[2]), &s2).unwrap();
        for (phi, m) in mults {
            let expected = if phi.is_trivial() { BigInt::one() } else { BigInt::zero() };
            assert_eq!(m, expected);
        }

        let p4 = sylow2_subgroup(4);
        let mults = restriction_multiplicities(&p(&[3, 1]), &p4).unwrap();
        let odd: Vec<_> = mults.iter().filter(|(_, m)| m.bit(0)).collect();
        assert_eq!(odd.len(), 1);

        // (2,2) has degree 2: linear multiplicities plus twice the
        // nonlinear ones account for it.
        let mults = restriction_multiplicities(&p(&[2, 2]), &p4).unwrap();
        let linear: BigInt = mults.iter().map(|(_, m)| m.clone()).sum();
        assert!(linear <= BigInt::from(2));
        assert!(!(BigInt::from(2) - linear).bit(0));
    }

    #[test]
    fn cap_is_a_hard_error() {
        let g = sylow2_subgroup(8).with_cap(100);
        assert_eq!(g.order(), Err(Error::GroupTooLarge { cap: 100 }));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
    }
}
