use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::degree::{factorial, is_odd_partition, odd_partitions};
use crate::partition::Partition;
use crate::sym::sharp::{sharp_sn, sharp_sn_inverse, signs_hook, SylowLinearLabel};
use crate::sym::theta::require_odd;
use crate::two_adic::{nu2, odd_multinomial_order};

/// One orbit representative `psi_i^{t_i}` of the base group `S_k^t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathBase {
    pub psi: Partition,
    pub t: usize,
}

/// An odd-degree character of `S_k wr S_t`: distinct odd `psi_i` of `S_k`
/// with multiplicities `t_i` of strictly increasing 2-part, and an odd
/// `alpha_i` of `S_{t_i}` for each.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathOddLabel {
    pub base: Vec<WreathBase>,
    pub top: Vec<Partition>,
}

impl WreathOddLabel {
    pub fn validate(&self, k: usize, t: usize) -> Result<()> {
        if self.base.is_empty() || self.base.len() != self.top.len() {
            return Err(Error::domain("base and top must be non-empty and of equal length"));
        }
        if self.base.iter().map(|b| b.t).sum::<usize>() != t {
            return Err(Error::domain(format!("multiplicities do not sum to {t}")));
        }
        if self.base.windows(2).any(|w| nu2(w[0].t as u64) >= nu2(w[1].t as u64)) {
            return Err(Error::domain("2-parts of the multiplicities must strictly increase"));
        }
        for (i, b) in self.base.iter().enumerate() {
            if b.t == 0 || b.psi.size() != k || !is_odd_partition(&b.psi) {
                return Err(Error::domain(format!("{} is not an odd partition of {k}", b.psi)));
            }
            if self.base[..i].iter().any(|c| c.psi == b.psi) {
                return Err(Error::domain(format!("{} repeats in the base", b.psi)));
            }
            let alpha = &self.top[i];
            if alpha.size() != b.t || !is_odd_partition(alpha) {
                return Err(Error::domain(format!("{alpha} is not an odd partition of {}", b.t)));
            }
        }
        Ok(())
    }
}

/// Whether `S_k wr S_t` has odd index `(kt)! / (k!^t t!)` in `S_{kt}`.
pub fn wreath_has_odd_index(k: usize, t: usize) -> bool {
    let index = factorial(k * t) / (factorial(k).pow(t as u32) * factorial(t));
    index.bit(0)
}

fn wreath_index(k: usize, t: usize) -> BigUint {
    factorial(k * t) / (factorial(k).pow(t as u32) * factorial(t))
}

/// The canonical odd-degree character of `S_k wr S_t` attached to the odd
/// character `lambda` of `S_{kt}`.
pub fn wreath_star(lambda: &Partition, k: usize, t: usize) -> Result<WreathOddLabel> {
    check_wreath(lambda.size(), k, t)?;
    if t == 1 {
        require_odd(lambda)?;
        return Ok(WreathOddLabel {
            base: vec![WreathBase { psi: lambda.clone(), t: 1 }],
            top: vec![Partition::row(1)],
        });
    }
    let a = k.trailing_zeros() as usize;
    let sharp = sharp_sn(lambda)?;
    // Each block of size 2^{a + t_j} is R wr Q_j with R a Sylow of S_k:
    // the low a bits are the character mu of R, the rest a character of Q_j.
    let mut groups: Vec<(Vec<u8>, Vec<Vec<u8>>)> = Vec::new();
    for bits in sharp.blocks() {
        let (mu, beta) = bits.split_at(a);
        match groups.iter_mut().find(|(m, _)| m == mu) {
            Some((_, tops)) => tops.push(beta.to_vec()),
            None => groups.push((mu.to_vec(), vec![beta.to_vec()])),
        }
    }
    let mut pieces = groups
        .into_iter()
        .map(|(mu, tops)| {
            let t_i: usize = tops.iter().map(|b| 1usize << b.len()).sum();
            let psi = signs_hook(&mu)?.to_partition();
            let alpha = sharp_sn_inverse(&SylowLinearLabel::new(tops)?)?;
            Ok((WreathBase { psi, t: t_i }, alpha))
        })
        .collect::<Result<Vec<_>>>()?;
    pieces.sort_by_key(|(b, _)| nu2(b.t as u64));
    let (base, top) = pieces.into_iter().unzip();
    let label = WreathOddLabel { base, top };
    label.validate(k, t).map_err(|e| Error::violation(format!("wreath label for {lambda} is malformed: {e}")))?;
    Ok(label)
}

fn check_wreath(n: usize, k: usize, t: usize) -> Result<()> {
    if k == 0 || t == 0 || k * t != n {
        return Err(Error::domain(format!("need n = k t with k, t >= 1, got n={n}, k={k}, t={t}")));
    }
    if !wreath_has_odd_index(k, t) {
        return Err(Error::domain(format!("S_{k} wr S_{t} has even index {} in S_{n}", wreath_index(k, t))));
    }
    if t > 1 && !k.is_power_of_two() {
        return Err(Error::violation(format!("odd index for S_{k} wr S_{t} with k not a power of two")));
    }
    Ok(())
}

/// All odd-degree labels of `S_k wr S_t` by Clifford theory, sorted.
pub fn clifford_labels(k: usize, t: usize) -> Result<Vec<WreathOddLabel>> {
    check_wreath(k * t, k, t)?;
    let psis = odd_partitions(k);
    let mut out = Vec::new();
    for parts in canonical_compositions(t) {
        let alphas: Vec<Vec<Partition>> = parts.iter().map(|&ti| odd_partitions(ti)).collect();
        for chosen in injections(psis.len(), parts.len()) {
            for top in product(&alphas) {
                let base =
                    chosen.iter().zip(&parts).map(|(&pi, &ti)| WreathBase { psi: psis[pi].clone(), t: ti }).collect();
                out.push(WreathOddLabel { base, top });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Compositions of `t` with odd multinomial, in increasing 2-part order.
fn canonical_compositions(t: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if odd_multinomial_order(prefix).as_deref() == Some(prefix.as_slice())
                && prefix.windows(2).all(|w| nu2(w[0] as u64) < nu2(w[1] as u64))
            {
                out.push(prefix.clone());
            }
            return;
        }
        for part in 1..=rest {
            prefix.push(part);
            go(rest - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

fn injections(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..n)
                    .filter(|i| !prefix.contains(i))
                    .map(|i| {
                        let mut next = prefix.clone();
                        next.push(i);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn product(choices: &[Vec<Partition>]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Partition>| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    out
}
