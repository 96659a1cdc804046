//! Binary digits, 2-parts and parity of binomial and multinomial coefficients.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponents of the set bits of `n`, strictly decreasing.
///
/// `n = 2^{e_0} + 2^{e_1} + ...` with `e_0 > e_1 > ...`. The empty list
/// decomposes zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwoAdicDecomposition {
    exponents: Vec<u32>,
}

impl TwoAdicDecomposition {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Block sizes `2^{e_i}`, largest first.
    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents.iter().map(|&e| 1usize << e)
    }

    pub fn value(&self) -> usize {
        self.block_sizes().sum()
    }

    /// Number of blocks, `r`.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `n_1 + n_2 + ... + n_r`.
    pub fn exponent_sum(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

pub fn two_adic(n: usize) -> TwoAdicDecomposition {
    let exponents = (0..usize::BITS).rev().filter(|&bit| n >> bit & 1 == 1).collect();
    TwoAdicDecomposition { exponents }
}

/// The 2-part `[r]_2` of an integer, with `[0]_2` the top element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoPart {
    Finite(u64),
    Infinite,
}

impl PartialOrd for TwoPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TwoPart {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TwoPart::Finite(a), TwoPart::Finite(b)) => a.cmp(b),
            (TwoPart::Finite(_), TwoPart::Infinite) => Ordering::Less,
            (TwoPart::Infinite, TwoPart::Finite(_)) => Ordering::Greater,
            (TwoPart::Infinite, TwoPart::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for TwoPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoPart::Finite(v) => write!(f, "{v}"),
            TwoPart::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest power of two dividing `r`.
pub fn nu2(r: u64) -> TwoPart {
    if r == 0 {
        TwoPart::Infinite
    } else {
        TwoPart::Finite(1 << r.trailing_zeros())
    }
}

/// Parity of `C(n, a)`: odd exactly when the binary digits of `a` sit
/// under those of `n`.
pub fn binom_is_odd(n: u64, a: u64) -> Result<bool> {
    if a > n {
        return Err(Error::domain(format!("binomial C({n}, {a}) needs a <= n")));
    }
    Ok(a & !n == 0)
}

/// If `n!/prod a_i!` is odd, the parts reordered so that the 2-parts
/// strictly increase; the first part then has the 2-part of `n`.
pub fn odd_multinomial_order(parts: &[usize]) -> Option<Vec<usize>> {
    if parts.is_empty() || parts.contains(&0) {
        return None;
    }
    // n!/prod a_i! = prod_i C(a_1 + ... + a_i, a_i)
    let mut running = 0u64;
    for &a in parts {
        running += a as u64;
        if !binom_is_odd(running, a as u64).expect("a <= running") {
            return None;
        }
    }
    let mut ordered = parts.to_vec();
    ordered.sort_by_key(|&a| nu2(a as u64));
    Some(ordered)
}

/// The unique `c` in `{a - 1, a}` with `C(n - 1, c)` odd, given `C(n, a)` odd.
pub fn unique_descent(n: u64, a: u64) -> Result<u64> {
    if a == 0 || a >= n {
        return Err(Error::domain(format!("unique_descent needs 0 < a < n, got n={n}, a={a}")));
    }
    if !binom_is_odd(n, a)? {
        return Err(Error::domain(format!("C({n}, {a}) is even")));
    }
    let low = binom_is_odd(n - 1, a - 1)?;
    let high = binom_is_odd(n - 1, a)?;
    match (low, high) {
        (true, false) => Ok(a - 1),
        (false, true) => Ok(a),
        _ => Err(Error::violation(format!(
            "Pascal step from C({n}, {a}) has {} odd predecessors",
            low as u8 + high as u8
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal's triangle reduced mod 2, built by the recurrence only.
    fn pascal_mod2(max: usize) -> Vec<Vec<bool>> {
        let mut rows = vec![vec![true]];
        for n in 1..=max {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|a| {
                    let left = if a > 0 { prev[a - 1] } else { false };
                    let right = if a < n { prev[a] } else { false };
                    left ^ right
                })
                .collect();
            rows.push(row);
        }
        rows
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(two_adic(7).exponents(), &[2, 1, 0]);
        assert_eq!(two_adic(1).exponents(), &[0]);
        assert_eq!(two_adic(20).exponents(), &[4, 2]);
        assert!(two_adic(0).is_empty());
        assert_eq!(two_adic(20).value(), 20);
    }

    #[test]
    fn nu2_examples() {
        assert_eq!(nu2(12), TwoPart::Finite(4));
        assert_eq!(nu2(7), TwoPart::Finite(1));
        assert_eq!(nu2(0), TwoPart::Infinite);
        assert!(nu2(0) > nu2(1 << 62));
    }

    #[test]
    fn binom_examples() {
        assert!(binom_is_odd(7, 3).unwrap());
        assert!(!binom_is_odd(4, 2).unwrap());
        for n in 0..20 {
            assert!(binom_is_odd(n, 0).unwrap());
        }
        assert!(matches!(binom_is_odd(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn binom_matches_pascal() {
        let table = pascal_mod2(64);
        for n in 0..=64usize {
            for a in 0..=n {
                assert_eq!(binom_is_odd(n as u64, a as u64).unwrap(), table[n][a], "C({n},{a})");
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(odd_multinomial_order(&[2, 4]), Some(vec![2, 4]));
        assert_eq!(odd_multinomial_order(&[4, 2]), Some(vec![2, 4]));
        assert_eq!(odd_multinomial_order(&[1, 2]), Some(vec![1, 2]));
        assert_eq!(odd_multinomial_order(&[2, 2]), None);
        assert_eq!(odd_multinomial_order(&[]), None);
    }

    #[test]
    fn descent_examples() {
        assert_eq!(unique_descent(6, 2).unwrap(), 1);
        assert_eq!(unique_descent(3, 1).unwrap(), 0);
        assert_eq!(unique_descent(7, 3).unwrap(), 2);
        assert!(unique_descent(4, 2).is_err());
        assert!(unique_descent(4, 4).is_err());
    }

    #[test]
    fn descent_second_claim() {
        let table = pascal_mod2(64);
        for n in 2..=64u64 {
            for a in 1..n {
                if !table[n as usize][a as usize] {
                    continue;
                }
                let c = unique_descent(n, a).unwrap();
                assert!(table[n as usize - 1][c as usize]);
                if nu2(a) <= nu2(n - a) {
                    assert_eq!(c, a - 1, "n={n} a={a}");
                }
            }
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn odd_order_is_strict_chain(parts in prop::collection::vec(1usize..40, 1..5)) {
                if let Some(order) = odd_multinomial_order(&parts) {
                    let n: usize = parts.iter().sum();
                    prop_assert_eq!(nu2(order[0] as u64), nu2(n as u64));
                    for w in order.windows(2) {
                        prop_assert!(nu2(w[0] as u64) < nu2(w[1] as u64));
                    }
                    let mut sorted_in = parts.clone();
                    sorted_in.sort();
                    let mut sorted_out = order.clone();
                    sorted_out.sort();
                    prop_assert_eq!(sorted_in, sorted_out);
                }
            }
        }
    }
}
