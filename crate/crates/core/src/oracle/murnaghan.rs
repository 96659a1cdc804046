use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::degree::factorial;
use crate::partition::{rim_hooks_of_length, Partition};

/// Cycle lengths of a conjugacy class of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// `n! / prod_i (i^{m_i} m_i!)`.
    pub fn class_size(&self) -> BigUint {
        let mut centralizer = BigUint::one();
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let len = parts[i];
            let mult = parts[i..].iter().take_while(|&&p| p == len).count();
            centralizer *= BigUint::from(len).pow(mult as u32) * factorial(mult);
            i += mult;
        }
        factorial(self.0.size()) / centralizer
    }

    /// Sign of any permutation in the class.
    pub fn sign(&self) -> i32 {
        let even_cycles = self.0.parts().iter().filter(|&&p| p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{}", self.0)
    }
}

/// Memoised Murnaghan-Nakayama evaluator.
///
/// The cache lives as long as the oracle; share one across a sweep.
#[derive(Default)]
pub struct MnOracle {
    memo: HashMap<(Partition, Partition), BigInt>,
}

impl MnOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi^lambda` at a permutation of cycle type `mu`.
    pub fn value(&mut self, lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
        if lambda.size() != mu.0.size() {
            return Err(Error::domain(format!("character {lambda} and class {} have different sizes", mu.0)));
        }
        Ok(self.eval(lambda, mu.0.parts()))
    }

    fn eval(&mut self, lambda: &Partition, mu: &[usize]) -> BigInt {
        let Some((&first, rest)) = mu.split_first() else {
            return BigInt::one();
        };
        let key = (lambda.clone(), Partition::from_parts_unchecked(mu.to_vec()));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for removal in rim_hooks_of_length(lambda, first) {
            let term = self.eval(&removal.remainder, rest);
            if removal.hook_type.leg() % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// One-shot Murnaghan-Nakayama value with a fresh cache.
pub fn mn_value(lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
    MnOracle::new().value(lambda, mu)
}
