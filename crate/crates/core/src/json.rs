//! JSON helpers for exact integers: values up to `2^53` stay numbers, larger
//! ones become decimal strings so no consumer rounds them through a double.

use num_bigint::{BigInt, BigUint};
use serde_json::Value;

const SAFE: u64 = 1 << 53;

pub fn exact_uint(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) if v <= SAFE => Value::from(v),
        _ => Value::String(n.to_string()),
    }
}

pub fn exact_int(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) if v.unsigned_abs() <= SAFE => Value::from(v),
        _ => Value::String(n.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold() {
        assert_eq!(exact_uint(&BigUint::from(SAFE)), Value::from(SAFE));
        assert_eq!(exact_uint(&BigUint::from(SAFE + 1)), Value::String("9007199254740993".into()));
        assert_eq!(exact_int(&BigInt::from(-5)), Value::from(-5));
        assert_eq!(exact_int(&(BigInt::from(-1) << 60)), Value::String("-1152921504606846976".into()));
    }
}
