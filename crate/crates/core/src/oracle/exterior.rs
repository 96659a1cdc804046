//! Multiplicities of linear characters of the iterated wreath product
//! `P_k = C_2 wr ... wr C_2` (acting on `2^k` points) in the hook characters
//! of `S_{2^k}`, computed from exterior powers of the permutation module.
//!
//! A linear character of `P_k` is indexed by an integer whose bit `j` is
//! its sign on the generator `s_j` of [`crate::oracle::sylow2_subgroup`].
//! Only the low bits of the multiplicities are kept exact (arithmetic is
//! modulo a power of two), which is all the parity question needs.

use crate::error::{Error, Result};

/// Largest tower height the table is built for.
pub const MAX_LEVEL: u32 = 12;

/// `table[c][i]` is the multiplicity (mod `2^{128-k}`) of character `c` in
/// the `i`-th exterior power of the permutation module of `P_k`.
fn exterior_table(k: u32) -> Vec<Vec<u128>> {
    if k == 0 {
        return vec![vec![1, 1]];
    }
    let prev = exterior_table(k - 1);
    let half = 1usize << (k - 1);
    let size = 2 * half;
    let mut table = vec![vec![0u128; size + 1]; 2 * prev.len()];
    for (psi, row) in prev.iter().enumerate() {
        for eps in 0..2usize {
            let out = &mut table[psi | (eps << (k - 1))];
            for (i, slot) in out.iter_mut().enumerate() {
                let mut total = 0u128;
                // pairs a < b swapped by the top generator: induced terms
                for a in i.saturating_sub(half)..=i / 2 {
                    let b = i - a;
                    if a < b {
                        total = total.wrapping_add(row[a].wrapping_mul(row[b]));
                    }
                }
                if i % 2 == 0 {
                    let a = i / 2;
                    let m = row[a];
                    // the swap acts on the tensor square with sign (-1)^a
                    let symmetric = eps == a % 2;
                    total = total.wrapping_add(if symmetric {
                        choose2(m.wrapping_add(1), m)
                    } else {
                        choose2(m, m.wrapping_sub(1))
                    });
                }
                *slot = total;
            }
        }
    }
    table
}

/// `x * y / 2` for consecutive integers `x`, `y`.
fn choose2(x: u128, y: u128) -> u128 {
    if x.is_multiple_of(2) {
        (x / 2).wrapping_mul(y)
    } else {
        x.wrapping_mul(y / 2)
    }
}

/// For each leg `i` of a hook of `2^k`, the unique linear character of
/// `P_k` occurring with odd multiplicity in `chi^{(2^k - i, 1^i)}`, as
/// generator sign bits `s_0, ..., s_{k-1}`.
pub fn odd_hook_constituents(k: u32) -> Result<Vec<Vec<u8>>> {
    if k > MAX_LEVEL {
        return Err(Error::Unsupported(format!("exterior table beyond level {MAX_LEVEL}")));
    }
    let table = exterior_table(k);
    let size = 1usize << k;
    // reduced module: wedge^i M = wedge^i V + wedge^{i-1} V
    let mut hooks: Vec<Vec<u128>> = Vec::with_capacity(table.len());
    for row in &table {
        let mut h = Vec::with_capacity(size);
        let mut last = 0u128;
        for &e in row.iter().take(size) {
            last = e.wrapping_sub(last);
            h.push(last);
        }
        hooks.push(h);
    }
    (0..size)
        .map(|leg| {
            let odd: Vec<usize> = (0..hooks.len()).filter(|&c| hooks[c][leg] % 2 == 1).collect();
            match odd.as_slice() {
                [c] => Ok((0..k).map(|j| ((c >> j) & 1) as u8).collect()),
                _ => Err(Error::Consistency(format!(
                    "hook leg {leg} of size {size} has {} odd linear constituents",
                    odd.len()
                ))),
            }
        })
        .collect()
}
