use num_bigint::BigUint;
use num_traits::Zero;

use crate::partition::Partition;

/// Littlewood-Richardson coefficient `c^gamma_{alpha, beta}`: the number of
/// semistandard fillings of `gamma / alpha` with content `beta` whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigUint {
    if alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha) {
        return BigUint::zero();
    }
    if beta.is_empty() {
        return BigUint::from(1u32);
    }
    // Skew cells in reading order: top to bottom, right to left.
    let cells: Vec<(usize, usize)> = (1..=gamma.len())
        .flat_map(|i| {
            let lo = alpha.row_len(i);
            (lo + 1..=gamma.row_len(i)).rev().map(move |j| (i, j))
        })
        .collect();
    let mut filling = vec![vec![0usize; gamma.row_len(1) + 2]; gamma.len() + 2];
    let mut used = vec![0usize; beta.len() + 1];
    let mut count = BigUint::zero();
    fill(0, &cells, alpha, beta, &mut filling, &mut used, &mut count);
    count
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    alpha: &Partition,
    beta: &Partition,
    filling: &mut [Vec<usize>],
    used: &mut [usize],
    count: &mut BigUint,
) {
    let Some(&(i, j)) = cells.get(idx) else {
        *count += 1u32;
        return;
    };
    // Weakly increasing along rows: bounded by the (already filled) cell on the right.
    let right = filling[i][j + 1];
    let max_val = if right == 0 { beta.len() } else { right };
    // Strictly increasing down columns, only against skew cells above.
    let above = if i > 1 && j > alpha.row_len(i - 1) { filling[i - 1][j] } else { 0 };
    for v in (above + 1)..=max_val {
        if used[v] == beta.row_len(v) {
            continue;
        }
        if v > 1 && used[v] + 1 > used[v - 1] {
            continue;
        }
        used[v] += 1;
        filling[i][j] = v;
        fill(idx + 1, cells, alpha, beta, filling, used, count);
        filling[i][j] = 0;
        used[v] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::degree::degree;
    use crate::partition::rim_hooks_of_length;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), BigUint::from(1u32));
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[2, 1, 1]), &p(&[2, 2, 1])), BigUint::from(1u32));
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), BigUint::zero());
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2, the smallest coefficient above one
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), BigUint::from(2u32));
    }

    #[test]
    fn symmetric_in_alpha_beta() {
        for n in 0..=7 {
            for gamma in Partition::all(n) {
                for a in 0..=n {
                    for alpha in Partition::all(a) {
                        for beta in Partition::all(n - a) {
                            assert_eq!(lr_coefficient(&alpha, &beta, &gamma), lr_coefficient(&beta, &alpha, &gamma));
                        }
                    }
                }
            }
        }
    }

    /// deg(gamma) = sum c^gamma_{alpha beta} deg(alpha) deg(beta) over one split.
    #[test]
    fn degrees_split_per_young_subgroup() {
        for n in 0..=10 {
            for gamma in Partition::all(n) {
                for a in 0..=n {
                    let mut total = BigUint::zero();
                    for alpha in Partition::all(a) {
                        let da = degree(&alpha);
                        for beta in Partition::all(n - a) {
                            let c = lr_coefficient(&alpha, &beta, &gamma);
                            if !c.is_zero() {
                                total += c * &da * degree(&beta);
                            }
                        }
                    }
                    assert_eq!(total, degree(&gamma), "{gamma} split {a}");
                }
            }
        }
    }

    #[test]
    fn rim_hook_constituents_have_multiplicity_one() {
        for n in 1..=10 {
            for gamma in Partition::all(n) {
                for m in 1..=n {
                    for r in rim_hooks_of_length(&gamma, m) {
                        let c = lr_coefficient(&r.remainder, &r.hook_type.to_partition(), &gamma);
                        assert_eq!(c, BigUint::from(1u32), "{gamma} m={m}");
                    }
                }
            }
        }
    }
}
