//! Named verification sweeps. Each sweep compares a map against an
//! independent oracle or census on every input up to the given bounds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::glu::{count_odd_irr_gl, is_odd_label, levi_star, odd_labels, parabolic_star, sl_census, Kappa};
use crate::json::exact_uint;
use crate::omega::{
    count_real_odd, galois_act, omega_size, outer_act, real_odd_closed_form, sharp_glu, sharp_glu_inverse,
    GaloisElement, OmegaLabel, OuterElement,
};
use crate::oracle::degree::{branch_restrict, degree, is_odd_partition, odd_partitions};
use crate::oracle::lr::lr_coefficient;
use crate::oracle::perm_group::{restriction_multiplicities, sylow2_subgroup};
use crate::partition::{rim_hooks_of_length, HookPartition, Partition};
use crate::sym::sharp::{sharp_sn, SylowLinearLabel};
use crate::sym::theta::{alpha_sn, alpha_sn_inverse, count_odd_irr_sn, star_sn};
use crate::sym::wreath::{clifford_labels, wreath_has_odd_index, wreath_star};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    SnStar,
    AlphaBij,
    SharpOracle,
    RimHookLr,
    UniqueGamma,
    S7Counterexample,
    Wreath,
    GlCounts,
    OmegaBij,
    GaloisEquivariance,
    RealCount,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::SnStar,
        Suite::AlphaBij,
        Suite::SharpOracle,
        Suite::RimHookLr,
        Suite::UniqueGamma,
        Suite::S7Counterexample,
        Suite::Wreath,
        Suite::GlCounts,
        Suite::OmegaBij,
        Suite::GaloisEquivariance,
        Suite::RealCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SnStar => "sn-star",
            Suite::AlphaBij => "alpha-bij",
            Suite::SharpOracle => "sharp-oracle",
            Suite::RimHookLr => "lemma41",
            Suite::UniqueGamma => "lemma42",
            Suite::S7Counterexample => "s7-counterexample",
            Suite::Wreath => "theoremD",
            Suite::GlCounts => "gl-counts",
            Suite::OmegaBij => "omega-bij",
            Suite::GaloisEquivariance => "galois-equivariance",
            Suite::RealCount => "corollaryF",
        }
    }

    fn default_max_n(self) -> usize {
        match self {
            Suite::SnStar => 12,
            Suite::AlphaBij => 16,
            Suite::RimHookLr => 10,
            Suite::GaloisEquivariance => 6,
            Suite::GlCounts => 8,
            _ => 8,
        }
    }

    fn default_qs(self) -> Vec<u64> {
        match self {
            Suite::GlCounts => vec![3, 5, 7, 9],
            Suite::RealCount => vec![3, 5, 7, 9, 11],
            _ => vec![3, 5, 9],
        }
    }

    fn uses_fields(self) -> bool {
        matches!(self, Suite::GlCounts | Suite::OmegaBij | Suite::GaloisEquivariance | Suite::RealCount)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown suite {s:?}")))
    }
}

/// Sweep bounds. Unset fields fall back to the suite's defaults.
#[derive(Debug, Clone, Default)]
pub struct VerifyParams {
    pub max_n: Option<usize>,
    pub qs: Option<Vec<u64>>,
    pub kappas: Option<Vec<Kappa>>,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: Value,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub params: Value,
    pub run: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

struct Check {
    input: Value,
    expected: Value,
    actual: Value,
}

fn check(input: Value, expected: impl Serialize, actual: impl Serialize) -> Check {
    Check {
        input,
        expected: serde_json::to_value(expected).expect("serializable"),
        actual: serde_json::to_value(actual).expect("serializable"),
    }
}

fn check_result<T: Serialize>(input: Value, expected: impl Serialize, actual: Result<T>) -> Check {
    match actual {
        Ok(v) => check(input, expected, v),
        Err(e) => check(input, expected, json!({ "error": e.to_string() })),
    }
}

struct Field {
    q: u64,
    kappa: Kappa,
}

fn fields(params: &VerifyParams, suite: Suite) -> Vec<Field> {
    let qs = params.qs.clone().unwrap_or_else(|| suite.default_qs());
    let kappas = params.kappas.clone().unwrap_or_else(|| Kappa::BOTH.to_vec());
    qs.iter().flat_map(|&q| kappas.iter().map(move |&kappa| Field { q, kappa })).collect()
}

pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<VerifyReport> {
    let max_n = params.max_n.unwrap_or_else(|| suite.default_max_n());
    let mut report_params = BTreeMap::new();
    if suite != Suite::S7Counterexample {
        report_params.insert("max_n", json!(max_n));
    }
    if suite.uses_fields() {
        let fs = fields(params, suite);
        for f in &fs {
            crate::glu::check_q(f.q)?;
        }
        let qs: BTreeSet<u64> = fs.iter().map(|f| f.q).collect();
        let kappas: BTreeSet<String> = fs.iter().map(|f| f.kappa.to_string()).collect();
        report_params.insert("q", json!(qs));
        report_params.insert("kappa", json!(kappas));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let checks = pool.install(|| -> Result<Vec<Check>> {
        Ok(match suite {
            Suite::SnStar => sn_star(max_n),
            Suite::AlphaBij => alpha_bij(max_n),
            Suite::SharpOracle => sharp_oracle(max_n)?,
            Suite::RimHookLr => rim_hook_lr(max_n),
            Suite::UniqueGamma => unique_gamma(max_n),
            Suite::S7Counterexample => s7_counterexample(),
            Suite::Wreath => wreath(max_n)?,
            Suite::GlCounts => gl_counts(max_n, &fields(params, suite))?,
            Suite::OmegaBij => omega_bij(max_n, &fields(params, suite))?,
            Suite::GaloisEquivariance => galois_equivariance(max_n, &fields(params, suite))?,
            Suite::RealCount => real_count(max_n, &fields(params, suite))?,
        })
    })?;
    let run = checks.len();
    let counterexamples: Vec<Counterexample> = checks
        .into_iter()
        .filter(|c| c.expected != c.actual)
        .map(|c| Counterexample { input: c.input, expected: c.expected, actual: c.actual })
        .collect();
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        params: json!(report_params),
        run,
        passed: run - counterexamples.len(),
        failed: counterexamples.len(),
        counterexamples,
    })
}

fn odd_inputs(lo: usize, hi: usize) -> Vec<Partition> {
    (lo..=hi).flat_map(odd_partitions).collect()
}

fn sn_star(max_n: usize) -> Vec<Check> {
    odd_inputs(2, max_n)
        .par_iter()
        .map(|lambda| {
            let odd: Vec<Partition> = branch_restrict(lambda).into_iter().filter(is_odd_partition).collect();
            check_result(json!({ "lambda": lambda }), odd, star_sn(lambda).map(|mu| vec![mu]))
        })
        .collect()
}

fn alpha_bij(max_n: usize) -> Vec<Check> {
    let mut checks: Vec<Check> = odd_inputs(1, max_n)
        .par_iter()
        .map(|lambda| {
            let back = alpha_sn(lambda).and_then(|theta| alpha_sn_inverse(&theta));
            check_result(json!({ "lambda": lambda }), lambda, back)
        })
        .collect();
    checks.par_extend((1..=max_n).into_par_iter().map(|n| {
        let census = odd_partitions(n);
        let images: Result<BTreeSet<_>> = census.iter().map(alpha_sn).collect();
        let expected = json!({ "census": census.len(), "theta": exact_uint(&count_odd_irr_sn(n)) });
        let actual = images.map(|s| json!({ "census": s.len(), "theta": s.len() }));
        check_result(json!({ "n": n }), expected, actual)
    }));
    checks
}

fn sharp_oracle(max_n: usize) -> Result<Vec<Check>> {
    let max_n = max_n.min(8);
    (1..=max_n)
        .into_par_iter()
        .map(|n| -> Result<Vec<Check>> {
            let group = sylow2_subgroup(n);
            group.elements()?;
            odd_partitions(n)
                .iter()
                .map(|lambda| {
                    let sharp = sharp_sn(lambda)?;
                    let mults = restriction_multiplicities(lambda, &group)?;
                    let mut at_sharp = None;
                    let mut odd = Vec::new();
                    for (phi, m) in &mults {
                        let label = SylowLinearLabel::from_linear_character(n, phi)?;
                        if m.bit(0) && m.sign() == num_bigint::Sign::Plus {
                            odd.push(label.clone());
                        }
                        if label == sharp {
                            at_sharp = Some(m.clone());
                        }
                    }
                    let constituent = at_sharp.is_some_and(|m| m.sign() == num_bigint::Sign::Plus);
                    let mut expected = json!({ "constituent": true });
                    let mut actual = json!({ "constituent": constituent });
                    if n.is_power_of_two() {
                        expected["odd_at"] = json!([sharp]);
                        actual["odd_at"] = json!(odd);
                    }
                    Ok(check(json!({ "lambda": lambda }), expected, actual))
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn rim_hook_lr(max_n: usize) -> Vec<Check> {
    let gammas: Vec<Partition> = (1..=max_n).flat_map(Partition::all).collect();
    gammas
        .par_iter()
        .flat_map_iter(|gamma| {
            (1..=gamma.size()).flat_map(move |m| {
                rim_hooks_of_length(gamma, m).into_iter().map(move |r| {
                    let beta = r.hook_type.to_partition();
                    let input = json!({ "gamma": gamma, "m": m, "alpha": r.remainder, "beta": beta });
                    check(input, 1, exact_uint(&lr_coefficient(&r.remainder, &beta, gamma)))
                })
            })
        })
        .collect()
}

fn unique_gamma(max_m: usize) -> Vec<Check> {
    let cases: Vec<(usize, usize)> = (1..=max_m).flat_map(|m| (m..=2 * m - 1).map(move |n| (m, n))).collect();
    cases
        .par_iter()
        .flat_map_iter(|&(m, n)| {
            let mut found: BTreeMap<(Partition, HookPartition), usize> = BTreeMap::new();
            for gamma in Partition::all(n) {
                for r in rim_hooks_of_length(&gamma, m) {
                    *found.entry((r.remainder, r.hook_type)).or_default() += 1;
                }
            }
            Partition::all(n - m)
                .into_iter()
                .flat_map(|alpha| HookPartition::all(m).map(move |beta| (alpha.clone(), beta)))
                .map(|(alpha, beta)| {
                    let count = found.get(&(alpha.clone(), beta)).copied().unwrap_or(0);
                    check(json!({ "n": n, "alpha": alpha, "beta": beta }), 1, count)
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Odd-degree constituents of `chi^lambda` restricted to `S_a x S_b`.
fn odd_young_constituents(lambda: &Partition, a: usize) -> Vec<(Partition, Partition)> {
    let b = lambda.size() - a;
    let mut out = Vec::new();
    for mu in odd_partitions(a) {
        for nu in odd_partitions(b) {
            if lr_coefficient(&mu, &nu, lambda) > BigUint::from(0u32) {
                out.push((mu.clone(), nu));
            }
        }
    }
    out
}

fn s7_counterexample() -> Vec<Check> {
    Partition::all(7)
        .into_iter()
        .filter(|l| degree(l) == BigUint::from(35u32))
        .map(|lambda| {
            let found = odd_young_constituents(&lambda, 5);
            check(json!({ "lambda": lambda, "young": [5, 2] }), 3, found.len())
        })
        .collect()
}

fn wreath(max_n: usize) -> Result<Vec<Check>> {
    let mut cases = Vec::new();
    for k in 1..=max_n {
        for t in 2..=max_n / k {
            if wreath_has_odd_index(k, t) {
                cases.push((k, t));
            }
        }
    }
    cases
        .par_iter()
        .map(|&(k, t)| -> Result<Vec<Check>> {
            let targets: BTreeSet<_> = clifford_labels(k, t)?.into_iter().collect();
            let mut images = BTreeSet::new();
            let mut checks = Vec::new();
            for lambda in odd_partitions(k * t) {
                let image = wreath_star(&lambda, k, t);
                if let Ok(label) = &image {
                    images.insert(label.clone());
                }
                let hit = image.map(|l| targets.contains(&l));
                checks.push(check_result(json!({ "k": k, "t": t, "lambda": lambda }), true, hit));
            }
            let expected = exact_uint(&count_odd_irr_sn(k * t));
            checks.push(check(
                json!({ "k": k, "t": t }),
                json!({ "image": expected, "clifford": expected }),
                json!({ "image": images.len(), "clifford": targets.len() }),
            ));
            Ok(checks)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn gl_counts(max_n: usize, fields: &[Field]) -> Result<Vec<Check>> {
    let cases: Vec<(usize, &Field)> = (1..=max_n).flat_map(|n| fields.iter().map(move |f| (n, f))).collect();
    cases
        .par_iter()
        .map(|&(n, f)| -> Result<Vec<Check>> {
            let input = json!({ "n": n, "q": f.q, "kappa": f.kappa });
            let mut checks = vec![check(
                input.clone(),
                exact_uint(&omega_size(n, f.q, f.kappa)?),
                exact_uint(&count_odd_irr_gl(n, f.q, f.kappa)?),
            )];
            if n % 2 == 1 && n <= 7 && f.kappa == Kappa::Plus {
                let labels = odd_labels(n, f.q, f.kappa)?;
                let gl = count_odd_irr_gl(n, f.q, f.kappa)?;
                if n > 1 {
                    let images: Result<BTreeSet<_>> = labels.iter().map(parabolic_star).collect();
                    let lower = count_odd_irr_gl(n - 1, f.q, f.kappa)? * (f.q - 1);
                    let actual = images.map(|s| {
                        let rest_odd = s.iter().all(|c| is_odd_label(&c.rest));
                        json!({ "images": s.len(), "rest_odd": rest_odd, "labels": labels.len() })
                    });
                    let expected = json!({
                        "images": exact_uint(&lower),
                        "rest_odd": true,
                        "labels": exact_uint(&gl),
                    });
                    checks.push(check_result(json!({ "n": n, "q": f.q, "parabolic": true }), expected, actual));
                }
                checks.push(check_result(
                    json!({ "n": n, "q": f.q, "sl": true }),
                    exact_uint(&(gl / (f.q - 1))),
                    sl_census(n, f.q),
                ));
            }
            Ok(checks)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn omega_bij(max_n: usize, fields: &[Field]) -> Result<Vec<Check>> {
    let cases: Vec<(usize, &Field)> = (1..=max_n).flat_map(|n| fields.iter().map(move |f| (n, f))).collect();
    cases
        .par_iter()
        .map(|&(n, f)| -> Result<Vec<Check>> {
            let labels = odd_labels(n, f.q, f.kappa)?;
            let splits = crate::glu::canonical_sizes(n);
            let mut images = BTreeSet::new();
            let mut checks = Vec::new();
            for label in &labels {
                let input = json!({ "label": label });
                let omega = sharp_glu(label);
                let back = omega.as_ref().map_err(Clone::clone).and_then(sharp_glu_inverse);
                if let Ok(o) = omega {
                    images.insert(o);
                }
                checks.push(check_result(input.clone(), label, back));
                for blocks in splits.iter().filter(|b| b.len() > 1) {
                    let rebuilt = levi_star(label, blocks).and_then(|factors| {
                        let mut all = Vec::new();
                        for factor in &factors {
                            all.extend(sharp_glu(factor)?.blocks().iter().cloned());
                        }
                        all.sort_by_key(|b| std::cmp::Reverse(b.size));
                        sharp_glu_inverse(&OmegaLabel::new(f.kappa, f.q, all)?)
                    });
                    checks.push(check_result(json!({ "label": label, "blocks": blocks }), label, rebuilt));
                }
            }
            let size = omega_size(n, f.q, f.kappa)?;
            checks.push(check(
                json!({ "n": n, "q": f.q, "kappa": f.kappa }),
                json!({ "labels": exact_uint(&size), "image": exact_uint(&size) }),
                json!({ "labels": labels.len(), "image": images.len() }),
            ));
            Ok(checks)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn galois_equivariance(max_n: usize, fields: &[Field]) -> Result<Vec<Check>> {
    let cases: Vec<(usize, &Field)> = (1..=max_n).flat_map(|n| fields.iter().map(move |f| (n, f))).collect();
    cases
        .par_iter()
        .map(|&(n, f)| -> Result<Vec<Check>> {
            let modulus = f.kappa.modulus(f.q);
            let mut outers = vec![OuterElement::frobenius()];
            if f.kappa == Kappa::Plus {
                outers.push(OuterElement::tau());
            }
            let units = GaloisElement::units(modulus);
            let mut checks = Vec::new();
            for label in odd_labels(n, f.q, f.kappa)? {
                let omega = sharp_glu(&label)?;
                for &sigma in &units {
                    let input = json!({ "label": label, "i": sigma.i });
                    let lhs = galois_act(sigma, &omega);
                    let rhs = galois_act(sigma, &label).and_then(|l| sharp_glu(&l));
                    checks.push(check_result(input, lhs?, rhs));
                }
                for d in &outers {
                    let input = json!({ "label": label, "outer": d });
                    let lhs = outer_act(d, &omega);
                    let rhs = outer_act(d, &label).and_then(|l| sharp_glu(&l));
                    checks.push(check_result(input, lhs?, rhs));
                }
            }
            Ok(checks)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn real_count(max_n: usize, fields: &[Field]) -> Result<Vec<Check>> {
    let cases: Vec<(usize, &Field)> = (1..=max_n).flat_map(|n| fields.iter().map(move |f| (n, f))).collect();
    cases
        .par_iter()
        .map(|&(n, f)| -> Result<Vec<Check>> {
            let modulus = f.kappa.modulus(f.q);
            let units = GaloisElement::units(modulus);
            let mut fixed = 0usize;
            let mut rational = true;
            for omega in OmegaLabel::all(n, f.q, f.kappa)? {
                if galois_act(GaloisElement::conjugation(), &omega)? == omega {
                    fixed += 1;
                    for &sigma in &units {
                        rational &= galois_act(sigma, &omega)? == omega;
                    }
                }
            }
            let closed = exact_uint(&real_odd_closed_form(n));
            Ok(vec![check(
                json!({ "n": n, "q": f.q, "kappa": f.kappa }),
                json!({ "closed_form": closed, "enumerated": closed, "fixed_by_all": true }),
                json!({
                    "closed_form": exact_uint(&count_real_odd(n, f.q, f.kappa)?),
                    "enumerated": fixed,
                    "fixed_by_all": rational,
                }),
            )])
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let params = VerifyParams { max_n: Some(4), qs: Some(vec![3]), kappas: None, jobs: Some(2) };
        for suite in Suite::ALL {
            let report = run_suite(suite, &params).unwrap();
            assert!(report.ok(), "{suite}: {:?}", report.counterexamples);
            assert!(report.run > 0, "{suite}");
        }
    }
}
