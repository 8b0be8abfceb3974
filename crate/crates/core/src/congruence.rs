// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Canonical reductions of chi_y and the mod 2/4/8 multiplicativity checks
//! for bundle triples `F → E → B` at odd integer `y`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::YPolynomial;
use crate::genus::{specialize, ChiVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("σ - χ = {0} is odd; not the data of a compact complex manifold")]
    ParityViolation(BigInt),
    #[error("no congruence is claimed for even y = {0}")]
    EvenY(i64),
    #[error("empty y range {lo}..{hi}")]
    EmptyRange { lo: i64, hi: i64 },
}

/// Which family of theorems applies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckMode {
    /// Duality `χ^p = (-1)^n χ^{n-p}` holds for all three spaces. When false
    /// (singular mode) all moduli halve.
    pub duality: bool,
    /// User assertion that `π₁(B)` acts trivially on the middle cohomology
    /// of the fiber mod 4. Only used in duality mode.
    pub monodromy_mod4_trivial: bool,
}

impl CheckMode {
    pub fn smooth() -> Self {
        CheckMode {
            duality: true,
            monodromy_mod4_trivial: false,
        }
    }

    pub fn singular() -> Self {
        CheckMode {
            duality: false,
            monodromy_mod4_trivial: false,
        }
    }

    /// Modulus valid for every odd `y`: 4, or 2 in singular mode.
    pub fn base_modulus(&self) -> u32 {
        if self.duality {
            4
        } else {
            2
        }
    }

    /// The sharper modulus: 8, or 4 in singular mode.
    pub fn strong_modulus(&self) -> u32 {
        2 * self.base_modulus()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub y: i64,
    #[serde(with = "crate::json::bigint")]
    pub defect_value: BigInt,
    pub guaranteed_modulus: u32,
    /// `defect_value ≡ 0 mod guaranteed_modulus`.
    pub holds: bool,
    #[serde(with = "crate::json::bigint")]
    pub sigma_defect: BigInt,
    pub strong_modulus: u32,
    /// The `y ≡ 1 mod 4` clause: checked only when the strong modulus is
    /// not already guaranteed.
    pub equivalence_checked: bool,
    pub defect_strong_zero: bool,
    pub sigma_strong_zero: bool,
    pub equivalence_holds: bool,
}

impl CongruenceReport {
    /// Every verdict in the report is consistent with the theorems.
    pub fn ok(&self) -> bool {
        self.holds && (!self.equivalence_checked || self.equivalence_holds)
    }
}

/// Substitutes `y² = 1`: the coefficient of `y^k` folds onto `y^{k mod 2}`.
pub fn reduce_mod_1_minus_y2(p: &YPolynomial) -> YPolynomial {
    let mut out = vec![BigInt::zero(); 2];
    for (k, c) in p.coeffs().iter().enumerate() {
        out[k % 2] += c;
    }
    YPolynomial::new(out)
}

/// Substitutes `y³ = y`: `y^k` for `k ≥ 3` folds to `y^{2 - (k mod 2)}`.
pub fn reduce_mod_y_minus_y3(p: &YPolynomial) -> YPolynomial {
    let mut out = vec![BigInt::zero(); 3];
    for (k, c) in p.coeffs().iter().enumerate() {
        let target = match k {
            0 => 0,
            _ if k % 2 == 1 => 1,
            _ => 2,
        };
        out[target] += c;
    }
    YPolynomial::new(out)
}

/// `(σ/2)(1+y) + (χ/2)(1-y)`.
pub fn proposition35_canonical(sigma: &BigInt, chi: &BigInt) -> Result<YPolynomial, CongruenceError> {
    let diff = sigma - chi;
    if diff.is_odd() {
        return Err(CongruenceError::ParityViolation(diff));
    }
    // (σ+χ)/2 + (σ-χ)/2 · y, both exact since σ ≡ χ mod 2
    let two = BigInt::from(2);
    Ok(YPolynomial::new(vec![
        (sigma + chi).div_floor(&two),
        diff.div_floor(&two),
    ]))
}

/// `τ(1-y²) + (χ/2)(y²-y) + (σ/2)(y²+y)`.
pub fn remark42_canonical(
    todd: &BigInt,
    chi: &BigInt,
    sigma: &BigInt,
) -> Result<YPolynomial, CongruenceError> {
    let diff = sigma - chi;
    if diff.is_odd() {
        return Err(CongruenceError::ParityViolation(diff));
    }
    let two = BigInt::from(2);
    let y1 = diff.div_floor(&two);
    let y2 = (sigma + chi).div_floor(&two) - todd;
    Ok(YPolynomial::new(vec![todd.clone(), y1, y2]))
}

/// `χ_y(E) - χ_y(F) χ_y(B)`.
pub fn defect(e: &ChiVector, f: &ChiVector, b: &ChiVector) -> YPolynomial {
    &e.chi_y() - &(&f.chi_y() * &b.chi_y())
}

/// `σ(E) - σ(F) σ(B)`.
pub fn sigma_defect(e: &ChiVector, f: &ChiVector, b: &ChiVector) -> BigInt {
    let s = |v: &ChiVector| specialize(&v.chi_y()).signature;
    s(e) - s(f) * s(b)
}

fn divisible(x: &BigInt, m: u32) -> bool {
    x.mod_floor(&BigInt::from(m)).is_zero()
}

/// Evaluates the defect at odd `y` and checks it against the modulus the
/// theorems guarantee for `y mod 4` and `mode`.
///
/// * any odd `y`: modulus 4 (2 in singular mode);
/// * `y ≡ 3 mod 4`: modulus 8 (4);
/// * `y ≡ 1 mod 4`: modulus 8 only under the monodromy assertion; otherwise
///   the report records whether `defect ≡ 0 mod 8` agrees with
///   `σ-defect ≡ 0 mod 8` (mod 4 in singular mode).
pub fn classify_and_check(
    defect_poly: &YPolynomial,
    sigma_defect: &BigInt,
    y: i64,
    mode: CheckMode,
) -> Result<CongruenceReport, CongruenceError> {
    if y % 2 == 0 {
        return Err(CongruenceError::EvenY(y));
    }
    let value = defect_poly.eval_i64(y);
    let strong = mode.strong_modulus();
    let y_is_3_mod_4 = y.rem_euclid(4) == 3;
    let guaranteed = if y_is_3_mod_4 || (mode.duality && mode.monodromy_mod4_trivial) {
        strong
    } else {
        mode.base_modulus()
    };
    let defect_strong_zero = divisible(&value, strong);
    let sigma_strong_zero = divisible(sigma_defect, strong);
    let equivalence_checked = !y_is_3_mod_4;
    Ok(CongruenceReport {
        y,
        holds: divisible(&value, guaranteed),
        defect_value: value,
        guaranteed_modulus: guaranteed,
        sigma_defect: sigma_defect.clone(),
        strong_modulus: strong,
        equivalence_checked,
        defect_strong_zero,
        sigma_strong_zero,
        equivalence_holds: !equivalence_checked || defect_strong_zero == sigma_strong_zero,
    })
}

/// Odd integers in `lo..=hi`, ascending.
pub fn odd_values(lo: i64, hi: i64) -> Result<Vec<i64>, CongruenceError> {
    let ys: Vec<i64> = (lo..=hi).filter(|y| y % 2 != 0).collect();
    if ys.is_empty() {
        return Err(CongruenceError::EmptyRange { lo, hi });
    }
    Ok(ys)
}

/// Default sweep: every odd `y` with `|y| ≤ 99`.
pub const DEFAULT_SWEEP: (i64, i64) = (-99, 99);

/// Runs [`classify_and_check`] for a triple over the given odd `y` values.
pub fn check_triple(
    e: &ChiVector,
    f: &ChiVector,
    b: &ChiVector,
    ys: &[i64],
    mode: CheckMode,
) -> Result<Vec<CongruenceReport>, CongruenceError> {
    let d = defect(e, f, b);
    let s = sigma_defect(e, f, b);
    ys.iter()
        .map(|&y| classify_and_check(&d, &s, y, mode))
        .collect()
}

/// `1 - y²` at `y = 2k + 1`; divisible by 8 for every `k`.
pub fn one_minus_y_squared(k: i64) -> BigInt {
    let y = BigInt::from(2 * k + 1);
    BigInt::one() - &y * &y
}
