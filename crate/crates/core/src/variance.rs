//! Variance of the exponents, the Hertling bound, per-stage statistics
//! and the lattice sums behind the sharp quasihomogeneous estimate.

use crate::error::{Error, Result};
use crate::puiseux::CharacteristicData;
use crate::rational::{int, rat, rat_big, Int, Rat};
use crate::spectrum::{subunit_stage_exponents, Spectrum};
use num::{Integer, One};

/// Exact variance `V_f = (1/μ) Σ (α_i − 1)²` (the exponents of a curve
/// are centred at 1).
pub fn variance(s: &Spectrum) -> Result<Rat> {
    if s.is_empty() {
        return Err(Error::InvalidInput("variance of an empty spectrum".into()));
    }
    let one = Rat::one();
    let sum: Rat = s
        .entries()
        .iter()
        .map(|(a, m)| {
            let d = a - &one;
            &d * &d * Rat::from_integer(int(*m as i64))
        })
        .sum();
    Ok(sum / Rat::from_integer(int(s.mu() as i64)))
}

/// Variance against the bound `(α_max − α_min)/12`. Returns
/// `(V, bound, gap)` with `gap = bound − V`.
pub fn hertling_check(s: &Spectrum) -> Result<(Rat, Rat, Rat)> {
    let v = variance(s)?;
    let bound = (s.max().unwrap() - s.min().unwrap()) / rat(12, 1);
    let gap = &bound - &v;
    Ok((v, bound, gap))
}

/// Per-stage spectral statistics from the sub-unit partition.
#[derive(Debug, Clone)]
pub struct StageStats {
    /// Stage index, 1-based.
    pub nu: usize,
    /// Stage Milnor number `μ^(ν)`.
    pub mu_stage: Int,
    /// `S^(ν) = 2 Σ_{i ∈ Λ(ν)} (α_i − 1)²`.
    pub s: Rat,
    /// `ε^(ν) = 6 S^(ν) − μ^(ν)(1 − α_1)`.
    pub eps: Rat,
}

/// Per-stage statistics; errors if the stage partition does not match
/// the sub-unit part of the given spectrum.
pub fn stage_stats(cd: &CharacteristicData, spectrum: &Spectrum) -> Result<Vec<StageStats>> {
    let stages = subunit_stage_exponents(cd);
    let total: u64 = stages.iter().map(|s| s.len() as u64).sum();
    if total != spectrum.subunit_count() {
        return Err(Error::VerificationFailed(format!(
            "stage partition holds {total} exponents but the spectrum has {} below 1",
            spectrum.subunit_count()
        )));
    }
    let partition = Spectrum::from_exponents(stages.iter().flatten().cloned());
    let subunit = Spectrum::from_exponents(
        spectrum
            .iter_all()
            .filter(|a| **a < Rat::one())
            .cloned(),
    );
    if partition != subunit {
        return Err(Error::VerificationFailed(
            "stage partition disagrees with the sub-unit spectrum".into(),
        ));
    }

    let one = Rat::one();
    let mut out = Vec::with_capacity(stages.len());
    for (idx, stage) in stages.iter().enumerate() {
        let sum: Rat = stage
            .iter()
            .map(|a| {
                let d = a - &one;
                &d * &d
            })
            .sum();
        let s = sum * rat(2, 1);
        let mu_stage = cd.mu_stage[idx].clone();
        if Int::from(2 * stage.len() as u64) != mu_stage {
            return Err(Error::VerificationFailed(format!(
                "stage {} holds {} exponents, expected μ^(ν)/2 = {}",
                idx + 1,
                stage.len(),
                rat_big(&mu_stage, &int(2))
            )));
        }
        let eps = &s * rat(6, 1) - Rat::from_integer(mu_stage.clone()) * (&one - &cd.alpha1);
        out.push(StageStats {
            nu: idx + 1,
            mu_stage,
            s,
            eps,
        });
    }
    Ok(out)
}

fn check_lattice_args(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput("lattice sum needs positive arguments".into()));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::InvalidInput(format!(
            "lattice sum needs coprime arguments, got ({a},{b})"
        )));
    }
    if a > 2_000_000 || b > 2_000_000 {
        return Err(Error::GuardLimit(format!(
            "lattice sum arguments ({a},{b}) too large"
        )));
    }
    Ok(())
}

/// Direct lattice sum `F(a,b) = Σ (1 − i/a − j/b)` over
/// `{(i,j) : i,j > 0, i/a + j/b ≤ 1}`. Symmetric in its arguments;
/// coprimality is required.
pub fn lattice_f(a: u64, b: u64) -> Result<Rat> {
    check_lattice_args(a, b)?;
    // accumulate (ab − ib − ja) over the lattice, then divide once
    let (a_i, b_i) = (a as i128, b as i128);
    let mut num: i128 = 0;
    for i in 1..a {
        let i = i as i128;
        for j in 1..=b as i128 {
            let term = a_i * b_i - i * b_i - j * a_i;
            if term < 0 {
                break;
            }
            num += term;
        }
    }
    Ok(Rat::new(Int::from(num), Int::from(a_i * b_i)))
}

/// `E(a,b) = (a−1)(b−1)/6 − F(a,b)` for coprime `a > b`.
pub fn lattice_e(a: u64, b: u64) -> Result<Rat> {
    if a <= b {
        return Err(Error::InvalidInput(format!(
            "lattice E needs a > b, got ({a},{b})"
        )));
    }
    check_lattice_args(a, b)?;
    let f = lattice_f(a, b)?;
    Ok(rat((a as i64 - 1) * (b as i64 - 1), 6) - f)
}

/// One named identity or inequality of the lattice-sum lemma.
#[derive(Debug, Clone)]
pub struct LatticeCheck {
    pub name: String,
    pub pass: bool,
}

/// Verify the subtraction and division recursions, the induction
/// inequality and the lower bound on `E(a,b)`, all against direct
/// lattice sums.
pub fn lemma53_checks(a: u64, b: u64) -> Result<Vec<LatticeCheck>> {
    if a <= b {
        return Err(Error::InvalidInput(format!(
            "lattice checks need a > b, got ({a},{b})"
        )));
    }
    check_lattice_args(a, b)?;
    let mut out = Vec::new();
    let f_ab = lattice_f(a, b)?;
    let e_ab = lattice_e(a, b)?;
    let (ar, br) = (a as i64, b as i64);

    // subtraction step: F(a,b) − ((a−b)/a) F(a−b,b)
    if a > b {
        let f_sub = lattice_f(a - b, b)?;
        let lhs = &f_ab - rat(ar - br, ar) * f_sub;
        let rhs = rat((br - 1) * (2 * ar * br - br * br - ar - br), 6 * ar);
        out.push(LatticeCheck {
            name: format!("subtraction recursion at ({a},{b})"),
            pass: lhs == rhs,
        });
    }

    if b >= 2 {
        let m = (a / b) as i64;
        let k = (a % b) as i64;
        debug_assert!(k > 0, "coprime a,b with b >= 2 leave a remainder");
        // division step: F(a,b) − (k/a) F(k,b)
        let f_kb = lattice_f(k as u64, b)?;
        let lhs = &f_ab - rat(k, ar) * f_kb;
        let rhs = rat(
            (br - 1) * m * ((2 * br * br - br) * m + 4 * br * k - 2 * k - 3 * br),
            12 * ar,
        );
        out.push(LatticeCheck {
            name: format!("division recursion at ({a},{b})"),
            pass: lhs == rhs,
        });
        // E recursion
        let e_bk = lattice_e(b, k as u64)?;
        let lhs = &e_ab - rat(k, ar) * e_bk;
        let rhs = rat(m * (br - 1) * (ar + br + k), 12 * ar);
        out.push(LatticeCheck {
            name: format!("E recursion at ({a},{b})"),
            pass: lhs == rhs,
        });
        // induction inequality
        let lhs = rat((k - 1) * (br + k - 1), ar) + rat(m * (br - 1) * (ar + br + k), ar);
        let rhs = rat((br - 1) * (ar + br - 1), br);
        out.push(LatticeCheck {
            name: format!("induction inequality at ({a},{b})"),
            pass: lhs >= rhs,
        });
    }

    // lower bound E(a,b) ≥ (b−1)(a+b−1)/12b
    let bound = rat((br - 1) * (ar + br - 1), 12 * br);
    out.push(LatticeCheck {
        name: format!("E lower bound at ({a},{b})"),
        pass: e_ab >= bound,
    });
    Ok(out)
}

/// `V_f` recomputed from the per-stage sums: `(Σ S^(ν))/μ`.
pub fn variance_from_stages(cd: &CharacteristicData, stats: &[StageStats]) -> Rat {
    let sum: Rat = stats.iter().map(|s| s.s.clone()).sum();
    sum / Rat::from_integer(cd.mu.clone())
}

/// The closed form `6 S^(g) = μ^(g)(1 − 1/w_g − 1/n_g)` for the top
/// stage.
pub fn top_stage_identity_holds(cd: &CharacteristicData, stats: &[StageStats]) -> bool {
    let g = cd.pairs.g();
    let top = &stats[g - 1];
    let w = &cd.w[g - 1];
    let n = cd.pairs.pairs()[g - 1].1 as i64;
    let rhs = Rat::from_integer(top.mu_stage.clone())
        * (Rat::one() - rat_big(&Int::one(), w) - rat(1, n));
    &top.s * rat(6, 1) == rhs
}

/// Sign of `Σ ε^(ν)`: exactly zero for one pair, strictly negative
/// otherwise.
pub fn eps_sum(stats: &[StageStats]) -> Rat {
    stats.iter().map(|s| s.eps.clone()).sum()
}
