//! Cross-route verification harness: runs every spectrum route, every
//! closed-form identity and every invariant for a pair list, and the
//! seeded sweep generator used for batch verification.

use crate::error::{Error, Result};
use crate::puiseux::{characteristic_data, parse_pairs, PuiseuxPairs};
use crate::rational::{rat, Int, Rat};
use crate::resolution::{decorate, log_canonical_threshold, verify_closed_forms, Limits};
use crate::spectrum::{
    check_symmetry, phi_recursive, quasihomogeneous_spectrum, spectrum_enumeration,
    spectrum_steenbrink, subunit_stage_exponents, Spectrum,
};
use crate::variance::{
    eps_sum, hertling_check, stage_stats, top_stage_identity_holds, variance_from_stages,
};
use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// One named pass/fail result.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: String, pass: bool, detail: String) -> Self {
        Check { name, pass, detail }
    }
}

/// Results of the full harness for one pair list.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub pairs: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Optional fault injection, for exercising the mismatch path of the
/// harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Add 1 to the multiplicity of the final exceptional divisor
    /// after decoration.
    PerturbMultiplicity,
}

/// Run every check for one pair list.
pub fn verify_pairs(pairs: &PuiseuxPairs, limits: &Limits, fault: Fault) -> Result<VerifyReport> {
    let cd = characteristic_data(pairs);
    let mut dec = decorate(pairs, limits)?;
    if fault == Fault::PerturbMultiplicity {
        let last = *dec.diagram.last_of_stage.last().unwrap();
        dec.m[last] += 1;
        for r in &mut dec.ruptures {
            if r.vertex == last {
                r.m0 = dec.m[last].clone();
            }
            for (pos, &nbr) in r.neighbors.iter().enumerate() {
                if nbr == last {
                    r.neighbor_mults[pos] = dec.m[last].clone();
                }
            }
        }
    }
    let g = pairs.g();
    let mut checks = Vec::new();

    // three routes
    let s_enum = spectrum_enumeration(&cd);
    let s_phi = phi_recursive(&cd);
    let routes_eq = s_enum == s_phi;
    checks.push(Check::new(
        "route agreement: enumeration vs recursion".into(),
        routes_eq,
        diff_detail(&s_enum, &s_phi),
    ));
    match spectrum_steenbrink(&dec, &cd) {
        Ok(s_res) => {
            checks.push(Check::new(
                "route agreement: enumeration vs resolution".into(),
                s_enum == s_res,
                diff_detail(&s_enum, &s_res),
            ));
        }
        Err(e) => checks.push(Check::new(
            "route agreement: enumeration vs resolution".into(),
            false,
            e.to_string(),
        )),
    }

    // counting invariants
    checks.push(Check::new(
        "spectrum size equals the Milnor number".into(),
        Int::from(s_enum.mu()) == cd.mu,
        format!("|spectrum| = {}, μ = {}", s_enum.mu(), cd.mu),
    ));
    checks.push(Check::new(
        "half the exponents lie below 1".into(),
        Int::from(2 * s_enum.subunit_count()) == cd.mu,
        String::new(),
    ));
    let stage_counts_ok = subunit_stage_exponents(&cd)
        .iter()
        .enumerate()
        .all(|(nu, st)| Int::from(2 * st.len() as u64) == cd.mu_stage[nu]);
    checks.push(Check::new(
        "per-stage sub-unit counts are μ^(ν)/2".into(),
        stage_counts_ok,
        String::new(),
    ));

    // support
    let two = rat(2, 1);
    let one = Rat::one();
    let support_ok = s_enum
        .entries()
        .iter()
        .all(|(a, _)| a > &Rat::zero() && a < &two && a != &one);
    checks.push(Check::new(
        "support lies in (0,2) and avoids 1".into(),
        support_ok,
        String::new(),
    ));
    checks.push(Check::new(
        "spectrum symmetric about 1".into(),
        check_symmetry(&s_enum),
        String::new(),
    ));

    // extremes and the log canonical threshold
    let lct = log_canonical_threshold(&dec);
    let min_ok = s_enum.min() == Some(&cd.alpha1) && lct == cd.alpha1;
    checks.push(Check::new(
        "smallest exponent equals α_1 equals min e".into(),
        min_ok,
        format!(
            "min = {:?}, α_1 = {}, lct = {}",
            s_enum.min(),
            cd.alpha1,
            lct
        ),
    ));
    checks.push(Check::new(
        "largest exponent is 2 − α_1".into(),
        s_enum.max() == Some(&(&two - &cd.alpha1)),
        String::new(),
    ));

    // quasihomogeneous consistency for one pair
    if g == 1 {
        let (k, n) = pairs.pairs()[0];
        let qh = quasihomogeneous_spectrum(&[rat(1, k as i64), rat(1, n as i64)])?;
        checks.push(Check::new(
            "one-pair spectrum matches the quasihomogeneous formula".into(),
            qh == s_enum,
            diff_detail(&s_enum, &qh),
        ));
    }

    // closed forms and congruences on the resolution
    checks.extend(verify_closed_forms(&dec));

    // variance statistics
    match stage_stats(&cd, &s_enum) {
        Ok(stats) => {
            let (v, _bound, gap) = hertling_check(&s_enum)?;
            let gap_ok = if g == 1 {
                gap.is_zero()
            } else {
                gap > Rat::zero()
            };
            checks.push(Check::new(
                "variance gap zero iff one pair, positive otherwise".into(),
                gap_ok,
                format!("gap = {gap}"),
            ));
            checks.push(Check::new(
                "variance agrees with the per-stage sums".into(),
                variance_from_stages(&cd, &stats) == v,
                String::new(),
            ));
            checks.push(Check::new(
                "top-stage identity 6S^(g) = μ^(g)(1 − 1/w_g − 1/n_g)".into(),
                top_stage_identity_holds(&cd, &stats),
                String::new(),
            ));
            let eps = eps_sum(&stats);
            let eps_ok = if g == 1 {
                eps.is_zero()
            } else {
                eps < Rat::zero()
            };
            checks.push(Check::new(
                "ε sums to zero iff one pair, negative otherwise".into(),
                eps_ok,
                format!("Σε = {eps}"),
            ));
        }
        Err(e) => checks.push(Check::new(
            "per-stage statistics".into(),
            false,
            e.to_string(),
        )),
    }

    // weight identities (also asserted at construction; repeated here
    // so harness output names them)
    let lhs = &cd.w[g - 1] * Int::from(pairs.pairs()[g - 1].1);
    let rhs: Int = (0..g)
        .map(|nu| Int::from(pairs.pairs()[nu].0) * &cd.nprime[nu] * &cd.nprime[nu + 1])
        .sum();
    checks.push(Check::new(
        "weight product identity w_g n_g = Σ k_ν n'_{ν-1} n'_ν".into(),
        lhs == rhs,
        String::new(),
    ));
    let mut partial_ok = true;
    for j in 1..=g {
        let lhs: Int = cd.mu_stage[..j].iter().sum();
        let mut rhs = (&cd.w[j - 1] - Int::one()) * &cd.nprime[j - 1];
        for nu in 1..=j {
            let n_prev = if nu == 1 { 0 } else { pairs.pairs()[nu - 2].1 };
            let (k, n) = pairs.pairs()[nu - 1];
            rhs -= Int::from(k + n_prev * n - 1) * &cd.nprime[nu];
        }
        partial_ok &= lhs == rhs;
    }
    checks.push(Check::new(
        "stage Milnor partial sums match the closed form".into(),
        partial_ok,
        String::new(),
    ));

    Ok(VerifyReport {
        pairs: pairs.display(),
        checks,
    })
}

fn diff_detail(a: &Spectrum, b: &Spectrum) -> String {
    match a.first_difference(b) {
        None => String::new(),
        Some((alpha, x, y)) => {
            format!("first differing exponent {alpha}: multiplicity {x} vs {y}")
        }
    }
}

/// Bounds for the seeded random sweep, parsed from
/// `"g<=2,k<=12,n<=5,count=50,seed=7"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub g_max: usize,
    pub k_max: u64,
    pub n_max: u64,
    pub count: usize,
    pub seed: u64,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            g_max: 2,
            k_max: 12,
            n_max: 5,
            count: 50,
            seed: 0,
        }
    }
}

impl SweepSpec {
    pub fn parse(text: &str) -> Result<SweepSpec> {
        let mut spec = SweepSpec::default();
        for tok in text.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let parse_val = |s: &str| -> Result<u64> {
                s.trim()
                    .parse()
                    .map_err(|_| Error::Syntax(format!("bad sweep value in \"{tok}\"")))
            };
            if let Some(v) = tok.strip_prefix("g<=") {
                spec.g_max = parse_val(v)? as usize;
            } else if let Some(v) = tok.strip_prefix("k<=") {
                spec.k_max = parse_val(v)?;
            } else if let Some(v) = tok.strip_prefix("n<=") {
                spec.n_max = parse_val(v)?;
            } else if let Some(v) = tok.strip_prefix("count=") {
                spec.count = parse_val(v)? as usize;
            } else if let Some(v) = tok.strip_prefix("seed=") {
                spec.seed = parse_val(v)?;
            } else {
                return Err(Error::Syntax(format!("unknown sweep clause \"{tok}\"")));
            }
        }
        if spec.g_max == 0 || spec.count == 0 || spec.n_max < 2 || spec.k_max < 3 {
            return Err(Error::Syntax(
                "sweep needs g>=1, count>=1, n_max>=2, k_max>=3".into(),
            ));
        }
        Ok(spec)
    }

    /// Deterministic case list: `count` pair lists drawn with a
    /// ChaCha8 generator. Stage count is uniform in `1..=g_max`;
    /// each stage draws uniform `(k,n)` within the bounds, rejecting
    /// non-coprime pairs (and `k <= n` for the first stage).
    pub fn generate(&self) -> Vec<PuiseuxPairs> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::with_capacity(self.count);
        while out.len() < self.count {
            let g = rng.gen_range(1..=self.g_max);
            let mut pairs = Vec::with_capacity(g);
            for stage in 0..g {
                loop {
                    let n = rng.gen_range(2..=self.n_max);
                    let lo = if stage == 0 { n + 1 } else { 1 };
                    if lo > self.k_max {
                        continue;
                    }
                    let k = rng.gen_range(lo..=self.k_max);
                    if num::integer::gcd(k, n) == 1 {
                        pairs.push((k, n));
                        break;
                    }
                }
            }
            if let Ok(p) = PuiseuxPairs::new(pairs) {
                out.push(p);
            }
        }
        out
    }
}

/// Run the harness over every sweep case; stops at the first failure.
pub fn verify_sweep(spec: &SweepSpec, limits: &Limits) -> Result<Vec<VerifyReport>> {
    let mut reports = Vec::new();
    for pairs in spec.generate() {
        let report = verify_pairs(&pairs, limits, Fault::None)?;
        let failed = !report.all_pass();
        reports.push(report);
        if failed {
            break;
        }
    }
    Ok(reports)
}

/// Convenience: parse, then verify.
pub fn verify_text(text: &str, limits: &Limits, fault: Fault) -> Result<VerifyReport> {
    verify_pairs(&parse_pairs(text)?, limits, fault)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harness_passes_ground_truth() {
        for text in ["3,2", "5,2", "3,2;1,2", "7,2;3,5", "4,3;1,2;1,2"] {
            let report = verify_text(text, &Limits::default(), Fault::None).unwrap();
            assert!(
                report.all_pass(),
                "{text}: {:?}",
                report.first_failure().map(|c| (&c.name, &c.detail))
            );
        }
    }

    #[test]
    fn fault_injection_detected() {
        let report = verify_text("3,2", &Limits::default(), Fault::PerturbMultiplicity).unwrap();
        assert!(!report.all_pass());
    }

    #[test]
    fn sweep_parse() {
        let s = SweepSpec::parse("g<=2,k<=12,n<=5,count=50,seed=7").unwrap();
        assert_eq!(
            s,
            SweepSpec {
                g_max: 2,
                k_max: 12,
                n_max: 5,
                count: 50,
                seed: 7
            }
        );
        assert!(SweepSpec::parse("bogus=1").is_err());
    }

    #[test]
    fn sweep_deterministic() {
        let spec = SweepSpec::parse("g<=2,k<=9,n<=4,count=10,seed=3").unwrap();
        let a = spec.generate();
        let b = spec.generate();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
    }

    #[test]
    fn sweep_verifies() {
        let spec = SweepSpec::parse("g<=2,k<=8,n<=4,count=8,seed=1").unwrap();
        let reports = verify_sweep(&spec, &Limits::default()).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.all_pass()));
    }
}
