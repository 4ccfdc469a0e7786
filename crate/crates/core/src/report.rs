//! Structured analysis report with a stable JSON encoding. Rationals
//! are serialized as `"p/q"` strings together with a decimal
//! approximation, so downstream tools never see floating-point drift.

use crate::error::Result;
use crate::puiseux::{characteristic_data, PuiseuxPairs};
use crate::rational::{approx_string, rat_string, Rat};
use crate::resolution::{decorate, log_canonical_threshold, Limits};
use crate::spectrum::{spectrum_enumeration, Spectrum};
use crate::variance::{eps_sum, hertling_check, stage_stats};
use crate::verify::{verify_pairs, Fault};
use serde::Serialize;

const APPROX_DIGITS: u32 = 12;

/// A rational value rendered both exactly and approximately.
#[derive(Debug, Clone, Serialize)]
pub struct RatValue {
    pub exact: String,
    pub approx: String,
}

impl RatValue {
    pub fn new(x: &Rat) -> Self {
        RatValue {
            exact: rat_string(x),
            approx: approx_string(x, APPROX_DIGITS),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairEntry {
    pub k: u64,
    pub n: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacteristicReport {
    pub g: usize,
    pub weights: Vec<String>,
    pub cofactors: Vec<String>,
    pub milnor_number: String,
    pub milnor_by_stage: Vec<String>,
    pub characteristic_exponents: Vec<RatValue>,
    pub smallest_exponent: RatValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumEntry {
    pub exponent: RatValue,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexReport {
    pub name: String,
    pub multiplicity: String,
    pub discrepancy: String,
    pub ratio: RatValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuptureReport {
    pub name: String,
    pub stage: usize,
    pub multiplicity: String,
    pub neighbor_multiplicities: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResolutionReport {
    pub vertex_count: usize,
    pub vertices: Vec<VertexReport>,
    pub dual_edges: Vec<(String, String)>,
    pub ruptures: Vec<RuptureReport>,
    pub log_canonical_threshold: RatValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct StageVarianceReport {
    pub stage: usize,
    pub milnor: String,
    pub weighted_sum: RatValue,
    pub epsilon: RatValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct VarianceReport {
    pub variance: RatValue,
    pub hertling_bound: RatValue,
    pub gap: RatValue,
    pub stages: Vec<StageVarianceReport>,
    pub epsilon_sum: RatValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks_run: usize,
    pub checks_passed: usize,
    pub all_pass: bool,
    pub failures: Vec<String>,
}

/// Everything the `report` subcommand emits, in one serializable tree.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub pairs: Vec<PairEntry>,
    pub characteristic: CharacteristicReport,
    pub spectrum: Vec<SpectrumEntry>,
    pub resolution: ResolutionReport,
    pub variance: VarianceReport,
    pub verification: VerificationReport,
}

/// Build the full report for a pair list.
pub fn build_report(pairs: &PuiseuxPairs, limits: &Limits) -> Result<Report> {
    let cd = characteristic_data(pairs);
    let dec = decorate(pairs, limits)?;
    let spectrum = spectrum_enumeration(&cd);
    let stats = stage_stats(&cd, &spectrum)?;
    let (v, bound, gap) = hertling_check(&spectrum)?;
    let verify = verify_pairs(pairs, limits, Fault::None)?;

    let characteristic = CharacteristicReport {
        g: pairs.g(),
        weights: cd.w.iter().map(|x| x.to_string()).collect(),
        cofactors: cd.nprime.iter().map(|x| x.to_string()).collect(),
        milnor_number: cd.mu.to_string(),
        milnor_by_stage: cd.mu_stage.iter().map(|x| x.to_string()).collect(),
        characteristic_exponents: pairs
            .characteristic_exponents()
            .iter()
            .map(RatValue::new)
            .collect(),
        smallest_exponent: RatValue::new(&cd.alpha1),
    };

    let vertices = (0..dec.diagram.white_count())
        .map(|i| VertexReport {
            name: dec.diagram.vertex_name(i),
            multiplicity: dec.m[i].to_string(),
            discrepancy: (&dec.dtilde[i] - 1u32).to_string(),
            ratio: RatValue::new(&dec.e[i]),
        })
        .collect();
    let dual_edges = dec
        .graph
        .edges
        .iter()
        .map(|&(a, b)| (dec.diagram.vertex_name(a), dec.diagram.vertex_name(b)))
        .collect();
    let ruptures = dec
        .ruptures
        .iter()
        .map(|r| RuptureReport {
            name: dec.diagram.vertex_name(r.vertex),
            stage: r.stage,
            multiplicity: r.m0.to_string(),
            neighbor_multiplicities: r.neighbor_mults.iter().map(|m| m.to_string()).collect(),
        })
        .collect();
    let resolution = ResolutionReport {
        vertex_count: dec.diagram.white_count(),
        vertices,
        dual_edges,
        ruptures,
        log_canonical_threshold: RatValue::new(&log_canonical_threshold(&dec)),
    };

    let variance = VarianceReport {
        variance: RatValue::new(&v),
        hertling_bound: RatValue::new(&bound),
        gap: RatValue::new(&gap),
        stages: stats
            .iter()
            .map(|s| StageVarianceReport {
                stage: s.nu,
                milnor: s.mu_stage.to_string(),
                weighted_sum: RatValue::new(&s.s),
                epsilon: RatValue::new(&s.eps),
            })
            .collect(),
        epsilon_sum: RatValue::new(&eps_sum(&stats)),
    };

    let failures: Vec<String> = verify
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.clone())
        .collect();
    let verification = VerificationReport {
        checks_run: verify.checks.len(),
        checks_passed: verify.checks.iter().filter(|c| c.pass).count(),
        all_pass: failures.is_empty(),
        failures,
    };

    Ok(Report {
        pairs: pairs
            .pairs()
            .iter()
            .map(|&(k, n)| PairEntry { k, n })
            .collect(),
        characteristic,
        spectrum: spectrum
            .entries()
            .iter()
            .map(|(a, m)| SpectrumEntry {
                exponent: RatValue::new(a),
                multiplicity: *m,
            })
            .collect(),
        resolution,
        variance,
        verification,
    })
}

/// Pretty JSON with a trailing newline; byte-for-byte deterministic.
pub fn report_json(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

/// Spectrum rows as CSV (`exponent,approx,multiplicity`).
pub fn spectrum_csv(spectrum: &Spectrum) -> String {
    let mut out = String::from("exponent,approx,multiplicity\n");
    for (a, m) in spectrum.entries() {
        out.push_str(&format!(
            "{},{},{}\n",
            rat_string(a),
            approx_string(a, APPROX_DIGITS),
            m
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::parse_pairs;

    #[test]
    fn report_cusp() {
        let pairs = parse_pairs("3,2").unwrap();
        let r = build_report(&pairs, &Limits::default()).unwrap();
        assert_eq!(r.characteristic.milnor_number, "2");
        assert_eq!(r.characteristic.smallest_exponent.exact, "5/6");
        assert_eq!(r.spectrum.len(), 2);
        assert_eq!(r.spectrum[0].exponent.exact, "5/6");
        assert_eq!(r.resolution.log_canonical_threshold.exact, "5/6");
        assert_eq!(r.variance.variance.exact, "1/36");
        assert!(r.verification.all_pass);
    }

    #[test]
    fn json_deterministic() {
        let pairs = parse_pairs("3,2;1,2").unwrap();
        let a = report_json(&build_report(&pairs, &Limits::default()).unwrap());
        let b = report_json(&build_report(&pairs, &Limits::default()).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("\"exact\": \"5/12\""));
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn csv_shape() {
        let pairs = parse_pairs("3,2").unwrap();
        let cd = crate::puiseux::characteristic_data(&pairs);
        let csv = spectrum_csv(&spectrum_enumeration(&cd));
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("5/6,0.8333"));
    }
}
