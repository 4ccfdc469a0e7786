//! The spectrum (multiset of exponents) by three independent routes:
//! direct lattice enumeration, the generating-function recursion, and
//! the rupture-vertex cohomology count on the resolution.

use crate::error::{Error, Result};
use crate::puiseux::CharacteristicData;
use crate::rational::{frac, int, intu, rat, rat_big, Int, Rat};
use crate::resolution::DecoratedResolution;
use num::{One, Zero};
use std::collections::BTreeMap;

/// Sorted multiset of rational exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(Rat, u64)>,
}

impl Spectrum {
    pub fn from_exponents<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        let mut map: BTreeMap<Rat, u64> = BTreeMap::new();
        for a in iter {
            *map.entry(a).or_insert(0) += 1;
        }
        Spectrum {
            entries: map.into_iter().collect(),
        }
    }

    pub fn from_multiset(map: BTreeMap<Rat, u64>) -> Self {
        Spectrum {
            entries: map.into_iter().filter(|&(_, m)| m > 0).collect(),
        }
    }

    /// Sorted `(exponent, multiplicity)` entries.
    pub fn entries(&self) -> &[(Rat, u64)] {
        &self.entries
    }

    /// Total count of exponents (the Milnor number for pairs-derived
    /// spectra).
    pub fn mu(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.entries.first().map(|(a, _)| a)
    }

    pub fn max(&self) -> Option<&Rat> {
        self.entries.last().map(|(a, _)| a)
    }

    /// Exponents strictly below 1, with multiplicity.
    pub fn subunit_count(&self) -> u64 {
        self.entries
            .iter()
            .filter(|(a, _)| *a < Rat::one())
            .map(|&(_, m)| m)
            .sum()
    }

    /// Iterate every exponent, repeated per multiplicity.
    pub fn iter_all(&self) -> impl Iterator<Item = &Rat> + '_ {
        self.entries
            .iter()
            .flat_map(|(a, m)| std::iter::repeat(a).take(*m as usize))
    }

    /// First entry where two spectra differ, for mismatch reports.
    pub fn first_difference(&self, other: &Spectrum) -> Option<(Rat, u64, u64)> {
        let mut keys: Vec<&Rat> = self.entries.iter().map(|(a, _)| a).collect();
        keys.extend(other.entries.iter().map(|(a, _)| a));
        keys.sort();
        keys.dedup();
        let get = |s: &Spectrum, k: &Rat| {
            s.entries
                .iter()
                .find(|(a, _)| a == k)
                .map(|&(_, m)| m)
                .unwrap_or(0)
        };
        for k in keys {
            let (x, y) = (get(self, k), get(other, k));
            if x != y {
                return Some((k.clone(), x, y));
            }
        }
        None
    }
}

/// True iff the multiset is fixed by `α ↦ 2 − α`.
pub fn check_symmetry(s: &Spectrum) -> bool {
    let two = rat(2, 1);
    let reflected = Spectrum::from_exponents(s.iter_all().map(|a| &two - a));
    reflected == *s
}

/// Sub-unit exponents of each stage per the lattice enumeration:
/// `(1/n'_ν)(i/n_ν + j/w_ν) + r/n'_ν` over `0 < i < n_ν`,
/// `0 < j < w_ν`, `0 ≤ r < n'_ν` with `i/n_ν + j/w_ν < 1`.
pub fn subunit_stage_exponents(cd: &CharacteristicData) -> Vec<Vec<Rat>> {
    let g = cd.pairs.g();
    let mut out = Vec::with_capacity(g);
    for nu in 0..g {
        let n = cd.pairs.pairs()[nu].1;
        let w = &cd.w[nu];
        let nprime = &cd.nprime[nu + 1];
        let mut stage = Vec::new();
        // i/n + j/w < 1  ⟺  iw + jn < nw
        let nw = intu(n) * w;
        let mut i = Int::one();
        while i < intu(n) {
            let mut j = Int::one();
            loop {
                let lhs = &i * w + &j * intu(n);
                if lhs >= nw {
                    break;
                }
                let base = rat_big(&lhs, &(&nw * nprime));
                let mut r = Int::zero();
                while &r < nprime {
                    stage.push(&base + rat_big(&r, nprime));
                    r += 1;
                }
                j += 1;
            }
            i += 1;
        }
        out.push(stage);
    }
    out
}

/// Spectrum by direct enumeration: the sub-unit lattice part plus its
/// reflection `2 − α`.
pub fn spectrum_enumeration(cd: &CharacteristicData) -> Spectrum {
    let two = rat(2, 1);
    let mut all = Vec::new();
    for stage in subunit_stage_exponents(cd) {
        for a in stage {
            all.push(&two - &a);
            all.push(a);
        }
    }
    Spectrum::from_exponents(all)
}

type Multiset = BTreeMap<Rat, u64>;

fn ms_insert(ms: &mut Multiset, a: Rat, count: u64) {
    *ms.entry(a).or_insert(0) += count;
}

/// `(t^{1/k} - t)/(1 - t^{1/k}) = Σ_{i=1}^{k-1} t^{i/k}` as a multiset.
fn geometric_open(k: &Int) -> Multiset {
    let mut ms = Multiset::new();
    let mut i = Int::one();
    while &i < k {
        ms_insert(&mut ms, rat_big(&i, k), 1);
        i += 1;
    }
    ms
}

/// `(1 - t)/(1 - t^{1/n}) = Σ_{r=0}^{n-1} t^{r/n}` as a multiset.
fn geometric_closed(n: &Int) -> Multiset {
    let mut ms = Multiset::new();
    let mut r = Int::zero();
    while &r < n {
        ms_insert(&mut ms, rat_big(&r, n), 1);
        r += 1;
    }
    ms
}

fn ms_product(a: &Multiset, b: &Multiset) -> Multiset {
    let mut out = Multiset::new();
    for (x, mx) in a {
        for (y, my) in b {
            ms_insert(&mut out, x + y, mx * my);
        }
    }
    out
}

fn ms_scale_and_shift(ms: &Multiset, scale: &Rat, shift: &Rat) -> Multiset {
    ms.iter().map(|(a, m)| (a * scale + shift, *m)).collect()
}

/// Spectrum by the generating-function recursion on the number of
/// pairs, with each rational-function factor expanded to a finite
/// exponent multiset.
pub fn phi_recursive(cd: &CharacteristicData) -> Spectrum {
    Spectrum::from_multiset(phi_multiset(cd, cd.pairs.g()))
}

fn phi_multiset(cd: &CharacteristicData, g: usize) -> Multiset {
    let (k, n) = cd.pairs.pairs()[g - 1];
    let n_big = intu(n);
    if g == 1 {
        return ms_product(&geometric_open(&intu(k)), &geometric_open(&n_big));
    }
    let w = &cd.w[g - 1];
    let mut out = ms_product(&geometric_open(w), &geometric_open(&n_big));

    let prev = phi_multiset(cd, g - 1);
    let one = Rat::one();
    let mut less = Multiset::new();
    let mut greater = Multiset::new();
    for (a, m) in prev {
        if a < one {
            less.insert(a, m);
        } else if a > one {
            greater.insert(a, m);
        } else {
            // no exponent of an irreducible branch equals 1
            panic!("recursion produced an exponent equal to 1");
        }
    }
    let inv_n = Rat::new(Int::one(), n_big.clone());
    let closed = geometric_closed(&n_big);
    let less_scaled = ms_scale_and_shift(&less, &inv_n, &Rat::zero());
    for (a, m) in ms_product(&closed, &less_scaled) {
        ms_insert(&mut out, a, m);
    }
    let shift = &one - &inv_n;
    let greater_scaled = ms_scale_and_shift(&greater, &inv_n, &shift);
    for (a, m) in ms_product(&closed, &greater_scaled) {
        ms_insert(&mut out, a, m);
    }
    out
}

/// Spectrum of a quasihomogeneous singularity from its weights:
/// `{Σ_i m_i w_i : 1 ≤ m_i ≤ 1/w_i − 1}`. Every reciprocal weight must
/// be an integer for the factors to expand to finite sums.
pub fn quasihomogeneous_spectrum(weights: &[Rat]) -> Result<Spectrum> {
    if weights.is_empty() {
        return Err(Error::InvalidInput("at least one weight is required".into()));
    }
    let mut acc = Multiset::new();
    ms_insert(&mut acc, Rat::zero(), 1);
    for (idx, w) in weights.iter().enumerate() {
        if w <= &Rat::zero() || w >= &Rat::one() {
            return Err(Error::InvalidInput(format!(
                "weight #{}: must lie strictly between 0 and 1",
                idx + 1
            )));
        }
        if !w.numer().is_one() {
            return Err(Error::InvalidInput(format!(
                "weight #{}: reciprocal of {} is not an integer",
                idx + 1,
                w
            )));
        }
        let d = w.denom();
        let factor: Multiset = {
            let mut ms = Multiset::new();
            let mut m = Int::one();
            while &m < d {
                ms_insert(&mut ms, rat_big(&m, d) , 1);
                m += 1;
            }
            ms
        };
        acc = ms_product(&acc, &factor);
    }
    Ok(Spectrum::from_multiset(acc))
}

/// Lattice-sum criterion for a rational triple with integral sum: true
/// iff the fractional parts sum to 2.
pub fn lemma42_predicate(a1: &Rat, a2: &Rat, a3: &Rat) -> Result<bool> {
    let sum = a1 + a2 + a3;
    if !sum.denom().is_one() {
        return Err(Error::InvalidInput(format!(
            "sum {sum} is not an integer"
        )));
    }
    Ok(frac(a1) + frac(a2) + frac(a3) == rat(2, 1))
}

/// Equivalent characterization of [`lemma42_predicate`]: `a1 ∉ ℤ` and
/// `frac(a2 + a3) < frac(a3)`.
pub fn lemma42_characterization(a1: &Rat, a2: &Rat, a3: &Rat) -> Result<bool> {
    let sum = a1 + a2 + a3;
    if !sum.denom().is_one() {
        return Err(Error::InvalidInput(format!(
            "sum {sum} is not an integer"
        )));
    }
    Ok(!a1.denom().is_one() && frac(&(a2 + a3)) < frac(a3))
}

/// Spectrum from the decorated resolution: at every rupture vertex and
/// `0 < c < m_α`, a cohomology class exists iff the fractional parts of
/// `c m_β / m_α` over the neighbours sum to 2, contributing the
/// exponent `2 − c/m_α`; the rest follows by symmetry.
pub fn spectrum_steenbrink(
    dec: &DecoratedResolution,
    cd: &CharacteristicData,
) -> Result<Spectrum> {
    let two = rat(2, 1);
    let mut upper = Vec::new();
    for rupture in &dec.ruptures {
        let m0 = &rupture.m0;
        let mut c = Int::one();
        while &c < m0 {
            // Σ frac(c m_β / m0) = 2  ⟺  Σ (c m_β mod m0) = 2 m0
            let s: Int = rupture
                .neighbor_mults
                .iter()
                .map(|mb| (&c * mb) % m0)
                .sum();
            if s == m0 * int(2) {
                let alpha = &two - rat_big(&c, m0);
                debug_assert!(alpha > Rat::one() && alpha < two);
                upper.push(alpha);
            }
            c += 1;
        }
    }
    let expected = &cd.mu / int(2);
    if Int::from(upper.len() as u64) != expected {
        return Err(Error::VerificationFailed(format!(
            "rupture enumeration found {} classes, expected μ/2 = {}",
            upper.len(),
            expected
        )));
    }
    let mut all = Vec::with_capacity(upper.len() * 2);
    for a in upper {
        all.push(&two - &a);
        all.push(a);
    }
    Ok(Spectrum::from_exponents(all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::{characteristic_data, parse_pairs};
    use crate::resolution::{decorate, Limits};

    fn cd(text: &str) -> CharacteristicData {
        characteristic_data(&parse_pairs(text).unwrap())
    }

    fn spec_of(entries: &[(i64, i64, u64)]) -> Spectrum {
        Spectrum::from_multiset(
            entries
                .iter()
                .map(|&(p, q, m)| (rat(p, q), m))
                .collect(),
        )
    }

    #[test]
    fn enumeration_cusp() {
        let s = spectrum_enumeration(&cd("3,2"));
        assert_eq!(s, spec_of(&[(5, 6, 1), (7, 6, 1)]));
    }

    #[test]
    fn enumeration_52() {
        let s = spectrum_enumeration(&cd("5,2"));
        assert_eq!(
            s,
            spec_of(&[(7, 10, 1), (9, 10, 1), (11, 10, 1), (13, 10, 1)])
        );
    }

    #[test]
    fn enumeration_two_pairs() {
        let s = spectrum_enumeration(&cd("3,2;1,2"));
        let mut expected: Vec<(i64, i64, u64)> =
            (1..=12).map(|i| (13 + 2 * i, 26, 1)).collect();
        expected.extend_from_slice(&[(5, 12, 1), (11, 12, 1), (13, 12, 1), (19, 12, 1)]);
        assert_eq!(s, spec_of(&expected));
        assert_eq!(s.mu(), 16);
        // sub-unit part
        let sub: Vec<Rat> = s
            .iter_all()
            .filter(|a| **a < Rat::one())
            .cloned()
            .collect();
        assert_eq!(sub.len(), 8);
        assert!(sub.contains(&rat(15, 26)));
        assert!(sub.contains(&rat(25, 26)));
        assert!(sub.contains(&rat(5, 12)));
        assert!(sub.contains(&rat(11, 12)));
    }

    #[test]
    fn phi_matches_enumeration() {
        for text in ["3,2", "5,2", "3,2;1,2", "7,3;2,5", "4,3;1,2;1,2"] {
            let cd = cd(text);
            assert_eq!(phi_recursive(&cd), spectrum_enumeration(&cd), "{text}");
        }
    }

    #[test]
    fn phi_two_pairs_explicit() {
        let s = phi_recursive(&cd("3,2;1,2"));
        assert_eq!(s.mu(), 16);
        assert_eq!(s.min(), Some(&rat(5, 12)));
        assert_eq!(s.max(), Some(&rat(19, 12)));
    }

    #[test]
    fn steenbrink_cusp() {
        let pairs = parse_pairs("3,2").unwrap();
        let cd = characteristic_data(&pairs);
        let dec = decorate(&pairs, &Limits::default()).unwrap();
        let s = spectrum_steenbrink(&dec, &cd).unwrap();
        assert_eq!(s, spec_of(&[(5, 6, 1), (7, 6, 1)]));
    }

    #[test]
    fn steenbrink_two_pairs() {
        let pairs = parse_pairs("3,2;1,2").unwrap();
        let cd = characteristic_data(&pairs);
        let dec = decorate(&pairs, &Limits::default()).unwrap();
        let s = spectrum_steenbrink(&dec, &cd).unwrap();
        assert_eq!(s, spectrum_enumeration(&cd));
        // the first rupture (m=12, neighbours 4,6,26) admits c = 5, 11
        let r = &dec.ruptures[0];
        let hits: Vec<u64> = (1..12)
            .filter(|&c| {
                let s: Int = r
                    .neighbor_mults
                    .iter()
                    .map(|mb| (int(c as i64) * mb) % &r.m0)
                    .sum();
                s == &r.m0 * int(2)
            })
            .collect();
        assert_eq!(hits, vec![5, 11]);
    }

    #[test]
    fn quasihomogeneous_examples() {
        let s = quasihomogeneous_spectrum(&[rat(1, 3), rat(1, 2)]).unwrap();
        assert_eq!(s, spec_of(&[(5, 6, 1), (7, 6, 1)]));
        let s = quasihomogeneous_spectrum(&[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(s, spec_of(&[(1, 1, 1)]));
        let s = quasihomogeneous_spectrum(&[rat(1, 3), rat(1, 3)]).unwrap();
        assert_eq!(s, spec_of(&[(2, 3, 1), (1, 1, 2), (4, 3, 1)]));
        assert!(quasihomogeneous_spectrum(&[rat(2, 5)]).is_err());
    }

    #[test]
    fn lemma42_examples() {
        assert!(lemma42_predicate(&rat(2, 3), &rat(1, 2), &rat(5, 6)).unwrap());
        assert!(!lemma42_predicate(&rat(1, 3), &rat(1, 2), &rat(7, 6)).unwrap());
        assert!(!lemma42_predicate(&rat(0, 1), &rat(1, 1), &rat(1, 1)).unwrap());
        assert!(lemma42_predicate(&rat(1, 2), &rat(1, 3), &rat(1, 5)).is_err());
    }

    #[test]
    fn symmetry_check() {
        assert!(check_symmetry(&spec_of(&[(5, 6, 1), (7, 6, 1)])));
        assert!(!check_symmetry(&spec_of(&[(5, 6, 2)])));
    }
}
