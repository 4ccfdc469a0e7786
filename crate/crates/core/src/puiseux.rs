//! Puiseux pairs: validation, derived weights, continued fractions and
//! the coordinate-inversion move.

use crate::error::{Error, Result};
use crate::rational::{int, intu, Int, Rat};
use num::{Integer, One, Zero};
use serde::Serialize;

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// The Puiseux pairs `(k_1,n_1),...,(k_g,n_g)` of an irreducible plane
/// curve branch, with the normalization `k_1 > n_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PuiseuxPairs {
    pairs: Vec<(u64, u64)>,
}

/// Pairs where `n_1 = 1` is allowed (integral leading term). Used only
/// for the coordinate inversion of the first pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifiedPuiseuxPairs {
    pairs: Vec<(u64, u64)>,
}

impl PuiseuxPairs {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyPairs);
        }
        for (idx, &(k, n)) in pairs.iter().enumerate() {
            let index = idx + 1;
            if k == 0 {
                return Err(Error::InvalidPair {
                    index,
                    reason: "k must be positive".into(),
                });
            }
            if n < 2 {
                return Err(Error::InvalidPair {
                    index,
                    reason: format!("n must be at least 2, got {n}"),
                });
            }
            if gcd(k, n) != 1 {
                return Err(Error::InvalidPair {
                    index,
                    reason: format!("gcd({k},{n})={} but pairs must be coprime", gcd(k, n)),
                });
            }
        }
        let (k1, n1) = pairs[0];
        if k1 <= n1 {
            return Err(Error::InvalidPair {
                index: 1,
                reason: format!("first pair needs k > n, got ({k1},{n1})"),
            });
        }
        Ok(PuiseuxPairs { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Number of pairs `g`.
    pub fn g(&self) -> usize {
        self.pairs.len()
    }

    pub fn to_modified(&self) -> ModifiedPuiseuxPairs {
        ModifiedPuiseuxPairs {
            pairs: self.pairs.clone(),
        }
    }

    /// Characteristic exponents `β_ν = Σ_{μ≤ν} k_μ/(n_1···n_μ)`,
    /// strictly increasing.
    pub fn characteristic_exponents(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.g());
        let mut beta = Rat::zero();
        let mut den = Int::one();
        for &(k, n) in &self.pairs {
            den *= intu(n);
            beta += Rat::new(intu(k), den.clone());
            out.push(beta.clone());
        }
        out
    }

    /// Canonical `"k1,n1;k2,n2"` text form.
    pub fn display(&self) -> String {
        self.pairs
            .iter()
            .map(|&(k, n)| format!("{k},{n}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl ModifiedPuiseuxPairs {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyPairs);
        }
        for (idx, &(k, n)) in pairs.iter().enumerate() {
            let index = idx + 1;
            if k == 0 || n == 0 {
                return Err(Error::InvalidPair {
                    index,
                    reason: "entries must be positive".into(),
                });
            }
            if idx > 0 && n < 2 {
                return Err(Error::InvalidPair {
                    index,
                    reason: format!("n must be at least 2 for pairs after the first, got {n}"),
                });
            }
            if gcd(k, n) != 1 {
                return Err(Error::InvalidPair {
                    index,
                    reason: format!("gcd({k},{n}) must be 1"),
                });
            }
        }
        Ok(ModifiedPuiseuxPairs { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Coordinate inversion `(x,y) -> (y,x)`: swaps the first pair and
    /// leaves the rest unchanged. An involution.
    pub fn invert(&self) -> ModifiedPuiseuxPairs {
        let mut pairs = self.pairs.clone();
        let (k1, n1) = pairs[0];
        pairs[0] = (n1, k1);
        ModifiedPuiseuxPairs { pairs }
    }
}

/// Parse `"k1,n1;k2,n2;..."` into validated pairs.
pub fn parse_pairs(text: &str) -> Result<PuiseuxPairs> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyPairs);
    }
    let mut pairs = Vec::new();
    for (idx, chunk) in text.split(';').enumerate() {
        let index = idx + 1;
        let mut it = chunk.split(',');
        let k = it.next().map(str::trim).unwrap_or("");
        let n = it.next().map(str::trim);
        if n.is_none() || it.next().is_some() {
            return Err(Error::Syntax(format!(
                "pair #{index} must be \"k,n\", got \"{chunk}\""
            )));
        }
        let k: u64 = k
            .parse()
            .map_err(|_| Error::Syntax(format!("pair #{index}: bad integer \"{k}\"")))?;
        let n_str = n.unwrap();
        let n: u64 = n_str
            .parse()
            .map_err(|_| Error::Syntax(format!("pair #{index}: bad integer \"{n_str}\"")))?;
        pairs.push((k, n));
    }
    PuiseuxPairs::new(pairs)
}

/// Reconstruct pairs from their characteristic exponents. Exact inverse
/// of [`PuiseuxPairs::characteristic_exponents`].
pub fn pairs_from_exponents(exponents: &[Rat]) -> Result<PuiseuxPairs> {
    if exponents.is_empty() {
        return Err(Error::EmptyPairs);
    }
    let mut pairs = Vec::new();
    let mut prev = Rat::zero();
    let mut den = Int::one();
    for (idx, beta) in exponents.iter().enumerate() {
        let index = idx + 1;
        let step = beta - &prev;
        if step <= Rat::zero() {
            return Err(Error::InvalidInput(format!(
                "exponent #{index} does not increase"
            )));
        }
        // step = k_ν / (n_1···n_ν), so step * n_1···n_{ν-1} = k_ν/n_ν
        // in lowest terms.
        let t = &step * Rat::from_integer(den.clone());
        let k: u64 = t.numer().try_into().map_err(|_| {
            Error::InvalidInput(format!("exponent #{index} yields an oversized numerator"))
        })?;
        let n: u64 = t.denom().try_into().map_err(|_| {
            Error::InvalidInput(format!("exponent #{index} yields an oversized denominator"))
        })?;
        pairs.push((k, n));
        den *= intu(n);
        prev = beta.clone();
    }
    PuiseuxPairs::new(pairs)
}

/// Euclidean continued fraction of `k/n` with quotients `a_1..a_h`,
/// remainders `r_0..r_{h+1}` and convergents `(P_i, Q_i)`.
///
/// `a_1 = 0` when `k < n`; the final quotient is not normalized.
#[derive(Debug, Clone)]
pub struct ContinuedFraction {
    pub k: u64,
    pub n: u64,
    /// Partial quotients `a_1..a_h`.
    pub a: Vec<u64>,
    /// Remainders `r_0..r_{h+1}` with `r_0 = k`, `r_1 = n`, `r_h = 1`.
    pub r: Vec<u64>,
    /// Convergents `(P_i, Q_i)` for `i = -1..h`, stored at `i + 1`.
    pub conv: Vec<(Int, Int)>,
}

impl ContinuedFraction {
    pub fn h(&self) -> usize {
        self.a.len()
    }

    /// `(P_i, Q_i)` for `i` in `-1..=h`.
    pub fn convergent(&self, i: isize) -> (&Int, &Int) {
        let (p, q) = &self.conv[(i + 1) as usize];
        (p, q)
    }
}

/// Continued fraction expansion of `k/n` by the Euclidean algorithm.
pub fn continued_fraction(k: u64, n: u64) -> Result<ContinuedFraction> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "continued fraction needs n >= 2, got ({k},{n})"
        )));
    }
    if k == 0 || gcd(k, n) != 1 {
        return Err(Error::InvalidInput(format!(
            "continued fraction needs coprime positive (k,n), got ({k},{n})"
        )));
    }
    let mut r = vec![k, n];
    let mut a = Vec::new();
    let mut conv: Vec<(Int, Int)> = vec![(int(0), int(1)), (int(1), int(0))];
    let mut i = 1usize;
    loop {
        let prev = r[i - 1];
        let cur = r[i];
        let q = prev / cur;
        a.push(q);
        r.push(prev - q * cur);
        let (p2, q2) = conv[conv.len() - 2].clone();
        let (p1, q1) = conv[conv.len() - 1].clone();
        conv.push((intu(q) * &p1 + p2, intu(q) * &q1 + q2));
        if *r.last().unwrap() == 0 {
            break;
        }
        i += 1;
    }
    debug_assert_eq!(r[r.len() - 2], 1);
    let cf = ContinuedFraction { k, n, a, r, conv };
    debug_assert_eq!(cf.convergent(cf.h() as isize).0, &intu(k));
    debug_assert_eq!(cf.convergent(cf.h() as isize).1, &intu(n));
    Ok(cf)
}

/// Derived data of a pair list: weights `w_ν`, cofactors
/// `n'_ν = n_{ν+1}···n_g`, stage Milnor numbers, the Milnor number `μ`
/// and the smallest exponent `α_1`.
#[derive(Debug, Clone)]
pub struct CharacteristicData {
    pub pairs: PuiseuxPairs,
    /// `w_1..w_g` with `w_1 = k_1`, `w_ν = w_{ν-1} n_{ν-1} n_ν + k_ν`.
    pub w: Vec<Int>,
    /// `n'_0..n'_g`; `n'_0 = n_1···n_g`, `n'_g = 1`.
    pub nprime: Vec<Int>,
    /// Per-stage Milnor numbers `μ^(ν) = (w_ν - 1)(n_ν - 1) n'_ν`.
    pub mu_stage: Vec<Int>,
    pub mu: Int,
    /// Smallest exponent `(k_1 + n_1)/(k_1 n'_0)`.
    pub alpha1: Rat,
}

/// Compute all derived characteristic data of a pair list.
pub fn characteristic_data(pairs: &PuiseuxPairs) -> CharacteristicData {
    let ps = pairs.pairs();
    let g = ps.len();

    let mut w: Vec<Int> = Vec::with_capacity(g);
    for (idx, &(k, _)) in ps.iter().enumerate() {
        if idx == 0 {
            w.push(intu(k));
        } else {
            let (_, n_prev) = ps[idx - 1];
            let (_, n_cur) = ps[idx];
            w.push(&w[idx - 1] * intu(n_prev) * intu(n_cur) + intu(k));
        }
    }

    let mut nprime: Vec<Int> = vec![Int::one(); g + 1];
    for nu in (0..g).rev() {
        nprime[nu] = &nprime[nu + 1] * intu(ps[nu].1);
    }

    let mut mu_stage = Vec::with_capacity(g);
    let mut mu = Int::zero();
    for nu in 0..g {
        let m = (&w[nu] - 1) * intu(ps[nu].1 - 1) * &nprime[nu + 1];
        mu += &m;
        mu_stage.push(m);
    }

    let (k1, n1) = ps[0];
    let alpha1 = Rat::new(intu(k1 + n1), intu(k1) * &nprime[0]);

    for nu in 0..g {
        debug_assert!(w[nu].gcd(&intu(ps[nu].1)).is_one());
    }
    // Partial-sum identity for the stage Milnor numbers (n_0 = 0).
    for j in 1..=g {
        let lhs: Int = mu_stage[..j].iter().sum();
        let mut rhs = (&w[j - 1] - 1) * &nprime[j - 1];
        for nu in 1..=j {
            let n_prev = if nu == 1 { 0 } else { ps[nu - 2].1 };
            let (k, n) = ps[nu - 1];
            rhs -= intu(k + n_prev * n - 1) * &nprime[nu];
        }
        assert_eq!(lhs, rhs, "stage Milnor partial-sum identity failed");
    }
    // w_g n_g = Σ k_ν n'_{ν-1} n'_ν.
    let lhs = &w[g - 1] * intu(ps[g - 1].1);
    let rhs: Int = (0..g)
        .map(|nu| intu(ps[nu].0) * &nprime[nu] * &nprime[nu + 1])
        .sum();
    assert_eq!(lhs, rhs, "weight product identity failed");

    CharacteristicData {
        pairs: pairs.clone(),
        w,
        nprime,
        mu_stage,
        mu,
        alpha1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn parse_basic() {
        assert_eq!(parse_pairs("3,2").unwrap().pairs(), &[(3, 2)]);
        assert_eq!(parse_pairs("3,2;1,2").unwrap().pairs(), &[(3, 2), (1, 2)]);
        assert_eq!(parse_pairs(" 3 , 2 ; 1 , 2 ").unwrap().pairs(), &[(3, 2), (1, 2)]);
    }

    #[test]
    fn parse_errors() {
        match parse_pairs("4,2") {
            Err(Error::InvalidPair { index: 1, reason }) => assert!(reason.contains("gcd(4,2)=2")),
            other => panic!("expected gcd error, got {other:?}"),
        }
        assert!(matches!(parse_pairs(""), Err(Error::EmptyPairs)));
        assert!(matches!(parse_pairs("3,2;x,2"), Err(Error::Syntax(_))));
        assert!(matches!(parse_pairs("3"), Err(Error::Syntax(_))));
        assert!(matches!(parse_pairs("3,2,5"), Err(Error::Syntax(_))));
        assert!(matches!(
            parse_pairs("1,2"),
            Err(Error::InvalidPair { index: 1, .. })
        ));
        assert!(matches!(
            parse_pairs("3,1"),
            Err(Error::InvalidPair { index: 1, .. })
        ));
        assert!(matches!(
            parse_pairs("3,2;2,4"),
            Err(Error::InvalidPair { index: 2, .. })
        ));
    }

    #[test]
    fn characteristic_data_cusp() {
        let cd = characteristic_data(&parse_pairs("3,2").unwrap());
        assert_eq!(cd.w, vec![int(3)]);
        assert_eq!(cd.nprime, vec![int(2), int(1)]);
        assert_eq!(cd.mu, int(2));
        assert_eq!(cd.alpha1, rat(5, 6));
    }

    #[test]
    fn characteristic_data_two_pairs() {
        let cd = characteristic_data(&parse_pairs("3,2;1,2").unwrap());
        assert_eq!(cd.w, vec![int(3), int(13)]);
        assert_eq!(cd.nprime, vec![int(4), int(2), int(1)]);
        assert_eq!(cd.mu_stage, vec![int(4), int(12)]);
        assert_eq!(cd.mu, int(16));
        assert_eq!(cd.alpha1, rat(5, 12));
    }

    #[test]
    fn characteristic_data_52() {
        let cd = characteristic_data(&parse_pairs("5,2").unwrap());
        assert_eq!(cd.w, vec![int(5)]);
        assert_eq!(cd.mu, int(4));
        assert_eq!(cd.alpha1, rat(7, 10));
    }

    #[test]
    fn cf_examples() {
        let cf = continued_fraction(7, 2).unwrap();
        assert_eq!(cf.a, vec![3, 2]);
        assert_eq!(cf.r, vec![7, 2, 1, 0]);
        assert_eq!(cf.convergent(2), (&int(7), &int(2)));

        let cf = continued_fraction(1, 3).unwrap();
        assert_eq!(cf.h(), 2);
        assert_eq!(cf.a, vec![0, 3]);
        assert_eq!(cf.r, vec![1, 3, 1, 0]);

        let cf = continued_fraction(3, 2).unwrap();
        assert_eq!(cf.a, vec![1, 2]);
        assert_eq!(cf.r, vec![3, 2, 1, 0]);
        assert_eq!(cf.convergent(1), (&int(1), &int(1)));
        assert_eq!(cf.convergent(2), (&int(3), &int(2)));
    }

    #[test]
    fn cf_errors() {
        assert!(continued_fraction(4, 2).is_err());
        assert!(continued_fraction(3, 1).is_err());
    }

    #[test]
    fn cf_determinant_identity() {
        for (k, n) in [(3u64, 2u64), (7, 2), (1, 3), (22, 7), (101, 37)] {
            let cf = continued_fraction(k, n).unwrap();
            for i in 0..=cf.h() as isize {
                let (p, q) = cf.convergent(i);
                let (pp, pq) = cf.convergent(i - 1);
                let det = p * pq - pp * q;
                let expect = if i % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(det, expect);
            }
        }
    }

    #[test]
    fn exponents_ladder() {
        let p = parse_pairs("3,2").unwrap();
        assert_eq!(p.characteristic_exponents(), vec![rat(3, 2)]);
        let p = parse_pairs("3,2;1,2").unwrap();
        assert_eq!(p.characteristic_exponents(), vec![rat(3, 2), rat(7, 4)]);
    }

    #[test]
    fn exponents_round_trip() {
        let p = pairs_from_exponents(&[rat(3, 2), rat(7, 4)]).unwrap();
        assert_eq!(p.pairs(), &[(3, 2), (1, 2)]);
        // lowest-terms denominators need not be the full products
        let p = parse_pairs("3,2;1,3").unwrap();
        let exps = p.characteristic_exponents();
        assert_eq!(exps, vec![rat(3, 2), rat(5, 3)]);
        assert_eq!(pairs_from_exponents(&exps).unwrap(), p);
    }

    #[test]
    fn exponents_not_realizable() {
        assert!(pairs_from_exponents(&[rat(3, 2), rat(4, 3)]).is_err());
        assert!(pairs_from_exponents(&[rat(1, 2)]).is_err());
    }

    #[test]
    fn invert_involution() {
        let p = parse_pairs("3,2;1,2").unwrap().to_modified();
        let inv = p.invert();
        assert_eq!(inv.pairs(), &[(2, 3), (1, 2)]);
        assert_eq!(inv.invert(), p);
        let p = parse_pairs("3,2").unwrap().to_modified();
        assert_eq!(p.invert().pairs(), &[(2, 3)]);
    }
}
