//! Exact rational arithmetic helpers.
//!
//! Every exponent, multiplicity ratio and variance in this crate is a
//! [`Rat`] (`num::BigRational`): a fraction over arbitrary-precision
//! integers, always stored in lowest terms with a positive denominator.
//! Floating point appears only in decimal annotations of reports.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from a big integer numerator and machine denominator.
pub fn rat_big(num: &Int, den: &Int) -> Rat {
    Rat::new(num.clone(), den.clone())
}

pub fn int(n: i64) -> Int {
    BigInt::from(n)
}

pub fn intu(n: u64) -> Int {
    BigInt::from(n)
}

/// Fractional part `x - floor(x)`, in `[0, 1)`.
pub fn frac(x: &Rat) -> Rat {
    x - x.floor()
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Canonical `"p/q"` string; integers render without the `/q` part.
pub fn rat_string(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Decimal approximation with `digits` significant digits, computed by
/// exact scaling (no float round-trip). Annotation only.
pub fn approx_string(x: &Rat, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    // find exponent e with 10^e <= a < 10^(e+1)
    let ten = BigInt::from(10);
    let mut e: i64 = 0;
    let one = Rat::one();
    let mut v = a.clone();
    if v >= one {
        while v >= Rat::from_integer(ten.clone()) {
            v /= Rat::from_integer(ten.clone());
            e += 1;
        }
    } else {
        while v < one {
            v *= Rat::from_integer(ten.clone());
            e -= 1;
        }
    }
    // round a * 10^(digits-1-e) to nearest integer
    let shift = digits as i64 - 1 - e;
    let scaled = if shift >= 0 {
        a * Rat::from_integer(ten.pow(shift as u32))
    } else {
        a / Rat::from_integer(ten.pow((-shift) as u32))
    };
    let mut mant = (scaled + rat(1, 2)).floor().to_integer();
    let mut digits_str = mant.to_string();
    // rounding may carry over to an extra digit
    if digits_str.len() as u32 > digits {
        mant /= &ten;
        e += 1;
        digits_str = mant.to_string();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= 0 && (e as usize) < digits_str.len() {
        out.push_str(&digits_str[..=e as usize]);
        let frac_part = &digits_str[e as usize + 1..];
        let frac_part = frac_part.trim_end_matches('0');
        if !frac_part.is_empty() {
            out.push('.');
            out.push_str(frac_part);
        }
    } else if e >= 0 {
        // integer with trailing zeros
        out.push_str(&digits_str);
        for _ in 0..(e as usize + 1 - digits_str.len()) {
            out.push('0');
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(digits_str.trim_end_matches('0'));
    }
    out
}

/// Sign-aware helper for report fields.
pub fn sign_of(x: &Rat) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_part() {
        assert_eq!(frac(&rat(7, 6)), rat(1, 6));
        assert_eq!(frac(&rat(-1, 6)), rat(5, 6));
        assert_eq!(frac(&rat(3, 1)), rat(0, 1));
    }

    #[test]
    fn strings() {
        assert_eq!(rat_string(&rat(5, 6)), "5/6");
        assert_eq!(rat_string(&rat(4, 2)), "2");
        assert_eq!(parse_rat("5/6"), Some(rat(5, 6)));
        assert_eq!(parse_rat("-7/2"), Some(rat(-7, 2)));
        assert_eq!(parse_rat("3"), Some(rat(3, 1)));
        assert_eq!(parse_rat("1/0"), None);
    }

    #[test]
    fn approx() {
        assert_eq!(approx_string(&rat(5, 6), 12), "0.833333333333");
        assert_eq!(approx_string(&rat(1, 3), 3), "0.333");
        assert_eq!(approx_string(&rat(2, 3), 3), "0.667");
        assert_eq!(approx_string(&rat(7, 1), 12), "7");
        assert_eq!(approx_string(&rat(-13, 12), 4), "-1.083");
        assert_eq!(approx_string(&rat(999, 1000), 2), "1");
        assert_eq!(approx_string(&rat(1, 200), 3), "0.005");
    }
}
