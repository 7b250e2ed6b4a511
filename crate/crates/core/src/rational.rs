//! Exact rationals and their `p/q` rendering.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub type Rational = BigRational;

/// `p / q` in lowest terms. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Always `p/q` with `q > 0`, including integers (`3/1`).
pub fn exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `p/q` form produced by [`exact`] (a bare integer is accepted).
pub fn parse_exact(s: &str) -> Option<Rational> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.trim().parse().ok()?;
    let q: BigInt = q.trim().parse().ok()?;
    (q != BigInt::from(0)).then(|| Rational::new(p, q))
}

/// Nearest `f64`; advisory only.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(exact(&ratio(6, 4)), "3/2");
        assert_eq!(exact(&ratio(3, -12)), "-1/4");
        assert_eq!(exact(&integer(3)), "3/1");
        assert_eq!(exact(&integer(0)), "0/1");
        assert_eq!(parse_exact("14/25"), Some(ratio(14, 25)));
        assert_eq!(parse_exact("7"), Some(integer(7)));
        assert_eq!(parse_exact("1/0"), None);
        assert!((approx(&ratio(9, 5)) - 1.8).abs() < 1e-12);
    }
}
