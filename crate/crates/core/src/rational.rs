//! Exact rational helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number used everywhere in the crate.
pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Renders `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Returns the value as an `i128` if it is an integer in range.
pub fn to_i128(x: &Q) -> Option<i128> {
    if !x.is_integer() {
        return None;
    }
    i128::try_from(x.numer()).ok()
}

pub fn is_nonnegative_integer(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Binomial coefficient as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `Σ Π factors` over each inner slice, normalised once at the end.
pub fn sum_of_products<'a, I>(terms: I) -> Q
where
    I: IntoIterator,
    I::Item: IntoIterator<Item = &'a Q>,
{
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for factors in terms {
        let (mut n, mut d) = (BigInt::one(), BigInt::one());
        for f in factors {
            n *= f.numer();
            d *= f.denom();
        }
        if d == den {
            num += n;
        } else {
            let g = den.gcd(&d);
            num = num * (&d / &g) + n * (&den / &g);
            den = den / g * d;
        }
    }
    Q::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_of_products() {
        let terms = [vec![frac(1, 2), frac(2, 3)], vec![frac(-5, 6), int(3)], vec![frac(7, 4)]];
        let naive: Q = terms.iter().map(|t| t.iter().product::<Q>()).sum();
        assert_eq!(sum_of_products(terms.iter().map(|t| t.iter())), naive);
        assert_eq!(sum_of_products(std::iter::empty::<[&Q; 0]>()), zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(24, 9), BigInt::from(1_307_504u64));
        assert_eq!(binomial(10, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_q(&frac(-21, 32)), "-21/32");
        assert_eq!(fmt_q(&frac(6, 3)), "2");
    }
}
