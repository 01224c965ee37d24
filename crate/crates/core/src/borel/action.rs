//! The Weyl group acting on polynomials, and divided differences.
//!
//! Variables are the coordinate functions of the lattice basis: `x1..x5`
//! for `ε1..ε5` and `x6` for the scaled sixth coordinate. A weight with
//! coordinates `c` is the linear polynomial `Σ c_j x_j`.

use num_traits::Zero;

use crate::lattice::{RootSystem, Weight, DIM};
use crate::rational::Q;
use crate::{Error, Result};

use super::poly::{Poly, NVARS};

/// Words are applied last letter first: for `[i1, …, ik]` the operator
/// `∂_{ik}` acts first. With words read from a node up to the top this
/// starts with the label adjacent to the highest weight.
pub const APPLY_LAST_LETTER_FIRST: bool = true;

pub fn linear_form(w: &Weight) -> Poly {
    Poly::linear(w.coords())
}

/// Pairings `⟨b_j, α_i⟩`, the direction of the Taylor expansion of `s_i`.
pub(crate) fn shift(rs: &RootSystem, i: usize) -> Result<[Q; NVARS]> {
    Ok(rs.root(i)?.dual_coords())
}

/// `s_i f`, the substitution `x_j ↦ x_j − ⟨b_j, α_i⟩ α_i`.
///
/// Computed as the finite Taylor sum `Σ_m (−α_i)^m / m! · D^m f`.
pub fn reflect_poly(rs: &RootSystem, i: usize, f: &Poly) -> Result<Poly> {
    let g = shift(rs, i)?;
    let neg_a = -&linear_form(rs.root(i)?);
    let Some(d) = f.degree() else {
        return Ok(Poly::zero());
    };
    // t[m] = D^m f / m!
    let mut t = vec![f.clone()];
    for m in 1..=d {
        let next = t[m - 1].directional(&g).scale(&Q::from_integer((m as i64).into()).recip());
        if next.is_zero() {
            break;
        }
        t.push(next);
    }
    let mut acc = t.pop().expect("at least f");
    while let Some(tm) = t.pop() {
        acc = &tm + &(&neg_a * &acc);
    }
    Ok(acc)
}

/// `∂_i f = (f − s_i f) / α_i`; a nonzero remainder is an error.
pub fn divided_diff(rs: &RootSystem, i: usize, f: &Poly) -> Result<Poly> {
    let diff = f - &reflect_poly(rs, i, f)?;
    if diff.is_zero() {
        return Ok(Poly::zero());
    }
    diff.div_linear(&linear_form(rs.root(i)?))
        .ok_or(Error::InexactDivision { root: i })
}

pub fn divided_diff_word(rs: &RootSystem, word: &[usize], f: &Poly) -> Result<Poly> {
    let mut acc = f.clone();
    let letters: Box<dyn Iterator<Item = &usize>> = if APPLY_LAST_LETTER_FIRST {
        Box::new(word.iter().rev())
    } else {
        Box::new(word.iter())
    };
    for &i in letters {
        if acc.is_zero() {
            break;
        }
        acc = divided_diff(rs, i, &acc)?;
    }
    Ok(acc)
}

/// Action of `s_i` on evaluation points: `(s_i f)(p) = f(reflect_point(i, p))`.
pub fn reflect_point(rs: &RootSystem, i: usize, p: &[Q; DIM]) -> Result<[Q; DIM]> {
    let g = shift(rs, i)?;
    let a = eval_linear(rs.root(i)?, p);
    Ok(std::array::from_fn(|j| &p[j] - &g[j] * &a))
}

pub fn eval_linear(w: &Weight, p: &[Q; DIM]) -> Q {
    w.coords()
        .iter()
        .zip(p)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, x)| c * x)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_e6;
    use crate::rational::{frac, int};

    fn x(j: usize) -> Poly {
        Poly::var(j)
    }

    fn sum_sq() -> Poly {
        (0..5).fold(Poly::zero(), |acc, j| &acc + &(&x(j) * &x(j)))
    }

    #[test]
    fn reflections_on_small_polynomials() {
        let rs = build_e6();
        let f = &x(1) * &x(2);
        assert_eq!(reflect_poly(&rs, 2, &f).unwrap(), f);
        let a6 = linear_form(rs.root(6).unwrap());
        assert_eq!(reflect_poly(&rs, 6, &a6).unwrap(), -&a6);
        let q = sum_sq();
        assert_ne!(reflect_poly(&rs, 6, &q).unwrap(), q);
        for j in 1..=5 {
            assert_eq!(reflect_poly(&rs, j, &q).unwrap(), q);
        }
        // s6 moves every εi by α6/2.
        let moved = reflect_poly(&rs, 6, &x(0)).unwrap();
        assert_eq!(moved, &x(0) + &a6.scale(&frac(1, 2)));
    }

    #[test]
    fn reflections_are_involutions() {
        let rs = build_e6();
        let f = &(&x(0) * &x(5)) + &(&x(2).pow(3) - &x(4));
        for i in 1..=6 {
            let once = reflect_poly(&rs, i, &f).unwrap();
            assert_eq!(reflect_poly(&rs, i, &once).unwrap(), f);
        }
    }

    #[test]
    fn divided_difference_examples() {
        let rs = build_e6();
        let w6 = linear_form(rs.omega(6).unwrap());
        assert_eq!(divided_diff(&rs, 6, &w6).unwrap(), Poly::one());
        assert_eq!(
            divided_diff(&rs, 1, &(&x(0) * &x(0))).unwrap(),
            &x(0) + &x(1)
        );
        assert!(divided_diff(&rs, 3, &sum_sq()).unwrap().is_zero());
        assert_eq!(divided_diff_word(&rs, &[], &w6).unwrap(), w6);
    }

    #[test]
    fn point_action_matches_substitution() {
        let rs = build_e6();
        let f = &(&x(0) * &x(5).pow(2)) + &(&x(3) * &x(4));
        let p = [int(3), frac(1, 2), int(-2), int(5), frac(7, 3), frac(-4, 5)];
        for i in 1..=6 {
            let lhs = reflect_poly(&rs, i, &f).unwrap().eval(&p);
            let rhs = f.eval(&reflect_point(&rs, i, &p).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn orientation_constant_is_pinned() {
        assert!(APPLY_LAST_LETTER_FIRST);
    }
}
