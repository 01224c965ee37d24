//! Fundamental invariants of the Levi Weyl group `W(D5)`.

use std::collections::BTreeMap;

use crate::lattice::RootSystem;
use crate::rational::{frac, Q};
use crate::Result;

use super::action::{linear_form, reflect_poly};
use super::poly::{Monomial, Poly, NVARS};

/// Generators of the invariant ring, used as variables of a [`GeneratorPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    H,
    E2,
    E4,
    E5,
    E6,
    E8,
}

impl Invariant {
    pub const ALL: [Invariant; NVARS] = [Self::H, Self::E2, Self::E4, Self::E5, Self::E6, Self::E8];

    pub const WEIGHTS: [usize; NVARS] = [1, 2, 4, 5, 6, 8];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn degree(self) -> usize {
        Self::WEIGHTS[self.index()]
    }

    pub fn name(self) -> &'static str {
        ["H", "e2", "e4", "e5", "e6", "e8"][self.index()]
    }
}

/// A polynomial in `H, e2, e4, e5, e6, e8` (weights 1, 2, 4, 5, 6, 8).
pub type GeneratorPoly = Poly;

pub fn generator(g: Invariant) -> GeneratorPoly {
    Poly::var(g.index())
}

pub fn render_generator_poly(p: &GeneratorPoly) -> String {
    p.render(&["H", "e2", "e4", "e5", "e6", "e8"])
}

/// `e_{2i}` in the squares of `ε1..ε5`, `e5 = ε1⋯ε5`, and `H` the linear form of `ω6`.
#[derive(Clone, Debug)]
pub struct InvariantGenerators {
    pub h: Poly,
    pub e2: Poly,
    pub e4: Poly,
    pub e5: Poly,
    pub e6: Poly,
    pub e8: Poly,
}

impl InvariantGenerators {
    pub fn new(rs: &RootSystem, highest_index: usize) -> Result<Self> {
        let h = linear_form(rs.omega(highest_index)?);
        let sym = |k: usize| elementary_in_squares(k);
        let e5 = Poly::from_terms([(Monomial([1, 1, 1, 1, 1, 0]), Q::from_integer(1.into()))]);
        Ok(Self {
            h,
            e2: sym(1),
            e4: sym(2),
            e5,
            e6: sym(3),
            e8: sym(4),
        })
    }

    pub fn get(&self, g: Invariant) -> &Poly {
        match g {
            Invariant::H => &self.h,
            Invariant::E2 => &self.e2,
            Invariant::E4 => &self.e4,
            Invariant::E5 => &self.e5,
            Invariant::E6 => &self.e6,
            Invariant::E8 => &self.e8,
        }
    }

    /// `e10 = e5²`, the top elementary symmetric function of the squares.
    pub fn e10(&self) -> Poly {
        &self.e5 * &self.e5
    }

    /// Images of the six generator variables, for substitution.
    pub fn images(&self) -> [Poly; NVARS] {
        Invariant::ALL.map(|g| self.get(g).clone())
    }

    /// Expands a generator polynomial into the lattice coordinates.
    pub fn to_poly(&self, p: &GeneratorPoly) -> Poly {
        p.substitute(&self.images())
    }

    /// Values of the generators at a point.
    pub fn values_at(&self, p: &[Q; NVARS]) -> [Q; NVARS] {
        let sq: Vec<Q> = p[..5].iter().map(|x| x * x).collect();
        // Elementary symmetric functions of the squares by the usual recurrence.
        let mut e = vec![Q::from_integer(1.into()); 1];
        e.resize(6, Q::from_integer(0.into()));
        for s in &sq {
            for k in (1..=5).rev() {
                let add = &e[k - 1] * s;
                e[k] += add;
            }
        }
        let e5: Q = p[..5].iter().product();
        [
            self.h.eval(p),
            e[1].clone(),
            e[2].clone(),
            e5,
            e[3].clone(),
            e[4].clone(),
        ]
    }
}

/// `c_k(ε1², …, ε5²)`.
fn elementary_in_squares(k: usize) -> Poly {
    let mut out = Poly::zero();
    for mask in 0u32..32 {
        if mask.count_ones() as usize != k {
            continue;
        }
        let e: [u8; NVARS] = std::array::from_fn(|j| if j < 5 && mask & (1 << j) != 0 { 2 } else { 0 });
        out.add_term(Monomial(e), Q::from_integer(1.into()));
    }
    out
}

/// `Σ x_j² + x6²/3`, the Casimir quadric: invariant under the full Weyl group.
pub fn quadratic_w_invariant() -> Poly {
    let mut out = Poly::zero();
    for j in 0..NVARS {
        let mut e = [0; NVARS];
        e[j] = 2;
        out.add_term(Monomial(e), if j == 5 { frac(1, 3) } else { frac(1, 1) });
    }
    out
}

/// Indices of the simple reflections fixing the highest weight.
pub fn levi_indices(rs: &RootSystem, highest_index: usize) -> Vec<usize> {
    (1..=rs.rank()).filter(|&i| i != highest_index).collect()
}

/// First simple reflection (1-based) among `indices` that moves `f`, if any.
pub fn first_moving_reflection(rs: &RootSystem, indices: &[usize], f: &Poly) -> Result<Option<usize>> {
    for &i in indices {
        if reflect_poly(rs, i, f)? != *f {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Exponent-sorted view of a generator polynomial's weighted components.
pub fn generator_components(p: &GeneratorPoly) -> BTreeMap<usize, GeneratorPoly> {
    p.graded_parts(&Invariant::WEIGHTS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_e6;
    use crate::rational::int;

    #[test]
    fn generators_are_levi_invariant() {
        let rs = build_e6();
        let g = InvariantGenerators::new(&rs, 6).unwrap();
        for f in [&g.e2, &g.e4, &g.e5, &g.e6, &g.e8] {
            assert!(first_moving_reflection(&rs, &[1, 2, 3, 4, 5], f).unwrap().is_none());
            assert!(reflect_poly(&rs, 6, f).unwrap() != *f);
        }
        assert_eq!(g.e2.num_terms(), 5);
        assert_eq!(g.e8.degree(), Some(8));
        assert_eq!(g.e10(), elementary_in_squares(5));
    }

    #[test]
    fn sign_flip_on_e5() {
        // Flipping one coordinate is not in W(D5) and negates e5.
        let g = InvariantGenerators::new(&build_e6(), 6).unwrap();
        let mut images: [Poly; NVARS] = std::array::from_fn(Poly::var);
        images[0] = -&Poly::var(0);
        assert_eq!(g.e5.substitute(&images), -&g.e5);
        images[1] = -&Poly::var(1);
        assert_eq!(g.e5.substitute(&images), g.e5);
    }

    #[test]
    fn casimir_is_w_invariant() {
        let rs = build_e6();
        let q = quadratic_w_invariant();
        assert!(first_moving_reflection(&rs, &[1, 2, 3, 4, 5, 6], &q).unwrap().is_none());
    }

    #[test]
    fn generator_values_agree_with_polynomials() {
        let g = InvariantGenerators::new(&build_e6(), 6).unwrap();
        let p = [int(2), int(-3), frac(1, 2), int(5), frac(2, 7), int(9)];
        let vals = g.values_at(&p);
        for inv in Invariant::ALL {
            assert_eq!(vals[inv.index()], g.get(inv).eval(&p), "{}", inv.name());
        }
    }
}
