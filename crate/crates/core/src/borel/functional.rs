//! Divided differences as finite combinations of point evaluations.
//!
//! `∂_i F(p) = (F(p) − F(s_i p)) / α_i(p)`, so any composite `∂_{i1}⋯∂_{ik} F`
//! evaluated at a regular point is `Σ c_q F(q)` over points of the Weyl orbit.
//! The combination depends only on the Weyl group element, not on the word.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::lattice::{RootSystem, DIM};
use crate::rational::{sum_of_products, Q};
use crate::{Error, Result};

use super::action::{eval_linear, reflect_point, APPLY_LAST_LETTER_FIRST};

pub type Point = [Q; DIM];

/// The point `p` with `α(p) = ⟨α, ρ⟩` for every root, so no root vanishes on it.
pub fn regular_point(rs: &RootSystem) -> Point {
    rs.rho().dual_coords()
}

pub fn is_regular(rs: &RootSystem, p: &Point) -> bool {
    rs.roots().iter().all(|r| !eval_linear(r, p).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointFunctional {
    terms: BTreeMap<Point, Q>,
}

impl PointFunctional {
    /// The functional `F ↦ (∂_word F)(base)`, with the word oriented as in
    /// [`divided_diff_word`](super::action::divided_diff_word).
    pub fn new(rs: &RootSystem, word: &[usize], base: &Point) -> Result<Self> {
        // Outermost operator first.
        let outer: Vec<usize> = if APPLY_LAST_LETTER_FIRST {
            word.to_vec()
        } else {
            word.iter().rev().copied().collect()
        };
        match integral::build(rs, &outer, base)? {
            Some(f) => Ok(f),
            None => by_rationals(rs, &outer, base),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Point, &Q)> {
        self.terms.iter()
    }

    pub fn apply(&self, mut f: impl FnMut(&Point) -> Q) -> Q {
        let values: Vec<Q> = self.terms.keys().map(&mut f).collect();
        sum_of_products(self.terms.values().zip(&values).map(|(c, v)| [c, v]))
    }
}

fn by_rationals(rs: &RootSystem, outer: &[usize], base: &Point) -> Result<PointFunctional> {
    let mut cur: BTreeMap<Point, Q> = BTreeMap::from([(base.clone(), Q::from_integer(1.into()))]);
    for &i in outer {
        let root = rs.root(i)?;
        let mut next: BTreeMap<Point, Q> = BTreeMap::new();
        for (p, c) in cur {
            let a = eval_linear(root, &p);
            if a.is_zero() {
                return Err(singular());
            }
            let w = c / a;
            let q = reflect_point(rs, i, &p)?;
            *next.entry(q).or_insert_with(Q::zero) -= &w;
            *next.entry(p).or_insert_with(Q::zero) += w;
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    Ok(PointFunctional { terms: cur })
}

fn singular() -> Error {
    Error::Singular("evaluation point lies on a root hyperplane".into())
}

/// Fast path: the orbit of a suitably scaled base point is usually integral,
/// so points can be keyed by machine integers.
mod integral {
    use std::collections::HashMap;

    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::{Ratio, Rational64};
    use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

    use super::*;
    use crate::borel::action::shift;

    type IPoint = [i64; DIM];

    /// Coefficient arithmetic; `None` signals overflow.
    trait Coeff: Clone + Zero + One {
        fn div_root(&self, v: Rational64) -> Option<Self>;
        fn add_to(&mut self, other: &Self) -> Option<()>;
        fn sub_from(&mut self, other: &Self) -> Option<()>;
        fn into_q(self) -> Q;
    }

    macro_rules! machine_coeff {
        ($t:ty) => {
            impl Coeff for Ratio<$t> {
                fn div_root(&self, v: Rational64) -> Option<Self> {
                    self.checked_div(&Ratio::new(*v.numer() as $t, *v.denom() as $t))
                }
                fn add_to(&mut self, other: &Self) -> Option<()> {
                    *self = self.checked_add(other)?;
                    Some(())
                }
                fn sub_from(&mut self, other: &Self) -> Option<()> {
                    *self = self.checked_sub(other)?;
                    Some(())
                }
                fn into_q(self) -> Q {
                    // Already in lowest terms with a positive denominator.
                    Q::new_raw(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
                }
            }
        };
    }

    machine_coeff!(i64);
    machine_coeff!(i128);

    impl Coeff for Q {
        fn div_root(&self, v: Rational64) -> Option<Self> {
            Some(self / big(v))
        }
        fn add_to(&mut self, other: &Self) -> Option<()> {
            *self += other;
            Some(())
        }
        fn sub_from(&mut self, other: &Self) -> Option<()> {
            *self -= other;
            Some(())
        }
        fn into_q(self) -> Q {
            self
        }
    }

    fn small(q: &Q) -> Option<Rational64> {
        Some(Rational64::new(q.numer().to_i64()?, q.denom().to_i64()?))
    }

    fn big(r: Rational64) -> Q {
        Q::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
    }

    /// `None` when some orbit point leaves the scaled lattice.
    pub(super) fn build(rs: &RootSystem, outer: &[usize], base: &Point) -> Result<Option<PointFunctional>> {
        let mut scale: i64 = 1;
        for x in base {
            let Some(d) = x.denom().to_i64() else { return Ok(None) };
            scale = scale.lcm(&d);
        }
        // One retry with a doubled scale covers the half-integral orbits seen in practice.
        for _ in 0..2 {
            // Narrowest coefficient type first.
            let mut outcome = attempt::<Ratio<i64>>(rs, outer, base, scale)?;
            if let Attempt::Overflow = outcome {
                outcome = attempt::<Ratio<i128>>(rs, outer, base, scale)?;
            }
            if let Attempt::Overflow = outcome {
                outcome = attempt::<Q>(rs, outer, base, scale)?;
            }
            if let Attempt::Done(f) = outcome {
                return Ok(Some(f));
            }
            scale *= 2;
        }
        Ok(None)
    }

    enum Attempt {
        Done(PointFunctional),
        OffLattice,
        Overflow,
    }

    fn attempt<C: Coeff>(rs: &RootSystem, outer: &[usize], base: &Point, scale: i64) -> Result<Attempt> {
        let s = Rational64::from_integer(scale);
        let mut start = [0i64; DIM];
        for (j, x) in base.iter().enumerate() {
            let Some(v) = small(x).and_then(|v| v.checked_mul(&s)) else { return Ok(Attempt::Overflow) };
            if !v.is_integer() {
                return Ok(Attempt::OffLattice);
            }
            start[j] = v.to_integer();
        }
        let mut cur: HashMap<IPoint, C> = HashMap::from([(start, C::one())]);
        for &i in outer {
            let (Some(a), Some(g)) = (
                rs.root(i)?.coords().iter().map(small).collect::<Option<Vec<_>>>(),
                shift(rs, i)?.iter().map(small).collect::<Option<Vec<_>>>(),
            ) else {
                return Ok(Attempt::Overflow);
            };
            let mut next: HashMap<IPoint, C> = HashMap::with_capacity(2 * cur.len());
            for (p, c) in cur {
                let value: Rational64 = a.iter().zip(&p).map(|(x, &y)| x * y).sum();
                if value.is_zero() {
                    return Err(singular());
                }
                let mut q = p;
                for j in 0..DIM {
                    let v = Rational64::from_integer(p[j]) - g[j] * value;
                    if !v.is_integer() {
                        return Ok(Attempt::OffLattice);
                    }
                    q[j] = v.to_integer();
                }
                let Some(w) = c.div_root(value / s) else { return Ok(Attempt::Overflow) };
                if next.entry(q).or_insert_with(C::zero).sub_from(&w).is_none()
                    || next.entry(p).or_insert_with(C::zero).add_to(&w).is_none()
                {
                    return Ok(Attempt::Overflow);
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        // `p ↦ p / scale` is monotone, so sorting the integer keys sorts the points
        // and the map below is built from presorted input.
        let mut sorted: Vec<(IPoint, C)> = cur.into_iter().collect();
        sorted.sort_unstable_by_key(|(p, _)| *p);
        let coord = |x: i64| {
            let g = x.gcd(&scale);
            Q::new_raw(BigInt::from(x / g), BigInt::from(scale / g))
        };
        let terms = sorted
            .into_iter()
            .map(|(p, c)| (p.map(coord), c.into_q()))
            .collect();
        Ok(Attempt::Done(PointFunctional { terms }))
    }
}
