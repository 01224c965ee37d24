//! The E6 weight lattice in rational `ε`-coordinates.
//!
//! A weight is `c1 ε1 + ... + c5 ε5 + u √3 ε6`. Storing the sixth coordinate
//! pre-divided by `√3` keeps every coordinate rational; the inner product
//! carries the compensating factor 3 on the last slot.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::linalg::{self, Matrix};
use crate::rational::{fmt_q, frac, int, Q};
use crate::{Error, Result};

/// Number of coordinates of the ambient space.
pub const DIM: usize = 6;

/// Gram weights of the coordinate basis `ε1..ε5, √3 ε6`.
const GRAM: [i64; DIM] = [1, 1, 1, 1, 1, 3];

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: [Q; DIM],
}

impl Weight {
    pub fn new(coords: [Q; DIM]) -> Self {
        Self { coords }
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| Q::zero()))
    }

    /// `Σ c_i ε_i + u √3 ε6`.
    pub fn from_parts(c: [Q; 5], u: Q) -> Self {
        let [a, b, c3, d, e] = c;
        Self::new([a, b, c3, d, e, u])
    }

    /// Unit vector on coordinate `j` (0-based; index 5 is `√3 ε6`).
    pub fn basis(j: usize) -> Self {
        let mut w = Self::zero();
        w.coords[j] = int(1);
        w
    }

    pub fn coords(&self) -> &[Q; DIM] {
        &self.coords
    }

    /// Coefficient on `ε1..ε5`.
    pub fn eps(&self, i: usize) -> &Q {
        &self.coords[i]
    }

    /// Coefficient of `ε6` divided by `√3`.
    pub fn u(&self) -> &Q {
        &self.coords[5]
    }

    pub fn inner(&self, other: &Weight) -> Q {
        self.coords
            .iter()
            .zip(&other.coords)
            .zip(GRAM)
            .map(|((a, b), g)| a * b * int(g))
            .sum()
    }

    pub fn norm2(&self) -> Q {
        self.inner(self)
    }

    pub fn scale(&self, k: &Q) -> Weight {
        Weight::new(std::array::from_fn(|i| &self.coords[i] * k))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Coordinates paired against the Gram matrix, i.e. `⟨self, b_j⟩` for each basis vector.
    pub fn dual_coords(&self) -> [Q; DIM] {
        std::array::from_fn(|j| &self.coords[j] * int(GRAM[j]))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::new(std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]))
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight::new(std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]))
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(std::array::from_fn(|i| -&self.coords[i]))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords[..5].iter().map(fmt_q).collect();
        write!(f, "({}; u={})", parts.join(", "), fmt_q(&self.coords[5]))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(fmt_q).collect();
        v.serialize(s)
    }
}

/// A simply-laced root system realised inside the six-dimensional space.
///
/// Indices exposed to callers are 1-based, matching the usual labelling of
/// simple roots; vectors are stored 0-based.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub name: &'static str,
    pub simple_roots: Vec<Weight>,
    pub fundamental_weights: Vec<Weight>,
    pub cartan: Vec<Vec<i64>>,
}

/// The six simple roots of E6 with the D5 subsystem on `α1..α5`.
///
/// `α4 = ε4 − ε5` and `α5 = ε4 + ε5` both attach to `α3`; `α6` hangs off `α5`.
pub fn e6_simple_roots() -> Vec<Weight> {
    let h = frac(-1, 2);
    let e = |v: [i64; 5]| Weight::from_parts(v.map(int), int(0));
    vec![
        e([1, -1, 0, 0, 0]),
        e([0, 1, -1, 0, 0]),
        e([0, 0, 1, -1, 0]),
        e([0, 0, 0, 1, -1]),
        e([0, 0, 0, 1, 1]),
        Weight::from_parts(std::array::from_fn(|_| h.clone()), frac(1, 2)),
    ]
}

/// The fundamental weights as printed in the classical reference table.
///
/// Kept only for comparison: `ω1..ω4` agree with the dual basis, while the
/// printed `ω5` and `ω6` do not satisfy `⟨ω_i, α_j⟩ = δ_ij`.
pub fn printed_fundamental_weights() -> Vec<Weight> {
    let h = frac(1, 2);
    let w = |c: [Q; 5], u: Q| Weight::from_parts(c, u);
    // a/√3 ε6 = (a/3) √3 ε6, and (√3/2) ε6 = (1/2) √3 ε6.
    vec![
        w([int(1), int(0), int(0), int(0), int(0)], frac(1, 3)),
        w([int(1), int(1), int(0), int(0), int(0)], frac(2, 3)),
        w([int(1), int(1), int(1), int(0), int(0)], int(1)),
        w(
            [h.clone(), h.clone(), h.clone(), h.clone(), -h.clone()],
            frac(1, 2),
        ),
        w(std::array::from_fn(|_| h.clone()), frac(5, 3)),
        w(std::array::from_fn(|_| -h.clone()), frac(1, 2)),
    ]
}

impl RootSystem {
    /// Builds a root system from simple roots; the fundamental weights are the
    /// dual basis inside the span of the roots.
    pub fn from_simple_roots(name: &'static str, simple_roots: Vec<Weight>) -> Result<Self> {
        let r = simple_roots.len();
        let gram: Matrix = simple_roots
            .iter()
            .map(|a| simple_roots.iter().map(|b| a.inner(b)).collect())
            .collect();
        let cartan = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| i64::try_from(x.numer()).expect("Cartan entries are small integers"))
                    .collect()
            })
            .collect();
        // ω_i = Σ_k M_ik α_k with G M^T = I.
        let mut fundamental_weights = Vec::with_capacity(r);
        for i in 0..r {
            let rhs: Vec<Q> = (0..r).map(|j| int((i == j) as i64)).collect();
            let m = linalg::solve_unique(&gram, &rhs)?;
            let w = simple_roots
                .iter()
                .zip(&m)
                .fold(Weight::zero(), |acc, (a, c)| &acc + &a.scale(c));
            fundamental_weights.push(w);
        }
        Ok(Self {
            name,
            simple_roots,
            fundamental_weights,
            cartan,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    fn check_index(&self, i: usize) -> Result<usize> {
        if (1..=self.rank()).contains(&i) {
            Ok(i - 1)
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// Simple root `α_i`, 1-based.
    pub fn root(&self, i: usize) -> Result<&Weight> {
        Ok(&self.simple_roots[self.check_index(i)?])
    }

    /// Fundamental weight `ω_i`, 1-based.
    pub fn omega(&self, i: usize) -> Result<&Weight> {
        Ok(&self.fundamental_weights[self.check_index(i)?])
    }

    /// `s_i(w) = w − ⟨w, α_i⟩ α_i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Result<Weight> {
        let a = self.root(i)?;
        Ok(w - &a.scale(&w.inner(a)))
    }

    /// `⟨w, α_i⟩` for every simple root.
    pub fn pairings(&self, w: &Weight) -> Vec<Q> {
        self.simple_roots.iter().map(|a| w.inner(a)).collect()
    }

    pub fn rho(&self) -> Weight {
        self.fundamental_weights
            .iter()
            .fold(Weight::zero(), |acc, w| &acc + w)
    }

    /// `⟨ρ, w⟩`, the sum of the simple-root coordinates of `w`.
    pub fn height(&self, w: &Weight) -> Q {
        self.rho().inner(w)
    }

    /// All roots, generated as the Weyl orbit of the simple roots.
    pub fn roots(&self) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = self.simple_roots.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = self.simple_roots.iter().cloned().collect();
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let v = self.reflect(i, &w).expect("index in range");
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        let mut all: Vec<Weight> = seen.into_iter().collect();
        all.sort();
        all
    }

    /// A reduced word for the longest element, listed in order of application.
    pub fn longest_element_word(&self) -> Vec<usize> {
        let mut v = self.rho();
        let mut word = Vec::new();
        while let Some(i) = (1..=self.rank()).find(|&i| self.root(i).unwrap().inner(&v).is_positive()) {
            v = self.reflect(i, &v).unwrap();
            word.push(i);
        }
        word
    }

    /// Applies the longest element to `w`.
    pub fn longest_element(&self, w: &Weight) -> Weight {
        self.longest_element_word()
            .into_iter()
            .fold(w.clone(), |acc, i| self.reflect(i, &acc).unwrap())
    }
}

/// The E6 root system with the simple-root numbering used throughout the crate.
pub fn build_e6() -> RootSystem {
    RootSystem::from_simple_roots("E6", e6_simple_roots()).expect("E6 Gram matrix is nonsingular")
}

/// The D5 subsystem spanned by `α1..α5`.
pub fn build_d5() -> RootSystem {
    let mut roots = e6_simple_roots();
    roots.truncate(5);
    RootSystem::from_simple_roots("D5", roots).expect("D5 Gram matrix is nonsingular")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots_have_norm_two() {
        let rs = build_e6();
        for a in &rs.simple_roots {
            assert_eq!(a.norm2(), int(2));
        }
        // α6: 5/4 from the ε-part, 3 * 1/4 from the last slot.
        let a6 = rs.root(6).unwrap();
        assert_eq!(a6.norm2(), frac(5, 4) + frac(3, 4));
    }

    #[test]
    fn cartan_matrix_is_e6() {
        let rs = build_e6();
        assert_eq!(rs.cartan[0], vec![2, -1, 0, 0, 0, 0]);
        let mut edges = Vec::new();
        for i in 0..6 {
            assert_eq!(rs.cartan[i][i], 2);
            for j in i + 1..6 {
                assert!(matches!(rs.cartan[i][j], 0 | -1));
                assert_eq!(rs.cartan[i][j], rs.cartan[j][i]);
                if rs.cartan[i][j] == -1 {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        // chain 1-2-3-5-6 with 4 attached to 3
        assert_eq!(edges, vec![(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)]);
    }

    #[test]
    fn fundamental_weights_are_dual() {
        let rs = build_e6();
        for (i, w) in rs.fundamental_weights.iter().enumerate() {
            for (j, a) in rs.simple_roots.iter().enumerate() {
                assert_eq!(w.inner(a), int((i == j) as i64));
            }
        }
        let zero5 = || std::array::from_fn(|_| int(0));
        assert_eq!(rs.omega(6).unwrap(), &Weight::from_parts(zero5(), frac(2, 3)));
    }

    #[test]
    fn printed_weights_partly_agree() {
        let rs = build_e6();
        let printed = printed_fundamental_weights();
        for i in 0..4 {
            assert_eq!(&printed[i], &rs.fundamental_weights[i], "ω{}", i + 1);
        }
        assert_ne!(printed[4], rs.fundamental_weights[4]);
        // the printed ω6 coincides with α6
        assert_eq!(&printed[5], rs.root(6).unwrap());
        // ω1 = ε1 + ω6 / 2
        let w1 = &Weight::basis(0) + &rs.omega(6).unwrap().scale(&frac(1, 2));
        assert_eq!(&w1, rs.omega(1).unwrap());
    }

    #[test]
    fn reflections_on_epsilons() {
        let rs = build_e6();
        let e = Weight::basis;
        assert_eq!(rs.reflect(1, &e(0)).unwrap(), e(1));
        assert_eq!(rs.reflect(5, &e(3)).unwrap(), -&e(4));
        let a6 = rs.root(6).unwrap().clone();
        assert_eq!(rs.reflect(6, &a6).unwrap(), -&a6);
        // s6 ε_i = ε_i + α6 / 2
        assert_eq!(
            rs.reflect(6, &e(2)).unwrap(),
            &e(2) + &a6.scale(&frac(1, 2))
        );
        assert!(matches!(
            rs.reflect(7, &a6),
            Err(Error::IndexOutOfRange { index: 7, rank: 6 })
        ));
        assert!(rs.reflect(0, &a6).is_err());
    }

    #[test]
    fn heights() {
        let rs = build_e6();
        let w6 = rs.omega(6).unwrap().clone();
        let s6w6 = rs.reflect(6, &w6).unwrap();
        assert_eq!(rs.height(&w6) - rs.height(&s6w6), int(1));
        let lowest = -rs.omega(1).unwrap();
        assert_eq!(rs.height(&w6) - rs.height(&lowest), int(16));
    }

    #[test]
    fn root_count_and_longest_element() {
        let rs = build_e6();
        assert_eq!(rs.roots().len(), 72);
        assert_eq!(rs.longest_element_word().len(), 36);
        let w6 = rs.omega(6).unwrap();
        assert_eq!(rs.longest_element(w6), -rs.omega(1).unwrap());
        let d5 = build_d5();
        assert_eq!(d5.roots().len(), 40);
        assert_eq!(d5.longest_element_word().len(), 20);
    }
}
