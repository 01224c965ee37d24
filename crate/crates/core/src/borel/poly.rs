//! Sparse polynomials in six variables with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{fmt_q, int, Q};

pub const NVARS: usize = 6;

/// Products of two degree-16 representatives are the largest polynomials built.
pub const MAX_DEGREE: usize = 32;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u8; NVARS]);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn weighted_degree(&self, weights: &[usize; NVARS]) -> usize {
        self.0.iter().zip(weights).map(|(&e, w)| e as usize * w).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::default(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn var(j: usize) -> Self {
        let mut e = [0; NVARS];
        e[j] = 1;
        Self::from_terms([(Monomial(e), Q::one())])
    }

    /// `Σ c_j x_j`.
    pub fn linear(coeffs: &[Q; NVARS]) -> Self {
        Self::from_terms((0..NVARS).map(|j| {
            let mut e = [0; NVARS];
            e[j] = 1;
            (Monomial(e), coeffs[j].clone())
        }))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (graded-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Q> {
        match self.degree() {
            None => Some(Q::zero()),
            Some(0) => Some(self.coeff(&Monomial::default())),
            _ => None,
        }
    }

    /// Homogeneous components keyed by weighted degree.
    pub fn graded_parts(&self, weights: &[usize; NVARS]) -> BTreeMap<usize, Poly> {
        let mut out: BTreeMap<usize, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree(weights))
                .or_default()
                .add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `∂/∂x_j`.
    pub fn derivative(&self, j: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.0[j] > 0).map(|(m, c)| {
            let mut e = *m;
            let k = e.0[j];
            e.0[j] -= 1;
            (e, c * int(k as i64))
        }))
    }

    /// Directional derivative `Σ g_j ∂/∂x_j`.
    pub fn directional(&self, g: &[Q; NVARS]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (j, gj) in g.iter().enumerate() {
                if gj.is_zero() || m.0[j] == 0 {
                    continue;
                }
                let mut e = *m;
                let k = e.0[j];
                e.0[j] -= 1;
                out.add_term(e, c * gj * int(k as i64));
            }
        }
        out
    }

    /// Evaluation over a common denominator, normalised once at the end.
    pub fn eval(&self, point: &[Q; NVARS]) -> Q {
        let mut top = [0usize; NVARS];
        for m in self.terms.keys() {
            for (t, &e) in top.iter_mut().zip(&m.0) {
                *t = (*t).max(e as usize);
            }
        }
        let powers = |x: &BigInt, n: usize| -> Vec<BigInt> {
            let mut v = vec![BigInt::one()];
            for k in 1..=n {
                let next = &v[k - 1] * x;
                v.push(next);
            }
            v
        };
        let num: Vec<Vec<BigInt>> = (0..NVARS).map(|j| powers(point[j].numer(), top[j])).collect();
        let den: Vec<Vec<BigInt>> = (0..NVARS).map(|j| powers(point[j].denom(), top[j])).collect();
        let c_den = self.terms.values().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.numer() * (&c_den / c.denom());
            for j in 0..NVARS {
                let e = m.0[j] as usize;
                if e > 0 {
                    t *= &num[j][e];
                }
                if top[j] > e {
                    t *= &den[j][top[j] - e];
                }
            }
            total += t;
        }
        let d = (0..NVARS).fold(c_den, |d, j| d * &den[j][top[j]]);
        Q::new(total, d)
    }

    /// Replaces `x_j` by `images[j]`.
    pub fn substitute(&self, images: &[Poly; NVARS]) -> Poly {
        let mut cache: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(), p.clone()]).collect();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[j].len() <= e as usize {
                    let next = cache[j].last().unwrap() * &images[j];
                    cache[j].push(next);
                }
                term = &term * &cache[j][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Exact quotient by a nonzero linear form; `None` if the remainder is nonzero.
    pub fn div_linear(&self, divisor: &Poly) -> Option<Poly> {
        let (pivot, lead) = divisor.terms.iter().find_map(|(m, c)| {
            let j = m.0.iter().position(|&e| e == 1)?;
            Some((j, c.clone()))
        })?;
        debug_assert!(divisor.terms.keys().all(|m| m.degree() == 1));
        let rest: Vec<(usize, Q)> = divisor
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let j = m.0.iter().position(|&e| e == 1)?;
                (j != pivot).then(|| (j, c.clone()))
            })
            .collect();

        // f = Σ f_k x_p^k, split by pivot exponent.
        let top = self.terms.keys().map(|m| m.0[pivot] as usize).max()?;
        let mut parts: Vec<Poly> = vec![Poly::zero(); top + 1];
        for (m, c) in &self.terms {
            let mut e = *m;
            let k = e.0[pivot] as usize;
            e.0[pivot] = 0;
            parts[k].add_term(e, c.clone());
        }
        let times_rest = |q: &Poly| -> Poly {
            let mut out = Poly::zero();
            for (m, c) in &q.terms {
                for (j, a) in &rest {
                    let mut e = *m;
                    e.0[*j] += 1;
                    out.add_term(e, c * a);
                }
            }
            out
        };
        let inv = Q::one() / lead;
        // f_k = lead q_{k−1} + B q_k, solved from the top down.
        let mut quotient: Vec<Poly> = vec![Poly::zero(); top.max(1)];
        let mut carry = Poly::zero();
        for k in (1..=top).rev() {
            let qk1 = (&parts[k] - &carry).scale(&inv);
            carry = times_rest(&qk1);
            quotient[k - 1] = qk1;
        }
        if !(&parts[0] - &carry).is_zero() {
            return None;
        }
        let mut out = Poly::zero();
        for (k, q) in quotient.into_iter().enumerate() {
            for (m, c) in q.terms {
                let mut e = m;
                e.0[pivot] = k as u8;
                out.add_term(e, c);
            }
        }
        Some(out)
    }

    /// Renders with the given variable names.
    pub fn render(&self, vars: &[&str; NVARS]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut factors: Vec<String> = Vec::new();
                if !c.is_one() || m.degree() == 0 {
                    factors.push(fmt_q(c));
                }
                for (j, &e) in m.0.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(vars[j].to_string()),
                        _ => factors.push(format!("{}^{e}", vars[j])),
                    }
                }
                factors.join("*")
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&["x1", "x2", "x3", "x4", "x5", "x6"]))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if let (Some(a), Some(b)) = (self.degree(), rhs.degree()) {
            assert!(a + b <= MAX_DEGREE, "polynomial degree {} exceeds {MAX_DEGREE}", a + b);
        }
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.times(m2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }
}
