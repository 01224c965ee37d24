use std::fmt::Write as _;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::minuscule::{ClassNames, NodeId, WeightDiagram};
use crate::rational::{fmt_q, is_nonnegative_integer, Q};

/// A Chow class as a coefficient vector in the Schubert basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    coeffs: Vec<Q>,
}

impl ChowClass {
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![Q::zero(); n],
        }
    }

    /// The Schubert class `σ_id`.
    pub fn schubert(n: usize, id: NodeId) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[id] = Q::one();
        c
    }

    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        Self { coeffs }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (NodeId, Q)>) -> Self {
        let mut c = Self::zero(n);
        for (id, x) in terms {
            c.coeffs[id] += x;
        }
        c
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, id: NodeId) -> &Q {
        &self.coeffs[id]
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn add_term(&mut self, id: NodeId, x: &Q) {
        self.coeffs[id] += x;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (NodeId, &Q)> {
        self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * k).collect())
    }

    /// Codimension of a nonzero homogeneous class.
    pub fn grade(&self, d: &WeightDiagram) -> Option<usize> {
        let mut grades = self.support().map(|(id, _)| d.length(id));
        let g = grades.next()?;
        grades.all(|h| h == g).then_some(g)
    }

    pub fn is_homogeneous(&self, d: &WeightDiagram) -> bool {
        self.is_zero() || self.grade(d).is_some()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Q::is_integer)
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(is_nonnegative_integer)
    }

    /// Human-readable expansion such as `s8 + 3*s8p + 2*s8pp`.
    pub fn format(&self, names: &ClassNames) -> String {
        let mut out = String::new();
        // `s8` before `s8p` before `s8pp`, whatever the node numbering.
        let mut terms: Vec<_> = self.support().collect();
        terms.sort_by_key(|(id, _)| {
            let name = names.name(*id);
            let digits: String = name.chars().filter(char::is_ascii_digit).collect();
            (digits.parse::<usize>().unwrap_or(usize::MAX), name.len())
        });
        for (id, x) in terms {
            let neg = x.is_negative();
            let mag = x.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                let _ = write!(out, "{}*", fmt_q(&mag));
            }
            out.push_str(names.name(id));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        ChowClass::from_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        ChowClass::from_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}
