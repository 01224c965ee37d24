//! Writing every Schubert class as a polynomial in `H`, `σ4′` and `σ8`.
//!
//! As a vector space each `A^k` is spanned by `H^k`, `σ4′ H^{k−4}` and
//! `σ8 H^{k−8}`; the coefficients come from Pieri alone.

use serde::Serialize;

use crate::linalg::{self, Matrix};
use crate::minuscule::{ClassNames, NodeId, WeightDiagram};
use crate::rational::{fmt_q, Q};
use crate::{Error, Result};

use super::pieri::pieri_hk;
use super::ChowClass;

/// A generator monomial `H^h · g` with `g ∈ {1, σ4′, σ8}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GeneratorMonomial {
    H(usize),
    S4H(usize),
    S8H(usize),
}

impl GeneratorMonomial {
    pub fn degree(self) -> usize {
        match self {
            Self::H(k) => k,
            Self::S4H(k) => 4 + k,
            Self::S8H(k) => 8 + k,
        }
    }

    pub fn h_exponent(self) -> usize {
        match self {
            Self::H(k) | Self::S4H(k) | Self::S8H(k) => k,
        }
    }

    /// Monomials of total degree `k`, in the order `H^k, σ4′H^{k−4}, σ8H^{k−8}`.
    pub fn of_degree(k: usize) -> Vec<Self> {
        let mut out = vec![Self::H(k)];
        if k >= 4 {
            out.push(Self::S4H(k - 4));
        }
        if k >= 8 {
            out.push(Self::S8H(k - 8));
        }
        out
    }

    pub fn render(self) -> String {
        let h = |k: usize| match k {
            0 => String::new(),
            1 => "H".to_string(),
            k => format!("H^{k}"),
        };
        match self {
            Self::H(0) => "1".to_string(),
            Self::H(k) => h(k),
            Self::S4H(k) => format!("s4p{}", if k > 0 { format!("*{}", h(k)) } else { String::new() }),
            Self::S8H(k) => format!("s8{}", if k > 0 { format!("*{}", h(k)) } else { String::new() }),
        }
    }
}

/// Generator expansion of every basis class.
#[derive(Clone, Debug)]
pub struct Generation {
    pub s4p: NodeId,
    pub s8: NodeId,
    expansions: Vec<Vec<(GeneratorMonomial, Q)>>,
}

impl Generation {
    pub fn new(d: &WeightDiagram, names: &ClassNames) -> Result<Self> {
        let s4p = names.id("s4p")?;
        let s8 = names.id("s8")?;
        let mut expansions = vec![Vec::new(); d.len()];
        for k in 0..=d.max_length() {
            let monomials = GeneratorMonomial::of_degree(k);
            let columns: Vec<ChowClass> = monomials
                .iter()
                .map(|&m| Self::pieri_value(d, s4p, s8, m))
                .collect();
            let level = d.level(k);
            let a: Matrix = level
                .iter()
                .map(|&v| columns.iter().map(|c| c.coeff(v).clone()).collect())
                .collect();
            for &target in level {
                let rhs: Vec<Q> = level.iter().map(|&v| Q::from_integer((v == target).into())).collect();
                let x = linalg::solve(&a, &rhs).ok_or_else(|| {
                    Error::Singular(format!("{} is not generated by H, s4p, s8", names.name(target)))
                })?;
                expansions[target] = monomials
                    .iter()
                    .zip(x)
                    .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                    .map(|(&m, c)| (m, c))
                    .collect();
            }
        }
        Ok(Self { s4p, s8, expansions })
    }

    /// Class of a generator monomial computed with Pieri only.
    pub fn pieri_value(d: &WeightDiagram, s4p: NodeId, s8: NodeId, m: GeneratorMonomial) -> ChowClass {
        match m {
            GeneratorMonomial::H(k) => pieri_hk(d, d.top, k),
            GeneratorMonomial::S4H(k) => pieri_hk(d, s4p, k),
            GeneratorMonomial::S8H(k) => pieri_hk(d, s8, k),
        }
    }

    pub fn expansion(&self, id: NodeId) -> &[(GeneratorMonomial, Q)] {
        &self.expansions[id]
    }

    pub fn render(&self, id: NodeId) -> String {
        self.expansions[id]
            .iter()
            .map(|(m, c)| format!("({})*{}", fmt_q(c), m.render()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
