//! Determination of the degree-4 × degree-4 products.
//!
//! Unknowns are the coefficients of `(σ4′)²`, `(σ4″)²` and `σ4′σ4″` on the
//! codimension-8 basis. Linear constraints come from Pieri (`H⁴ = σ4′ + σ4″`)
//! and from pairing against the quadric class `σ8` using the geometric
//! axioms; the remaining freedom is cut down by evaluating
//! `(σ4′)²(σ4″)² = (σ4′σ4″)²`, which is linear in the mixed coefficients.
//! Nonnegative integer solutions are enumerated and must be unique.

use serde::Serialize;

use crate::minuscule::{ClassNames, NodeId, WeightDiagram};
use crate::rational::{int, to_i128, Q};
use crate::{Error, Result};

use super::pieri::{duality_pairing, h_power, pieri_hk};
use super::ChowClass;

/// Geometric input: products of the quadric line class.
#[derive(Clone, Debug)]
pub struct Axioms {
    pub s8_squared: ChowClass,
    pub s4p_times_s8: ChowClass,
    pub s4pp_times_s8: ChowClass,
}

impl Axioms {
    /// `σ8² = [pt]`, `σ4′σ8 = σ12′`, `σ4″σ8 = σ12″`.
    pub fn geometric(d: &WeightDiagram, names: &ClassNames) -> Result<Self> {
        let c = |n: &str| -> Result<ChowClass> { Ok(ChowClass::schubert(d.len(), names.id(n)?)) };
        Ok(Self {
            s8_squared: c("s16")?,
            s4p_times_s8: c("s12p")?,
            s4pp_times_s8: c("s12pp")?,
        })
    }
}

/// Trace of the search, indexed by the codimension-8 basis `(σ8, σ8′, σ8″)`.
#[derive(Clone, Debug, Serialize)]
pub struct SolverReport {
    /// Coefficients of `σ4′H⁴` and `σ4″H⁴`.
    pub pieri_s4p: [i64; 3],
    pub pieri_s4pp: [i64; 3],
    /// Coordinates pinned by pairing with `σ8` (`None` when free).
    pub pinned: [Option<i64>; 3],
    /// Linear form `Σ coeff_j γ_j = rhs` obtained from the quartic identity.
    pub line_coeffs: [i64; 3],
    pub line_rhs: i64,
    pub candidates_examined: usize,
    pub mu: [i64; 3],
    pub nu: [i64; 3],
    pub gamma: [i64; 3],
}

/// Products among the codimension-4 classes.
#[derive(Clone, Debug)]
pub struct QuarticProducts {
    pub basis8: [NodeId; 3],
    pub s4p_squared: ChowClass,
    pub s4pp_squared: ChowClass,
    pub s4p_s4pp: ChowClass,
    pub report: SolverReport,
}

fn as_int(x: &Q, what: &str) -> Result<i64> {
    to_i128(x)
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| Error::NonIntegral(what.to_string()))
}

pub fn solve_quartic_products(
    d: &WeightDiagram,
    names: &ClassNames,
    axioms: &Axioms,
) -> Result<QuarticProducts> {
    let s4p = names.id("s4p")?;
    let s4pp = names.id("s4pp")?;
    let basis8 = [names.id("s8")?, names.id("s8p")?, names.id("s8pp")?];
    let n = d.len();

    let h4 = h_power(d, 4);
    if h4 != &ChowClass::schubert(n, s4p) + &ChowClass::schubert(n, s4pp) {
        return Err(Error::Diagram("H^4 is not s4p + s4pp".into()));
    }
    for &b in &basis8 {
        if d.duality(b) != b {
            return Err(Error::Diagram("codimension-8 basis is not self-dual".into()));
        }
    }
    let on_basis = |c: &ChowClass, what: &str| -> Result<[i64; 3]> {
        let v: Vec<i64> = basis8.iter().map(|&b| as_int(c.coeff(b), what)).collect::<Result<_>>()?;
        Ok([v[0], v[1], v[2]])
    };
    // σ4′ H⁴ = σ4′(σ4′ + σ4″) gives μ + γ = a; σ4″ H⁴ gives ν + γ = b.
    let a = on_basis(&pieri_hk(d, s4p, 4), "s4p*H^4")?;
    let b = on_basis(&pieri_hk(d, s4pp, 4), "s4pp*H^4")?;

    // ⟨σ_x σ_y, σ8⟩ = ⟨σ_x, σ_y σ8⟩ pins the σ8 coordinate.
    let s4p_class = ChowClass::schubert(n, s4p);
    let s4pp_class = ChowClass::schubert(n, s4pp);
    let mu_q = as_int(&duality_pairing(d, &s4p_class, &axioms.s4p_times_s8), "mu0")?;
    let nu_q = as_int(&duality_pairing(d, &s4pp_class, &axioms.s4pp_times_s8), "nu0")?;
    let gamma_q = as_int(&duality_pairing(d, &s4p_class, &axioms.s4pp_times_s8), "gamma0")?;
    let gamma_q_alt = as_int(&duality_pairing(d, &s4pp_class, &axioms.s4p_times_s8), "gamma0")?;
    if gamma_q != gamma_q_alt {
        return Err(Error::SolverFailure {
            count: 0,
            residuals: format!("axioms give gamma0 = {gamma_q} and {gamma_q_alt}"),
        });
    }
    let pinned_idx = 0;
    let mut pinned = [None; 3];
    pinned[pinned_idx] = Some(gamma_q);
    if mu_q + gamma_q != a[pinned_idx] || nu_q + gamma_q != b[pinned_idx] {
        return Err(Error::SolverFailure {
            count: 0,
            residuals: format!(
                "pairing gives mu0={mu_q}, nu0={nu_q}, gamma0={gamma_q} against Pieri a0={}, b0={}",
                a[pinned_idx], b[pinned_idx]
            ),
        });
    }

    // Σ γ_j² = Σ (a_j − γ_j)(b_j − γ_j)  ⇔  Σ (a_j + b_j) γ_j = Σ a_j b_j.
    let line_coeffs: [i64; 3] = std::array::from_fn(|j| a[j] + b[j]);
    let mut line_rhs: i64 = (0..3).map(|j| a[j] * b[j]).sum();
    let mut reported = line_coeffs;
    line_rhs -= line_coeffs[pinned_idx] * gamma_q;
    reported[pinned_idx] = 0;

    let bound = |j: usize| a[j].min(b[j]).max(0);
    let mut solutions = Vec::new();
    let mut examined = 0;
    for g1 in 0..=bound(1) {
        for g2 in 0..=bound(2) {
            examined += 1;
            let gamma = [gamma_q, g1, g2];
            let mu: [i64; 3] = std::array::from_fn(|j| a[j] - gamma[j]);
            let nu: [i64; 3] = std::array::from_fn(|j| b[j] - gamma[j]);
            if mu.iter().chain(&nu).any(|&x| x < 0) {
                continue;
            }
            let lhs: i64 = (0..3).map(|j| mu[j] * nu[j]).sum();
            let rhs: i64 = (0..3).map(|j| gamma[j] * gamma[j]).sum();
            if lhs == rhs {
                debug_assert_eq!(reported[1] * g1 + reported[2] * g2, line_rhs);
                solutions.push((mu, nu, gamma));
            }
        }
    }
    let [(mu, nu, gamma)] = solutions.as_slice() else {
        return Err(Error::SolverFailure {
            count: solutions.len(),
            residuals: format!(
                "line {}*g1 + {}*g2 = {line_rhs}; solutions {:?}",
                reported[1], reported[2], solutions
            ),
        });
    };
    let on = |c: &[i64; 3]| ChowClass::from_terms(n, basis8.iter().zip(c).map(|(&id, &x)| (id, int(x))));
    Ok(QuarticProducts {
        basis8,
        s4p_squared: on(mu),
        s4pp_squared: on(nu),
        s4p_s4pp: on(gamma),
        report: SolverReport {
            pieri_s4p: a,
            pieri_s4pp: b,
            pinned,
            line_coeffs: reported,
            line_rhs,
            candidates_examined: examined,
            mu: *mu,
            nu: *nu,
            gamma: *gamma,
        },
    })
}
