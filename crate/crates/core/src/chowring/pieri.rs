//! Products with powers of the hyperplane class.
//!
//! In a minuscule `G/P` the Chevalley formula has no multiplicities, so
//! `σ_w · H^k = Σ κ(w, v) σ_v` where `κ` counts increasing paths.

use crate::minuscule::{NodeId, WeightDiagram};
use crate::rational::{int, Q};

use super::ChowClass;

/// `σ_w · H^k`; zero when `length(w) + k` exceeds the dimension.
pub fn pieri_hk(d: &WeightDiagram, w: NodeId, k: usize) -> ChowClass {
    let target = d.length(w) + k;
    let paths = d.paths_from(w);
    ChowClass::from_terms(
        d.len(),
        d.level(target).iter().map(|&v| (v, int(paths[v] as i64))),
    )
}

/// `c · H^k` for an arbitrary class.
pub fn times_h_power(d: &WeightDiagram, c: &ChowClass, k: usize) -> ChowClass {
    if k == 0 {
        return c.clone();
    }
    let mut out = ChowClass::zero(d.len());
    for (w, x) in c.support() {
        for (v, y) in pieri_hk(d, w, k).support() {
            out.add_term(v, &(x * y));
        }
    }
    out
}

/// `H^k` as a class.
pub fn h_power(d: &WeightDiagram, k: usize) -> ChowClass {
    pieri_hk(d, d.top, k)
}

/// Degree `κ(w, bottom)` of the Schubert class.
pub fn schubert_degree(d: &WeightDiagram, w: NodeId) -> u64 {
    d.degree(w)
}

/// Poincaré pairing from the duality involution alone: `Σ a_w b_{w*}`.
pub fn duality_pairing(d: &WeightDiagram, a: &ChowClass, b: &ChowClass) -> Q {
    a.support()
        .map(|(w, x)| x * b.coeff(d.duality(w)))
        .sum()
}

/// `deg(c) = ∫ c · H^{dim − grade}`, summed per homogeneous component.
pub fn class_degree(d: &WeightDiagram, c: &ChowClass) -> Q {
    c.support()
        .map(|(w, x)| x * int(d.degree(w) as i64))
        .sum()
}
