//! Chern and Segre classes of the normal bundle of `OP^2 ⊂ P^26`, and the
//! degree of the variety of reductions `Y8`.
//!
//! The normal bundle has weights `±ε_i − (3/2)ω6`, so
//! `c(N) = Σ_i (−1)^i (1 + 3H/2)^{10−2i} e_{2i}` with `e10 = e5²`.
//! Products with powers of `H` always go through Pieri; the only other
//! products are formed among invariant polynomials before expansion.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::borel::{generator, BorelEngine, GeneratorPoly, Invariant, Monomial, Poly};
use crate::chowring::{class_degree, h_power, pieri_hk, times_h_power, ChowClass};
use crate::rational::{binomial, frac, fmt_q, int, Q};
use crate::{Error, Result};

pub const NORMAL_RANK: usize = 10;
pub const PROJECTED_RANK: usize = 9;
/// `s_0 .. s_15` of the projected normal bundle.
pub const SEGRE_COUNT: usize = 16;

/// Total Chern class, one homogeneous class per degree `0..=rank+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernVector {
    pub rank: usize,
    pub classes: Vec<ChowClass>,
}

impl ChernVector {
    pub fn get(&self, k: usize) -> Option<&ChowClass> {
        self.classes.get(k)
    }
}

/// `Σ_i (−1)^i (1 + 3H/2)^{10−2i} e_{2i}` with its homogeneous parts in the generator ring.
pub fn normal_chern_generators() -> Vec<GeneratorPoly> {
    let h = generator(Invariant::H);
    let base = &Poly::one() + &h.scale(&frac(3, 2));
    let e5 = generator(Invariant::E5);
    let es = [
        Poly::one(),
        generator(Invariant::E2),
        generator(Invariant::E4),
        generator(Invariant::E6),
        generator(Invariant::E8),
        &e5 * &e5,
    ];
    let total = es.iter().enumerate().fold(Poly::zero(), |acc, (i, e)| {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        &acc + &(&base.pow(NORMAL_RANK - 2 * i) * e).scale(&sign)
    });
    let parts = total.graded_parts(&Invariant::WEIGHTS);
    (0..=NORMAL_RANK)
        .map(|k| parts.get(&k).cloned().unwrap_or_default())
        .collect()
}

/// Schubert expansion of `e_{2i}`, computed symbolically once per generator.
struct EvenInvariants {
    classes: Vec<ChowClass>,
}

impl EvenInvariants {
    fn new(engine: &BorelEngine) -> Result<Self> {
        let g = &engine.generators;
        let polys = [Poly::one(), g.e2.clone(), g.e4.clone(), g.e6.clone(), g.e8.clone(), g.e10()];
        let classes = polys
            .iter()
            .map(|p| engine.expand_invariant(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { classes })
    }
}

/// `c(N)`, expanding every `e_{2i} H^j` through divided differences and Pieri.
pub fn chern_normal(engine: &BorelEngine) -> Result<ChernVector> {
    let d = &engine.diagram;
    let even = EvenInvariants::new(engine)?;
    let mut classes = vec![ChowClass::zero(d.len()); NORMAL_RANK + 1];
    for (i, e) in even.classes.iter().enumerate() {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        let n = NORMAL_RANK - 2 * i;
        // (1 + 3H/2)^n = Σ_j C(n, j) (3/2)^j H^j
        for j in 0..=n {
            let k = 2 * i + j;
            let c = Q::from_integer(binomial(n as u64, j as u64)) * num_traits::pow(frac(3, 2), j) * &sign;
            classes[k] = &classes[k] + &times_h_power(d, e, j).scale(&c);
        }
    }
    for (k, c) in classes.iter().enumerate() {
        if !c.is_integral() {
            return Err(Error::NonIntegral(format!("c{k}(N) = {}", c.format(&engine.names))));
        }
    }
    Ok(ChernVector {
        rank: NORMAL_RANK,
        classes,
    })
}

/// `c(N̄) = c(N) / (1 + H)` from `0 → O(1) → N → N̄ → 0`; the degree-10 part must vanish.
pub fn chern_projected(engine: &BorelEngine, normal: &ChernVector) -> Result<ChernVector> {
    let d = &engine.diagram;
    let mut classes: Vec<ChowClass> = Vec::with_capacity(NORMAL_RANK + 1);
    classes.push(normal.classes[0].clone());
    for k in 1..=NORMAL_RANK {
        let prev = times_h_power(d, &classes[k - 1], 1);
        classes.push(&normal.classes[k] - &prev);
    }
    let top = classes.pop().expect("degree 10 entry");
    if !top.is_zero() {
        return Err(Error::RankViolation {
            rank: PROJECTED_RANK,
            class: top.format(&engine.names),
        });
    }
    Ok(ChernVector {
        rank: PROJECTED_RANK,
        classes,
    })
}

/// The Chern classes of `N̄` inside the generator ring (before expansion).
pub fn projected_chern_generators() -> Vec<GeneratorPoly> {
    let normal = normal_chern_generators();
    let h = generator(Invariant::H);
    let mut out: Vec<GeneratorPoly> = vec![normal[0].clone()];
    for k in 1..=PROJECTED_RANK {
        let next = &normal[k] - &(&h * &out[k - 1]);
        out.push(next);
    }
    out
}

/// Expands generator polynomials by splitting off `H^a` (handled by Pieri)
/// and evaluating the remaining `e`-monomial with divided differences.
pub struct GeneratorExpander<'a> {
    engine: &'a BorelEngine,
    cache: HashMap<Monomial, ChowClass>,
}

impl<'a> GeneratorExpander<'a> {
    pub fn new(engine: &'a BorelEngine) -> Self {
        Self {
            engine,
            cache: HashMap::new(),
        }
    }

    pub fn expand(&mut self, p: &GeneratorPoly) -> Result<ChowClass> {
        let d = &self.engine.diagram;
        let mut out = ChowClass::zero(d.len());
        for (m, c) in p.terms() {
            if m.weighted_degree(&Invariant::WEIGHTS) > d.max_length() {
                continue;
            }
            let a = m.0[Invariant::H.index()] as usize;
            let mut rest = *m;
            rest.0[Invariant::H.index()] = 0;
            let base = match self.cache.get(&rest) {
                Some(b) => b.clone(),
                None => {
                    let b = if rest.degree() == 0 {
                        h_power(d, 0)
                    } else {
                        self.engine
                            .expand_generator_poly(&Poly::from_terms([(rest, Q::one())]))?
                    };
                    self.cache.insert(rest, b.clone());
                    b
                }
            };
            out = &out + &times_h_power(d, &base, a).scale(c);
        }
        Ok(out)
    }
}

/// `s_0 .. s_15` of `N̄` from `s_k = −Σ_{i=1}^{9} (−1)^i c_i(N̄) s_{k−i}`.
///
/// The recurrence runs in the generator ring, which maps homomorphically onto
/// the Chow ring, so no Schubert-by-Schubert product is needed.
pub fn segre_projected(engine: &BorelEngine) -> Result<Vec<ChowClass>> {
    let c = projected_chern_generators();
    let mut s: Vec<GeneratorPoly> = vec![Poly::one()];
    for k in 1..SEGRE_COUNT {
        let mut acc = Poly::zero();
        for i in 1..=k.min(PROJECTED_RANK) {
            let sign = if i % 2 == 0 { int(-1) } else { int(1) };
            acc = &acc + &(&c[i] * &s[k - i]).scale(&sign);
        }
        s.push(acc);
    }
    let mut ex = GeneratorExpander::new(engine);
    let classes = s.iter().map(|p| ex.expand(p)).collect::<Result<Vec<_>>>()?;
    for (k, x) in classes.iter().enumerate() {
        if !x.is_integral() {
            return Err(Error::NonIntegral(format!("s{k}(N̄) = {}", x.format(&engine.names))));
        }
    }
    Ok(classes)
}

/// One summand `(−1)^k C(24,k) 3^{24−k} deg(H^{25−k} s_{k−9})` of the degree formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTerm {
    pub k: usize,
    pub intersection: BigInt,
    pub contribution: BigInt,
}

/// Breakdown of `deg Y8 = 3^24 + Σ_{k=9}^{24} (−1)^k C(24,k) 3^{24−k} H^{25−k} s_{k−9}(N̄)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeY8 {
    pub leading: BigInt,
    pub terms: Vec<DegreeTerm>,
    pub total: BigInt,
}

pub fn degree_y8_from_segre(engine: &BorelEngine, segre: &[ChowClass]) -> Result<DegreeY8> {
    let d = &engine.diagram;
    let three = BigInt::from(3);
    let leading = num_traits::pow(three.clone(), 24);
    let mut total = leading.clone();
    let mut terms = Vec::new();
    for k in 9..=24usize {
        // H^{25−k} s_{k−9} has top degree; its degree is Σ coeff · κ(w, bottom).
        let s = &segre[k - 9];
        let deg = class_degree(d, s);
        if !deg.is_integer() {
            return Err(Error::NonIntegral(format!("deg H^{} s{}", 25 - k, k - 9)));
        }
        let intersection = deg.to_integer();
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let contribution =
            sign * binomial(24, k as u64) * num_traits::pow(three.clone(), 24 - k) * &intersection;
        total += &contribution;
        terms.push(DegreeTerm {
            k,
            intersection,
            contribution,
        });
    }
    Ok(DegreeY8 { leading, terms, total })
}

pub fn degree_y8(engine: &BorelEngine) -> Result<DegreeY8> {
    degree_y8_from_segre(engine, &segre_projected(engine)?)
}

/// Checks `c(N̄)(1 + H) = c(N)` degree by degree.
pub fn whitney_holds(engine: &BorelEngine, normal: &ChernVector, projected: &ChernVector) -> bool {
    let d = &engine.diagram;
    (0..=NORMAL_RANK).all(|k| {
        let zero = ChowClass::zero(d.len());
        let here = projected.classes.get(k).unwrap_or(&zero);
        let below = if k == 0 {
            zero.clone()
        } else {
            times_h_power(d, projected.classes.get(k - 1).unwrap_or(&zero), 1)
        };
        (here + &below) == normal.classes[k]
    })
}

/// Formats a class with integral coefficients, or rationals where needed.
pub fn format_class(engine: &BorelEngine, c: &ChowClass) -> String {
    c.format(&engine.names)
}

/// Integer coefficient list `(name, value)` of a class.
pub fn integer_terms(engine: &BorelEngine, c: &ChowClass) -> Vec<(String, String)> {
    c.support()
        .map(|(w, x)| (engine.names.name(w).to_string(), fmt_q(x)))
        .collect()
}

/// `true` if every coefficient is a nonnegative integer.
pub fn is_nonnegative_integral(c: &ChowClass) -> bool {
    c.support().all(|(_, x)| x.is_integer() && !x.is_negative())
}

/// `σ_w H^k`, the form in which expected Chern and Segre data are written.
pub fn schubert_times_h(engine: &BorelEngine, name: &str, k: usize) -> Result<ChowClass> {
    Ok(pieri_hk(&engine.diagram, engine.names.id(name)?, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn engine() -> &'static BorelEngine {
        static E: OnceLock<BorelEngine> = OnceLock::new();
        E.get_or_init(|| BorelEngine::cayley().unwrap())
    }

    fn class(terms: &[(&str, i64)]) -> ChowClass {
        let e = engine();
        ChowClass::from_terms(e.diagram.len(), terms.iter().map(|(n, c)| (e.names.id(n).unwrap(), int(*c))))
    }

    fn h_times(terms: &[(&str, i64)], k: usize) -> ChowClass {
        times_h_power(&engine().diagram, &class(terms), k)
    }

    #[test]
    fn normal_bundle() {
        let e = engine();
        let c = chern_normal(e).unwrap();
        assert_eq!(c.classes[1], class(&[("s1", 15)]));
        assert_eq!(c.classes[2], h_times(&[("s1", 102)], 1));
        assert_eq!(c.classes[3], h_times(&[("s1", 414)], 2));
        assert_eq!(c.classes[4], class(&[("s4p", 1107), ("s4pp", 1113)]));
        assert_eq!(c.classes[5], h_times(&[("s4p", 2025), ("s4pp", 2079)], 1));
        assert_eq!(c.classes[6], class(&[("s6p", 5292), ("s6pp", 8034)]));
        assert_eq!(c.classes[7], h_times(&[("s6p", 4698), ("s6pp", 7218)], 1));
        assert_eq!(c.classes[8], class(&[("s8", 2751), ("s8p", 9786), ("s8pp", 7032)]));
        assert_eq!(c.classes[9], h_times(&[("s8", 963), ("s8p", 3438), ("s8pp", 2466)], 1));
        assert_eq!(c.classes[10], h_times(&[("s8", 153), ("s8p", 549), ("s8pp", 387)], 2));
        assert!(c.classes.iter().all(is_nonnegative_integral));
    }

    #[test]
    fn projected_bundle() {
        let e = engine();
        let n = chern_normal(e).unwrap();
        let c = chern_projected(e, &n).unwrap();
        assert_eq!(c.classes.len(), 10);
        assert_eq!(c.classes[1], class(&[("s1", 14)]));
        assert_eq!(c.classes[4], class(&[("s4p", 781), ("s4pp", 787)]));
        assert_eq!(c.classes[5], class(&[("s5p", 2536), ("s5pp", 1292)]));
        assert_eq!(c.classes[7], class(&[("s7p", 1942), ("s7pp", 4954)]));
        assert_eq!(c.classes[8], class(&[("s8", 809), ("s8p", 2890), ("s8pp", 2078)]));
        assert_eq!(c.classes[9], class(&[("s9p", 702), ("s9pp", 936)]));
        assert!(whitney_holds(e, &n, &c));
        // The generator-ring route gives the same classes.
        let mut ex = GeneratorExpander::new(e);
        for (k, p) in projected_chern_generators().iter().enumerate() {
            assert_eq!(ex.expand(p).unwrap(), c.classes[k], "c{k}");
        }
    }

    #[test]
    fn segre_classes_and_degree() {
        let e = engine();
        let s = segre_projected(e).unwrap();
        assert_eq!(s[1], class(&[("s1", 14)]));
        assert_eq!(s[2], h_times(&[("s1", 108)], 1));
        assert_eq!(s[4], class(&[("s4p", 2763), ("s4pp", 2757)]));
        assert_eq!(s[7], class(&[("s7p", 240534), ("s7pp", 596598)]));
        assert_eq!(s[12], class(&[("s12p", 491985531), ("s12pp", 669523221)]));
        assert_eq!(s[15], class(&[("s15", 12591161406)]));
        let deg = degree_y8_from_segre(e, &s).unwrap();
        assert_eq!(deg.terms[0].intersection, BigInt::from(78));
        assert_eq!(deg.total, BigInt::from(1047361761u64));
    }
}
