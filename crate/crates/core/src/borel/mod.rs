//! The Borel presentation: Schubert classes as `W(D5)`-invariant polynomials
//! modulo the positive-degree `W(E6)`-invariants.
//!
//! The coefficient of `σ_w` in an invariant `f` of degree `l(w)` is the
//! constant `∂_w f`. [`BorelEngine::expand_invariant`] computes it
//! symbolically; products of degree up to 16 go through the same operators
//! written as point evaluations (see [`functional`]).

pub mod action;
pub mod functional;
pub mod invariants;
pub mod poly;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::chowring::{ChowClass, GeneratorMonomial, Generation};
use crate::linalg::{self, Matrix};
use crate::minuscule::{cayley_plane, ClassNames, NodeId, WeightDiagram};
use crate::rational::{self, Q};
use crate::{Error, Result};

pub use action::{divided_diff, divided_diff_word, linear_form, reflect_point, reflect_poly, APPLY_LAST_LETTER_FIRST};
pub use functional::{regular_point, Point, PointFunctional};
pub use invariants::{
    generator, quadratic_w_invariant, render_generator_poly, GeneratorPoly, Invariant, InvariantGenerators,
};
pub use poly::{Monomial, Poly};

/// Generator-polynomial representatives of `H`, `σ4′`, `σ4″`, `σ8`, `σ8′`, `σ8″`.
#[derive(Clone, Debug)]
pub struct Representatives {
    pub entries: Vec<(String, GeneratorPoly)>,
}

impl Representatives {
    pub fn get(&self, name: &str) -> Option<&GeneratorPoly> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

/// Symbolic and pointwise divided-difference machinery over one diagram.
#[derive(Clone, Debug)]
pub struct BorelEngine {
    pub diagram: WeightDiagram,
    pub names: ClassNames,
    pub generation: Generation,
    pub generators: InvariantGenerators,
    pub representatives: Representatives,
    levi: Vec<usize>,
    functionals: Vec<PointFunctional>,
    /// `indexed[w]`: the functional of `w` as `(point index, coefficient)` pairs.
    indexed: Vec<Vec<(usize, Q)>>,
    /// Generator values at every orbit point used by some functional.
    values: Vec<[Q; 6]>,
    /// `rep_values[w][k]`: representative of `σ_w` evaluated at point `k`.
    rep_values: Vec<Vec<Q>>,
}

impl BorelEngine {
    pub fn cayley() -> Result<Self> {
        let diagram = cayley_plane();
        let names = ClassNames::cayley(&diagram)?;
        Self::new(diagram, names)
    }

    pub fn new(diagram: WeightDiagram, names: ClassNames) -> Result<Self> {
        let rs = &diagram.root_system;
        let generation = Generation::new(&diagram, &names)?;
        let generators = InvariantGenerators::new(rs, diagram.highest_index)?;
        let levi = invariants::levi_indices(rs, diagram.highest_index);
        let base = regular_point(rs);
        let functionals = (0..diagram.len())
            .into_par_iter()
            .map(|id| PointFunctional::new(rs, &diagram.reduced_word(id), &base))
            .collect::<Result<Vec<_>>>()?;
        let mut points = HashMap::new();
        let mut ordered: Vec<&Point> = Vec::new();
        for f in &functionals {
            for p in f.points() {
                if !points.contains_key(p) {
                    points.insert(p.clone(), ordered.len());
                    ordered.push(p);
                }
            }
        }
        let values: Vec<[Q; 6]> = ordered.par_iter().map(|p| generators.values_at(p)).collect();
        let indexed = functionals
            .iter()
            .map(|f| f.terms().map(|(p, c)| (points[p], c.clone())).collect())
            .collect();
        let mut engine = Self {
            diagram,
            names,
            generation,
            generators,
            representatives: Representatives { entries: Vec::new() },
            levi,
            functionals,
            indexed,
            values,
            rep_values: Vec::new(),
        };
        engine.representatives = engine.schubert_representatives()?;
        engine.rep_values = engine.representative_values();
        Ok(engine)
    }

    /// `Σ_w (∂_w f) σ_w` over the nodes of length `deg f`.
    pub fn expand_invariant(&self, f: &Poly) -> Result<ChowClass> {
        let n = self.diagram.len();
        let Some(deg) = f.degree() else {
            return Ok(ChowClass::zero(n));
        };
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if deg > self.diagram.max_length() {
            return Err(Error::DegreeTooLarge {
                degree: deg,
                max: self.diagram.max_length(),
            });
        }
        let rs = &self.diagram.root_system;
        if let Some(root) = invariants::first_moving_reflection(rs, &self.levi, f)? {
            return Err(Error::NotInvariant { root });
        }
        let coeffs = self
            .diagram
            .level(deg)
            .par_iter()
            .map(|&w| {
                let c = divided_diff_word(rs, &self.diagram.reduced_word(w), f)?;
                let c = c.as_constant().expect("full-length word yields a constant");
                Ok((w, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChowClass::from_terms(n, coeffs))
    }

    /// The functional `F ↦ (∂_w F)(p0)` attached to the node's reduced word.
    pub fn functional(&self, w: NodeId) -> &PointFunctional {
        &self.functionals[w]
    }

    /// Expansion of a generator polynomial by point evaluation. Components of
    /// weighted degree above the dimension vanish in the Chow ring.
    pub fn expand_generator_poly(&self, p: &GeneratorPoly) -> Result<ChowClass> {
        let n = self.diagram.len();
        let mut out = ChowClass::zero(n);
        for (deg, part) in invariants::generator_components(p) {
            if deg > self.diagram.max_length() {
                continue;
            }
            let coeffs: Vec<(NodeId, Q)> = self
                .diagram
                .level(deg)
                .par_iter()
                .map(|&w| (w, self.apply_indexed(w, |k| part.eval(&self.values[k]))))
                .collect();
            out = &out + &ChowClass::from_terms(n, coeffs);
        }
        Ok(out)
    }

    /// Symbolic expansion of a generator polynomial, one weighted component at a time.
    pub fn expand_generator_poly_symbolic(&self, p: &GeneratorPoly) -> Result<ChowClass> {
        let mut out = ChowClass::zero(self.diagram.len());
        for (deg, part) in invariants::generator_components(p) {
            if deg > self.diagram.max_length() {
                continue;
            }
            out = &out + &self.expand_invariant(&self.generators.to_poly(&part))?;
        }
        Ok(out)
    }

    /// Invariant combinations expanding to exactly one Schubert class each.
    fn schubert_representatives(&self) -> Result<Representatives> {
        use Invariant::*;
        let g = |i| generator(i);
        let h = g(H);
        let mut entries = vec![("s1".to_string(), h.clone())];
        let span4 = vec![h.pow(4), g(E4)];
        let span8 = vec![
            h.pow(8),
            &g(E4) * &h.pow(4),
            g(E4).pow(2),
            g(E8),
            &g(E6) * &h.pow(2),
            &g(E5) * &h.pow(3),
        ];
        for (span, targets) in [(span4, ["s4p", "s4pp"].as_slice()), (span8, ["s8", "s8p", "s8pp"].as_slice())] {
            let classes = span
                .iter()
                .map(|c| self.expand_generator_poly_symbolic(c))
                .collect::<Result<Vec<_>>>()?;
            let deg = self.diagram.length(self.names.id(targets[0])?);
            let level = self.diagram.level(deg);
            let a: Matrix = level
                .iter()
                .map(|&v| classes.iter().map(|c| c.coeff(v).clone()).collect())
                .collect();
            for name in targets {
                let target = self.names.id(name)?;
                let rhs: Vec<Q> = level.iter().map(|&v| Q::from_integer((v == target).into())).collect();
                let x = linalg::solve(&a, &rhs)
                    .ok_or_else(|| Error::Singular(format!("no invariant represents {name}")))?;
                let rep = span
                    .iter()
                    .zip(&x)
                    .fold(Poly::zero(), |acc, (c, k)| &acc + &c.scale(k));
                entries.push((name.to_string(), rep));
            }
        }
        Ok(Representatives { entries })
    }

    /// Representative of any Schubert class through its generator expansion.
    pub fn representative(&self, id: NodeId) -> GeneratorPoly {
        let reps = &self.representatives;
        let h = reps.get("s1").expect("H representative");
        let s4p = reps.get("s4p").expect("s4p representative");
        let s8 = reps.get("s8").expect("s8 representative");
        self.generation
            .expansion(id)
            .iter()
            .fold(Poly::zero(), |acc, (m, c)| {
                let term = match *m {
                    GeneratorMonomial::H(k) => h.pow(k),
                    GeneratorMonomial::S4H(k) => s4p * &h.pow(k),
                    GeneratorMonomial::S8H(k) => s8 * &h.pow(k),
                };
                &acc + &term.scale(c)
            })
    }

    fn apply_indexed(&self, w: NodeId, f: impl Fn(usize) -> Q) -> Q {
        let values: Vec<Q> = self.indexed[w].iter().map(|(k, _)| f(*k)).collect();
        rational::sum_of_products(self.indexed[w].iter().zip(&values).map(|((_, c), v)| [c, v]))
    }

    fn representative_values(&self) -> Vec<Vec<Q>> {
        let reps = &self.representatives;
        let (s4p, s8) = (reps.get("s4p").expect("s4p"), reps.get("s8").expect("s8"));
        let gens: Vec<[Q; 3]> = self
            .values
            .par_iter()
            .map(|v| [v[Invariant::H.index()].clone(), s4p.eval(v), s8.eval(v)])
            .collect();
        (0..self.diagram.len())
            .into_par_iter()
            .map(|w| {
                let exp = self.generation.expansion(w);
                gens.iter()
                    .map(|[h, a, b]| {
                        exp.iter()
                            .map(|(m, c)| {
                                let g = match m {
                                    GeneratorMonomial::H(_) => c.clone(),
                                    GeneratorMonomial::S4H(_) => c * a,
                                    GeneratorMonomial::S8H(_) => c * b,
                                };
                                g * num_traits::pow(h.clone(), m.h_exponent())
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// `σ_u σ_v`: the product of the representatives' values at each orbit
    /// point, paired against the functionals of the target level.
    pub fn multiply_borel(&self, u: NodeId, v: NodeId) -> Result<ChowClass> {
        let n = self.diagram.len();
        let deg = self.diagram.length(u) + self.diagram.length(v);
        if deg > self.diagram.max_length() {
            return Ok(ChowClass::zero(n));
        }
        let (ru, rv) = (&self.rep_values[u], &self.rep_values[v]);
        let coeffs = self.diagram.level(deg).iter().map(|&w| {
            let c = rational::sum_of_products(self.indexed[w].iter().map(|(k, c)| [c, &ru[*k], &rv[*k]]));
            (w, c)
        });
        Ok(ChowClass::from_terms(n, coeffs))
    }

    /// The product through the explicit product of generator polynomials.
    pub fn multiply_borel_polynomial(&self, u: NodeId, v: NodeId) -> Result<ChowClass> {
        if self.diagram.length(u) + self.diagram.length(v) > self.diagram.max_length() {
            return Ok(ChowClass::zero(self.diagram.len()));
        }
        let p = &self.representative(u) * &self.representative(v);
        self.expand_generator_poly(&p)
    }

    /// The same product with symbolic divided differences; practical for low degrees.
    pub fn multiply_borel_symbolic(&self, u: NodeId, v: NodeId) -> Result<ChowClass> {
        if self.diagram.length(u) + self.diagram.length(v) > self.diagram.max_length() {
            return Ok(ChowClass::zero(self.diagram.len()));
        }
        let p = &self.generators.to_poly(&self.representative(u)) * &self.generators.to_poly(&self.representative(v));
        self.expand_invariant(&p)
    }

    /// Expansions of `H, e2, e4, e5, e6, e8` in the Schubert basis.
    pub fn invariant_expansions(&self) -> Result<Vec<(Invariant, ChowClass)>> {
        Invariant::ALL
            .iter()
            .map(|&g| Ok((g, self.expand_invariant(self.generators.get(g))?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use std::sync::OnceLock;

    fn engine() -> &'static BorelEngine {
        static E: OnceLock<BorelEngine> = OnceLock::new();
        E.get_or_init(|| BorelEngine::cayley().unwrap())
    }

    fn class(terms: &[(&str, Q)]) -> ChowClass {
        let e = engine();
        ChowClass::from_terms(e.diagram.len(), terms.iter().map(|(n, c)| (e.names.id(n).unwrap(), c.clone())))
    }

    #[test]
    fn invariant_expansions() {
        let e = engine();
        let g = &e.generators;
        let ex = |p: &Poly| e.expand_invariant(p).unwrap();
        assert_eq!(ex(&g.h), class(&[("s1", frac(1, 1))]));
        assert_eq!(ex(&g.e2), class(&[("s2", frac(-3, 4))]));
        assert_eq!(ex(&g.e4), class(&[("s4p", frac(-27, 8)), ("s4pp", frac(21, 8))]));
        assert_eq!(ex(&g.e5), class(&[("s5p", frac(3, 16)), ("s5pp", frac(-21, 32))]));
        assert_eq!(ex(&g.e6), class(&[("s6p", frac(-27, 16)), ("s6pp", frac(87, 32))]));
        assert_eq!(
            ex(&g.e8),
            class(&[("s8", frac(21, 128)), ("s8p", frac(291, 256)), ("s8pp", frac(-519, 256))])
        );
    }

    #[test]
    fn expand_rejects_bad_input() {
        let e = engine();
        let x1 = Poly::var(0);
        assert!(matches!(e.expand_invariant(&x1), Err(Error::NotInvariant { .. })));
        let mixed = &e.generators.e2 + &e.generators.h;
        assert_eq!(e.expand_invariant(&mixed), Err(Error::NotHomogeneous));
        let big = e.generators.h.pow(17);
        assert!(matches!(e.expand_invariant(&big), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn representatives_expand_to_single_classes() {
        let e = engine();
        for (name, rep) in &e.representatives.entries {
            assert_eq!(e.expand_generator_poly(rep).unwrap(), class(&[(name, frac(1, 1))]), "{name}");
        }
        let h4 = e.representatives.get("s1").unwrap().pow(4);
        assert_eq!(
            e.expand_generator_poly_symbolic(&h4).unwrap(),
            class(&[("s4p", frac(1, 1)), ("s4pp", frac(1, 1))])
        );
    }

    #[test]
    fn products() {
        let e = engine();
        let id = |n: &str| e.names.id(n).unwrap();
        assert_eq!(
            e.multiply_borel(id("s4pp"), id("s4pp")).unwrap(),
            class(&[("s8", frac(1, 1)), ("s8p", frac(2, 1)), ("s8pp", frac(2, 1))])
        );
        assert_eq!(
            e.multiply_borel(id("s4p"), id("s8pp")).unwrap(),
            class(&[("s12p", frac(1, 1)), ("s12pp", frac(1, 1))])
        );
        for w in 0..e.diagram.len() {
            assert_eq!(e.multiply_borel(w, e.diagram.top).unwrap(), ChowClass::schubert(e.diagram.len(), w));
        }
        assert_eq!(
            e.multiply_borel_symbolic(id("s4pp"), id("s4pp")).unwrap(),
            e.multiply_borel(id("s4pp"), id("s4pp")).unwrap()
        );
        assert_eq!(
            e.multiply_borel_polynomial(id("s7p"), id("s9pp")).unwrap(),
            e.multiply_borel(id("s7p"), id("s9pp")).unwrap()
        );
        let h16 = e.representatives.get("s1").unwrap().pow(16);
        assert_eq!(e.expand_generator_poly(&h16).unwrap(), class(&[("s16", frac(78, 1))]));
    }
}
