//! The Chow ring of the Cayley plane in the Schubert basis.

mod class;
pub mod generation;
pub mod pieri;
pub mod solver;

pub use class::ChowClass;
pub use generation::{GeneratorMonomial, Generation};
pub use pieri::{class_degree, duality_pairing, h_power, pieri_hk, schubert_degree, times_h_power};
pub use solver::{Axioms, QuarticProducts, SolverReport};

use crate::minuscule::{cayley_plane, ClassNames, NodeId, WeightDiagram};
use crate::rational::Q;
use crate::{Error, Result};

/// All products `σ_u σ_v`, zero when the codimensions overflow.
#[derive(Clone, Debug)]
pub struct StructureTable {
    products: Vec<Vec<ChowClass>>,
}

impl StructureTable {
    pub fn get(&self, u: NodeId, v: NodeId) -> &ChowClass {
        &self.products[u][v]
    }

    pub fn len(&self) -> usize {
        self.products.len()
    }

    pub fn is_empty(&self) -> bool {
        self.products.is_empty()
    }
}

/// Result of a product, flagged when the grades overflowed the dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Product {
    pub class: ChowClass,
    pub overflow: bool,
}

/// Diagram, names, generator expansions and the solved multiplication table.
#[derive(Clone, Debug)]
pub struct ChowRing {
    pub diagram: WeightDiagram,
    pub names: ClassNames,
    pub generation: Generation,
    pub quartic: QuarticProducts,
    table: StructureTable,
}

impl ChowRing {
    /// Builds the ring of the Cayley plane from the geometric axioms.
    pub fn cayley() -> Result<Self> {
        let diagram = cayley_plane();
        let names = ClassNames::cayley(&diagram)?;
        let axioms = Axioms::geometric(&diagram, &names)?;
        Self::solve(diagram, names, &axioms)
    }

    /// Solves the quartic products, then closes the table through the
    /// generator expansion of every class.
    pub fn solve(diagram: WeightDiagram, names: ClassNames, axioms: &Axioms) -> Result<Self> {
        let generation = Generation::new(&diagram, &names)?;
        let quartic = solver::solve_quartic_products(&diagram, &names, axioms)?;
        let d = &diagram;
        let n = d.len();

        // σ4′ · m and σ8 · m on generator monomials m.
        let s4p_on = |m: GeneratorMonomial| match m {
            GeneratorMonomial::H(k) => pieri_hk(d, generation.s4p, k),
            GeneratorMonomial::S4H(k) => times_h_power(d, &quartic.s4p_squared, k),
            GeneratorMonomial::S8H(k) => times_h_power(d, &axioms.s4p_times_s8, k),
        };
        let s8_on = |m: GeneratorMonomial| match m {
            GeneratorMonomial::H(k) => pieri_hk(d, generation.s8, k),
            GeneratorMonomial::S4H(k) => times_h_power(d, &axioms.s4p_times_s8, k),
            GeneratorMonomial::S8H(k) => times_h_power(d, &axioms.s8_squared, k),
        };
        let via = |op: &dyn Fn(GeneratorMonomial) -> ChowClass, v: NodeId| {
            generation
                .expansion(v)
                .iter()
                .fold(ChowClass::zero(n), |acc, (m, c)| &acc + &op(*m).scale(c))
        };
        let times_s4p: Vec<ChowClass> = (0..n).map(|v| via(&s4p_on, v)).collect();
        let times_s8: Vec<ChowClass> = (0..n).map(|v| via(&s8_on, v)).collect();

        let products = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        generation
                            .expansion(u)
                            .iter()
                            .fold(ChowClass::zero(n), |acc, (m, c)| {
                                let term = match *m {
                                    GeneratorMonomial::H(k) => pieri_hk(d, v, k),
                                    GeneratorMonomial::S4H(k) => times_h_power(d, &times_s4p[v], k),
                                    GeneratorMonomial::S8H(k) => times_h_power(d, &times_s8[v], k),
                                };
                                &acc + &term.scale(c)
                            })
                    })
                    .collect()
            })
            .collect();

        let ring = Self {
            diagram,
            names,
            generation,
            quartic,
            table: StructureTable { products },
        };
        ring.check_integrality()?;
        Ok(ring)
    }

    fn check_integrality(&self) -> Result<()> {
        let n = self.diagram.len();
        for u in 0..n {
            for v in 0..n {
                if !self.table.get(u, v).is_integral() {
                    return Err(Error::NonIntegral(format!(
                        "{} * {}",
                        self.names.name(u),
                        self.names.name(v)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.diagram.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagram.is_empty()
    }

    pub fn class(&self, name: &str) -> Result<ChowClass> {
        Ok(ChowClass::schubert(self.len(), self.names.id(name)?))
    }

    pub fn fundamental(&self) -> ChowClass {
        ChowClass::schubert(self.len(), self.diagram.top)
    }

    pub fn point(&self) -> ChowClass {
        ChowClass::schubert(self.len(), self.diagram.bottom)
    }

    /// `σ_w · H^k`.
    pub fn pieri_hk(&self, w: NodeId, k: usize) -> ChowClass {
        pieri_hk(&self.diagram, w, k)
    }

    pub fn schubert_degree(&self, w: NodeId) -> u64 {
        self.diagram.degree(w)
    }

    /// Product of Schubert classes.
    pub fn multiply_schubert(&self, u: NodeId, v: NodeId) -> &ChowClass {
        self.table.get(u, v)
    }

    /// Bilinear extension of the table. Homogeneous factors whose grades
    /// exceed the dimension give the zero class with `overflow` set.
    pub fn multiply(&self, a: &ChowClass, b: &ChowClass) -> Product {
        let d = &self.diagram;
        let overflow = a
            .support()
            .any(|(u, _)| b.support().any(|(v, _)| d.length(u) + d.length(v) > d.max_length()));
        let mut class = ChowClass::zero(self.len());
        for (u, x) in a.support() {
            for (v, y) in b.support() {
                let xy = x * y;
                for (w, z) in self.table.get(u, v).support() {
                    class.add_term(w, &(&xy * z));
                }
            }
        }
        Product { class, overflow }
    }

    /// Intersection number of two classes of complementary codimension.
    pub fn pairing(&self, a: &ChowClass, b: &ChowClass) -> Result<Q> {
        let d = &self.diagram;
        let (Some(ga), Some(gb)) = (a.grade(d), b.grade(d)) else {
            if a.is_zero() || b.is_zero() {
                return Ok(Q::from_integer(0.into()));
            }
            return Err(Error::InhomogeneousClass);
        };
        if ga + gb != d.max_length() {
            return Err(Error::GradeMismatch {
                left: ga,
                right: gb,
                expected: d.max_length(),
            });
        }
        Ok(self.multiply(a, b).class.coeff(d.bottom).clone())
    }

    /// Parses a `+`-separated expression like `2*s8p + s8pp` or `h`.
    pub fn parse_class(&self, text: &str) -> Result<ChowClass> {
        let mut out = ChowClass::zero(self.len());
        for term in text.split('+').map(str::trim).filter(|t| !t.is_empty()) {
            let (coeff, name) = match term.split_once('*') {
                Some((c, name)) => (
                    c.trim()
                        .parse::<Q>()
                        .map_err(|_| Error::UnknownClass(term.to_string()))?,
                    name.trim(),
                ),
                None => (Q::from_integer(1.into()), term),
            };
            out.add_term(self.names.id(name)?, &coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ring() -> ChowRing {
        ChowRing::cayley().unwrap()
    }

    fn assert_class(r: &ChowRing, c: &ChowClass, expected: &str) {
        assert_eq!(c, &r.parse_class(expected).unwrap(), "{} vs {expected}", c.format(&r.names));
    }

    #[test]
    fn pieri_relations() {
        let r = ring();
        let id = |s: &str| r.names.id(s).unwrap();
        assert_class(&r, &r.pieri_hk(r.diagram.top, 4), "s4p + s4pp");
        assert_class(&r, &r.pieri_hk(id("s4p"), 4), "s8 + 3*s8p + 2*s8pp");
        assert_class(&r, &r.pieri_hk(id("s4pp"), 4), "s8 + 4*s8p + 3*s8pp");
        assert_class(&r, &r.pieri_hk(id("s8"), 4), "s12p + s12pp");
        assert_class(&r, &r.pieri_hk(id("s8p"), 4), "3*s12p + 4*s12pp");
        assert_class(&r, &r.pieri_hk(id("s8pp"), 4), "2*s12p + 3*s12pp");
        assert!(r.pieri_hk(id("s13"), 4).is_zero());
    }

    #[test]
    fn solver_resolves_the_diophantine_line() {
        let r = ring();
        let rep = &r.quartic.report;
        assert_eq!(rep.line_coeffs, [0, 7, 5]);
        assert_eq!(rep.line_rhs, 19);
        assert_eq!(rep.gamma, [0, 2, 1]);
        assert_eq!(rep.mu, [1, 1, 1]);
        assert_eq!(rep.nu, [1, 2, 2]);
    }

    #[test]
    fn products_from_the_table() {
        let r = ring();
        let m = |a: &str, b: &str| r.multiply(&r.class(a).unwrap(), &r.class(b).unwrap()).class;
        assert_class(&r, &m("s4p", "s4p"), "s8 + s8p + s8pp");
        assert_class(&r, &m("s4pp", "s4pp"), "s8 + 2*s8p + 2*s8pp");
        assert_class(&r, &m("s4p", "s4pp"), "2*s8p + s8pp");
        assert_class(&r, &m("s4p", "s8p"), "s12p + 2*s12pp");
        assert_class(&r, &m("s4p", "s8pp"), "s12p + s12pp");
        assert_class(&r, &m("s4pp", "s8p"), "2*s12p + 2*s12pp");
        assert_class(&r, &m("s4pp", "s8pp"), "s12p + 2*s12pp");
        assert!(m("s4p", "s12pp").is_zero());
        assert_class(&r, &m("s8p", "s8p"), "s16");
        assert_class(&r, &m("h", "s7p"), "s8 + s8p");
    }

    #[test]
    fn overflow_and_pairing_errors() {
        let r = ring();
        let p = r.multiply(&r.class("s8").unwrap(), &r.class("s9p").unwrap());
        assert!(p.overflow && p.class.is_zero());
        assert!(matches!(
            r.pairing(&r.class("s4p").unwrap(), &r.class("s8").unwrap()),
            Err(Error::GradeMismatch { .. })
        ));
        assert_eq!(r.pairing(&r.class("s4p").unwrap(), &r.class("s12p").unwrap()).unwrap(), int(1));
        let h8 = h_power(&r.diagram, 8);
        assert_eq!(r.pairing(&h8, &h8).unwrap(), int(78));
    }

    #[test]
    fn bad_axioms_fail_the_solver() {
        let d = cayley_plane();
        let names = ClassNames::cayley(&d).unwrap();
        let mut ax = Axioms::geometric(&d, &names).unwrap();
        // σ4′σ8 = 2σ12′ contradicts σ4′H⁴ having σ8-coefficient 1
        ax.s4p_times_s8 = ax.s4p_times_s8.scale(&int(2));
        assert!(matches!(ChowRing::solve(d, names, &ax), Err(Error::SolverFailure { .. })));
    }
}
