use std::sync::OnceLock;

use num_traits::Zero;
use proptest::prelude::*;

use op2_chow::borel::{divided_diff, reflect_poly, Monomial, Poly};
use op2_chow::chowring::{ChowClass, ChowRing};
use op2_chow::jordan::{cell_point, rank_one_check, Octonion};
use op2_chow::lattice::{build_e6, Weight};
use op2_chow::minuscule::{cayley_plane, spinor_variety, WeightDiagram};
use op2_chow::rational::{frac, int, Q};

fn ring() -> &'static ChowRing {
    static RING: OnceLock<ChowRing> = OnceLock::new();
    RING.get_or_init(|| ChowRing::cayley().expect("ring"))
}

fn small_q() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn weight() -> impl Strategy<Value = Weight> {
    (proptest::array::uniform5(small_q()), small_q()).prop_map(|(c, u)| Weight::from_parts(c, u))
}

fn poly(max_degree: u8) -> impl Strategy<Value = Poly> {
    let term = (proptest::array::uniform6(0..=max_degree), -6i64..=6);
    proptest::collection::vec(term, 0..5).prop_map(move |terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() <= max_degree as usize)
                .map(|(e, c)| (Monomial(e), int(c))),
        )
    })
}

fn point() -> impl Strategy<Value = [Q; 6]> {
    proptest::array::uniform6(small_q())
}

fn octonion() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(small_q()).prop_map(Octonion)
}

fn class(codim: usize) -> impl Strategy<Value = ChowClass> {
    let d = &ring().diagram;
    let level = d.level(codim).to_vec();
    let n = d.len();
    proptest::collection::vec(-5i64..=5, level.len())
        .prop_map(move |cs| ChowClass::from_terms(n, level.iter().zip(cs).map(|(&id, c)| (id, int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_isometric_involutions(w in weight(), v in weight(), i in 1usize..=6) {
        let rs = build_e6();
        let sw = rs.reflect(i, &w).unwrap();
        prop_assert_eq!(rs.reflect(i, &sw).unwrap(), w.clone());
        prop_assert_eq!(sw.inner(&rs.reflect(i, &v).unwrap()), w.inner(&v));
    }

    #[test]
    fn eval_is_a_ring_map(f in poly(4), g in poly(4), p in point()) {
        prop_assert_eq!((&f * &g).eval(&p), f.eval(&p) * g.eval(&p));
        prop_assert_eq!((&f + &g).eval(&p), f.eval(&p) + g.eval(&p));
    }

    #[test]
    fn multiplication_distributes(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn divided_difference_twisted_leibniz(f in poly(3), g in poly(3), i in 1usize..=6) {
        // ∂(fg) = ∂(f) g + s(f) ∂(g)
        let rs = build_e6();
        let lhs = divided_diff(&rs, i, &(&f * &g)).unwrap();
        let rhs = &(&divided_diff(&rs, i, &f).unwrap() * &g)
            + &(&reflect_poly(&rs, i, &f).unwrap() * &divided_diff(&rs, i, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_squares_to_zero(f in poly(4), i in 1usize..=6) {
        let rs = build_e6();
        let once = divided_diff(&rs, i, &f).unwrap();
        prop_assert!(divided_diff(&rs, i, &once).unwrap().is_zero());
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).q(), x.q() * y.q());
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
        prop_assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
    }

    #[test]
    fn cell_points_have_rank_one(a in octonion(), b in octonion(), kind in 1u8..=3) {
        prop_assert!(rank_one_check(&cell_point(kind, &a, &b).unwrap()));
    }

    #[test]
    fn chow_ring_is_commutative_and_associative(
        (a, b, c) in (0usize..=5, 0usize..=5, 0usize..=6).prop_flat_map(|(x, y, z)| (class(x), class(y), class(z)))
    ) {
        let r = ring();
        let ab = r.multiply(&a, &b).class;
        prop_assert_eq!(&ab, &r.multiply(&b, &a).class);
        prop_assert_eq!(r.multiply(&ab, &c).class, r.multiply(&a, &r.multiply(&b, &c).class).class);
    }

    #[test]
    fn duality_pairs_complementary_classes(u in 0usize..27, pick in 0usize..3) {
        let r = ring();
        let d = &r.diagram;
        let n = d.len();
        let level = d.level(d.length(u));
        let v = level[pick % level.len()];
        let x = r.pairing(&ChowClass::schubert(n, u), &ChowClass::schubert(n, d.duality(v))).unwrap();
        prop_assert_eq!(x, if u == v { int(1) } else { Q::zero() });
        let dual_len = d.max_length() - d.length(u);
        let off = d.level(if dual_len > 0 { dual_len - 1 } else { 1 })[0];
        prop_assert!(r.pairing(&ChowClass::schubert(n, u), &ChowClass::schubert(n, off)).is_err());
    }
}

/// Nodes reachable from `start` through edges whose label is not `skip`.
fn subdiagram_levels(d: &WeightDiagram, start: usize, skip: usize) -> (Vec<usize>, u64) {
    let mut levels = vec![vec![start]];
    let mut paths = std::collections::HashMap::from([(start, 1u64)]);
    loop {
        let mut next: Vec<usize> = Vec::new();
        for &id in levels.last().unwrap() {
            for e in d.node(id).down.iter().filter(|e| e.label != skip) {
                *paths.entry(e.target).or_insert(0) += paths[&id];
                if !next.contains(&e.target) {
                    next.push(e.target);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let last = levels.last().unwrap()[0];
    (levels.iter().map(Vec::len).collect(), paths[&last])
}

#[test]
fn spinor_diagram_sits_below_the_first_step() {
    let op2 = cayley_plane();
    let s10 = spinor_variety();
    let first = op2.level(1)[0];
    let (sizes, paths) = subdiagram_levels(&op2, first, 6);
    assert_eq!(sizes, s10.level_sizes());
    assert_eq!(paths, s10.path_count(s10.top, s10.bottom));
    assert_eq!(sizes.iter().sum::<usize>(), 16);
}

#[test]
fn levels_are_symmetric_under_duality() {
    let d = cayley_plane();
    for id in 0..d.len() {
        assert_eq!(d.length(id) + d.length(d.duality(id)), d.max_length());
        assert_eq!(d.duality(d.duality(id)), id);
    }
}
