use op2_chow::borel::BorelEngine;
use op2_chow::chowring::ChowRing;

#[test]
fn solver_table_matches_borel_products() {
    let ring = ChowRing::cayley().unwrap();
    let engine = BorelEngine::cayley().unwrap();
    let n = ring.len();
    let mut mismatches = Vec::new();
    for u in 0..n {
        for v in u..n {
            let b = engine.multiply_borel(u, v).unwrap();
            if &b != ring.multiply_schubert(u, v) {
                mismatches.push((ring.names.name(u).to_string(), ring.names.name(v).to_string()));
            }
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:?}");
}
