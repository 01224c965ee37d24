//! End-to-end checks with their expected values, shared by the test suite
//! and the `selftest` command.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::borel::{generator, quadratic_w_invariant, BorelEngine, Invariant, Monomial, Poly, PointFunctional};
use crate::bundles::{chern_normal, chern_projected, degree_y8_from_segre, segre_projected};
use crate::chowring::{times_h_power, ChowClass, ChowRing};
use crate::jordan;
use crate::minuscule::{cayley_plane, spinor_variety};
use crate::rational::{frac, int};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "diagram shape"),
    (2, "degrees"),
    (3, "pieri table"),
    (4, "structure constants"),
    (5, "invariant expansions"),
    (6, "two-engine agreement"),
    (7, "normal bundle chern classes"),
    (8, "projected bundle chern classes"),
    (9, "segre classes"),
    (10, "degree of Y8"),
    (11, "property suites"),
];

/// `σ_w H^k` cases: (w, k, expected).
pub const PIERI: [(&str, usize, &str); 6] = [
    ("s0", 4, "s4p + s4pp"),
    ("s4p", 4, "s8 + 3*s8p + 2*s8pp"),
    ("s4pp", 4, "s8 + 4*s8p + 3*s8pp"),
    ("s8", 4, "s12p + s12pp"),
    ("s8p", 4, "3*s12p + 4*s12pp"),
    ("s8pp", 4, "2*s12p + 3*s12pp"),
];

/// Products of Schubert classes: (a, b, expected).
pub const PRODUCTS: [(&str, &str, &str); 20] = [
    ("s8", "s8", "s16"),
    ("s4p", "s8", "s12p"),
    ("s4pp", "s8", "s12pp"),
    ("s8p", "s8p", "s16"),
    ("s8pp", "s8pp", "s16"),
    ("s8", "s8p", ""),
    ("s8p", "s8pp", ""),
    ("s8", "s8pp", ""),
    ("s4p", "s12p", "s16"),
    ("s4pp", "s12pp", "s16"),
    ("s4p", "s12pp", ""),
    ("s4pp", "s12p", ""),
    ("s4p", "s4p", "s8 + s8p + s8pp"),
    ("s4pp", "s4pp", "s8 + 2*s8p + 2*s8pp"),
    ("s4p", "s4pp", "2*s8p + s8pp"),
    ("s4p", "s8p", "s12p + 2*s12pp"),
    ("s4p", "s8pp", "s12p + s12pp"),
    ("s4pp", "s8p", "2*s12p + 2*s12pp"),
    ("s4pp", "s8pp", "s12p + 2*s12pp"),
    ("s1", "s7p", "s8 + s8p"),
];

/// Expansions of the invariant generators.
pub const INVARIANTS: [(&str, &str); 6] = [
    ("H", "s1"),
    ("e2", "-3/4*s2"),
    ("e4", "-27/8*s4p + 21/8*s4pp"),
    ("e5", "3/16*s5p + -21/32*s5pp"),
    ("e6", "-27/16*s6p + 87/32*s6pp"),
    ("e8", "21/128*s8 + 291/256*s8p + -519/256*s8pp"),
];

/// `c_k(N)` as (class, power of H to multiply by).
pub const CHERN_NORMAL: [(&str, usize); 10] = [
    ("15*s1", 0),
    ("102*s1", 1),
    ("414*s1", 2),
    ("1107*s4p + 1113*s4pp", 0),
    ("2025*s4p + 2079*s4pp", 1),
    ("5292*s6p + 8034*s6pp", 0),
    ("4698*s6p + 7218*s6pp", 1),
    ("2751*s8 + 9786*s8p + 7032*s8pp", 0),
    ("963*s8 + 3438*s8p + 2466*s8pp", 1),
    ("153*s8 + 549*s8p + 387*s8pp", 2),
];

/// `c_k(N̄)`, in the same form; the tenth entry must vanish.
pub const CHERN_PROJECTED: [(&str, usize); 10] = [
    ("14*s1", 0),
    ("88*s1", 1),
    ("326*s1", 2),
    ("781*s4p + 787*s4pp", 0),
    ("2536*s5p + 1292*s5pp", 0),
    ("2756*s6p + 4206*s6pp", 0),
    ("1942*s7p + 4954*s7pp", 0),
    ("809*s8 + 2890*s8p + 2078*s8pp", 0),
    ("702*s9p + 936*s9pp", 0),
    ("", 0),
];

/// `s_1 .. s_15` of `N̄`.
pub const SEGRE: [(&str, usize); 15] = [
    ("14*s1", 0),
    ("108*s1", 1),
    ("606*s1", 2),
    ("2763*s4p + 2757*s4pp", 0),
    ("21624*s5p + 10752*s5pp", 0),
    ("75492*s6p + 112602*s6pp", 0),
    ("240534*s7p + 596598*s7pp", 0),
    ("711489*s8 + 2462397*s8p + 1750947*s8pp", 0),
    ("8768196*s9p + 11600304*s9pp", 0),
    ("53127900*s10p + 30193704*s10pp", 0),
    ("206857602*s11p + 74823228*s11pp", 0),
    ("491985531*s12p + 669523221*s12pp", 0),
    ("2657712312*s13", 0),
    ("5875513812*s14", 0),
    ("12591161406*s15", 0),
];

pub const DEGREE_Y8: u64 = 1_047_361_761;

/// Cap on reduced words compared per node.
pub const WORD_CAP: usize = 100;

pub struct Context {
    pub ring: ChowRing,
    pub engine: BorelEngine,
    pub seed: u64,
    pub samples: usize,
}

impl Context {
    pub fn new() -> Result<Self> {
        Ok(Self {
            ring: ChowRing::cayley()?,
            engine: BorelEngine::cayley()?,
            seed: 2024,
            samples: 1000,
        })
    }

    fn class(&self, text: &str, h: usize) -> Result<ChowClass> {
        let c = self.ring.parse_class(text)?;
        Ok(times_h_power(&self.ring.diagram, &c, h))
    }

    fn fmt(&self, c: &ChowClass) -> String {
        c.format(&self.ring.names)
    }
}

fn outcome(id: u8, failures: Vec<String>, ok_detail: String) -> CriterionResult {
    let name = CRITERIA[id as usize - 1].1;
    let passed = failures.is_empty();
    CriterionResult {
        id,
        name,
        passed,
        detail: if passed { ok_detail } else { failures.join("; ") },
    }
}

fn errored(id: u8, e: crate::Error) -> CriterionResult {
    outcome(id, vec![format!("error: {e}")], String::new())
}

pub fn run(ctx: &Context, id: u8) -> CriterionResult {
    let r = match id {
        1 => diagram_shape(),
        2 => degrees(ctx),
        3 => pieri(ctx),
        4 => structure_constants(ctx),
        5 => invariant_expansions(ctx),
        6 => two_engines(ctx),
        7 => normal_bundle(ctx),
        8 => projected_bundle(ctx),
        9 => segre(ctx),
        10 => degree(ctx),
        11 => properties(ctx),
        _ => Ok(outcome(1, vec![format!("no criterion {id}")], String::new())),
    };
    r.unwrap_or_else(|e| errored(id, e))
}

pub fn run_all(ctx: &Context) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&(id, _)| run(ctx, id)).collect()
}

fn diagram_shape() -> Result<CriterionResult> {
    let d = cayley_plane();
    let sizes = d.level_sizes();
    let expected = [1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1];
    let mut failures = Vec::new();
    if d.len() != 27 {
        failures.push(format!("{} nodes", d.len()));
    }
    if sizes != expected {
        failures.push(format!("levels {sizes:?}"));
    }
    Ok(outcome(1, failures, format!("27 nodes, levels {sizes:?}")))
}

fn degrees(ctx: &Context) -> Result<CriterionResult> {
    let d = &ctx.ring.diagram;
    let n = &ctx.ring.names;
    let s10 = spinor_variety();
    let got = [
        ("deg OP2", d.degree(d.top), 78),
        ("deg s4p", d.degree(n.id("s4p")?), 33),
        ("deg s4pp", d.degree(n.id("s4pp")?), 45),
        ("S10 paths", s10.path_count(s10.top, s10.bottom), 12),
    ];
    let failures = got
        .iter()
        .filter(|(_, g, e)| g != e)
        .map(|(l, g, e)| format!("{l} = {g}, expected {e}"))
        .collect();
    let detail = got.iter().map(|(l, g, _)| format!("{l} = {g}")).collect::<Vec<_>>().join(", ");
    Ok(outcome(2, failures, detail))
}

fn pieri(ctx: &Context) -> Result<CriterionResult> {
    let mut failures = Vec::new();
    for (w, k, expected) in PIERI {
        let got = ctx.ring.pieri_hk(ctx.ring.names.id(w)?, k);
        if got != ctx.class(expected, 0)? {
            failures.push(format!("{w}*H^{k} = {}", ctx.fmt(&got)));
        }
    }
    Ok(outcome(3, failures, format!("{} relations", PIERI.len())))
}

fn structure_constants(ctx: &Context) -> Result<CriterionResult> {
    let mut failures = Vec::new();
    let rep = &ctx.ring.quartic.report;
    if rep.line_coeffs != [0, 7, 5] || rep.line_rhs != 19 {
        failures.push(format!("line {:?} = {}", rep.line_coeffs, rep.line_rhs));
    }
    if rep.gamma != [0, 2, 1] || rep.mu != [1, 1, 1] || rep.nu != [1, 2, 2] {
        failures.push(format!("gamma {:?} mu {:?} nu {:?}", rep.gamma, rep.mu, rep.nu));
    }
    for (a, b, expected) in PRODUCTS {
        let got = ctx.ring.multiply(&ctx.ring.class(a)?, &ctx.ring.class(b)?).class;
        if got != ctx.class(expected, 0)? {
            failures.push(format!("{a}*{b} = {}", ctx.fmt(&got)));
        }
    }
    Ok(outcome(
        4,
        failures,
        format!(
            "7g1 + 5g2 = 19 gives g = ({}, {}), {} products",
            rep.gamma[1],
            rep.gamma[2],
            PRODUCTS.len()
        ),
    ))
}

fn invariant_expansions(ctx: &Context) -> Result<CriterionResult> {
    let mut failures = Vec::new();
    for ((g, got), (name, expected)) in ctx.engine.invariant_expansions()?.iter().zip(INVARIANTS) {
        debug_assert_eq!(g.name(), name);
        if got != &ctx.class(expected, 0)? {
            failures.push(format!("{name} = {}", ctx.fmt(got)));
        }
    }
    let e8 = ctx.fmt(&ctx.class(INVARIANTS[5].1, 0)?);
    Ok(outcome(5, failures, format!("e8 = {e8}")))
}

fn two_engines(ctx: &Context) -> Result<CriterionResult> {
    let n = ctx.ring.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(u, v)| match ctx.engine.multiply_borel(u, v) {
            Ok(b) if &b == ctx.ring.multiply_schubert(u, v) => None,
            Ok(b) => Some(format!(
                "{}*{}: borel {}",
                ctx.ring.names.name(u),
                ctx.ring.names.name(v),
                ctx.fmt(&b)
            )),
            Err(e) => Some(format!("{e}")),
        })
        .collect();
    Ok(outcome(6, failures, format!("{} ordered pairs agree", pairs.len())))
}

fn compare_list(
    ctx: &Context,
    label: &str,
    got: &[ChowClass],
    expected: &[(&str, usize)],
    offset: usize,
) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for (k, (text, h)) in expected.iter().enumerate() {
        let want = ctx.class(text, *h)?;
        match got.get(k + offset) {
            Some(c) if *c == want => {}
            Some(c) => failures.push(format!("{label}{} = {}", k + offset, ctx.fmt(c))),
            None if want.is_zero() => {}
            None => failures.push(format!("{label}{} missing", k + offset)),
        }
    }
    Ok(failures)
}

fn normal_bundle(ctx: &Context) -> Result<CriterionResult> {
    let c = chern_normal(&ctx.engine)?;
    let mut failures = compare_list(ctx, "c", &c.classes, &CHERN_NORMAL, 1)?;
    if !c.classes.iter().all(ChowClass::is_integral) {
        failures.push("non-integral coefficient".into());
    }
    Ok(outcome(7, failures, format!("c4 = {}", ctx.fmt(&c.classes[4]))))
}

fn projected_bundle(ctx: &Context) -> Result<CriterionResult> {
    let n = chern_normal(&ctx.engine)?;
    // chern_projected fails outright unless the degree-10 part vanishes.
    let c = chern_projected(&ctx.engine, &n)?;
    let failures = compare_list(ctx, "cbar", &c.classes, &CHERN_PROJECTED, 1)?;
    Ok(outcome(
        8,
        failures,
        format!("c5 = {}, c10 = 0", ctx.fmt(&c.classes[5])),
    ))
}

fn segre(ctx: &Context) -> Result<CriterionResult> {
    let s = segre_projected(&ctx.engine)?;
    let failures = compare_list(ctx, "s", &s, &SEGRE, 1)?;
    Ok(outcome(9, failures, format!("s15 = {}", ctx.fmt(&s[15]))))
}

fn degree(ctx: &Context) -> Result<CriterionResult> {
    let s = segre_projected(&ctx.engine)?;
    let d = degree_y8_from_segre(&ctx.engine, &s)?;
    let failures = if d.total == BigInt::from(DEGREE_Y8) {
        vec![]
    } else {
        vec![format!("deg Y8 = {}", d.total)]
    };
    Ok(outcome(10, failures, format!("deg Y8 = {}", d.total)))
}

/// Reduced words of one element must give the same evaluation functional.
pub fn word_independence(engine: &BorelEngine, cap: usize) -> Result<(usize, Vec<String>)> {
    let d = &engine.diagram;
    let rs = &d.root_system;
    let base = crate::borel::regular_point(rs);
    let per_node: Vec<Result<(usize, Vec<String>)>> = (0..d.len())
        .into_par_iter()
        .map(|w| {
            let words = d.reduced_words(w, cap);
            let reference = engine.functional(w);
            let mut bad = Vec::new();
            for word in &words {
                if PointFunctional::new(rs, word, &base)? != *reference {
                    bad.push(format!("node {w} word {word:?}"));
                }
            }
            Ok((words.len(), bad))
        })
        .collect();
    let mut total = 0;
    let mut failures = Vec::new();
    for r in per_node {
        let (n, bad) = r?;
        total += n;
        failures.extend(bad);
    }
    Ok((total, failures))
}

/// `∂_w (g h) = 0` for the quadratic `W`-invariant `g` and random `h`.
pub fn representative_independence(engine: &BorelEngine, rng: &mut StdRng) -> Vec<String> {
    let d = &engine.diagram;
    let g = quadratic_w_invariant();
    let mut failures = Vec::new();
    for w in 0..d.len() {
        let len = d.length(w);
        if len < 2 {
            continue;
        }
        let h = random_homogeneous(rng, len - 2, 4);
        let gh = &g * &h;
        let value = engine.functional(w).apply(|p| gh.eval(p));
        if !value.is_zero() {
            failures.push(format!("node {w}: {value}"));
        }
        // Shifting a representative by an ideal element leaves its class unchanged.
        let shift = &casimir_generators() * &random_generator_poly(rng, len - 2);
        let shifted = &engine.representative(w) + &shift;
        match engine.expand_generator_poly(&shifted) {
            Ok(c) if c == ChowClass::schubert(d.len(), w) => {}
            Ok(c) => failures.push(format!("shifted representative of node {w}: {:?}", c.coeffs())),
            Err(e) => failures.push(format!("node {w}: {e}")),
        }
    }
    failures
}

/// The quadratic `W`-invariant in generator form: `Σ x_j² + x6²/3 = e2 + (3/4) H²`.
pub fn casimir_generators() -> Poly {
    &generator(Invariant::E2) + &generator(Invariant::H).pow(2).scale(&frac(3, 4))
}

/// Random combination of generator monomials of weighted degree `degree`.
fn random_generator_poly(rng: &mut StdRng, degree: usize) -> Poly {
    let mut out = Poly::zero();
    for _ in 0..3 {
        let mut e = [0u8; 6];
        let mut left = degree;
        while left > 0 {
            let g = Invariant::ALL[rng.gen_range(0..6)];
            if g.degree() <= left {
                e[g.index()] += 1;
                left -= g.degree();
            }
        }
        out.add_term(Monomial(e), int(rng.gen_range(-5..=5)));
    }
    out
}

fn random_homogeneous(rng: &mut StdRng, degree: usize, terms: usize) -> Poly {
    let mut out = Poly::zero();
    for _ in 0..terms {
        let mut e = [0u8; 6];
        for _ in 0..degree {
            e[rng.gen_range(0..6)] += 1;
        }
        out.add_term(Monomial(e), int(rng.gen_range(-5..=5)));
    }
    out
}

/// `(ab)c = a(bc)` for every triple of Schubert classes of total codimension at most 16.
pub fn associativity(ring: &ChowRing) -> (usize, Vec<String>) {
    let d = &ring.diagram;
    let n = ring.len();
    let results: Vec<(usize, Vec<String>)> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut count = 0;
            let mut bad = Vec::new();
            for b in 0..n {
                for c in 0..n {
                    if d.length(a) + d.length(b) + d.length(c) > d.max_length() {
                        continue;
                    }
                    count += 1;
                    let left = ring.multiply(ring.multiply_schubert(a, b), &ChowClass::schubert(n, c)).class;
                    let right = ring.multiply(&ChowClass::schubert(n, a), ring.multiply_schubert(b, c)).class;
                    if left != right {
                        bad.push(format!("({a},{b},{c})"));
                    }
                }
            }
            (count, bad)
        })
        .collect();
    results.into_iter().fold((0, Vec::new()), |(n, mut f), (c, b)| {
        f.extend(b);
        (n + c, f)
    })
}

fn properties(ctx: &Context) -> Result<CriterionResult> {
    let mut failures = Vec::new();
    let (words, bad) = word_independence(&ctx.engine, WORD_CAP)?;
    failures.extend(bad);
    let mut rng = StdRng::seed_from_u64(ctx.seed);
    failures.extend(representative_independence(&ctx.engine, &mut rng));
    let (triples, bad) = associativity(&ctx.ring);
    failures.extend(bad);
    let jt = jordan::self_test(&mut rng, ctx.samples);
    if !jt.passed() {
        failures.push(format!("jordan {jt:?}"));
    }
    Ok(outcome(
        11,
        failures,
        format!(
            "{words} reduced words, {triples} triples, {} octonion samples",
            jt.samples
        ),
    ))
}
