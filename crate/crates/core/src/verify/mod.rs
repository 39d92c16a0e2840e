//! Theorem suites over the built-in fixtures and seeded random corpora.
//!
//! Each suite returns a [`SuiteReport`]. Two kinds of bad outcome are kept
//! apart:
//!
//! * a *violation* means two independent computations in this crate
//!   disagree (library against oracle, certificate against re-check), which
//!   points at a bug;
//! * a *refuted claim* is a mathematical statement the suite tests that the
//!   certified computation shows to be false on a concrete instance, with
//!   the witness attached.

pub mod corpus;
pub mod oracle;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::andre::{
    check_andre, check_nvs, check_ring_module_equiv, check_tfae, quasi_kernel, AndreError, Decomposer,
    MultiNearRing,
};
use crate::enumerate::{enumerate_nearrings, oracle_enumerate_nearrings, EnumerationTask};
use crate::fixtures;
use crate::module::{enumerate_submodules, factorize, product, quotient, MModule, DEFAULT_SUBMODULE_BOUND};
use crate::monoid::FiniteMonoid;
use crate::nearring::{
    classify, dickson_fixture, gf9_field, hash_construction, transport_addition, verify_lema, NearRing,
};
use crate::report::Report;
use crate::ElementIndex;

/// Largest product carrier formed by the closure suite.
pub const MAX_PRODUCT_ORDER: usize = 729;

/// Names accepted by [`run_suite`], in acceptance order.
pub const SUITES: [&str; 11] = [
    "hash-example",
    "hash",
    "z9",
    "enumeration",
    "dickson",
    "lema",
    "closure",
    "oracle",
    "singleR",
    "andremodule",
    "kernels",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub subject: String,
    pub message: String,
    pub elements: Vec<ElementIndex>,
}

impl Violation {
    fn new(subject: impl Into<String>, message: impl Into<String>, elements: Vec<ElementIndex>) -> Self {
        Violation {
            subject: subject.into(),
            message: message.into(),
            elements,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    /// Number of instances examined.
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub refuted: Vec<Violation>,
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            checked: 0,
            violations: Vec::new(),
            refuted: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.refuted.is_empty()
    }

    fn violation(&mut self, subject: impl Into<String>, message: impl Into<String>, elements: Vec<ElementIndex>) {
        self.violations.push(Violation::new(subject, message, elements));
    }

    fn refute(&mut self, subject: impl Into<String>, message: impl Into<String>, elements: Vec<ElementIndex>) {
        self.refuted.push(Violation::new(subject, message, elements));
    }

    /// Folds the suite outcome into a command report.
    pub fn to_report(&self, command: &str) -> Report {
        let mut r = Report::new(command);
        for v in self.violations.iter().chain(&self.refuted) {
            r.witness(format!("{}: {}", v.subject, v.message), v.elements.iter().copied());
        }
        r.detail("suite", &self.name);
        r.detail("checked", self.checked);
        r.detail("violations", &self.violations);
        r.detail("refuted", &self.refuted);
        r.detail("notes", &self.notes);
        if !self.passed() {
            r.fail(format!(
                "{} violation(s), {} refuted claim(s)",
                self.violations.len(),
                self.refuted.len()
            ));
        }
        r.elapsed_ms = self.elapsed_ms;
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite {0:?}; expected one of {SUITES:?} or all")]
pub struct UnknownSuite(pub String);

/// Seed and optional extra structures for the suites.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Added to the `lema` corpus.
    pub extra_nearrings: Vec<NearRing>,
    /// Added to the `andremodule` corpus when their monoid is a scalar group.
    pub extra_modules: Vec<MModule>,
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport, UnknownSuite> {
    let start = Instant::now();
    let mut report = match name {
        "hash-example" => hash_example(),
        "hash" => hash_laws(),
        "z9" => z9_example(),
        "enumeration" => enumeration(),
        "dickson" => dickson(),
        "lema" => lema(opts),
        "closure" => closure(),
        "oracle" => oracle_suite(opts.seed),
        "singleR" => single_ring(opts.seed),
        "andremodule" => andre_module(opts),
        "kernels" => kernels(opts.seed),
        other => return Err(UnknownSuite(other.into())),
    };
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

/// Every suite in acceptance order.
pub fn run_all(opts: &SuiteOptions) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, opts).expect("listed suites exist"))
        .collect()
}

/// All near-rings on `m`, as one multi-near-ring.
pub fn enumerated_multinearring(m: &Arc<FiniteMonoid>) -> MultiNearRing {
    let result = enumerate_nearrings(&EnumerationTask::new(Arc::clone(m)))
        .expect("fixture monoids are within the enumeration bound");
    MultiNearRing::new(Arc::clone(m), result.nearrings()).expect("enumerated additions are distinct")
}

fn naive_pow(r: &NearRing, a: ElementIndex, n: u32) -> ElementIndex {
    (0..n).fold(r.one(), |acc, _| r.mul(acc, a))
}

fn hash_example() -> SuiteReport {
    let mut s = SuiteReport::new("hash-example");
    s.checked = 1;
    let built = match hash_construction(&fixtures::zn_ring(2), 1) {
        Ok(nr) => nr,
        Err(e) => {
            s.violation("Z/2 # 1", e.to_string(), vec![]);
            return s;
        }
    };
    // Pair (a, b) has index 2a + b.
    let (one_zero, one_one) = (2, 3);
    if !classify(&built).is_ring {
        s.refute("Z/2 # 1", "not a ring", vec![]);
    }
    let eta = built.monoid().eta_solutions();
    if eta != [one_zero, one_one] {
        s.refute("Z/2 # 1", "eta^2 = 1 has a different solution set", eta.clone());
    }
    let minus_one = eta.iter().copied().find(|&e| e != built.one());
    if minus_one != Some(one_one) {
        s.refute("Z/2 # 1", "-1 is not (1,1)", minus_one.into_iter().collect());
    }
    let neg = built.additive().neg(one_zero);
    if neg != one_zero || neg == one_one {
        s.refute("Z/2 # 1", "additive inverse of (1,0)", vec![neg]);
    }
    s
}

fn hash_laws() -> SuiteReport {
    let mut s = SuiteReport::new("hash");
    for k in [2, 3, 4, 6] {
        let r = fixtures::zn_ring(k);
        let size = r.order();
        for n in 1..=3 {
            s.checked += 1;
            let subject = format!("Z/{k} # {n}");
            let pairs = || (0..size).flat_map(|a| (0..size).map(move |c| (a, c)));
            let mult_law = pairs().find(|&(a, c)| {
                naive_pow(&r, r.mul(a, c), n) != r.mul(naive_pow(&r, a, n), naive_pow(&r, c, n))
            });
            let add_law = pairs().find(|&(a, c)| {
                naive_pow(&r, r.add(a, c), n) != r.add(naive_pow(&r, a, n), naive_pow(&r, c, n))
            });
            match (hash_construction(&r, n), mult_law) {
                (Ok(h), None) => {
                    let ring = classify(&h).is_ring;
                    if ring != add_law.is_none() {
                        let w = add_law.map(|(a, c)| vec![a, c]).unwrap_or_default();
                        s.refute(&subject, format!("ring = {ring} but additive power law holds = {}", add_law.is_none()), w);
                    }
                }
                (Err(_), Some(_)) => {}
                (Ok(_), Some((a, c))) => s.refute(&subject, "built although the power law fails", vec![a, c]),
                (Err(e), None) => s.refute(&subject, format!("power law holds but construction failed: {e}"), vec![]),
            }
        }
    }
    s
}

fn z9_example() -> SuiteReport {
    let mut s = SuiteReport::new("z9");
    s.checked = 3;
    if let Err(e) = transport_addition(&fixtures::zn_ring(9), &fixtures::z9_phi()) {
        s.violation("transport", e.to_string(), vec![]);
    }
    let v = fixtures::z9_product_module();
    let r = fixtures::z9_multinearring();
    match check_andre(&v, &r) {
        Ok(a) if a.is_andre => {}
        Ok(a) => s.refute(
            "check_andre(V)",
            format!("V is not Andre: |Q*| = {}, QK2 fails first at (m, n) = index 9m + n", a.qstar.len()),
            a.qk2_failure.into_iter().collect(),
        ),
        Err(e) => s.violation("check_andre(V)", e.to_string(), vec![]),
    }
    let nvs = check_nvs(&v);
    match &nvs.failure {
        Some(f) if !nvs.is_nvs => {
            let reason = f.describe(v.monoid());
            if reason != "non-invertible element [3]" {
                s.refute("check_nvs(V)", format!("unexpected witness {reason}"), vec![]);
            }
        }
        _ => s.refute("check_nvs(V)", "V is a near-vector space", vec![]),
    }
    s
}

fn enumeration() -> SuiteReport {
    let mut s = SuiteReport::new("enumeration");
    for (name, m) in fixtures::small_monoids() {
        s.checked += 1;
        let m = Arc::new(m);
        let fast = enumerate_nearrings(&EnumerationTask::new(Arc::clone(&m)));
        let slow = oracle_enumerate_nearrings(&m);
        match (fast, slow) {
            (Ok(f), Ok(o)) => {
                let mut a = f.additions.clone();
                let mut b = o.additions.clone();
                a.sort();
                b.sort();
                if a != b {
                    s.violation(name, format!("{} tables against oracle {}", a.len(), b.len()), vec![]);
                }
                let expected = match name {
                    "M2" | "M3" => Some(1),
                    _ => None,
                };
                if expected.is_some_and(|e| e != a.len()) {
                    s.refute(name, format!("{} near-rings, expected {:?}", a.len(), expected), vec![]);
                }
                s.notes.push(format!("{name}: {}", a.len()));
            }
            (f, o) => s.violation(name, format!("enumeration errors: {:?} / {:?}", f.err(), o.err()), vec![]),
        }
    }
    s
}

fn dickson() -> SuiteReport {
    let mut s = SuiteReport::new("dickson");
    let d = dickson_fixture();
    let c = classify(&d);
    s.checked += 1;
    if !c.is_nearfield || c.is_ring {
        s.refute("Dickson", format!("near-field = {}, ring = {}", c.is_nearfield, c.is_ring), vec![]);
    }
    let mut census = BTreeMap::new();
    for a in (0..d.order()).filter(|&a| a != d.zero()) {
        *census.entry(d.monoid().element_order(a).unwrap_or(0)).or_insert(0usize) += 1;
    }
    if census != BTreeMap::from([(1, 1), (2, 1), (4, 6)]) {
        s.refute("Dickson", format!("order census {census:?}"), vec![]);
    }
    for (name, v) in [("J", fixtures::dickson_module()), ("J²", fixtures::dickson_square())] {
        s.checked += 1;
        if let Some(f) = check_nvs(&v).failure {
            s.refute(name, f.describe(v.monoid()), vec![]);
        }
    }
    let j2 = fixtures::dickson_square();
    match enumerate_submodules(&j2, DEFAULT_SUBMODULE_BOUND) {
        Ok(subs) => {
            s.notes.push(format!("J² has {} submodules", subs.len()));
            for w in subs {
                s.checked += 1;
                let (wm, _) = j2.restrict(&w);
                if wm.group_closure(&quasi_kernel(&wm).qv).len() != wm.order() {
                    s.refute("submodule of J²", "not generated by its quasi-kernel", w.carrier().to_vec());
                }
            }
        }
        Err(e) => s.violation("J²", e.to_string(), vec![]),
    }
    s
}

/// Near-rings from the hash, ℤ/9, Dickson and enumeration corpora.
pub fn nearring_corpus() -> Vec<(String, NearRing)> {
    let mut out = Vec::new();
    for k in [2, 3, 4, 6] {
        out.push((format!("Z/{k}"), fixtures::zn_ring(k)));
        for n in 1..=3 {
            if let Ok(h) = hash_construction(&fixtures::zn_ring(k), n) {
                out.push((format!("Z/{k} # {n}"), h));
            }
        }
    }
    out.push(("Z/9".into(), fixtures::zn_ring(9)));
    out.push(("Z/9 twisted".into(), fixtures::z9_twisted_ring()));
    out.push(("Dickson".into(), dickson_fixture()));
    out.push(("GF(9)".into(), gf9_field()));
    out.push(("upper triangular".into(), fixtures::upper_triangular_z2()));
    let mut monoids: Vec<(String, FiniteMonoid)> = fixtures::small_monoids()
        .into_iter()
        .map(|(n, m)| (n.to_string(), m))
        .collect();
    monoids.push(("Dickson monoid".into(), (**dickson_fixture().monoid()).clone()));
    monoids.push(("Q8 with zero".into(), fixtures::q8_zero_monoid()));
    for (name, m) in monoids {
        let r = enumerated_multinearring(&Arc::new(m));
        for (i, nr) in r.designated().iter().enumerate() {
            out.push((format!("{name} addition {i}"), nr.clone()));
        }
    }
    out
}

fn lema(opts: &SuiteOptions) -> SuiteReport {
    let mut s = SuiteReport::new("lema");
    let mut corpus = nearring_corpus();
    corpus.extend(
        opts.extra_nearrings
            .iter()
            .enumerate()
            .map(|(i, n)| (format!("input near-ring {i}"), n.clone())),
    );
    for (name, nr) in corpus {
        s.checked += 1;
        if let Err(e) = verify_lema(&nr) {
            s.refute(name, e.to_string(), vec![]);
        }
    }
    s
}

struct Family {
    name: &'static str,
    r: MultiNearRing,
    bases: Vec<(&'static str, MModule)>,
}

fn closure_families() -> Vec<Family> {
    let z9 = fixtures::z9_multinearring();
    vec![
        Family {
            name: "Dickson",
            r: enumerated_multinearring(dickson_fixture().monoid()),
            bases: vec![("J²", fixtures::dickson_square())],
        },
        Family {
            name: "GF(3)",
            r: MultiNearRing::single(fixtures::zn_ring(3)),
            bases: vec![("GF(3)³", fixtures::gf_power_module(3, 3))],
        },
        Family {
            name: "Z/9",
            r: z9,
            bases: vec![
                ("V", fixtures::z9_product_module()),
                ("Z/9", fixtures::zn_ring(9).as_module()),
                ("Z/9 twisted", fixtures::z9_twisted_ring().as_module()),
            ],
        },
    ]
}

fn push_unique(list: &mut Vec<(String, MModule)>, name: String, v: MModule) {
    if !list.iter().any(|(_, w)| *w == v) {
        list.push((name, v));
    }
}

fn closure() -> SuiteReport {
    let mut s = SuiteReport::new("closure");
    for fam in closure_families() {
        let mut members: Vec<(String, MModule)> = Vec::new();
        for (base_name, base) in &fam.bases {
            push_unique(&mut members, base_name.to_string(), base.clone());
            let subs = match enumerate_submodules(base, DEFAULT_SUBMODULE_BOUND) {
                Ok(subs) => subs,
                Err(e) => {
                    s.violation(*base_name, e.to_string(), vec![]);
                    continue;
                }
            };
            for (i, w) in subs.iter().enumerate() {
                push_unique(&mut members, format!("{base_name} submodule {i}"), base.restrict(w).0);
                match quotient(base, w) {
                    Ok(q) => push_unique(&mut members, format!("{base_name} quotient {i}"), q.module),
                    Err(e) => s.violation(*base_name, e.to_string(), vec![]),
                }
            }
        }
        let verdicts: Vec<Result<Option<ElementIndex>, AndreError>> = members
            .par_iter()
            .map(|(_, v)| check_andre(v, &fam.r).map(|a| a.qk2_failure))
            .collect();
        let mut andre = Vec::new();
        for ((name, v), verdict) in members.iter().zip(verdicts) {
            s.checked += 1;
            match verdict {
                Ok(None) => andre.push(v),
                Ok(Some(x)) => s.refute(format!("{}: {name}", fam.name), "not Andre, QK2 fails", vec![x]),
                Err(e) => s.violation(name.clone(), e.to_string(), vec![]),
            }
        }
        let pairs: Vec<(usize, usize)> = (0..andre.len())
            .flat_map(|i| (i..andre.len()).map(move |j| (i, j)))
            .collect();
        let (small, large): (Vec<_>, Vec<_>) = pairs
            .into_iter()
            .partition(|&(i, j)| andre[i].order() * andre[j].order() <= MAX_PRODUCT_ORDER);
        if !large.is_empty() {
            s.notes.push(format!(
                "{}: {} product(s) above {MAX_PRODUCT_ORDER} elements skipped",
                fam.name,
                large.len()
            ));
        }
        let outcomes: Vec<(usize, usize, Result<Option<ElementIndex>, AndreError>)> = small
            .par_iter()
            .map(|&(i, j)| {
                let p = product(fam.r.monoid(), &[andre[i].clone(), andre[j].clone()]);
                let verdict = p
                    .map_err(AndreError::from)
                    .and_then(|p| check_andre(&p.module, &fam.r))
                    .map(|a| a.qk2_failure);
                (i, j, verdict)
            })
            .collect();
        s.notes.push(format!(
            "{}: {} Andre members, {} products",
            fam.name,
            andre.len(),
            outcomes.len()
        ));
        let find_name = |v: &MModule| {
            members
                .iter()
                .find(|(_, w)| w == v)
                .map(|(n, _)| n.clone())
                .unwrap_or_default()
        };
        for (i, j, verdict) in outcomes {
            s.checked += 1;
            let subject = format!("{}: {} × {}", fam.name, find_name(andre[i]), find_name(andre[j]));
            match verdict {
                Ok(None) => {}
                Ok(Some(x)) => s.refute(subject, "product of Andre modules is not Andre, QK2 fails", vec![x]),
                Err(e) => s.violation(subject, e.to_string(), vec![]),
            }
        }
    }
    s
}

/// The two oracle corpora with every admissible designated selection:
/// empty and the single ring on GF(2) or GF(3).
pub fn oracle_corpus(seed: u64) -> Vec<(String, MModule, MultiNearRing)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let m2 = corpus::m2_modules(6);
    let m3 = corpus::m3_random_modules(&mut rng, 120, 8);
    for (tag, list, ring) in [("M2", m2, fixtures::zn_ring(2)), ("M3", m3, fixtures::zn_ring(3))] {
        let selections = [
            MultiNearRing::new(Arc::clone(ring.monoid()), vec![]).expect("empty selection"),
            MultiNearRing::single(ring),
        ];
        for (i, v) in list.into_iter().enumerate() {
            for r in &selections {
                out.push((format!("{tag} module {i} with {} addition(s)", r.len()), v.clone(), r.clone()));
            }
        }
    }
    out
}

fn oracle_suite(seed: u64) -> SuiteReport {
    let mut s = SuiteReport::new("oracle");
    let corpus = oracle_corpus(seed);
    let results: Vec<Option<Violation>> = corpus
        .par_iter()
        .map(|(name, v, r)| {
            let fast = match check_andre(v, r) {
                Ok(a) => a,
                Err(e) => return Some(Violation::new(name.clone(), e.to_string(), vec![])),
            };
            let naive_qstar: Vec<ElementIndex> = (0..v.order())
                .filter(|&x| x == v.zero() || oracle::naive_qk1(v, r, x))
                .collect();
            if fast.qstar.to_vec() != naive_qstar {
                return Some(Violation::new(name.clone(), "Q* differs from the naive QK1 scan", naive_qstar));
            }
            let slow = oracle::andre_by_powerset(v, r, 8).expect("corpus modules have at most 8 elements");
            (fast.is_andre != slow).then(|| {
                Violation::new(
                    name.clone(),
                    format!("check_andre = {} but powerset search = {slow}", fast.is_andre),
                    fast.qk2_failure.into_iter().collect(),
                )
            })
        })
        .collect();
    s.checked = corpus.len();
    s.violations.extend(results.into_iter().flatten());
    s
}

fn single_ring(seed: u64) -> SuiteReport {
    let mut s = SuiteReport::new("singleR");
    for (name, v, r) in oracle_corpus(seed).into_iter().filter(|(_, _, r)| r.len() == 1) {
        s.checked += 1;
        match check_ring_module_equiv(&v, &r) {
            Ok(rep) if rep.andre == rep.distributive => {}
            Ok(rep) => s.refute(name, format!("Andre {} against distributive {}", rep.andre, rep.distributive), vec![]),
            Err(AndreError::TheoremViolation(m)) => s.refute(name, m, vec![]),
            Err(e) => s.violation(name, e.to_string(), vec![]),
        }
    }
    s
}

/// Modules over the scalar-group monoids GF(2), GF(3), the Dickson monoid
/// and Q8 with zero, each paired with every near-ring on its monoid.
pub fn scalar_group_corpus(seed: u64) -> Vec<(String, MModule, Arc<MultiNearRing>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5ca1_ab1e);
    let mut out = Vec::new();

    let r2 = Arc::new(enumerated_multinearring(fixtures::zn_ring(2).monoid()));
    let mut m2: Vec<(String, MModule)> = vec![
        ("Z/4".into(), fixtures::z4_over_m2()),
        ("Klein".into(), fixtures::klein_over_m2()),
        ("GF(2)³".into(), fixtures::gf_power_module(2, 3)),
    ];
    m2.extend(corpus::m2_modules(6).into_iter().enumerate().map(|(i, v)| (format!("M2 module {i}"), v)));

    let r3 = Arc::new(enumerated_multinearring(fixtures::zn_ring(3).monoid()));
    let mut m3: Vec<(String, MModule)> = (1..=3)
        .map(|k| (format!("GF(3)^{k}"), fixtures::gf_power_module(3, k)))
        .collect();
    m3.extend(
        corpus::m3_random_modules(&mut rng, 30, 8)
            .into_iter()
            .enumerate()
            .map(|(i, v)| (format!("M3 module {i}"), v)),
    );

    let (rd, mixed) = fixtures::dickson_mixed_pair();
    let rd = Arc::new(rd);
    let dickson = vec![
        ("J".to_string(), fixtures::dickson_module()),
        ("J²".to_string(), fixtures::dickson_square()),
        ("J × J'".to_string(), mixed),
    ];

    let q8 = Arc::new(fixtures::q8_zero_monoid());
    let rq = Arc::new(enumerated_multinearring(&q8));
    let mut quaternion: Vec<(String, MModule)> = rq
        .designated()
        .iter()
        .enumerate()
        .map(|(i, n)| (format!("Q8 near-ring {i}"), n.as_module()))
        .collect();
    if let [a, b, ..] = rq.designated() {
        let p = product(&q8, &[a.as_module(), b.as_module()]).expect("same monoid");
        quaternion.push(("Q8 near-rings 0 × 1".into(), p.module));
    }

    for (list, r) in [(m2, r2), (m3, r3), (dickson, rd), (quaternion, rq)] {
        out.extend(list.into_iter().map(|(n, v)| (n, v, Arc::clone(&r))));
    }
    out
}

fn andre_module(opts: &SuiteOptions) -> SuiteReport {
    let mut s = SuiteReport::new("andremodule");
    let mut corpus = scalar_group_corpus(opts.seed);
    for (i, v) in opts.extra_modules.iter().enumerate() {
        if crate::monoid::check_scalar_group(v.monoid()).is_scalar_group {
            let r = Arc::new(enumerated_multinearring(v.monoid()));
            corpus.push((format!("input module {i}"), v.clone(), r));
        } else {
            s.notes.push(format!("input module {i} skipped: monoid is not a scalar group"));
        }
    }
    let outcomes: Vec<(usize, Vec<Violation>, Vec<Violation>)> = corpus
        .par_iter()
        .map(|(name, v, r)| andre_module_instance(name, v, r))
        .collect();
    for (n, bad, refuted) in outcomes {
        s.checked += n;
        s.violations.extend(bad);
        s.refuted.extend(refuted);
    }
    s
}

/// Returns the number of checks made, violations and refuted claims.
fn andre_module_instance(name: &str, v: &MModule, r: &MultiNearRing) -> (usize, Vec<Violation>, Vec<Violation>) {
    let mut bad = Vec::new();
    let mut refuted = Vec::new();
    let mut checked = 1;
    let nvs = check_nvs(v);
    let andre = match check_andre(v, r) {
        Ok(a) => a,
        Err(e) => return (checked, vec![Violation::new(name, e.to_string(), vec![])], refuted),
    };
    if nvs.is_nvs != andre.is_andre {
        refuted.push(Violation::new(
            name,
            format!("near-vector space = {} but Andre = {}", nvs.is_nvs, andre.is_andre),
            andre.qk2_failure.into_iter().collect(),
        ));
    }
    if !nvs.is_nvs {
        return (checked, bad, refuted);
    }
    checked += 1;
    match check_tfae(v) {
        Ok(t) if t.submodules_generated && t.orbit_form && t.direct_form && t.closures_agree => {}
        Ok(t) => refuted.push(Violation::new(name, format!("TFAE conditions disagree: {t:?}"), vec![])),
        Err(e) => refuted.push(Violation::new(name, e.to_string(), vec![])),
    }
    let dec = match Decomposer::new(v, r) {
        Ok(d) => d,
        Err(e) => {
            refuted.push(Violation::new(name, format!("decomposition hypotheses: {e}"), vec![]));
            return (checked, bad, refuted);
        }
    };
    let oracle_lengths = oracle::layered_sum_lengths(v, &oracle::naive_quasi_kernel(v));
    for x in 0..v.order() {
        checked += 1;
        match dec.decompose(x) {
            Ok(cert) => {
                if let Err(m) = cert.validate(v) {
                    bad.push(Violation::new(name, format!("certificate for {x}: {m}"), vec![x]));
                } else if oracle_lengths[x] != Some(cert.m_v) {
                    bad.push(Violation::new(
                        name,
                        format!("m_v = {} but layered sums give {:?}", cert.m_v, oracle_lengths[x]),
                        vec![x],
                    ));
                }
            }
            Err(e) => refuted.push(Violation::new(name, format!("decompose {x}: {e}"), vec![x])),
        }
    }
    (checked, bad, refuted)
}

/// Andre fixture modules grouped by their multi-near-ring.
pub fn morphism_families() -> Vec<(MultiNearRing, Vec<(&'static str, MModule)>)> {
    vec![
        (
            MultiNearRing::single(fixtures::zn_ring(3)),
            vec![
                ("GF(3)", fixtures::gf_power_module(3, 1)),
                ("GF(3)²", fixtures::gf_power_module(3, 2)),
                ("GF(3)³", fixtures::gf_power_module(3, 3)),
            ],
        ),
        (
            enumerated_multinearring(dickson_fixture().monoid()),
            vec![("J", fixtures::dickson_module()), ("J²", fixtures::dickson_square())],
        ),
        (
            fixtures::z9_multinearring(),
            vec![
                ("Z/9", fixtures::zn_ring(9).as_module()),
                ("Z/9 twisted", fixtures::z9_twisted_ring().as_module()),
            ],
        ),
    ]
}

fn kernels(seed: u64) -> SuiteReport {
    const MORPHISMS: usize = 60;
    let mut s = SuiteReport::new("kernels");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let families = morphism_families();
    let mut zero_maps = 0;
    for _ in 0..MORPHISMS {
        let (r, mods) = families.choose(&mut rng).expect("non-empty");
        let (dn, dom) = mods.choose(&mut rng).expect("non-empty");
        let (cn, cod) = mods.choose(&mut rng).expect("non-empty");
        let f = corpus::random_morphism(dom, cod, &mut rng, 64);
        let subject = format!("{dn} → {cn} {:?}", f.map());
        s.checked += 1;
        if f.map().iter().all(|&y| y == cod.zero()) {
            zero_maps += 1;
        }
        let fac = match factorize(&f) {
            Ok(fac) => fac,
            Err(e) => {
                s.violation(subject, e.to_string(), vec![]);
                continue;
            }
        };
        if dom.order() != fac.kernel.len() * fac.image.len() {
            s.violation(
                &subject,
                format!("|dom| = {} but |ker|·|im| = {}·{}", dom.order(), fac.kernel.len(), fac.image.len()),
                vec![],
            );
        }
        let (kernel, _) = dom.restrict(&fac.kernel);
        for (part, module) in [("kernel", &kernel), ("cokernel", &fac.cokernel.module)] {
            match check_andre(module, r) {
                Ok(a) if a.is_andre => {}
                Ok(a) => s.refute(&subject, format!("{part} is not Andre"), a.qk2_failure.into_iter().collect()),
                Err(e) => s.violation(&subject, e.to_string(), vec![]),
            }
        }
    }
    s.notes.push(format!("{zero_maps} of {MORPHISMS} morphisms are zero maps"));
    s
}
