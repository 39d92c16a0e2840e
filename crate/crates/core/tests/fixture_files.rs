//! The shipped `.nat` files describe exactly the structures the builders
//! produce.

mod common;

use nearalg::fixtures;
use nearalg::nat::{parse_nat, Structure, Workspace};
use nearalg::nearring::{dickson_fixture, hash_construction};

fn load(spec: &str) -> Structure {
    Workspace::new().resolve(&common::fixture(spec)).expect(spec)
}

fn module(spec: &str) -> nearalg::MModule {
    match load(spec) {
        Structure::Module(v) => v,
        other => panic!("{spec} is a {}", other.kind()),
    }
}

fn nearring_add(spec: &str) -> Vec<usize> {
    match load(spec) {
        Structure::NearRing(n) => n.additive().table().to_vec(),
        other => panic!("{spec} is a {}", other.kind()),
    }
}

#[test]
fn z9_file_matches_builders() {
    let text = std::fs::read_to_string(common::fixture("z9.nat")).unwrap();
    let doc = parse_nat(&text).unwrap();
    let names: Vec<&str> = doc.blocks.iter().map(|b| b.name.as_str()).collect();
    assert_eq!(names, ["M", "Plus", "Phi", "R", "V"]);
    assert_eq!(module("z9.nat:V"), fixtures::z9_product_module());
    assert_eq!(nearring_add("z9.nat:Phi"), fixtures::z9_twisted_ring().additive().table());
    match load("z9.nat:R") {
        Structure::MultiNearRing(r) => assert_eq!(r.len(), 2),
        other => panic!("R is a {}", other.kind()),
    }
}

#[test]
fn small_field_files_match_builders() {
    assert_eq!(module("m2.nat:Z4"), fixtures::z4_over_m2());
    assert_eq!(module("m2.nat:K4"), fixtures::klein_over_m2());
    for k in 1..=3 {
        let name = ["L", "V2", "V3"][k - 1];
        assert_eq!(module(&format!("m3.nat:{name}")), fixtures::gf_power_module(3, k as u32));
    }
    match load("m3.nat:P") {
        Structure::Morphism(f) => assert_eq!(f.map(), [0, 0, 0, 1, 1, 1, 2, 2, 2]),
        other => panic!("P is a {}", other.kind()),
    }
}

#[test]
fn dickson_quaternion_and_hash_files_match_builders() {
    assert_eq!(nearring_add("dickson.nat:J"), dickson_fixture().additive().table());
    assert_eq!(module("dickson.nat:JM"), fixtures::dickson_module());
    assert_eq!(module("dickson.nat:J2"), fixtures::dickson_square());
    match load("q8.nat:M") {
        Structure::Monoid(m) => {
            assert!(m.same_table(&fixtures::q8_zero_monoid()));
            assert_eq!(m.labels(), fixtures::q8_zero_monoid().labels());
        }
        other => panic!("M is a {}", other.kind()),
    }
    let h = hash_construction(&fixtures::zn_ring(2), 1).unwrap();
    assert_eq!(nearring_add("hash.nat:H"), h.additive().table());
    match load("hash.nat:M") {
        Structure::Monoid(m) => assert!(m.same_table(h.monoid())),
        other => panic!("M is a {}", other.kind()),
    }
}

#[test]
fn canonical_emission_round_trips_every_fixture() {
    for entry in std::fs::read_dir(common::fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "nat") {
            let doc = parse_nat(&std::fs::read_to_string(&path).unwrap()).unwrap();
            let text = doc.emit();
            assert_eq!(parse_nat(&text).unwrap().emit(), text, "{}", path.display());
        }
    }
}
