//! Writing, parsing and loading `.nat` documents, and indexing a directory.
//!
//! Run with `cargo run --example nat_format`.

use std::path::Path;

use nearalg::catalog;
use nearalg::fixtures;
use nearalg::nat::{parse_nat, NatBlock, NatDocument, Structure, Workspace};

fn main() {
    let v = fixtures::z4_over_m2();
    let mut doc = NatDocument::default();
    doc.push(NatBlock::from_monoid("M", v.monoid())).expect("fresh name");
    doc.push(NatBlock::from_module("Z4", "M", &v)).expect("fresh name");
    let text = doc.emit();
    println!("{text}");
    assert_eq!(parse_nat(&text).expect("canonical text parses").emit(), text);

    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut ws = Workspace::new();
    match ws.resolve(dir.join("z9.nat:V").to_str().expect("utf-8 path")) {
        Ok(Structure::Module(m)) => println!("z9.nat:V is a module with {} elements", m.order()),
        other => println!("unexpected: {other:?}"),
    }

    let rows = catalog::collect(&dir).expect("fixtures parse");
    println!("\n{}", catalog::HEADER);
    for r in rows {
        println!("{}\t{}\t{}\t{}…\t{}", r.name, r.kind, r.order, &r.content_hash[..12], r.source_file);
    }
}
