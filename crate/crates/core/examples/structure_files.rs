//! Reading and writing structure files.
//!
//! `cargo run --example structure_files -- DIR` also writes a few
//! standard structures into DIR.
use coduality::coalgebra::{by_name, dual_algebra};
use coduality::cotensor::{Bicomodule, RightComodule};
use coduality::duality::comodule_to_contramodule;
use coduality::format::{emit, parse_str, Structure};
use coduality::{Comodule, FieldSpec};

fn main() {
    let q = FieldSpec::Rationals;
    let c = by_name(q, "matrix:2").unwrap();
    let text = emit(&Structure::Coalgebra(c.clone()));
    let back = parse_str(&text, None).unwrap();
    assert_eq!(back, Structure::Coalgebra(c.clone()));
    println!("{}", text.lines().take(8).collect::<Vec<_>>().join("\n"));
    println!("  ...");

    let bad = r#"{"format_version": 1, "kind": "coalgebra", "field": {"type": "GF", "p": 3},
                 "dim": 1, "delta": [[5]], "eps": [[1]]}"#;
    println!("rejected: {}", parse_str(bad, None).unwrap_err());

    if let Some(dir) = std::env::args().nth(1) {
        let dir = std::path::Path::new(&dir);
        std::fs::create_dir_all(dir).unwrap();
        let g = by_name(q, "grouplike:2").unwrap();
        let files = [
            ("matrix_coalgebra_2.json", Structure::Coalgebra(c.clone())),
            ("grouplike_2.json", Structure::Coalgebra(g.clone())),
            ("matrix_algebra_2.json", Structure::Algebra(dual_algebra(&c).unwrap())),
            ("regular_comodule_grouplike_2.json", Structure::Comodule(Comodule::regular(&g))),
            ("regular_right_comodule_grouplike_2.json", Structure::RightComodule(RightComodule::regular(&g))),
            ("regular_contramodule_grouplike_2.json", Structure::Contramodule(comodule_to_contramodule(&Comodule::regular(&g)))),
            ("regular_bicomodule_grouplike_2.json", Structure::Bicomodule(Bicomodule::regular(&g))),
        ];
        for (name, s) in files {
            std::fs::write(dir.join(name), emit(&s)).unwrap();
            println!("wrote {}", dir.join(name).display());
        }
    }
}
