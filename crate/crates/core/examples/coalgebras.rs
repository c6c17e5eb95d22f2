//! The standard coalgebras, their certificates and convolution algebras.
use coduality::coalgebra::{by_name, dual_algebra};
use coduality::random::{mutate_coalgebra, rng_from_seed};
use coduality::FieldSpec;

fn main() {
    let q = FieldSpec::Rationals;
    for name in ["grouplike:3", "matrix:2", "divided_power:3", "trig"] {
        let c = by_name(q, name).unwrap();
        let a = dual_algebra(&c).unwrap();
        println!(
            "{name}: dim {} certified {} | dual algebra certified {} commutative {}",
            c.dim(),
            c.check().passed(),
            a.check().passed(),
            a.noncommuting_pair().is_none()
        );
    }

    // One changed entry and the certifier names the broken law.
    let mut rng = rng_from_seed(4);
    let c = by_name(q, "divided_power:2").unwrap();
    let (bad, m) = mutate_coalgebra(&mut rng, &c);
    println!("mutated entry ({}, {}) by {}:", m.row, m.col, m.delta);
    print!("{}", bad.check());
}
