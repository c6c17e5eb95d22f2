//! Finite towers of contramodules and their inverse limits.
use coduality::coalgebra::by_name;
use coduality::random::{rng_from_seed, tower};
use coduality::tower::{check_top_isomorphism, limit_cone};
use coduality::FieldSpec;

fn main() {
    let c = by_name(FieldSpec::Rationals, "divided_power:3").unwrap();
    let mut rng = rng_from_seed(2);
    for length in 0..4 {
        let t = tower(&mut rng, &c, 4, length);
        let dims: Vec<usize> = t.levels().iter().map(|z| z.dim()).collect();
        let cone = limit_cone(&t).unwrap();
        let iso = check_top_isomorphism(&t, &cone).unwrap();
        println!(
            "levels {:?}: limit dim {}, certified {}, top isomorphism {}",
            dims,
            cone.limit.dim(),
            cone.limit.check().passed(),
            iso.passed()
        );
    }
}
