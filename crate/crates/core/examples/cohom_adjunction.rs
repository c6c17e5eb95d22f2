//! Cohom of a bicomodule and a contramodule, and the natural isomorphism
//! Hom_D(N, L cotensor M) = Hom_C(h(M, N), L).
use coduality::coalgebra::by_name;
use coduality::cohom::{adjunction_check, cohom, LMorphism, NMorphism};
use coduality::random::{
    bicomodule, contramodule, contramodule_extension, right_comodule, right_comodule_extension, rng_from_seed,
};
use coduality::FieldSpec;

const SEED: u64 = 8;

fn main() {
    let q = FieldSpec::Rationals;
    let c = by_name(q, "grouplike:2").unwrap();
    let d = by_name(q, "divided_power:1").unwrap();
    let mut rng = rng_from_seed(SEED);

    let m = bicomodule(&mut rng, &c, &d, 3);
    let n = contramodule(&mut rng, &d, 2);
    let h = cohom(&m, &n).unwrap();
    println!(
        "dim M = {}, dim N = {}: Hom_D(N, M) has dim {}, h(M, N) certified {}",
        m.dim(),
        n.dim(),
        h.hom_space.dim(),
        h.contramodule.check().passed()
    );

    let l = right_comodule(&mut rng, &c, 2);
    let (target, map) = right_comodule_extension(&mut rng, &l, 1);
    let (source, t) = contramodule_extension(&mut rng, &n, 1);
    let adj = adjunction_check(&l, &m, &n, &[LMorphism { target, map }], &[NMorphism { source, map: t }]).unwrap();
    println!("both sides have dim {} and {}", adj.lhs_dim, adj.rhs_dim);
    print!("{}", adj.checks);
}
