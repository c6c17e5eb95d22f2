//! Cotensor products and their comparison with tensor products over C*.
use coduality::coalgebra::by_name;
use coduality::cotensor::{cotensor, cotensor_bicomodule, tensor_over_algebra, Bicomodule, RightComodule};
use coduality::duality::comodule_to_pcmodule;
use coduality::random::{comodule, right_comodule, rng_from_seed};
use coduality::FieldSpec;

fn main() {
    let c = by_name(FieldSpec::Rationals, "divided_power:2").unwrap();
    let mut rng = rng_from_seed(5);
    for _ in 0..4 {
        let l = right_comodule(&mut rng, &c, 3);
        let m = comodule(&mut rng, &c, 3);
        let s = cotensor(&l, &m).unwrap();
        let t = tensor_over_algebra(&l.dual_module().unwrap(), &comodule_to_pcmodule(&m).unwrap()).unwrap();
        println!("dim L = {}, dim M = {}: cotensor {} vs dual tensor {}", l.dim(), m.dim(), s.dim(), t.dim());
    }

    // C cotensor M is M again.
    let m = comodule(&mut rng, &c, 3);
    let s = cotensor(&RightComodule::regular(&c), &m).unwrap();
    println!("C cotensor M: {} = {}", s.dim(), m.dim());

    // Against a bicomodule the result is a right comodule again.
    let b = Bicomodule::regular(&c);
    let s = cotensor_bicomodule(&RightComodule::regular(&c), &b).unwrap();
    let induced = s.induced.unwrap();
    println!("C cotensor C = right comodule of dim {} certified {}", induced.dim(), induced.check().passed());
}
