//! The four categories and the arrows between them: comodules,
//! contramodules, pseudocompact left C*-modules and discrete right
//! C*-modules.
use coduality::coalgebra::by_name;
use coduality::duality::{
    comodule_to_contramodule, comodule_to_pcmodule, dmodule_to_contramodule, dmodule_to_pcmodule,
    pcmodule_to_comodule, pcmodule_to_dmodule,
};
use coduality::random::{comodule, rng_from_seed};
use coduality::FieldSpec;

fn main() {
    let c = by_name(FieldSpec::prime(5).unwrap(), "matrix:2").unwrap();
    let mut rng = rng_from_seed(11);
    let x = comodule(&mut rng, &c, 4);
    println!("comodule of dim {} certified {}", x.dim(), x.check().passed());

    let z = comodule_to_contramodule(&x);
    println!("dual contramodule certified {}", z.check().passed());

    let pc = comodule_to_pcmodule(&x).unwrap();
    let d = pcmodule_to_dmodule(&pc);
    println!("left C*-module certified {}, right C*-module certified {}", pc.check().passed(), d.check().passed());

    // Direct arrow against the three-arrow composite.
    let direct = dmodule_to_contramodule(&d, &c).unwrap();
    let around = comodule_to_contramodule(&pcmodule_to_comodule(&dmodule_to_pcmodule(&d), &c).unwrap());
    assert_eq!(direct, around);
    println!("square commutes: {}", direct == around);

    // Hom spaces match across the duality.
    let y = comodule(&mut rng, &c, 4);
    let h = coduality::comodule::hom_comodules(&x, &y).unwrap();
    let hd = coduality::comodule::hom_contramodules(&comodule_to_contramodule(&y), &z).unwrap();
    println!("dim Hom(X, Y) = {}, dim Hom(Y*, X*) = {}", h.dim(), hd.dim());
}
