//! Exact linear algebra and the currying isomorphism on coordinates.
use coduality::hom::{psi, unvec, vec};
use coduality::matrix::{kernel_basis, kron};
use coduality::{FieldSpec, Matrix, Scalar};

fn main() {
    let q = FieldSpec::Rationals;

    // RREF and kernels are exact.
    let m = Matrix::from_i64(q, 2, 3, &[1, 2, 3, 2, 4, 7]);
    println!("rref:\n{}", m.rref());
    let ker = kernel_basis(&m);
    for v in ker.basis_vectors() {
        println!("kernel vector {:?}", v.iter().map(Scalar::to_string).collect::<Vec<_>>());
    }

    // Over GF(7) the same code runs on residues.
    let g = FieldSpec::prime(7).unwrap();
    let a = Matrix::from_i64(g, 2, 2, &[3, 1, 5, 2]);
    println!("inverse over GF(7):\n{}", a.inverse().unwrap());

    // Tensor index is i*b + j.
    let e = kron(&Matrix::from_i64(q, 2, 1, &[1, 0]), &Matrix::from_i64(q, 3, 1, &[0, 0, 1]));
    println!("e0 (x) e2 = {:?}", e.column(0).iter().map(Scalar::to_string).collect::<Vec<_>>());

    // psi : Hom(A, Hom(B, Z)) -> Hom(A (x) B, Z), checked on one gamma.
    let (ad, bd, zd) = (2, 2, 1);
    let p = psi(q, ad, bd, zd);
    let gamma = Matrix::from_i64(q, bd * zd, ad, &[1, 2, 3, 4]);
    let curried = unvec(q, zd, ad * bd, &p.apply(&vec(&gamma)));
    for a in 0..ad {
        for b in 0..bd {
            let inner = unvec(q, zd, bd, &gamma.column(a));
            assert_eq!(curried.get(0, a * bd + b), inner.get(0, b));
        }
    }
    println!("psi(gamma)(a (x) b) = gamma(a)(b) on every basis pair");
}
