//! Independent oracles: every axiom evaluated entry by entry from the
//! index conventions, without kron, psi or the library certifiers.
#![allow(dead_code)]

use coduality::coalgebra::{Algebra, Coalgebra};
use coduality::cotensor::{Bicomodule, RightComodule};
use coduality::format::Structure;
use coduality::tower::FiniteTower;
use coduality::{Axiom, Comodule, Contramodule, FieldSpec, LeftModule, Matrix, RightModule, Scalar};

/// `(label, first failing domain index)` for every axiom of a structure.
pub type Verdicts = Vec<(String, Option<usize>)>;

fn label(axiom: Axiom, scope: &str) -> String {
    if scope.is_empty() {
        axiom.name().to_string()
    } else {
        format!("{} [{}]", axiom.name(), scope)
    }
}

fn sum(f: FieldSpec, terms: impl Iterator<Item = Scalar>) -> Scalar {
    terms.fold(f.zero(), |acc, t| &acc + &t)
}

fn delta(i: usize, j: usize, f: FieldSpec) -> Scalar {
    if i == j {
        f.one()
    } else {
        f.zero()
    }
}

/// First domain index whose two images differ.
fn first_diff(
    f: FieldSpec,
    domain: usize,
    codomain: usize,
    lhs: impl Fn(usize, usize) -> Scalar,
    rhs: impl Fn(usize, usize) -> Scalar,
) -> Option<usize> {
    let _ = f;
    (0..domain).find(|&j| (0..codomain).any(|r| lhs(r, j) != rhs(r, j)))
}

fn push(out: &mut Verdicts, axiom: Axiom, scope: &str, v: Option<usize>) {
    out.push((label(axiom, scope), v));
}

fn join(outer: &str, inner: &str) -> String {
    match (outer.is_empty(), inner.is_empty()) {
        (true, _) => inner.to_string(),
        (false, true) => outer.to_string(),
        (false, false) => format!("{outer}/{inner}"),
    }
}

pub fn coalgebra_raw(out: &mut Verdicts, scope: &str, n: usize, d: &Matrix, e: &Matrix) {
    let f = d.field();
    let g = |r: usize, c: usize| d.get(r, c).clone();
    let assoc = first_diff(
        f,
        n,
        n * n * n,
        |r, k| {
            let (a, b, c) = (r / (n * n), (r / n) % n, r % n);
            sum(f, (0..n).map(|i| &g(a * n + b, i) * &g(i * n + c, k)))
        },
        |r, k| {
            let (a, b, c) = (r / (n * n), (r / n) % n, r % n);
            sum(f, (0..n).map(|j| &g(a * n + j, k) * &g(b * n + c, j)))
        },
    );
    push(out, Axiom::Coassociativity, scope, assoc);
    let left = first_diff(
        f,
        n,
        n,
        |jj, k| sum(f, (0..n).map(|i| e.get(0, i) * &g(i * n + jj, k))),
        |jj, k| delta(jj, k, f),
    );
    push(out, Axiom::LeftCounit, scope, left);
    let right = first_diff(
        f,
        n,
        n,
        |ii, k| sum(f, (0..n).map(|j| e.get(0, j) * &g(ii * n + j, k))),
        |ii, k| delta(ii, k, f),
    );
    push(out, Axiom::RightCounit, scope, right);
}

pub fn coalgebra(out: &mut Verdicts, scope: &str, c: &Coalgebra) {
    coalgebra_raw(out, scope, c.dim(), c.delta(), c.eps());
}

pub fn algebra_raw(out: &mut Verdicts, scope: &str, n: usize, m: &Matrix, u: &Matrix) {
    let f = m.field();
    let g = |r: usize, c: usize| m.get(r, c).clone();
    let assoc = first_diff(
        f,
        n * n * n,
        n,
        |k, col| {
            let (a, b, c) = (col / (n * n), (col / n) % n, col % n);
            sum(f, (0..n).map(|i| &g(i, a * n + b) * &g(k, i * n + c)))
        },
        |k, col| {
            let (a, b, c) = (col / (n * n), (col / n) % n, col % n);
            sum(f, (0..n).map(|j| &g(j, b * n + c) * &g(k, a * n + j)))
        },
    );
    push(out, Axiom::Associativity, scope, assoc);
    let left = first_diff(
        f,
        n,
        n,
        |k, j| sum(f, (0..n).map(|i| u.get(i, 0) * &g(k, i * n + j))),
        |k, j| delta(k, j, f),
    );
    push(out, Axiom::LeftUnit, scope, left);
    let right = first_diff(
        f,
        n,
        n,
        |k, j| sum(f, (0..n).map(|i| u.get(i, 0) * &g(k, j * n + i))),
        |k, j| delta(k, j, f),
    );
    push(out, Axiom::RightUnit, scope, right);
}

pub fn algebra(out: &mut Verdicts, scope: &str, a: &Algebra) {
    algebra_raw(out, scope, a.dim(), a.mult(), a.unit());
}

/// Left coaction `ρ[i·x + p, q]` = coefficient of `c_i ⊗ x_p` in `ρ(x_q)`.
pub fn comodule_raw(out: &mut Verdicts, scope: &str, c: &Coalgebra, x: usize, rho: &Matrix) {
    let f = rho.field();
    let n = c.dim();
    let d = |r: usize, k: usize| c.delta().get(r, k).clone();
    let p_ = |r: usize, k: usize| rho.get(r, k).clone();
    let square = first_diff(
        f,
        x,
        n * n * x,
        |r, q| {
            let (a, b, p) = (r / (n * x), (r / x) % n, r % x);
            sum(f, (0..n).map(|i| &d(a * n + b, i) * &p_(i * x + p, q)))
        },
        |r, q| {
            let (a, b, p) = (r / (n * x), (r / x) % n, r % x);
            sum(f, (0..x).map(|s| &p_(a * x + s, q) * &p_(b * x + p, s)))
        },
    );
    push(out, Axiom::ComoduleSquare, scope, square);
    let triangle = first_diff(
        f,
        x,
        x,
        |p, q| sum(f, (0..n).map(|i| c.eps().get(0, i) * &p_(i * x + p, q))),
        |p, q| delta(p, q, f),
    );
    push(out, Axiom::ComoduleTriangle, scope, triangle);
}

/// Right coaction `μ[p·n + i, q]` = coefficient of `x_p ⊗ c_i` in `μ(x_q)`.
pub fn right_comodule_raw(out: &mut Verdicts, scope: &str, c: &Coalgebra, x: usize, mu: &Matrix) {
    let f = mu.field();
    let n = c.dim();
    let d = |r: usize, k: usize| c.delta().get(r, k).clone();
    let m_ = |r: usize, k: usize| mu.get(r, k).clone();
    let square = first_diff(
        f,
        x,
        x * n * n,
        |r, q| {
            let (p, a, b) = (r / (n * n), (r / n) % n, r % n);
            sum(f, (0..x).map(|s| &m_(s * n + b, q) * &m_(p * n + a, s)))
        },
        |r, q| {
            let (p, a, b) = (r / (n * n), (r / n) % n, r % n);
            sum(f, (0..n).map(|i| &m_(p * n + i, q) * &d(a * n + b, i)))
        },
    );
    push(out, Axiom::ComoduleSquare, scope, square);
    let triangle = first_diff(
        f,
        x,
        x,
        |p, q| sum(f, (0..n).map(|i| c.eps().get(0, i) * &m_(p * n + i, q))),
        |p, q| delta(p, q, f),
    );
    push(out, Axiom::ComoduleTriangle, scope, triangle);
}

/// `θ[q, k·z + p]` = coefficient of `z_q` in `θ(F)` for `F(c_k) = z_p`.
/// The square's domain index `a·n·z + b·z + p` is the map `G` with
/// `G(c_a)(c_b) = z_p`.
pub fn contramodule_raw(out: &mut Verdicts, scope: &str, c: &Coalgebra, z: usize, theta: &Matrix) {
    let f = theta.field();
    let n = c.dim();
    let t = |r: usize, k: usize| theta.get(r, k).clone();
    let d = |r: usize, k: usize| c.delta().get(r, k).clone();
    let square = first_diff(
        f,
        n * n * z,
        z,
        |q, col| {
            let (a, b, p) = (col / (n * z), (col / z) % n, col % z);
            sum(f, (0..z).map(|s| &t(q, a * z + s) * &t(s, b * z + p)))
        },
        |q, col| {
            let (a, b, p) = (col / (n * z), (col / z) % n, col % z);
            sum(f, (0..n).map(|k| &d(a * n + b, k) * &t(q, k * z + p)))
        },
    );
    push(out, Axiom::ContramoduleSquare, scope, square);
    let triangle = first_diff(
        f,
        z,
        z,
        |q, p| sum(f, (0..n).map(|k| c.eps().get(0, k) * &t(q, k * z + p))),
        |q, p| delta(q, p, f),
    );
    push(out, Axiom::ContramoduleTriangle, scope, triangle);
}

/// `act[q, i·x + p]` = coefficient of `x_q` in `e_i · x_p`.
pub fn left_module_raw(out: &mut Verdicts, scope: &str, a: &Algebra, x: usize, act: &Matrix) {
    let f = act.field();
    let n = a.dim();
    let m = |r: usize, k: usize| a.mult().get(r, k).clone();
    let g = |r: usize, k: usize| act.get(r, k).clone();
    let assoc = first_diff(
        f,
        n * n * x,
        x,
        |q, col| {
            let (i, j, p) = (col / (n * x), (col / x) % n, col % x);
            sum(f, (0..x).map(|s| &g(s, j * x + p) * &g(q, i * x + s)))
        },
        |q, col| {
            let (i, j, p) = (col / (n * x), (col / x) % n, col % x);
            sum(f, (0..n).map(|k| &m(k, i * n + j) * &g(q, k * x + p)))
        },
    );
    push(out, Axiom::ActionAssociativity, scope, assoc);
    let unit = first_diff(
        f,
        x,
        x,
        |q, p| sum(f, (0..n).map(|i| a.unit().get(i, 0) * &g(q, i * x + p))),
        |q, p| delta(q, p, f),
    );
    push(out, Axiom::ActionUnit, scope, unit);
}

/// `act[q, p·n + i]` = coefficient of `x_q` in `x_p · e_i`.
pub fn right_module_raw(out: &mut Verdicts, scope: &str, a: &Algebra, x: usize, act: &Matrix) {
    let f = act.field();
    let n = a.dim();
    let m = |r: usize, k: usize| a.mult().get(r, k).clone();
    let g = |r: usize, k: usize| act.get(r, k).clone();
    let assoc = first_diff(
        f,
        x * n * n,
        x,
        |q, col| {
            let (p, i, j) = (col / (n * n), (col / n) % n, col % n);
            sum(f, (0..x).map(|s| &g(s, p * n + i) * &g(q, s * n + j)))
        },
        |q, col| {
            let (p, i, j) = (col / (n * n), (col / n) % n, col % n);
            sum(f, (0..n).map(|k| &m(k, i * n + j) * &g(q, p * n + k)))
        },
    );
    push(out, Axiom::ActionAssociativity, scope, assoc);
    let unit = first_diff(
        f,
        x,
        x,
        |q, p| sum(f, (0..n).map(|i| a.unit().get(i, 0) * &g(q, p * n + i))),
        |q, p| delta(q, p, f),
    );
    push(out, Axiom::ActionUnit, scope, unit);
}

/// `(id ⊗ μ) λ = (λ ⊗ id) μ`, codomain index `(a·m + p)·d + b`.
pub fn bicomodule_raw(out: &mut Verdicts, scope: &str, c: &Coalgebra, d: &Coalgebra, m: usize, lambda: &Matrix, mu: &Matrix) {
    let f = lambda.field();
    let (nc, nd) = (c.dim(), d.dim());
    comodule_raw(out, &join(scope, "left coaction"), c, m, lambda);
    right_comodule_raw(out, &join(scope, "right coaction"), d, m, mu);
    let l = |r: usize, k: usize| lambda.get(r, k).clone();
    let u = |r: usize, k: usize| mu.get(r, k).clone();
    let compat = first_diff(
        f,
        m,
        nc * m * nd,
        |r, q| {
            let (a, p, b) = (r / (m * nd), (r / nd) % m, r % nd);
            sum(f, (0..m).map(|s| &l(a * m + s, q) * &u(p * nd + b, s)))
        },
        |r, q| {
            let (a, p, b) = (r / (m * nd), (r / nd) % m, r % nd);
            sum(f, (0..m).map(|s| &u(s * nd + b, q) * &l(a * m + p, s)))
        },
    );
    push(out, Axiom::BicomoduleCompatibility, scope, compat);
}

/// `η ∘ Hom(C, α) = α ∘ θ` for `α : Z → T`, domain index `k·z + p`.
pub fn contramodule_map_raw(out: &mut Verdicts, scope: &str, c: &Coalgebra, z: usize, theta: &Matrix, t: usize, eta: &Matrix, alpha: &Matrix) {
    let f = alpha.field();
    let n = c.dim();
    let sq = first_diff(
        f,
        n * z,
        t,
        |q, col| {
            let (k, p) = (col / z, col % z);
            sum(f, (0..t).map(|s| eta.get(q, k * t + s) * alpha.get(s, p)))
        },
        |q, col| sum(f, (0..z).map(|s| alpha.get(q, s) * theta.get(s, col))),
    );
    push(out, Axiom::HomomorphismSquare, scope, sq);
}

pub fn tower(out: &mut Verdicts, t: &FiniteTower) {
    let c = t.top().over();
    for (i, z) in t.levels().iter().enumerate() {
        contramodule_raw(out, &format!("level {i}"), c, z.dim(), z.theta());
    }
    for (i, map) in t.transitions().iter().enumerate() {
        let (src, dst) = (&t.levels()[i + 1], &t.levels()[i]);
        contramodule_map_raw(out, &format!("transition {i}"), c, src.dim(), src.theta(), dst.dim(), dst.theta(), map);
    }
}

/// Oracle verdicts, scoped exactly like `Structure::check`.
pub fn oracle(s: &Structure) -> Verdicts {
    let mut out = Vec::new();
    let o = &mut out;
    match s {
        Structure::Coalgebra(c) => coalgebra(o, "", c),
        Structure::Algebra(a) => algebra(o, "", a),
        Structure::Comodule(x) => {
            coalgebra(o, "base", x.over());
            comodule_raw(o, "", x.over(), x.dim(), x.rho());
        }
        Structure::RightComodule(x) => {
            coalgebra(o, "base", x.over());
            right_comodule_raw(o, "", x.over(), x.dim(), x.mu());
        }
        Structure::Contramodule(z) => {
            coalgebra(o, "base", z.over());
            contramodule_raw(o, "", z.over(), z.dim(), z.theta());
        }
        Structure::LeftModule(m) => {
            algebra(o, "base", m.over());
            left_module_raw(o, "", m.over(), m.dim(), m.action());
        }
        Structure::RightModule(m) => {
            algebra(o, "base", m.over());
            right_module_raw(o, "", m.over(), m.dim(), m.action());
        }
        Structure::Bicomodule(b) => {
            coalgebra(o, "left base", b.over_left());
            coalgebra(o, "right base", b.over_right());
            bicomodule_raw(o, "", b.over_left(), b.over_right(), b.dim(), b.lambda(), b.mu());
        }
        Structure::Tower(t) => {
            coalgebra(o, "base", t.top().over());
            tower(o, t);
        }
    }
    out.sort();
    out
}

/// The certifier's verdicts in the same shape.
pub fn certifier(s: &Structure) -> Verdicts {
    let mut out: Verdicts = s
        .check()
        .checks
        .iter()
        .map(|c| {
            let idx = match &c.verdict {
                coduality::Verdict::Pass => None,
                coduality::Verdict::Fail(w) => Some(w.basis_index),
            };
            (c.label(), idx)
        })
        .collect();
    out.sort();
    out
}

pub fn oracle_passes(s: &Structure) -> bool {
    oracle(s).iter().all(|(_, v)| v.is_none())
}

pub fn comodule_verdicts(x: &Comodule) -> Verdicts {
    let mut out = Vec::new();
    comodule_raw(&mut out, "", x.over(), x.dim(), x.rho());
    out
}

pub fn contramodule_verdicts(z: &Contramodule) -> Verdicts {
    let mut out = Vec::new();
    contramodule_raw(&mut out, "", z.over(), z.dim(), z.theta());
    out
}

/// The matrices of a structure, bases included, in a fixed order.
pub fn matrices(s: &Structure) -> Vec<(String, Matrix)> {
    let co = |p: &str, c: &Coalgebra| vec![(format!("{p}delta"), c.delta().clone()), (format!("{p}eps"), c.eps().clone())];
    let al = |p: &str, a: &Algebra| vec![(format!("{p}mult"), a.mult().clone()), (format!("{p}unit"), a.unit().clone())];
    let mut v = Vec::new();
    match s {
        Structure::Coalgebra(c) => v.extend(co("", c)),
        Structure::Algebra(a) => v.extend(al("", a)),
        Structure::Comodule(x) => {
            v.extend(co("over/", x.over()));
            v.push(("rho".into(), x.rho().clone()));
        }
        Structure::RightComodule(x) => {
            v.extend(co("over/", x.over()));
            v.push(("mu".into(), x.mu().clone()));
        }
        Structure::Contramodule(z) => {
            v.extend(co("over/", z.over()));
            v.push(("theta".into(), z.theta().clone()));
        }
        Structure::LeftModule(m) => {
            v.extend(al("over/", m.over()));
            v.push(("action".into(), m.action().clone()));
        }
        Structure::RightModule(m) => {
            v.extend(al("over/", m.over()));
            v.push(("action".into(), m.action().clone()));
        }
        Structure::Bicomodule(b) => {
            v.extend(co("over/", b.over_left()));
            v.extend(co("over_right/", b.over_right()));
            v.push(("lambda".into(), b.lambda().clone()));
            v.push(("mu".into(), b.mu().clone()));
        }
        Structure::Tower(t) => {
            v.extend(co("over/", t.top().over()));
            for (i, z) in t.levels().iter().enumerate() {
                v.push((format!("levels/{i}/theta"), z.theta().clone()));
            }
            for (i, f) in t.transitions().iter().enumerate() {
                v.push((format!("transitions/{i}"), f.clone()));
            }
        }
    }
    v
}

/// Rebuilds a structure of the same kind and shapes from `matrices`.
pub fn rebuild(s: &Structure, m: Vec<Matrix>) -> Structure {
    let co = |d: &Matrix, e: &Matrix| Coalgebra::new(d.cols(), d.clone(), e.clone()).unwrap();
    let al = |mm: &Matrix, u: &Matrix| Algebra::new(mm.rows(), mm.clone(), u.clone()).unwrap();
    match s {
        Structure::Coalgebra(_) => Structure::Coalgebra(co(&m[0], &m[1])),
        Structure::Algebra(_) => Structure::Algebra(al(&m[0], &m[1])),
        Structure::Comodule(x) => Structure::Comodule(Comodule::new(co(&m[0], &m[1]), x.dim(), m[2].clone()).unwrap()),
        Structure::RightComodule(x) => {
            Structure::RightComodule(RightComodule::new(co(&m[0], &m[1]), x.dim(), m[2].clone()).unwrap())
        }
        Structure::Contramodule(z) => {
            Structure::Contramodule(Contramodule::new(co(&m[0], &m[1]), z.dim(), m[2].clone()).unwrap())
        }
        Structure::LeftModule(x) => Structure::LeftModule(LeftModule::new(al(&m[0], &m[1]), x.dim(), m[2].clone()).unwrap()),
        Structure::RightModule(x) => {
            Structure::RightModule(RightModule::new(al(&m[0], &m[1]), x.dim(), m[2].clone()).unwrap())
        }
        Structure::Bicomodule(b) => Structure::Bicomodule(
            Bicomodule::new(co(&m[0], &m[1]), co(&m[2], &m[3]), b.dim(), m[4].clone(), m[5].clone()).unwrap(),
        ),
        Structure::Tower(t) => {
            let c = co(&m[0], &m[1]);
            let k = t.levels().len();
            let levels = (0..k)
                .map(|i| Contramodule::new(c.clone(), t.levels()[i].dim(), m[2 + i].clone()).unwrap())
                .collect();
            let transitions = m[2 + k..].to_vec();
            Structure::Tower(FiniteTower::new(levels, transitions).unwrap())
        }
    }
}

/// Every `+1` single-entry mutant of `s`, labelled by position.
pub fn mutants(s: &Structure) -> Vec<(String, Structure)> {
    let ms = matrices(s);
    let mut out = Vec::new();
    for (slot, (name, m)) in ms.iter().enumerate() {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let mut all: Vec<Matrix> = ms.iter().map(|(_, x)| x.clone()).collect();
                let mut changed = m.clone();
                changed.set(r, c, m.get(r, c) + &m.field().one());
                all[slot] = changed;
                out.push((format!("{name}/{r}/{c}"), rebuild(s, all)));
            }
        }
    }
    out
}

/// All structure files under `tests/fixtures/<dir>`, sorted.
pub fn fixture_files(dir: &str) -> Vec<std::path::PathBuf> {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(dir);
    let mut files: Vec<_> = std::fs::read_dir(&root)
        .unwrap_or_else(|e| panic!("{}: {e}", root.display()))
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

pub fn fixture(rel: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(rel)
}
