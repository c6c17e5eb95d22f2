//! The randomized invariant suite run by `coduality selftest`.
//!
//! Instance `i` draws from its own ChaCha stream (`set_stream(i)`) of the
//! seeded generator, so instances are independent and the report is
//! assembled in index order.

use rand::Rng;

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::coalgebra::{by_name, Coalgebra};
use crate::cohom::{adjunction_check, LMorphism, NMorphism};
use crate::comodule::{hom_comodules, hom_contramodules};
use crate::cotensor::{cotensor, tensor_over_algebra, RightComodule};
use crate::duality::{
    comodule_to_contramodule, comodule_to_pcmodule, dmodule_to_contramodule, dmodule_to_pcmodule,
    pcmodule_to_comodule,
};
use crate::error::Result;
use crate::field::FieldSpec;
use crate::hom::{unvec, vec};
use crate::module::{hom_right_modules, hom_theta_modules, module_to_theta, theta_to_module};
use crate::random::{self, rng_from_seed, WorkbenchRng};
use crate::tower::{check_top_isomorphism, limit_cone};

use super::Report;

const BASES: [&str; 9] = [
    "grouplike:1",
    "grouplike:2",
    "grouplike:3",
    "matrix:2",
    "divided_power:0",
    "divided_power:1",
    "divided_power:2",
    "divided_power:3",
    "trig",
];

const SMALL_BASES: [&str; 4] = ["grouplike:1", "grouplike:2", "matrix:2", "divided_power:2"];

const SUITES: [&str; 8] = [
    "comodule biconditional",
    "morphism biconditional",
    "duality square",
    "cotensor duality",
    "adjunction",
    "module formulation",
    "tower limit",
    "mutation soundness",
];

fn pick_field(rng: &mut WorkbenchRng) -> FieldSpec {
    if rng.random_bool(0.5) {
        FieldSpec::Rationals
    } else {
        FieldSpec::Prime(5)
    }
}

fn pick(rng: &mut WorkbenchRng, names: &[&str]) -> (String, Coalgebra) {
    let f = pick_field(rng);
    let name = names[rng.random_range(0..names.len())];
    let c = by_name(f, name).expect("standard coalgebras build over Q and GF(5)");
    (format!("{name}/{f}"), c)
}

fn agree(axiom: Axiom, scope: &str, field: FieldSpec, ok: bool) -> AxiomCheck {
    let mut c = AxiomCheck::holds(axiom, field, ok);
    c.scope = scope.into();
    c
}

fn comodule_biconditional(rng: &mut WorkbenchRng, c: &Coalgebra) -> Result<CertReport> {
    let mut x = random::nonzero_comodule(rng, c, 4);
    if rng.random_bool(0.5) {
        x = random::mutate_comodule(rng, &x).0;
    }
    let left = x.check();
    let right = comodule_to_contramodule(&x).check();
    let f = c.field();
    Ok(CertReport::new(vec![
        agree(
            Axiom::ComoduleSquare,
            "verdict matches the contramodule square",
            f,
            left.verdict(Axiom::ComoduleSquare) == right.verdict(Axiom::ContramoduleSquare),
        ),
        agree(
            Axiom::ComoduleTriangle,
            "verdict matches the contramodule triangle",
            f,
            left.verdict(Axiom::ComoduleTriangle) == right.verdict(Axiom::ContramoduleTriangle),
        ),
    ]))
}

fn morphism_biconditional(rng: &mut WorkbenchRng, c: &Coalgebra) -> Result<CertReport> {
    let x = random::comodule(rng, c, 3);
    let y = random::comodule(rng, c, 3);
    let hx = hom_comodules(&x, &y)?;
    let hz = hom_contramodules(&comodule_to_contramodule(&y), &comodule_to_contramodule(&x))?;
    let f = c.field();
    let carried = hx.basis_vectors().iter().all(|v| {
        let alpha = unvec(f, y.dim(), x.dim(), v);
        hz.contains(&vec(&alpha.transpose()))
    });
    Ok(CertReport::new(vec![
        agree(Axiom::DimensionEquality, "hom spaces", f, hx.dim() == hz.dim()),
        agree(Axiom::HomomorphismSquare, "dual basis lands in the contramodule homs", f, carried),
    ]))
}

fn duality_square(rng: &mut WorkbenchRng, c: &Coalgebra) -> Result<CertReport> {
    let m = random::right_module(rng, c, 3);
    let direct = dmodule_to_contramodule(&m, c)?;
    let composite = comodule_to_contramodule(&pcmodule_to_comodule(&dmodule_to_pcmodule(&m), c)?);
    let mut check = AxiomCheck::compare(Axiom::Naturality, direct.theta(), composite.theta());
    check.scope = "direct arrow vs three-arrow composite".into();
    Ok(CertReport::new(vec![check]))
}

fn cotensor_duality(rng: &mut WorkbenchRng, c: &Coalgebra) -> Result<CertReport> {
    let l = random::right_comodule(rng, c, 3);
    let m = random::comodule(rng, c, 3);
    let s = cotensor(&l, &m)?;
    let t = tensor_over_algebra(&l.dual_module()?, &comodule_to_pcmodule(&m)?)?;
    Ok(CertReport::new(vec![agree(
        Axiom::DimensionEquality,
        "cotensor vs dual tensor",
        c.field(),
        s.dim() == t.dim(),
    )]))
}

fn adjunction(rng: &mut WorkbenchRng, c: &Coalgebra, d: &Coalgebra) -> Result<CertReport> {
    let l = random::right_comodule(rng, c, 2);
    let m = random::bicomodule(rng, c, d, 3);
    let n = random::contramodule(rng, d, 2);
    let (target, map) = random::right_comodule_extension(rng, &l, 1);
    let (source, t) = random::contramodule_extension(rng, &n, 1);
    let adj = adjunction_check(&l, &m, &n, &[LMorphism { target, map }], &[NMorphism { source, map: t }])?;
    Ok(adj.checks)
}

fn module_formulation(rng: &mut WorkbenchRng, c: &Coalgebra) -> Result<CertReport> {
    let m = random::right_module(rng, c, 3);
    let m2 = random::right_module(rng, c, 3);
    let theta = module_to_theta(&m)?;
    let theta2 = module_to_theta(&m2)?;
    let back = theta_to_module(&theta)?;
    let f = c.field();
    let dims = hom_right_modules(&m, &m2)?.dim() == hom_theta_modules(&theta, &theta2)?.dim();
    Ok(CertReport::new(vec![
        agree(Axiom::Bijectivity, "roundtrip is the identity", f, back == m),
        agree(Axiom::DimensionEquality, "hom spaces", f, dims),
    ]))
}

fn tower_limit(rng: &mut WorkbenchRng, c: &Coalgebra) -> Result<CertReport> {
    let length = rng.random_range(0..=3);
    let t = random::tower(rng, c, 4, length);
    let cone = limit_cone(&t)?;
    let mut r = CertReport::default();
    r.absorb("limit", cone.limit.check());
    r.absorb("", check_top_isomorphism(&t, &cone)?);
    Ok(r)
}

fn mutation_soundness(rng: &mut WorkbenchRng, c: &Coalgebra) -> Result<CertReport> {
    let kinds = ["coalgebra", "comodule", "contramodule", "right_comodule", "left_module"];
    let kind = kinds[rng.random_range(0..kinds.len())];
    let report = match kind {
        "coalgebra" => random::mutate_coalgebra(rng, c).0.check(),
        "comodule" => {
            let x = random::nonzero_comodule(rng, c, 3);
            random::mutate_comodule(rng, &x).0.check()
        }
        "contramodule" => {
            let z = comodule_to_contramodule(&random::nonzero_comodule(rng, c, 3));
            random::mutate_contramodule(rng, &z).0.check()
        }
        "right_comodule" => random::mutate_right_comodule(rng, &RightComodule::regular(c)).0.check(),
        _ => {
            let x = comodule_to_pcmodule(&random::nonzero_comodule(rng, c, 3))?;
            random::mutate_left_module(rng, &x).0.check()
        }
    };
    let scope = format!("certifier rejects a mutated {kind}");
    Ok(CertReport::new(vec![agree(Axiom::Naturality, &scope, c.field(), !report.passed())]))
}

/// One instance: suite `index % 8` on bases drawn from stream `index`.
pub fn instance(seed: u64, index: usize) -> (String, CertReport) {
    let mut rng = rng_from_seed(seed);
    rng.set_stream(index as u64);
    let suite = SUITES[index % SUITES.len()];
    let (label, result) = if suite == "adjunction" {
        let (cn, c) = pick(&mut rng, &SMALL_BASES);
        let f = c.field();
        let dn = SMALL_BASES[rng.random_range(0..SMALL_BASES.len())];
        let d = by_name(f, dn).expect("standard coalgebra");
        (format!("{cn} and {dn}"), adjunction(&mut rng, &c, &d))
    } else {
        let (name, c) = pick(&mut rng, &BASES);
        let r = &mut rng;
        let result = match suite {
            "comodule biconditional" => comodule_biconditional(r, &c),
            "morphism biconditional" => morphism_biconditional(r, &c),
            "duality square" => duality_square(r, &c),
            "cotensor duality" => cotensor_duality(r, &c),
            "module formulation" => module_formulation(r, &c),
            "tower limit" => tower_limit(r, &c),
            _ => mutation_soundness(r, &c),
        };
        (name, result)
    };
    let checks = result.unwrap_or_else(|e| {
        let mut c = AxiomCheck::holds(Axiom::Naturality, FieldSpec::Rationals, false);
        c.scope = format!("error: {e}");
        CertReport::new(vec![c])
    });
    (format!("#{index:04} {suite} over {label}"), checks)
}

pub fn selftest(seed: u64, count: usize) -> Report {
    let mut report = Report::new(format!("selftest --count {count}"), seed);
    let start = std::time::Instant::now();
    let mut failed = 0;
    for i in 0..count {
        let (title, checks) = instance(seed, i);
        if !checks.passed() {
            failed += 1;
        }
        report.section(title, checks);
    }
    report.time("selftest", start.elapsed());
    report.dimension("instances", count);
    report.dimension("failed instances", failed);
    report
}
