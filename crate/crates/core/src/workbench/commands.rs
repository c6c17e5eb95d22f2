use std::path::Path;
use std::time::Instant;

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::coalgebra::{by_name, dual_algebra, Coalgebra};
use crate::cohom::{adjunction_check, cohom, LMorphism, NMorphism};
use crate::comodule::Contramodule;
use crate::cotensor::{cotensor, cotensor_bicomodule, tensor_over_algebra, Bicomodule, RightComodule};
use crate::diagrams::{square_diagram, triangle_prism};
use crate::duality::{
    comodule_to_contramodule, comodule_to_pcmodule, contramodule_to_comodule, dmodule_to_pcmodule,
    pcmodule_to_dmodule,
};
use crate::field::FieldSpec;
use crate::format::{article, parse_file, Structure, KINDS};
use crate::random::{self, rng_from_seed, WorkbenchRng};
use crate::tower::{check_top_isomorphism, limit_cone};

use super::selftest::selftest;
use super::{CmdError, Cli, Command, Outcome, Report};

type CmdResult = Result<Outcome, CmdError>;

pub(super) fn dispatch(cli: &Cli) -> CmdResult {
    let seed = cli.seed;
    match &cli.command {
        Command::Check { file } => check(file, seed),
        Command::Dual { file } => dual(file, seed),
        Command::Cotensor { l, m } => cotensor_cmd(l, m, seed),
        Command::Cohom { m, n } => cohom_cmd(m, n, seed),
        Command::Adjoint { l, m, n } => adjoint(l, m, n, seed),
        Command::Random {
            kind,
            coalgebra,
            right,
            field,
            dim,
            length,
            mutate,
        } => {
            let field = FieldSpec::from_name(field)?;
            let c = by_name(field, coalgebra)?;
            let d = match right {
                Some(name) => by_name(field, name)?,
                None => c.clone(),
            };
            random_cmd(kind, &c, &d, *dim, *length, *mutate, seed, cli)
        }
        Command::Selftest { count } => Ok(Outcome {
            report: selftest(seed, *count),
            output: None,
        }),
    }
}

fn load(path: &Path) -> Result<Structure, CmdError> {
    Ok(parse_file(path)?)
}

fn wrong_kind(path: &Path, want: &str, got: &Structure) -> CmdError {
    CmdError::Input(format!(
        "{}: expected {}, found {}",
        path.display(),
        article(want),
        article(got.kind())
    ))
}

/// Adds the input's certification to the report and stops if it fails.
fn certify(report: &mut Report, title: impl Into<String>, checks: CertReport) -> Result<(), CmdError> {
    let ok = checks.passed();
    report.section(title, checks);
    if ok {
        Ok(())
    } else {
        Err(CmdError::Rejected(Box::new(report.clone())))
    }
}

fn check(file: &Path, seed: u64) -> CmdResult {
    let s = load(file)?;
    let mut report = Report::new(format!("check {}", file.display()), seed);
    let t0 = Instant::now();
    let checks = s.check();
    report.time("certify", t0.elapsed());
    let ok = checks.passed();
    report.section(s.kind(), checks);
    match &s {
        Structure::Comodule(x) => {
            report.dimension("dim", x.dim());
            if x.over().check().passed() {
                let mut cells = CertReport::default();
                cells.absorb("square", square_diagram(x.over(), x.dim(), x.rho())?);
                cells.absorb("prism", triangle_prism(x.over(), x.dim(), x.rho())?);
                report.section("duality diagrams", cells);
            }
        }
        Structure::Tower(t) if ok => {
            let cone = limit_cone(t)?;
            let mut limit = CertReport::default();
            limit.absorb("limit", cone.limit.check());
            limit.absorb("", check_top_isomorphism(t, &cone)?);
            report.section("inverse limit", limit);
            report.dimension("limit", cone.limit.dim());
            report.dimension("top level", t.top().dim());
        }
        Structure::Coalgebra(c) => report.dimension("dim", c.dim()),
        Structure::Algebra(a) => report.dimension("dim", a.dim()),
        _ => {}
    }
    Ok(Outcome { report, output: None })
}

fn dual(file: &Path, seed: u64) -> CmdResult {
    let s = load(file)?;
    let mut report = Report::new(format!("dual {}", file.display()), seed);
    certify(&mut report, format!("input {}", s.kind()), s.check())?;
    let out = match &s {
        Structure::Coalgebra(c) => Structure::Algebra(dual_algebra(c)?),
        Structure::Algebra(a) => Structure::Coalgebra(a.predual()),
        Structure::Comodule(x) => Structure::Contramodule(comodule_to_contramodule(x)),
        Structure::Contramodule(z) => Structure::Comodule(contramodule_to_comodule(z)),
        Structure::LeftModule(m) => Structure::RightModule(pcmodule_to_dmodule(m)),
        Structure::RightModule(m) => Structure::LeftModule(dmodule_to_pcmodule(m)),
        Structure::RightComodule(x) => Structure::RightModule(x.dual_module()?),
        other => {
            return Err(CmdError::Input(format!("no duality functor is defined on a {}", other.kind())));
        }
    };
    report.note(format!("{} -> {}", s.kind(), out.kind()));
    report.section(format!("output {}", out.kind()), out.check());
    Ok(Outcome {
        report,
        output: Some(out),
    })
}

fn right_comodule(path: &Path) -> Result<RightComodule, CmdError> {
    match load(path)? {
        Structure::RightComodule(x) => Ok(x),
        other => Err(wrong_kind(path, "right_comodule", &other)),
    }
}

fn bicomodule(path: &Path) -> Result<Bicomodule, CmdError> {
    match load(path)? {
        Structure::Bicomodule(x) => Ok(x),
        other => Err(wrong_kind(path, "bicomodule", &other)),
    }
}

fn contramodule(path: &Path) -> Result<Contramodule, CmdError> {
    match load(path)? {
        Structure::Contramodule(x) => Ok(x),
        other => Err(wrong_kind(path, "contramodule", &other)),
    }
}

fn cotensor_cmd(l_path: &Path, m_path: &Path, seed: u64) -> CmdResult {
    let l = right_comodule(l_path)?;
    let m = load(m_path)?;
    let mut report = Report::new(format!("cotensor {} {}", l_path.display(), m_path.display()), seed);
    certify(&mut report, "input L", Structure::RightComodule(l.clone()).check())?;
    certify(&mut report, "input M", m.check())?;
    let t0 = Instant::now();
    let (space, left) = match &m {
        Structure::Comodule(x) => (cotensor(&l, x)?, x.clone()),
        Structure::Bicomodule(b) => (cotensor_bicomodule(&l, b)?, b.left().clone()),
        other => return Err(wrong_kind(m_path, "comodule or bicomodule", other)),
    };
    report.time("cotensor", t0.elapsed());
    let t0 = Instant::now();
    let tensor = tensor_over_algebra(&l.dual_module()?, &comodule_to_pcmodule(&left)?)?;
    report.time("tensor over the dual algebra", t0.elapsed());
    report.dimension("L cotensor M", space.dim());
    report.dimension("L* tensor M* over C*", tensor.dim());
    let mut eq = AxiomCheck::holds(Axiom::DimensionEquality, l.field(), space.dim() == tensor.dim());
    eq.scope = "cotensor vs dual tensor".into();
    let mut checks = CertReport::new(vec![eq]);
    if let Some(induced) = &space.induced {
        checks.absorb("induced right comodule", induced.check());
    }
    report.section("cotensor", checks);
    Ok(Outcome { report, output: None })
}

fn cohom_cmd(m_path: &Path, n_path: &Path, seed: u64) -> CmdResult {
    let m = bicomodule(m_path)?;
    let n = contramodule(n_path)?;
    let mut report = Report::new(format!("cohom {} {}", m_path.display(), n_path.display()), seed);
    certify(&mut report, "input M", Structure::Bicomodule(m.clone()).check())?;
    certify(&mut report, "input N", Structure::Contramodule(n.clone()).check())?;
    let t0 = Instant::now();
    let h = cohom(&m, &n)?;
    report.time("cohom", t0.elapsed());
    report.dimension("Hom_D(N, M)", h.hom_space.dim());
    report.dimension("h(M, N)", h.contramodule.dim());
    report.section("output contramodule", h.contramodule.check());
    Ok(Outcome {
        report,
        output: Some(Structure::Contramodule(h.contramodule)),
    })
}

fn adjoint(l_path: &Path, m_path: &Path, n_path: &Path, seed: u64) -> CmdResult {
    let l = right_comodule(l_path)?;
    let m = bicomodule(m_path)?;
    let n = contramodule(n_path)?;
    let mut report = Report::new(
        format!("adjoint {} {} {}", l_path.display(), m_path.display(), n_path.display()),
        seed,
    );
    certify(&mut report, "input L", Structure::RightComodule(l.clone()).check())?;
    certify(&mut report, "input M", Structure::Bicomodule(m.clone()).check())?;
    certify(&mut report, "input N", Structure::Contramodule(n.clone()).check())?;
    if l.over() != m.over_left() || n.over() != m.over_right() {
        return Err(CmdError::Input(
            "L must be over the left base of M and N over its right base".into(),
        ));
    }
    let mut rng = rng_from_seed(seed);
    let (target, map) = random::right_comodule_extension(&mut rng, &l, 1);
    let (source, t) = random::contramodule_extension(&mut rng, &n, 1);
    report.note(format!(
        "naturality tested along a seeded map L -> L' (dim {}) and N' -> N (dim {})",
        target.dim(),
        source.dim()
    ));
    let t0 = Instant::now();
    let adj = adjunction_check(&l, &m, &n, &[LMorphism { target, map }], &[NMorphism { source, map: t }])?;
    report.time("adjunction", t0.elapsed());
    report.dimension("Hom_D(N, L cotensor M)", adj.lhs_dim);
    report.dimension("Hom_C(h(M, N), L)", adj.rhs_dim);
    report.section("adjunction", adj.checks);
    Ok(Outcome { report, output: None })
}

/// Retries until the generated structure is nonzero, so that it can be
/// mutated.
fn nonzero<T>(mut gen: impl FnMut() -> (T, usize)) -> Result<T, CmdError> {
    for _ in 0..64 {
        let (x, d) = gen();
        if d > 0 {
            return Ok(x);
        }
    }
    Err(CmdError::Input("could not generate a nonzero structure to mutate; raise --dim".into()))
}

#[allow(clippy::too_many_arguments)]
fn random_cmd(
    kind: &str,
    c: &Coalgebra,
    d: &Coalgebra,
    dim: usize,
    length: usize,
    mutate: bool,
    seed: u64,
    cli: &Cli,
) -> CmdResult {
    if !KINDS.contains(&kind) {
        return Err(CmdError::Input(format!("unknown kind `{kind}`")));
    }
    let (name, right) = match &cli.command {
        Command::Random { coalgebra, right, .. } => (coalgebra.clone(), right.clone()),
        _ => unreachable!("random_cmd is only called for random"),
    };
    let mut command = format!("random {kind} --coalgebra {name}");
    if let Some(r) = right {
        command.push_str(&format!(" --right {r}"));
    }
    command.push_str(&format!(" --field {} --dim {dim}", c.field()));
    if kind == "tower" {
        command.push_str(&format!(" --length {length}"));
    }
    if mutate {
        command.push_str(" --mutate");
    }
    let mut report = Report::new(command, seed);
    let mut rng = rng_from_seed(seed);
    let r = &mut rng;
    let (s, mutation) = generate(r, kind, c, d, dim, length, mutate)?;
    if let Some(m) = mutation {
        report.note(format!("mutated entry ({}, {}) by {}", m.row, m.col, m.delta));
    }
    let title = if mutate {
        format!("generated {kind} (mutated)")
    } else {
        format!("generated {kind}")
    };
    report.section(title, s.check());
    Ok(Outcome {
        report,
        output: Some(s),
    })
}

type Generated = (Structure, Option<random::Mutation>);

fn generate(
    r: &mut WorkbenchRng,
    kind: &str,
    c: &Coalgebra,
    d: &Coalgebra,
    dim: usize,
    length: usize,
    mutate: bool,
) -> Result<Generated, CmdError> {
    if !c.check().passed() || !d.check().passed() {
        return Err(CmdError::Input("base coalgebra is not certified".into()));
    }
    Ok(match (kind, mutate) {
        ("coalgebra", false) => (Structure::Coalgebra(random::coalgebra(r, c)), None),
        ("coalgebra", true) => {
            let base = random::coalgebra(r, c);
            let (x, m) = random::mutate_coalgebra(r, &base);
            (Structure::Coalgebra(x), Some(m))
        }
        ("algebra", false) => (Structure::Algebra(dual_algebra(&random::coalgebra(r, c))?), None),
        ("algebra", true) => {
            let a = dual_algebra(&random::coalgebra(r, c))?;
            let (x, m) = random::mutate_algebra(r, &a);
            (Structure::Algebra(x), Some(m))
        }
        ("comodule", false) => (Structure::Comodule(random::comodule(r, c, dim)), None),
        ("comodule", true) => {
            let x = nonzero(|| {
                let x = random::comodule(r, c, dim);
                let n = x.dim();
                (x, n)
            })?;
            let (x, m) = random::mutate_comodule(r, &x);
            (Structure::Comodule(x), Some(m))
        }
        ("right_comodule", false) => (Structure::RightComodule(random::right_comodule(r, c, dim)), None),
        ("right_comodule", true) => {
            let x = nonzero(|| {
                let x = random::right_comodule(r, c, dim);
                let n = x.dim();
                (x, n)
            })?;
            let (x, m) = random::mutate_right_comodule(r, &x);
            (Structure::RightComodule(x), Some(m))
        }
        ("contramodule", false) => (Structure::Contramodule(random::contramodule(r, c, dim)), None),
        ("contramodule", true) => {
            let z = nonzero(|| {
                let z = random::contramodule(r, c, dim);
                let n = z.dim();
                (z, n)
            })?;
            let (z, m) = random::mutate_contramodule(r, &z);
            (Structure::Contramodule(z), Some(m))
        }
        ("left_module", false) => (Structure::LeftModule(random::left_module(r, c, dim)), None),
        ("left_module", true) => {
            let x = nonzero(|| {
                let x = random::left_module(r, c, dim);
                let n = x.dim();
                (x, n)
            })?;
            let (x, m) = random::mutate_left_module(r, &x);
            (Structure::LeftModule(x), Some(m))
        }
        ("right_module", false) => (Structure::RightModule(random::right_module(r, c, dim)), None),
        ("right_module", true) => {
            let x = nonzero(|| {
                let x = random::right_module(r, c, dim);
                let n = x.dim();
                (x, n)
            })?;
            let (x, m) = random::mutate_right_module(r, &x);
            (Structure::RightModule(x), Some(m))
        }
        ("bicomodule", false) => (Structure::Bicomodule(random::bicomodule(r, c, d, dim)), None),
        ("bicomodule", true) => {
            let x = nonzero(|| {
                let x = random::bicomodule(r, c, d, dim);
                let n = x.dim();
                (x, n)
            })?;
            let (x, m) = random::mutate_bicomodule(r, &x);
            (Structure::Bicomodule(x), Some(m))
        }
        ("tower", false) => (Structure::Tower(random::tower(r, c, dim, length)), None),
        ("tower", true) => {
            return Err(CmdError::Input("no mutator is defined for towers; mutate a level file instead".into()))
        }
        _ => unreachable!("kind checked by the caller"),
    })
}
