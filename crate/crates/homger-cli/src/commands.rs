use std::fmt;
use std::path::Path;

use homger::exterior::{homology_trivial, GradedOperator};
use homger::io::{catalog_names, catalog_text, load, parse_module, Structure};
use homger::report::Report;
use homger::reps::{algebroid_homology, check_dgca, check_rep, corres3_bwd, corres3_fwd, dgca1_bwd, dgca1_fwd, rep_cochain, AlgebroidRep, Dgca};
use homger::rinehart::{
    check_hlr, check_hlr_generator, check_module, corres1_bwd, corres1_fwd, corres2_bwd, corres2_fwd, hlr_cohomology, hlr_homology, res1_bwd,
    res1_fwd, Calculus, HLRModule, HomLieRinehart, Side,
};
use homger::sdhga::{
    check_sdhga, hom_poisson_homology, sdhga_bialgebroid_bwd, sdhga_bialgebroid_fwd, top_rep_dbar,
    HomPoisson, Sdhga,
};
use homger::Error;

use crate::{CatalogAction, Command, Direction, Level, Theorem};

pub enum Output {
    Text(String),
    Report(Report),
}

/// Problems with the input itself; the binary exits with status 2.
#[derive(Debug)]
pub struct InputFailure(pub String);

impl fmt::Display for InputFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Outcome<T> = Result<T, InputFailure>;

fn input(msg: impl Into<String>) -> InputFailure {
    InputFailure(msg.into())
}

fn read(path: &Path) -> Outcome<Vec<u8>> {
    std::fs::read(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_file(path: &Path) -> Outcome<Structure> {
    load(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// Failed verification inside a construction lands in the report; anything else is an input problem.
fn absorb<T>(report: &mut Report, prefix: &str, r: Result<T, Error>) -> Outcome<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Invalid(inner)) => {
            report.absorb(prefix, *inner);
            Ok(None)
        }
        Err(e) => Err(input(e.to_string())),
    }
}

fn section<'a, T>(v: &'a Option<T>, name: &str) -> Outcome<&'a T> {
    v.as_ref().ok_or_else(|| input(format!("the file has no {name} section")))
}

pub fn run(cmd: &Command) -> Outcome<Output> {
    match cmd {
        Command::Verify { file, level } => verify(&load_file(file)?, *level).map(Output::Report),
        Command::Homology { file, coefficients, module, rep } => {
            let s = load_file(file)?;
            let coeff = match (coefficients.as_deref(), module, rep.as_deref()) {
                (_, Some(path), _) => Coefficients::Module(parse_module(&read(path)?, &s.hlr).map_err(|e| input(format!("{}: {e}", path.display())))?),
                (_, _, Some("top")) => Coefficients::Top,
                (_, _, Some(other)) => return Err(input(format!("unknown --rep {other:?} for homology; expected top"))),
                (None | Some("trivial"), _, _) => Coefficients::Trivial,
                (Some("module"), _, _) => Coefficients::Module(section(&s.module, "module")?.clone()),
                (Some(other), _, _) => return Err(input(format!("unknown --coefficients {other:?}"))),
            };
            homology(&s, coeff).map(Output::Report)
        }
        Command::Cohomology { file, rep } => {
            let s = load_file(file)?;
            let rep = match rep.as_deref() {
                None | Some("trivial") => None,
                Some("section") => Some(section(&s.rep, "rep")?.clone()),
                Some(path) => {
                    let md = parse_module(&read(Path::new(path))?, &s.hlr).map_err(|e| input(format!("{path}: {e}")))?;
                    Some(AlgebroidRep::new(md).map_err(|e| input(e.to_string()))?)
                }
            };
            cohomology(&s, rep).map(Output::Report)
        }
        Command::Correspond { file, theorem, direction, roundtrip } => {
            correspond(&load_file(file)?, *theorem, *direction, *roundtrip).map(Output::Report)
        }
        Command::Catalog { action: CatalogAction::List } => Ok(Output::Text(catalog_names().iter().map(|n| format!("{n}\n")).collect())),
        Command::Catalog { action: CatalogAction::Emit { name } } => catalog_text(name)
            .map(|t| Output::Text(t.to_string()))
            .ok_or_else(|| input(format!("no catalog entry {name:?}; see `homger catalog list`"))),
    }
}

fn calculus(h: &HomLieRinehart) -> Outcome<Calculus> {
    Calculus::new(h).map_err(|e| input(e.to_string()))
}

pub fn verify(s: &Structure, level: Option<Level>) -> Outcome<Report> {
    let level = level.map(|l| match l {
        Level::Lie => homger::io::Level::Lie,
        Level::Gerstenhaber => homger::io::Level::Gerstenhaber,
        Level::Rinehart => homger::io::Level::Rinehart,
        Level::Sdhga => homger::io::Level::Sdhga,
        Level::Bialgebra => homger::io::Level::Bialgebra,
    });
    homger::io::verify(s, level).map_err(|e| input(e.to_string()))
}

pub enum Coefficients {
    Trivial,
    Module(HLRModule),
    Top,
}

/// The right module `(A, φ)` with `{1, e_i} = 0`.
fn unit_module(h: &HomLieRinehart) -> Outcome<HLRModule> {
    let zero = vec![vec![h.field().zeros(h.m())]; h.rank()];
    HLRModule::from_a_basis(h, Side::Right, &zero, &[h.alg().unit().to_vec()]).map_err(|e| input(e.to_string()))
}

pub fn homology(s: &Structure, coeff: Coefficients) -> Outcome<Report> {
    let h = &s.hlr;
    let mut report = Report::new(format!("homology {}", s.name));
    match coeff {
        Coefficients::Trivial if h.m() == 1 => report.push_dims("homology", homology_trivial(h.lie())),
        Coefficients::Trivial => {
            let md = unit_module(h)?;
            report.absorb("module", check_module(h, &md));
            if let Some(d) = absorb(&mut report, "homology", hlr_homology(h, &md))? {
                report.push_dims("homology", d);
            }
        }
        Coefficients::Module(md) => {
            report.absorb("module", check_module(h, &md));
            if let Some(d) = absorb(&mut report, "homology", hlr_homology(h, &md))? {
                report.push_dims("homology", d);
            }
        }
        Coefficients::Top => match &s.bivector {
            Some(pi) => {
                let p = HomPoisson::new(h.clone(), pi.clone()).map_err(|e| input(e.to_string()))?;
                let Some((cot, rep, r)) = absorb(&mut report, "top_rep", top_rep_dbar(&p))? else { return Ok(report) };
                report.absorb("top_rep", r);
                let via_rep = absorb(&mut report, "algebroid_homology", algebroid_homology(&cot, &rep))?;
                let direct = absorb(&mut report, "poisson_homology", hom_poisson_homology(&p))?;
                if let (Some(a), Some(b)) = (via_rep, direct) {
                    report.push_check("agree", a == b);
                    report.push_dims("algebroid_homology", a);
                    report.push_dims("poisson_homology", b);
                }
            }
            None => {
                let rep = section(&s.rep, "bivector or rep")?;
                report.absorb("rep", check_rep(h, rep));
                if let Some(d) = absorb(&mut report, "homology", algebroid_homology(h, rep))? {
                    report.push_dims("homology", d);
                }
            }
        },
    }
    Ok(report)
}

pub fn cohomology(s: &Structure, rep: Option<AlgebroidRep>) -> Outcome<Report> {
    let h = &s.hlr;
    let mut report = Report::new(format!("cohomology {}", s.name));
    let dims = match &rep {
        None => absorb(&mut report, "cohomology", hlr_cohomology(h, &HLRModule::anchor(h)))?,
        Some(rep) => {
            report.absorb("rep", check_rep(h, rep));
            absorb(&mut report, "cohomology", rep_cochain(h, rep))?
        }
    };
    if let Some(d) = dims {
        report.push_dims("cohomology", d);
    }
    Ok(report)
}

/// What a correspondence consumes and produces.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Value {
    Module(HLRModule),
    Operator(GradedOperator),
    Rep(AlgebroidRep),
    Hlr(Box<HomLieRinehart>),
    Multivector(GradedOperator),
}

fn rep_module(s: &Structure) -> Outcome<HLRModule> {
    Ok(section(&s.rep, "rep")?.module().clone())
}

/// The input of `theorem` in direction `dir`, read from the file.
fn source(s: &Structure, theorem: Theorem, dir: Direction) -> Outcome<Value> {
    use Direction::*;
    use Theorem::*;
    Ok(match (theorem, dir) {
        (Corres1 | Corres2, Fwd) => Value::Module(section(&s.module, "module")?.clone()),
        (Corres1, Bwd) | (Corres3 | Res1, Fwd) => Value::Operator(section(&s.generator, "generator")?.clone()),
        (Corres2 | Res1, Bwd) => Value::Module(rep_module(s)?),
        (Corres3, Bwd) => Value::Rep(section(&s.rep, "rep")?.clone()),
        (Dgca1, Fwd) => Value::Hlr(Box::new(s.hlr.clone())),
        (Dgca1, Bwd) => Value::Operator(section(&s.form_differential, "form_differential")?.clone()),
        (Bialgebroid, Fwd) => Value::Multivector(section(&s.multivector_differential, "multivector_differential")?.clone()),
        (Bialgebroid, Bwd) => Value::Hlr(Box::new(section(&s.dual, "dual")?.clone())),
    })
}

fn dgca_of(h: &HomLieRinehart, d: GradedOperator) -> Outcome<Dgca> {
    let calc = calculus(h)?;
    Ok(Dgca { ext: calc.ext().clone(), twist: calc.phi_hat().clone(), d })
}

fn wrong() -> Error {
    Error::Domain("input of the wrong kind".into())
}

/// One direction of a theorem, with the validity report of its output.
fn apply(h: &HomLieRinehart, theorem: Theorem, dir: Direction, x: &Value) -> Outcome<Result<(Value, Report), Error>> {
    use Direction::*;
    use Theorem::*;
    let out: Result<Value, Error> = match (theorem, dir, x) {
        (Corres1, Fwd, Value::Module(md)) => corres1_fwd(h, md).map(Value::Operator),
        (Corres1, Bwd, Value::Operator(d)) => corres1_bwd(h, d).map(Value::Module),
        (Corres2, Fwd, Value::Module(md)) => corres2_fwd(h, md).map(Value::Module),
        (Corres2, Bwd, Value::Module(nabla)) => corres2_bwd(h, nabla).map(Value::Module),
        (Corres3, Fwd, Value::Operator(d)) => corres3_fwd(h, d).map(Value::Rep),
        (Corres3, Bwd, Value::Rep(rep)) => corres3_bwd(h, rep).map(Value::Operator),
        (Res1, Fwd, Value::Operator(d)) => res1_fwd(h, d).map(Value::Module),
        (Res1, Bwd, Value::Module(nabla)) => res1_bwd(h, nabla).map(Value::Operator),
        (Dgca1, Fwd, Value::Hlr(g)) => dgca1_fwd(g).map(|g| Value::Operator(g.d)),
        (Dgca1, Bwd, Value::Operator(d)) => dgca1_bwd(&dgca_of(h, d.clone())?).map(|g| Value::Hlr(Box::new(g))),
        (Bialgebroid, Fwd, Value::Multivector(d)) => sdhga_bialgebroid_fwd(&Sdhga::rinehart(h, d.clone())).map(|g| Value::Hlr(Box::new(g))),
        (Bialgebroid, Bwd, Value::Hlr(dual)) => sdhga_bialgebroid_bwd(h, dual).map(|s| Value::Multivector(s.d().clone())),
        _ => Err(wrong()),
    };
    let out = match out {
        Ok(v) => v,
        Err(e) => return Ok(Err(e)),
    };
    let report = match (&out, theorem) {
        (Value::Operator(d), Corres1 | Corres3 | Res1) => check_hlr_generator(h, d).map_err(|e| input(e.to_string()))?,
        (Value::Operator(d), _) => check_dgca(&dgca_of(h, d.clone())?),
        (Value::Module(md), _) => check_module(h, md),
        (Value::Rep(rep), _) => check_rep(h, rep),
        (Value::Hlr(g), _) => check_hlr(g),
        (Value::Multivector(d), _) => check_sdhga(&Sdhga::rinehart(h, d.clone())),
    };
    Ok(Ok((out, report)))
}

fn flip(dir: Direction) -> Direction {
    match dir {
        Direction::Fwd => Direction::Bwd,
        Direction::Bwd => Direction::Fwd,
    }
}

fn theorem_name(t: Theorem) -> &'static str {
    match t {
        Theorem::Corres1 => "corres1",
        Theorem::Corres2 => "corres2",
        Theorem::Corres3 => "corres3",
        Theorem::Res1 => "res1",
        Theorem::Dgca1 => "dgca1",
        Theorem::Bialgebroid => "bialgebroid",
    }
}

pub fn correspond(s: &Structure, theorem: Theorem, dir: Direction, roundtrip: bool) -> Outcome<Report> {
    let h = &s.hlr;
    let tag = if dir == Direction::Fwd { "fwd" } else { "bwd" };
    let mut report = Report::new(format!("correspond {} {} {tag}", s.name, theorem_name(theorem)));
    let x = source(s, theorem, dir)?;
    let Some(step) = absorb(&mut report, tag, apply(h, theorem, dir, &x)?)? else { return Ok(report) };
    let (y, valid) = step;
    report.absorb("output", valid);
    // the file's section for the output, when it has one
    if let Ok(expected) = source(s, theorem, flip(dir)) {
        report.push_check("matches_file", expected == y);
    }
    if roundtrip {
        let back = apply(h, theorem, flip(dir), &y)?;
        match absorb(&mut report, "roundtrip", back)? {
            Some((z, _)) => report.push_check("roundtrip", x == z),
            None => report.push_check("roundtrip", false),
        }
    }
    Ok(report)
}
