//! JSON structure files. Scalars are strings `"p"` or `"p/q"`; basis indices in
//! keys are 1-based. Vectors in `L` use the layout of [`HomLieRinehart`], vectors in
//! `∧^k_A L` the layout of [`Exterior`](crate::exterior::Exterior).

mod catalog;
mod render;
mod verify;

pub use catalog::{catalog_names, catalog_structure, catalog_text, CATALOG};
pub use render::to_json;
pub use verify::{verify, Level};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::CommAlgebra;
use crate::exterior::{Exterior, GradedOperator};
use crate::linalg::{Field, Matrix, Scalar};
use crate::reps::AlgebroidRep;
use crate::rinehart::{HLRModule, HomLieRinehart, Side};

pub type Rows = Vec<Vec<String>>;

const MAX_RANK: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseAlgebra {
    pub dim: usize,
    pub unit: Vec<String>,
    /// `"i,j"` with `i ≤ j` ↦ coordinates of `b_i b_j`; absent products vanish.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub mul: BTreeMap<String, Vec<String>>,
}

/// A free module at field level: `action[u]` acts for the `u`-th field basis vector of `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    pub side: Side,
    pub rank: usize,
    pub action: Vec<Rows>,
    pub beta: Rows,
}

/// A graded operator; `blocks[k]` maps grade `k` to grade `k + degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSection {
    pub degree: i32,
    pub blocks: Vec<Rows>,
}

/// A second structure on the dual module `L*` over the same `(A, φ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rows>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bracket: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<Vec<Rows>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    pub field: String,
    pub base_algebra: BaseAlgebra,
    pub phi: Rows,
    pub module_rank: usize,
    /// `α(e_i)` for each A-basis vector; absent means zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rows>,
    /// `"i,j"` with `i < j` ↦ `[e_i, e_j]`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bracket: BTreeMap<String, Vec<String>>,
    /// `ρ(e_i)` as an `m×m` matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<ModuleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bivector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<OperatorSection>,
    /// Degree-one operator on forms `∧•_A L*`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form_differential: Option<OperatorSection>,
    /// Degree-one operator on multivectors `∧•_A L`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multivector_differential: Option<OperatorSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualSection>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "input error at {}: {}", self.path, self.message)
    }
}

impl std::error::Error for InputError {}

fn err(path: &str, message: impl Into<String>) -> InputError {
    InputError { path: if path.is_empty() { "(root)".into() } else { path.into() }, message: message.into() }
}

fn child(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn at(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

/// Everything a structure file describes, as library values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub name: String,
    pub hlr: HomLieRinehart,
    pub module: Option<HLRModule>,
    pub rep: Option<AlgebroidRep>,
    pub bivector: Option<Vec<Scalar>>,
    pub generator: Option<GradedOperator>,
    pub form_differential: Option<GradedOperator>,
    pub multivector_differential: Option<GradedOperator>,
    pub dual: Option<HomLieRinehart>,
}

impl Structure {
    pub fn new(name: impl Into<String>, hlr: HomLieRinehart) -> Self {
        Structure {
            name: name.into(),
            hlr,
            module: None,
            rep: None,
            bivector: None,
            generator: None,
            form_differential: None,
            multivector_differential: None,
            dual: None,
        }
    }

    pub fn field(&self) -> Field {
        self.hlr.field()
    }

    /// Dimensions of `∧^k_A L` (equally of `∧^k_A L*`).
    pub fn dims(&self) -> Vec<usize> {
        Exterior::new(self.hlr.alg().clone(), self.hlr.rank()).dims()
    }
}

/// Deserializes and validates; errors carry the JSON path.
pub fn parse(bytes: &[u8]) -> Result<StructureFile, InputError> {
    let text = std::str::from_utf8(bytes).map_err(|e| err("", format!("not UTF-8: {e}")))?;
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: StructureFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        err(if path == "." { "" } else { &path }, e.into_inner().to_string())
    })?;
    build(&file)?;
    Ok(file)
}

/// [`parse`] followed by [`build`].
pub fn load(bytes: &[u8]) -> Result<Structure, InputError> {
    build(&parse(bytes)?)
}

pub fn parse_field(path: &str, s: &str) -> Result<Field, InputError> {
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("Fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| err(path, format!("expected \"Q\" or \"Fp:<prime>\", found {s:?}")))?;
    Field::prime(p).map_err(|e| err(path, e.to_string()))
}

struct Reader {
    field: Field,
}

impl Reader {
    fn scalar(&self, path: &str, s: &str) -> Result<Scalar, InputError> {
        self.field.parse(s).map_err(|_| err(path, format!("bad scalar {s:?} over {}", self.field)))
    }

    fn vector(&self, path: &str, v: &[String], len: usize) -> Result<Vec<Scalar>, InputError> {
        if v.len() != len {
            return Err(err(path, format!("expected {len} entries, found {}", v.len())));
        }
        v.iter().enumerate().map(|(i, s)| self.scalar(&at(path, i), s)).collect()
    }

    fn vectors(&self, path: &str, v: &[Vec<String>], count: usize, len: usize) -> Result<Vec<Vec<Scalar>>, InputError> {
        if v.len() != count {
            return Err(err(path, format!("expected {count} vectors, found {}", v.len())));
        }
        v.iter().enumerate().map(|(i, x)| self.vector(&at(path, i), x, len)).collect()
    }

    fn matrix(&self, path: &str, rows: &Rows, r: usize, c: usize) -> Result<Matrix, InputError> {
        if rows.len() != r {
            return Err(err(path, format!("expected {r} rows, found {}", rows.len())));
        }
        let mut m = Matrix::zeros(self.field, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in self.vector(&at(path, i), row, c)?.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    fn matrices(&self, path: &str, v: &[Rows], count: usize, r: usize, c: usize) -> Result<Vec<Matrix>, InputError> {
        if v.len() != count {
            return Err(err(path, format!("expected {count} matrices, found {}", v.len())));
        }
        v.iter().enumerate().map(|(i, x)| self.matrix(&at(path, i), x, r, c)).collect()
    }

    fn operator(&self, path: &str, s: &OperatorSection, degree: i32, dims: &[usize]) -> Result<GradedOperator, InputError> {
        if s.degree != degree {
            return Err(err(&child(path, "degree"), format!("expected degree {degree}, found {}", s.degree)));
        }
        let path = child(path, "blocks");
        if s.blocks.len() != dims.len() {
            return Err(err(&path, format!("expected {} blocks, found {}", dims.len(), s.blocks.len())));
        }
        let mut mats = Vec::with_capacity(dims.len());
        for (k, block) in s.blocks.iter().enumerate() {
            let target = k as i64 + degree as i64;
            let rows = if target >= 0 && (target as usize) < dims.len() { dims[target as usize] } else { 0 };
            mats.push(self.matrix(&at(&path, k), block, rows, dims[k])?);
        }
        Ok(GradedOperator::from_mats(degree, dims, mats))
    }

    fn module(&self, path: &str, s: &ModuleSection, m: usize, n: usize) -> Result<HLRModule, InputError> {
        let dim = s.rank * m;
        let action = self.matrices(&child(path, "action"), &s.action, n, dim, dim)?;
        let beta = self.matrix(&child(path, "beta"), &s.beta, dim, dim)?;
        Ok(HLRModule::from_field_data(s.side, s.rank, action, beta))
    }
}

/// `"i,j"` with `1 ≤ i < j ≤ bound` (or `i ≤ j` when `strict` is false), returned 0-based.
fn index_pair(path: &str, key: &str, bound: usize, strict: bool) -> Result<(usize, usize), InputError> {
    let path = child(path, key);
    let (a, b) = key.split_once(',').ok_or_else(|| err(&path, "key must have the form \"i,j\""))?;
    let parse = |s: &str| -> Result<usize, InputError> {
        let i: usize = s.trim().parse().map_err(|_| err(&path, format!("bad index {s:?}")))?;
        if i == 0 || i > bound {
            return Err(err(&path, format!("index {i} out of range 1..={bound}")));
        }
        Ok(i - 1)
    };
    let (i, j) = (parse(a)?, parse(b)?);
    if (strict && i >= j) || i > j {
        let rel = if strict { "<" } else { "<=" };
        return Err(err(&path, format!("key must satisfy i {rel} j")));
    }
    Ok((i, j))
}

/// A-basis data `(α(e_i), [e_i, e_j], ρ(e_i))` shared by the structure and its dual.
fn lie_data(
    rd: &Reader,
    path: &str,
    alg: &CommAlgebra,
    phi: &Matrix,
    r: usize,
    alpha: &Option<Rows>,
    bracket: &BTreeMap<String, Vec<String>>,
    anchor: &Option<Vec<Rows>>,
) -> Result<HomLieRinehart, InputError> {
    let (f, m) = (rd.field, alg.dim());
    let n = r * m;
    let alpha = match alpha {
        Some(v) => rd.vectors(&child(path, "alpha"), v, r, n)?,
        None => vec![f.zeros(n); r],
    };
    let mut table = vec![vec![f.zeros(n); r]; r];
    let bpath = child(path, "bracket");
    for (key, v) in bracket {
        let (i, j) = index_pair(&bpath, key, r, true)?;
        let val = rd.vector(&child(&bpath, key), v, n)?;
        table[j][i] = val.iter().map(|x| -x).collect();
        table[i][j] = val;
    }
    let anchor = match anchor {
        Some(v) => rd.matrices(&child(path, "anchor"), v, r, m, m)?,
        None => vec![Matrix::zeros(f, m, m); r],
    };
    HomLieRinehart::from_a_basis(alg.clone(), phi.clone(), &table, &alpha, &anchor).map_err(|e| err(path, e.to_string()))
}

/// Validates every section and converts to library values.
pub fn build(file: &StructureFile) -> Result<Structure, InputError> {
    let field = parse_field("field", &file.field)?;
    let rd = Reader { field };
    let ba = &file.base_algebra;
    let m = ba.dim;
    if m == 0 {
        return Err(err("base_algebra.dim", "must be at least 1"));
    }
    let unit = rd.vector("base_algebra.unit", &ba.unit, m)?;
    let mut mul = vec![vec![field.zeros(m); m]; m];
    for (key, v) in &ba.mul {
        let (i, j) = index_pair("base_algebra.mul", key, m, false)?;
        let val = rd.vector(&child("base_algebra.mul", key), v, m)?;
        mul[j][i] = val.clone();
        mul[i][j] = val;
    }
    let alg = CommAlgebra::new(field, mul, unit).map_err(|e| err("base_algebra", e.to_string()))?;
    let phi = rd.matrix("phi", &file.phi, m, m)?;
    let r = file.module_rank;
    if r > MAX_RANK {
        return Err(err("module_rank", format!("at most {MAX_RANK} supported")));
    }
    let hlr = lie_data(&rd, "", &alg, &phi, r, &file.alpha, &file.bracket, &file.anchor)?;
    let n = r * m;
    let mut out = Structure::new(file.name.clone(), hlr);
    let dims = out.dims();
    if let Some(s) = &file.module {
        out.module = Some(rd.module("module", s, m, n)?);
    }
    if let Some(s) = &file.rep {
        if s.side != Side::Left {
            return Err(err("rep.side", "a representation is a left action"));
        }
        let md = rd.module("rep", s, m, n)?;
        out.rep = Some(AlgebroidRep::new(md).map_err(|e| err("rep", e.to_string()))?);
    }
    if let Some(v) = &file.bivector {
        let len = dims.get(2).copied().unwrap_or(0);
        out.bivector = Some(rd.vector("bivector", v, len)?);
    }
    if let Some(s) = &file.generator {
        out.generator = Some(rd.operator("generator", s, -1, &dims)?);
    }
    if let Some(s) = &file.form_differential {
        out.form_differential = Some(rd.operator("form_differential", s, 1, &dims)?);
    }
    if let Some(s) = &file.multivector_differential {
        out.multivector_differential = Some(rd.operator("multivector_differential", s, 1, &dims)?);
    }
    if let Some(s) = &file.dual {
        out.dual = Some(lie_data(&rd, "dual", &alg, &phi, r, &s.alpha, &s.bracket, &s.anchor)?);
    }
    Ok(out)
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn rows(m: &Matrix) -> Rows {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

fn operator_section(d: &GradedOperator) -> OperatorSection {
    OperatorSection { degree: d.degree(), blocks: d.mats().iter().map(rows).collect() }
}

fn module_section(md: &HLRModule) -> ModuleSection {
    ModuleSection { side: md.side(), rank: md.rank(), action: md.action().iter().map(rows).collect(), beta: rows(md.beta()) }
}

type LieData = (Option<Rows>, BTreeMap<String, Vec<String>>, Option<Vec<Rows>>);

fn lie_section(h: &HomLieRinehart) -> LieData {
    let r = h.rank();
    let alpha = (0..r).map(|i| strings(&h.alpha_e(i))).collect();
    let mut bracket = BTreeMap::new();
    for i in 0..r {
        for j in i + 1..r {
            let v = h.bracket_e(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                bracket.insert(format!("{},{}", i + 1, j + 1), strings(&v));
            }
        }
    }
    let anchor = (0..r).map(|i| rows(&h.rho_e(i))).collect();
    (Some(alpha), bracket, Some(anchor))
}

impl Structure {
    /// The canonical file. The hom-Lie–Rinehart part is written on the A-basis, so
    /// `build(to_file(s))` reproduces `s` whenever `s` is determined by that data.
    pub fn to_file(&self) -> StructureFile {
        let h = &self.hlr;
        let alg = h.alg();
        let m = alg.dim();
        let mut mul = BTreeMap::new();
        for i in 0..m {
            for j in i..m {
                let v = alg.basis_mul(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    mul.insert(format!("{},{}", i + 1, j + 1), strings(v));
                }
            }
        }
        let (alpha, bracket, anchor) = lie_section(h);
        StructureFile {
            name: self.name.clone(),
            field: h.field().to_string(),
            base_algebra: BaseAlgebra { dim: m, unit: strings(alg.unit()), mul },
            phi: rows(h.phi()),
            module_rank: h.rank(),
            alpha,
            bracket,
            anchor,
            module: self.module.as_ref().map(module_section),
            rep: self.rep.as_ref().map(|r| module_section(r.module())),
            bivector: self.bivector.as_deref().map(strings),
            generator: self.generator.as_ref().map(operator_section),
            form_differential: self.form_differential.as_ref().map(operator_section),
            multivector_differential: self.multivector_differential.as_ref().map(operator_section),
            dual: self.dual.as_ref().map(|d| {
                let (alpha, bracket, anchor) = lie_section(d);
                DualSection { alpha, bracket, anchor }
            }),
        }
    }
}

/// A module section on its own, as accepted by `--module` and `--rep`.
pub fn parse_module(bytes: &[u8], h: &HomLieRinehart) -> Result<HLRModule, InputError> {
    let text = std::str::from_utf8(bytes).map_err(|e| err("", format!("not UTF-8: {e}")))?;
    let de = &mut serde_json::Deserializer::from_str(text);
    let s: ModuleSection = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        err(if path == "." { "" } else { &path }, e.into_inner().to_string())
    })?;
    Reader { field: h.field() }.module("", &s, h.m(), h.n())
}

pub fn module_to_json(md: &HLRModule) -> String {
    to_json(&module_section(md))
}

#[cfg(test)]
mod tests;
