//! JSON documents and the batch command-line front end.
//!
//! A document describes `G`, the pair `(I, M)` and a coloured fan:
//!
//! ```json
//! {
//!   "group": "A2",
//!   "I": [],
//!   "M": [[1, 0], [0, 1]],
//!   "fan": [{ "generators": [[1, 0], [0, 1]], "colours": ["a1"] }],
//!   "add_faces": true,
//!   "divisors": { "D": { "[-1,0]": 1, "a2": 2 } }
//! }
//! ```
//!
//! Every report is a human-readable summary, the line [`SENTINEL`], then one
//! JSON value.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::dictionary::{
    affine_local_structure, classify_variety, decolouration, morphism_check, orbit_closure,
    orbit_table, regularity_report, weight_monoid_generators, DictError,
};
use crate::divisors::{
    anticanonical, cartier_data, class_group, picard_group, positivity_check, BInvariantDivisor,
    DivisorError, PrimeDivisor,
};
use crate::horo::{
    build_coloured_lattice, coloured_lattice_map, validate_coloured_fan, ColouredCone, ColouredFan,
    ColouredLattice, HoroError, HorosphericalDatum,
};
use crate::intlin::{AbelianGroup, IntMatrix, IntVec};
use crate::polyhedra::Cone;
use crate::rootsys::RootDatum;

pub const SENTINEL: &str = "--- json ---";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    #[serde(default)]
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub colours: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub group: String,
    #[serde(default)]
    pub torus_rank: usize,
    #[serde(rename = "I", default)]
    pub parabolic: Vec<String>,
    /// Basis of the character lattice `M`; defaults to all characters.
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub characters: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub fan: Vec<ConeSpec>,
    /// Close the listed cones under coloured faces before validating.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub add_faces: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub divisors: BTreeMap<String, BTreeMap<String, i64>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Io(String),
}

impl ParseError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError::Field {
            field: field.into(),
            message: message.into(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            ParseError::Syntax {
                line,
                column,
                message,
            } => {
                json!({ "kind": "syntax", "line": line, "column": column, "message": message })
            }
            ParseError::Field { field, message } => {
                json!({ "kind": "field", "field": field, "message": message })
            }
            ParseError::Io(m) => json!({ "kind": "io", "message": m }),
        }
    }
}

/// Why a document could not be turned into a datum and a fan.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] HoroError),
}

pub fn parse_input(text: &str) -> Result<InputDocument, ParseError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.resolve()?;
    Ok(doc)
}

/// The document with group-dependent fields resolved to indices.
#[derive(Clone, Debug)]
struct Resolved {
    group: RootDatum,
    parabolic: BTreeSet<usize>,
    characters: IntMatrix,
    cones: Vec<ColouredCone>,
}

impl InputDocument {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn resolve(&self) -> Result<Resolved, ParseError> {
        let group = RootDatum::parse(&self.group, self.torus_rank)
            .map_err(|e| ParseError::field("group", e.to_string()))?;
        let s = group.semisimple_rank();
        let mut parabolic = BTreeSet::new();
        for (i, l) in self.parabolic.iter().enumerate() {
            let a = group
                .parse_label(l)
                .map_err(|_| ParseError::field(format!("I[{i}]"), format!("no simple root {l}")))?;
            parabolic.insert(a);
        }
        let characters = match &self.characters {
            None => {
                let mut m = IntMatrix::identity(group.rank());
                if !parabolic.is_empty() {
                    let keep: Vec<IntVec> = m
                        .col_vecs()
                        .into_iter()
                        .enumerate()
                        .filter(|(j, _)| !parabolic.contains(j))
                        .map(|(_, c)| c)
                        .collect();
                    m = IntMatrix::from_cols(group.rank(), &keep);
                }
                m
            }
            Some(cols) => {
                let mut vecs = Vec::new();
                for (j, c) in cols.iter().enumerate() {
                    if c.len() != group.rank() {
                        return Err(ParseError::field(
                            format!("M[{j}]"),
                            format!("expected {} entries, found {}", group.rank(), c.len()),
                        ));
                    }
                    vecs.push(c.iter().map(|&x| BigInt::from(x)).collect());
                }
                IntMatrix::from_cols(group.rank(), &vecs)
            }
        };
        let rank = characters.ncols();
        let mut cones = Vec::new();
        for (k, spec) in self.fan.iter().enumerate() {
            let mut gens = Vec::new();
            for (g, v) in spec.generators.iter().enumerate() {
                if v.len() != rank {
                    return Err(ParseError::field(
                        format!("fan[{k}].generators[{g}]"),
                        format!("expected {rank} entries, found {}", v.len()),
                    ));
                }
                gens.push(v.iter().map(|&x| BigInt::from(x)).collect::<IntVec>());
            }
            let mut colours = BTreeSet::new();
            for (c, l) in spec.colours.iter().enumerate() {
                let field = format!("fan[{k}].colours[{c}]");
                let a = group
                    .parse_label(l)
                    .map_err(|_| ParseError::field(&field, format!("no simple root {l}")))?;
                if parabolic.contains(&a) || a >= s {
                    return Err(ParseError::field(
                        &field,
                        format!("{l} is in I, so it is not a colour"),
                    ));
                }
                colours.insert(a);
            }
            cones.push(ColouredCone::new(
                Cone::from_generators(rank, &gens),
                colours,
            ));
        }
        for (name, terms) in &self.divisors {
            for key in terms.keys() {
                parse_divisor_key(&group, key, rank)
                    .map_err(|m| ParseError::field(format!("divisors.{name}.{key}"), m))?;
            }
        }
        Ok(Resolved {
            group,
            parabolic,
            characters,
            cones,
        })
    }

    pub fn datum(&self) -> Result<HorosphericalDatum, LoadError> {
        let r = self.resolve()?;
        Ok(HorosphericalDatum::new(r.group, r.parabolic, r.characters)?)
    }

    fn parts(&self) -> Result<(HorosphericalDatum, ColouredLattice, Vec<ColouredCone>), LoadError> {
        let r = self.resolve()?;
        let d = HorosphericalDatum::new(r.group, r.parabolic, r.characters)?;
        let lattice = build_coloured_lattice(&d);
        Ok((d, lattice, r.cones))
    }

    /// The fan as listed, unchecked. In literal mode the trivial cone is
    /// added when absent; with `add_faces` all missing faces are.
    pub fn raw_fan(&self) -> Result<(HorosphericalDatum, ColouredFan), LoadError> {
        let (d, lattice, mut cones) = self.parts()?;
        if self.add_faces {
            let fan = ColouredFan::from_cones(lattice.clone(), cones.clone())
                .unwrap_or_else(|_| ColouredFan::new_unchecked(lattice.clone(), cones.clone()));
            return Ok((d, fan));
        }
        let zero = ColouredCone::zero(lattice.rank());
        if !cones.contains(&zero) {
            cones.push(zero);
        }
        Ok((d, ColouredFan::new_unchecked(lattice, cones)))
    }

    /// The datum and the checked fan.
    pub fn load(&self) -> Result<(HorosphericalDatum, ColouredFan), LoadError> {
        let (d, lattice, mut cones) = self.parts()?;
        let fan = if self.add_faces {
            ColouredFan::from_cones(lattice, cones)?
        } else {
            let zero = ColouredCone::zero(lattice.rank());
            if !cones.contains(&zero) {
                cones.push(zero);
            }
            ColouredFan::new(lattice, cones)?
        };
        Ok((d, fan))
    }

    pub fn divisor(&self, name: &str, fan: &ColouredFan) -> Result<BInvariantDivisor, String> {
        let terms = self
            .divisors
            .get(name)
            .ok_or_else(|| format!("no divisor named {name}"))?;
        let mut list = Vec::new();
        for (key, &c) in terms {
            let p = parse_divisor_key(fan.lattice().group(), key, fan.lattice().rank())?;
            list.push((p, BigInt::from(c)));
        }
        BInvariantDivisor::from_terms(fan, &list).map_err(|e| match e {
            DivisorError::UnknownRay(_) => {
                format!("divisor {name} names a ray that is not a non-coloured ray of the fan")
            }
            other => other.to_string(),
        })
    }

    /// A document for `fan` over `d`, listing every cone.
    pub fn from_fan(d: &HorosphericalDatum, fan: &ColouredFan) -> Self {
        let g = d.group();
        let lat = fan.lattice();
        InputDocument {
            group: g.descriptor(),
            torus_rank: g.torus_rank(),
            parabolic: d.parabolic().iter().map(|&a| g.label(a)).collect(),
            characters: Some(
                d.characters()
                    .col_vecs()
                    .iter()
                    .map(|c| small_ints(c))
                    .collect(),
            ),
            fan: fan.cones().iter().map(|c| cone_spec(c, lat)).collect(),
            add_faces: false,
            divisors: BTreeMap::new(),
        }
    }
}

fn small_ints(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("entry fits in i64"))
        .collect()
}

fn cone_spec(c: &ColouredCone, lat: &ColouredLattice) -> ConeSpec {
    ConeSpec {
        generators: c.cone.generators().iter().map(|g| small_ints(g)).collect(),
        colours: c.colours.iter().map(|&a| lat.label(a)).collect(),
    }
}

/// Keys are colour labels like `"a2"` or rays like `"[-1,0]"`.
fn parse_divisor_key(group: &RootDatum, key: &str, rank: usize) -> Result<PrimeDivisor, String> {
    let k = key.trim();
    if let Some(inner) = k
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .or_else(|| k.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
    {
        let v: Result<IntVec, _> = inner
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<BigInt>())
            .collect();
        let v = v.map_err(|_| format!("cannot read ray {key}"))?;
        if v.len() != rank {
            return Err(format!("ray {key} should have {rank} entries"));
        }
        return Ok(PrimeDivisor::Ray(v));
    }
    group
        .parse_label(k)
        .map(PrimeDivisor::Colour)
        .map_err(|_| format!("no simple root {key}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    Orbits,
    Classify,
    ClassGroup,
    Picard,
    Cartier,
    Positivity,
    Anticanonical,
    Smooth,
    Decolour,
    OrbitClosure,
    Morphism,
    WeightMonoid,
    LocalStructure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Invalid = 1,
    ParseError = 2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub status: Status,
    pub human: String,
    pub json: Value,
}

impl Report {
    fn ok(human: String, json: Value) -> Self {
        Report {
            status: Status::Success,
            human,
            json,
        }
    }

    fn invalid(human: String, json: Value) -> Self {
        Report {
            status: Status::Invalid,
            human,
            json,
        }
    }

    fn parse_error(e: &ParseError) -> Self {
        Report {
            status: Status::ParseError,
            human: format!("parse error: {e}"),
            json: json!({ "error": e.to_json() }),
        }
    }

    pub fn render(&self) -> String {
        let body = serde_json::to_string_pretty(&self.json).expect("json");
        format!("{}\n{SENTINEL}\n{body}\n", self.human.trim_end())
    }

    /// The JSON block of a rendered report.
    pub fn json_of(rendered: &str) -> Option<Value> {
        let (_, tail) = rendered.split_once(&format!("{SENTINEL}\n"))?;
        serde_json::from_str(tail).ok()
    }
}

#[derive(Debug, Parser)]
#[command(name = "horofan", about = "Coloured fans of horospherical varieties")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Input document, or `-` for standard input.
    pub file: String,
    #[arg(long)]
    pub divisor: Option<String>,
    #[arg(long)]
    pub cone: Option<usize>,
    #[arg(long)]
    pub target: Option<String>,
}

/// Extra arguments a command may need.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub divisor: Option<String>,
    pub cone: Option<usize>,
    pub target: Option<InputDocument>,
}

fn jint(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn jvec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(jint).collect())
}

fn jvecs(v: &[IntVec]) -> Value {
    Value::Array(v.iter().map(|x| jvec(x)).collect())
}

fn jgroup(g: &AbelianGroup) -> Value {
    json!({ "text": g.to_string(), "free_rank": g.free_rank, "torsion": g.torsion.iter().map(jint).collect::<Vec<_>>() })
}

fn fmt_vec(v: &[BigInt]) -> String {
    format!(
        "({})",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn jcone(c: &ColouredCone, lat: &ColouredLattice) -> Value {
    json!({
        "rays": jvecs(c.cone.rays()),
        "lineality": jvecs(c.cone.lineality()),
        "colours": c.colours.iter().map(|&a| lat.label(a)).collect::<Vec<_>>(),
    })
}

fn labels(g: &RootDatum, set: &BTreeSet<usize>) -> Vec<String> {
    set.iter().map(|&a| g.label(a)).collect()
}

fn jdatum(d: &HorosphericalDatum) -> Value {
    json!({
        "group": d.group().descriptor(),
        "torus_rank": d.group().torus_rank(),
        "I": labels(d.group(), d.parabolic()),
        "M": jvecs(&d.characters().col_vecs()),
    })
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(header.iter().map(|s| s.to_string()).collect())];
    out.extend(rows.iter().map(|r| line(r.clone())));
    out.join("\n")
}

fn load_error(e: LoadError) -> Report {
    match e {
        LoadError::Parse(p) => Report::parse_error(&p),
        LoadError::Invalid(HoroError::InvalidFan(rep)) => Report::invalid(
            format!("invalid coloured fan\n{rep}"),
            json!({ "valid": false, "violations": serde_json::to_value(&rep).expect("json")["violations"] }),
        ),
        LoadError::Invalid(other) => Report::invalid(
            format!("invalid input: {other}"),
            json!({ "valid": false, "error": other.to_string() }),
        ),
    }
}

fn dict_error(e: DictError) -> Report {
    Report::invalid(format!("error: {e}"), json!({ "error": e.to_string() }))
}

fn usage_error(message: String) -> Report {
    Report::parse_error(&ParseError::field("arguments", message))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs one command on a parsed document.
pub fn execute(command: Command, doc: &InputDocument, opts: &Options) -> Report {
    if command == Command::Validate {
        return validate(doc);
    }
    let (d, fan) = match doc.load() {
        Ok(x) => x,
        Err(e) => return load_error(e),
    };
    let lat = fan.lattice();
    match command {
        Command::Validate => unreachable!(),
        Command::Orbits => orbits(&fan, &d),
        Command::Classify => match classify_variety(&fan, &d) {
            Ok(p) => {
                let pairs = [
                    ("simple", p.is_simple),
                    ("affine", p.is_affine),
                    ("complete", p.is_complete),
                    ("projective", p.is_projective),
                    ("toroidal", p.is_toroidal),
                    ("simplicial", p.is_simplicial),
                    ("q_factorial", p.is_q_factorial),
                    ("regular", p.is_regular),
                    ("factorial", p.is_factorial),
                    ("smooth", p.is_smooth),
                ];
                let human = pairs
                    .iter()
                    .map(|(k, v)| format!("{k}: {}", yes(*v)))
                    .collect::<Vec<_>>()
                    .join("\n");
                let json = Value::Object(
                    pairs
                        .iter()
                        .map(|(k, v)| (k.to_string(), json!(v)))
                        .collect(),
                );
                Report::ok(human, json)
            }
            Err(e) => dict_error(e),
        },
        Command::ClassGroup => {
            let cl = class_group(&fan);
            let gens: Vec<String> = cl.generators.iter().map(|p| p.label(lat)).collect();
            let rels: Vec<String> = cl.relations.iter().map(|r| r.to_string()).collect();
            let primes: Vec<String> = crate::divisors::prime_divisors(&fan)
                .iter()
                .map(|p| p.label(lat))
                .collect();
            let human = format!(
                "class group: {}\ngenerated by: {}\nprime divisors: {}\nrelations:\n{}\nleft exact: {}",
                cl.group,
                gens.join(", "),
                primes.join(", "),
                rels.iter().map(|r| format!("  {r}")).collect::<Vec<_>>().join("\n"),
                yes(cl.left_exact)
            );
            let json = json!({
                "group": jgroup(&cl.group),
                "generators": gens,
                "prime_divisors": primes,
                "relations": cl.relations.iter().map(|r| jvec(&r.coefficients())).collect::<Vec<_>>(),
                "left_exact": cl.left_exact,
            });
            Report::ok(human, json)
        }
        Command::Picard => {
            let p = picard_group(&fan);
            let s = &p.sequence;
            let human = format!(
                "Picard group: {}\nPLF/LF: {}\nZ(C minus F): {} ({})\nsequence: left injective {}, ranks agree {}",
                p.pic,
                p.plf_mod_lf,
                s.colour_part,
                s.unused_colours.iter().map(|&a| lat.label(a)).collect::<Vec<_>>().join(", "),
                yes(s.left_injective),
                yes(s.ranks_agree)
            );
            let json = json!({
                "picard": jgroup(&p.pic),
                "plf_mod_lf": jgroup(&p.plf_mod_lf),
                "cartier_lattice": jvecs(&p.cartier_lattice),
                "sequence": {
                    "span_perp_rank": s.span_perp_rank,
                    "unused_colours": s.unused_colours.iter().map(|&a| lat.label(a)).collect::<Vec<_>>(),
                    "colour_part": jgroup(&s.colour_part),
                    "left_injective": s.left_injective,
                    "ranks_agree": s.ranks_agree,
                    "splits_as_expected": s.splits_as_expected,
                },
            });
            Report::ok(human, json)
        }
        Command::Cartier | Command::Positivity => {
            let Some(name) = &opts.divisor else {
                return usage_error(format!("{command:?} needs --divisor"));
            };
            let delta = match doc.divisor(name, &fan) {
                Ok(x) => x,
                Err(m) => return Report::invalid(m.clone(), json!({ "error": m })),
            };
            if command == Command::Cartier {
                match cartier_data(&delta, &fan) {
                    None => Report::ok(
                        format!("{name} = {} is not Cartier", delta.describe(lat)),
                        json!({ "cartier": false }),
                    ),
                    Some(data) => {
                        let rows: Vec<Vec<String>> = data
                            .cones
                            .iter()
                            .zip(&data.m)
                            .map(|(&c, m)| {
                                vec![c.to_string(), lat.describe(&fan.cones()[c]), fmt_vec(m)]
                            })
                            .collect();
                        let human = format!(
                            "{name} = {} is Cartier\n{}",
                            delta.describe(lat),
                            table(&["#", "cone", "m"], &rows)
                        );
                        let json = json!({
                            "cartier": true,
                            "data": data.cones.iter().zip(&data.m).map(|(&c, m)| json!({ "cone": c, "m": jvec(m) })).collect::<Vec<_>>(),
                        });
                        Report::ok(human, json)
                    }
                }
            } else {
                match positivity_check(&delta, &fan) {
                    Ok(p) => Report::ok(
                        format!(
                            "{name} = {}\ncartier: {}\nbasepoint free: {}\nample: {}",
                            delta.describe(lat),
                            yes(p.cartier),
                            yes(p.basepoint_free),
                            yes(p.ample)
                        ),
                        json!({ "cartier": p.cartier, "basepoint_free": p.basepoint_free, "ample": p.ample }),
                    ),
                    Err(e) => {
                        Report::invalid(format!("error: {e}"), json!({ "error": e.to_string() }))
                    }
                }
            }
        }
        Command::Anticanonical => match anticanonical(&fan, &d) {
            Ok(k) => Report::ok(
                format!("-K = {}", k.describe(lat)),
                json!({
                    "coefficients": jvec(&k.coefficients()),
                    "prime_divisors": crate::divisors::prime_divisors(&fan).iter().map(|p| p.label(lat)).collect::<Vec<_>>(),
                    "text": k.describe(lat),
                }),
            ),
            Err(e) => Report::invalid(format!("error: {e}"), json!({ "error": e.to_string() })),
        },
        Command::Smooth => match regularity_report(&fan, &d) {
            Ok(rep) => {
                let rows: Vec<Vec<String>> = rep
                    .iter()
                    .map(|c| {
                        let why: Vec<String> = c
                            .smoothness
                            .violations
                            .iter()
                            .map(|v| v.describe(d.group()))
                            .collect();
                        vec![
                            c.index.to_string(),
                            lat.describe(&fan.cones()[c.index]),
                            yes(c.simplicial).into(),
                            yes(c.regular).into(),
                            yes(c.smooth).into(),
                            why.join("; "),
                        ]
                    })
                    .collect();
                let all = rep.iter().all(|c| c.smooth);
                let human = format!(
                    "{}\nsmooth: {}",
                    table(
                        &["#", "cone", "simplicial", "regular", "smooth", "reason"],
                        &rows
                    ),
                    yes(all)
                );
                let json = json!({
                    "smooth": all,
                    "cones": rep.iter().map(|c| json!({
                        "index": c.index,
                        "multiset": jvecs(&c.multiset),
                        "simplicial": c.simplicial,
                        "regular": c.regular,
                        "smooth": c.smooth,
                        "violations": c.smoothness.violations.iter().map(|v| {
                            let mut o = serde_json::to_value(v).expect("json");
                            o["text"] = json!(v.describe(d.group()));
                            o
                        }).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
                Report::ok(human, json)
            }
            Err(e) => dict_error(e),
        },
        Command::Decolour => {
            let dec = decolouration(&fan);
            let out = InputDocument::from_fan(&d, &dec);
            let human = dec
                .cones()
                .iter()
                .map(|c| lat.describe(c))
                .collect::<Vec<_>>()
                .join("\n");
            Report::ok(
                human,
                json!({ "document": serde_json::to_value(&out).expect("json") }),
            )
        }
        Command::OrbitClosure => {
            let Some(i) = opts.cone else {
                return usage_error("orbit-closure needs --cone".into());
            };
            match orbit_closure(&fan, i, &d) {
                Ok((cf, cd)) => {
                    let out = InputDocument::from_fan(&cd, &cf);
                    let human = format!(
                        "closure of the orbit of cone {i}: {}\nopen orbit: G/H{}\n{}",
                        lat.describe(&fan.cones()[i]),
                        cd,
                        cf.cones()
                            .iter()
                            .map(|c| cf.lattice().describe(c))
                            .collect::<Vec<_>>()
                            .join("\n")
                    );
                    Report::ok(
                        human,
                        json!({ "datum": jdatum(&cd), "document": serde_json::to_value(&out).expect("json") }),
                    )
                }
                Err(e) => dict_error(e),
            }
        }
        Command::WeightMonoid | Command::LocalStructure => {
            let Some(i) = opts.cone else {
                return usage_error(format!("{command:?} needs --cone"));
            };
            let Some(c) = fan.cones().get(i) else {
                return dict_error(DictError::ConeNotInFan(i));
            };
            if command == Command::WeightMonoid {
                match weight_monoid_generators(c) {
                    Ok(g) => Report::ok(
                        format!(
                            "generators: {}",
                            g.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>().join(", ")
                        ),
                        json!({ "cone": i, "generators": jvecs(&g) }),
                    ),
                    Err(e) => dict_error(e),
                }
            } else {
                match affine_local_structure(c, &d) {
                    Ok(ls) => {
                        let zl = build_coloured_lattice(&ls.levi);
                        Report::ok(
                            format!(
                                "Q = {{{}}}\nLevi: {} with torus rank {}\nZ: {}",
                                labels(d.group(), &ls.q_index).join(", "),
                                ls.levi.group().descriptor(),
                                ls.levi.group().torus_rank(),
                                zl.describe(&ls.z_cone)
                            ),
                            json!({
                                "Q": labels(d.group(), &ls.q_index),
                                "levi": jdatum(&ls.levi),
                                "levi_roots": ls.levi_roots.iter().map(|&a| d.group().label(a)).collect::<Vec<_>>(),
                                "z_cone": jcone(&ls.z_cone, &zl),
                            }),
                        )
                    }
                    Err(e) => dict_error(e),
                }
            }
        }
        Command::Morphism => {
            let Some(tdoc) = &opts.target else {
                return usage_error("morphism needs --target".into());
            };
            let (td, tfan) = match tdoc.load() {
                Ok(x) => x,
                Err(e) => return load_error(e),
            };
            let map = match coloured_lattice_map(&d, &td) {
                Ok(m) => m,
                Err(e) => {
                    return Report::invalid(
                        format!("error: {e}"),
                        json!({ "error": e.to_string() }),
                    )
                }
            };
            match morphism_check(&map, &fan, &tfan) {
                Ok(r) => Report::ok(
                    format!(
                        "compatible: {}\nproper: {}\nC_Φ = {{{}}}",
                        yes(r.compatible),
                        yes(r.proper),
                        labels(d.group(), &map.dominant).join(", ")
                    ),
                    json!({
                        "compatible": r.compatible,
                        "proper": r.proper,
                        "matrix": jvecs(&map.matrix.row_vecs()),
                        "dominant": labels(d.group(), &map.dominant),
                    }),
                ),
                Err(e) => dict_error(e),
            }
        }
    }
}

fn validate(doc: &InputDocument) -> Report {
    let (d, fan) = match doc.raw_fan() {
        Ok(x) => x,
        Err(e) => return load_error(e),
    };
    let rep = validate_coloured_fan(&fan);
    let lat = fan.lattice();
    let colours: Vec<String> = lat
        .colours()
        .iter()
        .map(|c| format!("{} -> {}", lat.label(c.root), fmt_vec(&c.point)))
        .collect();
    let json = json!({
        "valid": rep.is_valid(),
        "datum": jdatum(&d),
        "colour_points": lat.colours().iter().map(|c| json!({ "colour": lat.label(c.root), "point": jvec(&c.point) })).collect::<Vec<_>>(),
        "cones": fan.cones().iter().map(|c| jcone(c, lat)).collect::<Vec<_>>(),
        "violations": serde_json::to_value(&rep).expect("json")["violations"],
    });
    let human = format!(
        "G/H{} with lattice rank {}\ncolour points: {}\n{} cones: {}",
        d,
        lat.rank(),
        if colours.is_empty() {
            "none".into()
        } else {
            colours.join(", ")
        },
        fan.len(),
        if rep.is_valid() {
            "valid".to_string()
        } else {
            format!("invalid\n{rep}")
        }
    );
    if rep.is_valid() {
        Report::ok(human, json)
    } else {
        Report::invalid(human, json)
    }
}

fn orbits(fan: &ColouredFan, d: &HorosphericalDatum) -> Report {
    let lat = fan.lattice();
    let table_rows = match orbit_table(fan, d) {
        Ok(t) => t,
        Err(e) => return dict_error(e),
    };
    let rows: Vec<Vec<String>> = table_rows
        .iter()
        .map(|r| {
            vec![
                r.cone_index.to_string(),
                lat.describe(&fan.cones()[r.cone_index]),
                r.dimension.to_string(),
                format!("G/H{}", r.datum.to_string()),
                r.in_closure_of
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ]
        })
        .collect();
    let human = format!(
        "{} orbits\n{}",
        table_rows.len(),
        table(
            &["#", "coloured cone", "dim", "orbit", "in closure of"],
            &rows
        )
    );
    let json = json!({
        "orbits": table_rows.iter().map(|r| json!({
            "cone": r.cone_index,
            "coloured_cone": jcone(&fan.cones()[r.cone_index], lat),
            "dimension": r.dimension,
            "datum": jdatum(&r.datum),
            "in_closure_of": r.in_closure_of,
        })).collect::<Vec<_>>(),
    });
    Report::ok(human, json)
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, ParseError> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| ParseError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| ParseError::Io(format!("{path}: {e}")))
    }
}

/// Runs the tool on command-line arguments; returns the exit code and the output.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() {
                Status::ParseError as i32
            } else {
                Status::Success as i32
            };
            return (code, e.to_string());
        }
    };
    let report = run_args(&args, stdin);
    (report.status as i32, report.render())
}

fn run_args(args: &Args, stdin: &mut dyn Read) -> Report {
    let text = match read_source(&args.file, stdin) {
        Ok(t) => t,
        Err(e) => return Report::parse_error(&e),
    };
    let doc = match parse_input(&text) {
        Ok(d) => d,
        Err(e) => return Report::parse_error(&e),
    };
    let target = match &args.target {
        None => None,
        Some(path) => match read_source(path, stdin).and_then(|t| parse_input(&t)) {
            Ok(d) => Some(d),
            Err(e) => return Report::parse_error(&e),
        },
    };
    execute(
        args.command,
        &doc,
        &Options {
            divisor: args.divisor.clone(),
            cone: args.cone,
            target,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORBITS: &str = r#"{
        "group": "A2",
        "fan": [
            { "generators": [[1, 0], [0, 1]], "colours": ["a1"] },
            { "generators": [[0, 1], [-1, -1]], "colours": [] },
            { "generators": [[1, 0], [-1, -1]], "colours": ["a1"] },
            { "generators": [[0, 1]], "colours": [] },
            { "generators": [[1, 0]], "colours": ["a1"] },
            { "generators": [[-1, -1]], "colours": [] },
            { "generators": [], "colours": [] }
        ]
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let doc = parse_input(ORBITS).unwrap();
        let once = doc.to_json_string();
        let again = parse_input(&once).unwrap().to_json_string();
        assert_eq!(once, again);
        assert_eq!(
            doc.datum().unwrap(),
            HorosphericalDatum::full(RootDatum::parse("A2", 0).unwrap())
        );
    }

    #[test]
    fn parse_errors() {
        let bad = r#"{ "group": "A2", "fan": [{ "generators": [[1, 0]], "colours": ["a3"] }] }"#;
        assert!(
            matches!(parse_input(bad), Err(ParseError::Field { field, .. }) if field == "fan[0].colours[0]")
        );
        let unknown = r#"{ "group": "A2", "colour": 1 }"#;
        assert!(matches!(
            parse_input(unknown),
            Err(ParseError::Syntax { .. })
        ));
        let in_i = r#"{ "group": "A2", "I": ["a1"], "fan": [{ "generators": [[1]], "colours": ["a1"] }] }"#;
        assert!(matches!(parse_input(in_i), Err(ParseError::Field { .. })));
        assert!(matches!(
            parse_input("{"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn empty_fan_is_trivial() {
        let doc = parse_input(r#"{ "group": "A2", "fan": [] }"#).unwrap();
        let (_, fan) = doc.load().unwrap();
        assert_eq!(fan.len(), 1);
        assert_eq!(fan.cones()[0], ColouredCone::zero(2));
    }

    #[test]
    fn default_characters_respect_i() {
        let doc = parse_input(r#"{ "group": "A2", "I": ["a2"] }"#).unwrap();
        let d = doc.datum().unwrap();
        assert_eq!(d.characters(), &IntMatrix::from_i64(&[&[1], &[0]]));
    }

    #[test]
    fn orbit_report() {
        let doc = parse_input(ORBITS).unwrap();
        let r = execute(Command::Orbits, &doc, &Options::default());
        assert_eq!(r.status, Status::Success);
        let dims: Vec<u64> = r.json["orbits"]
            .as_array()
            .unwrap()
            .iter()
            .map(|o| o["dimension"].as_u64().unwrap())
            .collect();
        assert_eq!(dims, vec![2, 3, 2, 4, 3, 4, 5]);
        let out = r.render();
        assert_eq!(Report::json_of(&out).unwrap(), r.json);
        assert_eq!(
            execute(Command::Orbits, &doc, &Options::default()).render(),
            out
        );
    }

    #[test]
    fn missing_face_is_reported() {
        let text =
            r#"{ "group": "A2", "fan": [{ "generators": [[1, 0], [0, 1]], "colours": ["a1"] }] }"#;
        let r = execute(
            Command::Validate,
            &parse_input(text).unwrap(),
            &Options::default(),
        );
        assert_eq!(r.status, Status::Invalid);
        assert!(r.human.contains("missing"), "{}", r.human);
        assert_eq!(r.json["violations"][0]["kind"], "missing_face");
    }

    #[test]
    fn exit_codes() {
        let mut empty: &[u8] = b"";
        let (code, _) = run(["horofan", "validate", "-"], &mut &b"{ nope"[..]);
        assert_eq!(code, 2);
        let (code, out) = run(["horofan", "orbits", "-"], &mut ORBITS.as_bytes());
        assert_eq!(code, 0, "{out}");
        let (code, _) = run(["horofan", "cartier", "-"], &mut ORBITS.as_bytes());
        assert_eq!(code, 2);
        let (code, _) = run(["horofan", "frobnicate", "-"], &mut empty);
        assert_eq!(code, 2);
    }
}
