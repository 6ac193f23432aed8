//! The JSON structure-file format.
//!
//! A document is one of:
//! * a builtin reference such as `{"example": "group_hopf", "group": "Z2", "semiring": "boolean"}`;
//! * an explicit finite structure with a declared basis and term-list maps;
//! * an automaton (`"kind": "automaton"`) pairing a word bisemialgebra with a DFA;
//! * a Doi-Koppinen datum (`"kind": "dk_datum"`).
//!
//! Basis labels use the core encoding: plain strings are atoms, arrays are
//! words, and `{"mono": ...}`, `{"pair": ...}`, `{"dual": ...}` and
//! `{"indexed": ...}` cover the rest.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use semihopf::automata::{from_dfa, Dfa, LinearAutomaton};
use semihopf::doi_koppinen::DKDatum;
use semihopf::semimodule::{congruence_closure, null_pairs, DEFAULT_GUARD};
use semihopf::{
    example, BasisId, BisemialgebraDesc, BuiltinKind, Carrier, Example, FiniteTables, Functional, HopfDesc, LinearMap,
    Quotient, Scalar, SemialgebraDesc, SemicoalgebraDesc, Semiring, StructureDesc, Vector,
};

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: u64 = 1;

/// A coefficient literal; numbers are accepted as a convenience.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Text(String),
    Number(u64),
}

impl Coeff {
    fn token(&self) -> String {
        match self {
            Coeff::Text(t) => t.clone(),
            Coeff::Number(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: Coeff,
    pub basis: BasisId,
}

/// A term of a tensor, `basis` being the two tensor legs.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairTerm {
    pub coeff: Coeff,
    pub basis: (BasisId, BasisId),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MulEntry {
    pub args: (BasisId, BasisId),
    pub to: Vec<Term>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub from: BasisId,
    pub to: Vec<Term>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoEntry {
    pub from: BasisId,
    pub to: Vec<PairTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueEntry {
    pub from: BasisId,
    pub value: Coeff,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Maps {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<MulEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<CoEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<ValueEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<MapEntry>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Semialgebra,
    Semicoalgebra,
    Bisemialgebra,
    Hopf,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Semialgebra => "semialgebra",
            Kind::Semicoalgebra => "semicoalgebra",
            Kind::Bisemialgebra => "bisemialgebra",
            Kind::Hopf => "hopf",
        }
    }

    fn has_algebra(self) -> bool {
        self != Kind::Semicoalgebra
    }

    fn has_coalgebra(self) -> bool {
        self != Kind::Semialgebra
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TablesSpec {
    pub name: String,
    pub carrier: Vec<String>,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
    pub zero: String,
    pub one: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemiringSpec {
    Name(String),
    Builtin {
        builtin: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<u32>,
    },
    Tables {
        tables: TablesSpec,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Relation {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientSpec {
    /// `p + n ~ 0` for each listed pair `(p, n)`.
    NullPairs(Vec<(BasisId, BasisId)>),
    /// The congruence generated by the relations; finite semirings only.
    Congruence(Vec<Relation>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub format_version: u64,
    pub name: String,
    pub kind: Kind,
    pub semiring: SemiringSpec,
    pub basis: Vec<BasisId>,
    #[serde(default)]
    pub maps: Maps,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<QuotientSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonFile {
    format_version: u64,
    #[allow(dead_code)]
    kind: String,
    #[serde(default)]
    name: Option<String>,
    over: Value,
    dfa: Dfa,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumFile {
    format_version: u64,
    #[allow(dead_code)]
    kind: String,
    construction: String,
    #[serde(default)]
    over: Option<Value>,
    #[serde(default)]
    semiring: Option<SemiringSpec>,
    #[serde(default)]
    n: Option<u32>,
    #[serde(default)]
    m: Option<u32>,
}

/// A fully resolved document.
#[derive(Clone, Debug)]
// parsed once per invocation, so variant sizes do not matter
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Structure { desc: StructureDesc, degree: Option<usize> },
    Automaton(LinearAutomaton),
    Datum(DKDatum),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Structure { desc, .. } => desc.kind(),
            Document::Automaton(_) => "automaton",
            Document::Datum(_) => "dk_datum",
        }
    }
}

fn version(v: u64) -> CliResult<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(CliError::Version(v))
    }
}

fn invalid(what: &str, e: serde_json::Error) -> CliError {
    CliError::Usage(format!("invalid {what}: {e}"))
}

pub fn parse_document(text: &str) -> CliResult<Document> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or_else(|| CliError::Usage("a structure file must be a JSON object".into()))?;
    if let Some(v) = obj.get("format_version") {
        version(v.as_u64().ok_or_else(|| CliError::Usage("format_version must be an integer".into()))?)?;
    }
    if obj.contains_key("example") {
        let (desc, degree) = parse_reference(obj)?;
        return Ok(Document::Structure { desc, degree });
    }
    match obj.get("kind").and_then(Value::as_str) {
        Some("automaton") => {
            let file: AutomatonFile = serde_json::from_str(text)?;
            version(file.format_version)?;
            let b = match parse_value(&file.over)? {
                Document::Structure { desc, .. } => desc.into_bisemialgebra()?,
                other => return Err(CliError::Usage(format!("an automaton must be over a bisemialgebra, not a {}", other.kind()))),
            };
            let mut aut = from_dfa(&file.dfa, &b)?;
            if let Some(name) = file.name {
                aut.name = name;
            }
            Ok(Document::Automaton(aut))
        }
        Some("dk_datum") => {
            let file: DatumFile = serde_json::from_str(text)?;
            version(file.format_version)?;
            parse_datum(file).map(Document::Datum)
        }
        _ => {
            let file: StructureFile = serde_json::from_str(text)?;
            let degree = file.degree;
            Ok(Document::Structure { desc: resolve(file)?, degree })
        }
    }
}

fn parse_value(v: &Value) -> CliResult<Document> {
    parse_document(&v.to_string())
}

fn parse_datum(file: DatumFile) -> CliResult<DKDatum> {
    match file.construction.as_str() {
        "hopf" => {
            let over = file.over.ok_or_else(|| CliError::Usage("a `hopf` datum needs `over`".into()))?;
            match parse_value(&over)? {
                Document::Structure { desc, .. } => Ok(DKDatum::hopf(&desc.into_bisemialgebra()?)),
                other => Err(CliError::Usage(format!("`over` must be a structure, not a {}", other.kind()))),
            }
        }
        "graded_group" => {
            let need = |v: Option<u32>, f: &str| v.ok_or_else(|| CliError::Usage(format!("`graded_group` needs `{f}`")));
            let s = resolve_semiring(file.semiring.as_ref().ok_or_else(|| CliError::Usage("`graded_group` needs `semiring`".into()))?)?;
            Ok(DKDatum::graded_group(&s, need(file.n, "n")?, need(file.m, "m")?)?)
        }
        other => Err(CliError::Usage(format!("unknown datum construction `{other}` (expected hopf or graded_group)"))),
    }
}

/// `Z2`, `Z/2`, `C2` or a bare integer.
fn group_order(v: &Value) -> CliResult<u64> {
    if let Some(n) = v.as_u64() {
        return Ok(n);
    }
    let text = v.as_str().unwrap_or_default();
    let digits = text.trim_start_matches(['Z', 'C', '/']);
    digits.parse().map_err(|_| CliError::Usage(format!("cannot read a cyclic group from {v}")))
}

/// Reads a builtin reference into its example, optional semiring and
/// optional degree bound. `group` is accepted as an alias for `order`.
pub fn read_reference(obj: &Map<String, Value>) -> CliResult<(Example, Option<Semiring>, Option<usize>)> {
    let mut obj = obj.clone();
    obj.remove("format_version");
    let degree = match obj.remove("degree") {
        Some(d) => Some(d.as_u64().ok_or_else(|| CliError::Usage("degree must be an integer".into()))? as usize),
        None => None,
    };
    let semiring = match obj.remove("semiring") {
        Some(spec) => {
            let spec: SemiringSpec = serde_json::from_value(spec).map_err(|e| invalid("semiring", e))?;
            Some(resolve_semiring(&spec)?)
        }
        None => None,
    };
    if let Some(g) = obj.remove("group") {
        obj.insert("order".into(), Value::from(group_order(&g)?));
    }
    let ex: Example = serde_json::from_value(Value::Object(obj)).map_err(|e| invalid("builtin reference", e))?;
    Ok((ex, semiring, degree))
}

fn parse_reference(obj: &Map<String, Value>) -> CliResult<(StructureDesc, Option<usize>)> {
    let (ex, s, degree) = read_reference(obj)?;
    let s = s.ok_or_else(|| CliError::Usage("a builtin reference needs a `semiring`".into()))?;
    Ok((example(&ex, &s)?, degree))
}

pub fn resolve_semiring(spec: &SemiringSpec) -> CliResult<Semiring> {
    let builtin = |name: &str, param: Option<u32>| -> CliResult<Semiring> {
        if name == "integers_mod" {
            let m = param.ok_or_else(|| CliError::Usage("integers_mod needs a `param`".into()))?;
            return Ok(Semiring::integers_mod(m)?);
        }
        Ok(Semiring::builtin(BuiltinKind::parse(name)?, param)?)
    };
    match spec {
        SemiringSpec::Name(name) => builtin(name, None),
        SemiringSpec::Builtin { builtin: name, param } => builtin(name, *param),
        SemiringSpec::Tables { tables } => Ok(Semiring::from_tables(&FiniteTables {
            name: tables.name.clone(),
            carrier: tables.carrier.clone(),
            add: tables.add.clone(),
            mul: tables.mul.clone(),
            zero: tables.zero.clone(),
            one: tables.one.clone(),
        })?),
    }
}

pub fn semiring_spec(s: &Semiring) -> SemiringSpec {
    match (s.builtin_kind(), s.table()) {
        (Some((BuiltinKind::Naturals, _)), _) => SemiringSpec::Name("naturals".into()),
        (Some((BuiltinKind::Boolean, _)), _) => SemiringSpec::Name("boolean".into()),
        (Some((BuiltinKind::Xn, p)), _) => SemiringSpec::Builtin { builtin: "xn".into(), param: p },
        (Some((BuiltinKind::SubsetLattice, p)), _) => SemiringSpec::Builtin { builtin: "subset_lattice".into(), param: p },
        (None, Some(t)) => {
            let label = |i: &u16| t.carrier[*i as usize].clone();
            let table = |rows: &Vec<Vec<u16>>| rows.iter().map(|r| r.iter().map(label).collect()).collect();
            SemiringSpec::Tables {
                tables: TablesSpec {
                    name: t.name.clone(),
                    carrier: t.carrier.clone(),
                    add: table(&t.add),
                    mul: table(&t.mul),
                    zero: label(&t.zero),
                    one: label(&t.one),
                },
            }
        }
        (None, None) => unreachable!("every semiring is builtin or tabulated"),
    }
}

struct Resolver {
    s: Semiring,
    declared: BTreeSet<BasisId>,
}

impl Resolver {
    fn label(&self, map: &str, b: &BasisId) -> CliResult<()> {
        if self.declared.contains(b) {
            Ok(())
        } else {
            Err(CliError::UndeclaredLabel { label: b.to_string(), map: map.into() })
        }
    }

    fn coeff(&self, map: &str, c: &Coeff) -> CliResult<Scalar> {
        let token = c.token();
        self.s.parse(&token).map_err(|_| CliError::Carrier { token, map: map.into(), semiring: self.s.name() })
    }

    fn vector(&self, map: &str, terms: &[Term]) -> CliResult<Vector> {
        let mut v = Vector::zero(&self.s);
        for t in terms {
            self.label(map, &t.basis)?;
            v.add_term(t.basis.clone(), self.coeff(map, &t.coeff)?);
        }
        Ok(v)
    }

    fn pair_vector(&self, map: &str, terms: &[PairTerm]) -> CliResult<Vector> {
        let mut v = Vector::zero(&self.s);
        for t in terms {
            self.label(map, &t.basis.0)?;
            self.label(map, &t.basis.1)?;
            v.add_term(BasisId::pair(t.basis.0.clone(), t.basis.1.clone()), self.coeff(map, &t.coeff)?);
        }
        Ok(v)
    }

    /// Collects a table and insists on exactly one entry per expected key.
    fn table<T>(&self, map: &str, entries: Vec<(BasisId, T)>, expected: &[BasisId]) -> CliResult<BTreeMap<BasisId, T>> {
        let mut out = BTreeMap::new();
        for (k, v) in entries {
            let label = k.to_string();
            if out.insert(k, v).is_some() {
                return Err(CliError::Duplicate { label, map: map.into() });
            }
        }
        if let Some(missing) = expected.iter().find(|k| !out.contains_key(*k)) {
            return Err(CliError::Usage(format!("`{map}` has no entry for `{missing}`")));
        }
        Ok(out)
    }
}

fn resolve(file: StructureFile) -> CliResult<StructureDesc> {
    version(file.format_version)?;
    let s = resolve_semiring(&file.semiring)?;
    let basis = file.basis;
    let r = Resolver { s: s.clone(), declared: basis.iter().cloned().collect() };
    if r.declared.len() != basis.len() {
        return Err(CliError::Usage("the basis lists a label twice".into()));
    }
    let missing = |map: &'static str| CliError::MissingMap { kind: file.kind.name().into(), name: file.name.clone(), map };
    let quotient = match file.quotient {
        None => Quotient::Free,
        Some(QuotientSpec::NullPairs(pairs)) => {
            for (p, n) in &pairs {
                r.label("quotient", p)?;
                r.label("quotient", n)?;
            }
            null_pairs(&s, pairs)?
        }
        Some(QuotientSpec::Congruence(rels)) => {
            let gens = rels
                .iter()
                .map(|rel| Ok((r.vector("quotient", &rel.lhs)?, r.vector("quotient", &rel.rhs)?)))
                .collect::<CliResult<Vec<_>>>()?;
            Quotient::Congruence(Arc::new(congruence_closure(&basis, &s, &gens, DEFAULT_GUARD)?))
        }
    };
    let carrier = Carrier::Finite(basis.clone());
    let maps = file.maps;

    let algebra = if file.kind.has_algebra() {
        let mu = maps.mu.ok_or_else(|| missing("mu"))?;
        let pairs: Vec<BasisId> =
            basis.iter().flat_map(|a| basis.iter().map(move |b| BasisId::pair(a.clone(), b.clone()))).collect();
        let entries = mu
            .iter()
            .map(|e| {
                r.label("mu", &e.args.0)?;
                r.label("mu", &e.args.1)?;
                Ok((BasisId::pair(e.args.0.clone(), e.args.1.clone()), r.vector("mu", &e.to)?))
            })
            .collect::<CliResult<Vec<_>>>()?;
        let table = r.table("mu", entries, &pairs)?;
        let eta = r.vector("eta", &maps.eta.ok_or_else(|| missing("eta"))?)?;
        Some(SemialgebraDesc {
            name: file.name.clone(),
            semiring: s.clone(),
            carrier: carrier.clone(),
            mu: LinearMap::from_table("μ", &s, table),
            eta,
            quotient: quotient.clone(),
        })
    } else {
        None
    };

    let coalgebra = if file.kind.has_coalgebra() {
        let delta = maps.delta.ok_or_else(|| missing("delta"))?;
        let entries = delta
            .iter()
            .map(|e| {
                r.label("delta", &e.from)?;
                Ok((e.from.clone(), r.pair_vector("delta", &e.to)?))
            })
            .collect::<CliResult<Vec<_>>>()?;
        let delta = r.table("delta", entries, &basis)?;
        let epsilon = maps.epsilon.ok_or_else(|| missing("epsilon"))?;
        let entries = epsilon
            .iter()
            .map(|e| {
                r.label("epsilon", &e.from)?;
                Ok((e.from.clone(), r.coeff("epsilon", &e.value)?))
            })
            .collect::<CliResult<Vec<_>>>()?;
        let epsilon = r.table("epsilon", entries, &basis)?;
        Some(SemicoalgebraDesc {
            name: file.name.clone(),
            semiring: s.clone(),
            carrier,
            delta: LinearMap::from_table("Δ", &s, delta),
            epsilon: Functional::from_table("ε", &s, epsilon),
            quotient,
        })
    } else {
        None
    };

    Ok(match (file.kind, algebra, coalgebra) {
        (Kind::Semialgebra, Some(a), _) => StructureDesc::Semialgebra(a),
        (Kind::Semicoalgebra, _, Some(c)) => StructureDesc::Semicoalgebra(c),
        (Kind::Bisemialgebra, Some(algebra), Some(coalgebra)) => {
            StructureDesc::Bisemialgebra(BisemialgebraDesc { algebra, coalgebra })
        }
        (Kind::Hopf, Some(algebra), Some(coalgebra)) => {
            let antipode = maps.antipode.ok_or_else(|| missing("antipode"))?;
            let entries = antipode
                .iter()
                .map(|e| {
                    r.label("antipode", &e.from)?;
                    Ok((e.from.clone(), r.vector("antipode", &e.to)?))
                })
                .collect::<CliResult<Vec<_>>>()?;
            let table = r.table("antipode", entries, &basis)?;
            StructureDesc::Hopf(HopfDesc {
                bi: BisemialgebraDesc { algebra, coalgebra },
                antipode: LinearMap::from_table("𝔞", &s, table),
            })
        }
        _ => unreachable!("kind decides which parts exist"),
    })
}

fn not_closed(map: &str, b: &BasisId) -> CliError {
    CliError::Core(semihopf::Error::Unsupported(format!("`{map}` leaves the basis at `{b}`")))
}

struct Emitter<'a> {
    s: &'a Semiring,
    declared: BTreeSet<BasisId>,
}

impl Emitter<'_> {
    fn coeff(&self, c: &Scalar) -> Coeff {
        Coeff::Text(self.s.format(c))
    }

    fn terms(&self, map: &str, v: &Vector) -> CliResult<Vec<Term>> {
        v.iter()
            .map(|(b, c)| {
                if !self.declared.contains(b) {
                    return Err(not_closed(map, b));
                }
                Ok(Term { coeff: self.coeff(c), basis: b.clone() })
            })
            .collect()
    }

    fn pair_terms(&self, map: &str, v: &Vector) -> CliResult<Vec<PairTerm>> {
        v.iter()
            .map(|(b, c)| match b.as_pair() {
                Some((l, r)) if self.declared.contains(l) && self.declared.contains(r) => {
                    Ok(PairTerm { coeff: self.coeff(c), basis: (l.clone(), r.clone()) })
                }
                _ => Err(not_closed(map, b)),
            })
            .collect()
    }
}

/// Writes a finite structure as an explicit document. Fails with
/// `Unsupported` for infinite carriers, maps leaving the basis, or quotients
/// without a finite presentation.
pub fn emit_structure(desc: &StructureDesc, degree: Option<usize>) -> CliResult<StructureFile> {
    let s = desc.semiring();
    let basis = desc.carrier().all()?;
    let e = Emitter { s, declared: basis.iter().cloned().collect() };
    let mut maps = Maps::default();
    if let Some(a) = desc.as_algebra() {
        let mut mu = Vec::new();
        for x in &basis {
            for y in &basis {
                mu.push(MulEntry { args: (x.clone(), y.clone()), to: e.terms("mu", &a.mul_basis(x, y)?)? });
            }
        }
        maps.mu = Some(mu);
        maps.eta = Some(e.terms("eta", &a.eta)?);
    }
    if let Some(c) = desc.as_coalgebra() {
        let delta = basis
            .iter()
            .map(|b| Ok(CoEntry { from: b.clone(), to: e.pair_terms("delta", &c.delta.on_basis(b)?)? }))
            .collect::<CliResult<_>>()?;
        let epsilon = basis
            .iter()
            .map(|b| Ok(ValueEntry { from: b.clone(), value: e.coeff(&c.epsilon.on_basis(b)?) }))
            .collect::<CliResult<_>>()?;
        maps.delta = Some(delta);
        maps.epsilon = Some(epsilon);
    }
    if let Some(h) = desc.as_hopf() {
        let antipode = basis
            .iter()
            .map(|b| Ok(MapEntry { from: b.clone(), to: e.terms("antipode", &h.antipode.on_basis(b)?)? }))
            .collect::<CliResult<_>>()?;
        maps.antipode = Some(antipode);
    }
    let unsupported = |m: &str| CliError::Core(semihopf::Error::Unsupported(m.into()));
    let quotient = match desc.quotient() {
        Quotient::Free => None,
        Quotient::Normalizer(_) => {
            let gens = desc.quotient().generators(s);
            if gens.is_empty() {
                return Err(unsupported("the quotient has no finite presentation"));
            }
            let pairs = gens
                .iter()
                .map(|(l, r)| {
                    let terms: Vec<_> = l.iter().collect();
                    match terms.as_slice() {
                        [(p, a), (n, b)] if r.is_zero() && s.is_one(a) && s.is_one(b) => Ok(((*p).clone(), (*n).clone())),
                        _ => Err(unsupported("the quotient is not given by null pairs")),
                    }
                })
                .collect::<CliResult<_>>()?;
            Some(QuotientSpec::NullPairs(pairs))
        }
        Quotient::Congruence(c) => Some(QuotientSpec::Congruence(
            c.generators()
                .iter()
                .map(|(l, r)| Ok(Relation { lhs: e.terms("quotient", l)?, rhs: e.terms("quotient", r)? }))
                .collect::<CliResult<_>>()?,
        )),
    };
    let kind = match desc {
        StructureDesc::Semialgebra(_) => Kind::Semialgebra,
        StructureDesc::Semicoalgebra(_) => Kind::Semicoalgebra,
        StructureDesc::Bisemialgebra(_) => Kind::Bisemialgebra,
        StructureDesc::Hopf(_) => Kind::Hopf,
    };
    Ok(StructureFile {
        format_version: FORMAT_VERSION,
        name: desc.name().to_string(),
        kind,
        semiring: semiring_spec(s),
        basis,
        maps,
        quotient,
        degree,
    })
}

/// The builtin-reference form of a gallery example.
pub fn emit_reference(ex: &Example, s: &Semiring) -> Value {
    let mut obj = Map::new();
    obj.insert("format_version".into(), Value::from(FORMAT_VERSION));
    if let Value::Object(fields) = serde_json::to_value(ex).expect("examples serialize") {
        obj.extend(fields);
    }
    obj.insert("semiring".into(), serde_json::to_value(semiring_spec(s)).expect("semirings serialize"));
    Value::Object(obj)
}

/// Explicit tables when the example is finite and closed, otherwise the
/// builtin reference.
pub fn emit_example(ex: &Example, s: &Semiring) -> CliResult<Value> {
    let desc = example(ex, s)?;
    match emit_structure(&desc, None) {
        Ok(file) => Ok(serde_json::to_value(file).expect("structure files serialize")),
        Err(CliError::Core(semihopf::Error::Unsupported(_))) => Ok(emit_reference(ex, s)),
        Err(e) => Err(e),
    }
}
