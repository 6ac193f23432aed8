use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semihopf::automata::{check_automaton, run_language, tensor_automata, verify_language_convolution, LinearAutomaton};
use semihopf::doi_koppinen::{check_datum, check_smash_embedding, smash_product, DKDatum};
use semihopf::hopf_analysis::{
    dual_hopf, search_antipode, search_coseparability_form, search_integrals_in, search_integrals_on,
    search_separability_idempotent, verify_integral_in, verify_integral_on, Side, DEFAULT_SEARCH_BUDGET,
};
use semihopf::semiring::semiring_axiom_check_seeded;
use semihopf::structures::{check_semialgebra, check_structure, convolve, convolve_functionals, unit_map};
use semihopf::{
    example, BasisId, BisemialgebraDesc, CheckReport, Example, Functional, HopfDesc, LinearMap, Semiring, StructureDesc,
    Vector,
};

use crate::error::{CliError, CliResult};
use crate::format::{
    emit_example, emit_reference, emit_structure, parse_document, read_reference, resolve_semiring, Coeff, Document, MapEntry,
    SemiringSpec, ValueEntry,
};

#[derive(Debug, Parser)]
#[command(name = "semihopf", version, about = "Check and explore semialgebras, semicoalgebras and Hopf semialgebras")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled checks over infinite semirings.
    #[arg(long, global = true, default_value_t = semihopf::semiring::DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Structure file (JSON).
    #[arg(long)]
    pub file: PathBuf,
    /// Degree bound for the checked basis elements; a `degree` field in the file takes precedence.
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Search {
    #[command(flatten)]
    pub common: Common,
    /// Largest number of candidates an exhaustive search may enumerate.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every law check for the structure, automaton or datum in a file.
    Check(Common),
    /// Enumerate the integrals on B (functionals t with f∗t = f(1)t).
    SearchIntegrals {
        #[command(flatten)]
        search: Search,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Enumerate the integrals in B (elements t with bt = ε(b)t).
    SearchIntegralsIn {
        #[command(flatten)]
        search: Search,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Enumerate antipodes of a bisemialgebra.
    SearchAntipode(Search),
    /// Enumerate separability idempotents and coseparability forms of a Hopf semialgebra.
    SearchSeparability(Search),
    /// Write the dual of a finite structure as a structure file.
    Dual(Common),
    /// Tabulate the convolution f∗g of two maps or two functionals.
    Convolve {
        #[command(flatten)]
        common: Common,
        /// `id`, `unit`, `antipode`, `epsilon`, `delta:<label>` or a JSON map file.
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Build and check the smash product of a Doi-Koppinen datum or a bisemialgebra.
    Smash(Common),
    #[command(subcommand)]
    Automaton(AutomatonCommand),
    #[command(subcommand)]
    Examples(ExamplesCommand),
}

#[derive(Debug, Subcommand)]
pub enum AutomatonCommand {
    /// Evaluate the recognized language on one word or on all short words.
    Run {
        #[arg(long)]
        file: PathBuf,
        /// Comma-separated letters; an empty string is the empty word.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
    },
    /// Tensor two automata and tabulate the product language.
    Product {
        #[arg(long)]
        a1: PathBuf,
        #[arg(long)]
        a2: PathBuf,
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        /// Compare against the convolution of the component languages.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExamplesCommand {
    /// List the builtin gallery.
    List,
    /// Write a builtin example as a structure file.
    Emit {
        /// Gallery name (first listed instance) or a JSON builtin reference.
        name: String,
        /// Base semiring, overriding the gallery default.
        #[arg(long)]
        semiring: Option<String>,
        /// Always write the builtin reference, even for finite examples.
        #[arg(long)]
        reference: bool,
    },
}

/// What a command produced: text, its JSON twin and the exit code.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Output {
    fn new(text: String, json: Value, passed: bool) -> Self {
        Output { text, json, code: if passed { 0 } else { 1 } }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load(path: &Path) -> CliResult<Document> {
    parse_document(&read(path)?)
}

fn load_structure(c: &Common) -> CliResult<(StructureDesc, usize)> {
    match load(&c.file)? {
        Document::Structure { desc, degree } => Ok((desc, degree.or(c.degree).unwrap_or(4))),
        other => Err(CliError::Usage(format!("{} holds a {}, not a structure", c.file.display(), other.kind()))),
    }
}

fn bisemialgebra(desc: &StructureDesc) -> CliResult<&BisemialgebraDesc> {
    desc.as_bisemialgebra().ok_or_else(|| CliError::Usage(format!("{} is a {}, not a bisemialgebra", desc.name(), desc.kind())))
}

fn hopf(desc: &StructureDesc) -> CliResult<&HopfDesc> {
    desc.as_hopf().ok_or_else(|| CliError::Usage(format!("{} is a {}, not a Hopf semialgebra", desc.name(), desc.kind())))
}

fn load_automaton(path: &Path) -> CliResult<LinearAutomaton> {
    match load(path)? {
        Document::Automaton(a) => Ok(a),
        other => Err(CliError::Usage(format!("{} holds a {}, not an automaton", path.display(), other.kind()))),
    }
}

fn reports(reports: &[CheckReport]) -> Output {
    let passed = reports.iter().all(CheckReport::passed);
    let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    Output::new(text, json!({ "verdict": if passed { "pass" } else { "fail" }, "reports": reports }), passed)
}

/// `Σ t(b) δ_b` over the given basis elements.
fn render_functional(s: &Semiring, t: &Functional, basis: &[BasisId]) -> CliResult<(String, Value)> {
    let mut parts = Vec::new();
    let mut values = Vec::new();
    for b in basis {
        let v = t.on_basis(b)?;
        if s.is_zero(&v) {
            continue;
        }
        let coeff = s.format(&v);
        parts.push(if s.is_one(&v) { format!("δ_{b}") } else { format!("{coeff}·δ_{b}") });
        values.push(json!({ "basis": b, "value": coeff }));
    }
    let text = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
    Ok((text, Value::Array(values)))
}

fn render_map(f: &LinearMap, basis: &[BasisId]) -> CliResult<(String, Value)> {
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for b in basis {
        let v = f.on_basis(b)?;
        lines.push(format!("    {b} ↦ {v}"));
        entries.push(json!({ "from": b, "to": v }));
    }
    Ok((lines.join("\n"), Value::Array(entries)))
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Check(c) => check(c, cli.seed),
        Command::SearchIntegrals { search, side } => integrals_on(search, (*side).into()),
        Command::SearchIntegralsIn { search, side } => integrals_in(search, (*side).into()),
        Command::SearchAntipode(search) => antipodes(search),
        Command::SearchSeparability(search) => separability(search),
        Command::Dual(c) => dual(c),
        Command::Convolve { common, f, g } => convolution(common, f, g),
        Command::Smash(c) => smash(c),
        Command::Automaton(AutomatonCommand::Run { file, word, maxlen }) => automaton_run(file, word.as_deref(), *maxlen),
        Command::Automaton(AutomatonCommand::Product { a1, a2, maxlen, verify }) => automaton_product(a1, a2, *maxlen, *verify),
        Command::Examples(ExamplesCommand::List) => Ok(examples_list()),
        Command::Examples(ExamplesCommand::Emit { name, semiring, reference }) => examples_emit(name, semiring.as_deref(), *reference),
    }
}

fn check(c: &Common, seed: u64) -> CliResult<Output> {
    let doc = load(&c.file)?;
    let mut out = Vec::new();
    match &doc {
        Document::Structure { desc, degree } => {
            let d = degree.or(c.degree).unwrap_or(4);
            out.push(semiring_axiom_check_seeded(desc.semiring(), 4096, seed));
            out.push(check_structure(desc, d)?);
        }
        Document::Automaton(a) => out.push(check_automaton(a, c.degree.unwrap_or(4))?),
        Document::Datum(datum) => out.push(check_datum(datum, c.degree.unwrap_or(4))?),
    }
    Ok(reports(&out))
}

fn integrals_on(search: &Search, side: Side) -> CliResult<Output> {
    let (desc, d) = load_structure(&search.common)?;
    let b = bisemialgebra(&desc)?;
    let s = b.semiring();
    let found = search_integrals_on(b, side, d, search.budget)?;
    let basis = b.carrier().up_to(d);
    let mut lines = vec![format!("{side} integrals on {} (degree <= {d}): {} found", b.name(), found.len())];
    let mut items = Vec::new();
    for t in &found {
        let (text, values) = render_functional(s, t, &basis)?;
        let total = verify_integral_on(t, b, side, d)?.is_total;
        lines.push(format!("  {text}{}", if total { "  [total]" } else { "" }));
        items.push(json!({ "values": values, "total": total }));
    }
    Ok(Output::new(lines.join("\n"), json!({ "side": side.to_string(), "degree": d, "integrals": items }), true))
}

fn integrals_in(search: &Search, side: Side) -> CliResult<Output> {
    let (desc, d) = load_structure(&search.common)?;
    let b = bisemialgebra(&desc)?;
    let found = search_integrals_in(b, side, d, search.budget)?;
    let mut lines = vec![format!("{side} integrals in {} (degree <= {d}): {} found", b.name(), found.len())];
    let mut items = Vec::new();
    for w in &found {
        let normalized = verify_integral_in(w, b, side, d)?.is_normalized;
        lines.push(format!("  {w}{}", if normalized { "  [normalized]" } else { "" }));
        items.push(json!({ "element": w, "normalized": normalized }));
    }
    Ok(Output::new(lines.join("\n"), json!({ "side": side.to_string(), "degree": d, "integrals": items }), true))
}

fn antipodes(search: &Search) -> CliResult<Output> {
    let (desc, d) = load_structure(&search.common)?;
    let b = bisemialgebra(&desc)?;
    let found = search_antipode(b, d, search.budget)?;
    let basis = b.carrier().up_to(d);
    let mut lines = vec![format!("antipodes of {} (degree <= {d}): {} found", b.name(), found.len())];
    let mut items = Vec::new();
    for (i, f) in found.iter().enumerate() {
        let (text, value) = render_map(f, &basis)?;
        lines.push(format!("  antipode {}:\n{text}", i + 1));
        items.push(value);
    }
    Ok(Output::new(lines.join("\n"), json!({ "degree": d, "antipodes": items }), true))
}

fn separability(search: &Search) -> CliResult<Output> {
    let (desc, d) = load_structure(&search.common)?;
    let h = hopf(&desc)?;
    let s = h.bi.semiring();
    let idempotents = search_separability_idempotent(h, d, search.budget)?;
    let forms = search_coseparability_form(h, d, search.budget)?;
    let basis = h.bi.carrier().up_to(d);
    let pairs: Vec<BasisId> =
        basis.iter().flat_map(|a| basis.iter().map(move |b| BasisId::pair(a.clone(), b.clone()))).collect();
    let mut lines = vec![format!("separability idempotents of {}: {} found", h.bi.name(), idempotents.len())];
    lines.extend(idempotents.iter().map(|e| format!("  {e}")));
    lines.push(format!("coseparability forms: {} found", forms.len()));
    let mut rendered = Vec::new();
    for f in &forms {
        let (text, values) = render_functional(s, f, &pairs)?;
        lines.push(format!("  {text}"));
        rendered.push(values);
    }
    Ok(Output::new(lines.join("\n"), json!({ "idempotents": idempotents, "coseparability_forms": rendered }), true))
}

fn dual(c: &Common) -> CliResult<Output> {
    let (desc, _) = load_structure(c)?;
    let file = emit_structure(&dual_hopf(&desc)?, c.degree)?;
    let value = serde_json::to_value(&file).expect("structure files serialize");
    let text = serde_json::to_string_pretty(&value).expect("json");
    Ok(Output::new(text, value, true))
}

enum Operand {
    Map(LinearMap),
    Functional(Functional),
}

fn operand(spec: &str, desc: &StructureDesc) -> CliResult<Operand> {
    let s = desc.semiring();
    Ok(match spec {
        "id" => Operand::Map(LinearMap::identity(s)),
        "unit" => {
            let b = bisemialgebra(desc)?;
            Operand::Map(unit_map(&b.coalgebra, &b.algebra))
        }
        "antipode" => Operand::Map(hopf(desc)?.antipode.clone()),
        "epsilon" => Operand::Functional(
            desc.as_coalgebra().ok_or_else(|| CliError::Usage("epsilon needs a coalgebra".into()))?.epsilon.clone(),
        ),
        _ if spec.starts_with("delta:") => {
            let label: BasisId = serde_json::from_str(&spec["delta:".len()..])
                .or_else(|_| serde_json::from_value(Value::String(spec["delta:".len()..].to_string())))?;
            Operand::Functional(Functional::delta(s, label))
        }
        path => operand_file(Path::new(path), s)?,
    })
}

/// `{"map": [{"from": b, "to": terms}]}` or `{"functional": [{"from": b, "value": c}]}`;
/// unlisted basis elements go to zero.
fn operand_file(path: &Path, s: &Semiring) -> CliResult<Operand> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct OperandFile {
        #[allow(dead_code)]
        format_version: u64,
        #[serde(default)]
        map: Option<Vec<MapEntry>>,
        #[serde(default)]
        functional: Option<Vec<ValueEntry>>,
    }
    let file: OperandFile = serde_json::from_str(&read(path)?)?;
    let parse = |map: &str, c: &Coeff| {
        let token = match c {
            Coeff::Text(t) => t.clone(),
            Coeff::Number(n) => n.to_string(),
        };
        s.parse(&token).map_err(|_| CliError::Carrier { token, map: map.into(), semiring: s.name() })
    };
    match (file.map, file.functional) {
        (Some(entries), None) => {
            let mut table = BTreeMap::new();
            for e in entries {
                let mut v = Vector::zero(s);
                for t in &e.to {
                    v.add_term(t.basis.clone(), parse("map", &t.coeff)?);
                }
                table.insert(e.from, v);
            }
            let s2 = s.clone();
            Ok(Operand::Map(LinearMap::new(path.display().to_string(), s, move |b| {
                Ok(table.get(b).cloned().unwrap_or_else(|| Vector::zero(&s2)))
            })))
        }
        (None, Some(entries)) => {
            let values = entries.iter().map(|e| Ok((e.from.clone(), parse("functional", &e.value)?))).collect::<CliResult<_>>()?;
            Ok(Operand::Functional(Functional::finite_support(path.display().to_string(), s, values)))
        }
        _ => Err(CliError::Usage(format!("{} must hold exactly one of `map` or `functional`", path.display()))),
    }
}

fn convolution(c: &Common, f: &str, g: &str) -> CliResult<Output> {
    let (desc, d) = load_structure(c)?;
    let s = desc.semiring().clone();
    let coalgebra = desc.as_coalgebra().ok_or_else(|| CliError::Usage("convolution needs a coalgebra".into()))?;
    let basis = desc.carrier().up_to(d);
    let (text, value) = match (operand(f, &desc)?, operand(g, &desc)?) {
        (Operand::Map(f), Operand::Map(g)) => {
            let algebra = desc.as_algebra().ok_or_else(|| CliError::Usage("convolving maps needs an algebra".into()))?;
            render_map(&convolve(&f, &g, coalgebra, algebra)?, &basis)?
        }
        (Operand::Functional(f), Operand::Functional(g)) => {
            let fg = convolve_functionals(&f, &g, coalgebra)?;
            let mut lines = Vec::new();
            let mut values = Vec::new();
            for b in &basis {
                let v = s.format(&fg.on_basis(b)?);
                lines.push(format!("    {b} ↦ {v}"));
                values.push(json!({ "from": b, "value": v }));
            }
            (lines.join("\n"), Value::Array(values))
        }
        _ => return Err(CliError::Usage("f and g must both be maps or both be functionals".into())),
    };
    let text = format!("{f} ∗ {g} on {} (degree <= {d}):\n{text}", desc.name());
    Ok(Output::new(text, json!({ "degree": d, "values": value }), true))
}

fn smash(c: &Common) -> CliResult<Output> {
    let datum = match load(&c.file)? {
        Document::Datum(datum) => datum,
        Document::Structure { desc, .. } => DKDatum::hopf(bisemialgebra(&desc)?),
        Document::Automaton(_) => return Err(CliError::Usage("an automaton has no smash product".into())),
    };
    let smash = smash_product(&datum)?;
    let d = c.degree.unwrap_or(4);
    let laws = check_semialgebra(&smash, d)?;
    let embedding = check_smash_embedding(&datum, d)?;
    let mut out = reports(&[laws, embedding]);
    let basis = smash.carrier.all()?;
    let mut table = vec![format!("smash product of {} on {} basis elements:", datum.name, basis.len())];
    for x in &basis {
        for y in &basis {
            table.push(format!("  ({x})·({y}) = {}", smash.mul_basis(x, y)?));
        }
    }
    out.text = format!("{}\n{}", table.join("\n"), out.text);
    if let Ok(file) = emit_structure(&StructureDesc::Semialgebra(smash), None) {
        out.json["smash_product"] = serde_json::to_value(file).expect("structure files serialize");
    }
    Ok(out)
}

fn words(aut: &LinearAutomaton, maxlen: usize) -> Vec<BasisId> {
    aut.over.carrier().up_to(maxlen)
}

fn language_table(aut: &LinearAutomaton, maxlen: usize) -> CliResult<(Vec<String>, Value)> {
    let s = aut.semiring();
    let mut lines = Vec::new();
    let mut values = Vec::new();
    for w in words(aut, maxlen) {
        let v = s.format(&run_language(aut, &Vector::basis(s, w.clone()))?);
        lines.push(format!("  ρ({w}) = {v}"));
        values.push(json!({ "word": w, "value": v }));
    }
    Ok((lines, Value::Array(values)))
}

fn automaton_run(file: &Path, word: Option<&str>, maxlen: usize) -> CliResult<Output> {
    let aut = load_automaton(file)?;
    let s = aut.semiring();
    if let Some(word) = word {
        let letters: Vec<&str> = word.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
        let w = BasisId::word(&letters);
        let v = s.format(&run_language(&aut, &Vector::basis(s, w.clone()))?);
        return Ok(Output::new(format!("ρ({w}) = {v}"), json!({ "word": w, "value": v }), true));
    }
    let (mut lines, values) = language_table(&aut, maxlen)?;
    lines.insert(0, format!("language of {} on words of length <= {maxlen}:", aut.name));
    Ok(Output::new(lines.join("\n"), json!({ "maxlen": maxlen, "language": values }), true))
}

fn automaton_product(a1: &Path, a2: &Path, maxlen: usize, verify: bool) -> CliResult<Output> {
    let (x, y) = (load_automaton(a1)?, load_automaton(a2)?);
    let t = tensor_automata(&x, &y)?;
    let (mut lines, values) = language_table(&t, maxlen)?;
    lines.insert(0, format!("language of {} on words of length <= {maxlen}:", t.name));
    let mut json = json!({ "maxlen": maxlen, "language": values });
    let mut passed = true;
    if verify {
        let r = verify_language_convolution(&x, &y, maxlen)?;
        passed = r.passed();
        lines.push(r.to_string());
        json["report"] = serde_json::to_value(&r).expect("reports serialize");
    }
    Ok(Output::new(lines.join("\n"), json, passed))
}

fn examples_list() -> Output {
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for (ex, s) in Example::gallery() {
        let negative = ex.is_negative();
        let reference = emit_reference(&ex, &s);
        let mut params = reference.clone();
        if let Some(obj) = params.as_object_mut() {
            for key in ["format_version", "example", "semiring"] {
                obj.remove(key);
            }
        }
        let params = if params.as_object().is_some_and(|o| o.is_empty()) { String::new() } else { params.to_string() };
        let tag = if negative { "  (negative control)" } else { "" };
        lines.push(format!("{:<22} {:<10} {params}{tag}", ex.name(), s.name()));
        items.push(json!({ "name": ex.name(), "semiring": s.name(), "negative": negative, "reference": reference }));
    }
    Output::new(lines.join("\n"), Value::Array(items), true)
}

fn examples_emit(name: &str, semiring: Option<&str>, reference: bool) -> CliResult<Output> {
    let (ex, default_s) = if name.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(name)?;
        let obj = value.as_object().ok_or_else(|| CliError::Usage("a reference must be a JSON object".into()))?;
        let (ex, s, _) = read_reference(obj)?;
        (ex, s)
    } else {
        let (ex, s) = Example::gallery()
            .into_iter()
            .find(|(ex, _)| ex.name() == name)
            .ok_or_else(|| CliError::Usage(format!("no gallery example named `{name}`; see `examples list`")))?;
        (ex, Some(s))
    };
    let s = match semiring {
        Some(spec) => resolve_semiring(&SemiringSpec::Name(spec.to_string()))?,
        None => default_s.ok_or_else(|| CliError::Usage("give a semiring with --semiring".into()))?,
    };
    // fail early on invalid parameter combinations
    example(&ex, &s)?;
    let value = if reference { emit_reference(&ex, &s) } else { emit_example(&ex, &s)? };
    Ok(Output::new(serde_json::to_string_pretty(&value).expect("json"), value, true))
}
