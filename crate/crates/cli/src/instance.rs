//! The instance format.
//!
//! ```text
//! # comment
//! field rationals            | field gf 3
//! quiver
//!   vertices 1 2 3
//!   arrow a 1 2
//! relations
//!   a*b - 2 c*d
//! max_path_length 3
//! structure                  # instead of quiver/relations
//!   labels 1 x
//!   unit 1 0
//!   product x x = 0 0
//!   block v = 1 0
//! modules
//!   R = regular
//!   S = simple 1             | projective V | injective V
//!   M dim 2
//!     act a = 0 1 ; 0 0
//! subcategory R S
//! universe knit [BOUND]      | universe NAME ...
//! task
//!   n 2
//!   idempotent P1 P2
//! ```
//!
//! Keywords start in column 1, section content is indented. Unlisted
//! products are zero.

use std::path::Path;
use std::sync::OnceLock;

use recoll::algebra::{Block, Relation};
use recoll::approx::AddSubcategory;
use recoll::higher_ar::{enumerate_indecomposables, IndecUniverse};
use recoll::module::{injective, projective, simple, vertex_count, vertex_name, RightModule};
use recoll::{Algebra, Error, FieldSpec, Mat, QuiverPresentation, Result, Scalar};

const MAX_SEARCHED_LENGTH: usize = 16;

#[derive(Clone, Debug)]
struct Tok {
    text: String,
    line: usize,
    col: usize,
}

impl Tok {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { line: self.line, col: self.col, msg: msg.into() }
    }

    fn semantic(&self, msg: impl AsRef<str>) -> Error {
        Error::Semantic(format!("line {}: {}", self.line, msg.as_ref()))
    }
}

fn tokenize(line: &str, n: usize) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        let sep = c.is_whitespace() || c == '=' || c == ';';
        match (start, sep) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                out.push(Tok { text: line[s..i].to_string(), line: n, col: s + 1 });
                start = None;
            }
            _ => {}
        }
        if c == '=' || c == ';' {
            out.push(Tok { text: c.to_string(), line: n, col: i + 1 });
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
struct Raw {
    field: Option<Vec<Tok>>,
    vertices: Option<Vec<Tok>>,
    arrows: Vec<Vec<Tok>>,
    relations: Vec<Vec<Tok>>,
    max_len: Option<Tok>,
    structure: Vec<Vec<Tok>>,
    modules: Vec<Vec<Tok>>,
    subcategory: Option<Vec<Tok>>,
    universe: Option<Vec<Tok>>,
    n: Option<Tok>,
    idempotent: Option<Vec<Tok>>,
    quiver: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Quiver,
    Relations,
    Structure,
    Modules,
    Task,
}

fn read_raw(text: &str) -> Result<Raw> {
    let mut raw = Raw::default();
    let mut section = Section::None;
    let mut quiver_seen = false;
    let mut structure_seen = false;
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        let line = line.split('#').next().unwrap_or("");
        let toks = tokenize(line, n);
        let Some(head) = toks.first() else { continue };
        let indented = line.starts_with(|c: char| c.is_whitespace());
        if indented {
            match section {
                Section::None => return Err(head.err("indented line outside a section")),
                Section::Quiver => match head.text.as_str() {
                    "vertices" => {
                        if raw.vertices.is_some() {
                            return Err(head.err("vertices declared twice"));
                        }
                        raw.vertices = Some(toks[1..].to_vec());
                    }
                    "arrow" => {
                        if toks.len() != 4 {
                            return Err(head.err("expected `arrow NAME SOURCE TARGET`"));
                        }
                        raw.arrows.push(toks[1..].to_vec());
                    }
                    other => return Err(head.err(format!("unknown quiver entry `{other}`"))),
                },
                Section::Relations => raw.relations.push(toks),
                Section::Structure => raw.structure.push(toks),
                Section::Modules => raw.modules.push(toks),
                Section::Task => match head.text.as_str() {
                    "n" => {
                        if toks.len() != 2 {
                            return Err(head.err("expected `n K`"));
                        }
                        raw.n = Some(toks[1].clone());
                    }
                    "idempotent" => raw.idempotent = Some(toks[1..].to_vec()),
                    other => return Err(head.err(format!("unknown task parameter `{other}`"))),
                },
            }
            continue;
        }
        section = Section::None;
        if toks.len() > 1 && ["quiver", "relations", "structure", "modules", "task"].contains(&head.text.as_str()) {
            return Err(toks[1].err("section keywords take no arguments"));
        }
        let rest = toks[1..].to_vec();
        let once = |seen: bool, what: &str| if seen { Err(head.err(format!("`{what}` given twice"))) } else { Ok(()) };
        match head.text.as_str() {
            "field" => {
                once(raw.field.is_some(), "field")?;
                raw.field = Some(rest);
            }
            "quiver" => {
                once(quiver_seen, "quiver")?;
                quiver_seen = true;
                section = Section::Quiver;
            }
            "relations" => section = Section::Relations,
            "structure" => {
                once(structure_seen, "structure")?;
                structure_seen = true;
                section = Section::Structure;
            }
            "modules" => section = Section::Modules,
            "task" => section = Section::Task,
            "max_path_length" => {
                once(raw.max_len.is_some(), "max_path_length")?;
                if rest.len() != 1 {
                    return Err(head.err("expected `max_path_length L`"));
                }
                raw.max_len = Some(rest[0].clone());
            }
            "subcategory" => {
                once(raw.subcategory.is_some(), "subcategory")?;
                raw.subcategory = Some(rest);
            }
            "universe" => {
                once(raw.universe.is_some(), "universe")?;
                raw.universe = Some(rest);
            }
            other => return Err(head.err(format!("unknown keyword `{other}`"))),
        }
    }
    if quiver_seen && structure_seen {
        return Err(Error::Semantic("both a quiver and structure constants are given".into()));
    }
    if !quiver_seen && !structure_seen {
        return Err(Error::Semantic("no algebra: add a `quiver` or `structure` section".into()));
    }
    if structure_seen && (!raw.relations.is_empty() || raw.max_len.is_some()) {
        return Err(Error::Semantic("relations and max_path_length need a quiver".into()));
    }
    raw.quiver = quiver_seen;
    Ok(raw)
}

/// `rationals`, `Q`, `gf 3`, `gf3`, `GF(3)`.
pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect::<String>().to_lowercase();
    match t.as_str() {
        "rationals" | "q" | "qq" => Ok(FieldSpec::Rationals),
        _ => match t.strip_prefix("gf").map(str::parse::<u32>) {
            Some(Ok(p)) => FieldSpec::prime(p),
            _ => Err(Error::InvalidField(format!("unknown field `{s}`"))),
        },
    }
}

fn usize_tok(t: &Tok) -> Result<usize> {
    t.text.parse().map_err(|_| t.err(format!("expected a nonnegative integer, found `{}`", t.text)))
}

fn scalar_tok(f: FieldSpec, t: &Tok) -> Result<Scalar> {
    f.parse(&t.text).map_err(|e| match e {
        Error::Parse(m) => t.err(m),
        other => t.semantic(other.to_string()),
    })
}

fn vector(f: FieldSpec, toks: &[Tok]) -> Result<Vec<Scalar>> {
    toks.iter().map(|t| scalar_tok(f, t)).collect()
}

/// Rows separated by `;`.
fn matrix(f: FieldSpec, toks: &[Tok], rows: usize, cols: usize, at: &Tok) -> Result<Mat> {
    let parsed: Vec<Vec<Scalar>> =
        toks.split(|t| t.text == ";").filter(|r| !r.is_empty() || rows > 0).map(|r| vector(f, r)).collect::<Result<_>>()?;
    let parsed = if rows == 0 { vec![] } else { parsed };
    if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
        return Err(at.semantic(format!("expected a {rows} x {cols} matrix")));
    }
    Ok(Mat::from_rows(f, cols, parsed))
}

fn expect_eq(toks: &[Tok], i: usize, at: &Tok) -> Result<()> {
    match toks.get(i) {
        Some(t) if t.text == "=" => Ok(()),
        Some(t) => Err(t.err("expected `=`")),
        None => Err(at.err("expected `=`")),
    }
}

fn parse_relation(q: &QuiverPresentation, toks: &[Tok]) -> Result<Relation> {
    let f = q.field;
    let mut terms = Vec::new();
    let mut sign = f.one();
    let mut coeff: Option<Scalar> = None;
    let mut pieces = Vec::new();
    for t in toks {
        // split leading signs off tokens like `-a*b`
        let mut s = t.text.as_str();
        let mut col = t.col;
        while let Some(c) = s.chars().next().filter(|c| *c == '+' || *c == '-') {
            pieces.push(Tok { text: c.to_string(), line: t.line, col });
            s = &s[1..];
            col += 1;
        }
        if !s.is_empty() {
            pieces.push(Tok { text: s.to_string(), line: t.line, col });
        }
    }
    for t in &pieces {
        match t.text.as_str() {
            "+" | "-" => {
                if coeff.is_some() {
                    return Err(t.err("sign after a coefficient"));
                }
                if t.text == "-" {
                    sign = f.neg(&sign);
                }
            }
            s if s.starts_with(|c: char| c.is_ascii_digit()) => {
                if coeff.is_some() {
                    return Err(t.err("two coefficients in a row"));
                }
                coeff = Some(scalar_tok(f, t)?);
            }
            s => {
                let mut arrows = Vec::new();
                for name in s.split('*') {
                    let a = q.arrow(name).ok_or_else(|| t.semantic(format!("unknown arrow `{name}`")))?;
                    arrows.push(a);
                }
                let c = f.mul(&sign, &coeff.take().unwrap_or_else(|| f.one()));
                terms.push((c, arrows));
                sign = f.one();
            }
        }
    }
    if coeff.is_some() || terms.is_empty() {
        let at = pieces.last().or(toks.first()).expect("relation lines are nonempty");
        return Err(at.err("relation must end with a path"));
    }
    Ok(Relation { terms })
}

fn build_quiver(raw: &Raw, f: FieldSpec) -> Result<Algebra> {
    let vertices = raw.vertices.as_ref().ok_or_else(|| Error::Semantic("quiver without `vertices`".into()))?;
    let names: Vec<String> = vertices.iter().map(|t| t.text.clone()).collect();
    for (i, t) in vertices.iter().enumerate() {
        if names[..i].contains(&t.text) {
            return Err(t.semantic(format!("vertex `{}` repeated", t.text)));
        }
    }
    let mut q = QuiverPresentation::new(f, names, 0);
    for a in &raw.arrows {
        if !a[0].text.starts_with(|c: char| c.is_alphabetic()) || a[0].text.contains('*') {
            return Err(a[0].err("arrow names start with a letter and contain no `*`"));
        }
        q.add_arrow(&a[0].text, &a[1].text, &a[2].text).map_err(|e| a[0].semantic(e.to_string()))?;
    }
    for r in &raw.relations {
        let rel = parse_relation(&q, r)?;
        q.relations.push(rel);
    }
    match &raw.max_len {
        Some(t) => {
            q.max_path_length = usize_tok(t)?;
            q.to_algebra().map_err(|e| t.semantic(e.to_string()))
        }
        None => {
            for l in 0..=MAX_SEARCHED_LENGTH {
                q.max_path_length = l;
                match q.to_algebra() {
                    Ok(a) => return Ok(a),
                    Err(Error::DimensionBound(_)) => continue,
                    Err(e) => return Err(Error::Semantic(e.to_string())),
                }
            }
            Err(Error::Semantic(format!("paths of length {MAX_SEARCHED_LENGTH} survive the relations; set max_path_length")))
        }
    }
}

fn build_structure(raw: &Raw, f: FieldSpec) -> Result<Algebra> {
    let mut labels: Option<Vec<String>> = None;
    let mut unit = None;
    let mut products = Vec::new();
    let mut blocks = Vec::new();
    for toks in &raw.structure {
        let head = &toks[0];
        match head.text.as_str() {
            "labels" => labels = Some(toks[1..].iter().map(|t| t.text.clone()).collect()),
            "unit" => unit = Some(toks[1..].to_vec()),
            "product" => products.push(toks.clone()),
            "block" => blocks.push(toks.clone()),
            other => return Err(head.err(format!("unknown structure entry `{other}`"))),
        }
    }
    let labels = labels.ok_or_else(|| Error::Semantic("structure without `labels`".into()))?;
    let n = labels.len();
    let index = |t: &Tok| labels.iter().position(|l| *l == t.text).ok_or_else(|| t.semantic(format!("unknown basis label `{}`", t.text)));
    let unit_toks = unit.ok_or_else(|| Error::Semantic("structure without `unit`".into()))?;
    let unit = vector(f, &unit_toks)?;
    if unit.len() != n {
        return Err(Error::Semantic(format!("unit must have {n} entries")));
    }
    let mut c = vec![vec![vec![f.zero(); n]; n]; n];
    for p in &products {
        if p.len() < 4 {
            return Err(p[0].err("expected `product L1 L2 = v`"));
        }
        let (i, j) = (index(&p[1])?, index(&p[2])?);
        expect_eq(p, 3, &p[0])?;
        let v = vector(f, &p[4..])?;
        if v.len() != n {
            return Err(p[0].semantic(format!("product vector must have {n} entries")));
        }
        c[i][j] = v;
    }
    let alg = Algebra::from_structure_constants(f, &c, unit, Some(labels.clone()))
        .map_err(|e| Error::Semantic(format!("structure constants: {e}")))?;
    if blocks.is_empty() {
        return Ok(alg);
    }
    let mut bs = Vec::new();
    for b in &blocks {
        if b.len() < 3 {
            return Err(b[0].err("expected `block NAME = v`"));
        }
        expect_eq(b, 2, &b[0])?;
        let v = vector(f, &b[3..])?;
        if v.len() != n {
            return Err(b[0].semantic(format!("block vector must have {n} entries")));
        }
        bs.push(Block { name: b[1].text.clone(), element: v });
    }
    alg.with_blocks(bs).map_err(|e| blocks[0][0].semantic(e.to_string()))
}

fn vertex_index(alg: &Algebra, t: &Tok) -> Result<usize> {
    let n = vertex_count(alg).map_err(|e| t.semantic(e.to_string()))?;
    for v in 0..n {
        if vertex_name(alg, v)? == t.text {
            return Ok(v);
        }
    }
    Err(t.semantic(format!("unknown vertex `{}`", t.text)))
}

/// Name, dimension and `act` lines of a module still being read.
type PendingModule = (Tok, usize, Vec<(usize, Mat)>);

fn build_modules(raw: &Raw, alg: &Algebra) -> Result<Vec<(String, RightModule)>> {
    let f = alg.field();
    let mut out: Vec<(String, RightModule)> = Vec::new();
    // a module given by `dim` collects `act` lines until the next entry
    let mut pending: Option<PendingModule> = None;
    let finish = |p: PendingModule, out: &mut Vec<(String, RightModule)>| -> Result<()> {
        let (name, dim, acts) = p;
        let m = RightModule::from_partial_action(alg, dim, &acts).map_err(|e| name.semantic(format!("module {}: {e}", name.text)))?;
        out.push((name.text, m));
        Ok(())
    };
    for toks in &raw.modules {
        let head = &toks[0];
        if head.text == "act" {
            let Some((_, dim, acts)) = pending.as_mut() else {
                return Err(head.err("`act` outside a module given by `dim`"));
            };
            if toks.len() < 3 {
                return Err(head.err("expected `act LABEL = rows`"));
            }
            let i = alg
                .labels()
                .iter()
                .position(|l| *l == toks[1].text)
                .ok_or_else(|| toks[1].semantic(format!("unknown basis label `{}`", toks[1].text)))?;
            expect_eq(toks, 2, head)?;
            acts.push((i, matrix(f, &toks[3..], *dim, *dim, head)?));
            continue;
        }
        if let Some(p) = pending.take() {
            finish(p, &mut out)?;
        }
        if out.iter().any(|(n, _)| *n == head.text) {
            return Err(head.semantic(format!("module `{}` declared twice", head.text)));
        }
        match toks.get(1).map(|t| t.text.as_str()) {
            Some("dim") if toks.len() == 3 => pending = Some((head.clone(), usize_tok(&toks[2])?, Vec::new())),
            Some("=") => {
                let kind = toks.get(2).ok_or_else(|| head.err("expected a module after `=`"))?;
                let m = match (kind.text.as_str(), toks.get(3)) {
                    ("regular", None) => RightModule::regular(alg),
                    ("simple", Some(v)) => simple(alg, vertex_index(alg, v)?)?,
                    ("projective", Some(v)) => projective(alg, vertex_index(alg, v)?)?,
                    ("injective", Some(v)) => injective(alg, vertex_index(alg, v)?)?,
                    _ => return Err(kind.err("expected `regular`, `simple V`, `projective V` or `injective V`")),
                };
                if toks.len() > 4 {
                    return Err(toks[4].err("unexpected token"));
                }
                out.push((head.text.clone(), m));
            }
            _ => return Err(head.err("expected `NAME = ...` or `NAME dim D`")),
        }
    }
    if let Some(p) = pending.take() {
        finish(p, &mut out)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniverseSpec {
    Knit(Option<usize>),
    Names(Vec<String>),
}

/// A validated instance file.
#[derive(Debug)]
pub struct Instance {
    pub name: String,
    pub algebra: Algebra,
    pub modules: Vec<(String, RightModule)>,
    pub subcategory: Option<Vec<String>>,
    pub universe: UniverseSpec,
    pub n: Option<usize>,
    pub idempotent: Option<Vec<String>>,
    knitted: OnceLock<IndecUniverse>,
}

impl Instance {
    pub fn from_path(path: &Path, field: Option<FieldSpec>) -> Result<Instance> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let name = path.file_stem().map_or_else(|| "instance".into(), |s| s.to_string_lossy().into_owned());
        Instance::parse(&name, &text, field)
    }

    /// Parses and validates; `field` overrides the declared field.
    pub fn parse(name: &str, text: &str, field: Option<FieldSpec>) -> Result<Instance> {
        let raw = read_raw(text)?;
        let declared = match &raw.field {
            Some(toks) if toks.is_empty() => return Err(Error::Semantic("`field` needs a value".into())),
            Some(toks) => {
                let s: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
                Some(parse_field(&s.join(" ")).map_err(|e| toks[0].semantic(e.to_string()))?)
            }
            None => None,
        };
        let f = field.or(declared).ok_or_else(|| Error::Semantic("no `field` declared".into()))?;
        let algebra = if raw.quiver { build_quiver(&raw, f)? } else { build_structure(&raw, f)? };
        let modules = build_modules(&raw, &algebra)?;
        let universe = match raw.universe.as_deref() {
            None | Some([]) => UniverseSpec::Knit(None),
            Some([k, rest @ ..]) if k.text == "knit" => match rest {
                [] => UniverseSpec::Knit(None),
                [b] => UniverseSpec::Knit(Some(usize_tok(b)?)),
                [_, t, ..] => return Err(t.err("unexpected token")),
            },
            Some(names) => {
                for t in names {
                    if !modules.iter().any(|(n, _)| *n == t.text) {
                        return Err(t.semantic(format!("universe member `{}` is not a declared module", t.text)));
                    }
                }
                UniverseSpec::Names(names.iter().map(|t| t.text.clone()).collect())
            }
        };
        let n = raw.n.as_ref().map(usize_tok).transpose()?;
        if let (Some(0), Some(t)) = (n, raw.n.as_ref()) {
            return Err(t.semantic("n must be positive"));
        }
        let inst = Instance {
            name: name.to_string(),
            algebra,
            modules,
            subcategory: raw.subcategory.as_ref().map(|ts| ts.iter().map(|t| t.text.clone()).collect()),
            universe,
            n,
            idempotent: raw.idempotent.as_ref().map(|ts| ts.iter().map(|t| t.text.clone()).collect()),
            knitted: OnceLock::new(),
        };
        if let Some(ts) = &raw.subcategory {
            if ts.is_empty() {
                return Err(Error::Semantic("empty subcategory".into()));
            }
            for t in ts {
                inst.resolve(&t.text).map_err(|e| t.semantic(e.to_string()))?;
            }
            inst.subcategory()?;
        }
        if let UniverseSpec::Names(_) = inst.universe {
            inst.universe()?;
        }
        Ok(inst)
    }

    fn knitted(&self) -> Result<&IndecUniverse> {
        if let Some(u) = self.knitted.get() {
            return Ok(u);
        }
        let bound = match self.universe {
            UniverseSpec::Knit(b) => b,
            UniverseSpec::Names(_) => None,
        };
        let u = enumerate_indecomposables(&self.algebra, bound)?;
        Ok(self.knitted.get_or_init(|| u))
    }

    /// A declared module, a projective, simple or injective by vertex, or a
    /// knitted indecomposable by its standard name.
    pub fn resolve(&self, name: &str) -> Result<RightModule> {
        if let Some((_, m)) = self.modules.iter().find(|(n, _)| n == name) {
            return Ok(m.clone());
        }
        if let Some(m) = self.standard(name)? {
            return Ok(m);
        }
        self.knitted()?.get(name).cloned().ok_or_else(|| Error::Semantic(format!("unknown module `{name}`")))
    }

    /// `S<v>`, `P<v>`, `I<v>` for a vertex name `v`.
    fn standard(&self, name: &str) -> Result<Option<RightModule>> {
        let mut chars = name.chars();
        let (Some(kind), v) = (chars.next(), chars.as_str()) else { return Ok(None) };
        let v = v.strip_prefix('(').and_then(|v| v.strip_suffix(')')).unwrap_or(v);
        let build: fn(&Algebra, usize) -> Result<RightModule> = match kind {
            'S' => simple,
            'P' => projective,
            'I' => injective,
            _ => return Ok(None),
        };
        let n = vertex_count(&self.algebra)?;
        for i in 0..n {
            if vertex_name(&self.algebra, i)? == v {
                return build(&self.algebra, i).map(Some);
            }
        }
        Ok(None)
    }

    pub fn universe(&self) -> Result<IndecUniverse> {
        match &self.universe {
            UniverseSpec::Knit(_) => self.knitted().cloned(),
            UniverseSpec::Names(names) => {
                let mods = names.iter().map(|n| self.resolve(n).map(|m| (n.clone(), m))).collect::<Result<_>>()?;
                IndecUniverse::supplied(&self.algebra, mods)
            }
        }
    }

    pub fn subcategory(&self) -> Result<Option<AddSubcategory>> {
        let Some(names) = &self.subcategory else { return Ok(None) };
        let gens = names.iter().map(|n| self.resolve(n).map(|m| (n.clone(), m))).collect::<Result<_>>()?;
        AddSubcategory::new(&self.algebra, gens).map(Some)
    }
}
