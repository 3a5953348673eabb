use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use agraph::cubical::{
    bounded_homotopy_search, check_certificate, check_certificate_structure, f_vector, GridMap, GridMapFile,
    HomotopyCertificate, VertexRef,
};
use agraph::fundamental::{A1Complex, Equivalence, LoopWalk};
use agraph::graph::{cartesian_product, Graph, Vertex};
use agraph::loopspace::{a0, alpha as alpha_map, build_loop_graph, build_path_graph, PathVertex, WalkGraph};
use agraph::simplicial::{GammaMode, SimplicialComplex};
use agraph::Error;
use log::info;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Distinct,
    Unknown,
    Error,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Distinct => 10,
            Status::Unknown => 11,
            Status::Error => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Distinct => "distinct",
            Status::Unknown => "unknown",
            Status::Error => "error",
        }
    }
}

pub struct CommandResult {
    pub status: Status,
    pub text: String,
    pub json: Value,
    /// The output is a file (graph or grid); `text` is its canonical JSON
    /// and is printed as is in both modes.
    pub raw: bool,
}

impl CommandResult {
    fn ok(text: String, json: Value) -> Self {
        CommandResult { status: Status::Ok, text, json, raw: false }
    }

    fn file(text: String, json: Value) -> Self {
        CommandResult { status: Status::Ok, text, json, raw: true }
    }

    pub fn error(e: CliError) -> Self {
        let text = e.to_string();
        CommandResult { status: Status::Error, json: json!({ "message": text }), text, raw: false }
    }

    pub fn json_with_status(&self) -> Value {
        if self.raw {
            return self.json.clone();
        }
        let mut out = json!({ "status": self.status.name() });
        if let (Value::Object(out), Value::Object(fields)) = (&mut out, &self.json) {
            out.extend(fields.iter().map(|(k, v)| (k.clone(), v.clone())));
        }
        out
    }
}

#[derive(Debug)]
pub enum CliError {
    Io(String, std::io::Error),
    Input(String, Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Input(ctx, e) => write!(f, "{ctx}: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

type Outcome = Result<CommandResult, CliError>;

fn ctx<T>(what: impl std::fmt::Display, r: agraph::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Input(what.to_string(), e))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    ctx(path.display(), Graph::from_json(&read(path)?))
}

fn load_grid_file(path: &Path) -> Result<GridMapFile, CliError> {
    ctx(path.display(), GridMapFile::from_json(&read(path)?))
}

fn resolve_base(g: &Graph, base: Option<&str>) -> Result<Vertex, CliError> {
    match base {
        Some(name) => ctx("--base", g.require_vertex(name)),
        None => ctx("graph", g.require_base()),
    }
}

fn graph_value(g: &Graph) -> Value {
    serde_json::to_value(g.to_file()).expect("graph files serialize")
}

pub fn product(left: &Path, right: &Path) -> Outcome {
    let g = load_graph(left)?;
    let h = load_graph(right)?;
    let p = cartesian_product(&g, &h);
    info!("product: {}", p.summary());
    Ok(CommandResult::file(p.to_json(), graph_value(&p)))
}

pub fn a1(path: &Path, base: Option<&str>, presentation: bool, abelianize: bool, loops: &[String], no_search: bool) -> Outcome {
    let g = load_graph(path)?;
    let base = resolve_base(&g, base)?;
    let complex = ctx("a1", A1Complex::new(&g, base))?;
    let walks = loops
        .iter()
        .map(|text| ctx(format!("--loop {text}"), LoopWalk::parse(&g, base, text)))
        .collect::<Result<Vec<_>, _>>()?;
    let names = &complex.presentation().generators;
    let simplified = &complex.simplification().presentation;

    match walks.as_slice() {
        [] => {}
        [l] => {
            let word = ctx("loop", complex.loop_to_word(l))?;
            let reduced = complex.simplification().rewrite(&word);
            let text = format!(
                "word: {}\nsimplified: {}",
                word.display(names),
                reduced.display(&simplified.generators)
            );
            let json = json!({
                "word": word.display(names).to_string(),
                "simplified": reduced.display(&simplified.generators).to_string(),
            });
            return Ok(CommandResult::ok(text, json));
        }
        [l1, l2] => {
            let fallback = if no_search { None } else { Some(Default::default()) };
            let verdict = ctx("comparison", complex.loops_equivalent_with(l1, l2, fallback))?;
            let status = match verdict {
                Equivalence::Equal => Status::Ok,
                Equivalence::Distinct => Status::Distinct,
                Equivalence::Unknown => Status::Unknown,
            };
            let text = verdict.to_string();
            return Ok(CommandResult { status, json: json!({ "verdict": text }), text, raw: false });
        }
        _ => return Err(CliError::Usage("a1 takes at most two --loop arguments".into())),
    }

    let both = !presentation && !abelianize;
    let inv = complex.abelianization();
    let mut text = String::new();
    if presentation || both {
        let _ = writeln!(text, "presentation: {}", complex.presentation());
        let _ = writeln!(text, "simplified: {simplified}");
    }
    if abelianize || both {
        let _ = writeln!(text, "{inv}");
    }
    let words = |p: &agraph::GroupPresentation| -> Vec<String> {
        p.relators.iter().map(|r| r.display(&p.generators).to_string()).collect()
    };
    let json = json!({
        "base": g.name(base),
        "generators": names,
        "relators": words(complex.presentation()),
        "simplified": { "generators": simplified.generators, "relators": words(simplified) },
        "abelianization": { "free_rank": inv.free_rank, "torsion": inv.torsion },
    });
    Ok(CommandResult::ok(text.trim_end().to_string(), json))
}

pub fn gamma_q(path: &Path, q: usize, mode: &str, base: Option<&str>) -> Outcome {
    let complex = ctx(path.display(), SimplicialComplex::parse(&read(path)?))?;
    let mode: GammaMode = ctx("--mode", mode.parse())?;
    let sigma0 = match base {
        None => None,
        Some(tokens) => {
            let tokens: Vec<&str> = tokens.split(',').map(str::trim).collect();
            Some(ctx("--sigma0", complex.simplex(&tokens))?)
        }
    };
    let mut g = ctx("gamma-q", complex.gamma_q(q, mode, sigma0.as_deref()))?;
    if g.base().is_none() && g.vertex_count() > 0 {
        g = g.with_base(0);
    }
    info!("Γ_{q} ({mode}): {}", g.summary());
    Ok(CommandResult::file(g.to_json(), graph_value(&g)))
}

pub fn fvec(path: &Path, max_dim: usize) -> Outcome {
    let g = load_graph(path)?;
    let fv = f_vector(&g, max_dim);
    let shown: Vec<String> = fv.iter().map(usize::to_string).collect();
    Ok(CommandResult::ok(format!("({})", shown.join(", ")), json!({ "max_dim": max_dim, "f_vector": fv })))
}

pub fn loop_graph(path: &Path, base: Option<&str>, max_len: usize, collapse: bool, components: bool, paths: bool) -> Outcome {
    let g = load_graph(path)?;
    let base = resolve_base(&g, base)?;
    let built = if paths { build_path_graph(&g, base, max_len, collapse) } else { build_loop_graph(&g, base, max_len, collapse) };
    let wg = ctx("loop-graph", built)?;
    let kind = if paths { "path graph" } else { "loop graph" };
    let pc = ctx("loop-graph", a0(wg.graph()))?;
    let mut text = format!(
        "{kind} at truncation m_max={max_len} ({})\n{}",
        if collapse { "padding classes collapsed" } else { "every padding kept" },
        wg.graph().summary()
    );
    let names = |c: &[Vertex]| -> Vec<String> { c.iter().map(|&v| wg.graph().name(v).to_string()).collect() };
    if components {
        let _ = write!(text, "\n{} components", pc.len());
        for (i, c) in pc.components.iter().enumerate() {
            let mark = if i == pc.base_component { "*" } else { " " };
            let _ = write!(text, "\n{mark} [{}] {}", c.len(), names(c).join(" | "));
        }
    }
    let json = json!({
        "kind": if paths { "path" } else { "loop" },
        "m_max": max_len,
        "collapse": collapse,
        "graph": graph_value(wg.graph()),
        "components": pc.components.iter().map(|c| names(c)).collect::<Vec<_>>(),
        "base_component": pc.base_component,
    });
    Ok(CommandResult::ok(text, json))
}

/// `W` or `WxH`; H bounds the layer count by `H - 1`.
fn parse_box(text: &str) -> Result<(usize, Option<usize>), CliError> {
    let bad = || CliError::Usage(format!("--box expects W or WxH, got `{text}`"));
    let mut parts = text.split(['x', 'X']);
    let w = parts.next().and_then(|t| t.trim().parse().ok()).ok_or_else(bad)?;
    let h = match parts.next() {
        None => None,
        Some(t) => Some(t.trim().parse::<usize>().map_err(|_| bad())?),
    };
    if parts.next().is_some() || h == Some(0) {
        return Err(bad());
    }
    Ok((w, h))
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, format!("{contents}\n")).map_err(|e| CliError::Io(path.display().to_string(), e))
}

pub fn homotopy(path: &Path, base: Option<&str>, loops: &[String], box_spec: &str, max_layers: usize, out_dir: Option<&Path>) -> Outcome {
    let g = load_graph(path)?;
    let base = resolve_base(&g, base)?;
    let [a, b] = loops else {
        return Err(CliError::Usage("homotopy needs exactly two --loop arguments".into()));
    };
    let (width, height) = parse_box(box_spec)?;
    let layers = height.map_or(max_layers, |h| max_layers.min(h - 1));
    let f = ctx(format!("--loop {a}"), LoopWalk::parse(&g, base, a))?.to_grid(base);
    let h = ctx(format!("--loop {b}"), LoopWalk::parse(&g, base, b))?.to_grid(base);
    let found = ctx("homotopy", bounded_homotopy_search(&g, &f, &h, &[width], layers))?;
    let Some(cert) = found else {
        let text = format!("no homotopy within box {width} and {layers} layers (not a proof of inequivalence)");
        let json = json!({ "found": false, "box": width, "max_layers": layers });
        return Ok(CommandResult { status: Status::Unknown, text, json, raw: false });
    };
    let slices = ctx("certificate", cert.h.layers())?;
    let count = slices.len() - 1;
    let mut text = format!("homotopic within box {width}: {count} layers");
    for s in &slices {
        let walk = s.to_walk().expect("search layers are finite 1-dimensional maps");
        let names: Vec<&str> = walk.iter().map(|&v| g.name(v)).collect();
        let _ = write!(text, "\n  {}", names.join(","));
    }
    let h_file = ctx("certificate", GridMapFile::from_homotopy(&cert.h, Some(&g)))?;
    let f_file = GridMapFile::from_grid(&cert.f, Some(&g));
    let g_file = GridMapFile::from_grid(&cert.g, Some(&g));
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
        write_file(dir, "f.json", &f_file.to_json())?;
        write_file(dir, "g.json", &g_file.to_json())?;
        write_file(dir, "h.json", &h_file.to_json())?;
    }
    let json = json!({
        "found": true,
        "box": width,
        "layers": count,
        "certificate": { "f": f_file, "g": g_file, "h": h_file },
    });
    Ok(CommandResult::ok(text, json))
}

pub fn verify_cert(f: &Path, g: &Path, h: &Path, graph: Option<&Path>) -> Outcome {
    let target = graph.map(load_graph).transpose()?;
    let tg = target.as_ref();
    let fm = ctx(f.display(), load_grid_file(f)?.to_grid(tg))?;
    let gm = ctx(g.display(), load_grid_file(g)?.to_grid(tg))?;
    let hm = ctx(h.display(), load_grid_file(h)?.to_homotopy(tg, Some((&fm, &gm))))?;
    let cert = HomotopyCertificate { f: fm, g: gm, h: hm };
    let ok = match tg {
        Some(t) => ctx("verify-cert", check_certificate(t, &cert))?,
        None => ctx("verify-cert", check_certificate_structure(&cert))?,
    };
    let scope = if tg.is_some() { "faces, end slices and adjacency" } else { "faces and end slices only" };
    let (status, verdict) = if ok { (Status::Ok, "verified") } else { (Status::Unknown, "rejected") };
    let text = format!("certificate {verdict} ({scope})");
    Ok(CommandResult { status, json: json!({ "verified": ok, "checked": scope }), text, raw: false })
}

fn walk_of(g: &Graph, base: Vertex, r: &VertexRef) -> Result<PathVertex, CliError> {
    let text = match r {
        VertexRef::Index(i) => i.to_string(),
        VertexRef::Name(s) => s.clone(),
    };
    ctx(format!("loop `{text}`"), PathVertex::parse(g, base, &text))
}

pub fn alpha(grid: &Path, graph: &Path, base: Option<&str>) -> Outcome {
    let g = load_graph(graph)?;
    let base = resolve_base(&g, base)?;
    let file = load_grid_file(grid)?;
    if !file.cylinder.is_empty() {
        return Err(CliError::Input(grid.display().to_string(), Error::Undefined("alpha of a degenerate map")));
    }
    let star = PathVertex::constant(base);
    if walk_of(&g, base, &file.base)?.normalized() != star {
        return Err(CliError::Input(grid.display().to_string(), Error::NotBased));
    }
    let mut walks = vec![star];
    let mut support = Vec::new();
    for (key, r) in &file.support {
        let phi = walk_of(&g, base, r)?.normalized();
        if !walks.contains(&phi) {
            walks.push(phi.clone());
        }
        support.push((key.clone(), phi));
    }
    walks[1..].sort();
    let omega = ctx("alpha", WalkGraph::from_walks(&g, walks, true))?;
    let indexed = GridMapFile {
        dim: file.dim,
        base: VertexRef::Index(0),
        support: support.into_iter().map(|(k, phi)| (k, VertexRef::Index(omega.lookup(&phi).expect("interned")))).collect(),
        cylinder: Vec::new(),
        window: None,
    };
    let f: GridMap = ctx(grid.display(), indexed.to_grid(Some(omega.graph())))?;
    let out = ctx("alpha", alpha_map(&f, &omega, &g))?;
    let out_file = GridMapFile::from_grid(&out, Some(&g));
    Ok(CommandResult::file(out_file.to_json(), serde_json::to_value(&out_file).expect("grid files serialize")))
}
