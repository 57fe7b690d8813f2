//! Batch front end: read a quiver, run one analysis, emit a report.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qim_core::bimodule::{PathAlgebra, PathPair, Subbimodule};
use qim_core::monoid::{
    b_omega_product, census_maximum, ideal_monoid, indecomposable_monoid, FiniteMonoid,
    DEFAULT_CLOSURE_BUDGET,
};
use qim_core::presentation::{
    check_isomorphism, decategorify, enumerate_presented, hk_matrix_monoid, hk_presentation,
    ind_presentation, quotient_fibers, DEFAULT_MAX_ELEMENTS, DEFAULT_MAX_STEPS,
};
use qim_core::quiver::{parse_raw, validate_raw};
use qim_core::relations::{check_relations, hk_generators, ind_generators, RelationMode, ZERO};
use qim_core::specialfunc::{
    bimodule_of_function, count_type_a, enumerate_with_support, function_of_bimodule,
    group_by_support, type_a_boundary,
};
use qim_core::{par, trees, Error, Quiver};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qim", version, about = "Ideals of path algebras of tree quivers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Quiver file: JSON `{"vertices": n, "arrows": [[s, t], ...]}` or one
    /// arrow `s t` per line after a first line holding `n`.
    #[arg(long, global = true)]
    pub quiver: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Which monoid the `monoid` command builds.
    #[arg(long, global = true, value_enum, default_value_t = Which::I)]
    pub which: Which,

    /// Element budget for closures and presented monoids.
    #[arg(long, global = true, env = "QIM_BUDGET_ELEMENTS")]
    pub max_elements: Option<usize>,

    /// Deduction-step budget for presented monoids.
    #[arg(long, global = true)]
    pub max_steps: Option<usize>,

    /// Run over every admissible oriented tree on at most this many vertices
    /// instead of a single quiver file.
    #[arg(long, global = true)]
    pub all_orientations: Option<usize>,

    /// Seed for sampled associativity checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Connectivity, tree and admissibility report.
    Validate,
    /// The path basis.
    Basis,
    /// Every ideal.
    Ideals,
    /// Indecomposable ideals with their special functions.
    Indecomposables,
    /// Special functions grouped by support.
    SpecialFunctions,
    /// Closed-form type A counts against the census.
    CatalanCheck,
    /// Multiplication table of the ideal monoid or its indecomposable part.
    Monoid,
    /// Both relation systems as ideal equalities.
    Relations,
    /// Minimality of the generating sets.
    Generators,
    /// Presented monoids against the ideal and matrix monoids.
    PresentationCheck,
    /// Matrices of all generators.
    Decategorify,
    /// Product formula against the census maximum for every special subtree.
    BOmega,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    #[value(name = "I")]
    I,
    #[value(name = "Iind")]
    Iind,
}

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub quiver_path: Option<PathBuf>,
    pub format: Format,
    pub out_path: Option<PathBuf>,
    pub which: Which,
    pub max_elements: Option<usize>,
    pub max_steps: usize,
    pub all_orientations: Option<usize>,
    pub seed: u64,
}

impl From<Cli> for RunConfig {
    fn from(c: Cli) -> Self {
        RunConfig {
            command: c.command,
            quiver_path: c.quiver,
            format: c.format,
            out_path: c.out,
            which: c.which,
            max_elements: c.max_elements,
            max_steps: c.max_steps.unwrap_or(DEFAULT_MAX_STEPS),
            all_orientations: c.all_orientations,
            seed: c.seed,
        }
    }
}

impl RunConfig {
    fn closure_budget(&self) -> usize {
        self.max_elements.unwrap_or(DEFAULT_CLOSURE_BUDGET)
    }

    fn presented_budget(&self) -> usize {
        self.max_elements.unwrap_or(DEFAULT_MAX_ELEMENTS)
    }
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Report {
    pub value: Value,
    pub text: String,
    pub rows: Vec<Vec<String>>,
    pub failures: Vec<Value>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut v = self.value.clone();
                if let Value::Object(m) = &mut v {
                    m.insert("failures".into(), Value::Array(self.failures.clone()));
                }
                let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for r in &self.rows {
                    w.write_record(r).expect("writing to memory");
                }
                String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 csv")
            }
            Format::Text => {
                let mut s = self.text.clone();
                for f in &self.failures {
                    let _ = writeln!(s, "FAIL {f}");
                }
                s
            }
        }
    }
}

/// Outcome of [`run`]: the exit status and the rendered output, or an error
/// message for standard error.
pub struct Outcome {
    pub status: i32,
    pub output: String,
    pub error: Option<String>,
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let report = match cfg.all_orientations {
        Some(n) => suite(cfg, n),
        None => single(cfg),
    };
    match report {
        Ok(r) => Outcome {
            status: if r.failures.is_empty() { EXIT_OK } else { EXIT_FAILED },
            output: r.render(cfg.format),
            error: None,
        },
        Err(e) => Outcome {
            status: EXIT_USAGE,
            output: String::new(),
            error: Some(e.to_string()),
        },
    }
}

fn read_quiver_text(cfg: &RunConfig) -> Result<String, Error> {
    let path = cfg
        .quiver_path
        .as_ref()
        .ok_or_else(|| Error::Syntax("--quiver or --all-orientations is required".into()))?;
    std::fs::read_to_string(path).map_err(|e| Error::Syntax(format!("{}: {e}", path.display())))
}

fn single(cfg: &RunConfig) -> Result<Report, Error> {
    let text = read_quiver_text(cfg)?;
    if cfg.command == Command::Validate {
        let (n, arrows) = parse_raw(&text)?;
        return validate(n, &arrows);
    }
    let q = Quiver::parse(&text)?;
    execute(cfg, &q)
}

fn suite(cfg: &RunConfig, n: usize) -> Result<Report, Error> {
    if n < 2 {
        return Err(Error::Domain("--all-orientations needs at least 2".into()));
    }
    let family = trees::admissible_trees(n);
    let results = par::map(&family, |q| {
        if cfg.command == Command::Validate {
            let arrows = q.arrows().to_vec();
            validate(q.n(), &arrows)
        } else {
            execute(cfg, q)
        }
    });
    let mut report = Report::default();
    let mut entries = Vec::new();
    let _ = writeln!(report.text, "{} quivers", family.len());
    report.rows.push(vec!["arrows".into(), "failures".into()]);
    for (q, r) in family.iter().zip(results) {
        let r = r?;
        let arrows = json!(q.arrows());
        for f in &r.failures {
            report.failures.push(json!({ "arrows": arrows, "failure": f }));
        }
        let _ = writeln!(report.text, "{:?}: {} failures", q.arrows(), r.failures.len());
        report.rows.push(vec![format!("{:?}", q.arrows()), r.failures.len().to_string()]);
        entries.push(json!({ "arrows": arrows, "result": r.value, "failures": r.failures }));
    }
    report.value = json!({ "command": format!("{:?}", cfg.command), "max_vertices": n, "quivers": entries });
    Ok(report)
}

fn execute(cfg: &RunConfig, q: &Quiver) -> Result<Report, Error> {
    match cfg.command {
        Command::Validate => validate(q.n(), q.arrows()),
        Command::Basis => basis(q),
        Command::Ideals => ideals(q),
        Command::Indecomposables => indecomposables(q),
        Command::SpecialFunctions => special_functions(q),
        Command::CatalanCheck => catalan_check(q),
        Command::Monoid => monoid(cfg, q),
        Command::Relations => relations(q),
        Command::Generators => generators(cfg, q),
        Command::PresentationCheck => presentation_check(cfg, q),
        Command::Decategorify => decategorify_generators(q),
        Command::BOmega => b_omega(q),
    }
}

fn pairs_str(pairs: &[PathPair]) -> String {
    let items: Vec<String> = pairs.iter().map(|p| format!("({},{})", p.target, p.source)).collect();
    format!("{{{}}}", items.join(" "))
}

fn validate(n: usize, arrows: &[(usize, usize)]) -> Result<Report, Error> {
    let r = validate_raw(n, arrows)?;
    let mut report = Report {
        value: json!({ "vertices": n, "arrows": arrows, "report": r }),
        ..Report::default()
    };
    let _ = writeln!(
        report.text,
        "connected: {}\ntree: {}\nadmissible: {}",
        r.connected, r.tree, r.admissible
    );
    if !r.offending_vertices.is_empty() {
        let _ = writeln!(report.text, "offending vertices: {:?}", r.offending_vertices);
    }
    report.rows = vec![
        vec!["connected".into(), "tree".into(), "admissible".into(), "offending_vertices".into()],
        vec![
            r.connected.to_string(),
            r.tree.to_string(),
            r.admissible.to_string(),
            format!("{:?}", r.offending_vertices),
        ],
    ];
    if !(r.connected && r.tree && r.admissible) {
        report.failures.push(json!({ "check": "admissible tree", "report": r }));
    }
    Ok(report)
}

fn basis(q: &Quiver) -> Result<Report, Error> {
    let alg = PathAlgebra::new(q.clone());
    let basis = alg.path_basis();
    let mut report = Report {
        value: json!({ "dimension": basis.len(), "basis": basis }),
        ..Report::default()
    };
    let _ = writeln!(report.text, "dimension {}", basis.len());
    report.rows.push(vec!["target".into(), "source".into()]);
    for p in basis {
        let _ = writeln!(report.text, "a_{}{}", p.target, p.source);
        report.rows.push(vec![p.target.to_string(), p.source.to_string()]);
    }
    Ok(report)
}

fn ideals(q: &Quiver) -> Result<Report, Error> {
    let alg = PathAlgebra::new(q.clone());
    let all = alg.enumerate_subbimodules(DEFAULT_CLOSURE_BUDGET)?;
    let mut report = Report {
        value: json!({ "count": all.len(), "ideals": all }),
        ..Report::default()
    };
    let _ = writeln!(report.text, "{} subbimodules", all.len());
    report.rows.push(vec!["index".into(), "dimension".into(), "pairs".into()]);
    for (i, b) in all.iter().enumerate() {
        let _ = writeln!(report.text, "{i}: {}", pairs_str(&b.pairs()));
        report.rows.push(vec![i.to_string(), b.len().to_string(), pairs_str(&b.pairs())]);
    }
    Ok(report)
}

fn indecomposables(q: &Quiver) -> Result<Report, Error> {
    let alg = PathAlgebra::new(q.clone());
    let census = enumerate_with_support(q)?;
    let mut report = Report::default();
    let mut entries = Vec::new();
    report.rows.push(vec!["function".into(), "support".into(), "pairs".into()]);
    for (support, f) in &census {
        let b = bimodule_of_function(&alg, f)?;
        if !b.is_zero() {
            match function_of_bimodule(&b) {
                Ok(g) if g == *f => {}
                other => report.failures.push(json!({
                    "check": "round trip",
                    "function": f,
                    "got": format!("{other:?}"),
                })),
            }
        }
        let _ = writeln!(report.text, "{:?} on {:?}: {}", f.values(), support.vertices, pairs_str(&b.pairs()));
        report.rows.push(vec![
            format!("{:?}", f.values()),
            format!("{:?}", support.vertices),
            pairs_str(&b.pairs()),
        ]);
        entries.push(json!({ "function": f, "support": support, "bimodule": b }));
    }
    let nonzero = census.len().saturating_sub(1);
    report.text.insert_str(0, &format!("{} elements ({nonzero} indecomposables + zero)\n", census.len()));
    report.value = json!({ "count": census.len(), "indecomposable": nonzero, "elements": entries });
    Ok(report)
}

fn special_functions(q: &Quiver) -> Result<Report, Error> {
    let census = enumerate_with_support(q)?;
    let total = census.len();
    let groups = group_by_support(census);
    let mut report = Report::default();
    let _ = writeln!(report.text, "{total} special functions");
    report.rows.push(vec!["support".into(), "function".into()]);
    let mut flat = Vec::new();
    let mut grouped = Vec::new();
    for (support, fs) in &groups {
        let _ = writeln!(report.text, "support {:?}: {} functions", support.vertices, fs.len());
        for f in fs {
            let _ = writeln!(report.text, "  {:?}", f.values());
            report.rows.push(vec![format!("{:?}", support.vertices), format!("{:?}", f.values())]);
            flat.push(json!({ "support": support.vertices, "function": f }));
        }
        grouped.push(json!({ "support": support, "functions": fs }));
    }
    report.value = json!({ "count": total, "functions": flat, "groups": grouped });
    Ok(report)
}

fn catalan_check(q: &Quiver) -> Result<Report, Error> {
    let l = type_a_boundary(q)?;
    let k = l.len();
    let mut by_support = std::collections::BTreeMap::<Vec<usize>, usize>::new();
    for (s, _) in enumerate_with_support(q)? {
        *by_support.entry(s.vertices.into_iter().collect()).or_default() += 1;
    }
    let mut report = Report::default();
    let mut entries = Vec::new();
    report.rows.push(vec!["i".into(), "j".into(), "formula".into(), "census".into()]);
    for i in 1..=k {
        for j in i + 1..=k {
            let support: Vec<usize> = (l[i - 1]..=l[j - 1]).collect();
            let brute = by_support.get(&support).copied().unwrap_or(0);
            let formula = count_type_a(q, i, j)?;
            let ok = formula == brute.into();
            if !ok {
                report.failures.push(json!({ "i": i, "j": j, "formula": formula.to_string(), "census": brute }));
            }
            let _ = writeln!(report.text, "C({i},{j}) on {support:?}: formula {formula}, census {brute}");
            report.rows.push(vec![i.to_string(), j.to_string(), formula.to_string(), brute.to_string()]);
            entries.push(json!({ "i": i, "j": j, "support": support, "formula": formula.to_string(), "census": brute }));
        }
    }
    report.value = json!({ "boundary": l, "counts": entries });
    Ok(report)
}

fn monoid_summary<K>(m: &FiniteMonoid<K>, seed: u64, report: &mut Report) {
    if let Some((a, b, c)) = m.associativity_violation(seed) {
        report.failures.push(json!({ "check": "associativity", "triple": [a, b, c] }));
    }
    report.rows = m.table_rows();
}

fn monoid(cfg: &RunConfig, q: &Quiver) -> Result<Report, Error> {
    let m = match cfg.which {
        Which::I => ideal_monoid(q, cfg.closure_budget())?,
        Which::Iind => indecomposable_monoid(q, cfg.closure_budget())?,
    };
    let mut report = Report::default();
    monoid_summary(&m, cfg.seed, &mut report);
    let _ = writeln!(report.text, "{} elements", m.len());
    for x in 0..m.len() {
        let w = m.word(x);
        let label = if w.is_empty() { "1".to_string() } else { w.join(" ") };
        let _ = writeln!(report.text, "{x}: {label} = {}", pairs_str(&m.elements[x].pairs()));
    }
    let words: Vec<Vec<String>> = (0..m.len()).map(|x| m.word(x)).collect();
    report.value = json!({ "size": m.len(), "monoid": m, "words": words });
    Ok(report)
}

fn relations(q: &Quiver) -> Result<Report, Error> {
    let alg = PathAlgebra::new(q.clone());
    let mut reports = vec![check_relations(&alg, RelationMode::Hk)?];
    if q.is_admissible() {
        reports.push(check_relations(&alg, RelationMode::Split)?);
    }
    let mut report = Report::default();
    report.rows.push(vec!["mode".into(), "checked".into(), "failed".into()]);
    for r in &reports {
        let _ = writeln!(report.text, "{:?}: {} relations, {} failed", r.mode, r.checked, r.failures.len());
        report.rows.push(vec![format!("{:?}", r.mode), r.checked.to_string(), r.failures.len().to_string()]);
        for f in &r.failures {
            report.failures.push(serde_json::to_value(f).expect("serializable"));
        }
    }
    report.value = json!({ "reports": reports });
    Ok(report)
}

fn minimality<K>(label: &str, m: &FiniteMonoid<K>, names: &[String], report: &mut Report) -> Value {
    let checks = m.minimal_generating_check(names);
    for (g, essential) in &checks {
        let _ = writeln!(report.text, "{label} {g}: {}", if *essential { "essential" } else { "redundant" });
        report.rows.push(vec![label.to_string(), g.clone(), essential.to_string()]);
        if !essential {
            report.failures.push(json!({ "monoid": label, "redundant": g }));
        }
    }
    json!({ "size": m.len(), "generators": checks })
}

fn generators(cfg: &RunConfig, q: &Quiver) -> Result<Report, Error> {
    let alg = PathAlgebra::new(q.clone());
    let mut report = Report::default();
    report.rows.push(vec!["monoid".into(), "generator".into(), "essential".into()]);
    let i = ideal_monoid(q, cfg.closure_budget())?;
    let all = alg.enumerate_subbimodules(DEFAULT_CLOSURE_BUDGET)?;
    if i.len() != all.len() {
        report.failures.push(json!({ "check": "J_s generate all ideals", "generated": i.len(), "ideals": all.len() }));
    }
    let names: Vec<String> = hk_generators(&alg).into_iter().map(|g| g.0).collect();
    let mut value = json!({ "I": minimality("I", &i, &names, &mut report) });
    if q.is_admissible() {
        let ind = indecomposable_monoid(q, cfg.closure_budget())?;
        let names: Vec<String> = ind_generators(&alg)?.into_iter().map(|g| g.0).collect();
        value["Iind"] = minimality("Iind", &ind, &names, &mut report);
    }
    report.value = value;
    Ok(report)
}

fn presentation_check(cfg: &RunConfig, q: &Quiver) -> Result<Report, Error> {
    let mut report = Report::default();
    let budget = cfg.presented_budget();
    let s = enumerate_presented(&hk_presentation(q), budget, cfg.max_steps)?;
    let i = ideal_monoid(q, cfg.closure_budget())?;
    let t = hk_matrix_monoid(q, cfg.closure_budget())?;
    let si = check_isomorphism(&s, &i, &[])?;
    let it = check_isomorphism(&i, &t, &[])?;
    let _ = writeln!(
        report.text,
        "presented {}, ideals {}, matrices {}: {}",
        s.len(),
        i.len(),
        t.len(),
        if si.isomorphic && it.isomorphic { "isomorphic" } else { "NOT isomorphic" }
    );
    report.rows.push(vec!["chain".into(), "presented".into(), "monoid".into(), "isomorphic".into()]);
    report.rows.push(vec!["I".into(), s.len().to_string(), i.len().to_string(), si.isomorphic.to_string()]);
    report.rows.push(vec!["T".into(), i.len().to_string(), t.len().to_string(), it.isomorphic.to_string()]);
    for (name, r) in [("presented vs I", &si), ("I vs matrices", &it)] {
        if !r.isomorphic {
            report.failures.push(json!({ "check": name, "witness": r.witness }));
        }
    }
    let mut value = json!({
        "hk": { "presented": s.len(), "ideals": i.len(), "matrices": t.len(),
                "presented_vs_ideals": si.isomorphic, "ideals_vs_matrices": it.isomorphic },
    });
    if q.is_admissible() {
        let sp = enumerate_presented(&ind_presentation(q)?, budget, cfg.max_steps)?;
        let ind = indecomposable_monoid(q, cfg.closure_budget())?;
        let r = check_isomorphism(&sp, &ind, &[])?;
        let _ = writeln!(
            report.text,
            "split presented {}, indecomposables {}: {}",
            sp.len(),
            ind.len(),
            if r.isomorphic { "isomorphic" } else { "NOT isomorphic" }
        );
        report.rows.push(vec!["Iind".into(), sp.len().to_string(), ind.len().to_string(), r.isomorphic.to_string()]);
        let mut split = json!({ "presented": sp.len(), "indecomposables": ind.len(), "isomorphic": r.isomorphic });
        if !r.isomorphic {
            let fibers = quotient_fibers(&sp, &ind, &[])?;
            let zero_only = fibers.collapses_only_onto(ind.zero);
            let _ = writeln!(
                report.text,
                "  onto homomorphism: {}, merges only into {ZERO}: {zero_only}",
                fibers.homomorphism && fibers.surjective
            );
            report.failures.push(json!({ "check": "split presented vs Iind", "witness": r.witness, "fibers": fibers }));
            split["fibers"] = serde_json::to_value(&fibers).expect("serializable");
        }
        value["split"] = split;
    }
    report.value = value;
    Ok(report)
}

fn decategorify_generators(q: &Quiver) -> Result<Report, Error> {
    let alg = PathAlgebra::new(q.clone());
    let mut gens: Vec<(String, Subbimodule)> = hk_generators(&alg);
    if q.is_admissible() {
        for g in ind_generators(&alg)? {
            if !gens.iter().any(|(n, _)| *n == g.0) {
                gens.push(g);
            }
        }
    }
    let mut report = Report::default();
    let mut out = serde_json::Map::new();
    report.rows.push(vec!["generator".into(), "row".into(), "entries".into()]);
    for (name, b) in &gens {
        let m = decategorify(b);
        let _ = writeln!(report.text, "{name}:");
        for (r, row) in m.rows().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(report.text, "  {}", cells.join(" "));
            let mut rec = vec![name.clone(), (r + 1).to_string()];
            rec.extend(cells);
            report.rows.push(rec);
        }
        out.insert(name.clone(), serde_json::to_value(&m).expect("serializable"));
    }
    report.value = json!({ "matrices": out });
    Ok(report)
}

fn b_omega(q: &Quiver) -> Result<Report, Error> {
    q.require_admissible()?;
    let alg = PathAlgebra::new(q.clone());
    let omegas: std::collections::BTreeSet<_> =
        enumerate_with_support(q)?.into_iter().map(|(s, _)| s).collect();
    let mut report = Report::default();
    let mut entries = Vec::new();
    report.rows.push(vec!["support".into(), "product".into(), "matches".into()]);
    for omega in &omegas {
        let product = b_omega_product(&alg, omega)?;
        let expected = if omega.is_empty() { Some(alg.zero()) } else { census_maximum(&alg, omega)? };
        let ok = expected.as_ref() == Some(&product);
        if !ok {
            report.failures.push(json!({ "support": omega, "product": product, "census_maximum": expected }));
        }
        let _ = writeln!(report.text, "{:?}: {} {}", omega.vertices, pairs_str(&product.pairs()), if ok { "ok" } else { "MISMATCH" });
        report.rows.push(vec![format!("{:?}", omega.vertices), pairs_str(&product.pairs()), ok.to_string()]);
        entries.push(json!({ "support": omega, "product": product, "matches": ok }));
    }
    report.value = json!({ "subtrees": entries });
    Ok(report)
}
