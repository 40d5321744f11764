//! Command-line front end. Exit status: 0 when the property holds (map
//! found, graph critical, ...), 1 when it fails, 2 on input or usage errors
//! and on truncated searches.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::census::{run_census, CensusOptions, Prefilter, LONG_RUN_CAP};
use crate::coloring::{four_color_via_c4, x2k_coloring};
use crate::constructions::{
    align_edge_sign, build_critical, gallery, hajos_h, splice_f, t_subdivide, t_subdivide_multi, tilde, GalleryId,
};
use crate::criticality::{is_critical_c4, structural_check, three_two_vertices, CriticalVerdict};
use crate::error::{Error, Result};
use crate::homsolver::{c_minus_4, hom_c4, hom_to_target, sp_hom_c4, HomVerdict, NoHomReason, DEFAULT_BUDGET};
use crate::sgraph::{
    girth_vector, max_average_degree, parse_sg_stream, switching_isomorphic, GirthVector, GraphText, ParityClass,
    Sign, SignedGraph, SignedMultiGraph, Vertex, WalkLength,
};

#[derive(Parser, Debug)]
#[command(name = "sigcrit", version, about = "Signed graphs, homomorphisms to the negative four-cycle and critical graphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// Graph arguments are file paths (`-` for stdin) or built-in names:
/// gallery ids such as `what`, `gamma`, `cminus:6`, or `c-<l>` / `c+<l>`.
#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph maps to a target (default: the negative four-cycle).
    Hom {
        graph: String,
        #[arg(long, default_value = "c-4")]
        target: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Edge-sign preserving map to the negative four-cycle, or a (-,+,-) path.
    SpHom { graph: String },
    /// Shortest closed walk of each sign and length parity.
    Girth { graph: String },
    /// Certify criticality for the negative four-cycle.
    Critical { graph: String },
    /// Build a named graph or apply a construction.
    ///
    /// Forms: <gallery-id>, tl:<l> <graph>, tilde <graph>,
    /// splice <g1> <u> <g2> <v>, hajos <g1> <x1> <y1> <g2> <x2> <y2>, build:<n>.
    Construct {
        spec: String,
        args: Vec<String>,
    },
    /// Four-colour the underlying graph through the negative four-cycle.
    Color4 { graph: String },
    /// X_2k-colouring of a signed (multi)graph.
    X2k {
        #[arg(long)]
        k: usize,
        graph: String,
    },
    /// Exact maximum average degree.
    Mad { graph: String },
    /// Switching isomorphism between two graphs.
    SwitchIso { first: String, second: String },
    /// Exhaustive search for critical classes on n vertices.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<String>,
        /// Allow orders beyond the default cap.
        #[arg(long)]
        long_run: bool,
        /// Examine every candidate, skipping the structural pre-filters.
        #[arg(long)]
        no_prefilter: bool,
    },
}

struct Outcome {
    holds: bool,
    text: String,
    json: Value,
}

fn read_text(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::BadParameter(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| Error::BadParameter(format!("cannot read {arg}: {e}")))
}

fn builtin(arg: &str) -> Option<Result<SignedGraph>> {
    if let Some(l) = arg.strip_prefix("c-") {
        return Some(l.parse().map_err(|_| Error::BadParameter(format!("bad cycle `{arg}`"))).and_then(|l| gallery(GalleryId::CMinus(l))));
    }
    if let Some(l) = arg.strip_prefix("c+") {
        return Some(l.parse().map_err(|_| Error::BadParameter(format!("bad cycle `{arg}`"))).and_then(|l| gallery(GalleryId::CPlus(l))));
    }
    arg.parse::<GalleryId>().ok().map(gallery)
}

fn load_text(arg: &str) -> Result<GraphText> {
    if arg != "-" && !Path::new(arg).exists() {
        if let Some(g) = builtin(arg) {
            return Ok(GraphText::Simple(g?));
        }
    }
    let mut graphs = parse_sg_stream(&read_text(arg)?)?;
    if graphs.len() != 1 {
        return Err(Error::BadParameter(format!("{arg}: expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.remove(0))
}

fn load_graph(arg: &str) -> Result<SignedGraph> {
    load_text(arg)?.into_simple()
}

fn load_multi(arg: &str) -> Result<SignedMultiGraph> {
    Ok(load_text(arg)?.into_multi())
}

fn vertex_arg(s: &str) -> Result<Vertex> {
    s.parse().map_err(|_| Error::BadParameter(format!("`{s}` is not a vertex id")))
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn verdict_text(v: &HomVerdict) -> String {
    match v {
        HomVerdict::Mapped(h) => format!("mapped\nswitch: {}\nmap: {}\n", join(h.switch.members()), join(&h.map)),
        HomVerdict::NoHom(NoHomReason::Witness(w)) => {
            format!("no homomorphism: (-,+,-) path {}\n", join(&w.vertices()))
        }
        HomVerdict::NoHom(NoHomReason::GirthViolation(c)) => {
            format!("no homomorphism: girth condition g{} fails\n", c.label())
        }
        HomVerdict::NoHom(NoHomReason::ExhaustedSearch) => "no homomorphism: exhaustive search\n".into(),
    }
}

fn hom_outcome(v: HomVerdict) -> Outcome {
    Outcome { holds: v.is_mapped(), text: verdict_text(&v), json: serde_json::to_value(&v).unwrap() }
}

fn graph_outcome(text: String, n: usize, m: usize, format: &str) -> Outcome {
    let json = json!({ "format": format, "vertices": n, "edges": m, "text": text });
    Outcome { holds: true, text, json }
}

fn girth_json(g: &GirthVector) -> Value {
    let mut m = serde_json::Map::new();
    for c in ParityClass::ALL {
        let v = match g.get(c) {
            WalkLength::Finite(x) => json!(x),
            WalkLength::Infinite => json!("inf"),
        };
        m.insert(format!("g{}", c.label()), v);
    }
    Value::Object(m)
}

fn construct(spec: &str, args: &[String]) -> Result<Outcome> {
    let need = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::BadParameter(format!("`{spec}` takes {k} arguments, got {}", args.len())))
        }
    };
    let simple = |g: SignedGraph| Ok(graph_outcome(g.to_sg(), g.n(), g.edge_count(), "sg"));
    if let Some(l) = spec.strip_prefix("tl:") {
        need(1)?;
        let l: usize = l.parse().map_err(|_| Error::BadParameter(format!("bad length in `{spec}`")))?;
        return match load_text(&args[0])? {
            GraphText::Simple(g) => simple(t_subdivide(&g, l)?),
            GraphText::Multi(g) => simple(t_subdivide_multi(&g, l)?),
        };
    }
    if let Some(n) = spec.strip_prefix("build:") {
        need(0)?;
        let n: usize = n.parse().map_err(|_| Error::BadParameter(format!("bad order in `{spec}`")))?;
        return simple(build_critical(n)?);
    }
    match spec {
        "tilde" => {
            need(1)?;
            let m = tilde(&load_graph(&args[0])?);
            Ok(graph_outcome(m.to_sgm(), m.n(), m.edge_count(), "sgm"))
        }
        "splice" => {
            need(4)?;
            let g1 = load_graph(&args[0])?;
            let g2 = load_graph(&args[2])?;
            simple(splice_f(&g1, vertex_arg(&args[1])?, &g2, vertex_arg(&args[3])?)?)
        }
        "hajos" => {
            need(6)?;
            let (x1, y1) = (vertex_arg(&args[1])?, vertex_arg(&args[2])?);
            let (x2, y2) = (vertex_arg(&args[4])?, vertex_arg(&args[5])?);
            let g1 = align_edge_sign(&load_graph(&args[0])?, x1, y1, Sign::Plus)?;
            let g2 = align_edge_sign(&load_graph(&args[3])?, x2, y2, Sign::Minus)?;
            simple(hajos_h(&g1, (x1, y1), &g2, (x2, y2))?)
        }
        id => {
            need(0)?;
            simple(gallery(id.parse()?)?)
        }
    }
}

fn critical_outcome(g: &SignedGraph) -> Outcome {
    let v = is_critical_c4(g);
    let violations = structural_check(g);
    let flags = three_two_vertices(g);
    let mut text = match &v {
        CriticalVerdict::Critical => "critical\n".to_string(),
        CriticalVerdict::MapsToC4(h) => format!("not critical: maps\n{}", verdict_text(&HomVerdict::Mapped(h.clone()))),
        CriticalVerdict::FailsGirth(c) => format!("not critical: girth condition g{} fails\n", c.label()),
        CriticalVerdict::NonCriticalEdge { index, edge, .. } => {
            format!("not critical: removing edge {index} ({} {} {}) leaves no map\n", edge.u, edge.v, edge.sign)
        }
    };
    text.push_str(&format!("vertices: {}\nedges: {}\npotential: {}\n", g.n(), g.edge_count(), g.potential()));
    for x in &violations {
        text.push_str(&format!("structure: {}\n", serde_json::to_string(x).unwrap()));
    }
    if !flags.is_empty() {
        text.push_str(&format!("degree-3 vertices with two degree-2 neighbours: {}\n", join(&flags)));
    }
    let mut json = serde_json::to_value(&v).unwrap();
    json["vertices"] = json!(g.n());
    json["edges"] = json!(g.edge_count());
    json["potential"] = json!(g.potential());
    json["structural_violations"] = serde_json::to_value(&violations).unwrap();
    json["three_two_vertices"] = json!(flags);
    Outcome { holds: v.is_critical(), text, json }
}

fn execute(cmd: Command) -> Result<Outcome> {
    Ok(match cmd {
        Command::Hom { graph, target, budget } => {
            let g = load_graph(&graph)?;
            let h = load_graph(&target)?;
            if h == c_minus_4() {
                hom_outcome(hom_c4(&g))
            } else {
                hom_outcome(hom_to_target(&g, &h, budget)?)
            }
        }
        Command::SpHom { graph } => hom_outcome(sp_hom_c4(&load_graph(&graph)?)?),
        Command::Girth { graph } => {
            let gv = girth_vector(&load_graph(&graph)?);
            Outcome { holds: true, text: format!("{gv}\n"), json: girth_json(&gv) }
        }
        Command::Critical { graph } => critical_outcome(&load_graph(&graph)?),
        Command::Construct { spec, args } => construct(&spec, &args)?,
        Command::Color4 { graph } => match four_color_via_c4(&load_graph(&graph)?) {
            Some(c) => Outcome { holds: true, text: format!("{}\n", join(&c)), json: json!({ "colors": c }) },
            None => Outcome { holds: false, text: "not 4-colourable\n".into(), json: json!({ "colors": null }) },
        },
        Command::X2k { k, graph } => match x2k_coloring(&load_multi(&graph)?, k) {
            Some(c) => {
                let text = c.colors.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                Outcome { holds: true, text: format!("{text}\n"), json: json!({ "k": k, "colors": c }) }
            }
            None => Outcome { holds: false, text: format!("no X_{} colouring\n", 2 * k), json: json!({ "k": k, "colors": null }) },
        },
        Command::Mad { graph } => {
            let r = max_average_degree(&load_graph(&graph)?)?;
            let json = json!({ "mad": r.to_string(), "numerator": r.numer(), "denominator": r.denom() });
            Outcome { holds: true, text: format!("{r}\n"), json }
        }
        Command::SwitchIso { first, second } => match switching_isomorphic(&load_graph(&first)?, &load_graph(&second)?) {
            Some(f) => Outcome { holds: true, text: format!("isomorphic: {}\n", join(&f)), json: json!({ "bijection": f }) },
            None => Outcome { holds: false, text: "not switching isomorphic\n".into(), json: json!({ "bijection": null }) },
        },
        Command::Census { n, jobs, out, long_run, no_prefilter } => {
            let mut opts = CensusOptions::new(n);
            opts.jobs = jobs;
            if long_run {
                opts.cap = LONG_RUN_CAP;
            }
            if no_prefilter {
                opts.prefilter = Prefilter::NONE;
            }
            let report = run_census(&opts)?;
            let json = serde_json::to_value(&report).unwrap();
            if let Some(path) = out {
                let body = serde_json::to_string_pretty(&report).unwrap() + "\n";
                std::fs::write(&path, body).map_err(|e| Error::BadParameter(format!("cannot write {path}: {e}")))?;
            }
            let mut text = format!(
                "n={} underlying={} classes={} critical={} exceptions={}\n",
                report.n,
                report.underlying_graphs,
                report.classes_examined,
                report.critical_found.len(),
                report.exceptions.len()
            );
            for c in &report.critical_found {
                let tag = if c.is_w_hat { " (W-hat)" } else { "" };
                text.push_str(&format!("critical: {} edges, potential {}{tag}\n", c.edges, c.potential));
            }
            Outcome { holds: report.exceptions.iter().all(|c| c.is_w_hat), text, json }
        }
    })
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let as_json = cli.json;
    match execute(cli.command) {
        Ok(o) => {
            let written = if as_json {
                writeln!(out, "{}", serde_json::to_string(&o.json).unwrap())
            } else {
                write!(out, "{}", o.text)
            };
            if written.is_err() {
                return 2;
            }
            if o.holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
