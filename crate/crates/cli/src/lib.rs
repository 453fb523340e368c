//! The `subexc` command-line tool. [`run`] takes an argument vector and
//! returns the exit code with the rendered output, so tests can drive it
//! without spawning a process.

pub mod config;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use subexc_core::bott::{bott_chase, bott_trace, Parabolic};
use subexc_core::charseries::{expand_box, hilbert, BoxSpec, DEFAULT_CELL_CAP};
use subexc_core::geometry::{ih_orbit, local_cohomology_table, lyubeznik, poincare_report, Shape};
use subexc_core::liealg::{DynkinDiagram, Weight};
use subexc_core::quiver::build_quiver;
use subexc_core::quiver::fourier_permutation;
use subexc_core::rational::Rational;
use subexc_core::subexc::{
    case_data, greta_summands, regularity, regularity_from, semiinvariant_degree_check, simple_character,
    sym_cotangent_decomp, sym_cotangent_rank, trivial_scan_with, verify_identities, ModuleName,
};

pub use config::{Format, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "subexc", version, about = "Exact computations for the subexceptional series")]
struct Cli {
    /// key = value file with defaults (case, dmin, dmax, bound, stability, format, seed)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Default)]
struct CaseArg {
    /// m ∈ {1, 2, 4, 8}
    #[arg(long = "case")]
    m: Option<u32>,
}

#[derive(Args, Debug, Default)]
struct WindowArgs {
    #[arg(long, allow_hyphen_values = true)]
    dmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    dmax: Option<i64>,
    /// largest letter exponent enumerated
    #[arg(long)]
    bound: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Borel–Weil–Bott cohomology of a weight
    Bott {
        #[arg(long)]
        diagram: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// distinguished node of a maximal parabolic
        #[arg(long)]
        node: Option<usize>,
        #[arg(long)]
        trace: bool,
    },
    /// Truncated character of a catalogued module
    Char {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        module: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Dimension of one graded piece
    Hilbert {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long, default_value = "S")]
        module: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Poincaré polynomial of G/P
    Poincare {
        #[command(flatten)]
        case: CaseArg,
    },
    /// Intersection cohomology of an orbit closure
    Ih {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        orbit: u32,
    },
    /// Lyubeznik numbers of an orbit closure
    Lyubeznik {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        orbit: u32,
    },
    /// Local cohomology with support in an orbit closure
    Loccoh {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        orbit: u32,
    },
    /// Bundle decompositions and the trivial-isotypic scan
    Decomp {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        scan_trivial: bool,
        /// comma-separated C*-degrees for the scan
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        targets: Option<Vec<i64>>,
    },
    /// Character identities on a box
    Verify {
        #[command(flatten)]
        case: CaseArg,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Castelnuovo–Mumford regularity of an orbit closure ideal
    Reg {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        orbit: Option<u32>,
        /// b-function root, e.g. -5/2
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
        #[arg(long)]
        deg_f: Option<i64>,
        #[arg(long)]
        codim: Option<i64>,
    },
    /// b-function roots and the holonomy chain
    Bfunction {
        #[command(flatten)]
        case: CaseArg,
    },
    /// The quiver of equivariant D-modules
    Quiver {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        dot: bool,
    },
    /// Every suite for one case as a JSON document
    Report {
        #[command(flatten)]
        case: CaseArg,
    },
}

/// Output of one invocation.
struct Rendered {
    json: Value,
    text: String,
    ok: bool,
}

impl Rendered {
    fn new(json: Value, text: String) -> Self {
        Rendered { json, text, ok: true }
    }
}

fn usage(msg: impl ToString) -> (i32, String) {
    (2, format!("error: {}\n", msg.to_string()))
}

/// Parses `argv` (program name first), dispatches, and renders.
/// Exit codes: 0 success, 1 failed hard check, 2 usage or input error.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        if let Err(e) = cfg.apply_file(path) {
            return usage(e);
        }
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    let is_report = matches!(cli.cmd, Cmd::Report { .. });
    match dispatch(cli.cmd, &mut cfg) {
        Ok(r) => {
            let body = if is_report || cfg.format == Format::Json {
                serde_json::to_string_pretty(&r.json).expect("values serialize") + "\n"
            } else {
                r.text
            };
            (if r.ok { 0 } else { 1 }, body)
        }
        Err(e) => usage(e),
    }
}

fn case_of(arg: &CaseArg, cfg: &RunConfig) -> Result<u32, String> {
    arg.m.or(cfg.case).ok_or_else(|| "missing --case".to_string())
}

fn window(w: &WindowArgs, cfg: &mut RunConfig, m: u32) -> Result<BoxSpec, String> {
    if w.dmin.is_some() {
        cfg.dmin = w.dmin;
    }
    if w.dmax.is_some() {
        cfg.dmax = w.dmax;
    }
    if let Some(b) = w.bound {
        cfg.bound = b;
    }
    cfg.validate()?;
    let d = BoxSpec::default_for(m);
    Ok(BoxSpec::new(cfg.dmin.unwrap_or(d.dmin), cfg.dmax.unwrap_or(d.dmax), cfg.bound))
}

fn err(e: subexc_core::Error) -> String {
    e.to_string()
}

fn dispatch(cmd: Cmd, cfg: &mut RunConfig) -> Result<Rendered, String> {
    cfg.validate()?;
    match cmd {
        Cmd::Bott { diagram, weight, node, trace } => {
            let d = DynkinDiagram::named(&diagram).map_err(err)?;
            let lambda: Weight = weight.parse().map_err(err)?;
            let result = match node {
                Some(n) => Parabolic::new(d.clone(), n).and_then(|p| p.bundle_cohomology(&lambda)),
                None => bott_chase(&d, &lambda),
            }
            .map_err(err)?;
            let mut text = match &result {
                subexc_core::bott::BottResult::Singular => format!("{} {}: singular, all cohomology vanishes\n", d.name(), lambda),
                subexc_core::bott::BottResult::Cohomology { length, weight } => {
                    format!("{} {}: H^{length} = V{weight}\n", d.name(), lambda)
                }
            };
            let mut json = json!({"diagram": d.name(), "weight": lambda, "node": node, "result": result});
            if trace {
                let t = bott_trace(&d, &lambda).map_err(err)?;
                let _ = writeln!(text, "  start {}", t.start);
                for s in &t.steps {
                    let _ = writeln!(text, "  s{} -> {}", s.node, s.shifted);
                }
                json["trace"] = json!(t);
            }
            Ok(Rendered::new(json, text))
        }
        Cmd::Char { case, module, window: w } => {
            let m = case_of(&case, cfg)?;
            let c = case_data(m).map_err(err)?;
            let name: ModuleName = module.parse().map_err(err)?;
            let bx = window(&w, cfg, m)?;
            let ch = simple_character(&c, name).map_err(err)?;
            let series = expand_box(&ch, bx, DEFAULT_CELL_CAP).map_err(err)?;
            let rows = series.rows();
            let mut text = format!("[{name}] for m = {m}, degrees {}..{}, letters <= {}\n", bx.dmin, bx.dmax, bx.letter_bound);
            let _ = writeln!(text, "{:>7}  {:>6}  weight", "degree", "mult");
            for r in &rows {
                let _ = writeln!(text, "{:>7}  {:>6}  {}", r.degree, r.mult, r.weight);
            }
            Ok(Rendered::new(json!({"case": m, "module": name, "box": bx, "rows": rows}), text))
        }
        Cmd::Hilbert { case, module, d, bound } => {
            let m = case_of(&case, cfg)?;
            let c = case_data(m).map_err(err)?;
            let name: ModuleName = module.parse().map_err(err)?;
            let ch = simple_character(&c, name).map_err(err)?;
            let n = hilbert(&ch, d, bound).map_err(err)?;
            Ok(Rendered::new(
                json!({"case": m, "module": name, "degree": d, "dimension": n.to_string()}),
                format!("dim [{name}]_{d} = {n}\n"),
            ))
        }
        Cmd::Poincare { case } => {
            let m = case_of(&case, cfg)?;
            let r = poincare_report(m).map_err(err)?;
            let mut text = format!("P(q) = {}\ncells = {}\n", r.display, r.cells);
            if let Some(e) = &r.erratum {
                let _ = writeln!(text, "erratum: {e}");
            }
            Ok(Rendered::new(json!(r), text))
        }
        Cmd::Ih { case, orbit } => {
            let m = case_of(&case, cfg)?;
            let r = ih_orbit(m, orbit).map_err(err)?;
            let mut text = format!("IH(O_{orbit}), m = {m}\n{:>4}  dim\n", "i");
            for (i, d) in &r.groups {
                let _ = writeln!(text, "{i:>4}  {d}");
            }
            let ok = r.consistent;
            Ok(Rendered { json: json!(r), text, ok })
        }
        Cmd::Lyubeznik { case, orbit } => {
            let m = case_of(&case, cfg)?;
            let r = lyubeznik(m, orbit).map_err(err)?;
            let mut text = format!("lambda_(i,j)(R_{orbit}) = 1, m = {m}\n{:>4}  {:>4}\n", "i", "j");
            for (i, j) in &r.pairs {
                let _ = writeln!(text, "{i:>4}  {j:>4}");
            }
            let ok = r.passed();
            Ok(Rendered { json: json!(r), text, ok })
        }
        Cmd::Loccoh { case, orbit } => {
            let m = case_of(&case, cfg)?;
            let t = local_cohomology_table(m, orbit, None).map_err(err)?;
            let mut text = format!("H^j_(O_{orbit})(S), m = {m}\n");
            for e in &t.entries {
                let body = match &e.shape {
                    Shape::Simple => e.factors[0].to_string(),
                    Shape::Extension { sub, quotient } => format!("0 -> {sub} -> H -> {quotient} -> 0"),
                };
                let _ = writeln!(text, "{:>4}  {body}", e.index);
            }
            let ok = t.passed();
            Ok(Rendered { json: json!(t), text, ok })
        }
        Cmd::Decomp { case, d, k, scan_trivial, targets } => {
            let m = case_of(&case, cfg)?;
            let c = case_data(m).map_err(err)?;
            if scan_trivial {
                let s = trivial_scan_with(&c, k, targets, cfg.stability).map_err(err)?;
                let mut text = format!("trivial scan, m = {m}, k = {}, stable = {}\n", s.k, s.stable);
                for (i, ws) in &s.bundles {
                    let list: Vec<String> = ws.iter().map(|w| format!("V{w}")).collect();
                    let _ = writeln!(text, "  i = {i:>2}: {}", list.join(", "));
                }
                return Ok(Rendered::new(json!(s), text));
            }
            let d = d.ok_or("missing --d")?;
            let (summands, label) = match k {
                Some(k) => (greta_summands(&c, d, k), format!("Lambda^-{k} (x) Sym_{d}(gr eta)")),
                None => (sym_cotangent_decomp(&c, d), format!("Sym_{d} Omega")),
            };
            let mut text = format!("{label}, m = {m}: {} summands\n", summands.len());
            for s in &summands {
                let _ = writeln!(text, "  (a,b,c) = ({},{},{})  V{}", s.a, s.b, s.c, s.weight);
            }
            let mut json = json!({"case": m, "d": d, "k": k, "summands": summands});
            if k.is_none() {
                let rank = sym_cotangent_rank(&c, d).map_err(err)?;
                let _ = writeln!(text, "rank = {rank}");
                json["rank"] = json!(rank.to_string());
            }
            Ok(Rendered::new(json, text))
        }
        Cmd::Verify { case, window: w } => {
            let m = case_of(&case, cfg)?;
            let c = case_data(m).map_err(err)?;
            let bx = window(&w, cfg, m)?;
            let reports = verify_identities(&c, bx).map_err(err)?;
            let mut text = String::new();
            for r in &reports {
                let status = if r.passed() { "pass" } else { "FAIL" };
                let _ = writeln!(text, "{status}  {}", r.identity);
                if let Some(cx) = &r.counterexample {
                    let _ = writeln!(text, "      at {} t^{}: {} vs {}", cx.weight, cx.degree, cx.lhs, cx.rhs);
                }
            }
            let ok = reports.iter().all(|r| r.passed());
            Ok(Rendered { json: json!(reports), text, ok })
        }
        Cmd::Reg { case, orbit, root, deg_f, codim } => {
            if let Some(root) = root {
                let r: Rational = root.parse().map_err(err)?;
                let (df, c) = (deg_f.ok_or("missing --deg-f")?, codim.ok_or("missing --codim")?);
                let v = regularity_from(r, df, c).map_err(err)?;
                return Ok(Rendered::new(
                    json!({"root": r, "deg_f": df, "codim": c, "regularity": v}),
                    format!("reg = -({r})*{df} - {c} = {v}\n"),
                ));
            }
            let m = case_of(&case, cfg)?;
            let p = orbit.ok_or("missing --orbit")?;
            let reg = regularity(m, p).map_err(err)?;
            let semi = semiinvariant_degree_check(m, p).map_err(err)?;
            let tag = if reg.derived { "derived" } else { "reference, not derived" };
            let mut text = format!("reg(I_{p}) = {} ({tag}), m = {m}\n", reg.value);
            match semi.expected_degree {
                Some(e) => {
                    let _ = writeln!(text, "semi-invariant section in degree {e}: multiplicity {}", semi.multiplicity);
                }
                None => text.push_str("no G'-invariant section killed by f\n"),
            }
            let ok = semi.passed;
            Ok(Rendered { json: json!({"regularity": reg, "semiinvariant": semi}), text, ok })
        }
        Cmd::Bfunction { case } => {
            let m = case_of(&case, cfg)?;
            let c = case_data(m).map_err(err)?;
            let factors: Vec<String> = c
                .broots
                .iter()
                .map(|r| format!("(s+{})", Rational(-r.0)))
                .collect();
            let mut text = format!("b(s) = {}\n", factors.join(""));
            for e in &c.holonomy {
                let _ = writeln!(text, "  O_{} -- O_{}: {}", e.upper, e.lower, e.label);
            }
            let local: Vec<String> = c.local_b_o2.iter().map(|r| format!("(s+{})", Rational(-r.0))).collect();
            let _ = writeln!(text, "local b-function at O_2: {}", local.join(""));
            Ok(Rendered::new(
                json!({"case": m, "deg_f": c.deg_f, "roots": c.broots, "holonomy": c.holonomy, "local_b_o2": c.local_b_o2}),
                text,
            ))
        }
        Cmd::Quiver { case, dot } => {
            let m = case_of(&case, cfg)?;
            let q = build_quiver(m).map_err(err)?;
            let f = fourier_permutation(m).map_err(err)?;
            let text = if dot {
                q.to_dot()
            } else {
                let arrows: Vec<String> = q.arrows.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                let iso: Vec<String> = q.isolated().iter().map(|v| v.to_string()).collect();
                format!("arrows: {}\nisolated: {}\n", arrows.join(" "), iso.join(" "))
            };
            Ok(Rendered::new(json!({"quiver": q, "fourier": f, "dot": q.to_dot()}), text))
        }
        Cmd::Report { case } => {
            let m = case_of(&case, cfg)?;
            let (json, ok) = report::build_report(cfg, m).map_err(err)?;
            Ok(Rendered { json, text: String::new(), ok })
        }
    }
}
