//! The `wachspress` command line. [`run`] parses arguments, dispatches to the
//! library, writes to the given streams and returns the exit code: 0 on
//! success, 1 when a check fails, 2 on bad input or usage.

use std::ffi::OsString;
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wachspress::combinatorics::{
    betti_formula, gamma_complex, hilbert_polynomial_formula, hilbert_series_formula,
    hochster_betti, stanley_reisner,
};
use wachspress::coordinates::eval_exact_polygon;
use wachspress::fixtures::{random_convex_polygon, regular_approx};
use wachspress::geometry::{
    cone_data, external_vertices, validate_polygon, Point, Polygon, PolygonJson,
};
use wachspress::ideals::build_ideal;
use wachspress::polyring::{buchberger, Order, Poly, VarSet};
use wachspress::rational::{format, int, parse, Rational};
use wachspress::verify::{verify_polygon, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "wachspress",
    version,
    about = "Exact Wachspress coordinates and Wachspress surface ideals"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for random choices; defaults to $WACHSPRESS_SEED, then 0.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Args, Debug, Clone, Default)]
pub struct PolygonSource {
    /// Polygon JSON file, {"vertices": [["x", "y"], ...]}.
    #[arg(long, value_name = "FILE", conflicts_with = "regular_approx")]
    pub polygon: Option<PathBuf>,
    /// Rational approximation of the regular d-gon.
    #[arg(long, value_name = "D")]
    pub regular_approx: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a polygon is valid and generic.
    Validate(PolygonSource),
    /// Quadric and cubic generators of the Wachspress ideal I(d).
    Ideal {
        #[command(flatten)]
        source: PolygonSource,
        /// Also print the cubics that are not minimal generators.
        #[arg(long)]
        all_cubics: bool,
    },
    /// Reduced Groebner basis of I(d) in graded lex order.
    Groebner {
        #[command(flatten)]
        source: PolygonSource,
        /// Use the graded lex order with x_{K+1} > ... > x_d > x_1 > ... > x_K.
        #[arg(long, value_name = "K")]
        rotate: Option<usize>,
    },
    /// Hilbert series, Hilbert polynomial and Hilbert function.
    Hilbert {
        #[arg(short = 'd', long = "degree")]
        d: Option<usize>,
        /// Also compute the Hilbert function of the initial ideal of this polygon.
        #[command(flatten)]
        source: PolygonSource,
        /// Largest t to tabulate (default d + 2).
        #[arg(long)]
        max_t: Option<u32>,
    },
    /// Graded betti table of S/I(d).
    Betti {
        #[arg(short = 'd', long = "degree")]
        d: usize,
        /// Also print the Hochster table of the Stanley-Reisner ideal of Gamma(d).
        #[arg(long)]
        hochster: bool,
    },
    /// Run every check and print the verification report.
    Verify {
        #[command(flatten)]
        source: PolygonSource,
        /// Skip the degree-3 oracle comparison.
        #[arg(long)]
        no_cubic_oracle: bool,
        /// Adjoint identity check (default: on for d <= 6).
        #[arg(long, value_enum)]
        adjoint_identity: Option<Toggle>,
        /// Random points per sampled check.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Exact Wachspress coordinates at points.
    Eval {
        #[command(flatten)]
        source: PolygonSource,
        /// Point as X,Y with integer or p/q entries; repeatable.
        #[arg(
            long = "point",
            value_name = "X,Y",
            required = true,
            allow_hyphen_values = true
        )]
        points: Vec<String>,
    },
    /// Map points through the deformation taking one polygon to another.
    Deform {
        #[arg(long, value_name = "FILE")]
        source: PathBuf,
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        #[arg(
            long = "point",
            value_name = "X,Y",
            required = true,
            allow_hyphen_values = true
        )]
        points: Vec<String>,
    },
    /// Serve the JSON evaluation API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
    },
    /// Write a seeded random convex generic polygon as JSON.
    Gen {
        #[arg(short = 'd', long = "degree")]
        d: usize,
        /// Output file (default stdout).
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

/// Ends a command early: `Input` exits 2, `Check` exits 1.
#[derive(Debug)]
enum Stop {
    Input(String),
    Check(String),
}

type Outcome = Result<(), Stop>;

struct Ctx<'a> {
    format: Format,
    seed: u64,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: &str, value: Value) -> Outcome {
        let res = match self.format {
            Format::Text => write!(self.out, "{text}"),
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(&value).expect("json")
            ),
        };
        res.map_err(|e| Stop::Input(format!("cannot write output: {e}")))
    }
}

pub fn run<I, T>(args: I, env_seed: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let seed = match (cli.seed, env_seed) {
        (Some(s), _) => s,
        (None, Some(s)) => match s.trim().parse() {
            Ok(s) => s,
            Err(_) => {
                let _ = writeln!(
                    err,
                    "error: WACHSPRESS_SEED is not an unsigned integer: {s:?}"
                );
                return EXIT_INPUT_ERROR;
            }
        },
        (None, None) => 0,
    };
    let mut ctx = Ctx {
        format: cli.format,
        seed,
        out,
    };
    match execute(&cli.command, &mut ctx) {
        Ok(()) => EXIT_OK,
        Err(Stop::Check(msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(err, "{msg}");
            }
            EXIT_CHECK_FAILED
        }
        Err(Stop::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT_ERROR
        }
    }
}

fn execute(cmd: &Command, ctx: &mut Ctx) -> Outcome {
    match cmd {
        Command::Validate(source) => validate(source, ctx),
        Command::Ideal { source, all_cubics } => ideal(source, *all_cubics, ctx),
        Command::Groebner { source, rotate } => groebner(source, *rotate, ctx),
        Command::Hilbert { d, source, max_t } => hilbert(*d, source, *max_t, ctx),
        Command::Betti { d, hochster } => betti(*d, *hochster, ctx),
        Command::Verify {
            source,
            no_cubic_oracle,
            adjoint_identity,
            samples,
        } => {
            let options = VerifyOptions {
                seed: ctx.seed,
                samples: *samples,
                adjoint_identity: adjoint_identity.map(|t| t == Toggle::On),
                degree3_oracle: !no_cubic_oracle,
            };
            verify(source, &options, ctx)
        }
        Command::Eval { source, points } => eval(source, points, ctx),
        Command::Deform {
            source,
            target,
            points,
        } => deform(source, target, points, ctx),
        Command::Serve { port, host } => serve(SocketAddr::new(*host, *port), ctx),
        Command::Gen { d, output } => gen(*d, output.as_deref(), ctx),
    }
}

fn read_points(path: &Path) -> Result<Vec<Point>, Stop> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Stop::Input(format!("{}: {e}", path.display())))?;
    PolygonJson::parse(&text)
        .and_then(|j| j.points())
        .map_err(|e| Stop::Input(format!("{}: {e}", path.display())))
}

/// Raw vertices from `--polygon` or `--regular-approx`.
fn source_points(source: &PolygonSource) -> Result<Vec<Point>, Stop> {
    match (&source.polygon, source.regular_approx) {
        (Some(path), _) => read_points(path),
        (None, Some(d)) => regular_approx(d)
            .map(|p| p.vertices().to_vec())
            .map_err(|e| Stop::Input(format!("--regular-approx {d}: {e}"))),
        (None, None) => Err(Stop::Input(
            "one of --polygon FILE or --regular-approx D is required".into(),
        )),
    }
}

fn load_polygon(source: &PolygonSource) -> Result<Polygon, Stop> {
    validate_polygon(&source_points(source)?)
        .map_err(|e| Stop::Input(format!("invalid polygon: {e}")))
}

fn parse_point(text: &str) -> Result<Point, Stop> {
    let bad = || Stop::Input(format!("point {text:?} is not of the form X,Y"));
    let (x, y) = text.split_once(',').ok_or_else(bad)?;
    let x = parse(x.trim()).map_err(|_| bad())?;
    let y = parse(y.trim()).map_err(|_| bad())?;
    Ok(Point::new(x, y))
}

fn poly_json(p: &Poly) -> Value {
    json!({ "text": p.to_text(), "terms": p.to_records() })
}

fn validate(source: &PolygonSource, ctx: &mut Ctx) -> Outcome {
    let points = source_points(source)?;
    match validate_polygon(&points) {
        Ok(poly) => {
            let cone = cone_data(&poly);
            let y = external_vertices(&cone).map_err(|e| Stop::Check(e.to_string()))?;
            let alphas: Vec<String> = cone.alphas_all().iter().map(format).collect();
            let ext: Vec<String> = y.points().map(|p| p.to_string()).collect();
            let text = format!(
                "valid: d = {}, {}, {}\nalpha: {}\nexternal vertices ({}): {}\n",
                poly.d(),
                if poly.is_convex() {
                    "convex"
                } else {
                    "not convex"
                },
                if poly.was_reoriented() {
                    "reoriented to counterclockwise"
                } else {
                    "counterclockwise"
                },
                alphas.join(" "),
                ext.len(),
                ext.join(" "),
            );
            let value = json!({
                "valid": true,
                "d": poly.d(),
                "convex": poly.is_convex(),
                "reoriented": poly.was_reoriented(),
                "alphas": alphas,
                "external_vertices": ext,
            });
            ctx.emit(&text, value)
        }
        Err(e) => {
            ctx.emit(
                &format!("invalid: {e}\n"),
                json!({ "valid": false, "error": e.to_string() }),
            )?;
            Err(Stop::Check(String::new()))
        }
    }
}

fn ideal(source: &PolygonSource, all_cubics: bool, ctx: &mut Ctx) -> Outcome {
    let poly = load_polygon(source)?;
    let ideal = build_ideal(&cone_data(&poly)).map_err(|e| Stop::Check(e.to_string()))?;
    let mut cubics: Vec<_> = ideal.essential_cubics.iter().collect();
    if all_cubics {
        cubics.extend(&ideal.redundant_cubics);
        cubics.sort_by_key(|c| c.indices);
    }
    let mut text = String::new();
    for q in &ideal.quadric_basis {
        text.push_str(&format!("{q}\n"));
    }
    for c in &cubics {
        text.push_str(&format!("{}\n", c.poly.primitive()));
    }
    let value = json!({
        "d": poly.d(),
        "quadrics": ideal.quadric_basis.iter().map(poly_json).collect::<Vec<_>>(),
        "cubics": cubics
            .iter()
            .map(|c| {
                let mut v = poly_json(&c.poly.primitive());
                v["indices"] = json!([c.indices.0, c.indices.1, c.indices.2]);
                v
            })
            .collect::<Vec<_>>(),
    });
    ctx.emit(&text, value)
}

fn monomial_text(d: usize, m: wachspress::polyring::Monomial) -> String {
    Poly::monomial(&VarSet::ambient(d), m, int(1)).to_text()
}

fn groebner(source: &PolygonSource, rotate: Option<usize>, ctx: &mut Ctx) -> Outcome {
    let poly = load_polygon(source)?;
    let d = poly.d();
    let order = match rotate {
        Some(k) if k >= d => {
            return Err(Stop::Input(format!("--rotate {k} must be below d = {d}")))
        }
        Some(k) => Order::rotated(d, k),
        None => Order::grlex(d),
    };
    let ideal = build_ideal(&cone_data(&poly)).map_err(|e| Stop::Check(e.to_string()))?;
    let gb = buchberger(&ideal.generators(), &order);
    let basis: Vec<String> = gb.polys().iter().map(|g| g.to_text_in(&order)).collect();
    let init: Vec<String> = gb
        .initial_ideal()
        .generators()
        .iter()
        .map(|m| monomial_text(d, m.clone()))
        .collect();
    let matches = rotate
        .is_none()
        .then(|| gb.initial_ideal().generators() == stanley_reisner(d).generators());
    let mut text: String = basis.iter().map(|b| format!("{b}\n")).collect();
    text.push_str(&format!("initial ideal: {}\n", init.join(", ")));
    if let Some(m) = matches {
        text.push_str(&format!(
            "equals Stanley-Reisner ideal of Gamma({d}): {}\n",
            if m { "yes" } else { "no" }
        ));
    }
    let value = json!({ "d": d, "basis": basis, "initial_ideal": init, "matches_stanley_reisner": matches });
    ctx.emit(&text, value)?;
    match matches {
        Some(false) => Err(Stop::Check(
            "initial ideal differs from the Stanley-Reisner ideal".into(),
        )),
        _ => Ok(()),
    }
}

fn hilbert(d: Option<usize>, source: &PolygonSource, max_t: Option<u32>, ctx: &mut Ctx) -> Outcome {
    let poly = match (&source.polygon, source.regular_approx) {
        (None, None) => None,
        _ => Some(load_polygon(source)?),
    };
    let d = match (d, &poly) {
        (Some(d), Some(p)) if d != p.d() => {
            return Err(Stop::Input(format!(
                "-d {d} disagrees with the polygon's {} vertices",
                p.d()
            )))
        }
        (Some(d), _) => d,
        (None, Some(p)) => p.d(),
        (None, None) => return Err(Stop::Input("give -d N or a polygon".into())),
    };
    if d < 4 {
        return Err(Stop::Input(format!("d must be at least 4, got {d}")));
    }
    let hs = hilbert_series_formula(d);
    let hp = hilbert_polynomial_formula(d);
    let sr = stanley_reisner(d);
    let init = match &poly {
        Some(p) => {
            let ideal = build_ideal(&cone_data(p)).map_err(|e| Stop::Check(e.to_string()))?;
            Some(ideal.groebner().initial_ideal())
        }
        None => None,
    };
    let top = max_t.unwrap_or(d as u32 + 2);
    let mut text = format!("HS(t) = {}\nHP(t) = {}\n", hs.to_text(), hp.to_text());
    text.push_str(if init.is_some() {
        " t  series  HP  HF(S/I_Gamma)  HF(S/in I)\n"
    } else {
        " t  series  HP  HF(S/I_Gamma)\n"
    });
    let mut rows = Vec::new();
    let mut agree = true;
    for t in 0..=top {
        let series = hs.coefficient(t as u64);
        let hpt = hp.eval(t as i64);
        let hf = sr.hilbert_function(t);
        let hf_init = init.as_ref().map(|i| i.hilbert_function(t));
        agree &= series == hf as i64 && hpt == int(hf as i64) && hf_init.is_none_or(|h| h == hf);
        text.push_str(&format!("{t:>2} {series:>7} {:>3} {hf:>14}", format(&hpt)));
        if let Some(h) = hf_init {
            text.push_str(&format!(" {h:>11}"));
        }
        text.push('\n');
        rows.push(json!({ "t": t, "series": series, "polynomial": format(&hpt), "hf": hf, "hf_initial": hf_init }));
    }
    let value = json!({
        "d": d,
        "series": { "numerator": hs.numerator, "denominator_exponent": hs.denominator_exp, "text": hs.to_text() },
        "polynomial": { "a": format(&hp.a), "b": format(&hp.b), "c": format(&hp.c), "text": hp.to_text() },
        "values": rows,
    });
    ctx.emit(&text, value)?;
    if agree {
        Ok(())
    } else {
        Err(Stop::Check("Hilbert data disagree".into()))
    }
}

fn betti(d: usize, hochster: bool, ctx: &mut Ctx) -> Outcome {
    let table = betti_formula(d).map_err(|e| Stop::Input(e.to_string()))?;
    if !hochster {
        return ctx.emit(
            &table.render(),
            serde_json::to_value(table.to_json()).expect("json"),
        );
    }
    if d > 16 {
        return Err(Stop::Input(format!(
            "--hochster enumerates 2^(d-1) subsets; d = {d} is too large"
        )));
    }
    let h = hochster_betti(&gamma_complex(d), d).map_err(|e| Stop::Input(e.to_string()))?;
    let text = format!(
        "{}\nHochster table of S/I_Gamma({d}):\n{}",
        table.render(),
        h.render()
    );
    let value = json!({ "formula": table.to_json(), "hochster": h.to_json() });
    ctx.emit(&text, value)
}

fn verify(source: &PolygonSource, options: &VerifyOptions, ctx: &mut Ctx) -> Outcome {
    let points = source_points(source)?;
    let report = verify_polygon(&points, options);
    let value = serde_json::from_str(&report.to_json_pretty()).expect("report json");
    ctx.emit(&report.render_text(), value)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Stop::Check(String::new()))
    }
}

fn point_json(p: &Point) -> Value {
    json!([format(&p.x), format(&p.y)])
}

fn eval(source: &PolygonSource, points: &[String], ctx: &mut Ctx) -> Outcome {
    let poly = load_polygon(source)?;
    let pts = points
        .iter()
        .map(|p| parse_point(p))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for p in &pts {
        let beta = eval_exact_polygon(&poly, p);
        match &beta {
            Some(b) => {
                let cells: Vec<String> = b.iter().map(format).collect();
                text.push_str(&format!("{p}  {}\n", cells.join(" ")));
            }
            None => text.push_str(&format!("{p}  undefined (denominator vanishes)\n")),
        }
        let beta_json = beta.map(|b| b.iter().map(format).collect::<Vec<_>>());
        rows.push(json!({ "point": point_json(p), "beta": beta_json }));
    }
    ctx.emit(&text, json!({ "points": rows }))
}

fn deform(source: &Path, target: &Path, points: &[String], ctx: &mut Ctx) -> Outcome {
    let poly = validate_polygon(&read_points(source)?)
        .map_err(|e| Stop::Input(format!("invalid source polygon: {e}")))?;
    let raw_target = read_points(target)?;
    if raw_target.len() != poly.d() {
        return Err(Stop::Input(format!(
            "target has {} vertices, source has {}",
            raw_target.len(),
            poly.d()
        )));
    }
    // validation may reverse a clockwise source; keep targets paired with their vertices
    let target: Vec<Point> = if poly.was_reoriented() {
        std::iter::once(raw_target[0].clone())
            .chain(raw_target[1..].iter().rev().cloned())
            .collect()
    } else {
        raw_target
    };
    let pts = points
        .iter()
        .map(|p| parse_point(p))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for p in &pts {
        let image = eval_exact_polygon(&poly, p).map(|beta| {
            let x: Rational = beta.iter().zip(&target).map(|(b, t)| b * &t.x).sum();
            let y: Rational = beta.iter().zip(&target).map(|(b, t)| b * &t.y).sum();
            Point::new(x, y)
        });
        match &image {
            Some(q) => text.push_str(&format!("{p} -> {q}\n")),
            None => text.push_str(&format!("{p} -> undefined (denominator vanishes)\n")),
        }
        rows.push(json!({ "point": point_json(p), "image": image.as_ref().map(point_json) }));
    }
    ctx.emit(&text, json!({ "points": rows }))
}

fn serve(addr: SocketAddr, ctx: &mut Ctx) -> Outcome {
    let runtime = tokio::runtime::Runtime::new()
        .map_err(|e| Stop::Input(format!("cannot start runtime: {e}")))?;
    let _ = writeln!(ctx.out, "listening on http://{addr}");
    let _ = ctx.out.flush();
    runtime
        .block_on(wachspress_service::serve(addr))
        .map_err(|e| Stop::Input(format!("cannot serve on {addr}: {e}")))
}

fn gen(d: usize, output: Option<&Path>, ctx: &mut Ctx) -> Outcome {
    if d < 4 {
        return Err(Stop::Input(format!("d must be at least 4, got {d}")));
    }
    let text = random_convex_polygon(d, ctx.seed)
        .to_json()
        .to_string_pretty();
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Stop::Input(format!("{}: {e}", path.display())))
        }
        None => {
            write!(ctx.out, "{text}").map_err(|e| Stop::Input(format!("cannot write output: {e}")))
        }
    }
}
