use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use emptytet::geometry::parallelepiped_interior_points;
use emptytet::harness::{Suite, VerificationReport, DEFAULT_NORMALIZE_TRIALS, DEFAULT_SEED};
use emptytet::input::{parse_vertex_file, parse_vertices};
use emptytet::normalize::canonicalize;
use emptytet::report::{classify, enumerate_empty, ClassificationReport, FormJson, MapJson, SCHEMA_VERSION};
use emptytet::whitefn::is_clean_canonical;
use emptytet::{Error, Tetrahedron};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "emptytet", version, about = "Classify and normalize lattice tetrahedra in Z^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report volume, cleanness, emptiness and canonical form of a tetrahedron.
    Classify {
        #[command(flatten)]
        input: VertexInput,
        #[arg(long)]
        json: bool,
        /// Cross-check against a brute-force lattice-point scan.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the canonical form T(a,b,c) and a witnessing unimodular map.
    Normalize {
        #[command(flatten)]
        input: VertexInput,
        #[arg(long)]
        json: bool,
        /// Re-apply the map and verify the image.
        #[arg(long)]
        check: bool,
    },
    /// List every (a, b) with T(a,b,c) empty.
    Enumerate {
        c: i64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Run verification suites against the brute-force oracle.
    Verify {
        /// white, coplanar, fn, normalize, witness or all (repeatable).
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
        #[arg(long = "max-c", value_name = "N")]
        max_c: Option<i64>,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_NORMALIZE_TRIALS)]
        trials: u64,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Interior lattice points of the parallelepiped spanned by e1, e2, (a,b,c).
    Points {
        a: i64,
        b: i64,
        c: i64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args)]
struct VertexInput {
    /// Twelve integers: the coordinates of four vertices.
    #[arg(allow_negative_numbers = true, conflicts_with = "file")]
    coords: Vec<String>,
    /// File with one vertex (three integers) per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Counterexample(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

impl VertexInput {
    fn tetrahedron(&self) -> Result<Tetrahedron, Failure> {
        let vertices = match &self.file {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                parse_vertex_file(&text)?
            }
            None => parse_vertices(&self.coords.join(" "))?,
        };
        Ok(Tetrahedron::new(vertices)?)
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report types serialize");
    s.push('\n');
    s
}

fn fmt_point(p: &[i64; 3]) -> String {
    format!("({},{},{})", p[0], p[1], p[2])
}

fn fmt_map(m: &MapJson) -> String {
    let rows: Vec<String> = m.matrix.iter().map(|r| format!("[{} {} {}]", r[0], r[1], r[2])).collect();
    format!("{} + {}", rows.join(" "), fmt_point(&m.translation))
}

fn classify_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let vs: Vec<String> = r.vertices.iter().map(fmt_point).collect();
    writeln!(s, "vertices: {}", vs.join(" ")).unwrap();
    writeln!(s, "volume6: {}", r.volume6).unwrap();
    writeln!(s, "clean: {}", r.clean).unwrap();
    writeln!(s, "empty: {}", r.empty).unwrap();
    match &r.canonical_form {
        Some(f) => writeln!(s, "canonical form: a={} b={} c={} d={}", f.a, f.b, f.c, f.d).unwrap(),
        None => writeln!(s, "canonical form: none (not normalizable)").unwrap(),
    }
    if let Some(m) = &r.map {
        writeln!(s, "map: {}", fmt_map(m)).unwrap();
    }
    if let Some(pts) = &r.interior_points {
        let pts: Vec<String> = pts.iter().map(fmt_point).collect();
        writeln!(s, "interior points: {}", pts.join(" ")).unwrap();
    }
    if let Some(planes) = &r.planes {
        let tags: Vec<&str> = planes.iter().map(|p| p.as_str()).collect();
        writeln!(s, "planes: {}", tags.join(", ")).unwrap();
    }
    if let Some(o) = &r.oracle {
        writeln!(s, "oracle: empty={} clean={} agrees={}", o.empty, o.clean, o.agrees).unwrap();
    }
    s
}

fn cmd_classify(input: &VertexInput, json: bool, oracle: bool) -> CmdResult {
    let t = input.tetrahedron()?;
    let r = classify(&t, oracle)?;
    let out = if json { to_json(&r) } else { classify_text(&r) };
    if !r.consistent() {
        return Err(Failure::Counterexample(format!("{out}oracle disagrees with the fast criteria")));
    }
    Ok(out)
}

#[derive(Serialize)]
struct NormalizeJson {
    schema_version: u32,
    form: FormJson,
    map: MapJson,
    roles: [usize; 4],
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<bool>,
}

fn cmd_normalize(input: &VertexInput, json: bool, check: bool) -> CmdResult {
    let t = input.tetrahedron()?;
    let r = canonicalize(&t)?;
    if !is_clean_canonical(&r.form) {
        return Err(Error::NotNormalizable.into());
    }
    let checked = if check { Some(r.is_sound_for(&t)?) } else { None };
    let doc = NormalizeJson {
        schema_version: SCHEMA_VERSION,
        form: r.form.into(),
        map: MapJson::from(&r),
        roles: r.roles.as_array(),
        check: checked,
    };
    let out = if json {
        to_json(&doc)
    } else {
        let mut s = String::new();
        let f = doc.form;
        writeln!(s, "form: a={} b={} c={} d={}", f.a, f.b, f.c, f.d).unwrap();
        writeln!(s, "map: {}", fmt_map(&doc.map)).unwrap();
        writeln!(s, "roles: {:?}", doc.roles).unwrap();
        if let Some(ok) = checked {
            writeln!(s, "check: {}", if ok { "ok" } else { "FAILED" }).unwrap();
        }
        s
    };
    if checked == Some(false) {
        return Err(Failure::Counterexample(format!("{out}witnessing map does not reproduce the form")));
    }
    Ok(out)
}

#[derive(Serialize)]
struct EnumerateJson {
    schema_version: u32,
    c: i64,
    rows: Vec<emptytet::report::EnumerationRow>,
}

fn cmd_enumerate(c: i64, json: bool, csv: bool) -> CmdResult {
    let rows = enumerate_empty(c)?;
    let clauses = |r: &emptytet::report::EnumerationRow| {
        r.clauses.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(";")
    };
    let mut s = String::new();
    if json {
        return Ok(to_json(&EnumerateJson { schema_version: SCHEMA_VERSION, c, rows }));
    } else if csv {
        writeln!(s, "a,b,c,d,clauses").unwrap();
        for r in &rows {
            writeln!(s, "{},{},{},{},{}", r.a, r.b, r.c, r.d, clauses(r)).unwrap();
        }
    } else {
        writeln!(s, "{} empty forms with c = {c}", rows.len()).unwrap();
        for r in &rows {
            writeln!(s, "a={} b={} d={}  [{}]", r.a, r.b, r.d, clauses(r)).unwrap();
        }
    }
    Ok(s)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    schema_version: u32,
    passed: bool,
    reports: &'a [VerificationReport],
}

fn cmd_verify(suites: &[String], max_c: Option<i64>, trials: u64, seed: u64, json: bool) -> CmdResult {
    let mut selected = Vec::new();
    for name in suites {
        if name == "all" {
            selected.extend(Suite::ALL);
        } else {
            let s = Suite::from_name(name).ok_or_else(|| {
                Failure::Usage(format!("unknown suite {name:?} (expected white, coplanar, fn, normalize, witness, all)"))
            })?;
            selected.push(s);
        }
    }
    if selected.is_empty() {
        selected.extend(Suite::ALL);
    }
    selected.sort();
    selected.dedup();
    if let Some(c) = max_c {
        let min = if selected.contains(&Suite::Fn) { 2 } else { 1 };
        if c < min {
            return Err(Failure::Usage(format!("--max-c must be at least {min}, got {c}")));
        }
    }
    if trials == 0 && selected.contains(&Suite::Normalize) {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }

    let reports: Vec<VerificationReport> = selected.iter().map(|s| s.run(max_c, trials, seed)).collect();
    for r in &reports {
        eprintln!("{}: {:.2?}", r.suite, r.duration);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let out = if json {
        to_json(&VerifyJson { schema_version: SCHEMA_VERSION, passed, reports: &reports })
    } else {
        let mut s = String::new();
        for r in &reports {
            let tag = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(s, "[{tag}] {} ({}): {} cases", r.suite, r.range, r.cases).unwrap();
            for c in &r.checks {
                writeln!(s, "    {}: {} passed, {} failed", c.name, c.passed, c.failed).unwrap();
            }
            for cx in &r.counterexamples {
                writeln!(s, "    counterexample [{}]: {}", cx.check, cx.detail).unwrap();
            }
        }
        s
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Counterexample(out))
    }
}

#[derive(Serialize)]
struct PointsJson {
    schema_version: u32,
    a: i64,
    b: i64,
    c: i64,
    points: Vec<[i64; 3]>,
}

fn cmd_points(a: i64, b: i64, c: i64, json: bool, csv: bool) -> CmdResult {
    let points: Vec<[i64; 3]> = parallelepiped_interior_points(a, b, c)?.into_iter().map(|p| p.to_array()).collect();
    if json {
        return Ok(to_json(&PointsJson { schema_version: SCHEMA_VERSION, a, b, c, points }));
    }
    let mut s = String::new();
    if csv {
        writeln!(s, "k,x,y,z").unwrap();
    }
    for (k, p) in points.iter().enumerate() {
        if csv {
            writeln!(s, "{},{},{},{}", k + 1, p[0], p[1], p[2]).unwrap();
        } else {
            writeln!(s, "{} {} {}", p[0], p[1], p[2]).unwrap();
        }
    }
    Ok(s)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let result = match &cli.command {
        Command::Classify { input, json, oracle } => cmd_classify(input, *json, *oracle),
        Command::Normalize { input, json, check } => cmd_normalize(input, *json, *check),
        Command::Enumerate { c, json, csv } => cmd_enumerate(*c, *json, *csv),
        Command::Verify { suites, max_c, trials, seed, json } => cmd_verify(suites, *max_c, *trials, *seed, *json),
        Command::Points { a, b, c, json, csv } => cmd_points(*a, *b, *c, *json, *csv),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Counterexample(out)) => {
            print!("{out}");
            ExitCode::from(EXIT_COUNTEREXAMPLE)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
