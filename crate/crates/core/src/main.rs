use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use toric_dimers::algebra::{lp_equal_up_to_spin, Backend, DEFAULT_TOL};
use toric_dimers::dimer::{
    char_poly, check_faces, enumerate_covers, find_kasteleyn_marking, hamiltonians, kasteleyn_check, spin_variants,
};
use toric_dimers::io::InstanceFile;
use toric_dimers::measurement::{boundary_measurement_matrix, charpoly_checked, cut_to_cylinder, turn_weighted};
use toric_dimers::network::{fractional_marking, validate_network, validate_rim_cut, verify_marking, PerfectNetwork};
use toric_dimers::torus::{compute_faces, validate_graph, ToricGraph};
use toric_dimers::verify::{compare_systems, ratfn_json, verify_theorem1, VerifyOptions, SCHEMA};
use toric_dimers::{instances, Approx, Cyclo8, Scalar};

#[derive(Parser)]
#[command(name = "toric-dimers", version, about = "Dimer and boundary measurement polynomials of networks on the torus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Instance file (JSON); bundled instances may be named directly.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Scalar backend; defaults to the kind of weights in the file.
    #[arg(long, global = true, value_enum)]
    backend: Option<BackendArg>,
    /// Comparison tolerance for the float backend.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Report boundary measurements with the other sign convention.
    #[arg(long, global = true)]
    gstv_signs: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Replace the weights by seeded random positive values.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Check the embedding, and perfectness and rim/cut for networks.
    Validate,
    /// List face boundary walks.
    Faces,
    /// Enumerate dimer covers and their homology classes.
    Matchings,
    /// Characteristic polynomial from a Kasteleyn marking.
    Charpoly,
    /// Marking and its face and cycle conditions.
    Marking,
    /// Boundary measurement matrix and det(I - mu M).
    Measure,
    /// Compare det(I - mu M) with the normalized dimer polynomial.
    Verify,
    /// Compare the Hamiltonians of K and of K / Q.
    Compare,
    /// Characteristic polynomials for the four sign flips.
    Spin,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

/// Output of a command: JSON report, text rendering and exit code.
struct Outcome {
    json: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome { json, text, code: 0 }
    }
}

fn load(path: &Path) -> Result<InstanceFile, String> {
    if !path.exists() {
        if let Some(f) = path.to_str().and_then(instances::bundled) {
            return Ok(f);
        }
    }
    InstanceFile::read(path).map_err(|e| e.to_string())
}

fn reweight<S: Scalar>(g: &ToricGraph<S>, seed: u64) -> ToricGraph<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w: Vec<S> = g.edges().iter().map(|_| S::from_exact(&instances::random_positive(&mut rng, 9))).collect();
    g.with_weights(&w)
}

fn report_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn run<S: Scalar>(cli: &Cli, file: &InstanceFile) -> Result<Outcome, String> {
    let inst = file.build::<S>().map_err(|e| e.to_string())?;
    let mut g = inst.graph;
    if let Some(seed) = cli.seed {
        g = reweight(&g, seed);
    }
    let net = PerfectNetwork::new(g.clone());
    let tol = if S::BACKEND == Backend::Exact { 0.0 } else { cli.tol };
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let faces = || compute_faces(&g).map_err(|e| err(&e));
    match cli.command {
        Command::Validate => {
            let (mut r, _) = if inst.oriented { validate_network(&net) } else { validate_graph(&g) };
            if inst.oriented && g.curves().is_some() {
                r.merge(validate_rim_cut(&net));
            }
            let text = if r.is_ok() {
                "valid".to_string()
            } else {
                r.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n")
            };
            let code = if r.is_ok() { 0 } else { 2 };
            Ok(Outcome { json: json!({ "schema": SCHEMA, "valid": r.is_ok(), "report": r }), text, code })
        }
        Command::Faces => {
            let fs = faces()?;
            let walk = |f: &toric_dimers::torus::Face| -> Vec<String> {
                f.walk.iter().map(|&(id, fwd)| if fwd { format!("{id}") } else { format!("{id}'") }).collect()
            };
            let text = fs.iter().enumerate().map(|(k, f)| format!("face {k} ({}): {}", f.len(), walk(f).join(" "))).collect::<Vec<_>>();
            let json = json!({
                "schema": SCHEMA,
                "faces": fs.iter().map(|f| json!({ "length": f.len(), "walk": f.walk })).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(json, text.join("\n")))
        }
        Command::Matchings => {
            let covers = enumerate_covers(&g);
            let table = hamiltonians(&g);
            let mut lines: Vec<String> =
                covers.iter().map(|c| format!("{:?} class ({}, {}) weight {}", c.edges, c.class.0, c.class.1, c.weight.to_literal())).collect();
            if let Some(t) = &table {
                lines.push(format!("generating function: {}", t.generating_function()));
            }
            let json = json!({
                "schema": SCHEMA,
                "count": covers.len(),
                "covers": covers.iter().map(|c| json!({ "edges": c.edges, "class": [c.class.0, c.class.1], "weight": c.weight.to_literal() })).collect::<Vec<_>>(),
                "generating_function": table.map(|t| t.generating_function().to_string()),
            });
            Ok(Outcome::ok(json, lines.join("\n")))
        }
        Command::Charpoly => {
            let m = find_kasteleyn_marking(&g, &faces()?).map_err(|e| err(&e))?;
            let k = char_poly(&g, &m).map_err(|e| err(&e))?;
            let canonical = if k.is_zero() { k.clone() } else { k.canonical().map_err(|e| err(&e))? };
            let check = kasteleyn_check(&g, &m, tol).map_err(|e| err(&e))?;
            let json = json!({ "schema": SCHEMA, "char_poly": k.to_string(), "canonical": canonical.to_string(), "check": check });
            let code = if check.ok { 0 } else { 1 };
            Ok(Outcome { json, text: canonical.to_string(), code })
        }
        Command::Marking => {
            let fs = faces()?;
            if inst.oriented && g.is_bipartite() {
                let m = fractional_marking(&net).map_err(|e| err(&e))?;
                let r = verify_marking(&net, &fs, &m, tol).map_err(|e| err(&e))?;
                let mut j = r.to_json();
                j["schema"] = json!(SCHEMA);
                j["kind"] = json!("fractional");
                j["marking"] = m.to_json(&g);
                let text = format!(
                    "fractional marking: {}\nfaces ok: {}\ncycle signs: {:?}\nswitch counts ok: {}",
                    if r.ok() { "ok" } else { "FAILED" },
                    r.faces.iter().all(|f| f.ok),
                    r.cycles.iter().map(|c| c.sign).collect::<Vec<_>>(),
                    r.switches.iter().all(|s| s.ok),
                );
                Ok(Outcome { json: j, text, code: if r.ok() { 0 } else { 1 } })
            } else {
                let m = find_kasteleyn_marking(&g, &fs).map_err(|e| err(&e))?;
                let checks = check_faces(&g, &fs, &m, tol).map_err(|e| err(&e))?;
                let ok = checks.iter().all(|f| f.ok);
                let json = json!({ "schema": SCHEMA, "kind": "kasteleyn", "ok": ok, "marking": m.to_json(&g) });
                Ok(Outcome { json, text: format!("kasteleyn marking: {}", if ok { "ok" } else { "FAILED" }), code: if ok { 0 } else { 1 } })
            }
        }
        Command::Measure => {
            let m = boundary_measurement_matrix(&net, cli.gstv_signs).map_err(|e| err(&e))?;
            let cyl = cut_to_cylinder(&turn_weighted(&net).map_err(|e| err(&e))?).map_err(|e| err(&e))?;
            let mut cp = charpoly_checked(&cyl, tol).map_err(|e| err(&e))?;
            if cli.gstv_signs {
                cp = cp.substitute_signs(-1, 1);
            }
            let rows: Vec<String> = m.entries.iter().map(|row| format!("[{}]", row.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "))).collect();
            let text = format!("M =\n{}\ndet(I - mu M) = {}", rows.join("\n"), cp);
            let json = json!({ "schema": SCHEMA, "sources": cyl.sources, "matrix": m.to_json(), "charpoly": ratfn_json(&cp), "gstv_signs": cli.gstv_signs });
            Ok(Outcome::ok(json, text))
        }
        Command::Verify => {
            let opts = VerifyOptions { gstv_signs: cli.gstv_signs, tol };
            let r = verify_theorem1(&net, &opts).map_err(|e| err(&e))?;
            let mut j = r.to_json();
            j["seed"] = json!(cli.seed);
            let text = format!(
                "{}\nlhs: {}\nrhs: {}\nspin: {}",
                serde_json::to_value(r.verdict).unwrap().as_str().unwrap(),
                r.lhs,
                r.rhs,
                r.spin.map_or("none".to_string(), |(a, b)| format!("({a}, {b})")),
            );
            Ok(Outcome { json: j, text, code: if r.holds() { 0 } else { 1 } })
        }
        Command::Compare => {
            let opts = VerifyOptions { gstv_signs: cli.gstv_signs, tol };
            let (v, s) = compare_systems(&net, &opts).map_err(|e| err(&e))?;
            let text = format!(
                "K = {}\nQ = {}\nsystems coincide: {}\nGSTV system trivial: {}",
                s.k, s.q, s.coincide, s.gstv_trivial
            );
            let json = json!({ "schema": SCHEMA, "verification": v.to_json(), "systems": report_json(&s) });
            Ok(Outcome { json, text, code: if v.holds() { 0 } else { 1 } })
        }
        Command::Spin => {
            let m = find_kasteleyn_marking(&g, &faces()?).map_err(|e| err(&e))?;
            let base = char_poly(&g, &m).map_err(|e| err(&e))?;
            let variants = spin_variants(&g, &m);
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for (v, (e1, e2)) in variants.iter().zip([(1, 1), (1, -1), (-1, 1), (-1, -1)]) {
                let k = char_poly(&g, v).map_err(|e| err(&e))?;
                let same = lp_equal_up_to_spin(&k, &base.substitute_signs(e1, e2), tol).map_err(|e| err(&e))? == Some((1, 1));
                lines.push(format!("({e1:+}, {e2:+}): {k}"));
                rows.push(json!({ "signs": [e1, e2], "char_poly": k.to_string(), "is_substitution": same }));
            }
            Ok(Outcome::ok(json!({ "schema": SCHEMA, "variants": rows }), lines.join("\n")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Some(path) = cli.input.clone() else {
        eprintln!("error: --input is required");
        return ExitCode::from(2);
    };
    let result = load(&path).and_then(|file| {
        let found = file.backend().map_err(|e| e.to_string())?;
        let backend = match cli.backend {
            Some(BackendArg::Exact) => Backend::Exact,
            Some(BackendArg::Float) => Backend::Float,
            None => found,
        };
        match backend {
            Backend::Exact => run::<Cyclo8>(&cli, &file),
            Backend::Float => run::<Approx>(&cli, &file),
        }
    });
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("report serializes")),
                Format::Text => println!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            match cli.format {
                Format::Json => println!("{}", json!({ "schema": SCHEMA, "error": e })),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
