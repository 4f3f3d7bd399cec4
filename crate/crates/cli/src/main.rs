//! `attp` — build, check, verify and print finite-dimensional algebras
//! constructed through twisted tensor products.
//!
//! Exit codes: 0 all verdicts pass, 1 some identity or conclusion fails,
//! 2 usage or input error, 3 theorem hypotheses fail (vacuous).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use attp_core::{
    algebra_from_json, algebra_to_json, alt_twisted_product, catalog, cayley_dickson,
    cayley_dickson_underline, clifford_step, is_alternative, is_associative, is_commutative,
    is_flexible, lift_involution_full, norm_form, power_associative_bounded, rmap_from_involution,
    sidecar_path, sigma_from_json, sigma_to_json, strong_involution_data, tripling,
    verify_theorem_ext, verify_theorem_main, verify_tripling_suite, Algebra, CheckReport,
    Involution, LinearMap, Overall, TheoremReport, TwistingMap, Witness, DEFAULT_SEED,
};

#[derive(Parser)]
#[command(
    name = "attp",
    version,
    about = "Exact construction and verification of twisted tensor product algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an algebra from a base and a pipeline of construction steps.
    Build(BuildArgs),
    /// Run property checkers against an algebra file.
    Check(CheckArgs),
    /// Verify a structural statement on concrete inputs.
    Verify(VerifyArgs),
    /// Print the multiplication table of an algebra file.
    Table { file: PathBuf },
}

#[derive(Args)]
struct BuildArgs {
    /// Catalog name (K, complex, quaternions, octonions, sedenions,
    /// split-complex, clifford:n:q1,..,qn, tripling:<base>:q,r) or a path
    /// to an algebra JSON file.
    #[arg(long)]
    base: String,
    /// Construction step, applied left to right. One of cd:q,
    /// cd-underline:q, clifford:q, tripling:q,r.
    #[arg(long = "step")]
    steps: Vec<String>,
    /// Output path; the lifted involution goes to <out>.sigma.json.
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Comma-separated list from assoc, comm, alt, flex, power:N, norm.
    #[arg(long)]
    props: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized parts of the checkers.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    which: VerifyCmd,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Invertible twisting map gives a mirror product isomorphic through R.
    Main {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
        /// Twisting map: `cd` (from B's involution sidecar), `flip`, or a
        /// path to a twist JSON file.
        #[arg(long = "R", default_value = "cd")]
        r: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Involutions on both factors lift to the twisted product.
    Ext {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
        #[arg(long = "R", default_value = "cd")]
        r: String,
        /// `conj` (the involution sidecar of --A) or a sigma JSON path.
        #[arg(long = "sigmaA")]
        sigma_a: String,
        /// `conj` (the involution sidecar of --B) or a sigma JSON path.
        #[arg(long = "sigmaB")]
        sigma_b: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full tripling suite over B with parameters q and r.
    Tripling {
        #[arg(long = "B")]
        b: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Build(args) => cmd_build(args),
        Cmd::Check(args) => cmd_check(args),
        Cmd::Verify(args) => cmd_verify(args.which),
        Cmd::Table { file } => cmd_table(&file),
    }
}

/// Pipeline state: the current algebra plus whatever extra structure the
/// steps so far have produced.
struct Stage {
    algebra: Algebra,
    involution: Option<Involution>,
    automorphism: Option<LinearMap>,
}

fn load_algebra(path: &Path) -> Result<Algebra, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    algebra_from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_sidecar_involution(path: &Path, alg: &Algebra) -> Result<Option<Involution>, String> {
    let sc = sidecar_path(path);
    if !sc.exists() {
        return Ok(None);
    }
    let text =
        fs::read_to_string(&sc).map_err(|e| format!("cannot read {}: {e}", sc.display()))?;
    let m = sigma_from_json(alg.field, &text).map_err(|e| format!("{}: {e}", sc.display()))?;
    let inv = Involution::verify(alg, m).map_err(|e| format!("{}: {e}", sc.display()))?;
    Ok(Some(inv))
}

fn load_base(base: &str) -> Result<Stage, String> {
    if let Ok(cons) = catalog(base) {
        return Ok(Stage {
            algebra: cons.algebra,
            involution: cons.involution,
            automorphism: cons.automorphism,
        });
    }
    let path = Path::new(base);
    if !path.exists() {
        return Err(format!(
            "base {base:?} is neither a catalog name nor an existing file"
        ));
    }
    let algebra = load_algebra(path)?;
    let involution = load_sidecar_involution(path, &algebra)?;
    Ok(Stage {
        algebra,
        involution,
        automorphism: None,
    })
}

fn cmd_build(args: BuildArgs) -> Result<u8, String> {
    let mut stage = load_base(&args.base)?;
    let field = stage.algebra.field;
    for step in &args.steps {
        let (op, params) = step
            .split_once(':')
            .ok_or_else(|| format!("step {step:?} is not of the form op:params"))?;
        match op {
            "cd" | "cd-underline" => {
                let q = field.parse(params).map_err(|e| format!("step {step:?}: {e}"))?;
                let s = stage.involution.as_ref().ok_or_else(|| {
                    format!("step {step:?} needs an involution on the current algebra")
                })?;
                let cons = if op == "cd" {
                    cayley_dickson(&stage.algebra, s, &q)
                } else {
                    cayley_dickson_underline(&stage.algebra, s, &q)
                }
                .map_err(|e| format!("step {step:?}: {e}"))?;
                stage = Stage {
                    algebra: cons.algebra,
                    involution: cons.involution,
                    automorphism: None,
                };
            }
            "clifford" => {
                let q = field.parse(params).map_err(|e| format!("step {step:?}: {e}"))?;
                let s = stage.automorphism.as_ref().ok_or_else(|| {
                    format!("step {step:?} needs an involutive automorphism on the current algebra")
                })?;
                let cons = clifford_step(&stage.algebra, s, &q)
                    .map_err(|e| format!("step {step:?}: {e}"))?;
                stage = Stage {
                    algebra: cons.algebra,
                    involution: None,
                    automorphism: cons.automorphism,
                };
            }
            "tripling" => {
                let (qs, rs) = params
                    .split_once(',')
                    .ok_or_else(|| format!("step {step:?} needs two parameters q,r"))?;
                let q = field.parse(qs).map_err(|e| format!("step {step:?}: {e}"))?;
                let r = field.parse(rs).map_err(|e| format!("step {step:?}: {e}"))?;
                let s = stage.involution.as_ref().ok_or_else(|| {
                    format!("step {step:?} needs an involution on the current algebra")
                })?;
                let cons = tripling(&stage.algebra, s, &q, &r)
                    .map_err(|e| format!("step {step:?}: {e}"))?;
                stage = Stage {
                    algebra: cons.algebra,
                    involution: cons.involution,
                    automorphism: None,
                };
            }
            _ => return Err(format!("unknown step operation {op:?}")),
        }
    }
    // Iterated doublings produce colliding composite labels; fall back to
    // generic basis labels whenever the pipeline made them ambiguous.
    let unique: std::collections::HashSet<&String> = stage.algebra.labels.iter().collect();
    if unique.len() < stage.algebra.dim {
        stage.algebra.labels = (0..stage.algebra.dim)
            .map(|i| if i == 0 { "1".into() } else { format!("e{i}") })
            .collect();
    }
    fs::write(&args.out, algebra_to_json(&stage.algebra))
        .map_err(|e| format!("cannot write {}: {e}", args.out.display()))?;
    if let Some(inv) = &stage.involution {
        let sc = sidecar_path(&args.out);
        fs::write(&sc, sigma_to_json(&inv.map))
            .map_err(|e| format!("cannot write {}: {e}", sc.display()))?;
    }
    println!(
        "wrote {} (dim {})",
        args.out.display(),
        stage.algebra.dim
    );
    Ok(0)
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        None => String::new(),
        Some(Witness::Indices(v)) => format!(" witness {v:?}"),
        Some(Witness::Vectors(vs)) => format!(" witness {vs:?}"),
    }
}

fn cmd_check(args: CheckArgs) -> Result<u8, String> {
    let alg = load_algebra(&args.file)?;
    let explicit = args.props.is_some();
    let props = args
        .props
        .unwrap_or_else(|| "assoc,comm,alt,flex,power:5,norm".into());

    let mut reports: Vec<CheckReport> = Vec::new();
    for prop in props.split(',') {
        let prop = prop.trim();
        let rep = match prop {
            "assoc" => is_associative(&alg),
            "comm" => is_commutative(&alg),
            "alt" => is_alternative(&alg),
            "flex" => is_flexible(&alg),
            "norm" => {
                match load_sidecar_involution(&args.file, &alg)? {
                    Some(inv) => norm_report(&alg, &inv),
                    None if explicit => {
                        return Err(format!(
                            "norm check needs the involution sidecar {}",
                            sidecar_path(&args.file).display()
                        ))
                    }
                    None => Ok(CheckReport::pass(
                        "norm",
                        "skipped: no involution sidecar present",
                    )),
                }
            }
            _ => {
                if let Some(n) = prop.strip_prefix("power:") {
                    let n: usize = n
                        .parse()
                        .map_err(|_| format!("bad power bound in {prop:?}"))?;
                    if n < 3 {
                        return Err(format!("power bound must be at least 3, got {n}"));
                    }
                    power_associative_bounded(&alg, n, 5, args.seed)
                } else {
                    return Err(format!("unknown property {prop:?}"));
                }
            }
        }
        .map_err(|e| e.to_string())?;
        reports.push(rep);
    }

    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        ),
        Format::Text => {
            for rep in &reports {
                if rep.passed() {
                    println!("{}: pass ({})", rep.property, rep.detail);
                } else {
                    println!(
                        "{}: fail ({}){}",
                        rep.property,
                        rep.detail,
                        witness_text(&rep.witness)
                    );
                }
            }
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
}

fn norm_report(alg: &Algebra, inv: &Involution) -> attp_core::Result<CheckReport> {
    match strong_involution_data(alg, inv) {
        Ok(data) => {
            let nf = norm_form(alg, &data);
            Ok(if nf.nondegenerate() {
                CheckReport::pass(
                    "norm",
                    format!("norm form nondegenerate, rank {} of {}", nf.rank, alg.dim),
                )
            } else {
                CheckReport::fail(
                    "norm",
                    Witness::Indices(vec![]),
                    format!("norm form degenerate, rank {} of {}", nf.rank, alg.dim),
                )
            })
        }
        Err(e) => Ok(CheckReport::fail(
            "norm",
            Witness::Indices(vec![]),
            format!("involution is not strong: {e}"),
        )),
    }
}

fn twist_from_spec(
    spec: &str,
    a: &Algebra,
    b: &Algebra,
    b_path: &Path,
) -> Result<TwistingMap, String> {
    let map = match spec {
        "flip" => LinearMap::flip(a.field, b.dim, a.dim),
        "cd" => {
            let inv = load_sidecar_involution(b_path, b)?.ok_or_else(|| {
                format!(
                    "--R cd needs the involution sidecar {}",
                    sidecar_path(b_path).display()
                )
            })?;
            rmap_from_involution(a, b, &inv.map)
        }
        path => {
            let text = fs::read_to_string(path)
                .map_err(|_| format!("--R must be cd, flip, or a readable twist JSON file; got {spec:?}"))?;
            attp_core::twist_from_json(a.field, &text).map_err(|e| format!("{spec}: {e}"))?
        }
    };
    let tm = TwistingMap::new(a.clone(), b.clone(), map).map_err(|e| e.to_string())?;
    if !tm.axioms.passed() {
        return Err(format!(
            "the given map is not an alternative twisting map: {} ({})",
            tm.axioms.property, tm.axioms.detail
        ));
    }
    Ok(tm)
}

fn load_sigma(spec: &str, path: &Path, alg: &Algebra) -> Result<Involution, String> {
    if spec == "conj" {
        return load_sidecar_involution(path, alg)?.ok_or_else(|| {
            format!(
                "sigma source `conj` needs the involution sidecar {}",
                sidecar_path(path).display()
            )
        });
    }
    let text =
        fs::read_to_string(spec).map_err(|e| format!("cannot read sigma file {spec}: {e}"))?;
    let m = sigma_from_json(alg.field, &text).map_err(|e| format!("{spec}: {e}"))?;
    Involution::verify(alg, m).map_err(|e| format!("{spec}: {e}"))
}

fn emit_theorem(report: &TheoremReport, format: Format) -> u8 {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        Format::Text => {
            println!("theorem: {}", report.theorem);
            for h in &report.hypothesis_reports {
                println!(
                    "  hypothesis {}: {} ({})",
                    h.property,
                    if h.passed() { "pass" } else { "fail" },
                    h.detail
                );
            }
            for c in &report.conclusion_reports {
                println!(
                    "  conclusion {}: {} ({})",
                    c.property,
                    if c.passed() { "pass" } else { "fail" },
                    c.detail
                );
            }
            println!(
                "overall: {}",
                match report.overall {
                    Overall::Pass => "pass",
                    Overall::Fail => "fail",
                    Overall::Vacuous => "vacuous",
                }
            );
        }
    }
    match report.overall {
        Overall::Pass => 0,
        Overall::Fail => 1,
        Overall::Vacuous => 3,
    }
}

fn render_matrix(m: &LinearMap) -> String {
    let mut lines = Vec::new();
    for i in 0..m.rows {
        let row: Vec<String> = (0..m.cols).map(|j| m.get(i, j).render()).collect();
        lines.push(format!("  [{}]", row.join(", ")));
    }
    lines.join("\n")
}

fn cmd_verify(which: VerifyCmd) -> Result<u8, String> {
    match which {
        VerifyCmd::Main { a, b, r, format } => {
            let alg_a = load_algebra(&a)?;
            let alg_b = load_algebra(&b)?;
            let tm = twist_from_spec(&r, &alg_a, &alg_b, &b)?;
            let report = verify_theorem_main(&tm).map_err(|e| e.to_string())?;
            Ok(emit_theorem(&report, format))
        }
        VerifyCmd::Ext {
            a,
            b,
            r,
            sigma_a,
            sigma_b,
            format,
        } => {
            let alg_a = load_algebra(&a)?;
            let alg_b = load_algebra(&b)?;
            let tm = twist_from_spec(&r, &alg_a, &alg_b, &b)?;
            let sa = load_sigma(&sigma_a, &a, &alg_a)?;
            let sb = load_sigma(&sigma_b, &b, &alg_b)?;
            let report = verify_theorem_ext(&tm, &sa, &sb).map_err(|e| e.to_string())?;
            if format == Format::Text {
                let prod = alt_twisted_product(&tm).map_err(|e| e.to_string())?;
                let outcome =
                    lift_involution_full(&tm, &prod, &sa, &sb).map_err(|e| e.to_string())?;
                println!("sigma_bar =");
                println!("{}", render_matrix(&outcome.sigma_bar));
            }
            Ok(emit_theorem(&report, format))
        }
        VerifyCmd::Tripling { b, q, r, format } => {
            let alg_b = load_algebra(&b)?;
            let field = alg_b.field;
            let qv = field.parse(&q).map_err(|e| e.to_string())?;
            let rv = field.parse(&r).map_err(|e| e.to_string())?;
            let sb = load_sidecar_involution(&b, &alg_b)?.ok_or_else(|| {
                format!(
                    "tripling verification needs the involution sidecar {}",
                    sidecar_path(&b).display()
                )
            })?;
            let report =
                verify_tripling_suite(&alg_b, &sb, &qv, &rv).map_err(|e| e.to_string())?;
            Ok(emit_theorem(&report, format))
        }
    }
}

fn cmd_table(file: &Path) -> Result<u8, String> {
    let alg = load_algebra(file)?;
    let n = alg.dim;
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(n);
    for i in 0..n {
        cells.push(
            (0..n)
                .map(|j| alg.render_element(&alg.basis_product(i, j)))
                .collect(),
        );
    }
    let mut widths: Vec<usize> = (0..n)
        .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap())
        .collect();
    for (j, w) in widths.iter_mut().enumerate() {
        *w = (*w).max(alg.labels[j].len());
    }
    let head_w = alg.labels.iter().map(|l| l.len()).max().unwrap().max(1);

    println!("{} (dim {})", alg.name, n);
    let header: Vec<String> = (0..n)
        .map(|j| format!("{:>w$}", alg.labels[j], w = widths[j]))
        .collect();
    println!("{:>w$} | {}", "*", header.join("  "), w = head_w);
    let total = head_w + 3 + widths.iter().sum::<usize>() + 2 * (n - 1);
    println!("{}", "-".repeat(total));
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| format!("{:>w$}", cells[i][j], w = widths[j]))
            .collect();
        println!("{:>w$} | {}", alg.labels[i], row.join("  "), w = head_w);
    }
    Ok(0)
}
