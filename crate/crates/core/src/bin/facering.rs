use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use facering::analysis::{bruteforce_hprime, hprime_prediction, Invariants, Mode};
use facering::classify::classify;
use facering::complex::label_cmp;
use facering::data;
use facering::formulas::Method;
use facering::pl;
use facering::report::{analyze, load_input, render_text, verify_all, ReportOptions};
use facering::{Error, FieldSpec, SimplicialComplex};

#[derive(Parser)]
#[command(name = "facering", version, about = "Face-ring invariants of simplicial complexes")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// `q` for the rationals or `p:<prime>`.
    #[arg(long, global = true, default_value = "p:2147483647")]
    field: FieldSpec,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// Also write the result as JSON.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Evaluate formulas outside their hypotheses, labelling the verdicts.
    #[arg(long, global = true)]
    force: bool,
}

impl Common {
    fn options(&self) -> ReportOptions {
        ReportOptions {
            field: self.field,
            seed: self.seed,
            trials: self.trials,
            mode: if self.force { Mode::Force } else { Mode::Enforce },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report with every applicable check.
    Analyze { path: String },
    /// One h' prediction next to the brute-force value.
    Hprime {
        path: String,
        #[arg(long, default_value = "bruteforce")]
        method: Method,
    },
    /// Where the complex sits in the hierarchy of classes.
    Classify { path: String },
    /// Stellar subdivision at a face given by its vertex labels.
    Subdivide {
        path: String,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        face: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compares h' - h of a complex and a subdivision of it.
    VerifyPl { a: String, b: String },
    /// Runs every check on the bundled complexes.
    Verify {
        #[arg(long, required = true)]
        all: bool,
    },
    /// Lists or prints the bundled complexes.
    Data {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
    },
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Error> {
    if let Some(p) = path {
        std::fs::write(p, serde_json::to_string_pretty(value)?)?;
    }
    Ok(())
}

fn read_text(path: &str) -> Result<String, Error> {
    match path.strip_prefix("data:") {
        Some(name) => data::get(name)
            .map(|d| d.text.to_string())
            .ok_or_else(|| Error::Data(format!("unknown bundled complex `{name}`"))),
        None => Ok(std::fs::read_to_string(path)?),
    }
}

fn fmt_row<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| format!("{:>6}", x.to_string())).collect()
}

fn run(cli: Cli) -> Result<u8, Error> {
    let c = &cli.common;
    match cli.command {
        Command::Analyze { path } => {
            let (id, k) = load_input(&path)?;
            let r = analyze(&id, &k, &c.options())?;
            print!("{}", render_text(&r));
            write_json(&c.json, &r)?;
            Ok(r.exit_code() as u8)
        }
        Command::Hprime { path, method } => {
            let (_, k) = load_input(&path)?;
            let brute = bruteforce_hprime(&k, c.field, c.seed, c.trials)?;
            let degrees: Vec<usize> = (0..=k.d()).collect();
            println!("degree      {}", fmt_row(&degrees));
            println!("bruteforce  {}", fmt_row(&brute.values));
            if !brute.stable {
                println!("note: trials disagree {:?}", brute.per_trial);
            }
            let inv = Invariants::compute(&k, c.field, c.seed);
            let mode = c.options().mode;
            let Some(p) = hprime_prediction(&inv, method, mode) else {
                write_json(&c.json, &brute)?;
                return Ok(0);
            };
            let p = p?;
            let delta: Vec<i64> = p
                .values
                .iter()
                .zip(&brute.values)
                .map(|(a, &b)| a - b as i64)
                .collect();
            println!("{:<11} {}", method.name(), fmt_row(&p.values));
            println!("delta       {}", fmt_row(&delta));
            if !p.in_hypothesis {
                println!("verdict: out-of-hypothesis");
            }
            write_json(&c.json, &serde_json::json!({ "bruteforce": brute, "prediction": p, "delta": delta }))?;
            Ok(u8::from(p.in_hypothesis && delta.iter().any(|&x| x != 0)))
        }
        Command::Classify { path } => {
            let (_, k) = load_input(&path)?;
            let r = classify(&k, c.field);
            let labels = |vs: &[u32]| {
                let mut ls: Vec<&str> = vs.iter().map(|&v| k.label(v)).collect();
                ls.sort_by(|a, b| label_cmp(a, b));
                ls.join(" ")
            };
            println!("field                   {}", r.field);
            for (name, flag) in [
                ("pure", r.pure),
                ("pseudomanifold", r.pseudomanifold),
                ("normal", r.normal),
                ("cm", r.cm),
                ("homology sphere", r.homology_sphere),
                ("homology manifold", r.homology_manifold),
                ("buchsbaum", r.buchsbaum),
                ("isolated singularities", r.isolated_singularities),
                ("pm isolated", r.pseudomanifold_isolated),
            ] {
                println!("{name:<23} {flag}");
            }
            let his = r.homologically_isolated.map_or("n/a".to_string(), |b| b.to_string());
            println!("homologically isolated  {his}");
            println!("singular                {}", labels(&r.singular_vertices));
            println!("not a sphere link       {}", labels(&r.pseudomanifold_singular_vertices));
            println!("depth                   {}", r.depth);
            for n in &r.notes {
                println!("note: {n}");
            }
            write_json(&c.json, &r)?;
            Ok(0)
        }
        Command::Subdivide { path, face, output } => {
            let text = read_text(&path)?;
            let k = SimplicialComplex::parse(&text)?;
            let f = k.face_from_labels(&face)?;
            let sub = pl::subdivide(&k, &f, c.field)?;
            if !sub.link_cm {
                eprintln!(
                    "warning: link of {} is not CM over {}; h' - h is not guaranteed to be preserved",
                    face.join(" "),
                    c.field
                );
            }
            let out = pl::to_cplx_with_history(&pl::history(&text), &sub);
            match output {
                Some(p) => std::fs::write(p, out)?,
                None => print!("{out}"),
            }
            Ok(0)
        }
        Command::VerifyPl { a, b } => {
            let ta = read_text(&a)?;
            let tb = read_text(&b)?;
            let ka = SimplicialComplex::parse(&ta)?;
            let kb = SimplicialComplex::parse(&tb)?;
            let cmp = pl::verify_pl(&ka, &ta, &kb, &tb, c.field, c.seed, c.trials)?;
            println!("h' - h (A)  {}", fmt_row(&cmp.difference_a));
            println!("h' - h (B)  {}", fmt_row(&cmp.difference_b));
            println!("steps       {}", cmp.steps.len());
            for n in &cmp.notes {
                println!("note: {n}");
            }
            let verdict = match cmp.status {
                pl::PlStatus::Pass => "pass",
                pl::PlStatus::Fail => "fail",
                pl::PlStatus::NotGuaranteed => "not guaranteed",
            };
            println!("verdict     {verdict}");
            write_json(&c.json, &cmp)?;
            Ok(u8::from(cmp.status == pl::PlStatus::Fail))
        }
        Command::Verify { .. } => {
            let reports = verify_all(&c.options())?;
            let mut code = 0;
            for r in &reports {
                let count = |s: &str| r.checks.iter().filter(|ch| ch.status.as_str() == s).count();
                let failed: Vec<&str> = r.failures().map(|ch| ch.name.as_str()).collect();
                println!(
                    "{:<16} pass {:>3}  fail {:>3}  skipped {:>3}  {}",
                    r.complex_id,
                    count("pass"),
                    failed.len(),
                    count("skipped-precondition"),
                    failed.join(" ")
                );
                code = code.max(r.exit_code() as u8);
            }
            write_json(&c.json, &reports)?;
            Ok(code)
        }
        Command::Data { list, emit } => {
            if let Some(name) = emit {
                let ds = data::get(&name).ok_or_else(|| Error::Data(format!("unknown bundled complex `{name}`")))?;
                print!("{}", ds.text);
            } else if list {
                for ds in data::list() {
                    println!("{:<16} {}", ds.name, ds.description);
                }
            } else {
                return Err(Error::Data("pass --list or --emit <name>".into()));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
