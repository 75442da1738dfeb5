//! Command-line front end. Every command prints its main output to stdout and,
//! with `--out DIR`, also writes it to files in `DIR`.
//!
//! Exit status: 0 all checks pass, 1 a check failed, 2 configuration error,
//! 3 precondition error (base algebra without unit), 4 invalid algebra data.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::banded::BandedCalculus;
use crate::config::{self, Config, ConfigError, GrowthKindName, Scenario};
use crate::error::Error;
use crate::oracle::{check_product, random_banded, render_matrix, RandomShape};
use crate::span::{assoc_growth, lie_growth, Associative, Commutator};
use crate::verify::{pipeline_growth, EmbeddingScenario, LemmaVerifier, PipelineOptions};

#[derive(Debug, Parser)]
#[command(
    name = "bandgrowth",
    version,
    about = "Growth functions and banded-matrix embeddings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Scenario file (TOML).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Directory for output files; created if missing.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Overrides `n_max` from the config.
    #[arg(long, global = true)]
    pub nmax: Option<usize>,
    /// Overrides `seed` from the config.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of g(V, n) for the configured generators.
    Growth {
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Checks of the embedding a -> e_11(a) and the growth bound.
    VerifyLemma,
    /// Randomized comparison of banded products against truncated matrices.
    Oracle,
    /// Growth along L -> U(L) -> M_2(U(L)) for configured Lie data.
    Pipeline,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Assoc,
    Lie,
}

/// A command's failure: exit code and message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoUnit => 3,
            Error::NotAlternating { .. } | Error::Jacobi { .. } | Error::UnitLaw { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::Invalid(m) => Failure::config(m),
            ConfigError::Algebra(e) => e.into(),
        }
    }
}

/// Parses arguments, runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Runs a parsed command; `Ok` carries 0 or 1.
pub fn run(cli: &Cli) -> Result<i32, Failure> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| Failure::config("--config PATH is required"))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::config(format!("{}: {e}", path.display())))?;
    let mut cfg =
        config::parse(&text).map_err(|e| Failure::config(format!("{}: {e}", path.display())))?;
    if let Some(n) = cli.nmax {
        if n < 1 {
            return Err(Failure::config("--nmax: must be at least 1"));
        }
        cfg.n_max = n;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(t) = cli.threads {
            b = b.num_threads(t);
        }
        b.build()
            .map_err(|e| Failure::config(format!("--threads: {e}")))?
    };
    let out = Output::new(cli.out.as_deref())?;
    pool.install(|| match &cli.command {
        Command::Growth { kind } => cmd_growth(&cfg, *kind, &out),
        Command::VerifyLemma => cmd_verify_lemma(&cfg, &out),
        Command::Oracle => cmd_oracle(&cfg, &out),
        Command::Pipeline => cmd_pipeline(&cfg, &out),
    })
}

struct Output {
    dir: Option<PathBuf>,
}

impl Output {
    fn new(dir: Option<&Path>) -> Result<Self, Failure> {
        if let Some(d) = dir {
            fs::create_dir_all(d)
                .map_err(|e| Failure::config(format!("--out {}: {e}", d.display())))?;
        }
        Ok(Output {
            dir: dir.map(Path::to_path_buf),
        })
    }

    fn file(&self, name: &str, contents: &str) -> Result<(), Failure> {
        if let Some(d) = &self.dir {
            let p = d.join(name);
            fs::write(&p, contents).map_err(|e| Failure {
                code: 2,
                message: format!("{}: {e}", p.display()),
            })?;
        }
        Ok(())
    }
}

fn cmd_growth(cfg: &Config, kind: Option<KindArg>, out: &Output) -> Result<i32, Failure> {
    let scenario = cfg.scenario()?;
    let gens = cfg.elements(&scenario)?;
    if gens.is_empty() {
        return Err(Failure::config(
            "elements: at least one generator is required",
        ));
    }
    let kind = kind.or(cfg.growth.kind.map(|k| match k {
        GrowthKindName::Assoc => KindArg::Assoc,
        GrowthKindName::Lie => KindArg::Lie,
    }));
    let table = match (&scenario, kind) {
        (Scenario::Lie(lie), None | Some(KindArg::Lie)) => lie_growth(lie, &gens, cfg.n_max)?,
        (Scenario::Lie(_), Some(KindArg::Assoc)) => {
            return Err(Failure::config(
                "growth kind assoc needs an associative algebra, not kind = \"lie\"",
            ))
        }
        (Scenario::Associative(a), None | Some(KindArg::Assoc)) => {
            assoc_growth(&Associative(a), &gens, cfg.n_max)?
        }
        (Scenario::Associative(a), Some(KindArg::Lie)) => {
            lie_growth(&Commutator(a), &gens, cfg.n_max)?
        }
    };
    let csv = table.to_csv();
    out.file("growth.csv", &csv)?;
    print!("{csv}");
    Ok(0)
}

fn cmd_verify_lemma(cfg: &Config, out: &Output) -> Result<i32, Failure> {
    let Scenario::Associative(base) = cfg.scenario()? else {
        return Err(Failure::config(
            "verify-lemma needs an associative base algebra, not kind = \"lie\"",
        ));
    };
    let elements = cfg.elements(&Scenario::Associative(base.clone()))?;
    let scenario = EmbeddingScenario::new(base, elements, cfg.n_max)?;
    let verifier = match cfg.verify.test_hook {
        None => LemmaVerifier::new(&scenario)?,
        Some(h) => LemmaVerifier::with_fault(&scenario, h.into())?,
    };
    let outcome = verifier.run_all(cfg.verify.trials, cfg.seed)?;
    let report = outcome.report.to_string();
    out.file("report.txt", &report)?;
    out.file("growth_A.csv", &outcome.base_table.to_csv())?;
    out.file("growth_Bprime.csv", &outcome.banded_table.to_csv())?;
    print!("{report}");
    Ok(if outcome.report.passed() { 0 } else { 1 })
}

fn cmd_oracle(cfg: &Config, out: &Output) -> Result<i32, Failure> {
    let Scenario::Associative(base) = cfg.scenario()? else {
        return Err(Failure::config(
            "oracle needs an associative base algebra, not kind = \"lie\"",
        ));
    };
    let o = &cfg.oracle;
    if o.window < 1 || o.trials < 1 || o.cell_range < 1 || o.max_offset < 0 {
        return Err(Failure::config(
            "oracle: window, trials and cell_range must be at least 1, max_offset at least 0",
        ));
    }
    let calc = match o.test_hook {
        None => BandedCalculus::new(&base),
        Some(h) => BandedCalculus::with_fault(&base, h.into()),
    };
    let shape = RandomShape {
        max_offset: o.max_offset,
        cell_range: o.cell_range,
        ..RandomShape::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut t = String::new();
    let _ = writeln!(t, "# base algebra: {base}");
    let _ = writeln!(
        t,
        "# window = {}, input = {}, trials = {}, seed = {}, max_offset = {}, cell_range = {}",
        o.window,
        o.input(),
        o.trials,
        cfg.seed,
        o.max_offset,
        o.cell_range
    );
    let mut agreed = 0;
    let mut failed = false;
    for trial in 1..=o.trials {
        let x = random_banded(&mut rng, &base, &shape);
        let y = random_banded(&mut rng, &base, &shape);
        match check_product(&calc, &x, &y, o.window, o.input())? {
            None => {
                agreed += 1;
                let _ = writeln!(t, "{trial}\tagree\tx = {x}\ty = {y}");
            }
            Some(m) => {
                let _ = writeln!(t, "{trial}\tDISAGREE\tx = {x}\ty = {y}");
                if !failed {
                    let _ = writeln!(
                        t,
                        "# truncated product (expected):\n{}",
                        render_matrix(&m.expected)
                    );
                    let _ = writeln!(
                        t,
                        "# banded product, truncated (actual):\n{}",
                        render_matrix(&m.actual)
                    );
                }
                failed = true;
            }
        }
    }
    let _ = writeln!(t, "# agreed {agreed}/{}", o.trials);
    out.file("oracle.txt", &t)?;
    print!("{t}");
    Ok(if failed { 1 } else { 0 })
}

fn cmd_pipeline(cfg: &Config, out: &Output) -> Result<i32, Failure> {
    let lie = match cfg.scenario()? {
        Scenario::Lie(l) => l,
        Scenario::Associative(a) => match a.kind() {
            crate::algebra::AlgebraKind::Enveloping(l) => l.clone(),
            _ => {
                return Err(Failure::config(
                    "pipeline needs Lie data: algebra kind = \"lie\" or \"enveloping\"",
                ))
            }
        },
    };
    let opts = PipelineOptions {
        n_max: cfg.n_max,
        matrix_n_max: cfg.pipeline.matrix_n_max.min(cfg.n_max),
        trials: cfg.pipeline.trials,
        seed: cfg.seed,
    };
    if opts.matrix_n_max < 1 {
        return Err(Failure::config("pipeline.matrix_n_max: must be at least 1"));
    }
    let outcome = pipeline_growth(&lie, opts)?;
    let report = outcome.report.to_string();
    out.file("report.txt", &report)?;
    out.file("enveloping.csv", &outcome.enveloping_table.to_csv())?;
    out.file("lemma_A.csv", &outcome.lemma.base_table.to_csv())?;
    out.file("lemma_Bprime.csv", &outcome.lemma.banded_table.to_csv())?;
    out.file("matrix.csv", &outcome.matrix.to_csv())?;
    print!("{report}");
    for w in outcome
        .report
        .header
        .iter()
        .filter(|h| h.starts_with("WARNING"))
    {
        eprintln!("{w}");
    }
    Ok(if outcome.report.passed() { 0 } else { 1 })
}
