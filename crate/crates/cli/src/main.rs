use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use jitdefect::data::{write_csv_file, SchemaProfile};
use jitdefect::eval::DEFAULT_EFFORT_FRACTION;
use jitdefect::oneway::Goal;
use jitdefect::report::{self, Baseline, FamilyScope, RunConfig};
use jitdefect::stats::{Color, Sidedness, ZeroMethod};
use jitdefect::supervised::{Recipe, ScoreMode};
use jitdefect::synth::{synthetic_corpus, SynthConfig};
use jitdefect::{Execution, Learner, Measure, WindowMode};

/// Effort-aware just-in-time defect prediction experiments.
#[derive(Parser, Debug)]
#[command(name = "jitdefect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the time-wise evaluation and write results, medians, verdicts and quartiles.
    Run(RunArgs),
    /// Report row counts, defect rates and window counts for every CSV in a
    /// directory. Files that fail to load are reported, not fatal.
    Validate {
        #[arg(long)]
        data_dir: PathBuf,
        #[arg(long, default_value = "kamei")]
        schema_profile: String,
        #[arg(long, default_value = "populated")]
        window_mode: WindowMode,
    },
    /// Write a synthetic corpus in the canonical CSV layout.
    Synth {
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 5)]
        projects: usize,
        #[arg(long, default_value_t = 24)]
        months: usize,
        #[arg(long, default_value_t = 200)]
        changes_per_month: usize,
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long)]
    data_dir: PathBuf,
    /// Comma-separated project names; defaults to every CSV in --data-dir.
    #[arg(long, value_delimiter = ',')]
    projects: Vec<String>,
    /// Learner names or the groups `unsupervised`, `supervised`, `all`.
    #[arg(long, default_value = "all")]
    learners: String,
    #[arg(long, default_value_t = DEFAULT_EFFORT_FRACTION)]
    effort_fraction: f64,
    /// OneWay selection goal: mean, recall, precision, f1 or popt.
    #[arg(long, default_value = "mean")]
    goal: Goal,
    /// Feature preprocessing for the supervised learners: kamei or raw.
    #[arg(long, default_value = "kamei")]
    preprocess: Recipe,
    /// populated (months with changes) or calendar (every month, empty ones included).
    #[arg(long, default_value = "populated")]
    window_mode: WindowMode,
    /// Seed for FOREST; required when FOREST is in the learner set.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out_dir: PathBuf,
    /// `best-supervised` or a learner name.
    #[arg(long, default_value = "best-supervised")]
    baseline: Baseline,
    /// `kamei` or a path to a TOML column-synonym profile.
    #[arg(long, default_value = "kamei")]
    schema_profile: String,
    /// Let OneWay also pick LA and LD.
    #[arg(long)]
    include_all_metrics: bool,
    /// probability or density.
    #[arg(long, default_value = "probability")]
    score_mode: ScoreMode,
    #[arg(long, default_value_t = 100)]
    trees: usize,
    #[arg(long, default_value_t = 8)]
    k: usize,
    /// Keep zero differences in the signed-rank test (Pratt).
    #[arg(long)]
    pratt: bool,
    /// two-sided, or directional (one-sided in the direction of Cliff's delta).
    #[arg(long, default_value = "two-sided")]
    sidedness: Sidedness,
    /// Comparisons adjusted together: project-measure, project or run.
    #[arg(long, default_value = "project-measure")]
    bh_scope: FamilyScope,
    /// Disable data-parallel execution.
    #[arg(long)]
    sequential: bool,
}

impl RunArgs {
    fn into_config(self) -> Result<RunConfig> {
        let learners = Learner::parse_list(&self.learners)?;
        let mut config = RunConfig::new(self.data_dir, self.out_dir);
        config.projects = self.projects;
        config.learners = learners;
        config.seed = Some(self.seed);
        config.schema_profile = self.schema_profile;
        config.compare.baseline = self.baseline;
        config.compare.tests.zeros = if self.pratt {
            ZeroMethod::Pratt
        } else {
            ZeroMethod::Wilcoxon
        };
        config.compare.tests.sidedness = self.sidedness;
        config.compare.scope = self.bh_scope;
        let h = &mut config.harness;
        h.effort_fraction = self.effort_fraction;
        h.recipe = self.preprocess;
        h.window_mode = self.window_mode;
        h.oneway.goal = self.goal;
        h.oneway.include_all_metrics = self.include_all_metrics;
        h.classifier.score_mode = self.score_mode;
        h.classifier.forest_trees = self.trees;
        h.classifier.k = self.k;
        if self.sequential {
            h.execution = Execution::Sequential;
        }
        if self.trees == 0 || self.k == 0 {
            bail!("--trees and --k must be positive");
        }
        Ok(config)
    }
}

fn run(args: RunArgs) -> Result<()> {
    let config = args.into_config()?;
    let report = report::run(&config).context("run failed")?;
    let skipped = report.results.iter().filter(|r| r.is_skipped()).count();
    println!(
        "{} window results ({} skipped), written to {}",
        report.results.len(),
        skipped,
        config.out_dir.display()
    );
    for measure in Measure::ALL {
        let (mut better, mut tie, mut worse) = (0, 0, 0);
        for v in report.verdicts.iter().filter(|v| v.measure == measure) {
            match v.color {
                Color::Better => better += 1,
                Color::Tie => tie += 1,
                Color::Worse => worse += 1,
            }
        }
        println!(
            "{:<9} better {better:>3}  tie {tie:>3}  worse {worse:>3}",
            measure.name()
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Validate {
            data_dir,
            schema_profile,
            window_mode,
        } => (|| {
            let profile = SchemaProfile::resolve(&schema_profile)?;
            let reports = report::validate_dir(&data_dir, &profile, window_mode)?;
            if reports.is_empty() {
                println!("no CSV files in {}", data_dir.display());
            }
            print!("{}", report::render_validation(&reports));
            Ok(())
        })(),
        Command::Synth {
            out_dir,
            projects,
            months,
            changes_per_month,
            seed,
        } => (|| {
            std::fs::create_dir_all(&out_dir)?;
            let cfg = SynthConfig {
                projects,
                months,
                changes_per_month,
                seed,
                ..SynthConfig::default()
            };
            for ds in synthetic_corpus(&cfg) {
                let path = write_csv_file(&ds, out_dir.join(format!("{}.csv", ds.project)))?;
                println!("{}", path.display());
            }
            Ok(())
        })(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
