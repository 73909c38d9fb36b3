//! Batch runs and their reports: per-window results, median tables,
//! quartiles for box plots, verdict matrices, and dataset validation.
//!
//! Floats are written with Rust's shortest round-trip formatting, so a
//! report re-read from disk reproduces the in-memory values exactly. The
//! median table is re-derived from `results.csv` after every run.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::data::{load_csv, Dataset, SchemaProfile};
use crate::error::{Error, Result};
use crate::eval::{EvalScores, Measure};
use crate::exec::Execution;
use crate::harness::{
    buckets_for, run_experiment, ExperimentResult, HarnessConfig, Learner, WindowMode,
};
use crate::stats::{bh_adjust, color, compare_family, Color, Magnitude, Paired, TestOptions};

pub const RESULTS_FILE: &str = "results.csv";
pub const MEDIANS_FILE: &str = "medians.csv";
pub const VERDICTS_FILE: &str = "verdicts.csv";
pub const QUARTILES_FILE: &str = "quartiles.csv";

/// What each learner is compared against in the verdict matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Baseline {
    /// Per (project, measure), the supervised learner with the highest median.
    #[default]
    BestSupervised,
    Learner(Learner),
}

impl std::str::FromStr for Baseline {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "best-supervised" | "best_supervised" => Ok(Baseline::BestSupervised),
            _ => s.parse::<Learner>().map(Baseline::Learner),
        }
    }
}

/// Which comparisons share one Benjamini-Hochberg adjustment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FamilyScope {
    /// Every learner against the baseline for one (project, measure).
    #[default]
    ProjectMeasure,
    /// All measures of one project.
    Project,
    /// Every comparison in the run.
    Run,
}

impl std::str::FromStr for FamilyScope {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "project-measure" | "project_measure" => Ok(FamilyScope::ProjectMeasure),
            "project" => Ok(FamilyScope::Project),
            "run" | "all" => Ok(FamilyScope::Run),
            other => Err(format!("unknown family scope `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CompareConfig {
    pub baseline: Baseline,
    pub tests: TestOptions,
    pub scope: FamilyScope,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub data_dir: PathBuf,
    /// Project names (file stems); empty means every CSV in `data_dir`.
    pub projects: Vec<String>,
    pub learners: Vec<Learner>,
    pub harness: HarnessConfig,
    /// Required when the forest is enabled; also seeds nothing else.
    pub seed: Option<u64>,
    pub schema_profile: String,
    pub compare: CompareConfig,
    pub out_dir: PathBuf,
}

impl RunConfig {
    pub fn new(data_dir: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            data_dir: data_dir.into(),
            projects: Vec::new(),
            learners: Learner::standard_set(),
            harness: HarnessConfig::default(),
            seed: Some(0),
            schema_profile: "kamei".into(),
            compare: CompareConfig::default(),
            out_dir: out_dir.into(),
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.learners.is_empty() {
            return Err(Error::Config("learner set is empty".into()));
        }
        let f = self.harness.effort_fraction;
        if !(f > 0.0 && f <= 1.0) {
            return Err(Error::Config(format!(
                "effort fraction must be in (0, 1], got {f}"
            )));
        }
        let forest = self.learners.iter().any(|l| {
            matches!(
                l,
                Learner::Classifier(crate::supervised::ClassifierKind::Forest)
            )
        });
        if forest && self.seed.is_none() {
            return Err(Error::Config(
                "a seed is required when FOREST is enabled".into(),
            ));
        }
        if let Baseline::Learner(b) = self.compare.baseline {
            if !self.learners.contains(&b) {
                return Err(Error::Config(format!(
                    "baseline {b} is not in the learner set"
                )));
            }
        }
        Ok(())
    }

    fn harness_config(&self) -> HarnessConfig {
        let mut h = self.harness;
        if let Some(seed) = self.seed {
            h.classifier.seed = seed;
        }
        h
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MedianRow {
    pub project: String,
    pub learner: Learner,
    pub measure: Measure,
    pub median: Option<f64>,
    pub windows: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuartileRow {
    pub project: String,
    pub learner: Learner,
    pub measure: Measure,
    /// min, q1, median, q3, max
    pub summary: Option<[f64; 5]>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerdictRow {
    pub project: String,
    pub measure: Measure,
    pub learner: String,
    pub baseline: String,
    pub p_value: f64,
    pub p_adjusted: f64,
    pub delta: f64,
    pub magnitude: Magnitude,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub results: Vec<ExperimentResult>,
    pub medians: Vec<MedianRow>,
    pub quartiles: Vec<QuartileRow>,
    pub verdicts: Vec<VerdictRow>,
}

impl Report {
    pub fn median(&self, project: &str, learner: Learner, measure: Measure) -> Option<f64> {
        self.medians
            .iter()
            .find(|r| r.project == project && r.learner == learner && r.measure == measure)
            .and_then(|r| r.median)
    }

    pub fn verdicts_for<'a>(
        &'a self,
        project: &'a str,
        measure: Measure,
    ) -> impl Iterator<Item = &'a VerdictRow> + 'a {
        self.verdicts
            .iter()
            .filter(move |v| v.project == project && v.measure == measure)
    }
}

/// Linear-interpolation quantile (R type 7) of sorted data.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    assert!(!sorted.is_empty());
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    Some(if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    })
}

/// Non-skipped scores of one learner on one project, keyed by window.
struct Series {
    project: String,
    learner: Learner,
    windows: BTreeMap<usize, EvalScores>,
    skipped: usize,
}

/// Groups results by (project, learner), projects and learners in first-seen order.
fn series(results: &[ExperimentResult]) -> Vec<Series> {
    let mut out: Vec<Series> = Vec::new();
    for r in results {
        let i = match out
            .iter()
            .position(|s| s.project == r.project && s.learner == r.learner)
        {
            Some(i) => i,
            None => {
                out.push(Series {
                    project: r.project.clone(),
                    learner: r.learner,
                    windows: BTreeMap::new(),
                    skipped: 0,
                });
                out.len() - 1
            }
        };
        match r.scores {
            Some(scores) => {
                out[i].windows.insert(r.window, scores);
            }
            None => out[i].skipped += 1,
        }
    }
    let mut projects: Vec<&str> = Vec::new();
    for s in &out {
        if !projects.contains(&s.project.as_str()) {
            projects.push(&s.project);
        }
    }
    let rank: Vec<usize> = out
        .iter()
        .map(|s| projects.iter().position(|p| *p == s.project).unwrap_or(0))
        .collect();
    let mut indexed: Vec<(usize, Series)> = rank.into_iter().zip(out).collect();
    indexed.sort_by_key(|(r, _)| *r);
    indexed.into_iter().map(|(_, s)| s).collect()
}

/// Builds medians, quartiles and verdicts from per-window results.
pub fn summarize(results: Vec<ExperimentResult>, compare: &CompareConfig) -> Report {
    let series = series(&results);
    let mut medians = Vec::new();
    let mut quartiles = Vec::new();
    for Series {
        project,
        learner,
        windows,
        skipped,
    } in &series
    {
        for measure in Measure::ALL {
            let mut values: Vec<f64> = windows.values().map(|s| s.get(measure)).collect();
            medians.push(MedianRow {
                project: project.clone(),
                learner: *learner,
                measure,
                median: median(&values),
                windows: values.len(),
                skipped: *skipped,
            });
            values.sort_by(f64::total_cmp);
            let summary = (!values.is_empty()).then(|| {
                [
                    values[0],
                    quantile(&values, 0.25),
                    quantile(&values, 0.5),
                    quantile(&values, 0.75),
                    values[values.len() - 1],
                ]
            });
            quartiles.push(QuartileRow {
                project: project.clone(),
                learner: *learner,
                measure,
                summary,
                n: values.len(),
            });
        }
    }

    let mut verdicts = Vec::new();
    let mut projects: Vec<&String> = Vec::new();
    for s in &series {
        if !projects.contains(&&s.project) {
            projects.push(&s.project);
        }
    }
    for project in projects {
        let learners: Vec<(&Learner, &BTreeMap<usize, EvalScores>)> = series
            .iter()
            .filter(|s| &s.project == project)
            .map(|s| (&s.learner, &s.windows))
            .collect();
        for measure in Measure::ALL {
            let median_of = |w: &BTreeMap<usize, EvalScores>| {
                median(&w.values().map(|s| s.get(measure)).collect::<Vec<_>>())
            };
            let base = match compare.baseline {
                Baseline::Learner(b) => learners.iter().find(|(l, _)| **l == b).copied(),
                Baseline::BestSupervised => learners
                    .iter()
                    .filter(|(l, w)| l.is_supervised() && !w.is_empty())
                    .fold(
                        None,
                        |best: Option<(&Learner, &BTreeMap<_, _>)>, cand| match best {
                            Some(b) if median_of(b.1) >= median_of(cand.1) => Some(b),
                            _ => Some(*cand),
                        },
                    ),
            };
            let Some((base_learner, base_windows)) = base else {
                continue;
            };
            let pairs: Vec<(String, Vec<f64>, Vec<f64>)> = learners
                .iter()
                .filter(|(l, _)| *l != base_learner)
                .map(|(l, w)| {
                    let (a, b): (Vec<f64>, Vec<f64>) = w
                        .iter()
                        .filter_map(|(win, s)| {
                            base_windows
                                .get(win)
                                .map(|bs| (s.get(measure), bs.get(measure)))
                        })
                        .unzip();
                    (l.name(), a, b)
                })
                .collect();
            let family: Vec<Paired<'_>> = pairs
                .iter()
                .map(|(name, a, b)| Paired {
                    learner: name,
                    learner_scores: a,
                    baseline_scores: b,
                })
                .collect();
            for v in compare_family(&base_learner.name(), &family, compare.tests) {
                verdicts.push(VerdictRow {
                    project: project.clone(),
                    measure,
                    learner: v.learner,
                    baseline: v.baseline,
                    p_value: v.p_value,
                    p_adjusted: v.p_adjusted,
                    delta: v.delta,
                    magnitude: v.magnitude,
                    color: v.color,
                });
            }
        }
    }

    readjust(&mut verdicts, compare.scope);

    Report {
        results,
        medians,
        quartiles,
        verdicts,
    }
}

/// Re-applies BH over a wider family than one (project, measure) group.
fn readjust(verdicts: &mut [VerdictRow], scope: FamilyScope) {
    let key = |v: &VerdictRow| match scope {
        FamilyScope::ProjectMeasure => None,
        FamilyScope::Project => Some(v.project.clone()),
        FamilyScope::Run => Some(String::new()),
    };
    let mut families: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, v) in verdicts.iter().enumerate() {
        if let Some(k) = key(v) {
            families.entry(k).or_default().push(i);
        }
    }
    for members in families.values() {
        let raw: Vec<f64> = members.iter().map(|&i| verdicts[i].p_value).collect();
        for (&i, p_adj) in members.iter().zip(bh_adjust(&raw)) {
            let v = &mut verdicts[i];
            v.p_adjusted = p_adj;
            v.color = color(p_adj, v.delta);
        }
    }
}

/// Finds the CSV for each requested project (case-insensitive stem match),
/// or every CSV in the directory when none are named.
pub fn resolve_dataset_paths(data_dir: &Path, projects: &[String]) -> Result<Vec<PathBuf>> {
    let mut csvs: Vec<PathBuf> = fs::read_dir(data_dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")))
        .collect();
    csvs.sort();
    if projects.is_empty() {
        if csvs.is_empty() {
            return Err(Error::MissingDataset {
                project: "*".into(),
                dir: data_dir.to_path_buf(),
            });
        }
        return Ok(csvs);
    }
    projects
        .iter()
        .map(|p| {
            csvs.iter()
                .find(|c| {
                    c.file_stem()
                        .is_some_and(|s| s.to_string_lossy().eq_ignore_ascii_case(p))
                })
                .cloned()
                .ok_or_else(|| Error::MissingDataset {
                    project: p.clone(),
                    dir: data_dir.to_path_buf(),
                })
        })
        .collect()
}

pub fn load_datasets(config: &RunConfig) -> Result<Vec<Dataset>> {
    let profile = SchemaProfile::resolve(&config.schema_profile)?;
    resolve_dataset_paths(&config.data_dir, &config.projects)?
        .iter()
        .map(|p| load_csv(p, &profile))
        .collect()
}

/// Loads the configured datasets, runs them, and writes all four reports.
pub fn run(config: &RunConfig) -> Result<Report> {
    config.check()?;
    let datasets = load_datasets(config)?;
    run_datasets(&datasets, config)
}

/// Like [`run`] for already-loaded datasets.
pub fn run_datasets(datasets: &[Dataset], config: &RunConfig) -> Result<Report> {
    config.check()?;
    let report = evaluate_datasets(datasets, config)?;
    write_report(&report, &config.out_dir)?;
    Ok(report)
}

/// Runs every project and summarizes, without touching the filesystem.
pub fn evaluate_datasets(datasets: &[Dataset], config: &RunConfig) -> Result<Report> {
    config.check()?;
    let harness = config.harness_config();
    let per_project: Vec<Result<Vec<ExperimentResult>>> = harness.execution.map(datasets, |ds| {
        run_experiment(ds, &config.learners, &harness)
    });
    let mut results = Vec::new();
    for r in per_project {
        results.extend(r?);
    }
    Ok(summarize(results, &config.compare))
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn results_csv(results: &[ExperimentResult]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "project",
        "learner",
        "window",
        "recall",
        "precision",
        "f1",
        "popt",
        "skipped",
        "reason",
    ])?;
    for r in results {
        let s = r.scores;
        let reason = match (&r.skip_reason, r.degenerate) {
            (Some(reason), _) => reason.clone(),
            (None, Some(d)) => format!("degenerate: {d}"),
            (None, None) => String::new(),
        };
        w.write_record([
            r.project.clone(),
            r.learner.name(),
            r.window.to_string(),
            fmt_opt(s.map(|s| s.recall)),
            fmt_opt(s.map(|s| s.precision)),
            fmt_opt(s.map(|s| s.f1)),
            fmt_opt(s.map(|s| s.popt)),
            r.is_skipped().to_string(),
            reason,
        ])?;
    }
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

fn medians_csv(rows: &[MedianRow]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "project", "learner", "measure", "median", "windows", "skipped",
    ])?;
    for r in rows {
        w.write_record([
            r.project.clone(),
            r.learner.name(),
            r.measure.name().to_string(),
            fmt_opt(r.median),
            r.windows.to_string(),
            r.skipped.to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

fn quartiles_csv(rows: &[QuartileRow]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "project", "learner", "measure", "min", "q1", "median", "q3", "max", "n",
    ])?;
    for r in rows {
        let mut rec = vec![
            r.project.clone(),
            r.learner.name(),
            r.measure.name().to_string(),
        ];
        for i in 0..5 {
            rec.push(fmt_opt(r.summary.map(|s| s[i])));
        }
        rec.push(r.n.to_string());
        w.write_record(&rec)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

fn verdicts_csv(rows: &[VerdictRow]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "project", "measure", "learner", "baseline", "p", "p_bh", "delta", "band", "color",
    ])?;
    for v in rows {
        w.write_record([
            v.project.clone(),
            v.measure.name().to_string(),
            v.learner.clone(),
            v.baseline.clone(),
            v.p_value.to_string(),
            v.p_adjusted.to_string(),
            v.delta.to_string(),
            v.magnitude.name().to_string(),
            v.color.name().to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

/// Writes the four report files, then checks the median table against the
/// results file. On any failure the files written so far are removed.
pub fn write_report(report: &Report, out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)?;
    let mut written: Vec<PathBuf> = Vec::new();
    let outcome = (|| -> Result<()> {
        let files: [(&str, Vec<u8>); 4] = [
            (RESULTS_FILE, results_csv(&report.results)?),
            (MEDIANS_FILE, medians_csv(&report.medians)?),
            (VERDICTS_FILE, verdicts_csv(&report.verdicts)?),
            (QUARTILES_FILE, quartiles_csv(&report.quartiles)?),
        ];
        for (name, bytes) in files {
            let path = out_dir.join(name);
            fs::write(&path, bytes)?;
            written.push(path);
        }
        check_consistency(out_dir)
    })();
    match outcome {
        Ok(()) => Ok(written),
        Err(e) => {
            for p in &written {
                let _ = fs::remove_file(p);
            }
            Err(e)
        }
    }
}

/// Recomputes every median in `medians.csv` from `results.csv`.
pub fn check_consistency(out_dir: &Path) -> Result<()> {
    let mut per_key: BTreeMap<(String, String, String), Vec<f64>> = BTreeMap::new();
    let mut rdr = csv::Reader::from_path(out_dir.join(RESULTS_FILE))?;
    for row in rdr.records() {
        let row = row?;
        if &row[7] == "true" {
            continue;
        }
        for (measure, col) in [("recall", 3), ("precision", 4), ("f1", 5), ("popt", 6)] {
            let v: f64 = row[col]
                .parse()
                .map_err(|_| Error::Consistency(format!("bad {measure} value `{}`", &row[col])))?;
            per_key
                .entry((row[0].to_string(), row[1].to_string(), measure.to_string()))
                .or_default()
                .push(v);
        }
    }
    let mut rdr = csv::Reader::from_path(out_dir.join(MEDIANS_FILE))?;
    for row in rdr.records() {
        let row = row?;
        let key = (row[0].to_string(), row[1].to_string(), row[2].to_string());
        let expected = per_key.get(&key).and_then(|v| median(v));
        let stated = if row[3].is_empty() {
            None
        } else {
            Some(
                row[3]
                    .parse::<f64>()
                    .map_err(|_| Error::Consistency(format!("bad median `{}`", &row[3])))?,
            )
        };
        if expected != stated {
            return Err(Error::Consistency(format!(
                "median for {key:?} is {stated:?} but results give {expected:?}"
            )));
        }
    }
    Ok(())
}

/// Published statistics of the six reference corpora.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnownCorpus {
    pub name: &'static str,
    /// Lowercase substring a file stem must contain.
    pub key: &'static str,
    pub period: &'static str,
    pub changes: usize,
    pub defect_percent: u32,
    pub avg_loc: f64,
    pub files_per_change: f64,
}

pub const KNOWN_CORPORA: [KnownCorpus; 6] = [
    KnownCorpus {
        name: "Bugzilla",
        key: "bugzilla",
        period: "08/1998 - 12/2006",
        changes: 4620,
        defect_percent: 36,
        avg_loc: 37.5,
        files_per_change: 2.3,
    },
    KnownCorpus {
        name: "Platform",
        key: "platform",
        period: "05/2001 - 12/2007",
        changes: 64250,
        defect_percent: 14,
        avg_loc: 72.2,
        files_per_change: 4.3,
    },
    KnownCorpus {
        name: "Mozilla",
        key: "mozilla",
        period: "01/2000 - 12/2006",
        changes: 98275,
        defect_percent: 5,
        avg_loc: 106.5,
        files_per_change: 5.3,
    },
    KnownCorpus {
        name: "JDT",
        key: "jdt",
        period: "05/2001 - 12/2007",
        changes: 35386,
        defect_percent: 14,
        avg_loc: 71.4,
        files_per_change: 4.3,
    },
    KnownCorpus {
        name: "Columba",
        key: "columba",
        period: "11/2002 - 07/2006",
        changes: 4455,
        defect_percent: 31,
        avg_loc: 149.4,
        files_per_change: 6.2,
    },
    KnownCorpus {
        name: "PostgreSQL",
        key: "postgres",
        period: "07/1996 - 05/2010",
        changes: 20431,
        defect_percent: 25,
        avg_loc: 101.3,
        files_per_change: 4.5,
    },
];

pub fn known_corpus(project: &str) -> Option<&'static KnownCorpus> {
    let p = project.to_ascii_lowercase();
    KNOWN_CORPORA.iter().find(|k| p.contains(k.key))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FileReport {
    pub path: PathBuf,
    pub project: String,
    pub outcome: std::result::Result<DatasetStats, String>,
    pub expected: Option<&'static KnownCorpus>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DatasetStats {
    pub rows: usize,
    pub defect_rate: f64,
    pub avg_effort: f64,
    pub buckets: usize,
    pub windows: usize,
}

impl FileReport {
    /// `None` when there is nothing to compare against.
    pub fn matches_expected(&self) -> Option<bool> {
        let (Ok(stats), Some(k)) = (&self.outcome, self.expected) else {
            return None;
        };
        let pct = (stats.defect_rate * 100.0).round() as u32;
        Some(stats.rows == k.changes && pct == k.defect_percent)
    }
}

pub fn dataset_stats(ds: &Dataset, mode: WindowMode) -> DatasetStats {
    let buckets = buckets_for(ds, mode).len();
    DatasetStats {
        rows: ds.len(),
        defect_rate: ds.defect_ratio(),
        avg_effort: ds.total_effort() / ds.len() as f64,
        buckets,
        windows: buckets.saturating_sub(5),
    }
}

/// Schema and size report for every CSV in a directory. Never fails on a bad
/// file; the error is reported in place.
pub fn validate_dir(
    data_dir: &Path,
    profile: &SchemaProfile,
    mode: WindowMode,
) -> Result<Vec<FileReport>> {
    let paths = match resolve_dataset_paths(data_dir, &[]) {
        Ok(p) => p,
        Err(Error::MissingDataset { .. }) => Vec::new(),
        Err(e) => return Err(e),
    };
    let reports = Execution::Parallel.map(&paths, |path| {
        let project = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let outcome = load_csv(path, profile)
            .map(|ds| dataset_stats(&ds, mode))
            .map_err(|e| e.to_string());
        FileReport {
            path: path.clone(),
            expected: known_corpus(&project),
            project,
            outcome,
        }
    });
    Ok(reports)
}

pub fn render_validation(reports: &[FileReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<16} {:>8} {:>8} {:>9} {:>8} {:>8}  expected",
        "project", "rows", "defect%", "avg-churn", "months", "windows"
    );
    for r in reports {
        match &r.outcome {
            Ok(s) => {
                let expected = match (r.expected, r.matches_expected()) {
                    (Some(k), Some(ok)) => format!(
                        "{} rows, {}% ({}): {}",
                        k.changes,
                        k.defect_percent,
                        k.period,
                        if ok { "OK" } else { "MISMATCH" }
                    ),
                    _ => "-".to_string(),
                };
                let _ = writeln!(
                    out,
                    "{:<16} {:>8} {:>7.1}% {:>9.1} {:>8} {:>8}  {}",
                    r.project,
                    s.rows,
                    s.defect_rate * 100.0,
                    s.avg_effort,
                    s.buckets,
                    s.windows,
                    expected
                );
            }
            Err(e) => {
                let _ = writeln!(out, "{:<16} error: {e}", r.project);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantiles() {
        let v = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile(&v, 0.5), 2.5);
        assert_eq!(quantile(&v, 0.25), 1.75);
        assert_eq!(quantile(&v, 0.0), 1.0);
        assert_eq!(quantile(&v, 1.0), 4.0);
        assert_eq!(median(&[3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(&[]), None);
    }

    #[test]
    fn known_corpus_lookup() {
        assert_eq!(known_corpus("bugzilla").unwrap().changes, 4620);
        assert_eq!(known_corpus("Columba").unwrap().defect_percent, 31);
        assert_eq!(known_corpus("postgresql").unwrap().changes, 20431);
        assert_eq!(known_corpus("postgres").unwrap().name, "PostgreSQL");
        assert!(known_corpus("linux").is_none());
    }

    #[test]
    fn baseline_parsing() {
        assert_eq!(
            "best-supervised".parse::<Baseline>().unwrap(),
            Baseline::BestSupervised
        );
        assert_eq!(
            "EALR".parse::<Baseline>().unwrap(),
            Baseline::Learner(Learner::Ealr)
        );
    }

    #[test]
    fn config_checks() {
        let mut c = RunConfig::new("d", "o");
        assert!(c.check().is_ok());
        c.seed = None;
        assert!(c.check().is_err());
        c.learners = vec![Learner::Ealr];
        assert!(c.check().is_ok());
        c.learners.clear();
        assert!(c.check().is_err());
        let mut c = RunConfig::new("d", "o");
        c.harness.effort_fraction = 0.0;
        assert!(c.check().is_err());
        let mut c = RunConfig::new("d", "o");
        c.learners = vec![Learner::OneWay];
        c.compare.baseline = Baseline::Learner(Learner::Ealr);
        assert!(c.check().is_err());
    }
}
