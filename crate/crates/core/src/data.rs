//! Change records, CSV ingestion and month bucketing.
//!
//! Records arrive pre-extracted (one row per commit with the fourteen change
//! metrics, a commit date and a defect label). Column names are resolved
//! through a [`SchemaProfile`], so corpora with different header spellings
//! only need a different profile.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use chrono::{DateTime, Datelike, NaiveDate};
use serde::Deserialize;

use crate::error::{Error, Result};

/// The fourteen change metrics, in canonical column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MetricId {
    Ns,
    Nd,
    Nf,
    Entropy,
    La,
    Ld,
    Lt,
    Fix,
    Ndev,
    Age,
    Nuc,
    Exp,
    Rexp,
    Sexp,
}

pub const METRIC_COUNT: usize = 14;

impl MetricId {
    pub const ALL: [MetricId; METRIC_COUNT] = [
        MetricId::Ns,
        MetricId::Nd,
        MetricId::Nf,
        MetricId::Entropy,
        MetricId::La,
        MetricId::Ld,
        MetricId::Lt,
        MetricId::Fix,
        MetricId::Ndev,
        MetricId::Age,
        MetricId::Nuc,
        MetricId::Exp,
        MetricId::Rexp,
        MetricId::Sexp,
    ];

    /// Metrics usable as single-metric rankers: everything except LA and LD.
    pub const RANKABLE: [MetricId; 12] = [
        MetricId::Ns,
        MetricId::Nd,
        MetricId::Nf,
        MetricId::Entropy,
        MetricId::Lt,
        MetricId::Fix,
        MetricId::Ndev,
        MetricId::Age,
        MetricId::Nuc,
        MetricId::Exp,
        MetricId::Rexp,
        MetricId::Sexp,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_rankable(self) -> bool {
        !matches!(self, MetricId::La | MetricId::Ld)
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricId::Ns => "NS",
            MetricId::Nd => "ND",
            MetricId::Nf => "NF",
            MetricId::Entropy => "ENTROPY",
            MetricId::La => "LA",
            MetricId::Ld => "LD",
            MetricId::Lt => "LT",
            MetricId::Fix => "FIX",
            MetricId::Ndev => "NDEV",
            MetricId::Age => "AGE",
            MetricId::Nuc => "NUC",
            MetricId::Exp => "EXP",
            MetricId::Rexp => "REXP",
            MetricId::Sexp => "SEXP",
        }
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        MetricId::ALL
            .into_iter()
            .find(|m| m.name() == upper)
            .ok_or_else(|| format!("unknown metric `{s}`"))
    }
}

/// One commit.
#[derive(Debug, Clone, PartialEq)]
pub struct ChangeRecord {
    pub date: NaiveDate,
    pub metrics: [f64; METRIC_COUNT],
    pub defective: bool,
}

impl ChangeRecord {
    #[inline]
    pub fn metric(&self, m: MetricId) -> f64 {
        self.metrics[m.index()]
    }

    /// Inspection effort: lines added plus lines deleted.
    #[inline]
    pub fn effort(&self) -> f64 {
        self.metric(MetricId::La) + self.metric(MetricId::Ld)
    }

    pub fn month(&self) -> MonthKey {
        MonthKey::of(self.date)
    }

    /// Checks the record-level invariants enforced at load time.
    pub fn validate(&self) -> Result<(), String> {
        for m in MetricId::ALL {
            let v = self.metric(m);
            if !v.is_finite() {
                return Err(format!("{m} is not finite ({v})"));
            }
            if v < 0.0 {
                return Err(format!("{m} is negative ({v})"));
            }
        }
        let fix = self.metric(MetricId::Fix);
        if fix != 0.0 && fix != 1.0 {
            return Err(format!("FIX must be 0 or 1, got {fix}"));
        }
        Ok(())
    }
}

/// Free function form of [`ChangeRecord::effort`].
#[inline]
pub fn effort(record: &ChangeRecord) -> f64 {
    record.effort()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub project: String,
    /// Sorted ascending by date.
    pub records: Vec<ChangeRecord>,
}

impl Dataset {
    /// Builds a dataset, stably sorting records by date.
    pub fn new(project: impl Into<String>, mut records: Vec<ChangeRecord>) -> Result<Self> {
        let project = project.into();
        if records.is_empty() {
            return Err(Error::EmptyDataset(project));
        }
        records.sort_by_key(|r| r.date);
        Ok(Dataset { project, records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn defect_ratio(&self) -> f64 {
        let defects = self.records.iter().filter(|r| r.defective).count();
        defects as f64 / self.records.len() as f64
    }

    pub fn total_effort(&self) -> f64 {
        self.records.iter().map(ChangeRecord::effort).sum()
    }
}

/// Calendar month (UTC).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonthKey {
    pub year: i32,
    pub month: u32,
}

impl MonthKey {
    pub fn of(date: NaiveDate) -> Self {
        MonthKey {
            year: date.year(),
            month: date.month(),
        }
    }

    pub fn next(self) -> Self {
        if self.month == 12 {
            MonthKey {
                year: self.year + 1,
                month: 1,
            }
        } else {
            MonthKey {
                year: self.year,
                month: self.month + 1,
            }
        }
    }

    pub fn first_day(self) -> NaiveDate {
        NaiveDate::from_ymd_opt(self.year, self.month, 1).expect("valid month key")
    }
}

impl fmt::Display for MonthKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

/// Records of one month, in dataset order.
#[derive(Debug, Clone, PartialEq)]
pub struct MonthBucket {
    pub key: MonthKey,
    pub records: Vec<ChangeRecord>,
}

/// Groups a date-sorted dataset into the months that contain at least one change.
pub fn group_by_month(ds: &Dataset) -> Vec<MonthBucket> {
    let mut buckets: Vec<MonthBucket> = Vec::new();
    for r in &ds.records {
        let key = r.month();
        match buckets.last_mut() {
            Some(b) if b.key == key => b.records.push(r.clone()),
            _ => buckets.push(MonthBucket {
                key,
                records: vec![r.clone()],
            }),
        }
    }
    buckets
}

/// Like [`group_by_month`] but emits every calendar month between the first
/// and last change, including empty ones.
pub fn group_by_calendar_month(ds: &Dataset) -> Vec<MonthBucket> {
    let populated = group_by_month(ds);
    let (Some(first), Some(last)) = (populated.first(), populated.last()) else {
        return populated;
    };
    let end = last.key;
    let mut key = first.key;
    let mut filled = Vec::new();
    let mut iter = populated.into_iter().peekable();
    loop {
        match iter.peek() {
            Some(b) if b.key == key => filled.push(iter.next().unwrap()),
            _ => filled.push(MonthBucket {
                key,
                records: Vec::new(),
            }),
        }
        if key == end {
            break;
        }
        key = key.next();
    }
    filled
}

/// Logical column a CSV header can map to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Column {
    Timestamp,
    Label,
    Metric(MetricId),
}

impl Column {
    fn name(self) -> String {
        match self {
            Column::Timestamp => "COMMITDATE".to_string(),
            Column::Label => "BUG".to_string(),
            Column::Metric(m) => m.name().to_string(),
        }
    }
}

/// Header synonym table. Keys are `timestamp`, `label` or a metric name;
/// values are the accepted (case-insensitive) header spellings.
#[derive(Debug, Clone, Deserialize)]
pub struct SchemaProfile {
    pub name: String,
    pub columns: BTreeMap<String, Vec<String>>,
}

impl SchemaProfile {
    /// Headers used by the Kamei change-metric corpora and their common variants.
    pub fn kamei() -> Self {
        let mut columns = BTreeMap::new();
        let mut add = |k: &str, v: &[&str]| {
            columns.insert(k.to_string(), v.iter().map(|s| s.to_string()).collect());
        };
        add(
            "timestamp",
            &[
                "commitdate",
                "commit_date",
                "author_date",
                "date",
                "timestamp",
            ],
        );
        add(
            "label",
            &["bug", "contains_bug", "buggy", "defective", "label"],
        );
        add("NS", &["ns"]);
        add("ND", &["nd"]);
        add("NF", &["nf"]);
        add("ENTROPY", &["entropy", "entrophy"]);
        add("LA", &["la"]);
        add("LD", &["ld"]);
        add("LT", &["lt"]);
        add("FIX", &["fix"]);
        add("NDEV", &["ndev"]);
        add("AGE", &["age"]);
        add("NUC", &["nuc"]);
        add("EXP", &["exp"]);
        add("REXP", &["rexp"]);
        add("SEXP", &["sexp"]);
        SchemaProfile {
            name: "kamei".into(),
            columns,
        }
    }

    /// Resolves a built-in profile name, or reads a TOML profile from a path.
    pub fn resolve(name_or_path: &str) -> Result<Self> {
        if name_or_path.eq_ignore_ascii_case("kamei") {
            return Ok(Self::kamei());
        }
        let path = Path::new(name_or_path);
        if path.is_file() {
            let text = std::fs::read_to_string(path)?;
            let profile: SchemaProfile = toml::from_str(&text).map_err(|e| {
                Error::Config(format!("bad schema profile {}: {e}", path.display()))
            })?;
            profile.check()?;
            return Ok(profile);
        }
        Err(Error::UnknownProfile(name_or_path.to_string()))
    }

    fn check(&self) -> Result<()> {
        for key in self.columns.keys() {
            parse_column_key(key).ok_or_else(|| {
                Error::Config(format!("profile {}: unknown column key `{key}`", self.name))
            })?;
        }
        Ok(())
    }

    fn lookup(&self, header: &str) -> Option<Column> {
        let h = header.trim().to_ascii_lowercase();
        self.columns.iter().find_map(|(key, names)| {
            names
                .iter()
                .any(|n| n.to_ascii_lowercase() == h)
                .then(|| parse_column_key(key))
                .flatten()
        })
    }
}

fn parse_column_key(key: &str) -> Option<Column> {
    match key.to_ascii_lowercase().as_str() {
        "timestamp" => Some(Column::Timestamp),
        "label" => Some(Column::Label),
        _ => key.parse::<MetricId>().ok().map(Column::Metric),
    }
}

fn all_columns() -> impl Iterator<Item = Column> {
    [Column::Timestamp]
        .into_iter()
        .chain(MetricId::ALL.into_iter().map(Column::Metric))
        .chain([Column::Label])
}

/// Loads a change-metric CSV. The project name is the file stem.
pub fn load_csv(path: impl AsRef<Path>, profile: &SchemaProfile) -> Result<Dataset> {
    let path = path.as_ref();
    let project = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)?;
    let headers = reader.headers()?.clone();
    if headers.is_empty() || headers.iter().all(str::is_empty) {
        return Err(Error::EmptyDataset(project));
    }

    let mut positions: Vec<(Column, usize)> = Vec::new();
    for (i, h) in headers.iter().enumerate() {
        if let Some(col) = profile.lookup(h) {
            if !positions.iter().any(|(c, _)| *c == col) {
                positions.push((col, i));
            }
        }
    }
    let position = |col: Column| -> Result<usize> {
        positions
            .iter()
            .find(|(c, _)| *c == col)
            .map(|(_, i)| *i)
            .ok_or_else(|| Error::MissingColumn {
                column: col.name(),
                path: path.to_path_buf(),
            })
    };
    let ts_col = position(Column::Timestamp)?;
    let label_col = position(Column::Label)?;
    let mut metric_cols = [0usize; METRIC_COUNT];
    for m in MetricId::ALL {
        metric_cols[m.index()] = position(Column::Metric(m))?;
    }

    let mut rows = Vec::new();
    for row in reader.records() {
        let row = row?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        rows.push((line, row));
    }
    if rows.is_empty() {
        return Err(Error::EmptyDataset(project));
    }

    let row_err = |line: u64, message: String| Error::Row {
        path: path.to_path_buf(),
        line,
        message,
    };
    let epoch = rows
        .iter()
        .all(|(_, r)| r.get(ts_col).is_some_and(|c| c.parse::<f64>().is_ok()));

    let mut records = Vec::with_capacity(rows.len());
    for (line, row) in &rows {
        let cell = |i: usize| row.get(i).unwrap_or("");
        let raw_ts = cell(ts_col);
        let date = if epoch {
            parse_epoch(raw_ts)
        } else {
            parse_date(raw_ts)
        }
        .ok_or_else(|| row_err(*line, format!("unparsable timestamp `{raw_ts}`")))?;

        let mut metrics = [0.0; METRIC_COUNT];
        for m in MetricId::ALL {
            let raw = cell(metric_cols[m.index()]);
            metrics[m.index()] = parse_number(raw)
                .ok_or_else(|| row_err(*line, format!("unparsable {m} value `{raw}`")))?;
        }
        let raw_label = cell(label_col);
        let defective = parse_bool(raw_label)
            .ok_or_else(|| row_err(*line, format!("unparsable label `{raw_label}`")))?;

        let record = ChangeRecord {
            date,
            metrics,
            defective,
        };
        record.validate().map_err(|m| row_err(*line, m))?;
        records.push(record);
    }
    Dataset::new(project, records)
}

/// Writes the dataset in canonical column order with ISO dates.
pub fn write_csv<W: Write>(ds: &Dataset, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let header: Vec<String> = all_columns()
        .map(|c| match c {
            Column::Timestamp => "commitdate".to_string(),
            Column::Label => "bug".to_string(),
            Column::Metric(m) => m.name().to_ascii_lowercase(),
        })
        .collect();
    w.write_record(&header)?;
    for r in &ds.records {
        let mut row = Vec::with_capacity(METRIC_COUNT + 2);
        row.push(r.date.format("%Y-%m-%d").to_string());
        row.extend(r.metrics.iter().map(|v| v.to_string()));
        row.push(if r.defective { "1" } else { "0" }.to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv_file(ds: &Dataset, path: impl AsRef<Path>) -> Result<PathBuf> {
    let path = path.as_ref().to_path_buf();
    let file = std::fs::File::create(&path)?;
    write_csv(ds, std::io::BufWriter::new(file))?;
    Ok(path)
}

fn parse_number(raw: &str) -> Option<f64> {
    match raw.to_ascii_lowercase().as_str() {
        "true" => Some(1.0),
        "false" => Some(0.0),
        s => s.parse::<f64>().ok(),
    }
}

fn parse_bool(raw: &str) -> Option<bool> {
    match raw.to_ascii_lowercase().as_str() {
        "1" | "1.0" | "true" | "t" | "yes" => Some(true),
        "0" | "0.0" | "false" | "f" | "no" => Some(false),
        _ => None,
    }
}

fn parse_epoch(raw: &str) -> Option<NaiveDate> {
    let secs = raw.parse::<f64>().ok()?;
    if !secs.is_finite() {
        return None;
    }
    DateTime::from_timestamp(secs.floor() as i64, 0).map(|dt| dt.date_naive())
}

fn parse_date(raw: &str) -> Option<NaiveDate> {
    if let Ok(dt) = DateTime::parse_from_rfc3339(raw) {
        return Some(dt.naive_utc().date());
    }
    let date_part = raw.split([' ', 'T']).next()?;
    ["%Y-%m-%d", "%Y/%m/%d", "%m/%d/%Y", "%Y%m%d"]
        .iter()
        .find_map(|fmt| NaiveDate::parse_from_str(date_part, fmt).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "commitdate,ns,nd,nf,entrophy,la,ld,lt,fix,ndev,age,nuc,exp,rexp,sexp,bug";

    fn write_tmp(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    pub(crate) fn rec(date: &str, defective: bool) -> ChangeRecord {
        ChangeRecord {
            date: NaiveDate::parse_from_str(date, "%Y-%m-%d").unwrap(),
            metrics: [1.0; METRIC_COUNT],
            defective,
        }
    }

    #[test]
    fn metric_sets() {
        assert_eq!(MetricId::ALL.len(), 14);
        assert_eq!(MetricId::RANKABLE.len(), 12);
        assert!(!MetricId::RANKABLE.contains(&MetricId::La));
        assert!(!MetricId::RANKABLE.contains(&MetricId::Ld));
        for (i, m) in MetricId::ALL.iter().enumerate() {
            assert_eq!(m.index(), i);
            assert_eq!(m.name().parse::<MetricId>().unwrap(), *m);
        }
    }

    #[test]
    fn loads_kamei_header_with_synonyms() {
        let f = write_tmp(&format!(
            "{HEADER}\n\
             1999-03-02,1,1,2,0.5,10,5,100,0,2,3.5,4,10,2.5,3,1\n\
             1999-01-05,1,1,1,0,3,0,50,1,1,0,1,5,1,1,0\n\
             1999-01-20,2,2,3,1.2,0,0,10,0,3,1,2,7,3,2,true\n"
        ));
        let ds = load_csv(f.path(), &SchemaProfile::kamei()).unwrap();
        assert_eq!(ds.len(), 3);
        let dates: Vec<_> = ds.records.iter().map(|r| r.date.to_string()).collect();
        assert_eq!(dates, ["1999-01-05", "1999-01-20", "1999-03-02"]);
        assert!(ds.records[1].defective);
        assert_eq!(ds.records[2].metric(MetricId::Entropy), 0.5);
        assert_eq!(ds.records[2].effort(), 15.0);
    }

    #[test]
    fn contains_bug_and_epoch_timestamps() {
        let f = write_tmp(
            "author_date,ns,nd,nf,entropy,la,ld,lt,fix,ndev,age,nuc,exp,rexp,sexp,contains_bug,extra\n\
             915494400,1,1,1,0,1,1,1,False,1,1,1,1,1,1,True,x\n",
        );
        let ds = load_csv(f.path(), &SchemaProfile::kamei()).unwrap();
        assert_eq!(ds.records[0].date.to_string(), "1999-01-05");
        assert!(ds.records[0].defective);
        assert_eq!(ds.records[0].metric(MetricId::Fix), 0.0);
    }

    #[test]
    fn missing_column_is_named() {
        let f = write_tmp(
            "commitdate,ns,nd,nf,entrophy,la,ld,fix,ndev,age,nuc,exp,rexp,sexp,bug\n\
             1999-01-05,1,1,1,0,1,1,0,1,1,1,1,1,1,0\n",
        );
        let err = load_csv(f.path(), &SchemaProfile::kamei()).unwrap_err();
        match err {
            Error::MissingColumn { column, .. } => assert_eq!(column, "LT"),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn bad_cell_reports_line() {
        let f = write_tmp(&format!(
            "{HEADER}\n1999-01-05,1,1,1,0,1,1,1,0,1,1,1,1,1,1,0\n1999-01-06,1,1,1,0,abc,1,1,0,1,1,1,1,1,1,0\n"
        ));
        match load_csv(f.path(), &SchemaProfile::kamei()).unwrap_err() {
            Error::Row { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("LA"), "{message}");
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn negative_and_missing_cells_rejected() {
        let f = write_tmp(&format!(
            "{HEADER}\n1999-01-05,1,1,1,0,-1,1,1,0,1,1,1,1,1,1,0\n"
        ));
        assert!(matches!(
            load_csv(f.path(), &SchemaProfile::kamei()),
            Err(Error::Row { line: 2, .. })
        ));
        let f = write_tmp(&format!(
            "{HEADER}\n1999-01-05,1,1,1,0,,1,1,0,1,1,1,1,1,1,0\n"
        ));
        assert!(matches!(
            load_csv(f.path(), &SchemaProfile::kamei()),
            Err(Error::Row { .. })
        ));
    }

    #[test]
    fn empty_file_is_empty_dataset() {
        let f = write_tmp("");
        assert!(matches!(
            load_csv(f.path(), &SchemaProfile::kamei()),
            Err(Error::EmptyDataset(_))
        ));
        let f = write_tmp(&format!("{HEADER}\n"));
        assert!(matches!(
            load_csv(f.path(), &SchemaProfile::kamei()),
            Err(Error::EmptyDataset(_))
        ));
    }

    #[test]
    fn effort_definition() {
        let mut r = rec("2000-01-01", false);
        r.metrics[MetricId::La.index()] = 10.0;
        r.metrics[MetricId::Ld.index()] = 5.0;
        assert_eq!(effort(&r), 15.0);
        r.metrics[MetricId::La.index()] = 0.0;
        r.metrics[MetricId::Ld.index()] = 0.0;
        assert_eq!(effort(&r), 0.0);
    }

    #[test]
    fn month_grouping() {
        let ds = Dataset::new(
            "p",
            vec![
                rec("1999-01-05", false),
                rec("1999-01-20", true),
                rec("1999-03-02", false),
            ],
        )
        .unwrap();
        let buckets = group_by_month(&ds);
        assert_eq!(buckets.len(), 2);
        assert_eq!(buckets[0].records.len(), 2);
        assert_eq!(buckets[1].records.len(), 1);
        assert_eq!(buckets[1].key.to_string(), "1999-03");

        let cal = group_by_calendar_month(&ds);
        assert_eq!(cal.len(), 3);
        assert!(cal[1].records.is_empty());
        assert_eq!(cal[1].key.to_string(), "1999-02");

        let single = Dataset::new("p", vec![rec("2001-12-31", true)]).unwrap();
        assert_eq!(group_by_month(&single).len(), 1);
    }

    #[test]
    fn calendar_fill_crosses_year() {
        let ds = Dataset::new(
            "p",
            vec![rec("1999-11-05", false), rec("2000-02-01", false)],
        )
        .unwrap();
        let keys: Vec<_> = group_by_calendar_month(&ds)
            .iter()
            .map(|b| b.key.to_string())
            .collect();
        assert_eq!(keys, ["1999-11", "1999-12", "2000-01", "2000-02"]);
    }

    #[test]
    fn toml_profile() {
        let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
        let mut toml =
            String::from("name = \"custom\"\n[columns]\ntimestamp = [\"when\"]\nlabel = [\"y\"]\n");
        for m in MetricId::ALL {
            toml.push_str(&format!(
                "{} = [\"m_{}\"]\n",
                m.name(),
                m.name().to_lowercase()
            ));
        }
        f.write_all(toml.as_bytes()).unwrap();
        let profile = SchemaProfile::resolve(f.path().to_str().unwrap()).unwrap();
        assert_eq!(profile.name, "custom");

        let mut header = vec!["when".to_string()];
        header.extend(
            MetricId::ALL
                .iter()
                .map(|m| format!("m_{}", m.name().to_lowercase())),
        );
        header.push("y".into());
        let data = write_tmp(&format!(
            "{}\n2004/05/06,{}1\n",
            header.join(","),
            "1,".repeat(14)
        ));
        let ds = load_csv(data.path(), &profile).unwrap();
        assert_eq!(ds.records[0].date.to_string(), "2004-05-06");
        assert!(matches!(
            SchemaProfile::resolve("nope"),
            Err(Error::UnknownProfile(_))
        ));
    }
}
