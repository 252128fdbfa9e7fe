use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use emograd_core::labeling::{label_record, LabelSource, ScoreRecord};
use emograd_core::metrics::{evaluate_with, EvalOptions, EvalRecord, EvalReport, DEFAULT_SEARCH_BUDGET};
use emograd_core::pipeline::{
    cap_few_shot, case_study, import_mrpc, import_paws, import_quora, import_tsv, make_prefix, parse_prefix_as,
    read_labeled, read_pairs, reconstruct, side_labels, split, DatasetStats, IntensityOrder, LabeledPair,
    OrientOptions, PrefixStyle, RejectReason, Rejected, Source, CASE_STUDY_FRACTION, DEFAULT_CAP_TEST,
    DEFAULT_CAP_TRAIN, DEFAULT_TRAIN_FRACTION,
};
use emograd_core::taxonomy::TaxonomyDocument;
use emograd_core::vader::median_by_emotion;
use emograd_core::{
    jsonl, Emotion, GraphOptions, IntensityTable, PolarityScores, SentimentLexicon, TransitionGraph, DEFAULT_THRESHOLD,
};
use serde::{Deserialize, Serialize};

mod output;

use output::Outputs;

const SCHEMAS: &str = "\
JSONL schemas (one JSON object per line, blank lines ignored):

  pairs       {\"id\": str, \"input_text\": str, \"target_text\": str,
               \"source\": \"paws\"|\"mrpc\"|\"quora\"|\"other\" (optional)}
  scores      {\"id\": str, \"text\": str, \"scores\": {\"anger\": 0.93, ...}}
              Confidences in [0, 1]; absent emotions count as 0.
              For pair labelling the id is `<pair id>:input` or `<pair id>:target`.
  labels      {\"id\": str, \"text\": str, \"label\": emotion|null,
               \"top_score\": float, \"threshold\": float}
              Accepted anywhere a scores file is.
  labeled     a pairs record plus {\"input_emotion\", \"target_emotion\",
               \"input_range\", \"target_range\"}. Ranges are optional on input
              and must agree with the emotions.
  case-study  a labeled record plus {\"original_target_emotion\",
               \"reselected\": bool, \"kept_original\": bool}
  eval        {\"id\", \"prediction\", \"reference\", \"target_emotion\",
               \"prediction_scores\": {...} (optional),
               \"prediction_emotion\": emotion (optional, wins over scores)}
  vader       {\"id\": str (optional), \"text\": str, \"emotion\": emotion (optional)}

TSV (prefixed model input): `<from> to <to>: <input text><TAB><target text>`
  Emotion heads use lowercase labels (`anger to annoyance: `), range heads use
  high_neg, low_neg, neutral, low_pos, high_pos. Tabs and line breaks inside a
  field are replaced by spaces.

Exit codes: 0 success, 1 data error, 2 configuration error.";

#[derive(Parser)]
#[command(name = "emograd", version, about = "Emotion-transition paraphrase toolkit", after_long_help = SCHEMAS)]
struct Cli {
    /// Seed for every seeded step.
    #[arg(long, global = true, env = "EMOGRAD_SEED", default_value_t = 42)]
    seed: u64,

    /// Log more (repeat for debug output).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Turn classifier scores into dominant-emotion labels.
    Label(LabelArgs),
    /// Join labels onto pairs, filter transitions and orient them towards lower intensity.
    Reconstruct(ReconstructArgs),
    /// Seeded train/test split of a labeled file.
    Split(SplitArgs),
    /// Keep the first N pairs of every transition type.
    Cap(CapArgs),
    /// Render labeled pairs as prefixed model input.
    Prefix(PrefixArgs),
    /// Draw a lowering target for one emotion.
    SelectTarget(SelectTargetArgs),
    /// Re-target a seeded share of a labeled file.
    CaseStudy(CaseStudyArgs),
    /// Score predictions against references.
    Evaluate(EvaluateArgs),
    /// Reconstruction counts without writing any file.
    Stats(StatsArgs),
    /// Rule-based sentiment scores.
    Vader(VaderArgs),
    /// Dump the taxonomy and transition graph as JSON.
    ExportTaxonomy(ExportTaxonomyArgs),
    /// Convert raw corpora into a pairs file.
    Import(ImportArgs),
    /// Check a file against one of the schemas.
    Validate(ValidateArgs),
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
struct LabelArgs {
    /// Scores JSONL.
    #[arg(long)]
    scores: PathBuf,
    /// Labels JSONL to write.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = DEFAULT_THRESHOLD, value_parser = parse_threshold)]
    threshold: f64,
}

#[derive(Args, Clone)]
struct OrientArgs {
    /// Dominance threshold for score records.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD, value_parser = parse_threshold)]
    threshold: f64,
    #[arg(long, value_enum, default_value_t = OrderArg::Tier)]
    intensity_order: OrderArg,
    /// Keep only pairs that are transition-graph edges.
    #[arg(long)]
    graph_valid_only: bool,
    /// Build the graph with cross-cluster lowering edges.
    #[arg(long)]
    cross_cluster: bool,
}

impl OrientArgs {
    fn options(&self) -> OrientOptions {
        OrientOptions {
            order: self.intensity_order.into(),
            graph_valid_only: self.graph_valid_only,
            cross_cluster: self.cross_cluster,
        }
    }
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
struct ReconstructArgs {
    /// Pairs JSONL.
    #[arg(long = "in")]
    input: PathBuf,
    /// Scores or labels JSONL keyed `<pair id>:input` / `<pair id>:target`.
    #[arg(long)]
    labels: PathBuf,
    /// Oriented labeled JSONL to write.
    #[arg(long)]
    out: PathBuf,
    /// Rejected pair ids with reasons.
    #[arg(long)]
    rejected: Option<PathBuf>,
    #[command(flatten)]
    orient: OrientArgs,
    /// Also split, cap and prefix, writing every stage into this directory.
    #[arg(long, value_name = "DIR")]
    full: Option<PathBuf>,
    #[command(flatten)]
    downstream: DownstreamArgs,
}

#[derive(Args, Clone)]
struct DownstreamArgs {
    /// Train share for `--full`.
    #[arg(long, default_value_t = DEFAULT_TRAIN_FRACTION, value_parser = parse_open_fraction)]
    fraction: f64,
    #[arg(long, default_value_t = DEFAULT_CAP_TRAIN)]
    cap_train: usize,
    #[arg(long, default_value_t = DEFAULT_CAP_TEST)]
    cap_test: usize,
    #[arg(long, value_enum, default_value_t = StyleArg::FineGrained)]
    style: StyleArg,
}

#[derive(Args)]
struct SplitArgs {
    /// Labeled JSONL.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TRAIN_FRACTION, value_parser = parse_open_fraction)]
    fraction: f64,
    #[arg(long)]
    train_out: PathBuf,
    #[arg(long)]
    test_out: PathBuf,
}

#[derive(Args)]
struct CapArgs {
    /// Labeled train JSONL.
    #[arg(long)]
    train: PathBuf,
    /// Labeled test JSONL.
    #[arg(long)]
    test: PathBuf,
    #[arg(long, default_value_t = DEFAULT_CAP_TRAIN)]
    cap_train: usize,
    #[arg(long, default_value_t = DEFAULT_CAP_TEST)]
    cap_test: usize,
    #[arg(long)]
    train_out: PathBuf,
    #[arg(long)]
    test_out: PathBuf,
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
struct PrefixArgs {
    /// Labeled JSONL.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = StyleArg::FineGrained)]
    style: StyleArg,
    #[arg(long, value_enum, default_value_t = PrefixFormat::Tsv)]
    format: PrefixFormat,
}

#[derive(Args)]
struct SelectTargetArgs {
    #[arg(long, value_parser = parse_emotion)]
    emotion: Emotion,
    /// Returned instead of a neutral draw.
    #[arg(long, value_parser = parse_emotion)]
    fallback: Option<Emotion>,
    #[arg(long)]
    cross_cluster: bool,
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
struct CaseStudyArgs {
    /// Labeled JSONL.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Share of records to re-target.
    #[arg(long, default_value_t = CASE_STUDY_FRACTION, value_parser = parse_share)]
    fraction: f64,
    #[arg(long)]
    cross_cluster: bool,
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
struct EvaluateArgs {
    /// Eval JSONL.
    #[arg(long)]
    pred: PathBuf,
    /// JSON report to write.
    #[arg(long)]
    out: PathBuf,
    /// Plain-text table to write; it is always printed.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_THRESHOLD, value_parser = parse_threshold)]
    threshold: f64,
    /// ROUGE-L recall weight.
    #[arg(long, default_value_t = 1.0, value_parser = parse_positive)]
    rouge_beta: f64,
    /// Node budget of the exact METEOR alignment search.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    meteor_budget: usize,
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
struct StatsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    labels: PathBuf,
    #[command(flatten)]
    orient: OrientArgs,
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
#[group(id = "source", required = true, multiple = false)]
struct VaderArgs {
    #[arg(long, group = "source")]
    text: Option<String>,
    /// VADER-input JSONL.
    #[arg(long = "input", group = "source")]
    input: Option<PathBuf>,
    /// Output JSONL; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print per-emotion median compound scores of `--input` instead.
    #[arg(long, requires = "input")]
    medians: bool,
    /// `token<TAB>valence` lexicon replacing the built-in one.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// JSON sidecar with negations, boosters and idioms.
    #[arg(long, requires = "lexicon")]
    rules: Option<PathBuf>,
}

#[derive(Args)]
struct ExportTaxonomyArgs {
    /// Standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    cross_cluster: bool,
}

#[derive(Args)]
struct ImportArgs {
    #[arg(long, value_enum)]
    format: ImportFormat,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Source tag for `tsv` rows without a fourth column.
    #[arg(long, value_enum, default_value_t = SourceArg::Other)]
    source: SourceArg,
}

#[derive(Args)]
#[command(after_long_help = SCHEMAS)]
struct ValidateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long = "in")]
    input: PathBuf,
    /// For `scores`: every one of the 28 emotions must be present.
    #[arg(long)]
    require_all_emotions: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Tier,
    Median,
}

impl From<OrderArg> for IntensityOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Tier => IntensityOrder::Tier,
            OrderArg::Median => IntensityOrder::Median,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    FineGrained,
    SentimentRange,
}

impl From<StyleArg> for PrefixStyle {
    fn from(s: StyleArg) -> Self {
        match s {
            StyleArg::FineGrained => PrefixStyle::FineGrained,
            StyleArg::SentimentRange => PrefixStyle::SentimentRange,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PrefixFormat {
    Tsv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ImportFormat {
    Tsv,
    Paws,
    Mrpc,
    Quora,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Paws,
    Mrpc,
    Quora,
    Other,
}

impl From<SourceArg> for Source {
    fn from(s: SourceArg) -> Self {
        match s {
            SourceArg::Paws => Source::Paws,
            SourceArg::Mrpc => Source::Mrpc,
            SourceArg::Quora => Source::Quora,
            SourceArg::Other => Source::Other,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pairs,
    Scores,
    Labels,
    Labeled,
    Eval,
    Tsv,
}

fn parse_threshold(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("must be in [0, 1], got {v}"))
    }
}

fn parse_open_fraction(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(format!("must be strictly between 0 and 1, got {v}"))
    }
}

fn parse_share(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(format!("must be in (0, 1], got {v}"))
    }
}

fn parse_positive(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be a positive number, got {v}"))
    }
}

fn parse_emotion(s: &str) -> std::result::Result<Emotion, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).parse_env("EMOGRAD_LOG").init();

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let seed = cli.seed;
    match cli.command {
        Command::Label(a) => label(a),
        Command::Reconstruct(a) => reconstruct_cmd(a, seed),
        Command::Split(a) => split_cmd(a, seed),
        Command::Cap(a) => cap_cmd(a),
        Command::Prefix(a) => prefix_cmd(a),
        Command::SelectTarget(a) => select_target(a, seed),
        Command::CaseStudy(a) => case_study_cmd(a, seed),
        Command::Evaluate(a) => evaluate_cmd(a, seed),
        Command::Stats(a) => stats_cmd(a, seed),
        Command::Vader(a) => vader(a),
        Command::ExportTaxonomy(a) => export_taxonomy(a),
        Command::Import(a) => import(a),
        Command::Validate(a) => validate(a),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(BufReader::new(file))
}

fn read_jsonl<T: serde::de::DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    jsonl::read(open(path)?).with_context(|| path.display().to_string())
}

fn read_labeled_file(path: &Path) -> Result<Vec<LabeledPair>> {
    read_labeled(open(path)?).with_context(|| path.display().to_string())
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn label(a: LabelArgs) -> Result<()> {
    let records: Vec<ScoreRecord> = read_jsonl(&a.scores)?;
    let labels = records.iter().map(|r| label_record(r, a.threshold)).collect::<Result<Vec<_>, _>>()?;
    let labeled = labels.iter().filter(|l| l.label.is_some()).count();
    log::info!("{labeled} of {} records labelled at threshold {}", labels.len(), a.threshold);
    let mut out = Outputs::new();
    out.jsonl(&a.out, &labels)?;
    out.commit()
}

#[derive(Serialize)]
struct RunConfig {
    threshold: f64,
    intensity_order: IntensityOrder,
    graph_valid_only: bool,
    cross_cluster: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    downstream: Option<DownstreamConfig>,
}

#[derive(Serialize)]
struct DownstreamConfig {
    fraction: f64,
    cap_train: usize,
    cap_test: usize,
    style: PrefixStyle,
}

#[derive(Serialize)]
struct RejectCounts {
    unlabeled: usize,
    missing_scores: usize,
}

#[derive(Serialize)]
struct StatsReport {
    seed: u64,
    config: RunConfig,
    stats: DatasetStats,
    rejected: RejectCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    split: Option<SplitCounts>,
}

#[derive(Serialize)]
struct SplitCounts {
    train: usize,
    test: usize,
    train_capped: usize,
    test_capped: usize,
}

fn reject_counts(rejected: &[Rejected]) -> RejectCounts {
    let count = |r| rejected.iter().filter(|x| x.reason == r).count();
    RejectCounts { unlabeled: count(RejectReason::Unlabeled), missing_scores: count(RejectReason::MissingScores) }
}

fn run_config(orient: &OrientArgs, downstream: Option<&DownstreamArgs>) -> RunConfig {
    let options = orient.options();
    RunConfig {
        threshold: orient.threshold,
        intensity_order: options.order,
        graph_valid_only: options.graph_valid_only,
        cross_cluster: options.cross_cluster,
        downstream: downstream.map(|d| DownstreamConfig {
            fraction: d.fraction,
            cap_train: d.cap_train,
            cap_test: d.cap_test,
            style: d.style.into(),
        }),
    }
}

fn load_reconstruction(
    input: &Path,
    labels: &Path,
    orient: &OrientArgs,
) -> Result<emograd_core::pipeline::Reconstruction> {
    let pairs = read_pairs(open(input)?).with_context(|| input.display().to_string())?;
    let sources: Vec<LabelSource> = read_jsonl(labels)?;
    let side = side_labels(&sources, orient.threshold).with_context(|| labels.display().to_string())?;
    Ok(reconstruct(&pairs, &side, &orient.options()))
}

fn tsv_lines(pairs: &[LabeledPair], style: PrefixStyle) -> impl Iterator<Item = String> + '_ {
    pairs.iter().map(move |p| make_prefix(p, style).to_tsv())
}

fn reconstruct_cmd(a: ReconstructArgs, seed: u64) -> Result<()> {
    let r = load_reconstruction(&a.input, &a.labels, &a.orient)?;
    let mut out = Outputs::new();
    out.jsonl(&a.out, &r.oriented)?;
    if let Some(path) = &a.rejected {
        out.jsonl(path, &r.rejected)?;
    }

    let mut report = StatsReport {
        seed,
        config: run_config(&a.orient, a.full.as_ref().map(|_| &a.downstream)),
        stats: r.stats,
        rejected: reject_counts(&r.rejected),
        split: None,
    };
    if let Some(dir) = &a.full {
        let d = &a.downstream;
        let (train, test) = split(&r.oriented, d.fraction, seed)?;
        let (train_capped, test_capped) = cap_few_shot(&train, &test, d.cap_train, d.cap_test);
        let style = d.style.into();
        out.jsonl(dir.join("oriented.jsonl"), &r.oriented)?;
        out.jsonl(dir.join("train.jsonl"), &train)?;
        out.jsonl(dir.join("test.jsonl"), &test)?;
        out.jsonl(dir.join("train.capped.jsonl"), &train_capped)?;
        out.jsonl(dir.join("test.capped.jsonl"), &test_capped)?;
        out.lines(dir.join("train.tsv"), tsv_lines(&train_capped, style));
        out.lines(dir.join("test.tsv"), tsv_lines(&test_capped, style));
        report.split = Some(SplitCounts {
            train: train.len(),
            test: test.len(),
            train_capped: train_capped.len(),
            test_capped: test_capped.len(),
        });
        out.json(dir.join("stats.json"), &report)?;
    }
    out.commit()?;
    print_json(&report)
}

fn stats_cmd(a: StatsArgs, seed: u64) -> Result<()> {
    let r = load_reconstruction(&a.input, &a.labels, &a.orient)?;
    print_json(&StatsReport {
        seed,
        config: run_config(&a.orient, None),
        stats: r.stats,
        rejected: reject_counts(&r.rejected),
        split: None,
    })
}

fn split_cmd(a: SplitArgs, seed: u64) -> Result<()> {
    let pairs = read_labeled_file(&a.input)?;
    let (train, test) = split(&pairs, a.fraction, seed)?;
    let mut out = Outputs::new();
    out.jsonl(&a.train_out, &train)?;
    out.jsonl(&a.test_out, &test)?;
    out.commit()?;
    print_json(&serde_json::json!({
        "seed": seed,
        "fraction": a.fraction,
        "train": train.len(),
        "test": test.len(),
    }))
}

fn cap_cmd(a: CapArgs) -> Result<()> {
    let train = read_labeled_file(&a.train)?;
    let test = read_labeled_file(&a.test)?;
    let (train_capped, test_capped) = cap_few_shot(&train, &test, a.cap_train, a.cap_test);
    let mut out = Outputs::new();
    out.jsonl(&a.train_out, &train_capped)?;
    out.jsonl(&a.test_out, &test_capped)?;
    out.commit()?;
    print_json(&serde_json::json!({
        "cap_train": a.cap_train,
        "cap_test": a.cap_test,
        "train": train_capped.len(),
        "test": test_capped.len(),
    }))
}

#[derive(Serialize)]
struct PrefixRecord<'a> {
    id: &'a str,
    source: String,
    target: &'a str,
}

fn prefix_cmd(a: PrefixArgs) -> Result<()> {
    let pairs = read_labeled_file(&a.input)?;
    let style = a.style.into();
    let mut out = Outputs::new();
    match a.format {
        PrefixFormat::Tsv => out.lines(&a.out, tsv_lines(&pairs, style)),
        PrefixFormat::Jsonl => {
            let records: Vec<_> = pairs
                .iter()
                .map(|p| PrefixRecord {
                    id: p.id(),
                    source: make_prefix(p, style).source(),
                    target: &p.pair.target_text,
                })
                .collect();
            out.jsonl(&a.out, &records)?;
        }
    }
    out.commit()
}

fn graph(cross_cluster: bool) -> TransitionGraph {
    TransitionGraph::build_with(GraphOptions { cross_cluster })
}

fn select_target(a: SelectTargetArgs, seed: u64) -> Result<()> {
    let g = graph(a.cross_cluster);
    print_json(&serde_json::json!({
        "seed": seed,
        "emotion": a.emotion,
        "candidates": g.lowering_targets(a.emotion),
        "drawn": g.draw_target(a.emotion, seed),
        "target": g.select_target(a.emotion, seed, a.fallback),
    }))
}

fn case_study_cmd(a: CaseStudyArgs, seed: u64) -> Result<()> {
    let pairs = read_labeled_file(&a.input)?;
    let records = case_study(&pairs, &graph(a.cross_cluster), a.fraction, seed)?;
    let mut out = Outputs::new();
    out.jsonl(&a.out, &records)?;
    out.commit()?;
    print_json(&serde_json::json!({
        "seed": seed,
        "fraction": a.fraction,
        "cross_cluster": a.cross_cluster,
        "n": records.len(),
        "reselected": records.iter().filter(|r| r.reselected).count(),
        "kept_original": records.iter().filter(|r| r.kept_original).count(),
    }))
}

#[derive(Serialize)]
struct EvalOutput<'a> {
    seed: u64,
    options: EvalOptions,
    #[serde(flatten)]
    report: &'a EvalReport,
}

fn evaluate_cmd(a: EvaluateArgs, seed: u64) -> Result<()> {
    let records: Vec<EvalRecord> = read_jsonl(&a.pred)?;
    let options = EvalOptions { threshold: a.threshold, rouge_beta: a.rouge_beta, meteor_budget: a.meteor_budget };
    let report = evaluate_with(&records, &IntensityTable::reference(), &options)?;
    let table = report.to_table();
    let mut out = Outputs::new();
    out.json(&a.out, &EvalOutput { seed, options, report: &report })?;
    if let Some(path) = &a.table {
        out.bytes(path, table.clone().into_bytes());
    }
    out.commit()?;
    print!("{table}");
    Ok(())
}

#[derive(Deserialize)]
struct VaderInput {
    #[serde(default)]
    id: Option<String>,
    text: String,
    #[serde(default)]
    emotion: Option<Emotion>,
}

#[derive(Serialize)]
struct VaderOutput<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<&'a str>,
    text: &'a str,
    #[serde(flatten)]
    scores: PolarityScores,
}

fn vader(a: VaderArgs) -> Result<()> {
    let owned;
    let lexicon = match &a.lexicon {
        Some(path) => {
            owned = SentimentLexicon::load(path, a.rules.as_deref())?;
            &owned
        }
        None => SentimentLexicon::builtin(),
    };
    let inputs = match (&a.text, &a.input) {
        (Some(text), _) => vec![VaderInput { id: None, text: text.clone(), emotion: None }],
        (None, Some(path)) => read_jsonl(path)?,
        (None, None) => unreachable!("clap requires one source"),
    };

    let body = if a.medians {
        let corpus: Vec<(&str, Emotion)> =
            inputs.iter().filter_map(|r| r.emotion.map(|e| (r.text.as_str(), e))).collect();
        let mut text = serde_json::to_string_pretty(&median_by_emotion(lexicon, corpus))?;
        text.push('\n');
        text
    } else {
        let rows: Vec<_> = inputs
            .iter()
            .map(|r| VaderOutput { id: r.id.as_deref(), text: &r.text, scores: lexicon.score(&r.text) })
            .collect();
        jsonl::to_string(&rows)?
    };
    match &a.out {
        Some(path) => {
            let mut out = Outputs::new();
            out.bytes(path, body.into_bytes());
            out.commit()
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn export_taxonomy(a: ExportTaxonomyArgs) -> Result<()> {
    let doc = TaxonomyDocument::new(&graph(a.cross_cluster));
    match &a.out {
        Some(path) => {
            let mut out = Outputs::new();
            out.json(path, &doc)?;
            out.commit()
        }
        None => print_json(&doc),
    }
}

fn import(a: ImportArgs) -> Result<()> {
    let reader = open(&a.input)?;
    let pairs = match a.format {
        ImportFormat::Tsv => import_tsv(reader, a.source.into()),
        ImportFormat::Paws => import_paws(reader),
        ImportFormat::Mrpc => import_mrpc(reader),
        ImportFormat::Quora => import_quora(reader),
    }
    .with_context(|| a.input.display().to_string())?;
    let mut out = Outputs::new();
    out.jsonl(&a.out, &pairs)?;
    out.commit()?;
    print_json(&serde_json::json!({ "pairs": pairs.len() }))
}

fn validate(a: ValidateArgs) -> Result<()> {
    let n = match a.kind {
        Kind::Pairs => read_pairs(open(&a.input)?)?.len(),
        Kind::Labeled => read_labeled_file(&a.input)?.len(),
        Kind::Scores => validate_scores(&a.input, a.require_all_emotions)?,
        Kind::Labels => read_jsonl::<emograd_core::labeling::LabelRecord>(&a.input)?.len(),
        Kind::Eval => read_jsonl::<EvalRecord>(&a.input)?.len(),
        Kind::Tsv => validate_tsv(open(&a.input)?)?,
    };
    print_json(&serde_json::json!({ "valid": true, "records": n }))
}

fn validate_scores(path: &Path, require_all: bool) -> Result<usize> {
    let raw: Vec<serde_json::Value> = read_jsonl(path)?;
    for (i, value) in raw.iter().enumerate() {
        let line = i + 1;
        let record: ScoreRecord =
            serde_json::from_value(value.clone()).with_context(|| format!("{}: record {line}", path.display()))?;
        if require_all {
            let keys = value["scores"].as_object().map_or(0, |m| m.len());
            if keys != Emotion::COUNT {
                anyhow::bail!(
                    "{}: record {line} (`{}`) has {keys} emotions, expected {}",
                    path.display(),
                    record.id,
                    Emotion::COUNT
                );
            }
        }
    }
    Ok(raw.len())
}

fn validate_tsv<R: BufRead>(reader: R) -> Result<usize> {
    let mut n = 0;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [source, _target] = fields[..] else {
            anyhow::bail!("line {}: expected 2 tab-separated fields, got {}", i + 1, fields.len());
        };
        let parsed = parse_prefix_as(source, PrefixStyle::FineGrained)
            .or_else(|_| parse_prefix_as(source, PrefixStyle::SentimentRange))
            .with_context(|| format!("line {}", i + 1))?;
        log::debug!("line {}: {}", i + 1, parsed.transition);
        n += 1;
    }
    Ok(n)
}
