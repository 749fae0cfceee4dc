//! Command-line driver for the segmentation toolkit: builds corpus
//! statistics, segments documents, renders outlines, runs the
//! sliding-window baseline, and scores boundary sets.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use strata_core::{
    analyze, cluster, content_terms, evaluate, export_dendrogram_json, find_boundaries,
    outline_depths, parse_boundary_file, render_outline, split_paragraphs, stem_gsig_map,
    BoundaryConfig, BoundarySet, GsigMap, IdfTable, OutlineFormat, OutlineView, Paragraph,
    Stoplist, TextStats, Threshold, TileConfig,
};
use walkdir::WalkDir;

#[derive(Parser)]
#[command(
    name = "strata",
    version,
    about = "Discourse segmentation via order-preserving clustering of paragraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a document-frequency table from corpus files.
    BuildIdf {
        /// Corpus files or directories (walked recursively, sorted).
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Write the table here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Segment a document; prints boundary gap indices.
    Segment {
        file: PathBuf,
        /// Document-frequency table from `build-idf`.
        #[arg(long)]
        idf: PathBuf,
        /// Segment-size threshold shared by both boundary rules.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Depth-difference threshold as a fraction of tree depth.
        #[arg(long = "m-frac", default_value_t = 0.2)]
        m_frac: f64,
        /// Stoplist file, one word per line (default: bundled list).
        #[arg(long)]
        stoplist: Option<PathBuf>,
        /// Input is pre-tagged `word_TAG` tokens; filter by tag.
        #[arg(long)]
        pretagged: bool,
        /// Also write the merge tree as JSON.
        #[arg(long = "json-tree")]
        json_tree: Option<PathBuf>,
        /// Write boundaries here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render a document outline from its merge tree.
    Outline {
        file: PathBuf,
        /// Document-frequency table from `build-idf`.
        #[arg(long)]
        idf: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        /// Write the outline here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sliding-window cohesion baseline; prints boundary gap indices.
    Tile {
        file: PathBuf,
        /// Document-frequency table from `build-idf`.
        #[arg(long)]
        idf: PathBuf,
        /// Content tokens per window (even).
        #[arg(long, default_value_t = 120)]
        window: usize,
        /// Token stride between windows.
        #[arg(long, default_value_t = 20)]
        step: usize,
        /// Absolute cohesion threshold; default is the curve mean
        /// minus one standard deviation.
        #[arg(long, allow_negative_numbers = true)]
        threshold: Option<f64>,
        /// Write the cohesion curve as CSV.
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Write boundaries here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Score hypothesis boundaries against gold annotations.
    Eval {
        /// Hypothesis boundary file.
        #[arg(long)]
        hyp: PathBuf,
        /// Gold boundary file.
        #[arg(long)]
        gold: PathBuf,
        /// Emit raw fractions as JSON instead of a report.
        #[arg(long)]
        json: bool,
        /// Write the report here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
    Csv,
}

impl From<Format> for OutlineFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Ascii => OutlineFormat::Ascii,
            Format::Svg => OutlineFormat::Svg,
            Format::Csv => OutlineFormat::Csv,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("strata: {e}");
            ExitCode::from(2)
        }
    }
}

type AppResult<T> = Result<T, Box<dyn std::error::Error>>;

/// Prefixes an error with the path it came from.
fn ctx<E: std::fmt::Display>(path: &Path) -> impl Fn(E) -> Box<dyn std::error::Error> + '_ {
    move |e| format!("{}: {e}", path.display()).into()
}

fn read_file(path: &Path) -> AppResult<String> {
    std::fs::read_to_string(path).map_err(ctx(path))
}

fn write_file(path: &Path, content: &str) -> AppResult<()> {
    std::fs::write(path, content).map_err(ctx(path))
}

fn emit(output: Option<&Path>, content: &str) -> AppResult<()> {
    match output {
        Some(path) => write_file(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_idf(path: &Path) -> AppResult<IdfTable> {
    IdfTable::from_tsv(&read_file(path)?).map_err(ctx(path))
}

/// `--stoplist` wins, then the `STRATA_STOPLIST` env var, then the
/// bundled English list.
fn load_stoplist(flag: Option<&Path>) -> AppResult<Stoplist> {
    let path = flag
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os("STRATA_STOPLIST").map(PathBuf::from));
    match path {
        Some(p) => Stoplist::parse(&read_file(&p)?).map_err(ctx(&p)),
        None => Ok(Stoplist::english()),
    }
}

fn paragraph_texts(path: &Path) -> AppResult<Vec<String>> {
    split_paragraphs(&read_file(path)?).map_err(ctx(path))
}

fn analyze_file(
    file: &Path,
    idf: &Path,
    stoplist: Option<&Path>,
    pretagged: bool,
) -> AppResult<(Vec<Paragraph>, GsigMap)> {
    let table = load_idf(idf)?;
    let stop = load_stoplist(stoplist)?;
    let texts = paragraph_texts(file)?;
    let (paragraphs, stems) = analyze(&texts, &table, &stop, pretagged).map_err(ctx(file))?;
    Ok((paragraphs, stem_gsig_map(&stems)))
}

/// Boundary gaps as one whitespace-separated line, or nothing at all
/// when the set is empty.
fn boundary_line(boundaries: &BoundarySet) -> String {
    let gaps: Vec<String> = boundaries.gaps().map(|g| g.to_string()).collect();
    if gaps.is_empty() {
        String::new()
    } else {
        let mut line = gaps.join(" ");
        line.push('\n');
        line
    }
}

fn run(command: Command) -> AppResult<()> {
    match command {
        Command::BuildIdf { inputs, output } => build_idf(&inputs, output.as_deref()),
        Command::Segment {
            file,
            idf,
            n,
            m_frac,
            stoplist,
            pretagged,
            json_tree,
            output,
        } => segment(
            &file,
            &idf,
            n,
            m_frac,
            stoplist.as_deref(),
            pretagged,
            json_tree.as_deref(),
            output.as_deref(),
        ),
        Command::Outline {
            file,
            idf,
            format,
            output,
        } => outline(&file, &idf, format, output.as_deref()),
        Command::Tile {
            file,
            idf,
            window,
            step,
            threshold,
            curve,
            output,
        } => tile(
            &file,
            &idf,
            window,
            step,
            threshold,
            curve.as_deref(),
            output.as_deref(),
        ),
        Command::Eval {
            hyp,
            gold,
            json,
            output,
        } => eval(&hyp, &gold, json, output.as_deref()),
    }
}

fn build_idf(inputs: &[PathBuf], output: Option<&Path>) -> AppResult<()> {
    let mut files: Vec<PathBuf> = Vec::new();
    for input in inputs {
        let meta = std::fs::metadata(input).map_err(ctx(input))?;
        if meta.is_dir() {
            for entry in WalkDir::new(input).sort_by_file_name() {
                let entry = entry.map_err(ctx(input))?;
                if entry.file_type().is_file() {
                    files.push(entry.into_path());
                }
            }
        } else {
            files.push(input.clone());
        }
    }
    let mut documents = Vec::with_capacity(files.len());
    for file in &files {
        documents.push(read_file(file)?);
    }
    let table = IdfTable::build(documents.iter().map(String::as_str))
        .map_err(|e| Box::<dyn std::error::Error>::from(e.to_string()))?;
    emit(output, &table.to_tsv())
}

#[allow(clippy::too_many_arguments)]
fn segment(
    file: &Path,
    idf: &Path,
    n: usize,
    m_frac: f64,
    stoplist: Option<&Path>,
    pretagged: bool,
    json_tree: Option<&Path>,
    output: Option<&Path>,
) -> AppResult<()> {
    let (paragraphs, gsig) = analyze_file(file, idf, stoplist, pretagged)?;
    let stats = TextStats::from_paragraphs(&paragraphs);
    let tree = cluster(&paragraphs, &stats, &gsig).map_err(ctx(file))?;
    let boundaries = find_boundaries(
        &tree,
        &BoundaryConfig {
            n,
            m_fraction: m_frac,
        },
    );
    if let Some(path) = json_tree {
        let mut json = export_dendrogram_json(&tree);
        json.push('\n');
        write_file(path, &json)?;
    }
    emit(output, &boundary_line(&boundaries))
}

fn outline(file: &Path, idf: &Path, format: Format, output: Option<&Path>) -> AppResult<()> {
    let (paragraphs, gsig) = analyze_file(file, idf, None, false)?;
    let stats = TextStats::from_paragraphs(&paragraphs);
    let tree = cluster(&paragraphs, &stats, &gsig).map_err(ctx(file))?;
    let boundaries = find_boundaries(&tree, &BoundaryConfig::default());
    let sentences: Vec<usize> = paragraphs.iter().map(|p| p.sentence_count).collect();
    let view = OutlineView::new(outline_depths(&tree), boundaries, &sentences);
    emit(output, &render_outline(&view, format.into()))
}

fn tile(
    file: &Path,
    idf: &Path,
    window: usize,
    step: usize,
    threshold: Option<f64>,
    curve: Option<&Path>,
    output: Option<&Path>,
) -> AppResult<()> {
    // the table is unused by the raw-count cohesion math but required
    // by the interface, so a missing or malformed one still fails fast
    load_idf(idf)?;
    let stop = load_stoplist(None)?;
    let texts = paragraph_texts(file)?;
    let mut paragraph_stems = Vec::with_capacity(texts.len());
    for (i, text) in texts.iter().enumerate() {
        let terms = content_terms(text, &stop, false)
            .map_err(|e| ctx(file)(format!("paragraph {}: {e}", i + 1)))?;
        paragraph_stems.push(terms.into_iter().map(|(_, stem)| stem).collect::<Vec<_>>());
    }
    let cfg = TileConfig {
        window,
        step,
        threshold: threshold.map_or(Threshold::MeanMinusSd(1.0), Threshold::Absolute),
    };
    let (boundaries, trace) = strata_core::tile(&paragraph_stems, &cfg).map_err(ctx(file))?;
    if let Some(path) = curve {
        let mut csv = String::from("position,cohesion\n");
        for (position, cohesion) in &trace.curve {
            let _ = writeln!(csv, "{position},{cohesion}");
        }
        write_file(path, &csv)?;
    }
    let mut out = format!(
        "# window {} step {} threshold {}\n",
        cfg.window, cfg.step, trace.threshold
    );
    out.push_str(&boundary_line(&boundaries));
    emit(output, &out)
}

fn eval(hyp: &Path, gold: &Path, json: bool, output: Option<&Path>) -> AppResult<()> {
    let hyp_set = parse_boundary_file(&read_file(hyp)?).map_err(ctx(hyp))?;
    let gold_set = parse_boundary_file(&read_file(gold)?).map_err(ctx(gold))?;
    let scores = evaluate(&hyp_set, &gold_set).map_err(ctx(gold))?;
    let report = if json {
        format!(
            "{{\"precision\":{},\"recall\":{},\"hits\":{},\"hyp\":{},\"gold\":{}}}\n",
            scores.precision, scores.recall, scores.hits, scores.hyp_count, scores.gold_count
        )
    } else {
        let vacuous = if scores.vacuous_precision() {
            " (no boundaries proposed)"
        } else {
            ""
        };
        format!(
            "hits       {}\nhypothesis {}\ngold       {}\nprecision  {}%{}\nrecall     {}%\n",
            scores.hits,
            scores.hyp_count,
            scores.gold_count,
            scores.precision_percent(),
            vacuous,
            scores.recall_percent()
        )
    };
    emit(output, &report)
}
