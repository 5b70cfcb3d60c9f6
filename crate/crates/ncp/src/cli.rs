//! Command-line surface: `stats`, `ncp`, `bounds`, `score` subcommands
//! with reproducible file outputs. All numeric CSV fields use the default
//! shortest-roundtrip float formatting, so identical runs are
//! byte-identical.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::baselines;
use crate::bounds;
use crate::error::{Error, Result};
use crate::flow;
use crate::graph::{Graph, LoadOptions};
use crate::local::{self, LocalParams};
use crate::profile::{self, InternalBudget, ScoredCluster};
use crate::scoring::{self, ScoreKind, ALL_SCORE_KINDS};

#[derive(Parser, Debug)]
#[command(name = "ncp", about = "Size-resolved community profiling for undirected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basic graph statistics.
    Stats(StatsArgs),
    /// Generate candidates, build profiles, write ncp.csv / candidates.jsonl / bias.csv.
    Ncp(NcpArgs),
    /// Certified spectral (and optionally SDP) conductance lower bounds.
    Bounds(BoundsArgs),
    /// Score one cluster file under the community quality measures.
    Score(ScoreArgs),
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Restrict to the largest connected component before reporting.
    #[arg(long)]
    pub keep_lcc: bool,
}

#[derive(Args, Debug)]
pub struct NcpArgs {
    /// Plain "key = value" file mirroring the flags; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Comma-separated: local-spectral,flow,global-spectral,dendrogram or "all".
    #[arg(long)]
    pub methods: Option<String>,
    /// Flow trials / seed-sample size on large graphs.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Comma-separated score kinds, or "all".
    #[arg(long)]
    pub scores: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also run the exhaustive oracle and write ncp_exact.csv.
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub keep_lcc: bool,
    /// Worker threads for candidate generation (0 = library default).
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Also compute the SDP bound (slower).
    #[arg(long)]
    pub sdp: bool,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Network label for the CSV row (defaults to the file stem).
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub keep_lcc: bool,
}

#[derive(Args, Debug)]
pub struct ScoreArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// File with one original node id per line.
    #[arg(long)]
    pub cluster: PathBuf,
    /// Comma-separated score kinds; default all.
    #[arg(long)]
    pub scores: Option<String>,
    #[arg(long)]
    pub keep_lcc: bool,
}

/// Candidate generation methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    LocalSpectral,
    Flow,
    GlobalSpectral,
    Dendrogram,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::LocalSpectral,
        Method::Flow,
        Method::GlobalSpectral,
        Method::Dendrogram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::LocalSpectral => "local-spectral",
            Method::Flow => "flow",
            Method::GlobalSpectral => "global-spectral",
            Method::Dendrogram => "dendrogram",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// Fully resolved run configuration; persisting it and re-running gives
/// identical outputs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub graph: PathBuf,
    pub methods: Vec<Method>,
    pub samples: usize,
    pub seed: u64,
    pub scores: Vec<ScoreKind>,
    pub out: PathBuf,
    pub exact: bool,
    pub keep_lcc: bool,
    pub workers: usize,
}

impl RunConfig {
    fn to_key_values(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph = {}", self.graph.display());
        let _ = writeln!(
            s,
            "methods = {}",
            self.methods
                .iter()
                .map(|m| m.name())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(s, "samples = {}", self.samples);
        let _ = writeln!(s, "seed = {}", self.seed);
        let _ = writeln!(
            s,
            "scores = {}",
            self.scores
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(s, "out = {}", self.out.display());
        let _ = writeln!(s, "exact = {}", self.exact);
        let _ = writeln!(s, "keep-lcc = {}", self.keep_lcc);
        let _ = writeln!(s, "workers = {}", self.workers);
        s
    }
}

fn parse_key_values(path: &Path) -> Result<HashMap<String, String>> {
    let text = fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected 'key = value', got '{line}'"),
            });
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn parse_methods(list: &str) -> Result<Vec<Method>> {
    if list == "all" {
        return Ok(Method::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in list.split(',').filter(|p| !p.trim().is_empty()) {
        let m: Method = part.trim().parse()?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownMethod(list.to_string()));
    }
    Ok(out)
}

fn parse_scores(list: &str) -> Result<Vec<ScoreKind>> {
    if list == "all" {
        return Ok(ALL_SCORE_KINDS.to_vec());
    }
    let mut out = Vec::new();
    for part in list.split(',').filter(|p| !p.trim().is_empty()) {
        let k: ScoreKind = part.trim().parse()?;
        if !out.contains(&k) {
            out.push(k);
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownScoreKind(list.to_string()));
    }
    Ok(out)
}

impl NcpArgs {
    /// Resolve defaults, config file, and flags (in increasing priority).
    pub fn resolve(&self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => parse_key_values(path)?,
            None => HashMap::new(),
        };
        let file_bool = |key: &str| -> Option<bool> {
            file.get(key).map(|v| v == "true" || v == "1" || v == "yes")
        };
        let graph = self
            .graph
            .clone()
            .or_else(|| file.get("graph").map(PathBuf::from))
            .ok_or_else(|| Error::InvalidParameter("missing --graph".into()))?;
        let methods = match (&self.methods, file.get("methods")) {
            (Some(list), _) => parse_methods(list)?,
            (None, Some(list)) => parse_methods(list)?,
            (None, None) => Method::ALL.to_vec(),
        };
        let samples = match (self.samples, file.get("samples")) {
            (Some(v), _) => v,
            (None, Some(v)) => v
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad samples '{v}'")))?,
            (None, None) => 200,
        };
        let seed = match (self.seed, file.get("seed")) {
            (Some(v), _) => v,
            (None, Some(v)) => v
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad seed '{v}'")))?,
            (None, None) => 42,
        };
        let scores = match (&self.scores, file.get("scores")) {
            (Some(list), _) => parse_scores(list)?,
            (None, Some(list)) => parse_scores(list)?,
            (None, None) => ALL_SCORE_KINDS.to_vec(),
        };
        let out = self
            .out
            .clone()
            .or_else(|| file.get("out").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("."));
        let exact = self.exact || file_bool("exact").unwrap_or(false);
        let keep_lcc = self.keep_lcc || file_bool("keep-lcc").unwrap_or(false);
        let workers = match (self.workers, file.get("workers")) {
            (Some(v), _) => v,
            (None, Some(v)) => v
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad workers '{v}'")))?,
            (None, None) => 0,
        };
        Ok(RunConfig {
            graph,
            methods,
            samples,
            seed,
            scores,
            out,
            exact,
            keep_lcc,
            workers,
        })
    }
}

fn load_graph(path: &Path, keep_lcc: bool) -> Result<Graph> {
    let file = fs::File::open(path)?;
    let g = Graph::load_edge_list(BufReader::new(file), LoadOptions::default())?;
    if keep_lcc {
        Ok(g.largest_connected_component())
    } else {
        Ok(g)
    }
}

pub fn cmd_stats(args: &StatsArgs) -> Result<String> {
    let g = load_graph(&args.graph, args.keep_lcc)?;
    let n = g.node_count();
    let degrees: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let min = degrees.iter().min().copied().unwrap_or(0);
    let max = degrees.iter().max().copied().unwrap_or(0);
    let avg = g.total_volume() as f64 / n as f64;
    Ok(format!(
        "n={} m={} components={} degree_min={} degree_max={} degree_avg={:.3}",
        n,
        g.edge_count(),
        g.components().len(),
        min,
        max,
        avg
    ))
}

/// Generate candidates for every configured method, in method order.
pub fn generate_candidates(g: &Graph, config: &RunConfig) -> Result<Vec<ScoredCluster>> {
    let mut out: Vec<ScoredCluster> = Vec::new();
    for &method in &config.methods {
        match method {
            Method::LocalSpectral => {
                let params = LocalParams::default_for(g);
                let seeds: Vec<usize> = if g.node_count() <= 10_000 {
                    (0..g.node_count()).collect()
                } else {
                    let mut all: Vec<usize> = (0..g.node_count()).collect();
                    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                    all.shuffle(&mut rng);
                    all.truncate(config.samples);
                    all.sort_unstable();
                    all
                };
                // parallel map preserves seed order, so the concatenation
                // is independent of the worker count
                let per_seed: Vec<Result<Vec<ScoredCluster>>> = seeds
                    .par_iter()
                    .map(|&s| local::local_cluster(g, s, &params))
                    .collect();
                for batch in per_seed {
                    out.extend(batch?);
                }
            }
            Method::Flow => {
                out.extend(flow::recursive_bisection_sample(
                    g,
                    config.seed,
                    config.samples,
                    0.02,
                )?);
            }
            Method::GlobalSpectral => {
                out.extend(baselines::global_spectral_sweep(g, config.seed)?);
            }
            Method::Dendrogram => {
                if g.node_count() <= 2000 {
                    out.extend(baselines::gn_dendrogram(g, g.node_count())?.candidates);
                } else {
                    eprintln!(
                        "note: skipping dendrogram on {} nodes (limit 2000)",
                        g.node_count()
                    );
                }
            }
        }
    }
    Ok(out)
}

fn write_candidates_jsonl(
    path: &Path,
    g: &Graph,
    candidates: &[ScoredCluster],
) -> Result<()> {
    let mut file = std::io::BufWriter::new(fs::File::create(path)?);
    for (id, c) in candidates.iter().enumerate() {
        let members: Vec<i64> = c
            .cluster
            .members()
            .iter()
            .map(|&u| g.original_id(u as usize))
            .collect();
        let row = serde_json::json!({
            "id": id,
            "generator": c.generator.to_string(),
            "seed": c.seed,
            "params": c.params,
            "k": c.cluster.node_count(),
            "members": members,
            "internal_edges": c.cluster.internal_edges(),
            "boundary_edges": c.cluster.boundary_edges(),
            "volume": c.cluster.volume(),
            "connected": c.connected,
            "conductance": c.conductance(),
        });
        writeln!(file, "{row}")?;
    }
    file.flush()?;
    Ok(())
}

fn write_ncp_csv(
    path: &Path,
    g: &Graph,
    candidates: &mut [ScoredCluster],
    kinds: &[ScoreKind],
) -> Result<()> {
    let mut text = String::from("kind,k,phi,witness_id,generator\n");
    for &kind in kinds {
        let profile = profile::build_ncp(g, candidates, kind);
        for (k, point) in profile.points() {
            let generator = candidates[point.witness].generator;
            let _ = writeln!(
                text,
                "{kind},{k},{},{},{generator}",
                point.value, point.witness
            );
        }
    }
    fs::write(path, text)?;
    Ok(())
}

pub fn cmd_ncp(config: &RunConfig) -> Result<()> {
    let g = load_graph(&config.graph, config.keep_lcc)?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    fs::create_dir_all(&config.out)?;
    fs::write(config.out.join("run.config"), config.to_key_values())?;

    let run = || -> Result<Vec<ScoredCluster>> { generate_candidates(&g, config) };
    let mut candidates = if config.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(run)?
    } else {
        run()?
    };

    // disconnected candidates stay in the pool (their flags feed the bias
    // report) and additionally contribute their components
    let children = profile::split_disconnected(
        &g,
        candidates.iter().filter(|c| !c.connected).cloned().collect(),
    );
    candidates.extend(children);

    write_ncp_csv(
        &config.out.join("ncp.csv"),
        &g,
        &mut candidates,
        &config.scores,
    )?;

    let budget = InternalBudget {
        seed: config.seed,
        ..InternalBudget::default()
    };
    let rows = profile::bias_report(&g, &candidates, &budget, 2000)?;
    let mut bias = String::from(
        "candidate_id,generator,k,phi_external,phi_internal,ratio,avg_path,connected\n",
    );
    for r in rows {
        let _ = writeln!(
            bias,
            "{},{},{},{},{},{},{},{}",
            r.candidate_id,
            r.generator,
            r.k,
            r.phi_external,
            r.phi_internal,
            r.ratio,
            r.avg_path,
            r.connected
        );
    }
    fs::write(config.out.join("bias.csv"), bias)?;

    if config.exact {
        let mut text = String::from("kind,k,phi,witness_id,generator\n");
        for &kind in &config.scores {
            let (profile, witnesses) =
                profile::exact_ncp(&g, kind, profile::EXACT_NCP_DEFAULT_MAX_N, false)?;
            let base = candidates.len();
            for (k, point) in profile.points() {
                let _ = writeln!(text, "{kind},{k},{},{},oracle", point.value, point.witness + base);
            }
            candidates.extend(witnesses);
        }
        fs::write(config.out.join("ncp_exact.csv"), text)?;
    }

    write_candidates_jsonl(&config.out.join("candidates.jsonl"), &g, &candidates)?;
    Ok(())
}

pub fn cmd_bounds(args: &BoundsArgs) -> Result<bool> {
    let g = load_graph(&args.graph, args.keep_lcc)?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let name = args.name.clone().unwrap_or_else(|| {
        args.graph
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "graph".into())
    });
    let mut text = String::from("network,spectral_lb,sdp_lb_half_volume,ratio,certified\n");
    let certified;
    let row = if args.sdp {
        let report = bounds::bounds_report(&g, &name, args.seed)?;
        certified = report.certified;
        format!(
            "{},{},{},{},{}\n",
            report.network,
            report.spectral.bound,
            report.sdp.bound,
            report.ratio,
            if report.certified { "yes" } else { "flagged" }
        )
    } else {
        let spectral = bounds::spectral_lower_bound(&g)?;
        certified = bounds::verify_spectral(&g, &spectral).is_ok();
        format!(
            "{},{},,,{}\n",
            name,
            spectral.bound,
            if certified { "yes" } else { "flagged" }
        )
    };
    text.push_str(&row);
    fs::create_dir_all(&args.out)?;
    fs::write(args.out.join("bounds.csv"), &text)?;
    print!("{row}");
    Ok(certified)
}

fn load_cluster_file(g: &Graph, path: &Path) -> Result<Vec<u32>> {
    let text = fs::read_to_string(path)?;
    let mut members = Vec::new();
    for (i, token) in text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let original: i64 = token.parse().map_err(|_| Error::Parse {
            line: i + 1,
            message: format!("bad node id '{token}'"),
        })?;
        members.push(g.node_of_original(original)? as u32);
    }
    members.sort_unstable();
    Ok(members)
}

pub fn cmd_score(args: &ScoreArgs) -> Result<String> {
    let g = load_graph(&args.graph, args.keep_lcc)?;
    let members = load_cluster_file(&g, &args.cluster)?;
    let cluster = g.cluster_stats(&members)?;
    let kinds = match &args.scores {
        Some(list) => parse_scores(list)?,
        None => ALL_SCORE_KINDS.to_vec(),
    };
    let mut text = String::from("cluster_id,k,kind,value\n");
    for kind in kinds {
        match scoring::score(&g, &cluster, kind) {
            Ok(v) => {
                let _ = writeln!(text, "0,{},{kind},{}", cluster.node_count(), v.value);
            }
            Err(_) => {
                let _ = writeln!(text, "0,{},{kind},NA", cluster.node_count());
            }
        }
    }
    Ok(text)
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NonConverged(_) => 3,
        _ => 2,
    }
}

/// Execute a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result: Result<i32> = match &cli.command {
        Command::Stats(args) => cmd_stats(args).map(|line| {
            println!("{line}");
            0
        }),
        Command::Ncp(args) => args.resolve().and_then(|config| cmd_ncp(&config).map(|_| 0)),
        Command::Bounds(args) => cmd_bounds(args).map(|certified| if certified { 0 } else { 3 }),
        Command::Score(args) => cmd_score(args).map(|text| {
            print!("{text}");
            0
        }),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(name: &str) -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
    }

    #[test]
    fn stats_line_for_toy_graph() {
        let args = StatsArgs {
            graph: data("toy.txt"),
            keep_lcc: false,
        };
        let line = cmd_stats(&args).unwrap();
        assert!(line.starts_with("n=14 m=23 components=1"), "{line}");
    }

    #[test]
    fn methods_parse_and_reject() {
        assert_eq!(parse_methods("all").unwrap(), Method::ALL.to_vec());
        assert_eq!(
            parse_methods("flow,local-spectral").unwrap(),
            vec![Method::Flow, Method::LocalSpectral]
        );
        assert!(matches!(
            parse_methods("metis"),
            Err(Error::UnknownMethod(_))
        ));
    }

    #[test]
    fn scores_parse_and_reject() {
        assert_eq!(parse_scores("all").unwrap().len(), 12);
        assert_eq!(
            parse_scores("Conductance,MaxODF").unwrap(),
            vec![ScoreKind::Conductance, ScoreKind::MaxODF]
        );
        assert!(parse_scores("Sharpness").is_err());
    }

    #[test]
    fn config_file_fills_gaps_and_flags_override() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("run.config");
        fs::write(&cfg, "graph = g.txt\nseed = 7\nmethods = flow\nexact = true\n").unwrap();
        let args = NcpArgs {
            config: Some(cfg),
            graph: None,
            methods: None,
            samples: None,
            seed: Some(99),
            scores: None,
            out: None,
            exact: false,
            keep_lcc: false,
            workers: None,
        };
        let config = args.resolve().unwrap();
        assert_eq!(config.graph, PathBuf::from("g.txt"));
        assert_eq!(config.seed, 99); // flag wins
        assert_eq!(config.methods, vec![Method::Flow]);
        assert!(config.exact);
        assert_eq!(config.samples, 200);
    }

    #[test]
    fn resolved_config_round_trips_through_its_own_serialization() {
        let args = NcpArgs {
            config: None,
            graph: Some(data("toy.txt")),
            methods: Some("flow".into()),
            samples: Some(5),
            seed: Some(3),
            scores: Some("Conductance".into()),
            out: Some(PathBuf::from("outdir")),
            exact: true,
            keep_lcc: true,
            workers: Some(2),
        };
        let config = args.resolve().unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.config");
        fs::write(&path, config.to_key_values()).unwrap();
        let again = NcpArgs {
            config: Some(path),
            graph: None,
            methods: None,
            samples: None,
            seed: None,
            scores: None,
            out: None,
            exact: false,
            keep_lcc: false,
            workers: None,
        }
        .resolve()
        .unwrap();
        assert_eq!(again.graph, config.graph);
        assert_eq!(again.methods, config.methods);
        assert_eq!(again.samples, config.samples);
        assert_eq!(again.seed, config.seed);
        assert_eq!(again.scores, config.scores);
        assert_eq!(again.exact, config.exact);
        assert_eq!(again.keep_lcc, config.keep_lcc);
        assert_eq!(again.workers, config.workers);
    }

    #[test]
    fn score_command_on_barbell_k5() {
        let dir = tempfile::tempdir().unwrap();
        let cluster = dir.path().join("k5.txt");
        fs::write(&cluster, "0\n1\n2\n3\n4\n").unwrap();
        let args = ScoreArgs {
            graph: data("barbell.txt"),
            cluster,
            scores: Some("Conductance".into()),
            keep_lcc: false,
        };
        let text = cmd_score(&args).unwrap();
        let line = text.lines().nth(1).unwrap();
        assert!(line.starts_with("0,5,Conductance,0.047619047619"), "{line}");
    }

    #[test]
    fn score_command_rejects_unknown_node() {
        let dir = tempfile::tempdir().unwrap();
        let cluster = dir.path().join("bad.txt");
        fs::write(&cluster, "0\n99\n").unwrap();
        let args = ScoreArgs {
            graph: data("barbell.txt"),
            cluster,
            scores: None,
            keep_lcc: false,
        };
        let err = cmd_score(&args).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn toy_set_a_scores_two_fourteenths() {
        let args = ScoreArgs {
            graph: data("toy.txt"),
            cluster: data("toy_set_a.txt"),
            scores: Some("Conductance".into()),
            keep_lcc: false,
        };
        let text = cmd_score(&args).unwrap();
        let value: f64 = text
            .lines()
            .nth(1)
            .unwrap()
            .rsplit(',')
            .next()
            .unwrap()
            .parse()
            .unwrap();
        assert!((value - 2.0 / 14.0).abs() < 1e-12);
    }
}
