//! `mycdist`: build Mycielskians, color them, compute distinguishing
//! indices and run the verification experiment suite.

use clap::{Parser, Subcommand};
use mycdist_cli::{corpus, dot, format};
use mycdist_core::automorphism::{self, SearchBudget, SearchError};
use mycdist_core::coloring::{self, ColoringError};
use mycdist_core::graph::IndexUndefined;
use mycdist_core::mycielski::{self, MycielskiError};
use mycdist_core::solver::{self, SolverError};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use thiserror::Error;

const EXIT_VERIFIED_FALSE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_UNDEFINED: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Parser)]
#[command(name = "mycdist", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build mu_t^p(G) from an edge-list file; writes the edge list to
    /// --out and the role side-car next to it with a .roles extension.
    Build {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the exact distinguishing index of a graph.
    Index {
        input: PathBuf,
        /// Stop after this many colors instead of the solver envelope.
        #[arg(long)]
        max_colors: Option<usize>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Write the witness coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct one of the explicit colorings. Writes <out>.edges,
    /// <out>.roles, <out>.colors and <out>.dot.
    Color {
        #[command(subcommand)]
        kind: ColorKind,
    },
    /// Check whether a coloring is distinguishing for a graph.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        budget_nodes: Option<u64>,
    },
    /// Run the inequality experiment over a corpus spec, writing a CSV.
    Experiment {
        corpus: PathBuf,
        /// Layer counts, e.g. "1..2" (inclusive) or "1".
        #[arg(long, default_value = "1..2")]
        t_range: String,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a graph (optionally with a coloring and roles) as DOT.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        roles: Option<PathBuf>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ColorKind {
    /// Distinguishing coloring of mu(K_1,m) with ceil(sqrt(m+1)) colors.
    StarMu {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Distinguishing coloring of mu_t(K_1,m).
    StarMut {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Mimic coloring of mu_t(G) from a coloring of G.
    Mimic {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Build the coloring even when G is a star.
        #[arg(long)]
        override_star: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] format::ParseError),
    #[error("{0}")]
    Corpus(#[from] corpus::CorpusError),
    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("index undefined: {0}")]
    Undefined(IndexUndefined),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Corpus(_) | CliError::Io { .. } | CliError::Invalid(_) => {
                EXIT_PARSE
            }
            CliError::Undefined(_) => EXIT_UNDEFINED,
            CliError::Inconclusive(_) => EXIT_INCONCLUSIVE,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::IndexUndefined(reason) => CliError::Undefined(reason),
            SolverError::Search(SearchError::Truncated { nodes }) => {
                CliError::Inconclusive(format!("search truncated after {nodes} nodes"))
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Truncated { nodes } => {
                CliError::Inconclusive(format!("search truncated after {nodes} nodes"))
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<MycielskiError> for CliError {
    fn from(e: MycielskiError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.into(), source })
}

fn budget_from(nodes: Option<u64>) -> SearchBudget {
    match nodes {
        Some(n) => SearchBudget::with_node_limit(n),
        None => SearchBudget::default(),
    }
}

fn parse_t_range(spec: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = || CliError::Invalid(format!("bad t-range {spec:?}; expected \"a..b\" or \"a\""));
    if let Some((a, b)) = spec.split_once("..") {
        let a = a.parse().map_err(|_| bad())?;
        let b = b.trim_start_matches('=').parse().map_err(|_| bad())?;
        if a == 0 || b < a {
            return Err(bad());
        }
        Ok(a..=b)
    } else {
        let a: usize = spec.parse().map_err(|_| bad())?;
        if a == 0 {
            return Err(bad());
        }
        Ok(a..=a)
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Build { input, t, p, out } => {
            let g = format::parse_edge_list(&read(&input)?)?;
            let lg = mycielski::iterated(&g, t, p, mycielski::DEFAULT_VERTEX_CAP)?;
            write(&out, &format::write_edge_list(lg.graph()))?;
            let roles_path = out.with_extension("roles");
            write(&roles_path, &format::write_roles(&lg))?;
            println!(
                "built mu_{t}^{p}: {} vertices, {} edges -> {} (+ {})",
                lg.graph().vertex_count(),
                lg.graph().edge_count(),
                out.display(),
                roles_path.display()
            );
            Ok(0)
        }
        Cmd::Index { input, max_colors, budget_nodes, out } => {
            let g = format::parse_edge_list(&read(&input)?)?;
            let budget = budget_from(budget_nodes);
            let result = match max_colors {
                None => solver::distinguishing_index(&g, &budget)?,
                Some(limit) => {
                    let mut found = None;
                    let mut certificates = Vec::new();
                    for k in 1..=limit {
                        match solver::exists_distinguishing_with_stats(&g, k, &budget)? {
                            (Some(witness), _) => {
                                found = Some(solver::IndexResult { index: k, witness, certificates });
                                break;
                            }
                            (None, nodes) => certificates
                                .push(solver::NonexistenceCert { colors: k, nodes_explored: nodes }),
                        }
                    }
                    found.ok_or_else(|| {
                        CliError::Inconclusive(format!(
                            "no distinguishing coloring with up to {limit} colors"
                        ))
                    })?
                }
            };
            for cert in &result.certificates {
                println!("k={}: exhausted {} nodes", cert.colors, cert.nodes_explored);
            }
            println!("index {}", result.index);
            if let Some(path) = out {
                write(&path, &format::write_coloring(&result.witness))?;
                println!("witness written to {}", path.display());
            }
            Ok(0)
        }
        Cmd::Color { kind } => {
            let (lg, c, label) = match kind {
                ColorKind::StarMu { m, out } => {
                    let (lg, c) = coloring::star_mu_coloring(m)?;
                    (lg, c, out)
                }
                ColorKind::StarMut { m, t, out } => {
                    let (lg, c) = coloring::star_mut_coloring(m, t)?;
                    (lg, c, out)
                }
                ColorKind::Mimic { graph, coloring: cpath, t, override_star, out } => {
                    let g = format::parse_edge_list(&read(&graph)?)?;
                    let base = format::parse_coloring(&read(&cpath)?, &g)?;
                    let (lg, c) = coloring::mimic_mut_coloring(&g, &base, t, override_star)?;
                    (lg, c, out)
                }
            };
            let prefix = label.display();
            let edges_path = PathBuf::from(format!("{prefix}.edges"));
            let roles_path = PathBuf::from(format!("{prefix}.roles"));
            let colors_path = PathBuf::from(format!("{prefix}.colors"));
            let dot_path = PathBuf::from(format!("{prefix}.dot"));
            write(&edges_path, &format::write_edge_list(lg.graph()))?;
            write(&roles_path, &format::write_roles(&lg))?;
            write(&colors_path, &format::write_coloring(&c))?;
            let roles: Vec<_> = lg.roles().iter().enumerate().map(|(i, &r)| (i, r)).collect();
            write(&dot_path, &dot::export(lg.graph(), Some(&c), Some(&roles)))?;
            println!(
                "wrote {} edges with {} colors to {prefix}.{{edges,roles,colors,dot}}",
                c.edge_count(),
                c.num_colors()
            );
            Ok(0)
        }
        Cmd::Verify { graph, coloring: cpath, budget_nodes } => {
            let g = format::parse_edge_list(&read(&graph)?)?;
            let c = format::parse_coloring(&read(&cpath)?, &g)?;
            let budget = budget_from(budget_nodes);
            match automorphism::find_nontrivial_color_preserving(&g, &c, &budget)? {
                None => {
                    println!("distinguishing");
                    Ok(0)
                }
                Some(p) => {
                    let images: Vec<String> = p.images().iter().map(|v| v.to_string()).collect();
                    println!("NOT distinguishing: witness {}", images.join(" "));
                    Ok(EXIT_VERIFIED_FALSE)
                }
            }
        }
        Cmd::Experiment { corpus: spec_path, t_range, budget_nodes, out } => {
            let base_dir = spec_path.parent().unwrap_or(Path::new(".")).to_path_buf();
            let entries = corpus::parse_corpus(&read(&spec_path)?, &base_dir)?;
            let ts = parse_t_range(&t_range)?;
            let budget = budget_from(budget_nodes);
            let mut csv = String::from(
                "name,n,edges,dist,t,mu_dist,mu_dist_exact,construction_verified,inequality_holds\n",
            );
            let mut any_false = false;
            let mut any_inconclusive = false;
            for entry in &entries {
                for t in ts.clone() {
                    let prefix = format!(
                        "{},{},{}",
                        entry.name,
                        entry.graph.vertex_count(),
                        entry.graph.edge_count()
                    );
                    match solver::verify_inequality(&entry.graph, t, &budget, true) {
                        Ok(report) => {
                            let (mu_dist, exact) = match report.mycielskian_index {
                                Some(idx) => (idx, true),
                                None => (report.constructed.num_colors(), false),
                            };
                            writeln!(
                                csv,
                                "{prefix},{},{t},{mu_dist},{exact},{},{}",
                                report.base_index,
                                report.construction_verified,
                                report.inequality_holds
                            )
                            .unwrap();
                            if !report.inequality_holds {
                                any_false = true;
                                eprintln!("inequality FAILED for {} at t={t}", entry.name);
                            }
                        }
                        Err(SolverError::Search(SearchError::Truncated { nodes })) => {
                            any_inconclusive = true;
                            writeln!(csv, "{prefix},?,{t},?,false,inconclusive,inconclusive").unwrap();
                            eprintln!(
                                "row {} t={t}: truncated after {nodes} nodes",
                                entry.name
                            );
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            write(&out, &csv)?;
            println!("wrote {} rows to {}", entries.len() * ts.clone().count(), out.display());
            if any_false {
                Ok(EXIT_VERIFIED_FALSE)
            } else if any_inconclusive {
                Ok(EXIT_INCONCLUSIVE)
            } else {
                Ok(0)
            }
        }
        Cmd::ExportDot { graph, coloring: cpath, roles, out } => {
            let g = format::parse_edge_list(&read(&graph)?)?;
            let c = match cpath {
                Some(p) => Some(format::parse_coloring(&read(&p)?, &g)?),
                None => None,
            };
            let parsed_roles = match roles {
                Some(p) => Some(format::parse_roles(&read(&p)?)?),
                None => None,
            };
            let rendered = dot::export(&g, c.as_ref(), parsed_roles.as_deref());
            match out {
                Some(path) => write(&path, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
