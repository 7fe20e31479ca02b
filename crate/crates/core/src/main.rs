use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};

use rainbow_blocks::chordal::build_clique_tree;
use rainbow_blocks::coloring::EdgeColoring;
use rainbow_blocks::corpus::{generate, random_block_graph, FamilySpec};
use rainbow_blocks::graph::{block_decomposition, is_geodetic, recognize};
use rainbow_blocks::oracle::{
    exact_rc, exact_src, is_rainbow_connected, is_strong_rainbow_connected,
};
use rainbow_blocks::rc_analysis::{classify_rc_small, rc_upper_bound, RcOutcome};
use rainbow_blocks::reduction::{build_split_instance, instance_to_text, parse_graph_with_pairs};
use rainbow_blocks::src_algo::{src_number, strong_rainbow_color};
use rainbow_blocks::Graph;

#[derive(Parser)]
#[command(name = "rainbow-blocks", version, about = "Rainbow connectivity toolkit for block and split graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Rc,
    Src,
}

#[derive(Subcommand)]
enum Command {
    /// Report graph-class recognition flags.
    Recognize {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print a clique tree (or DOT with --dot).
    CliqueTree {
        graph: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Strong rainbow connection number of a block graph.
    Src {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write an optimal strong rainbow coloring.
    Color {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Upper bound |S| + 2 on rc.
    RcBound {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify rc of a bridgeless block graph (rc <= 4 decision).
    RcClassify {
        graph: PathBuf,
        /// Write the witness coloring here when the outcome is exact.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a coloring file against a graph.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        graph: PathBuf,
        colors: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact rc/src by brute force (small graphs only).
    Oracle {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        cap: Option<usize>,
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the split instance from a star graph with '# pair u v' lines.
    Reduce {
        star: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a named family or a seeded random block graph.
    Gen {
        /// path | star | clique | windmill | kn-triangles | triangle-chain | bowtie | random
        #[arg(long)]
        family: String,
        /// Comma-separated numeric parameters, e.g. "3,4" for windmill.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        blocks: usize,
        #[arg(long, default_value_t = 4)]
        max_block_size: usize,
        #[arg(long)]
        bridgeless: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &PathBuf) -> anyhow::Result<(Graph, String)> {
    let text = std::fs::read_to_string(path)?;
    let g = Graph::parse(&text)?;
    Ok((g, digest(&text)))
}

fn digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    format!("{:x}", hasher.finalize())
}

fn emit(json_mode: bool, command: &str, input_digest: &str, result: serde_json::Value, human: String) {
    if json_mode {
        let wrapped = json!({
            "command": command,
            "input_digest": input_digest,
            "result": result,
        });
        println!("{}", serde_json::to_string_pretty(&wrapped).unwrap());
    } else {
        println!("{human}");
    }
}

fn write_or_print(path: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Recognize { graph, json } => {
            let (g, dig) = read_graph(&graph)?;
            let report = recognize(&g);
            let bd = block_decomposition(&g);
            let geodetic = is_geodetic(&g);
            emit(
                json,
                "recognize",
                &dig,
                json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "chordal": report.is_chordal,
                    "block_graph": report.is_block_graph,
                    "split": report.is_split(),
                    "bridgeless": report.is_bridgeless,
                    "geodetic": geodetic,
                    "blocks": bd.blocks.len(),
                    "cut_vertices": bd.cut_vertices,
                }),
                format!(
                    "vertices: {}\nedges: {}\nchordal: {}\nblock graph: {}\nsplit: {}\nbridgeless: {}\ngeodetic: {}\nblocks: {}\ncut vertices: {:?}",
                    g.vertex_count(),
                    g.edge_count(),
                    report.is_chordal,
                    report.is_block_graph,
                    report.is_split(),
                    report.is_bridgeless,
                    geodetic,
                    bd.blocks.len(),
                    bd.cut_vertices,
                ),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::CliqueTree { graph, dot } => {
            let (g, _) = read_graph(&graph)?;
            let tree = build_clique_tree(&g, None)?;
            if dot {
                println!("graph clique_tree {{");
                for (i, c) in tree.cliques().enumerate() {
                    println!("  n{i} [label=\"{:?}\"];", c);
                }
                for (a, b, label) in tree.tree_edges() {
                    println!("  n{a} -- n{b} [label=\"{:?}\"];", label);
                }
                println!("}}");
            } else {
                for (i, c) in tree.cliques().enumerate() {
                    println!("clique {i}: {:?}", c);
                }
                for (a, b, label) in tree.tree_edges() {
                    println!("edge {a} -- {b} label {:?}", label);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Src { graph, json } => {
            let (g, dig) = read_graph(&graph)?;
            let k = src_number(&g)?;
            emit(json, "src", &dig, json!({ "src": k }), format!("{k}"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Color { graph, output, json } => {
            let (g, dig) = read_graph(&graph)?;
            let coloring = strong_rainbow_color(&g)?;
            write_or_print(&output, &coloring.to_text(&g))?;
            emit(
                json,
                "color",
                &dig,
                json!({ "colors": coloring.color_count() }),
                format!("colors: {}", coloring.color_count()),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::RcBound { graph, json } => {
            let (g, dig) = read_graph(&graph)?;
            let bound = rc_upper_bound(&g)?;
            emit(json, "rc-bound", &dig, json!({ "rc_upper_bound": bound }), format!("{bound}"));
            Ok(ExitCode::SUCCESS)
        }
        Command::RcClassify { graph, witness, json } => {
            let (g, dig) = read_graph(&graph)?;
            let cls = classify_rc_small(&g)?;
            let dp_extra = match (cls.core_block_count, cls.outer_block_count) {
                (Some(c), Some(o)) => format!("\ncore blocks: {c}\nouter blocks: {o}"),
                _ => String::new(),
            };
            match &cls.outcome {
                RcOutcome::Exact { k, witness: w } => {
                    if let Some(path) = &witness {
                        std::fs::write(path, w.to_text(&g))?;
                    }
                    emit(
                        json,
                        "rc-classify",
                        &dig,
                        json!({
                            "outcome": "exact",
                            "rc": k,
                            "diameter": cls.diameter,
                            "core_blocks": cls.core_block_count,
                            "outer_blocks": cls.outer_block_count,
                        }),
                        format!("rc = {k}\ndiameter: {}{dp_extra}", cls.diameter),
                    );
                    Ok(ExitCode::SUCCESS)
                }
                RcOutcome::GreaterThanFour { reason } => {
                    emit(
                        json,
                        "rc-classify",
                        &dig,
                        json!({
                            "outcome": "greater_than_four",
                            "reason": reason,
                            "diameter": cls.diameter,
                            "core_blocks": cls.core_block_count,
                            "outer_blocks": cls.outer_block_count,
                        }),
                        format!("rc > 4 ({reason})\ndiameter: {}{dp_extra}", cls.diameter),
                    );
                    Ok(ExitCode::SUCCESS)
                }
                RcOutcome::OutsideCaseAnalysis { detail } => {
                    emit(
                        json,
                        "rc-classify",
                        &dig,
                        json!({
                            "outcome": "outside_case_analysis",
                            "detail": detail,
                            "diameter": cls.diameter,
                        }),
                        format!("outside case analysis: {detail}\ndiameter: {}", cls.diameter),
                    );
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Verify { mode, graph, colors, json } => {
            let (g, dig) = read_graph(&graph)?;
            let text = std::fs::read_to_string(&colors)?;
            let coloring = EdgeColoring::parse(&g, &text)?;
            let ok = match mode {
                Mode::Rc => is_rainbow_connected(&g, &coloring)?,
                Mode::Src => is_strong_rainbow_connected(&g, &coloring)?,
            };
            let label = match mode {
                Mode::Rc => "rainbow connected",
                Mode::Src => "strong rainbow connected",
            };
            emit(
                json,
                "verify",
                &dig,
                json!({ "holds": ok, "colors": coloring.color_count() }),
                format!("{label}: {ok}"),
            );
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Oracle { mode, cap, graph, json } => {
            let (g, dig) = read_graph(&graph)?;
            let cap = cap.unwrap_or(g.edge_count());
            let value = match mode {
                Mode::Rc => exact_rc(&g, cap)?,
                Mode::Src => exact_src(&g, cap)?,
            };
            let name = match mode {
                Mode::Rc => "rc",
                Mode::Src => "src",
            };
            if value > cap {
                emit(
                    json,
                    "oracle",
                    &dig,
                    json!({ "mode": name, "cap": cap, "value": null }),
                    format!("{name} > {cap}"),
                );
            } else {
                emit(
                    json,
                    "oracle",
                    &dig,
                    json!({ "mode": name, "cap": cap, "value": value }),
                    format!("{value}"),
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { star, output, json } => {
            let text = std::fs::read_to_string(&star)?;
            let (g, pairs) = parse_graph_with_pairs(&text)?;
            let inst = build_split_instance(&g, &pairs)?;
            write_or_print(&output, &instance_to_text(&inst))?;
            emit(
                json,
                "reduce",
                &digest(&text),
                json!({
                    "vertices": inst.graph.vertex_count(),
                    "edges": inst.graph.edge_count(),
                }),
                format!(
                    "split instance: {} vertices, {} edges",
                    inst.graph.vertex_count(),
                    inst.graph.edge_count()
                ),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family, params, seed, blocks, max_block_size, bridgeless, output } => {
            let nums: Vec<usize> = params
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| anyhow::anyhow!("invalid --params: {e}"))?;
            let need = |count: usize| -> anyhow::Result<()> {
                if nums.len() != count {
                    anyhow::bail!("family '{family}' expects {count} parameter(s)");
                }
                Ok(())
            };
            let g = match family.as_str() {
                "path" => {
                    need(1)?;
                    generate(FamilySpec::Path(nums[0]))?
                }
                "star" => {
                    need(1)?;
                    generate(FamilySpec::Star(nums[0]))?
                }
                "clique" => {
                    need(1)?;
                    generate(FamilySpec::Clique(nums[0]))?
                }
                "windmill" => {
                    need(2)?;
                    generate(FamilySpec::Windmill { copies: nums[0], size: nums[1] })?
                }
                "kn-triangles" => {
                    need(1)?;
                    generate(FamilySpec::KnTriangles(nums[0]))?
                }
                "triangle-chain" => {
                    need(1)?;
                    generate(FamilySpec::TriangleChain(nums[0]))?
                }
                "bowtie" => {
                    need(0)?;
                    generate(FamilySpec::Bowtie)?
                }
                "random" => random_block_graph(seed, blocks, max_block_size, bridgeless)?,
                other => anyhow::bail!("unknown family '{other}'"),
            };
            write_or_print(&output, &g.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
