use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use clttf_core::present::{
    abelianization, presentation, structure_report, verify_presentation, PresentedGroup,
    VerifyBounds,
};
use clttf_core::{
    chunk_tree, chunks, iso_group, parse_graph, rigidity_report, special_phi, twist_class,
    validate_clttf, Error as CoreError, LabeledGraph, NodeRef,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID_GRAPH: u8 = 2;
const EXIT_PARSE_ERROR: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Aut,
    Out,
    #[value(name = "autA", alias = "auta")]
    AutA,
    #[value(name = "autA-mod-z", alias = "auta-mod-z")]
    AutAModZ,
    Artin,
}

#[derive(Parser)]
#[command(
    name = "clttf-aut",
    about = "Chunk trees, edge-twist classes and automorphism-group presentations \
             of edge-separated CLTTF defining graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum word length explored by the rewriting search.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Maximum number of words visited by the rewriting search.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Seed echoed into reports for reproducibility of randomized runs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Check the CLTTF and edge-separated conditions, with witnesses.
    Validate { input: PathBuf },
    /// List the chunks of the graph.
    Chunks { input: PathBuf },
    /// Print the chunk tree (text, JSON, or DOT).
    Tree { input: PathBuf },
    /// Enumerate the edge-twist equivalence class.
    Class {
        input: PathBuf,
        /// Write one graph file per member, named by its coordinate bits.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Compute the isomorphism group of the twist class.
    Iso { input: PathBuf },
    /// Decide rigidity and discrete rigidity.
    Rigidity { input: PathBuf },
    /// Describe the distinguished central automorphism.
    Phi { input: PathBuf },
    /// Emit a presentation of the chosen group.
    Presentation {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Group::Out)]
        group: Group,
        /// Emit computer-algebra text instead of the chosen format.
        #[arg(long)]
        cas: bool,
    },
    /// Verify every relation family in the executable models.
    Verify { input: PathBuf },
    /// Report which structural decompositions apply.
    Report { input: PathBuf },
}

fn load_graph(path: &PathBuf) -> Result<LabeledGraph, u8> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(EXIT_PARSE_ERROR);
        }
    };
    match parse_graph(&text) {
        Ok(g) => Ok(g),
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            Err(EXIT_PARSE_ERROR)
        }
    }
}

fn require_accepted(g: &LabeledGraph) -> Result<(), u8> {
    let report = validate_clttf(g);
    if report.accepted() {
        Ok(())
    } else {
        eprintln!("error: graph rejected by validation: {}", report.summary());
        Err(EXIT_INVALID_GRAPH)
    }
}

fn core_exit(e: CoreError) -> u8 {
    match e {
        CoreError::Parse { .. } => EXIT_PARSE_ERROR,
        CoreError::InvalidGraph(_) => EXIT_INVALID_GRAPH,
        _ => EXIT_VERIFY_FAILED,
    }
}

fn run(cli: &Cli) -> Result<(), u8> {
    match &cli.command {
        Command::Validate { input } => {
            let g = load_graph(input)?;
            let report = validate_clttf(&g);
            match cli.format {
                Format::Json => {
                    let v = json!({
                        "connected": report.connected,
                        "large_type": report.large_type,
                        "triangle_free": report.triangle_free,
                        "edge_separated": report.edge_separated,
                        "vertex_count_ok": report.vertex_count_ok,
                        "accepted": report.accepted(),
                        "witnesses": report.summary(),
                    });
                    println!("{v}");
                }
                _ => {
                    println!("connected:        {}", report.connected);
                    println!("large_type:       {}", report.large_type);
                    println!("triangle_free:    {}", report.triangle_free);
                    println!("edge_separated:   {}", report.edge_separated);
                    println!("vertex_count_ok:  {}", report.vertex_count_ok);
                    println!("verdict:          {}", report.summary());
                }
            }
            if !report.accepted() {
                return Err(EXIT_INVALID_GRAPH);
            }
            Ok(())
        }
        Command::Chunks { input } => {
            let g = load_graph(input)?;
            let cs = chunks(&g).map_err(core_exit)?;
            match cli.format {
                Format::Json => {
                    let v: Vec<Vec<&str>> = cs
                        .iter()
                        .map(|c| c.vertices.iter().map(|&v| g.name(v)).collect())
                        .collect();
                    println!("{}", json!({ "chunks": v }));
                }
                Format::Dot => {
                    let tree = chunk_tree(&g).map_err(core_exit)?;
                    print!("{}", tree.export_dot());
                }
                Format::Text => {
                    for (i, c) in cs.iter().enumerate() {
                        let names: Vec<&str> = c.vertices.iter().map(|&v| g.name(v)).collect();
                        println!("chunk {i}: {{{}}}", names.join(","));
                    }
                }
            }
            Ok(())
        }
        Command::Tree { input } => {
            let g = load_graph(input)?;
            let tree = chunk_tree(&g).map_err(core_exit)?;
            match cli.format {
                Format::Json => println!("{}", tree.to_json()),
                Format::Dot => print!("{}", tree.export_dot()),
                Format::Text => {
                    println!("nodes: {}", tree.node_count());
                    println!("center: {}", tree.node_name(tree.center));
                    for te in &tree.tree_edges {
                        println!(
                            "e{}: {} -> {} [{}, {}]",
                            te.index,
                            tree.sep_name(te.sep),
                            tree.chunk_name(te.chunk),
                            match te.orientation {
                                clttf_core::Orientation::Outward => "outward",
                                clttf_core::Orientation::Inward => "inward",
                            },
                            match te.parity {
                                clttf_core::Parity::Even => "even",
                                clttf_core::Parity::Odd => "odd",
                            }
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Class { input, out_dir } => {
            let g = load_graph(input)?;
            require_accepted(&g)?;
            let tree = chunk_tree(&g).map_err(core_exit)?;
            let class = twist_class(&tree);
            if let Some(dir) = out_dir {
                fs::create_dir_all(dir).map_err(|e| {
                    eprintln!("error: cannot create {}: {e}", dir.display());
                    EXIT_PARSE_ERROR
                })?;
                for (k, member) in class.members.iter().enumerate() {
                    let name = format!("{}.graph", class.bits_of(k).bit_string());
                    fs::write(dir.join(&name), member.to_file_string()).map_err(|e| {
                        eprintln!("error: cannot write {name}: {e}");
                        EXIT_PARSE_ERROR
                    })?;
                }
            }
            match cli.format {
                Format::Json => {
                    let members: Vec<_> = class
                        .members
                        .iter()
                        .enumerate()
                        .map(|(k, m)| {
                            json!({
                                "eta": class.bits_of(k).bit_string(),
                                "edges": m.edge_summary(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({ "size": class.len(), "members": members })
                    );
                }
                _ => {
                    println!("class size: {}", class.len());
                    for (k, m) in class.members.iter().enumerate() {
                        println!("{}: {}", class.bits_of(k).bit_string(), m);
                    }
                }
            }
            Ok(())
        }
        Command::Iso { input } => {
            let g = load_graph(input)?;
            let group = iso_group(&g).map_err(core_exit)?;
            match cli.format {
                Format::Json => println!("{}", group.to_json()),
                _ => {
                    println!(
                        "order {} = {} automorphisms x {} isomorphic members",
                        group.order(),
                        group.aut_indices.len(),
                        group.order() / group.aut_indices.len()
                    );
                    for (i, e) in group.elements.iter().enumerate() {
                        println!(
                            "a{i}: {} eta={} order={}",
                            e.perm.cycles_string(&g),
                            e.eta.bit_string(),
                            group.element_order(i)
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Rigidity { input } => {
            let g = load_graph(input)?;
            let tree = chunk_tree(&g).map_err(core_exit)?;
            let (rigid, discrete) = rigidity_report(&tree);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json!({ "rigid": rigid, "discretely_rigid": discrete })
                ),
                _ => {
                    println!("rigid:            {rigid}");
                    println!("discretely_rigid: {discrete}");
                }
            }
            Ok(())
        }
        Command::Phi { input } => {
            let g = load_graph(input)?;
            let group = iso_group(&g).map_err(core_exit)?;
            let phi = special_phi(&group);
            let images = clttf_core::induced_map(&group, &phi);
            let image_map: BTreeMap<String, String> = images
                .iter()
                .map(|(&v, w)| (g.name(v).to_string(), w.display(&g)))
                .collect();
            let kind = match group.tree.center {
                NodeRef::Chunk(_) => "identity (center is a chunk)",
                NodeRef::SepEdge(si) => {
                    if group.tree.sep_labels[si] % 2 == 0 {
                        "pure twist composite (even-labeled center edge)"
                    } else {
                        "twist composite with endpoint swap (odd-labeled center edge)"
                    }
                }
            };
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "kind": kind,
                        "eta": phi.core.eta,
                        "perm": group.elements[phi.core.alpha].perm.cycles_string(&g),
                        "sign": phi.sign,
                        "images": image_map,
                    })
                ),
                _ => {
                    println!("phi: {kind}");
                    println!(
                        "perm: {}, eta: {:?}",
                        group.elements[phi.core.alpha].perm.cycles_string(&g),
                        phi.core.eta
                    );
                    for (v, w) in image_map {
                        println!("  {v} -> {w}");
                    }
                }
            }
            Ok(())
        }
        Command::Presentation { input, group, cas } => {
            let g = load_graph(input)?;
            let kind = match group {
                Group::Aut => PresentedGroup::Aut,
                Group::Out => PresentedGroup::Out,
                Group::AutA => PresentedGroup::AutA,
                Group::AutAModZ => PresentedGroup::AutAModZ,
                Group::Artin => PresentedGroup::Artin,
            };
            let pres = if kind == PresentedGroup::Artin {
                require_accepted(&g)?;
                clttf_core::present::artin_presentation(&g)
            } else {
                let iso = iso_group(&g).map_err(core_exit)?;
                presentation(&iso, kind)
            };
            if *cas {
                print!("{}", pres.to_cas_text());
                return Ok(());
            }
            match cli.format {
                Format::Json => {
                    let (torsion, rank) = abelianization(&pres);
                    let mut v = pres.to_json();
                    v["abelianization"] = json!({ "torsion": torsion, "free_rank": rank });
                    println!("{v}");
                }
                _ => print!("{}", pres.to_text()),
            }
            Ok(())
        }
        Command::Verify { input } => {
            let g = load_graph(input)?;
            let bounds = VerifyBounds {
                max_len: cli.max_len,
                budget: cli.budget,
            };
            let report = verify_presentation(&g, bounds).map_err(core_exit)?;
            match cli.format {
                Format::Json => {
                    let mut v = report.to_json();
                    v["seed"] = json!(cli.seed);
                    println!("{v}");
                }
                _ => print!("{}", report.to_text()),
            }
            if !report.passed() {
                return Err(EXIT_VERIFY_FAILED);
            }
            Ok(())
        }
        Command::Report { input } => {
            let g = load_graph(input)?;
            let text = structure_report(&g).map_err(core_exit)?;
            match cli.format {
                Format::Json => println!("{}", json!({ "report": text })),
                _ => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
