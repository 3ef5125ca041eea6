//! Command-line front end for the nimedge library.
//!
//! Exit codes: 0 success, 1 verification/acceptance failure, 2 parse or
//! parameter error, 3 budget exceeded. With `--machine` every subcommand
//! emits stable `key=value` lines, bit-identical across runs with the same
//! inputs and seeds.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nimedge::graph::{Graph, GraphFamilySpec};
use nimedge::{
    blowup_lower_bound, edit_distance, ex_exact, ex_exact_family, gf16_witness, is_feasible,
    is_nice, nim_max_exact, nim_set, overlay_construction, peel_min_degree, r_hom, r_star,
    EdgeColouring, Error, TemplateColouring,
};

#[derive(Parser)]
#[command(
    name = "nimedge",
    version,
    about = "NIM-edge searches on edge-coloured complete graphs"
)]
struct Cli {
    /// Emit stable key=value lines instead of prose.
    #[arg(long, global = true)]
    machine: bool,

    /// Worker threads for parallel edge tests (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphsArg {
    /// Comma-separated forbidden graphs, one per colour: complete:a,
    /// cycle:a, path:a, star:h, matching:h, cm:a1-a2-..., turan:n-r,
    /// file:<path>.
    #[arg(long)]
    graphs: String,
}

impl GraphsArg {
    fn parse(&self) -> Result<Vec<Graph>, Error> {
        self.graphs
            .split(',')
            .map(|s| s.trim().parse::<GraphFamilySpec>()?.build())
            .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// NIM edge computations on explicit colourings.
    #[command(subcommand)]
    Nim(NimCommand),

    /// Maximum point count admitting a feasible template colouring.
    Rstar {
        #[command(flatten)]
        graphs: GraphsArg,
        /// Node budget for the whole climb.
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Write the witness template here.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Maximum point count admitting a homomorphic-copy-free pair colouring.
    Rhom {
        #[command(flatten)]
        graphs: GraphsArg,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Do all feasible templates at the extremal point count colour the
    /// points alike?
    Nice {
        #[command(flatten)]
        graphs: GraphsArg,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Write the counterexample template here, if one exists.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Exact maximum size of a graph avoiding every listed graph.
    Ex {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        graphs: GraphsArg,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Write the extremal witness graph here.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Balanced blow-up of a feasible template, with its verified NIM count.
    Blowup {
        /// Template file.
        #[arg(long)]
        template: PathBuf,
        #[command(flatten)]
        graphs: GraphsArg,
        /// Number of vertices of the blow-up.
        #[arg(long)]
        n: usize,
        /// Write the blow-up colouring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Pack k-1 edge-disjoint tree-free hosts and colour the rest.
    Overlay {
        /// The tree (a single family spec).
        #[command(flatten)]
        graphs: GraphsArg,
        /// Number of colours.
        #[arg(long)]
        k: usize,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// RNG seed for the initial placements.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Strip vertices of deficient NIM degree, reporting the trace.
    Peel {
        /// Colouring file.
        #[arg(long)]
        colouring: PathBuf,
        #[command(flatten)]
        graphs: GraphsArg,
        /// Part count of the reference Turán graphs.
        #[arg(long)]
        r: usize,
    },

    /// Minimum adjacency edits between two graphs of equal order.
    Editdist {
        #[command(flatten)]
        graphs: GraphsArg,
    },

    /// The 16-point finite-field template for four triangles.
    Gf16 {
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Run the built-in certification suite.
    #[command(name = "verify-paper")]
    VerifyPaper,
}

#[derive(Subcommand)]
enum NimCommand {
    /// NIM edge set of a colouring file.
    Eval {
        #[arg(long)]
        colouring: PathBuf,
        #[command(flatten)]
        graphs: GraphsArg,
    },
    /// Exact maximum NIM count over all colourings of K_n.
    Max {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        graphs: GraphsArg,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Write the optimal witness colouring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .is_err()
        {
            eprintln!("error: worker pool already initialised");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget(_) => 3,
                Error::Verification(_) => 1,
                _ => 2,
            })
        }
    }
}

/// Writes a witness file and re-reads it, insisting on a faithful round
/// trip.
fn write_checked<T: PartialEq>(
    path: &PathBuf,
    text: String,
    parse: impl Fn(&str) -> Result<T, Error>,
    original: &T,
) -> Result<(), Error> {
    std::fs::write(path, &text)?;
    let back = parse(&std::fs::read_to_string(path)?)?;
    if back != *original {
        return Err(Error::Verification(format!(
            "witness file {} did not round-trip",
            path.display()
        )));
    }
    Ok(())
}

fn check_budget(budget: &Option<u64>) -> Result<(), Error> {
    match budget {
        Some(0) => Err(Error::Parameter("--budget-nodes must be positive".into())),
        _ => Ok(()),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let machine = cli.machine;
    match &cli.command {
        Command::Nim(NimCommand::Eval { colouring, graphs }) => {
            let col = EdgeColouring::read_file(colouring)?;
            let hs = graphs.parse()?;
            let report = nim_set(&col, &hs)?;
            if machine {
                println!("nim={}", report.count());
                for (i, g) in report.per_colour_nim().iter().enumerate() {
                    println!("nim_colour_{}={}", i + 1, g.size());
                }
            } else {
                println!(
                    "{} of {} edges are NIM edges",
                    report.count(),
                    col.order() * (col.order() - 1) / 2
                );
                for (i, g) in report.per_colour_nim().iter().enumerate() {
                    println!("  colour {}: {} NIM edges", i + 1, g.size());
                }
                if report.witnesses().len() <= 60 {
                    for (&(u, v), emb) in report.witnesses() {
                        println!(
                            "  ({u},{v}) colour {} covered by copy {emb}",
                            col.colour(u, v)
                        );
                    }
                } else {
                    println!(
                        "  {} covered edges (witnesses omitted)",
                        report.witnesses().len()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nim(NimCommand::Max {
            n,
            graphs,
            budget_nodes,
            out,
        }) => {
            check_budget(budget_nodes)?;
            let hs = graphs.parse()?;
            let outcome = nim_max_exact(*n, &hs, *budget_nodes)?;
            if machine {
                println!("nim={}", outcome.value);
                println!("optimal={}", outcome.optimal);
                println!("nodes={}", outcome.nodes);
            } else {
                println!(
                    "maximum NIM count on {n} vertices: {} ({}, {} nodes)",
                    outcome.value,
                    if outcome.optimal {
                        "exhausted"
                    } else {
                        "budget hit"
                    },
                    outcome.nodes
                );
            }
            if let (Some(path), Some(witness)) = (out, &outcome.witness) {
                write_checked(path, witness.to_text(), EdgeColouring::parse, witness)?;
            }
            Ok(if outcome.budget_hit {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Rstar {
            graphs,
            budget_nodes,
            out,
        } => {
            check_budget(budget_nodes)?;
            let hs = graphs.parse()?;
            let res = r_star(&hs, *budget_nodes)?;
            if machine {
                println!("rstar={}", res.value);
                println!("exhausted={}", res.exhausted_above);
                println!("nodes={}", res.nodes);
            } else {
                println!(
                    "rstar={} ({}, {} nodes)",
                    res.value,
                    if res.exhausted_above {
                        "refutation above is exhaustive"
                    } else {
                        "budget hit before closure"
                    },
                    res.nodes
                );
            }
            if let (Some(path), Some(witness)) = (out, &res.witness) {
                write_checked(path, witness.to_text(), TemplateColouring::parse, witness)?;
            } else if let (false, Some(witness)) = (machine, &res.witness) {
                print!("{}", witness.to_text());
            }
            Ok(if res.exhausted_above {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Rhom {
            graphs,
            budget_nodes,
            out,
        } => {
            check_budget(budget_nodes)?;
            let hs = graphs.parse()?;
            let res = r_hom(&hs, *budget_nodes)?;
            if machine {
                println!("rhom={}", res.value);
                println!("exhausted={}", res.exhausted_above);
                println!("nodes={}", res.nodes);
            } else {
                println!(
                    "rhom={} ({}, {} nodes)",
                    res.value,
                    if res.exhausted_above {
                        "refutation above is exhaustive"
                    } else {
                        "budget hit before closure"
                    },
                    res.nodes
                );
            }
            if let (Some(path), Some(witness)) = (out, &res.witness) {
                write_checked(path, witness.to_text(), TemplateColouring::parse, witness)?;
            } else if let (false, Some(witness)) = (machine, &res.witness) {
                print!("{}", witness.to_text());
            }
            Ok(if res.exhausted_above {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Nice {
            graphs,
            budget_nodes,
            out,
        } => {
            check_budget(budget_nodes)?;
            let hs = graphs.parse()?;
            let star = r_star(&hs, *budget_nodes)?;
            if !star.exhausted_above {
                return Err(Error::Budget(
                    "the extremal point count was not certified".into(),
                ));
            }
            let (nice, counterexample) = is_nice(&hs, star.value, *budget_nodes)?;
            if machine {
                println!("rstar={}", star.value);
                println!("nice={nice}");
            } else {
                println!(
                    "at {} points every feasible template {}",
                    star.value,
                    if nice {
                        "colours the points alike: nice"
                    } else {
                        "— not nice, counterexample found"
                    }
                );
            }
            if let Some(cx) = &counterexample {
                if let Some(path) = out {
                    write_checked(path, cx.to_text(), TemplateColouring::parse, cx)?;
                } else if !machine {
                    print!("{}", cx.to_text());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ex {
            n,
            graphs,
            budget_nodes,
            out,
        } => {
            check_budget(budget_nodes)?;
            let hs = graphs.parse()?;
            let res = if hs.len() == 1 {
                ex_exact(*n, &hs[0], *budget_nodes)?
            } else {
                ex_exact_family(*n, &hs, *budget_nodes)?
            };
            if machine {
                println!("ex={}", res.value);
                println!("optimal={}", res.optimal);
                println!("nodes={}", res.nodes);
            } else {
                println!(
                    "ex({n}) = {} ({}, {} nodes)",
                    res.value,
                    if res.optimal {
                        "exhausted"
                    } else {
                        "budget hit"
                    },
                    res.nodes
                );
            }
            if let Some(path) = out {
                write_checked(path, res.witness.to_text(), Graph::parse, &res.witness)?;
            } else if !machine {
                print!("{}", res.witness.to_text());
            }
            Ok(if res.optimal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Blowup {
            template,
            graphs,
            n,
            out,
        } => {
            let t = TemplateColouring::read_file(template)?;
            let hs = graphs.parse()?;
            let (colouring, count) = blowup_lower_bound(&hs, &t, *n)?;
            if machine {
                println!("nim={count}");
                println!("n={n}");
            } else {
                println!("balanced blow-up on {n} vertices has NIM count {count}");
            }
            if let Some(path) = out {
                write_checked(path, colouring.to_text(), EdgeColouring::parse, &colouring)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Overlay {
            graphs,
            k,
            n,
            seed,
            out,
        } => {
            let hs = graphs.parse()?;
            if hs.len() != 1 {
                return Err(Error::Parameter("overlay takes exactly one tree".into()));
            }
            let tree = &hs[0];
            let colouring = overlay_construction(tree, *k, *n, *seed)?;
            let forbidden: Vec<Graph> = (0..*k).map(|_| tree.clone()).collect();
            let report = nim_set(&colouring, &forbidden)?;
            if machine {
                println!("nim={}", report.count());
                println!("seed={seed}");
            } else {
                println!(
                    "overlay colouring on {n} vertices with {k} colours: {} NIM edges (seed {seed})",
                    report.count()
                );
            }
            if let Some(path) = out {
                write_checked(path, colouring.to_text(), EdgeColouring::parse, &colouring)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Peel {
            colouring,
            graphs,
            r,
        } => {
            let col = EdgeColouring::read_file(colouring)?;
            let hs = graphs.parse()?;
            let trace = peel_min_degree(&col, &hs, *r)?;
            for (order, nim) in &trace {
                if machine {
                    println!("order={order} nim={nim}");
                } else {
                    println!("order {order}: {nim} NIM edges");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Editdist { graphs } => {
            let hs = graphs.parse()?;
            if hs.len() != 2 {
                return Err(Error::Parameter("editdist takes exactly two graphs".into()));
            }
            let d = edit_distance(&hs[0], &hs[1])?;
            if machine {
                println!("editdist={d}");
            } else {
                println!("edit distance: {d}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gf16 { out } => {
            let template = gf16_witness();
            let k3 = Graph::complete(3)?;
            let hs = vec![k3.clone(), k3.clone(), k3.clone(), k3];
            let feasible = is_feasible(&template, &hs)?.feasible();
            if machine {
                println!("points={}", template.points());
                println!("feasible={feasible}");
            } else {
                println!(
                    "16-point template: {}",
                    if feasible {
                        "feasible for four triangles"
                    } else {
                        "INFEASIBLE"
                    }
                );
            }
            if let Some(path) = out {
                write_checked(
                    path,
                    template.to_text(),
                    TemplateColouring::parse,
                    &template,
                )?;
            } else if !machine {
                print!("{}", template.to_text());
            }
            if feasible {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Error::Verification(
                    "finite-field template failed feasibility".into(),
                ))
            }
        }
        Command::VerifyPaper => {
            for criterion in nimedge::verify::criteria() {
                match (criterion.run)() {
                    Ok(detail) => {
                        if machine {
                            println!("criterion{}=pass", criterion.id);
                        } else {
                            println!(
                                "criterion {:>2} PASS  {} — {detail}",
                                criterion.id, criterion.name
                            );
                        }
                    }
                    Err(reason) => {
                        if machine {
                            println!("criterion{}=fail", criterion.id);
                        } else {
                            println!(
                                "criterion {:>2} FAIL  {} — {reason}",
                                criterion.id, criterion.name
                            );
                        }
                        eprintln!(
                            "verification failed at criterion {}: {}",
                            criterion.id, criterion.name
                        );
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
