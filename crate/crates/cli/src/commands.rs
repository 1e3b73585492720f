use serde_json::{json, Value};

use clawdec::connectivity::{edge_connectivity, essential_edge_connectivity_check, vertex_connectivity};
use clawdec::enumerate::enumerate_summary;
use clawdec::families::{build_g48n, build_product_family, verify_g48n, verify_product_family, BlockSpec, PropertyReport};
use clawdec::formats::{write_dot, write_edge_list, write_graph6};
use clawdec::graphfile::GraphFile;
use clawdec::known::known_report;
use clawdec::orientation::{
    hakimi_orient, mod_k_orientation, verify_orientation, HakimiOutcome, Orientation, OrientationContract,
    DEFAULT_NODE_LIMIT,
};
use clawdec::stardecomp::{decide_star_decomposition, verify_certificate, verify_decomposition, Decision};
use clawdec::survey::{survey_claw_with, SurveyOptions};
use clawdec::Graph;

use crate::input::{read_graph, read_text, read_vertex_map};
use crate::{Cli, Command, EnumerateArgs, FamilyCommand, Format, OrientMode, Outcome, Payload, SurveyArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] clawdec::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Claims(String),
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Decide { file, k } => decide(file, *k),
        Command::Orient { file, mode, p, k } => orient(file, *mode, p, *k),
        Command::Connectivity { file, essential } => connectivity(file, *essential, cli.workers),
        Command::Family { family } => family_cmd(family),
        Command::Enumerate(args) => enumerate(args, cli.workers),
        Command::Survey(args) => survey(args, cli.workers),
        Command::VerifyKnown { name } => verify_known(name),
        Command::Convert { file, to } => convert(file, *to),
    }
}

fn json_outcome(command: &'static str, inputs: Value, payload: Value, negative: bool) -> Outcome {
    Outcome {
        command,
        inputs,
        payload: Payload::Json(payload),
        negative,
    }
}

fn decide(file: &str, k: usize) -> Result<Outcome> {
    let g = read_graph(file)?;
    let inputs = json!({ "file": file, "k": k });
    let out = match decide_star_decomposition(&g, k)? {
        Decision::Decomposable(d) => {
            let stars: Vec<Value> = d
                .stars
                .iter()
                .map(|s| {
                    let edges: Vec<[usize; 2]> = s
                        .edges
                        .iter()
                        .map(|&e| {
                            let (u, v) = g.edge(e);
                            [u, v]
                        })
                        .collect();
                    json!({ "center": s.center, "edges": edges })
                })
                .collect();
            let verified = verify_decomposition(&g, &d).ok;
            json_outcome(
                "decide",
                inputs,
                json!({ "decision": "decomposable", "k": k, "stars": stars, "certificate": null, "verified": verified }),
                false,
            )
        }
        Decision::NotDecomposable(cert) => {
            let verified = verify_certificate(&g, k, &cert);
            json_outcome(
                "decide",
                inputs,
                json!({ "decision": "not_decomposable", "k": k, "stars": [], "certificate": cert, "verified": verified }),
                true,
            )
        }
    };
    Ok(out)
}

fn orientation_json(o: &Orientation) -> Value {
    json!({
        "orientation": o.to_text(),
        "out_degrees": o.out_degrees(),
        "in_degrees": o.in_degrees(),
    })
}

fn orient(file: &str, mode: OrientMode, p_file: &str, k: Option<usize>) -> Result<Outcome> {
    let g = read_graph(file)?;
    let p = read_vertex_map(p_file, g.order())?;
    match mode {
        OrientMode::Hakimi => {
            let inputs = json!({ "file": file, "mode": "hakimi", "p": p_file });
            match hakimi_orient(&g, &p)? {
                HakimiOutcome::Oriented(o) => {
                    let mut v = orientation_json(&o);
                    v["result"] = json!("oriented");
                    v["verified"] = json!(verify_orientation(&o, OrientationContract::InBound(&p)).ok);
                    Ok(json_outcome("orient", inputs, v, false))
                }
                HakimiOutcome::Violated(s) => {
                    let verified = s.is_valid(&g, &p);
                    Ok(json_outcome(
                        "orient",
                        inputs,
                        json!({ "result": "violated", "violating_set": s, "verified": verified }),
                        true,
                    ))
                }
            }
        }
        OrientMode::Modk => {
            let k = k.ok_or_else(|| CliError::Input("--mode modk needs --k".into()))?;
            let inputs = json!({ "file": file, "mode": "modk", "p": p_file, "k": k });
            match mod_k_orientation(&g, k, &p, DEFAULT_NODE_LIMIT)? {
                Some(o) => {
                    let mut v = orientation_json(&o);
                    v["result"] = json!("oriented");
                    v["verified"] = json!(verify_orientation(&o, OrientationContract::Residue { k, p: &p }).ok);
                    Ok(json_outcome("orient", inputs, v, false))
                }
                None => Ok(json_outcome(
                    "orient",
                    inputs,
                    json!({ "result": "none", "detail": "search exhausted without a p-orientation" }),
                    true,
                )),
            }
        }
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))
}

fn connectivity(file: &str, essential: Option<usize>, workers: usize) -> Result<Outcome> {
    let g = read_graph(file)?;
    let inputs = json!({ "file": file, "essential": essential });
    let (lambda, kappa, ess) = pool(workers)?.install(|| {
        let lambda = edge_connectivity(&g)?;
        let kappa = vertex_connectivity(&g)?;
        let ess = essential.map(|l| essential_edge_connectivity_check(&g, l)).transpose()?;
        Ok::<_, clawdec::Error>((lambda, kappa, ess))
    })?;
    let mut v = json!({
        "edge_connectivity": lambda.0,
        "edge_cut": lambda.1,
        "vertex_connectivity": kappa.0,
        "vertex_cut": kappa.1,
    });
    let mut negative = false;
    if let (Some(l), Some(res)) = (essential, ess) {
        negative = res.is_some();
        v["essential"] = json!({ "lambda": l, "passed": res.is_none(), "cut": res });
    }
    Ok(json_outcome("connectivity", inputs, v, negative))
}

fn report_outcome(command: &'static str, inputs: Value, g: &Graph, report: PropertyReport) -> Result<Outcome> {
    if !report.all_passed() {
        let names: Vec<String> = report.failures().iter().map(|c| format!("{} ({})", c.name, c.detail)).collect();
        return Err(CliError::Claims(format!("claims failed: {}", names.join("; "))));
    }
    let graph6 = write_graph6(g)?;
    Ok(json_outcome(
        command,
        inputs,
        json!({ "graph6": graph6, "order": g.order(), "size": g.size(), "report": report }),
        false,
    ))
}

fn family_cmd(f: &FamilyCommand) -> Result<Outcome> {
    match f {
        FamilyCommand::G48n { block, n } => {
            let spec = BlockSpec::from_file(&GraphFile::parse(&read_text(block)?)?)?;
            let (g, rot) = build_g48n(&spec, *n)?;
            let report = verify_g48n(&g, &rot, *n);
            report_outcome("family g48n", json!({ "block": block, "n": n }), &g, report)
        }
        FamilyCommand::Product { k, n } => {
            let g = build_product_family(*k, *n).map_err(|e| match e {
                clawdec::Error::KTooSmall(3) => {
                    CliError::Input("k = 3 is covered by the planar family; use `family g48n`".into())
                }
                e => e.into(),
            })?;
            let report = verify_product_family(&g, *k, *n);
            report_outcome("family product", json!({ "k": k, "kn_cycles": n }), &g, report)
        }
    }
}

fn enumerate(args: &EnumerateArgs, workers: usize) -> Result<Outcome> {
    let s = enumerate_summary(args.n, args.d, !args.all, workers)?;
    if let Some(path) = &args.out {
        write_lines(path, &s.graphs)?;
    }
    let inputs = json!({ "n": args.n, "d": args.d, "connected_only": !args.all, "out": args.out });
    Ok(json_outcome("enumerate", inputs, serde_json::to_value(&s).expect("summary serializes"), false))
}

fn write_lines(path: &str, lines: &[String]) -> Result<()> {
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

fn survey(args: &SurveyArgs, workers: usize) -> Result<Outcome> {
    let opts = SurveyOptions {
        workers,
        allow_large: args.allow_large,
        checkpoint: args.checkpoint.as_ref().map(Into::into),
        split_depth: None,
    };
    let r = survey_claw_with(args.n, &opts)?;
    if let Some(path) = &args.witnesses {
        write_lines(path, &r.witnesses)?;
    }
    let inputs = json!({ "n": args.n, "allow_large": args.allow_large, "checkpoint": args.checkpoint });
    Ok(json_outcome("survey", inputs, serde_json::to_value(&r).expect("report serializes"), false))
}

fn verify_known(name: &str) -> Result<Outcome> {
    let report = known_report(name)?;
    let g = clawdec::known::load_known_graph(name)?.graph;
    report_outcome("verify-known", json!({ "name": name }), &g, report)
}

fn convert(file: &str, to: Format) -> Result<Outcome> {
    let g = read_graph(file)?;
    let text = match to {
        Format::Graph6 => format!("{}\n", write_graph6(&g)?),
        Format::Edgelist => write_edge_list(&g),
        Format::Dot => {
            let stem = std::path::Path::new(file)
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("G");
            write_dot(&g, stem)
        }
    };
    Ok(Outcome {
        command: "convert",
        inputs: json!({ "file": file }),
        payload: Payload::Text(text),
        negative: false,
    })
}
