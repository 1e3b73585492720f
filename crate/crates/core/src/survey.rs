//! Counting connected 4-regular graphs without claw-decompositions.
//!
//! The generation tree is cut at a fixed depth; every subtree is surveyed on
//! its own and the per-subtree results are merged in prefix order, so the
//! report (checksum included) does not depend on the number of workers.
//! Finished subtrees can be appended to a checkpoint file and skipped on a
//! later run.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::enumerate::{Prefix, RegularGenerator};
use crate::error::{Error, Result};
use crate::formats::{parse_graph6, write_graph6};
use crate::graph::Graph;
use crate::independent::independent_sets_of_size;
use crate::stardecomp::{decide_claw_4regular, has_claw_decomposition_4regular, verify_certificate, Decision};

/// Smallest order refused without [`SurveyOptions::allow_large`].
pub const LARGE_ORDER: usize = 18;

#[derive(Clone, Debug, Default)]
pub struct SurveyOptions {
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    pub allow_large: bool,
    pub checkpoint: Option<PathBuf>,
    /// Depth at which the generation tree is split; `None` picks one from `n`.
    pub split_depth: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub total_generated: u64,
    /// Graphs with no independent set of size `n/3`.
    pub stage1_rejected: u64,
    pub non_decomposable: u64,
    /// graph6 of every graph without a claw-decomposition, canonical and sorted.
    pub witnesses: Vec<String>,
    /// SHA-256 over the generated stream, subtree by subtree.
    pub checksum: String,
    pub subtrees: usize,
    pub workers: usize,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SubtreeResult {
    key: String,
    total: u64,
    stage1_rejected: u64,
    non_decomposable: u64,
    digest: String,
    witnesses: Vec<String>,
}

impl SubtreeResult {
    fn to_line(&self) -> String {
        let w = if self.witnesses.is_empty() {
            "-".to_string()
        } else {
            self.witnesses.join(",")
        };
        format!(
            "{} {} {} {} {} {}",
            self.key, self.total, self.stage1_rejected, self.non_decomposable, self.digest, w
        )
    }

    fn from_line(line: &str) -> std::result::Result<Self, String> {
        let f: Vec<&str> = line.split(' ').collect();
        if f.len() != 6 {
            return Err(format!("expected 6 fields, got {}", f.len()));
        }
        let num = |s: &str| s.parse::<u64>().map_err(|e| format!("{s}: {e}"));
        if f[4].len() != 64 || !f[4].bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(format!("bad digest {}", f[4]));
        }
        let witnesses: Vec<String> = if f[5] == "-" {
            Vec::new()
        } else {
            f[5].split(',').map(str::to_string).collect()
        };
        let r = SubtreeResult {
            key: f[0].to_string(),
            total: num(f[1])?,
            stage1_rejected: num(f[2])?,
            non_decomposable: num(f[3])?,
            digest: f[4].to_string(),
            witnesses,
        };
        if r.witnesses.len() as u64 != r.non_decomposable || r.stage1_rejected > r.non_decomposable {
            return Err("inconsistent counts".into());
        }
        Ok(r)
    }
}

/// Default split: deep enough for many subtrees, shallow enough that the
/// prefix list stays small.
fn default_depth(n: usize) -> usize {
    (n / 2).max(1)
}

/// Stage 1: an independent set of size `n/3` must exist.
pub fn passes_stage1(g: &Graph) -> bool {
    independent_sets_of_size(g, g.order() / 3).next().is_some()
}

/// Survey with default options.
pub fn survey_claw(n: usize) -> Result<SurveyReport> {
    survey_claw_with(n, &SurveyOptions::default())
}

pub fn survey_claw_with(n: usize, opts: &SurveyOptions) -> Result<SurveyReport> {
    if !n.is_multiple_of(3) {
        return Err(Error::NotDivisibleByThree(n));
    }
    if n >= LARGE_ORDER && !opts.allow_large {
        return Err(Error::RefusedScale(n));
    }
    let start = Instant::now();
    let gen = RegularGenerator::new(n, 4, true)?;
    let depth = opts.split_depth.unwrap_or_else(|| default_depth(n));
    let prefixes = gen.prefixes(depth);

    let header = format!("# clawdec survey n={n} depth={depth} subtrees={}", prefixes.len());
    let mut done: HashMap<String, SubtreeResult> = HashMap::new();
    let writer = match &opts.checkpoint {
        Some(path) => {
            let fresh = !path.exists() || std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
            if !fresh {
                done = read_checkpoint(path, &header)?;
            }
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
            if fresh {
                writeln!(f, "{header}").map_err(|e| Error::Checkpoint(e.to_string()))?;
            }
            Some(Mutex::new(f))
        }
        None => None,
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::Checkpoint(format!("thread pool: {e}")))?;
    let workers = pool.current_num_threads();
    let results: Vec<Result<SubtreeResult>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|p| {
                let key = p.key();
                if let Some(r) = done.get(&key) {
                    return Ok(r.clone());
                }
                let r = survey_subtree(&gen, p, key);
                if let Some(w) = &writer {
                    let mut f = w.lock().expect("checkpoint lock");
                    writeln!(f, "{}", r.to_line()).map_err(|e| Error::Checkpoint(e.to_string()))?;
                    f.flush().map_err(|e| Error::Checkpoint(e.to_string()))?;
                }
                Ok(r)
            })
            .collect()
    });

    let mut report = SurveyReport {
        n,
        d: 4,
        k: 3,
        total_generated: 0,
        stage1_rejected: 0,
        non_decomposable: 0,
        witnesses: Vec::new(),
        checksum: String::new(),
        subtrees: prefixes.len(),
        workers,
        wall_time_ms: 0,
    };
    let mut hasher = Sha256::new();
    for r in results {
        let r = r?;
        report.total_generated += r.total;
        report.stage1_rejected += r.stage1_rejected;
        report.non_decomposable += r.non_decomposable;
        report.witnesses.extend(r.witnesses);
        hasher.update(format!("{} {} {}\n", r.key, r.total, r.digest));
    }
    report.checksum = hex(&hasher.finalize());
    report.witnesses.sort();
    for w in &report.witnesses {
        reverify_witness(w)?;
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn survey_subtree(gen: &RegularGenerator, prefix: &Prefix, key: String) -> SubtreeResult {
    let mut hasher = Sha256::new();
    let mut r = SubtreeResult {
        key,
        total: 0,
        stage1_rejected: 0,
        non_decomposable: 0,
        digest: String::new(),
        witnesses: Vec::new(),
    };
    gen.for_each_below(prefix, |g| {
        let g6 = write_graph6(g).expect("generated graphs are simple");
        hasher.update(g6.as_bytes());
        hasher.update(b"\n");
        r.total += 1;
        let bad = if !passes_stage1(g) {
            r.stage1_rejected += 1;
            true
        } else {
            !has_claw_decomposition_4regular(g)
        };
        if bad {
            r.non_decomposable += 1;
            r.witnesses.push(g6);
        }
        ControlFlow::Continue(())
    });
    r.digest = hex(&hasher.finalize());
    r
}

/// A witness must parse, be 4-regular, and come with a valid certificate.
fn reverify_witness(g6: &str) -> Result<()> {
    let g = parse_graph6(g6)?;
    match decide_claw_4regular(&g)? {
        Decision::NotDecomposable(cert) if verify_certificate(&g, 3, &cert) => Ok(()),
        _ => Err(Error::Checkpoint(format!("witness {g6} does not re-verify"))),
    }
}

fn read_checkpoint(path: &std::path::Path, header: &str) -> Result<HashMap<String, SubtreeResult>> {
    let ctx = |e: String| Error::Checkpoint(format!("{}: {e}", path.display()));
    let f = File::open(path).map_err(|e| ctx(e.to_string()))?;
    let mut lines = BufReader::new(f).lines();
    let first = lines.next().transpose().map_err(|e| ctx(e.to_string()))?.unwrap_or_default();
    if first != header {
        return Err(ctx(format!("header mismatch: found {first:?}, expected {header:?}")));
    }
    let mut out = HashMap::new();
    for (i, line) in lines.enumerate() {
        let line = line.map_err(|e| ctx(e.to_string()))?;
        if line.is_empty() {
            continue;
        }
        let r = SubtreeResult::from_line(&line).map_err(|e| ctx(format!("line {}: {e}", i + 2)))?;
        out.insert(r.key.clone(), r);
    }
    Ok(out)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_six_and_nine() {
        let r = survey_claw(6).unwrap();
        assert_eq!((r.total_generated, r.non_decomposable), (1, 0));
        let r = survey_claw(9).unwrap();
        assert_eq!(r.total_generated, 16);
        assert_eq!(r.non_decomposable as usize, r.witnesses.len());
    }

    #[test]
    fn preconditions() {
        assert!(matches!(survey_claw(10), Err(Error::NotDivisibleByThree(10))));
        assert!(matches!(survey_claw(18), Err(Error::RefusedScale(18))));
    }

    #[test]
    fn checksum_ignores_split_and_workers() {
        let a = survey_claw_with(9, &SurveyOptions { workers: 1, ..Default::default() }).unwrap();
        let b = survey_claw_with(9, &SurveyOptions { workers: 3, ..Default::default() }).unwrap();
        assert_eq!(a.checksum, b.checksum);
        assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn checkpoint_resume() {
        let dir = std::env::temp_dir().join(format!("clawdec-ckpt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("n9.txt");
        let _ = std::fs::remove_file(&path);
        let opts = SurveyOptions { checkpoint: Some(path.clone()), ..Default::default() };
        let first = survey_claw_with(9, &opts).unwrap();
        let lines = std::fs::read_to_string(&path).unwrap().lines().count();
        assert_eq!(lines, first.subtrees + 1);
        let second = survey_claw_with(9, &opts).unwrap();
        assert_eq!(first.checksum, second.checksum);
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), lines);
        std::fs::write(&path, "# something else\n").unwrap();
        assert!(matches!(survey_claw_with(9, &opts), Err(Error::Checkpoint(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn line_round_trip() {
        let r = SubtreeResult {
            key: "Dhc".into(),
            total: 5,
            stage1_rejected: 1,
            non_decomposable: 2,
            digest: "ab".repeat(32),
            witnesses: vec!["K~".into(), "Kx".into()],
        };
        assert_eq!(SubtreeResult::from_line(&r.to_line()).unwrap(), r);
        assert!(SubtreeResult::from_line("Dhc 5 1 2").is_err());
    }
}
