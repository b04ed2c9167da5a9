//! Worker orchestration for the sharded search.
//!
//! A run owns one user-facing shard `shard_id/shard_count` and spreads it
//! over `threads` workers by refining the round-robin split: worker j
//! takes the subtrees whose counter is congruent to
//! `shard_id + shard_count·j` modulo `shard_count·threads`. The union
//! over workers is exactly the user shard, so counts and the coloring
//! set never depend on the worker count.

use std::path::{Path, PathBuf};
use std::sync::Mutex;

use twodist_core::graph::{TwoDistGraph, VertexOrder};
use twodist_core::search::{run_shard, CanonicalColoring, SearchConfig, SearchStats};

use crate::checkpoint::{CheckpointData, CheckpointHeader};
use crate::CliError;

#[derive(Clone, Debug)]
pub struct RunSpec {
    pub k: u8,
    pub keydepth: u32,
    pub shard_id: u32,
    pub shard_count: u32,
    pub threads: u32,
    pub checkpoint_interval: u64,
}

#[derive(Clone, Debug)]
pub struct WorkerReport {
    pub cpu: u32,
    pub ncpu: u32,
    pub stats: SearchStats,
    /// Colorings this worker contributed, including ones restored from a
    /// checkpoint.
    pub count: u64,
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    /// All colorings of the shard, sorted, graph vertex order.
    pub colorings: Vec<CanonicalColoring>,
    pub workers: Vec<WorkerReport>,
    pub resumed_colorings: u64,
}

struct CkptSink {
    path: PathBuf,
    data: CheckpointData,
}

impl CkptSink {
    fn post(
        &mut self,
        worker: usize,
        calls_done: u64,
        new_colorings: &mut Vec<Vec<u8>>,
    ) -> Result<(), CliError> {
        let slot = &mut self.data.subshards[worker];
        slot.calls_done = calls_done;
        slot.colorings.append(new_colorings);
        self.data.write(&self.path)
    }
}

pub fn run_color(
    g: &TwoDistGraph,
    order: &VertexOrder,
    spec: &RunSpec,
    checkpoint_path: Option<&Path>,
    resume: bool,
) -> Result<RunOutput, CliError> {
    if spec.threads == 0 {
        return Err(CliError::Usage(String::from("at least one thread required")));
    }
    if spec.shard_count == 0 || spec.shard_id >= spec.shard_count {
        return Err(CliError::Usage(format!(
            "shard {}/{} is invalid",
            spec.shard_id, spec.shard_count
        )));
    }
    if order.order.len() != g.n() || !order.is_permutation() {
        return Err(CliError::Usage(String::from("vertex order must permute the graph")));
    }

    let header = CheckpointHeader {
        graph_digest: crate::formats::graph_digest_raw(g),
        k: spec.k,
        keydepth: spec.keydepth,
        shard_id: spec.shard_id,
        shard_count: spec.shard_count,
        threads: spec.threads,
        n: g.n() as u32,
    };

    let initial = if resume {
        let path = checkpoint_path.ok_or_else(|| {
            CliError::Usage(String::from("--resume requires --checkpoint <path>"))
        })?;
        let data = CheckpointData::read(path)?;
        if data.header != header {
            return Err(CliError::Usage(String::from(
                "checkpoint does not match this graph and configuration",
            )));
        }
        data
    } else {
        CheckpointData::fresh(header)
    };

    let resume_calls: Vec<u64> = initial.subshards.iter().map(|s| s.calls_done).collect();
    let resumed_colorings: u64 = initial
        .subshards
        .iter()
        .map(|s| s.colorings.len() as u64)
        .sum();

    let sink = Mutex::new(checkpoint_path.map(|p| CkptSink {
        path: p.to_path_buf(),
        data: initial.clone(),
    }));

    let adj = g.adjacency().permute(&order.order);
    let ncpu = spec.shard_count * spec.threads;
    let n = g.n();

    // validate each worker's config up front so workers cannot fail
    for j in 0..spec.threads {
        SearchConfig {
            k: spec.k,
            keydepth: spec.keydepth,
            shard_id: spec.shard_id + spec.shard_count * j,
            shard_count: ncpu,
            checkpoint_interval: spec.checkpoint_interval,
        }
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    }

    let mut workers: Vec<WorkerReport> = Vec::with_capacity(spec.threads as usize);
    let mut leftovers: Vec<Vec<u8>> = Vec::new();
    let mut sink_error: Option<CliError> = None;

    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(spec.threads as usize);
        for j in 0..spec.threads {
            let cfg = SearchConfig {
                k: spec.k,
                keydepth: spec.keydepth,
                shard_id: spec.shard_id + spec.shard_count * j,
                shard_count: ncpu,
                checkpoint_interval: spec.checkpoint_interval,
            };
            let adj = &adj;
            let order = &order.order;
            let sink = &sink;
            let resume_from = resume_calls[j as usize];
            handles.push(scope.spawn(move || {
                let pending = std::cell::RefCell::new(Vec::<Vec<u8>>::new());
                let mut io_err: Option<CliError> = None;
                let outcome = run_shard(
                    adj,
                    &cfg,
                    resume_from,
                    true,
                    |colors| {
                        let mut classes = vec![0u8; n];
                        for (rank, &v) in order.iter().enumerate() {
                            classes[v as usize] = colors[rank];
                        }
                        pending.borrow_mut().push(classes);
                    },
                    |progress| {
                        if io_err.is_some() {
                            return;
                        }
                        let mut guard = sink.lock().expect("checkpoint lock");
                        if let Some(ck) = guard.as_mut() {
                            let mut buf = pending.borrow_mut();
                            if let Err(e) =
                                ck.post(j as usize, progress.calls_completed, &mut buf)
                            {
                                io_err = Some(e);
                            }
                        }
                    },
                )
                .expect("worker config validated");
                (j, outcome, pending.into_inner(), io_err)
            }));
        }
        for handle in handles {
            let (j, outcome, pending, io_err) = handle.join().expect("worker panicked");
            if let Some(e) = io_err {
                sink_error.get_or_insert(e);
            }
            let restored = initial.subshards[j as usize].colorings.len() as u64;
            workers.push(WorkerReport {
                cpu: spec.shard_id + spec.shard_count * j,
                ncpu,
                stats: outcome.stats,
                count: outcome.count + restored,
            });
            leftovers.extend(pending);
        }
    });
    if let Some(e) = sink_error {
        return Err(e);
    }

    // settled colorings live in the checkpoint sink once one exists;
    // everything found after the last write is still in the leftovers
    let settled: Vec<Vec<u8>> = match sink.into_inner().expect("checkpoint lock") {
        Some(ck) => ck.data.subshards.into_iter().flat_map(|s| s.colorings).collect(),
        None => initial.subshards.into_iter().flat_map(|s| s.colorings).collect(),
    };
    let mut colorings: Vec<CanonicalColoring> = settled
        .into_iter()
        .chain(leftovers)
        .map(|classes| CanonicalColoring { classes })
        .collect();
    colorings.sort();
    debug_assert_eq!(
        colorings.len() as u64,
        workers.iter().map(|w| w.count).sum::<u64>()
    );
    Ok(RunOutput {
        colorings,
        workers,
        resumed_colorings,
    })
}
