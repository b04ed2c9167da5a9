//! Implementations behind the subcommands. Each returns the process
//! exit code on success so `main` stays a thin dispatcher.

use std::path::Path;
use std::time::Instant;

use twodist_core::cnf::{check_model, decode_canonical, export_dimacs_with, ModelError};
use twodist_core::graph::{build_g, build_h, build_k, TwoDistGraph};
use twodist_core::verify::{build_all, standard_order, verify_colorings, verify_construction, ConstructionBundle, VerdictReport};

use crate::cli::{Cli, Cmd, FileFormat, Target};
use crate::formats;
use crate::manifest::Manifest;
use crate::runner::{run_color, RunSpec};
use crate::CliError;

pub fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Cmd::Build { target, out, format } => cmd_build(target, &out, &format),
        Cmd::Color {
            target,
            k,
            keydepth,
            shard,
            threads,
            checkpoint_interval,
            checkpoint,
            resume,
            out,
        } => {
            let spec = RunSpec {
                k,
                keydepth,
                shard_id: shard.id,
                shard_count: shard.count,
                threads: threads.unwrap_or_else(default_threads),
                checkpoint_interval,
            };
            cmd_color(target, &spec, &out, checkpoint.as_deref(), resume)
        }
        Cmd::Verify {
            threads,
            out,
            #[cfg(debug_assertions)]
            inject_fault,
        } => {
            #[cfg(debug_assertions)]
            let fault = inject_fault;
            #[cfg(not(debug_assertions))]
            let fault = None;
            cmd_verify(threads.unwrap_or_else(default_threads), out.as_deref(), fault)
        }
        Cmd::ExportCnf {
            target,
            k,
            out,
            at_most_one,
        } => cmd_export_cnf(target, k, &out, at_most_one),
        Cmd::CheckModel {
            target,
            k,
            model,
            colorings,
        } => cmd_check_model(target, k, &model, colorings.as_deref()),
    }
}

pub fn default_threads() -> u32 {
    std::thread::available_parallelism()
        .map(|n| n.get() as u32)
        .unwrap_or(1)
}

pub fn build_target(target: Target) -> TwoDistGraph {
    match target {
        Target::G => build_g(),
        Target::H => build_h(),
        Target::K => build_k().graph,
    }
}

fn graph_summary(m: &mut Manifest, g: &TwoDistGraph) {
    m.push("graph.vertices", g.n());
    m.push("graph.edges1", g.m1());
    m.push("graph.edges2", g.m2());
    m.push("graph.digest", formats::graph_digest(g));
    for (v, label) in g.labels() {
        m.push(&format!("graph.label.{label}"), v);
    }
}

pub fn cmd_build(target: Target, out: &Path, requested: &[FileFormat]) -> Result<i32, CliError> {
    let t0 = Instant::now();
    let g = build_target(target);
    let formats_to_write: Vec<FileFormat> = if requested.is_empty() {
        match target {
            Target::K => vec![FileFormat::General, FileFormat::Edges],
            _ => vec![FileFormat::Lattice, FileFormat::General, FileFormat::Edges],
        }
    } else {
        requested.to_vec()
    };

    let mut manifest = Manifest::new("build");
    manifest.push("target", target.upper());
    graph_summary(&mut manifest, &g);

    for f in &formats_to_write {
        let (name, text) = match f {
            FileFormat::Lattice => (
                format!("{}.vertices.lattice.txt", target.lower()),
                formats::vertices_lattice(&g)?,
            ),
            FileFormat::General => (
                format!("{}.vertices.general.txt", target.lower()),
                formats::vertices_general(&g),
            ),
            FileFormat::Edges => (format!("{}.edges.txt", target.lower()), formats::edges_text(&g)),
        };
        formats::atomic_write(&out.join(&name), text.as_bytes())?;
        manifest.push("file", name);
    }
    manifest.push("wall_ms", t0.elapsed().as_millis());
    manifest.write(&out.join(format!("{}.manifest.txt", target.lower())))?;
    println!(
        "{}: vertices={} edges1={} edges2={}",
        target.upper(),
        g.n(),
        g.m1(),
        g.m2()
    );
    Ok(0)
}

pub fn cmd_color(
    target: Target,
    spec: &RunSpec,
    out: &Path,
    checkpoint: Option<&Path>,
    resume: bool,
) -> Result<i32, CliError> {
    let t0 = Instant::now();
    let g = build_target(target);
    let order = standard_order(&g);
    let run = run_color(&g, &order, spec, checkpoint, resume)?;

    let mut manifest = Manifest::new("color");
    manifest.push("target", target.upper());
    manifest.push("config.k", spec.k);
    manifest.push("config.keydepth", spec.keydepth);
    manifest.push("config.shard", format!("{}/{}", spec.shard_id, spec.shard_count));
    manifest.push("config.threads", spec.threads);
    manifest.push("config.checkpoint_interval", spec.checkpoint_interval);
    manifest.push("config.resume", resume);
    graph_summary(&mut manifest, &g);
    manifest.push("colorings.count", run.colorings.len());
    manifest.push("colorings.resumed", run.resumed_colorings);
    for w in &run.workers {
        manifest.push(
            &format!("worker.{}", w.cpu),
            format!(
                "ncpu={} count={} nodes={} calls={} forced={}",
                w.ncpu, w.count, w.stats.nodes, w.stats.calls, w.stats.forced
            ),
        );
    }
    manifest.push("wall_ms", t0.elapsed().as_millis());

    let text = formats::colorings_text(g.n(), spec.k, &run.colorings);
    formats::atomic_write(&out.join(format!("{}.colorings.txt", target.lower())), text.as_bytes())?;
    manifest.write(&out.join(format!("{}.color.manifest.txt", target.lower())))?;
    println!(
        "{}: colorings={} (k={}, shard {}/{})",
        target.upper(),
        run.colorings.len(),
        spec.k,
        spec.shard_id,
        spec.shard_count
    );
    Ok(0)
}

#[cfg(debug_assertions)]
fn build_bundle(fault: Option<crate::cli::FaultArg>) -> (ConstructionBundle, &'static str) {
    use twodist_core::verify::{build_all_with_fault, Fault};
    match fault {
        None => (build_all(), "none"),
        Some(crate::cli::FaultArg::DropVertex) => {
            (build_all_with_fault(Fault::DropVertex), "drop-vertex")
        }
        Some(crate::cli::FaultArg::PerturbCoord) => {
            (build_all_with_fault(Fault::PerturbCoord), "perturb-coord")
        }
        Some(crate::cli::FaultArg::DropEdge) => {
            (build_all_with_fault(Fault::DropEdge), "drop-edge")
        }
    }
}

#[cfg(not(debug_assertions))]
fn build_bundle(_fault: Option<core::convert::Infallible>) -> (ConstructionBundle, &'static str) {
    (build_all(), "none")
}

#[cfg(debug_assertions)]
type FaultParam = Option<crate::cli::FaultArg>;
#[cfg(not(debug_assertions))]
type FaultParam = Option<core::convert::Infallible>;

pub fn cmd_verify(threads: u32, out: Option<&Path>, fault: FaultParam) -> Result<i32, CliError> {
    let t0 = Instant::now();
    let (bundle, fault_name) = build_bundle(fault);
    let mut report = verify_construction(&bundle);

    if report.pass() {
        let spec = RunSpec {
            k: 5,
            keydepth: 17,
            shard_id: 0,
            shard_count: 1,
            threads,
            checkpoint_interval: 0,
        };
        let g_run = run_color(&bundle.g, &standard_order(&bundle.g), &spec, None, false)?;
        let h_run = run_color(&bundle.h, &standard_order(&bundle.h), &spec, None, false)?;
        verify_colorings(&bundle, &mut report, &g_run.colorings, &h_run.colorings);
    } else {
        report.enumeration_skipped = true;
    }

    let manifest = render_verdict(&report, fault_name, threads, t0);
    print!("{}", manifest.render());
    if let Some(dir) = out {
        manifest.write(&dir.join("verify.manifest.txt"))?;
    }
    Ok(if report.pass() { 0 } else { 1 })
}

fn render_verdict(report: &VerdictReport, fault: &str, threads: u32, t0: Instant) -> Manifest {
    let mut m = Manifest::new("verify");
    m.push("fault", fault);
    m.push("workers", threads);
    for (i, c) in report.checks.iter().enumerate() {
        m.push(
            &format!("check.{:02}.{}", i + 1, c.name),
            format!(
                "{} expected={} observed={}",
                if c.pass { "PASS" } else { "FAIL" },
                c.expected,
                c.observed
            ),
        );
    }
    if let Some(s) = &report.second_coincidence {
        m.push("k.second_coincidence", s);
    }
    if let Some(n) = report.g_classes_up_to_symmetry {
        m.push("g.colorings.up_to_symmetry", n);
    }
    if report.enumeration_skipped {
        m.push("enumeration", "skipped: construction checks failed");
    }
    for (i, line) in report.derivation.iter().enumerate() {
        m.push(&format!("derivation.{}", i + 1), line);
    }
    if let Some(first) = report.first_failure() {
        m.push("first_failure", &first.name);
    }
    m.push("verdict", if report.pass() { "PASS" } else { "FAIL" });
    m.push("wall_ms", t0.elapsed().as_millis());
    m
}

pub fn cmd_export_cnf(target: Target, k: u8, out: &Path, at_most_one: bool) -> Result<i32, CliError> {
    if k == 0 || k > 31 {
        return Err(CliError::Usage(format!("k={k} out of range 1..=31")));
    }
    let g = build_target(target);
    let cnf = export_dimacs_with(&g, k, at_most_one);
    let text = formats::dimacs_text(target.upper(), &g, k, &cnf);
    formats::atomic_write(out, text.as_bytes())?;
    println!(
        "{}: wrote {} (vars={} clauses={})",
        target.upper(),
        out.display(),
        cnf.num_vars,
        cnf.clauses.len()
    );
    Ok(0)
}

pub fn cmd_check_model(
    target: Target,
    k: u8,
    model_path: &Path,
    colorings_path: Option<&Path>,
) -> Result<i32, CliError> {
    let g = build_target(target);
    let text = std::fs::read_to_string(model_path).map_err(|e| CliError::io_ctx(model_path, e))?;
    let literals = formats::parse_model_literals(&text)?;
    let proper = match check_model(&g, k, &literals) {
        Ok(p) => p,
        Err(e @ (ModelError::Unassigned(_) | ModelError::OutOfRange(_) | ModelError::Contradictory(_))) => {
            return Err(CliError::Usage(format!("model invalid: {e}")));
        }
    };
    if !proper {
        println!("{}: model does not decode to a proper {k}-coloring", target.upper());
        return Ok(1);
    }
    println!("{}: model decodes to a proper {k}-coloring", target.upper());
    if let Some(path) = colorings_path {
        let file = std::fs::read_to_string(path).map_err(|e| CliError::io_ctx(path, e))?;
        let (n, file_k, rows) = formats::parse_colorings(&file)?;
        if n != g.n() || file_k != k {
            return Err(CliError::Usage(format!(
                "colorings file is for n={n} k={file_k}, expected n={} k={k}",
                g.n()
            )));
        }
        let order = standard_order(&g);
        let canon = decode_canonical(&g, k, &order, &literals)
            .expect("validated above")
            .expect("proper above");
        let member = rows.iter().any(|r| r == &canon.classes);
        if member {
            println!("{}: canonical form is among the {} listed colorings", target.upper(), rows.len());
        } else {
            println!("{}: canonical form is NOT among the listed colorings", target.upper());
            return Ok(1);
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_formats_for_k_skip_lattice() {
        let dir = std::env::temp_dir().join(format!("tdbuild-{}", std::process::id()));
        // K has vertices off the 1/12 lattice; requesting lattice must fail
        let err = cmd_build(Target::K, &dir, &[FileFormat::Lattice]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
