//! Time the full enumeration of one of the built-in graphs.
//!
//! Usage: cargo run --release --example enumerate -- [G|H] [keydepth]

use std::time::Instant;

use twodist_core::graph::{build_g, build_h};
use twodist_core::search::{enumerate_colorings, SearchConfig};
use twodist_core::verify::standard_order;

fn main() {
    let target = std::env::args().nth(1).unwrap_or_else(|| String::from("G"));
    let g = match target.as_str() {
        "G" => build_g(),
        "H" => build_h(),
        other => panic!("unknown target {other}"),
    };
    let mut cfg = SearchConfig::new(5);
    if let Some(kd) = std::env::args().nth(2) {
        cfg.keydepth = kd.parse().expect("numeric keydepth");
    }
    let order = standard_order(&g);
    println!(
        "{target}: n={} m1={} m2={} keydepth={}",
        g.n(),
        g.m1(),
        g.m2(),
        cfg.keydepth
    );
    let t0 = Instant::now();
    let out = enumerate_colorings(&g, &order, &cfg).expect("valid config");
    println!(
        "{target}: count={} nodes={} calls={} forced={} elapsed={:?}",
        out.count,
        out.stats.nodes,
        out.stats.calls,
        out.stats.forced,
        t0.elapsed()
    );
}
