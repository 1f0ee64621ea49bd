//! Runs a few registered checks with a small corpus and prints the report.

use lamina::checks::{run_checks, Status, VerifyConfig};

fn main() {
    let ids: Vec<String> =
        ["lem-kcl-equiv", "thm-em2lcm", "prop-one-chord", "thm-notk-k4"].iter().map(|s| s.to_string()).collect();
    let config = VerifyConfig { corpus_count: 200, six_vertex_samples: 100, ..VerifyConfig::default() };
    for r in run_checks(&ids, config).unwrap() {
        println!("{:<16} {:?} in {} ms", r.check_id, r.status, r.elapsed_ms);
        if r.status == Status::Fail {
            if let Some(w) = r.witness {
                println!("  {}", w.detail);
            }
        }
    }
}
