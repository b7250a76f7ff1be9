//! Check every spanning matrix against sampled group elements: the residual
//! ‖D·u^{⊗w_k} − u^{⊗w_l}·D‖ must vanish for true intertwiners.
//!
//! Run with: cargo run --example verify_equivariance

use easyqg::verify::{check_spanning_equivariance, SampleConfig};
use easyqg::{FamilyId, GroupSpec, Word};

fn main() -> easyqg::Result<()> {
    let cfg = SampleConfig {
        samples: 25,
        seed: 1,
        tolerance: 1e-8,
    };

    for (family, n, wk, wl) in [
        (FamilyId::On, 3, "ww", "ww"),
        (FamilyId::Hn, 3, "www", "w"),
        (FamilyId::Bn, 3, "ww", "ww"),
        (FamilyId::Un, 2, "wb", "bw"),
        (FamilyId::SnPlus, 4, "ww", "ww"),
    ] {
        let spec = GroupSpec::new(family, n)?;
        let wk: Word = wk.parse()?;
        let wl: Word = wl.parse()?;
        let report = check_spanning_equivariance(&spec, &wk, &wl, &cfg)?;
        println!(
            "{spec} ({wk} -> {wl}): {} matrices, max residual {:.2e}, pass = {}{}",
            report.results.len(),
            report.max_residual(),
            report.all_pass,
            if report.necessary_condition_only {
                "  [classical counterpart: necessary condition only]"
            } else {
                ""
            }
        );
        for r in &report.results {
            println!("    {}  residual {:.2e}", r.diagram, r.residual);
        }
    }
    Ok(())
}
