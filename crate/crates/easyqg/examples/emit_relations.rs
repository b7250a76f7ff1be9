//! Emit the defining relations D·u^{⊗w_k} = u^{⊗w_l}·D as noncommutative
//! polynomial equations, then substitute sampled classical elements to check
//! them numerically.
//!
//! Run with: cargo run --example emit_relations

use easyqg::relations::{check_relations_numeric, emit_relations};
use easyqg::verify::SampleConfig;
use easyqg::{FamilyId, GroupSpec, Word};

fn main() -> easyqg::Result<()> {
    let spec = GroupSpec::new(FamilyId::OnPlus, 3)?;
    let wk: Word = "-".parse()?;
    let wl: Word = "ww".parse()?;

    let rels = emit_relations(&spec, &wk, &wl)?;
    println!(
        "{spec} at ({wk} -> {wl}) emits {} relations:",
        rels.relations.len()
    );
    print!("{}", rels.to_text());

    let cfg = SampleConfig {
        samples: 10,
        seed: 3,
        tolerance: 1e-10,
    };
    let report = check_relations_numeric(&rels, spec.family, spec.n, &cfg)?;
    println!(
        "\nsubstituted {} samples: max residual {:.2e}, pass = {}",
        report.samples,
        report.max_residual(),
        report.all_pass
    );
    Ok(())
}
