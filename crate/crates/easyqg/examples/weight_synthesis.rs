//! Assemble an equivariant weight matrix: enumerate the spanning diagrams,
//! attach one complex weight per diagram, and sum the realized matrices.
//!
//! Run with: cargo run --example weight_synthesis

use easyqg::{enumerate_spanning, weight_matrix, FamilyId, GroupSpec, WeightAssignment, Word};
use num_complex::Complex64;

fn main() -> easyqg::Result<()> {
    let spec = GroupSpec::new(FamilyId::Bn, 2)?;
    let wk: Word = "ww".parse()?;
    let wl: Word = "ww".parse()?;

    let spanning = enumerate_spanning(&spec, &wk, &wl)?;
    println!(
        "{spec} has {} spanning diagrams at ({wk}, {wl})",
        spanning.len()
    );

    // One weight per diagram, in enumeration order.
    let weights: Vec<Complex64> = (0..spanning.len())
        .map(|i| Complex64::new(1.0 + i as f64, 0.5 * i as f64))
        .collect();
    let assignment = WeightAssignment::new(spanning, weights)?;
    let w = weight_matrix(&spec, &wk, &wl, &assignment)?;

    println!("weight matrix ({}x{}):", w.rows(), w.cols());
    for r in 0..w.rows() {
        let row: Vec<String> = (0..w.cols())
            .map(|c| {
                let v = w.get(r, c);
                format!("{:5.1}{:+4.1}i", v.re, v.im)
            })
            .collect();
        println!("  [{}]", row.join("  "));
    }
    Ok(())
}
