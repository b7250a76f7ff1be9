//! The diagram-to-matrix functor at work: realize diagrams, then check the
//! composition, tensor and involution identities on a concrete pair.
//!
//! Run with: cargo run --example realize_diagrams

use easyqg::{realize, PartitionDiagram, SetPartition, Word};

fn show(d: &PartitionDiagram, n: usize) -> easyqg::Result<()> {
    let m = realize(d, n)?;
    println!(
        "{d}  realizes at n = {n} as {}x{} with {} ones",
        m.rows(),
        m.cols(),
        m.nnz()
    );
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        println!("    [{}]", row.join(" "));
    }
    Ok(())
}

fn main() -> easyqg::Result<()> {
    let n = 2;
    let ww: Word = "ww".parse()?;

    let swap = PartitionDiagram::new(ww.clone(), ww.clone(), SetPartition::parse("{1,4|2,3}", 4)?)?;
    let pair = PartitionDiagram::new(ww.clone(), ww.clone(), SetPartition::parse("{1,2|3,4}", 4)?)?;
    show(&swap, n)?;
    show(&pair, n)?;

    // Composition picks up one factor of n per removed middle loop.
    let composed = pair.compose(&pair)?;
    println!(
        "\npair ∘ pair removes {} middle loop(s); composed diagram {}",
        composed.loops_removed, composed.diagram
    );
    let lhs = realize(&pair, n)?
        .to_int_matrix()
        .matmul(&realize(&pair, n)?.to_int_matrix())?;
    let rhs = realize(&composed.diagram, n)?
        .to_int_matrix()
        .scaled((n as i64).pow(composed.loops_removed as u32));
    assert_eq!(lhs, rhs);
    println!("matrix product equals n^loops times the composed realization");

    // Tensor realizes as the Kronecker product.
    let tensored = realize(&swap.tensor(&pair), n)?.to_int_matrix();
    let kron = realize(&swap, n)?
        .to_int_matrix()
        .kronecker(&realize(&pair, n)?.to_int_matrix());
    assert_eq!(tensored, kron);
    println!("tensor realizes as the Kronecker product");

    // Involution realizes as the transpose.
    assert_eq!(
        realize(&swap.involute(), n)?.to_int_matrix(),
        realize(&swap, n)?.to_int_matrix().transpose()
    );
    println!("involution realizes as the transpose");
    Ok(())
}
