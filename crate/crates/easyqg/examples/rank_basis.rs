//! Exact rank of realized spanning sets: the free families become bases for
//! n >= 4, while small n degenerates the span (the Sn diagram basis keeps
//! only diagrams with at most n blocks).
//!
//! Run with: cargo run --example rank_basis

use easyqg::{
    diagram_basis_sn, enumerate_spanning, rank_of_span, realize, FamilyId, GroupSpec, Word,
};

fn main() -> easyqg::Result<()> {
    let wk: Word = "ww".parse()?;
    let wl: Word = "ww".parse()?;

    println!("spanning-set ranks at ({wk}, {wl}):");
    for family in [
        FamilyId::Sn,
        FamilyId::SnPlus,
        FamilyId::OnPlus,
        FamilyId::HnPlus,
        FamilyId::BnPlus,
    ] {
        for n in [2usize, 4] {
            let spec = GroupSpec::new(family, n)?;
            let mats: Vec<_> = enumerate_spanning(&spec, &wk, &wl)?
                .iter()
                .map(|d| realize(d, n))
                .collect::<easyqg::Result<_>>()?;
            let report = rank_of_span(&mats)?;
            println!(
                "  {family:>4} n={n}: count={} rank={} basis={}",
                report.count, report.rank, report.is_basis
            );
        }
    }

    // The Sn diagram basis discards dependent diagrams up front.
    let spec = GroupSpec::new(FamilyId::Sn, 2)?;
    let basis: Vec<_> = diagram_basis_sn(&spec, &wk, &wl)?
        .iter()
        .map(|d| realize(d, 2))
        .collect::<easyqg::Result<_>>()?;
    let report = rank_of_span(&basis)?;
    println!(
        "\nsn diagram basis at n=2: count={} rank={} basis={}",
        report.count, report.rank, report.is_basis
    );
    Ok(())
}
