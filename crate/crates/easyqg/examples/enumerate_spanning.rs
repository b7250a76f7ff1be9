//! Enumerate the spanning diagram sets for each family at a fixed word pair.
//!
//! Run with: cargo run --example enumerate_spanning

use easyqg::{enumerate_spanning, FamilyId, GroupSpec, Word};

fn main() -> easyqg::Result<()> {
    let wk: Word = "ww".parse()?;
    let wl: Word = "ww".parse()?;

    println!("spanning sets for bottom = {wk}, top = {wl}:\n");
    for family in FamilyId::ALL {
        let spec = GroupSpec::new(family, 2)?;
        let (wk, wl) = if family.is_two_coloured() {
            ("wb".parse()?, "bw".parse()?)
        } else {
            (wk.clone(), wl.clone())
        };
        let spanning = enumerate_spanning(&spec, &wk, &wl)?;
        println!("{family:>5}  ({wk} -> {wl})  {} diagrams", spanning.len());
        for d in &spanning {
            println!("       {d}");
        }
    }
    Ok(())
}
