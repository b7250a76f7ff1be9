//! Build a three-layer linear equivariant network with seeded random
//! weights, push a vector through it, and verify end-to-end equivariance.
//!
//! Run with: cargo run --example equivariant_network

use easyqg::network::{
    build_network, end_to_end, forward, verify_network, LayerSpec, LayerWeights, NetworkSpec,
};
use easyqg::verify::SampleConfig;
use easyqg::{FamilyId, GroupSpec};
use num_complex::Complex64;

fn main() -> easyqg::Result<()> {
    let ns = NetworkSpec {
        spec: GroupSpec::new(FamilyId::Sn, 3)?,
        layers: vec![
            LayerSpec {
                word_in: "ww".parse()?,
                word_out: "w".parse()?,
                weights: LayerWeights::Random {
                    seed: 7,
                    scale: None,
                },
            },
            LayerSpec {
                word_in: "w".parse()?,
                word_out: "w".parse()?,
                weights: LayerWeights::Random {
                    seed: 8,
                    scale: None,
                },
            },
            LayerSpec {
                word_in: "w".parse()?,
                word_out: "ww".parse()?,
                weights: LayerWeights::Random {
                    seed: 9,
                    scale: None,
                },
            },
        ],
    };

    let network = build_network(&ns)?;
    for (i, layer) in network.iter().enumerate() {
        println!("layer {i}: {}x{}", layer.rows(), layer.cols());
    }

    let x: Vec<Complex64> = (0..9)
        .map(|i| Complex64::new(i as f64 / 3.0, -(i as f64) / 5.0))
        .collect();
    let y = forward(&network, &x)?;
    let direct = end_to_end(&network)?.matvec(&x)?;
    let diff = y
        .iter()
        .zip(direct.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("forward vs explicit product: max diff {diff:.2e}");

    let cfg = SampleConfig {
        samples: 25,
        seed: 7,
        tolerance: 1e-8,
    };
    let report = verify_network(&ns, &cfg)?;
    println!(
        "end-to-end equivariance over {} samples: max residual {:.2e}, pass = {}",
        report.samples,
        report.max_residual(),
        report.all_pass
    );
    Ok(())
}
