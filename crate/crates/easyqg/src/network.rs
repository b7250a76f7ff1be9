//! Multi-layer linear equivariant networks: a chain of words with one weight
//! matrix per layer, built from the family's spanning sets, with end-to-end
//! equivariance verification. Activations are fixed to the identity, so the
//! network is the product of its layer matrices.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::catalog::{enumerate_spanning, GroupSpec};
use crate::error::{Error, Result};
use crate::realize::{weight_matrix_capped, ComplexMatrix, WeightAssignment, DEFAULT_DIM_CAP};
use crate::verify::{check_equivariance, EquivarianceReport, SampleConfig};
use crate::word::Word;

/// Weights for one layer: explicit values aligned with the spanning set, or
/// a deterministic random descriptor.
#[derive(Clone, Debug)]
pub enum LayerWeights {
    Explicit(Vec<Complex64>),
    Random { seed: u64, scale: Option<f64> },
}

/// One layer: domain word, codomain word and its weights.
#[derive(Clone, Debug)]
pub struct LayerSpec {
    pub word_in: Word,
    pub word_out: Word,
    pub weights: LayerWeights,
}

/// A network: the group plus a chained list of layers.
#[derive(Clone, Debug)]
pub struct NetworkSpec {
    pub spec: GroupSpec,
    pub layers: Vec<LayerSpec>,
}

impl NetworkSpec {
    /// Validates the chain invariant; the error names the offending layer.
    pub fn validate(&self) -> Result<()> {
        if self.layers.is_empty() {
            return Err(Error::EmptyNetwork);
        }
        for (i, pair) in self.layers.windows(2).enumerate() {
            if pair[0].word_out != pair[1].word_in {
                return Err(Error::ChainBreak {
                    layer: i + 1,
                    previous: pair[0].word_out.to_string(),
                    next: pair[1].word_in.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn word_in(&self) -> &Word {
        &self.layers.first().expect("validated non-empty").word_in
    }

    pub fn word_out(&self) -> &Word {
        &self.layers.last().expect("validated non-empty").word_out
    }
}

/// Expands a random descriptor into explicit weights: independent complex
/// Gaussians scaled by `scale` (default 1/sqrt(spanning-set size), keeping
/// layer norms O(1)).
fn draw_weights(count: usize, seed: u64, scale: Option<f64>) -> Vec<Complex64> {
    let scale = scale.unwrap_or_else(|| {
        if count == 0 {
            1.0
        } else {
            1.0 / (count as f64).sqrt()
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re * scale, im * scale)
        })
        .collect()
}

/// Builds one weight matrix per layer. Random descriptors expand
/// deterministically from their seed.
pub fn build_network(ns: &NetworkSpec) -> Result<Vec<ComplexMatrix>> {
    build_network_capped(ns, DEFAULT_DIM_CAP)
}

pub fn build_network_capped(ns: &NetworkSpec, cap: usize) -> Result<Vec<ComplexMatrix>> {
    ns.validate()?;
    let mut mats = Vec::with_capacity(ns.layers.len());
    for layer in &ns.layers {
        let spanning = enumerate_spanning(&ns.spec, &layer.word_in, &layer.word_out)?;
        let weights = match &layer.weights {
            LayerWeights::Explicit(w) => {
                if w.len() != spanning.len() {
                    return Err(Error::WeightMismatch {
                        expected: spanning.len(),
                        got: w.len(),
                    });
                }
                w.clone()
            }
            LayerWeights::Random { seed, scale } => draw_weights(spanning.len(), *seed, *scale),
        };
        let assignment = WeightAssignment::new(spanning, weights)?;
        mats.push(weight_matrix_capped(
            &ns.spec,
            &layer.word_in,
            &layer.word_out,
            &assignment,
            cap,
        )?);
    }
    Ok(mats)
}

/// Applies the layer matrices in order.
pub fn forward(network: &[ComplexMatrix], x: &[Complex64]) -> Result<Vec<Complex64>> {
    let first = network.first().ok_or(Error::EmptyNetwork)?;
    if x.len() != first.cols() {
        return Err(Error::InputLength {
            expected: first.cols(),
            got: x.len(),
        });
    }
    let mut state = x.to_vec();
    for layer in network {
        state = layer.matvec(&state)?;
    }
    Ok(state)
}

/// The end-to-end product `W_L ··· W_1`.
pub fn end_to_end(network: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let mut iter = network.iter();
    let mut acc = iter.next().ok_or(Error::EmptyNetwork)?.clone();
    for layer in iter {
        acc = layer.matmul(&acc)?;
    }
    Ok(acc)
}

/// Builds the network and checks the end-to-end product against sampled
/// elements: `‖F·u^{⊗w_0} − u^{⊗w_L}·F‖ ≤ tolerance`.
pub fn verify_network(ns: &NetworkSpec, cfg: &SampleConfig) -> Result<EquivarianceReport> {
    ns.validate()?;
    let network = build_network(ns)?;
    let product = end_to_end(&network)?;
    check_equivariance(&ns.spec, ns.word_in(), ns.word_out(), &[product], cfg)
}

/// On-disk network configuration:
/// `{family, n, layers: [{win, wout, weights: [{re, im}] | {seed, scale}}]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct NetworkConfig {
    pub family: String,
    pub n: usize,
    pub layers: Vec<LayerConfig>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LayerConfig {
    pub win: String,
    pub wout: String,
    pub weights: WeightsConfig,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightsConfig {
    Explicit(Vec<ComplexValue>),
    Random { seed: u64, scale: Option<f64> },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl NetworkConfig {
    pub fn to_network_spec(&self) -> Result<NetworkSpec> {
        let family = self.family.parse()?;
        let spec = GroupSpec::new(family, self.n)?;
        let layers = self
            .layers
            .iter()
            .map(|layer| {
                Ok(LayerSpec {
                    word_in: layer.win.parse()?,
                    word_out: layer.wout.parse()?,
                    weights: match &layer.weights {
                        WeightsConfig::Explicit(values) => LayerWeights::Explicit(
                            values.iter().map(|v| Complex64::new(v.re, v.im)).collect(),
                        ),
                        WeightsConfig::Random { seed, scale } => LayerWeights::Random {
                            seed: *seed,
                            scale: *scale,
                        },
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NetworkSpec { spec, layers })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FamilyId;
    use crate::verify::trial_seed;

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn random_layer(win: &str, wout: &str, seed: u64) -> LayerSpec {
        LayerSpec {
            word_in: word(win),
            word_out: word(wout),
            weights: LayerWeights::Random { seed, scale: None },
        }
    }

    fn three_layer_sn() -> NetworkSpec {
        NetworkSpec {
            spec: GroupSpec::new(FamilyId::Sn, 3).unwrap(),
            layers: vec![
                random_layer("ww", "ww", trial_seed(7, 0)),
                random_layer("ww", "w", trial_seed(7, 1)),
                random_layer("w", "ww", trial_seed(7, 2)),
            ],
        }
    }

    #[test]
    fn chain_break_names_the_layer() {
        let ns = NetworkSpec {
            spec: GroupSpec::new(FamilyId::Sn, 3).unwrap(),
            layers: vec![random_layer("ww", "w", 1), random_layer("ww", "w", 2)],
        };
        assert!(matches!(
            ns.validate(),
            Err(Error::ChainBreak { layer: 1, .. })
        ));
        let empty = NetworkSpec {
            spec: GroupSpec::new(FamilyId::Sn, 3).unwrap(),
            layers: vec![],
        };
        assert!(matches!(empty.validate(), Err(Error::EmptyNetwork)));
    }

    #[test]
    fn layer_shapes_follow_the_words() {
        let ns = NetworkSpec {
            spec: GroupSpec::new(FamilyId::Sn, 3).unwrap(),
            layers: vec![random_layer("ww", "w", 5), random_layer("w", "ww", 6)],
        };
        let network = build_network(&ns).unwrap();
        assert_eq!((network[0].rows(), network[0].cols()), (3, 9));
        assert_eq!((network[1].rows(), network[1].cols()), (9, 3));
    }

    #[test]
    fn explicit_weights_must_match_spanning_size() {
        let ns = NetworkSpec {
            spec: GroupSpec::new(FamilyId::On, 2).unwrap(),
            layers: vec![LayerSpec {
                word_in: word("ww"),
                word_out: word("ww"),
                weights: LayerWeights::Explicit(vec![Complex64::new(1.0, 0.0)]),
            }],
        };
        assert!(matches!(
            build_network(&ns),
            Err(Error::WeightMismatch {
                expected: 3,
                got: 1
            })
        ));
    }

    #[test]
    fn builds_are_deterministic() {
        let a = build_network(&three_layer_sn()).unwrap();
        let b = build_network(&three_layer_sn()).unwrap();
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.max_abs_diff(y).unwrap(), 0.0);
        }
    }

    #[test]
    fn forward_matches_the_explicit_product() {
        let network = build_network(&three_layer_sn()).unwrap();
        let product = end_to_end(&network).unwrap();
        let x: Vec<Complex64> = (0..9)
            .map(|i| Complex64::new(i as f64 * 0.25 - 1.0, 0.5 - i as f64 * 0.1))
            .collect();
        let stepped = forward(&network, &x).unwrap();
        let direct = product.matvec(&x).unwrap();
        let diff = stepped
            .iter()
            .zip(direct.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(diff <= 1e-12);
    }

    #[test]
    fn forward_is_linear() {
        let network = build_network(&three_layer_sn()).unwrap();
        let alpha = Complex64::new(0.3, -1.1);
        let x: Vec<Complex64> = (0..9)
            .map(|i| Complex64::new(1.0 + i as f64, -0.2))
            .collect();
        let y: Vec<Complex64> = (0..9)
            .map(|i| Complex64::new(0.1 * i as f64, 0.7))
            .collect();
        let combined: Vec<Complex64> = x.iter().zip(y.iter()).map(|(a, b)| alpha * a + b).collect();
        let lhs = forward(&network, &combined).unwrap();
        let fx = forward(&network, &x).unwrap();
        let fy = forward(&network, &y).unwrap();
        let diff = lhs
            .iter()
            .zip(fx.iter().zip(fy.iter()))
            .map(|(l, (a, b))| (l - (alpha * a + b)).norm())
            .fold(0.0, f64::max);
        assert!(diff <= 1e-10);
    }

    #[test]
    fn zero_and_identity_weight_networks() {
        let spec = GroupSpec::new(FamilyId::Sn, 2).unwrap();
        let spanning = enumerate_spanning(&spec, &word("w"), &word("w")).unwrap();
        // Weight 1 on the identity diagram, 0 elsewhere.
        let weights: Vec<Complex64> = spanning
            .iter()
            .map(|d| {
                if *d == crate::diagram::PartitionDiagram::identity(&word("w")) {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        let ns = NetworkSpec {
            spec,
            layers: vec![LayerSpec {
                word_in: word("w"),
                word_out: word("w"),
                weights: LayerWeights::Explicit(weights),
            }],
        };
        let network = build_network(&ns).unwrap();
        let x = vec![Complex64::new(2.0, 1.0), Complex64::new(-3.0, 0.5)];
        assert_eq!(forward(&network, &x).unwrap(), x);

        let zero = NetworkSpec {
            spec,
            layers: vec![LayerSpec {
                word_in: word("w"),
                word_out: word("w"),
                weights: LayerWeights::Explicit(vec![Complex64::new(0.0, 0.0); 2]),
            }],
        };
        let z = build_network(&zero).unwrap();
        let out = forward(&z, &x).unwrap();
        assert!(out.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn three_layer_network_is_equivariant() {
        let cfg = SampleConfig {
            samples: 25,
            seed: 7,
            tolerance: 1e-8,
        };
        let report = verify_network(&three_layer_sn(), &cfg).unwrap();
        assert!(report.all_pass, "max residual {}", report.max_residual());
    }

    #[test]
    fn forward_rejects_wrong_input_length() {
        let network = build_network(&three_layer_sn()).unwrap();
        let short = vec![Complex64::new(1.0, 0.0); 3];
        assert!(matches!(
            forward(&network, &short),
            Err(Error::InputLength {
                expected: 9,
                got: 3
            })
        ));
    }

    /// Per-layer passes at tolerance t imply an end-to-end pass at 10·t.
    #[test]
    fn layer_equivariance_composes() {
        use crate::verify::check_equivariance;
        let ns = NetworkSpec {
            spec: GroupSpec::new(FamilyId::On, 3).unwrap(),
            layers: vec![
                random_layer("ww", "w", 101),
                random_layer("w", "ww", 102),
                random_layer("ww", "ww", 103),
            ],
        };
        let tolerance = 1e-12;
        let cfg = SampleConfig {
            samples: 25,
            seed: 41,
            tolerance,
        };
        let network = build_network(&ns).unwrap();
        for (layer, spec_layer) in network.iter().zip(ns.layers.iter()) {
            let report = check_equivariance(
                &ns.spec,
                &spec_layer.word_in,
                &spec_layer.word_out,
                std::slice::from_ref(layer),
                &cfg,
            )
            .unwrap();
            assert!(report.all_pass, "layer residual {}", report.max_residual());
        }
        let end_cfg = SampleConfig {
            tolerance: 10.0 * tolerance,
            ..cfg
        };
        let report = verify_network(&ns, &end_cfg).unwrap();
        assert!(
            report.all_pass,
            "end-to-end residual {}",
            report.max_residual()
        );
    }

    #[test]
    fn non_spanning_layer_breaks_equivariance() {
        // Replace the middle layer by a matrix outside the spanning set.
        let ns = three_layer_sn();
        let mut network = build_network(&ns).unwrap();
        let mut bad = ComplexMatrix::zeros(3, 9);
        bad.set(0, 1, Complex64::new(1.0, 0.0));
        network[1] = bad;
        let product = end_to_end(&network).unwrap();
        let cfg = SampleConfig {
            samples: 25,
            seed: 9,
            tolerance: 1e-8,
        };
        let report =
            check_equivariance(&ns.spec, ns.word_in(), ns.word_out(), &[product], &cfg).unwrap();
        assert!(!report.all_pass);
    }

    #[test]
    fn config_round_trip() {
        let text = r#"{
            "family": "sn",
            "n": 3,
            "layers": [
                {"win": "ww", "wout": "w", "weights": {"seed": 4, "scale": 0.5}},
                {"win": "w", "wout": "w", "weights": [{"re": 1.0, "im": 0.0}, {"re": 0.0, "im": -2.0}]}
            ]
        }"#;
        let config: NetworkConfig = serde_json::from_str(text).unwrap();
        let ns = config.to_network_spec().unwrap();
        assert_eq!(ns.layers.len(), 2);
        assert!(ns.validate().is_ok());
        let network = build_network(&ns).unwrap();
        assert_eq!((network[0].rows(), network[0].cols()), (3, 9));
        assert_eq!((network[1].rows(), network[1].cols()), (3, 3));
    }
}
