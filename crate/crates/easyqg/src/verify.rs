//! Numerical and exact verification: seeded sampling of classical group
//! elements, equivariance residuals for realized matrices, exact
//! functoriality checks of the diagram-to-matrix map, and exact closure
//! checks of the representation-category axioms.

use std::collections::HashMap;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::catalog::{enumerate_spanning, FamilyId, GroupSpec};
use crate::diagram::{DualityOrder, PartitionDiagram};
use crate::error::{Error, Result};
use crate::exact::IntRowSpace;
use crate::partition::enumerate_partitions_capped;
use crate::realize::{realize, realize_capped, ComplexMatrix, IntertwinerMatrix, DEFAULT_DIM_CAP};
use crate::word::{Colour, Word};

/// Sampling configuration: trial count, base seed, absolute tolerance on the
/// max-abs residual.
#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for SampleConfig {
    fn default() -> SampleConfig {
        SampleConfig {
            samples: 25,
            seed: 0,
            tolerance: 1e-8,
        }
    }
}

/// Fixed 64-bit odd mixing constant (the golden-ratio multiplier).
const SEED_MIX: u64 = 0x9E37_79B9_7F4A_7C15;

/// Per-trial seed: the base seed XORed with the mixed trial index. The
/// stream for trials 0..N is a prefix of the stream for 0..2N, so growing the
/// sample count never changes earlier draws.
pub fn trial_seed(base: u64, trial: usize) -> u64 {
    let mut x = (trial as u64).wrapping_add(1).wrapping_mul(SEED_MIX);
    x ^= x >> 31;
    x = x.wrapping_mul(SEED_MIX);
    x ^= x >> 29;
    base ^ x
}

/// One matrix's verdict inside an equivariance report.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramResidual {
    pub diagram: String,
    pub residual: f64,
    pub pass: bool,
    pub worst_seed: u64,
}

/// Equivariance check report; serializes to the documented JSON layout.
#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport {
    pub family: String,
    pub n: usize,
    pub wk: String,
    pub wl: String,
    pub tolerance: f64,
    pub samples: usize,
    /// Family actually sampled, plus the matrix model used for it.
    pub sampler: String,
    /// True when the family is a liberated quantum family, so the classical
    /// counterpart check is a necessary condition only.
    pub necessary_condition_only: bool,
    pub results: Vec<DiagramResidual>,
    pub all_pass: bool,
}

impl EquivarianceReport {
    pub fn max_residual(&self) -> f64 {
        self.results.iter().map(|r| r.residual).fold(0.0, f64::max)
    }
}

fn sampler_description(family: FamilyId) -> &'static str {
    match family {
        FamilyId::Sn => "uniform permutation matrix",
        FamilyId::On => "Haar orthogonal (Gram-Schmidt of a Gaussian)",
        FamilyId::Hn => "signed permutation matrix",
        FamilyId::Bn => "conjugated O(n-1) block fixing the all-ones vector",
        FamilyId::SnPrime => "global sign times a uniform permutation (Z2 x Sn)",
        FamilyId::BnPrime => "global sign times a bistochastic sample (Z2 x Bn)",
        FamilyId::Un => "Haar unitary (Gram-Schmidt of a complex Gaussian)",
        _ => "classical counterpart",
    }
}

/// Draws one element of the classical family (liberated families sample
/// their classical counterpart). Deterministic in the seed.
pub fn sample_element(family: FamilyId, n: usize, seed: u64) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    let classical = family.classical_counterpart();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match classical {
        FamilyId::Sn => permutation_matrix(n, &mut rng),
        FamilyId::Hn => {
            let mut m = permutation_matrix(n, &mut rng);
            for col in 0..n {
                if rng.gen::<bool>() {
                    for row in 0..n {
                        let v = m.get(row, col);
                        m.set(row, col, -v);
                    }
                }
            }
            m
        }
        FamilyId::On => haar_orthogonal(n, &mut rng),
        FamilyId::Un => haar_unitary(n, &mut rng),
        FamilyId::Bn => bistochastic_orthogonal(n, &mut rng),
        FamilyId::SnPrime => {
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            permutation_matrix(n, &mut rng).scaled(Complex64::new(sign, 0.0))
        }
        FamilyId::BnPrime => {
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            bistochastic_orthogonal(n, &mut rng).scaled(Complex64::new(sign, 0.0))
        }
        // classical_counterpart never returns a liberated family.
        _ => unreachable!("classical counterpart"),
    })
}

fn permutation_matrix(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    // Fisher-Yates.
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut m = ComplexMatrix::zeros(n, n);
    for (col, &row) in perm.iter().enumerate() {
        m.set(row, col, Complex64::new(1.0, 0.0));
    }
    m
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Gram-Schmidt with a second orthogonalization pass. The triangular factor
/// of the implicit QR has a positive diagonal by construction, which makes
/// the decomposition of a Gaussian matrix Haar distributed.
fn gram_schmidt(mut cols: Vec<Vec<Complex64>>) -> Vec<Vec<Complex64>> {
    let n = cols.len();
    for j in 0..n {
        for _ in 0..2 {
            for i in 0..j {
                let (settled, active) = cols.split_at_mut(j);
                let src = &settled[i];
                let dst = &mut active[0];
                let proj: Complex64 = src.iter().zip(dst.iter()).map(|(a, b)| a.conj() * b).sum();
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= proj * s;
                }
            }
        }
        let norm: f64 = cols[j].iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        for v in cols[j].iter_mut() {
            *v /= norm;
        }
    }
    cols
}

fn from_columns(cols: Vec<Vec<Complex64>>) -> ComplexMatrix {
    let n = cols.len();
    let mut m = ComplexMatrix::zeros(n, n);
    for (c, col) in cols.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            m.set(r, c, v);
        }
    }
    m
}

fn haar_orthogonal(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let cols = (0..n)
        .map(|_| (0..n).map(|_| Complex64::new(gaussian(rng), 0.0)).collect())
        .collect();
    from_columns(gram_schmidt(cols))
}

fn haar_unitary(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let cols = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Complex64::new(gaussian(rng), gaussian(rng)))
                .collect()
        })
        .collect();
    from_columns(gram_schmidt(cols))
}

/// `V · diag(1, Q) · Vᵀ` with V the fixed Householder reflection sending e₁
/// to n^{-1/2}(1, …, 1)ᵀ and Q a Haar element of O(n-1). Fixes the all-ones
/// vector on both sides, so rows and columns sum to 1.
fn bistochastic_orthogonal(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let v = householder_to_uniform(n);
    let mut inner = ComplexMatrix::identity(n);
    if n > 1 {
        let q = haar_orthogonal(n - 1, rng);
        for r in 0..n - 1 {
            for c in 0..n - 1 {
                inner.set(r + 1, c + 1, q.get(r, c));
            }
        }
    }
    v.matmul(&inner)
        .and_then(|m| m.matmul(&v.transpose()))
        .expect("square shapes agree")
}

/// Symmetric orthogonal V with first column n^{-1/2}(1, …, 1)ᵀ.
fn householder_to_uniform(n: usize) -> ComplexMatrix {
    let target = 1.0 / (n as f64).sqrt();
    let mut w: Vec<f64> = vec![-target; n];
    w[0] = 1.0 - target;
    let norm_sqr: f64 = w.iter().map(|x| x * x).sum();
    let mut v = ComplexMatrix::identity(n);
    if norm_sqr < 1e-300 {
        return v; // n = 1: e1 already equals the target.
    }
    for r in 0..n {
        for c in 0..n {
            let val = v.get(r, c).re - 2.0 * w[r] * w[c] / norm_sqr;
            v.set(r, c, Complex64::new(val, 0.0));
        }
    }
    v
}

/// Ordered tensor power `u^{⊗w}`: factor u for white, entrywise conjugate ū
/// for black; the empty word gives the 1×1 matrix [1].
pub fn rep_power(u: &ComplexMatrix, w: &Word) -> Result<ComplexMatrix> {
    if u.rows() != u.cols() {
        return Err(Error::ShapeMismatch {
            left_rows: u.rows(),
            left_cols: u.cols(),
            right_rows: u.cols(),
            right_cols: u.cols(),
        });
    }
    let mut acc = ComplexMatrix::scalar_one();
    for &colour in w.colours() {
        let factor = match colour {
            Colour::White => u.clone(),
            Colour::Black => u.conj(),
        };
        acc = acc.kronecker(&factor);
    }
    Ok(acc)
}

/// Max-abs residual of `D·uk − ul·D` using the sparsity of D.
fn sparse_residual(d: &IntertwinerMatrix, uk: &ComplexMatrix, ul: &ComplexMatrix) -> f64 {
    let rows = d.rows();
    let cols = d.cols();
    let mut left = ComplexMatrix::zeros(rows, cols);
    let mut right = ComplexMatrix::zeros(rows, cols);
    for (r, c) in d.entries() {
        for j in 0..cols {
            let v = left.get(r, j) + uk.get(c, j);
            left.set(r, j, v);
        }
        for i in 0..rows {
            let v = right.get(i, c) + ul.get(i, r);
            right.set(i, c, v);
        }
    }
    left.max_abs_diff(&right).expect("equal shapes")
}

fn dense_residual(m: &ComplexMatrix, uk: &ComplexMatrix, ul: &ComplexMatrix) -> Result<f64> {
    let left = m.matmul(uk)?;
    let right = ul.matmul(m)?;
    left.max_abs_diff(&right)
}

enum CheckedMatrix<'a> {
    Sparse(&'a IntertwinerMatrix),
    Dense(&'a ComplexMatrix),
}

fn check_equivariance_impl(
    spec: &GroupSpec,
    w_k: &Word,
    w_l: &Word,
    mats: &[(String, CheckedMatrix<'_>)],
    cfg: &SampleConfig,
) -> Result<EquivarianceReport> {
    let rows = spec.n.pow(w_l.len() as u32);
    let cols = spec.n.pow(w_k.len() as u32);
    for (_, m) in mats {
        let (mr, mc) = match m {
            CheckedMatrix::Sparse(s) => (s.rows(), s.cols()),
            CheckedMatrix::Dense(d) => (d.rows(), d.cols()),
        };
        if mr != rows || mc != cols {
            return Err(Error::ShapeMismatch {
                left_rows: rows,
                left_cols: cols,
                right_rows: mr,
                right_cols: mc,
            });
        }
    }

    let mut residuals = vec![0.0f64; mats.len()];
    let mut worst_seeds = vec![cfg.seed; mats.len()];
    // At least one trial always runs; a zero-sample report would pass
    // vacuously.
    for trial in 0..cfg.samples.max(1) {
        let seed = trial_seed(cfg.seed, trial);
        let g = sample_element(spec.family, spec.n, seed)?;
        let uk = rep_power(&g, w_k)?;
        let ul = rep_power(&g, w_l)?;
        for (i, (_, m)) in mats.iter().enumerate() {
            let r = match m {
                CheckedMatrix::Sparse(s) => sparse_residual(s, &uk, &ul),
                CheckedMatrix::Dense(d) => dense_residual(d, &uk, &ul)?,
            };
            if r > residuals[i] {
                residuals[i] = r;
                worst_seeds[i] = seed;
            }
        }
    }

    let results: Vec<DiagramResidual> = mats
        .iter()
        .zip(residuals.iter().zip(worst_seeds.iter()))
        .map(|((label, _), (&residual, &worst_seed))| DiagramResidual {
            diagram: label.clone(),
            residual,
            pass: residual <= cfg.tolerance,
            worst_seed,
        })
        .collect();
    let all_pass = results.iter().all(|r| r.pass);
    let sampled = spec.family.classical_counterpart();
    Ok(EquivarianceReport {
        family: spec.family.to_string(),
        n: spec.n,
        wk: w_k.to_string(),
        wl: w_l.to_string(),
        tolerance: cfg.tolerance,
        samples: cfg.samples,
        sampler: format!("{}: {}", sampled, sampler_description(sampled)),
        necessary_condition_only: !spec.family.is_classical(),
        results,
        all_pass,
    })
}

/// Checks `‖D·u^{⊗w_k} − u^{⊗w_l}·D‖ ≤ tolerance` for explicit matrices over
/// seeded samples of the family's (classical) elements.
pub fn check_equivariance(
    spec: &GroupSpec,
    w_k: &Word,
    w_l: &Word,
    mats: &[ComplexMatrix],
    cfg: &SampleConfig,
) -> Result<EquivarianceReport> {
    let labelled: Vec<(String, CheckedMatrix<'_>)> = mats
        .iter()
        .enumerate()
        .map(|(i, m)| (format!("matrix[{i}]"), CheckedMatrix::Dense(m)))
        .collect();
    check_equivariance_impl(spec, w_k, w_l, &labelled, cfg)
}

/// Realizes the family's full spanning set for `(w_k, w_l)` and checks every
/// matrix, labelling results by the diagram's canonical form.
pub fn check_spanning_equivariance(
    spec: &GroupSpec,
    w_k: &Word,
    w_l: &Word,
    cfg: &SampleConfig,
) -> Result<EquivarianceReport> {
    let spanning = enumerate_spanning(spec, w_k, w_l)?;
    let realized: Vec<IntertwinerMatrix> = spanning
        .iter()
        .map(|d| realize(d, spec.n))
        .collect::<Result<_>>()?;
    let labelled: Vec<(String, CheckedMatrix<'_>)> = realized
        .iter()
        .map(|m| (m.diagram().to_string(), CheckedMatrix::Sparse(m)))
        .collect();
    check_equivariance_impl(spec, w_k, w_l, &labelled, cfg)
}

/// Outcome of the exact functoriality property suite.
#[derive(Clone, Debug, Serialize)]
pub struct FunctorialityReport {
    pub n: usize,
    pub trials: usize,
    pub composition_checked: usize,
    pub tensor_checked: usize,
    pub involution_checked: usize,
    pub first_failure: Option<String>,
    pub pass: bool,
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| {
                if rng.gen::<bool>() {
                    Colour::White
                } else {
                    Colour::Black
                }
            })
            .collect(),
    )
}

fn random_partition_diagram(rng: &mut ChaCha8Rng, top: Word, bottom: Word) -> PartitionDiagram {
    let m = top.len() + bottom.len();
    // Random restricted-growth string.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 1..=m {
        let choice = rng.gen_range(0..=blocks.len());
        if choice == blocks.len() {
            blocks.push(vec![v]);
        } else {
            blocks[choice].push(v);
        }
    }
    let partition = crate::partition::SetPartition::from_blocks(m, blocks)
        .expect("growth strings produce valid partitions");
    PartitionDiagram::new(top, bottom, partition).expect("sizes agree")
}

/// Exact integer checks of the three functor identities on random diagrams:
/// composition picks up n^c for c removed loops, tensor realizes as the
/// Kronecker product, involution realizes as the transpose.
pub fn check_functoriality(
    n: usize,
    trials: usize,
    seed: u64,
    max_len: usize,
) -> Result<FunctorialityReport> {
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    let mut first_failure = None;
    let mut composition_checked = 0;
    let mut tensor_checked = 0;
    let mut involution_checked = 0;

    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, trial));

        // (a) Composition: d2 ∘ d1 with a shared middle word.
        let wa = random_word(&mut rng, max_len);
        let wb = random_word(&mut rng, max_len);
        let wc = random_word(&mut rng, max_len);
        let d1 = random_partition_diagram(&mut rng, wb.clone(), wa.clone());
        let d2 = random_partition_diagram(&mut rng, wc.clone(), wb.clone());
        let composed = d2.compose(&d1)?;
        let product = realize(&d2, n)?
            .to_int_matrix()
            .matmul(&realize(&d1, n)?.to_int_matrix())?;
        let scale = (n as i64).pow(composed.loops_removed as u32);
        let expected = realize(&composed.diagram, n)?.to_int_matrix().scaled(scale);
        composition_checked += 1;
        if product != expected && first_failure.is_none() {
            first_failure = Some(format!(
                "composition failed at trial {trial}: {d2} over {d1}"
            ));
        }

        // (b) Tensor product realizes as the Kronecker product.
        let wd = random_word(&mut rng, max_len);
        let we = random_word(&mut rng, max_len);
        let d3 = random_partition_diagram(&mut rng, wd, we);
        let tensored = realize(&d1.tensor(&d3), n)?.to_int_matrix();
        let kron = realize(&d1, n)?
            .to_int_matrix()
            .kronecker(&realize(&d3, n)?.to_int_matrix());
        tensor_checked += 1;
        if tensored != kron && first_failure.is_none() {
            first_failure = Some(format!("tensor failed at trial {trial}: {d1} ⊗ {d3}"));
        }

        // (c) Involution realizes as the transpose.
        let reflected = realize(&d2.involute(), n)?.to_int_matrix();
        let transposed = realize(&d2, n)?.to_int_matrix().transpose();
        involution_checked += 1;
        if reflected != transposed && first_failure.is_none() {
            first_failure = Some(format!("involution failed at trial {trial}: {d2}"));
        }
    }

    Ok(FunctorialityReport {
        n,
        trials,
        composition_checked,
        tensor_checked,
        involution_checked,
        pass: first_failure.is_none(),
        first_failure,
    })
}

/// One axiom's verdict inside a category-axiom report.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub checked: usize,
    pub pass: bool,
    pub first_failure: Option<String>,
}

/// Exact closure report for the five representation-category axioms.
#[derive(Clone, Debug, Serialize)]
pub struct CategoryAxiomReport {
    pub family: String,
    pub n: usize,
    pub max_len: usize,
    pub axioms: Vec<AxiomResult>,
    pub pass: bool,
}

/// Words of length 0..=max_len for the family: all colourings for the
/// two-coloured families, all-white otherwise.
fn word_universe(spec: &GroupSpec, max_len: usize) -> Vec<Word> {
    let mut words = Vec::new();
    for len in 0..=max_len {
        if spec.family.is_two_coloured() {
            for bits in 0..(1usize << len) {
                let colours = (0..len)
                    .map(|i| {
                        if bits >> i & 1 == 0 {
                            Colour::White
                        } else {
                            Colour::Black
                        }
                    })
                    .collect();
                words.push(Word::new(colours));
            }
        } else {
            words.push(Word::all_white(len));
        }
    }
    words
}

struct SpaceCache {
    spec: GroupSpec,
    cap: usize,
    spaces: HashMap<(Word, Word), (Vec<IntertwinerMatrix>, IntRowSpace)>,
}

impl SpaceCache {
    fn space(&mut self, wk: &Word, wl: &Word) -> Result<&(Vec<IntertwinerMatrix>, IntRowSpace)> {
        let key = (wk.clone(), wl.clone());
        if !self.spaces.contains_key(&key) {
            let spanning = enumerate_spanning(&self.spec, wk, wl)?;
            let realized: Vec<IntertwinerMatrix> = spanning
                .iter()
                .map(|d| realize_capped(d, self.spec.n, self.cap))
                .collect::<Result<_>>()?;
            let rows = self.spec.n.pow(wl.len() as u32);
            let cols = self.spec.n.pow(wk.len() as u32);
            let mut span = IntRowSpace::new(rows * cols);
            for m in &realized {
                span.insert(m.flat_row());
            }
            self.spaces.insert(key.clone(), (realized, span));
        }
        Ok(self.spaces.get(&key).unwrap())
    }
}

/// Checks the five category axioms by exact span membership over all word
/// pairs up to `max_len` (tensor targets are restricted to words that stay
/// within `max_len`).
pub fn check_category_axioms(spec: &GroupSpec, max_len: usize) -> Result<CategoryAxiomReport> {
    check_category_axioms_capped(spec, max_len, DEFAULT_DIM_CAP)
}

pub fn check_category_axioms_capped(
    spec: &GroupSpec,
    max_len: usize,
    cap: usize,
) -> Result<CategoryAxiomReport> {
    // Guard the largest space up front so the error names the offending size.
    let _ = enumerate_partitions_capped(0, crate::partition::DEFAULT_GROUND_CAP)?;
    let words = word_universe(spec, max_len);
    let mut cache = SpaceCache {
        spec: *spec,
        cap,
        spaces: HashMap::new(),
    };
    let mut axioms = Vec::new();

    // Axiom 1: tensor products land in the span of the concatenated space.
    {
        let mut checked = 0;
        let mut first_failure = None;
        for wk1 in &words {
            for wl1 in &words {
                for wk2 in &words {
                    for wl2 in &words {
                        let wk = wk1.concat(wk2);
                        let wl = wl1.concat(wl2);
                        if wk.len() > max_len || wl.len() > max_len {
                            continue;
                        }
                        let left = cache.space(wk1, wl1)?.0.clone();
                        let right = cache.space(wk2, wl2)?.0.clone();
                        for a in &left {
                            for b in &right {
                                let kron = a.to_int_matrix().kronecker(&b.to_int_matrix());
                                let (_, span) = cache.space(&wk, &wl)?;
                                checked += 1;
                                if !span.contains(&kron.flat_row()) && first_failure.is_none() {
                                    first_failure = Some(format!(
                                        "{} ⊗ {} escapes the ({wk}, {wl}) span",
                                        a.diagram(),
                                        b.diagram()
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        axioms.push(AxiomResult {
            axiom: "tensor closure".into(),
            checked,
            pass: first_failure.is_none(),
            first_failure,
        });
    }

    // Axiom 2: composable products land in the span of the outer space.
    {
        let mut checked = 0;
        let mut first_failure = None;
        for wk in &words {
            for wl in &words {
                for wm in &words {
                    let inner = cache.space(wk, wl)?.0.clone();
                    let outer = cache.space(wl, wm)?.0.clone();
                    for d1 in &inner {
                        for d2 in &outer {
                            let product = d2.to_int_matrix().matmul(&d1.to_int_matrix())?;
                            let (_, span) = cache.space(wk, wm)?;
                            checked += 1;
                            if !span.contains(&product.flat_row()) && first_failure.is_none() {
                                first_failure = Some(format!(
                                    "{} ∘ {} escapes the ({wk}, {wm}) span",
                                    d2.diagram(),
                                    d1.diagram()
                                ));
                            }
                        }
                    }
                }
            }
        }
        axioms.push(AxiomResult {
            axiom: "composition closure".into(),
            checked,
            pass: first_failure.is_none(),
            first_failure,
        });
    }

    // Axiom 3: transposes land in the span of the swapped space.
    {
        let mut checked = 0;
        let mut first_failure = None;
        for wk in &words {
            for wl in &words {
                let mats = cache.space(wk, wl)?.0.clone();
                for m in &mats {
                    let transposed = m.to_int_matrix().transpose();
                    let (_, span) = cache.space(wl, wk)?;
                    checked += 1;
                    if !span.contains(&transposed.flat_row()) && first_failure.is_none() {
                        first_failure = Some(format!(
                            "transpose of {} escapes the ({wl}, {wk}) span",
                            m.diagram()
                        ));
                    }
                }
            }
        }
        axioms.push(AxiomResult {
            axiom: "involution closure".into(),
            checked,
            pass: first_failure.is_none(),
            first_failure,
        });
    }

    // Axiom 4: the identity matrix lies in every (w, w) span.
    {
        let mut checked = 0;
        let mut first_failure = None;
        for w in &words {
            let dim = spec.n.pow(w.len() as u32);
            let identity = crate::realize::IntMatrix::identity(dim);
            let (_, span) = cache.space(w, w)?;
            checked += 1;
            if !span.contains(&identity.flat_row()) && first_failure.is_none() {
                first_failure = Some(format!("identity escapes the ({w}, {w}) span"));
            }
        }
        axioms.push(AxiomResult {
            axiom: "identity".into(),
            checked,
            pass: first_failure.is_none(),
            first_failure,
        });
    }

    // Axiom 5: the realized duality columns lie in the Hom(∅, pair) spans;
    // one-coloured families see the colour-coerced words.
    {
        let mut checked = 0;
        let mut first_failure = None;
        if max_len >= 2 {
            for order in [DualityOrder::WhiteBlack, DualityOrder::BlackWhite] {
                let d = PartitionDiagram::duality(order);
                let d = if spec.family.is_two_coloured() {
                    d
                } else {
                    d.coerced_white()
                };
                let column = realize_capped(&d, spec.n, cap)?;
                let empty = Word::empty();
                let (_, span) = cache.space(&empty, d.top())?;
                checked += 1;
                if !span.contains(&column.to_int_matrix().flat_row()) && first_failure.is_none() {
                    first_failure =
                        Some(format!("duality column escapes the (∅, {}) span", d.top()));
                }
            }
        }
        axioms.push(AxiomResult {
            axiom: "duality".into(),
            checked,
            pass: first_failure.is_none(),
            first_failure,
        });
    }

    let pass = axioms.iter().all(|a| a.pass);
    Ok(CategoryAxiomReport {
        family: spec.family.to_string(),
        n: spec.n,
        max_len,
        axioms,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GroupSpec;

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn cfg(samples: usize, seed: u64, tolerance: f64) -> SampleConfig {
        SampleConfig {
            samples,
            seed,
            tolerance,
        }
    }

    #[test]
    fn permutation_samples_have_one_unit_per_row_and_column() {
        let m = sample_element(FamilyId::Sn, 3, 41).unwrap();
        for r in 0..3 {
            let row: f64 = (0..3).map(|c| m.get(r, c).norm()).sum();
            let col: f64 = (0..3).map(|c| m.get(c, r).norm()).sum();
            assert_eq!(row, 1.0);
            assert_eq!(col, 1.0);
        }
    }

    #[test]
    fn bistochastic_samples_fix_the_all_ones_vector() {
        for seed in 0..5 {
            let m = sample_element(FamilyId::Bn, 3, seed).unwrap();
            let ones = vec![Complex64::new(1.0, 0.0); 3];
            let forward = m.matvec(&ones).unwrap();
            let backward = m.transpose().matvec(&ones).unwrap();
            for v in forward.iter().chain(backward.iter()) {
                assert!((v - Complex64::new(1.0, 0.0)).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn all_families_sample_unitary_matrices() {
        for family in FamilyId::ALL {
            for n in [1, 2, 3] {
                let m = sample_element(family, n, 7).unwrap();
                let gram = m.adjoint().matmul(&m).unwrap();
                let id = ComplexMatrix::identity(n);
                assert!(
                    gram.max_abs_diff(&id).unwrap() <= 1e-10,
                    "family {family}, n = {n}"
                );
            }
        }
        assert!(sample_element(FamilyId::Sn, 0, 1).is_err());
    }

    #[test]
    fn signed_permutations_have_unit_magnitude_entries() {
        let m = sample_element(FamilyId::Hn, 4, 11).unwrap();
        let mut nonzero = 0;
        for r in 0..4 {
            for c in 0..4 {
                let v = m.get(r, c);
                assert_eq!(v.im, 0.0);
                if v.re != 0.0 {
                    assert_eq!(v.re.abs(), 1.0);
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn sampling_is_deterministic_in_the_seed() {
        for family in [FamilyId::On, FamilyId::Un, FamilyId::Bn, FamilyId::SnPrime] {
            let a = sample_element(family, 3, 99).unwrap();
            let b = sample_element(family, 3, 99).unwrap();
            assert_eq!(a.max_abs_diff(&b).unwrap(), 0.0);
        }
    }

    #[test]
    fn rep_power_unfolds_to_kronecker_factors() {
        let u = sample_element(FamilyId::Un, 2, 5).unwrap();
        assert_eq!(rep_power(&u, &word("-")).unwrap().rows(), 1);
        assert!(rep_power(&ComplexMatrix::zeros(2, 3), &word("w")).is_err());
        let ww = rep_power(&u, &word("ww")).unwrap();
        assert_eq!(ww.max_abs_diff(&u.kronecker(&u)).unwrap(), 0.0);
        // ∘••∘ ↦ u ⊗ ū ⊗ ū ⊗ u
        let wbbw = rep_power(&u, &word("wbbw")).unwrap();
        let expected = u.kronecker(&u.conj()).kronecker(&u.conj()).kronecker(&u);
        assert_eq!(wbbw.max_abs_diff(&expected).unwrap(), 0.0);
    }

    #[test]
    fn rep_power_is_multiplicative_over_concatenation() {
        let a = word("wb");
        let b = word("bw");
        // Signed permutation entries are 0 or ±1, so the entry products are
        // exact and the split is bit-identical.
        let h = sample_element(FamilyId::Hn, 3, 13).unwrap();
        let joined = rep_power(&h, &a.concat(&b)).unwrap();
        let split = rep_power(&h, &a)
            .unwrap()
            .kronecker(&rep_power(&h, &b).unwrap());
        assert_eq!(joined.max_abs_diff(&split).unwrap(), 0.0);
        // Generic unitary entries only differ by product re-association.
        let u = sample_element(FamilyId::Un, 3, 13).unwrap();
        let joined = rep_power(&u, &a.concat(&b)).unwrap();
        let split = rep_power(&u, &a)
            .unwrap()
            .kronecker(&rep_power(&u, &b).unwrap());
        assert!(joined.max_abs_diff(&split).unwrap() <= 1e-15);
    }

    #[test]
    fn orthogonal_spanning_set_is_equivariant() {
        let spec = GroupSpec::new(FamilyId::On, 3).unwrap();
        let report =
            check_spanning_equivariance(&spec, &word("ww"), &word("ww"), &cfg(25, 1, 1e-8))
                .unwrap();
        assert!(report.all_pass, "max residual {}", report.max_residual());
        assert!(!report.necessary_condition_only);
    }

    #[test]
    fn identity_matrix_is_equivariant_for_every_family() {
        for family in FamilyId::ALL {
            let spec = GroupSpec::new(family, 2).unwrap();
            let w = if family.is_two_coloured() {
                word("wb")
            } else {
                word("ww")
            };
            let report = check_equivariance(
                &spec,
                &w,
                &w,
                &[ComplexMatrix::identity(4)],
                &cfg(5, 3, 1e-10),
            )
            .unwrap();
            assert!(report.all_pass, "family {family}");
        }
    }

    #[test]
    fn non_intertwiner_fails_with_unit_residual() {
        // A single 1 at position ((1,1),(1,2)) is not an Sn intertwiner.
        let spec = GroupSpec::new(FamilyId::Sn, 3).unwrap();
        let mut bad = ComplexMatrix::zeros(9, 9);
        bad.set(0, 1, Complex64::new(1.0, 0.0));
        let report =
            check_equivariance(&spec, &word("ww"), &word("ww"), &[bad], &cfg(25, 2, 1e-8)).unwrap();
        assert!(!report.all_pass);
        assert!((report.max_residual() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn liberated_families_flag_necessary_condition() {
        let spec = GroupSpec::new(FamilyId::SnPlus, 3).unwrap();
        let report =
            check_spanning_equivariance(&spec, &word("ww"), &word("ww"), &cfg(5, 4, 1e-8)).unwrap();
        assert!(report.all_pass);
        assert!(report.necessary_condition_only);
    }

    #[test]
    fn functoriality_suite_passes_exactly() {
        for n in [2, 3] {
            let report = check_functoriality(n, 60, 17, 3).unwrap();
            assert!(report.pass, "{:?}", report.first_failure);
            assert_eq!(report.composition_checked, 60);
        }
    }

    #[test]
    fn report_is_deterministic_and_monotone_in_samples() {
        let spec = GroupSpec::new(FamilyId::Un, 2).unwrap();
        let run = |samples| {
            check_spanning_equivariance(&spec, &word("wb"), &word("bw"), &cfg(samples, 123, 1e-8))
                .unwrap()
        };
        let a = run(10);
        let b = run(10);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let doubled = run(20);
        for (small, large) in a.results.iter().zip(doubled.results.iter()) {
            assert!(large.residual >= small.residual);
        }
    }

    #[test]
    fn duality_column_is_invariant_under_sampled_unitaries() {
        for n in [2usize, 3] {
            let d = PartitionDiagram::duality(DualityOrder::WhiteBlack);
            let column = realize(&d, n).unwrap().to_complex();
            for trial in 0..25 {
                let u = sample_element(FamilyId::Un, n, trial_seed(77, trial)).unwrap();
                let action = u.kronecker(&u.conj());
                let moved = action.matmul(&column).unwrap();
                assert!(moved.max_abs_diff(&column).unwrap() <= 1e-10);
            }
        }
    }

    #[test]
    fn category_axioms_hold_for_small_universes() {
        let spec = GroupSpec::new(FamilyId::Sn, 2).unwrap();
        let report = check_category_axioms(&spec, 2).unwrap();
        assert!(report.pass, "{:?}", report);
        // The (∘, ∘) spanning set contains the identity diagram itself.
        let id = PartitionDiagram::identity(&word("w"));
        let spanning = enumerate_spanning(&spec, &word("w"), &word("w")).unwrap();
        assert!(spanning.contains(&id));
    }
}
