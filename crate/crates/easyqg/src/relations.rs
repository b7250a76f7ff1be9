//! Symbolic emission of the defining relations `D u^{⊗w_k} = u^{⊗w_l} D`
//! per spanning diagram and matrix entry, serialized as noncommutative
//! polynomial equations in the generators u[i,j] and their adjoints u*[i,j],
//! plus a numeric check that substitutes sampled classical elements.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::catalog::{enumerate_spanning, FamilyId, GroupSpec};
use crate::error::{Error, Result};
use crate::realize::{multi_indices, realize_capped, ComplexMatrix, DEFAULT_DIM_CAP};
use crate::verify::{sample_element, trial_seed, SampleConfig};
use crate::word::{Colour, Word};

/// One generator occurrence: `u[i,j]` or, starred, `u*[i,j]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Factor {
    pub star: bool,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.star {
            write!(f, "u*[{},{}]", self.i, self.j)
        } else {
            write!(f, "u[{},{}]", self.i, self.j)
        }
    }
}

/// A relation `Σ coeff · monomial = constant`. Factor order inside a
/// monomial follows the tensor-leg position and is never reordered.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<Factor>)>,
    pub constant: i64,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (coeff, factors)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{coeff}")?;
            for factor in factors {
                write!(f, " * {factor}")?;
            }
        }
        write!(f, " = {}", self.constant)
    }
}

/// An emitted relation set for one family, dimension and word pair.
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub family: FamilyId,
    pub n: usize,
    pub wk: Word,
    pub wl: Word,
    pub relations: Vec<Relation>,
}

impl RelationSet {
    /// UTF-8 text form, one equation per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.relations {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

/// The ordered monomial `Π_t u^{c_t}[a_t, b_t]` for one word: u for white,
/// u* for black.
fn monomial(word: &Word, row: &[usize], col: &[usize]) -> Vec<Factor> {
    word.colours()
        .iter()
        .zip(row.iter().zip(col.iter()))
        .map(|(&colour, (&i, &j))| Factor {
            star: colour == Colour::Black,
            i,
            j,
        })
        .collect()
}

/// Emits, for every spanning diagram and entry (I, J), the equation
/// `Σ_K D[I,K]·m(K,J) − Σ_K m(I,K)·D[K,J] = 0` with the degree-zero part
/// moved to the right-hand side; identically zero equations are dropped.
pub fn emit_relations(spec: &GroupSpec, w_k: &Word, w_l: &Word) -> Result<RelationSet> {
    emit_relations_capped(spec, w_k, w_l, DEFAULT_DIM_CAP)
}

pub fn emit_relations_capped(
    spec: &GroupSpec,
    w_k: &Word,
    w_l: &Word,
    cap: usize,
) -> Result<RelationSet> {
    let n = spec.n;
    let spanning = enumerate_spanning(spec, w_k, w_l)?;
    let mut relations = Vec::new();
    let bottoms: Vec<Vec<usize>> = multi_indices(w_k.len(), n).collect();
    let tops: Vec<Vec<usize>> = multi_indices(w_l.len(), n).collect();

    for d in &spanning {
        let m = realize_capped(d, n, cap)?;
        // Row and column supports of the sparse 0/1 matrix.
        let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); m.rows()];
        let mut by_col: Vec<Vec<usize>> = vec![Vec::new(); m.cols()];
        for (r, c) in m.entries() {
            by_row[r].push(c);
            by_col[c].push(r);
        }
        for (row_flat, top_index) in tops.iter().enumerate() {
            for (col_flat, bottom_index) in bottoms.iter().enumerate() {
                let mut combined: BTreeMap<Vec<Factor>, i64> = BTreeMap::new();
                // Σ_K D[I,K] · m_{w_k}(K, J)
                for &k_flat in &by_row[row_flat] {
                    let k_index = &bottoms[k_flat];
                    *combined
                        .entry(monomial(w_k, k_index, bottom_index))
                        .or_insert(0) += 1;
                }
                // − Σ_K m_{w_l}(I, K) · D[K, J]
                for &k_flat in &by_col[col_flat] {
                    let k_index = &tops[k_flat];
                    *combined
                        .entry(monomial(w_l, top_index, k_index))
                        .or_insert(0) -= 1;
                }
                if let Some(relation) = canonicalize(combined) {
                    relations.push(relation);
                }
            }
        }
    }
    Ok(RelationSet {
        family: spec.family,
        n,
        wk: w_k.clone(),
        wl: w_l.clone(),
        relations,
    })
}

/// Moves the empty monomial to the right-hand side, drops zero coefficients,
/// and fixes the overall sign so the leading coefficient is positive.
fn canonicalize(combined: BTreeMap<Vec<Factor>, i64>) -> Option<Relation> {
    let mut constant = 0i64;
    let mut terms: Vec<(i64, Vec<Factor>)> = Vec::new();
    for (factors, coeff) in combined {
        if coeff == 0 {
            continue;
        }
        if factors.is_empty() {
            constant -= coeff;
        } else {
            terms.push((coeff, factors));
        }
    }
    if terms.is_empty() && constant == 0 {
        return None;
    }
    let flip = terms.first().map(|(c, _)| *c < 0).unwrap_or(constant < 0);
    if flip {
        constant = -constant;
        for (c, _) in terms.iter_mut() {
            *c = -*c;
        }
    }
    Some(Relation { terms, constant })
}

/// Parses the textual relation grammar back into structured relations.
/// Grammar: `term := coeff (" * " factor)*`, factors `u[i,j]` or `u*[i,j]`,
/// terms joined by " + ", suffix " = " const.
pub fn parse_relations(text: &str) -> Result<Vec<Relation>> {
    let mut relations = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once(" = ")
            .ok_or_else(|| Error::RelationSyntax {
                reason: format!("missing \" = \" in {line:?}"),
            })?;
        let constant: i64 = rhs.trim().parse().map_err(|_| Error::RelationSyntax {
            reason: format!("bad constant {rhs:?}"),
        })?;
        let mut terms = Vec::new();
        for term_text in lhs.split(" + ") {
            let mut pieces = term_text.split(" * ");
            let coeff_text = pieces.next().ok_or_else(|| Error::RelationSyntax {
                reason: "empty term".into(),
            })?;
            let coeff: i64 = coeff_text
                .trim()
                .parse()
                .map_err(|_| Error::RelationSyntax {
                    reason: format!("bad coefficient {coeff_text:?}"),
                })?;
            let mut factors = Vec::new();
            for piece in pieces {
                factors.push(parse_factor(piece.trim())?);
            }
            terms.push((coeff, factors));
        }
        relations.push(Relation { terms, constant });
    }
    Ok(relations)
}

fn parse_factor(text: &str) -> Result<Factor> {
    let (star, rest) = if let Some(rest) = text.strip_prefix("u*[") {
        (true, rest)
    } else if let Some(rest) = text.strip_prefix("u[") {
        (false, rest)
    } else {
        return Err(Error::UnknownSymbol {
            symbol: text.to_string(),
        });
    };
    let body = rest.strip_suffix(']').ok_or_else(|| Error::UnknownSymbol {
        symbol: text.to_string(),
    })?;
    let (i_text, j_text) = body.split_once(',').ok_or_else(|| Error::UnknownSymbol {
        symbol: text.to_string(),
    })?;
    let parse_index = |t: &str| -> Result<usize> {
        t.trim().parse().map_err(|_| Error::UnknownSymbol {
            symbol: text.to_string(),
        })
    };
    Ok(Factor {
        star,
        i: parse_index(i_text)?,
        j: parse_index(j_text)?,
    })
}

/// Per-relation numeric verdict.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationResidual {
    pub relation: String,
    pub residual: f64,
    pub pass: bool,
}

/// Numeric report for a relation set against sampled classical elements.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationReport {
    pub family: String,
    pub n: usize,
    pub tolerance: f64,
    pub samples: usize,
    pub results: Vec<RelationResidual>,
    pub all_pass: bool,
}

impl RelationReport {
    pub fn max_residual(&self) -> f64 {
        self.results.iter().map(|r| r.residual).fold(0.0, f64::max)
    }
}

/// Substitutes sampled elements of the family's classical counterpart into
/// every relation (entries commute; u*[i,j] is the complex conjugate) and
/// checks `|value| ≤ tolerance`. The relations are re-parsed from their text
/// form, so any malformed symbol surfaces as an error.
pub fn check_relations_numeric(
    rels: &RelationSet,
    family: FamilyId,
    n: usize,
    cfg: &SampleConfig,
) -> Result<RelationReport> {
    check_relations_text(&rels.to_text(), family, n, cfg)
}

/// Text-level variant of [`check_relations_numeric`].
pub fn check_relations_text(
    text: &str,
    family: FamilyId,
    n: usize,
    cfg: &SampleConfig,
) -> Result<RelationReport> {
    let relations = parse_relations(text)?;
    let mut residuals = vec![0.0f64; relations.len()];
    // At least one trial always runs.
    for trial in 0..cfg.samples.max(1) {
        let g = sample_element(family, n, trial_seed(cfg.seed, trial))?;
        for (idx, relation) in relations.iter().enumerate() {
            let value = evaluate(relation, &g, n)?;
            residuals[idx] = residuals[idx].max(value.norm());
        }
    }
    let results: Vec<RelationResidual> = relations
        .iter()
        .zip(residuals.iter())
        .map(|(relation, &residual)| RelationResidual {
            relation: relation.to_string(),
            residual,
            pass: residual <= cfg.tolerance,
        })
        .collect();
    let all_pass = results.iter().all(|r| r.pass);
    Ok(RelationReport {
        family: family.to_string(),
        n,
        tolerance: cfg.tolerance,
        samples: cfg.samples,
        results,
        all_pass,
    })
}

fn evaluate(relation: &Relation, g: &ComplexMatrix, n: usize) -> Result<Complex64> {
    let mut acc = Complex64::new(-(relation.constant as f64), 0.0);
    for (coeff, factors) in &relation.terms {
        let mut product = Complex64::new(*coeff as f64, 0.0);
        for factor in factors {
            if factor.i == 0 || factor.i > n || factor.j == 0 || factor.j > n {
                return Err(Error::UnknownSymbol {
                    symbol: factor.to_string(),
                });
            }
            let entry = g.get(factor.i - 1, factor.j - 1);
            product *= if factor.star { entry.conj() } else { entry };
        }
        acc += product;
    }
    Ok(acc)
}
