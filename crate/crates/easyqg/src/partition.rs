//! Set partitions of `[m] = {1, …, m}` in a canonical form, plus enumeration
//! by restricted-growth strings.

use std::fmt;

use crate::error::{Error, Result};

/// Ground sizes above this need an explicit cap override: Bell(14) is already
/// close to 1.9e8 partitions.
pub const DEFAULT_GROUND_CAP: usize = 14;

/// A set partition of `{1, …, ground_size}` into nonempty blocks.
///
/// Canonical form: blocks sorted by their minimum element, elements ascending
/// within each block. Equality and formatting rely on this form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SetPartition {
    ground_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from blocks and validates that they partition
    /// `{1, …, ground_size}` exactly. Blocks are put into canonical form.
    pub fn from_blocks(ground_size: usize, blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut seen = vec![false; ground_size];
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition {
                    ground_size,
                    reason: "empty block".into(),
                });
            }
            let mut block = block;
            block.sort_unstable();
            for &v in &block {
                if v == 0 || v > ground_size {
                    return Err(Error::InvalidPartition {
                        ground_size,
                        reason: format!("element {v} out of range 1..={ground_size}"),
                    });
                }
                if seen[v - 1] {
                    return Err(Error::InvalidPartition {
                        ground_size,
                        reason: format!("duplicate element {v}"),
                    });
                }
                seen[v - 1] = true;
            }
            block.dedup();
            canonical.push(block);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition {
                ground_size,
                reason: format!("missing element {}", missing + 1),
            });
        }
        canonical.sort_by_key(|b| b[0]);
        Ok(SetPartition {
            ground_size,
            blocks: canonical,
        })
    }

    /// The all-singletons partition of `[m]`.
    pub fn singletons(m: usize) -> SetPartition {
        SetPartition {
            ground_size: m,
            blocks: (1..=m).map(|v| vec![v]).collect(),
        }
    }

    /// Parses the textual grammar `"{" block ("|" block)* "}"` with
    /// `block := int ("," int)*`. `"{}"` denotes the empty partition of `[0]`.
    pub fn parse(text: &str, ground_size: usize) -> Result<SetPartition> {
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::PartitionSyntax {
                reason: format!("expected braces around {text:?}"),
            })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return SetPartition::from_blocks(ground_size, Vec::new());
        }
        let mut blocks = Vec::new();
        for block_text in inner.split('|') {
            let mut block = Vec::new();
            for item in block_text.split(',') {
                let item = item.trim();
                let v: usize = item.parse().map_err(|_| Error::PartitionSyntax {
                    reason: format!("expected integer, got {item:?}"),
                })?;
                block.push(v);
            }
            blocks.push(block);
        }
        SetPartition::from_blocks(ground_size, blocks)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `v` (1-based element).
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&v).is_ok())
            .expect("element within ground set")
    }

    /// Block index for every element, as a vector indexed by `element - 1`.
    pub fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.ground_size];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                ids[v - 1] = i;
            }
        }
        ids
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str("}")
    }
}

/// Bell number B(m) as u128 (exact for m ≤ 25, far beyond the enumeration cap).
pub fn bell_number(m: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

/// All set partitions of `[m]` with the default ground cap.
pub fn enumerate_partitions(m: usize) -> Result<Vec<SetPartition>> {
    enumerate_partitions_capped(m, DEFAULT_GROUND_CAP)
}

/// All set partitions of `[m]`, in the lexicographic order of their
/// restricted-growth strings. Every partition comes out in canonical form and
/// the list is duplicate-free by construction.
pub fn enumerate_partitions_capped(m: usize, cap: usize) -> Result<Vec<SetPartition>> {
    if m > cap {
        return Err(Error::GroundCapExceeded { requested: m, cap });
    }
    if m == 0 {
        return Ok(vec![SetPartition {
            ground_size: 0,
            blocks: Vec::new(),
        }]);
    }
    let mut out = Vec::new();
    // Restricted-growth string: rgs[0] = 0, rgs[i] <= max(rgs[..i]) + 1.
    let mut rgs = vec![0usize; m];
    loop {
        out.push(partition_from_rgs(m, &rgs));
        // Advance to the next string in lexicographic order.
        let mut i = m;
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

fn partition_from_rgs(m: usize, rgs: &[usize]) -> SetPartition {
    let num_blocks = rgs.iter().copied().max().unwrap() + 1;
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); num_blocks];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i + 1);
    }
    // Block j of an RGS is opened at the first element not in blocks 0..j, so
    // the blocks are already sorted by minimum and elements ascend.
    SetPartition {
        ground_size: m,
        blocks,
    }
}
