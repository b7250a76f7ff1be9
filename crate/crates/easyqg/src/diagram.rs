//! Two-coloured partition diagrams and the three diagram operations:
//! vertical composition (with loop counting), horizontal tensor product and
//! the reflection involution, plus crossing detection.
//!
//! Vertex numbering: the top row holds vertices `1..=l` left to right, the
//! bottom row holds `l+1..=l+k` left to right. The top row carries the
//! codomain word, the bottom row the domain word, so a diagram is a morphism
//! `bottom → top`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::word::{Colour, Word};

/// A set partition of the `l + k` row vertices together with the two words.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PartitionDiagram {
    top: Word,
    bottom: Word,
    partition: SetPartition,
}

/// Result of composing two diagrams: the glued diagram plus the number of
/// connected components that lay entirely in the removed middle row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComposedDiagram {
    pub loops_removed: usize,
    pub diagram: PartitionDiagram,
}

/// Which colour order the top-row pair of a duality diagram carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DualityOrder {
    WhiteBlack,
    BlackWhite,
}

impl PartitionDiagram {
    /// Builds a diagram, checking that the partition covers exactly the
    /// `len(top) + len(bottom)` row vertices.
    pub fn new(top: Word, bottom: Word, partition: SetPartition) -> Result<PartitionDiagram> {
        let expected = top.len() + bottom.len();
        if partition.ground_size() != expected {
            return Err(Error::InvalidPartition {
                ground_size: partition.ground_size(),
                reason: format!(
                    "diagram with top length {} and bottom length {} needs a partition of [{}]",
                    top.len(),
                    bottom.len(),
                    expected
                ),
            });
        }
        Ok(PartitionDiagram {
            top,
            bottom,
            partition,
        })
    }

    pub fn top(&self) -> &Word {
        &self.top
    }

    pub fn bottom(&self) -> &Word {
        &self.bottom
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// Codomain arity `l`.
    pub fn top_len(&self) -> usize {
        self.top.len()
    }

    /// Domain arity `k`.
    pub fn bottom_len(&self) -> usize {
        self.bottom.len()
    }

    /// Colour carried by a row vertex (1-based, top-then-bottom numbering).
    pub fn vertex_colour(&self, v: usize) -> Colour {
        let l = self.top_len();
        if v <= l {
            self.top.colour(v - 1)
        } else {
            self.bottom.colour(v - l - 1)
        }
    }

    /// Same diagram with both words forced all-white.
    pub fn coerced_white(&self) -> PartitionDiagram {
        PartitionDiagram {
            top: self.top.coerced_white(),
            bottom: self.bottom.coerced_white(),
            partition: self.partition.clone(),
        }
    }

    /// The identity diagram on a word: top = bottom = w with vertex `j` wired
    /// straight down to vertex `k + j`.
    pub fn identity(w: &Word) -> PartitionDiagram {
        let k = w.len();
        let blocks = (1..=k).map(|j| vec![j, k + j]).collect();
        PartitionDiagram {
            top: w.clone(),
            bottom: w.clone(),
            partition: SetPartition::from_blocks(2 * k, blocks)
                .expect("identity pairing is a valid partition"),
        }
    }

    /// The top-row pair diagram in `Hom(∅, ∘•)` or `Hom(∅, •∘)`, realizing
    /// the map `1 ↦ Σ eᵢ ⊗ eᵢ`.
    pub fn duality(order: DualityOrder) -> PartitionDiagram {
        let top = match order {
            DualityOrder::WhiteBlack => Word::new(vec![Colour::White, Colour::Black]),
            DualityOrder::BlackWhite => Word::new(vec![Colour::Black, Colour::White]),
        };
        PartitionDiagram {
            top,
            bottom: Word::empty(),
            partition: SetPartition::from_blocks(2, vec![vec![1, 2]])
                .expect("pair partition of two points"),
        }
    }

    /// Vertical composition `self ∘ other`: stacks `other` below `self`,
    /// gluing `other`'s top row to `self`'s bottom row. Middle-row-only
    /// components are removed and counted.
    pub fn compose(&self, other: &PartitionDiagram) -> Result<ComposedDiagram> {
        if self.bottom != *other.top() {
            return Err(Error::WordMismatch {
                left: other.top().to_string(),
                right: self.bottom.to_string(),
            });
        }
        let m = self.top_len(); // surviving top row
        let mid = self.bottom_len(); // glued middle row
        let k = other.bottom_len(); // surviving bottom row
        let total = m + mid + k;

        // Union-find over the stacked vertex set: top 1..=m, middle
        // m+1..=m+mid, bottom m+mid+1..=total. Vertices of `self` keep their
        // labels; vertices of `other` shift up by m.
        let mut uf = UnionFind::new(total);
        for block in self.partition.blocks() {
            for pair in block.windows(2) {
                uf.union(pair[0] - 1, pair[1] - 1);
            }
        }
        for block in other.partition().blocks() {
            for pair in block.windows(2) {
                uf.union(pair[0] + m - 1, pair[1] + m - 1);
            }
        }

        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); total];
        for v in 1..=total {
            classes[uf.find(v - 1)].push(v);
        }

        let mut loops_removed = 0;
        let mut blocks = Vec::new();
        for class in classes.into_iter().filter(|c| !c.is_empty()) {
            let survivors: Vec<usize> = class
                .iter()
                .filter(|&&v| v <= m || v > m + mid)
                // Bottom survivors drop down by the removed middle row.
                .map(|&v| if v <= m { v } else { v - mid })
                .collect();
            if survivors.is_empty() {
                loops_removed += 1;
            } else {
                blocks.push(survivors);
            }
        }

        Ok(ComposedDiagram {
            loops_removed,
            diagram: PartitionDiagram {
                top: self.top.clone(),
                bottom: other.bottom().clone(),
                partition: SetPartition::from_blocks(m + k, blocks)
                    .expect("merged classes partition the surviving vertices"),
            },
        })
    }

    /// Horizontal tensor product: places `self` to the left of `other`.
    pub fn tensor(&self, other: &PartitionDiagram) -> PartitionDiagram {
        let (l1, k1) = (self.top_len(), self.bottom_len());
        let (l2, k2) = (other.top_len(), other.bottom_len());
        // Combined numbering: top 1..=l1+l2 then bottom l1+l2+1..=l1+l2+k1+k2.
        let map_left = |v: usize| if v <= l1 { v } else { v + l2 };
        let map_right = |v: usize| if v <= l2 { v + l1 } else { v + l1 + k1 };

        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for block in self.partition.blocks() {
            blocks.push(block.iter().map(|&v| map_left(v)).collect());
        }
        for block in other.partition().blocks() {
            blocks.push(block.iter().map(|&v| map_right(v)).collect());
        }
        PartitionDiagram {
            top: self.top.concat(other.top()),
            bottom: self.bottom.concat(other.bottom()),
            partition: SetPartition::from_blocks(l1 + l2 + k1 + k2, blocks)
                .expect("shifted blocks partition the combined vertex set"),
        }
    }

    /// The involution: reflect in the horizontal axis. Words swap roles
    /// unchanged; vertex `j` of the old top becomes bottom position `j` and
    /// vertex `l+i` of the old bottom becomes top position `i`.
    pub fn involute(&self) -> PartitionDiagram {
        let l = self.top_len();
        let k = self.bottom_len();
        let relabel = |v: usize| if v <= l { k + v } else { v - l };
        let blocks = self
            .partition
            .blocks()
            .iter()
            .map(|block| block.iter().map(|&v| relabel(v)).collect())
            .collect();
        PartitionDiagram {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
            partition: SetPartition::from_blocks(l + k, blocks)
                .expect("relabelled blocks partition the reflected vertex set"),
        }
    }

    /// Boundary traversal order used for crossing detection: top row left to
    /// right, then bottom row right to left (a walk around the diagram's
    /// boundary).
    fn boundary_traversal(&self) -> Vec<usize> {
        let l = self.top_len();
        let k = self.bottom_len();
        (1..=l).chain((l + 1..=l + k).rev()).collect()
    }

    /// True iff two blocks interleave in boundary traversal order, i.e. some
    /// strands of the drawn diagram must cross.
    pub fn is_crossing(&self) -> bool {
        let ids = self.partition.block_ids();
        let traversal: Vec<usize> = self
            .boundary_traversal()
            .iter()
            .map(|&v| ids[v - 1])
            .collect();
        let num_blocks = self.partition.num_blocks();
        // Positions of each block along the traversal.
        let mut positions: Vec<Vec<usize>> = vec![Vec::new(); num_blocks];
        for (p, &b) in traversal.iter().enumerate() {
            positions[b].push(p);
        }
        // Two blocks cross iff their merged position sequence alternates at
        // least three times (pattern ABAB).
        for a in 0..num_blocks {
            for b in (a + 1)..num_blocks {
                if blocks_interleave(&positions[a], &positions[b]) {
                    return true;
                }
            }
        }
        false
    }
}

fn blocks_interleave(a: &[usize], b: &[usize]) -> bool {
    let mut transitions = 0;
    let mut last: Option<bool> = None;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i] < b[j]);
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
        if let Some(prev) = last {
            if prev != take_a {
                transitions += 1;
            }
        }
        last = Some(take_a);
    }
    transitions >= 3
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl fmt::Display for PartitionDiagram {
    /// Canonical DSL: `{blocks} : bottom -> top`, read as a morphism.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.partition, self.bottom, self.top)
    }
}
