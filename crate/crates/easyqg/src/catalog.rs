//! The catalog of easy families: diagram predicates for the six orthogonal
//! groups, their seven free liberations, and the unitary pair U(n)/U(n)⁺,
//! plus spanning-set enumeration for any pair of words.

use std::fmt;
use std::str::FromStr;

use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions_capped, DEFAULT_GROUND_CAP};
use crate::word::{Colour, Word};

/// The fifteen cataloged easy families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyId {
    Sn,
    On,
    Hn,
    Bn,
    SnPrime,
    BnPrime,
    SnPlus,
    OnPlus,
    HnPlus,
    BnPlus,
    SnPrimePlus,
    BnPrimePlus,
    BnSharpPlus,
    Un,
    UnPlus,
}

impl FamilyId {
    pub const ALL: [FamilyId; 15] = [
        FamilyId::Sn,
        FamilyId::On,
        FamilyId::Hn,
        FamilyId::Bn,
        FamilyId::SnPrime,
        FamilyId::BnPrime,
        FamilyId::SnPlus,
        FamilyId::OnPlus,
        FamilyId::HnPlus,
        FamilyId::BnPlus,
        FamilyId::SnPrimePlus,
        FamilyId::BnPrimePlus,
        FamilyId::BnSharpPlus,
        FamilyId::Un,
        FamilyId::UnPlus,
    ];

    /// Families whose words carry both colours. Everything except U(n) and
    /// U(n)⁺ identifies u with ū, so words reduce to their lengths.
    pub fn is_two_coloured(self) -> bool {
        matches!(self, FamilyId::Un | FamilyId::UnPlus)
    }

    /// Families whose spanning sets keep only non-crossing diagrams.
    pub fn requires_non_crossing(self) -> bool {
        matches!(
            self,
            FamilyId::SnPlus
                | FamilyId::OnPlus
                | FamilyId::HnPlus
                | FamilyId::BnPlus
                | FamilyId::SnPrimePlus
                | FamilyId::BnPrimePlus
                | FamilyId::BnSharpPlus
                | FamilyId::UnPlus
        )
    }

    /// The classical family whose sampled elements satisfy this family's
    /// relations. Liberated families map to their sister group (the
    /// non-crossing relations are a subset of the classical ones), so the
    /// check is a necessary condition only.
    pub fn classical_counterpart(self) -> FamilyId {
        match self {
            FamilyId::SnPlus => FamilyId::Sn,
            FamilyId::OnPlus => FamilyId::On,
            FamilyId::HnPlus => FamilyId::Hn,
            FamilyId::BnPlus => FamilyId::Bn,
            FamilyId::SnPrimePlus => FamilyId::SnPrime,
            FamilyId::BnPrimePlus | FamilyId::BnSharpPlus => FamilyId::BnPrime,
            FamilyId::UnPlus => FamilyId::Un,
            other => other,
        }
    }

    /// True for the families that are honest compact matrix groups.
    pub fn is_classical(self) -> bool {
        self.classical_counterpart() == self
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(name: &str) -> Result<FamilyId> {
        match name.to_ascii_lowercase().as_str() {
            "sn" => Ok(FamilyId::Sn),
            "on" => Ok(FamilyId::On),
            "hn" => Ok(FamilyId::Hn),
            "bn" => Ok(FamilyId::Bn),
            "sn'" => Ok(FamilyId::SnPrime),
            "bn'" => Ok(FamilyId::BnPrime),
            "sn+" => Ok(FamilyId::SnPlus),
            "on+" => Ok(FamilyId::OnPlus),
            "hn+" => Ok(FamilyId::HnPlus),
            "bn+" => Ok(FamilyId::BnPlus),
            "sn'+" => Ok(FamilyId::SnPrimePlus),
            "bn'+" => Ok(FamilyId::BnPrimePlus),
            "bn#+" => Ok(FamilyId::BnSharpPlus),
            "un" => Ok(FamilyId::Un),
            "un+" => Ok(FamilyId::UnPlus),
            other => Err(Error::UnknownFamily { name: other.into() }),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyId::Sn => "sn",
            FamilyId::On => "on",
            FamilyId::Hn => "hn",
            FamilyId::Bn => "bn",
            FamilyId::SnPrime => "sn'",
            FamilyId::BnPrime => "bn'",
            FamilyId::SnPlus => "sn+",
            FamilyId::OnPlus => "on+",
            FamilyId::HnPlus => "hn+",
            FamilyId::BnPlus => "bn+",
            FamilyId::SnPrimePlus => "sn'+",
            FamilyId::BnPrimePlus => "bn'+",
            FamilyId::BnSharpPlus => "bn#+",
            FamilyId::Un => "un",
            FamilyId::UnPlus => "un+",
        };
        f.write_str(name)
    }
}

/// A family together with the fundamental dimension n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupSpec {
    pub family: FamilyId,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(family: FamilyId, n: usize) -> Result<GroupSpec> {
        if n == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(GroupSpec { family, n })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.family, self.n)
    }
}

/// True iff the diagram belongs to the family's category of partitions.
///
/// One-coloured families reject diagrams whose words contain black points;
/// coerce the words first (see [`canonical_words`]).
pub fn admits(spec: &GroupSpec, d: &PartitionDiagram) -> Result<bool> {
    if !spec.family.is_two_coloured() && !(d.top().is_all_white() && d.bottom().is_all_white()) {
        return Err(Error::ColouredWordRejected {
            family: spec.family.to_string(),
        });
    }
    let base = match spec.family {
        FamilyId::Sn | FamilyId::SnPlus => true,
        FamilyId::On | FamilyId::OnPlus => all_blocks_size(d, |s| s == 2),
        FamilyId::Hn | FamilyId::HnPlus => all_blocks_size(d, |s| s % 2 == 0),
        FamilyId::Bn | FamilyId::BnPlus => all_blocks_size(d, |s| s <= 2),
        FamilyId::SnPrime | FamilyId::SnPrimePlus => {
            let odd = d
                .partition()
                .blocks()
                .iter()
                .filter(|b| b.len() % 2 == 1)
                .count();
            odd % 2 == 0
        }
        FamilyId::BnPrime | FamilyId::BnPrimePlus | FamilyId::BnSharpPlus => {
            let singletons = d
                .partition()
                .blocks()
                .iter()
                .filter(|b| b.len() == 1)
                .count();
            all_blocks_size(d, |s| s <= 2) && singletons % 2 == 0
        }
        FamilyId::Un | FamilyId::UnPlus => unitary_pairing(d),
    };
    if !base {
        return Ok(false);
    }
    if spec.family.requires_non_crossing() && d.is_crossing() {
        return Ok(false);
    }
    if spec.family == FamilyId::BnSharpPlus && !alternating_pairs_mixed(d) {
        return Ok(false);
    }
    Ok(true)
}

fn all_blocks_size(d: &PartitionDiagram, ok: impl Fn(usize) -> bool) -> bool {
    d.partition().blocks().iter().all(|b| ok(b.len()))
}

/// Pairing rule for U(n): blocks come in pairs; two vertices of a block in
/// the same row carry different colours, vertices in different rows carry
/// equal colours.
fn unitary_pairing(d: &PartitionDiagram) -> bool {
    let l = d.top_len();
    d.partition().blocks().iter().all(|block| {
        if block.len() != 2 {
            return false;
        }
        let (x, y) = (block[0], block[1]);
        let same_row = (x <= l) == (y <= l);
        let same_colour = d.vertex_colour(x) == d.vertex_colour(y);
        if same_row {
            !same_colour
        } else {
            same_colour
        }
    })
}

/// Temporary alternating colouring used by Bₙ^{#+}: start with black in the
/// top right corner and alternate counterclockwise (top row right to left,
/// then bottom row left to right, ending bottom right). Every size-2 block
/// must pair one white with one black. The colouring is computed on the fly
/// and never stored on the diagram.
fn alternating_pairs_mixed(d: &PartitionDiagram) -> bool {
    let l = d.top_len();
    let temp_colour = |v: usize| -> Colour {
        let position = if v <= l { l - v } else { l + (v - l) - 1 };
        if position % 2 == 0 {
            Colour::Black
        } else {
            Colour::White
        }
    };
    d.partition().blocks().iter().all(|block| {
        if block.len() != 2 {
            return true;
        }
        temp_colour(block[0]) != temp_colour(block[1])
    })
}

/// Canonicalizes a word pair for a family: one-coloured families take
/// all-white words of the requested lengths, two-coloured families pass the
/// request through. Black points in a one-coloured request are rejected
/// unless `coerce` is set.
pub fn canonical_words(
    spec: &GroupSpec,
    k: usize,
    l: usize,
    requested: Option<(Word, Word)>,
    coerce: bool,
) -> Result<(Word, Word)> {
    if spec.family.is_two_coloured() {
        return Ok(requested.unwrap_or((Word::all_white(k), Word::all_white(l))));
    }
    match requested {
        None => Ok((Word::all_white(k), Word::all_white(l))),
        Some((wk, wl)) => {
            if wk.is_all_white() && wl.is_all_white() {
                Ok((wk, wl))
            } else if coerce {
                Ok((wk.coerced_white(), wl.coerced_white()))
            } else {
                Err(Error::ColouredWordRejected {
                    family: spec.family.to_string(),
                })
            }
        }
    }
}

/// All `(w_k, w_l)`-partition diagrams admitted by the family, in the
/// restricted-growth enumeration order of the underlying partitions.
pub fn enumerate_spanning(
    spec: &GroupSpec,
    w_k: &Word,
    w_l: &Word,
) -> Result<Vec<PartitionDiagram>> {
    enumerate_spanning_capped(spec, w_k, w_l, DEFAULT_GROUND_CAP)
}

/// [`enumerate_spanning`] with an explicit ground-size cap.
pub fn enumerate_spanning_capped(
    spec: &GroupSpec,
    w_k: &Word,
    w_l: &Word,
    cap: usize,
) -> Result<Vec<PartitionDiagram>> {
    let m = w_k.len() + w_l.len();
    let mut out = Vec::new();
    for p in enumerate_partitions_capped(m, cap)? {
        let d = PartitionDiagram::new(w_l.clone(), w_k.clone(), p)?;
        if admits(spec, &d)? {
            out.push(d);
        }
    }
    Ok(out)
}

/// The diagram basis for Sₙ: spanning diagrams with at most n blocks. The
/// realized matrices of this subfamily are linearly independent.
pub fn diagram_basis_sn(spec: &GroupSpec, w_k: &Word, w_l: &Word) -> Result<Vec<PartitionDiagram>> {
    if spec.family != FamilyId::Sn {
        return Err(Error::WrongFamily {
            expected: FamilyId::Sn.to_string(),
            got: spec.family.to_string(),
        });
    }
    Ok(enumerate_spanning(spec, w_k, w_l)?
        .into_iter()
        .filter(|d| d.partition().num_blocks() <= spec.n)
        .collect())
}
