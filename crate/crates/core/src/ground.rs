//! Ordered ground sets of named vertices and bitmask subsets of them.
//!
//! A [`Ground`] fixes the vertex labels and their order once; every matrix,
//! graph, set system and subset built on top of it indexes rows, columns and
//! bits by that order. Cross-object operations require identical grounds.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on ground-set size. Matrix rows are stored as single `u32` words.
pub const MAX_VERTICES: usize = 32;

/// An ordered set of distinct vertex labels, shared by reference.
#[derive(Clone)]
pub struct Ground {
    labels: Arc<Vec<String>>,
}

impl Ground {
    /// Builds a ground set from labels, keeping their order.
    ///
    /// Labels must be non-empty and pairwise distinct; at most
    /// [`MAX_VERTICES`] of them.
    pub fn new<I, S>(labels: I) -> Result<Ground>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                count: labels.len(),
                cap: MAX_VERTICES,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::Parse {
                    offset: 0,
                    message: "empty vertex label".into(),
                });
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel { label: l.clone() });
            }
        }
        Ok(Ground {
            labels: Arc::new(labels),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> &str {
        &self.labels[pos]
    }

    /// Position of a label in ground order.
    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.position(label).ok_or_else(|| Error::UnknownVertex {
            label: label.to_string(),
        })
    }

    /// Bitmask with one bit per vertex, all set.
    pub fn full_mask(&self) -> u32 {
        if self.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.len()) - 1
        }
    }

    pub fn same_as(&self, other: &Ground) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl PartialEq for Ground {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Ground {}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ground({})", self.labels.join(" "))
    }
}

/// A subset of a ground set, one bit per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    ground: Ground,
    bits: u32,
}

impl VertexSet {
    pub fn empty(ground: &Ground) -> VertexSet {
        VertexSet {
            ground: ground.clone(),
            bits: 0,
        }
    }

    pub fn full(ground: &Ground) -> VertexSet {
        VertexSet {
            ground: ground.clone(),
            bits: ground.full_mask(),
        }
    }

    /// Subset from a raw bitmask (bit `i` = vertex at ground position `i`).
    ///
    /// Panics if the mask has bits outside the ground.
    pub fn from_bits(ground: &Ground, bits: u32) -> VertexSet {
        assert_eq!(
            bits & !ground.full_mask(),
            0,
            "bitmask {bits:#x} has bits outside the ground"
        );
        VertexSet {
            ground: ground.clone(),
            bits,
        }
    }

    pub fn from_labels<'a, I>(ground: &Ground, labels: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut bits = 0u32;
        for l in labels {
            bits |= 1 << ground.index_of(l)?;
        }
        Ok(VertexSet {
            ground: ground.clone(),
            bits,
        })
    }

    pub fn singleton(ground: &Ground, label: &str) -> Result<VertexSet> {
        Self::from_labels(ground, [label])
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains_pos(&self, pos: usize) -> bool {
        self.bits >> pos & 1 == 1
    }

    pub fn contains(&self, label: &str) -> bool {
        match self.ground.position(label) {
            Some(p) => self.contains_pos(p),
            None => false,
        }
    }

    /// Ground positions of the members, ascending.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ground.len()).filter(|&p| self.contains_pos(p))
    }

    /// Member labels in ground order.
    pub fn members(&self) -> impl Iterator<Item = &str> + '_ {
        self.positions().map(|p| self.ground.label(p))
    }

    fn check_same_ground(&self, other: &VertexSet) {
        assert!(
            self.ground.same_as(&other.ground),
            "vertex sets built over different grounds"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_same_ground(other);
        VertexSet {
            ground: self.ground.clone(),
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_same_ground(other);
        VertexSet {
            ground: self.ground.clone(),
            bits: self.bits & other.bits,
        }
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.check_same_ground(other);
        VertexSet {
            ground: self.ground.clone(),
            bits: self.bits ^ other.bits,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_same_ground(other);
        VertexSet {
            ground: self.ground.clone(),
            bits: self.bits & !other.bits,
        }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            ground: self.ground.clone(),
            bits: !self.bits & self.ground.full_mask(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_same_ground(other);
        self.bits & !other.bits == 0
    }

    pub fn with_pos(&self, pos: usize) -> VertexSet {
        VertexSet {
            ground: self.ground.clone(),
            bits: self.bits | 1 << pos,
        }
    }

    pub fn without_pos(&self, pos: usize) -> VertexSet {
        VertexSet {
            ground: self.ground.clone(),
            bits: self.bits & !(1 << pos),
        }
    }
}

impl fmt::Display for VertexSet {
    /// Renders as `{a,b,c}` in ground order, `{}` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for l in self.members() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
