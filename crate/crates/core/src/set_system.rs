//! Set systems: a ground set plus a family of its subsets, stored as one
//! membership bit per subset.
//!
//! The three single-vertex operations (pivot, loop complementation, dual
//! pivot) and the general vertex flip all act on the pair of membership
//! bits of `Z` and `Z - {j}` by a 2x2 matrix over F2.

use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{Ground, VertexSet};
use crate::matrix::F2Matrix;

/// Families are stored densely over all 2^|V| subsets, so grounds cap at 16.
pub const MAX_SET_SYSTEM_VERTICES: usize = 16;

/// A 2x2 matrix over F2 acting on the membership pair `(Z, Z - {j})`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Flip2x2 {
    // bit 0 = a11, bit 1 = a12, bit 2 = a21, bit 3 = a22
    bits: u8,
}

impl Flip2x2 {
    pub const IDENTITY: Flip2x2 = Flip2x2::new(true, false, false, true);
    /// Loop complementation: `[[1,1],[0,1]]`.
    pub const PLUS: Flip2x2 = Flip2x2::new(true, true, false, true);
    /// Pivot: `[[0,1],[1,0]]`.
    pub const STAR: Flip2x2 = Flip2x2::new(false, true, true, false);
    /// Dual pivot: `[[1,0],[1,1]]`, which equals `PLUS * STAR * PLUS`.
    pub const DUAL: Flip2x2 = Flip2x2::new(true, false, true, true);

    pub const fn new(a11: bool, a12: bool, a21: bool, a22: bool) -> Flip2x2 {
        Flip2x2 {
            bits: a11 as u8 | (a12 as u8) << 1 | (a21 as u8) << 2 | (a22 as u8) << 3,
        }
    }

    pub const fn a11(self) -> bool {
        self.bits & 1 != 0
    }
    pub const fn a12(self) -> bool {
        self.bits >> 1 & 1 != 0
    }
    pub const fn a21(self) -> bool {
        self.bits >> 2 & 1 != 0
    }
    pub const fn a22(self) -> bool {
        self.bits >> 3 & 1 != 0
    }

    /// All 16 matrices, singular ones included.
    pub fn all() -> impl Iterator<Item = Flip2x2> {
        (0..16u8).map(|bits| Flip2x2 { bits })
    }

    /// Matrix product `self * rhs` over F2.
    pub const fn mul(self, rhs: Flip2x2) -> Flip2x2 {
        let a11 = (self.a11() & rhs.a11()) ^ (self.a12() & rhs.a21());
        let a12 = (self.a11() & rhs.a12()) ^ (self.a12() & rhs.a22());
        let a21 = (self.a21() & rhs.a11()) ^ (self.a22() & rhs.a21());
        let a22 = (self.a21() & rhs.a12()) ^ (self.a22() & rhs.a22());
        Flip2x2::new(a11, a12, a21, a22)
    }

    pub const fn det(self) -> bool {
        (self.a11() & self.a22()) ^ (self.a12() & self.a21())
    }

    pub const fn is_invertible(self) -> bool {
        self.det()
    }

    /// Names the six invertible matrices; `None` for the ten singular ones.
    ///
    /// The binding of letters to matrices is a fixed convention of this
    /// library: `a` = PLUS, `b` = STAR, `c` = DUAL, `f` = STAR*PLUS,
    /// `g` = PLUS*STAR; `1` is the identity.
    pub fn classify(self) -> Option<S3> {
        if self == Self::IDENTITY {
            Some(S3::One)
        } else if self == Self::PLUS {
            Some(S3::A)
        } else if self == Self::STAR {
            Some(S3::B)
        } else if self == Self::DUAL {
            Some(S3::C)
        } else if self == Self::STAR.mul(Self::PLUS) {
            Some(S3::F)
        } else if self == Self::PLUS.mul(Self::STAR) {
            Some(S3::G)
        } else {
            None
        }
    }

    /// Multiplicative order; `None` for singular matrices.
    pub fn order(self) -> Option<u32> {
        if !self.is_invertible() {
            return None;
        }
        let mut acc = self;
        let mut k = 1;
        while acc != Self::IDENTITY {
            acc = acc.mul(self);
            k += 1;
        }
        Some(k)
    }
}

impl fmt::Debug for Flip2x2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.a11() as u8,
            self.a12() as u8,
            self.a21() as u8,
            self.a22() as u8
        )
    }
}

/// The six invertible 2x2 matrices over F2 form a copy of S3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum S3 {
    One,
    A,
    B,
    C,
    F,
    G,
}

impl S3 {
    pub fn matrix(self) -> Flip2x2 {
        match self {
            S3::One => Flip2x2::IDENTITY,
            S3::A => Flip2x2::PLUS,
            S3::B => Flip2x2::STAR,
            S3::C => Flip2x2::DUAL,
            S3::F => Flip2x2::STAR.mul(Flip2x2::PLUS),
            S3::G => Flip2x2::PLUS.mul(Flip2x2::STAR),
        }
    }

    pub fn all() -> [S3; 6] {
        [S3::One, S3::A, S3::B, S3::C, S3::F, S3::G]
    }
}

impl fmt::Display for S3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            S3::One => "1",
            S3::A => "a",
            S3::B => "b",
            S3::C => "c",
            S3::F => "f",
            S3::G => "g",
        };
        write!(f, "{s}")
    }
}

/// Outcome of the symmetric exchange-axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaMatroidCheck {
    /// The axiom holds.
    DeltaMatroid,
    /// Empty families are not delta-matroids.
    EmptyFamily,
    /// First failing triple in (|X| asc, bitmask asc) order, `x` in ground order.
    ExchangeFailure {
        x_set: VertexSet,
        y_set: VertexSet,
        x: String,
    },
}

impl DeltaMatroidCheck {
    pub fn holds(&self) -> bool {
        matches!(self, DeltaMatroidCheck::DeltaMatroid)
    }
}

/// A set system: ground set `V` plus a family of subsets of `V`.
#[derive(Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground: Ground,
    // bit m = the subset with bitmask m belongs to the family
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

impl SetSystem {
    fn check_cap(ground: &Ground) -> Result<()> {
        if ground.len() > MAX_SET_SYSTEM_VERTICES {
            return Err(Error::TooManyVertices {
                count: ground.len(),
                cap: MAX_SET_SYSTEM_VERTICES,
            });
        }
        Ok(())
    }

    /// The system with an empty family.
    pub fn empty_family(ground: &Ground) -> Result<SetSystem> {
        Self::check_cap(ground)?;
        Ok(SetSystem {
            ground: ground.clone(),
            words: vec![0; word_count(ground.len())],
        })
    }

    /// The system containing all 2^|V| subsets.
    pub fn full_family(ground: &Ground) -> Result<SetSystem> {
        let mut s = Self::empty_family(ground)?;
        let total = 1usize << ground.len();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            let in_range = total.saturating_sub(lo).min(64);
            *word = if in_range == 64 {
                u64::MAX
            } else {
                (1u64 << in_range) - 1
            };
        }
        Ok(s)
    }

    pub fn from_subsets<'a, I>(ground: &Ground, subsets: I) -> Result<SetSystem>
    where
        I: IntoIterator<Item = &'a VertexSet>,
    {
        let mut s = Self::empty_family(ground)?;
        for sub in subsets {
            assert!(ground.same_as(sub.ground()), "subset over a different ground");
            s.set_mask(sub.bits(), true);
        }
        Ok(s)
    }

    /// Builds straight from subset bitmasks (for enumeration loops).
    pub fn from_masks<I>(ground: &Ground, masks: I) -> Result<SetSystem>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut s = Self::empty_family(ground)?;
        let full = ground.full_mask();
        for m in masks {
            assert_eq!(m & !full, 0, "subset mask outside ground");
            s.set_mask(m, true);
        }
        Ok(s)
    }

    /// Interprets `w` as the full membership bit array (low bit = empty set).
    /// Only usable for grounds of at most 6 vertices.
    pub fn from_family_bits(ground: &Ground, w: u64) -> Result<SetSystem> {
        assert!(ground.len() <= 6, "family bits fit one word only up to 6 vertices");
        let mut s = Self::empty_family(ground)?;
        let total = 1u32 << ground.len();
        let mask = if total == 64 { u64::MAX } else { (1u64 << total) - 1 };
        s.words[0] = w & mask;
        Ok(s)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn contains_mask(&self, m: u32) -> bool {
        debug_assert!((m as usize) < 1 << self.ground.len(), "mask outside ground");
        self.words[(m >> 6) as usize] >> (m & 63) & 1 == 1
    }

    pub fn contains(&self, subset: &VertexSet) -> bool {
        assert!(self.ground.same_as(subset.ground()), "mixed grounds");
        self.contains_mask(subset.bits())
    }

    pub(crate) fn set_mask(&mut self, m: u32, value: bool) {
        let w = (m >> 6) as usize;
        let b = m & 63;
        if value {
            self.words[w] |= 1u64 << b;
        } else {
            self.words[w] &= !(1u64 << b);
        }
    }

    pub fn is_family_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn family_size(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Member bitmasks, ascending.
    pub fn member_masks(&self) -> impl Iterator<Item = u32> + '_ {
        let total = 1u32 << self.ground.len();
        (0..total).filter(|&m| self.contains_mask(m))
    }

    /// Members as vertex sets, in (size, bitmask) order.
    pub fn members_by_size(&self) -> Vec<VertexSet> {
        let mut masks: Vec<u32> = self.member_masks().collect();
        masks.sort_by_key(|&m| (m.count_ones(), m));
        masks
            .into_iter()
            .map(|m| VertexSet::from_bits(&self.ground, m))
            .collect()
    }

    fn check_ground(&self, set: &VertexSet) {
        assert!(
            self.ground.same_as(set.ground()),
            "vertex set built over a different ground"
        );
    }

    /// Pivot (twist): replaces every member `Y` by `Y ^ X`.
    pub fn pivot(&self, set: &VertexSet) -> SetSystem {
        self.check_ground(set);
        let x = set.bits();
        let mut out = SetSystem {
            ground: self.ground.clone(),
            words: vec![0; self.words.len()],
        };
        if x == 0 {
            out.words.copy_from_slice(&self.words);
            return out;
        }
        let total = 1u32 << self.ground.len();
        for m in 0..total {
            if self.contains_mask(m) {
                out.set_mask(m ^ x, true);
            }
        }
        out
    }

    /// Loop complementation: per element `j`, a member `Z` containing `j`
    /// flips whenever `Z - {j}` is a member; other sets are untouched.
    pub fn loop_complement(&self, set: &VertexSet) -> SetSystem {
        self.check_ground(set);
        let mut out = self.clone();
        let total = 1u32 << self.ground.len();
        for j in set.positions() {
            let bj = 1u32 << j;
            for m in 0..total {
                if m & bj != 0 && out.contains_mask(m ^ bj) {
                    let v = out.contains_mask(m);
                    out.set_mask(m, !v);
                }
            }
        }
        out
    }

    /// Dual pivot: per element `j`, a member `Z` free of `j` flips whenever
    /// `Z + {j}` is a member; sets containing `j` are untouched.
    pub fn dual_pivot(&self, set: &VertexSet) -> SetSystem {
        self.check_ground(set);
        let mut out = self.clone();
        let total = 1u32 << self.ground.len();
        for j in set.positions() {
            let bj = 1u32 << j;
            for m in 0..total {
                if m & bj == 0 && out.contains_mask(m | bj) {
                    let v = out.contains_mask(m);
                    out.set_mask(m, !v);
                }
            }
        }
        out
    }

    /// General vertex flip: for every pair `(Z, Z - {j})` with `j` in `Z`,
    /// the new membership pair is `alpha` times the old one.
    ///
    /// Any 2x2 matrix is accepted here, singular ones included; the
    /// group/normal-form machinery rejects singular flips separately.
    pub fn vertex_flip(&self, alpha: Flip2x2, j: &str) -> Result<SetSystem> {
        let pos = self.ground.index_of(j)?;
        Ok(self.vertex_flip_at(alpha, pos))
    }

    pub fn vertex_flip_at(&self, alpha: Flip2x2, pos: usize) -> SetSystem {
        assert!(pos < self.ground.len(), "vertex position out of range");
        let bj = 1u32 << pos;
        let mut out = SetSystem {
            ground: self.ground.clone(),
            words: vec![0; self.words.len()],
        };
        let total = 1u32 << self.ground.len();
        for with in (0..total).filter(|m| m & bj != 0) {
            let without = with ^ bj;
            let old_with = self.contains_mask(with);
            let old_without = self.contains_mask(without);
            let new_with = (alpha.a11() & old_with) ^ (alpha.a12() & old_without);
            let new_without = (alpha.a21() & old_with) ^ (alpha.a22() & old_without);
            out.set_mask(with, new_with);
            out.set_mask(without, new_without);
        }
        out
    }

    /// Applies the same flip on every vertex of `set` (the per-vertex
    /// operations commute, so the order is immaterial).
    pub fn vertex_flip_all(&self, alpha: Flip2x2, set: &VertexSet) -> SetSystem {
        self.check_ground(set);
        let mut out = self.clone();
        for p in set.positions() {
            out = out.vertex_flip_at(alpha, p);
        }
        out
    }

    /// Members maximal under inclusion.
    pub fn max_members(&self) -> Vec<VertexSet> {
        let masks: Vec<u32> = self.member_masks().collect();
        let mut out: Vec<u32> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == m))
            .collect();
        out.sort_by_key(|&m| (m.count_ones(), m));
        out.into_iter()
            .map(|m| VertexSet::from_bits(&self.ground, m))
            .collect()
    }

    /// Members minimal under inclusion.
    pub fn min_members(&self) -> Vec<VertexSet> {
        let masks: Vec<u32> = self.member_masks().collect();
        let mut out: Vec<u32> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
            .collect();
        out.sort_by_key(|&m| (m.count_ones(), m));
        out.into_iter()
            .map(|m| VertexSet::from_bits(&self.ground, m))
            .collect()
    }

    /// Symmetric exchange axiom: for all members X, Y and every
    /// `x` in `X ^ Y`, either `X ^ {x}` is a member or some `y != x` in
    /// `X ^ Y` has `X ^ {x,y}` a member.
    ///
    /// On failure reports the first counterexample, members ordered by
    /// (size, bitmask) and `x` by ground position.
    pub fn delta_matroid_check(&self) -> DeltaMatroidCheck {
        if self.is_family_empty() {
            return DeltaMatroidCheck::EmptyFamily;
        }
        let mut members: Vec<u32> = self.member_masks().collect();
        members.sort_by_key(|&m| (m.count_ones(), m));
        let n = self.ground.len();
        for &xm in &members {
            for &ym in &members {
                let diff = xm ^ ym;
                for x in (0..n).filter(|&p| diff >> p & 1 == 1) {
                    let bx = 1u32 << x;
                    if self.contains_mask(xm ^ bx) {
                        continue;
                    }
                    let ok = (0..n).any(|y| {
                        y != x && diff >> y & 1 == 1 && self.contains_mask(xm ^ bx ^ (1 << y))
                    });
                    if !ok {
                        return DeltaMatroidCheck::ExchangeFailure {
                            x_set: VertexSet::from_bits(&self.ground, xm),
                            y_set: VertexSet::from_bits(&self.ground, ym),
                            x: self.ground.label(x).to_string(),
                        };
                    }
                }
            }
        }
        DeltaMatroidCheck::DeltaMatroid
    }

    pub fn is_delta_matroid(&self) -> bool {
        self.delta_matroid_check().holds()
    }

    /// The induced set system of a matrix: all subsets whose principal
    /// minor is nonsingular. The empty set is always a member.
    pub fn of_matrix(a: &F2Matrix) -> Result<SetSystem> {
        Self::check_cap(a.ground())?;
        let mut s = Self::empty_family(a.ground())?;
        let total = 1u32 << a.ground().len();
        for m in 0..total {
            if a.minor_det_mask(m) {
                s.set_mask(m, true);
            }
        }
        Ok(s)
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetSystem{{")?;
        for (i, s) in self.members_by_size().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}
