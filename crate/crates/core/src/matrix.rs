//! Square matrices over F2 indexed by a named ground set.
//!
//! Rows are single `u32` words (bit j of row i = entry (i, j)), so row
//! reduction is a handful of XORs. All operations are pure: they leave the
//! receiver untouched and return fresh values.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ground::{Ground, VertexSet};

/// A V x V matrix over F2.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    ground: Ground,
    rows: Vec<u32>,
}

/// A vector over F2 indexed by a ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Vector {
    ground: Ground,
    bits: u32,
}

impl F2Vector {
    pub fn from_bits(ground: &Ground, bits: u32) -> F2Vector {
        assert_eq!(bits & !ground.full_mask(), 0, "vector bits outside ground");
        F2Vector {
            ground: ground.clone(),
            bits,
        }
    }

    pub fn zero(ground: &Ground) -> F2Vector {
        Self::from_bits(ground, 0)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, pos: usize) -> bool {
        self.bits >> pos & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn add(&self, other: &F2Vector) -> F2Vector {
        assert!(self.ground.same_as(&other.ground), "mixed grounds");
        F2Vector {
            ground: self.ground.clone(),
            bits: self.bits ^ other.bits,
        }
    }
}

impl F2Matrix {
    pub fn zero(ground: &Ground) -> F2Matrix {
        F2Matrix {
            ground: ground.clone(),
            rows: vec![0; ground.len()],
        }
    }

    pub fn identity(ground: &Ground) -> F2Matrix {
        let mut rows = vec![0u32; ground.len()];
        for (i, r) in rows.iter_mut().enumerate() {
            *r = 1 << i;
        }
        F2Matrix {
            ground: ground.clone(),
            rows,
        }
    }

    /// Builds a matrix from per-row bitmasks (bit j of `rows[i]` = entry (i, j)).
    pub fn from_row_bits(ground: &Ground, rows: Vec<u32>) -> F2Matrix {
        assert_eq!(rows.len(), ground.len(), "row count != ground size");
        let mask = ground.full_mask();
        for r in &rows {
            assert_eq!(r & !mask, 0, "row bits outside ground");
        }
        F2Matrix {
            ground: ground.clone(),
            rows,
        }
    }

    /// Builds a matrix from 0/1 entries, row major.
    pub fn from_entries(ground: &Ground, entries: &[&[u8]]) -> F2Matrix {
        let n = ground.len();
        assert_eq!(entries.len(), n, "row count != ground size");
        let mut rows = vec![0u32; n];
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), n, "column count != ground size");
            for (j, &e) in row.iter().enumerate() {
                rows[i] |= u32::from(e & 1) << j;
            }
        }
        F2Matrix {
            ground: ground.clone(),
            rows,
        }
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn row_bits(&self, i: usize) -> u32 {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub(crate) fn toggle(&mut self, i: usize, j: usize) {
        self.rows[i] ^= 1 << j;
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn check_ground(&self, set: &VertexSet) {
        assert!(
            self.ground.same_as(set.ground()),
            "vertex set built over a different ground"
        );
    }

    /// Determinant over F2. The empty matrix has determinant 1.
    pub fn det(&self) -> bool {
        let mut rows = self.rows.clone();
        let n = rows.len();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| rows[r] >> col & 1 == 1) else {
                return false;
            };
            rows.swap(col, p);
            let pivot = rows[col];
            for r in rows.iter_mut().skip(col + 1) {
                if *r >> col & 1 == 1 {
                    *r ^= pivot;
                }
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let n = rows.len();
        let mut rank = 0;
        for col in 0..n {
            if let Some(p) = (rank..n).find(|&r| rows[r] >> col & 1 == 1) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && *row >> col & 1 == 1 {
                        *row ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    /// A basis of the null space, one vector per free column.
    ///
    /// `rank() + kernel_basis().len() == size()`.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let mut rows = self.rows.clone();
        let n = rows.len();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            if let Some(p) = (rank..n).find(|&r| rows[r] >> col & 1 == 1) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && *row >> col & 1 == 1 {
                        *row ^= pivot;
                    }
                }
                pivot_cols.push(col);
                rank += 1;
            }
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
            let mut v = 1u32 << free;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                if rows[r] >> free & 1 == 1 {
                    v |= 1 << pc;
                }
            }
            basis.push(F2Vector::from_bits(&self.ground, v));
        }
        basis
    }

    /// Matrix-vector product over F2.
    pub fn mul_bits(&self, v: u32) -> u32 {
        let mut out = 0u32;
        for (i, row) in self.rows.iter().enumerate() {
            out |= ((row & v).count_ones() & 1) << i;
        }
        out
    }

    pub fn mul_vector(&self, v: &F2Vector) -> F2Vector {
        assert!(self.ground.same_as(v.ground()), "mixed grounds");
        F2Vector::from_bits(&self.ground, self.mul_bits(v.bits()))
    }

    pub fn mul_matrix(&self, other: &F2Matrix) -> F2Matrix {
        assert!(self.ground.same_as(&other.ground), "mixed grounds");
        let rows = mul_bit_rows(&self.rows, &other.rows);
        F2Matrix {
            ground: self.ground.clone(),
            rows,
        }
    }

    /// Rows and columns restricted to `set`, order inherited from the ground.
    ///
    /// The result lives on the sub-ground made of `set`'s labels.
    pub fn principal_submatrix(&self, set: &VertexSet) -> F2Matrix {
        self.check_ground(set);
        let positions: Vec<usize> = set.positions().collect();
        let sub = Ground::new(positions.iter().map(|&p| self.ground.label(p)))
            .expect("sub-ground of a valid ground");
        let rows = positions
            .iter()
            .map(|&i| {
                let mut r = 0u32;
                for (jj, &j) in positions.iter().enumerate() {
                    r |= u32::from(self.get(i, j)) << jj;
                }
                r
            })
            .collect();
        F2Matrix { ground: sub, rows }
    }

    /// Determinant of the principal submatrix selected by a raw bitmask.
    pub(crate) fn minor_det_mask(&self, mask: u32) -> bool {
        let sel: Vec<usize> = (0..self.size()).filter(|&p| mask >> p & 1 == 1).collect();
        let mut rows = gather(&self.rows, &sel, &sel);
        let n = rows.len();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| rows[r] >> col & 1 == 1) else {
                return false;
            };
            rows.swap(col, p);
            let pivot = rows[col];
            for r in rows.iter_mut().skip(col + 1) {
                if *r >> col & 1 == 1 {
                    *r ^= pivot;
                }
            }
        }
        true
    }

    /// Adds 1 to each diagonal entry indexed by `set` (toggles loops).
    pub fn diag_add(&self, set: &VertexSet) -> F2Matrix {
        self.check_ground(set);
        let mut out = self.clone();
        for p in set.positions() {
            out.toggle(p, p);
        }
        out
    }

    /// The pivot of the matrix on `set`: the principal submatrix is
    /// inverted in place and the remaining blocks are updated so that the
    /// result is the partial inverse of the original.
    ///
    /// With `P = A[X]`, `Q`, `R`, `S` the four blocks of `A` split by `X`,
    /// the result is `[P^-1, P^-1 Q; R P^-1, S + R P^-1 Q]` (over F2 all
    /// signs vanish). Defined precisely when `det A[X] = 1`.
    pub fn ppt(&self, set: &VertexSet) -> Result<F2Matrix> {
        self.check_ground(set);
        let x: Vec<usize> = set.positions().collect();
        let c: Vec<usize> = set.complement().positions().collect();
        let p = gather(&self.rows, &x, &x);
        let Some(p_inv) = invert_bit_rows(&p) else {
            return Err(Error::SingularPrincipalMinor {
                set: set.to_string(),
            });
        };
        let q = gather(&self.rows, &x, &c);
        let r = gather(&self.rows, &c, &x);
        let s = gather(&self.rows, &c, &c);

        let p_inv_q = mul_bit_rows(&p_inv, &q);
        let r_p_inv = mul_bit_rows(&r, &p_inv);
        let r_p_inv_q = mul_bit_rows(&r, &p_inv_q);
        let s_new: Vec<u32> = s.iter().zip(&r_p_inv_q).map(|(a, b)| a ^ b).collect();

        let mut out = F2Matrix::zero(&self.ground);
        scatter(&mut out.rows, &p_inv, &x, &x);
        scatter(&mut out.rows, &p_inv_q, &x, &c);
        scatter(&mut out.rows, &r_p_inv, &c, &x);
        scatter(&mut out.rows, &s_new, &c, &c);
        Ok(out)
    }

    /// The third order-2 operation: `diag_add`, pivot, `diag_add` on the
    /// same set. Defined precisely when `det (A+X)[X] = 1`.
    pub fn dual_ppt(&self, set: &VertexSet) -> Result<F2Matrix> {
        Ok(self.diag_add(set).ppt(set)?.diag_add(set))
    }

    /// Full inverse, if the matrix is nonsingular.
    pub fn inverse(&self) -> Result<F2Matrix> {
        self.ppt(&VertexSet::full(&self.ground))
    }

    /// Determinant of the principal submatrix on `set`.
    pub fn minor_det(&self, set: &VertexSet) -> bool {
        self.check_ground(set);
        self.minor_det_mask(set.bits())
    }
}

/// c = a * b for square bit-row matrices of equal size.
fn mul_bit_rows(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .map(|&arow| {
            let mut acc = 0u32;
            let mut bits = arow;
            while bits != 0 {
                let t = bits.trailing_zeros() as usize;
                acc ^= b[t];
                bits &= bits - 1;
            }
            acc
        })
        .collect()
}

/// Extracts the block with the given row/column ground positions.
fn gather(rows: &[u32], rsel: &[usize], csel: &[usize]) -> Vec<u32> {
    rsel.iter()
        .map(|&i| {
            let mut r = 0u32;
            for (jj, &j) in csel.iter().enumerate() {
                r |= (rows[i] >> j & 1) << jj;
            }
            r
        })
        .collect()
}

/// Writes a block back at the given row/column ground positions.
fn scatter(rows: &mut [u32], block: &[u32], rsel: &[usize], csel: &[usize]) {
    for (ii, &i) in rsel.iter().enumerate() {
        for (jj, &j) in csel.iter().enumerate() {
            rows[i] |= (block[ii] >> jj & 1) << j;
        }
    }
}

/// Gauss-Jordan inversion of a bit-row matrix; None when singular.
fn invert_bit_rows(m: &[u32]) -> Option<Vec<u32>> {
    let n = m.len();
    debug_assert!(n <= 32);
    // Augment each row with the identity in the high half of a u64.
    let mut aug: Vec<u64> = m
        .iter()
        .enumerate()
        .map(|(i, &r)| u64::from(r) | 1u64 << (n + i))
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| aug[r] >> col & 1 == 1)?;
        aug.swap(col, p);
        let pivot = aug[col];
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
    }
    Some(aug.iter().map(|&r| (r >> n) as u32).collect())
}

impl Hash for F2Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl fmt::Display for F2Matrix {
    /// `vertices:` header followed by one `0`/`1` row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices:")?;
        for l in self.ground.labels() {
            write!(f, " {l}")?;
        }
        writeln!(f)?;
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.size() {
                write!(f, "{}", r >> j & 1)?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn ground(labels: &[&str]) -> Ground {
        Ground::new(labels.iter().copied()).unwrap()
    }

    /// The worked 4-vertex example used throughout: vertices p,q,r,s,
    /// edges pq, pr, ps, rs, loops on p and q.
    pub(crate) fn example_matrix() -> F2Matrix {
        let g = ground(&["p", "q", "r", "s"]);
        F2Matrix::from_entries(
            &g,
            &[
                &[1, 1, 1, 1],
                &[1, 1, 0, 0],
                &[1, 0, 0, 1],
                &[1, 0, 1, 0],
            ],
        )
    }

    #[test]
    fn det_of_empty_matrix_is_one() {
        let g = ground(&[]);
        assert!(F2Matrix::zero(&g).det());
    }

    #[test]
    fn det_small_cases() {
        let g = ground(&["p", "r"]);
        let m = F2Matrix::from_entries(&g, &[&[1, 1], &[1, 0]]);
        assert!(m.det());
        assert!(!F2Matrix::zero(&g).det());
        assert!(F2Matrix::identity(&g).det());
    }

    #[test]
    fn principal_submatrix_examples() {
        let a = example_matrix();
        let pr = VertexSet::from_labels(a.ground(), ["p", "r"]).unwrap();
        let sub = a.principal_submatrix(&pr);
        assert_eq!(sub.ground().labels(), ["p", "r"]);
        assert_eq!(sub, F2Matrix::from_entries(sub.ground(), &[&[1, 1], &[1, 0]]));
        assert!(sub.det());

        let empty = a.principal_submatrix(&VertexSet::empty(a.ground()));
        assert_eq!(empty.size(), 0);
        assert!(empty.det());

        let full = a.principal_submatrix(&VertexSet::full(a.ground()));
        assert_eq!(full.rows, a.rows);
    }

    #[test]
    fn pivot_on_empty_set_is_identity_op() {
        let a = example_matrix();
        assert_eq!(a.ppt(&VertexSet::empty(a.ground())).unwrap(), a);
    }

    #[test]
    fn pivot_on_full_ground_inverts() {
        let g = ground(&["u", "v"]);
        let a = F2Matrix::from_entries(&g, &[&[1, 1], &[1, 0]]);
        let inv = a.ppt(&VertexSet::full(&g)).unwrap();
        assert_eq!(inv, F2Matrix::from_entries(&g, &[&[0, 1], &[1, 1]]));
        // independent check: the product must be the identity
        assert_eq!(a.mul_matrix(&inv), F2Matrix::identity(&g));
        assert_eq!(inv.mul_matrix(&a), F2Matrix::identity(&g));
    }

    #[test]
    fn pivot_of_example_on_three_vertices() {
        let a = example_matrix();
        let x = VertexSet::from_labels(a.ground(), ["p", "q", "r"]).unwrap();
        let got = a.ppt(&x).unwrap();
        // loop on q; edges pr, ps, qr, qs, rs
        let want = F2Matrix::from_entries(
            a.ground(),
            &[
                &[0, 0, 1, 1],
                &[0, 1, 1, 1],
                &[1, 1, 0, 1],
                &[1, 1, 1, 0],
            ],
        );
        assert_eq!(got, want);
        assert!(got.is_symmetric());
    }

    #[test]
    fn pivot_rejects_singular_minor() {
        let a = example_matrix();
        let pq = VertexSet::from_labels(a.ground(), ["p", "q"]).unwrap();
        assert!(!a.minor_det(&pq));
        assert!(matches!(
            a.ppt(&pq),
            Err(Error::SingularPrincipalMinor { .. })
        ));
    }

    #[test]
    fn diag_add_toggles_loops() {
        let g = ground(&["1", "2", "3"]);
        // edges 12, 13; loops on 1 and 3
        let a = F2Matrix::from_entries(&g, &[&[1, 1, 1], &[1, 0, 0], &[1, 0, 1]]);
        let x = VertexSet::singleton(&g, "3").unwrap();
        let b = a.diag_add(&x);
        assert_eq!(
            b,
            F2Matrix::from_entries(&g, &[&[1, 1, 1], &[1, 0, 0], &[1, 0, 0]])
        );
        assert_eq!(b.diag_add(&x), a);
        assert_eq!(a.diag_add(&VertexSet::empty(&g)), a);
    }

    #[test]
    fn diag_add_composes_by_symmetric_difference() {
        let a = example_matrix();
        let g = a.ground().clone();
        let x = VertexSet::from_labels(&g, ["p", "r"]).unwrap();
        let y = VertexSet::from_labels(&g, ["r", "s"]).unwrap();
        assert_eq!(
            a.diag_add(&x).diag_add(&y),
            a.diag_add(&x.symmetric_difference(&y))
        );
    }

    #[test]
    fn dual_pivot_examples() {
        let a = example_matrix();
        let g = a.ground().clone();
        assert_eq!(a.dual_ppt(&VertexSet::empty(&g)).unwrap(), a);

        // dual pivot on {r}: edges pq, pr, rs; loops on q and s
        let r = VertexSet::singleton(&g, "r").unwrap();
        let got = a.dual_ppt(&r).unwrap();
        let want = F2Matrix::from_entries(
            &g,
            &[
                &[0, 1, 1, 0],
                &[1, 1, 0, 0],
                &[1, 0, 0, 1],
                &[0, 0, 1, 1],
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn dual_pivot_rejects_when_shifted_minor_singular() {
        let g = ground(&["u"]);
        // loop on u: u has a loop, so (A+{u})[{u}] = 0 is singular
        let a = F2Matrix::from_entries(&g, &[&[1]]);
        let u = VertexSet::singleton(&g, "u").unwrap();
        assert!(matches!(
            a.dual_ppt(&u),
            Err(Error::SingularPrincipalMinor { .. })
        ));
        // while the plain pivot is fine
        assert!(a.ppt(&u).is_ok());
    }

    /// Partial-inverse relation: A (x1, x2)^T = (y1, y2)^T iff
    /// (A*X) (y1, x2)^T = (x1, y2)^T, coordinates split by X.
    fn check_partial_inverse(a: &F2Matrix, x: &VertexSet) {
        let b = a.ppt(x).unwrap();
        let n = a.size();
        let xm = x.bits();
        for v in 0..1u32 << n {
            let w = a.mul_bits(v);
            // swap the X-coordinates of input and output
            let v2 = (w & xm) | (v & !xm);
            let w2 = (v & xm) | (w & !xm);
            assert_eq!(b.mul_bits(v2), w2, "partial inverse relation failed");
        }
    }

    #[test]
    fn partial_inverse_relation_holds_for_random_pivots() {
        let mut rng = Rng::new(11);
        let labels = ["a", "b", "c", "d", "e"];
        for n in 1..=5usize {
            let g = ground(&labels[..n]);
            let mut checked = 0;
            while checked < 20 {
                let rows: Vec<u32> = (0..n).map(|_| rng.bits(n as u32) as u32).collect();
                let a = F2Matrix::from_row_bits(&g, rows);
                let x = VertexSet::from_bits(&g, rng.bits(n as u32) as u32);
                if a.minor_det(&x) {
                    check_partial_inverse(&a, &x);
                    checked += 1;
                }
            }
        }
    }

    /// Dual relation: A (x1, y1)^T = (x2, y2)^T iff
    /// (dual) (x1 + x2, y1)^T = (x2, y2)^T, coordinates split by X.
    fn check_dual_relation(a: &F2Matrix, x: &VertexSet) {
        let b = a.dual_ppt(x).unwrap();
        let n = a.size();
        let xm = x.bits();
        for v in 0..1u32 << n {
            let w = a.mul_bits(v);
            let v2 = v ^ (w & xm);
            assert_eq!(b.mul_bits(v2), w, "dual vector relation failed (forward)");
        }
        // and the other way round, via the involution
        for v2 in 0..1u32 << n {
            let w = b.mul_bits(v2);
            let v = v2 ^ (w & xm);
            assert_eq!(a.mul_bits(v), w, "dual vector relation failed (backward)");
        }
    }

    #[test]
    fn dual_vector_relation_on_random_4x4() {
        let g = ground(&["a", "b", "c", "d"]);
        let mut rng = Rng::new(5);
        let mut checked = 0;
        while checked < 25 {
            let rows: Vec<u32> = (0..4).map(|_| rng.bits(4) as u32).collect();
            let a = F2Matrix::from_row_bits(&g, rows);
            let x = VertexSet::from_bits(&g, rng.bits(4) as u32);
            if a.diag_add(&x).minor_det(&x) {
                check_dual_relation(&a, &x);
                checked += 1;
            }
        }
    }

    #[test]
    fn rank_and_kernel_edge_cases() {
        let g = ground(&["a", "b", "c"]);
        let id = F2Matrix::identity(&g);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());

        let z = F2Matrix::zero(&g);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 3);

        let m = F2Matrix::from_entries(&g, &[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            assert_eq!(m.mul_bits(v.bits()), 0);
        }
    }

    #[test]
    fn kernel_survives_dual_pivot_on_5x5() {
        let g = ground(&["a", "b", "c", "d", "e"]);
        let mut rng = Rng::new(3);
        let mut done = 0;
        while done < 10 {
            let rows: Vec<u32> = (0..5).map(|_| rng.bits(5) as u32).collect();
            let a = F2Matrix::from_row_bits(&g, rows);
            let x = VertexSet::from_bits(&g, rng.bits(5) as u32);
            let Ok(b) = a.dual_ppt(&x) else { continue };
            // membership of all 32 vectors in both kernels
            for v in 0..32u32 {
                assert_eq!(a.mul_bits(v) == 0, b.mul_bits(v) == 0);
            }
            assert_eq!(a.rank(), b.rank());
            done += 1;
        }
    }

    #[test]
    fn kernel_vectors_are_in_the_kernel() {
        let mut rng = Rng::new(99);
        let labels = ["a", "b", "c", "d", "e", "f"];
        for _ in 0..50 {
            let n = 1 + rng.below(6) as usize;
            let g = ground(&labels[..n]);
            let rows: Vec<u32> = (0..n).map(|_| rng.bits(n as u32) as u32).collect();
            let a = F2Matrix::from_row_bits(&g, rows);
            let basis = a.kernel_basis();
            assert_eq!(a.rank() + basis.len(), n);
            for v in &basis {
                assert_eq!(a.mul_bits(v.bits()), 0);
            }
            // basis vectors are linearly independent: all 2^k combinations distinct
            let mut seen = std::collections::HashSet::new();
            for mask in 0..1u32 << basis.len() {
                let mut acc = 0u32;
                for (i, v) in basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc ^= v.bits();
                    }
                }
                assert!(seen.insert(acc));
            }
        }
    }

    #[test]
    fn display_format() {
        let g = ground(&["p", "q"]);
        let m = F2Matrix::from_entries(&g, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.to_string(), "vertices: p q\n1 0\n0 1\n");
    }
}
