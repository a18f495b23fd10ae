//! Dense vectors and matrices over GF(2), used for parity systems:
//! incidence equations of the form "pick a set meeting each listed set an
//! odd number of times", independence of circuit families, and expansion
//! of circuits over a basis.
//!
//! Bits are packed into `u64` blocks, so vectors of a few hundred entries
//! stay cheap. All solving is deterministic: pivots are chosen first-come
//! (least column, then least row), and free variables are fixed to zero.

/// A dense GF(2) vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    blocks: Vec<u64>,
    len: usize,
}

impl GF2Vector {
    /// The all-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        GF2Vector {
            blocks: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// Build a vector with ones exactly at the given indices.
    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the vector has no entries at all.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Read one bit.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    /// Write one bit.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        if value {
            self.blocks[i / 64] |= 1 << (i % 64);
        } else {
            self.blocks[i / 64] &= !(1 << (i % 64));
        }
    }

    /// In-place addition over GF(2).
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    /// Number of one-entries.
    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Iterate over the positions of one-entries, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let t = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(bi * 64 + t)
                }
            })
        })
    }

    /// Parity of the overlap `|self ∧ other|`, i.e. the GF(2) inner product.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }
}

impl std::fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A GF(2) matrix stored as a list of rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GF2Matrix {
    rows: Vec<GF2Vector>,
    cols: usize,
}

impl GF2Matrix {
    /// An empty matrix (zero rows) with the given column count.
    pub fn new(cols: usize) -> Self {
        GF2Matrix { rows: Vec::new(), cols }
    }

    /// Build from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<GF2Vector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        GF2Matrix { rows, cols }
    }

    /// Append one row.
    pub fn push_row(&mut self, row: GF2Vector) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &GF2Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[GF2Vector] {
        &self.rows
    }
}

/// Solve `a x = b` over GF(2).
///
/// Returns `None` when the system is inconsistent. Otherwise returns the
/// solution obtained under first-pivot tie-breaking: columns are scanned
/// left to right, the first usable row becomes the pivot, and every free
/// variable is fixed to zero. The result is therefore deterministic; for
/// `a = [[1, 1]]`, `b = [1]` it is `(1, 0)`.
pub fn gf2_solve(a: &GF2Matrix, b: &GF2Vector) -> Option<GF2Vector> {
    assert_eq!(a.n_rows(), b.len(), "right-hand side length mismatch");
    let mut rows: Vec<(GF2Vector, bool)> = a
        .rows
        .iter()
        .cloned()
        .zip((0..b.len()).map(|i| b.get(i)))
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next = 0usize;
    for col in 0..a.cols {
        let Some(r) = (next..rows.len()).find(|&r| rows[r].0.get(col)) else {
            continue;
        };
        rows.swap(next, r);
        let (pivot_row, pivot_rhs) = rows[next].clone();
        for (i, (row, rhs)) in rows.iter_mut().enumerate() {
            if i != next && row.get(col) {
                row.xor_assign(&pivot_row);
                *rhs ^= pivot_rhs;
            }
        }
        pivots.push((next, col));
        next += 1;
    }

    if rows[next..].iter().any(|(_, rhs)| *rhs) {
        return None; // a zero row demands a one
    }

    let mut x = GF2Vector::zeros(a.cols);
    for (r, c) in pivots {
        if rows[r].1 {
            x.set(c, true);
        }
    }
    Some(x)
}

/// Rank of a GF(2) matrix.
pub fn gf2_rank(a: &GF2Matrix) -> usize {
    let mut rows = a.rows.clone();
    let mut rank = 0usize;
    for col in 0..a.cols {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, r);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
    }
    rank
}
