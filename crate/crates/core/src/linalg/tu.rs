//! Totally unimodular matrices and the exact operations the rest of the
//! crate builds on: rational rank, `{-1, 0, 1}` kernel bases, unit-column
//! pivoting, and a determinant sweep that verifies or refutes total
//! unimodularity up to a configurable minor order.
//!
//! Design notes:
//!
//! * Entries are stored as `i8` and validated to lie in `{-1, 0, 1}` at
//!   construction, so the invariant travels with the type.
//! * Rank and kernel computations run over arbitrary-precision rationals.
//!   For a totally unimodular input every reduced-echelon entry lands back
//!   in `{-1, 0, 1}`; an escape is reported as an error rather than being
//!   silently rounded, because it proves the input was not TU.
//! * All pivot selection is least-index, so results are deterministic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// A matrix with entries in `{-1, 0, 1}`, stored row-major.
///
/// The name records intent: matrices produced by this crate's own
/// constructions are totally unimodular, and [`check_tu`] can verify the
/// property for external inputs. The type itself only enforces the entry
/// range; total unimodularity of arbitrary input is checked explicitly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TUMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl TUMatrix {
    /// Build a matrix from row-major entries, validating the entry range.
    pub fn new(rows: usize, cols: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                rows,
                cols,
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for (i, &v) in entries.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(Error::EntryOutOfRange {
                    row: i / cols.max(1),
                    col: i % cols.max(1),
                    value: i64::from(v),
                });
            }
        }
        Ok(TUMatrix { rows, cols, entries })
    }

    /// Build from a slice of equal-length rows.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                rows: r,
                cols: c,
                expected: r * c,
                got: rows.iter().map(Vec::len).sum(),
            });
        }
        Self::new(r, c, rows.concat())
    }

    /// The all-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        TUMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// Read one entry.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.entries[row * self.cols + col]
    }

    /// One row as a slice.
    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// One column, copied out.
    pub fn column(&self, col: usize) -> Vec<i8> {
        assert!(col < self.cols, "column out of range");
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let mut entries = vec![0i8; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[c * self.rows + r] = self.get(r, c);
            }
        }
        TUMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// A new matrix keeping exactly the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                assert!(c < self.cols, "column out of range");
                entries.push(self.get(r, c));
            }
        }
        TUMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// A new matrix with the given column negated.
    pub fn negate_column(&self, col: usize) -> Self {
        assert!(col < self.cols, "column out of range");
        let mut m = self.clone();
        for r in 0..self.rows {
            m.entries[r * self.cols + col] = -m.entries[r * self.cols + col];
        }
        m
    }

    /// Integer column sum `A · 1_S` over the given set of columns.
    pub fn indicator_image(&self, cols: impl IntoIterator<Item = usize>) -> Vec<i64> {
        let mut out = vec![0i64; self.rows];
        for c in cols {
            assert!(c < self.cols, "column out of range");
            for (r, slot) in out.iter_mut().enumerate() {
                *slot += i64::from(self.get(r, c));
            }
        }
        out
    }

    /// Integer matrix-vector product `A · x` for a small signed vector.
    pub fn image_of(&self, x: &[i8]) -> Vec<i64> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        let mut out = vec![0i64; self.rows];
        for (c, &xc) in x.iter().enumerate() {
            if xc == 0 {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                *slot += i64::from(self.get(r, c)) * i64::from(xc);
            }
        }
        out
    }

    /// Rational rank, computed by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the rational kernel, returned as the rows of a new
    /// matrix with entries in `{-1, 0, 1}`.
    ///
    /// For a totally unimodular input the reduced echelon form, and hence
    /// every kernel basis vector constructed from it, stays in
    /// `{-1, 0, 1}`; any escape is reported as
    /// [`Error::NotTotallyUnimodular`]. Rows are ordered by ascending free
    /// column and sign-normalised so the first nonzero entry is `+1`.
    pub fn kernel_basis(&self) -> Result<TUMatrix> {
        let (grid, pivots) = self.rref();
        let pivot_set: Vec<usize> = pivots.clone();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();

        let mut rows: Vec<Vec<i8>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0i8; self.cols];
            v[f] = 1;
            for (idx, &pc) in pivot_set.iter().enumerate() {
                let value = -&grid[idx][f];
                v[pc] = rational_to_unit(&value)
                    .ok_or(Error::NotTotallyUnimodular { stage: "kernel basis" })?;
            }
            // Normalise: first nonzero entry positive.
            if let Some(first) = v.iter().find(|&&x| x != 0) {
                if *first < 0 {
                    for x in &mut v {
                        *x = -*x;
                    }
                }
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Ok(TUMatrix::zeros(0, self.cols));
        }
        TUMatrix::from_rows(&rows)
    }

    /// Pivot so that the given column becomes `(1, 0, …, 0)ᵀ`.
    ///
    /// The pivot entry is the least-index nonzero in the column. Row
    /// operations preserve the kernel exactly, so the represented oriented
    /// matroid is unchanged; deleting the first row (and the column)
    /// afterwards represents contraction of that element.
    pub fn pivot_unit_column(&self, col: usize) -> Result<TUMatrix> {
        if col >= self.cols {
            return Err(Error::ColumnOutOfRange { col, cols: self.cols });
        }
        let Some(p) = (0..self.rows).find(|&r| self.get(r, col) != 0) else {
            return Err(Error::ZeroColumnPivot { col });
        };

        let mut grid: Vec<Vec<i16>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| i16::from(v)).collect())
            .collect();
        if grid[p][col] < 0 {
            for v in &mut grid[p] {
                *v = -*v;
            }
        }
        let pivot_row = grid[p].clone();
        for (r, row) in grid.iter_mut().enumerate() {
            if r == p || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= factor * pv;
            }
        }
        grid.swap(0, p);

        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for row in &grid {
            for &v in row {
                if !(-1..=1).contains(&v) {
                    return Err(Error::NotTotallyUnimodular { stage: "pivot" });
                }
                entries.push(v as i8);
            }
        }
        TUMatrix::new(self.rows, self.cols, entries)
    }

    /// Verify total unimodularity of this matrix up to the given minor
    /// order. Shorthand for [`check_tu`] on the entry grid.
    pub fn verify_tu(&self, max_order: usize) -> TuVerdict {
        let entries: Vec<i64> = self.entries.iter().map(|&v| i64::from(v)).collect();
        check_tu(self.rows, self.cols, &entries, max_order)
    }

    /// Reduced row echelon form over the rationals with least-index pivot
    /// selection. Returns the grid and the pivot columns in order.
    fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut grid: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&v| Rational::from_integer(BigInt::from(v)))
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..self.cols {
            let Some(p) = (next..self.rows).find(|&r| !grid[r][col].is_zero()) else {
                continue;
            };
            grid.swap(next, p);
            let scale = grid[next][col].clone();
            for v in &mut grid[next] {
                *v /= &scale;
            }
            let pivot_row = grid[next].clone();
            for (r, row) in grid.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * pv;
                }
            }
            pivots.push(col);
            next += 1;
            if next == self.rows {
                break;
            }
        }
        (grid, pivots)
    }

    /// Parse the plain-text matrix format.
    ///
    /// The first data line is `rows cols`; the following tokens are the
    /// row-major entries. `#` starts a comment, blank lines are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut tokens: Vec<(usize, &str)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let data = line.split('#').next().unwrap_or("");
            for tok in data.split_whitespace() {
                tokens.push((lineno + 1, tok));
            }
        }
        let mut it = tokens.into_iter();
        let (l1, rows_tok) = it
            .next()
            .ok_or_else(|| Error::parse(1, "empty input: expected `rows cols` header"))?;
        let (l2, cols_tok) = it
            .next()
            .ok_or_else(|| Error::parse(l1, "expected column count after row count"))?;
        let rows: usize = rows_tok
            .parse()
            .map_err(|_| Error::parse(l1, format!("invalid row count `{rows_tok}`")))?;
        let cols: usize = cols_tok
            .parse()
            .map_err(|_| Error::parse(l2, format!("invalid column count `{cols_tok}`")))?;

        let mut entries = Vec::with_capacity(rows * cols);
        for (line, tok) in it.by_ref() {
            if entries.len() == rows * cols {
                return Err(Error::parse(
                    line,
                    format!("unexpected extra token `{tok}` after {} entries", rows * cols),
                ));
            }
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid entry `{tok}`")))?;
            if !(-1..=1).contains(&v) {
                return Err(Error::parse(
                    line,
                    format!("entry `{tok}` is outside {{-1, 0, 1}}"),
                ));
            }
            entries.push(v as i8);
        }
        if entries.len() != rows * cols {
            return Err(Error::parse(
                0,
                format!(
                    "expected {} entries for a {rows}x{cols} matrix, got {}",
                    rows * cols,
                    entries.len()
                ),
            ));
        }
        TUMatrix::new(rows, cols, entries)
    }

    /// Render in the same plain-text format accepted by [`from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for TUMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "TUMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}

fn rational_to_unit(v: &Rational) -> Option<i8> {
    if v.is_zero() {
        Some(0)
    } else if v.is_one() {
        Some(1)
    } else if (-v).is_one() {
        Some(-1)
    } else {
        None
    }
}

// ============================================================================
// Total unimodularity checking
// ============================================================================

/// Outcome of a total unimodularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TuVerdict {
    /// Every square submatrix (all orders were within reach) has
    /// determinant in `{-1, 0, 1}`.
    Verified,
    /// A concrete square submatrix with determinant outside `{-1, 0, 1}`.
    Refuted(TuRefutation),
    /// All submatrices up to `checked_order` pass, but larger ones exist
    /// and were not examined.
    UncheckedAboveOrder { checked_order: usize },
}

impl TuVerdict {
    /// True for [`TuVerdict::Verified`].
    pub fn is_verified(&self) -> bool {
        matches!(self, TuVerdict::Verified)
    }

    /// True unless the check found a concrete refutation.
    pub fn is_consistent(&self) -> bool {
        !matches!(self, TuVerdict::Refuted(_))
    }
}

/// A witness that a matrix is not totally unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuRefutation {
    /// Row indices of the offending square submatrix, ascending.
    pub row_indices: Vec<usize>,
    /// Column indices of the offending square submatrix, ascending.
    pub col_indices: Vec<usize>,
    /// Its determinant (absolute value at least 2).
    pub determinant: i64,
}

/// Check total unimodularity of an integer matrix by brute force over all
/// square submatrices of order at most `max_order`.
///
/// The first refutation in lexicographic order (ascending order, then row
/// set, then column set) is returned, so failure witnesses are
/// deterministic. Determinants are computed exactly with fraction-free
/// elimination.
pub fn check_tu(rows: usize, cols: usize, entries: &[i64], max_order: usize) -> TuVerdict {
    assert_eq!(entries.len(), rows * cols, "entry count mismatch");
    let at = |r: usize, c: usize| entries[r * cols + c];
    let reach = max_order.min(rows.min(cols));

    for order in 1..=reach {
        let mut row_sel = Combinations::new(rows, order);
        while let Some(rs) = row_sel.next() {
            let mut col_sel = Combinations::new(cols, order);
            while let Some(cs) = col_sel.next() {
                let det = submatrix_det(rs, cs, &at);
                if det.abs() > 1 {
                    return TuVerdict::Refuted(TuRefutation {
                        row_indices: rs.to_vec(),
                        col_indices: cs.to_vec(),
                        determinant: det,
                    });
                }
            }
        }
    }

    if reach == rows.min(cols) {
        TuVerdict::Verified
    } else {
        TuVerdict::UncheckedAboveOrder { checked_order: reach }
    }
}

/// Exact integer determinant of a selected square submatrix (Bareiss
/// fraction-free elimination; every division is exact).
fn submatrix_det(rs: &[usize], cs: &[usize], at: &impl Fn(usize, usize) -> i64) -> i64 {
    let k = rs.len();
    let mut a: Vec<Vec<i64>> = rs
        .iter()
        .map(|&r| cs.iter().map(|&c| at(r, c)).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for p in 0..k {
        let Some(nz) = (p..k).find(|&r| a[r][p] != 0) else {
            return 0;
        };
        if nz != p {
            a.swap(nz, p);
            sign = -sign;
        }
        for r in p + 1..k {
            for c in p + 1..k {
                a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / prev;
            }
            a[r][p] = 0;
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

/// Lexicographic k-combinations of `0..n`, yielded without allocation per
/// step.
struct Combinations {
    n: usize,
    state: Vec<usize>,
    fresh: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            state: (0..k).collect(),
            fresh: true,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.state.len();
        if k > self.n {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.state);
        }
        // Advance to the next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.state[i] != i + self.n - k {
                break;
            }
        }
        self.state[i] += 1;
        for j in i + 1..k {
            self.state[j] = self.state[j - 1] + 1;
        }
        Some(&self.state)
    }
}
