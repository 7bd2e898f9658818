use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows of machine integers.
    ///
    /// Panics if the rows are ragged; intended for literals in code and tests.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix literal");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `self - mu * Id`.
    pub fn shift_diagonal(&self, mu: &BigInt) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] -= mu;
        }
        Ok(out)
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self[(i, j)].clone());
            }
        }
        IntMatrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Block-diagonal sum of square blocks.
    pub fn block_diagonal(blocks: &[IntMatrix]) -> IntMatrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Sum of the squares of all entries (the squared Frobenius norm).
    pub fn frobenius_squared(&self) -> BigInt {
        self.data.iter().map(|x| x * x).sum()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[dst * self.cols + j] += delta;
            }
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[i * self.cols + dst] += delta;
            }
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    /// Serializes in the `m <rows> <cols>` text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("m {} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        write!(f, "IntMatrix{:?}", rows)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = cells[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|c| format!("{:>width$}", c, width = width))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the matrix text format: a header `m <rows> <cols>` followed by
/// `rows` lines of whitespace-separated integers. Blank lines and lines
/// starting with `#` are skipped.
impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::EmptyInput)?;
        let mut tok = header.split_whitespace();
        if tok.next() != Some("m") {
            return Err(Error::parse(hline, "expected header `m <rows> <cols>`"));
        }
        let mut dim = |what: &str| -> Result<usize> {
            tok.next()
                .ok_or_else(|| Error::parse(hline, format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|e| Error::parse(hline, format!("bad {what}: {e}")))
        };
        let rows = dim("row count")?;
        let cols = dim("column count")?;
        if tok.next().is_some() {
            return Err(Error::parse(hline, "trailing tokens after header"));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }

        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| Error::parse(hline, format!("expected {rows} rows, found {r}")))?;
            let before = data.len();
            for t in line.split_whitespace() {
                let v = t
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(ln, format!("not an integer: `{t}`")))?;
                data.push(v);
            }
            if data.len() - before != cols {
                return Err(Error::parse(
                    ln,
                    format!("expected {cols} entries, found {}", data.len() - before),
                ));
            }
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse(ln, "unexpected content after the last row"));
        }
        IntMatrix::from_vec(rows, cols, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "# a comment\nm 2 3\n1 -2 3\n# inside\n4 5 -6\n";
        let m: IntMatrix = text.parse().unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1, -2, 3], [4, 5, -6]]));
        assert_eq!(m.to_text().parse::<IntMatrix>().unwrap(), m);
    }

    #[test]
    fn parse_errors() {
        assert_eq!("".parse::<IntMatrix>(), Err(Error::EmptyInput));
        assert!(matches!("m 2 2\n1 2\n".parse::<IntMatrix>(), Err(Error::Parse { .. })));
        assert!(matches!("m 1 2\n1 2 3\n".parse::<IntMatrix>(), Err(Error::Parse { line: 2, .. })));
        assert!(matches!("m 1 1\nx\n".parse::<IntMatrix>(), Err(Error::Parse { .. })));
        assert!(matches!("n 1 1\n1\n".parse::<IntMatrix>(), Err(Error::Parse { line: 1, .. })));
        assert_eq!("m 0 3\n".parse::<IntMatrix>(), Err(Error::EmptyMatrix));
    }

    #[test]
    fn big_entries_survive() {
        let text = "m 1 2\n123456789012345678901234567890 -98765432109876543210\n";
        let m: IntMatrix = text.parse().unwrap();
        assert_eq!(m.to_text(), text);
    }

    #[test]
    fn products() {
        let a = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        let b = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), IntMatrix::from_rows(&[[2, 1], [4, 3]]));
        let v = a.mul_vec(&[BigInt::from(1), BigInt::from(-1)]).unwrap();
        assert_eq!(v, vec![BigInt::from(-1), BigInt::from(-1)]);
        assert!(a.mul(&IntMatrix::zeros(3, 1)).is_err());
    }
}
