//! Packed binary vectors and matrices over GF(2).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A fixed-length binary vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinVec {
    len: usize,
    words: Vec<u64>,
}

impl BinVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, idx: I) -> Self {
        let mut v = Self::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse_bits(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::Parse(format!("invalid bit character {ch:?}"))),
            }
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BinVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BinVec) -> BinVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BinVec) -> BinVec {
        assert_eq!(self.len, other.len, "length mismatch in and");
        BinVec {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn and_not(&self, other: &BinVec) -> BinVec {
        assert_eq!(self.len, other.len, "length mismatch in and_not");
        BinVec {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BinVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn overlap(&self, other: &BinVec) -> usize {
        assert_eq!(self.len, other.len, "length mismatch in overlap");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset_of(&self, other: &BinVec) -> bool {
        self.and_not(other).is_zero()
    }

    /// Indices of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let tz = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinVec({})", self.to_bit_string())
    }
}

impl fmt::Display for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// A binary matrix stored as rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinMat {
    cols: usize,
    rows: Vec<BinVec>,
}

/// Rank and optional solution of `x · A = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSolve {
    pub rank: usize,
    pub solution: Option<BinVec>,
}

impl BinMat {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BinVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BinVec::from_indices(n, [i])).collect(),
        }
    }

    pub fn push_row(&mut self, row: BinVec) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[BinVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BinVec {
        &self.rows[i]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn transpose(&self) -> BinMat {
        let mut t: Vec<BinVec> = (0..self.cols)
            .map(|_| BinVec::zeros(self.rows.len()))
            .collect();
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                t[c].set(r, true);
            }
        }
        BinMat {
            cols: self.rows.len(),
            rows: t,
        }
    }

    /// `A · v` (one bit per row).
    pub fn mul_vec(&self, v: &BinVec) -> BinVec {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        BinVec::from_bools(&self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>())
    }

    /// `x · A` for a row-combination vector `x`.
    pub fn combine_rows(&self, x: &BinVec) -> BinVec {
        assert_eq!(x.len(), self.rows.len(), "combination length mismatch");
        let mut acc = BinVec::zeros(self.cols);
        for i in x.iter_ones() {
            acc.xor_assign(&self.rows[i]);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        self.reduce().rank()
    }

    /// Row echelon form with the row combinations that produced each pivot.
    pub fn reduce(&self) -> Echelon {
        Echelon::new(self)
    }

    /// A basis of the row space, chosen as a subset of the original rows
    /// (earliest independent rows first).
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut basis = Echelon::empty(self.cols, self.rows.len());
        let mut keep = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if basis.insert(row.clone(), BinVec::from_indices(self.rows.len(), [i])) {
                keep.push(i);
            }
        }
        keep
    }

    /// Basis of the right kernel `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<BinVec> {
        let ech = self.reduce();
        // full reduction so pivot columns are cleared in every other row
        let mut rows: Vec<(usize, BinVec)> = ech
            .pivots
            .iter()
            .map(|p| (p.col, p.row.clone()))
            .collect();
        rows.sort_by_key(|(c, _)| *c);
        for i in 0..rows.len() {
            let (ci, ri) = rows[i].clone();
            for (j, (_, rj)) in rows.iter_mut().enumerate() {
                if j != i && rj.get(ci) {
                    rj.xor_assign(&ri);
                }
            }
        }
        let pivot_cols: Vec<usize> = rows.iter().map(|(c, _)| *c).collect();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BinVec::from_indices(self.cols, [free]);
                for (pc, row) in &rows {
                    if row.get(free) {
                        v.set(*pc, true);
                    }
                }
                v
            })
            .collect()
    }
}

/// Incremental row-echelon basis that remembers how each pivot row was
/// combined from the inputs.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    inputs: usize,
    pivots: Vec<Pivot>,
}

#[derive(Clone, Debug)]
struct Pivot {
    col: usize,
    row: BinVec,
    combo: BinVec,
}

impl Echelon {
    pub fn empty(cols: usize, inputs: usize) -> Self {
        Self {
            cols,
            inputs,
            pivots: Vec::new(),
        }
    }

    fn new(m: &BinMat) -> Self {
        let mut e = Self::empty(m.cols, m.rows.len());
        for (i, row) in m.rows.iter().enumerate() {
            e.insert(row.clone(), BinVec::from_indices(m.rows.len(), [i]));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis; returns the residue and the
    /// combination of inputs that was subtracted.
    fn residue(&self, mut row: BinVec, mut combo: BinVec) -> (BinVec, BinVec) {
        for p in &self.pivots {
            if row.get(p.col) {
                row.xor_assign(&p.row);
                combo.xor_assign(&p.combo);
            }
        }
        (row, combo)
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: BinVec, combo: BinVec) -> bool {
        assert_eq!(row.len(), self.cols);
        let (row, combo) = self.residue(row, combo);
        match row.first_one() {
            Some(col) => {
                self.pivots.push(Pivot { col, row, combo });
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BinVec) -> bool {
        self.residue(v.clone(), BinVec::zeros(self.inputs)).0.is_zero()
    }

    /// Solves `x · A = b`; `None` if inconsistent.
    pub fn solve(&self, b: &BinVec) -> Option<BinVec> {
        let (res, combo) = self.residue(b.clone(), BinVec::zeros(self.inputs));
        res.is_zero().then_some(combo)
    }
}

/// Rank of `a` and, when `b` is supplied, a solution of `x · A = b`.
pub fn f2_rank_solve(a: &BinMat, b: Option<&BinVec>) -> Result<RankSolve> {
    if a.num_rows() == 0 || a.num_cols() == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    if let Some(b) = b {
        if b.len() != a.num_cols() {
            return Err(Error::DimensionMismatch {
                expected: a.num_cols(),
                found: b.len(),
            });
        }
    }
    let ech = a.reduce();
    Ok(RankSolve {
        rank: ech.rank(),
        solution: b.and_then(|b| ech.solve(b)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_rank(rows: &[Vec<bool>]) -> usize {
        let mut m: Vec<Vec<bool>> = rows.to_vec();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..m.len()).find(|&r| m[r][c]) {
                m.swap(rank, p);
                for r in 0..m.len() {
                    if r != rank && m[r][c] {
                        let pivot = m[rank].clone();
                        for (x, y) in m[r].iter_mut().zip(pivot) {
                            *x ^= y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn identity_rank() {
        let r = f2_rank_solve(&BinMat::identity(4), None).unwrap();
        assert_eq!(r.rank, 4);
        assert!(r.solution.is_none());
    }

    #[test]
    fn zero_matrix_rank() {
        let m = BinMat::from_rows(5, vec![BinVec::zeros(5); 3]).unwrap();
        assert_eq!(f2_rank_solve(&m, None).unwrap().rank, 0);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = BinMat::from_rows(
            3,
            vec![
                BinVec::parse_bits("110").unwrap(),
                BinVec::parse_bits("011").unwrap(),
            ],
        )
        .unwrap();
        let b = BinVec::parse_bits("101").unwrap();
        let x = f2_rank_solve(&m, Some(&b)).unwrap().solution.unwrap();
        assert_eq!(m.combine_rows(&x), b);
        let bad = BinVec::parse_bits("100").unwrap();
        assert!(f2_rank_solve(&m, Some(&bad)).unwrap().solution.is_none());
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let b = BinVec::zeros(3);
        assert!(matches!(
            f2_rank_solve(&BinMat::identity(4), Some(&b)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(BinMat::from_rows(3, vec![BinVec::zeros(2)]).is_err());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = BinMat::from_rows(
            5,
            vec![
                BinVec::parse_bits("11000").unwrap(),
                BinVec::parse_bits("01100").unwrap(),
                BinVec::parse_bits("10100").unwrap(),
                BinVec::parse_bits("00011").unwrap(),
            ],
        )
        .unwrap();
        let ker = m.kernel();
        assert_eq!(ker.len(), 5 - m.rank());
        for v in &ker {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn iter_ones_crosses_words() {
        let v = BinVec::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.weight(), 4);
    }

    proptest::proptest! {
        #[test]
        fn rank_matches_naive(rows in proptest::collection::vec(proptest::collection::vec(proptest::bool::ANY, 9), 1..12)) {
            let m = BinMat::from_rows(9, rows.iter().map(|r| BinVec::from_bools(r)).collect()).unwrap();
            proptest::prop_assert_eq!(m.rank(), naive_rank(&rows));
            proptest::prop_assert_eq!(m.independent_rows().len(), m.rank());
        }
    }
}
