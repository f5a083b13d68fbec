//! Ferrers boards, the word/board correspondence, and rook numbers.
//!
//! A word over {D, U} traces a lattice path whose staircase outlines a
//! Ferrers board; the rook numbers of that board are exactly the normal
//! ordering coefficients of the word.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weyl::{Letter, Word};

/// Cell-count cap for the naive rook oracle.
pub const NAIVE_CELL_CAP: usize = 30;
/// Box-size cap for full board enumeration.
pub const ENUM_BOX_CAP: u32 = 10;

/// Weakly decreasing column heights, left to right; zero-height columns
/// are trimmed. The empty sequence is the empty board.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FerrersBoard {
    columns: Vec<u32>,
}

impl FerrersBoard {
    pub fn new(columns: Vec<u32>) -> Result<Self> {
        let trimmed: Vec<u32> = columns.into_iter().take_while(|&h| h > 0).collect();
        if trimmed.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "column heights must be weakly decreasing: {trimmed:?}"
            )));
        }
        Ok(FerrersBoard { columns: trimmed })
    }

    pub fn empty() -> Self {
        FerrersBoard { columns: Vec::new() }
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn cell_count(&self) -> u64 {
        self.columns.iter().map(|&h| u64::from(h)).sum()
    }

    pub fn max_height(&self) -> u32 {
        self.columns.first().copied().unwrap_or(0)
    }

    /// Conjugate partition: rows become columns.
    pub fn transpose(&self) -> FerrersBoard {
        let mut cols = Vec::new();
        let mut row = 1;
        loop {
            let width = self.columns.iter().filter(|&&h| h >= row).count() as u32;
            if width == 0 {
                break;
            }
            cols.push(width);
            row += 1;
        }
        FerrersBoard { columns: cols }
    }

    /// Length of the rook vector: taking columns in increasing height
    /// order, each column extends the range of meaningful k by one while
    /// its height reaches the current maximum placement size.
    fn rook_len(&self) -> usize {
        let mut len = 1usize;
        for &h in self.columns.iter().rev() {
            if h as usize + 1 >= len {
                len += 1;
            }
        }
        len
    }
}

impl fmt::Display for FerrersBoard {
    /// Comma-separated heights; the empty board prints "-".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.columns.iter().map(|h| h.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FerrersBoard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(FerrersBoard::empty());
        }
        let heights: Vec<u32> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad column height: {p:?}")))
            })
            .collect::<Result<_>>()?;
        FerrersBoard::new(heights)
    }
}

/// Rook numbers r_0..r_K of a board; r_0 = 1, r_1 = cell count, and K is
/// at most one past the largest non-attacking placement size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RookVector(pub Vec<BigInt>);

impl RookVector {
    /// The entries with trailing zeros dropped; this is the
    /// shape-independent content of the vector.
    pub fn trimmed(&self) -> &[BigInt] {
        let mut end = self.0.len();
        while end > 0 && self.0[end - 1].is_zero() {
            end -= 1;
        }
        &self.0[..end]
    }
}

/// Reads the word left to right starting at height #U: each D appends a
/// column of the current height, each U steps down one. Columns drawn at
/// height zero vanish.
pub fn word_to_board(w: &Word) -> FerrersBoard {
    let mut height = w.count(Letter::U);
    let mut columns = Vec::new();
    for &letter in w.letters() {
        match letter {
            Letter::D => {
                if height > 0 {
                    columns.push(height);
                }
            }
            Letter::U => height -= 1,
        }
    }
    FerrersBoard { columns }
}

/// Inverse of [`word_to_board`] within a declared box: the returned word
/// has `n` letters U and `m` letters D.
pub fn board_to_word(b: &FerrersBoard, n: u32, m: u32) -> Result<Word> {
    if b.columns.len() as u32 > m {
        return Err(Error::BoxMismatch(format!(
            "board has {} columns, box allows {m}",
            b.columns.len()
        )));
    }
    if b.max_height() > n {
        return Err(Error::BoxMismatch(format!(
            "board has height {}, box allows {n}",
            b.max_height()
        )));
    }
    let mut letters = Vec::with_capacity((n + m) as usize);
    let mut height = n;
    for col in 0..m {
        let target = b.columns.get(col as usize).copied().unwrap_or(0);
        while height > target {
            letters.push(Letter::U);
            height -= 1;
        }
        letters.push(Letter::D);
    }
    letters.extend(std::iter::repeat_n(Letter::U, height as usize));
    Ok(Word::new(letters))
}

/// Rook numbers by the Ferrers-board column DP: with columns taken in
/// weakly increasing height order, a column of height h sees h - (k-1)
/// free rows for the k-th rook.
pub fn rook_numbers(b: &FerrersBoard) -> RookVector {
    let mut r = vec![BigInt::one()];
    let mut increasing: Vec<u32> = b.columns.clone();
    increasing.reverse();
    for h in increasing {
        let h = i64::from(h);
        let extend = h + 1 >= r.len() as i64;
        let new_len = r.len() + usize::from(extend);
        let mut next = vec![BigInt::zero(); new_len];
        for k in 0..new_len {
            let mut v = if k < r.len() { r[k].clone() } else { BigInt::zero() };
            if k >= 1 && h >= k as i64 - 1 {
                v += (h - (k as i64 - 1)) * &r[k - 1];
            }
            next[k] = v;
        }
        r = next;
    }
    RookVector(r)
}

/// Literal counting oracle: enumerates every placement of non-attacking
/// rooks column by column. Independent of the DP route.
pub fn rook_numbers_naive(b: &FerrersBoard) -> Result<RookVector> {
    if b.cell_count() as usize > NAIVE_CELL_CAP {
        return Err(Error::CapExceeded(format!(
            "naive rook oracle capped at {NAIVE_CELL_CAP} cells, board has {}",
            b.cell_count()
        )));
    }
    let mut counts = vec![BigInt::zero(); b.rook_len()];
    counts[0] = BigInt::one();
    let mut used_rows: Vec<bool> = vec![false; b.max_height() as usize];
    place(&b.columns, 0, 0, &mut used_rows, &mut counts);
    Ok(RookVector(counts))
}

fn place(columns: &[u32], col: usize, placed: usize, used: &mut Vec<bool>, counts: &mut [BigInt]) {
    if col == columns.len() {
        return;
    }
    // skip this column
    place(columns, col + 1, placed, used, counts);
    for row in 0..columns[col] as usize {
        if !used[row] {
            used[row] = true;
            counts[placed + 1] += 1;
            place(columns, col + 1, placed + 1, used, counts);
            used[row] = false;
        }
    }
}

/// All Ferrers boards inside the n x n box, i.e. partitions with at most
/// n parts each at most n. There are C(2n, n) of them.
pub fn enumerate_boards(n: u32) -> Result<Vec<FerrersBoard>> {
    if n > ENUM_BOX_CAP {
        return Err(Error::CapExceeded(format!(
            "board enumeration capped at box size {ENUM_BOX_CAP}, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_boards(n, n, &mut current, &mut out);
    Ok(out)
}

fn gen_boards(max_part: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<FerrersBoard>) {
    out.push(FerrersBoard { columns: current.clone() });
    if slots == 0 {
        return;
    }
    let cap = current.last().copied().unwrap_or(max_part);
    for part in (1..=cap).rev() {
        current.push(part);
        gen_boards(max_part, slots - 1, current, out);
        current.pop();
    }
}

/// Sum of r_k(B) over every board B in the n x n box.
pub fn aggregate_rook(n: u32, k: u32) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for board in enumerate_boards(n)? {
        let RookVector(r) = rook_numbers(&board);
        if let Some(v) = r.get(k as usize) {
            total += v;
        }
    }
    Ok(total)
}
