//! Skew Young tableaux in French convention (row 1 at the bottom), with
//! reading words, standardization, growth words, and descents.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};
use crate::word::{standardize_word, Word};

/// A semistandard filling of a skew shape `lambda/mu`: rows weakly increase
/// left to right, columns strictly increase bottom to top.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewYoungTableau {
    /// Inner shape, padded with zeros to the number of rows.
    inner: Vec<usize>,
    /// Filled entries per row, bottom-up; row `i` covers columns
    /// `inner[i]+1 ..= inner[i]+rows[i].len()`.
    rows: Vec<Vec<usize>>,
}

impl SkewYoungTableau {
    pub fn new(inner: &Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if inner.len() > rows.len() {
            return Err(Error::InvalidTableau(format!(
                "inner shape {inner} has more rows than the filling"
            )));
        }
        let mut padded = inner.parts().to_vec();
        padded.resize(rows.len(), 0);
        let t = SkewYoungTableau { inner: padded, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        SkewYoungTableau {
            inner: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(inner: Vec<usize>, rows: Vec<Vec<usize>>) -> Self {
        let t = SkewYoungTableau { inner, rows };
        debug_assert!(t.validate().is_ok(), "invalid tableau {t:?}");
        t
    }

    fn validate(&self) -> Result<()> {
        let outer: Vec<usize> = self.outer_parts();
        for w in outer.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidTableau(format!(
                    "outer shape {outer:?} is not a partition"
                )));
            }
        }
        for w in self.inner.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidTableau(format!(
                    "inner shape {:?} is not a partition",
                    self.inner
                )));
            }
        }
        if let Some(last) = outer.last() {
            if *last == 0 && self.rows.len() > 0 {
                return Err(Error::InvalidTableau("empty trailing row".into()));
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.iter().any(|&x| x == 0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} does not weakly increase: {row:?}",
                    i + 1
                )));
            }
        }
        // columns strictly increase bottom to top
        let width = outer.first().copied().unwrap_or(0);
        for c in 1..=width {
            let mut prev: Option<usize> = None;
            for i in 0..self.rows.len() {
                if let Some(x) = self.entry(i + 1, c) {
                    if let Some(p) = prev {
                        if p >= x {
                            return Err(Error::InvalidTableau(format!(
                                "column {c} does not strictly increase"
                            )));
                        }
                    }
                    prev = Some(x);
                }
            }
        }
        Ok(())
    }

    fn outer_parts(&self) -> Vec<usize> {
        self.inner
            .iter()
            .zip(self.rows.iter())
            .map(|(m, r)| m + r.len())
            .collect()
    }

    pub fn outer(&self) -> Partition {
        let mut parts = self.outer_parts();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).expect("outer shape invariant")
    }

    pub fn inner(&self) -> Partition {
        let mut parts = self.inner.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).expect("inner shape invariant")
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Filled entry at `(row, col)`, both 1-indexed; `None` off the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || row > self.rows.len() || col == 0 {
            return None;
        }
        let m = self.inner[row - 1];
        if col <= m {
            return None;
        }
        self.rows[row - 1].get(col - m - 1).copied()
    }

    /// Row contents (filled cells only), bottom-up.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Inner shape padded to the number of rows.
    pub fn inner_padded(&self) -> &[usize] {
        &self.inner
    }

    pub fn max_entry(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Letter multiplicities `(#1s, #2s, ...)` up to the maximum entry.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.max_entry()];
        for row in &self.rows {
            for &x in row {
                counts[x - 1] += 1;
            }
        }
        counts
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &x in row {
                if x > n || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        true
    }

    /// Columns read top to bottom, left to right.
    pub fn column_reading_word(&self) -> Word {
        let width = self.outer_parts().first().copied().unwrap_or(0);
        let mut letters = Vec::with_capacity(self.size());
        for c in 1..=width {
            for i in (1..=self.rows.len()).rev() {
                if let Some(x) = self.entry(i, c) {
                    letters.push(x);
                }
            }
        }
        Word::from_letters_unchecked(letters)
    }

    /// Positions `(row, col)` of all filled cells, by increasing entry value and
    /// left-to-right within equal values (the standardization order).
    fn standardization_order(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(usize, usize, usize)> = Vec::with_capacity(self.size());
        for i in 1..=self.rows.len() {
            let m = self.inner[i - 1];
            for (k, &x) in self.rows[i - 1].iter().enumerate() {
                cells.push((x, m + k + 1, i));
            }
        }
        cells.sort();
        cells.into_iter().map(|(_, c, i)| (i, c)).collect()
    }

    /// Replaces the entries equal to `i` by consecutive integers left to right.
    pub fn standardize(&self) -> SkewYoungTableau {
        let order = self.standardization_order();
        let mut rows = self.rows.clone();
        for (label, &(i, c)) in order.iter().enumerate() {
            rows[i - 1][c - 1 - self.inner[i - 1]] = label + 1;
        }
        SkewYoungTableau::from_parts_unchecked(self.inner.clone(), rows)
    }

    /// Record the column of each entry of the standardization, largest first.
    pub fn column_growth_word(&self) -> Word {
        let order = self.standardization_order();
        let letters = order.iter().rev().map(|&(_, c)| c).collect();
        Word::from_letters_unchecked(letters)
    }

    /// Descents of a standard tableau: `i` such that `i+1` lies in a strictly
    /// higher row.
    pub fn descent_set(&self) -> Result<Vec<usize>> {
        if !self.is_standard() {
            return Err(Error::Precondition(
                "descent set requires a standard tableau".into(),
            ));
        }
        let n = self.size();
        let mut row_of = vec![0usize; n + 1];
        for i in 1..=self.rows.len() {
            for &x in &self.rows[i - 1] {
                row_of[x] = i;
            }
        }
        Ok((1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect())
    }

    /// The composition of `n` whose set of proper partial sums is the descent set.
    pub fn descent_composition(&self) -> Result<Composition> {
        let d = self.descent_set()?;
        Composition::from_set(&d, self.size())
    }

    /// Transpose of a standard tableau (rows and columns exchanged).
    pub fn transpose(&self) -> Result<SkewYoungTableau> {
        if !self.is_standard() {
            return Err(Error::Precondition("transpose requires a standard tableau".into()));
        }
        let outer_t = self.outer().transpose();
        let inner_t = self.inner().transpose();
        let mut rows: Vec<Vec<usize>> = (0..outer_t.len())
            .map(|i| Vec::with_capacity(outer_t.parts()[i] - inner_t.part(i + 1)))
            .collect();
        // cell (i, c) moves to (c, i); fill rows left to right
        let width = self.outer_parts().first().copied().unwrap_or(0);
        for c in 1..=width {
            for i in 1..=self.rows.len() {
                if let Some(x) = self.entry(i, c) {
                    rows[c - 1].push(x);
                }
            }
        }
        SkewYoungTableau::new(&inner_t, rows)
    }

    /// Rebuilds the tableau of the given shape whose column reading word is `w`.
    pub fn from_column_reading_word(
        outer: &Partition,
        inner: &Partition,
        w: &Word,
    ) -> Result<SkewYoungTableau> {
        if !outer.contains(inner) {
            return Err(Error::Precondition(format!(
                "inner shape {inner} not contained in outer {outer}"
            )));
        }
        let lo = inner.column_heights();
        let hi = outer.column_heights();
        let total: usize = outer.size() - inner.size();
        if w.len() != total {
            return Err(Error::SizeMismatch(format!(
                "word length {} does not fill shape of size {total}",
                w.len()
            )));
        }
        let mut inner_padded = inner.parts().to_vec();
        inner_padded.resize(outer.len(), 0);
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); outer.len()];
        let mut pos = 0;
        for c in 1..=hi.len() {
            let lo_c = lo.get(c - 1).copied().unwrap_or(0);
            let height = hi[c - 1] - lo_c;
            let segment = &w.letters()[pos..pos + height];
            pos += height;
            // segment lists rows hi[c-1] down to lo_c + 1
            for (k, &x) in segment.iter().enumerate() {
                let row = hi[c - 1] - k;
                rows[row - 1].push(x);
            }
        }
        // rows were filled column by column, hence already left to right
        SkewYoungTableau::new(inner, rows)
    }

    /// The semistandard filling of straight shape `lambda` with every row `i`
    /// filled by the letter `i`.
    pub fn highest_weight(lambda: &Partition) -> SkewYoungTableau {
        let rows = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i + 1; len])
            .collect();
        SkewYoungTableau::from_parts_unchecked(vec![0; lambda.len()], rows)
    }
}

impl fmt::Debug for SkewYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "yt(inner={:?}, rows={:?})", self.inner, self.rows)
    }
}

/// Text form: one line per row from the bottom, inner cells printed as ".".
impl fmt::Display for SkewYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut toks: Vec<String> = vec![".".into(); self.inner[i]];
            toks.extend(row.iter().map(|x| x.to_string()));
            write!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Serialize for SkewYoungTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut v = vec![0usize; self.inner[i]];
                v.extend_from_slice(row);
                v
            })
            .collect();
        TableauRepr {
            inner: self.inner().parts().to_vec(),
            rows,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkewYoungTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(deserializer)?;
        let inner = Partition::new(repr.inner).map_err(D::Error::custom)?;
        let mut rows = Vec::with_capacity(repr.rows.len());
        for (i, full) in repr.rows.iter().enumerate() {
            let m = if i < inner.len() { inner.parts()[i] } else { 0 };
            if full.len() < m || full[..m].iter().any(|&x| x != 0) {
                return Err(D::Error::custom(format!(
                    "row {} does not start with {m} inner zeros",
                    i + 1
                )));
            }
            rows.push(full[m..].to_vec());
        }
        SkewYoungTableau::new(&inner, rows).map_err(D::Error::custom)
    }
}

/// All semistandard fillings of `lambda/mu` with entries at most `max_entry`.
pub fn enumerate_ssyt(lambda: &Partition, mu: &Partition, max_entry: usize) -> Result<Vec<SkewYoungTableau>> {
    enumerate_ssyt_filtered(lambda, mu, max_entry, None)
}

/// All semistandard fillings of `lambda/mu` with the given letter multiplicities.
pub fn enumerate_ssyt_with_content(
    lambda: &Partition,
    mu: &Partition,
    content: &[usize],
) -> Result<Vec<SkewYoungTableau>> {
    enumerate_ssyt_filtered(lambda, mu, content.len(), Some(content))
}

fn enumerate_ssyt_filtered(
    lambda: &Partition,
    mu: &Partition,
    max_entry: usize,
    content: Option<&[usize]>,
) -> Result<Vec<SkewYoungTableau>> {
    if !lambda.contains(mu) {
        return Err(Error::Precondition(format!(
            "inner shape {mu} not contained in outer {lambda}"
        )));
    }
    let nrows = lambda.len();
    let mut inner = mu.parts().to_vec();
    inner.resize(nrows, 0);
    let widths: Vec<usize> = (0..nrows).map(|i| lambda.parts()[i] - inner[i]).collect();
    let size: usize = widths.iter().sum();
    if let Some(cont) = content {
        if cont.iter().sum::<usize>() != size {
            return Ok(Vec::new());
        }
    }
    let mut remaining: Vec<usize> = content.map(|c| c.to_vec()).unwrap_or_default();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); nrows];
    let mut out = Vec::new();

    // cells in row-major order, bottom row first
    fn place(
        row: usize,
        inner: &[usize],
        widths: &[usize],
        max_entry: usize,
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        use_content: bool,
        out: &mut Vec<SkewYoungTableau>,
    ) {
        if row == widths.len() {
            out.push(SkewYoungTableau::from_parts_unchecked(
                inner.to_vec(),
                rows.clone(),
            ));
            return;
        }
        if rows[row].len() == widths[row] {
            place(row + 1, inner, widths, max_entry, rows, remaining, use_content, out);
            return;
        }
        let col = inner[row] + rows[row].len() + 1;
        let min_row = rows[row].last().copied().unwrap_or(1);
        // strict increase over the cell below, if it is filled
        let below = if row > 0 {
            let r = row - 1;
            if col > inner[r] && col <= inner[r] + rows[r].len() {
                rows[r][col - inner[r] - 1] + 1
            } else {
                1
            }
        } else {
            1
        };
        let lo = min_row.max(below);
        for x in lo..=max_entry {
            if use_content && remaining[x - 1] == 0 {
                continue;
            }
            if use_content {
                remaining[x - 1] -= 1;
            }
            rows[row].push(x);
            place(row, inner, widths, max_entry, rows, remaining, use_content, out);
            rows[row].pop();
            if use_content {
                remaining[x - 1] += 1;
            }
        }
    }

    place(
        0,
        &inner,
        &widths,
        max_entry,
        &mut rows,
        &mut remaining,
        content.is_some(),
        &mut out,
    );
    Ok(out)
}

/// All standard fillings of `lambda/mu`.
pub fn enumerate_syt(lambda: &Partition, mu: &Partition) -> Result<Vec<SkewYoungTableau>> {
    if !lambda.contains(mu) {
        return Err(Error::Precondition(format!(
            "inner shape {mu} not contained in outer {lambda}"
        )));
    }
    let n = lambda.size() - mu.size();
    // grow from mu to lambda, placing k at the added corner
    fn grow(
        k: usize,
        n: usize,
        cur: &mut Vec<usize>,
        lambda: &[usize],
        cells: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if k > n {
            out.push(cells.clone());
            return;
        }
        for i in 0..lambda.len() {
            let cur_i = cur[i];
            if cur_i < lambda[i] && (i == 0 || cur[i - 1] > cur_i) {
                cur[i] += 1;
                cells.push((i + 1, cur_i + 1));
                grow(k + 1, n, cur, lambda, cells, out);
                cells.pop();
                cur[i] -= 1;
            }
        }
    }
    let mut cur = mu.parts().to_vec();
    cur.resize(lambda.len(), 0);
    let mut placements = Vec::new();
    grow(1, n, &mut cur, lambda.parts(), &mut Vec::new(), &mut placements);

    let mut inner = mu.parts().to_vec();
    inner.resize(lambda.len(), 0);
    let mut out = Vec::new();
    for cells in placements {
        let mut rows: Vec<Vec<usize>> = (0..lambda.len())
            .map(|i| vec![0; lambda.parts()[i] - inner[i]])
            .collect();
        for (label, &(r, c)) in cells.iter().enumerate() {
            rows[r - 1][c - 1 - inner[r - 1]] = label + 1;
        }
        out.push(SkewYoungTableau::from_parts_unchecked(inner.clone(), rows));
    }
    out.sort_by_key(|t| t.column_reading_word());
    Ok(out)
}
