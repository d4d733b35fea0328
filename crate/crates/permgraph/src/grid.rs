//! Gridding matrices, drawings on their standard figures, and monotone runs.
//!
//! Matrices use cartesian coordinates: `(col, row)` with `(1, 1)` at the
//! bottom left. Column `k` of a drawing holds a contiguous block of indices
//! and row `ℓ` a contiguous block of values.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::letters::{Encoding, Lettering};
use crate::perm::{descent_profile, Permutation};

/// A nonzero `0/±1` matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct GridMatrix {
    cols: usize,
    rows: usize,
    // entries[(col - 1) * rows + (row - 1)]
    entries: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    cols: usize,
    rows: usize,
    entries: Vec<(usize, usize, i8)>,
}

impl GridMatrix {
    /// `entries` lists the nonzero cells as `(col, row, ±1)`.
    pub fn new(cols: usize, rows: usize, entries: &[(usize, usize, i8)]) -> Result<Self> {
        let mut m = GridMatrix { cols, rows, entries: vec![0; cols * rows] };
        for &(c, r, v) in entries {
            if c == 0 || c > cols || r == 0 || r > rows || !(v == 1 || v == -1) {
                return Err(Error::Precondition(format!("bad matrix entry ({c},{r},{v})")));
            }
            m.entries[(c - 1) * rows + (r - 1)] = v;
        }
        if m.entries.iter().all(|&v| v == 0) {
            return Err(Error::Precondition("matrix has no nonzero entry".into()));
        }
        Ok(m)
    }

    /// Rows as printed, top row first.
    pub fn from_printed(printed: &[&[i8]]) -> Result<Self> {
        let rows = printed.len();
        let cols = printed.first().map_or(0, |r| r.len());
        if printed.iter().any(|r| r.len() != cols) {
            return Err(Error::Precondition("ragged matrix".into()));
        }
        let mut entries = Vec::new();
        for (i, line) in printed.iter().enumerate() {
            for (c, &v) in line.iter().enumerate() {
                if v != 0 {
                    entries.push((c + 1, rows - i, v));
                }
            }
        }
        GridMatrix::new(cols, rows, &entries)
    }

    /// A single row.
    pub fn row_vector(signs: &[i8]) -> Result<Self> {
        GridMatrix::from_printed(&[signs])
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn get(&self, col: usize, row: usize) -> i8 {
        if col == 0 || col > self.cols || row == 0 || row > self.rows {
            return 0;
        }
        self.entries[(col - 1) * self.rows + (row - 1)]
    }

    /// Nonzero cells ordered by column, then row.
    pub fn nonzero_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in 1..=self.cols {
            for r in 1..=self.rows {
                if self.get(c, r) != 0 {
                    out.push((c, r));
                }
            }
        }
        out
    }

    /// `Σ |M(i,j)|`.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&v| v != 0).count()
    }

    /// Rows top first.
    pub fn printed(&self) -> Vec<Vec<i8>> {
        (1..=self.rows).rev().map(|r| (1..=self.cols).map(|c| self.get(c, r)).collect()).collect()
    }
}

impl fmt::Display for GridMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> =
            self.printed().iter().map(|r| r.iter().map(|v| format!("{v:>2}")).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&lines.join("\n"))
    }
}

impl TryFrom<MatrixJson> for GridMatrix {
    type Error = Error;
    fn try_from(j: MatrixJson) -> Result<Self> {
        GridMatrix::new(j.cols, j.rows, &j.entries)
    }
}

impl From<GridMatrix> for MatrixJson {
    fn from(m: GridMatrix) -> Self {
        let entries = m.nonzero_cells().into_iter().map(|(c, r)| (c, r, m.get(c, r))).collect();
        MatrixJson { cols: m.cols, rows: m.rows, entries }
    }
}

/// Each entry becomes a 2×2 block: `1` the increasing diagonal, `-1` the
/// decreasing one. The result always factors with `c_k = (-1)^k`, `r_ℓ = (-1)^ℓ`.
pub fn expand_to_pmm(m: &GridMatrix) -> GridMatrix {
    let mut entries = Vec::new();
    for (c, r) in m.nonzero_cells() {
        let (c0, r0) = (2 * c - 1, 2 * r - 1);
        if m.get(c, r) == 1 {
            entries.extend([(c0, r0, 1), (c0 + 1, r0 + 1, 1)]);
        } else {
            entries.extend([(c0, r0 + 1, -1), (c0 + 1, r0, -1)]);
        }
    }
    GridMatrix::new(2 * m.cols, 2 * m.rows, &entries).expect("expansion of a valid matrix")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Signs {
    pub columns: Vec<i8>,
    pub rows: Vec<i8>,
}

/// Column and row signs with `M(i,j) = c_i r_j` on every nonzero entry.
///
/// Signs are propagated through the bipartite graph of nonzero cells; in each
/// connected piece the least column (or, failing that, row) gets `+1`, and
/// empty lines get `+1`. So `c_1 = +1` whenever that is a free choice.
#[allow(clippy::needless_range_loop)]
pub fn is_pmm(m: &GridMatrix) -> Option<Signs> {
    let mut col: Vec<i8> = vec![0; m.cols + 1];
    let mut row: Vec<i8> = vec![0; m.rows + 1];
    // Nodes: columns 1..=cols, rows as cols+1..=cols+rows.
    for start in 1..=m.cols + m.rows {
        let assigned = if start <= m.cols { col[start] } else { row[start - m.cols] };
        if assigned != 0 {
            continue;
        }
        if start <= m.cols {
            col[start] = 1;
        } else {
            row[start - m.cols] = 1;
        }
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            if x <= m.cols {
                for r in 1..=m.rows {
                    let v = m.get(x, r);
                    if v == 0 {
                        continue;
                    }
                    let want = v * col[x];
                    if row[r] == 0 {
                        row[r] = want;
                        stack.push(m.cols + r);
                    } else if row[r] != want {
                        return None;
                    }
                }
            } else {
                let r = x - m.cols;
                for c in 1..=m.cols {
                    let v = m.get(c, r);
                    if v == 0 {
                        continue;
                    }
                    let want = v * row[r];
                    if col[c] == 0 {
                        col[c] = want;
                        stack.push(c);
                    } else if col[c] != want {
                        return None;
                    }
                }
            }
        }
    }
    Some(Signs { columns: col[1..].to_vec(), rows: row[1..].to_vec() })
}

/// A combinatorial `M`-drawing: which cell each entry sits in, and the order
/// in which entries are read off by distance from their cells' base points.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GridDrawing {
    pub matrix: GridMatrix,
    pub signs: Signs,
    pub host: Permutation,
    /// `cell_of[i - 1]` is the `(col, row)` of the entry at index `i`.
    pub cell_of: Vec<(usize, usize)>,
    /// Values in reading order.
    pub reading_order: Permutation,
}

/// Checks the signs factor the matrix, every entry sits in a nonzero cell, the
/// cells respect index and value order, and the reading order runs along each
/// column and row in the direction of its sign. Monotonicity inside a cell
/// follows from the last two.
pub fn validate_drawing(d: &GridDrawing) -> bool {
    let m = &d.matrix;
    let n = d.host.len();
    if d.signs.columns.len() != m.cols
        || d.signs.rows.len() != m.rows
        || d.cell_of.len() != n
        || d.reading_order.len() != n
    {
        return false;
    }
    for (c, r) in m.nonzero_cells() {
        if m.get(c, r) != d.signs.columns[c - 1] * d.signs.rows[r - 1] {
            return false;
        }
    }
    if d.cell_of.iter().any(|&(c, r)| m.get(c, r) == 0) {
        return false;
    }
    // Columns are index blocks, rows are value blocks.
    for i in 1..n {
        if d.cell_of[i - 1].0 > d.cell_of[i].0 {
            return false;
        }
    }
    let by_value: Vec<(usize, usize)> = (1..=n).map(|x| d.cell_of[d.host.index_of(x) - 1]).collect();
    for x in 1..n {
        if by_value[x - 1].1 > by_value[x].1 {
            return false;
        }
    }
    // Along each line, reading order must follow the sign.
    let mut last_index: Vec<Option<usize>> = vec![None; m.cols + 1];
    let mut last_value: Vec<Option<usize>> = vec![None; m.rows + 1];
    for &x in d.reading_order.values() {
        let i = d.host.index_of(x);
        let (c, r) = d.cell_of[i - 1];
        if let Some(prev) = last_index[c] {
            if (i > prev) != (d.signs.columns[c - 1] == 1) {
                return false;
            }
        }
        if let Some(prev) = last_value[r] {
            if (x > prev) != (d.signs.rows[r - 1] == 1) {
                return false;
            }
        }
        last_index[c] = Some(i);
        last_value[r] = Some(x);
    }
    true
}

/// One letter per nonzero cell (cells ordered by column, then row), the word
/// read in reading order. Position `i` of the word is the vertex `τ(i)`.
pub fn drawing_to_lettering(d: &GridDrawing) -> Result<Encoding> {
    if !validate_drawing(d) {
        return Err(Error::Precondition("invalid drawing".into()));
    }
    let m = &d.matrix;
    let cells = m.nonzero_cells();
    let letter = |cell: (usize, usize)| cells.binary_search(&cell).expect("nonzero cell") + 1;
    let (cs, rs) = (&d.signs.columns, &d.signs.rows);
    let mut decoder = BTreeSet::new();
    for &(k, l) in &cells {
        for &(k2, l2) in &cells {
            let (a, b) = (letter((k, l)), letter((k2, l2)));
            if (k, l) == (k2, l2) {
                if m.get(k, l) == -1 {
                    decoder.insert((a, a));
                }
            } else if k < k2 && l > l2 {
                decoder.insert((a, b));
                decoder.insert((b, a));
            } else if l == l2 && k < k2 {
                decoder.insert(if rs[l - 1] == 1 { (b, a) } else { (a, b) });
            } else if k == k2 && l < l2 {
                decoder.insert(if cs[k - 1] == 1 { (b, a) } else { (a, b) });
            }
        }
    }
    let word = d.reading_order.values().iter().map(|&x| letter(d.cell_of[d.host.index_of(x) - 1])).collect();
    let lettering = Lettering::new(cells.len(), word, decoder)?;
    Ok(Encoding { lettering, order: d.reading_order.values().to_vec() })
}

/// Entries `2k-1, 2k` share column `k` of a one-row matrix, whose sign records
/// whether that pair ascends. A lone last entry gets `-1`.
///
/// With a single row of sign `+1`, the reading order has to list values
/// bottom to top, so it is the identity.
pub fn monotone_run_drawing(p: &Permutation) -> GridDrawing {
    let v = p.values();
    let n = v.len();
    let cols = n.div_ceil(2);
    let signs: Vec<i8> = (0..cols).map(|k| if 2 * k + 1 == n || v[2 * k] > v[2 * k + 1] { -1 } else { 1 }).collect();
    let matrix = GridMatrix::row_vector(&signs).expect("n >= 1");
    GridDrawing {
        matrix,
        signs: Signs { columns: signs, rows: vec![1] },
        host: p.clone(),
        cell_of: (0..n).map(|i| (i / 2 + 1, 1)).collect(),
        reading_order: Permutation::identity(n),
    }
}

/// Fewest contiguous monotone blocks covering the one-line notation.
pub fn min_monotone_runs(p: &Permutation) -> usize {
    let v = p.values();
    let n = v.len();
    let mut best = vec![usize::MAX; n + 1];
    best[0] = 0;
    for end in 1..=n {
        // Grow the last block leftwards while it stays monotone.
        let (mut up, mut down) = (true, true);
        for start in (0..end).rev() {
            if start + 1 < end {
                up &= v[start] < v[start + 1];
                down &= v[start] > v[start + 1];
            }
            if !up && !down {
                break;
            }
            best[end] = best[end].min(best[start] + 1);
        }
    }
    best[n]
}

pub const EXPECTATION_ENUM_CAP: usize = 8;

/// Means over `S_n`, or the closed forms, as exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DescentExpectations {
    pub n: usize,
    pub x_d: Rational64,
    pub x_ddd: Rational64,
    pub x_ddadd: Rational64,
    /// `311n/720 + 109/144`, which equals `1 + E[X_d] - E[X_ddd] - E[X_ddadd]`.
    pub bound: Rational64,
}

/// `(n-1)/2`, `(n-3)/24` and `19(n-5)/720`; the last needs `n >= 6`.
pub fn descent_expectations(n: usize) -> Result<DescentExpectations> {
    if n < 6 {
        return Err(Error::Precondition("the closed forms need n >= 6".into()));
    }
    let n_ = n as i64;
    let r = Rational64::new;
    Ok(DescentExpectations {
        n,
        x_d: r(n_ - 1, 2),
        x_ddd: r(n_ - 3, 24),
        x_ddadd: r(19 * (n_ - 5), 720),
        bound: r(311 * n_, 720) + r(109, 144),
    })
}

/// Exhaustive means over `S_n`, together with the exact `E[X_r]`.
pub fn enumerate_descent_means(n: usize) -> Result<(DescentExpectations, Rational64)> {
    check_cap("descent enumeration", n, EXPECTATION_ENUM_CAP)?;
    let (mut d, mut ddd, mut ddadd, mut runs, mut count) = (0i64, 0i64, 0i64, 0i64, 0i64);
    for p in Permutation::all(n) {
        let s = descent_profile(&p);
        d += s.x_d as i64;
        ddd += s.x_ddd as i64;
        ddadd += s.x_ddadd as i64;
        runs += min_monotone_runs(&p) as i64;
        count += 1;
    }
    let r = |x: i64| Rational64::new(x, count);
    Ok((
        DescentExpectations { n, x_d: r(d), x_ddd: r(ddd), x_ddadd: r(ddadd), bound: r(count + d - ddd - ddadd) },
        Rational64::new(runs, count),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invgraph::inversion_graph;
    use crate::letters::decode;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn running_example() -> GridDrawing {
        let matrix = GridMatrix::new(3, 2, &[(1, 1, 1), (2, 2, -1), (3, 1, -1), (3, 2, 1)]).unwrap();
        let signs = is_pmm(&matrix).unwrap();
        assert_eq!(signs, Signs { columns: vec![1, 1, -1], rows: vec![1, -1] });
        GridDrawing {
            matrix,
            signs,
            host: p("13865472"),
            cell_of: vec![(1, 1), (1, 1), (2, 2), (2, 2), (2, 2), (3, 1), (3, 2), (3, 1)],
            reading_order: p("18276345"),
        }
    }

    #[test]
    fn expansion() {
        let m = GridMatrix::from_printed(&[&[1, 1], &[1, -1]]).unwrap();
        let e = expand_to_pmm(&m);
        let want: Vec<Vec<i8>> = vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0], vec![0, 1, -1, 0], vec![1, 0, 0, -1]];
        assert_eq!(e.printed(), want);
        let s = is_pmm(&e).unwrap();
        // Up to a global flip, c_k = (-1)^k and r_l = (-1)^l.
        let alt = |len: usize| (1..=len).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect::<Vec<i8>>();
        let neg = |v: Vec<i8>| v.into_iter().map(|x| -x).collect::<Vec<i8>>();
        assert_eq!(s.columns, neg(alt(4)));
        assert_eq!(s.rows, neg(alt(4)));
        assert!(is_pmm(&m).is_none());
        let one = expand_to_pmm(&GridMatrix::row_vector(&[1]).unwrap());
        assert_eq!(one.printed(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn running_example_word() {
        let d = running_example();
        assert!(validate_drawing(&d));
        let e = drawing_to_lettering(&d).unwrap();
        // Letters: a11 = 1, a22 = 2, a31 = 3, a32 = 4.
        assert_eq!(e.lettering.word(), &[1, 2, 3, 4, 2, 1, 3, 2]);
        for pair in [(2, 2), (3, 3), (2, 3), (3, 2), (3, 1), (2, 4), (3, 4)] {
            assert!(e.lettering.contains(pair.0, pair.1), "{pair:?}");
        }
        assert!(e.encodes(&inversion_graph(&d.host)));
        assert_eq!(decode(&e.lettering).relabel(d.reading_order.values()), inversion_graph(&d.host));
    }

    #[test]
    fn broken_row_order() {
        let mut d = running_example();
        // Values 1,2,3,4 of row 1 read as 4,2,3,1 instead.
        d.reading_order = p("48276315");
        assert!(!validate_drawing(&d));
    }

    #[test]
    fn runs_drawing() {
        let d = monotone_run_drawing(&p("384961275"));
        assert_eq!(d.matrix.printed(), vec![vec![1, 1, -1, 1, -1]]);
        assert!(validate_drawing(&d));
        let e = drawing_to_lettering(&d).unwrap();
        assert!(e.encodes(&inversion_graph(&d.host)));
        assert_eq!(monotone_run_drawing(&Permutation::identity(4)).matrix.printed(), vec![vec![1, 1]]);
        let id = GridDrawing {
            matrix: GridMatrix::row_vector(&[1]).unwrap(),
            signs: Signs { columns: vec![1], rows: vec![1] },
            host: Permutation::identity(3),
            cell_of: vec![(1, 1); 3],
            reading_order: Permutation::identity(3),
        };
        assert!(validate_drawing(&id));
        let e = drawing_to_lettering(&id).unwrap();
        assert_eq!(e.lettering.decoder().count(), 0);
        assert_eq!(decode(&e.lettering).edge_count(), 0);
    }

    #[test]
    fn runs() {
        assert_eq!(min_monotone_runs(&p("347156982")), 3);
        assert_eq!(min_monotone_runs(&Permutation::decreasing(5)), 1);
        assert_eq!(min_monotone_runs(&p("1")), 1);
    }

    #[test]
    fn expectations() {
        let e = descent_expectations(6).unwrap();
        assert_eq!(e.x_d, Rational64::new(5, 2));
        assert_eq!(e.x_ddd, Rational64::new(1, 8));
        assert_eq!(e.x_ddadd, Rational64::new(19, 720));
        assert_eq!(e.bound, Rational64::new(2411, 720));
        assert!(descent_expectations(5).is_err());
        let (m, runs) = enumerate_descent_means(6).unwrap();
        assert_eq!(m, e);
        assert!(runs <= e.bound);
    }
}
