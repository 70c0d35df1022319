//! Small dense GF(2) matrices with at most 32 columns, rows packed in `u32`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<u32>,
    cols: u32,
}

impl BitMatrix {
    pub fn new(rows: Vec<u32>, cols: u32) -> Self {
        assert!(cols <= 32);
        let mask = if cols == 32 { u32::MAX } else { (1u32 << cols) - 1 };
        assert!(rows.iter().all(|r| r & !mask == 0), "row wider than {cols} columns");
        BitMatrix { rows, cols }
    }

    pub fn from_fn(nrows: u32, cols: u32, mut f: impl FnMut(u32, u32) -> bool) -> Self {
        let rows = (0..nrows)
            .map(|i| (0..cols).filter(|&j| f(i, j)).fold(0u32, |r, j| r | (1 << j)))
            .collect();
        BitMatrix::new(rows, cols)
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn mul_vec(&self, x: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (((r & x).count_ones() & 1) << i))
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    fn rref(&mut self) -> Vec<u32> {
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..self.cols {
            let bit = 1u32 << col;
            let Some(p) = (next..self.rows.len()).find(|&i| self.rows[i] & bit != 0) else {
                continue;
            };
            self.rows.swap(next, p);
            let pivot_row = self.rows[next];
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != next && *row & bit != 0 {
                    *row ^= pivot_row;
                }
            }
            pivots.push(col);
            next += 1;
            if next == self.rows.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> u32 {
        self.clone().rref().len() as u32
    }

    /// Basis of { x : M x = 0 }, one vector per free column.
    pub fn kernel(&self) -> Vec<u32> {
        let mut r = self.clone();
        let pivots = r.rref();
        let pivot_mask = pivots.iter().fold(0u32, |acc, &c| acc | (1 << c));
        (0..self.cols)
            .filter(|c| pivot_mask & (1 << c) == 0)
            .map(|free| {
                let mut x = 1u32 << free;
                for (row, &pc) in r.rows.iter().zip(&pivots) {
                    if row & (1 << free) != 0 {
                        x |= 1 << pc;
                    }
                }
                x
            })
            .collect()
    }
}

/// All 2^len(basis) elements spanned by `basis`.
pub fn span(basis: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32];
    for &b in basis {
        let extra: Vec<u32> = out.iter().map(|v| v ^ b).collect();
        out.extend(extra);
    }
    out
}
