//! Row rank over GF(2) on bit-packed rows.

/// A matrix over GF(2), rows packed 64 columns per word.
pub(crate) struct F2Matrix {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl F2Matrix {
    pub fn new(columns: usize) -> Self {
        F2Matrix { words: columns.div_ceil(64), rows: Vec::new() }
    }

    pub fn push_row(&mut self, set_columns: impl IntoIterator<Item = usize>) {
        let mut row = vec![0u64; self.words];
        for c in set_columns {
            row[c / 64] |= 1 << (c % 64);
        }
        self.rows.push(row);
    }

    /// Rank by Gaussian elimination; consumes the matrix.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.words * 64 {
            let (w, b) = (col / 64, col % 64);
            let Some(pivot) = (rank..self.rows.len()).find(|&r| self.rows[r][w] >> b & 1 == 1)
            else {
                continue;
            };
            self.rows.swap(rank, pivot);
            let pivot_row = self.rows[rank].clone();
            for (r, row) in self.rows.iter_mut().enumerate() {
                if r != rank && row[w] >> b & 1 == 1 {
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x ^= p;
                    }
                }
            }
            rank += 1;
            if rank == self.rows.len() {
                break;
            }
        }
        rank
    }
}
