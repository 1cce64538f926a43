//! Word-packed matrices over F_2.

/// A dense F_2 matrix, one `u64` word slice per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.data[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words_per_row + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Rank by XOR elimination. Consumes a copy of the rows.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail.iter_mut() {
                if row[w] & bit != 0 {
                    for (a, b) in row[w..].iter_mut().zip(&pivot[w..]) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        let mut m = BitMatrix::zeros(130, 130);
        assert_eq!(m.rank(), 0);
        for i in 0..130 {
            m.set(i, i, true);
        }
        assert_eq!(m.rank(), 130);
        assert!(m.get(129, 129));
        assert!(!m.get(0, 129));
    }

    #[test]
    fn dependent_rows() {
        // rows a, b, a^b
        let mut m = BitMatrix::zeros(3, 70);
        for c in [0, 5, 69] {
            m.set(0, c, true);
        }
        for c in [5, 64] {
            m.set(1, c, true);
        }
        for c in [0, 64, 69] {
            m.set(2, c, true);
        }
        assert_eq!(m.rank(), 2);
        m.set(2, 1, true);
        assert_eq!(m.rank(), 3);
    }
}
