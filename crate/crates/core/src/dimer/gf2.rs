//! Dense linear systems over GF(2).

/// A system `A x = b` with rows stored as bitsets.
#[derive(Clone, Debug)]
pub struct Gf2System {
    cols: usize,
    words: usize,
    rows: Vec<(Vec<u64>, bool)>,
}

impl Gf2System {
    pub fn new(cols: usize) -> Self {
        Gf2System { cols, words: cols.div_ceil(64), rows: Vec::new() }
    }

    /// Adds an equation `sum_{j in support} x_j = rhs`. Repeated indices
    /// cancel in pairs.
    pub fn push(&mut self, support: impl IntoIterator<Item = usize>, rhs: bool) {
        let mut row = vec![0u64; self.words];
        for j in support {
            assert!(j < self.cols, "column out of range");
            row[j / 64] ^= 1 << (j % 64);
        }
        self.rows.push((row, rhs));
    }

    /// Solves by Gauss-Jordan elimination, pivoting on the lowest column
    /// first; free variables are set to zero. `None` if inconsistent.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let mut rows = self.rows.clone();
        let bit = |r: &Vec<u64>, j: usize| (r[j / 64] >> (j % 64)) & 1 == 1;
        let mut pivots = Vec::new();
        let mut next = 0;
        for j in 0..self.cols {
            let Some(p) = (next..rows.len()).find(|&i| bit(&rows[i].0, j)) else {
                continue;
            };
            rows.swap(next, p);
            let (prow, prhs) = rows[next].clone();
            for (i, (r, rhs)) in rows.iter_mut().enumerate() {
                if i != next && bit(r, j) {
                    for (a, b) in r.iter_mut().zip(&prow) {
                        *a ^= b;
                    }
                    *rhs ^= prhs;
                }
            }
            pivots.push(j);
            next += 1;
        }
        if rows[next..].iter().any(|(_, rhs)| *rhs) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (i, &j) in pivots.iter().enumerate() {
            x[j] = rows[i].1;
        }
        Some(x)
    }

    /// Number of independent equations.
    pub fn rank(&self) -> usize {
        let mut t = self.clone();
        for r in &mut t.rows {
            r.1 = false;
        }
        let mut rows = t.rows;
        let bit = |r: &Vec<u64>, j: usize| (r[j / 64] >> (j % 64)) & 1 == 1;
        let mut rank = 0;
        for j in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| bit(&rows[i].0, j)) else {
                continue;
            };
            rows.swap(rank, p);
            let prow = rows[rank].0.clone();
            for r in rows.iter_mut().skip(rank + 1) {
                if bit(&r.0, j) {
                    for (a, b) in r.0.iter_mut().zip(&prow) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_and_detects_inconsistency() {
        let mut s = Gf2System::new(3);
        s.push([0, 1], true);
        s.push([1, 2], false);
        let x = s.solve().unwrap();
        assert_eq!(x, vec![true, false, false]);
        s.push([0, 2], false);
        assert!(s.solve().is_none());
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn repeated_index_cancels() {
        let mut s = Gf2System::new(2);
        s.push([0, 0, 1], true);
        assert_eq!(s.solve().unwrap(), vec![false, true]);
    }

    #[test]
    fn wide_rows() {
        let mut s = Gf2System::new(130);
        s.push([0, 129], true);
        s.push([64, 129], true);
        s.push([129], true);
        let x = s.solve().unwrap();
        assert!(!x[0] && !x[64] && x[129]);
    }
}
