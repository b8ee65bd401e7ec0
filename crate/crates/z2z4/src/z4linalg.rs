//! Dense linear algebra over Z4, just enough to solve `M t = 0`.
//!
//! Z4 is a chain ring: every entry is a unit (1, 3), the zero divisor 2, or
//! zero. The kernel routine diagonalizes with row operations (which do not
//! change the kernel) and column operations (tracked in a companion matrix
//! so solutions can be mapped back). Deterministic pivoting: units before
//! twos, lowest column first, then lowest row.

/// Row-major matrix over Z4.
#[derive(Debug, Clone)]
pub(crate) struct Z4Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl Z4Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Z4Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Z4Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v & 3;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn scale_row(&mut self, r: usize, c: u8) {
        for j in 0..self.cols {
            let v = self.at(r, j);
            self.set(r, j, (v * c) & 3);
        }
    }

    /// row[dst] -= c * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, c: u8) {
        if c & 3 == 0 {
            return;
        }
        let k = 4 - (c & 3);
        for j in 0..self.cols {
            let v = self.at(dst, j) + k * self.at(src, j);
            self.set(dst, j, v & 3);
        }
    }

    /// col[dst] -= c * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, c: u8) {
        if c & 3 == 0 {
            return;
        }
        let k = 4 - (c & 3);
        for i in 0..self.rows {
            let v = self.at(i, dst) + k * self.at(i, src);
            self.set(i, dst, v & 3);
        }
    }

    /// Column `j` as a vector.
    fn col(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }
}

/// Generators of `{ t in Z4^cols : M t = 0 }` as a Z4-module.
///
/// Every solution is a Z4-combination of the returned vectors; the list is
/// not required to be independent for the callers (they reduce afterwards).
pub(crate) fn kernel_mod4(mat: &Z4Mat) -> Vec<Vec<u8>> {
    let mut m = mat.clone();
    // Tracks column operations: final solutions are p * (kernel of the
    // diagonalized matrix).
    let mut p = Z4Mat::identity(m.cols);
    let steps = m.rows.min(m.cols);
    let mut diag: Vec<u8> = Vec::new();

    for r in 0..steps {
        // Unit pivot first, then a 2; lowest column, then lowest row.
        let mut pivot: Option<(usize, usize)> = None;
        'unit: for j in r..m.cols {
            for i in r..m.rows {
                if m.at(i, j) & 1 == 1 {
                    pivot = Some((i, j));
                    break 'unit;
                }
            }
        }
        if pivot.is_none() {
            'two: for j in r..m.cols {
                for i in r..m.rows {
                    if m.at(i, j) == 2 {
                        pivot = Some((i, j));
                        break 'two;
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(pi, r);
        m.swap_cols(pj, r);
        p.swap_cols(pj, r);

        let d = m.at(r, r);
        if d == 3 {
            m.scale_row(r, 3);
        }
        let d = m.at(r, r); // now 1 or 2
        // Clear the pivot column with row operations. With d = 2 the
        // remaining entries of the column are even, so one subtraction
        // suffices.
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let c = m.at(i, r);
            if c != 0 {
                m.sub_row(i, r, if d == 1 { c } else { 1 });
            }
        }
        // Clear the pivot row with column operations (tracked in p). With
        // d = 2 the remaining row entries are even as well.
        for j in 0..m.cols {
            if j == r {
                continue;
            }
            let c = m.at(r, j);
            if c != 0 {
                let coeff = if d == 1 { c } else { 1 };
                m.sub_col(j, r, coeff);
                p.sub_col(j, r, coeff);
            }
        }
        diag.push(d);
    }

    let mut gens = Vec::new();
    for (r, &d) in diag.iter().enumerate() {
        if d == 2 {
            let mut g = p.col(r);
            for v in g.iter_mut() {
                *v = (*v * 2) & 3;
            }
            gens.push(g);
        }
    }
    for j in diag.len()..m.cols {
        gens.push(p.col(j));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(mat: &Z4Mat, t: &[u8]) -> Vec<u8> {
        (0..mat.rows)
            .map(|i| {
                let acc: u32 = t
                    .iter()
                    .enumerate()
                    .map(|(j, &x)| (mat.at(i, j) * x) as u32)
                    .sum();
                (acc % 4) as u8
            })
            .collect()
    }

    fn brute_kernel_size(mat: &Z4Mat) -> usize {
        let total = 4usize.pow(mat.cols as u32);
        (0..total)
            .filter(|&k| {
                let t: Vec<u8> = (0..mat.cols)
                    .map(|j| ((k >> (2 * j)) & 3) as u8)
                    .collect();
                apply(mat, &t).iter().all(|&v| v == 0)
            })
            .count()
    }

    fn span_size(gens: &[Vec<u8>], cols: usize) -> usize {
        let mut set = std::collections::BTreeSet::new();
        set.insert(vec![0u8; cols]);
        let mut frontier = vec![vec![0u8; cols]];
        while let Some(cur) = frontier.pop() {
            for g in gens {
                let next: Vec<u8> = cur.iter().zip(g).map(|(a, b)| (a + b) & 3).collect();
                if set.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        set.len()
    }

    #[test]
    fn kernel_matches_brute_force() {
        // A pseudo-random bank of small matrices, checked exhaustively.
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let rows = 1 + (next() % 3) as usize;
            let cols = 1 + (next() % 5) as usize;
            let mut m = Z4Mat::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, (next() % 4) as u8);
                }
            }
            let gens = kernel_mod4(&m);
            for g in &gens {
                assert!(apply(&m, g).iter().all(|&v| v == 0), "generator not in kernel");
            }
            assert_eq!(span_size(&gens, cols), brute_kernel_size(&m));
        }
    }

    #[test]
    fn kernel_of_empty_and_zero() {
        let m = Z4Mat::zero(0, 3);
        assert_eq!(span_size(&kernel_mod4(&m), 3), 64);
        let z = Z4Mat::zero(2, 2);
        assert_eq!(span_size(&kernel_mod4(&z), 2), 16);
        let id = Z4Mat::identity(3);
        assert_eq!(span_size(&kernel_mod4(&id), 3), 1);
    }
}
