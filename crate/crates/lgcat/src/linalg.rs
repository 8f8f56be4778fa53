//! Exact sparse linear algebra over the rationals: rank, kernel bases, and
//! solvability, used by the cohomology slabs and the brute-force membership
//! oracle. Pivots are chosen to keep fill-in low (fewest-entries column, then
//! fewest-entries row) and the whole computation is deterministic.

use std::collections::BTreeMap;

use num::{BigRational, Zero};

type Col = BTreeMap<usize, BigRational>;

fn to_col(entries: &[(usize, BigRational)]) -> Col {
    let mut c = Col::new();
    for (r, v) in entries {
        if !v.is_zero() {
            let e = c.entry(*r).or_insert_with(BigRational::zero);
            *e += v.clone();
        }
    }
    c.retain(|_, v| !v.is_zero());
    c
}

/// col_dst -= factor * col_src
fn axpy(dst: &mut Col, factor: &BigRational, src: &Col) {
    if factor.is_zero() {
        return;
    }
    for (r, v) in src {
        let e = dst.entry(*r).or_insert_with(BigRational::zero);
        *e -= factor * v;
        if e.is_zero() {
            dst.remove(r);
        }
    }
}

struct Eliminator {
    cols: Vec<Col>,
    /// Parallel combination vectors (in terms of original column indices);
    /// only maintained when kernel tracking is requested.
    combos: Option<Vec<Col>>,
    row_nnz: BTreeMap<usize, usize>,
    alive: Vec<bool>,
}

impl Eliminator {
    fn new(cols: &[Vec<(usize, BigRational)>], track: bool) -> Self {
        let cols: Vec<Col> = cols.iter().map(|c| to_col(c)).collect();
        let mut row_nnz = BTreeMap::new();
        for c in &cols {
            for r in c.keys() {
                *row_nnz.entry(*r).or_insert(0) += 1;
            }
        }
        let combos = track.then(|| {
            (0..cols.len())
                .map(|i| {
                    let mut c = Col::new();
                    c.insert(i, BigRational::from_integer(1.into()));
                    c
                })
                .collect()
        });
        let alive = vec![true; cols.len()];
        Eliminator { cols, combos, row_nnz, alive }
    }

    fn pick_pivot(&self) -> Option<(usize, usize)> {
        // fewest-entries live column, then fewest-entries row inside it
        let mut best: Option<(usize, usize, usize)> = None; // (nnz, col) pick
        for (ci, c) in self.cols.iter().enumerate() {
            if !self.alive[ci] || c.is_empty() {
                continue;
            }
            let n = c.len();
            if best.map(|(bn, _, _)| n < bn).unwrap_or(true) {
                best = Some((n, ci, 0));
                if n == 1 {
                    break;
                }
            }
        }
        let (_, ci, _) = best?;
        let mut brow: Option<(usize, usize)> = None;
        for r in self.cols[ci].keys() {
            let rn = self.row_nnz[r];
            if brow.map(|(bn, br)| (rn, *r) < (bn, br)).unwrap_or(true) {
                brow = Some((rn, *r));
            }
        }
        Some((brow.unwrap().1, ci))
    }

    fn eliminate(&mut self) -> usize {
        let mut rank = 0;
        while let Some((pr, pc)) = self.pick_pivot() {
            rank += 1;
            let pivot_col = self.cols[pc].clone();
            let pivot_combo = self.combos.as_ref().map(|cs| cs[pc].clone());
            let pivot_val = pivot_col[&pr].clone();
            for r in pivot_col.keys() {
                *self.row_nnz.get_mut(r).unwrap() -= 1;
            }
            self.alive[pc] = false;
            self.cols[pc].clear();
            for ci in 0..self.cols.len() {
                if !self.alive[ci] {
                    continue;
                }
                let Some(v) = self.cols[ci].get(&pr).cloned() else { continue };
                let factor = &v / &pivot_val;
                for r in self.cols[ci].keys() {
                    *self.row_nnz.get_mut(r).unwrap() -= 1;
                }
                axpy(&mut self.cols[ci], &factor, &pivot_col);
                for r in self.cols[ci].keys() {
                    *self.row_nnz.get_mut(r).unwrap() += 1;
                }
                if let (Some(cs), Some(pcm)) = (self.combos.as_mut(), pivot_combo.as_ref()) {
                    let mut own = std::mem::take(&mut cs[ci]);
                    axpy(&mut own, &factor, pcm);
                    cs[ci] = own;
                }
            }
        }
        rank
    }
}

/// Rank of the column family over the rationals. `_rows` is documentary; row
/// indices live inside the sparse entries.
pub fn rank(_rows: usize, cols: &[Vec<(usize, BigRational)>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let mut e = Eliminator::new(cols, false);
    e.eliminate()
}

/// A basis of the kernel, expressed as combinations of the original columns.
pub fn kernel_basis(
    _rows: usize,
    cols: &[Vec<(usize, BigRational)>],
) -> Vec<Vec<(usize, BigRational)>> {
    if cols.is_empty() {
        return Vec::new();
    }
    let mut e = Eliminator::new(cols, true);
    e.eliminate();
    let mut out = Vec::new();
    for ci in 0..e.cols.len() {
        if e.alive[ci] && e.cols[ci].is_empty() {
            let combo = &e.combos.as_ref().unwrap()[ci];
            out.push(combo.iter().map(|(k, v)| (*k, v.clone())).collect());
        }
    }
    out
}

/// Does `target` lie in the span of `cols`?
pub fn solvable(
    rows: usize,
    cols: &[Vec<(usize, BigRational)>],
    target: &[(usize, BigRational)],
) -> bool {
    solve_in_span(rows, cols, target).is_some()
}

/// Express `target` as a combination of `cols`; `None` when impossible. The
/// returned pairs are (column index, coefficient).
pub fn solve_in_span(
    rows: usize,
    cols: &[Vec<(usize, BigRational)>],
    target: &[(usize, BigRational)],
) -> Option<Vec<(usize, BigRational)>> {
    if to_col(target).is_empty() {
        return Some(Vec::new());
    }
    let mut with: Vec<Vec<(usize, BigRational)>> = cols.to_vec();
    with.push(target.to_vec());
    let n = cols.len();
    for combo in kernel_basis(rows, &with) {
        let last = combo.iter().find(|(i, _)| *i == n).map(|(_, c)| c.clone());
        if let Some(last) = last {
            if !last.is_zero() {
                return Some(
                    combo
                        .into_iter()
                        .filter(|(i, _)| *i != n)
                        .map(|(i, c)| (i, -&c / &last))
                        .collect(),
                );
            }
        }
    }
    None
}

/// Row-reduced incremental span for membership tests with witnesses kept by
/// the caller.
pub struct IncrementalSpan {
    /// (pivot row, column) with column normalized to 1 at the pivot row and
    /// fully reduced against all other pivots.
    pivots: Vec<(usize, Col)>,
}

impl Default for IncrementalSpan {
    fn default() -> Self {
        Self::new()
    }
}

impl IncrementalSpan {
    pub fn new() -> Self {
        IncrementalSpan { pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, col: &mut Col) {
        for (r, pcol) in &self.pivots {
            if let Some(v) = col.get(r).cloned() {
                axpy(col, &v, pcol);
            }
        }
    }

    /// Absorb a vector; returns true when it enlarged the span.
    pub fn absorb(&mut self, entries: &[(usize, BigRational)]) -> bool {
        let mut col = to_col(entries);
        self.reduce(&mut col);
        let Some((&r, _)) = col.iter().next() else { return false };
        let pv = col[&r].clone();
        for v in col.values_mut() {
            *v /= &pv;
        }
        // back-substitute into existing pivots
        for (_, pcol) in self.pivots.iter_mut() {
            if let Some(v) = pcol.get(&r).cloned() {
                axpy(pcol, &v, &col);
            }
        }
        self.pivots.push((r, col));
        true
    }

    pub fn contains(&self, entries: &[(usize, BigRational)]) -> bool {
        let mut col = to_col(entries);
        self.reduce(&mut col);
        col.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        // columns of [[1,2,3],[2,4,6],[0,1,1]] as 3 columns in R^3? Use:
        // c0 = (1,0), c1 = (0,1), c2 = (1,1): rank 2, kernel (1,1,-1)
        let cols = vec![
            vec![(0, q(1))],
            vec![(1, q(1))],
            vec![(0, q(1)), (1, q(1))],
        ];
        assert_eq!(rank(2, &cols), 2);
        let ker = kernel_basis(2, &cols);
        assert_eq!(ker.len(), 1);
        let combo: BTreeMap<usize, BigRational> = ker[0].iter().cloned().collect();
        // verify the combination really is a kernel vector
        let mut acc = BTreeMap::<usize, BigRational>::new();
        for (ci, f) in &combo {
            for (r, v) in &cols[*ci] {
                let e = acc.entry(*r).or_insert_with(BigRational::zero);
                *e += f * v;
            }
        }
        assert!(acc.values().all(|v| v.is_zero()));
    }

    #[test]
    fn solvability() {
        let cols = vec![vec![(0, q(1)), (1, q(1))], vec![(1, q(2))]];
        assert!(solvable(2, &cols, &[(0, q(3)), (1, q(5))]));
        assert!(!solvable(3, &cols, &[(2, q(1))]));
        assert!(solvable(2, &cols, &[]));
    }

    #[test]
    fn rank_with_rational_entries() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let cols = vec![vec![(0, half.clone()), (1, q(1))], vec![(0, q(1)), (1, q(2))]];
        assert_eq!(rank(2, &cols), 1);
    }
}
