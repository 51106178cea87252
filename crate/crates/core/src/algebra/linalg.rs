//! Exact linear algebra over `Q(i)`: sparse row echelon forms and dense
//! nullspaces.

use std::collections::BTreeMap;

use super::scalar::GaussRat;

/// A sparse vector with ordered coordinates.
pub type SparseVec<K> = BTreeMap<K, GaussRat>;

/// Incrementally built row echelon basis. Each stored row has leading
/// coefficient one at its pivot key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(&ri) = self.pivots.get(&k) {
                let c = v[&k].clone();
                axpy(&mut v, &-&c, &self.rows[ri]);
            }
            cursor = Some(k);
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let r = self.reduce(v);
        let Some((k, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading coefficient");
        let row: SparseVec<K> = r.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        self.pivots.insert(k, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// `v += c · w`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &GaussRat, w: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        let add = c * x;
        let remove = match v.get_mut(k) {
            Some(y) => {
                *y = &*y + &add;
                y.is_zero()
            }
            None => {
                v.insert(k.clone(), add);
                false
            }
        };
        if remove {
            v.remove(k);
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(vs: &[SparseVec<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Basis of `{c : Σ_i c_i · cols[i] = 0}`.
pub fn nullspace<K: Ord + Clone>(cols: &[SparseVec<K>]) -> Vec<Vec<GaussRat>> {
    let n = cols.len();
    // Row-reduce the transpose system: unknowns are the column weights.
    let mut keys: Vec<K> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let mut m: Vec<Vec<GaussRat>> = keys
        .iter()
        .map(|k| cols.iter().map(|c| c.get(k).cloned().unwrap_or_else(GaussRat::zero)).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..n {
                    if !m[row][j].is_zero() {
                        let d = &f * &m[row][j];
                        m[i][j] = &m[i][j] - &d;
                    }
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![GaussRat::zero(); n];
            v[f] = GaussRat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&m[r][f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, GaussRat::from_int(c))).collect()
    }

    #[test]
    fn dependent_rows_do_not_raise_rank() {
        let a = sv(&[(0, 1), (1, 2)]);
        let b = sv(&[(1, 1), (2, 1)]);
        let c = sv(&[(0, 1), (1, 4), (2, 2)]);
        assert_eq!(rank(&[a, b, c]), 2);
    }

    #[test]
    fn nullspace_of_dependent_columns() {
        let a = sv(&[(0, 1), (1, 2)]);
        let b = sv(&[(0, 2), (1, 4)]);
        let ns = nullspace(&[a.clone(), b.clone()]);
        assert_eq!(ns.len(), 1);
        let mut s = SparseVec::new();
        axpy(&mut s, &ns[0][0], &a);
        axpy(&mut s, &ns[0][1], &b);
        assert!(s.is_empty());
    }

    #[test]
    fn complex_pivots() {
        let i = GaussRat::i();
        let a: SparseVec<u32> = [(0, i.clone()), (1, GaussRat::one())].into_iter().collect();
        let b: SparseVec<u32> = [(0, GaussRat::from_int(-1)), (1, i)].into_iter().collect();
        // b = i·a
        assert_eq!(rank(&[a, b]), 1);
    }
}
