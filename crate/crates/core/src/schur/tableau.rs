use super::partition::Partition;

/// A filling of a Young diagram, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Rows weakly increasing, columns strictly increasing, entries `1..=max`.
    pub fn is_semistandard(&self, max: u32) -> bool {
        for (k, row) in self.rows.iter().enumerate() {
            if row.len() as u32 != self.shape.part(k + 1) {
                return false;
            }
            if row.iter().any(|&e| e == 0 || e > max) {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if k > 0 && row.iter().enumerate().any(|(l, &e)| self.rows[k - 1][l] >= e) {
                return false;
            }
        }
        self.rows.len() == self.shape.len()
    }

    /// Entries of column `l` (0-based), top to bottom.
    pub fn column(&self, l: usize) -> Vec<u32> {
        self.rows.iter().filter_map(|r| r.get(l).copied()).collect()
    }

    pub fn num_columns(&self) -> usize {
        self.shape.part(1) as usize
    }
}

/// All semistandard tableaux of `shape` with entries `≤ max`, in
/// lexicographic order of the row reading word.
pub fn enumerate_ssyt(shape: &Partition, max: u32) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|k| (0..shape.part(k + 1) as usize).map(move |l| (k, l)))
        .collect();
    let mut rows: Vec<Vec<u32>> = (0..shape.len()).map(|k| vec![0; shape.part(k + 1) as usize]).collect();
    let mut out = Vec::new();
    fn fill(i: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<u32>>, max: u32, shape: &Partition, out: &mut Vec<Tableau>) {
        if i == cells.len() {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let (k, l) = cells[i];
        let left = if l > 0 { rows[k][l - 1] } else { 1 };
        let above = if k > 0 { rows[k - 1][l] + 1 } else { 1 };
        for e in left.max(above)..=max {
            rows[k][l] = e;
            fill(i + 1, cells, rows, max, shape, out);
        }
        rows[k][l] = 0;
    }
    fill(0, &cells, &mut rows, max, shape, &mut out);
    out
}
