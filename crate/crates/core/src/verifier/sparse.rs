use super::scalar::Scalar;

/// Square sparse matrix stored by rows, each row sorted by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    n: usize,
    conductor: u32,
    rows: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(conductor: u32, n: usize) -> Self {
        SparseMatrix {
            n,
            conductor,
            rows: vec![Vec::new(); n],
        }
    }

    pub fn identity(conductor: u32, n: usize) -> Self {
        SparseMatrix {
            n,
            conductor,
            rows: (0..n).map(|i| vec![(i, S::one(conductor))]).collect(),
        }
    }

    /// Builds from unsorted triplets, summing duplicates.
    pub fn from_triplets(conductor: u32, n: usize, entries: Vec<(usize, usize, S)>) -> Self {
        let mut rows: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        for (r, c, v) in entries {
            rows[r].push((c, v));
        }
        let rows = rows.into_iter().map(|row| normalize(row)).collect();
        SparseMatrix { n, conductor, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, r: usize) -> &[(usize, S)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.rows[r][i].1.clone(),
            Err(_) => S::zero(self.conductor),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch in sparse product");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: Vec<(usize, S)> = Vec::new();
                for (k, a) in row {
                    for (j, b) in &o.rows[*k] {
                        acc.push((*j, a.mul(b)));
                    }
                }
                normalize(acc)
            })
            .collect();
        SparseMatrix {
            n: self.n,
            conductor: self.conductor,
            rows,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_scaled(o, &S::one(self.conductor))
    }

    /// `self + f·o`.
    pub fn add_scaled(&self, o: &Self, f: &S) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(a, b)| {
                let mut acc = a.clone();
                acc.extend(b.iter().map(|(c, v)| (*c, f.mul(v))));
                normalize(acc)
            })
            .collect();
        SparseMatrix {
            n: self.n,
            conductor: self.conductor,
            rows,
        }
    }

    pub fn scale(&self, f: &S) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(c, v)| (*c, f.mul(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseMatrix {
            n: self.n,
            conductor: self.conductor,
            rows,
        }
    }

    /// Largest entry magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .map(|(_, v)| v.magnitude())
            .fold(0.0, f64::max)
    }

    /// Whether every entry is zero up to the mode's tolerance.
    pub fn is_negligible(&self) -> bool {
        self.rows.iter().flatten().all(|(_, v)| v.negligible())
    }

    /// `self == o` up to the mode's tolerance.
    pub fn approx_eq(&self, o: &Self) -> bool {
        self.add_scaled(o, &S::zero(self.conductor).sub(&S::one(self.conductor)))
            .is_negligible()
    }

    pub fn is_identity(&self) -> bool {
        self.approx_eq(&Self::identity(self.conductor, self.n))
    }
}

fn normalize<S: Scalar>(mut row: Vec<(usize, S)>) -> Vec<(usize, S)> {
    row.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, S)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.add(&v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}
