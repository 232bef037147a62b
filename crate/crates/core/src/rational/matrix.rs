use super::cleared::{self, ZPoly};
use super::RatFuncT;

/// Dense row-major matrix over Q(t).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QtMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFuncT>,
}

/// Row echelon form over Z[t] produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<ZPoly>>,
    pivots: Vec<usize>,
    swaps: usize,
}

impl QtMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QtMatrix {
            rows,
            cols,
            entries: vec![RatFuncT::zero(); rows * cols],
        }
    }

    /// `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<RatFuncT>>) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(QtMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFuncT {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFuncT) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFuncT] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Same matrix with columns permuted: column `k` of the result is column
    /// `order[k]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.cols);
        let mut out = QtMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (k, &j) in order.iter().enumerate() {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[RatFuncT]) -> Vec<RatFuncT> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(RatFuncT::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Clears each row to Z[t]. Returns the rows and the product of the
    /// row denominators, so `det(self) = det(rows) / scale`.
    fn cleared_rows(&self) -> (Vec<Vec<ZPoly>>, ZPoly) {
        let mut scale = ZPoly::one();
        let rows = (0..self.rows)
            .map(|i| {
                let items: Vec<&RatFuncT> = self.row(i).iter().collect();
                let (row, d) = cleared::clear_t(&items);
                scale = scale.mul(&d);
                row
            })
            .collect();
        (rows, scale)
    }

    /// Bareiss elimination over Z[t]; pivots are the first nonzero entry
    /// found scanning rows top-down in each column, left to right.
    fn echelon(&self) -> Echelon {
        let (a, _) = self.cleared_rows();
        self.echelon_of(a)
    }

    fn echelon_of(&self, mut a: Vec<Vec<ZPoly>>) -> Echelon {
        let mut prev = ZPoly::one();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                swaps += 1;
            }
            let (top, rest) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                if row[c].is_zero() {
                    for e in row[c + 1..].iter_mut() {
                        if !e.is_zero() {
                            *e = cleared::exquo_z(&e.mul(&pivot_row[c]), &prev);
                        }
                    }
                } else {
                    let factor = row[c].clone();
                    for j in c + 1..self.cols {
                        let v = pivot_row[c].mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                        row[j] = if v.is_zero() { v } else { cleared::exquo_z(&v, &prev) };
                    }
                    row[c] = ZPoly::zero();
                }
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        Echelon {
            rows: a,
            pivots,
            swaps,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right nullspace, one vector per non-pivot column `f`,
    /// normalized so that its entry at `f` is 1 and its entries at the other
    /// non-pivot columns are 0. Empty iff the matrix is injective.
    ///
    /// Computed by evaluation and reconstruction, with fraction-free
    /// elimination as the fallback.
    pub fn nullspace(&self) -> Vec<Vec<RatFuncT>> {
        let (rows, _) = self.cleared_rows();
        super::nullmod::nullspace(&rows, self.cols).unwrap_or_else(|| self.nullspace_fraction_free())
    }

    /// The same basis by Bareiss elimination over Z[t].
    pub fn nullspace_fraction_free(&self) -> Vec<Vec<RatFuncT>> {
        let ech = self.echelon();
        let is_pivot: Vec<bool> = (0..self.cols).map(|c| ech.pivots.contains(&c)).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![RatFuncT::zero(); self.cols];
            v[free] = RatFuncT::one();
            for (k, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[k];
                let mut acc = RatFuncT::zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !v[j].is_zero() {
                        acc = acc.add(&cleared::to_qt(&row[j]).mul(&v[j]));
                    }
                }
                if !acc.is_zero() {
                    v[pc] = acc.neg().div(&cleared::to_qt(&row[pc])).unwrap();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> RatFuncT {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return RatFuncT::one();
        }
        let (rows, scale) = self.cleared_rows();
        let ech = self.echelon_of(rows);
        if ech.pivots.len() < self.rows {
            return RatFuncT::zero();
        }
        let last = &ech.rows[self.rows - 1][self.cols - 1];
        let signed = if ech.swaps % 2 == 0 { last.clone() } else { last.neg() };
        RatFuncT::new(cleared::to_q(&signed), cleared::to_q(&scale))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Poly, Ring};

    fn c(k: i64) -> RatFuncT {
        RatFuncT::from_int(k)
    }

    fn t_pow(k: usize) -> RatFuncT {
        RatFuncT::from_poly(Poly::monomial(rat(1), k))
    }

    #[test]
    fn nullspace_of_row_vector() {
        let m = QtMatrix::from_rows(vec![vec![c(1), c(-1)]]).unwrap();
        assert_eq!(m.nullspace(), vec![vec![c(1), c(1)]]);
    }

    #[test]
    fn identity_is_injective() {
        let mut m = QtMatrix::zeros(3, 3);
        for i in 0..3 {
            m.set(i, i, c(1));
        }
        assert!(m.nullspace().is_empty());
        assert_eq!(m.determinant(), c(1));
    }

    #[test]
    fn nullspace_over_qt() {
        let m = QtMatrix::from_rows(vec![vec![t_pow(1), t_pow(2)]]).unwrap();
        let basis = m.nullspace();
        assert_eq!(basis.len(), 1);
        assert!(m.mul_vec(&basis[0]).iter().all(RatFuncT::is_zero));
        // (-t, 1) is (t, -1) up to the normalization at the free column
        assert_eq!(basis[0], vec![t_pow(1).neg(), c(1)]);
    }

    #[test]
    fn rank_nullity_with_skipped_column() {
        let m = QtMatrix::from_rows(vec![
            vec![c(0), t_pow(1), c(1), t_pow(2)],
            vec![c(0), c(2), c(0), c(1)],
            vec![c(0), t_pow(1).add(&c(2)), c(1), t_pow(2).add(&c(1))],
        ])
        .unwrap();
        let basis = m.nullspace();
        assert_eq!(basis.len(), m.cols() - m.rank());
        assert_eq!(m.rank(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(RatFuncT::is_zero));
        }
    }

    #[test]
    fn determinant_with_fractions_and_swap() {
        let half = RatFuncT::from_rat(crate::rational::ratio(1, 2));
        let inv_t = RatFuncT::t().inv().unwrap();
        let m = QtMatrix::from_rows(vec![vec![c(0), inv_t.clone()], vec![half.clone(), c(3)]]).unwrap();
        // 0*3 - (1/t)(1/2)
        assert_eq!(m.determinant(), inv_t.mul(&half).neg());
    }

    #[test]
    fn reconstruction_handles_large_answers() {
        // entries of degree 6 with big coefficients and a rank drop at t = 3
        let big = |k: i64| RatFuncT::from_poly(Poly::from_coeffs((0..7).map(|j| rat(k * 1_000_003 + j * j - 11)).collect()));
        let m = QtMatrix::from_rows(vec![
            vec![big(1), t_pow(1).sub(&c(3)), big(2).inv().unwrap()],
            vec![big(5), c(7), t_pow(3)],
        ])
        .unwrap();
        assert_eq!(m.nullspace(), m.nullspace_fraction_free());
    }

    fn entry() -> impl proptest::strategy::Strategy<Value = RatFuncT> {
        use proptest::prelude::*;
        (proptest::collection::vec(-4i64..5, 0..3), proptest::collection::vec(-3i64..4, 0..2)).prop_map(|(n, d)| {
            let num = Poly::from_coeffs(n.into_iter().map(rat).collect());
            let mut den = Poly::from_coeffs(d.into_iter().map(rat).collect());
            if den.is_zero() {
                den = Poly::one();
            }
            RatFuncT::new(num, den)
        })
    }

    proptest::proptest! {
        #[test]
        fn reconstruction_matches_elimination(
            rows in 1usize..5,
            cols in 1usize..6,
            cells in proptest::collection::vec(entry(), 30),
            copy in proptest::bool::ANY,
        ) {
            let mut data: Vec<Vec<RatFuncT>> = (0..rows).map(|i| cells[i * cols..(i + 1) * cols].to_vec()).collect();
            if copy && rows > 1 {
                // force a rank drop: last row = t * first row + second row
                let combo = (0..cols).map(|j| t_pow(1).mul(&data[0][j]).add(&data[1 % rows][j])).collect();
                *data.last_mut().unwrap() = combo;
            }
            let m = QtMatrix::from_rows(data).unwrap();
            proptest::prop_assert_eq!(m.nullspace(), m.nullspace_fraction_free());
        }
    }
}
