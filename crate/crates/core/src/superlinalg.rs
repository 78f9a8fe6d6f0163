//! Z2-graded linear algebra: graded spaces, dense graded matrices, the Koszul-signed
//! tensor product, the graded flip and the three embeddings used by the Yang-Baxter
//! equation.
//!
//! Basis ordering of a tensor product is row-major: `(i, k) -> i * dim(W) + k`, so the
//! first factor indexes the outer block structure.
//!
//! Operator parity is never stored. The entry at `(i, j)` has parity
//! `p(i) + p(j) mod 2`, computed from the basis parities when a sign is needed; sums
//! of operators of different parity are therefore handled entry by entry.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::scalars::Field;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Parity {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

/// `(-1)^(a*b)` as a boolean "negate".
fn koszul(a: Parity, b: Parity) -> bool {
    a.is_odd() && b.is_odd()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradedSpace {
    parities: Vec<Parity>,
}

impl GradedSpace {
    pub fn new(parities: Vec<Parity>) -> Result<Self> {
        if parities.is_empty() {
            return Err(Error::DimensionMismatch("graded space must be nonempty".into()));
        }
        Ok(GradedSpace { parities })
    }

    /// `(m|n)`: `m` even basis vectors followed by `n` odd ones.
    pub fn super_dim(even: usize, odd: usize) -> Result<Self> {
        let mut p = vec![Parity::Even; even];
        p.extend(std::iter::repeat(Parity::Odd).take(odd));
        Self::new(p)
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let parities = self
            .parities
            .iter()
            .flat_map(|&a| other.parities.iter().map(move |&b| a + b))
            .collect();
        GradedSpace { parities }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct GradedMatrix<S> {
    rows: GradedSpace,
    cols: GradedSpace,
    data: Vec<S>,
}

impl<S: Field> GradedMatrix<S> {
    pub fn zeros(rows: &GradedSpace, cols: &GradedSpace) -> Self {
        GradedMatrix {
            rows: rows.clone(),
            cols: cols.clone(),
            data: vec![S::zero(); rows.dim() * cols.dim()],
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        Self::diagonal(space, vec![S::one(); space.dim()]).expect("matching length")
    }

    pub fn diagonal(space: &GradedSpace, diag: Vec<S>) -> Result<Self> {
        if diag.len() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "diagonal of length {} on a space of dimension {}",
                diag.len(),
                space.dim()
            )));
        }
        let mut m = Self::zeros(space, space);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        Ok(m)
    }

    /// Matrix unit `E_ij` (zero-based indices).
    pub fn unit(space: &GradedSpace, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(space, space);
        m.set(i, j, S::one());
        m
    }

    pub fn from_fn(rows: &GradedSpace, cols: &GradedSpace, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows.dim() * cols.dim());
        for i in 0..rows.dim() {
            for j in 0..cols.dim() {
                data.push(f(i, j));
            }
        }
        GradedMatrix { rows: rows.clone(), cols: cols.clone(), data }
    }

    pub fn rows(&self) -> &GradedSpace {
        &self.rows
    }

    pub fn cols(&self) -> &GradedSpace {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.dim()
    }

    pub fn ncols(&self) -> usize {
        self.cols.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.ncols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        let n = self.ncols();
        self.data[i * n + j] = v;
    }

    /// Parity of the operator `E_ij`.
    pub fn entry_parity(&self, i: usize, j: usize) -> Parity {
        self.rows.parity(i) + self.cols.parity(j)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.nrows() == self.ncols()
            && (0..self.nrows()).all(|i| {
                (0..self.ncols()).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        let n = self.ncols();
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (k / n, k % n, x))
    }

    /// True if every nonzero entry has the given parity.
    pub fn is_homogeneous_of(&self, p: Parity) -> bool {
        self.nonzero_entries().all(|(i, j, _)| self.entry_parity(i, j) == p)
    }

    /// Parity of a homogeneous nonzero matrix (`None` for zero or mixed).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.nonzero_entries().map(|(i, j, _)| self.entry_parity(i, j));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    fn check_same_shape(&self, rhs: &Self, op: &str) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {}x{} vs {}x{} (or graded spaces differ)",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs, "add")?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect();
        Ok(GradedMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs, "sub")?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect();
        Ok(GradedMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} times {}x{} (or graded spaces differ)",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        let (n, m, p) = (self.nrows(), self.ncols(), rhs.ncols());
        let mut data = vec![S::zero(); n * p];
        for i in 0..n {
            for k in 0..m {
                let a = &self.data[i * m + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..p {
                    let b = &rhs.data[k * p + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut data[i * p + j];
                    *cell = cell.add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(GradedMatrix { rows: self.rows.clone(), cols: rhs.cols.clone(), data })
    }

    /// Product of a nonempty chain of matrices, left to right.
    pub fn product(factors: &[&Self]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::DimensionMismatch("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.try_mul(m))
    }

    pub fn scale(&self, c: &S) -> Self {
        GradedMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg_ref())
    }

    pub fn map<T: Field>(&self, f: impl FnMut(&S) -> T) -> GradedMatrix<T> {
        GradedMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<T: Field>(&self, mut f: impl FnMut(usize, usize, &S) -> Result<T>) -> Result<GradedMatrix<T>> {
        let n = self.ncols();
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(k, x)| f(k / n, k % n, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data })
    }

    /// Square matrix power, `n >= 0`.
    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::identity(&self.rows);
        for _ in 0..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// `sum_n coeff(n) X^n` for nilpotent `X`, stopping at the first vanishing power.
    ///
    /// Fails with `NonTerminating` when `X^dim` is still nonzero.
    pub fn nilpotent_series(&self, mut coeff: impl FnMut(u32) -> Result<S>) -> Result<Self> {
        let dim = self.nrows();
        let mut acc = Self::identity(&self.rows).scale(&coeff(0)?);
        let mut power = Self::identity(&self.rows);
        for n in 1..=dim as u32 {
            power = power.try_mul(self)?;
            if power.is_zero() {
                return Ok(acc);
            }
            acc = acc.try_add(&power.scale(&coeff(n)?))?;
        }
        Err(Error::NonTerminating(dim + 1))
    }

    /// Index of nilpotency: least `k` with `X^k = 0`, if `k <= dim`.
    pub fn nilpotency_index(&self) -> Option<u32> {
        let mut power = Self::identity(&self.rows);
        for k in 1..=self.nrows() as u32 + 1 {
            power = power.try_mul(self).ok()?;
            if power.is_zero() {
                return Some(k);
            }
        }
        None
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn try_inverse(&self) -> Result<Self> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let mut a = self.data.clone();
        let mut inv = Self::identity(&self.rows).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = a[col * n + col].try_inv()?;
            for j in 0..n {
                a[col * n + j] = a[col * n + j].mul_ref(&pinv);
                inv[col * n + j] = inv[col * n + j].mul_ref(&pinv);
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    if !a[col * n + j].is_zero() {
                        a[r * n + j] = a[r * n + j].sub_ref(&f.mul_ref(&a[col * n + j]));
                    }
                    if !inv[col * n + j].is_zero() {
                        inv[r * n + j] = inv[r * n + j].sub_ref(&f.mul_ref(&inv[col * n + j]));
                    }
                }
            }
        }
        Ok(GradedMatrix { rows: self.cols.clone(), cols: self.rows.clone(), data: inv })
    }

    pub fn determinant(&self) -> Result<S> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let mut a = self.data.clone();
        let mut det = S::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(S::zero());
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = det.neg_ref();
            }
            let p = a[col * n + col].clone();
            det = det.mul_ref(&p);
            let pinv = p.try_inv()?;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].mul_ref(&pinv);
                for j in col..n {
                    a[r * n + j] = a[r * n + j].sub_ref(&f.mul_ref(&a[col * n + j]));
                }
            }
        }
        Ok(det)
    }

    /// Sub-matrix on row range `r0..r0+nr` and column range `c0..c0+nc`.
    pub fn sub_matrix(&self, r0: usize, c0: usize, rows: &GradedSpace, cols: &GradedSpace) -> Result<Self> {
        if r0 + rows.dim() > self.nrows() || c0 + cols.dim() > self.ncols() {
            return Err(Error::DimensionMismatch("sub-matrix out of range".into()));
        }
        Ok(Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone()))
    }

    /// Koszul-signed tensor product.
    ///
    /// The entry at `((i,k),(j,l))` is `(-1)^((p(k)+p(l)) p(j)) A_ij B_kl`, i.e.
    /// `(A (x) B)(v (x) w) = (-1)^(|B||v|) Av (x) Bw` applied to each matrix unit of `B`.
    pub fn graded_tensor(&self, rhs: &Self) -> Self {
        let rows = self.rows.tensor(&rhs.rows);
        let cols = self.cols.tensor(&rhs.cols);
        let (bn, bm) = (rhs.nrows(), rhs.ncols());
        let mut out = Self::zeros(&rows, &cols);
        for (i, j, a) in self.nonzero_entries() {
            let pj = self.cols.parity(j);
            for (k, l, b) in rhs.nonzero_entries() {
                let v = a.mul_ref(b);
                let v = if koszul(rhs.entry_parity(k, l), pj) { v.neg_ref() } else { v };
                out.set(i * bn + k, j * bm + l, v);
            }
        }
        out
    }

    /// Graded flip `V (x) W -> W (x) V`, `v (x) w -> (-1)^(|v||w|) w (x) v`.
    pub fn graded_flip(v: &GradedSpace, w: &GradedSpace) -> Self {
        let (n, m) = (v.dim(), w.dim());
        let mut out = Self::zeros(&w.tensor(v), &v.tensor(w));
        for i in 0..n {
            for k in 0..m {
                let one = S::one();
                let x = if koszul(v.parity(i), w.parity(k)) { one.neg_ref() } else { one };
                out.set(k * n + i, i * m + k, x);
            }
        }
        out
    }

    /// `R (x) 1` for `R` on `V1 (x) V2`.
    pub fn embed_12(&self, v3: &GradedSpace) -> Self {
        self.graded_tensor(&Self::identity(v3))
    }

    /// `1 (x) R` for `R` on `V2 (x) V3`.
    pub fn embed_23(&self, v1: &GradedSpace) -> Self {
        Self::identity(v1).graded_tensor(self)
    }

    /// `R_13 = (1 (x) P_32)(R (x) 1)(1 (x) P_23)` for `R` on `V1 (x) V3`.
    pub fn embed_13(&self, v1: &GradedSpace, v2: &GradedSpace, v3: &GradedSpace) -> Result<Self> {
        let expected = v1.tensor(v3);
        if self.rows != expected || self.cols != expected {
            return Err(Error::DimensionMismatch("embed_13: R must act on V1 (x) V3".into()));
        }
        let id1 = Self::identity(v1);
        let p23 = id1.graded_tensor(&Self::graded_flip(v2, v3));
        let p32 = id1.graded_tensor(&Self::graded_flip(v3, v2));
        let r_1 = self.graded_tensor(&Self::identity(v2));
        Self::product(&[&p32, &r_1, &p23])
    }

    /// Assemble `sum_ij E_ij (x) X_ij` over a block grid on `outer (x) inner`.
    pub fn assemble_blocks(outer: &GradedSpace, inner: &GradedSpace, blocks: &[(usize, usize, Self)]) -> Result<Self> {
        let total = outer.tensor(inner);
        let mut acc = Self::zeros(&total, &total);
        for (i, j, x) in blocks {
            if x.rows() != inner || x.cols() != inner {
                return Err(Error::DimensionMismatch(format!("block ({i}, {j}) does not act on the inner space")));
            }
            acc = acc.try_add(&Self::unit(outer, *i, *j).graded_tensor(x))?;
        }
        Ok(acc)
    }

    /// Inverse of [`assemble_blocks`](Self::assemble_blocks) for one block: the `X` with
    /// `E_ij (x) X` equal to the `(i, j)` block of `self`, signs undone entrywise.
    pub fn graded_block(&self, outer: &GradedSpace, inner: &GradedSpace, i: usize, j: usize) -> Result<Self> {
        let total = outer.tensor(inner);
        if self.rows != total || self.cols != total {
            return Err(Error::DimensionMismatch("graded_block: matrix does not act on outer (x) inner".into()));
        }
        let m = inner.dim();
        let pj = outer.parity(j);
        Ok(Self::from_fn(inner, inner, |k, l| {
            let x = self.get(i * m + k, j * m + l).clone();
            if koszul(inner.parity(k) + inner.parity(l), pj) {
                x.neg_ref()
            } else {
                x
            }
        }))
    }
}

/// JSON dump: dimensions, parities and the nonzero entries as `[i, j, value]`.
#[derive(Serialize, Deserialize)]
struct MatrixDump<T> {
    dim_row: usize,
    dim_col: usize,
    parities_row: Vec<u8>,
    parities_col: Vec<u8>,
    entries: Vec<(usize, usize, T)>,
}

impl<S: Field + Serialize> Serialize for GradedMatrix<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        MatrixDump {
            dim_row: self.nrows(),
            dim_col: self.ncols(),
            parities_row: self.rows.parities.iter().map(|p| p.bit()).collect(),
            parities_col: self.cols.parities.iter().map(|p| p.bit()).collect(),
            entries: self.nonzero_entries().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, S: Field + Deserialize<'de>> Deserialize<'de> for GradedMatrix<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dump = MatrixDump::<S>::deserialize(deserializer)?;
        let space = |bits: &[u8], dim: usize| {
            if bits.len() != dim {
                return Err(de::Error::custom("parity list does not match dimension"));
            }
            GradedSpace::new(bits.iter().map(|&b| Parity::from_bit(b)).collect()).map_err(de::Error::custom)
        };
        let rows = space(&dump.parities_row, dump.dim_row)?;
        let cols = space(&dump.parities_col, dump.dim_col)?;
        let mut m = GradedMatrix::zeros(&rows, &cols);
        for (i, j, v) in dump.entries {
            if i >= dump.dim_row || j >= dump.dim_col {
                return Err(de::Error::custom("entry index out of range"));
            }
            m.set(i, j, v);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    type M = GradedMatrix<Rational>;

    fn fund() -> GradedSpace {
        GradedSpace::super_dim(2, 1).unwrap()
    }

    fn e(i: usize, j: usize) -> M {
        M::unit(&fund(), i - 1, j - 1)
    }

    #[test]
    fn products_of_matrix_units() {
        let id = M::identity(&fund());
        assert_eq!(id.try_mul(&e(1, 2)).unwrap(), e(1, 2));
        assert_eq!(e(1, 2).try_mul(&e(2, 3)).unwrap(), e(1, 3));
        assert!(e(2, 3).try_mul(&e(1, 2)).unwrap().is_zero());
        let small = M::identity(&GradedSpace::super_dim(1, 1).unwrap());
        assert!(matches!(small.try_mul(&id), Err(Error::DimensionMismatch(_))));
        assert!(matches!(small.try_add(&id), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn tensor_signs() {
        let id = M::identity(&fund());
        assert!(id.graded_tensor(&id).is_identity());
        // (E32 (x) E32) at ((3,3),(2,2)): sign (-1)^((p3+p2) p2) = +1
        let t = e(3, 2).graded_tensor(&e(3, 2));
        assert_eq!(t.get(2 * 3 + 2, 3 + 1), &Rational::from(1));
        // (E23 (x) E23) at ((2,2),(3,3)): sign (-1)^((p2+p3) p3) = -1
        let t = e(2, 3).graded_tensor(&e(2, 3));
        assert_eq!(t.get(3 + 1, 2 * 3 + 2), &Rational::from(-1));
        assert_eq!(t.nnz(), 1);
    }

    #[test]
    fn flip_signs_and_involution() {
        let v = fund();
        let p = M::graded_flip(&v, &v);
        // v1 (x) v2 -> v2 (x) v1
        assert_eq!(p.get(3, 1), &Rational::from(1));
        // v3 (x) v3 -> -v3 (x) v3
        assert_eq!(p.get(8, 8), &Rational::from(-1));
        assert!(p.try_mul(&p).unwrap().is_identity());
    }

    #[test]
    fn embeddings_of_identity() {
        let v = fund();
        let id2 = M::identity(&v.tensor(&v));
        assert!(id2.embed_12(&v).is_identity());
        assert!(id2.embed_23(&v).is_identity());
        assert!(id2.embed_13(&v, &v, &v).unwrap().is_identity());
    }

    #[test]
    fn block_round_trip() {
        let v = fund();
        let x = e(2, 3).try_add(&e(1, 2)).unwrap();
        let big = M::assemble_blocks(&v, &v, &[(0, 2, x.clone())]).unwrap();
        assert_eq!(big.graded_block(&v, &v, 0, 2).unwrap(), x);
    }

    #[test]
    fn inverse_and_determinant() {
        let v = fund();
        let n = e(1, 2).scale(&Rational::from(5));
        let g = M::identity(&v).try_add(&n).unwrap();
        let gi = g.try_inverse().unwrap();
        assert!(g.try_mul(&gi).unwrap().is_identity());
        assert_eq!(g.determinant().unwrap(), Rational::from(1));
        assert_eq!(e(1, 2).try_inverse(), Err(Error::Singular));
        assert_eq!(e(1, 2).nilpotency_index(), Some(2));
    }

    #[test]
    fn nilpotent_series_terminates() {
        let x = e(1, 2).try_add(&e(2, 3)).unwrap();
        // exp-like series with coefficients 1/n!
        let m = x.nilpotent_series(|n| Rational::new(1, (1..=n as i64).product::<i64>().max(1))).unwrap();
        assert_eq!(m.get(0, 2), &Rational::new(1, 2).unwrap());
        assert!(matches!(M::identity(&fund()).nilpotent_series(|_| Ok(Rational::from(1))), Err(Error::NonTerminating(_))));
    }

    #[test]
    fn json_lists_only_nonzero_entries() {
        let json = serde_json::to_value(e(1, 3)).unwrap();
        assert_eq!(json["dim_row"], 3);
        assert_eq!(json["parities_col"], serde_json::json!([0, 0, 1]));
        assert_eq!(json["entries"], serde_json::json!([[0, 2, "1"]]));
        let back: M = serde_json::from_value(json).unwrap();
        assert_eq!(back, e(1, 3));
    }
}
