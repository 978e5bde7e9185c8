use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qi::Qi;
use crate::ExactError;

/// Dense row-major matrix over Q(i).
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Qi>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Qi::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Qi::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Qi>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Qi::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Qi {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Qi) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Qi] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Qi> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Qi] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        r.data[idx] += &(a * b);
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[Qi]) -> Vec<Qi> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Qi::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Qi) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Qi::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Qi::is_real)
    }

    /// Exact determinant (square matrices only).
    pub fn det(&self) -> Qi {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Qi::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Qi::zero();
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a[c * n + c].clone();
            det = &det * &piv;
            let inv = piv.inv().unwrap();
            for r in c + 1..n {
                let f = &a[r * n + c] * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let t = &f * &a[c * n + j];
                    a[r * n + j] -= &t;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space. Vectors are normalized with a 1 in
    /// their free coordinate and certified by re-multiplication.
    pub fn kernel(&self) -> Vec<Vec<Qi>> {
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Qi::zero(); self.cols];
            v[f] = Qi::one();
            for (i, &pc) in r.pivots.iter().enumerate() {
                v[pc] = -r.m.get(i, f).clone();
            }
            basis.push(v);
        }
        for v in &basis {
            assert!(
                self.mul_vec(v).iter().all(Qi::is_zero),
                "kernel certification failed"
            );
        }
        basis
    }

    /// One solution of `A x = b` (free coordinates set to zero), certified.
    pub fn solve(&self, b: &[Qi]) -> Result<Vec<Qi>, ExactError> {
        assert_eq!(b.len(), self.rows);
        let bm = Self::from_rows(b.iter().map(|x| vec![x.clone()]).collect());
        let x = self.solve_many(&bm)?;
        Ok(x.column(0))
    }

    /// Solve `A X = B` column by column.
    pub fn solve_many(&self, b: &Self) -> Result<Self, ExactError> {
        assert_eq!(b.rows, self.rows);
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + b.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..b.cols {
                aug.set(i, n + j, b.get(i, j).clone());
            }
        }
        let r = aug.rref();
        if r.pivots.iter().any(|&p| p >= n) {
            return Err(ExactError::Inconsistent);
        }
        let mut x = Self::zeros(n, b.cols);
        for (i, &pc) in r.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.m.get(i, n + j).clone());
            }
        }
        if self.mul(&x) != *b {
            return Err(ExactError::CertificationFailed);
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_many(&Self::identity(self.rows)).ok()?;
        (x.mul(self) == Self::identity(self.rows)).then_some(x)
    }

    /// Reduced row echelon form. Forward elimination is fraction-free over
    /// Z[i] (Bareiss); the final normalization divides by pivots once.
    pub fn rref(&self) -> Rref {
        let (ech, pivots) = bareiss_echelon(self);
        let rank = pivots.len();
        let mut m = Self::zeros(rank, self.cols);
        for i in 0..rank {
            let piv = ech[i][pivots[i]].to_qi();
            let inv = piv.inv().expect("zero pivot");
            for j in 0..self.cols {
                if !ech[i][j].is_zero() {
                    m.set(i, j, &ech[i][j].to_qi() * &inv);
                }
            }
        }
        // back substitution to clear entries above each pivot
        for i in (0..rank).rev() {
            let pc = pivots[i];
            for k in 0..i {
                let f = m.get(k, pc).clone();
                if f.is_zero() {
                    continue;
                }
                for j in pc..self.cols {
                    let t = &f * m.get(i, j);
                    if !t.is_zero() {
                        let idx = k * self.cols + j;
                        m.data[idx] -= &t;
                    }
                }
            }
        }
        Rref { m, pivots }
    }
}

pub struct Rref {
    pub m: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// Gaussian integer, used only inside elimination.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Zi {
    re: BigInt,
    im: BigInt,
}

impl Zi {
    fn zero() -> Self {
        Zi { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn one() -> Self {
        Zi { re: BigInt::one(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &Zi) -> Zi {
        if self.im.is_zero() && o.im.is_zero() {
            return Zi { re: &self.re * &o.re, im: BigInt::zero() };
        }
        Zi {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &Zi) -> Zi {
        Zi { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// Exact quotient; panics if `o` does not divide `self` in Z[i].
    fn div_exact(&self, o: &Zi) -> Zi {
        if o.im.is_zero() && o.re.is_one() {
            return self.clone();
        }
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        assert!(rr.is_zero() && ri.is_zero(), "non-exact Bareiss division");
        Zi { re: qr, im: qi }
    }

    fn to_qi(&self) -> Qi {
        Qi::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

fn bareiss_echelon(a: &ExactMatrix) -> (Vec<Vec<Zi>>, Vec<usize>) {
    // clear denominators row by row
    let mut m: Vec<Vec<Zi>> = (0..a.rows)
        .map(|i| {
            let row = a.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom_lcm()));
            let lq = BigRational::from_integer(l);
            row.iter()
                .map(|x| {
                    let y = x.scale(&lq);
                    Zi { re: y.re.to_integer(), im: y.im.to_integer() }
                })
                .collect()
        })
        .filter(|r: &Vec<Zi>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let rows = m.len();
    let cols = a.cols;
    let mut pivots = Vec::new();
    let mut prev = Zi::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..rows {
            let f = m[i][c].clone();
            for j in c + 1..cols {
                let t = m[i][j].mul(&piv);
                let u = if f.is_zero() { Zi::zero() } else { f.mul(&m[r][j]) };
                m[i][j] = t.sub(&u).div_exact(&prev);
            }
            m[i][c] = Zi::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_zero() {
        assert_eq!(ExactMatrix::zeros(2, 2).kernel().len(), 2);
    }

    #[test]
    fn kernel_of_identity() {
        assert!(ExactMatrix::identity(3).kernel().is_empty());
    }

    #[test]
    fn kernel_of_ones_row() {
        let k = ExactMatrix::from_int_rows(&[&[1, 1]]).kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(&k[0][0], &-k[0][1].clone());
    }

    #[test]
    fn solve_gaussian_system() {
        let a = ExactMatrix::from_rows(vec![
            vec![Qi::gaussian(1, 1), Qi::from_int(2)],
            vec![Qi::from_ratio(1, 3), Qi::i()],
        ]);
        let b = vec![Qi::from_int(5), Qi::gaussian(0, -2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn inconsistent() {
        let a = ExactMatrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(a.solve(&[Qi::one(), Qi::one()]), Err(ExactError::Inconsistent));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = ExactMatrix::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det(), Qi::from_int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), ExactMatrix::identity(3));
    }
}
