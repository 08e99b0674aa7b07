//! Exact scalar arithmetic and the dense matrix kernel everything else runs on.
//!
//! Two ground fields are supported: the rationals and prime fields GF(p).
//! All pivoting is deterministic (reduced row echelon, leftmost pivot), so
//! every basis produced downstream is reproducible across runs.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Which ground field a container lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldCtx {
    Q,
    Fp(u64),
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Q => write!(f, "Q"),
            FieldCtx::Fp(p) => write!(f, "GF({p})"),
        }
    }
}

/// Exact field scalar. Implementations must make every operation exact;
/// nothing in this crate ever touches floating point.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    /// Build `num/den` in the field described by `ctx`. Fails for a zero
    /// denominator or (over GF(p)) a denominator divisible by p.
    fn from_ratio(num: i64, den: i64, ctx: &FieldCtx) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    /// The field this scalar belongs to, if it carries one. Rationals always
    /// do; a GF(p) constant made through `zero`/`one`/`from_i64` is a
    /// modulus-free literal that unifies on first contact.
    fn ctx(&self) -> Option<FieldCtx>;
}

pub type Rat = BigRational;

/// Shorthand for an integer rational, handy in tests and fixtures.
pub fn rat(n: i64) -> Rat {
    <Rat as Scalar>::from_i64(n)
}

impl Scalar for BigRational {
    fn zero() -> Self {
        <BigRational as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as num_traits::One>::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64, _ctx: &FieldCtx) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn ctx(&self) -> Option<FieldCtx> {
        Some(FieldCtx::Q)
    }
}

/// Element of GF(p). The modulus rides along on every value; literals made
/// without a modulus (`p == 0`) adopt the other operand's on first use, which
/// is what lets generic code call `Scalar::one()` without a field context.
/// Mixing two distinct nonzero moduli is a logic error and panics.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    /// Canonical representative in `0..p` once a modulus is known; otherwise a
    /// raw signed literal.
    raw: i64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        Fp { raw: value, p }.normalized()
    }

    fn normalized(self) -> Self {
        if self.p == 0 {
            return self;
        }
        let p = self.p as i64;
        let mut r = self.raw % p;
        if r < 0 {
            r += p;
        }
        Fp { raw: r, p: self.p }
    }

    fn unify(&self, other: &Self) -> u64 {
        match (self.p, other.p) {
            (0, q) => q,
            (p, 0) => p,
            (p, q) => {
                assert_eq!(p, q, "mixed prime-field moduli {p} and {q}");
                p
            }
        }
    }

    fn with_p(&self, p: u64) -> Self {
        Fp { raw: self.raw, p }.normalized()
    }

    pub fn value(&self) -> i64 {
        self.raw
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let p = self.unify(other);
        if p == 0 {
            return self.raw == other.raw;
        }
        self.with_p(p).raw == other.with_p(p).raw
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.raw)
    }
}

fn mod_pow(mut base: u128, mut exp: u64, p: u128) -> u128 {
    let mut acc: u128 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp { raw: 0, p: 0 }
    }
    fn one() -> Self {
        Fp { raw: 1, p: 0 }
    }
    fn from_i64(n: i64) -> Self {
        Fp { raw: n, p: 0 }
    }
    fn from_ratio(num: i64, den: i64, ctx: &FieldCtx) -> Option<Self> {
        let p = match ctx {
            FieldCtx::Fp(p) => *p,
            FieldCtx::Q => return None,
        };
        let d = Fp::new(den, p);
        let inv = Scalar::inv(&d)?;
        Some(Fp::new(num, p).mul(&inv))
    }
    fn add(&self, other: &Self) -> Self {
        let p = self.unify(other);
        if p == 0 {
            return Fp {
                raw: self.raw.checked_add(other.raw).expect("literal overflow"),
                p: 0,
            };
        }
        let (a, b) = (self.with_p(p).raw as i128, other.with_p(p).raw as i128);
        Fp {
            raw: ((a + b) % p as i128) as i64,
            p,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let p = self.unify(other);
        if p == 0 {
            return Fp {
                raw: self.raw.checked_mul(other.raw).expect("literal overflow"),
                p: 0,
            };
        }
        let (a, b) = (self.with_p(p).raw as u128, other.with_p(p).raw as u128);
        Fp {
            raw: (a * b % p as u128) as i64,
            p,
        }
    }
    fn neg(&self) -> Self {
        if self.p == 0 {
            Fp {
                raw: -self.raw,
                p: 0,
            }
        } else {
            Fp {
                raw: self.raw,
                p: self.p,
            }
            .map_neg()
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.p == 0 {
            // A bare literal can only be inverted when it is +-1.
            return match self.raw {
                1 => Some(*self),
                -1 => Some(*self),
                _ => None,
            };
        }
        let v = self.normalized().raw as u128;
        if v == 0 {
            return None;
        }
        let p = self.p as u128;
        Some(Fp {
            raw: mod_pow(v, self.p - 2, p) as i64,
            p: self.p,
        })
    }
    fn is_zero(&self) -> bool {
        if self.p == 0 {
            self.raw == 0
        } else {
            self.normalized().raw == 0
        }
    }
    fn is_one(&self) -> bool {
        if self.p == 0 {
            self.raw == 1
        } else {
            self.normalized().raw == 1
        }
    }
    fn ctx(&self) -> Option<FieldCtx> {
        if self.p == 0 {
            None
        } else {
            Some(FieldCtx::Fp(self.p))
        }
    }
}

impl Fp {
    fn map_neg(self) -> Self {
        let n = self.normalized();
        if n.raw == 0 {
            n
        } else {
            Fp {
                raw: self.p as i64 - n.raw,
                p: self.p,
            }
        }
    }
}

/// Dense matrix, row major. Rows index the target space, columns the source.
#[derive(Clone, PartialEq)]
pub struct Mat<K> {
    rows: usize,
    cols: usize,
    a: Vec<K>,
}

impl<K: Scalar> fmt::Debug for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<K: Scalar> Mat<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Mat {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut a = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                a.push(f(i, j));
            }
        }
        Mat { rows, cols, a }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        debug_assert!(i < self.rows && j < self.cols);
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        debug_assert!(i < self.rows && j < self.cols);
        self.a[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(other.at(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(other.at(i, j)))
    }

    pub fn neg(&self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).neg())
    }

    pub fn scale(&self, c: &K) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out: Mat<K> = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.at(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j).add(&lik.mul(other.at(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// Stack vertically: `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut a = self.a.clone();
        a.extend_from_slice(&other.a);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            a,
        }
    }

    /// Stack horizontally: `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    pub fn from_cols(cols: Vec<Vec<K>>, rows: usize) -> Self {
        let c = cols.len();
        for col in &cols {
            assert_eq!(col.len(), rows);
        }
        Mat::from_fn(rows, c, |i, j| cols[j][i].clone())
    }

    /// In-place reduced row echelon form with the leftmost-pivot convention.
    /// Returns the pivot columns in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // first nonzero entry in column c at or below row r
            let mut pivot = None;
            for i in r..self.rows {
                if !self.at(i, c).is_zero() {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            self.swap_rows(r, p);
            let inv = self.at(r, c).inv().expect("nonzero scalar has inverse");
            for j in c..self.cols {
                let v = self.at(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in c..self.cols {
                    let v = self.at(i, j).sub(&f.mul(self.at(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the null space, as columns. Deterministic: free variables in
    /// increasing column order, each set to 1 in turn.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut basis = Vec::new();
        let piv_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if piv_set.contains(&free) {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One particular solution of `self * x = b`, or None when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = self.hstack(&Mat::from_cols(vec![b.to_vec()], self.rows));
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // pivot in the rhs column
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Solve `self * X = B` columnwise; None when any column is inconsistent.
    pub fn solve_mat(&self, b: &Mat<K>) -> Option<Mat<K>> {
        assert_eq!(self.rows, b.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.col(j))?);
        }
        Some(Mat::from_cols(cols, self.cols))
    }

    pub fn inverse(&self) -> Option<Mat<K>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug.at(i, n + j).clone()))
    }

    /// Basis of the column space: the columns of `self` at the pivot
    /// positions of its transpose-free echelon reduction.
    pub fn image_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        pivots.iter().map(|&c| self.col(c)).collect()
    }
}

/// Row-span membership helper: a matrix kept in echelon form for repeated
/// "is this vector in the span / insert it" queries.
pub struct SpanBuilder<K> {
    cols: usize,
    rows: Vec<Vec<K>>,
}

impl<K: Scalar> SpanBuilder<K> {
    pub fn new(cols: usize) -> Self {
        SpanBuilder { cols, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut Vec<K>) {
        for row in &self.rows {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = v[lead].clone();
                for j in 0..self.cols {
                    v[j] = v[j].sub(&f.mul(&row[j]));
                }
            }
        }
    }

    pub fn contains(&self, v: &[K]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Insert `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(lead) => {
                let inv = w[lead].inv().unwrap();
                for x in w.iter_mut() {
                    *x = x.mul(&inv);
                }
                // keep prior rows reduced against the new one
                for row in self.rows.iter_mut() {
                    if !row[lead].is_zero() {
                        let f = row[lead].clone();
                        for j in 0..self.cols {
                            row[j] = row[j].sub(&f.mul(&w[j]));
                        }
                    }
                }
                self.rows.push(w);
                self.rows.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
                true
            }
        }
    }

    pub fn basis(&self) -> &[Vec<K>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rat {
        rat(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::<Rat>::identity(2).rank(), 2);
        assert_eq!(Mat::<Rat>::zero(2, 2).rank(), 0);
        let m = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::<Rat>::identity(3).kernel_basis().is_empty());
        assert_eq!(Mat::<Rat>::zero(3, 3).kernel_basis().len(), 3);
        let m = Mat::from_rows(vec![vec![q(1), q(1)]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // (-1, 1) spans the same line as (1, -1)
        assert_eq!(k[0], vec![q(-1), q(1)]);
    }

    #[test]
    fn solve_examples() {
        let id = Mat::<Rat>::identity(2);
        assert_eq!(id.solve(&[q(3), q(5)]), Some(vec![q(3), q(5)]));
        let z = Mat::<Rat>::zero(2, 2);
        assert_eq!(z.solve(&[q(1), q(0)]), None);
        let m = Mat::from_rows(vec![vec![q(2)]]);
        assert_eq!(
            m.solve(&[q(1)]),
            Some(vec![Rat::from_ratio(1, 2, &FieldCtx::Q).unwrap()])
        );
    }

    #[test]
    fn fp_arithmetic() {
        let p = 32003;
        let a = Fp::new(-1, p);
        assert_eq!(a.value(), (p - 1) as i64);
        let b = Scalar::inv(&Fp::new(2, p)).unwrap();
        assert!(Fp::new(2, p).mul(&b).is_one());
        // sentinel literals unify
        let one: Fp = Scalar::one();
        assert!(one.add(&Fp::new(p as i64 - 1, p)).is_zero());
    }

    #[test]
    fn fp_rank() {
        let p = 7;
        let m = Mat::from_rows(vec![
            vec![Fp::new(1, p), Fp::new(3, p)],
            vec![Fp::new(2, p), Fp::new(6, p)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn kernel_is_killed(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 33) as i64 % 5) - 2
            };
            let m = Mat::<Rat>::from_fn(rows, cols, |_, _| q(next()));
            for v in m.kernel_basis() {
                let mv = m.mul_vec(&v);
                prop_assert!(mv.iter().all(|x| x.is_zero()));
            }
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), cols);
        }

        #[test]
        fn solve_solves(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 33) as i64 % 5) - 2
            };
            let m = Mat::<Rat>::from_fn(rows, cols, |_, _| q(next()));
            let x: Vec<Rat> = (0..cols).map(|_| q(next())).collect();
            let b = m.mul_vec(&x);
            let sol = m.solve(&b).expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }
}
