//! Exact scalar arithmetic over `Q[[h]]/h^M` and finite graded vector spaces.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

pub type Rat = BigRational;

/// Errors raised by scalar and linear algebra operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("inversion of a non-unit: h^0 coefficient is zero")]
    InversionOfNonUnit,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("h-order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("invalid instance data: {0}")]
    InvalidInstance(String),
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Generalized binomial coefficient `n (n-1) ... (n-k+1) / k!` for any integer `n`.
pub fn binomial(n: i64, k: u32) -> Rat {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(n - t as i64);
        den *= BigInt::from(t as i64 + 1);
    }
    Rat::new(num, den)
}

pub fn factorial(k: u32) -> Rat {
    let mut f = BigInt::one();
    for t in 1..=k {
        f *= BigInt::from(t);
    }
    Rat::from_integer(f)
}

/// Element of `Q[[h]]/h^M`: a sparse list of (h-exponent, rational), exponents < `order`.
///
/// Rationals are kept in lowest terms by `BigRational` itself; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HScalar {
    order: u32,
    terms: Vec<(u32, Rat)>,
}

impl fmt::Debug for HScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{}/{}*h^{}", c.numer(), c.denom(), p))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl HScalar {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "h-order must be positive");
        HScalar { order, terms: Vec::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rat(Rat::one(), order)
    }

    pub fn from_rat(r: Rat, order: u32) -> Self {
        Self::monomial(0, r, order)
    }

    pub fn from_int(n: i64, order: u32) -> Self {
        Self::from_rat(rat_int(n), order)
    }

    /// `r * h^p`, truncated at the order.
    pub fn monomial(p: u32, r: Rat, order: u32) -> Self {
        assert!(order >= 1, "h-order must be positive");
        let mut s = HScalar { order, terms: Vec::new() };
        if p < order && !r.is_zero() {
            s.terms.push((p, r));
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the scalar vanishes modulo `h^m`.
    pub fn is_zero_mod(&self, m: u32) -> bool {
        self.terms.iter().all(|(p, _)| *p >= m)
    }

    /// Lowest h-exponent carrying a nonzero coefficient.
    pub fn first_h_order(&self) -> Option<u32> {
        self.terms.first().map(|(p, _)| *p)
    }

    pub fn coeff(&self, p: u32) -> Rat {
        self.terms
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> &[(u32, Rat)] {
        &self.terms
    }

    fn check_order(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other).expect("mixed h-orders");
        let mut out: Vec<(u32, Rat)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let pick_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some((p, _)), Some((q, _))) => {
                    if p == q {
                        let c = &self.terms[i].1 + &other.terms[j].1;
                        if !c.is_zero() {
                            out.push((*p, c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    p < q
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if pick_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                out.push(other.terms[j].clone());
                j += 1;
            }
        }
        HScalar { order: self.order, terms: out }
    }

    pub fn neg(&self) -> Self {
        HScalar {
            order: self.order,
            terms: self.terms.iter().map(|(p, c)| (*p, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other).expect("mixed h-orders");
        let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                let r = p + q;
                if r >= self.order {
                    continue;
                }
                let e = acc.entry(r).or_insert_with(Rat::zero);
                *e += c * d;
            }
        }
        HScalar {
            order: self.order,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero(self.order);
        }
        HScalar {
            order: self.order,
            terms: self.terms.iter().map(|(p, c)| (*p, c * r)).collect(),
        }
    }

    /// Multiply by `h^p`, truncating exponents at the order.
    pub fn mul_h_pow(&self, p: u32) -> Self {
        HScalar {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(q, _)| q + p < self.order)
                .map(|(q, c)| (q + p, c.clone()))
                .collect(),
        }
    }

    /// Exact inverse in `Q[[h]]/h^M`; requires a unit (nonzero `h^0` part).
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let c0 = match self.terms.first() {
            Some((0, c)) => c.clone(),
            _ => return Err(AlgebraError::InversionOfNonUnit),
        };
        // Newton-free direct recursion: b_m = -(1/c0) * sum_{p=1..m} a_p b_{m-p}.
        let mut inv: Vec<Rat> = vec![c0.recip()];
        for m in 1..self.order {
            let mut s = Rat::zero();
            for (p, a) in &self.terms {
                if *p >= 1 && *p <= m {
                    s += a * &inv[(m - p) as usize];
                }
            }
            inv.push(-(s / &c0));
        }
        Ok(HScalar {
            order: self.order,
            terms: inv
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (p as u32, c))
                .collect(),
        })
    }

    /// Truncate to a lower order (used when reducing an instance to its `h^0` layer).
    pub fn truncated(&self, order: u32) -> Self {
        assert!(order >= 1);
        HScalar {
            order,
            terms: self.terms.iter().filter(|(p, _)| *p < order).cloned().collect(),
        }
    }
}

/// A named basis vector with a nonnegative integer weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVec {
    pub name: String,
    pub weight: u32,
}

/// Finite-dimensional nonnegative-integer-graded truncation with a distinguished vacuum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    basis: Vec<BasisVec>,
    vacuum: usize,
    cutoff: u32,
}

impl GradedSpace {
    pub fn new(basis: Vec<BasisVec>, vacuum: usize, cutoff: u32) -> Result<Self, AlgebraError> {
        if vacuum >= basis.len() {
            return Err(AlgebraError::InvalidInstance("vacuum index out of range".into()));
        }
        if basis[vacuum].weight != 0 {
            return Err(AlgebraError::InvalidInstance("vacuum must have weight 0".into()));
        }
        let mut names = std::collections::HashSet::new();
        for b in &basis {
            if b.weight > cutoff {
                return Err(AlgebraError::InvalidInstance(format!(
                    "basis vector {} has weight {} above cutoff {}",
                    b.name, b.weight, cutoff
                )));
            }
            if !names.insert(b.name.clone()) {
                return Err(AlgebraError::InvalidInstance(format!("duplicate basis name {}", b.name)));
            }
        }
        Ok(GradedSpace { basis, vacuum, cutoff })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn vacuum_index(&self) -> usize {
        self.vacuum
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.basis[i].weight
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn basis(&self) -> &[BasisVec] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn vacuum_vector(&self, order: u32) -> GVector {
        GVector::unit(self.vacuum, order)
    }

    /// Maximum weight among indices carrying a nonzero coordinate; `None` for the zero vector.
    pub fn max_weight(&self, v: &GVector) -> Option<u32> {
        v.coords.keys().map(|i| self.weight(*i)).max()
    }
}

/// Sparse coordinate vector over `HScalar`; zero coordinates are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct GVector {
    coords: BTreeMap<usize, HScalar>,
}

impl fmt::Debug for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|(i, c)| format!("({:?})*e{}", c, i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl GVector {
    pub fn zero() -> Self {
        GVector { coords: BTreeMap::new() }
    }

    pub fn unit(i: usize, order: u32) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(i, HScalar::one(order));
        GVector { coords }
    }

    pub fn from_coords(coords: impl IntoIterator<Item = (usize, HScalar)>) -> Self {
        let mut v = GVector::zero();
        for (i, c) in coords {
            v.add_assign_coord(i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero_mod(&self, m: u32) -> bool {
        self.coords.values().all(|c| c.is_zero_mod(m))
    }

    pub fn first_h_order(&self) -> Option<u32> {
        self.coords.values().filter_map(|c| c.first_h_order()).min()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &HScalar)> {
        self.coords.iter()
    }

    pub fn coeff(&self, i: usize) -> Option<&HScalar> {
        self.coords.get(i)
    }

    pub fn add_assign_coord(&mut self, i: usize, c: &HScalar) {
        if c.is_zero() {
            return;
        }
        match self.coords.remove(&i) {
            Some(prev) => {
                let s = prev.add(c);
                if !s.is_zero() {
                    self.coords.insert(i, s);
                }
            }
            None => {
                self.coords.insert(i, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (i, c) in &other.coords {
            self.add_assign_coord(*i, c);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &HScalar) {
        if s.is_zero() {
            return;
        }
        for (i, c) in &other.coords {
            self.add_assign_coord(*i, &c.mul(s));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.coords {
            out.add_assign_coord(*i, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GVector {
            coords: self.coords.iter().map(|(i, c)| (*i, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &HScalar) -> Self {
        if s.is_zero() {
            return GVector::zero();
        }
        let mut out = GVector::zero();
        for (i, c) in &self.coords {
            out.add_assign_coord(*i, &c.mul(s));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return GVector::zero();
        }
        GVector {
            coords: self.coords.iter().map(|(i, c)| (*i, c.scale(r))).collect(),
        }
    }

    /// Restrict to coordinates with nonzero content modulo `h^m`, truncating scalars.
    pub fn truncated(&self, order: u32) -> Self {
        let mut out = GVector::zero();
        for (i, c) in &self.coords {
            let t = c.truncated(order);
            if !t.is_zero() {
                out.coords.insert(*i, t);
            }
        }
        out
    }
}

/// Sparse linear map between coordinate spaces: column `j` lists `(i, coeff)` of the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    dim: usize,
    cols: BTreeMap<usize, Vec<(usize, HScalar)>>,
}

impl LinearMap {
    pub fn zero(dim: usize) -> Self {
        LinearMap { dim, cols: BTreeMap::new() }
    }

    pub fn identity(dim: usize, order: u32) -> Self {
        let mut m = Self::zero(dim);
        for j in 0..dim {
            m.cols.insert(j, vec![(j, HScalar::one(order))]);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_entry(&mut self, row: usize, col: usize, c: HScalar) {
        assert!(row < self.dim && col < self.dim, "entry out of range");
        if c.is_zero() {
            return;
        }
        let col_entries = self.cols.entry(col).or_default();
        match col_entries.iter_mut().find(|(i, _)| *i == row) {
            Some((_, prev)) => {
                let s = prev.add(&c);
                *prev = s;
            }
            None => col_entries.push((row, c)),
        }
        self.cols.get_mut(&col).unwrap().retain(|(_, c)| !c.is_zero());
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &HScalar)> {
        self.cols
            .iter()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (*i, *j, c)))
    }

    pub fn column(&self, j: usize) -> Option<&Vec<(usize, HScalar)>> {
        self.cols.get(&j)
    }

    pub fn apply(&self, v: &GVector) -> Result<GVector, AlgebraError> {
        let mut out = GVector::zero();
        for (j, c) in v.iter() {
            if *j >= self.dim {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "index {} outside dimension {}",
                    j, self.dim
                )));
            }
            if let Some(col) = self.cols.get(j) {
                for (i, a) in col {
                    out.add_assign_coord(*i, &a.mul(c));
                }
            }
        }
        Ok(out)
    }

    /// Apply the map `k` times.
    pub fn apply_pow(&self, v: &GVector, k: u32) -> Result<GVector, AlgebraError> {
        let mut out = v.clone();
        for _ in 0..k {
            out = self.apply(&out)?;
        }
        Ok(out)
    }
}

/// Sparse element of a completed tensor power (rank 2 or 3) at truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    rank: usize,
    terms: BTreeMap<Vec<usize>, HScalar>,
}

impl TensorElement {
    pub fn zero(rank: usize) -> Self {
        assert!(rank == 2 || rank == 3, "tensor rank must be 2 or 3");
        TensorElement { rank, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero_mod(&self, m: u32) -> bool {
        self.terms.values().all(|c| c.is_zero_mod(m))
    }

    pub fn first_h_order(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.first_h_order()).min()
    }

    pub fn add_term(&mut self, idx: &[usize], c: &HScalar) {
        assert_eq!(idx.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let key = idx.to_vec();
        match self.terms.remove(&key) {
            Some(prev) => {
                let s = prev.add(c);
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.rank, other.rank);
        for (k, c) in &other.terms {
            self.add_term(k, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k, &c.neg());
        }
        out
    }

    pub fn scale(&self, s: &HScalar) -> Self {
        let mut out = TensorElement::zero(self.rank);
        if s.is_zero() {
            return out;
        }
        for (k, c) in &self.terms {
            out.add_term(k, &c.mul(s));
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &HScalar)> {
        self.terms.iter()
    }

    /// Tensor of two vectors.
    pub fn tensor(u: &GVector, v: &GVector) -> Self {
        let mut out = TensorElement::zero(2);
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                out.add_term(&[*i, *j], &a.mul(b));
            }
        }
        out
    }

    pub fn tensor3(u: &GVector, v: &GVector, w: &GVector) -> Self {
        let mut out = TensorElement::zero(3);
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let ab = a.mul(b);
                for (k, c) in w.iter() {
                    out.add_term(&[*i, *j, *k], &ab.mul(c));
                }
            }
        }
        out
    }

    /// Swap two slots.
    pub fn swap(&self, s1: usize, s2: usize) -> Self {
        let mut out = TensorElement::zero(self.rank);
        for (k, c) in &self.terms {
            let mut idx = k.clone();
            idx.swap(s1, s2);
            out.add_term(&idx, c);
        }
        out
    }

    /// Apply a linear map to one slot; also reports whether any index was mapped.
    pub fn apply_slot(&self, slot: usize, map: &LinearMap) -> Result<Self, AlgebraError> {
        let mut out = TensorElement::zero(self.rank);
        for (k, c) in &self.terms {
            if let Some(col) = map.column(k[slot]) {
                for (i, a) in col {
                    let mut idx = k.clone();
                    idx[slot] = *i;
                    out.add_term(&idx, &a.mul(c));
                }
            }
        }
        Ok(out)
    }

    pub fn truncated(&self, order: u32) -> Self {
        let mut out = TensorElement::zero(self.rank);
        for (k, c) in &self.terms {
            let t = c.truncated(order);
            if !t.is_zero() {
                out.terms.insert(k.clone(), t);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hscalar(rng: &mut ChaCha8Rng, order: u32) -> HScalar {
        let mut s = HScalar::zero(order);
        for p in 0..order {
            if rng.gen_bool(0.7) {
                let num = rng.gen_range(-6..=6);
                let den = rng.gen_range(1..=4);
                s = s.add(&HScalar::monomial(p, rat(num, den), order));
            }
        }
        s
    }

    #[test]
    fn polynomial_expansion_truncates() {
        // (1 + h)(1 - h) = 1 - h^2 at M = 3
        let m = 3;
        let a = HScalar::one(m).add(&HScalar::monomial(1, rat_int(1), m));
        let b = HScalar::one(m).add(&HScalar::monomial(1, rat_int(-1), m));
        let prod = a.mul(&b);
        let expected = HScalar::one(m).add(&HScalar::monomial(2, rat_int(-1), m));
        assert_eq!(prod, expected);
    }

    #[test]
    fn geometric_series_inverse() {
        // invert(1 - h) = 1 + h + h^2 at M = 3
        let m = 3;
        let a = HScalar::one(m).add(&HScalar::monomial(1, rat_int(-1), m));
        let inv = a.invert().unwrap();
        let expected = HScalar::one(m)
            .add(&HScalar::monomial(1, rat_int(1), m))
            .add(&HScalar::monomial(2, rat_int(1), m));
        assert_eq!(inv, expected);
        assert_eq!(a.mul(&inv), HScalar::one(m));
    }

    #[test]
    fn top_power_truncates_to_zero() {
        let m = 3;
        let a = HScalar::monomial(m - 1, rat_int(1), m);
        let h = HScalar::monomial(1, rat_int(1), m);
        assert!(a.mul(&h).is_zero());
    }

    #[test]
    fn invert_non_unit_fails() {
        let m = 3;
        let a = HScalar::monomial(1, rat_int(2), m);
        assert_eq!(a.invert(), Err(AlgebraError::InversionOfNonUnit));
    }

    #[test]
    fn ring_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let m = rng.gen_range(1..=4);
            let a = random_hscalar(&mut rng, m);
            let b = random_hscalar(&mut rng, m);
            let c = random_hscalar(&mut rng, m);
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.sub(&a), HScalar::zero(m));
            if !a.coeff(0).is_zero() {
                let inv = a.invert().unwrap();
                assert_eq!(a.mul(&inv), HScalar::one(m));
                assert_eq!(inv.invert().unwrap(), a);
            }
        }
    }

    #[test]
    fn tensor_is_bilinear() {
        let m = 2;
        let u = GVector::unit(0, m);
        let mut u2 = GVector::unit(2, m);
        u2 = u2.scale(&HScalar::monomial(1, rat_int(1), m));
        let v = GVector::unit(1, m);

        // e_0 (x) e_1 is a single term
        let t = TensorElement::tensor(&u, &v);
        assert_eq!(t.iter().count(), 1);

        // (e_0 + h e_2) (x) e_1 has terms (0,1):1 and (2,1):h
        let sum = u.add(&u2);
        let t2 = TensorElement::tensor(&sum, &v);
        assert_eq!(t2.iter().count(), 2);
        assert_eq!(
            t2.iter().map(|(k, _)| k.clone()).collect::<Vec<_>>(),
            vec![vec![0, 1], vec![2, 1]]
        );

        // 0 (x) v is empty
        assert!(TensorElement::tensor(&GVector::zero(), &v).is_zero());

        // full bilinearity on random data
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a = random_hscalar(&mut rng, m);
            let mut x = GVector::zero();
            let mut y = GVector::zero();
            for i in 0..4usize {
                x.add_assign_coord(i, &random_hscalar(&mut rng, m));
                y.add_assign_coord(i, &random_hscalar(&mut rng, m));
            }
            let z = GVector::unit(rng.gen_range(0..4), m);
            let lhs = TensorElement::tensor(&x.scale(&a).add(&y), &z);
            let rhs = TensorElement::tensor(&x, &z).scale(&a).add(&TensorElement::tensor(&y, &z));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn linear_map_identity_and_dimension_check() {
        let m = 2;
        let id = LinearMap::identity(3, m);
        let v = GVector::from_coords([(0, HScalar::one(m)), (2, HScalar::monomial(1, rat_int(3), m))]);
        assert_eq!(id.apply(&v).unwrap(), v);

        let small = LinearMap::zero(2);
        let w = GVector::unit(5, m);
        assert!(matches!(small.apply(&w), Err(AlgebraError::DimensionMismatch(_))));
    }

    #[test]
    fn graded_space_validation() {
        let basis = vec![
            BasisVec { name: "vac".into(), weight: 0 },
            BasisVec { name: "u".into(), weight: 1 },
        ];
        assert!(GradedSpace::new(basis.clone(), 0, 1).is_ok());
        assert!(GradedSpace::new(basis.clone(), 1, 1).is_err());
        let mut dup = basis.clone();
        dup.push(BasisVec { name: "u".into(), weight: 1 });
        assert!(GradedSpace::new(dup, 0, 1).is_err());
    }
}
