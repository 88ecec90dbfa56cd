//! Truncated power series over big integers, q-Pochhammer products, theta
//! series, and product formulas for the catalog families.
//!
//! Everything is exact integer arithmetic: a [`TruncatedSeries`] carries
//! coefficients `c_0..c_N` and any index beyond `N` is undefined rather than
//! silently zero. Products expand by single-term updates, e.g. multiplying
//! by `1/(1-q^k)` is one in-place prefix pass.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::FamilyName;

/// Formal power series truncated at `q^order`, with exact integer
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { order, coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `q^n`; `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Adds `c * q^k` in place (no-op beyond the order).
    pub fn add_term(&mut self, k: usize, c: BigInt) {
        if k <= self.order {
            self.coeffs[k] += c;
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            Err(Error::OrderMismatch { left: self.order, right: other.order })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(TruncatedSeries { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(TruncatedSeries { order: self.order, coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    // Single-factor updates. Multiplying by (1 ± q^k) walks indices
    // downwards so the source coefficient is still the old value; dividing
    // walks upwards so it is already the new one.

    fn mul_one_minus(&mut self, k: usize) {
        for i in (k..=self.order).rev() {
            let t = self.coeffs[i - k].clone();
            self.coeffs[i] -= t;
        }
    }

    fn mul_one_plus(&mut self, k: usize) {
        for i in (k..=self.order).rev() {
            let t = self.coeffs[i - k].clone();
            self.coeffs[i] += t;
        }
    }

    fn div_one_minus(&mut self, k: usize) {
        for i in k..=self.order {
            let t = self.coeffs[i - k].clone();
            self.coeffs[i] += t;
        }
    }

    fn div_one_plus(&mut self, k: usize) {
        for i in k..=self.order {
            let t = self.coeffs[i - k].clone();
            self.coeffs[i] -= t;
        }
    }
}

/// One infinite product factor `(∓q^a; q^b)_∞^{±1}`: the product over
/// `j >= 0` of `(1 ∓ q^{a+jb})^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochFactor {
    /// Exponent offset `a`; must be >= 1 or expansion fails.
    pub offset: u64,
    /// Exponent step `b >= 1`.
    pub step: u64,
    /// `true` for `(−q^a;q^b)` (terms `1 + q^…`).
    pub plus_terms: bool,
    /// `true` when the factor sits in the denominator.
    pub inverted: bool,
}

/// A product of q-Pochhammer factors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProductFormula {
    pub factors: Vec<PochFactor>,
}

impl ProductFormula {
    /// The empty product, i.e. the constant series 1.
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiplies by `(q^a; q^b)_∞`.
    pub fn times(mut self, a: u64, b: u64) -> Self {
        self.factors.push(PochFactor { offset: a, step: b, plus_terms: false, inverted: false });
        self
    }

    /// Multiplies by `(−q^a; q^b)_∞`.
    pub fn times_neg(mut self, a: u64, b: u64) -> Self {
        self.factors.push(PochFactor { offset: a, step: b, plus_terms: true, inverted: false });
        self
    }

    /// Divides by `(q^a; q^b)_∞`.
    pub fn over(mut self, a: u64, b: u64) -> Self {
        self.factors.push(PochFactor { offset: a, step: b, plus_terms: false, inverted: true });
        self
    }

    /// Divides by `(−q^a; q^b)_∞`.
    pub fn over_neg(mut self, a: u64, b: u64) -> Self {
        self.factors.push(PochFactor { offset: a, step: b, plus_terms: true, inverted: true });
        self
    }
}

/// Expands the product exactly up to `q^order`. Factors whose offset
/// exceeds the order contribute the identity.
pub fn expand(formula: &ProductFormula, order: usize) -> Result<TruncatedSeries> {
    let mut series = TruncatedSeries::one(order);
    for f in &formula.factors {
        if f.offset == 0 {
            return Err(Error::ZeroOffset);
        }
        assert!(f.step >= 1, "Pochhammer step must be positive");
        let mut e = f.offset;
        while e <= order as u64 {
            let k = e as usize;
            match (f.plus_terms, f.inverted) {
                (false, false) => series.mul_one_minus(k),
                (true, false) => series.mul_one_plus(k),
                (false, true) => series.div_one_minus(k),
                (true, true) => series.div_one_plus(k),
            }
            e += f.step;
        }
    }
    Ok(series)
}

/// Generating function of the partition numbers, `1/(q;q)_∞`.
pub fn partition_numbers(order: usize) -> TruncatedSeries {
    expand(&ProductFormula::new().over(1, 1), order).expect("offset 1")
}

/// Generalized pentagonal exponent `j(3j+1)/2` for signed `j`.
pub fn pentagonal(j: i64) -> u64 {
    let j = j as i128;
    ((j * (3 * j + 1)) / 2) as u64
}

/// `Σ_{j∈Z} (−1)^j q^{r·j(3j+1)/2}`, Euler's pentagonal series in `q^r`.
pub fn theta_pentagonal(r: u64, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut j: i64 = 0;
    loop {
        let epos = r * pentagonal(j);
        let eneg = r * pentagonal(-j);
        if j > 0 && epos > order as u64 && eneg > order as u64 {
            break;
        }
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        s.add_term(epos as usize, sign.clone());
        if j > 0 {
            s.add_term(eneg as usize, sign);
        }
        j += 1;
    }
    s
}

/// `Σ_{j∈Z} (−1)^j q^{r·j²}`.
pub fn theta_square(r: u64, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    s.add_term(0, BigInt::one());
    let mut j: u64 = 1;
    while r * j * j <= order as u64 {
        let sign = if j.is_multiple_of(2) { BigInt::from(2) } else { BigInt::from(-2) };
        s.add_term((r * j * j) as usize, sign);
        j += 1;
    }
    s
}

/// `Σ_{j>=0} q^{r·T_j}` with `T_j = j(j+1)/2`.
pub fn theta_triangular_gauss(r: u64, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut j: u64 = 0;
    while r * j * (j + 1) / 2 <= order as u64 {
        s.add_term((r * j * (j + 1) / 2) as usize, BigInt::one());
        j += 1;
    }
    s
}

/// `Σ_{j>=0} (−1)^{⌈j/2⌉} q^{j(j+1)/2}`, the signed triangular series equal
/// to `(q⁴;q⁴)_∞ (q;q²)_∞`.
pub fn theta_signed_triangular(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut j: u64 = 0;
    while j * (j + 1) / 2 <= order as u64 {
        let sign = if j.div_ceil(2).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        s.add_term((j * (j + 1) / 2) as usize, sign);
        j += 1;
    }
    s
}

/// Smallest positive member of the residue class `t (mod r)`.
fn class_offset(t: u64, r: u64) -> u64 {
    if t == 0 {
        r
    } else {
        t
    }
}

/// The product formula generating `Σ count(n, family) q^n`.
///
/// The six Beck relaxation families are enumeration-only and have no
/// registered product.
pub fn product_formula(name: &FamilyName) -> Result<ProductFormula> {
    use FamilyName::*;
    let f = ProductFormula::new();
    let formula = match *name {
        P { t, r, pm: false } => f.over(class_offset(t, r), r),
        P { t, r, pm: true } => f.over(t, r).over(r - t, r),
        Pbar { t, r, pm: false } => f.times(class_offset(t, r), r).over(1, 1),
        Pbar { t, r, pm: true } => f.times(t, r).times(r - t, r).over(1, 1),
        Q => f.times_neg(1, 1),
        Qbar { t, m } => f.times_neg(1, 1).over_neg(class_offset(t, m), m),
        D { m } | B { m } => f.times(m, m).over(1, 1),
        O => f.over(1, 2),
        // parts ≡ t (mod r) distinct contribute (−q^c;q^r)(q^c;q^r) on top
        // of 1/(q;q)_∞, i.e. (q^{2c};q^{2r}) with c the class offset
        Pd { t, r } => f.times(2 * class_offset(t, r), 2 * r).over(1, 1),
        PdBar { t, r } => {
            let c = class_offset(t, r);
            f.times_neg(1, 1).over_neg(c, r).over(c, r)
        }
        PdPm { t, r } => f.times(2 * t, 2 * r).times(2 * (r - t), 2 * r).over(1, 1),
        PdR { r } => f.times(4 * r, 4 * r).over(r, r),
        Pe { t, m } => f.over(1, 2).over(class_offset(t, m), m),
        Qe { s, m } => f.times_neg(1, 2).times_neg(class_offset(s, m), m),
        QePm { s, m } => f.times_neg(1, 2).times_neg(s, m).times_neg(m - s, m),
        QeTilde { r } => f.times_neg(1, 2).over(2 * r, 4 * r),
        // (1 - x + x²) = (1 + x³)/(1 + x) over the class ≡ t (mod r)
        Pnd { t, r } => {
            let c = class_offset(t, r);
            f.times_neg(3 * c, 3 * r).over_neg(c, r).over(1, 1)
        }
        PndBar { r } => f
            .times_neg(3, 3)
            .over_neg(3 * r, 3 * r)
            .times_neg(r, r)
            .over_neg(1, 1)
            .over(1, 1),
        Pem { t, m } => f
            .over(2 * t, 2 * m)
            .over(2 * (m - t), 2 * m)
            .times(t, m)
            .times(m - t, m)
            .over(1, 1),
        Prm { t, r } => f.times(r * class_offset(t, r), r * r).over(1, 1),
        Ped0 { r } | ExactEven { r } => f.over(1, 2).times_neg(r, r),
        Pend => return product_formula(&Pnd { t: 0, r: 2 }),
        Pond => return product_formula(&Pnd { t: 1, r: 2 }),
        BeckP1 { .. } | BeckP2 { .. } | BeckP3 { .. } | BeckP4 { .. } | BeckP5 { .. }
        | BeckP6 { .. } => return Err(Error::UnknownFamily(alloc::format!("{name}"))),
    };
    Ok(formula)
}

/// The product formula generating `Σ count_signed(n, family) q^n`, where
/// members are weighted by `(−1)^length`. Registered for the distinct-part
/// and regular families only.
pub fn signed_product_formula(name: &FamilyName) -> Result<ProductFormula> {
    use FamilyName::*;
    let f = ProductFormula::new();
    // an unrestricted value i contributes 1/(1+q^i), a distinct value (1-q^i),
    // an even-multiplicity value 1/(1-q^{2i})
    let formula = match *name {
        Pd { t, r } => f.times(2 * class_offset(t, r), 2 * r).times(1, 2),
        PdPm { t, r } => f.times(2 * t, 2 * r).times(2 * (r - t), 2 * r).times(1, 2),
        PdBar { t, r } => {
            let c = class_offset(t, r);
            f.times(1, 1).over(c, r).over_neg(c, r)
        }
        B { m } => f.times_neg(m, m).times(1, 2),
        Q => f.times(1, 1),
        Qbar { t, m } => f.times(1, 1).over(class_offset(t, m), m),
        Qe { s, m } => f.times(1, 2).times(class_offset(s, m), m),
        QePm { s, m } => f.times(1, 2).times(s, m).times(m - s, m),
        QeTilde { r } => f.times(1, 2).over(2 * r, 4 * r),
        _ => return Err(Error::UnknownFamily(alloc::format!("{name} (signed)"))),
    };
    Ok(formula)
}

/// `Σ count(n, family) q^n` up to `q^order`.
pub fn gf(name: &FamilyName, order: usize) -> Result<TruncatedSeries> {
    expand(&product_formula(name)?, order)
}

/// `Σ count_signed(n, family) q^n` up to `q^order`.
pub fn gf_signed(name: &FamilyName, order: usize) -> Result<TruncatedSeries> {
    expand(&signed_product_formula(name)?, order)
}
