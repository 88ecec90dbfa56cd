//! Canonical partition representation and the multiset algebra used by the
//! bijections.
//!
//! A partition is stored as a sorted value → multiplicity map; the
//! non-increasing sequence view is derived. The empty partition is the unique
//! partition of 0.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A partition of a non-negative integer: a finite multiset of positive
/// integer parts, canonically a non-increasing sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    /// value → multiplicity, every multiplicity >= 1.
    mults: BTreeMap<u64, u64>,
}

impl Partition {
    /// The empty partition (the unique partition of 0).
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn from_parts<I: IntoIterator<Item = u64>>(parts: I) -> Result<Self> {
        let mut mults = BTreeMap::new();
        for p in parts {
            if p == 0 {
                return Err(Error::Parse("parts must be positive".to_string()));
            }
            *mults.entry(p).or_insert(0) += 1;
        }
        Ok(Partition { mults })
    }

    /// Builds a partition from (value, multiplicity) pairs; zero
    /// multiplicities are dropped, zero values rejected.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<Self> {
        let mut mults = BTreeMap::new();
        for (v, m) in pairs {
            if v == 0 {
                return Err(Error::Parse("parts must be positive".to_string()));
            }
            if m > 0 {
                *mults.entry(v).or_insert(0) += m;
            }
        }
        Ok(Partition { mults })
    }

    /// Sum of all parts, |λ|.
    pub fn size(&self) -> u64 {
        self.mults.iter().map(|(v, m)| v * m).sum()
    }

    /// Number of parts, ℓ(λ).
    pub fn length(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Multiplicity of `value` (0 if absent).
    pub fn multiplicity(&self, value: u64) -> u64 {
        self.mults.get(&value).copied().unwrap_or(0)
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest_part(&self) -> u64 {
        self.mults.keys().next_back().copied().unwrap_or(0)
    }

    /// Distinct values with their multiplicities, in decreasing value order.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.mults.iter().rev().map(|(&v, &m)| (v, m))
    }

    /// The canonical non-increasing sequence of parts.
    pub fn parts(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.length() as usize);
        for (v, m) in self.pairs() {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    }

    /// True if every multiplicity is 1.
    pub fn is_distinct(&self) -> bool {
        self.mults.values().all(|&m| m == 1)
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut mults = self.mults.clone();
        for (&v, &m) in &other.mults {
            *mults.entry(v).or_insert(0) += m;
        }
        Partition { mults }
    }

    /// Multiset difference. Errors unless `other` is a sub-multiset of `self`.
    pub fn difference(&self, other: &Partition) -> Result<Partition> {
        let mut mults = self.mults.clone();
        for (&v, &need) in &other.mults {
            let have = mults.get(&v).copied().unwrap_or(0);
            if have < need {
                return Err(Error::NotSubMultiset { value: v, have, need });
            }
            if have == need {
                mults.remove(&v);
            } else {
                mults.insert(v, have - need);
            }
        }
        Ok(Partition { mults })
    }

    /// The partition m·λ with every part multiplied by `m` (m >= 1).
    pub fn scale(&self, m: u64) -> Partition {
        assert!(m >= 1, "scale factor must be positive");
        Partition {
            mults: self.mults.iter().map(|(&v, &k)| (v * m, k)).collect(),
        }
    }

    /// The partition (1/m)·λ. Errors unless every part is divisible by `m`.
    pub fn divide(&self, m: u64) -> Result<Partition> {
        assert!(m >= 1, "divisor must be positive");
        let mut mults = BTreeMap::new();
        for (&v, &k) in &self.mults {
            if v % m != 0 {
                return Err(Error::NotDivisible { part: v, divisor: m });
            }
            mults.insert(v / m, k);
        }
        Ok(Partition { mults })
    }

    /// Splits λ into (λ^{r|}, λ^{r∤}): the parts divisible by `r` and the
    /// parts not divisible by `r`.
    pub fn split_by_divisibility(&self, r: u64) -> (Partition, Partition) {
        assert!(r >= 2, "divisibility split needs r >= 2");
        let mut div = BTreeMap::new();
        let mut rest = BTreeMap::new();
        for (&v, &m) in &self.mults {
            if v % r == 0 {
                div.insert(v, m);
            } else {
                rest.insert(v, m);
            }
        }
        (Partition { mults: div }, Partition { mults: rest })
    }

    /// Adds `count` copies of `value` in place.
    pub fn insert(&mut self, value: u64, count: u64) {
        assert!(value >= 1, "parts must be positive");
        if count > 0 {
            *self.mults.entry(value).or_insert(0) += count;
        }
    }

    /// Removes `count` copies of `value` in place. Errors if fewer present.
    pub fn remove(&mut self, value: u64, count: u64) -> Result<()> {
        let have = self.multiplicity(value);
        if have < count {
            return Err(Error::NotSubMultiset { value, have, need: count });
        }
        if have == count {
            self.mults.remove(&value);
        } else {
            self.mults.insert(value, have - count);
        }
        Ok(())
    }

    /// Parses comma-separated `v` or `v^m` tokens in any order. Spaces are
    /// tolerated; the empty string is the empty partition.
    pub fn parse(text: &str) -> Result<Partition> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut mults: BTreeMap<u64, u64> = BTreeMap::new();
        for raw in trimmed.split(',') {
            let token = raw.trim();
            if token.is_empty() {
                return Err(Error::Parse("empty token".to_string()));
            }
            let (value_str, mult_str) = match token.split_once('^') {
                Some((v, m)) => (v.trim(), Some(m.trim())),
                None => (token, None),
            };
            let value: u64 = value_str
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad part value '{token}'")))?;
            let mult: u64 = match mult_str {
                Some(s) => s
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad exponent '{token}'")))?,
                None => 1,
            };
            if value == 0 || mult == 0 {
                return Err(Error::Parse(alloc::format!(
                    "value and exponent must be positive in '{token}'"
                )));
            }
            *mults.entry(value).or_insert(0) += mult;
        }
        Ok(Partition { mults })
    }

    /// Renders in non-increasing exponent notation, e.g. `12^3,9^4,7`.
    /// `parse(render(λ)) == λ`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (v, m) in self.pairs() {
            if !out.is_empty() {
                out.push(',');
            }
            if m == 1 {
                out.push_str(&v.to_string());
            } else {
                out.push_str(&alloc::format!("{v}^{m}"));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_parts(parts.iter().copied()).unwrap()
    }

    #[test]
    fn union_basic() {
        assert_eq!(p(&[3, 1]).union(&p(&[3, 2])), p(&[3, 3, 2, 1]));
        assert_eq!(p(&[3, 1]).union(&Partition::empty()), p(&[3, 1]));
        assert_eq!(p(&[6, 3]).union(&p(&[6, 2, 1])), p(&[6, 6, 3, 2, 1]));
    }

    #[test]
    fn difference_basic() {
        assert_eq!(p(&[3, 3, 2, 1]).difference(&p(&[3, 2])).unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).difference(&Partition::empty()).unwrap(), p(&[3, 1]));
        assert_eq!(
            p(&[3, 3, 1]).difference(&p(&[3, 3, 3])),
            Err(Error::NotSubMultiset { value: 3, have: 2, need: 3 })
        );
    }

    #[test]
    fn scale_divide() {
        assert_eq!(p(&[2, 1, 1]).scale(3), p(&[6, 3, 3]));
        assert_eq!(Partition::empty().scale(5), Partition::empty());
        assert_eq!(p(&[3, 1]).scale(1), p(&[3, 1]));
        assert_eq!(p(&[6, 3, 3]).divide(3).unwrap(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().divide(7).unwrap(), Partition::empty());
        assert_eq!(
            p(&[6, 4]).divide(3),
            Err(Error::NotDivisible { part: 4, divisor: 3 })
        );
    }

    #[test]
    fn split() {
        let lambda = Partition::parse("12^3,9^4,7,3^5,2,1").unwrap();
        let (div, rest) = lambda.split_by_divisibility(3);
        assert_eq!(div, Partition::parse("12^3,9^4,3^5").unwrap());
        assert_eq!(rest, Partition::parse("7,2,1").unwrap());

        let (d, r) = Partition::empty().split_by_divisibility(4);
        assert!(d.is_empty() && r.is_empty());

        let (d, r) = p(&[5, 5, 2]).split_by_divisibility(2);
        assert_eq!(d, p(&[2]));
        assert_eq!(r, p(&[5, 5]));
    }

    #[test]
    fn parse_render() {
        assert_eq!(Partition::parse("3^2,2").unwrap(), p(&[3, 3, 2]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        let lambda = Partition::parse("1,3,3").unwrap();
        assert_eq!(lambda, p(&[3, 3, 1]));
        assert_eq!(lambda.render(), "3^2,1");
        assert_eq!(Partition::parse(" 12^3 , 9^4 ,7 ").unwrap().render(), "12^3,9^4,7");
        assert!(Partition::parse("0").is_err());
        assert!(Partition::parse("3^0").is_err());
        assert!(Partition::parse("-2").is_err());
        assert!(Partition::parse("2,,3").is_err());
    }

    #[test]
    fn size_length() {
        let lambda = Partition::parse("12^3,9^4,7,3^5,2,1").unwrap();
        assert_eq!(lambda.size(), 97);
        assert_eq!(lambda.length(), 15);
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(Partition::empty().length(), 0);
        assert_eq!(lambda.largest_part(), 12);
        assert_eq!(Partition::empty().largest_part(), 0);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec((1u64..40, 1u64..5), 0..8)
            .prop_map(|pairs| Partition::from_pairs(pairs).unwrap())
    }

    proptest! {
        #[test]
        fn union_difference_roundtrip(a in arb_partition(), b in arb_partition()) {
            prop_assert_eq!(a.union(&b).difference(&b).unwrap(), a);
        }

        #[test]
        fn scale_divide_roundtrip(a in arb_partition(), m in 1u64..6) {
            prop_assert_eq!(a.scale(m).divide(m).unwrap(), a);
        }

        #[test]
        fn split_is_partition(a in arb_partition(), r in 2u64..7) {
            let (div, rest) = a.split_by_divisibility(r);
            prop_assert_eq!(div.union(&rest), a);
            prop_assert!(div.pairs().all(|(v, _)| v % r == 0));
            prop_assert!(rest.pairs().all(|(v, _)| v % r != 0));
        }

        #[test]
        fn parse_render_roundtrip(a in arb_partition()) {
            prop_assert_eq!(Partition::parse(&a.render()).unwrap(), a);
        }

        #[test]
        fn parts_non_increasing(a in arb_partition()) {
            let parts = a.parts();
            prop_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
            prop_assert_eq!(parts.iter().sum::<u64>(), a.size());
            prop_assert_eq!(parts.len() as u64, a.length());
        }
    }
}
