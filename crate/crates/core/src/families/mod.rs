//! Declarative partition-family specifications and exact enumeration and
//! counting.
//!
//! A [`FamilySpec`] is an ordered list of (residue-class selector,
//! multiplicity rule) clauses plus a default rule and an optional global
//! clause. Each distinct part value is governed by the first clause whose
//! selector matches it. The [`catalog`] module provides named constructors
//! for every family the toolkit knows about, addressable through the
//! `NAME[t,r]` grammar.
//!
//! Counting is done by an exact dynamic program over (largest value,
//! remaining sum, global state): the same recursion the enumerator walks,
//! with memoization. It is independent of the q-series route and is checked
//! against both explicit enumeration and series coefficients in the tests.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub mod catalog;

pub use catalog::FamilyName;

/// Default bound on `n` for enumeration and counting. Larger `n` must go
/// through the q-series route.
pub const DEFAULT_ENUM_BOUND: u64 = 120;

/// Selects part values by residue class: matches `v` iff
/// `(v mod modulus ∈ residues) XOR negated`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSelector {
    pub modulus: u64,
    pub residues: BTreeSet<u64>,
    pub negated: bool,
}

impl ClassSelector {
    /// Selector for parts congruent to one of `residues` mod `modulus`.
    pub fn new<I: IntoIterator<Item = u64>>(modulus: u64, residues: I) -> Self {
        assert!(modulus >= 1);
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        assert!(!residues.is_empty() && residues.iter().all(|&r| r < modulus));
        ClassSelector { modulus, residues, negated: false }
    }

    /// Selector for parts NOT congruent to any of `residues` mod `modulus`.
    pub fn negated<I: IntoIterator<Item = u64>>(modulus: u64, residues: I) -> Self {
        let mut sel = Self::new(modulus, residues);
        sel.negated = true;
        sel
    }

    pub fn matches(&self, value: u64) -> bool {
        self.residues.contains(&(value % self.modulus)) != self.negated
    }
}

/// Constraint on the multiplicity of an occurring part value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplicityRule {
    Unrestricted,
    /// Multiplicity exactly 1.
    Distinct,
    /// Multiplicity at least 2 ("not distinct").
    NotDistinct,
    /// Multiplicity strictly less than the given bound.
    LessThan(u64),
    /// Multiplicity exactly the given value.
    Exactly(u64),
    /// Even multiplicity.
    Even,
    /// The value may not occur at all.
    Forbidden,
}

impl MultiplicityRule {
    /// Whether an occurring value with multiplicity `m >= 1` satisfies the rule.
    pub fn allows(&self, m: u64) -> bool {
        debug_assert!(m >= 1);
        match *self {
            MultiplicityRule::Unrestricted => true,
            MultiplicityRule::Distinct => m == 1,
            MultiplicityRule::NotDistinct => m >= 2,
            MultiplicityRule::LessThan(bound) => m < bound,
            MultiplicityRule::Exactly(k) => m == k,
            MultiplicityRule::Even => m.is_multiple_of(2),
            MultiplicityRule::Forbidden => false,
        }
    }

    /// Allowed multiplicities `<= kmax` in decreasing order (always
    /// includes 0: absence is permitted by every rule).
    fn allowed_mults(&self, kmax: u64) -> Vec<u64> {
        let mut ks: Vec<u64> = match *self {
            MultiplicityRule::Unrestricted => (1..=kmax).rev().collect(),
            MultiplicityRule::Distinct => {
                if kmax >= 1 {
                    vec![1]
                } else {
                    vec![]
                }
            }
            MultiplicityRule::NotDistinct => (2..=kmax).rev().collect(),
            MultiplicityRule::LessThan(bound) => {
                (1..=kmax.min(bound.saturating_sub(1))).rev().collect()
            }
            MultiplicityRule::Exactly(k) => {
                if k >= 1 && k <= kmax {
                    vec![k]
                } else {
                    vec![]
                }
            }
            MultiplicityRule::Even => (1..=kmax / 2).rev().map(|h| 2 * h).collect(),
            MultiplicityRule::Forbidden => vec![],
        };
        ks.push(0);
        ks
    }
}

/// A whole-partition constraint layered on top of the per-value rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlobalClause {
    /// Exactly one distinct value matching the selector occurs (with any
    /// multiplicity).
    ExactlyOneValue(ClassSelector),
    /// Exactly one distinct value matching the selector occurs with
    /// multiplicity >= threshold; all other matching values stay below it.
    ExactlyOneRepeatedValue { selector: ClassSelector, threshold: u64 },
}

impl GlobalClause {
    /// 1 if choosing multiplicity `k` for `value` consumes the clause's
    /// one-allowed event, else 0.
    fn event(&self, value: u64, k: u64) -> u8 {
        match self {
            GlobalClause::ExactlyOneValue(sel) => (k >= 1 && sel.matches(value)) as u8,
            GlobalClause::ExactlyOneRepeatedValue { selector, threshold } => {
                (k >= *threshold && selector.matches(value)) as u8
            }
        }
    }
}

/// A declarative partition family: ordered clauses, a default rule, and an
/// optional global clause. First matching selector wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub clauses: Vec<(ClassSelector, MultiplicityRule)>,
    pub default_rule: MultiplicityRule,
    pub global: Option<GlobalClause>,
}

impl FamilySpec {
    pub fn new(
        clauses: Vec<(ClassSelector, MultiplicityRule)>,
        default_rule: MultiplicityRule,
    ) -> Self {
        FamilySpec { clauses, default_rule, global: None }
    }

    /// The family of all partitions.
    pub fn unrestricted() -> Self {
        FamilySpec::new(Vec::new(), MultiplicityRule::Unrestricted)
    }

    pub fn with_global(mut self, global: GlobalClause) -> Self {
        self.global = Some(global);
        self
    }

    /// Rule governing the given part value.
    pub fn rule_for(&self, value: u64) -> MultiplicityRule {
        for (sel, rule) in &self.clauses {
            if sel.matches(value) {
                return *rule;
            }
        }
        self.default_rule
    }

    /// Membership test.
    pub fn member(&self, lambda: &Partition) -> bool {
        if !lambda.pairs().all(|(v, m)| self.rule_for(v).allows(m)) {
            return false;
        }
        match &self.global {
            None => true,
            Some(g) => lambda.pairs().map(|(v, m)| u64::from(g.event(v, m))).sum::<u64>() == 1,
        }
    }

    fn accept_state(&self) -> u8 {
        if self.global.is_some() {
            1
        } else {
            0
        }
    }
}

fn check_bound(n: u64, bound: u64) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// Exactly the partitions of `n` in the family, in reverse-lexicographic
/// order on the canonical part sequence.
pub fn enumerate(n: u64, spec: &FamilySpec) -> Result<Vec<Partition>> {
    enumerate_bounded(n, spec, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_bounded(n: u64, spec: &FamilySpec, bound: u64) -> Result<Vec<Partition>> {
    check_bound(n, bound)?;
    let mut out = Vec::new();
    let mut stack: Vec<(u64, u64)> = Vec::new();
    gen_rec(n, n, 0, spec, &mut stack, &mut out);
    Ok(out)
}

/// Descending-first-part recursive generation with per-class multiplicity
/// pruning. Trying larger values and larger multiplicities first yields
/// reverse-lexicographic order directly.
fn gen_rec(
    v: u64,
    remaining: u64,
    g: u8,
    spec: &FamilySpec,
    stack: &mut Vec<(u64, u64)>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        // values below v can only take multiplicity 0, which never fires a
        // global event, so the state is final
        if g == spec.accept_state() {
            out.push(Partition::from_pairs(stack.iter().copied()).expect("valid parts"));
        }
        return;
    }
    if v == 0 {
        return;
    }
    let rule = spec.rule_for(v);
    for k in rule.allowed_mults(remaining / v) {
        let g2 = match &spec.global {
            Some(gl) => g + gl.event(v, k),
            None => g,
        };
        if g2 > 1 {
            continue;
        }
        if k > 0 {
            stack.push((v, k));
        }
        gen_rec(v - 1, remaining - k * v, g2, spec, stack, out);
        if k > 0 {
            stack.pop();
        }
    }
}

/// Exact counts of a family for every `n` in `0..=n_max`: plain cardinality,
/// the signed count with weight `(-1)^length`, and the total number of parts
/// over all members.
#[derive(Debug, Clone)]
pub struct FamilyCounts {
    pub plain: Vec<BigInt>,
    pub signed: Vec<BigInt>,
    pub total_parts: Vec<BigInt>,
}

impl FamilyCounts {
    pub fn n_max(&self) -> u64 {
        (self.plain.len() - 1) as u64
    }
}

/// Computes the full count table by the combinatorial dynamic program.
pub fn count_table(spec: &FamilySpec, n_max: u64) -> Result<FamilyCounts> {
    count_table_bounded(spec, n_max, DEFAULT_ENUM_BOUND)
}

pub fn count_table_bounded(spec: &FamilySpec, n_max: u64, bound: u64) -> Result<FamilyCounts> {
    check_bound(n_max, bound)?;
    let size = (n_max + 1) as usize;
    let states: usize = if spec.global.is_some() { 2 } else { 1 };

    // table[g][m]: partitions of m into values processed so far, with g
    // global events consumed
    let mut plain = vec![vec![BigInt::zero(); size]; states];
    let mut signed = vec![vec![BigInt::zero(); size]; states];
    let mut parts = vec![vec![BigInt::zero(); size]; states];
    plain[0][0] = BigInt::one();
    signed[0][0] = BigInt::one();

    for v in 1..=n_max {
        let rule = spec.rule_for(v);
        let kmax = n_max / v;
        let mults = rule.allowed_mults(kmax);
        // k = 0 is the identity transition; skip recomputation if it is the
        // only allowed multiplicity
        if mults.len() == 1 {
            continue;
        }
        let mut new_plain = vec![vec![BigInt::zero(); size]; states];
        let mut new_signed = vec![vec![BigInt::zero(); size]; states];
        let mut new_parts = vec![vec![BigInt::zero(); size]; states];
        for &k in &mults {
            let event = match &spec.global {
                Some(gl) => gl.event(v, k) as usize,
                None => 0,
            };
            let weight = k * v;
            let kbig = BigInt::from(k);
            let negate = k % 2 == 1;
            for g_prev in 0..states {
                let g_new = g_prev + event;
                if g_new >= states && event > 0 {
                    continue;
                }
                let g_new = g_new.min(states - 1);
                for m in weight..=n_max {
                    let src = (m - weight) as usize;
                    let dst = m as usize;
                    if plain[g_prev][src].is_zero() {
                        continue;
                    }
                    new_plain[g_new][dst] += &plain[g_prev][src];
                    if negate {
                        new_signed[g_new][dst] -= &signed[g_prev][src];
                    } else {
                        new_signed[g_new][dst] += &signed[g_prev][src];
                    }
                    new_parts[g_new][dst] += &parts[g_prev][src];
                    if k > 0 {
                        new_parts[g_new][dst] += &kbig * &plain[g_prev][src];
                    }
                }
            }
        }
        plain = new_plain;
        signed = new_signed;
        parts = new_parts;
    }

    let accept = spec.accept_state() as usize;
    Ok(FamilyCounts {
        plain: core::mem::take(&mut plain[accept]),
        signed: core::mem::take(&mut signed[accept]),
        total_parts: core::mem::take(&mut parts[accept]),
    })
}

/// Number of partitions of `n` in the family.
pub fn count(n: u64, spec: &FamilySpec) -> Result<BigInt> {
    Ok(count_table(spec, n)?.plain.pop().expect("table covers n"))
}

/// Signed count: members with an even number of parts minus members with an
/// odd number of parts.
pub fn count_signed(n: u64, spec: &FamilySpec) -> Result<BigInt> {
    Ok(count_table(spec, n)?.signed.pop().expect("table covers n"))
}

/// Total number of parts over all members of the family at `n`.
pub fn total_parts(n: u64, spec: &FamilySpec) -> Result<BigInt> {
    Ok(count_table(spec, n)?.total_parts.pop().expect("table covers n"))
}

#[cfg(test)]
mod tests {
    use super::catalog::FamilyName;
    use super::*;

    fn pt(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    fn name(text: &str) -> FamilyName {
        text.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        let pd03 = name("PD[0,3]").spec();
        assert!(pd03.member(&pt("9")));
        assert!(pd03.member(&pt("6,3")));
        assert!(pd03.member(&pt("6,2,1")));
        assert!(pd03.member(&pt("5,2,1^2")));
        assert!(pd03.member(&pt("3,1^6")));
        assert!(!pd03.member(&pt("3^3")));
        assert!(!pd03.member(&pt("3^2,2,1")));
        assert!(!pd03.member(&pt("3^2,1^3")));

        let pdbar03 = name("PDbar[0,3]").spec();
        assert!(pdbar03.member(&pt("3^3")));
        assert!(pdbar03.member(&pt("3^2,2,1")));
        assert!(!pdbar03.member(&pt("3^2,1^3")));
        assert!(!pdbar03.member(&pt("2^3,1")));

        // the empty partition belongs to every clause-defined family
        for fam in ["PD[0,3]", "B[6]", "Q", "PEM[1,6]", "QEtilde[2]", "PEND"] {
            assert!(name(fam).spec().member(&Partition::empty()), "{fam}");
        }
        // but not to the Beck relaxations, which demand one special value
        assert!(!name("BeckP1[2]").spec().member(&Partition::empty()));
    }

    #[test]
    fn enumerate_pd03_of_9() {
        let list = enumerate(9, &name("PD[0,3]").spec()).unwrap();
        // p(9) = 30 minus the three excluded partitions (3^3), (3^2,2,1), (3^2,1^3)
        assert_eq!(list.len(), 27);
        assert!(list.iter().all(|p| p.size() == 9));
        // reverse-lexicographic: first is (9), last is (1^9)
        assert_eq!(list.first().unwrap(), &pt("9"));
        assert_eq!(list.last().unwrap(), &pt("1^9"));
        let mut dedup = list.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), list.len());
    }

    #[test]
    fn enumerate_ped_of_4() {
        let list = enumerate(4, &name("PD[0,2]").spec()).unwrap();
        let expect: Vec<Partition> = ["4", "3,1", "2,1,1", "1^4"].iter().map(|s| pt(s)).collect();
        assert_eq!(list, expect);
    }

    #[test]
    fn enumerate_n0() {
        for fam in ["PD[0,3]", "B[4]", "BeckP1[2]"] {
            let list = enumerate(0, &name(fam).spec()).unwrap();
            if fam.starts_with("Beck") {
                assert!(list.is_empty(), "{fam}");
            } else {
                assert_eq!(list, vec![Partition::empty()], "{fam}");
            }
        }
    }

    #[test]
    fn counts_match_spec_examples() {
        assert_eq!(count(9, &name("PD[0,3]").spec()).unwrap(), BigInt::from(27));
        assert_eq!(count(9, &name("B[6]").spec()).unwrap(), BigInt::from(27));
        assert_eq!(count_signed(4, &name("PD[0,2]").spec()).unwrap(), BigInt::zero());
        assert_eq!(total_parts(4, &name("B[4]").spec()).unwrap(), BigInt::from(11));
        assert_eq!(total_parts(4, &name("PD[0,2]").spec()).unwrap(), BigInt::from(10));
    }

    #[test]
    fn bound_is_enforced() {
        let err = count(121, &FamilySpec::unrestricted()).unwrap_err();
        assert_eq!(err, Error::BoundExceeded { n: 121, bound: 120 });
        assert!(enumerate_bounded(15, &FamilySpec::unrestricted(), 10).is_err());
        assert!(count_table_bounded(&FamilySpec::unrestricted(), 15, 20).is_ok());
    }

    #[test]
    fn beck_family_small_cases() {
        // partitions of 4 with exactly one value divisible by 4: just (4)
        let b1 = name("BeckP1[2]").spec();
        assert_eq!(enumerate(4, &b1).unwrap(), vec![pt("4")]);
        // among even parts one repeated value, other even values distinct
        let b2 = name("BeckP2[2]").spec();
        assert_eq!(enumerate(4, &b2).unwrap(), vec![pt("2,2")]);
        // at n=6 the odd parts are unrestricted: (2,2,2) and (2,2,1,1)
        let at6 = enumerate(6, &b2).unwrap();
        assert_eq!(at6, vec![pt("2^3"), pt("2^2,1^2")]);
    }

    /// Every counting fold agrees with a direct fold over the enumerated
    /// members, across a representative slice of the catalog.
    #[test]
    fn count_table_matches_enumeration_folds() {
        let names = [
            "PD[0,3]", "PD[1,3]", "PDbar[0,2]", "PDpm[1,6]", "B[4]", "B[9]", "D[3]", "Q",
            "Qbar[0,4]", "O", "P[1,2]", "Pbar[2,4]", "Pbar[+-2,12]", "PE[0,4]", "PE[2,4]",
            "QE[0,4]", "QE[2,6]", "QEpm[2,12]", "QEtilde[2]", "PND[0,2]", "PND[2,4]",
            "PNDbar[0,3]", "PEM[1,6]", "PEM[2,6]", "PRM[0,3]", "PRM[1,2]", "PED0[2]",
            "PED0[4]", "ExactEven[4]", "PEND", "POND", "PDr[2]", "BeckP1[2]", "BeckP2[3]",
            "BeckP3[2]", "BeckP4[3]", "BeckP5[1,3]", "BeckP6[1,3]",
        ];
        for fam in names {
            let spec = name(fam).spec();
            let table = count_table(&spec, 18).unwrap();
            for n in 0..=18u64 {
                let members = enumerate(n, &spec).unwrap();
                assert!(members.iter().all(|p| spec.member(p)), "{fam} n={n}");
                let plain = BigInt::from(members.len());
                let signed: BigInt = members
                    .iter()
                    .map(|p| if p.length() % 2 == 0 { BigInt::one() } else { -BigInt::one() })
                    .sum();
                let parts: BigInt = members.iter().map(|p| BigInt::from(p.length())).sum();
                assert_eq!(table.plain[n as usize], plain, "{fam} count at n={n}");
                assert_eq!(table.signed[n as usize], signed, "{fam} signed at n={n}");
                assert_eq!(table.total_parts[n as usize], parts, "{fam} parts at n={n}");
            }
        }
    }

    #[test]
    fn monotone_sanity_under_filtering() {
        let all = FamilySpec::unrestricted();
        for r in 2..=4u64 {
            for t in 0..r {
                let fam = FamilyName::Pbar { t, r, pm: false }.spec();
                for n in 0..=30u64 {
                    assert!(count(n, &fam).unwrap() <= count(n, &all).unwrap());
                }
            }
        }
    }

    #[test]
    fn pnd_members_have_repeated_divisible_parts() {
        for r in 2..=4u64 {
            let fam = FamilyName::Pnd { t: 0, r }.spec();
            for n in 0..=30u64 {
                for p in enumerate(n, &fam).unwrap() {
                    for (v, m) in p.pairs() {
                        if v % r == 0 {
                            assert!(m >= 2, "n={n} r={r} {p}");
                        }
                    }
                }
            }
        }
    }
}
