//! The explicit maps between partition families, each with its inverse, plus
//! the sign-reversing involutions.
//!
//! Every map validates membership in its source family eagerly and refuses
//! otherwise; there is no best-effort coercion. The workhorse is Glaisher's
//! merge/split: merging `r` equal parts into one (equivalently, base-`r`
//! digit expansion of multiplicities) maps `r`-regular partitions onto
//! partitions with all multiplicities below `r`, and its inverse splits
//! every part `r^k·u` back into `r^k` copies of `u`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::families::FamilyName;
use crate::partition::Partition;

fn check_member(p: &Partition, fam: FamilyName) -> Result<()> {
    if fam.spec().member(p) {
        Ok(())
    } else {
        Err(Error::NotInSourceFamily { family: fam.to_string(), partition: p.render() })
    }
}

/// Records the full-size intermediate partitions of a staged map.
#[derive(Debug, Clone, Default)]
struct Steps(Vec<(String, Partition)>);

impl Steps {
    fn push(&mut self, label: &str, p: &Partition) {
        self.0.push((label.to_string(), p.clone()));
    }
}

/// Glaisher's merge: repeatedly replaces `r` equal parts by one part of `r`
/// times the value. Maps `r`-regular partitions to partitions with all
/// multiplicities `< r`. Implemented as base-`r` expansion of each
/// multiplicity.
pub fn glaisher(lambda: &Partition, r: u64) -> Result<Partition> {
    if r < 2 {
        return Err(Error::BadParameters("glaisher needs r >= 2".to_string()));
    }
    check_member(lambda, FamilyName::B { m: r })?;
    Ok(glaisher_merge_unchecked(lambda, r))
}

fn glaisher_merge_unchecked(lambda: &Partition, r: u64) -> Partition {
    let mut out = Partition::empty();
    for (v, m) in lambda.pairs() {
        let mut rest = m;
        let mut scaled = v;
        while rest > 0 {
            let digit = rest % r;
            if digit > 0 {
                out.insert(scaled, digit);
            }
            rest /= r;
            scaled *= r;
        }
    }
    out
}

/// Glaisher's split: replaces each part `r^k·u` (with `u` not divisible by
/// `r`) by `r^k` copies of `u`. Inverse of [`glaisher`].
pub fn glaisher_inv(mu: &Partition, r: u64) -> Result<Partition> {
    if r < 2 {
        return Err(Error::BadParameters("glaisher needs r >= 2".to_string()));
    }
    check_member(mu, FamilyName::D { m: r })?;
    Ok(glaisher_split_unchecked(mu, r))
}

fn glaisher_split_unchecked(mu: &Partition, r: u64) -> Partition {
    let mut out = Partition::empty();
    for (v, m) in mu.pairs() {
        let mut u = v;
        let mut copies = m;
        while u % r == 0 {
            u /= r;
            copies *= r;
        }
        out.insert(u, copies);
    }
    out
}

/// Splits every part of the given residue class mod `modulus` into two
/// halves.
fn split_class_in_halves(p: &Partition, modulus: u64, residues: &[u64]) -> Partition {
    let mut out = Partition::empty();
    for (v, m) in p.pairs() {
        if residues.contains(&(v % modulus)) {
            out.insert(v / 2, 2 * m);
        } else {
            out.insert(v, m);
        }
    }
    out
}

/// Merges pairs of equal parts of the given residue class mod `modulus`:
/// multiplicity `m` keeps `m mod 2` copies and yields `m/2` doubled parts.
fn merge_class_pairs(p: &Partition, modulus: u64, residues: &[u64]) -> Partition {
    let mut out = Partition::empty();
    for (v, m) in p.pairs() {
        if residues.contains(&(v % modulus)) {
            if m % 2 == 1 {
                out.insert(v, 1);
            }
            if m / 2 > 0 {
                out.insert(2 * v, m / 2);
            }
        } else {
            out.insert(v, m);
        }
    }
    out
}

/// The eleven forward/inverse map pairs, parameterized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairedMap {
    /// `glaisher`: r-regular ↔ multiplicities < r.
    Glaisher { r: u64 },
    /// `pd2pbar`: parts ≡ t (mod r) distinct ↔ no parts ≡ 2t (mod 2r).
    PdToPbar { t: u64, r: u64 },
    /// `prm2breg`: r-divisible multiplicities < r ↔ r²-regular.
    PrmToBreg { r: u64 },
    /// `pdbar2pe`: parts not ≡ 0 (mod r) distinct ↔ even parts ≡ 0 (mod 2r).
    PdbarToPe { r: u64 },
    /// `pm`: parts ≡ ±t (mod r) distinct ↔ no parts ≡ ±2t (mod 2r).
    Pm { t: u64, r: u64 },
    /// `pnd2pem`: r-divisible parts repeat ↔ parts ≡ ±r (mod 3r) have even
    /// multiplicity.
    PndToPem { r: u64 },
    /// `pem2pbar`: parts ≡ ±r (mod 3r) even multiplicity ↔ no parts
    /// ≡ ±r (mod 6r).
    PemToPbar { r: u64 },
    /// `pond`: parts ≡ r (mod 2r) repeat ↔ parts ≡ ±r (mod 6r) have even
    /// multiplicity.
    Pond { r: u64 },
    /// `exactmult`: even parts with multiplicity exactly r/2 ↔ even parts
    /// ≡ r (mod 2r).
    ExactMult { r: u64 },
    /// `pe2ped`: even parts ≡ r (mod 2r) ↔ even parts distinct and
    /// divisible by r.
    PeToPed { r: u64 },
    /// `qe2tilde`: distinct with even parts ≡ 0 (mod 2r) ↔ odd parts
    /// distinct, even parts ≡ r (mod 2r) with even multiplicity.
    QeToTilde { r: u64 },
}

impl PairedMap {
    pub fn validate(&self) -> Result<()> {
        use PairedMap::*;
        let ok = match *self {
            Glaisher { r } | PrmToBreg { r } | PdbarToPe { r } | PndToPem { r } => r >= 2,
            PdToPbar { t, r } => r >= 2 && t < r,
            Pm { t, r } => r >= 2 && t > 0 && 2 * t < r,
            PemToPbar { r } | Pond { r } => r >= 1,
            ExactMult { r } | PeToPed { r } | QeToTilde { r } => r >= 2 && r % 2 == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParameters(format!("{self}: parameters out of domain")))
        }
    }

    pub fn source(&self) -> FamilyName {
        use PairedMap::*;
        match *self {
            Glaisher { r } => FamilyName::B { m: r },
            PdToPbar { t, r } => FamilyName::Pd { t, r },
            PrmToBreg { r } => FamilyName::Prm { t: 0, r },
            PdbarToPe { r } => FamilyName::PdBar { t: 0, r },
            Pm { t, r } => FamilyName::PdPm { t, r },
            PndToPem { r } => FamilyName::Pnd { t: 0, r },
            PemToPbar { r } => FamilyName::Pem { t: r, m: 3 * r },
            Pond { r } => FamilyName::Pnd { t: r, r: 2 * r },
            ExactMult { r } => FamilyName::ExactEven { r },
            PeToPed { r } => FamilyName::Pe { t: r, m: 2 * r },
            QeToTilde { r } => FamilyName::Qe { s: 0, m: 2 * r },
        }
    }

    pub fn target(&self) -> FamilyName {
        use PairedMap::*;
        match *self {
            Glaisher { r } => FamilyName::D { m: r },
            PdToPbar { t, r } => FamilyName::Pbar { t: 2 * t, r: 2 * r, pm: false },
            PrmToBreg { r } => FamilyName::B { m: r * r },
            PdbarToPe { r } => FamilyName::Pe { t: 0, m: 2 * r },
            Pm { t, r } => FamilyName::Pbar { t: 2 * t, r: 2 * r, pm: true },
            PndToPem { r } => FamilyName::Pem { t: r, m: 3 * r },
            PemToPbar { r } => FamilyName::Pbar { t: r, r: 6 * r, pm: true },
            Pond { r } => FamilyName::Pem { t: r, m: 6 * r },
            ExactMult { r } => FamilyName::Pe { t: r, m: 2 * r },
            PeToPed { r } => FamilyName::Ped0 { r },
            QeToTilde { r } => FamilyName::QeTilde { r },
        }
    }

    pub fn forward(&self, p: &Partition) -> Result<Partition> {
        self.forward_steps(p, &mut Steps::default())
    }

    pub fn inverse(&self, p: &Partition) -> Result<Partition> {
        self.inverse_steps(p, &mut Steps::default())
    }

    pub fn trace_forward(&self, p: &Partition) -> Result<BijectionTrace> {
        let mut steps = Steps::default();
        let output = self.forward_steps(p, &mut steps)?;
        Ok(BijectionTrace {
            name: self.to_string(),
            source: self.source(),
            target: self.target(),
            input: p.clone(),
            output,
            steps: steps.0,
        })
    }

    pub fn trace_inverse(&self, p: &Partition) -> Result<BijectionTrace> {
        let mut steps = Steps::default();
        let output = self.inverse_steps(p, &mut steps)?;
        Ok(BijectionTrace {
            name: format!("{self} (inverse)"),
            source: self.target(),
            target: self.source(),
            input: p.clone(),
            output,
            steps: steps.0,
        })
    }

    fn forward_steps(&self, p: &Partition, steps: &mut Steps) -> Result<Partition> {
        use PairedMap::*;
        self.validate()?;
        check_member(p, self.source())?;
        let out = match *self {
            Glaisher { r } => glaisher_merge_unchecked(p, r),

            PdToPbar { t, r } => {
                if t == 0 {
                    // λ^{r|} = r·μ with μ distinct; split μ to an odd
                    // partition and rescale
                    let (div, rest) = p.split_by_divisibility(r);
                    let mu = div.divide(r).expect("parts divisible by r");
                    let odd = glaisher_split_unchecked(&mu, 2);
                    let scaled = odd.scale(r);
                    steps.push("r-divisible parts split into odd multiples of r", &scaled.union(&rest));
                    scaled.union(&rest)
                } else {
                    let out = split_class_in_halves(p, 2 * r, &[(2 * t) % (2 * r)]);
                    steps.push("parts ≡ 2t (mod 2r) split into two halves", &out);
                    out
                }
            }

            PrmToBreg { r } => {
                let (div, rest) = p.split_by_divisibility(r);
                let eta = div.divide(r).expect("parts divisible by r");
                let split = glaisher_split_unchecked(&eta, r).scale(r);
                steps.push("r-divisible parts Glaisher-split within the class", &split.union(&rest));
                split.union(&rest)
            }

            PdbarToPe { r } => {
                let (div, rest) = p.split_by_divisibility(r);
                // even-multiplicity core α keeps 2⌊m/2⌋ copies; leftovers β
                // are distinct
                let mut alpha = Partition::empty();
                let mut beta = Partition::empty();
                for (v, m) in div.pairs() {
                    if m / 2 > 0 {
                        alpha.insert(v, 2 * (m / 2));
                    }
                    if m % 2 == 1 {
                        beta.insert(v, 1);
                    }
                }
                let merged = merge_class_pairs(&alpha, 1, &[0]);
                let distinct = beta.union(&rest);
                steps.push("even-multiplicity core merged in pairs", &merged.union(&distinct));
                let odd = glaisher_split_unchecked(&distinct, 2);
                steps.push("distinct remainder split to odd parts", &merged.union(&odd));
                merged.union(&odd)
            }

            Pm { t, r } => {
                // a half can land back in the ±2t (mod 2r) class (exactly
                // when r = 3t), so halving iterates until the value leaves it
                let splits = |v: u64| {
                    let res = v % (2 * r);
                    res == 2 * t || res == 2 * r - 2 * t
                };
                let mut out = Partition::empty();
                for (v, m) in p.pairs() {
                    let mut value = v;
                    let mut copies = m;
                    while splits(value) {
                        value /= 2;
                        copies *= 2;
                    }
                    out.insert(value, copies);
                }
                steps.push("parts ≡ ±2t (mod 2r) split in halves until they leave the class", &out);
                out
            }

            PndToPem { r } => triple_merge(p, |v| v % r == 0, steps),

            PemToPbar { r } => {
                let out = merge_all_class_pairs(p, 3 * r, &[r % (3 * r), (3 * r - r) % (3 * r)]);
                steps.push("pairs of equal parts ≡ ±r (mod 3r) merged", &out);
                out
            }

            Pond { r } => triple_merge(p, |v| v % (2 * r) == r % (2 * r), steps),

            ExactMult { r } => {
                let (div, rest) = p.split_by_divisibility(2);
                // each even value 2t occurs exactly r/2 times; splitting in
                // half and merging the r equal copies leaves the distinct
                // partition of the t's
                let nu =
                    Partition::from_pairs(div.pairs().map(|(v, _)| (v / 2, 1))).expect("halves");
                let odd = glaisher_split_unchecked(&nu, 2);
                steps.push("even parts recombined into odd multiples of r", &odd.scale(r).union(&rest));
                odd.scale(r).union(&rest)
            }

            PeToPed { r } => {
                let (div, rest) = p.split_by_divisibility(2);
                let gamma = div.divide(r).expect("even parts divisible by r");
                let delta = glaisher_merge_unchecked(&gamma, 2);
                steps.push("parts ≡ r (mod 2r) pair-merged to distinct multiples of r", &delta.scale(r).union(&rest));
                delta.scale(r).union(&rest)
            }

            QeToTilde { r } => {
                let mut out = Partition::empty();
                for (v, m) in p.pairs() {
                    if v % (2 * r) == 0 {
                        // v = 2^i·r·c with c odd: becomes 2^i copies of rc
                        let mut x = v / r;
                        let mut copies = m;
                        while x % 2 == 0 {
                            x /= 2;
                            copies *= 2;
                        }
                        out.insert(r * x, copies);
                    } else {
                        out.insert(v, m);
                    }
                }
                steps.push("2r-divisible parts split into equal parts ≡ r (mod 2r)", &out);
                out
            }
        };
        debug_assert_eq!(out.size(), p.size(), "{self}: size not preserved");
        debug_assert!(self.target().spec().member(&out), "{self}: output not in target");
        Ok(out)
    }

    fn inverse_steps(&self, p: &Partition, steps: &mut Steps) -> Result<Partition> {
        use PairedMap::*;
        self.validate()?;
        check_member(p, self.target())?;
        let out = match *self {
            Glaisher { r } => glaisher_split_unchecked(p, r),

            PdToPbar { t, r } => {
                if t == 0 {
                    let (div, rest) = p.split_by_divisibility(r);
                    let nu = div.divide(r).expect("parts divisible by r");
                    let merged = glaisher_merge_unchecked(&nu, 2).scale(r);
                    steps.push("odd multiples of r pair-merged to distinct multiples", &merged.union(&rest));
                    merged.union(&rest)
                } else {
                    let out = merge_class_pairs(p, r, &[t]);
                    steps.push("pairs of equal parts ≡ t (mod r) merged", &out);
                    out
                }
            }

            PrmToBreg { r } => {
                let (div, rest) = p.split_by_divisibility(r);
                let nu = div.divide(r).expect("parts divisible by r");
                let merged = glaisher_merge_unchecked(&nu, r).scale(r);
                steps.push("r-divisible parts Glaisher-merged within the class", &merged.union(&rest));
                merged.union(&rest)
            }

            PdbarToPe { .. } => {
                let (even, odd) = p.split_by_divisibility(2);
                let mut alpha = Partition::empty();
                for (w, k) in even.pairs() {
                    alpha.insert(w / 2, 2 * k);
                }
                steps.push("even parts split back into equal pairs", &alpha.union(&odd));
                let distinct = glaisher_merge_unchecked(&odd, 2);
                steps.push("odd parts pair-merged to a distinct partition", &alpha.union(&distinct));
                alpha.union(&distinct)
            }

            Pm { t, r } => {
                // binary-carry pair merging: a merged part ≡ ±t (mod r) with
                // multiplicity 2 or more keeps merging upward
                let class = |v: u64| {
                    let res = v % r;
                    res == t || res == r - t
                };
                let mut work: BTreeMap<u64, u64> = p.pairs().collect();
                let mut out = Partition::empty();
                while let Some((&v, &m)) = work.first_key_value() {
                    work.remove(&v);
                    if class(v) && m >= 2 {
                        if m % 2 == 1 {
                            out.insert(v, 1);
                        }
                        *work.entry(2 * v).or_insert(0) += m / 2;
                    } else if m > 0 {
                        out.insert(v, m);
                    }
                }
                steps.push("pairs of equal parts ≡ ±t (mod r) merged until distinct", &out);
                out
            }

            PndToPem { r } => triple_split(p, |v| v % r == 0, 3 * r, steps),

            PemToPbar { r } => {
                let out =
                    split_all_class_in_halves(p, 6 * r, &[(2 * r) % (6 * r), (4 * r) % (6 * r)]);
                steps.push("parts ≡ ±2r (mod 6r) split into equal halves", &out);
                out
            }

            Pond { r } => triple_split(p, |v| v % (2 * r) == r % (2 * r), 3 * r, steps),

            ExactMult { r } => {
                let (even, rest) = p.split_by_divisibility(2);
                let gamma = even.divide(r).expect("even parts divisible by r");
                let nu = glaisher_merge_unchecked(&gamma, 2);
                let halves =
                    Partition::from_pairs(nu.pairs().map(|(v, _)| (2 * v, r / 2))).expect("parts");
                steps.push("each recovered value placed with multiplicity r/2", &halves.union(&rest));
                halves.union(&rest)
            }

            PeToPed { r } => {
                let (even, rest) = p.split_by_divisibility(2);
                let delta = even.divide(r).expect("even parts divisible by r");
                let gamma = glaisher_split_unchecked(&delta, 2);
                steps.push("distinct multiples of r split back to odd multiples", &gamma.scale(r).union(&rest));
                gamma.scale(r).union(&rest)
            }

            QeToTilde { r } => {
                let mut out = Partition::empty();
                for (v, m) in p.pairs() {
                    if v % (2 * r) == r && r % 2 == 0 {
                        // binary digits of the even multiplicity give the
                        // distinct parts 2^j·v
                        let mut copies = m;
                        let mut scaled = v;
                        while copies > 0 {
                            if copies % 2 == 1 {
                                out.insert(scaled, 1);
                            }
                            copies /= 2;
                            scaled *= 2;
                        }
                    } else {
                        out.insert(v, m);
                    }
                }
                steps.push("equal parts ≡ r (mod 2r) merged in pairs until distinct", &out);
                out
            }
        };
        debug_assert_eq!(out.size(), p.size(), "{self} inverse: size not preserved");
        debug_assert!(self.source().spec().member(&out), "{self} inverse: output not in source");
        Ok(out)
    }
}

/// For each value selected by `class` with odd multiplicity: remove three
/// copies, insert one tripled part.
fn triple_merge(p: &Partition, class: impl Fn(u64) -> bool, steps: &mut Steps) -> Partition {
    let odd_values: Vec<u64> =
        p.pairs().filter(|&(v, m)| class(v) && m % 2 == 1).map(|(v, _)| v).collect();
    let mut out = p.clone();
    for v in odd_values {
        out.remove(v, 3).expect("odd multiplicity in the class is at least 3");
        out.insert(3 * v, 1);
    }
    steps.push("three copies of each odd-multiplicity class value merged", &out);
    out
}

/// Inverse of [`triple_merge`]: for each value selected by `class` with odd
/// multiplicity (necessarily divisible by `triple_modulus`), remove one copy
/// and insert three thirds.
fn triple_split(
    p: &Partition,
    class: impl Fn(u64) -> bool,
    triple_modulus: u64,
    steps: &mut Steps,
) -> Partition {
    let odd_values: Vec<u64> =
        p.pairs().filter(|&(v, m)| class(v) && m % 2 == 1).map(|(v, _)| v).collect();
    let mut out = p.clone();
    for v in odd_values {
        debug_assert_eq!(v % triple_modulus, 0);
        out.remove(v, 1).expect("value present");
        out.insert(v / 3, 3);
    }
    steps.push("each odd-multiplicity class value split into three equal parts", &out);
    out
}

/// Merges ALL parts of the class in pairs; requires even multiplicities.
fn merge_all_class_pairs(p: &Partition, modulus: u64, residues: &[u64]) -> Partition {
    let mut out = Partition::empty();
    for (v, m) in p.pairs() {
        if residues.contains(&(v % modulus)) {
            debug_assert_eq!(m % 2, 0);
            out.insert(2 * v, m / 2);
        } else {
            out.insert(v, m);
        }
    }
    out
}

fn split_all_class_in_halves(p: &Partition, modulus: u64, residues: &[u64]) -> Partition {
    let mut out = Partition::empty();
    for (v, m) in p.pairs() {
        if residues.contains(&(v % modulus)) {
            out.insert(v / 2, 2 * m);
        } else {
            out.insert(v, m);
        }
    }
    out
}

impl fmt::Display for PairedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PairedMap::*;
        match *self {
            Glaisher { r } => write!(f, "glaisher[r={r}]"),
            PdToPbar { t, r } => write!(f, "pd2pbar[t={t},r={r}]"),
            PrmToBreg { r } => write!(f, "prm2breg[r={r}]"),
            PdbarToPe { r } => write!(f, "pdbar2pe[r={r}]"),
            Pm { t, r } => write!(f, "pm[t={t},r={r}]"),
            PndToPem { r } => write!(f, "pnd2pem[r={r}]"),
            PemToPbar { r } => write!(f, "pem2pbar[r={r}]"),
            Pond { r } => write!(f, "pond[r={r}]"),
            ExactMult { r } => write!(f, "exactmult[r={r}]"),
            PeToPed { r } => write!(f, "pe2ped[r={r}]"),
            QeToTilde { r } => write!(f, "qe2tilde[r={r}]"),
        }
    }
}

/// Record of one staged map application: input, output, and the full-size
/// intermediate partitions with labels.
#[derive(Debug, Clone)]
pub struct BijectionTrace {
    pub name: String,
    pub source: FamilyName,
    pub target: FamilyName,
    pub input: Partition,
    pub output: Partition,
    pub steps: Vec<(String, Partition)>,
}

/// Result of applying a sign-reversing involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionOutcome {
    Moved(Partition),
    FixedPoint,
}

/// The involution on partitions with parts ≡ t (mod r) distinct: with `a`
/// the largest repeated part and `b` the largest even part not ≡ 2t
/// (mod 2r), merge `(a,a) → 2a` when `2a > b`, else split `b → (b/2, b/2)`.
/// Fixed points are exactly the distinct partitions with even parts
/// ≡ 2t (mod 2r).
pub fn involution_psi(pi: &Partition, t: u64, r: u64) -> Result<InvolutionOutcome> {
    if r < 2 || t >= r {
        return Err(Error::BadParameters("psi needs 0 <= t < r, r >= 2".to_string()));
    }
    check_member(pi, FamilyName::Pd { t, r })?;
    let a = pi.pairs().filter(|&(_, m)| m >= 2).map(|(v, _)| v).max().unwrap_or(0);
    let b = pi
        .pairs()
        .filter(|&(v, _)| v % 2 == 0 && v % (2 * r) != (2 * t) % (2 * r))
        .map(|(v, _)| v)
        .max()
        .unwrap_or(0);
    Ok(merge_or_split(pi, a, b, |_| true))
}

/// The involution on 2r-regular partitions behind the signed count
/// evaluation. For odd `r`: `a` is the largest repeated part not ≡ 0
/// (mod r), `b` the largest even part. For even `r`: `b` is instead the
/// largest even part with odd multiplicity.
pub fn involution_b2r(pi: &Partition, r: u64) -> Result<InvolutionOutcome> {
    if r < 2 {
        return Err(Error::BadParameters("b2r involution needs r >= 2".to_string()));
    }
    check_member(pi, FamilyName::B { m: 2 * r })?;
    let a = pi
        .pairs()
        .filter(|&(v, m)| m >= 2 && v % r != 0)
        .map(|(v, _)| v)
        .max()
        .unwrap_or(0);
    let b = if r % 2 == 1 {
        pi.pairs().filter(|&(v, _)| v % 2 == 0).map(|(v, _)| v).max().unwrap_or(0)
    } else {
        pi.pairs()
            .filter(|&(v, m)| v % 2 == 0 && m % 2 == 1)
            .map(|(v, _)| v)
            .max()
            .unwrap_or(0)
    };
    Ok(merge_or_split(pi, a, b, |v| v % r != 0))
}

/// Shared merge/split rule. `a` = merge candidate (a pair of equal parts),
/// `b` = split candidate (one even part). `repeat_class` restricts which
/// values count as "repeated" when reversing; used only in debug assertions.
fn merge_or_split(
    pi: &Partition,
    a: u64,
    b: u64,
    _repeat_class: impl Fn(u64) -> bool,
) -> InvolutionOutcome {
    if a == 0 && b == 0 {
        return InvolutionOutcome::FixedPoint;
    }
    let mut out = pi.clone();
    if 2 * a > b {
        out.remove(a, 2).expect("repeated part present");
        out.insert(2 * a, 1);
    } else {
        out.remove(b, 1).expect("even part present");
        out.insert(b / 2, 2);
    }
    InvolutionOutcome::Moved(out)
}

/// Result of the pair involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    Moved(Partition, Partition),
    FixedPoint,
}

/// The involution on pairs (λ, μ) with λ all parts divisible by `r` and
/// 2r-divisible parts distinct, μ with even parts divisible by 2r: moves the
/// largest 2r-divisible part between the two. Fixed exactly when neither has
/// a 2r-divisible part.
pub fn involution_ped0r(lambda: &Partition, mu: &Partition, r: u64) -> Result<PairOutcome> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(Error::BadParameters("ped0r involution needs even r >= 2".to_string()));
    }
    check_member(lambda, FamilyName::PdR { r })?;
    check_member(mu, FamilyName::Pe { t: 0, m: 2 * r })?;
    let l1 = lambda.pairs().filter(|&(v, _)| v % (2 * r) == 0).map(|(v, _)| v).max().unwrap_or(0);
    let m1 = mu.pairs().filter(|&(v, _)| v % (2 * r) == 0).map(|(v, _)| v).max().unwrap_or(0);
    if l1 == 0 && m1 == 0 {
        return Ok(PairOutcome::FixedPoint);
    }
    if l1 >= m1 {
        let mut l2 = lambda.clone();
        l2.remove(l1, 1).expect("part present");
        let mut m2 = mu.clone();
        m2.insert(l1, 1);
        Ok(PairOutcome::Moved(l2, m2))
    } else {
        let mut l2 = lambda.clone();
        l2.insert(m1, 1);
        let mut m2 = mu.clone();
        m2.remove(m1, 1).expect("part present");
        Ok(PairOutcome::Moved(l2, m2))
    }
}

/// CLI-addressable bijection names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BijectionName {
    Glaisher,
    Pd2Pbar,
    Prm2Breg,
    Pdbar2Pe,
    Pm,
    Pnd2Pem,
    Pem2Pbar,
    Pond,
    ExactMult,
    Pe2Ped,
    Qe2Tilde,
    Psi,
    B2rInv,
    Ped0rInv,
}

impl BijectionName {
    pub const ALL: &'static [(&'static str, BijectionName)] = &[
        ("glaisher", BijectionName::Glaisher),
        ("pd2pbar", BijectionName::Pd2Pbar),
        ("prm2breg", BijectionName::Prm2Breg),
        ("pdbar2pe", BijectionName::Pdbar2Pe),
        ("pm", BijectionName::Pm),
        ("pnd2pem", BijectionName::Pnd2Pem),
        ("pem2pbar", BijectionName::Pem2Pbar),
        ("pond", BijectionName::Pond),
        ("exactmult", BijectionName::ExactMult),
        ("pe2ped", BijectionName::Pe2Ped),
        ("qe2tilde", BijectionName::Qe2Tilde),
        ("psi", BijectionName::Psi),
        ("b2r-inv", BijectionName::B2rInv),
        ("ped0r-inv", BijectionName::Ped0rInv),
    ];

    /// Builds the paired map for this name, if it is one (the three
    /// involutions are not forward/inverse pairs).
    pub fn paired(&self, t: Option<u64>, r: Option<u64>) -> Result<Option<PairedMap>> {
        let need_r = || r.ok_or_else(|| Error::BadParameters("--r is required".to_string()));
        let need_t = || t.ok_or_else(|| Error::BadParameters("--t is required".to_string()));
        let map = match self {
            BijectionName::Glaisher => PairedMap::Glaisher { r: need_r()? },
            BijectionName::Pd2Pbar => PairedMap::PdToPbar { t: need_t()?, r: need_r()? },
            BijectionName::Prm2Breg => PairedMap::PrmToBreg { r: need_r()? },
            BijectionName::Pdbar2Pe => PairedMap::PdbarToPe { r: need_r()? },
            BijectionName::Pm => PairedMap::Pm { t: need_t()?, r: need_r()? },
            BijectionName::Pnd2Pem => PairedMap::PndToPem { r: need_r()? },
            BijectionName::Pem2Pbar => PairedMap::PemToPbar { r: need_r()? },
            BijectionName::Pond => PairedMap::Pond { r: need_r()? },
            BijectionName::ExactMult => PairedMap::ExactMult { r: need_r()? },
            BijectionName::Pe2Ped => PairedMap::PeToPed { r: need_r()? },
            BijectionName::Qe2Tilde => PairedMap::QeToTilde { r: need_r()? },
            BijectionName::Psi | BijectionName::B2rInv | BijectionName::Ped0rInv => {
                return Ok(None)
            }
        };
        map.validate()?;
        Ok(Some(map))
    }
}

impl FromStr for BijectionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .find(|(name, _)| *name == s)
            .map(|&(_, b)| b)
            .ok_or_else(|| Error::Parse(format!("unknown bijection '{s}'")))
    }
}

impl fmt::Display for BijectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = Self::ALL
            .iter()
            .find(|(_, b)| b == self)
            .map(|(n, _)| *n)
            .expect("name registered");
        f.write_str(name)
    }
}
