//! Named constructors for every partition family the toolkit knows, and the
//! `NAME[t,r]` string grammar that addresses them.
//!
//! Family names:
//!
//! | name            | partitions of n where ...                                            |
//! |-----------------|----------------------------------------------------------------------|
//! | `P[t,r]`        | all parts are ≡ t (mod r); `P[+-t,r]` allows ±t                      |
//! | `Pbar[t,r]`     | no parts are ≡ t (mod r); `Pbar[+-t,r]` excludes ±t                  |
//! | `Q`             | all parts distinct                                                   |
//! | `Qbar[t,m]`     | distinct, no parts ≡ t (mod m)                                       |
//! | `D[m]`          | every multiplicity < m                                               |
//! | `O`             | all parts odd                                                        |
//! | `B[m]`          | m-regular: no parts divisible by m                                   |
//! | `PD[t,r]`       | parts ≡ t (mod r) are distinct                                       |
//! | `PDbar[t,r]`    | parts not ≡ t (mod r) are distinct                                   |
//! | `PDpm[t,r]`     | parts ≡ ±t (mod r) are distinct                                      |
//! | `PDr[r]`        | all parts divisible by r, parts ≡ 0 (mod 2r) distinct                |
//! | `PE[t,m]`       | every even part is ≡ t (mod m)                                       |
//! | `QE[s,m]`       | distinct, every even part ≡ s (mod m)                                |
//! | `QEpm[s,m]`     | distinct, every even part ≡ ±s (mod m)                               |
//! | `QEtilde[r]`    | odd parts distinct, even parts ≡ r (mod 2r) with even multiplicity   |
//! | `PND[t,r]`      | occurring parts ≡ t (mod r) repeat (multiplicity ≥ 2)                |
//! | `PNDbar[0,r]`   | occurring parts not ≡ 0 (mod r) repeat                               |
//! | `PEM[t,m]`      | parts ≡ ±t (mod m) have even multiplicity                            |
//! | `PRM[t,r]`      | parts ≡ t (mod r) have multiplicity < r                              |
//! | `PED0[r]`       | even parts distinct and divisible by r (r even)                      |
//! | `ExactEven[r]`  | occurring even parts have multiplicity exactly r/2 (r even)          |
//! | `PEND` / `POND` | even (odd) parts are not distinct                                    |
//! | `BeckP1[r]`     | exactly one part value divisible by 2r, any multiplicity             |
//! | `BeckP2[r]`     | among parts divisible by r: one value repeated, the rest distinct    |
//! | `BeckP3[r]`     | exactly one part value divisible by r², any multiplicity             |
//! | `BeckP4[r]`     | among parts divisible by r: one value with multiplicity ≥ r, rest < r|
//! | `BeckP5[t,r]`   | exactly one part value ≡ ±2t (mod 2r), any multiplicity              |
//! | `BeckP6[t,r]`   | among parts ≡ ±t (mod r): one value repeated, the rest distinct      |

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

use super::{ClassSelector, FamilySpec, GlobalClause, MultiplicityRule};

/// A catalog family identifier with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyName {
    P { t: u64, r: u64, pm: bool },
    Pbar { t: u64, r: u64, pm: bool },
    Q,
    Qbar { t: u64, m: u64 },
    D { m: u64 },
    O,
    B { m: u64 },
    Pd { t: u64, r: u64 },
    PdBar { t: u64, r: u64 },
    PdPm { t: u64, r: u64 },
    PdR { r: u64 },
    Pe { t: u64, m: u64 },
    Qe { s: u64, m: u64 },
    QePm { s: u64, m: u64 },
    QeTilde { r: u64 },
    Pnd { t: u64, r: u64 },
    PndBar { r: u64 },
    Pem { t: u64, m: u64 },
    Prm { t: u64, r: u64 },
    Ped0 { r: u64 },
    ExactEven { r: u64 },
    Pend,
    Pond,
    BeckP1 { r: u64 },
    BeckP2 { r: u64 },
    BeckP3 { r: u64 },
    BeckP4 { r: u64 },
    BeckP5 { t: u64, r: u64 },
    BeckP6 { t: u64, r: u64 },
}

use FamilyName::*;

fn bad(msg: String) -> Error {
    Error::BadParameters(msg)
}

impl FamilyName {
    /// Checks the parameter domain of the constructor.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            P { t, r, pm } | Pbar { t, r, pm } => {
                r >= 2 && if pm { t > 0 && 2 * t < r } else { t < r }
            }
            Q | O | Pend | Pond => true,
            Qbar { t, m } => m >= 2 && t < m,
            D { m } | B { m } => m >= 2,
            Pd { t, r } | PdBar { t, r } | Pnd { t, r } | Prm { t, r } => r >= 2 && t < r,
            PdPm { t, r } | BeckP5 { t, r } | BeckP6 { t, r } => r >= 2 && t > 0 && 2 * t < r,
            PdR { r } | BeckP1 { r } | BeckP2 { r } | BeckP3 { r } | BeckP4 { r } => r >= 2,
            Pe { t, m } => m >= 2 && m % 2 == 0 && t % 2 == 0 && t < m,
            Qe { s, m } => m >= 2 && m % 2 == 0 && s % 2 == 0 && s < m,
            QePm { s, m } => m >= 2 && m % 2 == 0 && s % 2 == 0 && s > 0 && 2 * s < m,
            QeTilde { r } | Ped0 { r } | ExactEven { r } => r >= 2 && r % 2 == 0,
            PndBar { r } => r >= 2,
            Pem { t, m } => m >= 2 && t > 0 && t < m && 2 * t != m,
        };
        if ok {
            Ok(())
        } else {
            Err(bad(format!("{self}: parameters out of domain")))
        }
    }

    /// The declarative specification of the family.
    pub fn spec(&self) -> FamilySpec {
        use MultiplicityRule::*;
        debug_assert!(self.validate().is_ok(), "invalid family {self}");
        match *self {
            P { t, r, pm } => {
                FamilySpec::new(vec![(pm_selector(t, r, pm, true), Forbidden)], Unrestricted)
            }
            Pbar { t, r, pm } => {
                FamilySpec::new(vec![(pm_selector(t, r, pm, false), Forbidden)], Unrestricted)
            }
            Q => FamilySpec::new(vec![], Distinct),
            Qbar { t, m } => FamilySpec::new(vec![(ClassSelector::new(m, [t]), Forbidden)], Distinct),
            D { m } => FamilySpec::new(vec![], LessThan(m)),
            O => FamilySpec::new(vec![(ClassSelector::new(2, [0]), Forbidden)], Unrestricted),
            B { m } => FamilySpec::new(vec![(ClassSelector::new(m, [0]), Forbidden)], Unrestricted),
            Pd { t, r } => {
                FamilySpec::new(vec![(ClassSelector::new(r, [t]), Distinct)], Unrestricted)
            }
            PdBar { t, r } => {
                FamilySpec::new(vec![(ClassSelector::negated(r, [t]), Distinct)], Unrestricted)
            }
            PdPm { t, r } => {
                FamilySpec::new(vec![(ClassSelector::new(r, [t, r - t]), Distinct)], Unrestricted)
            }
            PdR { r } => FamilySpec::new(
                vec![
                    (ClassSelector::new(2 * r, [0]), Distinct),
                    (ClassSelector::new(r, [0]), Unrestricted),
                ],
                Forbidden,
            ),
            Pe { t, m } => FamilySpec::new(
                vec![
                    (ClassSelector::new(m, [t]), Unrestricted),
                    (ClassSelector::new(2, [0]), Forbidden),
                ],
                Unrestricted,
            ),
            Qe { s, m } => FamilySpec::new(
                vec![
                    (ClassSelector::new(m, [s]), Distinct),
                    (ClassSelector::new(2, [0]), Forbidden),
                ],
                Distinct,
            ),
            QePm { s, m } => FamilySpec::new(
                vec![
                    (ClassSelector::new(m, [s, m - s]), Distinct),
                    (ClassSelector::new(2, [0]), Forbidden),
                ],
                Distinct,
            ),
            QeTilde { r } => FamilySpec::new(
                vec![
                    (ClassSelector::new(2, [1]), Distinct),
                    (ClassSelector::new(2 * r, [r]), Even),
                ],
                Forbidden,
            ),
            Pnd { t, r } => {
                FamilySpec::new(vec![(ClassSelector::new(r, [t]), NotDistinct)], Unrestricted)
            }
            PndBar { r } => {
                FamilySpec::new(vec![(ClassSelector::negated(r, [0]), NotDistinct)], Unrestricted)
            }
            Pem { t, m } => {
                FamilySpec::new(vec![(ClassSelector::new(m, [t, m - t]), Even)], Unrestricted)
            }
            Prm { t, r } => {
                FamilySpec::new(vec![(ClassSelector::new(r, [t]), LessThan(r))], Unrestricted)
            }
            Ped0 { r } => FamilySpec::new(
                vec![
                    (ClassSelector::new(r, [0]), Distinct),
                    (ClassSelector::new(2, [0]), Forbidden),
                ],
                Unrestricted,
            ),
            ExactEven { r } => {
                FamilySpec::new(vec![(ClassSelector::new(2, [0]), Exactly(r / 2))], Unrestricted)
            }
            Pend => Pnd { t: 0, r: 2 }.spec(),
            Pond => Pnd { t: 1, r: 2 }.spec(),
            BeckP1 { r } => FamilySpec::unrestricted()
                .with_global(GlobalClause::ExactlyOneValue(ClassSelector::new(2 * r, [0]))),
            BeckP2 { r } => FamilySpec::unrestricted().with_global(
                GlobalClause::ExactlyOneRepeatedValue {
                    selector: ClassSelector::new(r, [0]),
                    threshold: 2,
                },
            ),
            BeckP3 { r } => FamilySpec::unrestricted()
                .with_global(GlobalClause::ExactlyOneValue(ClassSelector::new(r * r, [0]))),
            BeckP4 { r } => FamilySpec::unrestricted().with_global(
                GlobalClause::ExactlyOneRepeatedValue {
                    selector: ClassSelector::new(r, [0]),
                    threshold: r,
                },
            ),
            BeckP5 { t, r } => FamilySpec::unrestricted().with_global(
                GlobalClause::ExactlyOneValue(ClassSelector::new(2 * r, [2 * t, 2 * r - 2 * t])),
            ),
            BeckP6 { t, r } => FamilySpec::unrestricted().with_global(
                GlobalClause::ExactlyOneRepeatedValue {
                    selector: ClassSelector::new(r, [t, r - t]),
                    threshold: 2,
                },
            ),
        }
    }
}

fn pm_selector(t: u64, r: u64, pm: bool, negated: bool) -> ClassSelector {
    let sel = if pm {
        ClassSelector::new(r, [t, r - t])
    } else {
        ClassSelector::new(r, [t])
    };
    if negated {
        ClassSelector { negated: true, ..sel }
    } else {
        sel
    }
}

/// Partitions of n into odd parts where only parts divisible by r may
/// repeat. This is the fixed-point family of the 2r-regular involution for
/// odd r; the catalog gives it no grammar name.
pub fn odd_with_only_r_multiples_repeating(r: u64) -> FamilySpec {
    use MultiplicityRule::*;
    FamilySpec::new(
        vec![
            (ClassSelector::new(2, [0]), Forbidden),
            (ClassSelector::new(r, [0]), Unrestricted),
        ],
        Distinct,
    )
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            P { t, r, pm } => write!(f, "P[{}{t},{r}]", if pm { "+-" } else { "" }),
            Pbar { t, r, pm } => write!(f, "Pbar[{}{t},{r}]", if pm { "+-" } else { "" }),
            Q => write!(f, "Q"),
            Qbar { t, m } => write!(f, "Qbar[{t},{m}]"),
            D { m } => write!(f, "D[{m}]"),
            O => write!(f, "O"),
            B { m } => write!(f, "B[{m}]"),
            Pd { t, r } => write!(f, "PD[{t},{r}]"),
            PdBar { t, r } => write!(f, "PDbar[{t},{r}]"),
            PdPm { t, r } => write!(f, "PDpm[{t},{r}]"),
            PdR { r } => write!(f, "PDr[{r}]"),
            Pe { t, m } => write!(f, "PE[{t},{m}]"),
            Qe { s, m } => write!(f, "QE[{s},{m}]"),
            QePm { s, m } => write!(f, "QEpm[{s},{m}]"),
            QeTilde { r } => write!(f, "QEtilde[{r}]"),
            Pnd { t, r } => write!(f, "PND[{t},{r}]"),
            PndBar { r } => write!(f, "PNDbar[0,{r}]"),
            Pem { t, m } => write!(f, "PEM[{t},{m}]"),
            Prm { t, r } => write!(f, "PRM[{t},{r}]"),
            Ped0 { r } => write!(f, "PED0[{r}]"),
            ExactEven { r } => write!(f, "ExactEven[{r}]"),
            Pend => write!(f, "PEND"),
            Pond => write!(f, "POND"),
            BeckP1 { r } => write!(f, "BeckP1[{r}]"),
            BeckP2 { r } => write!(f, "BeckP2[{r}]"),
            BeckP3 { r } => write!(f, "BeckP3[{r}]"),
            BeckP4 { r } => write!(f, "BeckP4[{r}]"),
            BeckP5 { t, r } => write!(f, "BeckP5[{t},{r}]"),
            BeckP6 { t, r } => write!(f, "BeckP6[{t},{r}]"),
        }
    }
}

/// One bracket argument: an integer with an optional `+-`/`±` prefix.
struct Arg {
    value: u64,
    pm: bool,
}

fn parse_args(text: &str) -> Result<alloc::vec::Vec<Arg>> {
    let mut out = alloc::vec::Vec::new();
    for raw in text.split(',') {
        let tok = raw.trim();
        let (pm, rest) = if let Some(r) = tok.strip_prefix("+-") {
            (true, r)
        } else if let Some(r) = tok.strip_prefix('±') {
            (true, r)
        } else {
            (false, tok)
        };
        let value: u64 = rest
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad family argument '{tok}'")))?;
        out.push(Arg { value, pm });
    }
    Ok(out)
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (head, args) = match text.split_once('[') {
            Some((head, rest)) => {
                let inner = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("missing ']' in '{text}'")))?;
                (head.trim(), parse_args(inner)?)
            }
            None => (text, alloc::vec::Vec::new()),
        };

        fn one(args: &[Arg], text: &str) -> Result<u64> {
            match args {
                [a] if !a.pm => Ok(a.value),
                _ => Err(Error::Parse(format!("'{text}' takes one plain argument"))),
            }
        }
        fn two(args: &[Arg], text: &str) -> Result<(u64, u64)> {
            match args {
                [a, b] if !a.pm && !b.pm => Ok((a.value, b.value)),
                _ => Err(Error::Parse(format!("'{text}' takes two plain arguments"))),
            }
        }
        fn none(args: &[Arg], text: &str) -> Result<()> {
            if args.is_empty() {
                Ok(())
            } else {
                Err(Error::Parse(format!("'{text}' takes no arguments")))
            }
        }

        let name = match head {
            "P" | "Pbar" => {
                let (a, b) = match &args[..] {
                    [a, b] if !b.pm => (a, b),
                    _ => return Err(Error::Parse(format!("'{text}': expected NAME[t,r]"))),
                };
                if head == "P" {
                    P { t: a.value, r: b.value, pm: a.pm }
                } else {
                    Pbar { t: a.value, r: b.value, pm: a.pm }
                }
            }
            "Q" => {
                none(&args, text)?;
                Q
            }
            "Qbar" => {
                let (t, m) = two(&args, text)?;
                Qbar { t, m }
            }
            "D" => D { m: one(&args, text)? },
            "O" => {
                none(&args, text)?;
                O
            }
            "B" => B { m: one(&args, text)? },
            "PD" => {
                let (t, r) = two(&args, text)?;
                Pd { t, r }
            }
            "PDbar" => {
                let (t, r) = two(&args, text)?;
                PdBar { t, r }
            }
            "PDpm" => {
                let (t, r) = two(&args, text)?;
                PdPm { t, r }
            }
            "PDr" => PdR { r: one(&args, text)? },
            "PE" => {
                let (t, m) = two(&args, text)?;
                Pe { t, m }
            }
            "QE" => {
                let (s, m) = two(&args, text)?;
                Qe { s, m }
            }
            "QEpm" => {
                let (s, m) = two(&args, text)?;
                QePm { s, m }
            }
            "QEtilde" => QeTilde { r: one(&args, text)? },
            "PND" => {
                let (t, r) = two(&args, text)?;
                Pnd { t, r }
            }
            "PNDbar" => {
                let (t, r) = two(&args, text)?;
                if t != 0 {
                    return Err(bad("PNDbar takes residue 0".to_string()));
                }
                PndBar { r }
            }
            "PEM" => {
                let (t, m) = two(&args, text)?;
                Pem { t, m }
            }
            "PRM" => {
                let (t, r) = two(&args, text)?;
                Prm { t, r }
            }
            "PED0" => Ped0 { r: one(&args, text)? },
            "ExactEven" => ExactEven { r: one(&args, text)? },
            "PEND" => {
                none(&args, text)?;
                Pend
            }
            "POND" => {
                none(&args, text)?;
                Pond
            }
            "BeckP1" => BeckP1 { r: one(&args, text)? },
            "BeckP2" => BeckP2 { r: one(&args, text)? },
            "BeckP3" => BeckP3 { r: one(&args, text)? },
            "BeckP4" => BeckP4 { r: one(&args, text)? },
            "BeckP5" => {
                let (t, r) = two(&args, text)?;
                BeckP5 { t, r }
            }
            "BeckP6" => {
                let (t, r) = two(&args, text)?;
                BeckP6 { t, r }
            }
            _ => return Err(Error::Parse(format!("unknown family name '{text}'"))),
        };
        name.validate()?;
        Ok(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_roundtrip() {
        let names = [
            "P[1,2]", "P[+-1,6]", "Pbar[2,4]", "Pbar[+-2,12]", "Q", "Qbar[0,4]", "D[3]", "O",
            "B[6]", "PD[0,3]", "PDbar[0,2]", "PDpm[1,6]", "PDr[2]", "PE[0,6]", "PE[2,4]",
            "QE[0,4]", "QE[2,6]", "QEpm[2,12]", "QEtilde[2]", "PND[0,3]", "PND[2,4]",
            "PNDbar[0,3]", "PEM[1,6]", "PEM[3,9]", "PRM[0,3]", "PED0[2]", "ExactEven[4]",
            "PEND", "POND", "BeckP1[2]", "BeckP2[2]", "BeckP3[3]", "BeckP4[3]", "BeckP5[1,3]",
            "BeckP6[1,3]",
        ];
        for n in names {
            let parsed: FamilyName = n.parse().unwrap_or_else(|e| panic!("{n}: {e}"));
            assert_eq!(parsed.to_string(), n);
        }
        // the ± sign is accepted as a synonym for +-
        assert_eq!("Pbar[±2,12]".parse::<FamilyName>().unwrap().to_string(), "Pbar[+-2,12]");
    }

    #[test]
    fn grammar_rejects() {
        for n in [
            "PD[0]",        // wrong arity
            "PD[3,3]",      // t out of range
            "PDpm[0,6]",    // pm needs 0 < t
            "PDpm[3,6]",    // pm needs t < r/2
            "PED0[3]",      // r must be even
            "QEtilde[3]",   // r must be even
            "ExactEven[5]", // r must be even
            "B[1]",         // modulus too small
            "QE[1,4]",      // s must be even
            "NoSuch[1,2]",
            "PD[0,3",       // missing bracket
            "PEND[2]",      // takes no arguments
        ] {
            assert!(n.parse::<FamilyName>().is_err(), "{n} should fail");
        }
    }
}
