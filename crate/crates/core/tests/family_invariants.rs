//! Cross-checks of the counting dynamic program against explicit
//! enumeration over the whole catalog, and the family-level membership
//! properties.

use num_bigint::BigInt;
use num_traits::One;

use pedpod_core::families::{self, FamilyName};
use pedpod_core::Partition;

fn catalog_sample() -> Vec<FamilyName> {
    let mut names: Vec<FamilyName> = Vec::new();
    let mut push = |s: &str| names.push(s.parse().unwrap());
    for s in ["Q", "O", "PEND", "POND"] {
        push(s);
    }
    for r in 2..=4u64 {
        push(&format!("B[{r}]"));
        push(&format!("D[{r}]"));
        push(&format!("Qbar[0,{}]", 2 * r));
        push(&format!("PDbar[0,{r}]"));
        push(&format!("PDr[{r}]"));
        push(&format!("PE[0,{}]", 2 * r));
        push(&format!("QE[0,{}]", 2 * r));
        push(&format!("PND[0,{r}]"));
        push(&format!("PNDbar[0,{r}]"));
        push(&format!("PEM[{r},{}]", 3 * r));
        push(&format!("BeckP1[{r}]"));
        push(&format!("BeckP2[{r}]"));
        push(&format!("BeckP4[{r}]"));
        for t in 0..r {
            push(&format!("PD[{t},{r}]"));
            push(&format!("PRM[{t},{r}]"));
            push(&format!("P[{t},{r}]"));
            push(&format!("Pbar[{t},{r}]"));
        }
    }
    for (t, r) in [(1u64, 3u64), (1, 4), (1, 5), (2, 5), (1, 6), (2, 6)] {
        push(&format!("PDpm[{t},{r}]"));
        push(&format!("QEpm[{},{}]", 2 * t, 2 * r));
        push(&format!("BeckP5[{t},{r}]"));
        push(&format!("BeckP6[{t},{r}]"));
    }
    for r in [2u64, 4] {
        push(&format!("QEtilde[{r}]"));
        push(&format!("PED0[{r}]"));
        push(&format!("ExactEven[{r}]"));
    }
    names
}

/// count, count_signed, and total_parts agree with direct folds over
/// enumerate for every catalog family and all n <= 30.
#[test]
fn counting_matches_enumeration_to_30() {
    for name in catalog_sample() {
        let spec = name.spec();
        let table = families::count_table(&spec, 30).unwrap();
        for n in 0..=30u64 {
            let members = families::enumerate(n, &spec).unwrap();
            assert!(
                members.iter().all(|p| spec.member(p) && p.size() == n),
                "{name} n={n}: enumerate returned a non-member"
            );
            let mut sorted = members.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), members.len(), "{name} n={n}: duplicates");

            let plain = BigInt::from(members.len());
            let signed: BigInt = members
                .iter()
                .map(|p| if p.length() % 2 == 0 { BigInt::one() } else { -BigInt::one() })
                .sum();
            let parts: BigInt = members.iter().map(|p| BigInt::from(p.length())).sum();
            assert_eq!(table.plain[n as usize], plain, "{name} count at n={n}");
            assert_eq!(table.signed[n as usize], signed, "{name} signed at n={n}");
            assert_eq!(table.total_parts[n as usize], parts, "{name} parts at n={n}");
        }
    }
}

/// Reverse-lexicographic output order on the canonical sequences.
#[test]
fn enumeration_order_is_revlex() {
    for name in ["PD[0,3]", "B[4]", "Q", "PEM[1,6]"] {
        let spec = name.parse::<FamilyName>().unwrap().spec();
        for n in [6u64, 9, 12] {
            let members = families::enumerate(n, &spec).unwrap();
            for w in members.windows(2) {
                let a = w[0].parts();
                let b = w[1].parts();
                assert!(a > b, "{name} n={n}: {:?} !> {:?}", a, b);
            }
        }
    }
}

/// pend(n) = pd_{±1,6}(n) for n <= 30.
#[test]
fn pend_equals_pdpm16_to_30() {
    let pend = families::count_table(&FamilyName::Pend.spec(), 30).unwrap();
    let pdpm = families::count_table(&FamilyName::PdPm { t: 1, r: 6 }.spec(), 30).unwrap();
    assert_eq!(pend.plain, pdpm.plain);
}

/// Every member of PND_{0,r} has its occurring r-divisible values with
/// multiplicity at least 2, for n <= 30 and r in {2,3,4}.
#[test]
fn pnd_multiplicities_to_30() {
    for r in 2..=4u64 {
        let spec = FamilyName::Pnd { t: 0, r }.spec();
        for n in 0..=30u64 {
            for p in families::enumerate(n, &spec).unwrap() {
                assert!(
                    p.pairs().all(|(v, m)| v % r != 0 || m >= 2),
                    "r={r} n={n}: {p}"
                );
            }
        }
    }
}

/// Subset families stay below the unrestricted count.
#[test]
fn filtering_is_monotone_to_30() {
    let all = families::count_table(&pedpod_core::families::FamilySpec::unrestricted(), 30).unwrap();
    for r in 2..=6u64 {
        for t in 0..r {
            let fam = FamilyName::Pbar { t, r, pm: false };
            let counts = families::count_table(&fam.spec(), 30).unwrap();
            for n in 0..=30usize {
                assert!(counts.plain[n] <= all.plain[n], "{fam} at n={n}");
            }
        }
    }
}

/// Spot-check the paper's membership walkthrough at n = 9.
#[test]
fn pd03_walkthrough() {
    let spec = FamilyName::Pd { t: 0, r: 3 }.spec();
    let members = families::enumerate(9, &spec).unwrap();
    assert_eq!(members.len(), 27);
    for text in ["9", "6,3", "6,2,1", "5,2,1,1", "3,1^6"] {
        let p = Partition::parse(text).unwrap();
        assert!(members.contains(&p), "{text} missing");
    }
    for text in ["3^3", "3^2,2,1", "3^2,1^3"] {
        let p = Partition::parse(text).unwrap();
        assert!(!members.contains(&p), "{text} wrongly present");
    }
}
