//! Identity-level invariants at their stated ranges, beyond the per-row
//! examples in the unit tests.

use num_bigint::BigInt;
use num_traits::Zero;

use pedpod_core::identities::{verify, IdentityParams, Method};

/// The part-count excess of PND[0,r] over PEM[r,3r] is non-negative and
/// equals twice the number of odd-multiplicity r-divisible part values,
/// for all n <= 30 and r in {2,3,4}.
#[test]
fn beck_nonnegativity_to_30() {
    for r in 2..=4u64 {
        let rep = verify("beck_pnd_nonneg", &IdentityParams::r(r), 30, Method::Enumeration)
            .unwrap();
        assert!(rep.verdict, "r={r}");
        assert!(rep.rows.iter().all(|row| row.lhs >= BigInt::zero()));
    }
}

/// The alternating pentagonal sum is supported exactly on n = r·k(3k+1),
/// with sign (−1)^k. Frozen support for r = 2 up to n = 60:
/// k = 0,−1,1,−2,2,−3,3 gives n = 0,4,8,20,28,48,60.
#[test]
fn pent_support_is_exact() {
    let rep = verify("pent", &IdentityParams::r(2), 60, Method::Enumeration).unwrap();
    assert!(rep.verdict);
    let support: Vec<(u64, BigInt)> = rep
        .rows
        .iter()
        .filter(|row| !row.rhs.is_zero())
        .map(|row| (row.n, row.rhs.clone()))
        .collect();
    let expect: Vec<(u64, BigInt)> = [
        (0u64, 1i64),
        (4, -1),
        (8, -1),
        (20, 1),
        (28, 1),
        (48, -1),
        (60, -1),
    ]
    .iter()
    .map(|&(n, s)| (n, BigInt::from(s)))
    .collect();
    assert_eq!(support, expect);
}

/// Both methods stay in lockstep for a sample of the catalog.
#[test]
fn methods_agree_on_random_sample() {
    for (id, params) in [
        ("pe", IdentityParams::r(5)),
        ("pnd", IdentityParams::r(4)),
        ("prm_t", IdentityParams::tr(2, 5)),
        ("pm", IdentityParams::tr(2, 6)),
    ] {
        let a = verify(id, &params, 25, Method::Enumeration).unwrap();
        let b = verify(id, &params, 25, Method::Series).unwrap();
        assert!(a.verdict && b.verdict, "{id}");
        for (x, y) in a.rows.iter().zip(&b.rows) {
            assert_eq!((x.n, &x.lhs, &x.rhs), (y.n, &y.lhs, &y.rhs), "{id}");
        }
    }
}
