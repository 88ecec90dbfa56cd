//! Number-theoretic side conditions: factorization, triangular-number
//! tests, and the parity/divisibility criteria, together with a
//! series-backed parity verification suite.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::FamilyName;
use crate::identities::{IdentityReport, IdentityRow, Method};
use crate::qseries;

/// Default trial-division bound for [`factorize`].
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000_000_000;

/// Prime factorization with ascending primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Complete factorization by 2,3,5-wheel trial division; the remaining
/// cofactor is confirmed prime. `n = 1` gives the empty product.
pub fn factorize(n: u64) -> Result<Factorization> {
    factorize_bounded(n, DEFAULT_FACTOR_BOUND)
}

pub fn factorize_bounded(n: u64, bound: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::BadParameters("factorize needs n >= 1".to_string()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5] {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    // wheel over residues coprime to 30
    const WHEEL: [u64; 8] = [7, 11, 13, 17, 19, 23, 29, 31];
    let mut base = 0u64;
    'outer: while rest > 1 {
        if is_prime(rest) {
            factors.push((rest, 1));
            rest = 1;
            break;
        }
        for off in WHEEL {
            let p = base + off;
            if p * p > rest {
                break 'outer;
            }
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        base += 30;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    factors.sort_unstable();
    debug_assert_eq!(factors.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
    Ok(Factorization { n, factors })
}

/// Exponent of the prime `p` in `n` (0 when absent). Rejects composite `p`.
pub fn ord_p(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::BadParameters("ord_p needs n >= 1".to_string()));
    }
    let mut e = 0u32;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    Ok(e)
}

/// Exact test for n = k(k+1)/2; returns the witness k.
pub fn is_triangular(n: u64) -> Option<u64> {
    let d = 8 * n + 1;
    let s = d.isqrt();
    if s * s == d {
        Some((s - 1) / 2)
    } else {
        None
    }
}

/// Parity criterion for 8-regular counts: true iff 24n+7 = p^{4a+1}·M² for
/// a prime p not dividing M. Decision procedure: exactly one prime in the
/// factorization carries an odd exponent, and that exponent is ≡ 1 (mod 4).
pub fn pd04_parity_criterion(n: u64) -> Result<bool> {
    let f = factorize(24 * n + 7)?;
    let odd: Vec<u32> = f.factors.iter().map(|&(_, e)| e).filter(|e| e % 2 == 1).collect();
    Ok(odd.len() == 1 && odd[0] % 4 == 1)
}

/// Divisibility-by-3 criterion for 9-regular counts: true iff 3n+1 has a
/// prime p ≡ 2 (mod 3) with ord_p odd, or a prime p ≡ 1 (mod 3) with
/// ord_p ≡ 2 (mod 3).
pub fn prm03_div3_criterion(n: u64) -> Result<bool> {
    let f = factorize(3 * n + 1)?;
    Ok(f.factors.iter().any(|&(p, e)| {
        (p % 3 == 2 && e % 2 == 1) || (p % 3 == 1 && e % 3 == 2)
    }))
}

fn parity_bit(x: &BigInt) -> BigInt {
    x % BigInt::from(2)
}

fn bool_int(b: bool) -> BigInt {
    BigInt::from(u8::from(b))
}

fn series_counts(name: FamilyName, n_max: u64) -> Result<Vec<BigInt>> {
    Ok(qseries::gf(&name, n_max as usize)?.coeffs().to_vec())
}

fn report(identity: &str, params: Vec<(&'static str, u64)>, n_max: u64, rows: Vec<IdentityRow>) -> IdentityReport {
    let verdict = rows.iter().all(|r| r.pass);
    IdentityReport {
        identity: identity.to_string(),
        params,
        n_max,
        method: Method::Series,
        rows,
        verdict,
    }
}

/// ped(n) is odd exactly at the triangular numbers. Counts come from the
/// series route, so large n is cheap.
pub fn parity_ped_triangular(n_max: u64) -> Result<IdentityReport> {
    let ped = series_counts(FamilyName::Pd { t: 0, r: 2 }, n_max)?;
    let rows = (0..=n_max)
        .map(|n| {
            let lhs = parity_bit(&ped[n as usize]);
            let rhs = bool_int(is_triangular(n).is_some());
            IdentityRow { n, pass: lhs == rhs, lhs, rhs }
        })
        .collect();
    Ok(report("parity_ped_triangular", Vec::new(), n_max, rows))
}

/// pd_{0,4}(n) is odd exactly when 24n+7 has the p^{4a+1}M² shape.
pub fn parity_pd04(n_max: u64) -> Result<IdentityReport> {
    let pd = series_counts(FamilyName::Pd { t: 0, r: 4 }, n_max)?;
    let rows = (0..=n_max)
        .map(|n| {
            let lhs = parity_bit(&pd[n as usize]);
            let rhs = bool_int(pd04_parity_criterion(n)?);
            Ok(IdentityRow { n, pass: lhs == rhs, lhs, rhs })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(report("parity_pd04", Vec::new(), n_max, rows))
}

/// 3 | prm_{0,3}(n) exactly when the ord_p criterion on 3n+1 holds.
pub fn div3_prm03(n_max: u64) -> Result<IdentityReport> {
    let prm = series_counts(FamilyName::Prm { t: 0, r: 3 }, n_max)?;
    let rows = (0..=n_max)
        .map(|n| {
            let lhs = bool_int((&prm[n as usize] % BigInt::from(3)).is_zero());
            let rhs = bool_int(prm03_div3_criterion(n)?);
            Ok(IdentityRow { n, pass: lhs == rhs, lhs, rhs })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(report("div3_prm03", Vec::new(), n_max, rows))
}

/// The same-parity triple b_{2r} ≡ pd_{0,r} ≡ QE_{0,2r} (mod 2), as two
/// pairwise reports.
pub fn parity_triple(r: u64, n_max: u64) -> Result<[IdentityReport; 2]> {
    if r < 2 {
        return Err(Error::BadParameters("parity triple needs r >= 2".to_string()));
    }
    let b = series_counts(FamilyName::B { m: 2 * r }, n_max)?;
    let pd = series_counts(FamilyName::Pd { t: 0, r }, n_max)?;
    let qe = series_counts(FamilyName::Qe { s: 0, m: 2 * r }, n_max)?;
    let pair = |identity: &str, xs: &[BigInt], ys: &[BigInt]| {
        let rows = (0..=n_max)
            .map(|n| {
                let lhs = parity_bit(&xs[n as usize]);
                let rhs = parity_bit(&ys[n as usize]);
                IdentityRow { n, pass: lhs == rhs, lhs, rhs }
            })
            .collect();
        report(identity, alloc::vec![("r", r)], n_max, rows)
    };
    Ok([pair("parity_b2r_pd0r", &b, &pd), pair("parity_pd0r_qe", &pd, &qe)])
}

/// Runs every parity/divisibility check up to `n_max`.
pub fn verify_parity_suite(n_max: u64) -> Result<Vec<IdentityReport>> {
    let mut reports = alloc::vec![
        parity_ped_triangular(n_max)?,
        parity_pd04(n_max)?,
        div3_prm03(n_max)?,
    ];
    for r in [2, 3, 4] {
        reports.extend(parity_triple(r, n_max)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(12).unwrap().factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(1).unwrap().factors, vec![]);
        assert_eq!(factorize(2 * 3 * 5 * 7 * 11 * 13).unwrap().factors.len(), 6);
        assert_eq!(factorize(1009 * 1013).unwrap().factors, vec![(1009, 1), (1013, 1)]);
        assert_eq!(
            factorize(999_999_999_989).unwrap().factors,
            vec![(999_999_999_989, 1)]
        );
        assert!(factorize(0).is_err());
        assert!(factorize_bounded(1_000_001, 1_000_000).is_err());
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 1..=5000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.factors.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
            assert!(f.factors.iter().all(|&(p, _)| is_prime(p)));
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn ord_p_examples() {
        assert_eq!(ord_p(3, 54).unwrap(), 3);
        assert_eq!(ord_p(5, 54).unwrap(), 0);
        assert_eq!(ord_p(4, 54), Err(Error::NotPrime(4)));
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(is_triangular(0), Some(0));
        assert_eq!(is_triangular(10), Some(4));
        assert_eq!(is_triangular(8), None);
        assert_eq!(is_triangular(6), Some(3));
    }

    #[test]
    fn criteria_examples() {
        // 24·0+7 = 7¹, exponent 1 = 4·0+1
        assert!(pd04_parity_criterion(0).unwrap());
        // 31 is prime
        assert!(pd04_parity_criterion(1).unwrap());
        // 55 = 5·11 has two odd exponents
        assert!(!pd04_parity_criterion(2).unwrap());

        // 3·1+1 = 4 = 2², even exponent
        assert!(!prm03_div3_criterion(1).unwrap());
        // 10 = 2·5 with both primes ≡ 2 (mod 3) and odd orders
        assert!(prm03_div3_criterion(3).unwrap());
        // 1 has the empty factorization
        assert!(!prm03_div3_criterion(0).unwrap());
    }

    #[test]
    fn parity_suite_small() {
        for rep in verify_parity_suite(60).unwrap() {
            assert!(rep.verdict, "{} failed", rep.identity);
        }
    }

    #[test]
    fn ped_parity_row_values() {
        let rep = parity_ped_triangular(10).unwrap();
        // ped(6) = 9 is odd and 6 = T_3
        assert_eq!(rep.rows[6].lhs, BigInt::from(1));
        assert_eq!(rep.rows[6].rhs, BigInt::from(1));
        assert_eq!(rep.rows[0].lhs, BigInt::from(1));
    }
}
