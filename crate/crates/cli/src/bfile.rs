//! OEIS b-file parsing and sequence cross-checking.
//!
//! A b-file is plain text with one `index value` pair per line; lines
//! starting with `#` are comments. Indices must be strictly increasing.

use num_bigint::BigInt;

use pedpod_core::error::{Error, Result};
use pedpod_core::families::{self, FamilyName};
use pedpod_core::qseries;

/// Parsed b-file: exact values addressed by index.
#[derive(Debug, Clone)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
    pub source_path: String,
}

impl BFile {
    pub fn parse(text: &str, source_path: &str) -> Result<BFile> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(idx), Some(val)) = (it.next(), it.next()) else {
                return Err(Error::Parse(format!("b-file line {}: '{raw}'", lineno + 1)));
            };
            let index: i64 = idx
                .parse()
                .map_err(|_| Error::Parse(format!("b-file line {}: bad index", lineno + 1)))?;
            let value: BigInt = val
                .parse()
                .map_err(|_| Error::Parse(format!("b-file line {}: bad value", lineno + 1)))?;
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(Error::Parse(format!(
                        "b-file indices not strictly increasing at line {}",
                        lineno + 1
                    )));
                }
            }
            entries.push((index, value));
        }
        if entries.is_empty() {
            return Err(Error::Parse(format!("empty b-file: {source_path}")));
        }
        Ok(BFile { entries, source_path: source_path.to_string() })
    }

    pub fn load(path: &std::path::Path) -> Result<BFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn lookup(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |&(i, _)| i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }
}

/// Outcome of a sequence comparison against a b-file.
#[derive(Debug, Clone)]
pub struct OeisCheck {
    pub label: String,
    pub source_path: String,
    pub checked: usize,
    /// (n, computed, b-file value) of the first disagreement.
    pub first_mismatch: Option<(u64, BigInt, BigInt)>,
}

impl OeisCheck {
    pub fn agreed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `values[n]` against the b-file entry at index `n + offset` for
/// every n covered by both sides.
pub fn oeis_check_values(
    label: &str,
    values: &[BigInt],
    bfile: &BFile,
    offset: i64,
) -> Result<OeisCheck> {
    let mut checked = 0;
    let mut first_mismatch = None;
    for (n, computed) in values.iter().enumerate() {
        let Some(expected) = bfile.lookup(n as i64 + offset) else {
            continue;
        };
        checked += 1;
        if computed != expected && first_mismatch.is_none() {
            first_mismatch = Some((n as u64, computed.clone(), expected.clone()));
        }
    }
    if checked == 0 {
        return Err(Error::Parse(format!(
            "no overlapping indices between the computed range and {}",
            bfile.source_path
        )));
    }
    Ok(OeisCheck {
        label: label.to_string(),
        source_path: bfile.source_path.clone(),
        checked,
        first_mismatch,
    })
}

/// Cross-checks a catalog family against a b-file up to `n_max`. Uses the
/// series route when the family has a product formula (which also allows n
/// beyond the enumeration bound), otherwise the enumeration counts.
pub fn oeis_check_family(
    family: &FamilyName,
    bfile: &BFile,
    n_max: u64,
    offset: i64,
) -> Result<OeisCheck> {
    family.validate()?;
    let values: Vec<BigInt> = match qseries::gf(family, n_max as usize) {
        Ok(series) => series.coeffs().to_vec(),
        Err(Error::UnknownFamily(_)) => families::count_table(&family.spec(), n_max)?.plain,
        Err(e) => return Err(e),
    };
    oeis_check_values(&family.to_string(), &values, bfile, offset)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basics() {
        let b = BFile::parse("# comment\n0 1\n1 1\n2 2\n\n3 3\n", "test").unwrap();
        assert_eq!(b.entries.len(), 4);
        assert_eq!(b.lookup(2), Some(&BigInt::from(2)));
        assert_eq!(b.lookup(9), None);
        assert!(BFile::parse("", "empty").is_err());
        assert!(BFile::parse("# only comments\n", "empty").is_err());
        assert!(BFile::parse("0 1\n0 2\n", "dup").is_err());
        assert!(BFile::parse("0\n", "short").is_err());
        assert!(BFile::parse("0 xyz\n", "badval").is_err());
    }

    #[test]
    fn family_check_against_known_values() {
        // pd(n) for PD[0,2] (even parts distinct): 1 1 2 3 4 6 9 12 16 22 29
        let text = "0 1\n1 1\n2 2\n3 3\n4 4\n5 6\n6 9\n7 12\n8 16\n9 22\n10 29\n";
        let b = BFile::parse(text, "ped").unwrap();
        let fam: FamilyName = "PD[0,2]".parse().unwrap();
        let check = oeis_check_family(&fam, &b, 10, 0).unwrap();
        assert!(check.agreed());
        assert_eq!(check.checked, 11);

        let wrong = BFile::parse("4 5\n", "wrong").unwrap();
        let check = oeis_check_family(&fam, &wrong, 10, 0).unwrap();
        assert_eq!(check.first_mismatch, Some((4, BigInt::from(4), BigInt::from(5))));
    }

    #[test]
    fn offset_shifts_indices() {
        // same sequence but the b-file starts at index 1 meaning a(1) = ped(0)
        let text = "1 1\n2 1\n3 2\n4 3\n5 4\n";
        let b = BFile::parse(text, "shifted").unwrap();
        let fam: FamilyName = "PD[0,2]".parse().unwrap();
        let check = oeis_check_family(&fam, &b, 4, 1).unwrap();
        assert!(check.agreed());
        assert_eq!(check.checked, 5);
    }

    #[test]
    fn no_overlap_is_an_error() {
        let b = BFile::parse("100 1\n", "far").unwrap();
        let fam: FamilyName = "PD[0,2]".parse().unwrap();
        assert!(oeis_check_family(&fam, &b, 10, 0).is_err());
    }
}
