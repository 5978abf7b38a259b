//! Canonical instances shipped by `congestion fixtures`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use congestion_core::constant::{k_upper, round_to_decimal};
use congestion_core::rational::{format_rational, ratio};
use congestion_core::Rational;
use num_traits::One;

use crate::document::{to_json, InstanceDocument};

/// Decimal digits kept for the irrational coefficients of the tightness instance.
pub const TIGHTNESS_DIGITS: u32 = 12;

fn strings(values: &[&str]) -> Vec<String> {
    values.iter().map(|s| (*s).to_owned()).collect()
}

/// Five players on coefficients `0, 2, 5` with budget 6: no exact equilibrium.
pub fn example1() -> InstanceDocument {
    InstanceDocument {
        name: Some("example1".into()),
        description: Some("three resources, five players, budget 6; no exact equilibrium".into()),
        players: 5,
        budget: "6".into(),
        coefficients: strings(&["0", "2", "5"]),
    }
}

/// Five players, budget 1, coefficients `0, K/2 - 1/4, 1/K`: no factor
/// below `K` is achievable. The two irrational coefficients are rounded.
pub fn tightness() -> InstanceDocument {
    let k = k_upper(40);
    let a2 = round_to_decimal(&(&k / ratio(2, 1) - ratio(1, 4)), TIGHTNESS_DIGITS);
    let a3 = round_to_decimal(&(Rational::one() / &k), TIGHTNESS_DIGITS);
    InstanceDocument {
        name: Some("tightness".into()),
        description: Some(format!(
            "coefficients 0, K/2 - 1/4 and 1/K with K the real root of x^3 - x^2/2 - 1, \
             each rounded to {TIGHTNESS_DIGITS} decimal digits; the best factor is within 1e-6 of K"
        )),
        players: 5,
        budget: "1".into(),
        coefficients: vec!["0".into(), format_rational(&a2), format_rational(&a3)],
    }
}

/// Seven players on coefficients `1, 4, 4, 10, 10` with budget 9.
pub fn seven_players() -> InstanceDocument {
    InstanceDocument {
        name: Some("appendix_a".into()),
        description: Some(
            "seven players and five resources; the incremental solver ends at (2,2,1,1,1)".into(),
        ),
        players: 7,
        budget: "9".into(),
        coefficients: strings(&["1", "4", "4", "10", "10"]),
    }
}

/// Two resources always admit an exact equilibrium.
pub fn two_resources() -> InstanceDocument {
    InstanceDocument {
        name: Some("two_resources".into()),
        description: Some("two resources; an exact equilibrium exists".into()),
        players: 6,
        budget: "5".into(),
        coefficients: strings(&["1", "3"]),
    }
}

pub fn all() -> Vec<(&'static str, InstanceDocument)> {
    vec![
        ("example1.json", example1()),
        ("tightness.json", tightness()),
        ("appendix_a.json", seven_players()),
        ("two_resources.json", two_resources()),
    ]
}

/// Writes every fixture into `dir` (created if missing), pretty-printed.
pub fn write_all(dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    all()
        .into_iter()
        .map(|(file, doc)| {
            let path = dir.join(file);
            fs::write(&path, to_json(&doc, true) + "\n")?;
            Ok(path)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use congestion_core::rational::parse_rational;

    #[test]
    fn fixtures_are_valid() {
        for (_, doc) in all() {
            doc.to_instance().unwrap();
        }
        assert_eq!(example1().budget, "6");
        assert_eq!(
            seven_players().coefficients,
            strings(&["1", "4", "4", "10", "10"])
        );
    }

    #[test]
    fn tightness_coefficients_are_twelve_digit_roundings() {
        let doc = tightness();
        let a3 = parse_rational(&doc.coefficients[2]).unwrap();
        assert!(a3 > ratio(8350, 10000) && a3 < ratio(8352, 10000));
        let a2 = parse_rational(&doc.coefficients[1]).unwrap();
        assert!(a2 > ratio(3486, 10000) && a2 < ratio(3488, 10000));
        for a in [a2, a3] {
            let scaled = a * Rational::from_integer(10u64.pow(TIGHTNESS_DIGITS).into());
            assert!(scaled.is_integer());
        }
    }
}
