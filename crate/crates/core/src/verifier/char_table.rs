//! The character table of the torus normalizer and the values of the
//! 111-dimensional character on its classes.
//!
//! Entries: integers, `.` for zero, `A = -1-2√-3`, `*A = -1+2√-3`, `B = √-3`.

use super::cyclotomic::CyclotomicValue;

pub const CLASS_NAMES: [&str; 30] = [
    "1a", "2a", "2b", "2c", "2d", "2e", "3a", "3b", "3c", "4a", "4b", "4c", "4d", "4e", "6a", "6b", "6c", "6d", "6e",
    "8a", "8b", "8c", "8d", "8e", "12a", "12b", "12c", "12d", "12e", "24a",
];

const IRREDUCIBLES: [&str; 30] = [
    "  1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1",
    "  1   1   1  -1  -1   1   1   1   1   1   1  -1   1  -1   1   1   1  -1  -1  -1  -1  -1   1   1   1   1  -1  -1  -1  -1",
    "  1   1   1  -1   1  -1   1   1   1   1   1  -1  -1  -1   1   1   1  -1   1  -1   1   1  -1  -1   1   1  -1  -1  -1  -1",
    "  1   1   1   1  -1  -1   1   1   1   1   1   1  -1   1   1   1   1   1  -1   1  -1  -1  -1  -1   1   1   1   1   1   1",
    "  2   2   2  -2   .   .  -1   2  -1   2   2  -2   .  -2  -1  -1  -1   1   .  -2   .   .   .   .  -1  -1   1   1   1   1",
    "  2   2   2   2   .   .  -1   2  -1   2   2   2   .   2  -1  -1  -1  -1   .   2   .   .   .   .  -1  -1  -1  -1  -1  -1",
    "  2   2   2   .  -2   .   2  -1  -1   2   2   .   .   .   2   2   2   .   1   .  -2  -2   .   .   2   2   .   .   .   .",
    "  2   2   2   .   2   .   2  -1  -1   2   2   .   .   .   2   2   2   .  -1   .   2   2   .   .   2   2   .   .   .   .",
    "  3   3  -1  -1   3  -1   3   .   .   3  -1  -1  -1   1   3  -1  -1  -1   .  -1  -1  -1  -1   1   3  -1  -1   1   1  -1",
    "  3   3  -1  -1  -3   1   3   .   .   3  -1  -1   1   1   3  -1  -1  -1   .  -1   1   1   1  -1   3  -1  -1   1   1  -1",
    "  3   3  -1   1   3   1   3   .   .   3  -1   1   1  -1   3  -1  -1   1   .   1  -1  -1   1  -1   3  -1   1  -1  -1   1",
    "  3   3  -1   1  -3  -1   3   .   .   3  -1   1  -1  -1   3  -1  -1   1   .   1   1   1  -1   1   3  -1   1  -1  -1   1",
    "  4   4   4   .   .   .  -2  -2   1   4   4   .   .   .  -2  -2  -2   .   .   .   .   .   .   .  -2  -2   .   .   .   .",
    "  6   6  -2  -2   .   .  -3   .   .   6  -2  -2   .   2  -3   1   1   1   .  -2   .   .   .   .  -3   1   1  -1  -1   1",
    "  6   6  -2   2   .   .  -3   .   .   6  -2   2   .  -2  -3   1   1  -1   .   2   .   .   .   .  -3   1  -1   1   1  -1",
    "  6   6   2  -2   .   .   6   .   .  -2  -2  -2   .   .   6   2   2  -2   .   2   .   .   .   .  -2  -2  -2   .   .   2",
    "  6   6   2   2   .   .   6   .   .  -2  -2   2   .   .   6   2   2   2   .  -2   .   .   .   .  -2  -2   2   .   .  -2",
    "  6   6  -2   .   .  -2   6   .   .  -2   2   .  -2   .   6  -2  -2   .   .   .   .   .   2   .  -2   2   .   .   .   .",
    "  6   6  -2   .   .   2   6   .   .  -2   2   .   2   .   6  -2  -2   .   .   .   .   .  -2   .  -2   2   .   .   .   .",
    "  6   6   2  -2   .   .  -3   .   .  -2  -2  -2   .   .  -3   A  *A   1   .   2   .   .   .   .   1   1   1   B  -B  -1",
    "  6   6   2  -2   .   .  -3   .   .  -2  -2  -2   .   .  -3  *A   A   1   .   2   .   .   .   .   1   1   1  -B   B  -1",
    "  6   6   2   2   .   .  -3   .   .  -2  -2   2   .   .  -3   A  *A  -1   .  -2   .   .   .   .   1   1  -1  -B   B   1",
    "  6   6   2   2   .   .  -3   .   .  -2  -2   2   .   .  -3  *A   A  -1   .  -2   .   .   .   .   1   1  -1   B  -B   1",
    " 12  12  -4   .   .   .  -6   .   .  -4   4   .   .   .  -6   2   2   .   .   .   .   .   .   .   2  -2   .   .   .   .",
    " 12  -4   .   2   .  -2  12   .   .   .   .  -2   2   .  -4   .   .   2   .   .  -2   2   .   .   .   .  -2   .   .   .",
    " 12  -4   .   2   .   2  12   .   .   .   .  -2  -2   .  -4   .   .   2   .   .   2  -2   .   .   .   .  -2   .   .   .",
    " 12  -4   .  -2   .   2  12   .   .   .   .   2  -2   .  -4   .   .  -2   .   .  -2   2   .   .   .   .   2   .   .   .",
    " 12  -4   .  -2   .  -2  12   .   .   .   .   2   2   .  -4   .   .  -2   .   .   2  -2   .   .   .   .   2   .   .   .",
    " 24  -8   .   4   .   . -12   .   .   .   .  -4   .   .   4   .   .  -2   .   .   .   .   .   .   .   .   2   .   .   .",
    " 24  -8   .  -4   .   . -12   .   .   .   .   4   .   .   4   .   .   2   .   .   .   .   .   .   .   .  -2   .   .   .",
];

const PSI: &str = "111  -1  -1  -1  -1  -1 -24   3   3   3   3   3   3   3   8   8   8   8  -1  -3  -3   1   1   1   .   .   .   .   .   .";

fn entry(tok: &str) -> CyclotomicValue {
    match tok {
        "." => CyclotomicValue::ZERO,
        "A" => CyclotomicValue::new(-1, -2),
        "*A" => CyclotomicValue::new(-1, 2),
        "B" => CyclotomicValue::new(0, 1),
        "-B" => CyclotomicValue::new(0, -1),
        n => CyclotomicValue::int(n.parse().expect("table entry")),
    }
}

fn parse_row(row: &str) -> [CyclotomicValue; 30] {
    let v: Vec<CyclotomicValue> = row.split_whitespace().map(entry).collect();
    v.try_into().expect("30 entries per row")
}

/// Element order encoded in a class name such as `12c`.
pub fn class_order(name: &str) -> usize {
    name.trim_end_matches(|c: char| c.is_ascii_alphabetic()).parse().expect("class name")
}

/// The 30 irreducible characters, one row per character.
pub fn irreducibles() -> Vec<[CyclotomicValue; 30]> {
    IRREDUCIBLES.iter().map(|r| parse_row(r)).collect()
}

/// The character of the 111-dimensional module, per class.
pub fn psi() -> [i64; 30] {
    parse_row(PSI).map(|v| {
        assert!(v.is_integer());
        v.a
    })
}
