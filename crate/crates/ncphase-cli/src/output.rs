//! Rendering helpers: locale-independent number formatting and CSV
//! assembly. All emissions are byte-deterministic for a fixed config and
//! seed.

/// 17 significant digits, exponent notation, decimal point, no separators.
/// Negative zero renders as zero.
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// One CSV line from already-rendered fields (no quoting: no field the CLI
/// emits contains commas, quotes or newlines).
pub fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}

/// Serialize any value as pretty JSON with a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_fixed_width_17_digits() {
        assert_eq!(fmt_f64(3.5), "3.5000000000000000e0");
        assert_eq!(fmt_f64(-1.0 / 32805.0), "-3.0483158055174515e-5");
        assert_eq!(fmt_f64(0.0), "0.0000000000000000e0");
    }

    #[test]
    fn csv_line_joins_plain() {
        assert_eq!(csv_line(&["1".into(), "".into(), "x".into()]), "1,,x");
    }
}
