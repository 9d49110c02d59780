//! Deterministic text output helpers shared by trajectory writers, field
//! diagnostics, and the experiment runner.

/// Format with 17 significant digits so repeated runs are byte-comparable
/// and values round-trip through text exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// One diagnostics CSV row: values joined by commas at full precision.
pub fn csv_row(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| fmt_f64(*v))
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_round_trips() {
        for v in [0.1, -3.25e-17, 1.0 / 3.0, 6.02e23] {
            let parsed: f64 = fmt_f64(v).parse().unwrap();
            assert_eq!(parsed.to_bits(), v.to_bits());
        }
    }

    #[test]
    fn csv_row_layout() {
        assert_eq!(csv_row(&[1.0, 2.0]), "1.0000000000000000e0,2.0000000000000000e0");
    }
}
