use crate::ModulusReport;

/// Locale-independent formatting with 9 significant digits.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x:.8e}")
}

/// Distance matrix as CSV, row/column order following the family indices.
pub fn matrix_csv(ids: &[String], matrix: &[Vec<f64>]) -> String {
    let mut out = String::from("id");
    for id in ids {
        out.push(',');
        out.push_str(id);
    }
    out.push('\n');
    for (id, row) in ids.iter().zip(matrix) {
        out.push_str(id);
        for v in row {
            out.push(',');
            out.push_str(&sig9(*v));
        }
        out.push('\n');
    }
    out
}

/// Modulus curve as `h, omega` rows.
pub fn modulus_csv(report: &ModulusReport) -> String {
    let mut out = String::from("h,omega\n");
    for (h, w) in report.h_grid.iter().zip(&report.omega) {
        out.push_str(&sig9(*h));
        out.push(',');
        out.push_str(&sig9(*w));
        out.push('\n');
    }
    out
}

/// (epsilon, delta) table as CSV; a missing delta prints as FAIL.
pub fn eps_delta_csv(entries: &[(f64, Option<f64>)]) -> String {
    let mut out = String::from("epsilon,delta\n");
    for (eps, delta) in entries {
        out.push_str(&sig9(*eps));
        out.push(',');
        match delta {
            Some(d) => out.push_str(&sig9(*d)),
            None => out.push_str("FAIL"),
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig9_is_stable() {
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(1.0 / 3.0), "3.33333333e-1");
        assert_eq!(sig9(-12345.678), "-1.23456780e4");
    }

    #[test]
    fn csv_shapes() {
        let ids = vec!["a".to_string(), "b".to_string()];
        let m = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let text = matrix_csv(&ids, &m);
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("id,a,b\n"));
    }
}
