//! CSV number formatting.

/// Scientific notation with 12 significant digits.
pub fn sci(v: f64) -> String {
    if v == 0.0 {
        // fold -0 into +0 so sign noise never changes the bytes
        return format!("{:.11e}", 0.0);
    }
    format!("{v:.11e}")
}

pub fn row(values: &[f64]) -> String {
    let cells: Vec<String> = values.iter().map(|&v| sci(v)).collect();
    cells.join(",")
}
