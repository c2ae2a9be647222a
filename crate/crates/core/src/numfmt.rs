/// Formats `v` rounded to at most `digits` significant digits, in plain
/// decimal notation with no trailing zeros.
pub fn significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{}", v + 0.0);
    }
    let digits = digits.max(1);
    let rounded: f64 = format!("{:.*e}", digits - 1, v)
        .parse()
        .expect("scientific formatting always parses");
    format!("{}", rounded)
}
