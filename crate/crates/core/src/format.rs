//! Number formatting shared by tables, figures and the CLI.

/// Formats `v` the way the published tables do: `precision` digits after the
/// point for values below 10, one fewer for each further integer digit, with
/// trailing zeros trimmed. Magnitudes of 1e15 and above switch to exponent form.
pub fn number(v: f64, precision: usize) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let mag = v.abs();
    if mag >= 1e15 {
        return exponent(v, precision);
    }
    let int_digits = if mag < 1.0 { 1 } else { mag.log10().floor() as usize + 1 };
    let decimals = (precision + 1).saturating_sub(int_digits);
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn exponent(v: f64, precision: usize) -> String {
    let s = format!("{v:.precision$e}");
    match s.split_once('e') {
        Some((m, e)) if m.contains('.') => {
            format!("{}e{e}", m.trim_end_matches('0').trim_end_matches('.'))
        }
        _ => s,
    }
}
