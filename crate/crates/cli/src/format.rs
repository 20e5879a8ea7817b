//! Number rendering for text and CSV output.

/// `x` with `digits` significant digits, trailing zeros trimmed. Plain
/// notation for magnitudes in `[1e-5, 10^digits)`, scientific otherwise.
pub fn sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{exp}", trim(mantissa));
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim(&format!("{x:.decimals$}")).to_string()
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::sig;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(std::f64::consts::PI.powi(2) / 240.0, 10), "0.04112335167");
        assert_eq!(sig(0.125, 10), "0.125");
        assert_eq!(sig(1.0, 10), "1");
        assert_eq!(sig(19.739208802178716, 6), "19.7392");
        assert_eq!(sig(-2.5e-9, 3), "-2.5e-9");
        assert_eq!(sig(123456.0, 3), "1.23e5");
        assert_eq!(sig(f64::INFINITY, 3), "inf");
    }
}
