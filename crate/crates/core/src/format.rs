//! Text formatting shared by reports.

/// `x` with 12 significant digits in the style of C's `%.12g`.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Vertex list joined by `sep`.
pub fn join_vertices(vs: &[usize], sep: &str) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_f64(2.0), "2");
        assert_eq!(fmt_f64(std::f64::consts::SQRT_2), "1.41421356237");
        assert_eq!(fmt_f64(-0.5), "-0.5");
        assert_eq!(fmt_f64(1e-7), "1e-07");
        assert_eq!(fmt_f64(123456789012345.0), "1.23456789012e+14");
        assert_eq!(fmt_f64(99999999999.99), "100000000000");
        assert_eq!(fmt_f64(0.000123), "0.000123");
    }

    #[test]
    fn joins() {
        assert_eq!(join_vertices(&[0, 3, 5], "-"), "0-3-5");
    }
}
