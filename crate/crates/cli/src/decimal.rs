//! Fixed-precision decimal rendering: 12 significant digits.
//!
//! Values whose decimal exponent lies in `-5..12` are written positionally
//! (`0.666666666667`, `1.00000000000`); anything else uses scientific form
//! (`1.00000016667e-6`). Zero is written as `0`.

pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn render(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..12).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        format!("{:.*}", decimals, x)
    } else {
        sci
    }
}

pub fn parse(s: &str) -> Option<f64> {
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        assert_eq!(render(2.0 / 3.0), "0.666666666667");
        assert_eq!(render(1.0), "1.00000000000");
        assert_eq!(render(0.0), "0");
        assert_eq!(render(1.0000001666668e-6), "1.00000016667e-6");
        assert_eq!(render(0.1873), "0.187300000000");
        assert_eq!(render(-0.25), "-0.250000000000");
        assert_eq!(render(123456789012.0), "123456789012");
        assert_eq!(render(1.5e12), "1.50000000000e12");
    }

    #[test]
    fn rounding_across_a_power_of_ten() {
        assert_eq!(render(9.9999999999996), "10.0000000000");
        assert_eq!(render(0.000099999999999996), "0.000100000000000");
    }

    #[test]
    fn rendered_values_reparse_to_the_same_text() {
        for x in [1.0 / 3.0, 1e-7, 0.55004827, 6.02e23, 1e-5, 9.87654321e-5] {
            let s = render(x);
            assert_eq!(render(parse(&s).unwrap()), s);
        }
    }
}
