/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence
/// `H_{k+1} = 2x H_k − 2k H_{k−1}`.
pub fn hermite(n: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        assert_eq!(hermite(0, 5.0), 1.0);
        assert!((hermite(1, 0.3) - 0.6).abs() < 1e-16);
        // H_4(x) = 16x^4 − 48x^2 + 12
        assert_eq!(hermite(4, 1.0), -20.0);
        let x: f64 = 0.37;
        let h4 = 16.0 * x.powi(4) - 48.0 * x * x + 12.0;
        assert!((hermite(4, x) - h4).abs() < 1e-13);
    }

    #[test]
    fn parity() {
        for n in 0..12 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((hermite(n, -0.8) - sign * hermite(n, 0.8)).abs() < 1e-10);
        }
    }
}
