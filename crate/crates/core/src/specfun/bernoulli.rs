/// B_2, B_4, …, B_60.
const B2K: [f64; 30] = [
    1.666_666_666_666_666_7e-1,
    -3.333_333_333_333_333_3e-2,
    2.380_952_380_952_381e-2,
    -3.333_333_333_333_333_3e-2,
    7.575_757_575_757_575_8e-2,
    -2.531_135_531_135_531_1e-1,
    1.166_666_666_666_666_7,
    -7.092_156_862_745_098,
    5.497_117_794_486_215_5e1,
    -5.291_242_424_242_424_2e2,
    6.192_123_188_405_797_1e3,
    -8.658_025_311_355_311_4e4,
    1.425_517_166_666_666_7e6,
    -2.729_823_106_781_609_2e7,
    6.015_808_739_006_423_7e8,
    -1.511_631_576_709_215_7e10,
    4.296_146_430_611_666_7e11,
    -1.371_165_520_508_833_3e13,
    4.883_323_189_735_931_7e14,
    -1.929_657_934_194_006_8e16,
    8.416_930_475_736_826_2e17,
    -4.033_807_185_405_945_5e19,
    2.115_074_863_808_199_2e21,
    -1.208_662_652_229_652_6e23,
    7.500_866_746_076_964_4e24,
    -5.038_778_101_481_068_9e26,
    3.652_877_648_481_812_3e28,
    -2.849_876_930_245_088_2e30,
    2.386_542_749_968_362_8e32,
    -2.139_994_925_722_533_4e34,
];

/// Even-index Bernoulli numbers `B_{2k}`, `1 <= k <= 30`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BernoulliTable;

impl BernoulliTable {
    pub const LEN: usize = B2K.len();

    /// `B_{2k}`; `None` outside `1..=30`.
    pub fn get(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| B2K.get(i).copied())
    }

    pub fn values(&self) -> &'static [f64] {
        &B2K
    }
}

/// `B_{2k}` for `1 <= k <= 30`.
///
/// # Panics
/// If `k` is out of range.
pub fn bernoulli_b2k(k: usize) -> f64 {
    BernoulliTable
        .get(k)
        .unwrap_or_else(|| panic!("B_2k table holds k in 1..=30, got {k}"))
}

/// `B_n` with the `B_1 = −1/2` convention, `n <= 60`.
pub fn bernoulli_number(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => -0.5,
        _ if n % 2 == 1 => 0.0,
        _ => bernoulli_b2k(n / 2),
    }
}

/// Bernoulli polynomial `B_n(x) = Σ_j C(n, j) B_j x^{n−j}`.
pub fn bernoulli_polynomial(n: usize, x: f64) -> f64 {
    // Horner over descending powers of x
    let mut binom = 1.0;
    let mut coeffs = alloc::vec::Vec::with_capacity(n + 1);
    for j in 0..=n {
        coeffs.push(binom * bernoulli_number(j));
        binom = binom * (n - j) as f64 / (j + 1) as f64;
    }
    // coeffs[j] multiplies x^{n-j}
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_entries() {
        assert_eq!(bernoulli_b2k(1), 1.0 / 6.0);
        assert_eq!(bernoulli_b2k(2), -1.0 / 30.0);
        assert!(BernoulliTable.get(31).is_none());
        assert_eq!(BernoulliTable::LEN, 30);
    }

    #[test]
    fn table_matches_zeta_identity() {
        // B_2k = (-1)^{k+1} 2 (2k)! ζ(2k) / (2π)^{2k}
        for k in 5..=30usize {
            let two_k = 2 * k as i32;
            let zeta: f64 = (1..200).map(|n| libm::pow(n as f64, -(two_k as f64))).sum();
            let mut fact = 1.0;
            for i in 1..=(2 * k) {
                fact *= i as f64;
            }
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let b = sign * 2.0 * fact * zeta / libm::pow(2.0 * core::f64::consts::PI, two_k as f64);
            assert!((b - bernoulli_b2k(k)).abs() <= 1e-14 * b.abs(), "k = {k}");
        }
    }

    #[test]
    fn polynomials() {
        // B_3(x) = x^3 - 3x^2/2 + x/2
        let x = 0.75;
        let b3 = x * x * x - 1.5 * x * x + 0.5 * x;
        assert!((bernoulli_polynomial(3, x) - b3).abs() < 1e-16);
        // symmetry B_n(1 - x) = (-1)^n B_n(x)
        for n in 1..15 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let lhs = bernoulli_polynomial(n, 0.3);
            let rhs = sign * bernoulli_polynomial(n, 0.7);
            assert!((lhs - rhs).abs() < 1e-12, "n = {n}");
        }
        assert_eq!(bernoulli_polynomial(0, 0.4), 1.0);
    }
}
