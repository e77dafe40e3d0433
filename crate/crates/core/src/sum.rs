use num_complex::Complex64;

/// Neumaier-compensated accumulator. Summation order is the caller's order,
/// so results are reproducible for a fixed sequence of inputs.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
    abs: f64,
}

impl KahanSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += libm::fabs(x);
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Sum of magnitudes seen so far, used for rounding-error estimates.
    pub(crate) fn magnitude(&self) -> f64 {
        self.abs
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct ComplexSum {
    re: KahanSum,
    im: KahanSum,
}

impl ComplexSum {
    pub(crate) fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub(crate) fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    pub(crate) fn magnitude(&self) -> f64 {
        self.re.magnitude() + self.im.magnitude()
    }
}
