//! Small floating-point toolbox shared by the evaluators.

/// `x^a` in 64-bit floating point. All bases used by the index sums are
/// `>= 1`, and `libm::pow` is exact at `a = 0` and `a = 1`, which the
/// integer cross-checks rely on.
#[inline]
pub(crate) fn pow(x: f64, a: f64) -> f64 {
    libm::pow(x, a)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn cbrt(x: f64) -> f64 {
    libm::cbrt(x)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// Streaming Neumaier-compensated accumulator; `value()` may be read after
/// every `add`, which the prefix-sum comparisons rely on.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct NeumaierAcc {
    sum: f64,
    comp: f64,
}

impl NeumaierAcc {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub(crate) fn add(&mut self, t: f64) {
        let s = self.sum + t;
        if abs(self.sum) >= abs(t) {
            self.comp += (self.sum - s) + t;
        } else {
            self.comp += (t - s) + self.sum;
        }
        self.sum = s;
    }

    #[inline]
    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Neumaier-compensated sum. The index sums mix magnitudes up to
/// `(n/2)^(2α)` with unit terms; plain accumulation would not reach the
/// 1e-9 relative agreement the closed-form cross-checks demand.
pub(crate) fn neumaier_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut acc = NeumaierAcc::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neumaier_handles_mixed_magnitudes() {
        // 1e16 + 1 + ... + 1 - 1e16 with naive f64 loses the units
        let mut terms = alloc::vec![1e16];
        terms.extend(core::iter::repeat(1.0).take(1000));
        terms.push(-1e16);
        assert_eq!(neumaier_sum(terms), 1000.0);
    }

    #[test]
    fn pow_is_exact_at_integer_like_exponents() {
        assert_eq!(pow(625.0, 0.25), 5.0);
        assert_eq!(pow(81.0, 0.25), 3.0);
        assert_eq!(pow(7.0, 1.0), 7.0);
        assert_eq!(pow(42722.0, 0.0), 1.0);
    }
}
