//! Divisor counts `d(n)` and divisor power sums `σ_a(n)` from a
//! smallest-prime-factor sieve.

use alloc::vec::Vec;

use crate::numerics::ComplexValue;

/// Smallest prime factor of every `n <= limit`.
#[derive(Debug, Clone)]
pub struct DivisorSieve {
    spf: Vec<u32>,
}

impl DivisorSieve {
    pub fn new(limit: usize) -> Self {
        let limit = limit.max(1);
        let mut spf = alloc::vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        DivisorSieve { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    /// Prime factorisation `[(p, e)]` in increasing `p`; `n` within the limit.
    pub fn factor(&self, mut n: usize) -> Vec<(usize, u32)> {
        assert!(n >= 1 && n <= self.limit(), "{n} outside the sieve");
        let mut out = Vec::new();
        while n > 1 {
            let p = self.spf[n] as usize;
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        out
    }

    /// Number of divisors of `n`.
    pub fn count(&self, n: usize) -> u64 {
        self.factor(n).iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    /// `σ_a(n) = Σ_{d | n} d^a`, by multiplicativity.
    pub fn power_sum(&self, n: usize, a: ComplexValue) -> ComplexValue {
        let mut acc = ComplexValue::new(1.0, 0.0);
        for (p, e) in self.factor(n) {
            let pa = (a * libm::log(p as f64)).exp();
            let mut local = ComplexValue::new(1.0, 0.0);
            let mut power = ComplexValue::new(1.0, 0.0);
            for _ in 0..e {
                power *= pa;
                local += power;
            }
            acc *= local;
        }
        acc
    }
}

/// `d(n)` by trial division, for one-off use.
pub fn divisor_count(n: u64) -> u64 {
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

/// `σ_a(n)` by trial division, for one-off use.
pub fn divisor_power_sum(n: u64, a: ComplexValue) -> ComplexValue {
    let mut acc = ComplexValue::new(0.0, 0.0);
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += (a * libm::log(d as f64)).exp();
            let e = n / d;
            if e != d {
                acc += (a * libm::log(e as f64)).exp();
            }
        }
        d += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let s = DivisorSieve::new(100);
        assert_eq!(s.count(1), 1);
        assert_eq!(s.count(12), 6);
        assert_eq!(s.count(97), 2);
        assert_eq!(s.factor(72), alloc::vec![(2, 3), (3, 2)]);
        let sigma1 = s.power_sum(12, ComplexValue::new(1.0, 0.0));
        assert!((sigma1.re - 28.0).abs() < 1e-12);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let s = DivisorSieve::new(500);
        let a = ComplexValue::new(0.5, -0.3);
        for n in 1..=500u64 {
            assert_eq!(s.count(n as usize), divisor_count(n));
            let d = s.power_sum(n as usize, a) - divisor_power_sum(n, a);
            assert!(d.norm() < 1e-12 * divisor_power_sum(n, a).norm());
        }
    }
}
