//! Integer polynomials in `v = q - 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::Serialize;

/// A polynomial with integer coefficients; `coeffs[k]` multiplies `v^k`.
///
/// Trailing zero coefficients are never stored, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct VPoly {
    coeffs: Vec<i128>,
}

impl VPoly {
    pub fn zero() -> Self {
        VPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i128) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * v^k`.
    pub fn monomial(c: i128, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        VPoly { coeffs }
    }

    /// `v + 1`, i.e. `q`.
    pub fn q() -> Self {
        Self::from_coeffs(vec![1, 1])
    }

    /// Polynomial given by its coefficients in the basis of powers of `q = v + 1`.
    pub fn from_q_coeffs(qc: &[i128]) -> Self {
        qc.iter().enumerate().fold(Self::zero(), |acc, (k, &c)| acc + Self::q().pow(k as u32) * Self::constant(c))
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Value at `v`.
    pub fn eval_v(&self, v: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * v + c)
    }

    /// Value at `q`, i.e. at `v = q - 1`.
    pub fn eval_q(&self, q: i128) -> i128 {
        self.eval_v(q - 1)
    }

    /// Coefficients in the basis of powers of `q`.
    pub fn q_coeffs(&self) -> Vec<i128> {
        // v^k = (q - 1)^k expanded by the binomial theorem.
        let n = self.coeffs.len();
        let mut out = vec![0i128; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let mut binom: i128 = 1;
            for j in 0..=k {
                let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
                out[j] += c * binom * sign;
                binom = binom * (k - j) as i128 / (j + 1) as i128;
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Every coefficient in `v` is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Render in the variable `var` (`"v"` or `"q"`), highest degree first.
    pub fn render(coeffs: &[i128], var: &str) -> String {
        let mut parts = Vec::new();
        for (k, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => var.to_string(),
                (1, m) => format!("{m}{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, m) => format!("{m}{var}^{k}"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }

    /// Rendering in the `q` basis.
    pub fn to_q_string(&self) -> String {
        Self::render(&self.q_coeffs(), "q")
    }
}

impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Self::render(&self.coeffs, "v"))
    }
}

impl Add for VPoly {
    type Output = VPoly;
    fn add(self, o: VPoly) -> VPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        VPoly::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl AddAssign for VPoly {
    fn add_assign(&mut self, o: VPoly) {
        *self = std::mem::take(self) + o;
    }
}

impl Neg for VPoly {
    type Output = VPoly;
    fn neg(self) -> VPoly {
        VPoly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for VPoly {
    type Output = VPoly;
    fn sub(self, o: VPoly) -> VPoly {
        self + (-o)
    }
}

impl Mul for VPoly {
    type Output = VPoly;
    fn mul(self, o: VPoly) -> VPoly {
        if self.is_zero() || o.is_zero() {
            return VPoly::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        VPoly::from_coeffs(out)
    }
}

impl std::iter::Sum for VPoly {
    fn sum<I: Iterator<Item = VPoly>>(it: I) -> VPoly {
        it.fold(VPoly::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_bases() {
        let p = VPoly::from_coeffs(vec![0, 2, 3, 1]);
        assert_eq!(p.to_string(), "v^3 + 3v^2 + 2v");
        assert_eq!(p.eval_q(5), 64 + 48 + 8);
        assert_eq!(VPoly::from_q_coeffs(&p.q_coeffs()), p);
        assert_eq!(VPoly::q().pow(3).q_coeffs(), vec![0, 0, 0, 1]);
        assert_eq!((VPoly::v() - VPoly::v()), VPoly::zero());
        assert_eq!(VPoly::from_coeffs(vec![1, -1]).to_string(), "-v + 1");
    }
}
