use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Polynomial in the power basis; `coeffs[k]` multiplies `x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StandardPolynomial {
    #[serde(serialize_with = "crate::report::ser_bigint_vec")]
    coeffs: Vec<BigInt>,
}

impl StandardPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `x^n`, the chromatic polynomial of `O_n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        Self::new(c)
    }

    /// `x(x−1)…(x−n+1)`, the chromatic polynomial of `K_n`.
    pub fn falling_factorial(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, k| acc.mul_linear(k as i64))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Multiplies by `(x − k)`.
    pub fn mul_linear(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * &k;
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    /// `Q(x) = P(x − 1)`.
    pub fn shift_down(&self) -> Self {
        // Horner in the shifted variable.
        let mut out = Self::new(vec![BigInt::zero()]);
        for c in self.coeffs.iter().rev() {
            out = out.mul_linear(1).add(&Self::new(vec![c.clone()]));
        }
        out
    }

    /// Converts to the falling-factorial basis using `x^k = Σ_i S(k,i) x^{(i)}`.
    pub fn to_factorial(&self) -> FactorialPolynomial {
        let n = self.degree();
        let s2 = stirling2_table(n);
        let coeffs: Vec<BigInt> = (0..=n)
            .map(|i| (i..=n).map(|k| &self.coeffs[k] * &s2[k][i]).sum::<BigInt>())
            .collect();
        FactorialPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for StandardPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let show_mag = !(mag.is_one() && k > 0);
            match (show_mag, k) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}x")?,
                (true, _) => write!(f, "{mag}x^{k}")?,
                (false, 1) => f.write_str("x")?,
                (false, _) => write!(f, "x^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Coefficients in the falling-factorial basis: `P(G, x) = Σ pt(G,i) x^{(i)}`.
///
/// For a chromatic polynomial `pt(G,i)` counts partitions of `V(G)` into `i`
/// independent sets; `chi` is the least index with a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorialPolynomial {
    #[serde(serialize_with = "crate::report::ser_bigint_vec")]
    coeffs: Vec<BigInt>,
    chi: usize,
    n: usize,
}

impl FactorialPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        let n = coeffs.len() - 1;
        let chi = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        Self { coeffs, chi, n }
    }

    pub fn chi(&self) -> usize {
        self.chi
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `pt(G, i)`; zero outside `χ..=n`.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `pt(G) = pt(G, χ + 1)`.
    pub fn pt(&self) -> BigInt {
        self.coeff(self.chi + 1)
    }

    /// Converts back using `x^{(i)} = Σ_k s(i,k) x^k` with signed Stirling numbers of the first kind.
    pub fn to_standard(&self) -> StandardPolynomial {
        let n = self.n;
        let s1 = stirling1_signed_table(n);
        let coeffs = (0..=n)
            .map(|k| (k..=n).map(|i| &self.coeffs[i] * &s1[i][k]).sum::<BigInt>())
            .collect();
        StandardPolynomial::new(coeffs)
    }
}

/// `S(k, i)` for `0 ≤ i ≤ k ≤ n`.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for k in 1..=n {
        for i in 1..=k {
            s[k][i] = BigInt::from(i) * &s[k - 1][i] + &s[k - 1][i - 1];
        }
    }
    s
}

/// Signed `s(i, k)`: coefficient of `x^k` in `x^{(i)}`.
pub fn stirling1_signed_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = &s[i - 1][k - 1] - BigInt::from(i - 1) * &s[i - 1][k];
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(c: &[i64]) -> StandardPolynomial {
        StandardPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn falling_factorial_of_three() {
        assert_eq!(StandardPolynomial::falling_factorial(3), sp(&[0, 2, -3, 1]));
        assert_eq!(StandardPolynomial::falling_factorial(3).to_string(), "x^3 - 3x^2 + 2x");
    }

    #[test]
    fn stirling_second_kind_row() {
        let s = stirling2_table(4);
        let row: Vec<i64> = (0..=4).map(|i| i64::try_from(&s[4][i]).unwrap()).collect();
        assert_eq!(row, [0, 1, 7, 6, 1]);
    }

    #[test]
    fn basis_round_trip() {
        for c in [&[0i64, -3, 6, -4, 1][..], &[0, 0, 0, 1], &[5, -2, 7, 0, 3, 1]] {
            let p = sp(c);
            assert_eq!(p.to_factorial().to_standard(), p);
        }
        // x^3 = x^(3) + 3 x^(2) + x^(1)
        let f = StandardPolynomial::monomial(3).to_factorial();
        assert_eq!(f.coeffs(), &[0, 1, 3, 1].map(BigInt::from));
        assert_eq!(f.chi(), 1);
        assert_eq!(f.pt(), BigInt::from(3));
    }

    #[test]
    fn shift_and_eval() {
        let p = sp(&[1, 2, 1]); // (x+1)^2
        assert_eq!(p.shift_down(), sp(&[0, 0, 1]));
        assert_eq!(p.eval(3), BigInt::from(16));
        assert_eq!(sp(&[0, 1]).mul(&sp(&[-1, 1])), sp(&[0, -1, 1]));
    }
}
