use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{check_cap, Error, Result};

/// Largest `n` accepted by [`inversion_polynomial`]; 12! still fits in a `u64`.
pub const INVERSION_POLYNOMIAL_CAP: usize = 12;

/// `(c_1, ..., c_n)` with `0 <= c_i <= n - i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LehmerCode {
    entries: Vec<usize>,
}

impl LehmerCode {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidLehmerCode("empty".into()));
        }
        for (i, &c) in entries.iter().enumerate() {
            // 0-based position i allows at most n - 1 - i.
            if c > n - 1 - i {
                return Err(Error::InvalidLehmerCode(format!("entry {} is {c}, larger than {}", i + 1, n - 1 - i)));
            }
        }
        Ok(LehmerCode { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Position of the code in the mixed-radix order, equal to the lexicographic rank of
    /// the permutation it encodes.
    pub fn rank(&self) -> u128 {
        let n = self.entries.len();
        self.entries.iter().enumerate().fold(0u128, |acc, (i, &c)| acc * (n - i) as u128 + c as u128)
    }
}

impl TryFrom<Vec<usize>> for LehmerCode {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        LehmerCode::new(v)
    }
}

impl From<LehmerCode> for Vec<usize> {
    fn from(c: LehmerCode) -> Vec<usize> {
        c.entries
    }
}

impl std::fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `c_i` counts the later entries smaller than `π(i)`.
pub fn lehmer_encode(p: &Permutation) -> LehmerCode {
    let v = p.values();
    let entries = (0..v.len()).map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count()).collect();
    LehmerCode { entries }
}

/// Left to right, `τ(i)` is the unused value with exactly `c_i` smaller unused values.
pub fn lehmer_decode(c: &LehmerCode) -> Permutation {
    let n = c.entries.len();
    let mut unused: Vec<usize> = (1..=n).collect();
    let values = c.entries.iter().map(|&ci| unused.remove(ci)).collect();
    Permutation::from_vec_unchecked(values)
}

/// Coefficients of `∏_{j=1}^{n} (1 + q + ... + q^{j-1})`, the inversion-count
/// generating function of S_n.
pub fn inversion_polynomial(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    check_cap("inversion_polynomial", n, INVERSION_POLYNOMIAL_CAP)?;
    let mut coeffs = vec![1u64];
    for j in 2..=n {
        let mut next = vec![0u64; coeffs.len() + j - 1];
        for (d, &c) in coeffs.iter().enumerate() {
            for e in 0..j {
                next[d + e] += c;
            }
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// `a_k^2 >= a_{k-1} a_{k+1}` for every interior `k`.
pub fn is_log_concave(a: &[u64]) -> bool {
    a.windows(3).all(|w| (w[1] as u128) * (w[1] as u128) >= (w[0] as u128) * (w[2] as u128))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let p: Permutation = "37168254".parse().unwrap();
        let c = lehmer_encode(&p);
        assert_eq!(c.entries(), &[2, 5, 0, 3, 3, 0, 1, 0]);
        assert_eq!(lehmer_decode(&c), p);
        assert_eq!(c.to_string(), "(2,5,0,3,3,0,1,0)");
    }

    #[test]
    fn trivial_codes() {
        let id = Permutation::identity(5);
        assert_eq!(lehmer_encode(&id).entries(), &[0; 5]);
        let rev: Permutation = "4321".parse().unwrap();
        assert_eq!(lehmer_encode(&rev).entries(), &[3, 2, 1, 0]);
        assert_eq!(lehmer_decode(&LehmerCode::new(vec![0; 4]).unwrap()), Permutation::identity(4));
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(LehmerCode::new(vec![0, 0, 1]).is_err());
        assert!(LehmerCode::new(vec![3, 0, 0]).is_err());
        assert!(LehmerCode::new(vec![]).is_err());
    }

    #[test]
    fn rank_matches_lexicographic_position() {
        for (r, p) in Permutation::all(5).enumerate() {
            assert_eq!(lehmer_encode(&p).rank(), r as u128);
        }
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(inversion_polynomial(1).unwrap(), vec![1]);
        assert_eq!(inversion_polynomial(3).unwrap(), vec![1, 2, 2, 1]);
        assert!(matches!(inversion_polynomial(13), Err(Error::SizeCap { .. })));
        let p12 = inversion_polynomial(12).unwrap();
        assert_eq!(p12.iter().sum::<u64>(), 479_001_600);
    }
}
