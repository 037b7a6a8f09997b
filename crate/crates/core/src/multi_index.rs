use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Largest qubit count accepted anywhere in the crate.
pub const MAX_QUBITS: usize = 6;

/// Digit string `j_1 ... j_n` over `{0,1,2,3}` naming the product-operator
/// basis element `lambda_{j_1} (x) ... (x) lambda_{j_n}`.
///
/// Linear encoding is big-endian: the first qubit is the most significant
/// base-4 digit. For equal lengths the derived ordering agrees with it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    digits: Vec<u8>,
}

impl MultiIndex {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() || digits.len() > MAX_QUBITS {
            return Err(invalid(format!(
                "multi-index length {} outside 1..={MAX_QUBITS}",
                digits.len()
            )));
        }
        if let Some(d) = digits.iter().find(|&&d| d > 3) {
            return Err(invalid(format!("multi-index digit {d} outside 0..=3")));
        }
        Ok(Self { digits })
    }

    /// The affine index `0...0`.
    pub fn zeros(n: usize) -> Self {
        Self { digits: vec![0; n] }
    }

    pub fn from_linear(linear: usize, n: usize) -> Self {
        debug_assert!(linear < 1 << (2 * n));
        let digits = (0..n)
            .map(|k| ((linear >> (2 * (n - 1 - k))) & 3) as u8)
            .collect();
        Self { digits }
    }

    pub fn linear(&self) -> usize {
        self.digits.iter().fold(0, |acc, &d| (acc << 2) | d as usize)
    }

    /// Number of qubits.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of nonzero digits, i.e. how many qubits the element touches.
    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    pub fn is_affine(&self) -> bool {
        self.weight() == 0
    }

    /// Every multi-index on `n` qubits in linear order.
    pub fn all(n: usize) -> impl Iterator<Item = MultiIndex> {
        (0..1usize << (2 * n)).map(move |l| MultiIndex::from_linear(l, n))
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &MultiIndex) -> MultiIndex {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        MultiIndex { digits }
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(invalid(format!("malformed multi-index {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(digits)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiIndex({self})")
    }
}
