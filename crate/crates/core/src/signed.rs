//! Signed permutations, viewed as elements of the hyperoctahedral group `H_n`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::insertion::InsertionTriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// An element of `H_n`, stored by position: entry `k` (1-based) holds
/// `(sigma_k, epsilon_k)`. As a set of triples this is
/// `{(sigma_k, k, epsilon_k)}`; in one-line notation it is
/// `(epsilon_1 sigma_1, ..., epsilon_n sigma_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    entries: Vec<(u32, Sign)>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { entries: (1..=n as u32).map(|v| (v, Sign::Plus)).collect() }
    }

    /// Builds from `(value, sign)` entries, checking that the values form a
    /// permutation of `1..=n`.
    pub fn new(entries: Vec<(u32, Sign)>) -> Result<Self> {
        let n = entries.len();
        let mut seen = alloc::vec![false; n];
        for &(v, _) in &entries {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation("value out of range 1..=n"));
            }
            if core::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::InvalidPermutation("repeated value"));
            }
        }
        Ok(SignedPermutation { entries })
    }

    /// Builds from one-line notation such as `[2, -4, -3, 1]`.
    pub fn from_window(window: &[i32]) -> Result<Self> {
        let entries = window
            .iter()
            .map(|&x| {
                if x == 0 {
                    return Err(Error::InvalidPermutation("zero entry"));
                }
                let sign = if x > 0 { Sign::Plus } else { Sign::Minus };
                Ok((x.unsigned_abs(), sign))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(entries)
    }

    /// Builds from a set of triples `(value, position, sign)` in any order.
    pub fn from_triples(triples: &[InsertionTriple]) -> Result<Self> {
        let n = triples.len();
        let mut entries: Vec<Option<(u32, Sign)>> = alloc::vec![None; n];
        for t in triples {
            let slot = (t.position as usize)
                .checked_sub(1)
                .and_then(|i| entries.get_mut(i))
                .ok_or(Error::InvalidPermutation("position out of range 1..=n"))?;
            if slot.replace((t.value, t.sign)).is_some() {
                return Err(Error::InvalidPermutation("repeated position"));
            }
        }
        SignedPermutation::new(entries.into_iter().map(Option::unwrap).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(u32, Sign)] {
        &self.entries
    }

    /// One-line notation.
    pub fn window(&self) -> Vec<i32> {
        self.entries.iter().map(|&(v, s)| v as i32 * s.as_i32()).collect()
    }

    /// The triple `(sigma_k, k, epsilon_k)` for each position `k`, in order.
    pub fn triples(&self) -> impl Iterator<Item = InsertionTriple> + '_ {
        self.entries.iter().zip(1..).map(|(&(value, sign), position)| InsertionTriple {
            value,
            position,
            sign,
        })
    }

    /// Group inverse: each triple `(i, j, e)` becomes `(j, i, e)`.
    pub fn inverse(&self) -> Self {
        let mut entries = alloc::vec![(0, Sign::Plus); self.len()];
        for (k, &(v, s)) in self.entries.iter().enumerate() {
            entries[v as usize - 1] = (k as u32 + 1, s);
        }
        SignedPermutation { entries }
    }

    pub fn is_involution(&self) -> bool {
        self.inverse() == *self
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.window().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

pub fn invert(sigma: &SignedPermutation) -> SignedPermutation {
    sigma.inverse()
}

/// Every element of `H_n` exactly once: permutations in lexicographic order,
/// and for each one all `2^n` sign patterns.
pub fn enumerate_hyperoctahedral(n: usize) -> Hyperoctahedral {
    Hyperoctahedral { perm: Some((1..=n as u32).collect()), mask: 0, n }
}

pub struct Hyperoctahedral {
    perm: Option<Vec<u32>>,
    mask: u64,
    n: usize,
}

impl Iterator for Hyperoctahedral {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let perm = self.perm.as_mut()?;
        let entries = perm
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let sign = if self.mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus };
                (v, sign)
            })
            .collect();
        self.mask += 1;
        if self.mask == 1 << self.n {
            self.mask = 0;
            if !next_permutation(perm) {
                self.perm = None;
            }
        }
        Some(SignedPermutation { entries })
    }
}

fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
