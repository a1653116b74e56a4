//! Prime field arithmetic and sparse column kernels.

use crate::error::{Error, Result};

/// The prime field F_p. Elements are stored as `u32` in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: 2 }
    }
}

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64).any(|d| p % d == 0) {
            return Err(Error::NotPrime(p));
        }
        // products must fit in u64 and p - 1 must fit in u32
        Ok(Field { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        if self.p == 2 {
            return 1;
        }
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduce a signed integer into the field.
    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// The scalar `c` with `a + c * b = 0`.
    #[inline]
    pub fn elim_factor(self, a: u32, b: u32) -> u32 {
        self.neg(self.mul(a, self.inv(b)))
    }
}

/// A sparse column: `(row, value)` pairs sorted by row, values nonzero.
pub type Column = Vec<(u32, u32)>;

/// `target += alpha * src`, keeping `target` sorted and free of zeros.
pub fn axpy(field: Field, target: &mut Column, alpha: u32, src: &[(u32, u32)]) {
    if alpha == 0 || src.is_empty() {
        return;
    }
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() && j < src.len() {
        let (ra, va) = target[i];
        let (rb, vb) = src[j];
        if ra < rb {
            out.push((ra, va));
            i += 1;
        } else if rb < ra {
            out.push((rb, field.mul(alpha, vb)));
            j += 1;
        } else {
            let v = field.add(va, field.mul(alpha, vb));
            if v != 0 {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&target[i..]);
    out.extend(src[j..].iter().map(|&(r, v)| (r, field.mul(alpha, v))));
    *target = out;
}

/// Multiply every entry by a nonzero scalar.
pub fn scale(field: Field, col: &mut Column, alpha: u32) {
    for e in col.iter_mut() {
        e.1 = field.mul(e.1, alpha);
    }
}

/// Value stored at `row`, or 0.
pub fn entry(col: &[(u32, u32)], row: u32) -> u32 {
    col.binary_search_by_key(&row, |e| e.0)
        .map(|i| col[i].1)
        .unwrap_or(0)
}

/// Dense accumulator used when summing many sparse columns.
pub(crate) struct Accumulator {
    values: Vec<u32>,
    touched: Vec<u32>,
}

impl Accumulator {
    pub fn new(n: usize) -> Self {
        Accumulator {
            values: vec![0; n],
            touched: Vec::new(),
        }
    }

    pub fn add(&mut self, field: Field, row: u32, v: u32) {
        let slot = &mut self.values[row as usize];
        if *slot == 0 {
            self.touched.push(row);
        }
        *slot = field.add(*slot, v);
    }

    pub fn add_scaled(&mut self, field: Field, alpha: u32, col: &[(u32, u32)]) {
        for &(r, v) in col {
            self.add(field, r, field.mul(alpha, v));
        }
    }

    /// Drain into a sorted sparse column and reset.
    pub fn drain(&mut self) -> Column {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut out = Vec::with_capacity(self.touched.len());
        for &r in &self.touched {
            let v = std::mem::take(&mut self.values[r as usize]);
            if v != 0 {
                out.push((r, v));
            }
        }
        self.touched.clear();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(7).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 101] {
            let f = Field::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn axpy_cancels() {
        let f = Field::new(3).unwrap();
        let mut a = vec![(0, 1), (2, 2)];
        axpy(f, &mut a, 1, &[(0, 2), (1, 1)]);
        assert_eq!(a, vec![(1, 1), (2, 2)]);
    }
}
