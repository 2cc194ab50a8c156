use crate::ScalarError;

/// The prime field `F_p` for a machine-word prime `p`.
///
/// Residues are plain `u64` values in `0..p`; the context owns the modulus
/// and performs all arithmetic. Copying the context is free, so values and
/// their context travel together without allocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldCtx {
    p: u64,
}

impl PrimeFieldCtx {
    /// Builds the field, verifying that `p` is prime.
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(PrimeFieldCtx { p })
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    /// The modulus.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces an unsigned integer into `0..p`.
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    /// Reduces a signed integer into `0..p`.
    pub fn reduce_i64(&self, a: i64) -> u64 {
        let r = a.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// `a^k` by binary exponentiation.
    pub fn pow(&self, a: u64, mut k: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1u64 % self.p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> Result<u64, ScalarError> {
        if a % self.p == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// Multiplicative order of a nonzero residue.
    pub fn order(&self, a: u64) -> Result<u64, ScalarError> {
        if a % self.p == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let mut x = a % self.p;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }
}

/// Deterministic Miller-Rabin, valid for all `u64`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut a: u64, mut k: u64| {
        let mut acc = 1u64;
        a %= n;
        while k > 0 {
            if k & 1 == 1 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            k >>= 1;
        }
        acc
    };
    // This witness set is deterministic for n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
