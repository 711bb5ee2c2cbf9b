//! The finite metacyclic quotient <F, u | F u F^{-1} = u^ell> of the tame
//! local Galois group: elements u^b F^a with a mod r, b mod m, and
//! composition law (a,b)(a',b') = (a+a', b + ell^a b').

use super::TameError;

/// A finite quotient of the tame Galois group at ell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameGroup {
    ell: u64,
    r: u64,
    m: u64,
}

/// An element u^b F^a of a TameGroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TameElt {
    pub a: u64,
    pub b: u64,
}

impl TameGroup {
    pub fn new(ell: u64, r: u64, m: u64) -> Result<TameGroup, TameError> {
        if r == 0 || m == 0 || crate::ff::pow_mod_pub(ell % m.max(1), r, m) != 1 % m {
            return Err(TameError::BadPresentation { ell, r, m });
        }
        Ok(TameGroup { ell, r, m })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn frobenius_order(&self) -> u64 {
        self.r
    }

    pub fn inertia_order(&self) -> u64 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.r * self.m
    }

    pub fn identity(&self) -> TameElt {
        TameElt { a: 0, b: 0 }
    }

    /// The Frobenius generator F.
    pub fn frobenius(&self) -> TameElt {
        TameElt {
            a: 1 % self.r,
            b: 0,
        }
    }

    /// The inertia generator u.
    pub fn inertia_gen(&self) -> TameElt {
        TameElt {
            a: 0,
            b: 1 % self.m,
        }
    }

    pub fn make(&self, a: i64, b: i64) -> TameElt {
        TameElt {
            a: a.rem_euclid(self.r as i64) as u64,
            b: b.rem_euclid(self.m as i64) as u64,
        }
    }

    pub fn mul(&self, x: TameElt, y: TameElt) -> TameElt {
        let shift = crate::ff::pow_mod_pub(self.ell % self.m, x.a, self.m);
        TameElt {
            a: (x.a + y.a) % self.r,
            b: (x.b + (shift as u128 * y.b as u128 % self.m as u128) as u64) % self.m,
        }
    }

    pub fn inv(&self, x: TameElt) -> TameElt {
        // (a, b)^{-1} = (-a, -ell^{-a} b)
        let a_inv = (self.r - x.a) % self.r;
        let shift = crate::ff::pow_mod_pub(self.ell % self.m, a_inv, self.m);
        let b_inv = (self.m - (shift as u128 * x.b as u128 % self.m as u128) as u64) % self.m;
        TameElt { a: a_inv, b: b_inv }
    }

    pub fn pow(&self, x: TameElt, e: i64) -> TameElt {
        let mut acc = self.identity();
        let mut b = if e >= 0 { x } else { self.inv(x) };
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            n >>= 1;
        }
        acc
    }

    pub fn conj(&self, g: TameElt, x: TameElt) -> TameElt {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = TameElt> + '_ {
        (0..self.r).flat_map(move |a| (0..self.m).map(move |b| TameElt { a, b }))
    }
}
