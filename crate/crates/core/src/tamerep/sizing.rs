//! Minimal sizing of the finite objects: which extension degree d the
//! coefficient field needs, and which (r, m) make the tame quotient large
//! enough to carry every character and parameter in play.
//!
//! Rules: t: I -> F_p needs p | m; a character value of order n on
//! inertia needs n | m; the tame law needs ell^r = 1 mod m; every
//! Frobenius image must have order dividing r (with a factor for the
//! coset permutation inside inductions).

use super::chars::SymChar;
use super::group::TameGroup;
use super::rep::SqrtChoice;
use super::TameError;
use crate::ff::{lcm, order_mod, ExtField};

#[derive(Debug, Clone)]
pub struct Sizing {
    ell: u64,
    p: u64,
    root_orders: Vec<u64>,
    needs_sqrt: bool,
    inertia_spans: Vec<u64>,
    needs_tau: bool,
    even_r: bool,
    even_m: bool,
    /// (character, multiplier): the in-field order of the Frobenius value,
    /// times the multiplier, must divide r.
    frob_scalars: Vec<(SymChar, u64)>,
}

impl Sizing {
    pub fn new(ell: u64, p: u64) -> Sizing {
        Sizing {
            ell,
            p,
            root_orders: Vec::new(),
            needs_sqrt: false,
            inertia_spans: Vec::new(),
            needs_tau: false,
            even_r: false,
            even_m: false,
            frob_scalars: Vec::new(),
        }
    }

    /// Register a character of the full tame group.
    pub fn add_char(&mut self, chi: &SymChar) -> &mut Sizing {
        self.add_char_with_multiplier(chi, 1, 1)
    }

    /// Register a character whose Frobenius image sits inside an induction
    /// with the given coset factors.
    ///
    /// In an induction the Frobenius-image entries are values v_F^x v_u^y,
    /// so the inertia root's in-field order must divide r as well; it is
    /// registered as an unramified scalar with the same multiplier.
    pub fn add_char_with_multiplier(
        &mut self,
        chi: &SymChar,
        frob_mult: u64,
        inertia_mult: u64,
    ) -> &mut Sizing {
        self.root_orders.extend(chi.required_root_orders());
        self.needs_sqrt |= chi.needs_sqrt();
        if chi.inertia_order() > 1 {
            self.inertia_spans.push(chi.inertia_order() * inertia_mult);
        } else if inertia_mult > 1 {
            self.inertia_spans.push(inertia_mult);
        }
        self.frob_scalars.push((*chi, frob_mult));
        if frob_mult > 1 && chi.inertia_order() > 1 {
            let inertia_root = SymChar::unramified(chi.ell(), chi.inertia_order(), 1);
            self.frob_scalars.push((inertia_root, frob_mult));
        }
        self
    }

    /// An additive Steinberg parameter t is in play (forces p | m and the
    /// square root of ell for the half-integral weights).
    pub fn add_steinberg(&mut self) -> &mut Sizing {
        self.needs_tau = true;
        self.needs_sqrt = true;
        self.frob_scalars
            .push((super::chars::nu_half_power(self.ell, 1), 1));
        self
    }

    pub fn require_sqrt(&mut self) -> &mut Sizing {
        self.needs_sqrt = true;
        self.frob_scalars
            .push((super::chars::nu_half_power(self.ell, 1), 1));
        self
    }

    pub fn require_root(&mut self, n: u64) -> &mut Sizing {
        if n > 1 {
            self.root_orders.push(n);
        }
        self
    }

    /// Index-2 or index-4 subgroups need even exponents available.
    pub fn require_even_r(&mut self) -> &mut Sizing {
        self.even_r = true;
        self
    }

    pub fn require_even_m(&mut self) -> &mut Sizing {
        self.even_m = true;
        self
    }

    pub fn build(&self) -> Result<(ExtField, TameGroup), TameError> {
        let (ell, p) = (self.ell, self.p);
        assert_ne!(ell, p, "residual and coefficient primes must differ");
        // extension degree: realize every root of unity and sqrt(ell)
        let mut d: u64 = 1;
        for &n in &self.root_orders {
            if n % p == 0 {
                return Err(TameError::RootUnrealizable { p, d: 0, n });
            }
            d = lcm(d, order_mod(p % n, n));
        }
        if self.needs_sqrt && p != 2 {
            let legendre = crate::ff::pow_mod_pub(ell % p, (p - 1) / 2, p);
            if legendre != 1 {
                d = lcm(d, 2);
            }
        }
        let field = ExtField::new(p, d as usize)?;
        // inertia order m
        let mut m: u64 = 1;
        if self.needs_tau {
            m = lcm(m, p);
        }
        for &n in &self.inertia_spans {
            m = lcm(m, n);
        }
        if self.even_m {
            m = lcm(m, 2);
        }
        // Frobenius order r
        let mut r = if m == 1 { 1 } else { order_mod(ell % m, m) };
        if self.even_r {
            r = lcm(r, 2);
        }
        for (chi, mult) in &self.frob_scalars {
            for choice in SqrtChoice::both() {
                if chi.needs_sqrt() || choice == SqrtChoice::Plus {
                    let v = chi.eval_frobenius(&field, choice)?;
                    if !v.is_zero() {
                        r = lcm(r, v.mult_order().map_err(TameError::Field)? * mult);
                    }
                }
            }
        }
        let group = TameGroup::new(ell, r, m)?;
        Ok((field, group))
    }
}

/// Convenience: the minimal field and group carrying the given characters,
/// optionally with a Steinberg parameter.
pub fn group_for(
    ell: u64,
    p: u64,
    chars: &[SymChar],
    steinberg: bool,
) -> Result<(ExtField, TameGroup), TameError> {
    let mut s = Sizing::new(ell, p);
    for c in chars {
        s.add_char(c);
    }
    if steinberg {
        s.add_steinberg();
    }
    s.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tamerep::chars::{nu_half_power, SymChar};

    #[test]
    fn sizing_for_plain_steinberg() {
        let (field, group) = group_for(3, 5, &[], true).unwrap();
        // sqrt(3) mod 5: 3 is a non-residue (3^2=4): degree 2
        assert_eq!(field.degree(), 2);
        assert_eq!(group.inertia_order(), 5);
        // s has order dividing r; ell^r = 1 mod m
        assert_eq!(
            crate::ff::pow_mod_pub(
                3 % group.inertia_order(),
                group.frobenius_order(),
                group.inertia_order()
            ),
            1
        );
    }

    #[test]
    fn sizing_with_ramified_character() {
        let chi = SymChar::ramified(5, 2, 1); // quadratic ramified, 2 | ell-1
        let (_, group) = group_for(5, 7, &[chi], true).unwrap();
        assert_eq!(group.inertia_order() % 14, 0); // p * 2
    }

    #[test]
    fn sizing_realizes_frobenius_orders() {
        let chi = SymChar::unramified(7, 3, 1);
        let (field, group) = group_for(7, 13, &[chi, nu_half_power(7, 1)], false).unwrap();
        let v = chi
            .eval_frobenius(&field, crate::tamerep::SqrtChoice::Plus)
            .unwrap();
        assert_eq!(group.frobenius_order() % v.mult_order().unwrap(), 0);
    }
}
