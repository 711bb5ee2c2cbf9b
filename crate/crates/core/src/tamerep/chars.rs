//! Symbolic local characters: a finite-order part (roots of unity on
//! Frobenius and on inertia) times a half-integral power of the
//! cyclotomic character nu.
//!
//! A SymChar with data (n_f, j, e, n_i, k) sends
//!     F  |->  zeta_{n_f}^j * ell^e        (e a half-integer),
//!     u  |->  zeta_{n_i}^k,
//! and is evaluated in a concrete field through the fixed compatible
//! system of roots of unity and a chosen square root of ell.

use std::fmt;

use super::group::{TameElt, TameGroup};
use super::rep::SqrtChoice;
use super::TameError;
use crate::ff::{gcd, lcm, ExtField, FqElem};

/// A root of unity zeta_n^j in normalized form (gcd(j, n) = 1, or (1, 0)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Root {
    pub order: u64,
    pub exp: u64,
}

impl Root {
    pub fn one() -> Root {
        Root { order: 1, exp: 0 }
    }

    pub fn new(order: u64, exp: i64) -> Root {
        assert!(order >= 1);
        let e = exp.rem_euclid(order as i64) as u64;
        if e == 0 {
            return Root::one();
        }
        let g = gcd(e, order);
        Root {
            order: order / g,
            exp: e / g,
        }
    }

    pub fn mul(self, other: Root) -> Root {
        let n = lcm(self.order, other.order);
        let j = (self.exp as u128 * (n / self.order) as u128
            + other.exp as u128 * (n / other.order) as u128)
            % n as u128;
        Root::new(n, j as i64)
    }

    pub fn pow(self, k: i64) -> Root {
        let e = (self.exp as i128 * k as i128).rem_euclid(self.order as i128);
        Root::new(self.order, e as i64)
    }

    pub fn inv(self) -> Root {
        self.pow(-1)
    }

    pub fn is_one(self) -> bool {
        self.order == 1
    }

    /// Evaluate through the field's compatible system of roots of unity.
    pub fn eval(self, field: &ExtField) -> Result<FqElem, TameError> {
        if self.is_one() {
            return Ok(field.one());
        }
        let z = field
            .root_of_unity(self.order)
            .map_err(|_| TameError::RootUnrealizable {
                p: field.characteristic(),
                d: field.degree(),
                n: self.order,
            })?;
        Ok(z.pow(self.exp))
    }
}

/// A symbolic character of the tame group at ell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymChar {
    ell: u64,
    frob: Root,
    /// Power of nu as a half-integer: the exponent is cyclo_num / 2.
    cyclo_num: i64,
    inertia: Root,
}

/// The trivial character.
pub fn trivial_char(ell: u64) -> SymChar {
    SymChar {
        ell,
        frob: Root::one(),
        cyclo_num: 0,
        inertia: Root::one(),
    }
}

/// The mod-p cyclotomic character nu: unramified, F |-> ell.
pub fn nu(ell: u64) -> SymChar {
    nu_half_power(ell, 2)
}

/// nu^{num/2}.
pub fn nu_half_power(ell: u64, num: i64) -> SymChar {
    SymChar {
        ell,
        frob: Root::one(),
        cyclo_num: num,
        inertia: Root::one(),
    }
}

impl SymChar {
    pub fn new(
        ell: u64,
        frob_order: u64,
        frob_exp: i64,
        cyclo_num: i64,
        inertia_order: u64,
        inertia_exp: i64,
    ) -> SymChar {
        SymChar {
            ell,
            frob: Root::new(frob_order, frob_exp),
            cyclo_num,
            inertia: Root::new(inertia_order, inertia_exp),
        }
    }

    /// Unramified with finite Frobenius part zeta_n^j.
    pub fn unramified(ell: u64, order: u64, exp: i64) -> SymChar {
        SymChar::new(ell, order, exp, 0, 1, 0)
    }

    /// Tamely ramified with trivial Frobenius part.
    pub fn ramified(ell: u64, order: u64, exp: i64) -> SymChar {
        SymChar::new(ell, 1, 0, 0, order, exp)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn frob_order(&self) -> u64 {
        self.frob.order
    }

    pub fn frob_exp(&self) -> u64 {
        self.frob.exp
    }

    pub fn cyclo_num(&self) -> i64 {
        self.cyclo_num
    }

    pub fn inertia_order(&self) -> u64 {
        self.inertia.order
    }

    pub fn inertia_exp(&self) -> u64 {
        self.inertia.exp
    }

    pub fn mul(&self, other: &SymChar) -> SymChar {
        assert_eq!(self.ell, other.ell, "characters at different primes");
        SymChar {
            ell: self.ell,
            frob: self.frob.mul(other.frob),
            cyclo_num: self.cyclo_num + other.cyclo_num,
            inertia: self.inertia.mul(other.inertia),
        }
    }

    pub fn inv(&self) -> SymChar {
        SymChar {
            ell: self.ell,
            frob: self.frob.inv(),
            cyclo_num: -self.cyclo_num,
            inertia: self.inertia.inv(),
        }
    }

    pub fn pow(&self, k: i64) -> SymChar {
        SymChar {
            ell: self.ell,
            frob: self.frob.pow(k),
            cyclo_num: self.cyclo_num * k,
            inertia: self.inertia.pow(k),
        }
    }

    pub fn ratio(&self, other: &SymChar) -> SymChar {
        self.mul(&other.inv())
    }

    /// Symbolic triviality (as a characteristic-zero character).
    pub fn is_trivial_symbolic(&self) -> bool {
        self.frob.is_one() && self.cyclo_num == 0 && self.inertia.is_one()
    }

    pub fn is_unramified(&self) -> bool {
        self.inertia.is_one()
    }

    /// Orders of roots of unity a field must carry to evaluate this character.
    pub fn required_root_orders(&self) -> Vec<u64> {
        let mut v = Vec::new();
        if self.frob.order > 1 {
            v.push(self.frob.order);
        }
        if self.inertia.order > 1 {
            v.push(self.inertia.order);
        }
        v
    }

    pub fn needs_sqrt(&self) -> bool {
        self.cyclo_num.rem_euclid(2) == 1
    }

    /// Whether this is a homomorphism on the full tame group at ell
    /// (the inertia order must divide ell - 1).
    pub fn is_homomorphism(&self) -> bool {
        self.inertia.is_one() || (self.ell - 1) % self.inertia.order == 0
    }

    /// Value on the Frobenius generator.
    pub fn eval_frobenius(
        &self,
        field: &ExtField,
        sqrt_choice: SqrtChoice,
    ) -> Result<FqElem, TameError> {
        let zeta = self.frob.eval(field)?;
        let cyc = eval_ell_half_power(field, self.ell, self.cyclo_num, sqrt_choice)?;
        Ok(&zeta * &cyc)
    }

    /// Value on the inertia generator.
    pub fn eval_inertia(&self, field: &ExtField) -> Result<FqElem, TameError> {
        self.inertia.eval(field)
    }

    /// Value at an arbitrary element u^b F^a.
    pub fn eval(
        &self,
        field: &ExtField,
        group: &TameGroup,
        elt: TameElt,
        sqrt_choice: SqrtChoice,
    ) -> Result<FqElem, TameError> {
        if !self.is_homomorphism() {
            return Err(TameError::NotHomomorphism {
                n_i: self.inertia.order,
                bound: self.ell - 1,
            });
        }
        if group.inertia_order() % self.inertia.order != 0 {
            return Err(TameError::NotHomomorphism {
                n_i: self.inertia.order,
                bound: group.inertia_order(),
            });
        }
        debug_assert_eq!(group.ell(), self.ell);
        let vf = self.eval_frobenius(field, sqrt_choice)?;
        let vu = self.eval_inertia(field)?;
        Ok(&vu.pow(elt.b) * &vf.pow(elt.a))
    }
}

/// ell^{num/2} in the field, via the chosen square root when num is odd.
pub(crate) fn eval_ell_half_power(
    field: &ExtField,
    ell: u64,
    num: i64,
    sqrt_choice: SqrtChoice,
) -> Result<FqElem, TameError> {
    if num == 0 {
        return Ok(field.one());
    }
    if num.rem_euclid(2) == 0 {
        let base = field.from_u64(ell % field.characteristic());
        return Ok(base.pow_i(num / 2)?);
    }
    let s = sqrt_of_ell(field, ell, sqrt_choice)?;
    Ok(s.pow_i(num)?)
}

/// The chosen square root of ell in the field (Plus = first in the fixed
/// enumeration order, Minus = the other).
pub(crate) fn sqrt_of_ell(
    field: &ExtField,
    ell: u64,
    choice: SqrtChoice,
) -> Result<FqElem, TameError> {
    let target = field.from_u64(ell % field.characteristic());
    let roots = field.sqrt_candidates(&target);
    match (roots.len(), choice) {
        (2, SqrtChoice::Plus) => Ok(roots[0].clone()),
        (2, SqrtChoice::Minus) => Ok(roots[1].clone()),
        _ => Err(TameError::NoSquareRoot {
            what: format!("{} mod {}", ell, field.characteristic()),
        }),
    }
}

impl fmt::Display for SymChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.frob.is_one() {
            if self.frob.exp == 1 {
                parts.push(format!("z{}", self.frob.order));
            } else {
                parts.push(format!("z{}^{}", self.frob.order, self.frob.exp));
            }
        }
        if self.cyclo_num != 0 {
            if self.cyclo_num % 2 == 0 {
                let e = self.cyclo_num / 2;
                if e == 1 {
                    parts.push("nu".into());
                } else {
                    parts.push(format!("nu^{e}"));
                }
            } else {
                parts.push(format!("nu^({}/2)", self.cyclo_num));
            }
        }
        if !self.inertia.is_one() {
            if self.inertia.exp == 1 {
                parts.push(format!("t{}", self.inertia.order));
            } else {
                parts.push(format!("t{}^{}", self.inertia.order, self.inertia.exp));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_normalization() {
        assert_eq!(Root::new(4, 2), Root::new(2, 1));
        assert_eq!(Root::new(6, 4), Root::new(3, 2));
        assert_eq!(Root::new(5, 0), Root::one());
        assert_eq!(Root::new(4, -1), Root::new(4, 3));
    }

    #[test]
    fn root_multiplication_is_compatible() {
        // zeta_4 * zeta_4 = zeta_2
        assert_eq!(Root::new(4, 1).mul(Root::new(4, 1)), Root::new(2, 1));
        // zeta_2 * zeta_3 = zeta_6^5
        assert_eq!(Root::new(2, 1).mul(Root::new(3, 1)), Root::new(6, 5));
    }

    #[test]
    fn root_eval_matches_field_system() {
        let f13 = ExtField::new(13, 1).unwrap();
        let z12 = f13.root_of_unity(12).unwrap();
        assert_eq!(Root::new(12, 5).eval(&f13).unwrap(), z12.pow(5));
        assert_eq!(
            Root::new(6, 1).eval(&f13).unwrap(),
            f13.root_of_unity(6).unwrap()
        );
        assert!(Root::new(5, 1).eval(&f13).is_err()); // 5 does not divide 12
    }

    #[test]
    fn trivial_char_evaluates_to_one() {
        let f = ExtField::new(7, 1).unwrap();
        let g = TameGroup::new(3, 6, 7).unwrap(); // 3^6 = 729 = 104*7+1
        let chi = trivial_char(3);
        for e in g.elements() {
            assert_eq!(chi.eval(&f, &g, e, SqrtChoice::Plus).unwrap(), f.one());
        }
    }

    #[test]
    fn nu_at_frobenius_is_ell() {
        let f = ExtField::new(7, 1).unwrap();
        let chi = nu(3);
        assert_eq!(
            chi.eval_frobenius(&f, SqrtChoice::Plus).unwrap(),
            f.from_u64(3)
        );
    }

    #[test]
    fn nu_half_at_frobenius_is_sqrt_of_ell() {
        // sqrt(2) mod 7: {3, 4}
        let f = ExtField::new(7, 1).unwrap();
        let chi = nu_half_power(2, 1);
        let plus = chi.eval_frobenius(&f, SqrtChoice::Plus).unwrap();
        let minus = chi.eval_frobenius(&f, SqrtChoice::Minus).unwrap();
        assert_eq!(plus, f.from_u64(3));
        assert_eq!(minus, f.from_u64(4));
    }

    #[test]
    fn char_eval_is_multiplicative() {
        let chi = SymChar::new(3, 4, 1, 1, 2, 1);
        assert!(chi.is_homomorphism());
        let (f, g) = crate::tamerep::sizing::group_for(3, 7, &[chi], false).unwrap();
        let els: Vec<_> = g.elements().collect();
        for &x in &els {
            for &y in &els {
                let vx = chi.eval(&f, &g, x, SqrtChoice::Plus).unwrap();
                let vy = chi.eval(&f, &g, y, SqrtChoice::Plus).unwrap();
                let vxy = chi.eval(&f, &g, g.mul(x, y), SqrtChoice::Plus).unwrap();
                assert_eq!(&vx * &vy, vxy);
            }
        }
    }

    #[test]
    fn non_homomorphism_detected() {
        // inertia order 5 does not divide ell - 1 = 2
        let chi = SymChar::ramified(3, 5, 1);
        assert!(!chi.is_homomorphism());
        let f = ExtField::new(11, 1).unwrap();
        let g = TameGroup::new(3, 5, 11).unwrap(); // 3^5 = 243 = 22*11+1
        assert!(chi.eval(&f, &g, g.inertia_gen(), SqrtChoice::Plus).is_err());
    }

    #[test]
    fn symchar_algebra() {
        let a = SymChar::new(5, 3, 1, 1, 2, 1);
        let b = SymChar::new(5, 3, 2, -1, 2, 1);
        let ab = a.mul(&b);
        assert_eq!(ab.frob_order(), 1);
        assert_eq!(ab.cyclo_num(), 0);
        assert_eq!(ab.inertia_order(), 1);
        assert!(a.mul(&a.inv()).is_trivial_symbolic());
        assert_eq!(a.pow(2), a.mul(&a));
        let display = format!("{}", SymChar::new(3, 1, 0, 8, 1, 0));
        assert_eq!(display, "nu^4");
    }
}
