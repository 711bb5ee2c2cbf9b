//! Exceptional-prime enumeration: for a local type at ell and a bound B,
//! every prime 5 <= p <= B where H^0(G_ell, ad(1)) can be nonzero, found
//! through the character-triviality criteria of the per-group adjoint
//! decompositions; plus the ell = p checks (Fontaine-Laffaille range and
//! the ordinary congruences).

use thiserror::Error;

use crate::ff::{gcd, is_prime, ExtField};
use crate::tamerep::{
    induced_det_char, nu, nu_half_power, restrict_char, trivial_char, GroupLabel, IndFrame,
    LocalTypeDescriptor, SubgroupChar, SymChar, TameError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SieveError {
    #[error("p = {0} divides the character modulus ell-power")]
    PDividesEll(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid weights: need a >= b >= 0 and w + 1 = a + b mod 2")]
    BadWeights,
    #[error(transparent)]
    Tame(#[from] TameError),
    #[error(transparent)]
    Field(#[from] crate::ff::FieldError),
}

/// A fired triviality condition at a prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveReport {
    pub p: u64,
    pub condition: String,
    pub group: GroupLabel,
}

fn p_free_part(mut n: u64, p: u64) -> u64 {
    while n % p == 0 {
        n /= p;
    }
    n
}

/// Whether the mod-p reduction of a symbolic character is trivial for
/// SOME embedding: the prime-to-p part of the inertia order must be 1,
/// and some primitive root of unity and square-root choice must make the
/// Frobenius value 1.  Decided by multiplicative-order arithmetic in
/// F_p or F_{p^2}.
pub fn char_trivial_mod(chi: &SymChar, p: u64) -> Result<bool, SieveError> {
    if !is_prime(p) {
        return Err(SieveError::NotPrime(p));
    }
    if chi.ell() % p == 0 {
        return Err(SieveError::PDividesEll(p));
    }
    if p_free_part(chi.inertia_order(), p) != 1 {
        return Ok(false);
    }
    // order of the image zeta^j where zeta is a primitive root of the
    // prime-to-p order n
    let n = p_free_part(chi.frob_order(), p);
    let j = chi.frob_exp() % n.max(1);
    let target = if n == 1 || j == 0 { 1 } else { n / gcd(n, j) };
    let c = chi.cyclo_num();
    if c % 2 == 0 {
        let f1 = ExtField::new(p, 1)?;
        let base = f1.from_u64(chi.ell() % p);
        let a = base.pow_i(-c / 2).map_err(SieveError::Field)?;
        let ord = if a == f1.one() { 1 } else { a.mult_order()? };
        return Ok(ord == target);
    }
    // half-integral: evaluate both square roots of ell in F_{p^2}
    let legendre_square = {
        let f1 = ExtField::new(p, 1)?;
        let base = f1.from_u64(chi.ell() % p);
        !base.is_zero() && base.pow((p - 1) / 2) == f1.one()
    };
    let field = if legendre_square {
        ExtField::new(p, 1)?
    } else {
        ExtField::new(p, 2)?
    };
    let base = field.from_u64(chi.ell() % p);
    for s in field.sqrt_candidates(&base) {
        let a = s.pow_i(-c).map_err(SieveError::Field)?;
        let ord = if a == field.one() { 1 } else { a.mult_order()? };
        if ord == target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A condition: a symbolic character (possibly of a subgroup, carried by
/// its effective ell-power) together with a display label.
#[derive(Debug, Clone)]
pub struct Condition {
    pub chi: SymChar,
    pub label: String,
}

impl Condition {
    fn full(chi: SymChar) -> Condition {
        Condition {
            label: format!("{chi} trivial"),
            chi,
        }
    }

    fn sub(chi: SymChar, frame: IndFrame) -> Condition {
        let suffix = match frame {
            IndFrame::Biquadratic => "|_M",
            IndFrame::Quad(_) => "|_K",
        };
        Condition {
            label: format!("{chi} trivial {suffix}"),
            chi,
        }
    }
}

fn dedup(conds: Vec<Condition>) -> Vec<Condition> {
    let mut out: Vec<Condition> = Vec::new();
    for c in conds {
        if !out.iter().any(|o| o.chi == c.chi) {
            out.push(c);
        }
    }
    out
}

/// Conditions contributed by ad^0 of a dihedral piece, twisted by `tw`:
/// eta * tw * nu (full group) and ratio * tw|_K * nu|_K (subgroup).
fn ad0_conditions(ell: u64, sub: &SubgroupChar, tw: &SymChar) -> Vec<Condition> {
    let frame = sub.frame;
    let eta = frame.quad_char(ell);
    let ratio = sub.ratio(&sub.conjugates(ell)[1]);
    let nu_k = restrict_char(&nu(ell), frame);
    let tw_k = restrict_char(tw, frame);
    vec![
        Condition::full(eta.mul(tw).mul(&nu(ell))),
        Condition::sub(ratio.mul(&tw_k).mul(&nu_k).chi, frame),
    ]
}

/// Restrict a quadratic-subgroup character to the biquadratic subgroup.
fn quad_to_biquad(sub: &SubgroupChar) -> SubgroupChar {
    let c = sub.chi;
    #[allow(clippy::match_wildcard_for_single_variants)]
    match sub.frame {
        IndFrame::Biquadratic => unreachable!("already biquadratic"),
        IndFrame::Quad(crate::tamerep::QuadExt::Unramified) => {
            // generators align: F^2 -> F^2, inertia u -> u^2 doubles
            SubgroupChar::new(
                IndFrame::Biquadratic,
                SymChar::new(
                    c.ell(),
                    c.frob_order(),
                    c.frob_exp() as i64,
                    c.cyclo_num(),
                    c.inertia_order(),
                    (2 * c.inertia_exp() as i128).rem_euclid(c.inertia_order() as i128) as i64,
                ),
            )
        }
        IndFrame::Quad(_) => {
            // frob gen squares (F or uF -> their square lies over F^2 up to
            // inertia), inertia gen u^2 is shared; ell_eff doubles
            // value on F^2-side: for Ramified1, (F)^2 = F^2 exactly;
            // for Ramified2, (uF)^2 = u^{1+ell} F^2: extra inertia factor.
            let ell = (c.ell() as f64).sqrt() as u64; // ell_eff was ell^1
            let ell = if ell * ell == c.ell() { ell } else { c.ell() };
            let extra_exp = match sub.frame {
                IndFrame::Quad(crate::tamerep::QuadExt::Ramified2) => {
                    ((1 + ell as i128) / 2 * c.inertia_exp() as i128)
                        .rem_euclid(c.inertia_order() as i128) as i64
                }
                _ => 0,
            };
            let base = SymChar::new(
                c.ell() * c.ell(),
                c.frob_order(),
                (2 * c.frob_exp() as i128).rem_euclid(c.frob_order() as i128) as i64,
                c.cyclo_num(),
                c.inertia_order(),
                c.inertia_exp() as i64,
            );
            let extra = SymChar::unramified(c.ell() * c.ell(), c.inertia_order(), extra_exp);
            SubgroupChar::new(IndFrame::Biquadratic, base.mul(&extra))
        }
    }
}

/// The symbolic condition list for a descriptor, per the displayed
/// adjoint decompositions.
pub fn sieve_conditions(desc: &LocalTypeDescriptor) -> Result<Vec<Condition>, SieveError> {
    desc.validate()?;
    let ell = desc.ell;
    let nu1 = nu(ell);
    let conds = match desc.group {
        GroupLabel::I => {
            let c1 = desc.chi1.unwrap();
            let c2 = desc.chi2.unwrap();
            let one = trivial_char(ell);
            [
                one,
                c1,
                c1.inv(),
                c2,
                c2.inv(),
                c1.mul(&c2),
                c1.mul(&c2).inv(),
                c1.ratio(&c2),
                c2.ratio(&c1),
            ]
            .iter()
            .map(|x| Condition::full(x.mul(&nu1)))
            .collect()
        }
        GroupLabel::II => {
            let chi = desc.chi.unwrap();
            vec![
                Condition::full(nu1),
                Condition::full(chi.pow(2).mul(&nu1)),
                Condition::full(chi.pow(-2).mul(&nu1)),
                Condition::full(chi.mul(&nu_half_power(ell, 3))),
                Condition::full(chi.inv().mul(&nu_half_power(ell, 3))),
                Condition::full(nu1.pow(2)),
            ]
        }
        GroupLabel::III => {
            let chi = desc.chi.unwrap();
            vec![
                Condition::full(chi.mul(&nu1.pow(2))),
                Condition::full(chi.inv().mul(&nu1.pow(2))),
                Condition::full(nu1.pow(2)),
            ]
        }
        GroupLabel::IV => vec![Condition::full(nu1.pow(4))],
        GroupLabel::V => {
            let xi = desc.xi.unwrap();
            vec![
                Condition::full(nu1.pow(2)),
                Condition::full(xi.mul(&nu1.pow(2))),
            ]
        }
        GroupLabel::VI => vec![Condition::full(nu1.pow(2))],
        GroupLabel::VII | GroupLabel::VIII | GroupLabel::IX => {
            let psi = desc.psi.unwrap();
            let sub = psi.subgroup_char();
            let chi = match desc.group {
                GroupLabel::VII => desc.chi.unwrap(),
                GroupLabel::VIII => trivial_char(ell),
                _ => nu1.mul(&desc.xi.unwrap()),
            };
            let mut v = vec![Condition::full(nu1)];
            for tw in [trivial_char(ell), chi, chi.inv()] {
                v.extend(ad0_conditions(ell, &sub, &tw));
            }
            v
        }
        GroupLabel::X => {
            let psi = desc.psi.unwrap();
            let sub = psi.subgroup_char();
            let omega = induced_det_char(ell, &sub);
            let frame = sub.frame;
            let nu_k = restrict_char(&nu1, frame);
            let om_k = restrict_char(&omega, frame);
            let mut v = vec![
                Condition::full(nu1),
                Condition::full(omega.mul(&nu1)),
                Condition::full(omega.inv().mul(&nu1)),
                Condition::sub(sub.inv().chi.mul(&om_k.chi).mul(&nu_k.chi), frame),
                Condition::sub(sub.inv().chi.mul(&nu_k.chi), frame),
            ];
            v.extend(ad0_conditions(ell, &sub, &trivial_char(ell)));
            v
        }
        GroupLabel::XI => {
            let psi = desc.psi.unwrap();
            let sub = psi.subgroup_char();
            let frame = sub.frame;
            let nu32_k = restrict_char(&nu_half_power(ell, 3), frame);
            let mut v = vec![Condition::full(nu1.pow(2))];
            v.extend(ad0_conditions(ell, &sub, &trivial_char(ell)));
            v.push(Condition::sub(sub.inv().chi.mul(&nu32_k.chi), frame));
            v
        }
        GroupLabel::ScIrreducible => {
            let mchi = desc.mchi.unwrap();
            let sub = SubgroupChar::new(IndFrame::Biquadratic, mchi);
            let conj = sub.conjugates(ell);
            let nu_m = restrict_char(&nu1, IndFrame::Biquadratic);
            let mut v = Vec::new();
            for a in &conj {
                for b in &conj {
                    let ratio = a.ratio(b);
                    v.push(Condition::sub(
                        ratio.chi.mul(&nu_m.chi),
                        IndFrame::Biquadratic,
                    ));
                }
            }
            v
        }
        GroupLabel::ScPair => {
            let s1 = desc.psi.unwrap().subgroup_char();
            let s2 = desc.psi2.unwrap().subgroup_char();
            let mut v = Vec::new();
            for s in [&s1, &s2] {
                v.extend(ad0_conditions(ell, s, &trivial_char(ell)));
            }
            if s1.frame == s2.frame {
                let frame = s1.frame;
                let nu_k = restrict_char(&nu1, frame);
                for c2 in s2.conjugates(ell) {
                    v.push(Condition::sub(c2.ratio(&s1).chi.mul(&nu_k.chi), frame));
                }
            } else {
                let m1 = quad_to_biquad(&s1);
                let m2 = quad_to_biquad(&s2);
                let nu_m = restrict_char(&nu1, IndFrame::Biquadratic);
                v.push(Condition::sub(
                    m2.ratio(&m1).chi.mul(&nu_m.chi),
                    IndFrame::Biquadratic,
                ));
            }
            v
        }
    };
    Ok(dedup(conds))
}

fn fired_at(
    conds: &[Condition],
    group: GroupLabel,
    p: u64,
) -> Result<Vec<SieveReport>, SieveError> {
    let mut out = Vec::new();
    for c in conds {
        if char_trivial_mod(&c.chi, p)? {
            out.push(SieveReport {
                p,
                condition: c.label.clone(),
                group,
            });
        }
    }
    out.sort_by(|a, b| a.condition.cmp(&b.condition));
    Ok(out)
}

/// Fired conditions at one prime, sorted by label.
pub fn sieve_at(desc: &LocalTypeDescriptor, p: u64) -> Result<Vec<SieveReport>, SieveError> {
    let conds = sieve_conditions(desc)?;
    fired_at(&conds, desc.group, p)
}

/// All primes 5 <= p <= bound, p != ell, where some condition fires.
pub fn exceptional_primes(
    desc: &LocalTypeDescriptor,
    bound: u64,
) -> Result<Vec<SieveReport>, SieveError> {
    let conds = sieve_conditions(desc)?;
    let mut out = Vec::new();
    for p in 5..=bound {
        if !is_prime(p) || p == desc.ell {
            continue;
        }
        out.extend(fired_at(&conds, desc.group, p)?);
    }
    Ok(out)
}

/// Whether any condition fires at p (set-level interface for the
/// oracle-equivalence tests).
pub fn sieve_fires(desc: &LocalTypeDescriptor, p: u64) -> Result<bool, SieveError> {
    let conds = sieve_conditions(desc)?;
    for c in &conds {
        if char_trivial_mod(&c.chi, p)? {
            return Ok(true);
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------
// ell = p checks
// ---------------------------------------------------------------------

/// Weights (a, b) and the twist w, with delta = (w + 3 - a - b)/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightData {
    pub a: i64,
    pub b: i64,
    pub w: i64,
}

impl WeightData {
    pub fn new(a: i64, b: i64, w: i64) -> Result<WeightData, SieveError> {
        if !(a >= b && b >= 0) || (w + 1 - a - b).rem_euclid(2) != 0 {
            return Err(SieveError::BadWeights);
        }
        Ok(WeightData { a, b, w })
    }

    pub fn delta(&self) -> i64 {
        (self.w + 3 - self.a - self.b) / 2
    }

    /// Hodge--Tate weights {delta, delta + b, delta + a, delta + a + b}.
    pub fn hodge_tate_weights(&self) -> [i64; 4] {
        let d = self.delta();
        [d, d + self.b, d + self.a, d + self.a + self.b]
    }

    /// The Fontaine-Laffaille weight-disjointness predicate: no two
    /// Hodge--Tate weights are consecutive.
    pub fn weights_disjoint(&self) -> bool {
        let w = self.hodge_tate_weights();
        for i in 0..4 {
            for j in 0..4 {
                if i != j && (w[i] - w[j]).abs() == 1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Outcome of the Fontaine-Laffaille criterion at an unramified p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlOutcome {
    UnobstructedAtP,
    ConditionFails(String),
}

/// H^0(G_p, ad(1)) = 0 when 0 < a + b < p - 2 and b, a - b != 1.
pub fn fl_check(wd: &WeightData, p: u64) -> FlOutcome {
    let (a, b) = (wd.a, wd.b);
    if a + b <= 0 {
        return FlOutcome::ConditionFails(format!("a+b = {} is not positive", a + b));
    }
    if a + b >= p as i64 - 2 {
        return FlOutcome::ConditionFails(format!("a+b = {} >= p-2 = {}", a + b, p as i64 - 2));
    }
    if b == 1 {
        return FlOutcome::ConditionFails("b = 1".into());
    }
    if a - b == 1 {
        return FlOutcome::ConditionFails("a-b = 1".into());
    }
    FlOutcome::UnobstructedAtP
}

/// A fired congruence in the ordinary case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub quantity: &'static str,
    pub value: i64,
    pub modulus: u64,
    pub sign: i64,
}

impl std::fmt::Display for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} = {}{} (mod {})",
            self.quantity,
            if self.sign > 0 { "+" } else { "-" },
            1,
            self.modulus
        )
    }
}

/// The subset of {a, b, a-b, a+b} congruent to +-1 mod p-1; an empty
/// result certifies H^0(G_p, ad(1)) = 0 in the unramified ordinary case.
pub fn ordinary_check(wd: &WeightData, p: u64) -> Vec<Congruence> {
    let m = p - 1;
    let mut fired = Vec::new();
    for (q, v) in [
        ("a", wd.a),
        ("b", wd.b),
        ("a-b", wd.a - wd.b),
        ("a+b", wd.a + wd.b),
    ] {
        let r = v.rem_euclid(m as i64) as u64;
        if r == 1 % m {
            fired.push(Congruence {
                quantity: q,
                value: v,
                modulus: m,
                sign: 1,
            });
        } else if r == (m - 1) % m {
            fired.push(Congruence {
                quantity: q,
                value: v,
                modulus: m,
                sign: -1,
            });
        }
    }
    fired
}
