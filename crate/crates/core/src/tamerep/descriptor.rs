//! Local-type descriptors: the Roberts--Schmidt group label plus its
//! character and dihedral parameters, with per-label regularity
//! constraints, parsed from a flat key-value text document.
//!
//! Format, one field per line ('#' starts a comment):
//!
//! ```text
//! group = III
//! ell = 5
//! chi.frob_order = 2
//! chi.frob_exp = 1
//! chi.cyclo_exp = 0/2
//! chi.inertia_order = 1
//! chi.inertia_exp = 0
//! psi.ext = unramified
//! psi.chi.frob_order = ...
//! ```
//!
//! Character blocks: chi, chi1, chi2, xi (characters of the full group),
//! mchi (character of the biquadratic subgroup, over ell^2), psi.chi and
//! psi2.chi (characters of a quadratic subgroup, over ell^f).

use std::collections::BTreeMap;
use std::fmt;

use super::chars::{nu, SymChar};
use super::induction::{induced_det_char, IndFrame, QuadExt, SubgroupChar};
use super::TameError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    ScIrreducible,
    ScPair,
}

impl GroupLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupLabel::I => "I",
            GroupLabel::II => "II",
            GroupLabel::III => "III",
            GroupLabel::IV => "IV",
            GroupLabel::V => "V",
            GroupLabel::VI => "VI",
            GroupLabel::VII => "VII",
            GroupLabel::VIII => "VIII",
            GroupLabel::IX => "IX",
            GroupLabel::X => "X",
            GroupLabel::XI => "XI",
            GroupLabel::ScIrreducible => "SC-irreducible",
            GroupLabel::ScPair => "SC-pair",
        }
    }

    pub fn from_str_label(s: &str) -> Option<GroupLabel> {
        Some(match s {
            "I" => GroupLabel::I,
            "II" => GroupLabel::II,
            "III" => GroupLabel::III,
            "IV" => GroupLabel::IV,
            "V" => GroupLabel::V,
            "VI" => GroupLabel::VI,
            "VII" => GroupLabel::VII,
            "VIII" => GroupLabel::VIII,
            "IX" => GroupLabel::IX,
            "X" => GroupLabel::X,
            "XI" => GroupLabel::XI,
            "SC-irreducible" => GroupLabel::ScIrreducible,
            "SC-pair" => GroupLabel::ScPair,
            _ => return None,
        })
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dihedral datum for a GL(2)-supercuspidal parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DihedralData {
    pub ext: QuadExt,
    /// Character of the quadratic subgroup, over ell^f.
    pub chi: SymChar,
}

impl DihedralData {
    pub fn subgroup_char(&self) -> SubgroupChar {
        SubgroupChar::new(IndFrame::Quad(self.ext), self.chi)
    }

    /// Symbolic determinant of the induced representation.
    pub fn det_char(&self, ell: u64) -> SymChar {
        induced_det_char(ell, &self.subgroup_char())
    }
}

/// The local type of an automorphic representation at ell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalTypeDescriptor {
    pub group: GroupLabel,
    pub ell: u64,
    pub chi: Option<SymChar>,
    pub chi1: Option<SymChar>,
    pub chi2: Option<SymChar>,
    pub xi: Option<SymChar>,
    pub mchi: Option<SymChar>,
    pub psi: Option<DihedralData>,
    pub psi2: Option<DihedralData>,
}

impl LocalTypeDescriptor {
    pub fn new(group: GroupLabel, ell: u64) -> LocalTypeDescriptor {
        LocalTypeDescriptor {
            group,
            ell,
            chi: None,
            chi1: None,
            chi2: None,
            xi: None,
            mchi: None,
            psi: None,
            psi2: None,
        }
    }

    fn need(&self, field: &Option<SymChar>, name: &str) -> Result<SymChar, TameError> {
        field.ok_or_else(|| {
            TameError::Constraint(format!(
                "group {} requires the {name} character",
                self.group
            ))
        })
    }

    fn need_psi(
        &self,
        field: &Option<DihedralData>,
        name: &str,
    ) -> Result<DihedralData, TameError> {
        field.ok_or_else(|| {
            TameError::Constraint(format!("group {} requires the {name} datum", self.group))
        })
    }

    /// Check the per-label constraints; error text names the violated one.
    pub fn validate(&self) -> Result<(), TameError> {
        let ell = self.ell;
        if !crate::ff::is_prime(ell) {
            return Err(TameError::Constraint(format!("ell = {ell} is not prime")));
        }
        let check_hom = |c: &SymChar, name: &str| -> Result<(), TameError> {
            if !c.is_homomorphism() {
                return Err(TameError::Constraint(format!(
                    "{name} has inertia order {} not dividing ell - 1 = {}",
                    c.inertia_order(),
                    ell - 1
                )));
            }
            Ok(())
        };
        match self.group {
            GroupLabel::I => {
                check_hom(&self.need(&self.chi1, "chi1")?, "chi1")?;
                check_hom(&self.need(&self.chi2, "chi2")?, "chi2")?;
            }
            GroupLabel::II => {
                let chi = self.need(&self.chi, "chi")?;
                check_hom(&chi, "chi")?;
                let sq = chi.pow(2);
                if sq == nu(ell) || sq == nu(ell).inv() {
                    return Err(TameError::Constraint(
                        "group II requires chi^2 != nu^(+-1)".into(),
                    ));
                }
                if chi == super::chars::nu_half_power(ell, 3)
                    || chi == super::chars::nu_half_power(ell, -3)
                {
                    return Err(TameError::Constraint(
                        "group II requires chi != nu^(+-3/2)".into(),
                    ));
                }
            }
            GroupLabel::III => {
                let chi = self.need(&self.chi, "chi")?;
                check_hom(&chi, "chi")?;
                if chi.is_trivial_symbolic() {
                    return Err(TameError::Constraint("group III requires chi != 1".into()));
                }
                if chi == nu(ell).pow(2) || chi == nu(ell).pow(-2) {
                    return Err(TameError::Constraint(
                        "group III requires chi != nu^(+-2)".into(),
                    ));
                }
            }
            GroupLabel::IV => {}
            GroupLabel::V => {
                let xi = self.need(&self.xi, "xi")?;
                check_hom(&xi, "xi")?;
                if xi.is_trivial_symbolic() || !xi.pow(2).is_trivial_symbolic() {
                    return Err(TameError::Constraint(
                        "group V requires xi to be a nontrivial quadratic character".into(),
                    ));
                }
            }
            GroupLabel::VI => {}
            GroupLabel::VII => {
                let chi = self.need(&self.chi, "chi")?;
                check_hom(&chi, "chi")?;
                self.validate_dihedral(&self.need_psi(&self.psi, "psi")?)?;
            }
            GroupLabel::VIII => {
                self.validate_dihedral(&self.need_psi(&self.psi, "psi")?)?;
            }
            GroupLabel::IX => {
                let xi = self.need(&self.xi, "xi")?;
                check_hom(&xi, "xi")?;
                if xi.is_trivial_symbolic() || !xi.pow(2).is_trivial_symbolic() {
                    return Err(TameError::Constraint(
                        "group IX requires xi to be a nontrivial quadratic character".into(),
                    ));
                }
                let psi = self.need_psi(&self.psi, "psi")?;
                self.validate_dihedral(&psi)?;
                // xi * mu = mu: xi restricted to the extension must fix the
                // inducing character up to conjugation
                let sub = psi.subgroup_char();
                let xi_restr = super::induction::restrict_char(&xi, sub.frame);
                let twisted = sub.mul(&xi_restr);
                let fixed = sub
                    .conjugates(self.ell)
                    .iter()
                    .any(|c| c.chi == twisted.chi);
                if !fixed {
                    return Err(TameError::Constraint(
                        "group IX requires xi * mu = mu for the dihedral mu".into(),
                    ));
                }
            }
            GroupLabel::X => {
                let psi = self.need_psi(&self.psi, "psi")?;
                self.validate_dihedral(&psi)?;
                let omega = psi.det_char(self.ell);
                if omega == nu(ell) || omega == nu(ell).inv() {
                    return Err(TameError::Constraint(
                        "group X requires omega_psi != nu^(+-1)".into(),
                    ));
                }
            }
            GroupLabel::XI => {
                let psi = self.need_psi(&self.psi, "psi")?;
                self.validate_dihedral(&psi)?;
                let omega = psi.det_char(self.ell);
                if !omega.is_trivial_symbolic() {
                    return Err(TameError::Constraint(format!(
                        "group XI requires omega_psi = 1 (got {omega})"
                    )));
                }
            }
            GroupLabel::ScIrreducible => {
                if ell == 2 {
                    return Err(TameError::EllIsTwo);
                }
                let mchi = self.need(&self.mchi, "mchi")?;
                if mchi.cyclo_num() != 0 {
                    return Err(TameError::Constraint(
                        "supercuspidal parameters are normalized to finite order".into(),
                    ));
                }
                let sub = SubgroupChar::new(IndFrame::Biquadratic, mchi);
                if !sub.is_homomorphism() {
                    return Err(TameError::Constraint(format!(
                        "mchi has inertia order {} not dividing ell^2 - 1 = {}",
                        mchi.inertia_order(),
                        ell * ell - 1
                    )));
                }
                let conj = sub.conjugates(self.ell);
                if conj[1..].iter().any(|c| c.chi == sub.chi) {
                    return Err(TameError::Constraint(
                        "SC-irreducible requires chi regular (all conjugates distinct)".into(),
                    ));
                }
            }
            GroupLabel::ScPair => {
                if ell == 2 {
                    return Err(TameError::EllIsTwo);
                }
                let p1 = self.need_psi(&self.psi, "psi")?;
                let p2 = self.need_psi(&self.psi2, "psi2")?;
                self.validate_dihedral(&p1)?;
                self.validate_dihedral(&p2)?;
                if p1.det_char(self.ell) != p2.det_char(self.ell) {
                    return Err(TameError::Constraint(
                        "SC-pair requires det mu_1 = det mu_2".into(),
                    ));
                }
                if p1 == p2 {
                    return Err(TameError::Constraint(
                        "SC-pair requires distinct inductions".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn validate_dihedral(&self, psi: &DihedralData) -> Result<(), TameError> {
        if self.ell == 2 {
            return Err(TameError::EllIsTwo);
        }
        let sub = psi.subgroup_char();
        if !sub.is_homomorphism() {
            return Err(TameError::Constraint(format!(
                "psi character has inertia order {} not dividing ell^f - 1",
                psi.chi.inertia_order()
            )));
        }
        // irreducible induction: chi not fixed by the nontrivial conjugation
        let conj = sub.conjugates(self.ell);
        if conj[1].chi == sub.chi {
            return Err(TameError::Constraint(
                "dihedral parameter requires chi != chi^sigma (irreducible induction)".into(),
            ));
        }
        Ok(())
    }

    /// Canonical flat key-value serialization (parse . serialize = id).
    pub fn serialize(&self) -> String {
        fn char_block(out: &mut String, name: &str, c: &SymChar) {
            out.push_str(&format!("{name}.frob_order = {}\n", c.frob_order()));
            out.push_str(&format!("{name}.frob_exp = {}\n", c.frob_exp()));
            out.push_str(&format!("{name}.cyclo_exp = {}/2\n", c.cyclo_num()));
            out.push_str(&format!("{name}.inertia_order = {}\n", c.inertia_order()));
            out.push_str(&format!("{name}.inertia_exp = {}\n", c.inertia_exp()));
        }
        fn psi_block(out: &mut String, name: &str, d: &DihedralData) {
            let ext = match d.ext {
                QuadExt::Unramified => "unramified",
                QuadExt::Ramified1 => "ramified1",
                QuadExt::Ramified2 => "ramified2",
            };
            out.push_str(&format!("{name}.ext = {ext}\n"));
            char_block(out, &format!("{name}.chi"), &d.chi);
        }
        let mut out = String::new();
        out.push_str(&format!("group = {}\n", self.group));
        out.push_str(&format!("ell = {}\n", self.ell));
        for (name, c) in [
            ("chi", &self.chi),
            ("chi1", &self.chi1),
            ("chi2", &self.chi2),
            ("xi", &self.xi),
            ("mchi", &self.mchi),
        ] {
            if let Some(c) = c {
                char_block(&mut out, name, c);
            }
        }
        if let Some(d) = &self.psi {
            psi_block(&mut out, "psi", d);
        }
        if let Some(d) = &self.psi2 {
            psi_block(&mut out, "psi2", d);
        }
        out
    }
}

fn parse_cyclo(s: &str) -> Result<i64, TameError> {
    let bad = || TameError::Constraint(format!("bad cyclo_exp value: {s}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| bad())?;
        let d: i64 = den.trim().parse().map_err(|_| bad())?;
        match d {
            2 => Ok(n),
            1 => Ok(2 * n),
            _ => Err(bad()),
        }
    } else {
        let n: i64 = s.trim().parse().map_err(|_| bad())?;
        Ok(2 * n)
    }
}

/// Parse a descriptor document.
pub fn parse_descriptor(text: &str) -> Result<LocalTypeDescriptor, TameError> {
    let mut kv: BTreeMap<String, String> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            TameError::Constraint(format!("line {}: expected 'key = value'", lineno + 1))
        })?;
        kv.insert(k.trim().to_string(), v.trim().to_string());
    }
    let take = |kv: &mut BTreeMap<String, String>, key: &str| kv.remove(key);
    let group_s =
        take(&mut kv, "group").ok_or_else(|| TameError::Constraint("missing 'group'".into()))?;
    let group = GroupLabel::from_str_label(&group_s)
        .ok_or_else(|| TameError::Constraint(format!("unknown group label: {group_s}")))?;
    let ell: u64 = take(&mut kv, "ell")
        .ok_or_else(|| TameError::Constraint("missing 'ell'".into()))?
        .parse()
        .map_err(|_| TameError::Constraint("bad ell".into()))?;

    let mut desc = LocalTypeDescriptor::new(group, ell);

    let parse_char = |kv: &mut BTreeMap<String, String>,
                      prefix: &str,
                      ell_eff: u64|
     -> Result<Option<SymChar>, TameError> {
        let key = |f: &str| format!("{prefix}.{f}");
        if !kv.keys().any(|k| k.starts_with(&format!("{prefix}."))) {
            return Ok(None);
        }
        let get = |kv: &mut BTreeMap<String, String>, f: &str| -> Result<String, TameError> {
            kv.remove(&key(f))
                .ok_or_else(|| TameError::Constraint(format!("missing {}", key(f))))
        };
        let num = |s: String| -> Result<i64, TameError> {
            s.parse()
                .map_err(|_| TameError::Constraint(format!("bad integer: {s}")))
        };
        let frob_order = num(get(kv, "frob_order")?)? as u64;
        let frob_exp = num(get(kv, "frob_exp")?)?;
        let cyclo = parse_cyclo(&get(kv, "cyclo_exp")?)?;
        let inertia_order = num(get(kv, "inertia_order")?)? as u64;
        let inertia_exp = num(get(kv, "inertia_exp")?)?;
        Ok(Some(SymChar::new(
            ell_eff,
            frob_order,
            frob_exp,
            cyclo,
            inertia_order,
            inertia_exp,
        )))
    };

    let parse_psi = |kv: &mut BTreeMap<String, String>,
                     prefix: &str,
                     ell: u64|
     -> Result<Option<DihedralData>, TameError> {
        let ext_key = format!("{prefix}.ext");
        let Some(ext_s) = kv.remove(&ext_key) else {
            return Ok(None);
        };
        let ext = match ext_s.as_str() {
            "unramified" => QuadExt::Unramified,
            "ramified1" => QuadExt::Ramified1,
            "ramified2" => QuadExt::Ramified2,
            other => {
                return Err(TameError::Constraint(format!(
                    "unknown extension kind: {other}"
                )))
            }
        };
        let ell_eff = IndFrame::Quad(ext).ell_eff(ell);
        let chi = parse_char(kv, &format!("{prefix}.chi"), ell_eff)?
            .ok_or_else(|| TameError::Constraint(format!("missing {prefix}.chi block")))?;
        Ok(Some(DihedralData { ext, chi }))
    };

    desc.psi = parse_psi(&mut kv, "psi", ell)?;
    desc.psi2 = parse_psi(&mut kv, "psi2", ell)?;
    desc.chi = parse_char(&mut kv, "chi", ell)?;
    desc.chi1 = parse_char(&mut kv, "chi1", ell)?;
    desc.chi2 = parse_char(&mut kv, "chi2", ell)?;
    desc.xi = parse_char(&mut kv, "xi", ell)?;
    desc.mchi = parse_char(&mut kv, "mchi", ell * ell)?;

    if let Some(k) = kv.keys().next() {
        return Err(TameError::Constraint(format!("unknown key: {k}")));
    }
    desc.validate()?;
    Ok(desc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tamerep::nu_half_power;

    #[test]
    fn parse_round_trip() {
        let text = "\
# Group III example
group = III
ell = 5
chi.frob_order = 2
chi.frob_exp = 1
chi.cyclo_exp = 0/2
chi.inertia_order = 1
chi.inertia_exp = 0
";
        let d = parse_descriptor(text).unwrap();
        assert_eq!(d.group, GroupLabel::III);
        assert_eq!(d.ell, 5);
        assert_eq!(d.chi.unwrap().frob_order(), 2);
        let d2 = parse_descriptor(&d.serialize()).unwrap();
        assert_eq!(d, d2);
    }

    #[test]
    fn group_ii_constraint_fires() {
        let mut d = LocalTypeDescriptor::new(GroupLabel::II, 5);
        d.chi = Some(nu_half_power(5, 3));
        let err = d.validate().unwrap_err();
        assert!(err.to_string().contains("nu^(+-3/2)"), "{err}");
        // chi^2 = nu also rejected
        d.chi = Some(nu_half_power(5, 1));
        assert!(d.validate().is_err());
        // a harmless chi passes
        d.chi = Some(SymChar::unramified(5, 3, 1));
        d.validate().unwrap();
    }

    #[test]
    fn group_iii_constraints() {
        let mut d = LocalTypeDescriptor::new(GroupLabel::III, 5);
        d.chi = Some(crate::tamerep::trivial_char(5));
        assert!(d.validate().is_err());
        d.chi = Some(nu_half_power(5, 4));
        assert!(d.validate().is_err());
        d.chi = Some(SymChar::unramified(5, 2, 1));
        d.validate().unwrap();
    }

    #[test]
    fn group_v_requires_quadratic_xi() {
        let mut d = LocalTypeDescriptor::new(GroupLabel::V, 5);
        d.xi = Some(SymChar::unramified(5, 3, 1));
        assert!(d.validate().is_err());
        d.xi = Some(SymChar::ramified(5, 2, 1));
        d.validate().unwrap();
    }

    #[test]
    fn unknown_key_rejected() {
        let text = "group = IV\nell = 3\nnonsense = 1\n";
        assert!(parse_descriptor(text).is_err());
    }

    #[test]
    fn dihedral_round_trip() {
        let mut d = LocalTypeDescriptor::new(GroupLabel::X, 3);
        // unramified quadratic, chi of inertia order 8 | 3^2-1, regular
        d.psi = Some(DihedralData {
            ext: QuadExt::Unramified,
            chi: SymChar::new(9, 1, 0, 0, 8, 1),
        });
        d.validate().unwrap();
        let d2 = parse_descriptor(&d.serialize()).unwrap();
        assert_eq!(d, d2);
    }
}
