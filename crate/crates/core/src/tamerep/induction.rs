//! Induced representations from the index-2 and index-4 subgroups of the
//! tame model, for dihedral (GL_2-supercuspidal) and biquadratic
//! (GSp_4-supercuspidal) parameters, ell odd.
//!
//! Subgroups are kernels of parity maps:
//!   unramified quadratic   <F^2, u>    (a even)
//!   ramified quadratic 1   <F, u^2>    (b even)
//!   ramified quadratic 2   <uF, u^2>   (a + b even)
//!   biquadratic            <F^2, u^2>  (a, b both even)
//! A character of a subgroup is stored as a SymChar over ell^f (f the
//! residue degree): its Frobenius part is the value on the subgroup's
//! Frobenius-like generator, its inertia part the value on u^step.

use super::chars::SymChar;
use super::group::{TameElt, TameGroup};
use super::rep::{ConcreteRep, SqrtChoice};
use super::TameError;
use crate::ff::{ExtField, FqElem};
use crate::linalg::FMatrix;

/// The three quadratic extensions of Q_ell (ell odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadExt {
    Unramified,
    Ramified1,
    Ramified2,
}

/// Index-2 or index-4 induction frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndFrame {
    Quad(QuadExt),
    Biquadratic,
}

impl IndFrame {
    /// (a, b) of the subgroup's Frobenius-like generator.
    pub fn frob_gen(self) -> (i64, i64) {
        match self {
            IndFrame::Quad(QuadExt::Unramified) | IndFrame::Biquadratic => (2, 0),
            IndFrame::Quad(QuadExt::Ramified1) => (1, 0),
            IndFrame::Quad(QuadExt::Ramified2) => (1, 1),
        }
    }

    /// u^step generates the subgroup's inertia.
    pub fn inertia_step(self) -> u64 {
        match self {
            IndFrame::Quad(QuadExt::Unramified) => 1,
            _ => 2,
        }
    }

    /// Residue degree of the extension cut out by the subgroup.
    pub fn residue_degree(self) -> u64 {
        self.frob_gen().0 as u64
    }

    pub fn ell_eff(self, ell: u64) -> u64 {
        ell.pow(self.residue_degree() as u32)
    }

    pub fn index(self) -> usize {
        match self {
            IndFrame::Biquadratic => 4,
            IndFrame::Quad(_) => 2,
        }
    }

    /// Coset representatives, identity first.
    pub fn cosets(self) -> Vec<(i64, i64)> {
        match self {
            IndFrame::Biquadratic => vec![(0, 0), (1, 0), (0, 1), (1, 1)],
            IndFrame::Quad(QuadExt::Unramified) => vec![(0, 0), (1, 0)],
            IndFrame::Quad(_) => vec![(0, 0), (0, 1)],
        }
    }

    pub fn contains(self, e: TameElt) -> bool {
        match self {
            IndFrame::Biquadratic => e.a % 2 == 0 && e.b % 2 == 0,
            IndFrame::Quad(QuadExt::Unramified) => e.a % 2 == 0,
            IndFrame::Quad(QuadExt::Ramified1) => e.b % 2 == 0,
            IndFrame::Quad(QuadExt::Ramified2) => (e.a + e.b) % 2 == 0,
        }
    }

    /// The parity the tame group must satisfy to cut this subgroup.
    pub fn needs_even_r(self) -> bool {
        matches!(
            self,
            IndFrame::Biquadratic
                | IndFrame::Quad(QuadExt::Unramified)
                | IndFrame::Quad(QuadExt::Ramified2)
        )
    }

    pub fn needs_even_m(self) -> bool {
        self.inertia_step() == 2
    }

    /// Decompose h = frob_gen^x (u^step)^y; h must lie in the subgroup.
    pub fn decompose(self, group: &TameGroup, h: TameElt) -> Option<(u64, u64)> {
        if !self.contains(h) {
            return None;
        }
        let (ga, gb) = self.frob_gen();
        let g1 = group.make(ga, gb);
        let x = if ga == 2 { h.a / 2 } else { h.a };
        let rem = group.mul(group.pow(group.inv(g1), x as i64), h);
        if rem.a != 0 {
            return None;
        }
        let step = self.inertia_step();
        if rem.b % step != 0 {
            return None;
        }
        Some((x, rem.b / step))
    }

    /// The quadratic character of the full group cutting this subgroup
    /// (only for the quadratic frames).
    pub fn quad_char(self, ell: u64) -> SymChar {
        match self {
            IndFrame::Quad(QuadExt::Unramified) => SymChar::unramified(ell, 2, 1),
            IndFrame::Quad(QuadExt::Ramified1) => SymChar::ramified(ell, 2, 1),
            IndFrame::Quad(QuadExt::Ramified2) => SymChar::new(ell, 2, 1, 0, 2, 1),
            IndFrame::Biquadratic => panic!("biquadratic has three quadratic characters"),
        }
    }
}

/// A symbolic character of the subgroup cut by `frame`.
///
/// `chi` lives over ell_eff = ell^f: its Frobenius data is the value on
/// the subgroup's Frobenius generator, its inertia data the value on
/// u^step, and its cyclotomic exponent is relative to ell_eff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupChar {
    pub frame: IndFrame,
    pub chi: SymChar,
}

impl SubgroupChar {
    pub fn new(frame: IndFrame, chi: SymChar) -> SubgroupChar {
        SubgroupChar { frame, chi }
    }

    pub fn is_homomorphism(&self) -> bool {
        // inertia order must divide ell_eff - 1 = ell^f - 1
        self.chi.is_homomorphism()
    }

    pub fn mul(&self, other: &SubgroupChar) -> SubgroupChar {
        assert_eq!(self.frame, other.frame);
        SubgroupChar::new(self.frame, self.chi.mul(&other.chi))
    }

    pub fn inv(&self) -> SubgroupChar {
        SubgroupChar::new(self.frame, self.chi.inv())
    }

    pub fn ratio(&self, other: &SubgroupChar) -> SubgroupChar {
        self.mul(&other.inv())
    }

    pub fn is_trivial_symbolic(&self) -> bool {
        self.chi.is_trivial_symbolic()
    }

    /// Conjugate by a Frobenius lift: trivial on the Frobenius value,
    /// raises the inertia value to the ell-th power.
    pub fn conj_by_f(&self, ell: u64) -> SubgroupChar {
        let c = &self.chi;
        let chi = SymChar::new(
            c.ell(),
            c.frob_order(),
            c.frob_exp() as i64,
            c.cyclo_num(),
            c.inertia_order(),
            (c.inertia_exp() as i128 * ell as i128).rem_euclid(c.inertia_order() as i128) as i64,
        );
        SubgroupChar::new(self.frame, chi)
    }

    /// Conjugate by the inertia generator u: fixes the inertia value and
    /// multiplies the Frobenius value by an explicit inertia root.
    pub fn conj_by_u(&self, ell: u64) -> SubgroupChar {
        let c = &self.chi;
        // u g1 u^{-1} = (u^step)^k g1 with k = (1 - ell^f)/step ... derived
        // from the tame law; f and step depend on the frame.
        let k: i128 = match self.frame {
            IndFrame::Biquadratic => (1 - (ell as i128).pow(2)) / 2,
            IndFrame::Quad(QuadExt::Unramified) => 1 - (ell as i128).pow(2),
            IndFrame::Quad(_) => (1 - ell as i128) / 2,
        };
        let n_i = c.inertia_order() as i128;
        let extra_exp = (c.inertia_exp() as i128 * k).rem_euclid(n_i) as i64;
        let extra = SymChar::unramified(c.ell(), c.inertia_order(), extra_exp);
        SubgroupChar::new(self.frame, c.mul(&extra))
    }

    /// All Gal-conjugates: for quadratic frames [id, nontrivial]; for the
    /// biquadratic frame [1, F, u, uF]-conjugates in that order.
    pub fn conjugates(&self, ell: u64) -> Vec<SubgroupChar> {
        match self.frame {
            IndFrame::Biquadratic => {
                let cf = self.conj_by_f(ell);
                vec![*self, cf, self.conj_by_u(ell), cf.conj_by_u(ell)]
            }
            IndFrame::Quad(QuadExt::Unramified) => vec![*self, self.conj_by_f(ell)],
            IndFrame::Quad(_) => vec![*self, self.conj_by_u(ell)],
        }
    }

    /// Value at a subgroup element, through the decomposition
    /// h = frob_gen^x (u^step)^y.
    pub fn eval(
        &self,
        field: &ExtField,
        group: &TameGroup,
        h: TameElt,
        sqrt_choice: SqrtChoice,
    ) -> Result<FqElem, TameError> {
        let (x, y) = self
            .frame
            .decompose(group, h)
            .ok_or_else(|| TameError::Constraint("element outside subgroup".into()))?;
        let vf = self.chi.eval_frobenius(field, sqrt_choice)?;
        let vu = self.chi.eval_inertia(field)?;
        Ok(&vf.pow(x) * &vu.pow(y))
    }
}

/// Restrict a character of the full group to the subgroup cut by `frame`.
///
/// Value on frob_gen = u^gb F^ga: zeta_f^{j*ga} * ell^{e*ga/2} * zeta_i^{k*gb};
/// the cyclotomic exponent stays e because it is read relative to
/// ell_eff = ell^ga.  Value on u^step: zeta_i^{k*step}.
pub fn restrict_char(chi: &SymChar, frame: IndFrame) -> SubgroupChar {
    let ell = chi.ell();
    let (ga, gb) = frame.frob_gen();
    let step = frame.inertia_step();
    let ell_eff = frame.ell_eff(ell);
    let frob_part = SymChar::new(
        ell_eff,
        chi.frob_order(),
        (chi.frob_exp() as i128 * ga as i128).rem_euclid(chi.frob_order() as i128) as i64,
        chi.cyclo_num(),
        1,
        0,
    );
    let frob_inertia_extra = SymChar::unramified(
        ell_eff,
        chi.inertia_order(),
        (chi.inertia_exp() as i128 * gb as i128).rem_euclid(chi.inertia_order() as i128) as i64,
    );
    let inertia_part = SymChar::ramified(
        ell_eff,
        chi.inertia_order(),
        (chi.inertia_exp() as i128 * step as i128).rem_euclid(chi.inertia_order() as i128) as i64,
    );
    SubgroupChar::new(frame, frob_part.mul(&frob_inertia_extra).mul(&inertia_part))
}

/// The induced representation of a subgroup character: coset reps as in
/// `frame.cosets()`, entries chi(t_i^{-1} g t_j).
pub fn induce(
    field: &ExtField,
    group: &TameGroup,
    sub: &SubgroupChar,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    if group.ell() % 2 == 0 {
        return Err(TameError::EllIsTwo);
    }
    if !sub.is_homomorphism() {
        return Err(TameError::NotHomomorphism {
            n_i: sub.chi.inertia_order(),
            bound: sub.frame.ell_eff(group.ell()) - 1,
        });
    }
    if sub.frame.needs_even_r() && group.frobenius_order() % 2 != 0 {
        return Err(TameError::Constraint("tame group needs even r".into()));
    }
    if sub.frame.needs_even_m() && group.inertia_order() % 2 != 0 {
        return Err(TameError::Constraint("tame group needs even m".into()));
    }
    let cosets: Vec<TameElt> = sub
        .frame
        .cosets()
        .into_iter()
        .map(|(a, b)| group.make(a, b))
        .collect();
    let n = cosets.len();
    let build = |g: TameElt| -> Result<FMatrix, TameError> {
        let mut m = FMatrix::zeros(field, n, n);
        for (j, &tj) in cosets.iter().enumerate() {
            let gtj = group.mul(g, tj);
            let mut placed = false;
            for (i, &ti) in cosets.iter().enumerate() {
                let h = group.mul(group.inv(ti), gtj);
                if sub.frame.contains(h) {
                    m[(i, j)] = sub.eval(field, group, h, sqrt_choice)?;
                    placed = true;
                    break;
                }
            }
            if !placed {
                return Err(TameError::Constraint(
                    "coset representatives incomplete".into(),
                ));
            }
        }
        Ok(m)
    };
    let r_f = build(group.frobenius())?;
    let r_u = build(group.inertia_gen())?;
    ConcreteRep::new(field.clone(), group.clone(), r_f, r_u)
}

/// 2-dimensional induction from a quadratic extension.
pub fn dihedral_rep(
    field: &ExtField,
    group: &TameGroup,
    ext: QuadExt,
    chi: &SymChar,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    induce(
        field,
        group,
        &SubgroupChar::new(IndFrame::Quad(ext), *chi),
        sqrt_choice,
    )
}

/// 4-dimensional induction from the biquadratic extension.
pub fn induce_biquadratic(
    field: &ExtField,
    group: &TameGroup,
    chi: &SymChar,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    induce(
        field,
        group,
        &SubgroupChar::new(IndFrame::Biquadratic, *chi),
        sqrt_choice,
    )
}

/// Accumulated symbolic value of one matrix entry product: the subgroup
/// character raised to frob_gen-steps x and inertia-steps y, with a sign.
#[derive(Debug, Clone, Copy)]
struct DetAccum {
    sum_x: i128,
    sum_y: i128,
    odd_sign: bool,
}

/// Symbolic determinant of the induced representation, as a character of
/// the full group: sign of the coset permutation times the product of the
/// subgroup-character values along the permutation.
pub fn induced_det_char(ell: u64, sub: &SubgroupChar) -> SymChar {
    // Surrogate group for exact coset arithmetic: m a multiple of
    // 2 * step * n_i keeps inertia exponents correct mod n_i, and any
    // even r >= 4 with ell^r = 1 mod m works because the Frobenius-step
    // counts that occur are 0, 1, or 2.
    let step = sub.frame.inertia_step();
    let n_i = sub.chi.inertia_order();
    let m = 2 * step * n_i;
    let mut r = 4;
    while crate::ff::pow_mod_pub(ell % m, r, m) != 1 % m {
        r += 2;
    }
    let group = TameGroup::new(ell, r, m).expect("surrogate group");
    let cosets: Vec<TameElt> = sub
        .frame
        .cosets()
        .into_iter()
        .map(|(a, b)| group.make(a, b))
        .collect();
    let det_on = |g: TameElt| -> DetAccum {
        let mut acc = DetAccum {
            sum_x: 0,
            sum_y: 0,
            odd_sign: false,
        };
        let mut perm = Vec::new();
        for &tj in &cosets {
            let gtj = group.mul(g, tj);
            for (i, &ti) in cosets.iter().enumerate() {
                let h = group.mul(group.inv(ti), gtj);
                if sub.frame.contains(h) {
                    let (x, y) = sub.frame.decompose(&group, h).expect("in subgroup");
                    acc.sum_x += x as i128;
                    acc.sum_y += y as i128;
                    perm.push(i);
                    break;
                }
            }
        }
        let mut swaps = 0;
        let mut p = perm;
        for i in 0..p.len() {
            while p[i] != i {
                let t = p[i];
                p.swap(i, t);
                swaps += 1;
            }
        }
        acc.odd_sign = swaps % 2 == 1;
        acc
    };
    let on_f = det_on(group.frobenius());
    let on_u = det_on(group.inertia_gen());
    debug_assert_eq!(on_u.sum_x, 0, "inertia determinant must have finite order");
    let f_deg = sub.frame.residue_degree() as i64;
    let n_f = sub.chi.frob_order();
    let value_root = |acc: &DetAccum| -> SymChar {
        let a = SymChar::unramified(
            ell,
            n_f,
            (sub.chi.frob_exp() as i128 * acc.sum_x).rem_euclid(n_f as i128) as i64,
        );
        let b = SymChar::unramified(
            ell,
            n_i,
            (sub.chi.inertia_exp() as i128 * acc.sum_y).rem_euclid(n_i as i128) as i64,
        );
        let mut v = a.mul(&b);
        if acc.odd_sign {
            v = v.mul(&SymChar::unramified(ell, 2, 1));
        }
        v
    };
    let root_f = value_root(&on_f);
    let root_u = value_root(&on_u);
    // each frob_gen step carries ell_eff^{e/2} = ell^{f*e/2}
    let cyclo = sub.chi.cyclo_num() * f_deg * on_f.sum_x as i64;
    SymChar::new(
        ell,
        root_f.frob_order(),
        root_f.frob_exp() as i64,
        cyclo,
        root_u.frob_order(),
        root_u.frob_exp() as i64,
    )
}

/// Basis of the alternating 4x4 matrices: E_ij - E_ji for i < j.
fn alternating_basis(field: &ExtField) -> Vec<FMatrix> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    pairs
        .iter()
        .map(|&(i, j)| {
            let mut m = FMatrix::zeros(field, 4, 4);
            m[(i, j)] = field.one();
            m[(j, i)] = -&field.one();
            m
        })
        .collect()
}

fn alternating_coords(b: &FMatrix) -> Vec<FqElem> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    pairs.iter().map(|&(i, j)| b[(i, j)].clone()).collect()
}

/// A nondegenerate alternating form B with rho(g)^t B rho(g) = c(g) B for
/// the prescribed similitude values on the generators, if one exists.
pub fn invariant_alternating_form(
    rep: &ConcreteRep,
    c_f: &FqElem,
    c_u: &FqElem,
) -> Option<FMatrix> {
    let field = rep.field();
    let basis = alternating_basis(field);
    let operator = |g: &FMatrix, c: &FqElem| -> FMatrix {
        let gt = g.transpose();
        let mut m = FMatrix::zeros(field, 6, 6);
        for (col, bk) in basis.iter().enumerate() {
            let image = gt.mul(bk).mul(g);
            let coords = alternating_coords(&image);
            for (row, v) in coords.into_iter().enumerate() {
                m[(row, col)] = v;
            }
        }
        m.sub(&FMatrix::identity(field, 6).scale(c))
    };
    let stacked = operator(rep.frobenius_image(), c_f).vstack(&operator(rep.inertia_image(), c_u));
    let kernel = stacked.kernel_basis();
    let realize = |coords: &[FqElem]| -> FMatrix {
        let mut b = FMatrix::zeros(field, 4, 4);
        for (k, v) in coords.iter().enumerate() {
            b = b.add(&basis[k].scale(v));
        }
        b
    };
    // try kernel vectors, then pairwise sums, for a nondegenerate form
    for v in &kernel {
        let b = realize(v);
        if b.inverse().is_some() {
            return Some(b);
        }
    }
    for (idx, v) in kernel.iter().enumerate() {
        for w in &kernel[idx + 1..] {
            let sum: Vec<FqElem> = v.iter().zip(w).map(|(a, b)| a + b).collect();
            let b = realize(&sum);
            if b.inverse().is_some() {
                return Some(b);
            }
        }
    }
    None
}

/// Basis change T with T^t B T = J, for nondegenerate alternating B over
/// odd characteristic.
pub fn symplectic_basis_change(b: &FMatrix) -> Option<FMatrix> {
    let field = b.field();
    if field.characteristic() == 2 {
        return None;
    }
    let pair = |x: &[FqElem], y: &[FqElem]| -> FqElem {
        let by = b.mul_vec(y);
        x.iter()
            .zip(&by)
            .fold(field.zero(), |acc, (xi, byi)| &acc + &(xi * byi))
    };
    let e = |k: usize| -> Vec<FqElem> {
        (0..4)
            .map(|i| if i == k { field.one() } else { field.zero() })
            .collect()
    };
    let f0 = e(0);
    let j = (1..4).find(|&j| !pair(&f0, &e(j)).is_zero())?;
    let scale = pair(&f0, &e(j)).inv().ok()?;
    let f3: Vec<FqElem> = e(j).iter().map(|v| v * &scale).collect();
    // complement: vectors orthogonal to f0 and f3 under B
    let rows = FMatrix::from_fn(field, 2, 4, |r, c| {
        let v = if r == 0 { &f0 } else { &f3 };
        // row = v^t B
        let mut acc = field.zero();
        for k in 0..4 {
            acc = &acc + &(&v[k] * &b[(k, c)]);
        }
        acc
    });
    let comp = rows.kernel_basis();
    if comp.len() != 2 {
        return None;
    }
    let c = pair(&comp[0], &comp[1]);
    let cinv = c.inv().ok()?;
    let f1 = comp[0].clone();
    let f2: Vec<FqElem> = comp[1].iter().map(|v| v * &cinv).collect();
    let t = FMatrix::from_fn(field, 4, 4, |i, col| [&f0, &f1, &f2, &f3][col][i].clone());
    // confirm the Gram matrix is exactly J
    let gram = t.transpose().mul(b).mul(&t);
    if gram == crate::symplectic::symplectic_form(field) {
        Some(t)
    } else {
        None
    }
}
