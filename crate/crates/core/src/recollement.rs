//! The recollement `(mod Γ/ΓeΓ, mod Γ, mod eΓe)` of an idempotent `e`.
//!
//! Functor names follow the inclusion `e_incl : mod Γ/ΓeΓ -> mod Γ` with
//! adjoints `e_λ ⊣ e_incl ⊣ e_ρ`, and the quotient `q = (-)e : mod Γ -> mod eΓe`
//! with adjoints `q_λ ⊣ q ⊣ q_ρ`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar, Subspace};
use crate::module::{find_isomorphism, hom_basis, vertex_count, HomSpace, ModuleHom, RightModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Functor {
    Q,
    QLambda,
    QRho,
    EIncl,
    ELambda,
    ERho,
}

impl Functor {
    pub const ALL: [Functor; 6] = [Functor::Q, Functor::QLambda, Functor::QRho, Functor::EIncl, Functor::ELambda, Functor::ERho];

    pub fn name(self) -> &'static str {
        match self {
            Functor::Q => "q",
            Functor::QLambda => "q_lambda",
            Functor::QRho => "q_rho",
            Functor::EIncl => "e",
            Functor::ELambda => "e_lambda",
            Functor::ERho => "e_rho",
        }
    }
}

/// The four adjoint pairs, named by their left adjoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Adjunction {
    /// `q_λ ⊣ q`
    QLambdaQ,
    /// `q ⊣ q_ρ`
    QQRho,
    /// `e_λ ⊣ e`
    ELambdaE,
    /// `e ⊣ e_ρ`
    EERho,
}

impl Adjunction {
    pub const ALL: [Adjunction; 4] = [Adjunction::QLambdaQ, Adjunction::QQRho, Adjunction::ELambdaE, Adjunction::EERho];

    pub fn functors(self) -> (Functor, Functor) {
        match self {
            Adjunction::QLambdaQ => (Functor::QLambda, Functor::Q),
            Adjunction::QQRho => (Functor::Q, Functor::QRho),
            Adjunction::ELambdaE => (Functor::ELambda, Functor::EIncl),
            Adjunction::EERho => (Functor::EIncl, Functor::ERho),
        }
    }

    pub fn name(self) -> String {
        let (l, r) = self.functors();
        format!("{} -| {}", l.name(), r.name())
    }
}

#[derive(Clone, Debug)]
enum Kind {
    /// Submodule on these rows of the input.
    Sub(Subspace),
    /// Quotient of the input by this subspace.
    Quot(Subspace),
    /// Quotient of `Y ⊗ eΓ` by the balancing relations.
    Tensor(Subspace),
    /// `Hom_{eΓe}(Γe, Y)` with this basis.
    Hom(HomSpace),
    /// Same underlying space.
    Same,
}

/// A functor applied to a module, with what is needed to apply it to maps.
#[derive(Clone, Debug)]
pub struct Image {
    pub module: RightModule,
    kind: Kind,
}

/// `A -> B -> C -> D` with exactness recorded position by position.
#[derive(Clone, Debug)]
pub struct FourTermSequence {
    pub objects: [RightModule; 4],
    pub maps: [ModuleHom; 3],
}

impl FourTermSequence {
    pub fn new(f: ModuleHom, g: ModuleHom, h: ModuleHom) -> FourTermSequence {
        let objects = [f.source().clone(), g.source().clone(), h.source().clone(), h.target().clone()];
        FourTermSequence { objects, maps: [f, g, h] }
    }

    /// `[mono at A, exact at B, exact at C, epi at D]`
    pub fn exactness(&self) -> [bool; 4] {
        let [f, g, h] = &self.maps;
        let at = |a: &ModuleHom, b: &ModuleHom| a.matrix().mul(b.matrix()).is_zero() && a.rank() + b.rank() == b.source().dim();
        [f.is_mono(), at(f, g), at(g, h), h.is_epi()]
    }

    pub fn is_exact(&self) -> bool {
        self.exactness().iter().all(|&b| b)
    }

    pub fn dims(&self) -> [usize; 4] {
        [self.objects[0].dim(), self.objects[1].dim(), self.objects[2].dim(), self.objects[3].dim()]
    }
}

/// Maps `φ_A, φ_B, φ_C, φ_D` between two four-term sequences making every
/// square commute.
#[derive(Clone, Debug)]
pub struct SequenceIso {
    pub maps: [ModuleHom; 4],
    /// Whether `φ_C` is the only solution once `φ_B` is the identity.
    pub unique: bool,
}

/// Compares two exact sequences through the same object `B`, extending the
/// identity of `B`. `None` when no isomorphism of sequences exists.
pub fn compare_sequences(s: &FourTermSequence, t: &FourTermSequence) -> Result<Option<SequenceIso>> {
    let b = &s.objects[1];
    if t.objects[1] != *b {
        return Err(Error::Precondition("sequences do not share their second term".into()));
    }
    let f = b.field();
    let id = ModuleHom::identity(b);
    let (u, u2) = (&s.maps[1], &t.maps[1]);
    // φ_C with u φ_C = u'
    let hs = hom_basis(&s.objects[2], &t.objects[2])?;
    let imgs: Vec<Mat> = hs.basis().iter().map(|h| u.matrix().mul(h)).collect();
    let Some(c) = crate::module::solve_combination(&imgs, u2.matrix()) else {
        return Ok(None);
    };
    let hom_c = hs.element(&c);
    let unique = {
        let n = b.dim() * t.objects[2].dim();
        Subspace::span(f, n, &imgs.iter().map(Mat::flatten).collect::<Vec<_>>()).dim() == hs.dim()
    };
    let phi_c = ModuleHom::raw(&s.objects[2], &t.objects[2], hom_c);
    // φ_A: f' restricted, A -> A' with φ_A f' = f
    let Some(phi_a) = t.maps[0].lift_along(&s.maps[0])? else {
        return Ok(None);
    };
    // φ_D with h φ_D = φ_C h'
    let target = phi_c.then(&t.maps[2])?;
    let Some(phi_d) = s.maps[2].extend_along(&target)? else {
        return Ok(None);
    };
    let maps = [phi_a, id, phi_c, phi_d];
    if !maps.iter().all(|m| m.is_iso() && m.intertwines()) {
        return Ok(None);
    }
    for i in 0..3 {
        let lhs = s.maps[i].then(&maps[i + 1])?;
        let rhs = maps[i].then(&t.maps[i])?;
        if lhs.matrix() != rhs.matrix() {
            return Ok(None);
        }
    }
    Ok(Some(SequenceIso { maps, unique }))
}

#[derive(Clone, Debug)]
pub struct Recollement {
    gamma: Algebra,
    e: Vec<Scalar>,
    corner: Algebra,
    /// Rows: corner basis in `Γ` coordinates.
    corner_basis: Mat,
    ideal: Subspace,
    quotient: Algebra,
    /// `Γ`-basis indices of the quotient basis.
    quotient_index: Vec<usize>,
    /// `Γ` coordinates to quotient coordinates.
    quotient_map: Mat,
    /// `eΓ`, as rows in `Γ` coordinates.
    e_gamma: Subspace,
    /// `Γe` as a right `eΓe`-module, its basis the rows of `gamma_e`.
    gamma_e: Subspace,
    gamma_e_module: RightModule,
}

impl Recollement {
    pub fn new(gamma: &Algebra, e: &[Scalar]) -> Result<Recollement> {
        if e.len() != gamma.dim() {
            return Err(Error::Shape("idempotent has the wrong length".into()));
        }
        if gamma.mul(e, e) != e {
            return Err(Error::Precondition("element is not idempotent".into()));
        }
        let f = gamma.field();
        let n = gamma.dim();
        let ebe = |v: &[Scalar]| gamma.mul(&gamma.mul(e, v), e);
        // corner basis: basis elements fixed by e(-)e when they span, else reduced rows
        let fixed: Vec<usize> = (0..n).filter(|&i| ebe(&gamma.basis_vector(i)) == gamma.basis_vector(i)).collect();
        let all: Vec<Vec<Scalar>> = (0..n).map(|i| ebe(&gamma.basis_vector(i))).collect();
        let span = Subspace::span(f, n, &all);
        let (corner_basis, labels) = if fixed.len() == span.dim() {
            let rows = fixed.iter().map(|&i| gamma.basis_vector(i)).collect();
            (Mat::from_rows(f, n, rows), fixed.iter().map(|&i| gamma.label(i).to_string()).collect())
        } else {
            let b = span.basis().clone();
            let labels = (0..b.rows()).map(|i| format!("c{i}")).collect();
            (b, labels)
        };
        let corner = gamma.subalgebra(&corner_basis, e, labels)?;
        // ΓeΓ
        let mut rows = Vec::new();
        for i in 0..n {
            let be = gamma.mul(&gamma.basis_vector(i), e);
            for j in 0..n {
                rows.push(gamma.mul(&be, &gamma.basis_vector(j)));
            }
        }
        let ideal = Subspace::span(f, n, &rows);
        let quotient = gamma.quotient(&ideal);
        let quotient_index = ideal.complement_indices();
        let quotient_map = ideal.quotient_map();
        let e_gamma = Subspace::row_space(&gamma.right_ideal_basis(e));
        let gamma_e = Subspace::span(f, n, &(0..n).map(|i| gamma.mul(&gamma.basis_vector(i), e)).collect::<Vec<_>>());
        let action = corner_basis
            .row_iter()
            .map(|c| {
                let m = gamma_e.basis().mul(&gamma.right_mult(c));
                gamma_e.coords_of_rows(&m)
            })
            .collect();
        let gamma_e_module = RightModule::new(&corner, gamma_e.dim(), action)?;
        Ok(Recollement {
            gamma: gamma.clone(),
            e: e.to_vec(),
            corner,
            corner_basis,
            ideal,
            quotient,
            quotient_index,
            quotient_map,
            e_gamma,
            gamma_e,
            gamma_e_module,
        })
    }

    pub fn gamma(&self) -> &Algebra {
        &self.gamma
    }

    pub fn idempotent(&self) -> &[Scalar] {
        &self.e
    }

    /// `eΓe`
    pub fn corner(&self) -> &Algebra {
        &self.corner
    }

    /// `Γ/ΓeΓ`
    pub fn quotient(&self) -> &Algebra {
        &self.quotient
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn corner_basis(&self) -> &Mat {
        &self.corner_basis
    }

    pub fn quotient_index(&self) -> &[usize] {
        &self.quotient_index
    }

    /// The algebra a functor takes its input over.
    pub fn domain(&self, which: Functor) -> &Algebra {
        match which {
            Functor::Q | Functor::ELambda | Functor::ERho => &self.gamma,
            Functor::QLambda | Functor::QRho => &self.corner,
            Functor::EIncl => &self.quotient,
        }
    }

    pub fn codomain(&self, which: Functor) -> &Algebra {
        match which {
            Functor::QLambda | Functor::QRho | Functor::EIncl => &self.gamma,
            Functor::Q => &self.corner,
            Functor::ELambda | Functor::ERho => &self.quotient,
        }
    }

    /// Whether `X e = 0`.
    pub fn killed_by_e(&self, x: &RightModule) -> bool {
        x.act_element(&self.e).is_zero()
    }

    pub fn apply(&self, which: Functor, x: &RightModule) -> Result<Image> {
        if x.algebra() != self.domain(which) {
            return Err(Error::AlgebraMismatch);
        }
        match which {
            Functor::Q => Ok(self.q(x)),
            Functor::QLambda => self.q_lambda(x),
            Functor::QRho => self.q_rho(x),
            Functor::EIncl => self.e_incl(x),
            Functor::ELambda => Ok(self.e_lambda(x)),
            Functor::ERho => Ok(self.e_rho(x)),
        }
    }

    pub fn module(&self, which: Functor, x: &RightModule) -> Result<RightModule> {
        Ok(self.apply(which, x)?.module)
    }

    fn q(&self, x: &RightModule) -> Image {
        let s = Subspace::row_space(&x.act_element(&self.e));
        let action = self.corner_basis.row_iter().map(|c| s.coords_of_rows(&s.basis().mul(&x.act_element(c)))).collect();
        Image { module: RightModule::raw(&self.corner, s.dim(), action), kind: Kind::Sub(s) }
    }

    fn restrict_to_quotient(&self, m: &RightModule) -> RightModule {
        let action = self.quotient_index.iter().map(|&i| m.action(i).clone()).collect();
        RightModule::raw(&self.quotient, m.dim(), action)
    }

    fn e_lambda(&self, x: &RightModule) -> Image {
        let me = x.act_element(&self.e);
        let gens: Vec<Vec<Scalar>> = me.row_iter().map(|r| r.to_vec()).collect();
        let s = x.generated(&gens);
        let (quo, _) = x.quotient(&s);
        Image { module: self.restrict_to_quotient(&quo), kind: Kind::Quot(s) }
    }

    fn e_rho(&self, x: &RightModule) -> Image {
        let f = x.field();
        let me = x.act_element(&self.e);
        let mats: Vec<Mat> = x.actions().iter().map(|m| m.mul(&me)).collect();
        let s = if x.dim() == 0 { Subspace::zero(f, 0) } else { Subspace::row_space(&Mat::hstack_all(f, x.dim(), &mats).left_kernel()) };
        let (sub, _) = x.submodule_on(&s);
        Image { module: self.restrict_to_quotient(&sub), kind: Kind::Sub(s) }
    }

    fn e_incl(&self, z: &RightModule) -> Result<Image> {
        let action = (0..self.gamma.dim()).map(|i| z.act_element(self.quotient_map.row(i))).collect();
        let m = RightModule::raw(&self.gamma, z.dim(), action);
        debug_assert!(m.check().is_ok());
        Ok(Image { module: m, kind: Kind::Same })
    }

    fn tensor_dims(&self, y: &RightModule) -> (usize, usize) {
        (y.dim(), self.e_gamma.dim())
    }

    /// `Y ⊗_{eΓe} eΓ` as the quotient of `Y ⊗ eΓ` by `yc ⊗ g - y ⊗ cg`.
    fn q_lambda(&self, y: &RightModule) -> Result<Image> {
        let f = y.field();
        let (m, w) = self.tensor_dims(y);
        let wb = self.e_gamma.basis();
        let id_m = Mat::identity(f, m);
        let id_w = Mat::identity(f, w);
        let mut rels = Vec::new();
        for (j, c) in self.corner_basis.row_iter().enumerate() {
            let lc = self.e_gamma.coords_of_rows(&wb.mul(&self.gamma.left_mult(c)));
            let r = y.action(j).kron(&id_w).sub(&id_m.kron(&lc));
            rels.push(r);
        }
        let rel = if rels.is_empty() { Subspace::zero(f, m * w) } else { Subspace::row_space(&Mat::vstack_all(f, m * w, &rels)) };
        let action = self.gamma.right_basis_mult().iter().map(|rb| id_m.kron(&self.e_gamma.coords_of_rows(&wb.mul(rb)))).collect();
        let big = RightModule::raw(&self.gamma, m * w, action);
        let (quo, _) = big.quotient(&rel);
        Ok(Image { module: quo, kind: Kind::Tensor(rel) })
    }

    /// `Hom_{eΓe}(Γe, Y)` with `(φ γ)(z) = φ(γ z)`.
    fn q_rho(&self, y: &RightModule) -> Result<Image> {
        let f = y.field();
        let hs = hom_basis(&self.gamma_e_module, y)?;
        let gb = self.gamma_e.basis();
        let action = self
            .gamma
            .left_basis_mult()
            .iter()
            .map(|lb| {
                let l = self.gamma_e.coords_of_rows(&gb.mul(lb));
                Mat::from_rows(f, hs.dim(), hs.basis().iter().map(|p| hs.coords_of(&l.mul(p))).collect())
            })
            .collect();
        let m = RightModule::raw(&self.gamma, hs.dim(), action);
        debug_assert!(m.check().is_ok());
        Ok(Image { module: m, kind: Kind::Hom(hs) })
    }

    /// A functor on a map, between already computed images.
    pub fn apply_map(&self, which: Functor, g: &ModuleHom, src: &Image, tgt: &Image) -> Result<ModuleHom> {
        let gm = g.matrix();
        let m = match (&src.kind, &tgt.kind) {
            (Kind::Sub(a), Kind::Sub(b)) => b.coords_of_rows(&a.basis().mul(gm)),
            (Kind::Quot(a), Kind::Quot(b)) => induced_on_quotients(a, b, gm),
            (Kind::Tensor(a), Kind::Tensor(b)) => {
                let w = self.e_gamma.dim();
                let big = gm.kron(&Mat::identity(g.source().field(), w));
                induced_on_quotients(a, b, &big)
            }
            (Kind::Hom(a), Kind::Hom(b)) => {
                let f = g.source().field();
                Mat::from_rows(f, b.dim(), a.basis().iter().map(|p| b.coords_of(&p.mul(gm))).collect())
            }
            (Kind::Same, Kind::Same) => gm.clone(),
            _ => return Err(Error::Precondition(format!("images of {} do not match", which.name()))),
        };
        Ok(ModuleHom::raw(&src.module, &tgt.module, m))
    }

    /// `F(g)`, computing both images.
    pub fn map(&self, which: Functor, g: &ModuleHom) -> Result<ModuleHom> {
        let s = self.apply(which, g.source())?;
        let t = self.apply(which, g.target())?;
        self.apply_map(which, g, &s, &t)
    }

    /// Unit `X -> R L X` of an adjoint pair.
    pub fn unit(&self, adj: Adjunction, x: &RightModule) -> Result<ModuleHom> {
        let (l, r) = adj.functors();
        let lx = self.apply(l, x)?;
        let rlx = self.apply(r, &lx.module)?;
        let f = x.field();
        let m = match adj {
            // y -> y ⊗ e
            Adjunction::QLambdaQ => {
                let Kind::Tensor(rel) = &lx.kind else { unreachable!() };
                let Kind::Sub(sub) = &rlx.kind else { unreachable!() };
                let w = self.e_gamma.dim();
                let ecoords = self.e_gamma.coords(&self.e).expect("e lies in eΓ");
                let rows: Vec<Vec<Scalar>> = (0..x.dim())
                    .map(|a| {
                        let mut v = vec![Scalar::ZERO; x.dim() * w];
                        v[a * w..(a + 1) * w].clone_from_slice(&ecoords);
                        v
                    })
                    .collect();
                let tens = Mat::from_rows(f, x.dim() * w, rows).mul(&rel.quotient_map());
                sub.coords_of_rows(&tens)
            }
            // x -> (z -> x z)
            Adjunction::QQRho => {
                let Kind::Sub(xe) = &lx.kind else { unreachable!() };
                let Kind::Hom(hs) = &rlx.kind else { unreachable!() };
                let zs: Vec<Mat> = self.gamma_e.basis().row_iter().map(|z| x.act_element(z)).collect();
                let rows = (0..x.dim())
                    .map(|a| {
                        let img = Mat::from_rows(f, x.dim(), zs.iter().map(|zm| zm.row(a).to_vec()).collect());
                        hs.coords_of(&xe.coords_of_rows(&img))
                    })
                    .collect();
                Mat::from_rows(f, hs.dim(), rows)
            }
            // the quotient map
            Adjunction::ELambdaE => {
                let Kind::Quot(s) = &lx.kind else { unreachable!() };
                s.quotient_map()
            }
            Adjunction::EERho => {
                let Kind::Sub(s) = &rlx.kind else { unreachable!() };
                s.coords_of_rows(&Mat::identity(f, x.dim()))
            }
        };
        let h = ModuleHom::raw(x, &rlx.module, m);
        debug_assert!(h.intertwines());
        Ok(h)
    }

    /// Counit `L R Y -> Y` of an adjoint pair.
    pub fn counit(&self, adj: Adjunction, y: &RightModule) -> Result<ModuleHom> {
        let (l, r) = adj.functors();
        let ry = self.apply(r, y)?;
        let lry = self.apply(l, &ry.module)?;
        let f = y.field();
        let m = match adj {
            // x ⊗ w -> x w
            Adjunction::QLambdaQ => {
                let Kind::Sub(ye) = &ry.kind else { unreachable!() };
                let Kind::Tensor(rel) = &lry.kind else { unreachable!() };
                let mut rows = Vec::new();
                let ws: Vec<Mat> = self.e_gamma.basis().row_iter().map(|w| y.act_element(w)).collect();
                for u in ye.basis().row_iter() {
                    for wm in &ws {
                        rows.push(wm.apply(u));
                    }
                }
                let big = Mat::from_rows(f, y.dim(), rows);
                big.select_rows(&rel.complement_indices())
            }
            // φ -> φ(e)
            Adjunction::QQRho => {
                let Kind::Hom(hs) = &ry.kind else { unreachable!() };
                let Kind::Sub(sub) = &lry.kind else { unreachable!() };
                let ev = self.gamma_e.coords(&self.e).expect("e lies in Γe");
                let rows = sub.basis().row_iter().map(|phi| hs.element(phi).apply(&ev)).collect();
                Mat::from_rows(f, y.dim(), rows)
            }
            Adjunction::ELambdaE => {
                // e_λ e Z -> Z; nothing of eZ survives, the quotient is trivial
                let Kind::Quot(s) = &lry.kind else { unreachable!() };
                Mat::identity(f, y.dim()).select_rows(&s.complement_indices())
            }
            Adjunction::EERho => {
                let Kind::Sub(s) = &ry.kind else { unreachable!() };
                s.basis().clone()
            }
        };
        let h = ModuleHom::raw(&lry.module, y, m);
        debug_assert!(h.intertwines());
        Ok(h)
    }

    /// `0 -> e e_ρ X -> X -> q_ρ q X -> Y -> 0`
    pub fn right_defining_sequence(&self, x: &RightModule) -> Result<FourTermSequence> {
        let eps = self.counit(Adjunction::EERho, x)?;
        let eta = self.unit(Adjunction::QQRho, x)?;
        let (_, coker) = eta.cokernel();
        Ok(FourTermSequence::new(eps, eta, coker))
    }

    /// `0 -> Y -> q_λ q X -> X -> e e_λ X -> 0`; the first term is returned
    /// as the kernel of the counit.
    pub fn left_defining_sequence(&self, x: &RightModule) -> Result<FourTermSequence> {
        let eps = self.counit(Adjunction::QLambdaQ, x)?;
        let eta = self.unit(Adjunction::ELambdaE, x)?;
        let (_, k) = eps.kernel();
        Ok(FourTermSequence::new(k, eps, eta))
    }

    /// `(#simples Γ, #simples Γ/ΓeΓ, #simples eΓe)`
    pub fn simple_counts(&self) -> Result<(usize, usize, usize)> {
        Ok((vertex_count(&self.gamma)?, vertex_count(&self.quotient)?, vertex_count(&self.corner)?))
    }

    /// Checks one adjoint pair on all pairs `(X, Y)` with `X` in the domain
    /// of the left adjoint and `Y` in the domain of the right adjoint.
    pub fn verify_adjunction(&self, adj: Adjunction, xs: &[RightModule], ys: &[RightModule]) -> Result<AdjunctionReport> {
        let (l, r) = adj.functors();
        let f = self.gamma.field();
        let lx: Vec<Image> = xs.iter().map(|x| self.apply(l, x)).collect::<Result<_>>()?;
        let rlx: Vec<Image> = lx.iter().map(|i| self.apply(r, &i.module)).collect::<Result<_>>()?;
        let ry: Vec<Image> = ys.iter().map(|y| self.apply(r, y)).collect::<Result<_>>()?;
        let units: Vec<ModuleHom> = xs.iter().map(|x| self.unit(adj, x)).collect::<Result<_>>()?;
        let mut pairs = Vec::new();
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                let left = hom_basis(&lx[i].module, y)?;
                let right = hom_basis(x, &ry[j].module)?;
                let mut rows = Vec::new();
                for g in left.homs() {
                    let rg = self.apply_map(r, &g, &rlx[i], &ry[j])?;
                    rows.push(units[i].then(&rg)?.matrix().flatten());
                }
                let n = x.dim() * ry[j].module.dim();
                let rank = Subspace::span(f, n, &rows).dim();
                pairs.push(PairCheck {
                    x: i,
                    y: j,
                    hom_left: left.dim(),
                    hom_right: right.dim(),
                    bijective: rank == left.dim() && rank == right.dim(),
                });
            }
        }
        // naturality of the unit on hom bases
        let mut natural = true;
        for (i, x) in xs.iter().enumerate() {
            for (k, x2) in xs.iter().enumerate() {
                for h in hom_basis(x, x2)?.homs() {
                    let lh = self.apply_map(l, &h, &lx[i], &lx[k])?;
                    let rlh = self.apply_map(r, &lh, &rlx[i], &rlx[k])?;
                    let a = units[i].then(&rlh)?;
                    let b = h.then(&units[k])?;
                    if a.matrix() != b.matrix() {
                        natural = false;
                    }
                }
            }
        }
        let pass = natural && pairs.iter().all(|p| p.hom_left == p.hom_right && p.bijective);
        Ok(AdjunctionReport { adjunction: adj.name(), pairs, natural, pass })
    }

    /// `F(id) = id` and `F(g f) = F(g) F(f)` on hom bases of the test modules.
    pub fn verify_functoriality(&self, which: Functor, mods: &[RightModule]) -> Result<bool> {
        let imgs: Vec<Image> = mods.iter().map(|m| self.apply(which, m)).collect::<Result<_>>()?;
        for (i, m) in mods.iter().enumerate() {
            let id = self.apply_map(which, &ModuleHom::identity(m), &imgs[i], &imgs[i])?;
            if !id.matrix().is_identity() {
                return Ok(false);
            }
        }
        let n = mods.len();
        let homs: Vec<Vec<Vec<ModuleHom>>> = (0..n)
            .map(|i| (0..n).map(|j| hom_basis(&mods[i], &mods[j]).map(|h| h.homs())).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for f1 in &homs[a][b] {
                        for f2 in &homs[b][c] {
                            let comp = f1.then(f2)?;
                            let lhs = self.apply_map(which, &comp, &imgs[a], &imgs[c])?;
                            let g1 = self.apply_map(which, f1, &imgs[a], &imgs[b])?;
                            let g2 = self.apply_map(which, f2, &imgs[b], &imgs[c])?;
                            if *lhs.matrix() != g1.matrix().mul(g2.matrix()) {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// (R2) and (R3) over test modules for each of the three categories.
    pub fn verify_axioms(
        &self,
        gamma_mods: &[RightModule],
        corner_mods: &[RightModule],
        quotient_mods: &[RightModule],
    ) -> Result<AxiomReport> {
        let mut checks = Vec::new();
        let mut push = |name: String, ok: bool| checks.push(Check { name, pass: ok });
        for (i, y) in corner_mods.iter().enumerate() {
            push(format!("q q_lambda ~ id on corner module {i}"), self.unit(Adjunction::QLambdaQ, y)?.is_iso());
            push(format!("q q_rho ~ id on corner module {i}"), self.counit(Adjunction::QQRho, y)?.is_iso());
        }
        for (i, z) in quotient_mods.iter().enumerate() {
            push(format!("e_lambda e ~ id on quotient module {i}"), self.counit(Adjunction::ELambdaE, z)?.is_iso());
            push(format!("e_rho e ~ id on quotient module {i}"), self.unit(Adjunction::EERho, z)?.is_iso());
            let ez = self.module(Functor::EIncl, z)?;
            push(format!("q e = 0 on quotient module {i}"), self.module(Functor::Q, &ez)?.is_zero());
        }
        for (i, x) in gamma_mods.iter().enumerate() {
            let killed = self.killed_by_e(x);
            let in_image = self.unit(Adjunction::ELambdaE, x)?.is_iso();
            push(format!("Xe = 0 iff X in Im e on module {i}"), killed == in_image);
        }
        let pass = checks.iter().all(|c| c.pass);
        Ok(AxiomReport { checks, pass })
    }

    /// Exactness of `q`, `q q_ρ ≅ id`, `Ker q = Im e` and the simple count.
    pub fn verify_serre_quotient(
        &self,
        gamma_mods: &[RightModule],
        corner_mods: &[RightModule],
        quotient_mods: &[RightModule],
    ) -> Result<SerreReport> {
        let mut exact = true;
        for x in gamma_mods {
            for y in gamma_mods {
                for g in hom_basis(x, y)?.homs() {
                    let qg = self.map(Functor::Q, &g)?;
                    let (k, _) = g.kernel();
                    let (c, _) = g.cokernel();
                    let qk = self.module(Functor::Q, &k)?.dim();
                    let qc = self.module(Functor::Q, &c)?.dim();
                    if qk != qg.kernel().0.dim() || qc != qg.cokernel().0.dim() {
                        exact = false;
                    }
                }
            }
        }
        let mut counit_iso = true;
        for y in corner_mods {
            counit_iso &= self.counit(Adjunction::QQRho, y)?.is_iso();
        }
        // Ker q among the Γ test modules versus the image of e
        let kernel: Vec<&RightModule> = gamma_mods.iter().filter(|x| self.killed_by_e(x)).collect();
        let images: Vec<RightModule> = quotient_mods.iter().map(|z| self.module(Functor::EIncl, z)).collect::<Result<_>>()?;
        let mut kernel_matches = kernel.len() == images.len();
        for x in &kernel {
            let mut hit = false;
            for z in &images {
                if z.dim() == x.dim() && find_isomorphism(x, z)?.is_some() {
                    hit = true;
                    break;
                }
            }
            kernel_matches &= hit;
        }
        let (g, q, c) = self.simple_counts()?;
        let pass = exact && counit_iso && kernel_matches && g == q + c;
        Ok(SerreReport { q_exact: exact, counit_iso, kernel_matches, simples: (g, q, c), pass })
    }
}

fn induced_on_quotients(a: &Subspace, b: &Subspace, m: &Mat) -> Mat {
    m.select_rows(&a.complement_indices()).mul(&b.quotient_map())
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub x: usize,
    pub y: usize,
    pub hom_left: usize,
    pub hom_right: usize,
    pub bijective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjunctionReport {
    pub adjunction: String,
    pub pairs: Vec<PairCheck>,
    pub natural: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SerreReport {
    pub q_exact: bool,
    pub counit_iso: bool,
    pub kernel_matches: bool,
    pub simples: (usize, usize, usize),
    pub pass: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::AddSubcategory;
    use crate::higher_ar::enumerate_indecomposables;
    use crate::module::tests::{a2, dual_numbers};
    use crate::module::{projective, simple};

    fn auslander_a2() -> AddSubcategory {
        let a = a2();
        let gens = vec![
            ("P1".to_string(), projective(&a, 0).unwrap()),
            ("P2".to_string(), projective(&a, 1).unwrap()),
            ("S1".to_string(), simple(&a, 0).unwrap()),
        ];
        AddSubcategory::new(&a, gens).unwrap()
    }

    fn auslander_dual() -> AddSubcategory {
        let a = dual_numbers();
        let gens = vec![("R".to_string(), RightModule::regular(&a)), ("S".to_string(), simple(&a, 0).unwrap())];
        AddSubcategory::new(&a, gens).unwrap()
    }

    fn testsets(r: &Recollement) -> (Vec<RightModule>, Vec<RightModule>, Vec<RightModule>) {
        let u = |a: &Algebra| enumerate_indecomposables(a, None).unwrap().indecs;
        (u(r.gamma()), u(r.corner()), u(r.quotient()))
    }

    fn full_check(r: &Recollement) {
        let (g, c, q) = testsets(r);
        for adj in Adjunction::ALL {
            let (l, rt) = adj.functors();
            let xs = if r.domain(l) == r.gamma() {
                &g
            } else if r.domain(l) == r.corner() {
                &c
            } else {
                &q
            };
            let ys = if r.domain(rt) == r.gamma() {
                &g
            } else if r.domain(rt) == r.corner() {
                &c
            } else {
                &q
            };
            let rep = r.verify_adjunction(adj, xs, ys).unwrap();
            assert!(rep.pass, "{}", rep.adjunction);
        }
        for f in Functor::ALL {
            let mods = if r.domain(f) == r.gamma() {
                &g
            } else if r.domain(f) == r.corner() {
                &c
            } else {
                &q
            };
            assert!(r.verify_functoriality(f, mods).unwrap(), "{}", f.name());
        }
        let ax = r.verify_axioms(&g, &c, &q).unwrap();
        assert!(ax.pass, "{:?}", ax.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
        let s = r.verify_serre_quotient(&g, &c, &q).unwrap();
        assert!(s.pass, "{s:?}");
        for x in &g {
            assert!(r.right_defining_sequence(x).unwrap().is_exact());
            assert!(r.left_defining_sequence(x).unwrap().is_exact());
        }
    }

    #[test]
    fn a2_auslander_recollement() {
        let b = auslander_a2();
        let e = b.idempotent_of(&["P1", "P2"]).unwrap();
        let r = Recollement::new(b.gamma(), &e).unwrap();
        assert_eq!(r.corner().dim(), 3);
        assert_eq!(r.quotient().dim(), 1);
        assert_eq!(r.simple_counts().unwrap(), (3, 1, 2));
        full_check(&r);
    }

    #[test]
    fn dual_numbers_auslander_recollement() {
        let b = auslander_dual();
        let e = b.idempotent_of(&["R"]).unwrap();
        let r = Recollement::new(b.gamma(), &e).unwrap();
        assert_eq!(r.corner().dim(), 2);
        assert_eq!(r.simple_counts().unwrap(), (2, 1, 1));
        full_check(&r);
    }

    #[test]
    fn trivial_idempotents() {
        let b = auslander_a2();
        let g = b.gamma();
        let one = Recollement::new(g, g.unit()).unwrap();
        assert_eq!(one.quotient().dim(), 0);
        assert_eq!(one.corner().dim(), g.dim());
        full_check(&one);
        let zero = Recollement::new(g, &g.zero_vector()).unwrap();
        assert_eq!(zero.corner().dim(), 0);
        assert_eq!(zero.quotient().dim(), g.dim());
        full_check(&zero);
    }

    #[test]
    fn rejects_non_idempotent() {
        let a = dual_numbers();
        assert!(matches!(Recollement::new(&a, &a.basis_vector(1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn defining_sequences_agree_for_projective_idempotent() {
        let b = auslander_a2();
        let e = b.idempotent_of(&["P1", "P2"]).unwrap();
        let r = Recollement::new(b.gamma(), &e).unwrap();
        for x in testsets(&r).0 {
            let s = r.right_defining_sequence(&x).unwrap();
            assert!(compare_sequences(&s, &s).unwrap().is_some());
        }
    }
}
