//! Comonad and cyclic approximations of para-(co)cyclic objects carrying a
//! B-structure.
//!
//! Everything is computed on the comodule side. A family with B-actions is
//! handled through its linear dual, where the transposed actions are
//! coactions of the dual bialgebra; subspaces of the dual are the
//! annihilators of the quotients the opposite-category construction asks for.

use crate::error::{Error, Result};
use crate::hopf::{BialgebraSpec, CoefficientDatum, SymmetryDatum};
use crate::lambda::Flavor;
use crate::linalg::{
    equalizer, intersect, largest_invariant_subspace, restrict_operator, Matrix, Subspace,
};
use crate::paracyclic::{
    build_t_algebra, build_t_coalgebra, certify_relations, certify_with, Orientation,
    ParaCyclicModule,
};
use crate::report::ValidationReport;
use crate::tensor::id;

/// How B enters: coactions `T_n → B ⊗ T_n` or actions `B ⊗ T_n → T_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    ComoduleSide,
    ModuleSide,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonadSpec {
    pub bialgebra: BialgebraSpec,
    pub mode: Mode,
}

/// A para-(co)cyclic module with a B-structure in every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantParaCyclic {
    pub module: ParaCyclicModule,
    pub comonad: ComonadSpec,
    /// Coaction `T_n → B ⊗ T_n` or action `B ⊗ T_n → T_n`, per degree.
    pub structure: Vec<Matrix>,
}

/// Comodule-side data the engine works on.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Working {
    family: ParaCyclicModule,
    bialgebra: BialgebraSpec,
    rho: Vec<Matrix>,
}

impl EquivariantParaCyclic {
    pub fn new(
        module: ParaCyclicModule,
        comonad: ComonadSpec,
        structure: Vec<Matrix>,
    ) -> Result<Self> {
        let d = comonad.bialgebra.dim;
        if structure.len() != module.dims.len() {
            return Err(Error::Dimension(
                "one B-structure per degree is required".into(),
            ));
        }
        for (n, s) in structure.iter().enumerate() {
            let t = module.dims[n];
            let want = match comonad.mode {
                Mode::ComoduleSide => (d * t, t),
                Mode::ModuleSide => (t, d * t),
            };
            if s.shape() != want {
                return Err(Error::Dimension(format!(
                    "B-structure in degree {n} is {:?}, expected {want:?}",
                    s.shape()
                )));
            }
        }
        Ok(EquivariantParaCyclic {
            module,
            comonad,
            structure,
        })
    }

    /// The module with the trivial structure of the ground field.
    pub fn trivial(module: ParaCyclicModule) -> Self {
        let b = BialgebraSpec::trivial(module.field);
        let structure = module.dims.iter().map(|&n| id(module.field, n)).collect();
        EquivariantParaCyclic {
            module,
            comonad: ComonadSpec {
                bialgebra: b,
                mode: Mode::ComoduleSide,
            },
            structure,
        }
    }

    pub fn mode(&self) -> Mode {
        self.comonad.mode
    }

    /// The family, bialgebra and coactions on the comodule side: unchanged
    /// for coactions, transposed (with the dual bialgebra) for actions.
    pub fn comodule_side(&self) -> (ParaCyclicModule, BialgebraSpec, Vec<Matrix>) {
        let w = self.working();
        (w.family, w.bialgebra, w.rho)
    }

    fn working(&self) -> Working {
        match self.comonad.mode {
            Mode::ComoduleSide => Working {
                family: self.module.clone(),
                bialgebra: self.comonad.bialgebra.clone(),
                rho: self.structure.clone(),
            },
            Mode::ModuleSide => Working {
                family: self.module.transpose(),
                bialgebra: self.comonad.bialgebra.dual(),
                rho: self.structure.iter().map(Matrix::transpose).collect(),
            },
        }
    }

    fn from_working(w: Working, mode: Mode, original: &BialgebraSpec) -> Self {
        let comonad = ComonadSpec {
            bialgebra: original.clone(),
            mode,
        };
        match mode {
            Mode::ComoduleSide => EquivariantParaCyclic {
                module: w.family,
                comonad,
                structure: w.rho,
            },
            Mode::ModuleSide => EquivariantParaCyclic {
                module: w.family.transpose(),
                comonad,
                structure: w.rho.iter().map(Matrix::transpose).collect(),
            },
        }
    }
}

/// `ρ_dst f − (B ⊗ f) ρ_src`, zero exactly when `f` is colinear.
fn colinearity_defect(
    b: &BialgebraSpec,
    rho: &[Matrix],
    f: &Matrix,
    src: usize,
    dst: usize,
) -> Result<(Matrix, Matrix)> {
    let lhs = rho[dst].mul(f)?;
    let rhs = id(b.field, b.dim).kron(f).mul(&rho[src])?;
    Ok((lhs, rhs))
}

/// Outcome of the pseudo-para-(co)cyclic check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PseudoParaReport {
    /// (Co)module axioms of the structure in every degree.
    pub structure: ValidationReport,
    /// Equivariance of faces `∂_j` (`j ≤ n`) and degeneracies; mandatory.
    pub simplicial: ValidationReport,
    /// Equivariance of the cyclic operators and the last faces; expected to fail in general.
    pub cyclic: ValidationReport,
}

impl PseudoParaReport {
    pub fn is_pseudo_para(&self) -> bool {
        self.structure.is_ok() && self.simplicial.is_ok()
    }

    pub fn tau_equivariant(&self) -> bool {
        self.cyclic.is_ok()
    }
}

pub fn detect_pseudo_para(t: &EquivariantParaCyclic) -> Result<PseudoParaReport> {
    let w = t.working();
    let b = &w.bialgebra;
    let fam = &w.family;
    let mut rep = PseudoParaReport::default();
    for (n, rho) in w.rho.iter().enumerate() {
        rep.structure
            .merge(&format!("degree {n}"), b.check_coaction(rho, fam.dims[n])?);
    }
    if !rep.structure.is_ok() {
        return Ok(rep);
    }
    for n in 0..fam.truncation() {
        let (src, dst) = fam.face_degrees(n);
        for j in 0..=n + 1 {
            let (l, r) = colinearity_defect(b, &w.rho, &fam.faces[n][j], src, dst)?;
            let target = if j <= n {
                &mut rep.simplicial
            } else {
                &mut rep.cyclic
            };
            target.check_equal(
                &format!("face {j} of degree {n} is equivariant"),
                &l,
                &r,
                &[fam.dims[src]],
            );
        }
        let (src, dst) = fam.degen_degrees(n);
        for i in 0..=n {
            let (l, r) = colinearity_defect(b, &w.rho, &fam.degens[n][i], src, dst)?;
            rep.simplicial.check_equal(
                &format!("degeneracy {i} of degree {n} is equivariant"),
                &l,
                &r,
                &[fam.dims[src]],
            );
        }
    }
    for n in 0..=fam.truncation() {
        let (l, r) = colinearity_defect(b, &w.rho, &fam.taus[n], n, n)?;
        rep.cyclic.check_equal(
            &format!("cyclic operator of degree {n} is equivariant"),
            &l,
            &r,
            &[fam.dims[n]],
        );
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Comonad,
    Cyclic,
}

/// Subspaces of the input family (in comodule-side coordinates) and the
/// restricted family they carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationResult {
    pub stage: Stage,
    pub mode: Mode,
    /// Per degree, the subspace of the input's comodule-side space. For
    /// module-side input these live in the dual and annihilate the kernel
    /// of the quotient map.
    pub subspaces: Vec<Subspace>,
    /// The approximation as an equivariant family in the input's own terms.
    pub output: EquivariantParaCyclic,
}

impl ApproximationResult {
    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Subspace::dim).collect()
    }

    /// Structure maps relating output and input: inclusions `out_n → in_n`
    /// on the comodule side, quotient maps `in_n → out_n` on the module side.
    pub fn embeddings(&self) -> Vec<Matrix> {
        self.subspaces
            .iter()
            .map(|s| match self.mode {
                Mode::ComoduleSide => s.basis(),
                Mode::ModuleSide => s.basis().transpose(),
            })
            .collect()
    }
}

fn restrict_family(w: &Working, subs: &[Subspace]) -> Result<Working> {
    let family = w.family.restrict(subs)?;
    let b_id = id(w.family.field, w.bialgebra.dim);
    let rho = subs
        .iter()
        .zip(&w.rho)
        .map(|(s, rho)| {
            let target = Subspace::column_space(&b_id.kron(&s.basis()));
            restrict_operator(rho, s, &target)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Working {
        family,
        bialgebra: w.bialgebra.clone(),
        rho,
    })
}

/// Checks that every operator of a comodule-side family is colinear; the
/// cyclic operators only when `with_taus`.
fn colinearity_report(w: &Working, with_taus: bool) -> Result<ValidationReport> {
    let fam = &w.family;
    let b = &w.bialgebra;
    let mut r = ValidationReport::new();
    for (n, rho) in w.rho.iter().enumerate() {
        r.merge(
            &format!("structure in degree {n}"),
            b.check_coaction(rho, fam.dims[n])?,
        );
    }
    if !r.is_ok() {
        return Ok(r);
    }
    for n in 0..fam.truncation() {
        let (src, dst) = fam.face_degrees(n);
        for (j, op) in fam.faces[n].iter().enumerate() {
            let (l, rr) = colinearity_defect(b, &w.rho, op, src, dst)?;
            r.check_equal(
                &format!("face {j} of degree {n} is equivariant"),
                &l,
                &rr,
                &[fam.dims[src]],
            );
        }
        let (src, dst) = fam.degen_degrees(n);
        for (i, op) in fam.degens[n].iter().enumerate() {
            let (l, rr) = colinearity_defect(b, &w.rho, op, src, dst)?;
            r.check_equal(
                &format!("degeneracy {i} of degree {n} is equivariant"),
                &l,
                &rr,
                &[fam.dims[src]],
            );
        }
    }
    if with_taus {
        for n in 0..=fam.truncation() {
            let (l, rr) = colinearity_defect(b, &w.rho, &fam.taus[n], n, n)?;
            r.check_equal(
                &format!("cyclic operator of degree {n} is equivariant"),
                &l,
                &rr,
                &[fam.dims[n]],
            );
        }
    }
    Ok(r)
}

/// Equivariance of every structure map: faces and degeneracies, and the
/// cyclic operators when `with_taus`.
pub fn equivariance_report(t: &EquivariantParaCyclic, with_taus: bool) -> Result<ValidationReport> {
    colinearity_report(&t.working(), with_taus)
}

/// The first equalizer `E_1` of degree `n`, cut down by the last-face pair in the cocyclic orientation.
pub fn first_equalizer(t: &EquivariantParaCyclic, n: usize) -> Result<Subspace> {
    first_equalizer_working(&t.working(), n)
}

fn first_equalizer_working(w: &Working, n: usize) -> Result<Subspace> {
    let fam = &w.family;
    let (l, r) = colinearity_defect(&w.bialgebra, &w.rho, &fam.taus[n], n, n)?;
    let mut e = equalizer(&l, &r)?;
    if fam.orientation == Orientation::Cocyclic {
        let (l, r) = colinearity_defect(&w.bialgebra, &w.rho, &fam.faces[n][n + 1], n, n + 1)?;
        e = intersect(&e, &equalizer(&l, &r)?)?;
    }
    Ok(e)
}

/// The m-th equalizer `E_m`: where `τ^k` is colinear for every `1 ≤ k ≤ m`.
pub fn mth_equalizer(t: &EquivariantParaCyclic, n: usize, m: u32) -> Result<Subspace> {
    let w = t.working();
    let fam = &w.family;
    let mut e = first_equalizer_working(&w, n)?;
    let tau = &fam.taus[n];
    let mut power = tau.clone();
    for _ in 2..=m {
        power = power.mul(tau)?;
        let (l, r) = colinearity_defect(&w.bialgebra, &w.rho, &power, n, n)?;
        e = intersect(&e, &equalizer(&l, &r)?)?;
    }
    Ok(e)
}

/// Degrees the comonad stage can treat: all of them for a cyclic working
/// orientation; in the cocyclic one the top degree lacks its last face.
fn comonad_top(w: &Working) -> Result<usize> {
    let top = w.family.truncation();
    match w.family.orientation {
        Orientation::Cyclic => Ok(top),
        Orientation::Cocyclic if top >= 1 => Ok(top - 1),
        Orientation::Cocyclic => Err(Error::Truncation(
            "the cocyclic comonad stage needs truncation at least 1".into(),
        )),
    }
}

/// The comodule approximation `T^B`: per degree the largest τ-invariant
/// subspace of the first equalizer, with all operators restricted.
pub fn comonad_approximation(t: &EquivariantParaCyclic) -> Result<ApproximationResult> {
    let report = detect_pseudo_para(t)?;
    if !report.is_pseudo_para() {
        let mut r = report.structure;
        r.merge("pseudo-para", report.simplicial);
        return Err(Error::Validation(r));
    }
    let w = t.working();
    let top = comonad_top(&w)?;
    let subs = (0..=top)
        .map(|n| {
            let e = first_equalizer_working(&w, n)?;
            largest_invariant_subspace(&e, &[&w.family.taus[n]])
        })
        .collect::<Result<Vec<_>>>()?;
    let truncated = Working {
        family: w.family.truncate(top)?,
        bialgebra: w.bialgebra.clone(),
        rho: w.rho[..=top].to_vec(),
    };
    let restricted = restrict_family(&truncated, &subs)?;
    let colinear = colinearity_report(&restricted, true)?;
    if !colinear.is_ok() {
        return Err(Error::Validation(colinear));
    }
    certify_relations(&restricted.family).into_result()?;
    Ok(ApproximationResult {
        stage: Stage::Comonad,
        mode: t.mode(),
        subspaces: subs,
        output: EquivariantParaCyclic::from_working(restricted, t.mode(), &t.comonad.bialgebra),
    })
}

/// The cyclic approximation: per degree the fixed points of `τ_n^{n+1}`.
pub fn cyclic_approximation(t: &EquivariantParaCyclic) -> Result<ApproximationResult> {
    let w = t.working();
    let fam = &w.family;
    let subs = (0..=fam.truncation())
        .map(|n| {
            let omega = fam.taus[n].pow(n as u32 + 1)?;
            equalizer(&omega, &id(fam.field, fam.dims[n]))
        })
        .collect::<Result<Vec<_>>>()?;
    let family = w.family.restrict(&subs).map_err(|e| match e {
        Error::Restriction(msg) => Error::Certification(crate::report::CertificationReport {
            checked: 0,
            failures: vec![crate::report::RelationFailure {
                relation: "restriction to the fixed points of the cyclic operator".into(),
                degree: 0,
                lhs: msg,
                rhs: String::new(),
                column: None,
            }],
        }),
        other => other,
    })?;
    let restricted = restrict_family(&w, &subs).map_err(|e| match e {
        Error::Restriction(msg) => Error::NotEquivariant(format!(
            "the B-structure does not preserve the cyclic fixed points: {msg}"
        )),
        other => other,
    })?;
    debug_assert_eq!(family, restricted.family);
    certify_with(&restricted.family, Flavor::Lambda, &|n| 2 * (n as i64 + 1)).into_result()?;
    Ok(ApproximationResult {
        stage: Stage::Cyclic,
        mode: t.mode(),
        subspaces: subs,
        output: EquivariantParaCyclic::from_working(restricted, t.mode(), &t.comonad.bialgebra),
    })
}

/// The diagonal B-structure on `T_n = X^{⊗n+1} ⊗ M`.
pub fn diagonal_structure(
    b: &BialgebraSpec,
    carrier: &SymmetryDatum,
    m: &CoefficientDatum,
    top: usize,
) -> Result<Vec<Matrix>> {
    let x = (&carrier.equivariance, carrier.dim);
    let ms = if carrier.kind.is_module() {
        m.action()?
    } else {
        m.coaction()?
    };
    let mut out = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut factors = vec![x; n + 1];
        factors.push((ms, m.dim));
        out.push(if carrier.kind.is_module() {
            b.diagonal_action_all(&factors)?
        } else {
            b.diagonal_coaction_all(&factors)?
        });
    }
    Ok(out)
}

/// `T_•` of a datum with its diagonal B-structure.
pub fn equivariant_t(
    b: &BialgebraSpec,
    carrier: &SymmetryDatum,
    m: &CoefficientDatum,
    top: usize,
) -> Result<EquivariantParaCyclic> {
    let w = crate::hopf::build_transposition(b, m, carrier)?;
    let module = if carrier.kind.is_algebra() {
        build_t_algebra(carrier, &w, top, Orientation::Cyclic)?
    } else {
        build_t_coalgebra(carrier, &w, top, Orientation::Cocyclic)?
    };
    let mode = if carrier.kind.is_module() {
        Mode::ModuleSide
    } else {
        Mode::ComoduleSide
    };
    let structure = diagonal_structure(b, carrier, m, top)?;
    EquivariantParaCyclic::new(
        module,
        ComonadSpec {
            bialgebra: b.clone(),
            mode,
        },
        structure,
    )
}

/// Both approximation stages applied to `T_•`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOutput {
    pub t: EquivariantParaCyclic,
    pub comonad: ApproximationResult,
    pub cyclic: ApproximationResult,
}

impl PipelineOutput {
    /// The resulting (co)cyclic B-(co)module `Q_•`.
    pub fn q(&self) -> &EquivariantParaCyclic {
        &self.cyclic.output
    }
}

pub fn full_pipeline(
    b: &BialgebraSpec,
    carrier: &SymmetryDatum,
    m: &CoefficientDatum,
    top: usize,
) -> Result<PipelineOutput> {
    crate::hopf::validate_symmetry(b, carrier, m)?.into_result()?;
    let t = equivariant_t(b, carrier, m, top)?;
    let comonad = comonad_approximation(&t)?;
    let cyclic = cyclic_approximation(&comonad.output)?;
    Ok(PipelineOutput { t, comonad, cyclic })
}
