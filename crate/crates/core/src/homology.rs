//! Coefficient functors and homology engines.

use std::fmt;

use crate::approx::{
    equivariance_report, equivariant_t, full_pipeline, EquivariantParaCyclic, Mode,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{validate_symmetry, BialgebraSpec, CoefficientDatum, Kind, SymmetryDatum};
use crate::linalg::{kernel, rank, restrict_operator, Matrix, Subspace};
use crate::paracyclic::{certify_relations, Orientation, ParaCyclicModule};
use crate::report::{CertificationReport, RelationFailure};
use crate::tensor::id;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `d_n : C_{n+1} → C_n`
    Homological,
    /// `d_n : C_n → C_{n+1}`
    Cohomological,
}

/// A complex stored on degrees `0..=top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub diffs: Vec<Matrix>,
    pub direction: Direction,
}

impl ChainComplex {
    pub fn new(
        field: FieldSpec,
        dims: Vec<usize>,
        diffs: Vec<Matrix>,
        direction: Direction,
    ) -> Result<Self> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(Error::Dimension(
                "a complex on degrees 0..=N needs N differentials".into(),
            ));
        }
        for (n, d) in diffs.iter().enumerate() {
            let want = match direction {
                Direction::Homological => (dims[n], dims[n + 1]),
                Direction::Cohomological => (dims[n + 1], dims[n]),
            };
            if d.shape() != want {
                return Err(Error::Dimension(format!(
                    "differential {n} is {:?}, expected {want:?}",
                    d.shape()
                )));
            }
        }
        Ok(ChainComplex {
            field,
            dims,
            diffs,
            direction,
        })
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// `d ∘ d = 0` on every stored pair; the first failure is reported.
    pub fn check_square_zero(&self) -> Result<()> {
        for n in 0..self.diffs.len().saturating_sub(1) {
            let dd = match self.direction {
                Direction::Homological => self.diffs[n].mul(&self.diffs[n + 1])?,
                Direction::Cohomological => self.diffs[n + 1].mul(&self.diffs[n])?,
            };
            if !dd.is_zero() {
                let column = (0..dd.ncols())
                    .find(|&c| dd.rows().iter().any(|r| r.iter().any(|(j, _)| *j == c)));
                return Err(Error::Certification(CertificationReport {
                    checked: n + 1,
                    failures: vec![RelationFailure {
                        relation: "d ∘ d = 0".into(),
                        degree: n,
                        lhs: format!("d_{n} d_{}", n + 1),
                        rhs: "0".into(),
                        column,
                    }],
                }));
            }
        }
        Ok(())
    }

    /// Homology dimensions in degrees `0..top` (the top degree lacks its
    /// incoming or outgoing differential and is never reported).
    pub fn homology(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.diffs.iter().map(rank).collect();
        (0..self.top())
            .map(|n| {
                let (into, out) = match self.direction {
                    Direction::Homological => (ranks[n], if n > 0 { ranks[n - 1] } else { 0 }),
                    Direction::Cohomological => (if n > 0 { ranks[n - 1] } else { 0 }, ranks[n]),
                };
                self.dims[n] - into - out
            })
            .collect()
    }

    pub fn euler_characteristic(&self, upto: usize) -> i64 {
        self.dims[..=upto]
            .iter()
            .enumerate()
            .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Hochschild,
    Cyclic,
    HochschildCohomology,
    CyclicCohomology,
    HopfHochschild,
}

impl Theory {
    pub fn name(&self) -> &'static str {
        match self {
            Theory::Hochschild => "HH",
            Theory::Cyclic => "HC",
            Theory::HochschildCohomology => "HH^",
            Theory::CyclicCohomology => "HC^",
            Theory::HopfHochschild => "HopfHH",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub datum: String,
    pub truncation: usize,
    pub field: FieldSpec,
}

/// Homology dimensions over the degrees unaffected by truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub theory: Theory,
    pub dims: Vec<usize>,
    pub provenance: Provenance,
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} of {} over {}, N = {}:",
            self.theory, self.provenance.datum, self.provenance.field, self.provenance.truncation
        )?;
        for d in &self.dims {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

fn signed_sum(field: FieldSpec, ops: &[Matrix], rows: usize, cols: usize) -> Result<Matrix> {
    let mut acc = Matrix::zeros(field, rows, cols);
    for (j, op) in ops.iter().enumerate() {
        acc = if j % 2 == 0 {
            acc.add(op)?
        } else {
            acc.sub(op)?
        };
    }
    Ok(acc)
}

/// The b-complex of a simplicial family given by its faces in the cyclic
/// orientation: `faces[n][j] : X_{n+1} → X_n`, `b = Σ (−1)^j d_j`.
pub fn hochschild_from_faces(
    field: FieldSpec,
    dims: &[usize],
    faces: &[Vec<Matrix>],
) -> Result<ChainComplex> {
    let diffs = faces
        .iter()
        .enumerate()
        .map(|(n, fs)| signed_sum(field, fs, dims[n], dims[n + 1]))
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(field, dims.to_vec(), diffs, Direction::Homological)
}

fn cyclic_oriented(m: &ParaCyclicModule) -> ParaCyclicModule {
    match m.orientation {
        Orientation::Cyclic => m.clone(),
        Orientation::Cocyclic => m.transpose(),
    }
}

pub fn hochschild_complex(m: &ParaCyclicModule) -> Result<ChainComplex> {
    let c = cyclic_oriented(m);
    hochschild_from_faces(c.field, &c.dims, &c.faces)
}

fn provenance(m: &ParaCyclicModule) -> Provenance {
    Provenance {
        datum: m.label.clone(),
        truncation: m.truncation(),
        field: m.field,
    }
}

/// Hochschild homology of the faces, honest in degrees `0..N`.
pub fn hochschild_homology(m: &ParaCyclicModule) -> Result<HomologyTable> {
    if m.orientation != Orientation::Cyclic {
        return Err(Error::Configuration(
            "Hochschild homology needs a cyclic-oriented family".into(),
        ));
    }
    let c = hochschild_complex(m)?;
    c.check_square_zero()?;
    Ok(HomologyTable {
        theory: Theory::Hochschild,
        dims: c.homology(),
        provenance: provenance(m),
    })
}

/// Hochschild cohomology of a cocyclic family, computed on its transpose.
pub fn hochschild_cohomology(m: &ParaCyclicModule) -> Result<HomologyTable> {
    if m.orientation != Orientation::Cocyclic {
        return Err(Error::Configuration(
            "Hochschild cohomology needs a cocyclic family".into(),
        ));
    }
    let mut t = hochschild_homology(&m.transpose())?;
    t.theory = Theory::HochschildCohomology;
    Ok(t)
}

/// `λ_n = (−1)^n τ_n`.
fn lambda(m: &ParaCyclicModule, n: usize) -> Matrix {
    if n % 2 == 0 {
        m.taus[n].clone()
    } else {
        m.taus[n].scale(&m.field.from_i64(-1))
    }
}

fn norm(m: &ParaCyclicModule, n: usize) -> Result<Matrix> {
    let l = lambda(m, n);
    let mut acc = id(m.field, m.dims[n]);
    let mut power = acc.clone();
    for _ in 0..n {
        power = l.mul(&power)?;
        acc = acc.add(&power)?;
    }
    Ok(acc)
}

fn push_block(out: &mut Vec<(usize, usize, Scalar)>, r0: usize, c0: usize, m: &Matrix) {
    for (r, row) in m.rows().iter().enumerate() {
        for (c, v) in row {
            out.push((r0 + r, c0 + *c, v.clone()));
        }
    }
}

/// Total complex of the Connes bicomplex of a cyclic-oriented family on
/// degrees `0..=N`. Column `p` holds the b-complex for even `p` and the
/// b′-complex (with sign −1) for odd `p`; `1 − λ` leaves odd columns and
/// the norm leaves even ones.
pub fn connes_total_complex(m: &ParaCyclicModule) -> Result<ChainComplex> {
    let field = m.field;
    let top = m.truncation();
    let b: Vec<Matrix> = hochschild_complex(m)?.diffs;
    let bprime = (0..top)
        .map(|q| signed_sum(field, &m.faces[q][..=q], m.dims[q], m.dims[q + 1]))
        .collect::<Result<Vec<_>>>()?;
    let one_minus = (0..=top)
        .map(|q| id(field, m.dims[q]).sub(&lambda(m, q)))
        .collect::<Result<Vec<_>>>()?;
    let norms = (0..=top).map(|q| norm(m, q)).collect::<Result<Vec<_>>>()?;
    let minus = field.from_i64(-1);
    // offsets[n][p]: start of the (p, n − p) summand inside Tot_n
    let offsets: Vec<Vec<usize>> = (0..=top)
        .map(|n| {
            let mut acc = 0;
            (0..=n)
                .map(|p| {
                    let o = acc;
                    acc += m.dims[n - p];
                    o
                })
                .collect()
        })
        .collect();
    let tot: Vec<usize> = (0..=top)
        .map(|n| (0..=n).map(|p| m.dims[n - p]).sum())
        .collect();
    let mut diffs = Vec::with_capacity(top);
    for n in 1..=top {
        let mut entries = Vec::new();
        for p in 0..=n {
            let q = n - p;
            let col = offsets[n][p];
            if q >= 1 {
                let row = offsets[n - 1][p];
                if p % 2 == 0 {
                    push_block(&mut entries, row, col, &b[q - 1]);
                } else {
                    push_block(&mut entries, row, col, &bprime[q - 1].scale(&minus));
                }
            }
            if p >= 1 {
                let row = offsets[n - 1][p - 1];
                let h = if p % 2 == 1 { &one_minus[q] } else { &norms[q] };
                push_block(&mut entries, row, col, h);
            }
        }
        diffs.push(Matrix::from_triplets(field, tot[n - 1], tot[n], entries)?);
    }
    ChainComplex::new(field, tot, diffs, Direction::Homological)
}

fn require_cyclic(m: &ParaCyclicModule) -> Result<()> {
    for (n, t) in m.taus.iter().enumerate() {
        if !t.pow(n as u32 + 1)?.is_identity() {
            return Err(Error::Certification(CertificationReport {
                checked: n + 1,
                failures: vec![RelationFailure {
                    relation: "cyclic".into(),
                    degree: n,
                    lhs: format!("t{n}^{}", n + 1),
                    rhs: format!("id[{n}]"),
                    column: None,
                }],
            }));
        }
    }
    Ok(())
}

/// Cyclic homology of a cyclic module, reported in degrees `0..=N−2`.
pub fn cyclic_homology(m: &ParaCyclicModule) -> Result<HomologyTable> {
    if m.orientation != Orientation::Cyclic {
        return Err(Error::Configuration(
            "cyclic homology needs a cyclic module".into(),
        ));
    }
    if m.truncation() < 2 {
        return Err(Error::Truncation(
            "cyclic homology needs truncation at least 2".into(),
        ));
    }
    require_cyclic(m)?;
    let c = connes_total_complex(m)?;
    c.check_square_zero()?;
    let mut dims = c.homology();
    dims.truncate(m.truncation() - 1);
    Ok(HomologyTable {
        theory: Theory::Cyclic,
        dims,
        provenance: provenance(m),
    })
}

/// Cyclic cohomology of a cocyclic module: cyclic homology of its transpose.
pub fn cocyclic_cohomology(m: &ParaCyclicModule) -> Result<HomologyTable> {
    if m.orientation != Orientation::Cocyclic {
        return Err(Error::Configuration(
            "cyclic cohomology needs a cocyclic module".into(),
        ));
    }
    let mut t = cyclic_homology(&m.transpose())?;
    t.theory = Theory::CyclicCohomology;
    Ok(t)
}

/// `{x : ρ(x) = 1 ⊗ x}` inside a B-comodule of dimension `dim`.
pub fn cotensor_subspace(b: &BialgebraSpec, rho: &Matrix, dim: usize) -> Result<Subspace> {
    Ok(kernel(&rho.sub(&b.unit.kron(&id(b.field, dim)))?))
}

/// The annihilator of `span{b·x − ε(b)x}` in the dual of a B-module; its
/// dimension is that of the coinvariants.
pub fn coinvariant_subspace(b: &BialgebraSpec, act: &Matrix, dim: usize) -> Result<Subspace> {
    cotensor_subspace(&b.dual(), &act.transpose(), dim)
}

pub fn coinvariant_dim(b: &BialgebraSpec, act: &Matrix, dim: usize) -> Result<usize> {
    Ok(coinvariant_subspace(b, act, dim)?.dim())
}

/// A plain family obtained from an equivariant one by a coefficient functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descended {
    pub family: ParaCyclicModule,
    /// Per degree, the comodule-side subspace: the cotensor itself, or the
    /// annihilator of the relations in the dual for coinvariants.
    pub subspaces: Vec<Subspace>,
}

fn invariant_part(x: &EquivariantParaCyclic, mode: Mode) -> Result<Descended> {
    if x.mode() != mode {
        return Err(Error::Configuration(match mode {
            Mode::ModuleSide => "coinvariants need B-actions".into(),
            Mode::ComoduleSide => "the cotensor needs B-coactions".into(),
        }));
    }
    let eq = equivariance_report(x, true)?;
    if !eq.is_ok() {
        return Err(Error::NotEquivariant(eq.to_string()));
    }
    let (fam, b, rho) = x.comodule_side();
    let subs = rho
        .iter()
        .enumerate()
        .map(|(n, r)| cotensor_subspace(&b, r, fam.dims[n]))
        .collect::<Result<Vec<_>>>()?;
    let restricted = fam.restrict(&subs)?;
    let family = match mode {
        Mode::ComoduleSide => restricted,
        Mode::ModuleSide => restricted.transpose(),
    };
    certify_relations(&family).into_result()?;
    Ok(Descended {
        family,
        subspaces: subs,
    })
}

/// `k ⊗_B X_•`: quotients by `span{b·x − ε(b)x}` with the descended operators.
pub fn coinvariants(x: &EquivariantParaCyclic) -> Result<Descended> {
    invariant_part(x, Mode::ModuleSide)
}

/// `k □_B X_•`: the subspaces `{x : ρ(x) = 1 ⊗ x}` with the restricted operators.
pub fn cotensor(x: &EquivariantParaCyclic) -> Result<Descended> {
    invariant_part(x, Mode::ComoduleSide)
}

/// Hochschild homology of `k ⊗_B T′_•(A, M)`.
pub fn hopf_hochschild(
    b: &BialgebraSpec,
    a: &SymmetryDatum,
    m: &CoefficientDatum,
    top: usize,
) -> Result<HomologyTable> {
    if a.kind != Kind::MA {
        return Err(Error::Configuration(format!(
            "Hopf-Hochschild homology needs a module algebra, got {}",
            a.kind
        )));
    }
    validate_symmetry(b, a, m)?.into_result()?;
    let t = equivariant_t(b, a, m, top)?;
    certify_relations(&t.module).into_result()?;
    let eq = equivariance_report(&t, false)?;
    if !eq.is_ok() {
        return Err(Error::NotEquivariant(eq.to_string()));
    }
    let (fam, bd, rho) = t.comodule_side();
    let subs = rho
        .iter()
        .enumerate()
        .map(|(n, r)| cotensor_subspace(&bd, r, fam.dims[n]))
        .collect::<Result<Vec<_>>>()?;
    // only the faces are needed; the dual family is cocyclic, so transpose back
    let faces = (0..fam.truncation())
        .map(|n| {
            fam.faces[n]
                .iter()
                .map(|f| restrict_operator(f, &subs[n], &subs[n + 1]).map(|r| r.transpose()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<usize> = subs.iter().map(Subspace::dim).collect();
    let c = hochschild_from_faces(fam.field, &dims, &faces)?;
    c.check_square_zero()?;
    Ok(HomologyTable {
        theory: Theory::HopfHochschild,
        dims: c.homology(),
        provenance: Provenance {
            datum: t.module.label.clone(),
            truncation: top,
            field: fam.field,
        },
    })
}

/// Which theory a pipeline reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheorySelector {
    Hochschild,
    Cyclic,
}

/// The (co)cyclic k-module a datum produces: `Q_•` with coinvariants for
/// module kinds and the cotensor for comodule kinds.
///
/// `top` is the truncation of the result; `T_•` is built one degree higher
/// when the comonad stage needs the extra last face.
pub fn hopf_cyclic_module(
    b: &BialgebraSpec,
    carrier: &SymmetryDatum,
    m: &CoefficientDatum,
    top: usize,
) -> Result<Descended> {
    let extra = usize::from(matches!(carrier.kind, Kind::MA | Kind::CC));
    let out = full_pipeline(b, carrier, m, top + extra)?;
    match carrier.kind {
        Kind::MC | Kind::MA => coinvariants(out.q()),
        Kind::CA | Kind::CC => cotensor(out.q()),
    }
}

/// The full chain for one datum, ending in a homology table.
pub fn run_pipeline(
    b: &BialgebraSpec,
    carrier: &SymmetryDatum,
    m: &CoefficientDatum,
    top: usize,
    theory: TheorySelector,
) -> Result<HomologyTable> {
    let c = hopf_cyclic_module(b, carrier, m, top)?.family;
    match (theory, c.orientation) {
        (TheorySelector::Hochschild, Orientation::Cyclic) => hochschild_homology(&c),
        (TheorySelector::Hochschild, Orientation::Cocyclic) => hochschild_cohomology(&c),
        (TheorySelector::Cyclic, Orientation::Cyclic) => cyclic_homology(&c),
        (TheorySelector::Cyclic, Orientation::Cocyclic) => cocyclic_cohomology(&c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        classical_algebra, dual_numbers, fixture, group_algebra, Base, Coefficient,
    };

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn coefficient_functor_examples() {
        let b = group_algebra(q(), 2);
        assert_eq!(coinvariant_dim(&b, &b.mult, 2).unwrap(), 1);
        let diag = b.diagonal_action(&b.mult, 2, &b.mult, 2).unwrap();
        assert_eq!(coinvariant_dim(&b, &diag, 4).unwrap(), 2);
        assert_eq!(cotensor_subspace(&b, &b.comult, 2).unwrap().dim(), 1);
        assert_eq!(
            cotensor_subspace(&b, &b.trivial_coaction(3), 3)
                .unwrap()
                .dim(),
            3
        );
        let k = BialgebraSpec::trivial(q());
        assert_eq!(coinvariant_dim(&k, &k.trivial_action(3), 3).unwrap(), 3);
    }

    fn classical(a: &BialgebraSpec) -> SymmetryDatum {
        classical_algebra(q(), a.dim, a.mult.clone(), a.unit.clone()).unwrap()
    }

    fn over_k(carrier: &SymmetryDatum, top: usize, theory: TheorySelector) -> Vec<usize> {
        let k = BialgebraSpec::trivial(q());
        run_pipeline(&k, carrier, &CoefficientDatum::trivial(&k), top, theory)
            .unwrap()
            .dims
    }

    #[test]
    fn classical_values() {
        let k = BialgebraSpec::trivial(q());
        assert_eq!(
            over_k(&classical(&k), 3, TheorySelector::Hochschild),
            vec![1, 0, 0]
        );
        assert_eq!(
            over_k(&classical(&k), 5, TheorySelector::Cyclic),
            vec![1, 0, 1, 0]
        );
        let z2 = classical(&group_algebra(q(), 2));
        assert_eq!(over_k(&z2, 3, TheorySelector::Hochschild), vec![2, 0, 0]);
        assert_eq!(over_k(&z2, 4, TheorySelector::Cyclic), vec![2, 0, 2]);
        assert_eq!(
            over_k(&dual_numbers(q()), 4, TheorySelector::Hochschild),
            vec![2, 1, 1, 1]
        );
    }

    #[test]
    fn cocyclic_scalar_and_duality() {
        let fx = fixture(Kind::MC, Base::Ground, Coefficient::Trivial, q()).unwrap();
        let c = hopf_cyclic_module(&fx.bialgebra, &fx.carrier, &fx.coefficient, 5)
            .unwrap()
            .family;
        assert_eq!(c.orientation, Orientation::Cocyclic);
        let t = cocyclic_cohomology(&c).unwrap();
        assert_eq!(t.dims, vec![1, 0, 1, 0]);
        assert_eq!(t.dims, cyclic_homology(&c.transpose()).unwrap().dims);
    }

    #[test]
    fn honesty_is_monotone() {
        let z2 = classical(&group_algebra(q(), 2));
        let a = over_k(&z2, 3, TheorySelector::Cyclic);
        let b = over_k(&z2, 5, TheorySelector::Cyclic);
        assert_eq!(a[..], b[..a.len()]);
    }

    #[test]
    fn non_cyclic_input_is_refused() {
        let fx = fixture(Kind::MA, Base::Cyclic(2), Coefficient::Trivial, q()).unwrap();
        let w =
            crate::hopf::build_transposition(&fx.bialgebra, &fx.coefficient, &fx.carrier).unwrap();
        let mut t =
            crate::paracyclic::build_t_algebra(&fx.carrier, &w, 3, Orientation::Cyclic).unwrap();
        t.taus[1] = id(q(), t.dims[1]).scale(&q().from_i64(2));
        assert!(matches!(cyclic_homology(&t), Err(Error::Certification(_))));
    }

    #[test]
    fn hopf_hochschild_over_ground_field_is_hochschild() {
        let k = BialgebraSpec::trivial(q());
        let a = dual_numbers(q());
        let hh = hopf_hochschild(&k, &a, &CoefficientDatum::trivial(&k), 4).unwrap();
        assert_eq!(hh.dims, vec![2, 1, 1, 1]);
    }
}
