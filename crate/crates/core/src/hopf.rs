//! Bialgebras by structure constants, (co)module (co)algebras of the four
//! symmetry kinds, and the transpositions `w_{M,X} : M ⊗ X → X ⊗ M`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::tensor::{id, kron, swap};

/// A finite-dimensional bialgebra, optionally with antipode.
///
/// `mult` is `d × d²` (column `i*d + j` holds `e_i e_j`), `unit` is `d × 1`,
/// `comult` is `d² × d`, `counit` is `1 × d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraSpec {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Option<Matrix>,
}

fn expect_shape(what: &str, m: &Matrix, shape: (usize, usize)) -> Result<()> {
    if m.shape() != shape {
        return Err(Error::Dimension(format!(
            "{what} is {:?}, expected {shape:?}",
            m.shape()
        )));
    }
    Ok(())
}

impl BialgebraSpec {
    pub fn new(
        field: FieldSpec,
        dim: usize,
        mult: Matrix,
        unit: Matrix,
        comult: Matrix,
        counit: Matrix,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        expect_shape("multiplication", &mult, (dim, dim * dim))?;
        expect_shape("unit", &unit, (dim, 1))?;
        expect_shape("comultiplication", &comult, (dim * dim, dim))?;
        expect_shape("counit", &counit, (1, dim))?;
        if let Some(s) = &antipode {
            expect_shape("antipode", s, (dim, dim))?;
        }
        Ok(BialgebraSpec {
            field,
            dim,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    /// The ground field as a one-dimensional Hopf algebra.
    pub fn trivial(field: FieldSpec) -> Self {
        let one = Matrix::identity(field, 1);
        BialgebraSpec {
            field,
            dim: 1,
            mult: one.clone(),
            unit: one.clone(),
            comult: one.clone(),
            counit: one.clone(),
            antipode: Some(one),
        }
    }

    /// The linear dual: structure maps transposed, algebra and coalgebra exchanged.
    pub fn dual(&self) -> Self {
        BialgebraSpec {
            field: self.field,
            dim: self.dim,
            mult: self.comult.transpose(),
            unit: self.counit.transpose(),
            comult: self.mult.transpose(),
            counit: self.unit.transpose(),
            antipode: self.antipode.as_ref().map(Matrix::transpose),
        }
    }

    pub fn is_cocommutative(&self) -> Result<bool> {
        Ok(swap(self.field, self.dim, self.dim).mul(&self.comult)? == self.comult)
    }

    /// Checks every bialgebra axiom, plus the antipode identities when an antipode is given.
    pub fn validate(&self) -> Result<ValidationReport> {
        let (f, d) = (self.field, self.dim);
        let i = id(f, d);
        let mut r = ValidationReport::new();
        let (mu, e, delta, eps) = (&self.mult, &self.unit, &self.comult, &self.counit);
        r.check_equal(
            "associativity",
            &mu.mul(&mu.kron(&i))?,
            &mu.mul(&i.kron(mu))?,
            &[d, d, d],
        );
        r.check_equal("left unit", &mu.mul(&e.kron(&i))?, &i, &[d]);
        r.check_equal("right unit", &mu.mul(&i.kron(e))?, &i, &[d]);
        r.check_equal(
            "coassociativity",
            &delta.kron(&i).mul(delta)?,
            &i.kron(delta).mul(delta)?,
            &[d],
        );
        r.check_equal("left counit", &eps.kron(&i).mul(delta)?, &i, &[d]);
        r.check_equal("right counit", &i.kron(eps).mul(delta)?, &i, &[d]);
        let mid = kron(f, &[&i, &swap(f, d, d), &i]);
        let delta_mult = Matrix::chain(&[&mu.kron(mu), &mid, &delta.kron(delta)])?;
        r.check_equal(
            "comultiplication is multiplicative",
            &delta.mul(mu)?,
            &delta_mult,
            &[d, d],
        );
        r.check_equal(
            "comultiplication is unital",
            &delta.mul(e)?,
            &e.kron(e),
            &[],
        );
        r.check_equal(
            "counit is multiplicative",
            &eps.mul(mu)?,
            &eps.kron(eps),
            &[d, d],
        );
        r.check_equal(
            "counit is unital",
            &eps.mul(e)?,
            &Matrix::identity(f, 1),
            &[],
        );
        if let Some(s) = &self.antipode {
            let ee = e.mul(eps)?;
            r.check_equal(
                "left antipode",
                &Matrix::chain(&[mu, &s.kron(&i), delta])?,
                &ee,
                &[d],
            );
            r.check_equal(
                "right antipode",
                &Matrix::chain(&[mu, &i.kron(s), delta])?,
                &ee,
                &[d],
            );
        }
        Ok(r)
    }

    /// `Δ^{(k)} : B → B^{⊗k}`; `k = 0` gives the counit, `k = 1` the identity.
    pub fn iterated_comult(&self, k: usize) -> Result<Matrix> {
        match k {
            0 => Ok(self.counit.clone()),
            1 => Ok(id(self.field, self.dim)),
            _ => {
                let prev = self.iterated_comult(k - 1)?;
                id(self.field, self.dim).kron(&prev).mul(&self.comult)
            }
        }
    }

    /// Checks that `act : B ⊗ V → V` is a left module structure.
    pub fn check_action(&self, act: &Matrix, v: usize) -> Result<ValidationReport> {
        let (f, d) = (self.field, self.dim);
        let mut r = ValidationReport::new();
        if act.shape() != (v, d * v) {
            r.fail(
                "action shape",
                format!("{:?}, expected {:?}", act.shape(), (v, d * v)),
            );
            return Ok(r);
        }
        let iv = id(f, v);
        r.check_equal(
            "action is associative",
            &act.mul(&self.mult.kron(&iv))?,
            &act.mul(&id(f, d).kron(act))?,
            &[d, d, v],
        );
        r.check_equal(
            "action is unital",
            &act.mul(&self.unit.kron(&iv))?,
            &iv,
            &[v],
        );
        Ok(r)
    }

    /// Checks that `rho : V → B ⊗ V` is a left comodule structure.
    pub fn check_coaction(&self, rho: &Matrix, v: usize) -> Result<ValidationReport> {
        let (f, d) = (self.field, self.dim);
        let mut r = ValidationReport::new();
        if rho.shape() != (d * v, v) {
            r.fail(
                "coaction shape",
                format!("{:?}, expected {:?}", rho.shape(), (d * v, v)),
            );
            return Ok(r);
        }
        let iv = id(f, v);
        r.check_equal(
            "coaction is coassociative",
            &self.comult.kron(&iv).mul(rho)?,
            &id(f, d).kron(rho).mul(rho)?,
            &[v],
        );
        r.check_equal(
            "coaction is counital",
            &self.counit.kron(&iv).mul(rho)?,
            &iv,
            &[v],
        );
        Ok(r)
    }

    /// Diagonal action `b(x ⊗ y) = b₍₁₎x ⊗ b₍₂₎y` on `V ⊗ W`.
    pub fn diagonal_action(
        &self,
        act_v: &Matrix,
        v: usize,
        act_w: &Matrix,
        w: usize,
    ) -> Result<Matrix> {
        let (f, d) = (self.field, self.dim);
        let shuffle = kron(f, &[&id(f, d), &swap(f, d, v), &id(f, w)]);
        Matrix::chain(&[
            &act_v.kron(act_w),
            &shuffle,
            &kron(f, &[&self.comult, &id(f, v), &id(f, w)]),
        ])
    }

    /// Diagonal coaction `x ⊗ y ↦ x₍₋₁₎y₍₋₁₎ ⊗ x₍₀₎ ⊗ y₍₀₎` on `V ⊗ W`.
    pub fn diagonal_coaction(
        &self,
        rho_v: &Matrix,
        v: usize,
        rho_w: &Matrix,
        w: usize,
    ) -> Result<Matrix> {
        let (f, d) = (self.field, self.dim);
        let shuffle = kron(f, &[&id(f, d), &swap(f, v, d), &id(f, w)]);
        Matrix::chain(&[
            &kron(f, &[&self.mult, &id(f, v), &id(f, w)]),
            &shuffle,
            &rho_v.kron(rho_w),
        ])
    }

    /// Diagonal action on `V_1 ⊗ ⋯ ⊗ V_k`, factors given as `(action, dim)`.
    pub fn diagonal_action_all(&self, factors: &[(&Matrix, usize)]) -> Result<Matrix> {
        let Some(((first, dim0), rest)) = factors.split_first() else {
            return Ok(self.counit.clone());
        };
        let mut act = (*first).clone();
        let mut dim = *dim0;
        for (a, v) in rest {
            act = self.diagonal_action(&act, dim, a, *v)?;
            dim *= v;
        }
        Ok(act)
    }

    /// Diagonal coaction on `V_1 ⊗ ⋯ ⊗ V_k`.
    pub fn diagonal_coaction_all(&self, factors: &[(&Matrix, usize)]) -> Result<Matrix> {
        let Some(((first, dim0), rest)) = factors.split_first() else {
            return Ok(self.unit.clone());
        };
        let mut rho = (*first).clone();
        let mut dim = *dim0;
        for (r, v) in rest {
            rho = self.diagonal_coaction(&rho, dim, r, *v)?;
            dim *= v;
        }
        Ok(rho)
    }

    /// Trivial action `b · v = ε(b) v`.
    pub fn trivial_action(&self, v: usize) -> Matrix {
        self.counit.kron(&id(self.field, v))
    }

    /// Trivial coaction `v ↦ 1 ⊗ v`.
    pub fn trivial_coaction(&self, v: usize) -> Matrix {
        self.unit.kron(&id(self.field, v))
    }
}

/// The four symmetry types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Module coalgebra.
    MC,
    /// Comodule algebra.
    CA,
    /// Module algebra.
    MA,
    /// Comodule coalgebra.
    CC,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::MC, Kind::CA, Kind::MA, Kind::CC];

    pub fn is_algebra(&self) -> bool {
        matches!(self, Kind::CA | Kind::MA)
    }

    /// Whether B acts on the carrier (as opposed to coacting).
    pub fn is_module(&self) -> bool {
        matches!(self, Kind::MC | Kind::MA)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kind::MC => "MC",
            Kind::CA => "CA",
            Kind::MA => "MA",
            Kind::CC => "CC",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "MC" => Ok(Kind::MC),
            "CA" => Ok(Kind::CA),
            "MA" => Ok(Kind::MA),
            "CC" => Ok(Kind::CC),
            _ => Err(Error::Parse(format!("unknown symmetry kind {s:?}"))),
        }
    }
}

/// Coefficient object `M` with whichever structures are available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientDatum {
    pub dim: usize,
    /// `B ⊗ M → M`.
    pub action: Option<Matrix>,
    /// `M → B ⊗ M`.
    pub coaction: Option<Matrix>,
}

impl CoefficientDatum {
    /// `M = k` with trivial action and coaction.
    pub fn trivial(b: &BialgebraSpec) -> Self {
        CoefficientDatum {
            dim: 1,
            action: Some(b.trivial_action(1)),
            coaction: Some(b.trivial_coaction(1)),
        }
    }

    /// `M = B` with the regular action and coaction.
    pub fn regular(b: &BialgebraSpec) -> Self {
        CoefficientDatum {
            dim: b.dim,
            action: Some(b.mult.clone()),
            coaction: Some(b.comult.clone()),
        }
    }

    pub fn action(&self) -> Result<&Matrix> {
        self.action
            .as_ref()
            .ok_or_else(|| Error::Configuration("coefficient has no action".into()))
    }

    pub fn coaction(&self) -> Result<&Matrix> {
        self.coaction
            .as_ref()
            .ok_or_else(|| Error::Configuration("coefficient has no coaction".into()))
    }

    pub fn validate(&self, b: &BialgebraSpec) -> Result<ValidationReport> {
        let mut r = ValidationReport::new();
        if let Some(a) = &self.action {
            r.merge("action", b.check_action(a, self.dim)?);
        }
        if let Some(c) = &self.coaction {
            r.merge("coaction", b.check_coaction(c, self.dim)?);
        }
        Ok(r)
    }
}

/// A (co)algebra carrier with its B-equivariance structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryDatum {
    pub kind: Kind,
    pub dim: usize,
    /// Multiplication `X ⊗ X → X` or comultiplication `X → X ⊗ X`.
    pub structure: Matrix,
    /// Unit `k → X` or counit `X → k`.
    pub unit: Matrix,
    /// Action `B ⊗ X → X` (module kinds) or coaction `X → B ⊗ X`.
    pub equivariance: Matrix,
}

impl SymmetryDatum {
    pub fn new(
        kind: Kind,
        dim: usize,
        structure: Matrix,
        unit: Matrix,
        equivariance: Matrix,
        b_dim: usize,
    ) -> Result<Self> {
        if kind.is_algebra() {
            expect_shape("carrier multiplication", &structure, (dim, dim * dim))?;
            expect_shape("carrier unit", &unit, (dim, 1))?;
        } else {
            expect_shape("carrier comultiplication", &structure, (dim * dim, dim))?;
            expect_shape("carrier counit", &unit, (1, dim))?;
        }
        if kind.is_module() {
            expect_shape("carrier action", &equivariance, (dim, b_dim * dim))?;
        } else {
            expect_shape("carrier coaction", &equivariance, (b_dim * dim, dim))?;
        }
        Ok(SymmetryDatum {
            kind,
            dim,
            structure,
            unit,
            equivariance,
        })
    }

    /// `B` as a carrier of the given kind: regular action or coaction on itself.
    pub fn regular(kind: Kind, b: &BialgebraSpec) -> Self {
        let (structure, unit) = if kind.is_algebra() {
            (b.mult.clone(), b.unit.clone())
        } else {
            (b.comult.clone(), b.counit.clone())
        };
        let equivariance = if kind.is_module() {
            b.mult.clone()
        } else {
            b.comult.clone()
        };
        SymmetryDatum {
            kind,
            dim: b.dim,
            structure,
            unit,
            equivariance,
        }
    }

    fn carrier_axioms(&self, f: FieldSpec) -> Result<ValidationReport> {
        let (x, i) = (self.dim, id(f, self.dim));
        let mut r = ValidationReport::new();
        let (s, u) = (&self.structure, &self.unit);
        if self.kind.is_algebra() {
            r.check_equal(
                "carrier associativity",
                &s.mul(&s.kron(&i))?,
                &s.mul(&i.kron(s))?,
                &[x, x, x],
            );
            r.check_equal("carrier left unit", &s.mul(&u.kron(&i))?, &i, &[x]);
            r.check_equal("carrier right unit", &s.mul(&i.kron(u))?, &i, &[x]);
        } else {
            r.check_equal(
                "carrier coassociativity",
                &s.kron(&i).mul(s)?,
                &i.kron(s).mul(s)?,
                &[x],
            );
            r.check_equal("carrier left counit", &u.kron(&i).mul(s)?, &i, &[x]);
            r.check_equal("carrier right counit", &i.kron(u).mul(s)?, &i, &[x]);
        }
        Ok(r)
    }

    fn compatibility(&self, b: &BialgebraSpec) -> Result<ValidationReport> {
        let (f, d, x) = (b.field, b.dim, self.dim);
        let ib = id(f, d);
        let (s, u, eq) = (&self.structure, &self.unit, &self.equivariance);
        let mut r = ValidationReport::new();
        match self.kind {
            Kind::MA => {
                // b(aa') = (b₍₁₎a)(b₍₂₎a')
                let rhs = Matrix::chain(&[s, &b.diagonal_action(eq, x, eq, x)?])?;
                r.check_equal(
                    "multiplication is B-linear",
                    &eq.mul(&ib.kron(s))?,
                    &rhs,
                    &[d, x, x],
                );
                r.check_equal(
                    "unit is B-linear",
                    &eq.mul(&ib.kron(u))?,
                    &u.mul(&b.counit)?,
                    &[d],
                );
            }
            Kind::MC => {
                let rhs = b.diagonal_action(eq, x, eq, x)?.mul(&ib.kron(s))?;
                r.check_equal("comultiplication is B-linear", &s.mul(eq)?, &rhs, &[d, x]);
                r.check_equal(
                    "counit is B-linear",
                    &u.mul(eq)?,
                    &b.counit.kron(u),
                    &[d, x],
                );
            }
            Kind::CA => {
                let rhs = b.diagonal_coaction(eq, x, eq, x)?;
                r.check_equal(
                    "multiplication is B-colinear",
                    &eq.mul(s)?,
                    &ib.kron(s).mul(&rhs)?,
                    &[x, x],
                );
                r.check_equal("unit is B-colinear", &eq.mul(u)?, &b.unit.kron(u), &[]);
            }
            Kind::CC => {
                let rhs = b.diagonal_coaction(eq, x, eq, x)?.mul(s)?;
                r.check_equal(
                    "comultiplication is B-colinear",
                    &ib.kron(s).mul(eq)?,
                    &rhs,
                    &[x],
                );
                r.check_equal(
                    "counit is B-colinear",
                    &ib.kron(u).mul(eq)?,
                    &b.unit.mul(u)?,
                    &[x],
                );
            }
        }
        Ok(r)
    }
}

/// Checks the carrier, its equivariance structure, the coefficient, and their compatibility.
pub fn validate_symmetry(
    b: &BialgebraSpec,
    datum: &SymmetryDatum,
    m: &CoefficientDatum,
) -> Result<ValidationReport> {
    let mut r = datum.carrier_axioms(b.field)?;
    let eq = if datum.kind.is_module() {
        b.check_action(&datum.equivariance, datum.dim)?
    } else {
        b.check_coaction(&datum.equivariance, datum.dim)?
    };
    let eq_ok = eq.is_ok();
    r.merge("carrier", eq);
    if eq_ok {
        r.merge(datum.kind.name(), datum.compatibility(b)?);
    }
    let coeff = m.validate(b)?;
    let coeff_ok = coeff.is_ok();
    r.merge("coefficient", coeff);
    if r.is_ok() && coeff_ok && !datum.kind.is_module() {
        // x₍₀₎ ⊗ x₍₋₁₎m reverses the order of coaction coefficients on products,
        // so the action on M has to absorb that reversal
        let w = build_transposition(b, m, datum)?;
        r.merge(
            "coefficient action against carrier coaction",
            check_w_transpositive(datum, &w)?,
        );
    }
    Ok(r)
}

/// Which formula produced a transposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Left structures: `m₍₋₁₎x ⊗ m₍₀₎` for module carriers, `x₍₀₎ ⊗ x₍₋₁₎m` for comodule carriers.
    Left,
    /// Right coaction on the carrier and right action on `M`: `x₍₀₎ ⊗ m x₍₁₎`.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transposition {
    pub kind: Kind,
    pub side: Side,
    pub m_dim: usize,
    pub x_dim: usize,
    /// `M ⊗ X → X ⊗ M`.
    pub w: Matrix,
}

impl Transposition {
    /// The plain switch, valid for any carrier when `B = k`.
    pub fn switch(kind: Kind, field: FieldSpec, m_dim: usize, x_dim: usize) -> Self {
        Transposition {
            kind,
            side: Side::Left,
            m_dim,
            x_dim,
            w: swap(field, m_dim, x_dim),
        }
    }

    /// Transposition between the linear duals: `s ∘ wᵀ ∘ s`.
    pub fn dual(&self) -> Self {
        let f = self.w.field();
        let w = Matrix::chain(&[
            &swap(f, self.x_dim, self.m_dim),
            &self.w.transpose(),
            &swap(f, self.x_dim, self.m_dim),
        ])
        .expect("shapes agree");
        let kind = match self.kind {
            Kind::MC => Kind::CA,
            Kind::CA => Kind::MC,
            Kind::MA => Kind::CC,
            Kind::CC => Kind::MA,
        };
        Transposition {
            kind,
            side: self.side,
            m_dim: self.m_dim,
            x_dim: self.x_dim,
            w,
        }
    }
}

/// `w(m ⊗ x) = m₍₋₁₎x ⊗ m₍₀₎` from a coaction on `M` and an action on `X`.
pub fn transposition_from_coaction(
    b: &BialgebraSpec,
    rho_m: &Matrix,
    m: usize,
    act_x: &Matrix,
    x: usize,
) -> Result<Matrix> {
    let f = b.field;
    Matrix::chain(&[
        &act_x.kron(&id(f, m)),
        &kron(f, &[&id(f, b.dim), &swap(f, m, x)]),
        &rho_m.kron(&id(f, x)),
    ])
}

/// `w(m ⊗ x) = x₍₀₎ ⊗ x₍₋₁₎m` from an action on `M` and a coaction on `X`.
pub fn transposition_from_action(
    b: &BialgebraSpec,
    act_m: &Matrix,
    m: usize,
    rho_x: &Matrix,
    x: usize,
) -> Result<Matrix> {
    let f = b.field;
    Matrix::chain(&[
        &id(f, x).kron(act_m),
        &kron(f, &[&swap(f, b.dim, x), &id(f, m)]),
        &rho_x.kron(&id(f, m)),
        &swap(f, m, x),
    ])
}

/// `w(m ⊗ x) = x₍₀₎ ⊗ m x₍₁₎` from a right action `M ⊗ B → M` and a right coaction `X → X ⊗ B`.
pub fn transposition_right(
    b: &BialgebraSpec,
    ract_m: &Matrix,
    m: usize,
    rrho_x: &Matrix,
    x: usize,
) -> Result<Matrix> {
    let f = b.field;
    let d = b.dim;
    // M ⊗ X → X ⊗ M → X ⊗ B ⊗ M → X ⊗ M ⊗ B → X ⊗ M
    Matrix::chain(&[
        &id(f, x).kron(ract_m),
        &kron(f, &[&id(f, x), &swap(f, d, m)]),
        &rrho_x.kron(&id(f, m)),
        &swap(f, m, x),
    ])
}

/// The transposition the kind prescribes, built from the coefficient and carrier structures.
pub fn build_transposition(
    b: &BialgebraSpec,
    m: &CoefficientDatum,
    x: &SymmetryDatum,
) -> Result<Transposition> {
    let w = if x.kind.is_module() {
        let rho = m.coaction().map_err(|_| {
            Error::Configuration(format!(
                "kind {} needs a coaction on the coefficient",
                x.kind
            ))
        })?;
        transposition_from_coaction(b, rho, m.dim, &x.equivariance, x.dim)?
    } else {
        let act = m.action().map_err(|_| {
            Error::Configuration(format!(
                "kind {} needs an action on the coefficient",
                x.kind
            ))
        })?;
        transposition_from_action(b, act, m.dim, &x.equivariance, x.dim)?
    };
    Ok(Transposition {
        kind: x.kind,
        side: Side::Left,
        m_dim: m.dim,
        x_dim: x.dim,
        w,
    })
}

/// The right-sided variant, with the side flag set.
pub fn build_transposition_right(
    b: &BialgebraSpec,
    kind: Kind,
    ract_m: &Matrix,
    m: usize,
    rrho_x: &Matrix,
    x: usize,
) -> Result<Transposition> {
    let w = transposition_right(b, ract_m, m, rrho_x, x)?;
    Ok(Transposition {
        kind,
        side: Side::Right,
        m_dim: m,
        x_dim: x,
        w,
    })
}

/// Inverse of the module-carrier transposition, `x ⊗ m ↦ m₍₀₎ ⊗ S(m₍₋₁₎)x`, when `S² = id`.
pub fn transposition_inverse(
    b: &BialgebraSpec,
    rho_m: &Matrix,
    m: usize,
    act_x: &Matrix,
    x: usize,
) -> Result<Matrix> {
    let f = b.field;
    let d = b.dim;
    let s = b
        .antipode
        .as_ref()
        .ok_or_else(|| Error::Configuration("inverse transposition needs an antipode".into()))?;
    if !s.mul(s)?.is_identity() {
        return Err(Error::Configuration(
            "inverse transposition formula needs S² = id".into(),
        ));
    }
    Matrix::chain(&[
        &id(f, m).kron(act_x),
        &kron(f, &[&id(f, m), s, &id(f, x)]),
        &kron(f, &[&swap(f, d, m), &id(f, x)]),
        &rho_m.kron(&id(f, x)),
        &swap(f, x, m),
    ])
}

/// Checks the compatibility of `w` with the carrier's (co)multiplication and (co)unit.
pub fn check_w_transpositive(datum: &SymmetryDatum, t: &Transposition) -> Result<ValidationReport> {
    let f = t.w.field();
    let (m, x) = (t.m_dim, datum.dim);
    let mut r = ValidationReport::new();
    if t.x_dim != x || t.w.shape() != (x * m, m * x) {
        r.fail(
            "transposition shape",
            format!("{:?} for M of dim {m} and carrier of dim {x}", t.w.shape()),
        );
        return Ok(r);
    }
    let (w, s, u) = (&t.w, &datum.structure, &datum.unit);
    let (im, ix) = (id(f, m), id(f, x));
    if datum.kind.is_algebra() {
        let lhs = w.mul(&im.kron(s))?;
        let rhs = Matrix::chain(&[&s.kron(&im), &ix.kron(w), &w.kron(&ix)])?;
        r.check_equal("w and multiplication", &lhs, &rhs, &[m, x, x]);
        r.check_equal("w and unit", &w.mul(&im.kron(u))?, &u.kron(&im), &[m]);
    } else {
        let lhs = Matrix::chain(&[&ix.kron(w), &w.kron(&ix), &im.kron(s)])?;
        let rhs = s.kron(&im).mul(w)?;
        r.check_equal("w and comultiplication", &lhs, &rhs, &[m, x]);
        r.check_equal("w and counit", &u.kron(&im).mul(w)?, &im.kron(u), &[m, x]);
    }
    Ok(r)
}
