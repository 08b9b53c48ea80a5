//! Bundled example data: small group algebras, their duals, Sweedler's
//! four-dimensional Hopf algebra, and symmetry data of each kind over them.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{BialgebraSpec, CoefficientDatum, Kind, SymmetryDatum};
use crate::linalg::Matrix;

fn from_entries(
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    entries: &[(usize, usize, i64)],
) -> Matrix {
    let t: Vec<(usize, usize, Scalar)> = entries
        .iter()
        .map(|&(r, c, v)| (r, c, field.from_i64(v)))
        .collect();
    Matrix::from_triplets(field, nrows, ncols, t).expect("fixture entries in range")
}

/// `k[Z/n]` with group-like basis `g^0, ..., g^{n-1}`.
pub fn group_algebra(field: FieldSpec, n: usize) -> BialgebraSpec {
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut antipode = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mult.push(((i + j) % n, i * n + j, 1));
        }
        comult.push((i * n + i, i, 1));
        antipode.push(((n - i) % n, i, 1));
    }
    BialgebraSpec::new(
        field,
        n,
        from_entries(field, n, n * n, &mult),
        from_entries(field, n, 1, &[(0, 0, 1)]),
        from_entries(field, n * n, n, &comult),
        from_entries(field, 1, n, &(0..n).map(|i| (0, i, 1)).collect::<Vec<_>>()),
        Some(from_entries(field, n, n, &antipode)),
    )
    .expect("group algebra shapes")
}

/// Functions on `Z/n` with the delta basis; the dual of the group algebra.
pub fn function_algebra(field: FieldSpec, n: usize) -> BialgebraSpec {
    group_algebra(field, n).dual()
}

/// Sweedler's algebra with basis `1, g, x, gx`: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δx = x ⊗ 1 + g ⊗ x`, `S(x) = −gx`.
pub fn sweedler(field: FieldSpec) -> BialgebraSpec {
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let at = |i: usize, j: usize| i * 4 + j;
    let mut mult = Vec::new();
    for b in 0..4 {
        mult.push((b, at(ONE, b), 1));
    }
    for b in 1..4 {
        mult.push((b, at(b, ONE), 1));
    }
    mult.extend([
        (ONE, at(G, G), 1),
        (GX, at(G, X), 1),
        (X, at(G, GX), 1),
        (GX, at(X, G), -1),
        (X, at(GX, G), -1),
    ]);
    let comult = [
        (at(ONE, ONE), ONE, 1),
        (at(G, G), G, 1),
        (at(X, ONE), X, 1),
        (at(G, X), X, 1),
        (at(GX, G), GX, 1),
        (at(ONE, GX), GX, 1),
    ];
    let antipode = [(ONE, ONE, 1), (G, G, 1), (GX, X, -1), (X, GX, 1)];
    BialgebraSpec::new(
        field,
        4,
        from_entries(field, 4, 16, &mult),
        from_entries(field, 4, 1, &[(ONE, 0, 1)]),
        from_entries(field, 16, 4, &comult),
        from_entries(field, 1, 4, &[(0, ONE, 1), (0, G, 1)]),
        Some(from_entries(field, 4, 4, &antipode)),
    )
    .expect("Sweedler algebra shapes")
}

/// `k[x]/(x²)` as a module algebra over `k`.
pub fn dual_numbers(field: FieldSpec) -> SymmetryDatum {
    let mult = from_entries(field, 2, 4, &[(0, 0, 1), (1, 1, 1), (1, 2, 1)]);
    let unit = from_entries(field, 2, 1, &[(0, 0, 1)]);
    SymmetryDatum::new(Kind::MA, 2, mult, unit, Matrix::identity(field, 2), 1)
        .expect("dual numbers shapes")
}

/// An algebra over the ground field viewed as a module algebra with trivial action.
pub fn classical_algebra(
    field: FieldSpec,
    dim: usize,
    mult: Matrix,
    unit: Matrix,
) -> Result<SymmetryDatum> {
    SymmetryDatum::new(Kind::MA, dim, mult, unit, Matrix::identity(field, dim), 1)
}

/// `k[Z/n]` acting on functions on `Z/n` by translation, `(g·f)(h) = f(hg)`.
pub fn translation_action(field: FieldSpec, n: usize) -> Matrix {
    let entries: Vec<(usize, usize, i64)> = (0..n)
        .flat_map(|i| (0..n).map(move |h| ((h + n - i) % n, i * n + h, 1)))
        .collect();
    from_entries(field, n, n * n, &entries)
}

/// `k[Z/n]` coacting on functions on `Z/n` by the grading `δ_g ↦ g ⊗ δ_g`.
pub fn grading_coaction(field: FieldSpec, n: usize) -> Matrix {
    let entries: Vec<(usize, usize, i64)> = (0..n).map(|g| (g * n + g, g, 1)).collect();
    from_entries(field, n * n, n, &entries)
}

/// Adjoint action `a · b = a₍₁₎ b S(a₍₂₎)`.
pub fn adjoint_action(b: &BialgebraSpec) -> Result<Matrix> {
    let (f, d) = (b.field, b.dim);
    let s = b
        .antipode
        .as_ref()
        .ok_or_else(|| Error::Configuration("adjoint action needs an antipode".into()))?;
    let i = Matrix::identity(f, d);
    // a ⊗ b → a1 ⊗ a2 ⊗ b → a1 ⊗ b ⊗ a2 → a1 ⊗ b ⊗ S(a2) → a1 b S(a2)
    let swap = crate::tensor::swap(f, d, d);
    Matrix::chain(&[
        &b.mult,
        &b.mult.kron(&i),
        &crate::tensor::kron(f, &[&i, &i, s]),
        &i.kron(&swap),
        &b.comult.kron(&i),
    ])
}

/// Coadjoint coaction `c ↦ c₍₁₎ S(c₍₃₎) ⊗ c₍₂₎`.
pub fn coadjoint_coaction(b: &BialgebraSpec) -> Result<Matrix> {
    let (f, d) = (b.field, b.dim);
    let s = b
        .antipode
        .as_ref()
        .ok_or_else(|| Error::Configuration("coadjoint coaction needs an antipode".into()))?;
    let i = Matrix::identity(f, d);
    let delta3 = b.iterated_comult(3)?;
    // c1 ⊗ c2 ⊗ c3 → c1 ⊗ c3 ⊗ c2 → c1 ⊗ S(c3) ⊗ c2 → c1 S(c3) ⊗ c2
    Matrix::chain(&[
        &b.mult.kron(&i),
        &crate::tensor::kron(f, &[&i, s, &i]),
        &i.kron(&crate::tensor::swap(f, d, d)),
        &delta3,
    ])
}

/// Which bialgebra a fixture is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Ground,
    Cyclic(usize),
    Sweedler,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Ground => write!(f, "k"),
            Base::Cyclic(n) => write!(f, "k[Z/{n}]"),
            Base::Sweedler => write!(f, "H4"),
        }
    }
}

impl Base {
    pub fn bialgebra(&self, field: FieldSpec) -> BialgebraSpec {
        match self {
            Base::Ground => BialgebraSpec::trivial(field),
            Base::Cyclic(n) => group_algebra(field, *n),
            Base::Sweedler => sweedler(field),
        }
    }

    /// The standard carrier of `kind` over this base.
    ///
    /// Module coalgebras and comodule algebras are `B` itself with the regular
    /// structure. Module algebras are functions on the group under translation
    /// (the adjoint action for Sweedler's algebra); comodule coalgebras are
    /// functions on the group with the grading coaction (the coadjoint
    /// coaction for Sweedler's algebra).
    pub fn carrier(&self, kind: Kind, field: FieldSpec) -> Result<SymmetryDatum> {
        let b = self.bialgebra(field);
        match (kind, self) {
            (Kind::MC | Kind::CA, _) | (_, Base::Ground) => Ok(SymmetryDatum::regular(kind, &b)),
            (Kind::MA, Base::Cyclic(n)) => {
                let fun = function_algebra(field, *n);
                SymmetryDatum::new(
                    kind,
                    *n,
                    fun.mult,
                    fun.unit,
                    translation_action(field, *n),
                    *n,
                )
            }
            (Kind::CC, Base::Cyclic(n)) => {
                let fun = function_algebra(field, *n);
                SymmetryDatum::new(
                    kind,
                    *n,
                    fun.comult,
                    fun.counit,
                    grading_coaction(field, *n),
                    *n,
                )
            }
            (Kind::MA, Base::Sweedler) => SymmetryDatum::new(
                kind,
                4,
                b.mult.clone(),
                b.unit.clone(),
                adjoint_action(&b)?,
                4,
            ),
            (Kind::CC, Base::Sweedler) => SymmetryDatum::new(
                kind,
                4,
                b.comult.clone(),
                b.counit.clone(),
                coadjoint_coaction(&b)?,
                4,
            ),
        }
    }
}

/// Which coefficient a fixture uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Trivial,
    Regular,
}

impl Coefficient {
    pub fn datum(&self, b: &BialgebraSpec) -> CoefficientDatum {
        match self {
            Coefficient::Trivial => CoefficientDatum::trivial(b),
            Coefficient::Regular => CoefficientDatum::regular(b),
        }
    }
}

/// A complete input: bialgebra, carrier, coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub bialgebra: BialgebraSpec,
    pub carrier: SymmetryDatum,
    pub coefficient: CoefficientDatum,
}

pub fn fixture(
    kind: Kind,
    base: Base,
    coefficient: Coefficient,
    field: FieldSpec,
) -> Result<Fixture> {
    let bialgebra = base.bialgebra(field);
    let carrier = base.carrier(kind, field)?;
    let coefficient_datum = coefficient.datum(&bialgebra);
    let coeff_name = match coefficient {
        Coefficient::Trivial => "k",
        Coefficient::Regular => "B",
    };
    Ok(Fixture {
        name: format!("{kind} over {base}, M = {coeff_name}, field {field}"),
        bialgebra,
        carrier,
        coefficient: coefficient_datum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::validate_symmetry;

    #[test]
    fn bialgebras_validate() {
        let q = FieldSpec::Rationals;
        for b in [
            group_algebra(q, 2),
            group_algebra(q, 3),
            function_algebra(q, 3),
            sweedler(q),
        ] {
            let r = b.validate().unwrap();
            assert!(r.is_ok(), "{r}");
        }
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(sweedler(f3).validate().unwrap().is_ok());
        assert!(!sweedler(q).is_cocommutative().unwrap());
        assert!(group_algebra(q, 2).is_cocommutative().unwrap());
    }

    #[test]
    fn every_fixture_validates() {
        let q = FieldSpec::Rationals;
        for kind in Kind::ALL {
            for base in [
                Base::Ground,
                Base::Cyclic(2),
                Base::Cyclic(3),
                Base::Sweedler,
            ] {
                for c in [Coefficient::Trivial, Coefficient::Regular] {
                    let fx = fixture(kind, base, c, q).unwrap();
                    let r = validate_symmetry(&fx.bialgebra, &fx.carrier, &fx.coefficient).unwrap();
                    // the comodule algebra H4 reverses products against the regular module
                    let expect_ok =
                        !(base == Base::Sweedler && c == Coefficient::Regular && kind == Kind::CA);
                    assert_eq!(r.is_ok(), expect_ok, "{}: {r}", fx.name);
                }
            }
        }
    }
}
