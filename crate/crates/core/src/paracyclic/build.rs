//! Assembly of `T_•(C, M)` on the leg `C^{⊗n+1} ⊗ M`.

use super::{Orientation, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{check_w_transpositive, SymmetryDatum, Transposition};
use crate::linalg::Matrix;
use crate::tensor::{id, kron, permute_factors};

/// The two legs `C^{⊗n} ⊗ M ⊗ C` and `C^{⊗n+1} ⊗ M` of `P_n(C, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SModulePair {
    pub degree: usize,
    pub leg0_dim: usize,
    pub leg1_dim: usize,
    /// `t_{n+2} : (c_1, ..., c_n, m, c) ↦ (c, c_1, ..., c_n, m)`.
    pub t: Matrix,
}

pub fn build_p(field: FieldSpec, c_dim: usize, m_dim: usize, n: usize) -> SModulePair {
    let t = leg_rotation(field, c_dim, m_dim, n);
    let dim = c_dim.pow(n as u32 + 1) * m_dim;
    SModulePair {
        degree: n,
        leg0_dim: dim,
        leg1_dim: dim,
        t,
    }
}

fn leg_rotation(field: FieldSpec, c: usize, m: usize, n: usize) -> Matrix {
    permute_factors(field, &[c.pow(n as u32), m, c], &[2, 0, 1])
}

fn ipow(field: FieldSpec, c: usize, k: usize) -> Matrix {
    id(field, c.pow(k as u32))
}

fn require_transpositive(datum: &SymmetryDatum, w: &Transposition) -> Result<()> {
    let report = check_w_transpositive(datum, w)?;
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::Validation(report))
    }
}

/// The para-cocyclic module of a `w`-transpositive coalgebra, truncated at `top`.
///
/// `∂_i = C^{⊗i} ⊗ δ ⊗ C^{⊗n−i} ⊗ M` for `i ≤ n`, `σ_j = C^{⊗j+1} ⊗ ε ⊗ C^{⊗n−j} ⊗ M`,
/// and the maps leaving the other leg, `∂_{n+1}` and `τ_n`, are conjugated by the rotations.
pub fn build_t_coalgebra(
    datum: &SymmetryDatum,
    w: &Transposition,
    top: usize,
    orientation: Orientation,
) -> Result<ParaCyclicModule> {
    if datum.kind.is_algebra() {
        return Err(Error::Configuration(format!(
            "kind {} has an algebra carrier",
            datum.kind
        )));
    }
    require_transpositive(datum, w)?;
    let field = datum.structure.field();
    let (c, m) = (datum.dim, w.m_dim);
    let (delta, eps) = (&datum.structure, &datum.unit);
    let im = id(field, m);
    let ic = id(field, c);
    let dims: Vec<usize> = (0..=top).map(|n| c.pow(n as u32 + 1) * m).collect();
    let mut faces = Vec::with_capacity(top);
    let mut degens = Vec::with_capacity(top);
    for n in 0..top {
        let mut fs = Vec::with_capacity(n + 2);
        for i in 0..=n {
            fs.push(kron(
                field,
                &[&ipow(field, c, i), delta, &ipow(field, c, n - i), &im],
            ));
        }
        let last = Matrix::chain(&[
            &leg_rotation(field, c, m, n + 1),
            &kron(field, &[&ipow(field, c, n), &w.w, &ic]),
            &kron(field, &[&ipow(field, c, n), &im, delta]),
            &leg_rotation(field, c, m, n).transpose(),
        ])?;
        fs.push(last);
        faces.push(fs);
        degens.push(
            (0..=n)
                .map(|j| {
                    kron(
                        field,
                        &[&ipow(field, c, j + 1), eps, &ipow(field, c, n - j), &im],
                    )
                })
                .collect(),
        );
    }
    let taus = (0..=top)
        .map(|n| {
            ipow(field, c, n)
                .kron(&w.w)
                .mul(&leg_rotation(field, c, m, n).transpose())
        })
        .collect::<Result<Vec<_>>>()?;
    let label = format!("T({}, coalgebra of dim {c}, M of dim {m})", datum.kind);
    let t = ParaCyclicModule::new(
        Orientation::Cocyclic,
        field,
        dims,
        faces,
        degens,
        taus,
        label,
    )?;
    Ok(match orientation {
        Orientation::Cocyclic => t,
        Orientation::Cyclic => t.transpose(),
    })
}

/// The para-cyclic module of a `w`-transpositive algebra, truncated at `top`.
///
/// `d_i` multiplies factors `i, i+1`, `s_i` inserts the unit after factor `i`,
/// `t_n(a_0 ⊗ ⋯ ⊗ a_n ⊗ m) = x ⊗ a_0 ⊗ ⋯ ⊗ a_{n−1} ⊗ m'` where `x ⊗ m' = w(m ⊗ a_n)`,
/// and `d_{n+1} = d_0 t_{n+1}`.
pub fn build_t_algebra(
    datum: &SymmetryDatum,
    w: &Transposition,
    top: usize,
    orientation: Orientation,
) -> Result<ParaCyclicModule> {
    if !datum.kind.is_algebra() {
        return Err(Error::Configuration(format!(
            "kind {} has a coalgebra carrier",
            datum.kind
        )));
    }
    require_transpositive(datum, w)?;
    let field = datum.structure.field();
    let (a, m) = (datum.dim, w.m_dim);
    let (mu, e) = (&datum.structure, &datum.unit);
    let im = id(field, m);
    let dims: Vec<usize> = (0..=top).map(|n| a.pow(n as u32 + 1) * m).collect();
    let taus = (0..=top)
        .map(|n| {
            let an = a.pow(n as u32);
            let front = permute_factors(field, &[an, a, m], &[1, 0, 2]);
            let swap_am = kron(
                field,
                &[&id(field, an), &permute_factors(field, &[a, m], &[1, 0])],
            );
            Matrix::chain(&[&front, &id(field, an).kron(&w.w), &swap_am])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut faces = Vec::with_capacity(top);
    let mut degens = Vec::with_capacity(top);
    for n in 0..top {
        let mut fs: Vec<Matrix> = (0..=n)
            .map(|j| {
                kron(
                    field,
                    &[&ipow(field, a, j), mu, &ipow(field, a, n - j), &im],
                )
            })
            .collect();
        let last = fs[0].mul(&taus[n + 1])?;
        fs.push(last);
        faces.push(fs);
        degens.push(
            (0..=n)
                .map(|i| {
                    kron(
                        field,
                        &[&ipow(field, a, i + 1), e, &ipow(field, a, n - i), &im],
                    )
                })
                .collect(),
        );
    }
    let label = format!("T({}, algebra of dim {a}, M of dim {m})", datum.kind);
    let t = ParaCyclicModule::new(Orientation::Cyclic, field, dims, faces, degens, taus, label)?;
    Ok(match orientation {
        Orientation::Cyclic => t,
        Orientation::Cocyclic => t.transpose(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, Base, Coefficient};
    use crate::hopf::{build_transposition, Kind};
    use crate::paracyclic::certify_relations;

    fn build(kind: Kind, base: Base, c: Coefficient, top: usize) -> ParaCyclicModule {
        let fx = fixture(kind, base, c, FieldSpec::Rationals).unwrap();
        let w = build_transposition(&fx.bialgebra, &fx.coefficient, &fx.carrier).unwrap();
        if kind.is_algebra() {
            build_t_algebra(&fx.carrier, &w, top, Orientation::Cyclic).unwrap()
        } else {
            build_t_coalgebra(&fx.carrier, &w, top, Orientation::Cocyclic).unwrap()
        }
    }

    #[test]
    fn rotation_of_legs() {
        let p = build_p(FieldSpec::Rationals, 1, 1, 3);
        assert!(p.t.is_identity());
        let p = build_p(FieldSpec::Rationals, 2, 1, 1);
        assert_eq!(p.leg0_dim, 4);
        // (c1, c) = (0, 1) goes to (c, c1) = (1, 0)
        assert_eq!(p.t.column(1), vec![(2, FieldSpec::Rationals.one())]);
    }

    #[test]
    fn relations_hold_on_small_fixtures() {
        for kind in Kind::ALL {
            for base in [Base::Ground, Base::Cyclic(2), Base::Sweedler] {
                for c in [Coefficient::Trivial, Coefficient::Regular] {
                    if base == Base::Sweedler && c == Coefficient::Regular && kind == Kind::CA {
                        continue;
                    }
                    let top = if base == Base::Sweedler { 2 } else { 3 };
                    let t = build(kind, base, c, top);
                    let r = certify_relations(&t);
                    assert!(r.is_ok(), "{kind} {base} {c:?}: {r}");
                }
            }
        }
    }

    #[test]
    fn corrupted_tau_is_caught() {
        let mut t = build(Kind::MC, Base::Cyclic(2), Coefficient::Trivial, 3);
        let q = FieldSpec::Rationals;
        let mut rows = t.taus[2].rows().to_vec();
        rows[0] = vec![(0, q.from_i64(5))];
        t.taus[2] = Matrix::from_rows(q, 8, rows);
        let r = certify_relations(&t);
        assert!(!r.is_ok());
        assert_eq!(r.first_failure().unwrap().degree, 2);
    }
}
