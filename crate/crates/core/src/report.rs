//! Validation and certification reports with basis-level witnesses.

use std::fmt;

use crate::linalg::{Matrix, SparseVec};

/// A point where two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis tensor index of the source, one entry per tensor factor.
    pub indices: Vec<usize>,
    pub lhs: SparseVec,
    pub rhs: SparseVec,
}

impl Witness {
    /// First column where `lhs` and `rhs` differ, decoded against the factor
    /// dimensions of the source (leftmost factor most significant).
    pub fn between(lhs: &Matrix, rhs: &Matrix, factor_dims: &[usize]) -> Option<Witness> {
        let col = lhs.first_difference(rhs)?;
        Some(Witness {
            indices: decode_index(col, factor_dims),
            lhs: lhs.column(col),
            rhs: rhs.column(col),
        })
    }
}

/// Splits a flat tensor basis index into per-factor indices.
pub fn decode_index(mut flat: usize, factor_dims: &[usize]) -> Vec<usize> {
    if factor_dims.is_empty() {
        return vec![flat];
    }
    let mut out = vec![0; factor_dims.len()];
    for (slot, &d) in out.iter_mut().zip(factor_dims).rev() {
        *slot = flat % d.max(1);
        flat /= d.max(1);
    }
    out
}

fn fmt_vec(v: &SparseVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(i, c)| format!("{c}*e{i}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at basis {:?}: lhs = {}, rhs = {}",
            self.indices,
            fmt_vec(&self.lhs),
            fmt_vec(&self.rhs)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub witness: Option<Witness>,
    pub detail: Option<String>,
}

/// Outcome of checking a list of axioms. Empty means every axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records a failure unless `lhs == rhs`.
    pub fn check_equal(
        &mut self,
        check: &str,
        lhs: &Matrix,
        rhs: &Matrix,
        factor_dims: &[usize],
    ) -> bool {
        if lhs.shape() != rhs.shape() {
            self.fail(
                check,
                format!("shapes {:?} and {:?}", lhs.shape(), rhs.shape()),
            );
            return false;
        }
        match Witness::between(lhs, rhs, factor_dims) {
            None => true,
            Some(w) => {
                self.failures.push(Failure {
                    check: check.into(),
                    witness: Some(w),
                    detail: None,
                });
                false
            }
        }
    }

    pub fn fail(&mut self, check: &str, detail: String) {
        self.failures.push(Failure {
            check: check.into(),
            witness: None,
            detail: Some(detail),
        });
    }

    pub fn merge(&mut self, prefix: &str, other: ValidationReport) {
        for mut f in other.failures {
            f.check = format!("{prefix}: {}", f.check);
            self.failures.push(f);
        }
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return writeln!(f, "all checks passed");
        }
        for fail in &self.failures {
            write!(f, "FAILED {}", fail.check)?;
            if let Some(w) = &fail.witness {
                write!(f, " {w}")?;
            }
            if let Some(d) = &fail.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A relation instance whose two sides evaluated to different matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: String,
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
    pub column: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificationReport {
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl CertificationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&RelationFailure> {
        self.failures.first()
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::Certification(self))
        }
    }
}

impl fmt::Display for CertificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => writeln!(f, "{} relation instances hold", self.checked),
            Some(r) => {
                write!(
                    f,
                    "relation {} fails at degree {}: {} != {}",
                    r.relation, r.degree, r.lhs, r.rhs
                )?;
                if let Some(c) = r.column {
                    write!(f, " (first differing column {c})")?;
                }
                writeln!(f)
            }
        }
    }
}
