//! Graded operator families carrying para-(co)cyclic structure.

mod build;

use std::collections::HashMap;

pub use build::{build_p, build_t_algebra, build_t_coalgebra, SModulePair};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::lambda::{relation_instances, Flavor, GeneratorWord, Letter};
use crate::linalg::{restrict_operator, Matrix, Subspace};
use crate::report::{CertificationReport, RelationFailure};

/// Direction in which the generators act.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Contravariant: `∂^n_j` acts as `d_j : T_{n+1} → T_n`.
    Cyclic,
    /// Covariant: `∂^n_j : T_n → T_{n+1}`.
    Cocyclic,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Cyclic => Orientation::Cocyclic,
            Orientation::Cocyclic => Orientation::Cyclic,
        }
    }
}

/// Operator matrices of a truncated para-(co)cyclic module.
///
/// `faces[n][j]` is the image of `∂^n_j` (`j ≤ n+1`), `degens[n][i]` the image
/// of `σ^n_i` (`i ≤ n`), both for `n < N`; `taus[n]` the image of `τ_n` for `n ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParaCyclicModule {
    pub orientation: Orientation,
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub faces: Vec<Vec<Matrix>>,
    pub degens: Vec<Vec<Matrix>>,
    pub taus: Vec<Matrix>,
    pub label: String,
}

impl ParaCyclicModule {
    /// Checks every operator shape before assembling the module.
    pub fn new(
        orientation: Orientation,
        field: FieldSpec,
        dims: Vec<usize>,
        faces: Vec<Vec<Matrix>>,
        degens: Vec<Vec<Matrix>>,
        taus: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Dimension("a module needs at least degree 0".into()));
        }
        let top = dims.len() - 1;
        if faces.len() != top || degens.len() != top || taus.len() != top + 1 {
            return Err(Error::Dimension(format!(
                "operator lists of lengths {}, {}, {} do not fit truncation {top}",
                faces.len(),
                degens.len(),
                taus.len()
            )));
        }
        let arrow = |src: usize, dst: usize| match orientation {
            Orientation::Cocyclic => (dims[dst], dims[src]),
            Orientation::Cyclic => (dims[src], dims[dst]),
        };
        for n in 0..top {
            if faces[n].len() != n + 2 || degens[n].len() != n + 1 {
                return Err(Error::Dimension(format!(
                    "wrong number of operators in degree {n}"
                )));
            }
            if let Some(j) = faces[n].iter().position(|f| f.shape() != arrow(n, n + 1)) {
                return Err(Error::Dimension(format!(
                    "face {j} in degree {n} has the wrong shape"
                )));
            }
            if let Some(i) = degens[n].iter().position(|s| s.shape() != arrow(n + 1, n)) {
                return Err(Error::Dimension(format!(
                    "degeneracy {i} in degree {n} has the wrong shape"
                )));
            }
        }
        if let Some(n) = (0..=top).find(|&n| taus[n].shape() != (dims[n], dims[n])) {
            return Err(Error::Dimension(format!(
                "cyclic operator in degree {n} has the wrong shape"
            )));
        }
        Ok(ParaCyclicModule {
            orientation,
            field,
            dims,
            faces,
            degens,
            taus,
            label: label.into(),
        })
    }

    pub fn truncation(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn face(&self, n: usize, j: usize) -> &Matrix {
        &self.faces[n][j]
    }

    pub fn degen(&self, n: usize, i: usize) -> &Matrix {
        &self.degens[n][i]
    }

    pub fn tau(&self, n: usize) -> &Matrix {
        &self.taus[n]
    }

    /// The same operators, transposed; the orientation flips.
    pub fn transpose(&self) -> ParaCyclicModule {
        let tr = |v: &Vec<Matrix>| v.iter().map(Matrix::transpose).collect::<Vec<_>>();
        ParaCyclicModule {
            orientation: self.orientation.flip(),
            field: self.field,
            dims: self.dims.clone(),
            faces: self.faces.iter().map(tr).collect(),
            degens: self.degens.iter().map(tr).collect(),
            taus: tr(&self.taus),
            label: self.label.clone(),
        }
    }

    /// Restriction to degrees `0..=n`.
    pub fn truncate(&self, n: usize) -> Result<ParaCyclicModule> {
        if n > self.truncation() {
            return Err(Error::Truncation(format!(
                "cannot extend truncation {} to {n}",
                self.truncation()
            )));
        }
        Ok(ParaCyclicModule {
            orientation: self.orientation,
            field: self.field,
            dims: self.dims[..=n].to_vec(),
            faces: self.faces[..n].to_vec(),
            degens: self.degens[..n].to_vec(),
            taus: self.taus[..=n].to_vec(),
            label: self.label.clone(),
        })
    }

    /// Source and target degree of `faces[n][_]`.
    pub fn face_degrees(&self, n: usize) -> (usize, usize) {
        match self.orientation {
            Orientation::Cocyclic => (n, n + 1),
            Orientation::Cyclic => (n + 1, n),
        }
    }

    /// Source and target degree of `degens[n][_]`.
    pub fn degen_degrees(&self, n: usize) -> (usize, usize) {
        let (a, b) = self.face_degrees(n);
        (b, a)
    }

    /// Every operator restricted to the given subspaces, one per degree.
    ///
    /// Fails with a restriction error when an operator leaves them.
    pub fn restrict(&self, subs: &[Subspace]) -> Result<ParaCyclicModule> {
        if subs.len() != self.dims.len() {
            return Err(Error::Dimension(
                "one subspace per degree is required".into(),
            ));
        }
        let top = self.truncation();
        let mut faces = Vec::with_capacity(top);
        let mut degens = Vec::with_capacity(top);
        for n in 0..top {
            let (src, dst) = self.face_degrees(n);
            faces.push(
                self.faces[n]
                    .iter()
                    .map(|f| restrict_operator(f, &subs[src], &subs[dst]))
                    .collect::<Result<Vec<_>>>()?,
            );
            let (src, dst) = self.degen_degrees(n);
            degens.push(
                self.degens[n]
                    .iter()
                    .map(|f| restrict_operator(f, &subs[src], &subs[dst]))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let taus = (0..=top)
            .map(|n| restrict_operator(&self.taus[n], &subs[n], &subs[n]))
            .collect::<Result<Vec<_>>>()?;
        ParaCyclicModule::new(
            self.orientation,
            self.field,
            subs.iter().map(Subspace::dim).collect(),
            faces,
            degens,
            taus,
            self.label.clone(),
        )
    }

    /// Whether `τ_n^{n+1} = id` in every degree.
    pub fn is_cyclic(&self) -> Result<bool> {
        for (n, t) in self.taus.iter().enumerate() {
            if !t.pow(n as u32 + 1)?.is_identity() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn evaluate_word(&self, word: &GeneratorWord) -> Result<Matrix> {
        self.evaluate_cached(word, &mut HashMap::new())
    }

    /// Evaluates a word, memoizing letter matrices (useful for repeated twists).
    pub fn evaluate_cached(
        &self,
        word: &GeneratorWord,
        cache: &mut HashMap<Letter, Matrix>,
    ) -> Result<Matrix> {
        let top = self.truncation();
        if word.max_degree() > top {
            return Err(Error::Truncation(format!(
                "{word} reaches degree {} beyond truncation {top}",
                word.max_degree()
            )));
        }
        for l in &word.letters {
            if !cache.contains_key(l) {
                let m = self.letter_matrix(*l)?;
                cache.insert(*l, m);
            }
        }
        let mut mats: Vec<&Matrix> = word.letters.iter().map(|l| &cache[l]).collect();
        if mats.is_empty() {
            return Ok(Matrix::identity(self.field, self.dims[word.source]));
        }
        if self.orientation == Orientation::Cyclic {
            mats.reverse();
        }
        Matrix::chain(&mats)
    }

    fn letter_matrix(&self, l: Letter) -> Result<Matrix> {
        match l {
            Letter::Face { n, j } => Ok(self.faces[n][j].clone()),
            Letter::Degen { n, i } => Ok(self.degens[n][i].clone()),
            Letter::Tau { n, l } if l >= 0 => self.taus[n].pow(l as u32),
            Letter::Tau { n, l } => self.taus[n].inverse()?.pow((-l) as u32),
        }
    }
}

/// Checks every relation instance with twist exponents up to `2(n+1)` in flavor `N`.
pub fn certify_relations(t: &ParaCyclicModule) -> CertificationReport {
    certify_with(t, Flavor::N, &|n| 2 * (n as i64 + 1))
}

/// Checks the relations of `flavor` within the truncation of `t`, stopping at the first failure.
pub fn certify_with(
    t: &ParaCyclicModule,
    flavor: Flavor,
    max_exp: &dyn Fn(usize) -> i64,
) -> CertificationReport {
    let mut report = CertificationReport::default();
    let mut cache = HashMap::new();
    for rel in relation_instances(flavor, t.truncation(), max_exp) {
        let lhs = t.evaluate_cached(&rel.lhs, &mut cache);
        let rhs = t.evaluate_cached(&rel.rhs, &mut cache);
        report.checked += 1;
        let column = match (&lhs, &rhs) {
            (Ok(a), Ok(b)) if a == b => continue,
            (Ok(a), Ok(b)) if a.shape() == b.shape() => a.first_difference(b),
            _ => None,
        };
        report.failures.push(RelationFailure {
            relation: rel.name.to_string(),
            degree: rel.degree,
            lhs: rel.lhs.to_string(),
            rhs: rel.rhs.to_string(),
            column,
        });
        break;
    }
    report
}
