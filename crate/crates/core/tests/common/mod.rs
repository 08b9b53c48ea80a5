//! Test-side oracles: dense exact linear algebra and classical (co)cyclic
//! complexes assembled by index loops, independent of the library's
//! sparse elimination and tensor assembly.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use unicyclic_core::{FieldSpec, Matrix, Scalar};

pub type Dense = Vec<Vec<BigRational>>;

#[derive(Clone, Copy, Debug)]
pub struct OField(pub FieldSpec);

impl OField {
    pub fn norm(&self, x: BigRational) -> BigRational {
        match self.0 {
            FieldSpec::Rationals => x,
            FieldSpec::Prime(p) => {
                let p = BigInt::from(p);
                let num = ((x.numer() % &p) + &p) % &p;
                let den = ((x.denom() % &p) + &p) % &p;
                let inv = den.modpow(&(&p - 2u32), &p);
                BigRational::from_integer((num * inv) % &p)
            }
        }
    }

    pub fn inv(&self, x: &BigRational) -> BigRational {
        self.norm(x.recip())
    }
}

pub fn scalar(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rat(r) => r.clone(),
        Scalar::Mod { value, .. } => BigRational::from_integer(BigInt::from(*value)),
    }
}

pub fn dense(m: &Matrix) -> Dense {
    m.to_dense()
        .iter()
        .map(|row| row.iter().map(scalar).collect())
        .collect()
}

pub fn zeros(r: usize, c: usize) -> Dense {
    vec![vec![BigRational::zero(); c]; r]
}

pub fn identity(n: usize) -> Dense {
    let mut a = zeros(n, n);
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    a
}

pub fn mul(f: OField, a: &Dense, b: &Dense) -> Dense {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = zeros(r, c);
    for i in 0..r {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..c {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
        for x in out[i].iter_mut() {
            *x = f.norm(x.clone());
        }
    }
    out
}

pub fn lin(f: OField, a: &Dense, s: i64, b: &Dense) -> Dense {
    let s = BigRational::from_integer(BigInt::from(s));
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| f.norm(u + &s * v)).collect())
        .collect()
}

pub fn hcat(a: &Dense, b: &Dense) -> Dense {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().chain(y).cloned().collect())
        .collect()
}

/// Plain Gaussian elimination on a dense copy.
pub fn rank(f: OField, a: &Dense) -> usize {
    let mut m: Dense = a
        .iter()
        .map(|r| r.iter().map(|x| f.norm(x.clone())).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]);
        let pivot: Vec<BigRational> = m[r].iter().map(|x| f.norm(x * &inv)).collect();
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                let v = &m[i][j] - &factor * &pivot[j];
                m[i][j] = f.norm(v);
            }
        }
        m[r] = pivot;
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Incremental row echelon form over sparse rows, used to intersect many kernels.
pub struct Echelon {
    f: OField,
    pub pivots: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    pub fn new(f: OField) -> Self {
        Echelon {
            f,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds one constraint row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: BTreeMap<usize, BigRational>) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, _)) = row.iter().find(|(c, _)| self.pivots.contains_key(c)) else {
                break;
            };
            let factor = row[&lead].clone();
            for (c, v) in &self.pivots[&lead] {
                let e = row.entry(*c).or_insert_with(BigRational::zero);
                *e = self.f.norm(&*e - &factor * v);
            }
            row.retain(|_, v| !v.is_zero());
        }
        let Some((&lead, lv)) = row.iter().next() else {
            return false;
        };
        let inv = self.f.inv(lv);
        let row: BTreeMap<usize, BigRational> = row
            .into_iter()
            .map(|(c, v)| (c, self.f.norm(v * &inv)))
            .collect();
        self.pivots.insert(lead, row);
        true
    }

    pub fn annihilates(&self, v: &[BigRational]) -> bool {
        self.pivots.values().all(|row| {
            let s: BigRational = row.iter().map(|(c, x)| x * &v[*c]).sum();
            self.f.norm(s).is_zero()
        })
    }
}

pub fn matrix_rows(m: &Matrix) -> Vec<BTreeMap<usize, BigRational>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|(c, v)| (*c, scalar(v))).collect())
        .collect()
}

/// Basis tuples of `A^{⊗k}` in left-major order.
pub fn tuples(a: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| (0..a).map(move |x| [t.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

pub fn index(a: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * a + x)
}

/// A finite-dimensional algebra by structure constants: `mult[c][x*a+y]` is
/// the coefficient of `e_c` in `e_x e_y`.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub f: OField,
    pub a: usize,
    pub mult: Dense,
    pub unit: Vec<BigRational>,
}

/// The classical cyclic module `C_n = A^{⊗n+1}` on degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct Classical {
    pub dims: Vec<usize>,
    /// `faces[n][i] : C_{n+1} → C_n`
    pub faces: Vec<Vec<Dense>>,
    /// `degens[n][i] : C_n → C_{n+1}`
    pub degens: Vec<Vec<Dense>>,
    pub taus: Vec<Dense>,
}

impl Algebra {
    fn product(&self, x: usize, y: usize) -> Vec<(usize, BigRational)> {
        (0..self.a)
            .filter(|&c| !self.mult[c][x * self.a + y].is_zero())
            .map(|c| (c, self.mult[c][x * self.a + y].clone()))
            .collect()
    }

    pub fn classical(&self, top: usize) -> Classical {
        let a = self.a;
        let dims: Vec<usize> = (0..=top).map(|n| a.pow(n as u32 + 1)).collect();
        let mut faces = Vec::new();
        let mut degens = Vec::new();
        for n in 0..top {
            let mut fs = Vec::new();
            for i in 0..=n + 1 {
                let mut d = zeros(dims[n], dims[n + 1]);
                for t in tuples(a, n + 2) {
                    let col = index(a, &t);
                    if i <= n {
                        for (c, v) in self.product(t[i], t[i + 1]) {
                            let out: Vec<usize> = t[..i]
                                .iter()
                                .copied()
                                .chain([c])
                                .chain(t[i + 2..].iter().copied())
                                .collect();
                            d[index(a, &out)][col] += v;
                        }
                    } else {
                        for (c, v) in self.product(t[n + 1], t[0]) {
                            let out: Vec<usize> =
                                [c].into_iter().chain(t[1..=n].iter().copied()).collect();
                            d[index(a, &out)][col] += v;
                        }
                    }
                }
                fs.push(d);
            }
            faces.push(fs);
            let mut ss = Vec::new();
            for i in 0..=n {
                let mut s = zeros(dims[n + 1], dims[n]);
                for t in tuples(a, n + 1) {
                    let col = index(a, &t);
                    for (u, v) in self.unit.iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        let out: Vec<usize> = t[..=i]
                            .iter()
                            .copied()
                            .chain([u])
                            .chain(t[i + 1..].iter().copied())
                            .collect();
                        s[index(a, &out)][col] += v;
                    }
                }
                ss.push(s);
            }
            degens.push(ss);
        }
        let taus = (0..=top)
            .map(|n| {
                let mut m = zeros(dims[n], dims[n]);
                for t in tuples(a, n + 1) {
                    let out: Vec<usize> =
                        [t[n]].into_iter().chain(t[..n].iter().copied()).collect();
                    m[index(a, &out)][index(a, &t)] = BigRational::one();
                }
                m
            })
            .collect();
        Classical {
            dims,
            faces,
            degens,
            taus,
        }
    }
}

impl Classical {
    pub fn b(&self, f: OField, n: usize) -> Dense {
        let mut acc = zeros(self.dims[n], self.dims[n + 1]);
        for (i, d) in self.faces[n].iter().enumerate() {
            acc = lin(f, &acc, if i % 2 == 0 { 1 } else { -1 }, d);
        }
        acc
    }

    /// Hochschild homology in degrees `0..top`.
    pub fn hochschild(&self, f: OField) -> Vec<usize> {
        let top = self.dims.len() - 1;
        let ranks: Vec<usize> = (0..top).map(|n| rank(f, &self.b(f, n))).collect();
        (0..top)
            .map(|n| self.dims[n] - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
            .collect()
    }

    /// Homology of the quotient by the subcomplex spanned by the images of `rel[n]`.
    pub fn quotient_homology(&self, f: OField, rel: &[Dense]) -> Vec<usize> {
        let top = self.dims.len() - 1;
        let rel_rank: Vec<usize> = rel.iter().map(|r| rank(f, r)).collect();
        // rank of b̄_{n+1} : C_{n+1}/I → C_n/I
        let bar: Vec<usize> = (0..top)
            .map(|n| rank(f, &hcat(&self.b(f, n), &rel[n])) - rel_rank[n])
            .collect();
        (0..top)
            .map(|n| self.dims[n] - rel_rank[n] - bar[n] - if n > 0 { bar[n - 1] } else { 0 })
            .collect()
    }

    /// Cyclic homology via Connes' quotient `C / (1 − λ)`; characteristic zero only.
    pub fn cyclic(&self, f: OField) -> Vec<usize> {
        let rel: Vec<Dense> = self
            .taus
            .iter()
            .enumerate()
            .map(|(n, t)| {
                lin(
                    f,
                    &identity(self.dims[n]),
                    if n % 2 == 0 { -1 } else { 1 },
                    t,
                )
            })
            .collect();
        self.quotient_homology(f, &rel)
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `k[Z/n]` as an algebra.
pub fn group_algebra(f: OField, n: usize) -> Algebra {
    let mut mult = zeros(n, n * n);
    for x in 0..n {
        for y in 0..n {
            mult[(x + y) % n][x * n + y] = int(1);
        }
    }
    let mut unit = vec![int(0); n];
    unit[0] = int(1);
    Algebra {
        f,
        a: n,
        mult,
        unit,
    }
}

/// Functions on `Z/n` with pointwise product.
pub fn function_algebra(f: OField, n: usize) -> Algebra {
    let mut mult = zeros(n, n * n);
    for x in 0..n {
        mult[x][x * n + x] = int(1);
    }
    Algebra {
        f,
        a: n,
        mult,
        unit: vec![int(1); n],
    }
}

/// `k[x]/(x²)` with basis `1, x`.
pub fn dual_numbers(f: OField) -> Algebra {
    let mut mult = zeros(2, 4);
    mult[0][0] = int(1);
    mult[1][1] = int(1);
    mult[1][2] = int(1);
    Algebra {
        f,
        a: 2,
        mult,
        unit: vec![int(1), int(0)],
    }
}

pub fn ground(f: OField) -> Algebra {
    Algebra {
        f,
        a: 1,
        mult: vec![vec![int(1)]],
        unit: vec![int(1)],
    }
}

/// `g` acting diagonally on `A^{⊗n+1}` through a permutation of the basis of `A`.
pub fn diagonal_permutation(a: usize, n: usize, perm: &[usize]) -> Dense {
    let d = a.pow(n as u32 + 1);
    let mut m = zeros(d, d);
    for t in tuples(a, n + 1) {
        let out: Vec<usize> = t.iter().map(|&x| perm[x]).collect();
        m[index(a, &out)][index(a, &t)] = int(1);
    }
    m
}

pub fn is_nonnegative(v: &BigRational) -> bool {
    !v.is_negative()
}

use rand::Rng;
use unicyclic_core::lambda::{Flavor, GeneratorWord, Letter};

/// A random composable word with at most `max_len` letters inside degrees `0..=max_deg`.
pub fn random_word(
    rng: &mut impl Rng,
    flavor: Flavor,
    max_len: usize,
    max_deg: usize,
) -> GeneratorWord {
    let source = rng.gen_range(0..=max_deg);
    let len = rng.gen_range(0..=max_len);
    let mut cur = source;
    let mut applied = Vec::with_capacity(len);
    while applied.len() < len {
        let letter = match rng.gen_range(0..3) {
            0 if cur < max_deg => {
                let top = if flavor == Flavor::Plus { cur } else { cur + 1 };
                Letter::Face {
                    n: cur,
                    j: rng.gen_range(0..=top),
                }
            }
            1 if cur > 0 => Letter::Degen {
                n: cur - 1,
                i: rng.gen_range(0..cur),
            },
            2 if flavor != Flavor::Plus => {
                let l = match flavor {
                    Flavor::Z => rng.gen_range(-9..=9),
                    _ => rng.gen_range(0..=9),
                };
                Letter::Tau { n: cur, l }
            }
            _ => continue,
        };
        cur = letter.target();
        applied.push(letter);
    }
    applied.reverse();
    GeneratorWord::new(flavor, source, applied).expect("generated words compose")
}

use unicyclic_core::fixtures::classical_algebra;
use unicyclic_core::homology::hopf_cyclic_module;
use unicyclic_core::hopf::{BialgebraSpec, CoefficientDatum, SymmetryDatum};
use unicyclic_core::paracyclic::ParaCyclicModule;

pub fn to_matrix(field: FieldSpec, d: &Dense) -> Matrix {
    let rows = d.len();
    let cols = d.first().map_or(0, Vec::len);
    let mut t = Vec::new();
    for (i, row) in d.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v != BigRational::zero() {
                let s = field.from_ratio(
                    i64::try_from(v.numer()).unwrap(),
                    i64::try_from(v.denom()).unwrap(),
                );
                t.push((i, j, s.unwrap()));
            }
        }
    }
    Matrix::from_triplets(field, rows, cols, t).unwrap()
}

pub fn datum(alg: &Algebra) -> SymmetryDatum {
    let f = alg.f.0;
    classical_algebra(
        f,
        alg.a,
        to_matrix(f, &alg.mult),
        to_matrix(f, &alg.unit.iter().map(|x| vec![x.clone()]).collect()),
    )
    .unwrap()
}

pub fn pipeline_module(alg: &Algebra, top: usize) -> ParaCyclicModule {
    let k = BialgebraSpec::trivial(alg.f.0);
    hopf_cyclic_module(&k, &datum(alg), &CoefficientDatum::trivial(&k), top)
        .unwrap()
        .family
}
