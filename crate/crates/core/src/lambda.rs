//! The cyclic categories as a rewriting system.
//!
//! Words are written in composition order: `a * b` means `a ∘ b`, so the
//! rightmost letter acts first. Normal forms are
//! `∂_{i_r} ⋯ ∂_{i_1} ∘ σ_{j_1} ⋯ σ_{j_s} ∘ τ^ℓ` with face indices strictly
//! decreasing and degeneracy indices strictly increasing from the outside in.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::paracyclic::ParaCyclicModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// The simplicial subcategory: no cyclic operators.
    Plus,
    /// Para-cyclic with `τ^ℓ`, `ℓ ≥ 0`.
    N,
    /// Para-cyclic with invertible `τ`.
    Z,
    /// Connes' cyclic category, `τ_n^{n+1} = id`.
    Lambda,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Plus, Flavor::N, Flavor::Z, Flavor::Lambda];

    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Plus => "plus",
            Flavor::N => "n",
            Flavor::Z => "z",
            Flavor::Lambda => "lambda",
        }
    }

    fn reduce_twist(&self, n: usize, l: i64) -> i64 {
        match self {
            Flavor::Lambda => l.rem_euclid(n as i64 + 1),
            _ => l,
        }
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plus" => Ok(Flavor::Plus),
            "n" => Ok(Flavor::N),
            "z" => Ok(Flavor::Z),
            "lambda" => Ok(Flavor::Lambda),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}"))),
        }
    }
}

/// A generator with its degree annotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `∂^n_j : [n] → [n+1]`.
    Face { n: usize, j: usize },
    /// `σ^n_i : [n+1] → [n]`.
    Degen { n: usize, i: usize },
    /// `τ_n^l : [n] → [n]`.
    Tau { n: usize, l: i64 },
}

impl Letter {
    pub fn source(&self) -> usize {
        match *self {
            Letter::Face { n, .. } | Letter::Tau { n, .. } => n,
            Letter::Degen { n, .. } => n + 1,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Letter::Face { n, .. } => n + 1,
            Letter::Degen { n, .. } | Letter::Tau { n, .. } => n,
        }
    }

    fn check(&self, flavor: Flavor) -> Result<()> {
        match *self {
            Letter::Face { n, j } => {
                let top = if flavor == Flavor::Plus { n } else { n + 1 };
                if j > top {
                    return Err(Error::Range(format!("face d{n}_{j}: index exceeds {top}")));
                }
            }
            Letter::Degen { n, i } if i > n => {
                return Err(Error::Range(format!(
                    "degeneracy s{n}_{i}: index exceeds {n}"
                )));
            }
            Letter::Tau { n, l } => {
                if flavor == Flavor::Plus && l != 0 {
                    return Err(Error::Range(format!(
                        "t{n}_{l}: no cyclic operators in plus"
                    )));
                }
                if flavor == Flavor::N && l < 0 {
                    return Err(Error::Range(format!(
                        "t{n}_{l}: negative twist needs flavor z"
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Face { n, j } => write!(f, "d{n}_{j}"),
            Letter::Degen { n, i } => write!(f, "s{n}_{i}"),
            Letter::Tau { n, l } => write!(f, "t{n}^{l}"),
        }
    }
}

/// A composable word, outermost letter first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWord {
    pub flavor: Flavor,
    pub source: usize,
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(flavor: Flavor, source: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            l.check(flavor)?;
        }
        for pair in letters.windows(2) {
            if pair[0].source() != pair[1].target() {
                return Err(Error::Composition(format!(
                    "{} starts at [{}] but {} ends at [{}]",
                    pair[0],
                    pair[0].source(),
                    pair[1],
                    pair[1].target()
                )));
            }
        }
        if let Some(last) = letters.last() {
            if last.source() != source {
                return Err(Error::Composition(format!(
                    "word does not start at [{source}]"
                )));
            }
        }
        Ok(GeneratorWord {
            flavor,
            source,
            letters,
        })
    }

    pub fn identity(flavor: Flavor, n: usize) -> Self {
        GeneratorWord {
            flavor,
            source: n,
            letters: Vec::new(),
        }
    }

    pub fn target(&self) -> usize {
        self.letters.first().map_or(self.source, Letter::target)
    }

    /// Largest object the word passes through.
    pub fn max_degree(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.source().max(l.target()))
            .max()
            .unwrap_or(self.source)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id[{}]", self.source);
        }
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Parses `(d|s|t)<deg>_<idx>` letters joined by `*`. `t<deg>^<l>` and `id[<deg>]` are also accepted.
pub fn parse_word(text: &str, flavor: Flavor) -> Result<GeneratorWord> {
    let mut letters = Vec::new();
    for tok in text.split('*') {
        letters.push(parse_letter(tok.trim())?);
    }
    let source = letters
        .last()
        .expect("split yields at least one token")
        .source();
    let mut w = GeneratorWord::new(flavor, source, letters)?;
    w.letters.retain(|l| !matches!(l, Letter::Tau { l: 0, .. }));
    Ok(w)
}

fn parse_letter(tok: &str) -> Result<Letter> {
    let bad = || Error::Parse(format!("malformed letter {tok:?}"));
    if let Some(rest) = tok.strip_prefix("id[") {
        let n = rest
            .strip_suffix(']')
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        return Ok(Letter::Tau { n, l: 0 });
    }
    let mut chars = tok.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let rest = chars.as_str();
    let (deg, idx) = rest.split_once(['_', '^']).ok_or_else(bad)?;
    let n: usize = deg.parse().map_err(|_| bad())?;
    match kind {
        'd' => Ok(Letter::Face {
            n,
            j: idx.parse().map_err(|_| bad())?,
        }),
        's' => Ok(Letter::Degen {
            n,
            i: idx.parse().map_err(|_| bad())?,
        }),
        't' => Ok(Letter::Tau {
            n,
            l: idx.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

/// A morphism in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaMorphism {
    pub flavor: Flavor,
    pub source: usize,
    pub target: usize,
    /// Face indices, outermost first, strictly decreasing.
    pub faces: Vec<usize>,
    /// Degeneracy indices, outermost first, strictly increasing.
    pub degens: Vec<usize>,
    pub twist: i64,
}

impl LambdaMorphism {
    pub fn identity(flavor: Flavor, n: usize) -> Self {
        LambdaMorphism {
            flavor,
            source: n,
            target: n,
            faces: Vec::new(),
            degens: Vec::new(),
            twist: 0,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.faces.is_empty() && self.degens.is_empty() && self.twist == 0
    }

    /// The normal-form word, outermost letter first.
    pub fn letters(&self) -> Vec<Letter> {
        let s = self.degens.len();
        let mid = self.source - s;
        let mut out = Vec::with_capacity(self.faces.len() + s + 1);
        for (k, &j) in self.faces.iter().enumerate() {
            out.push(Letter::Face {
                n: self.target - 1 - k,
                j,
            });
        }
        for (k, &i) in self.degens.iter().enumerate() {
            out.push(Letter::Degen { n: mid + k, i });
        }
        if self.twist != 0 {
            out.push(Letter::Tau {
                n: self.source,
                l: self.twist,
            });
        }
        out
    }

    pub fn word(&self) -> GeneratorWord {
        GeneratorWord {
            flavor: self.flavor,
            source: self.source,
            letters: self.letters(),
        }
    }

    /// Word used for display. When there are no degeneracies the twist is
    /// carried outward through the faces by `∂_j τ^i = τ^{i+p} ∂_q`, which
    /// puts it on the target side; otherwise it stays at the source.
    pub fn display_letters(&self) -> Vec<Letter> {
        if !self.degens.is_empty() || self.twist == 0 || self.faces.is_empty() {
            return self.letters();
        }
        let mut twist = self.twist;
        let mut faces = Vec::with_capacity(self.faces.len());
        let mut n = self.source;
        for &j in self.faces.iter().rev() {
            let t = twist + j as i64;
            let m = n as i64 + 1;
            faces.push(Letter::Face {
                n,
                j: t.rem_euclid(m) as usize,
            });
            twist = self.flavor.reduce_twist(n + 1, twist + t.div_euclid(m));
            n += 1;
        }
        faces.reverse();
        let mut out = Vec::with_capacity(faces.len() + 1);
        if twist != 0 {
            out.push(Letter::Tau {
                n: self.target,
                l: twist,
            });
        }
        out.extend(faces);
        out
    }
}

impl fmt::Display for LambdaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = GeneratorWord {
            flavor: self.flavor,
            source: self.source,
            letters: self.display_letters(),
        };
        write!(f, "{word}")
    }
}

/// Which redex to contract first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

pub fn normal_form(w: &GeneratorWord) -> LambdaMorphism {
    normal_form_with(w, Strategy::Leftmost)
}

pub fn normal_form_with(w: &GeneratorWord, strategy: Strategy) -> LambdaMorphism {
    normal_form_by(w, &mut |count| match strategy {
        Strategy::Leftmost => 0,
        Strategy::Rightmost => count - 1,
    })
}

/// Normal form where `choose(k)` picks which of the `k` current redexes to contract.
pub fn normal_form_by(w: &GeneratorWord, choose: &mut dyn FnMut(usize) -> usize) -> LambdaMorphism {
    let flavor = w.flavor;
    let mut letters = clean(flavor, w.letters.clone());
    loop {
        let redexes: Vec<(usize, Vec<Letter>)> = letters
            .windows(2)
            .enumerate()
            .filter_map(|(k, p)| rewrite(flavor, p[0], p[1]).map(|r| (k, r)))
            .collect();
        if redexes.is_empty() {
            break;
        }
        let pick = choose(redexes.len()).min(redexes.len() - 1);
        let (k, replacement) = redexes.into_iter().nth(pick).expect("pick in range");
        letters.splice(k..k + 2, replacement);
        letters = clean(flavor, letters);
    }
    extract(flavor, w.source, w.target(), letters)
}

fn clean(flavor: Flavor, letters: Vec<Letter>) -> Vec<Letter> {
    letters
        .into_iter()
        .filter_map(|l| match l {
            Letter::Tau { n, l } => {
                let l = flavor.reduce_twist(n, l);
                (l != 0).then_some(Letter::Tau { n, l })
            }
            other => Some(other),
        })
        .collect()
}

/// One rewrite step on an adjacent pair, outer letter first.
fn rewrite(flavor: Flavor, outer: Letter, inner: Letter) -> Option<Vec<Letter>> {
    use Letter::*;
    match (outer, inner) {
        (Tau { n, l: a }, Tau { l: b, .. }) => Some(vec![Tau { n, l: a + b }]),
        (Face { n: m1, j: a }, Face { n: m, j: b }) if a <= b => {
            Some(vec![Face { n: m1, j: b + 1 }, Face { n: m, j: a }])
        }
        (Degen { n: m, i: a }, Degen { n: m1, i: b }) if a >= b => {
            Some(vec![Degen { n: m, i: b }, Degen { n: m1, i: a + 1 }])
        }
        (Degen { n, i: k }, Face { j: m, .. }) => Some(if m == k || m == k + 1 {
            Vec::new()
        } else if m < k {
            vec![Face { n: n - 1, j: m }, Degen { n: n - 1, i: k - 1 }]
        } else {
            vec![Face { n: n - 1, j: m - 1 }, Degen { n: n - 1, i: k }]
        }),
        (Tau { l: k, .. }, Face { n, j: q }) => {
            let t = (n as i64 + 1) * k + q as i64;
            let m = n as i64 + 2;
            Some(vec![
                Face {
                    n,
                    j: t.rem_euclid(m) as usize,
                },
                Tau {
                    n,
                    l: flavor.reduce_twist(n, t.div_euclid(m)),
                },
            ])
        }
        (Tau { n, l: i }, Degen { i: j, .. }) => {
            let d = j as i64 - i;
            let m = n as i64 + 1;
            let p = -d.div_euclid(m);
            Some(vec![
                Degen {
                    n,
                    i: d.rem_euclid(m) as usize,
                },
                Tau { n: n + 1, l: i + p },
            ])
        }
        _ => None,
    }
}

fn extract(flavor: Flavor, source: usize, target: usize, letters: Vec<Letter>) -> LambdaMorphism {
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    let mut twist = 0;
    for l in letters {
        match l {
            Letter::Face { j, .. } => {
                debug_assert!(
                    degens.is_empty() && twist == 0,
                    "face below a degeneracy or twist"
                );
                faces.push(j);
            }
            Letter::Degen { i, .. } => {
                debug_assert!(twist == 0, "degeneracy below a twist");
                degens.push(i);
            }
            Letter::Tau { l, .. } => twist = l,
        }
    }
    LambdaMorphism {
        flavor,
        source,
        target,
        faces,
        degens,
        twist,
    }
}

/// `f ∘ g` in normal form.
pub fn compose(f: &LambdaMorphism, g: &LambdaMorphism) -> Result<LambdaMorphism> {
    if f.flavor != g.flavor {
        return Err(Error::Composition(format!(
            "flavors {} and {}",
            f.flavor.name(),
            g.flavor.name()
        )));
    }
    if f.source != g.target {
        return Err(Error::Composition(format!(
            "source [{}] of the outer map differs from target [{}] of the inner map",
            f.source, g.target
        )));
    }
    let mut letters = f.letters();
    letters.extend(g.letters());
    Ok(normal_form(&GeneratorWord {
        flavor: f.flavor,
        source: g.source,
        letters,
    }))
}

pub fn equal(f: &LambdaMorphism, g: &LambdaMorphism) -> bool {
    f == g
}

/// The matrix of `f` on `t`.
pub fn evaluate(f: &LambdaMorphism, t: &ParaCyclicModule) -> Result<Matrix> {
    t.evaluate_word(&f.word())
}

/// One instance of a defining relation, both sides as words.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub name: &'static str,
    /// Highest degree either side passes through.
    pub degree: usize,
    pub lhs: GeneratorWord,
    pub rhs: GeneratorWord,
}

fn word(flavor: Flavor, source: usize, letters: Vec<Letter>) -> GeneratorWord {
    GeneratorWord::new(flavor, source, letters).expect("relation words are well formed")
}

/// All relation instances whose words stay within degrees `0..=max_degree`, lowest degree first.
/// Twist exponents run over `0..=max_exp(n)`, and also negative values in flavor `Z`.
pub fn relation_instances(
    flavor: Flavor,
    max_degree: usize,
    max_exp: &dyn Fn(usize) -> i64,
) -> Vec<RelationInstance> {
    use Letter::*;
    let mut out = Vec::new();
    let para = flavor != Flavor::Plus;
    let top_face = |n: usize| if para { n + 1 } else { n };
    let exps = |n: usize| -> Vec<i64> {
        let e = max_exp(n);
        if flavor == Flavor::Z {
            (-e..=e).collect()
        } else {
            (0..=e).collect()
        }
    };
    let mut push = |name, _base: usize, lhs: GeneratorWord, rhs: GeneratorWord| {
        let degree = lhs.max_degree().max(rhs.max_degree());
        if degree <= max_degree {
            out.push(RelationInstance {
                name,
                degree,
                lhs,
                rhs,
            });
        }
    };
    for n in 0..=max_degree {
        for j in 0..=top_face(n) {
            for i in 0..=j {
                push(
                    "dd",
                    n,
                    word(flavor, n, vec![Face { n: n + 1, j: i }, Face { n, j }]),
                    word(
                        flavor,
                        n,
                        vec![Face { n: n + 1, j: j + 1 }, Face { n, j: i }],
                    ),
                );
            }
        }
        if n >= 1 {
            for j in 0..n {
                for i in 0..=j {
                    push(
                        "ss",
                        n,
                        word(
                            flavor,
                            n + 1,
                            vec![Degen { n: n - 1, i: j }, Degen { n, i }],
                        ),
                        word(
                            flavor,
                            n + 1,
                            vec![Degen { n: n - 1, i }, Degen { n, i: j + 1 }],
                        ),
                    );
                }
            }
        }
        for i in 0..=n {
            let id = GeneratorWord::identity(flavor, n);
            push(
                "sd",
                n,
                word(flavor, n, vec![Degen { n, i }, Face { n, j: i }]),
                id.clone(),
            );
            if i < top_face(n) {
                push(
                    "sd",
                    n,
                    word(flavor, n, vec![Degen { n, i }, Face { n, j: i + 1 }]),
                    id,
                );
            }
        }
        for i in 0..=top_face(n) {
            for j in 0..=n {
                let rhs = if i <= j {
                    vec![Degen { n: n + 1, i: j + 1 }, Face { n: n + 1, j: i }]
                } else {
                    vec![Degen { n: n + 1, i: j }, Face { n: n + 1, j: i + 1 }]
                };
                push(
                    "ds",
                    n,
                    word(flavor, n + 1, vec![Face { n, j: i }, Degen { n, i: j }]),
                    word(flavor, n + 1, rhs),
                );
            }
        }
        if !para {
            continue;
        }
        let es = exps(n);
        for &s in &es {
            for &t in &es {
                push(
                    "tt",
                    n,
                    word(flavor, n, vec![Tau { n, l: s }, Tau { n, l: t }]),
                    word(flavor, n, vec![Tau { n, l: s + t }]),
                );
            }
        }
        let m = n as i64 + 1;
        for j in 0..=n + 1 {
            for &i in &es {
                let t = i + j as i64;
                let (p, q) = (t.div_euclid(m), t.rem_euclid(m) as usize);
                push(
                    "dt",
                    n,
                    word(flavor, n, vec![Face { n, j }, Tau { n, l: i }]),
                    word(
                        flavor,
                        n,
                        vec![Tau { n: n + 1, l: i + p }, Face { n, j: q }],
                    ),
                );
            }
        }
        for j in 0..=n {
            for &i in &es {
                let d = j as i64 - i;
                let (p, q) = (-d.div_euclid(m), d.rem_euclid(m) as usize);
                if flavor == Flavor::N && i + p < 0 {
                    continue;
                }
                push(
                    "ts",
                    n,
                    word(flavor, n + 1, vec![Tau { n, l: i }, Degen { n, i: j }]),
                    word(
                        flavor,
                        n + 1,
                        vec![Degen { n, i: q }, Tau { n: n + 1, l: i + p }],
                    ),
                );
            }
        }
        if flavor == Flavor::Lambda {
            push(
                "cyclic",
                n,
                word(flavor, n, vec![Tau { n, l: m }]),
                GeneratorWord::identity(flavor, n),
            );
        }
    }
    out.sort_by_key(|r| r.degree);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(text: &str, flavor: Flavor) -> LambdaMorphism {
        normal_form(&parse_word(text, flavor).unwrap())
    }

    #[test]
    fn parse_examples() {
        let w = parse_word("d0_0", Flavor::N).unwrap();
        assert_eq!((w.source, w.target()), (0, 1));
        let w = parse_word("s0_0 * d0_0", Flavor::N).unwrap();
        assert_eq!((w.source, w.target()), (0, 0));
        assert!(parse_word("d1_0 * t1_-2", Flavor::Z).is_ok());
        assert!(matches!(
            parse_word("d1_0 * t1_-2", Flavor::N),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            parse_word("d1_0 * d1_0", Flavor::N),
            Err(Error::Composition(_))
        ));
        assert!(matches!(
            parse_word("d1_3", Flavor::N),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            parse_word("d1_2", Flavor::Plus),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            parse_word("x1_2", Flavor::N),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(
            nf("s0_0 * d0_0", Flavor::N),
            LambdaMorphism::identity(Flavor::N, 0)
        );
        assert_eq!(nf("d1_0 * t1_1", Flavor::N), nf("t2_1 * d1_1", Flavor::N));
        assert_eq!(nf("d1_1 * t1_1", Flavor::N), nf("t2_2 * d1_0", Flavor::N));
        assert_eq!(
            nf("t1_2", Flavor::Lambda),
            LambdaMorphism::identity(Flavor::Lambda, 1)
        );
    }

    #[test]
    fn display_examples() {
        assert_eq!(nf("s0_0 * d0_0", Flavor::N).to_string(), "id[0]");
        assert_eq!(nf("d1_0 * t1_1", Flavor::N).to_string(), "t2^1 * d1_1");
        assert_eq!(nf("d1_1 * t1_1", Flavor::N).to_string(), "t2^2 * d1_0");
        assert_eq!(nf("t1_2", Flavor::Lambda).to_string(), "id[1]");
    }

    #[test]
    fn display_round_trips() {
        for text in ["d1_0 * t1_1", "d2_3 * d1_0 * t1_5", "s1_0 * t2_4", "d0_1"] {
            let f = nf(text, Flavor::N);
            assert_eq!(nf(&f.to_string(), Flavor::N), f, "{text}");
        }
    }

    #[test]
    fn compose_examples() {
        let s = nf("s0_0", Flavor::N);
        let d = nf("d0_1", Flavor::N);
        assert!(compose(&s, &d).unwrap().is_identity());
        let t = nf("t1_1", Flavor::N);
        assert_eq!(compose(&t, &t).unwrap(), nf("t1_2", Flavor::N));
        let t = nf("t1_1", Flavor::Lambda);
        assert!(compose(&t, &t).unwrap().is_identity());
        assert!(compose(&d, &d).is_err());
        let id = LambdaMorphism::identity(Flavor::N, 1);
        let g = nf("d0_1", Flavor::N);
        assert_eq!(compose(&id, &g).unwrap(), g);
    }

    #[test]
    fn equality_examples() {
        assert!(equal(
            &nf("d1_0 * d0_0", Flavor::N),
            &nf("d1_1 * d0_0", Flavor::N)
        ));
        assert!(!equal(
            &nf("t1_1", Flavor::N),
            &LambdaMorphism::identity(Flavor::N, 1)
        ));
        assert!(equal(
            &nf("t1_2", Flavor::Lambda),
            &LambdaMorphism::identity(Flavor::Lambda, 1)
        ));
    }

    #[test]
    fn cyclic_order_in_lambda() {
        for n in 0..=6 {
            let w = GeneratorWord::new(Flavor::Lambda, n, vec![Letter::Tau { n, l: n as i64 + 1 }])
                .unwrap();
            assert!(normal_form(&w).is_identity());
        }
    }

    #[test]
    fn relations_normalize_equal() {
        for flavor in Flavor::ALL {
            let rels = relation_instances(flavor, 4, &|n| 2 * (n as i64 + 1));
            assert!(!rels.is_empty());
            for r in rels {
                assert_eq!(
                    normal_form(&r.lhs),
                    normal_form(&r.rhs),
                    "{} {} = {}",
                    r.name,
                    r.lhs,
                    r.rhs
                );
            }
        }
    }
}
