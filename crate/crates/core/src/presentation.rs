//! Generators and relations attached to a Cartan counterpart, the explicit
//! isomorphisms between the algebras of a quiver and its mutation, and
//! checks of both against a concrete structure-constant algebra.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{LieElement, StructureAlgebra};
use crate::cartan::CartanCounterpart;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Span};
use crate::matrix::CycleReport;
use crate::quiver::SignedValuedQuiver;
use crate::roots::{rho, Root, RootSystemData, DEFAULT_ROOT_CAP};

/// A generator: `h_i`, or `e_{eps i}` with `eps = +1` for `e_i` and `-1`
/// for `f_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    H(usize),
    E(i8, usize),
}

impl Gen {
    pub fn e(eps: i64, i: usize) -> Gen {
        Gen::E(if eps > 0 { 1 } else { -1 }, i)
    }

    pub fn index(&self) -> usize {
        match *self {
            Gen::H(i) | Gen::E(_, i) => i,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::H(i) => write!(f, "h{}", i + 1),
            Gen::E(1, i) => write!(f, "e{}", i + 1),
            Gen::E(_, i) => write!(f, "f{}", i + 1),
        }
    }
}

/// Bracket expression over generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen(Gen),
    Bracket(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Right-nested word `[x_1, [x_2, [..., x_m]]]`.
    pub fn word(gens: &[Gen]) -> Expr {
        let (last, rest) = gens.split_last().expect("empty bracket word");
        rest.iter()
            .rev()
            .fold(Expr::Gen(*last), |acc, g| Expr::Bracket(Box::new(Expr::Gen(*g)), Box::new(acc)))
    }

    pub fn bracket(a: Expr, b: Expr) -> Expr {
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn max_index(&self) -> usize {
        match self {
            Expr::Gen(g) => g.index(),
            Expr::Bracket(a, b) => a.max_index().max(b.max_index()),
        }
    }

    /// Generators of a right-nested word, or `None` for other shapes.
    fn flat(&self) -> Option<Vec<Gen>> {
        match self {
            Expr::Gen(g) => Some(vec![*g]),
            Expr::Bracket(a, b) => match **a {
                Expr::Gen(g) => {
                    let mut rest = b.flat()?;
                    rest.insert(0, g);
                    Some(rest)
                }
                _ => None,
            },
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self, self.flat()) {
            (Expr::Gen(g), _) => write!(f, "{g}"),
            (_, Some(gens)) => {
                let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            (Expr::Bracket(a, b), None) => write!(f, "[{a},{b}]"),
        }
    }
}

/// `lhs = sum of coeff * generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub lhs: Expr,
    pub rhs: Vec<(Gen, i64)>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.lhs)?;
        if self.rhs.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.rhs.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}{g}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn family(&self, fam: &str) -> impl Iterator<Item = &Relation> + '_ {
        let fam = fam.to_string();
        self.relations.iter().filter(move |r| r.family == fam)
    }

    pub fn contains_text(&self, text: &str) -> bool {
        self.relations.iter().any(|r| r.to_string() == text)
    }

    pub fn extend(&mut self, other: RelationSet) {
        self.relations.extend(other.relations);
    }
}

/// Images of the generators in a structure algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImages {
    pub h: Vec<LieElement>,
    pub e: Vec<LieElement>,
    pub f: Vec<LieElement>,
}

impl GeneratorImages {
    /// `h_i`, `x_{alpha_i}`, `x_{-alpha_i}` of the algebra itself.
    pub fn canonical(alg: &StructureAlgebra) -> Self {
        let n = alg.rank();
        GeneratorImages {
            h: (0..n).map(|i| alg.element(alg.h(i))).collect(),
            e: (0..n).map(|i| alg.element(alg.e(i))).collect(),
            f: (0..n).map(|i| alg.element(alg.f(i))).collect(),
        }
    }

    pub fn zero(alg: &StructureAlgebra) -> Self {
        let z = LieElement::zero(alg.dim());
        let n = alg.rank();
        GeneratorImages { h: vec![z.clone(); n], e: vec![z.clone(); n], f: vec![z; n] }
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn get(&self, g: Gen) -> &LieElement {
        match g {
            Gen::H(i) => &self.h[i],
            Gen::E(1, i) => &self.e[i],
            Gen::E(_, i) => &self.f[i],
        }
    }

    pub fn set(&mut self, g: Gen, v: LieElement) {
        match g {
            Gen::H(i) => self.h[i] = v,
            Gen::E(1, i) => self.e[i] = v,
            Gen::E(_, i) => self.f[i] = v,
        }
    }

    pub fn all(&self) -> impl Iterator<Item = &LieElement> {
        self.h.iter().chain(&self.e).chain(&self.f)
    }
}

/// Value of a bracket expression under `images`.
pub fn bracket_eval(alg: &StructureAlgebra, expr: &Expr, images: &GeneratorImages) -> Result<LieElement> {
    if expr.max_index() >= images.n() {
        return Err(Error::VertexOutOfRange(expr.max_index() + 1, images.n()));
    }
    match expr {
        Expr::Gen(g) => {
            let v = images.get(*g).clone();
            if v.dim() != alg.dim() {
                return Err(Error::Shape(format!("image of {g} has length {}, expected {}", v.dim(), alg.dim())));
            }
            Ok(v)
        }
        Expr::Bracket(a, b) => alg.bracket(&bracket_eval(alg, a, images)?, &bracket_eval(alg, b, images)?),
    }
}

/// `(R1)` to `(R4)` for every index pair.
pub fn relations_r1_r4(c: &CartanCounterpart) -> RelationSet {
    let n = c.n();
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rels.push(Relation {
                family: "R1",
                lhs: Expr::word(&[Gen::H(i), Gen::H(j)]),
                rhs: vec![],
            });
        }
    }
    for i in 0..n {
        rels.push(Relation {
            family: "R2",
            lhs: Expr::word(&[Gen::e(1, i), Gen::e(-1, i)]),
            rhs: vec![(Gen::H(i), 1)],
        });
    }
    for i in 0..n {
        for j in 0..n {
            for eps in [1, -1] {
                let coeff = eps * c.c[i][j];
                rels.push(Relation {
                    family: "R3",
                    lhs: Expr::word(&[Gen::H(i), Gen::e(eps, j)]),
                    rhs: if coeff == 0 { vec![] } else { vec![(Gen::e(eps, j), coeff)] },
                });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for eps in [1, -1] {
                for delta in [1, -1] {
                    let m = (eps * delta * c.c[i][j]).min(0);
                    let mut word = vec![Gen::e(eps, i); (1 - m) as usize];
                    word.push(Gen::e(delta, j));
                    rels.push(Relation { family: "R4", lhs: Expr::word(&word), rhs: vec![] });
                }
            }
        }
    }
    RelationSet { relations: rels }
}

/// Shapes of chordless cycles that carry `(R5)` relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleShape {
    /// Every edge has weight one.
    Simple,
    /// A triangle with two double edges meeting at a short vertex.
    B3,
    /// A triangle with two double edges meeting at a long vertex.
    C3,
    /// A square with two double edges.
    F4,
}

/// Shape of a cycle and its long vertices. A vertex is long when it is the
/// larger end (`|c_uv| > |c_vu|`) of a double edge of the cycle.
pub fn cycle_shape(c: &CartanCounterpart, cycle: &[usize]) -> Result<(CycleShape, Vec<usize>)> {
    let t = cycle.len();
    let unknown = || Error::UnknownCycleShape(cycle.iter().map(|v| v + 1).collect());
    let edges: Vec<(usize, usize)> = (0..t).map(|q| (cycle[q], cycle[(q + 1) % t])).collect();
    let weight = |&(u, v): &(usize, usize)| (c.c[u][v] * c.c[v][u]).abs();
    if edges.iter().any(|e| weight(e) == 0) {
        return Err(unknown());
    }
    if edges.iter().all(|e| weight(e) == 1) {
        return Ok((CycleShape::Simple, vec![]));
    }
    let mut long = Vec::new();
    let mut doubles = 0;
    for &(u, v) in &edges {
        match weight(&(u, v)) {
            1 => {}
            2 => {
                doubles += 1;
                long.push(if c.c[u][v].abs() > c.c[v][u].abs() { u } else { v });
            }
            _ => return Err(unknown()),
        }
    }
    long.sort_unstable();
    long.dedup();
    let shape = match (t, doubles, long.len()) {
        (3, 2, 2) => CycleShape::B3,
        (3, 2, 1) => CycleShape::C3,
        (4, 2, 2) => CycleShape::F4,
        _ => return Err(unknown()),
    };
    Ok((shape, long))
}

/// The sign-chained word along `seq` starting with sign `eps1`:
/// `eps_{q+1} = -sgn(c_{seq_q, seq_{q+1}}) eps_q`.
pub fn sign_chain_word(c: &CartanCounterpart, seq: &[usize], eps1: i64) -> Vec<Gen> {
    let mut eps = eps1;
    let mut word = Vec::with_capacity(seq.len());
    for (q, &v) in seq.iter().enumerate() {
        word.push(Gen::e(eps, v));
        if let Some(&w) = seq.get(q + 1) {
            eps *= -c.c[v][w].signum();
        }
    }
    word
}

/// All traversals of a cycle: every starting vertex, both directions.
fn traversals(cycle: &[usize]) -> Vec<Vec<usize>> {
    let t = cycle.len();
    let mut out = Vec::new();
    for s in 0..t {
        out.push((0..t).map(|q| cycle[(s + q) % t]).collect());
        out.push((0..t).map(|q| cycle[(s + t - q) % t]).collect());
    }
    out
}

/// Sign-chained words of one cycle, split into imposed and excluded ones
/// for the given long-vertex marking (excluded: both ends long).
pub fn cycle_words(c: &CartanCounterpart, cycle: &[usize], long: &[usize]) -> (Vec<Vec<Gen>>, Vec<Vec<Gen>>) {
    let (mut kept, mut dropped) = (Vec::new(), Vec::new());
    for seq in traversals(cycle) {
        let both_long = long.contains(&seq[0]) && long.contains(seq.last().unwrap());
        for eps in [1, -1] {
            let w = sign_chain_word(c, &seq, eps);
            if both_long {
                dropped.push(w);
            } else {
                kept.push(w);
            }
        }
    }
    (kept, dropped)
}

/// `(R5)` relations of the chordless cycles, with long vertices marked by
/// [`cycle_shape`].
pub fn relations_r5(c: &CartanCounterpart, cycles: &[CycleReport]) -> Result<RelationSet> {
    let marks = cycles
        .iter()
        .map(|cy| cycle_shape(c, &cy.vertices).map(|(_, long)| long))
        .collect::<Result<Vec<_>>>()?;
    relations_r5_marked(c, cycles, &marks)
}

/// `(R5)` with an explicit long-vertex list per cycle.
pub fn relations_r5_marked(c: &CartanCounterpart, cycles: &[CycleReport], long: &[Vec<usize>]) -> Result<RelationSet> {
    let mut rels = Vec::new();
    for (cy, marks) in cycles.iter().zip(long) {
        cycle_shape(c, &cy.vertices)?;
        let (kept, _) = cycle_words(c, &cy.vertices, marks);
        rels.extend(kept.into_iter().map(|w| Relation { family: "R5", lhs: Expr::word(&w), rhs: vec![] }));
    }
    Ok(RelationSet { relations: rels })
}

/// Chordless cycles of the quiver's underlying graph.
pub fn quiver_cycles(q: &SignedValuedQuiver) -> Vec<CycleReport> {
    q.to_matrix().chordless_cycles()
}

/// Full relation set `(R1)` to `(R5)` of a quiver.
pub fn presentation(q: &SignedValuedQuiver) -> Result<RelationSet> {
    let c = CartanCounterpart::of_quiver(q);
    let mut rels = relations_r1_r4(&c);
    rels.extend(relations_r5(&c, &quiver_cycles(q))?);
    Ok(rels)
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

/// Coefficient `(-eps)^{c} / |c|!`.
fn phi_coefficient(eps: i64, c: i64) -> BigRational {
    let sign = if c.rem_euclid(2) == 1 { -eps } else { 1 };
    BigRational::new(BigInt::from(sign), BigInt::from(factorial(c.abs())))
}

fn check_mutable(q: &SignedValuedQuiver, k: usize, images: &GeneratorImages) -> Result<CartanCounterpart> {
    if k >= q.n() {
        return Err(Error::VertexOutOfRange(k + 1, q.n()));
    }
    if images.n() != q.n() {
        return Err(Error::Shape(format!("{} generator images for {} vertices", images.n(), q.n())));
    }
    let c = CartanCounterpart::of_quiver(q);
    if !c.is_positive() {
        return Err(Error::NotMutationDynkin);
    }
    q.mutate(k)?;
    Ok(c)
}

/// Images of the generators of the algebra of `mu_k(q)`, given images of
/// those of `q`.
pub fn phi_k(q: &SignedValuedQuiver, k: usize, images: &GeneratorImages, alg: &StructureAlgebra) -> Result<GeneratorImages> {
    twist(q, k, images, alg, -1)
}

/// Inverse of [`phi_k`]: images of the generators of `q`, given images of
/// those of `mu_k(q)`.
pub fn psi_k(q: &SignedValuedQuiver, k: usize, images: &GeneratorImages, alg: &StructureAlgebra) -> Result<GeneratorImages> {
    twist(q, k, images, alg, 1)
}

/// Shared body: `dir = -1` uses `e_{-delta eps k}` and `h_i - c_ik h_k`,
/// `dir = +1` uses `e_{delta eps k}` and `h_i + c_ik h_k`.
fn twist(q: &SignedValuedQuiver, k: usize, images: &GeneratorImages, alg: &StructureAlgebra, dir: i64) -> Result<GeneratorImages> {
    let c = check_mutable(q, k, images)?;
    let mut out = images.clone();
    for i in 0..q.n() {
        let Some(arrow) = q.arrow(i, k) else { continue };
        let delta = arrow.sign();
        let cki = c.c[k][i];
        for eps in [1, -1] {
            let x = images.get(Gen::e(dir * delta * eps, k));
            let y = images.get(Gen::e(eps, i));
            let v = alg.ad_power(x, cki.unsigned_abs() as usize, y)?.scale(&phi_coefficient(eps, cki));
            out.set(Gen::e(eps, i), v);
        }
        out.h[i] = images.h[i].add_scaled(dir * c.c[i][k], &images.h[k]);
    }
    Ok(out)
}

/// Push images along a mutation sequence one step at a time. Returns the
/// final quiver and the images of its generators.
pub fn composite_phi(
    start: &SignedValuedQuiver,
    seq: &[usize],
    images: &GeneratorImages,
    alg: &StructureAlgebra,
) -> Result<(SignedValuedQuiver, GeneratorImages)> {
    let mut q = start.clone();
    let mut cur = images.clone();
    for &k in seq {
        cur = phi_k(&q, k, &cur, alg)?;
        q = q.mutate(k)?;
    }
    Ok((q, cur))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub relation: String,
    pub residual: Vec<String>,
}

/// Outcome of checking a presentation against generator images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub relations_checked: usize,
    pub failures: Vec<RelationFailure>,
    pub dimension: usize,
    pub isomorphism: bool,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.isomorphism
    }
}

fn rhs_value(rel: &Relation, images: &GeneratorImages, dim: usize) -> LieElement {
    rel.rhs
        .iter()
        .fold(LieElement::zero(dim), |acc, (g, c)| acc.add_scaled(*c, images.get(*g)))
}

/// Evaluate every relation; `dimension` and `isomorphism` are left at zero
/// and false (see [`verify_presentation`]).
pub fn verify_homomorphism(alg: &StructureAlgebra, images: &GeneratorImages, rels: &RelationSet) -> Result<VerificationReport> {
    let mut failures = Vec::new();
    for rel in &rels.relations {
        let lhs = bracket_eval(alg, &rel.lhs, images)?;
        let residual = lhs.sub(&rhs_value(rel, images, alg.dim()));
        if !residual.is_zero() {
            failures.push(RelationFailure { relation: rel.to_string(), residual: residual.to_strings() });
        }
    }
    Ok(VerificationReport { relations_checked: rels.len(), failures, dimension: 0, isomorphism: false })
}

/// Dimension of the subalgebra generated by the images, and whether it is
/// everything.
pub fn verify_isomorphism(alg: &StructureAlgebra, images: &GeneratorImages) -> Result<(bool, usize)> {
    let dim = alg.dim();
    let gens: Vec<&LieElement> = images.all().filter(|g| !g.is_zero()).collect();
    let mut span = Span::new(dim);
    let mut work: Vec<LieElement> = Vec::new();
    for g in &gens {
        if span.insert(&g.0) {
            work.push((*g).clone());
        }
    }
    while let Some(v) = work.pop() {
        if span.rank() == dim {
            break;
        }
        for g in &gens {
            let w = alg.bracket(g, &v)?;
            if span.insert(&w.0) {
                work.push(w);
            }
        }
    }
    Ok((span.rank() == dim, span.rank()))
}

/// Relations plus generated dimension.
pub fn verify_presentation(alg: &StructureAlgebra, images: &GeneratorImages, rels: &RelationSet) -> Result<VerificationReport> {
    let mut report = verify_homomorphism(alg, images, rels)?;
    let (iso, rank) = verify_isomorphism(alg, images)?;
    report.dimension = rank;
    report.isomorphism = iso;
    Ok(report)
}

/// `beta(h_i) = sum_j m_j c_ij`.
pub fn weights(c: &CartanCounterpart, beta: &[i64]) -> Vec<i64> {
    (0..c.n()).map(|i| (0..c.n()).map(|j| beta[j] * c.c[i][j]).sum()).collect()
}

/// Basis of `{x : [h_images[i], x] = beta(h_i) x for all i}`.
pub fn root_space(alg: &StructureAlgebra, h_images: &[LieElement], c: &CartanCounterpart, beta: &[i64]) -> Result<Vec<LieElement>> {
    let dim = alg.dim();
    for (a, u) in h_images.iter().enumerate() {
        for v in &h_images[a + 1..] {
            if !alg.bracket(u, v)?.is_zero() {
                return Err(Error::Linear("Cartan images do not commute".into()));
            }
        }
    }
    let w = weights(c, beta);
    if h_images.iter().all(|u| alg.ad_is_diagonal(u)) {
        let mut out = Vec::new();
        for b in 0..dim {
            let matches = h_images.iter().zip(&w).all(|(u, &wi)| {
                let mut val = BigRational::zero();
                for (j, x) in u.0.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    if let Some(&(_, cf)) = alg.basis_bracket(j, b).first() {
                        val += x * BigRational::from_integer(cf.into());
                    }
                }
                val == BigRational::from_integer(wi.into())
            });
            if matches {
                out.push(alg.element(b));
            }
        }
        return Ok(out);
    }
    let mut rows = Vec::new();
    for (u, &wi) in h_images.iter().zip(&w) {
        let mut m = alg.ad_matrix(u)?;
        for (r, row) in m.iter_mut().enumerate() {
            row[r] -= BigRational::from_integer(wi.into());
        }
        rows.extend(m);
    }
    Ok(kernel(&rows, dim).into_iter().map(LieElement).collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSpaceReport {
    pub roots_checked: usize,
    /// Roots of the mutated quiver whose spaces disagree, as coordinates.
    pub failures: Vec<Root>,
}

/// For every root `beta'` of `mu_k(q)`, compare its root space (with
/// respect to `images_mut`) with the `rho_k(beta')` space of `q` (with
/// respect to `images`). Both must be the same line.
pub fn verify_rootspace_mutation(
    alg: &StructureAlgebra,
    q: &SignedValuedQuiver,
    k: usize,
    images: &GeneratorImages,
    images_mut: &GeneratorImages,
) -> Result<RootSpaceReport> {
    let qm = q.mutate(k)?;
    let (c, cm) = (CartanCounterpart::of_quiver(q), CartanCounterpart::of_quiver(&qm));
    let phi_mut = RootSystemData::generate(&cm, DEFAULT_ROOT_CAP)?;
    let mut report = RootSpaceReport::default();
    for beta in &phi_mut.roots {
        report.roots_checked += 1;
        let v1 = root_space(alg, &images_mut.h, &cm, beta)?;
        let v2 = root_space(alg, &images.h, &c, &rho(q, k, beta))?;
        let s1 = Span::from_vectors(alg.dim(), v1.iter().map(|e| &e.0));
        let s2 = Span::from_vectors(alg.dim(), v2.iter().map(|e| &e.0));
        if s1.rank() != 1 || !s1.same_as(&s2) {
            report.failures.push(beta.clone());
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedWordReport {
    pub shape: CycleShape,
    pub words: Vec<String>,
    /// Words that evaluate to zero although they should not.
    pub vanishing: Vec<String>,
}

/// Evaluate the sign-chained words that run from one long vertex of a
/// `B3` or `F4` cycle to another. Each must be nonzero in a faithful image.
pub fn excluded_relation_nonzero(
    alg: &StructureAlgebra,
    images: &GeneratorImages,
    c: &CartanCounterpart,
    cycle: &[usize],
) -> Result<ExcludedWordReport> {
    let (shape, long) = cycle_shape(c, cycle)?;
    if !matches!(shape, CycleShape::B3 | CycleShape::F4) {
        return Err(Error::Shape(format!("{shape:?} cycles have no excluded words")));
    }
    let (_, dropped) = cycle_words(c, cycle, &long);
    let mut report = ExcludedWordReport { shape, words: Vec::new(), vanishing: Vec::new() };
    for w in dropped {
        let expr = Expr::word(&w);
        let text = expr.to_string();
        if bracket_eval(alg, &expr, images)?.is_zero() {
            report.vanishing.push(text.clone());
        }
        report.words.push(text);
    }
    Ok(report)
}

/// Sum of `coeff * h_i` in the Cartan part of the algebra.
pub fn cartan_element(alg: &StructureAlgebra, coeffs: &[i64]) -> LieElement {
    let mut v = LieElement::zero(alg.dim());
    for (i, &x) in coeffs.iter().enumerate() {
        v.0[alg.h(i)] = BigRational::from_integer(x.into());
    }
    v
}
