//! The computations behind each subcommand. Every command returns a JSON
//! payload and a plain-text rendering of the same data.

use serde_json::{json, Value};

use mutalg::algebra::chevalley_from_cartan;
use mutalg::cartan::CartanCounterpart;
use mutalg::class::{find_in_class, mutation_class};
use mutalg::dynkin::is_mutation_dynkin;
use mutalg::presentation::{
    phi_k, presentation, psi_k, verify_presentation, verify_rootspace_mutation, GeneratorImages,
};
use mutalg::roots::{RootDisplay, RootSystemData};
use mutalg::{Error, SignedValuedQuiver};

use crate::input::Input;

/// Search cap used when `MUTALG_BUDGET` is unset.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Reads `MUTALG_BUDGET`, falling back to [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> Result<usize, Failure> {
    match std::env::var("MUTALG_BUDGET") {
        Ok(s) => s.trim().parse().map_err(|e| Failure::Parse(format!("MUTALG_BUDGET={s:?}: {e}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Parse(String),
    Semantic(String),
    Budget(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Semantic(_) => 3,
            Failure::Budget(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Semantic(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    /// False when a check ran to completion and found a problem.
    pub ok: bool,
    pub payload: Value,
    pub text: String,
}

fn one_based(seq: &[usize]) -> Vec<usize> {
    seq.iter().map(|k| k + 1).collect()
}

fn check_range(n: usize, seq: &[usize]) -> Result<(), Failure> {
    match seq.iter().find(|&&k| k >= n) {
        Some(&k) => Err(Error::VertexOutOfRange(k + 1, n).into()),
        None => Ok(()),
    }
}

/// Mutate along `seq` at matrix level. Steps that break purity are reported
/// as warnings and the computation continues.
pub fn mutate(input: &Input, seq: &[usize]) -> Result<CommandResult, Failure> {
    let mut b = input.matrix();
    check_range(b.n(), seq)?;
    let mut warnings = Vec::new();
    let mut lines = Vec::new();
    for (step, &k) in seq.iter().enumerate() {
        if b.is_pure() {
            if let Some((i, j)) = b.positive_3cycle_violation(k)? {
                let msg = format!(
                    "step {}: positive 3-cycle condition fails at k={} for i={}, j={}; the result is not pure",
                    step + 1,
                    k + 1,
                    i + 1,
                    j + 1
                );
                warnings.push(json!({"step": step + 1, "i": i + 1, "j": j + 1, "k": k + 1, "message": msg}));
                lines.push(format!("warning: {msg}"));
            }
        }
        b = b.mutate(k)?;
    }
    let pure = b.is_pure();
    let quiver = if pure { SignedValuedQuiver::from_matrix(&b).ok() } else { None };
    lines.push(format!("matrix: {b}"));
    lines.push(format!("symmetrizer: {:?}", b.symmetrizer()));
    lines.push(format!("pure: {pure}"));
    if let Some(q) = &quiver {
        lines.push(format!("quiver: {q}"));
    }
    Ok(CommandResult {
        ok: true,
        payload: json!({
            "input_kind": input.kind(),
            "sequence": one_based(seq),
            "matrix": b,
            "pure": pure,
            "quiver": quiver,
            "warnings": warnings,
        }),
        text: lines.join("\n"),
    })
}

/// The labeled mutation class, or the class up to relabeling.
pub fn class(input: &Input, budget: usize, quotient: bool) -> Result<CommandResult, Failure> {
    let q = input.quiver().map_err(Failure::Semantic)?;
    let members = mutation_class(&q, budget, quotient)?;
    let mut lines = vec![format!(
        "{} member{}{}",
        members.len(),
        if members.len() == 1 { "" } else { "s" },
        if quotient { " up to relabeling" } else { "" }
    )];
    lines.extend(members.iter().map(|m| m.to_string()));
    Ok(CommandResult {
        ok: true,
        payload: json!({"count": members.len(), "quotient": quotient, "members": members}),
        text: lines.join("\n"),
    })
}

fn cartan_of(input: &Input) -> CartanCounterpart {
    match input {
        Input::Quiver(q) => CartanCounterpart::of_quiver(q),
        Input::Matrix(b) => CartanCounterpart::of_matrix(b),
    }
}

/// Roots of the Cartan counterpart, in lexicographic order.
pub fn roots(input: &Input, budget: usize) -> Result<CommandResult, Failure> {
    let c = cartan_of(input);
    let rs = RootSystemData::generate(&c, budget)?;
    let mut lines = vec![format!("{} roots", rs.len())];
    lines.extend(rs.roots.iter().map(|r| RootDisplay(r).to_string()));
    Ok(CommandResult {
        ok: true,
        payload: json!({"count": rs.len(), "cartan": c.c, "d": c.d, "roots": rs.roots}),
        text: lines.join("\n"),
    })
}

fn is_classical(q: &SignedValuedQuiver) -> bool {
    let c = CartanCounterpart::of_quiver(q);
    (0..c.n()).all(|i| (0..c.n()).all(|j| i == j || c.c[i][j] <= 0)) && c.is_positive()
}

/// Build faithful images for the generators of `q`, push them along `seq`,
/// and check the relations of the final quiver, the generated dimension,
/// and root-space compatibility at every step.
pub fn verify(input: &Input, seq: &[usize], budget: usize) -> Result<CommandResult, Failure> {
    let q = input.quiver().map_err(Failure::Semantic)?;
    check_range(q.n(), seq)?;
    let ty = is_mutation_dynkin(&q.to_matrix(), budget)?
        .ok_or_else(|| Failure::Semantic("not mutation Dynkin".into()))?;
    // Start from a member whose Cartan counterpart is a Cartan matrix and
    // pull its standard generators back to `q`.
    let (path, classical) = find_in_class(&q, budget, is_classical)?
        .ok_or_else(|| Failure::Semantic("no member with a classical Cartan matrix in the class".into()))?;
    let alg = chevalley_from_cartan(&CartanCounterpart::of_quiver(&classical))?;
    let mut chain = vec![q.clone()];
    for &k in &path {
        let next = chain.last().unwrap().mutate(k)?;
        chain.push(next);
    }
    let mut images = GeneratorImages::canonical(&alg);
    for (step, &k) in path.iter().enumerate().rev() {
        images = psi_k(&chain[step], k, &images, &alg)?;
    }

    let mut cur = q.clone();
    let (mut roots_checked, mut root_failures) = (0, Vec::new());
    for &k in seq {
        let next = phi_k(&cur, k, &images, &alg)?;
        let rep = verify_rootspace_mutation(&alg, &cur, k, &images, &next)?;
        roots_checked += rep.roots_checked;
        root_failures.extend(rep.failures.into_iter().map(|r| json!({"vertex": k + 1, "root": r})));
        cur = cur.mutate(k)?;
        images = next;
    }
    let rels = presentation(&cur)?;
    let report = verify_presentation(&alg, &images, &rels)?;
    let ok = report.ok() && root_failures.is_empty();
    let mut lines = vec![
        format!("type {ty}, dimension {}, isomorphism: {}", report.dimension, report.isomorphism),
        format!("relations checked: {}, failures: {}", report.relations_checked, report.failures.len()),
        format!("root spaces checked: {roots_checked}, failures: {}", root_failures.len()),
    ];
    lines.extend(report.failures.iter().map(|f| format!("failed: {}", f.relation)));
    Ok(CommandResult {
        ok,
        payload: json!({
            "type": ty,
            "sequence": one_based(seq),
            "quiver": cur,
            "algebra_dimension": alg.dim(),
            "dimension": report.dimension,
            "isomorphism": report.isomorphism,
            "relations_checked": report.relations_checked,
            "relation_failures": report.failures,
            "root_spaces_checked": roots_checked,
            "root_space_failures": root_failures,
            "ok": ok,
        }),
        text: lines.join("\n"),
    })
}
