//! Sessions: a starting quiver plus the vertices mutated since, and the
//! derived data shown to clients.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use mutalg::cartan::CartanCounterpart;
use mutalg::dynkin::is_mutation_dynkin;
use mutalg::presentation::{presentation, quiver_cycles};
use mutalg::roots::{composite_rho, RootSystemData};
use mutalg::{Error, SignedValuedQuiver};

#[derive(Clone, Debug)]
pub struct Session {
    pub initial: SignedValuedQuiver,
    /// Each entry is the quiver before the step and the 0-based vertex.
    pub history: Vec<(SignedValuedQuiver, usize)>,
    pub current: SignedValuedQuiver,
    cached: Option<Value>,
}

/// Why a mutation was refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Blocked {
    OutOfRange(String),
    /// The quiver-level rule does not apply. Carries the 1-based triple and
    /// the matrix-level result.
    Violation { i: usize, j: usize, k: usize, preview: Value, message: String },
    Other(String),
}

impl Session {
    pub fn new(q: SignedValuedQuiver) -> Self {
        Session { initial: q.clone(), history: Vec::new(), current: q, cached: None }
    }

    pub fn sequence(&self) -> Vec<usize> {
        self.history.iter().map(|(_, k)| *k).collect()
    }

    /// Mutate the current quiver at the 0-based vertex `k`.
    pub fn mutate(&mut self, k: usize) -> Result<(), Blocked> {
        match self.current.mutate(k) {
            Ok(next) => {
                let prev = std::mem::replace(&mut self.current, next);
                self.history.push((prev, k));
                self.cached = None;
                Ok(())
            }
            Err(e @ Error::VertexOutOfRange(..)) => Err(Blocked::OutOfRange(e.to_string())),
            Err(e @ Error::PositiveThreeCycleViolation { i, j, k }) => {
                let b = self.current.to_matrix().mutate(k - 1).map_err(|e| Blocked::Other(e.to_string()))?;
                let preview = json!({"matrix": b, "pure": b.is_pure(), "text": b.to_string()});
                Err(Blocked::Violation { i, j, k, preview, message: e.to_string() })
            }
            Err(e) => Err(Blocked::Other(e.to_string())),
        }
    }

    /// Step back once; false if there is nothing to undo.
    pub fn undo(&mut self) -> bool {
        match self.history.pop() {
            Some((prev, _)) => {
                self.current = prev;
                self.cached = None;
                true
            }
            None => false,
        }
    }

    /// Replaying the history from the initial quiver reproduces the current
    /// one.
    pub fn replay_matches(&self) -> bool {
        self.initial.mutate_seq(&self.sequence()).ok().as_ref() == Some(&self.current)
    }

    pub fn state(&mut self, budget: usize) -> Value {
        if self.cached.is_none() {
            self.cached = Some(describe(&self.initial, &self.sequence(), &self.current, budget));
        }
        self.cached.clone().unwrap()
    }
}

fn error_value(e: Error) -> Value {
    json!({"error": e.to_string()})
}

/// The state payload of a quiver reached from `initial` by `seq`.
pub fn describe(initial: &SignedValuedQuiver, seq: &[usize], q: &SignedValuedQuiver, budget: usize) -> Value {
    let c = CartanCounterpart::of_quiver(q);
    let cycles = quiver_cycles(q);
    let cycle_json = |dangerous_only: bool| -> Vec<Value> {
        cycles
            .iter()
            .filter(|cy| cy.dangerous || !dangerous_only)
            .map(|cy| {
                json!({
                    "vertices": cy.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "oriented": cy.oriented,
                    "dangerous": cy.dangerous,
                })
            })
            .collect()
    };
    let dynkin = match is_mutation_dynkin(&q.to_matrix(), budget) {
        Ok(t) => json!(t),
        Err(e) => error_value(e),
    };
    let root_count = match RootSystemData::generate(&c, budget) {
        Ok(rs) => json!(rs.len()),
        Err(e) => error_value(e),
    };
    let relations = match presentation(q) {
        Ok(rels) => {
            let mut by_family: BTreeMap<&str, usize> = BTreeMap::new();
            for r in &rels.relations {
                *by_family.entry(r.family).or_default() += 1;
            }
            let r5: Vec<String> = rels.family("R5").map(|r| r.to_string()).collect();
            json!({"total": rels.len(), "by_family": by_family, "r5": r5})
        }
        Err(e) => error_value(e),
    };
    let companion = match composite_rho(initial, seq) {
        Ok((_, basis)) => json!(basis),
        Err(e) => error_value(e),
    };
    json!({
        "quiver": q,
        "dsl": q.to_string(),
        "cartan": {"matrix": c.c, "d": c.d},
        "dynkin_type": dynkin,
        "cycles": cycle_json(false),
        "dangerous_cycles": cycle_json(true),
        "root_count": root_count,
        "relations": relations,
        "companion_basis": companion,
        "history": seq.iter().map(|k| k + 1).collect::<Vec<_>>(),
    })
}
