use num_rational::Ratio;

use super::fdag::{Fdag, Node};
use crate::error::{Error, Result};
use crate::model::{Sdfa, INPUT_SENTINEL};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactTransition {
    pub from: String,
    pub action: String,
    pub probability: Ratio<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactTermination {
    pub state: String,
    pub probability: Ratio<u64>,
}

/// The automaton of an FDAG with probabilities kept as exact ratios of arc
/// frequencies. The state of an action is named after the action; the
/// initial state is named after the input node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactConversion {
    pub transitions: Vec<ExactTransition>,
    pub terminations: Vec<ExactTermination>,
}

impl ExactConversion {
    pub fn of(g: &Fdag) -> Result<Self> {
        let mut transitions = Vec::new();
        let mut terminations = Vec::new();
        let sources =
            std::iter::once(Node::Input).chain(g.alphabet().iter().map(|(a, _)| Node::Action(a)));
        for s in sources {
            let total: u64 = g.outgoing(s).map(|(_, f)| f).sum();
            if total == 0 {
                return Err(Error::Model(format!(
                    "node {:?} has no outgoing arcs",
                    g.node_label(s)
                )));
            }
            let mut end = 0u64;
            for (t, f) in g.outgoing(s) {
                match t {
                    Node::Output => end += f,
                    Node::Action(a) => transitions.push(ExactTransition {
                        from: g.node_label(s).to_owned(),
                        action: g.alphabet().label(a).to_owned(),
                        probability: Ratio::new(f, total),
                    }),
                    Node::Input => unreachable!("arcs never enter the input node"),
                }
            }
            terminations.push(ExactTermination {
                state: g.node_label(s).to_owned(),
                probability: Ratio::new(end, total),
            });
        }
        Ok(ExactConversion {
            transitions,
            terminations,
        })
    }

    pub fn probability(&self, from: &str, action: &str) -> Option<Ratio<u64>> {
        self.transitions
            .iter()
            .find(|t| t.from == from && t.action == action)
            .map(|t| t.probability)
    }

    pub fn termination(&self, state: &str) -> Option<Ratio<u64>> {
        self.terminations
            .iter()
            .find(|t| t.state == state)
            .map(|t| t.probability)
    }

    pub fn to_sdfa(&self) -> Sdfa {
        let mut b = Sdfa::builder();
        b.initial(INPUT_SENTINEL);
        for t in &self.terminations {
            b.state(&t.state);
        }
        for t in &self.transitions {
            let p = *t.probability.numer() as f64 / *t.probability.denom() as f64;
            b.transition(&t.from, &t.action, &t.action, p)
                .expect("one arc per (node, successor) keeps the automaton deterministic");
        }
        b.build().expect("initial state is set")
    }
}

/// The SDFA of an FDAG: one state per action plus the initial state, and
/// arc frequencies normalised per source node. Arcs into the output node
/// become termination mass.
pub fn fdag_to_sdfa(g: &Fdag) -> Result<Sdfa> {
    Ok(ExactConversion::of(g)?.to_sdfa())
}
