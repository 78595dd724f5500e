use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Label reserved for the input node of an FDAG.
pub const INPUT_SENTINEL: &str = "__input__";
/// Label reserved for the output node of an FDAG.
pub const OUTPUT_SENTINEL: &str = "__output__";

/// Dense identifier of an action within one [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionId(u32);

impl ActionId {
    pub(crate) fn from_index(index: usize) -> Self {
        ActionId(u32::try_from(index).expect("alphabet exceeds u32 actions"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ActionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Checks that `label` may name an action.
pub fn validate_action_label(label: &str) -> Result<()> {
    if label.is_empty() || label == INPUT_SENTINEL || label == OUTPUT_SENTINEL {
        Err(Error::InvalidAction(label.to_owned()))
    } else {
        Ok(())
    }
}

/// Interning table mapping action labels to dense ids. Ids are assigned in
/// first-seen order and never change.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    labels: Vec<String>,
    index: HashMap<String, ActionId>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, label: &str) -> Result<ActionId> {
        if let Some(&id) = self.index.get(label) {
            return Ok(id);
        }
        validate_action_label(label)?;
        let id = ActionId::from_index(self.labels.len());
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        Ok(id)
    }

    pub fn get(&self, label: &str) -> Option<ActionId> {
        self.index.get(label).copied()
    }

    pub fn label(&self, id: ActionId) -> &str {
        &self.labels[id.index()]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (ActionId, &str)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (ActionId::from_index(i), l.as_str()))
    }

    /// Rank of every id when labels are sorted; indexed by `ActionId::index`.
    pub(crate) fn label_ranks(&self) -> Vec<u32> {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut ranks = vec![0u32; self.labels.len()];
        for (rank, idx) in order.into_iter().enumerate() {
            ranks[idx] = rank as u32;
        }
        ranks
    }

    /// Ids sorted by label.
    pub fn sorted_ids(&self) -> Vec<ActionId> {
        let mut ids: Vec<ActionId> = (0..self.labels.len()).map(ActionId::from_index).collect();
        ids.sort_by(|a, b| self.label(*a).cmp(self.label(*b)));
        ids
    }
}
