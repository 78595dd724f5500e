use std::collections::BTreeMap;

use crate::model::{ActionId, EventLog, Sdfa};

struct Node {
    reach: u64,
    end: u64,
    children: BTreeMap<ActionId, usize>,
}

/// Prefix tree acceptor of `e`: one state per distinct prefix, with
/// transition and termination probabilities given by the log mass that
/// continues or ends at each prefix. Its language is exactly the log's.
pub fn prefix_tree_sdfa(e: &EventLog) -> Sdfa {
    let mut nodes = vec![Node {
        reach: 0,
        end: 0,
        children: BTreeMap::new(),
    }];
    for (trace, m) in e.canonical_variants() {
        let mut cur = 0;
        nodes[0].reach += m;
        for &a in trace.actions() {
            let next = match nodes[cur].children.get(&a) {
                Some(&n) => n,
                None => {
                    nodes.push(Node {
                        reach: 0,
                        end: 0,
                        children: BTreeMap::new(),
                    });
                    let n = nodes.len() - 1;
                    nodes[cur].children.insert(a, n);
                    n
                }
            };
            nodes[next].reach += m;
            cur = next;
        }
        nodes[cur].end += m;
    }

    let label = |i: usize| format!("p{i}");
    let mut b = Sdfa::builder();
    b.initial(&label(0));
    for i in 1..nodes.len() {
        b.state(&label(i));
    }
    for (i, node) in nodes.iter().enumerate() {
        for (&a, &child) in &node.children {
            let p = nodes[child].reach as f64 / node.reach as f64;
            b.transition(&label(i), e.alphabet().label(a), &label(child), p)
                .expect("trie edges are deterministic");
        }
    }
    b.build().expect("initial state is set")
}
