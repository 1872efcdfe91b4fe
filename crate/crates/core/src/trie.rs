//! Tries of the conjugates of a circular word.
//!
//! The root sits on level 0 and every leaf on level `|w|`. Symbols label
//! edges. Nodes are numbered breadth-first, children in symbol order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::circular::CircularWord;
use crate::error::{Error, Result};
use crate::word::{self, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub level: usize,
    pub children: BTreeMap<char, usize>,
}

impl Node {
    pub fn is_branching(&self) -> bool {
        self.children.len() >= 2
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateTrie {
    nodes: Vec<Node>,
    source: CircularWord,
}

/// Branching-node count per level `0 … n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingProfile {
    pub counts: Vec<usize>,
}

impl BranchingProfile {
    pub fn at(&self, level: usize) -> usize {
        self.counts.get(level).copied().unwrap_or(0)
    }

    pub fn levels(&self) -> usize {
        self.counts.len()
    }
}

/// JSON dump of a trie: per-node level, branching profile, edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrieDump {
    pub levels: Vec<usize>,
    pub profile: Vec<usize>,
    pub edges: Vec<(usize, String, usize)>,
}

impl ConjugateTrie {
    pub fn build(cw: &CircularWord) -> Self {
        let members = cw.members();
        let n = cw.len();
        let mut nodes = vec![Node {
            level: 0,
            children: BTreeMap::new(),
        }];
        // Level by level: each node owns the members sharing its prefix.
        let mut frontier: Vec<(usize, Vec<&Word>)> = vec![(0, members.iter().collect())];
        for level in 0..n {
            let mut next = Vec::new();
            for (id, group) in frontier {
                let mut by_symbol: BTreeMap<char, Vec<&Word>> = BTreeMap::new();
                for w in group {
                    by_symbol.entry(w.symbols()[level]).or_default().push(w);
                }
                for (sym, sub) in by_symbol {
                    let child = nodes.len();
                    nodes.push(Node {
                        level: level + 1,
                        children: BTreeMap::new(),
                    });
                    nodes[id].children.insert(sym, child);
                    next.push((child, sub));
                }
            }
            frontier = next;
        }
        ConjugateTrie {
            nodes,
            source: cw.clone(),
        }
    }

    pub fn source(&self) -> &CircularWord {
        &self.source
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub fn depth(&self) -> usize {
        self.source.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_leaf()).count()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Number of nodes on each level `0 ..= depth`.
    pub fn level_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.depth() + 1];
        for n in &self.nodes {
            counts[n.level] += 1;
        }
        counts
    }

    /// Words spelled by the root-to-leaf paths, in symbol order.
    pub fn words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, Vec::new())];
        while let Some((id, path)) = stack.pop() {
            let node = &self.nodes[id];
            if node.is_leaf() {
                out.push(Word::from_symbols(path));
                continue;
            }
            for (&sym, &child) in node.children.iter().rev() {
                let mut p = path.clone();
                p.push(sym);
                stack.push((child, p));
            }
        }
        out
    }

    pub fn branching_profile(&self) -> BranchingProfile {
        let mut counts = vec![0; self.depth()];
        for n in self.nodes.iter().filter(|n| n.is_branching()) {
            counts[n.level] += 1;
        }
        BranchingProfile { counts }
    }

    /// Level gaps between each branching node and the nearest branching
    /// node below it, one per child edge that reaches one.
    pub fn branching_gaps(&self) -> Vec<usize> {
        let mut gaps = Vec::new();
        for node in self.nodes.iter().filter(|n| n.is_branching()) {
            for &child in node.children.values() {
                let mut cur = child;
                while self.nodes[cur].children.len() == 1 {
                    cur = *self.nodes[cur].children.values().next().unwrap();
                }
                if self.nodes[cur].is_branching() {
                    gaps.push(self.nodes[cur].level - node.level);
                }
            }
        }
        gaps
    }

    /// Root-anchored, label-preserving embedding of `self` into `big`.
    pub fn is_subtree_of(&self, big: &ConjugateTrie) -> bool {
        let mut stack = vec![(0usize, 0usize)];
        while let Some((s, b)) = stack.pop() {
            for (sym, &sc) in &self.nodes[s].children {
                match big.nodes[b].children.get(sym) {
                    Some(&bc) => stack.push((sc, bc)),
                    None => return false,
                }
            }
        }
        true
    }

    pub fn dump(&self) -> TrieDump {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (id, n) in self.nodes.iter().enumerate() {
            for (&sym, &child) in &n.children {
                edges.push((id, sym.to_string(), child));
            }
        }
        TrieDump {
            levels: self.nodes.iter().map(|n| n.level).collect(),
            profile: self.branching_profile().counts,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.dump()).expect("plain data serializes")
    }

    /// Graphviz rendering: unlabeled nodes, symbols on edges, branching
    /// nodes filled.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph trie {{").unwrap();
        writeln!(out, "  // {}", self.source).unwrap();
        writeln!(out, "  node [shape=circle, label=\"\", width=0.2];").unwrap();
        for (id, n) in self.nodes.iter().enumerate() {
            if n.is_branching() {
                writeln!(out, "  n{id} [style=filled, fillcolor=black];").unwrap();
            } else {
                writeln!(out, "  n{id};").unwrap();
            }
        }
        for (id, n) in self.nodes.iter().enumerate() {
            for (&sym, &child) in &n.children {
                let label = match sym {
                    '"' => "\\\"".to_string(),
                    '\\' => "\\\\".to_string(),
                    c => c.to_string(),
                };
                writeln!(out, "  n{id} -> n{child} [label=\"{label}\"];").unwrap();
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

pub fn build_trie(cw: &CircularWord) -> ConjugateTrie {
    ConjugateTrie::build(cw)
}

/// Every level with a branching node above the root has one directly
/// below it as well.
pub fn check_branching_cascade(t: &ConjugateTrie) -> bool {
    let p = t.branching_profile();
    (1..p.levels()).all(|n| p.at(n) == 0 || p.at(n - 1) >= 1)
}

/// For a binary primitive source: a branching node on level `|w|-2` forces
/// exactly one branching node on each of the levels `0 … |w|-2` and none on
/// `|w|-1`.
pub fn check_level_n_minus_2(t: &ConjugateTrie) -> Result<bool> {
    let src = t.source().canonical();
    if !src.is_binary() {
        return Err(Error::PreconditionViolated("source is not binary"));
    }
    if !word::is_primitive(src)? {
        return Err(Error::PreconditionViolated("source is not primitive"));
    }
    let n = src.len();
    if n < 2 {
        return Ok(true);
    }
    let p = t.branching_profile();
    Ok(p.at(n - 2) == 0 || ((0..=n - 2).all(|k| p.at(k) == 1) && p.at(n - 1) == 0))
}

/// Two distinct members whose longest common prefix has length exactly
/// `level`: the adjacent pair in sorted order straddling that branch.
pub fn lcp_branching_witness(cw: &CircularWord, level: usize) -> Option<(Word, Word)> {
    if level >= cw.len() {
        return None;
    }
    let mut members = cw.members();
    members.sort();
    members
        .windows(2)
        .find(|pair| lcp(&pair[0], &pair[1]) == level)
        .map(|pair| (pair[0].clone(), pair[1].clone()))
}

pub fn lcp(a: &Word, b: &Word) -> usize {
    a.symbols()
        .iter()
        .zip(b.symbols())
        .take_while(|(x, y)| x == y)
        .count()
}
