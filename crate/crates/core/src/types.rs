//! Homogeneous types: which operator labels each level of the tree.

use std::fmt;

use crate::ast::{Op, Regex};

/// Homogeneity, depth and per-level operators of an expression.
///
/// `ops` lists the operators on a longest root-to-leaf path; for a
/// homogeneous expression these are the level operators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TypeDescriptor {
    pub homogeneous: bool,
    pub depth: usize,
    pub ops: Vec<Op>,
}

impl TypeDescriptor {
    pub fn homogeneous(ops: Vec<Op>) -> Self {
        TypeDescriptor {
            homogeneous: true,
            depth: ops.len(),
            ops,
        }
    }

    pub fn ops_string(&self) -> String {
        self.ops.iter().map(|o| o.symbol()).collect()
    }

    /// The depth-2 kind, when this is a homogeneous depth-2 type.
    pub fn kind(&self) -> Option<Kind> {
        if self.homogeneous && self.depth == 2 {
            Kind::from_ops(self.ops[0], self.ops[1])
        } else {
            None
        }
    }
}

impl fmt::Display for TypeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.homogeneous {
            write!(f, "type=non-homogeneous depth={}", self.depth)
        } else if self.depth == 0 {
            write!(f, "type=letter depth=0")
        } else {
            write!(f, "type={} depth={}", self.ops_string(), self.depth)
        }
    }
}

/// The twelve homogeneous depth-2 types.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    ConcatAlt,
    ConcatPlus,
    ConcatStar,
    AltConcat,
    PlusConcat,
    StarConcat,
    AltPlus,
    AltStar,
    PlusAlt,
    StarAlt,
    PlusStar,
    StarPlus,
}

impl Kind {
    pub const ALL: [Kind; 12] = [
        Kind::ConcatAlt,
        Kind::ConcatPlus,
        Kind::ConcatStar,
        Kind::AltConcat,
        Kind::PlusConcat,
        Kind::StarConcat,
        Kind::AltPlus,
        Kind::AltStar,
        Kind::PlusAlt,
        Kind::StarAlt,
        Kind::PlusStar,
        Kind::StarPlus,
    ];

    pub fn ops(self) -> (Op, Op) {
        use Op::*;
        match self {
            Kind::ConcatAlt => (Concat, Alt),
            Kind::ConcatPlus => (Concat, Plus),
            Kind::ConcatStar => (Concat, Star),
            Kind::AltConcat => (Alt, Concat),
            Kind::PlusConcat => (Plus, Concat),
            Kind::StarConcat => (Star, Concat),
            Kind::AltPlus => (Alt, Plus),
            Kind::AltStar => (Alt, Star),
            Kind::PlusAlt => (Plus, Alt),
            Kind::StarAlt => (Star, Alt),
            Kind::PlusStar => (Plus, Star),
            Kind::StarPlus => (Star, Plus),
        }
    }

    pub fn from_ops(first: Op, second: Op) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.ops() == (first, second))
    }

    pub fn descriptor(self) -> TypeDescriptor {
        let (a, b) = self.ops();
        TypeDescriptor::homogeneous(vec![a, b])
    }

    pub fn symbol(self) -> String {
        let (a, b) = self.ops();
        format!("{}{}", a.symbol(), b.symbol())
    }

    /// Parses `"∘|"`, `".|"` and similar two-operator spellings.
    pub fn parse(s: &str) -> Option<Kind> {
        let mut it = s.chars().map(Op::from_symbol);
        match (it.next(), it.next(), it.next()) {
            (Some(Some(a)), Some(Some(b)), None) => Kind::from_ops(a, b),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

/// Classifies a normalized expression by the operators on each tree level.
pub fn classify(ast: &Regex) -> TypeDescriptor {
    let mut level: Vec<&Regex> = vec![ast];
    let mut ops = Vec::new();
    let mut homogeneous = true;
    loop {
        let mut level_op: Option<Op> = None;
        let mut next = Vec::new();
        for node in &level {
            if let Some(op) = node.op() {
                match level_op {
                    None => level_op = Some(op),
                    Some(o) if o != op => homogeneous = false,
                    _ => {}
                }
                next.extend(node.children());
            }
        }
        match level_op {
            None => break,
            Some(op) => ops.push(op),
        }
        level = next;
    }
    if !homogeneous {
        ops = longest_path_ops(ast);
    }
    TypeDescriptor {
        homogeneous,
        depth: ops.len(),
        ops,
    }
}

fn longest_path_ops(ast: &Regex) -> Vec<Op> {
    match ast.op() {
        None => Vec::new(),
        Some(op) => {
            let mut best = Vec::new();
            for c in ast.children() {
                let p = longest_path_ops(c);
                if p.len() > best.len() {
                    best = p;
                }
            }
            let mut out = vec![op];
            out.extend(best);
            out
        }
    }
}
