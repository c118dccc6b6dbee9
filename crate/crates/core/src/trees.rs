//! Plane-tree models for the factorization counts.
//!
//! The trees here are properly two-coloured (black and white) plane trees in
//! which every inner black vertex has total degree m and exactly one or two
//! inner neighbours, and every inner white vertex has total degree m*j for
//! some j >= 1 with exactly j - 1 inner black neighbours of inner degree 1.
//! A tree has type alpha when its inner white vertices have degrees m*alpha_i.
//!
//! Planted trees are rooted at a black leaf. Balanced trees are planted at
//! one of the m black leaves left over by the unique non-crossing pairing of
//! white leaves with black leaves around the contour; their count per type
//! matches |C_alpha| * G_alpha(m) / (n-1)!, which ties the tree model to the
//! arbitrary-factor counts. Pseudo trees replace the root black leaf of a
//! planted tree by an inner black vertex carrying m - 1 new white leaves and
//! are rooted at one of those; their counts are the coefficients of the
//! branch series composed with the list series.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

/// A rooted plane tree stored as an arena. Node 0 is the root; children are
/// in clockwise order. A vertex is a leaf exactly when its total degree
/// (children plus parent edge) is 1, so the root itself is usually a leaf.
#[derive(Debug, Clone)]
pub struct PlaneTree {
    colors: Vec<Color>,
    children: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
}

impl PlaneTree {
    fn new() -> Self {
        PlaneTree {
            colors: Vec::new(),
            children: Vec::new(),
            parent: Vec::new(),
        }
    }

    fn add(&mut self, color: Color, parent: Option<usize>) -> usize {
        let id = self.colors.len();
        self.colors.push(color);
        self.children.push(Vec::new());
        self.parent.push(parent);
        if let Some(p) = parent {
            self.children[p].push(id);
        }
        id
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        if let Some(p) = self.parent[v] {
            out.push(p);
        }
        out.extend_from_slice(&self.children[v]);
        out
    }

    /// Number of neighbours that are themselves inner vertices.
    pub fn inner_degree(&self, v: usize) -> usize {
        self.neighbours(v)
            .into_iter()
            .filter(|&w| !self.is_leaf(w))
            .count()
    }

    /// Leaves in clockwise contour order, starting from the root side.
    pub fn leaf_contour(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        while let Some(v) = stack.pop() {
            if self.is_leaf(v) {
                out.push(v);
            }
            for &c in self.children[v].iter().rev() {
                stack.push(c);
            }
        }
        out
    }
}

/// Everything the structural validator recounts from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub nodes: usize,
    pub inner_black: usize,
    pub inner_white: usize,
    pub black_leaves: usize,
    pub white_leaves: usize,
    /// Inner white degrees divided by m, sorted descending.
    pub white_weights: Vec<u32>,
    /// Inner black vertices with exactly one inner neighbour, then with two.
    pub inner_black_by_inner_degree: [usize; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    Cw,
    #[default]
    Ccw,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Cw => "cw",
            Orientation::Ccw => "ccw",
        })
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cw" => Ok(Orientation::Cw),
            "ccw" => Ok(Orientation::Ccw),
            other => Err(Error::usage(format!(
                "unknown orientation {other:?}, expected cw or ccw"
            ))),
        }
    }
}

/// The contour pairing of white leaves with black leaves. Pairs are
/// (white, black) node ids; the unpaired leaves are all black.
#[derive(Debug, Clone)]
pub struct LeafMatching {
    pub pairs: Vec<(usize, usize)>,
    pub unpaired: Vec<usize>,
}

type WeightBag = BTreeMap<u32, u32>;

#[derive(Clone)]
enum Slot {
    BlackLeaf,
    Terminal,
    Continuing { position: u32, subtree: Box<WhiteNode> },
}

#[derive(Clone)]
struct WhiteNode {
    slots: Vec<Slot>,
}

fn bag_of(alpha: &Partition) -> WeightBag {
    let mut bag = WeightBag::new();
    for &part in alpha.parts() {
        *bag.entry(part).or_insert(0) += 1;
    }
    bag
}

fn take_one(bag: &mut WeightBag, key: u32) {
    match bag.get_mut(&key) {
        Some(1) => {
            bag.remove(&key);
        }
        Some(c) => *c -= 1,
        None => unreachable!("weight {key} not available"),
    }
}

/// Every way to fill an ordered run of child slots of a white vertex:
/// black leaves, terminal inner black vertices (all their far children are
/// white leaves), or continuing inner black vertices carrying a white
/// subtree at one of m - 1 positions. Returns each filling together with
/// the weights it did not consume.
fn fill_slots(
    m: u32,
    slots_left: u32,
    terminals_left: u32,
    avail: &WeightBag,
) -> Vec<(Vec<Slot>, WeightBag)> {
    if terminals_left > slots_left {
        return Vec::new();
    }
    if slots_left == 0 {
        return vec![(Vec::new(), avail.clone())];
    }
    let mut out = Vec::new();
    for (tail, leftover) in fill_slots(m, slots_left - 1, terminals_left, avail) {
        let mut slots = vec![Slot::BlackLeaf];
        slots.extend(tail);
        out.push((slots, leftover));
    }
    if terminals_left > 0 {
        for (tail, leftover) in fill_slots(m, slots_left - 1, terminals_left - 1, avail) {
            let mut slots = vec![Slot::Terminal];
            slots.extend(tail);
            out.push((slots, leftover));
        }
    }
    for weight in avail.keys().copied().collect::<Vec<_>>() {
        let mut rest = avail.clone();
        take_one(&mut rest, weight);
        for (subtree, consumed) in white_subtrees(m, weight, &rest) {
            for (tail, leftover) in fill_slots(m, slots_left - 1, terminals_left, &consumed) {
                for position in 0..m - 1 {
                    let mut slots = vec![Slot::Continuing {
                        position,
                        subtree: Box::new(subtree.clone()),
                    }];
                    slots.extend(tail.iter().cloned());
                    out.push((slots, leftover.clone()));
                }
            }
        }
    }
    out
}

/// Subtrees hanging from a white inner vertex of the given weight, using any
/// sub-multiset of `avail` for the white vertices below it.
fn white_subtrees(m: u32, weight: u32, avail: &WeightBag) -> Vec<(WhiteNode, WeightBag)> {
    fill_slots(m, m * weight - 1, weight - 1, avail)
        .into_iter()
        .map(|(slots, leftover)| (WhiteNode { slots }, leftover))
        .collect()
}

fn attach_white(tree: &mut PlaneTree, parent: usize, node: &WhiteNode, m: u32) {
    let w = tree.add(Color::White, Some(parent));
    for slot in &node.slots {
        match slot {
            Slot::BlackLeaf => {
                tree.add(Color::Black, Some(w));
            }
            Slot::Terminal => {
                let b = tree.add(Color::Black, Some(w));
                for _ in 0..m - 1 {
                    tree.add(Color::White, Some(b));
                }
            }
            Slot::Continuing { position, subtree } => {
                let b = tree.add(Color::Black, Some(w));
                for p in 0..m - 1 {
                    if p == *position {
                        attach_white(tree, b, subtree, m);
                    } else {
                        tree.add(Color::White, Some(b));
                    }
                }
            }
        }
    }
}

/// Size ceiling for tree enumeration. The tree count grows factorially, so
/// enumeration refuses inputs past the ceiling instead of grinding.
#[derive(Debug, Clone, Copy)]
pub struct TreeBudget {
    pub max_n: u32,
    pub max_m: u32,
}

impl Default for TreeBudget {
    fn default() -> Self {
        TreeBudget { max_n: 4, max_m: 3 }
    }
}

fn check_inputs(alpha: &Partition, m: u32, budget: &TreeBudget) -> Result<()> {
    if alpha.is_empty() {
        return Err(Error::usage("tree enumeration needs a nonempty partition"));
    }
    if m < 2 {
        return Err(Error::usage("tree enumeration needs m >= 2"));
    }
    if alpha.n() > budget.max_n || m > budget.max_m {
        return Err(Error::BudgetExceeded {
            what: "tree enumeration".into(),
            cost: format!("n = {}, m = {}", alpha.n(), m),
            budget: format!("n <= {}, m <= {}", budget.max_n, budget.max_m),
        });
    }
    Ok(())
}

/// All plane trees of the given type rooted at a black leaf.
pub fn enumerate_planted(alpha: &Partition, m: u32, budget: &TreeBudget) -> Result<Vec<PlaneTree>> {
    check_inputs(alpha, m, budget)?;
    let bag = bag_of(alpha);
    let mut out = Vec::new();
    for trunk_weight in bag.keys().copied().collect::<Vec<_>>() {
        let mut rest = bag.clone();
        take_one(&mut rest, trunk_weight);
        for (trunk, leftover) in white_subtrees(m, trunk_weight, &rest) {
            if leftover.is_empty() {
                let mut tree = PlaneTree::new();
                let root = tree.add(Color::Black, None);
                attach_white(&mut tree, root, &trunk, m);
                out.push(tree);
            }
        }
    }
    Ok(out)
}

/// All pseudo trees of the given type: an inner black vertex stands where a
/// planted tree's root was, carrying m - 1 new white leaves, and the tree is
/// rooted at one of those.
pub fn enumerate_pseudo(alpha: &Partition, m: u32, budget: &TreeBudget) -> Result<Vec<PlaneTree>> {
    check_inputs(alpha, m, budget)?;
    let bag = bag_of(alpha);
    let mut out = Vec::new();
    for trunk_weight in bag.keys().copied().collect::<Vec<_>>() {
        let mut rest = bag.clone();
        take_one(&mut rest, trunk_weight);
        for (trunk, leftover) in white_subtrees(m, trunk_weight, &rest) {
            if !leftover.is_empty() {
                continue;
            }
            for position in 0..m - 1 {
                let mut tree = PlaneTree::new();
                let root = tree.add(Color::White, None);
                let base = tree.add(Color::Black, Some(root));
                for p in 0..m - 1 {
                    if p == position {
                        attach_white(&mut tree, base, &trunk, m);
                    } else {
                        tree.add(Color::White, Some(base));
                    }
                }
                out.push(tree);
            }
        }
    }
    Ok(out)
}

fn collect_stats(tree: &PlaneTree, m: u32) -> TreeStats {
    assert!(!tree.is_empty(), "empty tree");
    let mut reachable = 0usize;
    let mut stack = vec![tree.root()];
    while let Some(v) = stack.pop() {
        reachable += 1;
        for &c in tree.children(v) {
            assert_eq!(tree.parent(c), Some(v), "parent link mismatch at {c}");
            assert_ne!(tree.color(c), tree.color(v), "adjacent vertices share a colour");
            stack.push(c);
        }
    }
    assert_eq!(reachable, tree.len(), "arena contains unreachable nodes");

    let mut stats = TreeStats {
        nodes: tree.len(),
        inner_black: 0,
        inner_white: 0,
        black_leaves: 0,
        white_leaves: 0,
        white_weights: Vec::new(),
        inner_black_by_inner_degree: [0, 0],
    };
    for v in 0..tree.len() {
        match (tree.color(v), tree.is_leaf(v)) {
            (Color::Black, true) => stats.black_leaves += 1,
            (Color::White, true) => stats.white_leaves += 1,
            (Color::Black, false) => {
                stats.inner_black += 1;
                assert_eq!(tree.degree(v), m as usize, "inner black degree at {v}");
                let inner = tree.inner_degree(v);
                assert!(
                    inner == 1 || inner == 2,
                    "inner black vertex {v} has inner degree {inner}"
                );
                stats.inner_black_by_inner_degree[inner - 1] += 1;
            }
            (Color::White, false) => {
                stats.inner_white += 1;
                let d = tree.degree(v);
                assert_eq!(d % m as usize, 0, "inner white degree {d} not a multiple of m");
                stats.white_weights.push((d / m as usize) as u32);
            }
        }
    }
    stats.white_weights.sort_unstable_by(|a, b| b.cmp(a));
    stats
}

fn inner_degree_one_black_neighbours(tree: &PlaneTree, w: usize) -> usize {
    tree.neighbours(w)
        .into_iter()
        .filter(|&b| !tree.is_leaf(b) && tree.inner_degree(b) == 1)
        .count()
}

/// Recomputes every structural invariant of a planted tree of the claimed
/// type, panicking on any violation. The counts this returns have all been
/// checked against the type.
pub fn validate_planted(tree: &PlaneTree, alpha: &Partition, m: u32) -> TreeStats {
    let stats = collect_stats(tree, m);
    let root = tree.root();
    assert_eq!(tree.color(root), Color::Black, "root must be black");
    assert!(tree.is_leaf(root), "root must be a leaf");

    for v in 0..tree.len() {
        if tree.color(v) == Color::White && !tree.is_leaf(v) {
            let weight = tree.degree(v) / m as usize;
            assert_eq!(
                inner_degree_one_black_neighbours(tree, v),
                weight - 1,
                "white vertex {v} of weight {weight}"
            );
        }
    }

    let n = alpha.n() as usize;
    let l = alpha.len() as usize;
    let c = (m as usize - 1) * n - l + 2;
    assert_eq!(stats.inner_black, n - 1);
    assert_eq!(stats.inner_white, l);
    assert_eq!(stats.black_leaves, c);
    assert_eq!(stats.white_leaves, c - m as usize);
    assert_eq!(stats.white_weights, alpha.parts());
    assert_eq!(stats.inner_black_by_inner_degree, [n - l, l - 1]);
    stats
}

/// Same as `validate_planted` for pseudo trees. The white vertex adjacent to
/// the base black vertex sees one extra inner black neighbour of inner
/// degree 1, so its count is its weight rather than weight - 1.
pub fn validate_pseudo(tree: &PlaneTree, alpha: &Partition, m: u32) -> TreeStats {
    let stats = collect_stats(tree, m);
    let root = tree.root();
    assert_eq!(tree.color(root), Color::White, "root must be white");
    assert!(tree.is_leaf(root), "root must be a leaf");

    let base = *tree
        .children(root)
        .first()
        .expect("root must have the base vertex below it");
    assert_eq!(tree.color(base), Color::Black);
    assert_eq!(tree.degree(base), m as usize);
    assert_eq!(tree.inner_degree(base), 1, "base vertex joins one inner white");
    let trunk = *tree
        .children(base)
        .iter()
        .find(|&&v| !tree.is_leaf(v))
        .expect("base vertex must join an inner white vertex");

    for v in 0..tree.len() {
        if tree.color(v) == Color::White && !tree.is_leaf(v) {
            let weight = tree.degree(v) / m as usize;
            let expected = if v == trunk { weight } else { weight - 1 };
            assert_eq!(
                inner_degree_one_black_neighbours(tree, v),
                expected,
                "white vertex {v} of weight {weight}"
            );
        }
    }

    let n = alpha.n() as usize;
    let l = alpha.len() as usize;
    let c = (m as usize - 1) * n - l + 2;
    assert_eq!(stats.inner_black, n);
    assert_eq!(stats.inner_white, l);
    assert_eq!(stats.black_leaves, c - 1);
    assert_eq!(stats.white_leaves, c - 1);
    assert_eq!(stats.white_weights, alpha.parts());
    assert_eq!(stats.inner_black_by_inner_degree, [n - l + 1, l - 1]);
    stats
}

/// Pairs white leaves with black leaves by repeatedly matching a white leaf
/// with the black leaf that follows it around the contour, cyclically, until
/// no white leaf is left. The result is the unique non-crossing pairing that
/// leaves only black leaves unmatched; both facts are asserted.
pub fn match_leaves(tree: &PlaneTree, orientation: Orientation) -> LeafMatching {
    let mut contour = tree.leaf_contour();
    if orientation == Orientation::Ccw {
        contour.reverse();
    }
    let position: BTreeMap<usize, usize> =
        contour.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut seq = contour.clone();
    let mut pairs = Vec::new();
    loop {
        let k = seq.len();
        let found = (0..k).find(|&i| {
            tree.color(seq[i]) == Color::White && tree.color(seq[(i + 1) % k]) == Color::Black
        });
        let Some(i) = found else { break };
        let j = (i + 1) % k;
        pairs.push((seq[i], seq[j]));
        if i < j {
            seq.remove(j);
            seq.remove(i);
        } else {
            seq.remove(i);
            seq.remove(j);
        }
    }
    assert!(
        seq.iter().all(|&v| tree.color(v) == Color::Black),
        "unpaired leaves must all be black"
    );

    let matching = LeafMatching {
        pairs,
        unpaired: seq,
    };
    assert_non_crossing(tree, &matching, &contour, &position);
    matching
}

/// Checks the pairing is non-crossing by cutting the cycle at an unpaired
/// leaf and running a parenthesis scan: every black leaf either closes the
/// white leaf on top of the stack or is unpaired with an empty prefix.
fn assert_non_crossing(
    tree: &PlaneTree,
    matching: &LeafMatching,
    contour: &[usize],
    position: &BTreeMap<usize, usize>,
) {
    if matching.unpaired.is_empty() {
        return;
    }
    let partner: BTreeMap<usize, usize> = matching
        .pairs
        .iter()
        .flat_map(|&(w, b)| [(w, b), (b, w)])
        .collect();
    let cut = position[&matching.unpaired[0]];
    let mut stack: Vec<usize> = Vec::new();
    for offset in 0..contour.len() {
        let v = contour[(cut + offset) % contour.len()];
        match tree.color(v) {
            Color::White => stack.push(v),
            Color::Black => match partner.get(&v) {
                Some(&w) => {
                    assert_eq!(stack.pop(), Some(w), "pairing crosses at leaf {v}");
                }
                None => assert!(
                    stack.is_empty(),
                    "unpaired black leaf {v} sits inside a pair"
                ),
            },
        }
    }
    assert!(stack.is_empty(), "white leaves left unpaired");
}

/// A planted tree is balanced when its root is one of the m contour leaves
/// left unpaired by the matching.
pub fn is_balanced(tree: &PlaneTree, m: u32, orientation: Orientation) -> bool {
    let matching = match_leaves(tree, orientation);
    assert_eq!(matching.unpaired.len(), m as usize);
    matching.unpaired.contains(&tree.root())
}

pub fn count_planted(alpha: &Partition, m: u32, budget: &TreeBudget) -> Result<BigInt> {
    let trees = enumerate_planted(alpha, m, budget)?;
    for tree in &trees {
        validate_planted(tree, alpha, m);
    }
    Ok(BigInt::from(trees.len()))
}

pub fn count_balanced(
    alpha: &Partition,
    m: u32,
    orientation: Orientation,
    budget: &TreeBudget,
) -> Result<BigInt> {
    let trees = enumerate_planted(alpha, m, budget)?;
    let mut balanced = 0usize;
    for tree in &trees {
        validate_planted(tree, alpha, m);
        if is_balanced(tree, m, orientation) {
            balanced += 1;
        }
    }
    Ok(BigInt::from(balanced))
}

pub fn count_pseudo(alpha: &Partition, m: u32, budget: &TreeBudget) -> Result<BigInt> {
    let trees = enumerate_pseudo(alpha, m, budget)?;
    for tree in &trees {
        validate_pseudo(tree, alpha, m);
    }
    Ok(BigInt::from(trees.len()))
}

/// Pseudo-tree counts for every type of total weight n, in canonical
/// partition order.
pub fn pseudo_census(n: u32, m: u32, budget: &TreeBudget) -> Result<Vec<(Partition, BigInt)>> {
    crate::partition::partitions_of(n)
        .into_iter()
        .map(|alpha| {
            let count = count_pseudo(&alpha, m, budget)?;
            Ok((alpha, count))
        })
        .collect()
}
